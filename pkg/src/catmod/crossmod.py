"""Actions of c-groups and crossed modules up to congruence.

A c-crossed module is a boundary morphism between two c-groups together
with an action of the base on the top and an explicit *weak special*
congruence on the top carrier.  The connected/strict/special predicate
suite lives here, including the unique-lift operation that the
categorical-group reconstruction relies on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .cgroup import (
    CGroup,
    CGroupMorphism,
    CSubset,
    Pair,
    compose_morphisms,
    induced_cgroup,
    is_connected,
    is_normal,
    is_perfect,
    special_closure,
    validate_cgroup,
    validate_morphism,
)
from .errors import (
    MalformedTable,
    NoLift,
    NonUniqueLift,
    NotPerfectOrNormal,
    NotSpecialPair,
    SourceTargetMismatch,
)
from .report import ValidationReport


@dataclass
class CAction:
    """A left action table of ``actor`` on ``acted``, valid up to rel."""

    actor: CGroup
    acted: CGroup
    dot: dict[Pair, str]

    def __post_init__(self) -> None:
        acted = set(self.acted.elements)
        for b in self.actor.elements:
            for a in self.acted.elements:
                if (b, a) not in self.dot:
                    raise MalformedTable(f"action missing entry ({b!r},{a!r})")
                if self.dot[b, a] not in acted:
                    raise MalformedTable(f"action value at ({b!r},{a!r}) leaves the carrier")


def trivial_action(actor: CGroup, acted: CGroup) -> CAction:
    return CAction(actor, acted, {(b, a): a for b in actor.elements for a in acted.elements})


def validate_action(act: CAction) -> ValidationReport:
    report = ValidationReport("action")
    b_g, a_g, dot = act.actor, act.acted, act.dot
    add = a_g.add

    ok, witness = True, ""
    for b in b_g.elements:
        for a, a1 in product(a_g.elements, repeat=2):
            if not a_g.related(dot[b, add[a, a1]], add[dot[b, a], dot[b, a1]]):
                ok, witness = False, f"b={b} a={a} a1={a1}"
                break
        if not ok:
            break
    report.add("distributes-over-sum", ok, witness)

    ok, witness = True, ""
    for b, b1 in product(b_g.elements, repeat=2):
        for a in a_g.elements:
            if not a_g.related(dot[b_g.add[b, b1], a], dot[b, dot[b1, a]]):
                ok, witness = False, f"b={b} b1={b1} a={a}"
                break
        if not ok:
            break
    report.add("compatible-with-actor-sum", ok, witness)

    ok, witness = True, ""
    for a in a_g.elements:
        if not a_g.related(dot[b_g.zero, a], a):
            ok, witness = False, f"a={a}"
            break
    report.add("zero-acts-trivially", ok, witness)

    ok, witness = True, ""
    for blk_b in b_g.rel:
        for b, b1 in product(blk_b, repeat=2):
            for blk_a in a_g.rel:
                for a, a1 in product(blk_a, repeat=2):
                    if not a_g.related(dot[b, a], dot[b1, a1]):
                        ok, witness = False, f"b={b} b1={b1} a={a} a1={a1}"
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            break
    report.add("congruence-compatible", ok, witness)
    return report


@dataclass
class CCrossedModule:
    """Boundary ``g -> h`` with an action of ``h`` on ``g`` and a weak
    special congruence ``weak_special`` over the top carrier.

    ``weak_special`` is explicit input data: the categorical-group
    constructions populate it from their special congruence, abstract
    instances must supply it.
    """

    g: CGroup
    h: CGroup
    boundary: CGroupMorphism
    action: CAction
    weak_special: frozenset[Pair]
    name: str = ""
    _wrep: dict[str, str] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not (self.boundary.source.same_structure(self.g) and self.boundary.target.same_structure(self.h)):
            raise SourceTargetMismatch("boundary endpoints do not match the module")
        if not (self.action.actor.same_structure(self.h) and self.action.acted.same_structure(self.g)):
            raise SourceTargetMismatch("action endpoints do not match the module")
        self.weak_special = frozenset(self.weak_special)
        carrier = set(self.g.elements)
        for a, b in self.weak_special:
            if a not in carrier or b not in carrier:
                raise MalformedTable(f"weak_special pair ({a!r},{b!r}) outside carrier")
        parent = {x: x for x in self.g.elements}

        def find(x: str) -> str:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.weak_special:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        self._wrep = {x: find(x) for x in self.g.elements}

    def w_related(self, a: str, b: str) -> bool:
        return self._wrep[a] == self._wrep[b]

    def w_rep(self, a: str) -> str:
        return self._wrep[a]

    def w_class(self, a: str) -> tuple[str, ...]:
        r = self._wrep[a]
        return tuple(x for x in self.g.elements if self._wrep[x] == r)

    def w_reps(self) -> tuple[str, ...]:
        return tuple(sorted(set(self._wrep.values())))


def validate_crossed_module(x: CCrossedModule) -> ValidationReport:
    report = ValidationReport(x.name or "crossed module")
    for label, sub in (
        ("top-cgroup", validate_cgroup(x.g)),
        ("base-cgroup", validate_cgroup(x.h)),
        ("boundary-morphism", validate_morphism(x.boundary)),
        ("action", validate_action(x.action)),
    ):
        first = sub.failures()[0] if not sub.ok else None
        report.add(label, sub.ok, str(first) if first else "")

    bd, dot = x.boundary.map, x.action.dot
    g, h = x.g, x.h

    ok, witness = True, ""
    for b in h.elements:
        for a in g.elements:
            if bd[dot[b, a]] != h.add[b, h.add[bd[a], h.neg[b]]]:
                ok, witness = False, f"b={b} a={a}"
                break
        if not ok:
            break
    report.add("boundary-equivariance-exact", ok, witness)

    ok, witness = True, ""
    for a, a1 in product(g.elements, repeat=2):
        if not g.related(dot[bd[a], a1], g.add[a, g.add[a1, g.neg[a]]]):
            ok, witness = False, f"a={a} a1={a1}"
            break
    report.add("peiffer-up-to-rel", ok, witness)

    w = x.weak_special
    rel_pairs = g.rel_pairs()
    bad = next((p for p in w if p not in rel_pairs), None)
    report.add("ws-within-rel", bad is None, f"pair {bad}" if bad else "")
    bad = next((c for c in g.elements if (c, c) not in w), None)
    report.add("ws-reflexive", bad is None, f"element {bad}" if bad else "")
    bad = next(((a, b) for a, b in w if (b, a) not in w), None)
    report.add("ws-symmetric", bad is None, f"pair {bad}" if bad else "")
    ok, witness = True, ""
    right_of: dict[str, list[str]] = {}
    for a, b in w:
        right_of.setdefault(a, []).append(b)
    for a, b in w:
        for c in right_of.get(b, ()):
            if (a, c) not in w:
                ok, witness = False, f"({a},{b}) and ({b},{c})"
                break
        if not ok:
            break
    report.add("ws-transitive", ok, witness)

    g_special = g.special if g.special is not None else special_closure(g)
    bad = next((p for p in g_special if p not in w), None)
    report.add("ws-contains-special", bad is None, f"pair {bad}" if bad else "")

    h_special = h.special if h.special is not None else special_closure(h)
    bad = next(((a, b) for a, b in w if (bd[a], bd[b]) not in h_special), None)
    report.add("ws-boundary-special", bad is None, f"pair {bad}" if bad else "")

    ok, witness = True, ""
    for (a, b), (c, d) in product(w, repeat=2):
        if (g.add[a, c], g.add[b, d]) not in w:
            ok, witness = False, f"({a},{b})+({c},{d})"
            break
    report.add("ws-sum-closed", ok, witness)

    ok, witness = True, ""
    for a, b in w:
        for r in h.elements:
            if (dot[r, a], dot[r, b]) not in w:
                ok, witness = False, f"r={r} pair ({a},{b})"
                break
        if not ok:
            break
    report.add("ws-action-compatible", ok, witness)

    return report


def is_strict(x: CCrossedModule) -> bool:
    """Peiffer equation holds on the nose, not just up to rel."""
    bd, dot, g = x.boundary.map, x.action.dot, x.g
    for a, a1 in product(g.elements, repeat=2):
        if dot[bd[a], a1] != g.add[a, g.add[a1, g.neg[a]]]:
            return False
    return True


def _h_special(x: CCrossedModule) -> frozenset[Pair]:
    return x.h.special if x.h.special is not None else special_closure(x.h)


def is_special(x: CCrossedModule) -> bool:
    """Congruent boundary values lift, and special ones lift uniquely.

    (a) whenever ``boundary(c)`` is congruent to ``r`` there is some
    ``c1`` congruent to ``c`` with ``boundary(c1) = r`` exactly;
    (b) whenever the pair is special, exactly one ``c1`` satisfies
    ``boundary(c1) = r`` together with a weak special congruence to
    ``c``.
    """
    bd, g, h = x.boundary.map, x.g, x.h
    h_special = _h_special(x)
    for c in g.elements:
        for r in h.elements:
            if h.related(bd[c], r):
                if not any(g.related(c1, c) and bd[c1] == r for c1 in g.elements):
                    return False
            if (bd[c], r) in h_special:
                hits = [c1 for c1 in g.elements if bd[c1] == r and x.w_related(c1, c)]
                if len(hits) != 1:
                    return False
    return True


def special_lift(x: CCrossedModule, c: str, r: str) -> str:
    """The unique element weakly special congruent to ``c`` with boundary ``r``."""
    bd = x.boundary.map
    if (bd[c], r) not in _h_special(x):
        raise NotSpecialPair(f"({bd[c]},{r}) is not a special pair in the base")
    hits = [c1 for c1 in x.g.elements if bd[c1] == r and x.w_related(c1, c)]
    if not hits:
        raise NoLift(f"no lift of {c!r} over {r!r}")
    if len(hits) > 1:
        raise NonUniqueLift(f"lifts of {c!r} over {r!r}: {hits}")
    return hits[0]


def is_cssc(x: CCrossedModule) -> bool:
    return is_connected(x.g) and is_strict(x) and is_special(x)


def relational_weak_special(x: CCrossedModule) -> frozenset[Pair]:
    """Diagnostic: the coarse relation with special boundary pairs.

    This is the largest candidate for ``weak_special`` given the type
    invariants; instances whose supplied relation is finer are exactly
    the ones where the distinction carries information.
    """
    bd = x.boundary.map
    h_special = _h_special(x)
    return frozenset(
        (a, b) for a, b in x.g.rel_pairs() if (bd[a], bd[b]) in h_special
    )


@dataclass
class CrossedModuleMorphism:
    source: CCrossedModule
    target: CCrossedModule
    f: CGroupMorphism
    g: CGroupMorphism
    name: str = ""

    def __post_init__(self) -> None:
        if not (self.f.source.same_structure(self.source.g) and self.f.target.same_structure(self.target.g)):
            raise SourceTargetMismatch("top component endpoints do not match")
        if not (self.g.source.same_structure(self.source.h) and self.g.target.same_structure(self.target.h)):
            raise SourceTargetMismatch("base component endpoints do not match")


def validate_cm_morphism(m: CrossedModuleMorphism) -> ValidationReport:
    report = ValidationReport(m.name or "module morphism")
    for label, sub in (
        ("top-morphism", validate_morphism(m.f)),
        ("base-morphism", validate_morphism(m.g)),
    ):
        first = sub.failures()[0] if not sub.ok else None
        report.add(label, sub.ok, str(first) if first else "")

    src, tgt = m.source, m.target
    ok, witness = True, ""
    for a in src.g.elements:
        if m.g.map[src.boundary.map[a]] != tgt.boundary.map[m.f.map[a]]:
            ok, witness = False, f"a={a}"
            break
    report.add("boundary-square-exact", ok, witness)

    ok, witness = True, ""
    for b in src.h.elements:
        for a in src.g.elements:
            if m.f.map[src.action.dot[b, a]] != tgt.action.dot[m.g.map[b], m.f.map[a]]:
                ok, witness = False, f"b={b} a={a}"
                break
        if not ok:
            break
    report.add("action-square-exact", ok, witness)

    bad = next(
        ((a, b) for a, b in src.weak_special if (m.f.map[a], m.f.map[b]) not in tgt.weak_special),
        None,
    )
    report.add("preserves-weak-special", bad is None, f"pair {bad}" if bad else "")
    return report


def identity_cm(x: CCrossedModule) -> CrossedModuleMorphism:
    return CrossedModuleMorphism(
        x,
        x,
        CGroupMorphism(x.g, x.g, {a: a for a in x.g.elements}),
        CGroupMorphism(x.h, x.h, {b: b for b in x.h.elements}),
        name=f"1_{x.name or 'X'}",
    )


def compose_cm(m2: CrossedModuleMorphism, m1: CrossedModuleMorphism) -> CrossedModuleMorphism:
    return CrossedModuleMorphism(
        m1.source,
        m2.target,
        compose_morphisms(m2.f, m1.f),
        compose_morphisms(m2.g, m1.g),
        name=f"{m2.name}.{m1.name}",
    )


def inclusion_crossed_module(h: CSubset, name: str = "") -> CCrossedModule:
    """The crossed module carried by a perfect normal c-subgroup.

    The boundary is the inclusion; the action of the parent sends
    ``(b, m)`` to the least member in the block of ``b+m-b`` (a genuine
    conjugation need not stay inside the subset elementwise, a
    deterministic congruent choice does).
    """
    if not (is_perfect(h) and is_normal(h)):
        raise NotPerfectOrNormal("subset is not a perfect normal c-subgroup")
    parent = h.parent
    members = set(h.members)
    sub = induced_cgroup(h, name=f"{name or parent.name}|incl")
    dot: dict[Pair, str] = {}
    for b in parent.elements:
        for m in h.members:
            conj = parent.add[parent.add[b, m], parent.neg[b]]
            candidates = [y for y in parent.block(conj) if y in members]
            dot[b, m] = candidates[0]
    boundary = CGroupMorphism(sub, parent, {m: m for m in h.members}, name="incl")
    weak_special = special_closure(sub)
    return CCrossedModule(
        g=sub,
        h=parent,
        boundary=boundary,
        action=CAction(parent, sub, dot),
        weak_special=weak_special,
        name=name or f"incl({parent.name})",
    )
