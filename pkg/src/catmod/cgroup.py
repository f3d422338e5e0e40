"""Finite c-groups: groups whose axioms hold up to a congruence.

A c-group is a finite carrier with a total addition table, a zero, a
negation table, and an equivalence relation ``rel`` such that
associativity, units and inverses hold up to ``rel`` and addition is
congruence-compatible.  The subrelation generated by the axiom
instances (closed under symmetry, transitivity and pairwise sums) is
the *special* part of the congruence; :func:`special_closure` computes
it.

Element identifiers are opaque strings ordered lexicographically, which
fixes canonical representatives (least member of each block) and makes
every derived table deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product

from .errors import (
    ChoiceOutsideFiber,
    ElementOutsideParent,
    InvalidAction,
    MalformedTable,
    NotAGroup,
    SourceTargetMismatch,
)
from .report import ValidationReport

Pair = tuple[str, str]


def _partition_blocks(elements: list[str], rel) -> tuple[tuple[str, ...], ...]:
    blocks = tuple(sorted(tuple(sorted(set(b))) for b in rel))
    seen: dict[str, int] = {}
    for i, blk in enumerate(blocks):
        if not blk:
            raise MalformedTable("rel contains an empty block")
        for x in blk:
            if x in seen:
                raise MalformedTable(f"element {x!r} occurs in two rel blocks")
            seen[x] = i
    missing = [x for x in elements if x not in seen]
    extra = [x for x in seen if x not in set(elements)]
    if missing:
        raise MalformedTable(f"rel does not cover element {missing[0]!r}")
    if extra:
        raise MalformedTable(f"rel mentions unknown element {extra[0]!r}")
    return blocks


@dataclass
class CGroup:
    """A finite group-up-to-congruence.

    ``rel`` is stored as a partition of ``elements``.  ``special`` is
    the congruence generated by the axiom instances; it is ``None``
    until :func:`special_closure` fills it in (or a caller supplies a
    precomputed set, as the categorical-group constructions do).
    """

    elements: list[str]
    add: dict[Pair, str]
    zero: str
    neg: dict[str, str]
    rel: tuple[tuple[str, ...], ...]
    special: frozenset[Pair] | None = None
    name: str = ""
    _rep: dict[str, str] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not self.elements:
            raise MalformedTable("empty carrier")
        self.elements = sorted(self.elements)
        elems = set(self.elements)
        if len(elems) != len(self.elements):
            raise MalformedTable("duplicate element identifiers")
        if self.zero not in elems:
            raise MalformedTable(f"zero {self.zero!r} not in carrier")
        for (a, b), v in self.add.items():
            if a not in elems or b not in elems:
                raise MalformedTable(f"add key ({a!r},{b!r}) outside carrier")
            if v not in elems:
                raise MalformedTable(f"add({a!r},{b!r})={v!r} leaves the carrier")
        for a, b in product(self.elements, repeat=2):
            if (a, b) not in self.add:
                raise MalformedTable(f"add table missing entry ({a!r},{b!r})")
        for a, v in self.neg.items():
            if a not in elems or v not in elems:
                raise MalformedTable(f"neg entry {a!r}->{v!r} outside carrier")
        for a in self.elements:
            if a not in self.neg:
                raise MalformedTable(f"neg table missing entry {a!r}")
        self.rel = _partition_blocks(self.elements, self.rel)
        self._rep = {x: blk[0] for blk in self.rel for x in blk}
        if self.special is not None:
            self.special = frozenset(self.special)
            for a, b in self.special:
                if a not in elems or b not in elems:
                    raise MalformedTable(f"special pair ({a!r},{b!r}) outside carrier")

    def rep(self, a: str) -> str:
        if a not in self._rep:
            raise ElementOutsideParent(f"{a!r} not in carrier of {self.name or 'c-group'}")
        return self._rep[a]

    def related(self, a: str, b: str) -> bool:
        return self.rep(a) == self.rep(b)

    def block(self, a: str) -> tuple[str, ...]:
        r = self.rep(a)
        for blk in self.rel:
            if blk[0] == r:
                return blk
        raise AssertionError("partition invariant broken")

    def rel_pairs(self) -> frozenset[Pair]:
        return frozenset((a, b) for blk in self.rel for a in blk for b in blk)

    def same_structure(self, other: "CGroup") -> bool:
        """Table-level equality, ignoring names and cached closures."""
        return (
            self.elements == other.elements
            and self.add == other.add
            and self.zero == other.zero
            and self.neg == other.neg
            and self.rel == other.rel
        )


def validate_cgroup(g: CGroup) -> ValidationReport:
    """Check the c-group axioms exhaustively, with witnesses."""
    report = ValidationReport(g.name or "cgroup")
    add, neg, zero = g.add, g.neg, g.zero

    ok, witness = True, ""
    for blk in g.rel:
        if not ok:
            break
        for a, a1 in product(blk, repeat=2):
            for b in g.elements:
                if not g.related(add[a, b], add[a1, b]):
                    ok, witness = False, f"a={a} a1={a1} b={b} (left)"
                    break
                if not g.related(add[b, a], add[b, a1]):
                    ok, witness = False, f"a={a} a1={a1} b={b} (right)"
                    break
            if not ok:
                break
    report.add("congruence-compatibility", ok, witness)

    ok, witness = True, ""
    for a, b, c in product(g.elements, repeat=3):
        if not g.related(add[a, add[b, c]], add[add[a, b], c]):
            ok, witness = False, f"a={a} b={b} c={c}"
            break
    report.add("assoc-up-to-rel", ok, witness)

    ok, witness = True, ""
    for a in g.elements:
        if not (g.related(add[a, zero], a) and g.related(add[zero, a], a)):
            ok, witness = False, f"a={a}"
            break
    report.add("unit-up-to-rel", ok, witness)

    ok, witness = True, ""
    for a in g.elements:
        if not (g.related(add[a, neg[a]], zero) and g.related(add[neg[a], a], zero)):
            ok, witness = False, f"a={a}"
            break
    report.add("inverses-up-to-rel", ok, witness)

    if g.special is not None:
        rel_pairs = g.rel_pairs()
        bad = next((p for p in g.special if p not in rel_pairs), None)
        report.add("special-within-rel", bad is None, f"pair {bad}" if bad else "")
        bad = next((x for x in g.elements if (x, x) not in g.special), None)
        report.add("special-reflexive", bad is None, f"element {bad}" if bad else "")
        bad = next(((a, b) for a, b in g.special if (b, a) not in g.special), None)
        report.add("special-symmetric", bad is None, f"pair {bad}" if bad else "")
        ok, witness = True, ""
        right_of: dict[str, list[str]] = {}
        for a, b in g.special:
            right_of.setdefault(a, []).append(b)
        for a, b in g.special:
            for c in right_of.get(b, ()):
                if (a, c) not in g.special:
                    ok, witness = False, f"({a},{b}) and ({b},{c})"
                    break
            if not ok:
                break
        report.add("special-transitive", ok, witness)
        ok, witness = True, ""
        for a, b in g.special:
            for c in g.elements:
                if (add[a, c], add[b, c]) not in g.special:
                    ok, witness = False, f"({a},{b}) summed with ({c},{c})"
                    break
                if (add[c, a], add[c, b]) not in g.special:
                    ok, witness = False, f"({c},{c}) summed with ({a},{b})"
                    break
            if not ok:
                break
        report.add("special-sum-closed", ok, witness)
        ok, witness = True, ""
        for a, b in _axiom_instance_pairs(g):
            if (a, b) not in g.special:
                ok, witness = False, f"axiom instance ({a},{b})"
                break
        report.add("special-contains-axioms", ok, witness)

    return report


def _axiom_instance_pairs(g: CGroup):
    """Yield the generating pairs of the special congruence."""
    add, neg, zero = g.add, g.neg, g.zero
    for a in g.elements:
        yield add[a, zero], a
        yield add[zero, a], a
        yield add[a, neg[a]], zero
        yield add[neg[a], a], zero
        for b in g.elements:
            for c in g.elements:
                yield add[a, add[b, c]], add[add[a, b], c]


def special_closure(g: CGroup) -> frozenset[Pair]:
    """Least congruence containing all axiom-instance pairs.

    Worklist fixpoint: every merge of two classes re-enqueues the sums
    of the merged witnesses with every carrier element, so the result
    is closed under pairwise sums, symmetry and transitivity.  The
    result (all ordered pairs inside the closure's blocks, reflexive
    pairs included) is cached on ``g.special``.
    """
    parent = {x: x for x in g.elements}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    queue = deque(_axiom_instance_pairs(g))
    add = g.add
    while queue:
        a, b = queue.popleft()
        ra, rb = find(a), find(b)
        if ra == rb:
            continue
        parent[rb] = ra
        for c in g.elements:
            queue.append((add[a, c], add[b, c]))
            queue.append((add[c, a], add[c, b]))

    classes: dict[str, list[str]] = {}
    for x in g.elements:
        classes.setdefault(find(x), []).append(x)
    out = frozenset((a, b) for blk in classes.values() for a in blk for b in blk)
    g.special = out
    return out


def is_connected(g: CGroup) -> bool:
    return len(g.rel) == 1


@dataclass
class CGroupMorphism:
    source: CGroup
    target: CGroup
    map: dict[str, str]
    name: str = ""

    def __post_init__(self) -> None:
        tgt = set(self.target.elements)
        for a in self.source.elements:
            if a not in self.map:
                raise MalformedTable(f"morphism {self.name!r} missing value at {a!r}")
            if self.map[a] not in tgt:
                raise MalformedTable(
                    f"morphism {self.name!r} value {self.map[a]!r} outside target"
                )

    def __call__(self, a: str) -> str:
        return self.map[a]


def validate_morphism(m: CGroupMorphism) -> ValidationReport:
    """Exact additivity, then rel- and special-pair preservation."""
    report = ValidationReport(m.name or "morphism")
    src, tgt, f = m.source, m.target, m.map

    ok, witness = True, ""
    for a, b in product(src.elements, repeat=2):
        if f[src.add[a, b]] != tgt.add[f[a], f[b]]:
            ok, witness = False, f"({a},{b})"
            break
    report.add("additive", ok, witness)

    ok, witness = True, ""
    for blk in src.rel:
        for a, b in product(blk, repeat=2):
            if not tgt.related(f[a], f[b]):
                ok, witness = False, f"({a},{b})"
                break
        if not ok:
            break
    report.add("preserves-rel", ok, witness)

    src_special = src.special if src.special is not None else special_closure(src)
    tgt_special = tgt.special if tgt.special is not None else special_closure(tgt)
    ok, witness = True, ""
    for a, b in src_special:
        if (f[a], f[b]) not in tgt_special:
            ok, witness = False, f"({a},{b})"
            break
    report.add("preserves-special", ok, witness)
    return report


def identity_morphism(g: CGroup) -> CGroupMorphism:
    return CGroupMorphism(g, g, {a: a for a in g.elements}, name=f"1_{g.name or 'G'}")


def compose_morphisms(m2: CGroupMorphism, m1: CGroupMorphism) -> CGroupMorphism:
    """The composite ``m2 after m1``."""
    if not m2.source.same_structure(m1.target):
        raise SourceTargetMismatch(
            f"cannot compose {m2.name!r} after {m1.name!r}: carriers differ"
        )
    return CGroupMorphism(
        m1.source,
        m2.target,
        {a: m2.map[m1.map[a]] for a in m1.source.elements},
        name=f"{m2.name}.{m1.name}",
    )


def is_c_isomorphism(f: CGroupMorphism, fp: CGroupMorphism) -> bool:
    """True iff the two composites are pointwise congruent to identities."""
    if not (f.source.same_structure(fp.target) and f.target.same_structure(fp.source)):
        raise SourceTargetMismatch("morphisms are not composable in both orders")
    for x in f.target.elements:
        if not f.target.related(f.map[fp.map[x]], x):
            return False
    for y in f.source.elements:
        if not f.source.related(fp.map[f.map[y]], y):
            return False
    return True


@dataclass
class CSubset:
    parent: CGroup
    members: tuple[str, ...]

    def __post_init__(self) -> None:
        carrier = set(self.parent.elements)
        members = sorted(set(self.members))
        for x in members:
            if x not in carrier:
                raise ElementOutsideParent(f"{x!r} not in parent carrier")
        self.members = tuple(members)


def inc(a: str, h: CSubset) -> bool:
    """True iff ``a`` is congruent to some member of ``h``."""
    if a not in set(h.parent.elements):
        raise ElementOutsideParent(f"{a!r} not in parent carrier")
    return any(h.parent.related(a, b) for b in h.members)


def incs(h: CSubset, hp: CSubset) -> bool:
    """True iff every member of ``h`` is congruent into ``hp``."""
    if not h.parent.same_structure(hp.parent):
        raise ElementOutsideParent("subsets live in different parents")
    return all(inc(b, hp) for b in h.members)


def is_normal(h: CSubset) -> bool:
    p = h.parent
    for g in p.elements:
        for m in h.members:
            conj = p.add[p.add[g, m], p.neg[g]]
            if not inc(conj, h):
                return False
    return True


def is_perfect(h: CSubset) -> bool:
    members = set(h.members)
    for x in h.parent.elements:
        if x in members:
            continue
        if any(h.parent.related(x, m) for m in h.members):
            return False
    return True


def c_kernel(m: CGroupMorphism) -> CSubset:
    """Elements whose image is congruent to zero; perfect and normal."""
    members = [a for a in m.source.elements if m.target.related(m.map[a], m.target.zero)]
    sub = CSubset(m.source, tuple(members))
    assert is_perfect(sub) and is_normal(sub)
    return sub


def c_image(m: CGroupMorphism) -> CSubset:
    """Elements of the target congruent to some image point; perfect."""
    members = [
        b
        for b in m.target.elements
        if any(m.target.related(b, m.map[a]) for a in m.source.elements)
    ]
    sub = CSubset(m.target, tuple(members))
    assert is_perfect(sub)
    return sub


def induced_cgroup(h: CSubset, name: str = "") -> CGroup:
    """Restrict the parent's tables to an exactly closed subset."""
    p = h.parent
    members = set(h.members)
    if p.zero not in members:
        raise ElementOutsideParent("subset does not contain zero")
    add: dict[Pair, str] = {}
    for a, b in product(h.members, repeat=2):
        v = p.add[a, b]
        if v not in members:
            raise ElementOutsideParent(f"subset not closed: {a}+{b}={v}")
        add[a, b] = v
    neg: dict[str, str] = {}
    for a in h.members:
        v = p.neg[a]
        if v not in members:
            raise ElementOutsideParent(f"subset not closed under negation at {a}")
        neg[a] = v
    rel = tuple(
        blk_m
        for blk in p.rel
        if (blk_m := tuple(x for x in blk if x in members))
    )
    return CGroup(list(h.members), add, p.zero, neg, rel, name=name or f"{p.name}|sub")


def from_group(elements: list[str], add: dict[Pair, str], name: str = "") -> CGroup:
    """View an honest finite group as a c-group with the equality relation."""
    elems = sorted(set(elements))
    if len(elems) != len(elements):
        raise NotAGroup("duplicate elements")
    if not elems:
        raise NotAGroup("empty carrier")
    for a, b in product(elems, repeat=2):
        if (a, b) not in add:
            raise NotAGroup(f"addition not total at ({a},{b})")
        if add[a, b] not in set(elems):
            raise NotAGroup(f"not closed at ({a},{b})")
    for a, b, c in product(elems, repeat=3):
        if add[a, add[b, c]] != add[add[a, b], c]:
            raise NotAGroup(f"not associative at ({a},{b},{c})")
    zero = next((e for e in elems if all(add[e, a] == a and add[a, e] == a for a in elems)), None)
    if zero is None:
        raise NotAGroup("no two-sided identity")
    neg: dict[str, str] = {}
    for a in elems:
        inv = next((b for b in elems if add[a, b] == zero and add[b, a] == zero), None)
        if inv is None:
            raise NotAGroup(f"no inverse for {a}")
        neg[a] = inv
    rel = tuple((e,) for e in elems)
    return CGroup(elems, dict(add), zero, neg, rel, name=name)


def pair_id(b_elem: str, a_elem: str) -> str:
    """Element identifier used for pairs in semidirect products."""
    return f"({b_elem},{a_elem})"


def semidirect_product(b: CGroup, a: CGroup, act, name: str = "") -> CGroup:
    """Semidirect sum of ``a`` by ``b`` along an action of ``b`` on ``a``.

    ``act`` must be a valid action (its ``actor``/``acted``/``dot``
    attributes are consulted); addition is
    ``(b1,a1)+(b0,a0) = (b1+b0, a1 + b1.a0)`` and the congruence is the
    product of the two congruences.
    """
    from .crossmod import validate_action

    if not (act.actor.same_structure(b) and act.acted.same_structure(a)):
        raise InvalidAction("action endpoints do not match the given c-groups")
    rep = validate_action(act)
    if not rep.ok:
        raise InvalidAction(str(rep.failures()[0]))
    dot = act.dot

    elements = [pair_id(x, y) for x in b.elements for y in a.elements]
    of = {pair_id(x, y): (x, y) for x in b.elements for y in a.elements}
    add: dict[Pair, str] = {}
    for p1, (b1, a1) in of.items():
        for p0, (b0, a0) in of.items():
            add[p1, p0] = pair_id(b.add[b1, b0], a.add[a1, dot[b1, a0]])
    zero = pair_id(b.zero, a.zero)
    neg = {
        p: pair_id(b.neg[x], dot[b.neg[x], a.neg[y]]) for p, (x, y) in of.items()
    }
    rel = tuple(
        tuple(pair_id(x, y) for x in blk_b for y in blk_a)
        for blk_b in b.rel
        for blk_a in a.rel
    )
    return CGroup(elements, add, zero, neg, rel, name=name or f"{b.name}x{a.name}")


def semidirect_projection(sd: CGroup, b: CGroup) -> CGroupMorphism:
    """First-coordinate projection of a semidirect product."""
    mapping = {}
    for p in sd.elements:
        if not (p.startswith("(") and p.endswith(")") and "," in p):
            raise MalformedTable(f"{p!r} is not a pair identifier")
        mapping[p] = p[1:-1].split(",", 1)[0]
    return CGroupMorphism(sd, b, mapping, name=f"{sd.name}->first")


def lift_from_surjection(
    q_map: dict[str, str],
    q_group: CGroup,
    section: dict[str, str],
    choice: dict[Pair, str],
    name: str = "",
) -> CGroup:
    """Pull a group structure back along a surjection, up to its fibers.

    ``q_map`` sends the new carrier onto ``q_group``; ``section`` picks
    one carrier point per group element; ``choice`` picks, for every
    carrier pair, an element of the fiber over the sum of their images.
    The congruence is the fiber partition, so the axioms hold up to it
    by construction.
    """
    carrier = sorted(q_map)
    if not carrier:
        raise MalformedTable("empty carrier")
    qelems = set(q_group.elements)
    for x, t in q_map.items():
        if t not in qelems:
            raise ChoiceOutsideFiber(f"q({x})={t!r} outside the group")
    image = set(q_map.values())
    missing = qelems - image
    if missing:
        raise ChoiceOutsideFiber(f"q not surjective: {sorted(missing)[0]!r} not hit")
    for t in q_group.elements:
        if t not in section or section[t] not in q_map:
            raise ChoiceOutsideFiber(f"section missing or outside carrier at {t!r}")
        if q_map[section[t]] != t:
            raise ChoiceOutsideFiber(f"section at {t!r} lands in the wrong fiber")
    add: dict[Pair, str] = {}
    for x, y in product(carrier, repeat=2):
        if (x, y) not in choice:
            raise ChoiceOutsideFiber(f"choice table missing entry ({x},{y})")
        v = choice[x, y]
        if v not in q_map or q_map[v] != q_group.add[q_map[x], q_map[y]]:
            raise ChoiceOutsideFiber(f"choice at ({x},{y}) leaves the fiber")
        add[x, y] = v
    zero = section[q_group.zero]
    neg = {x: section[q_group.neg[q_map[x]]] for x in carrier}
    fibers: dict[str, list[str]] = {}
    for x in carrier:
        fibers.setdefault(q_map[x], []).append(x)
    rel = tuple(tuple(v) for v in fibers.values())
    return CGroup(carrier, add, zero, neg, rel, name=name or "lifted")
