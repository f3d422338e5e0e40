"""Finite categorical groups: validation, special isomorphisms, Star-zero.

A categorical group here is a finite groupoid with a monoidal addition
that is group-like up to coherent isomorphism, all given by explicit
tables.  Everything is exhaustively checkable.  The derived c-groups
(object set, arrows based at zero, kernels of the endpoint maps) are
what the crossed-module side of the toolkit consumes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .cgroup import CGroup, CGroupMorphism, CSubset, Pair, special_closure
from .crossmod import CAction, CCrossedModule, validate_action, validate_crossed_module
from .errors import MalformedTable, NotAGroupoid, TooManyArrows
from .report import ValidationReport

Triple = tuple[str, str, str]


@dataclass
class CatGroup:
    """Finite categorical group given by explicit structure tables.

    ``comp`` is keyed ``(g, f) -> g after f`` and must cover exactly the
    composable pairs (``cod f == dom g`` on the nose).  ``eps[x]`` is the
    arrow ``-x+x -> 0`` and ``delta[x]`` the arrow ``x+(-x) -> 0``.
    """

    objects: list[str]
    arrows: list[str]
    dom: dict[str, str]
    cod: dict[str, str]
    ident: dict[str, str]
    comp: dict[Pair, str]
    obj_add: dict[Pair, str]
    arr_add: dict[Pair, str]
    zero_obj: str
    alpha: dict[Triple, str]
    lam: dict[str, str]
    rho: dict[str, str]
    neg_obj: dict[str, str]
    eps: dict[str, str]
    delta: dict[str, str]
    neg_arr: dict[str, str]
    special_isos: frozenset[str] | None = None
    name: str = ""

    def __post_init__(self) -> None:
        if not self.objects:
            raise MalformedTable("no objects")
        if len(set(self.objects)) != len(self.objects):
            raise MalformedTable("duplicate objects")
        if len(set(self.arrows)) != len(self.arrows):
            raise MalformedTable("duplicate arrows")
        self.objects = sorted(self.objects)
        self.arrows = sorted(self.arrows)
        objs, arrs = set(self.objects), set(self.arrows)
        if self.zero_obj not in objs:
            raise MalformedTable("zero object is not an object")
        unary: tuple[tuple[str, dict[str, str], set[str], set[str]], ...] = (
            ("dom", self.dom, arrs, objs),
            ("cod", self.cod, arrs, objs),
            ("ident", self.ident, objs, arrs),
            ("neg_obj", self.neg_obj, objs, objs),
            ("lam", self.lam, objs, arrs),
            ("rho", self.rho, objs, arrs),
            ("eps", self.eps, objs, arrs),
            ("delta", self.delta, objs, arrs),
            ("neg_arr", self.neg_arr, arrs, arrs),
        )
        for label, table, keys, values in unary:
            for k in keys:
                if k not in table:
                    raise MalformedTable(f"{label} missing entry {k!r}")
                if table[k] not in values:
                    raise MalformedTable(f"{label}[{k!r}] leaves the carrier")
        for x, y in product(self.objects, repeat=2):
            if self.obj_add.get((x, y)) not in objs:
                raise MalformedTable(f"obj_add missing or bad at ({x!r},{y!r})")
        for f, g in product(self.arrows, repeat=2):
            if self.arr_add.get((f, g)) not in arrs:
                raise MalformedTable(f"arr_add missing or bad at ({f!r},{g!r})")
        for t in product(self.objects, repeat=3):
            if self.alpha.get(t) not in arrs:
                raise MalformedTable(f"alpha missing or bad at {t!r}")
        for g, f in product(self.arrows, repeat=2):
            composable = self.cod[f] == self.dom[g]
            present = (g, f) in self.comp
            if composable and not present:
                raise MalformedTable(f"comp missing composable pair ({g!r},{f!r})")
            if present and not composable:
                raise MalformedTable(f"comp keyed at non-composable pair ({g!r},{f!r})")
            if present and self.comp[g, f] not in arrs:
                raise MalformedTable(f"comp[({g!r},{f!r})] leaves the carrier")

    def compose(self, g: str, f: str) -> str | None:
        return self.comp.get((g, f))


def _arrow_inverses_or_missing(c: CatGroup) -> tuple[dict[str, str], list[str]]:
    inv: dict[str, str] = {}
    missing: list[str] = []
    for f in c.arrows:
        x, y = c.dom[f], c.cod[f]
        for g in c.arrows:
            if (
                c.dom[g] == y
                and c.cod[g] == x
                and c.comp.get((g, f)) == c.ident[x]
                and c.comp.get((f, g)) == c.ident[y]
            ):
                inv[f] = g
                break
        else:
            missing.append(f)
    return inv, missing


def arrow_inverses(c: CatGroup) -> dict[str, str]:
    """Two-sided composition inverse of every arrow (groupoid witness)."""
    inv, missing = _arrow_inverses_or_missing(c)
    if missing:
        raise NotAGroupoid(f"arrows without two-sided inverse: {missing}")
    return inv


def _eq(lhs: str | None, rhs: str | None) -> bool:
    """Equality where an undefined composite never satisfies a law."""
    return lhs is not None and lhs == rhs


def validate_catgroup(c: CatGroup, max_arrows: int = 64) -> ValidationReport:
    """Exhaustively check every categorical-group axiom, with witnesses.

    Naturality scans are cubic in the number of arrows, hence the cap;
    raise it deliberately for bigger instances.
    """
    if len(c.arrows) > max_arrows:
        raise TooManyArrows(f"{len(c.arrows)} arrows exceeds cap {max_arrows}")
    report = ValidationReport(c.name or "categorical group")
    comp, add = c.comp, c.arr_add

    ok, witness = True, ""
    for x in c.objects:
        i = c.ident[x]
        if c.dom[i] != x or c.cod[i] != x:
            ok, witness = False, f"x={x}"
            break
    report.add("identity-endpoints", ok, witness)

    ok, witness = True, ""
    for (g, f), h in comp.items():
        if c.dom[h] != c.dom[f] or c.cod[h] != c.cod[g]:
            ok, witness = False, f"g={g} f={f}"
            break
    report.add("composition-typing", ok, witness)

    ok, witness = True, ""
    for f in c.arrows:
        if not _eq(comp.get((f, c.ident[c.dom[f]])), f) or not _eq(comp.get((c.ident[c.cod[f]], f)), f):
            ok, witness = False, f"f={f}"
            break
    report.add("composition-unit", ok, witness)

    ok, witness = True, ""
    for (g, f) in comp:
        for h in c.arrows:
            if c.cod[g] != c.dom[h]:
                continue
            left = comp.get((h, comp[g, f]))
            hg = comp.get((h, g))
            right = comp.get((hg, f)) if hg is not None else None
            if not (left is not None and left == right):
                ok, witness = False, f"h={h} g={g} f={f}"
                break
        if not ok:
            break
    report.add("composition-assoc", ok, witness)

    inv, missing = _arrow_inverses_or_missing(c)
    report.add("groupoid-inverses", not missing, f"no inverse for {missing[:4]}" if missing else "")

    ok, witness = True, ""
    for f, g in product(c.arrows, repeat=2):
        s = add[f, g]
        if c.dom[s] != c.obj_add[c.dom[f], c.dom[g]] or c.cod[s] != c.obj_add[c.cod[f], c.cod[g]]:
            ok, witness = False, f"f={f} g={g}"
            break
    report.add("addition-typing", ok, witness)

    ok, witness = True, ""
    for x, y in product(c.objects, repeat=2):
        if add[c.ident[x], c.ident[y]] != c.ident[c.obj_add[x, y]]:
            ok, witness = False, f"x={x} y={y}"
            break
    report.add("addition-identities", ok, witness)

    ok, witness = True, ""
    for (f, g) in comp:
        for (h, t) in comp:
            lhs = comp.get((add[f, h], add[g, t]))
            if not _eq(lhs, add[comp[f, g], comp[h, t]]):
                ok, witness = False, f"f={f} g={g} h={h} t={t}"
                break
        if not ok:
            break
    report.add("interchange", ok, witness)

    ok, witness = True, ""
    for x, y, z in product(c.objects, repeat=3):
        a = c.alpha[x, y, z]
        left = c.obj_add[c.obj_add[x, y], z]
        right = c.obj_add[x, c.obj_add[y, z]]
        if c.dom[a] != left or c.cod[a] != right:
            ok, witness = False, f"x={x} y={y} z={z}"
            break
    report.add("assoc-iso-endpoints", ok, witness)

    ok, witness = True, ""
    for f, g, h in product(c.arrows, repeat=3):
        src = c.alpha[c.dom[f], c.dom[g], c.dom[h]]
        tgt = c.alpha[c.cod[f], c.cod[g], c.cod[h]]
        lhs = comp.get((tgt, add[add[f, g], h]))
        rhs = comp.get((add[f, add[g, h]], src))
        if not (lhs is not None and lhs == rhs):
            ok, witness = False, f"f={f} g={g} h={h}"
            break
    report.add("assoc-iso-natural", ok, witness)

    ok, witness = True, ""
    for x in c.objects:
        lam_ok = c.dom[c.lam[x]] == c.obj_add[c.zero_obj, x] and c.cod[c.lam[x]] == x
        rho_ok = c.dom[c.rho[x]] == c.obj_add[x, c.zero_obj] and c.cod[c.rho[x]] == x
        if not (lam_ok and rho_ok):
            ok, witness = False, f"x={x}"
            break
    report.add("unit-iso-endpoints", ok, witness)

    ok, witness = True, ""
    one0 = c.ident[c.zero_obj]
    for f in c.arrows:
        x, y = c.dom[f], c.cod[f]
        lam_nat = _eq(comp.get((c.lam[y], add[one0, f])), comp.get((f, c.lam[x])))
        rho_nat = _eq(comp.get((c.rho[y], add[f, one0])), comp.get((f, c.rho[x])))
        if not (lam_nat and rho_nat):
            ok, witness = False, f"f={f}"
            break
    report.add("unit-iso-natural", ok, witness)

    ok, witness = True, ""
    for x, y, z, t in product(c.objects, repeat=4):
        lhs = comp.get((c.alpha[x, y, c.obj_add[z, t]], c.alpha[c.obj_add[x, y], z, t]))
        inner = comp.get((c.alpha[x, c.obj_add[y, z], t], add[c.alpha[x, y, z], c.ident[t]]))
        rhs = comp.get((add[c.ident[x], c.alpha[y, z, t]], inner)) if inner is not None else None
        if not (lhs is not None and lhs == rhs):
            ok, witness = False, f"x={x} y={y} z={z} t={t}"
            break
    report.add("pentagon", ok, witness)

    ok, witness = True, ""
    for x, y in product(c.objects, repeat=2):
        lhs = comp.get((add[c.ident[x], c.lam[y]], c.alpha[x, c.zero_obj, y]))
        if not _eq(lhs, add[c.rho[x], c.ident[y]]):
            ok, witness = False, f"x={x} y={y}"
            break
    report.add("triangle", ok, witness)

    report.add("unit-isos-at-zero-agree", c.lam[c.zero_obj] == c.rho[c.zero_obj], "")

    ok, witness = True, ""
    for x in c.objects:
        nx = c.neg_obj[x]
        eps_ok = c.dom[c.eps[x]] == c.obj_add[nx, x] and c.cod[c.eps[x]] == c.zero_obj
        delta_ok = c.dom[c.delta[x]] == c.obj_add[x, nx] and c.cod[c.delta[x]] == c.zero_obj
        if not (eps_ok and delta_ok):
            ok, witness = False, f"x={x}"
            break
    report.add("inv-iso-endpoints", ok, witness)

    ok, witness = True, ""
    for x in c.objects:
        nx = c.neg_obj[x]
        pieces = (inv.get(c.delta[x]), inv.get(c.rho[x]), inv.get(c.lam[nx]), inv.get(c.alpha[nx, x, nx]))
        if any(p is None for p in pieces):
            ok, witness = False, f"x={x} (missing inverse)"
            break
        step = comp.get((c.alpha[x, nx, x], add[inv[c.delta[x]], c.ident[x]]))
        lhs = comp.get((add[c.ident[x], c.eps[x]], step)) if step is not None else None
        rhs = comp.get((inv[c.rho[x]], c.lam[x]))
        if not (lhs is not None and lhs == rhs):
            ok, witness = False, f"x={x}"
            break
        step = comp.get((inv[c.alpha[nx, x, nx]], add[c.ident[nx], inv[c.delta[x]]]))
        lhs = comp.get((add[c.eps[x], c.ident[nx]], step)) if step is not None else None
        rhs = comp.get((inv[c.lam[nx]], c.rho[nx]))
        if not (lhs is not None and lhs == rhs):
            ok, witness = False, f"x={x}"
            break
    report.add("zigzags", ok, witness)

    ok, witness = True, ""
    for f in c.arrows:
        x, y = c.dom[f], c.cod[f]
        eps_nat = _eq(comp.get((c.eps[y], add[c.neg_arr[f], f])), c.eps[x])
        delta_nat = _eq(comp.get((c.delta[y], add[f, c.neg_arr[f]])), c.delta[x])
        if not (eps_nat and delta_nat):
            ok, witness = False, f"f={f}"
            break
    report.add("inv-iso-natural", ok, witness)

    ok, witness = True, ""
    for f in c.arrows:
        nf = c.neg_arr[f]
        if c.dom[nf] != c.neg_obj[c.dom[f]] or c.cod[nf] != c.neg_obj[c.cod[f]]:
            ok, witness = False, f"f={f}"
            break
    report.add("negation-endpoints", ok, witness)

    ok, witness = True, ""
    for x in c.objects:
        if c.neg_arr[c.ident[x]] != c.ident[c.neg_obj[x]]:
            ok, witness = False, f"x={x}"
            break
    report.add("negation-identities", ok, witness)

    return report


def special_iso_closure(c: CatGroup) -> frozenset[str]:
    """Least arrow set containing identities and all coherence components,
    closed under inverse, composition, and addition.  Cached on ``c``."""
    inv = arrow_inverses(c)
    closure: set[str] = set(c.ident.values())
    closure.update(c.alpha.values())
    closure.update(c.lam.values())
    closure.update(c.rho.values())
    closure.update(c.eps.values())
    closure.update(c.delta.values())
    while True:
        new: set[str] = set()
        for f in closure:
            if inv[f] not in closure:
                new.add(inv[f])
        for f, g in product(sorted(closure), repeat=2):
            h = c.comp.get((f, g))
            if h is not None and h not in closure:
                new.add(h)
            s = c.arr_add[f, g]
            if s not in closure:
                new.add(s)
        if not new:
            break
        closure.update(new)
    result = frozenset(closure)
    c.special_isos = result
    return result


def _ensure_special_isos(c: CatGroup) -> frozenset[str]:
    return c.special_isos if c.special_isos is not None else special_iso_closure(c)


def coherence_diagnostic(c: CatGroup) -> dict[Pair, tuple[str, ...]]:
    """Parallel special isomorphisms grouped by (dom, cod) site.

    Sites with more than one entry are where evaluated canonical maps
    collide; the generator axioms remain the normative coherence check.
    """
    isos = _ensure_special_isos(c)
    sites: dict[Pair, list[str]] = {}
    for f in sorted(isos):
        sites.setdefault((c.dom[f], c.cod[f]), []).append(f)
    return {site: tuple(sorted(fs)) for site, fs in sorted(sites.items())}


def _object_components(c: CatGroup) -> dict[str, str]:
    """Least object of each arrow-connected component, per object."""
    parent = {x: x for x in c.objects}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for f in c.arrows:
        a, b = find(c.dom[f]), find(c.cod[f])
        if a != b:
            parent[max(a, b)] = min(a, b)
    return {x: find(x) for x in c.objects}


def objects_cgroup(c: CatGroup) -> CGroup:
    """Objects with obj_add; related when an arrow joins them, special
    when a special isomorphism does."""
    comp_of = _object_components(c)
    blocks: dict[str, list[str]] = {}
    for x in c.objects:
        blocks.setdefault(comp_of[x], []).append(x)
    isos = _ensure_special_isos(c)
    special = frozenset((c.dom[f], c.cod[f]) for f in isos)
    return CGroup(
        elements=list(c.objects),
        add=dict(c.obj_add),
        zero=c.zero_obj,
        neg=dict(c.neg_obj),
        rel=tuple(tuple(b) for b in blocks.values()),
        special=special,
        name=f"{c.name or 'C'}|objects",
    )


def _arrow_iso_blocks(c: CatGroup, carrier: list[str]) -> tuple[tuple[str, ...], ...]:
    """Partition of ``carrier`` by plain arrow-category isomorphism:
    f ~ g when th1 after f equals g after th0 for some arrows th0, th1."""
    by_site: dict[Pair, list[str]] = {}
    for a in c.arrows:
        by_site.setdefault((c.dom[a], c.cod[a]), []).append(a)
    parent = {f: f for f in carrier}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for f, g in product(carrier, repeat=2):
        if find(f) == find(g):
            continue
        th0s = by_site.get((c.dom[f], c.dom[g]), [])
        th1s = by_site.get((c.cod[f], c.cod[g]), [])
        hit = any(
            _eq(c.comp.get((th1, f)), c.comp.get((g, th0)))
            for th0 in th0s
            for th1 in th1s
        )
        if hit:
            a, b = find(f), find(g)
            parent[max(a, b)] = min(a, b)
    blocks: dict[str, list[str]] = {}
    for f in carrier:
        blocks.setdefault(find(f), []).append(f)
    return tuple(tuple(b) for b in blocks.values())


def arrows_star_zero(c: CatGroup) -> CGroup:
    """Arrows based at the zero object, added by (f+g) corrected along
    the canonical iso 0 -> 0+0 (the inverse of lambda at 0)."""
    inv = arrow_inverses(c)
    carrier = [f for f in c.arrows if c.dom[f] == c.zero_obj]
    gamma0 = inv[c.lam[c.zero_obj]]
    add: dict[Pair, str] = {}
    for f, g in product(carrier, repeat=2):
        h = c.comp.get((c.arr_add[f, g], gamma0))
        if h is None or c.dom[h] != c.zero_obj:
            raise MalformedTable(f"star addition undefined at ({f!r},{g!r})")
        add[f, g] = h
    nu = c.comp.get((c.rho[c.neg_obj[c.zero_obj]], inv[c.eps[c.zero_obj]]))
    neg: dict[str, str] = {}
    for f in carrier:
        h = c.comp.get((c.neg_arr[f], nu)) if nu is not None else None
        if h is None or c.dom[h] != c.zero_obj:
            raise MalformedTable(f"star negation undefined at {f!r}")
        neg[f] = h
    sg = CGroup(
        elements=carrier,
        add=add,
        zero=c.ident[c.zero_obj],
        neg=neg,
        rel=_arrow_iso_blocks(c, carrier),
        name=f"{c.name or 'C'}|star0",
    )
    special_closure(sg)
    return sg


def arrows_cgroup(c: CatGroup) -> CGroup:
    """All arrows under plain addition, related by arrow isomorphism."""
    return CGroup(
        elements=list(c.arrows),
        add=dict(c.arr_add),
        zero=c.ident[c.zero_obj],
        neg=dict(c.neg_arr),
        rel=_arrow_iso_blocks(c, list(c.arrows)),
        name=f"{c.name or 'C'}|arrows",
    )


def arrows_ker_d0(c: CatGroup) -> CGroup:
    """Arrows whose domain lies in the component of zero, plain addition."""
    comp_of = _object_components(c)
    zero_comp = comp_of[c.zero_obj]
    carrier = [f for f in c.arrows if comp_of[c.dom[f]] == zero_comp]
    return CGroup(
        elements=carrier,
        add={(f, g): c.arr_add[f, g] for f in carrier for g in carrier},
        zero=c.ident[c.zero_obj],
        neg={f: c.neg_arr[f] for f in carrier},
        rel=_arrow_iso_blocks(c, carrier),
        name=f"{c.name or 'C'}|ker_d0",
    )


def ker_d1_subset(c: CatGroup) -> CSubset:
    """Arrows whose codomain lies in the component of zero, as a subset
    of the full arrow c-group."""
    comp_of = _object_components(c)
    zero_comp = comp_of[c.zero_obj]
    members = [f for f in c.arrows if comp_of[c.cod[f]] == zero_comp]
    return CSubset(arrows_cgroup(c), members)


def star_action(c: CatGroup) -> CAction:
    """Objects acting on zero-based arrows by conjugation corrected along
    the canonical iso 0 -> r+(0+(-r))."""
    inv = arrow_inverses(c)
    actor = objects_cgroup(c)
    acted = arrows_star_zero(c)
    dot: dict[Pair, str] = {}
    for r in actor.elements:
        one_r = c.ident[r]
        step = c.comp.get((c.arr_add[one_r, inv[c.lam[c.neg_obj[r]]]], inv[c.delta[r]]))
        for f in acted.elements:
            conj = c.arr_add[one_r, c.arr_add[f, c.neg_arr[one_r]]]
            h = c.comp.get((conj, step)) if step is not None else None
            if h is None or c.dom[h] != c.zero_obj:
                raise MalformedTable(f"star action undefined at ({r!r},{f!r})")
            dot[r, f] = h
    return CAction(actor, acted, dot)


def weak_special_iso_pairs(c: CatGroup) -> frozenset[Pair]:
    """Ordered arrow pairs joined by special isomorphisms at both ends:
    (f, g) such that th1 after f equals g after th0 with th0, th1 special."""
    isos = _ensure_special_isos(c)
    by_site: dict[Pair, list[str]] = {}
    for a in sorted(isos):
        by_site.setdefault((c.dom[a], c.cod[a]), []).append(a)
    pairs: set[Pair] = set()
    for f, g in product(c.arrows, repeat=2):
        th0s = by_site.get((c.dom[f], c.dom[g]), [])
        th1s = by_site.get((c.cod[f], c.cod[g]), [])
        if any(
            _eq(c.comp.get((th1, f)), c.comp.get((g, th0)))
            for th0 in th0s
            for th1 in th1s
        ):
            pairs.add((f, g))
    return frozenset(pairs)


def check_comp_via_add(c: CatGroup) -> ValidationReport:
    """Composition agrees with rebased addition up to weak special iso:
    f after g versus (f - identity at dom f) + g."""
    report = ValidationReport(f"{c.name or 'C'}: composition via addition")
    wsp = weak_special_iso_pairs(c)
    ok, witness = True, ""
    for (f, g) in c.comp:
        rebased = c.arr_add[c.arr_add[f, c.neg_arr[c.ident[c.dom[f]]]], g]
        if (c.comp[f, g], rebased) not in wsp:
            ok, witness = False, f"f={f} g={g}"
            break
    report.add("composition-via-addition", ok, witness)
    return report


def check_ker_commute(c: CatGroup) -> ValidationReport:
    """f+g and g+f are weakly specially isomorphic for f with codomain
    near zero and g with domain near zero."""
    report = ValidationReport(f"{c.name or 'C'}: kernel sums commute")
    wsp = weak_special_iso_pairs(c)
    left = ker_d1_subset(c).members
    right = arrows_ker_d0(c).elements
    ok, witness = True, ""
    for f in left:
        for g in right:
            if (c.arr_add[f, g], c.arr_add[g, f]) not in wsp:
                ok, witness = False, f"f={f} g={g}"
                break
        if not ok:
            break
    report.add("kernel-sums-commute", ok, witness)
    return report


@dataclass
class CatGroupFunctor:
    """Strict monoidal functor between categorical groups, as tables."""

    source: CatGroup
    target: CatGroup
    f0: dict[str, str]
    f1: dict[str, str]
    name: str = ""

    def __post_init__(self) -> None:
        objs, arrs = set(self.target.objects), set(self.target.arrows)
        for x in self.source.objects:
            if self.f0.get(x) not in objs:
                raise MalformedTable(f"f0 missing or bad at {x!r}")
        for f in self.source.arrows:
            if self.f1.get(f) not in arrs:
                raise MalformedTable(f"f1 missing or bad at {f!r}")


def validate_functor(t: CatGroupFunctor) -> ValidationReport:
    report = ValidationReport(t.name or "functor")
    s, d, f0, f1 = t.source, t.target, t.f0, t.f1

    ok, witness = True, ""
    for f in s.arrows:
        if d.dom[f1[f]] != f0[s.dom[f]] or d.cod[f1[f]] != f0[s.cod[f]]:
            ok, witness = False, f"f={f}"
            break
    report.add("preserves-endpoints", ok, witness)

    ok, witness = True, ""
    for x in s.objects:
        if f1[s.ident[x]] != d.ident[f0[x]]:
            ok, witness = False, f"x={x}"
            break
    report.add("preserves-identities", ok, witness)

    ok, witness = True, ""
    for (g, f), h in s.comp.items():
        if not _eq(d.comp.get((f1[g], f1[f])), f1[h]):
            ok, witness = False, f"g={g} f={f}"
            break
    report.add("preserves-composition", ok, witness)

    ok, witness = True, ""
    for x, y in product(s.objects, repeat=2):
        if f0[s.obj_add[x, y]] != d.obj_add[f0[x], f0[y]]:
            ok, witness = False, f"x={x} y={y}"
            break
    report.add("preserves-object-sum", ok, witness)

    report.add("preserves-zero", f0[s.zero_obj] == d.zero_obj, "")

    ok, witness = True, ""
    for f, g in product(s.arrows, repeat=2):
        if f1[s.arr_add[f, g]] != d.arr_add[f1[f], f1[g]]:
            ok, witness = False, f"f={f} g={g}"
            break
    report.add("preserves-arrow-sum", ok, witness)

    ok, witness = True, ""
    for x, y, z in product(s.objects, repeat=3):
        if f1[s.alpha[x, y, z]] != d.alpha[f0[x], f0[y], f0[z]]:
            ok, witness = False, f"x={x} y={y} z={z}"
            break
    report.add("preserves-assoc-iso", ok, witness)

    ok, witness = True, ""
    for x in s.objects:
        if f1[s.lam[x]] != d.lam[f0[x]] or f1[s.rho[x]] != d.rho[f0[x]]:
            ok, witness = False, f"x={x}"
            break
    report.add("preserves-unit-isos", ok, witness)

    ok, witness = True, ""
    for x in s.objects:
        if f0[s.neg_obj[x]] != d.neg_obj[f0[x]]:
            ok, witness = False, f"x={x}"
            break
    report.add("preserves-object-negation", ok, witness)

    ok, witness = True, ""
    for f in s.arrows:
        if f1[s.neg_arr[f]] != d.neg_arr[f1[f]]:
            ok, witness = False, f"f={f}"
            break
    report.add("preserves-arrow-negation", ok, witness)

    return report


def identity_functor(c: CatGroup) -> CatGroupFunctor:
    return CatGroupFunctor(
        c, c, {x: x for x in c.objects}, {f: f for f in c.arrows}, name=f"1_{c.name or 'C'}"
    )


def compose_functors(t2: CatGroupFunctor, t1: CatGroupFunctor) -> CatGroupFunctor:
    return CatGroupFunctor(
        t1.source,
        t2.target,
        {x: t2.f0[t1.f0[x]] for x in t1.source.objects},
        {f: t2.f1[t1.f1[f]] for f in t1.source.arrows},
        name=f"{t2.name}.{t1.name}",
    )


def kernel_extension(c: CatGroup) -> tuple[CGroupMorphism, CGroupMorphism, CGroupMorphism, CAction]:
    """Split extension of the object c-group by the kernel of the domain
    map: inclusion j, projection d0, splitting i, and the conjugation
    action of objects on the kernel.  The induced module over the
    codomain map is validated as a connected crossed module."""
    arrows_c = arrows_cgroup(c)
    objects_c = objects_cgroup(c)
    kernel = arrows_ker_d0(c)
    j = CGroupMorphism(kernel, arrows_c, {f: f for f in kernel.elements}, name="j")
    d0 = CGroupMorphism(arrows_c, objects_c, {f: c.dom[f] for f in arrows_c.elements}, name="d0")
    i = CGroupMorphism(objects_c, arrows_c, {x: c.ident[x] for x in objects_c.elements}, name="i")
    assert all(d0.map[i.map[x]] == x for x in objects_c.elements)
    dot = {
        (r, f): c.arr_add[c.ident[r], c.arr_add[f, c.neg_arr[c.ident[r]]]]
        for r in objects_c.elements
        for f in kernel.elements
    }
    act = CAction(objects_c, kernel, dot)
    assert validate_action(act).ok
    d1 = CGroupMorphism(kernel, objects_c, {f: c.cod[f] for f in kernel.elements}, name="d1")
    module = CCrossedModule(
        g=kernel,
        h=objects_c,
        boundary=d1,
        action=act,
        weak_special=special_closure(kernel),
        name=f"{c.name or 'C'}|kernel",
    )
    assert validate_crossed_module(module).ok
    assert len(module.g.rel) == 1
    return j, d0, i, act
