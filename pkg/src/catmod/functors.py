"""The two directions of the equivalence: flattening a categorical group
onto its zero-based arrows (L) and rebuilding a categorical group from a
cssc-crossed module (T).

The rebuilt category's arrows are ``GArrow`` triples in canonical form:
the domain leg is an identity and the middle component is the least
representative of its weak special class.  All arrow operations reduce
to c-group arithmetic followed by class reduction.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .catgroup import (
    CatGroup,
    CatGroupFunctor,
    arrows_star_zero,
    objects_cgroup,
    star_action,
)
from .cgroup import CGroupMorphism, Pair, special_closure
from .crossmod import (
    CCrossedModule,
    CrossedModuleMorphism,
    is_cssc,
    special_lift,
)
from .errors import (
    MalformedTable,
    NotComposable,
    NotCssc,
    NotSpecialLeg,
    NotSpecialPair,
    TooManyArrows,
)


@dataclass(frozen=True)
class GArrow:
    """Canonical arrow ``dom -> cod`` of a rebuilt categorical group.

    ``c`` is the least weak-special representative; the defining
    constraint is that ``boundary(c)+dom`` is specially congruent to
    ``cod`` in the base c-group.  Equality is componentwise.
    """

    dom: str
    cod: str
    c: str


def _n_special(x: CCrossedModule) -> frozenset[Pair]:
    return x.h.special if x.h.special is not None else special_closure(x.h)


def _mk(x: CCrossedModule, dom: str, cod: str, c: str) -> GArrow:
    rep = x.w_rep(c)
    assert (x.h.add[x.boundary.map[rep], dom], cod) in _n_special(x), (dom, cod, rep)
    return GArrow(dom, cod, rep)


def t_identity(x: CCrossedModule, r: str) -> GArrow:
    return _mk(x, r, r, x.g.zero)


def t_compose(x: CCrossedModule, g2: GArrow, g1: GArrow) -> GArrow:
    """g2 after g1; the middle components add."""
    if g1.cod != g2.dom:
        raise NotComposable(f"cod {g1.cod!r} does not meet dom {g2.dom!r}")
    return _mk(x, g1.dom, g2.cod, x.g.add[g2.c, g1.c])


def t_inverse(x: CCrossedModule, g: GArrow) -> GArrow:
    return _mk(x, g.cod, g.dom, x.g.neg[g.c])


def t_add(x: CCrossedModule, g1: GArrow, g2: GArrow) -> GArrow:
    n = x.h
    c = x.g.add[g1.c, x.action.dot[g1.dom, g2.c]]
    return _mk(x, n.add[g1.dom, g2.dom], n.add[g1.cod, g2.cod], c)


def t_opposite(x: CCrossedModule, g: GArrow) -> GArrow:
    n = x.h
    nd = n.neg[g.dom]
    return _mk(x, nd, n.neg[g.cod], x.action.dot[nd, x.g.neg[g.c]])


def t_special_iso(x: CCrossedModule, r: str, r2: str) -> GArrow:
    """The canonical arrow carried by a special pair (r, r2) of the base:
    its middle component is the unique near-zero lift of r2-r."""
    if (r, r2) not in _n_special(x):
        raise NotSpecialPair(f"({r!r},{r2!r}) is not special in the base")
    c = special_lift(x, x.g.zero, x.h.add[r2, x.h.neg[r]])
    return _mk(x, r, r2, c)


def canonicalize(
    x: CCrossedModule,
    r_dom: str,
    alpha_cod: str,
    r: str,
    c: str,
    beta_cod: str,
) -> GArrow:
    """Canonical form of a formal composite: a special leg from r_dom to
    r, a middle component c based at r, and a special leg from
    boundary(c)+r to beta_cod.  Both legs collapse into class reduction
    of c."""
    spec = _n_special(x)
    if alpha_cod != r:
        raise NotSpecialLeg(f"entry leg ends at {alpha_cod!r} but the middle starts at {r!r}")
    if (r_dom, r) not in spec:
        raise NotSpecialLeg(f"entry leg ({r_dom!r},{r!r}) is not special")
    if (x.h.add[x.boundary.map[c], r], beta_cod) not in spec:
        raise NotSpecialLeg(f"exit leg over {beta_cod!r} is not special")
    return _mk(x, r_dom, beta_cod, c)


@dataclass
class TCatGroup:
    """A rebuilt categorical group together with its arrow dictionary."""

    cat: CatGroup
    module: CCrossedModule
    garrows: dict[str, GArrow]
    ids: dict[GArrow, str]

    def id_of(self, g: GArrow) -> str:
        got = self.ids.get(g)
        if got is None:
            raise MalformedTable(f"arrow {g} is not in the rebuilt table")
        return got


def T0(x: CCrossedModule, max_arrows: int = 10000) -> TCatGroup:
    """Rebuild a categorical group from a cssc-crossed module.

    Objects are the base elements; arrows are all canonical GArrows; the
    coherence tables are populated by the special-pair arrows."""
    if not is_cssc(x):
        raise NotCssc(f"{x.name or 'module'} is not connected, strict, and special")
    n = x.h
    spec = _n_special(x)
    bd = x.boundary.map
    garrows: list[GArrow] = []
    for r in n.elements:
        for m in x.w_reps():
            base = n.add[bd[m], r]
            for r2 in n.elements:
                if (base, r2) in spec:
                    garrows.append(GArrow(r, r2, m))
                    if len(garrows) > max_arrows:
                        raise TooManyArrows(f"more than {max_arrows} arrows")
    table: dict[str, GArrow] = {}
    ids: dict[GArrow, str] = {}
    for a in garrows:
        aid = f"{a.dom}|{a.cod}|{a.c}"
        if aid in table:
            raise MalformedTable(f"arrow identifier collision at {aid!r}")
        table[aid] = a
        ids[a] = aid

    def gid(a: GArrow) -> str:
        got = ids.get(a)
        if got is None:
            raise MalformedTable(f"operation left the arrow table: {a}")
        return got

    comp: dict[Pair, str] = {}
    for i2, a2 in table.items():
        for i1, a1 in table.items():
            if a1.cod == a2.dom:
                comp[i2, i1] = gid(t_compose(x, a2, a1))
    cat = CatGroup(
        objects=list(n.elements),
        arrows=list(table),
        dom={i: a.dom for i, a in table.items()},
        cod={i: a.cod for i, a in table.items()},
        ident={r: gid(t_identity(x, r)) for r in n.elements},
        comp=comp,
        obj_add=dict(n.add),
        arr_add={
            (i1, i2): gid(t_add(x, a1, a2))
            for i1, a1 in table.items()
            for i2, a2 in table.items()
        },
        zero_obj=n.zero,
        alpha={
            (p, q, s): gid(t_special_iso(x, n.add[n.add[p, q], s], n.add[p, n.add[q, s]]))
            for p, q, s in product(n.elements, repeat=3)
        },
        lam={r: gid(t_special_iso(x, n.add[n.zero, r], r)) for r in n.elements},
        rho={r: gid(t_special_iso(x, n.add[r, n.zero], r)) for r in n.elements},
        neg_obj=dict(n.neg),
        eps={r: gid(t_special_iso(x, n.add[n.neg[r], r], n.zero)) for r in n.elements},
        delta={r: gid(t_special_iso(x, n.add[r, n.neg[r]], n.zero)) for r in n.elements},
        neg_arr={i: gid(t_opposite(x, a)) for i, a in table.items()},
        name=f"T({x.name or 'X'})",
    )
    return TCatGroup(cat, x, table, ids)


def L0(c: CatGroup) -> CCrossedModule:
    """Flatten a categorical group: zero-based arrows over the object
    c-group, with the codomain boundary and conjugation action.  The
    weak special congruence is the special closure of the arrow side."""
    star = arrows_star_zero(c)
    objs = objects_cgroup(c)
    boundary = CGroupMorphism(star, objs, {f: c.cod[f] for f in star.elements}, name="d1")
    return CCrossedModule(
        g=star,
        h=objs,
        boundary=boundary,
        action=star_action(c),
        weak_special=star.special if star.special is not None else special_closure(star),
        name=f"L({c.name or 'C'})",
    )


def L1(
    t: CatGroupFunctor,
    src_mod: CCrossedModule | None = None,
    tgt_mod: CCrossedModule | None = None,
) -> CrossedModuleMorphism:
    """Flatten a functor: its arrow map restricted to zero-based arrows
    over its object map."""
    src = src_mod if src_mod is not None else L0(t.source)
    tgt = tgt_mod if tgt_mod is not None else L0(t.target)
    f = CGroupMorphism(src.g, tgt.g, {a: t.f1[a] for a in src.g.elements}, name="f|star0")
    g = CGroupMorphism(src.h, tgt.h, dict(t.f0), name="f|objects")
    return CrossedModuleMorphism(src, tgt, f, g, name=f"L({t.name or 'T'})")


def T1(
    m: CrossedModuleMorphism,
    src_t: TCatGroup | None = None,
    tgt_t: TCatGroup | None = None,
) -> CatGroupFunctor:
    """Rebuild a functor from a module morphism: map each canonical
    arrow through the components and canonicalize over the target."""
    src = src_t if src_t is not None else T0(m.source)
    tgt = tgt_t if tgt_t is not None else T0(m.target)
    f0 = {r: m.g.map[r] for r in src.cat.objects}
    f1: dict[str, str] = {}
    for aid, a in src.garrows.items():
        rd = m.g.map[a.dom]
        ga = canonicalize(m.target, rd, rd, rd, m.f.map[a.c], m.g.map[a.cod])
        f1[aid] = tgt.id_of(ga)
    return CatGroupFunctor(src.cat, tgt.cat, f0, f1, name=f"T({m.name or 'm'})")
