"""Structure documents, instance generators, and the bundled corpus.

Documents are UTF-8 JSON with a fixed envelope (kind, name,
format_version, payload) and association-list tables with sorted keys,
so canonical serialization is byte-stable.  Parsing rejects unknown
fields and dangling references; it never validates algebra — that is an
explicit separate step.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Callable

from .catgroup import CatGroup, CatGroupFunctor, Triple, identity_functor
from .cgroup import CGroup, CGroupMorphism, Pair, from_group
from .crossmod import (
    CAction,
    CCrossedModule,
    CrossedModuleMorphism,
    identity_cm,
    trivial_action,
)
from .equivalence import Corpus
from .errors import InvalidAction, MalformedTable, ParseError, VersionMismatch

FORMAT_VERSION = 1

Resolver = Callable[[str], object]


def _assoc1(table: dict[str, str]) -> list[list[str]]:
    return [[k, table[k]] for k in sorted(table)]


def _assoc2(table: dict[Pair, str]) -> list[list[str]]:
    return [[a, b, table[a, b]] for a, b in sorted(table)]


def _assoc3(table: dict[Triple, str]) -> list[list[str]]:
    return [[a, b, c, table[a, b, c]] for a, b, c in sorted(table)]


def _pairs(pairs: frozenset[Pair]) -> list[list[str]]:
    return [[a, b] for a, b in sorted(pairs)]


def _cgroup_payload(g: CGroup) -> dict:
    return {
        "elements": list(g.elements),
        "add": _assoc2(g.add),
        "zero": g.zero,
        "neg": _assoc1(g.neg),
        "rel": [list(block) for block in g.rel],
        "special": None if g.special is None else _pairs(g.special),
    }


def _catgroup_payload(c: CatGroup) -> dict:
    return {
        "objects": list(c.objects),
        "arrows": list(c.arrows),
        "dom": _assoc1(c.dom),
        "cod": _assoc1(c.cod),
        "ident": _assoc1(c.ident),
        "comp": _assoc2(c.comp),
        "obj_add": _assoc2(c.obj_add),
        "arr_add": _assoc2(c.arr_add),
        "zero_obj": c.zero_obj,
        "alpha": _assoc3(c.alpha),
        "lambda": _assoc1(c.lam),
        "rho": _assoc1(c.rho),
        "neg_obj": _assoc1(c.neg_obj),
        "eps": _assoc1(c.eps),
        "delta": _assoc1(c.delta),
        "neg_arr": _assoc1(c.neg_arr),
        "special_isos": None if c.special_isos is None else sorted(c.special_isos),
    }


def to_doc(obj: object, name: str | None = None) -> dict:
    """Envelope an in-memory structure as a document dictionary."""
    if isinstance(obj, CGroup):
        kind, payload = "cgroup", _cgroup_payload(obj)
        doc_name = name if name is not None else obj.name
    elif isinstance(obj, CatGroup):
        kind, payload = "catgroup", _catgroup_payload(obj)
        doc_name = name if name is not None else obj.name
    elif isinstance(obj, CCrossedModule):
        kind = "crossed_module"
        payload = {
            "g": to_doc(obj.g),
            "h": to_doc(obj.h),
            "boundary": _assoc1(obj.boundary.map),
            "action": _assoc2(obj.action.dot),
            "weak_special": _pairs(obj.weak_special),
        }
        doc_name = name if name is not None else obj.name
    elif isinstance(obj, CatGroupFunctor):
        kind = "functor"
        payload = {
            "source": obj.source.name or to_doc(obj.source),
            "target": obj.target.name or to_doc(obj.target),
            "f0": _assoc1(obj.f0),
            "f1": _assoc1(obj.f1),
        }
        doc_name = name if name is not None else obj.name
    elif isinstance(obj, CrossedModuleMorphism):
        kind = "cm_morphism"
        payload = {
            "source": obj.source.name or to_doc(obj.source),
            "target": obj.target.name or to_doc(obj.target),
            "f": _assoc1(obj.f.map),
            "g": _assoc1(obj.g.map),
        }
        doc_name = name if name is not None else obj.name
    elif isinstance(obj, dict):
        kind, payload, doc_name = "report", obj, name or str(obj.get("name", "report"))
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    return {
        "kind": kind,
        "name": doc_name,
        "format_version": FORMAT_VERSION,
        "payload": payload,
    }


def serialize(obj: object, name: str | None = None) -> str:
    return json.dumps(to_doc(obj, name), sort_keys=True, indent=2) + "\n"


def _expect_keys(d: dict, keys: set[str], path: str) -> None:
    if not isinstance(d, dict):
        raise ParseError(f"{path} is not an object")
    for k in d:
        if k not in keys:
            raise ParseError(f"unknown field {path}.{k}")
    for k in keys:
        if k not in d:
            raise ParseError(f"missing field {path}.{k}")


def _read_str(raw: object, path: str) -> str:
    if not isinstance(raw, str):
        raise ParseError(f"{path} is not a string")
    return raw


def _read_str_list(raw: object, path: str) -> list[str]:
    if not isinstance(raw, list):
        raise ParseError(f"{path} is not an array")
    return [_read_str(v, f"{path}[{i}]") for i, v in enumerate(raw)]


def _read_assoc(raw: object, arity: int, path: str) -> dict:
    if not isinstance(raw, list):
        raise ParseError(f"{path} is not an array")
    table: dict = {}
    for i, row in enumerate(raw):
        if not isinstance(row, list) or len(row) != arity + 1:
            raise ParseError(f"{path}[{i}] is not a {arity + 1}-tuple")
        parts = [_read_str(v, f"{path}[{i}]") for v in row]
        key = parts[0] if arity == 1 else tuple(parts[:arity])
        if key in table:
            raise ParseError(f"duplicate key in {path}[{i}]")
        table[key] = parts[arity]
    return table


def _read_pairs(raw: object, path: str) -> frozenset[Pair]:
    if not isinstance(raw, list):
        raise ParseError(f"{path} is not an array")
    pairs = set()
    for i, row in enumerate(raw):
        if not isinstance(row, list) or len(row) != 2:
            raise ParseError(f"{path}[{i}] is not a pair")
        pairs.add((_read_str(row[0], f"{path}[{i}]"), _read_str(row[1], f"{path}[{i}]")))
    return frozenset(pairs)


def _parse_cgroup(payload: dict, name: str, path: str) -> CGroup:
    _expect_keys(payload, {"elements", "add", "zero", "neg", "rel", "special"}, path)
    elements = _read_str_list(payload["elements"], f"{path}.elements")
    known = set(elements)
    add = _read_assoc(payload["add"], 2, f"{path}.add")
    neg = _read_assoc(payload["neg"], 1, f"{path}.neg")
    zero = _read_str(payload["zero"], f"{path}.zero")
    rel_raw = payload["rel"]
    if not isinstance(rel_raw, list):
        raise ParseError(f"{path}.rel is not an array")
    rel = tuple(tuple(_read_str_list(b, f"{path}.rel[{i}]")) for i, b in enumerate(rel_raw))
    special = None if payload["special"] is None else _read_pairs(payload["special"], f"{path}.special")
    for (a, b), v in add.items():
        if a not in known or b not in known or v not in known:
            raise ParseError(f"{path}.add references unknown element ({a!r},{b!r})->{v!r}")
    try:
        return CGroup(elements, add, zero, neg, rel, special, name=name)
    except MalformedTable as exc:
        raise ParseError(f"{path}: {exc}") from exc


def _parse_catgroup(payload: dict, name: str, path: str) -> CatGroup:
    keys = {
        "objects", "arrows", "dom", "cod", "ident", "comp", "obj_add", "arr_add",
        "zero_obj", "alpha", "lambda", "rho", "neg_obj", "eps", "delta", "neg_arr",
        "special_isos",
    }
    _expect_keys(payload, keys, path)
    objects = _read_str_list(payload["objects"], f"{path}.objects")
    arrows = _read_str_list(payload["arrows"], f"{path}.arrows")
    objs, arrs = set(objects), set(arrows)
    dom = _read_assoc(payload["dom"], 1, f"{path}.dom")
    cod = _read_assoc(payload["cod"], 1, f"{path}.cod")
    for label, table in (("dom", dom), ("cod", cod)):
        for f, x in table.items():
            if f not in arrs:
                raise ParseError(f"{path}.{label} references unknown arrow {f!r}")
            if x not in objs:
                raise ParseError(f"{path}.{label}[{f!r}] references unknown object {x!r}")
    alpha_raw = _read_assoc(payload["alpha"], 3, f"{path}.alpha")
    special_raw = payload["special_isos"]
    special = None if special_raw is None else frozenset(_read_str_list(special_raw, f"{path}.special_isos"))
    try:
        return CatGroup(
            objects=objects,
            arrows=arrows,
            dom=dom,
            cod=cod,
            ident=_read_assoc(payload["ident"], 1, f"{path}.ident"),
            comp=_read_assoc(payload["comp"], 2, f"{path}.comp"),
            obj_add=_read_assoc(payload["obj_add"], 2, f"{path}.obj_add"),
            arr_add=_read_assoc(payload["arr_add"], 2, f"{path}.arr_add"),
            zero_obj=_read_str(payload["zero_obj"], f"{path}.zero_obj"),
            alpha=alpha_raw,
            lam=_read_assoc(payload["lambda"], 1, f"{path}.lambda"),
            rho=_read_assoc(payload["rho"], 1, f"{path}.rho"),
            neg_obj=_read_assoc(payload["neg_obj"], 1, f"{path}.neg_obj"),
            eps=_read_assoc(payload["eps"], 1, f"{path}.eps"),
            delta=_read_assoc(payload["delta"], 1, f"{path}.delta"),
            neg_arr=_read_assoc(payload["neg_arr"], 1, f"{path}.neg_arr"),
            special_isos=special,
            name=name,
        )
    except MalformedTable as exc:
        raise ParseError(f"{path}: {exc}") from exc


def _resolve(raw: object, resolver: Resolver | None, path: str, want: type) -> object:
    if isinstance(raw, str):
        if resolver is None:
            raise ParseError(f"{path} names {raw!r} but no resolver is available")
        got = resolver(raw)
        if got is None or not isinstance(got, want):
            raise ParseError(f"{path}: {raw!r} did not resolve to a {want.__name__}")
        return got
    if isinstance(raw, dict):
        got = from_doc(raw, resolver)
        if not isinstance(got, want):
            raise ParseError(f"{path}: inline document is not a {want.__name__}")
        return got
    raise ParseError(f"{path} must be a name or an inline document")


def from_doc(doc: dict, resolver: Resolver | None = None) -> object:
    """Turn a document dictionary back into a typed structure."""
    _expect_keys(doc, {"kind", "name", "format_version", "payload"}, "document")
    if doc["format_version"] != FORMAT_VERSION:
        raise VersionMismatch(f"format_version {doc['format_version']!r}, expected {FORMAT_VERSION}")
    kind = doc["kind"]
    name = _read_str(doc["name"], "document.name")
    payload = doc["payload"]
    if kind == "report":
        if not isinstance(payload, dict):
            raise ParseError("payload is not an object")
        return payload
    if not isinstance(payload, dict):
        raise ParseError("payload is not an object")
    if kind == "cgroup":
        return _parse_cgroup(payload, name, "payload")
    if kind == "catgroup":
        return _parse_catgroup(payload, name, "payload")
    if kind == "crossed_module":
        _expect_keys(payload, {"g", "h", "boundary", "action", "weak_special"}, "payload")
        g = _resolve(payload["g"], resolver, "payload.g", CGroup)
        h = _resolve(payload["h"], resolver, "payload.h", CGroup)
        boundary = _read_assoc(payload["boundary"], 1, "payload.boundary")
        action = _read_assoc(payload["action"], 2, "payload.action")
        weak_special = _read_pairs(payload["weak_special"], "payload.weak_special")
        try:
            return CCrossedModule(
                g=g,
                h=h,
                boundary=CGroupMorphism(g, h, boundary, name="boundary"),
                action=CAction(h, g, action),
                weak_special=weak_special,
                name=name,
            )
        except MalformedTable as exc:
            raise ParseError(f"payload: {exc}") from exc
    if kind == "functor":
        _expect_keys(payload, {"source", "target", "f0", "f1"}, "payload")
        source = _resolve(payload["source"], resolver, "payload.source", CatGroup)
        target = _resolve(payload["target"], resolver, "payload.target", CatGroup)
        try:
            return CatGroupFunctor(
                source,
                target,
                _read_assoc(payload["f0"], 1, "payload.f0"),
                _read_assoc(payload["f1"], 1, "payload.f1"),
                name=name,
            )
        except MalformedTable as exc:
            raise ParseError(f"payload: {exc}") from exc
    if kind == "cm_morphism":
        _expect_keys(payload, {"source", "target", "f", "g"}, "payload")
        source = _resolve(payload["source"], resolver, "payload.source", CCrossedModule)
        target = _resolve(payload["target"], resolver, "payload.target", CCrossedModule)
        try:
            return CrossedModuleMorphism(
                source,
                target,
                CGroupMorphism(source.g, target.g, _read_assoc(payload["f"], 1, "payload.f")),
                CGroupMorphism(source.h, target.h, _read_assoc(payload["g"], 1, "payload.g")),
                name=name,
            )
        except MalformedTable as exc:
            raise ParseError(f"payload: {exc}") from exc
    raise ParseError(f"unknown kind {kind!r}")


def parse(text: str, resolver: Resolver | None = None) -> object:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("document is not a JSON object")
    return from_doc(doc, resolver)


def cyclic_table(n: int) -> tuple[list[str], dict[Pair, str]]:
    """The cyclic group of order n on string labels 0..n-1."""
    if n < 1:
        raise MalformedTable("cyclic order must be positive")
    elements = [str(i) for i in range(n)]
    add = {(str(a), str(b)): str((a + b) % n) for a in range(n) for b in range(n)}
    return elements, add


def gen_discrete(elements: list[str], add: dict[Pair, str], name: str = "discrete") -> CatGroup:
    """Discrete categorical group on a finite group: identity arrows only."""
    base = from_group(elements, add, name=name)
    arrows = {x: f"1_{x}" for x in base.elements}
    ident = dict(arrows)
    return CatGroup(
        objects=list(base.elements),
        arrows=list(arrows.values()),
        dom={arrows[x]: x for x in base.elements},
        cod={arrows[x]: x for x in base.elements},
        ident=ident,
        comp={(arrows[x], arrows[x]): arrows[x] for x in base.elements},
        obj_add=dict(base.add),
        arr_add={
            (arrows[x], arrows[y]): arrows[base.add[x, y]]
            for x in base.elements
            for y in base.elements
        },
        zero_obj=base.zero,
        alpha={
            (x, y, z): arrows[base.add[base.add[x, y], z]]
            for x in base.elements
            for y in base.elements
            for z in base.elements
        },
        lam=dict(arrows),
        rho=dict(arrows),
        neg_obj=dict(base.neg),
        eps={x: arrows[base.zero] for x in base.elements},
        delta={x: arrows[base.zero] for x in base.elements},
        neg_arr={arrows[x]: arrows[base.neg[x]] for x in base.elements},
        name=name,
    )


def gen_delooping(elements: list[str], add: dict[Pair, str], name: str = "delooping") -> CatGroup:
    """One-object categorical group on a group: composition and addition
    both given by the group table.  Valid only for abelian input (the
    interchange check fails otherwise)."""
    base = from_group(elements, add, name=name)
    obj = "0"
    one = base.zero
    return CatGroup(
        objects=[obj],
        arrows=list(base.elements),
        dom={a: obj for a in base.elements},
        cod={a: obj for a in base.elements},
        ident={obj: one},
        comp=dict(base.add),
        obj_add={(obj, obj): obj},
        arr_add=dict(base.add),
        zero_obj=obj,
        alpha={(obj, obj, obj): one},
        lam={obj: one},
        rho={obj: one},
        neg_obj={obj: obj},
        eps={obj: one},
        delta={obj: one},
        neg_arr=dict(base.neg),
        name=name,
    )


def gen_skeletal_cocycle(
    g_elements: list[str],
    g_add: dict[Pair, str],
    a_elements: list[str],
    a_add: dict[Pair, str],
    omega: dict[Triple, str],
    name: str = "skeletal",
) -> CatGroup:
    """Skeletal categorical group: objects a group G, endo-homs an
    abelian group A, associator given by a normalized 3-table omega.
    Validation passes exactly when omega is a 3-cocycle."""
    g = from_group(g_elements, g_add, name=f"{name}|objects")
    a = from_group(a_elements, a_add, name=f"{name}|homs")

    def arr(x: str, v: str) -> str:
        return f"{x}|{v}"

    for t in ((x, y, z) for x in g.elements for y in g.elements for z in g.elements):
        if t not in omega:
            raise MalformedTable(f"omega missing entry {t!r}")
        if omega[t] not in set(a.elements):
            raise MalformedTable(f"omega[{t!r}] is not a hom element")
        if a.zero != omega[t] and g.zero in t:
            raise MalformedTable(f"omega not normalized at {t!r}")
    arrows = [arr(x, v) for x in g.elements for v in a.elements]
    dom = {arr(x, v): x for x in g.elements for v in a.elements}
    comp = {
        (arr(x, v), arr(x, w)): arr(x, a.add[v, w])
        for x in g.elements
        for v in a.elements
        for w in a.elements
    }
    return CatGroup(
        objects=list(g.elements),
        arrows=arrows,
        dom=dom,
        cod=dict(dom),
        ident={x: arr(x, a.zero) for x in g.elements},
        comp=comp,
        obj_add=dict(g.add),
        arr_add={
            (arr(x, v), arr(y, w)): arr(g.add[x, y], a.add[v, w])
            for x in g.elements
            for v in a.elements
            for y in g.elements
            for w in a.elements
        },
        zero_obj=g.zero,
        alpha={
            (x, y, z): arr(g.add[g.add[x, y], z], omega[x, y, z])
            for x in g.elements
            for y in g.elements
            for z in g.elements
        },
        lam={x: arr(x, a.zero) for x in g.elements},
        rho={x: arr(x, a.zero) for x in g.elements},
        neg_obj=dict(g.neg),
        eps={x: arr(g.zero, a.neg[omega[x, g.neg[x], x]]) for x in g.elements},
        delta={x: arr(g.zero, a.zero) for x in g.elements},
        neg_arr={arr(x, v): arr(g.neg[x], a.neg[v]) for x in g.elements for v in a.elements},
        name=name,
    )


def standard_cocycle(n: int, value: int = 1) -> dict[Triple, str]:
    """The classical cyclic 3-cocycle on Z_n with Z_n coefficients:
    omega(x, y, z) = value * x * floor((y+z)/n) mod n."""
    return {
        (str(x), str(y), str(z)): str((value * x * ((y + z) // n)) % n)
        for x in range(n)
        for y in range(n)
        for z in range(n)
    }


def gen_brown_spencer(
    t_elements: list[str],
    t_add: dict[Pair, str],
    g_elements: list[str],
    g_add: dict[Pair, str],
    boundary: dict[str, str],
    action: dict[Pair, str],
    name: str = "brown_spencer",
) -> CatGroup:
    """Strict categorical group of a classical crossed module (T, G, d):
    objects G, arrows the semidirect pairs (g, t): g -> d(t)+g."""
    t_grp = from_group(t_elements, t_add, name=f"{name}|top")
    g_grp = from_group(g_elements, g_add, name=f"{name}|base")
    t_set, g_set = set(t_grp.elements), set(g_grp.elements)
    for t in t_grp.elements:
        if boundary.get(t) not in g_set:
            raise MalformedTable(f"boundary missing or bad at {t!r}")
    for g in g_grp.elements:
        for t in t_grp.elements:
            if action.get((g, t)) not in t_set:
                raise MalformedTable(f"action missing or bad at ({g!r},{t!r})")
    for t, s in ((t, s) for t in t_grp.elements for s in t_grp.elements):
        if boundary[t_grp.add[t, s]] != g_grp.add[boundary[t], boundary[s]]:
            raise InvalidAction(f"boundary is not a homomorphism at ({t!r},{s!r})")
    for t in t_grp.elements:
        if action[g_grp.zero, t] != t:
            raise InvalidAction(f"zero must act trivially, fails at {t!r}")
    for g in g_grp.elements:
        for h in g_grp.elements:
            for t in t_grp.elements:
                if action[g_grp.add[g, h], t] != action[g, action[h, t]]:
                    raise InvalidAction(f"action is not multiplicative at ({g!r},{h!r},{t!r})")
    for g in g_grp.elements:
        for t in t_grp.elements:
            for s in t_grp.elements:
                if action[g, t_grp.add[t, s]] != t_grp.add[action[g, t], action[g, s]]:
                    raise InvalidAction(f"action not by endomorphisms at ({g!r},{t!r},{s!r})")
    for g in g_grp.elements:
        for t in t_grp.elements:
            conj = g_grp.add[g, g_grp.add[boundary[t], g_grp.neg[g]]]
            if boundary[action[g, t]] != conj:
                raise InvalidAction(f"equivariance fails at ({g!r},{t!r})")
    for t in t_grp.elements:
        for s in t_grp.elements:
            peiffer = t_grp.add[t, t_grp.add[s, t_grp.neg[t]]]
            if action[boundary[t], s] != peiffer:
                raise InvalidAction(f"Peiffer identity fails at ({t!r},{s!r})")

    def arr(g: str, t: str) -> str:
        return f"{g}|{t}"

    pairs = [(g, t) for g in g_grp.elements for t in t_grp.elements]
    dom = {arr(g, t): g for g, t in pairs}
    cod = {arr(g, t): g_grp.add[boundary[t], g] for g, t in pairs}
    comp: dict[Pair, str] = {}
    for g2, t2 in pairs:
        for g1, t1 in pairs:
            if cod[arr(g1, t1)] == g2:
                comp[arr(g2, t2), arr(g1, t1)] = arr(g1, t_grp.add[t2, t1])
    ident = {g: arr(g, t_grp.zero) for g in g_grp.elements}
    return CatGroup(
        objects=list(g_grp.elements),
        arrows=[arr(g, t) for g, t in pairs],
        dom=dom,
        cod=cod,
        ident=ident,
        comp=comp,
        obj_add=dict(g_grp.add),
        arr_add={
            (arr(g, t), arr(h, s)): arr(g_grp.add[g, h], t_grp.add[t, action[g, s]])
            for g, t in pairs
            for h, s in pairs
        },
        zero_obj=g_grp.zero,
        alpha={
            (x, y, z): ident[g_grp.add[g_grp.add[x, y], z]]
            for x in g_grp.elements
            for y in g_grp.elements
            for z in g_grp.elements
        },
        lam=dict(ident),
        rho=dict(ident),
        neg_obj=dict(g_grp.neg),
        eps={x: ident[g_grp.zero] for x in g_grp.elements},
        delta={x: ident[g_grp.zero] for x in g_grp.elements},
        neg_arr={
            arr(g, t): arr(g_grp.neg[g], action[g_grp.neg[g], t_grp.neg[t]])
            for g, t in pairs
        },
        name=name,
    )


def corpus_catgroups() -> list[CatGroup]:
    z2, z2_add = cyclic_table(2)
    z4, z4_add = cyclic_table(4)
    dz2 = gen_discrete(z2, z2_add, name="DZ2")
    bz2 = gen_delooping(z2, z2_add, name="BZ2")
    skz2 = gen_skeletal_cocycle(z2, z2_add, z2, z2_add, standard_cocycle(2), name="SkZ2")
    bs = gen_brown_spencer(
        z2,
        z2_add,
        z4,
        z4_add,
        boundary={"0": "0", "1": "2"},
        action={(g, t): t for g in z4 for t in z2},
        name="BS",
    )
    return [dz2, bz2, skz2, bs]


def corpus_functors(cats: list[CatGroup]) -> list[CatGroupFunctor]:
    by_name = {c.name: c for c in cats}
    dz2, bz2, skz2, bs = by_name["DZ2"], by_name["BZ2"], by_name["SkZ2"], by_name["BS"]
    collapse = CatGroupFunctor(
        dz2, bz2, {"0": "0", "1": "0"}, {"1_0": "0", "1_1": "0"}, name="collapse"
    )
    embed = CatGroupFunctor(
        dz2, bs, {"0": "0", "1": "2"}, {"1_0": "0|0", "1_1": "2|0"}, name="embed"
    )
    flatten = CatGroupFunctor(
        bs,
        bz2,
        {x: "0" for x in bs.objects},
        {a: a.split("|")[1] for a in bs.arrows},
        name="flatten",
    )
    identities = [identity_functor(c) for c in (dz2, bz2, skz2, bs)]
    for t, label in zip(identities, ("id_DZ2", "id_BZ2", "id_SkZ2", "id_BS")):
        t.name = label
    return identities + [collapse, embed, flatten]


def corpus_modules() -> list[CCrossedModule]:
    z2, z2_add = cyclic_table(2)
    one = CGroup(["0"], {("0", "0"): "0"}, "0", {"0": "0"}, (("0",),), name="one")
    z2eq = from_group(z2, z2_add, name="Z2eq")
    m1 = CCrossedModule(
        g=one,
        h=z2eq,
        boundary=CGroupMorphism(one, z2eq, {"0": "0"}, name="const0"),
        action=trivial_action(z2eq, one),
        weak_special=frozenset({("0", "0")}),
        name="M1",
    )
    z2tot = CGroup(
        list(z2), dict(z2_add), "0", {"0": "0", "1": "1"}, (("0", "1"),), name="Z2tot"
    )
    trivial = CGroup(["0"], {("0", "0"): "0"}, "0", {"0": "0"}, (("0",),), name="one")
    m2 = CCrossedModule(
        g=z2tot,
        h=trivial,
        boundary=CGroupMorphism(z2tot, trivial, {"0": "0", "1": "0"}, name="const0"),
        action=trivial_action(trivial, z2tot),
        weak_special=frozenset({("0", "0"), ("1", "1")}),
        name="M2",
    )
    return [m1, m2]


def corpus_cm_morphisms(modules: list[CCrossedModule]) -> list[CrossedModuleMorphism]:
    by_name = {m.name: m for m in modules}
    m1, m2 = by_name["M1"], by_name["M2"]
    id_m1 = identity_cm(m1)
    id_m1.name = "id_M1"
    id_m2 = identity_cm(m2)
    id_m2.name = "id_M2"
    bridge = CrossedModuleMorphism(
        m1,
        m2,
        CGroupMorphism(m1.g, m2.g, {"0": "0"}),
        CGroupMorphism(m1.h, m2.h, {"0": "0", "1": "0"}),
        name="m1_to_m2",
    )
    return [id_m1, id_m2, bridge]


def default_corpus() -> Corpus:
    cats = corpus_catgroups()
    modules = corpus_modules()
    return Corpus(
        catgroups=cats,
        functors=corpus_functors(cats),
        modules=modules,
        cm_morphisms=corpus_cm_morphisms(modules),
    )


def write_corpus(directory: str | Path) -> list[str]:
    """Write the bundled corpus, one document per file plus a manifest.
    Returns the file names written."""
    base = Path(directory)
    base.mkdir(parents=True, exist_ok=True)
    corpus = default_corpus()
    manifest: dict = {"instances": [], "morphisms": []}
    written: list[str] = []

    def emit(obj: object, name: str) -> str:
        fname = f"{name.lower()}.doc"
        (base / fname).write_text(serialize(obj), encoding="utf-8")
        written.append(fname)
        return fname

    for c in corpus.catgroups:
        fname = emit(c, c.name)
        manifest["instances"].append({"name": c.name, "file": fname, "kind": "catgroup"})
    for x in corpus.modules:
        fname = emit(x, x.name)
        manifest["instances"].append({"name": x.name, "file": fname, "kind": "crossed_module"})
    for t in corpus.functors:
        fname = emit(t, t.name)
        manifest["morphisms"].append(
            {
                "name": t.name,
                "file": fname,
                "kind": "functor",
                "source": t.source.name,
                "target": t.target.name,
            }
        )
    for m in corpus.cm_morphisms:
        fname = emit(m, m.name)
        manifest["morphisms"].append(
            {
                "name": m.name,
                "file": fname,
                "kind": "cm_morphism",
                "source": m.source.name,
                "target": m.target.name,
            }
        )
    (base / "corpus.manifest").write_text(
        json.dumps(manifest, sort_keys=True, indent=2) + "\n", encoding="utf-8"
    )
    written.append("corpus.manifest")
    return written


def load_corpus(directory: str | Path) -> Corpus:
    """Load a corpus directory written by write_corpus (or by hand)."""
    base = Path(directory)
    manifest_path = base / "corpus.manifest"
    if not manifest_path.is_file():
        raise ParseError(f"no corpus.manifest in {base}")
    try:
        manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"corpus.manifest is not valid JSON: {exc}") from exc
    _expect_keys(manifest, {"instances", "morphisms"}, "manifest")
    corpus = Corpus()
    by_name: dict[str, object] = {}
    for i, entry in enumerate(manifest["instances"]):
        _expect_keys(entry, {"name", "file", "kind"}, f"manifest.instances[{i}]")
        obj = parse((base / entry["file"]).read_text(encoding="utf-8"))
        if entry["kind"] == "catgroup" and isinstance(obj, CatGroup):
            corpus.catgroups.append(obj)
        elif entry["kind"] == "crossed_module" and isinstance(obj, CCrossedModule):
            corpus.modules.append(obj)
        else:
            raise ParseError(f"manifest.instances[{i}]: unsupported kind {entry['kind']!r}")
        by_name[entry["name"]] = obj

    def resolver(name: str) -> object | None:
        return by_name.get(name)

    for i, entry in enumerate(manifest["morphisms"]):
        _expect_keys(
            entry, {"name", "file", "kind", "source", "target"}, f"manifest.morphisms[{i}]"
        )
        obj = parse((base / entry["file"]).read_text(encoding="utf-8"), resolver)
        if entry["kind"] == "functor" and isinstance(obj, CatGroupFunctor):
            corpus.functors.append(obj)
        elif entry["kind"] == "cm_morphism" and isinstance(obj, CrossedModuleMorphism):
            corpus.cm_morphisms.append(obj)
        else:
            raise ParseError(f"manifest.morphisms[{i}]: unsupported kind {entry['kind']!r}")
    return corpus
