"""Comparison morphisms between an instance and its round-trip image,
and the executable verification that both round trips are identities.

Both directions are checked as exact table equalities, never up to
isomorphism: a failure is reported with a witness and left alone.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .catgroup import (
    CatGroup,
    CatGroupFunctor,
    arrow_inverses,
    coherence_diagnostic,
    compose_functors,
    identity_functor,
    validate_catgroup,
    validate_functor,
)
from .cgroup import CGroupMorphism, Pair
from .crossmod import (
    CCrossedModule,
    CrossedModuleMorphism,
    compose_cm,
    identity_cm,
    is_cssc,
    special_lift,
    validate_cm_morphism,
    validate_crossed_module,
)
from .functors import GArrow, L0, L1, T0, T1, TCatGroup
from .report import CheckResult


@dataclass
class RoundTripReport:
    """Outcome of one round-trip verification."""

    instance: str
    direction: str
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, name: str, passed: bool, witness: str = "") -> bool:
        self.checks.append(CheckResult(name, passed, witness if not passed else ""))
        return passed

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def __str__(self) -> str:
        status = "ok" if self.ok else "FAIL"
        lines = [f"[{status}] {self.direction} round trip: {self.instance}"]
        lines.extend(f"  {c}" for c in self.failures())
        return "\n".join(lines)

    def to_payload(self) -> dict:
        return {
            "instance": self.instance,
            "direction": self.direction,
            "checks": [{"name": c.name, "passed": c.passed, "witness": c.witness} for c in self.checks],
        }


def chosen_special_section(c: CatGroup) -> dict[Pair, str]:
    """First special isomorphism reached per object pair, breadth-first
    from the generators in a fixed order (identities, then the coherence
    components, then inverses, composites, and sums)."""
    inv = arrow_inverses(c)
    queue: list[str] = []
    seen: set[str] = set()

    def push(a: str | None) -> None:
        if a is not None and a not in seen:
            seen.add(a)
            queue.append(a)

    for x in sorted(c.objects):
        push(c.ident[x])
    for key in sorted(c.alpha):
        push(c.alpha[key])
    for table in (c.lam, c.rho, c.eps, c.delta):
        for x in sorted(c.objects):
            push(table[x])
    section: dict[Pair, str] = {}
    idx = 0
    while idx < len(queue):
        a = queue[idx]
        idx += 1
        site = (c.dom[a], c.cod[a])
        if site not in section:
            section[site] = a
        push(inv[a])
        for b in list(queue):
            push(c.comp.get((a, b)))
            push(c.comp.get((b, a)))
            push(c.arr_add[a, b])
            push(c.arr_add[b, a])
    return section


def build_P(c: CatGroup, tcat: TCatGroup | None = None) -> CatGroupFunctor:
    """The comparison functor from an instance into its rebuild: identity
    on objects; an arrow f maps to the canonical arrow whose middle is f
    rebased to the zero object."""
    if tcat is None:
        tcat = T0(L0(c))
    x = tcat.module
    inv = arrow_inverses(c)
    f1: dict[str, str] = {}
    for f in c.arrows:
        d = c.dom[f]
        rebased = c.comp.get((c.arr_add[f, c.neg_arr[c.ident[d]]], inv[c.delta[d]]))
        f1[f] = tcat.id_of(GArrow(d, c.cod[f], x.w_rep(rebased)))
    return CatGroupFunctor(c, tcat.cat, {o: o for o in c.objects}, f1, name=f"P_{c.name or 'C'}")


def build_F(c: CatGroup, tcat: TCatGroup | None = None) -> CatGroupFunctor:
    """The comparison functor from the rebuild back to the instance:
    identity on objects; a canonical arrow is evaluated by adding the
    identity of its domain to its middle and closing with the chosen
    special isomorphism into its codomain."""
    if tcat is None:
        tcat = T0(L0(c))
    inv = arrow_inverses(c)
    section = chosen_special_section(c)
    f1: dict[str, str] = {}
    for aid, a in tcat.garrows.items():
        lifted = c.comp.get((c.arr_add[a.c, c.ident[a.dom]], inv[c.lam[a.dom]]))
        theta = section.get((c.obj_add[c.cod[a.c], a.dom], a.cod))
        value = c.comp.get((theta, lifted)) if theta is not None and lifted is not None else None
        if value is None:
            raise ValueError(f"no evaluation for rebuilt arrow {aid!r}")
        f1[aid] = value
    return CatGroupFunctor(tcat.cat, c, {o: o for o in c.objects}, f1, name=f"F_{c.name or 'C'}")


def _table_diff(label: str, left: dict, right: dict) -> str:
    for k in left:
        if left[k] != right.get(k):
            return f"{label}[{k!r}]: {left[k]!r} vs {right.get(k)!r}"
    return ""


def verify_TL(c: CatGroup, tcat: TCatGroup | None = None) -> RoundTripReport:
    """Both composites of the comparison functors are identities, as
    exact table equalities."""
    if tcat is None:
        tcat = T0(L0(c))
    p = build_P(c, tcat)
    f = build_F(c, tcat)
    report = RoundTripReport(c.name or "catgroup", "TL")
    fp = compose_functors(f, p)
    witness = _table_diff("objects", fp.f0, {o: o for o in c.objects})
    report.add("F-after-P-objects-identity", not witness, witness)
    witness = _table_diff("arrows", fp.f1, {a: a for a in c.arrows})
    report.add("F-after-P-arrows-identity", not witness, witness)
    pf = compose_functors(p, f)
    witness = _table_diff("objects", pf.f0, {o: o for o in tcat.cat.objects})
    report.add("P-after-F-objects-identity", not witness, witness)
    witness = _table_diff("arrows", pf.f1, {a: a for a in tcat.cat.arrows})
    report.add("P-after-F-arrows-identity", not witness, witness)
    return report


def verify_TL_naturality(
    t: CatGroupFunctor,
    src_mod: CCrossedModule | None = None,
    src_tcat: TCatGroup | None = None,
    tgt_mod: CCrossedModule | None = None,
    tgt_tcat: TCatGroup | None = None,
) -> RoundTripReport:
    """The comparison square: rebuilding after mapping equals mapping the
    rebuild, arrow by arrow."""
    src_mod = src_mod if src_mod is not None else L0(t.source)
    tgt_mod = tgt_mod if tgt_mod is not None else L0(t.target)
    src_tcat = src_tcat if src_tcat is not None else T0(src_mod)
    tgt_tcat = tgt_tcat if tgt_tcat is not None else T0(tgt_mod)
    rebuilt = T1(L1(t, src_mod, tgt_mod), src_tcat, tgt_tcat)
    left = compose_functors(build_P(t.target, tgt_tcat), t)
    right = compose_functors(rebuilt, build_P(t.source, src_tcat))
    report = RoundTripReport(t.name or "functor", "TL")
    witness = _table_diff("objects", left.f0, right.f0)
    report.add("naturality-objects", not witness, witness)
    witness = _table_diff("arrows", left.f1, right.f1)
    report.add("naturality-arrows", not witness, witness)
    return report


def build_phi(
    x: CCrossedModule,
    tcat: TCatGroup | None = None,
    lt_mod: CCrossedModule | None = None,
) -> CrossedModuleMorphism:
    """Comparison morphism into the round trip: each top element c maps
    to the canonical arrow from zero to boundary(c) it carries."""
    if tcat is None:
        tcat = T0(x)
    if lt_mod is None:
        lt_mod = L0(tcat.cat)
    f_map = {
        c: tcat.id_of(GArrow(x.h.zero, x.boundary.map[c], x.w_rep(c)))
        for c in x.g.elements
    }
    f = CGroupMorphism(x.g, lt_mod.g, f_map, name="phi|top")
    g = CGroupMorphism(x.h, lt_mod.h, {r: r for r in x.h.elements}, name="phi|base")
    return CrossedModuleMorphism(x, lt_mod, f, g, name=f"phi_{x.name or 'X'}")


def build_psi(
    x: CCrossedModule,
    tcat: TCatGroup | None = None,
    lt_mod: CCrossedModule | None = None,
) -> CrossedModuleMorphism:
    """Comparison morphism out of the round trip: each zero-based arrow
    maps to the unique lift of its middle over its codomain."""
    if tcat is None:
        tcat = T0(x)
    if lt_mod is None:
        lt_mod = L0(tcat.cat)
    f_map = {}
    for aid in lt_mod.g.elements:
        a = tcat.garrows[aid]
        f_map[aid] = special_lift(x, a.c, a.cod)
    f = CGroupMorphism(lt_mod.g, x.g, f_map, name="psi|top")
    g = CGroupMorphism(lt_mod.h, x.h, {r: r for r in x.h.elements}, name="psi|base")
    return CrossedModuleMorphism(lt_mod, x, f, g, name=f"psi_{x.name or 'X'}")


def verify_LT(x: CCrossedModule, tcat: TCatGroup | None = None) -> RoundTripReport:
    """Both composites of the module comparison morphisms are exact
    identities."""
    if tcat is None:
        tcat = T0(x)
    lt_mod = L0(tcat.cat)
    phi = build_phi(x, tcat, lt_mod)
    psi = build_psi(x, tcat, lt_mod)
    report = RoundTripReport(x.name or "module", "LT")

    bad = next((c for c in x.g.elements if psi.f.map[phi.f.map[c]] != c), None)
    report.add("psi-after-phi-top-identity", bad is None, f"c={bad}" if bad else "")
    bad = next((r for r in x.h.elements if psi.g.map[phi.g.map[r]] != r), None)
    report.add("psi-after-phi-base-identity", bad is None, f"r={bad}" if bad else "")
    bad = next((a for a in lt_mod.g.elements if phi.f.map[psi.f.map[a]] != a), None)
    report.add("phi-after-psi-top-identity", bad is None, f"arrow={bad}" if bad else "")
    bad = next((r for r in lt_mod.h.elements if phi.g.map[psi.g.map[r]] != r), None)
    report.add("phi-after-psi-base-identity", bad is None, f"r={bad}" if bad else "")
    return report


def verify_LT_naturality(
    m: CrossedModuleMorphism,
    src_tcat: TCatGroup | None = None,
    tgt_tcat: TCatGroup | None = None,
) -> RoundTripReport:
    """Comparison squares for a module morphism, on both components of
    both comparison morphisms."""
    x, y = m.source, m.target
    src_tcat = src_tcat if src_tcat is not None else T0(x)
    tgt_tcat = tgt_tcat if tgt_tcat is not None else T0(y)
    src_lt = L0(src_tcat.cat)
    tgt_lt = L0(tgt_tcat.cat)
    rebuilt = L1(T1(m, src_tcat, tgt_tcat), src_lt, tgt_lt)
    phi_x = build_phi(x, src_tcat, src_lt)
    phi_y = build_phi(y, tgt_tcat, tgt_lt)
    psi_x = build_psi(x, src_tcat, src_lt)
    psi_y = build_psi(y, tgt_tcat, tgt_lt)
    report = RoundTripReport(m.name or "module morphism", "LT")

    bad = next(
        (c for c in x.g.elements if phi_y.f.map[m.f.map[c]] != rebuilt.f.map[phi_x.f.map[c]]),
        None,
    )
    report.add("phi-square-top", bad is None, f"c={bad}" if bad else "")
    bad = next(
        (r for r in x.h.elements if phi_y.g.map[m.g.map[r]] != rebuilt.g.map[phi_x.g.map[r]]),
        None,
    )
    report.add("phi-square-base", bad is None, f"r={bad}" if bad else "")
    bad = next(
        (a for a in src_lt.g.elements if m.f.map[psi_x.f.map[a]] != psi_y.f.map[rebuilt.f.map[a]]),
        None,
    )
    report.add("psi-square-top", bad is None, f"arrow={bad}" if bad else "")
    bad = next(
        (r for r in src_lt.h.elements if m.g.map[psi_x.g.map[r]] != psi_y.g.map[rebuilt.g.map[r]]),
        None,
    )
    report.add("psi-square-base", bad is None, f"r={bad}" if bad else "")
    return report


@dataclass
class Corpus:
    """Named instances and morphisms for a full verification run."""

    catgroups: list[CatGroup] = field(default_factory=list)
    functors: list[CatGroupFunctor] = field(default_factory=list)
    modules: list[CCrossedModule] = field(default_factory=list)
    cm_morphisms: list[CrossedModuleMorphism] = field(default_factory=list)


def _functor_diff(a: CatGroupFunctor, b: CatGroupFunctor) -> str:
    return _table_diff("objects", a.f0, b.f0) or _table_diff("arrows", a.f1, b.f1)


def _cm_diff(a: CrossedModuleMorphism, b: CrossedModuleMorphism) -> str:
    return _table_diff("top", a.f.map, b.f.map) or _table_diff("base", a.g.map, b.g.map)


def _check_payload(name: str, passed: bool, witness: str = "") -> dict:
    return {"name": name, "passed": passed, "witness": witness if not passed else ""}


def _catgroup_entry(c: CatGroup) -> tuple[dict, tuple | None]:
    entry: dict = {"name": c.name, "kind": "catgroup", "checks": []}
    v = validate_catgroup(c)
    entry["validated"] = v.ok
    if not v.ok:
        entry["checks"] = [
            _check_payload(f"validate:{r.name}", r.passed, r.witness) for r in v.failures()
        ]
        return entry, None
    module = L0(c)
    tcat = T0(module)
    mv = validate_crossed_module(module)
    entry["checks"].append(_check_payload("flattening-is-valid-module", mv.ok, str(mv.failures()[:1])))
    entry["checks"].append(_check_payload("flattening-is-cssc", is_cssc(module)))
    tv = validate_catgroup(tcat.cat, max_arrows=max(64, len(tcat.cat.arrows)))
    entry["checks"].append(_check_payload("rebuild-validates", tv.ok, str(tv.failures()[:1])))
    multi = {site: isos for site, isos in coherence_diagnostic(tcat.cat).items() if len(isos) > 1}
    entry["checks"].append(
        _check_payload("rebuild-parallel-special-isos-unique", not multi, str(sorted(multi)[:3]))
    )
    for check in verify_TL(c, tcat).checks:
        entry["checks"].append(_check_payload(check.name, check.passed, check.witness))
    for check in verify_LT(module, tcat).checks:
        entry["checks"].append(_check_payload(f"flattening:{check.name}", check.passed, check.witness))
    lt_id = L1(identity_functor(c), module, module)
    witness = _cm_diff(lt_id, identity_cm(module))
    entry["checks"].append(_check_payload("L-preserves-identity", not witness, witness))
    t_id = T1(identity_cm(module), tcat, tcat)
    witness = _functor_diff(t_id, identity_functor(tcat.cat))
    entry["checks"].append(_check_payload("T-preserves-identity", not witness, witness))
    return entry, (module, tcat)


def _module_entry(x: CCrossedModule) -> dict:
    entry: dict = {"name": x.name, "kind": "module", "checks": []}
    v = validate_crossed_module(x)
    entry["validated"] = v.ok and is_cssc(x)
    if not entry["validated"]:
        entry["checks"] = [
            _check_payload(f"validate:{r.name}", r.passed, r.witness) for r in v.failures()
        ]
        if v.ok:
            entry["checks"].append(_check_payload("is-cssc", False))
        return entry
    tcat = T0(x)
    tv = validate_catgroup(tcat.cat, max_arrows=max(64, len(tcat.cat.arrows)))
    entry["checks"].append(_check_payload("rebuild-validates", tv.ok, str(tv.failures()[:1])))
    for check in verify_LT(x, tcat).checks:
        entry["checks"].append(_check_payload(check.name, check.passed, check.witness))
    return entry


def verify_equivalence(corpus: Corpus, jobs: int = 1) -> dict:
    """Run the full verification suite over a corpus and return a
    machine-readable summary.  Instances that fail validation are
    reported and skipped; nothing is ever repaired."""
    caches: dict[int, tuple[CCrossedModule, TCatGroup]] = {}
    instance_entries: list[dict] = []
    if jobs > 1 and corpus.catgroups:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_catgroup_entry, corpus.catgroups))
    else:
        results = [_catgroup_entry(c) for c in corpus.catgroups]
    for c, (entry, cache) in zip(corpus.catgroups, results):
        instance_entries.append(entry)
        if cache is not None:
            caches[id(c)] = cache

    if jobs > 1 and corpus.modules:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            module_entries = list(pool.map(_module_entry, corpus.modules))
    else:
        module_entries = [_module_entry(x) for x in corpus.modules]

    functor_entries: list[dict] = []
    flattened: dict[int, CrossedModuleMorphism] = {}
    for t in corpus.functors:
        entry: dict = {"name": t.name, "kind": "functor", "checks": []}
        v = validate_functor(t)
        entry["validated"] = v.ok
        if not v.ok:
            entry["checks"] = [
                _check_payload(f"validate:{r.name}", r.passed, r.witness) for r in v.failures()
            ]
            functor_entries.append(entry)
            continue
        src = caches.get(id(t.source))
        tgt = caches.get(id(t.target))
        if src is None or tgt is None:
            entry["checks"].append(
                _check_payload("endpoints-in-corpus", False, "source or target not a validated instance")
            )
            functor_entries.append(entry)
            continue
        nat = verify_TL_naturality(t, src[0], src[1], tgt[0], tgt[1])
        for check in nat.checks:
            entry["checks"].append(_check_payload(check.name, check.passed, check.witness))
        lt = L1(t, src[0], tgt[0])
        mv = validate_cm_morphism(lt)
        entry["checks"].append(_check_payload("flattened-morphism-validates", mv.ok, str(mv.failures()[:1])))
        nat_lt = verify_LT_naturality(lt, src[1], tgt[1])
        for check in nat_lt.checks:
            entry["checks"].append(_check_payload(f"flattened:{check.name}", check.passed, check.witness))
        flattened[id(t)] = lt
        functor_entries.append(entry)

    law_checks: list[dict] = []
    for t2 in corpus.functors:
        for t1 in corpus.functors:
            if t1.target is not t2.source or id(t1) not in flattened or id(t2) not in flattened:
                continue
            pair = f"{t2.name}*{t1.name}"
            src = caches[id(t1.source)]
            mid = caches[id(t1.target)]
            tgt = caches[id(t2.target)]
            composite = L1(compose_functors(t2, t1), src[0], tgt[0])
            witness = _cm_diff(composite, compose_cm(flattened[id(t2)], flattened[id(t1)]))
            law_checks.append(_check_payload(f"L-preserves-composition({pair})", not witness, witness))
            left = T1(compose_cm(flattened[id(t2)], flattened[id(t1)]), src[1], tgt[1])
            right = compose_functors(
                T1(flattened[id(t2)], mid[1], tgt[1]), T1(flattened[id(t1)], src[1], mid[1])
            )
            witness = _functor_diff(left, right)
            law_checks.append(_check_payload(f"T-preserves-composition({pair})", not witness, witness))

    morphism_entries: list[dict] = []
    for m in corpus.cm_morphisms:
        entry = {"name": m.name, "kind": "module morphism", "checks": []}
        v = validate_cm_morphism(m)
        entry["validated"] = v.ok
        if not v.ok:
            entry["checks"] = [
                _check_payload(f"validate:{r.name}", r.passed, r.witness) for r in v.failures()
            ]
            morphism_entries.append(entry)
            continue
        nat = verify_LT_naturality(m)
        for check in nat.checks:
            entry["checks"].append(_check_payload(check.name, check.passed, check.witness))
        morphism_entries.append(entry)

    def entry_ok(e: dict) -> bool:
        return bool(e.get("validated", True)) and all(ch["passed"] for ch in e["checks"])

    all_entries = instance_entries + module_entries + functor_entries + morphism_entries
    summary = {
        "instances": sorted(instance_entries, key=lambda e: e["name"]),
        "modules": sorted(module_entries, key=lambda e: e["name"]),
        "functors": sorted(functor_entries, key=lambda e: e["name"]),
        "morphisms": sorted(morphism_entries, key=lambda e: e["name"]),
        "laws": law_checks,
        "ok": all(entry_ok(e) for e in all_entries) and all(ch["passed"] for ch in law_checks),
    }
    return summary
