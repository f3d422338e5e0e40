from __future__ import annotations

import pytest

from catmod import (
    CAction,
    CCrossedModule,
    CGroup,
    CGroupMorphism,
    CrossedModuleMorphism,
    CSubset,
    NoLift,
    NonUniqueLift,
    NotPerfectOrNormal,
    NotSpecialPair,
    SourceTargetMismatch,
    compose_cm,
    cyclic_table,
    from_group,
    identity_cm,
    inclusion_crossed_module,
    is_cssc,
    is_special,
    is_strict,
    lift_from_surjection,
    relational_weak_special,
    special_lift,
    trivial_action,
    validate_action,
    validate_cm_morphism,
    validate_crossed_module,
)


def test_trivial_action_validates(z2eq, z4eq):
    assert validate_action(trivial_action(z4eq, z2eq)).ok


def test_negation_action_validates(z2eq):
    z3, z3_add = cyclic_table(3)
    z3eq = from_group(z3, z3_add)
    flip = {("0", a): a for a in z3} | {("1", a): z3eq.neg[a] for a in z3}
    assert validate_action(CAction(z2eq, z3eq, flip)).ok


def test_broken_action_reports_distributivity(z2eq):
    z3, z3_add = cyclic_table(3)
    z3eq = from_group(z3, z3_add)
    # send everything to a constant: not additive in the acted argument
    crush = {(b, a): "1" for b in z2eq.elements for a in z3}
    report = validate_action(CAction(z2eq, z3eq, crush))
    assert not report.ok
    assert any(f.name == "distributes-over-sum" for f in report.failures())


def test_corpus_modules_are_cssc(m1, m2):
    for x in (m1, m2):
        report = validate_crossed_module(x)
        assert report.ok, report.failures()
        assert is_cssc(x)


def test_endpoint_mismatch_is_rejected(m1, z4eq):
    with pytest.raises(SourceTargetMismatch):
        CCrossedModule(
            g=m1.g,
            h=z4eq,
            boundary=m1.boundary,
            action=m1.action,
            weak_special=m1.weak_special,
        )


def test_inclusion_module_on_even_subgroup(z4eq):
    module = inclusion_crossed_module(CSubset(z4eq, ("0", "2")), name="evens")
    assert validate_crossed_module(module).ok
    assert is_strict(module)
    assert is_special(module)
    # not cssc: the top congruence of an honest subgroup is equality
    assert not is_cssc(module)


def test_inclusion_requires_perfect_normal(x2tot):
    with pytest.raises(NotPerfectOrNormal):
        inclusion_crossed_module(CSubset(x2tot, ("0",)))


def test_special_lift_happy_path(m1):
    assert special_lift(m1, "0", "0") == "0"


def test_special_lift_rejects_non_special_pairs(m1):
    with pytest.raises(NotSpecialPair):
        special_lift(m1, "0", "1")


def _module(g, h, boundary, weak_special):
    return CCrossedModule(
        g=g,
        h=h,
        boundary=CGroupMorphism(g, h, boundary),
        action=trivial_action(h, g),
        weak_special=weak_special,
    )


def test_special_lift_non_unique(z2eq):
    one = CGroup(["0"], {("0", "0"): "0"}, "0", {"0": "0"}, (("0",),))
    total = frozenset((a, b) for a in z2eq.elements for b in z2eq.elements)
    x = _module(z2eq, one, {"0": "0", "1": "0"}, total)
    with pytest.raises(NonUniqueLift):
        special_lift(x, "0", "0")
    assert not is_special(x)


def test_special_lift_no_candidate():
    one = from_group(["e"], {("e", "e"): "e"})
    # base with two specially congruent elements, only one in the image
    fibered = lift_from_surjection(
        {"x0": "e", "x1": "e"}, one, {"e": "x0"},
        {(a, b): "x1" for a in ("x0", "x1") for b in ("x0", "x1")},
    )
    top = CGroup(["0"], {("0", "0"): "0"}, "0", {"0": "0"}, (("0",),))
    x = _module(top, fibered, {"0": "x0"}, frozenset({("0", "0")}))
    with pytest.raises(NoLift):
        special_lift(x, "0", "x1")


def test_relational_weak_special_is_the_coarse_bound(m1, m2):
    assert m1.weak_special == relational_weak_special(m1)
    # M2 carries strictly less than the coarse bound: its total top
    # congruence sits over a one-point base, yet its weak relation is
    # equality, and that distinction is what T consumes
    assert m2.weak_special < relational_weak_special(m2)


def test_weak_special_must_be_congruence_like(m2):
    # drop symmetry closure content: keep only one orientation of a pair
    broken = CCrossedModule(
        g=m2.g,
        h=m2.h,
        boundary=m2.boundary,
        action=m2.action,
        weak_special=frozenset({("0", "0")}),
        name="broken",
    )
    report = validate_crossed_module(broken)
    assert not report.ok
    assert any(f.name == "ws-reflexive" for f in report.failures())


def test_morphism_validation_and_composition(m1, m2):
    bridge = CrossedModuleMorphism(
        m1,
        m2,
        CGroupMorphism(m1.g, m2.g, {"0": "0"}),
        CGroupMorphism(m1.h, m2.h, {"0": "0", "1": "0"}),
        name="bridge",
    )
    assert validate_cm_morphism(bridge).ok
    both = compose_cm(bridge, identity_cm(m1))
    assert validate_cm_morphism(both).ok
    assert both.f.map == bridge.f.map and both.g.map == bridge.g.map
    with pytest.raises(SourceTargetMismatch):
        compose_cm(bridge, bridge)


def test_morphism_must_preserve_weak_special(m2, x2tot):
    one = CGroup(["0"], {("0", "0"): "0"}, "0", {"0": "0"}, (("0",),))
    # same shape as m2 but with the total weak relation upstream
    total = frozenset((a, b) for a in x2tot.elements for b in x2tot.elements)
    loose = CCrossedModule(
        g=x2tot,
        h=one,
        boundary=CGroupMorphism(x2tot, one, {"0": "0", "1": "0"}),
        action=trivial_action(one, x2tot),
        weak_special=total,
        name="loose",
    )
    assert validate_crossed_module(loose).ok
    down = CrossedModuleMorphism(
        loose,
        m2,
        CGroupMorphism(loose.g, m2.g, {"0": "0", "1": "1"}),
        CGroupMorphism(loose.h, m2.h, {"0": "0"}),
    )
    report = validate_cm_morphism(down)
    assert not report.ok
    assert any(f.name == "preserves-weak-special" for f in report.failures())
