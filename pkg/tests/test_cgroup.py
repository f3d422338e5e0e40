from __future__ import annotations

import pytest

from catmod import (
    CAction,
    CGroup,
    CGroupMorphism,
    ChoiceOutsideFiber,
    CSubset,
    ElementOutsideParent,
    NotAGroup,
    SourceTargetMismatch,
    c_image,
    c_kernel,
    compose_morphisms,
    cyclic_table,
    from_group,
    identity_morphism,
    inc,
    incs,
    induced_cgroup,
    is_c_isomorphism,
    is_connected,
    is_normal,
    is_perfect,
    lift_from_surjection,
    semidirect_product,
    semidirect_projection,
    special_closure,
    validate_cgroup,
    validate_morphism,
)

from oracles import naive_special_closure


def test_honest_groups_validate(z2eq, z4eq):
    for g in (z2eq, z4eq):
        report = validate_cgroup(g)
        assert report.ok, report.failures()


def test_total_relation_validates(x2tot):
    assert validate_cgroup(x2tot).ok
    assert is_connected(x2tot)


def test_rel_must_be_a_congruence():
    elements, add = cyclic_table(4)
    # {0,1},{2,3} is an equivalence relation but not compatible with +1
    g = CGroup(elements, add, "0", {str(i): str((4 - i) % 4) for i in range(4)},
               (("0", "1"), ("2", "3")))
    report = validate_cgroup(g)
    assert not report.ok
    assert any(f.name == "congruence-compatibility" for f in report.failures())


def test_from_group_rejects_non_groups():
    with pytest.raises(NotAGroup):
        from_group(["0", "1"], {("0", "0"): "0"})
    # idempotent table: no inverses
    with pytest.raises(NotAGroup):
        from_group(["0", "1"], {(a, b): a for a in "01" for b in "01"})


def test_special_closure_on_a_group_is_equality(z4eq):
    closure = special_closure(z4eq)
    assert closure == frozenset((x, x) for x in z4eq.elements)


def test_special_closure_matches_naive_oracle(z4eq, x2tot):
    for g in (z4eq, x2tot):
        assert special_closure(g) == naive_special_closure(
            list(g.elements), g.add, g.zero, g.neg
        )


def test_special_validation_demands_axiom_pairs(z2eq):
    g = CGroup(
        list(z2eq.elements),
        dict(z2eq.add),
        z2eq.zero,
        dict(z2eq.neg),
        z2eq.rel,
        special=frozenset({("0", "0")}),
    )
    report = validate_cgroup(g)
    assert not report.ok
    names = {f.name for f in report.failures()}
    assert "special-reflexive" in names or "special-contains-axioms" in names


def test_rep_and_block(x2tot):
    assert x2tot.rep("1") == "0"
    assert set(x2tot.block("1")) == {"0", "1"}
    assert x2tot.related("0", "1")


def test_morphism_validation(z2eq, z4eq):
    double = CGroupMorphism(z2eq, z4eq, {"0": "0", "1": "2"}, name="double")
    assert validate_morphism(double).ok
    skew = CGroupMorphism(z2eq, z4eq, {"0": "0", "1": "1"}, name="skew")
    report = validate_morphism(skew)
    assert not report.ok
    assert any(f.name == "additive" for f in report.failures())


def test_morphism_composition_endpoints(z2eq, z4eq):
    double = CGroupMorphism(z2eq, z4eq, {"0": "0", "1": "2"})
    with pytest.raises(SourceTargetMismatch):
        compose_morphisms(double, double)
    both = compose_morphisms(identity_morphism(z4eq), double)
    assert both.map == double.map


def test_c_isomorphism_depends_on_rel(z2eq, x2tot):
    one = from_group(["0"], {("0", "0"): "0"}, name="one")
    collapse_eq = CGroupMorphism(z2eq, one, {"0": "0", "1": "0"})
    collapse_tot = CGroupMorphism(x2tot, one, {"0": "0", "1": "0"})
    pick = lambda tgt: CGroupMorphism(one, tgt, {"0": "0"})
    assert not is_c_isomorphism(collapse_eq, pick(z2eq))
    assert is_c_isomorphism(collapse_tot, pick(x2tot))


def test_subset_membership(z4eq, x2tot):
    evens = CSubset(z4eq, ("0", "2"))
    assert inc("0", evens) and not inc("1", evens)
    assert incs(CSubset(z4eq, ("0",)), evens)
    with pytest.raises(ElementOutsideParent):
        CSubset(z4eq, ("5",))
    # up to a total relation everything is a member
    assert inc("1", CSubset(x2tot, ("0",)))


def test_perfect_and_normal(z4eq, x2tot):
    evens = CSubset(z4eq, ("0", "2"))
    assert is_perfect(evens) and is_normal(evens)
    assert not is_perfect(CSubset(x2tot, ("0",)))


def test_kernel_and_image(z4eq, z2eq):
    fold = CGroupMorphism(z4eq, z2eq, {str(i): str(i % 2) for i in range(4)})
    assert set(c_kernel(fold).members) == {"0", "2"}
    double = CGroupMorphism(z2eq, z4eq, {"0": "0", "1": "2"})
    assert set(c_image(double).members) == {"0", "2"}


def test_induced_cgroup(z4eq):
    evens = induced_cgroup(CSubset(z4eq, ("0", "2")), name="2Z4")
    assert validate_cgroup(evens).ok
    assert evens.add["2", "2"] == "0"
    with pytest.raises(ElementOutsideParent):
        induced_cgroup(CSubset(z4eq, ("0", "1")))


def test_semidirect_product_trivial_action(z2eq):
    act = CAction(z2eq, z2eq, {(b, a): a for b in z2eq.elements for a in z2eq.elements})
    klein = semidirect_product(z2eq, z2eq, act, name="V4")
    assert validate_cgroup(klein).ok
    assert len(klein.elements) == 4
    assert klein.add[klein.zero, klein.zero] == klein.zero
    proj = semidirect_projection(klein, z2eq)
    assert validate_morphism(proj).ok


def test_semidirect_product_twisted_action(z2eq):
    z3, z3_add = cyclic_table(3)
    z3eq = from_group(z3, z3_add, name="Z3eq")
    flip = {("0", a): a for a in z3} | {("1", a): z3eq.neg[a] for a in z3}
    s3 = semidirect_product(z2eq, z3eq, CAction(z2eq, z3eq, flip), name="S3")
    assert validate_cgroup(s3).ok
    assert len(s3.elements) == 6
    # nonabelian: (1,0)+(0,1) versus (0,1)+(1,0)
    assert s3.add["(1,0)", "(0,1)"] != s3.add["(0,1)", "(1,0)"]


def test_lift_from_surjection_builds_fiber_congruence():
    one = from_group(["e"], {("e", "e"): "e"}, name="one")
    q_map = {"x0": "e", "x1": "e"}
    lifted = lift_from_surjection(
        q_map, one, {"e": "x0"}, {(a, b): "x1" for a in q_map for b in q_map}
    )
    assert validate_cgroup(lifted).ok
    assert is_connected(lifted)
    # unit laws only hold up to the fiber relation, so the special
    # closure merges the fiber
    assert ("x0", "x1") in special_closure(lifted)
    assert special_closure(lifted) == naive_special_closure(
        list(lifted.elements), lifted.add, lifted.zero, lifted.neg
    )


def test_lift_from_surjection_rejects_bad_choices(z2eq):
    q_map = {"x0": "0", "x1": "1"}
    section = {"0": "x0", "1": "x1"}
    with pytest.raises(ChoiceOutsideFiber):
        lift_from_surjection({"x0": "0"}, z2eq, section, {})
    bad_choice = {(a, b): "x0" for a in q_map for b in q_map}
    with pytest.raises(ChoiceOutsideFiber):
        lift_from_surjection(q_map, z2eq, section, bad_choice)
