"""Tests for Seifert data, the multiplicity solver, and the e-invariants."""

from fractions import Fraction

import pytest

from spincalc.errors import (
    CentralBehaviorError,
    DomainError,
    EnumerationCapError,
    InvalidSeifertDataError,
    MultiplicityError,
    TorsionBoundError,
)
from spincalc.exact_arith import ModZ
from spincalc.seifert import (
    POINCARE,
    EigenvalueProfile,
    FixedPointData,
    RepSpec,
    SeifertData,
    e_general,
    e_simple,
    einvariant_document,
    homology_sphere_obstruction,
    icosahedral_example,
    is_integral_homology_sphere,
    lefschetz_trace,
    multiplicity_solve,
    order_in_pi3,
    presentation,
    regular_increment,
    s_from_exponents,
    seifert_check_document,
    stabilized_e,
)


def test_seifert_data_validation():
    with pytest.raises(InvalidSeifertDataError):
        SeifertData(((0, 1),))
    with pytest.raises(InvalidSeifertDataError):
        SeifertData(((2, 4),))
    assert SeifertData(((1, 0), (3, 2))).a == 3


def test_poincare_is_a_homology_sphere():
    assert homology_sphere_obstruction(POINCARE) == 1
    assert is_integral_homology_sphere(POINCARE)


def test_other_obstruction_values():
    # the (2, 3, 7) Brieskorn sphere evaluates to -1
    brieskorn = SeifertData(((2, -1), (3, 1), (7, 1)))
    assert homology_sphere_obstruction(brieskorn) == -1
    assert is_integral_homology_sphere(brieskorn)
    not_sphere = SeifertData(((2, 1), (3, 1), (5, 1)))
    assert homology_sphere_obstruction(not_sphere) == 31
    assert not is_integral_homology_sphere(not_sphere)


def test_presentation_of_the_poincare_sphere():
    p = presentation(POINCARE)
    assert p.generators == ("h", "x1", "x2", "x3")
    assert p.relations == (
        "[h,x1] = 1",
        "[h,x2] = 1",
        "[h,x3] = 1",
        "x1*x2*x3 = 1",
        "x1^2 = h",
        "x2^3 = h^-1",
        "x3^5 = h^-1",
    )


def test_presentation_corner_cases():
    p = presentation(SeifertData(((1, 0),)))
    assert p.relations == ("[h,x1] = 1", "x1 = 1", "x1 = 1")
    empty = presentation(SeifertData(()))
    assert empty.generators == ("h",)
    assert empty.relations == ()


def test_lefschetz_trace():
    assert lefschetz_trace(0) == 2
    assert lefschetz_trace(2) == 0
    assert lefschetz_trace(4) == -2
    with pytest.raises(DomainError):
        lefschetz_trace(-1)


def test_fixed_point_traces():
    fp = FixedPointData(9, (4, 2, 4))
    assert fp.traces() == (-2, 0, -2)


def test_multiplicity_solver_hexagonal_case():
    # two conjugate sixth roots and -1, dimension 28, trace 2
    assert multiplicity_solve(6, 28, 2, (1, 3, 5)) == (10, 8, 10)


def test_multiplicity_solver_small_cases():
    # equal weights on all cube roots sum to zero
    assert multiplicity_solve(3, 18, 0, (0, 1, 2)) == (6, 6, 6)
    assert multiplicity_solve(2, 18, -2, (0, 1)) == (8, 10)
    assert multiplicity_solve(5, 18, -2, (0, 1, 2, 3, 4)) == (2, 4, 4, 4, 4)
    assert multiplicity_solve(4, 28, 0, (1, 3)) == (14, 14)
    assert multiplicity_solve(10, 28, 2, (1, 3, 5, 7, 9)) == (6, 6, 4, 6, 6)


def test_multiplicity_solver_exponents_are_normalized():
    assert multiplicity_solve(6, 28, 2, (7, 3, -1)) == (10, 8, 10)


def test_multiplicity_solver_forced_zero_orbits():
    # with real=True an exponent whose conjugate is excluded must vanish
    assert multiplicity_solve(5, 0, 0, (1,)) == (0,)
    with pytest.raises(MultiplicityError) as info:
        multiplicity_solve(5, 1, 0, (1,))
    assert info.value.solutions == ()


def test_multiplicity_solver_reports_ambiguity():
    with pytest.raises(MultiplicityError) as info:
        multiplicity_solve(6, 10, 0, (0, 2, 3, 4))
    assert set(info.value.solutions) == {(5, 0, 5, 0), (4, 2, 2, 2)}


def test_multiplicity_solver_no_solution():
    # zeta_5 + zeta_5^4 is irrational, so no nonzero real combination of
    # that pair alone is an integer
    with pytest.raises(MultiplicityError) as info:
        multiplicity_solve(5, 2, 0, (1, 4))
    assert info.value.solutions == ()


def test_multiplicity_solver_guards():
    with pytest.raises(DomainError):
        multiplicity_solve(0, 1, 0, (0,))
    with pytest.raises(DomainError):
        multiplicity_solve(3, -1, 0, (0,))
    with pytest.raises(DomainError):
        multiplicity_solve(3, 1, 0, ())
    with pytest.raises(EnumerationCapError):
        multiplicity_solve(50, 50, 0, tuple(range(50)), real=False)


def profile_multiset(profile):
    out = {}
    for s in profile.s_values:
        out[s] = out.get(s, 0) + 1
    return out


def test_example_one_structure():
    result = icosahedral_example(1)
    assert result.kind == "two_re_times_n_e"
    assert result.rep.dimension == 28
    assert result.rep.scalar_exponent == 14
    assert result.fixed_points.genus == 14
    assert result.fixed_points.counts == (2, 0, 0)
    assert result.fixed_points.traces() == (0, 2, 2)
    multisets = [profile_multiset(p) for p in result.rep.profiles]
    assert multisets[0] == {0: 14, 1: 14}
    assert multisets[1] == {0: 10, 1: 10, 2: 8}
    assert multisets[2] == {0: 6, 1: 6, 2: 6, 3: 4, 4: 6}
    assert result.value == ModZ.of(Fraction(1, 3))
    assert result.order is None
    assert result.order_constraint == (6, 12, 24)


def test_example_two_structure():
    result = icosahedral_example(2)
    assert result.kind == "e"
    assert result.rep.dimension == 18
    assert result.rep.scalar_exponent is None
    assert result.fixed_points.counts == (4, 2, 4)
    multisets = [profile_multiset(p) for p in result.rep.profiles]
    assert multisets[0] == {0: 8, 1: 10}
    assert multisets[1] == {0: 6, 1: 6, 2: 6}
    assert multisets[2] == {0: 2, 1: 4, 2: 4, 3: 4, 4: 4}
    assert result.value == ModZ.of(Fraction(1, 2))
    assert result.order == 2


def test_example_three_structure():
    result = icosahedral_example(3)
    assert result.kind == "e"
    assert result.rep.dimension == 10
    assert result.fixed_points.counts == (2, 4, 2)
    multisets = [profile_multiset(p) for p in result.rep.profiles]
    assert multisets[0] == {0: 5, 1: 5}
    assert multisets[1] == {0: 2, 1: 4, 2: 4}
    assert multisets[2] == {0: 2, 1: 2, 2: 2, 3: 2, 4: 2}
    assert result.value == ModZ.of(Fraction(-1, 12))
    assert result.value.residue == Fraction(11, 12)
    assert result.order == 12


def test_unknown_example_rejected():
    with pytest.raises(DomainError):
        icosahedral_example(4)


def per_fiber_simple_contribution(data, profile, j):
    a = data.a
    aj = data.pairs[j - 1][0]
    return -sum(Fraction(a) * s * s / (2 * aj * aj) for s in profile.s_values)


def per_fiber_general_contribution(data, profile, j):
    a = data.a
    aj = data.pairs[j - 1][0]
    total = Fraction(0)
    for sk in profile.s_values:
        for sl in profile.s_values:
            total -= Fraction(a) * (sk - sl) ** 2 / (2 * aj * aj)
    return total


def test_example_per_fiber_contributions():
    ex1 = icosahedral_example(1)
    general = [
        per_fiber_general_contribution(ex1.data, p, j)
        for j, p in enumerate(ex1.rep.profiles, start=1)
    ]
    assert general == [-1470, Fraction(-5000, 3), -1944]
    assert ModZ.of(sum(general)) == ex1.value

    ex2 = icosahedral_example(2)
    simple = [
        per_fiber_simple_contribution(ex2.data, p, j)
        for j, p in enumerate(ex2.rep.profiles, start=1)
    ]
    assert simple == [Fraction(-75, 2), -50, -72]
    assert ModZ.of(sum(simple)) == ex2.value

    ex3 = icosahedral_example(3)
    simple = [
        per_fiber_simple_contribution(ex3.data, p, j)
        for j, p in enumerate(ex3.rep.profiles, start=1)
    ]
    assert simple == [Fraction(-75, 4), Fraction(-100, 3), -36]
    assert ModZ.of(sum(simple)) == ex3.value


def test_e_simple_requires_trivial_center():
    ex1 = icosahedral_example(1)
    with pytest.raises(CentralBehaviorError):
        e_simple(ex1.data, ex1.rep)


def test_e_formulas_validate_profile_alignment():
    data = POINCARE
    good = icosahedral_example(3).rep
    with pytest.raises(DomainError):
        e_simple(data, RepSpec(10, None, good.profiles[:2]))
    shuffled = (good.profiles[1], good.profiles[0], good.profiles[2])
    fixed = tuple(
        EigenvalueProfile(j, p.s_values) for j, p in enumerate(shuffled, start=1)
    )
    # wrong fiber labels are rejected before relabeling
    with pytest.raises(DomainError):
        e_simple(data, RepSpec(10, None, shuffled))
    assert e_simple(data, RepSpec(10, None, fixed)) != icosahedral_example(3).value


def shift_profile(profiles, fiber, index, delta):
    out = []
    for p in profiles:
        if p.fiber == fiber:
            values = list(p.s_values)
            values[index] += delta
            out.append(EigenvalueProfile(p.fiber, tuple(values)))
        else:
            out.append(p)
    return tuple(out)


def test_e_simple_is_invariant_under_fiberwise_shifts():
    # replacing one s by s + a_j leaves the class in Q/Z unchanged
    for k in (2, 3):
        result = icosahedral_example(k)
        base = result.value
        for j, (aj, _) in enumerate(result.data.pairs, start=1):
            moved = shift_profile(result.rep.profiles, j, 0, aj)
            rep = RepSpec(result.rep.dimension, None, moved)
            assert e_simple(result.data, rep) == base


def test_e_general_is_invariant_under_common_shifts():
    result = icosahedral_example(1)
    base = result.value
    for j, (aj, _) in enumerate(result.data.pairs, start=1):
        # adding any constant to the whole profile changes no difference
        moved = tuple(
            EigenvalueProfile(p.fiber, tuple(s + 7 for s in p.s_values))
            if p.fiber == j
            else p
            for p in result.rep.profiles
        )
        rep = RepSpec(result.rep.dimension, 14, moved)
        assert e_general(result.data, rep) == base
        # and a single shift by a_j is also invisible
        moved = shift_profile(result.rep.profiles, j, 0, aj)
        rep = RepSpec(result.rep.dimension, 14, moved)
        assert e_general(result.data, rep) == base


def correction_term(data, profiles):
    a = data.a
    total = Fraction(0)
    for (aj, _), p in zip(data.pairs, profiles):
        total += Fraction(a) * sum(p.s_values) ** 2 / (aj * aj)
    return total


def test_general_formula_couples_to_simple_formula():
    # sum_{k,l} (s_k - s_l)^2 = 2N sum s^2 - 2 (sum s)^2 turns the general
    # formula into 2N times the simple one plus an explicit correction
    for k in (2, 3):
        result = icosahedral_example(k)
        rep0 = RepSpec(result.rep.dimension, 0, result.rep.profiles)
        lhs = e_general(result.data, rep0)
        correction = correction_term(result.data, result.rep.profiles)
        rhs = (2 * result.rep.dimension) * result.value + ModZ.of(correction)
        assert lhs == rhs


def test_bare_coherence_holds_only_when_the_correction_is_integral():
    # for the 18-dimensional example the correction term is an integer, so
    # the general value is just 2N times the simple one
    ex2 = icosahedral_example(2)
    rep0 = RepSpec(18, 0, ex2.rep.profiles)
    assert correction_term(ex2.data, ex2.rep.profiles).denominator == 1
    assert e_general(ex2.data, rep0) == (2 * 18) * ex2.value
    # for the 10-dimensional one it contributes exactly a half
    ex3 = icosahedral_example(3)
    rep0 = RepSpec(10, 0, ex3.rep.profiles)
    correction = correction_term(ex3.data, ex3.rep.profiles)
    assert ModZ.of(correction) == ModZ.of(Fraction(1, 2))
    assert e_general(ex3.data, rep0) == (2 * 10) * ex3.value + ModZ.of(
        Fraction(1, 2)
    )


def test_regular_increment():
    assert regular_increment() == ModZ.of(Fraction(-1, 3))


def test_regular_profile_contributions():
    # 60/40/24 copies of the regular characters of the three cyclic groups
    data = POINCARE
    expected = [-225, Fraction(-1000, 3), -432]
    from spincalc import icosa_group

    for j, ((aj, _), want) in enumerate(zip(data.pairs, expected), start=1):
        rp = icosa_group.regular_restriction_profile(aj)
        s_values = []
        for exp in sorted(rp.exponent_multiplicities):
            s_values.extend([Fraction(exp)] * rp.exponent_multiplicities[exp])
        p = EigenvalueProfile(j, tuple(s_values))
        assert per_fiber_simple_contribution(data, p, j) == want


def test_stabilized_e_walks_down_by_thirds():
    base = icosahedral_example(3).value
    for n in range(0, 11):
        expected = ModZ.of(Fraction(-1, 12) - Fraction(n, 3))
        assert stabilized_e(n) == expected
        assert stabilized_e(n) == base + n * regular_increment()
    assert stabilized_e(1).legible() == Fraction(-5, 12)
    assert stabilized_e(2).legible() == Fraction(1, 4)
    # the increment has order 3, so the walk has period 3
    assert stabilized_e(3) == stabilized_e(0)
    with pytest.raises(DomainError):
        stabilized_e(-1)


def test_order_in_pi3():
    assert order_in_pi3(ModZ.of(Fraction(-1, 12))) == 12
    assert order_in_pi3(ModZ.of(Fraction(1, 2))) == 2
    assert order_in_pi3(ModZ.of(0)) == 1
    with pytest.raises(TorsionBoundError):
        order_in_pi3(ModZ.of(Fraction(1, 25)))


def test_s_from_exponents():
    # x^a = h^{-b} relates the eigenvalue exponent t to s = (t + b r_h) / N
    assert s_from_exponents((3, 1), 28, 14, [14]) == [Fraction(1)]
    assert s_from_exponents((3, 1), 28, 14, [42]) == [Fraction(2)]
    assert s_from_exponents((3, 1), 28, 14, [70]) == [Fraction(3)]
    # exponents are residues mod N a_j
    assert s_from_exponents((3, 1), 28, 14, [-14]) == [Fraction(3)]
    assert s_from_exponents((2, -1), 18, 0, [18]) == [Fraction(1)]
    assert s_from_exponents((5, 1), 10, 0, [5]) == [Fraction(1, 2)]
    with pytest.raises(DomainError):
        s_from_exponents((3, 1), 0, 0, [1])


def test_seifert_check_document():
    doc = seifert_check_document({"pairs": [[2, -1], [3, 1], [5, 1]]})
    assert doc == {
        "pairs": [[2, -1], [3, 1], [5, 1]],
        "obstruction": "1",
        "is_integral_homology_sphere": True,
    }
    with pytest.raises(InvalidSeifertDataError):
        seifert_check_document({})


def example_two_document():
    return {
        "pairs": [[2, -1], [3, 1], [5, 1]],
        "N": 18,
        "center": "trivial",
        "profiles": [
            {"fiber": 1, "s_values": ["0"] * 8 + ["1"] * 10},
            {"fiber": 2, "s_values": ["0"] * 6 + ["1"] * 6 + ["2"] * 6},
            {
                "fiber": 3,
                "s_values": ["0"] * 2
                + ["1"] * 4
                + ["2"] * 4
                + ["3"] * 4
                + ["4"] * 4,
            },
        ],
    }


def test_einvariant_document_with_s_values():
    out = einvariant_document(example_two_document())
    assert out["kind"] == "e"
    assert out["e_invariant"]["residue"] == {"num": "1", "den": "2"}
    assert out["e_invariant"]["alias"] is None
    assert out["order"] == 2
    assert out["N"] == 18
    assert out["center"] == "trivial"


def test_einvariant_document_with_exponents():
    # the same bundle described through eigenvalue exponents t = N s
    doc = example_two_document()
    for profile in doc["profiles"]:
        profile["exponents"] = [
            18 * int(Fraction(s)) for s in profile.pop("s_values")
        ]
    out = einvariant_document(doc)
    assert out["e_invariant"]["residue"] == {"num": "1", "den": "2"}
    assert out["order"] == 2


def test_einvariant_document_scalar_center():
    result = icosahedral_example(1)
    doc = {
        "pairs": [[2, -1], [3, 1], [5, 1]],
        "N": 28,
        "center": {"scalar_exponent": 14},
        "profiles": [
            {"fiber": p.fiber, "s_values": [str(s) for s in p.s_values]}
            for p in result.rep.profiles
        ],
    }
    out = einvariant_document(doc)
    assert out["kind"] == "two_re_times_n_e"
    assert out["e_invariant"]["residue"] == {"num": "1", "den": "3"}
    assert out["order"] == 3


def test_einvariant_document_error_paths():
    doc = example_two_document()
    doc["profiles"] = doc["profiles"][:2]
    with pytest.raises(DomainError):
        einvariant_document(doc)
    doc = example_two_document()
    doc["profiles"][0]["fiber"] = 2
    with pytest.raises(DomainError):
        einvariant_document(doc)
    doc = example_two_document()
    doc["center"] = "mysterious"
    with pytest.raises(CentralBehaviorError):
        einvariant_document(doc)
    doc = example_two_document()
    doc["profiles"][0]["s_values"][0] = "one half"
    with pytest.raises(DomainError):
        einvariant_document(doc)
    doc = example_two_document()
    del doc["profiles"][0]["s_values"]
    with pytest.raises(DomainError):
        einvariant_document(doc)
