import json
import random

import pytest

from circleact.gradedtop import (
    Family,
    GradedGroup,
    IntMatrix,
    OrbitModel,
    check_highly_connected,
    cokernel,
    divisibility_transfer,
    gysin_total_space,
    kernel_rank,
    smith_normal_form,
    standard_orbit_model,
)
from circleact.selftest import minor_gcd_invariant_factors


def test_matrix_validation():
    with pytest.raises(ValueError):
        IntMatrix(2, 2, ((1, 2),))
    with pytest.raises(ValueError):
        IntMatrix(1, 2, ((1,),))


def test_matrix_constructors():
    assert IntMatrix.identity(2).entries == ((1, 0), (0, 1))
    assert IntMatrix.zeros(2, 3).is_zero()
    assert IntMatrix.from_rows([[1, 2]]).cols == 2
    assert IntMatrix.from_rows([], cols=3) == IntMatrix.zeros(0, 3)


def test_snf_examples():
    assert smith_normal_form(IntMatrix.identity(2)).invariant_factors == (1, 1)
    assert smith_normal_form(IntMatrix.from_rows([[2, 0], [0, 3]])).invariant_factors == (1, 6)
    zero = smith_normal_form(IntMatrix.zeros(2, 3))
    assert zero.invariant_factors == () and zero.rank == 0


def test_snf_known_matrix():
    mat = IntMatrix.from_rows(
        [[12, 6, 4, 8], [3, 9, 6, 12], [2, 16, 14, 28], [20, 10, 10, 20]]
    )
    got = smith_normal_form(mat)
    assert got.invariant_factors == (1, 10, 30)
    assert got.rank == 3


def test_snf_empty_shapes():
    assert smith_normal_form(IntMatrix.zeros(0, 4)).rank == 0
    assert smith_normal_form(IntMatrix.zeros(4, 0)).rank == 0


def test_snf_divisibility_chain_random():
    rng = random.Random(7)
    for _ in range(200):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        mat = IntMatrix.from_rows(
            [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        )
        factors = smith_normal_form(mat).invariant_factors
        assert all(d >= 1 for d in factors)
        assert all(factors[i + 1] % factors[i] == 0 for i in range(len(factors) - 1))


def test_snf_against_minor_gcds_random():
    rng = random.Random(8)
    for _ in range(200):
        mat = IntMatrix.from_rows(
            [[rng.randint(-5, 5) for _ in range(3)] for _ in range(3)]
        )
        assert smith_normal_form(mat).invariant_factors == minor_gcd_invariant_factors(mat)


def test_kernel_and_cokernel():
    diag = IntMatrix.from_rows([[2, 0], [0, 3]])
    assert kernel_rank(diag) == 0
    assert cokernel(diag) == (0, (6,))
    wide = IntMatrix.from_rows([[1, 0, 0]])
    assert kernel_rank(wide) == 2
    assert cokernel(wide) == (0, ())
    tall = IntMatrix.from_rows([[0], [0]])
    assert kernel_rank(tall) == 1
    assert cokernel(tall) == (2, ())


def test_graded_group_accessors():
    g = GradedGroup.from_ranks(3, {0: 1, 3: 2}, {2: (2,)})
    assert g.rank(0) == 1 and g.rank(3) == 2 and g.rank(7) == 0
    assert g.torsion_at(2) == (2,) and g.torsion_at(5) == ()
    assert g.is_trivial_at(1) and not g.is_trivial_at(2)


def test_graded_group_validation():
    with pytest.raises(ValueError):
        GradedGroup(1, (1,), ((), ()))
    with pytest.raises(ValueError):
        GradedGroup(0, (-1,), ((),))
    with pytest.raises(ValueError):
        GradedGroup(0, (1,), ((1,),))


def test_graded_group_json_round_trip():
    g = GradedGroup.from_ranks(4, {0: 1, 2: 3}, {3: (2, 4)})
    assert GradedGroup.from_json_dict(json.loads(json.dumps(g.to_json_dict()))) == g


def test_standard_model_cpn_no_handles():
    model = standard_orbit_model(7, Family.CPN, 0)
    assert model.cohomology.ranks == (1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1)


def test_standard_model_cphalf_one_handle():
    model = standard_orbit_model(7, "CPHALF_TIMES_SPHERE", 1)
    ranks = model.cohomology.ranks
    assert ranks[7] == 2
    assert all(ranks[j] == 1 for j in range(0, 15, 2))
    assert all(ranks[j] == 0 for j in range(1, 15, 2) if j != 7)


def test_standard_model_middle_rank():
    assert standard_orbit_model(5, Family.CPN, 2).cohomology.rank(5) == 4


def test_standard_model_cup_dichotomy():
    n = 7
    cpn = standard_orbit_model(n, Family.CPN, 1)
    assert cpn.cup_map(n - 1).entries == ((1,),)
    half = standard_orbit_model(n, Family.CPHALF_TIMES_SPHERE, 1)
    assert half.cup_map(n - 1).entries == ((0,),)
    # handle classes always die under cup with t
    assert cpn.cup_map(n) == IntMatrix.zeros(0, 2)


def test_standard_model_rejects_bad_dimension():
    for n in (3, 4, 6, 8):
        with pytest.raises(ValueError, match="dimension out of scope"):
            standard_orbit_model(n, Family.CPN, 0)
    with pytest.raises(ValueError):
        standard_orbit_model(7, Family.CPN, -1)


@pytest.mark.parametrize("n", [5, 7, 15])
def test_gysin_sphere(n):
    model = standard_orbit_model(n, Family.CPN, 0)
    h = gysin_total_space(model)
    expected = GradedGroup.from_ranks(2 * n + 1, {0: 1, 2 * n + 1: 1})
    assert h == expected


@pytest.mark.parametrize("n,r", [(5, 1), (7, 2), (15, 3)])
def test_gysin_cpn_middle_ranks(n, r):
    h = gysin_total_space(standard_orbit_model(n, Family.CPN, r))
    assert h.rank(n) == 2 * r and h.rank(n + 1) == 2 * r
    assert all(
        h.rank(j) == 0 for j in range(1, 2 * n + 1) if j not in (n, n + 1)
    )


@pytest.mark.parametrize("n,r", [(5, 0), (7, 1), (15, 2)])
def test_gysin_cphalf_middle_ranks(n, r):
    h = gysin_total_space(standard_orbit_model(n, Family.CPHALF_TIMES_SPHERE, r))
    assert h.rank(n) == 2 * r + 1 and h.rank(n + 1) == 2 * r + 1


def test_gysin_requires_primitive_euler_class():
    model = standard_orbit_model(7, Family.CPN, 0)
    blunted = OrbitModel(
        n=model.n,
        family=model.family,
        r=model.r,
        cohomology=model.cohomology,
        cup_t=model.cup_t,
        euler_primitive=False,
    )
    with pytest.raises(ValueError, match="Euler class"):
        gysin_total_space(blunted)


def test_check_highly_connected():
    sphere = GradedGroup.from_ranks(15, {0: 1, 15: 1})
    assert check_highly_connected(sphere, 7)
    torsion_in_middle = GradedGroup.from_ranks(15, {0: 1, 15: 1}, {7: (2,)})
    assert not check_highly_connected(torsion_in_middle, 7)
    low_degree_class = GradedGroup.from_ranks(15, {0: 1, 3: 1, 15: 1})
    assert not check_highly_connected(low_degree_class, 7)


def test_gysin_outputs_highly_connected():
    for family in Family:
        for r in (0, 2):
            model = standard_orbit_model(7, family, r)
            assert check_highly_connected(gysin_total_space(model), 7)


def test_divisibility_transfer():
    cpn = standard_orbit_model(7, Family.CPN, 1)
    assert divisibility_transfer(cpn, 1440) == 0
    assert divisibility_transfer(cpn, 0) == 0
    half = standard_orbit_model(7, Family.CPHALF_TIMES_SPHERE, 1)
    assert divisibility_transfer(half, 1440) == 1440
    assert divisibility_transfer(half, 0) == 0


def test_divisibility_transfer_rejects_wrong_dimension():
    model = standard_orbit_model(5, Family.CPN, 0)
    with pytest.raises(ValueError, match="7"):
        divisibility_transfer(model, 0)
    with pytest.raises(ValueError):
        divisibility_transfer(standard_orbit_model(7, Family.CPN, 0), -1)


def test_divisibility_transfer_rejects_broken_dichotomy():
    model = standard_orbit_model(7, Family.CPN, 0)
    cup = dict(model.cup_t)
    cup[6] = IntMatrix.from_rows([[2]])  # neither zero nor unimodular
    broken = OrbitModel(
        n=7, family=Family.CPN, r=0, cohomology=model.cohomology, cup_t=cup
    )
    with pytest.raises(ValueError, match="neither zero nor an isomorphism"):
        divisibility_transfer(broken, 24)


def test_model_validation_rejects_bad_shapes():
    model = standard_orbit_model(7, Family.CPN, 1)
    cup = dict(model.cup_t)
    cup[0] = IntMatrix.zeros(3, 7)
    with pytest.raises(ValueError, match="wrong shape"):
        OrbitModel(n=7, family=Family.CPN, r=1, cohomology=model.cohomology, cup_t=cup)


def test_model_validation_rejects_bad_cohomology():
    # missing unit in degree 0
    no_unit = GradedGroup.from_ranks(14, {2: 1, 7: 2, 12: 1, 14: 1})
    with pytest.raises(ValueError, match="H\\^0"):
        OrbitModel(n=7, family=Family.CPN, r=1, cohomology=no_unit, cup_t={})
    # duality broken: extra class in degree 4 with no partner in degree 10
    lopsided = GradedGroup.from_ranks(
        14, {0: 1, 2: 1, 4: 2, 6: 1, 7: 2, 8: 1, 10: 1, 12: 1, 14: 1}
    )
    with pytest.raises(ValueError, match="duality"):
        OrbitModel(n=7, family=Family.CPN, r=1, cohomology=lopsided, cup_t={})
    # odd middle rank
    base = standard_orbit_model(7, Family.CPN, 0).cohomology
    odd_middle = GradedGroup.from_ranks(
        14, {j: base.rank(j) for j in range(15)} | {7: 1}
    )
    with pytest.raises(ValueError, match="middle rank"):
        OrbitModel(n=7, family=Family.CPN, r=0, cohomology=odd_middle, cup_t={})


def test_model_json_round_trip():
    for family in Family:
        model = standard_orbit_model(7, family, 2)
        data = json.loads(json.dumps(model.to_json_dict()))
        restored = OrbitModel.from_json_dict(data)
        assert restored == model
        assert gysin_total_space(restored) == gysin_total_space(model)


def test_euler_characteristic_and_duality():
    for n in (5, 7):
        for family in Family:
            for r in (0, 1, 3):
                model = standard_orbit_model(n, family, r)
                coh = model.cohomology
                assert all(
                    coh.rank(j) == coh.rank(2 * n - j) for j in range(2 * n + 1)
                )
                h = gysin_total_space(model)
                assert sum((-1) ** j * h.rank(j) for j in range(2 * n + 2)) == 0
                assert all(
                    h.rank(j) == h.rank(2 * n + 1 - j) for j in range(2 * n + 2)
                )
