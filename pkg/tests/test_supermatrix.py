"""Supermatrix membership, sampling, shapes, and the embedding."""

import random
from fractions import Fraction

import pytest

from lienil import (CyclotomicField, GrassmannAlgebra, Matrix, QQ,
                    SuperAlgebraSpec, check_embedding_conditions,
                    closure_check, embed, epsilon, graded_component_basis,
                    is_supermatrix, p_matrix, sample_supermatrix, shape,
                    verify_embedding)
from lienil.supermatrix import (SuperMatrixError, example_5_1, example_5_2,
                                example_5_3, scalar_regime_check)


@pytest.fixture
def spec_eps_p():
    """M_2(E, epsilon, P) with g = 3."""
    E = GrassmannAlgebra(3, QQ)
    return SuperAlgebraSpec(E, epsilon(E, validate=False),
                            p_matrix(E, QQ.from_fraction(-1), n=2))


def test_membership(spec_eps_p):
    E = spec_eps_p.ring
    v1, v2 = E.generator(1), E.generator(2)
    even, odd = E.one + v1 * v2, v1 + v2 * 3
    A = Matrix(E, [[even, odd], [odd, even]])
    assert is_supermatrix(spec_eps_p, A)
    B = Matrix(E, [[odd, even], [odd, even]])
    assert not is_supermatrix(spec_eps_p, B)


def test_shape_of_eps_p(spec_eps_p):
    grid = shape(spec_eps_p)
    E = spec_eps_p.ring
    for i in range(2):
        for j in range(2):
            expected = graded_component_basis(E, (i + j) % 2, 2)
            assert grid[i][j].same_span(expected)


def test_sampling_and_closure(spec_eps_p):
    rng = random.Random(3)
    bases = shape(spec_eps_p)
    for _ in range(10):
        A = sample_supermatrix(spec_eps_p, rng, bases)
        B = sample_supermatrix(spec_eps_p, rng, bases)
        assert closure_check(spec_eps_p, A, B, scalars=(2, Fraction(-1, 2)))


def test_sampling_is_deterministic(spec_eps_p):
    a = sample_supermatrix(spec_eps_p, random.Random(9))
    b = sample_supermatrix(spec_eps_p, random.Random(9))
    assert a == b


def test_embed_corollary_example(spec_eps_p):
    """embed(v1) over (E, eps, P, n=2) is the off-diagonal matrix of v1."""
    E = spec_eps_p.ring
    v1 = E.generator(1)
    A = embed(spec_eps_p, v1)
    assert A == Matrix(E, [[E.zero, v1], [v1, E.zero]])
    # even elements embed diagonally
    x = E.one + v1 * E.generator(2) * 2
    assert embed(spec_eps_p, x) == Matrix(E, [[x, E.zero], [E.zero, x]])


def test_embedding_laws(spec_eps_p):
    rng = random.Random(4)
    E = spec_eps_p.ring
    pairs = [(E.random_element(rng), E.random_element(rng)) for _ in range(25)]
    verdict = verify_embedding(spec_eps_p, pairs)
    assert verdict.ok, verdict.failures


def test_embedding_conditions_for_root_of_unity():
    spec = example_5_2(3, 3)
    report = check_embedding_conditions(spec)
    d = report.as_dict()
    assert d["first_column_central_units"]
    assert d["t_power_n_is_one"]
    assert d["power_sums_vanish"] and d["inverse_power_sums_vanish"]
    assert d["t_in_fixed_ring"] and d["delta_order_n"]
    assert d["inverse_sum_condition_redundant"]
    assert report.regime_scalar and report.regime_ring_embedding
    assert report.regime_supermatrix_embedding


def test_embedding_conditions_fail_for_hadamard_identity():
    """H_n has t = 1 everywhere: power sums do not vanish and 1 - t = 0."""
    E = GrassmannAlgebra(2, QQ)
    from lienil.supermatrix import hadamard_identity
    spec = SuperAlgebraSpec(E, epsilon(E, validate=False),
                            hadamard_identity(E, 2))
    report = check_embedding_conditions(spec)
    assert not report.power_sums_vanish
    assert report.one_minus_t_nonzero_divisor is False
    assert not report.regime_scalar


def test_scalar_regime(spec_eps_p):
    E = spec_eps_p.ring
    fixed = [E.one, E.generator(1) * E.generator(2)]
    assert scalar_regime_check(spec_eps_p, fixed)
    with pytest.raises(SuperMatrixError):
        scalar_regime_check(spec_eps_p, [E.generator(1)])


def test_example_5_1_shape():
    spec = example_5_1(3, 1, 3)        # P(1, 3): one +1 row, two -1 rows
    grid = shape(spec)
    E = spec.ring
    even = graded_component_basis(E, 0, 2)
    odd = graded_component_basis(E, 1, 2)
    for i in range(3):
        for j in range(3):
            t = spec.T.entry(i + 1, j + 1)
            expected = even if t == E.one else odd
            assert grid[i][j].same_span(expected)


def test_example_5_2_spec():
    spec = example_5_2(3, 2)
    assert spec.ring.field == CyclotomicField(3)
    assert spec.n == 3
    rng = random.Random(8)
    A = sample_supermatrix(spec, rng)
    B = sample_supermatrix(spec, rng)
    assert closure_check(spec, A, B)


def test_example_5_3_spec():
    spec = example_5_3(2, 1, 3)
    rng = random.Random(8)
    A = sample_supermatrix(spec, rng)
    B = sample_supermatrix(spec, rng)
    assert closure_check(spec, A, B)
    with pytest.raises(SuperMatrixError):
        example_5_3(2, 1, 1)           # needs at least two generators


def test_spec_rejects_non_central_T():
    E = GrassmannAlgebra(2, QQ)
    v1 = E.generator(1)
    from lienil.matrices import TransitiveMatrix
    M = Matrix(E, [[E.one, E.one + v1],
                   [E.try_invert(E.one + v1), E.one]])
    with pytest.raises(SuperMatrixError):
        SuperAlgebraSpec(E, epsilon(E, validate=False), TransitiveMatrix(M))
