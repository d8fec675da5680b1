"""Ring contract, endomorphisms, Lie nilpotency, R[z], and the oracle."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from lienil import (Endomorphism, GrassmannAlgebra, Matrix, PolynomialRing,
                    QQ, RingError, classical_adj, classical_det, commutator,
                    epsilon, extend_endomorphism_to_poly, fixed_ring_member,
                    is_lie_nilpotent_index, left_normed_commutator,
                    oracle_ring)
from lienil.rings import identity_endomorphism


def test_commutators():
    E = GrassmannAlgebra(2, QQ)
    v1, v2 = E.generator(1), E.generator(2)
    assert commutator(v1, v2) == v1 * v2 * 2
    assert left_normed_commutator([v1, v2, v1]) == E.zero
    with pytest.raises(RingError):
        left_normed_commutator([v1])


@pytest.mark.parametrize("g", [0, 1, 2, 3, 4, 5])
def test_grassmann_lie_nilpotent_index_two(g):
    E = GrassmannAlgebra(g, QQ)
    assert is_lie_nilpotent_index(E, 2)
    if g >= 2:
        # index 1 fails: [v1, v2] = 2 v1 v2 != 0
        assert not is_lie_nilpotent_index(E, 1, witnesses=[
            (E.generator(1), E.generator(2))])


def test_commutative_oracle_is_index_one():
    R = oracle_ring(["x", "y"])
    rng = random.Random(0)
    witnesses = [(R.random_element(rng), R.random_element(rng))
                 for _ in range(10)]
    assert is_lie_nilpotent_index(R, 1, witnesses)


def test_endomorphism_validation_rejects_non_multiplicative():
    E = GrassmannAlgebra(2, QQ)
    with pytest.raises(RingError):
        Endomorphism("bad", E, lambda x: x + E.one, validate=True)


def test_endomorphism_iterate_and_fixed_ring():
    E = GrassmannAlgebra(3, QQ)
    eps = epsilon(E)
    v1 = E.generator(1)
    assert eps.iterate(2, v1) == v1
    assert not fixed_ring_member(eps, v1)
    assert fixed_ring_member(eps, v1 * E.generator(2))
    ident = identity_endomorphism(E)
    assert ident.is_identity_on([v1, E.one, v1 * v1])


def test_polynomial_factor_order_matters():
    """(z - a)(z - d) and (z - d)(z - a) differ unless a, d commute."""
    E = GrassmannAlgebra(2, QQ)
    Rz = PolynomialRing(E)
    z = Rz.z
    a, d = E.generator(1), E.generator(2)
    lhs = (z - Rz.constant(a)) * (z - Rz.constant(d))
    rhs = (z - Rz.constant(d)) * (z - Rz.constant(a))
    assert lhs != rhs
    assert lhs.coeff(1) == -(a + d)
    assert lhs.coeff(0) == a * d
    assert rhs.coeff(0) == d * a


def test_polynomial_substitution_sides():
    E = GrassmannAlgebra(2, QQ)
    Rz = PolynomialRing(E)
    v1, v2 = E.generator(1), E.generator(2)
    p = Rz.element([E.one, v2])          # 1 + v2 z
    assert p.subst_right(v1) == E.one + v1 * v2
    assert p.subst_left(v1) == E.one + v2 * v1
    assert p.subst_right(v1) != p.subst_left(v1)


def test_extend_endomorphism_to_poly():
    E = GrassmannAlgebra(2, QQ)
    eps_z = extend_endomorphism_to_poly(epsilon(E))
    Rz = eps_z.ring
    p = Rz.element([E.generator(1), E.one])
    assert eps_z(p) == Rz.element([-E.generator(1), E.one])
    assert eps_z(Rz.z) == Rz.z


grass_elems = st.builds(
    lambda seed: GrassmannAlgebra(3, QQ).random_element(random.Random(seed)),
    st.integers(min_value=0, max_value=10 ** 6))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(0, 10 ** 6), st.integers(0, 10 ** 6))
def test_rpolynomial_ring_axioms(sa, sb, sc):
    E = GrassmannAlgebra(3, QQ)
    Rz = PolynomialRing(E)
    p = Rz.random_element(random.Random(sa))
    q = Rz.random_element(random.Random(sb))
    r = Rz.random_element(random.Random(sc))
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p + q) * r == p * r + q * r
    assert p * Rz.one == p and Rz.one * p == p


def test_oracle_det_and_adj():
    R = oracle_ring(["a", "b", "c", "d"])
    A = Matrix(R, [[R.var("a"), R.var("b")], [R.var("c"), R.var("d")]])
    det = classical_det(A)
    assert det == R.element("a*d - b*c")
    adj = classical_adj(A)
    assert adj.rows[0][0] == R.var("d")
    assert adj.rows[0][1] == -R.var("b")
    prod = A * adj
    assert prod.rows[0][0] == det and prod.rows[1][1] == det
    assert not prod.rows[0][1] and not prod.rows[1][0]


def test_context_mismatch_is_rejected():
    E2 = GrassmannAlgebra(2, QQ)
    E3 = GrassmannAlgebra(3, QQ)
    with pytest.raises(RingError):
        E2.generator(1) + E3.generator(1)
