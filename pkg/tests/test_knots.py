from fractions import Fraction
from math import gcd

import numpy as np
import pytest
import sympy
from sympy.polys.matrices import DomainMatrix
from hypothesis import given, settings, strategies as st

from conftest import coprime_pairs, eig_signature, numpy_form
from ltsig import _poly
from ltsig.knots import (
    AlexanderPolynomial,
    DomainError,
    SeifertMatrix,
    TorusKnotParams,
    alexander_polynomial,
    circle_breakpoints,
    connected_sum,
    coprime_pairs as pair_iter,
    torus_alexander_closed,
    torus_seifert_matrix,
    twist_seifert_matrix,
    unimodularity,
)

t = sympy.symbols("t")


def sympy_alexander(v: SeifertMatrix) -> list[int]:
    """Oracle: det(V - t V^T) by sympy, coefficients low degree first."""
    if v.size == 0:
        return [1]
    m = sympy.Matrix(v.entries)
    dm = DomainMatrix.from_Matrix(m - t * m.T)
    poly = sympy.Poly(dm.domain.to_sympy(dm.det()), t)
    return [int(c) for c in reversed(poly.all_coeffs())]


def sympy_torus_closed(p: int, q: int) -> list[int]:
    expr = sympy.cancel((1 - t ** (p * q)) * (1 - t) / ((1 - t**p) * (1 - t**q)))
    return [int(c) for c in reversed(sympy.Poly(expr, t).all_coeffs())]


def tensor_oracle(p: int, q: int) -> SeifertMatrix:
    """A second Seifert matrix for T(p,q): -(L_{p-1} (x) L_{q-1}), L_m = I - superdiagonal."""
    def lam(m):
        return np.eye(m, dtype=int) - np.eye(m, k=1, dtype=int)
    return SeifertMatrix.from_array(-np.kron(lam(p - 1), lam(q - 1)))


class TestParams:
    def test_valid(self):
        k = TorusKnotParams(2, 5)
        assert (k.pq, k.genus) == (10, 2)

    @pytest.mark.parametrize("p,q", [(4, 6), (0, 3), (-2, 3), (3, 3)])
    def test_rejects(self, p, q):
        with pytest.raises(DomainError):
            TorusKnotParams(p, q)

    def test_unknot_accepted(self):
        assert TorusKnotParams(1, 7).genus == 0


class TestSeifertMatrix:
    def test_odd_size_rejected(self):
        with pytest.raises(ValueError):
            SeifertMatrix.from_array([[1]])

    def test_non_unimodular_rejected(self):
        with pytest.raises(ValueError):
            SeifertMatrix.from_array([[1, 2], [0, 1]])

    def test_not_square_rejected(self):
        with pytest.raises(ValueError):
            SeifertMatrix(((0, 1), (0, 1, 2)))

    def test_equality_and_hash(self):
        a, b = twist_seifert_matrix(3), twist_seifert_matrix(3)
        assert a == b and hash(a) == hash(b)
        assert a != twist_seifert_matrix(4)


class TestTwist:
    @pytest.mark.parametrize("n,expected", [(-1, [[-1, 1], [0, -1]]), (0, [[-1, 1], [0, 0]]), (5, [[-1, 1], [0, 5]])])
    def test_entries(self, n, expected):
        assert twist_seifert_matrix(n).as_array().tolist() == expected

    def test_n2_polynomial(self):
        assert alexander_polynomial(twist_seifert_matrix(2)).coefficients == (-2, 5, -2)

    @pytest.mark.parametrize("n", range(-6, 7))
    def test_general_polynomial(self, n):
        got = alexander_polynomial(twist_seifert_matrix(n))
        assert got == AlexanderPolynomial((-n, 2 * n + 1, -n))
        assert list(got.coefficients) == sympy_alexander(twist_seifert_matrix(n))

    @given(st.integers(-10**6, 10**6))
    def test_delta_one_is_unit(self, n):
        assert abs(alexander_polynomial(twist_seifert_matrix(n))(1)) == 1


class TestTorus:
    def test_trefoil(self):
        v = torus_seifert_matrix(2, 3)
        assert v.size == 2
        assert v.alexander.equivalent(AlexanderPolynomial((1, -1, 1)))

    def test_unknot(self):
        v = torus_seifert_matrix(1, 9)
        assert v.size == 0
        assert v.alexander.coefficients == (1,)

    def test_25_half(self):
        v = torus_seifert_matrix(2, 5)
        assert v.size == 4
        assert eig_signature(numpy_form(v, Fraction(1, 2))) == -4

    def test_non_coprime(self):
        with pytest.raises(DomainError):
            torus_seifert_matrix(4, 6)

    def test_closed_examples(self):
        assert str(torus_alexander_closed(2, 5)) == "1 - t + t^2 - t^3 + t^4"
        assert torus_alexander_closed(1, 7).coefficients == (1,)
        c34 = torus_alexander_closed(3, 4)
        assert c34.degree == 6
        assert c34.equivalent(alexander_polynomial(torus_seifert_matrix(3, 4)))

    @pytest.mark.parametrize("k", list(pair_iter(8, min_p=1)), ids=str)
    def test_against_sympy(self, k):
        v = torus_seifert_matrix(k)
        assert abs(unimodularity(v)) == 1
        closed = torus_alexander_closed(k)
        assert list(closed.coefficients) == sympy_torus_closed(k.p, k.q)
        assert v.alexander.equivalent(closed)

    @pytest.mark.parametrize("k", list(pair_iter(7)), ids=str)
    def test_det_against_sympy(self, k):
        v = torus_seifert_matrix(k)
        assert alexander_polynomial(v) == AlexanderPolynomial(tuple(sympy_alexander(v)))

    @pytest.mark.parametrize("p,q", [(2, 3), (2, 7), (3, 4), (3, 5), (4, 5)])
    def test_signatures_match_tensor_oracle(self, p, q):
        ours, other = torus_seifert_matrix(p, q), tensor_oracle(p, q)
        for n in range(1, 2 * p * q, 2):
            x = Fraction(n, 2 * p * q)
            assert eig_signature(numpy_form(ours, x)) == eig_signature(numpy_form(other, x))


class TestBreakpoints:
    def test_examples(self):
        assert circle_breakpoints(2, 5) == [Fraction(k, 10) for k in (1, 3, 7, 9)]
        assert circle_breakpoints(1, 5) == []
        assert circle_breakpoints(2, 3) == [Fraction(1, 6), Fraction(5, 6)]

    @given(coprime_pairs)
    def test_count_and_symmetry(self, pq):
        p, q = pq
        pts = circle_breakpoints(p, q)
        assert len(pts) == (p - 1) * (q - 1)
        assert all(0 < x < 1 for x in pts)
        assert sorted(1 - x for x in pts) == pts

    @given(coprime_pairs)
    @settings(max_examples=30)
    def test_breakpoints_are_roots(self, pq):
        coeffs = torus_alexander_closed(*pq).coefficients
        for x in circle_breakpoints(*pq):
            assert _poly.vanishes_at_root_of_unity(coeffs, x)


class TestConnectedSum:
    def test_block_diagonal(self):
        s = connected_sum(twist_seifert_matrix(-1), torus_seifert_matrix(2, 5))
        assert s.size == 6
        prod = _poly.mul(twist_seifert_matrix(-1).alexander.coefficients, torus_alexander_closed(2, 5).coefficients)
        assert s.alexander.equivalent(AlexanderPolynomial(prod))


def test_pair_iterator():
    pairs = [(k.p, k.q) for k in pair_iter(6)]
    assert pairs == sorted(pairs, key=lambda t: (t[1], t[0]))
    assert all(gcd(p, q) == 1 and 2 <= p < q <= 6 for p, q in pairs)
