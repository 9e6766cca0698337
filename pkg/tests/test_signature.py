from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from conftest import coprime_pairs, numpy_form
from ltsig import signature as sig
from ltsig.knots import (
    SeifertMatrix,
    circle_breakpoints,
    connected_sum,
    torus_seifert_matrix,
    twist_seifert_matrix,
)
from ltsig.signature import (
    DegeneratePoint,
    InconsistentProfile,
    PrecisionExhausted,
    SignatureProfile,
    assemble_form,
    determinant_identity_gap,
    sample_points,
    signature_at,
    signature_at_root_averaged,
    signature_profile,
)
from ltsig.torus import jump_profile

UNKNOT = SeifertMatrix(())
T25 = torus_seifert_matrix(2, 5)


@st.composite
def seifert_matrices(draw, max_genus=3):
    """V = U + W with W symmetric and U - U^T the standard symplectic form."""
    g = draw(st.integers(1, max_genus))
    n = 2 * g
    w = np.zeros((n, n), dtype=int)
    for i in range(n):
        for j in range(i, n):
            w[i, j] = w[j, i] = draw(st.integers(-3, 3))
    for k in range(g):
        w[2 * k, 2 * k + 1] += 1
    return SeifertMatrix.from_array(w)


circle_points = st.fractions(min_value=0, max_value=1, max_denominator=997).filter(lambda x: 0 < x < 1)


def oracle(v, x):
    """numpy eigenvalue signature; None when x sits too close to a root."""
    ev = np.linalg.eigvalsh(numpy_form(v, x))
    if np.min(np.abs(ev)) < 1e-6:
        return None
    return int(np.sum(ev > 0) - np.sum(ev < 0))


class TestAssemble:
    def test_zero_point(self):
        form = assemble_form(T25, 0)
        assert np.all(form.to_numpy() == 0)

    @pytest.mark.parametrize("n", [-3, 0, 4])
    def test_twist_half(self, n):
        got = assemble_form(twist_seifert_matrix(n), Fraction(1, 2)).to_numpy()
        assert np.allclose(got, [[-4, 2], [2, 4 * n]])

    def test_hermitian(self):
        assert assemble_form(T25, Fraction(2, 7)).hermitian_defect() < 1e-14

    def test_rejects_float(self):
        with pytest.raises(TypeError):
            assemble_form(T25, 0.5)

    @pytest.mark.parametrize("x", [Fraction(-1, 3), Fraction(1)])
    def test_rejects_outside(self, x):
        with pytest.raises(ValueError):
            signature_at(T25, x)

    @given(seifert_matrices(), circle_points)
    @settings(max_examples=40, deadline=None)
    def test_determinant_identity(self, v, x):
        assert determinant_identity_gap(v, x, precision=80) < 1e-9 * (1 + abs(assemble_form(v, x).det()))


class TestSignatureAt:
    def test_t25(self):
        # one sample per sector of T(2,5): values 0, -2, -4, -2, 0
        assert signature_at(T25, Fraction(1, 20)) == 0
        assert signature_at(T25, Fraction(1, 5)) == -2
        assert signature_at(T25, Fraction(1, 2)) == -4
        assert signature_at(T25, Fraction(4, 5)) == -2
        assert signature_at(T25, Fraction(19, 20)) == 0

    def test_two_fifths_in_middle_sector(self):
        # 2/5 lies in (3/10, 7/10), so it sees the middle sector value
        assert signature_at(T25, Fraction(2, 5)) == oracle(T25, Fraction(2, 5)) == -4

    def test_zero(self):
        assert signature_at(T25, 0) == 0
        assert signature_at(UNKNOT, Fraction(1, 3)) == 0

    def test_trefoil_twist(self):
        assert signature_at(twist_seifert_matrix(-1), Fraction(1, 2)) == -2

    def test_degenerate_exact(self):
        with pytest.raises(DegeneratePoint):
            signature_at(T25, Fraction(1, 10))

    def test_degenerate_listed(self):
        with pytest.raises(DegeneratePoint):
            signature_at(T25, Fraction(3, 10), breakpoints=circle_breakpoints(2, 5))

    def test_interval_route_agrees(self, monkeypatch):
        monkeypatch.setattr(sig, "verified_inertia", lambda mid, rad: None)
        v = torus_seifert_matrix(3, 4)
        for x in sample_points(circle_breakpoints(3, 4)):
            assert signature_at(v, x) == jump_profile((3, 4)).value_at(x)

    def test_precision_exhausted(self, monkeypatch):
        monkeypatch.setattr(sig, "verified_inertia", lambda mid, rad: None)
        monkeypatch.setattr(sig, "_interval_inertia", lambda v, x, bits: None)
        with pytest.raises(PrecisionExhausted):
            signature_at(T25, Fraction(1, 3), precision_bits=256)

    @given(seifert_matrices(), circle_points)
    @settings(max_examples=150, deadline=None)
    def test_matches_eigenvalue_oracle(self, v, x):
        expected = oracle(v, x)
        assume(expected is not None)
        assert signature_at(v, x) == expected

    @given(seifert_matrices(), circle_points)
    @settings(max_examples=80, deadline=None)
    def test_conjugation_symmetry_and_parity(self, v, x):
        assume(oracle(v, x) is not None)
        s = signature_at(v, x)
        assert s == signature_at(v, 1 - x)
        assert s % 2 == 0

    @given(seifert_matrices(max_genus=2), seifert_matrices(max_genus=2), circle_points)
    @settings(max_examples=40, deadline=None)
    def test_connected_sum_additive(self, a, b, x):
        assume(oracle(a, x) is not None and oracle(b, x) is not None)
        assert signature_at(connected_sum(a, b), x) == signature_at(a, x) + signature_at(b, x)


class TestAveraged:
    def test_unknot(self):
        assert signature_at_root_averaged(UNKNOT, Fraction(1, 3), Fraction(1, 10)) == 0

    def test_examples(self):
        assert signature_at_root_averaged(T25, Fraction(1, 10), Fraction(1, 10)) == -1
        assert signature_at_root_averaged(T25, Fraction(3, 10), Fraction(1, 5)) == -3

    def test_gap_positive(self):
        with pytest.raises(ValueError):
            signature_at_root_averaged(T25, Fraction(1, 10), 0)


class TestProfile:
    def test_t25(self):
        prof = signature_profile(T25, circle_breakpoints(2, 5))
        assert prof.breakpoints == ((Fraction(1, 10), -1), (Fraction(3, 10), -1), (Fraction(7, 10), 1), (Fraction(9, 10), 1))
        assert prof.sector_values() == [0, -2, -4, -2, 0]

    def test_unknot(self):
        assert len(signature_profile(UNKNOT, [])) == 0

    def test_trefoil(self):
        prof = signature_profile(torus_seifert_matrix(2, 3), circle_breakpoints(2, 3))
        assert prof.breakpoints == ((Fraction(1, 6), -1), (Fraction(5, 6), 1))
        for x in sample_points(prof.points):
            assert oracle(torus_seifert_matrix(2, 3), x) == prof.value_at(x)

    def test_incomplete_breakpoints(self):
        with pytest.raises(InconsistentProfile):
            signature_profile(T25, [Fraction(1, 10)])

    @given(coprime_pairs, st.data())
    @settings(max_examples=25, deadline=None)
    def test_profile_consistency(self, pq, data):
        v = torus_seifert_matrix(*pq)
        pts = circle_breakpoints(*pq)
        prof = jump_profile(pq)
        x = data.draw(circle_points.filter(lambda y: y not in set(pts)))
        assert signature_at(v, x, breakpoints=pts) == prof.value_at(x)
        assert prof.total_jump() == 0


class TestProfileAlgebra:
    def test_value_at_breakpoint(self):
        with pytest.raises(DegeneratePoint):
            jump_profile((2, 5)).value_at(Fraction(1, 10))

    def test_unsorted_rejected(self):
        with pytest.raises(ValueError):
            SignatureProfile(((Fraction(1, 2), 1), (Fraction(1, 3), -1)))

    def test_merge_and_zero_jumps(self):
        a, b = jump_profile((2, 3)), jump_profile((2, 3)).negated()
        assert a.merge(b).without_zero_jumps() == SignatureProfile()
        assert a.merge(SignatureProfile()) == a
