from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import coprime_pairs
from ltsig import kernels, signature as sig, torus
from ltsig.knots import TorusKnotParams, circle_breakpoints, torus_seifert_matrix
from ltsig.signature import sample_points, signature_at


def reconstruct(perm, low, diag, off):
    n = len(diag)
    d = np.diag(diag)
    for k in range(n - 1):
        d[k, k + 1] = d[k + 1, k] = off[k]
    return low @ d @ low.T, perm


symmetric = st.integers(1, 12).flatmap(
    lambda n: st.lists(st.integers(-9, 9), min_size=n * n, max_size=n * n).map(
        lambda xs: (lambda a: a + a.T)(np.array(xs, dtype=float).reshape(n, n))
    )
)


BACKENDS = pytest.mark.parametrize("backend", list(kernels.available_backends().values()),
                                   ids=list(kernels.available_backends()))


def test_backend_flag():
    assert kernels.BACKEND in ("compiled", "python")
    assert "python" in kernels.available_backends()


@BACKENDS
@given(symmetric)
@settings(max_examples=60, deadline=None)
def test_bk_reconstructs(backend, m):
    perm, low, diag, off = backend.bk_factor(m)
    assert sorted(perm.tolist()) == list(range(m.shape[0]))
    assert np.allclose(np.tril(low), low) and np.allclose(np.diag(low), 1)
    rebuilt, _ = reconstruct(perm, low, diag, off)
    assert np.allclose(rebuilt, m[np.ix_(perm, perm)], atol=1e-8 * (1 + np.abs(m).max()))


def test_bk_zero_matrix(backend):
    perm, low, diag, off = backend.bk_factor(np.zeros((4, 4)))
    assert not diag.any() and not off.any()


def test_bk_needs_two_by_two(backend):
    m = np.array([[0.0, 1.0], [1.0, 0.0]])
    _, _, diag, off = backend.bk_factor(m)
    assert off[0] == 1.0 and not diag.any()


@BACKENDS
@given(coprime_pairs)
def test_jump_table_vs_enumeration(backend, pq):
    k = TorusKnotParams(*pq)
    table = backend.jump_table(*pq)
    assert table[0] == 0 and len(table) == k.pq
    assert table[1:] == [torus.jump_litherland(k, n) if n % k.p and n % k.q else 0 for n in range(1, k.pq)]


@BACKENDS
@given(coprime_pairs)
def test_intro_table_vs_decomposition(backend, pq):
    k = TorusKnotParams(*pq)
    table = backend.intro_sign_table(*pq)
    assert table[1:] == [torus.intro_sign(k, n) for n in range(1, k.pq)]


def test_backends_agree_on_signatures(monkeypatch):
    backends = kernels.available_backends()
    if len(backends) < 2:
        pytest.skip("compiled extension not built")
    v = torus_seifert_matrix(5, 7)
    pts = circle_breakpoints(5, 7)
    results = {}
    for name, mod in backends.items():
        monkeypatch.setattr(sig, "bk_factor", mod.bk_factor)
        results[name] = [signature_at(v, x, breakpoints=pts) for x in sample_points(pts)]
    assert results["python"] == results["compiled"]
    assert results["python"] == torus.jump_profile((5, 7)).sector_values()


def test_verified_inertia_refuses_near_singular():
    m = np.diag([1.0, 1e-20, -1.0])
    assert sig.verified_inertia(m, np.full((3, 3), 1e-10)) is None
    assert sig.verified_inertia(m, np.zeros((3, 3))) == (2, 1)
