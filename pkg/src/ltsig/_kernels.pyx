# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contract as ``ltsig._fallback``."""

import numpy as np
from libc.math cimport fabs

cdef double PIVOT_ALPHA = 0.6403882032022076


cdef void _swap(double[:, ::1] a, double[:, ::1] low, long[::1] perm,
                Py_ssize_t i, Py_ssize_t j, Py_ssize_t k, Py_ssize_t n) nogil:
    cdef Py_ssize_t c
    cdef double t
    cdef long pt
    if i == j:
        return
    for c in range(n):
        t = a[i, c]; a[i, c] = a[j, c]; a[j, c] = t
    for c in range(n):
        t = a[c, i]; a[c, i] = a[c, j]; a[c, j] = t
    for c in range(k):
        t = low[i, c]; low[i, c] = low[j, c]; low[j, c] = t
    pt = perm[i]; perm[i] = perm[j]; perm[j] = pt


cdef void _factor(double[:, ::1] a, double[:, ::1] low, long[::1] perm,
                  double[::1] diag, double[::1] offdiag) nogil:
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t k = 0, i, j, bi, rr, ss
    cdef double alpha, beta, v, piv, l, e00, e01, e11, det, i00, i01, i11, w0, w1
    while k < n:
        alpha = -1.0
        bi = k
        for i in range(k, n):
            v = fabs(a[i, i])
            if v > alpha:
                alpha = v
                bi = i
        beta = 0.0
        rr = k
        ss = k
        for i in range(k, n):
            for j in range(i + 1, n):
                v = fabs(a[i, j])
                if v > beta:
                    beta = v
                    rr = i
                    ss = j
        if alpha == 0.0 and beta == 0.0:
            return
        if alpha >= PIVOT_ALPHA * beta:
            _swap(a, low, perm, k, bi, k, n)
            piv = a[k, k]
            diag[k] = piv
            for i in range(k + 1, n):
                l = a[i, k] / piv
                low[i, k] = l
                for j in range(k + 1, n):
                    a[i, j] -= l * a[k, j]
            k += 1
            continue
        _swap(a, low, perm, k, rr, k, n)
        _swap(a, low, perm, k + 1, ss, k, n)
        e00 = a[k, k]
        e01 = a[k, k + 1]
        e11 = a[k + 1, k + 1]
        diag[k] = e00
        diag[k + 1] = e11
        offdiag[k] = e01
        det = e00 * e11 - e01 * e01
        i00 = e11 / det
        i01 = -e01 / det
        i11 = e00 / det
        for i in range(k + 2, n):
            w0 = a[i, k] * i00 + a[i, k + 1] * i01
            w1 = a[i, k] * i01 + a[i, k + 1] * i11
            low[i, k] = w0
            low[i, k + 1] = w1
            for j in range(k + 2, n):
                a[i, j] -= w0 * a[k, j] + w1 * a[k + 1, j]
        k += 2


def bk_factor(mid):
    """Symmetric indefinite factorization P M P^T = L D L^T in doubles.

    Returns ``(perm, L, diag, offdiag)`` exactly as ``ltsig._fallback.bk_factor``.
    """
    a_arr = np.array(mid, dtype=np.float64, order="C", copy=True)
    n = a_arr.shape[0]
    low_arr = np.eye(n)
    perm_arr = np.arange(n, dtype=np.int64)
    diag_arr = np.zeros(n)
    off_arr = np.zeros(n)
    cdef double[:, ::1] a = a_arr
    cdef double[:, ::1] low = low_arr
    cdef long[::1] perm = perm_arr
    cdef double[::1] diag = diag_arr
    cdef double[::1] offdiag = off_arr
    with nogil:
        _factor(a, low, perm, diag, offdiag)
    return perm_arr, low_arr, diag_arr, off_arr


def jump_table(long p, long q):
    """Jumps j(n/pq) for n = 0..pq-1 (entry 0 is 0) by modular inversion."""
    cdef long pq = p * q
    cdef long n, i, qinv
    out = [0] * pq
    if p == 1 or q == 1:
        return out
    qinv = pow(q, -1, p)
    for n in range(1, pq):
        if n % p == 0 or n % q == 0:
            continue
        i = (n * qinv) % p
        out[n] = 1 if n - i * q >= 0 else -1
    return out


def intro_sign_table(long p, long q):
    """Sign of b in n = a p + b q, 0 < a < q, for n = 0..pq-1 (0 on multiples)."""
    cdef long pq = p * q
    cdef long n, a, pinv
    out = [0] * pq
    if p == 1 or q == 1:
        return out
    pinv = pow(p, -1, q)
    for n in range(1, pq):
        if n % p == 0 or n % q == 0:
            continue
        a = (n * pinv) % q
        out[n] = 1 if n - a * p > 0 else -1
    return out
