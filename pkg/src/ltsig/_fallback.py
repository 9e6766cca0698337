"""Pure-Python kernels; same contract as the compiled ``_kernels`` module."""

from __future__ import annotations

import numpy as np

# Bunch-Parlett threshold (1 + sqrt(17)) / 8
PIVOT_ALPHA = 0.6403882032022076


def bk_factor(mid):
    """Symmetric indefinite factorization P M P^T = L D L^T in doubles.

    Complete (Bunch-Parlett) pivoting with 1x1 and 2x2 blocks.  Returns
    ``(perm, L, diag, offdiag)``: row k of P M P^T is row ``perm[k]`` of M,
    ``L`` is unit lower triangular, ``diag[k]`` is D[k, k] and ``offdiag[k]``
    is D[k, k+1] (nonzero only at the first index of a 2x2 block).
    """
    a = np.array(mid, dtype=np.float64, copy=True)
    n = a.shape[0]
    perm = np.arange(n)
    lower = np.eye(n)
    diag = np.zeros(n)
    offdiag = np.zeros(n)

    def swap(i: int, j: int) -> None:
        if i == j:
            return
        a[[i, j], :] = a[[j, i], :]
        a[:, [i, j]] = a[:, [j, i]]
        lower[[i, j], :k] = lower[[j, i], :k]
        perm[[i, j]] = perm[[j, i]]

    k = 0
    while k < n:
        block = np.abs(a[k:, k:])
        d = np.diag(block)
        bi = int(np.argmax(d))
        alpha = d[bi]
        beta = 0.0
        if n - k > 1:
            off = block.copy()
            np.fill_diagonal(off, -1.0)
            rr, ss = divmod(int(np.argmax(off)), n - k)
            beta = off[rr, ss]
        if alpha == 0.0 and beta <= 0.0:
            break  # trailing block is zero; leave D = 0 there
        if alpha >= PIVOT_ALPHA * beta:
            swap(k, k + bi)
            piv = a[k, k]
            diag[k] = piv
            col = a[k + 1:, k] / piv
            lower[k + 1:, k] = col
            a[k + 1:, k + 1:] -= np.outer(col, a[k, k + 1:])
            k += 1
            continue
        rr, ss = min(rr, ss), max(rr, ss)
        swap(k, k + rr)
        swap(k + 1, k + ss)
        e = a[k:k + 2, k:k + 2].copy()
        diag[k], diag[k + 1], offdiag[k] = e[0, 0], e[1, 1], e[0, 1]
        det = e[0, 0] * e[1, 1] - e[0, 1] * e[1, 0]
        einv = np.array([[e[1, 1], -e[0, 1]], [-e[1, 0], e[0, 0]]]) / det
        w = a[k + 2:, k:k + 2] @ einv
        lower[k + 2:, k:k + 2] = w
        a[k + 2:, k + 2:] -= w @ a[k:k + 2, k + 2:]
        k += 2
    return perm, lower, diag, offdiag


def jump_table(p: int, q: int) -> list[int]:
    """Jumps j(n/pq) for n = 0..pq-1 (entry 0 is 0) by modular inversion."""
    pq = p * q
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


def intro_sign_table(p: int, q: int) -> list[int]:
    """Sign of b in n = a p + b q, 0 < a < q, for n = 0..pq-1 (0 on multiples)."""
    pq = p * q
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
