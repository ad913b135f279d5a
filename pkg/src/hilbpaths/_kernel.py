"""Compiled echelon-reduction kernel for dense matrices over a prime field.

The kernel performs in-place fraction-free Gaussian elimination on an
int64 array modulo a prime p < 2**31, visiting columns left to right and
picking the first nonzero row as pivot (no pivoting heuristics, so the
pivot-column sequence is faithful to the given column order).

Elimination is blocked: panels of up to four pivots are factored first,
then applied to the trailing columns in one fused sweep. Multipliers are
balanced into (-p/2, p/2], so four products plus the carried entry stay
below 2**63 and a single deferred reduction per element suffices. The
reduction itself uses a float64 reciprocal estimate of t/p followed by
branch-free folding of the (-2p, 2p) remainder into [0, p).
"""

import numpy as np
from numba import njit

__all__ = ["echelon"]


@njit(cache=True, nogil=True, inline="always")
def _reduce(t, p, inv_p):
    # |t| < 2**63 - margin and |t/p| < 2**53 by the caller's bounds.
    q = np.int64(float(t) * inv_p)
    t -= q * p
    # q may be off by one in either direction: fold (-2p, 2p) into [0, p).
    t += (t >> 63) & p
    t += (t >> 63) & p
    t -= p
    t += (t >> 63) & p
    return t


@njit(cache=True, nogil=True, inline="always")
def _modinv(a, p):
    # Fermat inverse; p is prime and a is nonzero mod p.
    inv = np.int64(1)
    b = a % p
    e = p - 2
    while e:
        if e & 1:
            inv = (inv * b) % p
        b = (b * b) % p
        e >>= 1
    return inv


@njit(cache=True, nogil=True)
def echelon(A, p, pivots_out):
    """Reduce A in place, write pivot column indices, return the rank."""
    rows, cols = A.shape
    inv_p = 1.0 / p
    half = p >> 1
    B = 4
    F = np.zeros((rows, B), dtype=np.int64)
    r = 0
    c = 0
    while c < cols and r < rows:
        # Panel factorization: find up to B pivots, deferring all column
        # updates outside the panel.
        nb = 0
        cpan = c
        while nb < B and cpan < cols and r + nb < rows:
            # Bring column cpan up to date w.r.t. the panel pivots found
            # so far (rows strictly below each pivot row, in pivot order).
            for k in range(nb):
                v = A[r + k, cpan]
                if v != 0:
                    for i in range(r + k + 1, rows):
                        f = F[i, k]
                        if f != 0:
                            A[i, cpan] = _reduce(A[i, cpan] - f * v, p, inv_p)
            piv = -1
            for i in range(r + nb, rows):
                if A[i, cpan] != 0:
                    piv = i
                    break
            if piv < 0:
                cpan += 1
                continue
            if piv != r + nb:
                for j in range(cols):
                    t = A[r + nb, j]
                    A[r + nb, j] = A[piv, j]
                    A[piv, j] = t
                for k in range(nb):
                    t = F[r + nb, k]
                    F[r + nb, k] = F[piv, k]
                    F[piv, k] = t
            # Record balanced multipliers for the rows below, zero the
            # pivot column below the pivot.
            vinv = _modinv(A[r + nb, cpan], p)
            for i in range(r + nb + 1, rows):
                a = A[i, cpan]
                if a != 0:
                    f = (a * vinv) % p
                    if f > half:
                        f -= p
                    F[i, nb] = f
                    A[i, cpan] = 0
                else:
                    F[i, nb] = 0
            pivots_out[r + nb] = cpan
            nb += 1
            cpan += 1
        if nb == 0:
            break
        # Finalize the panel's pivot rows (triangular update), so they can
        # serve as finished source rows for the trailing sweep.
        for k in range(1, nb):
            for k2 in range(k):
                f = F[r + k, k2]
                if f != 0:
                    for j in range(cpan, cols):
                        A[r + k, j] = _reduce(A[r + k, j] - f * A[r + k2, j], p, inv_p)
        # Fused trailing update for all rows below the panel.
        if nb == 4:
            r0 = r
            r1 = r + 1
            r2 = r + 2
            r3 = r + 3
            for i in range(r + nb, rows):
                f0 = F[i, 0]
                f1 = F[i, 1]
                f2 = F[i, 2]
                f3 = F[i, 3]
                if f0 != 0 or f1 != 0 or f2 != 0 or f3 != 0:
                    for j in range(cpan, cols):
                        t = (
                            A[i, j]
                            - f0 * A[r0, j]
                            - f1 * A[r1, j]
                            - f2 * A[r2, j]
                            - f3 * A[r3, j]
                        )
                        A[i, j] = _reduce(t, p, inv_p)
        else:
            for i in range(r + nb, rows):
                for k in range(nb):
                    f = F[i, k]
                    if f != 0:
                        for j in range(cpan, cols):
                            A[i, j] = _reduce(A[i, j] - f * A[r + k, j], p, inv_p)
        r += nb
        c = cpan
    return r
