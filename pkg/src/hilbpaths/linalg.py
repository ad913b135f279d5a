"""Exact linear algebra over prime fields.

Matrices are dense int64 arrays with entries in [0, p) for a prime
p < 2**31. Rank and pivot columns are computed by exact fraction-free
row reduction (see _kernel); a multi-prime protocol guards against a
single prime being non-generic for a given integer matrix recipe.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, NamedTuple, Sequence

import numpy as np

__all__ = [
    "DEFAULT_PRIMES",
    "PrimeField",
    "MatrixFp",
    "MultiPrimeRank",
    "is_prime",
    "rank",
    "pivot_columns",
    "rank_multi_prime",
]

# Both below 2**31, so products of balanced residues accumulate in int64;
# two primes make characteristic flukes detectable.
DEFAULT_PRIMES = (2147483647, 2147483629)

_MAX_MODULUS = 1 << 31


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    if n in small:
        return True
    if any(n % q == 0 for q in small):
        return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field of integers modulo a prime p with 2 <= p < 2**31."""

    p: int

    def __post_init__(self) -> None:
        if not (2 <= self.p < _MAX_MODULUS):
            raise ValueError(f"modulus must satisfy 2 <= p < 2**31, got {self.p}")
        if not is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    def reduce(self, x: int) -> int:
        return x % self.p

    def neg(self, x: int) -> int:
        return -x % self.p

    def inv(self, x: int) -> int:
        x %= self.p
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p)


class MatrixFp:
    """Dense matrix over a prime field; entries stored as int64 in [0, p)."""

    __slots__ = ("rows", "cols", "field", "array")

    def __init__(self, rows: int, cols: int, field: PrimeField, data=None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        self.rows = rows
        self.cols = cols
        self.field = field
        if data is None:
            arr = np.zeros((rows, cols), dtype=np.int64)
        else:
            arr = np.asarray(data, dtype=np.int64).reshape(rows, cols) % field.p
        self.array = np.ascontiguousarray(arr)

    @classmethod
    def from_entries(
        cls,
        rows: int,
        cols: int,
        field: PrimeField,
        entries: Iterable[tuple[int, int, int]],
    ) -> "MatrixFp":
        """Build from a sparse (row, col, value) assembly buffer."""
        m = cls(rows, cols, field)
        a = m.array
        p = field.p
        for i, j, v in entries:
            a[i, j] = v % p
        return m

    def __repr__(self) -> str:
        return f"MatrixFp({self.rows}x{self.cols} mod {self.field.p})"


class MultiPrimeRank(NamedTuple):
    rank: int
    by_prime: dict
    agreed: bool


def _run_kernel(array: np.ndarray, p: int) -> tuple[int, np.ndarray]:
    from . import _kernel

    piv = np.empty(min(array.shape), dtype=np.int64)
    r = _kernel.echelon(array, np.int64(p), piv)
    return int(r), piv


def rank(matrix: MatrixFp) -> int:
    """Exact rank over F_p; invariant under row and column permutations."""
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    r, _ = _run_kernel(matrix.array.copy(), matrix.field.p)
    return r


def pivot_columns(matrix: MatrixFp, column_order: Sequence[int] | None = None) -> list[int]:
    """Pivot columns of the echelon form, visiting columns in the given order.

    Returns original column indices in the order their pivots were found;
    the result length always equals rank(matrix).
    """
    if matrix.rows == 0 or matrix.cols == 0:
        return []
    if column_order is None:
        work = matrix.array.copy()
        r, piv = _run_kernel(work, matrix.field.p)
        return [int(j) for j in piv[:r]]
    order = [int(j) for j in column_order]
    if sorted(order) != list(range(matrix.cols)):
        raise ValueError("column_order must be a permutation of all column indices")
    work = np.ascontiguousarray(matrix.array[:, order])
    r, piv = _run_kernel(work, matrix.field.p)
    return [order[int(j)] for j in piv[:r]]


def rank_multi_prime(
    assembler: Callable[[PrimeField], MatrixFp],
    primes: Sequence[int],
) -> MultiPrimeRank:
    """Rank of one integer matrix recipe over several primes.

    Returns the maximum rank seen together with the per-prime values; a
    disagreement means at least one prime is non-generic for the instance
    (reported, never fatal).
    """
    ps = list(primes)
    if len(set(ps)) < 2:
        raise ValueError("rank_multi_prime needs at least two distinct primes")
    by_prime = {}
    for p in ps:
        by_prime[p] = rank(assembler(PrimeField(p)))
    values = set(by_prime.values())
    return MultiPrimeRank(rank=max(values), by_prime=by_prime, agreed=len(values) == 1)
