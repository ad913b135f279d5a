"""Constrained lattice walks and the counting identities built on them.

A walk of shape (n, s) takes n+2 unit steps, numbered 0 to n+1, from
(0, 0) to (n+2-2s, n+2); each step moves one row up and one column left
or right, and exactly s steps go left. The confined walks stay inside
the vertical band 0 <= x <= n+2-2s; their count a(n, s) equals the
degree-s dimension of natural quadratic quotient algebras, which is why
these counts double as dimension bounds elsewhere in the package.

Steps 0 and n+1 are right steps in every confined walk (a left first
step exits the band at once, and the walk must re-enter the end column
from the left), so a walk is determined by which of the free steps
1..n go left. That subset read as variable indices identifies walks
with squarefree monomials, and the band conditions with leading
monomials of explicit quadratic forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator, NamedTuple, Sequence

from .algebra import Monomial

__all__ = [
    "DEFAULT_ENUMERATION_CAP",
    "EnumerationCapError",
    "LatticePath",
    "CrossingReport",
    "RecursionCheck",
    "count_paths",
    "enumerate_paths",
    "path_to_monomial",
    "monomial_to_path",
    "classify_path",
    "boundary_crossing_count",
    "closed_form_coefficient",
    "truncate_product",
    "verify_path_recursion",
]

DEFAULT_ENUMERATION_CAP = 10_000_000


class EnumerationCapError(RuntimeError):
    """Raised when an enumeration would generate more walks than the cap allows."""


@dataclass(frozen=True)
class LatticePath:
    """A walk of n+2 unit steps; steps[i] is +1 (right) or -1 (left)."""

    n: int
    steps: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        if len(self.steps) != self.n + 2:
            raise ValueError(f"expected {self.n + 2} steps, got {len(self.steps)}")
        if any(st not in (-1, 1) for st in self.steps):
            raise ValueError("steps must be +1 or -1")
        if self.steps[0] != 1 or self.steps[-1] != 1:
            raise ValueError("the first and last steps must go right")

    @classmethod
    def from_left_indices(cls, n: int, lefts: Sequence[int]) -> "LatticePath":
        lefts = set(lefts)
        if any(not 1 <= i <= n for i in lefts):
            raise ValueError(f"left-step indices must lie in 1..{n}")
        steps = tuple(-1 if i in lefts else 1 for i in range(n + 2))
        return cls(n, steps)

    @property
    def s(self) -> int:
        """Number of left steps."""
        return sum(1 for st in self.steps if st == -1)

    @property
    def left_indices(self) -> tuple[int, ...]:
        return tuple(i for i, st in enumerate(self.steps) if st == -1)

    def positions(self) -> tuple[int, ...]:
        """Column after each step, starting with the origin: n+3 values."""
        out = [0]
        x = 0
        for st in self.steps:
            x += st
            out.append(x)
        return tuple(out)

    @property
    def end(self) -> int:
        return self.n + 2 - 2 * self.s


class CrossingReport(NamedTuple):
    """Which side(s) of the band 0 <= x <= n+2-2s a walk leaves."""

    crosses_left: bool
    crosses_right: bool

    @property
    def confined(self) -> bool:
        return not (self.crosses_left or self.crosses_right)


def count_paths(n: int, s: int) -> int:
    """Number of confined walks of shape (n, s).

    Defined for n >= -2 so that recursion checks can use the two seed
    values a(-2, 0) = a(-1, 0) = 1 (the empty walk and the single forced
    right step). The count is 0 whenever s < 0, the end column
    n+2-2s is negative, or (for n >= 0) the band has width zero.
    """
    if n < -2:
        raise ValueError("n must be >= -2")
    if s < 0:
        return 0
    width = n + 2 - 2 * s
    if width < 0:
        return 0
    if n == -2 or n == -1:
        return 1 if s == 0 else 0
    if width == 0:
        return 0
    # After the forced first right step the walk sits at x = 1; steps
    # 1..n are free inside [0, width]; the forced last step needs x =
    # width-1 after step n.
    dp = [0] * (width + 1)
    if width >= 1:
        dp[1] = 1
    for _ in range(n):
        nxt = [0] * (width + 1)
        for x, v in enumerate(dp):
            if not v:
                continue
            if x > 0:
                nxt[x - 1] += v
            if x < width:
                nxt[x + 1] += v
        dp = nxt
    return dp[width - 1]


def classify_path(path: LatticePath) -> CrossingReport:
    """Band crossings of a walk, relative to the band of its own shape."""
    width = path.end
    pos = path.positions()
    return CrossingReport(
        crosses_left=min(pos) <= -1,
        crosses_right=max(pos) >= width + 1,
    )


def enumerate_paths(
    n: int,
    s: int,
    constrained: bool = True,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> Iterator[LatticePath]:
    """Yield walks of shape (n, s): confined ones, or all C(n, s) of them.

    Walks appear in lexicographic order of their left-step index sets.
    Every degree-s choice of left steps gives a walk, even when the band
    is empty (then no walk is confined), so the unconstrained stream
    always has C(n, s) items. Raises EnumerationCapError before
    generating anything when that count exceeds the cap.
    """
    if n < 0:
        raise ValueError("n must be nonnegative for enumeration")
    if s < 0 or s > n:
        return
    total = comb(n, s)
    if total > cap:
        raise EnumerationCapError(
            f"enumerating shape ({n}, {s}) needs {total} candidate walks, "
            f"which exceeds the cap of {cap}"
        )
    for lefts in combinations(range(1, n + 1), s):
        path = LatticePath.from_left_indices(n, lefts)
        if constrained and not classify_path(path).confined:
            continue
        yield path


def path_to_monomial(path: LatticePath) -> Monomial:
    """Squarefree monomial whose variable indices are the walk's left steps."""
    return Monomial.from_indices(path.n, path.left_indices)


def monomial_to_path(m: Monomial) -> LatticePath:
    """Inverse of path_to_monomial."""
    return LatticePath.from_left_indices(m.n, m.indices)


def boundary_crossing_count(n: int, s: int) -> int:
    """Number of shape-(n, s) walks that cross the left band edge.

    By the mirror symmetry i -> n+1-i this also counts the walks that
    cross the right edge. A reflection argument evaluates it in closed
    form: 0 for s < 2 (too few left steps to reach column -1), then
    C(n, s-2) while 2s <= n+2, and C(n, s) when 2s >= n+2 (the end
    column then sits at or below the start, and every walk crosses).
    The two expressions agree when 2s = n+2.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if s < 0 or s > n:
        return 0
    if s < 2:
        return 0
    if 2 * s <= n + 2:
        return comb(n, s - 2)
    return comb(n, s)


def closed_form_coefficient(n: int, s: int) -> int:
    """a(n, s) by inclusion-exclusion, valid for 0 <= s <= n//3 + 1.

    In that range at most one band edge can be crossed before the other,
    so confined = all - left-crossing - right-crossing + both, and the
    double crossings themselves reflect to a single binomial:
    C(n, s) - 2 C(n, s-2) + C(n, s-4).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not 0 <= s <= n // 3 + 1:
        raise ValueError(
            f"closed form only valid for 0 <= s <= n//3 + 1 = {n // 3 + 1}, got s={s}"
        )

    def c(k: int) -> int:
        return comb(n, k) if k >= 0 else 0

    return c(s) - 2 * c(s - 2) + c(s - 4)


def truncate_product(n: int, degrees: Sequence[int]) -> list[int]:
    """Positive leading coefficients of (1+t)^n * prod_j (1 - t^(d_j)).

    The series is cut strictly before its first non-positive coefficient
    (zero counts as non-positive). The result always starts with 1 and
    is the standard candidate dimension sequence for a quotient by
    generic forms of the given degrees.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if any(d < 1 for d in degrees):
        raise ValueError("factor degrees must be >= 1")
    coeffs = [comb(n, k) for k in range(n + 1)]
    for d in degrees:
        size = len(coeffs) + d
        nxt = [0] * size
        for k, v in enumerate(coeffs):
            nxt[k] += v
            nxt[k + d] -= v
        coeffs = nxt
    out: list[int] = []
    for v in coeffs:
        if v <= 0:
            break
        out.append(v)
    return out


class RecursionCheck(NamedTuple):
    lhs: int
    rhs: int
    terms: tuple[tuple[int, int], ...]

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def verify_path_recursion(k: int, s: int) -> RecursionCheck:
    """Check a(2k, s) = sum over r of 2^r C(k, r) a(k-r-2, (s-r)/2).

    The sum runs over 0 <= r <= k with r = s (mod 2); the extended
    domain of count_paths supplies the seed values. Returns both sides
    and the nonzero (r, term) pairs.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    lhs = count_paths(2 * k, s)
    rhs = 0
    terms = []
    for r in range(k + 1):
        if (s - r) % 2 != 0:
            continue
        j = (s - r) // 2
        if j < 0:
            continue
        if k - r - 2 < -2:
            continue
        term = (2**r) * comb(k, r) * count_paths(k - r - 2, j)
        if term:
            terms.append((r, term))
        rhs += term
    return RecursionCheck(lhs, rhs, tuple(terms))
