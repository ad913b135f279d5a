"""Monomials, forms, and skew-symmetric pencils over a prime field.

Two algebras share the squarefree monomial basis on variables x_1..x_n:
the exterior algebra (anticommutative, products carry a sign from the
inversion parity of the merged index sets) and the squarefree commutative
algebra (the polynomial ring modulo all x_i^2, no signs). Monomials are
stored as bitsets, so n is capped at 62 and one machine word suffices.

The module also builds the canonical quadratic-form pairs that realize
the generic behaviour of two quadratics, the canonical skew pencil
blocks they come from, and the two degrevlex orders used to read off
leading monomials.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from itertools import combinations
from typing import Iterable, NamedTuple, Optional, Sequence

import numpy as np

from .linalg import PrimeField

__all__ = [
    "EXTERIOR",
    "SQUAREFREE",
    "MAX_VARIABLES",
    "Monomial",
    "Term",
    "Form",
    "LinearForm",
    "SkewPair",
    "MonomialOrder",
    "DEGREVLEX_FORWARD",
    "DEGREVLEX_REVERSED",
    "mul",
    "form_mul",
    "form_power",
    "form_from_terms",
    "zero_form",
    "canonical_pair_odd",
    "mirrored_pair_odd",
    "canonical_pair_even",
    "consecutive_pair_form",
    "reversed_pair_form",
    "random_form",
    "random_linear_form",
    "linear_power_squarefree",
    "skew_from_form",
    "form_from_skew",
    "canonical_block",
    "pencil_matrix",
    "direct_sum",
    "degree_masks",
]

EXTERIOR = "exterior"
SQUAREFREE = "squarefree"
MAX_VARIABLES = 62


def _check_algebra(algebra: str) -> None:
    if algebra not in (EXTERIOR, SQUAREFREE):
        raise ValueError(f"unknown algebra kind {algebra!r}")


@dataclass(frozen=True)
class Monomial:
    """Squarefree monomial on x_1..x_n, stored as a bitset (bit i-1 <-> x_i)."""

    n: int
    mask: int

    def __post_init__(self) -> None:
        if not (0 <= self.n <= MAX_VARIABLES):
            raise ValueError(f"variable count must be in [0, {MAX_VARIABLES}], got {self.n}")
        if not (0 <= self.mask < (1 << self.n) if self.n else self.mask == 0):
            raise ValueError(f"mask {self.mask:#x} out of range for n={self.n}")

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> "Monomial":
        mask = 0
        for i in indices:
            if not (1 <= i <= n):
                raise ValueError(f"variable index {i} out of range 1..{n}")
            bit = 1 << (i - 1)
            if mask & bit:
                raise ValueError(f"repeated variable index {i}")
            mask |= bit
        return cls(n, mask)

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls(n, 0)

    @property
    def degree(self) -> int:
        return self.mask.bit_count()

    @property
    def indices(self) -> tuple[int, ...]:
        m = self.mask
        out = []
        while m:
            low = m & -m
            out.append(low.bit_length())
            m ^= low
        return tuple(out)

    def __repr__(self) -> str:
        if self.mask == 0:
            return "1"
        return "*".join(f"x{i}" for i in self.indices)


class Term(NamedTuple):
    coefficient: int
    monomial: Monomial


def _inversions(amask: int, bmask: int) -> int:
    """Pairs (i, j) with i in amask, j in bmask, i > j."""
    inv = 0
    b = bmask
    while b:
        low = b & -b
        j = low.bit_length() - 1
        inv += (amask >> (j + 1)).bit_count()
        b ^= low
    return inv


def mul(a: Monomial, b: Monomial, algebra: str) -> Optional[Term]:
    """Product of two monomials; None when a variable repeats (x_i^2 = 0).

    The coefficient is +1 in the squarefree algebra and (-1)**inv in the
    exterior algebra, where inv counts the inversions between the factors.
    """
    _check_algebra(algebra)
    if a.n != b.n:
        raise ValueError(f"mismatched variable counts {a.n} and {b.n}")
    if a.mask & b.mask:
        return None
    coeff = 1
    if algebra == EXTERIOR and _inversions(a.mask, b.mask) % 2 == 1:
        coeff = -1
    return Term(coeff, Monomial(a.n, a.mask | b.mask))


class Form:
    """Homogeneous element: sparse map from monomial masks to nonzero coefficients."""

    __slots__ = ("n", "degree", "algebra", "field", "terms")

    def __init__(self, n: int, degree: int, algebra: str, field: PrimeField, terms: dict):
        _check_algebra(algebra)
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        self.n = n
        self.degree = degree
        self.algebra = algebra
        self.field = field
        self.terms = dict(terms)
        for mask, c in self.terms.items():
            if mask.bit_count() != degree:
                raise ValueError("all monomials of a form must have the stated degree")
            if not (0 < c < field.p):
                raise ValueError("stored coefficients must be nonzero field elements")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def monomials(self) -> list[Monomial]:
        return [Monomial(self.n, m) for m in sorted(self.terms)]

    def coefficient(self, m: Monomial) -> int:
        return self.terms.get(m.mask, 0)

    def integer_lift(self) -> list[tuple[int, tuple[int, ...]]]:
        """(coefficient, variable indices) pairs with coefficients in [0, p)."""
        return [(c, Monomial(self.n, mask).indices) for mask, c in sorted(self.terms.items())]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Form):
            return NotImplemented
        return (
            self.n == other.n
            and self.degree == other.degree
            and self.algebra == other.algebra
            and self.field.p == other.field.p
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, self.degree, self.algebra, self.field.p, tuple(sorted(self.terms.items()))))

    def __repr__(self) -> str:
        if not self.terms:
            return f"Form(0; degree {self.degree}, n={self.n}, {self.algebra})"
        parts = [f"{c}*{Monomial(self.n, m)}" for m, c in sorted(self.terms.items())]
        return " + ".join(parts)


def zero_form(n: int, degree: int, algebra: str, field: PrimeField) -> Form:
    return Form(n, degree, algebra, field, {})


def form_from_terms(
    n: int,
    degree: int,
    algebra: str,
    field: PrimeField,
    terms: Iterable[tuple[int, Sequence[int]]],
) -> Form:
    """Build a form from (coefficient, variable-index sequence) pairs.

    Index sequences may be unsorted; in the exterior algebra the sign of
    the sorting permutation is folded into the coefficient. Repeated
    variables inside one term annihilate it (x_i^2 = 0). Coefficients
    accumulate and zero sums are dropped.
    """
    _check_algebra(algebra)
    acc: dict[int, int] = {}
    for coeff, idx in terms:
        idx = list(idx)
        if len(set(idx)) != len(idx):
            continue
        if len(idx) != degree:
            raise ValueError("term degree differs from the declared form degree")
        sign = 1
        if algebra == EXTERIOR:
            inv = sum(1 for a, b in combinations(idx, 2) if a > b)
            if inv % 2 == 1:
                sign = -1
        mono = Monomial.from_indices(n, idx)
        acc[mono.mask] = (acc.get(mono.mask, 0) + sign * coeff) % field.p
    return Form(n, degree, algebra, field, {m: c for m, c in acc.items() if c})


def form_mul(F: Form, G: Form) -> Form:
    """Bilinear product of two forms in their shared algebra."""
    if F.n != G.n or F.algebra != G.algebra or F.field.p != G.field.p:
        raise ValueError("forms must share the ambient algebra and field")
    p = F.field.p
    exterior = F.algebra == EXTERIOR
    acc: dict[int, int] = {}
    for ma, ca in F.terms.items():
        for mb, cb in G.terms.items():
            if ma & mb:
                continue
            c = ca * cb
            if exterior and _inversions(ma, mb) % 2 == 1:
                c = -c
            key = ma | mb
            acc[key] = (acc.get(key, 0) + c) % p
    return Form(F.n, F.degree + G.degree, F.algebra, F.field, {m: c for m, c in acc.items() if c})


def form_power(F: Form, d: int) -> Form:
    """F**d by repeated multiplication; d >= 1."""
    if d < 1:
        raise ValueError("exponent must be >= 1")
    out = F
    for _ in range(d - 1):
        out = form_mul(out, F)
    return out


@dataclass(frozen=True)
class LinearForm:
    """Linear form sum(a_i x_i), coefficients indexed 1..n, reduced mod p."""

    n: int
    field: PrimeField
    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coefficients) != self.n:
            raise ValueError("coefficient vector length must equal n")
        object.__setattr__(
            self, "coefficients", tuple(c % self.field.p for c in self.coefficients)
        )

    def to_form(self, algebra: str = SQUAREFREE) -> Form:
        return form_from_terms(
            self.n,
            1,
            algebra,
            self.field,
            [(c, (i,)) for i, c in enumerate(self.coefficients, start=1) if c],
        )


def _require_field_larger_than(field: PrimeField, n: int) -> None:
    if field.p <= n + 2:
        raise ValueError(
            f"field characteristic must exceed n+2 (p={field.p}, n={n}); "
            "pick a larger prime"
        )


def canonical_pair_odd(k: int, field: PrimeField) -> tuple[Form, Form]:
    """Canonical quadratic pair in 2k+1 variables, shifted index pairing.

    f = sum_i x_i x_(k+1+i) and g = sum_i x_i x_(k+i), i = 1..k, with unit
    coefficients. Every generic exterior quadratic pair in an odd number
    of variables is equivalent to this one.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = 2 * k + 1
    _require_field_larger_than(field, n)
    f = form_from_terms(n, 2, EXTERIOR, field, [(1, (i, k + 1 + i)) for i in range(1, k + 1)])
    g = form_from_terms(n, 2, EXTERIOR, field, [(1, (i, k + i)) for i in range(1, k + 1)])
    return f, g


def mirrored_pair_odd(k: int, field: PrimeField) -> tuple[Form, Form]:
    """Alternative canonical odd pair with nested index pairing.

    f = x_1 x_(2k) + x_2 x_(2k-1) + ... + x_k x_(k+1) and
    g = x_1 x_(2k+1) + x_2 x_(2k) + ... + x_k x_(k+2); equivalent to
    canonical_pair_odd under a change of variables, so it generates the
    same quotient dimensions. Every term touches x_1..x_k, which makes
    the monomial x_(k+1)...x_(2k+1) visibly unreachable.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = 2 * k + 1
    _require_field_larger_than(field, n)
    f = form_from_terms(n, 2, EXTERIOR, field, [(1, (i, 2 * k + 1 - i)) for i in range(1, k + 1)])
    g = form_from_terms(n, 2, EXTERIOR, field, [(1, (i, 2 * k + 2 - i)) for i in range(1, k + 1)])
    return f, g


def canonical_pair_even(
    k: int, field: PrimeField, alphas: Sequence[int] | None = None
) -> tuple[Form, Form]:
    """Canonical quadratic pair in 2k variables.

    f = sum_i alpha_i x_(2i-1) x_(2i) and g = sum_i x_(2i-1) x_(2i) with
    the alpha_i distinct and nonzero in the field. Defaults to
    alpha_i = i + 1, which stays distinct and nonzero whenever p > k + 1.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = 2 * k
    _require_field_larger_than(field, n)
    if alphas is None:
        alphas = tuple(range(2, k + 2))
    alphas = tuple(a % field.p for a in alphas)
    if len(alphas) != k:
        raise ValueError(f"need exactly {k} alpha values, got {len(alphas)}")
    if any(a == 0 for a in alphas):
        raise ValueError("alpha values must be nonzero in the field")
    if len(set(alphas)) != k:
        raise ValueError("alpha values must be distinct in the field")
    f = form_from_terms(
        n, 2, EXTERIOR, field, [(a, (2 * i - 1, 2 * i)) for i, a in enumerate(alphas, start=1)]
    )
    g = form_from_terms(n, 2, EXTERIOR, field, [(1, (2 * i - 1, 2 * i)) for i in range(1, k + 1)])
    return f, g


def consecutive_pair_form(
    n: int, field: PrimeField, coefficients: Sequence[int] | None = None, algebra: str = EXTERIOR
) -> Form:
    """c_1 x_1 x_2 + c_2 x_3 x_4 + ... over floor(n/2) consecutive pairs.

    With nonzero c_i this form attains the generic rank on every
    restriction to an initial variable segment, which is exactly the
    hypothesis under which its degree-s leading monomials (forward
    degrevlex) are the left-crossing path monomials.
    """
    half = n // 2
    if coefficients is None:
        coefficients = (1,) * half
    if len(coefficients) != half:
        raise ValueError(f"need exactly {half} coefficients, got {len(coefficients)}")
    if any(c % field.p == 0 for c in coefficients):
        raise ValueError("pair coefficients must be nonzero in the field")
    return form_from_terms(
        n, 2, algebra, field,
        [(c, (2 * i - 1, 2 * i)) for i, c in enumerate(coefficients, start=1)],
    )


def reversed_pair_form(
    n: int, field: PrimeField, coefficients: Sequence[int] | None = None, algebra: str = EXTERIOR
) -> Form:
    """d_1 x_n x_(n-1) + d_2 x_(n-2) x_(n-3) + ... over floor(n/2) pairs.

    The mirror image of consecutive_pair_form under i -> n+1-i; its
    degree-s leading monomials under the reversed-priority degrevlex are
    the right-crossing path monomials.
    """
    half = n // 2
    if coefficients is None:
        coefficients = (1,) * half
    if len(coefficients) != half:
        raise ValueError(f"need exactly {half} coefficients, got {len(coefficients)}")
    if any(c % field.p == 0 for c in coefficients):
        raise ValueError("pair coefficients must be nonzero in the field")
    return form_from_terms(
        n, 2, algebra, field,
        [(d, (n + 2 - 2 * i, n + 1 - 2 * i)) for i, d in enumerate(coefficients, start=1)],
    )


def _rng(seed, field: PrimeField, tag: str) -> random.Random:
    # String seeding hashes via SHA-512, so draws are stable across
    # processes and platforms, and distinct per (seed, prime, role).
    return random.Random(f"{seed}|{field.p}|{tag}")


def random_form(
    n: int,
    field: PrimeField,
    seed,
    degree: int = 2,
    algebra: str = EXTERIOR,
    tag: str = "q",
) -> Form:
    """Form with every degree-`degree` coefficient uniform in [1, p-1].

    Deterministic per (seed, field, tag); all C(n, degree) monomials
    receive a nonzero coefficient, mimicking coefficients in general
    position as far as a finite field allows.
    """
    rng = _rng(seed, field, tag)
    terms = []
    for idx in combinations(range(1, n + 1), degree):
        terms.append((rng.randrange(1, field.p), idx))
    return form_from_terms(n, degree, algebra, field, terms)


def random_linear_form(n: int, field: PrimeField, seed, tag: str = "l") -> LinearForm:
    """Linear form with all n coefficients uniform in [1, p-1], per-seed deterministic."""
    rng = _rng(seed, field, tag)
    return LinearForm(n, field, tuple(rng.randrange(1, field.p) for _ in range(n)))


def linear_power_squarefree(ell: LinearForm, m: int) -> Form:
    """m-th power of a linear form in the squarefree algebra.

    Modulo all x_i^2 the multinomial expansion collapses to
    m! * sum over size-m index sets S of (prod_{i in S} a_i) x_S.
    Degenerate when m > n (the zero form). Requires p > m, otherwise m!
    vanishes and the power is identically zero for the wrong reason.
    """
    if m < 1:
        raise ValueError("power must be >= 1")
    p = ell.field.p
    if p <= m:
        raise ValueError(
            f"field characteristic {p} must exceed the power {m} (m! vanishes mod p)"
        )
    fact = 1
    for i in range(2, m + 1):
        fact = fact * i % p
    support = [i for i, c in enumerate(ell.coefficients, start=1) if c]
    terms = []
    for subset in combinations(support, m):
        prod = fact
        for i in subset:
            prod = prod * ell.coefficients[i - 1] % p
        terms.append((prod, subset))
    return form_from_terms(ell.n, m, SQUAREFREE, ell.field, terms)


# ---------------------------------------------------------------------------
# Skew-symmetric matrices and canonical pencil blocks


@dataclass(frozen=True)
class SkewPair:
    """A pencil A + lambda*B of skew-symmetric matrices over a prime field."""

    field: PrimeField
    A: np.ndarray = dc_field(repr=False)
    B: np.ndarray = dc_field(repr=False)

    def __post_init__(self) -> None:
        p = self.field.p
        for name, M in (("A", self.A), ("B", self.B)):
            if M.ndim != 2 or M.shape[0] != M.shape[1]:
                raise ValueError(f"{name} must be square")
            if np.any(M % p != (-M.T) % p):
                raise ValueError(f"{name} must be skew-symmetric mod p")
            if np.any(np.diagonal(M) % p != 0):
                raise ValueError(f"{name} must have zero diagonal")
        if self.A.shape != self.B.shape:
            raise ValueError("A and B must have equal size")

    @property
    def size(self) -> int:
        return self.A.shape[0]


def skew_from_form(F: Form) -> np.ndarray:
    """Skew matrix of a quadratic exterior form: entry (i, j) = c_ij / 2 for i < j."""
    if F.degree != 2 or F.algebra != EXTERIOR:
        raise ValueError("skew_from_form needs a quadratic exterior form")
    p = F.field.p
    if p == 2:
        raise ValueError("the half-coefficient convention needs characteristic != 2")
    inv2 = F.field.inv(2)
    A = np.zeros((F.n, F.n), dtype=np.int64)
    for mask, c in F.terms.items():
        i, j = Monomial(F.n, mask).indices
        half = c * inv2 % p
        A[i - 1, j - 1] = half
        A[j - 1, i - 1] = (-half) % p
    return A


def form_from_skew(A: np.ndarray, field: PrimeField, algebra: str = EXTERIOR) -> Form:
    """Quadratic form of a skew matrix; inverse of skew_from_form."""
    n = A.shape[0]
    p = field.p
    terms = []
    for i in range(n):
        for j in range(i + 1, n):
            c = 2 * int(A[i, j]) % p
            if c:
                terms.append((c, (i + 1, j + 1)))
    return form_from_terms(n, 2, algebra, field, terms)


def _antisymmetrize(upper: dict[tuple[int, int], int], size: int, p: int) -> np.ndarray:
    M = np.zeros((size, size), dtype=np.int64)
    for (i, j), v in upper.items():
        M[i - 1, j - 1] = v % p
        M[j - 1, i - 1] = (-v) % p
    return M


def canonical_block(
    kind: str, half: int, field: PrimeField, alpha: int | None = None
) -> SkewPair:
    """One canonical diagonal block of a skew-symmetric matrix pencil.

    kind "I" (size 2k+1 with half=k): both matrices have rank 2k and the
    pencil keeps rank 2k for every lambda (an odd-size pencil is always
    singular). kind "II" (size 2l): ranks 2l and 2l-2. kind "III"
    (size 2m, requires alpha): ranks 2m (or 2m-2 when alpha = 0) and 2m;
    the pencil determinant is a power of (alpha + lambda), so the pencil
    drops rank exactly at lambda = -alpha.
    """
    p = field.p
    if half < 1:
        raise ValueError("block size parameter must be >= 1")
    if kind == "I":
        k = half
        a = {(i, 2 * k + 1 - i): 1 for i in range(1, k + 1)}
        b = {(i, 2 * k + 2 - i): 1 for i in range(1, k + 1)}
        size = 2 * k + 1
    elif kind == "II":
        l = half
        a = {(i, 2 * l + 1 - i): 1 for i in range(1, l + 1)}
        b = {(i, 2 * l + 2 - i): 1 for i in range(2, l + 1)}
        size = 2 * l
    elif kind == "III":
        if alpha is None:
            raise ValueError('kind "III" requires the alpha parameter')
        m = half
        a = {(i, 2 * m + 1 - i): alpha % p for i in range(1, m + 1)}
        for i in range(2, m + 1):
            a[(i, 2 * m + 2 - i)] = 1
        b = {(i, 2 * m + 1 - i): 1 for i in range(1, m + 1)}
        size = 2 * m
    else:
        raise ValueError(f'block kind must be "I", "II" or "III", got {kind!r}')
    A = _antisymmetrize({k_: v for k_, v in a.items() if v % p}, size, p)
    B = _antisymmetrize({k_: v for k_, v in b.items() if v % p}, size, p)
    return SkewPair(field, A, B)


def pencil_matrix(pair: SkewPair, lam: int) -> np.ndarray:
    """(A + lambda*B) mod p."""
    p = pair.field.p
    return (pair.A + (lam % p) * pair.B) % p


def direct_sum(pairs: Sequence[SkewPair]) -> SkewPair:
    """Block-diagonal sum of pencil pairs over a common field."""
    if not pairs:
        raise ValueError("need at least one block")
    field = pairs[0].field
    if any(q.field.p != field.p for q in pairs):
        raise ValueError("all blocks must share the field")
    total = sum(q.size for q in pairs)
    A = np.zeros((total, total), dtype=np.int64)
    B = np.zeros((total, total), dtype=np.int64)
    at = 0
    for q in pairs:
        s = q.size
        A[at : at + s, at : at + s] = q.A
        B[at : at + s, at : at + s] = q.B
        at += s
    return SkewPair(field, A, B)


# ---------------------------------------------------------------------------
# Monomial orders


def _bit_reverse(mask: int, n: int) -> int:
    out = 0
    for i in range(n):
        if mask >> i & 1:
            out |= 1 << (n - 1 - i)
    return out


@dataclass(frozen=True)
class MonomialOrder:
    """Graded reverse lexicographic order on equal-degree squarefree monomials.

    priority "forward" means x_1 > x_2 > ... > x_n; "reversed" means
    x_n > ... > x_1. Scanning from the least-priority variable upward,
    the first variable contained in exactly one of the two monomials
    decides: the monomial NOT containing it is the larger one.
    """

    priority: str = "forward"

    def __post_init__(self) -> None:
        if self.priority not in ("forward", "reversed"):
            raise ValueError('priority must be "forward" or "reversed"')

    @property
    def kind(self) -> str:
        return "degrevlex"

    def descending_key(self, m: Monomial) -> int:
        """Integer key whose ascending sort lists monomials largest-first."""
        if self.priority == "forward":
            return m.mask
        return _bit_reverse(m.mask, m.n)

    def compare(self, a: Monomial, b: Monomial) -> int:
        """-1, 0, or 1 as a < b, a = b, a > b; defined within one degree."""
        if a.n != b.n:
            raise ValueError("monomials must share the ambient variable count")
        if a.degree != b.degree:
            raise ValueError("degrevlex comparison is defined within one graded component")
        ka, kb = self.descending_key(a), self.descending_key(b)
        if ka == kb:
            return 0
        return 1 if ka < kb else -1

    def greater(self, a: Monomial, b: Monomial) -> bool:
        return self.compare(a, b) > 0


DEGREVLEX_FORWARD = MonomialOrder("forward")
DEGREVLEX_REVERSED = MonomialOrder("reversed")


def degree_masks(n: int, s: int) -> list[int]:
    """All degree-s monomial masks on n variables, ascending.

    Ascending mask order equals descending forward degrevlex, so this is
    also the natural column layout for multiplication-map matrices.
    """
    if s < 0 or s > n:
        return []
    masks = [sum(1 << b for b in bits) for bits in combinations(range(n), s)]
    masks.sort()
    return masks
