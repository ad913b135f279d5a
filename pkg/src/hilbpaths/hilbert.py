"""Graded dimensions of quotients by a pair of forms, computed exactly.

The degree-s component of a quotient algebra is the cokernel of the
multiplication maps sending each basis monomial m of complementary
degree to generator*m. Stacking those products as rows of a matrix over
a prime field turns the graded dimension into an exact rank problem:

    dim (A / (F_1, F_2))_s  =  C(n, s) - rank(rows F_i * m).

Random instances draw fresh coefficients per prime, so a rank computed
at one prime can only undershoot the generic value, never overshoot.
Running two or more primes and keeping the maximum rank (the minimum
dimension) therefore gives a one-sided certificate; agreement between
the primes is recorded and surfaced but disagreement is not fatal.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Callable, NamedTuple, Optional, Sequence

from .algebra import (
    EXTERIOR,
    SQUAREFREE,
    DEGREVLEX_FORWARD,
    Form,
    LinearForm,
    Monomial,
    MonomialOrder,
    _inversions,
    canonical_pair_even,
    canonical_pair_odd,
    degree_masks,
    form_power,
    linear_power_squarefree,
    mirrored_pair_odd,
    random_form,
    random_linear_form,
)
from .linalg import DEFAULT_PRIMES, MatrixFp, PrimeField, pivot_columns, rank
from .paths import count_paths, truncate_product

__all__ = [
    "LARGE_N_EXTERIOR",
    "LARGE_N_SQUAREFREE",
    "IdealSpec",
    "GradedDim",
    "HilbertFunction",
    "Membership",
    "BoundsReport",
    "HilbertRecursionCheck",
    "QuestionReport",
    "canonical_ideal",
    "random_exterior_pair",
    "squarefree_two_squares_ideal",
    "exterior_power_pair",
    "squarefree_power_squares",
    "multiplication_matrix",
    "graded_dim",
    "hilbert_function",
    "sqfree_two_squares",
    "contains_monomial",
    "leading_monomials",
    "check_bounds",
    "verify_hilbert_recursion",
    "question_report",
]

# Full Hilbert functions above these sizes take minutes per prime; the
# caller must opt in explicitly instead of stumbling into them.
LARGE_N_EXTERIOR = 14
LARGE_N_SQUAREFREE = 13


@dataclass(frozen=True)
class IdealSpec:
    """Recipe for a pair of generators, rebuildable over any prime field.

    The factory draws fresh coefficients per field, so the same spec can
    be evaluated at several primes; deterministic specs simply rebuild
    the same integer matrix reduced mod p.
    """

    n: int
    algebra: str
    gen_degrees: tuple[int, ...]
    description: str
    seed: object = None
    factory: Callable[[PrimeField], tuple[Form, ...]] = dc_field(
        default=None, repr=False, compare=False
    )

    def generators(self, field: PrimeField) -> tuple[Form, ...]:
        if field.p <= self.n + 2:
            raise ValueError(
                f"field characteristic must exceed n+2 (p={field.p}, n={self.n})"
            )
        gens = tuple(self.factory(field))
        for F in gens:
            if F.n != self.n or F.field.p != field.p or F.algebra != self.algebra:
                raise ValueError("factory produced generators outside the declared algebra")
        return gens


def canonical_ideal(
    n: int,
    mirrored: bool = False,
    alphas: Sequence[int] | None = None,
) -> IdealSpec:
    """Canonical exterior quadratic pair on n variables.

    Odd n uses the shifted pairing (or the nested one when mirrored is
    set); even n uses the weighted consecutive pairing, optionally with
    explicit weights. For n <= 2 the corresponding forms collapse to
    fewer terms (k = 0 gives the zero pair) and the quotient is cut
    accordingly.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n % 2 == 1:
        k = (n - 1) // 2
        if alphas is not None:
            raise ValueError("alpha weights only apply to the even canonical pair")
        if mirrored:
            factory = lambda field: mirrored_pair_odd(k, field)
            desc = f"canonical exterior pair on n={n} (nested pairing)"
        else:
            factory = lambda field: canonical_pair_odd(k, field)
            desc = f"canonical exterior pair on n={n} (shifted pairing)"
    else:
        k = n // 2
        if mirrored:
            raise ValueError("the nested variant only applies to odd n")
        alph = tuple(alphas) if alphas is not None else None
        factory = lambda field: canonical_pair_even(k, field, alph)
        desc = f"canonical exterior pair on n={n} (weighted consecutive pairing)"
    return IdealSpec(n, EXTERIOR, (2, 2), desc, None, factory)


def random_exterior_pair(n: int, seed=0) -> IdealSpec:
    """Two exterior quadratics with all C(n,2) coefficients drawn per prime."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def factory(field: PrimeField) -> tuple[Form, Form]:
        f = random_form(n, field, seed, degree=2, algebra=EXTERIOR, tag="f")
        g = random_form(n, field, seed, degree=2, algebra=EXTERIOR, tag="g")
        return f, g

    return IdealSpec(
        n, EXTERIOR, (2, 2), f"random exterior quadratic pair on n={n}, seed={seed}", seed, factory
    )


def _linear_lift(n: int, ell) -> Optional[tuple[int, ...]]:
    if ell is None:
        return None
    if isinstance(ell, LinearForm):
        coeffs = ell.coefficients
    else:
        coeffs = tuple(int(c) for c in ell)
    if len(coeffs) != n:
        raise ValueError(f"linear form needs exactly {n} coefficients")
    return coeffs


def squarefree_two_squares_ideal(n: int, seed=0, ell1=None, ell2=None) -> IdealSpec:
    """Squarefree quotient by the squares of two linear forms.

    The ambient algebra already kills every x_i^2, so the quotient is
    S_n/(x_1^2..x_n^2, l1^2, l2^2). Linear forms may be passed
    explicitly as coefficient vectors; otherwise they are drawn with
    uniform nonzero coefficients per prime.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    lift1 = _linear_lift(n, ell1)
    lift2 = _linear_lift(n, ell2)

    def factory(field: PrimeField) -> tuple[Form, Form]:
        l1 = (
            LinearForm(n, field, lift1)
            if lift1 is not None
            else random_linear_form(n, field, seed, tag="l1")
        )
        l2 = (
            LinearForm(n, field, lift2)
            if lift2 is not None
            else random_linear_form(n, field, seed, tag="l2")
        )
        return linear_power_squarefree(l1, 2), linear_power_squarefree(l2, 2)

    how = "explicit" if (lift1 is not None or lift2 is not None) else f"seed={seed}"
    return IdealSpec(
        n,
        SQUAREFREE,
        (2, 2),
        f"squarefree quotient by two squared linear forms on n={n} ({how})",
        seed,
        factory,
    )


def exterior_power_pair(n: int, d1: int, d2: int, seed=0) -> IdealSpec:
    """Exterior quotient by f^d1 and g^d2 for random quadratics f, g."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if d1 < 1 or d2 < 1:
        raise ValueError("powers must be >= 1")

    def factory(field: PrimeField) -> tuple[Form, Form]:
        f = random_form(n, field, seed, degree=2, algebra=EXTERIOR, tag="f")
        g = random_form(n, field, seed, degree=2, algebra=EXTERIOR, tag="g")
        return form_power(f, d1), form_power(g, d2)

    return IdealSpec(
        n,
        EXTERIOR,
        (2 * d1, 2 * d2),
        f"exterior quotient by quadratic powers d1={d1}, d2={d2} on n={n}, seed={seed}",
        seed,
        factory,
    )


def squarefree_power_squares(n: int, d1: int, d2: int, seed=0) -> IdealSpec:
    """Squarefree quotient by l1^(2 d1) and l2^(2 d2) for random linear l1, l2."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if d1 < 1 or d2 < 1:
        raise ValueError("powers must be >= 1")

    def factory(field: PrimeField) -> tuple[Form, Form]:
        l1 = random_linear_form(n, field, seed, tag="l1")
        l2 = random_linear_form(n, field, seed, tag="l2")
        return linear_power_squarefree(l1, 2 * d1), linear_power_squarefree(l2, 2 * d2)

    return IdealSpec(
        n,
        SQUAREFREE,
        (2 * d1, 2 * d2),
        f"squarefree quotient by linear-form powers 2*d1={2 * d1}, 2*d2={2 * d2} "
        f"on n={n}, seed={seed}",
        seed,
        factory,
    )


# ---------------------------------------------------------------------------
# Matrix assembly and graded dimensions


def multiplication_matrix(
    n: int,
    s: int,
    generators: Sequence[Form],
    field: PrimeField,
    algebra: str,
) -> MatrixFp:
    """Rows generator*m over all basis monomials m; columns the degree-s basis.

    Columns are the degree-s masks in ascending integer order. Exterior
    products carry the inversion-parity sign; squarefree ones do not.
    Generators of degree above s (and zero generators) contribute no rows.
    """
    col_masks = degree_masks(n, s)
    col_index = {m: j for j, m in enumerate(col_masks)}
    exterior = algebra == EXTERIOR
    p = field.p
    entries: list[tuple[int, int, int]] = []
    row = 0
    for F in generators:
        if F.is_zero or F.degree > s:
            continue
        terms = [(tmask, c, p - c) for tmask, c in sorted(F.terms.items())]
        for mmask in degree_masks(n, s - F.degree):
            for tmask, c_pos, c_neg in terms:
                if tmask & mmask:
                    continue
                v = c_neg if exterior and _inversions(tmask, mmask) & 1 else c_pos
                entries.append((row, col_index[tmask | mmask], v))
            row += 1
    return MatrixFp.from_entries(row, len(col_masks), field, entries)


class GradedDim(NamedTuple):
    dim: int
    by_prime: dict
    agreed: bool


def graded_dim(spec: IdealSpec, s: int, primes: Sequence[int] = DEFAULT_PRIMES) -> GradedDim:
    """Dimension of the degree-s component of the quotient.

    Computed as C(n, s) minus the maximum multiplication-matrix rank
    over the given primes; the per-prime dimensions and their agreement
    travel along with the result.
    """
    ps = list(dict.fromkeys(int(p) for p in primes))
    if not ps:
        raise ValueError("need at least one prime")
    full = comb(spec.n, s) if 0 <= s <= spec.n else 0
    if full == 0:
        return GradedDim(0, {p: 0 for p in ps}, True)
    by_prime = {}
    for p in ps:
        field = PrimeField(p)
        gens = spec.generators(field)
        M = multiplication_matrix(spec.n, s, gens, field, spec.algebra)
        by_prime[p] = full - rank(M)
    values = set(by_prime.values())
    return GradedDim(min(values), by_prime, len(values) == 1)


@dataclass(frozen=True)
class HilbertFunction:
    """Dimension sequence of a quotient in degrees 0..n, with provenance."""

    n: int
    algebra: str
    description: str
    gen_degrees: tuple[int, ...]
    seed: object
    primes: tuple[int, ...]
    dims: tuple[int, ...]
    by_prime: dict
    disagreement_degrees: tuple[int, ...]

    @property
    def agreed(self) -> bool:
        return not self.disagreement_degrees

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "algebra": self.algebra,
            "description": self.description,
            "generator_degrees": list(self.gen_degrees),
            "seed": self.seed,
            "primes": list(self.primes),
            "dims": list(self.dims),
            "dims_by_prime": {str(p): list(v) for p, v in self.by_prime.items()},
            "primes_agree": self.agreed,
            "disagreement_degrees": list(self.disagreement_degrees),
        }


def _thread_count(threads: Optional[int]) -> int:
    if threads is None:
        env = os.environ.get("HILBPATHS_THREADS", "").strip()
        threads = int(env) if env else 1
    threads = int(threads)
    if threads < 1:
        raise ValueError("thread count must be >= 1")
    return threads


def hilbert_function(
    spec: IdealSpec,
    primes: Sequence[int] = DEFAULT_PRIMES,
    allow_large: bool = False,
    threads: Optional[int] = None,
) -> HilbertFunction:
    """Graded dimensions of the quotient in every degree 0..n.

    Sizes past the gate (n > 14 exterior, n > 13 squarefree) are refused
    unless allow_large is set, because a full run at that size is a
    many-minute commitment. The optional thread pool evaluates degrees
    concurrently; the elimination kernel releases the interpreter lock.
    """
    gate = LARGE_N_EXTERIOR if spec.algebra == EXTERIOR else LARGE_N_SQUAREFREE
    if spec.n > gate and not allow_large:
        raise ValueError(
            f"n={spec.n} exceeds the {spec.algebra} size gate ({gate}); "
            "pass allow_large=True to proceed"
        )
    nthreads = _thread_count(threads)
    degrees = list(range(spec.n + 1))
    if nthreads == 1:
        results = [graded_dim(spec, s, primes) for s in degrees]
    else:
        with ThreadPoolExecutor(max_workers=nthreads) as pool:
            results = list(pool.map(lambda s: graded_dim(spec, s, primes), degrees))
    ps = list(dict.fromkeys(int(p) for p in primes))
    by_prime = {p: tuple(r.by_prime[p] for r in results) for p in ps}
    return HilbertFunction(
        n=spec.n,
        algebra=spec.algebra,
        description=spec.description,
        gen_degrees=spec.gen_degrees,
        seed=spec.seed,
        primes=tuple(ps),
        dims=tuple(r.dim for r in results),
        by_prime=by_prime,
        disagreement_degrees=tuple(s for s, r in zip(degrees, results) if not r.agreed),
    )


def sqfree_two_squares(
    n: int,
    seed=0,
    primes: Sequence[int] = DEFAULT_PRIMES,
    ell1=None,
    ell2=None,
    allow_large: bool = False,
    threads: Optional[int] = None,
) -> HilbertFunction:
    """Hilbert function of the squarefree quotient by two squared linear forms."""
    spec = squarefree_two_squares_ideal(n, seed=seed, ell1=ell1, ell2=ell2)
    return hilbert_function(spec, primes=primes, allow_large=allow_large, threads=threads)


# ---------------------------------------------------------------------------
# Membership, leading monomials, bounds, recursion, and the comparison report


class Membership(NamedTuple):
    contained: bool
    base_rank: int
    extended_rank: int
    by_prime: dict


def contains_monomial(
    spec: IdealSpec,
    monomial: Monomial,
    primes: Sequence[int] = DEFAULT_PRIMES,
) -> Membership:
    """Whether a monomial lies in the span of the ideal's component.

    Membership holds exactly when appending the monomial's unit row
    leaves the rank unchanged. Both ranks take the maximum over the
    primes, matching the dimension protocol: a non-generic prime can
    only lower a rank, so the maxima are the trustworthy values.
    """
    if monomial.n != spec.n:
        raise ValueError("monomial and ideal live on different variable counts")
    s = monomial.degree
    col_masks = degree_masks(spec.n, s)
    col_index = {m: j for j, m in enumerate(col_masks)}
    base_by, ext_by = {}, {}
    for p in dict.fromkeys(int(q) for q in primes):
        field = PrimeField(p)
        gens = spec.generators(field)
        M = multiplication_matrix(spec.n, s, gens, field, spec.algebra)
        base_by[p] = rank(M)
        ext = MatrixFp(M.rows + 1, M.cols, field)
        ext.array[: M.rows] = M.array
        ext.array[M.rows, col_index[monomial.mask]] = 1
        ext_by[p] = rank(ext)
    base = max(base_by.values())
    extended = max(ext_by.values())
    return Membership(
        contained=(base == extended),
        base_rank=base,
        extended_rank=extended,
        by_prime={p: (base_by[p] == ext_by[p]) for p in base_by},
    )


def leading_monomials(
    F: Form,
    s: int,
    order: MonomialOrder = DEGREVLEX_FORWARD,
) -> frozenset:
    """Degree-s leading monomials of the principal ideal generated by F.

    Sorts the degree-s basis largest-first under the order and reads off
    the pivot columns of the multiplication matrix: those are exactly
    the leading monomials of the elements F*m.
    """
    if F.degree > s:
        return frozenset()
    col_masks = degree_masks(F.n, s)
    M = multiplication_matrix(F.n, s, [F], F.field, F.algebra)
    keyed = sorted(range(len(col_masks)), key=lambda j: order.descending_key(Monomial(F.n, col_masks[j])))
    pivots = pivot_columns(M, column_order=keyed)
    return frozenset(Monomial(F.n, col_masks[j]) for j in pivots)


class BoundsReport(NamedTuple):
    n: int
    dims: tuple
    lower: tuple
    upper: tuple
    failures: tuple

    @property
    def ok(self) -> bool:
        return not self.failures


def check_bounds(hf: HilbertFunction) -> BoundsReport:
    """Sandwich a quadratic-pair Hilbert function between its two bounds.

    Lower bound: the truncated series of (1+t)^n (1-t^2)^2, zero-padded.
    Upper bound: the confined-walk counts a(n, s). Both bounds are
    quadratic-pair facts, so other generator degrees are rejected.
    """
    if tuple(hf.gen_degrees) != (2, 2):
        raise ValueError("bounds apply to quotients by two quadratics only")
    n = hf.n
    trunc = truncate_product(n, (2, 2))
    lower = tuple(trunc[s] if s < len(trunc) else 0 for s in range(n + 1))
    upper = tuple(count_paths(n, s) for s in range(n + 1))
    failures = tuple(
        s for s in range(n + 1) if not lower[s] <= hf.dims[s] <= upper[s]
    )
    return BoundsReport(n, tuple(hf.dims), lower, upper, failures)


class HilbertRecursionCheck(NamedTuple):
    k: int
    s: int
    lhs: int
    rhs: int
    terms: tuple
    agreed: bool

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def _sqfree_dim_extended(m: int, j: int, seed, primes) -> tuple[int, bool]:
    """Two-squares squarefree dimension with the m = -1, -2 seed values."""
    if j < 0:
        return 0, True
    if m in (-2, -1):
        return (1 if j == 0 else 0), True
    if j > m:
        return 0, True
    gd = graded_dim(squarefree_two_squares_ideal(m, seed=seed), j, primes)
    return gd.dim, gd.agreed


def verify_hilbert_recursion(
    k: int,
    s: int,
    seed=0,
    primes: Sequence[int] = DEFAULT_PRIMES,
) -> HilbertRecursionCheck:
    """Check the halving recursion linking the two quotient families.

    The degree-s dimension of the canonical even exterior quotient on 2k
    variables must equal sum over r = s (mod 2) of 2^r C(k, r) b(k-r-2,
    (s-r)/2), where b is the squarefree two-squares dimension extended
    by b(-2, 0) = b(-1, 0) = 1. The left side is exact; every b value on
    the right comes from a fresh random instance, so the identity is
    exercised end to end.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    lhs = graded_dim(canonical_ideal(2 * k), s, primes)
    lhs_gd, lhs_agreed = lhs.dim, lhs.agreed
    rhs = 0
    terms = []
    agreed = lhs_agreed
    for r in range(k + 1):
        if (s - r) % 2 != 0:
            continue
        j = (s - r) // 2
        if j < 0:
            continue
        m = k - r - 2
        if m < -2:
            continue
        val, ok = _sqfree_dim_extended(m, j, seed, primes)
        agreed = agreed and ok
        term = (2**r) * comb(k, r) * val
        if term:
            terms.append((r, term))
        rhs += term
    return HilbertRecursionCheck(k, s, lhs_gd, rhs, tuple(terms), agreed)


@dataclass(frozen=True)
class QuestionReport:
    """Side-by-side dimensions of the two power-quotient constructions.

    Compares the squarefree quotient by l1^(2 d1), l2^(2 d2) with the
    exterior quotient by f^d1, g^d2 in every degree. The report carries
    no timing data, so equal inputs produce byte-identical output.
    """

    n: int
    d1: int
    d2: int
    seed: object
    primes: tuple[int, ...]
    exterior_dims: tuple[int, ...]
    squarefree_dims: tuple[int, ...]
    match: bool
    first_difference: Optional[int]
    degenerate_powers: tuple[str, ...]
    disagreement_degrees: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "d1": self.d1,
            "d2": self.d2,
            "seed": self.seed,
            "primes": list(self.primes),
            "exterior_dims": list(self.exterior_dims),
            "squarefree_dims": list(self.squarefree_dims),
            "match": self.match,
            "first_difference": self.first_difference,
            "degenerate_powers": list(self.degenerate_powers),
            "disagreement_degrees": list(self.disagreement_degrees),
        }


def question_report(
    n: int,
    d1: int,
    d2: int,
    seed=0,
    primes: Sequence[int] = DEFAULT_PRIMES,
    allow_large: bool = False,
    threads: Optional[int] = None,
) -> QuestionReport:
    """Compare the squarefree and exterior power quotients degree by degree."""
    ext = hilbert_function(
        exterior_power_pair(n, d1, d2, seed=seed),
        primes=primes,
        allow_large=allow_large,
        threads=threads,
    )
    sq = hilbert_function(
        squarefree_power_squares(n, d1, d2, seed=seed),
        primes=primes,
        allow_large=allow_large,
        threads=threads,
    )
    first_diff = None
    for s, (a, b) in enumerate(zip(ext.dims, sq.dims)):
        if a != b:
            first_diff = s
            break
    degenerate = []
    if 2 * d1 > n:
        degenerate.append(
            f"first generator has degree {2 * d1} > n={n}; "
            "both of its incarnations vanish identically"
        )
    if 2 * d2 > n:
        degenerate.append(
            f"second generator has degree {2 * d2} > n={n}; "
            "both of its incarnations vanish identically"
        )
    disagreements = tuple(sorted(set(ext.disagreement_degrees) | set(sq.disagreement_degrees)))
    return QuestionReport(
        n=n,
        d1=d1,
        d2=d2,
        seed=seed,
        primes=ext.primes,
        exterior_dims=ext.dims,
        squarefree_dims=sq.dims,
        match=ext.dims == sq.dims,
        first_difference=first_diff,
        degenerate_powers=tuple(degenerate),
        disagreement_degrees=disagreements,
    )
