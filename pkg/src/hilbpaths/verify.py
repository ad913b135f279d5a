"""Invariant suites: each check compares two independent computations.

Every suite yields CheckRecord objects one at a time so a caller can
stream progress; a record carries enough detail to reproduce a failure
on its own. Suites and their desk-scale default ranges:

    tables      quotient dimensions against confined-walk counts
    bounds      truncation lower / walk-count upper sandwich, random pairs
    recursions  the halving identities for walks and for quotients
    formula     the inclusion-exclusion closed form against the DP
    leading     leading-monomial sets against path crossing sets
    membership  witness monomials outside the canonical ideals
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional, Sequence

from .algebra import (
    DEGREVLEX_FORWARD,
    DEGREVLEX_REVERSED,
    Monomial,
    consecutive_pair_form,
    reversed_pair_form,
)
from .hilbert import (
    LARGE_N_EXTERIOR,
    LARGE_N_SQUAREFREE,
    canonical_ideal,
    check_bounds,
    contains_monomial,
    graded_dim,
    hilbert_function,
    leading_monomials,
    random_exterior_pair,
    verify_hilbert_recursion,
)
from .linalg import DEFAULT_PRIMES, PrimeField
from .paths import (
    classify_path,
    closed_form_coefficient,
    count_paths,
    enumerate_paths,
    path_to_monomial,
    verify_path_recursion,
)

__all__ = [
    "CheckRecord",
    "SUITE_NAMES",
    "suite_tables",
    "suite_bounds",
    "suite_recursions",
    "suite_formula",
    "suite_leading",
    "suite_membership",
    "run_suite",
    "bold_position",
]


@dataclass(frozen=True)
class CheckRecord:
    suite: str
    name: str
    passed: bool
    details: dict

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "name": self.name,
            "passed": self.passed,
            "details": self.details,
        }


def bold_position(n: int, s: int) -> bool:
    """Whether the even-n walk count is proven equal to the quotient dimension.

    Equality is established for s up to n//3 + 1 (postulation range) and
    from s = n/2 on (top range); in between the walk count is only an
    upper bound at desk scale.
    """
    return s <= n // 3 + 1 or 2 * s >= n


def suite_tables(
    max_n: Optional[int] = None,
    primes: Sequence[int] = DEFAULT_PRIMES,
    seed=0,
    allow_large: bool = False,
    parity: Optional[str] = None,
) -> Iterator[CheckRecord]:
    """Canonical-pair Hilbert functions against the walk-count tables.

    Odd rows must match a(n, s) in every degree. Even rows must match at
    every proven position and stay at or below the walk count at the
    remaining ones (those are upper bounds, their sharpness is open).
    """
    if max_n is None:
        max_n = 13
    odd_cap = max_n if allow_large else min(max_n, LARGE_N_EXTERIOR)
    even_cap = odd_cap
    if parity in (None, "odd"):
        for n in range(3, odd_cap + 1, 2):
            hf = hilbert_function(canonical_ideal(n), primes=primes, allow_large=allow_large)
            expected = tuple(count_paths(n, s) for s in range(n + 1))
            passed = hf.dims == expected
            yield CheckRecord(
                "tables",
                f"table-odd-n{n}",
                passed,
                {
                    "n": n,
                    "dims": list(hf.dims),
                    "walk_counts": list(expected),
                    "primes_agree": hf.agreed,
                },
            )
    if parity in (None, "even"):
        for n in range(4, even_cap + 1, 2):
            hf = hilbert_function(canonical_ideal(n), primes=primes, allow_large=allow_large)
            expected = tuple(count_paths(n, s) for s in range(n + 1))
            mismatches = []
            for s in range(n + 1):
                if bold_position(n, s):
                    if hf.dims[s] != expected[s]:
                        mismatches.append({"s": s, "dim": hf.dims[s], "walk_count": expected[s]})
                elif hf.dims[s] > expected[s]:
                    mismatches.append({"s": s, "dim": hf.dims[s], "upper_bound": expected[s]})
            yield CheckRecord(
                "tables",
                f"table-even-n{n}",
                not mismatches,
                {
                    "n": n,
                    "dims": list(hf.dims),
                    "walk_counts": list(expected),
                    "open_positions": [
                        s for s in range(n + 1) if not bold_position(n, s)
                    ],
                    "mismatches": mismatches,
                    "primes_agree": hf.agreed,
                },
            )


def suite_bounds(
    max_n: Optional[int] = None,
    primes: Sequence[int] = DEFAULT_PRIMES,
    seed=0,
    allow_large: bool = False,
    pairs_per_n: int = 20,
) -> Iterator[CheckRecord]:
    """Random exterior quadratic pairs stay inside the dimension sandwich."""
    if max_n is None:
        max_n = 12
    for n in range(2, max_n + 1):
        for instance in range(pairs_per_n):
            spec = random_exterior_pair(n, seed=instance)
            hf = hilbert_function(spec, primes=primes, allow_large=allow_large)
            report = check_bounds(hf)
            details = {
                "n": n,
                "seed": instance,
                "dims": list(report.dims),
                "lower": list(report.lower),
                "upper": list(report.upper),
            }
            if report.failures:
                details["failing_degrees"] = list(report.failures)
            yield CheckRecord("bounds", f"bounds-n{n}-seed{instance}", report.ok, details)


def suite_recursions(
    max_n: Optional[int] = None,
    primes: Sequence[int] = DEFAULT_PRIMES,
    seed=0,
    allow_large: bool = False,
) -> Iterator[CheckRecord]:
    """Halving recursions: walk counts for k up to max_n, quotients for 2k <= max_n."""
    if max_n is None:
        max_n = 12
    for k in range(max_n + 1):
        for s in range(k + 3):
            chk = verify_path_recursion(k, s)
            yield CheckRecord(
                "recursions",
                f"walk-recursion-k{k}-s{s}",
                chk.ok,
                {"k": k, "s": s, "lhs": chk.lhs, "rhs": chk.rhs},
            )
    hilb_cap = min(max_n // 2, LARGE_N_EXTERIOR // 2)
    for k in range(1, hilb_cap + 1):
        for s in range(k + 3):
            chk = verify_hilbert_recursion(k, s, seed=seed, primes=primes)
            yield CheckRecord(
                "recursions",
                f"quotient-recursion-k{k}-s{s}",
                chk.ok,
                {
                    "k": k,
                    "s": s,
                    "lhs": chk.lhs,
                    "rhs": chk.rhs,
                    "primes_agree": chk.agreed,
                },
            )


def suite_formula(
    max_n: Optional[int] = None,
    primes: Sequence[int] = DEFAULT_PRIMES,
    seed=0,
    allow_large: bool = False,
) -> Iterator[CheckRecord]:
    """Inclusion-exclusion closed form equals the DP count on its whole range."""
    if max_n is None:
        max_n = 40
    for n in range(max_n + 1):
        mismatches = []
        for s in range(n // 3 + 2):
            formula = closed_form_coefficient(n, s)
            dp = count_paths(n, s)
            if formula != dp:
                mismatches.append({"s": s, "formula": formula, "dp": dp})
        yield CheckRecord(
            "formula",
            f"closed-form-n{n}",
            not mismatches,
            {"n": n, "s_max": n // 3 + 1, "mismatches": mismatches},
        )


def _crossing_monomials(n: int, s: int) -> tuple[set, set]:
    left, right = set(), set()
    for path in enumerate_paths(n, s, constrained=False):
        report = classify_path(path)
        m = path_to_monomial(path)
        if report.crosses_left:
            left.add(m)
        if report.crosses_right:
            right.add(m)
    return left, right


def suite_leading(
    max_n: Optional[int] = None,
    primes: Sequence[int] = DEFAULT_PRIMES,
    seed=0,
    allow_large: bool = False,
) -> Iterator[CheckRecord]:
    """Leading monomials of the two pairing forms equal the crossing sets.

    The consecutive pairing under forward degrevlex must lead exactly on
    the left-crossing monomials; the reversed pairing under reversed
    degrevlex on the right-crossing ones.
    """
    if max_n is None:
        max_n = 10
    field = PrimeField(int(list(primes)[0]))
    for n in range(2, max_n + 1):
        f = consecutive_pair_form(n, field)
        g = reversed_pair_form(n, field)
        for s in range(2, n + 1):
            left, right = _crossing_monomials(n, s)
            lead_f = leading_monomials(f, s, DEGREVLEX_FORWARD)
            lead_g = leading_monomials(g, s, DEGREVLEX_REVERSED)
            ok_left = lead_f == left
            ok_right = lead_g == right
            details = {
                "n": n,
                "s": s,
                "left_crossing_count": len(left),
                "right_crossing_count": len(right),
            }
            if not ok_left:
                details["left_only_in_leading"] = sorted(str(m) for m in lead_f - left)[:5]
                details["left_only_in_paths"] = sorted(str(m) for m in left - lead_f)[:5]
            if not ok_right:
                details["right_only_in_leading"] = sorted(str(m) for m in lead_g - right)[:5]
                details["right_only_in_paths"] = sorted(str(m) for m in right - lead_g)[:5]
            yield CheckRecord(
                "leading", f"leading-n{n}-s{s}", ok_left and ok_right, details
            )


def suite_membership(
    max_n: Optional[int] = None,
    primes: Sequence[int] = DEFAULT_PRIMES,
    seed=0,
    allow_large: bool = False,
) -> Iterator[CheckRecord]:
    """Witness monomials outside the canonical ideals, with the matching dims.

    Odd n = 2k+1: the product of the top k+1 variables is not in the
    ideal and the quotient is one-dimensional in degree k+1. Even
    n = 2k: none of the 2^k mixed pair products is in the ideal and the
    quotient dimension in degree k is exactly 2^k.
    """
    if max_n is None:
        max_n = 13
    for n in range(3, min(max_n, 13) + 1, 2):
        k = (n - 1) // 2
        spec = canonical_ideal(n)
        witness = Monomial.from_indices(n, range(k + 1, 2 * k + 2))
        member = contains_monomial(spec, witness, primes=primes)
        dim = graded_dim(spec, k + 1, primes=primes)
        passed = (not member.contained) and dim.dim == 1
        yield CheckRecord(
            "membership",
            f"membership-odd-n{n}",
            passed,
            {
                "n": n,
                "witness": str(witness),
                "contained": member.contained,
                "dim_at_witness_degree": dim.dim,
                "expected_dim": 1,
            },
        )
    for n in range(4, min(max_n, 12) + 1, 2):
        k = n // 2
        spec = canonical_ideal(n)
        contained_witnesses = []
        for choices in product((0, 1), repeat=k):
            idx = [2 * i - 1 + c for i, c in zip(range(1, k + 1), choices)]
            witness = Monomial.from_indices(n, idx)
            member = contains_monomial(spec, witness, primes=primes)
            if member.contained:
                contained_witnesses.append(str(witness))
        dim = graded_dim(spec, k, primes=primes)
        passed = (not contained_witnesses) and dim.dim == 2**k
        yield CheckRecord(
            "membership",
            f"membership-even-n{n}",
            passed,
            {
                "n": n,
                "witness_count": 2**k,
                "contained_witnesses": contained_witnesses,
                "dim_at_witness_degree": dim.dim,
                "expected_dim": 2**k,
            },
        )


SUITE_NAMES = ("tables", "bounds", "recursions", "formula", "leading", "membership")

_SUITES = {
    "tables": suite_tables,
    "bounds": suite_bounds,
    "recursions": suite_recursions,
    "formula": suite_formula,
    "leading": suite_leading,
    "membership": suite_membership,
}


def run_suite(
    name: str,
    max_n: Optional[int] = None,
    primes: Sequence[int] = DEFAULT_PRIMES,
    seed=0,
    allow_large: bool = False,
) -> Iterator[CheckRecord]:
    """Yield the records of one named suite, or of every suite for "all"."""
    if name == "all":
        for sub in SUITE_NAMES:
            yield from _SUITES[sub](
                max_n=None, primes=primes, seed=seed, allow_large=allow_large
            )
        return
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITE_NAMES + ('all',)}")
    yield from _SUITES[name](max_n=max_n, primes=primes, seed=seed, allow_large=allow_large)
