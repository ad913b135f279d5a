"""Acceptance checklist: twelve end-to-end criteria with pinned time budgets.

Each test covers one numbered criterion, prints a single [PASS] line on
success (visible with pytest -rP or -s), and enforces the runtime budget
where one is pinned. Reference values live in refvalues.py and were
computed independently of the library code.
"""

import time
from math import comb

import pytest

from refvalues import EVEN_TABLE, EVEN_TABLE_CSV, ODD_TABLE, ODD_TABLE_CSV

from hilbpaths.cli import main
from hilbpaths.hilbert import (
    canonical_ideal,
    hilbert_function,
    question_report,
    sqfree_two_squares,
    verify_hilbert_recursion,
)
from hilbpaths.paths import (
    boundary_crossing_count,
    classify_path,
    closed_form_coefficient,
    count_paths,
    enumerate_paths,
    verify_path_recursion,
)
from hilbpaths.verify import (
    bold_position,
    suite_bounds,
    suite_leading,
    suite_membership,
)


def _report(num: int, label: str, elapsed: float | None = None) -> None:
    extra = f" ({elapsed:.2f}s)" if elapsed is not None else ""
    print(f"[PASS] criterion {num}: {label}{extra}")


def test_01_odd_walk_table(capsys):
    started = time.perf_counter()
    code = main(["paths", "--table", "odd", "--max-n", "19"])
    elapsed = time.perf_counter() - started
    out, _ = capsys.readouterr()
    assert code == 0
    assert out == ODD_TABLE_CSV
    assert ODD_TABLE[19][8] == 25213
    assert ODD_TABLE[17][7] == 7753
    assert elapsed < 1.0, f"odd table took {elapsed:.3f}s, budget 1s"
    with capsys.disabled():
        _report(1, "odd walk table reproduced byte-exactly", elapsed)


def test_02_even_walk_table(capsys):
    started = time.perf_counter()
    code = main(["paths", "--table", "even", "--max-n", "20"])
    elapsed = time.perf_counter() - started
    out, _ = capsys.readouterr()
    assert code == 0
    assert out == EVEN_TABLE_CSV
    assert EVEN_TABLE[20][8] == 53296
    assert EVEN_TABLE[14][6] == 1093
    assert elapsed < 1.0, f"even table took {elapsed:.3f}s, budget 1s"
    with capsys.disabled():
        _report(2, "even walk table reproduced byte-exactly", elapsed)


def test_03_odd_quotient_rows(capsys):
    started = time.perf_counter()
    for n in (3, 5, 7, 9, 11, 13):
        hf = hilbert_function(canonical_ideal(n))
        expected = tuple(count_paths(n, s) for s in range(n + 1))
        assert hf.dims == expected, f"n={n}: {hf.dims} != {expected}"
        assert hf.agreed and len(hf.primes) == 2
    elapsed = time.perf_counter() - started
    # sizes past the gate stay opt-in; a full n=17 run is not a desk job
    with pytest.raises(ValueError):
        hilbert_function(canonical_ideal(17))
    assert elapsed < 300.0, f"odd rows took {elapsed:.1f}s, budget 300s"
    with capsys.disabled():
        _report(3, "odd canonical quotients equal walk counts, n <= 13", elapsed)


def test_04_even_quotient_rows(capsys):
    started = time.perf_counter()
    for n in range(4, 13, 2):
        hf = hilbert_function(canonical_ideal(n))
        expected = tuple(count_paths(n, s) for s in range(n + 1))
        assert hf.dims == expected, f"n={n}: {hf.dims} != {expected}"
    hf14 = hilbert_function(canonical_ideal(14))
    for s in range(15):
        walk = count_paths(14, s)
        if bold_position(14, s):
            assert hf14.dims[s] == walk, f"n=14 s={s}: {hf14.dims[s]} != {walk}"
        else:
            assert hf14.dims[s] <= walk
    assert hf14.dims[6] <= 1093
    elapsed = time.perf_counter() - started
    assert elapsed < 600.0, f"even rows took {elapsed:.1f}s, budget 600s"
    with capsys.disabled():
        _report(4, "even canonical quotients match their proven entries", elapsed)


def test_05_squarefree_rows(capsys):
    started = time.perf_counter()
    for n in range(14):
        expected = tuple(count_paths(n, s) for s in range(n + 1))
        for seed in (0, 1, 2):
            hf = sqfree_two_squares(n, seed=seed)
            assert len(hf.primes) == 2
            assert hf.dims == expected, f"n={n} seed={seed}: {hf.dims} != {expected}"
    elapsed = time.perf_counter() - started
    assert elapsed < 600.0, f"squarefree rows took {elapsed:.1f}s, budget 600s"
    with capsys.disabled():
        _report(5, "squarefree two-squares rows equal walk counts, n <= 13", elapsed)


def test_06_bounds_sandwich(capsys):
    started = time.perf_counter()
    records = list(suite_bounds(max_n=12, pairs_per_n=20))
    elapsed = time.perf_counter() - started
    assert len(records) == 11 * 20  # n = 2..12, twenty seeds each
    bad = [r.name for r in records if not r.passed]
    assert not bad, f"bound violations: {bad}"
    with capsys.disabled():
        _report(6, "220 random pairs sandwiched between the two bounds", elapsed)


def test_07_walk_combinatorics(capsys):
    started = time.perf_counter()
    for n in range(13):
        for s in range(n + 1):
            total = left = right = both = confined = 0
            for path in enumerate_paths(n, s, constrained=False):
                report = classify_path(path)
                total += 1
                confined += report.confined
                left += report.crosses_left
                right += report.crosses_right
                both += report.crosses_left and report.crosses_right
            assert total == comb(n, s)
            assert confined == count_paths(n, s), (n, s)
            assert left == right == boundary_crossing_count(n, s), (n, s)
            assert confined + left + right - both == total, (n, s)
    elapsed = time.perf_counter() - started
    with capsys.disabled():
        _report(7, "enumeration agrees with the DP and the crossing counts", elapsed)


def test_08_closed_form(capsys):
    started = time.perf_counter()
    checked = 0
    for n in range(41):
        for s in range(n // 3 + 2):
            assert closed_form_coefficient(n, s) == count_paths(n, s), (n, s)
            checked += 1
    elapsed = time.perf_counter() - started
    assert checked == sum(n // 3 + 2 for n in range(41))
    assert elapsed < 1.0, f"closed form took {elapsed:.3f}s, budget 1s"
    with capsys.disabled():
        _report(8, "closed-form coefficients equal walk counts, n <= 40", elapsed)


def test_09_witness_monomials(capsys):
    started = time.perf_counter()
    records = list(suite_membership(max_n=13))
    elapsed = time.perf_counter() - started
    names = {r.name for r in records}
    assert {f"membership-odd-n{n}" for n in range(3, 14, 2)} <= names
    assert {f"membership-even-n{n}" for n in range(4, 13, 2)} <= names
    bad = [r.name for r in records if not r.passed]
    assert not bad, f"witness failures: {bad}"
    with capsys.disabled():
        _report(9, "witness monomials stay outside the canonical ideals", elapsed)


def test_10_recursions(capsys):
    started = time.perf_counter()
    for k in range(13):
        for s in range(k + 3):
            chk = verify_path_recursion(k, s)
            assert chk.ok, f"walk recursion k={k} s={s}: {chk.lhs} != {chk.rhs}"
    for k in range(7):
        for s in range(k + 3):
            chk = verify_hilbert_recursion(k, s)
            assert chk.ok, f"quotient recursion k={k} s={s}: {chk.lhs} != {chk.rhs}"
            assert chk.agreed
    elapsed = time.perf_counter() - started
    with capsys.disabled():
        _report(10, "walk recursion (k <= 12) and quotient recursion (k <= 6)", elapsed)


def test_11_leading_monomial_sets(capsys):
    started = time.perf_counter()
    records = list(suite_leading(max_n=10))
    elapsed = time.perf_counter() - started
    assert len(records) == sum(n - 1 for n in range(2, 11))  # s = 2..n per n
    bad = [r.name for r in records if not r.passed]
    assert not bad, f"leading-set mismatches: {bad}"
    with capsys.disabled():
        _report(11, "leading monomials equal the crossing sets, n <= 10", elapsed)


def test_12_power_quotient_reports(capsys):
    started = time.perf_counter()
    verdicts = {}
    for n in range(11):
        for d1 in (1, 2):
            for d2 in (1, 2):
                rep = question_report(n, d1, d2, seed=0)
                assert len(rep.exterior_dims) == n + 1
                assert len(rep.squarefree_dims) == n + 1
                assert rep.match == (rep.first_difference is None)
                verdicts[(n, d1, d2)] = rep.match
    again = question_report(9, 2, 1, seed=0)
    first = question_report(9, 2, 1, seed=0)
    assert again.as_dict() == first.as_dict()
    elapsed = time.perf_counter() - started
    matched = sum(verdicts.values())
    with capsys.disabled():
        _report(
            12,
            f"power-quotient comparison recorded ({matched}/{len(verdicts)} configurations match)",
            elapsed,
        )
