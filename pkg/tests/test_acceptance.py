"""Acceptance criteria, one test each, printing a single PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -s`` or ``python tests/test_acceptance.py``.
"""

import itertools
import sys
import time
from contextlib import contextmanager

import pytest

from supermult.families import Component, FamilySpec
from supermult.freelie import GradedAlphabet, enumerate_s_regular
from supermult.multiplier import (
    abelian_multiplier,
    abelian_multiplier2,
    dim1_derived_multiplier2,
    dim1_even_candidates,
    dim1_total_base,
    direct_sum_multiplier2,
    heisenberg_even_multiplier2,
    multiplier2_upper_bound,
)
from supermult.oracle import is_capable, multiplier_of, multiplier_oracle, oracle_run, present, sequence_check, z_c_star
from supermult.superalg import (
    Dim1Family,
    abelian,
    classify_dim1_derived,
    derived_subalgebra,
    dim1_families,
    heisenberg_even,
    heisenberg_odd,
)
from supermult.verify import corpus
from supermult.witt import ParitySignature, SuperDim, graded_dims, multidegrees, super_witt_SW

_printer = None


def _report(number, ok, elapsed, limit, detail):
    status = "PASS" if ok and elapsed < limit else "FAIL"
    line = f"criterion {number}: {status} ({elapsed:.2f}s, limit {limit:g}s) {detail}"
    if _printer is not None:
        with _printer.disabled():
            print(line)
    else:
        print(line)
    return status == "PASS"


@pytest.fixture(autouse=True)
def _capture(capsys):
    global _printer
    _printer = capsys
    yield
    _printer = None


@contextmanager
def timed():
    oracle_run.cache_clear()
    box = {}
    start = time.perf_counter()
    yield box
    box["elapsed"] = time.perf_counter() - start


def _finish(number, ok, box, limit, detail):
    assert _report(number, ok, box["elapsed"], limit, detail), detail


def test_criterion_1_odd_heisenberg():
    with timed() as box:
        got = multiplier_oracle(present(heisenberg_odd(1)), 2)
    _finish(1, got == SuperDim(2, 2), box, 1, f"M^2(H_1) = {got}")


def test_criterion_2_even_heisenberg():
    with timed() as box:
        got = multiplier_oracle(present(heisenberg_even(1, 0)), 2)
    _finish(2, got == SuperDim(5, 0), box, 1, f"M^2(H(1,0)) = {got}")


def test_criterion_3_odd_square():
    with timed() as box:
        got = multiplier_oracle(present(heisenberg_even(0, 1)), 2)
        closed = heisenberg_even_multiplier2(0, 1)
    _finish(3, got == closed == SuperDim(0, 0), box, 1, f"M^2(H(0,1)) oracle {got}, closed {closed}")


def test_criterion_4_abelian():
    bad = []
    with timed() as box:
        for m in range(4):
            for n in range(4 - m):
                for c in (1, 2, 3):
                    got = multiplier_oracle(present(abelian(m, n)), c)
                    sig = ParitySignature(m, n)
                    layer = [sum(super_witt_SW(sig, a) for a in multidegrees(m + n, c + 1) if
                                 sum(a[m:]) % 2 == p) for p in (0, 1)] if m + n else [0, 0]
                    want = SuperDim(*layer)
                    if got != want or abelian_multiplier(m, n, c).dims != want:
                        bad.append((m, n, c))
                    if c == 2 and abelian_multiplier2(m, n) != want:
                        bad.append((m, n, "cubic"))
    _finish(4, not bad, box, 60, f"{30 - len(bad)}/30 cases, mismatches {bad}")


def test_criterion_5_basis_counts():
    bad, total = [], 0
    with timed() as box:
        for s in range(1, 4):
            for m in range(s + 1):
                n = s - m
                alph, sig = GradedAlphabet.from_signature(m, n), ParitySignature(m, n)
                for length in range(1, 7):
                    counts = {}
                    for mono in enumerate_s_regular(alph, length):
                        counts[mono.multidegree] = counts.get(mono.multidegree, 0) + 1
                    for a in multidegrees(m + n, length):
                        total += 1
                        if counts.get(a, 0) != super_witt_SW(sig, a):
                            bad.append((m, n, a))
        for m, n in itertools.product(range(5), repeat=2):
            if m + n == 0:
                continue
            sig = ParitySignature(m, n)
            for r in range(1, 9):
                total += 1
                summed = sum(super_witt_SW(sig, a) for a in multidegrees(m + n, r))
                if summed != graded_dims(sig, r).dim_Lr:
                    bad.append((m, n, r))
    _finish(5, not bad, box, 30, f"{total - len(bad)}/{total} counts agree")


def test_criterion_6_direct_sums():
    small = [Component("A", (1, 0)), Component("A", (0, 1)), Component("A", (1, 1)),
             Component("Heven", (1, 0)), Component("Heven", (0, 1)), Component("Hodd", (1,))]
    bad, pairs = [], list(itertools.combinations_with_replacement(small, 2))
    with timed() as box:
        for a, b in pairs:
            got = multiplier_of(FamilySpec.of(a, b).build(), 2)
            if got != direct_sum_multiplier2(a, b):
                bad.append(f"{a}+{b}")
    _finish(6, not bad and len(pairs) >= 5, box, 300, f"{len(pairs) - len(bad)}/{len(pairs)} pairs agree")


def test_criterion_7_dim1_catalog():
    bad, plus_one_off, fams = [], 0, dim1_families(5)
    with timed() as box:
        for f in fams:
            L = f.build()
            assert classify_dim1_derived(L) == f
            k, l = L.dim
            got = multiplier_of(L, 2)
            if got != dim1_derived_multiplier2(k, l, f):
                bad.append(str(f))
            if got.total - dim1_total_base(k + l) not in (0, 2, 3):
                bad.append(f"{f} total")
            if f.parity == 0 and (f.m, f.n) == (0, 1) and got != dim1_even_candidates(k, l)["plus_one"]:
                plus_one_off += 1
    parities = {f.parity for f in fams}
    detail = (f"{len(fams) - len(bad)}/{len(fams)} algebras match the catalog; "
              f"H(0,1)+A plus_one candidate off by (1|1) in {plus_one_off} cases")
    _finish(7, not bad and parities == {0, 1}, box, 600, detail)


def test_criterion_8_bounds():
    bad, checked, equal = [], 0, []
    with timed() as box:
        for spec in corpus(5):
            L = spec.build()
            d2 = L.sdim(derived_subalgebra(L))
            if d2.total == 0:
                continue
            k, l = L.dim
            got = multiplier_of(L, 2).total
            ub = multiplier2_upper_bound(k, l, *d2)
            checked += 1
            if not got <= ub.fine <= ub.coarse:
                bad.append(str(spec))
            if got == ub.coarse:
                equal.append(spec)
            expected_eq = d2 == (1, 0) and classify_dim1_derived(L) == Dim1Family(0, 1, 0, k - 3, l)
            if (got == ub.coarse) != expected_eq:
                bad.append(f"{spec} equality")
    _finish(8, not bad, box, 600, f"{checked - len(bad)}/{checked} bounded; coarse equality for {len(equal)} H(1,0)+A")


ZERO_Z2 = [Component("Heven", (1, 0)), Component("Hodd", (1,))] + [
    Component("A", (m, n)) for m in range(4) for n in range(4 - m) if m + n >= 2]
NONZERO_Z2 = [Component("Heven", (0, 1)), Component("Heven", (2, 0)), Component("Heven", (1, 1)),
              Component("Hodd", (2,)), Component("A", (1, 0)), Component("A", (0, 1))]


def test_criterion_9_capability():
    bad = []
    with timed() as box:
        for comp, zero in [(c, True) for c in ZERO_Z2] + [(c, False) for c in NONZERO_Z2]:
            L = comp.build()
            if (z_c_star(present(L), 2, L).dim == 0) != zero:
                bad.append(str(comp))
            if is_capable(L, 2).capable and not is_capable(L, 1).capable:
                bad.append(f"{comp} implication")
    n = len(ZERO_Z2) + len(NONZERO_Z2)
    _finish(9, not bad, box, 300, f"{n - len(bad)}/{n} instances classified, failures {bad}")


def test_criterion_10_sequences():
    bad, runs = [], 0
    with timed() as box:
        for spec in corpus(4):
            L = spec.build()
            for c in (1, 2):
                runs += 1
                s = sequence_check(L, c)
                if not (s.identity_holds and s.quotient_inequality_holds and s.central_bound_holds):
                    bad.append(f"{spec} c={c}")
    _finish(10, not bad, box, 600, f"{runs - len(bad)}/{runs} runs hold, failures {bad}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
