"""Self-check suites comparing closed forms, counts and the presentation oracle."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .families import Component, FamilySpec
from .freelie import GradedAlphabet, build_frame, enumerate_s_regular
from .multiplier import (
    abelian_multiplier,
    abelian_multiplier2,
    abelian_threshold_check,
    dim1_derived_multiplier2,
    dim1_total_base,
    gen_heisenberg_bound,
    multiplier2_closed,
    multiplier2_upper_bound,
)
from .oracle import capability_table, injectivity_check, is_capable, multiplier_of, sequence_check
from .superalg import center, classify_dim1_derived, derived_subalgebra, dim1_families
from .witt import ParitySignature, SuperDim, graded_dims, layer_dim, multidegrees, super_witt_SW

SUITES = ("counts", "formulas", "bounds", "capability", "sequences")


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    source: str
    passed: bool
    detail: str = ""


def _check(suite, name, source, expected, got) -> Check:
    ok = expected == got
    detail = "" if ok else f"expected {expected}, got {got}"
    return Check(suite, name, source, ok, detail)


# --- corpus -------------------------------------------------------------------------


HEADS = [Component("Heven", (1, 0)), Component("Heven", (0, 1)), Component("Hodd", (1,))]
SMALL = [Component("A", (1, 0)), Component("A", (0, 1)), Component("A", (1, 1))] + HEADS


def corpus(max_dim: int) -> list[FamilySpec]:
    """Abelian algebras, every dim-1-derived algebra, and sums of two Heisenberg heads, up to max_dim."""
    out = []
    for m in range(max_dim + 1):
        for n in range(max_dim + 1 - m):
            if m + n:
                out.append(FamilySpec.of(Component("A", (m, n))))
    out.extend(FamilySpec.from_dim1(f) for f in dim1_families(max_dim))
    for h1, h2 in itertools.combinations_with_replacement(HEADS, 2):
        spec = FamilySpec.of(h1, h2)
        if spec.dim.total <= max_dim:
            out.append(spec)
    return out


def direct_sum_pairs() -> list[tuple[Component, Component]]:
    return list(itertools.combinations_with_replacement(SMALL, 2))


# --- suites -------------------------------------------------------------------------


def suite_counts(max_dim: int = 5) -> list[Check]:
    out = []
    for s in range(1, 4):
        for m in range(s + 1):
            n = s - m
            alph = GradedAlphabet.from_signature(m, n)
            sig = ParitySignature(m, n)
            for length in range(1, 7):
                counts: dict = {}
                for mono in enumerate_s_regular(alph, length):
                    counts[mono.multidegree] = counts.get(mono.multidegree, 0) + 1
                want = {a: super_witt_SW(sig, a) for a in multidegrees(m + n, length)}
                want = {a: v for a, v in want.items() if v}
                out.append(_check("counts", f"s-regular ({m}|{n}) length {length}", "super-Witt rank", want, counts))
    for m in range(5):
        for n in range(5):
            if m + n == 0:
                continue
            sig = ParitySignature(m, n)
            for r in range(1, 9):
                g = graded_dims(sig, r)
                lay = layer_dim(sig, r)
                out.append(_check("counts", f"graded dims ({m}|{n}) r={r}", "graded dimension formula",
                                  (g.dim_Lr_plus, g.dim_Lr_minus), tuple(lay)))
    for m, n in [(1, 1), (2, 0), (0, 2), (2, 1), (1, 2)]:
        frame = build_frame(GradedAlphabet.from_signature(m, n), 5)
        for k in range(1, 5):
            out.append(_check("counts", f"frame layer ({m}|{n}) k={k}", "graded layers of F",
                              tuple(layer_dim(ParitySignature(m, n), k)), tuple(frame.layer_dim(k))))
    return out


def suite_formulas(max_dim: int = 5) -> list[Check]:
    out = []
    for m in range(4):
        for n in range(4 - m):
            if m + n == 0:
                continue
            L = Component("A", (m, n)).build()
            for c in (1, 2, 3):
                out.append(_check("formulas", f"A({m}|{n}) c={c}", "abelian layer sum",
                                  abelian_multiplier(m, n, c).dims, multiplier_of(L, c)))
            out.append(_check("formulas", f"A({m}|{n}) cubic", "abelian cubic",
                              abelian_multiplier2(m, n), abelian_multiplier(m, n, 2).dims))
    for f in dim1_families(max_dim):
        L = f.build()
        k, l = L.dim
        got = multiplier_of(L, 2)
        out.append(_check("formulas", f"{f} M^2", "dim-1 derived catalog", dim1_derived_multiplier2(k, l, f), got))
        T = dim1_total_base(k + l)
        out.append(Check("formulas", f"{f} total offset", "dim-1 total law", got.total - T in (0, 2, 3),
                         f"total {got.total}, T {T}"))
    for a, b in direct_sum_pairs():
        spec = FamilySpec.of(a, b)
        out.append(_check("formulas", f"{spec} M^2", "direct-sum law", multiplier2_closed(spec).dims,
                          multiplier_of(spec.build(), 2)))
    return out


def suite_bounds(max_dim: int = 5) -> list[Check]:
    out = []
    for spec in corpus(max_dim):
        L = spec.build()
        d2 = L.sdim(derived_subalgebra(L))
        if d2.total == 0:
            continue
        k, l = L.dim
        got = multiplier_of(L, 2).total
        ub = multiplier2_upper_bound(k, l, *d2)
        ok = got <= ub.fine <= ub.coarse
        out.append(Check("bounds", f"{spec} fine/coarse", "upper bound", ok, f"{got} <= {ub.fine} <= {ub.coarse}"))
        if d2.total == 1:
            is_eq = ub.equality_family is not None and classify_dim1_derived(L) == ub.equality_family
            out.append(_check("bounds", f"{spec} coarse equality", "upper bound equality case",
                              is_eq, got == ub.coarse))
        if k + l >= 3:
            out.append(_check("bounds", f"{spec} abelian threshold", "abelian threshold",
                              False, abelian_threshold_check(k, l, got)))
    for m in range(max_dim + 1):
        for n in range(max_dim + 1 - m):
            if m + n >= 3:
                val = abelian_multiplier2(m, n).total
                out.append(_check("bounds", f"A({m}|{n}) abelian threshold", "abelian threshold",
                                  True, abelian_threshold_check(m, n, val)))
    for comp in [Component("Heven", (1, 0)), Component("Heven", (0, 1)), Component("Heven", (1, 1)),
                 Component("Heven", (2, 0)), Component("Hodd", (1,)), Component("Hodd", (2,))]:
        L = comp.build()
        z = L.sdim(center(L))
        for c in (1, 2):
            got = multiplier_of(L, c).total
            bound = gen_heisenberg_bound(L.dim.even, L.dim.odd, z.even, z.odd, c)
            out.append(Check("bounds", f"{comp} c={c} generalized Heisenberg", "generalized Heisenberg bound",
                             got <= bound, f"{got} <= {bound}"))
    return out


CAPABILITY_CASES = [
    ("Heven", (1, 0)), ("Heven", (0, 1)), ("Heven", (2, 0)), ("Heven", (1, 1)), ("Heven", (0, 2)),
    ("Hodd", (1,)), ("Hodd", (2,)),
    ("A", (1, 0)), ("A", (0, 1)), ("A", (2, 0)), ("A", (1, 1)), ("A", (0, 2)), ("A", (2, 1)), ("A", (1, 2)),
]


def suite_capability(max_dim: int = 5) -> list[Check]:
    out = []
    for fam, params in CAPABILITY_CASES:
        L = Component(fam, params).build()
        r1, r2 = is_capable(L, 1), is_capable(L, 2)
        tag = f"{fam}:{','.join(map(str, params))}"
        out.append(_check("capability", f"{tag} order 1", "capability classification",
                          capability_table(fam, params, 1), r1.capable))
        out.append(_check("capability", f"{tag} order 2", "2-capability classification",
                          capability_table(fam, params, 2), r2.capable))
        out.append(Check("capability", f"{tag} 2-capable implies capable", "2-capable implies capable",
                         (not r2.capable) or r1.capable))
        m_L, m_T = injectivity_check(L)
        out.append(Check("capability", f"{tag} injectivity", "injectivity modulo Z_2^*",
                         m_L.total <= m_T.total, f"{m_L} vs {m_T}"))
    return out


def suite_sequences(max_dim: int = 4) -> list[Check]:
    out = []
    for spec in corpus(max_dim):
        L = spec.build()
        for c in (1, 2):
            s = sequence_check(L, c)
            out.append(Check("sequences", f"{spec} c={c} identity", "exact-sequence identity", s.identity_holds, repr(s)))
            out.append(Check("sequences", f"{spec} c={c} quotient", "quotient inequality",
                             s.quotient_inequality_holds, repr(s)))
            out.append(Check("sequences", f"{spec} c={c} central", "central-ideal bound", s.central_bound_holds, repr(s)))
    return out


_RUNNERS = {
    "counts": suite_counts,
    "formulas": suite_formulas,
    "bounds": suite_bounds,
    "capability": suite_capability,
    "sequences": suite_sequences,
}


def _run_one(args):
    name, max_dim = args
    if name == "sequences":
        return _RUNNERS[name](min(max_dim, 4))
    return _RUNNERS[name](max_dim)


def run_suites(names, max_dim: int = 5, workers: int = 1) -> list[Check]:
    """Run suites (``all`` expands to every suite) and return checks in a canonical order."""
    expanded = []
    for name in names:
        if name == "all":
            expanded.extend(SUITES)
        elif name in _RUNNERS:
            expanded.append(name)
        else:
            raise ValueError(f"unknown suite {name!r}")
    expanded = list(dict.fromkeys(expanded))
    jobs = [(n, max_dim) for n in expanded]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_one, jobs))
    else:
        results = [_run_one(j) for j in jobs]
    order = {n: i for i, n in enumerate(SUITES)}
    checks = [c for chunk in results for c in chunk]
    return sorted(checks, key=lambda c: (order[c.suite], c.name))


__all__ = ["Check", "SUITES", "corpus", "direct_sum_pairs", "run_suites", "SuperDim"]
