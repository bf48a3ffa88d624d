"""Closed-form dimensions of c-nilpotent multipliers and related bounds.

Everything here is exact integer arithmetic. Expressions with a 1/3 factor go
through :func:`_third`, which raises if the numerator is not divisible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactlin import PreconditionError
from .families import Component, FamilySpec
from .superalg import Dim1Family
from .witt import ParitySignature, SuperDim, layer_dim


class ClosedFormUnavailable(LookupError):
    """No closed form covers this family; compute it with the oracle instead."""


@dataclass(frozen=True)
class MultiplierResult:
    dims: SuperDim
    provenance: str
    c: int

    @property
    def total(self) -> int:
        return self.dims.total


def _third(x: int) -> int:
    q, r = divmod(x, 3)
    if r:
        raise ArithmeticError(f"{x}/3 is not an integer")
    return q


# --- abelian -----------------------------------------------------------------


def abelian_multiplier(m: int, n: int, c: int) -> MultiplierResult:
    """M^(c)(A(m|n)) is the degree c+1 layer of the free Lie superalgebra on (m|n)."""
    if m < 0 or n < 0:
        raise PreconditionError("dimensions must be non-negative")
    if c < 1:
        raise PreconditionError("c must be >= 1")
    return MultiplierResult(layer_dim(ParitySignature(m, n), c + 1), "abelian-layer", c)


def abelian_multiplier2(m: int, n: int) -> SuperDim:
    if m < 0 or n < 0:
        raise PreconditionError("dimensions must be non-negative")
    return SuperDim(_third(m**3 + 3 * n * n * m - m), _third(3 * m * m * n + n**3 - n))


def tensor_abelian(m: int, n: int, r: int, s: int) -> SuperDim:
    """A(m|n) ⊗ A(r|s)."""
    return SuperDim(m * r + n * s, m * s + n * r)


def _tensor(a: SuperDim, b: SuperDim) -> SuperDim:
    return tensor_abelian(a.even, a.odd, b.even, b.odd)


# --- Heisenberg ---------------------------------------------------------------


def heisenberg_even_multiplier2(m: int, n: int) -> SuperDim:
    if m < 0 or n < 0 or m + n < 1:
        raise PreconditionError("H(m,n) needs m + n >= 1")
    if (m, n) == (1, 0):
        return SuperDim(5, 0)
    if (m, n) == (0, 1):
        return SuperDim(0, 0)
    return SuperDim(_third(8 * m**3 + 6 * n * n * m - 2 * m), _third(n**3 + 12 * m * m * n - n))


def heisenberg_odd_multiplier2(m: int) -> SuperDim:
    if m < 1:
        raise PreconditionError("H_m needs m >= 1")
    if m == 1:
        return SuperDim(2, 2)
    v = _third(4 * m**3 - m)
    return SuperDim(v, v)


# --- direct sums ---------------------------------------------------------------


@dataclass(frozen=True)
class FamilyData:
    """What the direct-sum law needs from a summand: M^2 and L/L^2."""

    m2: SuperDim
    ab: SuperDim


def component_multiplier2(part: Component) -> SuperDim:
    if part.kind == "A":
        return abelian_multiplier2(*part.params)
    if part.kind == "Heven":
        return heisenberg_even_multiplier2(*part.params)
    return heisenberg_odd_multiplier2(*part.params)


def family_data(obj) -> FamilyData:
    if isinstance(obj, FamilyData):
        return obj
    if isinstance(obj, Dim1Family):
        obj = FamilySpec.from_dim1(obj)
    if isinstance(obj, Component):
        return FamilyData(component_multiplier2(obj), obj.ab_dim)
    if isinstance(obj, FamilySpec):
        return FamilyData(multiplier2_closed(obj).dims, obj.ab_dim)
    raise ClosedFormUnavailable(f"no closed form for {obj!r}; use the oracle")


def direct_sum_multiplier2(d1, d2) -> SuperDim:
    """M^2(L1 ⊕ L2) = M^2(L1) + M^2(L2) + ab2⊗ab1⊗ab1 + ab2⊗ab1⊗ab2."""
    a, b = family_data(d1), family_data(d2)
    cross1 = _tensor(_tensor(b.ab, a.ab), a.ab)
    cross2 = _tensor(_tensor(b.ab, a.ab), b.ab)
    return a.m2 + b.m2 + cross1 + cross2


def multiplier2_closed(spec: FamilySpec) -> MultiplierResult:
    """M^2 of a direct sum of catalogued families, folding the direct-sum law left to right."""
    first = spec.parts[0]
    acc = FamilyData(component_multiplier2(first), first.ab_dim)
    for part in spec.parts[1:]:
        nxt = FamilyData(component_multiplier2(part), part.ab_dim)
        acc = FamilyData(direct_sum_multiplier2(acc, nxt), acc.ab + nxt.ab)
    label = "direct-sum" if len(spec.parts) > 1 else f"{first.kind}-catalog"
    return MultiplierResult(acc.m2, label, 2)


def multiplier_closed(spec: FamilySpec, c: int) -> MultiplierResult:
    """Closed-form M^(c) where one is known: any c for a single abelian family, c = 2 for the catalog."""
    if c < 1:
        raise PreconditionError("c must be >= 1")
    if len(spec.parts) == 1 and spec.parts[0].kind == "A":
        res = abelian_multiplier(*spec.parts[0].params, c)
        if c == 2:
            cubic = abelian_multiplier2(*spec.parts[0].params)
            if cubic != res.dims:
                raise ArithmeticError(f"abelian layer {res.dims} disagrees with cubic {cubic}")
        return res
    if c != 2:
        raise ClosedFormUnavailable(f"no closed form for M^({c}) of {spec}; use the oracle")
    return multiplier2_closed(spec)


# --- dim L^2 = 1 -----------------------------------------------------------------


def dim1_even_candidates(k: int, l: int) -> dict[str, SuperDim]:
    """The three candidate shapes for dim L^2 = (1|0)."""
    e = _third(k * (k - 1) * (k + 1)) + (k - 1) * (l * l - k)
    o = _third(l * (l - 1) * (l + 1)) + l * (k - 1) ** 2
    return {
        "base": SuperDim(e, o),
        "plus_one": SuperDim(e + 1, o + 1),
        "plus_three": SuperDim(e + 3, o),
    }


def dim1_odd_candidates(k: int, l: int) -> dict[str, SuperDim]:
    """The two candidate shapes for dim L^2 = (0|1)."""
    e = _third(k * (k + 1) * (k - 1)) + k * (l - 1) ** 2
    o = _third(l * (l - 1) * (l + 1)) + (l - 1) * (k * k - l)
    return {"base": SuperDim(e, o), "plus_one": SuperDim(e + 1, o + 1)}


def dim1_case(family: Dim1Family) -> str:
    """Which candidate shape applies to the family.

    H(0,1) ⊕ A gets ``base``: M^2(H(0,1)) = 0 and the direct-sum law leave no
    extra term, so the ``plus_one`` shape does not occur in the even case.
    """
    if family.parity == 0:
        if (family.m, family.n) == (1, 0):
            return "plus_three"
        return "base"
    return "plus_one" if family.m == 1 else "base"


def dim1_derived_multiplier2(k: int, l: int, family: Dim1Family) -> SuperDim:
    if tuple(family.dim) != (k, l):
        raise PreconditionError(f"family {family} has dimension {family.dim}, not ({k}|{l})")
    if family.parity == 0:
        return dim1_even_candidates(k, l)[dim1_case(family)]
    return dim1_odd_candidates(k, l)[dim1_case(family)]


def dim1_total_base(n: int) -> int:
    """T = (1/3)n^3 - n^2 + (2/3)n for n = k + l."""
    return _third(n**3 - 3 * n * n + 2 * n)


# --- bounds ----------------------------------------------------------------------------


@dataclass(frozen=True)
class UpperBound:
    fine: int
    coarse: int
    equality_family: Dim1Family | None  # the only L attaining the coarse bound, if it fits (k|l)


def multiplier2_upper_bound(k: int, l: int, r: int, s: int) -> UpperBound:
    if r + s < 1:
        raise PreconditionError("r + s must be >= 1; use abelian_multiplier2 for abelian L")
    n, q = k + l, r + s
    fine = _third((n - q) * ((n + 2 * q - 2) * (n - q - 1) + 3 * (q - 1))) + 3
    coarse = _third(n * (n - 1) * (n - 2)) + 3
    eq = Dim1Family(0, 1, 0, k - 3, l) if k >= 3 and (r, s) == (1, 0) else None
    return UpperBound(fine, coarse, eq)


def gen_heisenberg_bound(mdim: int, ndim: int, r: int, s: int, c: int) -> int:
    """Bound on dim M^(c)(H) when Z(H) = H^2 has dimension (r|s) inside dim H = (mdim|ndim)."""
    if r > mdim or s > ndim or min(mdim, ndim, r, s) < 0:
        raise PreconditionError("need 0 <= r <= mdim and 0 <= s <= ndim")
    if c < 1:
        raise PreconditionError("c must be >= 1")
    top = layer_dim(ParitySignature(mdim - r, ndim - s), c + 1).total
    center = layer_dim(ParitySignature(r, s), c + 1).total
    return top + center + (mdim + ndim - r - s) ** c * (r + s)


def abelian_threshold_check(k: int, l: int, m2dim: int) -> bool:
    """True iff dim M^2 reaches (1/3)n(n+1)(n-1), which only A(k|l) does."""
    n = k + l
    if n < 3:
        raise PreconditionError("needs k + l >= 3")
    return m2dim >= _third(n * (n + 1) * (n - 1))
