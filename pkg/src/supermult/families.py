"""Named families of nilpotent Lie superalgebras and their text descriptors.

Descriptors: ``A:m,n``, ``Heven:m,n``, ``Hodd:m``, and direct sums joined by
``+`` with an optional ``sum:`` prefix, e.g. ``sum:Heven:1,0+A:2,1``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactlin import PreconditionError
from .superalg import Dim1Family, StructLSA, abelian, direct_sum, heisenberg_even, heisenberg_odd
from .witt import SuperDim

KINDS = {"A": 2, "Heven": 2, "Hodd": 1}


class FamilyParseError(ValueError):
    pass


@dataclass(frozen=True)
class Component:
    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise PreconditionError(f"unknown family {self.kind!r}")
        if len(self.params) != KINDS[self.kind]:
            raise PreconditionError(f"{self.kind} takes {KINDS[self.kind]} parameter(s)")
        if any(p < 0 for p in self.params):
            raise PreconditionError("family parameters must be non-negative")
        if self.kind == "Heven" and sum(self.params) < 1:
            raise PreconditionError("H(m,n) needs m + n >= 1")
        if self.kind == "Hodd" and self.params[0] < 1:
            raise PreconditionError("H_m needs m >= 1")

    def build(self) -> StructLSA:
        if self.kind == "A":
            return abelian(*self.params)
        if self.kind == "Heven":
            return heisenberg_even(*self.params)
        return heisenberg_odd(*self.params)

    @property
    def dim(self) -> SuperDim:
        if self.kind == "A":
            return SuperDim(*self.params)
        if self.kind == "Heven":
            m, n = self.params
            return SuperDim(2 * m + 1, n)
        m = self.params[0]
        return SuperDim(m, m + 1)

    @property
    def ab_dim(self) -> SuperDim:
        """Dimension of L/L^2."""
        if self.kind == "A":
            return SuperDim(*self.params)
        if self.kind == "Heven":
            m, n = self.params
            return SuperDim(2 * m, n)
        m = self.params[0]
        return SuperDim(m, m)

    def __str__(self):
        return f"{self.kind}:{','.join(map(str, self.params))}"


@dataclass(frozen=True)
class FamilySpec:
    parts: tuple[Component, ...]

    def __post_init__(self):
        if not self.parts:
            raise PreconditionError("a family needs at least one component")

    @classmethod
    def of(cls, *parts: Component) -> "FamilySpec":
        return cls(tuple(parts))

    @classmethod
    def from_dim1(cls, fam: Dim1Family) -> "FamilySpec":
        head = Component("Heven", (fam.m, fam.n)) if fam.parity == 0 else Component("Hodd", (fam.m,))
        if fam.a or fam.b:
            return cls((head, Component("A", (fam.a, fam.b))))
        return cls((head,))

    def build(self) -> StructLSA:
        out = self.parts[0].build()
        for part in self.parts[1:]:
            out = direct_sum(out, part.build())
        return out

    @property
    def dim(self) -> SuperDim:
        total = SuperDim(0, 0)
        for part in self.parts:
            total = total + part.dim
        return total

    @property
    def ab_dim(self) -> SuperDim:
        total = SuperDim(0, 0)
        for part in self.parts:
            total = total + part.ab_dim
        return total

    def __str__(self):
        return "+".join(str(p) for p in self.parts)


def parse_component(text: str) -> Component:
    kind, sep, rest = text.strip().partition(":")
    if not sep or kind not in KINDS:
        raise FamilyParseError(f"cannot parse family component {text!r}")
    try:
        params = tuple(int(x) for x in rest.split(","))
    except ValueError:
        raise FamilyParseError(f"non-integer parameter in {text!r}") from None
    try:
        return Component(kind, params)
    except PreconditionError as exc:
        raise FamilyParseError(f"{text!r}: {exc}") from None


def parse_family(text: str) -> FamilySpec:
    text = text.strip()
    if text.startswith("sum:"):
        text = text[4:]
    if not text:
        raise FamilyParseError("empty family descriptor")
    return FamilySpec(tuple(parse_component(p) for p in text.split("+")))
