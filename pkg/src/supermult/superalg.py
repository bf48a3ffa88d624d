"""Finite-dimensional Lie superalgebras given by structure constants.

Elements are sparse dicts over basis indices. Only brackets [e_i, e_j] with
i <= j are stored; the rest follow from super skew-symmetry
[e_j, e_i] = -(-1)^{|e_i||e_j|} [e_i, e_j].
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .exactlin import (
    ONE,
    Echelon,
    PreconditionError,
    Subspace,
    add_into,
    kernel,
    scalar,
    vector,
    zero_subspace,
)
from .witt import SuperDim


class StructLSA:
    """Lie superalgebra over Q with a graded basis and rational structure constants."""

    def __init__(self, basis: Sequence[tuple[str, int]], brackets: Mapping[tuple[int, int], Mapping] | None = None, name: str | None = None):
        self.names = tuple(str(b[0]) for b in basis)
        self.parities = tuple(int(b[1]) for b in basis)
        if len(set(self.names)) != len(self.names):
            raise ValueError("basis names must be unique")
        if any(p not in (0, 1) for p in self.parities):
            raise ValueError("parities must be 0 or 1")
        self.name = name
        self._table: dict[tuple[int, int], dict] = {}
        self._conflicts: list[tuple[int, int]] = []
        for (i, j), v in (brackets or {}).items():
            v = vector(v)
            if i > j:
                i, j = j, i
                sign = ONE if self.parities[i] and self.parities[j] else -ONE
                v = {k: sign * c for k, c in v.items()}
            if (i, j) in self._table and self._table[(i, j)] != v:
                self._conflicts.append((i, j))
            if v:
                self._table[(i, j)] = v

    @property
    def size(self) -> int:
        return len(self.names)

    @property
    def dim(self) -> SuperDim:
        odd = sum(self.parities)
        return SuperDim(self.size - odd, odd)

    @property
    def table(self) -> dict[tuple[int, int], dict]:
        return dict(self._table)

    def __repr__(self):
        label = self.name or "StructLSA"
        return f"<{label} dim={self.dim}>"

    def __eq__(self, other):
        if not isinstance(other, StructLSA):
            return NotImplemented
        return (self.names, self.parities, self._table) == (other.names, other.parities, other._table)

    def __hash__(self):
        return hash((self.names, self.parities, len(self._table)))

    def parity_of_key(self, i: int) -> int:
        return self.parities[i]

    def basis_bracket(self, i: int, j: int) -> dict:
        if i <= j:
            return self._table.get((i, j), {})
        v = self._table.get((j, i))
        if not v:
            return {}
        if self.parities[i] and self.parities[j]:
            return v
        return {k: -c for k, c in v.items()}

    def bracket(self, u: Mapping, v: Mapping) -> dict:
        out: dict = {}
        for i, a in u.items():
            for j, b in v.items():
                w = self.basis_bracket(i, j)
                if w:
                    add_into(out, w, a * b)
        return out

    def unit(self, i: int) -> dict:
        return {i: ONE}

    def sdim(self, sub: Subspace) -> SuperDim:
        return SuperDim(*sub.split_dim(self.parity_of_key))

    def span(self, vectors: Iterable[Mapping]) -> Subspace:
        return Subspace((vector(v) for v in vectors), self)

    def whole(self) -> Subspace:
        return Subspace._trusted({i: {i: ONE} for i in range(self.size)}, self)

    def zero(self) -> Subspace:
        return zero_subspace(self)


# --- validation -------------------------------------------------------------


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    kind: str | None = None
    where: tuple = ()
    residual: dict | None = None

    def __bool__(self):
        return self.ok


def validate(L: StructLSA) -> ValidationReport:
    """Check grading, super skew-symmetry and the super Jacobi identity on basis triples."""
    if L._conflicts:
        return ValidationReport(False, "skew-symmetry", L._conflicts[0])
    for (i, j), v in L._table.items():
        want = (L.parities[i] + L.parities[j]) % 2
        for k in v:
            if L.parities[k] != want:
                return ValidationReport(False, "grading", (i, j), dict(v))
        if i == j and L.parities[i] == 0:
            return ValidationReport(False, "skew-symmetry", (i, i), dict(v))
    n = L.size
    p = L.parities
    for i in range(n):
        for j in range(n):
            for k in range(n):
                # [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
                lhs = L.bracket(L.unit(i), L.basis_bracket(j, k))
                res = dict(lhs)
                add_into(res, L.bracket(L.basis_bracket(i, j), L.unit(k)), -ONE)
                sign = -ONE if p[i] and p[j] else ONE
                add_into(res, L.bracket(L.unit(j), L.basis_bracket(i, k)), -sign)
                if res:
                    return ValidationReport(False, "jacobi", (i, j, k), res)
    return ValidationReport(True)


# --- constructors ------------------------------------------------------------


def abelian(m: int, n: int) -> StructLSA:
    if m < 0 or n < 0:
        raise PreconditionError("dimensions must be non-negative")
    basis = [(f"x{i + 1}", 0) for i in range(m)] + [(f"y{j + 1}", 1) for j in range(n)]
    return StructLSA(basis, {}, name=f"A({m}|{n})")


def heisenberg_even(m: int, n: int) -> StructLSA:
    """H(m, n): [x_i, x_{m+i}] = z, [y_j, y_j] = z with z even; dimension (2m+1 | n)."""
    if m < 0 or n < 0 or m + n < 1:
        raise PreconditionError("H(m,n) needs m + n >= 1")
    basis = [("z", 0)] + [(f"x{i + 1}", 0) for i in range(2 * m)] + [(f"y{j + 1}", 1) for j in range(n)]
    brackets = {(1 + i, 1 + m + i): {0: 1} for i in range(m)}
    for j in range(n):
        k = 1 + 2 * m + j
        brackets[(k, k)] = {0: 1}
    return StructLSA(basis, brackets, name=f"H({m},{n})")


def heisenberg_odd(m: int) -> StructLSA:
    """H_m: [x_i, y_i] = z with z odd; dimension (m | m+1)."""
    if m < 1:
        raise PreconditionError("H_m needs m >= 1")
    basis = [(f"x{i + 1}", 0) for i in range(m)] + [(f"y{i + 1}", 1) for i in range(m)] + [("z", 1)]
    brackets = {(i, m + i): {2 * m: 1} for i in range(m)}
    return StructLSA(basis, brackets, name=f"H_{m}")


def direct_sum(L1: StructLSA, L2: StructLSA) -> StructLSA:
    names1 = list(L1.names)
    names2 = list(L2.names)
    if set(names1) & set(names2):
        names1 = [f"{nm}_1" for nm in names1]
        names2 = [f"{nm}_2" for nm in names2]
    shift = L1.size
    basis = list(zip(names1, L1.parities)) + list(zip(names2, L2.parities))
    brackets = dict(L1._table)
    for (i, j), v in L2._table.items():
        brackets[(i + shift, j + shift)] = {k + shift: c for k, c in v.items()}
    label = None
    if L1.name and L2.name:
        label = f"{L1.name}+{L2.name}"
    return StructLSA(basis, brackets, name=label)


def from_table(basis: Sequence[tuple[str, int]], brackets: Mapping[tuple[str, str], Mapping[str, object]], name: str | None = None) -> StructLSA:
    """Build from name-keyed brackets, e.g. ``{("x1", "x2"): {"z": 1}}``."""
    index = {b[0]: i for i, b in enumerate(basis)}
    table = {}
    for (a, b), v in brackets.items():
        table[(index[a], index[b])] = {index[k]: scalar(c) for k, c in v.items()}
    return StructLSA(basis, table, name=name)


# --- series -----------------------------------------------------------------


def bracket_span(L: StructLSA, A: Subspace, B: Subspace) -> Subspace:
    ech = Echelon(L)
    for u in A.rows.values():
        for v in B.rows.values():
            ech.add(L.bracket(u, v))
    return ech.freeze()


def derived_subalgebra(L: StructLSA) -> Subspace:
    return lower_central(L, 2)


def lower_central(L: StructLSA, k: int) -> Subspace:
    """γ_k(L): γ_1 = L, γ_{j+1} = [γ_j, L]."""
    if k < 1:
        raise PreconditionError("k must be >= 1")
    return relative_lower_central(L, L.whole(), k)


def relative_lower_central(L: StructLSA, M: Subspace, k: int) -> Subspace:
    """γ_k(M, L): γ_1 = M, γ_{j+1} = [γ_j, L]."""
    whole = L.whole()
    current = M
    for _ in range(1, k):
        if not current.dim:
            break
        current = bracket_span(L, current, whole)
    return current


def nilpotency_class(L: StructLSA) -> int:
    """Least t with γ_{t+1}(L) = 0; raises for non-nilpotent L."""
    whole = L.whole()
    current = whole
    t = 0
    while current.dim:
        nxt = bracket_span(L, current, whole)
        if nxt.dim == current.dim:
            raise PreconditionError(f"{L!r} is not nilpotent")
        current = nxt
        t += 1
    return t


def is_ideal(L: StructLSA, M: Subspace) -> bool:
    for u in M.rows.values():
        for i in range(L.size):
            if not M.contains(L.bracket(u, L.unit(i))):
                return False
    return True


def upper_central(L: StructLSA, k: int) -> Subspace:
    """Z_k(L): Z_0 = 0, Z_k = {x : [x, L] ⊆ Z_{k-1}}."""
    if k < 0:
        raise PreconditionError("k must be >= 0")
    current = L.zero()
    for _ in range(k):
        nxt = _preimage_center(L, current)
        if nxt == current:
            break
        current = nxt
    return current


def _preimage_center(L: StructLSA, below: Subspace) -> Subspace:
    """{x : [x, e_j] ∈ below for all j}, computed per parity so the result is graded."""
    n = L.size
    out = []
    for parity in (0, 1):
        idx = [i for i in range(n) if L.parities[i] == parity]
        if not idx:
            continue
        images = {}
        for i in idx:
            img: dict = {}
            for j in range(n):
                r = below.reduce(L.basis_bracket(i, j))
                for key, c in r.items():
                    img[j * n + key] = c
            images[i] = img
        out.extend(kernel(images))
    return Subspace(out, L)


def center(L: StructLSA) -> Subspace:
    return upper_central(L, 1)


def abelianization_dim(L: StructLSA) -> SuperDim:
    return L.dim - L.sdim(derived_subalgebra(L))


# --- quotients ---------------------------------------------------------------


@dataclass(frozen=True)
class Quotient:
    algebra: StructLSA
    complement: tuple[int, ...]  # indices of L surviving as the quotient basis

    def project(self, L: StructLSA, M: Subspace, v: Mapping) -> dict:
        r = M.reduce(v)
        pos = {k: i for i, k in enumerate(self.complement)}
        return {pos[k]: c for k, c in r.items()}


def quotient(L: StructLSA, M: Subspace) -> Quotient:
    """L/M on the non-pivot basis vectors of M's reduced echelon form."""
    if not is_ideal(L, M):
        raise PreconditionError("quotient requires a graded ideal")
    comp = tuple(i for i in range(L.size) if i not in M.rows)
    pos = {k: i for i, k in enumerate(comp)}
    basis = [(L.names[i], L.parities[i]) for i in comp]
    table = {}
    for a, i in enumerate(comp):
        for b in range(a, len(comp)):
            j = comp[b]
            r = M.reduce(L.basis_bracket(i, j))
            if r:
                table[(a, b)] = {pos[k]: c for k, c in r.items()}
    label = f"{L.name}/ideal" if L.name else None
    return Quotient(StructLSA(basis, table, name=label), comp)


# --- dim-1 derived classification --------------------------------------------


@dataclass(frozen=True)
class Dim1Family:
    """L ≅ H(m,n) ⊕ A(a|b) (parity 0) or H_m ⊕ A(a|b) (parity 1)."""

    parity: int
    m: int
    n: int
    a: int
    b: int

    def build(self) -> StructLSA:
        head = heisenberg_even(self.m, self.n) if self.parity == 0 else heisenberg_odd(self.m)
        if self.a or self.b:
            return direct_sum(head, abelian(self.a, self.b))
        return head

    @property
    def dim(self) -> SuperDim:
        if self.parity == 0:
            return SuperDim(2 * self.m + 1 + self.a, self.n + self.b)
        return SuperDim(self.m + self.a, self.m + 1 + self.b)

    def __str__(self):
        head = f"H({self.m},{self.n})" if self.parity == 0 else f"H_{self.m}"
        return head if not (self.a or self.b) else f"{head}+A({self.a}|{self.b})"


def classify_dim1_derived(L: StructLSA) -> Dim1Family:
    """Identify L with dim L^2 = 1 from dim L, the parity of L^2 and dim L/Z(L)."""
    d2 = L.sdim(derived_subalgebra(L))
    if d2.total != 1:
        raise PreconditionError(f"derived subalgebra has dimension {d2}, expected 1")
    nilpotency_class(L)
    k, l = L.dim
    q = L.dim - L.sdim(center(L))
    if d2.even == 1:
        if q.even % 2:
            raise PreconditionError("inconsistent invariants: odd even-rank of L/Z(L)")
        m, n = q.even // 2, q.odd
        return Dim1Family(0, m, n, k - 2 * m - 1, l - n)
    if q.even != q.odd:
        raise PreconditionError("inconsistent invariants for an odd derived subalgebra")
    m = q.even
    return Dim1Family(1, m, 0, k - m, l - m - 1)


def dim1_families(max_total: int) -> list[Dim1Family]:
    """Every H(m,n)⊕A(a|b) and H_m⊕A(a|b) with total dimension <= max_total."""
    out = []
    for m in range(0, max_total):
        for n in range(0, max_total):
            if m + n < 1:
                continue
            head = 2 * m + 1 + n
            if head > max_total:
                continue
            for a in range(0, max_total - head + 1):
                for b in range(0, max_total - head - a + 1):
                    out.append(Dim1Family(0, m, n, a, b))
    for m in range(1, max_total):
        head = 2 * m + 1
        if head > max_total:
            continue
        for a in range(0, max_total - head + 1):
            for b in range(0, max_total - head - a + 1):
                out.append(Dim1Family(1, m, 0, a, b))
    return out
