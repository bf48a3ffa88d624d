"""Exact rational sparse linear algebra.

Vectors are plain dicts mapping basis keys to nonzero rationals. Keys must be
totally ordered; every echelon form in this module pivots on the *largest* key
of each row, so callers control elimination order through their key encoding.
All integer-keyed paths use a heap-driven reduction that never re-sorts a row.
"""

from __future__ import annotations

import heapq
from typing import Any, Callable, Hashable, Iterable, Mapping

from gmpy2 import mpq

Scalar = mpq
SparseVector = dict  # key -> Scalar, never storing zeros

ZERO = mpq(0)
ONE = mpq(1)


class StructuralError(ValueError):
    """Vectors or subspaces from incompatible key universes were combined."""


class PreconditionError(ValueError):
    """An operation was called outside its documented domain."""


def scalar(value: Any) -> mpq:
    """Coerce ints, Fractions, ``"p/q"`` strings or mpq values to an exact rational."""
    if isinstance(value, str):
        value = value.strip()
        if "/" in value:
            p, q = value.split("/", 1)
            if int(q) == 0:
                raise ValueError(f"zero denominator in {value!r}")
            return mpq(int(p), int(q))
        return mpq(int(value))
    if isinstance(value, float):
        raise TypeError("floating point coefficients are not allowed")
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return mpq(int(value.numerator), int(value.denominator))
    return mpq(value)


def vector(entries: Mapping[Hashable, Any] | Iterable[tuple[Hashable, Any]]) -> SparseVector:
    """Build a clean sparse vector, dropping zero entries and merging duplicates."""
    items = entries.items() if isinstance(entries, Mapping) else entries
    out: SparseVector = {}
    for k, c in items:
        c = scalar(c)
        if not c:
            continue
        nc = out.get(k, ZERO) + c
        if nc:
            out[k] = nc
        else:
            out.pop(k, None)
    return out


def add_into(target: SparseVector, v: Mapping, coeff: mpq = ONE) -> SparseVector:
    """In-place ``target += coeff * v``."""
    if not coeff:
        return target
    for k, c in v.items():
        nc = target.get(k, ZERO) + coeff * c
        if nc:
            target[k] = nc
        else:
            target.pop(k, None)
    return target


def scale(v: Mapping, coeff: mpq) -> SparseVector:
    if not coeff:
        return {}
    return {k: coeff * c for k, c in v.items()}


def linear_combination(terms: Iterable[tuple[Any, Mapping]]) -> SparseVector:
    out: SparseVector = {}
    for coeff, v in terms:
        add_into(out, v, scalar(coeff))
    return out


class _Desc:
    """Heap entry giving max-heap order on arbitrary comparable keys."""

    __slots__ = ("key",)

    def __init__(self, key):
        self.key = key

    def __lt__(self, other):
        return other.key < self.key


def _reduce(v: Mapping, rows: Mapping[Any, SparseVector]) -> SparseVector:
    """Fully reduce ``v`` against semi-reduced rows (each row's pivot is its max key).

    The result contains no pivot key. Eliminating pivot ``p`` only introduces
    keys below ``p``, so pivots are processed in descending order.
    """
    out = dict(v)
    if not rows or not out:
        return out
    fast = all(type(k) is int for k in out)
    if fast:
        heap = [-k for k in out if k in rows]
        heapq.heapify(heap)
        pop, push = heapq.heappop, heapq.heappush
        while heap:
            p = -pop(heap)
            c = out.get(p)
            if c is None:
                continue
            for k, rc in rows[p].items():
                old = out.get(k)
                if old is None:
                    out[k] = -c * rc
                    if k in rows:
                        push(heap, -k)
                else:
                    nc = old - c * rc
                    if nc:
                        out[k] = nc
                    else:
                        del out[k]
        return out
    heap = [_Desc(k) for k in out if k in rows]
    heapq.heapify(heap)
    while heap:
        p = heapq.heappop(heap).key
        c = out.get(p)
        if c is None:
            continue
        for k, rc in rows[p].items():
            old = out.get(k)
            if old is None:
                out[k] = -c * rc
                if k in rows:
                    heapq.heappush(heap, _Desc(k))
            else:
                nc = old - c * rc
                if nc:
                    out[k] = nc
                else:
                    del out[k]
    return out


def _check_keys(v: Mapping, kind: list) -> None:
    for k in v:
        t = type(k)
        if kind and kind[0] is not t:
            raise StructuralError(f"mixed key types {kind[0].__name__} and {t.__name__}")
        if not kind:
            kind.append(t)


class Echelon:
    """Incremental semi-reduced echelon builder.

    ``add`` returns the reduced, pivot-normalized new row when the vector was
    independent, else ``None``. Call :meth:`freeze` for the canonical
    :class:`Subspace`.
    """

    def __init__(self, universe: Any = None, rows: Mapping[Any, SparseVector] | None = None):
        self.universe = universe
        self.rows: dict[Any, SparseVector] = dict(rows) if rows else {}
        self._kind: list = []

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, v: Mapping) -> SparseVector:
        return _reduce(v, self.rows)

    def add(self, v: Mapping) -> SparseVector | None:
        _check_keys(v, self._kind)
        r = _reduce(v, self.rows)
        if not r:
            return None
        p = max(r)
        inv = ONE / r[p]
        if inv != ONE:
            r = {k: c * inv for k, c in r.items()}
        self.rows[p] = r
        return r

    def extend(self, vectors: Iterable[Mapping]) -> list[SparseVector]:
        new = []
        for v in vectors:
            r = self.add(v)
            if r is not None:
                new.append(r)
        return new

    def contains(self, v: Mapping) -> bool:
        return not _reduce(v, self.rows)

    def freeze(self) -> "Subspace":
        return Subspace._from_rows(self.rows, self.universe)


class Subspace:
    """A subspace held as rows in reduced echelon form (pivot = largest key).

    Rows are canonical for the subspace and the key order, so two Subspaces
    over one universe are equal iff their row sets are equal.
    """

    __slots__ = ("universe", "rows")

    def __init__(self, vectors: Iterable[Mapping] = (), universe: Any = None):
        ech = Echelon(universe)
        ech.extend(vectors)
        self._set(_rref(ech.rows), universe)

    @classmethod
    def _from_rows(cls, rows: Mapping[Any, SparseVector], universe: Any) -> "Subspace":
        obj = cls.__new__(cls)
        obj._set(_rref(rows), universe)
        return obj

    @classmethod
    def _trusted(cls, rows: dict, universe: Any) -> "Subspace":
        obj = cls.__new__(cls)
        obj._set(rows, universe)
        return obj

    def _set(self, rows: dict, universe: Any) -> None:
        self.universe = universe
        self.rows = rows  # pivot -> row, ordered by ascending pivot

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> list:
        return list(self.rows)

    def basis(self) -> list[SparseVector]:
        return list(self.rows.values())

    def reduce(self, v: Mapping) -> SparseVector:
        """Canonical remainder of ``v`` modulo this subspace."""
        return _reduce(v, self.rows)

    def contains(self, v: Mapping) -> bool:
        return not _reduce(v, self.rows)

    __contains__ = contains

    def coordinates(self, v: Mapping) -> dict:
        """Coefficients of ``v`` along the rows, keyed by pivot (reduced form makes this a lookup)."""
        if _reduce(v, self.rows):
            raise PreconditionError("vector is not in the subspace")
        return {p: v[p] for p in self.rows if p in v}

    def issubspace(self, other: "Subspace") -> bool:
        _same_universe(self, other)
        return all(other.contains(r) for r in self.rows.values())

    def split_dim(self, parity: Callable[[Any], int]) -> tuple[int, int]:
        """(even, odd) row counts for a subspace spanned by parity-homogeneous rows."""
        odd = sum(1 for p in self.rows if parity(p))
        return len(self.rows) - odd, odd

    def echelon(self) -> Echelon:
        return Echelon(self.universe, self.rows)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.universe == other.universe and self.rows == other.rows

    def __hash__(self):
        return hash((len(self.rows), tuple(self.rows)))

    def __repr__(self):
        return f"Subspace(dim={self.dim})"


def _rref(rows: Mapping[Any, SparseVector]) -> dict:
    """Back-substitute semi-reduced rows into reduced echelon form."""
    done: dict = {}
    for p in sorted(rows):
        row = rows[p]
        tail = {k: c for k, c in row.items() if k != p}
        if any(k in done for k in tail):
            tail = _reduce(tail, done)
        tail[p] = ONE
        done[p] = tail
    return done


def _same_universe(a: Subspace, b: Subspace) -> None:
    if a.universe != b.universe:
        raise StructuralError(f"subspaces live in different universes: {a.universe!r} vs {b.universe!r}")


def span(vectors: Iterable[Mapping], universe: Any = None) -> Subspace:
    return Subspace((vector(v) for v in vectors), universe)


def zero_subspace(universe: Any = None) -> Subspace:
    return Subspace._trusted({}, universe)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _same_universe(a, b)
    ech = a.echelon()
    ech.extend(b.rows.values())
    return ech.freeze()


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Zassenhaus intersection: rows (b|0) and (a|a); rows with empty left half span a ∩ b."""
    _same_universe(a, b)
    if not a.dim or not b.dim:
        return zero_subspace(a.universe)
    if a.dim > b.dim:
        a, b = b, a
    keys = [k for r in a.rows.values() for k in r] + [k for r in b.rows.values() for k in r]
    if all(type(k) is int for k in keys):
        lo = min(keys)
        shift = max(keys) - lo + 1

        def left(k):
            return k - lo + shift

        def right(k):
            return k - lo

        def back(k):
            return k + lo

        def in_right(p):
            return p < shift
    else:
        def left(k):
            return (1, k)

        def right(k):
            return (0, k)

        def back(k):
            return k[1]

        def in_right(p):
            return p[0] == 0
    ech = Echelon()
    for r in b.rows.values():
        ech.add({left(k): c for k, c in r.items()})
    for r in a.rows.values():
        v = {left(k): c for k, c in r.items()}
        v.update({right(k): c for k, c in r.items()})
        ech.add(v)
    out = [{back(k): c for k, c in r.items()} for p, r in ech.rows.items() if in_right(p)]
    return Subspace(out, a.universe)


def quotient_dim(a: Subspace, b: Subspace) -> int:
    """dim a - dim b, after checking b ⊆ a."""
    _same_universe(a, b)
    for r in b.rows.values():
        if not a.contains(r):
            raise PreconditionError("quotient_dim: b is not contained in a")
    return a.dim - b.dim


def kernel(images: Mapping[int, Mapping]) -> list[SparseVector]:
    """Basis of {Σ a_i e_i : Σ a_i images[i] = 0}, returned in reduced echelon form.

    Source keys and image keys must be ints; image keys are shifted above the
    source block so that the image part is eliminated first.
    """
    if not images:
        return []
    img_keys = [k for v in images.values() for k in v]
    lo = min(img_keys) if img_keys else 0
    shift = max(images) + 1 - lo
    ech = Echelon()
    for i, v in images.items():
        row = {k + shift: c for k, c in v.items()}
        row[i] = ONE
        ech.add(row)
    lim = max(images) + 1
    return Subspace([r for p, r in ech.rows.items() if p < lim]).basis()
