"""Free Lie superalgebras: basis monomials and a truncated associative model.

Two independent views of the free Lie superalgebra F on a graded alphabet:

* combinatorial: regular and s-regular bracket monomials, counted per
  multidegree;
* linear-algebraic: F embedded in the free associative superalgebra via
  supercommutators, truncated modulo F^N, where ideals, lower central terms
  and relative commutators become exact subspaces.

Words are encoded as ints ``length * base + index`` with ``index`` the
base-``s`` reading of the letters. Longer words therefore compare greater,
and every echelon form pivots on the longest word of a row; Lie elements of
high degree get eliminated first and low-degree remainders stay small.

Regularity uses plain lexicographic order on letter tuples, with a proper
prefix comparing *less* than its extensions; the count test against the
super-Witt numbers pins this choice.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Mapping, Sequence

from .exactlin import ONE, ZERO, Echelon, PreconditionError, Subspace, add_into, scalar, zero_subspace

DEFAULT_WORD_CAP = 2_000_000


class ResourceError(RuntimeError):
    """The truncated word universe would exceed the configured cap."""


@dataclass(frozen=True)
class GradedAlphabet:
    """Ordered generators with parities; the index order is the letter order."""

    names: tuple[str, ...]
    parities: tuple[int, ...]

    def __post_init__(self):
        if len(self.names) != len(self.parities):
            raise ValueError("names and parities differ in length")
        if len(set(self.names)) != len(self.names):
            raise ValueError("generator names must be unique")
        if any(p not in (0, 1) for p in self.parities):
            raise ValueError("parities must be 0 or 1")

    @classmethod
    def from_signature(cls, m: int, n: int) -> "GradedAlphabet":
        names = tuple(f"x{i + 1}" for i in range(m)) + tuple(f"y{j + 1}" for j in range(n))
        return cls(names, (0,) * m + (1,) * n)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, int]]) -> "GradedAlphabet":
        pairs = list(pairs)
        return cls(tuple(p[0] for p in pairs), tuple(int(p[1]) for p in pairs))

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    @property
    def signature(self) -> tuple[int, int]:
        odd = sum(self.parities)
        return len(self.parities) - odd, odd

    def word_parity(self, word: Sequence[int]) -> int:
        return sum(self.parities[i] for i in word) % 2


# --- bracket monomials -------------------------------------------------------

Tree = "int | tuple"


def _tree_word(t) -> tuple[int, ...]:
    if isinstance(t, int):
        return (t,)
    return _tree_word(t[0]) + _tree_word(t[1])


@dataclass(frozen=True)
class LieMonomial:
    """Bracketing tree over generator indices; leaves are ints, nodes are pairs."""

    tree: object
    alphabet: GradedAlphabet = field(compare=False, repr=False)

    @cached_property
    def word(self) -> tuple[int, ...]:
        return _tree_word(self.tree)

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def parity(self) -> int:
        return self.alphabet.word_parity(self.word)

    @property
    def multidegree(self) -> tuple[int, ...]:
        alpha = [0] * len(self.alphabet)
        for i in self.word:
            alpha[i] += 1
        return tuple(alpha)

    def __str__(self):
        def show(t):
            if isinstance(t, int):
                return self.alphabet.names[t]
            return f"({show(t[0])})({show(t[1])})"

        return show(self.tree)


def _prefix_less(word):
    return word


def _prefix_greater(word):
    return word + (float("inf"),)


WORD_ORDERS = {"prefix-less": _prefix_less, "prefix-greater": _prefix_greater}
DEFAULT_WORD_ORDER = "prefix-less"


@lru_cache(maxsize=64)
def _regular_trees(s: int, length: int, order: str) -> tuple:
    """Regular trees of a given length over ``s`` letters, as (tree, word) pairs."""
    key = WORD_ORDERS[order]
    if length == 1:
        return tuple((i, (i,)) for i in range(s))
    out = []
    for l1 in range(1, length):
        left = _regular_trees(s, l1, order)
        right = _regular_trees(s, length - l1, order)
        for t1, w1 in left:
            k1 = key(w1)
            inner = None if isinstance(t1, int) else key(_tree_word(t1[1]))
            for t2, w2 in right:
                k2 = key(w2)
                if not k1 > k2:
                    continue
                if inner is not None and not inner <= k2:
                    continue
                out.append(((t1, t2), w1 + w2))
    return tuple(out)


def enumerate_regular(alphabet: GradedAlphabet, length: int, order: str = DEFAULT_WORD_ORDER) -> list[LieMonomial]:
    if len(alphabet) == 0:
        raise PreconditionError("alphabet is empty")
    if length < 1:
        raise PreconditionError("length must be >= 1")
    return [LieMonomial(t, alphabet) for t, _ in _regular_trees(len(alphabet), length, order)]


def enumerate_s_regular(alphabet: GradedAlphabet, length: int, order: str = DEFAULT_WORD_ORDER) -> list[LieMonomial]:
    """Regular monomials plus squares (v)(v) of odd regular v of half length."""
    out = enumerate_regular(alphabet, length, order)
    if length % 2 == 0:
        for v in enumerate_regular(alphabet, length // 2, order):
            if v.parity == 1:
                out.append(LieMonomial((v.tree, v.tree), alphabet))
    return out


# --- truncated associative model ---------------------------------------------


class TruncatedFrame:
    """Free associative superalgebra on ``alphabet`` modulo words of length >= N.

    Holds the degree layers of the free Lie superalgebra F (spanned by iterated
    supercommutators) so that F^k/F^N is available as a subspace for every k.
    Subspaces built here use the frame itself as their universe tag.
    """

    def __init__(self, alphabet: GradedAlphabet, N: int, word_cap: int = DEFAULT_WORD_CAP):
        if N < 1:
            raise PreconditionError("truncation order N must be >= 1")
        s = len(alphabet)
        size = sum(s**length for length in range(1, N))
        if size > word_cap:
            raise ResourceError(
                f"word universe for {s} generators below length {N} has {size} words (cap {word_cap})"
            )
        self.alphabet = alphabet
        self.N = N
        self.s = s
        self.size = size
        self.base = max(1, s ** max(N - 1, 0))
        self._pows = [s**i for i in range(N + 1)]
        self._parity_cache: dict[int, int] = {}
        self.layers: list[Subspace] = [zero_subspace(self)]  # index 0 unused
        self._build_layers()

    def __repr__(self):
        return f"TruncatedFrame({self.alphabet.signature}, N={self.N})"

    # words

    def encode(self, word: Sequence[int]) -> int:
        idx = 0
        for letter in word:
            idx = idx * self.s + letter
        return len(word) * self.base + idx

    def decode(self, code: int) -> tuple[int, ...]:
        length, idx = divmod(code, self.base)
        out = []
        for _ in range(length):
            idx, letter = divmod(idx, self.s)
            out.append(letter)
        return tuple(reversed(out))

    def length(self, code: int) -> int:
        return code // self.base

    def parity(self, code: int) -> int:
        p = self._parity_cache.get(code)
        if p is None:
            p = self.alphabet.word_parity(self.decode(code))
            self._parity_cache[code] = p
        return p

    # polynomials

    def gen(self, i: int) -> dict:
        if self.N <= 1:
            return {}
        return {self.base + i: ONE}

    def poly(self, terms: Mapping[Sequence[int], object]) -> dict:
        out: dict = {}
        for word, c in terms.items():
            if len(word) < self.N and len(word) >= 1:
                add_into(out, {self.encode(tuple(word)): ONE}, scalar(c))
        return out

    def terms(self, poly: Mapping[int, object]) -> dict:
        return {self.decode(k): c for k, c in poly.items()}

    def mul(self, a: Mapping, b: Mapping) -> dict:
        base, N, pows = self.base, self.N, self._pows
        out: dict = {}
        bl = [(kb // base, kb % base, cb) for kb, cb in b.items()]
        for ka, ca in a.items():
            la, ia = divmod(ka, base)
            for lb, ib, cb in bl:
                lt = la + lb
                if lt >= N:
                    continue
                code = lt * base + ia * pows[lb] + ib
                nc = out.get(code, ZERO) + ca * cb
                if nc:
                    out[code] = nc
                else:
                    del out[code]
        return out

    def parity_parts(self, a: Mapping) -> tuple[dict, dict]:
        even: dict = {}
        odd: dict = {}
        for k, c in a.items():
            (odd if self.parity(k) else even)[k] = c
        return even, odd

    def bracket(self, a: Mapping, b: Mapping) -> dict:
        """Supercommutator ab - (-1)^{|a||b|} ba, bilinear over parity components."""
        if not a or not b:
            return {}
        pa = self._homogeneous_parity(a)
        pb = self._homogeneous_parity(b)
        if pa is None or pb is None:
            out: dict = {}
            for x in self.parity_parts(a):
                for y in self.parity_parts(b):
                    if x and y:
                        add_into(out, self.bracket(x, y))
            return out
        out = self.mul(a, b)
        sign = ONE if pa and pb else -ONE
        add_into(out, self.mul(b, a), sign)
        return out

    def _homogeneous_parity(self, a: Mapping) -> int | None:
        it = iter(a)
        p = self.parity(next(it))
        for k in it:
            if self.parity(k) != p:
                return None
        return p

    def tree_to_poly(self, tree) -> dict:
        if isinstance(tree, int):
            return self.gen(tree)
        return self.bracket(self.tree_to_poly(tree[0]), self.tree_to_poly(tree[1]))

    # filtration

    def _build_layers(self) -> None:
        if self.N <= 1:
            return
        self.layers.append(Subspace._trusted({self.base + i: {self.base + i: ONE} for i in range(self.s)}, self))
        gens = [self.gen(i) for i in range(self.s)]
        for _ in range(2, self.N):
            ech = Echelon(self)
            for v in self.layers[-1].rows.values():
                for g in gens:
                    ech.add(self.bracket(v, g))
            self.layers.append(ech.freeze())

    def F(self, k: int) -> Subspace:
        """F^k modulo F^N (zero for k >= N)."""
        k = max(k, 1)
        rows: dict = {}
        for d in range(k, self.N):
            rows.update(self.layers[d].rows)
        return Subspace._trusted(dict(sorted(rows.items())), self)

    def layer_dim(self, k: int) -> tuple[int, int]:
        """(even, odd) dimension of F^k/F^{k+1} inside the frame, for 1 <= k < N."""
        return self.layers[k].split_dim(self.parity)

    def superdim(self, sub: Subspace) -> tuple[int, int]:
        return sub.split_dim(self.parity)

    def low_part(self, v: Mapping, degree: int) -> dict:
        """Components of ``v`` of word length < ``degree``."""
        lim = degree * self.base
        return {k: c for k, c in v.items() if k < lim}


def build_frame(alphabet: GradedAlphabet, N: int, word_cap: int = DEFAULT_WORD_CAP) -> TruncatedFrame:
    return TruncatedFrame(alphabet, N, word_cap)


def supercommutator(a: Mapping, b: Mapping, frame: TruncatedFrame) -> dict:
    return frame.bracket(a, b)


def lie_tree_to_associative(m: LieMonomial, frame: TruncatedFrame) -> dict:
    return frame.tree_to_poly(m.tree)


def bracket_with_generators(vectors: Iterable[Mapping], frame: TruncatedFrame, into: Echelon) -> list[dict]:
    """Add [v, x] for every v and generator x into ``into``; return the new rows."""
    gens = [frame.gen(i) for i in range(frame.s)]
    new = []
    for v in vectors:
        for g in gens:
            r = into.add(frame.bracket(v, g))
            if r is not None:
                new.append(r)
    return new


def ideal_closure(seed: Iterable[Mapping], frame: TruncatedFrame, floor: int | None = None) -> Subspace:
    """Smallest subspace containing ``seed`` and closed under brackets with generators.

    ``floor = k`` additionally includes F^k (already an ideal, so its rows are
    never re-bracketed).
    """
    ech = Echelon(frame)
    if floor is not None:
        for p, r in frame.F(floor).rows.items():
            ech.rows[p] = r
    queue = [r for r in (ech.add(v) for v in seed) if r is not None]
    while queue:
        queue = bracket_with_generators(queue, frame, ech)
    return ech.freeze()


def gamma_series(R: Subspace, frame: TruncatedFrame, k: int, floor: int | None = None) -> Subspace:
    """γ_k(R, F) for an ideal R of F: γ_1 = R, γ_{j+1} = [γ_j, F].

    With ``floor = f`` (F^f ⊆ R), γ_j ⊇ F^{f+j-1}, so only the components
    below that degree need bracketing.
    """
    if k < 1:
        raise PreconditionError("k must be >= 1")
    current = R
    for j in range(1, k):
        ech = Echelon(frame)
        if floor is None:
            vectors = current.rows.values()
        else:
            top = floor + j - 1
            for p, r in frame.F(top + 1).rows.items():
                ech.rows[p] = r
            vectors = [lo for lo in (frame.low_part(v, top) for v in current.rows.values()) if lo]
        bracket_with_generators(vectors, frame, ech)
        current = ech.freeze()
    return current
