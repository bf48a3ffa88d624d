"""Ground-truth multipliers from free presentations.

Given L = F/R with F free on one generator per basis vector of L, everything
is computed inside the truncated associative frame F/F^N with
N = t + c + 1 (t the nilpotency class). This is exact: F^{t+1} ⊆ R forces
γ_{c+1}(R, F) ⊇ F^{t+c+1}, so nothing of length ≥ N matters.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

from .exactlin import (
    PreconditionError,
    Subspace,
    add_into,
    intersect,
    kernel,
    quotient_dim,
    scalar,
)
from .freelie import (
    DEFAULT_WORD_CAP,
    GradedAlphabet,
    TruncatedFrame,
    bracket_with_generators,
    build_frame,
    gamma_series,
    ideal_closure,
)
from .superalg import (
    StructLSA,
    abelian,
    center,
    is_ideal,
    lower_central,
    nilpotency_class,
    quotient,
    relative_lower_central,
    validate,
)
from .witt import SuperDim


# --- relator syntax ------------------------------------------------------------


class BracketExpr:
    """Element of F written with generators, brackets, scalars and sums."""

    def parity(self, alphabet: GradedAlphabet) -> int:
        raise NotImplementedError

    def evaluate(self, frame: TruncatedFrame) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class Gen(BracketExpr):
    name: str

    def parity(self, alphabet):
        return alphabet.parities[alphabet.index(self.name)]

    def evaluate(self, frame):
        return frame.gen(frame.alphabet.index(self.name))

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Bracket(BracketExpr):
    left: BracketExpr
    right: BracketExpr

    def parity(self, alphabet):
        return (self.left.parity(alphabet) + self.right.parity(alphabet)) % 2

    def evaluate(self, frame):
        return frame.bracket(self.left.evaluate(frame), self.right.evaluate(frame))

    def __str__(self):
        return f"[{self.left},{self.right}]"


@dataclass(frozen=True)
class Scale(BracketExpr):
    coeff: object
    expr: BracketExpr

    def __post_init__(self):
        object.__setattr__(self, "coeff", scalar(self.coeff))

    def parity(self, alphabet):
        return self.expr.parity(alphabet)

    def evaluate(self, frame):
        return {k: self.coeff * c for k, c in self.expr.evaluate(frame).items()} if self.coeff else {}

    def __str__(self):
        return f"{self.coeff}*{self.expr}"


@dataclass(frozen=True)
class Sum(BracketExpr):
    terms: tuple[BracketExpr, ...]

    def parity(self, alphabet):
        ps = {t.parity(alphabet) for t in self.terms}
        if len(ps) > 1:
            raise PreconditionError(f"sum {self} mixes parities")
        return ps.pop() if ps else 0

    def evaluate(self, frame):
        out: dict = {}
        for t in self.terms:
            add_into(out, t.evaluate(frame))
        return out

    def __str__(self):
        return "(" + " + ".join(map(str, self.terms)) + ")"


@dataclass(frozen=True)
class Presentation:
    alphabet: GradedAlphabet
    relators: tuple[BracketExpr, ...]
    class_bound: int

    def __post_init__(self):
        if self.class_bound < 0:
            raise PreconditionError("class bound must be non-negative")
        for r in self.relators:
            r.parity(self.alphabet)  # raises on mixed parity or unknown names

    def frame_degree(self, c: int) -> int:
        return self.class_bound + c + 1

    def universe_size(self, c: int, N: int | None = None) -> int:
        N = self.frame_degree(c) if N is None else N
        s = len(self.alphabet)
        return sum(s**k for k in range(1, N))


def present(L: StructLSA) -> Presentation:
    """One generator per basis vector; one relator [e_i, e_j] - Σ c_ij^k e_k per pair."""
    report = validate(L)
    if not report:
        raise PreconditionError(f"not a Lie superalgebra: {report.kind} at {report.where}")
    t = nilpotency_class(L)
    alphabet = GradedAlphabet(L.names, L.parities)
    rels = []
    for i in range(L.size):
        for j in range(i, L.size):
            if i == j and L.parities[i] == 0:
                continue
            lhs = Bracket(Gen(L.names[i]), Gen(L.names[j]))
            tail = [Scale(-c, Gen(L.names[k])) for k, c in sorted(L.basis_bracket(i, j).items())]
            rels.append(Sum((lhs, *tail)) if tail else lhs)
    return Presentation(alphabet, tuple(rels), t)


# --- core computation -----------------------------------------------------------


@dataclass(frozen=True)
class OracleRun:
    """R, R ∩ F^{c+1} and γ_{c+1}(R, F) inside one frame."""

    presentation: Presentation
    c: int
    frame: TruncatedFrame
    R: Subspace
    R_cap: Subspace
    gamma: Subspace

    @property
    def N(self) -> int:
        return self.frame.N

    @property
    def multiplier(self) -> SuperDim:
        quotient_dim(self.R_cap, self.gamma)  # checks containment
        return SuperDim(*self.frame.superdim(self.R_cap)) - SuperDim(*self.frame.superdim(self.gamma))


@lru_cache(maxsize=64)
def oracle_run(P: Presentation, c: int, N: int | None = None, word_cap: int = DEFAULT_WORD_CAP) -> OracleRun:
    if c < 1:
        raise PreconditionError("c must be >= 1")
    if N is None:
        N = P.frame_degree(c)
    if N < P.frame_degree(c):
        raise PreconditionError(f"N = {N} is below the exact truncation degree {P.frame_degree(c)}")
    frame = build_frame(P.alphabet, N, word_cap)
    floor = P.class_bound + 1
    R = ideal_closure([r.evaluate(frame) for r in P.relators], frame, floor=floor)
    Fc = frame.F(c + 1)
    R_cap = Fc if c + 1 >= floor else intersect(R, Fc)
    gamma = gamma_series(R, frame, c + 1, floor=floor)
    return OracleRun(P, c, frame, R, R_cap, gamma)


def multiplier_oracle(P: Presentation, c: int, N: int | None = None, word_cap: int = DEFAULT_WORD_CAP) -> SuperDim:
    """dim (R ∩ F^{c+1}) / γ_{c+1}(R, F), split by parity."""
    if not len(P.alphabet):
        return SuperDim(0, 0)
    return oracle_run(P, c, N, word_cap).multiplier


def multiplier_of(L: StructLSA, c: int) -> SuperDim:
    return multiplier_oracle(present(L), c)


# --- relative commutators and Z_c^* ---------------------------------------------


def gamma_ML(L: StructLSA, M: Subspace, k: int) -> Subspace:
    """γ_k(M, L) inside L."""
    if k < 1:
        raise PreconditionError("k must be >= 1")
    if not is_ideal(L, M):
        raise PreconditionError("M is not an ideal of L")
    return relative_lower_central(L, M, k)


def _to_L(run: OracleRun, L_size: int, v: Mapping) -> dict:
    """Image in L = F/R of a frame element, as coordinates on the generators."""
    frame = run.frame
    r = run.R.reduce(v)
    out = {}
    for key, c in r.items():
        if frame.length(key) != 1:
            raise PreconditionError("Z_c^* needs a basis presentation (one generator per basis vector of L)")
        out[key - frame.base] = c
    return out


def _lift(run: OracleRun, v: Mapping) -> dict:
    base = run.frame.base
    return {base + i: c for i, c in v.items()}


def _upper_central_preimages(run: OracleRun, c: int) -> Subspace:
    """Preimage in F of Z_c(F / γ_{c+1}(R, F)).

    Z_0 is γ itself; Z_j = {x ∈ F : [x, g] ∈ Z_{j-1} for every generator g},
    which suffices because F is generated in degree one.
    """
    frame = run.frame
    F1 = frame.F(1)
    basis = list(F1.rows.values())
    gens = [frame.gen(i) for i in range(frame.s)]
    stride = (frame.N + 1) * frame.base  # keeps per-generator image blocks apart
    current = run.gamma
    for _ in range(c):
        found = []
        for parity in (0, 1):
            idx = [i for i, p in enumerate(F1.rows) if frame.parity(p) == parity]
            images = {}
            for pos, i in enumerate(idx):
                img: dict = {}
                for gi, g in enumerate(gens):
                    for key, coef in current.reduce(frame.bracket(basis[i], g)).items():
                        img[gi * stride + key] = coef
                images[pos] = img
            for vec in kernel(images):
                x: dict = {}
                for pos, coef in vec.items():
                    add_into(x, basis[idx[pos]], coef)
                found.append(x)
        ech = current.echelon()
        ech.extend(found)
        nxt = ech.freeze()
        if nxt == current:
            break
        current = nxt
    return current


def z_c_star(P: Presentation, c: int, L: StructLSA | None = None) -> Subspace:
    """Z_c^*(L) = π(Z_c(F / γ_{c+1}(R, F))) as a subspace of L."""
    if L is None:
        L = _algebra_of(P)
    if not len(P.alphabet):
        return L.zero()
    run = oracle_run(P, c)
    pre = _upper_central_preimages(run, c)
    return L.span(_to_L(run, L.size, v) for v in pre.rows.values())


def _algebra_of(P: Presentation) -> StructLSA:
    """Recover the multiplication table of the presented algebra."""
    alph = P.alphabet
    basis = list(zip(alph.names, alph.parities))
    if not basis:
        return StructLSA([], {})
    run = oracle_run(P, 1)
    frame = run.frame
    table = {}
    for i in range(len(basis)):
        for j in range(i, len(basis)):
            v = _to_L(run, len(basis), frame.bracket(frame.gen(i), frame.gen(j)))
            if v:
                table[(i, j)] = v
    return StructLSA(basis, table)


@dataclass(frozen=True)
class CapabilityReport:
    capable: bool
    order: int
    certificate: Subspace  # Z_order^*(L); zero exactly when capable

    @property
    def certificate_dim(self) -> SuperDim:
        return self.certificate.universe.sdim(self.certificate)


def is_capable(L: StructLSA, order: int = 1) -> CapabilityReport:
    if order < 1:
        raise PreconditionError("order must be >= 1")
    cert = z_c_star(present(L), order, L)
    return CapabilityReport(cert.dim == 0, order, cert)


def is_2_capable(L: StructLSA) -> CapabilityReport:
    return is_capable(L, 2)


def capability_table(family: str, params, order: int) -> bool:
    """Known answers: which A(m|n), H(m,n), H_m are capable (order 1) or 2-capable."""
    if order not in (1, 2):
        raise PreconditionError("order must be 1 or 2")
    params = tuple(params) if isinstance(params, (tuple, list)) else (params,)
    if family == "A":
        m, n = params
        if m + n == 0:
            return True  # the zero algebra is its own central quotient
        if order == 1:
            return (m, n) == (0, 1) or m + n >= 2
        return m + n >= 2
    if family == "Heven":
        return tuple(params) == (1, 0)
    if family == "Hodd":
        return params[0] == 1
    raise PreconditionError(f"unknown family {family!r}")


# --- exact sequence and inequalities -------------------------------------------------


@dataclass(frozen=True)
class SequenceCheck:
    c: int
    m_L: SuperDim
    m_T: SuperDim
    m_M: SuperDim
    m_cap_gamma: SuperDim  # M ∩ γ_{c+1}(L)
    gamma_N_over_R: SuperDim  # γ_{c+1}(N, F) / γ_{c+1}(R, F)
    tensor_dim: int  # dim (T/T^2)^{⊗c} ⊗ M

    @property
    def identity_holds(self) -> bool:
        return self.m_L + self.m_cap_gamma == self.m_T + self.gamma_N_over_R

    @property
    def quotient_inequality_holds(self) -> bool:
        return self.m_T.total <= self.m_L.total + self.m_cap_gamma.total

    @property
    def central_bound_holds(self) -> bool:
        lhs = self.m_L.total + self.m_cap_gamma.total
        return lhs <= self.m_T.total + self.m_M.total + self.tensor_dim


def sequence_check(L: StructLSA, c: int, M: Subspace | None = None) -> SequenceCheck:
    """Evaluate every term of the multiplier exact sequence for L and a graded ideal M.

    M defaults to Z(L). Each multiplier comes from its own presentation.
    """
    if M is None:
        M = center(L)
    if not is_ideal(L, M):
        raise PreconditionError("M is not an ideal of L")
    P = present(L)
    m_L = multiplier_oracle(P, c)
    q = quotient(L, M)
    T = q.algebra
    m_T = multiplier_of(T, c) if T.size else SuperDim(0, 0)
    Mdim = L.sdim(M)
    m_M = multiplier_of(abelian(*Mdim), c) if Mdim.total else SuperDim(0, 0)
    m_cap_gamma = L.sdim(intersect(M, lower_central(L, c + 1)))
    if L.size:
        run = oracle_run(P, c)
        frame = run.frame
        ech = run.R.echelon()
        queue = ech.extend(_lift(run, v) for v in M.rows.values())
        while queue:
            queue = bracket_with_generators(queue, frame, ech)
        N = ech.freeze()
        gN = gamma_series(N, frame, c + 1, floor=P.class_bound + 1)
        gN_over = SuperDim(*frame.superdim(gN)) - SuperDim(*frame.superdim(run.gamma))
        quotient_dim(gN, run.gamma)
    else:
        gN_over = SuperDim(0, 0)
    ab_T = T.dim - T.sdim(lower_central(T, 2)) if T.size else SuperDim(0, 0)
    tensor_dim = ab_T.total**c * Mdim.total
    return SequenceCheck(c, m_L, m_T, m_M, m_cap_gamma, gN_over, tensor_dim)


def injectivity_check(L: StructLSA, K: Subspace | None = None) -> tuple[SuperDim, SuperDim]:
    """(dim M^2(L), dim M^2(L/K)) for K ⊆ Z_2^*(L), K defaulting to Z_2^*(L) itself."""
    P = present(L)
    Z = z_c_star(P, 2, L)
    if K is None:
        K = Z
    if not K.issubspace(Z):
        raise PreconditionError("K must lie in Z_2^*(L)")
    T = quotient(L, K).algebra
    m_T = multiplier_of(T, 2) if T.size else SuperDim(0, 0)
    return multiplier_oracle(P, 2), m_T
