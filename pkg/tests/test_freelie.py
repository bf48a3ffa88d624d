import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supermult.exactlin import PreconditionError, Subspace, span
from supermult.freelie import (
    WORD_ORDERS,
    GradedAlphabet,
    ResourceError,
    build_frame,
    enumerate_regular,
    enumerate_s_regular,
    gamma_series,
    ideal_closure,
    lie_tree_to_associative,
    supercommutator,
)
from supermult.witt import ParitySignature, SuperDim, layer_dim, multidegrees, super_witt_SW

X2 = GradedAlphabet(("x1", "x2"), (0, 0))
Y = GradedAlphabet(("y",), (1,))
XY = GradedAlphabet(("x", "y"), (0, 1))


def test_enumerate_regular_examples():
    mons = enumerate_regular(X2, 2)
    assert [str(m) for m in mons] == ["(x2)(x1)"]
    assert enumerate_regular(Y, 2) == []
    assert len(enumerate_regular(XY, 3)) == 2


def test_enumerate_s_regular_examples():
    assert [str(m) for m in enumerate_s_regular(Y, 2)] == ["(y)(y)"]
    assert enumerate_s_regular(GradedAlphabet(("x",), (0,)), 2) == []
    mons = enumerate_s_regular(XY, 4)
    assert len(mons) == 4
    assert sum(m.parity for m in mons) == 2


def test_empty_alphabet_rejected():
    with pytest.raises(PreconditionError):
        enumerate_regular(GradedAlphabet((), ()), 1)


def test_monomial_attributes():
    (m,) = [u for u in enumerate_s_regular(XY, 3) if u.multidegree == (1, 2)]
    assert m.length == 3 and m.parity == 0
    assert sorted(m.word) == [0, 1, 1]


@pytest.mark.parametrize("order", sorted(WORD_ORDERS))
@pytest.mark.parametrize("mn", [(m, s - m) for s in range(1, 4) for m in range(s + 1)])
def test_s_regular_counts_match_sw(order, mn):
    m, n = mn
    alph = GradedAlphabet.from_signature(m, n)
    sig = ParitySignature(m, n)
    for length in range(1, 7):
        counts = {}
        parity = [0, 0]
        for mono in enumerate_s_regular(alph, length, order):
            counts[mono.multidegree] = counts.get(mono.multidegree, 0) + 1
            parity[mono.parity] += 1
        for alpha in multidegrees(m + n, length):
            assert counts.get(alpha, 0) == super_witt_SW(sig, alpha)
        assert SuperDim(*parity) == layer_dim(sig, length)


@pytest.mark.parametrize("mn", [(1, 1), (0, 2), (2, 1)])
def test_s_regular_images_are_independent(mn):
    alph = GradedAlphabet.from_signature(*mn)
    frame = build_frame(alph, 6)
    for length in range(1, 6):
        images = [lie_tree_to_associative(u, frame) for u in enumerate_s_regular(alph, length)]
        assert span(images, frame).dim == len(images) == sum(frame.layer_dim(length))


def test_supercommutator_examples():
    frame = build_frame(XY, 4)
    x, y = frame.gen(0), frame.gen(1)
    assert supercommutator(x, x, frame) == {}
    assert frame.terms(supercommutator(y, y, frame)) == {(1, 1): 2}


def test_tree_expansion_examples():
    frame = build_frame(XY, 4)
    assert frame.terms(frame.tree_to_poly(0)) == {(0,): 1}
    f2 = build_frame(X2, 3)
    assert f2.terms(f2.tree_to_poly((1, 0))) == {(1, 0): 1, (0, 1): -1}
    # [[y, y], x] = 2yyx - 2xyy
    assert frame.terms(frame.tree_to_poly(((1, 1), 0))) == {(1, 1, 0): 2, (0, 1, 1): -2}


def test_truncation_drops_long_words():
    frame = build_frame(XY, 3)
    yy = frame.bracket(frame.gen(1), frame.gen(1))
    assert frame.bracket(yy, frame.gen(0)) == {}


def test_build_frame_examples():
    assert build_frame(XY, 4).layer_dim(3) == (1, 1)
    assert build_frame(X2, 3).layer_dim(2) == (1, 0)
    for m, n in [(2, 0), (1, 1), (0, 3), (2, 1)]:
        assert build_frame(GradedAlphabet.from_signature(m, n), 2).layer_dim(1) == (m, n)


@pytest.mark.parametrize("mn", [(1, 1), (2, 0), (0, 2), (2, 1), (1, 2), (0, 3)])
def test_frame_layers_match_counts(mn):
    frame = build_frame(GradedAlphabet.from_signature(*mn), 6)
    for k in range(1, 6):
        assert frame.layer_dim(k) == tuple(layer_dim(ParitySignature(*mn), k))


def test_resource_cap():
    with pytest.raises(ResourceError, match="cap"):
        build_frame(GradedAlphabet.from_signature(3, 3), 8, word_cap=10_000)


def test_ideal_closure_examples():
    frame = build_frame(XY, 4)
    assert ideal_closure([], frame).dim == 0
    gens = [frame.gen(0), frame.gen(1)]
    assert ideal_closure(gens, frame) == frame.F(1)


def h1_setup():
    alph = GradedAlphabet(("x1", "x2"), (0, 1))
    frame = build_frame(alph, 5)
    x2 = frame.gen(1)
    R = ideal_closure([frame.bracket(x2, x2)], frame, floor=3)
    return frame, R


def test_ideal_closure_for_h1():
    frame, R = h1_setup()
    # F/R is H_1: (1|2)
    quotient = SuperDim(*frame.superdim(frame.F(1))) - SuperDim(*frame.superdim(R))
    assert quotient == SuperDim(1, 2)


def test_gamma_series_examples():
    frame, R = h1_setup()
    assert gamma_series(R, frame, 1) == R
    assert frame.superdim(gamma_series(R, frame, 3)) == (1, 1)
    assert gamma_series(R, frame, 3, floor=3) == gamma_series(R, frame, 3)
    F = frame.F(1)
    assert gamma_series(F, frame, 2) == frame.F(2)


def test_ideal_closure_monotone_and_idempotent():
    frame, R = h1_setup()
    again = ideal_closure(R.basis(), frame)
    assert again == R
    bigger = ideal_closure(R.basis() + [frame.gen(0)], frame)
    assert R.issubspace(bigger)


polys = st.lists(st.tuples(st.lists(st.integers(0, 1), min_size=1, max_size=3), st.integers(-2, 2)), max_size=4)


def homogeneous(frame, terms, parity):
    out = frame.poly({tuple(w): c for w, c in terms if sum(w) % 2 == parity})
    return out


@settings(max_examples=40, deadline=None)
@given(polys, polys, polys, st.integers(0, 1), st.integers(0, 1), st.integers(0, 1))
def test_super_jacobi_and_skew(ta, tb, tc, pa, pb, pc):
    frame = build_frame(XY, 8)
    a, b, c = homogeneous(frame, ta, pa), homogeneous(frame, tb, pb), homogeneous(frame, tc, pc)
    br = frame.bracket
    sign_ab = -1 if pa and pb else 1
    assert br(a, b) == {k: -sign_ab * v for k, v in br(b, a).items()}
    lhs = br(a, br(b, c))
    rhs = br(br(a, b), c)
    for k, v in br(b, br(a, c)).items():
        rhs[k] = rhs.get(k, 0) + sign_ab * v
    rhs = {k: v for k, v in rhs.items() if v}
    assert lhs == rhs


def test_subspaces_use_frame_universe():
    frame = build_frame(XY, 3)
    assert isinstance(frame.F(2), Subspace)
    assert frame.F(2).universe is frame
