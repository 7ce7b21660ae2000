"""Linear codes: encoding, enumeration, distance, puncturing, erasures."""

from fractions import Fraction
from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aelcert import ERASED, ErasedWord, LinearCode, dist_with_erasures, make_field
from aelcert.codes import pairwise_min_distance, rank, rref
from aelcert.errors import (
    DimensionMismatch,
    EmptyResidual,
    EnumerationTooLarge,
    FieldMismatch,
    LengthMismatch,
)
from aelcert.outer import RSOuterCode


@pytest.fixture
def rep3(gf2):
    return LinearCode(gf2, [[1, 1, 1]])


@pytest.fixture
def rs42(gf4):
    # RS[4,2] over GF(4) with evaluation points (0, 1, alpha, alpha+1)
    return RSOuterCode(gf4, 4, 2, points=[0, 1, 2, 3])


def test_rref_rank(gf2):
    rows = [[1, 0, 1], [0, 1, 1], [1, 1, 0]]
    assert rank(gf2, rows) == 2
    reduced, pivots = rref(gf2, rows)
    assert pivots == [0, 1]


def test_generator_must_have_full_rank(gf2):
    with pytest.raises(Exception):
        LinearCode(gf2, [[1, 1, 0], [1, 1, 0]])


def test_generator_entries_must_lie_in_field(gf2):
    with pytest.raises(FieldMismatch):
        LinearCode(gf2, [[1, 2, 0]])


def test_encode_zero_message(rs42):
    assert rs42.encode([0, 0]) == (0, 0, 0, 0)


def test_encode_repetition(rep3):
    assert rep3.encode([1]) == (1, 1, 1)


def test_encode_rs42_affine_polynomial(rs42):
    # f(x) = 1 + x evaluated at (0, 1, alpha, alpha+1) = (1, 0, alpha+1, alpha)
    assert rs42.encode([1, 1]) == (1, 0, 3, 2)


def test_encode_dimension_mismatch(rs42):
    with pytest.raises(DimensionMismatch):
        rs42.encode([1])


def test_encode_message_outside_field(rs42):
    with pytest.raises(FieldMismatch):
        rs42.encode([1, 7])


def test_enumerate_repetition(rep3):
    assert rep3.enumerate_codewords() == [(0, 0, 0), (1, 1, 1)]


def test_enumerate_counts(rs42):
    words = rs42.enumerate_codewords()
    assert len(words) == 16
    assert len(set(words)) == 16


def test_enumerate_cap():
    f16 = make_field(2, 4)
    code = RSOuterCode(f16, 16, 6)
    with pytest.raises(EnumerationTooLarge):
        code.enumerate_codewords(cap=1000)


def test_min_distance_repetition(rep3):
    assert rep3.min_distance() == 1


def test_min_distance_rs42(rs42):
    # MDS: (n - k + 1)/n = 3/4
    assert rs42.min_distance() == Fraction(3, 4)


def test_min_distance_identity_code(gf2):
    code = LinearCode(gf2, [[1, 0], [0, 1]])
    assert code.min_distance() == Fraction(1, 2)


def test_min_distance_matches_pairwise_oracle(gf4):
    # the linearity shortcut must agree with the direct pairwise definition
    for rows in [
        [[1, 1, 1, 0], [0, 1, 2, 3]],
        [[1, 0, 2, 1]],
        [[1, 2, 3, 1], [0, 1, 1, 2]],
    ]:
        code = LinearCode(gf4, rows)
        assert code.min_distance() == pairwise_min_distance(code.enumerate_codewords())


def test_puncture_empty_set(rs42):
    same = rs42.puncture([])
    assert same.n == 4 and same.dim == 2
    # puncturing re-derives the generator, so compare codeword sets
    assert set(same.enumerate_codewords()) == set(rs42.enumerate_codewords())


def test_puncture_repetition(rep3):
    punctured = rep3.puncture([2])
    assert punctured.n == 2 and punctured.dim == 1
    assert punctured.enumerate_codewords() == [(0, 0), (1, 1)]


def test_puncture_rs42_rate_one(rs42):
    punctured = rs42.puncture([0, 1])
    assert punctured.n == 2 and punctured.dim == 2
    assert punctured.rate == 1


def test_puncture_everything_raises(rep3):
    with pytest.raises(EmptyResidual):
        rep3.puncture([0, 1, 2])


def test_puncture_rate_never_drops(gf4):
    # dim can only drop under puncturing; rate = dim/n can only grow or
    # stay while the punctured distance stays positive
    code = LinearCode(gf4, [[1, 1, 1, 0], [0, 1, 2, 3]])
    for r in range(1, 3):
        for coords in combinations(range(4), r):
            punctured = code.puncture(coords)
            assert punctured.dim <= code.dim
            if code.min_distance() > Fraction(r, 4):
                assert punctured.dim == code.dim


def test_erased_word_fraction():
    w = ErasedWord((0, ERASED, 1, 1))
    assert w.n == 4
    assert w.erasure_count == 1
    assert w.s == Fraction(1, 4)


def test_dist_with_erasures_identical():
    w = ErasedWord((0, 1, 1, 0))
    assert dist_with_erasures(w, (0, 1, 1, 0)) == 0


def test_dist_with_erasures_all_erased():
    w = ErasedWord((ERASED,) * 4)
    for h in product(range(2), repeat=4):
        assert dist_with_erasures(w, h) == 0


def test_dist_with_erasures_counts_over_full_n():
    # one non-erased disagreement out of n=4 (denominator is n, not n - #erasures)
    w = ErasedWord((0, ERASED, 1, 1))
    assert dist_with_erasures(w, (0, 0, 0, 1)) == Fraction(1, 4)


def test_dist_with_erasures_length_mismatch():
    with pytest.raises(LengthMismatch):
        dist_with_erasures(ErasedWord((0, 1)), (0, 1, 0))


def test_erasure_decomposition_exhaustive(gf2):
    # erasing S removes exactly the disagreements inside S from the count
    code = LinearCode(gf2, [[1, 0, 1], [0, 1, 1]])
    words = code.enumerate_codewords()
    for g in product(range(2), repeat=3):
        for h in words:
            plain = Fraction(sum(1 for a, b in zip(g, h) if a != b), 3)
            for r in range(4):
                for s_set in combinations(range(3), r):
                    erased = ErasedWord(
                        tuple(ERASED if i in s_set else g[i] for i in range(3))
                    )
                    inside = Fraction(
                        sum(1 for i in s_set if g[i] != h[i]), 3
                    )
                    assert dist_with_erasures(erased, h) == plain - inside


@given(msg1=st.lists(st.integers(0, 3), min_size=2, max_size=2),
       msg2=st.lists(st.integers(0, 3), min_size=2, max_size=2))
@settings(max_examples=100)
def test_linearity(msg1, msg2, gf4):
    code = RSOuterCode(gf4, 4, 2, points=[0, 1, 2, 3])
    summed = [gf4.add(a, b) for a, b in zip(msg1, msg2)]
    cw = tuple(
        gf4.add(a, b) for a, b in zip(code.encode(msg1), code.encode(msg2))
    )
    assert code.encode(summed) == cw
