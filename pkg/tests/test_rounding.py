"""Threshold-rounding decoder over inner-codeword distribution ensembles."""

import warnings
from fractions import Fraction

import numpy as np
import pytest

from aelcert import (
    AELCode,
    InnerDistributionEnsemble,
    ael_unique_decode,
    decode_from_distributions,
    local_views_to_distributions,
    plurality_center,
    random_regular_bipartite,
    threshold_endpoints,
)
from aelcert.outer import RSOuterCode
from aelcert.seeds import derive_seed


@pytest.fixture(scope="module")
def instance12(gf4, gf16):
    graph = random_regular_bipartite(12, 4, seed=7, lam_target=0.95)
    inner = RSOuterCode(gf4, 4, 2, points=[0, 1, 2, 3])
    outer = RSOuterCode(gf16, 12, 2)
    return AELCode(graph, inner, outer)


def _point_mass_ensemble(code, word):
    picks = [code.outer_symbol_to_inner_index(s) for s in code.decode_to_outer(word)]
    m = code.inner.size
    weights = []
    for idx in picks:
        row = [Fraction(0)] * m
        row[idx] = Fraction(1)
        weights.append(row)
    return InnerDistributionEnsemble(weights), picks


def test_weights_must_sum_to_one():
    with pytest.raises(ValueError):
        InnerDistributionEnsemble([[Fraction(1, 2), Fraction(1, 3)]])
    with pytest.raises(ValueError):
        InnerDistributionEnsemble([[Fraction(3, 2), Fraction(-1, 2)]])


def test_round_at_picks_interval():
    ens = InnerDistributionEnsemble(
        [[Fraction(1, 4), Fraction(1, 4), Fraction(1, 2)]]
    )
    assert ens.round_at(Fraction(0)) == [0]
    assert ens.round_at(Fraction(1, 4)) == [1]
    assert ens.round_at(Fraction(499, 1000)) == [1]
    assert ens.round_at(Fraction(1, 2)) == [2]
    assert ens.round_at(Fraction(999, 1000)) == [2]


def test_threshold_endpoints_cover_all_thetas():
    rng = np.random.default_rng(derive_seed(0, "theta-test"))
    for trial in range(10):
        weights = []
        for _ in range(3):
            cuts = sorted(int(x) for x in rng.integers(1, 20, size=2))
            weights.append(
                [
                    Fraction(cuts[0], 20),
                    Fraction(cuts[1] - cuts[0], 20),
                    Fraction(20 - cuts[1], 20),
                ]
            )
        ens = InnerDistributionEnsemble(weights)
        endpoints = threshold_endpoints(ens)
        assert len(endpoints) <= ens.m * ens.n
        seen = {tuple(ens.round_at(t)) for t in endpoints}
        for _ in range(1000):
            theta = Fraction(int(rng.integers(0, 10**6)), 10**6)
            assert tuple(ens.round_at(theta)) in seen


def test_expected_disagreement():
    ens = InnerDistributionEnsemble(
        [
            [Fraction(3, 4), Fraction(1, 4)],
            [Fraction(1), Fraction(0)],
        ]
    )
    assert ens.expected_disagreement([0, 0]) == Fraction(1, 8)
    assert ens.expected_disagreement([1, 0]) == Fraction(3, 8)


def test_point_mass_decodes_exactly(instance12):
    h = instance12.encode_message([7, 2])
    ens, picks = _point_mass_ensemble(instance12, h)
    assert ens.expected_disagreement(picks) == 0
    assert decode_from_distributions(instance12, ens) == h


def test_planted_ensemble_recovery(instance12):
    # noise up to the outer decoding radius delta_dec = 5/12 in expectation
    words = instance12.enumerate_codewords()
    m = instance12.inner.size
    for trial in range(20):
        rng = np.random.default_rng(derive_seed(1, "planted", trial))
        h = words[rng.integers(0, len(words))]
        picks = [
            instance12.outer_symbol_to_inner_index(s)
            for s in instance12.decode_to_outer(h)
        ]
        budget = instance12.outer.delta_dec * instance12.n
        weights = []
        for l in range(instance12.n):
            steal = min(Fraction(int(rng.integers(0, 49)), 100), budget)
            budget -= steal
            row = [Fraction(0)] * m
            row[picks[l]] = 1 - steal
            other = int(rng.integers(0, m))
            if other == picks[l]:
                other = (other + 1) % m
            row[other] = steal
            weights.append(row)
        ens = InnerDistributionEnsemble(weights)
        assert ens.expected_disagreement(picks) <= instance12.outer.delta_dec
        assert decode_from_distributions(instance12, ens) == h


def test_ambiguous_ensemble_fails(instance12):
    # equal mass on two codewords' views at every vertex: expected
    # disagreement 1/2 from each, beyond delta_dec = 5/12 -> Fail
    h1 = instance12.encode_message([0, 1])
    h2 = instance12.encode_message([0, 2])
    _, picks1 = _point_mass_ensemble(instance12, h1)
    _, picks2 = _point_mass_ensemble(instance12, h2)
    m = instance12.inner.size
    weights = []
    for a, b in zip(picks1, picks2):
        row = [Fraction(0)] * m
        if a == b:
            row[a] = Fraction(1)
        else:
            row[a] = Fraction(1, 2)
            row[b] = Fraction(1, 2)
        weights.append(row)
    ens = InnerDistributionEnsemble(weights)
    assert decode_from_distributions(instance12, ens) is None


def test_local_views_point_mass_on_codeword(instance12):
    h = instance12.encode_message([9, 9])
    ens = local_views_to_distributions(instance12, h)
    picks = [
        instance12.outer_symbol_to_inner_index(s)
        for s in instance12.decode_to_outer(h)
    ]
    for l, idx in enumerate(picks):
        assert ens.weights[l][idx] == 1


def test_local_views_single_flip_keeps_point_mass(instance12):
    # inner distance 3/4 means one flipped edge is still uniquely closest
    h = instance12.encode_message([9, 9])
    edges = instance12.unfold(h)
    edges[0] = (edges[0] + 1) % 4
    g = instance12.fold(edges)
    ens = local_views_to_distributions(instance12, g)
    picks = [
        instance12.outer_symbol_to_inner_index(s)
        for s in instance12.decode_to_outer(h)
    ]
    for l, idx in enumerate(picks):
        assert ens.weights[l][idx] == 1


def test_ael_unique_decode_identity(instance12):
    h = instance12.encode_message([3, 3])
    result = ael_unique_decode(instance12, h)
    assert result == (h, Fraction(0))


def test_ael_unique_decode_corruption(instance12):
    h = instance12.encode_message([3, 3])
    for t in (1, 2):
        rng = np.random.default_rng(t)
        word = list(h)
        for pos in rng.permutation(12)[:t]:
            word[pos] = tuple((x + 1) % 4 for x in word[pos])
        result = ael_unique_decode(instance12, tuple(word))
        assert result is not None and result[0] == h


def test_ael_unique_decode_far_center_fails(instance12):
    words = instance12.enumerate_codewords()
    rng = np.random.default_rng(21)
    found_fail = False
    for _ in range(10):
        idx = [int(i) for i in rng.choice(256, 3, replace=False)]
        center, _ = plurality_center([words[i] for i in idx])
        if ael_unique_decode(instance12, center) is None:
            found_fail = True
            break
    assert found_fail


def test_returned_codeword_meets_guarantee(instance12):
    # no false positives: whatever comes back satisfies the expected
    # disagreement bound by construction; re-check explicitly
    h = instance12.encode_message([11, 5])
    ens = local_views_to_distributions(instance12, h)
    got = decode_from_distributions(instance12, ens)
    assert got == h
    picks = [
        instance12.outer_symbol_to_inner_index(s)
        for s in instance12.decode_to_outer(got)
    ]
    assert ens.expected_disagreement(picks) <= instance12.outer.delta_dec
