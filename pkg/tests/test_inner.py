"""Average-radius list-decodability verification and inner-code search."""

from fractions import Fraction
from itertools import combinations, product

import numpy as np
import pytest

from aelcert import (
    ERASED,
    LinearCode,
    exhaustive_arld_check,
    frs_as_linear_code,
    make_field,
    make_folded_rs,
    min_arld_slack,
    plurality_center,
    sample_random_linear_code,
    search_inner_code,
)
from aelcert.arld import (
    epsilon_min,
    intern_symbols,
    min_disagreement_by_size,
    subset_search_count,
)
from aelcert.errors import (
    EmptySet,
    FieldTooSmall,
    NotAppropriate,
    SearchExhausted,
    SubsetEnumerationTooLarge,
)
from aelcert.inner import BlockCode
from aelcert.outer import RSOuterCode
from aelcert.seeds import derive_seed


# -- plurality center oracle ------------------------------------------------------


def test_plurality_single_codeword():
    center, contribs = plurality_center([(1, 0, 1)])
    assert center == (1, 0, 1)
    assert contribs == [0, 0, 0]


def test_plurality_three_words():
    h = [(0, 0, 0), (1, 1, 0), (1, 0, 1)]
    center, contribs = plurality_center(h)
    assert center == (1, 0, 0)
    assert contribs == [1, 1, 1]
    assert sum(contribs) == 3  # min total disagreements over all centers


def test_plurality_tie_breaks_low():
    center, contribs = plurality_center([(0, 0, 0), (1, 1, 1)])
    assert center == (0, 0, 0)
    assert sum(contribs) == 3  # one disagreement per coordinate


def test_plurality_empty_raises():
    with pytest.raises(EmptySet):
        plurality_center([])


def test_plurality_is_globally_optimal():
    # cross-check against the sweep over all centers, for every subset of a
    # small codebook
    rng = np.random.default_rng(5)
    words = [tuple(int(x) for x in rng.integers(0, 3, 4)) for _ in range(6)]
    for m in (2, 3, 4):
        for idx in combinations(range(6), m):
            subset = [words[i] for i in idx]
            center, contribs = plurality_center(subset)
            best = min(
                sum(sum(1 for a, b in zip(g, h) if a != b) for h in subset)
                for g in product(range(3), repeat=4)
            )
            assert sum(contribs) == best


# -- subset minimization ----------------------------------------------------------


def test_subset_search_count():
    assert subset_search_count(4, 3) == 6 + 4
    assert subset_search_count(16, 4) == 120 + 560 + 1820


def test_subset_cap_enforced():
    sym = np.zeros((100, 4), dtype=np.int64)
    with pytest.raises(SubsetEnumerationTooLarge):
        min_disagreement_by_size(sym, 4, subset_cap=1000)


def test_vectorized_search_matches_generic_oracle():
    # the m=2/3/4 vectorized scans must agree with direct plurality
    # enumeration over every subset
    rng = np.random.default_rng(11)
    for trial in range(5):
        words = [tuple(int(x) for x in rng.integers(0, 4, 5)) for _ in range(9)]
        words = list(dict.fromkeys(words))
        sym, _ = intern_symbols(words)
        got = min_disagreement_by_size(sym, 4)
        for m in (2, 3, 4):
            if m > len(words):
                continue
            best = min(
                sum(plurality_center([words[i] for i in idx])[1])
                for idx in combinations(range(len(words)), m)
            )
            assert got[m].disagreement_count == best
            witness = [words[i] for i in got[m].indices]
            assert sum(plurality_center(witness)[1]) == best


def test_threaded_search_matches_single_thread():
    rng = np.random.default_rng(3)
    words = [tuple(int(x) for x in rng.integers(0, 2, 6)) for _ in range(12)]
    words = list(dict.fromkeys(words))
    sym, _ = intern_symbols(words)
    solo = min_disagreement_by_size(sym, 4, threads=1)
    multi = min_disagreement_by_size(sym, 4, threads=3)
    for m in solo:
        assert solo[m].disagreement_count == multi[m].disagreement_count


# -- min_arld_slack ---------------------------------------------------------------


def test_slack_repetition_code(gf2):
    code = LinearCode(gf2, [[1, 1, 1]])
    cert = min_arld_slack(code, k=2, delta0=1)
    assert cert.eps_min == 0
    assert cert.witness_disagreements == 3


def test_slack_k1_always_zero(gf4):
    code = RSOuterCode(gf4, 4, 2, points=[0, 1, 2, 3])
    cert = min_arld_slack(code, k=1, delta0=1)
    assert cert.eps_min == 0


def test_slack_rs42(gf4):
    code = RSOuterCode(gf4, 4, 2, points=[0, 1, 2, 3])
    cert = min_arld_slack(code, k=2, delta0=Fraction(3, 4))
    assert cert.eps_min == 0
    assert cert.witness_disagreements == 3  # min pairwise distance 3/4


def test_certificate_witness_reevaluates(gf4):
    code = RSOuterCode(gf4, 4, 2, points=[0, 1, 2, 3])
    cert = min_arld_slack(code, k=3, delta0=Fraction(9, 10))
    assert cert.reevaluate(code) == cert.eps_min


def test_epsilon_min_clamps_at_zero():
    from aelcert.arld import SubsetWitness

    eps, worst = epsilon_min(
        {2: SubsetWitness(2, (0, 1), 10)}, n=4, delta0=Fraction(1, 2)
    )
    assert eps == 0
    assert worst is not None


# -- exhaustive oracle ------------------------------------------------------------


def test_exhaustive_pass_repetition(gf2):
    code = LinearCode(gf2, [[1, 1]])
    ok, witness = exhaustive_arld_check(code, k=2, delta0=1, eps=0)
    assert ok and witness is None


def test_exhaustive_fail_with_witness(gf2):
    code = LinearCode(gf2, [[1, 1]])
    ok, witness = exhaustive_arld_check(
        code, k=2, delta0=1, eps=Fraction(-1, 10)
    )
    assert not ok
    assert witness["lhs"] < witness["rhs"]
    assert len(witness["subset"]) >= 2


def test_exhaustive_all_erased_center_boundary(gf2):
    # s = 1: LHS is 0 and the bound is (m-1)(delta0 - 1 - eps) <= 0 whenever
    # delta0 <= 1 + eps, so the all-erased center can never be a witness there
    code = LinearCode(gf2, [[1, 1, 1]])
    ok, witness = exhaustive_arld_check(code, k=2, delta0=1, eps=0)
    assert ok
    bad, witness = exhaustive_arld_check(code, k=2, delta0=2, eps=0)
    assert not bad


def test_oracle_agreement_random_instances(gf4):
    # verdicts of the plurality verifier and the literal sweep must match
    rng = np.random.default_rng(17)
    for trial in range(3):
        code = sample_random_linear_code(gf4, 4, 1, rng)
        for delta0, eps in [
            (Fraction(1, 2), Fraction(0)),
            (Fraction(3, 4), Fraction(1, 8)),
            (Fraction(1), Fraction(0)),
        ]:
            cert = min_arld_slack(code, k=3, delta0=delta0)
            fast_verdict = cert.eps_min <= eps
            slow_verdict, _ = exhaustive_arld_check(
                code, k=3, delta0=delta0, eps=eps
            )
            assert fast_verdict == slow_verdict


def test_erasure_monotonicity_small_instance(gf2):
    # slack(center, S) - slack(filled center, {}) = sum over S of
    # (maxcount_i - 1)/n >= 0, so erasures never make the bound harder
    code = LinearCode(gf2, [[1, 0, 1], [0, 1, 1]])
    words = code.enumerate_codewords()
    n = 3
    for m in (2, 3):
        for idx in combinations(range(len(words)), m):
            subset = [words[i] for i in idx]
            _, contribs = plurality_center(subset)
            min_full_slack = min(
                Fraction(
                    sum(sum(1 for a, b in zip(g, h) if a != b) for h in subset), n
                )
                - (m - 1) * Fraction(1)  # delta0 = 1, s = 0
                for g in product(range(2), repeat=n)
            )
            for r in range(n + 1):
                for s_set in combinations(range(n), r):
                    keep = [i for i in range(n) if i not in s_set]
                    s_frac = Fraction(r, n)
                    for partial in product(range(2), repeat=len(keep)):
                        lhs = Fraction(
                            sum(
                                sum(1 for i, p in zip(keep, partial) if h[i] != p)
                                for h in subset
                            ),
                            n,
                        )
                        slack = lhs - (m - 1) * (1 - s_frac)
                        assert slack >= min_full_slack


# -- random code sampling and search ----------------------------------------------


def test_sample_deterministic(gf8):
    c1 = sample_random_linear_code(gf8, 6, 2, np.random.default_rng(42))
    c2 = sample_random_linear_code(gf8, 6, 2, np.random.default_rng(42))
    assert c1.generator == c2.generator


def test_sample_shape():
    f16 = make_field(2, 4)
    code = sample_random_linear_code(f16, 6, 3, np.random.default_rng(0))
    assert code.n == 6 and code.dim == 3
    assert code.rate == Fraction(1, 2)


def test_random_code_calibration(gf8):
    # >= 90% of seeds should certify eps_min <= 1/6 at
    # delta0 = 1 - rate - 1/6 = 1/2, k = 3 (frozen after a 100-seed sweep
    # measuring 100%); spot-check a 20-seed slice here to keep runtime down
    good = 0
    for s in range(20):
        rng = np.random.default_rng(derive_seed(s, "calib-k3"))
        code = sample_random_linear_code(gf8, 6, 2, rng)
        cert = min_arld_slack(code, k=3, delta0=Fraction(1, 2))
        good += cert.eps_min <= Fraction(1, 6)
    assert good >= 18


def test_search_vacuous_target(gf8):
    code, cert = search_inner_code(
        gf8, 6, 2, k=3, delta0=Fraction(1, 2), eps_target=1, seed=0
    )
    assert cert.eps_min <= 1


def test_search_impossible_target(gf8):
    with pytest.raises(SearchExhausted):
        search_inner_code(
            gf8, 6, 2, k=3, delta0=Fraction(1, 2), eps_target=Fraction(-1),
            seed=0, max_tries=3,
        )


def test_search_deterministic(gf8):
    a1 = search_inner_code(
        gf8, 6, 2, k=4, delta0=Fraction(2, 3), eps_target=Fraction(1, 6), seed=9
    )
    a2 = search_inner_code(
        gf8, 6, 2, k=4, delta0=Fraction(2, 3), eps_target=Fraction(1, 6), seed=9
    )
    assert a1[0].generator == a2[0].generator
    assert a1[1].eps_min == a2[1].eps_min


# -- folded Reed-Solomon ----------------------------------------------------------


def test_frs_b1_is_plain_rs(gf17):
    frs = make_folded_rs(gf17, 1, 4, Fraction(1, 2))
    words = frs.codewords()
    assert len(words) == 17**2
    # each folded symbol is a 1-tuple of a polynomial evaluation
    assert all(len(sym) == 1 for w in words for sym in w)


def test_frs_acceptance_instance(gf17):
    frs = make_folded_rs(gf17, 2, 4, Fraction(1, 4))
    assert frs.dim == 2
    assert frs.gamma == 3
    words = frs.codewords()
    assert len(words) == 289
    assert len(set(words)) == 289


def test_frs_appropriateness_distinct_points(gf17):
    frs = make_folded_rs(gf17, 2, 4, Fraction(1, 4))
    points = {
        gf17.mul(gf17.pow(frs.gamma, i), a)
        for i in range(frs.b)
        for a in frs.alphas
    }
    assert len(points) == frs.b * frs.n


def test_frs_repeated_point_rejected(gf17):
    # alpha_1 = gamma * alpha_0 makes gamma^1*alpha_0 = gamma^0*alpha_1 collide
    with pytest.raises(NotAppropriate):
        make_folded_rs(gf17, 2, 4, Fraction(1, 4), alphas=[1, 3, 9, 13])


def test_frs_field_too_small(gf4):
    with pytest.raises(FieldTooSmall):
        make_folded_rs(gf4, 2, 4, Fraction(1, 4))


def test_frs_folded_min_distance(gf17):
    # a nonzero difference polynomial of degree < 2 vanishes at no more than
    # one of the 8 distinct evaluation points, so no folded 2-tuple can ever
    # agree between distinct codewords: the folded distance is exactly 1
    block = frs_as_linear_code(make_folded_rs(gf17, 2, 4, Fraction(1, 4)))
    assert block.min_distance() == 1
    assert block.min_distance() >= Fraction(3, 4)


def test_frs_certificate(gf17):
    block = frs_as_linear_code(make_folded_rs(gf17, 2, 4, Fraction(1, 4)))
    cert = min_arld_slack(block, k=3, delta0=Fraction(3, 4))
    assert cert.eps_min == 0
    assert cert.min_disagreements_by_size == {2: 4, 3: 8}


def test_block_code_distance():
    code = BlockCode([(0, 0), (0, 1), (1, 1)])
    assert code.min_distance() == Fraction(1, 2)
    assert len(code) == 3
