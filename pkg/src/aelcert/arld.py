"""
Worst-case average-radius slack computation over codeword subsets.

The quantity minimized over subsets H (and implicitly over all centers g,
via the coordinate-wise plurality argument) is the total disagreement count

    D(H) = sum_i (|H| - maxcount_i)

where maxcount_i is the largest symbol multiplicity among {h_i : h in H}.
D(H)/n equals min_g sum_{h in H} Delta(g, h), so a single exact integer per
subset settles the universally-quantified center.  Erasures never help the
adversary: erasing coordinate i changes the slack by (maxcount_i - 1)/n >= 0,
so the erasure-free worst case covers every erasure fraction (this fact is
also machine-checked on small instances in the test suite).
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np

from .errors import EmptySet, SubsetEnumerationTooLarge

DEFAULT_SUBSET_CAP = 2 * 10**8


def intern_symbols(codewords) -> tuple[np.ndarray, list]:
    """Map codewords over an arbitrary hashable alphabet to integer ids.

    Ids are assigned in sorted symbol order, so id comparisons agree with
    the canonical "smallest element encoding" tie-break.
    """
    words = [tuple(w) for w in codewords]
    alphabet = sorted({s for w in words for s in w})
    index = {s: i for i, s in enumerate(alphabet)}
    mat = np.array([[index[s] for s in w] for w in words], dtype=np.int64)
    return mat, alphabet


def plurality_center(words) -> tuple[tuple, list[int]]:
    """Coordinate-wise plurality of a set of equal-length words.

    Returns (center, contributions) where contributions[i] = |H| - maxcount_i,
    the minimum possible number of disagreements at coordinate i over any
    center symbol.  Ties break to the smallest symbol.
    """
    words = [tuple(w) for w in words]
    if not words:
        raise EmptySet("plurality of an empty set")
    n = len(words[0])
    center = []
    contribs = []
    for i in range(n):
        counts = Counter(w[i] for w in words)
        best = max(counts.values())
        center.append(min(s for s, c in counts.items() if c == best))
        contribs.append(len(words) - best)
    return tuple(center), contribs


@dataclass
class SubsetWitness:
    size: int
    indices: tuple[int, ...]
    disagreement_count: int  # D(H), an exact integer over n coordinates


def subset_search_count(m_words: int, k: int) -> int:
    return sum(comb(m_words, j) for j in range(2, min(k, m_words) + 1))


def min_disagreement_by_size(
    sym: np.ndarray,
    k: int,
    subset_cap: int = DEFAULT_SUBSET_CAP,
    threads: int = 1,
) -> dict[int, SubsetWitness]:
    """For each subset size m in 2..k, the minimum D(H) and a witness subset.

    `sym` is an (M, n) integer matrix of interned codeword symbols.
    """
    M, n = sym.shape
    if subset_search_count(M, k) > subset_cap:
        raise SubsetEnumerationTooLarge(
            f"{subset_search_count(M, k)} subsets exceed cap {subset_cap}"
        )
    out: dict[int, SubsetWitness] = {}
    if M < 2 or k < 2:
        return out

    eq = (sym[:, None, :] == sym[None, :, :]).astype(np.uint8)  # (M, M, n)

    # m = 2: D = hamming distance
    dist = n - eq.sum(axis=2, dtype=np.int64)
    iu = np.triu_indices(M, k=1)
    flat = dist[iu]
    best = int(flat.argmin())
    out[2] = SubsetWitness(2, (int(iu[0][best]), int(iu[1][best])), int(flat[best]))

    if k >= 3 and M >= 3:
        out[3] = _search_m3(sym, eq, threads)
    if k >= 4 and M >= 4:
        out[4] = _search_m4(sym, eq, threads)
    for m in range(5, min(k, M) + 1):
        out[m] = _search_generic(sym, m)
    return out


def _search_m3(sym: np.ndarray, eq: np.ndarray, threads: int) -> SubsetWitness:
    M, n = sym.shape

    def scan(a_range):
        best = (np.iinfo(np.int64).max, None)
        for a in a_range:
            rest = np.arange(a + 1, M)
            if len(rest) < 2:
                continue
            bi, ci = np.triu_indices(len(rest), k=1)
            B, C = rest[bi], rest[ci]
            eq_ab, eq_ac = eq[a][B], eq[a][C]
            eq_bc = eq[B, C]
            count_a = 1 + eq_ab + eq_ac
            count_b = 1 + eq_ab + eq_bc
            count_c = 1 + eq_ac + eq_bc
            maxc = np.maximum(np.maximum(count_a, count_b), count_c)
            d = 3 * n - maxc.sum(axis=1, dtype=np.int64)
            j = int(d.argmin())
            if d[j] < best[0]:
                best = (int(d[j]), (a, int(B[j]), int(C[j])))
        return best

    best = _parallel_min(scan, range(M - 2), threads)
    return SubsetWitness(3, best[1], best[0])


def _search_m4(sym: np.ndarray, eq: np.ndarray, threads: int) -> SubsetWitness:
    M, n = sym.shape

    def scan(b_range):
        best = (np.iinfo(np.int64).max, None)
        for b in b_range:
            rest = np.arange(b + 1, M)
            if len(rest) < 2 or b < 1:
                continue
            ci, di = np.triu_indices(len(rest), k=1)
            C, D = rest[ci], rest[di]
            eq_cd = eq[C, D]
            eq_bc, eq_bd = eq[b][C], eq[b][D]
            for a in range(b):
                eq_ab = eq[a, b]
                eq_ac, eq_ad = eq[a][C], eq[a][D]
                count_a = 1 + eq_ab + eq_ac + eq_ad
                count_b = 1 + eq_ab + eq_bc + eq_bd
                count_c = 1 + eq_ac + eq_bc + eq_cd
                count_d = 1 + eq_ad + eq_bd + eq_cd
                maxc = np.maximum(
                    np.maximum(count_a, count_b), np.maximum(count_c, count_d)
                )
                d = 4 * n - maxc.sum(axis=1, dtype=np.int64)
                j = int(d.argmin())
                if d[j] < best[0]:
                    best = (int(d[j]), (a, b, int(C[j]), int(D[j])))
        return best

    best = _parallel_min(scan, range(1, M - 1), threads)
    return SubsetWitness(4, best[1], best[0])


def _search_generic(sym: np.ndarray, m: int) -> SubsetWitness:
    M, n = sym.shape
    rows = [tuple(r) for r in sym]
    best = (n * m + 1, None)
    for idx in combinations(range(M), m):
        _, contribs = plurality_center([rows[i] for i in idx])
        d = sum(contribs)
        if d < best[0]:
            best = (d, idx)
    return SubsetWitness(m, best[1], best[0])


def _parallel_min(scan, index_range, threads: int):
    if threads <= 1:
        result = scan(index_range)
    else:
        chunks = [list(index_range)[i::threads] for i in range(threads)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(scan, chunks))
        result = min(results, key=lambda r: r[0])
    if result[1] is None:
        raise EmptySet("subset scan found no candidate")
    return result


def epsilon_min(
    witnesses: dict[int, SubsetWitness], n: int, delta0: Fraction
) -> tuple[Fraction, SubsetWitness | None]:
    """Smallest eps for which every subset satisfies
    D(H)/n >= (|H|-1)(delta0 - eps), clamped below at 0."""
    eps = Fraction(0)
    worst = None
    for m, w in witnesses.items():
        cand = delta0 - Fraction(w.disagreement_count, n * (m - 1))
        if cand > eps:
            eps, worst = cand, w
    if worst is None and witnesses:
        # eps_min = 0: report the tightest subset anyway
        worst = min(
            witnesses.values(),
            key=lambda w: Fraction(w.disagreement_count, w.size - 1),
        )
    return eps, worst
