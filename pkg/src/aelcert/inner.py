"""
Inner-code construction and exact verification of average-radius list
decodability (with erasures): random linear codes found by rejection
sampling, folded Reed-Solomon codes, and the brute-force oracles that
certify them.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import combinations, product

import numpy as np

from .arld import (
    DEFAULT_SUBSET_CAP,
    epsilon_min,
    intern_symbols,
    min_disagreement_by_size,
    plurality_center,
    subset_search_count,
)
from .codes import ERASED, ErasedWord, LinearCode, pairwise_min_distance
from .errors import (
    EnumerationTooLarge,
    FieldTooSmall,
    NotAppropriate,
    RankFailure,
    SearchExhausted,
)
from .gf import Field, multiplicative_generator
from .seeds import derive_seed


def resolve_words(code_or_words) -> tuple[list[tuple], int]:
    """Accept a LinearCode, a BlockCode, or a plain codeword list."""
    if isinstance(code_or_words, LinearCode):
        words = code_or_words.enumerate_codewords()
    elif isinstance(code_or_words, BlockCode):
        words = code_or_words.codewords
    else:
        words = [tuple(w) for w in code_or_words]
    return list(words), len(words[0])


@dataclass
class ARLDCertificate:
    """Exact certificate of the worst-case average-radius slack of a code.

    eps_min is the smallest eps for which every subset H (|H| <= k) and every
    (possibly erased) center satisfies
        sum_h Delta(center, h) >= (|H| - 1) * (delta0 - s - eps).
    The s = 0 plurality worst case covers all erasure fractions by the
    coordinate-slack monotonicity argument (see aelcert.arld).
    """

    delta0: Fraction
    k: int
    eps_min: Fraction
    n: int
    witness_indices: tuple[int, ...]
    witness_center: tuple
    witness_disagreements: int
    subsets_examined: int
    runtime_seconds: float
    code_description: str = ""
    min_disagreements_by_size: dict = dc_field(default_factory=dict)

    def reevaluate(self, code_or_words) -> Fraction:
        """Recompute eps_min from the stored witness subset (rational equality)."""
        words, n = resolve_words(code_or_words)
        subset = [words[i] for i in self.witness_indices]
        center, contribs = plurality_center(subset)
        d = sum(contribs)
        m = len(subset)
        value = self.delta0 - Fraction(d, n * (m - 1))
        return max(Fraction(0), value)


def min_arld_slack(
    code_or_words,
    k: int,
    delta0: Fraction,
    subset_cap: int = DEFAULT_SUBSET_CAP,
    threads: int = 1,
    description: str = "",
) -> ARLDCertificate:
    """Exact worst-case slack over all subsets H with |H| <= k and all centers.

    The center quantifier collapses to the coordinate-wise plurality; the
    subset quantifier is enumerated exhaustively.
    """
    words, n = resolve_words(code_or_words)
    delta0 = Fraction(delta0)
    t0 = time.perf_counter()
    if k < 2 or len(words) < 2:
        return ARLDCertificate(
            delta0, k, Fraction(0), n, (), (), 0, 0,
            time.perf_counter() - t0, description,
        )
    sym, _ = intern_symbols(words)
    witnesses = min_disagreement_by_size(sym, k, subset_cap, threads)
    eps, worst = epsilon_min(witnesses, n, delta0)
    center, contribs = plurality_center([words[i] for i in worst.indices])
    return ARLDCertificate(
        delta0=delta0,
        k=k,
        eps_min=eps,
        n=n,
        witness_indices=tuple(worst.indices),
        witness_center=center,
        witness_disagreements=worst.disagreement_count,
        subsets_examined=subset_search_count(len(words), k),
        runtime_seconds=time.perf_counter() - t0,
        code_description=description,
        min_disagreements_by_size={
            m: w.disagreement_count for m, w in witnesses.items()
        },
    )


def exhaustive_arld_check(
    code_or_words,
    k: int,
    delta0: Fraction,
    eps: Fraction,
    erasures: bool = True,
    alphabet=None,
    center_cap: int = 1 << 22,
):
    """Literal quantifier sweep of the average-radius definition.

    Independent oracle: enumerates every subset H (2 <= |H| <= k), every
    erasure set S (when erasures=True) and every center over the non-erased
    coordinates.  Returns (True, None) or (False, witness dict).
    """
    words, n = resolve_words(code_or_words)
    delta0, eps = Fraction(delta0), Fraction(eps)
    if alphabet is None:
        if isinstance(code_or_words, LinearCode):
            alphabet = list(range(code_or_words.field.q))
        else:
            alphabet = sorted({s for w in words for s in w})
    index = {s: i for i, s in enumerate(alphabet)}
    sym = np.array([[index[s] for s in w] for w in words], dtype=np.int64)
    Q = len(alphabet)
    erasure_sets = (
        [frozenset(S) for r in range(n + 1) for S in combinations(range(n), r)]
        if erasures
        else [frozenset()]
    )
    for m in range(2, min(k, len(words)) + 1):
        for idx in combinations(range(len(words)), m):
            rows = sym[list(idx)]
            for S in erasure_sets:
                keep = [i for i in range(n) if i not in S]
                s_frac = Fraction(len(S), n)
                bound = (m - 1) * (delta0 - s_frac - eps)
                if not keep:
                    if Fraction(0) < bound:
                        witness = _witness(words, idx, [ERASED] * n, Fraction(0), bound)
                        return False, witness
                    continue
                t = len(keep)
                if Q**t > center_cap:
                    raise EnumerationTooLarge(
                        f"{Q}^{t} centers exceed cap {center_cap}"
                    )
                centers = _all_tuples(Q, t)
                restricted = rows[:, keep]  # (m, t)
                d_counts = (centers[:, None, :] != restricted[None, :, :]).sum(
                    axis=(1, 2)
                )
                j = int(d_counts.argmin())
                if Fraction(int(d_counts[j]), n) < bound:
                    g = [ERASED] * n
                    for pos, c in zip(keep, centers[j]):
                        g[pos] = alphabet[int(c)]
                    witness = _witness(
                        words, idx, g, Fraction(int(d_counts[j]), n), bound
                    )
                    return False, witness
    return True, None


def _all_tuples(Q: int, t: int) -> np.ndarray:
    grids = np.indices((Q,) * t)
    return grids.reshape(t, -1).T.copy()


def _witness(words, idx, center, lhs, bound):
    return {
        "subset_indices": tuple(idx),
        "subset": [words[i] for i in idx],
        "center": tuple(center),
        "lhs": lhs,
        "rhs": bound,
    }


def sample_random_linear_code(
    field: Field, length: int, dim: int, rng, max_attempts: int = 100
) -> LinearCode:
    """Uniform full-rank generator matrix; deterministic under the given rng."""
    if isinstance(rng, (int, np.integer)):
        rng = np.random.default_rng(int(rng))
    from .codes import rank as mat_rank

    for _ in range(max_attempts):
        gen = rng.integers(0, field.q, size=(dim, length))
        rows = [[int(x) for x in row] for row in gen]
        if mat_rank(field, rows) == dim:
            return LinearCode(field, rows)
    raise RankFailure(f"no full-rank sample in {max_attempts} attempts")


def search_inner_code(
    field: Field,
    length: int,
    dim: int,
    k: int,
    delta0: Fraction,
    eps_target: Fraction,
    seed: int,
    max_tries: int = 50,
    subset_cap: int = DEFAULT_SUBSET_CAP,
    threads: int = 1,
):
    """Rejection-sample random linear codes until one certifies eps_min <= target.

    Each try uses a seed derived from (seed, try index), so the search is
    reproducible and could be parallelized by try index.
    """
    delta0, eps_target = Fraction(delta0), Fraction(eps_target)
    for t in range(max_tries):
        rng = np.random.default_rng(derive_seed(seed, "inner-search", t))
        code = sample_random_linear_code(field, length, dim, rng)
        cert = min_arld_slack(
            code, k, delta0, subset_cap, threads,
            description=f"random[{length},{dim}]_q{field.q} try {t}",
        )
        if cert.eps_min <= eps_target:
            return code, cert
    raise SearchExhausted(f"no code with eps_min <= {eps_target} in {max_tries} tries")


class BlockCode:
    """Enumerable code over an arbitrary (hashable) symbol alphabet."""

    def __init__(self, codewords):
        self.codewords = [tuple(w) for w in codewords]
        self.n = len(self.codewords[0])

    def min_distance(self) -> Fraction:
        """Minimum pairwise distance by direct enumeration over all pairs."""
        return pairwise_min_distance(self.codewords)

    def __len__(self) -> int:
        return len(self.codewords)


class FoldedRSCode:
    """
    Folded Reed-Solomon code: symbol j is the b-tuple of evaluations of the
    message polynomial at alpha_j, gamma*alpha_j, ..., gamma^{b-1}*alpha_j.

    Parameters
    ----------
    field : Field
    b : int
        Fold parameter.
    n : int
        Number of folded symbols.
    rho : Fraction
        Rate; message polynomials have degree < rho*b*n.
    alphas : tuple of int
        Evaluation anchors, one per folded symbol.
    """

    def __init__(self, field: Field, b: int, n: int, rho: Fraction, alphas):
        if field.q < b * n:
            raise FieldTooSmall(f"q={field.q} < bn={b * n}")
        rho = Fraction(rho)
        dim = rho * b * n
        if dim.denominator != 1 or dim < 1:
            raise ValueError(f"rho*b*n = {dim} must be a positive integer")
        self.field = field
        self.b = b
        self.n = n
        self.rho = rho
        self.dim = int(dim)
        self.gamma = multiplicative_generator(field)
        self.alphas = tuple(int(a) for a in alphas)
        if len(self.alphas) != n:
            raise ValueError("need one evaluation anchor per folded symbol")
        points = {
            field.mul(field.pow(self.gamma, i), a)
            for i in range(b)
            for a in self.alphas
        }
        if len(points) != b * n:
            raise NotAppropriate("evaluation points {gamma^i alpha_j} collide")

    def _eval(self, coeffs, x: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def encode(self, msg) -> tuple[tuple[int, ...], ...]:
        msg = list(msg)
        if len(msg) != self.dim:
            raise ValueError(f"message length {len(msg)} != {self.dim}")
        F = self.field
        out = []
        for a in self.alphas:
            x = a
            tup = []
            for _ in range(self.b):
                tup.append(self._eval(msg, x))
                x = F.mul(x, self.gamma)
            out.append(tuple(tup))
        return tuple(out)

    def codewords(self) -> list[tuple]:
        return [self.encode(m) for m in product(range(self.field.q), repeat=self.dim)]

    def as_block_code(self) -> BlockCode:
        """Block view over the folded alphabet F_q^b; feeds the ARLD verifiers."""
        return BlockCode(self.codewords())


def make_folded_rs(
    field: Field, b: int, n: int, rho: Fraction, alphas=None
) -> FoldedRSCode:
    """Construct an appropriate FRS code; auto mode picks alpha_j = gamma^{j*b}.

    Appropriateness (all bn evaluation points distinct) is always checked,
    never assumed.
    """
    if alphas is None:
        gamma = multiplicative_generator(field)
        alphas = [field.pow(gamma, j * b) for j in range(n)]
    return FoldedRSCode(field, b, n, Fraction(rho), alphas)


def frs_as_linear_code(frs: FoldedRSCode) -> BlockCode:
    return frs.as_block_code()
