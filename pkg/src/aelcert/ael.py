"""
The AEL distance-amplification construction: route inner-code symbols along
the edges of a d-regular bipartite graph and refold them on the right
vertices.

Codewords are represented right-folded: a tuple of n symbols, each a
d-tuple over the inner alphabet.  Fold/unfold helpers move between this
representation and edge labellings.
"""

from __future__ import annotations

from fractions import Fraction

from .codes import ERASED, ErasedWord, LinearCode
from .errors import (
    AmplificationViolation,
    GraphMismatch,
    LengthMismatch,
    NotAnOuterCodeword,
)
from .graphs import BipartiteGraph


class AELCode:
    """
    Composite (G, C_out, C_in, phi) code.

    phi maps outer-alphabet symbols (integer representatives of the outer
    field) to inner codewords.  The default is message-lexicographic: symbol
    sigma maps to the sigma-th inner codeword in lexicographic message order.
    """

    def __init__(
        self,
        graph: BipartiteGraph,
        inner: LinearCode,
        outer: LinearCode,
        phi: list | None = None,
    ):
        if inner.n != graph.d:
            raise GraphMismatch(
                f"inner block length {inner.n} != graph degree {graph.d}"
            )
        if outer.n != graph.n:
            raise GraphMismatch(f"outer length {outer.n} != graph size {graph.n}")
        if outer.field.q != inner.size:
            raise GraphMismatch(
                f"|Sigma_out| = {outer.field.q} != |C_in| = {inner.size}"
            )
        self.graph = graph
        self.inner = inner
        self.outer = outer
        inner_words = inner.enumerate_codewords()
        if phi is None:
            phi = list(inner_words)
        self.phi = [tuple(w) for w in phi]
        if sorted(self.phi) != sorted(inner_words) or len(set(self.phi)) != len(
            self.phi
        ):
            raise ValueError("phi is not a bijection onto the inner codebook")
        self._phi_inv = {w: sigma for sigma, w in enumerate(self.phi)}
        self._codewords: list[tuple] | None = None

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def d(self) -> int:
        return self.graph.d

    @property
    def delta_in(self) -> Fraction:
        return self.inner.min_distance()

    @property
    def delta_out(self) -> Fraction:
        return self.outer.min_distance()

    # -- encoding and views --------------------------------------------------

    def encode(self, outer_codeword) -> tuple:
        """Right-folded AEL codeword from an outer codeword."""
        outer_codeword = tuple(outer_codeword)
        if not self.outer.contains(outer_codeword):
            raise NotAnOuterCodeword(f"{outer_codeword} is not in C_out")
        edge_vals = [0] * self.graph.num_edges
        for l, sigma in enumerate(outer_codeword):
            inner_word = self.phi[sigma]
            for i in range(self.d):
                edge_vals[self.graph.left_edge(l, i)] = inner_word[i]
        return self.fold(edge_vals)

    def encode_message(self, msg) -> tuple:
        return self.encode(self.outer.encode(msg))

    def fold(self, edge_vals) -> tuple:
        """Edge labelling -> right-folded word."""
        return tuple(
            tuple(edge_vals[self.graph.right_edge(r, j)] for j in range(self.d))
            for r in range(self.n)
        )

    def unfold(self, word) -> list:
        """Right-folded word -> edge labelling."""
        edge_vals = [0] * self.graph.num_edges
        for r, tup in enumerate(word):
            for j in range(self.d):
                edge_vals[self.graph.right_edge(r, j)] = tup[j]
        return edge_vals

    def left_views(self, word) -> list[tuple]:
        """The d-tuple seen by each left vertex (in its edge order)."""
        edge_vals = self.unfold(word)
        return [
            tuple(edge_vals[self.graph.left_edge(l, i)] for i in range(self.d))
            for l in range(self.n)
        ]

    def inner_index_to_outer_symbol(self, i: int) -> int:
        """Codebook index (message-lex order of C_in) -> outer symbol via phi^{-1}."""
        return self._phi_inv[self.inner.enumerate_codewords()[i]]

    def outer_symbol_to_inner_index(self, sigma: int) -> int:
        if not hasattr(self, "_inner_index"):
            self._inner_index = {
                w: i for i, w in enumerate(self.inner.enumerate_codewords())
            }
        return self._inner_index[self.phi[sigma]]

    def decode_to_outer(self, word) -> tuple:
        """phi^{-1} applied to every left view; raises KeyError off-codebook."""
        return tuple(self._phi_inv[v] for v in self.left_views(word))

    def enumerate_codewords(self, cap: int = 1 << 24) -> list[tuple]:
        if self._codewords is None:
            self._codewords = [
                self.encode(w) for w in self.outer.enumerate_codewords(cap)
            ]
        return self._codewords

    # -- metrics ---------------------------------------------------------------

    def _check(self, word) -> None:
        if len(word) != self.n or any(len(t) != self.d for t in word if t is not ERASED):
            raise GraphMismatch("word shape does not match the graph")

    def delta_L(self, w1, w2) -> Fraction:
        """Fraction of left vertices whose full d-symbol view differs."""
        self._check(w1)
        self._check(w2)
        v1, v2 = self.left_views(w1), self.left_views(w2)
        return Fraction(sum(1 for a, b in zip(v1, v2) if a != b), self.n)

    def delta_R(self, w1, w2) -> Fraction:
        """Fraction of right vertices whose folded symbol differs."""
        self._check(w1)
        self._check(w2)
        return Fraction(sum(1 for a, b in zip(w1, w2) if a != b), self.n)

    def delta_R_erased(self, erased: ErasedWord, word) -> Fraction:
        """Erased-distance on the right: erased vertices contribute nothing."""
        if erased.n != self.n or len(word) != self.n:
            raise LengthMismatch("length mismatch with graph size")
        hits = sum(
            1 for g, h in zip(erased.symbols, word) if g is not ERASED and g != h
        )
        return Fraction(hits, self.n)

    def rate(self) -> Fraction | float:
        """log_|Sigma| |C_AEL| / n; exact when q_out is a power of q_in."""
        q_in, q_out = self.inner.field.q, self.outer.field.q
        b, power = 0, 1
        while power < q_out:
            power *= q_in
            b += 1
        if power == q_out:
            return Fraction(self.outer.dim * b, self.n * self.d)
        import math

        return self.outer.dim * math.log(q_out) / (self.n * self.d * math.log(q_in))


def ael_rate(code: AELCode) -> Fraction | float:
    r = code.rate()
    assert r >= code.outer.rate * code.inner.rate
    return r


def pair_counting_check(code: AELCode, f, g) -> dict:
    """Re-execute the edge-counting argument behind distance amplification.

    L' is the set of left vertices whose views fully differ; every such
    vertex sends at least delta_in * d differing edges, all landing in the
    differing right set R'.  The mixing lemma upper-bounds E(L', R').
    """
    views_f, views_g = code.left_views(f), code.left_views(g)
    L = [l for l in range(code.n) if views_f[l] != views_g[l]]
    R = {r for r in range(code.n) if f[r] != g[r]}
    e_lr = sum(1 for l in L for r in code.graph.left_adj[l] if r in R)
    lam = code.graph.lam_bound
    d, n = code.d, code.n
    lower_ok = Fraction(e_lr) >= code.delta_in * d * len(L)
    dev = Fraction(e_lr) - Fraction(d * len(L) * len(R), n)
    upper_ok = dev <= 0 or dev * dev <= lam * lam * d * d * len(L) * len(R)
    return {
        "L_size": len(L),
        "R_size": len(R),
        "edges": e_lr,
        "lower_ok": bool(lower_ok),
        "upper_ok": bool(upper_ok),
    }


def verify_distance_amplification(code: AELCode, cap: int = 1 << 24) -> dict:
    """Check Delta_R >= delta_in - lam/Delta_L for every distinct codeword pair.

    Uses the conservative lam_bound.  When the global bound
    delta_in - lam/delta_out is non-positive the report flags vacuity and
    only the per-pair form is asserted.  Raises AmplificationViolation on
    any failing pair.
    """
    words = code.enumerate_codewords(cap)
    views = [code.left_views(w) for w in words]
    delta_in = code.delta_in
    delta_out = code.delta_out
    lam = code.graph.lam_bound
    global_bound = delta_in - lam / delta_out
    n = code.n
    min_dr = None
    pairs = 0
    for i in range(len(words)):
        for j in range(i + 1, len(words)):
            dl = Fraction(
                sum(1 for a, b in zip(views[i], views[j]) if a != b), n
            )
            dr = Fraction(sum(1 for a, b in zip(words[i], words[j]) if a != b), n)
            pairs += 1
            if dl == 0:
                raise AmplificationViolation(f"pair ({i},{j}) has Delta_L = 0")
            if dr < delta_in - lam / dl:
                raise AmplificationViolation(
                    f"pair ({i},{j}): Delta_R={dr} < {delta_in - lam / dl}"
                )
            if global_bound > 0 and dr < global_bound:
                raise AmplificationViolation(
                    f"pair ({i},{j}): Delta_R={dr} below global bound {global_bound}"
                )
            if min_dr is None or dr < min_dr:
                min_dr = dr
    return {
        "pairs_checked": pairs,
        "min_delta_R": min_dr,
        "delta_in": delta_in,
        "delta_out": delta_out,
        "lam_bound": lam,
        "global_bound": global_bound,
        "global_bound_vacuous": global_bound <= 0,
    }
