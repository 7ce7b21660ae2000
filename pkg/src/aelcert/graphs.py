"""
d-regular balanced bipartite graphs with a fixed edge ordering and a
measured normalized second singular value.

The edge ordering is the one induced by the left adjacency lists: edge id
e = l*d + i is the i-th edge of left vertex l.  Right orderings are derived
by sorting each right vertex's incident edge ids, which makes the three
bijections E <-> L x [d] <-> R x [d] mutually consistent by construction.

All downstream inequality checks consume lambda_hat + 1e-6 as a conservative
upper bound so floating-point SVD can never produce a false pass.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .errors import (
    ConvergenceFailure,
    LengthMismatch,
    ParallelEdgeExhaustion,
    TargetUnreachable,
)

LAMBDA_SAFETY = Fraction(1, 10**6)
_DENSE_SVD_LIMIT = 512


class BipartiteGraph:
    """A d-regular bipartite graph on n + n vertices with fixed edge ordering."""

    def __init__(self, n: int, d: int, left_adj, seed=None):
        self.n = n
        self.d = d
        self.left_adj = [list(map(int, row)) for row in left_adj]
        self.seed = seed
        if len(self.left_adj) != n or any(len(r) != d for r in self.left_adj):
            raise ValueError("left adjacency must be n rows of d right vertices")
        degrees = [0] * n
        for row in self.left_adj:
            if len(set(row)) != d:
                raise ValueError("parallel edges in left adjacency")
            for r in row:
                degrees[r] += 1
        if any(deg != d for deg in degrees):
            raise ValueError("graph is not right-regular")
        # right_edges[r] = sorted incident edge ids; position j is the j-th
        # edge of r under the derived right ordering
        self.right_edges = [[] for _ in range(n)]
        for l in range(n):
            for i, r in enumerate(self.left_adj[l]):
                self.right_edges[r].append(l * d + i)
        for edges in self.right_edges:
            edges.sort()
        self._edge_right_pos = {}
        for r, edges in enumerate(self.right_edges):
            for j, e in enumerate(edges):
                self._edge_right_pos[e] = (r, j)
        self.lam = second_singular_value(self)

    # -- edge bijections ---------------------------------------------------

    @property
    def num_edges(self) -> int:
        return self.n * self.d

    def left_edge(self, l: int, i: int) -> int:
        """Edge id of the i-th edge of left vertex l."""
        return l * self.d + i

    def edge_left(self, e: int) -> tuple[int, int]:
        return divmod(e, self.d)

    def right_edge(self, r: int, j: int) -> int:
        """Edge id of the j-th edge of right vertex r."""
        return self.right_edges[r][j]

    def edge_right(self, e: int) -> tuple[int, int]:
        return self._edge_right_pos[e]

    def edge_endpoints(self, e: int) -> tuple[int, int]:
        l, i = self.edge_left(e)
        return l, self.left_adj[l][i]

    def biadjacency(self) -> np.ndarray:
        A = np.zeros((self.n, self.n))
        for l, row in enumerate(self.left_adj):
            for r in row:
                A[l, r] = 1.0
        return A

    @property
    def lam_bound(self) -> Fraction:
        """Conservative rational upper bound on the true lambda."""
        return Fraction(self.lam).limit_denominator(10**12) + LAMBDA_SAFETY

    def __repr__(self) -> str:
        return f"BipartiteGraph(n={self.n}, d={self.d}, lam={self.lam:.6f})"


def complete_bipartite(n: int) -> BipartiteGraph:
    """K_{n,n}: the lambda = 0 special case (d = n)."""
    return BipartiteGraph(n, n, [list(range(n)) for _ in range(n)])


def second_singular_value(graph: BipartiteGraph) -> float:
    """sigma_2 of the normalized biadjacency A/d, absolute error <= 1e-9."""
    n = graph.n
    A = graph.biadjacency() / graph.d
    if n <= _DENSE_SVD_LIMIT:
        s = np.linalg.svd(A, compute_uv=False)
        return float(s[1]) if n > 1 else 0.0
    # power iteration on A A^T - J/n (deflates the top singular pair, whose
    # singular vectors are uniform for a regular graph)
    B = A @ A.T - np.ones((n, n)) / n
    rng = np.random.default_rng(0)
    v = rng.standard_normal(n)
    v /= np.linalg.norm(v)
    lam_prev = 0.0
    for _ in range(100000):
        w = B @ v
        norm = np.linalg.norm(w)
        if norm == 0:
            return 0.0
        v = w / norm
        lam = float(v @ (B @ v))
        if abs(lam - lam_prev) < 1e-13:
            return float(np.sqrt(max(lam, 0.0)))
        lam_prev = lam
    raise ConvergenceFailure("power iteration did not converge")


def random_regular_bipartite(
    n: int,
    d: int,
    seed: int,
    lam_target: float,
    max_tries: int = 20,
    matching_attempts: int = 50000,
) -> BipartiteGraph:
    """Union of d uniformly random perfect matchings, spectrally verified.

    Matchings creating parallel edges are rejected and resampled; the whole
    graph is rejected unless its measured lambda is <= lam_target.
    """
    if d > n:
        raise ValueError("d must be <= n")
    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        cols: list[np.ndarray] = []
        for _ in range(d):
            for _ in range(matching_attempts):
                perm = rng.permutation(n)
                if all(not np.any(perm == c) for c in cols):
                    cols.append(perm)
                    break
            else:
                raise ParallelEdgeExhaustion(
                    f"could not extend to {d} disjoint matchings"
                )
        left_adj = [[int(cols[i][l]) for i in range(d)] for l in range(n)]
        graph = BipartiteGraph(n, d, left_adj, seed=seed)
        if graph.lam <= lam_target:
            return graph
    raise TargetUnreachable(f"no graph with lambda <= {lam_target} in {max_tries} tries")


def verify_eml(graph: BipartiteGraph, f, g) -> tuple[Fraction, float, bool]:
    """Expander mixing lemma check with an exact-arithmetic left-hand side.

    f and g are rational-valued vectors on L and R.  Returns
    (deviation, float bound, pass).  The comparison squares both sides so it
    stays in exact rationals; norms are normalized second moments E[x^2].
    """
    n, d = graph.n, graph.d
    if len(f) != n or len(g) != n:
        raise LengthMismatch("f and g must have length n")
    f = [Fraction(x) for x in f]
    g = [Fraction(x) for x in g]
    edge_sum = Fraction(0)
    for l in range(n):
        fl = f[l]
        for r in graph.left_adj[l]:
            edge_sum += fl * g[r]
    lhs = abs(edge_sum / (n * d) - (sum(f) / n) * (sum(g) / n))
    ef2 = sum(x * x for x in f) / n
    eg2 = sum(x * x for x in g) / n
    lam = graph.lam_bound
    ok = lhs * lhs <= lam * lam * ef2 * eg2
    import math

    bound = float(lam) * math.sqrt(float(ef2) * float(eg2))
    return lhs, bound, ok


def verify_eml_sets(graph: BipartiteGraph, S, T) -> tuple[int, Fraction, bool]:
    """Set form of the mixing lemma: |E(S,T) - d|S||T|/n| <= lam*d*sqrt(|S||T|)."""
    S, T = set(S), set(T)
    n, d = graph.n, graph.d
    e_st = sum(1 for l in S for r in graph.left_adj[l] if r in T)
    dev = abs(Fraction(e_st) - Fraction(d * len(S) * len(T), n))
    lam = graph.lam_bound
    ok = dev * dev <= lam * lam * d * d * len(S) * len(T)
    return e_st, dev, ok
