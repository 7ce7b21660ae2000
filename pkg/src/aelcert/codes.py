"""
Generic linear codes via generator matrices.

Distances are exact `fractions.Fraction` values (integer counts over the
block length); no floating point enters any code-distance path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

import numpy as np

from .errors import (
    DimensionMismatch,
    EmptyResidual,
    EmptySet,
    EnumerationTooLarge,
    FieldMismatch,
    LengthMismatch,
)
from .gf import Field

DEFAULT_ENUMERATION_CAP = 1 << 24

# Erasure marker used inside ErasedWord.symbols
ERASED = None


def rref(field: Field, rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over `field`.

    Returns (reduced nonzero rows, pivot column indices).
    """
    mat = [list(r) for r in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = field.inv(mat[r][c])
        mat[r] = [field.mul(inv, x) for x in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return mat[:r], pivots


def rank(field: Field, rows: list[list[int]]) -> int:
    return len(rref(field, rows)[0])


def solve(field: Field, rows: list[list[int]], target: list[int]) -> list[int] | None:
    """Solve x @ rows = target; returns one solution or None.

    Used for codeword-membership checks (recover the message coordinates).
    """
    # transpose to a standard linear system A y = b with A columns = rows
    nrows = len(rows)
    ncols = len(rows[0])
    aug = [[rows[j][i] for j in range(nrows)] + [target[i]] for i in range(ncols)]
    red, pivots = rref(field, aug)
    x = [0] * nrows
    for row, p in zip(red, pivots):
        if p == nrows:  # pivot in the constant column: inconsistent
            return None
        x[p] = row[-1]
    # verify (guards against free-variable inconsistencies)
    for i in range(ncols):
        acc = 0
        for j in range(nrows):
            acc = field.add(acc, field.mul(x[j], rows[j][i]))
        if acc != target[i]:
            return None
    return x


class LinearCode:
    """
    A linear code given by a full-row-rank generator matrix.

    Parameters
    ----------
    field : Field
    generator : sequence of rows (each a sequence of int representatives)
    """

    def __init__(self, field: Field, generator):
        self.field = field
        self.generator = tuple(tuple(int(x) for x in row) for row in generator)
        if not self.generator:
            raise DimensionMismatch("generator must have at least one row")
        self.dim = len(self.generator)
        self.n = len(self.generator[0])
        if any(len(row) != self.n for row in self.generator):
            raise DimensionMismatch("ragged generator matrix")
        if any(x >= field.q or x < 0 for row in self.generator for x in row):
            raise FieldMismatch("generator entry outside field")
        if rank(field, [list(r) for r in self.generator]) != self.dim:
            raise DimensionMismatch("generator matrix is not full row rank")
        self._codewords: list[tuple[int, ...]] | None = None

    @property
    def rate(self) -> Fraction:
        return Fraction(self.dim, self.n)

    @property
    def size(self) -> int:
        return self.field.q**self.dim

    def encode(self, msg) -> tuple[int, ...]:
        msg = list(msg)
        if len(msg) != self.dim:
            raise DimensionMismatch(f"message length {len(msg)} != dim {self.dim}")
        if any(x >= self.field.q or x < 0 for x in msg):
            raise FieldMismatch("message symbol outside field")
        F = self.field
        out = [0] * self.n
        for coeff, row in zip(msg, self.generator):
            if coeff == 0:
                continue
            for i, g in enumerate(row):
                out[i] = F.add(out[i], F.mul(coeff, g))
        return tuple(out)

    def messages(self):
        """All q^dim messages in lexicographic order."""
        return product(range(self.field.q), repeat=self.dim)

    def enumerate_codewords(self, cap: int = DEFAULT_ENUMERATION_CAP) -> list[tuple[int, ...]]:
        if self.size > cap:
            raise EnumerationTooLarge(f"{self.size} codewords exceed cap {cap}")
        if self._codewords is None:
            self._codewords = [self.encode(m) for m in self.messages()]
        return self._codewords

    def codeword_matrix(self, cap: int = DEFAULT_ENUMERATION_CAP) -> np.ndarray:
        return np.array(self.enumerate_codewords(cap), dtype=np.int64)

    def contains(self, word) -> bool:
        word = list(word)
        if len(word) != self.n:
            raise LengthMismatch(f"word length {len(word)} != n {self.n}")
        return solve(self.field, [list(r) for r in self.generator], word) is not None

    def min_distance(self, cap: int = DEFAULT_ENUMERATION_CAP) -> Fraction:
        """Minimum fractional distance; by linearity the minimum nonzero weight."""
        best = self.n
        for cw in self.enumerate_codewords(cap):
            w = sum(1 for x in cw if x != 0)
            if 0 < w < best:
                best = w
        return Fraction(best, self.n)

    def puncture(self, coords) -> "LinearCode":
        """Remove the coordinate set `coords`; dimension recomputed by rank."""
        remove = set(coords)
        keep = [i for i in range(self.n) if i not in remove]
        if not keep:
            raise EmptyResidual("puncturing removed every coordinate")
        rows = [[row[i] for i in keep] for row in self.generator]
        reduced, _ = rref(self.field, rows)
        if not reduced:
            # all-zero residual: dimension collapsed entirely; keep a zero row
            # is not a valid generator, so report via EmptyResidual
            raise EmptyResidual("punctured code has dimension 0")
        return LinearCode(self.field, reduced)

    def __repr__(self) -> str:
        return f"LinearCode(q={self.field.q}, n={self.n}, dim={self.dim})"


@dataclass(frozen=True)
class ErasedWord:
    """A received word over the code alphabet extended with the erasure mark.

    `symbols` entries are either alphabet symbols or ERASED (None).
    """

    symbols: tuple

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))

    @property
    def n(self) -> int:
        return len(self.symbols)

    @property
    def erasure_count(self) -> int:
        return sum(1 for s in self.symbols if s is ERASED)

    @property
    def s(self) -> Fraction:
        """Erasure fraction."""
        return Fraction(self.erasure_count, self.n)


def dist_with_erasures(erased: ErasedWord, word) -> Fraction:
    """Disagreements on non-erased coordinates, over the full length n."""
    word = tuple(word)
    if len(word) != erased.n:
        raise LengthMismatch(f"{len(word)} != {erased.n}")
    hits = sum(1 for g, h in zip(erased.symbols, word) if g is not ERASED and g != h)
    return Fraction(hits, erased.n)


def hamming_distance(a, b) -> Fraction:
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise LengthMismatch(f"{len(a)} != {len(b)}")
    return Fraction(sum(1 for x, y in zip(a, b) if x != y), len(a))


def pairwise_min_distance(codewords) -> Fraction:
    """Minimum pairwise fractional distance by direct enumeration.

    Independent of the weight-based LinearCode.min_distance path.
    """
    words = list(codewords)
    best = None
    for a, b in combinations(words, 2):
        d = hamming_distance(a, b)
        if best is None or d < best:
            best = d
    if best is None:
        raise EmptySet("need at least two codewords")
    return best
