"""
Reed-Solomon outer code with a Berlekamp-Welch unique decoder.

At the enumerable block lengths this package targets, the linear-algebra
decoder is exact and corrects every error pattern of weight up to
floor((n - k) / 2).
"""

from __future__ import annotations

from fractions import Fraction

from .codes import LinearCode
from .errors import FieldTooSmall, RadiusTooLarge
from .gf import Field


class RSOuterCode(LinearCode):
    """Evaluation-encoded RS code over distinct points."""

    def __init__(self, field: Field, n: int, dim: int, points=None):
        if points is None:
            if field.q < n:
                raise FieldTooSmall(f"q={field.q} < n={n}")
            points = list(range(n))
        points = [int(a) for a in points]
        if len(set(points)) != len(points) or len(points) != n:
            raise ValueError("evaluation points must be n distinct field elements")
        generator = [
            [field.pow(a, i) for a in points] for i in range(dim)
        ]
        super().__init__(field, generator)
        self.points = tuple(points)

    @property
    def unique_decoding_radius(self) -> int:
        """Maximum correctable error count floor((n - dim) / 2)."""
        return (self.n - self.dim) // 2

    @property
    def delta_dec(self) -> Fraction:
        return Fraction(self.unique_decoding_radius, self.n)


# -- polynomial helpers over a Field ------------------------------------------


def poly_trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_eval(F: Field, p: list[int], x: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = F.add(F.mul(acc, x), c)
    return acc


def poly_divmod(F: Field, num: list[int], den: list[int]):
    num = list(num)
    den = poly_trim(list(den))
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [0] * max(len(num) - len(den) + 1, 0)
    inv_lead = F.inv(den[-1])
    for i in range(len(num) - len(den), -1, -1):
        c = F.mul(num[i + len(den) - 1], inv_lead)
        if c == 0:
            continue
        quot[i] = c
        for j, d in enumerate(den):
            num[i + j] = F.sub(num[i + j], F.mul(c, d))
    return poly_trim(quot), poly_trim(num)


def rs_unique_decode(code: RSOuterCode, word, radius: int | None = None):
    """Berlekamp-Welch decoding within the given error-count radius.

    Returns the unique codeword within `radius` errors if one exists, else
    None.  Never returns a codeword outside the radius.
    """
    F = code.field
    n, k = code.n, code.dim
    word = [int(y) for y in word]
    if radius is None:
        radius = code.unique_decoding_radius
    if radius > code.unique_decoding_radius:
        raise RadiusTooLarge(
            f"radius {radius} > unique decoding radius {code.unique_decoding_radius}"
        )
    t = radius
    if t == 0:
        return tuple(word) if code.contains(word) else None
    # Unknowns: E = e_0..e_{t-1} (monic x^t implied), Q = q_0..q_{t+k-1}.
    # Equation per point: Q(a_i) - y_i E(a_i) = y_i a_i^t.
    n_unknowns = t + (t + k)
    rows, rhs = [], []
    for a, y in zip(code.points, word):
        pw = [1]
        for _ in range(t + k):
            pw.append(F.mul(pw[-1], a))
        row = [F.neg(F.mul(y, pw[j])) for j in range(t)]  # E coefficients
        row += [pw[j] for j in range(t + k)]  # Q coefficients
        rows.append(row)
        rhs.append(F.mul(y, pw[t]))
    sol = _solve_affine(F, rows, rhs, n_unknowns)
    if sol is None:
        return None
    E = sol[:t] + [1]
    Q = poly_trim(sol[t:])
    if not Q:
        f = []
    else:
        f, rem = poly_divmod(F, Q, E)
        if rem:
            return None
    if len(f) > k:
        return None
    decoded = tuple(poly_eval(F, f, a) for a in code.points)
    errors = sum(1 for a, b in zip(decoded, word) if a != b)
    if errors > radius or not code.contains(decoded):
        return None
    return decoded


def _solve_affine(F: Field, rows, rhs, n_unknowns):
    """Gaussian elimination for A x = b; free variables set to 0."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    nrows = len(aug)
    pivots = []
    r = 0
    for c in range(n_unknowns):
        pivot = next((i for i in range(r, nrows) if aug[i][c] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = F.inv(aug[r][c])
        aug[r] = [F.mul(inv, x) for x in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][c] != 0:
                fct = aug[i][c]
                aug[i] = [F.sub(x, F.mul(fct, y)) for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if aug[i][-1] != 0:
            return None  # inconsistent
    x = [0] * n_unknowns
    for row, p in zip(aug[:r], pivots):
        x[p] = row[-1]
    return x
