"""
Exact arithmetic in small finite fields GF(p^m).

Elements are canonical integer representatives in [0, q): the coefficient
vector of the residue polynomial, read low-to-high in base p.  For GF(2^m)
this is the usual bit encoding.  Fields are immutable after construction
and safe to share across threads.
"""

from __future__ import annotations

from .errors import DivisionByZero, FieldTooLarge, NonPrimeCharacteristic

MAX_FIELD_ORDER = 1 << 20
_TABLE_LIMIT = 1 << 16  # exp/log tables only for q up to this


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class Field:
    """
    GF(p^m) with a fixed monic irreducible modulus polynomial.

    Parameters
    ----------
    p : int
        Prime characteristic.
    m : int
        Extension degree (>= 1).
    modulus : tuple of int
        Modulus coefficients low-to-high, length m + 1, monic.  For m = 1
        the modulus is (0, 1), i.e. x, and arithmetic is plain mod p.
    """

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = tuple(modulus)
        if len(self.modulus) != m + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree m")
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        if self.q <= _TABLE_LIMIT:
            self._build_tables()

    # -- encoding ---------------------------------------------------------

    def to_coeffs(self, a: int) -> list[int]:
        """Integer representative -> coefficient vector (length m, low-to-high)."""
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return out

    def from_coeffs(self, coeffs) -> int:
        a = 0
        for c in reversed(list(coeffs)):
            a = a * self.p + (c % self.p)
        return a

    # -- arithmetic on representatives -------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        ca, cb = self.to_coeffs(a), self.to_coeffs(b)
        return self.from_coeffs((x + y) % self.p for x, y in zip(ca, cb))

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return self.from_coeffs((-x) % self.p for x in self.to_coeffs(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _mul_poly(self, a: int, b: int) -> int:
        """Schoolbook polynomial product reduced mod the modulus."""
        p, m = self.p, self.m
        ca, cb = self.to_coeffs(a), self.to_coeffs(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(ca):
            if x == 0:
                continue
            for j, y in enumerate(cb):
                prod[i + j] = (prod[i + j] + x * y) % p
        # reduce: x^m = -(modulus[:-1])
        red = [(-c) % p for c in self.modulus[:m]]
        for deg in range(2 * m - 2, m - 1, -1):
            c = prod[deg]
            if c == 0:
                continue
            prod[deg] = 0
            for j, r in enumerate(red):
                prod[deg - m + j] = (prod[deg - m + j] + c * r) % p
        return self.from_coeffs(prod[:m])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return self._mul_poly(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("0 has no multiplicative inverse")
        if self._exp is not None:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e > 0 else 1
        e %= self.q - 1
        result = 1
        base = a
        while e:
            if e & 1:
                result = self._mul_poly(result, base) if self._exp is None else self.mul(result, base)
            base = self._mul_poly(base, base) if self._exp is None else self.mul(base, base)
            e >>= 1
        return result

    def element_order(self, a: int) -> int:
        """Multiplicative order of a nonzero element, by exhaustive powering."""
        if a == 0:
            raise DivisionByZero("0 has no multiplicative order")
        x, k = a, 1
        while x != 1:
            x = self.mul(x, a)
            k += 1
        return k

    def _build_tables(self) -> None:
        g = self._find_generator_poly()
        exp = [1] * (self.q - 1)
        log = [0] * self.q
        x = 1
        for i in range(self.q - 1):
            exp[i] = x
            log[x] = i
            x = self._mul_poly(x, g)
        if x != 1:
            raise ValueError("modulus is not irreducible: generator order wrong")
        self._exp, self._log = exp, log
        self._generator = g

    def _find_generator_poly(self) -> int:
        """Smallest representative of multiplicative order q - 1 (table-free)."""
        target = self.q - 1
        for g in range(2 if self.q > 2 else 1, self.q):
            x, k = g, 1
            while x != 1 and k <= target:
                x = self._mul_poly(x, g)
                k += 1
            if k == target and x == 1:
                return g
            if self.q == 2 and g == 1:
                return 1
        if self.q == 2:
            return 1
        raise ValueError("no multiplicative generator found; modulus not irreducible?")

    # -- misc ---------------------------------------------------------------

    def elements(self) -> range:
        return range(self.q)

    def record(self) -> dict:
        """Serializable description, embedded in code files."""
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Field)
            and self.p == other.p
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        return f"Field(p={self.p}, m={self.m}, q={self.q})"


def _poly_is_irreducible(p: int, coeffs: tuple[int, ...]) -> bool:
    """Exhaustive trial division of a monic polynomial over GF(p).

    Divides by every monic polynomial of degree 1..deg//2; feasible for the
    field sizes this package supports.
    """
    deg = len(coeffs) - 1
    if deg == 1:
        return True
    if coeffs[0] == 0:  # root at 0
        return False

    def divides(divisor: list[int]) -> bool:
        rem = list(coeffs)
        ddeg = len(divisor) - 1
        for top in range(deg, ddeg - 1, -1):
            c = rem[top]
            if c == 0:
                continue
            for j in range(ddeg + 1):
                rem[top - ddeg + j] = (rem[top - ddeg + j] - c * divisor[j]) % p
        return all(c == 0 for c in rem[:ddeg])

    for ddeg in range(1, deg // 2 + 1):
        for enc in range(p**ddeg):
            divisor = []
            e = enc
            for _ in range(ddeg):
                divisor.append(e % p)
                e //= p
            divisor.append(1)  # monic
            if divides(divisor):
                return False
    return True


def make_field(p: int, m: int = 1) -> Field:
    """
    Build GF(p^m) with the lexicographically smallest monic irreducible modulus.

    The scan is over the integer encoding of the lower coefficients
    (low-to-high, base p), so the result is deterministic and reproducible.
    """
    if not _is_prime(p):
        raise NonPrimeCharacteristic(f"{p} is not prime")
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    if p**m > MAX_FIELD_ORDER:
        raise FieldTooLarge(f"p^m = {p**m} exceeds cap {MAX_FIELD_ORDER}")
    if m == 1:
        return Field(p, 1, (0, 1))
    for enc in range(p**m):
        lower = []
        e = enc
        for _ in range(m):
            lower.append(e % p)
            e //= p
        coeffs = tuple(lower) + (1,)
        if _poly_is_irreducible(p, coeffs):
            return Field(p, m, coeffs)
    raise AssertionError("unreachable: irreducible polynomials exist for every degree")


def multiplicative_generator(field: Field) -> int:
    """Smallest element of multiplicative order q - 1, verified exhaustively."""
    if field.q == 2:
        return 1
    for g in range(2, field.q):
        if field.element_order(g) == field.q - 1:
            return g
    raise AssertionError("unreachable: F_q^* is cyclic")
