"""Finite field arithmetic on plain integers.

Two field families are supported: prime fields GF(p) and the byte field
GF(2^8).  Elements are ordinary Python ints in ``range(order)``; the field
object only carries the arithmetic.
"""

from __future__ import annotations

from .errors import ZeroInverse

GF256_DEFAULT_POLY = 0x11D  # x^8 + x^4 + x^3 + x^2 + 1


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    f = 3
    while f * f <= q:
        if q % f == 0:
            return False
        f += 2
    return True


def _gf2_poly_mod(a: int, b: int) -> int:
    """Remainder of carry-less division of polynomial a by polynomial b over GF(2)."""
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def _is_irreducible_deg8(poly: int) -> bool:
    """Exhaustively test a degree-8 polynomial over GF(2) for irreducibility.

    A reducible degree-8 polynomial has a factor of degree 1..4, so trying
    every candidate divisor in that range is conclusive.
    """
    if poly.bit_length() != 9:
        return False
    for deg in range(1, 5):
        for low in range(1 << deg):
            divisor = (1 << deg) | low
            if _gf2_poly_mod(poly, divisor) == 0:
                return False
    return True


def gf256_mul_bitwise(a: int, b: int, poly: int = GF256_DEFAULT_POLY) -> int:
    """Shift-and-xor product in GF(2^8), used as the oracle for the tables."""
    acc = 0
    while b:
        if b & 1:
            acc ^= a
        b >>= 1
        a <<= 1
        if a & 0x100:
            a ^= poly
    return acc


class PrimeField:
    """GF(p) for a prime p < 2^31."""

    kind = "prime"

    def __init__(self, q: int):
        if q >= 1 << 31:
            raise ValueError(f"modulus {q} too large (must be < 2^31)")
        if not _is_prime(q):
            raise ValueError(f"modulus {q} is not prime")
        self.q = q
        self.order = q

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.q

    def neg(self, a: int) -> int:
        return -a % self.q

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.q

    def inv(self, a: int) -> int:
        a %= self.q
        if a == 0:
            raise ZeroInverse("0 has no multiplicative inverse")
        return pow(a, self.q - 2, self.q)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return pow(self.inv(a), -e, self.q)
        return pow(a % self.q, e, self.q)

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.q == self.q

    def __hash__(self) -> int:
        return hash(("prime", self.q))

    def __repr__(self) -> str:
        return f"PrimeField({self.q})"


class BinaryField:
    """GF(2^8) with log/antilog tables over a given modulus polynomial.

    Addition is xor.  Multiplication goes through the tables; the table
    contents are generated from the bitwise product, and the two must agree
    everywhere (covered by the test suite).
    """

    kind = "binary8"

    def __init__(self, poly: int = GF256_DEFAULT_POLY):
        if not _is_irreducible_deg8(poly):
            raise ValueError(f"polynomial {poly:#x} is not irreducible of degree 8")
        self.poly = poly
        self.q = 256
        self.order = 256
        self.generator = self._find_generator()
        exp = [0] * 255
        log = [0] * 256
        x = 1
        for i in range(255):
            exp[i] = x
            log[x] = i
            x = gf256_mul_bitwise(x, self.generator, poly)
        self.exp = exp
        self.log = log

    def _find_generator(self) -> int:
        for g in range(2, 256):
            x, period = 1, 0
            while True:
                x = gf256_mul_bitwise(x, g, self.poly)
                period += 1
                if x == 1:
                    break
            if period == 255:
                return g
        raise ValueError(f"no primitive element found for polynomial {self.poly:#x}")

    def add(self, a: int, b: int) -> int:
        return a ^ b

    sub = add

    def neg(self, a: int) -> int:
        return a

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % 255]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroInverse("0 has no multiplicative inverse")
        return self.exp[(255 - self.log[a]) % 255]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroInverse("0 has no multiplicative inverse")
            return 0
        return self.exp[(self.log[a] * e) % 255]

    def __eq__(self, other) -> bool:
        return isinstance(other, BinaryField) and other.poly == self.poly

    def __hash__(self) -> int:
        return hash(("binary8", self.poly))

    def __repr__(self) -> str:
        return f"BinaryField(poly={self.poly:#x})"


def field_of_order(q: int):
    """Field with q elements: GF(2^8) for q=256, GF(q) for prime q."""
    if q == 256:
        return BinaryField()
    return PrimeField(q)
