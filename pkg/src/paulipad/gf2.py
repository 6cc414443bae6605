"""Arithmetic over GF(2)[x] and the binary fields GF(2^r).

Polynomials over GF(2) are bit-packed into nonnegative Python ints:
the polynomial b_k x^k + ... + b_1 x + b_0 is the integer with bit i
equal to b_i (least-significant bit = constant coefficient).  The zero
polynomial is the int 0; every nonzero polynomial is monic.  Addition
is xor.

Field elements of GF(2^r) are ints of degree < r, interpreted as
coefficient vectors over the standard basis e_i = x^i, and are tied to
an irreducible modulus via :class:`GF2Field`.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "poly_degree",
    "poly_mul",
    "poly_divmod",
    "poly_mod",
    "poly_gcd",
    "is_irreducible",
    "find_irreducible",
    "GF2Field",
    "FieldElement",
    "fe_mul",
    "fe_pow",
    "fe_dot",
]


def poly_degree(a):
    """Degree of polynomial a; -1 stands in for the -infinity degree of 0."""
    return a.bit_length() - 1


def poly_mul(a, b):
    """Carry-less product of polynomials a and b."""
    if a < b:
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        b >>= 1
        a <<= 1
    return c


def poly_divmod(a, b):
    """Quotient and remainder of polynomial a divided by nonzero b."""
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    m, n = poly_degree(a), poly_degree(b)
    if m < n:
        return 0, a
    q = 0
    b <<= m - n
    for i in range(m - n, -1, -1):
        q <<= 1
        if a >> (n + i) & 1:
            a ^= b
            q ^= 1
        b >>= 1
    return q, a


def poly_mod(a, f):
    """Remainder of polynomial a modulo nonzero polynomial f."""
    return poly_divmod(a, f)[1]


def poly_gcd(a, b):
    """Greatest common divisor of polynomials a and b, not both zero.

    Over GF(2) every nonzero polynomial is monic, so no normalization
    is needed.
    """
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    while b:
        a, b = b, poly_mod(a, b)
    return a


def _prime_factors(n):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f):
    """Whether f (degree >= 1) is irreducible over GF(2).

    Uses the finite-field criterion: x^(2^r) = x (mod f), and for every
    prime q dividing r = deg f, gcd(x^(2^(r/q)) - x mod f, f) = 1.
    """
    r = poly_degree(f)
    if r < 1:
        raise ValueError("irreducibility is defined for degree >= 1")
    x_mod_f = poly_mod(2, f)
    t = x_mod_f
    for _ in range(r):
        t = poly_mod(poly_mul(t, t), f)
    if t != x_mod_f:
        return False
    for q in _prime_factors(r):
        t = x_mod_f
        for _ in range(r // q):
            t = poly_mod(poly_mul(t, t), f)
        if poly_gcd(t ^ x_mod_f, f) != 1:
            return False
    return True


def find_irreducible(r):
    """Smallest monic irreducible polynomial of degree r, 1 <= r <= 64.

    "Smallest" orders coefficient bit strings as integers, so repeated
    calls (on any machine) return the same modulus; two communicating
    parties can derive it independently.
    """
    if not 1 <= r <= 64:
        raise ValueError("degree out of the supported range 1..64")
    for f in range(1 << r, 1 << (r + 1)):
        if is_irreducible(f):
            return f
    raise AssertionError("unreachable: irreducibles exist for every degree")


class GF2Field:
    """The field GF(2^r) = GF(2)[x] / (modulus), with int-valued elements.

    Elements are ints of degree < r. The raw-int methods (mul, pow, dot)
    are the fast path; :class:`FieldElement` wraps them with a modulus
    compatibility check.
    """

    __slots__ = ("r", "modulus")

    def __init__(self, r, modulus=None):
        if modulus is None:
            modulus = find_irreducible(r)
        if poly_degree(modulus) != r:
            raise ValueError("modulus degree does not match r")
        if not is_irreducible(modulus):
            raise ValueError("modulus is reducible")
        self.r = r
        self.modulus = modulus

    def __eq__(self, other):
        return (
            isinstance(other, GF2Field)
            and self.r == other.r
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.r, self.modulus))

    def __repr__(self):
        return f"GF2Field(r={self.r}, modulus={self.modulus:#x})"

    def element(self, value):
        if not 0 <= value < (1 << self.r):
            raise ValueError("element out of range for this field")
        return FieldElement(value, self)

    def mul(self, a, b):
        return poly_mod(poly_mul(a, b), self.modulus)

    def pow(self, a, j):
        """a^j by square-and-multiply; 0^0 = 1 (empty product)."""
        if j < 0:
            raise ValueError("negative exponents not supported")
        result = 1
        base = a
        while j:
            if j & 1:
                result = self.mul(result, base)
            j >>= 1
            if j:
                base = self.mul(base, base)
        return result

    @staticmethod
    def dot(a, b):
        """Standard GF(2) scalar product of two coefficient vectors."""
        return (a & b).bit_count() & 1


@dataclass(frozen=True)
class FieldElement:
    """An element of GF(2^r), tied to its field context."""

    value: int
    field: GF2Field

    def __post_init__(self):
        if not 0 <= self.value < (1 << self.field.r):
            raise ValueError("element representation exceeds degree r - 1")


def _same_field(a, b):
    if a.field != b.field:
        raise ValueError("operands belong to different fields")
    return a.field


def fe_mul(a, b):
    """Product of two field elements under a common modulus."""
    f = _same_field(a, b)
    return FieldElement(f.mul(a.value, b.value), f)


def fe_pow(a, j):
    """j-th power of a field element; a^0 = 1 for every a, including 0."""
    return FieldElement(a.field.pow(a.value, j), a.field)


def fe_dot(a, b):
    """GF(2) scalar product of the coefficient vectors of a and b."""
    _same_field(a, b)
    return GF2Field.dot(a.value, b.value)
