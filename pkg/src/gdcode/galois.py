"""GF(2^m) arithmetic for code symbols.

Field elements are plain Python ints in ``[0, 2^m)``: bit ``i`` is the
coefficient of ``x^i`` in the polynomial basis.  Addition is XOR,
multiplication is carry-less polynomial product reduced by an irreducible
polynomial of degree ``m``, encoded likewise as an int bitmask with bit ``m``
set.

A :class:`BinaryField` is immutable after construction and safe to share
between threads; every operation is a pure function of its arguments.
"""

from __future__ import annotations

from math import comb

from .errors import ParameterError

MAX_DEGREE = 30

# Table-backed multiplication only below this degree; above it, exp/log
# tables would cost 2^m ints apiece.
_TABLE_MAX = 16

# Per degree: the irreducible polynomial over GF(2) with the fewest terms,
# ties broken by the smallest integer encoding.  Regenerable by brute-force
# search with is_irreducible(); kept fixed so serialized codes stay stable.
CANONICAL_POLYS = {
    1: 0x3,
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x83,
    8: 0x11B,
    9: 0x203,
    10: 0x409,
    11: 0x805,
    12: 0x1009,
    13: 0x201B,
    14: 0x4021,
    15: 0x8003,
    16: 0x1002B,
    17: 0x20009,
    18: 0x40009,
    19: 0x80027,
    20: 0x100009,
    21: 0x200005,
    22: 0x400003,
    23: 0x800021,
    24: 0x100001B,
    25: 0x2000009,
    26: 0x400001B,
    27: 0x8000027,
    28: 0x10000003,
    29: 0x20000005,
    30: 0x40000003,
}


def is_irreducible(poly: int) -> bool:
    """Check irreducibility over GF(2) by trial division.

    Divides by every polynomial of degree 1..deg(poly)//2; a degree-d
    polynomial with no factor of degree <= d//2 is irreducible.
    """
    m = poly.bit_length() - 1
    if m < 1:
        return False
    for d in range(1, m // 2 + 1):
        for q in range(1 << d, 1 << (d + 1)):
            r = poly
            while r.bit_length() - 1 >= d:
                r ^= q << (r.bit_length() - 1 - d)
            if r == 0:
                return False
    return True


def field_for_params(n: int, k: int) -> "BinaryField":
    """Smallest GF(2^m) whose size exceeds C(n-1, k-1).

    That size threshold is what guarantees a generator matrix with the
    target distance exists for an [n, k] support pattern, so it is the
    default field for code synthesis.
    """
    if not (1 <= k <= n):
        raise ParameterError(f"need 1 <= k <= n, got k={k}, n={n}")
    c = comb(n - 1, k - 1)
    if c >= 1 << MAX_DEGREE:
        raise ParameterError(
            f"C({n - 1},{k - 1}) = {c} needs a field larger than 2^{MAX_DEGREE}"
        )
    # smallest m with 2^m > c, i.e. 2^(m-1) <= c < 2^m
    return BinaryField(c.bit_length())


class BinaryField:
    """Arithmetic over GF(2^m).

    Parameters
    ----------
    m : int
        Extension degree, 1 <= m <= 30.
    poly : int, optional
        Irreducible reduction polynomial as a bitmask with bit m set.
        Defaults to the canonical table entry for m.
    """

    def __init__(self, m: int, poly: int | None = None):
        if not (1 <= m <= MAX_DEGREE):
            raise ParameterError(f"extension degree must be in [1, {MAX_DEGREE}], got {m}")
        if poly is None:
            poly = CANONICAL_POLYS[m]
        if poly.bit_length() - 1 != m:
            raise ParameterError(
                f"reduction polynomial 0x{poly:x} does not have degree {m}"
            )
        if not is_irreducible(poly):
            raise ParameterError(f"reduction polynomial 0x{poly:x} is reducible")
        self.m = m
        self.q = 1 << m
        self.poly = poly
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        if m <= _TABLE_MAX:
            self._build_tables()

    def _mul_raw(self, a: int, b: int) -> int:
        """Carry-less product of a and b reduced by the field polynomial."""
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
        for i in range(r.bit_length() - 1, self.m - 1, -1):
            if (r >> i) & 1:
                r ^= self.poly << (i - self.m)
        return r

    def _build_tables(self) -> None:
        # The canonical polynomial is irreducible but not always primitive,
        # so find a multiplicative generator before filling exp/log.
        q1 = self.q - 1
        factors = _prime_factors(q1)
        g = 0
        for cand in range(2, self.q):
            if all(self._pow_raw(cand, q1 // p) != 1 for p in factors):
                g = cand
                break
        if g == 0:  # q == 2: the group is trivial
            g = 1
        exp = [0] * (2 * q1 if q1 else 1)
        log = [0] * self.q
        x = 1
        for i in range(q1):
            exp[i] = x
            log[x] = i
            x = self._mul_raw(x, g)
        for i in range(q1, 2 * q1):
            exp[i] = exp[i - q1]
        self._exp = exp
        self._log = log

    def _pow_raw(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_raw(r, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return r

    # -- public operations ------------------------------------------------

    def check(self, a: int) -> int:
        """Validate that a is a field element and return it."""
        if not (0 <= a < self.q):
            raise ParameterError(f"{a!r} is not an element of GF(2^{self.m})")
        return a

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    sub = add

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self._exp is not None:
            return self._exp[self.q - 1 - self._log[a]]
        return self._pow_raw(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 0 if e else 1
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        return self._pow_raw(a, e)

    def elements(self) -> range:
        return range(self.q)

    def nonzero_elements(self) -> range:
        return range(1, self.q)

    def exp_log_tables(self) -> tuple[list[int], list[int]] | None:
        """Raw exp/log tables for inner-loop use, or None above the table cap."""
        if self._exp is None:
            return None
        return self._exp, self._log

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {"m": self.m, "poly": hex(self.poly)}

    @classmethod
    def from_json(cls, obj: dict) -> "BinaryField":
        return cls(int(obj["m"]), int(obj["poly"], 16))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BinaryField)
            and self.m == other.m
            and self.poly == other.poly
        )

    def __hash__(self) -> int:
        return hash((self.m, self.poly))

    def __repr__(self) -> str:
        return f"BinaryField(m={self.m}, poly=0x{self.poly:x})"


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out
