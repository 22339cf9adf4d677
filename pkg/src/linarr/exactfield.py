"""Exact arithmetic over Q, GF(p^k) and the cyclotomic fields Q(zeta_m).

Every field is described by a memoized descriptor object (``QQ``,
``finite_field(p, k)``, ``cyclotomic_field(m)``).  Elements are immutable
:class:`FieldElement` values whose payload is kept fully reduced, so equality
is payload equality and :meth:`FieldElement.encode` is injective.

Payloads:

* Q -- a :class:`fractions.Fraction`.
* GF(p, k) -- an integer code ``sum(c_i * p**(k-1-i))`` for the coefficient
  vector ``(c_0, ..., c_{k-1})`` relative to the canonical irreducible
  modulus.  The constant coefficient is the most significant digit, so the
  integer order of codes is the lexicographic (constant-first) order of
  coefficient vectors.
* Q(zeta_m) -- a pair ``(nums, den)``: integer numerators in the power basis
  ``1, zeta, ..., zeta^(phi-1)`` over a common positive denominator, with
  ``gcd(den, *nums) == 1``.
"""

from __future__ import annotations

import functools
import itertools
import math
import re
from fractions import Fraction

__all__ = [
    "FieldError",
    "DivisionByZero",
    "DescriptorMismatch",
    "NoSuchRoot",
    "BadFieldElement",
    "FieldElement",
    "RationalField",
    "FiniteField",
    "CyclotomicField",
    "QQ",
    "finite_field",
    "cyclotomic_field",
    "cyclotomic_poly",
    "canonical_irreducible",
    "elem_arith",
    "root_of_unity",
    "is_real",
    "euler_phi",
]


class FieldError(Exception):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class DescriptorMismatch(FieldError, TypeError):
    pass


class NoSuchRoot(FieldError, ValueError):
    pass


class BadFieldElement(FieldError, ValueError):
    pass


# ---------------------------------------------------------------------------
# integer helpers


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def euler_phi(m: int) -> int:
    result = m
    for r in prime_factors(m):
        result -= result // r
    return result


# ---------------------------------------------------------------------------
# integer polynomials (coefficient lists, constant first)


def _int_poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Divide ``num`` by the monic ``den``; the remainder must vanish."""
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return quot


@functools.cache
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, constant term first.

    Computed as (x^m - 1) divided exactly by Phi_d for every proper divisor d.
    """
    if m < 1:
        raise ValueError("cyclotomic_poly requires m >= 1")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _int_poly_divexact(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


# ---------------------------------------------------------------------------
# polynomials over GF(p) (lists, constant first, no trailing zeros)


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def _pdivmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a = [c % p for c in a]
    _trim(a)
    db = len(b) - 1
    if db < 0:
        raise DivisionByZero("polynomial division by zero")
    inv_lead = pow(b[-1], -1, p)
    if len(a) - 1 < db:
        return [], a
    quot = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv_lead % p
        if c:
            quot[i - db] = c
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return _trim(quot), _trim(a[:db])


def _pmod(a: list[int], b: list[int], p: int) -> list[int]:
    return _pdivmod(a, b, p)[1]


def _psub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(a: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(a, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        base = _pmod(_pmul(base, base, p), f, p)
        e >>= 1
    return result


def _monic_polys(p: int, deg: int):
    for low in itertools.product(range(p), repeat=deg):
        yield list(low) + [1]


def _is_irreducible(f: list[int], p: int) -> bool:
    k = len(f) - 1
    if k <= 1:
        return k == 1
    if k <= 4:
        # exhaustive factor search
        for e in range(1, k // 2 + 1):
            for g in _monic_polys(p, e):
                if not _pmod(f, g, p):
                    return False
        return True
    # no irreducible factor of degree i <=> gcd(f, x^(p^i) - x) == 1
    h = [0, 1]
    for _ in range(k // 2):
        h = _ppowmod(h, p, f, p)
        if len(_pgcd(f, _psub(h, [0, 1], p), p)) > 1:
            return False
    return True


@functools.cache
def canonical_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree k over GF(p).

    Coefficients are returned constant first, leading 1 included.  The order
    compares ``(c_0, c_1, ..., c_{k-1})`` lexicographically.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError("degree must be positive")
    for f in _monic_polys(p, k):
        if _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


# ---------------------------------------------------------------------------
# elements


class FieldElement:
    """Immutable element of one of the supported fields."""

    __slots__ = ("field", "v")

    def __init__(self, field, v):
        self.field = field
        self.v = v

    def _peer(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise DescriptorMismatch(f"{self.field!r} vs {other.field!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return None

    def __add__(self, other):
        o = self._peer(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field._add(self.v, o.v))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._peer(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field._sub(self.v, o.v))

    def __rsub__(self, other):
        o = self._peer(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field._sub(o.v, self.v))

    def __mul__(self, other):
        o = self._peer(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.v, o.v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._peer(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._peer(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.v))

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> FieldElement:
        if self.field._is_zero(self.v):
            raise DivisionByZero("inverse of zero")
        return FieldElement(self.field, self.field._inv(self.v))

    def is_zero(self) -> bool:
        return self.field._is_zero(self.v)

    def is_one(self) -> bool:
        return self.v == self.field.one.v

    def __bool__(self) -> bool:
        return not self.field._is_zero(self.v)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field is other.field and self.v == other.v
        if isinstance(other, (int, Fraction)):
            return self.v == self.field(other).v
        return NotImplemented

    def __hash__(self):
        return hash((self.field.key, self.v))

    def encode(self) -> bytes:
        """Canonical byte encoding; injective within one field."""
        return self.field._encode(self.v)

    def conjugate(self) -> FieldElement:
        return FieldElement(self.field, self.field._conj(self.v))

    def __str__(self):
        return self.field.format(self)

    def __repr__(self):
        return f"<{self.field!r} {self}>"


class _Field:
    kind: str
    characteristic: int
    key: tuple

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field is not self:
                raise DescriptorMismatch(f"{value.field!r} vs {self!r}")
            return value
        return FieldElement(self, self._from_scalar(value))

    @functools.cached_property
    def zero(self) -> FieldElement:
        return self(0)

    @functools.cached_property
    def one(self) -> FieldElement:
        return self(1)

    def _sub(self, a, b):
        return self._add(a, self._neg(b))

    def __reduce__(self):
        return (_rebuild_field, self.key)


def _rebuild_field(kind, *args):
    if kind == "Q":
        return QQ
    if kind == "GF":
        return finite_field(*args)
    return cyclotomic_field(*args)


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def _parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if not m:
        raise BadFieldElement(f"not a rational number: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise BadFieldElement(f"zero denominator in {text!r}")
    return Fraction(num, den)


def _format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _split_vector(text: str) -> list[str]:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise BadFieldElement(f"expected a bracketed coefficient vector, got {text!r}")
    body = text[1:-1].strip()
    return [part.strip() for part in body.split(",")] if body else []


class RationalField(_Field):
    kind = "Q"
    characteristic = 0
    key = ("Q",)
    degree = 1

    def __repr__(self):
        return "QQ"

    def _from_scalar(self, value):
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        raise BadFieldElement(f"cannot coerce {value!r} into Q")

    def _add(self, a, b):
        return a + b

    def _sub(self, a, b):
        return a - b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _inv(self, a):
        return 1 / a

    def _is_zero(self, a):
        return a == 0

    def _conj(self, a):
        return a

    def _encode(self, a):
        return b"Q" + _format_rational(a).encode()

    def is_real(self, a: FieldElement) -> bool:
        return True

    def format(self, a: FieldElement) -> str:
        return _format_rational(a.v)

    def parse(self, text: str) -> FieldElement:
        return FieldElement(self, _parse_rational(text))

    def header(self) -> str:
        return "field Q"


QQ = RationalField()

# GF(q) fields up to this size get log/antilog tables for multiplication.
_TABLE_LIMIT = 1 << 16
_ADD_TABLE_LIMIT = 729


class FiniteField(_Field):
    """GF(p^k) modulo :func:`canonical_irreducible`."""

    kind = "GF"

    def __init__(self, p: int, k: int = 1):
        self.p = p
        self.k = k
        self.q = p**k
        self.characteristic = p
        self.degree = k
        self.modulus = canonical_irreducible(p, k)
        self.key = ("GF", p, k)
        self._width = max(1, (self.q.bit_length() + 7) // 8)
        self._weights = [p ** (k - 1 - i) for i in range(k)]
        self._log = None
        self._exp = None
        self._addtab = None

    def __repr__(self):
        return f"GF({self.p},{self.k})"

    # code <-> coefficient vector
    def coeffs(self, code: int) -> tuple[int, ...]:
        out = []
        for w in self._weights:
            c, code = divmod(code, w)
            out.append(c)
        return tuple(out)

    def from_coeffs(self, coeffs) -> FieldElement:
        coeffs = list(coeffs)
        if len(coeffs) != self.k or any(not 0 <= c < self.p for c in coeffs):
            raise BadFieldElement(f"bad coefficient vector {coeffs} for {self!r}")
        return FieldElement(self, sum(c * w for c, w in zip(coeffs, self._weights)))

    def _poly(self, code: int) -> list[int]:
        return _trim(list(self.coeffs(code)))

    def _code(self, poly: list[int]) -> int:
        poly = list(poly) + [0] * (self.k - len(poly))
        return sum(c * w for c, w in zip(poly, self._weights))

    def _from_scalar(self, value):
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise DivisionByZero(f"{value} has no image in {self!r}")
            return self._mul(self._from_scalar(value.numerator), self._inv(self._from_scalar(value.denominator)))
        if isinstance(value, int):
            return (value % self.p) * self._weights[0]
        raise BadFieldElement(f"cannot coerce {value!r} into {self!r}")

    def elements(self) -> list[FieldElement]:
        """All q elements in canonical order."""
        return [FieldElement(self, c) for c in range(self.q)]

    # arithmetic
    def _add(self, a, b):
        p = self.p
        if p == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % p
        if self._addtab is None and self.q <= _ADD_TABLE_LIMIT:
            self._build_add_table()
        if self._addtab is not None:
            return self._addtab[a * self.q + b]
        return self._add_digits(a, b)

    def _add_digits(self, a, b):
        p = self.p
        out = 0
        w = 1
        while a or b:
            out += ((a % p + b % p) % p) * w
            a //= p
            b //= p
            w *= p
        return out

    def _build_add_table(self):
        q = self.q
        self._addtab = [self._add_digits(a, b) for a in range(q) for b in range(q)]

    def _neg(self, a):
        p = self.p
        if p == 2:
            return a
        if self.k == 1:
            return (-a) % p
        out = 0
        w = 1
        while a:
            out += ((-(a % p)) % p) * w
            a //= p
            w *= p
        return out

    def _mul_poly(self, a, b):
        return self._code(_pmod(_pmul(self._poly(a), self._poly(b), self.p), list(self.modulus), self.p))

    def _mul(self, a, b):
        if self.k == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        if self._log is None:
            if self.q > _TABLE_LIMIT:
                return self._mul_poly(a, b)
            self._build_tables()
        return self._exp[self._log[a] + self._log[b]]

    def _inv(self, a):
        if self.k == 1:
            return pow(a, -1, self.p)
        if self._log is None and self.q <= _TABLE_LIMIT:
            self._build_tables()
        if self._log is not None:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self._inv_gcd(a)

    def _inv_gcd(self, a):
        """Inverse by the extended Euclidean algorithm against the modulus."""
        p = self.p
        r0, r1 = list(self.modulus), self._poly(a)
        s0, s1 = [], [1]
        while r1:
            quot, rem = _pdivmod(r0, r1, p)
            r0, r1 = r1, rem
            s0, s1 = s1, _psub(s0, _pmul(quot, s1, p), p)
        # r0 is a nonzero constant since the modulus is irreducible
        c = pow(r0[0], -1, p)
        return self._code([x * c % p for x in s0])

    def _is_zero(self, a):
        return a == 0

    def _conj(self, a):
        return a

    def _encode(self, a):
        return a.to_bytes(self._width, "big")

    @functools.cached_property
    def generator(self) -> FieldElement:
        """Least generator of the multiplicative group in canonical order."""
        q = self.q
        exps = [(q - 1) // r for r in prime_factors(q - 1)]
        f = list(self.modulus)
        for code in range(1, q):
            if self.k == 1:
                if all(pow(code, e, self.p) != 1 for e in exps):
                    return FieldElement(self, code)
                continue
            poly = self._poly(code)
            if all(_ppowmod(poly, e, f, self.p) != [1] for e in exps):
                return FieldElement(self, code)
        if q == 2:
            return self.one
        raise AssertionError("multiplicative group has no generator")

    def _build_tables(self):
        q = self.q
        g = self.generator.v
        exp = [0] * (2 * (q - 1))
        log = [0] * q
        x = self._code([1])
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._mul_poly(x, g)
        for i in range(q - 1, 2 * (q - 1)):
            exp[i] = exp[i - (q - 1)]
        self._exp, self._log = exp, log

    def root_of_unity(self, n: int) -> FieldElement:
        if n < 1 or (self.q - 1) % n:
            raise NoSuchRoot(f"{self!r} has no primitive {n}-th root of unity")
        return self.generator ** ((self.q - 1) // n)

    def is_real(self, a: FieldElement) -> bool:
        return False

    def format(self, a: FieldElement) -> str:
        return "[" + ",".join(str(c) for c in self.coeffs(a.v)) + "]"

    def parse(self, text: str) -> FieldElement:
        text = text.strip()
        if self.k == 1 and not text.startswith("["):
            parts = [text]
        else:
            parts = _split_vector(text)
        try:
            coeffs = [int(c) for c in parts]
        except ValueError:
            raise BadFieldElement(f"non-integer coefficient in {text!r}") from None
        return self.from_coeffs(coeffs)

    def header(self) -> str:
        return f"field GF {self.p} {self.k}"


class CyclotomicField(_Field):
    """Q(zeta_m) in the power basis modulo Phi_m."""

    kind = "CYCLO"
    characteristic = 0

    def __init__(self, m: int):
        if m < 1:
            raise ValueError("cyclotomic field needs m >= 1")
        self.m = m
        self.modulus = cyclotomic_poly(m)
        self.phi_m = len(self.modulus) - 1
        self.degree = self.phi_m
        self.key = ("CYCLO", m)
        # zeta^j reduced into the power basis, j = 0..m-1
        n = self.phi_m
        pows = []
        cur = [1] + [0] * (n - 1)
        for _ in range(m):
            pows.append(tuple(cur))
            cur = self._reduce([0] + cur)
        self._zpow = pows

    def __repr__(self):
        return f"Q(zeta_{self.m})"

    def _reduce(self, coeffs: list[int]) -> list[int]:
        n = self.phi_m
        f = self.modulus
        coeffs = list(coeffs)
        for i in range(len(coeffs) - 1, n - 1, -1):
            c = coeffs[i]
            if c:
                base = i - n
                for j in range(n):
                    coeffs[base + j] -= c * f[j]
        coeffs = coeffs[:n]
        return coeffs + [0] * (n - len(coeffs))

    @staticmethod
    def _norm(nums, den):
        g = math.gcd(den, *nums)
        if g != 1:
            nums = [x // g for x in nums]
            den //= g
        return (tuple(nums), den)

    def _from_scalar(self, value):
        if isinstance(value, (int, Fraction)):
            value = Fraction(value)
            nums = [value.numerator] + [0] * (self.phi_m - 1)
            return (tuple(nums), value.denominator)
        raise BadFieldElement(f"cannot coerce {value!r} into {self!r}")

    def from_coeffs(self, coeffs) -> FieldElement:
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) != self.phi_m:
            raise BadFieldElement(f"{self!r} needs {self.phi_m} coefficients, got {len(coeffs)}")
        den = math.lcm(*(c.denominator for c in coeffs))
        nums = [int(c * den) for c in coeffs]
        return FieldElement(self, self._norm(nums, den))

    def coeffs(self, a: FieldElement) -> tuple[Fraction, ...]:
        nums, den = a.v
        return tuple(Fraction(x, den) for x in nums)

    def zeta(self, j: int = 1) -> FieldElement:
        return FieldElement(self, (self._zpow[j % self.m], 1))

    def _add(self, a, b):
        (na, da), (nb, db) = a, b
        if da == db:
            return self._norm([x + y for x, y in zip(na, nb)], da)
        return self._norm([x * db + y * da for x, y in zip(na, nb)], da * db)

    def _sub(self, a, b):
        (na, da), (nb, db) = a, b
        if da == db:
            return self._norm([x - y for x, y in zip(na, nb)], da)
        return self._norm([x * db - y * da for x, y in zip(na, nb)], da * db)

    def _neg(self, a):
        return (tuple(-x for x in a[0]), a[1])

    def _mul(self, a, b):
        (na, da), (nb, db) = a, b
        n = self.phi_m
        out = [0] * (2 * n - 1)
        for i, x in enumerate(na):
            if x:
                for j, y in enumerate(nb):
                    if y:
                        out[i + j] += x * y
        return self._norm(self._reduce(out), da * db)

    def _inv(self, a):
        """Extended Euclid in Q[x] against Phi_m."""
        nums, den = a
        r0 = [Fraction(c) for c in self.modulus]
        r1 = [Fraction(c) for c in nums]
        s0, s1 = [], [Fraction(1)]
        _qtrim(r1)
        while r1:
            quot, rem = _qdivmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _qsub(s0, _qmul(quot, s1))
        c = r0[0]
        # a^-1 = den * s0 / c
        coeffs = [x * den / c for x in s0]
        coeffs += [Fraction(0)] * (self.phi_m - len(coeffs))
        return self.from_coeffs(coeffs[: self.phi_m]).v

    def _is_zero(self, a):
        return not any(a[0])

    def _conj(self, a):
        nums, den = a
        out = [0] * self.phi_m
        m = self.m
        for i, c in enumerate(nums):
            if c:
                for j, z in enumerate(self._zpow[(-i) % m]):
                    out[j] += c * z
        return self._norm(out, den)

    def _encode(self, a):
        nums, den = a
        return ("C" + ",".join(map(str, nums)) + "/" + str(den)).encode()

    def root_of_unity(self, n: int) -> FieldElement:
        if n < 1 or self.m % n:
            raise NoSuchRoot(f"{self!r} has no primitive {n}-th root of unity")
        return self.zeta(self.m // n)

    def is_real(self, a: FieldElement) -> bool:
        return self._conj(a.v) == a.v

    def format(self, a: FieldElement) -> str:
        return "[" + ",".join(_format_rational(c) for c in self.coeffs(a)) + "]"

    def parse(self, text: str) -> FieldElement:
        return self.from_coeffs([_parse_rational(c) for c in _split_vector(text)])

    def header(self) -> str:
        return f"field CYCLO {self.m}"


# Q[x] helpers for the cyclotomic inverse


def _qtrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _qmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _qtrim(out)


def _qsub(a, b):
    n = max(len(a), len(b))
    return _qtrim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _qdivmod(a, b):
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], _qtrim(a)
    quot = [Fraction(0)] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] / b[-1]
        if c:
            quot[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    return _qtrim(quot), _qtrim(a[:db])


def finite_field(p: int, k: int = 1) -> FiniteField:
    """Shared GF(p, k) instance; descriptors are compared by identity."""
    return _finite_field(int(p), int(k))


@functools.cache
def _finite_field(p: int, k: int) -> FiniteField:
    return FiniteField(p, k)


def cyclotomic_field(m: int) -> CyclotomicField:
    return _cyclotomic_field(int(m))


@functools.cache
def _cyclotomic_field(m: int) -> CyclotomicField:
    return CyclotomicField(m)


# ---------------------------------------------------------------------------
# functional surface


def elem_arith(op: str, a: FieldElement, b: FieldElement | None = None) -> FieldElement:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    if op == "neg":
        return -a
    raise ValueError(f"unknown operation {op!r}")


def root_of_unity(field, n: int) -> FieldElement:
    """A fixed primitive n-th root of unity of ``field``."""
    if isinstance(field, RationalField):
        if n == 1:
            return field.one
        if n == 2:
            return -field.one
        raise NoSuchRoot(f"Q has no primitive {n}-th root of unity")
    return field.root_of_unity(n)


def is_real(a: FieldElement) -> bool:
    return a.field.is_real(a)


def parse_field(tokens: list[str]):
    """Field descriptor from header tokens such as ``["GF", "2", "1"]``."""
    if not tokens:
        raise ValueError("empty field declaration")
    kind = tokens[0].upper()
    try:
        if kind == "Q" and len(tokens) == 1:
            return QQ
        if kind == "GF" and len(tokens) in (2, 3):
            p = int(tokens[1])
            k = int(tokens[2]) if len(tokens) == 3 else 1
            if not is_prime(p) or k < 1:
                raise ValueError(f"GF({p},{k}) is not a valid finite field")
            return finite_field(p, k)
        if kind == "CYCLO" and len(tokens) == 2:
            m = int(tokens[1])
            if m < 1:
                raise ValueError("cyclotomic index must be positive")
            return cyclotomic_field(m)
    except ValueError as exc:
        raise ValueError(f"bad field declaration {' '.join(tokens)!r}: {exc}") from None
    raise ValueError(f"bad field declaration {' '.join(tokens)!r}")
