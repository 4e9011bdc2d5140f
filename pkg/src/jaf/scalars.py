"""Exact scalar arithmetic: rationals, prime fields, quadratic and cubic extensions.

Elements are lightweight values supporting native ``+ - * /`` operators:

* rationals are ``gmpy2.mpq`` (arbitrary precision, canonical by construction),
* ``PrimeField(p)`` elements are :class:`FpElement` (least nonnegative residue),
* ``QuadraticExt(base, d)`` elements are ``a + b*sqrt(d)`` pairs over the base,
* ``CubicExt(base, f)`` elements are coordinate triples modulo a monic cubic.

The ring descriptor objects carry everything that is not per-element data:
sampling, involution, JSON encoding, unit tests and canonical construction.
Quadratic extensions carry the conjugation fixing the base; all other rings
have the identity involution.  2 and 3 are invertible in every ring here
(``PrimeField`` refuses p in {2, 3}).
"""

from __future__ import annotations

import math

from gmpy2 import mpq

from .errors import DivisionByNonUnit, JafError, RingMismatch

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def _splitmix64(x: int) -> int:
    x = (x + _GAMMA) & _MASK64
    x ^= x >> 30
    x = (x * 0xBF58476D1CE4E5B9) & _MASK64
    x ^= x >> 27
    x = (x * 0x94D049BB133111EB) & _MASK64
    x ^= x >> 31
    return x


class SampleStream:
    """Deterministic word stream keyed by (seed, index); draws are sequential."""

    def __init__(self, seed: int, index: int):
        self.state = _splitmix64(_splitmix64(seed & _MASK64) ^ (index & _MASK64))

    def word(self) -> int:
        self.state = _splitmix64(self.state)
        return self.state

    def bounded_int(self, bound: int) -> int:
        return self.word() % (2 * bound + 1) - bound


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Rational:
    """The field of rational numbers; elements are ``gmpy2.mpq``."""

    kind = "rational"
    is_field = True
    characteristic = 0
    has_involution = False

    def __init__(self):
        self.zero = mpq(0)
        self.one = mpq(1)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rational)

    def __hash__(self):
        return hash("rational")

    def elem(self, value) -> mpq:
        if isinstance(value, str):
            return mpq(value)
        return mpq(value)

    def coerce(self, value):
        return mpq(value)

    def is_unit(self, x) -> bool:
        return x != 0

    def inv(self, x):
        if x == 0:
            raise DivisionByNonUnit("0 is not invertible in QQ")
        return 1 / x

    def div(self, a, b):
        return a * self.inv(b)

    def involute(self, x):
        return x

    def sample(self, seed: int, index: int, bound: int = 10):
        return mpq(SampleStream(seed, index).bounded_int(bound))

    def to_json(self, x) -> str:
        return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else f"{x.numerator}"

    def from_json(self, v):
        return mpq(v)

    def descriptor(self) -> dict:
        return {"kind": "rational"}


QQ = Rational()


class FpElement:
    """Residue in F_p, stored as the least nonnegative representative."""

    __slots__ = ("p", "v")

    def __init__(self, p: int, v: int):
        self.p = p
        self.v = v % p

    def _check(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise RingMismatch(f"F_{self.p} vs F_{other.p}")
            return other.v
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        w = self._check(other)
        if w is NotImplemented:
            return NotImplemented
        return FpElement(self.p, self.v + w)

    __radd__ = __add__

    def __sub__(self, other):
        w = self._check(other)
        if w is NotImplemented:
            return NotImplemented
        return FpElement(self.p, self.v - w)

    def __rsub__(self, other):
        w = self._check(other)
        if w is NotImplemented:
            return NotImplemented
        return FpElement(self.p, w - self.v)

    def __mul__(self, other):
        w = self._check(other)
        if w is NotImplemented:
            return NotImplemented
        return FpElement(self.p, self.v * w)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElement(self.p, -self.v)

    def __truediv__(self, other):
        w = self._check(other) % self.p
        if w is NotImplemented:
            return NotImplemented
        if w == 0:
            raise DivisionByNonUnit(f"0 is not invertible in F_{self.p}")
        return FpElement(self.p, self.v * pow(w, self.p - 2, self.p))

    def __pow__(self, n: int):
        return FpElement(self.p, pow(self.v, n, self.p))

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.v))

    def __repr__(self):
        return f"{self.v}"


class PrimeField:
    """F_p for prime p not in {2, 3} (2 and 3 must stay invertible)."""

    kind = "prime_field"
    is_field = True
    has_involution = False

    def __init__(self, p: int):
        if not _is_prime(p):
            raise JafError(f"{p} is not prime")
        if p in (2, 3):
            raise JafError("prime fields of characteristic 2 or 3 are not supported")
        self.p = p
        self.characteristic = p
        self.zero = FpElement(p, 0)
        self.one = FpElement(p, 1)

    def __repr__(self):
        return f"F_{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime_field", self.p))

    def elem(self, value) -> FpElement:
        return FpElement(self.p, int(value))

    def coerce(self, value):
        if isinstance(value, FpElement):
            if value.p != self.p:
                raise RingMismatch(f"F_{self.p} vs F_{value.p}")
            return value
        return FpElement(self.p, int(value))

    def is_unit(self, x) -> bool:
        return bool(x)

    def inv(self, x):
        return self.one / x

    def div(self, a, b):
        return a / b

    def involute(self, x):
        return x

    def is_square(self, x) -> bool:
        """Euler criterion; 0 counts as a square."""
        if not x:
            return True
        return pow(x.v, (self.p - 1) // 2, self.p) == 1

    def sample(self, seed: int, index: int, bound: int = 10):
        return FpElement(self.p, SampleStream(seed, index).word() % self.p)

    def to_json(self, x) -> int:
        return x.v

    def from_json(self, v):
        return FpElement(self.p, int(v))

    def descriptor(self) -> dict:
        return {"kind": "prime_field", "p": self.p}


class QuadExtElement:
    """Element a + b*sqrt(d) of a quadratic extension."""

    __slots__ = ("ring", "a", "b")

    def __init__(self, ring, a, b):
        self.ring = ring
        self.a = a
        self.b = b

    def _pair(self, other):
        if isinstance(other, QuadExtElement):
            if other.ring != self.ring:
                raise RingMismatch("quadratic extensions differ")
            return other.a, other.b
        try:
            return self.ring.base.coerce(other), self.ring.base.zero
        except (TypeError, ValueError):
            return NotImplemented

    def __add__(self, other):
        p = self._pair(other)
        if p is NotImplemented:
            return NotImplemented
        return QuadExtElement(self.ring, self.a + p[0], self.b + p[1])

    __radd__ = __add__

    def __sub__(self, other):
        p = self._pair(other)
        if p is NotImplemented:
            return NotImplemented
        return QuadExtElement(self.ring, self.a - p[0], self.b - p[1])

    def __rsub__(self, other):
        p = self._pair(other)
        if p is NotImplemented:
            return NotImplemented
        return QuadExtElement(self.ring, p[0] - self.a, p[1] - self.b)

    def __mul__(self, other):
        p = self._pair(other)
        if p is NotImplemented:
            return NotImplemented
        c, d = p
        return QuadExtElement(
            self.ring, self.a * c + self.ring.d * self.b * d, self.a * d + self.b * c
        )

    __rmul__ = __mul__

    def __neg__(self):
        return QuadExtElement(self.ring, -self.a, -self.b)

    def __truediv__(self, other):
        p = self._pair(other)
        if p is NotImplemented:
            return NotImplemented
        return self * self.ring.inv(QuadExtElement(self.ring, p[0], p[1]))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        p = self._pair(other)
        if p is NotImplemented:
            return NotImplemented
        return self.a == p[0] and self.b == p[1]

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"({self.a} + {self.b}*s)"


class QuadraticExt:
    """base[t]/(t^2 - d) with the conjugation fixing the base ring.

    d must be nonzero (separability; 2 is invertible throughout).  d may be a
    square, in which case the extension is split etale rather than a field.
    """

    kind = "quadratic_ext"
    has_involution = True

    def __init__(self, base, d):
        self.base = base
        self.d = base.coerce(d)
        if not self.d:
            raise JafError("quadratic extension needs d != 0")
        self.characteristic = base.characteristic
        self.zero = QuadExtElement(self, base.zero, base.zero)
        self.one = QuadExtElement(self, base.one, base.zero)
        self.sqrt_d = QuadExtElement(self, base.zero, base.one)

    @property
    def is_field(self):
        return self.base.is_field and not self._d_is_square()

    def _d_is_square(self):
        if isinstance(self.base, PrimeField):
            return self.base.is_square(self.d)
        if isinstance(self.base, Rational):
            num, den = self.d.numerator, self.d.denominator
            if num < 0:
                return False
            rn = math.isqrt(num)
            rd = math.isqrt(den)
            return rn * rn == num and rd * rd == den
        raise JafError("square test unsupported over this base")

    def __repr__(self):
        return f"{self.base!r}(sqrt({self.d}))"

    def __eq__(self, other):
        return (
            isinstance(other, QuadraticExt)
            and other.base == self.base
            and other.d == self.d
        )

    def __hash__(self):
        return hash(("quadratic_ext", self.base, self.d))

    def elem(self, a, b=None) -> QuadExtElement:
        if b is None:
            b = self.base.zero
        return QuadExtElement(self, self.base.coerce(a), self.base.coerce(b))

    def coerce(self, value):
        if isinstance(value, QuadExtElement):
            if value.ring != self:
                raise RingMismatch("quadratic extensions differ")
            return value
        return QuadExtElement(self, self.base.coerce(value), self.base.zero)

    def embed(self, x):
        """Embed a base-ring element."""
        return QuadExtElement(self, x, self.base.zero)

    def norm_to_base(self, x):
        return x.a * x.a - self.d * x.b * x.b

    def is_unit(self, x) -> bool:
        return self.base.is_unit(self.norm_to_base(x))

    def inv(self, x):
        n = self.norm_to_base(x)
        if not self.base.is_unit(n):
            raise DivisionByNonUnit("element has non-unit norm")
        return QuadExtElement(self, x.a / n, -x.b / n)

    def div(self, a, b):
        return a * self.inv(b)

    def involute(self, x):
        return QuadExtElement(self, x.a, -x.b)

    def sample(self, seed: int, index: int, bound: int = 10):
        s = SampleStream(seed, index)
        if isinstance(self.base, PrimeField):
            p = self.base.p
            return self.elem(s.word() % p, s.word() % p)
        return self.elem(s.bounded_int(bound), s.bounded_int(bound))

    def to_json(self, x):
        return [self.base.to_json(x.a), self.base.to_json(x.b)]

    def from_json(self, v):
        return QuadExtElement(self, self.base.from_json(v[0]), self.base.from_json(v[1]))

    def descriptor(self) -> dict:
        return {
            "kind": "quadratic_ext",
            "base": self.base.descriptor(),
            "d": self.base.to_json(self.d),
        }


class CubicExtElement:
    """Element of base[t]/(f) as a coordinate triple (a0, a1, a2)."""

    __slots__ = ("ring", "c")

    def __init__(self, ring, c):
        self.ring = ring
        self.c = tuple(c)

    def _coords(self, other):
        if isinstance(other, CubicExtElement):
            if other.ring != self.ring:
                raise RingMismatch("cubic extensions differ")
            return other.c
        try:
            z = self.ring.base.zero
            return (self.ring.base.coerce(other), z, z)
        except (TypeError, ValueError):
            return NotImplemented

    def __add__(self, other):
        c = self._coords(other)
        if c is NotImplemented:
            return NotImplemented
        return CubicExtElement(self.ring, tuple(a + b for a, b in zip(self.c, c)))

    __radd__ = __add__

    def __sub__(self, other):
        c = self._coords(other)
        if c is NotImplemented:
            return NotImplemented
        return CubicExtElement(self.ring, tuple(a - b for a, b in zip(self.c, c)))

    def __rsub__(self, other):
        c = self._coords(other)
        if c is NotImplemented:
            return NotImplemented
        return CubicExtElement(self.ring, tuple(b - a for a, b in zip(self.c, c)))

    def __mul__(self, other):
        c = self._coords(other)
        if c is NotImplemented:
            return NotImplemented
        return self.ring._mul(self.c, c)

    __rmul__ = __mul__

    def __neg__(self):
        return CubicExtElement(self.ring, tuple(-a for a in self.c))

    def __truediv__(self, other):
        c = self._coords(other)
        if c is NotImplemented:
            return NotImplemented
        return self * self.ring.inv(CubicExtElement(self.ring, c))

    def __bool__(self):
        return any(bool(a) for a in self.c)

    def __eq__(self, other):
        c = self._coords(other)
        if c is NotImplemented:
            return NotImplemented
        return self.c == c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"({self.c[0]} + {self.c[1]}*t + {self.c[2]}*t^2)"


class CubicExt:
    """base[t]/(t^3 + c2*t^2 + c1*t + c0) for a separable monic cubic.

    Carries no involution; ``involute`` is the identity.
    """

    kind = "cubic_ext"
    has_involution = False

    def __init__(self, base, f):
        self.base = base
        c0, c1, c2 = (base.coerce(c) for c in f)
        self.f = (c0, c1, c2)
        # disc(t^3 + p t^2 + q t + r) = 18pqr - 4p^3 r + p^2 q^2 - 4q^3 - 27r^2
        p, q, r = c2, c1, c0
        disc = (
            18 * p * q * r
            - 4 * p * p * p * r
            + p * p * q * q
            - 4 * q * q * q
            - 27 * r * r
        )
        if not disc:
            raise JafError("cubic is not separable (zero discriminant)")
        self.characteristic = base.characteristic
        z, o = base.zero, base.one
        self.zero = CubicExtElement(self, (z, z, z))
        self.one = CubicExtElement(self, (o, z, z))
        self.t = CubicExtElement(self, (z, o, z))
        # t^3 and t^4 reduced to degree <= 2
        t3 = (-c0, -c1, -c2)
        t4 = (c0 * c2, c1 * c2 - c0, c2 * c2 - c1)
        self._t3 = t3
        self._t4 = t4

    @property
    def is_field(self):
        if not self.base.is_field:
            return False
        return not self._has_root()

    def _has_root(self):
        c0, c1, c2 = self.f
        if isinstance(self.base, PrimeField):
            p = self.base.p
            for v in range(p):
                x = self.base.elem(v)
                if not (x * x * x + c2 * x * x + c1 * x + c0):
                    return True
            return False
        if isinstance(self.base, Rational):
            from gmpy2 import mpz

            den = math.lcm(int(c0.denominator), int(c1.denominator), int(c2.denominator))
            # roots of the scaled integer cubic X^3 + ... are rational p/q with
            # q | 1 after clearing: check candidates p/q, p | const, q | lead
            a0 = int(c0 * den * den * den)
            if a0 == 0:
                return True
            lead = den * den * den  # after x -> X/den substitution lead stays 1*den^3
            cands = set()
            for pdiv in range(1, math.isqrt(abs(a0)) + 1):
                if a0 % pdiv == 0:
                    cands.update({pdiv, abs(a0) // pdiv})
            for num in sorted(cands):
                for sign in (1, -1):
                    for qden in {1, den, lead}:
                        x = mpq(sign * num, qden)
                        if x * x * x + c2 * x * x + c1 * x + c0 == 0:
                            return True
            return False
        raise JafError("root test unsupported over this base")

    def __repr__(self):
        return f"{self.base!r}[t]/(t^3 + {self.f[2]}t^2 + {self.f[1]}t + {self.f[0]})"

    def __eq__(self, other):
        return isinstance(other, CubicExt) and other.base == self.base and other.f == self.f

    def __hash__(self):
        return hash(("cubic_ext", self.base, self.f))

    def _mul(self, x, y):
        b = self.base
        prod = [b.zero] * 5
        for i in range(3):
            if not x[i]:
                continue
            for j in range(3):
                if y[j]:
                    prod[i + j] = prod[i + j] + x[i] * y[j]
        c = list(prod[:3])
        for k, red in ((3, self._t3), (4, self._t4)):
            if prod[k]:
                for i in range(3):
                    c[i] = c[i] + prod[k] * red[i]
        return CubicExtElement(self, tuple(c))

    def elem(self, a0, a1=None, a2=None) -> CubicExtElement:
        z = self.base.zero
        a1 = z if a1 is None else self.base.coerce(a1)
        a2 = z if a2 is None else self.base.coerce(a2)
        return CubicExtElement(self, (self.base.coerce(a0), a1, a2))

    def coerce(self, value):
        if isinstance(value, CubicExtElement):
            if value.ring != self:
                raise RingMismatch("cubic extensions differ")
            return value
        z = self.base.zero
        return CubicExtElement(self, (self.base.coerce(value), z, z))

    def regular_matrix(self, x):
        """Matrix of left multiplication by x on the basis (1, t, t^2)."""
        cols = [x, self._mul(x.c, self.t.c), self._mul(self._mul(x.c, self.t.c).c, self.t.c)]
        return [[cols[j].c[i] for j in range(3)] for i in range(3)]

    def field_norm(self, x):
        m = self.regular_matrix(x)
        return (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )

    def is_unit(self, x) -> bool:
        return self.base.is_unit(self.field_norm(x))

    def inv(self, x):
        n = self.field_norm(x)
        if not self.base.is_unit(n):
            raise DivisionByNonUnit("element has non-unit norm")
        m = self.regular_matrix(x)
        # adjugate / det applied to (1, 0, 0)
        adj_col = (
            m[1][1] * m[2][2] - m[1][2] * m[2][1],
            m[1][2] * m[2][0] - m[1][0] * m[2][2],
            m[1][0] * m[2][1] - m[1][1] * m[2][0],
        )
        return CubicExtElement(self, tuple(a / n for a in adj_col))

    def div(self, a, b):
        return a * self.inv(b)

    def involute(self, x):
        return x

    def sample(self, seed: int, index: int, bound: int = 10):
        s = SampleStream(seed, index)
        if isinstance(self.base, PrimeField):
            p = self.base.p
            draws = [s.word() % p for _ in range(3)]
        else:
            draws = [s.bounded_int(bound) for _ in range(3)]
        return self.elem(*draws)

    def to_json(self, x):
        return [self.base.to_json(a) for a in x.c]

    def from_json(self, v):
        return CubicExtElement(self, tuple(self.base.from_json(a) for a in v))

    def descriptor(self) -> dict:
        return {
            "kind": "cubic_ext",
            "base": self.base.descriptor(),
            "f": [self.base.to_json(c) for c in self.f],
        }


def ring_from_descriptor(desc: dict):
    kind = desc["kind"]
    if kind == "rational":
        return QQ
    if kind == "prime_field":
        return PrimeField(desc["p"])
    if kind == "quadratic_ext":
        base = ring_from_descriptor(desc["base"])
        return QuadraticExt(base, base.from_json(desc["d"]))
    if kind == "cubic_ext":
        base = ring_from_descriptor(desc["base"])
        return CubicExt(base, tuple(base.from_json(c) for c in desc["f"]))
    raise JafError(f"unknown ring kind {kind!r}")


def ring_ops(ring, op: str, a, b=None):
    """Uniform entry point for scalar arithmetic, used by the CLI layer."""
    a = ring.coerce(a)
    if op in ("add", "sub", "mul", "div"):
        b = ring.coerce(b)
        if op == "add":
            return a + b
        if op == "sub":
            return a - b
        if op == "mul":
            return a * b
        return ring.div(a, b)
    if op == "involute":
        return ring.involute(a)
    if op == "is_invertible":
        return ring.is_unit(a)
    raise JafError(f"unknown scalar op {op!r}")


def sample(ring, seed: int, index: int, bound: int = 10):
    """Deterministic pseudo-random scalar; pure in (ring, seed, index, bound)."""
    if bound < 1:
        raise JafError("bound must be >= 1")
    return ring.sample(seed, index, bound)


_VEC_STRIDE = 64


def sample_vector(ring, n: int, seed: int, index: int, bound: int = 10) -> list:
    """Deterministic vector of n scalars; coordinate streams never collide for n <= 64."""
    if n > _VEC_STRIDE:
        raise JafError("vector sampling supports rank <= 64")
    base = index * _VEC_STRIDE
    return [ring.sample(seed, base + i, bound) for i in range(n)]
