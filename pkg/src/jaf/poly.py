"""Sparse multivariate polynomials for symbolic identity verification.

Exponent vectors are packed into a single integer (8 bits per variable), so a
monomial product is one integer addition.  Coefficients live in any of the
exact scalar rings; a polynomial identity certified here therefore holds after
arbitrary scalar extension.
"""

from __future__ import annotations

_SHIFT = 8
_LANE = (1 << _SHIFT) - 1


class PolyRing:
    """Polynomial ring over an exact base ring in nvars indeterminates."""

    kind = "poly"
    is_field = False
    has_involution = False

    def __init__(self, base, nvars: int, prefix: str = "x"):
        self.base = base
        self.nvars = nvars
        self.prefix = prefix
        self.characteristic = base.characteristic
        self.zero = Poly(self, {})
        self.one = Poly(self, {0: base.one})

    def __repr__(self):
        return f"{self.base!r}[{self.prefix}0..{self.prefix}{self.nvars - 1}]"

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and other.base == self.base
            and other.nvars == self.nvars
        )

    def __hash__(self):
        return hash(("poly", self.base, self.nvars))

    def gen(self, i: int) -> "Poly":
        return Poly(self, {1 << (_SHIFT * i): self.base.one})

    def gens(self) -> list:
        return [self.gen(i) for i in range(self.nvars)]

    def const(self, c) -> "Poly":
        c = self.base.coerce(c)
        return Poly(self, {0: c} if c else {})

    def coerce(self, value):
        if isinstance(value, Poly):
            if value.ring != self:
                raise TypeError("polynomial rings differ")
            return value
        return self.const(value)

    def involute(self, x):
        return x

    def is_unit(self, x) -> bool:
        return len(x.terms) == 1 and 0 in x.terms and self.base.is_unit(x.terms[0])

    def inv(self, x):
        if not self.is_unit(x):
            raise ZeroDivisionError("not a unit polynomial")
        return self.const(self.base.inv(x.terms[0]))

    def div(self, a, b):
        return a * self.inv(b)


class Poly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    def _other(self, other):
        if isinstance(other, Poly):
            return other
        try:
            return self.ring.const(other)
        except (TypeError, ValueError):
            return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        t = dict(self.terms)
        for k, c in o.terms.items():
            if k in t:
                s = t[k] + c
                if s:
                    t[k] = s
                else:
                    del t[k]
            else:
                t[k] = c
        return Poly(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        a, b = self.terms, o.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for ka, ca in a.items():
            for kb, cb in b.items():
                k = ka + kb
                c = ca * cb
                if k in out:
                    s = out[k] + c
                    if s:
                        out[k] = s
                    else:
                        del out[k]
                elif c:
                    out[k] = c
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        r = self.ring.one
        for _ in range(n):
            r = r * self
        return r

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def monomials(self):
        for key, coeff in self.terms.items():
            exps = []
            k = key
            while k:
                exps.append(k & _LANE)
                k >>= _SHIFT
            yield tuple(exps), coeff

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in sorted(self.monomials()):
            mono = "*".join(
                f"{self.ring.prefix}{i}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exps)
                if e
            )
            parts.append(f"{coeff}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)
