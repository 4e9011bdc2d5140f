"""Forms of degree d on free modules: polarization, evaluation, nondegeneracy."""

from __future__ import annotations

import math
from itertools import combinations, combinations_with_replacement, permutations

from . import linalg
from .errors import DimensionMismatch, NonInvertibleFactorial, NotAField


def _distinct_permutations(t):
    return sorted(set(permutations(t)))


def _multinomial(t) -> int:
    counts = {}
    for i in t:
        counts[i] = counts.get(i, 0) + 1
    m = math.factorial(len(t))
    for c in counts.values():
        m //= math.factorial(c)
    return m


class SymmetricMultilinearForm:
    """Fully symmetric order-d form stored by nondecreasing index tuples.

    ``entries[t]`` is the value on the basis tuple t; evaluation on the
    diagonal multiplies by the multinomial coefficient of t.
    """

    def __init__(self, ring, degree: int, rank: int, entries: dict):
        self.ring = ring
        self.degree = degree
        self.rank = rank
        self.entries = {t: v for t, v in entries.items() if v}

    def __eq__(self, other):
        return (
            isinstance(other, SymmetricMultilinearForm)
            and other.degree == self.degree
            and other.rank == self.rank
            and other.entries == self.entries
        )

    def eval_diag(self, x):
        """N(x) = theta(x, ..., x)."""
        if len(x) != self.rank:
            raise DimensionMismatch(f"expected rank {self.rank}, got {len(x)}")
        acc = self.ring.zero
        for t, v in self.entries.items():
            prod = v * _multinomial(t)
            ok = True
            for i in t:
                if not x[i]:
                    ok = False
                    break
                prod = prod * x[i]
            if ok:
                acc = acc + prod
        return acc

    def eval(self, args):
        """Full multilinear evaluation theta(x_1, ..., x_d)."""
        if len(args) != self.degree:
            raise DimensionMismatch(f"expected {self.degree} arguments")
        for a in args:
            if len(a) != self.rank:
                raise DimensionMismatch(f"expected rank {self.rank}, got {len(a)}")
        acc = self.ring.zero
        for t, v in self.entries.items():
            s = self.ring.zero
            for perm in _distinct_permutations(t):
                prod = None
                for arg, i in zip(args, perm):
                    if not arg[i]:
                        prod = None
                        break
                    prod = arg[i] if prod is None else prod * arg[i]
                if prod is not None:
                    s = s + prod
            if s:
                acc = acc + v * s
        return acc

    def orthogonal_sum(self, other) -> "SymmetricMultilinearForm":
        if other.degree != self.degree:
            raise DimensionMismatch("orthogonal sum needs equal degrees")
        entries = dict(self.entries)
        off = self.rank
        for t, v in other.entries.items():
            entries[tuple(i + off for i in t)] = v
        return SymmetricMultilinearForm(
            self.ring, self.degree, self.rank + other.rank, entries
        )

    def to_json(self):
        return {
            "degree": self.degree,
            "rank": self.rank,
            "entries": [
                [list(t), self.ring.to_json(v)] for t, v in sorted(self.entries.items())
            ],
        }

    @classmethod
    def from_json(cls, ring, data):
        entries = {
            tuple(t): ring.from_json(v) for t, v in data["entries"]
        }
        return cls(ring, data["degree"], data["rank"], entries)


def polarize(norm_fn, degree: int, rank: int, ring) -> SymmetricMultilinearForm:
    """Symmetric d-linear form of a degree-d homogeneous evaluation procedure.

    Uses the inclusion-exclusion formula over basis tuples; requires d!
    invertible in the ring.
    """
    fact = ring.coerce(math.factorial(degree))
    if not ring.is_unit(fact):
        raise NonInvertibleFactorial(f"{degree}! is not a unit")
    inv_fact = ring.inv(fact)
    cache = {}

    def norm_of_counts(counts):
        key = tuple(sorted(counts.items()))
        if key not in cache:
            x = [ring.zero] * rank
            for i, c in counts.items():
                x[i] = ring.coerce(c)
            cache[key] = norm_fn(x)
        return cache[key]

    entries = {}
    positions = list(range(degree))
    for t in combinations_with_replacement(range(rank), degree):
        acc = ring.zero
        for size in range(1, degree + 1):
            sign = (-1) ** (degree - size)
            for subset in combinations(positions, size):
                counts = {}
                for pos in subset:
                    counts[t[pos]] = counts.get(t[pos], 0) + 1
                val = norm_of_counts(counts)
                acc = acc + sign * val if sign > 0 else acc - val
        v = inv_fact * acc
        if v:
            entries[t] = v
    return SymmetricMultilinearForm(ring, degree, rank, entries)


from itertools import combinations  # noqa: E402  (used by polarize above)


def nondegenerate(theta: SymmetricMultilinearForm) -> bool:
    """True iff x -> theta(x, . , ..., .) is injective (field base only).

    Decided by the rank of the n x n^(d-1) flattening.
    """
    if not theta.ring.is_field:
        raise NotAField("nondegeneracy test requires a field")
    n, d = theta.rank, theta.degree
    width = n ** (d - 1)
    rows = [[theta.ring.zero] * width for _ in range(n)]
    for t, v in theta.entries.items():
        for perm in _distinct_permutations(t):
            col = 0
            for i in perm[1:]:
                col = col * n + i
            rows[perm[0]][col] = v
    return linalg.rank(rows) == n


class QuadraticVectorMap:
    """Quadratic map ring^n_in -> ring^n_out.

    Component k is ``Q(x)_k = sum_{i <= j} coeffs[k][(i, j)] * x_i * x_j``; the
    symmetric tensor values are ``coeffs[k][(i,i)]`` on the diagonal and
    ``coeffs[k][(i,j)] / 2`` off it.  ``polar`` is the associated bilinear map
    Q(x + y) - Q(x) - Q(y).
    """

    def __init__(self, ring, n_in: int, n_out: int, coeffs):
        self.ring = ring
        self.n_in = n_in
        self.n_out = n_out
        self.coeffs = [
            {ij: v for ij, v in comp.items() if v} for comp in coeffs
        ]

    def __eq__(self, other):
        return (
            isinstance(other, QuadraticVectorMap)
            and other.n_in == self.n_in
            and other.n_out == self.n_out
            and other.coeffs == self.coeffs
        )

    @classmethod
    def from_function(cls, fn, n_in: int, n_out: int, ring) -> "QuadraticVectorMap":
        """Extract coefficients of a homogeneous quadratic evaluation procedure."""
        zero = [ring.zero] * n_in
        diag = []
        for i in range(n_in):
            e = list(zero)
            e[i] = ring.one
            diag.append(fn(e))
        coeffs = [dict() for _ in range(n_out)]
        for i in range(n_in):
            for k in range(n_out):
                if diag[i][k]:
                    coeffs[k][(i, i)] = diag[i][k]
        for i in range(n_in):
            for j in range(i + 1, n_in):
                e = list(zero)
                e[i] = ring.one
                e[j] = ring.one
                val = fn(e)
                for k in range(n_out):
                    c = val[k] - diag[i][k] - diag[j][k]
                    if c:
                        coeffs[k][(i, j)] = c
        return cls(ring, n_in, n_out, coeffs)

    def eval(self, x):
        if len(x) != self.n_in:
            raise DimensionMismatch(f"expected rank {self.n_in}, got {len(x)}")
        out = []
        for comp in self.coeffs:
            acc = self.ring.zero
            for (i, j), c in comp.items():
                if bool(x[i]) and bool(x[j]):
                    acc = acc + c * x[i] * x[j]
            out.append(acc)
        return out

    def polar(self, x, y):
        """Bilinear companion Q(x+y) - Q(x) - Q(y), evaluated directly."""
        if len(x) != self.n_in or len(y) != self.n_in:
            raise DimensionMismatch("polar arguments must match the input rank")
        out = []
        for comp in self.coeffs:
            acc = self.ring.zero
            for (i, j), c in comp.items():
                if i == j:
                    term = x[i] * y[i]
                    acc = acc + (c + c) * term
                else:
                    acc = acc + c * (x[i] * y[j] + x[j] * y[i])
            out.append(acc)
        return out

    def to_json(self):
        return {
            "n_in": self.n_in,
            "n_out": self.n_out,
            "entries": [
                [k, i, j, self.ring.to_json(c)]
                for k, comp in enumerate(self.coeffs)
                for (i, j), c in sorted(comp.items())
            ],
        }

    @classmethod
    def from_json(cls, ring, data):
        coeffs = [dict() for _ in range(data["n_out"])]
        for k, i, j, c in data["entries"]:
            coeffs[k][(i, j)] = ring.from_json(c)
        return cls(ring, data["n_in"], data["n_out"], coeffs)


def evaluate_form(form, args):
    """Uniform evaluation: multilinear, diagonal, quadratic or polar."""
    if isinstance(form, SymmetricMultilinearForm):
        if len(args) == 1:
            return form.eval_diag(args[0])
        return form.eval(args)
    if isinstance(form, QuadraticVectorMap):
        if len(args) == 1:
            return form.eval(args[0])
        if len(args) == 2:
            return form.polar(args[0], args[1])
        raise DimensionMismatch("quadratic maps take one or two arguments")
    raise DimensionMismatch(f"not a form object: {form!r}")
