"""Exact scalar domains: rationals, prime fields, and small polynomial rings.

Every computation in this package is exact.  Three coefficient domains are
supported:

* ``QQ`` -- arbitrary-precision rationals (``fractions.Fraction``),
* ``GF(p)`` -- the prime field for an odd prime ``p >= 5``,
* ``PolyRing(names)`` -- polynomials over the rationals in at most two
  named indeterminates (ring operations and zero tests only).

Domains expose a uniform element API so the multilinear-algebra layer can be
written once.  Division is available in the two field domains only.
"""

from __future__ import annotations

from fractions import Fraction


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Rationals:
    """Field of exact rationals."""

    is_field = True
    name = "QQ"

    def __call__(self, value=0):
        return Fraction(value)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def from_fraction(self, q):
        return Fraction(q)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        return Fraction(a) / b

    def inv(self, a):
        return 1 / Fraction(a)

    def is_zero(self, a):
        return a == 0

    def eq(self, a, b):
        return a == b

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The field F_p for an odd prime p >= 5.

    Elements are plain ints in ``range(p)``.  The lower bound keeps 1/2
    invertible and stays away from the characteristic-2 and -3 degenerations
    of the constructions built on top of this domain.
    """

    is_field = True

    def __init__(self, p):
        if not _is_prime(p) or p < 5:
            raise ValueError("prime field requires a prime p >= 5, got %r" % (p,))
        self.p = p
        self.name = "GF(%d)" % p

    def __call__(self, value=0):
        return int(value) % self.p

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def from_fraction(self, q):
        q = Fraction(q)
        return (q.numerator % self.p) * self.inv(q.denominator % self.p) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in %s" % self.name)
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a % self.p == 0

    def eq(self, a, b):
        return (a - b) % self.p == 0

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return self.name


def GF(p):
    return PrimeField(p)


class Poly:
    """Sparse polynomial over QQ in the variables of its parent ring.

    Immutable value type; monomials are exponent tuples.  Only ring
    operations are provided, which is all the parametric-family checks need.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if c != 0}

    def __add__(self, other):
        other = self.ring.coerce(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return Poly(self.ring, terms)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return Poly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self.ring.coerce(other))

    def __rsub__(self, other):
        return self.ring.coerce(other) - self

    def __mul__(self, other):
        other = self.ring.coerce(other)
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                terms[m] = terms.get(m, Fraction(0)) + c1 * c2
        return Poly(self.ring, terms)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring is other.ring and self.terms == other.terms
        return self.terms == self.ring.coerce(other).terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def total_degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def coefficient_map(self):
        """Monomial -> rational coefficient, for coefficient-span extraction."""
        return dict(self.terms)

    def subs(self, values):
        """Evaluate at rational values, one per ring variable."""
        out = Fraction(0)
        for m, c in self.terms.items():
            term = c
            for e, v in zip(m, values):
                term *= Fraction(v) ** e
            out += term
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for m in sorted(self.terms):
            c = self.terms[m]
            mono = "*".join(
                "%s^%d" % (v, e) if e > 1 else v
                for v, e in zip(self.ring.names, m)
                if e
            )
            bits.append("%s%s" % (c, "*" + mono if mono else ""))
        return " + ".join(bits)


class PolyRing:
    """QQ[x] or QQ[x,y]: exact polynomial ring, zero-testing but no division."""

    is_field = False

    def __init__(self, names):
        names = tuple(names)
        if not 1 <= len(names) <= 2:
            raise ValueError("polynomial domain supports one or two variables")
        self.names = names
        self.name = "QQ[%s]" % ",".join(names)

    def gens(self):
        n = len(self.names)
        out = []
        for i in range(n):
            m = tuple(1 if j == i else 0 for j in range(n))
            out.append(Poly(self, {m: Fraction(1)}))
        return out

    def coerce(self, value):
        if isinstance(value, Poly):
            if value.ring is not self:
                raise ValueError("polynomial from a different ring")
            return value
        zero = tuple(0 for _ in self.names)
        return Poly(self, {zero: Fraction(value)})

    def __call__(self, value=0):
        return self.coerce(value)

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def from_fraction(self, q):
        return self.coerce(Fraction(q))

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        raise TypeError("polynomial domain does not support division")

    def inv(self, a):
        raise TypeError("polynomial domain does not support inversion")

    def is_zero(self, a):
        return self.coerce(a).is_zero()

    def eq(self, a, b):
        return self.coerce(a) == self.coerce(b)

    def __repr__(self):
        return self.name


QQ = Rationals()
