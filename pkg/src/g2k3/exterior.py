"""Exact exterior algebra on a 7-dimensional space with a weight basis.

The basis is ordered as

    index : 0    1     2     3     4     5     6
    label : e0   e+a   e-a   e+b   e-b   e+c   e-c

where a, b, c are three weight characters with a + b + c = 0.  A multivector
stores a sparse map from index subsets (bitmasks) to coefficients in an exact
scalar domain.

Two distinguished tensors live here:

* the quadratic form  Q = v0^2 + va*v-a + vb*v-b + vc*v-c, with polar form
  B(e0,e0) = 1 and B(e+r, e-r) = 1/2;
* the invariant 3-form, stored over the same index set as

      omega = e0^(e+a^e-a + e+b^e-b + e+c^e-c) + e+a^e+b^e+c - e-a^e-b^e-c.

The sign on the last monomial is forced: it is the unique choice (up to
basis rescaling) for which the 3-form and Q are compatible, i.e. for which
``q_from_omega`` is a single scalar multiple of ``q_bilinear`` on every pair
of basis vectors.  With both trilinear coefficients positive the two forms
disagree in sign on the isotropic pairs, so no global constant exists.

Dual coordinates are identified with vectors through the weight-negation
flip  v0 <-> e0, v(+r) <-> e(-r); ``flip`` below implements it on arbitrary
multivectors with the reordering signs included.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import Subspace, kernel_basis, rank, rref
from .scalars import QQ

DIM = 7
LABELS = ("e0", "e+a", "e-a", "e+b", "e-b", "e+c", "e-c")
# weight of each basis vector in the (a, b) character lattice; c = -a-b.
WEIGHTS = ((0, 0), (1, 0), (-1, 0), (0, 1), (0, -1), (-1, -1), (1, 1))
# index pairing of the weight-negation flip e(+r) <-> e(-r).
FLIP = (0, 2, 1, 4, 3, 6, 5)
FULL_MASK = (1 << DIM) - 1


def bits(mask):
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask):
    return bin(mask).count("1")


def merge_sign(a, b):
    """Sign of e_A ^ e_B for disjoint ascending index sets A, B."""
    sign = 1
    for t in bits(b):
        higher = a >> (t + 1)
        if popcount(higher) & 1:
            sign = -sign
    return sign


def sort_sign(indices):
    """Sign of the permutation sorting the index sequence; 0 on repeats."""
    idx = list(indices)
    sign = 1
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if idx[i] == idx[j]:
                return 0, idx
            if idx[i] > idx[j]:
                idx[i], idx[j] = idx[j], idx[i]
                sign = -sign
    return sign, idx


class GradeError(ValueError):
    pass


class Multivector:
    """Sparse homogeneous-or-mixed element of the exterior algebra."""

    __slots__ = ("domain", "coeffs")

    def __init__(self, domain, coeffs=None):
        self.domain = domain
        self.coeffs = {}
        if coeffs:
            for mask, c in coeffs.items():
                if not domain.is_zero(c):
                    self.coeffs[mask] = c

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, domain):
        return cls(domain)

    @classmethod
    def basis_vector(cls, domain, index):
        return cls(domain, {1 << index: domain.one})

    @classmethod
    def basis_blade(cls, domain, indices):
        sign, idx = sort_sign(indices)
        if sign == 0:
            return cls(domain)
        mask = 0
        for i in idx:
            mask |= 1 << i
        c = domain.one if sign > 0 else domain.neg(domain.one)
        return cls(domain, {mask: c})

    @classmethod
    def from_vector(cls, domain, coords):
        coeffs = {}
        for i, c in enumerate(coords):
            coeffs[1 << i] = domain(c) if not hasattr(c, "ring") else c
        return cls(domain, coeffs)

    # -- structure ---------------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    def grades(self):
        return sorted({popcount(m) for m in self.coeffs})

    def grade(self):
        gs = self.grades()
        if not gs:
            return 0
        if len(gs) > 1:
            raise GradeError("mixed-grade multivector has no single grade")
        return gs[0]

    def coefficient(self, indices):
        sign, idx = sort_sign(indices)
        if sign == 0:
            return self.domain.zero
        mask = 0
        for i in idx:
            mask |= 1 << i
        c = self.coeffs.get(mask, self.domain.zero)
        return c if sign > 0 else self.domain.neg(c)

    def vector_coords(self):
        if not self.is_zero() and self.grade() != 1:
            raise GradeError("not a vector")
        return [self.coeffs.get(1 << i, self.domain.zero) for i in range(DIM)]

    def to_coord_list(self, masks):
        return [self.coeffs.get(m, self.domain.zero) for m in masks]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        d = self.domain
        coeffs = dict(self.coeffs)
        for m, c in other.coeffs.items():
            coeffs[m] = d.add(coeffs.get(m, d.zero), c)
        return Multivector(d, coeffs)

    def __sub__(self, other):
        d = self.domain
        coeffs = dict(self.coeffs)
        for m, c in other.coeffs.items():
            coeffs[m] = d.sub(coeffs.get(m, d.zero), c)
        return Multivector(d, coeffs)

    def __neg__(self):
        d = self.domain
        return Multivector(d, {m: d.neg(c) for m, c in self.coeffs.items()})

    def scale(self, scalar):
        d = self.domain
        return Multivector(d, {m: d.mul(scalar, c) for m, c in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        d = self.domain
        keys = set(self.coeffs) | set(other.coeffs)
        return all(
            d.eq(self.coeffs.get(k, d.zero), other.coeffs.get(k, d.zero)) for k in keys
        )

    def __hash__(self):
        return hash(frozenset(self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        bits_str = []
        for m in sorted(self.coeffs):
            mono = "^".join(LABELS[i] for i in bits(m)) or "1"
            bits_str.append("(%s)%s" % (self.coeffs[m], mono))
        return " + ".join(bits_str)


def wedge(a, b):
    """Exterior product; raises GradeError when the grade would exceed 7."""
    d = a.domain
    coeffs = {}
    for ma, ca in a.coeffs.items():
        for mb, cb in b.coeffs.items():
            if ma & mb:
                continue
            if popcount(ma | mb) > DIM:
                raise GradeError("wedge exceeds top degree")
            s = merge_sign(ma, mb)
            c = d.mul(ca, cb)
            if s < 0:
                c = d.neg(c)
            m = ma | mb
            coeffs[m] = d.add(coeffs.get(m, d.zero), c)
    out = Multivector(d, coeffs)
    return out


def contract(phi, x):
    """Interior product i_x(phi) for a vector x (first-slot insertion)."""
    d = phi.domain
    coords = x.vector_coords() if isinstance(x, Multivector) else list(x)
    if isinstance(x, Multivector) and not x.is_zero() and x.grade() != 1:
        raise GradeError("contraction direction must be a vector")
    if phi.grades() == [0]:
        raise GradeError("cannot contract a scalar")
    coeffs = {}
    for m, c in phi.coeffs.items():
        pos = 0
        for i in bits(m):
            xi = coords[i]
            if not d.is_zero(xi):
                val = d.mul(xi, c)
                if pos & 1:
                    val = d.neg(val)
                m2 = m & ~(1 << i)
                coeffs[m2] = d.add(coeffs.get(m2, d.zero), val)
            pos += 1
    return Multivector(d, coeffs)


def contract_bivector(phi, psi):
    """Full contraction of phi by a bivector: e_i^e_j acts as i_{e_j} i_{e_i}."""
    d = phi.domain
    out = Multivector(d)
    for m, c in psi.coeffs.items():
        i, j = bits(m)
        part = contract(contract(phi, Multivector.basis_vector(d, i)),
                        Multivector.basis_vector(d, j))
        out = out + part.scale(c)
    return out


def flip(mv):
    """Weight-negation duality v0 <-> e0, v(+r) <-> e(-r), with resort signs."""
    d = mv.domain
    coeffs = {}
    for m, c in mv.coeffs.items():
        idx = [FLIP[i] for i in bits(m)]
        sign, sidx = sort_sign(idx)
        mask = 0
        for i in sidx:
            mask |= 1 << i
        val = c if sign > 0 else d.neg(c)
        coeffs[mask] = d.add(coeffs.get(mask, d.zero), val)
    return Multivector(d, coeffs)


def omega(domain=QQ):
    """The invariant 3-form in the fixed basis (see module docstring)."""
    one = domain.one
    neg = domain.neg(one)
    return Multivector(domain, {
        0b0000111: one,   # e0 ^ e+a ^ e-a
        0b0011001: one,   # e0 ^ e+b ^ e-b
        0b1100001: one,   # e0 ^ e+c ^ e-c
        0b0101010: one,   # e+a ^ e+b ^ e+c
        0b1010100: neg,   # e-a ^ e-b ^ e-c
    })


def gram_matrix(domain=QQ):
    half = domain.from_fraction(Fraction(1, 2))
    g = [[domain.zero for _ in range(DIM)] for _ in range(DIM)]
    g[0][0] = domain.one
    for i in (1, 3, 5):
        g[i][i + 1] = half
        g[i + 1][i] = half
    return g


def q_bilinear(x, y):
    """The polar form B of Q; B(e0,e0)=1, B(e+r,e-r)=1/2."""
    d = x.domain
    xc = x.vector_coords()
    yc = y.vector_coords()
    g = gram_matrix(d)
    total = d.zero
    for i in range(DIM):
        if d.is_zero(xc[i]):
            continue
        for j in range(DIM):
            if not d.is_zero(g[i][j]):
                total = d.add(total, d.mul(xc[i], d.mul(g[i][j], yc[j])))
    return total


def q_value(x):
    return q_bilinear(x, x)


def q_from_omega(x, y, form=None):
    """Coefficient of the volume monomial in i_x(omega)^i_y(omega)^omega."""
    d = x.domain
    w = form if form is not None else omega(d)
    prod = wedge(wedge(contract(w, x), contract(w, y)), w)
    return prod.coeffs.get(FULL_MASK, d.zero)


def bivector_action(psi, v):
    """so7-action of a bivector: (x^y).v = 2(B(y,v)x - B(x,v)y), extended linearly."""
    d = psi.domain
    vc = v.vector_coords() if isinstance(v, Multivector) else list(v)
    g = gram_matrix(d)

    def pair(i, coords):
        total = d.zero
        for j in range(DIM):
            if not d.is_zero(g[i][j]) and not d.is_zero(coords[j]):
                total = d.add(total, d.mul(g[i][j], coords[j]))
        return total

    out = [d.zero] * DIM
    two = d.add(d.one, d.one)
    for m, c in psi.coeffs.items():
        i, j = bits(m)
        bj = pair(j, vc)
        bi = pair(i, vc)
        out[i] = d.add(out[i], d.mul(two, d.mul(c, bj)))
        out[j] = d.sub(out[j], d.mul(two, d.mul(c, bi)))
    return Multivector.from_vector(psi.domain, out)


def action_matrix(psi):
    """7x7 matrix of bivector_action(psi, .) in the fixed basis (columns = images)."""
    d = psi.domain
    cols = []
    for i in range(DIM):
        img = bivector_action(psi, Multivector.basis_vector(d, i))
        cols.append(img.vector_coords())
    return [[cols[j][i] for j in range(DIM)] for i in range(DIM)]


# masks of the 21 basis bivectors, in lexicographic pair order.
BIVECTOR_MASKS = tuple(
    (1 << i) | (1 << j) for i in range(DIM) for j in range(i + 1, DIM)
)
BIVECTOR_PAIRS = tuple((i, j) for i in range(DIM) for j in range(i + 1, DIM))


def bivector_coords(psi):
    return psi.to_coord_list(BIVECTOR_MASKS)


def bivector_from_coords(domain, coords):
    return Multivector(domain, {m: c for m, c in zip(BIVECTOR_MASKS, coords)
                                if not domain.is_zero(c)})


def linear_kernel(domain, rows):
    """Exact right-kernel basis (field domains only)."""
    if not domain.is_field:
        raise TypeError("kernel computation requires a field domain")
    return kernel_basis(domain, rows)


def linear_image(domain, rows):
    if not domain.is_field:
        raise TypeError("image computation requires a field domain")
    return rref(domain, rows)[0]


def matrix_rank(domain, rows):
    if not domain.is_field:
        raise TypeError("rank computation requires a field domain")
    return rank(domain, rows)


def subspace(domain, rows):
    return Subspace(domain, rows)
