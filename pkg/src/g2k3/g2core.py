"""The 14-dimensional Lie algebra inside the bivectors of the 7-space.

The algebra is realized concretely as the kernel of the contraction map

    Lambda^2 V7 -> V7,   psi |-> flip(i_psi omega),

which is 14-dimensional over any coefficient field here.  Brackets are
computed through the so7-action (``bivector_action``), the Killing pairing
is the trace form of that action, and the root decomposition is obtained
exactly from the weight grading of the basis.
"""

from __future__ import annotations

from fractions import Fraction

from . import exterior as ext
from .exterior import (
    BIVECTOR_MASKS,
    BIVECTOR_PAIRS,
    DIM,
    Multivector,
    WEIGHTS,
    action_matrix,
    bivector_coords,
    bivector_from_coords,
    contract_bivector,
    flip,
    gram_matrix,
    omega,
    wedge,
)
from .linalg import Subspace, kernel_basis, rank, rref, solve
from .scalars import QQ

LONG_ROOTS = ((1, -1), (-1, 1), (1, 2), (-1, -2), (2, 1), (-2, -1))
SHORT_ROOTS = ((1, 0), (-1, 0), (0, 1), (0, -1), (-1, -1), (1, 1))
ALL_ROOTS = LONG_ROOTS + SHORT_ROOTS

_cache = {}


def _dom_key(domain):
    return getattr(domain, "name", repr(domain))


def contract_to_vector(psi, domain=None):
    """Image of a bivector under the contraction map to V7."""
    d = domain if domain is not None else psi.domain
    return flip(contract_bivector(omega(d), psi))


def contraction_matrix(domain):
    """7 x 21 matrix of the contraction map on the bivector basis."""
    key = ("cmat", _dom_key(domain))
    if key not in _cache:
        cols = []
        for mask in BIVECTOR_MASKS:
            psi = Multivector(domain, {mask: domain.one})
            cols.append(contract_to_vector(psi, domain).vector_coords())
        _cache[key] = [[cols[j][i] for j in range(len(cols))] for i in range(DIM)]
    return _cache[key]


def g2_basis(domain=QQ):
    """Echelonized 14-element basis of the contraction kernel."""
    key = ("g2", _dom_key(domain))
    if key not in _cache:
        ker = kernel_basis(domain, contraction_matrix(domain))
        _cache[key] = tuple(bivector_from_coords(domain, v) for v in ker)
    return list(_cache[key])


def in_g2(psi):
    return contract_to_vector(psi).is_zero()


def is_adjoint_point(psi):
    """Point of the closed orbit: nonzero, decomposable, and in the algebra."""
    if psi.is_zero():
        raise ValueError("zero bivector defines no point")
    return wedge(psi, psi).is_zero() and in_g2(psi)


def theta(psi):
    """7x7 action matrix of a bivector."""
    return action_matrix(psi)


def _gram_inverse(domain):
    two = domain.add(domain.one, domain.one)
    g = [[domain.zero] * DIM for _ in range(DIM)]
    g[0][0] = domain.one
    for i in (1, 3, 5):
        g[i][i + 1] = two
        g[i + 1][i] = two
    return g


def bivector_from_matrix(domain, m):
    """Inverse of theta on skew matrices: Psi = (1/2) M G^{-1}."""
    ginv = _gram_inverse(domain)
    half = domain.from_fraction(Fraction(1, 2))
    psi = {}
    for i, j in BIVECTOR_PAIRS:
        total = domain.zero
        for k in range(DIM):
            total = domain.add(total, domain.mul(m[i][k], ginv[k][j]))
        psi[(1 << i) | (1 << j)] = domain.mul(half, total)
    return Multivector(domain, psi)


def _mat_mul(domain, a, b):
    n = len(a)
    return [
        [
            _dot(domain, a[i], [b[k][j] for k in range(n)])
            for j in range(n)
        ]
        for i in range(n)
    ]


def _dot(domain, xs, ys):
    total = domain.zero
    for x, y in zip(xs, ys):
        if not domain.is_zero(x) and not domain.is_zero(y):
            total = domain.add(total, domain.mul(x, y))
    return total


def bracket(x, y):
    """Lie bracket in the bivector realization; result must stay in the algebra."""
    d = x.domain
    mx, my = theta(x), theta(y)
    m = [
        [d.sub(a, b) for a, b in zip(row1, row2)]
        for row1, row2 in zip(_mat_mul(d, mx, my), _mat_mul(d, my, mx))
    ]
    out = bivector_from_matrix(d, m)
    if in_g2(x) and in_g2(y) and not in_g2(out):
        raise ArithmeticError("bracket left the algebra: convention bug")
    return out


def killing(x, y):
    """Trace form tr(theta(x) theta(y)); proportional to the Killing form."""
    d = x.domain
    mx, my = theta(x), theta(y)
    total = d.zero
    for i in range(DIM):
        total = d.add(total, _dot(d, mx[i], [my[k][i] for k in range(DIM)]))
    return total


def bivector_weight(mask):
    i, j = ext.bits(mask)
    wi, wj = WEIGHTS[i], WEIGHTS[j]
    return (wi[0] + wj[0], wi[1] + wj[1])


def cartan_basis(domain=QQ):
    """h1 = e+a^e-a - e+b^e-b and h2 = e+b^e-b - e+c^e-c."""
    one = domain.one
    neg = domain.neg(one)
    h1 = Multivector(domain, {0b0000110: one, 0b0011000: neg})
    h2 = Multivector(domain, {0b0011000: one, 0b1100000: neg})
    return h1, h2


def cartan_element(domain, ca, cb, cc):
    """sum of c_r * (e+r ^ e-r); lies in the algebra iff ca+cb+cc = 0."""
    return Multivector(domain, {
        0b0000110: domain(ca), 0b0011000: domain(cb), 0b1100000: domain(cc)})


def root_vector(mu, domain=QQ):
    """Generator of the 1-dimensional weight-mu subspace of the algebra."""
    masks = [m for m in BIVECTOR_MASKS if bivector_weight(m) == tuple(mu)]
    if not masks:
        raise ValueError("not a root weight: %r" % (mu,))
    cmat = contraction_matrix(domain)
    cols = [BIVECTOR_MASKS.index(m) for m in masks]
    sub = [[cmat[i][c] for c in cols] for i in range(DIM)]
    ker = kernel_basis(domain, sub)
    if len(ker) != 1:
        raise ArithmeticError("root space of dimension %d at %r" % (len(ker), mu))
    coeffs = {m: c for m, c in zip(masks, ker[0]) if not domain.is_zero(c)}
    return Multivector(domain, coeffs)


class RootDatum:
    """Cartan pair, the twelve root vectors, and the length data."""

    def __init__(self, domain=QQ):
        self.domain = domain
        self.h1, self.h2 = cartan_basis(domain)
        self.roots = {mu: root_vector(mu, domain) for mu in ALL_ROOTS}
        self.long_roots = list(LONG_ROOTS)
        self.short_roots = list(SHORT_ROOTS)

    def eigenvalue(self, mu, h_index):
        """Value of mu = m*a + n*b on h1 or h2; a(h1),b(h1),c(h1) = 1,-1,0
        and a(h2),b(h2),c(h2) = 0,1,-1."""
        m, n = mu
        if h_index == 0:
            return self.domain(m - n)
        return self.domain(n)

    def check_eigenvectors(self):
        d = self.domain
        for mu, x in self.roots.items():
            for hi, h in enumerate((self.h1, self.h2)):
                lhs = bracket(h, x)
                rhs = x.scale(self.eigenvalue(mu, hi))
                if lhs != rhs:
                    return False
        return True

    def killing_on_cartan(self):
        hs = (self.h1, self.h2)
        return [[killing(a, b) for b in hs] for a in hs]

    def root_norm(self, mu):
        """Squared Killing length of mu, as an exact rational multiple."""
        d = self.domain
        k = self.killing_on_cartan()
        target = [self.eigenvalue(mu, 0), self.eigenvalue(mu, 1)]
        t = solve(d, k, target)
        return d.add(d.mul(target[0], t[0]), d.mul(target[1], t[1]))

    def pairing(self, mu, nu):
        d = self.domain
        k = self.killing_on_cartan()
        tm = solve(d, k, [self.eigenvalue(mu, 0), self.eigenvalue(mu, 1)])
        return d.add(
            d.mul(self.eigenvalue(nu, 0), tm[0]),
            d.mul(self.eigenvalue(nu, 1), tm[1]),
        )

    def cartan_matrix(self, simple=((1, 0), (-1, 1))):
        d = self.domain
        out = []
        for si in simple:
            row = []
            for sj in simple:
                num = d.mul(d(2), self.pairing(si, sj))
                row.append(d.div(num, self.pairing(sj, sj)))
            out.append(row)
        return out


def root_datum(domain=QQ):
    key = ("rootdatum", _dom_key(domain))
    if key not in _cache:
        _cache[key] = RootDatum(domain)
    return _cache[key]


def stabilizer_subalgebra(space, domain=None):
    """Elements of the algebra whose action preserves the given subspace of V7.

    Returns a list of bivectors (a basis).  The condition is linear: for each
    basis vector s of the subspace, theta(X)s must reduce to zero against the
    subspace's echelon basis.
    """
    d = domain if domain is not None else space.domain
    basis = g2_basis(d)
    rows = []
    images = []
    for x in basis:
        imgs = []
        for s in space.rows:
            v = ext.bivector_action(x, Multivector.from_vector(d, s))
            imgs.append(space.reduce(v.vector_coords()))
        images.append(imgs)
    nconds = len(space.rows) * DIM
    for cond in range(nconds):
        si, coord = divmod(cond, DIM)
        rows.append([images[k][si][coord] for k in range(len(basis))])
    ker = kernel_basis(d, rows)
    out = []
    for coeffs in ker:
        acc = Multivector(d)
        for c, x in zip(coeffs, basis):
            if not d.is_zero(c):
                acc = acc + x.scale(c)
        out.append(acc)
    return out


def is_bracket_closed(elements):
    """Exhaustive closure check of a list of bivectors under the bracket."""
    d = elements[0].domain
    rows = [bivector_coords(x) for x in elements]
    r = rank(d, rows)
    for i, x in enumerate(elements):
        for y in elements[i + 1:]:
            b = bracket(x, y)
            if rank(d, rows + [bivector_coords(b)]) != r:
                return False
    return True


def killing_gram(elements):
    return [[killing(x, y) for y in elements] for x in elements]


def theta_kernel(x):
    """Kernel in V7 of the action of a bivector."""
    d = x.domain
    m = theta(x)
    return Subspace(d, kernel_basis(d, m))


def orthogonal_complement(space):
    """B-orthogonal complement of a subspace of V7."""
    d = space.domain
    g = gram_matrix(d)
    rows = []
    for s in space.rows:
        rows.append([_dot(d, s, [g[i][j] for i in range(DIM)]) for j in range(DIM)])
    return Subspace(d, kernel_basis(d, rows))
