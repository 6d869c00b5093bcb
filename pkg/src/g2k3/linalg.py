"""Exact dense linear algebra over a field domain.

Matrices are lists of rows; rows are lists of domain elements.  Everything
is Gaussian elimination with exact arithmetic -- kernels and ranks must be
exact because downstream dimension counts are the whole point.
"""

from __future__ import annotations


def mat_from_rows(domain, rows):
    return [[domain(x) if not isinstance(x, type(domain.zero)) else x for x in row] for row in rows]


def rref(domain, rows):
    """Reduced row echelon form.  Returns (new_rows, pivot_columns)."""
    if not domain.is_field:
        raise TypeError("row reduction needs a field domain, got %r" % (domain,))
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if not domain.is_zero(m[i][c]):
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = domain.inv(m[r][c])
        m[r] = [domain.mul(inv, x) for x in m[r]]
        for i in range(nrows):
            if i != r and not domain.is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [domain.sub(x, domain.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m[:r], pivots


def rank(domain, rows):
    if not rows:
        return 0
    return len(rref(domain, rows)[0])


def kernel_basis(domain, rows):
    """Basis of the right kernel {x : M x = 0}, echelonized over the free columns."""
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = rref(domain, rows)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for fc in free:
        v = [domain.zero] * ncols
        v[fc] = domain.one
        for r, pc in enumerate(pivots):
            v[pc] = domain.neg(red[r][fc])
        basis.append(v)
    return basis


def image_basis(domain, rows):
    """Echelonized basis of the row space."""
    red, _ = rref(domain, rows)
    return red


def solve(domain, rows, rhs):
    """One solution of M x = rhs, or None if inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(domain, aug)
    ncols = len(rows[0])
    if ncols in pivots:
        return None
    x = [domain.zero] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return x


def in_span(domain, basis_rows, vector):
    """Whether vector lies in the row span of basis_rows."""
    if not basis_rows:
        return all(domain.is_zero(x) for x in vector)
    n = rank(domain, basis_rows)
    return rank(domain, list(basis_rows) + [list(vector)]) == n


def span_equal(domain, rows_a, rows_b):
    ra = rank(domain, rows_a)
    rb = rank(domain, rows_b)
    if ra != rb:
        return False
    return rank(domain, list(rows_a) + list(rows_b)) == ra


class Subspace:
    """A subspace of a coordinate space, stored as an echelonized row basis."""

    def __init__(self, domain, rows):
        red, pivots = rref(domain, [list(r) for r in rows]) if rows else ([], [])
        self.domain = domain
        self.rows = red
        self.pivots = pivots

    @property
    def dim(self):
        return len(self.rows)

    @property
    def ambient_dim(self):
        return len(self.rows[0]) if self.rows else 0

    def contains(self, vector):
        return in_span(self.domain, self.rows, vector)

    def contains_subspace(self, other):
        return all(self.contains(v) for v in other.rows)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.dim == other.dim
            and all(self.contains(v) for v in other.rows)
        )

    def __hash__(self):
        return hash((self.dim, self.ambient_dim))

    def reduce(self, vector):
        """Residual of vector after elimination against the basis."""
        v = list(vector)
        d = self.domain
        for row, pc in zip(self.rows, self.pivots):
            if not d.is_zero(v[pc]):
                f = v[pc]
                v = [d.sub(x, d.mul(f, y)) for x, y in zip(v, row)]
        return v

    def __repr__(self):
        return "Subspace(dim=%d of %d over %s)" % (self.dim, self.ambient_dim, self.domain)
