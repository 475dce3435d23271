"""Exact dense linear algebra over Q and F_p.

Everything is deterministic: row reduction always picks the leftmost
pivot column and the topmost nonzero row, so every basis produced here
is reproducible bit for bit.  Matrices are immutable by convention (no
method mutates ``data`` after construction).
"""

from .fields import Field


class Matrix:
    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field, data, cols=None):
        self.field = field
        self.data = [list(row) for row in data]
        self.rows = len(self.data)
        if self.data:
            self.cols = len(self.data[0])
            if cols is not None and cols != self.cols:
                raise ValueError("explicit column count contradicts data")
        else:
            self.cols = 0 if cols is None else cols
        for row in self.data:
            if len(row) != self.cols:
                raise ValueError("ragged matrix data")

    @classmethod
    def from_entries(cls, field, rows, cols, entries):
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match shape")
        coerced = [field.of(x) for x in entries]
        return cls(field, [coerced[r * cols:(r + 1) * cols] for r in range(rows)])

    @classmethod
    def zeros(cls, field, rows, cols):
        z = field.zero
        return cls(field, [[z] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, field, nrows, columns):
        z = field.zero
        data = [[z] * len(columns) for _ in range(nrows)]
        for j, col in enumerate(columns):
            if len(col) != nrows:
                raise ValueError("column length mismatch")
            for i, x in enumerate(col):
                data[i][j] = x
        return cls(field, data, cols=len(columns))

    def shape(self):
        return (self.rows, self.cols)

    def copy(self):
        return Matrix(self.field, self.data)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.data == other.data)

    def __hash__(self):
        return hash((self.field, tuple(tuple(r) for r in self.data)))

    def __repr__(self):
        body = "; ".join(" ".join(self.field.to_str(x) for x in row) for row in self.data)
        return f"Matrix({self.field}, [{body}])"

    def is_zero(self):
        z = self.field.zero
        return all(x == z for row in self.data for x in row)

    def __add__(self, other):
        self._check_same_shape(other)
        f = self.field
        return Matrix(f, [[f.add(a, b) for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.data, other.data)], cols=self.cols)

    def __sub__(self, other):
        self._check_same_shape(other)
        f = self.field
        return Matrix(f, [[f.sub(a, b) for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.data, other.data)], cols=self.cols)

    def __neg__(self):
        f = self.field
        return Matrix(f, [[f.neg(a) for a in row] for row in self.data], cols=self.cols)

    def scale(self, c):
        f = self.field
        return Matrix(f, [[f.mul(c, a) for a in row] for row in self.data], cols=self.cols)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape()} @ {other.shape()}")
        f = self.field
        z = f.zero
        ot = other.data
        out = []
        for row in self.data:
            new = [z] * other.cols
            for k, a in enumerate(row):
                if a == z:
                    continue
                ok = ot[k]
                for j in range(other.cols):
                    b = ok[j]
                    if b != z:
                        new[j] = f.add(new[j], f.mul(a, b))
            out.append(new)
        return Matrix(f, out, cols=other.cols)

    def apply(self, vec):
        """Matrix times column vector (a list)."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        f = self.field
        z = f.zero
        out = []
        for row in self.data:
            s = z
            for a, x in zip(row, vec):
                if a != z and x != z:
                    s = f.add(s, f.mul(a, x))
            out.append(s)
        return out

    def transpose(self):
        if self.rows == 0:
            return Matrix(self.field, [[] for _ in range(self.cols)], cols=0)
        if self.cols == 0:
            return Matrix(self.field, [], cols=self.rows)
        return Matrix(self.field, [list(col) for col in zip(*self.data)])

    def hstack(self, other):
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return Matrix(self.field, [r1 + r2 for r1, r2 in zip(self.data, other.data)],
                      cols=self.cols + other.cols)

    def vstack(self, other):
        if self.cols != other.cols:
            raise ValueError("column count mismatch")
        return Matrix(self.field, self.data + other.data, cols=self.cols)

    def column(self, j):
        return [row[j] for row in self.data]

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def _check_same_shape(self, other):
        if self.shape() != other.shape():
            raise ValueError(f"shape mismatch {self.shape()} vs {other.shape()}")

    # -- row reduction -------------------------------------------------

    def rref(self):
        """Reduced row echelon form and pivot columns.

        Pivoting is leftmost column first, topmost nonzero row.
        """
        f = self.field
        z = f.zero
        m = [list(row) for row in self.data]
        pivots = []
        r = 0
        for c in range(self.cols):
            if r == self.rows:
                break
            pr = next((i for i in range(r, self.rows) if m[i][c] != z), None)
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            inv = f.inv(m[r][c])
            m[r] = [f.mul(inv, x) for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c] != z:
                    factor = m[i][c]
                    m[i] = [f.sub(a, f.mul(factor, b)) for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
        return Matrix(f, m, cols=self.cols), pivots

    def rank(self):
        return len(self.rref()[1])

    def kernel_basis(self):
        """Basis of the right null space, ordered by free column index."""
        f = self.field
        red, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        basis = []
        for fc in free:
            vec = [f.zero] * self.cols
            vec[fc] = f.one
            for r, pc in enumerate(pivots):
                vec[pc] = f.neg(red.data[r][fc])
            basis.append(vec)
        return basis

    def solve(self, b):
        """One solution of ``self @ x = b`` (free variables zero), or None."""
        if len(b) != self.rows:
            raise ValueError("right-hand side length mismatch")
        f = self.field
        aug = Matrix(f, [row + [bv] for row, bv in zip(self.data, b)],
                     cols=self.cols + 1)
        red, pivots = aug.rref()
        if self.cols in pivots:
            return None
        x = [f.zero] * self.cols
        for r, pc in enumerate(pivots):
            x[pc] = red.data[r][self.cols]
        return x

    def solve_matrix(self, rhs):
        """Solve ``self @ X = rhs`` columnwise; None if any column fails."""
        cols = []
        for j in range(rhs.cols):
            x = self.solve(rhs.column(j))
            if x is None:
                return None
            cols.append(x)
        return Matrix.from_columns(self.field, self.cols, cols)

    def is_invertible(self):
        return self.rows == self.cols and self.rank() == self.rows

    def inverse(self):
        if self.rows != self.cols:
            raise ValueError("inverse of non-square matrix")
        f = self.field
        aug = self.hstack(Matrix.identity(f, self.rows))
        red, pivots = aug.rref()
        if pivots != list(range(self.rows)):
            raise ValueError("matrix is singular")
        return Matrix(f, [row[self.rows:] for row in red.data])

    def trace(self):
        if self.rows != self.cols:
            raise ValueError("trace of non-square matrix")
        f = self.field
        t = f.zero
        for i in range(self.rows):
            t = f.add(t, self.data[i][i])
        return t

    def charpoly(self):
        """Monic characteristic polynomial, coefficients lowest degree first."""
        if self.rows != self.cols:
            raise ValueError("charpoly of non-square matrix")
        f = self.field
        n = self.rows
        if n == 0:
            return [f.one]
        h = _hessenberg(self)
        # p_m for the leading principal m x m block, by the standard recurrence.
        polys = [[f.one]]
        for m in range(1, n + 1):
            p = poly_mul(f, [f.neg(h[m - 1][m - 1]), f.one], polys[m - 1])
            prod = f.one
            for i in range(m - 1, 0, -1):
                prod = f.mul(prod, h[i][i - 1])
                coeff = f.mul(h[i - 1][m - 1], prod)
                if coeff != f.zero:
                    p = poly_sub(f, p, poly_scale(f, coeff, polys[i - 1]))
            polys.append(p)
        return polys[n]


def _hessenberg(mat):
    """Upper Hessenberg form by exact similarity transforms."""
    f = mat.field
    z = f.zero
    n = mat.rows
    h = [list(row) for row in mat.data]
    for c in range(n - 2):
        pr = next((i for i in range(c + 1, n) if h[i][c] != z), None)
        if pr is None:
            continue
        if pr != c + 1:
            h[c + 1], h[pr] = h[pr], h[c + 1]
            for row in h:
                row[c + 1], row[pr] = row[pr], row[c + 1]
        inv = f.inv(h[c + 1][c])
        for i in range(c + 2, n):
            if h[i][c] == z:
                continue
            t = f.mul(h[i][c], inv)
            h[i] = [f.sub(a, f.mul(t, b)) for a, b in zip(h[i], h[c + 1])]
            for row in h:
                row[c + 1] = f.add(row[c + 1], f.mul(t, row[i]))
    return h


# -- polynomial helpers (dense lists, lowest degree first) --------------

def poly_trim(f, p):
    while len(p) > 1 and p[-1] == f.zero:
        p = p[:-1]
    return p


def poly_mul(f, p, q):
    z = f.zero
    out = [z] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == z:
            continue
        for j, b in enumerate(q):
            if b != z:
                out[i + j] = f.add(out[i + j], f.mul(a, b))
    return out


def poly_sub(f, p, q):
    n = max(len(p), len(q))
    p = p + [f.zero] * (n - len(p))
    q = q + [f.zero] * (n - len(q))
    return [f.sub(a, b) for a, b in zip(p, q)]


def poly_scale(f, c, p):
    return [f.mul(c, a) for a in p]


def poly_eval(f, p, x):
    acc = f.zero
    for c in reversed(p):
        acc = f.add(f.mul(acc, x), c)
    return acc


def poly_div_linear(f, p, lam):
    """Divide p by (x - lam); returns (quotient, remainder)."""
    acc = f.zero
    quot = [f.zero] * (len(p) - 1)
    for i in range(len(p) - 1, 0, -1):
        acc = f.add(f.mul(acc, lam), p[i])
        quot[i - 1] = acc
    rem = f.add(f.mul(acc, lam), p[0])
    return quot, rem


_FIELD_SCAN_LIMIT = 1 << 16


def poly_roots_in_field(field, p):
    """Roots of p lying in the field, with multiplicities.

    Returns ``(roots, residual_degree)`` where roots is a list of
    ``(root, multiplicity)`` sorted canonically and residual_degree is the
    degree left unsplit over the field.
    """
    p = poly_trim(field, list(p))
    if len(p) == 1:
        raise ValueError("root-finding over the zero or constant polynomial")
    if field.p == 0:
        candidates = _rational_root_candidates(p)
    else:
        if field.p > _FIELD_SCAN_LIMIT:
            raise ValueError(f"field too large for exhaustive root scan (p={field.p})")
        candidates = list(field.elements())
    roots = []
    for lam in candidates:
        lam = field.of(lam)
        mult = 0
        while len(p) > 1:
            quot, rem = poly_div_linear(field, p, lam)
            if rem != field.zero:
                break
            p = quot
            mult += 1
        if mult:
            roots.append((lam, mult))
    roots.sort(key=lambda t: (str(t[0])))
    return roots, len(p) - 1


def _rational_root_candidates(p):
    from fractions import Fraction
    import math
    den = math.lcm(*(c.denominator for c in p))
    ints = [c.numerator * (den // c.denominator) for c in p]
    lead = ints[-1]
    k = 0
    while k < len(ints) and ints[k] == 0:
        k += 1
    cands = [Fraction(0)] if k > 0 else []
    const = ints[k]
    for a in _divisors(abs(const)):
        for b in _divisors(abs(lead)):
            q = Fraction(a, b)
            cands.extend((q, -q))
    return sorted(set(cands))


def _divisors(n):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return sorted(set(out))


def unique_eigenvalue(mat):
    """The unique eigenvalue lambda with ``mat - lambda*I`` nilpotent, or None.

    Exists iff the characteristic polynomial is ``(x - lambda)^n``; the
    candidate comes from a rational-root search over Q and from an
    exhaustive field scan over F_p, then the binomial shape is verified
    exactly.
    """
    if mat.rows != mat.cols:
        raise ValueError("unique_eigenvalue of non-square matrix")
    f = mat.field
    n = mat.rows
    if n == 0:
        return None
    p = mat.charpoly()
    roots, residual = poly_roots_in_field(f, p)
    if residual != 0 or len(roots) != 1:
        return None
    lam, mult = roots[0]
    if mult != n:
        return None
    # (x - lam)^n divides charpoly exactly, so mat - lam*I is nilpotent by
    # Cayley-Hamilton; verify the power anyway since arithmetic is cheap.
    shifted = mat - Matrix.identity(f, n).scale(lam)
    power = shifted
    while not power.is_zero():
        power = power @ shifted
    return lam


def field_eigenvalues(mat):
    """All eigenvalues of mat lying in its field, with multiplicities,
    plus the degree of the characteristic polynomial left unsplit."""
    if mat.rows != mat.cols:
        raise ValueError("eigenvalues of non-square matrix")
    if mat.rows == 0:
        return [], 0
    return poly_roots_in_field(mat.field, mat.charpoly())


def span_rref(field, vectors, length):
    """Echelon basis (rows) of the span of the given vectors."""
    if not vectors:
        return Matrix(field, [], cols=length), []
    m = Matrix(field, [list(v) for v in vectors], cols=length)
    red, pivots = m.rref()
    return Matrix(field, red.data[:len(pivots)]), pivots


def in_span(field, rref_rows, pivots, vec):
    """Whether vec lies in the row space given by an rref basis."""
    f = field
    v = list(vec)
    for row, pc in zip(rref_rows.data, pivots):
        if v[pc] != f.zero:
            c = v[pc]
            v = [f.sub(a, f.mul(c, b)) for a, b in zip(v, row)]
    return all(x == f.zero for x in v)
