"""Sparse exact linear algebra over a ScalarContext.

Vectors are dicts {index: nonzero Scalar}; matrices are dicts of such rows.
Elimination is deterministic: the pivot of a row is its first nonzero
column and rows are kept in fully reduced echelon form.
"""


class Matrix:
    __slots__ = ('nrows', 'ncols', 'rows', 'ctx')

    def __init__(self, nrows, ncols, ctx, rows=None):
        self.nrows, self.ncols, self.ctx = nrows, ncols, ctx
        self.rows = {i: r for i, r in (rows or {}).items() if r}

    @classmethod
    def from_entries(cls, nrows, ncols, ctx, entries):
        rows = {}
        for i, j, x in entries:
            row = rows.setdefault(i, {})
            row[j] = row[j] + x if j in row else x
            if not row[j]:
                del row[j]
        return cls(nrows, ncols, ctx, rows)

    @classmethod
    def from_dense(cls, dense, ctx):
        nrows = len(dense)
        ncols = len(dense[0]) if dense else 0
        return cls.from_entries(nrows, ncols, ctx, (
            (i, j, x if not isinstance(x, int) else ctx.from_int(x))
            for i, r in enumerate(dense) for j, x in enumerate(r) if x))

    @classmethod
    def zeros(cls, nrows, ncols, ctx):
        return cls(nrows, ncols, ctx)

    @classmethod
    def identity(cls, n, ctx):
        one = ctx.one()
        return cls(n, n, ctx, {i: {i: one} for i in range(n)})

    @classmethod
    def diagonal(cls, values, ctx):
        return cls(len(values), len(values), ctx, {i: {i: x} for i, x in enumerate(values) if x})

    @classmethod
    def from_columns(cls, nrows, columns, ctx):
        return cls.from_entries(nrows, len(columns), ctx, (
            (i, j, x) for j, col in enumerate(columns) for i, x in col.items()))

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        x = self.rows.get(i, {}).get(j)
        return self.ctx.zero() if x is None else x

    def items(self):
        for i, row in self.rows.items():
            for j, x in row.items():
                yield i, j, x

    def entry_count(self):
        return sum(len(r) for r in self.rows.values())

    def is_zero(self):
        return not self.rows

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.shape == other.shape
                and self.rows == other.rows)

    __hash__ = None

    def transpose(self):
        out = {}
        for i, row in self.rows.items():
            for j, x in row.items():
                out.setdefault(j, {})[i] = x
        return Matrix(self.ncols, self.nrows, self.ctx, out)

    @property
    def T(self):
        return self.transpose()

    def columns(self):
        return self.transpose().rows

    def column(self, j):
        return {i: row[j] for i, row in self.rows.items() if j in row}

    def apply(self, vec):
        out = {}
        for i, row in self.rows.items():
            acc = None
            for j, x in row.items():
                y = vec.get(j)
                if y is not None:
                    acc = x * y if acc is None else acc + x * y
            if acc is not None and acc:
                out[i] = acc
        return out

    def __matmul__(self, other):
        if isinstance(other, dict):
            return self.apply(other)
        if self.ncols != other.nrows:
            raise ValueError(f'shape mismatch {self.shape} @ {other.shape}')
        out = {}
        orows = other.rows
        for i, row in self.rows.items():
            acc = {}
            for k, a in row.items():
                brow = orows.get(k)
                if brow:
                    for j, b in brow.items():
                        acc[j] = acc[j] + a * b if j in acc else a * b
            acc = {j: x for j, x in acc.items() if x}
            if acc:
                out[i] = acc
        return Matrix(self.nrows, other.ncols, self.ctx, out)

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError(f'shape mismatch {self.shape} + {other.shape}')
        out = {i: dict(r) for i, r in self.rows.items()}
        for i, row in other.rows.items():
            acc = out.setdefault(i, {})
            for j, x in row.items():
                y = acc[j] + x if j in acc else x
                if y:
                    acc[j] = y
                else:
                    del acc[j]
        return Matrix(self.nrows, self.ncols, self.ctx, out)

    def __neg__(self):
        return Matrix(self.nrows, self.ncols, self.ctx,
                      {i: {j: -x for j, x in r.items()} for i, r in self.rows.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not c:
            return Matrix(self.nrows, self.ncols, self.ctx)
        return Matrix(self.nrows, self.ncols, self.ctx,
                      {i: {j: c * x for j, x in r.items()} for i, r in self.rows.items()})

    def kron(self, other):
        out = {}
        for i1, r1 in self.rows.items():
            for i2, r2 in other.rows.items():
                row = {}
                for j1, a in r1.items():
                    for j2, b in r2.items():
                        row[j1 * other.ncols + j2] = a * b
                out[i1 * other.nrows + i2] = row
        return Matrix(self.nrows * other.nrows, self.ncols * other.ncols, self.ctx, out)

    def submatrix(self, rows, cols):
        cpos = {c: k for k, c in enumerate(cols)}
        out = {}
        for a, i in enumerate(rows):
            row = self.rows.get(i)
            if row:
                sub = {cpos[j]: x for j, x in row.items() if j in cpos}
                if sub:
                    out[a] = sub
        return Matrix(len(rows), len(cols), self.ctx, out)

    def map_entries(self, fn, ctx=None):
        ctx = ctx or self.ctx
        return Matrix.from_entries(self.nrows, self.ncols, ctx,
                                   ((i, j, fn(x)) for i, j, x in self.items()))

    def specialize(self, ctx):
        return self.map_entries(ctx.specialize, ctx)

    def vectorize(self):
        n = self.ncols
        return {i * n + j: x for i, j, x in self.items()}

    def to_dense(self):
        zero = self.ctx.zero()
        return [[self.rows.get(i, {}).get(j, zero) for j in range(self.ncols)]
                for i in range(self.nrows)]

    def to_text(self):
        return [[x.to_text() for x in r] for r in self.to_dense()]

    def is_symmetric(self):
        return self == self.transpose()

    def __repr__(self):
        return f'Matrix({self.nrows}x{self.ncols}, {self.entry_count()} entries, {self.ctx.label})'


def vec_axpy(y, a, x):
    """y + a*x as a new sparse vector."""
    out = dict(y)
    for k, v in x.items():
        w = out[k] + a * v if k in out else a * v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def vec_scale(a, x):
    return {k: a * v for k, v in x.items()} if a else {}


class Echelon:
    """Incremental reduced row echelon form.

    With track=True every pivot row also carries its expression in the
    inserted vectors, so coordinates() can rewrite a vector of the span in
    terms of the independent inputs.
    """

    def __init__(self, ctx, track=False):
        self.ctx = ctx
        self.track = track
        self.rows = {}
        self.combos = {}
        self.count = 0
        self.independent = []

    @property
    def rank(self):
        return len(self.rows)

    @property
    def pivots(self):
        return sorted(self.rows)

    def reduce(self, vec, combo=None):
        vec = dict(vec)
        for c in [c for c in vec if c in self.rows]:
            f = vec[c]
            vec = vec_axpy(vec, -f, self.rows[c])
            if combo is not None:
                combo = vec_axpy(combo, -f, self.combos[c])
        return vec, combo

    def add(self, vec):
        """Insert vec; True iff it raised the rank."""
        ident = self.count
        self.count += 1
        combo = {ident: self.ctx.one()} if self.track else None
        vec, combo = self.reduce(vec, combo)
        if not vec:
            return False
        p = min(vec)
        inv = vec[p].inverse()
        vec = vec_scale(inv, vec)
        if combo is not None:
            combo = vec_scale(inv, combo)
        for c, row in self.rows.items():
            f = row.get(p)
            if f is not None:
                self.rows[c] = vec_axpy(row, -f, vec)
                if self.track:
                    self.combos[c] = vec_axpy(self.combos[c], -f, combo)
        self.rows[p] = vec
        if self.track:
            self.combos[p] = combo
        self.independent.append(ident)
        return True

    def contains(self, vec):
        return not self.reduce(vec)[0]

    def coordinates(self, vec):
        """{inserted id: coefficient} with vec = sum of coefficient * input, or None."""
        if not self.track:
            raise ValueError('coordinates need a tracking echelon')
        rest, _ = self.reduce(vec)
        if rest:
            return None
        # rows are fully reduced, so the coefficient of row c is vec[c]
        out = {}
        for c in sorted(c for c in vec if c in self.rows):
            out = vec_axpy(out, vec[c], self.combos[c])
        return out

    def basis(self):
        return [self.rows[c] for c in sorted(self.rows)]


def nullspace(rows, nvars, ctx):
    """Basis of {x : row.x = 0 for every row}; one vector per free column, ascending."""
    ech = Echelon(ctx)
    for r in rows:
        if r:
            ech.add(r)
    one = ctx.one()
    out = []
    for f in range(nvars):
        if f in ech.rows:
            continue
        vec = {f: one}
        for c, row in ech.rows.items():
            x = row.get(f)
            if x is not None:
                vec[c] = -x
        out.append(vec)
    return out


def solve(rows, rhs, nvars, ctx):
    """A particular solution (free variables zero) of rows.x = rhs, or None."""
    ech = Echelon(ctx)
    for r, b in zip(rows, rhs):
        aug = dict(r)
        if b:
            aug[nvars] = b
        if aug:
            ech.add(aug)
    if nvars in ech.rows:
        return None
    return {c: row[nvars] for c, row in ech.rows.items() if nvars in row}


def rank(vectors, ctx):
    ech = Echelon(ctx)
    for v in vectors:
        ech.add(v)
    return ech.rank


def inverse(m):
    """Exact inverse via Gauss-Jordan on [m | 1]."""
    n = m.nrows
    if n != m.ncols:
        raise ValueError(f'inverse of a non-square {m.shape} matrix')
    ech = Echelon(m.ctx)
    one = m.ctx.one()
    for i in range(n):
        row = dict(m.rows.get(i, {}))
        row[n + i] = one
        ech.add(row)
    if any(c >= n for c in ech.rows) or ech.rank < n:
        raise ZeroDivisionError('singular matrix')
    return Matrix(n, n, m.ctx, {c: {j - n: x for j, x in row.items() if j >= n}
                                for c, row in ech.rows.items()})


def matrix_rank(m):
    return rank(m.rows.values(), m.ctx)
