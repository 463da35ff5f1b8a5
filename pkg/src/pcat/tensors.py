"""Exact linear maps attached to partitions, and matrix models.

Everything is computed over the rationals with int and Fraction entries, so
matrix identities hold on the nose rather than up to rounding. The map of a
partition p in P(k, l) at dimension n is the n^l by n^k zero-one matrix whose
(j, i) entry is 1 exactly when the multi-indices i (upper) and j (lower) are
constant on every block of p. Multi-indices are read big-endian: the first
tensor leg is the most significant digit.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from pcat.partition import InputError, Partition
from pcat.category import is_single_leg


class ResourceLimitError(RuntimeError):
    """A requested object exceeds the configured size budget."""


def _norm(x):
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return int(x)
        return x
    if isinstance(x, bool) or not isinstance(x, int):
        raise InputError(f"matrix entries must be int or Fraction, got {x!r}")
    return x


class ExactMatrix:
    """Immutable dense matrix with exact rational entries."""

    __slots__ = ("entries", "rows", "cols")

    def __init__(self, entries):
        entries = tuple(tuple(_norm(x) for x in row) for row in entries)
        if not entries or not entries[0]:
            raise InputError("matrices must have at least one row and column")
        width = len(entries[0])
        if any(len(row) != width for row in entries):
            raise InputError("ragged rows")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "rows", len(entries))
        object.__setattr__(self, "cols", width)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def identity(cls, n):
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n))
                         for i in range(n)))

    @classmethod
    def zeros(cls, rows, cols):
        return cls(((0,) * cols,) * rows)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"<ExactMatrix {self.rows}x{self.cols}>"

    def __add__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise InputError("shape mismatch in matrix sum")
        return ExactMatrix(tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)))

    def __mul__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise InputError("shape mismatch in matrix product")
        # partition maps are sparse zero-one matrices, so skipping zero
        # left entries is what keeps large products affordable
        cols = other.cols
        out = []
        for row in self.entries:
            acc = [0] * cols
            for t, a in enumerate(row):
                if a:
                    brow = other.entries[t]
                    for j in range(cols):
                        b = brow[j]
                        if b:
                            acc[j] += a * b
            out.append(tuple(acc))
        return ExactMatrix(out)

    def scale(self, c):
        c = _norm(c if isinstance(c, (int, Fraction)) else Fraction(c))
        return ExactMatrix(tuple(tuple(c * x for x in row)
                                 for row in self.entries))

    def transpose(self):
        return ExactMatrix(tuple(zip(*self.entries)))

    def tensor(self, other):
        """Kronecker product; first factor is the most significant index."""
        out = []
        for ra in self.entries:
            for rb in other.entries:
                out.append(tuple(a * b for a in ra for b in rb))
        return ExactMatrix(out)

    def is_zero(self):
        return all(x == 0 for row in self.entries for x in row)

    def to_text(self):
        lines = [f"{self.rows} {self.cols}"]
        for row in self.entries:
            lines.append(" ".join(str(x) for x in row))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        toks = text.split()
        if len(toks) < 2:
            raise InputError("matrix text needs a 'rows cols' header")
        try:
            rows, cols = int(toks[0]), int(toks[1])
            body = [Fraction(t) for t in toks[2:]]
        except (ValueError, ZeroDivisionError):
            raise InputError("bad matrix text") from None
        if len(body) != rows * cols:
            raise InputError(
                f"expected {rows * cols} entries, got {len(body)}")
        return cls(tuple(tuple(body[r * cols:(r + 1) * cols])
                         for r in range(rows)))


def t_map(p, n, max_entries=10 ** 6):
    """The linear map of p at dimension n, as an n^l by n^k ExactMatrix.

    The matrix has n^(k+l) entries; past max_entries the call refuses with
    ResourceLimitError rather than allocating.
    """
    if n < 1:
        raise InputError(f"dimension must be positive, got {n}")
    k, l = p.upper_count, p.lower_count
    if n ** (k + l) > max_entries:
        raise ResourceLimitError(
            f"t_map would hold n^(k+l) = {n ** (k + l)} entries, "
            f"budget is {max_entries}")
    nrows, ncols = n ** l, n ** k
    grid = [[0] * ncols for _ in range(nrows)]
    upper, lower = p.blocks[:k], p.blocks[k:]
    m = p.block_count
    # one nonzero per block value assignment; both indices read off the blocks
    for vals in itertools.product(range(n), repeat=m):
        col = 0
        for b in upper:
            col = col * n + vals[b - 1]
        row = 0
        for b in lower:
            row = row * n + vals[b - 1]
        grid[row][col] = 1
    return ExactMatrix(grid)


# ---------------------------------------------------------------------------
# matrix models

class MatrixModel:
    """An n by n matrix u over d by d exact blocks.

    Block (i, j), one-indexed, plays the role of the entry u_ij. Scalar
    models have d = 1. The constructor checks shape only; whether the model
    satisfies the reflection relations is a separate question, answered by
    hyperoct_relations_check.
    """

    def __init__(self, n, d, u):
        if n < 1 or d < 1:
            raise InputError("model needs n >= 1 and d >= 1")
        if not isinstance(u, ExactMatrix):
            u = ExactMatrix(u)
        if u.rows != n * d or u.cols != n * d:
            raise InputError(
                f"model matrix must be {n * d}x{n * d}, got {u.rows}x{u.cols}")
        self.n = n
        self.d = d
        self.u = u

    def block(self, i, j):
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise InputError(f"block index ({i}, {j}) out of range")
        d = self.d
        r0, c0 = (i - 1) * d, (j - 1) * d
        return ExactMatrix(tuple(row[c0:c0 + d]
                                 for row in self.u.entries[r0:r0 + d]))

    def __repr__(self):
        return f"<MatrixModel n={self.n} d={self.d}>"


def signed_permutation_model(signs, sigma):
    """u[i][j] = signs[j] when i = sigma(j), zero otherwise (one-indexed)."""
    n = len(signs)
    if sorted(sigma) != list(range(1, n + 1)):
        raise InputError(f"sigma must be a permutation of 1..{n}")
    if any(s not in (1, -1) for s in signs):
        raise InputError("signs must be +1 or -1")
    grid = [[0] * n for _ in range(n)]
    for j in range(n):
        grid[sigma[j] - 1][j] = signs[j]
    return MatrixModel(n, 1, ExactMatrix(grid))


def two_element_group():
    """Multiplication table and regular representation of the order-two
    group; element 0 is the identity."""
    table = ((0, 1), (1, 0))
    rep = (ExactMatrix.identity(2), ExactMatrix(((0, 1), (1, 0))))
    return table, rep


def crossed_model(sigma, labels, table, rep):
    """u[i][j] = [sigma(j) = i] * rep[labels[j]].

    table is a finite group's multiplication table (element 0 the identity),
    rep an exact orthogonal representation of it, and each assigned label an
    involutive element. All of that is validated here, because the point of
    the construction is that the relations then hold automatically.
    """
    n = len(sigma)
    if len(labels) != n:
        raise InputError("need one group element label per column")
    if sorted(sigma) != list(range(1, n + 1)):
        raise InputError(f"sigma must be a permutation of 1..{n}")
    size = len(table)
    if any(len(row) != size for row in table):
        raise InputError("multiplication table must be square")
    if any(table[0][a] != a or table[a][0] != a for a in range(size)):
        raise InputError("element 0 must act as the identity")
    rep = tuple(r if isinstance(r, ExactMatrix) else ExactMatrix(r)
                for r in rep)
    if len(rep) != size:
        raise InputError("need one representing matrix per group element")
    d = rep[0].rows
    if any(r.rows != d or r.cols != d for r in rep):
        raise InputError("representing matrices must share one square shape")
    ident = ExactMatrix.identity(d)
    if rep[0] != ident:
        raise InputError("the identity element must map to the identity matrix")
    for a in range(size):
        if rep[a].transpose() * rep[a] != ident:
            raise InputError(f"representing matrix {a} is not orthogonal")
        for b in range(size):
            if rep[a] * rep[b] != rep[table[a][b]]:
                raise InputError("rep is not a homomorphism for the table")
    for g in labels:
        if not 0 <= g < size:
            raise InputError(f"label {g} is not a table element")
        if table[g][g] != 0:
            raise InputError(f"element {g} is not involutive")
    zero = ExactMatrix.zeros(d, d)
    grid = []
    for i in range(1, n + 1):
        brow = [rep[labels[j]] if sigma[j] == i else zero for j in range(n)]
        grid.extend(tuple(itertools.chain.from_iterable(
            b.entries[r] for b in brow)) for r in range(d))
    return MatrixModel(n, d, ExactMatrix(grid))


def parse_model(text):
    """Model spec strings: signed:n=2;signs=+,-;sigma=2,1 or
    crossed:n=2;sigma=1,2;labels=1,1 (two-element group, regular
    representation)."""
    head, _, rest = text.partition(":")
    fields = {}
    for field in rest.split(";") if rest else []:
        key, eq, val = field.partition("=")
        if not eq:
            raise InputError(f"bad model field {field!r}")
        fields[key] = val

    def ints(key):
        try:
            return [int(v) for v in fields[key].split(",")]
        except (KeyError, ValueError):
            raise InputError(f"model spec needs {key}=..., got {text!r}") from None

    if head == "signed":
        sign_map = {"+": 1, "-": -1, "+1": 1, "-1": -1, "1": 1}
        try:
            signs = [sign_map[v] for v in fields["signs"].split(",")]
        except KeyError:
            raise InputError(f"model spec needs signs=+,-,... in {text!r}") from None
        sigma = ints("sigma")
        if len(signs) != len(sigma):
            raise InputError("signs and sigma must have the same length")
        model = signed_permutation_model(signs, tuple(sigma))
    elif head == "crossed":
        sigma = ints("sigma")
        labels = ints("labels")
        table, rep = two_element_group()
        model = crossed_model(tuple(sigma), tuple(labels), table, rep)
    else:
        raise InputError(f"unknown model kind {text!r}")
    if "n" in fields and int(fields["n"]) != model.n:
        raise InputError(f"declared n={fields['n']} does not match the model")
    return model


# ---------------------------------------------------------------------------
# intertwiner and relation checks

def intertwines(p, model, max_entries=10 ** 6):
    """Does the model's matrix intertwine along p, i.e. is
    T_p u^(tensor k) equal to u^(tensor l) T_p as matrices over the blocks?

    Both sides are built sparsely by sweeping block value assignments, so
    models with few nonzero entries per row cost about n^blocks work.
    """
    k, l = p.upper_count, p.lower_count
    n, d = model.n, model.d
    if n ** max(k, l) > max_entries:
        raise ResourceLimitError(
            f"intertwiner tables would exceed {max_entries} entries")
    if d == 1:
        u = [[model.u.entries[i][j] for j in range(n)] for i in range(n)]
        zero, one = 0, 1
    else:
        u = [[model.block(i + 1, j + 1) for j in range(n)] for i in range(n)]
        zero, one = ExactMatrix.zeros(d, d), ExactMatrix.identity(d)
    row_support = [[(j, u[i][j]) for j in range(n) if u[i][j] != zero]
                   for i in range(n)]
    col_support = [[(i, u[i][j]) for i in range(n) if u[i][j] != zero]
                   for j in range(n)]

    upper, lower = p.blocks[:k], p.blocks[k:]
    m = p.block_count
    lhs, rhs = {}, {}

    def spread(table, fixed_key, fixed_first, supports):
        # walk the nonzero choices leg by leg, keeping the product in order
        def walk(t, free_key, prod):
            if t == len(supports):
                key = (fixed_key, free_key) if fixed_first else (free_key, fixed_key)
                cur = table.get(key)
                table[key] = prod if cur is None else cur + prod
                return
            for idx, val in supports[t]:
                walk(t + 1, free_key + (idx,), prod * val)
        walk(0, (), one)

    for vals in itertools.product(range(n), repeat=m):
        r = tuple(vals[b - 1] for b in upper)
        j = tuple(vals[b - 1] for b in lower)
        # lhs entry block (j, i): sum over rows r consistent with j
        spread(lhs, j, True, [row_support[rt] for rt in r])
        # rhs entry block (j, i): here i = r is forced and s = j ranges
        spread(rhs, r, False, [col_support[st] for st in j])

    prune = (lambda tab: {key: v for key, v in tab.items() if v != zero})
    return prune(lhs) == prune(rhs)


def hyperoct_relations_check(model):
    """Do the blocks satisfy the reflection relations: every u_ij symmetric,
    every square u_ij^2 a projection, row and column sums of the squares
    equal to the identity, and all squares central among the blocks."""
    n, d = model.n, model.d
    blocks = [[model.block(i, j) for j in range(1, n + 1)]
              for i in range(1, n + 1)]
    ident = ExactMatrix.identity(d)
    squares = [[b * b for b in row] for row in blocks]
    for i in range(n):
        for j in range(n):
            b, sq = blocks[i][j], squares[i][j]
            if b.transpose() != b:
                return False
            if sq * sq != sq:
                return False
    for i in range(n):
        acc_row = squares[i][0]
        acc_col = squares[0][i]
        for t in range(1, n):
            acc_row = acc_row + squares[i][t]
            acc_col = acc_col + squares[t][i]
        if acc_row != ident or acc_col != ident:
            return False
    flat = [b for row in blocks for b in row]
    for sq in (sq for row in squares for sq in row):
        for b in flat:
            if sq * b != b * sq:
                return False
    return True


def word_projection_check(model, p, assignment):
    """For a single-leg p with blocks assigned to model entries, test that
    the ordered product of the assigned entries equals the ordered product
    of their squares. The model must pass the relations check first; that
    is a precondition, not part of the answer."""
    if p.upper_count != 0 or not is_single_leg(p):
        raise InputError(
            f"word projection check needs a single-leg partition, got {p.text()}")
    if not hyperoct_relations_check(model):
        raise InputError("model does not satisfy the reflection relations")
    entries = {}
    for b in range(1, p.block_count + 1):
        if b not in assignment:
            raise InputError(f"block {b} has no assigned entry")
        i, j = assignment[b]
        entries[b] = model.block(i, j)
    lhs = ExactMatrix.identity(model.d)
    rhs = lhs
    for b in p.blocks:
        a = entries[b]
        lhs = lhs * a
        rhs = rhs * (a * a)
    return lhs == rhs
