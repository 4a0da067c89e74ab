"""Exact linear algebra over the integers and rationals.

Matrices are immutable tuples of tuples of Python ints (arbitrary precision),
so they can be hashed and deduplicated exactly; no floating point is used
anywhere. Vectors are tuples of ints.

The workhorses are:

- Bareiss fraction-free elimination for determinants,
- Smith normal form with unimodular transform tracking, the single primitive
  behind integer kernels and span tests,
- exact rational Gaussian elimination for solving linear systems,
- congruence diagonalization over the rationals for inertia (signature)
  counts of symmetric forms.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError

IntMatrix = tuple[tuple[int, ...], ...]
IntVector = tuple[int, ...]


def freeze(rows: Iterable[Sequence[int]]) -> IntMatrix:
    """Copy a row-major nested sequence into the canonical immutable form."""
    out = tuple(tuple(int(x) for x in row) for row in rows)
    if out and any(len(row) != len(out[0]) for row in out):
        raise InputError("ragged matrix")
    return out


def freeze_vector(v: Sequence[int]) -> IntVector:
    return tuple(int(x) for x in v)


def identity(k: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k))


def zero(rows: int, cols: int) -> IntMatrix:
    return tuple((0,) * cols for _ in range(rows))


def transpose(m: IntMatrix) -> IntMatrix:
    return tuple(zip(*m)) if m else ()


def mat_neg(m: IntMatrix) -> IntMatrix:
    return tuple(tuple(-x for x in row) for row in m)


def mat_add(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c: int, m: IntMatrix) -> IntMatrix:
    return tuple(tuple(c * x for x in row) for row in m)


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if (len(a[0]) if a else 0) != len(b):
        raise InputError("matrix product dimension mismatch")
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_vec(m: IntMatrix, v: Sequence[int]) -> IntVector:
    if (len(m[0]) if m else 0) != len(v):
        raise InputError("matrix-vector dimension mismatch")
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def vec_mat(v: Sequence[int], m: IntMatrix) -> IntVector:
    return mat_vec(transpose(m), v)


def kron(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Kronecker product in lexicographic index order: (i,k) -> i*|b| + k."""
    nb = len(b)
    mb = len(b[0]) if b else 0
    return tuple(
        tuple(a[i][j] * b[k][l] for j in range(len(a[0]) if a else 0) for l in range(mb))
        for i in range(len(a))
        for k in range(nb)
    )


def is_square(m: IntMatrix) -> bool:
    return all(len(row) == len(m) for row in m)


def det(m: IntMatrix) -> int:
    """Determinant by Bareiss fraction-free elimination (exact, integer)."""
    if not is_square(m):
        raise InputError("determinant of non-square matrix")
    k = len(m)
    if k == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for t in range(k - 1):
        if a[t][t] == 0:
            for r in range(t + 1, k):
                if a[r][t] != 0:
                    a[t], a[r] = a[r], a[t]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[t][t]
        for i in range(t + 1, k):
            for j in range(t + 1, k):
                a[i][j] = (a[i][j] * pivot - a[i][t] * a[t][j]) // prev
            a[i][t] = 0
        prev = pivot
    return sign * a[k - 1][k - 1]


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (d, u, v) with u*m*v = d, u and v unimodular, d diagonal.

    The diagonal entries are nonnegative and each divides the next, so they
    are the invariant factors of the integer matrix.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [list(r) for r in m]
    u = [list(r) for r in identity(rows)]
    v = [list(r) for r in identity(cols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, c):  # row_dst += c * row_src
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, c):  # col_dst += c * col_src
        for r in a:
            r[dst] += c * r[src]
        for r in v:
            r[dst] += c * r[src]

    t = 0
    while t < rows and t < cols:
        # Locate a pivot of minimal absolute value in the remaining block.
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] != 0 and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])

        while True:
            reduced = True
            for i in range(t + 1, rows):
                q = a[i][t] // a[t][t]
                if q:
                    add_row(t, i, -q)
                if a[i][t] != 0:
                    swap_rows(t, i)  # strictly smaller remainder becomes pivot
                    reduced = False
            for j in range(t + 1, cols):
                q = a[t][j] // a[t][t]
                if q:
                    add_col(t, j, -q)
                if a[t][j] != 0:
                    swap_cols(t, j)
                    reduced = False
            if not reduced:
                continue
            # Pivot must divide the whole remaining block for the invariant
            # factor chain; fold an offending row in and restart reduction.
            offender = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if a[i][j] % a[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(offender, t, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1

    return freeze(a), freeze(u), freeze(v)


def invariant_factors(m: IntMatrix) -> tuple[int, ...]:
    d, _, _ = smith_normal_form(m)
    k = min(len(m), len(m[0]) if m else 0)
    return tuple(d[i][i] for i in range(k) if d[i][i] != 0)


def kernel_basis(m: IntMatrix) -> tuple[IntVector, ...]:
    """Primitive integer basis of {x : m @ x = 0}, via Smith normal form."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if cols == 0:
        return ()
    d, _, v = smith_normal_form(m)
    zero_cols = [j for j in range(cols) if j >= rows or d[j][j] == 0]
    return tuple(tuple(v[i][j] for i in range(cols)) for j in zero_cols)


def rank(m: IntMatrix) -> int:
    """Rank over the rationals, by integer row echelon (no transforms)."""
    rows = [list(r) for r in m]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        head = rows[r][c]
        for i in range(r + 1, nrows):
            if rows[i][c]:
                f = rows[i][c]
                rows[i] = [head * x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == nrows:
            break
    return r


def inverse_unimodular(m: IntMatrix) -> IntMatrix:
    """Exact integer inverse of a matrix with determinant +-1."""
    k = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(k)]
           for i, row in enumerate(m)]
    for t in range(k):
        piv = next((r for r in range(t, k) if aug[r][t] != 0), None)
        if piv is None:
            raise InputError("matrix is singular")
        aug[t], aug[piv] = aug[piv], aug[t]
        inv = Fraction(1) / aug[t][t]
        aug[t] = [x * inv for x in aug[t]]
        for r in range(k):
            if r != t and aug[r][t]:
                f = aug[r][t]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[t])]
    out = []
    for row in aug:
        ints = []
        for x in row[k:]:
            if x.denominator != 1:
                raise InputError("matrix inverse is not integral")
            ints.append(int(x))
        out.append(ints)
    return freeze(out)


def solve_right(a: IntMatrix, b: Sequence[Fraction | int]) -> tuple[Fraction, ...] | None:
    """Unique solution x of a @ x = b over Q, or None if none or not unique."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    aug = [[Fraction(a[i][j]) for j in range(cols)] + [Fraction(b[i])] for i in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = Fraction(1) / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if aug[i][cols] != 0:
            return None  # inconsistent
    if len(pivots) != cols:
        return None  # underdetermined
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = aug[i][cols]
    return tuple(x)


def inertia(g: IntMatrix) -> tuple[int, int, int]:
    """Inertia (n_plus, n_zero, n_minus) of a symmetric integer matrix.

    Exact congruence diagonalization over the rationals: simultaneous
    row/column operations, with the classical row-folding trick when the
    diagonal pivot vanishes but its row does not.
    """
    k = len(g)
    a = [[Fraction(x) for x in row] for row in g]
    for i in range(k):
        for j in range(k):
            if a[i][j] != a[j][i]:
                raise InputError("inertia of a non-symmetric matrix")
    npos = nzero = nneg = 0
    for t in range(k):
        if a[t][t] == 0:
            swap = next((j for j in range(t + 1, k) if a[j][j] != 0), None)
            if swap is not None:
                a[t], a[swap] = a[swap], a[t]
                for row in a:
                    row[t], row[swap] = row[swap], row[t]
            else:
                off = next((j for j in range(t + 1, k) if a[t][j] != 0), None)
                if off is None:
                    nzero += 1
                    continue
                # Fold row/col `off` into t: new diagonal entry is 2*a[t][off].
                a[t] = [x + y for x, y in zip(a[t], a[off])]
                for row in a:
                    row[t] = row[t] + row[off]
        pivot = a[t][t]
        if pivot == 0:
            nzero += 1
            continue
        if pivot > 0:
            npos += 1
        else:
            nneg += 1
        for i in range(t + 1, k):
            if a[i][t]:
                f = a[i][t] / pivot
                a[i] = [x - f * y for x, y in zip(a[i], a[t])]
                for row in a:
                    row[i] = row[i] - f * row[t]
    return npos, nzero, nneg


def is_lower_triangular(m: IntMatrix) -> bool:
    return all(m[i][j] == 0 for i in range(len(m)) for j in range(i + 1, len(m)))


def lower_triangular_inverse(m: IntMatrix) -> IntMatrix:
    """Integer inverse of a lower triangular matrix with +-1 diagonal."""
    k = len(m)
    inv = [[0] * k for _ in range(k)]
    for j in range(k):
        inv[j][j] = m[j][j]  # diagonal entries are +-1, self-inverse
        for i in range(j + 1, k):
            s = sum(m[i][p] * inv[p][j] for p in range(j, i))
            inv[i][j] = -s * m[i][i]
    return freeze(inv)
