"""Dense linear algebra over F2 and F2[V] on bit-encoded entries.

Two matrix shapes are used:

* F2 matrices as lists of row bitmasks (bit j of ``rows[i]`` is entry (i, j));
* polynomial matrices as lists of lists of ints, each int a bit-encoded
  polynomial in a single variable.
"""

from __future__ import annotations

from .coeff import clmul

Matrix = list[list[int]]


# -- F2 matrices as row bitmasks -------------------------------------------

def identity_rows(n: int) -> list[int]:
    return [1 << i for i in range(n)]


def rows_from_dense(m: list[list[int]]) -> list[int]:
    return [sum((x & 1) << j for j, x in enumerate(row)) for row in m]


def dense_from_rows(rows: list[int], ncols: int) -> list[list[int]]:
    return [[(r >> j) & 1 for j in range(ncols)] for r in rows]


def rows_mul(a: list[int], b: list[int]) -> list[int]:
    """Product ``a @ b`` of row-bitmask matrices."""
    out = []
    for r in a:
        acc = 0
        while r:
            low = r & -r
            acc ^= b[low.bit_length() - 1]
            r ^= low
        out.append(acc)
    return out


def rows_transpose(rows: list[int], ncols: int) -> list[int]:
    out = [0] * ncols
    for i, r in enumerate(rows):
        while r:
            low = r & -r
            out[low.bit_length() - 1] |= 1 << i
            r ^= low
    return out


def rows_rank(rows: list[int]) -> int:
    basis: dict[int, int] = {}
    rank = 0
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top in basis:
                r ^= basis[top]
            else:
                basis[top] = r
                rank += 1
                break
    return rank


def rows_inverse(rows: list[int]) -> list[int]:
    n = len(rows)
    work = [(r, 1 << i) for i, r in enumerate(rows)]
    for col in range(n):
        bit = 1 << col
        piv = next((i for i in range(col, n) if work[i][0] & bit), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular over F2")
        work[col], work[piv] = work[piv], work[col]
        pr, pi = work[col]
        for i in range(n):
            if i != col and work[i][0] & bit:
                work[i] = (work[i][0] ^ pr, work[i][1] ^ pi)
    return [w[1] for w in work]


def solve_affine(equations: list[tuple[int, int]], nvars: int):
    """Solve a system of F2 equations ``popcount(row & x) = rhs (mod 2)``.

    Returns ``(particular, kernel_basis)`` or ``None`` if inconsistent.
    """
    pivots: dict[int, tuple[int, int]] = {}
    for row, rhs in equations:
        for p, (prow, prhs) in pivots.items():
            if row >> p & 1:
                row ^= prow
                rhs ^= prhs
        if row == 0:
            if rhs:
                return None
            continue
        p = row.bit_length() - 1
        for q, (qrow, qrhs) in list(pivots.items()):
            if qrow >> p & 1:
                pivots[q] = (qrow ^ row, qrhs ^ rhs)
        pivots[p] = (row, rhs)
    particular = 0
    for p, (_, rhs) in pivots.items():
        if rhs:
            particular |= 1 << p
    kernel = []
    for free in range(nvars):
        if free in pivots:
            continue
        vec = 1 << free
        for p, (prow, _) in pivots.items():
            if prow >> free & 1:
                vec |= 1 << p
        kernel.append(vec)
    return particular, kernel


# -- polynomial matrices ---------------------------------------------------

def zeros(n: int, m: int | None = None) -> Matrix:
    return [[0] * (n if m is None else m) for _ in range(n)]


def identity(n: int) -> Matrix:
    out = zeros(n)
    for i in range(n):
        out[i][i] = 1
    return out


def mat_copy(a) -> Matrix:
    return [list(row) for row in a]


def mat_freeze(a) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(row) for row in a)


def mat_add(a, b) -> Matrix:
    return [[x ^ y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_mul(a, b) -> Matrix:
    if not a:
        return []
    inner = len(b)
    ncols = len(b[0]) if b else 0
    cols = [[(k, b[k][j]) for k in range(inner) if b[k][j]] for j in range(ncols)]
    out = []
    for row in a:
        nz = {k: x for k, x in enumerate(row) if x}
        out_row = []
        for col in cols:
            acc = 0
            for k, y in col:
                x = nz.get(k)
                if x:
                    acc ^= clmul(x, y)
            out_row.append(acc)
        out.append(out_row)
    return out


def mat_is_zero(a) -> bool:
    return not any(x for row in a for x in row)


def const_part(a) -> Matrix:
    return [[x & 1 for x in row] for row in a]


def kron(a, b) -> Matrix:
    n1, n2 = len(a), len(b)
    out = zeros(n1 * n2)
    for i1 in range(n1):
        for j1 in range(n1):
            x = a[i1][j1]
            if not x:
                continue
            for i2 in range(n2):
                for j2 in range(n2):
                    y = b[i2][j2]
                    if y:
                        out[i1 * n2 + i2][j1 * n2 + j2] = clmul(x, y)
    return out


def eval_at_one(a) -> list[int]:
    """Set the variable to 1: row-bitmask F2 matrix of coefficient parities."""
    return [sum((bin(x).count("1") & 1) << j for j, x in enumerate(row)) for row in a]


def frac_rank(a) -> int:
    """Rank over the fraction field F2(V), by fraction-free elimination."""
    work = [list(row) for row in a if any(row)]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(work)) if work[i][col]), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        prow = work[rank]
        p = prow[col]
        for i in range(rank + 1, len(work)):
            c = work[i][col]
            if c:
                # p * row_i - c * row_p clears column col without division.
                work[i] = [clmul(p, x) ^ clmul(c, y) for x, y in zip(work[i], prow)]
        rank += 1
        if rank == len(work):
            break
    return rank
