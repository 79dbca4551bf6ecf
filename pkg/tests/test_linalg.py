import random

from hypothesis import given, strategies as st

from iotacurves import linalg


def _invertible(rng, n):
    while True:
        m = [rng.getrandbits(n) for _ in range(n)]
        if linalg.rows_rank(m) == n:
            return m


@given(st.integers(1, 8), st.integers(0, 10**6))
def test_inverse(n, seed):
    m = _invertible(random.Random(seed), n)
    assert linalg.rows_mul(m, linalg.rows_inverse(m)) == linalg.identity_rows(n)


@given(st.lists(st.integers(0, 255), min_size=1, max_size=8))
def test_transpose_involution(rows):
    t = linalg.rows_transpose(rows, 8)
    assert linalg.rows_transpose(t, len(rows)) == rows


@given(st.lists(st.tuples(st.integers(0, 63), st.integers(0, 1)), max_size=8))
def test_solve_affine(eqs):
    out = linalg.solve_affine(eqs, 6)
    if out is None:
        # Inconsistent: some combination of rows gives 0 = 1.
        assert any(
            not _combo(eqs, mask)[0] and _combo(eqs, mask)[1]
            for mask in range(1, 1 << len(eqs)))
        return
    part, kernel = out
    for row, rhs in eqs:
        assert bin(row & part).count("1") % 2 == rhs
        for k in kernel:
            assert bin(row & k).count("1") % 2 == 0
    assert linalg.rows_rank(kernel) == len(kernel)
    assert len(kernel) == 6 - linalg.rows_rank([r for r, _ in eqs])


def _combo(eqs, mask):
    row = rhs = 0
    for i, (r, b) in enumerate(eqs):
        if mask >> i & 1:
            row ^= r
            rhs ^= b
    return row, rhs


def test_frac_rank():
    assert linalg.frac_rank([[0b10, 0b100], [0b100, 0b1000]]) == 1
    assert linalg.frac_rank([[0b10, 0], [0, 0b100]]) == 2
    assert linalg.frac_rank([[0, 0]]) == 0


def test_eval_at_one_and_kron():
    assert linalg.eval_at_one([[0b11, 0b10], [0, 0b111]]) == [0b10, 0b10]
    k = linalg.kron(linalg.identity(2), [[0, 0b10], [0, 0]])
    assert k[0][1] == 0b10 and k[2][3] == 0b10 and sum(map(sum, k)) == 4
