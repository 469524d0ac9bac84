import pytest
from hypothesis import given, strategies as st

from newtonfill.intlinalg import IntMatrix, det_bareiss, hnf, lll_gram, rank, saturated_row_basis, snf
from newtonfill.scenarios import torus_block_matrix

matrices = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=m, max_size=m)
    )
)


def det_oracle(rows):
    # cofactor expansion
    if len(rows) == 1:
        return rows[0][0]
    return sum(
        (-1) ** j * rows[0][j] * det_oracle([r[:j] + r[j + 1:] for r in rows[1:]])
        for j in range(len(rows))
    )


def test_det_examples():
    assert det_bareiss(IntMatrix.identity(3)) == 1
    assert det_bareiss([[0, 1], [1, 0]]) == -1
    assert abs(det_bareiss(torus_block_matrix(5, 2))) == 1
    with pytest.raises(ValueError):
        det_bareiss([[1, 2, 3]])


@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_matches_cofactor_expansion(rows):
    assert det_bareiss(rows) == det_oracle(rows)


def test_hnf_examples():
    H, U = hnf(IntMatrix.identity(3))
    assert H == IntMatrix.identity(3) and U == IntMatrix.identity(3)
    H, U = hnf([[2, 0], [0, 3]])
    assert H == IntMatrix.of([[2, 0], [0, 3]]) and U == IntMatrix.identity(2)
    n = 2
    pts = [(1, -1, 0), (n, -n, 0), (0, 0, -2 * n)]
    diffs = [[a - b for a, b in zip(p, pts[0])] for p in pts[1:]]
    assert rank(diffs) == 2


@given(matrices)
def test_hnf_shape(rows):
    H, U = hnf(rows)
    assert U @ IntMatrix.of(rows) == H
    assert abs(det_bareiss(U)) == 1
    lead = -1
    for r in H.rows:
        if not any(r):
            lead = len(r)
            continue
        c = next(j for j, x in enumerate(r) if x)
        assert c > lead and r[c] > 0
        for above in H.rows[: H.rows.index(r)]:
            assert 0 <= above[c] < r[c]
        lead = c


@given(matrices)
def test_snf_shape(rows):
    D, U, V = snf(rows)
    assert U @ IntMatrix.of(rows) @ V == D
    assert abs(det_bareiss(U)) == 1 and abs(det_bareiss(V)) == 1
    diag = [D[i, i] for i in range(min(D.shape))]
    for i in range(D.nrows):
        for j in range(D.ncols):
            if i != j:
                assert D[i, j] == 0
    nz = [d for d in diag if d]
    assert all(d > 0 for d in nz)
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert len(nz) == rank(rows)


def test_snf_example():
    D, _, _ = snf([[12, 6, 4, 8], [3, 9, 6, 12], [2, 16, 14, 28], [20, 10, 10, 20]])
    assert [D[i, i] for i in range(4)] == [1, 10, 30, 0]


@given(matrices)
def test_saturated_basis_is_dual_to_functionals(rows):
    B, W = saturated_row_basis(rows)
    r = len(B)
    assert r == rank(rows)
    if r:
        assert IntMatrix.of(B) @ IntMatrix.of(W) == IntMatrix.identity(r)
        for row in rows:
            c = IntMatrix.of(W).T @ row
            assert IntMatrix.of(B).T @ c == tuple(row)


def test_saturation_divides_out_common_factors():
    B, _ = saturated_row_basis([[2, 2], [4, 4]])
    assert [tuple(map(abs, b)) for b in B] == [(1, 1)]


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(st.integers(-20, 20), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_lll_is_unimodular(rows):
    if det_bareiss(rows) == 0:
        return
    b = IntMatrix.of(rows).T  # columns are basis vectors
    G = (b.T @ b).tolist()
    T, Tinv = lll_gram(G)
    assert IntMatrix.of(T) @ IntMatrix.of(Tinv) == IntMatrix.identity(len(rows))
    reduced = b @ IntMatrix.of(T)
    first = sum(x * x for x in reduced.T.rows[0])
    # |b1|^2 <= 2^(n-1) lambda1^2, and lambda1 is at most the shortest input vector
    assert first <= 2 ** (len(rows) - 1) * min(sum(x * x for x in col) for col in b.T.rows)
