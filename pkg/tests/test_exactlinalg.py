import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from qweier.errors import ShapeError
from qweier.exactlinalg import RatMatrix, det_bareiss, echelon_reduce, rank


def det_by_cofactors(m):
    """Independent oracle: Laplace expansion along the first row."""
    n = m.rows
    if n == 0:
        return F(1)
    if n == 1:
        return m.entries[0][0]
    total = F(0)
    for j in range(n):
        if m.entries[0][j] == 0:
            continue
        minor = RatMatrix(
            [
                [m.entries[i][k] for k in range(n) if k != j]
                for i in range(1, n)
            ],
            cols=n - 1,
        )
        total += (-1) ** j * m.entries[0][j] * det_by_cofactors(minor)
    return total


small_entries = st.fractions(min_value=-6, max_value=6, max_denominator=4)


@st.composite
def small_matrices(draw, max_dim=5, square=False):
    r = draw(st.integers(min_value=1, max_value=max_dim))
    c = r if square else draw(st.integers(min_value=1, max_value=max_dim))
    rows = draw(
        st.lists(
            st.lists(small_entries, min_size=c, max_size=c),
            min_size=r,
            max_size=r,
        )
    )
    return RatMatrix(rows, cols=c)


# -- echelon_reduce -----------------------------------------------------------


def test_identity_is_fixed():
    r = echelon_reduce(RatMatrix.identity(3))
    assert r.echelon == RatMatrix.identity(3)
    assert r.rank == 3
    assert r.pivots == [0, 1, 2]


def test_proportional_rows_leave_a_relation():
    r = echelon_reduce(RatMatrix([[1, 2], [2, 4]]))
    assert r.rank == 1
    assert r.echelon.entries[1] == (F(0), F(0))
    relation = r.transform.entries[1]
    # (-2, 1) up to sign and content
    assert relation in ((F(-2), F(1)), (F(2), F(-1)))


def test_empty_matrix():
    r = echelon_reduce(RatMatrix([], cols=4))
    assert r.rank == 0 and r.pivots == []


def test_rows_are_content_normalized():
    r = echelon_reduce(RatMatrix([[F(2, 3), F(4, 3)], [0, F(5)]]))
    assert r.echelon.entries[0] == (F(1), F(2))
    assert r.echelon.entries[1] == (F(0), F(1))


def test_leading_entries_positive():
    r = echelon_reduce(RatMatrix([[-3, 6], [0, -7]]))
    assert r.echelon.entries[0][0] > 0
    assert r.echelon.entries[1][1] > 0


@given(small_matrices())
@settings(max_examples=120)
def test_transform_times_input_is_echelon(m):
    r = echelon_reduce(m)
    assert r.transform.mul(m) == r.echelon
    assert det_bareiss(r.transform) != 0


@given(small_matrices())
def test_pivots_strictly_increase(m):
    r = echelon_reduce(m)
    assert all(a < b for a, b in zip(r.pivots, r.pivots[1:]))
    assert r.rank == len(r.pivots)
    # zero rows come last
    for i in range(r.rank, m.rows):
        assert all(x == 0 for x in r.echelon.entries[i])


@given(small_matrices())
def test_echelon_is_idempotent_up_to_normalization(m):
    first = echelon_reduce(m)
    second = echelon_reduce(first.echelon)
    assert second.echelon == first.echelon
    assert second.pivots == first.pivots


@given(small_matrices(), st.randoms(use_true_random=False))
def test_pivot_set_invariant_under_row_permutation(m, rng):
    perm = list(range(m.rows))
    rng.shuffle(perm)
    shuffled = RatMatrix([m.entries[i] for i in perm], cols=m.cols)
    assert echelon_reduce(shuffled).pivots == echelon_reduce(m).pivots


# -- rank ----------------------------------------------------------------------


def test_rank_zero_matrix():
    assert rank(RatMatrix([[0, 0], [0, 0]])) == 0


def test_rank_identity():
    assert rank(RatMatrix.identity(4)) == 4


# -- det_bareiss -----------------------------------------------------------------


def test_det_identity():
    assert det_bareiss(RatMatrix.identity(5)) == 1


def test_det_swap():
    assert det_bareiss(RatMatrix([[0, 1], [1, 0]])) == -1


def test_det_requires_square():
    with pytest.raises(ShapeError):
        det_bareiss(RatMatrix([[1, 2, 3], [4, 5, 6]]))


def test_det_random_integer_matrices_match_cofactor_oracle():
    rng = random.Random(40434)
    for _ in range(25):
        n = rng.randint(1, 4)
        m = RatMatrix(
            [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)], cols=n
        )
        assert det_bareiss(m) == det_by_cofactors(m)


@given(small_matrices(max_dim=4, square=True))
@settings(max_examples=80)
def test_det_matches_cofactor_oracle(m):
    assert det_bareiss(m) == det_by_cofactors(m)


@given(small_matrices(max_dim=4, square=True))
def test_det_vanishes_iff_rank_deficient(m):
    assert (det_bareiss(m) == 0) == (rank(m) < m.rows)
