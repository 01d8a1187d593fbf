import numpy as np
import pytest

from Edrod.Exception.EdrodError import DimensionError, KInvalid, KTooLarge
from Edrod.Linalg.distance import pairwise_euclidean
from Edrod.Neighbors.selection import select_neighbors


def test_collinear_points():
    matrix = pairwise_euclidean(np.array([[0.0], [1.0], [3.0], [7.0]]))
    table = select_neighbors(matrix, 1)
    assert table.indices[:, 0].tolist() == [1, 0, 1, 2]
    assert table.distances[:, 0].tolist() == [1.0, 1.0, 2.0, 4.0]


def test_k_equals_n_minus_one():
    matrix = pairwise_euclidean(np.array([[0.0], [1.0], [3.0], [7.0]]))
    table = select_neighbors(matrix, 3)
    assert table.indices.tolist() == [[1, 2, 3], [0, 2, 3], [1, 0, 3], [2, 1, 0]]
    assert table.tie_events == 0


def test_duplicates_prefer_lower_index():
    matrix = pairwise_euclidean(np.array([[0.0], [0.0], [0.0], [5.0]]))
    table = select_neighbors(matrix, 1)
    assert table.indices[:, 0].tolist() == [1, 0, 0, 0]
    assert table.tie_events == 4


def test_invalid_k():
    matrix = pairwise_euclidean(np.arange(4.0).reshape(-1, 1))
    with pytest.raises(KTooLarge):
        select_neighbors(matrix, 4)
    with pytest.raises(KInvalid):
        select_neighbors(matrix, 0)
    with pytest.raises(DimensionError):
        select_neighbors(np.zeros((3, 4)), 1)


def test_matches_full_sort_oracle():
    rng = np.random.default_rng(21)
    for _ in range(10):
        n = int(rng.integers(3, 30))
        matrix = pairwise_euclidean(rng.normal(size=(n, 3)))
        for k in range(1, n):
            table = select_neighbors(matrix, k)
            for i in range(n):
                others = np.array([j for j in range(n) if j != i])
                order = others[np.lexsort((others, matrix[i, others]))]
                assert table.indices[i].tolist() == order[:k].tolist()
                assert i not in table.indices[i]
                assert np.all(np.diff(table.distances[i]) >= 0)


def test_nested_neighborhoods():
    rng = np.random.default_rng(22)
    matrix = pairwise_euclidean(rng.normal(size=(20, 2)))
    for k in range(1, 19):
        small = select_neighbors(matrix, k)
        large = select_neighbors(matrix, k + 1)
        assert np.array_equal(small.indices, large.indices[:, :k])


def test_deterministic_and_thread_independent():
    rng = np.random.default_rng(23)
    matrix = pairwise_euclidean(np.round(rng.normal(size=(2000, 2)), 1))
    first = select_neighbors(matrix, 7, threads=1)
    second = select_neighbors(matrix, 7, threads=4)
    assert np.array_equal(first.indices, second.indices)
    assert np.array_equal(first.distances, second.distances)
    assert first.tie_events == second.tie_events
