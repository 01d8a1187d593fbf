import numpy as np
import pytest

from Edrod.Exception.EdrodError import DegenerateData, DimensionError
from Edrod.Linalg.covariance import fit_covariance
from Edrod.Linalg.distance import mahalanobis, pairwise_mahalanobis
from Edrod.Model.CovarianceModel import CovarianceModel
from Edrod.Model.Dataset import Dataset
from Edrod.Model.RidgePolicy import RidgePolicy


def test_fit_covariance_unit_square():
    data = Dataset(samples=[[0, 0], [1, 0], [0, 1], [1, 1]])
    model = fit_covariance(data)
    assert np.allclose(model.covariance, [[1 / 3, 0], [0, 1 / 3]], atol=1e-15)
    assert model.ridge_used == 0.0
    assert np.allclose(model.mean, [0.5, 0.5])


def test_inverse_times_covariance_is_identity():
    rng = np.random.default_rng(3)
    model = fit_covariance(Dataset(samples=rng.normal(size=(50, 4))))
    assert np.array_equal(model.covariance, model.covariance.T)
    assert np.max(np.abs(model.inverse @ model.regularized() - np.eye(4))) <= 1e-8
    assert np.all(np.diag(model.cholesky) > 0)


def test_duplicated_column_gets_ridge():
    rng = np.random.default_rng(4)
    column = rng.normal(size=30)
    model = fit_covariance(Dataset(samples=np.column_stack([column, column])))
    assert model.ridge_used > 0
    assert np.all(np.isfinite(model.inverse))
    assert np.max(np.abs(model.inverse @ model.regularized() - np.eye(2))) <= 1e-8


def test_identical_rows_are_degenerate():
    with pytest.raises(DegenerateData):
        fit_covariance(Dataset(samples=np.ones((5, 3))))


def test_singular_without_ridge_is_degenerate():
    column = np.arange(10.0)
    with pytest.raises(DegenerateData):
        fit_covariance(Dataset(samples=np.column_stack([column, 2 * column])), RidgePolicy.disabled())


def test_mahalanobis_examples():
    diag = CovarianceModel.from_matrix(np.diag([2.0, 1.0]))
    assert mahalanobis([0, 0], [2, 0], diag) == pytest.approx(np.sqrt(2.0), rel=1e-12)
    assert mahalanobis([1.5, -2], [1.5, -2], diag) == 0.0

    identity = CovarianceModel.from_matrix(np.eye(3))
    a, b = np.array([1.0, 2.0, 3.0]), np.array([-1.0, 0.5, 4.0])
    assert mahalanobis(a, b, identity) == pytest.approx(np.linalg.norm(a - b), rel=1e-12)
    assert mahalanobis(a, b, identity) == mahalanobis(b, a, identity)


def test_mahalanobis_dimension_mismatch():
    model = CovarianceModel.from_matrix(np.eye(2))
    with pytest.raises(DimensionError):
        mahalanobis([0, 0, 0], [1, 1, 1], model)
    with pytest.raises(DimensionError):
        mahalanobis([0, 0], [1, 1, 1], model)


def test_pairwise_matches_double_loop():
    rng = np.random.default_rng(5)
    data = Dataset(samples=rng.normal(size=(10, 3)))
    model = fit_covariance(data)
    matrix = pairwise_mahalanobis(data, model)

    inverse = np.linalg.inv(np.cov(data.samples, rowvar=False))
    for i in range(10):
        for j in range(10):
            diff = data.samples[i] - data.samples[j]
            assert matrix[i, j] == pytest.approx(np.sqrt(diff @ inverse @ diff), abs=1e-10)
    assert np.array_equal(matrix, matrix.T)
    assert np.all(np.diag(matrix) == 0.0)


def test_two_samples():
    data = Dataset(samples=[[0.0, 1.0], [2.0, 5.0]])
    model = CovarianceModel.from_matrix(np.eye(2))
    matrix = pairwise_mahalanobis(data, model)
    m = mahalanobis(data.samples[0], data.samples[1], model)
    assert matrix[0, 0] == matrix[1, 1] == 0.0
    assert matrix[0, 1] == matrix[1, 0] == pytest.approx(m, rel=1e-12)


def test_triangle_inequality():
    rng = np.random.default_rng(6)
    data = Dataset(samples=rng.normal(size=(25, 3)))
    matrix = pairwise_mahalanobis(data, fit_covariance(data))
    for _ in range(200):
        i, j, k = rng.integers(0, 25, size=3)
        assert matrix[i, k] <= matrix[i, j] + matrix[j, k] + 1e-9


def test_affine_invariance():
    rng = np.random.default_rng(7)
    samples = rng.normal(size=(40, 3))
    transform = np.array([[2.0, 0.3, 0.0], [0.1, 1.0, -0.4], [0.0, 0.5, 3.0]])
    original = Dataset(samples=samples)
    mapped = Dataset(samples=samples @ transform.T)
    first = fit_covariance(original)
    second = fit_covariance(mapped)
    assert first.ridge_used == second.ridge_used == 0.0
    a = pairwise_mahalanobis(original, first)
    b = pairwise_mahalanobis(mapped, second)
    assert np.allclose(a, b, rtol=1e-6, atol=1e-12)


def test_pairwise_is_thread_count_independent():
    rng = np.random.default_rng(8)
    data = Dataset(samples=rng.normal(size=(600, 10)))
    model = fit_covariance(data)
    assert np.array_equal(pairwise_mahalanobis(data, model, threads=1),
                          pairwise_mahalanobis(data, model, threads=4))


def test_dataset_validation():
    from Edrod.Exception.EdrodError import DatasetError, InsufficientData, LabelError

    with pytest.raises(InsufficientData):
        Dataset(samples=[[1.0, 2.0]])
    with pytest.raises(DatasetError):
        Dataset(samples=[[1.0], [np.nan]])
    with pytest.raises(LabelError):
        Dataset(samples=[[1.0], [2.0]], labels=[0, 2])
    with pytest.raises(LabelError):
        Dataset(samples=[[1.0], [2.0]], labels=[0])
