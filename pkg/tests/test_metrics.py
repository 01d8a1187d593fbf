import numpy as np
import pytest
from sklearn.metrics import roc_auc_score

from Edrod.Evaluation.metrics import (
    confusion_coloring,
    fit_runtime_exponent,
    rank_methods,
    roc_auc,
    summarize_distribution,
)
from Edrod.Exception.EdrodError import InvalidScores, SingleClassError
from Edrod.Model.ConfusionColoring import Color


def test_auc_examples():
    scores = [0.9, 0.8, 0.2, 0.1]
    assert roc_auc(scores, [1, 1, 0, 0]).auc == 1.0
    assert roc_auc(scores, [0, 0, 1, 1]).auc == 0.0
    tied = roc_auc([0.5, 0.5, 0.5, 0.5], [1, 0, 1, 0])
    assert tied.auc == 0.5
    assert tied.tie_adjusted
    assert (tied.n_pos, tied.n_neg) == (2, 2)


def test_auc_single_class():
    with pytest.raises(SingleClassError):
        roc_auc([0.1, 0.2], [0, 0])
    with pytest.raises(SingleClassError):
        roc_auc([0.1, 0.2], [1, 1])


def test_auc_rejects_nan_and_positive_infinity():
    with pytest.raises(InvalidScores):
        roc_auc([0.1, np.nan], [0, 1])
    with pytest.raises(InvalidScores):
        roc_auc([0.1, np.inf], [0, 1])


def test_negative_infinity_ranks_lowest():
    assert roc_auc([-np.inf, 1.0, 2.0], [0, 1, 1]).auc == 1.0
    assert roc_auc([-np.inf, 1.0, 2.0], [1, 0, 0]).auc == 0.0


def test_auc_invariant_to_monotone_transforms():
    rng = np.random.default_rng(51)
    scores = rng.normal(size=60)
    labels = (rng.uniform(size=60) < 0.3).astype(int)
    labels[:2] = [0, 1]
    base = roc_auc(scores, labels).auc
    assert roc_auc(np.exp(scores), labels).auc == base
    assert roc_auc(3.0 * scores - 7.0, labels).auc == base
    assert roc_auc(scores ** 3, labels).auc == base
    assert roc_auc(-scores, labels).auc + base == pytest.approx(1.0, abs=1e-12)


def test_auc_agrees_with_sklearn_on_ties():
    rng = np.random.default_rng(52)
    scores = np.round(rng.normal(size=200), 1)
    labels = (rng.uniform(size=200) < 0.2).astype(int)
    assert roc_auc(scores, labels).auc == pytest.approx(roc_auc_score(labels, scores), abs=1e-12)


def test_coloring_perfect_scorer():
    coloring = confusion_coloring([5, 4, 1, 0, 2], [1, 1, 0, 0, 0], top_n=2)
    assert (coloring.green, coloring.yellow, coloring.purple, coloring.red) == (3, 2, 0, 0)
    assert coloring.per_sample.tolist() == [Color.YELLOW, Color.YELLOW, Color.GREEN, Color.GREEN, Color.GREEN]


def test_coloring_flag_everything():
    rng = np.random.default_rng(53)
    labels = np.r_[np.ones(4, dtype=int), np.zeros(11, dtype=int)]
    coloring = confusion_coloring(rng.normal(size=15), labels, top_n=15)
    assert (coloring.yellow, coloring.purple, coloring.green, coloring.red) == (4, 11, 0, 0)


def test_coloring_invariants():
    rng = np.random.default_rng(54)
    for _ in range(20):
        n = int(rng.integers(5, 50))
        labels = np.zeros(n, dtype=int)
        labels[rng.choice(n, size=int(rng.integers(1, n)), replace=False)] = 1
        n_pos = int(labels.sum())
        coloring = confusion_coloring(np.round(rng.normal(size=n), 1), labels, top_n=n_pos)
        assert coloring.green + coloring.yellow + coloring.purple + coloring.red == n
        assert coloring.yellow + coloring.purple == n_pos
        assert coloring.yellow + coloring.red == n_pos
        assert coloring.green + coloring.purple == n - n_pos
        assert coloring.purple == coloring.red


def test_coloring_cutoff_ties_go_to_lower_index():
    coloring = confusion_coloring([1.0, 1.0, 1.0, 0.0], [0, 1, 0, 0], top_n=1)
    assert coloring.per_sample[0] is Color.PURPLE
    assert coloring.per_sample[1] is Color.RED
    assert coloring.counts() == {"top_n": 1, "green": 2, "yellow": 0, "purple": 1, "red": 1}


def test_coloring_rejects_bad_cutoff():
    with pytest.raises(ValueError):
        confusion_coloring([0.1, 0.2], [0, 1], top_n=0)
    with pytest.raises(ValueError):
        confusion_coloring([0.1, 0.2], [0, 1], top_n=3)


def test_rank_methods():
    table = {"a": {"x": 0.9, "y": 0.8}, "b": {"x": 0.7, "y": 0.7}}
    ranked = rank_methods(table)
    assert ranked["x"] == pytest.approx({"average_rank": 1.25, "mean_auc": 0.8})
    assert ranked["y"] == pytest.approx({"average_rank": 1.75, "mean_auc": 0.75})


def test_summarize_distribution():
    assert summarize_distribution([5, 1, 4, 2, 3]) == {"min": 1.0, "q1": 2.0, "median": 3.0, "q3": 4.0, "max": 5.0}


def test_fit_runtime_exponent():
    n = [100, 200, 400, 800]
    assert fit_runtime_exponent(n, [3e-6 * m ** 2 for m in n]) == pytest.approx(2.0, abs=1e-9)
    with pytest.raises(ValueError):
        fit_runtime_exponent([1, 2], [0.0, 1.0])
