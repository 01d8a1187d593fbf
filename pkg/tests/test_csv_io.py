import numpy as np
import pytest

from Edrod.Data.csv_io import load_csv, save_csv
from Edrod.Exception.EdrodError import EdrodIOError, EmptyError, LabelError, ParseError
from Edrod.Model.Dataset import Dataset


def write(tmp_path, text, name="data.csv"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_load_with_header_and_label(tmp_path):
    path = write(tmp_path, "a,b,label\n1.0,2.0,0\n3.5,-1,1\n0,0,0\n")
    data = load_csv(path, label_column="label")
    assert data.samples.shape == (3, 2)
    assert data.labels.tolist() == [0, 1, 0]
    assert data.feature_names == ("a", "b")
    assert data.samples[1].tolist() == [3.5, -1.0]


def test_label_column_by_index_without_header(tmp_path):
    path = write(tmp_path, "1,2.5,3\n0,4.5,6\n1,7.5,9\n")
    data = load_csv(path, label_column=0, has_header=False)
    assert data.labels.tolist() == [1, 0, 1]
    assert data.samples[:, 0].tolist() == [2.5, 4.5, 7.5]
    assert data.feature_names is None


def test_unlabelled_file(tmp_path):
    data = load_csv(write(tmp_path, "x,y\n1,2\n3,4\n"))
    assert not data.has_labels
    assert data.d == 2


def test_nan_is_rejected_with_its_row(tmp_path):
    path = write(tmp_path, "a,b\n1,2\n3,NaN\n5,6\n")
    with pytest.raises(ParseError) as excinfo:
        load_csv(path)
    assert excinfo.value.row == 2
    assert excinfo.value.column == "b"
    assert "row 2" in excinfo.value.diagnostic()


def test_text_cell_is_rejected(tmp_path):
    with pytest.raises(ParseError):
        load_csv(write(tmp_path, "a,b\n1,two\n"))


def test_non_binary_label(tmp_path):
    with pytest.raises(LabelError):
        load_csv(write(tmp_path, "a,label\n1,0\n2,2\n"), label_column="label")


def test_unknown_label_column(tmp_path):
    with pytest.raises(ParseError):
        load_csv(write(tmp_path, "a,b\n1,0\n2,1\n"), label_column="target")


def test_empty_files(tmp_path):
    with pytest.raises(EmptyError):
        load_csv(write(tmp_path, "", name="empty.csv"))
    with pytest.raises(EmptyError):
        load_csv(write(tmp_path, "a,b\n", name="header_only.csv"))


def test_missing_file(tmp_path):
    with pytest.raises(EdrodIOError):
        load_csv(str(tmp_path / "nope.csv"))


def test_comment_lines_are_skipped(tmp_path):
    path = write(tmp_path, "# edrod 0.1.0\n# config: {}\nx,label\n0.5,0\n1.5,1\n")
    data = load_csv(path, label_column="label")
    assert data.samples[:, 0].tolist() == [0.5, 1.5]


def test_round_trip_is_exact(tmp_path):
    rng = np.random.default_rng(61)
    path = write(tmp_path, "")
    samples = rng.normal(size=(25, 3)) * 10.0 ** rng.integers(-8, 8, size=(25, 3))
    labels = (rng.uniform(size=25) < 0.3).astype(int)

    original = Dataset(samples=samples, labels=labels)
    save_csv(original, path, header={"seed": 1})
    loaded = load_csv(path, label_column="label")
    assert np.array_equal(loaded.samples, original.samples)
    assert np.array_equal(loaded.labels, original.labels)
    assert loaded.feature_names == ("x0", "x1", "x2")


def test_shortest_float_text_parses_back_exactly(tmp_path):
    rng = np.random.default_rng(62)
    values = rng.normal(size=2000) * 10.0 ** rng.integers(-300, 300, size=2000)
    lines = ["a"] + [repr(float(value)) for value in values]
    data = load_csv(write(tmp_path, "\n".join(lines) + "\n"))
    assert np.array_equal(data.samples[:, 0], values)


def test_label_header_is_used_by_default(tmp_path):
    path = write(tmp_path, "")
    save_csv(Dataset(samples=np.arange(8.0).reshape(4, 2), labels=np.array([0, 1, 0, 0])), path)
    data = load_csv(path)
    assert data.labels.tolist() == [0, 1, 0, 0]
    assert data.feature_names == ("x0", "x1")


def test_ignore_labels_drops_the_label_column(tmp_path):
    path = write(tmp_path, "a,label\n1,0\n2,1\n3,0\n")
    data = load_csv(path, ignore_labels=True)
    assert not data.has_labels
    assert data.feature_names == ("a",)
    with pytest.raises(ValueError):
        load_csv(path, label_column="label", ignore_labels=True)
