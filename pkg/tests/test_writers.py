import json

import numpy as np
import pandas as pd

from Edrod import __version__
from Edrod.Data.writers import save_curve, save_scores, to_json
from Edrod.Model.ScoreReport import ScoreReport
from Edrod.Model.SweepCurve import SweepCurve


def report_with(ranking, log_domain=True, labels=None):
    return ScoreReport(method="edrod", ranking=np.asarray(ranking, dtype=float), log_domain=log_domain,
                       labels=None if labels is None else np.asarray(labels))


def test_csv_scores_have_header_and_one_row_per_sample(tmp_path):
    path = tmp_path / "scores.csv"
    save_scores(report_with([0.0, 1.0], labels=[0, 1]), str(path), header={"seed": 3})
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == f"# edrod {__version__}"
    assert lines[1] == '# config: {"seed": 3}'
    assert lines[2] == "index,score,log_score,rank,normalized,label"
    assert len(lines) == 5
    frame = pd.read_csv(path, comment="#")
    assert frame["rank"].tolist() == [2, 1]
    assert frame["score"].tolist() == [1.0, np.e]
    assert frame["normalized"].tolist() == [0.0, 1.0]


def test_jsonl_scores_reparse(tmp_path):
    path = tmp_path / "scores.jsonl"
    save_scores(report_with([2.0, 1.0, 3.0], log_domain=False), str(path), "jsonl", header={"k": 2})
    records = [json.loads(line) for line in path.read_text(encoding="utf-8").splitlines()]
    assert records[0] == {"config": {"k": 2}, "version": __version__}
    assert [record["rank"] for record in records[1:]] == [2, 3, 1]
    assert records[3]["log_score"] == np.log(3.0)


def test_non_finite_values_are_blank_or_null(tmp_path):
    report = report_with([-np.inf, 0.5, 800.0])
    csv_path, jsonl_path = tmp_path / "s.csv", tmp_path / "s.jsonl"
    save_scores(report, str(csv_path))
    save_scores(report, str(jsonl_path), "jsonl")
    text = csv_path.read_text(encoding="utf-8")
    assert "inf" not in text.lower() and "nan" not in text.lower()
    assert text.splitlines()[1] == "0,0.0,,3,"
    records = [json.loads(line) for line in jsonl_path.read_text(encoding="utf-8").splitlines()]
    assert records[0]["score"] == 0.0 and records[0]["log_score"] is None
    assert records[2]["score"] is None
    assert records[2]["log_score"] == 800.0


def test_curve_rows_and_summary(tmp_path):
    curve = SweepCurve("K", np.array([4.0, 12.0, 20.0, 28.0, 36.0]), np.array([0.9, 0.91, 0.9, 0.92, 0.9]))
    path = tmp_path / "curve.csv"
    save_curve(curve, str(path), header={"subcommand": "sweep-k"})
    lines = path.read_text(encoding="utf-8").splitlines()
    summary = json.loads(lines[2][len("# summary: "):])
    assert summary["points"] == 5
    assert summary["best"] == 28.0
    assert lines[3] == "K,auc"
    assert lines[4] == "4,0.9"
    assert len(lines) == 9


def test_to_json_is_stable():
    assert to_json({"b": np.int64(1), "a": np.float64(0.5), "c": float("nan")}) == '{"a": 0.5, "b": 1, "c": null}'
