import json

from Edrod.Business.ExperimentBusiness import ExperimentBusiness
from Edrod.Cli.Commands import Run


def test_bench_slope_is_near_quadratic(tmp_path):
    out = tmp_path / "bench.json"
    assert Run(["bench", "--n", "250,500,1000,2000", "--d", "10", "--output", str(out)]) == 0
    payload = json.loads(out.read_text(encoding="utf-8"))
    result = payload["result"]
    assert result["n"] == [250, 500, 1000, 2000]
    assert result["d"] == 10
    assert 1.7 <= result["exponent"] <= 2.3
    assert "generated_at" in payload["metadata"]
    assert payload["config"]["n_grid"] == [250, 500, 1000, 2000]


def test_bench_dispatches_one_event_per_size():
    business = ExperimentBusiness()
    seen = []
    business.dispatcher.subscribe("run_completed", lambda **kwargs: seen.append(kwargs["n"]))
    result = business.Bench([50, 100], dimension=3, repeats=1)
    assert seen == [50, 100]
    assert len(result.seconds) == 2


def test_bench_times_repeated_runs(monkeypatch):
    business = ExperimentBusiness()
    calls = []
    original = business._time_scorer

    def counting(data, detector, min_seconds):
        calls.append(min_seconds)
        return original(data, detector, min_seconds)

    monkeypatch.setattr(business, "_time_scorer", counting)
    result = business.Bench([40, 80], dimension=3, repeats=2, min_seconds=0.05)
    assert calls == [0.05] * 4
    assert all(seconds > 0.0 for seconds in result.seconds)
