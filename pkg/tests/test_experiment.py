import pytest

from hypertour.errors import ConfigError
from hypertour.experiment import parse_config, run_experiment, thread_count


def _cfg(text):
    return parse_config(text)


@pytest.mark.parametrize(
    "text",
    [
        "campaign = degenerate-sweep\ngrid = 3:7\ntrials = 4\nseed = 3\n",
        "campaign = lemma-sweep\ngrid = 3:8 4:7\ntrials = 3\nineq_kmax = 6\nineq_nspan = 8\n",
        "campaign = pancyclic-sweep\ngrid = 3:7\ntrials = 2\n",
        "campaign = cover-sweep\ngrid = 3:6\ntrials = 5\nmode = leading\n",
        "campaign = kings-sweep\ngrid = 3:7 4:8\ntrials = 3\n",
        "campaign = witness-search\ngrid = 3:5\ntrials = 1\nbudget = 3000\n",
    ],
)
def test_campaigns_pass_and_are_stable(text):
    cfg = _cfg(text)
    one = run_experiment(cfg, threads=1)
    assert one.passed, one.text()
    assert one.text().endswith("verdict=pass\n")
    assert run_experiment(cfg, threads=1).text() == one.text()
    assert run_experiment(cfg, threads=2).text() == one.text()


def test_cover_sweep_closure_reports_failures():
    cfg = _cfg("campaign = cover-sweep\ngrid = 3:3\ntrials = 5\ndensities = 1.0\n")
    r = run_experiment(cfg, threads=1)
    assert not r.passed
    assert any(line.startswith("fail ") and "seed=" in line for line in r.lines)


def test_report_layout():
    r = run_experiment(_cfg("campaign = kings-sweep\ngrid = 3:7\ntrials = 2\nseed = 9\n"), threads=1)
    text = r.text()
    assert text.splitlines()[0] == "report=1"
    assert "case k=3 n=7 trials=2 passed=2 failed=0" in text
    assert "seconds=" not in text
    timed = run_experiment(_cfg("campaign = kings-sweep\ngrid = 3:7\ntrials = 1\ntiming = 1\n"), threads=1)
    assert "seconds=" in timed.text()


@pytest.mark.parametrize(
    "text",
    [
        "grid = 3:7\n",
        "campaign = degenerate-sweep\n",
        "campaign = degenerate-sweep\ngrid = 3\n",
        "campaign = degenerate-sweep\ngrid = 5:4\n",
        "campaign = degenerate-sweep\ngrid = 3:7\ncolour = red\n",
        "campaign = degenerate-sweep\ngrid = 3:7\ntrials = 1\ntrials = 2\n",
        "campaign = degenerate-sweep\ngrid = 3:7\ntrials = many\n",
        "campaign = cover-sweep\ngrid = 3:6\ndensities = 1.5\n",
        "campaign = cover-sweep\ngrid = 3:6\nmode = sideways\n",
        "campaign degenerate-sweep\n",
    ],
)
def test_config_errors(text):
    with pytest.raises(ConfigError):
        parse_config(text)


def test_comments_and_threads(monkeypatch):
    cfg = parse_config("# sweep\ncampaign = kings-sweep  # inline\ngrid = 3:7, 4:7\n")
    assert cfg.grid == [(3, 7), (4, 7)]
    monkeypatch.setenv("HYPERTOUR_THREADS", "3")
    assert thread_count() == 3
    monkeypatch.setenv("HYPERTOUR_THREADS", "x")
    with pytest.raises(ConfigError):
        thread_count()
