# tests/test_cli.py
import io
import json

import pytest

from isetverify.graphs import graph6
from isetverify.graphs.constructions import complete_bipartite, cycle
from isetverify.main import build_parser, load_settings, main
from isetverify.models.cli_config import CliConfig


@pytest.fixture
def stdin(monkeypatch):
    def feed(text):
        monkeypatch.setattr("sys.stdin", io.StringIO(text))
    return feed


@pytest.fixture(autouse=True)
def _isolated_cwd(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)


def lines(capsys):
    return capsys.readouterr().out.splitlines()


def test_count_one_size(capsys, stdin):
    stdin(graph6.encode(complete_bipartite(2, 3)) + "\n")
    assert main(["count", "--t", "3"]) == 0
    assert lines(capsys) == ["1"]


def test_count_whole_vector(capsys, stdin):
    stdin(graph6.encode(cycle(5)) + "\n\n" + graph6.encode(cycle(4)) + "\n")
    assert main(["count", "--all"]) == 0
    assert lines(capsys) == ["1,5,5 total=11", "1,4,2 total=7"]


def test_count_json(capsys, stdin):
    stdin(graph6.encode(cycle(5)) + "\n")
    assert main(["count", "--t", "2", "--format", "json"]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record["counts"] == [1, 5, 5]
    assert record["count"] == 5


def test_count_reports_the_bad_line(capsys, stdin):
    stdin(graph6.encode(cycle(5)) + "\nnot graph6!\n")
    assert main(["count"]) == 2
    assert "line 2" in capsys.readouterr().err


def test_negative_size_is_a_usage_error(capsys, stdin):
    stdin(graph6.encode(cycle(5)) + "\n")
    assert main(["count", "--t", "-1"]) == 2


def test_construct(capsys):
    assert main(["construct", "windmill", "--n", "7"]) == 0
    g = graph6.decode(lines(capsys)[0])
    assert g.degree(0) == 6

    assert main(["construct", "conjecture_multipartite", "--n", "5", "--delta", "3", "--canonical"]) == 0
    (form,) = lines(capsys)
    assert form == graph6.encode(graph6.decode(form))
    assert sorted(graph6.decode(form).degrees()) == [3, 3, 3, 3, 4]

    assert main(["construct", "extremal_plus", "--delta", "2", "--n", "5", "--inside", "0-1", "--canonical"]) == 0
    assert lines(capsys) == ["DF{"]


def test_construct_bad_parameters(capsys):
    assert main(["construct", "cycle", "--k", "2"]) == 2
    assert main(["construct", "disjoint_union", "--left", "Bw"]) == 2
    assert "--left and --right" in capsys.readouterr().err


def test_construct_then_count_through_files(tmp_path, capsys):
    target = tmp_path / "k33.g6"
    assert main(["construct", "complete_bipartite", "--a", "3", "--b", "3", "-o", str(target)]) == 0
    assert main(["count", "--all", "-i", str(target)]) == 0
    assert lines(capsys) == ["1,6,6,2 total=15"]


def test_critical(capsys, stdin):
    stdin("\n".join(graph6.encode(g) for g in (cycle(7), complete_bipartite(2, 3))) + "\n")
    assert main(["critical", "--delta", "2", "--decompose"]) == 0
    first, second = (json.loads(line) for line in lines(capsys))
    assert first["schema"] == 1
    assert first["criticality"]["critical"] is True
    assert (first["partition"]["h"], first["partition"]["ell"]) == (0, 7)
    assert second["criticality"]["critical"] is False
    assert (second["partition"]["h"], second["partition"]["ell"]) == (2, 3)
    assert first["decomposition"]["kind"] == "cycle"
    assert second["criticality"]["vertex_witness"] == 2
    assert second["decomposition"] is None
    assert "connected critical" in second["note"]


def test_critical_bowtie(capsys, stdin, bowtie):
    stdin(graph6.encode(bowtie) + "\n")
    assert main(["critical", "--delta", "2", "--decompose"]) == 0
    output = json.loads(capsys.readouterr().out)
    split = output["decomposition"]
    assert split["kind"] == "path_split"
    assert split["v1"] == split["v2"]


def test_critical_wrong_degree_names_the_line(capsys, stdin):
    stdin(graph6.encode(cycle(5)) + "\n" + graph6.encode(complete_bipartite(3, 3)) + "\n")
    assert main(["critical", "--delta", "2"]) == 2
    assert "line 2" in capsys.readouterr().err


def test_enumerate(capsys):
    assert main(["enumerate", "--n", "4", "--delta", "3"]) == 0
    assert lines(capsys) == ["C~"]
    assert main(["enumerate", "--n", "4", "--count"]) == 0
    assert lines(capsys) == ["11"]


def test_enumerate_shards_partition_the_output(capsys):
    assert main(["enumerate", "--n", "6", "--delta", "1"]) == 0
    full = lines(capsys)
    pieces = []
    for index in range(3):
        assert main(["enumerate", "--n", "6", "--delta", "1", "--shard-index", str(index), "--shard-count", "3"]) == 0
        pieces.extend(lines(capsys))
    assert sorted(pieces) == full


def test_verify_single_report(capsys):
    assert main(["verify", "--check", "size_t", "--n", "5", "--delta", "2", "--t", "3"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["schema"] == 1
    assert report["verdict"] == "holds"
    assert len(report["achievers"]) == 2


def test_verify_grid(capsys):
    assert main(["verify", "--check", "size_t", "--n", "5", "6", "--delta", "2", "--t", "3"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert [r["spec"]["n"] for r in document["reports"]] == [5, 6]
    assert {r["verdict"] for r in document["reports"]} == {"holds"}


def test_verify_expectations(capsys):
    assert main(["verify", "--check", "size_t", "--n", "6", "--delta", "2", "--t", "2"]) == 1
    assert main(["verify", "--check", "size_t", "--n", "6", "--delta", "2", "--t", "2", "--expect", "violated"]) == 0
    assert main(["verify", "--check", "t2", "--n", "6", "--delta", "2"]) == 0


def test_budget_exit_code(capsys):
    assert main(["verify", "--check", "size_t", "--n", "10", "--delta", "3", "--t", "4"]) == 3
    assert "allow" in capsys.readouterr().err
    assert main(["enumerate", "--n", "6", "--max-classes", "1"]) == 3


def test_suite(tmp_path, capsys):
    grid = tmp_path / "grid.json"
    grid.write_text(json.dumps({"checks": [{"check": "decompose", "params": {"n": [4, 5]}}]}))
    out = tmp_path / "reports"
    assert main(["suite", "--config", str(grid), "--out", str(out), "--csv"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["passed"] == 2
    assert (out / "summary.json").exists()
    assert (out / "summary.csv").exists()
    assert (out / "decompose_n4.json").exists()


def test_suite_missing_grid(tmp_path, capsys):
    assert main(["suite", "--config", str(tmp_path / "absent.json")]) == 2


def test_usage_errors(capsys):
    assert main(["enumerate", "--n", "4", "--shard-index", "3", "--shard-count", "3"]) == 2
    assert main(["enumerate", "--n", "4", "--jobs", "0"]) == 2
    with pytest.raises(SystemExit) as exit_info:
        main(["petersen"])
    assert exit_info.value.code == 2
    with pytest.raises(SystemExit):
        build_parser().parse_args(["count", "--t", "2", "--all"])


def test_shard_flags_belong_to_enumerate_only(capsys):
    for argv in (
        ["verify", "--check", "size_t", "--n", "5", "--delta", "2", "--t", "3", "--shard-index", "1"],
        ["count", "--shard-count", "2"],
        ["critical", "--delta", "2", "--shard-count", "2"],
    ):
        with pytest.raises(SystemExit) as exit_info:
            main(argv)
        assert exit_info.value.code == 2
    assert "--shard-index" in capsys.readouterr().err


def test_verify_equality_range(capsys):
    assert main(["verify", "--check", "equality_range", "--n", "6", "--delta", "2"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert [r["spec"]["t"] for r in document["reports"]] == [3, 4]
    assert {r["status"] for r in document["reports"]} == {"match"}


def test_settings_file_and_flag_precedence(tmp_path):
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"jobs": 3, "max_classes": 50, "report_dir": "out"}))
    settings = load_settings(CliConfig(subcommand="count", settings_file=str(path), max_classes=7))
    assert settings.jobs == 3
    assert settings.max_classes == 7
    assert settings.report_dir == "out"
    assert load_settings(CliConfig(subcommand="count", allow_n10=True)).allow_n10


def test_unreadable_settings_file(tmp_path, capsys):
    assert main(["count", "--settings", str(tmp_path / "absent.json")]) == 2
    assert "cannot read settings" in capsys.readouterr().err
