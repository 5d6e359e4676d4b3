import json
import logging

import pytest

from app.constants import settings
from app.core.groupinv import sharp_bipartite_block, sharp_combinatorial
from app.core.tree import parse_graph
from app.logger import PACKAGE_LOGGER, setup_logger
from app.models.matrix import ExactMatrix
from app.report_sections import matching_section, sharp_section
from main import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_sharp_edges_p5(capsys, fixture_path):
    code, out, _ = run(capsys, "sharp", fixture_path("p5.txt"), "--edges")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 6
    assert "1 4 -1/3" in lines and "2 5 -1/3" in lines and "1 2 2/3" in lines


def test_sharp_edges_star(capsys, fixture_path):
    code, out, _ = run(capsys, "sharp", fixture_path("star12.txt"))
    assert code == 0
    assert out.splitlines() == ["1 3 1/5", "2 3 2/5"]


def test_sharp_json_t6(capsys, fixture_path):
    code, out, _ = run(capsys, "sharp", fixture_path("t6.txt"), "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["schema"] == "sharptree/1"
    assert ["4", "5", "2/5"] in doc["sharp_edges"]
    assert doc["sharp_edges"] == sorted(doc["sharp_edges"])
    assert len(doc["input_digest"]) == 64


def test_sharp_dot(capsys, fixture_path):
    code, out, _ = run(capsys, "sharp", fixture_path("p5.txt"), "--dot")
    assert code == 0
    assert out.startswith('graph "sharp" {')
    assert '"1" -- "4" [label="-1/3"];' in out


@pytest.mark.parametrize("method", ["factorization", "bipartite_block"])
def test_sharp_methods_agree(capsys, fixture_path, method):
    _, expected, _ = run(capsys, "sharp", fixture_path("t1.txt"))
    _, out, _ = run(capsys, "sharp", fixture_path("t1.txt"), "--method", method)
    assert out == expected


def test_sharp_star_method_on_non_star(capsys, fixture_path):
    code, _, err = run(capsys, "sharp", fixture_path("p5.txt"), "--method", "star_closed_form")
    assert code == 1
    assert "NotAStar" in err


def test_edges_round_trip(capsys, fixture_path, t1):
    _, out, _ = run(capsys, "sharp", fixture_path("t1.txt"), "--edges")
    g = parse_graph(out)
    expected = sharp_combinatorial(t1).sharp_graph
    assert {frozenset((e.u, e.v)): e.weight for e in g.edges} == {
        frozenset((e.u, e.v)): e.weight for e in expected.edges
    }


@pytest.mark.parametrize("name", ["p5.txt", "t1.txt", "t6.txt", "star12.txt"])
def test_verify(capsys, fixture_path, name):
    code, out, _ = run(capsys, "verify", fixture_path(name))
    assert code == 0
    assert json.loads(out)["verify_report"]["agree"]


def test_verify_corrupted_file(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("1 2 one\n")
    code, out, err = run(capsys, "verify", str(bad))
    assert code == 1 and out == ""
    assert "ParseError" in err


def test_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "verify", str(tmp_path / "nope.txt"))
    assert code == 1


def test_analyze_star(capsys, fixture_path):
    code, out, _ = run(capsys, "analyze", fixture_path("star12.txt"))
    conditions = json.loads(out)["structure_report"]["four_conditions"]
    assert code == 0
    assert all(conditions.values())


def test_analyze_all(capsys, fixture_path):
    code, out, _ = run(capsys, "analyze", fixture_path("t1.txt"), "--all")
    doc = json.loads(out)
    assert code == 0
    for key in ("tree_summary", "matching_summary", "sharp_edges", "structure_report",
                "signature_report", "spectral_report", "class_t_report"):
        assert doc[key] is not None
    assert doc["matching_summary"]["m_value"] == "5"
    assert doc["class_t_report"]["caterpillar_edge_count"] == 7
    assert doc["signature_report"]["signature_exists"] is True


def test_matchings(capsys, fixture_path):
    code, out, _ = run(capsys, "matchings", fixture_path("p5.txt"))
    summary = json.loads(out)["matching_summary"]
    assert code == 0
    assert summary["count"] == 3 and summary["m_value"] == "3"


def test_signature_search_t6(capsys, fixture_path):
    code, out, _ = run(capsys, "signature", fixture_path("t6.txt"), "--search")
    report = json.loads(out)["signature_report"]
    assert code == 0
    assert report["signature_exists"] is False
    assert report["scanned"] == 32
    assert report["not_applicable"]


def test_signature_without_search_reports_not_in_class_t(capsys, fixture_path):
    code, out, _ = run(capsys, "signature", fixture_path("t6.txt"))
    report = json.loads(out)["signature_report"]
    assert code == 0
    assert report["signature_exists"] is None and report["not_applicable"]


def test_signature_t1(capsys, fixture_path):
    code, out, _ = run(capsys, "signature", fixture_path("t1.txt"))
    report = json.loads(out)["signature_report"]
    assert code == 0
    assert report["root"] == "4" and report["nonnegative"]
    assert report["signs"]["2"] == -1


def test_spectral(capsys, fixture_path):
    code, out, _ = run(capsys, "spectral", fixture_path("star12.txt"), "--tol", "1e-9")
    report = json.loads(out)["spectral_report"]
    assert code == 0
    assert abs(report["tau"] - 5 ** 0.5) < 1e-10


def test_matching_cap_exceeded(capsys, fixture_path):
    code, _, err = run(capsys, "matchings", fixture_path("p5.txt"), "--matching-cap", "2")
    assert code == 3
    assert "ResourceLimit" in err


def test_output_is_deterministic(capsys, fixture_path):
    first = run(capsys, "analyze", fixture_path("t6.txt"), "--all")
    second = run(capsys, "analyze", fixture_path("t6.txt"), "--all")
    assert first == second


def test_batch_keeps_input_order_and_takes_max_exit_code(capsys, fixture_path, tmp_path):
    bad = tmp_path / "cycle.txt"
    bad.write_text("1 2 1\n2 3 1\n1 3 1\n")
    code, out, err = run(capsys, "sharp", fixture_path("star12.txt"), str(bad), fixture_path("p5.txt"),
                         "--jobs", "2")
    assert code == 1
    assert out.splitlines()[:2] == ["1 3 1/5", "2 3 2/5"]
    assert len(out.splitlines()) == 8
    assert "NotATree" in err


def test_usage_errors_exit_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["sharp"])
    assert exc.value.code == 1


def test_verify_reports_disagreement(capsys, fixture_path, monkeypatch):
    def skewed_block(t):
        rows = sharp_bipartite_block(t).rows()
        rows[0][1] += 1
        rows[1][0] += 1
        return ExactMatrix(rows)

    monkeypatch.setattr(sharp_section, "sharp_bipartite_block", skewed_block)
    code, out, err = run(capsys, "verify", fixture_path("p5.txt"))
    report = json.loads(out)["verify_report"]
    assert code == 2
    assert report["agree"] is False
    assert report["mismatches"] == ["bipartite_block (1, 2): 5/3 != 2/3"]
    assert report["axioms"]["bipartite_block"] is False
    assert report["axioms"]["combinatorial"] is True
    assert "disagree" in err


def test_wide_star(capsys, tmp_path):
    star = tmp_path / "star1100.txt"
    star.write_text("".join(f"c {i} 1\n" for i in range(1, 1101)))
    code, out, _ = run(capsys, "matchings", str(star))
    assert code == 0
    assert json.loads(out)["matching_summary"]["count"] == 1100
    code, _, err = run(capsys, "matchings", str(star), "--matching-cap", "1000")
    assert code == 3
    assert "ResourceLimit" in err


@pytest.mark.parametrize("error, expected", [(RecursionError, 3), (MemoryError, 3), (RuntimeError, 2)])
def test_unexpected_errors_become_exit_codes(capsys, fixture_path, monkeypatch, error, expected):
    def broken(t, cap=None):
        raise error("boom")

    monkeypatch.setattr(matching_section, "maximum_matchings", broken)
    code, out, err = run(capsys, "matchings", fixture_path("p5.txt"))
    assert code == expected
    assert out == ""
    assert error.__name__ in err


def test_module_records_reach_the_log_file(capsys, tmp_path, monkeypatch):
    monkeypatch.setattr(settings, "log_dir", str(tmp_path))
    monkeypatch.setattr(settings, "log_level", "DEBUG")
    source = tmp_path / "p7.txt"
    source.write_text("".join(f"x{i} x{i + 1} 7/3\n" for i in range(1, 7)))
    code, _, _ = run(capsys, "matchings", str(source))
    assert code == 0
    text = (tmp_path / "tracing.log").read_text(encoding="utf-8")
    assert "Running matchings on" in text
    assert "app.core.matching - tree on 7 vertices" in text


def test_loggers_share_one_file_handler(tmp_path, monkeypatch):
    monkeypatch.setattr(settings, "log_dir", str(tmp_path))
    loggers = [setup_logger(f"job-{i}") for i in range(50)]
    package = logging.getLogger(PACKAGE_LOGGER)
    handlers = [h for h in package.handlers if isinstance(h, logging.FileHandler)]
    assert len(handlers) == 1
    assert all(not logger.handlers for logger in loggers)
    loggers[-1].info("hello")
    assert "app.job-49 - hello" in (tmp_path / "tracing.log").read_text(encoding="utf-8")


def test_settings_fields():
    assert set(type(settings).model_fields) == {
        "matching_cap", "isomorphism_max_order", "signature_search_max_order", "spectral_tol",
        "zero_cutoff", "strict_checks", "log_dir", "log_level",
    }
