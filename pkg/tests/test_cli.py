import json
import re
from pathlib import Path

import jsonschema
import pytest

from quivercalc.cli import main
from quivercalc.report import REPORT_SCHEMA

FIXTURES = Path(__file__).parent / "fixtures"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out), err


def test_analyze_three_vertex_passes(capsys):
    code, report, _ = run_json(capsys, "analyze", FIXTURES / "threevertex.json")
    assert code == 0
    assert report["exit_code"] == 0
    assert report["dimensions"]["hh1"] == 6
    assert report["dimensions"]["vector_fields"]["value"] == 6
    assert report["assumptions"]["amply_stable"] == "yes"
    jsonschema.validate(report, REPORT_SCHEMA)


def test_analyze_alt_chamber_fails_with_refusal(capsys):
    code, report, _ = run_json(capsys, "analyze", FIXTURES / "threevertex_alt.json")
    assert code == 1
    assert report["assumptions"]["strongly_amply_stable"] is False
    assert report["dimensions"]["vector_fields"] == {"refused": "strong ample stability"}
    witnesses = report["assumptions"]["failing_witnesses"]["strongly_amply_stable"]
    assert witnesses == [{"1": 1, "2": 0, "3": 1}]
    jsonschema.validate(report, REPORT_SCHEMA)


def test_analyze_alt_chamber_with_override(capsys):
    code, report, _ = run_json(
        capsys, "analyze", FIXTURES / "threevertex_alt.json", "--override-assumptions"
    )
    assert code == 1  # hypotheses still fail even though the value is shown
    assert report["dimensions"]["vector_fields"]["value"] == 6
    assert report["dimensions"]["vector_fields"]["override"] is True


def test_analyze_malformed_file_exits_two(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{", encoding="utf-8")
    code, out, err = run(capsys, "analyze", bad)
    assert code == 2
    assert "input error" in err


def test_analyze_missing_file_exits_two(capsys):
    code, _, err = run(capsys, "analyze", "/nonexistent.json")
    assert code == 2


def test_frame_kronecker(capsys):
    code, report, _ = run_json(capsys, "frame", FIXTURES / "kronecker.json", "1", "2")
    assert code == 0
    framed = report["framing"]["framed_datum"]
    assert framed["stability"] == {"0": 1, "1": 2, "2": -2, "∞": -1}
    assert report["verifications"][0]["passed"] is True
    jsonschema.validate(report, REPORT_SCHEMA)


def test_frame_at_scale_one_fails(capsys):
    code, report, _ = run_json(capsys, "frame", FIXTURES / "kronecker.json", "--scale", "1")
    assert code == 1
    check = report["verifications"][0]
    assert check["passed"] is False
    assert check["discrepancies"]


def test_frame_unknown_vertex_exits_two(capsys):
    code, _, err = run(capsys, "frame", FIXTURES / "kronecker.json", "1", "zzz")
    assert code == 2


def test_frame_uses_framing_block_when_vertices_omitted(capsys):
    code, report, _ = run_json(capsys, "frame", FIXTURES / "threevertex.json")
    assert code == 0
    assert report["framing"]["framed_at"] == {"i": "2", "j": "3"}


def test_reduce_both_thin(capsys):
    code, report, _ = run_json(capsys, "reduce", FIXTURES / "threevertex.json", "2", "3")
    assert code == 0
    assert report["reduction"]["case"] == "both_thin"
    assert report["reduction"]["reduced_datum"]["stability"] == {"1": 2, "2": 1, "3": -3}
    jsonschema.validate(report, REPORT_SCHEMA)


def test_reduce_source_thin_formula(capsys):
    code, report, _ = run_json(capsys, "reduce", FIXTURES / "kronecker_d21.json")
    assert code == 0
    assert report["reduction"]["case"] == "source_thin"
    assert report["reduction"]["reduced_datum"]["stability"] == {"0": 3, "1": 7, "2": -17}


def test_reduce_a3_runs_with_coprime_parameter(capsys):
    code, report, _ = run_json(capsys, "reduce", FIXTURES / "a3.json", "1", "3")
    assert code == 0
    assert report["reduction"]["case"] == "both_thin"


def test_reduce_coprimality_failure_exits_one(capsys, tmp_path):
    doc = json.loads((FIXTURES / "a3.json").read_text())
    doc["stability"] = {"1": 1, "2": 0, "3": -1}  # canonical, vanishes on (0,1,0)
    bad = tmp_path / "a3_canonical.json"
    bad.write_text(json.dumps(doc), encoding="utf-8")
    code, report, _ = run_json(capsys, "reduce", bad, "1", "3")
    assert code == 1
    assert "coprimality" in report["error"]["assumption"]


def test_verify_kronecker(capsys):
    code, report, _ = run_json(capsys, "verify", FIXTURES / "kronecker.json")
    assert code == 0
    equivalence = report["verifications"][0]
    assert equivalence["passed"] is True
    assert equivalence["points_checked"] == 16
    weight = report["verifications"][1]
    assert weight["passed"] is True
    jsonschema.validate(report, REPORT_SCHEMA)


def test_verify_prime_flag(capsys):
    code, report, _ = run_json(capsys, "verify", FIXTURES / "kronecker.json", "--prime", "3")
    assert code == 0
    assert report["verifications"][0]["points_checked"] == 81


def test_verify_non_prime_exits_two(capsys):
    code, _, err = run(capsys, "verify", FIXTURES / "kronecker.json", "--prime", "4")
    assert code == 2
    assert "prime" in err


def test_verify_requires_framing_block(capsys, tmp_path):
    doc = json.loads((FIXTURES / "kronecker.json").read_text())
    del doc["framing"]
    spec = tmp_path / "noframing.json"
    spec.write_text(json.dumps(doc), encoding="utf-8")
    code, report, _ = run_json(capsys, "verify", spec)
    assert code == 1
    assert "framing" in report["error"]["assumption"]


def test_out_flag_writes_file(capsys, tmp_path):
    out = tmp_path / "report.json"
    code, stdout, _ = run(capsys, "analyze", FIXTURES / "threevertex.json", "--json", "--out", out)
    assert code == 0
    assert stdout == ""
    report = json.loads(out.read_text())
    assert report["dimensions"]["hh1"] == 6


def test_human_output_numbers_subset_of_json(capsys):
    for fixture in ("threevertex.json", "threevertex_alt.json", "kronecker.json"):
        code_h, human, _ = run(capsys, "analyze", FIXTURES / fixture)
        code_j, report, _ = run_json(capsys, "analyze", FIXTURES / fixture)
        assert code_h == code_j

        numbers: set[int] = set()

        def collect(node):
            if isinstance(node, bool):
                return
            if isinstance(node, int):
                numbers.add(node)
                numbers.add(abs(node))
            elif isinstance(node, dict):
                for key, value in node.items():
                    collect(key) if isinstance(key, int) else None
                    collect(value)
            elif isinstance(node, list):
                for value in node:
                    collect(value)
            elif isinstance(node, str):
                for match in re.findall(r"-?\d+", node):
                    numbers.add(int(match))
                    numbers.add(abs(int(match)))

        collect(report)
        for match in re.findall(r"-?\d+", human):
            assert int(match) in numbers or abs(int(match)) in numbers, (match, fixture)


def test_exit_code_corpus(capsys, tmp_path):
    # 0: all hypotheses verified; 1: a hypothesis fails; 2: malformed input
    assert run(capsys, "analyze", FIXTURES / "threevertex.json")[0] == 0
    assert run(capsys, "analyze", FIXTURES / "threevertex_alt.json")[0] == 1
    bad = tmp_path / "broken.json"
    bad.write_text('{"vertices": []}', encoding="utf-8")
    assert run(capsys, "analyze", bad)[0] == 2
