import json

import pytest
from pydantic import ValidationError

from floor_diagram_utils.cli import build_parser, main
from floor_diagram_utils.errors import ResourceRefusalWarning
from floor_diagram_utils.core.polynomials import MultiPoly
from floor_diagram_utils.utils.golden import golden_node_polynomial
from floor_diagram_utils.validation.commands import TemplatesCommandModel, SeveriCommandModel, LeadingCommandModel


def _run(capsys, *argv):
    code = main(["--no-cache", *argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_parser_requires_a_command():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])


def test_severi_polynomial(capsys):
    code, out, _ = _run(capsys, "severi", "--delta", "1", "--beta", "4")
    assert code == 0
    assert out.strip() == "27"


def test_severi_both_methods(capsys):
    code, out, _ = _run(capsys, "--json", "severi", "--delta", "1", "--alpha", "1", "--beta", "1", "--method", "both")
    assert code == 0
    data = json.loads(out)
    assert data["enumerate"] == data["polynomial"] == 3
    assert data["verdict"] == "MATCH"
    assert data["alpha"] == [1]


def test_severi_enumeration_below_the_polynomial_range(capsys):
    code, out, _ = _run(capsys, "severi", "--delta", "2", "--beta", "1", "--alpha", "0,1", "--method", "enumerate")
    assert code == 0
    assert int(out) >= 0


def test_severi_domain_errors(capsys):
    code, _, err = _run(capsys, "severi", "--delta", "2", "--beta", "1")
    assert code == 2
    assert "|beta| >= delta" in err
    code, _, _ = _run(capsys, "severi", "--delta", "1")
    assert code == 2
    code, _, _ = _run(capsys, "severi", "--delta", "1", "--beta", "x")
    assert code == 2


def test_templates_text(capsys):
    code, out, _ = _run(capsys, "templates", "--cogenus", "1")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split()[:3] == ["l", "mu", "kappa"]
    assert len(lines) == 3
    assert "(0,1,2)" in lines[1]


def test_templates_json(capsys):
    code, out, _ = _run(capsys, "--json", "templates", "--cogenus", "2", "--kind", "extended")
    assert code == 0
    data = json.loads(out)
    assert data["kind"] == "extended"
    assert len(data["rows"]) == 11
    assert {"lambda", "A", "B", "invariants", "q"} <= set(data["rows"][0])


def test_templates_refused(capsys):
    with pytest.warns(ResourceRefusalWarning):
        code, _, err = _run(capsys, "templates", "--cogenus", "9")
    assert code == 4
    assert "--force" in err


def test_templates_plain_cogenus_zero(capsys):
    code, _, _ = _run(capsys, "templates", "--cogenus", "0")
    assert code == 2
    code, out, _ = _run(capsys, "--json", "templates", "--cogenus", "0", "--kind", "extended")
    assert code == 0
    assert len(json.loads(out)["rows"]) == 1


def test_nodepoly_files(capsys, tmp_path):
    target = tmp_path / "out" / "n1.json"
    code, out, _ = _run(capsys, "nodepoly", "--delta", "1", "--out", str(target))
    assert code == 0
    data = json.loads(target.read_text())
    assert data["delta"] == 1
    assert MultiPoly.from_json(data) == golden_node_polynomial(1)
    assert target.with_suffix(".txt").read_text().strip() == out.strip()
    assert "alpha_1" in out


def test_nodepoly_cache_is_transparent(capsys, tmp_path):
    argv = ["--json", "--cache-dir", str(tmp_path), "nodepoly", "--delta", "2"]
    assert main(argv) == 0
    cold = capsys.readouterr().out
    assert (tmp_path / "nodepoly-2.json").exists()
    assert main(argv) == 0
    warm = capsys.readouterr().out
    assert json.loads(cold) == json.loads(warm)


def test_nodepoly_refused(capsys):
    with pytest.warns(ResourceRefusalWarning):
        code, _, _ = _run(capsys, "nodepoly", "--delta", "7")
    assert code == 4


def test_leading(capsys):
    code, out, _ = _run(capsys, "--json", "leading", "--delta", "2")
    assert code == 0
    data = json.loads(out)
    assert data["min_degree"] == 4
    assert MultiPoly.from_json(data) == golden_node_polynomial(2).truncate(4)
    code, _, _ = _run(capsys, "leading", "--delta", "0")
    assert code == 2


def test_verify(capsys):
    code, out, _ = _run(capsys, "verify", "--delta", "1", "--max-degree", "4")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines and all(line.split()[0] in ("PASS", "NOTE") for line in lines)
    assert any("enumeration against polynomial" in line for line in lines)


def test_verify_json(capsys):
    code, out, _ = _run(capsys, "--json", "verify", "--delta", "0", "--max-degree", "3")
    assert code == 0
    data = json.loads(out)
    assert {check["status"] for check in data["checks"]} <= {"PASS", "NOTE"}


def test_bad_jobs(capsys):
    code, _, err = _run(capsys, "--jobs", "0", "severi", "--delta", "0", "--beta", "1")
    assert code == 2
    assert "--jobs" in err


def test_command_models():
    options = TemplatesCommandModel(cogenus=3)
    assert options.kind == "plain" and options.limit == options.max_plain and not options.force
    assert SeveriCommandModel(delta=1, beta="2,1").alpha == {}
    assert LeadingCommandModel(delta=2).depth == 2
    with pytest.raises(ValidationError):
        SeveriCommandModel(delta=-1, beta="1")
    with pytest.raises(ValidationError):
        SeveriCommandModel(delta=1, method="guess", beta="1")


def test_templates_cache(capsys, tmp_path):
    argv = ["--json", "--cache-dir", str(tmp_path), "templates", "--cogenus", "2", "--kind", "extended"]
    assert main(argv) == 0
    cold = capsys.readouterr().out
    assert (tmp_path / "ext-templates-2.json").exists()
    assert main(argv) == 0
    assert json.loads(capsys.readouterr().out) == json.loads(cold)
    assert main(["--cache-dir", str(tmp_path), "templates", "--cogenus", "1"]) == 0
    assert (tmp_path / "templates-1.json").exists()
    assert "(0,2,1)" in capsys.readouterr().out
