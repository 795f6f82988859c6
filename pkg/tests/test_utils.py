import json
from fractions import Fraction

import pytest

from floor_diagram_utils import config, set_jobs
from floor_diagram_utils.core.polynomials import MultiPoly
from floor_diagram_utils.utils import golden
from floor_diagram_utils.utils.cache import DiskCache, default_cache_dir
from floor_diagram_utils.utils.verify import (CheckResult, run_checks, check_node_polynomial,
                                              check_template_table, check_extended_table,
                                              check_specialization)


def test_cache_round_trip(tmp_path):
    cache = DiskCache(tmp_path / "nested")
    assert cache.get("nodepoly", 1) is None
    cache.put("nodepoly", 1, {"vars": [], "terms": []})
    assert cache.get("nodepoly", 1) == {"vars": [], "terms": []}
    assert not list((tmp_path / "nested").glob("*.part"))
    cache.clear()
    assert cache.get("nodepoly", 1) is None
    assert "nested" in repr(cache)


def test_cache_ignores_other_versions(tmp_path):
    cache = DiskCache(tmp_path)
    (tmp_path / "nodepoly-2.json").write_text(json.dumps({"version": config.CACHE_FORMAT_VERSION + 1, "payload": {}}))
    assert cache.get("nodepoly", 2) is None


def test_cache_ignores_broken_entries(tmp_path, caplog):
    cache = DiskCache(tmp_path)
    (tmp_path / "nodepoly-3.json").write_text("{not json")
    assert cache.get("nodepoly", 3) is None
    assert "unreadable" in caplog.text


def test_default_cache_dir(monkeypatch, tmp_path):
    monkeypatch.setenv(config.CACHE_ENV_VAR, str(tmp_path))
    assert default_cache_dir() == tmp_path
    monkeypatch.delenv(config.CACHE_ENV_VAR)
    monkeypatch.setenv("XDG_CACHE_HOME", str(tmp_path / "xdg"))
    assert default_cache_dir() == tmp_path / "xdg" / config.CACHE_DIR_NAME
    assert DiskCache().directory == tmp_path / "xdg" / config.CACHE_DIR_NAME


def test_golden_data():
    assert golden.golden_node_polynomial(0) == MultiPoly(1)
    assert len(golden.golden_node_polynomial(2)) == 47
    assert len(golden.golden_node_polynomial(3)) == 189
    assert golden.golden_term_count(4) == 599
    assert golden.golden_term_count(2) == 47
    assert golden.golden_term_count(9) is None
    assert golden.golden_printed_terms(2) == {"D*S**2": "3/2"}
    assert golden.golden_printed_terms(1) == {}
    with pytest.raises(KeyError):
        golden.golden_node_polynomial(9)
    assert len(golden.golden_templates(2)) == 7
    assert len(golden.golden_extended_templates(2)) == 11


def test_published_polynomials_specialize_to_classical_counts():
    # N_delta(0; d) = d (d-1) ... (d-delta+1) times the classical Severi degree
    classical = {2: lambda d: Fraction(3, 2) * (d - 1) * (d - 2) * (3 * d * d - 3 * d - 11),
                 3: lambda d: (Fraction(9, 2) * d ** 6 - 27 * d ** 5 + Fraction(9, 2) * d ** 4 + Fraction(423, 2) * d ** 3
                               - 229 * d * d - Fraction(829, 2) * d + 525)}
    for delta, count in classical.items():
        poly = golden.golden_node_polynomial(delta)
        for d in range(delta, delta + 5):
            values = {name: 0 for name in poly.variables} | {"D": d, "S": d, "b1": d}
            falling = 1
            for i in range(delta):
                falling *= d - i
            assert poly.evaluate(values) == falling * count(d)


def test_closed_forms():
    assert golden.r_display_coefficients(1) == {2: 3, 1: -8, 0: 4}
    assert golden.r_display_coefficients(2)[1] == Fraction(83, 2)
    assert golden.leading_display(1) == golden.golden_node_polynomial(1)
    assert golden.one_nodal_count(3) == 12
    with pytest.raises(ValueError):
        golden.leading_display(0)


def test_check_result_text():
    assert str(CheckResult("PASS", "total degree", "3")) == "PASS total degree: 3"
    assert str(CheckResult("NOTE", "x")) == "NOTE x"


def test_checks_flag_a_wrong_polynomial():
    broken = golden.golden_node_polynomial(2) + MultiPoly("D*S")
    statuses = {result.name: result.status for result in check_node_polynomial(broken, 2)}
    assert statuses["reference polynomial"] == "FAIL"
    assert statuses["total degree"] == "PASS"


def test_checks_note_the_printed_coefficient():
    results = check_node_polynomial(golden.golden_node_polynomial(2), 2)
    notes = [result for result in results if result.status == "NOTE"]
    assert notes and "83/2" in notes[0].detail
    assert not [result for result in results if result.status == "FAIL"]


def test_table_checks():
    assert all(result.status != "FAIL" for result in check_template_table(2))
    assert all(result.status != "FAIL" for result in check_extended_table(2))
    assert check_template_table(5) == []
    notes = [result for result in check_extended_table(1) if result.status == "NOTE"]
    assert len(notes) == 2


def test_specialization_check():
    assert all(result.status == "PASS" for result in check_specialization(golden.golden_node_polynomial(1), 1))
    broken = golden.golden_node_polynomial(1) + 1
    assert any(result.status == "FAIL" for result in check_specialization(broken, 1))


@pytest.mark.parametrize("delta", [0, 1, 2])
def test_run_checks(delta):
    results = run_checks(delta, max_degree=4)
    assert results
    assert not [str(result) for result in results if result.status == "FAIL"]


def test_set_jobs():
    set_jobs(3)
    assert config.DEFAULT_JOBS == 3
    for bad in (0, -1, 1.5, True):
        with pytest.raises(ValueError):
            set_jobs(bad)
