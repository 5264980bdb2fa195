"""End-to-end tests for the command line front door.

Subcommands run in process through `run`, which returns the exit code
the console script would produce; primary output is read back from
--out files or captured stdout.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import factorial

import pytest

from fanoperiods.cli import CatalogEntry, catalog, run
from fanoperiods.laurent import classical_periods
from fanoperiods.polytope import geometry_flags, parse_document

P2_POLY = {
    "vars": ["x", "y"],
    "terms": [
        {"coeff": "1", "exp": [1, 0]},
        {"coeff": "1", "exp": [0, 1]},
        {"coeff": "1", "exp": [-1, -1]},
    ],
}


@pytest.fixture
def p2_poly_file(tmp_path):
    path = tmp_path / "p2.json"
    path.write_text(json.dumps(P2_POLY))
    return str(path)


@pytest.fixture
def p2_periods_file(tmp_path):
    values = [
        str(factorial(d) // factorial(d // 3) ** 3) if d % 3 == 0 else "0"
        for d in range(13)
    ]
    path = tmp_path / "p2-periods.json"
    path.write_text(json.dumps({"index": 3, "coeffs": values}))
    return str(path)


def read_json(path):
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


class TestExitCodes:
    def test_no_arguments_is_usage_error(self, capsys):
        assert run([]) == 2
        assert "usage" in capsys.readouterr().err

    def test_unknown_subcommand_is_usage_error(self, capsys):
        assert run(["orbit"]) == 2
        capsys.readouterr()

    def test_missing_required_flag_is_usage_error(self, capsys):
        assert run(["period"]) == 2
        capsys.readouterr()

    def test_unknown_emit_choice_is_usage_error(self, capsys):
        assert run(["grassmannian", "--k", "2", "--n", "4", "--emit", "poems"]) == 2
        capsys.readouterr()

    def test_non_numeric_order_is_usage_error(self, capsys):
        assert run(["grassmannian", "--k", "2", "--n", "4", "--order", "-3"]) == 2
        capsys.readouterr()

    def test_help_exits_zero(self, capsys):
        assert run(["--help"]) == 0
        assert "subcommand" not in capsys.readouterr().err

    def test_missing_input_file_is_domain_error(self, tmp_path, capsys):
        assert run(["period", "--poly", str(tmp_path / "absent.json")]) == 1
        assert "error:" in capsys.readouterr().err

    def test_malformed_json_is_domain_error(self, tmp_path, capsys):
        path = tmp_path / "broken.json"
        path.write_text("not json at all")
        assert run(["period", "--poly", str(path)]) == 1
        capsys.readouterr()

    def test_wrong_schema_is_domain_error(self, tmp_path, capsys):
        path = tmp_path / "wrong.json"
        path.write_text(json.dumps({"vars": [], "terms": []}))
        assert run(["period", "--poly", str(path)]) == 1
        capsys.readouterr()

    def test_impossible_box_is_domain_error(self, capsys):
        assert run(["grassmannian", "--k", "4", "--n", "2"]) == 1
        capsys.readouterr()


class TestPeriodSubcommand:
    def test_plane_example(self, p2_poly_file, tmp_path):
        out = tmp_path / "periods.json"
        assert run(
            ["period", "--poly", p2_poly_file, "--order", "9", "--out", str(out)]
        ) == 0
        data = read_json(out)
        assert data["index"] == 3
        assert data["coeffs"][3] == "6"
        assert data["coeffs"] == ["1", "0", "0", "6", "0", "0", "90", "0", "0", "1680"]

    def test_stdout_is_default(self, p2_poly_file, capsys):
        assert run(["period", "--poly", p2_poly_file, "--order", "3"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["coeffs"] == ["1", "0", "0", "6"]

    def test_same_output_on_stdout_and_file(self, p2_poly_file, tmp_path, capsys):
        out = tmp_path / "periods.json"
        assert run(
            ["period", "--poly", p2_poly_file, "--order", "6", "--out", str(out)]
        ) == 0
        assert run(["period", "--poly", p2_poly_file, "--order", "6"]) == 0
        assert capsys.readouterr().out == out.read_text()


class TestPolytopeSubcommand:
    def test_plane_polar_triangle(self, p2_poly_file, tmp_path):
        out = tmp_path / "polytope.json"
        assert run(["polytope", "--poly", p2_poly_file, "--out", str(out)]) == 0
        data = read_json(out)
        assert data["dim"] == 2
        assert data["lattice_counts"] == {"1": 10, "2": 28}
        system, vertices, counts = parse_document(data)
        assert geometry_flags(system) == (True, True, True)
        assert set(vertices) == {
            (Fraction(-1), Fraction(-1)),
            (Fraction(2), Fraction(-1)),
            (Fraction(-1), Fraction(2)),
        }
        assert counts == {1: 10, 2: 28}

    def test_dilation_range_follows_order(self, p2_poly_file, capsys):
        assert run(["polytope", "--poly", p2_poly_file, "--order", "3"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert sorted(data["lattice_counts"]) == ["1", "2", "3"]


class TestGrassmannianSubcommand:
    def test_polytope_example_passes_geometry_flags(self, tmp_path):
        out = tmp_path / "gr24.json"
        assert run(
            ["grassmannian", "--k", "2", "--n", "4", "--emit", "polytope", "--out", str(out)]
        ) == 0
        data = read_json(out)
        system, _, counts = parse_document(data)
        assert data["dim"] == 4
        assert geometry_flags(system) == (True, True, True)
        assert counts == {1: 105}

    def test_superpotential_carries_one_novikov_term(self, capsys):
        assert run(["grassmannian", "--k", "2", "--n", "4"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["vars"] == ["x0", "x11", "x12", "x21"]
        assert len(data["terms"]) == 6
        novikov = [t for t in data["terms"] if t["q"] == 1]
        assert [t["exp"] for t in novikov] == [[-1, -1, -1, -1]]

    def test_superpotential_q_one_drops_the_decoration(self, capsys):
        assert run(["grassmannian", "--k", "2", "--n", "4", "--q", "one"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert {t["q"] for t in data["terms"]} == {0}

    def test_periods_use_default_order_eight(self, capsys):
        assert run(["grassmannian", "--k", "2", "--n", "4", "--emit", "periods"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["index"] == 4
        assert len(data["coeffs"]) == 9
        assert data["coeffs"][4] == "48"
        assert data["coeffs"][8] == "15120"

    def test_valuation_report_is_empty(self, capsys):
        assert run(
            ["grassmannian", "--k", "2", "--n", "5", "--emit", "valuations"]
        ) == 0
        assert json.loads(capsys.readouterr().out) == []


class TestFrobeniusSubcommand:
    def test_table_example_record(self, p2_periods_file, tmp_path):
        out = tmp_path / "table.json"
        assert run(
            [
                "frobenius",
                "--periods",
                p2_periods_file,
                "--max-p",
                "4",
                "--emit",
                "table",
                "--out",
                str(out),
            ]
        ) == 0
        records = read_json(out)
        by_key = {(r["p"], r["q"], r["r"]): r["value"] for r in records}
        assert by_key[(1, 1, 0)] == "0"
        assert by_key[(1, 2, 0)] == "6q"
        assert by_key[(2, 2, 1)] == "8q"
        assert by_key[(1, 1, 2)] == "1"

    def test_table_q_one_specializes_values(self, p2_periods_file, capsys):
        assert run(
            ["frobenius", "--periods", p2_periods_file, "--q", "one"]
        ) == 0
        records = json.loads(capsys.readouterr().out)
        by_key = {(r["p"], r["q"], r["r"]): r["value"] for r in records}
        assert by_key[(1, 2, 0)] == "6"

    def test_series_emit(self, p2_periods_file, capsys):
        assert run(
            ["frobenius", "--periods", p2_periods_file, "--max-p", "2", "--emit", "series"]
        ) == 0
        data = json.loads(capsys.readouterr().out)
        assert [item["p"] for item in data] == [1, 2]
        first = data[0]
        assert first["valid_to"] == 11
        assert first["tail"][0] == {"i": 2, "value": "2q"}
        second = data[1]
        assert {"i": 1, "value": "4q"} in second["tail"]

    def test_short_input_is_domain_error(self, tmp_path, capsys):
        path = tmp_path / "short.json"
        path.write_text(json.dumps({"index": 3, "coeffs": ["1", "0", "0", "6"]}))
        assert run(["frobenius", "--periods", str(path), "--max-p", "4"]) == 1
        capsys.readouterr()

    def test_off_grading_input_is_domain_error(self, tmp_path, capsys):
        path = tmp_path / "off.json"
        path.write_text(json.dumps({"index": 3, "coeffs": ["1", "0", "5"]}))
        assert run(["frobenius", "--periods", str(path)]) == 1
        capsys.readouterr()


class TestCatalog:
    def test_lookup_returns_entries(self):
        entry = catalog("p2")
        assert isinstance(entry, CatalogEntry)
        assert sorted(entry.mirror.terms) == [(-1, -1), (0, 1), (1, 0)]
        assert catalog("p1").fano_index == 2

    def test_listing_has_at_least_four_entries(self):
        assert len(catalog("list")) >= 4

    def test_unknown_name_raises(self):
        with pytest.raises(ValueError):
            catalog("p4")

    def test_every_entry_passes_its_regression_head(self):
        for entry in catalog("list"):
            for coeff in entry.mirror.terms.values():
                assert coeff.is_constant()
                value = coeff.constant_value()
                assert value.denominator == 1 and value > 0
            computed = classical_periods(entry.mirror, 6)
            assert len(entry.period_head) == 7
            for d, stored in enumerate(entry.period_head):
                assert computed[d].is_constant()
                value = computed[d].constant_value()
                assert value == Fraction(stored), (entry.name, d)
                assert value.denominator == 1 and value >= 0
                if value and entry.fano_index:
                    assert d % entry.fano_index == 0, (entry.name, d)

    def test_cli_listing(self, capsys):
        assert run(["catalog"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert [entry["name"] for entry in data] == ["p1", "p2", "p1xp1", "p3"]

    def test_cli_entry_document(self, tmp_path):
        out = tmp_path / "p2.json"
        assert run(["catalog", "p2", "--out", str(out)]) == 0
        data = read_json(out)
        assert data["fano_index"] == 3
        assert data["period_head"][3] == "6"
        assert data["mirror"]["vars"] == ["x", "y"]

    def test_cli_unknown_name_is_domain_error(self, capsys):
        assert run(["catalog", "p4"]) == 1
        capsys.readouterr()


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ["catalog", "p3"],
            ["grassmannian", "--k", "2", "--n", "4", "--emit", "superpotential"],
            ["grassmannian", "--k", "2", "--n", "4", "--emit", "polytope"],
        ],
    )
    def test_repeated_runs_are_byte_identical(self, argv, capsys):
        assert run(argv) == 0
        first = capsys.readouterr().out
        assert run(argv) == 0
        assert capsys.readouterr().out == first

    def test_file_and_rerun_identical(self, p2_poly_file, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        argv = ["period", "--poly", p2_poly_file, "--order", "8"]
        assert run(argv + ["--out", str(a)]) == 0
        assert run(argv + ["--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()


class TestSelfcheckSubcommand:
    def test_exit_zero_with_one_line_per_check(self, capsys):
        assert run(["selfcheck"]) == 0
        captured = capsys.readouterr()
        lines = captured.out.strip().splitlines()
        assert len(lines) == 11
        assert all(line.startswith("PASS ") for line in lines[:-1])
        assert lines[-1] == "10/10 checks passed"
