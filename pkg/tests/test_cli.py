import json

import pytest

from transgress.cli import main
from transgress.groupspec import (
    GroupSpecParseError,
    canonical_spec_string,
    parse_group_spec,
)


def run_cli(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSpecParsing:
    def test_default_is_simply_connected(self):
        g = parse_group_spec("A3")
        assert canonical_spec_string(g) == "A3:sc"

    def test_adjoint_suffix(self):
        g = parse_group_spec("C3:adj")
        assert canonical_spec_string(g) == "C3:adj"

    def test_explicit_pi1_generators(self):
        g = parse_group_spec("D4:pi1=[1,0,1,0]")
        assert g.pi1_generators

    def test_invalid_rank_reports_position(self):
        with pytest.raises(GroupSpecParseError) as exc:
            parse_group_spec("X9")
        assert exc.value.position == 0

    def test_bad_suffix_rejected(self):
        with pytest.raises(GroupSpecParseError):
            parse_group_spec("A2:simply")

    def test_wrong_length_generator_rejected(self):
        with pytest.raises((GroupSpecParseError, ValueError)):
            parse_group_spec("A3:pi1=[1,0]")


class TestDescribe:
    def test_json_document(self, capsys):
        code, out, _ = run_cli(["describe", "A2", "--json"], capsys)
        assert code == 0
        doc = json.loads(out)
        assert doc["schema_version"] == 1
        assert doc["kind"] == "describe"
        assert doc["group"] == "A2:sc"
        p = doc["payload"]
        assert p["rank"] == 2
        assert p["cartan"]["entries"] == [[2, -1], [-1, 2]]
        assert p["center_invariant_factors"] == [3]
        assert p["pi1_order"] == 1
        assert p["theta"]["entries"] == [[2, -1], [-1, 2]]

    def test_adjoint_theta_is_identity(self, capsys):
        code, out, _ = run_cli(["describe", "A2:adj", "--json"], capsys)
        assert code == 0
        doc = json.loads(out)
        assert doc["payload"]["theta"]["entries"] == [[1, 0], [0, 1]]
        assert doc["payload"]["pi1_order"] == 3

    def test_text_output_mentions_center(self, capsys):
        code, out, _ = run_cli(["describe", "D4"], capsys)
        assert code == 0
        assert "Z2 x Z2" in out


class TestTau:
    def test_sc_identity(self, capsys):
        code, out, _ = run_cli(["tau", "A3", "--json"], capsys)
        assert code == 0
        doc = json.loads(out)
        p = doc["payload"]
        assert p["matrix"]["entries"] == [
            [1, 0, 0], [0, 1, 0], [0, 0, 1],
        ]
        assert p["det"] == 1
        assert p["singular_primes"] == []

    def test_adjoint_mod_section(self, capsys):
        code, out, _ = run_cli(["tau", "C2:adj", "--mod", "2", "--json"], capsys)
        assert code == 0
        mod = json.loads(out)["payload"]["mod"]
        assert mod["p"] == 2
        assert not mod["is_isomorphism"]
        assert [e["coeffs"] for e in mod["kernel"]] == [[0, 1]]
        assert mod["kernel"][0]["label"] == "t_2"
        assert len(mod["cokernel"]) == 1

    def test_text_isomorphism_line(self, capsys):
        code, out, _ = run_cli(["tau", "A3", "--mod", "5"], capsys)
        assert code == 0
        assert "mod 5: isomorphism" in out

    def test_composite_modulus_rejected(self, capsys):
        code, _, err = run_cli(["tau", "A3", "--mod", "6"], capsys)
        assert code == 2
        assert "not prime" in err


class TestE3:
    def test_su2_rational(self, capsys):
        code, out, _ = run_cli(["e3", "A1", "--json"], capsys)
        assert code == 0
        p = json.loads(out)["payload"]
        assert p["coefficients"] == "rational"
        assert p["ranks"][0] == [0, 1]
        assert p["ranks"][3] == [3, 1]
        assert p["poincare"] == "1 + q^3"

    def test_psu2_mod_2_with_bidegrees(self, capsys):
        code, out, _ = run_cli(
            ["e3", "A1:adj", "--coeff", "2", "--bidegrees", "--json"], capsys
        )
        assert code == 0
        p = json.loads(out)["payload"]
        assert p["coefficients"] == 2
        assert [r for _, r in p["ranks"]] == [1, 1, 1, 1]
        assert [s + t for s, t, r in p["bidegrees"] if r] == [0, 1, 2, 3]

    def test_max_degree_truncation(self, capsys):
        code, out, _ = run_cli(
            ["e3", "A2", "--max-degree", "3", "--json"], capsys
        )
        assert code == 0
        p = json.loads(out)["payload"]
        assert p["max_total_degree"] == 3
        assert [r for _, r in p["ranks"]] == [1, 0, 0, 1]

    def test_cap_refusal_exit_code(self, capsys):
        code, _, err = run_cli(["e3", "E8"], capsys)
        assert code == 1
        assert "--force" in err

    def test_bad_coeff_rejected(self, capsys):
        code, _, err = run_cli(["e3", "A1", "--coeff", "six"], capsys)
        assert code == 2
        assert "--coeff" in err


class TestDeterminism:
    @pytest.mark.parametrize("argv", [
        ["describe", "D4:adj", "--json"],
        ["tau", "C3:adj", "--mod", "2", "--json"],
        ["e3", "C2", "--bidegrees", "--json"],
    ])
    def test_repeated_invocations_byte_identical(self, argv, capsys):
        _, first, _ = run_cli(argv, capsys)
        _, second, _ = run_cli(argv, capsys)
        assert first == second

    def test_jobs_do_not_change_bytes(self, capsys):
        base = ["e3", "C2", "--bidegrees", "--json"]
        _, one, _ = run_cli(base + ["--jobs", "1"], capsys)
        _, four, _ = run_cli(base + ["--jobs", "4"], capsys)
        assert one == four


class TestFixturesCommand:
    def test_bundled_corpus_passes(self, capsys):
        code, out, _ = run_cli(["fixtures"], capsys)
        assert code == 0
        assert "FAIL" not in out
        assert "fixtures passed" in out

    def test_json_summary(self, capsys):
        code, out, _ = run_cli(["fixtures", "--json"], capsys)
        assert code == 0
        p = json.loads(out)["payload"]
        assert p["failed"] == 0
        assert p["passed"] == p["total"] > 0

    def test_failing_corpus_exits_3(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps([
            {
                "name": "wrong-tau",
                "kind": "tau_matrix",
                "spec": "A2:sc",
                "expect": "cartan_transpose",
            },
        ]))
        code, out, _ = run_cli(["fixtures", "--corpus", str(bad)], capsys)
        assert code == 3
        assert "FAIL wrong-tau" in out

    def test_empty_corpus_is_input_error(self, tmp_path, capsys):
        empty = tmp_path / "empty.json"
        empty.write_text(json.dumps([]))
        code, _, err = run_cli(["fixtures", "--corpus", str(empty)], capsys)
        assert code == 2
        assert "no fixtures" in err

    def test_missing_corpus_is_input_error(self, tmp_path, capsys):
        code, _, _ = run_cli(
            ["fixtures", "--corpus", str(tmp_path / "nope.json")], capsys
        )
        assert code == 2


class TestParseErrorsAtCli:
    def test_unknown_family(self, capsys):
        code, _, err = run_cli(["describe", "X9"], capsys)
        assert code == 2
        assert "error:" in err

    def test_rank_out_of_range(self, capsys):
        code, _, err = run_cli(["tau", "B1"], capsys)
        assert code == 2
