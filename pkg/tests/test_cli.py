"""CLI behavior: outputs, exit codes, and file emission."""

from __future__ import annotations

import json

import pytest

from goldenflag.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestList:
    def test_builtin_names(self, capsys):
        code, out, _ = run(capsys, "list")
        assert code == 0
        assert out.splitlines() == [
            "chile-1818",
            "chile-current",
            "togo",
            "nepal-ratio",
        ]


class TestRatio:
    def test_independence_ratio(self, capsys):
        code, out, _ = run(capsys, "ratio", "chile-1818")
        assert code == 0
        assert out.strip() == "1.80171"

    def test_current_ratio_trims(self, capsys):
        code, out, _ = run(capsys, "ratio", "chile-current")
        assert code == 0
        assert out.strip() == "1.5"

    def test_nepal_ratio(self, capsys):
        code, out, _ = run(capsys, "ratio", "nepal-ratio", "--digits", "6")
        assert code == 0
        assert out.strip() == "0.820338"

    def test_unknown_name(self, capsys):
        code, _, err = run(capsys, "ratio", "atlantis")
        assert code == 1
        assert "atlantis" in err


class TestEval:
    def test_rounded_three_digits_of_the_tangent(self, capsys):
        code, out, _ = run(
            capsys, "eval", "sqrt(10-2*sqrt(5))/(1+sqrt(5))", "--digits", "3"
        )
        assert code == 0
        assert out.strip() == "0.727"  # round-half-even, not a truncation

    def test_default_digits(self, capsys):
        code, out, _ = run(capsys, "eval", "phi")
        assert code == 0
        assert out.strip() == "1.61803398875"

    def test_exact_rational_arithmetic(self, capsys):
        code, out, _ = run(capsys, "eval", "1/3 + 1/6", "--digits", "6")
        assert code == 0
        assert out.strip() == "0.5"

    def test_parse_error_exits_one_with_position(self, capsys):
        code, _, err = run(capsys, "eval", "1 + ")
        assert code == 1
        assert "1:5" in err

    def test_unbound_identifier(self, capsys):
        code, _, err = run(capsys, "eval", "2*width")
        assert code == 1
        assert "width" in err

    def test_certification_failure(self, capsys):
        code, _, err = run(capsys, "eval", "sqrt(0-1)")
        assert code == 1
        assert "negative" in err


class TestVerify:
    def test_current_flag_three_passing_checks(self, capsys):
        code, out, _ = run(capsys, "verify", "chile-current")
        assert code == 0
        assert "3 checks passed" in out

    def test_independence_flag_includes_angle_configuration(self, capsys):
        code, out, _ = run(capsys, "verify", "chile-1818")
        assert code == 0
        assert "13 checks passed" in out
        assert "tan(72)" in out

    def test_spec_file_with_builtin_provenance(self, capsys, tmp_path, spec_sources):
        path = tmp_path / "own.flag"
        path.write_text(spec_sources["togo"])
        code, out, _ = run(capsys, "verify", str(path))
        assert code == 0
        assert "golden mean" in out

    def test_spec_file_with_custom_provenance(self, capsys, tmp_path):
        path = tmp_path / "plain.flag"
        path.write_text(
            'flag "plain" { canvas 2 x 1; region all red rect 0 0 2 1; }'
        )
        code, out, _ = run(capsys, "verify", str(path))
        assert code == 0
        assert "tile" in out

    def test_spec_file_parse_error_is_positioned(self, capsys, tmp_path):
        path = tmp_path / "broken.flag"
        path.write_text('flag "broken" { canvas 1 x 1 }')
        code, _, err = run(capsys, "verify", str(path))
        assert code == 1
        assert "1:30" in err


class TestBuild:
    def test_svg_with_viewbox(self, capsys, tmp_path):
        out_path = tmp_path / "current.svg"
        code, out, _ = run(
            capsys, "build", "chile-current", "--out", str(out_path), "--scale", "300"
        )
        assert code == 0
        assert "wrote svg" in out
        assert 'viewBox="0 0 900 600"' in out_path.read_text()

    def test_format_inferred_from_suffix(self, capsys, tmp_path):
        out_path = tmp_path / "togo.json"
        code, out, _ = run(
            capsys, "build", "togo", "--out", str(out_path), "--digits", "6"
        )
        assert code == 0
        assert "wrote json" in out
        doc = json.loads(out_path.read_text())
        assert doc["canvas"]["width"] == "1.61803"

    def test_physical_width(self, capsys, tmp_path):
        out_path = tmp_path / "big.svg"
        code, _, _ = run(
            capsys,
            "build",
            "chile-1818",
            "--out",
            str(out_path),
            "--width",
            "2.4",
            "--digits",
            "6",
        )
        assert code == 0
        assert 'width="2.4"' in out_path.read_text()

    def test_building_a_spec_file(self, capsys, tmp_path, spec_sources):
        src = tmp_path / "nepal.flag"
        src.write_text(spec_sources["nepal-ratio"])
        out_path = tmp_path / "nepal.svg"
        code, out, _ = run(capsys, "build", str(src), "--out", str(out_path))
        assert code == 0
        assert out_path.exists()

    def test_missing_out_flag_is_a_usage_error(self, capsys):
        code, _, _ = run(capsys, "build", "togo")
        assert code == 2

    def test_negative_scale_is_a_usage_error(self, capsys, tmp_path):
        code, _, _ = run(
            capsys, "build", "togo", "--out", str(tmp_path / "t.svg"), "--scale", "-2"
        )
        assert code == 2


class TestUsage:
    def test_no_subcommand(self, capsys):
        assert run(capsys, )[0] == 2

    def test_unknown_subcommand(self, capsys):
        assert run(capsys, "frobnicate")[0] == 2

    def test_unknown_option_rejected(self, capsys):
        assert run(capsys, "list", "--frob")[0] == 2

    def test_help_exits_zero(self, capsys):
        assert run(capsys, "--help")[0] == 0
