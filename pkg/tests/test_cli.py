"""Command-line interface: subcommands, formats, exit codes, figures."""

import json

import pytest

from stablepoly.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_analyze_isolated(capsys):
    code, data = run_json(capsys, "analyze", "w - i*w^2 - i*z^2")
    assert code == 0
    assert data["classes"][0]["tag"] == "Isolated"
    assert data["classes"][0]["K"] == 1
    assert data["ideal"]["kind"] == "isolated_product"
    gens = sorted(data["ideal"]["generators_text"])
    assert gens == ["w - i*z^2", "z^4"]


def test_analyze_transports_ball_input(capsys):
    code, data = run_json(capsys, "analyze", "1 - z2")
    assert code == 0
    assert data["transported"] is True
    assert data["siegel"]["text"] == "2*w"
    assert data["classes"][0]["tag"] == "Basic"
    assert data["ideal"]["kind"] == "basic_power"


def test_analyze_unstable_still_reports(capsys):
    code, data = run_json(capsys, "analyze", "w - i*w^2 - (3/2)*i*z^2")
    assert code == 0
    assert data["classes"][0]["tag"] == "Unstable"
    assert data["ideal"] is None
    assert "ideal_error" in data


def test_analyze_higher_dimension(capsys):
    code, data = run_json(capsys, "analyze",
                          "i*w - (1/2)*z1^2 - (1/4)*z2^2")
    assert code == 0
    assert data["smooth"]["verdict"] == "strict"
    assert data["ideal"]["kind"] == "simple_zero"


def test_ideal_exit_codes(capsys):
    code, out, err = run(capsys, "ideal", "w - i*w^2 - (3/2)*i*z^2")
    assert code == 2
    code, out, err = run(capsys, "ideal", "w + w^2 - z^2")
    assert code == 3
    code, out, err = run(capsys, "ideal", "w")
    assert code == 0


def test_parse_error_exit_code(capsys):
    code, out, err = run(capsys, "analyze", "w +")
    assert code == 2
    assert "input error" in err


def test_classify_and_branches(capsys):
    code, data = run_json(capsys, "classify", "w - i*w^2 - i*z^2")
    assert code == 0
    assert data["classes"][0]["tag"] == "Isolated"
    code, data = run_json(capsys, "branches", "w - i*w^2 - i*z^2")
    assert code == 0
    assert data["branches"][0]["M"] == 1


def test_member_subcommand(capsys):
    code, data = run_json(capsys, "member", "--numerator", "z^2",
                          "--denominator", "w")
    assert code == 0 and data["member"] is True
    code, data = run_json(capsys, "member", "--numerator", "z1",
                          "--denominator", "1 - z2")
    assert code == 0 and data["member"] is False
    assert data["witness_curve"] is not None


def test_transport_subcommand(capsys):
    code, out, err = run(capsys, "transport", "--to", "siegel", "1 - z2")
    assert code == 0
    assert out.strip() == "2*w"
    code, out, err = run(capsys, "transport", "--to", "siegel", "w")
    assert code == 2


def test_construct_pc_and_qc(capsys):
    code, data = run_json(capsys, "construct", "pc", "--c", "1/2")
    assert code == 0
    assert data["result"]["text"] == "w - i*w^2 - i*z^2"
    assert data["in_certified_range"] is True
    code, data = run_json(capsys, "construct", "pc", "--c", "3/4")
    assert data["in_certified_range"] is False
    code, data = run_json(capsys, "construct", "qc", "--c", "1/2")
    assert data["in_certified_range"] is False
    assert data["within_sharp_bound"] is True


def test_construct_rudin(capsys):
    code, data = run_json(capsys, "construct", "rudin", "--gs", "1/2,1/8",
                          "--analyze")
    assert code == 0
    assert data["K"] == 2
    code, out, err = run(capsys, "construct", "rudin", "--gs", "2/3")
    assert code == 2


def test_construct_quadform(capsys):
    code, data = run_json(capsys, "construct", "quadform", "--matrix",
                          '[["1","0"],["0","1/2"]]')
    assert code == 0
    assert data["takagi"]["verdict"] == "boundary"
    assert data["takagi"]["D"] == [1.0, 0.5]


def test_construct_rowdet_planted(capsys):
    code, data = run_json(capsys, "construct", "rowdet", "--planted", "2,3",
                          "--factor", "--seed", "5")
    assert code == 0
    assert len(data["zeros"]) >= 1
    assert data["residual"]["text"]


def test_construct_param_and_lift(capsys):
    code, data = run_json(capsys, "construct", "param", "--m", "1",
                          "--c", "1", "--l", "i*s^2")
    assert code == 0
    assert data["curve"]["condition"] == "curve"
    code, data = run_json(capsys, "construct", "lift", "--coeffs", "1,-1",
                          "--dim", "2")
    assert code == 0
    assert data["result"]["text"] == "1 - 2*z1*z2"


def test_check_alg_l(capsys):
    code, data = run_json(capsys, "check-alg-l", "--poly",
                          "y^4 - 4*s^2*y^2 - 1", "--m", "1")
    assert code == 0
    assert data["report"]["passed"] is True
    code, data = run_json(capsys, "check-alg-l", "--poly",
                          "y^2 - 2*i*s*y - 1", "--m", "1")
    assert code == 0  # a failed gate is a successful check
    assert data["report"]["passed"] is False
    assert data["report"]["offending"]


def test_verify_scan(capsys):
    code, data = run_json(capsys, "verify", "scan", "--poly",
                          "w + w^2 - z^2", "--count", "5000")
    assert code == 0
    assert data["report"]["zero_hits"] == []
    assert data["report"]["in_domain"] > 0


def test_verify_scan_deterministic(capsys):
    args = ("verify", "scan", "--poly", "w - i*w^2 - i*z^2",
            "--count", "2000", "--seed", "7")
    _, d1 = run_json(capsys, *args)
    _, d2 = run_json(capsys, *args)
    assert d1 == d2


def test_verify_gfit(capsys):
    code, data = run_json(capsys, "verify", "gfit", "--poly",
                          "w - i*w^2 - i*z^2")
    assert code == 0
    assert data["report"]["expected"] == 4
    assert abs(data["report"]["exponent"] - 4) < 0.2


def test_verify_probe(capsys):
    code, data = run_json(capsys, "verify", "probe", "--numerator", "z1",
                          "--denominator", "1 - z2",
                          "--curve", "ball-tangent")
    assert code == 0
    assert data["report"]["verdict"] == "growth"


def test_verify_trace_text_and_csv(capsys, tmp_path):
    code, out, err = run(capsys, "verify", "trace", "--poly",
                         "w + w^2 - z^2", "--points", "64")
    assert code == 0
    assert "64 points" in out
    target = tmp_path / "trace.csv"
    code, out, err = run(capsys, "verify", "trace", "--closed-form",
                         "lemniscate", "--points", "16", "--format", "csv",
                         "--out", str(target))
    assert code == 0
    lines = target.read_text().splitlines()
    assert lines[0] == "param,z_re,z_im,w_re,w_im"
    assert len(lines) == 17


def test_verify_trace_without_curve_is_unsettled(capsys):
    code, out, err = run(capsys, "verify", "trace", "--poly",
                         "w - i*w^2 - i*z^2")
    assert code == 3


def test_verify_plot_files(capsys, tmp_path):
    png = tmp_path / "scan.png"
    code, out, err = run(capsys, "verify", "scan", "--poly",
                         "w + w^2 - z^2", "--count", "500",
                         "--plot", str(png))
    assert code == 0 and png.exists() and png.stat().st_size > 0
    svg = tmp_path / "trace.svg"
    code, out, err = run(capsys, "verify", "trace", "--closed-form",
                         "lemniscate", "--points", "32", "--plot", str(svg))
    assert code == 0 and svg.exists()
    gfit = tmp_path / "gfit.png"
    code, out, err = run(capsys, "verify", "gfit", "--poly",
                         "w - i*w^2 - i*z^2", "--plot", str(gfit))
    assert code == 0 and gfit.exists()
    probe = tmp_path / "probe.png"
    code, out, err = run(capsys, "verify", "probe", "--numerator", "z1",
                         "--denominator", "1 - z2", "--curve", "ball-tangent",
                         "--plot", str(probe))
    assert code == 0 and probe.exists()


def test_csv_rejected_for_non_tabular_command(capsys):
    code, out, err = run(capsys, "analyze", "w", "--format", "csv")
    assert code == 2


def test_out_writes_file(capsys, tmp_path):
    target = tmp_path / "out.json"
    code, out, err = run(capsys, "analyze", "w", "--format", "json",
                         "--out", str(target))
    assert code == 0
    data = json.loads(target.read_text())
    assert data["ideal"]["kind"] == "basic_power"


def test_backend_env_default(capsys, monkeypatch):
    monkeypatch.setenv("STABLEPOLY_BACKEND", "float")
    code, data = run_json(capsys, "construct", "pc", "--c", "0.25")
    assert code == 0
