"""CLI contract: subcommands, report invariants, exit codes."""

import json
import math

import numpy as np
import pytest

from gauss_renyi.cli import main

LN2 = math.log(2.0)


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


@pytest.fixture
def states(tmp_path):
    return {
        "rho": write(tmp_path, "rho.json", {"thermal": [LN2]}),
        "sigma": write(tmp_path, "sigma.json", {"thermal": [2 * LN2]}),
        "vacuum": write(tmp_path, "vacuum.json", {"thermal": ["inf"]}),
        "coherent": write(tmp_path, "coherent.json", {"coherent": [[1.0, 0.0]]}),
        "dir": tmp_path,
    }


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_entropy_json_round_trip_invariant(states, capsys):
    code, out, _ = run(capsys, ["entropy", "--alpha", "0.5",
                                "--rho", states["rho"],
                                "--sigma", states["sigma"],
                                "--format", "json"])
    assert code == 0
    report = json.loads(out)
    recomputed = float(f"{math.log(report['T_alpha']) / (report['alpha'] - 1.0):.12g}")
    assert recomputed == report["divergence"]
    assert abs(report["divergence"] - 0.108299916535) < 1e-9


def test_entropy_positional_equals_flags(states, capsys):
    code1, out1, _ = run(capsys, ["entropy", "--alpha", "0.5",
                                  states["rho"], states["sigma"],
                                  "--format", "json"])
    code2, out2, _ = run(capsys, ["entropy", "--alpha", "0.5",
                                  "--rho", states["rho"],
                                  "--sigma", states["sigma"],
                                  "--format", "json"])
    assert code1 == code2 == 0
    assert out1 == out2


def test_entropy_table_format(states, capsys):
    code, out, _ = run(capsys, ["entropy", "--alpha", "0.5",
                                states["rho"], states["sigma"]])
    assert code == 0
    assert "divergence" in out and "T_alpha" in out


def test_entropy_identity_near_zero(states, capsys):
    code, out, _ = run(capsys, ["entropy", "--alpha", "0.5",
                                states["rho"], states["rho"],
                                "--format", "json"])
    assert code == 0
    assert abs(json.loads(out)["divergence"]) < 1e-9


def test_state_given_twice_is_usage_error(states, capsys):
    with pytest.raises(SystemExit) as err:
        main(["entropy", "--alpha", "0.5", "--rho", states["rho"],
              states["rho"], states["sigma"]])
    assert err.value.code == 2


def test_pure_sigma_exit_2_mentions_faithful(states, capsys):
    code, _, err = run(capsys, ["entropy", "--alpha", "0.5",
                                states["rho"], states["vacuum"]])
    assert code == 2
    assert "faithful" in err


def test_bad_alpha_exit_2_names_domain(states, capsys):
    code, _, err = run(capsys, ["entropy", "--alpha", "1.0",
                                states["rho"], states["sigma"]])
    assert code == 2
    assert "0<alpha<1" in err


def test_malformed_json_exit_1(states, capsys, tmp_path):
    bad = tmp_path / "broken.json"
    bad.write_text("{nope")
    code, _, err = run(capsys, ["entropy", "--alpha", "0.5",
                                str(bad), states["sigma"]])
    assert code == 1
    assert "malformed JSON" in err


def test_missing_file_exit_1(states, capsys):
    code, _, err = run(capsys, ["entropy", "--alpha", "0.5",
                                str(states["dir"] / "nothere.json"),
                                states["sigma"]])
    assert code == 1


def test_unphysical_state_exit_2(states, capsys, tmp_path):
    bad = write(tmp_path, "unphys.json",
                {"n": 1, "mean": [0, 0], "cov": [[0.1, 0], [0, 0.1]]})
    code, _, err = run(capsys, ["entropy", "--alpha", "0.5",
                                bad, states["sigma"]])
    assert code == 2
    assert "unphysical" in err


def test_sweep_json_monotone_and_consistent(states, capsys):
    code, out, _ = run(capsys, ["sweep", "--alphas", "0.2,0.5,0.8",
                                states["rho"], states["sigma"],
                                "--format", "json"])
    assert code == 0
    results = json.loads(out)["results"]
    assert len(results) == 3
    divs = [r["divergence"] for r in results]
    assert divs == sorted(divs)
    for r in results:
        recomputed = float(f"{math.log(r['T_alpha']) / (r['alpha'] - 1.0):.12g}")
        assert recomputed == r["divergence"]


def test_williamson_vacuum(states, capsys):
    code, out, _ = run(capsys, ["williamson", states["vacuum"],
                                "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["d"] == [0.5]
    assert payload["t"] == ["inf"]


def test_williamson_thermal_ln2(states, capsys):
    code, out, _ = run(capsys, ["williamson", "--rho", states["rho"],
                                "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["d"] == [1.5]
    assert abs(payload["t"][0] - LN2) < 1e-11
    L = np.array(payload["L"])
    assert np.allclose(L.T @ (1.5 * np.eye(2)) @ L, 1.5 * np.eye(2), atol=1e-9)


def test_convert_coherent_kernel(states, capsys):
    code, out, _ = run(capsys, ["convert", states["coherent"],
                                "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert abs(payload["c"] - math.exp(-1.0)) < 1e-11
    assert payload["mu"] == [[1.0, 0.0]]
    assert payload["A"] == [[[0.0, 0.0]]]
    back = payload["state_roundtrip"]
    assert back["mean"] == [1.0, 0.0]
    assert np.allclose(back["cov"], 0.5 * np.eye(2))


def test_verify_coherent_suite(states, capsys):
    code, out, _ = run(capsys, ["verify", "--suite", "coherent",
                                "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert all(row["status"] == "pass" for row in payload["rows"])


def test_verify_small_cutoff_skips_not_fails(states, capsys):
    code, out, _ = run(capsys, ["verify", "--suite", "squeezed",
                                "--verify-cutoff", "8", "--format", "json"])
    assert code == 0
    rows = json.loads(out)["rows"]
    assert rows and all(r["status"] == "skip" for r in rows)
    assert all("cutoff not converged" in r["note"] for r in rows)


def test_verify_unknown_and_empty_suite(states, capsys):
    code, _, err = run(capsys, ["verify", "--suite", "bogus"])
    assert code == 2
    assert "unknown verify group" in err
    code, _, err = run(capsys, ["verify", "--suite", ","])
    assert code == 2


def test_verify_env_tolerance_override(states, capsys, monkeypatch):
    monkeypatch.setenv("GAUSS_RENYI_TOL", "1e-16")
    code, out, _ = run(capsys, ["verify", "--suite", "coherent",
                                "--format", "json"])
    assert code == 1
    assert json.loads(out)["passed"] is False

    monkeypatch.setenv("GAUSS_RENYI_TOL", "not-a-number")
    code, _, err = run(capsys, ["verify", "--suite", "coherent"])
    assert code == 2
    assert "GAUSS_RENYI_TOL" in err


def test_verify_table_lists_rows(states, capsys):
    code, out, _ = run(capsys, ["verify", "--suite", "trace"])
    assert code == 0
    assert "|closed-oracle|" in out
    assert "passed" in out.splitlines()[-1]


def test_usage_error_on_bad_alpha_literal(states):
    with pytest.raises(SystemExit) as err:
        main(["entropy", "--alpha", "abc", states["rho"], states["sigma"]])
    assert err.value.code == 2


def test_missing_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as err:
        main([])
    assert err.value.code == 2
