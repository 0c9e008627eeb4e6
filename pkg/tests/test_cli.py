import json

import numpy as np

from symfusion import Partition, certify, load_ensemble, single_layer_ensemble
from symfusion.cli import main
from symfusion.ensemble_io import save_ensemble, to_json_dict


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestConstruct:
    def test_single_layer_5_2_5(self, tmp_path, capsys):
        out = tmp_path / "e.json"
        code, stdout, _ = run(
            capsys, "construct", "single-layer", "--lambda", "3,2", "--mu", "2,2",
            "--out", str(out),
        )
        assert code == 0
        assert "EITFF_R(5, 2, 5)" in stdout
        e = load_ensemble(out)
        assert (e.d, e.r, e.n) == (5, 2, 5)
        assert e.meta["construction"] == "single_layer"

    def test_alternating_8_3_6(self, tmp_path, capsys):
        out = tmp_path / "a.json"
        code, stdout, _ = run(
            capsys, "construct", "alternating", "--mu", "3,1,1", "--delta", "0",
            "--epsilon", "+", "--out", str(out),
        )
        assert code == 0
        assert "EITFF_R(8, 3, 6)" in stdout
        assert load_ensemble(out).field == "R"

    def test_multi_layer_delta(self, capsys):
        code, stdout, _ = run(
            capsys, "construct", "multi-layer", "--mu", "3,1,1", "--delta", "1",
        )
        assert code == 0
        assert "EITFF_R(20, 6, 6)" in stdout

    def test_trivial_subspace_is_user_error(self, capsys):
        code, _, stderr = run(
            capsys, "construct", "single-layer", "--lambda", "2", "--mu", "1",
        )
        assert code == 2
        assert json.loads(stderr)["error"] == "TrivialSubspaceError"

    def test_resource_cap_exit_code(self, capsys):
        code, _, stderr = run(
            capsys, "construct", "single-layer", "--lambda", "3,2", "--mu", "2,2",
            "--max-dim", "4",
        )
        assert code == 3
        assert json.loads(stderr)["error"] == "ResourceLimitError"

    def test_prediction_mismatch_exit_code(self, capsys):
        # an absurd tolerance makes the equichordal-only pair look isoclinic,
        # which contradicts the theoretical prediction
        code, _, stderr = run(
            capsys, "construct", "single-layer", "--lambda", "4,2,2", "--mu", "3,2,2",
            "--tolerance", "10",
        )
        assert code == 4
        assert "predicts ECTFF" in json.loads(stderr)["message"]

    def test_equichordal_only_matches_prediction(self, capsys):
        code, stdout, _ = run(
            capsys, "construct", "single-layer", "--lambda", "4,2,2", "--mu", "3,2,2",
        )
        assert code == 0
        assert "ECTFF_R(56, 21, 8)" in stdout

    def test_cycle_transversal(self, capsys):
        code, stdout, _ = run(
            capsys, "construct", "single-layer", "--lambda", "3,2", "--mu", "2,2",
            "--transversal", "cycle",
        )
        assert code == 0
        assert "EITFF_R(5, 2, 5)" in stdout

    def test_csv_export(self, tmp_path, capsys):
        out = tmp_path / "e.csv"
        code, _, _ = run(
            capsys, "construct", "single-layer", "--lambda", "3,2", "--mu", "2,2",
            "--csv", str(out),
        )
        assert code == 0
        rows = out.read_text().strip().splitlines()
        assert len(rows) == 5 and len(rows[0].split(",")) == 10

    def test_generic_spec(self, tmp_path, capsys):
        s3 = np.sqrt(3.0)
        spec = {
            "field": "R",
            "generators": {
                "r": [[-0.5, -s3 / 2], [s3 / 2, -0.5]],
                "f": [[1.0, 0.0], [0.0, -1.0]],
            },
            "transversal_words": [["r"], ["r", "r"], []],
            "isometry": [[0.0], [1.0]],
        }
        path = tmp_path / "spec.json"
        path.write_text(json.dumps(spec))
        code, stdout, _ = run(capsys, "construct", "generic", "--spec", str(path))
        assert code == 0
        assert "EITFF_R(2, 1, 3)" in stdout


class TestCertify:
    def test_round_trip_report_is_bitwise_identical(self, tmp_path, capsys):
        e = single_layer_ensemble(Partition((3, 2)), Partition((2, 2)))
        path = tmp_path / "e.json"
        save_ensemble(e, path)
        in_memory = certify(e).to_json()
        code, stdout, _ = run(capsys, "certify", "--in", str(path))
        assert code == 0
        assert stdout.strip() == in_memory.strip()

    def test_verbatim_5_2_5_matrix(self, tmp_path, capsys):
        s2, s3, s6 = np.sqrt(2.0), np.sqrt(3.0), np.sqrt(6.0)
        synth = np.array([
            [4 * s6, 0, -2 * s6, -6 * s2, 4 * s6, 0, 0, 0, 0, 0],
            [-s3, 9, -4 * s3, 6, 2 * s3, 0, -3 * s3, -9, 0, 0],
            [-3, -3 * s3, -6, 0, 0, 6 * s3, -9, 3 * s3, 0, 0],
            [-3, -3 * s3, 6, 0, 6, 0, -3, -3 * s3, 12, 0],
            [-3 * s3, 3, 0, -6, 0, -6, -3 * s3, 3, 0, 12],
        ]) / 12
        data = {
            "field": "R", "d": 5, "r": 2, "n": 5,
            "isometries": [synth[:, 2 * k : 2 * k + 2].tolist() for k in range(5)],
            "metadata": {"source": "published synthesis matrix"},
        }
        path = tmp_path / "verbatim.json"
        path.write_text(json.dumps(data))
        code, stdout, _ = run(capsys, "certify", "--in", str(path))
        assert code == 0
        report = json.loads(stdout)
        assert report["classification"] == "EITFF"
        assert abs(report["isoclinism_alpha"] - 0.25) < 1e-9

    def test_perturbed_file_not_eitff(self, tmp_path, capsys):
        e = single_layer_ensemble(Partition((3, 2)), Partition((2, 2)))
        data = to_json_dict(e)
        data["isometries"][0][0][0] += 1e-3
        path = tmp_path / "p.json"
        path.write_text(json.dumps(data))
        code, stdout, _ = run(capsys, "certify", "--in", str(path))
        assert code == 0
        assert json.loads(stdout)["classification"] != "EITFF"

    def test_non_isometry_block_is_load_error(self, tmp_path, capsys):
        e = single_layer_ensemble(Partition((3, 2)), Partition((2, 2)))
        data = to_json_dict(e)
        data["isometries"][0][0] = [0.0, 0.0]  # kill a row: far from isometry?
        # make it decisively non-isometric: duplicate a column
        for row in data["isometries"][1]:
            row[1] = row[0]
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(data))
        code, _, stderr = run(capsys, "certify", "--in", str(path))
        assert code == 2
        assert json.loads(stderr)["error"] == "EnsembleFormatError"


class TestSearchAndTable:
    def test_search_streams_certificates(self, capsys):
        code, stdout, _ = run(capsys, "search-isoclinic", "--max-n", "13")
        assert code == 0
        lines = [json.loads(line) for line in stdout.strip().splitlines()]
        mus = {entry["mu"] for entry in lines}
        assert "2,2" in mus and "3,1,1" in mus and "5,3,2,1,1" in mus
        entry = next(x for x in lines if x["mu"] == "5,3,2,1,1" and x["delta"] == 0)
        assert entry["d"] == 42900 and entry["r"] == 7700 and entry["n"] == 13
        assert entry["alpha"] == "1/9"

    def test_table_sn(self, capsys):
        code, stdout, _ = run(capsys, "table", "sn", "--max-dim", "500", "--json")
        assert code == 0
        rows = {(r["d"], r["r"], r["n"]) for r in json.loads(stdout)}
        for expected in [(5, 2, 5), (14, 5, 7), (16, 6, 6), (42, 14, 9),
                         (90, 20, 8), (168, 56, 9), (210, 42, 10), (448, 70, 10)]:
            assert expected in rows

    def test_table_an(self, capsys):
        code, stdout, _ = run(capsys, "table", "an", "--max-dim", "500", "--json")
        assert code == 0
        rows = [(r["field"], r["d"], r["r"], r["n"], r["alpha"]) for r in json.loads(stdout)]
        assert rows == [
            ("R", 8, 3, 6, "1/4"),
            ("C", 35, 10, 8, "9/49"),
            ("R", 126, 35, 10, "16/81"),
            ("C", 462, 126, 12, "25/121"),
        ]

    def test_table_alpha_consistency(self, capsys):
        from fractions import Fraction

        code, stdout, _ = run(capsys, "table", "sn", "--max-dim", "2200", "--json")
        assert code == 0
        for row in json.loads(stdout):
            alpha = Fraction(row["alpha"])
            assert alpha == Fraction(
                row["r"] * row["n"] - row["d"], row["d"] * (row["n"] - 1)
            )

    def test_table_certified_flag(self, capsys):
        code, stdout, _ = run(
            capsys, "table", "sn", "--max-dim", "20", "--certify-max-dim", "16", "--json"
        )
        assert code == 0
        rows = json.loads(stdout)
        assert all(r["certified"] is True for r in rows)


class TestOptionPrecedence:
    def test_env_sets_max_dim(self, capsys, monkeypatch):
        monkeypatch.setenv("SYMFUSION_MAX_DIM", "4")
        code, _, _ = run(
            capsys, "construct", "single-layer", "--lambda", "3,2", "--mu", "2,2",
        )
        assert code == 3

    def test_flag_beats_env(self, capsys, monkeypatch):
        monkeypatch.setenv("SYMFUSION_MAX_DIM", "4")
        code, _, _ = run(
            capsys, "construct", "single-layer", "--lambda", "3,2", "--mu", "2,2",
            "--max-dim", "100",
        )
        assert code == 0

    def test_config_file_used_when_no_flag_or_env(self, tmp_path, capsys):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"max_dim": 4}))
        code, _, _ = run(
            capsys, "--config", str(cfg),
            "construct", "single-layer", "--lambda", "3,2", "--mu", "2,2",
        )
        assert code == 3

    def test_env_beats_config(self, tmp_path, capsys, monkeypatch):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"max_dim": 4}))
        monkeypatch.setenv("SYMFUSION_MAX_DIM", "100")
        code, _, _ = run(
            capsys, "--config", str(cfg),
            "construct", "single-layer", "--lambda", "3,2", "--mu", "2,2",
        )
        assert code == 0


def test_determinism(capsys):
    code1, out1, _ = run(capsys, "table", "an", "--max-dim", "500")
    code2, out2, _ = run(capsys, "table", "an", "--max-dim", "500")
    assert code1 == code2 == 0
    assert out1 == out2
