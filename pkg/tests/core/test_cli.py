import json
from dataclasses import replace
from pathlib import Path

import pytest

from src.core import App, ExitCode, RunConfig, build_parser, main


def read(path: Path) -> dict:
    return json.loads(path.read_text(encoding="utf-8"))


@pytest.fixture
def out_dir(app_config) -> Path:
    return Path(app_config.output_dir)


@pytest.fixture
def basilica_files(write_json, test_config):
    minus, plus, n = test_config.BASILICA_TUNING
    return {
        "data": write_json("tuning.json", {"theta_minus": minus, "theta_plus": plus, "n": n}),
        "sub": write_json("sub.json", {"degree": 2, "classes": [["1/3", "2/3"]]}),
    }


class TestParser:
    """Test argument parsing"""

    def test_missing_poly_is_usage_error(self, app_config):
        """Test that a missing required flag exits with a usage error"""
        with pytest.raises(SystemExit) as exc_info:
            main(["trace", "--angle", "1/3"], app_config)
        assert exc_info.value.code == 2

    def test_unknown_command(self, app_config):
        """Test that an unknown subcommand exits with a usage error"""
        with pytest.raises(SystemExit) as exc_info:
            main(["render"], app_config)
        assert exc_info.value.code == 2

    def test_defaults_follow_config(self, app_config):
        """Test that flag defaults come from the config"""
        args = build_parser(app_config).parse_args(["lam", "--poly", "c=-1"])
        assert args.max_den == app_config.max_den
        assert args.depth == app_config.depth
        assert args.threads is None

    def test_check_flag(self, app_config):
        """Test the --check/--no-check toggle"""
        parser = build_parser(app_config)
        assert parser.parse_args(["tune", "--data", "t", "--sub-lam", "s"]).check
        assert not parser.parse_args(["tune", "--data", "t", "--sub-lam", "s", "--no-check"]).check


class TestThreads:
    """Test parallel width precedence"""

    def test_config_width_used(self, mocker, app_config):
        """Test that the configured thread count is used"""
        run = mocker.patch.object(App, "run", return_value=ExitCode.OK)
        main(["lam", "--poly", "c=-1"], replace(app_config, threads=3))
        assert run.call_args.args[0].threads == 3

    def test_flag_wins(self, mocker, app_config):
        """Test that --threads overrides the config"""
        run = mocker.patch.object(App, "run", return_value=ExitCode.OK)
        main(["lam", "--poly", "c=-1", "--threads", "5"], replace(app_config, threads=3))
        assert run.call_args.args[0].threads == 5

    def test_width_not_in_metadata(self, app_config, tmp_path):
        """Test that the worker count is left out of recorded inputs"""
        run = RunConfig(command="trace", output_dir=tmp_path, stem="x", poly="c=-1", threads=8)
        assert "threads" not in run.inputs()


class TestTrace:
    """Test the trace command"""

    def test_basilica_alpha(self, app_config, out_dir, test_config):
        """Test the landing of 1/3 on the basilica"""
        code = main(["trace", "--poly", "c=-1", "--angle", "1/3"], app_config)
        assert code == ExitCode.OK
        data = read(out_dir / "trace.json")
        assert data["landing"]["status"] == "landed"
        re, im = data["landing"]["landing_point"]
        assert abs(re - test_config.BASILICA_ALPHA) < 1e-6
        assert abs(im) < 1e-6
        assert data["trace"]["angle"] == "1/3"
        assert data["metadata"]["inputs"]["poly"] == "c=-1"
        assert data["metadata"]["tolerances"]["landing_tol"] == 1e-6
        assert (out_dir / "trace.svg").exists()

    def test_radial_ray(self, app_config, tmp_path):
        """Test a radial ray of z^2 with an explicit output path"""
        out = tmp_path / "radial.json"
        code = main(["trace", "--poly", "1,0,0", "--angle", "1/4", "--out", str(out)], app_config)
        assert code == ExitCode.OK
        data = read(out)
        assert all(abs(re) < 1e-9 and im > 0 for re, im in data["trace"]["points"])
        assert (tmp_path / "radial.svg").exists()

    def test_bad_angle(self, app_config):
        """Test that an unparsable angle is a parse error"""
        assert main(["trace", "--poly", "c=-1", "--angle", "bad"], app_config) == ExitCode.PARSE

    def test_bad_polynomial(self, app_config):
        """Test that a non-monic polynomial is a parse error"""
        assert main(["trace", "--poly", "2,0,1", "--angle", "1/3"], app_config) == ExitCode.PARSE

    def test_truncated_still_writes(self, app_config, out_dir):
        """Test that a truncated trace still writes its output"""
        code = main(["trace", "--poly", "c=-1", "--angle", "1/3", "--depth", "3"], app_config)
        assert code == ExitCode.TRUNCATED
        data = read(out_dir / "trace.json")
        assert data["landing"]["status"] == "truncated_budget"
        assert data["landing"]["landing_point"] is None

    def test_disconnected(self, app_config):
        """Test that a disconnected Julia set exits with DISCONNECTED"""
        assert main(["trace", "--poly", "c=-5", "--angle", "1/3"], app_config) == ExitCode.DISCONNECTED


class TestLamination:
    """Test the lam command"""

    @pytest.mark.slow
    def test_basilica(self, app_config, out_dir):
        """Test the basilica lamination and model up to denominator 6"""
        code = main(["lam", "--poly", "c=-1", "--max-den", "6"], app_config)
        assert code == ExitCode.OK
        data = read(out_dir / "lam.json")
        assert data["lamination"]["classes"] == [["1/6", "5/6"], ["1/3", "2/3"]]
        kinds = [node["kind"] for node in data["model"]["nodes"]]
        assert kinds.count("class") == 2
        assert kinds.count("gap") == 3
        assert "<svg" in (out_dir / "lam.svg").read_text(encoding="utf-8")

    @pytest.mark.slow
    def test_z_squared_has_no_classes(self, app_config, out_dir):
        """Test that z^2 has no classes"""
        code = main(["lam", "--poly", "c=0", "--max-den", "12"], app_config)
        assert code == ExitCode.OK
        assert read(out_dir / "lam.json")["lamination"]["classes"] == []

    def test_disconnected(self, app_config):
        """Test that a disconnected Julia set exits with DISCONNECTED"""
        assert main(["lam", "--poly", "c=-5"], app_config) == ExitCode.DISCONNECTED

    @pytest.mark.slow
    def test_deterministic_across_widths(self, app_config, tmp_path):
        """Test that output does not depend on the worker count"""
        outputs = []
        for width in ("1", "8"):
            out = tmp_path / f"w{width}" / "lam.json"
            code = main(
                ["lam", "--poly", "c=-1", "--max-den", "6", "--threads", width, "--out", str(out)],
                app_config,
            )
            assert code == ExitCode.OK
            outputs.append((out.read_bytes(), out.with_suffix(".svg").read_bytes()))
        assert outputs[0] == outputs[1]


class TestTune:
    """Test the tune command"""

    def test_basilica_in_basilica(self, app_config, out_dir, basilica_files):
        """Test tuning the basilica leaf into the basilica"""
        code = main(["tune", "--data", basilica_files["data"], "--sub-lam", basilica_files["sub"]], app_config)
        assert code == ExitCode.OK
        data = read(out_dir / "tune.json")
        assert ["2/5", "3/5"] in data["extended"]["classes"]
        assert data["restricted"]["classes"] == [["1/3", "2/3"]]
        assert data["words"] == ["01", "10"]
        assert data["semiconjugacy"]["ok"]
        assert data["order"]["ok"]

    def test_identity_passthrough(self, app_config, out_dir, write_json, test_config):
        """Test that the identity tuning returns the small lamination"""
        data_path = write_json("identity.json", {"theta_minus": "0", "theta_plus": "0", "n": 1})
        sub_path = write_json("sub.json", {"degree": 2, "classes": test_config.BASILICA_CLASSES})
        code = main(["tune", "--data", data_path, "--sub-lam", sub_path], app_config)
        assert code == ExitCode.OK
        assert read(out_dir / "tune.json")["extended"]["classes"] == test_config.BASILICA_CLASSES

    def test_corrupted_words(self, app_config, out_dir, write_json, basilica_files, test_config):
        """Test that a tuning that breaks cyclic order exits with INCONSISTENT"""
        minus, plus, n = test_config.CORRUPTED_TUNING
        data_path = write_json("corrupted.json", {"theta_minus": minus, "theta_plus": plus, "n": n})
        code = main(["tune", "--data", data_path, "--sub-lam", basilica_files["sub"]], app_config)
        assert code == ExitCode.INCONSISTENT
        data = read(out_dir / "tune.json")
        assert not data["order"]["ok"]
        assert len(data["order"]["witness"]) == 3

    def test_no_check(self, app_config, out_dir, basilica_files):
        """Test that --no-check skips the semiconjugacy check"""
        code = main(
            ["tune", "--data", basilica_files["data"], "--sub-lam", basilica_files["sub"], "--no-check"],
            app_config,
        )
        assert code == ExitCode.OK
        assert read(out_dir / "tune.json")["semiconjugacy"] is None

    def test_linked_sub_lamination(self, app_config, write_json, basilica_files):
        """Test that a linked small lamination exits with INCONSISTENT"""
        sub_path = write_json("linked.json", {"degree": 2, "classes": [["1/12", "5/12"], ["1/3", "2/3"]]})
        code = main(["tune", "--data", basilica_files["data"], "--sub-lam", sub_path], app_config)
        assert code == ExitCode.INCONSISTENT

    def test_invalid_tuning(self, app_config, write_json, basilica_files):
        """Test that invalid tuning data is a parse error"""
        data_path = write_json("bad.json", {"theta_minus": "1/3", "theta_plus": "1/5", "n": 2})
        code = main(["tune", "--data", data_path, "--sub-lam", basilica_files["sub"]], app_config)
        assert code == ExitCode.PARSE

    def test_missing_file(self, app_config, tmp_path, basilica_files):
        """Test that a missing input file is a parse error"""
        code = main(["tune", "--data", str(tmp_path / "nope.json"), "--sub-lam", basilica_files["sub"]], app_config)
        assert code == ExitCode.PARSE


class TestConnectivityCommand:
    """Test the conn command"""

    def test_connected(self, app_config, out_dir):
        """Test the basilica verdict"""
        assert main(["conn", "--poly", "c=-1"], app_config) == ExitCode.OK
        assert read(out_dir / "conn.json")["connectivity"]["verdict"] == "connected"

    def test_disconnected(self, app_config, out_dir):
        """Test that the verdict is written before exiting with DISCONNECTED"""
        assert main(["conn", "--poly", "c=-5"], app_config) == ExitCode.DISCONNECTED
        data = read(out_dir / "conn.json")
        assert data["connectivity"]["verdict"] == "disconnected"
        assert len(data["connectivity"]["escaping_critical_points"]) == 1


class TestPlacement:
    """Test the place command"""

    @pytest.mark.slow
    def test_identity_on_z_squared(self, app_config, out_dir, write_json):
        """Test the identity tuning placed on z^2"""
        data_path = write_json("identity.json", {"theta_minus": "0", "theta_plus": "0", "n": 1})
        code = main(["place", "--poly", "c=0", "--data", data_path, "--samples", "4"], app_config)
        assert code == ExitCode.OK
        report = read(out_dir / "place.json")["report"]
        assert report["order_preserved"]
        assert report["landing_agreement"] == 1.0
        assert len(report["anchor_sample"]) == 4


class TestApp:
    """Test direct App dispatch"""

    def test_unknown_command(self, app_config, tmp_path):
        """Test that App rejects an unknown command"""
        with pytest.raises(ValueError):
            App(app_config).run(RunConfig(command="render", output_dir=tmp_path, stem="x"))
