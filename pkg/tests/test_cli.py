import json

import pytest

from polymer_heaps.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestSeries:
    def test_schroeder_table(self, capsys):
        code, out, _ = run(capsys, "series", "--which", "S", "--order", "5")
        assert code == 0
        payload = json.loads(out)
        assert payload == {
            "name": "S",
            "order": 5,
            "coefficients": ["0", "1", "3", "11", "45", "197"],
        }

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "series", "--which", "Q", "--order", "3", "--format", "csv")
        assert code == 0
        assert out.splitlines() == ["n,coefficient", "0,0", "1,1", "2,4", "3,16"]

    def test_dj_needs_j(self, capsys):
        code, _, err = run(capsys, "series", "--which", "Dj", "--order", "4")
        assert code == 2
        assert "Dj" in err

    def test_deterministic(self, capsys):
        _, first, _ = run(capsys, "series", "--which", "M", "--order", "8")
        _, second, _ = run(capsys, "series", "--which", "M", "--order", "8")
        assert first == second

    def test_output_file(self, capsys, tmp_path):
        path = tmp_path / "series.json"
        code, out, _ = run(capsys, "series", "--which", "R", "--order", "2", "--output", str(path))
        assert code == 0 and out == ""
        assert json.loads(path.read_text())["coefficients"] == ["0", "2", "4"]


class TestEnumerate:
    def test_multi_includes_chain(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--class", "multi", "--max-area", "4")
        assert code == 0
        payload = json.loads(out)
        assert payload["classes"] == ["all", "directed", "multi"]
        by_area = {row["area"]: row for row in payload["rows"]}
        assert by_area[4]["multi"] == "110"
        assert by_area[4]["all"] == "110"
        assert by_area[3]["directed"] == "19"

    def test_emit_objects(self, capsys):
        code, out, _ = run(
            capsys, "enumerate", "--class", "directed", "--max-area", "2", "--emit-objects"
        )
        payload = json.loads(out)
        assert payload["rows"][1]["directed"] == "4"
        assert [[0, 0]] in payload["objects"]["1"]
        assert len(payload["objects"]["2"]) == 4

    def test_heap_classes(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--class", "connected-heaps", "--max-area", "4")
        payload = json.loads(out)
        assert [row["connected_heaps"] for row in payload["rows"]] == ["1", "4", "20", "110"]

    def test_guard(self, capsys):
        code, _, err = run(capsys, "enumerate", "--class", "all", "--max-area", "15")
        assert code == 2
        assert "guard" in err


class TestVerify:
    def test_nordic_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "nordic", "--max-area", "5")
        assert code == 0
        payload = json.loads(out)
        assert payload["pass"] is True
        assert all(row["pass"] for row in payload["rows"])

    def test_bijections_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "bijections", "--max-area", "4")
        assert code == 0

    def test_ak_passes(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--suite", "ak", "--max-area", "5", "--order", "8"
        )
        assert code == 0

    def test_lemma_hd_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "lemma-hd", "--order", "10")
        assert code == 0

    def test_oracle_passes(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--suite", "oracle", "--max-area", "5", "--order", "12"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["suite"] == "oracle"

    def test_failure_exit_code(self, capsys, monkeypatch):
        import polymer_heaps.cli as cli

        monkeypatch.setattr(
            cli, "_suite_nordic", lambda *a: [{"check": "x", "pass": False, "detail": ""}]
        )
        code, out, _ = run(capsys, "verify", "--suite", "nordic")
        assert code == 1


class TestAsymptotics:
    def test_constants(self, capsys):
        code, out, _ = run(capsys, "asymptotics", "--which", "constants")
        assert code == 0
        payload = json.loads(out)
        rows = {row["constant"]: row for row in payload["rows"]}
        assert rows["mu"]["pass"] is True
        assert abs(rows["rho_M"]["computed"] - 0.1544) < 1e-3

    def test_directed_small(self, capsys):
        code, out, _ = run(capsys, "asymptotics", "--which", "directed", "--n", "300")
        payload = json.loads(out)
        assert payload["points"][1]["n"] == 300
        # at n = 300 the lw deviation is still a few percent; the payload
        # reports it honestly and the exit code follows the pass flag
        assert code == (0 if payload["pass"] else 1)


class TestUsage:
    def test_unknown_flag(self, capsys):
        assert run(capsys, "series", "--which", "S", "--bogus")[0] == 2

    def test_unknown_subcommand(self, capsys):
        assert run(capsys, "frobnicate")[0] == 2

    def test_missing_subcommand(self, capsys):
        assert run(capsys)[0] == 2

    def test_bad_threads_env(self, capsys, monkeypatch):
        monkeypatch.setenv("POLYMER_HEAPS_THREADS", "zero")
        assert run(capsys, "series", "--which", "S", "--order", "2")[0] == 2

    def test_good_threads_env(self, capsys, monkeypatch):
        monkeypatch.setenv("POLYMER_HEAPS_THREADS", "4")
        assert run(capsys, "series", "--which", "S", "--order", "2")[0] == 0

    def test_order_guard_and_force(self, capsys):
        assert run(capsys, "series", "--which", "S", "--order", "5001")[0] == 2
