import json

from foulkes import cli
from foulkes.cli import (
    EXIT_BUDGET,
    EXIT_DISCREPANCY,
    EXIT_INPUT,
    EXIT_INTERRUPT,
    EXIT_OK,
    main,
)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestHappyPaths:
    def test_multiplicity(self, capsys):
        code, out, _ = run(capsys, "multiplicity", "3", "3", "5,2,2")
        assert code == EXIT_OK
        assert json.loads(out) == {"a": 3, "b": 3, "lambda": "5,2,2", "mult": 1}

    def test_multiplicity_no_fastpath(self, capsys):
        code, out, _ = run(capsys, "multiplicity", "2", "3", "3,1,1,1", "--no-fastpath")
        assert code == EXIT_OK
        assert json.loads(out)["mult"] == 0

    def test_decompose_json(self, capsys):
        code, out, _ = run(capsys, "decompose", "2", "3", "--nonzero")
        assert code == EXIT_OK
        assert json.loads(out)["entries"] == [
            {"lambda": "6", "mult": 1},
            {"lambda": "4,2", "mult": 1},
            {"lambda": "2,2,2", "mult": 1},
        ]

    def test_decompose_csv(self, capsys):
        code, out, _ = run(capsys, "decompose", "2", "2", "--csv")
        assert code == EXIT_OK
        assert out == (
            "lambda,mult,dimension\n"
            "4,1,1\n"
            '"3,1",0,3\n'
            '"2,2",1,2\n'
            '"2,1,1",0,3\n'
            '"1,1,1,1",0,1\n'
        )

    def test_census(self, capsys):
        code, out, _ = run(capsys, "census", "2", "3")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert (payload["total"], payload["zero"], payload["predicted"]) == (7, 4, 3)
        assert isinstance(payload["elapsed_ms"], int)

    def test_verify_clean(self, capsys):
        code, out, _ = run(capsys, "verify", "2", "4")
        assert code == EXIT_OK
        assert json.loads(out)["discrepancies"] == []

    def test_restrict(self, capsys):
        code, out, _ = run(capsys, "restrict", "2", "3", "2")
        assert code == EXIT_OK
        assert json.loads(out) == {
            "a": 2, "b": 3, "r": 2, "total": 15,
            "orbits": [
                {"lambda": "2", "size": 3},
                {"lambda": "1,1", "size": 12},
            ],
        }

    def test_hook_coords_encode(self, capsys):
        code, out, _ = run(capsys, "hook-coords", "7,3,1,1")
        assert code == EXIT_OK
        assert json.loads(out) == {
            "lambda": "7,3,1,1", "total": 12, "leg": 3,
            "inside": "2", "inside_weight": 2, "tail_weight": 0,
        }

    def test_hook_coords_build(self, capsys):
        code, out, _ = run(capsys, "hook-coords", "--total", "10", "--leg", "3",
                           "--inside", "3")
        assert code == EXIT_OK
        assert json.loads(out)["lambda"] == "4,4,1,1"

    def test_hook_coords_build_bare_hook(self, capsys):
        code, out, _ = run(capsys, "hook-coords", "--total", "6", "--leg", "2")
        assert code == EXIT_OK
        assert json.loads(out)["lambda"] == "4,1,1"

    def test_help(self, capsys):
        assert run(capsys, "--help")[0] == EXIT_OK


class TestByteStability:
    def test_decompose_json_bytes(self, capsys):
        first = run(capsys, "decompose", "3", "3")
        second = run(capsys, "decompose", "3", "3")
        assert first == second

    def test_decompose_csv_bytes(self, capsys):
        first = run(capsys, "decompose", "3", "3", "--csv")
        second = run(capsys, "decompose", "3", "3", "--csv")
        assert first == second

    def test_restrict_bytes(self, capsys):
        first = run(capsys, "restrict", "3", "4", "5")
        second = run(capsys, "restrict", "3", "4", "5")
        assert first == second

    def test_multiplicity_bytes(self, capsys):
        first = run(capsys, "multiplicity", "2", "5", "6,4")
        second = run(capsys, "multiplicity", "2", "5", "6,4")
        assert first == second


class TestFailurePaths:
    def test_bad_partition_text(self, capsys):
        code, _, err = run(capsys, "multiplicity", "2", "3", "6;1")
        assert code == EXIT_INPUT
        assert "error" in err

    def test_wrong_weight(self, capsys):
        assert run(capsys, "multiplicity", "2", "3", "5,2")[0] == EXIT_INPUT

    def test_degree_guard(self, capsys):
        code, _, err = run(capsys, "decompose", "5", "5")
        assert code == EXIT_INPUT
        assert "--max-ab" in err

    def test_degree_guard_can_be_raised(self, capsys):
        assert run(capsys, "multiplicity", "5", "5", "25",
                   "--max-ab", "25")[0] == EXIT_OK

    def test_census_size_gate(self, capsys):
        code, _, err = run(capsys, "census", "4", "8")
        assert code == EXIT_INPUT
        assert "--allow-large" in err

    def test_unknown_command(self, capsys):
        assert run(capsys, "frobnicate")[0] == EXIT_INPUT

    def test_no_command(self, capsys):
        assert run(capsys)[0] == EXIT_INPUT

    def test_hook_coords_needs_exactly_one_mode(self, capsys):
        assert run(capsys, "hook-coords")[0] == EXIT_INPUT
        assert run(capsys, "hook-coords", "3,1", "--total", "4", "--leg", "1")[0] \
            == EXIT_INPUT
        assert run(capsys, "hook-coords", "--total", "4")[0] == EXIT_INPUT

    def test_hook_coords_invalid_shape(self, capsys):
        code, _, err = run(capsys, "hook-coords", "--total", "9", "--leg", "3",
                           "--inside", "3")
        assert code == EXIT_INPUT
        assert "first row" in err

    def test_time_budget(self, capsys):
        code, _, err = run(capsys, "decompose", "3", "7", "--max-ab", "21",
                           "--jobs", "1", "--time-limit", "0.000001")
        assert code == EXIT_BUDGET
        assert "time limit" in err

    def test_interrupt_maps_to_its_code(self, capsys, monkeypatch):
        def boom(*args, **kwargs):
            raise KeyboardInterrupt
        monkeypatch.setattr(cli, "census", boom)
        assert run(capsys, "census", "2", "3")[0] == EXIT_INTERRUPT

    def test_claim_violation_maps_to_discrepancy(self, capsys, monkeypatch):
        def boom(*args, **kwargs):
            raise ArithmeticError("fabricated for the exit-code path")
        monkeypatch.setattr(cli, "census", boom)
        code, _, err = run(capsys, "census", "2", "3")
        assert code == EXIT_DISCREPANCY
        assert "claim violation" in err


class TestCharacterCacheDir:
    def test_cache_file_created_and_reused(self, capsys, monkeypatch, tmp_path):
        monkeypatch.setenv("FOULKES_CACHE_DIR", str(tmp_path))
        assert run(capsys, "multiplicity", "2", "4", "4,4")[0] == EXIT_OK
        cache_file = tmp_path / cli.CACHE_FILE
        assert cache_file.exists()
        before = cache_file.stat().st_size
        assert before > 0
        assert run(capsys, "multiplicity", "2", "4", "4,4")[0] == EXIT_OK
        assert cache_file.stat().st_size >= before

    def test_missing_dir_is_created(self, capsys, monkeypatch, tmp_path):
        target = tmp_path / "nested" / "cache"
        monkeypatch.setenv("FOULKES_CACHE_DIR", str(target))
        assert run(capsys, "multiplicity", "2", "2", "2,2")[0] == EXIT_OK
        assert (target / cli.CACHE_FILE).exists()
