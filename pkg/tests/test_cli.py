import json

import pytest

from gabidulin.cli import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, main
from gabidulin.progress import ProgressTracker

ROOTS8_RANK_EXAMPLE = {
    "version": 1,
    "entries": [
        1,
        [0, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 1, 0, 0],
        [2, 0, 0, 0, 3, 0, 0, 0],
    ],
}


def write_json(path, document):
    path.write_text(json.dumps(document))
    return str(path)


@pytest.fixture
def cache_dir(tmp_path, fresh_cache):
    return str(tmp_path / "cache")


class TestFieldCheck:
    def test_inadmissible_example(self, capsys, cache_dir):
        assert main(["field", "check", "preset:roots8", "--cache-dir", cache_dir]) == EXIT_FAILURE
        out = capsys.readouterr().out
        assert "Y^8 - 2*Y^4 + 1" in out
        assert "square-free: no" in out
        assert "order: 4" in out

    def test_admissible_example(self, capsys):
        assert main(["field", "check", "preset:kummer", "--no-cache"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "Y^8 - 1" in out
        assert "admissible: yes" in out

    def test_cached_report_is_reused(self, capsys, cache_dir):
        assert main(["field", "check", "preset:cyclotomic-7", "--cache-dir", cache_dir]) == EXIT_OK
        first = capsys.readouterr().out
        assert main(["field", "check", "preset:cyclotomic-7", "--cache-dir", cache_dir]) == EXIT_OK
        assert capsys.readouterr().out == first

    def test_malformed_file(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"version": 1, "levels": [')
        assert main(["field", "check", str(path), "--no-cache"]) == EXIT_USAGE

    def test_missing_file(self, tmp_path):
        assert main(["field", "check", str(tmp_path / "nope.json"), "--no-cache"]) == EXIT_USAGE

    def test_unknown_preset(self, capsys):
        assert main(["field", "check", "preset:nope", "--no-cache"]) == EXIT_USAGE
        assert "unknown preset" in capsys.readouterr().err


class TestRoundtrip:
    def test_recovers_within_radius(self, capsys):
        args = ["code", "roundtrip", "preset:cyclotomic-5", "--n", "4", "--k", "2", "--t", "1"]
        assert main(args + ["--seed", "7", "--no-progress"]) == EXIT_OK
        assert "recovered: yes" in capsys.readouterr().out

    def test_error_free_channel(self, capsys):
        args = ["code", "roundtrip", "preset:cyclotomic-7", "--k", "3", "--t", "0", "--trials", "3"]
        assert main(args + ["--no-progress"]) == EXIT_OK
        assert "recovered 3/3" in capsys.readouterr().out

    def test_rank_above_radius_is_refused(self, capsys):
        args = ["code", "roundtrip", "preset:cyclotomic-5", "--n", "4", "--k", "2", "--t", "2"]
        assert main(args + ["--no-progress"]) == EXIT_USAGE
        assert "radius" in capsys.readouterr().err

    def test_inadmissible_tower_is_refused(self):
        args = ["code", "roundtrip", "preset:roots8", "--n", "4", "--k", "2", "--no-progress"]
        assert main(args) == EXIT_USAGE


class TestWordWeights:
    def test_split_metrics(self, capsys, tmp_path):
        word = write_json(tmp_path / "x.json", ROOTS8_RANK_EXAMPLE)
        assert main(["word", "weights", "preset:roots8", word]) == EXIT_OK
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "4 4 5 5"
        assert out[1].startswith("unified metric: no")

    def test_zero_word(self, capsys, tmp_path):
        word = write_json(tmp_path / "zero.json", {"version": 1, "entries": [0, 0, 0]})
        assert main(["word", "weights", "preset:roots8", word]) == EXIT_OK
        assert capsys.readouterr().out.splitlines()[0] == "0 0 0 0"

    def test_unified_metric(self, capsys, tmp_path):
        word = write_json(tmp_path / "one.json", {"version": 1, "entries": [1]})
        assert main(["word", "weights", "preset:cyclotomic-5", word]) == EXIT_OK
        out = capsys.readouterr().out.splitlines()
        assert out == ["1 1 1 1", "unified metric: yes (rank 1)"]

    def test_wrong_shape(self, tmp_path):
        word = write_json(tmp_path / "bad.json", {"version": 1, "entries": [[1, 2]]})
        assert main(["word", "weights", "preset:cyclotomic-5", word]) == EXIT_USAGE


class TestRepro:
    @pytest.mark.parametrize("example", ["roots8", "ranks8", "kummer", "cyclotomic-5"])
    def test_single_example(self, capsys, example):
        assert main(["repro", example]) == EXIT_OK
        assert "all 1 example(s) match" in capsys.readouterr().out

    @pytest.mark.slow
    def test_all_examples(self, capsys):
        assert main(["repro", "all"]) == EXIT_OK
        assert "example(s) match" in capsys.readouterr().out

    def test_unknown_example(self, capsys):
        assert main(["repro", "nope"]) == EXIT_USAGE
        assert "unknown example" in capsys.readouterr().err


class TestPipeline:
    def test_encode_corrupt_decode(self, capsys, tmp_path):
        spec = "preset:cyclotomic-5"
        message = write_json(tmp_path / "msg.json", {"version": 1, "entries": [1, "1/2"]})

        assert main(["encode", spec, message, "--n", "4"]) == EXIT_OK
        codeword = tmp_path / "codeword.json"
        codeword.write_text(capsys.readouterr().out)
        assert len(json.loads(codeword.read_text())["entries"]) == 4

        assert main(["corrupt", spec, str(codeword), "--t", "1", "--seed", "3"]) == EXIT_OK
        received = tmp_path / "received.json"
        received.write_text(capsys.readouterr().out)
        assert received.read_text() != codeword.read_text()

        assert main(["decode", spec, str(received), "--k", "2"]) == EXIT_OK
        captured = capsys.readouterr()
        assert json.loads(captured.out)["entries"] == [[1, 0, 0, 0], ["1/2", 0, 0, 0]]
        assert "error of rank 1" in captured.err

    def test_corrupt_is_deterministic(self, capsys, tmp_path):
        word = write_json(tmp_path / "w.json", {"version": 1, "entries": [0, 0, 0, 0]})
        args = ["corrupt", "preset:cyclotomic-5", word, "--t", "2", "--seed", "5"]
        assert main(args) == EXIT_OK
        first = capsys.readouterr().out
        assert main(args) == EXIT_OK
        assert capsys.readouterr().out == first

    def test_explicit_support(self, capsys, tmp_path):
        spec = "preset:cyclotomic-5"
        support = write_json(
            tmp_path / "g.json", {"version": 1, "entries": [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]}
        )
        message = write_json(tmp_path / "msg.json", {"version": 1, "entries": [2]})
        assert main(["encode", spec, message, "--g", support]) == EXIT_OK
        codeword = tmp_path / "c.json"
        codeword.write_text(capsys.readouterr().out)
        assert json.loads(codeword.read_text())["entries"][0] == [0, 2, 0, 0]
        assert main(["decode", spec, str(codeword), "--k", "1", "--g", support]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["entries"] == [[2, 0, 0, 0]]

    def test_message_longer_than_support(self, tmp_path):
        message = write_json(tmp_path / "msg.json", {"version": 1, "entries": [1, 2, 3]})
        assert main(["encode", "preset:cyclotomic-5", message, "--n", "2"]) == EXIT_USAGE


class TestCacheCommands:
    def test_info_and_clear(self, capsys, cache_dir):
        main(["field", "check", "preset:cyclotomic-5", "--cache-dir", cache_dir])
        capsys.readouterr()
        assert main(["cache", "info", "--cache-dir", cache_dir]) == EXIT_OK
        assert "Admissibility cache" in capsys.readouterr().out
        assert main(["cache", "clear", "--cache-dir", cache_dir]) == EXIT_OK
        assert "Removed 1 entries" in capsys.readouterr().out


def test_no_command_prints_help(capsys):
    assert main([]) == EXIT_USAGE
    assert "usage: gab" in capsys.readouterr().out


def test_progress_tracker_counts_recoveries():
    with ProgressTracker(3, show_progress=False) as tracker:
        for ok in (True, False, True):
            tracker.record(ok)
    assert tracker.recovered == 2
    assert not tracker.all_recovered
