import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from baton.cli import main
from baton.patterns import default_document, serialize_document

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, args, **kwargs):
    return runner.invoke(main, args, **kwargs)


class TestDefaults:
    def test_emits_builtin_document(self, runner):
        result = invoke(runner, ["defaults", "--beats", "4"])
        assert result.exit_code == 0
        assert result.output == serialize_document(default_document(4))

    def test_unsupported_beats_is_usage_error(self, runner):
        result = invoke(runner, ["defaults", "--beats", "5"])
        assert result.exit_code == 2

    def test_writes_to_file(self, runner, tmp_path):
        out = tmp_path / "p.json"
        result = invoke(runner, ["defaults", "--beats", "2", "--out", str(out)])
        assert result.exit_code == 0
        assert json.loads(out.read_text())["beats"] == 2


class TestValidate:
    def test_defaults_pipe_to_validate(self, runner):
        document = invoke(runner, ["defaults", "--beats", "4"]).output
        result = invoke(runner, ["validate", "-"], input=document)
        assert result.exit_code == 0
        assert "0 error(s)" in result.output

    def test_bad_pattern_exits_one(self, runner, tmp_path):
        doc = json.loads(serialize_document(default_document(2)))
        doc["anchors"][0]["y"] = -5.0  # preparation below its icti
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(doc))
        result = invoke(runner, ["validate", str(bad)])
        assert result.exit_code == 1
        assert "extremum_order" in result.output

    def test_malformed_document_exits_one(self, runner):
        result = invoke(runner, ["validate", "-"], input="{not json")
        assert result.exit_code == 1
        assert "malformed" in result.stderr

    def test_missing_file_is_io_error(self, runner):
        result = invoke(runner, ["validate", "/nonexistent/p.json"])
        assert result.exit_code == 3


class TestReflect:
    def test_twice_restores_document(self, runner):
        document = invoke(runner, ["defaults", "--beats", "3"]).output
        once = invoke(runner, ["reflect", "-"], input=document).output
        twice = invoke(runner, ["reflect", "-"], input=once).output
        assert twice == document
        assert once != document

    def test_flips_x_and_roundness(self, runner):
        document = invoke(runner, ["defaults", "--beats", "2"]).output
        mirrored = json.loads(invoke(runner, ["reflect", "-"], input=document).output)
        original = json.loads(document)
        assert mirrored["view"] == "performer"
        for a, b in zip(original["anchors"], mirrored["anchors"]):
            assert b["x"] == -a["x"]
            assert b["roundness"] == -a["roundness"]
            assert b["y"] == a["y"]


class TestSample:
    def test_out_of_range_beta_is_usage_error(self, runner):
        document = invoke(runner, ["defaults", "--beats", "4"]).output
        result = invoke(runner, ["sample", "-", "--beta", "1.3"], input=document)
        assert result.exit_code == 2
        assert "[0, 1]" in result.stderr

    def test_bad_window_is_usage_error(self, runner):
        document = invoke(runner, ["defaults", "--beats", "4"]).output
        result = invoke(
            runner, ["sample", "-", "--from", "2", "--to", "1"], input=document
        )
        assert result.exit_code == 2

    def test_structured_output_parses(self, runner):
        document = invoke(runner, ["defaults", "--beats", "2"]).output
        result = invoke(
            runner,
            ["sample", "-", "--count", "5", "--format", "structured"],
            input=document,
        )
        assert result.exit_code == 0
        rows = json.loads(result.output)
        assert len(rows) == 5
        assert rows[0]["t"] == 0.0


class TestGoldenFiles:
    """Byte-for-byte stability of every emitting subcommand."""

    def check(self, runner, args, name, input=None):
        result = invoke(runner, args, input=input)
        assert result.exit_code == 0, result.stderr
        expected = (GOLDEN / name).read_bytes()
        assert result.stdout_bytes == expected

    def test_defaults(self, runner):
        self.check(runner, ["defaults", "--beats", "4"], "default_4.json")

    def test_render(self, runner):
        document = (GOLDEN / "default_4.json").read_text()
        self.check(runner, ["render", "-"], "curve_4.svg", input=document)

    def test_speed(self, runner):
        document = (GOLDEN / "default_4.json").read_text()
        self.check(
            runner,
            ["speed", "-", "--bpm", "120", "--beta", "0.7"],
            "speed_4_bpm120_beta0.7.svg",
            input=document,
        )

    def test_sample(self, runner):
        document = (GOLDEN / "default_4.json").read_text()
        self.check(
            runner,
            ["sample", "-", "--bpm", "120", "--beta", "0.6",
             "--from", "0", "--to", "2", "--count", "9"],
            "samples_4_bpm120_beta0.6.csv",
            input=document,
        )
