"""Command-line behaviour: outputs, exit codes, determinism."""

import pytest

from maymust import serialize
from maymust.cli import main

from .instances import CHAIN_MMA, MUTUAL_PAIR_ADF, THREE_CYCLE_MMA, TWO_ON_ONE_ADF


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, fw in (
        ("three_cycle.mma", THREE_CYCLE_MMA),
        ("mutual_pair.adf", MUTUAL_PAIR_ADF),
        ("chain.mma", CHAIN_MMA),
        ("two_on_one.adf", TWO_ON_ONE_ADF),
    ):
        path = tmp_path / name
        path.write_text(serialize(fw))
        paths[name] = str(path)
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExact:
    def test_three_cycle(self, files, capsys):
        code, out, _ = run(capsys, "exact", files["three_cycle.mma"])
        assert code == 0
        assert out == (
            "a_p=out a_q=in a_r=out\n"
            "a_p=out a_q=in a_r=undec\n"
            "# count: 2\n"
        )

    def test_mutual_pair(self, files, capsys):
        code, out, _ = run(capsys, "exact", files["mutual_pair.adf"])
        assert code == 0
        assert out.endswith("# count: 2\n")

    def test_deterministic(self, files, capsys):
        _, first, _ = run(capsys, "exact", files["chain.mma"])
        _, second, _ = run(capsys, "exact", files["chain.mma"])
        assert first == second


class TestGrounded:
    def test_three_cycle(self, files, capsys):
        code, out, _ = run(capsys, "grounded", files["three_cycle.mma"])
        assert code == 0
        assert out == "a_p=out a_q=in a_r=undec\n"

    def test_figures(self, files, capsys, tmp_path):
        figures = tmp_path / "figs"
        code, _, _ = run(
            capsys, "grounded", files["three_cycle.mma"], "--figures", str(figures)
        )
        assert code == 0
        target = figures / "grounded.png"
        assert target.is_file() and target.stat().st_size > 0


class TestAccept:
    def test_yes(self, files, capsys):
        code, out, _ = run(
            capsys, "accept", files["three_cycle.mma"],
            "--arg", "a_r", "--mode", "credulous", "--label", "out",
            "--semantics", "exact",
        )
        assert (code, out) == (0, "yes\n")

    def test_no(self, files, capsys):
        code, out, _ = run(
            capsys, "accept", files["three_cycle.mma"],
            "--arg", "a_r", "--mode", "skeptical", "--label", "out",
            "--semantics", "exact",
        )
        assert (code, out) == (1, "no\n")

    def test_unknown_argument_is_usage_error(self, files, capsys):
        code, _, err = run(
            capsys, "accept", files["three_cycle.mma"],
            "--arg", "nope", "--mode", "credulous", "--label", "in",
            "--semantics", "exact",
        )
        assert code == 2
        assert "unknown argument" in err

    def test_bad_flag_value(self, files, capsys):
        code, _, _ = run(
            capsys, "accept", files["three_cycle.mma"],
            "--arg", "a_r", "--mode", "credulous", "--label", "undec",
            "--semantics", "exact",
        )
        assert code == 2


class TestAbstract:
    def test_two_on_one(self, files, capsys):
        code, out, _ = run(capsys, "abstract", files["two_on_one.adf"])
        assert code == 0
        assert "scale a_2 1 3 1 1" in out.splitlines()

    def test_all_minimal(self, files, capsys):
        code, out, _ = run(capsys, "abstract", files["two_on_one.adf"], "--all-minimal")
        assert code == 0
        assert out.count("mma") == 1  # the minimum is unique here


class TestConcretize:
    def test_count(self, files, capsys):
        code, out, _ = run(capsys, "concretize", files["chain.mma"], "--count")
        assert code == 0
        assert "factor a_4 4" in out.splitlines()
        assert out.splitlines()[-1] == "total 24"

    def test_canonical_parses_back(self, files, capsys, tmp_path):
        code, out, _ = run(capsys, "concretize", files["chain.mma"], "--canonical")
        assert code == 0
        candidate = tmp_path / "candidate.adf"
        candidate.write_text(out)
        code, out, _ = run(
            capsys, "concretize", files["chain.mma"], "--check", str(candidate)
        )
        assert (code, out) == (0, "yes\n")

    def test_check_no(self, files, capsys, tmp_path):
        _, canonical, _ = run(capsys, "concretize", files["chain.mma"], "--canonical")
        bad = tmp_path / "bad.adf"
        bad.write_text(canonical.replace("cond a_1 - in", "cond a_1 - out"))
        code, out, _ = run(
            capsys, "concretize", files["chain.mma"], "--check", str(bad)
        )
        assert (code, out) == (1, "no\n")

    def test_check_graph_mismatch_is_usage_error(self, files, capsys):
        code, _, err = run(
            capsys, "concretize", files["three_cycle.mma"],
            "--check", files["mutual_pair.adf"],
        )
        assert code == 2
        assert "graph" in err.lower()

    def test_enumerate(self, files, capsys):
        code, out, _ = run(capsys, "concretize", files["chain.mma"], "--enumerate", "3")
        assert code == 0
        assert out.count("adf\n") == 3

    def test_enumerate_zero_is_usage_error(self, files, capsys):
        code, _, err = run(capsys, "concretize", files["chain.mma"], "--enumerate", "0")
        assert code == 2
        assert "limit" in err


class TestCheckAndErrors:
    def test_check_ok(self, files, capsys):
        code, out, _ = run(capsys, "check", files["chain.mma"])
        assert (code, out) == (0, "ok\n")

    def test_check_warns_on_unreachable_scale(self, tmp_path, capsys):
        path = tmp_path / "warn.mma"
        path.write_text("mma\narg a\nscale a 0 9 0 1\n")
        code, out, _ = run(capsys, "check", str(path))
        assert code == 0
        assert out.splitlines()[0].startswith("warning:")
        assert out.splitlines()[-1] == "ok"

    def test_parse_error_exit_2(self, tmp_path, capsys):
        path = tmp_path / "bad.mma"
        path.write_text("mma\narg a\nscale a 2 1 0 0\n")
        code, _, err = run(capsys, "check", str(path))
        assert code == 2
        assert "line 3" in err

    def test_missing_file_exit_2(self, capsys):
        code, _, err = run(capsys, "check", "no_such_file.mma")
        assert code == 2

    def test_resource_cap_exit_3(self, tmp_path, capsys):
        names = [f"x{i}" for i in range(5)]
        doc = "mma\n" + "".join(f"arg {n}\n" for n in names) + "".join(
            f"scale {n} 0 0 1 1\n" for n in names
        )
        path = tmp_path / "big.mma"
        path.write_text(doc)
        code, _, err = run(capsys, "--max-args", "4", "exact", str(path))
        assert code == 3
        assert "cap" in err


class TestTransfer:
    def test_reports_certified_facts(self, files, capsys):
        code, out, _ = run(capsys, "transfer", files["two_on_one.adf"])
        assert code == 0
        lines = out.splitlines()
        assert "certified: exact-labelling a_1=in a_2=out a_3=in" in lines
        assert "certified: grounded-lower-bound a_1=in a_2=out a_3=in" in lines
        assert all(line.startswith(("certified:", "conditional:")) for line in lines)

    def test_figures(self, files, capsys, tmp_path):
        figures = tmp_path / "figs"
        code, _, _ = run(
            capsys, "transfer", files["two_on_one.adf"], "--figures", str(figures)
        )
        assert code == 0
        for name in ("grounded_bound.png", "grounded.png"):
            data = (figures / name).read_bytes()
            assert data.startswith(b"\x89PNG")

    def test_output_is_deterministic(self, files, capsys):
        for argv in (
            ["abstract", files["two_on_one.adf"]],
            ["transfer", files["two_on_one.adf"]],
            ["concretize", files["chain.mma"], "--enumerate", "4"],
        ):
            _, first, _ = run(capsys, *argv)
            _, second, _ = run(capsys, *argv)
            assert first == second


class TestFuzz:
    def test_reproducible(self, capsys):
        code, first, _ = run(capsys, "fuzz", "--seed", "3", "--count", "10")
        assert code == 0
        _, second, _ = run(capsys, "fuzz", "--seed", "3", "--count", "10")
        assert first == second == "ok: 10 instances, no violations\n"

    def test_violation_rendering_replays(self, files):
        from maymust import parse
        from maymust.fuzz import Violation

        doc = serialize(THREE_CYCLE_MMA)
        rendered = Violation("some-property", "details", [doc]).render()
        assert rendered.splitlines()[0] == "# violation: some-property"
        assert parse(rendered) == THREE_CYCLE_MMA  # comments strip away
