"""End-to-end CLI contract: bytes, exit codes, files, environment knobs."""

import json

import pytest

from dimeq import cli


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("DIMEQ_MAX_N", "DIMEQ_MAX_L", "DIMEQ_CEX_CAP", "DIMEQ_WORKERS"):
        monkeypatch.delenv(name, raising=False)


def run_cli(capsys, *argv):
    rc = cli.run(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def write_spec(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


SPEH_PAIR = {
    "n": 4,
    "representations": [
        {"kind": "speh", "p": 2, "q": 2},
        {"kind": "speh", "p": 2, "q": 2},
    ],
}
MINIMAL_TRIPLE_6 = {
    "n": 6,
    "representations": [
        {
            "kind": "eisenstein",
            "blocks": [5, 1],
            "constituents": [{"kind": "trivial"}, {"kind": "trivial"}],
        }
    ]
    * 3,
}
FULL_TRIPLE_3 = {
    "n": 3,
    "representations": [
        {"kind": "generic"},
        {"kind": "generic"},
        {
            "kind": "eisenstein",
            "blocks": [2, 1],
            "constituents": [{"kind": "trivial"}, {"kind": "trivial"}],
        },
    ],
}


class TestPartitionCommands:
    def test_dim_exact_bytes(self, capsys):
        rc, out, err = run_cli(capsys, "partition", "dim", "[3,3]")
        assert rc == 0 and err == ""
        assert out == '{"orbit_dim":24,"rep_dim":12,"n":6}\n'

    def test_dim_text(self, capsys):
        rc, out, _ = run_cli(capsys, "partition", "dim", "[3,3]", "--format", "text")
        assert rc == 0 and out == "orbit_dim 24 rep_dim 12 n 6\n"

    def test_transpose(self, capsys):
        rc, out, _ = run_cli(capsys, "partition", "transpose", "[3,2,2,1]")
        assert rc == 0 and out == '{"partition":[4,3,1],"n":8}\n'

    def test_compare(self, capsys):
        rc, out, _ = run_cli(capsys, "partition", "compare", "[3,3]", "[4,1,1]")
        assert rc == 0 and out == '{"relation":"incomparable"}\n'
        rc, out, _ = run_cli(capsys, "partition", "compare", "[3,3]", "[2,2,2]")
        assert out == '{"relation":"greater"}\n'
        rc, out, _ = run_cli(capsys, "partition", "compare", "[3,3]", "[3,3]")
        assert out == '{"relation":"equal"}\n'

    def test_add(self, capsys):
        rc, out, _ = run_cli(capsys, "partition", "add", "[2,1]", "[1,1]")
        assert rc == 0 and out == '{"partition":[3,2],"n":5}\n'

    def test_from_epsilon(self, capsys):
        rc, out, _ = run_cli(capsys, "partition", "from-epsilon", "10101")
        assert rc == 0 and out == '{"partition":[2,2,2],"n":6}\n'

    def test_bad_partition_is_exit_2(self, capsys):
        rc, out, err = run_cli(capsys, "partition", "dim", "[2,3]")
        assert rc == 2 and out == "" and err.startswith("error:")
        rc, _, _ = run_cli(capsys, "partition", "dim", "not json")
        assert rc == 2

    def test_bad_bits_is_exit_2(self, capsys):
        rc, _, err = run_cli(capsys, "partition", "from-epsilon", "10201")
        assert rc == 2 and err.startswith("error:")


class TestRepCommands:
    def test_orbit(self, capsys, tmp_path):
        path = write_spec(tmp_path, "speh.json", {"kind": "speh", "p": 2, "q": 3})
        rc, out, _ = run_cli(capsys, "rep", "orbit", path, "--n", "6")
        assert rc == 0 and out == '{"orbit":[2,2,2],"n":6}\n'

    def test_dim_infers_constituent_ranks(self, capsys, tmp_path):
        path = write_spec(
            tmp_path,
            "eis.json",
            {
                "kind": "eisenstein",
                "blocks": [5, 1],
                "constituents": [{"kind": "trivial"}, {"kind": "trivial"}],
            },
        )
        rc, out, _ = run_cli(capsys, "rep", "dim", path)
        assert rc == 0
        assert out == '{"rep_dim":5,"orbit_dim":10,"orbit":[2,1,1,1,1],"n":6}\n'

    def test_rank_mismatch_is_exit_2(self, capsys, tmp_path):
        path = write_spec(tmp_path, "speh.json", {"kind": "speh", "p": 2, "q": 3})
        rc, _, err = run_cli(capsys, "rep", "orbit", path, "--n", "7")
        assert rc == 2 and err.startswith("error:")

    def test_missing_file_is_exit_2(self, capsys, tmp_path):
        rc, _, err = run_cli(capsys, "rep", "orbit", str(tmp_path / "absent.json"))
        assert rc == 2 and err.startswith("error:")

    def test_garbage_json_is_exit_2(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{{{", encoding="utf-8")
        rc, _, err = run_cli(capsys, "rep", "orbit", str(path))
        assert rc == 2 and "invalid JSON" in err


class TestEquationCommands:
    def test_check_holding_spec(self, capsys, tmp_path):
        path = write_spec(
            tmp_path,
            "gen.json",
            {"n": 4, "representations": [{"kind": "generic"}]},
        )
        rc, out, _ = run_cli(capsys, "equation", "check", path)
        assert rc == 0
        assert out == '{"lhs":6,"rhs":6,"holds":true,"slack":0}\n'

    def test_check_failing_spec_is_exit_1(self, capsys, tmp_path):
        path = write_spec(tmp_path, "pair.json", SPEH_PAIR)
        rc, out, _ = run_cli(capsys, "equation", "check", path)
        assert rc == 1
        assert out == '{"lhs":8,"rhs":6,"holds":false,"slack":2}\n'

    def test_check_full(self, capsys, tmp_path):
        path = write_spec(tmp_path, "full.json", FULL_TRIPLE_3)
        rc, out, _ = run_cli(capsys, "equation", "check-full", path)
        assert rc == 0
        assert out == '{"lhs":8,"rhs":8,"holds":true,"slack":0}\n'

    def test_reduce(self, capsys):
        rc, out, _ = run_cli(capsys, "equation", "reduce", "--n", "6")
        assert rc == 0
        assert (
            out
            == '{"n":6,"generic_dim":15,"minimal_eisenstein_dim":5,"target":15}\n'
        )

    def test_solve_json(self, capsys):
        rc, out, _ = run_cli(capsys, "equation", "solve", "--n", "4", "--l", "2")
        assert rc == 0
        assert out == (
            '{"n":4,"l":2,"target":6,"count":2,'
            '"solutions":[[[4],[1,1,1,1]],[[2,1,1],[2,1,1]]]}\n'
        )

    def test_solve_exclude_trivial(self, capsys):
        rc, out, _ = run_cli(
            capsys, "equation", "solve", "--n", "4", "--l", "2", "--exclude-trivial"
        )
        assert json.loads(out)["solutions"] == [[[2, 1, 1], [2, 1, 1]]]

    def test_solve_csv_golden(self, capsys):
        rc, out, _ = run_cli(
            capsys, "equation", "solve", "--n", "4", "--l", "2", "--format", "csv"
        )
        assert rc == 0
        assert out == (
            "n,l,solution_index,orbit_index,partition,rep_dim\n"
            "4,2,0,0,[4],6\n"
            '4,2,0,1,"[1,1,1,1]",0\n'
            '4,2,1,0,"[2,1,1]",3\n'
            '4,2,1,1,"[2,1,1]",3\n'
        )

    def test_solve_over_default_bound_is_exit_3(self, capsys):
        rc, out, err = run_cli(capsys, "equation", "solve", "--n", "13", "--l", "2")
        assert rc == 3 and out == "" and err.startswith("resource limit:")

    def test_solve_flag_raises_bound(self, capsys):
        rc, out, _ = run_cli(
            capsys, "equation", "solve", "--n", "13", "--l", "2", "--max-n", "13"
        )
        assert rc == 0 and json.loads(out)["count"] > 0

    def test_env_raises_bound(self, capsys, monkeypatch):
        monkeypatch.setenv("DIMEQ_MAX_N", "14")
        rc, out, _ = run_cli(capsys, "equation", "solve", "--n", "14", "--l", "2")
        assert rc == 0 and json.loads(out)["n"] == 14

    def test_flag_beats_env(self, capsys, monkeypatch):
        monkeypatch.setenv("DIMEQ_MAX_N", "14")
        rc, _, err = run_cli(
            capsys, "equation", "solve", "--n", "14", "--l", "2", "--max-n", "13"
        )
        assert rc == 3 and err.startswith("resource limit:")

    def test_garbage_env_is_exit_2(self, capsys, monkeypatch):
        monkeypatch.setenv("DIMEQ_MAX_N", "plenty")
        rc, _, err = run_cli(capsys, "equation", "solve", "--n", "4", "--l", "2")
        assert rc == 2 and err.startswith("error:")


class TestVerifyCommands:
    def test_lemma1_json(self, capsys):
        rc, out, _ = run_cli(capsys, "verify", "lemma1", "--n", "6")
        assert rc == 0
        payload = json.loads(out)
        assert payload["statement"] == "lemma1"
        assert payload["passed"] is True
        assert payload["parameters"] == {"n": 6, "rectangles": 3}
        assert payload["space_size"] == 10
        assert payload["counterexamples"] == []

    def test_each_verifier_runs(self, capsys):
        for argv in (
            ("verify", "lemma2", "--n", "8"),
            ("verify", "lemma2-reduction", "--n", "8"),
            ("verify", "prop3", "--n", "8"),
            ("verify", "prop4", "--n", "10", "--l", "3"),
            ("verify", "prop5", "--n", "12", "--q", "6", "--l", "3"),
            ("verify", "epsilon-orbit", "--n", "6", "--p", "2", "--q", "3"),
        ):
            rc, out, _ = run_cli(capsys, *argv)
            assert rc == 0, argv
            assert json.loads(out)["passed"] is True, argv

    def test_strict_prop4_is_exit_1(self, capsys):
        rc, out, _ = run_cli(
            capsys, "verify", "prop4", "--n", "10", "--l", "3", "--mode", "strict"
        )
        assert rc == 1
        payload = json.loads(out)
        assert payload["passed"] is False
        assert [9, 9, 3] in [c["blocks"] for c in payload["counterexamples"]]

    def test_cex_cap_flag(self, capsys):
        rc, out, _ = run_cli(
            capsys,
            "verify",
            "prop4",
            "--n",
            "10",
            "--l",
            "3",
            "--mode",
            "strict",
            "--cex-cap",
            "3",
        )
        payload = json.loads(out)
        assert len(payload["counterexamples"]) == 3
        assert payload["parameters"]["counterexamples_total"] == 8

    def test_negative_cex_cap_is_exit_2(self, capsys):
        rc, _, err = run_cli(
            capsys, "verify", "lemma1", "--n", "6", "--cex-cap", "-1"
        )
        assert rc == 2 and err.startswith("error:")

    def test_text_format(self, capsys):
        rc, out, _ = run_cli(
            capsys, "verify", "lemma1", "--n", "6", "--format", "text"
        )
        assert rc == 0 and out.startswith("lemma1: PASSED")

    def test_all_capped(self, capsys):
        rc, out, _ = run_cli(capsys, "verify", "all", "--max-n", "6")
        assert rc == 0
        payload = json.loads(out)
        assert payload["all_passed"] is True
        assert payload["report_count"] == 50
        assert len(payload["reports"]) == 50

    def test_workers_must_be_positive(self, capsys):
        rc, _, err = run_cli(
            capsys, "verify", "lemma1", "--n", "6", "--workers", "0"
        )
        assert rc == 2 and err.startswith("error:")

    def test_workers_do_not_change_bytes(self, capsys, monkeypatch):
        _, base, _ = run_cli(capsys, "verify", "lemma2", "--n", "9")
        _, with_flag, _ = run_cli(
            capsys, "verify", "lemma2", "--n", "9", "--workers", "4"
        )
        monkeypatch.setenv("DIMEQ_WORKERS", "7")
        _, with_env, _ = run_cli(capsys, "verify", "lemma2", "--n", "9")
        assert base == with_flag == with_env


class TestVanishCommand:
    def test_vanishes(self, capsys, tmp_path):
        path = write_spec(tmp_path, "triple.json", MINIMAL_TRIPLE_6)
        rc, out, _ = run_cli(capsys, "vanish", path)
        assert rc == 0
        payload = json.loads(out)
        assert payload["verdict"] == "vanishes" and payload["by"] == "cor1"

    def test_expect_vanish_met(self, capsys, tmp_path):
        path = write_spec(tmp_path, "triple.json", MINIMAL_TRIPLE_6)
        rc, _, _ = run_cli(capsys, "vanish", path, "--expect-vanish")
        assert rc == 0

    def test_expect_vanish_unmet_is_exit_1(self, capsys, tmp_path):
        path = write_spec(tmp_path, "pair.json", SPEH_PAIR)
        rc, out, _ = run_cli(capsys, "vanish", path, "--expect-vanish")
        assert rc == 1
        assert json.loads(out)["verdict"] == "equation_fails"

    def test_text_format_is_indented_json(self, capsys, tmp_path):
        path = write_spec(tmp_path, "pair.json", SPEH_PAIR)
        rc, out, _ = run_cli(capsys, "vanish", path, "--format", "text")
        assert rc == 0 and out.startswith("{\n")


class TestPlumbing:
    def test_missing_subcommand_is_exit_2(self, capsys):
        assert run_cli(capsys, "equation")[0] == 2

    def test_unknown_command_is_exit_2(self, capsys):
        assert run_cli(capsys, "conjecture")[0] == 2

    def test_csv_rejected_outside_solve(self, capsys):
        rc, _, _ = run_cli(capsys, "partition", "dim", "[3,3]", "--format", "csv")
        assert rc == 2

    def test_out_writes_file_with_newline(self, capsys, tmp_path):
        target = tmp_path / "out.json"
        rc, out, _ = run_cli(
            capsys, "partition", "dim", "[3,3]", "--out", str(target)
        )
        assert rc == 0 and out == ""
        assert target.read_text() == '{"orbit_dim":24,"rep_dim":12,"n":6}\n'

    def test_two_runs_identical_bytes(self, capsys, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        for target in (a, b):
            rc = cli.run(
                ["verify", "all", "--max-n", "5", "--out", str(target)]
            )
            assert rc == 0
        capsys.readouterr()
        assert a.read_bytes() == b.read_bytes()

    def test_main_entry_point(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.argv", ["dimeq", "equation", "reduce", "--n", "3"])
        rc = cli.main()
        assert rc == 0
        assert json.loads(capsys.readouterr().out)["target"] == 3
