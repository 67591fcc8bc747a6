"""Command-line behavior: exits, reports, JSON round trips, DOT output."""

import json

import partlogic as P
from partlogic.cli import Report, cli
from partlogic.dot import render_dot
from conftest import corpus_entry


def test_states_wright_prints_reference_rows():
    report = cli(["states", "corpus:wright"])
    assert report.status == 0
    assert report.result["count"] == 4
    rows = sorted(tuple(r) for r in report.result["rows"])
    assert rows == sorted(
        [
            (1, 0, 0, 1, 0, 0),
            (0, 0, 1, 0, 0, 1),
            (0, 1, 0, 0, 1, 0),
            (0, 1, 0, 1, 0, 1),
        ]
    )
    assert report.result["atoms"] == ["a", "b", "c", "d", "e", "f"]


def test_prime_fano_exits_one():
    report = cli(["prime", "corpus:fano"])
    assert report.status == 1
    assert report.result["prime"] is False
    assert "not prime" in report.text


def test_prime_wright_exits_zero():
    report = cli(["prime", "corpus:wright"])
    assert report.status == 0


def test_verify_empty_source_is_usage_error():
    report = cli(["verify", "--"])
    assert report.status == 2


def test_unknown_flag_is_usage_error():
    assert cli(["states", "--frobnicate", "corpus:wright"]).status == 2


def test_unknown_corpus_id_is_input_error():
    assert cli(["states", "corpus:nope"]).status == 2


def test_missing_file_is_input_error():
    assert cli(["verify", "/nonexistent/file.txt"]).status == 2


def test_verify_commands():
    assert cli(["verify", "corpus:wright"]).result["class"] == "orthoalgebra"
    assert cli(["verify", "corpus:firefly"]).result["class"] == "omp"
    # an atlas source runs the atlas verifier
    report = cli(["verify", "corpus:nontransitive"])
    assert report.status == 0
    assert report.result["class"] == "atlas"
    assert report.result["manifold"] is True


def test_blocks_command():
    report = cli(["blocks", "corpus:firefly"])
    assert report.status == 0
    assert report.result["count"] == 2


def test_iso_command():
    assert cli(["iso", "corpus:pl-wright", "corpus:wright"]).status == 0
    report = cli(["iso", "corpus:firefly", "corpus:wright"])
    assert report.status == 1


def test_to_pl_on_fano_fails_with_witness():
    report = cli(["to-pl", "corpus:fano"])
    assert report.status == 1
    assert "error" in report.result


def test_to_pl_wright():
    report = cli(["to-pl", "corpus:wright"])
    assert report.status == 0
    assert report.result["points"] == 4


def test_automaton_pipeline(tmp_path):
    built = cli(["to-automaton", "corpus:pl-wright"])
    assert built.status == 0
    machine_file = tmp_path / "machine.txt"
    machine_file.write_text(built.result["text"])
    back = cli(["from-automaton", str(machine_file), "--max-word-length", "1"])
    assert back.status == 0
    assert len(back.result["partitions"]) == 3


def test_from_automaton_corpus():
    report = cli(["from-automaton", "corpus:mealy-fig12"])
    assert report.status == 0
    assert len(report.result["partitions"]) == 5


def test_atlas_command():
    report = cli(["atlas", "corpus:nontransitive"])
    assert report.status == 0
    assert report.result["manifold"] is True
    report = cli(["atlas", "corpus:firefly"])
    assert report.status == 0
    assert len(report.result["charts"]) == 2


def test_testspace_command():
    report = cli(["testspace", "corpus:pts-firefly"])
    assert report.status == 0
    assert report.result["algebraic"] is True
    # the four point evaluations plus the weight putting 1 on both of the
    # disjoint-but-unorthogonal cells {2} and {3}
    assert report.result["two_valued_weights"] == 5
    report = cli(["testspace", "corpus:wright"])
    assert report.result["two_valued_weights"] == 4


def test_complete_command(tmp_path):
    src = tmp_path / "pts.txt"
    src.write_text(
        "base: 1 2 3 4\ntest: 1 | 2 | 3 4\ntest: 2 | 3 | 1 4\n"
        "test: 1 | 3 | 2 4\n"
    )
    report = cli(["complete", str(src)])
    assert report.status == 0
    assert report.result["added"] == 0


def test_corpus_command():
    report = cli(["corpus"])
    assert report.status == 0
    ids = {row["id"] for row in report.result["entries"]}
    assert "wright" in ids and "fano" in ids


def test_json_report_round_trips():
    commands = [
        ["--json", "blocks", "corpus:wright"],
        ["--json", "states", "corpus:fig12"],
        ["--json", "prime", "corpus:fano"],
        ["--json", "verify", "corpus:nontransitive"],
        ["--json", "testspace", "corpus:pts-firefly"],
        ["--json", "corpus"],
    ]
    for argv in commands:
        report = cli(argv)
        blob = report.to_json()
        again = Report.from_json(blob)
        assert again.status == report.status
        assert again.result == report.result
        assert json.loads(blob)["command"] == argv


def test_file_source_parses(tmp_path):
    src = tmp_path / "w.txt"
    src.write_text(P.serialize(corpus_entry("wright").payload))
    report = cli(["states", str(src)])
    assert report.status == 0
    assert report.result["count"] == 4


# DOT -----------------------------------------------------------------------------


def _dot_nodes(dot):
    return [
        line
        for line in dot.splitlines()
        if line.startswith('  "') and line.endswith(";") and "->" not in line
    ]


def test_hasse_dot_node_counts(firefly, wright):
    dot = render_dot(firefly, "hasse")
    assert dot.startswith("digraph hasse {")
    assert len(_dot_nodes(dot)) == 12
    assert len(_dot_nodes(render_dot(wright, "hasse"))) == 14


def test_two_element_chain_dot():
    t = P.pasting_to_oa(P.PartitionLogic(["1"], [[{"1"}]]))
    dot = render_dot(t, "hasse")
    arrows = [line for line in dot.splitlines() if "->" in line]
    assert len(arrows) == 1


def test_dot_deterministic():
    d = corpus_entry("wright").payload
    assert render_dot(d, "greechie") == render_dot(d, "greechie")
    one = cli(["dot", "corpus:wright", "--style", "hasse"])
    two = cli(["dot", "corpus:wright", "--style", "hasse"])
    assert one.result["dot"] == two.result["dot"]


def test_dot_refuses_broken_table():
    t = P.FiniteQuasiOrthoalgebra(
        ["0", "a", "b", "1"],
        "0",
        "1",
        {
            ("0", "0"): "0",
            ("0", "1"): "1",
            ("1", "0"): "1",
            ("a", "0"): "a",
            ("0", "a"): "a",
            ("b", "0"): "b",
            ("0", "b"): "b",
        },
    )
    try:
        render_dot(t, "hasse")
    except P.StructureError:
        pass
    else:
        raise AssertionError("expected a refusal")


def test_dot_greechie_from_diagram():
    dot = render_dot(corpus_entry("firefly").payload, "greechie")
    assert dot.startswith("graph greechie {")
    assert '"n"' in dot
