"""Command-line front end.

Sources are ``corpus:<id>`` or file paths; file kinds are inferred from the
leading keyword.  Exit codes: 0 success/property-true, 1 property-false
(witness included in the report), 2 input or usage error.
"""

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .atlas import atlas_to_quasi_oa, is_manifold, quasi_oa_to_atlas, verify_atlas
from .automata import partition_logic_to_mealy, propositional_calculus
from .corpus import corpus as corpus_entries
from .corpus import get as corpus_get
from .dot import render_dot
from .errors import LogicError, ParseError, StructureError
from .formats import parse_any, serialize
from .oa import (
    blocks,
    boolean_atoms,
    classify,
    format_label,
    from_greechie,
    verify_quasi_oa,
)
from .partition import (
    oa_to_partition_logic,
    pasting_to_oa,
    isomorphic,
    urn_to_partition_logic,
)
from .states import atoms_of, enumerate_two_valued_states, is_prime
from .testspace import (
    TestSpace,
    completion,
    enumerate_two_valued_weights,
    is_algebraic,
    is_complete,
    verify_test_space,
)

COMMANDS = (
    "verify",
    "states",
    "prime",
    "blocks",
    "iso",
    "to-pl",
    "to-automaton",
    "from-automaton",
    "atlas",
    "testspace",
    "complete",
    "dot",
    "corpus",
)


@dataclass
class Report:
    command: list
    status: int
    result: dict
    text: str

    def to_json(self):
        return json.dumps(
            {"command": self.command, "status": self.status, "result": self.result},
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, blob):
        data = json.loads(blob)
        return cls(data["command"], data["status"], data["result"], "")


def _load(token):
    """Resolve a source token to (kind, structure)."""
    if token.startswith("corpus:"):
        entry = corpus_get(token.split(":", 1)[1])
        return entry.kind, entry.payload
    path = Path(token)
    if not path.is_file():
        raise StructureError("no such file or corpus entry: %s" % token)
    kind, payload = parse_any(path.read_text())
    if kind in ("mealy", "moore"):
        kind = "automaton"
    if kind == "pts":
        kind = "test_space"
    return kind, payload


def _to_table(kind, payload, token):
    if kind == "greechie":
        return from_greechie(payload)
    if kind == "partition_logic":
        return pasting_to_oa(payload)
    if kind == "urn":
        return pasting_to_oa(urn_to_partition_logic(payload))
    if kind == "atlas":
        return atlas_to_quasi_oa(payload)
    raise StructureError("source %s (%s) does not define a logic table" % (token, kind))


def _to_partition_logic(kind, payload, token):
    if kind == "partition_logic":
        return payload
    if kind == "urn":
        return urn_to_partition_logic(payload)
    raise StructureError("source %s (%s) is not a partition logic" % (token, kind))


def _witness(items):
    return [format_label(x) for x in items]


def _cells_json(cells):
    return [sorted(map(str, c)) for c in cells]


def _cmd_verify(args):
    kind, payload = _load(args.source)
    if kind == "atlas":
        report = verify_atlas(payload)
        manifold = bool(is_manifold(payload)) if report.passed else None
        result = {
            "kind": kind,
            "class": report.structure_class,
            "violations": [
                {"axiom": v.axiom, "witness": _witness(v.witness)}
                for v in report.violations
            ],
            "manifold": manifold,
        }
        return (0 if report.passed else 1), result, _verify_text(result)
    if kind == "test_space":
        report = verify_test_space(payload.as_test_space())
        result = {
            "kind": kind,
            "class": report.structure_class,
            "violations": [
                {"axiom": v.axiom, "witness": _witness(v.witness)}
                for v in report.violations
            ],
        }
        return (0 if report.passed else 1), result, _verify_text(result)
    if kind == "automaton":
        result = {
            "kind": kind,
            "class": "automaton",
            "states": len(payload.states),
            "inputs": len(payload.inputs),
            "violations": [],
        }
        return 0, result, _verify_text(result)
    table = _to_table(kind, payload, args.source)
    cls = classify(table)
    report = verify_quasi_oa(table)
    result = {
        "kind": kind,
        "class": cls,
        "elements": len(table.elements),
        "violations": [
            {"axiom": v.axiom, "witness": _witness(v.witness)}
            for v in report.violations
        ],
    }
    ok = cls not in ("not_quasi_oa",)
    return (0 if ok else 1), result, _verify_text(result)


def _verify_text(result):
    lines = ["class: %s" % result["class"]]
    for v in result["violations"]:
        lines.append("violation %s: %s" % (v["axiom"], " ".join(v["witness"])))
    if result.get("manifold") is not None:
        lines.append("manifold: %s" % result["manifold"])
    return "\n".join(lines)


def _cmd_states(args):
    kind, payload = _load(args.source)
    table = _to_table(kind, payload, args.source)
    sts = enumerate_two_valued_states(table)
    atoms = atoms_of(table)
    rows = [list(s.row(atoms)) for s in sts]
    result = {
        "atoms": [format_label(a) for a in atoms],
        "count": len(sts),
        "rows": rows,
    }
    header = " ".join(result["atoms"])
    body = [" ".join(str(v) for v in row) for row in rows]
    text = "\n".join([header] + body) if rows else header + "\n(no states)"
    return 0, result, text


def _cmd_prime(args):
    kind, payload = _load(args.source)
    table = _to_table(kind, payload, args.source)
    res = is_prime(table)
    if res.prime:
        result = {"prime": True, "states": len(res.separating)}
        return 0, result, "prime (%d states separate)" % len(res.separating)
    result = {"prime": False, "inseparable": _witness(res.inseparable)}
    return 1, result, "not prime: %s and %s are inseparable" % tuple(
        result["inseparable"]
    )


def _cmd_blocks(args):
    kind, payload = _load(args.source)
    table = _to_table(kind, payload, args.source)
    blks = blocks(table)
    result = {
        "count": len(blks),
        "blocks": [[format_label(e) for e in blk] for blk in blks],
        "atoms": [
            [format_label(a) for a in boolean_atoms(table, frozenset(blk))[0]]
            for blk in blks
        ],
    }
    text = "\n".join(
        "block %d (atoms %s): %s"
        % (i + 1, " ".join(at), " ".join(bl))
        for i, (bl, at) in enumerate(zip(result["blocks"], result["atoms"]))
    )
    return 0, result, text


def _cmd_iso(args):
    k1, p1 = _load(args.source)
    k2, p2 = _load(args.other)
    t1 = _to_table(k1, p1, args.source)
    t2 = _to_table(k2, p2, args.other)
    iso = isomorphic(t1, t2)
    if iso is None:
        return 1, {"isomorphic": False}, "not isomorphic"
    mapping = {
        format_label(a): format_label(b) for a, b in iso.mapping.items()
    }
    text = "\n".join("%s -> %s" % kv for kv in sorted(mapping.items()))
    return 0, {"isomorphic": True, "mapping": mapping}, "isomorphic\n" + text


def _cmd_to_pl(args):
    kind, payload = _load(args.source)
    table = _to_table(kind, payload, args.source)
    pl = oa_to_partition_logic(table)
    text = serialize(pl)
    result = {
        "points": len(pl.ground),
        "partitions": [_cells_json(p) for p in pl.partitions],
        "text": text,
    }
    return 0, result, text.rstrip("\n")


def _cmd_to_automaton(args):
    kind, payload = _load(args.source)
    pl = _to_partition_logic(kind, payload, args.source)
    machine = partition_logic_to_mealy(pl)
    text = serialize(machine)
    return 0, {"text": text}, text.rstrip("\n")


def _cmd_from_automaton(args):
    kind, payload = _load(args.source)
    if kind != "automaton":
        raise StructureError("source %s is not an automaton" % args.source)
    pl = propositional_calculus(payload, args.max_word_length)
    text = serialize(pl)
    result = {
        "points": len(pl.ground),
        "partitions": [_cells_json(p) for p in pl.partitions],
        "text": text,
    }
    return 0, result, text.rstrip("\n")


def _cmd_atlas(args):
    kind, payload = _load(args.source)
    if kind == "atlas":
        report = verify_atlas(payload)
        manifold = is_manifold(payload)
        result = {
            "class": report.structure_class,
            "manifold": bool(manifold),
            "charts": [
                _cells_json(c.atoms) for c in payload.charts
            ],
        }
        status = 0 if report.passed else 1
        text = "class: %s\nmanifold: %s" % (result["class"], result["manifold"])
        return status, result, text
    table = _to_table(kind, payload, args.source)
    atlas = quasi_oa_to_atlas(table)
    charts = [[format_label(a) for a in c.atoms] for c in atlas.charts]
    result = {"charts": charts}
    text = "\n".join("chart: %s" % " | ".join(c) for c in charts)
    return 0, result, text


def _cmd_testspace(args):
    kind, payload = _load(args.source)
    if kind == "greechie":
        ts = TestSpace.from_greechie(payload)
        pts_info = None
    elif kind == "test_space":
        ts = payload.as_test_space()
        pts_info = {"complete": bool(is_complete(payload))}
    else:
        raise StructureError("source %s (%s) is not a test space" % (args.source, kind))
    report = verify_test_space(ts)
    alg = is_algebraic(ts)
    weights = enumerate_two_valued_weights(ts)
    result = {
        "class": report.structure_class,
        "algebraic": bool(alg),
        "two_valued_weights": len(weights),
    }
    if pts_info:
        result.update(pts_info)
    status = 0 if report.passed else 1
    text = "\n".join("%s: %s" % kv for kv in sorted(result.items()))
    return status, result, text


def _cmd_complete(args):
    kind, payload = _load(args.source)
    if kind != "test_space":
        raise StructureError("source %s is not a partition test space" % args.source)
    completed = completion(payload)
    added = len(completed.tests) - len(payload.tests)
    text = serialize(completed)
    result = {"added": added, "tests": len(completed.tests), "text": text}
    return 0, result, text.rstrip("\n")


def _cmd_dot(args):
    kind, payload = _load(args.source)
    if kind in ("greechie",):
        structure = payload
    else:
        structure = _to_table(kind, payload, args.source)
    text = render_dot(structure, args.style)
    return 0, {"dot": text}, text.rstrip("\n")


def _cmd_corpus(args):
    rows = [
        {"id": e.id, "kind": e.kind, "summary": e.summary}
        for e in corpus_entries()
    ]
    text = "\n".join("%-14s %-16s %s" % (r["id"], r["kind"], r["summary"]) for r in rows)
    return 0, {"entries": rows}, text


_HANDLERS = {
    "verify": _cmd_verify,
    "states": _cmd_states,
    "prime": _cmd_prime,
    "blocks": _cmd_blocks,
    "iso": _cmd_iso,
    "to-pl": _cmd_to_pl,
    "to-automaton": _cmd_to_automaton,
    "from-automaton": _cmd_from_automaton,
    "atlas": _cmd_atlas,
    "testspace": _cmd_testspace,
    "complete": _cmd_complete,
    "dot": _cmd_dot,
    "corpus": _cmd_corpus,
}


def _parser():
    p = argparse.ArgumentParser(
        prog="partlogic",
        description="finite quantum-logic toolkit: tables, partitions, atlases,"
        " automata, test spaces",
    )
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    sub = p.add_subparsers(dest="cmd", required=True)

    def source_cmd(name, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("source", help="corpus:<id> or a file path")
        return sp

    source_cmd("verify", "run the structure's verifier")
    source_cmd("states", "enumerate two-valued states")
    source_cmd("prime", "check for a separating set of two-valued states")
    source_cmd("blocks", "list maximal Boolean sub-structures")
    sp = source_cmd("iso", "search for an isomorphism between two logics")
    sp.add_argument("other", help="corpus:<id> or a file path")
    source_cmd("to-pl", "represent a prime logic as a partition logic")
    source_cmd("to-automaton", "realize a partition logic as a Mealy machine")
    sp = source_cmd("from-automaton", "partition logic of a machine's experiments")
    sp.add_argument(
        "--max-word-length",
        type=int,
        default=2,
        help="experiment word length bound (default 2)",
    )
    source_cmd("atlas", "verify an atlas, or chart a table by its blocks")
    source_cmd("testspace", "inspect a test space (validity, algebraicity, weights)")
    source_cmd("complete", "complete a partition test space")
    sp = source_cmd("dot", "render DOT output")
    sp.add_argument(
        "--style", choices=("greechie", "hasse"), default="greechie"
    )
    sub.add_parser("corpus", help="list bundled corpus entries")
    return p


def cli(argv):
    """Run one command; returns a Report without exiting."""
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        status = 0 if exc.code == 0 else 2
        return Report(list(argv), status, {"error": "usage"}, "")
    try:
        status, result, text = _HANDLERS[args.cmd](args)
    except (ParseError, StructureError) as exc:
        return Report(list(argv), 2, {"error": str(exc)}, "error: %s" % exc)
    except LogicError as exc:
        return Report(list(argv), 1, {"error": str(exc)}, "error: %s" % exc)
    return Report(list(argv), status, result, text)


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    report = cli(argv)
    use_json = "--json" in argv
    if use_json:
        print(report.to_json())
    elif report.text:
        print(report.text)
    return report.status


if __name__ == "__main__":
    sys.exit(main())
