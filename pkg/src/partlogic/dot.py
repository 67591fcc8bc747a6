"""DOT rendering of diagrams (atom/block view) and tables (order view)."""

from .errors import StructureError
from .oa import (
    FiniteQuasiOrthoalgebra,
    GreechieDiagram,
    blocks,
    boolean_atoms,
    format_label,
    from_greechie,
    verify_quasi_oa,
)

# fixed block palette, cycled
_COLORS = (
    "#1b9e77",
    "#d95f02",
    "#7570b3",
    "#e7298a",
    "#66a61e",
    "#e6ab02",
)


def _quote(label):
    return '"%s"' % format_label(label).replace('"', '\\"')


def _greechie_dot(atom_blocks):
    lines = ["graph greechie {", "  layout=neato;", "  node [shape=circle];"]
    seen = []
    for blk in atom_blocks:
        for a in blk:
            if a not in seen:
                seen.append(a)
    for a in seen:
        lines.append("  %s;" % _quote(a))
    for i, blk in enumerate(atom_blocks):
        color = _COLORS[i % len(_COLORS)]
        for a, b in zip(blk, blk[1:]):
            lines.append('  %s -- %s [color="%s"];' % (_quote(a), _quote(b), color))
    lines.append("}")
    return "\n".join(lines) + "\n"


def _covers(table):
    le = table.le_pairs()
    strict = {(a, b) for (a, b) in le if a != b and (b, a) not in le}
    out = []
    for a in table.elements:
        for b in table.elements:
            if (a, b) not in strict:
                continue
            if any(
                (a, c) in strict and (c, b) in strict
                for c in table.elements
                if c != a and c != b
            ):
                continue
            out.append((a, b))
    return out


def _hasse_dot(table):
    lines = ["digraph hasse {", "  rankdir=BT;", "  node [shape=plaintext];"]
    for e in table.elements:
        lines.append("  %s;" % _quote(e))
    for a, b in _covers(table):
        lines.append("  %s -> %s;" % (_quote(a), _quote(b)))
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_dot(structure, style):
    """Render a diagram or table; styles are "greechie" and "hasse"."""
    if style not in ("greechie", "hasse"):
        raise StructureError("unknown style %r" % style)
    if isinstance(structure, GreechieDiagram):
        if style == "greechie":
            return _greechie_dot(structure.blocks)
        structure = from_greechie(structure)
    if not isinstance(structure, FiniteQuasiOrthoalgebra):
        raise StructureError(
            "dot rendering needs a diagram or a table, got %r"
            % type(structure).__name__
        )
    report = verify_quasi_oa(structure)
    if not report.passed:
        raise StructureError(
            "refusing to draw a non-verifying table: %s"
            % ", ".join(report.failing_axioms())
        )
    if style == "hasse":
        return _hasse_dot(structure)
    atom_blocks = []
    for blk in blocks(structure):
        structure_atoms = boolean_atoms(structure, frozenset(blk))
        atom_blocks.append(structure_atoms[0])
    return _greechie_dot(atom_blocks)
