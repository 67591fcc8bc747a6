"""Partition logics, urn models, their pastings, and logic isomorphism."""

import itertools
from collections import defaultdict

from .errors import PrimenessError, StructureError
from .oa import FiniteQuasiOrthoalgebra, format_label
from .states import TwoValuedState, is_prime


class PartitionLogic:
    """A ground set plus a family of partitions of it.

    Cells keep their given order (automaton output labels index into it);
    duplicate partitions are dropped, keeping the first occurrence.
    """

    def __init__(self, ground, partitions):
        self.ground = tuple(ground)
        pts = set(self.ground)
        if len(pts) != len(self.ground):
            raise StructureError("duplicate ground point")
        if not pts:
            raise StructureError("empty ground set")
        kept = []
        seen = set()
        for part in partitions:
            cells = tuple(frozenset(c) for c in part)
            covered = set()
            for cell in cells:
                if not cell:
                    raise StructureError("empty cell in partition")
                if not cell <= pts:
                    raise StructureError("cell %s leaves the ground set" % format_label(cell))
                if covered & cell:
                    raise StructureError("overlapping cells in partition")
                covered |= cell
            if covered != pts:
                raise StructureError("partition does not cover the ground set")
            key = frozenset(cells)
            if key not in seen:
                seen.add(key)
                kept.append(cells)
        if not kept:
            raise StructureError("no partitions given")
        self.partitions = tuple(kept)

    def __repr__(self):
        return "PartitionLogic(%d points, %d partitions)" % (
            len(self.ground),
            len(self.partitions),
        )


class UrnModel:
    """Ball types carrying one visible symbol per color."""

    def __init__(self, ball_types, colors, visible):
        self.ball_types = tuple(ball_types)
        self.colors = tuple(colors)
        self.visible = dict(visible)
        for bt in self.ball_types:
            for col in self.colors:
                if (bt, col) not in self.visible:
                    raise StructureError(
                        "ball %r has no symbol under color %r" % (bt, col)
                    )


class Isomorphism:
    """A sum-preserving bijection between two tables."""

    def __init__(self, mapping):
        self.mapping = dict(mapping)

    def __getitem__(self, a):
        return self.mapping[a]

    def inverse(self):
        return Isomorphism({v: k for k, v in self.mapping.items()})

    def __repr__(self):
        return "Isomorphism(%d elements)" % len(self.mapping)


def _cell_union_algebra(cells):
    """All unions of subsets of the given cells."""
    out = set()
    for r in range(len(cells) + 1):
        for combo in itertools.combinations(cells, r):
            u = frozenset().union(*combo) if combo else frozenset()
            out.add(u)
    return out


def pasting_to_oa(pl):
    """Paste a partition logic into a table over canonical point sets.

    Elements are the cell-unions of the partitions; a + b is defined iff a
    and b are disjoint cell-unions of one common partition, with value the
    plain union.
    """
    algebras = [_cell_union_algebra(p) for p in pl.partitions]
    elements = set().union(*algebras)
    ordered = sorted(
        elements, key=lambda s: (len(s), tuple(sorted(str(p) for p in s)))
    )
    oplus = {}
    for cells, algebra in zip(pl.partitions, algebras):
        for split in itertools.product((0, 1, 2), repeat=len(cells)):
            left = [c for c, s in zip(cells, split) if s == 1]
            right = [c for c, s in zip(cells, split) if s == 2]
            a = frozenset().union(*left) if left else frozenset()
            b = frozenset().union(*right) if right else frozenset()
            oplus[(a, b)] = a | b
    return FiniteQuasiOrthoalgebra(
        ordered, frozenset(), frozenset(pl.ground), oplus
    )


def oa_to_partition_logic(table):
    """Represent a prime table as a partition logic over its prime ideals.

    Points are the two-valued states (one per prime ideal); each orthogonal
    pair x, y yields the partition {p(x), p(y), p((x+y)')} with empty cells
    dropped.
    """
    primeness = is_prime(table)
    if not primeness:
        a, b = primeness.inseparable
        raise PrimenessError(
            "no two-valued state separates %s and %s"
            % (format_label(a), format_label(b)),
            pair=primeness.inseparable,
        )
    sts = primeness.separating
    names = {s: "p%d" % (i + 1) for i, s in enumerate(sts)}

    def support(x):
        # the states valuing x at 1, i.e. the prime ideals omitting x
        return frozenset(names[s] for s in sts if s(x) == 1)

    partitions = []
    for x, y, s in table.pairs():
        rest = table.complement(s)
        cells = []
        for z in (x, y, rest):
            cell = support(z)
            if cell:
                cells.append(cell)
        if cells:
            partitions.append(cells)
    return PartitionLogic([names[s] for s in sts], partitions)


def urn_to_partition_logic(urn):
    """One partition per color: cells are the preimages of visible symbols."""
    partitions = []
    for col in urn.colors:
        groups = defaultdict(list)
        for bt in urn.ball_types:
            groups[urn.visible[(bt, col)]].append(bt)
        cells = [frozenset(groups[sym]) for sym in sorted(groups, key=str)]
        partitions.append(cells)
    return PartitionLogic(urn.ball_types, partitions)


def _signatures(table):
    """Per-element invariants preserved by any isomorphism."""
    base = {}
    for a in table.elements:
        partners = table.partners(a)
        base[a] = (
            a == table.zero,
            a == table.one,
            len(partners),
            len(table.complements(a)),
        )
    # one refinement round: multiset of partner base signatures
    sig = {}
    for a in table.elements:
        partner_sigs = sorted(base[b] for b in table.partners(a))
        sig[a] = (base[a], tuple(partner_sigs))
    return sig


def _verify_mapping(t1, t2, mapping):
    fwd = {(mapping[a], mapping[b]) for (a, b) in t1.table}
    if fwd != set(t2.table):
        return False
    for (a, b), c in t1.table.items():
        if t2.table[(mapping[a], mapping[b])] != mapping[c]:
            return False
    return True


def isomorphic(t1, t2):
    """Search for a sum-preserving bijection; None when there is none.

    Backtracking over elements with invariant pruning; 0 and 1 are pinned.
    """
    if len(t1.elements) != len(t2.elements):
        return None
    sig1 = _signatures(t1)
    sig2 = _signatures(t2)
    if sorted(sig1.values()) != sorted(sig2.values()):
        return None
    by_sig2 = defaultdict(list)
    for b in t2.elements:
        by_sig2[sig2[b]].append(b)

    mapping = {t1.zero: t2.zero, t1.one: t2.one}
    used = {t2.zero, t2.one}
    if sig1[t1.zero] != sig2[t2.zero] or sig1[t1.one] != sig2[t2.one]:
        return None
    # most-constrained-first: fewest candidates, then index order
    todo = sorted(
        (e for e in t1.elements if e not in mapping),
        key=lambda e: (len(by_sig2[sig1[e]]), t1.index(e)),
    )

    def consistent(a, b):
        row1 = t1.sums_from(a)
        row2 = t2.sums_from(b)
        for x, fx in mapping.items():
            d1 = x in row1
            d2 = fx in row2
            if d1 != d2:
                return False
            if d1:
                s1 = row1[x]
                if s1 in mapping and mapping[s1] != row2[fx]:
                    return False
        return True

    def extend(k):
        if k == len(todo):
            return _verify_mapping(t1, t2, mapping)
        a = todo[k]
        for b in by_sig2[sig1[a]]:
            if b in used or not consistent(a, b):
                continue
            mapping[a] = b
            used.add(b)
            if extend(k + 1):
                return True
            del mapping[a]
            used.discard(b)
        return False

    if extend(0):
        return Isomorphism(mapping)
    return None


def point_evaluations(pl, table=None):
    """The two-valued states induced by fixing a ground point."""
    if table is None:
        table = pasting_to_oa(pl)
    out = []
    for q in pl.ground:
        out.append(
            TwoValuedState(table, {e: int(q in e) for e in table.elements})
        )
    return out
