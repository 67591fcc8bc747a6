"""Finite quasi-orthoalgebras: partial sum tables, axiom checks, blocks, pasting.

A table is a finite labelled set with designated 0 and 1 and a partial
commutative sum.  Everything here is exhaustive and deterministic: scans run
in element-index order and results are reported in that order.
"""

import itertools
from collections import defaultdict
from dataclasses import dataclass

from .errors import AxiomViolationError, PastingError, StructureError

QUASI_AXIOMS = ("oai", "oaii", "oaiii", "oaiv", "oav", "oavi")


def format_label(label):
    """Human-readable form of an element label (point sets print sorted)."""
    if isinstance(label, frozenset):
        return "{%s}" % ",".join(sorted(str(p) for p in label))
    return str(label)


def label_key(label):
    """Deterministic sort key for element labels."""
    if isinstance(label, frozenset):
        return (1, len(label), tuple(sorted(str(p) for p in label)))
    return (0, 0, (str(label),))


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of an axiom scan: the established class plus failure witnesses."""

    structure_class: str
    violations: tuple

    @property
    def passed(self):
        return not self.violations

    def failing_axioms(self):
        return tuple(v.axiom for v in self.violations)


class FiniteQuasiOrthoalgebra:
    """A finite set with 0, 1 and a partial commutative sum, given as a table.

    Element labels are opaque hashable values; their order fixes every
    deterministic output (block lists, counterexample scans, serialization).
    The constructor is permissive so that verifiers can diagnose bad tables.
    Instances are treated as immutable once built.
    """

    def __init__(self, elements, zero, one, oplus):
        self.elements = tuple(elements)
        self.zero = zero
        self.one = one
        self.table = dict(oplus)
        self._index = {e: i for i, e in enumerate(self.elements)}
        self._sums_from = None
        self._comp = None
        self._le = None

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return "FiniteQuasiOrthoalgebra(%d elements)" % len(self.elements)

    def index(self, a):
        return self._index[a]

    def defined(self, a, b):
        return (a, b) in self.table

    def value(self, a, b):
        return self.table[(a, b)]

    def sums_from(self, a):
        """Map b -> a + b over all partners b of a."""
        if self._sums_from is None:
            by_first = defaultdict(dict)
            for (x, y), z in self.table.items():
                by_first[x][y] = z
            self._sums_from = dict(by_first)
        return self._sums_from.get(a, {})

    def partners(self, a):
        """Partners of a in element-index order."""
        row = self.sums_from(a)
        return [b for b in self.elements if b in row]

    def complements(self, a):
        """All b with a + b = 1, in element-index order."""
        row = self.sums_from(a)
        return [b for b in self.elements if row.get(b) == self.one]

    def complement(self, a):
        """The unique orthocomplement; raises when it is not unique."""
        if self._comp is None:
            self._comp = {}
        if a not in self._comp:
            cs = self.complements(a)
            if len(cs) != 1:
                raise AxiomViolationError(
                    "oaiii",
                    "%s has %d complements" % (format_label(a), len(cs)),
                )
            self._comp[a] = cs[0]
        return self._comp[a]

    def le_pairs(self):
        """The relation a <= b (some c with a + c = b), as a set of pairs."""
        if self._le is None:
            le = set()
            for (a, _c), b in self.table.items():
                le.add((a, b))
            self._le = frozenset(le)
        return self._le

    def pairs(self):
        """Defined sum pairs in element-index order."""
        for a in self.elements:
            row = self.sums_from(a)
            for b in self.elements:
                if b in row:
                    yield a, b, row[b]


def structural_check(table):
    """Raise StructureError unless the raw table is well-formed."""
    seen = set()
    for e in table.elements:
        if e in seen:
            raise StructureError("duplicate element label %s" % format_label(e))
        seen.add(e)
    if table.zero not in seen:
        raise StructureError("zero is not an element")
    if table.one not in seen:
        raise StructureError("one is not an element")
    if table.zero == table.one:
        raise StructureError("zero and one coincide")
    for (a, b), c in table.table.items():
        if a not in seen or b not in seen or c not in seen:
            raise StructureError(
                "sum entry %s + %s = %s mentions a non-element"
                % (format_label(a), format_label(b), format_label(c))
            )


def _unique_complement(table, a):
    cs = table.complements(a)
    return cs[0] if len(cs) == 1 else None


def _quasi_violations(table):
    found = {}

    def record(axiom, witness):
        if axiom not in found:
            found[axiom] = Violation(axiom, witness)

    zero, one = table.zero, table.one
    for a, b, c in table.pairs():
        if table.sums_from(b).get(a) != c and "oai" not in found:
            record("oai", (a, b))
    for a in table.elements:
        if table.sums_from(a).get(zero) != a:
            record("oaii", (a,))
            break
    for a in table.elements:
        if len(table.complements(a)) != 1:
            record("oaiii", (a,))
            break
    # oaiv and oav quantify over nested sums; skip pairs whose complement
    # is not unique (already charged to oaiii)
    for a in table.elements:
        if "oaiv" in found:
            break
        ac = _unique_complement(table, a)
        if ac is None:
            continue
        row_ac = table.sums_from(ac)
        row_a = table.sums_from(a)
        for b in table.elements:
            if b in row_ac and row_ac[b] in row_a and b != zero:
                record("oaiv", (a, b))
                break
    for a, b, c in table.pairs():
        if "oav" in found:
            break
        if c in table.sums_from(a) and a != zero:
            record("oav", (a, b))
    for a, b, c in table.pairs():
        if "oavi" in found:
            break
        cc = _unique_complement(table, c)
        bc = _unique_complement(table, b)
        if cc is None or bc is None:
            continue
        if table.sums_from(a).get(cc) != bc:
            record("oavi", (a, b))
    return tuple(found[ax] for ax in QUASI_AXIOMS if ax in found)


def _assoc_violation(table):
    # oavii: a+b and (a+b)+c defined force b+c and a+(b+c), all equal
    for a in table.elements:
        row_a = table.sums_from(a)
        for b in table.elements:
            if b not in row_a:
                continue
            ab = row_a[b]
            row_ab = table.sums_from(ab)
            row_b = table.sums_from(b)
            for c in table.elements:
                if c not in row_ab:
                    continue
                if c not in row_b or row_a.get(row_b[c]) != row_ab[c]:
                    return Violation("oavii", (a, b, c))
    return None


def verify_quasi_oa(table):
    """Check the six quasi-orthoalgebra axioms exhaustively."""
    structural_check(table)
    violations = _quasi_violations(table)
    cls = "quasi_oa" if not violations else "not_quasi_oa"
    return AxiomReport(cls, violations)


def verify_oa(table):
    """Check the quasi-orthoalgebra axioms plus associativity."""
    report = verify_quasi_oa(table)
    if not report.passed:
        return report
    v = _assoc_violation(table)
    if v is None:
        return AxiomReport("orthoalgebra", ())
    return AxiomReport("quasi_oa", (v,))


def verify_oa_golfin(table):
    """Check the alternative four-axiom characterization of orthoalgebras."""
    structural_check(table)
    found = []
    for a, b, c in table.pairs():
        if table.sums_from(b).get(a) != c:
            found.append(Violation("oai", (a, b)))
            break
    for a in table.elements:
        if len(table.complements(a)) != 1:
            found.append(Violation("oaiii", (a,)))
            break
    v = _assoc_violation(table)
    if v is not None:
        found.append(v)
    for a in table.elements:
        if a in table.sums_from(a) and a != table.zero:
            found.append(Violation("oav*", (a,)))
            break
    if not found:
        return AxiomReport("orthoalgebra", ())
    axioms = {v.axiom for v in found}
    # failing only associativity still leaves a possible quasi-orthoalgebra
    cls = "quasi_oa" if axioms == {"oavii"} else "not_quasi_oa"
    return AxiomReport(cls, tuple(found))


def orthocomplement(table, a):
    """The unique a' with a + a' = 1."""
    return table.complement(a)


def leq(table, a, b):
    """a <= b iff some c has a + c = b."""
    return (a, b) in table.le_pairs()


def upper_set(table, a):
    """Elements above a, in index order."""
    le = table.le_pairs()
    return [b for b in table.elements if (a, b) in le]


def lower_set(table, a):
    le = table.le_pairs()
    return [b for b in table.elements if (b, a) in le]


def order_transitivity_counterexample(table):
    """First (a, b, c) with a <= b <= c but not a <= c, or None."""
    le = table.le_pairs()
    for a in table.elements:
        ups_a = [b for b in table.elements if (a, b) in le and b != a]
        for b in ups_a:
            for c in table.elements:
                if c == b or c == a or (b, c) not in le:
                    continue
                if (a, c) not in le:
                    return (a, b, c)
    return None


def join(table, a, b):
    """Least upper bound of a and b under <=, or None."""
    ups = [x for x in table.elements if leq(table, a, x) and leq(table, b, x)]
    for x in ups:
        if all(leq(table, x, y) for y in ups):
            return x
    return None


# ---------------------------------------------------------------------------
# blocks


def _closure(table, seed):
    """Close a set under complements and defined sums; None if uncloseable."""
    out = set(seed)
    out.add(table.zero)
    out.add(table.one)
    work = list(out)
    while work:
        x = work.pop()
        cs = table.complements(x)
        if len(cs) != 1:
            return None
        if cs[0] not in out:
            out.add(cs[0])
            work.append(cs[0])
        row = table.sums_from(x)
        for y in list(out):
            if y in row and row[y] not in out:
                out.add(row[y])
                work.append(row[y])
    return frozenset(out)


def boolean_atoms(table, subset):
    """Local atoms and the subset-sum map when `subset` is Boolean, else None.

    The test: the <=-minimal nonzero members p1..pk satisfy |subset| = 2^k
    and every member is the sum of exactly one subset of the p_i (summed in
    a fixed order; all such sums must be defined).
    """
    members = [e for e in table.elements if e in subset]
    nonzero = [e for e in members if e != table.zero]
    mins = [
        p
        for p in nonzero
        if not any(q != p and leq(table, q, p) for q in nonzero)
    ]
    k = len(mins)
    if len(members) != 2 ** k:
        return None
    sums = {frozenset(): table.zero}
    for r in range(1, k + 1):
        for combo in itertools.combinations(range(k), r):
            prev = frozenset(combo[:-1])
            if prev not in sums:
                return None
            base = sums[prev]
            last = mins[combo[-1]]
            row = table.sums_from(base)
            if last not in row:
                return None
            sums[frozenset(combo)] = row[last]
    values = set(sums.values())
    if len(values) != 2 ** k or values != set(members):
        return None
    atom_sets = {frozenset(mins[i] for i in key): v for key, v in sums.items()}
    return tuple(mins), atom_sets


def blocks(table):
    """All maximal Boolean sub-structures, as element tuples in index order.

    Grown breadth-first: extend each Boolean closed subset by one element,
    keep the extensions that close to Boolean sets, and report the subsets
    admitting none.
    """
    start = _closure(table, ())
    if start is None or boolean_atoms(table, start) is None:
        return []
    seen = set()
    maximal = set()
    stack = [start]
    while stack:
        current = stack.pop()
        if current in seen:
            continue
        seen.add(current)
        extensions = []
        for x in table.elements:
            if x in current:
                continue
            grown = _closure(table, current | {x})
            if grown is not None and boolean_atoms(table, grown) is not None:
                extensions.append(grown)
        if extensions:
            stack.extend(extensions)
        else:
            maximal.add(current)
    # a set reported maximal on one path may still sit inside another block
    maximal = [
        blk
        for blk in maximal
        if not any(other != blk and blk < other for other in maximal)
    ]
    as_tuples = [
        tuple(e for e in table.elements if e in blk) for blk in maximal
    ]
    return sorted(as_tuples, key=lambda blk: tuple(table.index(e) for e in blk))


def is_omp(table):
    """Check the orthomodular-poset axioms on an orthoalgebra table.

    Returns an AxiomReport whose class is "omp" on success and
    "orthoalgebra" with the first failing axiom otherwise.
    """
    le = table.le_pairs()

    def fail(axiom, witness):
        return AxiomReport("orthoalgebra", (Violation(axiom, witness),))

    # partial order (reflexivity comes from a + 0 = a)
    for a in table.elements:
        if (a, a) not in le:
            return fail("omp-partial-order", (a,))
    for a, b in itertools.product(table.elements, repeat=2):
        if a != b and (a, b) in le and (b, a) in le:
            return fail("omp-partial-order", (a, b))
    tr = order_transitivity_counterexample(table)
    if tr is not None:
        return fail("omp-partial-order", tr)
    for a in table.elements:
        if table.complement(table.complement(a)) != a:
            return fail("omp-involution", (a,))
    for a, b in itertools.product(table.elements, repeat=2):
        if (a, b) in le:
            if not leq(table, table.complement(b), table.complement(a)):
                return fail("omp-order-reversing", (a, b))
    for a in table.elements:
        if join(table, a, table.complement(a)) != table.one:
            return fail("omp-complement-join", (a,))
    for a in table.elements:
        for b in table.partners(a):
            if join(table, a, b) is None:
                return fail("omp-orthogonal-join", (a, b))
    for a, b in itertools.product(table.elements, repeat=2):
        if not leq(table, a, b):
            continue
        step = join(table, a, table.complement(b))
        if step is None:
            return fail("omp-orthomodular", (a, b))
        if join(table, a, table.complement(step)) != b:
            return fail("omp-orthomodular", (a, b))
    return AxiomReport("omp", ())


def classify(table):
    """Best structure class: not_quasi_oa, quasi_oa, orthoalgebra, omp, boolean."""
    report = verify_oa(table)
    if report.structure_class != "orthoalgebra":
        return report.structure_class
    omp = is_omp(table)
    if not omp.passed:
        return "orthoalgebra"
    full = frozenset(table.elements)
    if boolean_atoms(table, full) is not None:
        return "boolean"
    return "omp"


def _sum_of_three_defined(table, x, y, z):
    for p, q, r in itertools.permutations((x, y, z)):
        pq = table.sums_from(p).get(q)
        if pq is not None and r in table.sums_from(pq):
            return True
    return False


def mackey_decompositions(table, a, b):
    """All (a1, b1, c) with a = a1 + c, b = b1 + c, all three jointly summable."""
    into_a = [(x, c) for x, c, s in table.pairs() if s == a]
    into_b = defaultdict(list)
    for y, c, s in table.pairs():
        if s == b:
            into_b[c].append(y)
    out = []
    for a1, c in into_a:
        for b1 in into_b.get(c, ()):
            if _sum_of_three_defined(table, a1, b1, c):
                out.append((a1, b1, c))
    idx = table.index
    return sorted(out, key=lambda t: (idx(t[0]), idx(t[1]), idx(t[2])))


# ---------------------------------------------------------------------------
# Greechie diagrams and their pasting


class GreechieDiagram:
    """Atoms plus blocks of mutually orthogonal atoms (the smooth lines)."""

    def __init__(self, atoms, blocks):
        self.atoms = tuple(atoms)
        self.blocks = tuple(tuple(b) for b in blocks)
        atom_set = set(self.atoms)
        if len(atom_set) != len(self.atoms):
            raise StructureError("duplicate atom label")
        if not self.blocks:
            raise StructureError("diagram needs at least one block")
        covered = set()
        sets = []
        for blk in self.blocks:
            if len(blk) < 2:
                raise StructureError("block %r has fewer than 2 atoms" % (blk,))
            if len(set(blk)) != len(blk):
                raise StructureError("block %r repeats an atom" % (blk,))
            for x in blk:
                if x not in atom_set:
                    raise StructureError("block atom %r not declared" % (x,))
            covered.update(blk)
            sets.append(frozenset(blk))
        missing = atom_set - covered
        if missing:
            raise StructureError(
                "atoms %s occur in no block" % sorted(map(str, missing))
            )
        for i, j in itertools.combinations(range(len(sets)), 2):
            if sets[i] <= sets[j] or sets[j] <= sets[i]:
                raise StructureError(
                    "block %r is contained in block %r"
                    % (self.blocks[i], self.blocks[j])
                )

    def __repr__(self):
        return "GreechieDiagram(%d atoms, %d blocks)" % (
            len(self.atoms),
            len(self.blocks),
        )


def from_greechie(diagram):
    """Paste a diagram's block algebras into one quasi-orthoalgebra.

    Nodes (block, atom subset) are identified by the closure of: equal
    subsets of shared atoms, all empty sets, all full sets, and complements
    of identified nodes.  The sum glues within each block.
    """
    blk_atoms = [frozenset(b) for b in diagram.blocks]
    nodes = []
    for bi, blk in enumerate(diagram.blocks):
        for r in range(len(blk) + 1):
            for combo in itertools.combinations(blk, r):
                nodes.append((bi, frozenset(combo)))

    parent = {n: n for n in nodes}

    def find(n):
        root = n
        while parent[root] != root:
            root = parent[root]
        while parent[n] != root:
            parent[n], n = root, parent[n]
        return root

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry
            return True
        return False

    for i, j in itertools.combinations(range(len(blk_atoms)), 2):
        shared = sorted(blk_atoms[i] & blk_atoms[j], key=str)
        for r in range(len(shared) + 1):
            for combo in itertools.combinations(shared, r):
                union((i, frozenset(combo)), (j, frozenset(combo)))
        union((i, blk_atoms[i]), (j, blk_atoms[j]))

    def comp_node(n):
        bi, subset = n
        return (bi, blk_atoms[bi] - subset)

    changed = True
    while changed:
        changed = False
        groups = defaultdict(list)
        for n in nodes:
            groups[find(n)].append(n)
        for members in groups.values():
            first = comp_node(members[0])
            for other in members[1:]:
                if union(comp_node(other), first):
                    changed = True

    groups = defaultdict(list)
    for n in nodes:
        groups[find(n)].append(n)
    zero_root = find((0, frozenset()))
    one_root = find((0, blk_atoms[0]))
    if zero_root == one_root:
        raise PastingError("pasting identifies 0 with 1")
    for root, members in groups.items():
        if find(comp_node(members[0])) == root and root not in (zero_root,):
            raise PastingError(
                "pasting identifies a class with its own complement"
            )

    def canonical(members):
        return min(
            members, key=lambda n: (len(n[1]), tuple(sorted(map(str, n[1]))), n[0])
        )

    reps = {root: canonical(members) for root, members in groups.items()}
    comp_root = {root: find(comp_node(reps[root])) for root in groups}

    labels = {}
    for root, members in groups.items():
        if root == zero_root:
            labels[root] = "0"
        elif root == one_root:
            labels[root] = "1"
        else:
            singles = sorted(str(next(iter(n[1]))) for n in members if len(n[1]) == 1)
            if singles:
                labels[root] = singles[0]
            else:
                labels[root] = None
    for root in groups:
        if labels[root] is None:
            comp_label = labels[comp_root[root]]
            if comp_label not in (None, "0", "1") and "'" not in comp_label:
                labels[root] = comp_label + "'"
            else:
                rep = reps[root]
                labels[root] = "+".join(sorted(map(str, rep[1])))
    if len(set(labels.values())) != len(labels):
        raise PastingError("pasting produced colliding element labels")

    def order_key(root):
        rep = reps[root]
        if root == zero_root:
            tier = 0
        elif root == one_root:
            tier = 3
        elif len(rep[1]) == 1:
            tier = 1
        else:
            tier = 2
        return (tier, len(rep[1]), labels[root])

    roots = sorted(groups, key=order_key)
    element_of = {root: labels[root] for root in roots}
    elements = [element_of[root] for root in roots]

    oplus = {}
    for bi, blk in enumerate(diagram.blocks):
        for split in itertools.product((0, 1, 2), repeat=len(blk)):
            left = frozenset(a for a, s in zip(blk, split) if s == 1)
            right = frozenset(a for a, s in zip(blk, split) if s == 2)
            a = element_of[find((bi, left))]
            b = element_of[find((bi, right))]
            c = element_of[find((bi, left | right))]
            prev = oplus.get((a, b))
            if prev is not None and prev != c:
                raise PastingError(
                    "inconsistent sums %s + %s" % (format_label(a), format_label(b))
                )
            oplus[(a, b)] = c

    return FiniteQuasiOrthoalgebra(
        elements, element_of[zero_root], element_of[one_root], oplus
    )
