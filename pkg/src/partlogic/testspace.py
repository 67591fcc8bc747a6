"""Foulis-Randall test spaces: events, perspectivity, weights, partition test spaces."""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .atlas import PropertyCheck
from .errors import AlgebraicityError, SeparationError, StructureError
from .oa import AxiomReport, FiniteQuasiOrthoalgebra, Violation, format_label
from .partition import PartitionLogic


class TestSpace:
    """An outcome set with a family of tests covering it."""

    def __init__(self, outcomes, tests):
        self.outcomes = tuple(outcomes)
        self.tests = tuple(frozenset(t) for t in tests)
        if not self.outcomes:
            raise StructureError("empty outcome set")
        if len(set(self.outcomes)) != len(self.outcomes):
            raise StructureError("duplicate outcome")
        if not self.tests:
            raise StructureError("no tests")
        known = set(self.outcomes)
        for t in self.tests:
            if not t <= known:
                raise StructureError("test mentions an undeclared outcome")

    @classmethod
    def from_greechie(cls, diagram):
        """Read a diagram as a test space: atoms are outcomes, blocks tests."""
        return cls(diagram.atoms, [frozenset(b) for b in diagram.blocks])

    def __repr__(self):
        return "TestSpace(%d outcomes, %d tests)" % (
            len(self.outcomes),
            len(self.tests),
        )

    def _key(self, outcome):
        return self.outcomes.index(outcome)

    def event_key(self, event):
        return (len(event), tuple(sorted(self._key(x) for x in event)))

    def events(self):
        """All subsets of tests, deduplicated, in (size, outcome) order."""
        seen = set()
        for t in self.tests:
            members = sorted(t, key=self._key)
            for r in range(len(members) + 1):
                for combo in itertools.combinations(members, r):
                    seen.add(frozenset(combo))
        return sorted(seen, key=self.event_key)

    def is_event(self, subset):
        subset = frozenset(subset)
        return any(subset <= t for t in self.tests)

    def local_complements(self, event):
        """Events G with event + G disjoint and united into a full test."""
        out = set()
        for t in self.tests:
            if event <= t:
                out.add(t - event)
        return out


class PartitionTestSpace:
    """Cells over a base set; every test is a partition of the base."""

    def __init__(self, base, cells, tests):
        self.base = tuple(base)
        self.cells = tuple(frozenset(c) for c in dict.fromkeys(frozenset(c) for c in cells))
        self.tests = tuple(
            frozenset(frozenset(c) for c in t) for t in tests
        )
        pts = set(self.base)
        if not pts:
            raise StructureError("empty base set")
        if len(pts) != len(self.base):
            raise StructureError("duplicate base point")
        cellset = set(self.cells)
        for t in self.tests:
            if not t <= cellset:
                raise StructureError("test uses an undeclared cell")
            covered = set()
            for cell in t:
                if covered & cell:
                    raise StructureError("test cells overlap")
                covered |= cell
            if covered != pts:
                raise StructureError("test is not a partition of the base")
        # cells unused by any test are tolerated here: completion may later
        # assemble them into new tests; the verifier reports them as a
        # covering violation
        for cell in self.cells:
            if not cell:
                raise StructureError("empty cell")
            if not cell <= pts:
                raise StructureError("cell leaves the base set")

    def as_test_space(self):
        """Reinterpret with outcome set Y = cells."""
        ordered = sorted(
            self.cells, key=lambda c: tuple(sorted(str(p) for p in c))
        )
        return TestSpace(ordered, self.tests)

    def __repr__(self):
        return "PartitionTestSpace(%d base points, %d cells, %d tests)" % (
            len(self.base),
            len(self.cells),
            len(self.tests),
        )


def verify_test_space(ts):
    """Covering plus antichain checks, with witnesses."""
    found = []
    covered = set().union(*ts.tests) if ts.tests else set()
    for x in ts.outcomes:
        if x not in covered:
            found.append(Violation("test-space-covering", (x,)))
            break
    for s, t in itertools.permutations(ts.tests, 2):
        if s < t:
            found.append(Violation("test-space-antichain", (s, t)))
            break
    cls = "test_space" if not found else "not_test_space"
    return AxiomReport(cls, tuple(found))


@dataclass(frozen=True)
class EventRelations:
    orthogonal: bool
    loc: bool
    perspective: bool
    axes: tuple


def event_relations(ts, f, g):
    """Orthogonality, local complementation, and perspectivity of two events."""
    f = frozenset(f)
    g = frozenset(g)
    for ev in (f, g):
        if not ts.is_event(ev):
            raise StructureError("%s is not an event" % format_label(ev))
    orth = not (f & g) and any(f | g <= t for t in ts.tests)
    loc = orth and (f | g) in ts.tests
    axes = sorted(
        ts.local_complements(f) & ts.local_complements(g), key=ts.event_key
    )
    return EventRelations(orth, loc, bool(axes), tuple(axes))


def is_algebraic(ts):
    """Perspectivity must respect local complementation.

    Returns a PropertyCheck; the witness is the first (F, G, H) with
    F ~ G, F loc H but not G loc H, scanning events in canonical order.
    """
    events = ts.events()
    locs = {e: ts.local_complements(e) for e in events}
    for f in events:
        for g in events:
            common = locs[f] & locs[g]
            if not common:
                continue
            for h in sorted(locs[f], key=ts.event_key):
                if h not in locs[g]:
                    return PropertyCheck(False, (f, g, h))
    return PropertyCheck(True)


def pi_logic(ts):
    """The orthoalgebra of perspectivity classes of events.

    Requires an algebraic test space.  Class labels are the canonical
    (smallest) representative events; the sum of two classes glues any
    orthogonal pair of representatives.
    """
    check = is_algebraic(ts)
    if not check:
        raise AlgebraicityError(
            "test space is not algebraic", witness=check.witness
        )
    events = ts.events()
    locs = {e: ts.local_complements(e) for e in events}

    parent = {e: e for e in events}

    def find(e):
        root = e
        while parent[root] != root:
            root = parent[root]
        while parent[e] != root:
            parent[e], e = root, parent[e]
        return root

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for e, f in itertools.combinations(events, 2):
        if locs[e] & locs[f]:
            union(e, f)

    classes = {}
    for e in events:
        classes.setdefault(find(e), []).append(e)
    rep = {
        root: min(members, key=ts.event_key)
        for root, members in classes.items()
    }
    label = {e: rep[find(e)] for e in events}

    elements = sorted(set(label.values()), key=ts.event_key)
    zero = label[frozenset()]
    one = label[min(ts.tests, key=ts.event_key)]
    oplus = {}
    for e, f in itertools.product(events, repeat=2):
        if e & f or not any(e | f <= t for t in ts.tests):
            continue
        a, b, c = label[e], label[f], label[e | f]
        prev = oplus.get((a, b))
        if prev is not None and prev != c:
            raise AlgebraicityError(
                "sum of classes %s + %s is not well-defined"
                % (format_label(a), format_label(b))
            )
        oplus[(a, b)] = c
    return FiniteQuasiOrthoalgebra(elements, zero, one, oplus)


class Weight:
    """Total rational map on outcomes summing to 1 on every test."""

    __slots__ = ("space", "values")

    def __init__(self, space, values):
        self.space = space
        self.values = {x: Fraction(values[x]) for x in space.outcomes}

    def __call__(self, x):
        return self.values[x]

    def row(self, outcomes=None):
        outcomes = outcomes if outcomes is not None else self.space.outcomes
        return tuple(self.values[x] for x in outcomes)

    def __repr__(self):
        ones = [str(x) for x in self.space.outcomes if self.values[x] == 1]
        return "Weight(1 on %s)" % ",".join(ones)


def is_weight(ts, w):
    for x in ts.outcomes:
        if not 0 <= w(x) <= 1:
            return False
    return all(sum(w(x) for x in t) == 1 for t in ts.tests)


def enumerate_two_valued_weights(ts):
    """All {0,1} weights (one outcome valued 1 per test), by backtracking."""
    order = list(ts.outcomes)
    tests = [frozenset(t) for t in ts.tests]
    val = {}
    results = []

    def consistent():
        for t in tests:
            ones = sum(1 for x in t if val.get(x) == 1)
            unknown = sum(1 for x in t if x not in val)
            if ones > 1 or ones + unknown == 0:
                return False
        return True

    def search(i):
        if i == len(order):
            if all(sum(val[x] for x in t) == 1 for t in tests):
                results.append(dict(val))
            return
        for b in (0, 1):
            val[order[i]] = b
            if consistent():
                search(i + 1)
            del val[order[i]]

    search(0)
    results.sort(key=lambda v: tuple(v[x] for x in order))
    return [Weight(ts, v) for v in results]


def ts_to_partition_test_space(ts):
    """Represent a test space over its two-valued weights.

    Each outcome becomes the set of weights valuing it 1; each test becomes
    a partition of the weight set.  Requires the weights to separate
    outcomes.
    """
    weights = enumerate_two_valued_weights(ts)
    if not weights:
        raise SeparationError("no separating two-valued weights")
    names = {id(w): "w%d" % (i + 1) for i, w in enumerate(weights)}

    def phi(x):
        return frozenset(names[id(w)] for w in weights if w(x) == 1)

    for x, y in itertools.combinations(ts.outcomes, 2):
        if phi(x) == phi(y):
            raise SeparationError(
                "outcomes %r and %r are inseparable" % (x, y), pair=(x, y)
            )
    cells = [phi(x) for x in ts.outcomes]
    tests = [frozenset(phi(x) for x in t) for t in ts.tests]
    return PartitionTestSpace([names[id(w)] for w in weights], cells, tests)


def _exact_covers(base, cells):
    """All partitions of the base composed of the given cells."""
    base = tuple(base)
    cells = sorted(set(cells), key=lambda c: tuple(sorted(str(p) for p in c)))
    out = []

    def search(remaining, chosen):
        if not remaining:
            out.append(frozenset(chosen))
            return
        pivot = min(remaining, key=str)
        for cell in cells:
            if pivot in cell and cell <= remaining:
                chosen.append(cell)
                search(remaining - cell, chosen)
                chosen.pop()

    search(frozenset(base), [])
    return out


def completion(pts):
    """Add every partition of the base formable from the declared cells."""
    covers = _exact_covers(pts.base, pts.cells)
    existing = set(pts.tests)
    added = sorted(
        (c for c in covers if c not in existing),
        key=lambda t: sorted(tuple(sorted(str(p) for p in c)) for c in t),
    )
    return PartitionTestSpace(pts.base, pts.cells, list(pts.tests) + added)


def is_complete(pts):
    """True iff completion adds no test."""
    covers = _exact_covers(pts.base, pts.cells)
    existing = set(pts.tests)
    for c in covers:
        if c not in existing:
            return PropertyCheck(False, (c,))
    return PropertyCheck(True)


def pts_to_partition_logic(pts):
    """Tests become partitions of the base; cell order is canonical."""
    partitions = [
        sorted(t, key=lambda c: tuple(sorted(str(p) for p in c)))
        for t in pts.tests
    ]
    return PartitionLogic(pts.base, partitions)


def partition_logic_to_pts(pl):
    """Cells of all partitions become outcomes; partitions become tests."""
    cells = [c for part in pl.partitions for c in part]
    tests = [frozenset(part) for part in pl.partitions]
    return PartitionTestSpace(pl.ground, cells, tests)


@dataclass(frozen=True)
class OmpConditions:
    triple_condition: bool
    triple_witness: tuple | None
    concrete_condition: bool
    concrete_witness: tuple | None


def omp_conditions(pts):
    """The two sufficient conditions for the class logic to be a (concrete) OMP.

    triple: pairwise orthogonal events E, F, G force (E u F) orthogonal G.
    concrete: disjoint unions coincide with event orthogonality.
    """
    ts = pts.as_test_space()
    events = ts.events()

    def orth(e, f):
        return not (e & f) and any(e | f <= t for t in ts.tests)

    triple_witness = None
    for e, f, g in itertools.product(events, repeat=3):
        if orth(e, f) and orth(f, g) and orth(e, g) and not orth(e | f, g):
            triple_witness = (e, f, g)
            break

    concrete_witness = None
    for e1, e2 in itertools.combinations(events, 2):
        u1 = frozenset().union(*e1) if e1 else frozenset()
        u2 = frozenset().union(*e2) if e2 else frozenset()
        if (not (u1 & u2)) != orth(e1, e2):
            concrete_witness = (e1, e2)
            break
    return OmpConditions(
        triple_witness is None,
        triple_witness,
        concrete_witness is None,
        concrete_witness,
    )
