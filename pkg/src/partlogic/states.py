"""Probability measures on tables: two-valued states, prime ideals, exact solving.

All arithmetic is exact (ints and fractions.Fraction); the enumerator is a
plain backtracking search whose unit propagation runs over the sum entries
a + b = c (the pair a + a' = 1 subsumes complement propagation).
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import StructureError
from .oa import format_label, leq


class TwoValuedState:
    """Total {0,1} assignment on a table, additive over defined sums."""

    __slots__ = ("table", "bits")

    def __init__(self, table, values):
        self.table = table
        if isinstance(values, dict):
            self.bits = tuple(int(values[e]) for e in table.elements)
        else:
            self.bits = tuple(int(v) for v in values)
        if len(self.bits) != len(table.elements):
            raise StructureError("state is not total on the element set")
        if any(b not in (0, 1) for b in self.bits):
            raise StructureError("state takes a value outside {0,1}")

    def __call__(self, a):
        return self.bits[self.table.index(a)]

    def __eq__(self, other):
        return (
            isinstance(other, TwoValuedState)
            and self.table is other.table
            and self.bits == other.bits
        )

    def __hash__(self):
        return hash((id(self.table), self.bits))

    def __repr__(self):
        ones = [format_label(e) for e, b in zip(self.table.elements, self.bits) if b]
        return "TwoValuedState(1 on %s)" % ",".join(ones)

    def row(self, elements):
        """Value tuple over the given elements (table display order)."""
        return tuple(self(e) for e in elements)


class RationalState:
    """Total map element -> Fraction in [0,1]."""

    __slots__ = ("table", "values")

    def __init__(self, table, values):
        self.table = table
        vals = {}
        for e in table.elements:
            if e not in values:
                raise StructureError(
                    "state missing value for %s" % format_label(e)
                )
            vals[e] = Fraction(values[e])
        self.values = vals

    def __call__(self, a):
        return self.values[a]

    def row(self, elements):
        return tuple(self(e) for e in elements)


@dataclass(frozen=True)
class PrimeIdeal:
    """Downward-closed, sum-closed subset holding exactly one of a, a'."""

    members: frozenset


@dataclass(frozen=True)
class PrimenessResult:
    prime: bool
    separating: tuple | None
    inseparable: tuple | None

    def __bool__(self):
        return self.prime


@dataclass(frozen=True)
class StateSpaceSolution:
    """Affine dimension of the exact equality system plus one sample point.

    dimension is -1 when the equalities are inconsistent; feasible records
    whether the sample also lies within the [0,1] bounds.
    """

    dimension: int
    sample: RationalState | None
    feasible: bool


def atoms_of(table):
    """<=-minimal nonzero elements of a table, in index order."""
    nz = [e for e in table.elements if e != table.zero]
    return [
        p for p in nz if not any(q != p and leq(table, q, p) for q in nz)
    ]


def enumerate_two_valued_states(table):
    """The complete list of two-valued states, in value-vector order."""
    n = len(table.elements)
    idx = table.index
    entries = []
    seen = set()
    for a, b, c in table.pairs():
        key = tuple(sorted((idx(a), idx(b)))) + (idx(c),)
        if key not in seen:
            seen.add(key)
            entries.append((idx(a), idx(b), idx(c)))
    touching = [[] for _ in range(n)]
    for k, (ia, ib, ic) in enumerate(entries):
        for i in {ia, ib, ic}:
            touching[i].append(k)

    val = [None] * n
    results = []

    def propagate(assignments):
        """Assign queued (index, bit) pairs and their consequences.

        Returns the trail of set indices, or None on contradiction.
        """
        trail = []
        queue = list(assignments)
        while queue:
            i, b = queue.pop()
            if val[i] is not None:
                if val[i] != b:
                    for j in trail:
                        val[j] = None
                    return None
                continue
            if b not in (0, 1):
                for j in trail:
                    val[j] = None
                return None
            val[i] = b
            trail.append(i)
            for k in touching[i]:
                ia, ib, ic = entries[k]
                va, vb, vc = val[ia], val[ib], val[ic]
                known = (va is not None) + (vb is not None) + (vc is not None)
                if known == 3:
                    if va + vb != vc:
                        for j in trail:
                            val[j] = None
                        return None
                elif known == 2:
                    if va is None:
                        queue.append((ia, vc - vb))
                    elif vb is None:
                        queue.append((ib, vc - va))
                    else:
                        queue.append((ic, va + vb))
        return trail

    def undo(trail):
        for j in trail:
            val[j] = None

    def search(start):
        i = start
        while i < n and val[i] is not None:
            i += 1
        if i == n:
            results.append(tuple(val))
            return
        for b in (0, 1):
            trail = propagate([(i, b)])
            if trail is not None:
                search(i + 1)
                undo(trail)

    root = propagate([(idx(table.zero), 0), (idx(table.one), 1)])
    if root is not None:
        search(0)
        undo(root)
    return [TwoValuedState(table, bits) for bits in sorted(results)]


def is_state(table, s):
    """Exact check of normalization and additivity for a rational state."""
    if s(table.one) != 1:
        return False
    for e in table.elements:
        if not 0 <= s(e) <= 1:
            return False
    for a, b, c in table.pairs():
        if s(a) + s(b) != s(c):
            return False
    return True


def _check_two_valued(table, s):
    if s(table.one) != 1:
        raise StructureError("state does not map 1 to 1")
    for a, b, c in table.pairs():
        if s(a) + s(b) != s(c):
            raise StructureError(
                "state not additive on %s + %s" % (format_label(a), format_label(b))
            )


def is_prime_ideal(table, ideal):
    """True iff the member set is a prime ideal of the table."""
    members = ideal.members
    if not members <= set(table.elements):
        return False
    if table.zero not in members:
        return False
    for a in members:
        for b in table.elements:
            if leq(table, b, a) and b not in members:
                return False
    for a, b, c in table.pairs():
        if a in members and b in members and c not in members:
            return False
    for a in table.elements:
        if (a in members) == (table.complement(a) in members):
            return False
    return True


def state_to_prime_ideal(table, s):
    """The elements valued 0 by a two-valued state."""
    _check_two_valued(table, s)
    return PrimeIdeal(frozenset(e for e in table.elements if s(e) == 0))


def prime_ideal_to_state(table, ideal):
    """The indicator of the ideal's complement."""
    if not is_prime_ideal(table, ideal):
        raise StructureError("not a prime ideal")
    return TwoValuedState(
        table, {e: 0 if e in ideal.members else 1 for e in table.elements}
    )


def is_prime(table):
    """Whether the two-valued states separate every pair of elements."""
    sts = enumerate_two_valued_states(table)
    for a, b in itertools.combinations(table.elements, 2):
        if all(s(a) == s(b) for s in sts):
            return PrimenessResult(False, None, (a, b))
    return PrimenessResult(True, tuple(sts), None)


def _rref(rows):
    """Reduced row echelon form in place; returns the pivot column list."""
    if not rows:
        return []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        factor = rows[r][c]
        rows[r] = [x / factor for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def state_space_solve(table):
    """Solve the exact linear state equations {s(1)=1, s(a)+s(b)=s(a+b)}.

    Returns the affine dimension of the equality system and a sample
    solution; bounds are only checked at the sample point.
    """
    n = len(table.elements)
    idx = table.index
    rows = []

    def blank():
        return [Fraction(0)] * (n + 1)

    row = blank()
    row[idx(table.zero)] = Fraction(1)
    rows.append(row)
    row = blank()
    row[idx(table.one)] = Fraction(1)
    row[n] = Fraction(1)
    rows.append(row)
    seen = set()
    for a, b, c in table.pairs():
        key = tuple(sorted((idx(a), idx(b)))) + (idx(c),)
        if key in seen:
            continue
        seen.add(key)
        row = blank()
        row[idx(a)] += 1
        row[idx(b)] += 1
        row[idx(c)] -= 1
        rows.append(row)

    pivots = _rref(rows)
    rank = len(pivots)
    for i in range(rank, len(rows)):
        if rows[i][n] != 0:
            return StateSpaceSolution(-1, None, False)
    dimension = n - rank

    # particular solution: free variables at 0
    particular = [Fraction(0)] * n
    for r, c in enumerate(pivots):
        particular[c] = rows[r][n]

    candidates = [particular]
    sts = enumerate_two_valued_states(table)
    if sts:
        k = len(sts)
        mean = [
            Fraction(sum(s.bits[i] for s in sts), k) for i in range(n)
        ]
        candidates.append(mean)
        candidates.extend([Fraction(b) for b in s.bits] for s in sts)
    for cand in candidates:
        state = RationalState(
            table, {e: cand[i] for i, e in enumerate(table.elements)}
        )
        if is_state(table, state):
            return StateSpaceSolution(dimension, state, True)
    fallback = RationalState(
        table, {e: particular[i] for i, e in enumerate(table.elements)}
    )
    return StateSpaceSolution(dimension, fallback, False)
