"""Finite permutation groups: the icosahedral group A5, the Valentiner group
A6, and Klein's simple group L2(7) of order 168.

Elements are enumerated by closure from generators (orders stay <= 360, so
brute force is the honest tool); conjugacy classes, simplicity, the faithful
P^1-action criterion, special orbit sizes, and the parity test for lifting
the A5 action on P^1 to O(r) all come from the enumerated data.  Character
tables are stored as exact data (entries in Q(sqrt(5)) or Q(sqrt(-7))) and
machine-verified via row orthogonality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction


class NoFaithfulActionError(Exception):
    """The group admits no non-trivial action on a smooth rational curve."""


# permutations are tuples: p[i] is the image of point i (0-based)


def identity(degree):
    return tuple(range(degree))


def compose(p, q):
    """p after q: (p*q)[i] = p[q[i]]."""
    return tuple(p[q[i]] for i in range(len(p)))


def inverse(p):
    out = [0] * len(p)
    for i, image in enumerate(p):
        out[image] = i
    return tuple(out)


def from_cycles(degree, cycles):
    images = list(range(degree))
    for cycle in cycles:
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            images[a] = b
    return tuple(images)


def element_order(p):
    n = 1
    q = p
    ident = identity(len(p))
    while q != ident:
        q = compose(q, p)
        n += 1
    return n


@dataclass(frozen=True)
class ConjugacyClass:
    representative: tuple[int, ...]
    size: int
    order: int


@dataclass(frozen=True)
class PermGroup:
    name: str
    degree: int
    generators: tuple[tuple[int, ...], ...]
    elements: frozenset
    classes: tuple[ConjugacyClass, ...]

    @property
    def order(self):
        return len(self.elements)

    @classmethod
    def generate(cls, name, degree, generators):
        generators = tuple(tuple(g) for g in generators)
        elements = {identity(degree)}
        frontier = list(generators)
        elements.update(frontier)
        while frontier:
            fresh = []
            for g in generators:
                for h in frontier:
                    prod = compose(g, h)
                    if prod not in elements:
                        elements.add(prod)
                        fresh.append(prod)
            frontier = fresh
        classes = _conjugacy_classes(elements, generators)
        return cls(name, degree, generators, frozenset(elements), classes)


def _conjugacy_classes(elements, generators):
    inverses = {g: inverse(g) for g in generators}
    unassigned = set(elements)
    classes = []
    while unassigned:
        seed = min(unassigned)
        orbit = {seed}
        frontier = [seed]
        while frontier:
            x = frontier.pop()
            for g in generators:
                y = compose(compose(g, x), inverses[g])
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        unassigned -= orbit
        rep = min(orbit)
        classes.append(ConjugacyClass(rep, len(orbit), element_order(rep)))
    classes.sort(key=lambda c: (c.order, c.size, c.representative))
    return tuple(classes)


def standard_group(name):
    """A5 on 5 letters, A6 on 6, L2(7) on the projective line over F_7."""
    if name == "A5":
        return PermGroup.generate(
            "A5", 5, [from_cycles(5, [(0, 1, 2, 3, 4)]), from_cycles(5, [(0, 1, 2)])]
        )
    if name == "A6":
        return PermGroup.generate(
            "A6",
            6,
            [from_cycles(6, [(0, 1, 2)]), from_cycles(6, [(1, 2, 3, 4, 5)])],
        )
    if name == "L2_7":
        # points 0..6 are F_7, point 7 is infinity; x -> x+1 and x -> -1/x
        translation = tuple(list((i + 1) % 7 for i in range(7)) + [7])
        images = [0] * 8
        images[7] = 0
        images[0] = 7
        for x in range(1, 7):
            images[x] = (-pow(x, 5, 7)) % 7  # x^5 = x^-1 in F_7*
        neginv = tuple(images)
        return PermGroup.generate("L2_7", 8, [translation, neginv])
    raise ValueError(f"unknown group {name!r}; expected A5, A6 or L2_7")


def is_simple(group):
    """True iff the normal closure of every non-identity element is everything.

    One representative per conjugacy class suffices, since normal closures
    are conjugation-invariant.
    """
    if group.order > 1000:
        raise ValueError("simplicity check is desk-scale (order <= 1000)")
    if group.order == 1:
        return False
    for cls in group.classes:
        if cls.order == 1:
            continue
        if _normal_closure_size(group, cls.representative) != group.order:
            return False
    return True


def _normal_closure_size(group, element):
    conjugates = set()
    frontier = [element]
    conjugates.add(element)
    inverses = {g: inverse(g) for g in group.generators}
    while frontier:
        x = frontier.pop()
        for g in group.generators:
            y = compose(compose(g, x), inverses[g])
            if y not in conjugates:
                conjugates.add(y)
                frontier.append(y)
    closure = {identity(group.degree)}
    frontier = list(conjugates)
    closure.update(frontier)
    while frontier:
        fresh = []
        for g in conjugates:
            for h in frontier:
                prod = compose(g, h)
                if prod not in closure:
                    closure.add(prod)
                    fresh.append(prod)
        frontier = fresh
    return len(closure)


def maximal_cyclic_orders(group):
    """Orders of the maximal cyclic subgroups, from the enumerated elements."""
    cyclic = {}
    for p in group.elements:
        subgroup = frozenset(_powers(p))
        cyclic[subgroup] = len(subgroup)
    subgroups = list(cyclic)
    maximal = []
    for s in subgroups:
        if any(s < t for t in subgroups if t is not s):
            continue
        maximal.append(len(s))
    return sorted(set(m for m in maximal if m > 1))


def _powers(p):
    out = [identity(len(p))]
    q = p
    while q != out[0]:
        out.append(q)
        q = compose(q, p)
    return out


def p1_special_orbit_sizes(group):
    """Sizes of the non-free orbits (plus the free one) of a faithful action
    on the projective line; None when there is no faithful action.

    Among the simple groups here only the icosahedral one (order 60) embeds
    in the Moebius group: finite subgroups of PGL_2 are cyclic, dihedral,
    A4, S4, A5.  Point stabilizers are cyclic, so the special orbit sizes
    are |G| / m over the maximal cyclic orders m.
    """
    if not is_simple(group):
        raise ValueError("only simple groups are in scope")
    if group.order != 60:
        return None
    sizes = {group.order // m for m in maximal_cyclic_orders(group)}
    sizes.add(group.order)
    return frozenset(sizes)


def min_orbit_on_curve(group):
    """Smallest orbit size of a faithful action on a smooth rational curve."""
    sizes = p1_special_orbit_sizes(group)
    if sizes is None:
        raise NoFaithfulActionError(
            f"{group.name} does not act non-trivially on a smooth rational curve"
        )
    return min(sizes)


def equivariant_bundle_parity(r):
    """Does the icosahedral action on P^1 lift to O(r)?  Exactly when r is even.

    The binary icosahedral double cover acts on degree-r forms through its
    center, which acts by (-1)^r; the representation factors through A5 only
    when that sign is trivial.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    return r % 2 == 0


# -- exact values in quadratic fields ----------------------------------------


@dataclass(frozen=True)
class QuadVal:
    """a + b*sqrt(d) with rational a, b; d in {5, -7} here."""

    a: Fraction
    b: Fraction = Fraction(0)
    d: int = 5

    @classmethod
    def of(cls, value, d=5):
        return cls(Fraction(value), Fraction(0), d)

    def _match(self, other):
        if not isinstance(other, QuadVal):
            other = QuadVal.of(other, self.d)
        if other.b == 0:
            other = QuadVal(other.a, Fraction(0), self.d)
        if self.b == 0 and self.d != other.d:
            return QuadVal(self.a, Fraction(0), other.d), other
        if self.d != other.d:
            raise ValueError("mixed quadratic fields")
        return self, other

    def __add__(self, other):
        s, o = self._match(other)
        return QuadVal(s.a + o.a, s.b + o.b, s.d)

    __radd__ = __add__

    def __mul__(self, other):
        s, o = self._match(other)
        return QuadVal(s.a * o.a + s.b * o.b * s.d, s.a * o.b + s.b * o.a, s.d)

    __rmul__ = __mul__

    def conjugate(self):
        """Complex conjugate: flips sqrt(d) only for negative d."""
        if self.d < 0:
            return QuadVal(self.a, -self.b, self.d)
        return self

    def is_rational(self):
        return self.b == 0

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        return f"{self.a}+{self.b}*sqrt({self.d})"


@dataclass(frozen=True)
class CharacterTable:
    group_name: str
    field: int  # the d of the irrational entries
    class_meta: tuple[tuple[int, int], ...]  # (element order, class size)
    rows: tuple[tuple[QuadVal, ...], ...]

    def degrees(self):
        return [row[0] for row in self.rows]


def _qv(value, d):
    return QuadVal.of(value, d)


def _table_a5():
    d = 5
    phi = QuadVal(Fraction(1, 2), Fraction(1, 2), d)  # (1+sqrt5)/2
    psi = QuadVal(Fraction(1, 2), Fraction(-1, 2), d)  # (1-sqrt5)/2
    rows = [
        [1, 1, 1, 1, 1],
        [3, -1, 0, phi, psi],
        [3, -1, 0, psi, phi],
        [4, 0, 1, -1, -1],
        [5, 1, -1, 0, 0],
    ]
    meta = ((1, 1), (2, 15), (3, 20), (5, 12), (5, 12))
    return CharacterTable(
        "A5", d, meta, tuple(tuple(_coerce(v, d) for v in row) for row in rows)
    )


def _table_a6():
    d = 5
    phi = QuadVal(Fraction(1, 2), Fraction(1, 2), d)
    psi = QuadVal(Fraction(1, 2), Fraction(-1, 2), d)
    rows = [
        [1, 1, 1, 1, 1, 1, 1],
        [5, 1, 2, -1, -1, 0, 0],
        [5, 1, -1, 2, -1, 0, 0],
        [8, 0, -1, -1, 0, phi, psi],
        [8, 0, -1, -1, 0, psi, phi],
        [9, 1, 0, 0, 1, -1, -1],
        [10, -2, 1, 1, 0, 0, 0],
    ]
    meta = ((1, 1), (2, 45), (3, 40), (3, 40), (4, 90), (5, 72), (5, 72))
    return CharacterTable(
        "A6", d, meta, tuple(tuple(_coerce(v, d) for v in row) for row in rows)
    )


def _table_l2_7():
    d = -7
    sigma = QuadVal(Fraction(-1, 2), Fraction(1, 2), d)  # (-1+sqrt(-7))/2
    tau = QuadVal(Fraction(-1, 2), Fraction(-1, 2), d)
    rows = [
        [1, 1, 1, 1, 1, 1],
        [3, -1, 0, 1, sigma, tau],
        [3, -1, 0, 1, tau, sigma],
        [6, 2, 0, 0, -1, -1],
        [7, -1, 1, -1, 0, 0],
        [8, 0, -1, 0, 1, 1],
    ]
    meta = ((1, 1), (2, 21), (3, 56), (4, 42), (7, 24), (7, 24))
    return CharacterTable(
        "L2_7", d, meta, tuple(tuple(_coerce(v, d) for v in row) for row in rows)
    )


def _coerce(value, d):
    if isinstance(value, QuadVal):
        return value
    return QuadVal.of(value, d)


_TABLES = {"A5": _table_a5, "A6": _table_a6, "L2_7": _table_l2_7}


def character_table(name):
    try:
        return _TABLES[name]()
    except KeyError:
        raise ValueError(f"no character table for {name!r}") from None


def verify_character_table(group, table):
    """Exact verification: class data matches the enumerated group, the
    degrees satisfy sum(d^2) = |G|, and the rows are orthogonal with the
    class-size weights."""
    if len(table.rows) != len(group.classes):
        raise ValueError("row count differs from the group's class count")
    computed_meta = tuple((c.order, c.size) for c in group.classes)
    if computed_meta != table.class_meta:
        return False
    degrees = [row[0] for row in table.rows]
    if any(not d.is_rational() for d in degrees):
        return False
    if sum(d.a * d.a for d in degrees) != group.order:
        return False
    sizes = [c.size for c in group.classes]
    for i, row_i in enumerate(table.rows):
        for j, row_j in enumerate(table.rows):
            total = QuadVal.of(0, table.field)
            for size, u, v in zip(sizes, row_i, row_j):
                total = total + size * (u * v.conjugate())
            expected = group.order if i == j else 0
            if not (total.is_rational() and total.a == expected):
                return False
    return True
