"""Combinatorial surfaces: blowup programs over P^2, F_n and P^1 x P^1.

A SurfaceModel is a Picard lattice with a canonical class and a set of
tracked curve classes.  Curves are tracked by class vector only; point
positions are never coordinatized (generality of position along invariant
curves is an assumption recorded in every report).  Blowing up appends (-1)
basis vectors, contraction groups named curves into negative definite log
terminal configurations and produces a SingularModel with exact rho and K^2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from fractions import Fraction

from . import graphs as graphmod
from .graphs import (
    DualGraph,
    NotContractibleError,
    NotLogTerminalError,
    SingClass,
    classify,
    codiscrepancies,
    contracts_to_smooth_point,
    display_type,
)
from .linalg import rank, signature


@dataclass(frozen=True)
class CurveClass:
    """A tracked rational curve: name, class vector, optional orbit tag.

    orbit is the blowup-orbit label for exceptional curves and None for
    user-tracked curves (which are assumed invariant)."""

    name: str
    coords: tuple[int, ...]
    orbit: str | None = None


@dataclass(frozen=True)
class OrbitInfo:
    label: str
    size: int
    near: str | None


class ModelError(Exception):
    """Invalid operation on a surface model (unknown name, bad orbit, ...)."""


@dataclass(frozen=True)
class SurfaceModel:
    base: str
    base_gram: tuple[tuple[int, ...], ...]
    canonical: tuple[int, ...]
    curves: tuple[CurveClass, ...]
    orbits: tuple[OrbitInfo, ...]
    generating: bool = False

    # -- lattice basics ----------------------------------------------------

    @property
    def rho(self):
        return len(self.canonical)

    @property
    def base_rank(self):
        return len(self.base_gram)

    def pairing(self, u, v):
        b = self.base_rank
        total = 0
        for i in range(b):
            row = self.base_gram[i]
            if u[i]:
                for j in range(b):
                    if v[j]:
                        total += u[i] * row[j] * v[j]
        for i in range(b, len(u)):
            total -= u[i] * v[i]
        return total

    def k_squared(self):
        return self.pairing(self.canonical, self.canonical)

    def curve(self, name):
        for c in self.curves:
            if c.name == name:
                return c
        raise ModelError(f"unknown curve {name!r}")

    def curve_names(self):
        return [c.name for c in self.curves]

    def self_intersection(self, name):
        c = self.curve(name)
        return self.pairing(c.coords, c.coords)

    def gram_matrix(self):
        n = self.rho
        basis = []
        for i in range(n):
            e = [0] * n
            e[i] = 1
            basis.append(tuple(e))
        return [[self.pairing(basis[i], basis[j]) for j in range(n)] for i in range(n)]

    def lattice_signature(self):
        return signature(self.gram_matrix())


def base_surface(kind):
    """Fresh model of P2, F<n> (Hirzebruch) or P1xP1.

    P2: basis (H), K = -3H.  F_n: basis (D, f) with D the (-n)-section and f
    the fiber, K = -2D - (n+2)f; D is tracked from the start.  P1xP1: basis
    the two rulings, K = (-2, -2).
    """
    if kind == "P2":
        return SurfaceModel("P2", ((1,),), (-3,), (), ())
    if kind == "P1xP1":
        return SurfaceModel("P1xP1", ((0, 1), (1, 0)), (-2, -2), (), ())
    match = re.fullmatch(r"F(\d+)", kind)
    if not match:
        raise ModelError(f"unknown base surface {kind!r}")
    n = int(match.group(1))
    model = SurfaceModel(kind, ((-n, 1), (1, 0)), (-2, -(n + 2)), (), ())
    return track(model, "D", (1, 0))


def base_symbols(model):
    """Class vectors of the base's named symbols (H or D/f)."""
    pad = (0,) * (model.rho - model.base_rank)
    if model.base == "P2":
        return {"H": (1,) + pad}
    return {"D": (1, 0) + pad, "f": (0, 1) + pad}


def track(model, name, coords):
    """Track a rational curve by class vector; rejects non-rational classes.

    Adjunction for the class must give genus zero: K.C = -2 - C.C.
    """
    if name in model.curve_names():
        raise ModelError(f"curve name {name!r} already in use")
    coords = tuple(coords)
    if len(coords) != model.rho:
        raise ModelError("class vector has wrong length")
    self_int = model.pairing(coords, coords)
    k_c = model.pairing(model.canonical, coords)
    if k_c != -2 - self_int:
        raise ModelError(
            f"class of {name!r} is not rational: K.C = {k_c}, expected {-2 - self_int}"
        )
    return replace(model, curves=model.curves + (CurveClass(name, coords),))


def blowup_orbit(model, k, on=(), near=None, label=None):
    """Blow up an orbit of k points lying on every curve named in ``on``.

    With ``near`` set to a previous orbit label, the new points are the
    intersections of the named curves with that orbit's exceptionals (one
    per exceptional, which therefore becomes a (-2)-curve).
    """
    if k < 1:
        raise ModelError("orbit size must be at least 1")
    if label is None or not label:
        raise ModelError("blowup orbit needs a label")
    if any(o.label == label for o in model.orbits):
        raise ModelError(f"orbit label {label!r} already in use")
    for name in on:
        model.curve(name)  # existence check
    prior = None
    if near is not None:
        prior = next((o for o in model.orbits if o.label == near), None)
        if prior is None:
            raise ModelError(f"unknown orbit label {near!r}")
        if prior.size != k:
            raise ModelError(
                f"infinitely-near orbit size mismatch: {near!r} has {prior.size} points, not {k}"
            )
    old_rho = model.rho
    pad = (0,) * k
    new_names = [f"{label}{i + 1}" for i in range(k)]
    if any(n in model.curve_names() for n in new_names):
        raise ModelError(f"orbit label {label!r} collides with existing curve names")

    def extended(coords, extra):
        return tuple(coords) + tuple(extra)

    canonical = extended(model.canonical, (1,) * k)
    curves = []
    prior_names = [f"{near}{i + 1}" for i in range(k)] if prior is not None else []
    if prior is not None:
        for name in on:
            c = model.curve(name)
            for pname in prior_names:
                p = model.curve(pname)
                if model.pairing(c.coords, p.coords) < 1:
                    raise ModelError(
                        f"curve {name!r} does not pass through exceptional {pname!r}"
                    )
    for c in model.curves:
        extra = [0] * k
        if c.name in on:
            extra = [-1] * k
        elif prior is not None and c.name in prior_names:
            extra = [0] * k
            extra[prior_names.index(c.name)] = -1
        curves.append(CurveClass(c.name, extended(c.coords, extra), c.orbit))
    for i, name in enumerate(new_names):
        coords = [0] * (old_rho + k)
        coords[old_rho + i] = 1
        curves.append(CurveClass(name, tuple(coords), label))
    orbits = model.orbits + (OrbitInfo(label, k, near),)
    return replace(
        model, canonical=canonical, curves=tuple(curves), orbits=orbits
    )


def negative_curves(model):
    """Tracked curves with self-intersection <= -2, and the (-1)s separately."""
    at_most_minus_two = []
    minus_one = []
    for c in model.curves:
        s = model.pairing(c.coords, c.coords)
        if s <= -2:
            at_most_minus_two.append((c.name, s))
        elif s == -1:
            minus_one.append((c.name, s))
    return at_most_minus_two, minus_one


def assert_generating(model):
    return replace(model, generating=True)


# -- contraction -------------------------------------------------------------


@dataclass(frozen=True)
class SingularPoint:
    sing_class: SingClass
    graph: DualGraph
    curve_names: tuple[str, ...]
    alphas: tuple[Fraction, ...]

    @property
    def type_string(self):
        return display_type(self.graph)


@dataclass(frozen=True)
class SingularModel:
    resolution: SurfaceModel
    contracted: tuple[str, ...]
    singular_points: tuple[SingularPoint, ...]
    smooth_points: tuple[tuple[str, ...], ...]
    alphas: dict[str, Fraction]
    rho: int
    k2: Fraction


def _sparse_pairing_matrix(model, names):
    """Pairwise intersection numbers of the named curves, via sparse dot
    products (exceptional classes have very few nonzero coordinates)."""
    b = model.base_rank
    coords = [model.curve(n).coords for n in names]
    supports = [
        [(i, x) for i, x in enumerate(c) if x and i >= b] for c in coords
    ]
    n = len(names)
    matrix = [[0] * n for _ in range(n)]
    for p in range(n):
        for q in range(p, n):
            u, v = coords[p], coords[q]
            total = 0
            for i in range(b):
                if u[i]:
                    row = model.base_gram[i]
                    for j in range(b):
                        if v[j]:
                            total += u[i] * row[j] * v[j]
            shorter, other = supports[p], v
            if len(supports[q]) < len(shorter):
                shorter, other = supports[q], u
            for i, x in shorter:
                if other[i]:
                    total -= x * other[i]
            matrix[p][q] = matrix[q][p] = total
    return matrix


def _split_components(names, matrix):
    index = {n: i for i, n in enumerate(names)}
    remaining = list(names)
    comps = []
    while remaining:
        comp = [remaining.pop(0)]
        frontier = [comp[0]]
        while frontier:
            cur = frontier.pop()
            for name in list(remaining):
                if matrix[index[cur]][index[name]] != 0:
                    remaining.remove(name)
                    comp.append(name)
                    frontier.append(name)
        comps.append(comp)
    return comps


def contract(model, names):
    """Contract the named curves; they must form negative definite log
    terminal configurations (or configurations blowing down to smooth points).
    """
    names = list(names)
    seen = set()
    for name in names:
        model.curve(name)
        if name in seen:
            raise ModelError(f"curve {name!r} listed twice")
        seen.add(name)
    order = {c.name: i for i, c in enumerate(model.curves)}
    full_matrix = _sparse_pairing_matrix(model, names)
    full_index = {n: i for i, n in enumerate(names)}
    singular_points = []
    smooth_points = []
    alphas = {}
    for comp in sorted(
        _split_components(names, full_matrix), key=lambda c: order[c[0]]
    ):
        matrix = [
            [full_matrix[full_index[u]][full_index[v]] for v in comp] for u in comp
        ]
        simple = all(
            matrix[i][j] in (0, 1)
            for i in range(len(comp))
            for j in range(len(comp))
            if i != j
        )
        has_minus_one = any(matrix[i][i] >= -1 for i in range(len(comp)))
        if has_minus_one:
            weights = {i: matrix[i][i] for i in range(len(comp))}
            mults = {}
            for i in range(len(comp)):
                for j in range(i + 1, len(comp)):
                    if matrix[i][j]:
                        mults[frozenset((i, j))] = matrix[i][j]
            if not contracts_to_smooth_point(weights, mults):
                raise NotLogTerminalError(
                    f"component {comp} contains a curve above -2 and does not "
                    "blow down to a smooth point"
                )
            component_alphas = _component_alphas(matrix)
            smooth_points.append(tuple(comp))
        else:
            if not simple:
                raise NotLogTerminalError(
                    f"component {comp} has curves meeting with multiplicity >= 2"
                )
            graph = DualGraph.make(
                [matrix[i][i] for i in range(len(comp))],
                [
                    (i, j)
                    for i in range(len(comp))
                    for j in range(i + 1, len(comp))
                    if matrix[i][j]
                ],
            )
            cls = classify(graph)
            if cls.kind == graphmod.NOT_LOG_TERMINAL:
                from .linalg import is_negative_definite

                if not is_negative_definite(matrix):
                    raise NotContractibleError(
                        f"component {comp} is not negative definite"
                    )
                raise NotLogTerminalError(f"component {comp} is not log terminal")
            component_alphas = codiscrepancies(graph)
            singular_points.append(
                SingularPoint(cls, graph, tuple(comp), tuple(component_alphas))
            )
        for name, a in zip(comp, component_alphas):
            alphas[name] = a
    total = len(names)
    k2 = Fraction(10 - model.rho)
    for point in singular_points:
        k2 += _contribution(model, point.curve_names, point.alphas)
    for comp in smooth_points:
        k2 += _contribution(model, comp, [alphas[n] for n in comp])
    return SingularModel(
        resolution=model,
        contracted=tuple(names),
        singular_points=tuple(singular_points),
        smooth_points=tuple(smooth_points),
        alphas=alphas,
        rho=model.rho - total,
        k2=k2,
    )


def _component_alphas(matrix):
    """Solve the adjunction system directly from an intersection matrix."""
    from .linalg import UNIQUE, is_negative_definite, solve_linear

    if not is_negative_definite(matrix):
        raise NotContractibleError("component is not negative definite")
    rhs = [2 + matrix[i][i] for i in range(len(matrix))]
    outcome = solve_linear(matrix, rhs)
    assert outcome.status == UNIQUE
    return list(outcome.solution)


def _contribution(model, comp, alphas):
    """-(D#)^2 for one contracted component, via adjunction."""
    total = Fraction(0)
    for name, a in zip(comp, alphas):
        c = model.curve(name)
        total += a * model.pairing(model.canonical, c.coords)
    return total


def k2_direct(sing):
    """(K + D#)^2 computed on the resolution lattice, for cross-checking."""
    model = sing.resolution
    coords = [Fraction(x) for x in model.canonical]
    vectors = {}
    for name in sing.contracted:
        vectors[name] = model.curve(name).coords
    for name, a in sing.alphas.items():
        v = vectors[name]
        coords = [c + a * x for c, x in zip(coords, v)]
    b = model.base_rank
    total = Fraction(0)
    for i in range(b):
        for j in range(b):
            if model.base_gram[i][j]:
                total += coords[i] * model.base_gram[i][j] * coords[j]
    for i in range(b, len(coords)):
        total -= coords[i] * coords[i]
    return total


# -- del Pezzo test and reports ----------------------------------------------


@dataclass(frozen=True)
class DelPezzoVerdict:
    status: str  # "Yes" | "No" | "Inconclusive"
    witness: str | None = None


def anticanonical_pullback(sing):
    """-phi^* K as a Fraction vector on the resolution: -(K + D#)."""
    model = sing.resolution
    coords = [-Fraction(x) for x in model.canonical]
    for name, a in sing.alphas.items():
        v = model.curve(name).coords
        coords = [c - a * x for c, x in zip(coords, v)]
    return coords


def _pair_fraction(model, u, v):
    b = model.base_rank
    total = Fraction(0)
    for i in range(b):
        for j in range(b):
            if model.base_gram[i][j]:
                total += u[i] * model.base_gram[i][j] * v[j]
    for i in range(b, len(u)):
        total -= u[i] * v[i]
    return total


def is_del_pezzo(sing):
    """Ampleness test for -K on the contracted model.

    No (with a witness) whenever K^2 <= 0 or some tracked non-contracted
    curve, or base fiber/section class, pairs non-positively with -phi^*K.
    Yes needs all pairings positive *and* the model's tracked set declared
    generating for the Mori cone; otherwise the verdict is Inconclusive.
    """
    model = sing.resolution
    anti = anticanonical_pullback(sing)
    if sing.k2 <= 0:
        return DelPezzoVerdict("No", witness="K^2")
    contracted = set(sing.contracted)
    failures = []
    for c in model.curves:
        if c.name in contracted:
            continue
        value = _pair_fraction(model, anti, [Fraction(x) for x in c.coords])
        if value <= 0:
            failures.append(c.name)
    pad = (0,) * (model.rho - model.base_rank)
    base_classes = (
        {"H": (1,) + pad}
        if model.base == "P2"
        else {"D": (1, 0) + pad, "f": (0, 1) + pad}
    )
    contracted_classes = {model.curve(n).coords for n in contracted}
    for name, coords in base_classes.items():
        if coords in contracted_classes:
            continue  # the unique curve in this class was collapsed
        value = _pair_fraction(model, anti, [Fraction(x) for x in coords])
        if value <= 0:
            failures.append(f"base class {name}")
    if failures:
        return DelPezzoVerdict("No", witness=failures[0])
    if not model.generating:
        return DelPezzoVerdict("Inconclusive")
    return DelPezzoVerdict("Yes")


def rho_g(sing):
    """Rank of the invariant part of the contracted model's class lattice.

    The invariant lattice of the resolution is spanned by the base classes
    and one sum per blowup orbit; contracting removes the span of the
    contracted classes.  Needs the contracted set to be orbit-stable
    (whole orbits or invariant singletons); returns None otherwise.
    """
    model = sing.resolution
    contracted = set(sing.contracted)
    rho_y = model.base_rank + len(model.orbits)
    orbit_of = {c.name: c.orbit for c in model.curves}
    spans = []
    by_orbit = {}
    for name in contracted:
        orbit = orbit_of[name]
        if orbit is None:
            spans.append([Fraction(x) for x in model.curve(name).coords])
        else:
            by_orbit.setdefault(orbit, []).append(name)
    orbit_sizes = {o.label: o.size for o in model.orbits}
    for orbit, members in by_orbit.items():
        if len(members) != orbit_sizes[orbit]:
            return None  # contracted set is not stable under the group
        total = [Fraction(0)] * model.rho
        for name in members:
            for i, x in enumerate(model.curve(name).coords):
                total[i] += x
        spans.append(total)
    if not spans:
        return rho_y
    return rho_y - rank(spans)


@dataclass(frozen=True)
class SurfaceReport:
    rho: int
    rho_g: int | None
    k2: Fraction
    resolution_rank: int
    singular: tuple[tuple[str, DualGraph], ...]
    del_pezzo: str
    witness: str | None
    assumptions: tuple[str, ...]

    def to_json_dict(self):
        points = []
        for type_string, graph in self.singular:
            points.append(
                {
                    "type": type_string,
                    "graph": {
                        "vertices": list(graph.weights),
                        "edges": [[i + 1, j + 1] for i, j in sorted(graph.edges)],
                    },
                }
            )
        return {
            "schema": 1,
            "rho": self.rho,
            "rho_G": self.rho_g,
            "k2": str(self.k2),
            "resolution_rank": self.resolution_rank,
            "singular_points": points,
            "del_pezzo": self.del_pezzo,
            "witness": self.witness,
            "assumptions": list(self.assumptions),
        }


_BASE_ASSUMPTIONS = (
    "blown-up points are in general position along the named curves",
    "tracked curves are rational and reduced",
)


def invariants_report(sing, extra_assumptions=()):
    verdict = is_del_pezzo(sing)
    assumptions = list(_BASE_ASSUMPTIONS)
    if sing.resolution.generating:
        assumptions.append(
            "tracked curves, exceptionals and base classes generate the Mori cone"
        )
    assumptions.extend(extra_assumptions)
    return SurfaceReport(
        rho=sing.rho,
        rho_g=rho_g(sing),
        k2=sing.k2,
        resolution_rank=sing.resolution.rho,
        singular=tuple(
            (p.type_string, p.graph) for p in sing.singular_points
        ),
        del_pezzo=verdict.status,
        witness=verdict.witness,
        assumptions=tuple(assumptions),
    )
