"""Weighted dual graphs of exceptional curve configurations.

A DualGraph records smooth rational curves over a singular point: vertices
carry self-intersection numbers, edges mean transverse intersection.  This
module resolves cyclic quotient singularities by Hirzebruch-Jung continued
fractions, solves the adjunction system for codiscrepancies, classifies
configurations (Du Val / single-curve cyclic / other log terminal), computes
their contributions to K^2, simulates blowdowns, and exhaustively enumerates
all small log terminal graphs so that the two coefficient bounds used by the
classification (max codiscrepancy below 2/5 forces Du Val or a single (-3),
and every smooth-point attachment pairs to at least 2/11) can be checked by
brute force.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .linalg import UNIQUE, is_negative_definite, solve_linear


class NotContractibleError(Exception):
    """The configuration's intersection matrix is not negative definite."""


class NotLogTerminalError(Exception):
    """The configuration does not contract to a log terminal point."""


@dataclass(frozen=True)
class DualGraph:
    """Simple weighted graph: weights[i] is the self-intersection of curve i."""

    weights: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        n = len(self.weights)
        for i, j in self.edges:
            if not (0 <= i < j < n):
                raise ValueError("edges must be pairs (i, j) with i < j in range")
        if any(w > -1 for w in self.weights):
            raise ValueError("vertex self-intersections must be at most -1")

    @classmethod
    def make(cls, weights, edges=()):
        return cls(tuple(weights), frozenset(tuple(sorted(e)) for e in edges))

    @classmethod
    def chain(cls, weights):
        weights = tuple(weights)
        return cls.make(weights, [(i, i + 1) for i in range(len(weights) - 1)])

    @property
    def size(self):
        return len(self.weights)

    def adjacency(self):
        adj = {i: set() for i in range(self.size)}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def intersection_matrix(self):
        n = self.size
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            m[i][i] = self.weights[i]
        for i, j in self.edges:
            m[i][j] = m[j][i] = 1
        return m

    def is_connected(self):
        if self.size == 0:
            return True
        adj = self.adjacency()
        seen = {0}
        frontier = [0]
        while frontier:
            v = frontier.pop()
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    frontier.append(u)
        return len(seen) == self.size

    def is_tree(self):
        return self.is_connected() and len(self.edges) == self.size - 1


def parse_graph(text):
    """Parse the two-line graph format: ``vertices: w1 w2 ...`` / ``edges: i-j, ...``.

    Edges are 1-based; the edges line may be omitted for a single vertex.
    """
    weights = None
    edges = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vertices:"):
            weights = [int(tok) for tok in line[len("vertices:") :].split()]
        elif line.startswith("edges:"):
            body = line[len("edges:") :].strip()
            if body:
                for pair in body.split(","):
                    a, b = pair.strip().split("-")
                    edges.append((int(a) - 1, int(b) - 1))
        else:
            raise ValueError(f"unrecognized line in graph file: {raw!r}")
    if weights is None:
        raise ValueError("graph file is missing a 'vertices:' line")
    return DualGraph.make(weights, edges)


def format_graph(graph):
    lines = ["vertices: " + " ".join(str(w) for w in graph.weights)]
    edge_text = ", ".join(f"{i + 1}-{j + 1}" for i, j in sorted(graph.edges))
    lines.append("edges: " + edge_text)
    return "\n".join(lines) + "\n"


# -- cyclic quotient singularities ------------------------------------------


@dataclass(frozen=True)
class QuotientType:
    """Cyclic quotient singularity of type 1/r(1, a)."""

    r: int
    a: int

    def __post_init__(self):
        if self.r < 2 or not (1 <= self.a < self.r):
            raise ValueError("need r >= 2 and 1 <= a < r")
        if gcd(self.r, self.a) != 1:
            raise ValueError("need gcd(a, r) = 1")

    def __str__(self):
        return f"1/{self.r}(1,{self.a})"


def hj_expand(quotient):
    """Hirzebruch-Jung expansion r/a = b1 - 1/(b2 - 1/(... - 1/bk)), each bi >= 2.

    The chain of curves with self-intersections -b1, ..., -bk is the minimal
    resolution of 1/r(1, a).
    """
    r, a = quotient.r, quotient.a
    out = []
    while a > 0:
        b = -(-r // a)  # ceil(r / a)
        out.append(b)
        r, a = a, b * a - r
    return out


def hj_chain_graph(quotient):
    return DualGraph.chain([-b for b in hj_expand(quotient)])


def chain_quotient_type(weights):
    """Reconstruct 1/r(1,a) from a chain's weights (the inverse of hj_expand)."""
    r, a = 1, 0
    for b in reversed([-w for w in weights]):
        r, a = b * r - a, r
    return QuotientType(r, a)


# -- codiscrepancies and classification --------------------------------------


def codiscrepancies(graph):
    """Exact coefficients making K + sum(alpha_i D_i) pair to zero with every D_j.

    Adjunction for smooth rational curves gives K.D_j = -2 - D_j^2, so the
    system is M alpha = b with M the intersection matrix and b_j = 2 + D_j^2.
    """
    matrix = graph.intersection_matrix()
    if not is_negative_definite(matrix):
        raise NotContractibleError("intersection matrix is not negative definite")
    rhs = [2 + w for w in graph.weights]
    outcome = solve_linear(matrix, rhs)
    assert outcome.status == UNIQUE
    return outcome.solution


def k2_contribution(graph):
    """What contracting this configuration adds to K^2.

    Equals -(D#)^2 where D# is the codiscrepancy divisor; computed as
    sum_j alpha_j * (K.D_j) and cross-checked against -alpha^T M alpha
    in the test suite.
    """
    alphas = codiscrepancies(graph)
    return sum(
        (a * (-2 - w) for a, w in zip(alphas, graph.weights)), Fraction(0)
    )


def different_degree(local_indices):
    """Degree of the different for a curve through cyclic points of given index."""
    total = Fraction(0)
    for m in local_indices:
        if m < 2:
            raise ValueError("local indices must be at least 2")
        total += Fraction(m - 1, m)
    return total


DU_VAL = "du_val"
CYCLIC_ONE_ONE = "cyclic_one_one"
OTHER_LOG_TERMINAL = "other_log_terminal"
NOT_LOG_TERMINAL = "not_log_terminal"


@dataclass(frozen=True)
class SingClass:
    kind: str
    detail: str = ""

    def __str__(self):
        return self.detail or self.kind


def _ade_detail(graph):
    """Name the ADE shape of an all-(-2) tree, or None if it is not one."""
    n = graph.size
    adj = graph.adjacency()
    degrees = sorted(len(adj[v]) for v in adj)
    if not graph.is_tree() or (degrees and degrees[-1] > 3):
        return None
    forks = [v for v in adj if len(adj[v]) == 3]
    if not forks:
        return f"A{n}"
    if len(forks) > 1:
        return None
    fork = forks[0]
    arms = []
    for start in adj[fork]:
        length = 1
        prev, cur = fork, start
        while True:
            nxt = [u for u in adj[cur] if u != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return f"D{n}"
    if arms == [1, 2, 2]:
        return "E6"
    if arms == [1, 2, 3]:
        return "E7"
    if arms == [1, 2, 4]:
        return "E8"
    return None


def classify(graph):
    """Sort a configuration into Du Val / cyclic 1/r(1,1) / other log terminal.

    Anything with a -1 vertex, a cycle, a vertex of valence four, two forks,
    or a codiscrepancy reaching 1 is flagged not-log-terminal: the shapes of
    minimal resolutions of quotient singularities are chains and one fork.
    """
    if graph.size == 0:
        raise ValueError("empty graph")
    if any(w == -1 for w in graph.weights):
        return SingClass(NOT_LOG_TERMINAL)
    if not graph.is_tree():
        return SingClass(NOT_LOG_TERMINAL)
    adj = graph.adjacency()
    valences = [len(adj[v]) for v in adj]
    if max(valences) > 3 or sum(1 for v in valences if v == 3) > 1:
        return SingClass(NOT_LOG_TERMINAL)
    if not is_negative_definite(graph.intersection_matrix()):
        return SingClass(NOT_LOG_TERMINAL)
    if all(w == -2 for w in graph.weights):
        detail = _ade_detail(graph)
        if detail is None:
            return SingClass(NOT_LOG_TERMINAL)
        return SingClass(DU_VAL, detail)
    if graph.size == 1:
        return SingClass(CYCLIC_ONE_ONE, f"1/{-graph.weights[0]}(1,1)")
    alphas = codiscrepancies(graph)
    if any(a >= 1 for a in alphas):
        return SingClass(NOT_LOG_TERMINAL)
    if max(valences) <= 2:
        ends = [v for v in adj if len(adj[v]) <= 1]
        order = _chain_order(graph)
        quotient = chain_quotient_type([graph.weights[v] for v in order])
        return SingClass(OTHER_LOG_TERMINAL, str(quotient))
    return SingClass(OTHER_LOG_TERMINAL, "fork" + str(tuple(sorted(graph.weights))))


def _chain_order(graph):
    """Vertex order along a chain, starting from the lexicographically first end."""
    if graph.size == 1:
        return [0]
    adj = graph.adjacency()
    start = min(v for v in adj if len(adj[v]) == 1)
    order = [start]
    prev, cur = None, start
    while len(order) < graph.size:
        nxt = [u for u in adj[cur] if u != prev]
        prev, cur = cur, nxt[0]
        order.append(cur)
    return order


def display_type(graph):
    """Singularity name used in reports.

    Single vertices print as cyclic quotients (a lone -2 curve is 1/2(1,1));
    longer all-(-2) chains keep their Du Val names.
    """
    if graph.size == 1:
        return f"1/{-graph.weights[0]}(1,1)"
    cls = classify(graph)
    return str(cls)


# -- blowdown simulation ------------------------------------------------------


def _blowdown_state(weights, mults):
    return (tuple(sorted(weights.items())), tuple(sorted(mults.items())))


def contracts_to_smooth_point(weights, mults, singular=frozenset()):
    """Can the whole configuration be blown down to nothing, one (-1) at a time?

    weights: vertex id -> self-intersection; mults: frozenset({u, v}) -> how
    many times the two curves meet.  Deleting a (-1) vertex raises each
    neighbor's self-intersection by m^2 (m the contact multiplicity), makes
    its neighbors pairwise meet, and a neighbor with contact m >= 2 acquires
    a singular point, after which it can no longer be blown down.  Reaching
    the empty configuration is success; the search tries every order.
    """
    memo = {}

    def go(weights, mults, singular):
        if not weights:
            return True
        key = (frozenset(weights), frozenset(singular))
        if key in memo:
            return memo[key]
        result = False
        for v in sorted(weights):
            if weights[v] != -1 or v in singular:
                continue
            neighbors = []
            for pair, m in mults.items():
                if v in pair:
                    (other,) = pair - {v}
                    neighbors.append((other, m))
            new_weights = {u: w for u, w in weights.items() if u != v}
            new_singular = set(singular)
            for u, m in neighbors:
                new_weights[u] += m * m
                if m >= 2:
                    new_singular.add(u)
            new_mults = {p: m for p, m in mults.items() if v not in p}
            for (u1, m1), (u2, m2) in itertools.combinations(neighbors, 2):
                pair = frozenset({u1, u2})
                new_mults[pair] = new_mults.get(pair, 0) + m1 * m2
            if go(new_weights, new_mults, frozenset(new_singular)):
                result = True
                break
        memo[key] = result
        return result

    return go(dict(weights), dict(mults), frozenset(singular))


def graph_with_attachment(graph, vertex):
    """Weights/multiplicities of the configuration graph + one (-1) curve at vertex."""
    n = graph.size
    weights = {i: w for i, w in enumerate(graph.weights)}
    weights[n] = -1
    mults = {frozenset(e): 1 for e in graph.edges}
    mults[frozenset({vertex, n})] = 1
    return weights, mults


# -- exhaustive enumeration ---------------------------------------------------


def _canonical_encoding(weights, adj, root, parent):
    children = sorted(
        _canonical_encoding(weights, adj, child, root)
        for child in adj[root]
        if child != parent
    )
    return (weights[root], tuple(children))


def _tree_centers(n, adj):
    if n <= 2:
        return list(range(n))
    degree = {v: len(adj[v]) for v in adj}
    current = [v for v in adj if degree[v] == 1]
    removed = 0
    while n - removed > 2:
        removed += len(current)
        fresh = []
        for leaf in current:
            for u in adj[leaf]:
                degree[u] -= 1
                if degree[u] == 1:
                    fresh.append(u)
            degree[leaf] = 0
        current = fresh
    return current


def canonical_key(graph):
    """Canonical form of a weighted tree (rooted encoding at the centroid)."""
    adj = graph.adjacency()
    centers = _tree_centers(graph.size, adj)
    return min(
        _canonical_encoding(graph.weights, adj, c, None) for c in centers
    )


def _canonical_graph(graph):
    """Relabel a weighted tree into its canonical numbering."""
    adj = graph.adjacency()
    centers = _tree_centers(graph.size, adj)
    best = min(
        (_canonical_encoding(graph.weights, adj, c, None), c) for c in centers
    )
    root = best[1]
    order = []
    edges = []

    def walk(v, parent):
        order.append(v)
        me = len(order) - 1
        children = sorted(
            (u for u in adj[v] if u != parent),
            key=lambda u: _canonical_encoding(graph.weights, adj, u, v),
        )
        for u in children:
            child_index = len(order)
            edges.append((me, child_index))
            walk(u, v)

    walk(root, None)
    weights = tuple(graph.weights[v] for v in order)
    return DualGraph.make(weights, edges)


@lru_cache(maxsize=None)
def _tree_shapes(n):
    """Edge sets of all unlabeled trees on n vertices (one representative each)."""
    if n == 1:
        return ((),)
    import heapq

    seen = {}
    for pruefer in itertools.product(range(n), repeat=n - 2):
        degs = [1] * n
        for v in pruefer:
            degs[v] += 1
        edges = []
        heap = [v for v in range(n) if degs[v] == 1]
        heapq.heapify(heap)
        for v in pruefer:
            leaf = heapq.heappop(heap)
            edges.append(tuple(sorted((leaf, v))))
            degs[leaf] -= 1
            degs[v] -= 1
            if degs[v] == 1:
                heapq.heappush(heap, v)
        last = [v for v in range(n) if degs[v] == 1]
        edges.append(tuple(sorted((last[0], last[1]))))
        shape = DualGraph.make((-2,) * n, edges)
        seen.setdefault(canonical_key(shape), tuple(sorted(edges)))
    return tuple(sorted(seen.values()))


def _tree_orders(n, edges):
    """Parent array and a root-first visit order for a tree given by edges."""
    adj = {v: [] for v in range(n)}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    parent = [-1] * n
    order = [0]
    seen = {0}
    for v in order:
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                parent[u] = v
                order.append(u)
    return parent, order


def _tree_alphas(weights, parent, order):
    """Codiscrepancies of a weighted tree by leaf-first elimination.

    Returns None unless the intersection matrix is negative definite and all
    coefficients are below 1 (the log terminal window).  Eliminating leaves
    inward is Gaussian elimination in a pivot order adapted to the tree, so
    negative definiteness is exactly "every pivot stays negative".
    """
    n = len(weights)
    diag = [Fraction(w) for w in weights]
    rhs = [Fraction(2 + w) for w in weights]
    for v in reversed(order):
        if diag[v] >= 0:
            return None
        p = parent[v]
        if p >= 0:
            diag[p] -= Fraction(1) / diag[v]
            rhs[p] -= rhs[v] / diag[v]
    alphas = [Fraction(0)] * n
    for v in order:
        p = parent[v]
        value = rhs[v] if p < 0 else rhs[v] - alphas[p]
        alphas[v] = value / diag[v]
        if alphas[v] >= 1:
            return None
    return tuple(alphas)


@lru_cache(maxsize=None)
def _enumerate_window(max_vertices, min_weight):
    if max_vertices > 8 or min_weight < -8:
        raise ValueError("enumeration window capped at 8 vertices and weight -8")
    found = {}
    weight_range = range(min_weight, -1)  # min_weight .. -2
    for n in range(1, max_vertices + 1):
        for edges in _tree_shapes(n):
            parent, order = _tree_orders(n, edges)
            for weights in itertools.product(weight_range, repeat=n):
                if _tree_alphas(weights, parent, order) is None:
                    continue
                graph = DualGraph.make(weights, edges)
                key = canonical_key(graph)
                if key not in found:
                    found[key] = _canonical_graph(graph)
    return tuple(
        found[key]
        for key in sorted(
            found, key=lambda k: (len(found[k].weights), k)
        )
    )


def enumerate_log_terminal(max_vertices, min_weight):
    """Every connected tree with weights in [min_weight, -2], negative definite
    intersection matrix, and all codiscrepancies below 1, up to isomorphism.

    Deterministic order: by vertex count, then by canonical form.
    """
    return iter(_enumerate_window(max_vertices, min_weight))


# -- the two coefficient audits ----------------------------------------------


@dataclass(frozen=True)
class BoundAuditResult:
    holds: bool
    counterexample: DualGraph | None = None


def audit_small_codiscrepancy_bound(max_vertices, min_weight):
    """Check: max codiscrepancy < 2/5 forces Du Val or a single (-3) vertex."""
    threshold = Fraction(2, 5)
    for graph in enumerate_log_terminal(max_vertices, min_weight):
        alphas = codiscrepancies(graph)
        if max(alphas) >= threshold:
            continue
        cls = classify(graph)
        if cls.kind == DU_VAL:
            continue
        if graph.size == 1 and graph.weights[0] == -3:
            continue
        return BoundAuditResult(False, graph)
    return BoundAuditResult(True)


@dataclass(frozen=True)
class PairingAuditResult:
    minimum: Fraction
    graph: DualGraph
    vertex: int
    attachments_checked: int


def audit_attachment_pairing(max_vertices, min_weight):
    """Minimum codiscrepancy pairing over all smooth-point attachments.

    For every enumerated non-Du-Val graph and every vertex whose configuration
    graph + (-1)-curve blows down to nothing, the pairing of the (-1) curve
    with the codiscrepancy divisor is the codiscrepancy at the attachment
    vertex.  Returns the minimum (the classification needs it to be >= 2/11).
    """
    best = None
    checked = 0
    for graph in enumerate_log_terminal(max_vertices, min_weight):
        cls = classify(graph)
        if cls.kind == DU_VAL:
            continue
        alphas = codiscrepancies(graph)
        for vertex in range(graph.size):
            weights, mults = graph_with_attachment(graph, vertex)
            if not contracts_to_smooth_point(weights, mults):
                continue
            checked += 1
            pairing = alphas[vertex]
            if best is None or pairing < best[0]:
                best = (pairing, graph, vertex)
    if best is None:
        raise ValueError("no valid attachment in the enumeration window")
    return PairingAuditResult(best[0], best[1], best[2], checked)
