"""Planar unit-distance realisations of the grid configurations.

The base drawing ``G0`` puts the 3 row-lines and 3 column-lines of the 3x3
grid on a regular hexagon of circumradius ``h`` and places each grid point at
an intersection of the two unit circles around its row and column.  Three
copies translated by a unit vector star, together with the untranslated grid
points (now acting as the pencil lines), give a unit-distance drawing of the
Levi graph of the 3x3x3 grid.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

import numpy as np

from .graph import HOLLOW, SOLID, Graph, IncidenceConfiguration, gray_graph, grid2_configuration, grid3_configuration, levi_graph
from .symmetry import Permutation, find_isomorphism, is_automorphism

COLORS = ("b", "g", "r")
NO_COLOR = "none"
DEFAULT_TOL = 1e-9
DEFAULT_SEP = 1e-6
TWO_PI_3 = 2 * math.pi / 3
SQRT3_2 = math.sqrt(3) / 2

# local ids inside one copy of G0, matching levi_graph(grid2_configuration(3))
G0_POINTS = [(r, c) for r in range(3) for c in range(3)]
G0_ROW = [9 + r for r in range(3)]
G0_COL = [12 + c for c in range(3)]


class DegenerateParameters(ValueError):
    """Construction parameters that do not yield a valid drawing.

    ``reason`` is ``"no_intersection"`` or ``"coincident"``; ``pair`` and
    ``separation`` identify the colliding vertices for the latter.
    """

    def __init__(self, reason, message, pair=None, separation=None):
        super().__init__(f"{reason}: {message}")
        self.reason = reason
        self.pair = pair
        self.separation = separation


@dataclass(frozen=True)
class ConstructionParams:
    h: float
    theta: float = 0.0

    def check(self):
        if not (0.0 < self.h < 1.0):
            raise DegenerateParameters(
                "no_intersection",
                f"h={self.h!r} outside (0, 1): antipodal unit circles at distance {2 * self.h!r} "
                "do not cross transversally",
            )


@dataclass(frozen=True)
class VectorStar:
    theta: float
    vectors: tuple

    def total(self):
        return tuple(np.sum(np.array(self.vectors), axis=0))


@dataclass(eq=False)
class Embedding:
    """Vertex coordinates for a graph whose edges should all have length ``unit``."""

    coords: np.ndarray
    graph: Graph
    colors: Optional[tuple] = None
    params: Optional[ConstructionParams] = None
    unit: float = field(default=1.0, init=False)

    def __post_init__(self):
        coords = np.array(self.coords, dtype=float).reshape(-1, 2)
        if coords.shape[0] != self.graph.n:
            raise ValueError("coords must be given for every vertex")
        coords.setflags(write=False)
        self.coords = coords
        if self.colors is None:
            self.colors = (NO_COLOR,) * self.graph.n
        self.colors = tuple(self.colors)

    @property
    def n(self):
        return self.graph.n

    def edge_lengths(self):
        if not self.graph.edges:
            return np.zeros(0)
        e = np.array(self.graph.sorted_edges())
        return np.hypot(*(self.coords[e[:, 0]] - self.coords[e[:, 1]]).T)

    def transformed(self, matrix=None, shift=(0.0, 0.0)):
        """Copy with coordinates mapped by ``x -> matrix @ x + shift``."""
        m = np.eye(2) if matrix is None else np.asarray(matrix, dtype=float)
        return Embedding(self.coords @ m.T + np.asarray(shift), self.graph, self.colors, self.params)


@dataclass(frozen=True)
class ValidationReport:
    max_edge_length_error: float
    min_vertex_separation: float
    coincident_pairs: tuple
    accidental_unit_pairs: tuple
    symmetry_order: int
    induced_symmetry_permutation: Optional[Permutation]
    isomorphic_to_gray: bool

    def metrics(self):
        return {
            "max_edge_length_error": self.max_edge_length_error,
            "min_vertex_separation": self.min_vertex_separation,
            "coincident_pairs": len(self.coincident_pairs),
            "accidental_unit_pairs": len(self.accidental_unit_pairs),
            "symmetry_order": self.symmetry_order,
        }


@dataclass(frozen=True)
class PointCircleRealization:
    circle_centers: dict
    points: dict
    incidences: frozenset
    required: frozenset
    accidental: tuple
    missing: tuple
    max_required_error: float
    circle_radius: float = 1.0

    def configuration(self) -> IncidenceConfiguration:
        """The incidences along graph edges, as a point/circle configuration."""
        return IncidenceConfiguration(
            tuple(sorted(self.points)), tuple(sorted(self.circle_centers)),
            self.incidences & self.required,
        )

    def is_gray_configuration(self) -> bool:
        cert = find_isomorphism(levi_graph(self.configuration()),
                                levi_graph(grid3_configuration(3)), respect_roles=True)
        return cert is not None and cert.verified

    def min_degrees(self):
        pdeg = dict.fromkeys(self.points, 0)
        cdeg = dict.fromkeys(self.circle_centers, 0)
        for p, c in self.incidences:
            pdeg[p] += 1
            cdeg[c] += 1
        return min(pdeg.values(), default=0), min(cdeg.values(), default=0)


def unit_circle_intersections(c1, c2):
    """Both crossing points of the unit circles about c1 and c2, left of c1->c2 first.

    Returns None when the circles are tangent, disjoint or concentric.
    """
    c1 = np.asarray(c1, dtype=float)
    c2 = np.asarray(c2, dtype=float)
    delta = c2 - c1
    d = math.hypot(*delta)
    if d == 0.0 or d >= 2.0:
        return None
    half = math.sqrt(1.0 - (d / 2.0) ** 2)
    mid = (c1 + c2) / 2.0
    left = np.array([-delta[1], delta[0]]) / d
    return mid + half * left, mid - half * left


def _polar(radius, angle):
    return np.array([radius * math.cos(angle), radius * math.sin(angle)])


def _min_separation(coords):
    n = len(coords)
    if n < 2:
        return math.inf, None
    d = np.hypot(*(coords[:, None, :] - coords[None, :, :]).transpose(2, 0, 1))
    d[np.tril_indices(n)] = np.inf
    k = int(np.argmin(d))
    i, j = divmod(k, n)
    return float(d[i, j]), (i, j)


def _g0_coords(h):
    coords = np.zeros((15, 2))
    for r in range(3):
        coords[G0_ROW[r]] = _polar(h, math.radians(90 + 120 * r))
    for c in range(3):
        coords[G0_COL[c]] = _polar(h, math.radians(30 + 120 * c))
    for k, (r, c) in enumerate(G0_POINTS):
        pts = unit_circle_intersections(coords[G0_ROW[r]], coords[G0_COL[c]])
        if pts is None:
            raise DegenerateParameters("no_intersection", f"circles for point ({r}, {c}) do not cross")
        coords[k] = pts[0]
    return coords


def _check_coincidence(coords, sep_threshold):
    sep, pair = _min_separation(coords)
    if pair is not None and sep < sep_threshold:
        raise DegenerateParameters(
            "coincident", f"vertices {pair[0]} and {pair[1]} are {sep:.3e} apart",
            pair=pair, separation=sep,
        )


def build_g0(h: float, sep_threshold: float = DEFAULT_SEP) -> Embedding:
    """Unit-distance drawing of the Levi graph of the 3x3 grid.

    Rows sit at 90, 210 and 330 degrees on the hexagon and columns at 30, 150
    and 270; each grid point takes the circle crossing to the left of the
    directed segment row -> column, which keeps the drawing 3-fold symmetric.
    """
    ConstructionParams(h).check()
    coords = _g0_coords(h)
    _check_coincidence(coords, sep_threshold)
    return Embedding(coords, levi_graph(grid2_configuration(3)), params=ConstructionParams(h, 0.0))


def vector_star(theta: float) -> VectorStar:
    """Unit vectors at theta, theta + 120 and theta + 240 degrees."""
    # rotate the first vector in closed form so the sum cancels to rounding
    c, s = math.cos(theta), math.sin(theta)
    hc, hs = c / 2.0, s / 2.0
    qc, qs = c * SQRT3_2, s * SQRT3_2
    vecs = ((c, s), (-hc - qs, qc - hs), (-hc + qs, -qc - hs))
    return VectorStar(theta, vecs)


def assembled_graph() -> Graph:
    """The combinatorics of :func:`assemble`, independent of the parameters.

    Copy k (0, 1, 2 = b, g, r) of G0 occupies ids ``15k .. 15k + 14`` in G0's
    local order; grid point (r, c) of the untranslated G0 becomes hollow
    vertex ``45 + 3r + c``.
    """
    base = levi_graph(grid2_configuration(3))
    edges = set()
    roles = []
    for k in range(3):
        edges |= {(15 * k + a, 15 * k + b) for a, b in base.edges}
        roles.extend(base.roles)
    for i in range(9):
        roles.append(HOLLOW)
        for k in range(3):
            edges.add((15 * k + i, 45 + i))
    return Graph(54, frozenset(edges), tuple(roles))


_assembled = lru_cache(maxsize=None)(assembled_graph)


def construct_coords(params: ConstructionParams):
    """Raw 54x2 coordinates of the assembled drawing, without collision checks."""
    params.check()
    g0 = _g0_coords(params.h)
    star = np.array(vector_star(params.theta).vectors)
    coords = np.vstack([g0 + star[k] for k in range(3)] + [g0[:9]])
    return coords


def assemble(params, theta=None, sep_threshold: float = DEFAULT_SEP) -> Embedding:
    """The 54-vertex, 81-edge unit-distance drawing for ``(h, theta)``.

    Accepts a :class:`ConstructionParams` or ``h`` and ``theta`` separately.
    """
    if not isinstance(params, ConstructionParams):
        params = ConstructionParams(float(params), float(theta or 0.0))
    coords = construct_coords(params)
    _check_coincidence(coords, sep_threshold)
    colors = tuple(COLORS[k] for k in range(3) for _ in range(15)) + (NO_COLOR,) * 9
    return Embedding(coords, _assembled(), colors, params)


def extract_graph(e: Embedding) -> Graph:
    return e.graph


def _rotation_matching(coords, center, angle, tol):
    """Vertex permutation induced by rotating about ``center``, or None."""
    c, s = math.cos(angle), math.sin(angle)
    rel = coords - center
    rotated = rel @ np.array([[c, -s], [s, c]]).T
    d = np.hypot(*(rotated[:, None, :] - rel[None, :, :]).transpose(2, 0, 1))
    image = np.argmin(d, axis=1)
    if np.any(d[np.arange(len(coords)), image] > tol):
        return None
    if len(set(image.tolist())) != len(coords):
        return None
    return Permutation(tuple(image.tolist()))


def rotation_permutation(e: Embedding, m: int, tol: float = DEFAULT_TOL):
    """Permutation induced by rotating e through 360/m degrees about its centroid."""
    if e.n == 0:
        return Permutation(())
    center = e.coords.mean(axis=0)
    return _rotation_matching(e.coords, center, 2 * math.pi / m, tol)


def detect_symmetry(e: Embedding, tol: float = DEFAULT_TOL):
    """Largest m whose 360/m rotation about the centroid is a graph symmetry.

    Returns ``(m, permutation)``; ``(1, identity)`` when no rotation works.
    """
    n = e.n
    if n == 0:
        return 1, Permutation(())
    center = e.coords.mean(axis=0)
    at_center = int(np.sum(np.hypot(*(e.coords - center).T) <= tol))
    moving = n - at_center
    for m in range(n, 1, -1):
        # off-centre orbits of a 360/m rotation all have exactly m points
        if moving % m:
            continue
        perm = _rotation_matching(e.coords, center, 2 * math.pi / m, tol)
        if perm is not None and is_automorphism(e.graph, perm):
            return m, perm
    return 1, Permutation.identity(n)


@lru_cache(maxsize=64)
def _is_gray(n, edges):
    if n != 54:
        return False
    cert = find_isomorphism(Graph(n, edges), gray_graph())
    return cert is not None and cert.verified


def validate(e: Embedding, tol: float = DEFAULT_TOL, sep_threshold: float = DEFAULT_SEP) -> ValidationReport:
    """Measure an embedding against the unit-distance and symmetry requirements.

    Never raises on a bad drawing; every failure shows up in the report.
    """
    n = e.n
    lengths = e.edge_lengths()
    max_err = float(np.max(np.abs(lengths - 1.0))) if len(lengths) else 0.0
    coincident, accidental = [], []
    min_sep = math.inf
    if n >= 2:
        d = np.hypot(*(e.coords[:, None, :] - e.coords[None, :, :]).transpose(2, 0, 1))
        iu, ju = np.triu_indices(n, 1)
        dd = d[iu, ju]
        min_sep = float(dd.min())
        for k in np.nonzero(dd < sep_threshold)[0]:
            coincident.append((int(iu[k]), int(ju[k]), float(dd[k])))
        adj = e.graph.adjacency_matrix[iu, ju].astype(bool)
        for k in np.nonzero((np.abs(dd - 1.0) <= tol) & ~adj)[0]:
            accidental.append((int(iu[k]), int(ju[k])))
    order, perm = detect_symmetry(e, tol)
    return ValidationReport(
        max_edge_length_error=max_err,
        min_vertex_separation=min_sep,
        coincident_pairs=tuple(coincident),
        accidental_unit_pairs=tuple(accidental),
        symmetry_order=order,
        induced_symmetry_permutation=perm,
        isomorphic_to_gray=_is_gray(n, e.graph.edges),
    )


def point_circle_realization(e: Embedding, tol: float = DEFAULT_TOL) -> PointCircleRealization:
    """Unit circles about the hollow vertices together with the solid vertices."""
    roles = e.graph.roles
    if e.n != 54 or roles is None or roles.count(SOLID) != 27 or roles.count(HOLLOW) != 27:
        raise ValueError("point-circle realisation needs a 27 solid + 27 hollow embedding")
    solids = [v for v in range(e.n) if roles[v] == SOLID]
    hollows = [v for v in range(e.n) if roles[v] == HOLLOW]
    pts = e.coords[solids]
    ctr = e.coords[hollows]
    dist = np.hypot(*(pts[:, None, :] - ctr[None, :, :]).transpose(2, 0, 1))
    err = np.abs(dist - 1.0)
    incidences = frozenset(
        (solids[i], hollows[j]) for i, j in zip(*np.nonzero(err <= tol))
    )
    required = frozenset((a, b) if roles[a] == SOLID else (b, a) for a, b in e.graph.edges)
    pos_s = {v: i for i, v in enumerate(solids)}
    pos_h = {v: j for j, v in enumerate(hollows)}
    req_err = max((err[pos_s[p], pos_h[c]] for p, c in required), default=0.0)
    return PointCircleRealization(
        circle_centers={v: tuple(e.coords[v]) for v in hollows},
        points={v: tuple(e.coords[v]) for v in solids},
        incidences=incidences,
        required=required,
        accidental=tuple(sorted(incidences - required)),
        missing=tuple(sorted(required - incidences)),
        max_required_error=float(req_err),
    )
