"""Feasibility map of the (h, theta) parameter plane."""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .embedding import (
    DEFAULT_SEP, DEFAULT_TOL, TWO_PI_3, ConstructionParams, DegenerateParameters,
    Embedding, _assembled, construct_coords, rotation_permutation, validate,
)
from .symmetry import is_automorphism, is_semiregular

STATUSES = ("valid", "no_intersection", "coincident", "asymmetric", "not_gray")


@dataclass(frozen=True)
class SweepPoint:
    h: float
    theta: float
    status: str
    min_separation: float
    accidental_pairs: int

    @property
    def valid(self):
        return self.status == "valid"


@dataclass(frozen=True)
class FeasibilityMap:
    """Grid of classified parameter points in h-major order.

    theta is only scanned over one period of the vector star, [0, 120) degrees.
    """

    points: tuple
    steps_h: int
    steps_theta: int
    h_range: tuple
    theta_range: tuple
    theta_period: float = TWO_PI_3

    def statuses(self):
        return [p.status for p in self.points]

    def grid(self):
        return np.array([[self.points[i * self.steps_theta + j].status
                          for j in range(self.steps_theta)] for i in range(self.steps_h)])


def classify(h: float, theta: float, tol: float = DEFAULT_TOL,
             sep_threshold: float = DEFAULT_SEP) -> SweepPoint:
    """Label one parameter point by its first failing check.

    Checks run in a fixed order: circle intersection (including unit edge
    lengths), vertex coincidence, 3-fold rotational symmetry, isomorphism
    with the Gray graph.
    """
    params = ConstructionParams(float(h), float(theta))
    try:
        coords = construct_coords(params)
    except DegenerateParameters:
        return SweepPoint(params.h, params.theta, "no_intersection", math.nan, 0)
    e = Embedding(coords, _assembled(), params=params)
    report = validate(e, tol, sep_threshold)
    sep = report.min_vertex_separation
    acc = len(report.accidental_unit_pairs)
    if report.max_edge_length_error > tol:
        status = "no_intersection"
    elif report.coincident_pairs:
        status = "coincident"
    elif not _has_z3(e, tol):
        status = "asymmetric"
    elif not report.isomorphic_to_gray:
        status = "not_gray"
    else:
        status = "valid"
    return SweepPoint(params.h, params.theta, status, sep, acc)


def _has_z3(e, tol):
    perm = rotation_permutation(e, 3, tol)
    return perm is not None and is_semiregular(perm, 3) and is_automorphism(e.graph, perm)


def grid_values(h_range, theta_range, steps_h, steps_theta):
    """h samples include both ends; theta samples omit the upper end (periodic)."""
    hs = np.linspace(h_range[0], h_range[1], steps_h) if steps_h > 1 else np.array([h_range[0]] * steps_h)
    ts = theta_range[0] + (theta_range[1] - theta_range[0]) * np.arange(steps_theta) / max(steps_theta, 1)
    return [float(x) for x in hs], [float(x) for x in ts]


def _classify_args(args):
    return classify(*args)


def sweep(h_range=(0.1, 0.95), theta_range=(0.0, TWO_PI_3), steps_h=32, steps_theta=32,
          tol=DEFAULT_TOL, sep_threshold=DEFAULT_SEP, workers=1) -> FeasibilityMap:
    hs, ts = grid_values(h_range, theta_range, steps_h, steps_theta)
    jobs = [(h, t, tol, sep_threshold) for h in hs for t in ts]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            points = list(pool.map(_classify_args, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        points = [classify(*job) for job in jobs]
    return FeasibilityMap(tuple(points), steps_h, steps_theta,
                          (float(h_range[0]), float(h_range[1])),
                          (float(theta_range[0]), float(theta_range[1])))
