"""Laplacian spectra via a dense cyclic Jacobi eigensolver.

The solver rotates every off-diagonal pair per sweep and stops once all
off-diagonal magnitudes drop below 1e-10 * (1 + max |entry|). Because the
sweep that reaches the threshold typically overshoots quadratically, the
returned eigenvalues are accurate to far better than the threshold.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import EmptyGraph, LengthMismatch, NoConvergence, NoEdges
from .graphs import Graph, degrees

CONVERGENCE_SCALE = 1e-10
SWEEP_BUDGET_FACTOR = 100


@dataclass(frozen=True)
class Spectrum:
    """All Laplacian eigenvalues, ascending, with the threshold used."""

    values: tuple[float, ...]
    tolerance: float

    @property
    def lambda_max(self) -> float:
        return self.values[-1]

    def zero_multiplicity(self) -> int:
        return sum(1 for v in self.values if abs(v) <= self.tolerance)


def laplacian_matrix(g: Graph) -> np.ndarray:
    """Degree matrix minus adjacency matrix, as a dense float array."""
    a = np.zeros((g.order, g.order))
    for u, v in g.edges:
        a[u, v] -= 1.0
        a[v, u] -= 1.0
        a[u, u] += 1.0
        a[v, v] += 1.0
    return a


def _jacobi_eigenvalues(a: np.ndarray, tol: float, max_sweeps: int) -> np.ndarray:
    n = a.shape[0]
    if n < 2:
        return np.diag(a).copy()
    a = a.copy()
    for _ in range(max_sweeps):
        off = a - np.diag(np.diag(a))
        if np.max(np.abs(off)) < tol:
            return np.diag(a).copy()
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 1.0 / (2.0 * theta)
                else:
                    t = math.copysign(1.0, theta) / (
                        abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
    raise NoConvergence(f"Jacobi sweep budget {max_sweeps} exhausted at n={n}")


@lru_cache(maxsize=512)
def laplacian_spectrum(g: Graph) -> Spectrum:
    """Full Laplacian spectrum of g, ascending, clamped into [0, order]."""
    if g.order == 0:
        raise EmptyGraph("spectrum undefined on the empty graph")
    lap = laplacian_matrix(g)
    scale = float(np.max(np.abs(lap))) if g.order else 0.0
    tol = CONVERGENCE_SCALE * (1.0 + scale)
    budget = SWEEP_BUDGET_FACTOR * g.order * g.order
    vals = np.sort(_jacobi_eigenvalues(lap, tol, max(budget, 1)))
    # clamp values that sit within tolerance of the known range [0, n]
    vals[(vals < 0.0) & (vals > -tol)] = 0.0
    vals[(vals > g.order) & (vals < g.order + tol)] = float(g.order)
    return Spectrum(tuple(float(v) for v in vals), tol)


def lambda_max(g: Graph) -> float:
    """Largest Laplacian eigenvalue. Raises NoEdges on edgeless graphs."""
    if g.size == 0:
        raise NoEdges("lambda_max degenerates to 0 without edges")
    return laplacian_spectrum(g).lambda_max


def lambda_max_upper(g: Graph) -> float:
    """Cheap certified upper bound: min(n, max over edges deg(u)+deg(v))."""
    if g.size == 0:
        raise NoEdges("no edges, nothing to bound")
    degs = degrees(g).degrees
    worst = max(degs[u] + degs[v] for u, v in g.edges)
    return float(min(g.order, worst))


def quadratic_form(g: Graph, f: Sequence[float]) -> float:
    """Sum over edges of (f(u) - f(v))^2, the Laplacian quadratic form."""
    arr = np.asarray(f, dtype=float)
    if arr.shape != (g.order,):
        raise LengthMismatch(f"need {g.order} values, got shape {arr.shape}")
    if not g.edges:
        return 0.0
    us = np.fromiter((e[0] for e in g.edges), dtype=int, count=g.size)
    vs = np.fromiter((e[1] for e in g.edges), dtype=int, count=g.size)
    return float(np.sum((arr[us] - arr[vs]) ** 2))
