"""Upper bounds on the independence number from Laplacian spectral data.

Every bound takes the shared BoundInputs record: order n, degree extremes
Delta/delta, a value lam >= lambda_max (exact or a certified upper bound,
valid by monotony), and alpha_prime, a certified upper bound on the
independence number of the derived graph (the induced subgraph on the
vertices of non-maximal degree).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable

from .errors import BadInputs, Infeasible, NoEdges, NotIndependent
from .exact import is_independent
from .finite_geometry import SrgParams
from .graphs import Graph, degrees, derived_graph
from .spectral import lambda_max, lambda_max_upper

FLOOR_GUARD = 1e-9
GAIN_CHECK_TOL = 1e-9


def certified_floor(value: float) -> int:
    """Integer part with a tiny guard so exact integer bounds never round down."""
    return math.floor(value + FLOOR_GUARD)


@dataclass(frozen=True)
class BoundInputs:
    """Ingredients shared by all bound formulas; validated on construction."""

    n: int
    Delta: int
    delta: int
    lam: float
    alpha_prime: int
    lambda_is_exact: bool = True

    def __post_init__(self):
        if self.n < 1:
            raise BadInputs(f"order must be >= 1, got {self.n}")
        if not 0 <= self.delta <= self.Delta:
            raise BadInputs(f"need 0 <= delta <= Delta, got {self.delta}, {self.Delta}")
        if not self.lam > self.Delta:
            raise BadInputs(f"need lambda > Delta, got {self.lam} <= {self.Delta}")
        if self.alpha_prime < 0:
            raise BadInputs("alpha_prime must be nonnegative")

    @classmethod
    def from_graph(cls, g: Graph, lam: float, alpha_prime: int,
                   lambda_is_exact: bool = True) -> "BoundInputs":
        prof = degrees(g)
        return cls(g.order, prof.Delta, prof.delta, lam, alpha_prime,
                   lambda_is_exact)


def hoffman_type(i: BoundInputs) -> float:
    """n * (1 - delta/lambda), valid for any graph with an edge."""
    return i.n * (1.0 - i.delta / i.lam)


def gain_form(i: BoundInputs) -> float:
    """Hoffman-type value minus the gap term; algebraically equals relative_bound."""
    h = hoffman_type(i)
    return h - (i.Delta - i.delta) / (i.lam - i.delta) * (h - i.alpha_prime)


def relative_bound(i: BoundInputs) -> float:
    """n * (1 - Delta/lambda) + alpha_prime * (Delta-delta)/(lambda-delta)."""
    value = i.n * (1.0 - i.Delta / i.lam) \
        + i.alpha_prime * (i.Delta - i.delta) / (i.lam - i.delta)
    check = gain_form(i)
    if abs(value - check) > GAIN_CHECK_TOL * max(1.0, abs(value)):
        raise BadInputs(f"gain-form self-check failed: {value} vs {check}")
    return value


def gn_explicit(i: BoundInputs) -> float:
    """Quadratic-inequality bound; between relative_bound and hoffman_type."""
    t = 1.0 - i.Delta / i.lam
    radicand = t * t + 4.0 * i.alpha_prime * (i.Delta - i.delta) / (i.n * i.lam)
    return (i.n / 2.0) * (t + math.sqrt(radicand))


def basic_bound(i: BoundInputs) -> float:
    """The degree-only bound n - delta."""
    return float(i.n - i.delta)


def average_degree_check(g: Graph, members: Iterable[int],
                         lam: float) -> tuple[float, bool]:
    """Bound |u| <= n(1 - avgdeg(u)/lam) for an independent set u.

    lam must be >= lambda_max(g). Returns (bound, holds); holds reports
    whether |u| clears the bound (it always should, up to 1e-9).
    """
    u = tuple(sorted(set(int(v) for v in members)))
    if not u:
        raise BadInputs("average degree over the empty set is undefined")
    if not is_independent(g, u):
        raise NotIndependent(f"subset {u} spans an edge")
    degs = degrees(g).degrees
    avg = sum(degs[v] for v in u) / len(u)
    bound = g.order * (1.0 - avg / lam)
    return bound, len(u) <= bound + FLOOR_GUARD


# ---------------------------------------------------------------------------
# recursive certification of alpha_prime

@dataclass(frozen=True)
class TraceLevel:
    """One certification step: which graph, which lambda, which alpha_prime."""

    method: str  # "relative" | "hoffman" | "edgeless"
    order: int
    size: int
    Delta: int
    delta: int
    lam: float
    alpha_prime: int
    value: float


def _lambda_for(g: Graph, lambda_mode: str) -> float:
    if lambda_mode == "exact":
        return lambda_max(g)
    if lambda_mode == "upper":
        return lambda_max_upper(g)
    raise BadInputs(f"lambda_mode must be 'exact' or 'upper', got {lambda_mode!r}")


def recursive_relative(g: Graph, lambda_mode: str = "exact"
                       ) -> tuple[float, tuple[TraceLevel, ...]]:
    """Relative bound with alpha_prime certified on the derived graph.

    Certification chain per level: an edgeless derived graph contributes
    its order (exact); a regular derived graph with edges contributes the
    Hoffman-type floor; anything else recurses. Certificates are capped by
    the derived order. Returns (bound, trace), outermost level first.
    """
    if g.size == 0:
        raise NoEdges("relative bound undefined without edges")
    exact = lambda_mode == "exact"

    def certify(d: Graph) -> tuple[int, tuple[TraceLevel, ...]]:
        if d.order == 0:
            return 0, ()
        if d.size == 0:
            level = TraceLevel("edgeless", d.order, 0, 0, 0, 0.0, 0,
                               float(d.order))
            return d.order, (level,)
        prof = degrees(d)
        lam = _lambda_for(d, lambda_mode)
        if prof.is_regular:
            inputs = BoundInputs(d.order, prof.Delta, prof.delta, lam, 0, exact)
            value = hoffman_type(inputs)
            level = TraceLevel("hoffman", d.order, d.size, prof.Delta,
                               prof.delta, lam, 0, value)
            return min(certified_floor(value), d.order), (level,)
        value, subtrace = solve(d)
        return min(certified_floor(value), d.order), subtrace

    def solve(h: Graph) -> tuple[float, tuple[TraceLevel, ...]]:
        prof = degrees(h)
        lam = _lambda_for(h, lambda_mode)
        derived, _ = derived_graph(h)
        alpha_prime, subtrace = certify(derived)
        inputs = BoundInputs(h.order, prof.Delta, prof.delta, lam,
                             alpha_prime, exact)
        value = relative_bound(inputs)
        level = TraceLevel("relative", h.order, h.size, prof.Delta,
                           prof.delta, lam, alpha_prime, value)
        return value, (level,) + subtrace

    return solve(g)


# ---------------------------------------------------------------------------
# cartesian products

@dataclass(frozen=True)
class ProductBounds:
    """Bounds for g x h from factor data (no product eigensolve)."""

    viz: int
    hofone: float
    hoftwo: float
    relprod: float
    alpha_prime_est: int


def product_bounds(g: Graph, h: Graph, alpha_g: int, alpha_h: int,
                   alpha_dg: int, alpha_dh: int,
                   lambda_mode: str = "exact") -> ProductBounds:
    """Product bounds using lambda(g) + lambda(h) for the product's lambda.

    alpha_g/alpha_h certify the factors, alpha_dg/alpha_dh their derived
    graphs. The derived graph of the product is covered by derived(g) x h
    together with g x derived(h), so its independence number is certified
    by crossing each certificate with the other factor's order.
    """
    if g.size == 0 or h.size == 0:
        raise NoEdges("both factors need at least one edge")
    pg, ph = degrees(g), degrees(h)
    lam_g = _lambda_for(g, lambda_mode)
    lam_h = _lambda_for(h, lambda_mode)
    ng, nh = g.order, h.order
    viz = min(alpha_g * nh, alpha_h * ng)
    hofone = ng * nh * min(1.0 - pg.delta / lam_g, 1.0 - ph.delta / lam_h)
    hoftwo = ng * nh * (1.0 - (pg.delta + ph.delta) / (lam_g + lam_h))
    dg_order = derived_graph(g)[0].order
    dh_order = derived_graph(h)[0].order
    cross_dg = min(alpha_dg * nh, alpha_h * dg_order)
    cross_dh = min(alpha_g * dh_order, alpha_dh * ng)
    alpha_prime_est = cross_dg + cross_dh
    inputs = BoundInputs(ng * nh, pg.Delta + ph.Delta, pg.delta + ph.delta,
                         lam_g + lam_h, alpha_prime_est,
                         lambda_mode == "exact")
    return ProductBounds(viz, hofone, hoftwo, relative_bound(inputs),
                         alpha_prime_est)


def vizing_lower(g: Graph, h: Graph, alpha_g: int, alpha_h: int) -> int:
    """Lower bound alpha_g*alpha_h + min(n_g - alpha_g, n_h - alpha_h)."""
    return alpha_g * alpha_h + min(g.order - alpha_g, h.order - alpha_h)


# ---------------------------------------------------------------------------
# strongly regular graphs

def srg_hoffman(p: SrgParams) -> float:
    """Ratio bound v*(-theta_min)/(k - theta_min) from SRG parameters."""
    if not p.is_feasible:
        raise Infeasible(f"{p} violates k(k-lam-1) = (v-k-1)mu")
    if p.mu < 1:
        raise Infeasible("disconnected case (mu = 0) not supported")
    disc = (p.lam - p.mu) ** 2 + 4 * (p.k - p.mu)
    if disc < 0:
        raise Infeasible(f"{p} has no real adjacency eigenvalues")
    theta_min = ((p.lam - p.mu) - math.sqrt(disc)) / 2.0
    return p.v * (-theta_min) / (p.k - theta_min)


# ---------------------------------------------------------------------------
# reports

BOUND_NAMES = ("hoffman", "relative", "gn", "basic")


@dataclass(frozen=True)
class BoundReport:
    """All bounds for one graph, plus the inputs they used."""

    n: int
    m: int
    Delta: int
    delta: int
    lam: float
    lambda_is_exact: bool
    alpha_prime: int
    bounds: dict[str, float]
    alpha_exact: int | None = None
    trace: tuple[TraceLevel, ...] = field(default=(), compare=False)

    def floors(self) -> dict[str, int]:
        return {name: certified_floor(v) for name, v in self.bounds.items()}

    def to_json(self) -> str:
        payload = {
            "n": self.n,
            "m": self.m,
            "Delta": self.Delta,
            "delta": self.delta,
            "lambda": self.lam,
            "bounds": {k: self.bounds[k] for k in BOUND_NAMES},
            "floors": {k: certified_floor(self.bounds[k]) for k in BOUND_NAMES},
            "alpha_exact": self.alpha_exact,
        }
        return json.dumps(payload)


def bound_report(g: Graph, lambda_mode: str = "exact", recursive: bool = False,
                 alpha_exact: int | None = None) -> BoundReport:
    """Evaluate every bound on g.

    With recursive=False, alpha_prime is the trivial certificate (the
    derived graph's order); with recursive=True it comes from the
    recursive chain.
    """
    if g.size == 0:
        raise NoEdges("bounds degenerate without edges")
    prof = degrees(g)
    lam = _lambda_for(g, lambda_mode)
    trace: tuple[TraceLevel, ...] = ()
    if recursive:
        value, trace = recursive_relative(g, lambda_mode)
        alpha_prime = trace[0].alpha_prime
    else:
        alpha_prime = derived_graph(g)[0].order
    inputs = BoundInputs(g.order, prof.Delta, prof.delta, lam, alpha_prime,
                         lambda_mode == "exact")
    bounds = {
        "hoffman": hoffman_type(inputs),
        "relative": relative_bound(inputs),
        "gn": gn_explicit(inputs),
        "basic": basic_bound(inputs),
    }
    return BoundReport(g.order, g.size, prof.Delta, prof.delta, lam,
                       lambda_mode == "exact", alpha_prime, bounds,
                       alpha_exact, trace)
