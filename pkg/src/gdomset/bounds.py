"""Analytic lower and upper bounds bracketing the global domination number.

Lower bound L is the max of four components (degree, radius, diameter,
support); fractional components are rounded up since the optimum is integral.
Upper bound U combines the max-degree bound U1 with the min-degree bound U2.
"""

import math
from dataclasses import dataclass
from typing import Optional

from .errors import DisconnectedError
from .graph import Graph, metrics


@dataclass(frozen=True)
class BoundsReport:
    lb_degree: Optional[int] = None
    lb_radius: Optional[int] = None
    lb_diameter: Optional[int] = None
    lb_support: Optional[int] = None
    L: Optional[int] = None
    u1: Optional[int] = None
    u2: Optional[int] = None
    U: Optional[int] = None


def _require_coconnected(g: Graph):
    if not g.is_connected():
        raise DisconnectedError("graph is disconnected; bounds assume connectivity")
    if not g.is_connected(in_complement=True):
        raise DisconnectedError(
            "complement is disconnected; bounds assume connectivity"
        )


def lower_bound(g: Graph) -> BoundsReport:
    """L = max{ceil(n/(Δ+1)), ceil(2r/3), ceil((d+1)/3), |Supp(G)|}."""
    _require_coconnected(g)
    mt = metrics(g)
    lb_degree = math.ceil(g.n / (mt.max_degree + 1))
    lb_radius = math.ceil(2 * mt.radius / 3)
    lb_diameter = math.ceil((mt.diameter + 1) / 3)
    lb_support = mt.support_count
    return BoundsReport(
        lb_degree=lb_degree,
        lb_radius=lb_radius,
        lb_diameter=lb_diameter,
        lb_support=lb_support,
        L=max(lb_degree, lb_radius, lb_diameter, lb_support),
    )


def upper_bound(g: Graph) -> BoundsReport:
    """U = min{U1, U2} with U1 from max degrees and U2 from min degrees."""
    _require_coconnected(g)
    dmax = g.max_degree()
    dmax_c = g.n - 1 - g.min_degree()
    dmin = g.min_degree()
    dmin_c = g.n - 1 - g.max_degree()
    u1 = min(dmax, dmax_c) + 1
    if dmin == dmin_c and dmin <= 2:
        u2 = dmin + 2
    else:
        u2 = max(dmin, dmin_c) + 1
    return BoundsReport(u1=u1, u2=u2, U=min(u1, u2))


def bounds(g: Graph) -> BoundsReport:
    """Both halves of the report in one call."""
    lo = lower_bound(g)
    hi = upper_bound(g)
    return BoundsReport(
        lb_degree=lo.lb_degree,
        lb_radius=lo.lb_radius,
        lb_diameter=lo.lb_diameter,
        lb_support=lo.lb_support,
        L=lo.L,
        u1=hi.u1,
        u2=hi.u2,
        U=hi.U,
    )
