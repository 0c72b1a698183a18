"""Double-exponential quadrature aware of endpoint singularities and decay classes.

Finite intervals use the tanh-sinh map, which absorbs algebraic endpoint
singularities with exponent > -1.  Semi-infinite components use the
exp-sinh map (singular finite endpoint allowed); doubly infinite components
use the sinh map, double-exponential against both the gaussian and the
|Gamma|^2 ("gamma-modulus", asymptotically pure-exponential) decay classes.

Refinement halves the mesh, reusing previous nodes, until two successive
levels agree within the requested tolerance; per level, the node sweep
stops once terms fall below the tolerance times the running magnitude (for
gamma-modulus weights this implements the cutoff where the density drops
below ~10**-(digits+10) of its peak).  A hard cap of 2**20 evaluations
turns runaway integrands into an explicit non-convergence report.
"""

from __future__ import annotations

from dataclasses import dataclass

from .precision import PrecisionContext

NODE_CAP = 1 << 20


@dataclass
class QuadratureResult:
    value: object
    error_estimate: object
    node_count: int
    converged: bool
    levels: int = 0
    last_two: tuple = ()

    def __repr__(self):
        flag = "converged" if self.converged else "NOT CONVERGED"
        return "QuadratureResult(%s, err~%s, %d nodes, %s)" % (
            self.value, self.error_estimate, self.node_count, flag)


def _map_tanh_sinh(lo, hi, mp):
    """x(t) evaluated as a distance from the nearer endpoint.

    1 - tanh(u) = 2/(exp(2u)+1) avoids the cancellation that would round
    nodes onto a singular endpoint; phi returns None once the offset
    underflows against the endpoint itself.
    """
    mid = (lo + hi) / 2
    radius = (hi - lo) / 2

    def phi(t):
        u = mp.pi / 2 * mp.sinh(t)
        if t >= 0:
            s = 2 / (mp.exp(2 * u) + 1)
            x = hi - radius * s
            if x == hi and hi != 0:
                return None
        else:
            s = 2 / (mp.exp(-2 * u) + 1)
            x = lo + radius * s
            if x == lo and lo != 0:
                return None
        w = radius * (mp.pi / 2) * mp.cosh(t) / mp.cosh(u) ** 2
        return x, w
    return phi


def _map_exp_sinh(anchor, direction, mp):
    def phi(t):
        s = mp.sinh(t)
        e = mp.exp(mp.pi / 2 * s)
        x = anchor + direction * e
        if x == anchor:
            return None
        w = (mp.pi / 2) * mp.cosh(t) * e
        return x, w
    return phi


def _map_sinh(mp):
    def phi(t):
        x = mp.sinh(t)
        w = mp.cosh(t)
        return x, w
    return phi


def _component_map(lo, hi, mp):
    lo_inf = mp.isinf(lo)
    hi_inf = mp.isinf(hi)
    if not lo_inf and not hi_inf:
        return _map_tanh_sinh(lo, hi, mp)
    if lo_inf and hi_inf:
        return _map_sinh(mp)
    if lo_inf:
        return _map_exp_sinh(hi, mp.mpf(-1), mp)
    return _map_exp_sinh(lo, mp.mpf(1), mp)


def _level_sum(f, phi, h, level, mp, eps_term, budget):
    """Trapezoid contribution of the new nodes at this level.

    Level 0 sweeps all multiples of h starting at t = 0; deeper levels add
    the odd multiples only.  Sweeps stop after several consecutive terms
    fall below eps_term relative to the largest magnitude seen.
    """
    total = mp.mpf(0)
    peak = mp.mpf(0)
    count = 0

    def sweep(ts):
        nonlocal total, peak, count
        small_run = 0
        for t in ts:
            if count >= budget:
                return False
            node = phi(t)
            if node is None:       # abscissa saturated onto an endpoint
                return True
            x, w = node
            v = w * f(x)
            count += 1
            total += v
            mag = abs(v)
            peak = max(peak, mag)
            if mag < eps_term * max(peak, eps_term):
                small_run += 1
                if small_run >= 4:
                    return True
            else:
                small_run = 0
        return True

    if level == 0:
        if not sweep([mp.mpf(0)]):
            return total, count, False
        ok_pos = sweep((k * h for k in _count_from(1, 1)))
        ok_neg = sweep((-k * h for k in _count_from(1, 1)))
    else:
        ok_pos = sweep((k * h for k in _count_from(1, 2)))
        ok_neg = sweep((-k * h for k in _count_from(1, 2)))
    return total, count, ok_pos and ok_neg


def _count_from(start, step):
    k = start
    while True:
        yield k
        k += step


def integrate_component(f, lo, hi, ctx: PrecisionContext, tol, max_levels=12):
    """DE quadrature of f over one support component."""
    mp = ctx.mp
    tol = mp.mpf(tol)
    eps_term = ctx.tol(-10)        # ~1e-(digits+10): term cutoff relative to the peak
    phi = _component_map(mp.mpf(lo), mp.mpf(hi), mp)

    h = mp.mpf(1)
    total = mp.mpf(0)
    nodes = 0
    previous = None
    estimate = None
    err = mp.inf
    converged = False
    level = 0
    history = []
    while level < max_levels:
        part, used, finished = _level_sum(f, phi, h, level, mp, eps_term, NODE_CAP - nodes)
        nodes += used
        total += part
        estimate = h * total
        history.append(estimate)
        if previous is not None:
            err = abs(estimate - previous)
            if err <= tol * max(abs(estimate), mp.mpf(1)):
                converged = True
                break
        if not finished or nodes >= NODE_CAP:
            break
        previous = estimate
        h = h / 2
        level += 1
    # estimate(level) = h_level * (sum over all nodes so far): the raw sums
    # accumulate across levels while h halves, so each estimate is the full
    # trapezoid value at its mesh
    return QuadratureResult(
        value=estimate,
        error_estimate=err if previous is not None else abs(estimate),
        node_count=nodes,
        converged=converged,
        levels=level + 1,
        last_two=(history[-2], history[-1]) if len(history) >= 2 else tuple(history),
    )


def integrate(weight_or_components, f, ctx: PrecisionContext, tol=None):
    """Integrate density*f over a weight's support (or a raw component list).

    Accepts a WeightSpec-like object with ``components`` and ``density`` or a
    plain list of (lo, hi) pairs (then ``f`` is the full integrand).  Returns
    a QuadratureResult; non-convergence of any component marks the total.
    """
    mp = ctx.mp
    if tol is None:
        tol = ctx.tol(8)
    if hasattr(weight_or_components, "components"):
        spec = weight_or_components
        comps = [(c.lo, c.hi) for c in spec.components]
        dens = spec.density
        integrand = lambda x: dens(x) * f(x)
    else:
        comps = list(weight_or_components)
        integrand = f
    total = mp.mpf(0)
    err = mp.mpf(0)
    nodes = 0
    converged = True
    pieces = []
    for lo, hi in comps:
        r = integrate_component(integrand, lo, hi, ctx, tol)
        total += r.value
        err += r.error_estimate
        nodes += r.node_count
        converged = converged and r.converged
        pieces.append(r)
    result = QuadratureResult(value=total, error_estimate=err, node_count=nodes,
                              converged=converged, levels=max(p.levels for p in pieces),
                              last_two=tuple(p.last_two for p in pieces))
    return result
