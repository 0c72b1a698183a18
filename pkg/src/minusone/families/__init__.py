"""The family catalog: one entry per continuous -1 family, plus the q-aux
families driving the q -> -1 edges and the Wilson-type helpers.

Public operations: ``recurrence``, ``generate``, ``closed_form``,
``weight_spec``, ``norm``, ``eigen_system``, ``positivity_conditions_ccbi``,
with ``fixture_points`` supplying the reference parameter sets the
verification suites run at.
"""

from __future__ import annotations

from ..precision import PrecisionContext
from ..polynomials import Poly
from .base import (
    EigenSystem,
    FamilyInfo,
    InadmissibleParameterError,
    NoClosedFormError,
    NoEigenSystemError,
    NoWeightError,
    ParameterError,
    RecurrencePair,
    SupportComponent,
    UnknownFamilyError,
    WeightSpec,
    get_param,
)
from .catalog import ALIASES, CLOSED_FORMS, RECURRENCES, REGISTRY
from . import qaux
from .qaux import Q_CLOSED_FORMS, Q_RECURRENCES
from .fixtures import FIXTURES
from .weights import NORMS, WEIGHTS

_ALL_RECURRENCES = {**RECURRENCES, **Q_RECURRENCES}
_ALL_CLOSED = {**CLOSED_FORMS, **Q_CLOSED_FORMS}


def resolve_family(name: str) -> str:
    key = name.strip().lower()
    key = ALIASES.get(key, key)
    if key not in REGISTRY:
        raise UnknownFamilyError("unknown family %r" % name)
    return key


def family_info(name: str) -> FamilyInfo:
    return REGISTRY[resolve_family(name)]


def family_ids(kind=None):
    ids = [fid for fid, info in REGISTRY.items() if kind is None or info.kind == kind]
    return sorted(ids)


def scheme_ids():
    return sorted(fid for fid, info in REGISTRY.items() if info.kind in ("scheme", "quasi"))


def orthogonal_ids():
    return sorted(fid for fid, info in REGISTRY.items() if info.kind == "scheme")


def make_params(family: str, ctx: PrecisionContext, **values):
    """Parse parameter values (decimal strings stay exact) for a family."""
    info = family_info(family)
    params = {}
    for name in info.params:
        if name not in values:
            raise ParameterError("family %s needs parameter %r" % (info.id, name))
        v = values.pop(name)
        params[name] = ctx.mp.mpf(v) if isinstance(v, str) else v
    for extra in ("bn_sign",):
        if extra in values:
            params[extra] = values.pop(extra)
    if values:
        raise ParameterError("unknown parameters for %s: %s" % (info.id, sorted(values)))
    return params


def fixture_points(family: str):
    """The recorded reference parameter points (decimal-string dicts)."""
    return [dict(p) for p in FIXTURES[resolve_family(family)]]


def recurrence(family: str, params: dict, n: int, ctx: PrecisionContext) -> RecurrencePair:
    """Recurrence coefficients b_n, u_n of x P_n = P_{n+1} + b_n P_n + u_n P_{n-1}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    fid = resolve_family(family)
    return _ALL_RECURRENCES[fid](params, n, ctx)


def generate(family: str, params: dict, N: int, ctx: PrecisionContext):
    """P_0 .. P_N by the three-term recurrence; each P_n is monic of degree n."""
    fid = resolve_family(family)
    rec = _ALL_RECURRENCES[fid]
    mp = ctx.mp
    polys = [Poly.constant(mp.mpc(1))]
    prev = None
    for n in range(N):
        pair = rec(params, n, ctx)
        cur = polys[-1]
        shifted = Poly((mp.mpc(0),) + cur.coeffs)          # x * P_n
        nxt = shifted - cur.scale(pair.b)
        if prev is not None:
            nxt = nxt - prev.scale(pair.u)
        prev = cur
        polys.append(nxt)
    return polys


def closed_form(family: str, params: dict, n: int, ctx: PrecisionContext, raw: bool = False):
    """Hypergeometric closed form of P_n, renormalized monic.

    With ``raw=True`` returns (monic_poly, computed_leading_coefficient) so
    the printed normalization itself can be checked against 1.
    """
    fid = resolve_family(family)
    if fid not in _ALL_CLOSED:
        raise NoClosedFormError("no closed form on record for %s" % fid)
    p = _ALL_CLOSED[fid](params, n, ctx)
    p = p.trim(ctx)
    if p.degree != n:
        raise ParameterError(
            "closed form of %s degenerated to degree %d at n = %d (parameter singularity)"
            % (fid, p.degree, n))
    lead = p.coeffs[-1]
    monic = Poly(tuple(c / lead for c in p.coeffs)).realify(ctx)
    if raw:
        return monic, lead
    return monic


def weight_spec(family: str, params: dict, ctx: PrecisionContext) -> WeightSpec:
    fid = resolve_family(family)
    if fid not in WEIGHTS:
        raise NoWeightError("no continuous orthogonality measure on record for %s" % fid)
    return WEIGHTS[fid](params, ctx)


def norm(family: str, params: dict, n: int, ctx: PrecisionContext):
    """Predicted squared norm of monic P_n under the printed inner product."""
    fid = resolve_family(family)
    if fid not in NORMS:
        raise NoWeightError("no printed norm formula for %s" % fid)
    value = ctx.mp.mpc(NORMS[fid](params, n, ctx))
    return ctx.mp.re(value)


def eigen_system(family: str, params: dict, ctx: PrecisionContext, free=None) -> EigenSystem:
    """The family's Dunkl eigenoperator and eigenvalue map.

    ``free`` binds the free parameter (sigma or epsilon) of the second-order
    families; default 1/2.  Families without a printed eigenvalue equation
    (the quasi-orthogonal CCBI, the q-aux families and the helpers) raise
    :class:`NoEigenSystemError`.
    """
    from ..operators import build_eigen_system

    fid = resolve_family(family)
    if not REGISTRY[fid].has_eigen:
        raise NoEigenSystemError("no eigenvalue equation on record for %s" % fid)
    return build_eigen_system(fid, params, ctx, free=free)


def positivity_conditions_ccbi(params: dict, ctx: PrecisionContext, N: int = 8):
    """Evaluate the three reality conditions of the CCBI classification.

    Parameters are either the (a1, b1, a2, b2) set (the raw set then carries
    a3 = a1, b3 = -b1, a4 = a2, b4 = -b2, the substitution under which the
    family is defined) or a raw dict with keys a1, b1, a3, b3, a4, b4, b2.

    Condition 1 is the vanishing of b1+b2+b3+b4; conditions 2 and 3 are the
    reality, for each n, of the degree-shifted factor products that actually
    enter the even/odd recurrence coefficients.  (The source prints
    condition 2 without the unit shifts its tau product carries; the shifted
    product is the one the recurrence makes real at the b2 = 0 reduction.)
    """
    mp = ctx.mp
    if "a3" in params:
        a1, b1 = get_param(params, "a1", ctx), get_param(params, "b1", ctx)
        a3, b3 = get_param(params, "a3", ctx), get_param(params, "b3", ctx)
        a4, b4 = get_param(params, "a4", ctx), get_param(params, "b4", ctx)
        b2 = get_param(params, "b2", ctx)
    else:
        a1, b1 = get_param(params, "a1", ctx), get_param(params, "b1", ctx)
        b2 = get_param(params, "b2", ctx)
        a3, b3 = a1, -b1
        a4, b4 = get_param(params, "a2", ctx), -b2
    tol = ctx.tol(8)

    cond1 = abs(b1 + b2 + b3 + b4) <= tol
    i = mp.mpc(0, 1)
    cond2 = True
    cond3 = True
    max_imag2 = mp.mpf(0)
    max_imag3 = mp.mpf(0)
    first_nonreal = None
    for n in range(N + 1):
        p2 = (n + a1 + a3 - 1 + i * (b1 + b3)) * (n + a1 + a4 - 1 + i * (b1 + b4)) \
            * (n + a3 + a4 - 1 + i * (b3 + b4))
        p3 = (n + a3 + i * (b2 + b3)) * (n + a4 + i * (b2 + b4)) * (n + a1 + i * (b1 + b2))
        scale2 = max(mp.mpf(1), abs(p2))
        scale3 = max(mp.mpf(1), abs(p3))
        max_imag2 = max(max_imag2, abs(mp.im(p2)) / scale2)
        max_imag3 = max(max_imag3, abs(mp.im(p3)) / scale3)
        ok2 = abs(mp.im(p2)) <= tol * scale2
        ok3 = abs(mp.im(p3)) <= tol * scale3
        if first_nonreal is None and not (ok2 and ok3):
            first_nonreal = n
        cond2 = cond2 and ok2
        cond3 = cond3 and ok3

    return {
        "condition1_sum_zero": bool(cond1),
        "condition2_real": bool(cond2),
        "condition3_real": bool(cond3),
        "max_relative_imag_condition2": float(max_imag2),
        "max_relative_imag_condition3": float(max_imag3),
        "first_nonreal_n": first_nonreal,
        "all_hold": bool(cond1 and cond2 and cond3),
    }


def catalog_description():
    """Machine-readable description of every catalog entry."""
    out = []
    for fid in sorted(REGISTRY):
        info = REGISTRY[fid]
        out.append({
            "id": info.id,
            "name": info.name,
            "parameters": list(info.params),
            "kind": info.kind,
            "row": info.row,
            "admissible": info.admissible,
            "anchor": info.anchor,
            "external": info.external,
            "has_weight": info.has_weight,
            "has_eigen_system": info.has_eigen,
            "symmetric": info.symmetric,
        })
    return out
