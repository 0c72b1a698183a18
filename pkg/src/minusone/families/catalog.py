"""The continuous -1 families: recurrences, closed forms, weights, norms.

Formulas follow the source compendium (anchors A.1-A.14 plus the sections
introducing the continuous complementary Bannai-Ito family).  Every closed
form is assembled exactly as printed, including its prefactors, and then
renormalized monic by dividing by the computed leading coefficient; the raw
leading coefficient is available so the printed normalization itself can be
tested.  The sign factor written theta(x) in split-support weights is
implemented as sgn(x), the unique choice making those densities nonnegative
on both support components.
"""

from __future__ import annotations

from ..precision import PrecisionContext, pochhammer
from ..polynomials import Poly, hyp_terminating_poly
from .base import (
    FamilyInfo,
    RecurrencePair,
    get_param,
    require_nonzero,
)

INF = float("inf")


# ----------------------------------------------------------------------
# registry

REGISTRY = {}


def _register(info: FamilyInfo):
    REGISTRY[info.id] = info
    return info


_register(FamilyInfo(
    id="continuous-bannai-ito", name="Continuous Bannai-Ito",
    params=("alpha", "beta", "gamma", "delta"), kind="scheme", row=4,
    admissible="alpha, beta, gamma, delta > 0", anchor="A.1"))
_register(FamilyInfo(
    id="big-minus1-jacobi", name="Big -1 Jacobi",
    params=("alpha", "beta", "c"), kind="scheme", row=3,
    admissible="alpha > 0, beta > 0, 0 <= c < 1", anchor="A.2"))
_register(FamilyInfo(
    id="chihara", name="Chihara",
    params=("alpha", "beta", "gamma"), kind="scheme", row=3,
    admissible="alpha > -1, beta > 0", anchor="A.3"))
_register(FamilyInfo(
    id="continuous-minus1-hahn-1", name="Continuous -1 Hahn (type 1)",
    params=("alpha", "beta", "gamma"), kind="scheme", row=3,
    admissible="alpha, beta, gamma > 0", anchor="A.4"))
_register(FamilyInfo(
    id="continuous-minus1-hahn-2", name="Continuous -1 Hahn (type 2)",
    params=("alpha", "beta", "gamma"), kind="scheme", row=3,
    admissible="alpha, beta, gamma > 0", anchor="A.5"))
_register(FamilyInfo(
    id="generalized-symmetric-bannai-ito", name="Generalized symmetric Bannai-Ito",
    params=("a", "b", "c"), kind="scheme", row=3,
    admissible="Re(a), Re(b), Re(c) > 0, a+b+c > 1, non-real parameters in conjugate pairs",
    anchor="A.6", symmetric=True))
_register(FamilyInfo(
    id="little-minus1-jacobi", name="Little -1 Jacobi",
    params=("alpha", "beta"), kind="scheme", row=2,
    admissible="alpha > 0, beta > 0", anchor="A.7"))
_register(FamilyInfo(
    id="generalized-gegenbauer", name="Generalized Gegenbauer",
    params=("alpha", "beta"), kind="scheme", row=2,
    admissible="alpha > -1, beta > 0", anchor="A.8", symmetric=True))
_register(FamilyInfo(
    id="minus1-meixner-pollaczek", name="-1 Meixner-Pollaczek",
    params=("alpha", "gamma"), kind="scheme", row=2,
    admissible="alpha > -1/2", anchor="A.9"))
_register(FamilyInfo(
    id="symmetric-bannai-ito", name="Symmetric Bannai-Ito",
    params=("a", "b"), kind="scheme", row=2,
    admissible="Re(a), Re(b) > 0, non-real parameters in conjugate pairs",
    anchor="A.10", symmetric=True))
_register(FamilyInfo(
    id="special-little-minus1-jacobi", name="Special little -1 Jacobi",
    params=("alpha",), kind="scheme", row=1,
    admissible="alpha > 0", anchor="A.11"))
_register(FamilyInfo(
    id="gegenbauer", name="Gegenbauer",
    params=("alpha",), kind="scheme", row=1,
    admissible="alpha > -1/2, alpha != 0", anchor="A.12", symmetric=True))
_register(FamilyInfo(
    id="generalized-hermite", name="Generalized Hermite",
    params=("alpha",), kind="scheme", row=1,
    admissible="alpha > -1/2", anchor="A.13", symmetric=True))
_register(FamilyInfo(
    id="hermite", name="Hermite",
    params=(), kind="scheme", row=0,
    admissible="none", anchor="A.14", symmetric=True))
_register(FamilyInfo(
    id="continuous-complementary-bannai-ito", name="Continuous complementary Bannai-Ito",
    params=("a1", "b1", "a2", "b2"), kind="quasi", row=4,
    admissible="not orthogonal for b2 != 0; recurrence defined away from denominator zeros",
    anchor="ss5", has_weight=False, has_eigen=False))

ALIASES = {
    "cbi": "continuous-bannai-ito",
    "ccbi": "continuous-complementary-bannai-ito",
    "gsbi": "generalized-symmetric-bannai-ito",
    "sbi": "symmetric-bannai-ito",
    "c-1h-1": "continuous-minus1-hahn-1",
    "c-1h-2": "continuous-minus1-hahn-2",
    "gen-gegenbauer": "generalized-gegenbauer",
    "gen-hermite": "generalized-hermite",
    "-1mp": "minus1-meixner-pollaczek",
    "big-1-jacobi": "big-minus1-jacobi",
    "little-1-jacobi": "little-minus1-jacobi",
    "special-little-1-jacobi": "special-little-minus1-jacobi",
}


# ----------------------------------------------------------------------
# shared helpers


def _half(ctx):
    return ctx.mp.mpf(1) / 2


def _parity(n):
    return n % 2, n // 2


def _sgn(x, mp):
    if x > 0:
        return mp.mpf(1)
    if x < 0:
        return mp.mpf(-1)
    return mp.mpf(0)


def _abs_gamma_sq(z, mp):
    return abs(mp.gamma(z)) ** 2


# ----------------------------------------------------------------------
# recurrence coefficients (b_n, u_n), with (A_n, C_n) where printed


def _rec_hermite(params, n, ctx):
    mp = ctx.mp
    return RecurrencePair(b=mp.mpf(0), u=mp.mpf(n) / 2)


def _rec_generalized_hermite(params, n, ctx):
    mp = ctx.mp
    al = get_param(params, "alpha", ctx)
    odd, m = _parity(n)
    u = mp.mpf(m) if not odd else m + al + _half(ctx)
    return RecurrencePair(b=mp.mpf(0), u=u)


def _rec_minus1_mp(params, n, ctx):
    mp = ctx.mp
    al = get_param(params, "alpha", ctx)
    ga = get_param(params, "gamma", ctx)
    odd, m = _parity(n)
    u = mp.mpf(m) if not odd else m + al + _half(ctx)
    return RecurrencePair(b=(-1) ** n * ga, u=u)


def _sigma_gg(al, be, n, ctx):
    mp = ctx.mp
    odd, m = _parity(n)
    if not odd:
        den = require_nonzero((2 * m + al + be) * (2 * m + al + be + 1), "(2n+alpha+beta)(2n+alpha+beta+1)", ctx) \
            if n > 0 else mp.mpf(1)
        return mp.mpf(0) if n == 0 else m * (m + be) / den
    den = require_nonzero((2 * m + al + be + 1) * (2 * m + al + be + 2), "(2n+alpha+beta+1)(2n+alpha+beta+2)", ctx)
    return (m + al + 1) * (m + al + be + 1) / den


def _rec_generalized_gegenbauer(params, n, ctx):
    al = get_param(params, "alpha", ctx)
    be = get_param(params, "beta", ctx)
    return RecurrencePair(b=ctx.mp.mpf(0), u=_sigma_gg(al, be, n, ctx))


def _rec_chihara(params, n, ctx):
    al = get_param(params, "alpha", ctx)
    be = get_param(params, "beta", ctx)
    ga = get_param(params, "gamma", ctx)
    return RecurrencePair(b=(-1) ** n * ga, u=_sigma_gg(al, be, n, ctx))


def _rec_gegenbauer(params, n, ctx):
    mp = ctx.mp
    al = get_param(params, "alpha", ctx)
    if n == 0:
        return RecurrencePair(b=mp.mpf(0), u=mp.mpf(0))
    den = require_nonzero((2 * n + 2 * al - 2) * (2 * n + 2 * al), "(2n+2alpha-2)(2n+2alpha)", ctx)
    return RecurrencePair(b=mp.mpf(0), u=n * (n + 2 * al - 1) / den)


def _rec_symmetric_bannai_ito(params, n, ctx):
    mp = ctx.mp
    a = get_param(params, "a", ctx)
    b = get_param(params, "b", ctx)
    odd, m = _parity(n)
    u = m * (m + a + b - 1) if not odd else (m + a) * (m + b)
    return RecurrencePair(b=mp.mpf(0), u=u)


def _rec_gsbi(params, n, ctx):
    mp = ctx.mp
    a = get_param(params, "a", ctx)
    b = get_param(params, "b", ctx)
    c = get_param(params, "c", ctx)
    s = a + b + c
    odd, m = _parity(n)
    if n == 0:
        return RecurrencePair(b=mp.mpf(0), u=mp.mpf(0))
    if not odd:
        den = require_nonzero((2 * m + s - 2) * (2 * m + s - 1), "(2n+a+b+c-2)(2n+a+b+c-1)", ctx)
        u = m * (m + a + b - 1) * (m + a + c - 1) * (m + b + c - 1) / den
    else:
        den = require_nonzero((2 * m + s - 1) * (2 * m + s), "(2n+a+b+c-1)(2n+a+b+c)", ctx)
        u = (m + s - 1) * (m + c) * (m + a) * (m + b) / den
    return RecurrencePair(b=mp.mpf(0), u=u)


def _rec_ccbi(params, n, ctx):
    mp = ctx.mp
    a1 = get_param(params, "a1", ctx)
    b1 = get_param(params, "b1", ctx)
    a2 = get_param(params, "a2", ctx)
    b2 = get_param(params, "b2", ctx)
    i = mp.mpc(0, 1)
    odd, m = _parity(n)
    bcoef = (-1) ** n * b2
    if n == 0:
        return RecurrencePair(b=bcoef, u=mp.mpc(0))
    if not odd:
        den = require_nonzero((2 * m + 2 * a1 + a2 - 2) * (2 * m + 2 * a1 + a2 - 1),
                              "(2n+2a1+a2-2)(2n+2a1+a2-1)", ctx)
        u = m * (m + 2 * a1 - 1) * (m + a1 + a2 - 1 + i * (b1 - b2)) \
            * (m + a1 + a2 - 1 - i * (b1 + b2)) / den
    else:
        den = require_nonzero((2 * m + 2 * a1 + a2 - 1) * (2 * m + 2 * a1 + a2),
                              "(2n+2a1+a2-1)(2n+2a1+a2)", ctx)
        u = (m + 2 * a1 + a2 - 1) * (m + a2) * (m + a1 + i * (b1 + b2)) \
            * (m + a1 - i * (b1 - b2)) / den
    return RecurrencePair(b=bcoef, u=u)


def _rec_cbi(params, n, ctx):
    mp = ctx.mp
    al = get_param(params, "alpha", ctx)
    be = get_param(params, "beta", ctx)
    ga = get_param(params, "gamma", ctx)
    de = get_param(params, "delta", ctx)
    even = n % 2 == 0
    d1 = require_nonzero(mp.mpf(n) + 2 * al + 2 * ga + 1, "n+2alpha+2gamma+1", ctx)
    d2 = require_nonzero(mp.mpf(n) + 2 * al + 2 * ga + 2, "n+2alpha+2gamma+2", ctx)
    if even:
        b = 2 * be - (n + 4 * al + 2) * (be - de) / d2 - n * (be + de) / d1
        mod = d1 ** 2 + 4 * (be + de) ** 2
        u = n * (n + 4 * al + 4 * ga + 2) * mod / (4 * d1 ** 2)
    else:
        b = 2 * be - (n + 4 * al + 4 * ga + 3) * (be + de) / d2 - (n + 4 * ga + 1) * (be - de) / d1
        mod = d1 ** 2 + 4 * (be - de) ** 2
        u = (n + 4 * al + 1) * (n + 4 * ga + 1) * mod / (4 * d1 ** 2)
    return RecurrencePair(b=b, u=u)


def _rec_c1h1(params, n, ctx):
    mp = ctx.mp
    al = get_param(params, "alpha", ctx)
    be = get_param(params, "beta", ctx)
    ga = get_param(params, "gamma", ctx)
    d1 = require_nonzero(mp.mpf(n) + 2 * al + 2 * ga + 1, "n+2alpha+2gamma+1", ctx)
    d2 = require_nonzero(mp.mpf(n) + 2 * al + 2 * ga + 2, "n+2alpha+2gamma+2", ctx)
    if n % 2 == 0:
        b = 2 * be - 2 * be * n / d1
        u = n * (n + 4 * al + 4 * ga + 2) * (d1 ** 2 + 16 * be ** 2) / (4 * d1 ** 2)
    else:
        b = 2 * be - 2 * be * (n + 4 * al + 4 * ga + 3) / d2
        u = (n + 4 * al + 1) * (n + 4 * ga + 1) * d1 ** 2 / (4 * d1 ** 2)
    return RecurrencePair(b=b, u=u)


def _rec_c1h2(params, n, ctx):
    mp = ctx.mp
    al = get_param(params, "alpha", ctx)
    be = get_param(params, "beta", ctx)
    ga = get_param(params, "gamma", ctx)
    d1 = require_nonzero(mp.mpf(n) + 2 * al + 2 * ga + 1, "n+2alpha+2gamma+1", ctx)
    d2 = require_nonzero(mp.mpf(n) + 2 * al + 2 * ga + 2, "n+2alpha+2gamma+2", ctx)
    if n % 2 == 0:
        b = 2 * be - 2 * be * (n + 4 * al + 2) / d2
        u = n * (n + 4 * al + 4 * ga + 2) * d1 ** 2 / (4 * d1 ** 2)
    else:
        b = 2 * be - 2 * be * (n + 4 * ga + 1) / d1
        u = (n + 4 * al + 1) * (n + 4 * ga + 1) * (d1 ** 2 + 16 * be ** 2) / (4 * d1 ** 2)
    return RecurrencePair(b=b, u=u)


def _big_m1j_AC(al, be, c, n, ctx):
    mp = ctx.mp
    if n % 2 == 0:
        A = (1 + c) * (n + al + 1) / require_nonzero(2 * mp.mpf(n) + al + be + 2, "2n+alpha+beta+2", ctx)
        C = mp.mpf(0) if n == 0 else (1 - c) * n / require_nonzero(2 * mp.mpf(n) + al + be, "2n+alpha+beta", ctx)
    else:
        A = (1 - c) * (n + al + be + 1) / require_nonzero(2 * mp.mpf(n) + al + be + 2, "2n+alpha+beta+2", ctx)
        C = (1 + c) * (n + be) / require_nonzero(2 * mp.mpf(n) + al + be, "2n+alpha+beta", ctx)
    return A, C


def _rec_big_m1j(params, n, ctx):
    al = get_param(params, "alpha", ctx)
    be = get_param(params, "beta", ctx)
    c = get_param(params, "c", ctx)
    A, C = _big_m1j_AC(al, be, c, n, ctx)
    if n == 0:
        u = ctx.mp.mpf(0)
    else:
        Aprev, _ = _big_m1j_AC(al, be, c, n - 1, ctx)
        u = Aprev * C
    return RecurrencePair(b=1 - A - C, u=u, A=A, C=C, combine="one-minus")


def _little_m1j_AC(al, be, n, ctx):
    mp = ctx.mp
    if n % 2 == 0:
        A = (n + be + 1) / require_nonzero(2 * mp.mpf(n) + al + be + 2, "2n+alpha+beta+2", ctx)
        C = mp.mpf(0) if n == 0 else mp.mpf(n) / require_nonzero(2 * mp.mpf(n) + al + be, "2n+alpha+beta", ctx)
    else:
        A = (n + al + be + 1) / require_nonzero(2 * mp.mpf(n) + al + be + 2, "2n+alpha+beta+2", ctx)
        C = (n + al) / require_nonzero(2 * mp.mpf(n) + al + be, "2n+alpha+beta", ctx)
    return A, C


def _rec_little_m1j(params, n, ctx):
    al = get_param(params, "alpha", ctx)
    be = get_param(params, "beta", ctx)
    A, C = _little_m1j_AC(al, be, n, ctx)
    if n == 0:
        u = ctx.mp.mpf(0)
    else:
        Aprev, _ = _little_m1j_AC(al, be, n - 1, ctx)
        u = Aprev * C
    return RecurrencePair(b=1 - A - C, u=u, A=A, C=C, combine="one-minus")


def _special_lj_AC(al, n, ctx):
    mp = ctx.mp
    A = (n + al + 1) / require_nonzero(2 * mp.mpf(n) + al + 2, "2n+alpha+2", ctx)
    C = mp.mpf(0) if n == 0 else mp.mpf(n) / require_nonzero(2 * mp.mpf(n) + al, "2n+alpha", ctx)
    return A, C


def _rec_special_lj(params, n, ctx):
    al = get_param(params, "alpha", ctx)
    A, C = _special_lj_AC(al, n, ctx)
    if n == 0:
        u = ctx.mp.mpf(0)
    else:
        Aprev, _ = _special_lj_AC(al, n - 1, ctx)
        u = Aprev * C
    return RecurrencePair(b=1 - A - C, u=u, A=A, C=C, combine="one-minus")


RECURRENCES = {
    "hermite": _rec_hermite,
    "generalized-hermite": _rec_generalized_hermite,
    "minus1-meixner-pollaczek": _rec_minus1_mp,
    "generalized-gegenbauer": _rec_generalized_gegenbauer,
    "chihara": _rec_chihara,
    "gegenbauer": _rec_gegenbauer,
    "symmetric-bannai-ito": _rec_symmetric_bannai_ito,
    "generalized-symmetric-bannai-ito": _rec_gsbi,
    "continuous-complementary-bannai-ito": _rec_ccbi,
    "continuous-bannai-ito": _rec_cbi,
    "continuous-minus1-hahn-1": _rec_c1h1,
    "continuous-minus1-hahn-2": _rec_c1h2,
    "big-minus1-jacobi": _rec_big_m1j,
    "little-minus1-jacobi": _rec_little_m1j,
    "special-little-minus1-jacobi": _rec_special_lj,
}


# ----------------------------------------------------------------------
# closed forms (raw, before monic renormalization)


def _cf_hermite_like(al_half, n, ctx, gamma_shift=None):
    """(-1)^m (al+1/2)_m [x or (x-gamma)] 1F1(-m; al+1/2; x^2-gamma^2) pattern."""
    mp = ctx.mp
    x = Poly.x(ctx)
    z = x * x if gamma_shift is None else x * x - Poly.constant(gamma_shift ** 2)
    odd, m = _parity(n)
    a = al_half + (1 if odd else 0)
    series = hyp_terminating_poly(m, [-mp.mpf(m)], [a], z, ctx)
    pref = (-1) ** m * pochhammer(a, m, ctx)
    if odd:
        lead = x if gamma_shift is None else x - Poly.constant(gamma_shift)
        return lead.scale(pref) * series
    return series.scale(pref)


def _cf_hermite(params, n, ctx):
    return _cf_hermite_like(_half(ctx), n, ctx)


def _cf_generalized_hermite(params, n, ctx):
    al = get_param(params, "alpha", ctx)
    return _cf_hermite_like(al + _half(ctx), n, ctx)


def _cf_minus1_mp(params, n, ctx):
    al = get_param(params, "alpha", ctx)
    ga = get_param(params, "gamma", ctx)
    return _cf_hermite_like(al + _half(ctx), n, ctx, gamma_shift=ga)


def _cf_gg_like(al, be, n, ctx, gamma_shift=None):
    """Generalized Gegenbauer / Chihara 2F1 pattern in x^2 - gamma^2."""
    mp = ctx.mp
    x = Poly.x(ctx)
    z = x * x if gamma_shift is None else x * x - Poly.constant(gamma_shift ** 2)
    odd, m = _parity(n)
    if not odd:
        series = hyp_terminating_poly(m, [-mp.mpf(m), m + al + be + 1], [al + 1], z, ctx)
        pref = (-1) ** m * pochhammer(al + 1, m, ctx) / pochhammer(mp.mpf(m) + al + be + 1, m, ctx)
        return series.scale(pref)
    series = hyp_terminating_poly(m, [-mp.mpf(m), m + al + be + 2], [al + 2], z, ctx)
    pref = (-1) ** m * pochhammer(al + 2, m, ctx) / pochhammer(mp.mpf(m) + al + be + 2, m, ctx)
    lead = x if gamma_shift is None else x - Poly.constant(gamma_shift)
    return lead.scale(pref) * series


def _cf_generalized_gegenbauer(params, n, ctx):
    return _cf_gg_like(get_param(params, "alpha", ctx), get_param(params, "beta", ctx), n, ctx)


def _cf_chihara(params, n, ctx):
    return _cf_gg_like(get_param(params, "alpha", ctx), get_param(params, "beta", ctx),
                       n, ctx, gamma_shift=get_param(params, "gamma", ctx))


def _cf_gegenbauer(params, n, ctx):
    mp = ctx.mp
    al = get_param(params, "alpha", ctx)
    x = Poly.x(ctx)
    z = x * x
    odd, m = _parity(n)
    if not odd:
        series = hyp_terminating_poly(m, [-mp.mpf(m), m + al], [_half(ctx)], z, ctx)
        pref = (-1) ** m * pochhammer(_half(ctx), m, ctx) / pochhammer(mp.mpf(m) + al, m, ctx)
        return series.scale(pref)
    series = hyp_terminating_poly(m, [-mp.mpf(m), m + al + 1], [3 * _half(ctx)], z, ctx)
    pref = (-1) ** m * pochhammer(3 * _half(ctx), m, ctx) / pochhammer(mp.mpf(m) + al + 1, m, ctx)
    return (x.scale(pref)) * series


def _cf_symmetric_bannai_ito(params, n, ctx):
    mp = ctx.mp
    a = get_param(params, "a", ctx)
    b = get_param(params, "b", ctx)
    i = mp.mpc(0, 1)
    x = Poly.x(ctx)
    ix = Poly((mp.mpc(0), i))
    odd, m = _parity(n)
    if not odd:
        series = hyp_terminating_poly(m, [-mp.mpf(m), ix, -ix], [a, b], 1, ctx)
        return series.scale((-1) ** m * pochhammer(a, m, ctx) * pochhammer(b, m, ctx))
    series = hyp_terminating_poly(m, [-mp.mpf(m), 1 + ix, 1 - ix], [1 + a, 1 + b], 1, ctx)
    return x.scale((-1) ** m * pochhammer(1 + a, m, ctx) * pochhammer(1 + b, m, ctx)) * series


def _cf_gsbi(params, n, ctx):
    mp = ctx.mp
    a = get_param(params, "a", ctx)
    b = get_param(params, "b", ctx)
    c = get_param(params, "c", ctx)
    s = a + b + c
    i = mp.mpc(0, 1)
    x = Poly.x(ctx)
    ix = Poly((mp.mpc(0), i))
    odd, m = _parity(n)
    if not odd:
        series = hyp_terminating_poly(m, [-mp.mpf(m), m + s - 1, ix, -ix], [a, b, c], 1, ctx)
        pref = (-1) ** m * pochhammer(a, m, ctx) * pochhammer(b, m, ctx) * pochhammer(c, m, ctx) \
            / pochhammer(mp.mpf(m) + s - 1, m, ctx)
        return series.scale(pref)
    series = hyp_terminating_poly(m, [-mp.mpf(m), m + s, 1 + ix, 1 - ix], [1 + a, 1 + b, 1 + c], 1, ctx)
    pref = (-1) ** m * pochhammer(1 + a, m, ctx) * pochhammer(1 + b, m, ctx) * pochhammer(1 + c, m, ctx) \
        / pochhammer(mp.mpf(m) + s, m, ctx)
    return x.scale(pref) * series


def _cf_ccbi(params, n, ctx):
    """Wilson-based closed form; the Wilson block is the bare 4F3 series."""
    mp = ctx.mp
    a1 = get_param(params, "a1", ctx)
    b1 = get_param(params, "b1", ctx)
    a2 = get_param(params, "a2", ctx)
    b2 = get_param(params, "b2", ctx)
    i = mp.mpc(0, 1)
    x = Poly.x(ctx)
    ix = Poly((mp.mpc(0), i))
    odd, m = _parity(n)
    # Wilson parameters (A, B, C, D) with the argument x^2
    A = i * b2 + (1 if odd else 0)
    B = a1 + i * b1
    C = a1 - i * b1
    D = a2 - i * b2
    s = A + B + C + D
    series = hyp_terminating_poly(
        m, [-mp.mpf(m), m + s - 1, Poly.constant(A) + ix, Poly.constant(A) - ix],
        [A + B, A + C, A + D], 1, ctx)
    num = pochhammer(A + B, m, ctx) * pochhammer(A + C, m, ctx) * pochhammer(A + D, m, ctx)
    l_n = (-1) ** m * num / pochhammer(mp.mpf(m) + s - 1, m, ctx)
    if odd:
        return (x - Poly.constant(b2)).scale(l_n) * series
    return series.scale(l_n)


def _cbi_template(al, be, ga, de, n, ctx):
    """Shared closed form of the continuous Bannai-Ito / continuous -1 Hahn block."""
    mp = ctx.mp
    i = mp.mpc(0, 1)
    fa = al + i * be
    fb = ga + i * de
    fc = ga - i * de
    fd = al - i * be
    g = 2 * al + 2 * ga + 1
    x = Poly.x(ctx)
    ihalf = Poly((mp.mpc(0), i / 2))      # i x / 2

    def kappa1(m):
        return pochhammer(3 * _half(ctx) + fa + fb, m, ctx) * pochhammer(1 + fb + fc, m, ctx) \
            * pochhammer(1 + fb + fd, m, ctx) / pochhammer(mp.mpf(m) + g + 1, m, ctx)

    def kappa2(m):
        return pochhammer(5 * _half(ctx) + fa + fb, m, ctx) * pochhammer(2 + fb + fc, m, ctx) \
            * pochhammer(2 + fb + fd, m, ctx) / pochhammer(mp.mpf(m) + g + 2, m, ctx)

    dens_low = [3 * _half(ctx) + fa + fb, 1 + fb + fc, 1 + fb + fd]
    dens_high = [5 * _half(ctx) + fa + fb, 2 + fb + fc, 2 + fb + fd]
    nums_low = lambda m: [-mp.mpf(m), m + g + 1, ihalf + Poly.constant(fb),
                          -ihalf + Poly.constant(fb + _half(ctx))]
    nums_high = lambda m: [-mp.mpf(m), m + g + 2, ihalf + Poly.constant(fb + 1),
                           -ihalf + Poly.constant(fb + 3 * _half(ctx))]
    front = ihalf - Poly.constant(fb + _half(ctx))   # i x/2 - b - 1/2

    odd, m = _parity(n)
    if not odd:
        second = hyp_terminating_poly(m, nums_low(m), dens_low, 1, ctx).scale(kappa1(m))
        if m == 0:
            total = second
        else:
            xi = mp.mpf(m) * (m + fc + fd + _half(ctx)) / (2 * m + g)
            first = front * hyp_terminating_poly(m - 1, nums_high(m - 1), dens_high, 1, ctx)
            total = first.scale(xi * kappa2(m - 1)) + second
    else:
        eta = (m + fb + fc + 1) * (m + fb + fd + 1) / (2 * m + g + 1)
        first = front * hyp_terminating_poly(m, nums_high(m), dens_high, 1, ctx)
        total = first.scale(kappa2(m)) + hyp_terminating_poly(m, nums_low(m), dens_low, 1, ctx).scale(eta * kappa1(m))
    return total.scale((-2 * i) ** n)


def _cf_cbi(params, n, ctx):
    return _cbi_template(get_param(params, "alpha", ctx), get_param(params, "beta", ctx),
                         get_param(params, "gamma", ctx), get_param(params, "delta", ctx), n, ctx)


def _cf_c1h1(params, n, ctx):
    be = get_param(params, "beta", ctx)
    return _cbi_template(get_param(params, "alpha", ctx), be,
                         get_param(params, "gamma", ctx), be, n, ctx)


def _cf_c1h2(params, n, ctx):
    be = get_param(params, "beta", ctx)
    return _cbi_template(get_param(params, "alpha", ctx), be,
                         get_param(params, "gamma", ctx), -be, n, ctx)


def _cf_big_m1j(params, n, ctx):
    mp = ctx.mp
    al = get_param(params, "alpha", ctx)
    be = get_param(params, "beta", ctx)
    c = get_param(params, "c", ctx)
    one_minus_c2 = require_nonzero(1 - c * c, "1-c^2", ctx)
    x = Poly.x(ctx)
    z = Poly((1 / one_minus_c2, mp.mpf(0), -1 / one_minus_c2))   # (1-x^2)/(1-c^2)
    one_minus_x = Poly((mp.mpf(1), mp.mpf(-1)))
    odd, m = _parity(n)
    ap1_2 = (al + 1) / 2
    ap3_2 = (al + 3) / 2
    if not odd:
        s = (2 * m + al + be + 2) / 2
        f1 = hyp_terminating_poly(m, [-mp.mpf(m), s], [ap1_2], z, ctx)
        if m == 0:
            total = f1
        else:
            f2 = hyp_terminating_poly(m - 1, [-(mp.mpf(m) - 1), s], [ap3_2], z, ctx)
            total = f1 + (one_minus_x * f2).scale(2 * m / ((1 + c) * (1 + al)))
        eta = one_minus_c2 ** m * pochhammer(ap1_2, m, ctx) / pochhammer(s, m, ctx)
        return total.scale(eta)
    s = (2 * m + al + be + 2) / 2
    f1 = hyp_terminating_poly(m, [-mp.mpf(m), s], [ap1_2], z, ctx)
    f2 = hyp_terminating_poly(m, [-mp.mpf(m), (2 * m + al + be + 4) / 2], [ap3_2], z, ctx)
    total = f1 - (one_minus_x * f2).scale((2 * m + al + be + 2) / ((1 + c) * (1 + al)))
    eta = (1 + c) * one_minus_c2 ** m * pochhammer(ap1_2, m + 1, ctx) / pochhammer(s, m + 1, ctx)
    return total.scale(eta)


def _cf_little_m1j(params, n, ctx):
    """Little -1 Jacobi closed form.

    The odd-degree block of the printed representation carries a first
    parameter that is inconsistent with the printed recurrence; the
    consistent value (2n+alpha+beta+2)/2, the one matching the big -1
    Jacobi pattern, is used and the discrepancy is surfaced through the
    open-question report.
    """
    mp = ctx.mp
    al = get_param(params, "alpha", ctx)
    be = get_param(params, "beta", ctx)
    x = Poly.x(ctx)
    z = x * x
    odd, m = _parity(n)
    ap1_2 = (al + 1) / 2
    ap3_2 = (al + 3) / 2
    s = (2 * m + al + be + 2) / 2
    if not odd:
        f1 = hyp_terminating_poly(m, [-mp.mpf(m), s], [ap1_2], z, ctx)
        if m == 0:
            total = f1
        else:
            f2 = hyp_terminating_poly(m - 1, [-(mp.mpf(m) - 1), s], [ap3_2], z, ctx)
            total = f1 + (x * f2).scale(2 * m / (1 + al))
        eta = pochhammer(ap1_2, m, ctx) / pochhammer(s, m, ctx)
        return total.scale(eta)
    f1 = hyp_terminating_poly(m, [-mp.mpf(m), s], [ap1_2], z, ctx)
    f2 = hyp_terminating_poly(m, [-mp.mpf(m), (2 * m + al + be + 4) / 2], [ap3_2], z, ctx)
    total = f1 - (x * f2).scale((2 * m + al + be + 2) / (1 + al))
    eta = pochhammer(ap1_2, m + 1, ctx) / pochhammer(s, m + 1, ctx)
    return total.scale(eta)


def _cf_special_lj(params, n, ctx):
    """Special little -1 Jacobi; odd block parameter fixed as in the little -1 Jacobi."""
    return _cf_little_m1j({"alpha": 0, "beta": get_param(params, "alpha", ctx)}, n, ctx)


CLOSED_FORMS = {
    "hermite": _cf_hermite,
    "generalized-hermite": _cf_generalized_hermite,
    "minus1-meixner-pollaczek": _cf_minus1_mp,
    "generalized-gegenbauer": _cf_generalized_gegenbauer,
    "chihara": _cf_chihara,
    "gegenbauer": _cf_gegenbauer,
    "symmetric-bannai-ito": _cf_symmetric_bannai_ito,
    "generalized-symmetric-bannai-ito": _cf_gsbi,
    "continuous-complementary-bannai-ito": _cf_ccbi,
    "continuous-bannai-ito": _cf_cbi,
    "continuous-minus1-hahn-1": _cf_c1h1,
    "continuous-minus1-hahn-2": _cf_c1h2,
    "big-minus1-jacobi": _cf_big_m1j,
    "little-minus1-jacobi": _cf_little_m1j,
    "special-little-minus1-jacobi": _cf_special_lj,
}
