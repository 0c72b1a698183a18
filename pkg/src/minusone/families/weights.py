"""Orthogonality data: weight functions, supports, and printed norm formulas.

``weight_spec`` returns the density exactly as printed (theta implemented as
sgn) split into components whose endpoints carry all algebraic singular
points; ``norm`` returns the printed right-hand side of the orthogonality
relation under the printed inner product, so quadrature results can be
compared against it directly.  ``measure_prefactor`` records the constant
sitting inside the printed inner product (1/(4 pi) for the Gamma-weight
symmetric families, 1 elsewhere).
"""

from __future__ import annotations

from ..precision import PrecisionContext, pochhammer
from .base import (
    InadmissibleParameterError,
    NoWeightError,
    SupportComponent,
    WeightSpec,
    get_param,
)


def _require(cond, clause, anchor):
    if not cond:
        raise InadmissibleParameterError(
            "parameters violate the admissibility clause [%s]: %s" % (anchor, clause), clause)


def _sgn(x, mp):
    return mp.mpf(1) if x > 0 else (mp.mpf(-1) if x < 0 else mp.mpf(0))


# ----------------------------------------------------------------------
# weight specs


def _w_hermite(params, ctx):
    mp = ctx.mp
    return WeightSpec(
        family="hermite",
        components=[SupportComponent(mp.mpf("-inf"), mp.mpf("+inf"),
                                     exp_lo=None, exp_hi=None,
                                     decay_lo="gaussian", decay_hi="gaussian")],
        density=lambda x: mp.exp(-x * x),
    )


def _w_generalized_hermite(params, ctx):
    mp = ctx.mp
    al = get_param(params, "alpha", ctx)
    _require(al > mp.mpf(-1) / 2, "alpha > -1/2", "A.13")
    dens = lambda x: abs(x) ** (2 * al) * mp.exp(-x * x)
    zero = mp.mpf(0)
    return WeightSpec(
        family="generalized-hermite",
        components=[
            SupportComponent(mp.mpf("-inf"), zero, exp_lo=None, exp_hi=2 * al, decay_lo="gaussian"),
            SupportComponent(zero, mp.mpf("+inf"), exp_lo=2 * al, exp_hi=None, decay_hi="gaussian"),
        ],
        density=dens,
    )


def _w_minus1_mp(params, ctx):
    mp = ctx.mp
    al = get_param(params, "alpha", ctx)
    ga = get_param(params, "gamma", ctx)
    _require(al > mp.mpf(-1) / 2, "alpha > -1/2", "A.9")
    g = abs(ga)

    def dens(x):
        return _sgn(x, mp) * (x + ga) * (x * x - ga * ga) ** (al - mp.mpf(1) / 2) * mp.exp(-x * x)

    return WeightSpec(
        family="minus1-meixner-pollaczek",
        components=[
            SupportComponent(mp.mpf("-inf"), -g, exp_lo=None, exp_hi=al - mp.mpf(1) / 2, decay_lo="gaussian"),
            SupportComponent(g, mp.mpf("+inf"), exp_lo=al - mp.mpf(1) / 2, exp_hi=None, decay_hi="gaussian"),
        ],
        density=dens,
    )


def _w_gegenbauer(params, ctx):
    mp = ctx.mp
    al = get_param(params, "alpha", ctx)
    _require(al > mp.mpf(-1) / 2, "alpha > -1/2", "A.12")
    e = al - mp.mpf(1) / 2
    return WeightSpec(
        family="gegenbauer",
        components=[SupportComponent(mp.mpf(-1), mp.mpf(1), exp_lo=e, exp_hi=e)],
        density=lambda x: (1 - x * x) ** e,
    )


def _w_generalized_gegenbauer(params, ctx):
    mp = ctx.mp
    al = get_param(params, "alpha", ctx)
    be = get_param(params, "beta", ctx)
    _require(al > -1 and be > 0, "alpha > -1 and beta > 0", "A.8")
    zero = mp.mpf(0)
    dens = lambda x: abs(x) ** (2 * al + 1) * (1 - x * x) ** be
    return WeightSpec(
        family="generalized-gegenbauer",
        components=[
            SupportComponent(mp.mpf(-1), zero, exp_lo=be, exp_hi=2 * al + 1),
            SupportComponent(zero, mp.mpf(1), exp_lo=2 * al + 1, exp_hi=be),
        ],
        density=dens,
    )


def _w_chihara(params, ctx):
    mp = ctx.mp
    al = get_param(params, "alpha", ctx)
    be = get_param(params, "beta", ctx)
    ga = get_param(params, "gamma", ctx)
    _require(al > -1 and be > 0, "alpha > -1 and beta > 0", "A.3")
    g = abs(ga)
    top = mp.sqrt(1 + ga * ga)

    def dens(x):
        return _sgn(x, mp) * (x + ga) * (x * x - ga * ga) ** al * (1 + ga * ga - x * x) ** be

    return WeightSpec(
        family="chihara",
        components=[
            SupportComponent(-top, -g, exp_lo=be, exp_hi=al),
            SupportComponent(g, top, exp_lo=al, exp_hi=be),
        ],
        density=dens,
    )


def _w_little_m1j(params, ctx):
    mp = ctx.mp
    al = get_param(params, "alpha", ctx)
    be = get_param(params, "beta", ctx)
    _require(al > 0 and be > 0, "alpha > 0 and beta > 0", "A.7")
    zero = mp.mpf(0)
    e1 = (be - 1) / 2
    dens = lambda x: abs(x) ** al * (1 - x * x) ** e1 * (1 + x)
    return WeightSpec(
        family="little-minus1-jacobi",
        components=[
            SupportComponent(mp.mpf(-1), zero, exp_lo=e1, exp_hi=al),
            SupportComponent(zero, mp.mpf(1), exp_lo=al, exp_hi=e1),
        ],
        density=dens,
    )


def _w_special_lj(params, ctx):
    mp = ctx.mp
    al = get_param(params, "alpha", ctx)
    _require(al > 0, "alpha > 0", "A.11")
    e = (al - 1) / 2
    return WeightSpec(
        family="special-little-minus1-jacobi",
        components=[SupportComponent(mp.mpf(-1), mp.mpf(1), exp_lo=e, exp_hi=e)],
        density=lambda x: (1 - x * x) ** e * (1 + x),
    )


def _w_big_m1j(params, ctx):
    mp = ctx.mp
    al = get_param(params, "alpha", ctx)
    be = get_param(params, "beta", ctx)
    c = get_param(params, "c", ctx)
    _require(al > 0 and be > 0 and 0 <= c < 1, "alpha > 0, beta > 0 and 0 <= c < 1", "A.2")

    def dens(x):
        return _sgn(x, mp) * (1 + x) / (c + x) * (1 - x * x) ** ((al - 1) / 2) \
            * (x * x - c * c) ** ((be + 1) / 2)

    # the 1/(c+x) pole sits at the -c endpoint; effective exponent (beta-1)/2 there
    return WeightSpec(
        family="big-minus1-jacobi",
        components=[
            SupportComponent(mp.mpf(-1), -c, exp_lo=(al - 1) / 2, exp_hi=(be - 1) / 2),
            SupportComponent(c, mp.mpf(1), exp_lo=(be + 1) / 2, exp_hi=(al - 1) / 2),
        ],
        density=dens,
    )


def _gamma_ratio_weight(shifts_num, denom_shift, ctx):
    """|prod Gamma(a_j + i t x) / Gamma(c + i s x)|^2 with the x = 0 limit handled."""
    mp = ctx.mp

    def dens(x):
        ix = mp.mpc(0, 1) * x
        num = mp.mpc(1)
        for (a, t) in shifts_num:
            num *= mp.gamma(a + t * ix)
        c, s = denom_shift
        den = mp.gamma(c + s * ix)
        return abs(num / den) ** 2

    return dens


def _w_gsbi(params, ctx):
    mp = ctx.mp
    a = get_param(params, "a", ctx)
    b = get_param(params, "b", ctx)
    c = get_param(params, "c", ctx)
    vals = [mp.mpc(a), mp.mpc(b), mp.mpc(c)]
    _require(all(mp.re(v) > 0 for v in vals), "Re(a), Re(b), Re(c) > 0", "A.6")
    _require(mp.re(a + b + c) > 1, "a + b + c > 1", "A.6")
    conj_closed = all(min(abs(mp.conj(v) - w) for w in vals) <= ctx.tol(4) * (1 + abs(v))
                      for v in vals)
    _require(conj_closed, "non-real parameters occur in conjugate pairs", "A.6")

    def dens(x):
        if x == 0:
            return abs(2 * mp.gamma(a) * mp.gamma(b) * mp.gamma(c)) ** 2
        ix = mp.mpc(0, 1) * x
        num = mp.gamma(ix) * mp.gamma(a + ix) * mp.gamma(b + ix) * mp.gamma(c + ix)
        return abs(num / mp.gamma(2 * ix)) ** 2

    return WeightSpec(
        family="generalized-symmetric-bannai-ito",
        components=[SupportComponent(mp.mpf("-inf"), mp.mpf("+inf"), exp_lo=None, exp_hi=None,
                                     decay_lo="gamma-modulus", decay_hi="gamma-modulus")],
        density=dens,
        measure_prefactor=1 / (4 * mp.pi),
    )


def _w_sbi(params, ctx):
    mp = ctx.mp
    a = get_param(params, "a", ctx)
    b = get_param(params, "b", ctx)
    _require(mp.re(a) > 0 and mp.re(b) > 0, "Re(a), Re(b) > 0", "A.10")

    def dens(x):
        if x == 0:
            return abs(2 * mp.gamma(a) * mp.gamma(b)) ** 2
        ix = mp.mpc(0, 1) * x
        return abs(mp.gamma(ix) * mp.gamma(a + ix) * mp.gamma(b + ix) / mp.gamma(2 * ix)) ** 2

    return WeightSpec(
        family="symmetric-bannai-ito",
        components=[SupportComponent(mp.mpf("-inf"), mp.mpf("+inf"), exp_lo=None, exp_hi=None,
                                     decay_lo="gamma-modulus", decay_hi="gamma-modulus")],
        density=dens,
        measure_prefactor=1 / (4 * mp.pi),
    )


def _cbi_weight(al, be, ga, de, family, anchor, ctx):
    mp = ctx.mp
    _require(al > 0 and ga > 0, "alpha, gamma > 0", anchor)
    i = mp.mpc(0, 1)
    fa, fb = al + i * be, ga + i * de
    fc, fd = mp.conj(fb), mp.conj(fa)
    half = mp.mpf(1) / 2

    def dens(x):
        ixh = i * x / 2
        num = mp.gamma(fa + ixh + 1) * mp.gamma(fb + ixh + 1) \
            * mp.gamma(fc + ixh + half) * mp.gamma(fd + ixh + half)
        return abs(num / mp.gamma(half + i * x)) ** 2

    return WeightSpec(
        family=family,
        components=[SupportComponent(mp.mpf("-inf"), mp.mpf("+inf"), exp_lo=None, exp_hi=None,
                                     decay_lo="gamma-modulus", decay_hi="gamma-modulus")],
        density=dens,
    )


def _w_cbi(params, ctx):
    mp = ctx.mp
    al = get_param(params, "alpha", ctx)
    be = get_param(params, "beta", ctx)
    ga = get_param(params, "gamma", ctx)
    de = get_param(params, "delta", ctx)
    _require(al > 0 and be > 0 and ga > 0 and de > 0, "alpha, beta, gamma, delta > 0", "A.1")
    return _cbi_weight(al, be, ga, de, "continuous-bannai-ito", "A.1", ctx)


def _w_c1h1(params, ctx):
    be = get_param(params, "beta", ctx)
    _require(be > 0, "alpha, beta, gamma > 0", "A.4")
    return _cbi_weight(get_param(params, "alpha", ctx), be,
                       get_param(params, "gamma", ctx), be, "continuous-minus1-hahn-1", "A.4", ctx)


def _w_c1h2(params, ctx):
    be = get_param(params, "beta", ctx)
    _require(be > 0, "alpha, beta, gamma > 0", "A.5")
    return _cbi_weight(get_param(params, "alpha", ctx), be,
                       get_param(params, "gamma", ctx), -be, "continuous-minus1-hahn-2", "A.5", ctx)


WEIGHTS = {
    "hermite": _w_hermite,
    "generalized-hermite": _w_generalized_hermite,
    "minus1-meixner-pollaczek": _w_minus1_mp,
    "gegenbauer": _w_gegenbauer,
    "generalized-gegenbauer": _w_generalized_gegenbauer,
    "chihara": _w_chihara,
    "little-minus1-jacobi": _w_little_m1j,
    "special-little-minus1-jacobi": _w_special_lj,
    "big-minus1-jacobi": _w_big_m1j,
    "generalized-symmetric-bannai-ito": _w_gsbi,
    "symmetric-bannai-ito": _w_sbi,
    "continuous-bannai-ito": _w_cbi,
    "continuous-minus1-hahn-1": _w_c1h1,
    "continuous-minus1-hahn-2": _w_c1h2,
}


# ----------------------------------------------------------------------
# printed squared norms (right-hand sides of the orthogonality relations)


def _parity(n):
    return n % 2, n // 2


def _norm_hermite(params, n, ctx):
    mp = ctx.mp
    odd, m = _parity(n)
    return mp.factorial(m) * mp.gamma(m + (mp.mpf(3) if odd else mp.mpf(1)) / 2)


def _norm_generalized_hermite(params, n, ctx):
    mp = ctx.mp
    al = get_param(params, "alpha", ctx)
    odd, m = _parity(n)
    return mp.factorial(m) * mp.gamma(m + al + (mp.mpf(3) if odd else mp.mpf(1)) / 2)


def _norm_minus1_mp(params, n, ctx):
    mp = ctx.mp
    ga = get_param(params, "gamma", ctx)
    return mp.exp(-ga * ga) * _norm_generalized_hermite(params, n, ctx)


def _norm_gg_like(al, be, n, ctx):
    mp = ctx.mp
    odd, m = _parity(n)
    if not odd:
        num = mp.gamma(m + al + 1) * mp.gamma(m + be + 1) / mp.gamma(m + al + be + 1)
        return num * mp.factorial(m) / ((2 * m + al + be + 1) * pochhammer(mp.mpf(m) + al + be + 1, m, ctx) ** 2)
    num = mp.gamma(m + al + 2) * mp.gamma(m + be + 1) / mp.gamma(m + al + be + 2)
    return num * mp.factorial(m) / ((2 * m + al + be + 2) * pochhammer(mp.mpf(m) + al + be + 2, m, ctx) ** 2)


def _norm_generalized_gegenbauer(params, n, ctx):
    return _norm_gg_like(get_param(params, "alpha", ctx), get_param(params, "beta", ctx), n, ctx)


def _norm_chihara(params, n, ctx):
    return _norm_gg_like(get_param(params, "alpha", ctx), get_param(params, "beta", ctx), n, ctx)


def _norm_gegenbauer(params, n, ctx):
    mp = ctx.mp
    al = get_param(params, "alpha", ctx)
    half = mp.mpf(1) / 2
    odd, m = _parity(n)
    if not odd:
        return mp.gamma(m + half) * mp.gamma(m + al + half) / mp.gamma(m + al) \
            * mp.factorial(m) / ((2 * m + al) * pochhammer(mp.mpf(m) + al, m, ctx) ** 2)
    return mp.gamma(m + 3 * half) * mp.gamma(m + al + half) / mp.gamma(m + al + 1) \
        * mp.factorial(m) / ((2 * m + al + 1) * pochhammer(mp.mpf(m) + al + 1, m, ctx) ** 2)


def _kappa_little(al, be, n, ctx):
    mp = ctx.mp
    odd, m = _parity(n)
    ap = (al + 1) / 2
    bp = (be + 1) / 2
    s = 1 + (al + be) / 2
    if not odd:
        return mp.factorial(m) * pochhammer(ap, m, ctx) * pochhammer(bp, m, ctx) \
            / (pochhammer(s, 2 * m, ctx) * pochhammer(mp.mpf(m) + s, m, ctx))
    return mp.factorial(m) * pochhammer(ap, m + 1, ctx) * pochhammer(bp, m + 1, ctx) \
        / (pochhammer(s, 2 * m + 1, ctx) * pochhammer(mp.mpf(m) + s, m + 1, ctx))


def _norm_little_m1j(params, n, ctx):
    mp = ctx.mp
    al = get_param(params, "alpha", ctx)
    be = get_param(params, "beta", ctx)
    pref = mp.gamma((al + 1) / 2) * mp.gamma((be + 1) / 2) / mp.gamma(al / 2 + be / 2 + 1)
    return pref * _kappa_little(al, be, n, ctx)


def _norm_big_m1j(params, n, ctx):
    # the printed kappa carries (1-c^2)**m; the measure (checked against both
    # quadrature and the recurrence product h_0 u_1 ... u_n) requires the
    # square of that factor
    mp = ctx.mp
    al = get_param(params, "alpha", ctx)
    be = get_param(params, "beta", ctx)
    c = get_param(params, "c", ctx)
    odd, m = _parity(n)
    kappa = _kappa_little(al, be, n, ctx) * (1 - c * c) ** (2 * m)
    if odd:
        kappa *= (1 + c) ** 2
    pref = (1 - c) * (1 - c * c) ** ((al + be) / 2) \
        * mp.gamma((al + 1) / 2) * mp.gamma((be + 1) / 2) / mp.gamma(al / 2 + be / 2 + 1)
    return pref * kappa


def _norm_special_lj(params, n, ctx):
    mp = ctx.mp
    al = get_param(params, "alpha", ctx)
    return mp.sqrt(mp.pi) * mp.gamma((al + 1) / 2) / mp.mpf(4) ** n \
        * mp.gamma(n + mp.mpf(1)) * mp.gamma(n + 1 + al) / mp.gamma(n + 1 + al / 2) ** 2 \
        * mp.gamma(1 + al / 2) / mp.gamma(1 + al)


def _norm_gsbi(params, n, ctx):
    # the printed kappa_n is the squared norm of the even member of degree
    # 2n (its index runs over the underlying Wilson degree); odd-degree
    # norms follow from the recurrence: h_{2m+1} = kappa_m tau_{2m+1}
    mp = ctx.mp
    a = get_param(params, "a", ctx)
    b = get_param(params, "b", ctx)
    c = get_param(params, "c", ctx)
    s = a + b + c
    odd, m = _parity(n)
    value = mp.gamma(m + a + b) * mp.gamma(m + a + c) * mp.gamma(m + b + c) \
        * mp.gamma(m + a) * mp.gamma(m + b) * mp.gamma(m + c) * mp.factorial(m) \
        / (mp.gamma(2 * m + s) * pochhammer(mp.mpf(m) + s - 1, m, ctx))
    if odd:
        value *= (m + s - 1) * (m + c) * (m + a) * (m + b) \
            / ((2 * m + s - 1) * (2 * m + s))
    return mp.re(value)


def _norm_sbi(params, n, ctx):
    # same even-index convention as the generalized symmetric family
    mp = ctx.mp
    a = get_param(params, "a", ctx)
    b = get_param(params, "b", ctx)
    odd, m = _parity(n)
    value = mp.gamma(m + a + b) * mp.gamma(m + a) * mp.gamma(m + b) * mp.factorial(m)
    if odd:
        value *= (m + a) * (m + b)
    return mp.re(value)


def _cbi_norm(al, be, ga, de, n, ctx):
    mp = ctx.mp
    i = mp.mpc(0, 1)
    fa, fb = al + i * be, ga + i * de
    fc, fd = mp.conj(fb), mp.conj(fa)
    half = mp.mpf(1) / 2
    h0 = mp.gamma(fa + fb + 3 * half) * mp.gamma(fa + fc + 1) * mp.gamma(fb + fc + 1) \
        * mp.gamma(fa + fd + 1) * mp.gamma(fb + fd + 1) * mp.gamma(fc + fd + 3 * half) \
        / mp.gamma(fa + fb + fc + fd + 2)
    odd, m = _parity(n)
    top = m + 1 if odd else m
    common = mp.mpf(4) ** n * mp.factorial(m) \
        * pochhammer(2 * al + 1, top, ctx) * pochhammer(2 * ga + 1, top, ctx) \
        / (pochhammer(2 * al + 2 * ga + 2, n, ctx) * pochhammer(mp.mpf(m) + 2 * al + 2 * ga + 2, top, ctx))
    prod1 = mp.mpf(1)
    for k in range(1, top + 1):
        prod1 *= (k + al + ga) ** 2 + (be - de) ** 2
    prod2 = mp.mpf(1)
    for k in range(1, m + 1):
        prod2 *= (k + al + ga + half) ** 2 + (be + de) ** 2
    kappa = common * prod1 * prod2
    return mp.re(4 * mp.pi * h0 * kappa)


def _norm_cbi(params, n, ctx):
    return _cbi_norm(get_param(params, "alpha", ctx), get_param(params, "beta", ctx),
                     get_param(params, "gamma", ctx), get_param(params, "delta", ctx), n, ctx)


def _norm_c1h1(params, n, ctx):
    be = get_param(params, "beta", ctx)
    return _cbi_norm(get_param(params, "alpha", ctx), be, get_param(params, "gamma", ctx), be, n, ctx)


def _norm_c1h2(params, n, ctx):
    be = get_param(params, "beta", ctx)
    return _cbi_norm(get_param(params, "alpha", ctx), be, get_param(params, "gamma", ctx), -be, n, ctx)


NORMS = {
    "hermite": _norm_hermite,
    "generalized-hermite": _norm_generalized_hermite,
    "minus1-meixner-pollaczek": _norm_minus1_mp,
    "gegenbauer": _norm_gegenbauer,
    "generalized-gegenbauer": _norm_generalized_gegenbauer,
    "chihara": _norm_chihara,
    "little-minus1-jacobi": _norm_little_m1j,
    "big-minus1-jacobi": _norm_big_m1j,
    "special-little-minus1-jacobi": _norm_special_lj,
    "generalized-symmetric-bannai-ito": _norm_gsbi,
    "symmetric-bannai-ito": _norm_sbi,
    "continuous-bannai-ito": _norm_cbi,
    "continuous-minus1-hahn-1": _norm_c1h1,
    "continuous-minus1-hahn-2": _norm_c1h2,
}
