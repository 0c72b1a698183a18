import random

import pytest

from minusone.precision import PrecisionContext
from minusone.polynomials import Poly, poly_eq, poly_rel_distance
from minusone import families as F
from minusone.families import (
    InadmissibleParameterError,
    NoEigenSystemError,
    NoWeightError,
    UnknownFamilyError,
)

CTX = PrecisionContext(50)
MP = CTX.mp


def P(fid, **kw):
    return F.make_params(fid, CTX, **kw)


def test_catalog_counts_and_aliases():
    assert len(F.family_ids()) == 21
    assert len(F.scheme_ids()) == 15
    assert len(F.orthogonal_ids()) == 14
    assert F.resolve_family("cbi") == "continuous-bannai-ito"
    assert F.resolve_family("CCBI") == "continuous-complementary-bannai-ito"
    with pytest.raises(UnknownFamilyError):
        F.resolve_family("nope")


def test_hermite_recurrence_values():
    pair = F.recurrence("hermite", {}, 2, CTX)
    assert pair.b == 0 and abs(pair.u - 1) == 0
    assert abs(F.recurrence("hermite", {}, 3, CTX).u - MP.mpf("1.5")) == 0


def test_cbi_recurrence_hand_values():
    params = P("cbi", alpha="0", beta="1", gamma="0", delta="0")
    assert abs(F.recurrence("cbi", params, 0, CTX).b - 1) < CTX.tol(6)
    # u_1 via |2 + 2i|^2 = 8
    assert abs(F.recurrence("cbi", params, 1, CTX).u - 2) < CTX.tol(6)


def test_generalized_gegenbauer_u1():
    params = P("gen-gegenbauer", alpha="0", beta="1")
    assert abs(F.recurrence("gen-gegenbauer", params, 1, CTX).u - MP.mpf(1) / 3) < CTX.tol(6)


def test_generate_examples():
    chi = F.generate("chihara", P("chihara", alpha="0.7", beta="1.1", gamma="0.25"), 1, CTX)
    assert poly_eq(chi[1], Poly([-MP.mpf("0.25"), 1]), CTX)

    her = F.generate("hermite", {}, 2, CTX)
    assert poly_eq(her[2], Poly([-MP.mpf("0.5"), 0, 1]), CTX)

    al, ga = MP.mpf("0.6"), MP.mpf("0.3")
    mp2 = F.generate("minus1-meixner-pollaczek", {"alpha": al, "gamma": ga}, 2, CTX)
    assert poly_eq(mp2[2], Poly([-(ga * ga + al + MP.mpf("0.5")), 0, 1]), CTX)


def test_closed_form_basics():
    for fid in ("hermite", "gegenbauer", "continuous-bannai-ito", "symmetric-bannai-ito"):
        params = P(fid, **F.fixture_points(fid)[0])
        assert F.closed_form(fid, params, 0, CTX).degree == 0

    leg2 = F.closed_form("gegenbauer", P("gegenbauer", alpha="0.5"), 2, CTX)
    assert poly_eq(leg2, Poly([-MP.mpf(1) / 3, 0, 1]), CTX)

    h2 = F.closed_form("hermite", {}, 2, CTX)
    assert poly_eq(h2, Poly([-MP.mpf("0.5"), 0, 1]), CTX)


def test_closed_form_matches_recurrence_all_families():
    for fid in F.family_ids():
        if fid in ("big-q-jacobi", "little-q-jacobi-dilated", "continuous-q-hahn",
                   "q-meixner-pollaczek"):
            continue          # recurrence-only entries
        params = P(fid, **F.fixture_points(fid)[0])
        polys = F.generate(fid, params, 10, CTX)
        for n in range(11):
            cf = F.closed_form(fid, params, n, CTX)
            assert poly_rel_distance(polys[n], cf) <= CTX.tol(10), (fid, n)


def test_closed_form_leading_coefficient_is_one():
    # the printed prefactors make the raw form monic, except that the
    # little -1 Jacobi odd block (and its special-alpha=0 child) comes out
    # with leading coefficient -1
    for fid in ("hermite", "gegenbauer", "chihara", "generalized-symmetric-bannai-ito",
                "symmetric-bannai-ito", "little-minus1-jacobi", "big-minus1-jacobi",
                "special-little-minus1-jacobi", "continuous-bannai-ito",
                "continuous-complementary-bannai-ito"):
        params = P(fid, **F.fixture_points(fid)[0])
        for n in (1, 3, 4, 7):
            _, lead = F.closed_form(fid, params, n, CTX, raw=True)
            expected = 1
            if n % 2 and fid in ("little-minus1-jacobi", "special-little-minus1-jacobi"):
                expected = (-1) ** ((n - 1) // 2 + 1)
            assert abs(lead - expected) <= CTX.tol(8) * 10, (fid, n, lead)


def test_parity_symmetric_families():
    for fid in ("generalized-symmetric-bannai-ito", "symmetric-bannai-ito",
                "generalized-gegenbauer", "gegenbauer", "generalized-hermite", "hermite"):
        params = P(fid, **F.fixture_points(fid)[0])
        polys = F.generate(fid, params, 8, CTX)
        for n, p in enumerate(polys):
            flipped = p.reflect().scale(MP.mpf(-1) ** n)
            assert poly_eq(flipped, p, CTX), (fid, n)


def test_gamma_reflection_covariance():
    # P_n(-x; ..., -gamma) = (-1)^n P_n(x; ..., gamma)
    for fid, base in (("chihara", {"alpha": "0.5", "beta": "1.5"}),
                      ("minus1-meixner-pollaczek", {"alpha": "0.75"})):
        plus = P(fid, **{**base, "gamma": "0.4"})
        minus = P(fid, **{**base, "gamma": "-0.4"})
        pp = F.generate(fid, plus, 8, CTX)
        pm = F.generate(fid, minus, 8, CTX)
        for n in range(9):
            lhs = pm[n].reflect()
            rhs = pp[n].scale(MP.mpf(-1) ** n)
            assert poly_eq(lhs, rhs, CTX), (fid, n)


def test_decomposition_consistency_random_points():
    rng = random.Random(99)
    for _ in range(20):
        al = MP.mpf(repr(rng.uniform(0.2, 3.0)))
        be = MP.mpf(repr(rng.uniform(0.2, 3.0)))
        c = MP.mpf(repr(rng.uniform(0.0, 0.9)))
        for fid, params in (("little-minus1-jacobi", {"alpha": al, "beta": be}),
                            ("big-minus1-jacobi", {"alpha": al, "beta": be, "c": c}),
                            ("special-little-minus1-jacobi", {"alpha": al})):
            n = rng.randint(1, 12)
            pair = F.recurrence(fid, params, n, CTX)
            prev = F.recurrence(fid, params, n - 1, CTX)
            assert abs(pair.b - (1 - pair.A - pair.C)) <= CTX.tol(8)
            assert abs(pair.u - prev.A * pair.C) <= CTX.tol(8) * max(1, abs(pair.u))


def test_weight_spec_hermite():
    spec = F.weight_spec("hermite", {}, CTX)
    (comp,) = spec.components
    assert MP.isinf(comp.lo) and MP.isinf(comp.hi)
    assert comp.decay_lo == "gaussian"
    assert abs(spec.density(MP.mpf(1)) - MP.exp(MP.mpf(-1))) < CTX.tol(6)


def test_weight_spec_chihara_support():
    spec = F.weight_spec("chihara", P("chihara", alpha="0.5", beta="1", gamma="0.25"), CTX)
    lo0, hi0 = spec.components[0].lo, spec.components[0].hi
    lo1, hi1 = spec.components[1].lo, spec.components[1].hi
    top = MP.sqrt(MP.mpf(17)) / 4
    assert abs(lo0 + top) < CTX.tol(6) and abs(hi0 + MP.mpf("0.25")) < CTX.tol(6)
    assert abs(lo1 - MP.mpf("0.25")) < CTX.tol(6) and abs(hi1 - top) < CTX.tol(6)


def test_gsbi_density_formula():
    # |Gamma(ix) Gamma(1+ix)^3 / Gamma(2ix)|^2 at a = b = c = 1, full line
    spec = F.weight_spec("gsbi", P("gsbi", a="1", b="1", c="1"), CTX)
    (comp,) = spec.components
    assert MP.isinf(comp.lo) and MP.isinf(comp.hi)
    x = MP.mpf("0.7")
    ix = MP.mpc(0, 1) * x
    direct = abs(MP.gamma(ix) * MP.gamma(1 + ix) ** 3 / MP.gamma(2 * ix)) ** 2
    assert abs(spec.density(x) - direct) <= CTX.tol(6) * direct


def test_weight_density_nonnegative_on_support():
    rng = random.Random(3)
    for fid in F.orthogonal_ids():
        params = P(fid, **F.fixture_points(fid)[0])
        spec = F.weight_spec(fid, params, CTX)
        for comp in spec.components:
            lo = float(comp.lo) if not MP.isinf(comp.lo) else -5.0
            hi = float(comp.hi) if not MP.isinf(comp.hi) else 5.0
            for _ in range(10):
                x = MP.mpf(repr(rng.uniform(lo + 1e-3 * (hi - lo), hi - 1e-3 * (hi - lo))))
                assert spec.density(x) >= 0, (fid, x)


def test_weight_inadmissible():
    with pytest.raises(InadmissibleParameterError):
        F.weight_spec("big-minus1-jacobi", P("big-minus1-jacobi", alpha="0.5", beta="1", c="1.5"), CTX)
    with pytest.raises(NoWeightError):
        F.weight_spec("wilson", P("wilson", a="1", b="1", c="1", d="1"), CTX)


def test_norm_values():
    assert abs(F.norm("hermite", {}, 1, CTX) - MP.sqrt(MP.pi) / 2) < CTX.tol(8)
    assert abs(F.norm("gegenbauer", P("gegenbauer", alpha="0.5"), 0, CTX) - 2) < CTX.tol(8)
    assert abs(F.norm("gsbi", P("gsbi", a="1", b="1", c="1"), 0, CTX) - MP.mpf("0.5")) < CTX.tol(8)


def test_norms_match_recurrence_product():
    # h_n = h_0 u_1 ... u_n ties every printed norm to the recurrence
    for fid in F.orthogonal_ids():
        params = P(fid, **F.fixture_points(fid)[0])
        h = F.norm(fid, params, 0, CTX)
        for n in range(1, 9):
            h = h * MP.re(MP.mpc(F.recurrence(fid, params, n, CTX).u))
            printed = F.norm(fid, params, n, CTX)
            assert abs(printed - h) <= CTX.tol(8) * abs(h), (fid, n)


def test_ccbi_positivity_classification():
    # the GSBI reduction satisfies all three conditions
    rep = F.positivity_conditions_ccbi(
        {"a1": MP.mpf("0.75"), "b1": MP.mpf("0.5"), "a2": MP.mpf("1.25"), "b2": MP.mpf(0)}, CTX)
    assert rep["all_hold"]

    # raw parameters with b2 = 1 and b1 = b3 = b4 = 0 break condition 1
    rep = F.positivity_conditions_ccbi(
        {"a1": MP.mpf(1), "b1": MP.mpf(0), "a3": MP.mpf(1), "b3": MP.mpf(0),
         "a4": MP.mpf(1), "b4": MP.mpf(0), "b2": MP.mpf(1)}, CTX)
    assert not rep["condition1_sum_zero"]

    # generic b2 != 0 (condition 1 satisfied by construction) fails 2 or 3 by n <= 5
    rep = F.positivity_conditions_ccbi(
        {"a1": MP.mpf("0.75"), "b1": MP.mpf("0.5"), "a2": MP.mpf("1.25"), "b2": MP.mpf("0.3")},
        CTX, N=5)
    assert rep["condition1_sum_zero"]
    assert not (rep["condition2_real"] and rep["condition3_real"])
    assert rep["first_nonreal_n"] is not None and rep["first_nonreal_n"] <= 5


def test_eigen_system_errors():
    with pytest.raises(NoEigenSystemError):
        F.eigen_system("ccbi", P("ccbi", **F.fixture_points("ccbi")[0]), CTX)
    with pytest.raises(NoEigenSystemError):
        F.eigen_system("wilson", P("wilson", **F.fixture_points("wilson")[0]), CTX)


def test_helper_families_closed_forms():
    # Wilson / continuous dual Hahn helpers agree with their recurrences
    for fid in ("wilson", "continuous-dual-hahn"):
        params = P(fid, **F.fixture_points(fid)[0])
        polys = F.generate(fid, params, 8, CTX)
        for n in range(9):
            cf = F.closed_form(fid, params, n, CTX)
            assert poly_rel_distance(polys[n], cf) <= CTX.tol(10), (fid, n)


def test_favard_admissible_regions():
    for fid in F.orthogonal_ids():
        for pt in F.fixture_points(fid):
            params = P(fid, **pt)
            for n in range(1, 51):
                u = F.recurrence(fid, params, n, CTX).u
                assert MP.re(MP.mpc(u)) > 0, (fid, pt, n)
