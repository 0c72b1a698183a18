import random

import pytest

from minusone.precision import PrecisionContext
from minusone.polynomials import Poly, RationalFunction, poly_eq
from minusone import families as F
from minusone import operators as O

CTX = PrecisionContext(50)
MP = CTX.mp


def params_for(fid, idx=0):
    return F.make_params(fid, CTX, **F.fixture_points(fid)[idx])


def test_apply_identity():
    op = O.DunklOperator(terms=[(RationalFunction(Poly.constant(MP.mpc(1))), "I")],
                         shift=MP.mpc(0, 1))
    p = Poly([MP.mpc(2), MP.mpc(0), MP.mpc(1)])
    out = O.apply(op, p, CTX).is_polynomial(CTX)
    assert poly_eq(out, p, CTX)


def test_hermite_operator_coefficients():
    # S = -1/4, U = x/2, V = eps/2 - 1/4
    es = F.eigen_system("hermite", {}, CTX, free="0.5")
    coeffs = {sym: c for c, sym in es.operator.terms}
    x0 = MP.mpf("0.3")
    assert abs(coeffs["dx2"].evaluate(x0) + MP.mpf("0.25")) < CTX.tol(8)
    assert abs(coeffs["dx"].evaluate(x0) - x0 / 2) < CTX.tol(8)
    eps = MP.mpf("0.5")
    assert abs(coeffs["I"].evaluate(x0) - (eps / 2 - MP.mpf("0.25"))) < CTX.tol(8)
    assert abs(coeffs["R"].evaluate(x0) + (eps / 2 - MP.mpf("0.25"))) < CTX.tol(8)


def test_hermite_operator_low_degrees():
    es = F.eigen_system("hermite", {}, CTX, free="0.5")
    one = Poly.constant(MP.mpc(1))
    img = O.apply(es.operator, one, CTX).is_polynomial(CTX)
    assert img.coeff_norm() <= CTX.tol(10)          # lambda_0 = 0

    x = Poly.x(CTX)
    img = O.apply(es.operator, x, CTX).is_polynomial(CTX)
    eps = MP.mpf("0.5")
    assert poly_eq(img, x.scale(eps), CTX)          # lambda_1 = eps


def test_eigen_verification_all_operator_families():
    for fid in O._BUILDERS:
        params = params_for(fid)
        for n in range(7):
            rep = O.verify_eigen(fid, params, n, CTX, free="0.5")
            assert rep["status"] == "pass", (fid, n, rep)
            assert rep["residual"] <= 1e-40


def test_eigen_second_free_value():
    for fid in ("gegenbauer", "generalized-symmetric-bannai-ito"):
        params = params_for(fid)
        for n in (1, 3, 5):
            rep = O.verify_eigen(fid, params, n, CTX, free="2")
            assert rep["status"] == "pass", (fid, n)


def test_gegenbauer_eigenvalue_split():
    es = F.eigen_system("gegenbauer", F.make_params("gegenbauer", CTX, alpha="0.5"), CTX,
                        free="0.5")
    al, eps = MP.mpf("0.5"), MP.mpf("0.5")
    for m in range(4):
        assert abs(es.eigenvalue(2 * m) - (m * m + al * m)) < CTX.tol(8)
        assert abs(es.eigenvalue(2 * m + 1) - (m * m + (al + 1) * m + eps)) < CTX.tol(8)


def test_gsbi_first_odd_eigenvalue_is_sigma():
    es = F.eigen_system("gsbi", F.make_params("gsbi", CTX, a="1", b="1", c="1"), CTX, free="0.5")
    assert abs(es.eigenvalue(1) - MP.mpf("0.5")) < CTX.tol(8)


def test_linearity():
    es = F.eigen_system("chihara", params_for("chihara"), CTX, free="0.5")
    rng = random.Random(5)
    p = Poly([MP.mpc(repr(rng.uniform(-1, 1))) for _ in range(5)])
    q = Poly([MP.mpc(repr(rng.uniform(-1, 1))) for _ in range(4)])
    lhs = O.apply(es.operator, p + q, CTX).reduce(CTX)
    rhs = (O.apply(es.operator, p, CTX) + O.apply(es.operator, q, CTX)).reduce(CTX)
    diff = (lhs - rhs).reduce(CTX).is_polynomial(CTX)
    assert diff is not None and diff.coeff_norm() <= CTX.tol(6) * max(1, lhs.num.coeff_norm())


def test_sigma_shift_law():
    # D_sigma - D_0 = sigma/2 (I - R), exactly (up to arithmetic noise even
    # when both sides vanish, as on even-degree members)
    from minusone.polynomials import poly_distance

    for fid in ("generalized-symmetric-bannai-ito", "symmetric-bannai-ito"):
        params = params_for(fid)
        sigma = MP.mpf("0.7")
        d_sig = F.eigen_system(fid, params, CTX, free=sigma).operator
        d_zero = F.eigen_system(fid, params, CTX, free="0").operator
        polys = F.generate(fid, params, 5, CTX)
        for p in polys:
            lhs = (O.apply(d_sig, p, CTX) - O.apply(d_zero, p, CTX)).reduce(CTX).is_polynomial(CTX)
            rhs = (p - p.reflect()).scale(sigma / 2)
            assert lhs is not None
            assert poly_distance(lhs, rhs) <= CTX.tol(6) * max(1, p.coeff_norm()), fid


def test_conjugate_pair_coefficients():
    # the S-R coefficient is the complex conjugate of the S+R coefficient
    rng = random.Random(11)
    for fid in ("continuous-minus1-hahn-1", "continuous-minus1-hahn-2", "continuous-bannai-ito"):
        es = F.eigen_system(fid, params_for(fid), CTX)
        coeffs = {sym: c for c, sym in es.operator.terms}
        for _ in range(20):
            x = MP.mpf(repr(rng.uniform(-3, 3)))
            a_plus = coeffs["S+R"].evaluate(x)
            a_minus = coeffs["S-R"].evaluate(x)
            assert abs(MP.conj(a_plus) - a_minus) <= CTX.tol(6) * max(1, abs(a_plus)), fid


def test_resolve_composition_convention():
    params = params_for("continuous-bannai-ito")
    rep = O.resolve_composition_convention("cbi", params, CTX)
    passing = [o for o in rep["outcomes"] if o["passes"]]
    assert len(passing) == 1
    assert passing[0]["variant"]["composition"] == O.SHIFT_AFTER_REFLECT
    # fixed convention then verifies at higher degrees
    for n in (8, 9, 10):
        assert O.verify_eigen("cbi", params, n, CTX)["status"] == "pass"


def test_operator_matrix_diagonality():
    for fid in ("hermite", "chihara", "continuous-minus1-hahn-1", "symmetric-bannai-ito"):
        rep = O.check_diagonality(fid, params_for(fid), 8, CTX)
        assert rep["max_offdiag"] <= rep["tolerance"], fid
        assert rep["max_diag_error"] <= rep["tolerance"], fid


def test_first_order_families_resolved_reading():
    # the [R - I] bracket of the Jacobi-type operators resolves to [I - R]
    # with the derivative taken after the reflection
    for fid in ("big-minus1-jacobi", "little-minus1-jacobi", "special-little-minus1-jacobi"):
        variant = O._resolve_variant(fid, CTX)["variant"]
        assert variant == {"dxr": O.OUTER_DIFF, "bracket": "IR"}, fid
