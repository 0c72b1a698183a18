from minusone.precision import PrecisionContext
from minusone import families as F
from minusone import orthogonality as orth

CTX = PrecisionContext(50)
MP = CTX.mp


def test_hermite_gram_diagonal():
    rep = orth.gram("hermite", {}, 2, CTX)
    expected = [MP.sqrt(MP.pi), MP.sqrt(MP.pi) / 2, MP.sqrt(MP.pi) / 2]
    for n in range(3):
        assert abs(rep["matrix"][n][n] - expected[n]) < MP.mpf("1e-30")
    assert rep["max_offdiag"] < 1e-30


def test_legendre_mass():
    rep = orth.gram("gegenbauer", F.make_params("gegenbauer", CTX, alpha="0.5"), 0, CTX)
    assert abs(rep["matrix"][0][0] - 2) < MP.mpf("1e-30")


def test_p0_p1_orthogonal_across_families():
    for fid in ("little-minus1-jacobi", "minus1-meixner-pollaczek", "symmetric-bannai-ito"):
        params = F.make_params(fid, CTX, **F.fixture_points(fid)[0])
        rep = orth.gram(fid, params, 1, CTX)
        assert rep["max_offdiag"] < 1e-25, fid


def test_gamma_weight_gram():
    params = F.make_params("continuous-minus1-hahn-1", CTX,
                           **F.fixture_points("continuous-minus1-hahn-1")[0])
    rep = orth.gram("continuous-minus1-hahn-1", params, 4, CTX)
    assert rep["converged"]
    assert rep["max_offdiag"] <= 1e-25
    assert rep["max_diag_error"] <= 1e-17


def test_favard_scan_examples():
    rep = orth.favard_scan("generalized-gegenbauer",
                           F.make_params("generalized-gegenbauer", CTX, alpha="0", beta="1"),
                           200, CTX)
    assert rep["pass"] and rep["min_u"] > 0

    rep = orth.favard_scan("hermite", {}, 200, CTX)
    assert rep["pass"]
    assert abs(rep["min_u"] - 0.5) < 1e-12

    ccbi = F.make_params("ccbi", CTX, a1="0.75", b1="0.5", a2="1.25", b2="1")
    rep = orth.favard_scan("ccbi", ccbi, 10, CTX)
    assert not rep["pass"]
    assert rep["first_nonreal_n"] is not None


def test_moment_crosscheck_oracle():
    # quadrature moments against the recurrence-implied moments
    for fid, pt in (("little-minus1-jacobi", {"alpha": "0.5", "beta": "1.5"}),
                    ("hermite", {})):
        params = F.make_params(fid, CTX, **pt)
        rep = orth.moment_crosscheck(fid, params, 6, CTX)
        assert rep["max_relative_error"] <= 1e-30, (fid, rep)


def test_moments_from_recurrence_hermite():
    moments = orth.moments_from_recurrence("hermite", {}, 4, CTX)
    rt_pi = MP.sqrt(MP.pi)
    assert abs(moments[0] - rt_pi) < CTX.tol(8)
    assert abs(moments[1]) < CTX.tol(8)
    assert abs(moments[2] - rt_pi / 2) < CTX.tol(8)
    assert abs(moments[4] - 3 * rt_pi / 4) < CTX.tol(8)
