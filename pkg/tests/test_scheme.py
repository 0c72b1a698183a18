import json

from minusone.precision import PrecisionContext
from minusone import families as F
from minusone import scheme as S

CTX = PrecisionContext(50)
MP = CTX.mp

# census of the compendium's connection statements: every entry here must
# have a catalog edge (coverage lock)
EXPECTED_EDGES = {
    # specializations
    ("big-minus1-jacobi", "little-minus1-jacobi"),
    ("chihara", "generalized-gegenbauer"),
    ("little-minus1-jacobi", "special-little-minus1-jacobi"),
    ("generalized-gegenbauer", "gegenbauer"),
    ("minus1-meixner-pollaczek", "generalized-hermite"),
    ("generalized-hermite", "hermite"),
    ("continuous-minus1-hahn-1", "symmetric-bannai-ito"),
    ("continuous-minus1-hahn-2", "symmetric-bannai-ito"),
    ("continuous-bannai-ito", "continuous-minus1-hahn-1"),
    ("continuous-bannai-ito", "continuous-minus1-hahn-2"),
    ("continuous-complementary-bannai-ito", "generalized-symmetric-bannai-ito"),
    # limits
    ("continuous-bannai-ito", "big-minus1-jacobi"),
    ("continuous-complementary-bannai-ito", "chihara"),
    ("generalized-symmetric-bannai-ito", "symmetric-bannai-ito"),
    ("generalized-symmetric-bannai-ito", "generalized-gegenbauer"),
    ("continuous-minus1-hahn-1", "minus1-meixner-pollaczek"),
    ("continuous-minus1-hahn-2", "minus1-meixner-pollaczek"),
    ("chihara", "minus1-meixner-pollaczek"),
    ("generalized-gegenbauer", "generalized-hermite"),
    ("symmetric-bannai-ito", "generalized-hermite"),
    ("gegenbauer", "hermite"),
    # q -> -1 limits
    ("big-q-jacobi", "big-minus1-jacobi"),
    ("big-q-jacobi", "chihara"),
    ("little-q-jacobi-dilated", "little-minus1-jacobi"),
    ("little-q-jacobi-dilated", "generalized-gegenbauer"),
    ("continuous-q-hahn", "continuous-minus1-hahn-1"),
    ("continuous-q-hahn", "continuous-minus1-hahn-2"),
    ("q-meixner-pollaczek", "minus1-meixner-pollaczek"),
    # spectral transformations, both directions
    ("little-minus1-jacobi", "generalized-gegenbauer"),
    ("generalized-gegenbauer", "little-minus1-jacobi"),
    ("special-little-minus1-jacobi", "gegenbauer"),
    ("gegenbauer", "special-little-minus1-jacobi"),
    ("big-minus1-jacobi", "chihara"),
    ("chihara", "big-minus1-jacobi"),
}


def test_catalog_coverage_lock():
    catalog = {(e.source, e.target) for e in S.edge_catalog()}
    missing = EXPECTED_EDGES - catalog
    assert not missing, "edges lacking catalog entries: %s" % missing
    extra = catalog - EXPECTED_EDGES
    assert not extra, "catalog edges without compendium anchor: %s" % extra
    assert len(S.edge_catalog()) == 34
    assert all(e.anchor for e in S.edge_catalog())


def test_edge_resolution_and_aliases():
    e = S.resolve_edge("cbi:big-minus1-jacobi")
    assert e.kind == "limit"


def test_exact_specializations():
    for e in S.edge_catalog():
        if e.kind != "specialization":
            continue
        rep = S.verify_exact(e, 10, CTX)
        assert rep["status"] == "pass", (e.id, rep)


def test_limit_edge_cbi_to_big():
    rep = S.verify_limit("cbi:big-minus1-jacobi", 6, CTX)
    assert rep["status"] == "pass"
    assert rep["order_poly"] >= 1
    assert rep["extrapolated_error"] <= 1e-8
    errs = rep["errors"]
    assert all(errs[k + 1] < errs[k] for k in range(len(errs) - 1))


def test_qlimit_edge_dilated_little():
    rep = S.verify_limit("little-q-jacobi-dilated:little-minus1-jacobi", 6, CTX)
    assert rep["status"] == "pass"
    # first-order ladder; the fitted exponent carries O(eps) fitting slack
    assert rep["order_poly"] >= 0.95


def test_christoffel_low_degree():
    # G_0 = (P_1 - A_0 P_0)/(x - 1) = 1 since P_1 = x - 1 + A_0 (C_0 = 0)
    params = F.make_params("little-minus1-jacobi", CTX, alpha="0.5", beta="1.5")
    g = S.christoffel("little-minus1-jacobi", params, 0, CTX)
    assert g[0].degree == 0
    assert abs(g[0].coeffs[0] - 1) < CTX.tol(8)


def test_ct_gt_pairs():
    for pair in ("little-minus1-jacobi:generalized-gegenbauer",
                 "special-little-minus1-jacobi:gegenbauer",
                 "big-minus1-jacobi:chihara"):
        rep = S.verify_ct_gt(pair, 10, CTX)
        assert rep["status"] == "pass", (pair, rep)


def test_ct_gt_from_geronimus_side():
    rep = S.verify_ct_gt("generalized-gegenbauer:little-minus1-jacobi", 8, CTX)
    assert rep["status"] == "pass"


def test_kernel_recurrence_map():
    rep = S.verify_recurrence_kernel_map(CTX, trials=20)
    assert rep["status"] == "pass"


def test_commuting_squares():
    for which in ("little", "gegenbauer"):
        rep = S.verify_commuting_square(which, CTX)
        assert rep["status"] == "pass", rep
        assert rep["exact_leg_error"] <= 1e-40
        assert rep["order_path_a"] >= 0.9 and rep["order_path_b"] >= 0.9


def test_open_question_resolutions():
    reports = S.resolve_open_questions(CTX)
    by_check = {r["check"]: r for r in reports if not r["check"].endswith("composition")}
    assert by_check["open-question:bn-sign"]["status"] == "pass"
    assert "1 - A_n - C_n" in by_check["open-question:bn-sign"]["notes"]
    assert by_check["open-question:mp-scaling"]["status"] == "pass"
    assert "sqrt(gamma/2)*beta" in by_check["open-question:mp-scaling"]["notes"]
    comp = [r for r in reports if r["check"].endswith("composition")]
    assert len(comp) == 3 and all(r["status"] == "pass" for r in comp)


def test_export_dot():
    dot = S.export_graph("dot")
    assert dot.startswith("digraph")
    # 15 scheme node declarations
    assert sum(1 for line in dot.splitlines() if "[label=" in line and "->" not in line) == 15
    # hermite in-degree at least 2
    indeg = sum(1 for line in dot.splitlines() if '-> "hermite"' in line)
    assert indeg >= 2
    # the spectral-transformation pairs appear in both directions
    assert '"little-minus1-jacobi" -> "generalized-gegenbauer"' in dot
    assert '"generalized-gegenbauer" -> "little-minus1-jacobi"' in dot
    assert "color=blue" in dot


def test_export_json_roundtrip():
    payload = json.loads(S.export_graph("json"))
    assert len(payload["nodes"]) == 15
    assert len(payload["edges"]) == len(S.edge_catalog())
    assert all("anchor" in e for e in payload["edges"])
