import random

import pytest

from symtensor.catalog import (abelian_series, check_dimension_bounds,
                               evaluate, grassmannian_ideal, groebner_route,
                               hitchin_series, ideal_presentation_for, klein_row,
                               parabolic_hitchin_series, parse_spec,
                               projective_space_dims, projective_space_series,
                               quadric_ideal, ruled_klein, triviality_registry,
                               two_quadrics_series)
from symtensor.errors import IntegrityError, SpecParseError
from symtensor.hilbert import series_eq, series_product


# -- projective space ---------------------------------------------------------


def test_projective_space_dims_examples():
    assert projective_space_dims(1, 6) == (1, 3, 5, 7, 9, 11, 13)
    assert projective_space_dims(2, 1)[1] == 8
    for n in (1, 2, 3, 5):
        assert projective_space_dims(n, 0) == (1,)


def test_projective_space_series_matches_closed_form():
    for n in range(1, 5):
        series = projective_space_series(n)
        assert series.expand(10) == projective_space_dims(n, 10)
        assert series.krull_dim() == 2 * n


# -- grassmannians -------------------------------------------------------------


def test_grassmannian_ideal_contents_rank_one():
    pres = grassmannian_ideal(1, 2)
    assert pres.ctx.nvars == 4
    rendered = {g.render() for g in pres.generators}
    assert "u11 + u22" in rendered                      # trace
    assert pres.ctx.parse("u11*u22 - u12*u21") in pres.generators  # determinant
    # 4 entries of u*u, trace, det; duplicates removed
    assert len(pres.generators) == 6


def test_grassmannian_out_of_range():
    with pytest.raises(ValueError):
        grassmannian_ideal(0, 2)
    with pytest.raises(ValueError):
        grassmannian_ideal(2, 2)


@pytest.mark.parametrize("n,depth", [(2, 8), (3, 6)])
def test_rank_one_route_equals_projective_closed_form(n, depth):
    _, _, series = groebner_route(grassmannian_ideal(1, n))
    assert series.expand(depth) == projective_space_dims(n - 1, depth)


def test_grassmannian_2_4_flags_and_char_coefficients():
    pres = grassmannian_ideal(2, 4)
    assert pres.ctx.nvars == 16
    degrees = sorted({g.degree() for g in pres.generators})
    assert degrees == [1, 2, 3, 4]     # trace .. determinant plus quadrics/cubics
    spec = parse_spec("Gr(2,4)")
    report = evaluate(spec, max_degree=4)
    assert report.krull == 8
    assert "radicality-assumed" in report.flags


# -- quadrics --------------------------------------------------------------------


def test_quadric_ideal_small():
    pres = quadric_ideal(1)
    assert pres.ctx.names == ("p12", "p13", "p23")
    assert [g.render() for g in pres.generators] == ["p12^2 + p13^2 + p23^2"]
    _, _, series = groebner_route(pres)
    assert series.expand(8) == tuple(2 * d + 1 for d in range(9))


def test_quadric_two_matches_kunneth():
    _, _, series = groebner_route(quadric_ideal(2))
    line = projective_space_series(1)
    assert series.expand(8) == series_product(line, line).expand(8)


def test_quadric_three_krull():
    _, _, series = groebner_route(quadric_ideal(3))
    assert series.krull_dim() == 6


def test_quadric_plucker_relation_count():
    pres = quadric_ideal(3)             # dim V = 5: C(5,4) = 5 exchange relations
    assert len(pres.generators) == 6
    assert pres.ctx.nvars == 10


def test_induced_quadric_identity_on_decomposable_bivectors():
    """sum_{i<j} (v_i w_j - v_j w_i)^2 == |v|^2 |w|^2 - (v.w)^2 for q = sum x^2."""
    rng = random.Random(4)
    for _ in range(100):
        dim = rng.randint(2, 6)
        v = [rng.randint(-5, 5) for _ in range(dim)]
        w = [rng.randint(-5, 5) for _ in range(dim)]
        lhs = sum((v[i] * w[j] - v[j] * w[i]) ** 2
                  for i in range(dim) for j in range(i + 1, dim))
        rhs = sum(x * x for x in v) * sum(x * x for x in w) \
            - sum(a * b for a, b in zip(v, w)) ** 2
        assert lhs == rhs


# -- closed-form families ----------------------------------------------------------


def test_two_quadrics_series_examples():
    assert two_quadrics_series(3).expand(4) == (1, 0, 3, 0, 6)
    assert two_quadrics_series(1).expand(4) == (1, 0, 1, 0, 1)
    for n in (1, 2, 3, 4):
        assert two_quadrics_series(n).krull_dim() == n


def test_abelian_series_examples():
    assert abelian_series(1).expand(4) == (1, 1, 1, 1, 1)
    assert abelian_series(2).expand(3) == (1, 2, 3, 4)
    for n in (1, 2, 3):
        assert abelian_series(n).krull_dim() == n


def test_hitchin_bridge_and_examples():
    bridge = hitchin_series(2, 2, 1, fixed_det=True)
    assert series_eq(bridge, two_quadrics_series(3))
    rank_one = hitchin_series(3, 1, 1)
    assert rank_one.den_weights == (1, 1, 1)
    assert rank_one.expand(3) == (1, 3, 6, 10)
    g2r3 = hitchin_series(2, 3, 1)
    assert g2r3.den_weights == (1, 1, 2, 2, 2, 3, 3, 3, 3, 3)


def test_hitchin_validity_errors():
    with pytest.raises(SpecParseError):
        hitchin_series(2, 2, 2)          # gcd(r, d) != 1
    with pytest.raises(ValueError):
        hitchin_series(1, 2, 1)          # genus too small


def test_parabolic_examples():
    for mode in ("literal", "sympow"):
        series, valid = parabolic_hitchin_series(4, 1, 3, mode)
        assert valid is True
        assert series.den_weights == (1, 1, 1, 1)
    literal, valid = parabolic_hitchin_series(4, 2, 1, "literal")
    assert valid is True
    assert literal.den_weights == (1, 1, 1, 1, 2, 2, 2, 2)
    sympow, _ = parabolic_hitchin_series(4, 2, 1, "sympow")
    assert sympow.den_weights.count(2) == 10


@pytest.mark.parametrize("g,r,expect", [(4, 1, True), (3, 3, True), (3, 2, False),
                                        (2, 5, True), (2, 4, False)])
def test_parabolic_validity_flag(g, r, expect):
    _, valid = parabolic_hitchin_series(g, r, 1)
    assert valid is expect


def test_parabolic_bad_mode():
    with pytest.raises(ValueError):
        parabolic_hitchin_series(4, 2, 1, "other")


# -- triviality registry -------------------------------------------------------------


def test_triviality_registry():
    for reason in ("c1_zero_finite_pi1", "general_type", "ruled_general_bundle"):
        entry = triviality_registry(reason)
        assert entry.series.expand(5) == (1, 0, 0, 0, 0, 0)
        assert "constant-algebra" in entry.flags
    hyper = triviality_registry("hypersurface", degree=3, dimension=2)
    assert hyper.series.expand(3) == (1, 0, 0, 0)
    assert "claimed-vanishing-includes-degree-zero" in hyper.flags
    with pytest.raises(SpecParseError):
        triviality_registry("hypersurface", degree=2, dimension=2)
    with pytest.raises(SpecParseError):
        triviality_registry("nonsense")


# -- klein table -----------------------------------------------------------------------


def test_klein_rows():
    for n in range(2, 7):
        row = klein_row("BD", n)
        assert row.is_weighted_homogeneous()
        assert row.relation_degree() == 4 * n + 4
    a4 = klein_row("2T")
    assert a4.degrees == (4, 4, 6)
    assert not a4.is_weighted_homogeneous()
    assert a4.table_series() is None
    s4 = klein_row("2O")
    assert s4.relation_degree() == 24
    a5 = klein_row("2I")
    assert a5.relation_degree() == 60
    assert a5.table_series().render() == "(1 - t^60) / ((1 - t^12) (1 - t^20) (1 - t^30))"


def test_ruled_klein_dihedral():
    report = ruled_klein("BD", 2)
    assert report.row_consistent and report.match is True
    assert report.molien.dims[4] == 2
    assert all(d == 0 for d in report.molien.dims[1::2])
    assert report.matching_rows == ("D_2",)


def test_ruled_klein_tetrahedral_reports_discrepancy():
    report = ruled_klein("2T")
    assert not report.row_consistent
    assert report.match is None and report.table_series is None
    assert report.molien.matched == (6, 8, 12, 24)
    assert report.matching_rows == ("S4",)


def test_ruled_klein_octahedral_differs_from_stated_row():
    report = ruled_klein("2O")
    assert report.row_consistent
    assert report.match is False
    assert report.molien.matched == (8, 12, 18, 36)
    assert report.matching_rows == ()


def test_ruled_klein_icosahedral_matches():
    report = ruled_klein("2I")
    assert report.match is True
    assert report.matching_rows == ("A5",)


# -- bounds -----------------------------------------------------------------------------


def test_check_dimension_bounds():
    report = check_dimension_bounds(parse_spec("2Q(3)"), two_quadrics_series(3))
    assert report.krull == 3 and report.upper == 6
    ab = check_dimension_bounds(parse_spec("Ab(2)"), abelian_series(2))
    assert ab.liu_bound == 2 and ab.liu_equality is True
    _, _, q3 = groebner_route(quadric_ideal(3))
    quad = check_dimension_bounds(parse_spec("Q(3)"), q3)
    assert quad.homogeneous_equality is True
    bad = abelian_series(3)          # krull 3 > 2 = dim of Ab(2): violates kappa bound
    with pytest.raises(IntegrityError):
        check_dimension_bounds(parse_spec("Ab(2)"), bad)


# -- spec grammar -------------------------------------------------------------------------


@pytest.mark.parametrize("text", ["Pn(2)", "Gr(2,4)", "Q(3)", "2Q(3)", "Ab(2)",
                                  "Hitchin(g=2,r=2,d=1,fixed)",
                                  "ParHitchin(g=4,r=2,s=1,mode=literal)",
                                  "Klein(BD,2)", "Klein(2I)", "Prod(Pn(1),Pn(1))",
                                  "Prod(Prod(Ab(1),Ab(1)),Pn(1))",
                                  "Trivial(general_type)"])
def test_parse_round_trip(text):
    spec = parse_spec(text)
    assert parse_spec(spec.text()) == spec


@pytest.mark.parametrize("bad", ["Nope(1)", "Pn()", "Pn(0)", "Gr(2,2)", "Gr(2)",
                                 "Hitchin(g=2,r=2,d=2)", "Hitchin(g=2,r=2)",
                                 "Klein(BD)", "Klein(2I,3)", "Klein(XX)",
                                 "Prod(Pn(1))", "Pn(1) extra", "Pn(x)",
                                 "ParHitchin(g=4,r=2,s=1,mode=weird)", ""])
def test_parse_rejects(bad):
    with pytest.raises(SpecParseError):
        parse_spec(bad)


def test_parameter_caps_and_force():
    with pytest.raises(SpecParseError):
        evaluate(parse_spec("Q(4)"), max_degree=2)
    with pytest.raises(SpecParseError):
        evaluate(parse_spec("Gr(1,5)"), max_degree=2)
    report = evaluate(parse_spec("Q(4)"), max_degree=2, force=True)
    assert report.coefficients[0] == 1 and report.krull == 8


# -- evaluation ------------------------------------------------------------------------------


def test_evaluate_product():
    report = evaluate(parse_spec("Prod(Pn(1),Pn(1))"), max_degree=6)
    assert report.coefficients == (1, 6, 19, 44, 85, 146, 231)
    assert report.krull == 4


def test_evaluate_trivial():
    report = evaluate(parse_spec("Trivial(general_type)"), max_degree=4)
    assert report.coefficients == (1, 0, 0, 0, 0)
    assert report.krull == 0


def test_evaluate_klein_coefficients_truncate_and_extend():
    short = evaluate(parse_spec("Klein(BD,2)"), max_degree=6)
    assert short.coefficients == (1, 0, 0, 0, 2, 0, 1)
    long = evaluate(parse_spec("Klein(BD,2)"), max_degree=70)
    assert len(long.coefficients) == 71
    assert long.series.expand(70) == long.coefficients


def test_every_catalog_series_has_unit_constant_and_nonnegative_dims():
    texts = ["Pn(1)", "Pn(3)", "Gr(1,2)", "Q(1)", "2Q(2)", "Ab(3)",
             "Hitchin(g=2,r=2,d=1)", "ParHitchin(g=2,r=5,s=2,mode=sympow)",
             "Klein(2T)", "Prod(Ab(1),Pn(1))", "Trivial(ruled_general_bundle)"]
    for text in texts:
        report = evaluate(parse_spec(text), max_degree=8)
        assert report.coefficients[0] == 1, text
        assert all(c >= 0 for c in report.coefficients), text


def test_spec_dimensions():
    assert parse_spec("Gr(2,4)").dim_x() == 4
    assert parse_spec("Hitchin(g=2,r=2,d=1,fixed)").dim_x() == 3
    assert parse_spec("Hitchin(g=2,r=2,d=1)").dim_x() == 5
    assert parse_spec("ParHitchin(g=4,r=2,s=1)").dim_x() == 14
    assert parse_spec("Klein(2O)").dim_x() == 2
    assert parse_spec("Prod(Ab(2),Pn(1))").dim_x() == 3


def test_ideal_presentation_for():
    assert ideal_presentation_for(parse_spec("Gr(1,2)")) is not None
    assert ideal_presentation_for(parse_spec("Q(2)")) is not None
    assert ideal_presentation_for(parse_spec("2Q(3)")) is None
    assert ideal_presentation_for(parse_spec("Klein(2T)")) is None
