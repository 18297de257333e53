#include <doctest.h>

#include "diastasis/curvature.hpp"
#include "diastasis/domains.hpp"

using namespace dia;

TEST_CASE("structural constants") {
    CartanDomain b1 = rank1_ball(1);
    CHECK(b1.r == 1);
    CHECK(b1.a == 2);
    CHECK(b1.b == 0);
    CHECK(b1.n == 1);
    CHECK(b1.gamma == 2);

    CartanDomain i22 = type_I(2, 2);
    CHECK(i22.r == 2);
    CHECK(i22.a == 2);
    CHECK(i22.b == 0);
    CHECK(i22.n == 4);
    CHECK(i22.gamma == 4);

    CHECK(rank1_ball(3).gamma == 4);
    CHECK(type_III(2).a == 1);
    CHECK(type_III(2).r == 2);
    CHECK(exceptional_EVI().n == 16);
    CHECK(exceptional_EVI().gamma == 12);
    CHECK(exceptional_EVII().n == 27);
    CHECK(exceptional_EVII().gamma == 18);

    for (const CartanDomain& d : catalog_samples()) CHECK(constants_consistent(d));

    CHECK_THROWS_AS(type_I(3, 2), std::invalid_argument);
}

TEST_CASE("wallach membership") {
    WallachSet r1{2, 1};  // a=2, r=1: {0} u (0, inf)
    CHECK(r1.member(Rat(3, 10)));
    CHECK(r1.member_excluding_zero(Rat(3, 10)));
    CHECK(r1.member(Rat(0)));
    CHECK_FALSE(r1.member_excluding_zero(Rat(0)));

    WallachSet a1r2{1, 2};  // {0, 1/2} u (1/2, inf)
    CHECK_FALSE(a1r2.member(Rat(1, 4)));
    CHECK(a1r2.member(Rat(1, 2)));
    CHECK(a1r2.member(Rat(7, 10)));
    CHECK_THROWS_AS(a1r2.member(Rat(-1)), std::invalid_argument);

    // monotone above the threshold
    WallachSet a2r3{2, 3};
    Rat t = a2r3.threshold();
    for (long k = 1; k <= 20; ++k) CHECK(a2r3.member(Rat(t + Rat(k, 7))));
}

TEST_CASE("generic norms") {
    unsigned H = 6;
    // CH^2: 1 - |z1|^2 - |z2|^2
    HermSeries n2 = generic_norm_series(rank1_ball(2), H);
    HermSeries expect = HermSeries::one(2, H);
    expect.set(MultiIndex{1, 0}, MultiIndex{1, 0}, GRat(-1));
    expect.set(MultiIndex{0, 1}, MultiIndex{0, 1}, GRat(-1));
    CHECK(n2 == expect);

    // I(2,2) against a hand-built 2x2 determinant oracle:
    // det(I - Z Z*) for Z = [[z1, z2], [z3, z4]]
    unsigned m = 4;
    auto z = [&](unsigned k) { return Poly::var_z(m, k); };
    Poly one = Poly::constant(m, GRat(1));
    Poly a11 = one - z(0) * z(0).conj() - z(1) * z(1).conj();
    Poly a12 = -(z(0) * z(2).conj()) - z(1) * z(3).conj();
    Poly a21 = -(z(2) * z(0).conj()) - z(3) * z(1).conj();
    Poly a22 = one - z(2) * z(2).conj() - z(3) * z(3).conj();
    Poly det = a11 * a22 - a12 * a21;
    CHECK(generic_norm_series(type_I(2, 2), H) == det.to_series(H));

    // exceptional domains are catalog-only
    CHECK_THROWS_AS(generic_norm_series(exceptional_EVI(), 4), std::domain_error);
}

TEST_CASE("product norms") {
    unsigned H = 6;
    ProductDomain p{{rank1_ball(1), rank1_ball(1)}, {Rat(1), Rat(2)}};
    HermSeries n = generic_norm_series(p, H);
    // (1 - |z1|^2)(1 - |z2|^2)^2
    HermSeries f1 = HermSeries::one(2, H);
    f1.set(MultiIndex{1, 0}, MultiIndex{1, 0}, GRat(-1));
    HermSeries f2 = HermSeries::one(2, H);
    f2.set(MultiIndex{0, 1}, MultiIndex{0, 1}, GRat(-1));
    CHECK(n == series_mul(f1, series_mul(f2, f2)));
}

TEST_CASE("domain diastasis is normal form") {
    for (auto d : {rank1_ball(1), rank1_ball(3), type_I(2, 2)}) {
        Diastasis dd = domain_diastasis(d, 6);
        CHECK(normalize_diastasis(dd.series).series == dd.series);
        CHECK(scan_forbidden(dd).empty());
    }
}

TEST_CASE("series-level Einstein self-consistency") {
    // Ric(g_Omega) = -gamma g_Omega at series level
    for (auto d : {rank1_ball(1), rank1_ball(2)}) {
        Diastasis dd = domain_diastasis(d, 8);
        RicciSeries r = ricci_series(dd, 8);
        CHECK(r.series == dd.series.truncated(6).scaled(GRat(Rat(-(long)d.gamma))));
    }
    CartanDomain i22 = type_I(2, 2);
    Diastasis dd = domain_diastasis(i22, 6);
    RicciSeries r = ricci_series(dd, 6);
    CHECK(r.series == dd.series.truncated(4).scaled(GRat(Rat(-4))));
}

TEST_CASE("domain descriptors") {
    CHECK(parse_domain("CH3").single.n == 3);
    CHECK(parse_domain("CHn:3").single.n == 3);
    CHECK(parse_domain("I:2x2").single.family == Family::TypeI);
    CHECK(parse_domain("III:2").single.a == 1);
    CHECK(parse_domain("IV:5").single.gamma == 5);
    DomainSpec p = parse_domain("prod:[CH1,CH1]:mu=[1,2]");
    REQUIRE(p.is_product);
    CHECK(p.product.factors.size() == 2);
    CHECK(p.product.mu[1] == Rat(2));
    CHECK_THROWS_AS(parse_domain("bogus"), parse_error);
    CHECK_THROWS_AS(parse_domain("prod:[CH1]:mu=[1,2]"), parse_error);
}
