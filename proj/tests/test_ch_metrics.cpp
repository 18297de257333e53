#include <doctest.h>

#include "diastasis/ch_metrics.hpp"

using namespace dia;

namespace {

HermSeries x_of(unsigned var, unsigned nvars, unsigned order) {
    HermSeries s(nvars, order);
    MultiIndex e(nvars, 0);
    e[var] = 1;
    s.set(e, e, GRat(1));
    return s;
}

}  // namespace

TEST_CASE("ch potentials against direct formulas") {
    unsigned H = 8;
    CHDomain d1 = ch_domain("CH1", {Rat(1)});
    // g on CH^1 base, mu = 1: -log(1 - |z|^2 - |w|^2), the CH^2 hyperbolic potential
    HermSeries inner = HermSeries::one(2, H) - x_of(0, 2, H) - x_of(1, 2, H);
    CHECK(ch_potential(d1, CHKind::g, H).diastasis.series == -series_log(inner));

    // dual trick commutes with the constructors
    CHECK(ch_potential(d1, CHKind::g_star, H).diastasis.series ==
          dual_diastasis(ch_potential(d1, CHKind::g, H).diastasis).series);
    CHECK(ch_potential(d1, CHKind::ghat_star, H).diastasis.series ==
          dual_diastasis(ch_potential(d1, CHKind::ghat, H).diastasis).series);

    // g_star: log(1 + |z|^2 + |w|^2)
    HermSeries dual_inner = HermSeries::one(2, H) + x_of(0, 2, H) + x_of(1, 2, H);
    CHECK(ch_potential(d1, CHKind::g_star, H).diastasis.series == series_log(dual_inner));

    // ghat on mu = 2: -log((1-|z|^2)^2 - |w|^2) - log (1-|z|^2)^2
    CHDomain d2 = ch_domain("CH1", {Rat(2)});
    HermSeries base = HermSeries::one(2, H) - x_of(0, 2, H);
    HermSeries base2 = series_mul(base, base);
    HermSeries expect = -series_log(base2 - x_of(1, 2, H)) - series_log(base2);
    CHECK(ch_potential(d2, CHKind::ghat, H).diastasis.series ==
          normalize_diastasis(expect).series);

    // no forbidden monomials in any kind (Kahler duals exist)
    for (CHKind k : {CHKind::g, CHKind::ghat, CHKind::g_star, CHKind::ghat_star})
        CHECK(scan_forbidden(ch_potential(d2, k, H).diastasis).empty());

    // ghat_star additivity: (g_star series of the CH part) + (base dual series)
    HermSeries npow = generic_norm_series_pow(rank1_ball(1), Rat(2), H);
    HermSeries nd = lift_vars(substitute_negate_bar(npow), 2, H);
    HermSeries gstar_part = series_log(nd + x_of(1, 2, H));
    HermSeries base_dual = series_log(nd);
    CHECK(ch_potential(d2, CHKind::ghat_star, H).diastasis.series ==
          normalize_diastasis(gstar_part + base_dual).series);
}

TEST_CASE("block structure") {
    CHDomain d = ch_domain("CH1", {Rat(1)});
    for (CHKind k : {CHKind::ghat, CHKind::g}) {
        BlockReport rep = verify_block_structure(ch_potential(d, k, 4), Rat(1), 4);
        CHECK(rep.all_cross_blocks_zero);
        CHECK(rep.checked_entries > 0);
        for (const auto& v : rep.fiber_diagonal) CHECK(v == GRat(1));  // (1-|w|^2)^{-1}
    }
    // alpha = 1/2 scales the fiber block to (1-|w|^2)^{-1/2} coefficients
    BlockReport rep = verify_block_structure(ch_potential(d, CHKind::ghat, 6), Rat(1, 2), 6);
    REQUIRE(rep.fiber_diagonal.size() == 3);
    for (unsigned s = 1; s <= 3; ++s)
        CHECK(rep.fiber_diagonal[s - 1] == GRat(binomial(Rat(1, 2) + (long)s - 1, s)));
    CHECK_THROWS_AS(verify_block_structure(ch_potential(d, CHKind::g_star, 4), Rat(1), 4),
                    std::invalid_argument);
}

TEST_CASE("fiber derivative identity") {
    CHDomain d = ch_domain("CH1", {Rat(1)});
    CHECK(fiber_derivative_identity(d, Rat(1), 0, 6));
    CHECK(fiber_derivative_identity(d, Rat(1), 1, 8));
    CHECK(fiber_derivative_identity(d, Rat(1, 2), 2, 8));
    CHECK(rising_factorial(Rat(1, 2), 2) == Rat(3, 4));  // the s=2, alpha=1/2 factor
    CHDomain dm = ch_domain("CH1", {Rat(3, 2)});
    CHECK(fiber_derivative_identity(dm, Rat(2), 1, 8));
}

TEST_CASE("metric sum identity") {
    CHECK(metric_sum_identity(ch_domain("CH1", {Rat(1)}), 4));
    CHECK(metric_sum_identity(ch_domain("CH1", {Rat(2)}), 4));
    // fiber-fiber and mixed components agree between ghat and g directly
    CHDomain d = ch_domain("CH1", {Rat(1)});
    unsigned H = 6;
    auto hg = hessian(ch_potential(d, CHKind::g, H).diastasis.series);
    auto hghat = hessian(ch_potential(d, CHKind::ghat, H).diastasis.series);
    CHECK(hghat[1][1] == hg[1][1]);  // pullback has no fiber component
    CHECK(hghat[0][1] == hg[0][1]);
    CHECK(hghat[1][0] == hg[1][0]);
}

TEST_CASE("rank-1 compactification") {
    Rank1Report r1 = rank1_compactification_check(1, 6);  // reduces to CP^1
    CHECK(r1.veronese_norm_exact);
    CHECK(r1.pullback_matches_dual);
    Rank1Report r2 = rank1_compactification_check(2, 6);
    CHECK(r2.veronese_norm_exact);
    CHECK(r2.pullback_matches_dual);
    CHECK_THROWS_AS(rank1_compactification_check(0, 6), std::invalid_argument);
}

TEST_CASE("generalized potentials reduce to the irreducible case") {
    unsigned H = 6;
    CHDomain prod = ch_domain("prod:[CH1]:mu=[2]", {Rat(2)});
    CHDomain single = ch_domain("CH1", {Rat(2)});
    for (CHKind k : {CHKind::g, CHKind::ghat, CHKind::g_star, CHKind::ghat_star})
        CHECK(ch_potential(prod, k, H).diastasis.series ==
              ch_potential(single, k, H).diastasis.series);

    // two-factor potential against the direct product-norm formula
    CHDomain two = ch_domain("prod:[CH1,CH1]:mu=[1,2]", {Rat(1), Rat(2)});
    HermSeries npow = two.base_norm_pow(H);
    HermSeries w2(3, H);
    w2.set(MultiIndex{0, 0, 1}, MultiIndex{0, 0, 1}, GRat(1));
    CHECK(ch_potential(two, CHKind::g, H).diastasis.series ==
          normalize_diastasis(-series_log(lift_vars(npow, 3, H) - w2)).series);
}
