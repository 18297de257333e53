#include <doctest.h>

#include <random>

#include "diastasis/series.hpp"

using namespace dia;

namespace {

HermSeries x_series(unsigned order) {  // |z|^2 in one variable
    HermSeries s(1, order);
    s.set(MultiIndex{1}, MultiIndex{1}, GRat(1));
    return s;
}

HermSeries one_plus_x(unsigned order) { return HermSeries::one(1, order) + x_series(order); }

HermSeries one_minus_x(unsigned order) { return HermSeries::one(1, order) - x_series(order); }

/// Random sparse hermitian series with zero constant term.
HermSeries random_series(std::mt19937& rng, unsigned nvars, unsigned order, bool forbidden_free) {
    HermSeries s(nvars, order);
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3), exp(0, 2);
    for (int t = 0; t < 6; ++t) {
        MultiIndex i(nvars), j(nvars);
        for (unsigned k = 0; k < nvars; ++k) {
            i[k] = exp(rng);
            j[k] = exp(rng);
        }
        if (norm(i) + norm(j) == 0 || norm(i) + norm(j) > order) continue;
        if (forbidden_free && (norm(i) % 2) != (norm(j) % 2)) continue;
        GRat c(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
        s.add_term(i, j, c);
        s.add_term(j, i, c.conj());
    }
    return s;
}

}  // namespace

TEST_CASE("series multiplication basics") {
    unsigned H = 6;
    HermSeries a = one_plus_x(H);
    HermSeries sq = series_mul(a, a);
    HermSeries expect = HermSeries::one(1, H);
    expect.set(MultiIndex{1}, MultiIndex{1}, GRat(2));
    expect.set(MultiIndex{2}, MultiIndex{2}, GRat(1));
    CHECK(sq == expect);

    std::mt19937 rng(7);
    HermSeries r = random_series(rng, 2, 6, false);
    CHECK(series_mul(r, HermSeries::one(2, 6)) == r);

    CHECK_THROWS_AS(series_mul(a, HermSeries::one(2, 6)), std::invalid_argument);
}

TEST_CASE("telescoping product") {
    // (1 - x) * sum_{h<=H} x^h == 1 after truncation
    unsigned H = 8;
    HermSeries geom(1, H);
    for (unsigned h = 0; h <= H; ++h) {
        if (2 * h > H) break;
        geom.set(MultiIndex{h}, MultiIndex{h}, GRat(1));
    }
    // the geometric series of |z|^2 keeps terms with 2h <= H; use order 2H to
    // hold all of them, then truncate the product
    HermSeries geom_full(1, 2 * H);
    for (unsigned h = 0; h <= H; ++h) geom_full.set(MultiIndex{h}, MultiIndex{h}, GRat(1));
    HermSeries prod = series_mul(one_minus_x(2 * H), geom_full).truncated(2 * H - 1);
    CHECK(prod == HermSeries::one(1, 2 * H - 1));
}

TEST_CASE("series exp") {
    unsigned H = 10;
    CHECK(series_exp(HermSeries(1, H)) == HermSeries::one(1, H));
    HermSeries e = series_exp(x_series(H));
    for (unsigned h = 0; 2 * h <= H; ++h)
        CHECK(e.coeff(MultiIndex{h}, MultiIndex{h}) == GRat(Rat(1) / factorial(h)));
    // exp(-log(1-x)) = geometric series
    HermSeries g = series_exp(-series_log(one_minus_x(H)));
    for (unsigned h = 0; 2 * h <= H; ++h)
        CHECK(g.coeff(MultiIndex{h}, MultiIndex{h}) == GRat(1));
    CHECK_THROWS_AS(series_exp(HermSeries::one(1, H)), std::invalid_argument);
}

TEST_CASE("series log") {
    unsigned H = 10;
    CHECK(series_log(HermSeries::one(1, H)).is_zero());
    HermSeries l = series_log(one_plus_x(H));
    for (unsigned h = 1; 2 * h <= H; ++h)
        CHECK(l.coeff(MultiIndex{h}, MultiIndex{h}) == GRat(Rat(h % 2 ? 1 : -1, (long)h)));
    CHECK_THROWS_AS(series_log(x_series(H)), std::invalid_argument);
}

TEST_CASE("exp log round trips on random series") {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 5; ++rep) {
        HermSeries s = random_series(rng, 2, 8, false);
        CHECK(series_log(series_exp(s)) == s);
        HermSeries onep = HermSeries::one(2, 8) + s;
        CHECK(series_exp(series_log(onep)) == onep);
    }
}

TEST_CASE("rational powers") {
    unsigned H = 10;
    HermSeries r = series_pow_rational(one_plus_x(H), Rat(1, 2));
    for (unsigned h = 0; 2 * h <= H; ++h)
        CHECK(r.coeff(MultiIndex{h}, MultiIndex{h}) == GRat(binomial(Rat(1, 2), h)));
    CHECK(series_pow_rational(one_plus_x(H), Rat(2)) == series_pow_nat(one_plus_x(H), 2));
    // group law and compatibility with natural powers
    HermSeries p = series_pow_rational(one_plus_x(H), Rat(2, 3));
    CHECK(series_mul(p, series_pow_rational(one_plus_x(H), Rat(-2, 3))) ==
          HermSeries::one(1, H));
    CHECK(series_pow_nat(p, 3) == series_pow_rational(one_plus_x(H), Rat(2)));
}

TEST_CASE("substitute_negate_bar") {
    unsigned H = 8;
    HermSeries x = x_series(H);
    CHECK(substitute_negate_bar(x) == -x);
    HermSeries x2 = series_mul(x, x);
    CHECK(substitute_negate_bar(x2) == x2);
    // Fubini-Study from the hyperbolic diastasis
    HermSeries hyp = -series_log(one_minus_x(H));
    CHECK(-substitute_negate_bar(hyp) == series_log(one_plus_x(H)));

    std::mt19937 rng(13);
    for (int rep = 0; rep < 5; ++rep) {
        HermSeries a = random_series(rng, 2, 6, false);
        HermSeries b = random_series(rng, 2, 6, false);
        CHECK(substitute_negate_bar(substitute_negate_bar(a)) == a);
        CHECK(substitute_negate_bar(series_mul(a, b)) ==
              series_mul(substitute_negate_bar(a), substitute_negate_bar(b)));
    }
}

TEST_CASE("ring axioms on random series") {
    std::mt19937 rng(17);
    for (int rep = 0; rep < 4; ++rep) {
        HermSeries a = random_series(rng, 2, 8, false);
        HermSeries b = random_series(rng, 2, 8, false);
        HermSeries c = random_series(rng, 2, 8, false);
        CHECK(series_mul(a, b) == series_mul(b, a));
        CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
        CHECK(series_mul(a, b + c) == series_mul(a, b) + series_mul(a, c));
        CHECK(series_mul(a, b).is_hermitian() == (a.is_hermitian() && b.is_hermitian()));
    }
}

TEST_CASE("series wirtinger derivatives") {
    unsigned H = 6;
    HermSeries x = x_series(H);  // z zbar
    HermSeries dz = x.wirtinger(0, false);
    CHECK(dz.coeff(MultiIndex{0}, MultiIndex{1}) == GRat(1));  // zbar
    CHECK(x.wirtinger(0, true).coeff(MultiIndex{1}, MultiIndex{0}) == GRat(1));
    std::mt19937 rng(19);
    HermSeries r = random_series(rng, 2, 8, false);
    CHECK(r.wirtinger(0, false).wirtinger(1, true) == r.wirtinger(1, true).wirtinger(0, false));
}

TEST_CASE("variable helpers") {
    HermSeries x = x_series(6);
    HermSeries lifted = lift_vars(x, 3, 6);
    CHECK(lifted.coeff(MultiIndex{1, 0, 0}, MultiIndex{1, 0, 0}) == GRat(1));
    CHECK(fiber_slice(lifted, 0, 0) == lift_vars(x, 2, 6));
    HermSeries p = permute_vars(lifted, {2, 1, 0});
    CHECK(p.coeff(MultiIndex{0, 0, 1}, MultiIndex{0, 0, 1}) == GRat(1));
}
