#include <doctest.h>

#include <random>

#include "diastasis/calabi.hpp"
#include "diastasis/inducibility.hpp"

using namespace dia;

namespace {

HermSeries x_series(unsigned order) {
    HermSeries s(1, order);
    s.set(MultiIndex{1}, MultiIndex{1}, GRat(1));
    return s;
}

HermSeries one_plus_x(unsigned order) { return HermSeries::one(1, order) + x_series(order); }
HermSeries one_minus_x(unsigned order) { return HermSeries::one(1, order) - x_series(order); }

HermSeries random_diastasis_series(std::mt19937& rng, unsigned nvars, unsigned order,
                                   bool forbidden_free) {
    HermSeries s(nvars, order);
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3), exp(0, 2);
    for (int t = 0; t < 8; ++t) {
        MultiIndex i(nvars), j(nvars);
        for (unsigned k = 0; k < nvars; ++k) {
            i[k] = exp(rng);
            j[k] = exp(rng);
        }
        if (norm(i) == 0 || norm(j) == 0 || norm(i) + norm(j) > order) continue;
        if (forbidden_free && (norm(i) % 2) != (norm(j) % 2)) continue;
        GRat c(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
        s.add_term(i, j, c);
        s.add_term(j, i, c.conj());
    }
    return s;
}

}  // namespace

TEST_CASE("normalize_diastasis") {
    unsigned H = 8;
    // |z|^2 + z + zbar + 3 -> |z|^2
    HermSeries pot = x_series(H);
    pot.add_term(MultiIndex{1}, MultiIndex{0}, GRat(1));
    pot.add_term(MultiIndex{0}, MultiIndex{1}, GRat(1));
    pot.add_term(MultiIndex{0}, MultiIndex{0}, GRat(3));
    CHECK(normalize_diastasis(pot).series == x_series(H));

    HermSeries hyp = -series_log(one_minus_x(H));
    CHECK(normalize_diastasis(hyp).series == hyp);  // already normal

    // log((1+x)^{1/2} + 1) normalizes to itself minus log 2
    HermSeries f = series_pow_rational(one_plus_x(H), Rat(1, 2)) + HermSeries::one(1, H);
    HermSeries lg = series_log(f.scaled(GRat(Rat(1, 2))));  // log(f/2) = log f - log 2
    CHECK(normalize_diastasis(lg).series == lg);            // f/2 form is already normal

    // idempotent + zero pure parts on random hermitian input with pure terms
    std::mt19937 rng(29);
    HermSeries herm = random_diastasis_series(rng, 2, 6, false);
    herm.add_term(MultiIndex{1, 0}, MultiIndex{0, 0}, GRat(2));
    herm.add_term(MultiIndex{0, 0}, MultiIndex{1, 0}, GRat(2));
    Diastasis nd = normalize_diastasis(herm);
    CHECK(normalize_diastasis(nd.series).series == nd.series);
    for (const auto& [k, v] : nd.series.terms()) {
        CHECK(norm(k.i) > 0);
        CHECK(norm(k.j) > 0);
    }

    // non-hermitian input is rejected
    HermSeries bad(1, 4);
    bad.set(MultiIndex{2}, MultiIndex{1}, GRat(1));
    CHECK_THROWS_AS(normalize_diastasis(bad), std::invalid_argument);
}

TEST_CASE("scan_forbidden") {
    unsigned H = 6;
    HermSeries s = x_series(H);
    s.add_term(MultiIndex{2}, MultiIndex{1}, GRat(Rat(1, 2)));
    s.add_term(MultiIndex{1}, MultiIndex{2}, GRat(Rat(1, 2)));
    Diastasis d{s};
    auto forb = scan_forbidden(d);
    REQUIRE(forb.size() == 2);
    CHECK(forb[0].kind_i() == 1);
    CHECK(forb[0].kind_j() == 2);
    CHECK_FALSE(has_kahler_dual(d));
    CHECK_THROWS_AS(dual_diastasis(d), std::domain_error);

    Diastasis hyp = normalize_diastasis(-series_log(one_minus_x(H)));
    CHECK(scan_forbidden(hyp).empty());
}

TEST_CASE("dual_diastasis") {
    unsigned H = 12;
    Diastasis hyp = normalize_diastasis(-series_log(one_minus_x(H)));
    Diastasis dual = dual_diastasis(hyp);
    CHECK(dual.series == series_log(one_plus_x(H)));

    // a*_(1)(1) = -(-1) * 1 = 1
    Diastasis flat{x_series(H)};
    CHECK(dual_diastasis(flat).series == flat.series);

    std::mt19937 rng(31);
    for (int rep = 0; rep < 5; ++rep) {
        Diastasis d{random_diastasis_series(rng, 2, 8, true)};
        Diastasis dd = dual_diastasis(dual_diastasis(d));
        CHECK(dd.series == d.series);
        CHECK(scan_forbidden(dual_diastasis(d)).empty());
        // degree-(1,1) block unchanged
        for (unsigned p = 0; p < 2; ++p)
            for (unsigned q = 0; q < 2; ++q) {
                MultiIndex i(2, 0), j(2, 0);
                i[p] = 1;
                j[q] = 1;
                CHECK(dual_diastasis(d).series.coeff(i, j) == d.series.coeff(i, j));
            }
        // Eq-level parity statement: every stored term of a forbidden-free
        // diastasis has matching norm parities
        for (const auto& [k, v] : d.series.terms())
            CHECK((norm(k.i) % 2) == (norm(k.j) % 2));
    }
}

TEST_CASE("calabi_matrix examples") {
    // d = |z|^2, H = 2: basis (z, z^2), diagonal (1, 1/2)
    Diastasis d{x_series(2)};
    CalabiMatrix m = calabi_matrix(d, 2);
    REQUIRE(m.basis.size() == 2);
    CHECK(m.basis[0] == MultiIndex{1});
    CHECK(m.basis[1] == MultiIndex{2});
    CHECK(m.entries[0][0] == GRat(1));
    CHECK(m.entries[1][1] == GRat(Rat(1, 2)));
    CHECK(m.entries[0][1] == GRat(0));
    CHECK(m.is_hermitian());

    // d = alpha log(1/(1-x)): diagonal C(alpha+h-1, h) [negative binomial]
    Rat alpha(1, 3);
    Diastasis dr{(-series_log(one_minus_x(6))).scaled(GRat(alpha))};
    CalabiMatrix mr = calabi_matrix(dr, 3);
    for (unsigned h = 1; h <= 3; ++h) {
        unsigned idx = h - 1;
        CHECK(mr.entries[idx][idx] == GRat(binomial(alpha + (long)h - 1, h)));
    }
    for (unsigned r = 0; r < mr.size(); ++r)
        for (unsigned c = 0; c < mr.size(); ++c)
            if (r != c) CHECK(mr.entries[r][c] == GRat(0));
}

TEST_CASE("psd_check") {
    CalabiMatrix id;
    id.basis = {MultiIndex{1}, MultiIndex{2}};
    id.entries = {{GRat(1), GRat(0)}, {GRat(0), GRat(1)}};
    CHECK(psd_check(id).psd);

    CalabiMatrix neg = id;
    neg.entries[1][1] = GRat(Rat(-1, 8));
    PsdResult r = psd_check(neg);
    REQUIRE_FALSE(r.psd);
    CHECK(r.witness->row == 1);
    CHECK(r.witness->value == GRat(Rat(-1, 8)));

    CalabiMatrix gram = id;
    gram.entries = {{GRat(1), GRat(1)}, {GRat(1), GRat(1)}};
    CHECK(psd_check(gram).psd);  // rank-1, zero pivot handled

    CalabiMatrix offdiag = id;
    offdiag.entries = {{GRat(0), GRat(1)}, {GRat(1), GRat(0)}};
    PsdResult r2 = psd_check(offdiag);
    REQUIRE_FALSE(r2.psd);
    CHECK(r2.witness->from_minor);
    CHECK(r2.witness->value == GRat(-1));
}

TEST_CASE("projective_witness") {
    unsigned H = 10;
    // (1/2) log(1+x): e^D-1 = (1+x)^{1/2}-1 has C(1/2,2) = -1/8 at degree 2
    Diastasis half{series_log(one_plus_x(H)).scaled(GRat(Rat(1, 2)))};
    ProjectiveVerdict v = projective_witness(half, H);
    REQUIRE(v.refuted);
    CHECK(v.witness_i == MultiIndex{2});
    CHECK(v.witness->value == GRat(Rat(-1, 8)));

    // 2 log(1+x) is the integer case of the compact criterion
    Diastasis two{series_log(one_plus_x(H)).scaled(GRat(2))};
    CHECK_FALSE(projective_witness(two, H).refuted);

    // 2 log(((1+x)^{1/2}+1)/2): refuted at degree 2; the e^D-1 witness is
    // -1/16 = 2^{-bk} times the Psi-expansion coefficient -1/4
    HermSeries f = (series_pow_rational(one_plus_x(H), Rat(1, 2)) + HermSeries::one(1, H))
                       .scaled(GRat(Rat(1, 2)));
    Diastasis psi_pot = normalize_diastasis(series_log(f).scaled(GRat(2)));
    ProjectiveVerdict vp = projective_witness(psi_pot, H);
    REQUIRE(vp.refuted);
    CHECK(vp.witness_i == MultiIndex{2});
    CHECK(vp.witness->value == GRat(Rat(-1, 16)));
    ExpansionWitness ew = psi_expansion(1, 2, 1, 4);
    CHECK(ew.coefficients[2] == Rat(-1, 4));
    CHECK(vp.witness->value == GRat(Rat(ew.coefficients[2] / 4)));

    // radial series against Theorem A: alpha log(1/(1-x)) stays consistent
    for (const Rat& alpha : {Rat(1, 3), Rat(2), Rat(7, 5)}) {
        Diastasis dr{(-series_log(one_minus_x(8))).scaled(GRat(alpha))};
        CHECK_FALSE(projective_witness(dr, 8).refuted);
    }
}

TEST_CASE("radial calabi matrix is diagonal and equals coefficient positivity") {
    // for a radial 1-variable diastasis the witness reduces to the first
    // negative coefficient of e^D - 1
    unsigned H = 8;
    Diastasis half{series_log(one_plus_x(H)).scaled(GRat(Rat(1, 2)))};
    CalabiMatrix m = calabi_matrix(half, H);
    HermSeries e = series_exp(half.series) - HermSeries::one(1, H);
    bool has_negative = false;
    for (unsigned h = 1; 2 * h <= H; ++h) {
        GRat c = e.coeff(MultiIndex{h}, MultiIndex{h});
        CHECK(m.entries[h - 1][h - 1] == c);
        if (c.is_real() && sgn(c.re) < 0) has_negative = true;
    }
    CHECK(has_negative == projective_witness(half, H).refuted);
}
