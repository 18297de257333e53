#include "diastasis/ch_metrics.hpp"

namespace dia {

HermSeries CHDomain::base_norm_pow(unsigned order) const {
    if (base.is_product) {
        ProductDomain p = base.product;
        if (mu.size() != p.factors.size())
            throw std::invalid_argument("CHDomain: mu vector length mismatch");
        p.mu = mu;
        return generic_norm_series(p, order);
    }
    if (mu.size() != 1) throw std::invalid_argument("CHDomain: irreducible base needs one mu");
    return generic_norm_series_pow(base.single, mu[0], order);
}

CHDomain ch_domain(const std::string& base_descriptor, const std::vector<Rat>& mu) {
    CHDomain d;
    d.base = parse_domain(base_descriptor);
    d.mu = mu;
    for (const auto& m : mu)
        if (sgn(m) <= 0) throw std::invalid_argument("CHDomain: mu must be positive");
    return d;
}

CHKind ch_kind_from_string(const std::string& s) {
    if (s == "g") return CHKind::g;
    if (s == "ghat") return CHKind::ghat;
    if (s == "g_star" || s == "dual_g") return CHKind::g_star;
    if (s == "ghat_star" || s == "dual_ghat") return CHKind::ghat_star;
    throw parse_error("unknown metric kind: '" + s + "'");
}

std::string ch_kind_name(CHKind k) {
    switch (k) {
        case CHKind::g: return "g";
        case CHKind::ghat: return "ghat";
        case CHKind::g_star: return "g_star";
        case CHKind::ghat_star: return "ghat_star";
    }
    return "?";
}

/// |w|^2 as a series over n+1 variables (w last).
static HermSeries fiber_square(unsigned nvars, unsigned order) {
    HermSeries s(nvars, order);
    MultiIndex e(nvars, 0);
    e[nvars - 1] = 1;
    s.set(e, e, GRat(1));
    return s;
}

CHPotential ch_potential(const CHDomain& d, CHKind kind, unsigned order) {
    unsigned nv = d.ambient_vars();
    HermSeries npow = lift_vars(d.base_norm_pow(order), nv, order);
    HermSeries w2 = fiber_square(nv, order);
    HermSeries pot(nv, order);
    switch (kind) {
        case CHKind::g:
            pot = -series_log(npow - w2);
            break;
        case CHKind::ghat:
            pot = -series_log(npow - w2) - series_log(npow);
            break;
        case CHKind::g_star:
            pot = series_log(substitute_negate_bar(npow) + w2);
            break;
        case CHKind::ghat_star: {
            HermSeries nd = substitute_negate_bar(npow);
            pot = series_log(nd + w2) + series_log(nd);
            break;
        }
    }
    return CHPotential{kind, normalize_diastasis(pot)};
}

BlockReport verify_block_structure(const CHPotential& p, const Rat& alpha, unsigned order) {
    if (p.kind != CHKind::g && p.kind != CHKind::ghat)
        throw std::invalid_argument("verify_block_structure: kind must be g or ghat");
    Diastasis scaled{p.diastasis.series.scaled(GRat(alpha))};
    CalabiMatrix m = calabi_matrix(scaled, order, /*fiber_blocks=*/true);
    BlockReport rep{true, 0, {}, std::nullopt};
    for (unsigned r = 0; r < m.size(); ++r)
        for (unsigned c = 0; c < m.size(); ++c) {
            if (m.block_key(r) == m.block_key(c)) continue;
            ++rep.checked_entries;
            if (!m.entries[r][c].is_zero()) {
                rep.all_cross_blocks_zero = false;
                if (!rep.violation) rep.violation = {m.basis[r], m.basis[c]};
            }
        }
    unsigned nv = p.diastasis.series.nvars();
    for (unsigned s = 1; 2 * s <= order; ++s) {
        MultiIndex e(nv, 0);
        e[nv - 1] = s;
        for (unsigned idx = 0; idx < m.size(); ++idx)
            if (m.basis[idx] == e) rep.fiber_diagonal.push_back(m.entries[idx][idx]);
    }
    return rep;
}

bool fiber_derivative_identity(const CHDomain& d, const Rat& alpha, unsigned s, unsigned order) {
    unsigned nv = d.ambient_vars();
    HermSeries npow = lift_vars(d.base_norm_pow(order), nv, order);
    HermSeries w2 = fiber_square(nv, order);
    HermSeries g = series_mul(series_pow_rational(npow, Rat(-alpha)),
                              series_pow_rational(npow - w2, Rat(-alpha)));
    // lhs: s!^2 * (w^s wbar^s slice of g), a series in the base variables
    HermSeries slice = fiber_slice(g, s, s).scaled(GRat(factorial(s) * factorial(s)));
    // rhs: s! alpha(alpha+1)...(alpha+s-1) N^{-(2 alpha + s) mu}
    Rat rising = rising_factorial(alpha, s);
    CHDomain scaled = d;
    for (auto& m : scaled.mu) m *= (2 * alpha + (long)s);
    HermSeries rhs = series_pow_rational(scaled.base_norm_pow(order), Rat(-1))
                         .scaled(GRat(Rat(factorial(s) * rising)));
    return slice.truncated(order - 2 * s) == rhs.truncated(order - 2 * s);
}

std::vector<std::vector<HermSeries>> hessian(const HermSeries& d) {
    unsigned n = d.nvars();
    std::vector<std::vector<HermSeries>> h(n, std::vector<HermSeries>(n));
    for (unsigned p = 0; p < n; ++p) {
        HermSeries dp = d.wirtinger(p, false);
        for (unsigned q = 0; q < n; ++q) h[p][q] = dp.wirtinger(q, true);
    }
    return h;
}

bool metric_sum_identity(const CHDomain& d, unsigned order) {
    unsigned nv = d.ambient_vars();
    HermSeries pg = ch_potential(d, CHKind::g, order).diastasis.series;
    HermSeries pghat = ch_potential(d, CHKind::ghat, order).diastasis.series;
    // pullback of the base potential -log N^mu (no fiber dependence)
    HermSeries base_pot = lift_vars(-series_log(d.base_norm_pow(order)), nv, order);
    auto hg = hessian(pg), hghat = hessian(pghat), hbase = hessian(base_pot);
    for (unsigned p = 0; p < nv; ++p)
        for (unsigned q = 0; q < nv; ++q)
            if (!(hghat[p][q] == hg[p][q] + hbase[p][q])) return false;
    return true;
}

Rank1Report rank1_compactification_check(unsigned mu, unsigned order) {
    if (mu < 1) throw std::invalid_argument("rank1_compactification_check: mu must be a positive integer");
    Rank1Report rep{true, false};
    // |F(z)|^2 = sum_k C(mu,k) |z|^{2k} with F_k = sqrt(C(mu,k)) z^k, F_0 = 1
    HermSeries vf(1, order);
    for (unsigned k = 0; k <= mu; ++k) {
        MultiIndex e{k};
        vf.set(e, e, GRat(binomial(Rat((long)mu), k)));
    }
    HermSeries onepx = HermSeries::one(1, order);
    {
        MultiIndex e{1};
        onepx.set(e, e, GRat(1));
    }
    rep.veronese_norm_exact = (vf == series_pow_nat(onepx, mu));

    // pulled-back potential log(|F|^2/|F_0|^2 + |w|^2) + log(|F|^2/|F_0|^2)
    HermSeries vf2 = lift_vars(vf, 2, order);
    HermSeries w2(2, order);
    w2.set(MultiIndex{0, 1}, MultiIndex{0, 1}, GRat(1));
    Diastasis pulled = normalize_diastasis(series_log(vf2 + w2) + series_log(vf2));

    CHDomain d = ch_domain("CH1", {Rat((long)mu)});
    CHPotential ghat_star = ch_potential(d, CHKind::ghat_star, order);
    rep.pullback_matches_dual = (pulled.series == ghat_star.diastasis.series);
    return rep;
}

}  // namespace dia
