#include "diastasis/inducibility.hpp"

#include <algorithm>

namespace dia {

// ---------------------------------------------------------------------------
// dense univariate rational series, for the expansion witnesses and the ODE
// residual (real series in a single formal variable)

namespace {

struct RatSeries {
    std::vector<Rat> c;  // c[h] is the coefficient of X^h

    explicit RatSeries(unsigned order) : c(order + 1, Rat(0)) {}
    unsigned order() const { return (unsigned)c.size() - 1; }

    static RatSeries constant(unsigned order, const Rat& v) {
        RatSeries s(order);
        s.c[0] = v;
        return s;
    }
    static RatSeries x(unsigned order) {
        RatSeries s(order);
        if (order >= 1) s.c[1] = 1;
        return s;
    }

    RatSeries operator+(const RatSeries& o) const {
        RatSeries r(std::min(order(), o.order()));
        for (unsigned h = 0; h <= r.order(); ++h) r.c[h] = c[h] + o.c[h];
        return r;
    }
    RatSeries operator*(const RatSeries& o) const {
        RatSeries r(std::min(order(), o.order()));
        for (unsigned i = 0; i <= r.order(); ++i) {
            if (sgn(c[i]) == 0) continue;
            for (unsigned j = 0; i + j <= r.order(); ++j) r.c[i + j] += c[i] * o.c[j];
        }
        return r;
    }
    RatSeries scaled(const Rat& s) const {
        RatSeries r = *this;
        for (auto& v : r.c) v *= s;
        return r;
    }
    RatSeries derivative() const {
        RatSeries r(order() == 0 ? 0 : order() - 1);
        for (unsigned h = 1; h <= order(); ++h) r.c[h - 1] = c[h] * (long)h;
        return r;
    }
    RatSeries inverse() const {
        if (sgn(c[0]) == 0) throw std::domain_error("RatSeries: inverting a non-unit");
        RatSeries r(order());
        r.c[0] = 1 / c[0];
        for (unsigned h = 1; h <= order(); ++h) {
            Rat acc(0);
            for (unsigned j = 1; j <= h; ++j) acc += c[j] * r.c[h - j];
            r.c[h] = -acc / c[0];
        }
        return r;
    }
    RatSeries pow_nat(unsigned k) const {
        RatSeries r = constant(order(), Rat(1));
        for (unsigned t = 0; t < k; ++t) r = r * *this;
        return r;
    }
    RatSeries exp() const {
        if (sgn(c[0]) != 0) throw std::domain_error("RatSeries::exp: nonzero constant term");
        RatSeries r = constant(order(), Rat(1)), term = r;
        for (unsigned k = 1; k <= order(); ++k) {
            term = (term * *this).scaled(Rat(1, (long)k));
            r = r + term;
        }
        return r;
    }
    RatSeries log() const {
        if (c[0] != 1) throw std::domain_error("RatSeries::log: constant term is not 1");
        RatSeries u = *this;
        u.c[0] = 0;
        RatSeries r(order()), upow = constant(order(), Rat(1));
        for (unsigned k = 1; k <= order(); ++k) {
            upow = upow * u;
            r = r + upow.scaled(Rat(k % 2 ? 1 : -1, (long)k));
        }
        return r;
    }
    RatSeries pow_rational(const Rat& q) const { return log().scaled(q).exp(); }
};

/// (1 - X)^q as an exact series: coefficients C(q,h)(-1)^h.
RatSeries one_minus_x_pow(const Rat& q, unsigned order) {
    RatSeries s(order);
    for (unsigned h = 0; h <= order; ++h) s.c[h] = binomial(q, h) * (h % 2 ? -1 : 1);
    return s;
}

/// (1 + X)^q.
RatSeries one_plus_x_pow(const Rat& q, unsigned order) {
    RatSeries s(order);
    for (unsigned h = 0; h <= order; ++h) s.c[h] = binomial(q, h);
    return s;
}

}  // namespace

// ---------------------------------------------------------------------------

static Decision decide_shifted(const CartanDomain& d, const Rat& start, const Rat& mu,
                               const std::string& rule) {
    if (sgn(mu) <= 0 || sgn(start) <= 0)
        throw std::invalid_argument("decision: parameters must be positive");
    WallachSet w = wallach_set(d);
    Decision dec{true, rule, {}, std::nullopt};
    Rat threshold = w.threshold();
    // values (start + s) mu are increasing; membership is monotone above the
    // threshold, so only s with (start + s) mu <= threshold need enumeration
    for (long s = 0;; ++s) {
        Rat v = (start + s) * mu;
        dec.checked.push_back(v);
        if (!w.member_excluding_zero(v)) {
            dec.verdict = false;
            dec.failure = {s, v};
            return dec;
        }
        if (v > threshold) return dec;
    }
}

Decision decide_g_infinite(const CartanDomain& d, const Rat& alpha, const Rat& mu) {
    return decide_shifted(d, alpha, mu, "(alpha+s)mu in W\\{0} for all s>=0");
}

Decision decide_ghat_infinite(const CartanDomain& d, const Rat& alpha, const Rat& mu) {
    return decide_shifted(d, Rat(2 * alpha), mu, "(2alpha+s)mu in W\\{0} for all s>=0");
}

Decision decide_dual_finite(const Rat& alpha, const std::vector<Rat>& mu) {
    Decision dec{true, "alpha and every mu_j positive integers", {}, std::nullopt};
    dec.checked.push_back(alpha);
    if (!is_positive_integer(alpha)) {
        dec.verdict = false;
        dec.failure = {-1, alpha};
        return dec;
    }
    for (size_t j = 0; j < mu.size(); ++j) {
        dec.checked.push_back(mu[j]);
        if (!is_positive_integer(mu[j])) {
            dec.verdict = false;
            dec.failure = {(long)j, mu[j]};
            return dec;
        }
    }
    return dec;
}

/// Closed-route coefficient A_h of Psi: sum_p C(kb,p) * ff(pa/b, h), h > 0;
/// A_0 = 2^{kb}.
static Rat psi_A(unsigned a, unsigned b, unsigned k, unsigned h) {
    unsigned kb = k * b;
    Rat acc(0);
    for (unsigned p = 0; p <= kb; ++p) {
        Rat base = Rat((long)p * (long)a, (long)b);
        acc += binomial(Rat((long)kb), p) * (h == 0 ? Rat(1) : falling_factorial(base, h));
    }
    return acc;
}

static Rat psi_B(unsigned a, unsigned b, unsigned k, unsigned h, unsigned p) {
    return binomial(Rat((long)k * b), p) * falling_factorial(Rat((long)p * a, (long)b), h);
}

ExpansionWitness psi_expansion(unsigned a, unsigned b, unsigned k, unsigned order) {
    if (a == 0 || b == 0 || k == 0) throw std::invalid_argument("psi_expansion: positive a,b,k");
    mpz_class g;
    mpz_gcd_ui(g.get_mpz_t(), mpz_class((long)a).get_mpz_t(), b);
    if (g != 1) throw std::invalid_argument("psi_expansion: gcd(a,b) = 1 required");
    unsigned kb = k * b;
    // route (i): series power via exp(q log(1+x)), independent of the closed
    // falling-factorial sums of route (ii)
    RatSeries onepx = RatSeries::constant(order, Rat(1)) + RatSeries::x(order);
    RatSeries psi = (onepx.pow_rational(Rat((long)a, (long)b)) +
                     RatSeries::constant(order, Rat(1)))
                        .pow_nat(kb);
    // route (ii): closed sums
    ExpansionWitness w{a, b, k, {}, std::nullopt};
    for (unsigned h = 0; h <= order; ++h) {
        Rat closed = psi_A(a, b, k, h) / factorial(h);
        if (closed != psi.c[h])
            throw std::logic_error("psi_expansion: series route and closed sum disagree");
        w.coefficients.push_back(closed);
        if (!w.first_negative && sgn(closed) < 0) w.first_negative = h;
    }
    if (psi.c[0] != pow_int(Rat(2), (long)kb))
        throw std::logic_error("psi_expansion: A_0 != 2^{kb}");
    return w;
}

RatioReport psi_ratio_limit(unsigned a, unsigned b, unsigned k, unsigned order) {
    if (a % b == 0) throw std::invalid_argument("psi_ratio_limit: a/b must not be an integer");
    RatioReport rep;
    std::vector<int> signs;
    for (unsigned h = 1; h <= order; ++h) {
        Rat A = psi_A(a, b, k, h);
        Rat B1 = psi_B(a, b, k, h, 1);
        if (sgn(B1) == 0) throw std::logic_error("psi_ratio_limit: B_{h,1} vanished");
        rep.ratios.push_back(Rat(A / B1));
        signs.push_back(sgn(A));
    }
    // last h (1-based) with sign(A_{h+1}) == sign(A_h) or a zero involved
    unsigned start = 1;
    for (unsigned h = 0; h + 1 < signs.size(); ++h)
        if (signs[h] == 0 || signs[h + 1] == 0 || signs[h] == signs[h + 1]) start = h + 2;
    rep.alternation_start = start;
    return rep;
}

ExpansionWitness propalphamu_witness(unsigned a, unsigned b, unsigned k, unsigned order) {
    if (a == 0 || b == 0 || k == 0)
        throw std::invalid_argument("propalphamu_witness: positive a,b,k");
    unsigned bk = b * k;
    // e^D = ((1+x)^{a/2b} + 1)^{bk} (1+x)^{ak/2} / 2^{bk}
    RatSeries onepx = RatSeries::constant(order, Rat(1)) + RatSeries::x(order);
    RatSeries f = (onepx.pow_rational(Rat((long)a, 2L * b)) +
                   RatSeries::constant(order, Rat(1)))
                      .pow_nat(bk) *
                  onepx.pow_rational(Rat((long)a * k, 2));
    f = f.scaled(pow_int(Rat(1, 2), (long)bk));
    f.c[0] -= 1;  // e^D - 1
    ExpansionWitness w{a, b, k, {}, std::nullopt};
    for (unsigned h = 0; h <= order; ++h) {
        w.coefficients.push_back(f.c[h]);
        if (!w.first_negative && sgn(f.c[h]) < 0) w.first_negative = h;
    }
    return w;
}

KECondition ke_condition(const CHDomain& d) {
    KECondition out{{}, true, true};
    unsigned n = d.base_dim();
    auto push = [&](const CartanDomain& f) {
        out.mu_ke.push_back(Rat((long)f.gamma, (long)n + 1));
        Rat bound = Rat((long)f.gamma, (long)f.n + 1);
        if (bound > 1) out.bound_holds = false;
        if (bound != 1) out.equality = false;
    };
    if (d.base.is_product)
        for (const auto& f : d.base.product.factors) push(f);
    else
        push(d.base.single);
    return out;
}

Rat csc_sum(const ProductDomain& p) {
    unsigned n = p.dimension();
    Rat acc(0);
    for (size_t j = 0; j < p.factors.size(); ++j) {
        if (sgn(p.mu[j]) <= 0) throw std::invalid_argument("csc_sum: mu_j must be positive");
        acc += (Rat((long)n + 1) - Rat((long)p.factors[j].gamma) / p.mu[j]) *
               Rat((long)p.factors[j].n);
    }
    return acc;
}

bool csc_condition(const ProductDomain& p) { return sgn(csc_sum(p)) == 0; }

OdeResidual ode_residual(const Rat& gamma, const Rat& mu, unsigned n, unsigned d_param,
                         unsigned order) {
    Rat coef = Rat(-(gamma + mu) / ((mu + 1) * ((long)d_param + 2)));
    // h = coef * log(1-X); X h' = -coef X/(1-X); [X h']' = -coef/(1-X)^2
    RatSeries inv = one_minus_x_pow(Rat(-1), order);
    RatSeries xh1 = (RatSeries::x(order) * inv).scaled(Rat(-coef));
    RatSeries bracket = (inv * inv).scaled(Rat(-coef));
    RatSeries lhs_base = xh1.scaled(mu) +
                         RatSeries::constant(order, Rat((gamma + mu) / ((long)d_param + 2)));
    RatSeries L = lhs_base.pow_nat(d_param) * bracket;
    // R = e^{(n+2)h} = (1-X)^{(n+2)coef}
    RatSeries R = one_minus_x_pow(Rat(((long)n + 2) * coef), order);
    RatSeries ratio = L * R.inverse();
    OdeResidual res{true, ratio.c, std::nullopt};
    for (unsigned h = 1; h <= ratio.order(); ++h)
        if (sgn(ratio.c[h]) != 0) {
            res.ratio_constant = false;
            res.first_nonconstant_index = h;
            break;
        }
    return res;
}

CrossValidation cross_validate(const CHDomain& d, const Rat& alpha, CHKind kind, unsigned order) {
    if (d.base.is_product)
        throw std::invalid_argument("cross_validate: irreducible base required");
    CrossValidation cv;
    switch (kind) {
        case CHKind::g: cv.decision = decide_g_infinite(d.base.single, alpha, d.mu[0]); break;
        case CHKind::ghat: cv.decision = decide_ghat_infinite(d.base.single, alpha, d.mu[0]); break;
        case CHKind::g_star:
        case CHKind::ghat_star: cv.decision = decide_dual_finite(alpha, d.mu); break;
    }
    CHPotential p = ch_potential(d, kind, order);
    Diastasis scaled{p.diastasis.series.scaled(GRat(alpha))};
    cv.series = projective_witness(scaled, order);
    // a positive decision must see a PSD truncation; a negative one must be
    // refuted at some order <= H for the grid points exercised in tests
    cv.agree = cv.decision.verdict == !cv.series.refuted;
    return cv;
}

long minimal_integer_alpha(const CartanDomain& d, const Rat& mu, CHKind kind) {
    // once alpha mu (resp. 2 alpha mu) clears the threshold the verdict is
    // positive, so the scan terminates
    for (long alpha = 1;; ++alpha) {
        Decision dec = kind == CHKind::ghat ? decide_ghat_infinite(d, Rat(alpha), mu)
                                            : decide_g_infinite(d, Rat(alpha), mu);
        if (dec.verdict) return alpha;
    }
}

}  // namespace dia
