#include "diastasis/rational_function.hpp"

namespace dia {

static MultiIndex graded_lex_leading(const Poly& p) {
    MultiIndex best;
    bool first = true;
    for (const auto& [e, v] : p.terms()) {
        if (first || norm_lex_less(best, e)) {
            best = e;
            first = false;
        }
    }
    return best;
}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    if (num_.cvars() != den_.cvars())
        throw std::invalid_argument("RationalFunction: variable count mismatch");
    normalize();
}

RationalFunction::RationalFunction(const Poly& num)
    : RationalFunction(num, Poly::constant(num.cvars(), GRat(1))) {}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(den_.cvars(), GRat(1));
        return;
    }
    // cancel the common monomial factor
    MultiIndex low(num_.slots(), 0);
    bool first = true;
    auto lower = [&](const Poly& p) {
        for (const auto& [e, v] : p.terms()) {
            if (first) {
                low = e;
                first = false;
            } else {
                for (size_t k = 0; k < low.size(); ++k) low[k] = std::min(low[k], e[k]);
            }
        }
    };
    lower(num_);
    lower(den_);
    if (norm(low) > 0) {
        auto shift = [&](const Poly& p) {
            Poly r(p.cvars());
            for (const auto& [e, v] : p.terms()) {
                MultiIndex f(e.size());
                for (size_t k = 0; k < e.size(); ++k) f[k] = e[k] - low[k];
                r.add_term(f, v);
            }
            return r;
        };
        num_ = shift(num_);
        den_ = shift(den_);
    }
    // univariate in x: full gcd reduction
    bool univar = true;
    for (const auto& [e, v] : num_.terms())
        for (size_t k = 1; k < e.size(); ++k)
            if (e[k] != 0) univar = false;
    for (const auto& [e, v] : den_.terms())
        for (size_t k = 1; k < e.size(); ++k)
            if (e[k] != 0) univar = false;
    if (univar && num_.cvars() == 1 && !den_.is_constant()) {
        Poly g = x_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = x_divexact(num_, g);
            den_ = x_divexact(den_, g);
        }
    }
    // monic denominator under graded-lex
    GRat lead = den_.coeff(graded_lex_leading(den_));
    if (lead != GRat(1)) {
        GRat inv = GRat(1) / lead;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.num_.is_zero()) throw std::domain_error("RationalFunction: division by zero function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

bool RationalFunction::is_real_valued_on_reals() const {
    for (const auto& [e, v] : num_.terms())
        if (!v.is_real()) return false;
    for (const auto& [e, v] : den_.terms())
        if (!v.is_real()) return false;
    return true;
}

RationalFunction wirtinger_derivative(const RationalFunction& f, unsigned k, bool conjugate) {
    unsigned s = conjugate ? f.cvars() + k : k;
    if (k >= f.cvars()) throw std::invalid_argument("wirtinger_derivative: unknown variable");
    return RationalFunction(f.num().d_slot(s) * f.den() - f.num() * f.den().d_slot(s),
                            f.den() * f.den());
}

RationalFunction restrict_to_line(const RationalFunction& f, const std::vector<GRat>& lambda) {
    bool nonzero = false;
    for (const auto& l : lambda) nonzero = nonzero || !l.is_zero();
    if (!nonzero) throw std::invalid_argument("restrict_to_line: zero direction");
    Poly num = f.num().restrict_line(lambda), den = f.den().restrict_line(lambda);
    auto real_only = [](const Poly& p) {
        for (const auto& [e, v] : p.terms())
            if (!v.is_real()) return false;
        return true;
    };
    if (!real_only(num) || !real_only(den)) {
        // multiply through by the coefficient-conjugate denominator: both
        // sides become real-coefficient exactly when the function is real
        Poly den_c(1);
        for (const auto& [e, v] : den.terms()) den_c.add_term(e, v.conj());
        num = num * den_c;
        den = den * den_c;
        if (!real_only(num) || !real_only(den))
            throw std::logic_error("restrict_to_line: imaginary parts did not cancel");
    }
    return RationalFunction(num, den);
}

std::pair<Poly, Poly> primitive_pair(const RationalFunction& f) {
    // scale so the denominator has coprime integer coefficients and positive
    // leading coefficient; the numerator absorbs the inverse factor
    mpz_class lcm_den(1), gcd_num(0);
    for (const auto& [e, v] : f.den().terms()) {
        if (!v.is_real()) throw std::invalid_argument("primitive_pair: complex denominator");
        mpz_class d = v.re.get_den();
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
    }
    Poly den = f.den().scaled(GRat(Rat(lcm_den)));
    for (const auto& [e, v] : den.terms()) {
        mpz_class n = v.re.get_num();
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), n.get_mpz_t());
    }
    if (gcd_num == 0) gcd_num = 1;
    Rat scale = Rat(lcm_den) / Rat(gcd_num);
    GRat lead = den.coeff(MultiIndex{});
    // positive leading coefficient under graded-lex
    MultiIndex best;
    bool first = true;
    for (const auto& [e, v] : den.terms()) {
        if (first || norm_lex_less(best, e)) {
            best = e;
            first = false;
        }
    }
    if (sgn(den.coeff(best).re) < 0) scale = -scale;
    return {f.num().scaled(GRat(scale)), f.den().scaled(GRat(scale))};
}

}  // namespace dia
