#include "diastasis/polynomial.hpp"

#include <algorithm>

namespace dia {

Poly Poly::constant(unsigned m, const GRat& c) {
    Poly p(m);
    p.add_term(MultiIndex(2 * m, 0), c);
    return p;
}

Poly Poly::var_z(unsigned m, unsigned k) {
    Poly p(m);
    MultiIndex e(2 * m, 0);
    e.at(k) = 1;
    p.add_term(e, GRat(1));
    return p;
}

Poly Poly::var_zbar(unsigned m, unsigned k) {
    Poly p(m);
    MultiIndex e(2 * m, 0);
    e.at(m + k) = 1;
    p.add_term(e, GRat(1));
    return p;
}

bool Poly::is_constant() const {
    return t_.empty() || (t_.size() == 1 && norm(t_.begin()->first) == 0);
}

GRat Poly::coeff(const MultiIndex& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? GRat() : it->second;
}

void Poly::add_term(const MultiIndex& e, const GRat& v) {
    if (e.size() != 2 * m_) throw std::invalid_argument("Poly::add_term: bad exponent length");
    auto it = t_.find(e);
    if (it == t_.end()) {
        if (!v.is_zero()) t_.emplace(e, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) t_.erase(it);
    }
}

unsigned Poly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, v] : t_) d = std::max(d, norm(e));
    return d;
}

std::pair<unsigned, unsigned> Poly::bidegree(const MultiIndex& e, unsigned m) {
    unsigned dz = 0, dzb = 0;
    for (unsigned k = 0; k < m; ++k) dz += e[k];
    for (unsigned k = m; k < 2 * m; ++k) dzb += e[k];
    return {dz, dzb};
}

Poly Poly::operator-() const {
    Poly r(m_);
    for (const auto& [e, v] : t_) r.t_.emplace(e, -v);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (m_ != o.m_) throw std::invalid_argument("Poly: variable count mismatch");
    for (const auto& [e, v] : o.t_) add_term(e, v);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.m_ != b.m_) throw std::invalid_argument("Poly: variable count mismatch");
    Poly r(a.m_);
    for (const auto& [ea, va] : a.t_)
        for (const auto& [eb, vb] : b.t_) {
            MultiIndex e(ea.size());
            for (size_t t = 0; t < e.size(); ++t) e[t] = ea[t] + eb[t];
            r.add_term(e, va * vb);
        }
    return r;
}

Poly Poly::scaled(const GRat& s) const {
    Poly r(m_);
    if (s.is_zero()) return r;
    for (const auto& [e, v] : t_) r.t_.emplace(e, v * s);
    return r;
}

Poly Poly::conj() const {
    Poly r(m_);
    for (const auto& [e, v] : t_) {
        MultiIndex f(2 * m_);
        for (unsigned k = 0; k < m_; ++k) {
            f[k] = e[m_ + k];
            f[m_ + k] = e[k];
        }
        r.add_term(f, v.conj());
    }
    return r;
}

Poly Poly::d_slot(unsigned s) const {
    if (s >= 2 * m_) throw std::invalid_argument("Poly::d_slot: bad slot");
    Poly r(m_);
    for (const auto& [e, v] : t_) {
        if (e[s] == 0) continue;
        MultiIndex f = e;
        f[s] -= 1;
        r.add_term(f, v * GRat(Rat((long)e[s])));
    }
    return r;
}

Poly Poly::restrict_line(const std::vector<GRat>& lambda) const {
    if (lambda.size() != m_) throw std::invalid_argument("restrict_line: bad direction");
    Poly r(1);
    for (const auto& [e, v] : t_) {
        GRat c = v;
        unsigned deg = 0;
        for (unsigned k = 0; k < m_; ++k) {
            for (unsigned t = 0; t < e[k]; ++t) c = c * lambda[k];
            for (unsigned t = 0; t < e[m_ + k]; ++t) c = c * lambda[k].conj();
            deg += e[k] + e[m_ + k];
        }
        MultiIndex f(2, 0);
        f[0] = deg;
        r.add_term(f, c);
    }
    return r;
}

GRat Poly::eval(const std::vector<GRat>& slot_values) const {
    if (slot_values.size() != 2 * m_) throw std::invalid_argument("Poly::eval: bad value count");
    GRat acc;
    for (const auto& [e, v] : t_) {
        GRat term = v;
        for (unsigned s = 0; s < 2 * m_; ++s)
            for (unsigned t = 0; t < e[s]; ++t) term = term * slot_values[s];
        acc += term;
    }
    return acc;
}

HermSeries Poly::to_series(unsigned order) const {
    HermSeries s(m_, order);
    for (const auto& [e, v] : t_) {
        MultiIndex i(e.begin(), e.begin() + m_), j(e.begin() + m_, e.end());
        s.set(i, j, v);
    }
    return s;
}

Poly leading_minor(const std::vector<std::vector<Poly>>& a, unsigned r) {
    if (r == 0 || a.size() < r) throw std::invalid_argument("leading_minor: rank out of range");
    // expansion by minors over the first column of the sub-block
    std::vector<unsigned> rows(r), cols(r);
    for (unsigned k = 0; k < r; ++k) rows[k] = cols[k] = k;
    struct Rec {
        const std::vector<std::vector<Poly>>& a;
        Poly det(std::vector<unsigned> rows, const std::vector<unsigned>& cols, unsigned c0) {
            unsigned m = a[0][0].cvars();
            if (rows.size() == 1) return a[rows[0]][cols[c0]];
            Poly acc(m);
            for (unsigned k = 0; k < rows.size(); ++k) {
                const Poly& piv = a[rows[k]][cols[c0]];
                if (piv.is_zero()) continue;
                std::vector<unsigned> rest;
                for (unsigned t = 0; t < rows.size(); ++t)
                    if (t != k) rest.push_back(rows[t]);
                Poly sub = det(rest, cols, c0 + 1);
                Poly term = piv * sub;
                acc += (k % 2 ? -term : term);
            }
            return acc;
        }
    } rec{a};
    return rec.det(rows, cols, 0);
}

Poly poly_x_power(unsigned deg, const GRat& c) {
    Poly p(1);
    MultiIndex e(2, 0);
    e[0] = deg;
    p.add_term(e, c);
    return p;
}

unsigned x_degree(const Poly& p) {
    unsigned d = 0;
    for (const auto& [e, v] : p.terms()) {
        if (e[1] != 0) throw std::invalid_argument("x_degree: not univariate in x");
        d = std::max(d, e[0]);
    }
    return d;
}

GRat x_coeff(const Poly& p, unsigned deg) {
    MultiIndex e(2, 0);
    e[0] = deg;
    return p.coeff(e);
}

Poly from_x_coeffs(const std::vector<Rat>& coeffs) {
    Poly p(1);
    for (unsigned d = 0; d < coeffs.size(); ++d)
        if (sgn(coeffs[d]) != 0) p += poly_x_power(d, GRat(coeffs[d]));
    return p;
}

GRat eval_x(const Poly& p, const Rat& x) {
    // Horner on the dense coefficient list
    unsigned d = p.is_zero() ? 0 : x_degree(p);
    GRat acc;
    for (unsigned k = d + 1; k-- > 0;) acc = acc * GRat(x) + x_coeff(p, k);
    return acc;
}

Poly x_divexact(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("x_divexact: zero divisor");
    Poly r = num, q(1);
    unsigned dd = x_degree(den);
    GRat lead = x_coeff(den, dd);
    while (!r.is_zero()) {
        unsigned dr = x_degree(r);
        if (dr < dd && !(dr == 0 && x_coeff(r, 0).is_zero())) break;
        GRat c = x_coeff(r, dr) / lead;
        Poly t = poly_x_power(dr - dd, c);
        q += t;
        r -= t * den;
        if (!r.is_zero() && x_degree(r) == dr) throw std::logic_error("x_divexact: no progress");
    }
    if (!r.is_zero()) throw std::domain_error("x_divexact: inexact division");
    return q;
}

namespace {

bool x_all_real(const Poly& p) {
    for (const auto& [e, v] : p.terms())
        if (!v.is_real()) return false;
    return true;
}

/// Scales a real-coefficient polynomial to integer coefficients with content
/// 1 and positive leading coefficient.
Poly x_primitivize(const Poly& p) {
    if (p.is_zero()) return p;
    mpz_class lcm(1), gcd(0);
    for (const auto& [e, v] : p.terms()) {
        mpz_class d = v.re.get_den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
    }
    Poly q = p.scaled(GRat(Rat(lcm)));
    for (const auto& [e, v] : q.terms()) {
        mpz_class n = v.re.get_num();
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), n.get_mpz_t());
    }
    q = q.scaled(GRat(Rat(mpz_class(1), gcd)));
    if (sgn(x_coeff(q, x_degree(q)).re) < 0) q = -q;
    return q;
}

/// gcd by a primitive pseudo-remainder sequence; keeps coefficient sizes
/// polynomial instead of the exponential growth of naive rational Euclid.
Poly x_gcd_primitive(Poly a, Poly b) {
    a = x_primitivize(a);
    b = x_primitivize(b);
    while (!b.is_zero()) {
        unsigned db = x_degree(b);
        GRat lead = x_coeff(b, db);
        Poly r = a;
        // pseudo-remainder: scale so every elimination step stays integral
        while (!r.is_zero() && x_degree(r) >= db) {
            unsigned dr = x_degree(r);
            GRat c = x_coeff(r, dr);
            r = r.scaled(lead) - poly_x_power(dr - db, c) * b;
        }
        a = b;
        b = x_primitivize(r);
    }
    return a;
}

}  // namespace

Poly x_gcd(Poly a, Poly b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (x_all_real(a) && x_all_real(b)) {
        Poly g = x_gcd_primitive(std::move(a), std::move(b));
        GRat lead = x_coeff(g, x_degree(g));
        return g.scaled(GRat(1) / lead);
    }
    while (!b.is_zero()) {
        // monic Euclid; fine for the small complex-coefficient cases
        unsigned db = x_degree(b);
        GRat lead = x_coeff(b, db);
        Poly r = a;
        while (!r.is_zero() && x_degree(r) >= db) {
            unsigned dr = x_degree(r);
            GRat c = x_coeff(r, dr) / lead;
            r -= poly_x_power(dr - db, c) * b;
            if (!r.is_zero() && x_degree(r) == dr) break;
        }
        a = b;
        b = r;
    }
    // monic normalization
    GRat lead = x_coeff(a, x_degree(a));
    return a.scaled(GRat(1) / lead);
}

Poly x_derivative(const Poly& p) { return p.d_slot(0); }

}  // namespace dia
