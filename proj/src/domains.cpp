#include "diastasis/domains.hpp"

#include <algorithm>

#include "diastasis/polynomial.hpp"

namespace dia {

std::string family_name(Family f) {
    switch (f) {
        case Family::Rank1Ball: return "CHn";
        case Family::TypeI: return "I";
        case Family::TypeII: return "II";
        case Family::TypeIII: return "III";
        case Family::TypeIV: return "IV";
        case Family::EVI: return "EVI";
        case Family::EVII: return "EVII";
    }
    return "?";
}

bool CartanDomain::has_series_provider() const {
    return family == Family::Rank1Ball || family == Family::TypeI;
}

static CartanDomain make(Family f, unsigned p, unsigned q, unsigned r, unsigned a, unsigned b) {
    CartanDomain d;
    d.family = f;
    d.p = p;
    d.q = q;
    d.r = r;
    d.a = a;
    d.b = b;
    d.gamma = (r - 1) * a + b + 2;
    d.n = r + r * (r - 1) / 2 * a + r * b;
    if (!constants_consistent(d)) throw std::invalid_argument("inconsistent Cartan parameters");
    return d;
}

bool constants_consistent(const CartanDomain& d) {
    return d.gamma == (d.r - 1) * d.a + d.b + 2 &&
           d.n == d.r + d.r * (d.r - 1) / 2 * d.a + d.r * d.b && d.r >= 1;
}

CartanDomain rank1_ball(unsigned n) {
    if (n < 1) throw std::invalid_argument("rank1_ball: n >= 1 required");
    return make(Family::Rank1Ball, n, 1, 1, 2, n - 1);
}

CartanDomain type_I(unsigned p, unsigned q) {
    if (p < 1 || q < p) throw std::invalid_argument("type_I: need 1 <= p <= q");
    return make(Family::TypeI, p, q, p, 2, q - p);
}

CartanDomain type_II(unsigned n) {
    if (n < 4) throw std::invalid_argument("type_II: n >= 4 required");
    unsigned r = n / 2, b = (n % 2) ? 2 : 0;
    CartanDomain d = make(Family::TypeII, n, n, r, 4, b);
    if (d.n != n * (n - 1) / 2) throw std::invalid_argument("type_II: dimension mismatch");
    return d;
}

CartanDomain type_III(unsigned n) {
    if (n < 1) throw std::invalid_argument("type_III: n >= 1 required");
    CartanDomain d = make(Family::TypeIII, n, n, n, 1, 0);
    if (d.n != n * (n + 1) / 2) throw std::invalid_argument("type_III: dimension mismatch");
    return d;
}

CartanDomain type_IV(unsigned n) {
    if (n < 3) throw std::invalid_argument("type_IV: n >= 3 required");
    CartanDomain d = make(Family::TypeIV, n, 1, 2, n - 2, 0);
    if (d.n != n) throw std::invalid_argument("type_IV: dimension mismatch");
    return d;
}

CartanDomain exceptional_EVI() { return make(Family::EVI, 16, 1, 2, 6, 4); }
CartanDomain exceptional_EVII() { return make(Family::EVII, 27, 1, 3, 8, 0); }

bool WallachSet::member(const Rat& x) const {
    if (sgn(x) < 0) throw std::invalid_argument("wallach_member: negative argument");
    if (x > threshold()) return true;
    // x = j a/2 for some integer 0 <= j <= r-1
    Rat j = x * Rat(2, (long)a);
    return is_integer(j) && j >= 0 && j <= Rat((long)(r - 1));
}

bool WallachSet::member_excluding_zero(const Rat& x) const {
    return sgn(x) > 0 && member(x);
}

WallachSet wallach_set(const CartanDomain& d) { return WallachSet{d.a, d.r}; }

unsigned ProductDomain::dimension() const {
    unsigned n = 0;
    for (const auto& f : factors) n += f.n;
    return n;
}

static HermSeries rank1_norm(unsigned n, unsigned order) {
    HermSeries s = HermSeries::one(n, order);
    for (unsigned k = 0; k < n; ++k) {
        MultiIndex e(n, 0);
        e[k] = 1;
        s.set(e, e, GRat(-1));
    }
    return s;
}

static HermSeries type_I_norm(unsigned p, unsigned q, unsigned order) {
    // det(I_p - Z Z*), Z the p x q matrix of variables z_{(i,j)} in row-major
    // order; an exact polynomial of degree 2p.
    unsigned m = p * q;
    auto var = [&](unsigned i, unsigned j) { return Poly::var_z(m, i * q + j); };
    std::vector<std::vector<Poly>> a(p, std::vector<Poly>(p, Poly(m)));
    for (unsigned i = 0; i < p; ++i)
        for (unsigned k = 0; k < p; ++k) {
            Poly s(m);
            for (unsigned j = 0; j < q; ++j) s += var(i, j) * var(k, j).conj();
            a[i][k] = -s;
            if (i == k) a[i][k] += Poly::constant(m, GRat(1));
        }
    return leading_minor(a, p).to_series(order);
}

HermSeries generic_norm_series(const CartanDomain& d, unsigned order) {
    switch (d.family) {
        case Family::Rank1Ball: return rank1_norm(d.n, order);
        case Family::TypeI: return type_I_norm(d.p, d.q, order);
        default:
            throw std::domain_error("generic_norm_series: no series provider for family " +
                                    family_name(d.family));
    }
}

HermSeries generic_norm_series_pow(const CartanDomain& d, const Rat& mu, unsigned order) {
    return series_pow_rational(generic_norm_series(d, order), mu);
}

HermSeries generic_norm_series(const ProductDomain& p, unsigned order) {
    if (p.factors.empty() || p.factors.size() != p.mu.size())
        throw std::invalid_argument("product domain: factor/exponent mismatch");
    unsigned n = p.dimension();
    HermSeries acc = HermSeries::one(n, order);
    unsigned offset = 0;
    for (size_t k = 0; k < p.factors.size(); ++k) {
        if (sgn(p.mu[k]) <= 0) throw std::invalid_argument("product domain: mu_j must be positive");
        HermSeries f = generic_norm_series_pow(p.factors[k], p.mu[k], order);
        // embed factor variables at their offset
        HermSeries lifted(n, order);
        for (const auto& [key, v] : f.terms()) {
            MultiIndex i(n, 0), j(n, 0);
            std::copy(key.i.begin(), key.i.end(), i.begin() + offset);
            std::copy(key.j.begin(), key.j.end(), j.begin() + offset);
            lifted.set(i, j, v);
        }
        acc = series_mul(acc, lifted);
        offset += p.factors[k].n;
    }
    return acc;
}

Diastasis domain_diastasis(const CartanDomain& d, unsigned order) {
    return normalize_diastasis(-series_log(generic_norm_series(d, order)));
}

static unsigned parse_uint(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw parse_error("bad integer in domain descriptor: '" + s + "'");
    return (unsigned)std::stoul(s);
}

static CartanDomain parse_single(const std::string& s) {
    if (s == "EVI") return exceptional_EVI();
    if (s == "EVII") return exceptional_EVII();
    if (s.rfind("CHn:", 0) == 0) return rank1_ball(parse_uint(s.substr(4)));
    if (s.rfind("CH", 0) == 0) return rank1_ball(parse_uint(s.substr(2)));
    if (s.rfind("I:", 0) == 0) {
        auto body = s.substr(2);
        auto x = body.find('x');
        if (x == std::string::npos) throw parse_error("type I descriptor needs pxq: '" + s + "'");
        return type_I(parse_uint(body.substr(0, x)), parse_uint(body.substr(x + 1)));
    }
    if (s.rfind("II:", 0) == 0) return type_II(parse_uint(s.substr(3)));
    if (s.rfind("III:", 0) == 0) return type_III(parse_uint(s.substr(4)));
    if (s.rfind("IV:", 0) == 0) return type_IV(parse_uint(s.substr(3)));
    throw parse_error("unknown domain descriptor: '" + s + "'");
}

static std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else
            cur += c;
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

DomainSpec parse_domain(const std::string& descriptor) {
    DomainSpec spec;
    if (descriptor.rfind("prod:[", 0) == 0) {
        auto close = descriptor.find(']');
        if (close == std::string::npos) throw parse_error("unterminated factor list");
        auto factors = split_list(descriptor.substr(6, close - 6));
        auto rest = descriptor.substr(close + 1);
        if (rest.rfind(":mu=[", 0) != 0 || rest.back() != ']')
            throw parse_error("product descriptor needs :mu=[...]");
        auto mus = split_list(rest.substr(5, rest.size() - 6));
        if (factors.empty() || factors.size() != mus.size())
            throw parse_error("product descriptor: factor/mu count mismatch");
        spec.is_product = true;
        for (const auto& f : factors) spec.product.factors.push_back(parse_single(f));
        for (const auto& m : mus) spec.product.mu.push_back(rat_from_string(m));
        return spec;
    }
    spec.single = parse_single(descriptor);
    return spec;
}

std::vector<CartanDomain> catalog_samples() {
    std::vector<CartanDomain> out;
    for (unsigned n = 1; n <= 6; ++n) out.push_back(rank1_ball(n));
    for (unsigned p = 1; p <= 3; ++p)
        for (unsigned q = p; q <= 4; ++q) out.push_back(type_I(p, q));
    for (unsigned n = 4; n <= 7; ++n) out.push_back(type_II(n));
    for (unsigned n = 1; n <= 5; ++n) out.push_back(type_III(n));
    for (unsigned n = 3; n <= 8; ++n) out.push_back(type_IV(n));
    out.push_back(exceptional_EVI());
    out.push_back(exceptional_EVII());
    return out;
}

}  // namespace dia
