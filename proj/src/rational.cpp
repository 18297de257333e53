#include "diastasis/rational.hpp"

namespace dia {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw parse_error("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw parse_error("malformed rational: '" + s + "'");
    if (sgn(Rat(q.get_den())) == 0) throw parse_error("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

int sgn(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }

bool is_integer(const Rat& q) { return q.get_den() == 1; }

bool is_positive_integer(const Rat& q) { return is_integer(q) && sgn(q) > 0; }

Rat factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rat(f);
}

Rat binomial(const Rat& x, unsigned long h) {
    return Rat(falling_factorial(x, h) / factorial(h));
}

Rat rising_factorial(const Rat& x, unsigned long h) {
    Rat p(1);
    for (unsigned long k = 0; k < h; ++k) p *= x + (long)k;
    return p;
}

Rat falling_factorial(const Rat& x, unsigned long h) {
    Rat p(1);
    for (unsigned long k = 0; k < h; ++k) p *= x - (long)k;
    return p;
}

Rat pow_int(const Rat& x, long e) {
    if (e == 0) return Rat(1);
    if (e < 0) {
        if (sgn(x) == 0) throw std::domain_error("pow_int: 0 to a negative power");
        return Rat(1 / pow_int(x, -e));
    }
    Rat r(1), b = x;
    long n = e;
    while (n > 0) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

GRat& GRat::operator+=(const GRat& o) {
    re += o.re;
    im += o.im;
    return *this;
}

GRat& GRat::operator-=(const GRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

GRat operator/(const GRat& a, const GRat& b) {
    Rat n2(b.re * b.re + b.im * b.im);
    if (sgn(n2) == 0) throw std::domain_error("GRat: division by zero");
    return GRat(Rat((a.re * b.re + a.im * b.im) / n2), Rat((a.im * b.re - a.re * b.im) / n2));
}

GRat grat_i() { return GRat(Rat(0), Rat(1)); }

std::string grat_to_string(const GRat& c) {
    if (c.is_real()) return rat_to_string(c.re);
    Rat a = abs(c.im);
    return rat_to_string(c.re) + (sgn(c.im) < 0 ? "-" : "+") + rat_to_string(a) + " i";
}

GRat grat_from_string(const std::string& s) {
    auto tail = s.size() >= 2 ? s.substr(s.size() - 2) : std::string();
    if (tail != " i") return GRat(rat_from_string(s));
    std::string body = s.substr(0, s.size() - 2);
    // split at the last '+' or '-' that is not the leading sign and not inside a fraction
    for (size_t k = body.size(); k-- > 1;) {
        char ch = body[k];
        if ((ch == '+' || ch == '-') && body[k - 1] != '/' && body[k - 1] != '+' && body[k - 1] != '-') {
            Rat re = rat_from_string(body.substr(0, k));
            Rat im = rat_from_string(body.substr(k + 1));
            if (ch == '-') im = -im;
            return GRat(re, im);
        }
    }
    throw parse_error("malformed Gaussian rational: '" + s + "'");
}

}  // namespace dia
