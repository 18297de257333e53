#pragma once

#include <map>
#include <vector>

#include "diastasis/rational.hpp"
#include "diastasis/series.hpp"

namespace dia {

/// Sparse multivariate polynomial over Gaussian rationals in the 2m slots
/// z_1..z_m, zbar_1..zbar_m.  z and zbar are formally independent; conj()
/// swaps the two blocks and conjugates coefficients, so that conj(p) is the
/// series of the complex-conjugate function.
class Poly {
public:
    Poly() : m_(0) {}
    explicit Poly(unsigned m) : m_(m) {}

    static Poly constant(unsigned m, const GRat& c);
    static Poly var_z(unsigned m, unsigned k);     // z_{k+1}
    static Poly var_zbar(unsigned m, unsigned k);  // zbar_{k+1}

    unsigned cvars() const { return m_; }     // complex variables
    unsigned slots() const { return 2 * m_; }
    const std::map<MultiIndex, GRat>& terms() const { return t_; }

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    GRat coeff(const MultiIndex& e) const;
    GRat constant_term() const { return coeff(MultiIndex(2 * m_, 0)); }
    void add_term(const MultiIndex& e, const GRat& v);

    unsigned total_degree() const;
    /// (degree in z slots, degree in zbar slots) of a term.
    static std::pair<unsigned, unsigned> bidegree(const MultiIndex& e, unsigned m);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) {
        return a.m_ == b.m_ && a.t_ == b.t_;
    }

    Poly scaled(const GRat& s) const;
    Poly conj() const;

    /// Formal partial derivative with respect to slot `s`.
    Poly d_slot(unsigned s) const;
    Poly dz(unsigned k) const { return d_slot(k); }
    Poly dzbar(unsigned k) const { return d_slot(m_ + k); }

    /// Restriction z_k -> lambda_k * x, zbar_k -> conj(lambda_k) * x.
    /// Returns a univariate polynomial in x (a 1-cvar Poly whose zbar slot
    /// is unused).
    Poly restrict_line(const std::vector<GRat>& lambda) const;

    /// Substitutes numeric values for every slot (z values then zbar values).
    GRat eval(const std::vector<GRat>& slot_values) const;

    /// Reads the polynomial as a truncated series (degrees above `order`
    /// are dropped).
    HermSeries to_series(unsigned order) const;

private:
    unsigned m_;
    std::map<MultiIndex, GRat> t_;
};

/// Determinant of the leading principal r x r block, expanded by minors.
Poly leading_minor(const std::vector<std::vector<Poly>>& a, unsigned r);

/// Univariate helpers for 1-cvar Polys representing polynomials in x
/// (only the z slot of variable 1 is used).
Poly poly_x_power(unsigned deg, const GRat& c);
unsigned x_degree(const Poly& p);
GRat x_coeff(const Poly& p, unsigned deg);
Poly from_x_coeffs(const std::vector<Rat>& coeffs);
GRat eval_x(const Poly& p, const Rat& x);
/// Quotient of an exact univariate division; throws if the division is inexact.
Poly x_divexact(const Poly& num, const Poly& den);
/// Monic gcd of univariate polynomials over the Gaussian rationals.
Poly x_gcd(Poly a, Poly b);
Poly x_derivative(const Poly& p);

}  // namespace dia
