#pragma once

#include "diastasis/polynomial.hpp"

namespace dia {

/// Exact multivariate rational function num/den over Gaussian rationals.
///
/// Canonical storage: any common monomial factor is cancelled, and the
/// denominator is made monic with respect to its graded-lex leading term.
/// Univariate functions (the output of restrict_line) are additionally fully
/// gcd-reduced.  Equality between multivariate values is decided by exact
/// cross-multiplication, so unreduced common polynomial factors never affect
/// results.
class RationalFunction {
public:
    RationalFunction() = default;
    RationalFunction(Poly num, Poly den);
    explicit RationalFunction(const Poly& num);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    unsigned cvars() const { return num_.cvars(); }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return (a.num_ * b.den_) == (b.num_ * a.den_);
    }

    bool is_real_valued_on_reals() const;  // univariate: all coefficients real

private:
    Poly num_, den_;
    void normalize();
};

/// d/dz_k (or d/dzbar_k when `conjugate`) by the exact quotient rule.
RationalFunction wirtinger_derivative(const RationalFunction& f, unsigned k, bool conjugate);

/// Substitution z_k = lambda_k x, zbar_k = conj(lambda_k) x.  The result must
/// be exactly real; throws std::logic_error otherwise.  Fully gcd-reduced.
RationalFunction restrict_to_line(const RationalFunction& f, const std::vector<GRat>& lambda);

/// For a univariate function, the unique representation with coprime integer
/// primitive denominator of positive leading coefficient.  first = numerator
/// (rational coefficients in general), second = denominator.
std::pair<Poly, Poly> primitive_pair(const RationalFunction& f);

}  // namespace dia
