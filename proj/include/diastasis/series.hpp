#pragma once

#include <compare>
#include <map>
#include <vector>

#include "diastasis/rational.hpp"

namespace dia {

/// Exponent vector; one slot per complex variable.
using MultiIndex = std::vector<unsigned>;

unsigned norm(const MultiIndex& m);

/// norm-then-lexicographic: |a| < |b|, ties broken comparing exponents left to right.
bool norm_lex_less(const MultiIndex& a, const MultiIndex& b);

/// All multi-indices over `nvars` variables with 1 <= |m| <= maxnorm,
/// in norm-then-lexicographic order.
std::vector<MultiIndex> enumerate_multiindices(unsigned nvars, unsigned maxnorm);

struct TermKey {
    MultiIndex i, j;
    auto operator<=>(const TermKey&) const = default;
};

/// Truncated power series  sum a_IJ z^I zbar^J  over Gaussian rationals,
/// with total-degree truncation |I| + |J| <= order.  Coefficients are stored
/// sparsely; zero coefficients are never kept.  Hermitian symmetry
/// a_JI = conj(a_IJ) holds exactly for the series of every real-valued
/// function and is preserved by all ring operations, but the type also
/// represents non-real series (the output of substitute_negate_bar on a
/// series with forbidden monomials is the motivating case).
class HermSeries {
public:
    HermSeries() : nvars_(0), order_(0) {}
    HermSeries(unsigned nvars, unsigned order) : nvars_(nvars), order_(order) {}

    static HermSeries constant(unsigned nvars, unsigned order, const GRat& c);
    static HermSeries one(unsigned nvars, unsigned order) {
        return constant(nvars, order, GRat(1));
    }

    unsigned nvars() const { return nvars_; }
    unsigned order() const { return order_; }
    const std::map<TermKey, GRat>& terms() const { return c_; }

    GRat coeff(const MultiIndex& i, const MultiIndex& j) const;
    GRat constant_term() const;
    void set(const MultiIndex& i, const MultiIndex& j, const GRat& v);
    void add_term(const MultiIndex& i, const MultiIndex& j, const GRat& v);

    bool is_zero() const { return c_.empty(); }
    bool is_hermitian() const;

    HermSeries truncated(unsigned new_order) const;

    HermSeries operator-() const;
    HermSeries& operator+=(const HermSeries& o);
    HermSeries& operator-=(const HermSeries& o);
    friend HermSeries operator+(HermSeries a, const HermSeries& b) { return a += b; }
    friend HermSeries operator-(HermSeries a, const HermSeries& b) { return a -= b; }
    friend bool operator==(const HermSeries& a, const HermSeries& b) {
        return a.nvars_ == b.nvars_ && a.c_ == b.c_;
    }

    HermSeries scaled(const GRat& s) const;

    /// Wirtinger derivative d/dz_k (resp. d/dzbar_k when `conjugate`).
    /// Result order drops by one.
    HermSeries wirtinger(unsigned k, bool conjugate) const;

private:
    unsigned nvars_, order_;
    std::map<TermKey, GRat> c_;
};

/// Cauchy product truncated at min(a.order, b.order). Throws on nvars mismatch.
HermSeries series_mul(const HermSeries& a, const HermSeries& b);

/// a^k by repeated multiplication, k >= 0.
HermSeries series_pow_nat(const HermSeries& a, unsigned long k);

/// exp(a) = sum a^k / k!. Requires a(0) = 0.
HermSeries series_exp(const HermSeries& a);

/// log(a) = sum (-1)^{k+1} (a-1)^k / k. Requires a(0) = 1.
HermSeries series_log(const HermSeries& a);

/// a^q = exp(q log a) for rational q. Requires a(0) = 1.
HermSeries series_pow_rational(const HermSeries& a, const Rat& q);

/// The series of a(z, -zbar): a_IJ -> (-1)^{|J|} a_IJ.
HermSeries substitute_negate_bar(const HermSeries& a);

/// Embeds an n-variable series into `nvars_new` variables (extra variables
/// appended with exponent zero).
HermSeries lift_vars(const HermSeries& a, unsigned nvars_new, unsigned new_order);

/// Picks the sub-series with fixed exponents (deg_i, deg_j) in the last
/// variable, returned as a series in the remaining nvars-1 variables.
HermSeries fiber_slice(const HermSeries& a, unsigned deg_i, unsigned deg_j);

/// Applies a permutation of the variables: slot k of the result reads
/// slot perm[k] of the input.
HermSeries permute_vars(const HermSeries& a, const std::vector<unsigned>& perm);

}  // namespace dia
