#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diastasis/ch_metrics.hpp"
#include "diastasis/domains.hpp"

namespace dia {

/// Outcome of a closed-form projective-inducibility decision, with the rule
/// applied, the finite list of values actually checked, and the failing value
/// when the verdict is negative.
struct Decision {
    bool verdict;
    std::string rule;
    std::vector<Rat> checked;                     // the (alpha+s)mu or (2alpha+s)mu values
    std::optional<std::pair<long, Rat>> failure;  // (s, value)
};

/// alpha g_{Omega,mu} infinitely projectively induced iff (alpha+s)mu lies in
/// W(Omega)\{0} for every integer s >= 0.  Enumeration stops once the values
/// pass the continuous threshold; membership above it is monotone.
Decision decide_g_infinite(const CartanDomain& d, const Rat& alpha, const Rat& mu);

/// Same with 2alpha + s in place of alpha + s.
Decision decide_ghat_infinite(const CartanDomain& d, const Rat& alpha, const Rat& mu);

/// alpha g*_{Omega,mu} (and the ghat* variant, and products) finitely
/// projectively induced iff alpha and every mu_j are positive integers.
Decision decide_dual_finite(const Rat& alpha, const std::vector<Rat>& mu);

/// Exact expansion data of Psi(x) = ((1+x)^{a/b} + 1)^{bk}:
/// Psi = sum_h (A_h/h!) x^h, computed by two independent routes.
struct ExpansionWitness {
    unsigned a, b, k;
    std::vector<Rat> coefficients;        // A_h/h!, h = 0..H
    std::optional<unsigned> first_negative;
};

/// Both routes: (i) the series power ((1+x)^{a/b}+1)^{bk}, (ii) the closed
/// sums A_h = sum_p C(kb,p) (pa/b)(pa/b - 1)...(pa/b - h + 1).  Throws
/// std::logic_error if the routes disagree.
ExpansionWitness psi_expansion(unsigned a, unsigned b, unsigned k, unsigned order);

struct RatioReport {
    std::vector<Rat> ratios;  // A_h / B_{h,1}, h = 1..H
    unsigned alternation_start;  // sign(A_{h+1}) = -sign(A_h) for all h >= this
};

/// Exact A_h/B_{h,1} sequence; requires a/b not an integer (so B_{h,1} != 0).
RatioReport psi_ratio_limit(unsigned a, unsigned b, unsigned k, unsigned order);

/// Expansion of e^D - 1 for D = bk log[((1+x)^{a/2b}+1)(1+x)^{a/2b}] - bk log 2,
/// i.e. of ((1+x)^{a/2b}+1)^{bk} (1+x)^{ak/2} / 2^{bk} - 1; records the first
/// negative coefficient (present whenever a/2b is not an integer).
ExpansionWitness propalphamu_witness(unsigned a, unsigned b, unsigned k, unsigned order);

struct KECondition {
    std::vector<Rat> mu_ke;  // gamma_j / (n+1)
    bool bound_holds;        // gamma/(n+1) <= 1 for each factor
    bool equality;           // iff every factor is a rank-1 ball
};

KECondition ke_condition(const CHDomain& d);

/// Exact value of sum_j (n + 1 - gamma_j/mu_j) n_j; zero iff the metric has
/// constant scalar curvature (equivalently is extremal).
Rat csc_sum(const ProductDomain& p);
bool csc_condition(const ProductDomain& p);

struct OdeResidual {
    bool ratio_constant;
    std::vector<Rat> ratio_coefficients;   // series of L/R
    std::optional<unsigned> first_nonconstant_index;
};

/// For h(X) = -(gamma+mu)/((mu+1)(d+2)) log(1-X): computes
/// L = (mu X h' + (gamma+mu)/(d+2))^d [X h']' and R = e^{(n+2)h} as exact
/// series in X and reports whether L/R is constant (no k exists otherwise).
OdeResidual ode_residual(const Rat& gamma, const Rat& mu, unsigned n, unsigned d_param,
                         unsigned order);

struct CrossValidation {
    Decision decision;
    ProjectiveVerdict series;
    bool agree;
};

/// Oracle agreement between the closed-form decision for alpha * (kind) on
/// the given CH domain and the truncated Calabi criterion on the actual
/// series potential.
CrossValidation cross_validate(const CHDomain& d, const Rat& alpha, CHKind kind, unsigned order);

/// Smallest positive integer alpha whose decision is positive, for the given
/// base, mu and kind (g or ghat).
long minimal_integer_alpha(const CartanDomain& d, const Rat& mu, CHKind kind);

}  // namespace dia
