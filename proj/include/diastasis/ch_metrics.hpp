#pragma once

#include "diastasis/domains.hpp"

namespace dia {

/// Cartan-Hartogs domain  |w|^2 < N^mu(z, zbar)  over a catalogued base;
/// the fiber variable w is appended as variable n+1.
struct CHDomain {
    DomainSpec base;
    std::vector<Rat> mu;  // one entry for an irreducible base, one per factor otherwise

    unsigned base_dim() const { return base.dimension(); }
    unsigned ambient_vars() const { return base_dim() + 1; }
    /// N^mu over the base variables.
    HermSeries base_norm_pow(unsigned order) const;
};

CHDomain ch_domain(const std::string& base_descriptor, const std::vector<Rat>& mu);

enum class CHKind { g, ghat, g_star, ghat_star };

CHKind ch_kind_from_string(const std::string& s);
std::string ch_kind_name(CHKind k);

struct CHPotential {
    CHKind kind;
    Diastasis diastasis;  // over n+1 variables
};

/// The exact truncated diastasis of the requested metric:
///   g         -log(N^mu - |w|^2)
///   ghat      -log(N^mu - |w|^2) - log N^mu
///   g_star     log(N^mu(z,-zbar) + |w|^2)
///   ghat_star  log(N^mu(z,-zbar) + |w|^2) + log N^mu(z,-zbar)
CHPotential ch_potential(const CHDomain& d, CHKind kind, unsigned order);

struct BlockReport {
    bool all_cross_blocks_zero;
    unsigned checked_entries;
    // diagonal of the F_{z(0),w(s)} fiber blocks, s = 1..order/2
    std::vector<GRat> fiber_diagonal;
    std::optional<std::pair<MultiIndex, MultiIndex>> violation;
};

/// Checks the diagonal block structure of the Calabi matrix of `alpha` times
/// the potential: B_jk = 0 whenever the truncated norms or the fiber degrees
/// of m_j, m_k differ.
BlockReport verify_block_structure(const CHPotential& p, const Rat& alpha, unsigned order);

/// Exact identity for the 2s-th fiber derivative at w = 0 of
/// N^{-alpha mu} (N^mu - |w|^2)^{-alpha}:
/// s!^2 * [w^s wbar^s slice] == s! alpha(alpha+1)...(alpha+s-1) N^{-(2 alpha + s) mu}.
bool fiber_derivative_identity(const CHDomain& d, const Rat& alpha, unsigned s, unsigned order);

/// Degree-wise metric-tensor identity: the full Hessian of the ghat potential
/// equals the Hessian of the g potential plus the pulled-back Hessian of
/// mu g_Omega, coefficientwise.
bool metric_sum_identity(const CHDomain& d, unsigned order);

struct Rank1Report {
    bool veronese_norm_exact;    // sum_k C(mu,k) x^k == (1+x)^mu
    bool pullback_matches_dual;  // pulled-back potential == ghat_star series
};

/// Rank-1 compactification data: F the degree-mu Veronese with components
/// sqrt(C(mu,k)) z^k, so that |F|^2/|F_0|^2 = (1+|z|^2)^mu exactly, and the
/// pulled-back potential log(|F|^2/|F_0|^2 + |w|^2) + log(|F|^2/|F_0|^2)
/// reproduces the ghat_star diastasis.
Rank1Report rank1_compactification_check(unsigned mu, unsigned order);

/// Hessian matrix of series: H[p][q] = d^2 D / dz_p dzbar_q.
std::vector<std::vector<HermSeries>> hessian(const HermSeries& d);

}  // namespace dia
