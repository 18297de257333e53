#pragma once

#include <optional>

#include "diastasis/calabi.hpp"
#include "diastasis/rational_function.hpp"

namespace dia {

/// Potential of the form log(inner) restricted to a holomorphic curve, with
/// `inner` an exact rational function of the formally independent pair
/// (z, zbar).  Matrix inverses are expanded by 2x2 adjugates before
/// differentiation so everything stays in the rational-function field.
struct CurvePotential {
    RationalFunction inner;  // the function under the log; inner(0) != 0
};

CurvePotential potential_log(const RationalFunction& inner);

/// det A*(gamma(z)) for the dual of the rank-4 homogeneous 5-dimensional
/// domain, along the curve  W = [[0,z],[z,0]], V = (z,0)^T.
CurvePotential u21_dual_curve_potential();

/// h = d^2 log(inner) / dz dzbar, exact.
RationalFunction metric_along_curve(const CurvePotential& p);

/// K = -(1/h) d^2 log h / dz dzbar, exact.
RationalFunction sectional_curvature_along_curve(const RationalFunction& h);

struct BlowupWitness {
    Rat lo, hi;          // isolating interval for the smallest positive root of P
    unsigned bisections;
    bool p_positive_before_root;  // P > 0 at the sampled grid on [0, lo]
    bool r_positive;              // R > 0 on (0, inf) from positive coefficients
};

/// Exact sign-change bisection: isolates the smallest positive root of P in
/// a width <= 2^-bits interval inside (0, 1], and certifies R > 0 there, so
/// K = R/P^2 diverges to +infinity from the left.
BlowupWitness blowup_witness(const Poly& r_poly, const Poly& p_poly, unsigned bits = 20);

struct RicciSeries {
    HermSeries series;  // normal form of -log det(Hermitian Hessian)
};

/// Requires the degree-(1,1) block of d (the metric at 0) to be positive
/// definite.  Output order is H - 2.
RicciSeries ricci_series(const Diastasis& d, unsigned order);

/// Series-level Ricci duality: the Ricci potential of the dual metric equals
/// the Ricci potential of d with zbar -> -zbar, coefficientwise after
/// normalization.  (At the level of forms this is the statement that the
/// Ricci forms of g and g* are exchanged by the dual trick with a sign, so
/// Einstein constants flip sign.)
bool ricci_duality_check(const Diastasis& d, unsigned order);

/// ricci + lambda * d, zero iff KE with Einstein constant -lambda up to order.
HermSeries ke_defect(const Diastasis& d, const Rat& lambda, unsigned order);

}  // namespace dia
