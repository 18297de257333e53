#pragma once

#include <string>
#include <vector>

#include "diastasis/calabi.hpp"
#include "diastasis/series.hpp"

namespace dia {

enum class Family { Rank1Ball, TypeI, TypeII, TypeIII, TypeIV, EVI, EVII };

std::string family_name(Family f);

/// Cartan domain with structural constants (r, a, b), complex dimension n
/// and genus gamma = (r-1)a + b + 2, n = r + r(r-1)/2 a + r b.
/// The catalog allows b = 0 (needed by the rank-1 ball with n = 1 and by
/// square type-I domains).
struct CartanDomain {
    Family family;
    unsigned p = 0, q = 0;  // type I block sizes; otherwise p = defining size
    unsigned r, a, b, n, gamma;

    /// Einstein constant of the noncompact metric g_Omega: Ric = -gamma g.
    long einstein_constant() const { return -(long)gamma; }
    bool has_series_provider() const;
};

CartanDomain rank1_ball(unsigned n);
CartanDomain type_I(unsigned p, unsigned q);
CartanDomain type_II(unsigned n);   // skew n x n
CartanDomain type_III(unsigned n);  // symmetric n x n
CartanDomain type_IV(unsigned n);   // Lie ball of dimension n, n >= 3
CartanDomain exceptional_EVI();
CartanDomain exceptional_EVII();

/// All structural-constant consistency checks in one place.
bool constants_consistent(const CartanDomain& d);

/// Wallach set W = {0, a/2, ..., (r-1)a/2} u ((r-1)a/2, inf).
struct WallachSet {
    unsigned a, r;
    Rat threshold() const { return Rat((long)(r - 1) * (long)a, 2); }
    bool member(const Rat& x) const;
    bool member_excluding_zero(const Rat& x) const;
};

WallachSet wallach_set(const CartanDomain& d);

struct ProductDomain {
    std::vector<CartanDomain> factors;
    std::vector<Rat> mu;  // positive exponents, one per factor

    unsigned dimension() const;
};

/// Generic norm N as an exact truncated series; N(0,0) = 1.
/// Supported: rank-1 ball (exact polynomial 1 - |z|^2) and type I via
/// det(I - Z Z*).  Exceptional domains are catalog-only.
HermSeries generic_norm_series(const CartanDomain& d, unsigned order);

/// Product norm N^mubar = prod N_j^{mu_j} over the concatenated variables.
HermSeries generic_norm_series(const ProductDomain& p, unsigned order);

/// N^mu for a single factor.
HermSeries generic_norm_series_pow(const CartanDomain& d, const Rat& mu, unsigned order);

/// The diastasis -log N of g_Omega (already in normal form).
Diastasis domain_diastasis(const CartanDomain& d, unsigned order);

/// Parses CLI descriptors: "CH1", "CHn:3", "I:2x2", "II:4", "III:2", "IV:5",
/// "EVI", "EVII", "prod:[CH1,CH1]:mu=[1,2]".
struct DomainSpec {
    bool is_product = false;
    CartanDomain single;
    ProductDomain product;
    unsigned dimension() const { return is_product ? product.dimension() : single.n; }
};

DomainSpec parse_domain(const std::string& descriptor);

/// Every catalogued irreducible domain, for whole-catalog property checks.
std::vector<CartanDomain> catalog_samples();

}  // namespace dia
