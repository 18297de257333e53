#pragma once

#include <optional>
#include <vector>

#include "diastasis/series.hpp"

namespace dia {

/// A Calabi-normalized real-valued series: a_{I0} = a_{0J} = 0 and hermitian
/// symmetry hold exactly.
struct Diastasis {
    HermSeries series;
};

/// Monomial a_IJ z^I zbar^J with a_IJ != 0 and (-1)^|I| != (-1)^|J|;
/// obstructs reality of the dual potential.
struct ForbiddenMonomial {
    MultiIndex i, j;
    GRat coefficient;
    unsigned kind_i() const { return norm(i); }
    unsigned kind_j() const { return norm(j); }
};

/// Subtracts the purely holomorphic and antiholomorphic part (including the
/// constant); the unique normal form differing from the input by a
/// pluriharmonic series.  Throws on non-hermitian input.
Diastasis normalize_diastasis(const HermSeries& potential);

/// All stored monomials with (-1)^|I| != (-1)^|J|, in norm-lex order.
std::vector<ForbiddenMonomial> scan_forbidden(const Diastasis& d);

bool has_kahler_dual(const Diastasis& d);

/// a*_IJ = -(-1)^|J| a_IJ, the series of -D(z, -zbar).  An involution on
/// forbidden-free inputs; throws if a forbidden monomial makes the dual
/// non-real.
Diastasis dual_diastasis(const Diastasis& d);

/// Coefficient matrix B_jk of e^D - 1 over the monomial basis in
/// norm-then-lexicographic order (norms 1..H).
struct CalabiMatrix {
    std::vector<MultiIndex> basis;
    std::vector<std::vector<GRat>> entries;
    /// has_fiber marks the last variable as distinguished; blocks are then
    /// keyed by (truncated norm, fiber degree) instead of by total norm.
    bool has_fiber = false;

    unsigned size() const { return (unsigned)basis.size(); }
    std::pair<unsigned, unsigned> block_key(unsigned idx) const;
    bool is_hermitian() const;
};

CalabiMatrix calabi_matrix(const Diastasis& d, unsigned order, bool fiber_blocks = false);

struct PsdWitness {
    unsigned row, col;  // indices into the matrix basis
    GRat value;         // exact negative pivot / principal-minor value
    bool from_minor;    // true when certified by a 2x2 principal minor
};

struct PsdResult {
    bool psd;
    std::optional<PsdWitness> witness;
};

/// Exact positive-semidefiniteness of a hermitian matrix by symmetric
/// elimination with largest-diagonal pivoting.  A zero pivot forces a
/// whole-row zero check; a nonzero off-diagonal entry on a zero diagonal is
/// certified by the negative 2x2 principal minor -|a|^2.
PsdResult psd_check(const CalabiMatrix& m);

struct ProjectiveVerdict {
    bool refuted;
    unsigned order;
    std::optional<PsdWitness> witness;
    // the basis monomials of the witness location, for reporting
    MultiIndex witness_i, witness_j;
};

/// Calabi's criterion at truncation order H: REFUTED is a sound certificate
/// that the metric is not projectively induced; CONSISTENT_UP_TO(H) is
/// necessary-condition evidence only.
ProjectiveVerdict projective_witness(const Diastasis& d, unsigned order);

}  // namespace dia
