#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "diastasis/calabi.hpp"
#include "diastasis/polynomial.hpp"

namespace dia {

enum class GroupFamily { SU, Sp, SOodd, SOeven };

/// Classical group in its defining representation:
/// SU(n) on C^n, Sp(n) on C^2n, SO(2n+1) on C^{2n+1}, SO(2n) on C^2n.
/// Basis ordering: weight vectors e_1..e_n carry eps_1..eps_n, the next n
/// carry -eps_1..-eps_n (and a final zero-weight vector for SO(2n+1)); with
/// this ordering the matrix-entry indices of the root vectors match the
/// block forms [[A,B],[C,-A^T]].  Reversing the second block makes every
/// negative root vector strictly lower triangular.
struct PaintedDiagram {
    GroupFamily family;
    unsigned n;                // group parameter: SU(n), Sp(n), SO(2n+1), SO(2n)
    std::set<unsigned> black;  // painted simple-root positions, 1-based

    unsigned rank() const;
    unsigned matrix_dim() const;
    std::string group_name() const;
};

PaintedDiagram parse_diagram(const std::string& group, const std::set<unsigned>& black);

/// One coordinate z_alpha of the Alekseevsky-Perelomov chart: a root of -Q
/// together with its matrix entries in the defining representation.
struct CoordRoot {
    std::vector<int> eps;                              // root in the eps basis
    std::vector<std::tuple<unsigned, unsigned, int>> entries;  // (row, col, sign), 0-based
    std::string label;
};

using SymbolicMatrix = std::vector<std::vector<Poly>>;

struct FlagContext {
    PaintedDiagram diagram;
    std::vector<CoordRoot> coords;  // coordinate order, z_1 first
    SymbolicMatrix Z;
    unsigned nilpotency;  // smallest k with Z^k = 0
};

/// Builds Z(z) = sum z_alpha E_alpha over -Q and computes its nilpotency
/// index.  Throws if Z fails to be nilpotent (invalid construction).
FlagContext build_flag(const PaintedDiagram& diagram);

unsigned check_nilpotency(const SymbolicMatrix& z);

/// exp(Z) as a finite sum (Z nilpotent).
SymbolicMatrix exp_nilpotent(const SymbolicMatrix& z);

/// A = (conj exp Z)^T exp Z; hermitian with A(0) = I.
SymbolicMatrix gram_matrix(const FlagContext& ctx);

/// Leading principal r x r minor of A.
Poly admissible_minor(const SymbolicMatrix& a, unsigned r);

struct Forbidden23 {
    MultiIndex exponents;  // over the 2m slots
    GRat coefficient;
    int pattern;           // +1: the +1/2 Z_{ai}Z_{cj}... kind, -1: the -1/2 kind
    // witness indices (i, j, alpha, beta, gamma), 1-based
    std::array<unsigned, 5> indices;
};

struct Scan23Report {
    std::vector<Forbidden23> monomials;
    bool degree23_part_matches_patterns;  // (2,3)-part equals the pattern sum
    bool squared_rows_vanish;             // rows 1..r of Z^2 are zero
};

/// Classifies every (2,3)-bidegree monomial of Delta_r against the two
/// surviving pattern kinds; a monomial matching neither is a hard failure.
Scan23Report forbidden_23_scan(const FlagContext& ctx, unsigned r);

struct NoCancellation {
    Rat prefactor;        // +1/2, the coefficient of the entry product
    MultiIndex monomial;  // the coordinate monomial the product expands to
    GRat delta_coefficient;
    bool match;           // Delta_r coefficient equals the full entry-product value
};

/// The specific (2,3) entry product  1/2 Z_{n,1} Z_{n+1,2} conj(Z_{n,1})
/// conj(Z_{2n,2}) conj(Z_{n+1,2n})  survives in Delta_r with its exact
/// coefficient for the one-black-node Sp/SO diagrams with 1 < r <= n-1.
NoCancellation no_cancellation_check(const FlagContext& ctx, unsigned r);

struct FlagVerdict {
    bool has_dual_up_to_order;
    unsigned order;
    std::optional<ForbiddenMonomial> witness;
    Diastasis diastasis;
};

/// Assembles D = sum c_j log Delta_j over the black nodes and scans for
/// forbidden monomials up to the given order.
FlagVerdict flag_dual_verdict(const PaintedDiagram& diagram, const std::vector<Rat>& coeffs,
                              unsigned order);

/// The classification of painted diagrams whose Alekseevsky-Perelomov
/// coordinates are Bochner up to rescaling, shipped as static data:
/// (i) one black node, every group; (ii) two black nodes on SU(d) with equal
/// coefficients; (iii) two black nodes at positions 1 and d on SO(2d) with
/// c_1 = 2 c_d.
struct BochnerCase {
    int id;
    std::string description;
};
std::vector<BochnerCase> bochner_case_table();
std::optional<int> bochner_case(const PaintedDiagram& diagram, const std::vector<Rat>& coeffs);

}  // namespace dia
