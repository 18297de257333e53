#include "diastasis/calabi.hpp"

#include <algorithm>

namespace dia {

Diastasis normalize_diastasis(const HermSeries& potential) {
    if (!potential.is_hermitian())
        throw std::invalid_argument("normalize_diastasis: input is not hermitian");
    HermSeries r(potential.nvars(), potential.order());
    MultiIndex zero(potential.nvars(), 0);
    for (const auto& [k, v] : potential.terms()) {
        if (norm(k.i) == 0 || norm(k.j) == 0) continue;
        r.set(k.i, k.j, v);
    }
    return Diastasis{r};
}

std::vector<ForbiddenMonomial> scan_forbidden(const Diastasis& d) {
    std::vector<ForbiddenMonomial> out;
    for (const auto& [k, v] : d.series.terms())
        if ((norm(k.i) % 2) != (norm(k.j) % 2)) out.push_back({k.i, k.j, v});
    return out;
}

bool has_kahler_dual(const Diastasis& d) { return scan_forbidden(d).empty(); }

Diastasis dual_diastasis(const Diastasis& d) {
    auto forb = scan_forbidden(d);
    if (!forb.empty())
        throw std::domain_error("dual_diastasis: forbidden monomial present, dual is not real");
    return Diastasis{-substitute_negate_bar(d.series)};
}

std::pair<unsigned, unsigned> CalabiMatrix::block_key(unsigned idx) const {
    const MultiIndex& m = basis.at(idx);
    if (!has_fiber) return {norm(m), 0};
    unsigned fiber = m.back();
    return {norm(m) - fiber, fiber};
}

bool CalabiMatrix::is_hermitian() const {
    for (unsigned r = 0; r < size(); ++r)
        for (unsigned c = 0; c < size(); ++c)
            if (entries[r][c] != entries[c][r].conj()) return false;
    return true;
}

CalabiMatrix calabi_matrix(const Diastasis& d, unsigned order, bool fiber_blocks) {
    HermSeries e = series_exp(d.series.truncated(order)) - HermSeries::one(d.series.nvars(), order);
    CalabiMatrix m;
    m.basis = enumerate_multiindices(d.series.nvars(), order);
    m.has_fiber = fiber_blocks;
    unsigned n = m.size();
    m.entries.assign(n, std::vector<GRat>(n));
    for (unsigned r = 0; r < n; ++r)
        for (unsigned c = 0; c < n; ++c) m.entries[r][c] = e.coeff(m.basis[r], m.basis[c]);
    return m;
}

PsdResult psd_check(const CalabiMatrix& m) {
    if (!m.is_hermitian()) throw std::invalid_argument("psd_check: matrix is not hermitian");
    unsigned n = m.size();
    std::vector<std::vector<GRat>> a = m.entries;
    std::vector<unsigned> live(n);
    for (unsigned k = 0; k < n; ++k) live[k] = k;

    while (!live.empty()) {
        // largest diagonal pivot (diagonals of a hermitian matrix are real)
        unsigned best = 0;
        for (unsigned t = 0; t < live.size(); ++t) {
            if (!a[live[t]][live[t]].is_real())
                throw std::logic_error("psd_check: non-real diagonal");
            if (a[live[t]][live[t]].re > a[live[best]][live[best]].re) best = t;
        }
        unsigned p = live[best];
        Rat piv = a[p][p].re;
        if (sgn(piv) < 0) return {false, PsdWitness{p, p, a[p][p], false}};
        if (sgn(piv) == 0) {
            // every remaining diagonal is <= 0, hence 0 or negative
            for (unsigned t : live) {
                if (sgn(a[t][t].re) < 0) return {false, PsdWitness{t, t, a[t][t], false}};
                for (unsigned u : live) {
                    if (u == t) continue;
                    if (!a[t][u].is_zero()) {
                        GRat minor = -(a[t][u] * a[t][u].conj());
                        return {false, PsdWitness{t, u, minor, true}};
                    }
                }
            }
            return {true, std::nullopt};  // remaining block is identically zero
        }
        live.erase(live.begin() + best);
        for (unsigned r : live)
            for (unsigned c : live) {
                GRat upd = a[r][p] * a[p][c] / a[p][p];
                a[r][c] -= upd;
            }
    }
    return {true, std::nullopt};
}

ProjectiveVerdict projective_witness(const Diastasis& d, unsigned order) {
    CalabiMatrix m = calabi_matrix(d, order);
    PsdResult r = psd_check(m);
    ProjectiveVerdict v;
    v.refuted = !r.psd;
    v.order = order;
    v.witness = r.witness;
    if (r.witness) {
        v.witness_i = m.basis[r.witness->row];
        v.witness_j = m.basis[r.witness->col];
    }
    return v;
}

}  // namespace dia
