#include "diastasis/flag.hpp"

#include <algorithm>
#include <array>

namespace dia {

unsigned PaintedDiagram::rank() const {
    switch (family) {
        case GroupFamily::SU: return n - 1;
        default: return n;
    }
}

unsigned PaintedDiagram::matrix_dim() const {
    switch (family) {
        case GroupFamily::SU: return n;
        case GroupFamily::Sp: return 2 * n;
        case GroupFamily::SOodd: return 2 * n + 1;
        case GroupFamily::SOeven: return 2 * n;
    }
    return 0;
}

std::string PaintedDiagram::group_name() const {
    switch (family) {
        case GroupFamily::SU: return "SU" + std::to_string(n);
        case GroupFamily::Sp: return "Sp" + std::to_string(n);
        case GroupFamily::SOodd: return "SO" + std::to_string(2 * n + 1);
        case GroupFamily::SOeven: return "SO" + std::to_string(2 * n);
    }
    return "?";
}

PaintedDiagram parse_diagram(const std::string& group, const std::set<unsigned>& black) {
    PaintedDiagram d;
    if (group.rfind("SU", 0) == 0) {
        d.family = GroupFamily::SU;
        d.n = (unsigned)std::stoul(group.substr(2));
        if (d.n < 2) throw parse_error("SU(n) needs n >= 2");
    } else if (group.rfind("Sp", 0) == 0) {
        d.family = GroupFamily::Sp;
        d.n = (unsigned)std::stoul(group.substr(2));
        if (d.n < 1) throw parse_error("Sp(n) needs n >= 1");
    } else if (group.rfind("SO", 0) == 0) {
        unsigned m = (unsigned)std::stoul(group.substr(2));
        if (m < 5) throw parse_error("SO(m) needs m >= 5");
        d.family = (m % 2) ? GroupFamily::SOodd : GroupFamily::SOeven;
        d.n = m / 2;
    } else {
        throw parse_error("unknown group: '" + group + "'");
    }
    d.black = black;
    if (black.empty()) throw parse_error("painted diagram needs at least one black node");
    for (unsigned b : black)
        if (b < 1 || b > d.rank()) throw parse_error("black node out of range");
    return d;
}

namespace {

/// Simple-root coefficients of a root given in eps coordinates.
std::vector<Rat> simple_coeffs(GroupFamily f, unsigned n, const std::vector<int>& c) {
    unsigned rank = (f == GroupFamily::SU) ? n - 1 : n;
    std::vector<Rat> m(rank, Rat(0));
    std::vector<long> s(n + 1, 0);
    for (unsigned k = 1; k <= n; ++k) s[k] = s[k - 1] + c[k - 1];
    switch (f) {
        case GroupFamily::SU:
            for (unsigned k = 1; k <= rank; ++k) m[k - 1] = s[k];
            break;
        case GroupFamily::Sp:
            for (unsigned k = 1; k < n; ++k) m[k - 1] = s[k];
            m[n - 1] = Rat(s[n], 2);
            break;
        case GroupFamily::SOodd:
            for (unsigned k = 1; k < n; ++k) m[k - 1] = s[k];
            m[n - 1] = s[n];
            break;
        case GroupFamily::SOeven:
            for (unsigned k = 1; k + 1 < n; ++k) m[k - 1] = s[k];
            m[n - 2] = Rat(s[n] - 2 * c[n - 1], 2);
            m[n - 1] = Rat(s[n], 2);
            break;
    }
    return m;
}

struct RootEntry {
    std::vector<int> eps;
    std::vector<std::tuple<unsigned, unsigned, int>> entries;  // 0-based (row, col, sign)
};

/// All negative roots of the family with their defining-representation
/// entries (block ordering described in the header).
std::vector<RootEntry> negative_roots(GroupFamily f, unsigned n) {
    std::vector<RootEntry> out;
    auto eps = [&](int p, int q) {  // eps_p - eps_q as a coordinate vector, 1-based
        std::vector<int> v(n, 0);
        if (p > 0) v[p - 1] += 1;
        if (q > 0) v[q - 1] -= 1;
        return v;
    };
    auto eps_sum = [&](int p, int q, int sign) {  // sign*(eps_p + eps_q)
        std::vector<int> v(n, 0);
        v[p - 1] += sign;
        v[q - 1] += sign;
        return v;
    };
    switch (f) {
        case GroupFamily::SU:
            for (unsigned j = 1; j <= n; ++j)
                for (unsigned i = 1; i < j; ++i)  // eps_j - eps_i, negative for i < j
                    out.push_back({eps(j, i), {{j - 1, i - 1, +1}}});
            break;
        case GroupFamily::Sp:
            for (unsigned j = 1; j <= n; ++j)
                for (unsigned i = 1; i < j; ++i)
                    out.push_back({eps(j, i), {{j - 1, i - 1, +1}, {n + i - 1, n + j - 1, -1}}});
            for (unsigned i = 1; i <= n; ++i)
                for (unsigned j = i; j <= n; ++j) {
                    if (i == j)
                        out.push_back({eps_sum(i, i, -1), {{n + i - 1, i - 1, +1}}});
                    else
                        out.push_back(
                            {eps_sum(i, j, -1), {{n + i - 1, j - 1, +1}, {n + j - 1, i - 1, +1}}});
                }
            break;
        case GroupFamily::SOeven:
        case GroupFamily::SOodd:
            for (unsigned j = 1; j <= n; ++j)
                for (unsigned i = 1; i < j; ++i)
                    out.push_back({eps(j, i), {{j - 1, i - 1, +1}, {n + i - 1, n + j - 1, -1}}});
            for (unsigned i = 1; i <= n; ++i)
                for (unsigned j = i + 1; j <= n; ++j)
                    out.push_back(
                        {eps_sum(i, j, -1), {{n + i - 1, j - 1, +1}, {n + j - 1, i - 1, -1}}});
            if (f == GroupFamily::SOodd)
                for (unsigned i = 1; i <= n; ++i)
                    out.push_back({eps(0, i), {{n + i - 1, 2 * n, +1}, {2 * n, i - 1, -1}}});
            break;
    }
    return out;
}

SymbolicMatrix zero_matrix(unsigned dim, unsigned m) {
    return SymbolicMatrix(dim, std::vector<Poly>(dim, Poly(m)));
}

SymbolicMatrix mat_mul(const SymbolicMatrix& a, const SymbolicMatrix& b) {
    unsigned dim = (unsigned)a.size(), m = a[0][0].cvars();
    SymbolicMatrix r = zero_matrix(dim, m);
    for (unsigned i = 0; i < dim; ++i)
        for (unsigned k = 0; k < dim; ++k) {
            if (a[i][k].is_zero()) continue;
            for (unsigned j = 0; j < dim; ++j) {
                if (b[k][j].is_zero()) continue;
                r[i][j] += a[i][k] * b[k][j];
            }
        }
    return r;
}

bool mat_is_zero(const SymbolicMatrix& a) {
    for (const auto& row : a)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

SymbolicMatrix conj_transpose(const SymbolicMatrix& a) {
    unsigned dim = (unsigned)a.size(), m = a[0][0].cvars();
    SymbolicMatrix r = zero_matrix(dim, m);
    for (unsigned i = 0; i < dim; ++i)
        for (unsigned j = 0; j < dim; ++j) r[i][j] = a[j][i].conj();
    return r;
}

}  // namespace

FlagContext build_flag(const PaintedDiagram& diagram) {
    FlagContext ctx;
    ctx.diagram = diagram;
    auto negs = negative_roots(diagram.family, diagram.n);
    std::vector<RootEntry> chart;
    for (const auto& r : negs) {
        // -root is the positive partner; keep roots whose positive partner
        // meets a black node
        std::vector<int> pos(r.eps.size());
        for (size_t k = 0; k < pos.size(); ++k) pos[k] = -r.eps[k];
        auto m = simple_coeffs(diagram.family, diagram.n, pos);
        bool in_q = false;
        for (unsigned b : diagram.black)
            if (sgn(m[b - 1]) > 0) in_q = true;
        if (in_q) chart.push_back(r);
    }
    std::sort(chart.begin(), chart.end(), [](const RootEntry& x, const RootEntry& y) {
        return x.entries[0] < y.entries[0];
    });
    unsigned m = (unsigned)chart.size(), dim = diagram.matrix_dim();
    ctx.Z = zero_matrix(dim, m);
    for (unsigned k = 0; k < m; ++k) {
        CoordRoot cr;
        cr.eps = chart[k].eps;
        cr.entries = chart[k].entries;
        cr.label = "z" + std::to_string(k + 1);
        ctx.coords.push_back(cr);
        for (auto [row, col, sign] : chart[k].entries)
            ctx.Z[row][col] += Poly::var_z(m, k).scaled(GRat(Rat(sign)));
    }
    ctx.nilpotency = check_nilpotency(ctx.Z);
    return ctx;
}

unsigned check_nilpotency(const SymbolicMatrix& z) {
    unsigned dim = (unsigned)z.size();
    SymbolicMatrix p = z;
    for (unsigned k = 1; k <= dim + 1; ++k) {
        if (mat_is_zero(p)) return k;
        p = mat_mul(p, z);
    }
    throw std::logic_error("check_nilpotency: matrix is not nilpotent");
}

SymbolicMatrix exp_nilpotent(const SymbolicMatrix& z) {
    unsigned dim = (unsigned)z.size(), m = z[0][0].cvars();
    SymbolicMatrix r = zero_matrix(dim, m);
    for (unsigned i = 0; i < dim; ++i) r[i][i] = Poly::constant(m, GRat(1));
    SymbolicMatrix p = r;
    Rat fact(1);
    for (unsigned k = 1; k <= dim; ++k) {
        p = mat_mul(p, z);
        if (mat_is_zero(p)) break;
        fact *= (long)k;
        for (unsigned i = 0; i < dim; ++i)
            for (unsigned j = 0; j < dim; ++j) r[i][j] += p[i][j].scaled(GRat(Rat(1 / fact)));
    }
    return r;
}

SymbolicMatrix gram_matrix(const FlagContext& ctx) {
    SymbolicMatrix e = exp_nilpotent(ctx.Z);
    return mat_mul(conj_transpose(e), e);
}

Poly admissible_minor(const SymbolicMatrix& a, unsigned r) {
    if (r == 0 || r > a.size()) throw std::invalid_argument("admissible_minor: rank out of range");
    return leading_minor(a, r);
}

/// (2,3)-bidegree part of a polynomial.
static Poly part_23(const Poly& p) {
    Poly r(p.cvars());
    for (const auto& [e, v] : p.terms()) {
        auto [dz, dzb] = Poly::bidegree(e, p.cvars());
        if (dz == 2 && dzb == 3) r.add_term(e, v);
    }
    return r;
}

Scan23Report forbidden_23_scan(const FlagContext& ctx, unsigned r) {
    Scan23Report rep;
    unsigned m = (unsigned)ctx.coords.size();
    SymbolicMatrix a = gram_matrix(ctx);
    Poly delta = admissible_minor(a, r);
    Poly target = part_23(delta);

    // rows 1..r of Z^2 vanish (rows 1..r of Z already do), which kills the
    // two pattern kinds built from (T Zbar^2)_{ij}
    SymbolicMatrix z2 = mat_mul(ctx.Z, ctx.Z);
    rep.squared_rows_vanish = true;
    for (unsigned i = 0; i < r; ++i)
        for (unsigned j = 0; j < ctx.Z.size(); ++j)
            if (!z2[i][j].is_zero()) rep.squared_rows_vanish = false;

    // enumerate the surviving pattern instances and collect them per monomial
    auto entry = [&](unsigned row, unsigned col) -> const Poly& { return ctx.Z[row - 1][col - 1]; };
    unsigned dim = (unsigned)ctx.Z.size();
    Poly patterns(m);
    std::vector<Forbidden23> found;
    for (unsigned i = 1; i <= r; ++i)
        for (unsigned j = 1; j <= r; ++j) {
            if (i == j) continue;
            for (unsigned al = r + 1; al <= dim; ++al)
                for (unsigned be = r + 1; be <= dim; ++be)
                    for (unsigned ga = r + 1; ga <= dim; ++ga) {
                        // -1/2 Z_{ga i} Z_{al j} conj(Z_{al i} Z_{be j} Z_{ga be})
                        Poly m1 = entry(ga, i) * entry(al, j) *
                                  (entry(al, i) * entry(be, j) * entry(ga, be)).conj();
                        if (!m1.is_zero()) {
                            Poly p = m1.scaled(GRat(Rat(-1, 2)));
                            patterns += p;
                            for (const auto& [e, v] : p.terms())
                                found.push_back({e, v, -1, {i, j, al, be, ga}});
                        }
                        // +1/2 Z_{al i} Z_{ga j} conj(Z_{al i} Z_{be j} Z_{ga be})
                        Poly m2 = entry(al, i) * entry(ga, j) *
                                  (entry(al, i) * entry(be, j) * entry(ga, be)).conj();
                        if (!m2.is_zero()) {
                            Poly p = m2.scaled(GRat(Rat(1, 2)));
                            patterns += p;
                            for (const auto& [e, v] : p.terms())
                                found.push_back({e, v, +1, {i, j, al, be, ga}});
                        }
                    }
        }
    rep.degree23_part_matches_patterns = (target == patterns);

    for (const auto& [e, v] : target.terms()) {
        bool matched = false;
        for (const auto& f : found)
            if (f.exponents == e) {
                rep.monomials.push_back({e, v, f.pattern, f.indices});
                matched = true;
                break;
            }
        if (!matched)
            throw std::logic_error("forbidden_23_scan: unclassifiable (2,3) monomial in Delta_r");
    }
    return rep;
}

NoCancellation no_cancellation_check(const FlagContext& ctx, unsigned r) {
    const PaintedDiagram& d = ctx.diagram;
    if (d.family == GroupFamily::SU)
        throw std::invalid_argument("no_cancellation_check: Sp/SO families only");
    if (!(r > 1 && r <= d.n - 1))
        throw std::invalid_argument("no_cancellation_check: need 1 < r <= n-1");
    unsigned n = d.n;
    auto entry = [&](unsigned row, unsigned col) -> const Poly& { return ctx.Z[row - 1][col - 1]; };
    // 1/2 Z_{n,1} Z_{n+1,2} conj(Z_{n,1}) conj(Z_{2n,2}) conj(Z_{n+1,2n})
    Poly prod = entry(n, 1) * entry(n + 1, 2) *
                (entry(n, 1) * entry(2 * n, 2) * entry(n + 1, 2 * n)).conj();
    if (prod.is_zero())
        throw std::logic_error("no_cancellation_check: entry product vanished identically");
    Poly scaled = prod.scaled(GRat(Rat(1, 2)));
    if (scaled.terms().size() != 1)
        throw std::logic_error("no_cancellation_check: entry product is not a single monomial");
    auto [e, v] = *scaled.terms().begin();
    Poly delta = admissible_minor(gram_matrix(ctx), r);
    NoCancellation out;
    out.prefactor = Rat(1, 2);
    out.monomial = e;
    out.delta_coefficient = delta.coeff(e);
    out.match = (out.delta_coefficient == v) && !out.delta_coefficient.is_zero();
    return out;
}

FlagVerdict flag_dual_verdict(const PaintedDiagram& diagram, const std::vector<Rat>& coeffs,
                              unsigned order) {
    if (coeffs.size() != diagram.black.size())
        throw std::invalid_argument("flag_dual_verdict: one coefficient per black node");
    for (const auto& c : coeffs)
        if (sgn(c) <= 0) throw std::invalid_argument("flag_dual_verdict: coefficients must be positive");
    FlagContext ctx = build_flag(diagram);
    SymbolicMatrix a = gram_matrix(ctx);
    unsigned m = (unsigned)ctx.coords.size();
    HermSeries d(m, order);
    size_t idx = 0;
    for (unsigned b : diagram.black) {
        Poly minor = admissible_minor(a, b);
        d += series_log(minor.to_series(order)).scaled(GRat(coeffs[idx]));
        ++idx;
    }
    FlagVerdict v;
    v.order = order;
    v.diastasis = normalize_diastasis(d);
    auto forb = scan_forbidden(v.diastasis);
    v.has_dual_up_to_order = forb.empty();
    if (!forb.empty()) v.witness = forb.front();
    return v;
}

std::vector<BochnerCase> bochner_case_table() {
    return {
        {1, "one black node, every classical group, every coefficient"},
        {2, "two black nodes, SU(d), equal coefficients"},
        {3, "two black nodes at positions 1 and d, SO(2d), c_1 = 2 c_d"},
    };
}

std::optional<int> bochner_case(const PaintedDiagram& d, const std::vector<Rat>& coeffs) {
    if (d.black.size() == 1) return 1;
    if (d.black.size() == 2 && d.family == GroupFamily::SU && coeffs.size() == 2 &&
        coeffs[0] == coeffs[1])
        return 2;
    if (d.black.size() == 2 && d.family == GroupFamily::SOeven && coeffs.size() == 2) {
        std::vector<unsigned> b(d.black.begin(), d.black.end());
        if (b[0] == 1 && b[1] == d.rank() && coeffs[0] == 2 * coeffs[1]) return 3;
    }
    return std::nullopt;
}

}  // namespace dia
