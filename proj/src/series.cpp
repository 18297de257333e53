#include "diastasis/series.hpp"

#include <algorithm>

namespace dia {

unsigned norm(const MultiIndex& m) {
    unsigned s = 0;
    for (unsigned e : m) s += e;
    return s;
}

bool norm_lex_less(const MultiIndex& a, const MultiIndex& b) {
    unsigned na = norm(a), nb = norm(b);
    if (na != nb) return na < nb;
    return a < b;
}

static void enumerate_rec(unsigned nvars, unsigned total, unsigned pos, MultiIndex& cur,
                          std::vector<MultiIndex>& out) {
    if (pos + 1 == nvars) {
        cur[pos] = total;
        out.push_back(cur);
        return;
    }
    for (unsigned e = 0; e <= total; ++e) {
        cur[pos] = e;
        enumerate_rec(nvars, total - e, pos + 1, cur, out);
    }
}

std::vector<MultiIndex> enumerate_multiindices(unsigned nvars, unsigned maxnorm) {
    std::vector<MultiIndex> out;
    MultiIndex cur(nvars, 0);
    for (unsigned t = 1; t <= maxnorm; ++t) {
        std::vector<MultiIndex> level;
        enumerate_rec(nvars, t, 0, cur, level);
        std::sort(level.begin(), level.end());
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

HermSeries HermSeries::constant(unsigned nvars, unsigned order, const GRat& c) {
    HermSeries s(nvars, order);
    s.set(MultiIndex(nvars, 0), MultiIndex(nvars, 0), c);
    return s;
}

GRat HermSeries::coeff(const MultiIndex& i, const MultiIndex& j) const {
    auto it = c_.find(TermKey{i, j});
    return it == c_.end() ? GRat() : it->second;
}

GRat HermSeries::constant_term() const {
    return coeff(MultiIndex(nvars_, 0), MultiIndex(nvars_, 0));
}

void HermSeries::set(const MultiIndex& i, const MultiIndex& j, const GRat& v) {
    if (i.size() != nvars_ || j.size() != nvars_)
        throw std::invalid_argument("HermSeries::set: multi-index length mismatch");
    TermKey k{i, j};
    if (v.is_zero())
        c_.erase(k);
    else if (norm(i) + norm(j) <= order_)
        c_[k] = v;
}

void HermSeries::add_term(const MultiIndex& i, const MultiIndex& j, const GRat& v) {
    if (norm(i) + norm(j) > order_) return;
    TermKey k{i, j};
    auto it = c_.find(k);
    if (it == c_.end()) {
        if (!v.is_zero()) c_.emplace(std::move(k), v);
    } else {
        it->second += v;
        if (it->second.is_zero()) c_.erase(it);
    }
}

bool HermSeries::is_hermitian() const {
    for (const auto& [k, v] : c_) {
        if (coeff(k.j, k.i) != v.conj()) return false;
    }
    return true;
}

HermSeries HermSeries::truncated(unsigned new_order) const {
    HermSeries r(nvars_, new_order);
    for (const auto& [k, v] : c_)
        if (norm(k.i) + norm(k.j) <= new_order) r.c_.emplace(k, v);
    return r;
}

HermSeries HermSeries::operator-() const {
    HermSeries r(nvars_, order_);
    for (const auto& [k, v] : c_) r.c_.emplace(k, -v);
    return r;
}

HermSeries& HermSeries::operator+=(const HermSeries& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("HermSeries: variable count mismatch");
    order_ = std::min(order_, o.order_);
    std::erase_if(c_, [&](const auto& kv) { return norm(kv.first.i) + norm(kv.first.j) > order_; });
    for (const auto& [k, v] : o.c_)
        if (norm(k.i) + norm(k.j) <= order_) add_term(k.i, k.j, v);
    return *this;
}

HermSeries& HermSeries::operator-=(const HermSeries& o) { return *this += -o; }

HermSeries HermSeries::scaled(const GRat& s) const {
    HermSeries r(nvars_, order_);
    if (s.is_zero()) return r;
    for (const auto& [k, v] : c_) r.c_.emplace(k, v * s);
    return r;
}

HermSeries HermSeries::wirtinger(unsigned k, bool conjugate) const {
    if (k >= nvars_) throw std::invalid_argument("HermSeries::wirtinger: bad variable");
    HermSeries r(nvars_, order_ == 0 ? 0 : order_ - 1);
    for (const auto& [key, v] : c_) {
        const MultiIndex& m = conjugate ? key.j : key.i;
        if (m[k] == 0) continue;
        TermKey nk = key;
        (conjugate ? nk.j : nk.i)[k] -= 1;
        r.add_term(nk.i, nk.j, v * GRat(Rat((long)m[k])));
    }
    return r;
}

HermSeries series_mul(const HermSeries& a, const HermSeries& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("series_mul: variable count mismatch");
    unsigned n = a.nvars();
    HermSeries r(n, std::min(a.order(), b.order()));
    for (const auto& [ka, va] : a.terms()) {
        unsigned da = norm(ka.i) + norm(ka.j);
        if (da > r.order()) continue;
        for (const auto& [kb, vb] : b.terms()) {
            if (da + norm(kb.i) + norm(kb.j) > r.order()) continue;
            MultiIndex i(n), j(n);
            for (unsigned t = 0; t < n; ++t) {
                i[t] = ka.i[t] + kb.i[t];
                j[t] = ka.j[t] + kb.j[t];
            }
            r.add_term(i, j, va * vb);
        }
    }
    return r;
}

HermSeries series_pow_nat(const HermSeries& a, unsigned long k) {
    HermSeries r = HermSeries::one(a.nvars(), a.order());
    for (unsigned long t = 0; t < k; ++t) r = series_mul(r, a);
    return r;
}

HermSeries series_exp(const HermSeries& a) {
    if (!a.constant_term().is_zero())
        throw std::invalid_argument("series_exp: nonzero constant term");
    HermSeries r = HermSeries::one(a.nvars(), a.order());
    HermSeries term = r;
    for (unsigned k = 1; k <= a.order(); ++k) {
        term = series_mul(term, a).scaled(GRat(Rat(1, (long)k)));
        if (term.is_zero()) break;
        r += term;
    }
    return r;
}

HermSeries series_log(const HermSeries& a) {
    if (a.constant_term() != GRat(1))
        throw std::invalid_argument("series_log: constant term is not 1");
    HermSeries u = a - HermSeries::one(a.nvars(), a.order());
    HermSeries r(a.nvars(), a.order());
    HermSeries upow = HermSeries::one(a.nvars(), a.order());
    for (unsigned k = 1; k <= a.order(); ++k) {
        upow = series_mul(upow, u);
        if (upow.is_zero()) break;
        r += upow.scaled(GRat(Rat(k % 2 ? 1 : -1, (long)k)));
    }
    return r;
}

HermSeries series_pow_rational(const HermSeries& a, const Rat& q) {
    return series_exp(series_log(a).scaled(GRat(q)));
}

HermSeries substitute_negate_bar(const HermSeries& a) {
    HermSeries r(a.nvars(), a.order());
    for (const auto& [k, v] : a.terms())
        r.set(k.i, k.j, norm(k.j) % 2 ? -v : v);
    return r;
}

HermSeries lift_vars(const HermSeries& a, unsigned nvars_new, unsigned new_order) {
    if (nvars_new < a.nvars()) throw std::invalid_argument("lift_vars: shrinking");
    HermSeries r(nvars_new, new_order);
    for (const auto& [k, v] : a.terms()) {
        MultiIndex i = k.i, j = k.j;
        i.resize(nvars_new, 0);
        j.resize(nvars_new, 0);
        r.set(i, j, v);
    }
    return r;
}

HermSeries fiber_slice(const HermSeries& a, unsigned deg_i, unsigned deg_j) {
    if (a.nvars() == 0) throw std::invalid_argument("fiber_slice: no variables");
    unsigned last = a.nvars() - 1;
    HermSeries r(last, a.order());
    for (const auto& [k, v] : a.terms()) {
        if (k.i[last] != deg_i || k.j[last] != deg_j) continue;
        MultiIndex i(k.i.begin(), k.i.end() - 1), j(k.j.begin(), k.j.end() - 1);
        r.set(i, j, v);
    }
    return r;
}

HermSeries permute_vars(const HermSeries& a, const std::vector<unsigned>& perm) {
    if (perm.size() != a.nvars()) throw std::invalid_argument("permute_vars: bad permutation");
    HermSeries r(a.nvars(), a.order());
    for (const auto& [k, v] : a.terms()) {
        MultiIndex i(a.nvars()), j(a.nvars());
        for (unsigned t = 0; t < a.nvars(); ++t) {
            i[t] = k.i[perm[t]];
            j[t] = k.j[perm[t]];
        }
        r.set(i, j, v);
    }
    return r;
}

}  // namespace dia
