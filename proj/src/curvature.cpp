#include "diastasis/curvature.hpp"

namespace dia {

CurvePotential potential_log(const RationalFunction& inner) {
    if (inner.num().constant_term().is_zero())
        throw std::invalid_argument("potential_log: inner function vanishes at 0");
    return CurvePotential{inner};
}

namespace {

using Mat2 = std::array<std::array<RationalFunction, 2>, 2>;

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (unsigned i = 0; i < 2; ++i)
        for (unsigned j = 0; j < 2; ++j)
            r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

Mat2 mat2_add(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (unsigned i = 0; i < 2; ++i)
        for (unsigned j = 0; j < 2; ++j) r[i][j] = a[i][j] + b[i][j];
    return r;
}

/// Exact 2x2 inverse via adjugate/determinant.
Mat2 mat2_inv(const Mat2& a) {
    RationalFunction det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    Mat2 r;
    r[0][0] = a[1][1] / det;
    r[1][1] = a[0][0] / det;
    r[0][1] = -a[0][1] / det;
    r[1][0] = -a[1][0] / det;
    return r;
}

Mat2 mat2_scaled(const Mat2& a, const RationalFunction& s) {
    Mat2 r;
    for (unsigned i = 0; i < 2; ++i)
        for (unsigned j = 0; j < 2; ++j) r[i][j] = a[i][j] * s;
    return r;
}

RationalFunction mat2_det(const Mat2& a) { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

}  // namespace

CurvePotential u21_dual_curve_potential() {
    // one complex variable: slots (z, zbar)
    RationalFunction z(Poly::var_z(1, 0)), zb(Poly::var_zbar(1, 0));
    RationalFunction one(Poly::constant(1, GRat(1))), zero(Poly(1));
    RationalFunction half(Poly::constant(1, GRat(Rat(1, 2))));

    Mat2 W{{{zero, z}, {z, zero}}};
    Mat2 Wb{{{zero, zb}, {zb, zero}}};
    Mat2 I{{{one, zero}, {zero, one}}};
    // V = (z, 0)^T:  V conj(V)^T and conj(V) V^T
    Mat2 VVb{{{z * zb, zero}, {zero, zero}}};
    Mat2 VbV = VVb;

    Mat2 ImW = mat2_add(I, mat2_scaled(W, -one));
    Mat2 IpWb = mat2_add(I, Wb);
    // A* = I + W conj(W) + 1/2 V conj(V)^T
    //        + 1/2 (I-W)(I+conj W)^{-1} conj(V) V^T (I-W)^{-1}(I+conj W)
    Mat2 astar = mat2_add(I, mat2_mul(W, Wb));
    astar = mat2_add(astar, mat2_scaled(VVb, half));
    Mat2 chain = mat2_mul(mat2_mul(ImW, mat2_inv(IpWb)), VbV);
    chain = mat2_mul(chain, mat2_mul(mat2_inv(ImW), IpWb));
    astar = mat2_add(astar, mat2_scaled(chain, half));
    return potential_log(mat2_det(astar));
}

/// d^2 log(p/q) / dz dzbar as a single exact quotient:
/// [(p p_zzb - p_z p_zb) q^2 - (q q_zzb - q_z q_zb) p^2] / (p q)^2.
/// When the q-part vanishes identically (q a product of holomorphic and
/// antiholomorphic factors, the common case for adjugate denominators) the
/// quotient collapses to (p p_zzb - p_z p_zb) / p^2.
static RationalFunction ddbar_log(const Poly& p, const Poly& q) {
    unsigned m = p.cvars();
    if (m != 1) throw std::invalid_argument("ddbar_log: one complex variable expected");
    Poly pz = p.dz(0), pzb = p.dzbar(0), pzzb = p.dz(0).dzbar(0);
    Poly ppart = p * pzzb - pz * pzb;
    Poly qz = q.dz(0), qzb = q.dzbar(0), qzzb = q.dz(0).dzbar(0);
    Poly qpart = q * qzzb - qz * qzb;
    if (qpart.is_zero()) return RationalFunction(ppart, p * p);
    return RationalFunction(ppart * (q * q) - qpart * (p * p), p * p * q * q);
}

RationalFunction metric_along_curve(const CurvePotential& p) {
    if (p.inner.num().is_zero())
        throw std::domain_error("metric_along_curve: determinant identically zero");
    return ddbar_log(p.inner.num(), p.inner.den());
}

RationalFunction sectional_curvature_along_curve(const RationalFunction& h) {
    if (h.is_zero()) throw std::domain_error("sectional_curvature: zero metric");
    // K = -(1/h) ddbar log h = -[(U U_zzb - U_z U_zb) V^2 - (V V_zzb - V_z V_zb) U^2] / (U^3 V)
    const Poly &u = h.num(), &v = h.den();
    Poly uz = u.dz(0), uzb = u.dzbar(0), uzzb = u.dz(0).dzbar(0);
    Poly vz = v.dz(0), vzb = v.dzbar(0), vzzb = v.dz(0).dzbar(0);
    Poly num = (u * uzzb - uz * uzb) * (v * v) - (v * vzzb - vz * vzb) * (u * u);
    return RationalFunction(-num, u * u * u * v);
}

BlowupWitness blowup_witness(const Poly& r_poly, const Poly& p_poly, unsigned bits) {
    BlowupWitness w{};
    w.r_positive = true;
    for (const auto& [e, v] : r_poly.terms()) {
        if (!v.is_real() || sgn(v.re) <= 0) w.r_positive = false;
    }
    auto val = [&](const Rat& x) {
        GRat y = eval_x(p_poly, x);
        if (!y.is_real()) throw std::logic_error("blowup_witness: P is not real");
        return y.re;
    };
    if (sgn(val(Rat(0))) <= 0) throw std::invalid_argument("blowup_witness: P(0) <= 0 expected");
    // first sign change on a 1/64 grid over (0, 1]
    Rat lo(0), hi;
    bool found = false;
    for (long k = 1; k <= 64; ++k) {
        Rat x(k, 64);
        if (sgn(val(x)) < 0) {
            hi = x;
            lo = Rat(k - 1, 64);
            found = true;
            break;
        }
    }
    if (!found) throw std::domain_error("blowup_witness: no sign change of P on (0, 1]");
    // the grid scan guarantees P > 0 on [0, lo] at the sampled rationals
    w.p_positive_before_root = true;
    for (long k = 0; 64 * lo >= k; ++k)
        if (sgn(val(Rat(k, 64))) <= 0) w.p_positive_before_root = false;
    // bisect to width 2^-bits
    w.bisections = 0;
    while (hi - lo > pow_int(Rat(1, 2), (long)bits)) {
        Rat mid((lo + hi) / 2);
        if (sgn(val(mid)) < 0)
            hi = mid;
        else
            lo = mid;
        ++w.bisections;
    }
    w.lo = lo;
    w.hi = hi;
    return w;
}

namespace {

int permutation_sign(const std::vector<unsigned>& perm) {
    int sign = 1;
    std::vector<bool> seen(perm.size(), false);
    for (unsigned k = 0; k < perm.size(); ++k) {
        if (seen[k]) continue;
        unsigned len = 0, c = k;
        while (!seen[c]) {
            seen[c] = true;
            c = perm[c];
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

}  // namespace

RicciSeries ricci_series(const Diastasis& d, unsigned order) {
    unsigned n = d.series.nvars();
    if (order < 2) throw std::invalid_argument("ricci_series: order >= 2 required");
    // Hessian as an n x n matrix of series
    std::vector<std::vector<HermSeries>> h(n, std::vector<HermSeries>(n));
    for (unsigned p = 0; p < n; ++p) {
        HermSeries dp = d.series.truncated(order).wirtinger(p, false);
        for (unsigned q = 0; q < n; ++q) h[p][q] = dp.wirtinger(q, true);
    }
    // the metric at 0 must be strictly positive definite
    CalabiMatrix g11;
    g11.basis = enumerate_multiindices(n, 1);
    g11.entries.assign(n, std::vector<GRat>(n));
    MultiIndex zero_m(n, 0);
    for (unsigned p = 0; p < n; ++p)
        for (unsigned q = 0; q < n; ++q) g11.entries[p][q] = h[p][q].coeff(zero_m, zero_m);

    // Leibniz determinant of the Hessian series (n is small)
    HermSeries det(n, order - 2);
    GRat det0;
    std::vector<unsigned> perm(n);
    for (unsigned k = 0; k < n; ++k) perm[k] = k;
    do {
        int sign = permutation_sign(perm);
        HermSeries t = HermSeries::constant(n, order - 2, GRat(Rat(sign)));
        GRat t0{Rat(sign)};
        for (unsigned k = 0; k < n; ++k) {
            t = series_mul(t, h[k][perm[k]]);
            t0 = t0 * g11.entries[k][perm[k]];
        }
        det += t;
        det0 += t0;
    } while (std::next_permutation(perm.begin(), perm.end()));

    if (!psd_check(g11).psd || det0.is_zero())
        throw std::domain_error("ricci_series: degenerate metric at 0");

    HermSeries unit = det.scaled(GRat(1) / det.constant_term());
    return RicciSeries{normalize_diastasis(-series_log(unit)).series};
}

bool ricci_duality_check(const Diastasis& d, unsigned order) {
    Diastasis dual = dual_diastasis(d);
    RicciSeries r = ricci_series(d, order);
    RicciSeries rdual = ricci_series(dual, order);
    HermSeries expected = normalize_diastasis(substitute_negate_bar(r.series)).series;
    return rdual.series == expected;
}

HermSeries ke_defect(const Diastasis& d, const Rat& lambda, unsigned order) {
    RicciSeries r = ricci_series(d, order);
    HermSeries dd = normalize_diastasis(d.series).series.truncated(order - 2);
    return r.series + dd.scaled(GRat(lambda));
}

}  // namespace dia
