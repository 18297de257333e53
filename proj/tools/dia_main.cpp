#include <CLI11.hpp>
#include <iostream>

#include "diastasis/ch_metrics.hpp"
#include "diastasis/curvature.hpp"
#include "diastasis/flag.hpp"
#include "diastasis/inducibility.hpp"
#include "diastasis/json_io.hpp"
#include "diastasis/verify.hpp"

using namespace dia;

namespace {

constexpr unsigned kOrderDefault = 10;
constexpr unsigned kOrderCap = 16;  // series cost grows combinatorially with the order

unsigned checked_order(unsigned order) {
    if (order > kOrderCap)
        throw CLI::ValidationError("--order", "truncation order capped at " +
                                                  std::to_string(kOrderCap));
    return order;
}

std::vector<Rat> parse_rat_list(const std::string& s) {
    std::vector<Rat> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(rat_from_string(cur));
            cur.clear();
        } else
            cur += c;
    }
    return out;
}

std::set<unsigned> parse_uint_set(const std::string& s) {
    std::set<unsigned> out;
    for (const Rat& r : parse_rat_list(s)) {
        if (!is_positive_integer(r)) throw parse_error("expected positive integers: '" + s + "'");
        out.insert((unsigned)r.get_num().get_si());
    }
    return out;
}

void emit(const json& j, bool as_json, const std::string& human) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << human;
}

std::string show_multiindex(const MultiIndex& m) {
    std::string s = "(";
    for (size_t k = 0; k < m.size(); ++k) s += (k ? "," : "") + std::to_string(m[k]);
    return s + ")";
}

std::string show_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& [e, v] : p.terms()) {
        if (!s.empty()) s += " + ";
        std::string coeff = grat_to_string(v);
        if (coeff.find_first_of("+- ") != std::string::npos) coeff = "(" + coeff + ")";
        s += coeff;
        for (unsigned k = 0; k < p.cvars(); ++k) {
            if (e[k]) s += " z" + std::to_string(k + 1) + (e[k] > 1 ? "^" + std::to_string(e[k]) : "");
            if (e[p.cvars() + k])
                s += " zb" + std::to_string(k + 1) +
                     (e[p.cvars() + k] > 1 ? "^" + std::to_string(e[p.cvars() + k]) : "");
        }
    }
    return s;
}

json decision_json(const Decision& d) {
    json j{{"verdict", d.verdict}, {"rule", d.rule}};
    json checked = json::array();
    for (const auto& v : d.checked) checked.push_back(rat_to_string(v));
    j["checked"] = checked;
    if (d.failure)
        j["failure"] = {{"s", d.failure->first}, {"value", rat_to_string(d.failure->second)}};
    return j;
}

int cmd_exit(bool ok) { return ok ? 0 : 1; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for diastasis expansions, Wallach-set decisions,\n"
                 "flag-manifold minors and curvature certificates"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    // wallach ---------------------------------------------------------------
    auto* wallach = app.add_subcommand("wallach", "Wallach set membership");
    std::string w_domain = "CH1", w_x = "1";
    bool w_exclude_zero = false;
    wallach->add_option("--domain", w_domain, "domain descriptor");
    wallach->add_option("--x", w_x, "rational to test, e.g. 3/10")->required();
    wallach->add_flag("--exclude-zero", w_exclude_zero, "test membership in W \\ {0}");

    // decide ----------------------------------------------------------------
    auto* decide = app.add_subcommand("decide", "projective-inducibility decision");
    std::string d_domain = "CH1", d_metric = "g", d_alpha = "1", d_mu = "1";
    unsigned d_order = kOrderDefault;
    bool d_min_alpha = false, d_no_series = false;
    decide->add_option("--domain", d_domain, "base domain descriptor");
    decide->add_option("--metric", d_metric, "g | ghat | dual_g | dual_ghat");
    decide->add_option("--alpha", d_alpha, "metric multiple, rational");
    decide->add_option("--mu", d_mu, "exponent(s), comma-separated rationals");
    decide->add_option("--order", d_order, "series cross-validation order");
    decide->add_flag("--find-min-alpha", d_min_alpha, "report the minimal integer alpha accepted");
    decide->add_flag("--no-series", d_no_series, "skip the series cross-validation");

    // expand ----------------------------------------------------------------
    auto* expand = app.add_subcommand("expand", "generic norm / diastasis series");
    std::string e_domain = "CH1", e_what = "diastasis";
    unsigned e_order = kOrderDefault;
    expand->add_option("--domain", e_domain, "domain descriptor");
    expand->add_option("--what", e_what, "norm | diastasis");
    expand->add_option("--order", e_order, "truncation order");

    // dual ------------------------------------------------------------------
    auto* dual = app.add_subcommand("dual", "Kahler dual of the domain diastasis");
    std::string du_domain = "CH1";
    unsigned du_order = kOrderDefault;
    dual->add_option("--domain", du_domain, "domain descriptor");
    dual->add_option("--order", du_order, "truncation order");

    // forbidden -------------------------------------------------------------
    auto* forb = app.add_subcommand("forbidden", "forbidden-monomial scan");
    std::string f_domain, f_group, f_black, f_coeffs = "1";
    unsigned f_order = kOrderDefault;
    forb->add_option("--domain", f_domain, "domain descriptor (scan -log N)");
    forb->add_option("--group", f_group, "flag group, e.g. SU3");
    forb->add_option("--black", f_black, "black nodes, comma-separated");
    forb->add_option("--c", f_coeffs, "flag coefficients c_j");
    forb->add_option("--order", f_order, "truncation order");

    // flag ------------------------------------------------------------------
    auto* flag = app.add_subcommand("flag", "painted-diagram computations");
    std::string fl_mode = "minors", fl_group = "SU3", fl_black = "1", fl_coeffs = "1";
    unsigned fl_order = 6, fl_r = 0;
    flag->add_option("mode", fl_mode, "minors | verdict | scan23");
    flag->add_option("--group", fl_group, "group, e.g. Sp3");
    flag->add_option("--black", fl_black, "black nodes, comma-separated");
    flag->add_option("--c", fl_coeffs, "coefficients for verdict mode");
    flag->add_option("--order", fl_order, "series order for verdict mode");
    flag->add_option("--r", fl_r, "minor rank for scan23 (defaults to the black node)");

    // curvature ---------------------------------------------------------------
    auto* curv = app.add_subcommand("curvature", "curve curvature certificates");
    std::string c_mode = "hideyuki", c_check = "all";
    curv->add_option("mode", c_mode, "hideyuki");
    curv->add_option("--check", c_check, "all");

    // ch ----------------------------------------------------------------------
    auto* ch = app.add_subcommand("ch", "Cartan-Hartogs potentials");
    std::string ch_mode = "potential", ch_base = "CH1", ch_mu = "1", ch_kind = "g";
    unsigned ch_order = 8;
    ch->add_option("mode", ch_mode, "potential");
    ch->add_option("--base", ch_base, "base domain descriptor");
    ch->add_option("--mu", ch_mu, "exponent(s)");
    ch->add_option("--kind", ch_kind, "g | ghat | g_star | ghat_star");
    ch->add_option("--order", ch_order, "truncation order");

    // verify-paper --------------------------------------------------------------
    auto* verify = app.add_subcommand("verify-paper", "run the full verification suite");
    unsigned v_order = 8;
    bool v_timings = false;
    verify->add_option("--order", v_order, "series order cap for the suite");
    verify->add_flag("--timings", v_timings, "include wall-clock times in JSON output");

    try {
        app.parse(argc, argv);

        if (*wallach) {
            DomainSpec spec = parse_domain(w_domain);
            if (spec.is_product) throw parse_error("wallach: irreducible domain expected");
            WallachSet w = wallach_set(spec.single);
            Rat x = rat_from_string(w_x);
            bool member = w_exclude_zero ? w.member_excluding_zero(x) : w.member(x);
            emit({{"domain", w_domain},
                  {"x", rat_to_string(x)},
                  {"exclude_zero", w_exclude_zero},
                  {"member", member}},
                 as_json,
                 "W(" + w_domain + (w_exclude_zero ? ") \\ {0}" : ")") + " contains " +
                     rat_to_string(x) + ": " + (member ? "yes" : "no") + "\n");
            return 0;
        }

        if (*decide) {
            checked_order(d_order);
            CHKind kind = ch_kind_from_string(d_metric);
            std::vector<Rat> mu = parse_rat_list(d_mu);
            Rat alpha = rat_from_string(d_alpha);
            CHDomain dom = ch_domain(d_domain, mu);
            if (d_min_alpha) {
                if (dom.base.is_product || (kind != CHKind::g && kind != CHKind::ghat))
                    throw parse_error("--find-min-alpha needs an irreducible base and g/ghat");
                long a = minimal_integer_alpha(dom.base.single, mu[0], kind);
                emit({{"minimal_alpha", a}}, as_json,
                     "minimal integer alpha: " + std::to_string(a) + "\n");
                return 0;
            }
            json out;
            std::string human;
            if (d_no_series || dom.base.is_product ||
                (!dom.base.single.has_series_provider() &&
                 (kind == CHKind::g || kind == CHKind::ghat))) {
                Decision dec;
                switch (kind) {
                    case CHKind::g: dec = decide_g_infinite(dom.base.single, alpha, mu[0]); break;
                    case CHKind::ghat:
                        dec = decide_ghat_infinite(dom.base.single, alpha, mu[0]);
                        break;
                    default: dec = decide_dual_finite(alpha, mu); break;
                }
                out = {{"decision", decision_json(dec)}};
                human = "verdict: " + std::string(dec.verdict ? "true" : "false") + " (" +
                        dec.rule + ")\n";
                if (dec.failure)
                    human += "failure at s=" + std::to_string(dec.failure->first) +
                             ", value " + rat_to_string(dec.failure->second) + "\n";
            } else {
                CrossValidation cv = cross_validate(dom, alpha, kind, d_order);
                out = {{"decision", decision_json(cv.decision)},
                       {"series", to_json(cv.series)},
                       {"agree", cv.agree}};
                human = "verdict: " + std::string(cv.decision.verdict ? "true" : "false") + " (" +
                        cv.decision.rule + ")\n";
                if (cv.decision.failure)
                    human += "failure at s=" + std::to_string(cv.decision.failure->first) +
                             ", value " + rat_to_string(cv.decision.failure->second) + "\n";
                human += "series: " +
                         std::string(cv.series.refuted ? "REFUTED" : "CONSISTENT_UP_TO(" +
                                                             std::to_string(d_order) + ")");
                if (cv.series.witness)
                    human += ", witness " + show_multiindex(cv.series.witness_i) + "/" +
                             show_multiindex(cv.series.witness_j) + " = " +
                             grat_to_string(cv.series.witness->value);
                human += std::string("\nagreement: ") + (cv.agree ? "yes" : "NO") + "\n";
                emit(out, as_json, human);
                return cmd_exit(cv.agree);
            }
            emit(out, as_json, human);
            return 0;
        }

        if (*expand) {
            checked_order(e_order);
            DomainSpec spec = parse_domain(e_domain);
            HermSeries s;
            if (spec.is_product)
                s = generic_norm_series(spec.product, e_order);
            else
                s = generic_norm_series(spec.single, e_order);
            if (e_what == "diastasis") s = normalize_diastasis(-series_log(s)).series;
            else if (e_what != "norm") throw parse_error("expand: --what must be norm|diastasis");
            emit(to_json(s), as_json, to_json(s).dump(2) + "\n");
            return 0;
        }

        if (*dual) {
            checked_order(du_order);
            DomainSpec spec = parse_domain(du_domain);
            HermSeries n = spec.is_product ? generic_norm_series(spec.product, du_order)
                                           : generic_norm_series(spec.single, du_order);
            Diastasis d = normalize_diastasis(-series_log(n));
            auto forb = scan_forbidden(d);
            if (!forb.empty()) {
                emit({{"error", "forbidden monomial"},
                      {"i", forb[0].i},
                      {"j", forb[0].j},
                      {"c", grat_to_string(forb[0].coefficient)}},
                     as_json, "no dual: forbidden monomial present\n");
                return 1;
            }
            emit(to_json(dual_diastasis(d).series), as_json,
                 to_json(dual_diastasis(d).series).dump(2) + "\n");
            return 0;
        }

        if (*forb) {
            checked_order(f_order);
            Diastasis d;
            if (!f_group.empty()) {
                PaintedDiagram pd = parse_diagram(f_group, parse_uint_set(f_black));
                FlagVerdict v = flag_dual_verdict(pd, parse_rat_list(f_coeffs), f_order);
                d = v.diastasis;
            } else if (!f_domain.empty()) {
                DomainSpec spec = parse_domain(f_domain);
                HermSeries n = spec.is_product ? generic_norm_series(spec.product, f_order)
                                               : generic_norm_series(spec.single, f_order);
                d = normalize_diastasis(-series_log(n));
            } else {
                throw parse_error("forbidden: need --domain or --group");
            }
            auto list = scan_forbidden(d);
            json arr = json::array();
            std::string human;
            for (const auto& f : list) {
                arr.push_back({{"i", f.i},
                               {"j", f.j},
                               {"kind", {f.kind_i(), f.kind_j()}},
                               {"c", grat_to_string(f.coefficient)}});
                human += "kind (" + std::to_string(f.kind_i()) + "," + std::to_string(f.kind_j()) +
                         ")  " + show_multiindex(f.i) + "/" + show_multiindex(f.j) + "  " +
                         grat_to_string(f.coefficient) + "\n";
            }
            if (list.empty()) human = "no forbidden monomials up to order " +
                                      std::to_string(f_order) + "\n";
            emit({{"order", f_order}, {"forbidden", arr}}, as_json, human);
            return 0;
        }

        if (*flag) {
            PaintedDiagram pd = parse_diagram(fl_group, parse_uint_set(fl_black));
            FlagContext ctx = build_flag(pd);
            if (fl_mode == "minors") {
                SymbolicMatrix a = gram_matrix(ctx);
                json arr = json::array();
                std::string human = pd.group_name() + ", " + std::to_string(ctx.coords.size()) +
                                    " coordinates, nilpotency " + std::to_string(ctx.nilpotency) +
                                    "\n";
                for (unsigned b : pd.black) {
                    Poly minor = admissible_minor(a, b);
                    arr.push_back({{"r", b}, {"delta", to_json(minor)}});
                    human += "Delta_" + std::to_string(b) + " = " + show_poly(minor) + "\n";
                }
                emit({{"group", pd.group_name()},
                      {"coords", ctx.coords.size()},
                      {"nilpotency", ctx.nilpotency},
                      {"minors", arr}},
                     as_json, human);
                return 0;
            }
            if (fl_mode == "verdict") {
                FlagVerdict v = flag_dual_verdict(pd, parse_rat_list(fl_coeffs),
                                                  checked_order(fl_order));
                json out{{"group", pd.group_name()},
                         {"order", v.order},
                         {"has_dual_up_to_order", v.has_dual_up_to_order}};
                std::string human = pd.group_name() + ": " +
                                    (v.has_dual_up_to_order
                                         ? "no forbidden monomials up to order " +
                                               std::to_string(v.order)
                                         : "no Kahler dual");
                if (v.witness) {
                    out["witness"] = {{"i", v.witness->i},
                                      {"j", v.witness->j},
                                      {"kind", {v.witness->kind_i(), v.witness->kind_j()}},
                                      {"c", grat_to_string(v.witness->coefficient)}};
                    human += "; witness kind (" + std::to_string(v.witness->kind_i()) + "," +
                             std::to_string(v.witness->kind_j()) + ")";
                }
                emit(out, as_json, human + "\n");
                return 0;
            }
            if (fl_mode == "scan23") {
                unsigned r = fl_r ? fl_r : *pd.black.begin();
                Scan23Report rep = forbidden_23_scan(ctx, r);
                NoCancellation nc = no_cancellation_check(ctx, r);
                json arr = json::array();
                for (const auto& m : rep.monomials)
                    arr.push_back({{"e", m.exponents},
                                   {"c", grat_to_string(m.coefficient)},
                                   {"pattern", m.pattern}});
                emit({{"group", pd.group_name()},
                      {"r", r},
                      {"patterns_match", rep.degree23_part_matches_patterns},
                      {"witness_prefactor", rat_to_string(nc.prefactor)},
                      {"witness_present", nc.match},
                      {"monomials", arr}},
                     as_json,
                     pd.group_name() + " r=" + std::to_string(r) + ": " +
                         std::to_string(rep.monomials.size()) + " (2,3) monomials, patterns " +
                         (rep.degree23_part_matches_patterns ? "match" : "MISMATCH") +
                         ", witness prefactor +" + rat_to_string(nc.prefactor) +
                         (nc.match ? " present" : " MISSING") + "\n");
                return cmd_exit(rep.degree23_part_matches_patterns && nc.match);
            }
            throw parse_error("flag: unknown mode '" + fl_mode + "'");
        }

        if (*curv) {
            if (c_mode != "hideyuki") throw parse_error("curvature: unknown mode");
            CurvePotential pot = u21_dual_curve_potential();
            RationalFunction h = metric_along_curve(pot);
            std::vector<GRat> dir = {GRat(Rat(1), Rat(1, 2))};
            RationalFunction hx = restrict_to_line(h, dir);
            auto [pnum, pden] = primitive_pair(hx);
            RationalFunction kx = restrict_to_line(sectional_curvature_along_curve(h), dir);
            auto [knum, kden] = primitive_pair(kx);
            Poly p3 = pnum * pnum * pnum;
            Poly R = knum * x_divexact(p3, kden);
            BlowupWitness bw = blowup_witness(R, pnum, 20);
            bool pass = x_degree(R) == 36 && bw.r_positive && bw.p_positive_before_root;
            emit({{"P", to_json(pnum)},
                  {"Q", to_json(pden)},
                  {"R", to_json(R)},
                  {"x0", {{"lo", rat_to_string(bw.lo)}, {"hi", rat_to_string(bw.hi)}}},
                  {"deg_R", x_degree(R)},
                  {"pass", pass}},
                 as_json,
                 "h(x+ix/2) = P/Q with deg P = " + std::to_string(x_degree(pnum)) +
                     ", deg Q = " + std::to_string(x_degree(pden)) + "\n" +
                     "K = R/P^3 with deg R = " + std::to_string(x_degree(R)) + "\n" +
                     "x0 in [" + rat_to_string(bw.lo) + ", " + rat_to_string(bw.hi) + "], " +
                     "K -> +inf certified: " + (pass ? "yes" : "NO") + "\n");
            return cmd_exit(pass);
        }

        if (*ch) {
            if (ch_mode != "potential") throw parse_error("ch: unknown mode");
            CHDomain dom = ch_domain(ch_base, parse_rat_list(ch_mu));
            CHPotential pot = ch_potential(dom, ch_kind_from_string(ch_kind),
                                           checked_order(ch_order));
            emit(to_json(pot.diastasis.series), as_json,
                 to_json(pot.diastasis.series).dump(2) + "\n");
            return 0;
        }

        if (*verify) {
            RunReport rep = run_verification_suite(checked_order(v_order));
            if (as_json) {
                std::cout << rep.to_json(v_timings).dump(2) << "\n";
            } else {
                for (const auto& c : rep.checks)
                    std::cout << (c.ok() ? "PASS" : "FAIL") << "  " << c.name << "  —  "
                              << c.detail << "\n";
                std::cout << (rep.all_pass() ? "all criteria passed" : "FAILURES present")
                          << "\n";
            }
            return cmd_exit(rep.all_pass());
        }
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const parse_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
