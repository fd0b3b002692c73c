#pragma once

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "io.hpp"
#include "verify.hpp"

namespace hessex::cli {

// Exit codes: 0 success, 1 domain error (invalid h, non-corner, zero ring,
// ...), 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"hessex: exact computations in the cohomology of regular nilpotent "
                 "Hessenberg varieties"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");  // frees -h; --h is a value flag here

    std::string h_text, poly_text, w_text, corner_text, method = "all", kind = "f", out_path;
    int n = 0, s = 1, i = 0, j = 0, d = 0, rr = 0, max_n = 3;
    unsigned seed = 12345;
    bool json_out = false;

    app.add_flag("--json", json_out, "emit a single JSON document on stdout");
    app.add_option("--out", out_path, "write output to a file instead of stdout");
    app.fallthrough();

    auto add_sub = [&app](const std::string& name, const std::string& desc) {
        auto* s = app.add_subcommand(name, desc);
        s->set_help_flag("--help", "print help");
        return s;
    };

    auto* gen = add_sub("gen", "print f_{i,j} or g_{i,j}");
    gen->add_option("--n", n, "variable count")->required();
    gen->add_option("--kind", kind, "f or g");
    gen->add_option("--i", i, "row index")->required();
    gen->add_option("--j", j, "column index")->required();

    auto* poincare = add_sub("poincare", "Poincare polynomial of Hess(N,h)");
    poincare->add_option("--h", h_text, "Hessenberg function, e.g. 2,3,4,4")->required();
    poincare->add_option("--method", method, "closed | inductive | oracle | all");

    auto* basis = add_sub("basis", "monomial basis of A_s^h");
    basis->add_option("--h", h_text)->required();
    basis->add_option("--s", s, "filtration index (default 1)");

    auto* hilbert = add_sub("hilbert", "closed Hilbert series of A_s^h");
    hilbert->add_option("--h", h_text)->required();
    hilbert->add_option("--s", s);

    auto* nf = add_sub("nf", "normal form of a polynomial in A_s^h");
    nf->add_option("--h", h_text)->required();
    nf->add_option("--poly", poly_text, "polynomial in the text grammar")->required();
    nf->add_option("--s", s);

    auto* checkreg = add_sub("check-regular",
                                        "regular-sequence check for the A_s^h generators");
    checkreg->add_option("--h", h_text)->required();
    checkreg->add_option("--s", s);

    auto* filtration = add_sub("filtration", "multiplication-by-x_s filtration report");
    filtration->add_option("--h", h_text)->required();

    auto* isocheck = add_sub("iso-check", "A_s^h/<x_s> ~ A_{r_s}^{h^(s)} report");
    isocheck->add_option("--h", h_text)->required();
    isocheck->add_option("--s", s);

    auto* kernel = add_sub("kernel", "kernel basis for a corner removal");
    kernel->add_option("--h", h_text)->required();
    kernel->add_option("--corner", corner_text, "corner as i,j")->required();
    kernel->add_option("--s", s);

    auto* relations = add_sub("relations", "solved linear relations among Schubert classes");
    relations->add_option("--h", h_text)->required();

    auto* schubert = add_sub("schubert", "Schubert polynomial of w");
    schubert->add_option("--w", w_text, "permutation, e.g. 4123")->required();

    auto* altdecomp = add_sub("alt-decomp", "f_{i-1,j} as an alternating sum of Schubert classes");
    altdecomp->add_option("--i", i)->required();
    altdecomp->add_option("--j", j)->required();
    altdecomp->add_option("--n", n)->required();

    auto* monk = add_sub("monk", "Monk expansion of x_r * sigma_w");
    monk->add_option("--r", rr)->required();
    monk->add_option("--w", w_text)->required();

    auto* betaCmd = add_sub("beta", "top-degree generator beta_h");
    betaCmd->add_option("--h", h_text)->required();

    auto* pair = add_sub("pair", "Poincare pairing matrix in degree d");
    pair->add_option("--h", h_text)->required();
    pair->add_option("--d", d)->required();

    auto* hs = add_sub("hess-schubert", "Hessenberg Schubert polynomial (flag case)");
    hs->add_option("--n", n)->required();
    hs->add_option("--w", w_text)->required();

    auto* q71 = add_sub("question71", "Schubert-class basis check (Question 7.1)");
    q71->add_option("--n", n, "check every Hessenberg function on [n]");
    q71->add_option("--h", h_text, "check a single Hessenberg function");

    auto* verifyCmd = add_sub("verify", "run the full property suites");
    verifyCmd->add_option("--max-n", max_n, "suite ceiling (default 3)");
    verifyCmd->add_option("--seed", seed, "seed for randomized property tests");

    std::vector<const char*> argv;
    argv.push_back("hessex");
    for (auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    std::ostringstream buf;
    json doc;
    int exit_code = 0;

    try {
        if (gen->parsed()) {
            if (kind != "f" && kind != "g") throw DomainError("--kind must be f or g");
            MultiPoly p = (kind == "f") ? f_poly(n, i, j) : g_poly(n, i, j);
            if (json_out) doc = to_json(p);
            else buf << to_string(p) << "\n";
        } else if (poincare->parsed()) {
            HessFunc h = parse_hess(h_text);
            if (method != "closed" && method != "inductive" && method != "oracle" && method != "all")
                throw DomainError("--method must be closed, inductive, oracle or all");
            Series closed = hilbert_closed(h, 1);
            // factored product form, grouping equal factors
            std::map<int, int> factor_counts;
            for (int m = 1; m <= h.n(); ++m)
                if (h(m) - m >= 1) factor_counts[h(m) - m]++;
            std::ostringstream factored;
            if (factor_counts.empty()) factored << "1";
            for (auto& [k, cnt] : factor_counts) {
                std::string f = to_string(geometric(k));
                f.erase(std::remove(f.begin(), f.end(), ' '), f.end());
                factored << "(" << f << ")";
                if (cnt > 1) factored << "^" << cnt;
            }
            if (json_out) {
                doc["h"] = to_json(h);
                doc["factored"] = factored.str();
                if (method == "closed" || method == "all") doc["closed"] = to_json(closed);
                if (method == "inductive" || method == "all") {
                    auto ind = poincare_inductive(h);
                    doc["inductive"] = to_json(ind.total);
                    doc["summands"] = json::array();
                    for (auto& sm : ind.summands) doc["summands"].push_back(to_json(sm));
                }
                if (method == "oracle" || method == "all")
                    doc["oracle"] = to_json(
                        oracle_series(h.n(), generator_list(h, 1).polys, dimension(h) + 1));
            } else {
                buf << factored.str() << " = " << to_string(closed) << "\n";
                if (method == "inductive" || method == "all") {
                    auto ind = poincare_inductive(h);
                    buf << "inductive: " << to_string(ind.total) << "\n";
                    for (std::size_t k = 0; k < ind.summands.size(); ++k)
                        buf << "  s=" << (k + 1) << ": " << to_string(ind.summands[k]) << "\n";
                    if (!series_eq(ind.total, closed)) buf << "  MISMATCH with closed form\n";
                }
                if (method == "oracle" || method == "all") {
                    Series orc = oracle_series(h.n(), generator_list(h, 1).polys, dimension(h) + 1);
                    buf << "rank oracle: " << to_string(orc) << "\n";
                    if (!series_eq(orc, closed)) buf << "  MISMATCH with closed form\n";
                }
            }
        } else if (basis->parsed()) {
            HessFunc h = parse_hess(h_text);
            auto mons = monomial_basis(h, s);
            if (json_out) {
                doc["h"] = to_json(h);
                doc["s"] = s;
                doc["basis"] = basis_to_json(mons);
            } else {
                for (auto& e : mons) buf << to_string(MultiPoly::monomial(h.n(), e)) << "\n";
            }
        } else if (hilbert->parsed()) {
            HessFunc h = parse_hess(h_text);
            Series ser = hilbert_closed(h, s);
            if (json_out) doc = to_json(ser);
            else buf << to_string(ser) << "\n";
        } else if (nf->parsed()) {
            HessFunc h = parse_hess(h_text);
            QuotientRing ring(h, s);
            MultiPoly p = parse_poly(poly_text, h.n());
            ClassVector v = ring.normal_form(p);
            if (json_out) doc = class_to_json(v);
            else buf << to_string(ring.representative(v)) << "\n";
        } else if (checkreg->parsed()) {
            HessFunc h = parse_hess(h_text);
            auto rep = is_regular_sequence(h.n(), generator_list(h, s).polys);
            if (json_out) {
                doc["regular"] = rep.regular;
                doc["oracle"] = to_json(rep.oracle);
                doc["expected"] = to_json(rep.expected);
            } else {
                buf << (rep.regular ? "regular sequence" : "NOT a regular sequence") << "\n";
                buf << "oracle series:  " << to_string(rep.oracle) << "\n";
                buf << "product formula: " << to_string(rep.expected) << "\n";
            }
        } else if (filtration->parsed()) {
            HessFunc h = parse_hess(h_text);
            auto rep = filtration_check(h);
            if (json_out) {
                doc["h"] = to_json(h);
                doc["ok"] = rep.ok;
                doc["steps"] = json::array();
                for (auto& st : rep.steps)
                    doc["steps"].push_back({{"s", st.s},
                                            {"dim_s", st.dim_s},
                                            {"dim_s_next", st.dim_s_next},
                                            {"dim_shrunk", st.dim_shrunk},
                                            {"injective", st.injective},
                                            {"dims_match", st.dims_match}});
            } else {
                buf << render_diagram(h);
                for (auto& st : rep.steps)
                    buf << "s=" << st.s << ": dim A_s=" << st.dim_s << " = dim A_{s+1}="
                        << st.dim_s_next << " + dim A_{r_s}^{h^(s)}=" << st.dim_shrunk
                        << (st.injective ? "  [x_s injective]" : "  [x_s NOT injective]")
                        << (st.dims_match ? "" : "  [DIM MISMATCH]") << "\n";
                buf << (rep.ok ? "filtration OK" : "filtration FAILED") << "\n";
            }
        } else if (isocheck->parsed()) {
            HessFunc h = parse_hess(h_text);
            auto rep = iso_check(h, s);
            if (json_out) {
                doc["ok"] = rep.ok;
                doc["series_equal"] = rep.series_equal;
                doc["correspondence_ok"] = rep.correspondence_ok;
                doc["images_vanish"] = rep.images_vanish;
                doc["quotient_series"] = to_json(rep.quotient_series);
                doc["target_series"] = to_json(rep.target_series);
            } else {
                buf << "A_s^h/<x_s> series: " << to_string(rep.quotient_series) << "\n";
                buf << "A_{r_s}^{h^(s)} series: " << to_string(rep.target_series) << "\n";
                buf << "generator correspondence: " << (rep.correspondence_ok ? "ok" : "FAILED")
                    << "\n";
                buf << "images vanish: " << (rep.images_vanish ? "ok" : "FAILED") << "\n";
                buf << (rep.ok ? "iso-check OK" : "iso-check FAILED") << "\n";
            }
        } else if (kernel->parsed()) {
            HessFunc h = parse_hess(h_text);
            auto pos = corner_text.find(',');
            if (pos == std::string::npos) throw DomainError("--corner expects i,j");
            Corner c;
            try {
                c.i = std::stoi(corner_text.substr(0, pos));
                c.j = std::stoi(corner_text.substr(pos + 1));
            } catch (const std::exception&) {
                throw DomainError("--corner expects i,j with integer entries");
            }
            auto kb = kernel_basis(h, c, s);
            if (json_out) {
                doc = json::array();
                for (auto& p : kb) doc.push_back(to_json(p));
            } else {
                for (auto& p : kb) buf << to_string(p) << "\n";
            }
        } else if (relations->parsed()) {
            HessFunc h = parse_hess(h_text);
            auto rel = derive_relations(h);
            if (json_out) {
                doc["h"] = to_json(h);
                doc["solved"] = json::array();
                for (auto& row : rel.solved) doc["solved"].push_back(to_json(row));
            } else {
                if (rel.solved.empty()) buf << "no relations: Schubert classes are a basis\n";
                for (auto& row : rel.solved)
                    buf << "S[" << to_string(row.lead) << "] = " << to_string(row.rhs) << "\n";
            }
        } else if (schubert->parsed()) {
            MultiPoly p = schubert_poly(parse_permutation(w_text));
            if (json_out) doc = to_json(p);
            else buf << to_string(p) << "\n";
        } else if (altdecomp->parsed()) {
            SchubertExpr e = alt_decomposition(i, j, n);
            if (json_out) doc = to_json(e);
            else buf << "f_{" << (i - 1) << "," << j << "} = " << to_string(e) << "\n";
        } else if (monk->parsed()) {
            Permutation w = parse_permutation(w_text);
            SchubertExpr e = monk_expand(rr, w);
            if (json_out) doc = to_json(e);
            else buf << "x" << rr << " * S[" << to_string(w) << "] = " << to_string(e) << "\n";
        } else if (betaCmd->parsed()) {
            HessFunc h = parse_hess(h_text);
            MultiPoly b = beta(h);
            if (json_out) doc = to_json(b);
            else buf << to_string(b) << "\n";
        } else if (pair->parsed()) {
            HessFunc h = parse_hess(h_text);
            PairingData pd(std::make_shared<const QuotientRing>(h, 1));
            auto M = pd.pairing_matrix(d);
            if (json_out) doc = matrix_to_json(M);
            else {
                for (auto& row : M) {
                    for (std::size_t k = 0; k < row.size(); ++k)
                        buf << (k ? " " : "") << to_string(row[k]);
                    buf << "\n";
                }
                buf << (pd.pairing_nonsingular(d) ? "nonsingular" : "SINGULAR") << "\n";
            }
        } else if (hs->parsed()) {
            HessFunc h = HessFunc::validate(std::vector<int>(n, n));
            QuotientRing ring(h, 1);
            MultiPoly p = hess_schubert_flag(ring, parse_permutation(w_text));
            if (json_out) doc = to_json(p);
            else buf << to_string(p) << "\n";
        } else if (q71->parsed()) {
            std::vector<HessFunc> hs_list;
            if (!h_text.empty()) hs_list.push_back(parse_hess(h_text));
            else if (n >= 1) hs_list = enumerate_hess(n);
            else throw DomainError("question71 requires --n or --h");
            bool all_ok = true;
            if (json_out) doc = json::array();
            for (auto& h : hs_list) {
                auto rep = question71_check(h);
                all_ok = all_ok && rep.is_basis;
                if (json_out)
                    doc.push_back({{"h", to_json(h)},
                                   {"admissible", rep.admissible_count},
                                   {"dim", rep.ring_dim},
                                   {"rank", rep.rank},
                                   {"is_basis", rep.is_basis}});
                else
                    buf << to_string(h) << ": admissible=" << rep.admissible_count
                        << " dim=" << rep.ring_dim << " rank=" << rep.rank
                        << (rep.is_basis ? "  basis: yes" : "  basis: NO") << "\n";
            }
            if (!json_out) buf << (all_ok ? "all true" : "SOME FALSE") << "\n";
        } else if (verifyCmd->parsed()) {
            auto rep = verify::verify_all(max_n, buf, seed);
            if (json_out) {
                doc["ok"] = rep.ok;
                doc["checks"] = rep.checks;
                doc["failures"] = rep.failures;
                doc["suites"] = json::array();
                for (auto& s : rep.suites)
                    doc["suites"].push_back(
                        {{"name", s.name}, {"checks", s.checks}, {"failures", s.failures}});
            } else {
                buf << "total: " << (rep.checks - rep.failures) << "/" << rep.checks
                    << " checks passed\n";
            }
            if (!rep.ok) exit_code = 1;  // suite failure is a domain-level failure
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    std::string payload = json_out ? doc.dump(2) + "\n" : buf.str();
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) {
            err << "error: cannot open output file " << out_path << "\n";
            return 1;
        }
        f << payload;
    } else {
        out << payload;
    }
    return exit_code;
}

} // namespace hessex::cli
