#pragma once

#include <iostream>
#include <random>

#include "pairing.hpp"
#include "quotient.hpp"
#include "relations.hpp"

namespace hessex::verify {

struct SuiteResult {
    std::string name;
    long long checks = 0;
    long long failures = 0;
    std::vector<std::string> messages;

    void check(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++failures;
            if (messages.size() < 25) messages.push_back(what);
        }
    }
};

// Quotient rings are immutable after construction, so suites share them.
class RingCache {
public:
    std::shared_ptr<const QuotientRing> get(const HessFunc& h, int s) {
        auto key = std::make_pair(h.values(), s);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        auto ring = std::make_shared<const QuotientRing>(h, s);
        cache_.emplace(std::move(key), ring);
        return ring;
    }

private:
    std::map<std::pair<std::vector<int>, int>, std::shared_ptr<const QuotientRing>> cache_;
};

inline MultiPoly random_poly(std::mt19937& rng, int nvars, int max_terms, int max_exp) {
    std::uniform_int_distribution<int> nt(0, max_terms), ex(0, max_exp), co(-4, 4), de(1, 3);
    MultiPoly p(nvars);
    int terms = nt(rng);
    for (int t = 0; t < terms; ++t) {
        ExponentVec e(nvars);
        for (int k = 0; k < nvars; ++k) e[k] = ex(rng);
        p.add_term(std::move(e), Rational(co(rng), de(rng)));
    }
    return p;
}

inline SuiteResult suite_polycore(unsigned seed) {
    SuiteResult r;
    r.name = "polycore";
    std::mt19937 rng(seed);
    for (int it = 0; it < 40; ++it) {
        int nvars = 2 + static_cast<int>(rng() % 3);
        MultiPoly a = random_poly(rng, nvars, 5, 3);
        MultiPoly b = random_poly(rng, nvars, 5, 3);
        MultiPoly c = random_poly(rng, nvars, 5, 3);
        r.check((a * b) * c == a * (b * c), "associativity of *");
        r.check(a * (b + c) == a * b + a * c, "distributivity");
        r.check(a * b == b * a, "commutativity of *");
        r.check(a + b - b == a, "additive inverse");
        int i = 1 + static_cast<int>(rng() % (nvars - 1));
        r.check(divided_difference(divided_difference(a, i), i).is_zero(),
                "divided difference squares to zero");
        MultiPoly sum = MultiPoly::zero(nvars);
        for (int d = 0; d <= std::max(a.degree(), 0); ++d)
            sum = sum + homogeneous_component(a, d);
        r.check(sum == a, "homogeneous components partition");
        r.check(parse_poly(to_string(a), nvars) == a, "text round-trip");
    }
    return r;
}

inline SuiteResult suite_hessfn(int max_n) {
    SuiteResult r;
    r.name = "hessfn";
    const long long catalan[] = {1, 1, 2, 5, 14, 42, 132};
    int cap = std::min(max_n, 6);
    for (int n = 1; n <= cap; ++n) {
        auto all = enumerate_hess(n);
        r.check(static_cast<long long>(all.size()) == catalan[n],
                "Catalan count at n=" + std::to_string(n));
        for (auto& h : all) {
            int p = p_of_h(h);
            for (int s = 1; s <= h.n(); ++s) {
                if (n >= 2) {
                    HessFunc hs = shrink(h, s);  // validates internally
                    if (s <= p)
                        r.check(r_s(h, s) <= p_of_h(hs),
                                "r_s <= p(h^(s)) for h=" + to_string(h) + " s=" + std::to_string(s));
                }
            }
            for (auto& c : corners(h)) {
                r.check(r_s(h, c.i) == c.j, "corner (i,j) has r_i = j, h=" + to_string(h));
                if (c.i > c.j) {
                    HessFunc hp = remove_corner(h, c);
                    r.check(box_count(hp) == box_count(h) - 1, "corner removal deletes one box");
                    r.check(contains(h, hp), "h' contained in h after removal");
                }
            }
        }
    }
    return r;
}

inline SuiteResult suite_gens(int max_n) {
    SuiteResult r;
    r.name = "gens";
    // Lemma 2.3 recursions and the exact identity f_{i,j} = x_j g_{i,j} + g_{i,j-1}.
    int N = 8;
    for (int i = 1; i <= N; ++i) {
        for (int j = 1; j <= i; ++j) {
            MultiPoly f = f_poly(N, i, j), g = g_poly(N, i, j);
            int fd, gd;
            r.check(f.is_homogeneous(&fd) && fd == i - j + 1, "f homogeneous of degree i-j+1");
            r.check(g.is_homogeneous(&gd) && (g.is_zero() || gd == i - j),
                    "g homogeneous of degree i-j");
            MultiPoly gj1 = (j >= 2) ? g_poly(N, i, j - 1) : MultiPoly::zero(N);
            r.check(f == MultiPoly::variable(N, j) * g + gj1,
                    "f_{i,j} = x_j g_{i,j} + g_{i,j-1} at (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
            if (j < i) {
                MultiPoly fprev = (j >= 2) ? f_poly(N, i - 1, j - 1) : MultiPoly::zero(N);
                MultiPoly gprev = (j >= 2) ? g_poly(N, i - 1, j - 1) : MultiPoly::zero(N);
                MultiPoly xj_m_xi = MultiPoly::variable(N, j) - MultiPoly::variable(N, i);
                r.check(f == fprev + xj_m_xi * f_poly(N, i - 1, j), "f recursion");
                r.check(g == gprev + xj_m_xi * g_poly(N, i - 1, j), "g recursion");
            }
        }
    }
    // Lemma 4.2 memberships and the Lemma 4.3 ideal equality, small n.
    auto member = [](const std::vector<MultiPoly>& gens, const MultiPoly& p) {
        if (p.is_zero()) return true;
        GradedReducer red(p.nvars(), gens,
                          [](const ExponentVec& a, const ExponentVec& b) {
                              return grlex_greater(a, b);
                          },
                          p.degree());
        return red.reduce(p).empty();
    };
    int cap = std::min(max_n, 4);
    for (int n = 2; n <= cap; ++n) {
        for (auto& h : enumerate_hess(n)) {
            for (int j = 2; j <= n; ++j) {
                std::vector<MultiPoly> fg, gg;
                for (int m = 1; m <= j - 1; ++m) {
                    fg.push_back(f_poly(n, h(m), m));
                    gg.push_back(g_poly(n, h(m), m));
                }
                for (int i = h(j - 1); i <= n; ++i) {
                    r.check(member(fg, f_poly(n, i, j - 1)), "Lemma 4.2 for f, h=" + to_string(h));
                    r.check(member(gg, g_poly(n, i, j - 1)), "Lemma 4.2 for g, h=" + to_string(h));
                }
            }
            for (int j = 1; j <= n; ++j) {
                std::vector<MultiPoly> A, B;
                for (int m = 1; m <= n; ++m) {
                    MultiPoly base = (m < j) ? g_poly(n, h(m), m) : f_poly(n, h(m), m);
                    A.push_back(base);
                    B.push_back(m == j ? MultiPoly::variable(n, j) * g_poly(n, h(j), j) : base);
                }
                r.check(member(B, A[j - 1]) && member(A, B[j - 1]),
                        "Lemma 4.3 ideal equality, h=" + to_string(h) + " j=" + std::to_string(j));
            }
        }
    }
    return r;
}

inline SuiteResult suite_quotient(int max_n, RingCache& cache) {
    SuiteResult r;
    r.name = "quotient";
    int lin = std::min(max_n, 5), comb = std::min(max_n, 6);

    // Eq (6.1) == Eq (6.2) == closed form, combinatorial only.
    for (int n = 1; n <= comb; ++n) {
        for (auto& h : enumerate_hess(n)) {
            Series closed = hilbert_closed(h, 1);
            Series prod{1};
            for (int m = 1; m <= n; ++m) prod = series_mul(prod, geometric(h(m) - m));
            r.check(series_eq(closed, prod), "closed == product formula, h=" + to_string(h));
            r.check(series_eq(poincare_inductive(h).total, closed),
                    "inductive == closed, h=" + to_string(h));
        }
    }

    // Rank-oracle Hilbert series equals the product formula for every
    // generator list (Prop 2.10 certifying Lemmas 4.5/4.6 instances).
    for (int n = 1; n <= lin; ++n) {
        for (auto& h : enumerate_hess(n)) {
            int p = p_of_h(h);
            for (int s = 1; s <= p; ++s) {
                auto rep = is_regular_sequence(n, generator_list(h, s).polys);
                r.check(rep.regular, "regular sequence, h=" + to_string(h) + " s=" + std::to_string(s));
                r.check(series_eq(rep.oracle, hilbert_closed(h, s)),
                        "oracle series == closed, h=" + to_string(h) + " s=" + std::to_string(s));
            }
        }
    }

    // dim A_1^h = prod (h(m)-m+1) = #basis monomials.
    for (int n = 1; n <= lin; ++n) {
        for (auto& h : enumerate_hess(n)) {
            long long prod = 1;
            for (int m = 1; m <= n; ++m) prod *= h(m) - m + 1;
            auto ring = cache.get(h, 1);
            r.check(ring->dim() == prod, "dim A_1 product rule, h=" + to_string(h));
        }
    }

    // NF is idempotent and a ring map on classes.
    {
        std::mt19937 rng(2024);
        for (auto hv : {std::vector<int>{2, 3, 3}, {2, 4, 4, 4}, {3, 3, 3}}) {
            HessFunc h = HessFunc::validate(hv);
            auto ring = cache.get(h, 1);
            for (int it = 0; it < 10; ++it) {
                MultiPoly p = random_poly(rng, h.n(), 6, 3);
                MultiPoly q = random_poly(rng, h.n(), 6, 3);
                ClassVector np = ring->normal_form(p);
                r.check(ring->normal_form(ring->representative(np)) == np, "NF idempotent");
                ClassVector direct = ring->normal_form(p * q);
                ClassVector via = ring->normal_form(ring->representative(np) *
                                                    ring->representative(ring->normal_form(q)));
                r.check(direct == via, "NF is a ring map on classes");
            }
        }
    }

    // Literal Macaulay slice rank agrees with the incremental reducer.
    for (auto hv : {std::vector<int>{2, 3, 3}, {3, 3, 3}, {2, 2}}) {
        HessFunc h = HessFunc::validate(hv);
        auto gens = generator_list(h, 1).polys;
        int n = h.n();
        int top = dimension(h) + 1;
        GradedReducer red(n, gens,
                          [](const ExponentVec& a, const ExponentVec& b) {
                              return grlex_greater(a, b);
                          },
                          top);
        for (int d = 0; d <= top; ++d) {
            long long M = static_cast<long long>(enumerate_monomials(n, d).size());
            r.check(graded_slice_dim(gens, d) == M - red.qdim(d),
                    "literal slice rank == reducer, h=" + to_string(h) + " d=" + std::to_string(d));
        }
    }

    // Filtration and quotient isomorphism checks.
    for (int n = 1; n <= lin; ++n) {
        for (auto& h : enumerate_hess(n)) {
            r.check(filtration_check(h).ok, "filtration, h=" + to_string(h));
            for (int s = 1; s <= p_of_h(h); ++s)
                r.check(iso_check(h, s).ok,
                        "iso A_s/<x_s> ~ A_{r_s}^{h^(s)}, h=" + to_string(h) + " s=" + std::to_string(s));
        }
    }

    // Lemma 2.8 instances used by Lemma 7.7: multiplication by g_{h(l),l}
    // embeds A_l^h/<x_l> into A_l^h.
    for (int n = 2; n <= std::min(max_n, 4); ++n) {
        for (auto& h : enumerate_hess(n)) {
            for (int l = 1; l <= p_of_h(h); ++l) {
                auto Al = cache.get(h, l);
                std::vector<MultiPoly> qg = generator_list(h, l).polys;
                qg.push_back(MultiPoly::variable(n, l));
                GradedReducer dom(n, qg,
                                  [](const ExponentVec& a, const ExponentVec& b) {
                                      return grlex_greater(a, b);
                                  },
                                  Al->top_degree() + 1);
                MultiPoly g = g_poly(n, h(l), l);
                std::vector<std::vector<Rational>> rows;
                long long domdim = 0;
                for (int d = 0; d <= dom.max_degree(); ++d) {
                    for (auto& m : dom.surviving_monomials(d)) {
                        ++domdim;
                        rows.push_back(detail::class_to_dense(
                            Al->normal_form(g * MultiPoly::monomial(n, m)), Al->basis()));
                    }
                }
                r.check(linalg::rank_of_rows(rows) == domdim,
                        "x g_{h(l),l} injective, h=" + to_string(h) + " l=" + std::to_string(l));
            }
        }
    }
    return r;
}

inline SuiteResult suite_schubert(int max_n, RingCache& cache) {
    SuiteResult r;
    r.name = "schubert";
    int lin = std::min(max_n, 5);

    // alt_decomposition(i,j,n) == f_{i-1,j} exactly, n <= 6; and the one-line
    // construction of w_k matches the product of simple transpositions.
    for (int n = 2; n <= 6; ++n) {
        for (int i = 2; i <= n; ++i)
            for (int j = 1; j < i; ++j) {
                for (int k = 1; k <= i - j; ++k)
                    r.check(build_w_k(i, j, k, n) == build_w_k_by_product(i, j, k, n),
                            "w_k one-line == product");
                r.check(to_poly(alt_decomposition(i, j, n), n) == f_poly(n, i - 1, j),
                        "alt decomposition == f_{i-1,j} at (" + std::to_string(i) + "," +
                            std::to_string(j) + ") n=" + std::to_string(n));
            }
    }

    // Schubert polynomials do not depend on the reduced path.
    for (int n = 2; n <= std::min(max_n + 1, 5); ++n)
        for (auto& w : all_permutations(n))
            r.check(schubert_poly(w) == schubert_poly_last_ascent(w),
                    "path independence at n=" + std::to_string(n));

    // Monk's rule against the flag-quotient normal-form oracle.
    for (int n = 2; n <= lin; ++n) {
        HessFunc flag = HessFunc::validate(std::vector<int>(n, n));
        auto ring = cache.get(flag, 1);
        for (auto& w : all_permutations(n)) {
            for (int rr = 1; rr <= n - 1; ++rr) {
                SchubertExpr e = monk_expand(rr, w);
                ClassVector lhs =
                    ring->normal_form(MultiPoly::variable(n, rr) * schubert_poly(w));
                MultiPoly rhs_poly(n);
                for (auto& [v, c] : e.terms) rhs_poly = rhs_poly + c * schubert_poly(v);
                r.check(lhs == ring->normal_form(rhs_poly),
                        "Monk == NF oracle, w=" + to_string(w) + " r=" + std::to_string(rr));
            }
        }
    }

    // Kernel bases of Prop 7.8: size, image vanishing, independence.
    for (int n = 2; n <= lin; ++n) {
        for (auto& h : enumerate_hess(n)) {
            for (auto& c : corners(h)) {
                if (c.i <= c.j) continue;
                HessFunc hp = remove_corner(h, c);
                for (int s = 1; s <= p_of_h(h); ++s) {
                    auto As = cache.get(h, s);
                    bool target_zero = s > p_of_h(hp);
                    long long target_dim = target_zero ? 0 : cache.get(hp, s)->dim();
                    auto kb = kernel_basis(h, c, s);
                    r.check(static_cast<long long>(kb.size()) == As->dim() - target_dim,
                            "kernel size == dim gap, h=" + to_string(h));
                    if (!target_zero) {
                        auto target = cache.get(hp, s);
                        for (auto& el : kb)
                            r.check(target->normal_form(el).is_zero(),
                                    "kernel element vanishes in A_s^{h'}, h=" + to_string(h));
                    }
                    std::vector<std::vector<Rational>> rows;
                    for (auto& el : kb)
                        rows.push_back(detail::class_to_dense(As->normal_form(el), As->basis()));
                    r.check(linalg::rank_of_rows(rows) == static_cast<long long>(kb.size()),
                            "kernel basis independent in A_s^h, h=" + to_string(h));
                }
            }
        }
    }

    // The derived relation set equals the direct kernel of S_w |-> NF(S_w).
    for (int n = 2; n <= std::min(max_n, 4); ++n) {
        for (auto& h : enumerate_hess(n)) {
            auto derived = derive_relations(h);
            auto oracle = relation_solved_form_oracle(h);
            bool same = derived.solved.size() == oracle.size();
            if (same)
                for (std::size_t k = 0; k < oracle.size(); ++k)
                    same = same && derived.solved[k] == oracle[k];
            r.check(same, "derived relations == kernel oracle, h=" + to_string(h));
        }
    }

    // A few n = 5 chains with varied corner shapes against the same oracle.
    if (max_n >= 5) {
        for (auto hv : {std::vector<int>{2, 3, 3, 5, 5}, {1, 3, 4, 5, 5}, {2, 2, 3, 4, 5}}) {
            HessFunc h = HessFunc::validate(hv);
            auto derived = derive_relations(h);
            auto oracle = relation_solved_form_oracle(h);
            bool same = derived.solved.size() == oracle.size();
            if (same)
                for (std::size_t k = 0; k < oracle.size(); ++k)
                    same = same && derived.solved[k] == oracle[k];
            r.check(same, "derived relations == kernel oracle, h=" + to_string(h));
        }
    }

    // The two published relation tables for n = 4.
    if (max_n >= 4) {
        auto row = [](const char* lead, std::initializer_list<std::pair<const char*, Rational>>
                                            rhs) {
            SolvedRow out{parse_permutation(lead), {}};
            for (auto& [w, c] : rhs) out.rhs.add(parse_permutation(w), c);
            return out;
        };
        Rational half(1, 2);
        std::vector<SolvedRow> expect1 = {
            row("4123", {{"3142", 1}, {"2341", -1}}),
            row("4213", {{"3412", 1}, {"3241", 2}, {"2431", -1}}),
            row("4132", {{"3241", 1}}),
            row("4312", {{"3421", 1}}),
            row("4231", {}),
            row("4321", {}),
        };
        std::vector<SolvedRow> expect2 = {
            row("3124", {{"2314", 1}}),
            row("4123", {{"2413", half}}),
            row("3214", {{"2413", half}}),
            row("3142", {{"2413", half}, {"2341", 1}}),
            row("4213", {}),
            row("3241", {{"2431", half}}),
            row("4132", {{"2431", half}}),
            row("3412", {}),
            row("4312", {}),
            row("3421", {}),
            row("4231", {}),
            row("4321", {}),
        };
        auto match = [](const std::vector<SolvedRow>& got, std::vector<SolvedRow> expect) {
            if (got.size() != expect.size()) return false;
            for (auto& want : expect) {
                bool found = false;
                for (auto& g : got)
                    if (g.lead == want.lead && g.rhs == want.rhs) found = true;
                if (!found) return false;
            }
            return true;
        };
        r.check(match(derive_relations(HessFunc::validate({3, 4, 4, 4})).solved, expect1),
                "published relation table for (3,4,4,4)");
        r.check(match(derive_relations(HessFunc::validate({2, 4, 4, 4})).solved, expect2),
                "published relation table for (2,4,4,4)");
    }

    // Lemma 7.6 exactness: dim ker(phi_s) = dim ker(phi_{s+1}) + dim ker(phibar_s).
    auto grlex_prio = [](const ExponentVec& a, const ExponentVec& b) {
        return grlex_greater(a, b);
    };
    for (int n = 2; n <= std::min(max_n, 4); ++n) {
        for (auto& h : enumerate_hess(n)) {
            for (auto& c : corners(h)) {
                if (c.i <= c.j) continue;
                HessFunc hp = remove_corner(h, c);
                auto ker_phi = [&](int s) -> long long {
                    if (s > p_of_h(h)) return 0;  // A_s^h = 0
                    auto As = cache.get(h, s);
                    if (s > p_of_h(hp)) return As->dim();  // target is the zero ring
                    auto Asp = cache.get(hp, s);
                    std::vector<std::vector<Rational>> rows;
                    for (auto& m : As->basis())
                        rows.push_back(detail::class_to_dense(
                            Asp->normal_form(MultiPoly::monomial(n, m)), Asp->basis()));
                    return As->dim() - linalg::rank_of_rows(rows);
                };
                auto ker_phibar = [&](int s) -> long long {
                    auto As = cache.get(h, s);
                    std::vector<MultiPoly> dg = generator_list(h, s).polys;
                    dg.push_back(MultiPoly::variable(n, s));
                    GradedReducer dom(n, dg, grlex_prio, As->top_degree() + 1);
                    long long domdim = 0;
                    std::vector<std::vector<Rational>> rows;
                    if (s > p_of_h(hp)) {
                        for (int d = 0; d <= dom.max_degree(); ++d)
                            domdim += static_cast<long long>(dom.surviving_monomials(d).size());
                        return domdim;
                    }
                    std::vector<MultiPoly> tg = generator_list(hp, s).polys;
                    tg.push_back(MultiPoly::variable(n, s));
                    GradedReducer tgt(n, tg, grlex_prio, As->top_degree() + 1);
                    std::map<ExponentVec, int, GrlexDesc> tcol;
                    int tdim = 0;
                    for (int d = 0; d <= tgt.max_degree(); ++d)
                        for (auto& m : tgt.surviving_monomials(d)) tcol.emplace(m, tdim++);
                    for (int d = 0; d <= dom.max_degree(); ++d) {
                        for (auto& m : dom.surviving_monomials(d)) {
                            ++domdim;
                            std::vector<Rational> row(tdim, Rational(0));
                            for (auto& [e, cc] : tgt.reduce(MultiPoly::monomial(n, m)))
                                row[tcol.at(e)] = cc;
                            rows.push_back(std::move(row));
                        }
                    }
                    return domdim - linalg::rank_of_rows(rows);
                };
                for (int s = 1; s <= p_of_h(h); ++s) {
                    r.check(ker_phi(s) == ker_phi(s + 1) + ker_phibar(s),
                            "Lemma 7.6 kernel exactness, h=" + to_string(h) + " s=" +
                                std::to_string(s));
                }
            }
        }
    }

    // Question 7.1 at n <= 4 plus the Peterson case.
    for (int n = 1; n <= std::min(max_n, 4); ++n)
        for (auto& h : enumerate_hess(n))
            r.check(question71_check(h).is_basis, "Question 7.1, h=" + to_string(h));
    for (int n = 2; n <= lin; ++n) {
        std::vector<int> pv(n);
        for (int i = 1; i <= n; ++i) pv[i - 1] = std::min(i + 1, n);
        r.check(question71_check(HessFunc::validate(pv)).is_basis,
                "Question 7.1, Peterson n=" + std::to_string(n));
    }
    return r;
}

inline SuiteResult suite_pairing(int max_n, RingCache& cache) {
    SuiteResult r;
    r.name = "pairing";
    int lin = std::min(max_n, 5);

    for (int n = 1; n <= lin; ++n) {
        for (auto& h : enumerate_hess(n)) {
            PairingData pd(cache.get(h, 1));
            ClassVector nb = pd.ring().normal_form(beta(h));
            r.check(pd.integrate(nb) == 1, "integral of NF(beta) is 1, h=" + to_string(h));
            if (dimension(h) > 0)
                r.check(pd.integrate(pd.ring().normal_form(MultiPoly::constant(n, 1))) == 0,
                        "integral vanishes below top degree, h=" + to_string(h));
        }
    }

    // Linearity of the integral on random classes.
    {
        std::mt19937 rng(77);
        HessFunc h = HessFunc::validate({2, 4, 4, 4});
        PairingData pd(cache.get(h, 1));
        for (int it = 0; it < 10; ++it) {
            MultiPoly p = random_poly(rng, 4, 6, 3), q = random_poly(rng, 4, 6, 3);
            Rational lhs = pd.integrate(pd.ring().normal_form(p + q));
            Rational rhs = pd.integrate(pd.ring().normal_form(p)) +
                           pd.integrate(pd.ring().normal_form(q));
            r.check(lhs == rhs, "integral is linear");
        }
    }

    for (int n = 1; n <= std::min(max_n, 4); ++n) {
        for (auto& h : enumerate_hess(n)) {
            PairingData pd(cache.get(h, 1));
            for (int d = 0; d <= pd.top_degree(); ++d)
                r.check(pd.pairing_nonsingular(d),
                        "pairing matrix nonsingular, h=" + to_string(h) + " d=" + std::to_string(d));
        }
    }

    if (max_n >= 4) {
        HessFunc flag = HessFunc::validate({4, 4, 4, 4});
        auto ring = cache.get(flag, 1);
        for (auto& w : all_permutations(4))
            r.check(hess_schubert_flag(*ring, w) == schubert_poly(w),
                    "flag Hessenberg Schubert == Schubert, w=" + to_string(w));
    }

    for (int n = 1; n <= std::min(max_n, 6); ++n) {
        for (auto& h : enumerate_hess(n)) {
            auto spec = young_subgroup(h);
            // brute force: permutations preserving every diagonal block
            long long count = 0;
            for (auto& w : all_permutations(n)) {
                bool ok = true;
                int prev = 0;
                for (int k : spec.breakpoints) {
                    for (int i = prev + 1; i <= k && ok; ++i)
                        if (w(i) <= prev || w(i) > k) ok = false;
                    prev = k;
                }
                if (ok) ++count;
            }
            r.check(Int(count) == spec.order, "Young subgroup order, h=" + to_string(h));
        }
    }
    return r;
}

inline SuiteResult suite_serialization(unsigned seed) {
    SuiteResult r;
    r.name = "serialization";
    std::mt19937 rng(seed);
    for (int it = 0; it < 30; ++it) {
        int nvars = 1 + static_cast<int>(rng() % 5);
        MultiPoly p = random_poly(rng, nvars, 6, 4);
        r.check(parse_poly(to_string(p), nvars) == p, "polynomial text round-trip");
        r.check(to_string(p) == to_string(parse_poly(to_string(p), nvars)),
                "printing is deterministic");
    }
    return r;
}

struct VerifyReport {
    std::vector<SuiteResult> suites;
    bool ok = true;
    long long checks = 0, failures = 0;
};

inline VerifyReport verify_all(int max_n, std::ostream& out, unsigned seed = 12345) {
    if (max_n < 1) throw DomainError("verify_all: max_n must be >= 1");
    VerifyReport rep;
    RingCache cache;
    auto run = [&](SuiteResult s) {
        out << "suite " << s.name << ": " << (s.checks - s.failures) << "/" << s.checks
            << " checks passed" << (s.failures ? "  [FAIL]" : "") << "\n";
        for (auto& m : s.messages) out << "    failed: " << m << "\n";
        rep.ok = rep.ok && s.failures == 0;
        rep.checks += s.checks;
        rep.failures += s.failures;
        rep.suites.push_back(std::move(s));
    };
    run(suite_polycore(seed));
    run(suite_hessfn(max_n));
    run(suite_gens(max_n));
    run(suite_quotient(max_n, cache));
    run(suite_schubert(max_n, cache));
    run(suite_pairing(max_n, cache));
    run(suite_serialization(seed + 1));
    return rep;
}

} // namespace hessex::verify
