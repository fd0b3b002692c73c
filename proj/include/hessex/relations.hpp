#pragma once

#include "quotient.hpp"
#include "schubert.hpp"

namespace hessex {

// Kernel basis of phi_s: A_s^h -> A_s^{h'} for corner (i,j) removal.
// For j+1 <= s the factor is g_{i-1,j}, for s <= j it is f_{i-1,j}; the
// multiplying monomials run over the A_s^h exponent ranges with slot j
// omitted.
inline std::vector<MultiPoly> kernel_basis(const HessFunc& h, const Corner& c, int s) {
    int n = h.n();
    if (!is_corner(h, c))
        throw DomainError("kernel_basis: (" + std::to_string(c.i) + "," + std::to_string(c.j) +
                          ") is not a corner of h");
    if (c.i <= c.j) throw DomainError("kernel_basis: corner must satisfy i > j");
    if (s < 1 || s > p_of_h(h)) throw DomainError("kernel_basis: need 1 <= s <= p(h)");

    MultiPoly factor = (c.j + 1 <= s) ? g_poly(n, c.i - 1, c.j) : f_poly(n, c.i - 1, c.j);
    std::vector<MultiPoly> out;
    ExponentVec cur(n, 0);
    std::function<void(int)> rec = [&](int m) {
        if (m > n) {
            out.push_back(MultiPoly::monomial(n, cur) * factor);
            return;
        }
        if (m == c.j) {
            cur[m - 1] = 0;
            rec(m + 1);
            return;
        }
        int top = (m < s) ? h(m) - m - 1 : h(m) - m;
        for (int e = 0; e <= top; ++e) {
            cur[m - 1] = e;
            rec(m + 1);
        }
    };
    rec(1);
    return out;
}

// Deterministic corner-removal chain from (n,...,n) down to h: always remove
// the corner in the smallest differing column (then smallest row, which is
// unique per column anyway).
inline std::vector<std::pair<HessFunc, Corner>> corner_chain(const HessFunc& h) {
    int n = h.n();
    HessFunc cur = HessFunc::validate(std::vector<int>(n, n));
    std::vector<std::pair<HessFunc, Corner>> chain;
    while (cur != h) {
        int best_j = 0;
        for (int j = 1; j <= n; ++j) {
            if (cur(j) > h(j) && (j == 1 || cur(j - 1) < cur(j))) {
                best_j = j;
                break;
            }
        }
        if (best_j == 0) throw InternalError("corner_chain: no removable corner toward h");
        Corner c{cur(best_j), best_j};
        chain.emplace_back(cur, c);
        cur = remove_corner(cur, c);
    }
    return chain;
}

// sigma_lead = rhs, with lead the (length desc, one-line lex desc) largest
// class in the relation and rhs supported on never-leading classes.
struct SolvedRow {
    Permutation lead;
    SchubertExpr rhs;

    friend bool operator==(const SolvedRow& a, const SolvedRow& b) {
        return a.lead == b.lead && a.rhs == b.rhs;
    }
};

struct RelationSet {
    HessFunc h;
    std::vector<SchubertExpr> relations;  // raw relations, each mapping to 0 in A_1^h
    std::vector<SolvedRow> solved;        // reduced solved form, ordered by pivot priority
};

namespace detail {

struct PermIndex {
    std::vector<Permutation> by_priority;  // index 0 = highest (length desc, lex desc)
    std::map<Permutation, int> index_of;

    explicit PermIndex(int n) {
        by_priority = all_permutations(n);
        std::sort(by_priority.begin(), by_priority.end(), schubert_pivot_greater);
        for (int k = 0; k < static_cast<int>(by_priority.size()); ++k)
            index_of.emplace(by_priority[k], k);
    }
};

inline linalg::SparseRow expr_to_row(const SchubertExpr& e, const PermIndex& pi) {
    Int lcm = 1;
    for (auto& [w, c] : e.terms) lcm = boost::multiprecision::lcm(lcm, denominator(c));
    linalg::SparseRow row;
    for (auto& [w, c] : e.terms)
        row.ent.emplace_back(pi.index_of.at(w), numerator(c) * (lcm / denominator(c)));
    std::sort(row.ent.begin(), row.ent.end(), [](auto& a, auto& b) { return a.first < b.first; });
    return row;
}

inline std::vector<SolvedRow> echelon_to_solved(linalg::RowEchelon& ech, const PermIndex& pi) {
    ech.jordan();
    std::vector<SolvedRow> out;
    for (auto& [col, row] : ech.pivots()) {
        const Int& pv = row.ent.front().second;
        SchubertExpr rhs;
        for (std::size_t k = 1; k < row.ent.size(); ++k)
            rhs.add(pi.by_priority[row.ent[k].first], -Rational(row.ent[k].second, pv));
        out.push_back(SolvedRow{pi.by_priority[col], std::move(rhs)});
    }
    return out;
}

} // namespace detail

// The step-by-step procedure: walk the corner chain from the flag down to h;
// at each step expand every Theorem 7.3 kernel element (monomial ranges from
// the pre-removal function) through the alternating Schubert decomposition
// and repeated Monk multiplication, and accumulate. Every raw relation is
// checked against the normal-form oracle in A_1^h.
inline RelationSet derive_relations_with_chain(
    const HessFunc& h, const std::vector<std::pair<HessFunc, Corner>>& chain) {
    int n = h.n();
    RelationSet out{h, {}, {}};
    detail::PermIndex pi(n);
    QuotientRing ring(h, 1);
    linalg::RowEchelon ech;

    for (auto& [hk, corner] : chain) {
        std::vector<ExponentVec> monos;
        ExponentVec cur(n, 0);
        std::function<void(int)> rec = [&](int m) {
            if (m > n) {
                monos.push_back(cur);
                return;
            }
            if (m == corner.j) {
                cur[m - 1] = 0;
                rec(m + 1);
                return;
            }
            for (int e = 0; e <= hk(m) - m; ++e) {
                cur[m - 1] = e;
                rec(m + 1);
            }
        };
        rec(1);
        SchubertExpr base = alt_decomposition(corner.i, corner.j, n);
        for (auto& I : monos) {
            SchubertExpr rel = monk_multiply_monomial(base, I);
            if (!ring.normal_form(to_poly(rel, n)).is_zero())
                throw InternalError("derived relation fails the normal-form oracle");
            if (!ech.insert(detail::expr_to_row(rel, pi)))
                throw InternalError("derived relation is dependent on earlier ones");
            out.relations.push_back(std::move(rel));
        }
    }

    long long expected = 1;
    for (int k = 2; k <= n; ++k) expected *= k;  // n!
    expected -= ring.dim();
    if (static_cast<long long>(out.relations.size()) != expected)
        throw InternalError("relation count does not match n! - dim A_1^h");

    out.solved = detail::echelon_to_solved(ech, pi);
    return out;
}

inline RelationSet derive_relations(const HessFunc& h) {
    return derive_relations_with_chain(h, corner_chain(h));
}

// Independent route to the same solved form: feed NF(S_w) into an exact
// dependency tracker in ascending pivot priority; each dependency is a
// solved relation with lead w.
inline std::vector<SolvedRow> relation_solved_form_oracle(const HessFunc& h) {
    int n = h.n();
    QuotientRing ring(h, 1);
    detail::PermIndex pi(n);
    linalg::DependencyTracker tracker;
    std::vector<Permutation> accepted;
    std::vector<SolvedRow> out;
    for (auto it = pi.by_priority.rbegin(); it != pi.by_priority.rend(); ++it) {
        const Permutation& w = *it;
        auto dense = detail::class_to_dense(ring.normal_form(schubert_poly(w)), ring.basis());
        auto dep = tracker.insert(std::move(dense));
        if (!dep) {
            accepted.push_back(w);
            continue;
        }
        SolvedRow row{w, {}};
        for (auto& [u, c] : dep->combo) row.rhs.add(accepted[u], c);
        out.push_back(std::move(row));
    }
    std::sort(out.begin(), out.end(), [](const SolvedRow& a, const SolvedRow& b) {
        return schubert_pivot_greater(a.lead, b.lead);
    });
    return out;
}

struct Question71Report {
    long long admissible_count = 0;  // #{w : w(m) <= h(m) for all m}
    long long ring_dim = 0;
    long long rank = 0;
    bool is_basis = false;
};

// Question 7.1: do {NF(S_w) : w(m) <= h(m)} form a basis of A_1^h?
inline Question71Report question71_check(const HessFunc& h) {
    int n = h.n();
    QuotientRing ring(h, 1);
    Question71Report rep;
    rep.ring_dim = ring.dim();
    std::vector<std::vector<Rational>> rows;
    for (auto& w : all_permutations(n)) {
        bool ok = true;
        for (int m = 1; m <= n; ++m)
            if (w(m) > h(m)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        ++rep.admissible_count;
        rows.push_back(detail::class_to_dense(ring.normal_form(schubert_poly(w)), ring.basis()));
    }
    rep.rank = linalg::rank_of_rows(rows);
    rep.is_basis = rep.admissible_count == rep.ring_dim && rep.rank == rep.ring_dim;
    return rep;
}

} // namespace hessex
