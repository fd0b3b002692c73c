#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "gens.hpp"
#include "perm.hpp"
#include "poly.hpp"

namespace hessex {

// Formal rational combination of Schubert classes/polynomials.
struct SchubertExpr {
    std::map<Permutation, Rational> terms;

    bool is_zero() const { return terms.empty(); }

    void add(const Permutation& w, const Rational& c) {
        if (c == 0) return;
        auto it = terms.find(w);
        if (it == terms.end()) {
            terms.emplace(w, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    friend SchubertExpr operator+(const SchubertExpr& a, const SchubertExpr& b) {
        SchubertExpr r = a;
        for (auto& [w, c] : b.terms) r.add(w, c);
        return r;
    }

    friend SchubertExpr operator-(const SchubertExpr& a, const SchubertExpr& b) {
        SchubertExpr r = a;
        for (auto& [w, c] : b.terms) r.add(w, -c);
        return r;
    }

    friend SchubertExpr operator*(const Rational& c, const SchubertExpr& a) {
        SchubertExpr r;
        for (auto& [w, v] : a.terms) r.add(w, c * v);
        return r;
    }

    friend bool operator==(const SchubertExpr& a, const SchubertExpr& b) {
        return a.terms == b.terms;
    }
};

namespace detail {

// Schubert polynomials of S_n, filled by divided differences downward from
// the staircase monomial at w0. Built once per n.
struct SchubertTable {
    std::map<Permutation, MultiPoly> polys;

    explicit SchubertTable(int n) {
        auto perms = all_permutations(n);
        std::sort(perms.begin(), perms.end(), [](const Permutation& a, const Permutation& b) {
            return a.length() > b.length();
        });
        ExponentVec stair(n);
        for (int i = 0; i < n; ++i) stair[i] = n - 1 - i;
        polys.emplace(Permutation::longest(n), MultiPoly::monomial(n, stair));
        for (auto& w : perms) {
            if (polys.count(w)) continue;
            int i = 0;
            for (int k = 1; k <= n - 1; ++k)
                if (w.has_ascent_at(k)) {
                    i = k;
                    break;
                }
            if (i == 0) throw InternalError("non-longest permutation without ascent");
            Permutation v = w.swap_positions(i, i + 1);  // length(v) = length(w) + 1
            polys.emplace(w, divided_difference(polys.at(v), i));
        }
    }

    static const SchubertTable& instance(int n) {
        static std::mutex mu;
        static std::map<int, std::unique_ptr<SchubertTable>> tables;
        std::scoped_lock lock(mu);
        auto it = tables.find(n);
        if (it == tables.end())
            it = tables.emplace(n, std::make_unique<SchubertTable>(n)).first;
        return *it->second;
    }
};

} // namespace detail

inline MultiPoly schubert_poly(const Permutation& w) {
    return detail::SchubertTable::instance(w.n()).polys.at(w);
}

// Same recursion but always dividing at the last ascent; used to confirm the
// result does not depend on the chosen reduced path.
inline MultiPoly schubert_poly_last_ascent(const Permutation& w) {
    int n = w.n();
    if (w == Permutation::longest(n)) {
        ExponentVec stair(n);
        for (int i = 0; i < n; ++i) stair[i] = n - 1 - i;
        return MultiPoly::monomial(n, stair);
    }
    int i = 0;
    for (int k = n - 1; k >= 1; --k)
        if (w.has_ascent_at(k)) {
            i = k;
            break;
        }
    return divided_difference(schubert_poly_last_ascent(w.swap_positions(i, i + 1)), i);
}

// w_k^{(i,j)}: fixes [n] \ [j,i], w(j) = i-k+1, w(i) = i-k, increasing between.
inline Permutation build_w_k(int i, int j, int k, int n) {
    if (!(1 <= j && j < i && i <= n)) throw DomainError("build_w_k: need 1 <= j < i <= n");
    if (!(1 <= k && k <= i - j)) throw DomainError("build_w_k: need 1 <= k <= i-j");
    std::vector<int> v(n);
    for (int m = 1; m <= n; ++m) v[m - 1] = m;
    v[j - 1] = i - k + 1;
    v[i - 1] = i - k;
    std::vector<int> middle;
    for (int val = j; val <= i; ++val)
        if (val != i - k + 1 && val != i - k) middle.push_back(val);
    for (int pos = j + 1, idx = 0; pos <= i - 1; ++pos, ++idx) v[pos - 1] = middle[idx];
    return Permutation::validate(std::move(v));
}

// Same permutation from the product (s_{i-k}...s_j)(s_{i-k+1}...s_{i-1});
// the second factor is empty when k = 1.
inline Permutation build_w_k_by_product(int i, int j, int k, int n) {
    if (!(1 <= j && j < i && i <= n)) throw DomainError("build_w_k: need 1 <= j < i <= n");
    if (!(1 <= k && k <= i - j)) throw DomainError("build_w_k: need 1 <= k <= i-j");
    Permutation w = Permutation::identity(n);
    for (int r = i - k; r >= j; --r) w = w.compose(Permutation::simple(n, r));
    for (int r = i - k + 1; r <= i - 1; ++r) w = w.compose(Permutation::simple(n, r));
    return w;
}

// f_{i-1,j} = sum_{k=1}^{i-j} (-1)^{k-1} S_{w_k^{(i,j)}}.
inline SchubertExpr alt_decomposition(int i, int j, int n) {
    if (!(1 <= j && j < i && i <= n))
        throw DomainError("alt_decomposition: need 1 <= j < i <= n");
    SchubertExpr e;
    for (int k = 1; k <= i - j; ++k)
        e.add(build_w_k(i, j, k, n), (k % 2 == 1) ? Rational(1) : Rational(-1));
    return e;
}

inline MultiPoly to_poly(const SchubertExpr& e, int n) {
    MultiPoly p(n);
    for (auto& [w, c] : e.terms) {
        if (w.n() != n) throw DomainError("SchubertExpr permutation size mismatch");
        p = p + c * schubert_poly(w);
    }
    return p;
}

// Monk's rule within S_n: x_r * sigma_w = sum sigma_w' - sum sigma_w''.
// w' swaps values at positions (r,q), r<q, w(r)<w(q) with no intermediate
// value in between; w'' swaps (p,r), p<r, w(p)<w(r) likewise. Interchange
// positions beyond n would give classes vanishing in H*(Flag(C^n)).
inline SchubertExpr monk_expand(int r, const Permutation& w) {
    int n = w.n();
    if (r < 1 || r > n - 1) throw DomainError("monk_expand: need 1 <= r <= n-1");
    SchubertExpr out;
    for (int q = r + 1; q <= n; ++q) {
        if (w(r) >= w(q)) continue;
        bool blocked = false;
        for (int m = r + 1; m < q; ++m)
            if (w(r) < w(m) && w(m) < w(q)) {
                blocked = true;
                break;
            }
        if (!blocked) out.add(w.swap_positions(r, q), 1);
    }
    for (int p = 1; p < r; ++p) {
        if (w(p) >= w(r)) continue;
        bool blocked = false;
        for (int m = p + 1; m < r; ++m)
            if (w(p) < w(m) && w(m) < w(r)) {
                blocked = true;
                break;
            }
        if (!blocked) out.add(w.swap_positions(p, r), -1);
    }
    return out;
}

inline SchubertExpr monk_multiply(const SchubertExpr& e, int r) {
    SchubertExpr out;
    for (auto& [w, c] : e.terms) {
        SchubertExpr part = monk_expand(r, w);
        for (auto& [w2, c2] : part.terms) out.add(w2, c * c2);
    }
    return out;
}

// Expansion of x^I * e by repeated Monk multiplication, one variable at a
// time, left to right by exponent.
inline SchubertExpr monk_multiply_monomial(SchubertExpr e, const ExponentVec& exps) {
    for (std::size_t m = 0; m < exps.size(); ++m)
        for (int rep = 0; rep < exps[m]; ++rep) e = monk_multiply(e, static_cast<int>(m) + 1);
    return e;
}

inline std::string to_string(const SchubertExpr& e) {
    if (e.is_zero()) return "0";
    // print in pivot order: longest first, then lex descending
    std::vector<std::pair<Permutation, Rational>> items(e.terms.begin(), e.terms.end());
    std::sort(items.begin(), items.end(), [](auto& a, auto& b) {
        return schubert_pivot_greater(a.first, b.first);
    });
    std::ostringstream os;
    bool first = true;
    for (auto& [w, c] : items) {
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (abs_c != 1) os << to_string(abs_c) << "*";
        os << "S[" << to_string(w) << "]";
    }
    return os.str();
}

} // namespace hessex
