#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace hessex::linalg {

// Row of an exact matrix: sorted (column, value) pairs, values integral.
// Normalized rows are primitive (content 1) with positive leading value.
struct SparseRow {
    std::vector<std::pair<int, Int>> ent;

    bool empty() const { return ent.empty(); }
    int lead() const { return ent.front().first; }
    const Int& lead_val() const { return ent.front().second; }
};

inline void normalize(SparseRow& r) {
    if (r.ent.empty()) return;
    Int g = 0;
    for (auto& [c, v] : r.ent) {
        g = boost::multiprecision::gcd(g, v);
        if (g == 1) break;
    }
    if (g < 0) g = -g;
    bool flip = r.ent.front().second < 0;
    if (g == 1 && !flip) return;
    for (auto& [c, v] : r.ent) {
        if (g != 1) v /= g;
        if (flip) v = -v;
    }
}

// b*(coef of pivot col in r is a) elimination: returns (b/g)*r - (a/g)*p,
// where p is normalized with pivot value b at its leading column.
inline SparseRow eliminate(const SparseRow& r, const SparseRow& p) {
    int c = p.lead();
    Int a = 0;
    for (auto& [col, v] : r.ent)
        if (col == c) {
            a = v;
            break;
        }
    if (a == 0) return r;
    const Int& b = p.lead_val();
    Int g = boost::multiprecision::gcd(a < 0 ? Int(-a) : a, b);
    Int mr = b / g, mp = a / g;
    SparseRow out;
    out.ent.reserve(r.ent.size() + p.ent.size());
    std::size_t i = 0, j = 0;
    while (i < r.ent.size() || j < p.ent.size()) {
        if (j == p.ent.size() || (i < r.ent.size() && r.ent[i].first < p.ent[j].first)) {
            out.ent.emplace_back(r.ent[i].first, mr * r.ent[i].second);
            ++i;
        } else if (i == r.ent.size() || p.ent[j].first < r.ent[i].first) {
            out.ent.emplace_back(p.ent[j].first, -mp * p.ent[j].second);
            ++j;
        } else {
            Int v = mr * r.ent[i].second - mp * p.ent[j].second;
            if (v != 0) out.ent.emplace_back(r.ent[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

// Incremental exact row echelon over Q (integral representation). Pivot
// columns are canonical: they depend only on the row space and column order.
class RowEchelon {
public:
    // Returns true if the row was independent (rank grew).
    bool insert(SparseRow row) {
        while (!row.empty()) {
            auto it = pivots_.find(row.lead());
            if (it == pivots_.end()) {
                normalize(row);
                pivots_.emplace(row.lead(), std::move(row));
                return true;
            }
            row = eliminate(row, it->second);
        }
        return false;
    }

    int rank() const { return static_cast<int>(pivots_.size()); }
    const std::map<int, SparseRow>& pivots() const { return pivots_; }
    bool is_pivot(int c) const { return pivots_.count(c) > 0; }

    // Full Gauss-Jordan: afterwards each pivot row's support is its pivot
    // column plus non-pivot columns only.
    void jordan() {
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            SparseRow& row = it->second;
            bool changed = true;
            while (changed) {
                changed = false;
                for (auto& [c, v] : row.ent) {
                    if (c == it->first) continue;
                    auto pit = pivots_.find(c);
                    if (pit != pivots_.end()) {
                        row = eliminate(row, pit->second);
                        changed = true;
                        break;
                    }
                }
            }
            normalize(row);
        }
    }

private:
    std::map<int, SparseRow> pivots_;
};

// Exact rank of a dense rational matrix given as rows.
inline int rank_of_rows(const std::vector<std::vector<Rational>>& rows) {
    RowEchelon ech;
    for (auto& row : rows) {
        Int lcm = 1;
        for (auto& v : row)
            if (v != 0) lcm = boost::multiprecision::lcm(lcm, denominator(v));
        SparseRow sr;
        for (std::size_t c = 0; c < row.size(); ++c)
            if (row[c] != 0) sr.ent.emplace_back(static_cast<int>(c),
                                                 numerator(row[c]) * (lcm / denominator(row[c])));
        ech.insert(std::move(sr));
    }
    return ech.rank();
}

// Detects linear dependencies incrementally, reporting each dependent vector
// as an exact combination of the previously accepted (independent) ones.
class DependencyTracker {
public:
    struct Dependency {
        // v = sum coeff[u] * accepted[u]
        std::vector<std::pair<std::size_t, Rational>> combo;
    };

    // Returns the dependency if v lies in the current span; otherwise accepts
    // v (it gets the next accepted index) and returns nullopt.
    std::optional<Dependency> insert(std::vector<Rational> v) {
        std::vector<Rational> combo(n_accepted_, Rational(0));
        for (auto& row : rows_) {
            const Rational& pv = row.vec[row.pivot];
            const Rational& rv = v[row.pivot];
            if (rv == 0) continue;
            Rational factor = rv / pv;
            for (std::size_t k = 0; k < v.size(); ++k) v[k] -= factor * row.vec[k];
            for (std::size_t u = 0; u < row.expansion.size(); ++u)
                combo[u] += factor * row.expansion[u];
        }
        std::size_t piv = v.size();
        for (std::size_t k = 0; k < v.size(); ++k)
            if (v[k] != 0) {
                piv = k;
                break;
            }
        if (piv == v.size()) {
            Dependency dep;
            for (std::size_t u = 0; u < combo.size(); ++u)
                if (combo[u] != 0) dep.combo.emplace_back(u, combo[u]);
            return dep;
        }
        Row row;
        row.vec = std::move(v);
        row.pivot = piv;
        row.expansion.assign(n_accepted_ + 1, Rational(0));
        for (std::size_t u = 0; u < combo.size(); ++u) row.expansion[u] = -combo[u];
        row.expansion[n_accepted_] = 1;
        rows_.push_back(std::move(row));
        ++n_accepted_;
        return std::nullopt;
    }

    std::size_t accepted_count() const { return n_accepted_; }

private:
    struct Row {
        std::vector<Rational> vec;        // reduced residual, in span(accepted)
        std::vector<Rational> expansion;  // vec = sum expansion[u]*accepted[u]
        std::size_t pivot;
    };
    std::vector<Row> rows_;
    std::size_t n_accepted_ = 0;
};

} // namespace hessex::linalg
