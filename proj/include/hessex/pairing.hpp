#pragma once

#include "quotient.hpp"
#include "schubert.hpp"

namespace hessex {

// Young subgroup S_h = S_{k_1} x S_{k_2-k_1} x ... for the diagonal hits
// h(k_i) = k_i; k_l = n always.
struct YoungSubgroupSpec {
    std::vector<int> breakpoints;
    Int order = 1;
};

inline YoungSubgroupSpec young_subgroup(const HessFunc& h) {
    YoungSubgroupSpec spec;
    int prev = 0;
    for (int k = 1; k <= h.n(); ++k) {
        if (h(k) != k) continue;
        spec.breakpoints.push_back(k);
        Int f = 1;
        for (int t = 2; t <= k - prev; ++t) f *= t;
        spec.order *= f;
        prev = k;
    }
    return spec;
}

// beta_h = (1/|S_h|) prod_{j=1}^{n-1} prod_{i=j+1}^{h(j)} (x_j - x_i),
// homogeneous of degree sum_j (h(j)-j).
inline MultiPoly beta(const HessFunc& h) {
    int n = h.n();
    MultiPoly prod = MultiPoly::constant(n, 1);
    for (int j = 1; j <= n - 1; ++j)
        for (int i = j + 1; i <= h(j); ++i)
            prod = prod * (MultiPoly::variable(n, j) - MultiPoly::variable(n, i));
    return Rational(1, young_subgroup(h).order) * prod;
}

// Integration data on A_1^h: the top-degree slice is one-dimensional and
// NF(beta_h) generates it; the integral normalizes NF(beta_h) to 1.
class PairingData {
public:
    explicit PairingData(std::shared_ptr<const QuotientRing> ring) : ring_(std::move(ring)) {
        if (ring_->s() != 1) throw DomainError("PairingData: pairing is defined on A_1^h");
        top_degree_ = dimension(ring_->h());
        for (auto& e : ring_->basis())
            if (total_degree(e) == top_degree_) top_monomial_ = e;
        ClassVector nb = ring_->normal_form(beta(ring_->h()));
        if (nb.coords.size() != 1)
            throw InternalError("NF(beta_h) is not a multiple of the top basis monomial");
        beta_coeff_ = nb.coords.begin()->second;
        if (beta_coeff_ == 0) throw InternalError("NF(beta_h) vanishes");
    }

    const QuotientRing& ring() const { return *ring_; }
    int top_degree() const { return top_degree_; }
    const ExponentVec& top_monomial() const { return top_monomial_; }
    const Rational& beta_coeff() const { return beta_coeff_; }

    // Coefficient of the top-degree component relative to NF(beta_h);
    // vanishes on components of degree < top.
    Rational integrate(const ClassVector& v) const {
        auto it = v.coords.find(top_monomial_);
        if (it == v.coords.end()) return Rational(0);
        return it->second / beta_coeff_;
    }

    // M[a][b] = integral of NF(m_a * m_b), deg m_a = d, deg m_b = top - d.
    std::vector<std::vector<Rational>> pairing_matrix(int d) const {
        if (d < 0 || d > top_degree_)
            throw DomainError("pairing_matrix: degree out of range [0, dimension(h)]");
        std::vector<ExponentVec> rows_m, cols_m;
        for (auto& e : ring_->basis()) {
            if (total_degree(e) == d) rows_m.push_back(e);
            if (total_degree(e) == top_degree_ - d) cols_m.push_back(e);
        }
        int n = ring_->nvars();
        std::vector<std::vector<Rational>> M(rows_m.size(),
                                             std::vector<Rational>(cols_m.size(), Rational(0)));
        for (std::size_t a = 0; a < rows_m.size(); ++a)
            for (std::size_t b = 0; b < cols_m.size(); ++b) {
                ExponentVec prod(n);
                for (int k = 0; k < n; ++k) prod[k] = rows_m[a][k] + cols_m[b][k];
                M[a][b] = integrate(ring_->normal_form(MultiPoly::monomial(n, prod)));
            }
        return M;
    }

    bool pairing_nonsingular(int d) const {
        auto M = pairing_matrix(d);
        if (M.size() != (M.empty() ? 0 : M[0].size())) return false;
        return linalg::rank_of_rows(M) == static_cast<int>(M.size());
    }

private:
    std::shared_ptr<const QuotientRing> ring_;
    int top_degree_;
    ExponentVec top_monomial_;
    Rational beta_coeff_;
};

// The unique coordinates of a class over the monomial basis, in the basis's
// canonical (ascending) order.
inline std::vector<std::pair<ExponentVec, Rational>> expand_class(const ClassVector& v) {
    if (!v.ring) throw DomainError("expand_class: class has no ring");
    std::vector<std::pair<ExponentVec, Rational>> out;
    for (auto& e : v.ring->basis()) {
        auto it = v.coords.find(e);
        if (it != v.coords.end()) out.emplace_back(e, it->second);
    }
    return out;
}

// Hessenberg Schubert polynomial in the flag case h = (n,...,n): the lift of
// NF(S_w) over the monomial basis. For general h the classes sigma_w^h are
// geometric input the presentation alone does not determine.
inline MultiPoly hess_schubert_flag(const QuotientRing& ring, const Permutation& w) {
    const HessFunc& h = ring.h();
    for (int m = 1; m <= h.n(); ++m)
        if (h(m) != h.n())
            throw DomainError(
                "hess_schubert: not determined by the presentation for non-flag h (requires "
                "h = (n,...,n))");
    if (ring.s() != 1) throw DomainError("hess_schubert: requires A_1^h");
    if (w.n() != h.n()) throw DomainError("hess_schubert: permutation size mismatch");
    return ring.representative(ring.normal_form(schubert_poly(w)));
}

} // namespace hessex
