#pragma once

#include <functional>
#include <memory>
#include <set>
#include <unordered_map>
#include <vector>

#include "gens.hpp"
#include "hessfn.hpp"
#include "linalg.hpp"
#include "poly.hpp"

namespace hessex {

// --- univariate series over the t-grading -----------------------------------

using Series = std::vector<long long>;  // coefficient of t^d at index d

inline Series series_trim(Series s) {
    while (!s.empty() && s.back() == 0) s.pop_back();
    if (s.empty()) s.push_back(0);
    return s;
}

inline Series series_mul(const Series& a, const Series& b) {
    Series r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return series_trim(std::move(r));
}

inline Series series_add(const Series& a, const Series& b) {
    Series r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return series_trim(std::move(r));
}

inline Series series_shift(const Series& a, int k) {
    Series r(a.size() + k, 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
    return r;
}

inline bool series_eq(const Series& a, const Series& b) {
    return series_trim(a) == series_trim(b);
}

// 1 + t + ... + t^k (k < 0 gives the zero series: the zero ring).
inline Series geometric(int k) {
    if (k < 0) return {0};
    return Series(static_cast<std::size_t>(k) + 1, 1);
}

inline long long series_total(const Series& s) {
    long long t = 0;
    for (long long v : s) t += v;
    return t;
}

inline std::string to_string(const Series& s) {
    Series t = series_trim(s);
    if (t.size() == 1 && t[0] == 0) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t d = 0; d < t.size(); ++d) {
        if (t[d] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (t[d] != 1 || d == 0) os << t[d];
        if (d >= 1) os << "t";
        if (d >= 2) os << "^" << d;
    }
    return os.str();
}

// --- closed Hilbert series ---------------------------------------------------

// F_s^h(t) = prod_{m<s}(1+...+t^{h(m)-m-1}) * prod_{m>=s}(1+...+t^{h(m)-m}).
// For s > p(h) some factor is the zero series and the result is 0 (zero ring).
inline Series hilbert_closed(const HessFunc& h, int s) {
    if (s < 1 || s > h.n() + 1) throw DomainError("hilbert_closed: s out of range [1,n+1]");
    Series out{1};
    for (int m = 1; m <= h.n(); ++m)
        out = series_mul(out, geometric(m < s ? h(m) - m - 1 : h(m) - m));
    return out;
}

struct PoincareInductive {
    Series total;                  // Eq (6.1)
    std::vector<Series> summands;  // summand for s = 1..p(h), including the t^{s-1} shift
};

// Poin(t) = sum_{s=1}^{p(h)} t^{s-1} F_{r_s}^{h^(s)}(t).
inline PoincareInductive poincare_inductive(const HessFunc& h) {
    PoincareInductive out;
    out.total = {0};
    int p = p_of_h(h);
    for (int s = 1; s <= p; ++s) {
        Series f;
        if (h.n() == 1) f = {1};  // h^(1) lives on [0]; empty product of factors
        else f = hilbert_closed(shrink(h, s), r_s(h, s));
        Series summand = series_shift(f, s - 1);
        out.total = series_add(out.total, summand);
        out.summands.push_back(std::move(summand));
    }
    return out;
}

// --- monomial enumeration ----------------------------------------------------

inline void enumerate_monomials_rec(int nvars, int deg, int pos, ExponentVec& cur,
                                    std::vector<ExponentVec>& out) {
    if (pos == nvars - 1) {
        cur[pos] = deg;
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= deg; ++e) {
        cur[pos] = e;
        enumerate_monomials_rec(nvars, deg - e, pos + 1, cur, out);
    }
}

inline std::vector<ExponentVec> enumerate_monomials(int nvars, int deg) {
    std::vector<ExponentVec> out;
    ExponentVec cur(nvars, 0);
    enumerate_monomials_rec(nvars, deg, 0, cur, out);
    return out;
}

struct EvHash {
    std::size_t operator()(const ExponentVec& e) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : e) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// --- graded reducer ----------------------------------------------------------

// Degree-by-degree exact elimination for a homogeneous ideal. The degree-d
// ideal slice is spanned by x_i * (slice at d-1) together with the degree-d
// generators, so each slice is row-reduced from lifted pivot rows of the
// previous one. Column priority decides which monomials get eliminated first.
class GradedReducer {
public:
    using ColPriority = std::function<bool(const ExponentVec&, const ExponentVec&)>;

    GradedReducer(int nvars, std::vector<MultiPoly> gens, ColPriority priority, int max_degree)
        : nvars_(nvars), gens_(std::move(gens)), max_degree_(max_degree) {
        for (auto& g : gens_) {
            if (g.nvars() != nvars_) throw DomainError("generator variable count mismatch");
            int d;
            if (!g.is_homogeneous(&d)) throw DomainError("non-homogeneous generator");
        }
        degrees_.reserve(max_degree + 1);
        for (int d = 0; d <= max_degree; ++d) build_degree(d, priority);
    }

    int nvars() const { return nvars_; }
    int max_degree() const { return max_degree_; }

    long long qdim(int d) const {
        if (d < 0) throw DomainError("degree must be >= 0");
        if (d > max_degree_) {
            if (qdim(max_degree_) == 0) return 0;
            throw InternalError("quotient dimension queried beyond built depth");
        }
        return static_cast<long long>(degrees_[d].surviving.size());
    }

    Series quotient_series() const {
        Series s(max_degree_ + 1);
        for (int d = 0; d <= max_degree_; ++d) s[d] = qdim(d);
        return s;
    }

    // Surviving monomials of degree d, in column order.
    std::vector<ExponentVec> surviving_monomials(int d) const {
        std::vector<ExponentVec> out;
        for (int c : degrees_.at(d).surviving) out.push_back(degrees_[d].mons[c]);
        return out;
    }

    // Coordinates of p over the surviving monomials (all degrees combined).
    // Terms above the built depth vanish when the top built slice is zero.
    std::map<ExponentVec, Rational, GrlexDesc> reduce(const MultiPoly& p) const {
        std::map<ExponentVec, Rational, GrlexDesc> out;
        for (auto& [e, c] : p.terms()) {
            int d = total_degree(e);
            if (d > max_degree_) {
                if (degrees_[max_degree_].surviving.empty()) continue;
                throw InternalError("reduce: term degree exceeds built depth");
            }
            const DegreeData& dd = degrees_[d];
            int col = dd.col_of.at(e);
            auto pit = dd.ech.pivots().find(col);
            if (pit == dd.ech.pivots().end()) {
                add_coord(out, e, c);
            } else {
                const linalg::SparseRow& row = pit->second;
                const Int& pv = row.ent.front().second;
                for (std::size_t k = 1; k < row.ent.size(); ++k)
                    add_coord(out, dd.mons[row.ent[k].first],
                              -c * Rational(row.ent[k].second, pv));
            }
        }
        return out;
    }

private:
    struct DegreeData {
        std::vector<ExponentVec> mons;  // column index -> monomial
        std::unordered_map<ExponentVec, int, EvHash> col_of;
        linalg::RowEchelon ech;
        std::vector<int> surviving;  // non-pivot columns, ascending column order
    };

    static void add_coord(std::map<ExponentVec, Rational, GrlexDesc>& m, const ExponentVec& e,
                          const Rational& c) {
        auto it = m.find(e);
        if (it == m.end()) {
            if (c != 0) m.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) m.erase(it);
        }
    }

    void build_degree(int d, const ColPriority& priority) {
        DegreeData dd;
        dd.mons = enumerate_monomials(nvars_, d);
        std::sort(dd.mons.begin(), dd.mons.end(), priority);
        dd.col_of.reserve(dd.mons.size() * 2);
        for (int c = 0; c < static_cast<int>(dd.mons.size()); ++c) dd.col_of.emplace(dd.mons[c], c);

        // degree-d generators
        for (auto& g : gens_) {
            if (g.degree() != d || g.is_zero()) continue;
            Int lcm = 1;
            for (auto& [e, c] : g.terms())
                lcm = boost::multiprecision::lcm(lcm, denominator(c));
            linalg::SparseRow row;
            for (auto& [e, c] : g.terms())
                row.ent.emplace_back(dd.col_of.at(e), numerator(c) * (lcm / denominator(c)));
            std::sort(row.ent.begin(), row.ent.end(),
                      [](auto& a, auto& b) { return a.first < b.first; });
            dd.ech.insert(std::move(row));
        }

        // lifted rows x_i * (pivot rows of degree d-1)
        if (d >= 1) {
            const DegreeData& prev = degrees_[d - 1];
            for (auto& [pc, prow] : prev.ech.pivots()) {
                for (int i = 0; i < nvars_; ++i) {
                    linalg::SparseRow row;
                    row.ent.reserve(prow.ent.size());
                    for (auto& [c, v] : prow.ent) {
                        ExponentVec e = prev.mons[c];
                        e[i] += 1;
                        row.ent.emplace_back(dd.col_of.at(e), v);
                    }
                    std::sort(row.ent.begin(), row.ent.end(),
                              [](auto& a, auto& b) { return a.first < b.first; });
                    dd.ech.insert(std::move(row));
                }
            }
        }

        dd.ech.jordan();
        for (int c = 0; c < static_cast<int>(dd.mons.size()); ++c)
            if (!dd.ech.is_pivot(c)) dd.surviving.push_back(c);
        degrees_.push_back(std::move(dd));
    }

    int nvars_;
    std::vector<MultiPoly> gens_;
    int max_degree_;
    std::vector<DegreeData> degrees_;
};

// --- the Theorem 6.3 monomial basis -------------------------------------------

// Exponent ranges: i_m <= h(m)-m-1 for m < s, i_m <= h(m)-m for m >= s.
// Listed in ascending graded-lex order.
inline std::vector<ExponentVec> monomial_basis(const HessFunc& h, int s) {
    int n = h.n();
    if (s < 1 || s > h.n()) throw DomainError("monomial_basis: s out of range [1,n]");
    if (s > p_of_h(h))
        throw DomainError("monomial_basis: s > p(h), the quotient is the zero ring");
    std::vector<ExponentVec> out;
    ExponentVec cur(n, 0);
    std::function<void(int)> rec = [&](int m) {
        if (m > n) {
            out.push_back(cur);
            return;
        }
        int top = (m < s) ? h(m) - m - 1 : h(m) - m;
        for (int e = 0; e <= top; ++e) {
            cur[m - 1] = e;
            rec(m + 1);
        }
    };
    rec(1);
    std::sort(out.begin(), out.end(),
              [](const ExponentVec& a, const ExponentVec& b) { return grlex_greater(b, a); });
    return out;
}

// --- quotient ring with normal forms ------------------------------------------

class QuotientRing;

// Coordinates of a ring element over the monomial basis.
struct ClassVector {
    const QuotientRing* ring = nullptr;
    std::map<ExponentVec, Rational, GrlexDesc> coords;

    bool is_zero() const { return coords.empty(); }
    friend bool operator==(const ClassVector& a, const ClassVector& b) {
        return a.coords == b.coords;
    }
};

// A_s^h with eagerly built per-degree reduction tables. Construction verifies
// that the pivot columns avoid the basis monomials in every degree and that
// the slice one past the top degree vanishes; afterwards all queries are
// read-only and thread-safe.
class QuotientRing {
public:
    QuotientRing(const HessFunc& h, int s)
        : h_(h), s_(s), gens_(generator_list(h, s)), basis_(monomial_basis(h, s)) {
        int n = h.n();
        top_degree_ = 0;
        for (int m = 1; m <= n; ++m) top_degree_ += (m < s) ? h(m) - m - 1 : h(m) - m;

        std::set<ExponentVec> basis_set(basis_.begin(), basis_.end());
        auto priority = [basis_set](const ExponentVec& a, const ExponentVec& b) {
            bool ab = basis_set.count(a) > 0, bb = basis_set.count(b) > 0;
            if (ab != bb) return !ab;  // non-basis monomials eliminated first
            return grlex_greater(a, b);
        };
        red_ = std::make_unique<GradedReducer>(n, gens_.polys, priority, top_degree_ + 1);

        // Theorem 6.3 consistency: surviving monomials must be exactly the
        // basis monomials, degree by degree.
        std::map<int, std::set<ExponentVec>> by_deg;
        for (auto& e : basis_) by_deg[total_degree(e)].insert(e);
        for (int d = 0; d <= top_degree_ + 1; ++d) {
            auto surv = red_->surviving_monomials(d);
            std::set<ExponentVec> ss(surv.begin(), surv.end());
            auto it = by_deg.find(d);
            const std::set<ExponentVec> empty;
            if (ss != (it == by_deg.end() ? empty : it->second))
                throw InternalError(
                    "monomial basis inconsistent with ideal slice at degree " + std::to_string(d));
        }
    }

    const HessFunc& h() const { return h_; }
    int s() const { return s_; }
    int nvars() const { return h_.n(); }
    int top_degree() const { return top_degree_; }
    long long dim() const { return static_cast<long long>(basis_.size()); }
    const std::vector<ExponentVec>& basis() const { return basis_; }
    const GeneratorList& gens() const { return gens_; }

    Series hilbert_from_basis() const {
        Series s(top_degree_ + 1, 0);
        for (auto& e : basis_) s[total_degree(e)] += 1;
        return s;
    }

    ClassVector normal_form(const MultiPoly& p) const {
        if (p.nvars() != nvars())
            throw DomainError("normal_form: polynomial variable count must equal n");
        return ClassVector{this, red_->reduce(p)};
    }

    MultiPoly representative(const ClassVector& v) const {
        MultiPoly p(nvars());
        for (auto& [e, c] : v.coords) p.add_term(e, c);
        return p;
    }

    ClassVector multiply(const ClassVector& a, const ClassVector& b) const {
        return normal_form(representative(a) * representative(b));
    }

    ClassVector zero_class() const { return ClassVector{this, {}}; }

private:
    HessFunc h_;
    int s_;
    GeneratorList gens_;
    std::vector<ExponentVec> basis_;
    int top_degree_;
    std::unique_ptr<GradedReducer> red_;
};

// --- rank oracles --------------------------------------------------------------

// Rank over Q of the degree-d slice of the ideal generated by `gens`,
// computed literally from the Macaulay rows {m * g : deg(m g) = d}.
inline long long graded_slice_dim(const std::vector<MultiPoly>& gens, int d) {
    if (gens.empty()) return 0;
    int n = gens.front().nvars();
    auto mons = enumerate_monomials(n, d);
    std::unordered_map<ExponentVec, int, EvHash> col_of;
    for (int c = 0; c < static_cast<int>(mons.size()); ++c) col_of.emplace(mons[c], c);
    linalg::RowEchelon ech;
    for (auto& g : gens) {
        int gd;
        if (!g.is_homogeneous(&gd)) throw DomainError("non-homogeneous generator");
        if (g.is_zero() || gd > d) continue;
        Int lcm = 1;
        for (auto& [e, c] : g.terms()) lcm = boost::multiprecision::lcm(lcm, denominator(c));
        for (auto& m : enumerate_monomials(n, d - gd)) {
            linalg::SparseRow row;
            for (auto& [e, c] : g.terms()) {
                ExponentVec prod(e.size());
                for (std::size_t k = 0; k < e.size(); ++k) prod[k] = e[k] + m[k];
                row.ent.emplace_back(col_of.at(prod), numerator(c) * (lcm / denominator(c)));
            }
            std::sort(row.ent.begin(), row.ent.end(),
                      [](auto& a, auto& b) { return a.first < b.first; });
            ech.insert(std::move(row));
        }
    }
    return ech.rank();
}

// Quotient Hilbert series of Q[x]/<gens> by per-degree rank, up to max_degree.
inline Series oracle_series(int nvars, const std::vector<MultiPoly>& gens, int max_degree) {
    GradedReducer red(nvars, gens,
                      [](const ExponentVec& a, const ExponentVec& b) { return grlex_greater(a, b); },
                      max_degree);
    return red.quotient_series();
}

struct RegSeqReport {
    bool regular = false;
    Series oracle;    // quotient dims up to the guard degree
    Series expected;  // prod_k (1 + t + ... + t^{deg k - 1})
    int guard_degree = 0;
};

// Prop 2.10 check: n homogeneous positive-degree polynomials in n variables
// form a regular sequence iff the quotient Hilbert series equals the product
// formula. One guard degree past the product-formula top must vanish.
inline RegSeqReport is_regular_sequence(int nvars, const std::vector<MultiPoly>& gens) {
    if (static_cast<int>(gens.size()) != nvars)
        throw DomainError("is_regular_sequence: need exactly n polynomials in n variables, got " +
                          std::to_string(gens.size()));
    RegSeqReport rep;
    rep.expected = {1};
    int top = 0;
    for (auto& g : gens) {
        int d;
        if (!g.is_homogeneous(&d)) throw DomainError("non-homogeneous generator");
        if (g.is_zero()) throw DomainError("zero generator is not a regular sequence input");
        if (d == 0)
            throw DomainError("constant generator: zero ring, not a regular sequence input");
        rep.expected = series_mul(rep.expected, geometric(d - 1));
        top += d - 1;
    }
    rep.guard_degree = top + 1;
    rep.oracle = oracle_series(nvars, gens, top + 1);
    rep.regular = series_eq(rep.oracle, rep.expected) && rep.oracle[top + 1] == 0;
    return rep;
}

// --- filtration and isomorphism checks ------------------------------------------

struct FiltrationStep {
    int s = 0;
    long long dim_s = 0;
    long long dim_s_next = 0;
    long long dim_shrunk = 0;
    bool injective = false;
    bool dims_match = false;
};

struct FiltrationReport {
    std::vector<FiltrationStep> steps;
    bool ok = true;
};

namespace detail {

// Dense rational rows from class vectors over a fixed basis ordering.
inline std::vector<Rational> class_to_dense(const ClassVector& v,
                                            const std::vector<ExponentVec>& basis) {
    std::unordered_map<ExponentVec, int, EvHash> idx;
    std::vector<Rational> out(basis.size(), Rational(0));
    for (std::size_t k = 0; k < basis.size(); ++k) idx.emplace(basis[k], static_cast<int>(k));
    for (auto& [e, c] : v.coords) out[idx.at(e)] = c;
    return out;
}

} // namespace detail

// Verifies, for 1 <= s <= p(h): (a) x_s-multiplication A_{s+1} -> A_s is
// injective (exact rank) and (b) dim A_s = dim A_{s+1} + dim A_{r_s}^{h^(s)}.
inline FiltrationReport filtration_check(const HessFunc& h) {
    FiltrationReport rep;
    int p = p_of_h(h);
    for (int s = 1; s <= p; ++s) {
        FiltrationStep st;
        st.s = s;
        QuotientRing As(h, s);
        st.dim_s = As.dim();
        st.dim_shrunk = (h.n() == 1) ? 1 : QuotientRing(shrink(h, s), r_s(h, s)).dim();
        if (s + 1 > p) {
            st.dim_s_next = 0;  // A_{s+1} is the zero ring
            st.injective = true;
        } else {
            QuotientRing As1(h, s + 1);
            st.dim_s_next = As1.dim();
            std::vector<std::vector<Rational>> rows;
            MultiPoly xs = MultiPoly::variable(h.n(), s);
            for (auto& m : As1.basis()) {
                ClassVector img = As.normal_form(xs * MultiPoly::monomial(h.n(), m));
                rows.push_back(detail::class_to_dense(img, As.basis()));
            }
            st.injective = linalg::rank_of_rows(rows) == st.dim_s_next;
        }
        st.dims_match = st.dim_s == st.dim_s_next + st.dim_shrunk;
        rep.ok = rep.ok && st.injective && st.dims_match;
        rep.steps.push_back(st);
    }
    return rep;
}

struct IsoReport {
    Series quotient_series;  // A_s^h / <x_s>, by rank
    Series target_series;    // closed series of A_{r_s}^{h^(s)}
    bool series_equal = false;
    bool correspondence_ok = false;  // Eq "correspondence" polynomial identities
    bool images_vanish = false;      // each phi(generator) is 0 in the target ring
    bool ok = false;
};

// Prop 5.1: A_s^h/<x_s>  ~  A_{r_s}^{h^(s)} via x_m -> y_m (m<s), x_s -> 0,
// x_m -> y_{m-1} (m>s).
inline IsoReport iso_check(const HessFunc& h, int s) {
    int n = h.n();
    if (s < 1 || s > p_of_h(h)) throw DomainError("iso_check: need 1 <= s <= p(h)");
    IsoReport rep;
    if (n == 1) {
        rep.quotient_series = {1};
        rep.target_series = {1};
        rep.series_equal = rep.correspondence_ok = rep.images_vanish = rep.ok = true;
        return rep;
    }
    HessFunc hs = shrink(h, s);
    int rs = r_s(h, s);
    rep.target_series = hilbert_closed(hs, rs);

    std::vector<MultiPoly> quot_gens = generator_list(h, s).polys;
    quot_gens.push_back(MultiPoly::variable(n, s));
    int top = static_cast<int>(series_trim(rep.target_series).size());  // top degree + 1
    rep.quotient_series = oracle_series(n, quot_gens, top);
    rep.series_equal = series_eq(rep.quotient_series, rep.target_series);

    std::vector<int> var_map(n);
    for (int m = 1; m <= n; ++m) var_map[m - 1] = (m < s) ? m : (m == s ? 0 : m - 1);

    QuotientRing target(hs, rs);
    rep.correspondence_ok = true;
    rep.images_vanish = true;
    GeneratorList gl = generator_list(h, s);
    for (int m = 1; m <= n; ++m) {
        MultiPoly img = rename_vars(substitute_zero(gl.polys[m - 1], s), var_map, n - 1);
        MultiPoly expected = MultiPoly::zero(n - 1);
        if (m <= rs - 1) expected = g_poly(n - 1, hs(m), m);
        else if (m <= s - 1) expected = f_poly(n - 1, hs(m), m);
        else if (m == s) expected = (s == 1) ? MultiPoly::zero(n - 1) : f_poly(n - 1, h(s) - 1, s - 1);
        else expected = f_poly(n - 1, hs(m - 1), m - 1);
        if (img != expected) rep.correspondence_ok = false;
        if (!target.normal_form(img).is_zero()) rep.images_vanish = false;
    }
    rep.ok = rep.series_equal && rep.correspondence_ok && rep.images_vanish;
    return rep;
}

} // namespace hessex
