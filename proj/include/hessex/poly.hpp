#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "rational.hpp"

namespace hessex {

// Exponent vector of a monomial; length equals the ambient variable count.
using ExponentVec = std::vector<int>;

inline int total_degree(const ExponentVec& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

// Graded-lex with x1 > x2 > ...: higher total degree wins, ties broken by
// the leftmost differing exponent.
inline bool grlex_greater(const ExponentVec& a, const ExponentVec& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;  // vector lexicographic, x1 first
}

struct GrlexDesc {
    bool operator()(const ExponentVec& a, const ExponentVec& b) const {
        return grlex_greater(a, b);
    }
};

// Sparse multivariate polynomial over Q. Immutable by convention: all
// operations return new values. Term map never stores zero coefficients and
// iterates in graded-lex descending order.
class MultiPoly {
public:
    using TermMap = std::map<ExponentVec, Rational, GrlexDesc>;

    explicit MultiPoly(int nvars) : nvars_(nvars) {
        if (nvars < 1) throw DomainError("variable count must be >= 1");
    }

    static MultiPoly zero(int nvars) { return MultiPoly(nvars); }

    static MultiPoly constant(int nvars, const Rational& c) {
        MultiPoly p(nvars);
        p.add_term(ExponentVec(nvars, 0), c);
        return p;
    }

    // x_k, 1-based.
    static MultiPoly variable(int nvars, int k) {
        if (k < 1 || k > nvars) throw DomainError("variable index out of range");
        MultiPoly p(nvars);
        ExponentVec e(nvars, 0);
        e[k - 1] = 1;
        p.add_term(e, 1);
        return p;
    }

    static MultiPoly monomial(int nvars, ExponentVec e, const Rational& c = 1) {
        if (static_cast<int>(e.size()) != nvars)
            throw DomainError("exponent vector length must equal variable count");
        MultiPoly p(nvars);
        p.add_term(std::move(e), c);
        return p;
    }

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(ExponentVec e, const Rational& c) {
        if (static_cast<int>(e.size()) != nvars_)
            throw DomainError("exponent vector length must equal variable count");
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coeff(const ExponentVec& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int degree() const {  // -1 for the zero polynomial
        int d = -1;
        for (auto& [e, c] : terms_) d = std::max(d, total_degree(e));
        return d;
    }

    // Degree if homogeneous (zero counts as homogeneous of any degree).
    bool is_homogeneous(int* deg_out = nullptr) const {
        int d = -1;
        for (auto& [e, c] : terms_) {
            int t = total_degree(e);
            if (d == -1) d = t;
            else if (t != d) return false;
        }
        if (deg_out) *deg_out = d;
        return true;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

private:
    int nvars_;
    TermMap terms_;
};

inline void require_same_vars(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars() != b.nvars())
        throw DomainError("variable-count mismatch between operands");
}

inline MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    require_same_vars(a, b);
    MultiPoly r = a;
    for (auto& [e, c] : b.terms()) r.add_term(e, c);
    return r;
}

inline MultiPoly operator-(const MultiPoly& a) {
    MultiPoly r(a.nvars());
    for (auto& [e, c] : a.terms()) r.add_term(e, -c);
    return r;
}

inline MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    require_same_vars(a, b);
    MultiPoly r = a;
    for (auto& [e, c] : b.terms()) r.add_term(e, -c);
    return r;
}

inline MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    require_same_vars(a, b);
    MultiPoly r(a.nvars());
    for (auto& [ea, ca] : a.terms()) {
        for (auto& [eb, cb] : b.terms()) {
            ExponentVec e(ea.size());
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            r.add_term(std::move(e), ca * cb);
        }
    }
    return r;
}

inline MultiPoly operator*(const Rational& c, const MultiPoly& a) {
    MultiPoly r(a.nvars());
    for (auto& [e, v] : a.terms()) r.add_term(e, c * v);
    return r;
}

enum class PolyOp { Add, Sub, Mul };

inline MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op) {
    switch (op) {
        case PolyOp::Add: return a + b;
        case PolyOp::Sub: return a - b;
        case PolyOp::Mul: return a * b;
    }
    throw InternalError("unreachable poly_arith op");
}

// Sets x_k = 0: drops every term containing the variable. 1-based index.
inline MultiPoly substitute_zero(const MultiPoly& p, int var_index) {
    if (var_index < 1 || var_index > p.nvars())
        throw DomainError("substitute_zero: variable index out of range");
    MultiPoly r(p.nvars());
    for (auto& [e, c] : p.terms())
        if (e[var_index - 1] == 0) r.add_term(e, c);
    return r;
}

// Transports exponents along `map` (1-based targets, 0 = drop). Dropping a
// variable that occurs is an error; targets must be distinct and in range.
inline MultiPoly rename_vars(const MultiPoly& p, const std::vector<int>& map, int new_nvars) {
    if (static_cast<int>(map.size()) != p.nvars())
        throw DomainError("rename_vars: map length must equal variable count");
    std::vector<bool> used(new_nvars, false);
    for (int t : map) {
        if (t == 0) continue;
        if (t < 1 || t > new_nvars) throw DomainError("rename_vars: target index out of range");
        if (used[t - 1]) throw DomainError("rename_vars: map must be injective");
        used[t - 1] = true;
    }
    MultiPoly r(new_nvars);
    for (auto& [e, c] : p.terms()) {
        ExponentVec ne(new_nvars, 0);
        for (int k = 0; k < p.nvars(); ++k) {
            if (e[k] == 0) continue;
            if (map[k] == 0)
                throw DomainError("rename_vars: dropped variable x" + std::to_string(k + 1) +
                                  " occurs in the polynomial");
            ne[map[k] - 1] = e[k];
        }
        r.add_term(std::move(ne), c);
    }
    return r;
}

// Sum of the terms of total degree exactly d.
inline MultiPoly homogeneous_component(const MultiPoly& p, int d) {
    if (d < 0) throw DomainError("homogeneous_component: degree must be >= 0");
    MultiPoly r(p.nvars());
    for (auto& [e, c] : p.terms())
        if (total_degree(e) == d) r.add_term(e, c);
    return r;
}

// Divided difference (p - s_i p)/(x_i - x_{i+1}), computed termwise:
//   del(x^a x_i^A x_{i+1}^B) = sign * sum_k x^a x_i^k x_{i+1}^{A+B-1-k}
// with k ranging over [min(A,B), max(A,B)-1] and sign = +1 if A > B.
inline MultiPoly divided_difference(const MultiPoly& p, int i) {
    if (i < 1 || i > p.nvars() - 1)
        throw DomainError("divided_difference: index must satisfy 1 <= i <= nvars-1");
    MultiPoly r(p.nvars());
    for (auto& [e, c] : p.terms()) {
        int A = e[i - 1], B = e[i];
        if (A == B) continue;
        Rational sign_c = (A > B) ? c : -c;
        int lo = std::min(A, B), hi = std::max(A, B);
        for (int k = lo; k <= hi - 1; ++k) {
            ExponentVec ne = e;
            ne[i - 1] = k;
            ne[i] = A + B - 1 - k;
            r.add_term(std::move(ne), sign_c);
        }
    }
    return r;
}

// --- canonical text grammar -------------------------------------------------
// terms joined by +/-; term = [coef][*]x<k>[^e][*x<m>[^e]]...; coef = int or p/q.

inline std::string to_string(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : p.terms()) {
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        bool has_var = total_degree(e) > 0;
        if (!has_var || abs_c != 1) {
            os << to_string(abs_c);
            if (has_var) os << "*";
        }
        bool first_var = true;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << "x" << (k + 1);
            if (e[k] > 1) os << "^" << e[k];
        }
    }
    return os.str();
}

namespace detail {

struct PolyParser {
    const std::string& s;
    std::size_t pos = 0;
    int nvars;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    Int parse_uint() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw DomainError("polynomial parse error: expected digits at position " +
                                            std::to_string(start));
        return Int(s.substr(start, pos - start));
    }

    // [int][/int]
    Rational parse_coeff() {
        Int num = parse_uint();
        skip_ws();
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            Int den = parse_uint();
            if (den == 0) throw DomainError("polynomial parse error: zero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }

    // x<k>[^e]
    void parse_var_factor(ExponentVec& e) {
        ++pos;  // consume 'x'
        Int k = parse_uint();
        if (k < 1 || k > nvars)
            throw DomainError("polynomial parse error: variable index out of range: x" + k.str());
        int exp = 1;
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            Int ev = parse_uint();
            if (ev < 0 || ev > 1000000) throw DomainError("polynomial parse error: bad exponent");
            exp = static_cast<int>(ev);
        }
        e[static_cast<int>(k) - 1] += exp;
    }

    MultiPoly parse() {
        MultiPoly p(nvars);
        bool expect_term = true;
        while (!eof()) {
            int sign = 1;
            while (peek() == '+' || peek() == '-') {
                if (peek() == '-') sign = -sign;
                ++pos;
                expect_term = true;
            }
            if (eof()) {
                if (expect_term) throw DomainError("polynomial parse error: trailing sign");
                break;
            }
            Rational c = 1;
            ExponentVec e(nvars, 0);
            bool saw_factor = false;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                c = parse_coeff();
                saw_factor = true;
                skip_ws();
                if (pos < s.size() && s[pos] == '*') ++pos;
            }
            while (peek() == 'x') {
                parse_var_factor(e);
                saw_factor = true;
                skip_ws();
                if (pos < s.size() && s[pos] == '*') ++pos;
            }
            if (!saw_factor)
                throw DomainError("polynomial parse error: unexpected character '" +
                                  std::string(1, peek()) + "' at position " + std::to_string(pos));
            p.add_term(std::move(e), sign * c);
            expect_term = false;
        }
        return p;
    }
};

} // namespace detail

inline MultiPoly parse_poly(const std::string& text, int nvars) {
    detail::PolyParser parser{text, 0, nvars};
    if (parser.eof()) throw DomainError("polynomial parse error: empty input");
    // allow literal "0"
    return parser.parse();
}

} // namespace hessex
