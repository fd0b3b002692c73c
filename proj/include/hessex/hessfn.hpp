#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "rational.hpp"

namespace hessex {

// Box (i,j) of the diagram with h(j) = i and h(j-1) < h(j) (vacuous for j=1);
// removable when i > j.
struct Corner {
    int i = 0;
    int j = 0;
    friend bool operator==(const Corner&, const Corner&) = default;
};

// Nondecreasing h:[n]->[n] with h(i) >= i; consequently h(n) = n.
// 1-indexed throughout.
class HessFunc {
public:
    static HessFunc validate(const std::vector<int>& values) {
        int n = static_cast<int>(values.size());
        if (n < 1) throw DomainError("Hessenberg function must have length >= 1");
        for (int i = 1; i <= n; ++i) {
            int v = values[i - 1];
            if (v < i)
                throw DomainError("h(i) >= i violated at i=" + std::to_string(i) +
                                  ": h(i)=" + std::to_string(v));
            if (v > n)
                throw DomainError("h(i) <= n violated at i=" + std::to_string(i) +
                                  ": h(i)=" + std::to_string(v));
            if (i < n && values[i] < v)
                throw DomainError("h(i+1) >= h(i) violated at i=" + std::to_string(i));
        }
        return HessFunc(values);
    }

    int n() const { return static_cast<int>(values_.size()); }
    int operator()(int i) const { return values_.at(i - 1); }
    const std::vector<int>& values() const { return values_; }

    friend bool operator==(const HessFunc& a, const HessFunc& b) { return a.values_ == b.values_; }
    friend bool operator!=(const HessFunc& a, const HessFunc& b) { return !(a == b); }
    friend bool operator<(const HessFunc& a, const HessFunc& b) { return a.values_ < b.values_; }

private:
    explicit HessFunc(std::vector<int> v) : values_(std::move(v)) {}
    std::vector<int> values_;
};

// r_s = min{m : h(m) >= s}; always r_s <= s.
inline int r_s(const HessFunc& h, int s) {
    if (s < 1 || s > h.n()) throw DomainError("r_s: s out of range [1,n]");
    for (int m = 1; m <= h.n(); ++m)
        if (h(m) >= s) return m;
    throw InternalError("r_s: no m with h(m) >= s despite h(n) = n");
}

// p(h) = min{m : h(m) = m}; well defined since h(n) = n.
inline int p_of_h(const HessFunc& h) {
    for (int m = 1; m <= h.n(); ++m)
        if (h(m) == m) return m;
    throw InternalError("p_of_h: h(n) != n");
}

// h^(s): delete row s and column s of the diagram.
inline HessFunc shrink(const HessFunc& h, int s) {
    int n = h.n();
    if (s < 1 || s > n) throw DomainError("shrink: s out of range [1,n]");
    if (n == 1) throw DomainError("shrink: cannot shrink a function on [1]");
    int rs = r_s(h, s);
    std::vector<int> v(n - 1);
    for (int m = 1; m <= n - 1; ++m) {
        if (m <= rs - 1) v[m - 1] = h(m);
        else if (m <= s - 1) v[m - 1] = h(m) - 1;
        else v[m - 1] = h(m + 1) - 1;
    }
    return HessFunc::validate(v);
}

inline std::vector<Corner> corners(const HessFunc& h) {
    std::vector<Corner> out;
    for (int j = 1; j <= h.n(); ++j)
        if (j == 1 || h(j - 1) < h(j)) out.push_back({h(j), j});
    return out;
}

inline bool is_corner(const HessFunc& h, const Corner& c) {
    if (c.j < 1 || c.j > h.n()) return false;
    if (h(c.j) != c.i) return false;
    return c.j == 1 || h(c.j - 1) < h(c.j);
}

// h' with the box (i,j) deleted; requires i > j so h'(j) >= j still holds.
inline HessFunc remove_corner(const HessFunc& h, const Corner& c) {
    if (!is_corner(h, c))
        throw DomainError("remove_corner: (" + std::to_string(c.i) + "," + std::to_string(c.j) +
                          ") is not a corner of h");
    if (c.i == c.j)
        throw DomainError("remove_corner: removing (i,i) would violate h(j) >= j");
    std::vector<int> v = h.values();
    v[c.j - 1] -= 1;
    return HessFunc::validate(v);
}

// d = sum_j (h(j) - j): the number of boxes strictly below the diagonal,
// and the top degree of A_1^h in the x-grading.
inline int dimension(const HessFunc& h) {
    int d = 0;
    for (int j = 1; j <= h.n(); ++j) d += h(j) - j;
    return d;
}

// h' contained in h: h'(i) <= h(i) for all i.
inline bool contains(const HessFunc& outer, const HessFunc& inner) {
    if (outer.n() != inner.n()) return false;
    for (int i = 1; i <= outer.n(); ++i)
        if (inner(i) > outer(i)) return false;
    return true;
}

inline int box_count(const HessFunc& h) {
    int c = 0;
    for (int j = 1; j <= h.n(); ++j) c += h(j);
    return c;
}

// All Hessenberg functions on [n]; there are Catalan(n) of them.
inline std::vector<HessFunc> enumerate_hess(int n) {
    if (n < 1) throw DomainError("enumerate_hess: n must be >= 1");
    std::vector<HessFunc> out;
    std::vector<int> v(n);
    std::function<void(int)> rec = [&](int i) {
        if (i > n) {
            out.push_back(HessFunc::validate(v));
            return;
        }
        int lo = std::max(i, i == 1 ? 1 : v[i - 2]);
        for (int val = lo; val <= n; ++val) {
            v[i - 1] = val;
            rec(i + 1);
        }
    };
    rec(1);
    return out;
}

// Star in box (i,j) iff i <= h(j); row i printed top to bottom.
inline std::string render_diagram(const HessFunc& h) {
    std::ostringstream os;
    for (int i = 1; i <= h.n(); ++i) {
        for (int j = 1; j <= h.n(); ++j) os << (i <= h(j) ? '*' : '.');
        os << '\n';
    }
    return os.str();
}

inline std::string to_string(const HessFunc& h) {
    std::ostringstream os;
    for (int i = 1; i <= h.n(); ++i) {
        if (i > 1) os << ",";
        os << h(i);
    }
    return os.str();
}

// comma-separated value list, e.g. "2,4,4,4"
inline HessFunc parse_hess(const std::string& text) {
    std::vector<int> vals;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
            if (used != tok.size()) throw std::invalid_argument(tok);
            vals.push_back(v);
        } catch (const std::exception&) {
            throw DomainError("cannot parse Hessenberg value '" + tok + "'");
        }
    }
    if (vals.empty()) throw DomainError("empty Hessenberg function");
    return HessFunc::validate(vals);
}

} // namespace hessex
