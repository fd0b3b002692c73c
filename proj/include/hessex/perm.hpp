#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "rational.hpp"

namespace hessex {

// Element of S_n in one-line notation, 1-based values.
class Permutation {
public:
    static Permutation identity(int n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    static Permutation longest(int n) {  // w0 = n, n-1, ..., 1
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = n - i;
        return Permutation(std::move(v));
    }

    static Permutation validate(std::vector<int> one_line) {
        int n = static_cast<int>(one_line.size());
        if (n < 1) throw DomainError("permutation must have length >= 1");
        std::vector<bool> seen(n, false);
        for (int v : one_line) {
            if (v < 1 || v > n || seen[v - 1])
                throw DomainError("not a permutation of 1..n");
            seen[v - 1] = true;
        }
        return Permutation(std::move(one_line));
    }

    int n() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const { return w_.at(i - 1); }  // value at position i
    const std::vector<int>& one_line() const { return w_; }

    int length() const {  // inversion count
        int inv = 0;
        for (int i = 0; i < n(); ++i)
            for (int j = i + 1; j < n(); ++j)
                if (w_[i] > w_[j]) ++inv;
        return inv;
    }

    // Composition of maps: (this * other)(i) = this(other(i)).
    Permutation compose(const Permutation& other) const {
        if (n() != other.n()) throw DomainError("permutation size mismatch");
        std::vector<int> v(n());
        for (int i = 1; i <= n(); ++i) v[i - 1] = (*this)(other(i));
        return Permutation(std::move(v));
    }

    // Swap the entries at positions i and j (1-based): w * t_{ij}.
    Permutation swap_positions(int i, int j) const {
        std::vector<int> v = w_;
        std::swap(v.at(i - 1), v.at(j - 1));
        return Permutation(std::move(v));
    }

    // Simple transposition s_r as a permutation.
    static Permutation simple(int n, int r) {
        if (r < 1 || r > n - 1) throw DomainError("simple transposition index out of range");
        return identity(n).swap_positions(r, r + 1);
    }

    bool has_ascent_at(int i) const { return w_.at(i - 1) < w_.at(i); }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.w_ == b.w_; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.w_ < b.w_; }

private:
    explicit Permutation(std::vector<int> v) : w_(std::move(v)) {}
    std::vector<int> w_;
};

inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::validate(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

// Digit string for n <= 9, comma-separated beyond.
inline std::string to_string(const Permutation& w) {
    std::string s;
    for (int i = 1; i <= w.n(); ++i) {
        if (w.n() > 9 && i > 1) s += ",";
        s += std::to_string(w(i));
    }
    return s;
}

inline Permutation parse_permutation(const std::string& text) {
    std::vector<int> vals;
    if (text.find(',') != std::string::npos) {
        std::istringstream is(text);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            try {
                vals.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw DomainError("cannot parse permutation entry '" + tok + "'");
            }
        }
    } else {
        for (char ch : text) {
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw DomainError("cannot parse permutation '" + text + "'");
            vals.push_back(ch - '0');
        }
    }
    return Permutation::validate(std::move(vals));
}

// Pivot priority for relation solving: longer first, then one-line lex larger.
inline bool schubert_pivot_greater(const Permutation& a, const Permutation& b) {
    int la = a.length(), lb = b.length();
    if (la != lb) return la > lb;
    return b < a;
}

} // namespace hessex
