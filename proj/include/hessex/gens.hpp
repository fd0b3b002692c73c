#pragma once

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "hessfn.hpp"
#include "poly.hpp"

namespace hessex {

namespace detail {

// f_{i,j} = sum_{k<=j} (prod_{l=j+1..i} (x_k - x_l)) * x_k   (with_xk = true)
// g_{i,j} = sum_{k<=j} (prod_{l=j+1..i} (x_k - x_l))          (with_xk = false)
// Empty products are 1, so f_{i,i} = x_1+...+x_i and g_{i,i} = i.
inline MultiPoly fg_poly(int n, int i, int j, bool with_xk) {
    if (!(1 <= j && j <= i && i <= n))
        throw DomainError("index violation: need 1 <= j <= i <= n");
    MultiPoly sum = MultiPoly::zero(n);
    for (int k = 1; k <= j; ++k) {
        MultiPoly prod = MultiPoly::constant(n, 1);
        for (int l = j + 1; l <= i; ++l)
            prod = prod * (MultiPoly::variable(n, k) - MultiPoly::variable(n, l));
        if (with_xk) prod = prod * MultiPoly::variable(n, k);
        sum = sum + prod;
    }
    return sum;
}

struct FGCache {
    std::mutex mu;
    std::map<std::tuple<int, int, int, bool>, MultiPoly> table;

    MultiPoly get(int n, int i, int j, bool with_xk) {
        std::scoped_lock lock(mu);
        auto key = std::make_tuple(n, i, j, with_xk);
        auto it = table.find(key);
        if (it != table.end()) return it->second;
        MultiPoly p = fg_poly(n, i, j, with_xk);
        table.emplace(key, p);
        return p;
    }

    static FGCache& instance() {
        static FGCache c;
        return c;
    }
};

} // namespace detail

inline MultiPoly f_poly(int n, int i, int j) {
    return detail::FGCache::instance().get(n, i, j, true);
}

inline MultiPoly g_poly(int n, int i, int j) {
    return detail::FGCache::instance().get(n, i, j, false);
}

// Generators of A_s^h: g_{h(m),m} for m < s, f_{h(m),m} for m >= s.
// s = 1 gives the ideal I_h; s may be n+1 (then g_{n,n} = n makes the
// quotient the zero ring).
struct GeneratorList {
    HessFunc h;
    int s;
    std::vector<MultiPoly> polys;  // entry m-1 corresponds to index m
};

inline GeneratorList generator_list(const HessFunc& h, int s) {
    int n = h.n();
    if (s < 1 || s > n + 1) throw DomainError("generator_list: s out of range [1,n+1]");
    std::vector<MultiPoly> polys;
    polys.reserve(n);
    for (int m = 1; m <= n; ++m)
        polys.push_back(m < s ? g_poly(n, h(m), m) : f_poly(n, h(m), m));
    return GeneratorList{h, s, std::move(polys)};
}

} // namespace hessex
