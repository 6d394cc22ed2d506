#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "galrank/gabidulin.hpp"
#include "galrank/skew_poly.hpp"

namespace galrank::testing {

// Shared towers; construction is deterministic so static reuse is safe.
inline const GaloisTower& tower(std::uint64_t p, unsigned r, unsigned s, unsigned m) {
    using Key = std::tuple<std::uint64_t, unsigned, unsigned, unsigned>;
    static std::map<Key, std::unique_ptr<GaloisTower>> cache;
    auto& slot = cache[{p, r, s, m}];
    if (!slot) slot = std::make_unique<GaloisTower>(GaloisTower::auto_params(p, r, s, m));
    return *slot;
}

inline const GaloisTower& gr42() { return tower(2, 2, 1, 2); }  // GR(4,2) over Z_4

inline SkewPoly random_poly(const GaloisTower& t, int max_deg, std::mt19937_64& rng) {
    const int d = static_cast<int>(rng() % static_cast<std::uint64_t>(max_deg + 1));
    std::vector<RingElement> c;
    for (int i = 0; i <= d; ++i) c.push_back(t.random_element(Level::S, rng));
    return SkewPoly(&t, std::move(c));
}

inline std::vector<RingElement> random_vector(const GaloisTower& t, std::size_t n,
                                              std::mt19937_64& rng) {
    std::vector<RingElement> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(t.random_element(Level::S, rng));
    return v;
}

// All rank profiles with the given total rank over r valuation classes.
inline std::vector<RankProfile> profiles_of_rank(unsigned total, unsigned r) {
    std::vector<RankProfile> out;
    std::vector<unsigned> cur(r, 0);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned idx, unsigned left) {
        if (idx + 1 == r) {
            cur[idx] = left;
            out.push_back(RankProfile{cur});
            return;
        }
        for (unsigned c = 0; c <= left; ++c) {
            cur[idx] = c;
            rec(idx + 1, left - c);
        }
    };
    rec(0, total);
    return out;
}

// Least squares slope of log(y) against log(x).
inline double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t n = xs.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lx = std::log(xs[i]), ly = std::log(ys[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double d = static_cast<double>(n) * sxx - sx * sx;
    return (static_cast<double>(n) * sxy - sx * sy) / d;
}

// Enumerates every message polynomial of degree < k (all coefficient tuples)
// and applies fn(message). Feasible only for tiny |S|^k.
inline void for_each_message(const GaloisTower& t, unsigned k,
                             const std::function<void(const SkewPoly&)>& fn) {
    const unsigned w = t.words(Level::S);
    const std::uint64_t q0 = t.characteristic_mod();
    std::vector<std::uint64_t> digits(static_cast<std::size_t>(k) * w, 0);
    for (;;) {
        std::vector<RingElement> coeffs;
        coeffs.reserve(k);
        for (unsigned i = 0; i < k; ++i)
            coeffs.push_back(t.element(
                Level::S, std::vector<std::uint64_t>(
                              digits.begin() + static_cast<std::ptrdiff_t>(i) * w,
                              digits.begin() + static_cast<std::ptrdiff_t>(i + 1) * w)));
        fn(SkewPoly(&t, std::move(coeffs)));
        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == q0) digits[pos++] = 0;
        if (pos == digits.size()) break;
    }
}

}  // namespace galrank::testing
