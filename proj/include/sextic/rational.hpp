#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

namespace sextic {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return numerator(r); }
inline Int den(const Rational& r) { return denominator(r); }

inline std::string to_string(const Rational& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

inline Rational rat_pow(const Rational& base, unsigned e) {
    Rational r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline int sign(const Rational& r) { return r.sign(); }

/// Exact integer square root test.
inline bool is_perfect_square(const Int& n, Int& root) {
    if (n < 0) return false;
    root = sqrt(n);
    return root * root == n;
}

inline std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    Int rn, rd;
    if (!is_perfect_square(num(r), rn)) return std::nullopt;
    if (!is_perfect_square(den(r), rd)) return std::nullopt;
    return Rational(rn, rd);
}

// ---------------------------------------------------------------------------
// Integer factorization (trial division + Pollard rho), used for rational
// root extraction. Complete for the coefficient sizes this pipeline produces.
// ---------------------------------------------------------------------------

namespace detail {

inline Int mulmod(const Int& a, const Int& b, const Int& m) { return a * b % m; }

inline Int pollard_rho(const Int& n) {
    if (n % 2 == 0) return 2;
    Int x = 2, y = 2, d = 1, c = 1;
    while (true) {
        x = 2;
        y = 2;
        d = 1;
        while (d == 1) {
            x = (mulmod(x, x, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            d = gcd(abs(x - y), n);
        }
        if (d != n) return d;
        ++c;
    }
}

inline void factor_into(Int n, std::map<Int, int>& out) {
    if (n <= 1) return;
    if (boost::multiprecision::miller_rabin_test(n, 32)) {
        out[n]++;
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace detail

inline std::map<Int, int> factor_integer(Int n) {
    std::map<Int, int> f;
    n = abs(n);
    for (Int p : {Int(2), Int(3), Int(5), Int(7), Int(11), Int(13)}) {
        while (n % p == 0) {
            f[p]++;
            n /= p;
        }
    }
    detail::factor_into(n, f);
    return f;
}

/// All positive divisors of n; throws if there are more than `cap`.
inline std::vector<Int> divisors(const Int& n, std::size_t cap = 200000) {
    auto f = factor_integer(n);
    std::vector<Int> ds{1};
    for (auto& [p, e] : f) {
        std::size_t old = ds.size();
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < old; ++i) {
                ds.push_back(ds[i] * pk);
                if (ds.size() > cap) throw std::runtime_error("divisors: too many divisors");
            }
        }
    }
    return ds;
}

} // namespace sextic
