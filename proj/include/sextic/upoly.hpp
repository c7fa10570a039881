#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sextic/number_field.hpp"
#include "sextic/rational.hpp"

namespace sextic {

/// Dense univariate polynomial, ascending coefficients over Q or a number
/// field. Trailing zeros are trimmed; the zero polynomial is {}.
struct UPoly {
    std::vector<FElem> c;

    UPoly() = default;
    UPoly(std::vector<FElem> cc) : c(std::move(cc)) { trim(); }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    int degree() const { return int(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const FElem& lead() const { return c.back(); }

    FElem eval(const FElem& x) const {
        FElem r(0);
        for (std::size_t i = c.size(); i-- > 0;) r = r * x + c[i];
        return r;
    }

    UPoly derivative() const {
        if (c.size() <= 1) return {};
        std::vector<FElem> d(c.size() - 1);
        for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * FElem(int(i));
        return UPoly(std::move(d));
    }

    UPoly monic() const {
        if (is_zero()) return {};
        UPoly r = *this;
        FElem inv = lead().inverse();
        for (auto& x : r.c) x = x * inv;
        return r;
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<FElem> r(std::max(a.c.size(), b.c.size()), FElem(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) r[i] = r[i] + a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] + b.c[i];
        return UPoly(std::move(r));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        std::vector<FElem> r(std::max(a.c.size(), b.c.size()), FElem(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) r[i] = r[i] + a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] - b.c[i];
        return UPoly(std::move(r));
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<FElem> r(a.c.size() + b.c.size() - 1, FElem(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] = r[i + j] + a.c[i] * b.c[j];
        }
        return UPoly(std::move(r));
    }
};

inline std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::runtime_error("UPoly: division by zero polynomial");
    UPoly rem = a, quot;
    quot.c.assign(std::size_t(std::max(0, a.degree() - b.degree()) + 1), FElem(0));
    FElem inv = b.lead().inverse();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        FElem f = rem.lead() * inv;
        quot.c[std::size_t(shift)] = quot.c[std::size_t(shift)] + f;
        for (int i = 0; i <= b.degree(); ++i)
            rem.c[std::size_t(i + shift)] = rem.c[std::size_t(i + shift)] - f * b.c[std::size_t(i)];
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

inline UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = divmod(x, y).second;
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

/// Yun squarefree decomposition (char 0): returns (g_i, i) with
/// f = lead * prod g_i^i, each g_i monic squarefree, pairwise coprime.
inline std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f) {
    std::vector<std::pair<UPoly, int>> out;
    if (f.degree() <= 0) return out;
    UPoly a = f.monic();
    UPoly d = a.derivative();
    UPoly g = gcd(a, d);
    UPoly w = divmod(a, g).first;
    UPoly y = divmod(d, g).first;
    int i = 1;
    while (w.degree() > 0) {
        UPoly z = y - w.derivative();
        UPoly gi = gcd(w, z);
        if (gi.degree() > 0) out.emplace_back(gi, i);
        w = divmod(w, gi).first;
        y = divmod(z, gi).first;
        ++i;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rational-coefficient specifics
// ---------------------------------------------------------------------------

inline bool all_rational(const UPoly& f) {
    for (auto& x : f.c)
        if (!x.is_rational()) return false;
    return true;
}

/// Integer-normalized copy: primitive, integral coefficients.
inline std::vector<Int> integer_normalize(const UPoly& f) {
    Int l = 1;
    for (auto& x : f.c) l = lcm(l, den(x.rational_value()));
    std::vector<Int> v;
    Int g = 0;
    for (auto& x : f.c) {
        Int t = num(x.rational_value() * Rational(l));
        v.push_back(t);
        g = gcd(g, abs(t));
    }
    if (g > 1)
        for (auto& t : v) t /= g;
    return v;
}

/// All rational roots of f (rational coefficients), without multiplicity.
inline std::vector<Rational> rational_roots(const UPoly& f) {
    std::vector<Rational> roots;
    if (f.degree() <= 0) return roots;
    auto v = integer_normalize(f);
    // strip t^k
    std::size_t low = 0;
    while (v[low] == 0) ++low;
    if (low > 0) roots.push_back(0);
    Int a0 = v[low], an = v.back();
    if (int(v.size()) - 1 == int(low)) return roots; // monomial
    for (const Int& p : divisors(a0))
        for (const Int& q : divisors(an)) {
            if (gcd(p, q) != 1) continue;
            for (int s : {1, -1}) {
                Rational r(p * s, q);
                if (f.eval(FElem(r)).is_zero()) roots.push_back(r);
            }
        }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

/// Irreducibility over Q, certified for degree <= 3 only.
inline bool irreducible_over_Q(const UPoly& f) {
    int d = f.degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    if (d > 3) throw std::runtime_error("irreducible_over_Q: degree > 3 not certified");
    if (d == 2) {
        const Rational a = f.c[2].rational_value(), b = f.c[1].rational_value(),
                       cc = f.c[0].rational_value();
        return !rational_sqrt(b * b - 4 * a * cc).has_value();
    }
    return rational_roots(f).empty();
}

/// Arithmetic context in which a selected irreducible factor of m acquires a
/// root. m must be squarefree with rational coefficients; an irreducible
/// factor of degree <= 3 is selected (rational roots first).
struct AdjoinResult {
    FieldPtr field;  // null when the selected factor is linear
    FElem root;      // the adjoined (or rational) root
};

inline FieldPtr make_field(const UPoly& min_poly_monic) {
    if (!irreducible_over_Q(min_poly_monic))
        throw std::runtime_error("make_field: modulus is reducible over Q");
    auto nf = std::make_shared<NumberField>();
    for (auto& x : min_poly_monic.c) nf->min_poly.push_back(x.rational_value());
    return nf;
}

inline AdjoinResult adjoin_root(const UPoly& m) {
    if (m.degree() < 1) throw std::runtime_error("adjoin_root: constant polynomial");
    for (auto& [g, mult] : squarefree_decomposition(m))
        if (mult > 1) throw std::runtime_error("adjoin_root: polynomial is not squarefree");
    auto rr = rational_roots(m);
    if (!rr.empty()) return {nullptr, FElem(rr.front())};
    // peel rational roots off, then select an irreducible factor of degree <= 3
    UPoly rest = m.monic();
    if (rest.degree() == 2 || rest.degree() == 3) {
        if (!irreducible_over_Q(rest))
            throw std::runtime_error("adjoin_root: unexpected reducible remainder");
        FieldPtr F = make_field(rest);
        return {F, FElem::generator(F)};
    }
    throw std::runtime_error("adjoin_root: no irreducible factor of degree <= 3");
}

// ---------------------------------------------------------------------------
// Square roots inside the supported fields
// ---------------------------------------------------------------------------

/// sqrt of d in its own field: complete over Q and over quadratic fields;
/// over cubic fields only rational squares are recognized.
inline std::optional<FElem> sqrt_in_field(const FElem& d) {
    if (d.is_rational()) {
        auto r = rational_sqrt(d.rational_value());
        if (r) {
            if (!d.field()) return FElem(*r);
            return FElem(*r) + FElem(0) * FElem::generator(d.field());
        }
        if (!d.field() || d.field()->degree() != 2) return std::nullopt;
    }
    const FieldPtr& F = d.field();
    if (!F || F->degree() != 2) return std::nullopt;
    // min poly t^2 + p t + q, alpha^2 = -p alpha - q
    Rational p = F->min_poly[1], q = F->min_poly[0];
    Rational d0 = d.coords()[0], d1 = d.coords()[1];
    // (u + v a)^2 = (u^2 - q v^2) + (2uv - p v^2) a  [using a^2 = -pa - q]
    if (d1 == 0) {
        // v = 0 handled above (rational square); try u = p v / 2
        // v^2 (p^2/4 - q) = d0
        Rational denom = p * p / 4 - q;
        if (denom == 0) return std::nullopt;
        auto v2 = rational_sqrt(d0 / denom);
        if (!v2) return std::nullopt;
        Rational v = *v2, u = p * v / 2;
        return FElem(F, {u, v});
    }
    // v != 0, u = (d1 + p v^2)/(2 v); substitute into u^2 - q v^2 = d0:
    // (p^2 - 4q) v^4 + (2 p d1 - 4 d0) v^2 + d1^2 = 0, solve for rational v.
    UPoly quart({FElem(d1 * d1), FElem(0), FElem(2 * p * d1 - 4 * d0), FElem(0),
                 FElem(p * p - 4 * q)});
    for (const Rational& v : rational_roots(quart)) {
        if (v == 0) continue;
        Rational u = (d1 + p * v * v) / (2 * v);
        FElem cand(F, {u, v});
        if (cand * cand == d) return cand;
    }
    return std::nullopt;
}

} // namespace sextic
