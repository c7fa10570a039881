#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "sextic/mpoly.hpp"
#include "sextic/upoly.hpp"

namespace sextic {

/// Extract f as a dense univariate polynomial in t = var_i, with var_j = 1.
/// f must involve only those two variables.
inline UPoly dehomogenize_binary(const MPoly& f, int vi, int vj) {
    std::vector<FElem> c;
    for (auto& [e, coef] : f.terms()) {
        for (std::size_t k = 0; k < e.size(); ++k)
            if (int(k) != vi && int(k) != vj && e[k] != 0)
                throw std::runtime_error("binary form involves extra variable");
        std::size_t d = std::size_t(e[std::size_t(vi)]);
        if (c.size() <= d) c.resize(d + 1, FElem(0));
        c[d] = c[d] + coef;
    }
    return UPoly(std::move(c));
}

/// Root multiplicity pattern of a nonzero binary form over the algebraic
/// closure, via gcd-with-derivative chains; no root extraction involved.
inline std::vector<int> squarefree_pattern(const MPoly& f, int vi, int vj) {
    if (f.is_zero()) throw std::runtime_error("squarefree_pattern: zero form");
    auto deg = f.homogeneous_weighted_degree();
    int dtot = 0;
    for (auto& [e, c] : f.terms()) {
        int d = e[std::size_t(vi)] + e[std::size_t(vj)];
        if (dtot == 0)
            dtot = d;
        else if (d != dtot)
            throw std::runtime_error("squarefree_pattern: not homogeneous in the two variables");
    }
    (void)deg;
    UPoly p = dehomogenize_binary(f, vi, vj);
    std::vector<int> pattern;
    int inf_mult = dtot - p.degree(); // multiplicity of the root (1:0)
    if (inf_mult > 0) pattern.push_back(inf_mult);
    for (auto& [g, m] : squarefree_decomposition(p))
        for (int k = 0; k < g.degree(); ++k) pattern.push_back(m);
    if (p.degree() > 0 && squarefree_decomposition(p).empty()) {
        // squarefree already: decomposition lists it with multiplicity 1
    }
    std::sort(pattern.begin(), pattern.end(), std::greater<>());
    int total = 0;
    for (int m : pattern) total += m;
    if (total != dtot) throw std::runtime_error("squarefree_pattern: internal bookkeeping error");
    return pattern;
}

inline std::vector<int> squarefree_pattern(const MPoly& f, const std::string& a,
                                           const std::string& b) {
    return squarefree_pattern(f, f.ring()->index_of(a), f.ring()->index_of(b));
}

/// Rank of the symmetric 2x2 matrix of a binary quadratic form (0 allowed).
inline int binary_quadratic_rank(const MPoly& f, int vi, int vj) {
    if (f.is_zero()) return 0;
    UPoly p = dehomogenize_binary(f, vi, vj);
    // f = a t^2 + b t + c with t = var_i (homogenized by var_j)
    FElem a = p.degree() >= 2 ? p.c[2] : FElem(0);
    FElem b = p.degree() >= 1 ? p.c[1] : FElem(0);
    FElem c = p.degree() >= 0 && !p.is_zero() ? p.c[0] : FElem(0);
    FElem disc = b * b - FElem(4) * a * c;
    if (!disc.is_zero()) return 2;
    return (a.is_zero() && b.is_zero() && c.is_zero()) ? 0 : 1;
}

inline int binary_quadratic_rank(const MPoly& f, const std::string& a, const std::string& b) {
    return binary_quadratic_rank(f, f.ring()->index_of(a), f.ring()->index_of(b));
}

/// A projective root (a : b) of a binary form, with multiplicity.
struct BinaryRoot {
    FElem a, b; // not both zero
    int multiplicity = 1;
};

/// Roots of a binary form of degree <= 3 over a single extension of degree
/// <= 3. Fails (returns empty + ok=false) when the splitting data would need
/// a tower, i.e. an irreducible non-Galois cubic.
struct BinaryRootsResult {
    bool ok = true;
    std::string failure;
    std::vector<BinaryRoot> roots;
    FieldPtr field; // null when everything is rational
};

inline BinaryRootsResult binary_form_roots(const MPoly& f, int vi, int vj) {
    BinaryRootsResult out;
    UPoly p = dehomogenize_binary(f, vi, vj);
    int dtot = 0;
    for (auto& [e, c] : f.terms()) dtot = e[std::size_t(vi)] + e[std::size_t(vj)];
    int inf = dtot - p.degree();
    if (inf > 0) out.roots.push_back({FElem(1), FElem(0), inf});
    if (p.degree() == 0) return out;
    if (!all_rational(p)) throw std::runtime_error("binary_form_roots: expects rational input");
    for (auto& [g, mult] : squarefree_decomposition(p)) {
        UPoly rest = g;
        for (const Rational& r : rational_roots(g)) {
            out.roots.push_back({FElem(r), FElem(1), mult});
            UPoly lin({FElem(-r), FElem(1)});
            rest = divmod(rest, lin).first;
        }
        if (rest.degree() == 0) continue;
        if (rest.degree() == 2 || rest.degree() == 3) {
            AdjoinResult ar = adjoin_root(rest);
            if (out.field && !same_field(out.field, ar.field)) {
                out.ok = false;
                out.failure = "roots require more than one field extension";
                return out;
            }
            out.field = ar.field;
            out.roots.push_back({ar.root, FElem(1), mult});
            UPoly lin({-ar.root, FElem(1)});
            UPoly rem = divmod(rest, lin).first;
            // remaining factor over the extension; degree 1 or 2
            if (rem.degree() == 1) {
                out.roots.push_back({-rem.c[0] / rem.c[1], FElem(1), mult});
            } else if (rem.degree() == 2) {
                FElem A = rem.c[2], B = rem.c[1], C = rem.c[0];
                auto s = sqrt_in_field(B * B - FElem(4) * A * C);
                if (!s) {
                    out.ok = false;
                    out.failure = "cubic does not split over a single degree<=3 extension";
                    return out;
                }
                FElem two_a = FElem(2) * A;
                out.roots.push_back({(-B + *s) / two_a, FElem(1), mult});
                out.roots.push_back({(-B - *s) / two_a, FElem(1), mult});
            }
        } else if (rest.degree() > 0) {
            out.ok = false;
            out.failure = "irreducible factor of degree > 3";
            return out;
        }
    }
    return out;
}

} // namespace sextic
