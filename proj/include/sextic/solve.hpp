#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sextic/groebner.hpp"
#include "sextic/upoly.hpp"

namespace sextic {

/// One Galois orbit of solutions. coords are representative coordinates,
/// orbit_size counts the conjugate points sharing this description.
struct SolutionOrbit {
    FieldPtr field; // null for rational points
    std::vector<FElem> coords;
    int orbit_size = 1;
    int multiplicity = 1;
};

struct SolveResult {
    bool zero_dimensional = false;
    std::vector<SolutionOrbit> points;
    long unresolved_count = 0; // solutions (with multiplicity) outside supported fields
    std::size_t quotient_dim = 0;
    std::string posdim_witness; // a variable with no pure-power leading term
};

namespace detail {

using Vec = std::vector<FElem>;

inline Vec mat_vec(const std::vector<Vec>& M, const Vec& v) {
    Vec r(M.size(), FElem(0));
    for (std::size_t i = 0; i < M.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!M[i][j].is_zero() && !v[j].is_zero()) r[i] = r[i] + M[i][j] * v[j];
    return r;
}

/// Minimal polynomial of the Krylov sequence v, Mv, M^2 v, ... (monic).
inline UPoly krylov_minpoly(const std::vector<Vec>& M, Vec v) {
    std::size_t D = v.size();
    std::vector<Vec> ech;      // echelon rows
    std::vector<std::size_t> piv;
    std::vector<Vec> comb;     // ech[k] = sum comb[k][t] * M^t v
    std::size_t step = 0;
    while (true) {
        Vec w = v;
        Vec c(step + 1, FElem(0));
        c[step] = FElem(1);
        for (std::size_t k = 0; k < ech.size(); ++k) {
            if (w[piv[k]].is_zero()) continue;
            FElem f = w[piv[k]];
            for (std::size_t j = 0; j < D; ++j) w[j] = w[j] - f * ech[k][j];
            for (std::size_t t = 0; t < comb[k].size(); ++t) c[t] = c[t] - f * comb[k][t];
        }
        std::size_t p = D;
        for (std::size_t j = 0; j < D; ++j)
            if (!w[j].is_zero()) {
                p = j;
                break;
            }
        if (p == D) {
            UPoly m;
            m.c = c;
            return m.monic();
        }
        FElem inv = w[p].inverse();
        for (std::size_t j = 0; j < D; ++j) w[j] = w[j] * inv;
        for (auto& t : c) t = t * inv;
        ech.push_back(w);
        piv.push_back(p);
        comb.push_back(c);
        v = mat_vec(M, v);
        ++step;
        if (step > D + 1) throw std::logic_error("krylov_minpoly failed to terminate");
    }
}

inline UPoly upoly_lcm(const UPoly& a, const UPoly& b) {
    if (a.degree() < 0) return b;
    if (b.degree() < 0) return a;
    UPoly g = gcd(a, b);
    return divmod(a * b, g).first.monic();
}

/// Minimal polynomial of the operator given by matrix M.
inline UPoly operator_minpoly(const std::vector<Vec>& M) {
    std::size_t D = M.size();
    UPoly m; // zero
    for (std::size_t j = 0; j < D; ++j) {
        Vec e(D, FElem(0));
        e[j] = FElem(1);
        m = upoly_lcm(m, krylov_minpoly(M, e));
        if (std::size_t(m.degree()) == D) break;
    }
    return m;
}

/// Multiplication-by-variable matrix on the quotient basis of a
/// zero-dimensional Groebner basis.
inline std::vector<Vec> multiplication_matrix(const std::vector<MPoly>& GB,
                                              const std::vector<Expo>& basis,
                                              std::size_t var) {
    RingPtr R = GB.front().ring();
    std::size_t D = basis.size();
    std::vector<Vec> M(D, Vec(D, FElem(0)));
    std::map<Expo, std::size_t> index;
    for (std::size_t i = 0; i < D; ++i) index[basis[i]] = i;
    for (std::size_t j = 0; j < D; ++j) {
        Expo e = basis[j];
        e[var] += 1;
        MPoly nf = normal_form(monomial(R, e, FElem(1)), GB);
        for (auto& [me, c] : nf.terms()) {
            auto it = index.find(me);
            if (it == index.end()) throw std::logic_error("normal form left the quotient basis");
            M[it->second][j] = c;
        }
    }
    return M;
}

struct RootHit {
    FElem value;
    FieldPtr field;    // field containing value (null = Q)
    int orbit = 1;     // conjugates represented by this value
};

/// Roots of a univariate polynomial over the working field. Over Q an
/// irreducible quadratic or cubic factor is split by adjoining one root;
/// over a proper extension only linear factors and quadratics solvable by
/// an in-field square root are handled. unresolved_deg collects the degree
/// of whatever remains unsplit.
inline std::vector<RootHit> poly_roots(const UPoly& m, const FieldPtr& F, int& unresolved_deg) {
    std::vector<RootHit> hits;
    for (auto& [g, mult] : squarefree_decomposition(m)) {
        (void)mult; // root set only; multiplicities come from the local ring
        UPoly rest = g.monic();
        if (all_rational(rest)) {
            for (const Rational& r : rational_roots(rest)) {
                hits.push_back({FElem(r), F, 1});
                UPoly lin;
                lin.c = {FElem(-r), FElem(1)};
                rest = divmod(rest, lin).first;
            }
        }
        int d = rest.degree();
        if (d <= 0) continue;
        if (d == 1) {
            hits.push_back({(FElem(0) - rest.c[0]) / rest.c[1], F, 1});
            continue;
        }
        if (d == 2 && F) {
            // quadratic formula if the discriminant has a square root in F
            FElem a = rest.c[2], b = rest.c[1], cc = rest.c[0];
            FElem disc = b * b - FElem(4) * a * cc;
            if (disc.is_rational() && F) disc = disc + FElem(0) * FElem::generator(F); // view in F
            if (auto s = sqrt_in_field(disc)) {
                FElem inv2a = (FElem(2) * a).inverse();
                hits.push_back({(FElem(0) - b + *s) * inv2a, F, 1});
                hits.push_back({(FElem(0) - b - *s) * inv2a, F, 1});
                continue;
            }
        }
        if (!F && all_rational(rest) && (d == 2 || d == 3) && irreducible_over_Q(rest)) {
            AdjoinResult ad = adjoin_root(rest);
            hits.push_back({ad.root, ad.field, d});
            continue;
        }
        unresolved_deg += d;
    }
    return hits;
}

} // namespace detail

namespace detail {

/// Promote a value into the point's field (no-op for rational points).
inline FElem promote(const FElem& a, const FieldPtr& F) {
    if (!F) return a;
    return a + FElem(0) * FElem::generator(F);
}

/// Rank of a matrix given as a list of rows, destructively.
inline std::size_t row_rank(std::vector<Vec>& rows) {
    std::size_t rank = 0, cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[rank], rows[p]);
        FElem inv = rows[rank][c].inverse();
        for (std::size_t j = c; j < cols; ++j) rows[rank][j] = rows[rank][j] * inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c].is_zero()) continue;
            FElem f = rows[r][c];
            for (std::size_t j = c; j < cols; ++j) rows[r][j] = rows[r][j] - f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

inline std::vector<Vec> mat_mul(const std::vector<Vec>& A, const std::vector<Vec>& B) {
    std::size_t D = A.size();
    std::vector<Vec> C(D, Vec(D, FElem(0)));
    for (std::size_t i = 0; i < D; ++i)
        for (std::size_t k = 0; k < D; ++k) {
            if (A[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < D; ++j)
                if (!B[k][j].is_zero()) C[i][j] = C[i][j] + A[i][k] * B[k][j];
        }
    return C;
}

} // namespace detail

/// Local multiplicity of a zero-dimensional ideal at a point: the dimension
/// of the joint generalized eigenspace of the multiplication operators at
/// the point's coordinate tuple. (M_i - p_i)^D, D the quotient dimension,
/// kills exactly the local factor; the multiplicity is the dimension of the
/// intersection of those kernels.
inline int local_multiplicity_on(const std::vector<std::vector<detail::Vec>>& mult_matrices,
                                 const std::vector<FElem>& point, const FieldPtr& field) {
    using detail::Vec;
    std::size_t D = mult_matrices.empty() ? 0 : mult_matrices[0].size();
    if (D == 0) return 0;
    std::vector<Vec> stacked;
    for (std::size_t v = 0; v < mult_matrices.size(); ++v) {
        std::vector<Vec> A(D, Vec(D, FElem(0)));
        for (std::size_t i = 0; i < D; ++i)
            for (std::size_t j = 0; j < D; ++j) {
                A[i][j] = detail::promote(mult_matrices[v][i][j], field);
                if (i == j) A[i][j] = A[i][j] - point[v];
            }
        // A^e for some e >= D by repeated squaring
        for (std::size_t e = 1; e < D; e *= 2) A = detail::mat_mul(A, A);
        for (std::size_t i = 0; i < D; ++i) stacked.push_back(A[i]);
    }
    return int(D - detail::row_rank(stacked));
}

/// Convenience wrapper building the ideal data from scratch.
inline int local_multiplicity(const std::vector<MPoly>& gens, const std::vector<FElem>& point,
                              const FieldPtr& field = nullptr) {
    if (gens.empty()) throw std::invalid_argument("local_multiplicity: empty system");
    RingPtr R = gens.front().ring();
    std::vector<MPoly> GB = buchberger(gens);
    if (is_unit_ideal(GB) || !is_zero_dimensional(GB, nullptr))
        throw std::invalid_argument("local_multiplicity: ideal not zero-dimensional");
    std::vector<Expo> basis = quotient_basis(GB);
    std::vector<std::vector<detail::Vec>> M;
    for (std::size_t v = 0; v < R->nvars(); ++v)
        M.push_back(detail::multiplication_matrix(GB, basis, v));
    return local_multiplicity_on(M, point, field);
}

namespace detail {

/// Recursively peel off coordinates, last variable first. coords_tail holds
/// the already-fixed values for variables var+1 .. n-1.
inline void solve_rec(const std::vector<MPoly>& gens, std::size_t var_plus_one,
                      const FieldPtr& F, std::vector<FElem> coords_tail,
                      std::vector<SolutionOrbit>& out, long& unresolved,
                      std::size_t pending_orbit) {
    std::vector<MPoly> GB = buchberger(gens);
    if (is_unit_ideal(GB)) return;
    if (GB.empty()) throw std::logic_error("positive-dimensional branch in solver");
    if (var_plus_one == 0) {
        SolutionOrbit p;
        p.field = F;
        p.coords = coords_tail;
        p.orbit_size = int(pending_orbit);
        out.push_back(p);
        return;
    }
    std::size_t var = var_plus_one - 1;
    if (!is_zero_dimensional(GB)) throw std::logic_error("positive-dimensional branch in solver");
    std::vector<Expo> basis = quotient_basis(GB);
    std::vector<Vec> M = multiplication_matrix(GB, basis, var);
    UPoly m = operator_minpoly(M);
    int unresolved_deg = 0;
    std::vector<RootHit> hits = poly_roots(m, F, unresolved_deg);
    if (unresolved_deg > 0) unresolved += pending_orbit; // at least one lost branch
    RingPtr R = gens.front().ring();
    for (const RootHit& h : hits) {
        std::map<std::string, MPoly> sub;
        sub[R->vars[var]] = MPoly(R, h.value);
        std::vector<MPoly> next;
        for (const MPoly& g : gens) next.push_back(g.substitute(sub));
        Expo ev(R->nvars(), 0);
        ev[var] = 1;
        next.push_back(monomial(R, ev, FElem(1)) - MPoly(R, h.value)); // pin the coordinate
        std::vector<FElem> coords = coords_tail;
        coords.insert(coords.begin(), h.value);
        solve_rec(next, var, h.field, coords, out, unresolved,
                  pending_orbit * std::size_t(h.orbit));
    }
}

} // namespace detail

/// Exact solution of a zero-dimensional polynomial system. Points are grouped
/// into Galois orbits; coordinates live in Q or a single extension of degree
/// at most 3. Anything needing a larger or composite field is only counted.
inline SolveResult zero_dim_solve(const std::vector<MPoly>& gens) {
    SolveResult res;
    if (gens.empty()) throw std::invalid_argument("zero_dim_solve: empty system");
    RingPtr R = gens.front().ring();
    std::vector<MPoly> GB = buchberger(gens);
    if (is_unit_ideal(GB)) {
        res.zero_dimensional = true;
        res.quotient_dim = 0;
        return res;
    }
    if (GB.empty() || !is_zero_dimensional(GB, &res.posdim_witness)) {
        if (GB.empty() && R->nvars() > 0) res.posdim_witness = R->vars[0];
        return res;
    }
    res.zero_dimensional = true;
    res.quotient_dim = quotient_dimension(GB);

    long unresolved_flag = 0;
    detail::solve_rec(gens, R->nvars(), nullptr, {}, res.points, unresolved_flag, 1);

    long accounted = 0;
    long simple = 0;
    for (const SolutionOrbit& p : res.points) simple += p.orbit_size;
    if (simple == long(res.quotient_dim)) {
        // radical ideal, fully resolved: every multiplicity is 1
        for (SolutionOrbit& p : res.points) p.multiplicity = 1;
        accounted = simple;
    } else {
        std::vector<Expo> basis = quotient_basis(GB);
        std::vector<std::vector<detail::Vec>> M;
        for (std::size_t v = 0; v < R->nvars(); ++v)
            M.push_back(detail::multiplication_matrix(GB, basis, v));
        for (SolutionOrbit& p : res.points) {
            p.multiplicity = local_multiplicity_on(M, p.coords, p.field);
            accounted += long(p.multiplicity) * p.orbit_size;
        }
    }
    res.unresolved_count = long(res.quotient_dim) - accounted;
    if (res.unresolved_count < 0)
        throw std::logic_error("solution multiplicities exceed quotient dimension");
    return res;
}

} // namespace sextic
