#pragma once

#include <array>
#include <string>
#include <vector>

#include "sextic/normal_form.hpp"
#include "sextic/singularity.hpp"

namespace sextic {

/// Coordinate ring of P(1,1,2), the base of the conic bundle.
inline RingPtr p112_ring() {
    static RingPtr r = make_ring({"x1", "y1", "x2"}, {1, 1, 2});
    return r;
}

struct DiscriminantCurve {
    MPoly D; // weighted degree 8 in (x1, y1, x2), the class -2K
    CaseTag source_case = CaseTag::Eq3;
};

namespace detail {

inline MPoly to_p112(const MPoly& f) {
    const RingPtr& R = f.ring();
    RingPtr P = p112_ring();
    std::map<std::string, MPoly> img;
    for (const std::string& v : R->vars)
        img[v] = P->has_var(v) ? MPoly::variable(P, v) : MPoly(P);
    return f.substitute(img);
}

} // namespace detail

/// The discriminant of the conic bundle obtained by projecting from the
/// distinguished half point (0,0,0,1,0), assembled from the closed per-case
/// formulas in the normalized coordinates.
inline DiscriminantCurve discriminant(const NormalForm& nf) {
    if (!nf.forms_available)
        throw AnalyzerError("NotLinearizable",
                            "discriminant needs extracted forms; the cubic did not split");
    RingPtr P = p112_ring();
    MPoly x2 = MPoly::variable(P, "x2");
    MPoly f2 = detail::to_p112(nf.phi2), f2p = detail::to_p112(nf.phi2p),
          f2pp = detail::to_p112(nf.phi2pp), f4 = detail::to_p112(nf.phi4),
          f4p = detail::to_p112(nf.phi4p), f6 = detail::to_p112(nf.phi6);
    MPoly D(P);
    FElem four(4);
    switch (nf.tag) {
        case CaseTag::Eq3: {
            MPoly inner = x2 * x2 + x2 * f2p + f4p;
            D = (x2 + f2pp) * (x2 * x2 * f2 + x2 * f4 + f6) - four * inner * inner;
            break;
        }
        case CaseTag::Eq2: {
            MPoly inner = x2 * x2 + f4p;
            D = f2pp * (x2 * f4 + f6) - four * inner * inner;
            break;
        }
        case CaseTag::Eq1: {
            MPoly inner = x2 * f2p + f4p;
            D = f2pp * (x2 * x2 * x2 + x2 * f4 + f6) - four * inner * inner;
            break;
        }
    }
    if (!D.is_zero() && !D.is_weighted_homogeneous(8))
        throw std::logic_error("discriminant: output not of weighted degree 8");
    DiscriminantCurve out;
    out.D = D;
    out.source_case = nf.tag;
    return out;
}

/// Smoothness of the discriminant curve on P(1,1,2): the Jacobian ideal is
/// trivial on both weight-1 charts and the curve misses the singular point
/// (0:0:1) of the surface.
inline bool discriminant_smooth(const DiscriminantCurve& c) {
    const RingPtr& P = c.D.ring();
    if (c.D.is_zero()) return false;
    Expo e4(P->nvars(), 0);
    e4[P->index_of("x2")] = 4;
    if (c.D.coeff(e4).is_zero()) return false; // passes through (0:0:1)
    for (std::size_t chart = 0; chart < 2; ++chart) {
        std::vector<MPoly> sys;
        std::map<std::string, MPoly> pin;
        for (const std::string& v : P->vars) pin[v] = MPoly::variable(P, v);
        pin[P->vars[chart]] = MPoly(P, FElem(1));
        MPoly Dc = c.D.substitute(pin);
        sys.push_back(Dc);
        for (const std::string& v : P->vars) {
            MPoly g = c.D.derivative(v).substitute(pin);
            if (!g.is_zero()) sys.push_back(g);
        }
        sys.push_back(MPoly::variable(P, P->vars[chart]) - MPoly(P, FElem(1)));
        if (!is_unit_ideal(buchberger(sys))) return false;
    }
    return true;
}

/// Genus by adjunction on a surface with polarization h: Delta = d h,
/// K = k h, 2g - 2 = (K + Delta) . Delta.
inline Rational curve_genus_adjunction(long d, const Rational& h2, const Rational& k_in_h) {
    Rational twog2 = (k_in_h + d) * d * h2;
    Rational g = 1 + twog2 / 2;
    if (den(g) != 1)
        throw AnalyzerError("WrongDegree",
                            "adjunction gave a non-integer genus; the curve hypotheses fail");
    return g;
}

struct PrymData {
    long dimension;   // g - 1
    long cover_genus; // 2g - 1, etale double cover
};

inline PrymData prym_dimension(long g) { return PrymData{g - 1, 2 * g - 1}; }

/// Monomial values of the cubic intersection form in A and E.
struct IntersectionLedger {
    Rational A3 = Rational(1, 2);
    Rational A2E = 0;
    Rational AE2 = 0;
    Rational E3 = 4;
};

inline RingPtr ledger_ring() {
    static RingPtr r = make_ring({"A", "E"}, {1, 1});
    return r;
}

inline Rational ledger_eval(const IntersectionLedger& L, const MPoly& expr) {
    if (!expr.is_zero() && !expr.is_weighted_homogeneous(3))
        throw std::invalid_argument("ledger_eval: expression must be a homogeneous cubic");
    const RingPtr& R = expr.ring();
    Rational out = 0;
    for (auto& [e, c] : expr.terms()) {
        Rational v;
        int i = e[R->index_of("A")];
        switch (i) {
            case 3: v = L.A3; break;
            case 2: v = L.A2E; break;
            case 1: v = L.AE2; break;
            default: v = L.E3; break;
        }
        out += c.rational_value() * v;
    }
    return out;
}

/// K_Y . F^2 and K_Y^2 . F for a conic bundle over (S, h) with
/// discriminant class Delta: (-2 h^2, -4 K_S.h - Delta.h).
inline std::pair<Rational, Rational> cb_invariants(const Rational& h2, const Rational& Kh,
                                                   const Rational& Dh) {
    return {Rational(-2) * h2, Rational(-4) * Kh - Dh};
}

struct SurfaceCatalogEntry {
    std::string name;
    Rational h2;
    long minus_K_in_h;
};

inline std::vector<SurfaceCatalogEntry> surface_catalog() {
    return {{"P2", 1, 3},
            {"P(1,1,2)", Rational(1, 2), 4},
            {"P(1,2,3)", Rational(1, 6), 6},
            {"X6 in P(1,2,3,5)", Rational(1, 5), 10}};
}

/// A divisor class on the blowup of F2 at l points, on the basis
/// (Sigma, F, E_1..E_l): Sigma^2 = -2, Sigma.F = 1, F^2 = 0, E_i^2 = -1.
struct LatticeClass {
    long a = 0, b = 0;      // Sigma, F coefficients
    std::vector<long> e;    // exceptional coefficients

    long dot(const LatticeClass& o) const {
        long s = -2 * a * o.a + a * o.b + b * o.a;
        for (std::size_t i = 0; i < e.size(); ++i) s -= e[i] * o.e[i];
        return s;
    }
};

inline LatticeClass canonical_class(int l) {
    LatticeClass K;
    K.a = -2;
    K.b = -4;
    K.e.assign(std::size_t(l), 1);
    return K;
}

struct LatticeCheckResult {
    long candidates = 0;      // decompositions with D'.D'' = 2 inside the cone
    std::vector<std::string> violations;        // both -K.D' > 0 and -K.D'' > 0
    long parity_checked = 0;  // (-2)-classes D' probed for D'.(-2K - D') even
    std::vector<std::string> parity_violations;
};

/// Enumerate decompositions -2K = D' + D'' with D'.D'' = 2 over the cone
/// a in [0,4], b in [0,2*bound], e_i in [-bound, bound - 2] and report any
/// where both halves meet -K positively; also probe the parity statement on
/// every (-2)-class encountered.
inline LatticeCheckResult lattice_check_surf(int l, int bound) {
    if (l < 0 || l > 4) throw std::invalid_argument("lattice_check_surf: l in 0..4");
    if (bound < 2) throw std::invalid_argument("lattice_check_surf: bound too small");
    LatticeClass K = canonical_class(l);
    LatticeClass m2K; // -2K
    m2K.a = 4;
    m2K.b = 8;
    m2K.e.assign(std::size_t(l), -2);
    LatticeCheckResult res;
    LatticeClass D1;
    D1.e.assign(std::size_t(l), 0);
    auto render = [&](const LatticeClass& c) {
        std::string s = "(" + std::to_string(c.a) + "," + std::to_string(c.b);
        for (long x : c.e) s += "," + std::to_string(x);
        return s + ")";
    };
    std::vector<long> evals;
    for (long v = -bound; v <= bound - 2; ++v) evals.push_back(v);
    std::vector<std::size_t> idx(std::size_t(l), 0);
    for (D1.a = 0; D1.a <= 4; ++D1.a)
        for (D1.b = 0; D1.b <= 2 * bound; ++D1.b) {
            std::fill(idx.begin(), idx.end(), 0);
            while (true) {
                for (int i = 0; i < l; ++i) D1.e[std::size_t(i)] = evals[idx[std::size_t(i)]];
                LatticeClass D2 = m2K;
                D2.a -= D1.a;
                D2.b -= D1.b;
                for (int i = 0; i < l; ++i) D2.e[std::size_t(i)] -= D1.e[std::size_t(i)];
                if (D2.b >= 0 && D1.dot(D2) == 2) {
                    ++res.candidates;
                    long k1 = -K.dot(D1), k2 = -K.dot(D2);
                    if (k1 > 0 && k2 > 0)
                        res.violations.push_back(render(D1) + " + " + render(D2));
                }
                if (D1.dot(D1) == -2) {
                    ++res.parity_checked;
                    LatticeClass rest = m2K;
                    rest.a -= D1.a;
                    rest.b -= D1.b;
                    for (int i = 0; i < l; ++i) rest.e[std::size_t(i)] -= D1.e[std::size_t(i)];
                    if (D1.dot(rest) % 2 != 0)
                        res.parity_violations.push_back(render(D1));
                }
                int p = 0;
                while (p < l && ++idx[std::size_t(p)] == evals.size()) {
                    idx[std::size_t(p)] = 0;
                    ++p;
                }
                if (p == l) break;
            }
        }
    return res;
}

/// Ring of the affine cubic chart: x3^2 + phi(x2, y2, x1) with y1 = 1.
inline RingPtr eckardt_ring() {
    static RingPtr r = make_ring({"x1", "x2", "y2", "x3"}, {1, 2, 2, 3});
    return r;
}

/// Weighted homogenization by y1: pad every term of the affine cubic to
/// weighted degree 6. The chart y1 = 1 of the output is the input.
inline Sextic eckardt_homogenize(const MPoly& cubic) {
    const RingPtr& C = cubic.ring();
    if (C->vars != eckardt_ring()->vars)
        throw AnalyzerError("WrongDegree", "expected a polynomial in (x1, x2, y2, x3)");
    RingPtr R = wps_ring();
    std::size_t i3 = C->index_of("x3");
    MPoly out(R);
    for (auto& [e, c] : cubic.terms()) {
        int x3p = e[std::size_t(i3)];
        if (x3p != 0 && !(x3p == 2 && MPoly::total_degree(e) == 2))
            throw AnalyzerError("WrongDegree", "x3 may only appear as the bare x3^2 term");
        int deg = 0; // ordinary degree of the phi part
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != i3) deg += e[i];
        if (x3p == 0 && deg > 3)
            throw AnalyzerError("WrongDegree", "phi must have total degree at most 3");
        int wdeg = e[0] * 1 + e[1] * 2 + e[2] * 2 + e[3] * 3;
        Expo t(R->nvars(), 0);
        t[R->index_of("x1")] = e[0];
        t[R->index_of("x2")] = e[1];
        t[R->index_of("y2")] = e[2];
        t[R->index_of("x3")] = e[3];
        t[R->index_of("y1")] = 6 - wdeg;
        out.set_coeff(t, c);
    }
    return validate(out);
}

/// Chart y1 = 1 of a sextic, back in the affine cubic ring.
inline MPoly eckardt_chart(const Sextic& X) {
    RingPtr C = eckardt_ring();
    std::map<std::string, MPoly> img;
    img["y1"] = MPoly(C, FElem(1));
    for (const std::string& v : C->vars) img[v] = MPoly::variable(C, v);
    return X.F.substitute(img);
}

/// Run the singularity pipeline on a member of the Eckardt family.
inline SingularityProfile eckardt_profile(const Sextic& X) {
    auto [Xs, sub] = complete_square(X);
    NormalForm nf = normalize(X);
    return build_profile(Xs, nf);
}

} // namespace sextic
