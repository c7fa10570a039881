#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sextic/error.hpp"
#include "sextic/solve.hpp"
#include "sextic/upoly.hpp"

namespace sextic {

/// A degree-6 hypersurface in P(1,1,2,2,3), coordinates x1,y1,x2,y2,x3.
struct Sextic {
    MPoly F; // weighted homogeneous of degree 6, nonzero
};

inline Sextic validate(const MPoly& F) {
    if (F.is_zero()) throw AnalyzerError("WrongDegree", "the zero polynomial defines no hypersurface");
    const RingPtr& R = F.ring();
    if (R->vars != wps_ring()->vars || R->weights != wps_ring()->weights)
        throw AnalyzerError("WrongDegree", "polynomial does not live in the (1,1,2,2,3) coordinate ring");
    std::string offenders;
    bool has_deg6 = false;
    std::set<int> degs;
    for (auto& [e, c] : F.terms()) {
        int d = 0;
        for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * R->weights[i];
        degs.insert(d);
        if (d == 6) {
            has_deg6 = true;
        } else {
            if (!offenders.empty()) offenders += ", ";
            MPoly t(R);
            t.set_coeff(e, c);
            offenders += t.str() + " (degree " + std::to_string(d) + ")";
        }
    }
    if (offenders.empty()) return Sextic{F};
    if (has_deg6 || degs.size() == 1)
        throw AnalyzerError("WrongDegree", "terms of weighted degree other than 6: " + offenders);
    throw AnalyzerError("NotHomogeneous", "mixed weighted degrees, none equal to 6: " + offenders);
}

/// A point of P(1,1,2,2,3) with a canonical scaled representative.
struct WPSPoint {
    std::vector<FElem> coords; // size 5
    FieldPtr field;            // null = rational point
    bool canonical = true;     // false if the weight-3 slot resisted scaling

    friend bool operator==(const WPSPoint& a, const WPSPoint& b) {
        if (a.coords.size() != b.coords.size()) return false;
        for (std::size_t i = 0; i < a.coords.size(); ++i)
            if (!(a.coords[i] == b.coords[i])) return false;
        return true;
    }
};

/// Scale the first nonzero coordinate of lowest weight to 1. The residual
/// sign freedom when that weight is 2 is fixed by taking the smaller of the
/// two candidate tuples under the deterministic coordinate order.
inline WPSPoint normalize_point(std::vector<FElem> c, FieldPtr field) {
    if (c.size() != 5) throw std::invalid_argument("WPSPoint needs 5 coordinates");
    const std::vector<int> w = {1, 1, 2, 2, 3};
    int minw = 0;
    std::size_t pivot = 5;
    for (int target : {1, 2, 3}) {
        for (std::size_t i = 0; i < 5 && pivot == 5; ++i)
            if (w[i] == target && !c[i].is_zero()) {
                pivot = i;
                minw = target;
            }
        if (pivot != 5) break;
    }
    if (pivot == 5) throw AnalyzerError("WrongDegree", "all coordinates zero is not a point");
    WPSPoint p;
    p.field = field;
    if (minw == 1) {
        FElem l = c[pivot].inverse(); // lambda
        FElem l2 = l * l;
        p.coords = {c[0] * l, c[1] * l, c[2] * l2, c[3] * l2, c[4] * l2 * l};
    } else if (minw == 3) {
        p.coords = {FElem(0), FElem(0), FElem(0), FElem(0), FElem(1)};
    } else {
        FElem l2 = c[pivot].inverse(); // lambda^2 is determined; lambda up to sign
        std::vector<FElem> a = {FElem(0), FElem(0), c[2] * l2, c[3] * l2, FElem(0)};
        if (c[4].is_zero()) {
            p.coords = a;
        } else if (auto l = sqrt_in_field(l2)) {
            std::vector<FElem> b = a;
            a[4] = c[4] * l2 * (*l);
            b[4] = FElem(0) - a[4];
            p.coords = (a[4] < b[4] || a[4] == b[4]) ? a : b;
        } else {
            a[4] = c[4]; // sqrt of the scale is outside the field; leave raw
            p.coords = a;
            p.canonical = false;
        }
    }
    bool rational = true;
    for (auto& x : p.coords)
        if (!x.is_rational()) rational = false;
    if (rational) p.field = nullptr;
    return p;
}

inline std::vector<MPoly> jacobian(const MPoly& F) {
    std::vector<MPoly> J;
    for (const std::string& v : F.ring()->vars) J.push_back(F.derivative(v));
    return J;
}

inline std::vector<MPoly> chart_restrict(const std::vector<MPoly>& sys, std::size_t var) {
    const RingPtr& R = sys.front().ring();
    std::map<std::string, MPoly> sub;
    sub[R->vars[var]] = MPoly(R, FElem(1));
    std::vector<MPoly> out;
    for (const MPoly& g : sys) {
        MPoly h = g.substitute(sub);
        if (!h.is_zero()) out.push_back(h);
    }
    return out;
}

struct QuasiSmoothResult {
    bool smooth = false;
    std::optional<WPSPoint> singular_point; // a witness on the cone, when resolvable
    std::string posdim_component;           // nonempty when a chart system is positive-dimensional
};

/// Quasi-smoothness: the affine cone is smooth away from the origin.
/// The singular locus of the cone is itself a cone, so X is quasi-smooth
/// iff the Jacobian ideal is zero-dimensional; the per-chart searches only
/// run to locate a witness when that criterion fails, in the fixed chart
/// order x1, y1, x2, y2, x3.
inline QuasiSmoothResult is_quasi_smooth(const Sextic& X, bool find_witness = true) {
    const RingPtr& R = X.F.ring();
    // Split off the last coordinate: F = c x3^2 + L x3 + M with L, M free
    // of x3.
    MPoly L(R), M(R);
    FElem c(0);
    for (auto& [e, coef] : X.F.terms()) {
        Expo e0 = e;
        e0[4] = 0;
        if (e[4] == 2) c = coef;
        else if (e[4] == 1) L.set_coeff(e0, coef);
        else M.set_coeff(e0, coef);
    }

    std::vector<MPoly> J;
    std::size_t nchart = 5;
    MPoly phi(R);
    if (!c.is_zero()) {
        // x3 -> x3 - L/(2c) completes the square without changing
        // quasi-smoothness; the Jacobian of c x3^2 + phi is {2c x3, dphi},
        // so every singular cone point has x3 = 0 and the whole search
        // lives in the four remaining variables.
        phi = M - L * L * (FElem(1) / (FElem(4) * c));
        J.push_back(MPoly::variable(R, "x3"));
        for (std::size_t v = 0; v < 4; ++v) J.push_back(phi.derivative(R->vars[v]));
        nchart = 4; // a witness never sits on the x3 chart
    } else {
        J = jacobian(X.F);
    }

    if (is_zero_dimensional(buchberger(J)))
        { QuasiSmoothResult r; r.smooth = true; return r; }
    if (!find_witness) {
        QuasiSmoothResult r;
        r.posdim_component = "witness search skipped";
        return r;
    }
    for (std::size_t v = 0; v < nchart; ++v) {
        std::vector<MPoly> sys = chart_restrict(J, v);
        if (sys.empty()) {
            QuasiSmoothResult r;
            r.posdim_component = "all partial derivatives vanish on chart " + R->vars[v] + "=1";
            return r;
        }
        // pin the chart variable so the solver sees all five coordinates
        sys.push_back(MPoly::variable(R, R->vars[v]) - MPoly(R, FElem(1)));
        std::vector<MPoly> GB = buchberger(sys);
        if (is_unit_ideal(GB)) continue;
        QuasiSmoothResult r;
        SolveResult sol = zero_dim_solve(sys);
        if (!sol.zero_dimensional) {
            r.posdim_component = "positive-dimensional singular set on chart " + R->vars[v] +
                                 "=1 (no pure power of " + sol.posdim_witness + ")";
            return r;
        }
        if (!sol.points.empty()) {
            std::vector<FElem> coords = sol.points.front().coords;
            coords[v] = FElem(1);
            if (!c.is_zero()) {
                // undo the square completion on the witness
                coords[4] = L.eval(coords) / (FElem(-2) * c);
            }
            r.singular_point = normalize_point(coords, sol.points.front().field);
        } else {
            r.posdim_component = "singular cone points exist outside supported coordinate fields on chart " +
                                 R->vars[v] + "=1";
        }
        return r;
    }
    // criterion failed but every chart came back unit: the witness lies
    // outside the coordinate fields we can represent
    QuasiSmoothResult r;
    r.posdim_component = "singular cone points exist outside supported coordinate fields";
    return r;
}

} // namespace sextic
