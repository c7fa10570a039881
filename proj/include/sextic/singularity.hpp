#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sextic/normal_form.hpp"

namespace sextic {

enum class SingClass { HalfQuotient, CA2, CAx2, CD2, CE2, An, WorseGorenstein };

inline std::string sing_class_name(SingClass c) {
    switch (c) {
        case SingClass::HalfQuotient: return "1/2(1,1,1)";
        case SingClass::CA2: return "cA/2";
        case SingClass::CAx2: return "cAx/2";
        case SingClass::CD2: return "cD/2";
        case SingClass::CE2: return "cE/2";
        case SingClass::An: return "A_n";
        case SingClass::WorseGorenstein: return "worse-than-A_n";
    }
    return "?";
}

struct SingularityRecord {
    std::optional<WPSPoint> point; // absent when coordinates need an unsupported field
    SingClass cls = SingClass::HalfQuotient;
    bool gorenstein = false;
    bool moderate = true; // meaningful for CA2; HalfQuotient counts as moderate
    int aw = 0;           // axial weight, CA2 only (2 or 3 here)
    int n = 0;            // An index
    int orbit_size = 1;
    std::string note;

    std::string tag() const {
        switch (cls) {
            case SingClass::CA2:
                return std::string("cA/2{") + (moderate ? "moderate" : "non-moderate") +
                       ",aw=" + std::to_string(aw) + "}";
            case SingClass::An: return "A" + std::to_string(n);
            case SingClass::WorseGorenstein:
                return "worse-than-A_n" + (note.empty() ? "" : ("{" + note + "}"));
            default: return sing_class_name(cls);
        }
    }
};

/// Table of non-Gorenstein singularities, read off the normalized forms.
inline std::vector<SingularityRecord> non_gorenstein_profile(const NormalForm& nf) {
    const RingPtr& R = nf.normalized.ring();
    auto mk = [&](std::vector<Rational> c, SingClass cls) {
        SingularityRecord r;
        std::vector<FElem> fc;
        for (auto& q : c) fc.push_back(FElem(q));
        r.point = normalize_point(fc, nullptr);
        r.cls = cls;
        r.gorenstein = false;
        return r;
    };
    std::vector<SingularityRecord> out;
    if (nf.tag == CaseTag::Eq3) {
        if (nf.forms_available) {
            out.push_back(mk({0, 0, 1, 0, 0}, SingClass::HalfQuotient));
            out.push_back(mk({0, 0, 0, 1, 0}, SingClass::HalfQuotient));
            out.push_back(mk({0, 0, 1, -1, 0}, SingClass::HalfQuotient));
        } else {
            for (int i = 0; i < 3; ++i) {
                SingularityRecord r;
                r.cls = SingClass::HalfQuotient;
                r.gorenstein = false;
                r.note = "root coordinates not split: " + nf.forms_note;
                out.push_back(r);
            }
        }
        return out;
    }
    if (!nf.forms_available)
        throw std::logic_error("non_gorenstein_profile: forms must be available outside Eq3");
    int rk = binary_quadratic_rank(nf.phi2pp, "x1", "y1");
    if (nf.tag == CaseTag::Eq2) {
        out.push_back(mk({0, 0, 1, 0, 0}, SingClass::HalfQuotient));
        SingularityRecord r = mk({0, 0, 0, 1, 0}, rk == 0 ? SingClass::CAx2 : SingClass::CA2);
        if (rk != 0) {
            r.moderate = (rk == 2);
            r.aw = 2;
        } else {
            r.moderate = false;
        }
        out.push_back(r);
        return out;
    }
    // Eq1: the whole cubic degenerates onto one non-Gorenstein point
    SingClass cls;
    bool moderate = false;
    if (rk >= 1) {
        cls = SingClass::CA2;
        moderate = (rk == 2);
    } else if (!nf.phi2p.is_zero()) {
        cls = SingClass::CD2;
    } else if (!nf.phi4p.is_zero()) {
        cls = SingClass::CE2;
    } else {
        throw AnalyzerError("NotTerminalAtHalfPoint",
                            "phi2''=phi2'=phi4'=0: the half point falls outside the "
                            "terminal classification table");
    }
    SingularityRecord r = mk({0, 0, 0, 1, 0}, cls);
    r.moderate = moderate;
    if (cls == SingClass::CA2) r.aw = 3;
    out.push_back(r);
    return out;
}

/// A located Gorenstein singular point: chart coordinates plus bookkeeping.
struct GorensteinPoint {
    WPSPoint point;
    std::size_t chart; // 0 = x1, 1 = y1
    std::vector<FElem> chart_coords; // values of the other four coordinates
    FieldPtr field;
    int orbit_size = 1;
    int multiplicity = 1;
};

struct GorensteinLocus {
    std::vector<GorensteinPoint> points;
    long unresolved_count = 0; // singular points beyond supported field degree
};

/// All singular points with a nonzero weight-1 coordinate. Chart x1=1 and
/// the slice {x1=0, y1=1} are disjoint and cover the Gorenstein locus.
inline GorensteinLocus gorenstein_singular_points(const Sextic& X_sq) {
    const RingPtr& R = X_sq.F.ring();
    GorensteinLocus out;
    std::vector<MPoly> J = jacobian(X_sq.F);
    for (std::size_t chart = 0; chart < 2; ++chart) {
        std::vector<MPoly> sys;
        std::map<std::string, MPoly> pin;
        pin[R->vars[chart]] = MPoly(R, FElem(1));
        if (chart == 1) pin["x1"] = MPoly(R);
        MPoly Fc = X_sq.F.substitute(pin);
        sys.push_back(Fc);
        for (auto& g : J) {
            MPoly h = g.substitute(pin);
            if (!h.is_zero()) sys.push_back(h);
        }
        sys.push_back(MPoly::variable(R, R->vars[chart]) - MPoly(R, FElem(1)));
        if (chart == 1) sys.push_back(MPoly::variable(R, "x1"));
        SolveResult sol = zero_dim_solve(sys);
        if (!sol.zero_dimensional)
            throw AnalyzerError("NonIsolatedSingularLocus",
                                "the singular locus is positive-dimensional (chart " +
                                    R->vars[chart] + "=1, free variable " + sol.posdim_witness + ")");
        for (const SolutionOrbit& s : sol.points) {
            GorensteinPoint p;
            p.chart = chart;
            p.field = s.field;
            p.orbit_size = s.orbit_size;
            p.multiplicity = s.multiplicity;
            std::vector<FElem> hom = s.coords;
            hom[chart] = FElem(1);
            if (chart == 1) hom[0] = FElem(0);
            for (std::size_t i = 0; i < 5; ++i)
                if (i != chart) p.chart_coords.push_back(hom[i]);
            p.point = normalize_point(hom, s.field);
            out.points.push_back(p);
        }
        out.unresolved_count += sol.unresolved_count;
    }
    return out;
}

namespace detail {

/// Congruence diagonalization C^T H C = D over the working field; returns C
/// and the diagonal. H must be symmetric.
inline void sym_diagonalize(std::vector<std::vector<FElem>> H,
                            std::vector<std::vector<FElem>>& C, std::vector<FElem>& diag) {
    std::size_t n = H.size();
    C.assign(n, std::vector<FElem>(n, FElem(0)));
    for (std::size_t i = 0; i < n; ++i) C[i][i] = FElem(1);
    auto col_op = [&](std::size_t dst, std::size_t src, const FElem& f) {
        // column dst += f * column src, applied congruently
        for (std::size_t r = 0; r < n; ++r) H[r][dst] = H[r][dst] + f * H[r][src];
        for (std::size_t cc = 0; cc < n; ++cc) H[dst][cc] = H[dst][cc] + f * H[src][cc];
        for (std::size_t r = 0; r < n; ++r) C[r][dst] = C[r][dst] + f * C[r][src];
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        for (std::size_t r = 0; r < n; ++r) std::swap(H[r][a], H[r][b]);
        for (std::size_t cc = 0; cc < n; ++cc) std::swap(H[a][cc], H[b][cc]);
        for (std::size_t r = 0; r < n; ++r) std::swap(C[r][a], C[r][b]);
    };
    for (std::size_t i = 0; i < n; ++i) {
        if (H[i][i].is_zero()) {
            std::size_t j = i + 1;
            for (; j < n; ++j)
                if (!H[j][j].is_zero()) break;
            if (j < n) {
                col_swap(i, j);
            } else {
                for (j = i + 1; j < n; ++j)
                    if (!H[i][j].is_zero()) break;
                if (j < n) col_op(i, j, FElem(1)); // makes H[i][i] = 2 H[i][j] != 0
            }
        }
        if (H[i][i].is_zero()) continue; // row/column i is entirely zero
        for (std::size_t j = i + 1; j < n; ++j)
            if (!H[i][j].is_zero()) col_op(j, i, FElem(0) - H[i][j] / H[i][i]);
    }
    diag.resize(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = H[i][i];
}

inline MPoly truncate_in_var(const MPoly& p, std::size_t var, int order) {
    MPoly r(p.ring());
    for (auto& [e, c] : p.terms())
        if (e[var] <= order) r.set_coeff(e, c);
    return r;
}

} // namespace detail

struct AnResult {
    bool is_An = false;
    int n = 0;
    std::string worse_reason; // set when not an A_n within the jet order
};

/// Classify the local 4-variable equation f (vars u, v, w, s; f(0) = 0,
/// df(0) = 0) as A_n or worse, by Hessian rank plus removal of the three
/// nondegenerate directions via Newton iteration on jets.
inline AnResult classify_local_An(const MPoly& f, int jet_order = 8) {
    const RingPtr& R = f.ring();
    std::size_t n4 = R->nvars();
    if (n4 != 4) throw std::invalid_argument("classify_local_An: expects a 4-variable local ring");
    // hessian at the origin from degree-2 terms
    std::vector<std::vector<FElem>> H(4, std::vector<FElem>(4, FElem(0)));
    for (auto& [e, c] : f.terms()) {
        if (MPoly::total_degree(e) != 2) continue;
        int a = -1, b = -1;
        for (std::size_t i = 0; i < 4; ++i) {
            if (e[i] == 2) a = b = int(i);
            if (e[i] == 1) (a < 0 ? a : b) = int(i);
        }
        if (a == b) {
            H[a][a] = H[a][a] + FElem(2) * c;
        } else {
            H[a][b] = H[a][b] + c;
            H[b][a] = H[b][a] + c;
        }
    }
    std::vector<std::vector<FElem>> C;
    std::vector<FElem> diag;
    detail::sym_diagonalize(H, C, diag);
    int rank = 0;
    for (auto& d : diag)
        if (!d.is_zero()) ++rank;
    AnResult res;
    if (rank == 4) {
        res.is_An = true;
        res.n = 1;
        return res;
    }
    if (rank <= 2) {
        res.worse_reason = "corank " + std::to_string(4 - rank) + " quadratic part";
        return res;
    }
    // move the kernel direction last: columns of C with nonzero diag first
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < 4; ++i)
        if (!diag[i].is_zero()) order.push_back(i);
    for (std::size_t i = 0; i < 4; ++i)
        if (diag[i].is_zero()) order.push_back(i);
    std::map<std::string, MPoly> lin;
    for (std::size_t i = 0; i < 4; ++i) {
        MPoly img(R);
        for (std::size_t j = 0; j < 4; ++j)
            img += MPoly::variable(R, R->vars[j]) * C[i][order[j]];
        lin[R->vars[i]] = img;
    }
    MPoly g = f.substitute(lin); // quadratic part d0 u^2 + d1 v^2 + d2 w^2
    std::vector<FElem> d = {diag[order[0]], diag[order[1]], diag[order[2]]};
    for (auto& x : d) x = x * FElem(Rational(1, 2)); // coefficient of the square

    auto run = [&](int N) -> std::optional<int> {
        std::size_t sv = 3; // kernel variable index
        // Newton: solve grad_{uvw} g = 0 for u,v,w as series in s
        std::map<std::string, MPoly> phi;
        for (int i = 0; i < 3; ++i) phi[R->vars[i]] = MPoly(R);
        phi[R->vars[3]] = MPoly::variable(R, R->vars[3]);
        // the frozen-Hessian iteration gains one s-order per sweep
        for (int it = 0; it <= N + 2; ++it) {
            for (int i = 0; i < 3; ++i) {
                MPoly gi = g.derivative(R->vars[i]).substitute(phi);
                // dominant diagonal term: d/du (d0 u^2) = 2 d0 u
                phi[R->vars[i]] = detail::truncate_in_var(
                    phi[R->vars[i]] - gi * (FElem(2) * d[i]).inverse(), sv, N + 1);
            }
        }
        MPoly residual = g.substitute(phi);
        residual = detail::truncate_in_var(residual, sv, N);
        if (residual.is_zero()) return std::nullopt;
        return residual.order(); // all terms are pure powers of s
    };
    std::optional<int> ord = run(jet_order);
    if (!ord) ord = run(2 * jet_order);
    if (!ord) {
        res.worse_reason = "undetermined-beyond-A" + std::to_string(2 * jet_order - 1);
        return res;
    }
    if (*ord < 2) throw std::logic_error("classify_local_An: residual order below 2");
    res.is_An = true;
    res.n = *ord - 1;
    return res;
}

/// Classify a Gorenstein singular point of X (square-completed) as A_n or
/// worse, working in the chart of its nonzero weight-1 coordinate.
inline SingularityRecord classify_An(const Sextic& X_sq, const GorensteinPoint& P,
                                     int jet_order = 8) {
    const RingPtr& R = X_sq.F.ring();
    static RingPtr L = make_ring({"u", "v", "w", "s"}, {1, 1, 1, 1});
    std::map<std::string, MPoly> img;
    img[R->vars[P.chart]] = MPoly(L, FElem(1));
    std::size_t k = 0;
    for (std::size_t i = 0; i < 5; ++i) {
        if (i == P.chart) continue;
        img[R->vars[i]] = MPoly::variable(L, L->vars[k]) + MPoly(L, P.chart_coords[k]);
        ++k;
    }
    MPoly f = X_sq.F.substitute(img);
    AnResult a = classify_local_An(f, jet_order);
    SingularityRecord r;
    r.point = P.point;
    r.gorenstein = true;
    r.orbit_size = P.orbit_size;
    if (a.is_An) {
        r.cls = SingClass::An;
        r.n = a.n;
    } else {
        r.cls = SingClass::WorseGorenstein;
        r.note = a.worse_reason;
    }
    return r;
}

struct SingularityProfile {
    std::vector<SingularityRecord> nonGorenstein;
    std::vector<SingularityRecord> gorenstein;
    long gorensteinCount = 0;    // counted with Galois orbit sizes
    long unresolvedGorenstein = 0;
    bool allModerate = true;     // every non-Gorenstein record moderate (table sense)
    bool allNodesOrCusps = true; // every Gorenstein record A1 or A2
};

inline SingularityProfile build_profile(const Sextic& X_sq, const NormalForm& nf,
                                        int jet_order = 8) {
    SingularityProfile p;
    p.nonGorenstein = non_gorenstein_profile(nf);
    for (auto& r : p.nonGorenstein)
        if (!(r.cls == SingClass::HalfQuotient || (r.cls == SingClass::CA2 && r.moderate)))
            p.allModerate = false;
    GorensteinLocus loc = gorenstein_singular_points(X_sq);
    p.unresolvedGorenstein = loc.unresolved_count;
    for (const GorensteinPoint& gp : loc.points) {
        SingularityRecord r = classify_An(X_sq, gp, jet_order);
        p.gorensteinCount += r.orbit_size;
        if (!(r.cls == SingClass::An && r.n <= 2)) p.allNodesOrCusps = false;
        p.gorenstein.push_back(r);
    }
    if (p.unresolvedGorenstein > 0) p.allNodesOrCusps = false;
    return p;
}

/// Result of blowing up one singular point, per the small-resolution tables.
struct BlowupResult {
    std::vector<std::string> tags; // resulting singularity tags, "smooth" allowed
    Rational E3;                   // exceptional self-intersection, when defined
    std::string exceptional;       // description of E
};

inline Rational exceptional_cubed(long r, long a) {
    if (!(0 < a && a < r) || boost::multiprecision::gcd(Int(r), Int(a)) != 1)
        throw std::invalid_argument("exceptional_cubed: need 0 < a < r with gcd(r, a) = 1");
    return Rational(r * r, a * (r - a));
}

inline BlowupResult blowup_transform(const SingularityRecord& s) {
    BlowupResult out;
    if (s.cls == SingClass::CA2 && s.moderate) {
        if (s.aw < 2) throw std::invalid_argument("blowup_transform: aw must exceed 1");
        out.tags = {"smooth", "smooth"};
        out.tags.push_back(s.aw == 2 ? "1/2(1,1,1)" : ("cA/2{moderate,aw=" + std::to_string(s.aw - 1) + "}"));
        out.E3 = exceptional_cubed(2, 1);
        out.exceptional = "weighted quadric cone section";
        return out;
    }
    if (s.cls == SingClass::An) {
        if (s.n >= 3)
            out.tags = {"A" + std::to_string(s.n - 2)};
        else
            out.tags = {"smooth"};
        out.exceptional = s.n == 1 ? "P1 x P1" : "P(1,1,2)";
        return out;
    }
    throw std::invalid_argument("blowup_transform: only moderate cA/2 and A_n records");
}

} // namespace sextic
