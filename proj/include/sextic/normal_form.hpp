#pragma once

#include <array>
#include <map>
#include <string>

#include "sextic/binary_form.hpp"
#include "sextic/error.hpp"
#include "sextic/wps.hpp"

namespace sextic {

enum class CaseTag { Eq3, Eq2, Eq1 };

inline std::string case_name(CaseTag t) {
    switch (t) {
        case CaseTag::Eq3: return "Eq3";
        case CaseTag::Eq2: return "Eq2";
        case CaseTag::Eq1: return "Eq1";
    }
    return "?";
}

/// An invertible polynomial coordinate change together with a global scalar:
/// normalized = scale * input.substitute(fwd), and fwd/inv are mutually
/// inverse ring substitutions.
struct Substitution {
    std::map<std::string, MPoly> fwd, inv;
    FElem scale = FElem(1);

    static Substitution identity(const RingPtr& R) {
        Substitution s;
        for (const std::string& v : R->vars) {
            s.fwd[v] = MPoly::variable(R, v);
            s.inv[v] = MPoly::variable(R, v);
        }
        return s;
    }

    MPoly apply(const MPoly& p) const { return p.substitute(fwd) * scale; }
    MPoly unapply(const MPoly& p) const { return p.substitute(inv) * scale.inverse(); }

    /// this-then-next, as one record
    Substitution then(const Substitution& next) const {
        Substitution r;
        for (auto& [v, img] : fwd) r.fwd[v] = img.substitute(next.fwd);
        for (auto& [v, img] : next.inv) r.inv[v] = img.substitute(inv);
        r.scale = scale * next.scale;
        return r;
    }
};

/// Normal-form data: one of the three case templates plus the binary forms
/// in (x1, y1) filling its slots. Unused slots stay zero.
struct NormalForm {
    CaseTag tag = CaseTag::Eq3;
    bool forms_available = true; // false only when the Eq3 cubic needs a field tower
    std::string forms_note;
    MPoly phi2, phi2p, phi2pp; // degree 2
    MPoly phi4, phi4p;         // degree 4
    MPoly phi6;                // degree 6
    MPoly normalized;          // the normalized sextic itself
    Substitution change;       // normalized = change.apply(square-completed input scaled)
    FieldPtr field;            // extension used for the root change, if any
};

/// Remove every x3-term except x3^2 itself and scale its coefficient to 1.
inline std::pair<Sextic, Substitution> complete_square(const Sextic& X) {
    const RingPtr& R = X.F.ring();
    Expo e32(R->nvars(), 0);
    e32[R->index_of("x3")] = 2;
    FElem a = X.F.coeff(e32);
    if (a.is_zero())
        throw AnalyzerError("MissingX3Square",
                            "no x3^2 term; the weight-3 coordinate point cannot be terminal");
    Substitution s = Substitution::identity(R);
    s.scale = a.inverse();
    MPoly F1 = X.F * s.scale;
    // linear-in-x3 part: F1 = x3^2 + L*x3 + rest
    MPoly L(R);
    std::size_t i3 = R->index_of("x3");
    for (auto& [e, c] : F1.terms())
        if (e[i3] == 1) {
            Expo q = e;
            q[i3] = 0;
            L.set_coeff(q, c);
        }
    MPoly half_L = L * FElem(Rational(1, 2));
    s.fwd["x3"] = MPoly::variable(R, "x3") - half_L;
    s.inv["x3"] = MPoly::variable(R, "x3") + half_L;
    return {Sextic{s.apply(X.F)}, s};
}

/// The cubic c(x2, y2) = F(0,0,x2,y2,0) after square completion.
inline MPoly restricted_cubic(const Sextic& X) {
    const RingPtr& R = X.F.ring();
    std::map<std::string, MPoly> z;
    z["x1"] = MPoly(R);
    z["y1"] = MPoly(R);
    z["x3"] = MPoly(R);
    return X.F.substitute(z);
}

inline CaseTag classify_case(const Sextic& X_sq) {
    MPoly c = restricted_cubic(X_sq);
    if (c.is_zero())
        throw AnalyzerError("CubicVanishes",
                            "F(0,0,x2,y2,0) = 0: the non-Gorenstein locus is not isolated");
    std::vector<int> pat = squarefree_pattern(c, "x2", "y2");
    if (pat == std::vector<int>{1, 1, 1}) return CaseTag::Eq3;
    if (pat == std::vector<int>{2, 1}) return CaseTag::Eq2;
    if (pat == std::vector<int>{3}) return CaseTag::Eq1;
    throw std::logic_error("classify_case: impossible root pattern");
}

namespace detail {

/// GL2 substitution on (x2, y2) given matrix columns; det must be nonzero.
inline Substitution gl2_x2y2(const RingPtr& R, const FElem& m00, const FElem& m01,
                             const FElem& m10, const FElem& m11) {
    FElem det = m00 * m11 - m01 * m10;
    if (det.is_zero()) throw std::logic_error("gl2_x2y2: singular matrix");
    MPoly x2 = MPoly::variable(R, "x2"), y2 = MPoly::variable(R, "y2");
    Substitution s = Substitution::identity(R);
    s.fwd["x2"] = x2 * m00 + y2 * m01;
    s.fwd["y2"] = x2 * m10 + y2 * m11;
    FElem id = det.inverse();
    s.inv["x2"] = x2 * (m11 * id) - y2 * (m01 * id);
    s.inv["y2"] = y2 * (m00 * id) - x2 * (m10 * id);
    return s;
}

/// Torus rescaling x2,y2 -> k x2, k y2 and x3 -> k^2 x3, with global factor
/// 1/k^4; fixes the cubic slot coefficient k to 1 while keeping x3^2 at 1.
inline Substitution cubic_rescale(const RingPtr& R, const FElem& k) {
    Substitution s = Substitution::identity(R);
    FElem ik = k.inverse();
    s.fwd["x2"] = MPoly::variable(R, "x2") * k;
    s.fwd["y2"] = MPoly::variable(R, "y2") * k;
    s.fwd["x3"] = MPoly::variable(R, "x3") * (k * k);
    s.inv["x2"] = MPoly::variable(R, "x2") * ik;
    s.inv["y2"] = MPoly::variable(R, "y2") * ik;
    s.inv["x3"] = MPoly::variable(R, "x3") * (ik * ik);
    s.scale = (ik * ik) * (ik * ik);
    return s;
}

/// Translation v -> v + q with q a weight-2 form in (x1, y1); v is x2 or y2.
inline Substitution translate2(const RingPtr& R, const std::string& v, const MPoly& q) {
    Substitution s = Substitution::identity(R);
    s.fwd[v] = MPoly::variable(R, v) + q;
    s.inv[v] = MPoly::variable(R, v) - q;
    return s;
}

/// Slot decomposition F = sum x2^i y2^j x3^k * slot[{i,j,k}](x1, y1).
inline std::map<std::array<int, 3>, MPoly> slots(const MPoly& F) {
    const RingPtr& R = F.ring();
    std::size_t i2 = R->index_of("x2"), j2 = R->index_of("y2"), i3 = R->index_of("x3");
    std::map<std::array<int, 3>, MPoly> out;
    for (auto& [e, c] : F.terms()) {
        std::array<int, 3> key = {e[i2], e[j2], e[i3]};
        Expo q = e;
        q[i2] = q[j2] = q[i3] = 0;
        auto it = out.find(key);
        if (it == out.end()) it = out.emplace(key, MPoly(R)).first;
        it->second.set_coeff(q, c);
    }
    return out;
}

inline MPoly slot_of(const std::map<std::array<int, 3>, MPoly>& s, int i, int j, int k,
                     const RingPtr& R) {
    auto it = s.find({i, j, k});
    return it == s.end() ? MPoly(R) : it->second;
}

} // namespace detail

/// Assemble the case template from the stored forms.
inline MPoly template_poly(const NormalForm& nf) {
    const RingPtr& R = nf.normalized.ring();
    MPoly x2 = MPoly::variable(R, "x2"), y2 = MPoly::variable(R, "y2"),
          x3 = MPoly::variable(R, "x3");
    MPoly cubic(R);
    switch (nf.tag) {
        case CaseTag::Eq3: cubic = x2 * y2 * (x2 + y2); break;
        case CaseTag::Eq2: cubic = x2 * x2 * y2; break;
        case CaseTag::Eq1: cubic = x2 * x2 * x2; break;
    }
    return x3 * x3 + cubic + x2 * x2 * nf.phi2 + x2 * y2 * nf.phi2p + y2 * y2 * nf.phi2pp +
           x2 * nf.phi4 + y2 * nf.phi4p + nf.phi6;
}

inline NormalForm normalize(const Sextic& X) {
    auto [Xs, sub] = complete_square(X);
    CaseTag tag = classify_case(Xs);
    const RingPtr& R = Xs.F.ring();
    MPoly c = restricted_cubic(Xs);
    std::size_t i2 = R->index_of("x2"), j2 = R->index_of("y2");

    NormalForm nf;
    nf.tag = tag;
    nf.phi2 = nf.phi2p = nf.phi2pp = nf.phi4 = nf.phi4p = nf.phi6 = MPoly(R);

    BinaryRootsResult rr = binary_form_roots(c, int(i2), int(j2));
    if (!rr.ok) {
        // Eq3 only: three simple roots of an irreducible non-Galois cubic.
        nf.forms_available = false;
        nf.forms_note = rr.failure;
        nf.normalized = Xs.F;
        nf.change = sub;
        return nf;
    }
    nf.field = rr.field;

    // deterministic root order: rational before irrational, then by coordinates
    std::stable_sort(rr.roots.begin(), rr.roots.end(), [](const BinaryRoot& p, const BinaryRoot& q) {
        bool pr = p.a.is_rational() && p.b.is_rational();
        bool qr = q.a.is_rational() && q.b.is_rational();
        if (pr != qr) return pr;
        if (!(p.a == q.a)) return p.a < q.a;
        return p.b < q.b;
    });

    Substitution gl = Substitution::identity(R);
    if (tag == CaseTag::Eq3) {
        // columns (u a1, u b1), (v a2, v b2) with u a1 - v a2 = a3, u b1 - v b2 = b3
        const BinaryRoot &r1 = rr.roots[0], &r2 = rr.roots[1], &r3 = rr.roots[2];
        FElem det = r1.a * (FElem(0) - r2.b) - (FElem(0) - r2.a) * r1.b;
        FElem u = (r3.a * (FElem(0) - r2.b) - (FElem(0) - r2.a) * r3.b) / det;
        FElem v = (r1.a * r3.b - r3.a * r1.b) / det;
        gl = detail::gl2_x2y2(R, u * r1.a, v * r2.a, u * r1.b, v * r2.b);
    } else if (tag == CaseTag::Eq2) {
        const BinaryRoot* simple = nullptr;
        const BinaryRoot* dbl = nullptr;
        for (auto& r : rr.roots) (r.multiplicity == 2 ? dbl : simple) = &r;
        gl = detail::gl2_x2y2(R, simple->a, dbl->a, simple->b, dbl->b);
    } else {
        const BinaryRoot& t = rr.roots[0]; // triple root goes to (0:1)
        FElem c0 = t.b.is_zero() ? FElem(0) : FElem(1);
        FElem c1 = t.b.is_zero() ? FElem(1) : FElem(0);
        gl = detail::gl2_x2y2(R, c0, t.a, c1, t.b);
    }
    MPoly F = gl.apply(Xs.F);
    Substitution comp = sub.then(gl);

    // cubic slot coefficient k -> 1
    auto sl = detail::slots(F);
    std::array<int, 3> lead = tag == CaseTag::Eq3 ? std::array<int, 3>{2, 1, 0}
                              : tag == CaseTag::Eq2 ? std::array<int, 3>{2, 1, 0}
                                                    : std::array<int, 3>{3, 0, 0};
    MPoly kp = detail::slot_of(sl, lead[0], lead[1], lead[2], R);
    if (kp.terms().size() != 1) throw std::logic_error("normalize: cubic slot is not scalar");
    FElem k = kp.terms().begin()->second;
    Substitution resc = detail::cubic_rescale(R, k);
    F = resc.apply(F);
    comp = comp.then(resc);

    // translations killing off-template quadratic slots
    if (tag == CaseTag::Eq2) {
        sl = detail::slots(F);
        Substitution t1 = detail::translate2(R, "y2", MPoly(R) - detail::slot_of(sl, 2, 0, 0, R));
        F = t1.apply(F);
        comp = comp.then(t1);
        sl = detail::slots(F);
        Substitution t2 = detail::translate2(
            R, "x2", MPoly(R) - detail::slot_of(sl, 1, 1, 0, R) * FElem(Rational(1, 2)));
        F = t2.apply(F);
        comp = comp.then(t2);
    } else if (tag == CaseTag::Eq1) {
        sl = detail::slots(F);
        Substitution t1 = detail::translate2(
            R, "x2", MPoly(R) - detail::slot_of(sl, 2, 0, 0, R) * FElem(Rational(1, 3)));
        F = t1.apply(F);
        comp = comp.then(t1);
    }

    // extract forms and check template compliance
    sl = detail::slots(F);
    auto take = [&](int i, int j) { return detail::slot_of(sl, i, j, 0, R); };
    nf.phi6 = take(0, 0);
    nf.phi4 = take(1, 0);
    nf.phi4p = take(0, 1);
    nf.phi2pp = take(0, 2);
    if (tag == CaseTag::Eq3) {
        nf.phi2 = take(2, 0);
        nf.phi2p = take(1, 1);
    } else if (tag == CaseTag::Eq1) {
        nf.phi2p = take(1, 1);
    }
    nf.normalized = F;
    nf.change = comp;
    if (!(template_poly(nf) == F))
        throw std::logic_error("normalize: residual off-template terms");
    return nf;
}

} // namespace sextic
