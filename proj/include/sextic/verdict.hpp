#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sextic/singularity.hpp"

namespace sextic {

/// An explicit solve-for-one-variable parametrization of the chart equation.
struct RationalityWitness {
    std::string chart = "x1";        // chart used (always x1 = 1 here)
    std::string solved_variable;     // "u" (after x3 -> u,v) or "y2"
    MPoly numerator, denominator;    // solved_variable = numerator / denominator
    MPoly chart_equation;            // chart equation in the witness coordinates
    std::string inverse_data;        // human-readable coordinate change record
    FieldPtr field;                  // quadratic extension when -e is not a square
};

enum class VerdictTag { Rational, NonRational, Undetermined };

inline std::string verdict_name(VerdictTag t) {
    switch (t) {
        case VerdictTag::Rational: return "Rational";
        case VerdictTag::NonRational: return "NonRational";
        case VerdictTag::Undetermined: return "Undetermined";
    }
    return "?";
}

struct UserFlags {
    bool terminal = false;
    bool q_factorial = false;
};

struct Verdict {
    VerdictTag tag = VerdictTag::Undetermined;
    std::vector<std::string> unmet; // reasons, for the Undetermined branch
    std::string rationale;
    std::optional<RationalityWitness> witness;
};

/// Apply the main rationality criterion to a singularity profile.
inline Verdict decide(const SingularityProfile& p, const UserFlags& flags) {
    Verdict v;
    for (const SingularityRecord& r : p.nonGorenstein) {
        bool worse = r.cls == SingClass::CAx2 || r.cls == SingClass::CD2 ||
                     r.cls == SingClass::CE2 || (r.cls == SingClass::CA2 && !r.moderate);
        if (worse) {
            v.tag = VerdictTag::Rational;
            v.rationale = "non-Gorenstein point of class " + r.tag() +
                          " is worse than moderate, so the equation linearizes";
            return v;
        }
    }
    std::vector<std::string> unmet;
    if (!p.allModerate)
        throw std::logic_error("decide: profile marked non-moderate without a worse record");
    for (const SingularityRecord& r : p.gorenstein) {
        if (r.cls == SingClass::An && r.n > 2)
            unmet.push_back("A" + std::to_string(r.n) + " point (only nodes and cusps allowed)");
        else if (r.cls == SingClass::WorseGorenstein)
            unmet.push_back("Gorenstein point beyond the A_n chain (" + r.note + ")");
    }
    if (p.gorensteinCount > 4)
        unmet.push_back(std::to_string(p.gorensteinCount) + " Gorenstein points (at most 4 allowed)");
    if (p.unresolvedGorenstein > 0)
        unmet.push_back(std::to_string(p.unresolvedGorenstein) +
                        " singular points over fields of degree > 3 left unclassified");
    if (!flags.terminal) unmet.push_back("terminality not asserted (--assert-terminal)");
    if (!flags.q_factorial) unmet.push_back("Q-factoriality not asserted (--assert-q-factorial)");
    if (unmet.empty()) {
        v.tag = VerdictTag::NonRational;
        v.rationale = "all non-Gorenstein points moderate, every Gorenstein singularity a node "
                      "or cusp, at most 4 of them, terminal and Q-factorial as asserted";
        return v;
    }
    v.tag = VerdictTag::Undetermined;
    v.unmet = unmet;
    v.rationale = "the criterion's hypotheses are not all met";
    return v;
}

namespace detail {

/// Ring for chart x1 = 1 with x3, y2 traded for u = x3 - d y2, v = x3 + d y2.
inline RingPtr witness_ring() {
    static RingPtr r = make_ring({"y1", "x2", "u", "v"}, {1, 2, 3, 3});
    return r;
}

inline RingPtr chart_ring() {
    static RingPtr r = make_ring({"y1", "x2", "y2", "x3"}, {1, 2, 2, 3});
    return r;
}

/// Coefficients (c1, c0) of a polynomial linear in the named variable.
inline std::pair<MPoly, MPoly> linear_split(const MPoly& p, const std::string& var) {
    const RingPtr& R = p.ring();
    std::size_t vi = R->index_of(var);
    MPoly c1(R), c0(R);
    for (auto& [e, c] : p.terms()) {
        if (e[vi] == 0) {
            c0.set_coeff(e, c);
        } else if (e[vi] == 1) {
            Expo q = e;
            q[vi] = 0;
            c1.set_coeff(q, c);
        } else {
            throw AnalyzerError("NotLinearizable", "equation is not linear in " + var);
        }
    }
    return {c1, c0};
}

} // namespace detail

/// Construct the linearization witness for a normal form whose phi2'' has
/// rank at most 1 (the non-moderate and degenerate table rows).
inline RationalityWitness build_witness(const NormalForm& nf) {
    if (!nf.forms_available)
        throw AnalyzerError("NotLinearizable", "normal form has no extracted forms");
    if (nf.tag == CaseTag::Eq3)
        throw AnalyzerError("NotLinearizable", "Eq3 members have no worse-than-moderate point");
    const RingPtr& R = nf.normalized.ring();
    int rk = binary_quadratic_rank(nf.phi2pp, "x1", "y1");
    if (rk == 2)
        throw AnalyzerError("NotLinearizable", "phi2'' has rank 2: the point is moderate");

    MPoly F = nf.normalized;
    RationalityWitness w;

    if (rk == 1) {
        // phi2'' = e L^2; send L to x1 so phi2'' becomes e x1^2
        UPoly q = dehomogenize_binary(nf.phi2pp, int(R->index_of("x1")), int(R->index_of("y1")));
        FElem a = q.degree() >= 2 ? q.c[2] : FElem(0);
        FElem b = q.degree() >= 1 ? q.c[1] : FElem(0);
        FElem e = a.is_zero() ? q.c[0] : a;
        std::map<std::string, MPoly> lin;
        MPoly X1 = MPoly::variable(R, "x1"), Y1 = MPoly::variable(R, "y1");
        if (!a.is_zero()) {
            lin["x1"] = X1 - Y1 * (b * a.inverse() * FElem(Rational(1, 2)));
            lin["y1"] = Y1;
            w.inverse_data = "x1 -> x1 - (b/2a) y1 with phi2'' = a x1^2 + b x1 y1 + ...";
        } else {
            lin["x1"] = Y1;
            lin["y1"] = X1;
            w.inverse_data = "swap x1, y1 so phi2'' = e x1^2";
        }
        F = F.substitute(lin);
        // x3^2 + e y2^2 x1^2 = (x3 - d y2 x1)(x3 + d y2 x1) needs d^2 = -e; on
        // the chart x1 = 1 the factorization reads (x3 - d y2)(x3 + d y2)
        FElem me = FElem(0) - e;
        FElem d(0);
        if (auto s = sqrt_in_field(me)) {
            d = *s;
        } else {
            Rational mer = me.rational_value();
            UPoly m({FElem(-mer), FElem(0), FElem(1)});
            AdjoinResult ar = adjoin_root(m);
            w.field = ar.field;
            d = ar.root;
        }
        // chart x1 = 1, then (x3, y2) -> ((u+v)/2, (v-u)/(2d))
        RingPtr W = detail::witness_ring();
        std::map<std::string, MPoly> img;
        MPoly U = MPoly::variable(W, "u"), V = MPoly::variable(W, "v");
        img["x1"] = MPoly(W, FElem(1));
        img["y1"] = MPoly::variable(W, "y1");
        img["x2"] = MPoly::variable(W, "x2");
        img["x3"] = (U + V) * FElem(Rational(1, 2));
        img["y2"] = (V - U) * (FElem(2) * d).inverse();
        MPoly eq = F.substitute(img);
        auto [c1, c0] = detail::linear_split(eq, "u");
        if (c1.is_zero()) throw AnalyzerError("NotLinearizable", "u-coefficient vanished");
        w.solved_variable = "u";
        w.numerator = MPoly(W) - c0;
        w.denominator = c1;
        w.chart_equation = eq;
        w.inverse_data += "; u = x3 - d y2, v = x3 + d y2, d^2 = " + me.str();
        return w;
    }

    // rank 0: the chart equation is already linear in y2
    RingPtr C = detail::chart_ring();
    std::map<std::string, MPoly> img;
    img["x1"] = MPoly(C, FElem(1));
    for (const std::string& v : C->vars) img[v] = MPoly::variable(C, v);
    MPoly eq = F.substitute(img);
    auto [c1, c0] = detail::linear_split(eq, "y2");
    if (c1.is_zero())
        throw AnalyzerError("NotLinearizable", "no y2-linear term on the chart x1=1");
    w.solved_variable = "y2";
    w.numerator = MPoly(C) - c0;
    w.denominator = c1;
    w.chart_equation = eq;
    w.inverse_data = "chart x1 = 1; y2 solved directly";
    return w;
}

/// Exact back-substitution check: clearing the denominator from
/// chart_equation |_{solved_variable = numerator/denominator} must give 0,
/// and the solve must be linear (hence birational) with nonzero denominator.
inline bool verify_witness(const RationalityWitness& w) {
    if (w.denominator.is_zero()) return false;
    try {
        auto [c1, c0] = detail::linear_split(w.chart_equation, w.solved_variable);
        return (c1 * w.numerator + c0 * w.denominator).is_zero() && c1 == w.denominator;
    } catch (const AnalyzerError&) {
        return false;
    }
}

/// Witness check against a given sextic: the witness chart equation must be
/// the chart x1=1 restriction of (a coordinate change of) X itself; here we
/// accept the normal form as the bridge and re-verify the identity.
inline bool verify_witness(const RationalityWitness& w, const NormalForm& nf) {
    if (!verify_witness(w)) return false;
    // re-derive the witness from nf and compare the cleared identity
    try {
        RationalityWitness fresh = build_witness(nf);
        return fresh.chart_equation == w.chart_equation &&
               fresh.numerator == w.numerator && fresh.denominator == w.denominator;
    } catch (const AnalyzerError&) {
        return false;
    }
}

} // namespace sextic
