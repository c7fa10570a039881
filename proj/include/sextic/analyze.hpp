#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sextic/conic.hpp"
#include "sextic/verdict.hpp"

namespace sextic {

struct AnalyzeOptions {
    UserFlags flags;
    int jet_order = 8;
};

struct DiscriminantSummary {
    int degree = 8;
    bool smooth = false;
    std::optional<long> genus;          // when smooth
    std::optional<long> prym_dimension; // when smooth
    std::string rendered;
};

struct AnalysisResult {
    MPoly input;
    Sextic completed;       // square-completed input
    NormalForm nf;
    bool quasi_smooth = false;
    SingularityProfile profile;
    Verdict verdict;
    std::optional<DiscriminantSummary> disc;
    std::vector<std::string> warnings;
};

/// The full pipeline: validate, square-complete, normalize, profile the
/// singularities, decide, and attach witness and discriminant data.
inline AnalysisResult analyze(const MPoly& input, const AnalyzeOptions& opt = {}) {
    AnalysisResult res;
    res.input = input;
    Sextic X = validate(input);
    auto [Xs, sub] = complete_square(X);
    res.completed = Xs;
    res.nf = normalize(X);
    res.quasi_smooth = is_quasi_smooth(X, /*find_witness=*/false).smooth;
    res.profile = build_profile(Xs, res.nf, opt.jet_order);
    res.verdict = decide(res.profile, opt.flags);
    if (!res.nf.forms_available)
        res.warnings.push_back("normal form computed without root coordinates: " + res.nf.forms_note);
    if (res.profile.unresolvedGorenstein > 0)
        res.warnings.push_back(std::to_string(res.profile.unresolvedGorenstein) +
                               " singular points over fields of degree > 3 were only counted");
    if (res.verdict.tag == VerdictTag::Rational) {
        RationalityWitness w = build_witness(res.nf);
        if (!verify_witness(w))
            throw std::logic_error("analyze: witness failed its own verification");
        res.verdict.witness = w;
    }
    if (res.nf.forms_available) {
        bool rational_forms = res.nf.phi2.rational_coeffs() &&
                              res.nf.phi2p.rational_coeffs() &&
                              res.nf.phi2pp.rational_coeffs() &&
                              res.nf.phi4.rational_coeffs() &&
                              res.nf.phi4p.rational_coeffs() &&
                              res.nf.phi6.rational_coeffs();
        if (rational_forms) {
            DiscriminantCurve D = discriminant(res.nf);
            DiscriminantSummary ds;
            ds.rendered = D.D.str();
            ds.smooth = discriminant_smooth(D);
            if (ds.smooth) {
                Rational g = curve_genus_adjunction(8, Rational(1, 2), -4);
                ds.genus = long(num(g));
                ds.prym_dimension = prym_dimension(*ds.genus).dimension;
            }
            res.disc = ds;
        } else {
            res.warnings.push_back(
                "discriminant skipped: normalized forms live in a proper extension field");
        }
    }
    return res;
}

} // namespace sextic
