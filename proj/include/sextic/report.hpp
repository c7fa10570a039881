#pragma once

#include <json.hpp>

#include <sstream>
#include <string>

#include "sextic/analyze.hpp"

namespace sextic {

using json = nlohmann::json; // sorted keys: deterministic byte-for-byte output

inline json point_json(const WPSPoint& p) {
    json a = json::array();
    for (const FElem& c : p.coords) a.push_back(c.str());
    return a;
}

inline json record_json(const SingularityRecord& r) {
    json j;
    j["class"] = r.tag();
    j["gorenstein"] = r.gorenstein;
    if (r.point) j["point"] = point_json(*r.point);
    if (r.cls == SingClass::CA2) {
        j["moderate"] = r.moderate;
        j["axialWeight"] = r.aw;
    }
    if (r.cls == SingClass::An) j["n"] = r.n;
    if (r.orbit_size > 1) j["orbitSize"] = r.orbit_size;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline json ledger_json() {
    IntersectionLedger L;
    RingPtr R = ledger_ring();
    MPoly A = MPoly::variable(R, "A"), E = MPoly::variable(R, "E");
    MPoly m = A - E * FElem(Rational(1, 2));
    MPoly t = A * FElem(3) - E * FElem(Rational(1, 2));
    json j;
    j["A3"] = to_string(L.A3);
    j["A2E"] = to_string(L.A2E);
    j["AE2"] = to_string(L.AE2);
    j["E3"] = to_string(L.E3);
    j["identities"] = {to_string(ledger_eval(L, m * m * m)), to_string(ledger_eval(L, m * m * t)),
                       to_string(ledger_eval(L, t * t * m))};
    return j;
}

inline json report_json(const AnalysisResult& r, const UserFlags& flags) {
    json j;
    j["schema"] = "sextic-rationality-report/1";
    j["input"] = r.input.str();
    j["assumptions"] = {{"terminal", flags.terminal}, {"qFactorial", flags.q_factorial}};
    j["quasiSmooth"] = r.quasi_smooth;

    json n;
    n["case"] = case_name(r.nf.tag);
    n["formsAvailable"] = r.nf.forms_available;
    n["normalized"] = r.nf.normalized.str();
    n["fieldDegree"] = r.nf.field ? r.nf.field->degree() : 1;
    if (r.nf.forms_available) {
        json f;
        f["phi2"] = r.nf.phi2.str();
        f["phi2p"] = r.nf.phi2p.str();
        f["phi2pp"] = r.nf.phi2pp.str();
        f["phi4"] = r.nf.phi4.str();
        f["phi4p"] = r.nf.phi4p.str();
        f["phi6"] = r.nf.phi6.str();
        n["forms"] = f;
    } else {
        n["note"] = r.nf.forms_note;
    }
    j["normalization"] = n;

    json s;
    s["nonGorenstein"] = json::array();
    for (const auto& rec : r.profile.nonGorenstein) s["nonGorenstein"].push_back(record_json(rec));
    s["gorenstein"] = json::array();
    for (const auto& rec : r.profile.gorenstein) s["gorenstein"].push_back(record_json(rec));
    s["gorensteinCount"] = r.profile.gorensteinCount;
    s["unresolved"] = r.profile.unresolvedGorenstein;
    s["allModerate"] = r.profile.allModerate;
    s["allNodesOrCusps"] = r.profile.allNodesOrCusps;
    j["singularities"] = s;

    json v;
    v["tag"] = verdict_name(r.verdict.tag);
    v["rationale"] = r.verdict.rationale;
    if (!r.verdict.unmet.empty()) v["unmetHypotheses"] = r.verdict.unmet;
    if (r.verdict.witness) {
        const RationalityWitness& w = *r.verdict.witness;
        json wj;
        wj["chart"] = w.chart + "=1";
        wj["solvedVariable"] = w.solved_variable;
        wj["numerator"] = w.numerator.str();
        wj["denominator"] = w.denominator.str();
        wj["inverseData"] = w.inverse_data;
        wj["verified"] = verify_witness(w);
        v["witness"] = wj;
    }
    j["verdict"] = v;

    if (r.disc) {
        json d;
        d["degree"] = r.disc->degree;
        d["polynomial"] = r.disc->rendered;
        d["smooth"] = r.disc->smooth;
        if (r.disc->genus) d["genus"] = *r.disc->genus;
        if (r.disc->prym_dimension) d["prymDimension"] = *r.disc->prym_dimension;
        j["discriminant"] = d;
    }

    j["ledger"] = ledger_json();
    j["warnings"] = r.warnings;
    return j;
}

/// Plain-text rendering of the same data, one fact per line.
inline std::string report_text(const AnalysisResult& r, const UserFlags& flags) {
    std::ostringstream os;
    os << "input:        " << r.input.str() << "\n";
    os << "case:         " << case_name(r.nf.tag) << "\n";
    os << "quasi-smooth: " << (r.quasi_smooth ? "yes" : "no") << "\n";
    os << "non-Gorenstein singularities:\n";
    for (const auto& rec : r.profile.nonGorenstein) os << "  - " << rec.tag() << "\n";
    os << "Gorenstein singularities (" << r.profile.gorensteinCount << "):\n";
    for (const auto& rec : r.profile.gorenstein) {
        os << "  - " << rec.tag();
        if (rec.orbit_size > 1) os << "  [orbit of " << rec.orbit_size << "]";
        os << "\n";
    }
    if (r.profile.unresolvedGorenstein > 0)
        os << "  (+" << r.profile.unresolvedGorenstein << " unclassified over large fields)\n";
    os << "assumptions:  terminal=" << (flags.terminal ? "asserted" : "unset")
       << " Q-factorial=" << (flags.q_factorial ? "asserted" : "unset") << "\n";
    os << "verdict:      " << verdict_name(r.verdict.tag) << "\n";
    if (!r.verdict.rationale.empty()) os << "  " << r.verdict.rationale << "\n";
    for (const auto& u : r.verdict.unmet) os << "  unmet: " << u << "\n";
    if (r.verdict.witness) {
        os << "witness:      " << r.verdict.witness->solved_variable << " = ("
           << r.verdict.witness->numerator.str() << ") / (" << r.verdict.witness->denominator.str()
           << ")  on " << r.verdict.witness->chart << "=1\n";
    }
    if (r.disc) {
        os << "discriminant: degree " << r.disc->degree << ", "
           << (r.disc->smooth ? "smooth" : "singular") << ": " << r.disc->rendered << "\n";
        if (r.disc->genus)
            os << "  genus " << *r.disc->genus << ", Prym dimension " << *r.disc->prym_dimension
               << "\n";
    }
    for (const auto& w : r.warnings) os << "warning:      " << w << "\n";
    return os.str();
}

} // namespace sextic
