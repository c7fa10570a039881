// Command-line front end. Exit codes: 0 = completed verdict (any tag),
// 2 = input rejected, 1 = internal error.

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <vector>

#include <sextic/analyze.hpp>
#include <sextic/parse.hpp>
#include <sextic/report.hpp>

using namespace sextic;

namespace {

// Records in an input file are blocks of non-blank lines; "#" starts a comment line.
std::vector<std::string> read_records(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw AnalyzerError("FileNotFound", "cannot open input file: " + path);
    std::vector<std::string> records;
    std::string line, cur;
    while (std::getline(in, line)) {
        std::string trimmed = line;
        size_t h = trimmed.find('#');
        if (h != std::string::npos) trimmed = trimmed.substr(0, h);
        bool blank = trimmed.find_first_not_of(" \t\r") == std::string::npos;
        if (blank) {
            if (!cur.empty()) records.push_back(cur), cur.clear();
        } else {
            cur += trimmed + "\n";
        }
    }
    if (!cur.empty()) records.push_back(cur);
    if (records.empty()) throw AnalyzerError("EmptyInput", "no records in " + path);
    return records;
}

struct CommonOpts {
    std::string expr;
    std::string input_file;
    bool json = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool takes_expr = true) {
    if (takes_expr) cmd->add_option("expr", o.expr, "polynomial expression");
    cmd->add_option("--input", o.input_file, "input file (batch: records separated by blank lines)");
    cmd->add_flag("--json", o.json, "machine-readable output");
}

std::vector<std::string> gather(const CommonOpts& o) {
    if (!o.input_file.empty()) return read_records(o.input_file);
    if (o.expr.empty()) throw AnalyzerError("EmptyInput", "no expression given (pass one or --input FILE)");
    return {o.expr};
}

// Runs one job per record, emits results in input order, folds exit codes
// (internal error dominates rejection dominates success).
int run_batch(const std::vector<std::string>& records, bool as_json,
              const std::function<json(const std::string&)>& job_json,
              const std::function<std::string(const std::string&)>& job_text) {
    struct Out {
        int code = 0;
        std::string text;
        json j;
    };
    std::vector<std::future<Out>> futs;
    for (const auto& rec : records) {
        futs.push_back(std::async(std::launch::async, [&, rec]() {
            Out o;
            try {
                if (as_json)
                    o.j = job_json(rec);
                else
                    o.text = job_text(rec);
            } catch (const AnalyzerError& e) {
                o.code = 2;
                o.text = std::string("error: ") + e.what();
                o.j = {{"error", e.code()}, {"message", e.what()}};
            } catch (const std::exception& e) {
                o.code = 1;
                o.text = std::string("internal error: ") + e.what();
                o.j = {{"error", "Internal"}, {"message", e.what()}};
            }
            return o;
        }));
    }
    int worst = 0;
    json arr = json::array();
    for (size_t i = 0; i < futs.size(); ++i) {
        Out o = futs[i].get();
        if (o.code == 1 || (o.code == 2 && worst != 1)) worst = o.code;
        if (as_json) {
            arr.push_back(o.j);
        } else {
            if (i) std::cout << "---\n";
            std::cout << o.text;
            if (!o.text.empty() && o.text.back() != '\n') std::cout << "\n";
        }
    }
    if (as_json) std::cout << (records.size() == 1 ? arr[0] : arr).dump(2) << "\n";
    return worst;
}

json witness_json(const RationalityWitness& w) {
    json j;
    j["chart"] = w.chart + "=1";
    j["solvedVariable"] = w.solved_variable;
    j["numerator"] = w.numerator.str();
    j["denominator"] = w.denominator.str();
    j["inverseData"] = w.inverse_data;
    j["verified"] = verify_witness(w);
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rationality analyzer for sextic hypersurfaces in P(1,1,2,2,3)"};
    app.require_subcommand(1);

    CommonOpts an, di, wi, ec;
    AnalyzeOptions aopt;
    bool led_json = false, lat_json = false;
    int lattice_bound = 8;

    CLI::App* c_an = app.add_subcommand("analyze", "full pipeline: normalize, classify, decide");
    add_common(c_an, an);
    c_an->add_flag("--assert-terminal", aopt.flags.terminal, "assert the member is terminal");
    c_an->add_flag("--assert-q-factorial", aopt.flags.q_factorial, "assert the member is Q-factorial");
    c_an->add_option("--jet-order", aopt.jet_order, "jet truncation order for A_n recognition");

    CLI::App* c_di = app.add_subcommand("discriminant", "discriminant curve of the conic fibration");
    add_common(c_di, di);

    CLI::App* c_wi = app.add_subcommand("witness", "birational parametrization for rank <= 1 members");
    add_common(c_wi, wi);

    CLI::App* c_le = app.add_subcommand("ledger", "intersection numbers on the half-point blowup");
    c_le->add_flag("--json", led_json, "machine-readable output");

    CLI::App* c_la = app.add_subcommand("lattice-check", "exhaustive surface-lattice search");
    c_la->add_flag("--json", lat_json, "machine-readable output");
    c_la->add_option("--lattice-bound", lattice_bound, "coefficient bound for the enumeration");

    CLI::App* c_ec = app.add_subcommand("eckardt", "homogenize a cubic surface and analyze the double cover");
    add_common(c_ec, ec);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? 0 : 2;
    }

    try {
        if (c_an->parsed()) {
            return run_batch(
                gather(an), an.json,
                [&](const std::string& s) {
                    AnalysisResult r = analyze(parse_polynomial(s), aopt);
                    return report_json(r, aopt.flags);
                },
                [&](const std::string& s) {
                    AnalysisResult r = analyze(parse_polynomial(s), aopt);
                    return report_text(r, aopt.flags);
                });
        }
        if (c_di->parsed()) {
            auto compute = [](const std::string& s) {
                Sextic X = validate(parse_polynomial(s));
                auto [Xsq, sub] = complete_square(X);
                return discriminant(normalize(Xsq));
            };
            return run_batch(
                gather(di), di.json,
                [&](const std::string& s) {
                    DiscriminantCurve c = compute(s);
                    bool smooth = discriminant_smooth(c);
                    json j;
                    j["degree"] = 8;
                    j["polynomial"] = c.D.str();
                    j["smooth"] = smooth;
                    if (smooth) {
                        Rational g = curve_genus_adjunction(8, Rational(1, 2), Rational(-2));
                        j["genus"] = to_string(g);
                        j["prymDimension"] = prym_dimension(num(g).convert_to<long>()).dimension;
                    }
                    return j;
                },
                [&](const std::string& s) {
                    DiscriminantCurve c = compute(s);
                    bool smooth = discriminant_smooth(c);
                    std::ostringstream os;
                    os << "discriminant (degree 8 on P(1,1,2)): " << c.D.str() << "\n";
                    os << "smooth: " << (smooth ? "yes" : "no") << "\n";
                    if (smooth) {
                        Rational g = curve_genus_adjunction(8, Rational(1, 2), Rational(-2));
                        os << "genus " << g << ", Prym dimension "
                           << prym_dimension(num(g).convert_to<long>()).dimension << "\n";
                    }
                    return os.str();
                });
        }
        if (c_wi->parsed()) {
            auto compute = [](const std::string& s) {
                Sextic X = validate(parse_polynomial(s));
                auto [Xsq, sub] = complete_square(X);
                NormalForm nf = normalize(Xsq);
                RationalityWitness w = build_witness(nf);
                if (!verify_witness(w))
                    throw std::logic_error("witness failed self-verification");
                return w;
            };
            return run_batch(
                gather(wi), wi.json,
                [&](const std::string& s) { return witness_json(compute(s)); },
                [&](const std::string& s) {
                    RationalityWitness w = compute(s);
                    std::ostringstream os;
                    os << "on the chart " << w.chart << "=1:\n";
                    os << "  " << w.solved_variable << " = (" << w.numerator.str() << ") / ("
                       << w.denominator.str() << ")\n";
                    os << "  " << w.inverse_data << "\n";
                    os << "verified: yes\n";
                    return os.str();
                });
        }
        if (c_le->parsed()) {
            json j = ledger_json();
            if (led_json) {
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "A^3 = " << j["A3"].get<std::string>()
                          << "   A^2E = " << j["A2E"].get<std::string>()
                          << "   AE^2 = " << j["AE2"].get<std::string>()
                          << "   E^3 = " << j["E3"].get<std::string>() << "\n";
                std::cout << "(A - E/2)^3            = " << j["identities"][0].get<std::string>() << "\n";
                std::cout << "(A - E/2)^2 (3A - E/2) = " << j["identities"][1].get<std::string>() << "\n";
                std::cout << "(3A - E/2)^2 (A - E/2) = " << j["identities"][2].get<std::string>() << "\n";
            }
            return 0;
        }
        if (c_la->parsed()) {
            json arr = json::array();
            bool any_violation = false, parity_ok = true;
            for (int l = 0; l <= 4; ++l) {
                LatticeCheckResult r = lattice_check_surf(l, lattice_bound);
                any_violation = any_violation || !r.violations.empty();
                parity_ok = parity_ok && r.parity_violations.empty();
                if (lat_json) {
                    arr.push_back({{"l", l},
                                   {"candidates", r.candidates},
                                   {"violations", r.violations},
                                   {"parityChecked", r.parity_checked},
                                   {"parityViolations", r.parity_violations}});
                } else {
                    std::cout << "l=" << l << ": " << r.candidates << " candidate decompositions, "
                              << r.violations.size() << " violations, parity "
                              << r.parity_checked << " checked / "
                              << r.parity_violations.size() << " failed\n";
                }
            }
            if (lat_json)
                std::cout << json{{"bound", lattice_bound}, {"results", arr}}.dump(2) << "\n";
            else
                std::cout << (any_violation || !parity_ok ? "FOUND COUNTEREXAMPLE" : "all clear")
                          << " at bound " << lattice_bound << "\n";
            return 0;
        }
        if (c_ec->parsed()) {
            return run_batch(
                gather(ec), ec.json,
                [&](const std::string& s) {
                    Sextic X = eckardt_homogenize(parse_polynomial(s, eckardt_ring()));
                    SingularityProfile p = eckardt_profile(X);
                    json j;
                    j["sextic"] = X.F.str();
                    json sings = json::array();
                    for (const auto& rec : p.nonGorenstein) sings.push_back(record_json(rec));
                    for (const auto& rec : p.gorenstein) sings.push_back(record_json(rec));
                    j["singularities"] = sings;
                    return j;
                },
                [&](const std::string& s) {
                    Sextic X = eckardt_homogenize(parse_polynomial(s, eckardt_ring()));
                    SingularityProfile p = eckardt_profile(X);
                    std::ostringstream os;
                    os << "double cover sextic: " << X.F.str() << "\n";
                    for (const auto& rec : p.nonGorenstein) os << "  - " << rec.tag() << "\n";
                    for (const auto& rec : p.gorenstein) os << "  - " << rec.tag() << "\n";
                    return os.str();
                });
        }
    } catch (const AnalyzerError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
