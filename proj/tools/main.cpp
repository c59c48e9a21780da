// Command-line front end: expression/JSON input, conversions, solvers, and
// oracle-backed verification.
//
// Exit codes: 0 success, 1 domain error or tolerance violation, 2 usage.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "holomellin/errors.hpp"
#include "holomellin/json_io.hpp"
#include "holomellin/mellin_forward.hpp"
#include "holomellin/mellin_inverse.hpp"
#include "holomellin/parser.hpp"
#include "holomellin/series_oracle.hpp"
#include "holomellin/solvers.hpp"

namespace hm = holomellin;
using nlohmann::json;

namespace {

size_t default_max_terms() {
    if (const char* env = std::getenv("HOLOMELLIN_MAX_TERMS")) {
        const long long v = std::atoll(env);
        if (v > 0) return static_cast<size_t>(v);
    }
    return 1000000;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw hm::DomainError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct OperatorInput {
    std::string expr;
    std::string file;
    bool cleared = false;

    void attach(CLI::App* cmd) {
        auto* e = cmd->add_option("--expr", expr, "operator expression");
        auto* f = cmd->add_option("--file", file, "operator JSON file");
        e->excludes(f);
    }

    std::variant<hm::DiffOp, hm::RecOp> load(hm::OperatorKind expected) {
        if (!expr.empty()) {
            hm::ParsedOperator p = hm::parse_operator(expr, expected);
            cleared = p.cleared_denominators;
            return std::move(p.op);
        }
        if (!file.empty()) return hm::operator_from_json(read_file(file));
        throw hm::DomainError("one of --expr or --file is required");
    }

    hm::DiffOp load_diff() {
        auto v = load(hm::OperatorKind::Diff);
        if (!std::holds_alternative<hm::DiffOp>(v))
            throw hm::DomainError("expected a differential operator");
        return std::get<hm::DiffOp>(std::move(v));
    }

    hm::RecOp load_rec() {
        auto v = load(hm::OperatorKind::Rec);
        if (!std::holds_alternative<hm::RecOp>(v))
            throw hm::DomainError("expected a recurrence operator");
        return std::get<hm::RecOp>(std::move(v));
    }
};

// Accepts a literal JSON object, a path to a file (JSON or expression), or an
// inline expression.
std::variant<hm::DiffOp, hm::RecOp> load_flexible(const std::string& text,
                                                  hm::OperatorKind expected) {
    std::string body = text;
    if (!body.empty() && body.front() != '{') {
        std::ifstream probe(body);
        if (probe) body = read_file(body);
    }
    if (!body.empty() && body.front() == '{') return hm::operator_from_json(body);
    return hm::parse_operator(body, expected).op;
}

std::vector<hm::Rational> parse_init_list(const std::string& text) {
    std::vector<hm::Rational> init;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto begin = item.find_first_not_of(" \t");
        const auto end = item.find_last_not_of(" \t");
        if (begin == std::string::npos) continue;
        init.push_back(hm::rational_from_string(item.substr(begin, end - begin + 1)));
    }
    if (init.empty()) throw hm::DomainError("empty initial coefficient list");
    return init;
}

void emit(const json& j, bool pretty_json = false) {
    std::cout << j.dump(pretty_json ? 2 : -1) << "\n";
}

const char* status_name(hm::SumStatus s) {
    switch (s) {
        case hm::SumStatus::Converged: return "converged";
        case hm::SumStatus::BoundNotMet: return "bound-not-met";
        case hm::SumStatus::Divergent: return "divergent";
    }
    return "unknown";
}

int run(int argc, char** argv) {
    CLI::App app{"holomellin: holonomic Mellin/inverse-Mellin operator calculus"};
    app.require_subcommand(1);

    // ---- mellin ----
    auto* mellin = app.add_subcommand("mellin", "differential equation -> moment recurrence");
    OperatorInput mellin_in;
    mellin_in.attach(mellin);
    bool mellin_pretty = false;
    mellin->add_flag("--pretty", mellin_pretty, "human-readable output");

    // ---- invmellin ----
    auto* inv = app.add_subcommand("invmellin", "moment recurrence -> differential equation");
    OperatorInput inv_in;
    inv_in.attach(inv);
    bool inv_pretty = false, inv_trace = false;
    inv->add_flag("--pretty", inv_pretty, "human-readable output");
    inv->add_flag("--trace", inv_trace, "emit each reduction pass");

    // ---- series ----
    auto* series = app.add_subcommand("series", "expand an ODE solution as a power series");
    OperatorInput series_in;
    series_in.attach(series);
    std::string series_init = "1";
    size_t series_terms = 10;
    bool series_float = false, series_json = false;
    series->add_option("--init", series_init, "initial coefficients, comma separated");
    series->add_option("--terms", series_terms, "truncation order K (coefficients 0..K)");
    series->add_flag("--float", series_float, "expand in doubles instead of exact rationals");
    series->add_flag("--json", series_json, "JSON output");

    // ---- solve-rec ----
    auto* solverec = app.add_subcommand("solve-rec", "hypergeometric solutions of a recurrence");
    OperatorInput solverec_in;
    solverec_in.attach(solverec);
    bool solverec_pretty = false;
    solverec->add_flag("--pretty", solverec_pretty, "human-readable output");

    // ---- solve-ode ----
    auto* solveode = app.add_subcommand("solve-ode", "rational solutions of an ODE");
    OperatorInput solveode_in;
    solveode_in.attach(solveode);
    bool solveode_pretty = false;
    solveode->add_flag("--pretty", solveode_pretty, "human-readable output");

    // ---- verify ----
    auto* verify = app.add_subcommand(
        "verify", "check a recurrence against an ODE through the series oracle");
    std::string verify_ode, verify_rec, verify_init = "1";
    long verify_nmax = 20;
    double verify_tol = 1e-6;
    size_t verify_terms = default_max_terms();
    bool verify_pretty = false;
    verify->add_option("--ode", verify_ode, "ODE (expression, JSON, or file)")->required();
    verify->add_option("--rec", verify_rec, "recurrence (expression, JSON, or file)")->required();
    verify->add_option("--init", verify_init, "initial series coefficients");
    verify->add_option("--n-max", verify_nmax, "check moments n = 0..n-max");
    verify->add_option("--tol", verify_tol, "residual tolerance");
    verify->add_option("--terms", verify_terms, "series truncation (default from HOLOMELLIN_MAX_TERMS)");
    verify->add_flag("--pretty", verify_pretty, "human-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (mellin->parsed()) {
        hm::RecOp rec = hm::ode_to_mellin_rec(mellin_in.load_diff());
        if (mellin_in.cleared)
            std::cerr << "note: rational coefficients cleared by a common denominator\n";
        if (mellin_pretty)
            std::cout << hm::pretty(rec) << "\n";
        else
            emit(json::parse(hm::to_json_string(rec)));
        return 0;
    }

    if (inv->parsed()) {
        hm::RecOp rec = inv_in.load_rec();
        hm::InverseTrace trace;
        hm::DiffOp ode = hm::rec_to_ode(rec, &trace);
        if (inv_in.cleared)
            std::cerr << "note: rational coefficients cleared by a common denominator\n";
        if (inv_pretty) {
            if (inv_trace) {
                int pass = 1;
                for (const auto& rel : trace.passes)
                    std::cout << "pass " << pass++ << ": " << rel.str() << "\n";
                if (trace.differentiated)
                    std::cout << "boundary constants eliminated by differentiation\n";
            }
            std::cout << hm::pretty(ode) << "\n";
        } else {
            json j = json::parse(hm::to_json_string(ode));
            if (inv_trace) {
                json t = json::array();
                for (const auto& rel : trace.passes) t.push_back(rel.str());
                j["trace"] = t;
                j["differentiated"] = trace.differentiated;
            }
            emit(j);
        }
        return 0;
    }

    if (series->parsed()) {
        hm::DiffOp ode = series_in.load_diff();
        hm::SeriesExpansion s =
            hm::expand(ode, parse_init_list(series_init), series_terms, !series_float);
        if (series_json) {
            json j;
            j["kind"] = "series";
            j["exact"] = s.exact;
            json coeffs = json::array();
            if (s.exact)
                for (const auto& q : s.exact_coeffs) coeffs.push_back(hm::to_string(q));
            else
                for (double v : s.coeffs) coeffs.push_back(v);
            j["coeffs"] = coeffs;
            emit(j);
        } else {
            for (size_t k = 0; k < s.size(); ++k) {
                if (k) std::cout << ", ";
                if (s.exact)
                    std::cout << hm::to_string(s.exact_coeffs[k]);
                else
                    std::cout << s.coeffs[k];
            }
            std::cout << "\n";
        }
        return 0;
    }

    if (solverec->parsed()) {
        auto certs = hm::hyper_solutions(solverec_in.load_rec());
        if (solverec_pretty) {
            if (certs.empty()) std::cout << "no hypergeometric solutions\n";
            for (const auto& c : certs)
                std::cout << "y(n+1)/y(n) = " << c.ratio.str() << "\n";
        } else {
            json j;
            j["kind"] = "hypergeometric-certificates";
            json ratios = json::array();
            for (const auto& c : certs)
                ratios.push_back(json{{"num", c.ratio.num().str()}, {"den", c.ratio.den().str()}});
            j["ratios"] = ratios;
            emit(j);
        }
        return 0;
    }

    if (solveode->parsed()) {
        auto sols = hm::rational_ode_solutions(solveode_in.load_diff());
        if (solveode_pretty) {
            if (sols.basis.empty()) std::cout << "no rational solutions\n";
            for (const auto& f : sols.basis) std::cout << "f(x) = " << f.str() << "\n";
            for (const auto& note : sols.notes) std::cerr << "note: " << note << "\n";
        } else {
            json j;
            j["kind"] = "rational-solutions";
            json arr = json::array();
            for (const auto& f : sols.basis)
                arr.push_back(json{{"num", f.num().str()}, {"den", f.den().str()}});
            j["solutions"] = arr;
            j["notes"] = sols.notes;
            emit(j);
        }
        return 0;
    }

    // verify
    auto ode_v = load_flexible(verify_ode, hm::OperatorKind::Diff);
    auto rec_v = load_flexible(verify_rec, hm::OperatorKind::Rec);
    if (!std::holds_alternative<hm::DiffOp>(ode_v))
        throw hm::DomainError("--ode must name a differential operator");
    if (!std::holds_alternative<hm::RecOp>(rec_v))
        throw hm::DomainError("--rec must name a recurrence operator");
    const hm::DiffOp& ode = std::get<hm::DiffOp>(ode_v);
    const hm::RecOp& rec = std::get<hm::RecOp>(rec_v);

    const double inner_tol = std::max(std::min(verify_tol / 1000.0, 1e-9), 1e-13);
    hm::SeriesExpansion s = hm::expand(ode, parse_init_list(verify_init), verify_terms);

    json report;
    report["kind"] = "verification";
    report["n_max"] = verify_nmax;
    report["tol"] = verify_tol;
    bool oracle_ok = true;
    std::string oracle_message;

    std::vector<double> moments;
    for (long n = 0; n <= verify_nmax && oracle_ok; ++n) {
        hm::SumResult r = hm::numeric_mellin(s, n, inner_tol, verify_terms);
        if (!r.ok()) {
            oracle_ok = false;
            oracle_message = "moment M(" + std::to_string(n) + ") " + status_name(r.status) +
                             " (bound " + std::to_string(r.bound) + ")";
            break;
        }
        moments.push_back(r.value);
    }

    std::map<hm::BoundarySymbol, double> boundary;
    for (const auto& [sym, c] : rec.inhom().terms()) {
        if (!oracle_ok) break;
        if (sym.kind == hm::BoundarySymbol::Kind::DerivAtOne) {
            hm::BoundaryValue b = hm::numeric_boundary(s, sym.index);
            if (!b.ok) {
                oracle_ok = false;
                oracle_message = "boundary value " + sym.str() + " did not converge";
                break;
            }
            boundary[sym] = b.value;
        } else {
            hm::SumResult r = hm::numeric_mellin(s, sym.index, inner_tol, verify_terms);
            if (!r.ok()) {
                oracle_ok = false;
                oracle_message = "moment symbol " + sym.str() + " " + status_name(r.status);
                break;
            }
            boundary[sym] = r.value;
        }
    }

    if (!oracle_ok) {
        report["status"] = "oracle-failure";
        report["message"] = oracle_message;
        if (verify_pretty)
            std::cout << "oracle failure: " << oracle_message << "\n";
        else
            emit(report);
        return 1;
    }

    auto residuals = hm::apply_recop(rec, std::span<const double>(moments), boundary);
    double max_residual = 0.0;
    for (double r : residuals) max_residual = std::max(max_residual, std::abs(r));
    const bool pass = max_residual <= verify_tol;
    report["status"] = pass ? "ok" : "tolerance-violation";
    report["max_residual"] = max_residual;
    report["residuals"] = residuals;
    if (verify_pretty)
        std::cout << (pass ? "ok" : "FAIL") << ": max residual " << max_residual << " over n = 0.."
                  << verify_nmax << " (tol " << verify_tol << ")\n";
    else
        emit(report);
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const hm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
