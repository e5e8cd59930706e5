// Command-line surface: exact univariate root counting/isolation, sign
// assignment enumeration, the multivariate decision pipeline, and the
// brute-force sampling oracle. All numeric output is exact rational text.
//
// Exit codes: 0 success, 1 mathematical indeterminacy (indeterminate
// verdict / inconclusive sampling), 2 usage or parse error.

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "realdecide/decide.hpp"
#include "realdecide/oracle.hpp"
#include "realdecide/parser.hpp"
#include "realdecide/signdet.hpp"
#include "realdecide/sturm.hpp"

using json = nlohmann::ordered_json;
using namespace realdecide;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Inline input: a bare expression (implied ">= 0") or a full condition
// line; variables are inferred in order of first appearance.
SystemDocument document_from_inline(const std::string& text) {
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                                       text[i] == '_'))
                name += text[i++];
            --i;
            bool known = false;
            for (const auto& v : vars) known |= (v == name);
            if (!known) vars.push_back(name);
        }
    }
    if (vars.empty()) vars.push_back("x");
    bool has_relation = text.find('>') != std::string::npos ||
                        text.find('<') != std::string::npos ||
                        text.find('=') != std::string::npos ||
                        text.find('!') != std::string::npos;
    std::string doc = "vars: ";
    for (std::size_t i = 0; i < vars.size(); ++i) doc += (i ? ", " : "") + vars[i];
    doc += "\n" + text + (has_relation ? "" : " >= 0") + "\n";
    return parse_system(doc);
}

SystemDocument load_document(const std::string& expr, const std::string& file) {
    if (!file.empty() && !expr.empty())
        throw UsageError("give either an inline expression or -f, not both");
    if (!file.empty()) return parse_system(read_file(file));
    if (!expr.empty()) return document_from_inline(expr);
    throw UsageError("missing input: inline expression or -f file");
}

std::vector<UniPoly> univariate_family(const SystemDocument& doc) {
    if (doc.variables.size() != 1)
        throw UsageError("this subcommand needs a univariate input");
    std::vector<UniPoly> fam;
    for (const auto& [p, rel] : doc.conditions) fam.push_back(to_unipoly(p));
    if (fam.empty()) throw UsageError("no polynomials in input");
    return fam;
}

Rational parse_rational_arg(const std::string& s, const char* what) {
    auto r = parse_rational(s);
    if (!r) throw UsageError(std::string("malformed rational for ") + what + ": " + s);
    return *r;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

const char* status_name(Verdict::Status s) {
    switch (s) {
        case Verdict::Status::Consistent: return "consistent";
        case Verdict::Status::Inconsistent: return "inconsistent";
        default: return "indeterminate";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact decision procedures for real polynomial sign systems"};
    app.require_subcommand(1);

    std::string expr, file, width = "1", ball, box = "-2,2", step = "1/2";

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("expression", expr, "inline expression or condition");
        cmd->add_option("-f,--file", file, "system file");
    };

    CLI::App* c_count = app.add_subcommand("count-roots", "count distinct real roots");
    add_io(c_count);
    CLI::App* c_isolate = app.add_subcommand("isolate", "isolate real roots");
    add_io(c_isolate);
    c_isolate->add_option("--width", width, "maximum interval width (rational)");
    CLI::App* c_signs = app.add_subcommand("signs", "consistent sign assignments");
    add_io(c_signs);
    CLI::App* c_decide = app.add_subcommand("decide", "decide consistency over the reals");
    add_io(c_decide);
    c_decide->add_option("--ball", ball, "restrict to the ball of this radius (rational)");
    CLI::App* c_oracle = app.add_subcommand("oracle", "grid-sampling consistency check");
    add_io(c_oracle);
    c_oracle->add_option("--box", box, "per-variable range lo,hi (rationals)");
    c_oracle->add_option("--step", step, "grid resolution (rational)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (c_count->parsed()) {
            auto fam = univariate_family(load_document(expr, file));
            if (fam.size() != 1) throw UsageError("count-roots takes exactly one polynomial");
            emit({{"roots", count_real_roots(fam[0])}});
            return 0;
        }
        if (c_isolate->parsed()) {
            auto fam = univariate_family(load_document(expr, file));
            if (fam.size() != 1) throw UsageError("isolate takes exactly one polynomial");
            Rational w = parse_rational_arg(width, "--width");
            json intervals = json::array();
            for (const auto& iv : isolate_roots(fam[0], w))
                intervals.push_back({to_string(iv.lo), to_string(iv.hi)});
            emit({{"intervals", intervals}});
            return 0;
        }
        if (c_signs->parsed()) {
            auto fam = univariate_family(load_document(expr, file));
            json arr = json::array();
            for (const auto& a : consistent_sign_assignments(fam)) arr.push_back(a.signs);
            emit({{"assignments", arr}});
            return 0;
        }
        if (c_decide->parsed()) {
            SignSystem sys = to_sign_system(load_document(expr, file));
            DecideOptions opt;
            if (!ball.empty()) opt.ball_radius = parse_rational_arg(ball, "--ball");
            if (const char* ceiling = std::getenv("REALDECIDE_CEILING"))
                opt.row_ceiling = std::strtoul(ceiling, nullptr, 10);
            Verdict v = decide_exists(sys, opt);
            json out;
            out["status"] = status_name(v.status);
            out["reason"] = v.reason;
            json conds = json::array();
            for (const auto& [p, rel] : v.witness_conditions)
                conds.push_back(to_string(p, "t") + " " + relation_token(rel) + " 0");
            out["witness_conditions"] = conds;
            out["witness_interval"] =
                v.witness_interval
                    ? json{to_string(v.witness_interval->lo), to_string(v.witness_interval->hi)}
                    : json(nullptr);
            out["trace"] = {{"lines_tried", v.trace.lines_tried},
                            {"eps_order", v.trace.eps_order},
                            {"minor_size", v.trace.minor_size},
                            {"restarts", v.trace.restarts}};
            emit(out);
            return v.status == Verdict::Status::Indeterminate ? 1 : 0;
        }
        if (c_oracle->parsed()) {
            SignSystem sys = to_sign_system(load_document(expr, file));
            auto comma = box.find(',');
            if (comma == std::string::npos) throw UsageError("--box needs lo,hi");
            Rational lo = parse_rational_arg(box.substr(0, comma), "--box");
            Rational hi = parse_rational_arg(box.substr(comma + 1), "--box");
            Box b;
            for (std::size_t i = 0; i < sys.arity; ++i) b.ranges.emplace_back(lo, hi);
            SampleReport rep = sample_consistency(sys, b, parse_rational_arg(step, "--step"));
            json out;
            bool found = rep.status == SampleReport::Status::WitnessFound;
            out["status"] = found ? "witness_found" : "no_witness_in_box";
            if (found) {
                json w = json::array();
                for (const auto& x : *rep.witness) w.push_back(to_string(x));
                out["witness"] = w;
            } else {
                out["witness"] = nullptr;
            }
            out["box"] = {to_string(lo), to_string(hi)};
            out["step"] = to_string(rep.resolution);
            emit(out);
            return found ? 0 : 1;
        }
        throw UsageError("no subcommand");
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
