#ifndef PFREP_TOOLS_CLI_HPP
#define PFREP_TOOLS_CLI_HPP

// Command-line front end. Exit codes:
//   0 success, 1 verification mismatch / selftest failure, 2 malformed input,
//   3 unsupported degree or shape, 4 internal verification failure.
// The last line on `out` is always "status: <word> command=<cmd> exit=<code>".

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "pfrep/pfrep.hpp"
#include "selftest.hpp"

namespace pfrep::cli {

enum ExitCode : int { ok = 0, mismatch = 1, bad_input = 2, unsupported = 3, internal = 4 };

struct Config {
    std::string command;
    std::string ring = "int";
    std::string format = "text";
    std::optional<int> degree;
    unsigned trials = 100;
    std::uint64_t seed = 0;
    bool cross_check = false;
    std::string output;
    std::string polynomial;
    std::string file;
};

namespace detail {

inline const char* status_word(int code) {
    switch (code) {
        case ok: return "ok";
        case mismatch: return "mismatch";
        case bad_input: return "bad-input";
        case unsupported: return "unsupported";
        default: return "internal-error";
    }
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");
    Json doc;
    // stream extraction stops after one value, so a trailing status line is ignored
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("invalid JSON in '") + path + "': " + e.what());
    }
    return doc;
}

template <CommutativeRing R>
int represent(const Config& cfg, const R& ring, std::ostream& out) {
    const auto forms = form_ring(ring);
    const auto f = parse(forms, cfg.polynomial);
    const auto rep = pfrep::represent(forms, f, cfg.degree);
    if (!verify(forms, rep, f)) throw std::logic_error("constructed representation failed verification");

    std::string doc;
    if (cfg.format == "json")
        doc = representation_to_json(rep).dump(2) + "\n";
    else if (cfg.format == "latex")
        doc = representation_to_latex(rep);
    else
        doc = representation_to_text(rep) + "verified: Pf(M) = " + format(forms, f) + "\n";

    if (cfg.output.empty()) {
        out << doc;
    } else {
        std::ofstream file(cfg.output);
        if (!file) throw FormatError("cannot write '" + cfg.output + "'");
        file << doc;
        out << "wrote degree " << rep.degree << " representation to " << cfg.output << "\n";
    }
    return ok;
}

template <CommutativeRing R>
int verify(const Config& cfg, const R& ring, std::ostream& out) {
    const auto forms = form_ring(ring);
    const auto f = parse(forms, cfg.polynomial);
    const auto rep = representation_from_json(ring, read_json_file(cfg.file));
    const auto report = verify_report(forms, rep, f, cfg.cross_check);
    if (report.pfaffian_matches)
        out << "Pf(M) = f: yes\n";
    else
        out << "Pf(M) = f: no\nPf(M) - f = " << format(forms, report.difference) << "\n";
    if (report.determinant_matches) out << "det(M) = f^2: " << (*report.determinant_matches ? "yes" : "no") << "\n";
    return report.ok() ? ok : mismatch;
}

template <CommutativeRing R>
int pf(const Config& cfg, const R& ring, std::ostream& out) {
    const auto m = skew_from_json(ring, read_json_file(cfg.file));
    out << format(ring, pfaffian(m)) << "\n";
    return ok;
}

inline int nice(const Config& cfg, std::ostream& out) {
    const int d = cfg.degree.value_or(0);
    if (d < 2 || d > max_degree) throw UnsupportedDegree("nice expects a degree in 2..5");
    const auto ring = generic_ring(d);
    const auto report = is_nice(build(ring, generic_coefficients(ring, d)));
    if (cfg.format == "json") {
        Json doc;
        doc["degree"] = d;
        doc["nice"] = report.nice;
        doc["witnesses"] = Json::array();
        for (const auto& w : report.witnesses) {
            Json j;
            j["reason"] = to_string(w.reason);
            if (w.matrix != 0) {
                j["matrix"] = std::string(1, w.matrix);
                j["i"] = w.i;
                j["j"] = w.j;
            }
            j["value"] = w.value;
            doc["witnesses"].push_back(j);
        }
        out << doc.dump(2) << "\n";
    } else {
        out << "degree " << d << " generic representation\n";
        out << "nice: " << (report.nice ? "true" : "false") << "\n";
        for (const auto& w : report.witnesses) {
            out << "  ";
            if (w.matrix != 0) out << w.matrix << "[" << w.i << "," << w.j << "] = ";
            out << w.value << " (" << to_string(w.reason) << ")\n";
        }
    }
    return ok;
}

inline int dispatch(const Config& cfg, std::ostream& out) {
    if (cfg.command == "nice") return nice(cfg, out);
    if (cfg.command == "selftest") {
        SelftestOptions opt;
        opt.trials = cfg.trials;
        opt.seed = cfg.seed;
        if (!cfg.ring.empty()) opt.ring = parse_ring_spec(cfg.ring);
        return run_selftest(opt, out);
    }
    const RingSpec spec = parse_ring_spec(cfg.ring);
    if (cfg.command == "pf" && spec.kind == RingSpec::Kind::symbolic)
        throw InvalidRing("the sym ring is not available for pf");
    return visit_ring(spec, [&](const auto& ring) -> int {
        if (cfg.command == "represent") return represent(cfg, ring, out);
        if (cfg.command == "verify") return verify(cfg, ring, out);
        return pf(cfg, ring, out);
    });
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Linear Pfaffian representations of ternary forms of degree <= 5", "pfrep"};
    app.require_subcommand(1);

    auto* rep = app.add_subcommand("represent", "build and print a representation of a form");
    rep->add_option("polynomial", cfg.polynomial, "homogeneous form in x, y, z")->required();
    rep->add_option("--ring", cfg.ring, "coefficient ring: int, rat, mod:n or sym");
    rep->add_option("--format", cfg.format, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));
    rep->add_option("--degree", cfg.degree, "degree (required for the zero form)");
    rep->add_option("-o,--output", cfg.output, "write the document to a file");

    auto* ver = app.add_subcommand("verify", "check a representation file against a form");
    ver->add_option("polynomial", cfg.polynomial, "homogeneous form in x, y, z")->required();
    ver->add_option("file", cfg.file, "representation JSON")->required();
    ver->add_option("--ring", cfg.ring, "coefficient ring: int, rat, mod:n or sym");
    ver->add_flag("--cross-check", cfg.cross_check, "also check det(M) = f^2");

    auto* pfc = app.add_subcommand("pf", "Pfaffian of a skew matrix given as JSON");
    pfc->add_option("file", cfg.file, "skew matrix JSON")->required();
    pfc->add_option("--ring", cfg.ring, "coefficient ring: int, rat or mod:n");

    auto* nic = app.add_subcommand("nice", "niceness verdict for the generic representation");
    nic->add_option("degree", cfg.degree, "degree 2..5")->required();
    nic->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* st = app.add_subcommand("selftest", "symbolic, randomized and Pfaffian identity suites");
    st->add_option("--ring", cfg.ring, "restrict ring trials to one ring (default: int, rat, mod:6, mod:2)");
    st->add_option("--trials", cfg.trials, "random trials per ring and degree")->check(CLI::PositiveNumber);
    st->add_option("--seed", cfg.seed, "random seed");

    int code = ok;
    std::string command = "none";
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        for (auto* sub : app.get_subcommands()) command = sub->get_name();
        cfg.command = command;
        if (command == "selftest" && st->count("--ring") == 0) cfg.ring.clear();
        code = detail::dispatch(cfg, out);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        code = ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        code = bad_input;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        code = bad_input;
    } catch (const UnsupportedDegree& e) {
        err << "unsupported degree: " << e.what() << "\n";
        code = unsupported;
    } catch (const DegreeError& e) {
        err << "degree error: " << e.what() << "\n";
        code = unsupported;
    } catch (const AmbiguousDegree& e) {
        err << "degree error: " << e.what() << "\n";
        code = unsupported;
    } catch (const ShapeError& e) {
        err << "shape error: " << e.what() << "\n";
        code = unsupported;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        code = bad_input;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        code = internal;
    }
    out << "status: " << detail::status_word(code) << " command=" << command << " exit=" << code << "\n";
    return code;
}

}  // namespace pfrep::cli

#endif
