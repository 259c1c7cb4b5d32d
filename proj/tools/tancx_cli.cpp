// Command-line front end over the C interface.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tancx/tancx.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;

struct Config {
    std::string command;
    std::string input;
    std::string example;
    std::vector<std::size_t> dims;
    std::optional<int> max_level;
    std::optional<int> degree;
    std::optional<int> k;
    std::string format = "text";
    std::uint64_t seed = 20240601;
    bool witnesses = false;
    bool drop_face_zero = false;
};

struct Failure {
    std::string message;
};

void check(tcx_status status) {
    if (status != TCX_OK) throw Failure{std::string(tcx_status_name(status)) + ": " + tcx_last_error()};
}

struct SimplicialDeleter {
    void operator()(tcx_simplicial* s) const { tcx_simplicial_free(s); }
};
struct ComplexDeleter {
    void operator()(tcx_complex* c) const { tcx_complex_free(c); }
};
using Simplicial = std::unique_ptr<tcx_simplicial, SimplicialDeleter>;
using Complex = std::unique_ptr<tcx_complex, ComplexDeleter>;

json take_json(char* text) {
    std::unique_ptr<char, void (*)(char*)> owned(text, tcx_string_free);
    return json::parse(owned.get());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Failure{"cannot open '" + path + "'"};
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string tuple(const std::vector<std::size_t>& values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + std::to_string(values[i]);
    return out + ")";
}

struct Loaded {
    Simplicial s;
    json spec;  // null unless built from a preset
};

Loaded load_simplicial(const Config& cfg) {
    Loaded out;
    tcx_simplicial* raw = nullptr;
    if (!cfg.example.empty()) {
        char* spec = nullptr;
        check(tcx_example_build(cfg.example.c_str(), cfg.dims.empty() ? nullptr : cfg.dims.data(), cfg.dims.size(),
                                cfg.max_level.value_or(-1), &raw, &spec));
        out.spec = take_json(spec);
    } else if (!cfg.input.empty()) {
        check(tcx_simplicial_from_json(read_file(cfg.input).c_str(), &raw));
    } else {
        throw Failure{cfg.command + " needs --input FILE or --example NAME"};
    }
    out.s.reset(raw);
    return out;
}

json complex_json(const tcx_complex* c) {
    char* text = nullptr;
    check(tcx_complex_to_json(c, &text));
    return take_json(text);
}

void print(const Config& cfg, const json& report, const std::string& text) {
    if (cfg.format == "structured") {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

json with_header(const Config& cfg, json body) {
    body["command"] = cfg.command;
    body["formatVersion"] = 1;
    return body;
}

int run_validate(const Config& cfg) {
    const Loaded in = load_simplicial(cfg);
    int valid = 0;
    char* text = nullptr;
    check(tcx_validate(in.s.get(), &valid, &text));
    const json report = take_json(text);
    std::string out = valid ? "valid: all simplicial identities hold\n" : "invalid:\n";
    for (const auto& v : report["violations"]) out += "  " + v["identity"].get<std::string>() + "\n";
    print(cfg, with_header(cfg, report), out);
    return valid ? kExitOk : kExitNegative;
}

int run_kan(const Config& cfg) {
    const Loaded in = load_simplicial(cfg);
    const int degree = cfg.degree.value_or(tcx_simplicial_max_level(in.s.get()));
    int verdict = 0;
    char* text = nullptr;
    check(tcx_kan(in.s.get(), degree, &verdict, &text));
    const json report = take_json(text);
    std::string out;
    for (const auto& h : report["horns"]) {
        out += "p^" + std::to_string(h["level"].get<int>()) + "_" + std::to_string(h["missing"].get<int>()) +
               ": horn dim " + std::to_string(h["hornDim"].get<std::size_t>()) + ", rank " +
               std::to_string(h["rank"].get<std::size_t>()) + (h["surjective"].get<bool>() ? ", onto" : ", not onto") +
               (h["injective"].get<bool>() ? ", one-to-one" : "") + "\n";
    }
    out += std::string("Kan verdict (degree ") + std::to_string(degree) + "): " + (verdict ? "yes" : "no") + "\n";
    print(cfg, with_header(cfg, report), out);
    return verdict ? kExitOk : kExitNegative;
}

int run_complex_report(const Config& cfg, bool tangent) {
    const Loaded in = load_simplicial(cfg);
    tcx_complex* raw = nullptr;
    check(tangent ? tcx_tangent(in.s.get(), &raw) : tcx_moore(in.s.get(), &raw));
    const Complex c(raw);
    json report = complex_json(c.get());
    report.erase("formatVersion");
    const auto dims = report["dims"].get<std::vector<std::size_t>>();
    std::string out = std::string(tangent ? "tangent" : "Moore") + " complex dims " + tuple(dims) + "\n";
    if (!in.spec.is_null()) {
        report["example"] = in.spec;
        const auto expected = in.spec["expectedTangentDims"].get<std::vector<std::size_t>>();
        if (tangent) {
            report["matchesExpectation"] = dims == expected;
            out += "expected " + tuple(expected) + (dims == expected ? " (match)" : " (MISMATCH)") +
                   (in.spec["documentationOnly"].get<bool>() ? " [documentation only]" : "") + "\n";
        }
    }
    print(cfg, with_header(cfg, report), out);
    return kExitOk;
}

int run_hom_limit(const Config& cfg) {
    const Loaded in = load_simplicial(cfg);
    const int cutoff = cfg.max_level.value_or(tcx_simplicial_max_level(in.s.get()));
    tcx_hom_limit_options options{cfg.witnesses ? 1 : 0, cfg.drop_face_zero ? 1 : 0};
    char* text = nullptr;
    check(tcx_hom_limit(in.s.get(), cutoff, &options, &text));
    json report = take_json(text);
    std::string out = "cutoff " + std::to_string(cutoff) + ", degree dims " +
                      tuple(report["dims"].get<std::vector<std::size_t>>()) + "\n";
    out += "cutoff " + std::to_string(cutoff - 1) + ", degree dims " +
           tuple(report["previousCutoffDims"].get<std::vector<std::size_t>>()) + "\n";
    out += std::string("stable: ") + (report["stable"].get<bool>() ? "yes" : "no") + "\n";
    if (cfg.witnesses) {
        for (const auto& d : report["degrees"]) {
            if (!d.contains("witnesses")) continue;
            out += "degree " + std::to_string(d["degree"].get<int>()) + " witnesses:\n";
            for (const auto& w : d["witnesses"]) out += "  " + w.dump() + "\n";
        }
    }
    print(cfg, with_header(cfg, report), out);
    return kExitOk;
}

int run_dk_realize(const Config& cfg) {
    tcx_complex* raw = nullptr;
    if (!cfg.input.empty()) {
        check(tcx_complex_from_json(read_file(cfg.input).c_str(), &raw));
    } else if (!cfg.dims.empty()) {
        json diffs = json::array({json::array()});
        for (std::size_t k = 1; k < cfg.dims.size(); ++k)
            diffs.push_back(json(cfg.dims[k - 1], json(std::vector<std::string>(cfg.dims[k], "0"))));
        const json doc{{"formatVersion", 1}, {"dims", cfg.dims}, {"diffs", diffs}};
        check(tcx_complex_from_json(doc.dump().c_str(), &raw));
    } else {
        throw Failure{"dk-realize needs --input FILE or --dim LIST"};
    }
    const Complex c(raw);
    const int level = cfg.max_level.value_or(tcx_complex_length(c.get()) + 2);
    tcx_simplicial* sraw = nullptr;
    check(tcx_dk_realize(c.get(), level, &sraw));
    const Simplicial s(sraw);
    char* text = nullptr;
    check(tcx_simplicial_to_json(s.get(), &text));
    const json doc = take_json(text);
    print(cfg, doc, "realized to level " + std::to_string(level) + ", dims " +
                        tuple(doc["dims"].get<std::vector<std::size_t>>()) + "\n");
    return kExitOk;
}

int run_dk_normalize(const Config& cfg) {
    const Loaded in = load_simplicial(cfg);
    tcx_complex* raw = nullptr;
    check(tcx_moore(in.s.get(), &raw));
    const Complex c(raw);
    const json doc = complex_json(c.get());
    print(cfg, doc, "normalized complex dims " + tuple(doc["dims"].get<std::vector<std::size_t>>()) + "\n");
    return kExitOk;
}

int run_solve(const Config& cfg) {
    if (cfg.input.empty()) throw Failure{"solve needs --input FILE"};
    const std::string text = read_file(cfg.input);
    if (cfg.k) {
        const json doc = json::parse(text, nullptr, false);
        if (doc.is_object() && doc.contains("k") && doc["k"] != *cfg.k)
            throw Failure{"--k " + std::to_string(*cfg.k) + " disagrees with the file's k = " + doc["k"].dump()};
    }
    int compatible = 0;
    char* raw = nullptr;
    check(tcx_solve(text.c_str(), &compatible, &raw));
    const json report = take_json(raw);
    std::string out;
    if (compatible) {
        out = "compatible; reconstructed components:\n";
        for (const auto& c : report["solution"]["components"]) {
            std::string index = "(";
            for (std::size_t i = 0; i < c["index"].size(); ++i) index += (i ? "," : "") + c["index"][i].dump();
            index += ")";
            std::string value;
            for (std::size_t i = 0; i < c["value"].size(); ++i)
                value += (i ? " " : "") + c["value"][i].get<std::string>();
            out += "  w^" + index + " = " + value + "\n";
        }
    } else {
        out = "incompatible: " + report["violation"]["equation"].get<std::string>() + " fails at index " +
              report["violation"]["index"].dump() + "\n";
    }
    print(cfg, with_header(cfg, report), out);
    return compatible ? kExitOk : kExitNegative;
}

int run_example(const Config& cfg) {
    if (cfg.example.empty()) {
        char* raw = nullptr;
        check(tcx_example_catalogue(&raw));
        const json list = take_json(raw);
        std::string out;
        for (const auto& e : list["examples"]) {
            out += e["name"].get<std::string>() + ": " + e["summary"].get<std::string>() + "; expected tangent dims " +
                   tuple(e["expectedTangentDims"].get<std::vector<std::size_t>>()) +
                   (e["documentationOnly"].get<bool>() ? " [documentation only]" : "") + "\n";
        }
        print(cfg, with_header(cfg, list), out);
        return kExitOk;
    }
    const Loaded in = load_simplicial(cfg);
    char* raw = nullptr;
    check(tcx_simplicial_to_json(in.s.get(), &raw));
    const json doc = take_json(raw);
    print(cfg, doc, in.spec["name"].get<std::string>() + ": dims " +
                        tuple(doc["dims"].get<std::vector<std::size_t>>()) + ", expected tangent dims " +
                        tuple(in.spec["expectedTangentDims"].get<std::vector<std::size_t>>()) + "\n");
    return kExitOk;
}

int run_selftest(const Config& cfg) {
    int ok = 0;
    char* raw = nullptr;
    check(tcx_selftest(cfg.seed, &ok, &raw));
    const json report = take_json(raw);
    std::string out;
    for (const auto& s : report["suites"]) {
        out += s["name"].get<std::string>() + ": " + std::to_string(s["cases"].get<std::size_t>()) + " cases, " +
               std::to_string(s["failures"].get<std::size_t>()) + " failures";
        if (!s["firstFailure"].get<std::string>().empty()) out += " (first: " + s["firstFailure"].get<std::string>() + ")";
        out += "\n";
    }
    out += ok ? "selftest passed\n" : "selftest FAILED\n";
    print(cfg, with_header(cfg, report), out);
    return ok ? kExitOk : kExitNegative;
}

int dispatch(const Config& cfg) {
    if (cfg.command == "validate") return run_validate(cfg);
    if (cfg.command == "kan") return run_kan(cfg);
    if (cfg.command == "moore") return run_complex_report(cfg, false);
    if (cfg.command == "tangent") return run_complex_report(cfg, true);
    if (cfg.command == "hom-limit") return run_hom_limit(cfg);
    if (cfg.command == "dk-realize") return run_dk_realize(cfg);
    if (cfg.command == "dk-normalize") return run_dk_normalize(cfg);
    if (cfg.command == "solve") return run_solve(cfg);
    if (cfg.command == "example") return run_example(cfg);
    return run_selftest(cfg);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tangent complexes of simplicial vector spaces"};
    Config cfg;
    app.add_option("command", cfg.command, "What to run")
        ->required()
        ->check(CLI::IsMember({"validate", "kan", "moore", "tangent", "hom-limit", "dk-realize", "dk-normalize",
                               "solve", "example", "selftest"}));
    app.add_option("--input", cfg.input, "Input document (simplicial object, complex or family)");
    app.add_option("--example", cfg.example, "Named preset instead of an input file");
    app.add_option("--dim", cfg.dims, "Preset or complex dimensions, comma separated")->delimiter(',');
    app.add_option("--max-level", cfg.max_level, "Preset/realization level; hom-limit cutoff");
    app.add_option("--degree", cfg.degree, "Kan degree n (default: the max level)");
    app.add_option("--k", cfg.k, "Expected k of the family passed to solve");
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--seed", cfg.seed, "Seed of the randomized selftest suites");
    app.add_flag("--witnesses", cfg.witnesses, "Include solution bases in hom-limit reports");
    app.add_flag("--drop-face-zero", cfg.drop_face_zero, "hom-limit without the i = 0 face equations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }
    try {
        return dispatch(cfg);
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
