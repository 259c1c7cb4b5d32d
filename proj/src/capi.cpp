#include "tancx/tancx.h"

#include <cstring>
#include <new>
#include <string>

#include "tancx/error.hpp"
#include "tancx/examples.hpp"
#include "tancx/io.hpp"
#include "tancx/selftest.hpp"
#include "tancx/simplicial.hpp"
#include "tancx/tangent.hpp"

struct tcx_simplicial {
    tancx::SimplicialVS value;
};

struct tcx_complex {
    tancx::ChainComplex value;
};

namespace {

using tancx::io::json;

thread_local std::string last_error;

char* copy_out(const std::string& text) {
    char* out = new char[text.size() + 1];
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

void emit(char** out, const json& j) {
    if (out) *out = copy_out(tancx::io::dump(j));
}

tcx_status fail(tcx_status status, const char* what) {
    last_error = what;
    return status;
}

// Runs `body`, mapping exceptions onto status codes.
template <class F>
tcx_status guarded(F&& body) {
    try {
        last_error.clear();
        body();
        return TCX_OK;
    } catch (const tancx::ParseError& e) {
        return fail(TCX_ERR_PARSE, e.what());
    } catch (const tancx::ShapeError& e) {
        return fail(TCX_ERR_SHAPE, e.what());
    } catch (const tancx::OutOfRange& e) {
        return fail(TCX_ERR_OUT_OF_RANGE, e.what());
    } catch (const tancx::InvalidComplex& e) {
        return fail(TCX_ERR_INVALID_COMPLEX, e.what());
    } catch (const tancx::IncompatibleFamily& e) {
        return fail(TCX_ERR_INCOMPATIBLE, e.what());
    } catch (const tancx::UnderdeterminedSystem& e) {
        return fail(TCX_ERR_UNDERDETERMINED, e.what());
    } catch (const tancx::InvalidArgument& e) {
        return fail(TCX_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(TCX_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(TCX_ERR_INTERNAL, e.what());
    }
}

void require(bool condition, const char* what) {
    if (!condition) throw tancx::InvalidArgument(what);
}

}  // namespace

extern "C" {

const char* tcx_version(void) { return "1.0.0"; }

const char* tcx_status_name(tcx_status status) {
    switch (status) {
        case TCX_OK: return "ok";
        case TCX_ERR_INVALID_ARGUMENT: return "invalid argument";
        case TCX_ERR_OUT_OF_RANGE: return "out of range";
        case TCX_ERR_SHAPE: return "shape mismatch";
        case TCX_ERR_PARSE: return "parse error";
        case TCX_ERR_INVALID_COMPLEX: return "invalid complex";
        case TCX_ERR_INCOMPATIBLE: return "incompatible family";
        case TCX_ERR_UNDERDETERMINED: return "underdetermined system";
        case TCX_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* tcx_last_error(void) { return last_error.c_str(); }

void tcx_string_free(char* text) { delete[] text; }

tcx_status tcx_simplicial_from_json(const char* text, tcx_simplicial** out) {
    return guarded([&] {
        require(text && out, "null argument");
        auto s = tancx::io::simplicial_from_json(tancx::io::parse_document(text));
        *out = new tcx_simplicial{std::move(s)};
    });
}

tcx_status tcx_simplicial_to_json(const tcx_simplicial* s, char** out) {
    return guarded([&] {
        require(s && out, "null argument");
        emit(out, tancx::io::to_json(s->value));
    });
}

void tcx_simplicial_free(tcx_simplicial* s) { delete s; }

int tcx_simplicial_max_level(const tcx_simplicial* s) { return s ? s->value.max_level() : -1; }

size_t tcx_simplicial_dim(const tcx_simplicial* s, int level) {
    if (!s || level < 0 || level > s->value.max_level()) return 0;
    return s->value.dim(level);
}

tcx_status tcx_complex_from_json(const char* text, tcx_complex** out) {
    return guarded([&] {
        require(text && out, "null argument");
        auto c = tancx::io::complex_from_json(tancx::io::parse_document(text));
        *out = new tcx_complex{std::move(c)};
    });
}

tcx_status tcx_complex_to_json(const tcx_complex* c, char** out) {
    return guarded([&] {
        require(c && out, "null argument");
        emit(out, tancx::io::to_json(c->value));
    });
}

void tcx_complex_free(tcx_complex* c) { delete c; }

int tcx_complex_length(const tcx_complex* c) { return c ? c->value.length() : -1; }

size_t tcx_complex_dim(const tcx_complex* c, int degree) {
    if (!c || degree < 0 || degree > c->value.length()) return 0;
    return c->value.dim(degree);
}

tcx_status tcx_example_build(const char* name, const size_t* dims, size_t n_dims, int max_level,
                             tcx_simplicial** out, char** spec) {
    return guarded([&] {
        require(name && out, "null argument");
        std::optional<std::vector<std::size_t>> d;
        if (dims) d.emplace(dims, dims + n_dims);
        std::optional<int> level;
        if (max_level >= 0) level = max_level;
        const tancx::ExampleSpec resolved = tancx::make_example(name, d, level);
        auto built = tancx::build(resolved);
        if (spec) emit(spec, tancx::io::to_json(resolved));
        *out = new tcx_simplicial{std::move(built)};
    });
}

tcx_status tcx_example_catalogue(char** out) {
    return guarded([&] {
        require(out, "null argument");
        json list = json::array();
        for (const auto& spec : tancx::catalogue()) list.push_back(tancx::io::to_json(spec));
        emit(out, json{{"examples", std::move(list)}});
    });
}

tcx_status tcx_dk_realize(const tcx_complex* c, int max_level, tcx_simplicial** out) {
    return guarded([&] {
        require(c && out, "null argument");
        *out = new tcx_simplicial{tancx::dk_realize(c->value, max_level)};
    });
}

tcx_status tcx_moore(const tcx_simplicial* s, tcx_complex** out) {
    return guarded([&] {
        require(s && out, "null argument");
        *out = new tcx_complex{tancx::moore_complex(s->value)};
    });
}

tcx_status tcx_tangent(const tcx_simplicial* s, tcx_complex** out) {
    return guarded([&] {
        require(s && out, "null argument");
        *out = new tcx_complex{tancx::tangent_complex(s->value)};
    });
}

tcx_status tcx_wbar(const tcx_simplicial* s, tcx_simplicial** out) {
    return guarded([&] {
        require(s && out, "null argument");
        *out = new tcx_simplicial{tancx::wbar(s->value)};
    });
}

tcx_status tcx_validate(const tcx_simplicial* s, int* valid, char** report) {
    return guarded([&] {
        require(s && valid, "null argument");
        const auto r = tancx::validate(s->value);
        emit(report, tancx::io::to_json(r));
        *valid = r.ok() ? 1 : 0;
    });
}

tcx_status tcx_kan(const tcx_simplicial* s, int degree, int* verdict, char** report) {
    return guarded([&] {
        require(s && verdict, "null argument");
        const auto r = tancx::kan_report(s->value, degree);
        emit(report, tancx::io::to_json(r));
        *verdict = r.verdict ? 1 : 0;
    });
}

tcx_status tcx_hom_limit(const tcx_simplicial* s, int cutoff, const tcx_hom_limit_options* options,
                         char** report) {
    return guarded([&] {
        require(s && report, "null argument");
        tancx::HomLimitOptions opts;
        if (options) {
            opts.witnesses = options->witnesses != 0;
            opts.face_zero = options->drop_face_zero ? tancx::FaceZeroMode::Drop : tancx::FaceZeroMode::Restricted;
        }
        const auto r = tancx::hom_limit(s->value, cutoff, opts);
        emit(report, tancx::io::to_json(r, s->value));
    });
}

tcx_status tcx_solve(const char* family, int* compatible, char** report) {
    return guarded([&] {
        require(family && compatible && report, "null argument");
        const auto f = tancx::io::compat_family_from_json(tancx::io::parse_document(family));
        const auto check = tancx::check_compatible(f);
        json out{{"k", f.k}, {"fiberDim", f.fiber_dim()}, {"compatible", check.ok}};
        if (check.ok) {
            out["solution"] = tancx::io::to_json(tancx::reconstruct(f));
        } else {
            const auto& v = *check.first_violation;
            out["violation"] = {{"i", v.i},
                                {"j", v.j},
                                {"index", v.index.entries()},
                                {"equation", "sigma_" + std::to_string(v.i) + " v_" + std::to_string(v.j + 1) +
                                                 " = sigma_" + std::to_string(v.j) + " v_" + std::to_string(v.i)}};
        }
        emit(report, out);
        *compatible = check.ok ? 1 : 0;
    });
}

tcx_status tcx_selftest(uint64_t seed, int* ok, char** report) {
    return guarded([&] {
        require(ok, "null argument");
        const auto r = tancx::run_selftest(seed);
        json suites = json::array();
        for (const auto& suite : r.suites) {
            suites.push_back({{"name", suite.name},
                              {"cases", suite.cases},
                              {"failures", suite.failures},
                              {"firstFailure", suite.first_failure}});
        }
        emit(report, json{{"seed", r.seed}, {"ok", r.ok()}, {"suites", std::move(suites)}});
        *ok = r.ok() ? 1 : 0;
    });
}

}  // extern "C"
