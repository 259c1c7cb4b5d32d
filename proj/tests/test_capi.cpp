#include <catch_amalgamated.hpp>

#include <cstring>
#include <string>

#include "tancx/tancx.h"

namespace {

std::string take(char* text) {
    std::string out = text ? text : "";
    tcx_string_free(text);
    return out;
}

}  // namespace

TEST_CASE("presets build and analyse through the C interface", "[capi]") {
    tcx_simplicial* s = nullptr;
    const size_t dims[] = {2};
    char* spec = nullptr;
    REQUIRE(tcx_example_build("nerve-group", dims, 1, 3, &s, &spec) == TCX_OK);
    CHECK(take(spec).find("\"expectedTangentDims\"") != std::string::npos);
    CHECK(tcx_simplicial_max_level(s) == 3);
    CHECK(tcx_simplicial_dim(s, 2) == 4);
    CHECK(tcx_simplicial_dim(s, 9) == 0);

    tcx_complex* t = nullptr;
    REQUIRE(tcx_tangent(s, &t) == TCX_OK);
    CHECK(tcx_complex_length(t) == 3);
    CHECK(tcx_complex_dim(t, 0) == 0);
    CHECK(tcx_complex_dim(t, 1) == 2);
    CHECK(tcx_complex_dim(t, 2) == 0);
    tcx_complex_free(t);

    int valid = 0;
    char* report = nullptr;
    REQUIRE(tcx_validate(s, &valid, &report) == TCX_OK);
    CHECK(valid == 1);
    CHECK(take(report).find("\"valid\": true") != std::string::npos);

    int verdict = 0;
    REQUIRE(tcx_kan(s, 1, &verdict, nullptr) == TCX_OK);
    CHECK(verdict == 1);

    tcx_hom_limit_options options{1, 0};
    REQUIRE(tcx_hom_limit(s, 3, &options, &report) == TCX_OK);
    const std::string hom = take(report);
    CHECK(hom.find("\"witnesses\"") != std::string::npos);
    CHECK(hom.find("\"stable\": true") != std::string::npos);

    tcx_simplicial* w = nullptr;
    REQUIRE(tcx_wbar(s, &w) == TCX_OK);
    CHECK(tcx_simplicial_dim(w, 3) == 6);
    tcx_simplicial_free(w);
    tcx_simplicial_free(s);
}

TEST_CASE("documents round-trip through the C interface", "[capi]") {
    const char* doc = R"({"formatVersion":1,"dims":[0,1,1],"diffs":[[],[],[["0"]]]})";
    tcx_complex* c = nullptr;
    REQUIRE(tcx_complex_from_json(doc, &c) == TCX_OK);
    tcx_simplicial* s = nullptr;
    REQUIRE(tcx_dk_realize(c, 3, &s) == TCX_OK);
    char* text = nullptr;
    REQUIRE(tcx_simplicial_to_json(s, &text) == TCX_OK);
    tcx_simplicial* again = nullptr;
    REQUIRE(tcx_simplicial_from_json(text, &again) == TCX_OK);
    tcx_string_free(text);

    tcx_complex* m = nullptr;
    REQUIRE(tcx_moore(again, &m) == TCX_OK);
    char* mt = nullptr;
    REQUIRE(tcx_complex_to_json(m, &mt) == TCX_OK);
    CHECK(take(mt).find("\"dims\": [\n    0,\n    1,\n    1,\n    0\n  ]") != std::string::npos);
    tcx_complex_free(m);
    tcx_simplicial_free(again);
    tcx_simplicial_free(s);
    tcx_complex_free(c);
}

TEST_CASE("failures map to status codes and a message", "[capi]") {
    tcx_simplicial* s = nullptr;
    CHECK(tcx_simplicial_from_json("{", &s) == TCX_ERR_PARSE);
    CHECK(s == nullptr);
    CHECK(std::strlen(tcx_last_error()) > 0);

    CHECK(tcx_example_build("nope", nullptr, 0, -1, &s, nullptr) == TCX_ERR_INVALID_ARGUMENT);
    CHECK(std::string(tcx_last_error()).find("unknown example") != std::string::npos);

    tcx_complex* c = nullptr;
    const char* bad = R"({"formatVersion":1,"dims":[1,1,1],"diffs":[[],[["1"]],[["1"]]]})";
    CHECK(tcx_complex_from_json(bad, &c) == TCX_ERR_INVALID_COMPLEX);

    REQUIRE(tcx_example_build("point", nullptr, 0, -1, &s, nullptr) == TCX_OK);
    char* report = nullptr;
    CHECK(tcx_hom_limit(s, 9, nullptr, &report) == TCX_ERR_OUT_OF_RANGE);
    CHECK(tcx_validate(nullptr, nullptr, nullptr) == TCX_ERR_INVALID_ARGUMENT);
    tcx_simplicial_free(s);

    CHECK(std::string(tcx_status_name(TCX_ERR_SHAPE)) == "shape mismatch");
    tcx_simplicial_free(nullptr);
    tcx_string_free(nullptr);
}

TEST_CASE("solve and selftest through the C interface", "[capi]") {
    const char* family = R"({"formatVersion":1,"k":2,"fiberDim":1,"members":[
        {"components":[{"index":[1],"value":["1"]}]},
        {"components":[{"index":[1],"value":["3"]}]}]})";
    int compatible = 0;
    char* report = nullptr;
    REQUIRE(tcx_solve(family, &compatible, &report) == TCX_OK);
    CHECK(compatible == 1);
    const std::string solved = take(report);
    CHECK(solved.find("\"2\"") != std::string::npos);

    int ok = 0;
    REQUIRE(tcx_selftest(3, &ok, &report) == TCX_OK);
    CHECK(ok == 1);
    tcx_string_free(report);
}
