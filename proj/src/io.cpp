#include "tancx/io.hpp"

#include <fstream>
#include <sstream>

#include "tancx/error.hpp"

namespace tancx::io {

namespace {

std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }
std::string field(const std::string& where, const char* name) {
    return where.empty() ? std::string(name) : where + "." + name;
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError((where.empty() ? std::string("document") : where) + ": " + what);
}

const json& require(const json& j, const char* name, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    auto it = j.find(name);
    if (it == j.end()) fail(field(where, name), "missing field");
    return *it;
}

const json& require_array(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array");
    return j;
}

std::size_t size_from_json(const json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() < 0) fail(where, "expected a non-negative integer");
    return j.get<std::size_t>();
}

int int_from_json(const json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    const auto v = j.get<long long>();
    if (v < -1000000 || v > 1000000) fail(where, "integer out of range");
    return static_cast<int>(v);
}

void check_version(const json& j) {
    const json& v = require(j, "formatVersion", "");
    if (int_from_json(v, "formatVersion") != kFormatVersion) {
        fail("formatVersion", "unsupported version " + v.dump() + " (expected " +
                                  std::to_string(kFormatVersion) + ")");
    }
}

std::vector<std::size_t> dims_from_json(const json& j, const std::string& where) {
    require_array(j, where);
    std::vector<std::size_t> dims;
    for (std::size_t i = 0; i < j.size(); ++i) dims.push_back(size_from_json(j[i], at(where, i)));
    return dims;
}

json index_to_json(const MultiIndex& index) { return json(index.entries()); }

}  // namespace

json parse_document(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // Translate the byte offset into a line and column.
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        // Keep only the description after nlohmann's own position prefix.
        std::string detail = e.what();
        if (const auto cut = detail.find(": ", detail.find("column")); cut != std::string::npos)
            detail = detail.substr(cut + 2);
        throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + detail);
    }
}

json read_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_document(buffer.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

json to_json(const Rat& value) { return tancx::to_string(value); }

json to_json(const Vec& v) {
    json out = json::array();
    for (const Rat& x : v) out.push_back(to_json(x));
    return out;
}

json to_json(const Mat& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (const Rat& x : m.row(r)) row.push_back(to_json(x));
        out.push_back(std::move(row));
    }
    return out;
}

Rat rat_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rat(j.dump());
    if (!j.is_string()) fail(where, "expected a rational string or an integer");
    try {
        return parse_rat(j.get<std::string>());
    } catch (const Error& e) {
        fail(where, e.what());
    }
}

Vec vec_from_json(const json& j, std::size_t length, const std::string& where) {
    require_array(j, where);
    if (j.size() != length) {
        fail(where, "expected " + std::to_string(length) + " entries, got " + std::to_string(j.size()));
    }
    Vec v;
    v.reserve(length);
    for (std::size_t i = 0; i < length; ++i) v.push_back(rat_from_json(j[i], at(where, i)));
    return v;
}

Mat mat_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
    require_array(j, where);
    if (j.size() != rows) {
        fail(where, "expected " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix, got " +
                        std::to_string(j.size()) + " rows");
    }
    Mat m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const Vec row = vec_from_json(j[r], cols, at(where, r));
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
    }
    return m;
}

// ------------------------------------------------------------- simplicial

json to_json(const SimplicialVS& s) {
    json faces = json::array(), degens = json::array();
    for (const auto& level : s.faces()) {
        json l = json::array();
        for (const Mat& m : level) l.push_back(to_json(m));
        faces.push_back(std::move(l));
    }
    for (const auto& level : s.degens()) {
        json l = json::array();
        for (const Mat& m : level) l.push_back(to_json(m));
        degens.push_back(std::move(l));
    }
    return json{{"formatVersion", kFormatVersion},
                {"maxLevel", s.max_level()},
                {"dims", s.dims()},
                {"faces", std::move(faces)},
                {"degens", std::move(degens)}};
}

SimplicialVS simplicial_from_json(const json& j) {
    check_version(j);
    const int max_level = int_from_json(require(j, "maxLevel", ""), "maxLevel");
    if (max_level < 0 || max_level > 16) fail("maxLevel", "must lie in [0, 16]");
    const auto n = static_cast<std::size_t>(max_level);
    const auto dims = dims_from_json(require(j, "dims", ""), "dims");
    if (dims.size() != n + 1) {
        fail("dims", "expected maxLevel + 1 = " + std::to_string(n + 1) + " entries, got " +
                         std::to_string(dims.size()));
    }

    const json& jf = require_array(require(j, "faces", ""), "faces");
    if (jf.size() != n + 1) fail("faces", "expected " + std::to_string(n + 1) + " levels");
    std::vector<std::vector<Mat>> faces(n + 1);
    if (!require_array(jf[0], "faces[0]").empty()) fail("faces[0]", "level 0 has no faces; expected []");
    for (std::size_t l = 1; l <= n; ++l) {
        const std::string where = at("faces", l);
        const json& level = require_array(jf[l], where);
        if (level.size() != l + 1) fail(where, "expected " + std::to_string(l + 1) + " face maps");
        for (std::size_t i = 0; i <= l; ++i)
            faces[l].push_back(mat_from_json(level[i], dims[l - 1], dims[l], at(where, i)));
    }

    const json& jd = require_array(require(j, "degens", ""), "degens");
    if (jd.size() != n) fail("degens", "expected " + std::to_string(n) + " levels");
    std::vector<std::vector<Mat>> degens(n);
    for (std::size_t l = 0; l < n; ++l) {
        const std::string where = at("degens", l);
        const json& level = require_array(jd[l], where);
        if (level.size() != l + 1) fail(where, "expected " + std::to_string(l + 1) + " degeneracy maps");
        for (std::size_t i = 0; i <= l; ++i)
            degens[l].push_back(mat_from_json(level[i], dims[l + 1], dims[l], at(where, i)));
    }
    return SimplicialVS(dims, std::move(faces), std::move(degens));
}

json to_json(const ChainComplex& c) {
    json diffs = json::array();
    for (const Mat& m : c.diffs()) diffs.push_back(to_json(m));
    return json{{"formatVersion", kFormatVersion}, {"dims", c.dims()}, {"diffs", std::move(diffs)}};
}

ChainComplex complex_from_json(const json& j) {
    check_version(j);
    const auto dims = dims_from_json(require(j, "dims", ""), "dims");
    if (dims.empty()) fail("dims", "a complex needs at least degree 0");
    const json& jd = require_array(require(j, "diffs", ""), "diffs");
    if (jd.size() != dims.size()) fail("diffs", "expected " + std::to_string(dims.size()) + " entries");
    if (!require_array(jd[0], "diffs[0]").empty()) fail("diffs[0]", "degree 0 has no differential; expected []");
    std::vector<Mat> diffs{Mat(0, dims[0])};
    for (std::size_t k = 1; k < dims.size(); ++k) diffs.push_back(mat_from_json(jd[k], dims[k - 1], dims[k], at("diffs", k)));
    return ChainComplex(dims, std::move(diffs));
}

// -------------------------------------------------------------- families

json to_json(const TanFamily& f) {
    json components = json::array();
    for (const MultiIndex& index : all_subsets(f.ambient())) {
        if (f.truncated() && index.is_full()) continue;
        components.push_back({{"index", index_to_json(index)}, {"value", to_json(f.at_mask(index.mask()))}});
    }
    return json{{"ambient", f.ambient()},
                {"fiberDim", f.fiber_dim()},
                {"truncated", f.truncated()},
                {"components", std::move(components)}};
}

namespace {

void read_components(TanFamily& f, const json& j, const std::string& where) {
    const std::string cw = field(where, "components");
    const json& list = require_array(require(j, "components", where), cw);
    for (std::size_t c = 0; c < list.size(); ++c) {
        const std::string here = at(cw, c);
        const json& jidx = require_array(require(list[c], "index", here), field(here, "index"));
        std::vector<int> entries;
        for (std::size_t e = 0; e < jidx.size(); ++e)
            entries.push_back(int_from_json(jidx[e], at(field(here, "index"), e)));
        try {
            MultiIndex index(entries, f.ambient());
            f.set(index, vec_from_json(require(list[c], "value", here), f.fiber_dim(), field(here, "value")));
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            fail(here, e.what());
        }
    }
}

}  // namespace

TanFamily family_from_json(const json& j, const std::string& where) {
    const int ambient = int_from_json(require(j, "ambient", where), field(where, "ambient"));
    const std::size_t fd = size_from_json(require(j, "fiberDim", where), field(where, "fiberDim"));
    bool truncated = false;
    if (auto it = j.find("truncated"); it != j.end()) {
        if (!it->is_boolean()) fail(field(where, "truncated"), "expected a boolean");
        truncated = it->get<bool>();
    }
    if (ambient < 0 || ambient > 12) fail(field(where, "ambient"), "must lie in [0, 12]");
    TanFamily f(ambient, fd, truncated);
    read_components(f, j, where);
    return f;
}

json to_json(const CompatFamily& f) {
    json members = json::array();
    for (const TanFamily& m : f.members) members.push_back(to_json(m));
    return json{{"formatVersion", kFormatVersion},
                {"k", f.k},
                {"fiberDim", f.fiber_dim()},
                {"members", std::move(members)}};
}

CompatFamily compat_family_from_json(const json& j) {
    check_version(j);
    CompatFamily f;
    f.k = int_from_json(require(j, "k", ""), "k");
    if (f.k < 1 || f.k > 12) fail("k", "must lie in [1, 12]");
    const std::size_t fd = size_from_json(require(j, "fiberDim", ""), "fiberDim");
    const json& members = require_array(require(j, "members", ""), "members");
    if (members.size() != static_cast<std::size_t>(f.k)) {
        fail("members", "expected k = " + std::to_string(f.k) + " members, got " + std::to_string(members.size()));
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
        const std::string where = at("members", i);
        if (members[i].contains("ambient")) {
            TanFamily m = family_from_json(members[i], where);
            if (m.ambient() != f.k - 1 || m.fiber_dim() != fd || m.truncated()) {
                fail(where, "member must be an untruncated family of ambient k-1 and the common fiber dimension");
            }
            f.members.push_back(std::move(m));
        } else {
            TanFamily m(f.k - 1, fd);
            read_components(m, members[i], where);
            f.members.push_back(std::move(m));
        }
    }
    return f;
}

// --------------------------------------------------------------- reports

json to_json(const ValidationReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations) {
        const char* kind = v.kind == IdentityKind::FaceFace     ? "face-face"
                           : v.kind == IdentityKind::DegenDegen ? "degeneracy-degeneracy"
                                                                : "face-degeneracy";
        violations.push_back(
            {{"kind", kind}, {"level", v.level}, {"i", v.i}, {"j", v.j}, {"identity", v.describe()}});
    }
    return json{{"valid", r.ok()}, {"violations", std::move(violations)}};
}

json to_json(const KanReport& r) {
    json horns = json::array();
    for (const auto& h : r.horns) {
        horns.push_back({{"level", h.level},
                         {"missing", h.missing},
                         {"hornDim", h.horn_dim},
                         {"simplexDim", h.simplex_dim},
                         {"rank", h.rank},
                         {"surjective", h.surjective},
                         {"injective", h.injective}});
    }
    return json{{"degree", r.degree}, {"maxLevel", r.max_level}, {"verdict", r.verdict}, {"horns", std::move(horns)}};
}

json to_json(const HomLimitReport& r, const SimplicialVS& s) {
    json degrees = json::array();
    for (const auto& d : r.degrees) {
        json entry{{"degree", d.degree}, {"unknowns", d.unknowns}, {"equations", d.equations}, {"dim", d.dim}};
        if (!d.witnesses.empty()) {
            json layout = json::array();
            for (const auto& slot : hom_limit_layout(s, r.cutoff, d.degree))
                layout.push_back({{"level", slot.level}, {"index", index_to_json(slot.index)}, {"offset", slot.offset}});
            json witnesses = json::array();
            for (const Vec& w : d.witnesses) witnesses.push_back(to_json(w));
            entry["layout"] = std::move(layout);
            entry["witnesses"] = std::move(witnesses);
        }
        degrees.push_back(std::move(entry));
    }
    return json{{"cutoff", r.cutoff},
                {"dims", r.dims()},
                {"previousCutoffDims", r.previous},
                {"stable", r.stable},
                {"degrees", std::move(degrees)}};
}

json to_json(const ExampleSpec& spec) {
    return json{{"name", spec.name},
                {"summary", spec.summary},
                {"dims", spec.dims},
                {"maxLevel", spec.max_level},
                {"expectedTangentDims", spec.expected_tangent},
                {"documentationOnly", spec.documentation_only}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace tancx::io
