#include "tropcone/io.hpp"

#include <algorithm>

namespace tropcone::io {

namespace {

int read_dim(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer())
        throw ParseError("document needs an integer \"dim\"");
    int dim = j["dim"].get<int>();
    if (dim < 1) throw ParseError("\"dim\" must be positive");
    return dim;
}

void expect_kind(const json& j, const std::string& kind) {
    if (!j.is_object() || !j.contains("kind") || j["kind"] != kind)
        throw ParseError("expected a document of kind \"" + kind + "\"");
}

std::map<int, Rational> side_from_json(const json& j, int dim, const char* name) {
    if (!j.is_object())
        throw ParseError(std::string("half-space \"") + name + "\" must be an object");
    std::map<int, Rational> side;
    for (const auto& [key, value] : j.items()) {
        int k;
        try {
            size_t pos = 0;
            k = std::stoi(key, &pos);
            if (pos != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw ParseError("half-space coefficient key is not an index: \"" + key + "\"");
        }
        if (k < 1 || k > dim) throw ParseError("half-space coefficient index out of range");
        if (!value.is_string()) throw ParseError("half-space coefficient must be a string");
        TropScalar s = scalar_from_string(value.get<std::string>());
        if (s.is_bottom())
            throw ParseError("half-space coefficients must be finite (omit the index instead)");
        side.emplace(k - 1, s.value());
    }
    return side;
}

json side_to_json(const std::map<int, Rational>& side) {
    json j = json::object();
    for (const auto& [k, q] : side) j[std::to_string(k + 1)] = q.get_str();
    return j;
}

std::vector<TropVector> vectors_from_json(const json& j, int dim, const char* name) {
    if (!j.is_array()) throw ParseError(std::string("\"") + name + "\" must be an array");
    std::vector<TropVector> out;
    for (const auto& row : j) out.push_back(vector_from_json(row, dim));
    return out;
}

} // namespace

json vector_to_json(const TropVector& v) {
    json j = json::array();
    for (const TropScalar& x : v) j.push_back(scalar_to_string(x));
    return j;
}

TropVector vector_from_json(const json& j, int dim) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw ParseError("vector must be an array of length dim");
    TropVector v;
    v.reserve(dim);
    for (const auto& entry : j) {
        if (!entry.is_string()) throw ParseError("vector entries must be scalar strings");
        v.push_back(scalar_from_string(entry.get<std::string>()));
    }
    return v;
}

json cone_to_json(const Cone& V) {
    json j;
    j["kind"] = "cone";
    j["dim"] = V.dim();
    json gens = json::array();
    for (const TropVector& g : canonical_rays(V)) gens.push_back(vector_to_json(g));
    j["generators"] = gens;
    return j;
}

Cone cone_from_json(const json& j) {
    expect_kind(j, "cone");
    int dim = read_dim(j);
    if (!j.contains("generators")) throw ParseError("cone document needs \"generators\"");
    return Cone(dim, vectors_from_json(j["generators"], dim, "generators"));
}

json point_to_json(const TropVector& x) {
    json j;
    j["kind"] = "point";
    j["dim"] = static_cast<int>(x.size());
    j["coords"] = vector_to_json(x);
    return j;
}

TropVector point_from_json(const json& j) {
    expect_kind(j, "point");
    int dim = read_dim(j);
    if (!j.contains("coords")) throw ParseError("point document needs \"coords\"");
    return vector_from_json(j["coords"], dim);
}

json halfspace_to_json(const HalfSpace& H) {
    json j;
    j["lhs"] = side_to_json(H.lhs());
    j["rhs"] = side_to_json(H.rhs());
    return j;
}

HalfSpace halfspace_from_json(const json& j, int dim) {
    if (!j.is_object() || !j.contains("lhs") || !j.contains("rhs"))
        throw ParseError("half-space needs \"lhs\" and \"rhs\" objects");
    return HalfSpace(dim, side_from_json(j["lhs"], dim, "lhs"),
                     side_from_json(j["rhs"], dim, "rhs"));
}

json halfspaces_to_json(const std::vector<HalfSpace>& hs, int dim) {
    json j;
    j["kind"] = "halfspaces";
    j["dim"] = dim;
    json list = json::array();
    std::vector<HalfSpace> sorted = hs;
    sort_halfspaces(sorted);
    for (const HalfSpace& H : sorted) list.push_back(halfspace_to_json(H));
    j["halfspaces"] = list;
    return j;
}

std::vector<HalfSpace> halfspaces_from_json(const json& j, int* dim_out) {
    expect_kind(j, "halfspaces");
    int dim = read_dim(j);
    if (dim_out) *dim_out = dim;
    if (!j.contains("halfspaces") || !j["halfspaces"].is_array())
        throw ParseError("halfspaces document needs a \"halfspaces\" array");
    std::vector<HalfSpace> out;
    for (const auto& h : j["halfspaces"]) out.push_back(halfspace_from_json(h, dim));
    return out;
}

json polyhedron_to_json(const Polyhedron& P) {
    json j;
    j["kind"] = "polyhedron";
    j["dim"] = P.dim;
    std::vector<TropVector> points = P.points;
    std::sort(points.begin(), points.end(), lex_less);
    json pts = json::array();
    for (const auto& z : points) pts.push_back(vector_to_json(z));
    j["points"] = pts;
    std::vector<TropVector> rays;
    for (const auto& y : P.rays) rays.push_back(normalize_projective(y));
    std::sort(rays.begin(), rays.end(), lex_less);
    json rys = json::array();
    for (const auto& y : rays) rys.push_back(vector_to_json(y));
    j["rays"] = rys;
    return j;
}

Polyhedron polyhedron_from_json(const json& j) {
    expect_kind(j, "polyhedron");
    int dim = read_dim(j);
    std::vector<TropVector> points, rays;
    if (j.contains("points")) points = vectors_from_json(j["points"], dim, "points");
    if (j.contains("rays")) rays = vectors_from_json(j["rays"], dim, "rays");
    return Polyhedron(dim, std::move(points), std::move(rays));
}

json polar_to_json(const std::vector<PolarVector>& W, int dim) {
    json j;
    j["kind"] = "polar";
    j["dim"] = dim;
    json vecs = json::array();
    for (const PolarVector& w : W) {
        json entry;
        entry["lhs"] = vector_to_json(w.a);
        entry["rhs"] = vector_to_json(w.b);
        vecs.push_back(entry);
    }
    j["vectors"] = vecs;
    return j;
}

std::vector<PolarVector> polar_from_json(const json& j, int* dim_out) {
    expect_kind(j, "polar");
    int dim = read_dim(j);
    if (dim_out) *dim_out = dim;
    if (!j.contains("vectors") || !j["vectors"].is_array())
        throw ParseError("polar document needs a \"vectors\" array");
    std::vector<PolarVector> out;
    for (const auto& entry : j["vectors"]) {
        if (!entry.is_object() || !entry.contains("lhs") || !entry.contains("rhs"))
            throw ParseError("polar vector needs \"lhs\" and \"rhs\" arrays");
        out.push_back(PolarVector{vector_from_json(entry["lhs"], dim),
                                  vector_from_json(entry["rhs"], dim)});
    }
    return out;
}

std::vector<TropVector> canonical_rays(const Cone& V) {
    std::vector<TropVector> cols;
    for (int r = 0; r < V.num_generators(); ++r)
        cols.push_back(normalize_projective(V.generator(r)));
    std::sort(cols.begin(), cols.end(), lex_less);
    return cols;
}

void sort_halfspaces(std::vector<HalfSpace>& hs) {
    auto side_less = [](const std::map<int, Rational>& u, const std::map<int, Rational>& v) {
        auto it = u.begin();
        auto jt = v.begin();
        for (; it != u.end() && jt != v.end(); ++it, ++jt) {
            if (it->first != jt->first) return it->first < jt->first ? -1 : 1;
            if (it->second != jt->second) return it->second < jt->second ? -1 : 1;
        }
        if (it == u.end() && jt == v.end()) return 0;
        return it == u.end() ? -1 : 1;
    };
    std::sort(hs.begin(), hs.end(), [&](const HalfSpace& g, const HalfSpace& h) {
        int c = side_less(g.lhs(), h.lhs());
        if (c != 0) return c < 0;
        return side_less(g.rhs(), h.rhs()) < 0;
    });
}

} // namespace tropcone::io
