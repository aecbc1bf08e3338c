#include "polyjoin/io.hpp"

#include <fstream>

namespace polyjoin::io {

namespace {

template <class T>
T get(const json& doc, const char* key, const char* what) {
    if (!doc.is_object() || !doc.contains(key)) throw FormatError(std::string(what) + ": missing \"" + key + "\"");
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception& e) {
        throw FormatError(std::string(what) + ": bad \"" + key + "\": " + e.what());
    }
}

}  // namespace

json read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

SimplicialComplex complex_from_json(const json& doc) {
    auto labels = get<std::vector<std::string>>(doc, "vertices", "complex");
    auto faces = get<std::vector<std::vector<std::string>>>(doc, "maximal_faces", "complex");
    try {
        return build_complex(labels, faces);
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("complex: ") + e.what());
    }
}

json complex_to_json(const SimplicialComplex& k, const std::string& name) {
    json faces = json::array();
    for (Simplex f : k.facets()) faces.push_back(k.ground().labels_of(f));
    return {{"name", name}, {"vertices", k.ground().labels()}, {"maximal_faces", faces}};
}

JoinSpec join_spec_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("K") || !doc.contains("entries") || !doc["entries"].is_array())
        throw FormatError("join spec: expected {\"K\", \"entries\"}");
    JoinSpec spec{complex_from_json(doc["K"]), {}};
    for (const auto& e : doc["entries"]) {
        const auto kind = get<std::string>(e, "kind", "join entry");
        const SimplicialComplex l = complex_from_json(get<json>(e, "L", "join entry"));
        if (kind == "simplex_top")
            spec.entries.push_back(JoinEntry::simplex_top(l));
        else if (kind == "empty_bottom")
            spec.entries.push_back(JoinEntry::empty_bottom(l));
        else if (kind == "general")
            spec.entries.push_back(JoinEntry::general(l, complex_from_json(get<json>(e, "Ki", "general join entry"))));
        else
            throw FormatError("join entry: unknown kind \"" + kind + "\"");
    }
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("join spec: ") + e.what());
    }
    return spec;
}

GradedDims dims_from_json(const json& doc) {
    if (!doc.is_object()) throw FormatError("graded dimensions: expected {\"<degree>\": rank}");
    GradedDims d;
    for (const auto& [deg, rank] : doc.items()) {
        try {
            std::size_t used = 0;
            const int degree = std::stoi(deg, &used);
            if (used != deg.size() || !rank.is_number_integer()) throw std::invalid_argument(deg);
            d.add(degree, rank.get<std::int64_t>());
        } catch (const std::exception&) {
            throw FormatError("graded dimensions: bad entry \"" + deg + "\"");
        }
    }
    return d;
}

json dims_to_json(const GradedDims& d) {
    json out = json::object();
    for (const auto& [deg, rank] : d.ranks()) out[std::to_string(deg)] = rank;
    return out;
}

PairDecomposition pair_from_json(const json& doc) {
    if (doc.is_object() && doc.contains("preset")) {
        const json& p = doc["preset"];
        if (p == "interval_s0") return preset_pair(PresetPair::interval_s0);
        if (p == "disk2_circle") return preset_pair(PresetPair::disk2_circle);
        if (p.is_object() && p.contains("cone")) return cone_pair(dims_from_json(p["cone"]));
        throw FormatError("pair: unknown preset " + p.dump());
    }
    PairDecomposition out;
    for (const char* key : {"B", "C", "E"})
        if (!doc.is_object() || !doc.contains(key)) throw FormatError(std::string("pair: missing \"") + key + "\"");
    out.B = dims_from_json(doc["B"]);
    out.C = dims_from_json(doc["C"]);
    out.E = dims_from_json(doc["E"]);
    if (!validate_pair(out)) throw FormatError("pair: B must contain the unit in degree 0");
    return out;
}

json pair_to_json(const PairDecomposition& p) {
    return {{"B", dims_to_json(p.B)}, {"C", dims_to_json(p.C)}, {"E", dims_to_json(p.E)}};
}

namespace {

template <class T, class F>
std::vector<T> per_vertex(const json& doc, const char* table, const GroundSet& ground, F parse) {
    if (!doc.is_object()) throw FormatError(std::string("expected an object with \"") + table + "\" or \"default\"");
    if (doc.contains(table))
        for (const auto& [label, v] : doc[table].items())
            if (!ground.contains(label)) throw FormatError("unknown vertex label \"" + label + "\"");
    std::vector<T> out;
    for (const auto& label : ground.labels()) {
        if (doc.contains(table) && doc[table].contains(label))
            out.push_back(parse(doc[table][label]));
        else if (doc.contains("default"))
            out.push_back(parse(doc["default"]));
        else
            throw FormatError("no data for vertex \"" + label + "\" and no default");
    }
    return out;
}

}  // namespace

PairAssignment pairs_from_json(const json& doc, const GroundSet& ground) {
    return per_vertex<PairDecomposition>(doc, "pairs", ground, pair_from_json);
}

std::vector<GradedDims> cohomology_from_json(const json& doc, const GroundSet& ground) {
    return per_vertex<GradedDims>(doc, "reduced", ground, dims_from_json);
}

json series_to_json(const UniPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({e, c});
    return {{"terms", terms}, {"text", p.to_string()}};
}

UniPoly series_from_json(const json& doc) {
    UniPoly p;
    for (const auto& t : get<json>(doc, "terms", "series")) {
        if (!t.is_array() || t.size() != 2) throw FormatError("series: terms are [exponent, coefficient]");
        p += UniPoly::monomial(t[0].get<int>(), t[1].get<std::int64_t>());
    }
    return p;
}

json multipoly_to_json(const MultiPoly& p, const GroundSet& ground) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) terms.push_back({{"s", m.s_degree}, {"t", ground.labels_of(m.support)}, {"c", c}});
    return {{"terms", terms}, {"text", p.to_string(ground)}};
}

}  // namespace polyjoin::io
