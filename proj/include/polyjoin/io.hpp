#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "polyjoin/betti.hpp"
#include "polyjoin/complex.hpp"
#include "polyjoin/joins.hpp"
#include "polyjoin/pairs.hpp"
#include "polyjoin/poly.hpp"

namespace polyjoin::io {

using nlohmann::json;

/// Malformed input document.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_file(const std::filesystem::path& path);

SimplicialComplex complex_from_json(const json& doc);
json complex_to_json(const SimplicialComplex& k, const std::string& name = "");

JoinSpec join_spec_from_json(const json& doc);

GradedDims dims_from_json(const json& doc);
json dims_to_json(const GradedDims& d);

PairDecomposition pair_from_json(const json& doc);
json pair_to_json(const PairDecomposition& p);

/// Pair document resolved against a ground set: explicit "pairs" entries first, then "default".
PairAssignment pairs_from_json(const json& doc, const GroundSet& ground);

/// {"reduced": {label: dims}, "default": dims}, resolved the same way.
std::vector<GradedDims> cohomology_from_json(const json& doc, const GroundSet& ground);

/// {"terms": [[exponent, coefficient], ...], "text": "..."}
json series_to_json(const UniPoly& p);
UniPoly series_from_json(const json& doc);

/// {"terms": [{"s": i, "t": [labels], "c": coefficient}, ...], "text": "..."}
json multipoly_to_json(const MultiPoly& p, const GroundSet& ground);

}  // namespace polyjoin::io
