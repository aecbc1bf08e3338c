#pragma once

#include <cstdint>
#include <vector>

#include "polyjoin/complex.hpp"
#include "polyjoin/linalg.hpp"
#include "polyjoin/poly.hpp"

namespace polyjoin {

/// Cube (σ, ε) of Z_K(D¹, S⁰): free coordinates σ, and ε giving the endpoint on every other coordinate.
/// `eps` only uses positions outside `sigma`.
struct CubicalCell {
    Simplex sigma;
    Simplex eps;
    bool operator==(const CubicalCell&) const = default;
};

struct CubicalModel {
    std::vector<std::vector<CubicalCell>> cells;  // by dimension |σ|
    ChainComplex chain;
};

/// Vertex limit for the cubical oracle: POLYJOIN_MAX_VERTICES if set, else 16.
std::size_t oracle_vertex_limit();

/// Throws std::length_error past the vertex limit.
CubicalModel rmac_model(const SimplicialComplex& k, Field field);

/// Σ_d b_d t^d (unreduced) of the real moment-angle complex.
UniPoly rmac_betti_poly(const SimplicialComplex& k, Field field);

/// rmac_betti_poly(K) == bbcg_series(K, (D¹, S⁰), full).
bool verify_formula(const SimplicialComplex& k, Field field);

/// Every simplicial complex with ground set {1, ..., n}, ghosts included; n ≤ 5.
std::vector<SimplicialComplex> all_complexes(std::size_t n);

/// Deterministic random complex on ground {1, ..., n} from up to `max_facets` random facets.
SimplicialComplex random_complex(std::uint64_t seed, std::size_t n, std::size_t max_facets = 6);

}  // namespace polyjoin
