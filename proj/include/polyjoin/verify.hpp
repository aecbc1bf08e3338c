#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "polyjoin/complex.hpp"
#include "polyjoin/pairs.hpp"

namespace polyjoin {

struct CheckResult {
    std::string name;
    std::string anchor;  // the worked example or statement being reproduced
    bool passed = false;
    std::string detail;
};

/// A base complex with one block complex per base vertex.
struct Composition {
    SimplicialComplex k;
    std::vector<SimplicialComplex> ls;
};

namespace fixtures {

/// K = {{1},{2,3}}, L_1 = {∅} on [11], L_2 = {{21}}, L_3 = {{31},{32}}.
Composition three_block();
/// K = {∅} on two ghost vertices, L_1 = {{11}}, L_2 = {{21},{22}}.
Composition two_ghosts();
/// K = {{2}}, L_1 = {{11},{12}}, L_2 = {{21}} on [21, 22].
Composition sr_example();
/// B = t⁰ + t⁴, C = t⁶, E = t².
PairDecomposition poincare_pair();

}  // namespace fixtures

namespace sampling {

/// Finite pair data with B ∋ unit; ranks and degrees kept small.
PairDecomposition random_pair(std::mt19937_64& rng);
GradedDims random_dims(std::mt19937_64& rng);
/// Base on 1..max_base vertices, blocks on 1..max_block vertices.
Composition random_composition(std::mt19937_64& rng, std::size_t max_base, std::size_t max_block, bool ghost_free_blocks);
SimplicialComplex random_complex(std::mt19937_64& rng, std::size_t n, const std::vector<std::string>& labels,
                                 bool ghost_free);
std::size_t below(std::mt19937_64& rng, std::size_t n);

}  // namespace sampling

std::vector<CheckResult> verify_paper();
/// Invariant suites at CLI scale; deterministic for a fixed seed.
std::vector<CheckResult> verify_properties(std::uint64_t seed);

}  // namespace polyjoin
