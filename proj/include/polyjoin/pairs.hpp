#pragma once

#include <span>
#include <vector>

#include "polyjoin/complex.hpp"
#include "polyjoin/poly.hpp"

namespace polyjoin {

/// Graded dimensions of the freeness splitting of a CW-pair (X, A):
/// H*(A) = B ⊕ E, H*(X) = B ⊕ C, with the unit in B. W = E shifted up one degree.
struct PairDecomposition {
    GradedDims B;
    GradedDims C;
    GradedDims E;

    /// B with one unit removed from degree 0 (the smash-product variant).
    UniPoly reduced_b_series() const;
    UniPoly b_series(Mode mode) const { return mode == Mode::full ? B.series() : reduced_b_series(); }

    bool operator==(const PairDecomposition&) const = default;
};

/// Pair data per ground-set position.
using PairAssignment = std::vector<PairDecomposition>;

enum class PresetPair { interval_s0, disk2_circle };

/// (D¹, S⁰) or (D², S¹).
PairDecomposition preset_pair(PresetPair which);
/// (CA, A) from the reduced cohomology of A.
PairDecomposition cone_pair(const GradedDims& reduced_a);

/// Unit present in degree 0 of B.
bool validate_pair(const PairDecomposition& p);

/// Throws std::invalid_argument unless `ps` has one valid pair per vertex.
void require_assignment(const PairAssignment& ps, std::size_t vertex_count);

/// Splitting of (∏_j X_j, Z_L(X, A)), the block pair of a composition.
///
/// In smash mode the result describes (∧_j X_j, Ẑ_L(X, A)); its B still carries
/// the unit so that b_series(Mode::smash) yields the reduced part.
PairDecomposition pair_from_csc(const SimplicialComplex& l, const PairAssignment& ps, Field field,
                                Mode mode = Mode::full);

/// Splitting of (Z_L(X, A), ∏_j A_j), the block pair of a join with empty bottoms.
/// L must have no ghost vertices.
PairDecomposition pair_from_empty(const SimplicialComplex& l, const PairAssignment& ps, Field field,
                                  Mode mode = Mode::full);

}  // namespace polyjoin
