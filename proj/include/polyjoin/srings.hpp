#pragma once

#include <span>
#include <vector>

#include "polyjoin/complex.hpp"

namespace polyjoin {

/// Supports of the squarefree generators of the generalized Stanley–Reisner ideal:
/// the inclusion-minimal non-faces, in canonical face order.
using MonomialSet = std::vector<Simplex>;

MonomialSet minimal_nonfaces(const SimplicialComplex& k);

/// Generators of I(K(L_1, ..., L_m)) assembled from those of K and the L_i:
/// minimal elements of { ∪_{i∈N} τ_i : N minimal non-face of K, τ_i minimal non-face of L_i }.
MonomialSet sr_compose_generators(const SimplicialComplex& k, std::span<const SimplicialComplex> ls);

/// Squarefree monomial with support s lies in I(K) iff s is not a face.
inline bool sr_ideal_member(const SimplicialComplex& k, Simplex s) { return !k.is_face(s); }

}  // namespace polyjoin
