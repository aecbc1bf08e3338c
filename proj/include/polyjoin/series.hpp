#pragma once

#include <span>
#include <vector>

#include "polyjoin/complex.hpp"
#include "polyjoin/joins.hpp"
#include "polyjoin/pairs.hpp"
#include "polyjoin/poly.hpp"

namespace polyjoin {

/// Hilbert–Poincaré series of Z_K(X, A) (full) or of the polyhedral smash product (smash)
/// from the additive decomposition
///   Σ_{σ ∈ K, σ ⊆ I ⊆ [m]} P(E^{I^c}) · P(C^σ) · P(B^{I∖σ}) · P(H̃*(Σ lk(σ)|_{I^c})),
/// with B replaced by its reduced part in smash mode.
UniPoly bbcg_series(const SimplicialComplex& k, const PairAssignment& ps, Mode mode, Field field);

/// Series of the polyhedral product over K(L_1, ..., L_m), evaluated block by block from
/// K, the L_i and the pair data on the composed ground set; never builds the composition.
UniPoly csc_series(const SimplicialComplex& k, std::span<const SimplicialComplex> ls, const PairAssignment& ps,
                   Mode mode, Field field);

/// Series of Z_{K(L)}(CA, A) from full-subcomplex data. `reduced_a` holds H̃*(A_v) per composed vertex.
/// The unreduced value includes the unit, so reduced = unreduced − 1.
UniPoly caa_series(const SimplicialComplex& k, std::span<const SimplicialComplex> ls,
                   const std::vector<GradedDims>& reduced_a, Field field, bool reduced);

/// Reduced series of Z_{K(L)}(CA, A) as Σ_{∅≠B⊆[m]} P(H̃*(Σ K_B)) · Π_{b∈B} P̄(H̃*(Z_{L_b}(CA, A))).
UniPoly remark_series(const SimplicialComplex& k, std::span<const SimplicialComplex> ls,
                      const std::vector<GradedDims>& reduced_a, Field field);

/// Series of the polyhedral product over Z*_K(L_i, ∅): the base decomposition applied to the
/// derived (Z_{L_i}, ∏A) pairs. Every L_i must be ghost-free.
UniPoly empty_series(const SimplicialComplex& k, std::span<const SimplicialComplex> ls, const PairAssignment& ps,
                     Mode mode, Field field);

/// Same quantity as empty_series, summed term by term over (J, τ, per-block choices)
/// without forming the derived pairs.
UniPoly empty_series_expanded(const SimplicialComplex& k, std::span<const SimplicialComplex> ls,
                              const PairAssignment& ps, Mode mode, Field field);

/// Series of the polyhedral product over a join whose entries are all simplex_top or
/// empty_bottom; each block is replaced by its derived pair. General entries are rejected.
UniPoly join_series(const JoinSpec& spec, const PairAssignment& ps, Mode mode, Field field);

/// The stable splitting at the level of series:
/// full series == 1 + Σ_{∅≠I} smash series of K_I with the pairs restricted to I.
bool splitting_check(const SimplicialComplex& k, const PairAssignment& ps, Field field);

/// Pair data of block i, cut out of an assignment on the composed ground set.
PairAssignment block_pairs(const PairAssignment& ps, const BlockLayout& layout, std::size_t block);

}  // namespace polyjoin
