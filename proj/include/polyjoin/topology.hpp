#pragma once

#include <map>
#include <vector>

#include "polyjoin/complex.hpp"
#include "polyjoin/linalg.hpp"
#include "polyjoin/poly.hpp"

namespace polyjoin {

/// Simplicial chain complex of the complex generated by `facets`.
///
/// Simplices are ordered canonically and oriented by ascending position, so
/// ∂[v0..vk] = Σ (-1)^i [v0..v̂i..vk]. With `augmented`, degree 0 holds the
/// empty simplex and every other degree is shifted up by one; the homology of
/// the augmented complex is reduced homology.
ChainComplex simplicial_chain_complex(const std::vector<Simplex>& facets, bool augmented);

/// Reduced cohomology dimensions of |K| over the field.
/// For K = {∅} the result is empty; that case is handled by suspended_series.
GradedDims reduced_cohomology(const SimplicialComplex& k, Field field);

/// t · Σ_d dim H̃^d(|K|) t^d, and 1 when K has no nonempty face.
UniPoly suspended_series(const SimplicialComplex& k, Field field);
UniPoly suspended_series(const std::vector<Simplex>& facets, Field field);

/// Memoizes suspended series by facet list; links recur heavily inside the series engines.
class SuspensionCache {
public:
    explicit SuspensionCache(Field field) : field_(field) {}
    const UniPoly& get(const std::vector<Simplex>& normalized_facets);
    Field field() const { return field_; }

private:
    Field field_;
    std::map<std::vector<std::uint64_t>, UniPoly> memo_;
};

}  // namespace polyjoin
