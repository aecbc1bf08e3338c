#pragma once

#include <optional>
#include <span>
#include <vector>

#include "polyjoin/complex.hpp"
#include "polyjoin/poly.hpp"

namespace polyjoin {

/// One (L_i, K_i) pair of a polyhedral join, with K_i ⊆ L_i on a shared ground set.
struct JoinEntry {
    enum class Kind { general, simplex_top, empty_bottom };

    Kind kind = Kind::general;
    SimplicialComplex top;     // L_i, used on blocks inside σ
    SimplicialComplex bottom;  // K_i, used on blocks outside σ

    static JoinEntry general(SimplicialComplex top, SimplicialComplex bottom);
    /// (Δ^{l-1}, bottom): the composition block.
    static JoinEntry simplex_top(SimplicialComplex bottom);
    /// (top, {∅}).
    static JoinEntry empty_bottom(SimplicialComplex top);

    std::size_t size() const { return top.vertex_count(); }
};

struct JoinSpec {
    SimplicialComplex base;
    std::vector<JoinEntry> entries;

    /// Throws std::invalid_argument on arity mismatch, mismatched ground sets,
    /// or a bottom complex that is not a subcomplex of its top.
    void validate() const;
};

/// Block layout of a composed ground set: block i occupies offset[i] .. offset[i]+size[i]-1.
struct BlockLayout {
    std::vector<std::size_t> offset;
    std::vector<std::size_t> size;
    std::size_t total = 0;

    static BlockLayout of(std::span<const SimplicialComplex> blocks);
    Simplex block(std::size_t i) const { return shifted(Simplex::range(size[i]), offset[i]); }
    /// The block-local part of a composed-ground set.
    Simplex local(Simplex s, std::size_t i) const { return compress(s & block(i), block(i)); }
    Simplex place(Simplex local_set, std::size_t i) const { return shifted(local_set, offset[i]); }
};

/// Ground labels of a composed complex: base label followed by block label ("3" + "1" = "31").
GroundSet composed_ground(const SimplicialComplex& base, std::span<const SimplicialComplex> blocks);

SimplicialComplex polyhedral_join(const JoinSpec& spec);

/// K(L_1, ..., L_m) = Z*_K(Δ^{l_i-1}, L_i).
SimplicialComplex compose(const SimplicialComplex& k, std::span<const SimplicialComplex> ls);

/// s ∈ K(L_1, ..., L_m) iff {i | s ∩ block i ∉ L_i} ∈ K. `s` uses composed positions.
bool compose_member(const SimplicialComplex& k, std::span<const SimplicialComplex> ls, Simplex s);

/// Factorization of lk(s')|_{I'} inside a composition into per-block links and one outer link.
struct LinkDecomposition {
    Simplex outer_support;  // I: blocks that I' meets
    Simplex outer_face;     // σ: blocks outside I whose part of s' is a non-face of L_i
    /// Blocks in I whose part of s' is a non-face: the composed link is a cone there.
    Simplex cone_blocks;
    std::vector<std::pair<std::size_t, SimplicialComplex>> inner;  // (block, lk_{L_i}(s'_i)|_{I'_i})
    std::optional<SimplicialComplex> outer;                          // lk_K(σ)|_I, absent if cone

    /// Product of the factors' suspended series (0 when some block is a cone).
    UniPoly suspended_series(Field field) const;
};

/// Throws if s' is not a face of the composition or meets I'.
LinkDecomposition link_decompose(const SimplicialComplex& k, std::span<const SimplicialComplex> ls,
                                 Simplex face, Simplex restrict_to);

}  // namespace polyjoin
