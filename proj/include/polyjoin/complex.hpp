#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "polyjoin/simplex.hpp"

namespace polyjoin {

/// Ordered list of distinct, opaque vertex labels.
class GroundSet {
public:
    GroundSet() = default;
    explicit GroundSet(std::vector<std::string> labels);

    /// Labels "1", ..., "n".
    static GroundSet numbered(std::size_t n);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t pos) const { return labels_.at(pos); }

    /// Throws std::invalid_argument for an unknown label.
    std::size_t position(const std::string& label) const;
    bool contains(const std::string& label) const { return index_.count(label) != 0; }

    Simplex all() const { return Simplex::range(size()); }
    Simplex simplex(const std::vector<std::string>& labels) const;
    std::vector<std::string> labels_of(Simplex s) const;

    /// The labels at the positions in `s`, in position order.
    GroundSet restrict(Simplex s) const;

    bool operator==(const GroundSet& o) const { return labels_ == o.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// An abstract simplicial complex stored by its maximal faces.
///
/// The facet list is an antichain in canonical face order. An empty facet list
/// is the complex {∅}; ground positions in no facet are ghost vertices.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Normalizes an arbitrary face list to its maximal elements.
    SimplicialComplex(GroundSet ground, std::vector<Simplex> faces);

    const GroundSet& ground() const { return ground_; }
    std::size_t vertex_count() const { return ground_.size(); }
    const std::vector<Simplex>& facets() const { return facets_; }

    bool is_face(Simplex s) const;
    bool has_nonempty_face() const { return !facets_.empty(); }

    /// Every face, ∅ included, in canonical face order.
    std::vector<Simplex> faces() const;

    /// Positions appearing in some face.
    Simplex support() const;
    Simplex ghost_vertices() const { return ground_.all() - support(); }

    /// K_I as a complex on the ground set I.
    SimplicialComplex full_subcomplex(Simplex subset) const;

    /// {τ ⊆ R | τ ∪ s ∈ K} as a complex on the ground set R.
    /// Throws if s is not a face or R meets s.
    SimplicialComplex link_restricted(Simplex s, Simplex restrict_to) const;

    bool operator==(const SimplicialComplex& o) const {
        return ground_ == o.ground_ && facets_ == o.facets_;
    }

private:
    GroundSet ground_;
    std::vector<Simplex> facets_;
};

/// Reduces a face list to its sorted antichain of nonempty maximal elements.
std::vector<Simplex> maximal_faces(std::vector<Simplex> faces);

/// Facets of {τ ⊆ R | τ ∪ s ∈ K} in the parent's positions (no relabeling).
std::vector<Simplex> link_facets(const std::vector<Simplex>& facets, Simplex s, Simplex restrict_to);

/// Every face of the complex generated by `facets`, ∅ included, canonical order.
std::vector<Simplex> all_faces(const std::vector<Simplex>& facets);

/// Builds a complex from labels and label-valued faces.
SimplicialComplex build_complex(const std::vector<std::string>& labels,
                                const std::vector<std::vector<std::string>>& faces);

/// Disjoint-union ground, facets = pairwise unions. Throws on a label collision.
SimplicialComplex simplicial_join(const SimplicialComplex& a, const SimplicialComplex& b);

enum class StandardKind { simplex, boundary, empty };

/// Δⁿ or ∂Δⁿ on n+1 labels, or {∅} on n ghost labels.
SimplicialComplex standard_complex(StandardKind kind, std::size_t n, std::vector<std::string> labels);
SimplicialComplex standard_complex(StandardKind kind, std::size_t n);

inline SimplicialComplex full_simplex(const GroundSet& g) {
    return SimplicialComplex(g, {g.all()});
}

}  // namespace polyjoin
