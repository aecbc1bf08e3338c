#include "polyjoin/series.hpp"

#include <functional>
#include <stdexcept>

#include "polyjoin/topology.hpp"
#include "vertex_series.hpp"

namespace polyjoin {

using detail::VertexSeries;

namespace {

void check_arity(const SimplicialComplex& k, std::size_t m) {
    if (m != k.vertex_count())
        throw std::invalid_argument("expected one block complex per base vertex (got " + std::to_string(m) +
                                    ", expected " + std::to_string(k.vertex_count()) + ")");
}

/// Σ_{σ ∈ K, σ ⊆ I} P(E^{I^c}) P(C^σ) P(B^{I∖σ}) · susp(lk(σ)|_{I^c}) for per-vertex series.
UniPoly decomposition_sum(const SimplicialComplex& k, const std::vector<UniPoly>& b, const std::vector<UniPoly>& c,
                          const std::vector<UniPoly>& e, SuspensionCache& cache) {
    const Simplex all = k.ground().all();
    UniPoly total;
    for (Simplex sigma : k.faces()) {
        const UniPoly c_part = VertexSeries::product(c, sigma);
        if (c_part.is_zero()) continue;
        for_each_subset(all - sigma, [&](Simplex extra) {
            const Simplex rest = all - (sigma | extra);
            const UniPoly& link = cache.get(link_facets(k.facets(), sigma, rest));
            if (link.is_zero()) return;
            total += VertexSeries::product(e, rest) * c_part * VertexSeries::product(b, extra) * link;
        });
    }
    return total;
}

std::vector<GradedDims> block_dims(const std::vector<GradedDims>& dims, const BlockLayout& layout, std::size_t i) {
    return {dims.begin() + static_cast<std::ptrdiff_t>(layout.offset[i]),
            dims.begin() + static_cast<std::ptrdiff_t>(layout.offset[i] + layout.size[i])};
}

/// Σ_{∅≠J⊆[l]} susp(L|_J) · Π_{j∈J} P(H̃*(A_j)), i.e. the reduced series of Z_L(CA, A).
UniPoly cone_block_sum(const SimplicialComplex& l, const std::vector<GradedDims>& reduced_a, SuspensionCache& cache) {
    UniPoly total;
    for_each_subset(l.ground().all(), [&](Simplex j_set) {
        if (j_set.empty()) return;
        UniPoly term = cache.get(link_facets(l.facets(), Simplex{}, j_set));
        for (auto j : j_set.positions()) term *= reduced_a[j].series();
        total += term;
    });
    return total;
}

}  // namespace

PairAssignment block_pairs(const PairAssignment& ps, const BlockLayout& layout, std::size_t block) {
    return {ps.begin() + static_cast<std::ptrdiff_t>(layout.offset[block]),
            ps.begin() + static_cast<std::ptrdiff_t>(layout.offset[block] + layout.size[block])};
}

UniPoly bbcg_series(const SimplicialComplex& k, const PairAssignment& ps, Mode mode, Field field) {
    require_assignment(ps, k.vertex_count());
    const VertexSeries v(ps, mode);
    SuspensionCache cache(field);
    return decomposition_sum(k, v.b, v.c, v.e, cache);
}

UniPoly csc_series(const SimplicialComplex& k, std::span<const SimplicialComplex> ls, const PairAssignment& ps,
                   Mode mode, Field field) {
    check_arity(k, ls.size());
    const BlockLayout layout = BlockLayout::of(ls);
    require_assignment(ps, layout.total);
    SuspensionCache cache(field);

    // Per block: the E-side sum over (J ⊊ [l], τ ⊆ J), the non-face sum and the face sum.
    std::vector<UniPoly> inner_e, nonface_sum, face_sum;
    for (std::size_t i = 0; i < ls.size(); ++i) {
        const SimplicialComplex& l = ls[i];
        const VertexSeries v(block_pairs(ps, layout, i), mode);
        const Simplex all = l.ground().all();
        UniPoly e, c, b;
        for (Simplex tau : l.faces()) {
            for_each_subset(all - tau, [&](Simplex extra) {
                const Simplex j_set = tau | extra;
                if (j_set == all) return;
                const UniPoly& link = cache.get(link_facets(l.facets(), tau, all - j_set));
                if (link.is_zero()) return;
                e += link * VertexSeries::product(v.e, all - j_set) * v.y(j_set, tau);
            });
        }
        for_each_subset(all, [&](Simplex rho) { (l.is_face(rho) ? b : c) += v.y(all, rho); });
        inner_e.push_back(std::move(e));
        nonface_sum.push_back(std::move(c));
        face_sum.push_back(std::move(b));
    }
    return decomposition_sum(k, face_sum, nonface_sum, inner_e, cache);
}

UniPoly caa_series(const SimplicialComplex& k, std::span<const SimplicialComplex> ls,
                   const std::vector<GradedDims>& reduced_a, Field field, bool reduced) {
    check_arity(k, ls.size());
    const BlockLayout layout = BlockLayout::of(ls);
    if (reduced_a.size() != layout.total)
        throw std::invalid_argument("cohomology of A must be given for every composed vertex");
    SuspensionCache cache(field);

    std::vector<UniPoly> inner;
    for (std::size_t i = 0; i < ls.size(); ++i) inner.push_back(cone_block_sum(ls[i], block_dims(reduced_a, layout, i), cache));

    UniPoly total;
    for_each_subset(k.ground().all(), [&](Simplex i_set) {
        UniPoly term = cache.get(link_facets(k.facets(), Simplex{}, i_set));
        for (auto b : i_set.positions()) term *= inner[b];
        total += term;
    });
    return reduced ? total - UniPoly::constant(1) : total;
}

UniPoly remark_series(const SimplicialComplex& k, std::span<const SimplicialComplex> ls,
                      const std::vector<GradedDims>& reduced_a, Field field) {
    check_arity(k, ls.size());
    const BlockLayout layout = BlockLayout::of(ls);
    if (reduced_a.size() != layout.total)
        throw std::invalid_argument("cohomology of A must be given for every composed vertex");

    // Each block enters through its own polyhedral product Z_{L_b}(CA, A).
    std::vector<UniPoly> block_reduced;
    for (std::size_t i = 0; i < ls.size(); ++i) {
        PairAssignment cones;
        for (const auto& a : block_dims(reduced_a, layout, i)) cones.push_back(cone_pair(a));
        block_reduced.push_back(bbcg_series(ls[i], cones, Mode::full, field) - UniPoly::constant(1));
    }

    SuspensionCache cache(field);
    UniPoly total;
    for_each_subset(k.ground().all(), [&](Simplex b_set) {
        if (b_set.empty()) return;
        UniPoly term = cache.get(link_facets(k.facets(), Simplex{}, b_set));
        for (auto b : b_set.positions()) term *= block_reduced[b];
        total += term;
    });
    return total;
}

UniPoly empty_series(const SimplicialComplex& k, std::span<const SimplicialComplex> ls, const PairAssignment& ps,
                     Mode mode, Field field) {
    check_arity(k, ls.size());
    const BlockLayout layout = BlockLayout::of(ls);
    require_assignment(ps, layout.total);
    PairAssignment derived;
    for (std::size_t i = 0; i < ls.size(); ++i)
        derived.push_back(pair_from_empty(ls[i], block_pairs(ps, layout, i), field, mode));
    return bbcg_series(k, derived, mode, field);
}

UniPoly empty_series_expanded(const SimplicialComplex& k, std::span<const SimplicialComplex> ls,
                              const PairAssignment& ps, Mode mode, Field field) {
    check_arity(k, ls.size());
    const BlockLayout layout = BlockLayout::of(ls);
    require_assignment(ps, layout.total);
    for (const auto& l : ls)
        if (!l.ghost_vertices().empty())
            throw std::invalid_argument("empty-bottom block complex must not have ghost vertices");
    SuspensionCache cache(field);

    // Individual summands each block can contribute, by the role its base vertex plays.
    std::vector<std::vector<UniPoly>> e_terms(ls.size()), c_terms(ls.size());
    std::vector<UniPoly> b_term(ls.size());
    for (std::size_t i = 0; i < ls.size(); ++i) {
        const SimplicialComplex& l = ls[i];
        const VertexSeries v(block_pairs(ps, layout, i), mode);
        const Simplex all = l.ground().all();
        b_term[i] = VertexSeries::product(v.b, all);
        for_each_subset(all, [&](Simplex e_set) {
            if (!e_set.empty()) e_terms[i].push_back(VertexSeries::product(v.e, e_set) * VertexSeries::product(v.b, all - e_set));
        });
        for (Simplex sigma : l.faces()) {
            for_each_subset(all - sigma, [&](Simplex e_set) {
                if (sigma.empty() && e_set.empty()) return;
                const UniPoly& link = cache.get(link_facets(l.facets(), sigma, e_set));
                if (link.is_zero()) return;
                c_terms[i].push_back(VertexSeries::product(v.e, e_set) * v.y(all - e_set, sigma) * link);
            });
        }
    }

    const Simplex all = k.ground().all();
    UniPoly total;
    for (Simplex tau : k.faces()) {
        for_each_subset(all - tau, [&](Simplex extra) {
            const Simplex j_set = tau | extra;
            const UniPoly& link = cache.get(link_facets(k.facets(), tau, all - j_set));
            if (link.is_zero()) return;
            std::function<void(std::size_t, const UniPoly&)> expand = [&](std::size_t i, const UniPoly& acc) {
                if (acc.is_zero()) return;
                if (i == ls.size()) {
                    total += acc;
                    return;
                }
                if (!j_set.contains(i)) {
                    for (const auto& t : e_terms[i]) expand(i + 1, acc * t);
                } else if (tau.contains(i)) {
                    for (const auto& t : c_terms[i]) expand(i + 1, acc * t);
                } else {
                    expand(i + 1, acc * b_term[i]);
                }
            };
            expand(0, link);
        });
    }
    return total;
}

UniPoly join_series(const JoinSpec& spec, const PairAssignment& ps, Mode mode, Field field) {
    spec.validate();
    std::vector<SimplicialComplex> tops;
    for (const auto& e : spec.entries) tops.push_back(e.top);
    const BlockLayout layout = BlockLayout::of(tops);
    require_assignment(ps, layout.total);
    PairAssignment derived;
    for (std::size_t i = 0; i < spec.entries.size(); ++i) {
        const auto& e = spec.entries[i];
        const PairAssignment bp = block_pairs(ps, layout, i);
        switch (e.kind) {
            case JoinEntry::Kind::simplex_top:
                derived.push_back(pair_from_csc(e.bottom, bp, field, mode));
                break;
            case JoinEntry::Kind::empty_bottom:
                derived.push_back(pair_from_empty(e.top, bp, field, mode));
                break;
            case JoinEntry::Kind::general:
                throw std::invalid_argument("series are only available for simplex_top and empty_bottom join entries");
        }
    }
    return bbcg_series(spec.base, derived, mode, field);
}

bool splitting_check(const SimplicialComplex& k, const PairAssignment& ps, Field field) {
    const UniPoly lhs = bbcg_series(k, ps, Mode::full, field);
    UniPoly rhs = UniPoly::constant(1);
    for_each_subset(k.ground().all(), [&](Simplex i_set) {
        if (i_set.empty()) return;
        PairAssignment restricted;
        for (auto p : i_set.positions()) restricted.push_back(ps[p]);
        rhs += bbcg_series(k.full_subcomplex(i_set), restricted, Mode::smash, field);
    });
    return lhs == rhs;
}

}  // namespace polyjoin
