#include "polyjoin/pairs.hpp"

#include <stdexcept>

#include "polyjoin/topology.hpp"
#include "vertex_series.hpp"

namespace polyjoin {

UniPoly PairDecomposition::reduced_b_series() const { return B.series() - UniPoly::constant(1); }

PairDecomposition preset_pair(PresetPair which) {
    switch (which) {
        case PresetPair::interval_s0:
            return {GradedDims{{0, 1}}, GradedDims{}, GradedDims{{0, 1}}};
        case PresetPair::disk2_circle:
            return {GradedDims{{0, 1}}, GradedDims{}, GradedDims{{1, 1}}};
    }
    throw std::invalid_argument("unknown preset pair");
}

PairDecomposition cone_pair(const GradedDims& reduced_a) { return {GradedDims{{0, 1}}, GradedDims{}, reduced_a}; }

bool validate_pair(const PairDecomposition& p) { return p.B.rank(0) >= 1; }

void require_assignment(const PairAssignment& ps, std::size_t vertex_count) {
    if (ps.size() != vertex_count)
        throw std::invalid_argument("pair assignment covers " + std::to_string(ps.size()) + " vertices, expected " +
                                    std::to_string(vertex_count));
    for (std::size_t i = 0; i < ps.size(); ++i)
        if (!validate_pair(ps[i]))
            throw std::invalid_argument("pair at vertex position " + std::to_string(i + 1) + " has no unit in B");
}

namespace {

using detail::VertexSeries;

PairDecomposition finish(const UniPoly& b, const UniPoly& c, const UniPoly& e, Mode mode) {
    // Smash-mode B is stored with its unit so that b_series(smash) strips it again.
    const UniPoly stored_b = mode == Mode::full ? b : b + UniPoly::constant(1);
    return {GradedDims::from_series(stored_b), GradedDims::from_series(c), GradedDims::from_series(e)};
}

}  // namespace

PairDecomposition pair_from_csc(const SimplicialComplex& l, const PairAssignment& ps, Field field, Mode mode) {
    require_assignment(ps, l.vertex_count());
    const VertexSeries v(ps, mode);
    const Simplex all = l.ground().all();
    SuspensionCache cache(field);

    UniPoly b, c, e;
    for_each_subset(all, [&](Simplex rho) {
        if (l.is_face(rho))
            b += v.y(all, rho);
        else
            c += v.y(all, rho);
    });
    for (Simplex tau : l.faces()) {
        for_each_subset(all - tau, [&](Simplex extra) {
            const Simplex j_set = tau | extra;
            if (j_set == all) return;
            const Simplex rest = all - j_set;
            const UniPoly& link = cache.get(link_facets(l.facets(), tau, rest));
            if (link.is_zero()) return;
            e += VertexSeries::product(v.e, rest) * link * v.y(j_set, tau);
        });
    }
    return finish(b, c, e, mode);
}

PairDecomposition pair_from_empty(const SimplicialComplex& l, const PairAssignment& ps, Field field, Mode mode) {
    require_assignment(ps, l.vertex_count());
    if (!l.ghost_vertices().empty())
        throw std::invalid_argument("empty-bottom block complex must not have ghost vertices");
    const VertexSeries v(ps, mode);
    const Simplex all = l.ground().all();
    SuspensionCache cache(field);

    const UniPoly b = VertexSeries::product(v.b, all);
    UniPoly e;
    for_each_subset(all, [&](Simplex i_set) {
        if (i_set == all) return;
        e += VertexSeries::product(v.b, i_set) * VertexSeries::product(v.e, all - i_set);
    });
    UniPoly c;
    for (Simplex sigma : l.faces()) {
        for_each_subset(all - sigma, [&](Simplex i_set) {
            if (sigma.empty() && i_set.empty()) return;
            const UniPoly& link = cache.get(link_facets(l.facets(), sigma, i_set));
            if (link.is_zero()) return;
            c += VertexSeries::product(v.e, i_set) * VertexSeries::product(v.c, sigma) *
                 VertexSeries::product(v.b, all - (i_set | sigma)) * link;
        });
    }
    return finish(b, c, e, mode);
}

}  // namespace polyjoin
