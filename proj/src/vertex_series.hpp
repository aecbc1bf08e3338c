#pragma once

#include <vector>

#include "polyjoin/pairs.hpp"

namespace polyjoin::detail {

/// Per-vertex B/C/E series of a pair assignment, with B reduced in smash mode.
struct VertexSeries {
    std::vector<UniPoly> b, c, e;

    VertexSeries(const PairAssignment& ps, Mode mode) {
        for (const auto& p : ps) {
            b.push_back(p.b_series(mode));
            c.push_back(p.C.series());
            e.push_back(p.E.series());
        }
    }

    static UniPoly product(const std::vector<UniPoly>& polys, Simplex over) {
        UniPoly out = UniPoly::constant(1);
        for (auto j : over.positions()) out *= polys[j];
        return out;
    }

    /// Y(J, τ) = Π_{τ} C · Π_{J∖τ} B.
    UniPoly y(Simplex j_set, Simplex tau) const { return product(c, tau) * product(b, j_set - tau); }
};

}  // namespace polyjoin::detail
