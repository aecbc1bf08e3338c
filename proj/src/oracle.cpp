#include "polyjoin/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "polyjoin/pairs.hpp"
#include "polyjoin/series.hpp"

namespace polyjoin {

std::size_t oracle_vertex_limit() {
    if (const char* env = std::getenv("POLYJOIN_MAX_VERTICES")) {
        try {
            const unsigned long v = std::stoul(env);
            if (v > 0 && v <= 32) return v;
        } catch (const std::exception&) {
        }
        throw std::invalid_argument("POLYJOIN_MAX_VERTICES must be an integer in 1..32");
    }
    return 16;
}

CubicalModel rmac_model(const SimplicialComplex& k, Field field) {
    const std::size_t m = k.vertex_count();
    if (m > oracle_vertex_limit())
        throw std::length_error("cubical oracle limited to " + std::to_string(oracle_vertex_limit()) + " vertices");
    const Simplex all = k.ground().all();

    CubicalModel model;
    std::vector<std::unordered_map<std::uint64_t, std::size_t>> index;
    auto key = [](const CubicalCell& c) { return c.sigma.bits() << 32 | c.eps.bits(); };
    for (Simplex sigma : k.faces()) {
        const std::size_t d = sigma.size();
        if (model.cells.size() <= d) {
            model.cells.resize(d + 1);
            index.resize(d + 1);
        }
        for_each_subset(all - sigma, [&](Simplex eps) {
            CubicalCell c{sigma, eps};
            index[d].emplace(key(c), model.cells[d].size());
            model.cells[d].push_back(c);
        });
    }

    ChainComplex& chain = model.chain;
    for (const auto& cs : model.cells) chain.dims.push_back(cs.size());
    for (std::size_t d = 1; d < model.cells.size(); ++d) {
        SparseMatrix bd(model.cells[d - 1].size(), model.cells[d].size());
        for (std::size_t col = 0; col < model.cells[d].size(); ++col) {
            const CubicalCell& c = model.cells[d][col];
            std::int64_t sign = 1;
            for (auto i : c.sigma.positions()) {
                const Simplex face = c.sigma.without(i);
                const std::size_t up = index[d - 1].at(key({face, c.eps.with(i)}));
                const std::size_t down = index[d - 1].at(key({face, c.eps}));
                bd.columns[col].emplace_back(up, sign);
                bd.columns[col].emplace_back(down, -sign);
                sign = -sign;
            }
            std::sort(bd.columns[col].begin(), bd.columns[col].end());
        }
        chain.boundaries.push_back(std::move(bd));
    }
    (void)field;
    return model;
}

UniPoly rmac_betti_poly(const SimplicialComplex& k, Field field) {
    const auto betti = betti_numbers(rmac_model(k, field).chain, field);
    UniPoly p;
    for (std::size_t d = 0; d < betti.size(); ++d) p += UniPoly::monomial(static_cast<int>(d), static_cast<UniPoly::Coeff>(betti[d]));
    return p;
}

bool verify_formula(const SimplicialComplex& k, Field field) {
    const PairAssignment ps(k.vertex_count(), preset_pair(PresetPair::interval_s0));
    return rmac_betti_poly(k, field) == bbcg_series(k, ps, Mode::full, field);
}

std::vector<SimplicialComplex> all_complexes(std::size_t n) {
    if (n > 5) throw std::length_error("exhaustive enumeration is limited to 5 vertices");
    const std::size_t subsets = std::size_t{1} << n;
    const GroundSet ground = GroundSet::numbered(n);
    std::vector<SimplicialComplex> out;

    // Depth-first over subsets in face order, keeping a subset only when all its facets-minus-one are kept.
    std::vector<Simplex> order;
    for (std::size_t b = 1; b < subsets; ++b) order.push_back(Simplex(b));
    std::sort(order.begin(), order.end(), FaceOrder{});
    std::vector<char> in(subsets, 0);
    in[0] = 1;
    auto recurse = [&](auto&& self, std::size_t i) -> void {
        if (i == order.size()) {
            std::vector<Simplex> faces;
            for (std::size_t b = 0; b < subsets; ++b)
                if (in[b]) faces.emplace_back(b);
            out.emplace_back(ground, maximal_faces(std::move(faces)));
            return;
        }
        const Simplex s = order[i];
        self(self, i + 1);
        for (auto v : s.positions())
            if (!in[s.without(v).bits()]) return;
        in[s.bits()] = 1;
        self(self, i + 1);
        in[s.bits()] = 0;
    };
    recurse(recurse, 0);
    return out;
}

SimplicialComplex random_complex(std::uint64_t seed, std::size_t n, std::size_t max_facets) {
    if (n == 0 || n > 20) throw std::invalid_argument("random complexes need 1..20 vertices");
    std::mt19937_64 rng(seed);
    const std::size_t count = 1 + rng() % std::max<std::size_t>(max_facets, 1);
    std::vector<Simplex> faces;
    for (std::size_t i = 0; i < count; ++i) faces.emplace_back(rng() & Simplex::range(n).bits());
    return SimplicialComplex(GroundSet::numbered(n), maximal_faces(std::move(faces)));
}

}  // namespace polyjoin
