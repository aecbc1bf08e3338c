#include "polyjoin/srings.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "polyjoin/joins.hpp"

namespace polyjoin {

namespace {

MonomialSet minimal_elements(std::vector<Simplex> sets) {
    std::sort(sets.begin(), sets.end(), FaceOrder{});
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    MonomialSet out;
    for (Simplex s : sets) {
        bool dominated = std::any_of(out.begin(), out.end(), [s](Simplex m) { return m.subset_of(s); });
        if (!dominated) out.push_back(s);
    }
    return out;
}

}  // namespace

MonomialSet minimal_nonfaces(const SimplicialComplex& k) {
    // Every minimal non-face is a face plus one vertex.
    const std::vector<Simplex> faces = k.faces();
    std::unordered_set<std::uint64_t> is_face;
    for (Simplex f : faces) is_face.insert(f.bits());
    std::set<std::uint64_t> found;
    const auto vertices = k.ground().all().positions();
    for (Simplex f : faces) {
        for (auto v : vertices) {
            if (f.contains(v)) continue;
            const Simplex cand = f.with(v);
            if (is_face.count(cand.bits())) continue;
            bool minimal = true;
            for (auto u : cand.positions())
                if (!is_face.count(cand.without(u).bits())) {
                    minimal = false;
                    break;
                }
            if (minimal) found.insert(cand.bits());
        }
    }
    MonomialSet out;
    for (auto b : found) out.emplace_back(b);
    std::sort(out.begin(), out.end(), FaceOrder{});
    return out;
}

MonomialSet sr_compose_generators(const SimplicialComplex& k, std::span<const SimplicialComplex> ls) {
    if (ls.size() != k.vertex_count()) throw std::invalid_argument("expected one block complex per base vertex");
    const BlockLayout layout = BlockLayout::of(ls);
    std::vector<MonomialSet> block_gens;
    for (std::size_t i = 0; i < ls.size(); ++i) {
        MonomialSet placed;
        for (Simplex g : minimal_nonfaces(ls[i])) placed.push_back(layout.place(g, i));
        block_gens.push_back(std::move(placed));
    }

    std::vector<Simplex> candidates;
    for (Simplex n : minimal_nonfaces(k)) {
        std::vector<Simplex> partial{Simplex{}};
        for (auto i : n.positions()) {
            std::vector<Simplex> next;
            for (Simplex p : partial)
                for (Simplex g : block_gens[i]) next.push_back(p | g);
            partial = std::move(next);
        }
        candidates.insert(candidates.end(), partial.begin(), partial.end());
    }
    return minimal_elements(std::move(candidates));
}

}  // namespace polyjoin
