#include "polyjoin/topology.hpp"

#include <algorithm>
#include <unordered_map>

namespace polyjoin {

ChainComplex simplicial_chain_complex(const std::vector<Simplex>& facets, bool augmented) {
    std::vector<Simplex> faces = all_faces(facets);
    if (!augmented) faces.erase(faces.begin());  // drop ∅, always first

    // faces are sorted by cardinality, so each degree is a contiguous run
    const std::size_t shift = augmented ? 0 : 1;
    std::vector<std::vector<Simplex>> by_degree;
    for (Simplex f : faces) {
        const std::size_t d = f.size() - shift;
        if (by_degree.size() <= d) by_degree.resize(d + 1);
        by_degree[d].push_back(f);
    }

    // Position of each face within its degree: a flat table when masks are small.
    Simplex support;
    for (Simplex f : facets) support |= f;
    const bool flat = support.bits() < (std::uint64_t{1} << 20);
    std::vector<std::uint32_t> table(flat ? std::size_t{support.bits()} + 1 : 0);
    std::unordered_map<std::uint64_t, std::size_t> hashed;
    for (const auto& cells : by_degree)
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (flat)
                table[cells[i].bits()] = static_cast<std::uint32_t>(i);
            else
                hashed.emplace(cells[i].bits(), i);
        }
    auto index_of = [&](std::uint64_t bits) -> std::size_t { return flat ? table[bits] : hashed.at(bits); };

    ChainComplex c;
    for (const auto& cells : by_degree) c.dims.push_back(cells.size());
    for (std::size_t d = 1; d < by_degree.size(); ++d) {
        SparseMatrix m(by_degree[d - 1].size(), by_degree[d].size());
        for (std::size_t j = 0; j < by_degree[d].size(); ++j) {
            const Simplex s = by_degree[d][j];
            auto& col = m.columns[j];
            col.reserve(s.size());
            std::int64_t sign = 1;
            for (std::uint64_t rest = s.bits(); rest; rest &= rest - 1) {
                col.emplace_back(index_of(s.bits() & ~(rest & -rest)), sign);
                sign = -sign;
            }
            std::sort(col.begin(), col.end());
        }
        c.boundaries.push_back(std::move(m));
    }
    return c;
}

GradedDims reduced_cohomology(const SimplicialComplex& k, Field field) {
    GradedDims out;
    if (!k.has_nonempty_face()) return out;
    const auto betti = betti_numbers(simplicial_chain_complex(k.facets(), true), field);
    // augmented degree d+1 carries reduced degree d
    for (std::size_t d = 1; d < betti.size(); ++d) out.add(static_cast<int>(d - 1), static_cast<std::int64_t>(betti[d]));
    return out;
}

UniPoly suspended_series(const std::vector<Simplex>& facets, Field field) {
    if (facets.empty() || (facets.size() == 1 && facets.front().empty())) return UniPoly::constant(1);
    const auto betti = betti_numbers(simplicial_chain_complex(facets, true), field);
    UniPoly p;
    // H̃^d lands in degree d+1 after suspension, i.e. at augmented index d+1
    for (std::size_t d = 1; d < betti.size(); ++d)
        if (betti[d] != 0) p += UniPoly::monomial(static_cast<int>(d), static_cast<std::int64_t>(betti[d]));
    return p;
}

UniPoly suspended_series(const SimplicialComplex& k, Field field) {
    return suspended_series(k.facets(), field);
}

const UniPoly& SuspensionCache::get(const std::vector<Simplex>& normalized_facets) {
    std::vector<std::uint64_t> key;
    key.reserve(normalized_facets.size());
    for (Simplex s : normalized_facets) key.push_back(s.bits());
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    return memo_.emplace(std::move(key), suspended_series(normalized_facets, field_)).first->second;
}

}  // namespace polyjoin
