#include "polyjoin/joins.hpp"

#include <stdexcept>

#include "polyjoin/topology.hpp"

namespace polyjoin {

JoinEntry JoinEntry::general(SimplicialComplex top, SimplicialComplex bottom) {
    return JoinEntry{Kind::general, std::move(top), std::move(bottom)};
}

JoinEntry JoinEntry::simplex_top(SimplicialComplex bottom) {
    SimplicialComplex top = full_simplex(bottom.ground());
    return JoinEntry{Kind::simplex_top, std::move(top), std::move(bottom)};
}

JoinEntry JoinEntry::empty_bottom(SimplicialComplex top) {
    SimplicialComplex bottom(top.ground(), {});
    return JoinEntry{Kind::empty_bottom, std::move(top), std::move(bottom)};
}

void JoinSpec::validate() const {
    if (entries.size() != base.vertex_count())
        throw std::invalid_argument("join needs one entry per base vertex (got " + std::to_string(entries.size()) +
                                    ", expected " + std::to_string(base.vertex_count()) + ")");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        if (!(e.top.ground() == e.bottom.ground()))
            throw std::invalid_argument("join entry " + std::to_string(i + 1) + ": top and bottom ground sets differ");
        for (Simplex f : e.bottom.facets()) {
            if (!e.top.is_face(f))
                throw std::invalid_argument("join entry " + std::to_string(i + 1) +
                                            ": bottom complex is not a subcomplex of the top");
        }
    }
}

BlockLayout BlockLayout::of(std::span<const SimplicialComplex> blocks) {
    BlockLayout layout;
    for (const auto& b : blocks) {
        layout.offset.push_back(layout.total);
        layout.size.push_back(b.vertex_count());
        layout.total += b.vertex_count();
    }
    if (layout.total > kMaxGroundSize) throw std::invalid_argument("composed ground set larger than 64 vertices");
    return layout;
}

GroundSet composed_ground(const SimplicialComplex& base, std::span<const SimplicialComplex> blocks) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (const auto& l : blocks[i].ground().labels()) labels.push_back(base.ground().label(i) + l);
    return GroundSet(std::move(labels));
}

namespace {

std::vector<Simplex> facets_or_empty(const SimplicialComplex& c) {
    return c.facets().empty() ? std::vector<Simplex>{Simplex{}} : c.facets();
}

void check_arity(const SimplicialComplex& k, std::size_t m) {
    if (m != k.vertex_count())
        throw std::invalid_argument("composition needs one complex per base vertex (got " + std::to_string(m) +
                                    ", expected " + std::to_string(k.vertex_count()) + ")");
}

}  // namespace

SimplicialComplex polyhedral_join(const JoinSpec& spec) {
    spec.validate();
    std::vector<SimplicialComplex> tops;
    for (const auto& e : spec.entries) tops.push_back(e.top);
    const BlockLayout layout = BlockLayout::of(tops);
    GroundSet ground = composed_ground(spec.base, tops);

    // Only maximal σ matter; the colimit over them already contains the rest.
    std::vector<Simplex> result;
    for (Simplex sigma : facets_or_empty(spec.base)) {
        std::vector<Simplex> partial{Simplex{}};
        for (std::size_t i = 0; i < spec.entries.size(); ++i) {
            const auto& side = sigma.contains(i) ? spec.entries[i].top : spec.entries[i].bottom;
            std::vector<Simplex> next;
            for (Simplex f : facets_or_empty(side))
                for (Simplex p : partial) next.push_back(p | layout.place(f, i));
            partial = std::move(next);
        }
        result.insert(result.end(), partial.begin(), partial.end());
    }
    return SimplicialComplex(std::move(ground), std::move(result));
}

SimplicialComplex compose(const SimplicialComplex& k, std::span<const SimplicialComplex> ls) {
    check_arity(k, ls.size());
    JoinSpec spec{k, {}};
    for (const auto& l : ls) spec.entries.push_back(JoinEntry::simplex_top(l));
    return polyhedral_join(spec);
}

bool compose_member(const SimplicialComplex& k, std::span<const SimplicialComplex> ls, Simplex s) {
    check_arity(k, ls.size());
    const BlockLayout layout = BlockLayout::of(ls);
    if (!s.subset_of(Simplex::range(layout.total))) throw std::invalid_argument("simplex outside the composed ground set");
    Simplex bad;
    for (std::size_t i = 0; i < ls.size(); ++i)
        if (!ls[i].is_face(layout.local(s, i))) bad = bad.with(i);
    return k.is_face(bad);
}

UniPoly LinkDecomposition::suspended_series(Field field) const {
    if (!cone_blocks.empty()) return UniPoly{};
    UniPoly p = polyjoin::suspended_series(*outer, field);
    for (const auto& [block, c] : inner) p *= polyjoin::suspended_series(c, field);
    return p;
}

LinkDecomposition link_decompose(const SimplicialComplex& k, std::span<const SimplicialComplex> ls, Simplex face,
                                 Simplex restrict_to) {
    check_arity(k, ls.size());
    if (!compose_member(k, ls, face)) throw std::invalid_argument("link of a non-face of the composition");
    if (!face.disjoint(restrict_to)) throw std::invalid_argument("link restriction set meets the face");
    const BlockLayout layout = BlockLayout::of(ls);
    if (!restrict_to.subset_of(Simplex::range(layout.total)))
        throw std::invalid_argument("restriction set outside the composed ground set");

    LinkDecomposition out;
    for (std::size_t i = 0; i < ls.size(); ++i) {
        const Simplex part = layout.local(face, i);
        const bool nonface = !ls[i].is_face(part);
        if (!layout.local(restrict_to, i).empty()) {
            out.outer_support = out.outer_support.with(i);
            if (nonface) out.cone_blocks = out.cone_blocks.with(i);
        } else if (nonface) {
            out.outer_face = out.outer_face.with(i);
        }
    }
    if (!out.cone_blocks.empty()) return out;
    for (std::size_t i : out.outer_support.positions()) {
        out.inner.emplace_back(i, ls[i].link_restricted(layout.local(face, i), layout.local(restrict_to, i)));
    }
    out.outer = k.link_restricted(out.outer_face, out.outer_support);
    return out;
}

}  // namespace polyjoin
