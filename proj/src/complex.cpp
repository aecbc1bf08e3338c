#include "polyjoin/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace polyjoin {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.size() > kMaxGroundSize)
        throw std::invalid_argument("ground set larger than 64 vertices");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (!index_.emplace(labels_[i], i).second)
            throw std::invalid_argument("duplicate vertex label '" + labels_[i] + "'");
    }
}

GroundSet GroundSet::numbered(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return GroundSet(std::move(labels));
}

std::size_t GroundSet::position(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw std::invalid_argument("unknown vertex label '" + label + "'");
    return it->second;
}

Simplex GroundSet::simplex(const std::vector<std::string>& labels) const {
    Simplex s;
    for (const auto& l : labels) s = s.with(position(l));
    return s;
}

std::vector<std::string> GroundSet::labels_of(Simplex s) const {
    std::vector<std::string> out;
    for (auto p : s.positions()) out.push_back(labels_.at(p));
    return out;
}

GroundSet GroundSet::restrict(Simplex s) const { return GroundSet(labels_of(s)); }

std::vector<Simplex> maximal_faces(std::vector<Simplex> faces) {
    std::erase_if(faces, [](Simplex s) { return s.empty(); });
    // Larger faces first so each candidate only needs checking against kept ones.
    std::sort(faces.begin(), faces.end(), [](Simplex a, Simplex b) { return face_order_less(b, a); });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Simplex> kept;
    for (Simplex f : faces) {
        bool covered = std::any_of(kept.begin(), kept.end(), [f](Simplex k) { return f.subset_of(k); });
        if (!covered) kept.push_back(f);
    }
    std::sort(kept.begin(), kept.end(), FaceOrder{});
    return kept;
}

std::vector<Simplex> link_facets(const std::vector<Simplex>& facets, Simplex s, Simplex restrict_to) {
    std::vector<Simplex> out;
    for (Simplex m : facets) {
        if (s.subset_of(m)) out.push_back(m & restrict_to);
    }
    return maximal_faces(std::move(out));
}

std::vector<Simplex> all_faces(const std::vector<Simplex>& facets) {
    Simplex support;
    for (Simplex m : facets) support |= m;
    if (support.bits() < (std::uint64_t{1} << 20)) {
        // Small supports: mark faces in a table indexed by mask.
        std::vector<char> marked(std::size_t{support.bits()} + 1, 0);
        marked[0] = 1;
        for (Simplex m : facets)
            for_each_subset(m, [&](Simplex sub) { marked[sub.bits()] = 1; });
        std::vector<Simplex> out;
        for (std::size_t b = 0; b < marked.size(); ++b)
            if (marked[b]) out.emplace_back(b);
        std::stable_sort(out.begin(), out.end(), FaceOrder{});
        return out;
    }
    std::unordered_set<std::uint64_t> seen{0};
    for (Simplex m : facets) {
        for_each_subset(m, [&](Simplex sub) { seen.insert(sub.bits()); });
    }
    std::vector<Simplex> out;
    out.reserve(seen.size());
    for (auto b : seen) out.emplace_back(b);
    std::sort(out.begin(), out.end(), FaceOrder{});
    return out;
}

SimplicialComplex::SimplicialComplex(GroundSet ground, std::vector<Simplex> faces)
    : ground_(std::move(ground)) {
    const Simplex all = ground_.all();
    for (Simplex f : faces) {
        if (!f.subset_of(all)) throw std::invalid_argument("face outside the ground set");
    }
    facets_ = maximal_faces(std::move(faces));
}

bool SimplicialComplex::is_face(Simplex s) const {
    if (s.empty()) return true;
    return std::any_of(facets_.begin(), facets_.end(), [s](Simplex m) { return s.subset_of(m); });
}

std::vector<Simplex> SimplicialComplex::faces() const { return all_faces(facets_); }

Simplex SimplicialComplex::support() const {
    Simplex s;
    for (Simplex m : facets_) s |= m;
    return s;
}

SimplicialComplex SimplicialComplex::full_subcomplex(Simplex subset) const {
    if (!subset.subset_of(ground_.all())) throw std::invalid_argument("subset outside the ground set");
    std::vector<Simplex> faces;
    for (Simplex m : facets_) faces.push_back(compress(m & subset, subset));
    return SimplicialComplex(ground_.restrict(subset), std::move(faces));
}

SimplicialComplex SimplicialComplex::link_restricted(Simplex s, Simplex restrict_to) const {
    if (!is_face(s)) throw std::invalid_argument("link of a non-face");
    if (!restrict_to.disjoint(s)) throw std::invalid_argument("link restriction set meets the face");
    if (!restrict_to.subset_of(ground_.all())) throw std::invalid_argument("subset outside the ground set");
    std::vector<Simplex> faces;
    for (Simplex m : link_facets(facets_, s, restrict_to)) faces.push_back(compress(m, restrict_to));
    return SimplicialComplex(ground_.restrict(restrict_to), std::move(faces));
}

SimplicialComplex build_complex(const std::vector<std::string>& labels,
                                const std::vector<std::vector<std::string>>& faces) {
    GroundSet g(labels);
    std::vector<Simplex> fs;
    fs.reserve(faces.size());
    for (const auto& f : faces) fs.push_back(g.simplex(f));
    return SimplicialComplex(std::move(g), std::move(fs));
}

SimplicialComplex simplicial_join(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<std::string> labels = a.ground().labels();
    for (const auto& l : b.ground().labels()) {
        if (a.ground().contains(l)) throw std::invalid_argument("join label collision on '" + l + "'");
        labels.push_back(l);
    }
    const std::size_t offset = a.vertex_count();
    std::vector<Simplex> left = a.facets().empty() ? std::vector<Simplex>{Simplex{}} : a.facets();
    std::vector<Simplex> right = b.facets().empty() ? std::vector<Simplex>{Simplex{}} : b.facets();
    std::vector<Simplex> faces;
    for (Simplex x : left)
        for (Simplex y : right) faces.push_back(x | shifted(y, offset));
    return SimplicialComplex(GroundSet(std::move(labels)), std::move(faces));
}

SimplicialComplex standard_complex(StandardKind kind, std::size_t n, std::vector<std::string> labels) {
    const std::size_t expected = kind == StandardKind::empty ? n : n + 1;
    if (labels.size() != expected)
        throw std::invalid_argument("standard complex needs " + std::to_string(expected) + " labels");
    GroundSet g(std::move(labels));
    switch (kind) {
        case StandardKind::simplex:
            return SimplicialComplex(g, {g.all()});
        case StandardKind::boundary: {
            std::vector<Simplex> faces;
            for (std::size_t i = 0; i < g.size(); ++i) faces.push_back(g.all().without(i));
            return SimplicialComplex(g, std::move(faces));
        }
        case StandardKind::empty:
            break;
    }
    return SimplicialComplex(g, {});
}

SimplicialComplex standard_complex(StandardKind kind, std::size_t n) {
    const std::size_t count = kind == StandardKind::empty ? n : n + 1;
    return standard_complex(kind, n, GroundSet::numbered(count).labels());
}

}  // namespace polyjoin
