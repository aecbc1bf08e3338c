// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <unordered_set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "polyjoin/betti.hpp"
#include "polyjoin/joins.hpp"
#include "polyjoin/oracle.hpp"
#include "polyjoin/series.hpp"
#include "polyjoin/srings.hpp"
#include "polyjoin/topology.hpp"
#include "polyjoin/verify.hpp"

using namespace polyjoin;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

std::string show(const SimplicialComplex& k) {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < k.facets().size(); ++i) {
        const auto labels = k.ground().labels_of(k.facets()[i]);
        out << (i ? "," : "") << "{";
        for (std::size_t j = 0; j < labels.size(); ++j) out << (j ? "," : "") << labels[j];
        out << "}";
    }
    return out.str() + "} on " + std::to_string(k.vertex_count()) + " vertices";
}

// Every complex built while checking criteria 1-10, kept as (vertex count, facet masks)
// so that the structural pass can revisit a few hundred thousand of them.
class Registry {
public:
    void add(const SimplicialComplex& k) {
        std::vector<std::uint64_t> key{k.vertex_count()};
        for (Simplex f : k.facets()) key.push_back(f.bits());
        seen_.insert(std::move(key));
    }
    void add(const std::vector<SimplicialComplex>& ks) {
        for (const auto& k : ks) add(k);
    }
    void add_model(const SimplicialComplex& k) {
        add(k);
        if (k.vertex_count() <= 6) models_.push_back(k);
    }
    template <class F>
    void for_each(F&& fn) const {
        for (const auto& key : seen_) {
            std::vector<Simplex> facets;
            for (std::size_t i = 1; i < key.size(); ++i) facets.emplace_back(key[i]);
            fn(key[0], facets);
        }
    }
    std::size_t size() const { return seen_.size(); }
    const std::vector<SimplicialComplex>& models() const { return models_; }

private:
    std::set<std::vector<std::uint64_t>> seen_;
    std::vector<SimplicialComplex> models_;
};

Registry registry;

[[noreturn]] void fail(const std::string& what, const SimplicialComplex& k) { throw Failure(what + ": " + show(k)); }

PairAssignment repeat(const PairDecomposition& p, std::size_t n) { return PairAssignment(n, p); }

UniPoly sphere(int m) { return UniPoly::constant(1) + UniPoly::monomial(m); }

PairAssignment random_pairs(std::mt19937_64& rng, std::size_t n) {
    PairAssignment ps;
    for (std::size_t i = 0; i < n; ++i) ps.push_back(sampling::random_pair(rng));
    return ps;
}

// (1) The worked smash-product example over two ghost vertices.
void poincare_example() {
    const auto [k, ls] = fixtures::two_ghosts();
    const auto c = compose(k, ls);
    registry.add(k);
    registry.add(ls);
    registry.add(c);
    const auto ps = repeat(fixtures::poincare_pair(), c.vertex_count());
    const UniPoly want = UniPoly::monomial(9) + UniPoly::monomial(11) + UniPoly::monomial(12, 3) +
                         UniPoly::monomial(14, 5) + UniPoly::monomial(16, 2);
    for (Field f : {Field::F2, Field::Q}) {
        const UniPoly blockwise = csc_series(k, ls, ps, Mode::smash, f);
        require(blockwise == want, "csc_series gave " + blockwise.to_string());
        const UniPoly direct = bbcg_series(c, ps, Mode::smash, f);
        require(direct == want, "bbcg_series on the composition gave " + direct.to_string());
    }
}

// (2)
void composition_example() {
    const auto [k, ls] = fixtures::three_block();
    const auto c = compose(k, ls);
    registry.add(k);
    registry.add(ls);
    registry.add(c);
    const auto want = build_complex({"11", "21", "31", "32"}, {{"21", "31", "32"}, {"11", "21", "31"}, {"11", "21", "32"}});
    require(c == want, "got " + show(c));
}

// (3)
void beta_example() {
    const auto [k, ls] = fixtures::three_block();
    const auto c = compose(k, ls);
    const std::vector<GradedDims> s2(c.vertex_count(), GradedDims{{2, 1}});
    const MultiPoly want = MultiPoly::term(0, Simplex{}) + MultiPoly::term(8, c.ground().simplex({"11", "31", "32"}));
    for (Field f : {Field::F2, Field::Q}) {
        const auto direct = beta_polynomial(c, s2, f);
        require(direct == want, "beta_polynomial gave " + direct.to_string(c.ground()));
        const auto composed = beta_compose(k, ls, s2, f);
        require(composed == want, "beta_compose gave " + composed.to_string(c.ground()));
    }
}

// (4)
void sphere_family() {
    for (int m = 2; m <= 5; ++m) {
        const auto bd = standard_complex(StandardKind::boundary, static_cast<std::size_t>(m));
        registry.add_model(bd);
        for (Field f : {Field::F2, Field::Q}) {
            const auto series = bbcg_series(bd, repeat(preset_pair(PresetPair::interval_s0), m + 1), Mode::full, f);
            require(series == sphere(m), "bbcg_series(dΔ^" + std::to_string(m) + ") = " + series.to_string());
            const auto cells = rmac_betti_poly(bd, f);
            require(cells == sphere(m), "rmac_betti_poly(dΔ^" + std::to_string(m) + ") = " + cells.to_string());
        }
    }
}

// (5)
void oracle_sweep() {
    std::size_t checked = 0;
    for (std::size_t n = 0; n <= 4; ++n)
        for (const auto& k : all_complexes(n)) {
            registry.add_model(k);
            require(verify_formula(k, Field::F2), "formula and oracle disagree on " + show(k));
            ++checked;
        }
    require(checked == 194, "expected 194 complexes on at most 4 vertices, enumerated " + std::to_string(checked));
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto k = random_complex(seed, 5 + seed % 2);
        registry.add_model(k);
        require(verify_formula(k, Field::F2), "formula and oracle disagree on " + show(k));
    }
}

// (6)
void moment_angle_bridge() {
    const auto bd1 = standard_complex(StandardKind::boundary, 1);
    const auto circle = preset_pair(PresetPair::disk2_circle);
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto& k : all_complexes(n)) {
            const std::vector<SimplicialComplex> ls(n, bd1);
            const auto c = compose(k, ls);
            registry.add(k);
            registry.add_model(c);
            const auto lhs = bbcg_series(k, repeat(circle, n), Mode::full, Field::F2);
            const auto rhs = rmac_betti_poly(c, Field::F2);
            require(lhs == rhs, "bridge fails on " + show(k) + ": " + lhs.to_string() + " vs " + rhs.to_string());
        }
    const auto edge_ends = bbcg_series(bd1, repeat(circle, 2), Mode::full, Field::Q);
    require(edge_ends == sphere(3), "Z_{dΔ^1}(D^2,S^1) gave " + edge_ends.to_string());
}

// Block pairs used by (7) and re-checked by (8).
struct SweepCase {
    SimplicialComplex l;
    PairAssignment ps;
};
std::vector<SweepCase> sweep_blocks;

// (7)
void path_equality() {
    std::mt19937_64 rng(20240601);
    for (int n = 0; n < 100; ++n) {  // (a)
        const auto [k, ls] = sampling::random_composition(rng, 3, 2, false);
        const auto c = compose(k, ls);
        registry.add(k);
        registry.add(ls);
        registry.add(c);
        const auto ps = random_pairs(rng, c.vertex_count());
        const auto layout = BlockLayout::of(ls);
        for (std::size_t i = 0; i < ls.size(); ++i) sweep_blocks.push_back({ls[i], block_pairs(ps, layout, i)});
        for (Mode mode : {Mode::full, Mode::smash}) {
            PairAssignment nested;
            for (std::size_t i = 0; i < ls.size(); ++i)
                nested.push_back(pair_from_csc(ls[i], block_pairs(ps, layout, i), Field::Q, mode));
            const auto a = csc_series(k, ls, ps, mode, Field::Q);
            const auto b = bbcg_series(k, nested, mode, Field::Q);
            const auto d = bbcg_series(c, ps, mode, Field::Q);
            require(a == b && b == d, "(a) case " + std::to_string(n) + ": " + a.to_string() + " | " + b.to_string() +
                                          " | " + d.to_string());
        }
    }
    for (int n = 0; n < 100; ++n) {  // (b)
        const auto [k, ls] = sampling::random_composition(rng, 3, 2, true);
        std::vector<JoinEntry> entries;
        for (const auto& l : ls) entries.push_back(JoinEntry::empty_bottom(l));
        const auto j = polyhedral_join({k, entries});
        registry.add(k);
        registry.add(ls);
        registry.add(j);
        const auto ps = random_pairs(rng, j.vertex_count());
        const auto layout = BlockLayout::of(ls);
        for (std::size_t i = 0; i < ls.size(); ++i) sweep_blocks.push_back({ls[i], block_pairs(ps, layout, i)});
        for (Mode mode : {Mode::full, Mode::smash}) {
            const auto a = empty_series(k, ls, ps, mode, Field::Q);
            const auto b = empty_series_expanded(k, ls, ps, mode, Field::Q);
            const auto d = bbcg_series(j, ps, mode, Field::Q);
            require(a == b && b == d, "(b) case " + std::to_string(n) + ": " + a.to_string() + " | " + b.to_string() +
                                          " | " + d.to_string());
        }
    }
    for (int n = 0; n < 100; ++n) {  // (c)
        const auto [k, ls] = sampling::random_composition(rng, 3, 2, false);
        const auto c = compose(k, ls);
        std::vector<GradedDims> a;
        for (std::size_t v = 0; v < c.vertex_count(); ++v) a.push_back(sampling::random_dims(rng));
        const auto lhs = caa_series(k, ls, a, Field::Q, true);
        const auto rhs = remark_series(k, ls, a, Field::Q);
        require(lhs == rhs, "(c) case " + std::to_string(n) + ": " + lhs.to_string() + " vs " + rhs.to_string());
    }
    for (int n = 0; n < 100; ++n) {  // (d)
        const auto [k, ls] = sampling::random_composition(rng, 3, 2, false);
        const auto c = compose(k, ls);
        require(splitting_check(c, random_pairs(rng, c.vertex_count()), Field::Q), "(d) case " + std::to_string(n));
    }
}

// (8)
void balance_identities() {
    require(!sweep_blocks.empty(), "path-equality sweep produced no blocks");
    for (const auto& [l, ps] : sweep_blocks) {
        UniPoly x = UniPoly::constant(1), a = UniPoly::constant(1);
        for (const auto& p : ps) {
            x *= p.B.series() + p.C.series();
            a *= p.B.series() + p.E.series();
        }
        const auto z = bbcg_series(l, ps, Mode::full, Field::Q);
        const auto csc = pair_from_csc(l, ps, Field::Q);
        require(csc.B.series() + csc.C.series() == x, "pair_from_csc: P(B)+P(C) on " + show(l));
        require(csc.B.series() + csc.E.series() == z, "pair_from_csc: P(B)+P(E) on " + show(l));
        if (!l.ghost_vertices().empty()) continue;
        const auto emp = pair_from_empty(l, ps, Field::Q);
        require(emp.B.series() + emp.C.series() == z, "pair_from_empty: P(B)+P(C) on " + show(l));
        require(emp.B.series() + emp.E.series() == a, "pair_from_empty: P(B)+P(E) on " + show(l));
    }
}

// (9) Every base on at most 3 vertices with every block on at most 3 vertices (so Σ l_i ≤ 9).
void sr_composition() {
    const auto [k0, ls0] = fixtures::sr_example();
    const auto c0 = compose(k0, ls0);
    registry.add(c0);
    require(sr_compose_generators(k0, ls0) == MonomialSet{c0.ground().simplex({"11", "12"})}, "worked example");

    std::vector<SimplicialComplex> blocks;
    for (std::size_t l = 1; l <= 3; ++l)
        for (const auto& c : all_complexes(l)) blocks.push_back(c);
    std::size_t count = 0;
    for (std::size_t m = 1; m <= 3; ++m)
        for (const auto& k : all_complexes(m)) {
            std::vector<std::size_t> pick(m, 0);
            while (true) {
                std::vector<SimplicialComplex> ls;
                for (auto p : pick) ls.push_back(blocks[p]);
                const auto c = compose(k, ls);
                registry.add(c);
                if (sr_compose_generators(k, ls) != minimal_nonfaces(c))
                    throw Failure("mismatch for base " + show(k) + " composed to " + show(c));
                ++count;
                std::size_t i = 0;
                while (i < m && ++pick[i] == blocks.size()) pick[i++] = 0;
                if (i == m) break;
            }
        }
    require(count == 52 + 5 * 26 * 26 + 19 * 26 * 26 * 26, "unexpected case count " + std::to_string(count));
}

// (10)
void link_decomposition() {
    {
        const auto [k, ls] = fixtures::three_block();
        const auto c = compose(k, ls);
        const auto& g = c.ground();
        const auto a = link_decompose(k, ls, g.simplex({"32"}), g.simplex({"11", "31"})).suspended_series(Field::Q);
        require(a == UniPoly::monomial(1), "lk(32)|{11,31} gave " + a.to_string());
        const auto b = link_decompose(k, ls, g.simplex({"32"}), g.simplex({"31", "21"})).suspended_series(Field::Q);
        require(b.is_zero(), "lk(32)|{31,21} gave " + b.to_string());
        const auto d = link_decompose(k, ls, g.simplex({"11", "32"}), g.simplex({"31"})).suspended_series(Field::Q);
        require(d == UniPoly::constant(1), "lk(11,32)|{31} gave " + d.to_string());
    }
    auto exhaust = [](const SimplicialComplex& k, const std::vector<SimplicialComplex>& ls) {
        const auto c = compose(k, ls);
        registry.add(c);
        SuspensionCache cache(Field::F2);
        for (Simplex s : c.faces())
            for_each_subset(c.ground().all() - s, [&](Simplex r) {
                const auto direct = cache.get(link_facets(c.facets(), s, r));
                if (link_decompose(k, ls, s, r).suspended_series(Field::F2) != direct)
                    throw Failure("factorization fails on " + show(c));
            });
    };
    std::vector<SimplicialComplex> blocks;
    for (std::size_t l = 1; l <= 2; ++l)
        for (const auto& c : all_complexes(l)) blocks.push_back(c);
    for (std::size_t m = 1; m <= 2; ++m)
        for (const auto& k : all_complexes(m))
            for (const auto& l1 : blocks)
                for (const auto& l2 : blocks) {
                    std::vector<SimplicialComplex> ls{l1, l2};
                    ls.resize(m);
                    exhaust(k, ls);
                }
    const auto [k3, ls3] = fixtures::three_block();
    exhaust(k3, ls3);
    std::mt19937_64 rng(8);
    for (int n = 0; n < 60; ++n) {
        auto [k, ls] = sampling::random_composition(rng, 4, 3, false);
        std::size_t total = 0;
        for (const auto& l : ls) total += l.vertex_count();
        if (total <= 8) exhaust(k, ls);
    }
}

// (11) Structural invariants over everything the other criteria constructed.
void structural() {
    registry.for_each([](std::size_t n, const std::vector<Simplex>& stored) {
        const SimplicialComplex k(GroundSet::numbered(n), stored);
        const auto& fs = k.facets();
        if (fs != stored) fail("stored facet list is not normalized", k);
        for (std::size_t i = 0; i < fs.size(); ++i)
            for (std::size_t j = 0; j < fs.size(); ++j)
                if (i != j && fs[i].subset_of(fs[j])) fail("facet list is not an antichain", k);
        if (!std::is_sorted(fs.begin(), fs.end(), FaceOrder{})) fail("facets out of canonical order", k);

        // Closed under removing one vertex at a time implies closed under all subsets.
        const auto faces = k.faces();
        std::unordered_set<std::uint64_t> face_set;
        for (Simplex f : faces) face_set.insert(f.bits());
        if (!face_set.count(0)) fail("missing the empty face", k);
        for (Simplex f : faces) {
            if (!k.is_face(f)) fail("enumerated a non-face", k);
            for (auto v : f.positions())
                if (!face_set.count(f.without(v).bits())) fail("not downward closed", k);
        }

        for (bool augmented : {false, true}) {
            const auto chain = simplicial_chain_complex(fs, augmented);
            if (!chain.boundary_squares_to_zero()) fail("simplicial boundary does not square to zero", k);
            std::int64_t chi = 0, sign = 1;
            for (auto b : betti_numbers(chain, Field::F2)) {
                chi += sign * static_cast<std::int64_t>(b);
                sign = -sign;
            }
            if (chi != chain.euler_characteristic()) fail("Euler characteristic mismatch", k);
        }
    });
    for (const auto& k : registry.models()) {
        const auto model = rmac_model(k, Field::Q);
        if (!model.chain.boundary_squares_to_zero()) fail("cubical boundary does not square to zero", k);
        std::int64_t chi = 0, sign = 1;
        for (auto b : betti_numbers(model.chain, Field::Q)) {
            chi += sign * static_cast<std::int64_t>(b);
            sign = -sign;
        }
        if (chi != model.chain.euler_characteristic()) fail("cubical Euler characteristic mismatch", k);
    }
    require(registry.size() > 0 && !registry.models().empty(), "nothing was registered");
    std::cout << "      (" << registry.size() << " complexes, " << registry.models().size() << " cubical models)\n";
}

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<void()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "poincare-example: csc and direct smash series", 1, poincare_example},
        {2, "composition-example: maximal faces", 1, composition_example},
        {3, "beta-example: direct and substituted beta-polynomial", 1, beta_example},
        {4, "sphere family dΔ^m for m = 2..5 over F2 and Q", 10, sphere_family},
        {5, "oracle sweep: all complexes on <= 4 vertices and 200 random on 5-6", 120, oracle_sweep},
        {6, "moment-angle bridge for K on <= 3 vertices", 30, moment_angle_bridge},
        {7, "path equality: csc, empty-bottom, (CA,A), splitting", 120, path_equality},
        {8, "balance identities of derived pairs", 30, balance_identities},
        {9, "Stanley-Reisner generators of compositions", 30, sr_composition},
        {10, "link decomposition in compositions", 30, link_decomposition},
        {11, "structural invariants of every constructed object", 300, structural},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (error.empty() && seconds > c.budget_seconds)
            error = "over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget";
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(3);
        line << (error.empty() ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " (" << seconds << " s)";
        if (!error.empty()) line << " - " << error;
        std::cout << line.str() << std::endl;
        failed += !error.empty();
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed ? 1 : 0;
}
