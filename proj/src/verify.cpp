#include "polyjoin/verify.hpp"

#include <algorithm>
#include <exception>
#include <functional>

#include "polyjoin/betti.hpp"
#include "polyjoin/joins.hpp"
#include "polyjoin/oracle.hpp"
#include "polyjoin/series.hpp"
#include "polyjoin/srings.hpp"
#include "polyjoin/topology.hpp"

namespace polyjoin {

namespace fixtures {

Composition three_block() {
    return {build_complex({"1", "2", "3"}, {{"1"}, {"2", "3"}}),
            {build_complex({"1"}, {}), build_complex({"1"}, {{"1"}}), build_complex({"1", "2"}, {{"1"}, {"2"}})}};
}

Composition two_ghosts() {
    return {build_complex({"1", "2"}, {}),
            {build_complex({"1"}, {{"1"}}), build_complex({"1", "2"}, {{"1"}, {"2"}})}};
}

Composition sr_example() {
    return {build_complex({"1", "2"}, {{"2"}}),
            {build_complex({"1", "2"}, {{"1"}, {"2"}}), build_complex({"1", "2"}, {{"1"}})}};
}

PairDecomposition poincare_pair() { return {{{0, 1}, {4, 1}}, {{6, 1}}, {{2, 1}}}; }

}  // namespace fixtures

namespace sampling {

std::size_t below(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

GradedDims random_dims(std::mt19937_64& rng) {
    GradedDims d;
    const std::size_t terms = below(rng, 3);
    for (std::size_t i = 0; i < terms; ++i) d.add(static_cast<int>(below(rng, 5)), 1 + static_cast<std::int64_t>(below(rng, 2)));
    return d;
}

PairDecomposition random_pair(std::mt19937_64& rng) {
    PairDecomposition p{random_dims(rng), random_dims(rng), random_dims(rng)};
    p.B.add(0, 1);
    return p;
}

SimplicialComplex random_complex(std::mt19937_64& rng, std::size_t n, const std::vector<std::string>& labels,
                                 bool ghost_free) {
    const std::uint64_t mask = Simplex::range(n).bits();
    std::vector<Simplex> faces;
    const std::size_t count = below(rng, 4);
    for (std::size_t i = 0; i < count; ++i) faces.emplace_back(rng() & mask);
    GroundSet ground(labels);
    if (ghost_free)
        for (std::size_t v = 0; v < n; ++v) faces.push_back(Simplex{}.with(v));
    return SimplicialComplex(ground, maximal_faces(std::move(faces)));
}

Composition random_composition(std::mt19937_64& rng, std::size_t max_base, std::size_t max_block,
                               bool ghost_free_blocks) {
    const std::size_t m = 1 + below(rng, max_base);
    Composition c{random_complex(rng, m, GroundSet::numbered(m).labels(), false), {}};
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t l = 1 + below(rng, max_block);
        c.ls.push_back(random_complex(rng, l, GroundSet::numbered(l).labels(), ghost_free_blocks));
    }
    return c;
}

}  // namespace sampling

namespace {

CheckResult run_check(std::string name, std::string anchor, const std::function<std::string()>& body) {
    CheckResult r{std::move(name), std::move(anchor), false, {}};
    try {
        r.detail = body();
        r.passed = r.detail.empty();
    } catch (const std::exception& e) {
        r.detail = std::string("exception: ") + e.what();
    }
    return r;
}

std::string expect(bool ok, const std::string& what) { return ok ? "" : what; }

PairAssignment repeat(const PairDecomposition& p, std::size_t n) { return PairAssignment(n, p); }

}  // namespace

std::vector<CheckResult> verify_paper() {
    std::vector<CheckResult> out;
    out.push_back(run_check("poincare-example", "two ghost vertices with L_1 a point and L_2 two points", [] {
        const auto [k, ls] = fixtures::two_ghosts();
        const auto ps = repeat(fixtures::poincare_pair(), 3);
        const UniPoly expected = UniPoly::monomial(9) + UniPoly::monomial(11) + UniPoly::monomial(12, 3) +
                                 UniPoly::monomial(14, 5) + UniPoly::monomial(16, 2);
        const UniPoly blockwise = csc_series(k, ls, ps, Mode::smash, Field::Q);
        const UniPoly direct = bbcg_series(compose(k, ls), ps, Mode::smash, Field::Q);
        return expect(blockwise == expected && direct == expected,
                      "got " + blockwise.to_string() + " and " + direct.to_string());
    }));
    out.push_back(run_check("composition-example", "composition K(L_1, L_2, L_3) with K = {{1},{2,3}}", [] {
        const auto [k, ls] = fixtures::three_block();
        const SimplicialComplex c = compose(k, ls);
        const SimplicialComplex expected = build_complex(
            c.ground().labels(), {{"21", "31", "32"}, {"11", "21", "31"}, {"11", "21", "32"}});
        return expect(c == expected, "unexpected maximal faces");
    }));
    out.push_back(run_check("beta-example", "beta-polynomial of the composition with every A = S^2", [] {
        const auto [k, ls] = fixtures::three_block();
        const SimplicialComplex c = compose(k, ls);
        const std::vector<GradedDims> a(c.vertex_count(), GradedDims{{2, 1}});
        const MultiPoly expected =
            MultiPoly::term(0, Simplex{}) + MultiPoly::term(8, c.ground().simplex({"11", "31", "32"}));
        const MultiPoly direct = beta_polynomial(c, a, Field::Q);
        const MultiPoly composed = beta_compose(k, ls, a, Field::Q);
        return expect(direct == expected && composed == expected,
                      "got " + direct.to_string(c.ground()) + " and " + composed.to_string(c.ground()));
    }));
    return out;
}

std::vector<CheckResult> verify_properties(std::uint64_t seed) {
    std::vector<CheckResult> out;
    std::vector<SimplicialComplex> small;
    for (std::size_t n = 1; n <= 3; ++n) {
        auto all = all_complexes(n);
        small.insert(small.end(), all.begin(), all.end());
    }

    out.push_back(run_check("boundary-squares-to-zero", "cubical model of Z_K(D1,S0)", [&] {
        for (const auto& k : small)
            if (!rmac_model(k, Field::Q).chain.boundary_squares_to_zero()) return std::string("failed");
        return std::string();
    }));
    out.push_back(run_check("euler-characteristic", "cell count against Betti numbers", [&] {
        for (const auto& k : small) {
            const auto model = rmac_model(k, Field::F2);
            std::int64_t betti_chi = 0, sign = 1;
            for (auto b : betti_numbers(model.chain, Field::F2)) {
                betti_chi += sign * static_cast<std::int64_t>(b);
                sign = -sign;
            }
            if (betti_chi != model.chain.euler_characteristic()) return std::string("mismatch");
        }
        return std::string();
    }));
    out.push_back(run_check("restriction-lemma", "(K_I)_J = K_{I∩J}", [&] {
        for (const auto& k : small)
            for (std::uint64_t i = 0; i < (1u << k.vertex_count()); ++i)
                for (std::uint64_t j = 0; j < (1u << k.vertex_count()); ++j) {
                    const Simplex is(i), js(j);
                    const auto lhs = k.full_subcomplex(is).full_subcomplex(compress(js & is, is));
                    if (!(lhs == k.full_subcomplex(is & js))) return std::string("failed");
                }
        return std::string();
    }));
    out.push_back(run_check("oracle-sweep", "Z_{dΔ^m}(D1,S0) = S^m and its generalisation", [&] {
        for (const auto& k : small)
            for (Field f : {Field::F2, Field::Q})
                if (!verify_formula(k, f)) return std::string("formula and oracle disagree");
        return std::string();
    }));

    std::mt19937_64 rng(seed);
    out.push_back(run_check("path-equality", "block-wise, nested and direct series agree", [&] {
        for (int n = 0; n < 20; ++n) {
            const auto [k, ls] = sampling::random_composition(rng, 3, 2, true);
            const SimplicialComplex c = compose(k, ls);
            PairAssignment ps;
            for (std::size_t v = 0; v < c.vertex_count(); ++v) ps.push_back(sampling::random_pair(rng));
            const BlockLayout layout = BlockLayout::of(ls);
            for (Mode mode : {Mode::full, Mode::smash}) {
                PairAssignment nested;
                for (std::size_t i = 0; i < ls.size(); ++i)
                    nested.push_back(pair_from_csc(ls[i], block_pairs(ps, layout, i), Field::Q, mode));
                const UniPoly a = csc_series(k, ls, ps, mode, Field::Q);
                if (a != bbcg_series(k, nested, mode, Field::Q) || a != bbcg_series(c, ps, mode, Field::Q))
                    return std::string("csc paths disagree");

                std::vector<JoinEntry> entries;
                for (const auto& l : ls) entries.push_back(JoinEntry::empty_bottom(l));
                const JoinSpec spec{k, entries};
                const UniPoly e = empty_series(k, ls, ps, mode, Field::Q);
                if (e != empty_series_expanded(k, ls, ps, mode, Field::Q) ||
                    e != bbcg_series(polyhedral_join(spec), ps, mode, Field::Q))
                    return std::string("empty-bottom paths disagree");
            }
            if (!splitting_check(c, ps, Field::Q)) return std::string("splitting fails");
        }
        return std::string();
    }));
    out.push_back(run_check("sr-composition", "generators of I(K(L)) from those of K and L_i", [&] {
        for (int n = 0; n < 20; ++n) {
            const auto [k, ls] = sampling::random_composition(rng, 3, 3, false);
            if (sr_compose_generators(k, ls) != minimal_nonfaces(compose(k, ls))) return std::string("mismatch");
        }
        return std::string();
    }));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return out;
}

}  // namespace polyjoin
