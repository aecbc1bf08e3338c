#include <doctest.h>

#include "oracles.hpp"
#include "polyjoin/joins.hpp"
#include "polyjoin/oracle.hpp"
#include "polyjoin/series.hpp"
#include "polyjoin/verify.hpp"

using namespace polyjoin;

namespace {

PairAssignment interval(std::size_t n) { return PairAssignment(n, preset_pair(PresetPair::interval_s0)); }

PairAssignment random_pairs(std::mt19937_64& rng, std::size_t n) {
    PairAssignment ps;
    for (std::size_t i = 0; i < n; ++i) ps.push_back(sampling::random_pair(rng));
    return ps;
}

}  // namespace

TEST_CASE("spheres from boundaries of simplices") {
    for (std::size_t m = 1; m <= 5; ++m)
        for (Field f : {Field::F2, Field::Q})
            CHECK(bbcg_series(standard_complex(StandardKind::boundary, m), interval(m + 1), Mode::full, f) ==
                  UniPoly::constant(1) + UniPoly::monomial(static_cast<int>(m)));
}

TEST_CASE("the two-ghost example in smash mode") {
    const auto [k, ls] = fixtures::two_ghosts();
    const PairAssignment ps(3, fixtures::poincare_pair());
    const UniPoly want = UniPoly::monomial(9) + UniPoly::monomial(11) + UniPoly::monomial(12, 3) +
                         UniPoly::monomial(14, 5) + UniPoly::monomial(16, 2);
    CHECK(csc_series(k, ls, ps, Mode::smash, Field::Q) == want);
    CHECK(bbcg_series(compose(k, ls), ps, Mode::smash, Field::Q) == want);
}

TEST_CASE("a simplex gives a product") {
    std::mt19937_64 rng(2);
    for (int n = 0; n < 20; ++n) {
        const auto ps = random_pairs(rng, 3);
        UniPoly prod = UniPoly::constant(1);
        for (const auto& p : ps) prod *= p.B.series() + p.C.series();
        CHECK(bbcg_series(standard_complex(StandardKind::simplex, 2), ps, Mode::full, Field::Q) == prod);
        UniPoly a_prod = UniPoly::constant(1);
        for (const auto& p : ps) a_prod *= p.B.series() + p.E.series();
        CHECK(bbcg_series(build_complex({"1", "2", "3"}, {}), ps, Mode::full, Field::Q) == a_prod);
    }
}

TEST_CASE("unit in degree zero when the spaces are connected") {
    std::mt19937_64 rng(23);
    for (int n = 0; n < 50; ++n) {
        const std::size_t m = 1 + sampling::below(rng, 4);
        const auto k = sampling::random_complex(rng, m, GroundSet::numbered(m).labels(), false);
        PairAssignment ps = random_pairs(rng, m);
        for (auto& p : ps) {
            GradedDims b{{0, 1}}, c, e;
            for (auto [d, r] : p.B.ranks()) b.add(d + 1, d == 0 ? r - 1 : r);
            for (auto [d, r] : p.C.ranks()) c.add(d + 1, r);
            for (auto [d, r] : p.E.ranks()) e.add(d + 1, r);
            p = {b, c, e};
        }
        CHECK(bbcg_series(k, ps, Mode::full, Field::Q).coeff(0) == 1);
    }
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto& k : all_complexes(n))
            if (k.ghost_vertices().empty()) CHECK(bbcg_series(k, interval(n), Mode::full, Field::F2).coeff(0) == 1);
}

TEST_CASE("three routes through a composition agree") {
    std::mt19937_64 rng(29);
    for (int n = 0; n < 40; ++n) {
        const auto [k, ls] = sampling::random_composition(rng, 3, 2, false);
        const auto c = compose(k, ls);
        const auto ps = random_pairs(rng, c.vertex_count());
        const auto layout = BlockLayout::of(ls);
        for (Mode mode : {Mode::full, Mode::smash}) {
            PairAssignment nested;
            for (std::size_t i = 0; i < ls.size(); ++i)
                nested.push_back(pair_from_csc(ls[i], block_pairs(ps, layout, i), Field::Q, mode));
            const auto a = csc_series(k, ls, ps, mode, Field::Q);
            CHECK(a == bbcg_series(k, nested, mode, Field::Q));
            CHECK(a == bbcg_series(c, ps, mode, Field::Q));
        }
    }
}

TEST_CASE("empty-bottom joins: three routes agree") {
    std::mt19937_64 rng(31);
    for (int n = 0; n < 40; ++n) {
        const auto [k, ls] = sampling::random_composition(rng, 3, 2, true);
        std::vector<JoinEntry> entries;
        for (const auto& l : ls) entries.push_back(JoinEntry::empty_bottom(l));
        const JoinSpec spec{k, entries};
        const auto j = polyhedral_join(spec);
        const auto ps = random_pairs(rng, j.vertex_count());
        for (Mode mode : {Mode::full, Mode::smash}) {
            const auto a = empty_series(k, ls, ps, mode, Field::Q);
            CHECK(a == empty_series_expanded(k, ls, ps, mode, Field::Q));
            CHECK(a == bbcg_series(j, ps, mode, Field::Q));
            CHECK(a == join_series(spec, ps, mode, Field::Q));
        }
    }
}

TEST_CASE("join series over simplex-top entries is the composition series") {
    const auto [k, ls] = fixtures::three_block();
    std::vector<JoinEntry> entries;
    for (const auto& l : ls) entries.push_back(JoinEntry::simplex_top(l));
    const PairAssignment ps(4, preset_pair(PresetPair::disk2_circle));
    CHECK(join_series({k, entries}, ps, Mode::full, Field::Q) == bbcg_series(compose(k, ls), ps, Mode::full, Field::Q));
    const auto l2 = standard_complex(StandardKind::boundary, 1);
    const JoinSpec general{standard_complex(StandardKind::simplex, 0),
                           {JoinEntry::general(l2, build_complex({"1", "2"}, {{"1"}}))}};
    CHECK_THROWS_AS(join_series(general, interval(2), Mode::full, Field::Q), std::invalid_argument);
}

TEST_CASE("cone pairs: the two formulas agree") {
    std::mt19937_64 rng(37);
    for (int n = 0; n < 40; ++n) {
        const auto [k, ls] = sampling::random_composition(rng, 3, 2, false);
        const auto c = compose(k, ls);
        std::vector<GradedDims> a;
        PairAssignment cones;
        for (std::size_t v = 0; v < c.vertex_count(); ++v) {
            a.push_back(sampling::random_dims(rng));
            cones.push_back(cone_pair(a.back()));
        }
        const auto reduced = caa_series(k, ls, a, Field::Q, true);
        CHECK(reduced == remark_series(k, ls, a, Field::Q));
        CHECK(caa_series(k, ls, a, Field::Q, false) == bbcg_series(c, cones, Mode::full, Field::Q));
    }
}

TEST_CASE("splitting") {
    std::mt19937_64 rng(41);
    for (int n = 0; n < 40; ++n) {
        const std::size_t m = 1 + sampling::below(rng, 4);
        const auto k = sampling::random_complex(rng, m, GroundSet::numbered(m).labels(), false);
        CHECK(splitting_check(k, random_pairs(rng, m), Field::Q));
    }
}

TEST_CASE("arity errors") {
    const auto [k, ls] = fixtures::three_block();
    CHECK_THROWS_AS(csc_series(k, std::span(ls).first(2), interval(3), Mode::full, Field::Q), std::invalid_argument);
    CHECK_THROWS_AS(csc_series(k, ls, interval(3), Mode::full, Field::Q), std::invalid_argument);
}
