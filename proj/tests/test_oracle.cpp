#include <doctest.h>

#include <cstdlib>

#include "polyjoin/joins.hpp"
#include "polyjoin/oracle.hpp"
#include "polyjoin/series.hpp"

using namespace polyjoin;

TEST_CASE("cubical models of small complexes") {
    const auto point = rmac_model(standard_complex(StandardKind::simplex, 0), Field::F2);
    CHECK(point.cells.size() == 2);
    CHECK(point.cells[0].size() == 2);
    CHECK(point.cells[1].size() == 1);
    CHECK(rmac_betti_poly(standard_complex(StandardKind::simplex, 0), Field::Q) == UniPoly::constant(1));

    const auto ghost = rmac_model(standard_complex(StandardKind::empty, 1), Field::F2);
    CHECK(ghost.cells.size() == 1);
    CHECK(ghost.cells[0].size() == 2);
    CHECK(rmac_betti_poly(standard_complex(StandardKind::empty, 1), Field::Q) == UniPoly::constant(2));

    CHECK(rmac_betti_poly(standard_complex(StandardKind::boundary, 2), Field::Q) ==
          UniPoly::constant(1) + UniPoly::monomial(2));
    CHECK(rmac_betti_poly(standard_complex(StandardKind::boundary, 3), Field::F2) ==
          UniPoly::constant(1) + UniPoly::monomial(3));
    CHECK(rmac_betti_poly(build_complex({"1", "2", "3", "4"}, {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"1", "4"}}),
                          Field::Q) == UniPoly::constant(1) + UniPoly::monomial(1, 2) + UniPoly::monomial(2));
    CHECK(rmac_betti_poly(standard_complex(StandardKind::simplex, 2), Field::Q) == UniPoly::constant(1));
}

TEST_CASE("cell counts and boundary squares") {
    for (const auto& k : all_complexes(4)) {
        const auto model = rmac_model(k, Field::Q);
        CHECK(model.chain.boundary_squares_to_zero());
        for (std::size_t d = 0; d < model.cells.size(); ++d) {
            std::size_t want = 0;
            for (Simplex f : k.faces())
                if (f.size() == d) want += std::size_t{1} << (4 - d);
            CHECK(model.cells[d].size() == want);
        }
    }
}

TEST_CASE("enumeration covers every complex") {
    std::size_t total = 0;
    for (std::size_t n = 0; n <= 4; ++n) total += all_complexes(n).size();
    CHECK(total == 194);
    CHECK(all_complexes(3).size() == 19);
}

TEST_CASE("formula and oracle agree on three vertices and known cases") {
    for (const auto& k : all_complexes(3))
        for (Field f : {Field::F2, Field::Q}) CHECK(verify_formula(k, f));
    const std::vector<SimplicialComplex> ls(2, standard_complex(StandardKind::boundary, 1));
    const auto c = compose(standard_complex(StandardKind::boundary, 1), ls);
    CHECK(c.facets() == standard_complex(StandardKind::boundary, 3).facets());
    CHECK(verify_formula(c, Field::Q));
    const auto rp2 = build_complex({"1", "2", "3", "4", "5", "6"},
                                   {{"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"}, {"1", "5", "6"}, {"1", "2", "6"},
                                    {"2", "3", "5"}, {"2", "4", "5"}, {"2", "4", "6"}, {"3", "4", "6"}, {"3", "5", "6"}});
    CHECK(verify_formula(rp2, Field::F2));
    CHECK(verify_formula(rp2, Field::Q));
    CHECK(rmac_betti_poly(rp2, Field::F2) != rmac_betti_poly(rp2, Field::Q));
}

TEST_CASE("size limit") {
    const auto big = standard_complex(StandardKind::empty, 17);
    CHECK_THROWS_AS(rmac_model(big, Field::F2), std::length_error);
    setenv("POLYJOIN_MAX_VERTICES", "3", 1);
    CHECK_THROWS_AS(rmac_model(standard_complex(StandardKind::empty, 4), Field::F2), std::length_error);
    setenv("POLYJOIN_MAX_VERTICES", "nonsense", 1);
    CHECK_THROWS(oracle_vertex_limit());
    unsetenv("POLYJOIN_MAX_VERTICES");
    CHECK(oracle_vertex_limit() == 16);
}

TEST_CASE("random complexes are deterministic") {
    CHECK(random_complex(5, 6) == random_complex(5, 6));
    CHECK(random_complex(5, 6).vertex_count() == 6);
}
