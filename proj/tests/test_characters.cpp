#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coset/characters.hpp"
#include "coset/errors.hpp"
#include "coset/modealg.hpp"

using namespace coset;

TEST_CASE("lowest energies and central charges") {
    CHECK(affine_su2_h(1, 0) == 0);
    CHECK(affine_su2_h(1, 1) == rat(1, 4));
    CHECK(affine_su2_h(16, 2) == rat(1, 9));
    CHECK(affine_su2_h(16, 8) == rat(10, 9));
    CHECK(affine_su2_c(1) == 1);
    CHECK(affine_su2_c(16) == rat(8, 3));
}

TEST_CASE("level-one vacuum character") {
    auto ch = affine_su2_character(1, 0, 6);
    CHECK(ch.offset == 0);
    std::vector<mpz_class> dims{1, 3, 4, 7, 13, 19, 29};
    CHECK(character_dims(ch) == dims);
    std::vector<long> p{1, 1, 2, 3, 5, 7, 11};
    for (long g = 0; g <= 6; ++g) CHECK(character_coeff(ch, g, 0) == p[g]);
    CHECK_THROWS_AS(character_coeff(ch, 7, 0), inconsistency_error);
}

TEST_CASE("top spin string") {
    auto ch = affine_su2_character(2, 2, 0);
    CHECK(ch.offset == affine_su2_h(2, 2));
    zpoly expect{{-2, 1}, {0, 1}, {2, 1}};
    CHECK(ch.grades[0] == expect);
}

TEST_CASE("character coefficients match module gram ranks") {
    for (long k = 1; k <= 2; ++k)
        for (long l = 0; l <= k; ++l) {
            auto ch = affine_su2_character(k, l, 4);
            auto mod = affine_su2_module(k, l, 4);
            for (long g = 0; g <= 4; ++g)
                for (long w = -(l + 8); w <= l + 8; w += 2) {
                    CAPTURE(k);
                    CAPTURE(l);
                    CAPTURE(g);
                    CAPTURE(w);
                    CHECK(character_coeff(ch, g, w) == block_rank(mod, g, w));
                }
        }
}

TEST_CASE("peeling the square of the level-one vacuum") {
    auto a = affine_su2_character(1, 0, 6);
    auto prod = character_product(a, a);
    CHECK(prod.k == 2);
    CHECK(prod.offset == 0);

    auto series = branching_functions(prod, 6);
    REQUIRE(series.size() == 2);
    CHECK(series[0].target == 0);
    CHECK(series[0].lead == 0);
    CHECK(series[1].target == 2);
    CHECK(series[1].lead == rat(1, 2));

    auto vac = virasoro_irrep_dims(rat(1, 2), 0, static_cast<long>(series[0].coeffs.size()) - 1);
    for (std::size_t i = 0; i < series[0].coeffs.size(); ++i) CHECK(series[0].coeffs[i] == vac[i]);
    auto eps = virasoro_irrep_dims(rat(1, 2), rat(1, 2), static_cast<long>(series[1].coeffs.size()) - 1);
    for (std::size_t i = 0; i < series[1].coeffs.size(); ++i) CHECK(series[1].coeffs[i] == eps[i]);
}

TEST_CASE("mixed product leads") {
    auto prod = character_product(affine_su2_character(1, 1, 6), affine_su2_character(2, 1, 6));
    CHECK(prod.k == 3);
    CHECK(prod.offset == rat(7, 16));

    auto series = branching_functions(prod, 6);
    REQUIRE(series.size() == 2);
    bool saw0 = false, saw2 = false;
    for (const auto& s : series) {
        if (s.target == 0) {
            saw0 = true;
            CHECK(s.lead == rat(7, 16));
        }
        if (s.target == 2) {
            saw2 = true;
            CHECK(s.lead == rat(3, 80));
        }
        REQUIRE(!s.coeffs.empty());
        CHECK(s.coeffs[0] == 1);
    }
    CHECK(saw0);
    CHECK(saw2);
}

TEST_CASE("branching verification for the diagonal pairs") {
    branching_claim m1;
    m1.k1 = 1;
    m1.l1 = 0;
    m1.k2 = 1;
    m1.l2 = 0;
    m1.rows.push_back({0, {{0, 1}}});
    m1.rows.push_back({2, {{rat(1, 2), 1}}});
    auto rep = verify_branching(m1, 6);
    CHECK(rep.pass);
    CHECK(rep.coset_c == rat(1, 2));
    for (const auto& r : rep.rows) {
        CHECK(r.pass);
        CHECK(r.first_fail_grade == -1);
    }

    branching_claim swapped = m1;
    swapped.rows[0].coset = {{rat(1, 2), 1}};
    swapped.rows[1].coset = {{0, 1}};
    auto bad = verify_branching(swapped, 6);
    CHECK(!bad.pass);
    bool fail0 = false;
    for (const auto& r : bad.rows)
        if (!r.pass) {
            CHECK(r.first_fail_grade == 0);
            fail0 = true;
        }
    CHECK(fail0);

    branching_claim m2;
    m2.k1 = 1;
    m2.l1 = 0;
    m2.k2 = 2;
    m2.l2 = 0;
    m2.rows.push_back({0, {{0, 1}}});
    m2.rows.push_back({2, {{rat(3, 5), 1}}});
    auto rep2 = verify_branching(m2, 5);
    CHECK(rep2.pass);
    CHECK(rep2.coset_c == rat(7, 10));

    branching_claim m2wrong = m2;
    m2wrong.rows[1].coset = {{rat(1, 10), 1}};
    CHECK(!verify_branching(m2wrong, 5).pass);

    branching_claim m3;
    m3.k1 = 1;
    m3.l1 = 0;
    m3.k2 = 3;
    m3.l2 = 0;
    m3.rows.push_back({0, {{0, 1}}});
    m3.rows.push_back({2, {{rat(2, 3), 1}}});
    m3.rows.push_back({4, {{3, 1}}});
    auto rep3 = verify_branching(m3, 5);
    CHECK(rep3.pass);
    CHECK(rep3.coset_c == rat(4, 5));
}
