#include <catch2/catch_amalgamated.hpp>

#include "staircase/census.hpp"
#include "staircase/families.hpp"
#include "staircase/format.hpp"
#include "staircase/hom_oracle.hpp"
#include "staircase/tangent.hpp"
#include "test_support.hpp"

using namespace staircase;

TEST_CASE("taylor presentation wiring") {
    auto koszul = taylor_presentation(parse_ideal("x, y", 2));
    REQUIRE(koszul.generator_degrees.size() == 2);
    REQUIRE(koszul.relations.size() == 1);
    REQUIRE(koszul.relations[0].lcm == Exponent{1, 1});

    auto square = taylor_presentation(power_ideal(3, 2));
    REQUIRE(square.relations.size() == 15);
    for (const auto& rel : square.relations) {
        REQUIRE(rel.a < rel.b);
        REQUIRE(divides(square.generator_degrees[rel.a], rel.lcm));
        REQUIRE(divides(square.generator_degrees[rel.b], rel.lcm));
    }
    REQUIRE_THROWS_AS(taylor_presentation(MonomialIdeal(3)), std::invalid_argument);
}

TEST_CASE("prime validation") {
    REQUIRE_THROWS_AS(require_prime(1), std::invalid_argument);
    REQUIRE_THROWS_AS(require_prime(32004), std::invalid_argument);
    REQUIRE_NOTHROW(require_prime(2));
    REQUIRE_NOTHROW(require_prime(32003));
}

TEST_CASE("values into the residue field count the generators") {
    auto m = power_ideal(3, 1);
    REQUIRE(hom_dim(m, m) == 3);
    std::mt19937 rng(7201);
    for (int trial = 0; trial < 10; ++trial) {
        auto ideal = test_support::random_artinian_ideal(rng, 3, 20);
        REQUIRE(hom_dim(ideal, m) == static_cast<long long>(ideal.num_generators()));
    }
}

TEST_CASE("kernel dimensions match the component counts exhaustively") {
    for (long long d = 1; d <= 5; ++d) {
        enumerate_all_artinian(3, d, [&](const MonomialIdeal& ideal) {
            const long long expected = tangent_report(ideal).total;
            REQUIRE(hom_dim(ideal, ideal, 2) == expected);
            REQUIRE(hom_dim(ideal, ideal, 3) == expected);
            REQUIRE(hom_dim(ideal, ideal, 32003) == expected);
        });
    }
}

TEST_CASE("fat point kernels") {
    for (int r = 2; r <= 3; ++r)
        REQUIRE(hom_dim(power_ideal(3, r), power_ideal(3, r)) ==
                binom(r + 2, 2) * binom(r + 1, 2));
}

TEST_CASE("graded strands refine the kernel") {
    std::mt19937 rng(7202);
    for (int trial = 0; trial < 8; ++trial) {
        auto ideal = test_support::random_artinian_ideal(rng, 3, 10);
        const auto box = degree_box(ideal);
        long long strand_sum = 0;
        for (int a = box.lo[0]; a <= box.hi[0]; ++a)
            for (int b = box.lo[1]; b <= box.hi[1]; ++b)
                for (int c = box.lo[2]; c <= box.hi[2]; ++c)
                    strand_sum += hom_dim_graded(ideal, ideal, {a, b, c});
        REQUIRE(strand_sum == hom_dim(ideal, ideal));
    }
}

TEST_CASE("graded strands match the engine degree by degree") {
    for (long long d = 1; d <= 5; ++d) {
        enumerate_all_artinian(3, d, [&](const MonomialIdeal& ideal) {
            const auto rep = tangent_report(ideal);
            const auto box = degree_box(ideal);
            for (int a = box.lo[0]; a <= box.hi[0]; ++a)
                for (int b = box.lo[1]; b <= box.hi[1]; ++b)
                    for (int c = box.lo[2]; c <= box.hi[2]; ++c) {
                        MultiDegree alpha{a, b, c};
                        const auto it = rep.per_degree.find(alpha);
                        const long long expected = it == rep.per_degree.end() ? 0 : it->second;
                        REQUIRE(hom_dim_graded(ideal, ideal, alpha) == expected);
                    }
        });
    }
}

TEST_CASE("constant-signature strands vanish") {
    auto ideal = power_ideal(3, 2);
    REQUIRE(hom_dim_graded(ideal, ideal, {0, 1, 0}) == 0);
    REQUIRE(hom_dim_graded(ideal, ideal, {-1, -1, -1}) == 0);
}

TEST_CASE("two-variable length identity on the worked examples") {
    auto m2 = parse_ideal("x, y", 2);
    auto res = two_var_length_identity_check(m2, m2);
    REQUIRE(res.lhs == 2);
    REQUIRE(res.rhs == 2);
    REQUIRE(res.ok);

    auto sq = power_ideal(2, 2);
    auto res2 = two_var_length_identity_check(sq, m2);
    REQUIRE(res2.rhs == 3);
    REQUIRE(res2.ok);

    std::mt19937 rng(7203);
    for (int trial = 0; trial < 60; ++trial) {
        auto a = test_support::random_artinian_ideal(rng, 2, 12);
        auto b = test_support::random_artinian_ideal(rng, 2, 12);
        auto r = two_var_length_identity_check(a, b);
        CAPTURE(to_text(a), to_text(b), r.lhs, r.rhs);
        REQUIRE(r.ok);
    }
}

TEST_CASE("matrix caps and argument checks") {
    REQUIRE_THROWS_AS(GfpMatrix(100000, 100000, 32003), BudgetError);
    REQUIRE_THROWS_AS(hom_dim(power_ideal(3, 2), power_ideal(3, 2), 6), std::invalid_argument);
    REQUIRE_THROWS_AS(hom_dim(power_ideal(3, 2), parse_ideal("x, y", 2)), std::invalid_argument);
    REQUIRE_THROWS_AS(two_var_length_identity_check(power_ideal(3, 2), power_ideal(3, 2)),
                      std::invalid_argument);
}

TEST_CASE("rank of small hand matrices") {
    GfpMatrix m(2, 3, 5);
    m.add(0, 0, 1);
    m.add(0, 1, 2);
    m.add(1, 0, 2);
    m.add(1, 1, 4);  // second row is twice the first
    REQUIRE(m.rank() == 1);

    GfpMatrix id3(3, 3, 2);
    for (int i = 0; i < 3; ++i) id3.add(i, i, 1);
    REQUIRE(id3.rank() == 3);
}
