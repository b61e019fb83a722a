#include <catch2/catch_amalgamated.hpp>

#include "staircase/census.hpp"
#include "staircase/families.hpp"
#include "staircase/format.hpp"
#include "staircase/tangent.hpp"
#include "test_support.hpp"

using namespace staircase;

TEST_CASE("signature patterns") {
    REQUIRE(signature_of({-1, 0, 0}) == Signature("npp"));
    REQUIRE(signature_of({0, -2, 1}) == Signature("pnp"));
    REQUIRE_FALSE(signature_of({1, 1, 1}).has_value());
    REQUIRE_FALSE(signature_of({-1, -3, -2}).has_value());
    REQUIRE(all_signatures(3).size() == 6);
    REQUIRE(all_signatures(2) == std::vector<Signature>{"np", "pn"});
}

TEST_CASE("degree box bounds") {
    auto box = degree_box(power_ideal(3, 2));
    REQUIRE(box.lo == std::vector<int>{-2, -2, -2});
    REQUIRE(box.hi == std::vector<int>{1, 1, 1});
    auto box2 = degree_box(parse_ideal("x, y, z^2"));
    REQUIRE(box2.lo == std::vector<int>{-1, -1, -2});
    REQUIRE(box2.hi == std::vector<int>{0, 0, 1});
}

TEST_CASE("no tangent directions outside the degree box") {
    auto ideal = power_ideal(3, 3);
    auto box = degree_box(ideal);
    // sweep a strictly larger box and demand zeros outside the nominal one
    for (int a = box.lo[0] - 2; a <= box.hi[0] + 2; ++a)
        for (int b = box.lo[1] - 2; b <= box.hi[1] + 2; ++b)
            for (int c = box.lo[2] - 2; c <= box.hi[2] + 2; ++c) {
                MultiDegree alpha{a, b, c};
                if (box.contains(alpha)) continue;
                REQUIRE(graded_tangent_dim(ideal, alpha).count == 0);
            }
}

TEST_CASE("graded counts on the smallest examples") {
    auto point2 = parse_ideal("x, y", 2);
    auto g = graded_tangent_dim(point2, {-1, 0});
    REQUIRE(g.count == 1);
    REQUIRE(g.components.size() == 1);
    REQUIRE(g.components[0].bounded);
    REQUIRE(g.components[0].points == std::vector<Exponent>{{0, 0}});

    REQUIRE(graded_tangent_dim(power_ideal(3, 2), {-1, 0, 0}).count == 3);
    REQUIRE(graded_tangent_dim(power_ideal(3, 2), {-1, -1, 0}).count == 0);
}

TEST_CASE("tangent report of the unit ideal is empty") {
    auto rep = tangent_report(parse_ideal("1", 3));
    REQUIRE(rep.d == 0);
    REQUIRE(rep.total == 0);
    REQUIRE(rep.socle_dim == 0);
    REQUIRE(rep.per_degree.empty());
}

TEST_CASE("tangent report of the origin point") {
    auto rep = tangent_report(parse_ideal("x, y, z"));
    REQUIRE(rep.total == 3);
    REQUIRE(rep.signature_totals.at("ppn") == 1);
    REQUIRE(rep.signature_totals.at("pnp") == 1);
    REQUIRE(rep.signature_totals.at("npp") == 1);
    REQUIRE(rep.signature_totals.at("pnn") == 0);
    REQUIRE(rep.signature_totals.at("npn") == 0);
    REQUIRE(rep.signature_totals.at("nnp") == 0);
    REQUIRE(rep.socle_dim == 3);
}

TEST_CASE("report totals agree with the per-degree and signature sums") {
    std::mt19937 rng(7101);
    for (int trial = 0; trial < 25; ++trial) {
        auto ideal = test_support::random_artinian_ideal(rng, 3, 25);
        auto rep = tangent_report(ideal);
        long long by_degree = 0;
        for (const auto& [alpha, dim] : rep.per_degree) {
            REQUIRE(signature_of(alpha).has_value());
            by_degree += dim;
        }
        long long by_signature = 0;
        for (const auto& [sig, dim] : rep.signature_totals) by_signature += dim;
        REQUIRE(rep.total == by_degree);
        REQUIRE(rep.total == by_signature);
        REQUIRE(rep.socle_dim <= rep.total);
    }
}

TEST_CASE("fat point graded dimensions match the closed form") {
    REQUIRE(fat_point_graded_dim(3, 2, {-1, 0, 0}) == 3);
    REQUIRE(fat_point_graded_dim(3, 2, {1, -1, -1}) == 1);
    REQUIRE(fat_point_graded_dim(3, 2, {1, -1, 0}) == 0);
    for (int r = 1; r <= 4; ++r) {
        auto ideal = power_ideal(3, r);
        auto rep = tangent_report(ideal);
        auto box = degree_box(ideal);
        for (int a = box.lo[0]; a <= box.hi[0]; ++a)
            for (int b = box.lo[1]; b <= box.hi[1]; ++b)
                for (int c = box.lo[2]; c <= box.hi[2]; ++c) {
                    MultiDegree alpha{a, b, c};
                    const auto it = rep.per_degree.find(alpha);
                    const long long actual = it == rep.per_degree.end() ? 0 : it->second;
                    REQUIRE(actual == fat_point_graded_dim(3, r, alpha));
                }
    }
}

TEST_CASE("fat point signature formulas") {
    auto r1 = fat_point_tangent_dims(1);
    REQUIRE(r1.total == 3);
    REQUIRE(r1.by_signature.at("ppn") == 1);
    REQUIRE(r1.by_signature.at("nnp") == 0);
    auto r2 = fat_point_tangent_dims(2);
    REQUIRE(r2.total == 18);
    for (int r = 1; r <= 5; ++r) {
        auto formulas = fat_point_tangent_dims(r);
        auto rep = tangent_report(power_ideal(3, r));
        REQUIRE(rep.total == formulas.total);
        for (const auto& [sig, dim] : formulas.by_signature)
            REQUIRE(rep.signature_totals.at(sig) == dim);
    }
}

TEST_CASE("socle tangent dimension is generators times socle") {
    for (int r = 1; r <= 4; ++r) {
        auto rep = tangent_report(power_ideal(3, r));
        REQUIRE(rep.socle_dim == rep.total);  // the fat point is all socle
    }
    REQUIRE(socle_tangent_dim(lex_truncation_ideal(16)) == 77);
    REQUIRE(socle_tangent_dim(counterexample_ideal(3, 2)) == 77);
}

TEST_CASE("lexsegment tangent formula") {
    REQUIRE(e_ideal_tangent_formula(3) == 84);
    REQUIRE(e_ideal_tangent_formula(4) == 183);
    REQUIRE(e_ideal_tangent_formula(5) == 359);
    REQUIRE_THROWS_AS(e_ideal_tangent_formula(2), std::invalid_argument);
    for (int r = 3; r <= 5; ++r) {
        const long long d = binom(r + 2, 3) + r + 3;
        REQUIRE(tangent_report(lex_truncation_ideal(d)).total == e_ideal_tangent_formula(r));
    }
}

TEST_CASE("smoothness of curvilinear and fat points") {
    for (int d = 1; d <= 6; ++d) {
        auto curvilinear = parse_ideal("x, y, z^" + std::to_string(d));
        REQUIRE(is_smooth_monomial_point(curvilinear));
        REQUIRE(tangent_report(curvilinear).total == 3 * d);
    }
    REQUIRE_FALSE(is_smooth_monomial_point(power_ideal(3, 2)));
}

TEST_CASE("strongly stable smoothness is membership of x") {
    for (long long d = 1; d <= 8; ++d) {
        for (const auto& ideal : enumerate_strongly_stable(d)) {
            REQUIRE(is_smooth_monomial_point(ideal) == ideal.contains({1, 0, 0}));
        }
    }
}

TEST_CASE("generator triples that force singularity") {
    REQUIRE(singular_by_generators(parse_ideal("x^3, y^3, z^3, x*y, x*z, y*z")));
    REQUIRE(singular_by_generators(power_ideal(3, 2)));
    REQUIRE_FALSE(singular_by_generators(parse_ideal("x, y, z^3")));
    for (long long d = 1; d <= 7; ++d) {
        enumerate_all_artinian(3, d, [&](const MonomialIdeal& ideal) {
            if (singular_by_generators(ideal))
                REQUIRE_FALSE(is_smooth_monomial_point(ideal));
        });
    }
}

TEST_CASE("corner-count upper bound for fixed nonnegative xy-degrees") {
    for (int r = 2; r <= 4; ++r)
        REQUIRE(ppn_upper_bound(power_ideal(3, r), 0, 0) == binom(r + 1, 2));
    REQUIRE(ppn_upper_bound(power_ideal(3, 3), 5, 5) == 0);
    for (long long d = 1; d <= 9; ++d) {
        for (const auto& ideal : enumerate_strongly_stable(d)) {
            auto rep = tangent_report(ideal);
            Staircase st(ideal);
            for (int a1 = 0; a1 <= st.pure_powers()[0]; ++a1)
                for (int a2 = 0; a2 <= st.pure_powers()[1]; ++a2) {
                    long long observed = 0;
                    for (const auto& [alpha, dim] : rep.per_degree)
                        if (alpha[0] == a1 && alpha[1] == a2 && alpha[2] < 0) observed += dim;
                    REQUIRE(observed <= ppn_upper_bound(ideal, a1, a2));
                }
        }
    }
}

TEST_CASE("duality slice pairs agree on both sides") {
    auto pairs = duality_slice_pairs(power_ideal(3, 1));
    REQUIRE_FALSE(pairs.empty());
    for (const auto& [key, value] : pairs) REQUIRE(value.first == value.second);
    // the (0,0) pair of the origin point carries the three degree sums
    REQUIRE(pairs.at({0, 0}).first == 1);

    std::mt19937 rng(7102);
    for (int trial = 0; trial < 20; ++trial) {
        auto ideal = test_support::random_artinian_ideal(rng, 3, 30);
        for (const auto& [key, value] : duality_slice_pairs(ideal))
            REQUIRE(value.first == value.second);
    }
}

TEST_CASE("pairing and parity on the exhaustive small census") {
    for (long long d = 1; d <= 6; ++d) {
        enumerate_all_artinian(3, d, [&](const MonomialIdeal& ideal) {
            auto rep = tangent_report(ideal);
            const auto& s = rep.signature_totals;
            REQUIRE(s.at("ppn") == s.at("nnp") + d);
            REQUIRE(s.at("pnp") == s.at("npn") + d);
            REQUIRE(s.at("npp") == s.at("pnn") + d);
            REQUIRE((rep.total - d) % 2 == 0);
        });
    }
}

TEST_CASE("two-variable reports: both signatures carry the colength") {
    for (long long d = 1; d <= 10; ++d) {
        enumerate_all_artinian(2, d, [&](const MonomialIdeal& ideal) {
            auto rep = tangent_report(ideal);
            REQUIRE(rep.signature_totals.at("pn") == d);
            REQUIRE(rep.signature_totals.at("np") == d);
            REQUIRE(rep.total == 2 * d);
            const auto b = two_var_slices(ideal);
            for (std::size_t i = 0; i < b.size(); ++i) {
                long long pos = 0, neg = 0;
                for (const auto& [alpha, dim] : rep.per_degree) {
                    if (alpha[0] == static_cast<int>(i)) pos += dim;
                    if (alpha[0] == -static_cast<int>(i) - 1) neg += dim;
                }
                REQUIRE(pos == b[i]);
                REQUIRE(neg == b[i]);
            }
        });
    }
}

TEST_CASE("x-degree slices sum to the total") {
    std::mt19937 rng(7103);
    for (int trial = 0; trial < 20; ++trial) {
        auto ideal = test_support::random_artinian_ideal(rng, 3, 25);
        auto rep = tangent_report(ideal);
        long long sum = 0;
        for (const auto& [slice, dim] : rep.x_degree_slices) sum += dim;
        REQUIRE(sum == rep.total);
    }
}
