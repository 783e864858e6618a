#include <random>

#include "doctest.h"
#include "gfh/oracles.hpp"
#include "gfh/serialize.hpp"
#include "gfh/squeeze.hpp"

using namespace gfh;

TEST_CASE("ball homology, non-equivariant") {
    // n=2, a=1, R=3/5: the witness is l=2, so degree 8 and nothing else
    CHECK(balls_homology({2, 2, Rational(3, 5), Rational(1), 8, false}) == 1);
    CHECK(balls_homology({2, 2, Rational(3, 5), Rational(1), 4, false}) == 0);
    for (long d = 1; d <= 16; d += 2)
        CHECK(balls_homology({2, 2, Rational(3, 5), Rational(1), d, false}) ==
              0);
    CHECK_THROWS_AS(balls_homology({2, 2, Rational(3, 5), Rational(1), 0,
                                    false}),
                    std::invalid_argument);
}

TEST_CASE("ball homology is the indicator of a partition in R") {
    // for fixed n, a with a/R not an integer, exactly one degree 2nl is hot
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> num(1, 40), den(1, 40);
    for (long n : {1L, 2L, 3L})
        for (int trial = 0; trial < 40; ++trial) {
            Rational R(num(rng), den(rng));
            Rational a(num(rng), den(rng));
            Rational ratio = a / R;
            if (boost::multiprecision::denominator(ratio) == 1) continue;
            long hot = 0;
            for (long l = 1; l <= 100; ++l)
                hot += balls_homology({n, 2, R, a, 2 * n * l, false});
            CHECK(hot == 1);
        }
}

TEST_CASE("ball homology, equivariant") {
    CHECK(balls_homology_eq({2, 2, Rational(3, 5), Rational(1), 9, true}) == 1);
    CHECK(balls_homology_eq({2, 2, Rational(3, 5), Rational(1), 11, true}) ==
          0);  // top degree of the block is excluded
    CHECK(balls_homology_eq({2, 2, Rational(3, 10), Rational(1), 8, true}) ==
          0);  // needs R >= 1/2
}

TEST_CASE("equivariant ball homology is monotone in R") {
    for (long n : {1L, 2L})
        for (long d = 1; d <= 8 * n; ++d)
            for (long i = 1; i < 30; ++i) {
                Rational lo(i, 10), hi(i + 1, 10);
                long a = balls_homology_eq({n, 3, lo, Rational(1), d, true});
                long b = balls_homology_eq({n, 3, hi, Rational(1), d, true});
                CHECK(a <= b);
            }
}

TEST_CASE("equivariant oracle matches the quotient complex off the top degrees") {
    for (long n : {1L, 2L})
        for (long k : {2L, 5L})
            for (auto R : {Rational(3, 10), Rational(7, 10), Rational(13, 10)}) {
                LensData lens(n, k, std::vector<long>(n, 1));
                auto st = stabilized_homology(lens, R, Rational(1), 8 * n, true);
                for (long d = 1; d <= 8 * n; ++d) {
                    if (st.tower_sensitive.count(d)) continue;
                    CHECK(st.table.rank(d) ==
                          balls_homology_eq({n, k, R, Rational(1), d, true}));
                }
            }
}

TEST_CASE("lens space homology tables") {
    HomologyTable s1 = lens_homology(LensData(1, 3, {1}), Coeff::Fk);
    CHECK(s1.rank(0) == 1);
    CHECK(s1.rank(1) == 1);
    CHECK(s1.rank(2) == 0);

    HomologyTable f5 = lens_homology(LensData(2, 5, {1, 2}), Coeff::Fk);
    for (long d = 0; d <= 3; ++d) CHECK(f5.rank(d) == 1);

    HomologyTable z5 = lens_homology(LensData(2, 5, {1, 2}), Coeff::Z);
    CHECK(z5.rank(0) == 1);
    CHECK(z5.rank(1) == 0);
    CHECK(z5.torsion(1) == std::vector<Int>{5});
    CHECK(z5.rank(2) == 0);
    CHECK(z5.torsion(2).empty());
    CHECK(z5.rank(3) == 1);
}

TEST_CASE("lens oracle equals the chain computation") {
    for (long n : {1L, 2L, 3L})
        for (long k : {2L, 3L, 5L})
            for (Coeff coeff : {Coeff::Fk, Coeff::Z}) {
                std::vector<long> w(n, 1);
                w[0] = k - 1;
                LensData lens(n, k, w);
                Profile p(Rational(1), {Rational(1, 2)}, {Rational(1, 4)},
                          Rational(2));
                HomologyTable t =
                    homology(build_equivariant_complex(p, lens, coeff));
                HomologyTable oracle = lens_homology(lens, coeff);
                HomologyTable expect;
                for (const auto& [d, e] : oracle.entries())
                    expect.set(d + 2 * n, e);  // block 1 starts at degree 2n
                CHECK(t == expect);
            }
}

TEST_CASE("prequantization of homology tables") {
    HomologyTable single;
    single.set(4, {1, {}});
    HomologyTable ps = prequantize(single);
    CHECK(ps.rank(4) == 1);
    CHECK(ps.rank(5) == 1);
    CHECK(ps.rank(3) == 0);
    CHECK(ps.rank(6) == 0);

    CHECK(prequantize(HomologyTable{}) == HomologyTable{});

    HomologyTable circle = lens_homology(LensData(1, 3, {1}), Coeff::Fk);
    HomologyTable pc = prequantize(circle);
    CHECK(pc.rank(0) == 1);
    CHECK(pc.rank(1) == 2);
    CHECK(pc.rank(2) == 1);
}

TEST_CASE("prequantization carries torsion from both degrees") {
    HomologyTable t;
    t.set(1, {0, {Int(3)}});
    t.set(2, {1, {Int(5)}});
    HomologyTable p = prequantize(t);
    CHECK(p.torsion(1) == std::vector<Int>{3});
    CHECK(p.torsion(2) == std::vector<Int>{3, 5});
    CHECK(p.torsion(3) == std::vector<Int>{5});
    CHECK(p.rank(2) == 1);
    CHECK(p.rank(3) == 1);
}

TEST_CASE("prequantization on random tables: rank convolution") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> rk(0, 3), deg(0, 10);
    for (int trial = 0; trial < 50; ++trial) {
        HomologyTable t;
        for (int i = 0; i < 5; ++i) t.set(deg(rng), {rk(rng), {}});
        HomologyTable p = prequantize(t);
        for (long d = -1; d <= 12; ++d)
            CHECK(p.rank(d) == t.rank(d) + t.rank(d - 1));
    }
}

TEST_CASE("equivariant squeeze verdicts") {
    SqueezeVerdict v1 =
        equivariant_verdict(2, 3, Rational(4, 5), Rational(1, 10));
    CHECK(v1.status == SqueezeStatus::Obstructed);
    CHECK(v1.witness == 2);  // 1/10 < 1/2 < 4/5
    CHECK(v1.degree == 8);
    REQUIRE(v1.diagram.has_value());
    CHECK(*v1.diagram == DiagramRanks{1, 1, 0});

    SqueezeVerdict v2 =
        equivariant_verdict(2, 3, Rational(4, 5), Rational(3, 5));
    CHECK(v2.status == SqueezeStatus::NoVerdict);
    CHECK(!v2.witness);

    SqueezeVerdict v3 =
        equivariant_verdict(1, 2, Rational(5, 2), Rational(3, 10));
    CHECK(v3.status == SqueezeStatus::Obstructed);
    CHECK(v3.witness == 1);  // smallest admissible l
    CHECK(v3.degree == 2);

    CHECK_THROWS_AS(equivariant_verdict(2, 3, Rational(1), Rational(1)),
                    std::invalid_argument);
}

TEST_CASE("every radius is obstructed for small enough target") {
    for (long n : {1L, 2L})
        for (long k : {2L, 3L})
            for (auto R : {Rational(1, 10), Rational(1), Rational(10)}) {
                // l = ceil(1/R) + 1 always gives 1/l < R; any Rp < 1/l works
                bool found = false;
                for (long denom = 2; denom <= 64 && !found; denom *= 2) {
                    Rational Rp(1, denom);
                    if (!(Rp < R)) continue;
                    auto v = equivariant_verdict(n, k, R, Rp);
                    found = v.status == SqueezeStatus::Obstructed;
                }
                CHECK(found);
            }
}

TEST_CASE("diagram ranks always show the contradiction pattern") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> num(1, 30);
    for (int trial = 0; trial < 60; ++trial) {
        Rational R(num(rng), 7), Rp(num(rng), 97);
        if (!(Rp < R)) continue;
        auto v = equivariant_verdict(2, 3, R, Rp);
        if (v.status != SqueezeStatus::Obstructed) continue;
        REQUIRE(v.diagram.has_value());
        CHECK(*v.diagram == DiagramRanks{1, 1, 0});
    }
}

TEST_CASE("non-equivariant squeeze verdicts") {
    auto v1 = nonequivariant_verdict(2, Rational(4, 5), Rational(1, 10));
    CHECK(v1.status == SqueezeStatus::SqueezablePerEKP);
    CHECK(!v1.witness);

    auto v2 = nonequivariant_verdict(2, Rational(3, 2), Rational(1, 2));
    CHECK(v2.status == SqueezeStatus::Obstructed);
    CHECK(v2.witness == 1);

    auto v3 = nonequivariant_verdict(1, Rational(4, 5), Rational(1, 10));
    CHECK(v3.status == SqueezeStatus::Obstructed);
    CHECK(!v3.witness);  // dimension 3: rigid without an integer witness

    auto v4 = nonequivariant_verdict(2, Rational(5, 2), Rational(9, 5));
    CHECK(v4.status == SqueezeStatus::Obstructed);
    CHECK(v4.witness == 2);

    auto v5 = nonequivariant_verdict(2, Rational(7, 5), Rational(11, 10));
    CHECK(v5.status == SqueezeStatus::NoVerdict);
}

TEST_CASE("equivariant obstruction where non-equivariant squeezing succeeds") {
    // the central contrast: small targets inside a subunit ball
    for (auto R : {Rational(1, 2), Rational(4, 5), Rational(99, 100)}) {
        Rational Rp = Rational(1, 100);
        auto eq = equivariant_verdict(2, 3, R, Rp);
        auto ne = nonequivariant_verdict(2, R, Rp);
        CHECK(eq.status == SqueezeStatus::Obstructed);
        CHECK(ne.status == SqueezeStatus::SqueezablePerEKP);
    }
}

TEST_CASE("verdict JSON serialization") {
    auto v = equivariant_verdict(2, 3, Rational(4, 5), Rational(1, 10));
    json j = to_json(v, Rational(4, 5), Rational(1, 10));
    CHECK(j["status"] == "Obstructed");
    CHECK(j["witness"] == 2);
    CHECK(j["degree"] == 8);
    CHECK(j["diagram"]["Rpp"] == 1);
    CHECK(j["diagram"]["R"] == 1);
    CHECK(j["diagram"]["Rp"] == 0);
    CHECK(j["R"] == "4/5");

    auto nv = nonequivariant_verdict(2, Rational(4, 5), Rational(1, 10));
    json nj = to_json(nv, Rational(4, 5), Rational(1, 10));
    CHECK(nj["status"] == "SqueezablePerEKP");
    CHECK(nj["witness"].is_null());
    CHECK(nj["diagram"].is_null());
}
