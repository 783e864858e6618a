#include "doctest.h"
#include "gfh/morse_bott.hpp"
#include "gfh/serialize.hpp"

using namespace gfh;

namespace {

Generator gen(long degree, Rational filt, long stratum_index = 0) {
    return Generator{Stratum{StratumKind::Tower, stratum_index}, 0, degree,
                     std::move(filt), 0};
}

Profile simple_profile(long nu = 1) {
    // c_j = j/2 + 1/4... keep it explicit: radii evenly spread, values tuned
    // so that c_j = j - 1/2 with R = 1
    std::vector<Rational> radii, values;
    for (long j = 1; j <= nu; ++j) {
        Rational r(nu + 1 - j, nu + 1);
        radii.push_back(r);
        values.push_back(Rational(2 * j - 1, 2) - Rational(j) * r);
    }
    return Profile(Rational(1), radii, values, Rational(nu) + 1);
}

// Single-block equivariant lens complex, inner degrees 0..2n-1.
GradedChainComplex lens_complex(long n, long k, std::vector<long> weights,
                                Coeff coeff) {
    LensData lens(n, k, std::move(weights));
    return build_equivariant_complex(simple_profile(1), lens, coeff);
}

}  // namespace

TEST_CASE("validate: single generator is fine") {
    GradedChainComplex c(Coeff::Fk, 3);
    c.add_generator(gen(0, Rational(1)));
    CHECK(!validate(c).has_value());
}

TEST_CASE("validate: nonzero boundary needs strictly decreasing filtration") {
    GradedChainComplex c(Coeff::Fk, 3);
    c.add_generator(gen(0, Rational(1), 0));
    c.add_generator(gen(1, Rational(1), 1));
    IntMatrix b(1, 1, Int(0));
    b.at(0, 0) = 1;
    c.set_boundary(1, b);
    auto v = validate(c);
    REQUIRE(v.has_value());
    CHECK(v->what == "filtration");
    CHECK(v->degree == 1);
}

TEST_CASE("validate: equal filtration inside a single stratum is allowed") {
    GradedChainComplex c(Coeff::Fk, 3);
    c.add_generator(gen(0, Rational(1), 0));
    c.add_generator(gen(1, Rational(1), 0));
    IntMatrix b(1, 1, Int(0));
    b.at(0, 0) = 1;
    c.set_boundary(1, b);
    CHECK(!validate(c).has_value());
}

TEST_CASE("validate: d^2 violation is reported") {
    GradedChainComplex c(Coeff::Fk, 3);
    c.add_generator(gen(0, Rational(1)));
    c.add_generator(gen(1, Rational(2)));
    c.add_generator(gen(2, Rational(3)));
    IntMatrix b1(1, 1, Int(0)), b2(1, 1, Int(0));
    b1.at(0, 0) = 1;
    b2.at(0, 0) = 1;
    c.set_boundary(1, b1);
    c.set_boundary(2, b2);
    auto v = validate(c);
    REQUIRE(v.has_value());
    CHECK(v->what == "d2");
}

TEST_CASE("validate: morse-bott block complexes are valid") {
    for (long k : {2L, 3L, 5L}) {
        LensData lens(2, k, {1, k - 1});
        Profile p = simple_profile(3);
        CHECK(!validate(build_nonequivariant_complex(p, lens)).has_value());
        CHECK(!validate(build_equivariant_complex(p, lens, Coeff::Fk))
                   .has_value());
        CHECK(!validate(build_equivariant_complex(p, lens, Coeff::Z))
                   .has_value());
    }
}

TEST_CASE("window_subquotient basics") {
    GradedChainComplex c(Coeff::Fk, 2);
    c.add_generator(gen(0, Rational(1)));
    c.add_generator(gen(1, Rational(2)));
    IntMatrix b(1, 1, Int(0));
    b.at(0, 0) = 1;
    c.set_boundary(1, b);

    CHECK(window_subquotient(c, Rational(5), Rational(7)).empty());
    CHECK(window_subquotient(c, std::nullopt, std::nullopt).dim(0) == 1);
    CHECK(window_subquotient(c, std::nullopt, std::nullopt).dim(1) == 1);
    CHECK_THROWS_AS(window_subquotient(c, Rational(1), Rational(3)),
                    std::invalid_argument);  // a is a critical value
    CHECK_THROWS_AS(window_subquotient(c, Rational(3), Rational(2)),
                    std::invalid_argument);  // a >= b
}

TEST_CASE("full window has the same homology as the whole complex") {
    LensData lens(1, 3, {2});
    GradedChainComplex c =
        build_nonequivariant_complex(simple_profile(2), lens);
    CHECK(homology(window_subquotient(c, std::nullopt, std::nullopt)) ==
          homology(c));
    CHECK(homology(window_subquotient(c, Rational(-1, 2), Rational(100))) ==
          homology(c));
}

TEST_CASE("homology of the lens complex over F_3, n=2, k=3") {
    HomologyTable t = homology(lens_complex(2, 3, {1, 1}, Coeff::Fk));
    for (long d = 0; d <= 3; ++d) CHECK(t.rank(2 * 2 + d) == 1);
    CHECK(t.rank(8) == 0);
}

TEST_CASE("homology of the lens complex over Z, n=2, k=3") {
    // (Z, Z/3, 0, Z) in inner degrees 0..3
    HomologyTable t = homology(lens_complex(2, 3, {1, 1}, Coeff::Z));
    long base = 4;  // block 1 sits at total degrees 2n..4n-1
    CHECK(t.rank(base + 0) == 1);
    CHECK(t.torsion(base + 0).empty());
    CHECK(t.rank(base + 1) == 0);
    CHECK(t.torsion(base + 1) == std::vector<Int>{3});
    CHECK(t.rank(base + 2) == 0);
    CHECK(t.torsion(base + 2).empty());
    CHECK(t.rank(base + 3) == 1);
    CHECK(t.torsion(base + 3).empty());
}

TEST_CASE("single sphere block before quotient computes H(S^{2n-1})") {
    for (long n : {1L, 2L}) {
        for (long k : {2L, 5L}) {
            std::vector<long> w(n, 1);
            LensData lens(n, k, w);
            GradedChainComplex c =
                build_nonequivariant_complex(simple_profile(1), lens);
            // window containing only the sphere block (c_1 = 1/2)
            HomologyTable t =
                homology(window_subquotient(c, Rational(1, 4), Rational(3, 4)));
            CHECK(t.rank(2 * n) == 1);
            CHECK(t.rank(4 * n - 1) == 1);
            for (long d = 2 * n + 1; d < 4 * n - 1; ++d) CHECK(t.rank(d) == 0);
        }
    }
}

TEST_CASE("homology of a direct sum is the degreewise sum") {
    LensData lens(1, 3, {1});
    GradedChainComplex a = build_nonequivariant_complex(simple_profile(1), lens);
    GradedChainComplex b = lens_complex(1, 3, {1}, Coeff::Fk);
    CHECK(homology(direct_sum(a, b)) == homology(a) + homology(b));
}

TEST_CASE("Euler characteristic equals the alternating sum of dimensions") {
    for (long nu : {1L, 2L, 3L}) {
        LensData lens(2, 3, {1, 2});
        GradedChainComplex c =
            build_nonequivariant_complex(simple_profile(nu), lens);
        long chi = 0;
        for (long d = c.min_degree(); d <= c.max_degree(); ++d)
            chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(c.dim(d));
        CHECK(homology(c).euler_characteristic() == chi);
    }
}

TEST_CASE("triple exactness: empty middle window") {
    LensData lens(1, 2, {1});
    GradedChainComplex c = build_nonequivariant_complex(simple_profile(2), lens);
    // no critical value in (1/5, 2/5]
    auto r = triple_exactness_check(c, Rational(1, 5), Rational(2, 5));
    CHECK(r.ok);
    CHECK(homology(window_subquotient(c, Rational(1, 5), std::nullopt)) ==
          homology(window_subquotient(c, Rational(2, 5), std::nullopt)));
}

TEST_CASE("triple exactness: profile-generated complexes pass") {
    for (long k : {2L, 3L}) {
        LensData lens(2, k, {1, 1});
        GradedChainComplex c =
            build_nonequivariant_complex(simple_profile(3), lens);
        // split below/above block 2 (c_2 = 3/2)
        CHECK(triple_exactness_check(c, Rational(3, 4), Rational(7, 4)).ok);
        CHECK(triple_exactness_check(c, Rational(1, 4), Rational(11, 4)).ok);
    }
}

TEST_CASE("triple exactness: corrupted boundary is reported") {
    GradedChainComplex c(Coeff::Fk, 2);
    c.add_generator(gen(0, Rational(1)));
    c.add_generator(gen(1, Rational(3)));
    c.add_generator(gen(2, Rational(5)));
    IntMatrix b1(1, 1, Int(0)), b2(1, 1, Int(0));
    b1.at(0, 0) = 1;
    b2.at(0, 0) = 1;  // d^2 != 0
    c.set_boundary(1, b1);
    c.set_boundary(2, b2);
    CHECK_FALSE(triple_exactness_check(c, Rational(1, 2), Rational(4)).ok);
}

TEST_CASE("json serialization of tables and complexes") {
    GradedChainComplex c = lens_complex(2, 3, {1, 2}, Coeff::Z);
    json jc = to_json(c);
    CHECK(jc["coefficients"] == "Z");
    CHECK(jc["degrees"].size() == 4);

    json jt = to_json(homology(c));
    bool found_torsion = false;
    for (const auto& row : jt["degrees"])
        if (!row["torsion"].empty()) {
            found_torsion = true;
            CHECK(row["torsion"][0] == "3");
        }
    CHECK(found_torsion);
}
