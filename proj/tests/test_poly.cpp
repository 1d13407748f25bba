#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cyclograph/catalog.hpp"
#include "cyclograph/poly.hpp"
#include "test_util.hpp"

using namespace cyclograph;

namespace {

IntPolynomial ip(std::vector<long> c) { return IntPolynomial::from_int_coeffs(c); }

const std::vector<long> kLehmer = {1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};

}  // namespace

TEST_CASE("characteristic polynomials of small matrices") {
    HermitianMatrix two(Ring::Rational, 1);
    two.set(0, 0, make_elem(Ring::Rational, 2));
    CHECK(char_poly(two) == ip({-2, 1}));

    HermitianMatrix edge(Ring::Rational, 2);
    edge.set(0, 1, make_elem(Ring::Rational, 1));
    CHECK(char_poly(edge) == ip({-1, 0, 1}));

    HermitianMatrix cedge(Ring::Gaussian, 2);
    cedge.set(0, 1, make_elem(Ring::Gaussian, 1, 1));
    CHECK(char_poly(cedge) == ip({-2, 0, 1}));
}

TEST_CASE("the two characteristic polynomial routes agree") {
    std::mt19937_64 rng(31337);
    for (int t = 0; t < 1000; ++t) {
        const Ring r = testutil::all_rings()[t % 3];
        const int n = 1 + static_cast<int>(rng() % 8);
        auto A = testutil::random_hermitian(rng, r, n);
        CHECK(char_poly(A) == char_poly_interpolation(A));
    }
}

TEST_CASE("reciprocal transform") {
    CHECK(reciprocal_transform(ip({-2, 1})) == ip({1, -2, 1}));
    CHECK(reciprocal_transform(ip({0, 1})) == ip({1, 0, 1}));
    CHECK(reciprocal_transform(ip({-3, 1})) == ip({1, -3, 1}));
    // palindromicity for random monic polynomials
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long> d(-6, 6);
    for (int t = 0; t < 10000; ++t) {
        const int deg = 1 + static_cast<int>(rng() % 12);
        std::vector<mpz_class> c(deg + 1);
        for (int i = 0; i < deg; ++i) c[i] = d(rng);
        c[deg] = 1;
        IntPolynomial p{std::move(c)};
        IntPolynomial R = reciprocal_transform(p);
        CHECK(R.degree() == 2 * deg);
        const auto& rc = R.coeffs();
        for (size_t i = 0; i < rc.size(); ++i) CHECK(rc[i] == rc[rc.size() - 1 - i]);
    }
}

TEST_CASE("exact root counting") {
    CHECK(count_roots_in_interval(ip({-5, 0, 1}), -2, 2) == 0);
    CHECK(count_roots_in_interval(ip({-1, 0, 1}), -2, 2) == 2);
    CHECK(count_roots_in_interval(ip({-4, 0, 1}), -2, 2) == 2);  // boundary roots count
    CHECK(count_roots_in_interval(ip({-4, 0, 1}), mpq_class(-2), mpq_class(0)) == 1);
    CHECK(count_roots_in_interval(ip({0, 0, 1}), -1, 1) == 1);   // double root, counted once
    CHECK(count_roots_in_interval(ip({2, 1}), -2, -2) == 1);     // point interval at a root
    CHECK(count_roots_in_interval(ip({1, 1}), mpq_class(0), mpq_class(1)) == 0);
    CHECK_THROWS_AS(count_roots_in_interval(IntPolynomial(), 0, 1), UsageError);
}

TEST_CASE("squarefree machinery") {
    // (x-1)^2 (x+2)
    IntPolynomial p = mul(mul(ip({-1, 1}), ip({-1, 1})), ip({2, 1}));
    CHECK(squarefree_part(p) == mul(ip({-1, 1}), ip({2, 1})));
    auto dec = squarefree_decomposition(p);
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].first == ip({2, 1}));
    CHECK(dec[0].second == 1);
    CHECK(dec[1].first == ip({-1, 1}));
    CHECK(dec[1].second == 2);
}

TEST_CASE("cyclotomicity of matrices") {
    HermitianMatrix s2(Ring::Rational, 2);
    s2.set(0, 1, make_elem(Ring::Rational, 2));
    CHECK(is_cyclotomic_matrix(s2));
    HermitianMatrix three(Ring::Rational, 1);
    three.set(0, 0, make_elem(Ring::Rational, 3));
    CHECK_FALSE(is_cyclotomic_matrix(three));
    CHECK(is_cyclotomic_matrix(catalog::build_graph("S16")));
}

TEST_CASE("Mahler measures") {
    auto L = mahler_measure(IntPolynomial::from_int_coeffs(kLehmer));
    CHECK(L.value == doctest::Approx(1.176280818259917).epsilon(1e-11));
    CHECK(L.error_bound < 1e-9);
    CHECK_FALSE(L.is_exactly_one);

    auto one = mahler_measure(ip({1, -2, 1}));
    CHECK(one.is_exactly_one);
    CHECK(one.value == 1.0);

    auto g = mahler_measure(ip({1, -3, 1}));
    CHECK(g.value == doctest::Approx(2.618033988749895).epsilon(1e-12));
    CHECK_FALSE(g.is_exactly_one);

    CHECK_THROWS_AS(mahler_measure(IntPolynomial()), UsageError);
}

TEST_CASE("Mahler multiplicativity") {
    std::mt19937_64 rng(555);
    std::uniform_int_distribution<long> d(-4, 4);
    for (int t = 0; t < 60; ++t) {
        const int dp = 1 + static_cast<int>(rng() % 5), dq = 1 + static_cast<int>(rng() % 5);
        std::vector<mpz_class> pc(dp + 1), qc(dq + 1);
        for (int i = 0; i < dp; ++i) pc[i] = d(rng);
        for (int i = 0; i < dq; ++i) qc[i] = d(rng);
        pc[dp] = 1;
        qc[dq] = 1;
        IntPolynomial p{std::move(pc)}, q{std::move(qc)};
        auto mp = mahler_measure(p), mq = mahler_measure(q), mpq_ = mahler_measure(mul(p, q));
        const double tol = 1e-8 + mp.error_bound * mq.value + mq.error_bound * mp.value + mpq_.error_bound;
        CHECK(std::abs(mpq_.value - mp.value * mq.value) <= tol);
    }
}

TEST_CASE("Mahler of matrices") {
    HermitianMatrix three(Ring::Rational, 1);
    three.set(0, 0, make_elem(Ring::Rational, 3));
    auto m = mahler_of_matrix(three);
    CHECK(m.value == doctest::Approx(2.618033988749895).epsilon(1e-11));
    auto s14 = mahler_of_matrix(catalog::build_graph("S14"));
    CHECK(s14.is_exactly_one);
    CHECK(s14.value == 1.0);
}

TEST_CASE("exact and numeric cyclotomicity agree on small matrices") {
    std::mt19937_64 rng(808);
    for (Ring r : testutil::all_rings()) {
        for (int t = 0; t < 60; ++t) {
            const int n = 1 + static_cast<int>(rng() % 5);
            auto A = testutil::random_hermitian(rng, r, n);
            CHECK(is_cyclotomic_matrix(A) == mahler_of_matrix(A).is_exactly_one);
        }
    }
}

TEST_CASE("large entry pruning oracle") {
    HermitianMatrix big(Ring::Gaussian, 2);
    big.set(0, 1, make_elem(Ring::Gaussian, 2, 1));  // norm 5
    auto b = large_entry_reject(big);
    REQUIRE(b.has_value());
    CHECK(*b == doctest::Approx(1.618033988749895));

    HermitianMatrix s2(Ring::Rational, 2);
    s2.set(0, 1, make_elem(Ring::Rational, 2));  // norm 4: advisory 1.556 threshold
    auto b2 = large_entry_reject(s2);
    REQUIRE(b2.has_value());
    CHECK(*b2 == doctest::Approx(1.556));

    HermitianMatrix unit(Ring::Rational, 2);
    unit.set(0, 1, make_elem(Ring::Rational, 1));
    CHECK_FALSE(large_entry_reject(unit).has_value());
}

TEST_CASE("polynomial text") {
    IntPolynomial L = IntPolynomial::from_int_coeffs(kLehmer);
    CHECK(to_text(L) == "1 1 0 -1 -1 -1 -1 -1 0 1 1");
    CHECK(poly_from_text("1 1 0 -1 -1 -1 -1 -1 0 1 1") == L);
    CHECK_THROWS_AS(poly_from_text("not a poly"), UsageError);
}
