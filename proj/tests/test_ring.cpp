#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cyclograph/ring.hpp"
#include "test_util.hpp"

using namespace cyclograph;

TEST_CASE("arithmetic defining relations") {
    const Ring G = Ring::Gaussian, E = Ring::Eisenstein;
    CHECK(mul(make_elem(G, 1, 1), make_elem(G, 1, -1)) == make_elem(G, 2));
    CHECK(mul(make_elem(E, 0, 1), make_elem(E, 0, 1)) == make_elem(E, -1, 1));  // w*w = w-1
    // (1+w)(1+conj(w)) = 3
    const RingElement w = make_elem(E, 0, 1);
    const RingElement x = add(make_elem(E, 1), w);
    const RingElement y = add(make_elem(E, 1), conj(w));
    CHECK(mul(x, y) == make_elem(E, 3));
    CHECK_THROWS_AS(add(make_elem(G, 1), make_elem(E, 1)), UsageError);
}

TEST_CASE("conjugation") {
    CHECK(conj(make_elem(Ring::Gaussian, 1, 1)) == make_elem(Ring::Gaussian, 1, -1));
    CHECK(conj(make_elem(Ring::Eisenstein, 0, 1)) == make_elem(Ring::Eisenstein, 1, -1));  // conj(w) = 1-w
    CHECK(conj(make_elem(Ring::Rational, 5)) == make_elem(Ring::Rational, 5));
}

TEST_CASE("norms") {
    CHECK(norm_of(make_elem(Ring::Gaussian, 1, 1)) == 2);
    CHECK(norm_of(make_elem(Ring::Eisenstein, 1, 1)) == 3);
    CHECK(norm_of(make_elem(Ring::Gaussian, 0, 0)) == 0);
}

TEST_CASE("units") {
    CHECK(units(Ring::Gaussian).size() == 4);
    CHECK(units(Ring::Eisenstein).size() == 6);
    CHECK(units(Ring::Rational).size() == 2);
    for (Ring r : testutil::all_rings()) {
        for (const auto& u : units(r)) {
            CHECK(norm_of(u) == 1);
            // closed under conjugation and multiplication
            bool found_conj = false, found_sq = false;
            for (const auto& v : units(r)) {
                found_conj |= (v == conj(u));
                found_sq |= (v == mul(u, u));
            }
            CHECK(found_conj);
            CHECK(found_sq);
        }
    }
}

TEST_CASE("norm level sets") {
    auto L2g = elements_of_norm(Ring::Gaussian, 2);
    CHECK(L2g.size() == 4);
    for (const auto& e : L2g) CHECK(norm_of(e) == 2);
    CHECK(elements_of_norm(Ring::Eisenstein, 2).empty());
    CHECK(elements_of_norm(Ring::Gaussian, 0) == std::vector<RingElement>{make_elem(Ring::Gaussian, 0)});
    for (Ring r : testutil::all_rings()) {
        auto L1 = elements_of_norm(r, 1);
        auto us = units(r);
        std::sort(us.begin(), us.end(), elem_less);
        CHECK(L1 == us);
        auto L4 = elements_of_norm(r, 4);
        CHECK(std::count(L4.begin(), L4.end(), make_elem(r, 2)) == 1);
        CHECK(std::count(L4.begin(), L4.end(), make_elem(r, -2)) == 1);
    }
    CHECK(elements_of_norm(Ring::Eisenstein, 3).size() == 6);
    CHECK_THROWS_AS(elements_of_norm(Ring::Gaussian, -1), UsageError);
}

TEST_CASE("random multiplicativity") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<std::int64_t> d(-30, 30);
    for (Ring r : testutil::all_rings()) {
        for (int t = 0; t < 1000; ++t) {
            const RingElement x = make_elem(r, d(rng), r == Ring::Rational ? 0 : d(rng));
            const RingElement y = make_elem(r, d(rng), r == Ring::Rational ? 0 : d(rng));
            CHECK(norm_of(mul(x, y)) == norm_of(x) * norm_of(y));
            CHECK(conj(mul(x, y)) == mul(conj(x), conj(y)));
            CHECK(conj(conj(x)) == x);
            const RingElement nx = mul(x, conj(x));
            CHECK(nx.b == 0);
            CHECK(nx.a == norm_of(x));
        }
    }
}

TEST_CASE("element text round trip") {
    const Ring G = Ring::Gaussian, E = Ring::Eisenstein;
    CHECK(to_string(make_elem(G, -1, 2)) == "-1+2i");
    CHECK(to_string(make_elem(E, -1, 2)) == "-1+2w");
    CHECK(to_string(make_elem(G, 0, 1)) == "i");
    CHECK(to_string(make_elem(G, 0, -1)) == "-i");
    CHECK(to_string(make_elem(G, 3, -1)) == "3-i");
    CHECK(to_string(make_elem(G, 0, 0)) == "0");
    CHECK(parse_element(G, "1+i") == make_elem(G, 1, 1));
    CHECK(parse_element(E, "-1+2w") == make_elem(E, -1, 2));
    CHECK(parse_element(G, "-2i") == make_elem(G, 0, -2));
    CHECK(parse_element(Ring::Rational, "-7") == make_elem(Ring::Rational, -7));
    CHECK_THROWS_AS(parse_element(Ring::Rational, "1+i"), UsageError);
    CHECK_THROWS_AS(parse_element(G, "xyz"), UsageError);
    // printer output always parses back
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::int64_t> d(-9, 9);
    for (Ring r : testutil::all_rings())
        for (int t = 0; t < 200; ++t) {
            const RingElement x = make_elem(r, d(rng), r == Ring::Rational ? 0 : d(rng));
            CHECK(parse_element(r, to_string(x)) == x);
        }
}

TEST_CASE("overflow is detected") {
    const std::int64_t big = std::int64_t(1) << 62;
    CHECK_THROWS_AS(mul(make_elem(Ring::Gaussian, big, 0), make_elem(Ring::Gaussian, 4, 0)),
                    std::overflow_error);
}
