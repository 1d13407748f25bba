#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cyclograph/matrix.hpp"
#include "test_util.hpp"

using namespace cyclograph;

namespace {

HermitianMatrix weight2_pair() {
    HermitianMatrix A(Ring::Rational, 2);
    A.set(0, 1, make_elem(Ring::Rational, 2));
    return A;
}

HermitianMatrix path3(Ring r) {
    HermitianMatrix A(r, 3);
    A.set(0, 1, make_elem(r, 1));
    A.set(1, 2, make_elem(r, 1));
    return A;
}

}  // namespace

TEST_CASE("principal submatrix") {
    auto A = weight2_pair();
    auto B = principal_submatrix(A, {0});
    CHECK(B.size() == 1);
    CHECK(B.at(0, 0) == make_elem(Ring::Rational, 0));
    CHECK(principal_submatrix(A, {0, 1}) == A);
    auto P = path3(Ring::Gaussian);
    auto E = principal_submatrix(P, {0, 2});
    CHECK(E.at(0, 1).is_zero());
    CHECK_THROWS_AS(principal_submatrix(A, {}), UsageError);
}

TEST_CASE("connectivity") {
    CHECK(is_connected(weight2_pair()));
    CHECK_FALSE(is_connected(HermitianMatrix(Ring::Gaussian, 2)));
    HermitianMatrix blocks(Ring::Rational, 4);
    blocks.set(0, 1, make_elem(Ring::Rational, 1));
    blocks.set(2, 3, make_elem(Ring::Rational, 1));
    CHECK_FALSE(is_connected(blocks));
}

TEST_CASE("degree") {
    HermitianMatrix star(Ring::Gaussian, 4);
    for (int leaf = 1; leaf < 4; ++leaf) star.set(0, leaf, make_elem(Ring::Gaussian, 1));
    CHECK(degree(star, 0) == 3);
    HermitianMatrix charged(Ring::Gaussian, 1);
    charged.set(0, 0, make_elem(Ring::Gaussian, 1));
    CHECK(degree(charged, 0) == 1);
    CHECK(degree(charged, 0, false) == 0);
    HermitianMatrix edge(Ring::Gaussian, 2);
    edge.set(0, 1, make_elem(Ring::Gaussian, 1, 1));
    CHECK(degree(edge, 0) == 2);
}

TEST_CASE("extend") {
    HermitianMatrix one(Ring::Gaussian, 1);
    auto B = extend(one, {{make_elem(Ring::Gaussian, 1)}, 0});
    CHECK(B.size() == 2);
    CHECK(B.at(0, 1) == make_elem(Ring::Gaussian, 1));
    auto C = extend(one, {{make_elem(Ring::Gaussian, 1, 1)}, 0});
    CHECK(C.at(0, 1) == make_elem(Ring::Gaussian, 1, 1));
    CHECK(C.at(1, 0) == make_elem(Ring::Gaussian, 1, -1));
    // the single-charged triangle from a unit edge
    HermitianMatrix edge(Ring::Gaussian, 2);
    edge.set(0, 1, make_elem(Ring::Gaussian, 1));
    auto T = extend(edge, {{make_elem(Ring::Gaussian, 1), make_elem(Ring::Gaussian, -1)}, 1});
    CHECK(T.charge(2) == 1);
    CHECK(T.at(1, 2) == make_elem(Ring::Gaussian, -1));
    CHECK_THROWS_AS(extend(one, {{make_elem(Ring::Gaussian, 0)}, 1}), UsageError);
    // extend then delete the new vertex is the identity
    CHECK(principal_submatrix(T, {0, 1}) == edge);
}

TEST_CASE("entry maxima") {
    HermitianMatrix single(Ring::Rational, 1);
    single.set(0, 0, make_elem(Ring::Rational, 2));
    CHECK(max_offdiag_norm(single) == 0);
    CHECK(max_charge_abs(single) == 2);
    HermitianMatrix edge(Ring::Gaussian, 2);
    edge.set(0, 1, make_elem(Ring::Gaussian, 1, 1));
    CHECK(max_offdiag_norm(edge) == 2);
    CHECK(max_charge_abs(edge) == 0);
    HermitianMatrix m(Ring::Rational, 2);
    m.set(0, 0, make_elem(Ring::Rational, 1));
    m.set(1, 1, make_elem(Ring::Rational, -1));
    m.set(0, 1, make_elem(Ring::Rational, 2));
    CHECK(max_offdiag_norm(m) == 4);
    CHECK(max_charge_abs(m) == 1);
}

TEST_CASE("hermitian validation") {
    std::vector<RingElement> bad = {make_elem(Ring::Gaussian, 0), make_elem(Ring::Gaussian, 0, 1),
                                    make_elem(Ring::Gaussian, 0, 1), make_elem(Ring::Gaussian, 0)};
    CHECK_THROWS_AS(HermitianMatrix::from_entries(Ring::Gaussian, 2, bad), UsageError);
    HermitianMatrix A(Ring::Gaussian, 2);
    CHECK_THROWS_AS(A.set(0, 0, make_elem(Ring::Gaussian, 0, 1)), UsageError);
    CHECK_THROWS_AS(HermitianMatrix(Ring::Gaussian, 18), CapacityError);
}

TEST_CASE("degree equals diagonal of the squared matrix") {
    std::mt19937_64 rng(7);
    for (Ring r : testutil::all_rings()) {
        for (int t = 0; t < 50; ++t) {
            const int n = 2 + static_cast<int>(rng() % 5);
            auto A = testutil::random_hermitian(rng, r, n);
            for (int v = 0; v < n; ++v) {
                RingElement acc = make_elem(r, 0);
                for (int u = 0; u < n; ++u) acc = add(acc, mul(A.at(v, u), A.at(u, v)));
                CHECK(acc.b == 0);
                CHECK(acc.a == degree(A, v));
            }
        }
    }
}

TEST_CASE("matrix text round trip") {
    std::mt19937_64 rng(21);
    for (Ring r : testutil::all_rings()) {
        for (int t = 0; t < 40; ++t) {
            const int n = 1 + static_cast<int>(rng() % 6);
            auto A = testutil::random_hermitian(rng, r, n);
            const std::string text = to_text(A);
            CHECK(matrix_from_text(text) == A);
            CHECK(to_text(matrix_from_text(text)) == text);
        }
    }
    CHECK_THROWS_AS(matrix_from_text("ring: gaussian\nn: 2\n0 1\n"), UsageError);
    CHECK_THROWS_AS(matrix_from_text("n: 2\n0 1\n1 0\n"), UsageError);
}

TEST_CASE("ring reinterpretation") {
    auto A = weight2_pair();
    auto B = as_ring(A, Ring::Eisenstein);
    CHECK(B.ring() == Ring::Eisenstein);
    CHECK(B.at(0, 1) == make_elem(Ring::Eisenstein, 2));
    HermitianMatrix C(Ring::Gaussian, 2);
    C.set(0, 1, make_elem(Ring::Gaussian, 0, 1));
    CHECK_THROWS_AS(as_ring(C, Ring::Eisenstein), UsageError);
}
