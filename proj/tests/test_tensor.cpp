#include "doctest.h"
#include "mmt/tensor.hpp"
#include "mmt/rng.hpp"
#include "test_helpers.hpp"

#include <set>

namespace {

using namespace mmt;

// Eq. (3) contraction: z_gamma = sum_{alpha,beta} T(alpha,beta,gamma) x_alpha y_beta
// with x = vec(X^T), y = vec(Y^T); must equal vec(XY).
bool contraction_matches(const Dims& d, Rng& rng) {
    const MMTensor t = build_mm_tensor(d);
    RatMat X(d.P, d.Q), Y(d.Q, d.S);
    for (int i = 0; i < X.size(); ++i) X(i) = Rat(rng.uniform_int(-5, 5));
    for (int i = 0; i < Y.size(); ++i) Y(i) = Rat(rng.uniform_int(-5, 5));
    RatVec x(d.P * d.Q), y(d.Q * d.S);
    for (int p = 1; p <= d.P; ++p)
        for (int q = 1; q <= d.Q; ++q) x((p - 1) * d.Q + q - 1) = X(p - 1, q - 1);
    for (int q = 1; q <= d.Q; ++q)
        for (int s = 1; s <= d.S; ++s) y((q - 1) * d.S + s - 1) = Y(q - 1, s - 1);
    RatVec z = RatVec::Zero(d.S * d.P);
    for (const Entry& e : t.entries) z(e.gamma - 1) += x(e.alpha - 1) * y(e.beta - 1);
    const RatMat Z = RatMat(X * Y);
    for (int s = 1; s <= d.S; ++s)
        for (int p = 1; p <= d.P; ++p)
            if (z((s - 1) * d.P + p - 1) != Z(p - 1, s - 1)) return false;
    return true;
}

}  // namespace

TEST_CASE("MM tensor has exactly PQS distinct in-range unit entries") {
    for (Dims d : {Dims{2, 2, 2}, Dims{2, 3, 4}, Dims{3, 3, 6}, Dims{1, 1, 1}}) {
        const MMTensor t = build_mm_tensor(d);
        CHECK(static_cast<int>(t.entries.size()) == d.P * d.Q * d.S);
        std::set<std::tuple<int, int, int>> seen;
        for (const Entry& e : t.entries) {
            CHECK(e.alpha >= 1);
            CHECK(e.alpha <= d.P * d.Q);
            CHECK(e.beta >= 1);
            CHECK(e.beta <= d.Q * d.S);
            CHECK(e.gamma >= 1);
            CHECK(e.gamma <= d.S * d.P);
            seen.insert({e.alpha, e.beta, e.gamma});
        }
        CHECK(seen.size() == t.entries.size());
    }
}

TEST_CASE("canonical index map: contracting with vec(X^T), vec(Y^T) gives vec(XY)") {
    Rng rng(2024);
    for (Dims d : {Dims{2, 2, 2}, Dims{2, 3, 4}, Dims{3, 3, 6}})
        for (int trial = 0; trial < 5; ++trial) CHECK(contraction_matches(d, rng));
}

TEST_CASE("residual of the zero factorization is the tensor norm PQS") {
    for (Dims d : {Dims{2, 2, 2}, Dims{2, 3, 4}}) {
        const RatMat A = RatMat::Zero(d.P * d.Q, 3), B = RatMat::Zero(d.Q * d.S, 3),
                     C = RatMat::Zero(d.S * d.P, 3);
        CHECK(brent_residual(A, B, C, d) == Rat(d.P * d.Q * d.S));
    }
}

TEST_CASE("densify places unit entries exactly where dense_eval of a perfect fact does") {
    Rng rng(5);
    const Dims d{2, 2, 3};
    const auto dense = densify<Rat>(build_mm_tensor(d));
    // random factors: residual computed two ways must agree
    RatMat A = mmt_test::random_rat_mat(d.P * d.Q, 4, rng);
    RatMat B = mmt_test::random_rat_mat(d.Q * d.S, 4, rng);
    RatMat C = mmt_test::random_rat_mat(d.S * d.P, 4, rng);
    const auto approx = dense_eval<Rat>(A, B, C);
    Rat manual(0);
    for (int a = 0; a < dense.n1; ++a)
        for (int b = 0; b < dense.n2; ++b)
            for (int c = 0; c < dense.n3; ++c) {
                const Rat diff = approx.at(a, b, c) - dense.at(a, b, c);
                manual += diff * diff;
            }
    CHECK(manual == brent_residual(A, B, C, d));
}

TEST_CASE("dimension validation") {
    CHECK_THROWS_AS(check_dims(Dims{0, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(check_dims(Dims{2, -1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(check_dims(Dims{5000, 5000, 5000}), std::invalid_argument);
    CHECK_NOTHROW(check_dims(Dims{3, 3, 6}));
}

TEST_CASE("brent_residual rejects mismatched factor shapes") {
    const Dims d{2, 2, 2};
    const RatMat good = RatMat::Zero(4, 2);
    CHECK_THROWS_WITH_AS(brent_residual(RatMat(RatMat::Zero(3, 2)), good, good, d),
                         doctest::Contains("mode-A"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(brent_residual(good, RatMat(RatMat::Zero(5, 2)), good, d),
                         doctest::Contains("mode-B"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(brent_residual(good, good, RatMat(RatMat::Zero(1, 2)), d),
                         doctest::Contains("mode-C"), std::invalid_argument);
}
