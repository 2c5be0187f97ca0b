#include "doctest.h"
#include "mmt/linalg.hpp"
#include "mmt/rng.hpp"

namespace {

using namespace mmt;

RatMat rat3(std::initializer_list<std::initializer_list<long>> rows) {
    RatMat m(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()));
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (long v : row) m(i, j++) = Rat(v);
        ++i;
    }
    return m;
}

RatMat random_square(int n, Rng& rng) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m(i, j) = Rat(rng.uniform_int(-5, 5), rng.uniform_int(1, 3));
            m(i, j).canonicalize();  // GMP's two-argument constructor does not reduce
        }
    return m;
}

}  // namespace

TEST_CASE("rref produces pivots and identity on the pivot block") {
    RatMat m = rat3({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    auto pivots = rref_in_place(m);
    CHECK(pivots == std::vector<int>{0, 1});
    CHECK(m(0, 0) == 1);
    CHECK(m(1, 1) == 1);
    CHECK(m(2, 0) == 0);
    CHECK(m(2, 1) == 0);
    CHECK(m(2, 2) == 0);
}

TEST_CASE("exact rank of hand-built matrices") {
    CHECK(exact_rank(rat3({{1, 2}, {2, 4}})) == 1);
    CHECK(exact_rank(rat3({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
    CHECK(exact_rank(RatMat::Zero(3, 4)) == 0);
    CHECK(exact_rank(rat3({{1, 2, 3, 4}, {5, 6, 7, 8}, {9, 10, 11, 12}})) == 2);
}

TEST_CASE("exact determinant: triangular, singular, and cofactor check") {
    CHECK(exact_det(rat3({{2, 5, 7}, {0, 3, 9}, {0, 0, 4}})) == 24);
    CHECK(exact_det(rat3({{1, 2}, {2, 4}})) == 0);
    // det([[2,0,1],[1,3,2],[0,1,4]]) = 2*(12-2) + 1*(1-0) = 21
    CHECK(exact_det(rat3({{2, 0, 1}, {1, 3, 2}, {0, 1, 4}})) == 21);
    CHECK_THROWS_AS(exact_det(RatMat::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("inverse and solve agree with multiplication on random matrices") {
    Rng rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + static_cast<int>(trial % 4);
        RatMat m = random_square(n, rng);
        if (exact_det(m) == 0) continue;
        auto inv = exact_inverse(m);
        REQUIRE(inv.has_value());
        CHECK(RatMat(m * *inv) == RatMat(RatMat::Identity(n, n)));
        RatMat rhs = random_square(n, rng);
        auto x = exact_solve(m, rhs);
        REQUIRE(x.has_value());
        CHECK(RatMat(m * *x) == rhs);
    }
    CHECK(!exact_inverse(rat3({{1, 2}, {2, 4}})).has_value());
    CHECK(!exact_solve(rat3({{1, 2}, {2, 4}}), RatMat::Identity(2, 2)).has_value());
}

TEST_CASE("nullspace columns annihilate and satisfy rank-nullity") {
    Rng rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        RatMat m(3, 5);
        for (int i = 0; i < m.size(); ++i) m(i) = Rat(rng.uniform_int(-3, 3));
        RatMat ns = exact_nullspace(m);
        CHECK(ns.cols() == 5 - exact_rank(m));
        for (int k = 0; k < ns.cols(); ++k) CHECK(is_zero_vec(RatVec(m * ns.col(k))));
        CHECK(exact_rank(ns) == ns.cols());
    }
}

TEST_CASE("columnspace basis consists of matrix columns and spans them all") {
    RatMat m = rat3({{1, 2, 3}, {2, 4, 6}, {0, 0, 1}});
    RatMat basis = columnspace_basis(m);
    CHECK(basis.cols() == 2);
    CHECK(basis.col(0) == m.col(0));
    CHECK(basis.col(1) == m.col(2));
    for (int j = 0; j < m.cols(); ++j) CHECK(in_span(basis, m.col(j)));
}

TEST_CASE("in_span handles empty bases and rejects outsiders") {
    RatMat empty(3, 0);
    CHECK(in_span(empty, RatVec::Zero(3)));
    RatVec e1 = RatVec::Zero(3);
    e1(0) = 1;
    CHECK(!in_span(empty, e1));
    RatMat plane = rat3({{1, 0}, {0, 1}, {0, 0}});
    RatVec v(3);
    v << Rat(2), Rat(-3), Rat(0);
    CHECK(in_span(plane, v));
    v(2) = 1;
    CHECK(!in_span(plane, v));
}

TEST_CASE("span intersection of two planes in R^3 is the shared line") {
    RatMat u = rat3({{1, 0}, {0, 1}, {0, 0}});  // z = 0
    RatMat w = rat3({{1, 0}, {0, 0}, {0, 1}});  // y = 0
    RatMat line = span_intersection(u, w);
    REQUIRE(line.cols() == 1);
    RatVec e1 = RatVec::Zero(3);
    e1(0) = 1;
    CHECK(normalize_leading(line.col(0)) == e1);
    // intersection of a plane with itself (redundant columns dropped)
    RatMat udup(3, 3);
    udup << u, u.col(0);
    RatMat self = span_intersection(udup, u);
    CHECK(exact_rank(self) == 2);
}

TEST_CASE("kron satisfies the mixed-product rule") {
    Rng rng(11);
    RatMat a = random_square(2, rng), b = random_square(3, rng);
    RatMat c = random_square(2, rng), d = random_square(3, rng);
    CHECK(RatMat(kron<Rat>(a, b) * kron<Rat>(c, d)) == kron<Rat>(RatMat(a * c), RatMat(b * d)));
    CHECK(kron<Rat>(RatMat::Identity(2, 2), RatMat::Identity(3, 3)) ==
          RatMat(RatMat::Identity(6, 6)));
}

TEST_CASE("normalize_leading scales the first nonzero to one") {
    RatVec v(3);
    v << Rat(0), Rat(-2), Rat(4);
    RatVec n = normalize_leading(v);
    CHECK(n(0) == 0);
    CHECK(n(1) == 1);
    CHECK(n(2) == -2);
    CHECK(normalize_leading(RatVec::Zero(3)) == RatVec(RatVec::Zero(3)));
}

TEST_CASE("numeric rank thresholds relative to the top singular value") {
    RealMat m(3, 3);
    m << 1, 0, 0, 0, 1e-3, 0, 0, 0, 1e-12;
    CHECK(numeric_rank(m, 1e-8) == 2);
    CHECK(numeric_rank(m, 1e-4) == 2);
    CHECK(numeric_rank(m, 1e-2) == 1);
    CHECK(numeric_rank(RealMat::Zero(2, 2)) == 0);
}
