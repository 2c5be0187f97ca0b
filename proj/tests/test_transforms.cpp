#include "doctest.h"
#include "mmt/transforms.hpp"
#include "test_helpers.hpp"

namespace {

using namespace mmt;
using mmt_test::random_fact;

}  // namespace

TEST_CASE("identity transform is a no-op; group laws hold") {
    const RatFact f = generator("strassen222");
    const RatGroote id = RatGroote::identity(f.dims);
    CHECK(apply_groote(f, id) == f);
    const RatGroote g1 = random_groote(f.dims, 101);
    const RatGroote g2 = random_groote(f.dims, 102);
    CHECK(apply_groote(apply_groote(f, g1), g2) == apply_groote(f, groote_compose(g2, g1)));
    CHECK(apply_groote(apply_groote(f, g1), groote_inverse(g1)) == f);
}

TEST_CASE("transforms preserve residual and all signature invariants") {
    for (const char* name : {"strassen222", "appendix_e_336_A"}) {
        const RatFact f = generator(name);
        const auto sig = sorted_desc(signature(f));
        const auto gen = sorted_rows(generalized_signature(f));
        const RankSignature rs = rank_signature(f);
        const auto sa = sorted_desc(rs.sA), sb = sorted_desc(rs.sB), sc = sorted_desc(rs.sC);
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            const RatFact g = apply_groote(f, random_groote(f.dims, seed));
            CHECK(brent_residual(g) == 0);
            CHECK(sorted_desc(signature(g)) == sig);
            CHECK(sorted_rows(generalized_signature(g)) == gen);
            const RankSignature rs2 = rank_signature(g);
            CHECK(sorted_desc(rs2.sA) == sa);
            CHECK(sorted_desc(rs2.sB) == sb);
            CHECK(sorted_desc(rs2.sC) == sc);
        }
    }
}

TEST_CASE("random transforms are deterministic, invertible, and range-bounded") {
    const Dims d{3, 3, 6};
    const RatGroote g1 = random_groote(d, 9, 2);
    const RatGroote g2 = random_groote(d, 9, 2);
    CHECK(g1.XA == g2.XA);
    CHECK(g1.XB == g2.XB);
    CHECK(g1.XC == g2.XC);
    CHECK(exact_det(g1.XA) != 0);
    CHECK(exact_det(g1.XB) != 0);
    CHECK(exact_det(g1.XC) != 0);
    CHECK(g1.XA.rows() == d.Q);
    CHECK(g1.XB.rows() == d.S);
    CHECK(g1.XC.rows() == d.P);
    for (const RatMat* m : {&g1.XA, &g1.XB, &g1.XC})
        for (int i = 0; i < m->size(); ++i) {
            CHECK((*m)(i) <= 2);
            CHECK((*m)(i) >= -2);
        }
    const RatGroote g3 = random_groote(d, 10, 2);
    CHECK(g1.XA != g3.XA);
    CHECK_THROWS_AS(random_groote(d, 1, 0), std::invalid_argument);
}

TEST_CASE("transform application validates sizes and invertibility") {
    const RatFact f = generator("strassen222");
    RatGroote bad = RatGroote::identity(f.dims);
    bad.XA = RatMat::Zero(2, 2);
    CHECK_THROWS_AS(apply_groote(f, bad), std::invalid_argument);
    bad.XA = RatMat::Identity(3, 3);
    CHECK_THROWS_AS(apply_groote(f, bad), std::invalid_argument);
}

TEST_CASE("Kronecker composition reproduces the bundled double Strassen") {
    const RatFact s = generator("strassen222");
    const RatFact composed = compose_kronecker(s, s);
    CHECK(composed.dims == Dims{4, 4, 4});
    CHECK(composed.rank() == 49);
    CHECK(composed == generator("double_strassen444"));
    CHECK(brent_residual(composed) == 0);
    // first component of the composed decomposition is the identity slice
    CHECK(slice(composed, Mode::A, 1) == RatMat(RatMat::Identity(4, 4)));
    CHECK(slice(composed, Mode::B, 1) == RatMat(RatMat::Identity(4, 4)));
    CHECK(slice(composed, Mode::C, 1) == RatMat(RatMat::Identity(4, 4)));
}

TEST_CASE("composition of mixed shapes multiplies dims and ranks") {
    const RatFact s = generator("strassen222");
    const RatFact p = generator("paper333_symmetric");
    const RatFact composed = compose_kronecker(s, p);
    CHECK(composed.dims == Dims{6, 6, 6});
    CHECK(composed.rank() == 7 * 23);
    CHECK(brent_residual(composed) == 0);
}

TEST_CASE("checked composition rejects invalid inputs") {
    const RatFact s = generator("strassen222");
    RatFact broken = s;
    broken.A(0, 0) += 1;
    CHECK_THROWS_AS(compose_kronecker_checked(broken, s), std::invalid_argument);
    CHECK_THROWS_AS(compose_kronecker_checked(s, broken), std::invalid_argument);
    CHECK_NOTHROW(compose_kronecker_checked(s, s));
}

TEST_CASE("cyclic assembly rebuilds Strassen from its orbit blocks") {
    // column permutation pi = (1)(2 3 7)(4 6 5) acts on Strassen's components;
    // representatives {2,4} generate the two 3-cycles
    const RatFact f = generator("strassen222");
    RatMat A0 = f.A.col(0);
    RatMat A1(4, 2), B1(4, 2), C1(4, 2);
    A1 << f.A.col(1), f.A.col(3);
    B1 << f.A.col(2), f.A.col(5);
    C1 << f.A.col(6), f.A.col(4);
    const RatFact g = cyclic_assemble<Rat>(A0, A1, B1, C1);
    CHECK(g.dims == Dims{2, 2, 2});
    CHECK(g.rank() == 7);
    CHECK(brent_residual(g) == 0);
    const std::vector<int> sigma{1, 2, 4, 3, 6, 7, 5};
    CHECK(g.A == reorder_columns(f.A, sigma));
    CHECK(g.B == reorder_columns(f.B, sigma));
    CHECK(g.C == reorder_columns(f.C, sigma));
}

TEST_CASE("cyclic assembly validates block shapes") {
    CHECK_THROWS_AS(cyclic_assemble<Rat>(RatMat::Zero(3, 1), RatMat::Zero(3, 1),
                                         RatMat::Zero(3, 1), RatMat::Zero(3, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(cyclic_assemble<Rat>(RatMat::Zero(4, 1), RatMat::Zero(4, 1),
                                         RatMat::Zero(4, 2), RatMat::Zero(4, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(cyclic_assemble<Rat>(RatMat::Zero(4, 1), RatMat::Zero(9, 1),
                                         RatMat::Zero(9, 1), RatMat::Zero(9, 1)),
                    std::invalid_argument);
}

TEST_CASE("all generators yield exact decompositions") {
    for (const auto& name : generator_names()) {
        if (name == "param333") continue;
        CHECK(brent_residual(generator(name)) == 0);
    }
    for (auto params : {std::vector<Rat>{1, 1, 1, 1}, std::vector<Rat>{1, -1, 1, -1},
                        std::vector<Rat>{2, 3, 5, 7},
                        std::vector<Rat>{Rat(1, 2), Rat(-2, 3), Rat(5), Rat(7, 11)}}) {
        const RatFact f = generator("param333", params);
        CHECK(f.dims == Dims{3, 3, 3});
        CHECK(f.rank() == 23);
        CHECK(brent_residual(f) == 0);
    }
}

TEST_CASE("parameterized 3x3x3 family at unit parameters uses only 0 and +-1") {
    const RatFact f = generator("param333", {1, 1, 1, 1});
    for (const RatMat* m : {&f.A, &f.B, &f.C})
        for (int i = 0; i < m->size(); ++i)
            CHECK(((*m)(i) == 0 || (*m)(i) == 1 || (*m)(i) == -1));
    // cyclic symmetry: B and C are column permutations of A
    CHECK(brent_residual(f) == 0);
}

TEST_CASE("generator argument validation") {
    CHECK_THROWS_AS(generator("unknown_name"), std::invalid_argument);
    CHECK_THROWS_AS(generator("param333", {1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(generator("param333", {0, 1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(generator("param333", {1, 1, 0, 1}), std::invalid_argument);
}
