#include <gtest/gtest.h>

#include "common.hpp"

using namespace fdalg;

namespace {

Vec ints(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST(Zoo, TruncatedPolynomial) {
    ZooEntry e = truncated_polynomial(3);
    EXPECT_EQ(e.def.dim, 3u);
    EXPECT_EQ(e.canonical_phi->values, ints({0, 0, 1}));
    EXPECT_THROW(truncated_polynomial(0), InvalidInput);
}

TEST(Zoo, ZigzagTable) {
    ZooEntry e = zigzag_2();
    auto a = e.algebra();
    ASSERT_EQ(a->dim(), 6u);
    // e1, e2, alpha, beta, alpha*beta, beta*alpha.
    Vec alpha = a->basis(2), beta = a->basis(3);
    EXPECT_EQ(a->mul(alpha, beta), a->basis(4));
    EXPECT_EQ(a->mul(beta, alpha), a->basis(5));
    EXPECT_EQ(a->mul(alpha, a->basis(5)), a->zero());
    EXPECT_EQ(a->mul(alpha, alpha), a->zero());
    EXPECT_EQ(a->mul(a->basis(0), alpha), alpha);
    EXPECT_TRUE(e.notes.basic);
    EXPECT_TRUE(e.notes.indecomposable);
    EXPECT_TRUE(e.notes.symmetric);
    EXPECT_FALSE(e.notes.convention.empty());
}

TEST(Zoo, MatrixAlgebra) {
    ZooEntry e = matrix_algebra(2);
    EXPECT_EQ(e.def.dim, 4u);
    EXPECT_FALSE(e.notes.basic);
    EXPECT_EQ(e.canonical_phi->values, ints({1, 0, 0, 1}));
}

TEST(Zoo, LookupByName) {
    for (const auto& name : zoo_names()) EXPECT_EQ(zoo_entry(name).name, name);
    EXPECT_EQ(zoo_entry("trunc-5").def.dim, 5u);
    EXPECT_EQ(zoo_entry("upper-3").def.dim, 6u);
    EXPECT_THROW(zoo_entry("nothing"), InvalidInput);
    EXPECT_THROW(zoo_entry("trunc-x"), InvalidInput);
}

TEST(ZooModules, Constructors) {
    auto t3 = truncated_polynomial(3);
    RightModule reg = regular(t3);
    EXPECT_EQ(reg.dim(), 3u);
    EXPECT_TRUE(is_projective(reg));

    auto n2 = zigzag_2().algebra();
    auto dec = primitive_idempotents(*n2);
    auto simples = simple_quotients(n2, dec);
    ASSERT_EQ(simples.size(), 2u);
    for (const auto& s : simples) EXPECT_EQ(s.dim(), 1u);
    auto proj = indecomposable_projectives(n2, dec);
    ASSERT_EQ(proj.size(), 2u);
    for (const auto& p : proj) {
        EXPECT_EQ(p.dim(), 3u);
        EXPECT_TRUE(is_projective(p));
    }
}

TEST(ZooModules, NonProjectiveSamples) {
    auto n2 = zigzag_2().algebra();
    auto dec = primitive_idempotents(*n2);
    for (std::size_t seed = 0; seed < 4; ++seed) EXPECT_FALSE(is_projective(random_nonprojective(n2, dec, seed)));
    auto m2 = matrix_algebra(2).algebra();
    EXPECT_THROW(random_nonprojective(m2, primitive_idempotents(*m2)), InvalidInput);
}

class ZooEntries : public ::testing::TestWithParam<std::string> {};

TEST_P(ZooEntries, SymmetricEntriesHaveMatchingSoclesAndNondegenerateForm) {
    ZooEntry e = zoo_entry(GetParam());
    auto a = e.algebra();
    if (!e.notes.symmetric) {
        EXPECT_FALSE(e.canonical_phi.has_value());
        return;
    }
    ASSERT_TRUE(e.canonical_phi);
    EXPECT_EQ(socle(*a, Side::Left), socle(*a, Side::Right));
    EXPECT_TRUE(is_symmetric(*a, *e.canonical_phi));
    EXPECT_TRUE(is_nondegenerate(*a, *e.canonical_phi));
}

INSTANTIATE_TEST_SUITE_P(All, ZooEntries, ::testing::Values("t3", "u2", "m2", "qs3", "n2", "c3", "m2xt3"));

TEST(ZooProduct, SlfDimensionAdds) {
    std::vector<ZooEntry> parts{matrix_algebra(2), truncated_polynomial(3), group_algebra_S3()};
    ZooEntry p = product(parts);
    std::size_t total = 0;
    for (const auto& part : parts) total += slf_basis(*part.algebra()).size();
    EXPECT_EQ(slf_basis(*p.algebra()).size(), total);
    EXPECT_EQ(p.def.basis_names.front(), "1.E11");
}

TEST(ZooZigzag, ContextInvariants) {
    ZooEntry e = zigzag_2();
    SymmetricContext ctx = build_context(e.algebra(), *e.canonical_phi);
    EXPECT_EQ(ctx.k(), 2u);
    EXPECT_EQ(ctx.d[0][1], 1u);
}
