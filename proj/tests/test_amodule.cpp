#include <gtest/gtest.h>

#include <random>

#include "common.hpp"

using namespace fdalg;
using fdalg::testing::corner_module;
using fdalg::testing::random_combination;

namespace {

Vec ints(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

AlgebraPtr t3() { return truncated_polynomial(3).algebra(); }

RightModule t3_simple(const AlgebraPtr& a) { return simple_modules(a, primitive_idempotents(*a)).front(); }

}  // namespace

TEST(Hom, RegularEndomorphismsAreLeftMultiplications) {
    auto a = t3();
    RightModule reg = regular_module(a);
    auto homs = hom_space(reg, reg);
    EXPECT_EQ(homs.size(), 3u);
    for (std::size_t k = 0; k < 3; ++k) {
        std::vector<Matrix> with = homs;
        with.push_back(a->left_mult(a->basis(k)));
        EXPECT_EQ(span_rank(with), 3u);
    }
}

TEST(Hom, SimpleIntoRegularLandsInSocle) {
    auto a = t3();
    RightModule s = t3_simple(a);
    EXPECT_EQ(s.dim(), 1u);
    auto homs = hom_space(s, regular_module(a));
    ASSERT_EQ(homs.size(), 1u);
    EXPECT_TRUE(Subspace::span({ints({0, 0, 1})}, 3).contains(homs[0].row(0)));
}

TEST(Hom, IdentityIsAlwaysPresent) {
    for (const char* name : {"t3", "n2", "qs3"}) {
        auto a = zoo_entry(name).algebra();
        for (const auto& nm : standard_modules(a, primitive_idempotents(*a))) {
            auto homs = hom_space(nm.module, nm.module);
            homs.push_back(Matrix::identity(nm.module.dim()));
            EXPECT_EQ(span_rank(homs), homs.size() - 1) << name << " " << nm.name;
        }
    }
}

TEST(FreeModules, RankOneIsRegularAndSumsOfSimples) {
    auto a = t3();
    EXPECT_EQ(free_module(a, 1), regular_module(a));
    RightModule s = t3_simple(a);
    DirectSum ss = direct_sum(a, {s, s});
    EXPECT_EQ(hom_space(ss.module, ss.module).size(), 4u);
    EXPECT_EQ(direct_sum(a, {}).module.dim(), 0u);
    for (std::size_t t = 0; t < 2; ++t) EXPECT_EQ(ss.injections[t] * ss.projections[t], Matrix::identity(1));
}

TEST(Projectivity, RegularIsFree) {
    auto a = t3();
    auto res = is_projective_with_coords(regular_module(a));
    ASSERT_TRUE(std::holds_alternative<CoordinateSystem>(res));
    EXPECT_TRUE(is_coordinate_system(regular_module(a), std::get<CoordinateSystem>(res)));
}

TEST(Projectivity, ZigzagSummandSplits) {
    auto n2 = zigzag_2().algebra();
    RightModule e1p = corner_module(n2, n2->basis(0));
    EXPECT_EQ(e1p.dim(), 3u);
    auto res = is_projective_with_coords(e1p);
    ASSERT_TRUE(std::holds_alternative<CoordinateSystem>(res));
    EXPECT_TRUE(is_coordinate_system(e1p, std::get<CoordinateSystem>(res)));
}

TEST(Projectivity, SimpleOfLocalAlgebraIsNot) {
    auto a = t3();
    auto res = is_projective_with_coords(t3_simple(a));
    ASSERT_TRUE(std::holds_alternative<NotProjective>(res));
    EXPECT_FALSE(is_zero(std::get<NotProjective>(res).certificate));
}

TEST(EndoAlgebra, ZigzagSummandIsLocalOfDimTwo) {
    auto n2 = zigzag_2().algebra();
    EndoAlgebra end = endo_algebra(corner_module(n2, n2->basis(0)));
    EXPECT_EQ(end.algebra->dim(), 2u);
    EXPECT_EQ(primitive_idempotents(*end.algebra).size(), 1u);
    EXPECT_EQ(radical(*end.algebra).dim(), 1u);
}

TEST(Quotients, RegularTimesRadical) {
    auto a = t3();
    EXPECT_EQ(submodule_times_ideal(regular_module(a), radical(*a).space()), radical(*a).space());
}

TEST(Quotients, CosetModuleOverQuotientAlgebra) {
    auto a = t3();
    Ideal top = Ideal::verified(*a, Subspace::span({ints({0, 0, 1})}, 3));
    RightModule reg = regular_module(a);
    Subspace wk = submodule_times_ideal(reg, top.space());
    QuotientModule qm = quotient_module(reg, wk);
    QuotientAlgebra qa = quotient_algebra(*a, top);
    RightModule induced = induced_module_over_quotient(qm.module, qa, top);
    EXPECT_TRUE(find_isomorphism(induced, regular_module(qa.algebra)).has_value());
}

TEST(Quotients, HatOfMultiplicationByX) {
    auto a = t3();
    RightModule reg = regular_module(a);
    Subspace wk = Subspace::span({ints({0, 0, 1})}, 3);
    QuotientModule qm = quotient_module(reg, wk);
    Matrix hat = induced_endo_hat(reg, qm, wk, a->left_mult(a->basis(1)));
    EXPECT_FALSE(hat.is_zero());
    EXPECT_TRUE((hat * hat).is_zero());
    EXPECT_EQ(induced_endo_hat(reg, qm, wk, Matrix::identity(3)), Matrix::identity(2));
    EXPECT_TRUE(induced_endo_hat(reg, qm, wk, a->left_mult(a->basis(2))).is_zero());
}

// ---------------------------------------------------------------------------

class ModuleProperties : public ::testing::TestWithParam<std::string> {};

TEST_P(ModuleProperties, CoordinateSystemsSplitTheFreeCover) {
    auto a = zoo_entry(GetParam()).algebra();
    for (const auto& nm : standard_modules(a, primitive_idempotents(*a))) {
        auto res = is_projective_with_coords(nm.module);
        auto* cs = std::get_if<CoordinateSystem>(&res);
        if (!cs) continue;
        EXPECT_TRUE(is_coordinate_system(nm.module, *cs));
        // s∘p is an idempotent on A^g whose image is isomorphic to W.
        const std::size_t g = cs->size(), n = a->dim(), m = nm.module.dim();
        Matrix p(g * n, m), s(m, g * n);
        for (std::size_t i = 0; i < g; ++i) {
            for (std::size_t k = 0; k < n; ++k) p.set_row(i * n + k, nm.module.act(cs->elements[i], a->basis(k)));
            for (std::size_t x = 0; x < m; ++x)
                for (std::size_t k = 0; k < n; ++k) s(x, i * n + k) = cs->functionals[i](x, k);
        }
        EXPECT_EQ(s * p, Matrix::identity(m)) << nm.name;
        Matrix e = p * s;
        EXPECT_EQ(e * e, e) << nm.name;
        EXPECT_EQ(rank(e), m) << nm.name;
    }
}

TEST_P(ModuleProperties, EndomorphismAlgebraValidates) {
    auto a = zoo_entry(GetParam()).algebra();
    for (const auto& nm : standard_modules(a, primitive_idempotents(*a))) {
        EndoAlgebra end = endo_algebra(nm.module);
        EXPECT_FALSE(validate(end.algebra->def())) << nm.name;
    }
}

TEST_P(ModuleProperties, HatIsFunctorial) {
    auto a = zoo_entry(GetParam()).algebra();
    Ideal j = radical(*a);
    if (j.dim() == 0) GTEST_SKIP() << "semisimple";
    std::mt19937 rng(5);
    RightModule reg = regular_module(a);
    Subspace wj = submodule_times_ideal(reg, j.space());
    QuotientModule qm = quotient_module(reg, wj);
    auto homs = hom_space(reg, reg);
    for (int t = 0; t < 5; ++t) {
        Matrix x = random_combination(rng, homs, reg.dim()), y = random_combination(rng, homs, reg.dim());
        EXPECT_EQ(induced_endo_hat(reg, qm, wj, x * y),
                  induced_endo_hat(reg, qm, wj, x) * induced_endo_hat(reg, qm, wj, y));
    }
}

INSTANTIATE_TEST_SUITE_P(Zoo, ModuleProperties, ::testing::Values("t3", "u2", "m2", "qs3", "n2", "m2xt3"));
