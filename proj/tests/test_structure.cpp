#include <gtest/gtest.h>

#include <algorithm>

#include "common.hpp"
#include "oracle.hpp"

using namespace fdalg;

namespace {

Vec ints(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

Subspace to_subspace(const oracle::Rows& rows, std::size_t n) {
    std::vector<Vec> vs(rows.begin(), rows.end());
    return Subspace::span(vs, n);
}

bool same_set(std::vector<Vec> a, std::vector<Vec> b) {
    auto less = [](const Vec& x, const Vec& y) { return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end()); };
    std::sort(a.begin(), a.end(), less);
    std::sort(b.begin(), b.end(), less);
    return a == b;
}

}  // namespace

TEST(Radical, Examples) {
    auto t3 = truncated_polynomial(3).algebra();
    EXPECT_EQ(radical(*t3).space(), Subspace::span({ints({0, 1, 0}), ints({0, 0, 1})}, 3));
    EXPECT_EQ(radical(*matrix_algebra(2).algebra()).dim(), 0u);
    auto u2 = upper_triangular(2).algebra();
    // Basis e11, e12, e22.
    EXPECT_EQ(radical(*u2).space(), Subspace::span({ints({0, 1, 0})}, 3));
}

TEST(Socle, Examples) {
    auto t3 = truncated_polynomial(3).algebra();
    Subspace top = Subspace::span({ints({0, 0, 1})}, 3);
    EXPECT_EQ(socle(*t3, Side::Right), top);
    EXPECT_EQ(socle(*t3, Side::Left), top);
    auto u2 = upper_triangular(2).algebra();
    EXPECT_EQ(socle(*u2, Side::Right), Subspace::span({ints({0, 1, 0}), ints({0, 0, 1})}, 3));
    EXPECT_EQ(socle(*u2, Side::Left), Subspace::span({ints({1, 0, 0}), ints({0, 1, 0})}, 3));
    EXPECT_EQ(socle(*matrix_algebra(2).algebra(), Side::Right), Subspace::full(4));
}

TEST(Idempotents, LocalAlgebraHasOne) {
    auto t3 = truncated_polynomial(3).algebra();
    auto dec = primitive_idempotents(*t3);
    ASSERT_EQ(dec.size(), 1u);
    EXPECT_EQ(dec.idempotents[0], t3->one());
}

TEST(Idempotents, MatrixUnitsFormOneBlock) {
    auto m2 = matrix_algebra(2).algebra();
    auto dec = primitive_idempotents(*m2);
    EXPECT_EQ(dec.size(), 2u);
    EXPECT_EQ(dec.block_count(), 1u);
    EXPECT_TRUE(same_set(dec.idempotents, {ints({1, 0, 0, 0}), ints({0, 0, 0, 1})}));
}

TEST(Idempotents, UpperTriangularHasTwoBlocks) {
    auto u2 = upper_triangular(2).algebra();
    auto dec = primitive_idempotents(*u2);
    EXPECT_EQ(dec.size(), 2u);
    EXPECT_EQ(dec.block_count(), 2u);
    EXPECT_TRUE(same_set(dec.idempotents, {ints({1, 0, 0}), ints({0, 0, 1})}));
}

TEST(Idempotents, S3CentralIdempotentsMatchCharacters) {
    auto qs3 = group_algebra_S3().algebra();
    auto dec = primitive_idempotents(*qs3);
    EXPECT_EQ(dec.size(), 4u);
    EXPECT_EQ(dec.block_count(), 3u);
    // Order e, (12), (13), (23), (123), (132): χ(1)/|G| Σ χ(g⁻¹) g per character.
    Vec triv(6, Rational(1, 6));
    Vec sign{Rational(1, 6), Rational(-1, 6), Rational(-1, 6), Rational(-1, 6), Rational(1, 6), Rational(1, 6)};
    Vec two{Rational(2, 3), Rational(0), Rational(0), Rational(0), Rational(-1, 3), Rational(-1, 3)};
    EXPECT_TRUE(same_set(central_blocks(*qs3, dec), {triv, sign, two}));
}

TEST(Idempotents, NonSplitSemisimplePartIsRejected) {
    auto c3 = group_algebra_cyclic(3).algebra();
    try {
        primitive_idempotents(*c3);
        FAIL() << "expected NotSplitOverQ";
    } catch (const NotSplitOverQ& e) {
        EXPECT_EQ(e.minimal_polynomial, "x^3 - 1");
    }
}

TEST(BasicAlgebra, MatrixAlgebraWitnesses) {
    auto m2 = matrix_algebra(2).algebra();
    auto dec = primitive_idempotents(*m2);
    auto basic = basic_algebra(*m2, dec);
    EXPECT_EQ(basic.algebra()->dim(), 1u);
    ASSERT_EQ(basic.p[0].size(), 2u);
    const Vec& ei = dec.at(0, 0);
    const Vec& eij = dec.at(0, 1);
    EXPECT_EQ(m2->mul(basic.p[0][1], basic.q[0][1]), eij);
    EXPECT_EQ(m2->mul(basic.q[0][1], basic.p[0][1]), ei);
    if (ei == ints({1, 0, 0, 0})) {
        // p ∈ E22·A·E11 and q ∈ E11·A·E22 are multiples of E21 and E12.
        EXPECT_TRUE(Subspace::span({ints({0, 0, 1, 0})}, 4).contains(basic.p[0][1]));
        EXPECT_TRUE(Subspace::span({ints({0, 1, 0, 0})}, 4).contains(basic.q[0][1]));
    }
}

TEST(BasicAlgebra, S3AndZigzag) {
    auto qs3 = group_algebra_S3().algebra();
    auto b = basic_algebra(*qs3, primitive_idempotents(*qs3));
    EXPECT_EQ(b.algebra()->dim(), 3u);
    EXPECT_EQ(commutator_subspace(*b.algebra()).dim(), 0u);
    auto n2 = zigzag_2().algebra();
    auto bn = basic_algebra(*n2, primitive_idempotents(*n2));
    EXPECT_EQ(bn.e, n2->one());
    EXPECT_EQ(bn.algebra()->dim(), 6u);
}

TEST(DoubleCentralizer, Examples) {
    for (const char* name : {"m2", "t3", "n2", "qs3"}) {
        auto a = zoo_entry(name).algebra();
        auto rep = verify_double_centralizer(*a, basic_algebra(*a, primitive_idempotents(*a)));
        EXPECT_TRUE(rep.pass()) << name;
        EXPECT_EQ(rep.dim_end_basic_ae, a->dim()) << name;
    }
    auto m2 = matrix_algebra(2).algebra();
    auto rep = verify_double_centralizer(*m2, basic_algebra(*m2, primitive_idempotents(*m2)));
    EXPECT_EQ(rep.dim_end_basic_ae, 4u);
    EXPECT_EQ(rep.dim_ae, 2u);
}

TEST(SymmetricForm, Examples) {
    auto t3 = truncated_polynomial(3).algebra();
    auto r = find_symmetric_form(*t3);
    ASSERT_EQ(r.verdict, SymmetricVerdict::Found);
    EXPECT_TRUE(is_nondegenerate(*t3, *r.phi));
    // x²-dual has the anti-diagonal Gram matrix.
    EXPECT_EQ(gram_matrix(*t3, LinFunc{ints({0, 0, 1})}), Matrix::from_ints({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));

    EXPECT_EQ(find_symmetric_form(*upper_triangular(2).algebra()).verdict, SymmetricVerdict::CertifiedNotSymmetric);

    auto n2 = zigzag_2().algebra();
    LinFunc phi{ints({0, 0, 0, 0, 1, 1})};
    EXPECT_TRUE(is_symmetric(*n2, phi));
    EXPECT_TRUE(is_nondegenerate(*n2, phi));
    EXPECT_EQ(find_symmetric_form(*n2).verdict, SymmetricVerdict::Found);
}

TEST(SymmetricForm, ZeroBudgetIsInconclusive) {
    auto r = find_symmetric_form(*truncated_polynomial(3).algebra(), 0);
    EXPECT_EQ(r.verdict, SymmetricVerdict::Inconclusive);
    EXPECT_FALSE(r.phi);
}

// ---------------------------------------------------------------------------

class StructureProperties : public ::testing::TestWithParam<std::string> {};

TEST_P(StructureProperties, RadicalAndSoclesAgreeWithOracle) {
    auto a = zoo_entry(GetParam()).algebra();
    const auto& d = a->def();
    Ideal j = radical(*a);
    EXPECT_EQ(j.space(), to_subspace(oracle::radical(d), a->dim()));
    EXPECT_EQ(socle(*a, Side::Right, j), to_subspace(oracle::socle(d, true), a->dim()));
    EXPECT_EQ(socle(*a, Side::Left, j), to_subspace(oracle::socle(d, false), a->dim()));
    EXPECT_EQ(slf_basis(*a).size(), oracle::slf(d).size());
}

TEST_P(StructureProperties, RadicalIsNilpotentWithSemisimpleQuotient) {
    auto a = zoo_entry(GetParam()).algebra();
    Ideal j = radical(*a);
    std::size_t idx = nilpotency_index(*a, j.space());
    EXPECT_LE(idx, a->dim() + 1);
    std::vector<Vec> jb = j.space().basis_vectors();
    EXPECT_TRUE(oracle::span_is_nilpotent(a->def(), oracle::Rows(jb.begin(), jb.end()), a->dim() + 1));
    auto q = quotient_algebra(*a, j);
    EXPECT_EQ(radical(*q.algebra).dim(), 0u);
}

TEST_P(StructureProperties, IdempotentDecomposition) {
    auto a = zoo_entry(GetParam()).algebra();
    if (GetParam() == "c3") GTEST_SKIP() << "not split over Q";
    auto dec = primitive_idempotents(*a);
    EXPECT_TRUE(is_valid_decomposition(*a, dec));
    Vec total = a->zero();
    for (const auto& e : dec.idempotents) total = total + e;
    EXPECT_EQ(total, a->one());
    for (std::size_t s = 0; s < dec.size(); ++s)
        for (std::size_t t = 0; t < dec.size(); ++t)
            EXPECT_EQ(a->mul(dec.idempotents[s], dec.idempotents[t]), s == t ? dec.idempotents[s] : a->zero());
}

TEST_P(StructureProperties, BasicAlgebraWitnessesAndShape) {
    if (GetParam() == "c3") GTEST_SKIP() << "not split over Q";
    auto a = zoo_entry(GetParam()).algebra();
    auto dec = primitive_idempotents(*a);
    auto basic = basic_algebra(*a, dec);
    std::size_t corner_total = 0;
    for (std::size_t b = 0; b < dec.block_count(); ++b) {
        const Vec& ei = dec.representative(b);
        for (std::size_t c = 0; c < dec.block_count(); ++c)
            corner_total += corner_space(*a, ei, dec.representative(c)).dim();
        for (std::size_t jdx = 1; jdx < dec.blocks[b].size(); ++jdx) {
            EXPECT_EQ(a->mul(basic.p[b][jdx], basic.q[b][jdx]), dec.at(b, jdx));
            EXPECT_EQ(a->mul(basic.q[b][jdx], basic.p[b][jdx]), ei);
        }
    }
    EXPECT_EQ(basic.algebra()->dim(), corner_total);
    auto bdec = primitive_idempotents(*basic.algebra());
    EXPECT_EQ(bdec.block_count(), dec.block_count());
    EXPECT_EQ(bdec.size(), dec.block_count());
}

TEST_P(StructureProperties, SymmetricFormPerpRelations) {
    if (GetParam() == "c3") GTEST_SKIP() << "not split over Q";
    auto a = zoo_entry(GetParam()).algebra();
    auto r = find_symmetric_form(*a);
    if (r.verdict != SymmetricVerdict::Found) {
        EXPECT_EQ(GetParam(), "u2");
        return;
    }
    Ideal j = radical(*a);
    Subspace soc = socle(*a, Side::Right, j);
    EXPECT_EQ(perp(*a, *r.phi, j.space()), soc);
    EXPECT_EQ(perp(*a, *r.phi, soc), j.space());
}

TEST_P(StructureProperties, CentralBlocksAreOrthogonalCentralIdempotents) {
    if (GetParam() == "c3") GTEST_SKIP() << "not split over Q";
    auto a = zoo_entry(GetParam()).algebra();
    auto blocks = central_blocks(*a, primitive_idempotents(*a));
    Vec total = a->zero();
    for (std::size_t s = 0; s < blocks.size(); ++s) {
        EXPECT_TRUE(a->is_central(blocks[s]));
        total = total + blocks[s];
        for (std::size_t t = 0; t < blocks.size(); ++t)
            EXPECT_EQ(a->mul(blocks[s], blocks[t]), s == t ? blocks[s] : a->zero());
    }
    EXPECT_EQ(total, a->one());
}

INSTANTIATE_TEST_SUITE_P(Zoo, StructureProperties, ::testing::Values("t3", "u2", "m2", "qs3", "n2", "c3", "m2xt3"));
