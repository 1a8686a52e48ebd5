#include <gtest/gtest.h>

#include "pfrep/pfrep.hpp"
#include "support.hpp"

using namespace pfrep;

namespace {

using SymRing = PolynomialRing<IntegerRing>;

// a12, a13, ... as indeterminates, so Pfaffian identities can be checked symbolically
SymRing entry_ring(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) names.push_back("a" + std::to_string(i) + "_" + std::to_string(j));
    return SymRing(IntegerRing{}, names);
}

SkewMatrix<SymRing> generic_skew(const SymRing& r, std::size_t n) {
    SkewMatrix<SymRing> m(r, n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            m.set(i, j, r.variable("a" + std::to_string(i) + "_" + std::to_string(j)));
    return m;
}

template <CommutativeRing R>
SkewMatrix<R> scaled(const SkewMatrix<R>& a, const typename R::value_type& c) {
    SkewMatrix<R> out(a.ring(), a.size());
    for (const auto& e : a.nonzero_entries()) out.set(e.i, e.j, a.ring().mul(c, e.value));
    return out;
}

const IntegerRing zz;

SkewMatrix<IntegerRing> instance4() {
    return skew_from_upper(zz, 4,
                           {{1, 2, 2}, {1, 3, 3}, {1, 4, 1}, {2, 3, 4}, {2, 4, 7}, {3, 4, 5}});
}

}  // namespace

TEST(SkewFromUpper, SizeTwoPfaffianIsTheEntry) {
    const SymRing r(IntegerRing{}, {"a"});
    const auto m = skew_from_upper(r, 2, {{1, 2, r.variable("a")}});
    EXPECT_EQ(pfaffian(m), r.variable("a"));
    EXPECT_EQ(m.entry(2, 1), r.neg(r.variable("a")));
    EXPECT_TRUE(r.is_zero(m.entry(1, 1)));
}

TEST(SkewFromUpper, EmptyIsZero) {
    const auto m = skew_from_upper(zz, 4, {});
    EXPECT_EQ(pfaffian(m), 0);
    EXPECT_TRUE(m.nonzero_entries().empty());
}

TEST(SkewFromUpper, ZeroValuesDropped) {
    const auto m = skew_from_upper(zz, 4, {{1, 2, 0}, {3, 4, 2}});
    EXPECT_EQ(m.nonzero_entries().size(), 1u);
}

TEST(SkewFromUpper, Errors) {
    EXPECT_THROW(skew_from_upper(zz, 4, {{2, 1, 1}}), IndexError);
    EXPECT_THROW(skew_from_upper(zz, 4, {{2, 2, 1}}), IndexError);
    EXPECT_THROW(skew_from_upper(zz, 4, {{1, 5, 1}}), IndexError);
    EXPECT_THROW(skew_from_upper(zz, 4, {{0, 2, 1}}), IndexError);
    EXPECT_THROW(skew_from_upper(zz, 4, {{1, 2, 1}, {1, 2, 3}}), IndexError);
    EXPECT_THROW(skew_from_upper(zz, 3, {}), ShapeError);
}

TEST(SkewMatrix, CharacteristicTwoKeepsZeroDiagonal) {
    ModularRing z2(2);
    const auto m = skew_from_upper(z2, 2, {{1, 2, z2.one()}});
    EXPECT_TRUE(z2.is_zero(m.entry(1, 1)));
    EXPECT_EQ(m.entry(2, 1), z2.one());
}

TEST(DeleteRowsCols, KeepsSurvivorsInOrder) {
    const auto a = instance4();
    const auto d12 = delete_rows_cols(a, 1, 2);
    ASSERT_EQ(d12.size(), 2u);
    EXPECT_EQ(pfaffian(d12), 5);  // a34
    EXPECT_EQ(pfaffian(delete_rows_cols(a, 1, 4)), 4);  // a23
    EXPECT_EQ(delete_rows_cols(a, 4, 1), delete_rows_cols(a, 1, 4));
}

TEST(DeleteRowsCols, DownToEmpty) {
    const auto m = skew_from_upper(zz, 2, {{1, 2, 9}});
    const auto e = delete_rows_cols(m, 1, 2);
    EXPECT_EQ(e.size(), 0u);
    EXPECT_EQ(pfaffian(e), 1);
}

TEST(DeleteRowsCols, Errors) {
    const auto a = instance4();
    EXPECT_THROW(delete_rows_cols(a, 2, 2), IndexError);
    EXPECT_THROW(delete_rows_cols(a, 1, 5), IndexError);
}

TEST(Pfaffian, Generic4x4) {
    const auto r = entry_ring(4);
    const auto expected = parse(r, "a1_2*a3_4 - a1_3*a2_4 + a1_4*a2_3");
    EXPECT_EQ(pfaffian(generic_skew(r, 4)), expected);
}

TEST(Pfaffian, IntegerInstance) { EXPECT_EQ(pfaffian(instance4()), -7); }

TEST(Pfaffian, BlockDiagonal) {
    const SymRing r(IntegerRing{}, {"a", "b"});
    const auto m = skew_from_upper(r, 4, {{1, 2, r.variable("a")}, {3, 4, r.variable("b")}});
    EXPECT_EQ(pfaffian(m), parse(r, "a*b"));
}

TEST(Pfaffian, Generic6x6HasFifteenMatchings) {
    const auto r = entry_ring(6);
    const auto pf = pfaffian(generic_skew(r, 6));
    EXPECT_EQ(pf.size(), 15u);
    for (const auto& [m, c] : pf.terms()) {
        EXPECT_EQ(m.degree(), 3u);
        EXPECT_TRUE(c == 1 || c == -1);
    }
}

TEST(Pfaffian, MatchesNaiveRecursionSymbolically) {
    for (std::size_t n : {2, 4, 6, 8}) {
        const auto r = entry_ring(n);
        const auto a = generic_skew(r, n);
        EXPECT_EQ(pfaffian(a), test::naive_pfaffian(a)) << "size " << n;
    }
}

TEST(Determinant, Identity) {
    EXPECT_EQ(determinant(SquareMatrix<IntegerRing>::identity(zz, 5)), 1);
    EXPECT_EQ(determinant(SquareMatrix<IntegerRing>(zz, 0)), 1);
}

TEST(Determinant, TwoByTwoSkew) {
    const SymRing r(IntegerRing{}, {"a"});
    const auto m = skew_from_upper(r, 2, {{1, 2, r.variable("a")}});
    EXPECT_EQ(determinant(m), parse(r, "a^2"));
}

TEST(Determinant, KnownValue) {
    SquareMatrix<IntegerRing> m(zz, 3);
    const int v[3][3] = {{2, -1, 0}, {1, 3, 4}, {0, 5, -2}};
    for (std::size_t i = 1; i <= 3; ++i)
        for (std::size_t j = 1; j <= 3; ++j) m.set(i, j, v[i - 1][j - 1]);
    // 2*(3*-2 - 4*5) - (-1)*(1*-2 - 0) + 0 = -52 - 2
    EXPECT_EQ(determinant(m), -54);
}

TEST(Determinant, Generic6x6SkewIsPfaffianSquared) {
    const auto r = entry_ring(6);
    const auto a = generic_skew(r, 6);
    const auto pf = pfaffian(a);
    EXPECT_EQ(determinant(a), r.mul(pf, pf));
}

TEST(Congruence, IdentityLeavesMatrixUnchanged) {
    const auto a = instance4();
    EXPECT_EQ(congruence(SquareMatrix<IntegerRing>::identity(zz, 4), a), a);
}

TEST(Congruence, DiagonalScalingOfFirstIndex) {
    const SymRing r(IntegerRing{}, {"c"});
    const auto c = r.variable("c");
    SkewMatrix<SymRing> a(r, 4);
    const int vals[6] = {2, 3, 1, 4, 7, 5};
    int k = 0;
    for (std::size_t i = 1; i <= 4; ++i)
        for (std::size_t j = i + 1; j <= 4; ++j) a.set(i, j, r.from_int(vals[k++]));
    auto x = SquareMatrix<SymRing>::identity(r, 4);
    x.set(1, 1, c);
    const auto b = congruence(x, a);
    for (std::size_t j = 2; j <= 4; ++j) EXPECT_EQ(b.upper(1, j), r.mul(c, a.upper(1, j)));
    EXPECT_EQ(b.upper(2, 3), a.upper(2, 3));
    EXPECT_EQ(pfaffian(b), r.mul(c, pfaffian(a)));
    EXPECT_EQ(determinant(x), c);
}

TEST(Congruence, SizeMismatch) {
    EXPECT_THROW(congruence(SquareMatrix<IntegerRing>::identity(zz, 2), instance4()), ShapeError);
}

template <CommutativeRing R>
void det_is_pf_squared(const R& ring, std::uint64_t seed) {
    Rng rng(seed);
    for (std::size_t n : {2, 4, 6, 8, 10})
        for (int t = 0; t < 50; ++t) {
            const auto a = random_skew(ring, n, rng);
            const auto pf = pfaffian(a);
            ASSERT_TRUE(ring.eq(determinant(a), ring.mul(pf, pf))) << ring.describe() << " size " << n;
        }
}

TEST(Properties, DetIsPfSquaredIntegers) { det_is_pf_squared(IntegerRing{}, 1); }
TEST(Properties, DetIsPfSquaredRationals) { det_is_pf_squared(RationalRing{}, 2); }
TEST(Properties, DetIsPfSquaredModSix) { det_is_pf_squared(ModularRing(6), 3); }

TEST(Properties, CongruenceCovariance) {
    Rng rng(4);
    for (std::size_t n : {4, 6})
        for (int t = 0; t < 50; ++t) {
            const auto a = random_skew(zz, n, rng);
            const auto x = random_square(zz, n, rng);
            ASSERT_EQ(pfaffian(congruence(x, a)), determinant(x) * pfaffian(a));
        }
}

TEST(Properties, CongruenceCovarianceModSix) {
    Rng rng(5);
    ModularRing z6(6);
    for (int t = 0; t < 50; ++t) {
        const auto a = random_skew(z6, 6, rng);
        const auto x = random_square(z6, 6, rng);
        ASSERT_TRUE(z6.eq(pfaffian(congruence(x, a)), z6.mul(determinant(x), pfaffian(a))));
    }
}

TEST(Properties, Scaling) {
    Rng rng(6);
    for (std::size_t n : {2, 4, 6, 8})
        for (int t = 0; t < 30; ++t) {
            const auto a = random_skew(zz, n, rng);
            const Integer c = random_element(zz, rng);
            EXPECT_EQ(pfaffian(scaled(a, c)), pow(zz, c, static_cast<unsigned>(n / 2)) * pfaffian(a));
        }
}

TEST(Properties, ZeroRowGivesZero) {
    Rng rng(7);
    for (std::size_t n : {2, 4, 6, 8}) {
        for (std::size_t row = 1; row <= n; ++row) {
            auto a = random_skew(zz, n, rng);
            for (std::size_t k = 1; k <= n; ++k)
                if (k < row)
                    a.set(k, row, 0);
                else if (k > row)
                    a.set(row, k, 0);
            EXPECT_EQ(pfaffian(a), 0);
        }
    }
}

TEST(Properties, MemoizedMatchesNaive) {
    Rng rng(8);
    RationalRing qq;
    for (std::size_t n : {2, 4, 6, 8})
        for (int t = 0; t < 20; ++t) {
            const auto a = random_skew(zz, n, rng);
            EXPECT_EQ(pfaffian(a), test::naive_pfaffian(a));
            const auto b = random_skew(qq, n, rng);
            EXPECT_EQ(pfaffian(b), test::naive_pfaffian(b));
        }
}
