#include <gtest/gtest.h>

#include "lensfr/modring.hpp"
#include "oracle.hpp"

using namespace lensfr;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected lensfr::Error";
    return ErrorKind::UnsupportedSize;
}

}  // namespace

TEST(Normalize, Examples) {
    EXPECT_EQ(normalize(7, 5), Residue(2, Modulus(5)));
    EXPECT_EQ(normalize(-1, 5).value(), 4);
    EXPECT_EQ(normalize(0, 9).value(), 0);
    EXPECT_EQ(normalize(-14, 7).value(), 0);
    EXPECT_EQ(normalize(INT64_MIN, 3).value(), oracle::mod(INT64_MIN % 3, 3));
}

TEST(Normalize, RejectsSmallModulus) {
    EXPECT_EQ(kind_of([] { normalize(3, 1); }), ErrorKind::InvalidModulus);
    EXPECT_EQ(kind_of([] { normalize(3, 0); }), ErrorKind::InvalidModulus);
    EXPECT_EQ(kind_of([] { normalize(3, -5); }), ErrorKind::InvalidModulus);
}

TEST(ResidueArithmetic, MismatchedModuliThrow) {
    const Residue a(1, Modulus(5)), b(1, Modulus(7));
    EXPECT_EQ(kind_of([&] { (void)(a + b); }), ErrorKind::ModulusMismatch);
}

TEST(ResidueArithmetic, Pow) {
    const Modulus m(7);
    EXPECT_EQ(Residue(2, m).pow(3).value(), 1);
    EXPECT_EQ(Residue(3, m).pow(6).value(), 1);
    EXPECT_EQ(Residue(5, m).pow(0).value(), 1);
}

TEST(ModInverse, Examples) {
    EXPECT_EQ(mod_inverse(Residue(2, Modulus(5))).value(), 3);
    EXPECT_EQ(mod_inverse(Residue(1, Modulus(11))).value(), 1);
    EXPECT_EQ(oracle::inverse(3, 7), 5);
    EXPECT_EQ(mod_inverse(Residue(3, Modulus(7))).value(), 5);
}

TEST(ModInverse, NonUnitThrows) {
    EXPECT_EQ(kind_of([] { mod_inverse(Residue(6, Modulus(9))); }), ErrorKind::NotAUnit);
    EXPECT_EQ(kind_of([] { mod_inverse(Residue(0, Modulus(5))); }), ErrorKind::NotAUnit);
}

TEST(ModInverse, AgreesWithScanAndIsInvolution) {
    for (int64_t m = 2; m <= 300; ++m) {
        const Modulus mod(m);
        for (int64_t u : oracle::units(m)) {
            const Residue r(u, mod);
            const Residue s = mod_inverse(r);
            ASSERT_EQ(s.value(), oracle::inverse(u, m)) << u << " mod " << m;
            ASSERT_EQ((r * s).value(), 1);
            ASSERT_EQ(mod_inverse(s), r);
        }
    }
}

TEST(OddRepresentative, Examples) {
    EXPECT_EQ(odd_representative(Residue(3, Modulus(7))), 3);
    EXPECT_EQ(odd_representative(Residue(2, Modulus(5))), 7);
    EXPECT_EQ(odd_representative(Residue(4, Modulus(5))), 9);
    EXPECT_EQ(odd_representative(Residue(0, Modulus(3))), 3);
}

TEST(OddRepresentative, EvenModulusRejected) {
    EXPECT_EQ(kind_of([] { odd_representative(Residue(1, Modulus(4))); }),
              ErrorKind::OddModulusRequired);
}

TEST(OddRepresentative, Properties) {
    for (int64_t m = 3; m <= 301; m += 2) {
        for (int64_t v = 0; v < m; ++v) {
            const int64_t a = odd_representative(Residue(v, Modulus(m)));
            ASSERT_EQ(a % 2, 1);
            ASSERT_EQ(a % m, v);
            ASSERT_GE(a, 0);
            ASSERT_LT(a, 2 * m);
        }
    }
}

TEST(IsSquareUnit, Examples) {
    EXPECT_TRUE(is_square_unit(Residue(4, Modulus(5))));
    EXPECT_EQ(oracle::squares(7), (std::set<int64_t>{1, 2, 4}));
    EXPECT_TRUE(is_square_unit(Residue(2, Modulus(7))));
    EXPECT_EQ(oracle::squares(5), (std::set<int64_t>{1, 4}));
    EXPECT_FALSE(is_square_unit(Residue(2, Modulus(5))));
}

TEST(IsSquareUnit, NonUnitThrows) {
    EXPECT_EQ(kind_of([] { is_square_unit(Residue(3, Modulus(9))); }), ErrorKind::NotAUnit);
}

TEST(IsSquareUnit, EulerCriterionAndMultiplicativityForPrimes) {
    for (int64_t p = 3; p <= 400; p += 2) {
        if (!oracle::prime(p)) continue;
        const Modulus m(p);
        for (int64_t r : oracle::units(p)) {
            const bool sq = is_square_unit(Residue(r, m));
            ASSERT_EQ(sq, euler_criterion(Residue(r, m))) << r << " mod " << p;
            for (int64_t s = 1; s < p; s += 7) {
                const bool prod = is_square_unit(Residue(r * s, m));
                ASSERT_EQ(prod, sq == is_square_unit(Residue(s, m)));
            }
        }
    }
}

TEST(IsSquareUnit, CompositeModuliMatchBruteForce) {
    for (int64_t m = 2; m <= 120; ++m) {
        const auto sq = oracle::squares(m);
        for (int64_t r : oracle::units(m)) {
            ASSERT_EQ(is_square_unit(Residue(r, Modulus(m))), sq.count(r) == 1) << r << " mod " << m;
        }
    }
}

TEST(IsPrime, Examples) {
    EXPECT_TRUE(is_prime(5));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(91));
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(997));
    EXPECT_TRUE(is_prime(1'000'000'007));
    EXPECT_FALSE(is_prime(1'000'000'007LL * 3));
    EXPECT_TRUE(is_prime(2'147'483'647));
}

TEST(IsPrime, AgreesWithTrialByAllDivisors) {
    for (int64_t n = 1; n <= 3000; ++n) ASSERT_EQ(is_prime(n), oracle::prime(n)) << n;
}
