#include <gtest/gtest.h>

#include <random>

#include "f4skein/qring.hpp"

using namespace f4skein;

namespace {

LaurentPoly random_poly(std::mt19937& rng, int span = 4) {
    std::uniform_int_distribution<int> len(1, span), lo(-span, span), c(-3, 3);
    int n = len(rng);
    detail::Coeffs cs;
    for (int i = 0; i < n; ++i)
        cs.emplace_back(c(rng));
    return LaurentPoly(lo(rng), cs);
}

ScalarQ random_scalar(std::mt19937& rng) {
    LaurentPoly d;
    while (d.is_zero())
        d = random_poly(rng, 3);
    return ScalarQ(random_poly(rng), d);
}

} // namespace

TEST(QRing, QuantumIntegers) {
    EXPECT_EQ(qint(3), ScalarQ::parse("q^2 + 1 + q^-2"));
    EXPECT_EQ(qint(1), ScalarQ(1));
    EXPECT_EQ(qint(0), ScalarQ(0));
    EXPECT_EQ(qint(-2), -qint(2));
    EXPECT_EQ(qint(2) * (ScalarQ::q(1) - ScalarQ::q(-1)), ScalarQ::q(2) - ScalarQ::q(-2));
}

TEST(QRing, QuantumIntegerAdditionLaw) {
    for (int m = -6; m <= 6; ++m)
        for (int n = -6; n <= 6; ++n)
            EXPECT_EQ(qint(m + n), ScalarQ::q(-n) * qint(m) + ScalarQ::q(m) * qint(n));
}

TEST(QRing, SpecialValuesAtOne) {
    EXPECT_EQ(loop_value().specialize(1), 26);
    EXPECT_EQ(bigon_value().specialize(1), 7);
    EXPECT_EQ(zparam().specialize(1), 0);
    EXPECT_EQ(triangle_value().specialize(1), -3);
}

TEST(QRing, LoopAndBigonAreLaurentWithNaturalCoefficients) {
    ASSERT_TRUE(loop_value().is_laurent());
    ASSERT_TRUE(bigon_value().is_laurent());
    EXPECT_TRUE(loop_value().num().has_natural_coeffs());
    EXPECT_TRUE(bigon_value().num().has_natural_coeffs());
    EXPECT_EQ(loop_value(), loop_value().bar());
    EXPECT_EQ(loop_value().num().high(), 22);
}

TEST(QRing, CanonicalFormIsStructural) {
    ScalarQ a = ScalarQ::parse("(q^2 - 1)/(q - 1)");
    EXPECT_EQ(a, ScalarQ::parse("q + 1"));
    EXPECT_TRUE(a.is_laurent());
    ScalarQ b = ScalarQ::parse("(2*q^3)/(4*q^5 + 4*q^3)");
    EXPECT_EQ(b.den().low(), 0);
    EXPECT_EQ(b.den().coeff(0), 1);
    EXPECT_EQ(b, ScalarQ::parse("1/2 / (q^2 + 1)"));
}

TEST(QRing, PrintParseRoundTrip) {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        ScalarQ x = random_scalar(rng);
        EXPECT_EQ(ScalarQ::parse(x.to_string()), x) << x.to_string();
    }
    EXPECT_EQ(ScalarQ::parse("q^24 - q^-24").to_string(), "q^24 - q^-24");
    EXPECT_EQ(ScalarQ::parse("3/2*q - 1/3").to_string(), "3/2*q - 1/3");
}

TEST(QRing, FieldAxiomsOnRandomElements) {
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        ScalarQ a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
        if (!a.is_zero()) {
            EXPECT_EQ(a / a, ScalarQ(1));
        }
    }
}

TEST(QRing, BarIsRingInvolution) {
    std::mt19937 rng(13);
    for (int i = 0; i < 200; ++i) {
        ScalarQ a = random_scalar(rng), b = random_scalar(rng);
        EXPECT_EQ(a.bar().bar(), a);
        EXPECT_EQ((a + b).bar(), a.bar() + b.bar());
        EXPECT_EQ((a * b).bar(), a.bar() * b.bar());
    }
    EXPECT_EQ(ScalarQ::q(5).bar(), ScalarQ::q(-5));
    EXPECT_EQ(zparam().bar(), -zparam());
}

TEST(QRing, SpecializationIsHomomorphism) {
    std::mt19937 rng(17);
    mpq_class x(3, 2);
    for (int i = 0; i < 100; ++i) {
        ScalarQ a = random_scalar(rng), b = random_scalar(rng);
        try {
            mpq_class va = a.specialize(x), vb = b.specialize(x);
            EXPECT_EQ((a * b).specialize(x), va * vb);
            EXPECT_EQ((a + b).specialize(x), va + vb);
        } catch (const PoleAtPoint&) {
        }
    }
}

TEST(QRing, PoleAtPointRaised) {
    ScalarQ a = ScalarQ::parse("1/(q - 1)");
    EXPECT_THROW(a.specialize(1), PoleAtPoint);
    EXPECT_EQ(a.specialize(2), 1);
    EXPECT_THROW(ScalarQ::q(-1).specialize(0), PoleAtPoint);
    EXPECT_THROW(ScalarQ(1) / ScalarQ(0), DivisionByZero);
}

TEST(QRing, ParseErrors) {
    EXPECT_THROW(ScalarQ::parse("q^"), ParseError);
    EXPECT_THROW(ScalarQ::parse("(q+1"), ParseError);
    EXPECT_THROW(ScalarQ::parse("x"), ParseError);
    EXPECT_THROW(ScalarQ::parse(""), ParseError);
}
