#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "gmotzkin/bijection.hpp"
#include "gmotzkin/enumerate.hpp"
#include "gmotzkin/verify.hpp"

using namespace gmotzkin;

namespace {

std::vector<std::string> words(std::size_t n, const char* avoid)
{
    std::vector<std::string> out;
    for_each_path(n, Constraints::avoiding(avoid), [&](std::string_view w) {
        out.emplace_back(w);
        return true;
    });
    return out;
}

}  // namespace

TEST(Sigma, Examples)
{
    EXPECT_EQ(sigma_word("uudv"), "uuvd");
    EXPECT_EQ(sigma_word(""), "");
    EXPECT_EQ(sigma_word("h"), "h");
    EXPECT_EQ(sigma_word("uv"), "uv");
    EXPECT_EQ(sigma_word("uvud"), "uudv");
}

TEST(Sigma, WorkedExample)
{
    EXPECT_EQ(sigma_word(kSigmaExampleInput), kSigmaExampleOutput);
    EXPECT_EQ(sigma_inv_word(kSigmaExampleOutput), kSigmaExampleInput);
    EXPECT_EQ(Path::parse(kSigmaExampleInput).length(), 28u);
}

TEST(Sigma, RejectsPattern)
{
    EXPECT_THROW(sigma_word("uuvv"), std::domain_error);
    EXPECT_THROW(sigma_inv_word("uvuv"), std::domain_error);
    EXPECT_THROW(sigma_word("uu"), std::domain_error);
}

TEST(SigmaInv, Examples)
{
    EXPECT_EQ(sigma_inv_word("uuvd"), "uudv");
    EXPECT_EQ(sigma_inv_word("uudv"), "uvud");
    EXPECT_EQ(sigma_inv(sigma(Path::parse("uuhdvuvhh"))), Path::parse("uuhdvuvhh"));
}

TEST(FixedPoint, Examples)
{
    EXPECT_TRUE(is_fixed_point(Path::parse("uhv")));
    EXPECT_FALSE(is_fixed_point(Path::parse("uudv")));
    EXPECT_TRUE(is_fixed_point(Path::parse("hh")));
}

TEST(FixedPoint, Classify)
{
    EXPECT_EQ(classify_fixed(Path::parse("huv")), FixedPointClass::B);
    EXPECT_EQ(classify_fixed(Path::parse("ud")), FixedPointClass::C);
    EXPECT_EQ(classify_fixed(Path::parse("uvh")), FixedPointClass::A);
    EXPECT_EQ(classify_fixed(Path()), FixedPointClass::A);
    EXPECT_EQ(classify_fixed(Path::parse("h")), FixedPointClass::A);
    EXPECT_THROW(classify_fixed(Path::parse("uudv")), std::domain_error);
}

TEST(FixedPoint, LengthTwo)
{
    const FixedPointCounts f = fixed_points(2, true);
    EXPECT_EQ(f.total, 5u);
    EXPECT_EQ(f.a, 2u);
    EXPECT_EQ(f.b, 1u);
    EXPECT_EQ(f.c, 2u);
    std::vector<std::string> got;
    for (const auto& p : f.paths)
        got.push_back(p.word());
    EXPECT_EQ(got, (std::vector<std::string>{"ud", "uhv", "uvh", "huv", "hh"}));
}

TEST(FixedPoint, TableValues)
{
    EXPECT_EQ(fixed_points(0).total, 1u);
    EXPECT_EQ(fixed_points(0).a, 1u);
    EXPECT_EQ(fixed_points(5).total, 125u);
    const FixedPointCounts f5 = fixed_points(5);
    EXPECT_EQ(f5.a, 72u);
    EXPECT_EQ(f5.b, 30u);
    EXPECT_EQ(f5.c, 23u);
}

TEST(BijectionProperty, BijectiveOntoUvuAvoiding)
{
    for (std::size_t n = 0; n <= 8; ++n) {
        std::vector<std::string> images;
        for (const auto& q : words(n, "uvv"))
            images.push_back(sigma_word(q));
        std::sort(images.begin(), images.end(), step_order_less);
        ASSERT_EQ(images, words(n, "uvu")) << "n=" << n;
    }
}

TEST(BijectionProperty, RoundTrips)
{
    for (std::size_t n = 0; n <= 8; ++n) {
        for (const auto& q : words(n, "uvv"))
            ASSERT_EQ(sigma_inv_word(sigma_word(q)), q);
        for (const auto& p : words(n, "uvu"))
            ASSERT_EQ(sigma_word(sigma_inv_word(p)), p);
    }
}

TEST(BijectionProperty, WeightKeptUnderCEqualsBSquared)
{
    for (std::size_t n = 0; n <= 8; ++n)
        for (const auto& q : words(n, "uvv")) {
            const std::string s = sigma_word(q);
            ASSERT_EQ(word::count(s, 'h'), word::count(q, 'h'));
            ASSERT_EQ(word::count(s, 'v') + 2 * word::count(s, 'd'), word::count(q, 'v') + 2 * word::count(q, 'd'));
            ASSERT_EQ(word::x_length(s), n);
        }
}

TEST(BijectionProperty, PatternContract)
{
    for (std::size_t n = 0; n <= 8; ++n) {
        for (const auto& q : words(n, "uvv"))
            ASSERT_FALSE(word::contains(sigma_word(q), "uvu")) << q;
        for (const auto& p : words(n, "uvu"))
            ASSERT_FALSE(word::contains(sigma_inv_word(p), "uvv")) << p;
    }
}

TEST(BijectionProperty, StructuralFixedPointTest)
{
    for (std::size_t n = 0; n <= 9; ++n)
        for (const auto& q : words(n, "uvv"))
            ASSERT_EQ(is_fixed_by_structure(q), sigma_word(q) == q) << q;
}

TEST(BijectionProperty, ClassRecurrences)
{
    std::vector<FixedPointCounts> f;
    for (std::size_t n = 0; n <= 9; ++n)
        f.push_back(fixed_points(n));
    for (std::size_t n = 0; n <= 9; ++n)
        ASSERT_EQ(f[n].total, f[n].a + f[n].b + f[n].c);
    EXPECT_EQ(f[2].c, 2u);
    for (std::size_t n = 3; n <= 9; ++n)
        ASSERT_EQ(f[n].c, f[n - 1].a) << "n=" << n;
    for (std::size_t n = 1; n <= 9; ++n)
        ASSERT_EQ(f[n].b, f[n - 1].a + f[n - 1].c) << "n=" << n;
    const std::size_t a_init[] = {1, 1, 2, 7, 23};
    for (std::size_t n = 0; n < 5; ++n)
        EXPECT_EQ(f[n].a, a_init[n]);
}

TEST(SigmaAudit, CaseThreeAndFiveClaimsHold)
{
    SigmaAudit audit;
    for (std::size_t n = 0; n <= 8; ++n)
        for (const auto& q : words(n, "uvv"))
            sigma_word(q, &audit);
    for (Claim c : {Claim::Case3Primitive, Claim::Case5Suffix, Claim::Case6Suffix, Claim::Case6PrimitiveRule}) {
        EXPECT_GT(audit.tally(c).checked, 0u) << to_string(c);
        EXPECT_TRUE(audit.tally(c).holds()) << to_string(c) << " first at " << audit.tally(c).example_input;
    }
}

TEST(SigmaAudit, CaseSixImageCanBePrimitive)
{
    // Q = u (uvud) v: Case 6 with i = 1 and Q'' = uvud, whose image uudv is primitive.
    const auto d = decompose_forward_word("uuvudv");
    ASSERT_EQ(d.kind, ForwardCase::Case6);
    ASSERT_EQ(d.inner, "uvud");
    EXPECT_EQ(sigma_word("uvud"), "uudv");

    SigmaAudit audit;
    sigma_word("uuvudv", &audit);
    const ClaimTally& t = audit.tally(Claim::Case6NonPrimitive);
    EXPECT_EQ(t.violated, 1u);
    EXPECT_EQ(t.example_input, "uuvudv");
    EXPECT_EQ(t.example_image, "uudv");
    EXPECT_TRUE(audit.tally(Claim::Case6PrimitiveRule).holds());
}

TEST(SigmaAudit, TallyKeepsFirstViolation)
{
    SigmaAudit audit;
    audit.record(Claim::Case3Primitive, true, "x", "y");
    audit.record(Claim::Case3Primitive, false, "first", "img1");
    audit.record(Claim::Case3Primitive, false, "second", "img2");
    const ClaimTally& t = audit.tally(Claim::Case3Primitive);
    EXPECT_EQ(t.checked, 3u);
    EXPECT_EQ(t.violated, 2u);
    EXPECT_EQ(t.example_input, "first");
}
