#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "gmotzkin/enumerate.hpp"
#include "gmotzkin/formulas.hpp"

using namespace gmotzkin;

namespace {

std::vector<std::string> words(std::size_t n, const Constraints& c)
{
    std::vector<std::string> out;
    for_each_path(n, c, [&](std::string_view w) {
        out.emplace_back(w);
        return true;
    });
    return out;
}

// Unconstrained generation followed by the predicate.
std::vector<std::string> filtered(std::size_t n, const Constraints& c)
{
    std::vector<std::string> out;
    for (auto& w : words(n, Constraints::none()))
        if (c.admits(w))
            out.push_back(w);
    return out;
}

const Polynomial a = Polynomial::a();
const Polynomial b = Polynomial::b();
const Polynomial c = Polynomial::c();

Constraints gbar()
{
    Constraints k = Constraints::avoiding("uvv");
    k.forbid_h_on_axis = true;
    return k;
}

}  // namespace

TEST(Generate, SmallCases)
{
    EXPECT_EQ(words(0, Constraints::none()), std::vector<std::string>{""});
    EXPECT_EQ(words(1, Constraints::none()), (std::vector<std::string>{"uv", "h"}));
    auto w2 = words(2, Constraints::avoiding("uvv"));
    std::set<std::string> got(w2.begin(), w2.end());
    EXPECT_EQ(got, (std::set<std::string>{"hh", "huv", "uvh", "uvuv", "ud", "uhv"}));
    EXPECT_EQ(w2.size(), 6u);
}

TEST(Generate, EarlyStop)
{
    std::size_t seen = 0;
    for_each_path(6, Constraints::none(), [&](std::string_view) { return ++seen < 5; });
    EXPECT_EQ(seen, 5u);
}

TEST(Generate, PathsWrapWords)
{
    const auto paths = generate(3, Constraints::avoiding("uvu"));
    const auto ws = words(3, Constraints::avoiding("uvu"));
    ASSERT_EQ(paths.size(), ws.size());
    for (std::size_t i = 0; i < ws.size(); ++i)
        EXPECT_EQ(paths[i].word(), ws[i]);
}

TEST(WeightSum, Examples)
{
    EXPECT_EQ(weight_sum(2, Constraints::none()), a * a + Integer(3) * a * b + Integer(2) * b * b + c);
    EXPECT_EQ(weight_sum(2, Constraints::avoiding("uvv")), a * a + Integer(3) * a * b + b * b + c);
    Constraints k = Constraints::avoiding("uvv");
    k.forbid_h_on_axis = true;
    EXPECT_EQ(weight_sum(1, k), b);
    EXPECT_EQ(weight_sum(0, Constraints::none()), Polynomial(1));
}

TEST(ClassCount, Specializations)
{
    const Constraints k = Constraints::avoiding("uvv");
    EXPECT_EQ(class_count(2, k, 1, 1, 1), 6);
    EXPECT_EQ(class_count(2, k, 0, 1, 1), 2);
    EXPECT_EQ(class_count(2, k, 1, 0, 1), 2);
    EXPECT_EQ(class_count(2, k, -3, 4, 16), 5);
}

TEST(EnumerateProperty, ConstraintsEqualFiltering)
{
    const std::vector<Constraints> cases{Constraints::avoiding("uvv"), Constraints::avoiding("uvu"), gbar(),
                                         Constraints::avoiding("hh"), Constraints::avoiding("ud")};
    for (const auto& k : cases)
        for (std::size_t n = 0; n <= 6; ++n)
            ASSERT_EQ(words(n, k), filtered(n, k)) << "n=" << n;
}

TEST(EnumerateProperty, MultiplePatterns)
{
    Constraints k = Constraints::avoiding("uvv");
    k.avoid.push_back(Pattern::parse("uvu"));
    for (std::size_t n = 0; n <= 6; ++n)
        ASSERT_EQ(words(n, k), filtered(n, k));
}

TEST(EnumerateProperty, SortedAndDuplicateFree)
{
    for (std::size_t n = 0; n <= 6; ++n) {
        const auto ws = words(n, Constraints::none());
        for (std::size_t i = 0; i + 1 < ws.size(); ++i)
            ASSERT_TRUE(step_order_less(ws[i], ws[i + 1])) << ws[i] << " " << ws[i + 1];
    }
}

TEST(EnumerateProperty, EveryWordValidWithLength)
{
    for (std::size_t n = 0; n <= 6; ++n)
        for (const auto& w : words(n, Constraints::none())) {
            ASSERT_TRUE(word::is_valid(w));
            ASSERT_EQ(word::x_length(w), n);
        }
}

TEST(EnumerateProperty, ClassCountIsEvaluatedWeightSum)
{
    for (std::size_t n = 0; n <= 7; ++n) {
        const Polynomial p = weight_sum(n, Constraints::avoiding("uvv"));
        ASSERT_EQ(class_count(n, Constraints::avoiding("uvv"), -3, 4, 16), p.eval(-3, 4, 16));
        ASSERT_EQ(class_count(n, Constraints::avoiding("uvv"), 2, -1, 5), p.eval(2, -1, 5));
        ASSERT_EQ(Integer(static_cast<unsigned long>(class_size(n, Constraints::avoiding("uvv")))), p.eval(1, 1, 1));
    }
}

TEST(EnumerateProperty, ShiftedCRecoversUnconstrained)
{
    for (std::size_t n = 0; n <= 7; ++n)
        ASSERT_EQ(poly_substitute(weight_sum(n, Constraints::avoiding("uvv")), Variable::C, b * b + c),
                  weight_sum(n, Constraints::none()))
            << "n=" << n;
}

TEST(EnumerateProperty, AvoidanceClassesAgreeAtCEqualsBSquared)
{
    for (std::size_t n = 0; n <= 9; ++n)
        ASSERT_EQ(poly_substitute(weight_sum(n, Constraints::avoiding("uvv")), Variable::C, b * b),
                  poly_substitute(weight_sum(n, Constraints::avoiding("uvu")), Variable::C, b * b))
            << "n=" << n;
}

TEST(EnumerateProperty, UvvClassSizesAreSchroeder)
{
    const long want[] = {1, 2, 6, 22, 90, 394, 1806, 8558, 41586};
    for (std::size_t n = 0; n <= 8; ++n) {
        ASSERT_EQ(class_size(n, Constraints::avoiding("uvv")), static_cast<std::size_t>(want[n]));
        ASSERT_EQ(schroder_weight(n).eval(1, 1, 0), want[n]);
    }
}
