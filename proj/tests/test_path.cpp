#include <gtest/gtest.h>

#include "gmotzkin/enumerate.hpp"
#include "gmotzkin/path.hpp"
#include "gmotzkin/verify.hpp"

using namespace gmotzkin;

TEST(Parse, AcceptsAndStripsWhitespace)
{
    const Path p = Path::parse(" u d\n");
    EXPECT_EQ(p.word(), "ud");
    EXPECT_EQ(p.length(), 2u);
}

TEST(Parse, EmptyIsTheEmptyPath)
{
    EXPECT_TRUE(Path::parse("").empty());
}

TEST(Parse, NegativeHeightReportsIndex)
{
    try {
        Path::parse("uvv");
        FAIL() << "expected PathError";
    } catch (const PathError& e) {
        EXPECT_EQ(e.index(), 2u);
        EXPECT_NE(std::string(e.what()).find("height -1"), std::string::npos);
    }
}

TEST(Parse, IllegalCharacterReportsIndex)
{
    try {
        Path::parse("uxd");
        FAIL() << "expected PathError";
    } catch (const PathError& e) {
        EXPECT_EQ(e.index(), 1u);
    }
}

TEST(Parse, NonzeroEndRejected)
{
    EXPECT_THROW(Path::parse("uu"), PathError);
    EXPECT_THROW(Path::parse("U"), PathError);
}

TEST(Parse, IntroFigurePath)
{
    const Path p = Path::parse(kIntroFigureWord);
    EXPECT_EQ(p.length(), 25u);
    EXPECT_EQ(p.count(Step::Vertical), 4u);
    EXPECT_FALSE(contains_pattern(p, Pattern::parse("uvv")));
    EXPECT_TRUE(contains_pattern(p, Pattern::parse("uvu")));
}

TEST(Weight, MonomialCountsSteps)
{
    const Monomial m = weight_monomial(Path::parse("uhvud"));
    EXPECT_EQ(m, (Monomial{1, 1, 1}));
    EXPECT_EQ(weight_monomial(Path()), Monomial{});
}

TEST(Primitive, Definition)
{
    EXPECT_TRUE(is_primitive(Path::parse("uv")));
    EXPECT_TRUE(is_primitive(Path::parse("ud")));
    EXPECT_FALSE(is_primitive(Path::parse("h")));
    EXPECT_FALSE(is_primitive(Path::parse("uvuv")));
    EXPECT_FALSE(is_primitive(Path()));
}

TEST(FirstReturn, Examples)
{
    auto fr = first_return_split(Path::parse("uvhh"));
    EXPECT_EQ(fr.prefix, "uv");
    EXPECT_EQ(fr.rest.word(), "hh");
    fr = first_return_split(Path::parse("hud"));
    EXPECT_EQ(fr.prefix, "h");
    EXPECT_EQ(fr.rest.word(), "ud");
    fr = first_return_split(Path::parse("uudvud"));
    EXPECT_EQ(fr.prefix, "uudv");
    EXPECT_EQ(fr.rest.word(), "ud");
}

TEST(Strip, Elevation)
{
    auto s = max_elevation_strip(Path::parse("uudv"));
    EXPECT_EQ(s.depth, 1u);
    EXPECT_EQ(s.core.word(), "ud");
    s = max_elevation_strip(Path::parse("uuvuudvv"));
    EXPECT_EQ(s.depth, 1u);
    EXPECT_EQ(s.core.word(), "uvuudv");
    s = max_elevation_strip(Path::parse("uv"));
    EXPECT_EQ(s.depth, 0u);
    EXPECT_EQ(s.core.word(), "uv");
    EXPECT_THROW(max_elevation_strip(Path::parse("hh")), std::domain_error);
}

TEST(Strip, UpDown)
{
    auto s = max_ud_strip(Path::parse("uuvd"));
    EXPECT_EQ(s.depth, 1u);
    EXPECT_EQ(s.core.word(), "uv");
    s = max_ud_strip(Path::parse("ud"));
    EXPECT_EQ(s.depth, 1u);
    EXPECT_TRUE(s.core.empty());
    s = max_ud_strip(Path::parse("uhv"));
    EXPECT_EQ(s.depth, 0u);
    EXPECT_EQ(s.core.word(), "uhv");
}

TEST(EndsWith, Examples)
{
    EXPECT_TRUE(ends_with(Path::parse("huv"), "uv"));
    EXPECT_TRUE(ends_with(Path::parse("uuvv"), "uuvv"));
    EXPECT_FALSE(ends_with(Path::parse("ud"), "uv"));
}

TEST(Pattern, Validation)
{
    EXPECT_THROW(Pattern::parse(""), PathError);
    EXPECT_THROW(Pattern::parse("uxv"), PathError);
    EXPECT_EQ(Pattern::parse("uvv").word(), "uvv");
}

TEST(DecomposeForward, Examples)
{
    auto d = decompose_forward(Path::parse("uvh"));
    EXPECT_EQ(d.kind, ForwardCase::Case2);
    EXPECT_TRUE(d.rest.empty());

    d = decompose_forward(Path::parse("uudv"));
    EXPECT_EQ(d.kind, ForwardCase::Case4);
    EXPECT_EQ(d.elevation, 1u);
    EXPECT_TRUE(d.rest.empty());

    d = decompose_forward(Path::parse("uhv"));
    EXPECT_EQ(d.kind, ForwardCase::Case6);
    EXPECT_EQ(d.elevation, 1u);
    EXPECT_EQ(d.inner, "h");
}

TEST(DecomposeForward, RejectsUvv)
{
    EXPECT_THROW(decompose_forward(Path::parse("uuvvud")), std::domain_error);
    EXPECT_THROW(decompose_forward_word("huuvv"), std::domain_error);
}

TEST(DecomposeInverse, Examples)
{
    auto d = decompose_inverse(Path::parse("uudv"));
    EXPECT_EQ(d.kind, InverseCase::CaseIII);
    EXPECT_EQ(d.inner, "ud");

    d = decompose_inverse(Path::parse("uuvd"));
    EXPECT_EQ(d.kind, InverseCase::CaseIV);
    EXPECT_EQ(d.elevation, 1u);
    EXPECT_EQ(d.inner, "uv");
    EXPECT_EQ(d.shape, InnerShape::EndsUv);
    EXPECT_TRUE(d.stem.empty());

    d = decompose_inverse(Path::parse("huv"));
    EXPECT_EQ(d.kind, InverseCase::CaseI);
    EXPECT_EQ(d.rest, "uv");
}

TEST(DecomposeInverse, RejectsUvu)
{
    EXPECT_THROW(decompose_inverse_word("uvuv"), std::domain_error);
}

TEST(PathProperty, BalanceAndLength)
{
    for (std::size_t n = 0; n <= 6; ++n)
        for (const Path& p : generate(n, Constraints::none())) {
            ASSERT_EQ(p.length(), p.count(Step::Up) + p.count(Step::Down) + p.count(Step::Horizontal));
            ASSERT_EQ(p.count(Step::Up), p.count(Step::Down) + p.count(Step::Vertical));
            ASSERT_EQ(Path::parse(p.word()), p);
        }
}

TEST(PathProperty, FirstReturnPrefixIsPrimitiveOrH)
{
    for (std::size_t n = 1; n <= 6; ++n)
        for (const Path& p : generate(n, Constraints::none())) {
            const FirstReturn fr = first_return_split(p);
            ASSERT_TRUE(fr.prefix == "h" || word::is_primitive(fr.prefix)) << p.word();
            ASSERT_EQ(fr.prefix + fr.rest.word(), p.word());
        }
}

TEST(PathProperty, StripsAreMaximal)
{
    for (std::size_t n = 1; n <= 6; ++n)
        for (const Path& p : generate(n, Constraints::none())) {
            if (!is_primitive(p))
                continue;
            const Strip e = max_elevation_strip(p);
            const std::string& core = e.core.word();
            ASSERT_EQ(std::string(e.depth, 'u') + core + std::string(e.depth, 'v'), p.word());
            const bool more = core.size() > 2 && core.front() == 'u' && core.back() == 'v' &&
                              word::is_valid(core.substr(1, core.size() - 2));
            ASSERT_FALSE(more) << p.word();

            const Strip s = max_ud_strip(p);
            const std::string& k = s.core.word();
            ASSERT_EQ(std::string(s.depth, 'u') + k + std::string(s.depth, 'd'), p.word());
            const bool more_ud =
                k.size() >= 2 && k.front() == 'u' && k.back() == 'd' && word::is_valid(k.substr(1, k.size() - 2));
            ASSERT_FALSE(more_ud) << p.word();
        }
}

TEST(PathProperty, DecompositionsReassemble)
{
    for (std::size_t n = 0; n <= 7; ++n) {
        for (const Path& q : generate(n, Constraints::avoiding("uvv")))
            ASSERT_EQ(reassemble(decompose_forward(q)), q.word());
        for (const Path& p : generate(n, Constraints::avoiding("uvu")))
            ASSERT_EQ(reassemble(decompose_inverse(p)), p.word());
    }
}

TEST(PathProperty, GenerationOrderIsStepOrder)
{
    EXPECT_TRUE(Path::parse("ud") < Path::parse("uhv"));
    EXPECT_TRUE(Path::parse("uhv") < Path::parse("uvh"));
    EXPECT_FALSE(Path::parse("h") < Path::parse("h"));
}
