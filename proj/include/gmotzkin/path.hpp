#ifndef GMOTZKIN_PATH_HPP
#define GMOTZKIN_PATH_HPP

// G-Motzkin paths: first-quadrant lattice paths from (0,0) to (n,0) with
// steps u=(1,1), d=(1,-1), h=(1,0), v=(0,-1). A path is stored as its step
// word over the letters u, d, h, v.

#include <cstddef>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "gmotzkin/polyring.hpp"

namespace gmotzkin {

enum class Step : char { Up = 'u', Down = 'd', Horizontal = 'h', Vertical = 'v' };

constexpr int height_change(Step s)
{
    return s == Step::Up ? 1 : (s == Step::Horizontal ? 0 : -1);
}
constexpr bool advances_x(Step s) { return s != Step::Vertical; }

// Invalid path word. index() is the offending step position.
class PathError : public std::invalid_argument {
public:
    PathError(const std::string& what, std::size_t index) : std::invalid_argument(what), index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

// Step generation order u < d < h < v as a rank.
constexpr int step_rank(char c)
{
    switch (c) {
        case 'u': return 0;
        case 'd': return 1;
        case 'h': return 2;
        case 'v': return 3;
        default: return 4;
    }
}

// Lexicographic comparison of step words under u < d < h < v.
bool step_order_less(std::string_view lhs, std::string_view rhs);

// Word-level helpers used by the enumeration and bijection kernels. They
// assume well-formed words unless stated otherwise.
namespace word {

int step_delta(char c);
// True iff w, read from height 0, never goes negative and ends at height 0.
bool is_valid(std::string_view w);
// Nonempty, starts with u and touches height 0 only at its last step.
bool is_primitive(std::string_view w);
bool contains(std::string_view w, std::string_view pattern);
bool ends_with(std::string_view w, std::string_view suffix);
bool starts_with(std::string_view w, std::string_view prefix);
bool has_h_on_axis(std::string_view w);
// Number of x-advancing steps.
std::size_t x_length(std::string_view w);
std::size_t count(std::string_view w, char step);
// Shortest nonempty prefix ending at height 0: "h" or the first primitive component.
std::size_t first_return_length(std::string_view w);
std::string repeat(char c, std::size_t k);

}  // namespace word

class Path {
public:
    Path() = default;

    // Whitespace is ignored. Throws PathError on an illegal character, a
    // negative height or a nonzero final height.
    static Path parse(std::string_view text);

    const std::string& word() const { return word_; }
    bool empty() const { return word_.empty(); }
    // x-extent: number of u, d and h steps.
    std::size_t length() const { return word::x_length(word_); }
    std::size_t step_count() const { return word_.size(); }
    std::size_t count(Step s) const { return word::count(word_, static_cast<char>(s)); }
    Step step(std::size_t i) const { return static_cast<Step>(word_.at(i)); }

    friend bool operator==(const Path&, const Path&) = default;
    // Generation order (u < d < h < v).
    friend bool operator<(const Path& lhs, const Path& rhs) { return step_order_less(lhs.word_, rhs.word_); }

private:
    explicit Path(std::string w) : word_(std::move(w)) {}
    friend Path path_from_valid_word(std::string w);

    std::string word_;
};

// For words already known to be valid (generation and bijection kernels).
Path path_from_valid_word(std::string w);

Path parse_path(std::string_view text);

// h -> a, v -> b, d -> c; u-steps weigh 1.
Monomial weight_monomial(const Path& p);
Monomial weight_monomial(std::string_view w);

// Pattern: a nonempty step word matched as a contiguous block.
class Pattern {
public:
    // Throws PathError on an empty word or a character outside {u,d,h,v}.
    static Pattern parse(std::string_view text);
    const std::string& word() const { return word_; }
    friend bool operator==(const Pattern&, const Pattern&) = default;

private:
    explicit Pattern(std::string w) : word_(std::move(w)) {}
    std::string word_;
};

bool contains_pattern(const Path& p, const Pattern& t);
bool has_h_on_axis(const Path& p);
bool is_primitive(const Path& p);
bool ends_with(const Path& p, std::string_view suffix);

struct FirstReturn {
    std::string prefix;
    Path rest;
};
// Requires a nonempty path.
FirstReturn first_return_split(const Path& p);

struct Strip {
    std::size_t depth = 0;
    Path core;
};
// Largest i with p = u^i core v^i and core a nonempty valid path.
// Throws std::domain_error when p is not primitive.
Strip max_elevation_strip(const Path& p);
// Largest j with p = u^j core d^j and core a valid (possibly empty) path.
// Throws std::domain_error when p is not primitive.
Strip max_ud_strip(const Path& p);

namespace word {
std::pair<std::size_t, std::string_view> elevation_strip(std::string_view primitive);
std::pair<std::size_t, std::string_view> ud_strip(std::string_view primitive);
}  // namespace word

// Case record for the forward map on uvv-avoiding paths.
//
//   Base   Q in {e, h, uv}                    inner = Q
//   Case1  Q = h Q'
//   Case2  Q = uv h Q'
//   Case3  Q = uv Q'' Q'                      Q'' primitive
//   Case4  Q = u^i ud v^i Q'
//   Case5  Q = u^i u Q'' d v^i Q'             Q'' nonempty
//   Case6  Q = u^i Q'' v^i Q'                 i >= 1, Q'' not primitive
//
// rest holds Q'; elevation holds i.
enum class ForwardCase { Base, Case1, Case2, Case3, Case4, Case5, Case6 };

struct ForwardDecomposition {
    ForwardCase kind = ForwardCase::Base;
    std::size_t elevation = 0;
    std::string inner;
    std::string rest;
};

// Shape of the inner part in the inverse cases III-V.
//   EndsUuvv  inner = stem uuvv
//   EndsUv    inner = stem uv
//   Empty     inner = e
//   Other     none of the above
enum class InnerShape { None, Empty, EndsUuvv, EndsUv, Other };

// Case record for the inverse map on uvu-avoiding paths.
//
//   BaseInv  P in {e, h, uv}                  inner = P
//   CaseI    P = h P'
//   CaseII   P = uv h P'
//   CaseIII  P = u P'' v P'                   P'' nonempty
//   CaseIV   P = u^j P'' d^j P'               j >= 1 maximal
//   CaseV    P = u^j u P'' v d^j P'           j >= 1 maximal, u P'' v primitive
//
// rest holds P'; elevation holds j. For CaseIII the EndsUv shape needs a
// nonempty stem (P'' = uv is Other).
enum class InverseCase { BaseInv, CaseI, CaseII, CaseIII, CaseIV, CaseV };

struct InverseDecomposition {
    InverseCase kind = InverseCase::BaseInv;
    std::size_t elevation = 0;
    std::string inner;
    InnerShape shape = InnerShape::None;
    std::string stem;
    std::string rest;
};

ForwardDecomposition decompose_forward(const Path& q);
ForwardDecomposition decompose_forward_word(std::string_view q);
InverseDecomposition decompose_inverse(const Path& p);
InverseDecomposition decompose_inverse_word(std::string_view p);

std::string reassemble(const ForwardDecomposition& d);
std::string reassemble(const InverseDecomposition& d);

const char* to_string(ForwardCase c);
const char* to_string(InverseCase c);

}  // namespace gmotzkin

#endif  // GMOTZKIN_PATH_HPP
