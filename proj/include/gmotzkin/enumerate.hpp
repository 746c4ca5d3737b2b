#ifndef GMOTZKIN_ENUMERATE_HPP
#define GMOTZKIN_ENUMERATE_HPP

// Exhaustive generation of G-Motzkin paths of a given length, optionally
// restricted by avoided patterns and by forbidding h-steps on the x-axis.
// This is the ground truth the formulas, series and bijection are checked
// against, so it stays a plain depth-first search.

#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

#include "gmotzkin/path.hpp"
#include "gmotzkin/polyring.hpp"

namespace gmotzkin {

struct Constraints {
    std::vector<Pattern> avoid;
    bool forbid_h_on_axis = false;

    static Constraints none() { return {}; }
    static Constraints avoiding(std::string_view pattern);

    // Pure predicate on a path; generation with constraints equals filtering.
    bool admits(std::string_view w) const;
};

// Return false to stop the enumeration early.
using WordVisitor = std::function<bool(std::string_view)>;

// Visits every valid word of x-length n admitted by c, once each, in
// lexicographic order with u < d < h < v. Returns the number visited.
std::size_t for_each_path(std::size_t n, const Constraints& c, const WordVisitor& visit);

std::vector<Path> generate(std::size_t n, const Constraints& c);

// Sum of weight monomials over the class.
Polynomial weight_sum(std::size_t n, const Constraints& c);

// Signed sum of evaluated weights (negative weights allowed).
Integer class_count(std::size_t n, const Constraints& c, const Integer& va, const Integer& vb, const Integer& vc);

// Number of paths in the class.
std::size_t class_size(std::size_t n, const Constraints& c);

}  // namespace gmotzkin

#endif  // GMOTZKIN_ENUMERATE_HPP
