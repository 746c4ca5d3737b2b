#ifndef GMOTZKIN_BIJECTION_HPP
#define GMOTZKIN_BIJECTION_HPP

// The weight-preserving bijection sigma from uvv-avoiding to uvu-avoiding
// paths (with d weighted b^2), its inverse, and its fixed points.

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gmotzkin/path.hpp"

namespace gmotzkin {

// Instrumented claims about the recursive calls of sigma.
//
//   Case3Primitive       Case 3: sigma(Q'') is primitive and not uuvv
//   Case5Suffix          Case 5: sigma(Q''uv) = P1 uuvv or P2 uv, P1/P2 not ending in uv
//   Case6NonPrimitive    Case 6: sigma(Q'') is not primitive
//   Case6Suffix          Case 6: sigma(Q'') ends with neither uv nor uuvv
//   Case6PrimitiveRule   Case 6: sigma(Q'') is primitive iff Q'' = uv R with R primitive
enum class Claim { Case3Primitive, Case5Suffix, Case6NonPrimitive, Case6Suffix, Case6PrimitiveRule };
inline constexpr std::size_t kClaimCount = 5;
const char* to_string(Claim c);

struct ClaimTally {
    std::size_t checked = 0;
    std::size_t violated = 0;
    // First violation: the path whose case fired, and the recursive image.
    std::string example_input;
    std::string example_image;

    bool holds() const { return violated == 0; }
};

class SigmaAudit {
public:
    void record(Claim c, bool ok, std::string_view input, std::string_view image);
    const ClaimTally& tally(Claim c) const { return tallies_[static_cast<std::size_t>(c)]; }

private:
    std::array<ClaimTally, kClaimCount> tallies_{};
};

// Throws std::domain_error if q contains uvv. The audit, when given, sees
// every recursive call.
std::string sigma_word(std::string_view q, SigmaAudit* audit = nullptr);
// Throws std::domain_error if p contains uvu.
std::string sigma_inv_word(std::string_view p);

Path sigma(const Path& q, SigmaAudit* audit = nullptr);
Path sigma_inv(const Path& p);

bool is_fixed_point(const Path& q);

// Decides sigma(q) = q from the case decomposition alone: Base, Case 1,
// Case 2, Case 4 with i = 0, or Case 6 with i = 1 and Q'' in class A, with
// all parts fixed.
bool is_fixed_by_structure(std::string_view q);

enum class FixedPointClass { A, B, C };
const char* to_string(FixedPointClass c);

// B: ends with uv. C: primitive. A: otherwise (this includes e and h).
FixedPointClass fixed_point_class_of(std::string_view q);
// Throws std::domain_error when q is not a fixed point.
FixedPointClass classify_fixed(const Path& q);

struct FixedPointCounts {
    std::size_t total = 0;
    std::size_t a = 0;
    std::size_t b = 0;
    std::size_t c = 0;
    // Sorted in generation order; filled only on request.
    std::vector<Path> paths;
};

FixedPointCounts fixed_points(std::size_t n, bool collect = false);

}  // namespace gmotzkin

#endif  // GMOTZKIN_BIJECTION_HPP
