#ifndef GMOTZKIN_SERIES_GF_HPP
#define GMOTZKIN_SERIES_GF_HPP

// Generating functions expanded as truncated power series by iterating their
// defining functional equations over the integer (a,b,c) ring. No radicals.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "gmotzkin/polyring.hpp"

namespace gmotzkin {

enum class GFKind { G, G_uvu, G_uvv, T, Gbar_uvv, C, F, A };

// Accepts the CLI names G, G_uvu, G_uvv, T, Gbar_uvv, C, F, A.
std::optional<GFKind> parse_gf_kind(std::string_view name);
const char* to_string(GFKind k);

// Coefficients 0..order of the series. Every kind has constant term 1
// except T, whose constant term is 0; both are checked.
PowerSeries expand(GFKind kind, std::size_t order);

struct SeriesReport {
    bool ok = true;
    std::size_t checked = 0;
    // Set on the first mismatch.
    std::size_t index = 0;
    Polynomial expected;
    Polynomial actual;

    std::string describe() const;
};

using CoefficientSource = std::function<Polynomial(std::size_t)>;

// Compares expand(kind, order)[n] with reference(n) for n = 0..order.
SeriesReport verify_against(GFKind kind, std::size_t order, const CoefficientSource& reference);

// Residuals of the defining equations, all truncated at x^order. Each is
// identically zero for a correct expansion.
namespace residual {

// S - 1 - a x S - (b + (c - b^2) x) x S^2 for S = G^{uvv}.
PowerSeries g_uvv(std::size_t order);
// T (1 - b T) - x (1 + a T + (c - b^2) T^2).
PowerSeries t_equation(std::size_t order);
// x Gbar (1 + a T) - T, through order + 1.
PowerSeries gbar_relation(std::size_t order);
// F - ((1 + x)^2 A - x + x^3).
PowerSeries f_from_a(std::size_t order);
// F - 1 - x - 2 x^2 F - x A F.
PowerSeries f_a_product(std::size_t order);
// x F^2 - (1 + x)(1 + x - 3x^2 - x^3) F + (1 + x)^3.
PowerSeries f_quadratic(std::size_t order);

}  // namespace residual

}  // namespace gmotzkin

#endif  // GMOTZKIN_SERIES_GF_HPP
