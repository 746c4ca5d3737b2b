#include "gmotzkin/series_gf.hpp"

#include <array>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace gmotzkin {

namespace {

constexpr std::array<std::pair<GFKind, const char*>, 8> kNames{{
    {GFKind::G, "G"},
    {GFKind::G_uvu, "G_uvu"},
    {GFKind::G_uvv, "G_uvv"},
    {GFKind::T, "T"},
    {GFKind::Gbar_uvv, "Gbar_uvv"},
    {GFKind::C, "C"},
    {GFKind::F, "F"},
    {GFKind::A, "A"},
}};

const Polynomial kA = Polynomial::a();
const Polynomial kB = Polynomial::b();
const Polynomial kC = Polynomial::c();
const Polynomial kE = Polynomial::c() - Polynomial::b(2);

PowerSeries poly_x(std::size_t order, std::initializer_list<Polynomial> coeffs)
{
    return PowerSeries::from_x_coeffs(order, coeffs);
}

PowerSeries one(std::size_t order)
{
    return PowerSeries::constant(order, Polynomial(1));
}

// S = 1 + a x S + x (b + k x) S^2
PowerSeries motzkin_like(std::size_t order, const Polynomial& k)
{
    return series_fixed_point(
        [&](const PowerSeries& s) {
            const std::size_t n = s.order();
            return one(n) + poly_x(n, {0, kA}) * s + poly_x(n, {0, kB, k}) * (s * s);
        },
        order);
}

PowerSeries expand_g_uvu(std::size_t order)
{
    return series_fixed_point(
        [](const PowerSeries& s) {
            const std::size_t n = s.order();
            const PowerSeries one_bx = poly_x(n, {1, kB});
            const PowerSeries denom = poly_x(n, {1, -kA}) * one_bx;
            return (one_bx + poly_x(n, {0, kB, kC}) * (s * s)) * series_invert(denom);
        },
        order);
}

PowerSeries expand_t(std::size_t order)
{
    return series_fixed_point(
        [](const PowerSeries& t) {
            const std::size_t n = t.order();
            const PowerSeries inner = one(n) + t * kA + (t * t) * kE;
            return poly_x(n, {0, 1}) * inner * series_invert(one(n) - t * kB);
        },
        order);
}

PowerSeries expand_gbar(std::size_t order)
{
    const PowerSeries t = expand_t(order + 1);
    const PowerSeries t_over_x = t.unshifted(1);
    return t_over_x * series_invert(one(order) + t.with_order(order) * kA);
}

PowerSeries expand_catalan(std::size_t order)
{
    return series_fixed_point(
        [](const PowerSeries& s) { return one(s.order()) + (s * s).shifted(1); }, order);
}

// (1 + x)(1 + x - 3x^2 - x^3) = 1 + 2x - 2x^2 - 4x^3 - x^4
PowerSeries f_denominator(std::size_t n)
{
    return poly_x(n, {1, 2, -2, -4, -1});
}

PowerSeries one_plus_x_cubed(std::size_t n)
{
    return poly_x(n, {1, 3, 3, 1});
}

PowerSeries expand_f(std::size_t order)
{
    return series_fixed_point(
        [](const PowerSeries& f) {
            const std::size_t n = f.order();
            return (one_plus_x_cubed(n) + (f * f).shifted(1)) * series_invert(f_denominator(n));
        },
        order);
}

PowerSeries expand_a(std::size_t order)
{
    const PowerSeries f = expand_f(order);
    return (f + poly_x(order, {0, 1, 0, -1})) * series_invert(poly_x(order, {1, 2, 1}));
}

}  // namespace

std::optional<GFKind> parse_gf_kind(std::string_view name)
{
    for (const auto& [kind, label] : kNames)
        if (name == label)
            return kind;
    return std::nullopt;
}

const char* to_string(GFKind k)
{
    for (const auto& [kind, label] : kNames)
        if (kind == k)
            return label;
    return "?";
}

PowerSeries expand(GFKind kind, std::size_t order)
{
    PowerSeries s;
    switch (kind) {
        case GFKind::G: s = motzkin_like(order, kC); break;
        case GFKind::G_uvv: s = motzkin_like(order, kE); break;
        case GFKind::G_uvu: s = expand_g_uvu(order); break;
        case GFKind::T: s = expand_t(order); break;
        case GFKind::Gbar_uvv: s = expand_gbar(order); break;
        case GFKind::C: s = expand_catalan(order); break;
        case GFKind::F: s = expand_f(order); break;
        case GFKind::A: s = expand_a(order); break;
    }
    const Polynomial expected_lead = kind == GFKind::T ? Polynomial(0) : Polynomial(1);
    if (!(s[0] == expected_lead))
        throw std::logic_error(std::string("expand(") + to_string(kind) + "): constant term " + s[0].to_string());
    return s;
}

std::string SeriesReport::describe() const
{
    std::ostringstream os;
    if (ok)
        os << "equal on " << checked << " coefficients";
    else
        os << "mismatch at x^" << index << ": expected " << expected << ", got " << actual;
    return os.str();
}

SeriesReport verify_against(GFKind kind, std::size_t order, const CoefficientSource& reference)
{
    const PowerSeries s = expand(kind, order);
    SeriesReport r;
    for (std::size_t n = 0; n <= order; ++n) {
        Polynomial want = reference(n);
        ++r.checked;
        if (!(want == s[n])) {
            r.ok = false;
            r.index = n;
            r.expected = std::move(want);
            r.actual = s[n];
            break;
        }
    }
    return r;
}

namespace residual {

PowerSeries g_uvv(std::size_t order)
{
    const PowerSeries s = expand(GFKind::G_uvv, order);
    return s - one(order) - poly_x(order, {0, kA}) * s - poly_x(order, {0, kB, kE}) * (s * s);
}

PowerSeries t_equation(std::size_t order)
{
    const PowerSeries t = expand(GFKind::T, order);
    return t * (one(order) - t * kB) - poly_x(order, {0, 1}) * (one(order) + t * kA + (t * t) * kE);
}

PowerSeries gbar_relation(std::size_t order)
{
    const PowerSeries gbar = expand(GFKind::Gbar_uvv, order).with_order(order + 1);
    const PowerSeries t = expand(GFKind::T, order + 1);
    return gbar.shifted(1) * (one(order + 1) + t * kA) - t;
}

PowerSeries f_from_a(std::size_t order)
{
    const PowerSeries f = expand(GFKind::F, order);
    const PowerSeries a = expand(GFKind::A, order);
    return f - (poly_x(order, {1, 2, 1}) * a - poly_x(order, {0, 1, 0, -1}));
}

PowerSeries f_a_product(std::size_t order)
{
    const PowerSeries f = expand(GFKind::F, order);
    const PowerSeries a = expand(GFKind::A, order);
    return f - poly_x(order, {1, 1}) - f.shifted(2) * Polynomial(2) - (a * f).shifted(1);
}

PowerSeries f_quadratic(std::size_t order)
{
    const PowerSeries f = expand(GFKind::F, order);
    return (f * f).shifted(1) - f_denominator(order) * f + one_plus_x_cubed(order);
}

}  // namespace residual

}  // namespace gmotzkin
