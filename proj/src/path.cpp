#include "gmotzkin/path.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

namespace gmotzkin {

bool step_order_less(std::string_view lhs, std::string_view rhs)
{
    return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                                        [](char x, char y) { return step_rank(x) < step_rank(y); });
}

namespace word {

int step_delta(char c)
{
    return c == 'u' ? 1 : (c == 'h' ? 0 : -1);
}

bool is_valid(std::string_view w)
{
    long h = 0;
    for (char c : w) {
        h += step_delta(c);
        if (h < 0)
            return false;
    }
    return h == 0;
}

bool is_primitive(std::string_view w)
{
    if (w.empty() || w.front() != 'u')
        return false;
    long h = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        h += step_delta(w[i]);
        if (h <= 0)
            return h == 0 && i + 1 == w.size();
    }
    return false;
}

bool contains(std::string_view w, std::string_view pattern)
{
    return w.find(pattern) != std::string_view::npos;
}

bool ends_with(std::string_view w, std::string_view suffix)
{
    return w.size() >= suffix.size() && w.substr(w.size() - suffix.size()) == suffix;
}

bool starts_with(std::string_view w, std::string_view prefix)
{
    return w.substr(0, prefix.size()) == prefix;
}

bool has_h_on_axis(std::string_view w)
{
    long h = 0;
    for (char c : w) {
        if (c == 'h' && h == 0)
            return true;
        h += step_delta(c);
    }
    return false;
}

std::size_t x_length(std::string_view w)
{
    return w.size() - count(w, 'v');
}

std::size_t count(std::string_view w, char step)
{
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), step));
}

std::size_t first_return_length(std::string_view w)
{
    if (w.empty())
        throw std::domain_error("first return of the empty path");
    if (w.front() == 'h')
        return 1;
    long h = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        h += step_delta(w[i]);
        if (h == 0)
            return i + 1;
    }
    throw std::domain_error("path does not return to the axis");
}

std::string repeat(char c, std::size_t k)
{
    return std::string(k, c);
}

std::pair<std::size_t, std::string_view> elevation_strip(std::string_view p)
{
    if (!is_primitive(p))
        throw std::domain_error("elevation strip of a non-primitive path");
    std::size_t i = 0;
    std::string_view core = p;
    while (core.size() >= 2 && core.front() == 'u' && core.back() == 'v') {
        std::string_view inside = core.substr(1, core.size() - 2);
        if (inside.empty() || !is_valid(inside))
            break;
        core = inside;
        ++i;
    }
    return {i, core};
}

std::pair<std::size_t, std::string_view> ud_strip(std::string_view p)
{
    if (!is_primitive(p))
        throw std::domain_error("u/d strip of a non-primitive path");
    std::size_t j = 0;
    std::string_view core = p;
    while (core.size() >= 2 && core.front() == 'u' && core.back() == 'd') {
        std::string_view inside = core.substr(1, core.size() - 2);
        if (!is_valid(inside))
            break;
        core = inside;
        ++j;
    }
    return {j, core};
}

}  // namespace word

Path path_from_valid_word(std::string w)
{
    return Path(std::move(w));
}

Path Path::parse(std::string_view text)
{
    std::string w;
    w.reserve(text.size());
    long h = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        if (c != 'u' && c != 'd' && c != 'h' && c != 'v')
            throw PathError(std::string("illegal character '") + c + "' at index " + std::to_string(i), i);
        h += word::step_delta(c);
        if (h < 0)
            throw PathError("height -1 after step " + std::to_string(w.size() + 1) + " (index " + std::to_string(i) + ")", i);
        w.push_back(c);
    }
    if (h != 0)
        throw PathError("path ends at height " + std::to_string(h) + ", not 0", text.size());
    return Path(std::move(w));
}

Path parse_path(std::string_view text)
{
    return Path::parse(text);
}

Monomial weight_monomial(std::string_view w)
{
    return {static_cast<std::uint32_t>(word::count(w, 'h')), static_cast<std::uint32_t>(word::count(w, 'v')),
            static_cast<std::uint32_t>(word::count(w, 'd'))};
}

Monomial weight_monomial(const Path& p)
{
    return weight_monomial(p.word());
}

Pattern Pattern::parse(std::string_view text)
{
    if (text.empty())
        throw PathError("empty pattern", 0);
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c != 'u' && c != 'd' && c != 'h' && c != 'v')
            throw PathError(std::string("illegal character '") + c + "' in pattern at index " + std::to_string(i), i);
    }
    return Pattern(std::string(text));
}

bool contains_pattern(const Path& p, const Pattern& t)
{
    return word::contains(p.word(), t.word());
}

bool has_h_on_axis(const Path& p)
{
    return word::has_h_on_axis(p.word());
}

bool is_primitive(const Path& p)
{
    return word::is_primitive(p.word());
}

bool ends_with(const Path& p, std::string_view suffix)
{
    return word::ends_with(p.word(), suffix);
}

FirstReturn first_return_split(const Path& p)
{
    std::size_t k = word::first_return_length(p.word());
    return {p.word().substr(0, k), path_from_valid_word(p.word().substr(k))};
}

Strip max_elevation_strip(const Path& p)
{
    auto [i, core] = word::elevation_strip(p.word());
    return {i, path_from_valid_word(std::string(core))};
}

Strip max_ud_strip(const Path& p)
{
    auto [j, core] = word::ud_strip(p.word());
    return {j, path_from_valid_word(std::string(core))};
}

namespace {

bool is_base(std::string_view w)
{
    return w.empty() || w == "h" || w == "uv";
}

// Shape of an inner part; a bare "uv" only counts as EndsUv when allowed.
std::pair<InnerShape, std::string> inner_shape(std::string_view inner, bool allow_empty_uv_stem)
{
    if (inner.empty())
        return {InnerShape::Empty, {}};
    if (word::ends_with(inner, "uuvv"))
        return {InnerShape::EndsUuvv, std::string(inner.substr(0, inner.size() - 4))};
    if (word::ends_with(inner, "uv") && (allow_empty_uv_stem || inner.size() > 2))
        return {InnerShape::EndsUv, std::string(inner.substr(0, inner.size() - 2))};
    return {InnerShape::Other, {}};
}

}  // namespace

ForwardDecomposition decompose_forward_word(std::string_view q)
{
    if (word::contains(q, "uvv"))
        throw std::domain_error("forward decomposition needs a uvv-avoiding path, got " + std::string(q));

    ForwardDecomposition d;
    if (is_base(q)) {
        d.kind = ForwardCase::Base;
        d.inner = std::string(q);
        return d;
    }
    if (q.front() == 'h') {
        d.kind = ForwardCase::Case1;
        d.rest = std::string(q.substr(1));
        return d;
    }
    if (word::starts_with(q, "uv")) {
        std::string_view r = q.substr(2);
        // r is nonempty and cannot start with d or v.
        if (r.front() == 'h') {
            d.kind = ForwardCase::Case2;
            d.rest = std::string(r.substr(1));
        } else {
            std::size_t k = word::first_return_length(r);
            d.kind = ForwardCase::Case3;
            d.inner = std::string(r.substr(0, k));
            d.rest = std::string(r.substr(k));
        }
        return d;
    }

    std::size_t k = word::first_return_length(q);
    std::string_view component = q.substr(0, k);
    d.rest = std::string(q.substr(k));
    auto [i, core] = word::elevation_strip(component);
    d.elevation = i;
    if (core == "ud") {
        d.kind = ForwardCase::Case4;
    } else if (word::is_primitive(core) && core.back() == 'd') {
        d.kind = ForwardCase::Case5;
        d.inner = std::string(core.substr(1, core.size() - 2));
    } else {
        // Maximality rules out a primitive core ending in v.
        if (i == 0 || word::is_primitive(core))
            throw std::logic_error("forward decomposition found no case for " + std::string(q));
        d.kind = ForwardCase::Case6;
        d.inner = std::string(core);
    }
    return d;
}

ForwardDecomposition decompose_forward(const Path& q)
{
    return decompose_forward_word(q.word());
}

InverseDecomposition decompose_inverse_word(std::string_view p)
{
    if (word::contains(p, "uvu"))
        throw std::domain_error("inverse decomposition needs a uvu-avoiding path, got " + std::string(p));

    InverseDecomposition d;
    if (is_base(p)) {
        d.kind = InverseCase::BaseInv;
        d.inner = std::string(p);
        return d;
    }
    if (p.front() == 'h') {
        d.kind = InverseCase::CaseI;
        d.rest = std::string(p.substr(1));
        return d;
    }
    if (word::starts_with(p, "uvh")) {
        d.kind = InverseCase::CaseII;
        d.rest = std::string(p.substr(3));
        return d;
    }

    std::size_t k = word::first_return_length(p);
    std::string_view component = p.substr(0, k);
    d.rest = std::string(p.substr(k));

    if (component.back() == 'v') {
        d.kind = InverseCase::CaseIII;
        d.inner = std::string(component.substr(1, component.size() - 2));
        std::tie(d.shape, d.stem) = inner_shape(d.inner, false);
        if (d.shape == InnerShape::Empty)
            throw std::logic_error("inverse decomposition: bare uv component followed by u in " + std::string(p));
        return d;
    }

    auto [j, core] = word::ud_strip(component);
    d.elevation = j;
    auto [shape, stem] = inner_shape(core, true);
    if (shape != InnerShape::Other || !word::is_primitive(core)) {
        d.kind = InverseCase::CaseIV;
        d.inner = std::string(core);
        d.shape = shape;
        d.stem = std::move(stem);
        return d;
    }
    // A primitive core other than uv / uuvv; maximality forces it to end in v.
    if (core.back() != 'v')
        throw std::logic_error("inverse decomposition: primitive core ending in d for " + std::string(p));
    d.kind = InverseCase::CaseV;
    d.inner = std::string(core.substr(1, core.size() - 2));
    std::tie(d.shape, d.stem) = inner_shape(d.inner, false);
    return d;
}

InverseDecomposition decompose_inverse(const Path& p)
{
    return decompose_inverse_word(p.word());
}

std::string reassemble(const ForwardDecomposition& d)
{
    using word::repeat;
    const std::size_t i = d.elevation;
    switch (d.kind) {
        case ForwardCase::Base: return d.inner;
        case ForwardCase::Case1: return "h" + d.rest;
        case ForwardCase::Case2: return "uvh" + d.rest;
        case ForwardCase::Case3: return "uv" + d.inner + d.rest;
        case ForwardCase::Case4: return repeat('u', i) + "ud" + repeat('v', i) + d.rest;
        case ForwardCase::Case5: return repeat('u', i + 1) + d.inner + "d" + repeat('v', i) + d.rest;
        case ForwardCase::Case6: return repeat('u', i) + d.inner + repeat('v', i) + d.rest;
    }
    return {};
}

std::string reassemble(const InverseDecomposition& d)
{
    using word::repeat;
    const std::size_t j = d.elevation;
    switch (d.kind) {
        case InverseCase::BaseInv: return d.inner;
        case InverseCase::CaseI: return "h" + d.rest;
        case InverseCase::CaseII: return "uvh" + d.rest;
        case InverseCase::CaseIII: return "u" + d.inner + "v" + d.rest;
        case InverseCase::CaseIV: return repeat('u', j) + d.inner + repeat('d', j) + d.rest;
        case InverseCase::CaseV: return repeat('u', j + 1) + d.inner + "v" + repeat('d', j) + d.rest;
    }
    return {};
}

const char* to_string(ForwardCase c)
{
    switch (c) {
        case ForwardCase::Base: return "Base";
        case ForwardCase::Case1: return "Case1";
        case ForwardCase::Case2: return "Case2";
        case ForwardCase::Case3: return "Case3";
        case ForwardCase::Case4: return "Case4";
        case ForwardCase::Case5: return "Case5";
        case ForwardCase::Case6: return "Case6";
    }
    return "?";
}

const char* to_string(InverseCase c)
{
    switch (c) {
        case InverseCase::BaseInv: return "BaseInv";
        case InverseCase::CaseI: return "CaseI";
        case InverseCase::CaseII: return "CaseII";
        case InverseCase::CaseIII: return "CaseIII";
        case InverseCase::CaseIV: return "CaseIV";
        case InverseCase::CaseV: return "CaseV";
    }
    return "?";
}

}  // namespace gmotzkin
