#include "gmotzkin/bijection.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "gmotzkin/enumerate.hpp"

namespace gmotzkin {

using word::repeat;

const char* to_string(Claim c)
{
    switch (c) {
        case Claim::Case3Primitive: return "case3-primitive";
        case Claim::Case5Suffix: return "case5-suffix";
        case Claim::Case6NonPrimitive: return "case6-non-primitive";
        case Claim::Case6Suffix: return "case6-suffix";
        case Claim::Case6PrimitiveRule: return "case6-primitive-rule";
    }
    return "?";
}

void SigmaAudit::record(Claim c, bool ok, std::string_view input, std::string_view image)
{
    ClaimTally& t = tallies_[static_cast<std::size_t>(c)];
    ++t.checked;
    if (!ok && t.violated++ == 0) {
        t.example_input = std::string(input);
        t.example_image = std::string(image);
    }
}

namespace {

// Recursion measure: (step count, number of d-steps), compared
// lexicographically. Case 5 with i = 0 and Q' empty keeps the step count but
// trades the d for a v.
std::pair<std::size_t, std::size_t> measure(std::string_view w)
{
    return {w.size(), word::count(w, 'd')};
}

void check_descent(std::string_view arg, std::string_view parent)
{
    if (!(measure(arg) < measure(parent)))
        throw std::logic_error("sigma recursion does not descend: " + std::string(arg) + " from " +
                               std::string(parent));
}

bool ends_uv_free(std::string_view stem)
{
    return !word::ends_with(stem, "uv");
}

bool suffix_form_ok(std::string_view s)
{
    if (word::ends_with(s, "uuvv"))
        return ends_uv_free(s.substr(0, s.size() - 4));
    if (word::ends_with(s, "uv"))
        return ends_uv_free(s.substr(0, s.size() - 2));
    return false;
}

std::string forward(std::string_view q, SigmaAudit* audit)
{
    const ForwardDecomposition d = decompose_forward_word(q);
    auto rec = [&](const std::string& arg) {
        check_descent(arg, q);
        return forward(arg, audit);
    };
    const std::size_t i = d.elevation;
    const bool odd = i % 2 == 1;
    const std::size_t j = odd ? (i + 1) / 2 : i / 2;

    switch (d.kind) {
        case ForwardCase::Base: return d.inner;
        case ForwardCase::Case1: return "h" + rec(d.rest);
        case ForwardCase::Case2: return "uvh" + rec(d.rest);
        case ForwardCase::Case3: {
            std::string s = rec(d.inner);
            if (audit)
                audit->record(Claim::Case3Primitive, word::is_primitive(s) && s != "uuvv", q, s);
            return "u" + s + "v" + rec(d.rest);
        }
        case ForwardCase::Case4:
            if (odd)
                return repeat('u', j) + "uv" + repeat('d', j) + rec(d.rest);
            return repeat('u', j + 1) + repeat('d', j + 1) + rec(d.rest);
        case ForwardCase::Case5: {
            std::string s = rec(d.inner + "uv");
            if (audit)
                audit->record(Claim::Case5Suffix, suffix_form_ok(s), q, s);
            if (odd)
                return repeat('u', j) + s + repeat('d', j) + rec(d.rest);
            return repeat('u', j + 1) + s + "v" + repeat('d', j) + rec(d.rest);
        }
        case ForwardCase::Case6: {
            std::string s = rec(d.inner);
            if (audit) {
                const bool prim = word::is_primitive(s);
                audit->record(Claim::Case6NonPrimitive, !prim, q, s);
                audit->record(Claim::Case6Suffix, !word::ends_with(s, "uv") && !word::ends_with(s, "uuvv"), q, s);
                const bool uv_then_primitive =
                    word::starts_with(d.inner, "uv") && word::is_primitive(std::string_view(d.inner).substr(2));
                audit->record(Claim::Case6PrimitiveRule, prim == uv_then_primitive, q, s);
            }
            if (odd)
                return repeat('u', j) + s + "v" + repeat('d', j - 1) + rec(d.rest);
            return repeat('u', j) + s + repeat('d', j) + rec(d.rest);
        }
    }
    throw std::logic_error("unhandled forward case");
}

std::string inverse(std::string_view p)
{
    const InverseDecomposition d = decompose_inverse_word(p);
    auto rec = [](const std::string& arg) { return inverse(arg); };
    const std::size_t j = d.elevation;

    switch (d.kind) {
        case InverseCase::BaseInv: return d.inner;
        case InverseCase::CaseI: return "h" + rec(d.rest);
        case InverseCase::CaseII: return "uvh" + rec(d.rest);
        case InverseCase::CaseIII: {
            std::string head;
            if (d.shape == InnerShape::EndsUuvv) {
                head = "u" + rec(d.stem + "uv") + "d";
            } else if (d.shape == InnerShape::EndsUv) {
                head = "u" + rec(d.stem) + "d";
            } else {
                std::string y = rec(d.inner);
                head = word::is_primitive(y) ? "uv" + y : "u" + y + "v";
            }
            return head + rec(d.rest);
        }
        case InverseCase::CaseIV: {
            std::string head;
            switch (d.shape) {
                case InnerShape::Empty:
                    head = repeat('u', 2 * j - 2) + "ud" + repeat('v', 2 * j - 2);
                    break;
                case InnerShape::EndsUuvv:
                    head = repeat('u', 2 * j) + rec(d.stem + "uv") + "d" + repeat('v', 2 * j - 1);
                    break;
                case InnerShape::EndsUv:
                    head = repeat('u', 2 * j) + rec(d.stem) + "d" + repeat('v', 2 * j - 1);
                    break;
                default:
                    head = repeat('u', 2 * j) + rec(d.inner) + repeat('v', 2 * j);
                    break;
            }
            return head + rec(d.rest);
        }
        case InverseCase::CaseV: {
            std::string head;
            if (d.shape == InnerShape::EndsUuvv) {
                head = repeat('u', 2 * j + 1) + rec(d.stem + "uv") + "d" + repeat('v', 2 * j);
            } else if (d.shape == InnerShape::EndsUv) {
                head = repeat('u', 2 * j + 1) + rec(d.stem) + "d" + repeat('v', 2 * j);
            } else {
                std::string y = rec(d.inner);
                if (word::is_primitive(y))
                    head = repeat('u', 2 * j) + "uv" + y + repeat('v', 2 * j);
                else
                    head = repeat('u', 2 * j + 1) + y + repeat('v', 2 * j + 1);
            }
            return head + rec(d.rest);
        }
    }
    throw std::logic_error("unhandled inverse case");
}

}  // namespace

std::string sigma_word(std::string_view q, SigmaAudit* audit)
{
    if (!word::is_valid(q))
        throw std::domain_error("sigma: not a valid path: " + std::string(q));
    return forward(q, audit);
}

std::string sigma_inv_word(std::string_view p)
{
    if (!word::is_valid(p))
        throw std::domain_error("sigma_inv: not a valid path: " + std::string(p));
    return inverse(p);
}

Path sigma(const Path& q, SigmaAudit* audit)
{
    return path_from_valid_word(sigma_word(q.word(), audit));
}

Path sigma_inv(const Path& p)
{
    return path_from_valid_word(sigma_inv_word(p.word()));
}

bool is_fixed_point(const Path& q)
{
    return sigma_word(q.word()) == q.word();
}

bool is_fixed_by_structure(std::string_view q)
{
    const ForwardDecomposition d = decompose_forward_word(q);
    switch (d.kind) {
        case ForwardCase::Base: return true;
        case ForwardCase::Case1:
        case ForwardCase::Case2: return is_fixed_by_structure(d.rest);
        case ForwardCase::Case4: return d.elevation == 0 && is_fixed_by_structure(d.rest);
        case ForwardCase::Case6:
            return d.elevation == 1 && fixed_point_class_of(d.inner) == FixedPointClass::A &&
                   is_fixed_by_structure(d.inner) && is_fixed_by_structure(d.rest);
        default: return false;
    }
}

const char* to_string(FixedPointClass c)
{
    switch (c) {
        case FixedPointClass::A: return "A";
        case FixedPointClass::B: return "B";
        case FixedPointClass::C: return "C";
    }
    return "?";
}

FixedPointClass fixed_point_class_of(std::string_view q)
{
    if (word::ends_with(q, "uv"))
        return FixedPointClass::B;
    if (word::is_primitive(q))
        return FixedPointClass::C;
    return FixedPointClass::A;
}

FixedPointClass classify_fixed(const Path& q)
{
    if (!is_fixed_point(q))
        throw std::domain_error("classify_fixed: " + q.word() + " is not a fixed point");
    return fixed_point_class_of(q.word());
}

FixedPointCounts fixed_points(std::size_t n, bool collect)
{
    FixedPointCounts out;
    for_each_path(n, Constraints::avoiding("uvv"), [&](std::string_view q) {
        if (forward(q, nullptr) != q)
            return true;
        ++out.total;
        switch (fixed_point_class_of(q)) {
            case FixedPointClass::A: ++out.a; break;
            case FixedPointClass::B: ++out.b; break;
            case FixedPointClass::C: ++out.c; break;
        }
        if (collect)
            out.paths.push_back(path_from_valid_word(std::string(q)));
        return true;
    });
    // Generation order already is the sort order; kept explicit for callers.
    std::sort(out.paths.begin(), out.paths.end());
    return out;
}

}  // namespace gmotzkin
