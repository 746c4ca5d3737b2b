#include "gmotzkin/enumerate.hpp"

#include <array>
#include <string>

namespace gmotzkin {

Constraints Constraints::avoiding(std::string_view pattern)
{
    Constraints c;
    c.avoid.push_back(Pattern::parse(pattern));
    return c;
}

bool Constraints::admits(std::string_view w) const
{
    for (const auto& p : avoid)
        if (word::contains(w, p.word()))
            return false;
    return !(forbid_h_on_axis && word::has_h_on_axis(w));
}

namespace {

class Walker {
public:
    Walker(std::size_t n, const Constraints& c, const WordVisitor& visit) : n_(n), c_(c), visit_(visit)
    {
        buffer_.reserve(2 * n + 1);
    }

    std::size_t run()
    {
        descend(0, 0);
        return visited_;
    }

private:
    bool violates_suffix() const
    {
        std::string_view w = buffer_;
        for (const auto& p : c_.avoid)
            if (word::ends_with(w, p.word()))
                return true;
        return false;
    }

    // Returns false once the visitor asked to stop.
    bool descend(std::size_t x, long height)
    {
        if (x == n_ && height == 0) {
            ++visited_;
            return visit_(buffer_);
        }
        static constexpr std::array<char, 4> kSteps{'u', 'd', 'h', 'v'};
        for (char s : kSteps) {
            long next = height + word::step_delta(s);
            std::size_t nx = x + (s == 'v' ? 0 : 1);
            if (next < 0 || nx > n_)
                continue;
            if (s == 'h' && height == 0 && c_.forbid_h_on_axis)
                continue;
            buffer_.push_back(s);
            bool keep_going = true;
            if (!violates_suffix())
                keep_going = descend(nx, next);
            buffer_.pop_back();
            if (!keep_going)
                return false;
        }
        return true;
    }

    std::size_t n_;
    const Constraints& c_;
    const WordVisitor& visit_;
    std::string buffer_;
    std::size_t visited_ = 0;
};

}  // namespace

std::size_t for_each_path(std::size_t n, const Constraints& c, const WordVisitor& visit)
{
    return Walker(n, c, visit).run();
}

std::vector<Path> generate(std::size_t n, const Constraints& c)
{
    std::vector<Path> out;
    for_each_path(n, c, [&](std::string_view w) {
        out.push_back(path_from_valid_word(std::string(w)));
        return true;
    });
    return out;
}

Polynomial weight_sum(std::size_t n, const Constraints& c)
{
    // ea, eb, ec are all bounded by n for a path of x-length n.
    const std::size_t side = n + 1;
    std::vector<std::uint64_t> counts(side * side * side, 0);
    for_each_path(n, c, [&](std::string_view w) {
        Monomial m = weight_monomial(w);
        ++counts[(m.ea * side + m.eb) * side + m.ec];
        return true;
    });
    std::vector<Polynomial::Term> terms;
    for (std::uint32_t ea = 0; ea < side; ++ea)
        for (std::uint32_t eb = 0; eb < side; ++eb)
            for (std::uint32_t ec = 0; ec < side; ++ec)
                if (auto k = counts[(ea * side + eb) * side + ec]; k != 0)
                    terms.push_back({Monomial{ea, eb, ec}, Integer(static_cast<unsigned long>(k))});
    return Polynomial::from_terms(std::move(terms));
}

Integer class_count(std::size_t n, const Constraints& c, const Integer& va, const Integer& vb, const Integer& vc)
{
    auto powers = [n](const Integer& base) {
        std::vector<Integer> p(n + 1);
        p[0] = 1;
        for (std::size_t k = 1; k <= n; ++k)
            p[k] = p[k - 1] * base;
        return p;
    };
    const auto pa = powers(va), pb = powers(vb), pc = powers(vc);
    Integer total = 0;
    for_each_path(n, c, [&](std::string_view w) {
        Monomial m = weight_monomial(w);
        total += pa[m.ea] * pb[m.eb] * pc[m.ec];
        return true;
    });
    return total;
}

std::size_t class_size(std::size_t n, const Constraints& c)
{
    return for_each_path(n, c, [](std::string_view) { return true; });
}

}  // namespace gmotzkin
