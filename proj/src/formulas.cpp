#include "gmotzkin/formulas.hpp"

#include <stdexcept>
#include <string>

#include "gmotzkin/enumerate.hpp"

namespace gmotzkin {

Integer binom(long m, long r)
{
    if (r < 0)
        return 0;
    Integer num = 1;
    Integer den = 1;
    for (long t = 0; t < r; ++t) {
        num *= m - t;
        den *= t + 1;
    }
    return num / den;
}

Integer catalan(std::size_t n)
{
    const long k = static_cast<long>(n);
    return binom(2 * k, k) / (k + 1);
}

namespace {

// Accumulates coeff * a^ea * b^eb * (c - b^2)^j over an index range.
class ESum {
public:
    explicit ESum(std::size_t max_j)
    {
        const Polynomial e = Polynomial::c() - Polynomial::b(2);
        epow_.push_back(Polynomial(1));
        for (std::size_t j = 1; j <= max_j; ++j)
            epow_.push_back(epow_.back() * e);
    }

    void add(const Integer& coeff, long ea, long eb, long j)
    {
        if (coeff == 0)
            return;
        if (ea < 0 || eb < 0 || j < 0 || static_cast<std::size_t>(j) >= epow_.size())
            throw std::logic_error("closed form produced a nonzero term outside the polynomial ring");
        Monomial m{static_cast<std::uint32_t>(ea), static_cast<std::uint32_t>(eb), 0};
        total_ += Polynomial(m, coeff) * epow_[static_cast<std::size_t>(j)];
    }

    const Polynomial& total() const { return total_; }

private:
    std::vector<Polynomial> epow_;
    Polynomial total_;
};

Integer sign(long e)
{
    return (e % 2 == 0) ? Integer(1) : Integer(-1);
}

void require_form(int form, int max_form, const char* name)
{
    if (form < 1 || form > max_form)
        throw std::invalid_argument(std::string(name) + ": unknown form " + std::to_string(form));
}

}  // namespace

Polynomial g_uvv_closed(std::size_t n_, int form)
{
    require_form(form, 5, "g_uvv_closed");
    const long n = static_cast<long>(n_);
    ESum s(n_);
    switch (form) {
        case 1:
            for (long k = 0; k <= n; ++k)
                for (long j = 0; j <= k; ++j)
                    s.add(binom(k, j) * binom(n + k - j, 2 * k) * catalan(k), n - k - j, k - j, j);
            return s.total();
        case 2:
            // Indexed by the a-exponent l = n - k - j.
            for (long k = 0; k <= n; ++k)
                for (long j = 0; j <= k; ++j) {
                    long l = n - k - j;
                    if (l < 0)
                        continue;
                    s.add(binom(k, j) * binom(2 * k + l, l) * catalan(k), l, 2 * k + l - n, j);
                }
            return s.total();
        case 3:
            for (long k = 0; k <= n / 2; ++k)
                for (long j = 0; j <= n - 2 * k; ++j)
                    s.add(binom(n + 1, k) * binom(n + 1 - k, j) * binom(2 * n - 2 * k - j, n - 2 * k - j), j,
                          n - 2 * k - j, k);
            break;
        case 4:
            for (long k = 0; k <= n; ++k)
                for (long j = 0; j <= (n - k) / 2; ++j)
                    s.add(binom(n + 1, k) * binom(n + 1 - k, j) * binom(2 * n - k - 2 * j, n - k - 2 * j), k,
                          n - k - 2 * j, j);
            break;
        case 5:
            for (long k = 0; k <= n; ++k)
                for (long j = 0; j <= n - k; ++j)
                    s.add(binom(n + 1, k) * binom(k, j) * binom(2 * n - k - j, n - k - j), k - j, n - k - j, j);
            break;
    }
    return s.total().exact_divide(n + 1);
}

Polynomial g_uvv_closed_literal(std::size_t n_, int form)
{
    require_form(form, 2, "g_uvv_closed_literal");
    const long n = static_cast<long>(n_);
    ESum s(n_);
    for (long k = 0; k <= n; ++k)
        for (long j = 0; j <= k; ++j)
            for (long l = 0; l <= n - k - j; ++l) {
                if (form == 1)
                    s.add(sign(l) * binom(k, j) * binom(k + l - 1, l) * binom(n + k - j - l, 2 * k) * catalan(k),
                          n - k - j - l, k + l - j, j);
                else
                    s.add(sign(n - k - j - l) * binom(k, j) * binom(2 * k + l, l) *
                              binom(n - j - l - 1, n - k - j - l) * catalan(k),
                          l, n - 2 * j - l, j);
            }
    return s.total();
}

namespace {

Polynomial gbar_sum(long n, int form, bool literal_b_exponent)
{
    ESum s(static_cast<std::size_t>(n));
    for (long i = 0; i <= n + 1; ++i) {
        const Integer w = sign(i) * (i + 1);
        switch (form) {
            case 1:
                for (long k = 0; k <= n / 2; ++k)
                    for (long j = 0; j <= n - 2 * k; ++j)
                        s.add(w * binom(n + 1, k) * binom(n + 1 - k, j) * binom(2 * n - i - 2 * k - j, n - i - 2 * k - j),
                              i + j, n - i - 2 * k - j, k);
                break;
            case 2:
                for (long k = 0; k <= n; ++k)
                    for (long j = 0; j <= (n - k) / 2; ++j)
                        s.add(w * binom(n + 1, k) * binom(n + 1 - k, j) * binom(2 * n - i - k - 2 * j, n - i - k - 2 * j),
                              i + k, n - i - k - 2 * j, j);
                break;
            case 3:
                for (long k = 0; k <= n; ++k)
                    for (long j = 0; j <= n - k; ++j)
                        s.add(w * binom(n + 1, k) * binom(k, j) * binom(2 * n - i - k - j, n - i - k - j), i + k - j,
                              literal_b_exponent ? n - k - j : n - i - k - j, j);
                break;
        }
    }
    return s.total();
}

}  // namespace

Polynomial gbar_uvv_closed(std::size_t n, int form)
{
    require_form(form, 3, "gbar_uvv_closed");
    const long m = static_cast<long>(n);
    return gbar_sum(m, form, false).exact_divide(m + 1);
}

Polynomial gbar_uvv_closed_literal_times_np1(std::size_t n)
{
    return gbar_sum(static_cast<long>(n), 3, true);
}

Polynomial dyck_weight(std::size_t n_)
{
    if (n_ == 0)
        return Polynomial(1);
    const long n = static_cast<long>(n_);
    Polynomial out;
    for (long k = 1; k <= n; ++k) {
        Integer coeff = binom(n, k - 1) * binom(n, k) / n;
        out += Polynomial(Monomial{static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(n - k), 0}, coeff);
    }
    return out;
}

Polynomial motzkin_weight(std::size_t n_)
{
    const long n = static_cast<long>(n_);
    Polynomial out;
    for (long k = 0; 2 * k <= n; ++k)
        out += Polynomial(Monomial{static_cast<std::uint32_t>(n - 2 * k), static_cast<std::uint32_t>(k), 0},
                          binom(n, 2 * k) * catalan(k));
    return out;
}

Polynomial schroder_weight(std::size_t n_)
{
    const long n = static_cast<long>(n_);
    Polynomial out;
    for (long k = 0; k <= n; ++k)
        out += Polynomial(Monomial{static_cast<std::uint32_t>(n - k), static_cast<std::uint32_t>(k), 0},
                          binom(n + k, 2 * k) * catalan(k));
    return out;
}

RelationReport relation_checks(std::size_t n)
{
    if (n == 0)
        throw std::domain_error("relation_checks needs n >= 1");
    const Polynomial a = Polynomial::a(), b = Polynomial::b(), c = Polynomial::c();
    const Polynomial s = schroder_weight(n);

    RelationReport r;
    r.schroder_is_dyck_shift = s == poly_compose(dyck_weight(n), a + b, b, c);
    r.schroder_is_motzkin_shift = s == (a + b) * poly_compose(motzkin_weight(n - 1), a + b + b, (a + b) * b, c);
    const Polynomial uvu = poly_substitute(weight_sum(n, Constraints::avoiding("uvu")), Variable::C, b * b);
    r.uvu_is_schroder = s == uvu;
    return r;
}

Integer f_closed(std::size_t n_)
{
    const long n = static_cast<long>(n_);
    Integer total = 0;
    for (long k = 0; k <= n; ++k)
        for (long j = 0; j <= (n - k) / 2; ++j) {
            Integer three = 1;
            for (long t = 0; t < j; ++t)
                three *= 3;
            // three runs over 3^(j-i) as i grows.
            for (long i = 0; i <= j; ++i) {
                total += sign(n - k - i) * binom(2 * k + j, j) * binom(j, i) * binom(n - j - i - 2, n - k - 2 * j - i) *
                         three * catalan(k);
                three /= 3;
            }
        }
    return total;
}

namespace {

struct Unrolled {
    std::vector<Integer> f;
    std::vector<Integer> a;
};

Unrolled unroll(std::size_t n)
{
    Unrolled u;
    u.f = {1, 2};
    u.a = {1, 1, 2, 7, 23};
    for (std::size_t m = 1; u.f.size() <= std::max<std::size_t>(n, 1); ++m) {
        Integer next = u.f[m] + 2 * u.f[m - 1];
        for (std::size_t k = 1; k <= m; ++k)
            next += u.a[k] * u.f[m - k];
        u.f.push_back(next);
        const std::size_t t = m + 1;
        if (t >= u.a.size())
            u.a.push_back(u.f[t] - 2 * u.a[t - 1] - u.a[t - 2]);
    }
    return u;
}

}  // namespace

Integer f_recurrence(std::size_t n)
{
    return unroll(n).f[n];
}

std::vector<Integer> fixed_class_a_sequence(std::size_t n)
{
    Unrolled u = unroll(n);
    u.a.resize(n + 1);
    return u.a;
}

}  // namespace gmotzkin
