#include "gmotzkin/polyring.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace gmotzkin {

namespace {

constexpr std::uint32_t kExponentBits = 21;
constexpr std::uint64_t kExponentMask = (std::uint64_t{1} << kExponentBits) - 1;

// Packed key whose descending numeric order is the canonical term order.
std::uint64_t pack(const Monomial& m)
{
    if (m.ea > kExponentMask || m.eb > kExponentMask || m.ec > kExponentMask)
        throw std::overflow_error("monomial exponent too large");
    return (std::uint64_t{m.ea} << (2 * kExponentBits)) | (std::uint64_t{m.eb} << kExponentBits) |
           std::uint64_t{m.ec};
}

Monomial unpack(std::uint64_t key)
{
    return {static_cast<std::uint32_t>(key >> (2 * kExponentBits)),
            static_cast<std::uint32_t>((key >> kExponentBits) & kExponentMask),
            static_cast<std::uint32_t>(key & kExponentMask)};
}

// Powers base^0 .. base^max_power, computed by repeated multiplication.
std::vector<Polynomial> power_table(const Polynomial& base, std::uint32_t max_power)
{
    std::vector<Polynomial> powers;
    powers.reserve(max_power + 1);
    powers.emplace_back(1);
    for (std::uint32_t k = 1; k <= max_power; ++k)
        powers.push_back(powers.back() * base);
    return powers;
}

void append_factor(std::ostringstream& os, char name, std::uint32_t e, bool& first)
{
    if (e == 0)
        return;
    if (!first)
        os << '*';
    os << name;
    if (e > 1)
        os << '^' << e;
    first = false;
}

}  // namespace

std::uint32_t Monomial::degree(Variable v) const
{
    switch (v) {
        case Variable::A: return ea;
        case Variable::B: return eb;
        case Variable::C: return ec;
    }
    return 0;
}

Polynomial::Polynomial(long constant)
{
    if (constant != 0)
        terms_.push_back({Monomial{}, Integer(constant)});
}

Polynomial::Polynomial(const Integer& constant)
{
    if (constant != 0)
        terms_.push_back({Monomial{}, constant});
}

Polynomial::Polynomial(Monomial m, const Integer& coeff)
{
    if (coeff != 0)
        terms_.push_back({m, coeff});
}

Polynomial Polynomial::variable(Variable v, std::uint32_t power)
{
    Monomial m;
    switch (v) {
        case Variable::A: m.ea = power; break;
        case Variable::B: m.eb = power; break;
        case Variable::C: m.ec = power; break;
    }
    return Polynomial(m, Integer(1));
}

Polynomial Polynomial::from_terms(std::vector<Term> terms)
{
    std::map<Monomial, Integer, CanonicalOrder> acc;
    for (auto& t : terms)
        acc[t.monomial] += t.coeff;
    Polynomial p;
    for (auto& [m, c] : acc)
        if (c != 0)
            p.terms_.push_back({m, c});
    return p;
}

Integer Polynomial::coeff(const Monomial& m) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return CanonicalOrder{}(t.monomial, key); });
    if (it != terms_.end() && it->monomial == m)
        return it->coeff;
    return Integer(0);
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    if (other.terms_.empty())
        return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto i = terms_.begin();
    auto j = other.terms_.begin();
    CanonicalOrder before;
    while (i != terms_.end() || j != other.terms_.end()) {
        if (j == other.terms_.end() || (i != terms_.end() && before(i->monomial, j->monomial))) {
            merged.push_back(std::move(*i++));
        } else if (i == terms_.end() || before(j->monomial, i->monomial)) {
            merged.push_back(*j++);
        } else {
            Integer sum = i->coeff + j->coeff;
            if (sum != 0)
                merged.push_back({i->monomial, std::move(sum)});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    return *this += -other;
}

Polynomial Polynomial::operator-() const
{
    Polynomial p = *this;
    for (auto& t : p.terms_)
        t.coeff = -t.coeff;
    return p;
}

Polynomial& Polynomial::operator*=(const Polynomial& other)
{
    *this = *this * other;
    return *this;
}

Polynomial& Polynomial::operator*=(const Integer& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_)
        t.coeff *= scalar;
    return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q)
{
    if (p.is_zero() || q.is_zero())
        return {};
    if (q.is_constant())
        return p * q.terms_.front().coeff;
    if (p.is_constant())
        return q * p.terms_.front().coeff;

    std::unordered_map<std::uint64_t, Integer> acc;
    acc.reserve(p.size() * q.size());
    Integer prod;
    for (const auto& s : p.terms_) {
        for (const auto& t : q.terms_) {
            mpz_mul(prod.get_mpz_t(), s.coeff.get_mpz_t(), t.coeff.get_mpz_t());
            acc[pack(s.monomial * t.monomial)] += prod;
        }
    }
    std::vector<std::pair<std::uint64_t, Integer>> flat;
    flat.reserve(acc.size());
    for (auto& [key, c] : acc)
        if (c != 0)
            flat.emplace_back(key, std::move(c));
    std::sort(flat.begin(), flat.end(), [](const auto& x, const auto& y) { return x.first > y.first; });

    Polynomial r;
    r.terms_.reserve(flat.size());
    for (auto& [key, c] : flat)
        r.terms_.push_back({unpack(key), std::move(c)});
    return r;
}

Polynomial Polynomial::pow(std::uint32_t e) const
{
    Polynomial result(1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u)
            result *= base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return result;
}

Polynomial Polynomial::exact_divide(const Integer& d) const
{
    if (d == 0)
        throw std::domain_error("polynomial division by zero");
    Polynomial r = *this;
    for (auto& t : r.terms_) {
        if (!mpz_divisible_p(t.coeff.get_mpz_t(), d.get_mpz_t()))
            throw std::domain_error("inexact polynomial division by " + d.get_str());
        mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), d.get_mpz_t());
    }
    return r;
}

Integer Polynomial::eval(const Integer& va, const Integer& vb, const Integer& vc) const
{
    Integer total = 0;
    Integer pa, pb, pc;
    for (const auto& t : terms_) {
        mpz_pow_ui(pa.get_mpz_t(), va.get_mpz_t(), t.monomial.ea);
        mpz_pow_ui(pb.get_mpz_t(), vb.get_mpz_t(), t.monomial.eb);
        mpz_pow_ui(pc.get_mpz_t(), vc.get_mpz_t(), t.monomial.ec);
        total += t.coeff * pa * pb * pc;
    }
    return total;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool leading = true;
    for (const auto& t : terms_) {
        Integer magnitude = abs(t.coeff);
        bool negative = t.coeff < 0;
        if (leading)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        leading = false;

        bool first = true;
        if (magnitude != 1 || t.monomial.is_one()) {
            os << magnitude.get_str();
            first = false;
        }
        append_factor(os, 'a', t.monomial.ea, first);
        append_factor(os, 'b', t.monomial.eb, first);
        append_factor(os, 'c', t.monomial.ec, first);
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p)
{
    return os << p.to_string();
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q)
{
    return p + q;
}

Polynomial poly_mul(const Polynomial& p, const Polynomial& q)
{
    return p * q;
}

Integer poly_eval(const Polynomial& p, const Integer& va, const Integer& vb, const Integer& vc)
{
    return p.eval(va, vb, vc);
}

Polynomial poly_substitute(const Polynomial& p, Variable var, const Polynomial& replacement)
{
    std::uint32_t max_power = 0;
    for (const auto& t : p.terms())
        max_power = std::max(max_power, t.monomial.degree(var));
    auto powers = power_table(replacement, max_power);

    Polynomial result;
    for (const auto& t : p.terms()) {
        Monomial rest = t.monomial;
        switch (var) {
            case Variable::A: rest.ea = 0; break;
            case Variable::B: rest.eb = 0; break;
            case Variable::C: rest.ec = 0; break;
        }
        result += Polynomial(rest, t.coeff) * powers[t.monomial.degree(var)];
    }
    return result;
}

Polynomial poly_compose(const Polynomial& p, const Polynomial& ra, const Polynomial& rb, const Polynomial& rc)
{
    std::uint32_t ma = 0, mb = 0, mc = 0;
    for (const auto& t : p.terms()) {
        ma = std::max(ma, t.monomial.ea);
        mb = std::max(mb, t.monomial.eb);
        mc = std::max(mc, t.monomial.ec);
    }
    auto pa = power_table(ra, ma);
    auto pb = power_table(rb, mb);
    auto pc = power_table(rc, mc);

    Polynomial result;
    for (const auto& t : p.terms())
        result += (pa[t.monomial.ea] * pb[t.monomial.eb] * pc[t.monomial.ec]) * t.coeff;
    return result;
}

nlohmann::json to_json(const Polynomial& p)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& t : p.terms()) {
        out.push_back({{"ea", t.monomial.ea}, {"eb", t.monomial.eb}, {"ec", t.monomial.ec},
                       {"coeff", t.coeff.get_str()}});
    }
    return out;
}

Polynomial polynomial_from_json(const nlohmann::json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("polynomial JSON must be an array of term records");
    std::vector<Polynomial::Term> terms;
    for (const auto& rec : j) {
        Monomial m{rec.at("ea").get<std::uint32_t>(), rec.at("eb").get<std::uint32_t>(),
                   rec.at("ec").get<std::uint32_t>()};
        Integer c;
        if (c.set_str(rec.at("coeff").get<std::string>(), 10) != 0)
            throw std::invalid_argument("bad coefficient string in polynomial JSON");
        terms.push_back({m, c});
    }
    return Polynomial::from_terms(std::move(terms));
}

// PowerSeries

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order + 1) {}

PowerSeries::PowerSeries(std::size_t order, std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs))
{
    coeffs_.resize(order + 1);
}

PowerSeries PowerSeries::constant(std::size_t order, const Polynomial& value)
{
    PowerSeries s(order);
    s.coeffs_[0] = value;
    return s;
}

PowerSeries PowerSeries::x_power(std::size_t order, std::size_t k, const Polynomial& coeff)
{
    PowerSeries s(order);
    if (k <= order)
        s.coeffs_[k] = coeff;
    return s;
}

PowerSeries PowerSeries::from_x_coeffs(std::size_t order, std::initializer_list<Polynomial> coeffs)
{
    return PowerSeries(order, std::vector<Polynomial>(coeffs));
}

PowerSeries PowerSeries::with_order(std::size_t order) const
{
    return PowerSeries(order, coeffs_);
}

PowerSeries PowerSeries::shifted(std::size_t k) const
{
    PowerSeries s(order());
    for (std::size_t i = 0; i + k <= order(); ++i)
        s.coeffs_[i + k] = coeffs_[i];
    return s;
}

PowerSeries PowerSeries::unshifted(std::size_t k) const
{
    if (k > order())
        throw std::domain_error("cannot divide a series by a power of x beyond its order");
    for (std::size_t i = 0; i < k; ++i)
        if (!coeffs_[i].is_zero())
            throw std::domain_error("series is not divisible by x^" + std::to_string(k));
    return PowerSeries(order() - k, std::vector<Polynomial>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

PowerSeries PowerSeries::map(const std::function<Polynomial(const Polynomial&)>& f) const
{
    PowerSeries s(order());
    for (std::size_t i = 0; i <= order(); ++i)
        s.coeffs_[i] = f(coeffs_[i]);
    return s;
}

void PowerSeries::require_same_order(const PowerSeries& other) const
{
    if (order() != other.order())
        throw std::invalid_argument("power series order mismatch: " + std::to_string(order()) + " vs " +
                                    std::to_string(other.order()));
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& other)
{
    require_same_order(other);
    for (std::size_t i = 0; i <= order(); ++i)
        coeffs_[i] += other.coeffs_[i];
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& other)
{
    require_same_order(other);
    for (std::size_t i = 0; i <= order(); ++i)
        coeffs_[i] -= other.coeffs_[i];
    return *this;
}

PowerSeries& PowerSeries::operator*=(const Polynomial& scalar)
{
    for (auto& c : coeffs_)
        c *= scalar;
    return *this;
}

PowerSeries PowerSeries::operator-() const
{
    PowerSeries s(order());
    for (std::size_t i = 0; i <= order(); ++i)
        s.coeffs_[i] = -coeffs_[i];
    return s;
}

PowerSeries operator*(const PowerSeries& s, const PowerSeries& t)
{
    s.require_same_order(t);
    const std::size_t n = s.order();
    PowerSeries r(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (s.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (!t.coeffs_[j].is_zero())
                r.coeffs_[i + j] += s.coeffs_[i] * t.coeffs_[j];
        }
    }
    return r;
}

bool PowerSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

PowerSeries series_mul(const PowerSeries& s, const PowerSeries& t)
{
    return s * t;
}

PowerSeries series_invert(const PowerSeries& s)
{
    const Polynomial& lead = s[0];
    if (!(lead == Polynomial(1) || lead == Polynomial(-1)))
        throw std::domain_error("series_invert: constant term " + lead.to_string() + " is not a unit");
    const Integer unit = lead.constant();  // its own inverse

    const std::size_t n = s.order();
    PowerSeries t(n);
    t[0] = Polynomial(unit);
    for (std::size_t k = 1; k <= n; ++k) {
        Polynomial acc;
        for (std::size_t i = 1; i <= k; ++i)
            if (!s[i].is_zero() && !t[k - i].is_zero())
                acc += s[i] * t[k - i];
        t[k] = -(acc * unit);
    }
    return t;
}

PowerSeries series_fixed_point(const SeriesUpdate& update, std::size_t order)
{
    PowerSeries current(0);
    for (std::size_t m = 1; m <= order + 1; ++m) {
        current = update(current.with_order(m - 1));
        if (current.order() != m - 1)
            throw std::invalid_argument("series update changed the truncation order");
    }
    PowerSeries image = update(current);
    if (!(image == current)) {
        std::size_t k = 0;
        while (k <= order && image[k] == current[k])
            ++k;
        throw DivergenceError("series fixed point did not stabilize at x^" + std::to_string(k) + ": " +
                              current[k].to_string() + " vs " + image[k].to_string());
    }
    return current;
}

}  // namespace gmotzkin
