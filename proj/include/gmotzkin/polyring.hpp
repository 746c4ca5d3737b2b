#ifndef GMOTZKIN_POLYRING_HPP
#define GMOTZKIN_POLYRING_HPP

// Exact arithmetic over Z[a,b,c] and truncated power series in x with
// Z[a,b,c] coefficients. a, b, c are the weights of h-, v- and d-steps.

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace gmotzkin {

using Integer = mpz_class;

enum class Variable { A, B, C };

struct Monomial {
    std::uint32_t ea = 0;
    std::uint32_t eb = 0;
    std::uint32_t ec = 0;

    friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;

    constexpr Monomial operator*(const Monomial& other) const
    {
        return {ea + other.ea, eb + other.eb, ec + other.ec};
    }
    constexpr bool is_one() const { return ea == 0 && eb == 0 && ec == 0; }
    std::uint32_t degree(Variable v) const;
};

// Canonical term order: lexicographic on (ea, eb, ec), largest first.
struct CanonicalOrder {
    constexpr bool operator()(const Monomial& lhs, const Monomial& rhs) const { return rhs < lhs; }
};

class Polynomial {
public:
    struct Term {
        Monomial monomial;
        Integer coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    Polynomial() = default;
    Polynomial(long constant);
    Polynomial(const Integer& constant);
    Polynomial(Monomial m, const Integer& coeff);

    static Polynomial variable(Variable v, std::uint32_t power = 1);
    static Polynomial a(std::uint32_t power = 1) { return variable(Variable::A, power); }
    static Polynomial b(std::uint32_t power = 1) { return variable(Variable::B, power); }
    static Polynomial c(std::uint32_t power = 1) { return variable(Variable::C, power); }

    // Sums duplicate monomials and drops zeros.
    static Polynomial from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    // Coefficient of m (zero when absent).
    Integer coeff(const Monomial& m) const;
    // Constant term.
    Integer constant() const { return coeff(Monomial{}); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one()); }

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Integer& scalar);

    friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
    friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(Polynomial p, const Integer& s) { return p *= s; }
    friend Polynomial operator*(const Integer& s, Polynomial p) { return p *= s; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial pow(std::uint32_t e) const;

    // Divides every coefficient by d; throws std::domain_error if inexact.
    Polynomial exact_divide(const Integer& d) const;

    Integer eval(const Integer& va, const Integer& vb, const Integer& vc) const;

    // e.g. "a^2 + 3*a*b + 2*b^2 + c"; "0" for the zero polynomial.
    std::string to_string() const;

private:
    std::vector<Term> terms_;  // canonical order, no zero coefficients
};

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
Integer poly_eval(const Polynomial& p, const Integer& va, const Integer& vb, const Integer& vc);

// Image of p under the ring homomorphism var -> replacement.
Polynomial poly_substitute(const Polynomial& p, Variable var, const Polynomial& replacement);

// Simultaneous substitution a -> ra, b -> rb, c -> rc.
Polynomial poly_compose(const Polynomial& p, const Polynomial& ra, const Polynomial& rb, const Polynomial& rc);

// JSON contract: [{"ea":..,"eb":..,"ec":..,"coeff":"<decimal>"}, ...] in canonical order.
nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

class PowerSeries {
public:
    // Zero series truncated at x^order.
    explicit PowerSeries(std::size_t order = 0);
    // Missing coefficients are zero; extra ones are discarded.
    PowerSeries(std::size_t order, std::vector<Polynomial> coeffs);

    static PowerSeries constant(std::size_t order, const Polynomial& value);
    // x^k truncated at order (zero if k > order).
    static PowerSeries x_power(std::size_t order, std::size_t k, const Polynomial& coeff = Polynomial(1));
    // Polynomial in x given by low-to-high coefficients.
    static PowerSeries from_x_coeffs(std::size_t order, std::initializer_list<Polynomial> coeffs);

    std::size_t order() const { return coeffs_.size() - 1; }
    const Polynomial& operator[](std::size_t k) const { return coeffs_.at(k); }
    Polynomial& operator[](std::size_t k) { return coeffs_.at(k); }
    const std::vector<Polynomial>& coeffs() const { return coeffs_; }

    // Same series truncated or zero-extended to a new order.
    PowerSeries with_order(std::size_t order) const;
    // Multiplies by x^k.
    PowerSeries shifted(std::size_t k) const;
    // Divides by x^k; throws std::domain_error if a dropped coefficient is nonzero.
    // The result has order order()-k.
    PowerSeries unshifted(std::size_t k) const;
    // Applies f to every coefficient.
    PowerSeries map(const std::function<Polynomial(const Polynomial&)>& f) const;

    PowerSeries& operator+=(const PowerSeries& other);
    PowerSeries& operator-=(const PowerSeries& other);
    PowerSeries& operator*=(const Polynomial& scalar);
    friend PowerSeries operator+(PowerSeries s, const PowerSeries& t) { return s += t; }
    friend PowerSeries operator-(PowerSeries s, const PowerSeries& t) { return s -= t; }
    friend PowerSeries operator*(PowerSeries s, const Polynomial& p) { return s *= p; }
    friend PowerSeries operator*(const Polynomial& p, PowerSeries s) { return s *= p; }
    friend PowerSeries operator*(const PowerSeries& s, const PowerSeries& t);
    PowerSeries operator-() const;

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

    bool is_zero() const;

private:
    void require_same_order(const PowerSeries& other) const;

    std::vector<Polynomial> coeffs_;
};

// Raised by series_fixed_point when the update map is not x-adically contractive.
class DivergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

PowerSeries series_mul(const PowerSeries& s, const PowerSeries& t);

// Multiplicative inverse; the constant coefficient must be 1 or -1.
PowerSeries series_invert(const PowerSeries& s);

using SeriesUpdate = std::function<PowerSeries(const PowerSeries&)>;

// Unique S with S = update(S) through x^order.
//
// The update must build its own constants at the order of its argument and
// must be contractive: if u and v agree through x^k then update(u) and
// update(v) agree through x^(k+1). Runs order+1 iterations from the zero
// series; the m-th iterate is computed at truncation m-1 since only its first
// m coefficients are settled. The result is then checked against update at
// full order and DivergenceError is thrown on mismatch.
PowerSeries series_fixed_point(const SeriesUpdate& update, std::size_t order);

}  // namespace gmotzkin

#endif  // GMOTZKIN_POLYRING_HPP
