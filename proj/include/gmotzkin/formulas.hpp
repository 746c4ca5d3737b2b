#ifndef GMOTZKIN_FORMULAS_HPP
#define GMOTZKIN_FORMULAS_HPP

// Closed forms and recurrences for the path counts, evaluated exactly.
//
// Binomials are generalized: binom(m, 0) = 1 for every integer m, zero for
// a negative lower index, and the falling factorial over r! otherwise.

#include <cstddef>
#include <vector>

#include "gmotzkin/polyring.hpp"

namespace gmotzkin {

Integer binom(long m, long r);
Integer catalan(std::size_t n);

// G_n^{uvv}(a,b,c), five equivalent expansions. Throws std::invalid_argument
// for a form outside 1..5.
Polynomial g_uvv_closed(std::size_t n, int form);

// The two triple sums with the additional (-1)^l binom(k+l-1,l) b^l factor.
// They equal [x^n] G^{uvu}(a, b, c - b^2), not G_n^{uvv}. Forms 1..2.
Polynomial g_uvv_closed_literal(std::size_t n, int form);

// Gbar_n^{uvv}(a,b,c): no h-steps on the axis. Forms 1..3.
Polynomial gbar_uvv_closed(std::size_t n, int form);

// Form 3 with b^{n-k-j} in place of b^{n-i-k-j}. Returned undivided, i.e.
// multiplied by n + 1, since the sum is not always divisible.
Polynomial gbar_uvv_closed_literal_times_np1(std::size_t n);

// Weighted Dyck (Narayana), Motzkin and large Schroeder polynomials in (a,b).
// dyck_weight(0) = 1.
Polynomial dyck_weight(std::size_t n);
Polynomial motzkin_weight(std::size_t n);
Polynomial schroder_weight(std::size_t n);

struct RelationReport {
    bool schroder_is_dyck_shift = false;     // S_n(a,b) = C_n(a+b, b)
    bool schroder_is_motzkin_shift = false;  // S_n(a,b) = (a+b) M_{n-1}(a+2b, (a+b)b)
    bool uvu_is_schroder = false;            // G_n^{uvu}(a,b,b^2) = S_n(a,b), from enumeration

    bool all() const { return schroder_is_dyck_shift && schroder_is_motzkin_shift && uvu_is_schroder; }
};

// Requires n >= 1; throws std::domain_error otherwise.
RelationReport relation_checks(std::size_t n);

// Number of fixed points of sigma among uvv-avoiding paths of length n.
Integer f_closed(std::size_t n);
Integer f_recurrence(std::size_t n);
// Entries 0..n of the class-A counts driving f_recurrence.
std::vector<Integer> fixed_class_a_sequence(std::size_t n);

}  // namespace gmotzkin

#endif  // GMOTZKIN_FORMULAS_HPP
