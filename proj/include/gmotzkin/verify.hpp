#ifndef GMOTZKIN_VERIFY_HPP
#define GMOTZKIN_VERIFY_HPP

// The acceptance suite: nine criteria, each a list of exact-equality checks
// against the enumeration oracle.

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gmotzkin/polyring.hpp"

namespace gmotzkin {

struct VerifyConfig {
    // Bound for the avoidance classes and the bijection.
    std::size_t class_max_n = 10;
    // Bound for unconstrained enumeration and the structural sweep.
    std::size_t full_max_n = 8;
    std::size_t series_order = 30;
};

struct CheckLine {
    std::string label;
    bool pass = false;
    std::string detail;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<CheckLine> checks;

    bool pass() const;
};

inline constexpr int kCriterionCount = 9;

// Caches oracle polynomials across criteria.
class Verifier {
public:
    explicit Verifier(VerifyConfig config);
    ~Verifier();
    Verifier(const Verifier&) = delete;
    Verifier& operator=(const Verifier&) = delete;

    // Throws std::out_of_range for an id outside 1..9.
    CriterionResult run(int id);
    std::vector<CriterionResult> run_all();

    const VerifyConfig& config() const { return config_; }

private:
    struct Oracle;

    CriterionResult closed_forms();
    CriterionResult series_vs_oracle();
    CriterionResult substitution_identities();
    CriterionResult bijection_suite();
    CriterionResult figure_two();
    CriterionResult fixed_points_agreement();
    CriterionResult specialization_table();
    CriterionResult schroder_relations();
    CriterionResult structure_suite();

    VerifyConfig config_;
    std::unique_ptr<Oracle> oracle_;
};

// Rows of the specialization table for G^{uvv}: a weight triple and the
// printed closed form (P - sqrt(R)) / D. Numeric rows only; the parametric
// rows are checked directly against the Motzkin and Schroeder polynomials.
struct TableRow {
    int a, b, c;
    std::vector<long> numerator;    // P, low to high in x
    std::vector<long> radicand;     // R
    std::vector<long> denominator;  // D as printed
    const char* label;
};
const std::vector<TableRow>& specialization_rows();

// Power-series root y(0) = 1 of Q y^2 - P y + 1 = 0 with Q = (P^2 - R)/4.
// Throws std::domain_error when Q is not integral or has a constant term.
std::vector<Integer> quadratic_root_series(const std::vector<long>& numerator, const std::vector<long>& radicand,
                                           std::size_t order);

// The length-25 path drawn in the introductory figure.
inline constexpr const char* kIntroFigureWord = "huvuuudhhuvuvddhuuuhddudduuvd";
// The worked example of sigma.
inline constexpr const char* kSigmaExampleInput = "uuudvvuudvuuuuuvdvvvhuuhdvuuuvhvuvuuhudvvv";
inline constexpr const char* kSigmaExampleOutput = "uudduuvduuuuvvddhuhuvduuuvhvuuhuddvv";

// Table of fixed-point counts for n = 0..10.
const std::vector<long>& fixed_point_table();

}  // namespace gmotzkin

#endif  // GMOTZKIN_VERIFY_HPP
