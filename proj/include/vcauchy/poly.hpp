#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "vcauchy/core.hpp"

namespace vcauchy {

/// Dense exponent vector; its size is the arity of the owning polynomial.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

/// Graded order on monomials: lower total degree first, then lexicographically
/// larger exponent vectors first (x1^2 < x1*x2 < x2^2).
struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

struct Term {
    Exponents exponents;
    BigInt coefficient;

    bool operator==(const Term&) const = default;
};

/// Sparse polynomial in a fixed number of variables with big-integer
/// coefficients. Terms are kept sorted by GradedLex with no zero coefficients,
/// so structural equality is polynomial equality.
class MultiPoly {
public:
    explicit MultiPoly(std::size_t arity = 0) : arity_(arity) {}

    static MultiPoly constant(std::size_t arity, const BigInt& c);
    static MultiPoly monomial(std::size_t arity, Exponents exponents, const BigInt& c = 1);
    /// x_{index+1}^power (zero-based index).
    static MultiPoly variable(std::size_t arity, std::size_t index, int power = 1);
    /// Builds from arbitrary (possibly repeated or zero) terms.
    static MultiPoly from_terms(std::size_t arity, std::vector<Term> terms);

    std::size_t arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    std::span<const Term> terms() const { return terms_; }

    /// Largest total degree of any term; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& operator*=(const BigInt& scalar);

    bool operator==(const MultiPoly&) const = default;

private:
    std::size_t arity_;
    std::vector<Term> terms_;
};

MultiPoly operator+(MultiPoly a, const MultiPoly& b);
MultiPoly operator-(MultiPoly a, const MultiPoly& b);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator*(MultiPoly a, const BigInt& scalar);

/// Exact product; with a cap, terms of total degree above it are dropped.
/// Throws ArityMismatch.
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b,
                   std::optional<int> total_degree_cap = std::nullopt);

/// Throws ArityMismatch if the exponent vector has the wrong size.
BigInt coefficient_of(const MultiPoly& p, const Exponents& exponents);

MultiPoly truncate(const MultiPoly& p, int total_degree_cap);

/// Places p's variables at positions [offset, offset + p.arity()) of a wider ring.
MultiPoly embed(const MultiPoly& p, std::size_t arity, std::size_t offset);

MultiPoly swap_variables(const MultiPoly& p, std::size_t i, std::size_t j);

/// x1..xK followed by y1..yN.
std::vector<std::string> xy_variable_names(std::size_t x_count, std::size_t y_count);
/// x1..xN.
std::vector<std::string> x_variable_names(std::size_t count);

/// Human-readable rendering such as "1 - x1*y1 + 2*x1^2". Shows at most
/// `max_terms` terms (0 = all) followed by a count of the omitted ones.
std::string to_string(const MultiPoly& p, std::span<const std::string> names = {},
                      std::size_t max_terms = 0);

/// [{"exp": [...], "coef": "..."}, ...] in GradedLex order.
void to_json(nlohmann::json& j, const MultiPoly& p);
/// Arity is taken from the first term; an empty list yields the zero polynomial of arity 0.
void from_json(const nlohmann::json& j, MultiPoly& p);
/// As from_json, with the arity fixed by the caller (needed for the zero polynomial).
MultiPoly poly_from_json(const nlohmann::json& j, std::size_t arity);

} // namespace vcauchy
