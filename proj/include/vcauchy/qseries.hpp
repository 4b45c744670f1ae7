#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "vcauchy/core.hpp"

namespace vcauchy {

/// Power series in q known through q^order. Binary operations truncate to the
/// smaller order of the two operands.
class QSeries {
public:
    /// The zero series.
    explicit QSeries(int order);
    /// Throws std::invalid_argument unless coeffs.size() == order + 1.
    QSeries(int order, std::vector<BigInt> coeffs);

    static QSeries one(int order);
    static QSeries monomial(int order, int degree, const BigInt& c = 1);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const BigInt> coeffs() const { return coeffs_; }
    const BigInt& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    BigInt& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

    QSeries truncated(int order) const;

    QSeries operator-() const;
    QSeries& operator+=(const QSeries& other);
    QSeries& operator-=(const QSeries& other);
    QSeries& operator*=(const QSeries& other);
    QSeries& operator*=(const BigInt& scalar);

    bool operator==(const QSeries&) const = default;

private:
    std::vector<BigInt> coeffs_;
};

QSeries operator+(QSeries a, const QSeries& b);
QSeries operator-(QSeries a, const QSeries& b);
QSeries operator*(QSeries a, const QSeries& b);

/// One factor (1 - q^exponent)^multiplicity; negative multiplicities expand
/// through the geometric series.
struct Factor {
    int exponent;
    int multiplicity;
};

/// Truncated expansion of a finite product of Factors. Throws
/// std::invalid_argument on a nonpositive exponent.
QSeries expand_factor_product(std::span<const Factor> factors, int order);

/// "1 - q^2 - 2*q^3 + O(q^6)"; at most `max_terms` nonzero terms (0 = all).
std::string to_string(const QSeries& s, std::size_t max_terms = 0);

/// {"order": n, "coeffs": ["c0", ..., "cn"]}.
void to_json(nlohmann::json& j, const QSeries& s);
void from_json(const nlohmann::json& j, QSeries& s);

} // namespace vcauchy
