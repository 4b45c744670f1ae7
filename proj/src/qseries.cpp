#include "vcauchy/qseries.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace vcauchy {

QSeries::QSeries(int order)
{
    if (order < 0)
        throw std::invalid_argument("series order must be nonnegative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, BigInt(0));
}

QSeries::QSeries(int order, std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs))
{
    if (order < 0 || coeffs_.size() != static_cast<std::size_t>(order) + 1)
        throw std::invalid_argument(
            fmt::format("series of order {} needs {} coefficients, got {}", order, order + 1,
                        coeffs_.size()));
}

QSeries QSeries::one(int order) { return monomial(order, 0); }

QSeries QSeries::monomial(int order, int degree, const BigInt& c)
{
    QSeries s(order);
    if (degree >= 0 && degree <= order)
        s[degree] = c;
    return s;
}

QSeries QSeries::truncated(int order) const
{
    if (order > this->order())
        throw CapExceeded("cannot raise the order of a truncated series");
    return QSeries(order, std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

QSeries QSeries::operator-() const
{
    QSeries s = *this;
    for (auto& c : s.coeffs_)
        c = -c;
    return s;
}

QSeries& QSeries::operator+=(const QSeries& other)
{
    coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] += other.coeffs_[k];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& other)
{
    coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] -= other.coeffs_[k];
    return *this;
}

QSeries& QSeries::operator*=(const QSeries& other)
{
    const std::size_t n = std::min(coeffs_.size(), other.coeffs_.size());
    std::vector<BigInt> out(n, BigInt(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; i + j < n; ++j)
            if (!other.coeffs_[j].is_zero())
                out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    coeffs_ = std::move(out);
    return *this;
}

QSeries& QSeries::operator*=(const BigInt& scalar)
{
    for (auto& c : coeffs_)
        c *= scalar;
    return *this;
}

QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
QSeries operator*(QSeries a, const QSeries& b) { return a *= b; }

QSeries expand_factor_product(std::span<const Factor> factors, int order)
{
    QSeries result = QSeries::one(order);
    for (const auto& f : factors) {
        if (f.exponent <= 0)
            throw std::invalid_argument(
                fmt::format("factor exponent must be positive, got {}", f.exponent));
        if (f.exponent > order || f.multiplicity == 0)
            continue;
        if (f.multiplicity > 0) {
            // Multiply by (1 - q^e) in place, high degrees first.
            for (int m = 0; m < f.multiplicity; ++m)
                for (int k = order; k >= f.exponent; --k)
                    result[k] -= result[k - f.exponent];
        } else {
            // Divide by (1 - q^e): running sum along residue classes mod e.
            for (int m = 0; m < -f.multiplicity; ++m)
                for (int k = f.exponent; k <= order; ++k)
                    result[k] += result[k - f.exponent];
        }
    }
    return result;
}

std::string to_string(const QSeries& s, std::size_t max_terms)
{
    std::string out;
    std::size_t shown = 0;
    bool truncated_display = false;
    for (int k = 0; k <= s.order(); ++k) {
        const BigInt& c = s[k];
        if (c.is_zero())
            continue;
        if (max_terms != 0 && shown == max_terms) {
            truncated_display = true;
            break;
        }
        const bool negative = c < 0;
        const BigInt magnitude = negative ? BigInt(-c) : c;
        std::string mono = k == 0 ? "" : (k == 1 ? "q" : fmt::format("q^{}", k));
        std::string body;
        if (mono.empty())
            body = magnitude.str();
        else if (magnitude == 1)
            body = mono;
        else
            body = magnitude.str() + "*" + mono;
        if (shown == 0)
            out += (negative ? "-" : "") + body;
        else
            out += (negative ? " - " : " + ") + body;
        ++shown;
    }
    if (shown == 0)
        out = "0";
    if (truncated_display)
        out += " + ...";
    out += s.order() == 0 ? std::string(" + O(q)") : fmt::format(" + O(q^{})", s.order() + 1);
    return out;
}

void to_json(nlohmann::json& j, const QSeries& s)
{
    auto coeffs = nlohmann::json::array();
    for (const auto& c : s.coeffs())
        coeffs.push_back(c.str());
    j = nlohmann::json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

void from_json(const nlohmann::json& j, QSeries& s)
{
    std::vector<BigInt> coeffs;
    for (const auto& c : j.at("coeffs"))
        coeffs.emplace_back(c.get<std::string>());
    s = QSeries(j.at("order").get<int>(), std::move(coeffs));
}

} // namespace vcauchy
