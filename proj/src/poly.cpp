#include "vcauchy/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>
#include <fmt/format.h>

namespace vcauchy {

namespace {

struct ExponentsHash {
    std::size_t operator()(const Exponents& e) const noexcept
    {
        return boost::hash_range(e.begin(), e.end());
    }
};

void check_arity(std::size_t a, std::size_t b)
{
    if (a != b)
        throw ArityMismatch(fmt::format("arity mismatch: {} vs {}", a, b));
}

// Merge two sorted term lists; sign = -1 subtracts.
std::vector<Term> merge(const std::vector<Term>& a, std::span<const Term> b, int sign)
{
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    GradedLex less;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && less(a[i].exponents, b[j].exponents))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || less(b[j].exponents, a[i].exponents)) {
            out.push_back(b[j++]);
            if (sign < 0)
                out.back().coefficient = -out.back().coefficient;
        } else {
            BigInt c = a[i].coefficient;
            if (sign < 0)
                c -= b[j].coefficient;
            else
                c += b[j].coefficient;
            if (!c.is_zero())
                out.push_back(Term{a[i].exponents, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const
{
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db)
        return da < db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly MultiPoly::constant(std::size_t arity, const BigInt& c)
{
    return monomial(arity, Exponents(arity, 0), c);
}

MultiPoly MultiPoly::monomial(std::size_t arity, Exponents exponents, const BigInt& c)
{
    check_arity(arity, exponents.size());
    MultiPoly p(arity);
    if (!c.is_zero())
        p.terms_.push_back(Term{std::move(exponents), c});
    return p;
}

MultiPoly MultiPoly::variable(std::size_t arity, std::size_t index, int power)
{
    if (index >= arity)
        throw ArityMismatch(fmt::format("variable index {} outside arity {}", index, arity));
    Exponents e(arity, 0);
    e[index] = power;
    return monomial(arity, std::move(e));
}

MultiPoly MultiPoly::from_terms(std::size_t arity, std::vector<Term> terms)
{
    for (const auto& t : terms) {
        check_arity(arity, t.exponents.size());
        if (std::any_of(t.exponents.begin(), t.exponents.end(), [](int x) { return x < 0; }))
            throw std::invalid_argument("exponents must be nonnegative");
    }
    GradedLex less;
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return less(a.exponents, b.exponents); });
    MultiPoly p(arity);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().exponents == t.exponents)
            p.terms_.back().coefficient += t.coefficient;
        else {
            if (!p.terms_.empty() && p.terms_.back().coefficient.is_zero())
                p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().coefficient.is_zero())
        p.terms_.pop_back();
    return p;
}

int MultiPoly::degree() const
{
    // Sorted by degree, so the last term is of maximal degree.
    return terms_.empty() ? -1 : total_degree(terms_.back().exponents);
}

bool MultiPoly::is_homogeneous() const
{
    return terms_.empty() ||
           total_degree(terms_.front().exponents) == total_degree(terms_.back().exponents);
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly p = *this;
    for (auto& t : p.terms_)
        t.coefficient = -t.coefficient;
    return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other)
{
    check_arity(arity_, other.arity_);
    terms_ = merge(terms_, other.terms_, +1);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other)
{
    check_arity(arity_, other.arity_);
    terms_ = merge(terms_, other.terms_, -1);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const BigInt& scalar)
{
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_)
        t.coefficient *= scalar;
    return *this;
}

MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return poly_mul(a, b); }
MultiPoly operator*(MultiPoly a, const BigInt& scalar) { return a *= scalar; }

MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b, std::optional<int> total_degree_cap)
{
    check_arity(a.arity(), b.arity());
    const std::size_t arity = a.arity();
    if (a.is_zero() || b.is_zero())
        return MultiPoly(arity);

    std::unordered_map<Exponents, BigInt, ExponentsHash> acc;
    acc.reserve(a.size() * b.size());
    Exponents e(arity);
    for (const auto& ta : a.terms()) {
        const int da = total_degree(ta.exponents);
        for (const auto& tb : b.terms()) {
            // b is sorted by degree, so the rest of b is over the cap too.
            if (total_degree_cap && da + total_degree(tb.exponents) > *total_degree_cap)
                break;
            for (std::size_t k = 0; k < arity; ++k)
                e[k] = ta.exponents[k] + tb.exponents[k];
            auto [it, inserted] = acc.try_emplace(e);
            it->second += ta.coefficient * tb.coefficient;
        }
    }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [exps, coef] : acc)
        if (!coef.is_zero())
            terms.push_back(Term{exps, std::move(coef)});
    return MultiPoly::from_terms(arity, std::move(terms));
}

BigInt coefficient_of(const MultiPoly& p, const Exponents& exponents)
{
    check_arity(p.arity(), exponents.size());
    auto terms = p.terms();
    GradedLex less;
    auto it = std::lower_bound(terms.begin(), terms.end(), exponents,
                               [&](const Term& t, const Exponents& e) { return less(t.exponents, e); });
    if (it != terms.end() && it->exponents == exponents)
        return it->coefficient;
    return 0;
}

MultiPoly truncate(const MultiPoly& p, int total_degree_cap)
{
    std::vector<Term> kept;
    for (const auto& t : p.terms()) {
        if (total_degree(t.exponents) > total_degree_cap)
            break;
        kept.push_back(t);
    }
    return MultiPoly::from_terms(p.arity(), std::move(kept));
}

MultiPoly embed(const MultiPoly& p, std::size_t arity, std::size_t offset)
{
    if (offset + p.arity() > arity)
        throw ArityMismatch(fmt::format("cannot embed arity {} at offset {} into arity {}",
                                        p.arity(), offset, arity));
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) {
        Exponents e(arity, 0);
        std::copy(t.exponents.begin(), t.exponents.end(), e.begin() + static_cast<long>(offset));
        terms.push_back(Term{std::move(e), t.coefficient});
    }
    return MultiPoly::from_terms(arity, std::move(terms));
}

MultiPoly swap_variables(const MultiPoly& p, std::size_t i, std::size_t j)
{
    if (i >= p.arity() || j >= p.arity())
        throw ArityMismatch("variable index out of range");
    std::vector<Term> terms(p.terms().begin(), p.terms().end());
    for (auto& t : terms)
        std::swap(t.exponents[i], t.exponents[j]);
    return MultiPoly::from_terms(p.arity(), std::move(terms));
}

std::vector<std::string> xy_variable_names(std::size_t x_count, std::size_t y_count)
{
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= x_count; ++i)
        names.push_back(fmt::format("x{}", i));
    for (std::size_t j = 1; j <= y_count; ++j)
        names.push_back(fmt::format("y{}", j));
    return names;
}

std::vector<std::string> x_variable_names(std::size_t count) { return xy_variable_names(count, 0); }

std::string to_string(const MultiPoly& p, std::span<const std::string> names, std::size_t max_terms)
{
    if (p.is_zero())
        return "0";
    std::vector<std::string> fallback;
    if (names.size() < p.arity()) {
        fallback = x_variable_names(p.arity());
        names = fallback;
    }
    std::string out;
    std::size_t shown = 0;
    for (const auto& t : p.terms()) {
        if (max_terms != 0 && shown == max_terms) {
            out += fmt::format(" + ... ({} more terms)", p.size() - shown);
            break;
        }
        std::string mono;
        for (std::size_t k = 0; k < p.arity(); ++k) {
            if (t.exponents[k] == 0)
                continue;
            if (!mono.empty())
                mono += '*';
            mono += names[k];
            if (t.exponents[k] > 1)
                mono += fmt::format("^{}", t.exponents[k]);
        }
        const bool negative = t.coefficient < 0;
        const BigInt magnitude = negative ? BigInt(-t.coefficient) : t.coefficient;
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
    return out;
}

void to_json(nlohmann::json& j, const MultiPoly& p)
{
    j = nlohmann::json::array();
    for (const auto& t : p.terms())
        j.push_back({{"exp", t.exponents}, {"coef", t.coefficient.str()}});
}

MultiPoly poly_from_json(const nlohmann::json& j, std::size_t arity)
{
    std::vector<Term> terms;
    for (const auto& item : j) {
        terms.push_back(Term{item.at("exp").get<Exponents>(),
                             BigInt(item.at("coef").get<std::string>())});
    }
    return MultiPoly::from_terms(arity, std::move(terms));
}

void from_json(const nlohmann::json& j, MultiPoly& p)
{
    const std::size_t arity = j.empty() ? 0 : j.front().at("exp").size();
    p = poly_from_json(j, arity);
}

} // namespace vcauchy
