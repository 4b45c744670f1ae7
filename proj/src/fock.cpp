#include "vcauchy/fock.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace vcauchy {

FockState::FockState(std::size_t arity, int weight_cap) : arity_(arity), weight_cap_(weight_cap)
{
    if (weight_cap < 0)
        throw std::invalid_argument("weight cap must be nonnegative");
}

FockState FockState::vacuum(std::size_t arity, int weight_cap)
{
    FockState s(arity, weight_cap);
    s.add(Partition{}, MultiPoly::constant(arity, 1));
    return s;
}

FockState FockState::basis(std::size_t arity, const Partition& lambda, const BigInt& sign)
{
    FockState s(arity, lambda.weight());
    s.add(lambda, MultiPoly::constant(arity, sign));
    return s;
}

MultiPoly FockState::amplitude(const Partition& lambda) const
{
    auto it = amplitudes_.find(lambda);
    return it == amplitudes_.end() ? MultiPoly(arity_) : it->second;
}

void FockState::add(const Partition& lambda, const MultiPoly& coef)
{
    if (coef.arity() != arity_)
        throw ArityMismatch(
            fmt::format("amplitude arity {} does not match state arity {}", coef.arity(), arity_));
    if (lambda.weight() > weight_cap_)
        throw CapExceeded(fmt::format("|{}| exceeds the state's weight cap {}", to_string(lambda),
                                      weight_cap_));
    if (coef.is_zero())
        return;
    auto [it, inserted] = amplitudes_.try_emplace(lambda, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second.is_zero())
            amplitudes_.erase(it);
    }
}

FockState FockState::operator-() const
{
    FockState s = *this;
    for (auto& [lambda, coef] : s.amplitudes_)
        coef = -coef;
    return s;
}

bool FockState::operator==(const FockState& other) const
{
    return arity_ == other.arity_ && amplitudes_ == other.amplitudes_;
}

FockState basis_from_composition(const Composition& c, std::size_t arity)
{
    int weight = 0;
    for (int e : c.entries) {
        if (e < 0)
            throw std::invalid_argument(
                fmt::format("creation index must be nonnegative, got {}", e));
        weight += e;
    }
    FockState s(arity, weight);
    if (auto straight = straighten(c))
        s.add(straight->partition, MultiPoly::constant(arity, straight->sign));
    return s;
}

int inner_product(const Partition& lambda, const Partition& mu)
{
    if (conjugate(lambda) != mu)
        return 0;
    return lambda.weight() % 2 == 0 ? 1 : -1;
}

int inner_product_shuffle_oracle(const Partition& lambda, const Partition& mu)
{
    const auto l = static_cast<int>(lambda.length());
    const auto k = static_cast<int>(mu.length());
    const int n = l + k;
    // sigma(n), sigma(n-1), ..., sigma(1) in that order.
    std::vector<int> descending;
    descending.reserve(static_cast<std::size_t>(n));
    for (int i = l; i >= 1; --i)
        descending.push_back(k + i - lambda.part(static_cast<std::size_t>(i - 1)));
    for (int j = 1; j <= k; ++j)
        descending.push_back(mu.part(static_cast<std::size_t>(j - 1)) + k - j + 1);

    std::vector<int> sigma(descending.rbegin(), descending.rend());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : sigma) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            return 0;
        seen[static_cast<std::size_t>(v)] = true;
    }
    int inversions = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (sigma[static_cast<std::size_t>(a)] > sigma[static_cast<std::size_t>(b)])
                ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

FockState apply_half_vertex(const FockState& s, std::size_t var_index, int degree_cap)
{
    if (var_index >= s.arity())
        throw ArityMismatch(
            fmt::format("variable index {} outside state arity {}", var_index, s.arity()));
    if (degree_cap < s.weight_cap())
        throw CapExceeded(fmt::format("degree cap {} is below the state's weight cap {}",
                                      degree_cap, s.weight_cap()));
    FockState out(s.arity(), degree_cap);
    for (const auto& [lambda, coef] : s.amplitudes()) {
        const int base = lambda.weight();
        for (const auto& mu : enumerate_interlacing_above(lambda, degree_cap))
            out.add(mu, poly_mul(coef, MultiPoly::variable(s.arity(), var_index, mu.weight() - base)));
    }
    return out;
}

FockState vacuum_product_state(std::size_t num_vars, int degree_cap, std::size_t arity,
                               std::size_t first_var)
{
    if (first_var + num_vars > arity)
        throw ArityMismatch(fmt::format("{} variables at offset {} do not fit arity {}", num_vars,
                                        first_var, arity));
    FockState s = FockState::vacuum(arity, degree_cap);
    // phi+(x1) ... phi+(xN) |0>: the operator nearest the vacuum acts first.
    for (std::size_t i = num_vars; i-- > 0;)
        s = apply_half_vertex(s, first_var + i, degree_cap);
    return s;
}

FockState vacuum_product_state(std::size_t num_vars, int degree_cap)
{
    return vacuum_product_state(num_vars, degree_cap, num_vars, 0);
}

MultiPoly contract(const FockState& bra, const FockState& ket)
{
    if (bra.arity() != ket.arity())
        throw ArityMismatch("contracted states have different arities");
    MultiPoly out(bra.arity());
    for (const auto& [lambda, coef] : bra.amplitudes()) {
        const Partition partner = conjugate(lambda);
        const int pairing = inner_product(lambda, partner);
        auto it = ket.amplitudes().find(partner);
        if (it == ket.amplitudes().end())
            continue;
        MultiPoly term = poly_mul(coef, it->second);
        if (pairing < 0)
            out -= term;
        else
            out += term;
    }
    return out;
}

MultiPoly normal_ordered_expectation(std::span<const HalfVertex> word, std::size_t arity)
{
    for (const auto& op : word)
        if (op.var >= arity)
            throw ArityMismatch(fmt::format("operator variable {} outside arity {}", op.var, arity));
    std::vector<HalfVertex> ops(word.begin(), word.end());
    MultiPoly result = MultiPoly::constant(arity, 1);
    bool swapped = true;
    while (swapped) {
        swapped = false;
        for (std::size_t p = 0; p + 1 < ops.size(); ++p) {
            if (ops[p].kind == HalfVertex::Kind::minus && ops[p + 1].kind == HalfVertex::Kind::plus) {
                Exponents e(arity, 0);
                ++e[ops[p].var];
                ++e[ops[p + 1].var];
                MultiPoly factor = MultiPoly::constant(arity, 1) - MultiPoly::monomial(arity, e);
                result = poly_mul(result, factor);
                std::swap(ops[p], ops[p + 1]);
                swapped = true;
            }
        }
    }
    return result;
}

void to_json(nlohmann::json& j, const FockState& s)
{
    j = nlohmann::json::array();
    for (const auto& [lambda, coef] : s.amplitudes())
        j.push_back({{"partition", to_string(lambda)}, {"amplitude", coef}});
}

} // namespace vcauchy
