#include "vcauchy/half_plane.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

namespace vcauchy {

Chain::Chain(std::vector<Partition> slices) : slices_(std::move(slices))
{
    if (slices_.empty())
        throw std::invalid_argument("a chain needs at least one slice");
    if (!slices_.back().empty())
        throw std::invalid_argument("a chain must end in the empty partition");
    for (std::size_t i = 0; i + 1 < slices_.size(); ++i)
        if (!interlaces(slices_[i], slices_[i + 1]))
            throw std::invalid_argument(fmt::format("slice {} does not interlace slice {}",
                                                    to_string(slices_[i]),
                                                    to_string(slices_[i + 1])));
}

int Chain::weight() const
{
    int w = 0;
    for (const auto& s : slices_)
        w += s.weight();
    return w;
}

Chain Chain::trimmed() const
{
    std::vector<Partition> kept = slices_;
    while (kept.size() >= 2 && kept[kept.size() - 2].empty())
        kept.pop_back();
    return Chain(std::move(kept));
}

std::string to_string(const Chain& c)
{
    std::vector<std::string> parts;
    for (const auto& s : c.slices())
        parts.push_back("(" + to_string(s) + ")");
    return fmt::format("{}", fmt::join(parts, " > "));
}

HalfPlanePartition::HalfPlanePartition(std::vector<std::vector<int>> rows) : rows_(std::move(rows))
{
    for (auto& row : rows_)
        while (!row.empty() && row.back() == 0)
            row.pop_back();
    while (!rows_.empty() && rows_.back().empty())
        rows_.pop_back();

    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto& row = rows_[r];
        if (row.size() > r + 1)
            throw std::invalid_argument(fmt::format("row {} has a cell above the diagonal", r + 1));
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] <= 0)
                throw std::invalid_argument("entries must be positive");
            if (c > 0 && row[c] > row[c - 1])
                throw std::invalid_argument(fmt::format("row {} is not weakly decreasing", r + 1));
            // Column condition pi(i, j) >= pi(i + 1, j) applies only for i >= j.
            if (r > 0 && c <= r - 1 && at(static_cast<int>(r), static_cast<int>(c + 1)) < row[c])
                throw std::invalid_argument(
                    fmt::format("column {} increases at row {}", c + 1, r + 1));
        }
    }
}

HalfPlanePartition HalfPlanePartition::from_cells(const std::map<std::pair<int, int>, int>& cells)
{
    std::vector<std::vector<int>> rows;
    for (const auto& [pos, value] : cells) {
        const auto [i, j] = pos;
        if (value == 0)
            continue;
        if (i < 1 || j < 1 || j > i)
            throw std::invalid_argument(fmt::format("cell ({}, {}) is outside i >= j >= 1", i, j));
        if (rows.size() < static_cast<std::size_t>(i))
            rows.resize(static_cast<std::size_t>(i));
        auto& row = rows[static_cast<std::size_t>(i - 1)];
        if (row.size() < static_cast<std::size_t>(j))
            row.resize(static_cast<std::size_t>(j), 0);
        row[static_cast<std::size_t>(j - 1)] = value;
    }
    return HalfPlanePartition(std::move(rows));
}

int HalfPlanePartition::at(int i, int j) const
{
    if (i < 1 || j < 1 || static_cast<std::size_t>(i) > rows_.size())
        return 0;
    const auto& row = rows_[static_cast<std::size_t>(i - 1)];
    return static_cast<std::size_t>(j) <= row.size() ? row[static_cast<std::size_t>(j - 1)] : 0;
}

Chain slices(const HalfPlanePartition& pi)
{
    std::vector<Partition> out;
    const int height = static_cast<int>(pi.rows().size());
    for (int k = 0; k < height; ++k) {
        std::vector<int> parts;
        for (int j = 1; pi.at(j + k, j) > 0; ++j)
            parts.push_back(pi.at(j + k, j));
        out.emplace_back(std::move(parts));
    }
    out.emplace_back();
    return Chain(std::move(out));
}

HalfPlanePartition from_chain(const Chain& c)
{
    std::map<std::pair<int, int>, int> cells;
    const auto s = c.slices();
    for (std::size_t k = 0; k < s.size(); ++k)
        for (std::size_t j = 0; j < s[k].length(); ++j) {
            const int col = static_cast<int>(j) + 1;
            cells[{col + static_cast<int>(k), col}] = s[k].part(j);
        }
    return HalfPlanePartition::from_cells(cells);
}

HppStats hpp_stats(const HalfPlanePartition& pi)
{
    int weight = 0;
    for (const auto& row : pi.rows())
        for (int v : row)
            weight += v;
    return {weight, static_cast<int>(pi.rows().size())};
}

std::vector<Chain> enumerate_chains(const Partition& lambda, int steps, std::optional<int> weight_cap)
{
    if (steps < 0)
        throw std::invalid_argument("chain length must be nonnegative");
    const int top = lambda.weight();
    const auto top_len = static_cast<int>(lambda.length());
    std::vector<Chain> out;
    if (weight_cap && *weight_cap < top)
        return out;

    // reversed[0] = empty, reversed[steps] = lambda.
    std::vector<Partition> reversed{Partition{}};
    auto recurse = [&](auto&& self, int filled, int partial) -> void {
        const Partition& current = reversed.back();
        if (filled == steps) {
            if (current == lambda)
                out.emplace_back(std::vector<Partition>(reversed.rbegin(), reversed.rend()));
            return;
        }
        // The next slice sits at chain position steps - filled - 1.
        const int position = steps - filled - 1;
        for (const auto& mu : enumerate_interlacing_above(current, top)) {
            if (!contains(lambda, mu))
                continue;
            // Going down one step shortens a partition by at most one part.
            if (static_cast<int>(mu.length()) < top_len - position)
                continue;
            const int grown = partial + mu.weight();
            // Slices above this one weigh at least |mu|; the top one is lambda.
            if (weight_cap && grown + (position > 0 ? top + (position - 1) * mu.weight() : 0) > *weight_cap)
                continue;
            reversed.push_back(mu);
            self(self, filled + 1, grown);
            reversed.pop_back();
        }
    };
    recurse(recurse, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

QSeries chain_series(const Partition& lambda, int steps, int order)
{
    QSeries s(order);
    for (const auto& chain : enumerate_chains(lambda, steps, order))
        s[chain.weight()] += 1;
    return s;
}

QSeries hpp_series(const Partition& lambda, int order)
{
    QSeries s(order);
    if (lambda.weight() > order)
        return s;
    // A half plane partition of weight <= order has at most `order` nonempty
    // slices, so order + 1 steps reach every one of them.
    std::set<Chain> seen;
    for (const auto& chain : enumerate_chains(lambda, order + 1, order))
        if (seen.insert(chain.trimmed()).second)
            s[chain.weight()] += 1;
    return s;
}

std::vector<BigInt> enumerate_plane_partitions(int weight_cap)
{
    if (weight_cap < 0)
        throw std::invalid_argument("weight cap must be nonnegative");
    if (weight_cap > kMaxEnumerationWeight)
        throw CapExceeded(fmt::format("weight cap {} exceeds the limit {}", weight_cap,
                                      kMaxEnumerationWeight));
    std::vector<BigInt> counts(static_cast<std::size_t>(weight_cap) + 1, BigInt(0));
    for (const auto& lambda : partitions_up_to(weight_cap)) {
        const QSeries g = hpp_series(lambda, weight_cap);
        const int shared = lambda.weight();
        for (int a = shared; a <= weight_cap; ++a) {
            if (g[a].is_zero())
                continue;
            for (int b = shared; a + b - shared <= weight_cap; ++b)
                counts[static_cast<std::size_t>(a + b - shared)] += g[a] * g[b];
        }
    }
    return counts;
}

std::string render_tableau(const HalfPlanePartition& pi)
{
    std::string out;
    for (const auto& row : pi.rows())
        out += fmt::format("{}\n", fmt::join(row, " "));
    return out;
}

void to_json(nlohmann::json& j, const HalfPlanePartition& pi) { j = {{"rows", pi.rows()}}; }

void from_json(const nlohmann::json& j, HalfPlanePartition& pi)
{
    pi = HalfPlanePartition(j.at("rows").get<std::vector<std::vector<int>>>());
}

} // namespace vcauchy
