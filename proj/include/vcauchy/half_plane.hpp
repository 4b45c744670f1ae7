#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "vcauchy/partition.hpp"
#include "vcauchy/qseries.hpp"

namespace vcauchy {

/// Interlacing chain lambda(0) > lambda(1) > ... > lambda(n) = empty, each
/// slice interlacing the next. Validated on construction.
class Chain {
public:
    /// Throws std::invalid_argument if the sequence is empty, does not end in
    /// the empty partition, or a consecutive pair fails to interlace.
    explicit Chain(std::vector<Partition> slices);

    std::span<const Partition> slices() const { return slices_; }
    std::size_t steps() const { return slices_.size() - 1; }
    const Partition& top() const { return slices_.front(); }
    int weight() const;

    /// Drops trailing empty slices beyond the terminal one.
    Chain trimmed() const;

    bool operator==(const Chain&) const = default;
    auto operator<=>(const Chain&) const = default;

private:
    std::vector<Partition> slices_;
};

std::string to_string(const Chain& c);

/// Finite weakly bi-decreasing array pi(i, j), i >= j >= 1, zero above the
/// diagonal. Stored as rows: rows()[i-1] holds pi(i, 1), pi(i, 2), ... with
/// trailing zeros dropped, and no trailing empty rows.
class HalfPlanePartition {
public:
    HalfPlanePartition() = default;
    /// Throws std::invalid_argument unless the rows describe a half plane partition.
    explicit HalfPlanePartition(std::vector<std::vector<int>> rows);
    /// Builds from (i, j) -> value with one-based coordinates; zero values are ignored.
    static HalfPlanePartition from_cells(const std::map<std::pair<int, int>, int>& cells);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    /// pi(i, j) with one-based indices, zero outside the support.
    int at(int i, int j) const;
    bool empty() const { return rows_.empty(); }

    bool operator==(const HalfPlanePartition&) const = default;
    auto operator<=>(const HalfPlanePartition&) const = default;

private:
    std::vector<std::vector<int>> rows_;
};

struct HppStats {
    int weight;
    int height;

    bool operator==(const HppStats&) const = default;
};

/// Diagonal slices (pi_k)_j = pi(j + k, j) for each nonempty k, then one empty slice.
Chain slices(const HalfPlanePartition& pi);

/// The unique half plane partition whose diagonal slices are the chain.
HalfPlanePartition from_chain(const Chain& c);

/// Weight is the sum of entries; height is the largest i with pi(i, 1) > 0
/// (zero for the empty array).
HppStats hpp_stats(const HalfPlanePartition& pi);

/// All chains lambda = lambda(0) > ... > lambda(n) = empty with exactly n
/// steps, optionally restricted to total slice weight <= weight_cap. Built
/// upward from the empty partition one interlacing step at a time.
std::vector<Chain> enumerate_chains(const Partition& lambda, int steps,
                                    std::optional<int> weight_cap = std::nullopt);

/// Sum over chains of lambda with exactly n steps of q^{weight}, truncated at `order`.
QSeries chain_series(const Partition& lambda, int steps, int order);

/// Sum over all half plane partitions with top slice lambda of q^{|pi|},
/// truncated at `order`. Chains are trimmed and deduplicated, so each half
/// plane partition is counted once however long its chain was written.
QSeries hpp_series(const Partition& lambda, int order);

/// c[n] = number of plane partitions of weight n for n <= weight_cap, obtained
/// by gluing a lower and an upper half plane partition along a shared
/// diagonal slice lambda (total weight |pi| + |pi'| - |lambda|).
std::vector<BigInt> enumerate_plane_partitions(int weight_cap);

/// Row-per-line tableau, e.g. "5\n4 3\n3 2 1\n2\n".
std::string render_tableau(const HalfPlanePartition& pi);

/// {"rows": [[r1c1], [r2c1, r2c2], ...]}.
void to_json(nlohmann::json& j, const HalfPlanePartition& pi);
void from_json(const nlohmann::json& j, HalfPlanePartition& pi);

} // namespace vcauchy
