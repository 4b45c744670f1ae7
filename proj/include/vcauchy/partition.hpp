#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vcauchy/core.hpp"

namespace vcauchy {

/// Weakly decreasing sequence of positive integers. Zero parts are stripped on
/// construction, so two partitions compare equal iff their diagrams coincide.
///
/// Ordering is graded-lexicographic: by weight first, then lexicographically on
/// the parts. This is the order every enumeration in the library returns.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    /// Throws std::invalid_argument on negative or increasing entries.
    explicit Partition(std::vector<int> parts);

    /// Parses "5,3,1"; "-" (or the empty string) is the empty partition.
    static Partition parse(std::string_view text);

    std::span<const int> parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int weight() const;

    /// Zero-based part access, zero-padded past the length.
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    int largest() const { return part(0); }

    bool operator==(const Partition&) const = default;
    std::strong_ordering operator<=>(const Partition& other) const;

private:
    std::vector<int> parts_;
};

/// "5,3,1"; the empty partition prints as "-".
std::string to_string(const Partition& p);

/// Arbitrary integer tuple, as arises from strings of creation-operator indices.
struct Composition {
    std::vector<int> entries;

    bool operator==(const Composition&) const = default;
};

struct SignedPartition {
    int sign = 1;
    Partition partition;

    bool operator==(const SignedPartition&) const = default;
};

/// Straightening either vanishes (nullopt) or yields a sign and a partition.
using StraightenResult = std::optional<SignedPartition>;

Partition conjugate(const Partition& p);

/// True iff `outer` interlaces `inner`: outer_i >= inner_i >= outer_{i+1} for
/// every i, with l(outer) <= l(inner) + 1.
bool interlaces(const Partition& outer, const Partition& inner);

/// Diagram containment: inner_i <= outer_i for every i.
bool contains(const Partition& outer, const Partition& inner);

BigInt z_lambda(const Partition& p);

/// Rewrites the Schur element of a composition c as +/- that of a partition.
/// With delta = (l-1, ..., 0), c + delta must be nonnegative and free of
/// repeats; the sign is that of the sort into strictly decreasing order.
StraightenResult straighten(const Composition& c);

/// All partitions with at most `rows` parts, each at most `cols`.
std::vector<Partition> enumerate_partitions_in_box(int rows, int cols);

/// All mu interlacing `inner` with |mu| <= weight_cap.
/// Throws std::invalid_argument if weight_cap < |inner|.
std::vector<Partition> enumerate_interlacing_above(const Partition& inner, int weight_cap);

/// All nu interlaced by `outer` (finite, no cap needed).
std::vector<Partition> enumerate_interlacing_below(const Partition& outer);

std::vector<Partition> partitions_of(int weight);
std::vector<Partition> partitions_up_to(int weight);

} // namespace vcauchy

template <>
struct std::hash<vcauchy::Partition> {
    std::size_t operator()(const vcauchy::Partition& p) const noexcept;
};
