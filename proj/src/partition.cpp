#include "vcauchy/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>
#include <stdexcept>

#include <boost/container_hash/hash.hpp>
#include <fmt/format.h>

namespace vcauchy {

namespace {

void check_weight(int weight)
{
    if (weight > kMaxEnumerationWeight)
        throw CapExceeded(fmt::format("enumeration weight {} exceeds the limit {}", weight,
                                      kMaxEnumerationWeight));
}

void sort_graded(std::vector<Partition>& ps) { std::sort(ps.begin(), ps.end()); }

// Partitions with parts <= max_part and at most max_len parts, weight exactly remaining.
void fill_partitions(std::vector<int>& prefix, int remaining, int max_part, int max_len,
                     std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    if (max_len == 0)
        return;
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
        prefix.push_back(p);
        fill_partitions(prefix, remaining - p, p, max_len - 1, out);
        prefix.pop_back();
    }
}

} // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(std::string_view text)
{
    const auto trim = [](std::string_view t) {
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front())))
            t.remove_prefix(1);
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back())))
            t.remove_suffix(1);
        return t;
    };
    const std::string_view original = text;
    text = trim(text);
    if (text.empty() || text == "-")
        return {};
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        auto token = trim(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
        int value = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
            throw std::invalid_argument(fmt::format("malformed partition '{}'", original));
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::strong_ordering Partition::operator<=>(const Partition& other) const
{
    if (auto c = weight() <=> other.weight(); c != 0)
        return c;
    return std::lexicographical_compare_three_way(parts_.begin(), parts_.end(),
                                                  other.parts_.begin(), other.parts_.end());
}

std::string to_string(const Partition& p)
{
    if (p.empty())
        return "-";
    return fmt::format("{}", fmt::join(p.parts(), ","));
}

Partition conjugate(const Partition& p)
{
    std::vector<int> parts(static_cast<std::size_t>(p.largest()), 0);
    for (int part : p.parts())
        for (int i = 0; i < part; ++i)
            ++parts[static_cast<std::size_t>(i)];
    return Partition(std::move(parts));
}

bool interlaces(const Partition& outer, const Partition& inner)
{
    if (outer.length() > inner.length() + 1)
        return false;
    for (std::size_t i = 0; i < inner.length(); ++i)
        if (outer.part(i) < inner.part(i) || inner.part(i) < outer.part(i + 1))
            return false;
    return true;
}

bool contains(const Partition& outer, const Partition& inner)
{
    if (inner.length() > outer.length())
        return false;
    for (std::size_t i = 0; i < inner.length(); ++i)
        if (inner.part(i) > outer.part(i))
            return false;
    return true;
}

BigInt z_lambda(const Partition& p)
{
    BigInt z = 1;
    std::size_t i = 0;
    while (i < p.length()) {
        const int part = p.part(i);
        int multiplicity = 0;
        for (; i < p.length() && p.part(i) == part; ++i) {
            ++multiplicity;
            z *= part;
            z *= multiplicity;
        }
    }
    return z;
}

StraightenResult straighten(const Composition& c)
{
    const auto l = static_cast<int>(c.entries.size());
    std::vector<int> shifted(c.entries.size());
    for (int i = 0; i < l; ++i) {
        shifted[static_cast<std::size_t>(i)] = c.entries[static_cast<std::size_t>(i)] + (l - 1 - i);
        if (shifted[static_cast<std::size_t>(i)] < 0)
            return std::nullopt;
    }
    int inversions = 0;
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) {
            const int a = shifted[static_cast<std::size_t>(i)];
            const int b = shifted[static_cast<std::size_t>(j)];
            if (a == b)
                return std::nullopt;
            if (a < b)
                ++inversions;
        }
    std::sort(shifted.begin(), shifted.end(), std::greater<>());
    for (int i = 0; i < l; ++i)
        shifted[static_cast<std::size_t>(i)] -= l - 1 - i;
    return SignedPartition{inversions % 2 == 0 ? 1 : -1, Partition(std::move(shifted))};
}

std::vector<Partition> enumerate_partitions_in_box(int rows, int cols)
{
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("box dimensions must be nonnegative");
    check_weight(rows * cols);
    std::vector<Partition> out;
    std::vector<int> prefix;
    for (int w = 0; w <= rows * cols; ++w)
        fill_partitions(prefix, w, cols, rows, out);
    sort_graded(out);
    return out;
}

std::vector<Partition> enumerate_interlacing_above(const Partition& inner, int weight_cap)
{
    const int base = inner.weight();
    if (weight_cap < base)
        throw std::invalid_argument(
            fmt::format("weight cap {} is below |{}| = {}", weight_cap, to_string(inner), base));
    check_weight(weight_cap);

    // mu_{i+1} ranges over [inner_{i+1}, inner_i] for i >= 1; mu_1 is unbounded above.
    const std::size_t len = inner.length() + 1;
    std::vector<int> mu(len, 0);
    std::vector<Partition> out;
    auto recurse = [&](auto&& self, std::size_t i, int extra) -> void {
        if (i == len) {
            for (int top = inner.part(0); top - inner.part(0) + extra <= weight_cap - base; ++top) {
                mu[0] = top;
                out.emplace_back(mu);
            }
            return;
        }
        for (int v = inner.part(i); v <= inner.part(i - 1); ++v) {
            const int grown = extra + v - inner.part(i);
            if (grown > weight_cap - base)
                break;
            mu[i] = v;
            self(self, i + 1, grown);
        }
    };
    recurse(recurse, 1, 0);
    sort_graded(out);
    return out;
}

std::vector<Partition> enumerate_interlacing_below(const Partition& outer)
{
    // nu_i ranges over [outer_{i+1}, outer_i].
    const std::size_t len = outer.length();
    std::vector<int> nu(len, 0);
    std::vector<Partition> out;
    auto recurse = [&](auto&& self, std::size_t i) -> void {
        if (i == len) {
            out.emplace_back(nu);
            return;
        }
        for (int v = outer.part(i + 1); v <= outer.part(i); ++v) {
            nu[i] = v;
            self(self, i + 1);
        }
    };
    recurse(recurse, 0);
    sort_graded(out);
    return out;
}

std::vector<Partition> partitions_of(int weight)
{
    check_weight(weight);
    std::vector<Partition> out;
    std::vector<int> prefix;
    fill_partitions(prefix, weight, weight, weight, out);
    sort_graded(out);
    return out;
}

std::vector<Partition> partitions_up_to(int weight)
{
    check_weight(weight);
    std::vector<Partition> out;
    std::vector<int> prefix;
    for (int w = 0; w <= weight; ++w)
        fill_partitions(prefix, w, w, w, out);
    sort_graded(out);
    return out;
}

} // namespace vcauchy

std::size_t std::hash<vcauchy::Partition>::operator()(const vcauchy::Partition& p) const noexcept
{
    return boost::hash_range(p.parts().begin(), p.parts().end());
}
