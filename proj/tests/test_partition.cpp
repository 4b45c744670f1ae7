#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "vcauchy/partition.hpp"

using namespace vcauchy;

namespace {

std::vector<int> to_parts(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

BigInt binomial(int n, int k)
{
    BigInt r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace

TEST_CASE("partition construction and parsing")
{
    CHECK(Partition{5, 3, 1}.weight() == 9);
    CHECK(Partition{2, 1, 0, 0} == Partition{2, 1});
    CHECK(Partition{}.empty());
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({3, -1}), std::invalid_argument);
    CHECK(Partition::parse("5,3,1") == Partition{5, 3, 1});
    CHECK(Partition::parse("-") == Partition{});
    CHECK(Partition::parse(" 2 , 2 ") == Partition{2, 2});
    CHECK_THROWS_AS(Partition::parse("2,x"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("1,3"), std::invalid_argument);
    CHECK(Partition::parse("") == Partition{});
    CHECK_THROWS_AS(Partition::parse("2,,1"), std::invalid_argument);
    CHECK(to_string(Partition{}) == "-");
    CHECK(to_string(Partition{5, 3, 1}) == "5,3,1");
    CHECK(Partition{3, 2}.part(5) == 0);
}

TEST_CASE("graded lexicographic order")
{
    const std::vector<Partition> sorted{{}, {1}, {1, 1}, {2}, {1, 1, 1}, {2, 1}, {3}};
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        CHECK(sorted[i] < sorted[i + 1]);
}

TEST_CASE("conjugate")
{
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(conjugate(Partition{5, 3, 1}) == Partition{3, 2, 2, 1, 1});
    CHECK(conjugate(Partition{1, 1, 1}) == Partition{3});

    for (int w = 0; w <= 12; ++w) {
        for (const auto& p : partitions_of(w)) {
            CHECK(conjugate(conjugate(p)) == p);
            CHECK(to_parts(conjugate(p)) == oracle::transpose(to_parts(p)));
        }
    }
}

TEST_CASE("interlacing")
{
    CHECK(interlaces(Partition{4, 2}, Partition{3}));
    CHECK(interlaces(Partition{}, Partition{}));
    CHECK_FALSE(interlaces(Partition{1, 1, 1}, Partition{1}));
    CHECK(interlaces(Partition{5, 3, 1}, Partition{4, 2}));
    CHECK_FALSE(interlaces(Partition{4, 2}, Partition{5, 3, 1}));

    const auto all = partitions_up_to(7);
    for (const auto& mu : all) {
        for (const auto& lambda : all) {
            const bool got = interlaces(mu, lambda);
            CHECK(got == oracle::interlace(to_parts(mu), to_parts(lambda)));
            if (got) {
                CHECK(mu.weight() >= lambda.weight());
                CHECK(mu.length() <= lambda.length() + 1);
                CHECK(contains(mu, lambda));
            }
        }
    }
}

TEST_CASE("z_lambda")
{
    CHECK(z_lambda(Partition{}) == 1);
    CHECK(z_lambda(Partition{1}) == 1);
    CHECK(z_lambda(Partition{2, 1, 1}) == 4);
    CHECK(z_lambda(Partition{1, 1, 1, 1}) == 24);
    CHECK(z_lambda(Partition{3, 3}) == 18);
    // sum over partitions of n of 1/z_lambda is 1, i.e. sum n!/z_lambda = n!
    for (int n = 1; n <= 8; ++n) {
        BigInt fact = 1;
        for (int i = 2; i <= n; ++i)
            fact *= i;
        BigInt total = 0;
        for (const auto& p : partitions_of(n)) {
            CHECK(fact % z_lambda(p) == 0);
            total += fact / z_lambda(p);
        }
        CHECK(total == fact);
    }
}

TEST_CASE("straighten")
{
    CHECK(straighten({{2, 1}}) == SignedPartition{1, Partition{2, 1}});
    CHECK_FALSE(straighten({{1, 2}}).has_value());
    CHECK(straighten({{0, 2}}) == SignedPartition{-1, Partition{1, 1}});
    CHECK(straighten({{}}) == SignedPartition{1, Partition{}});
    CHECK(straighten({{0, 0, 3}}) == SignedPartition{1, Partition{1, 1, 1}});
    CHECK_FALSE(straighten({{-2}}).has_value());
    CHECK_FALSE(straighten({{0, 1}}).has_value());
}

TEST_CASE("straighten undoes any permutation of the shifted entries")
{
    std::mt19937 rng(7);
    for (int w = 0; w <= 8; ++w) {
        for (const auto& p : partitions_of(w)) {
            const std::size_t l = p.length() + 2;  // pad with zeros to exercise the shift
            std::vector<int> shifted(l);
            for (std::size_t i = 0; i < l; ++i)
                shifted[i] = p.part(i) + static_cast<int>(l - 1 - i);
            for (int trial = 0; trial < 6; ++trial) {
                std::vector<int> order(l);
                std::iota(order.begin(), order.end(), 0);
                std::shuffle(order.begin(), order.end(), rng);
                Composition c;
                for (std::size_t i = 0; i < l; ++i)
                    c.entries.push_back(shifted[static_cast<std::size_t>(order[i])] - static_cast<int>(l - 1 - i));
                const auto r = straighten(c);
                REQUIRE(r.has_value());
                CHECK(r->partition == p);
                CHECK(r->sign == oracle::sign_of_permutation(order));
            }
        }
    }
}

TEST_CASE("partitions in a box")
{
    CHECK(enumerate_partitions_in_box(0, 5) == std::vector<Partition>{Partition{}});
    CHECK(enumerate_partitions_in_box(2, 2)
          == std::vector<Partition>{{}, {1}, {1, 1}, {2}, {2, 1}, {2, 2}});
    CHECK(enumerate_partitions_in_box(1, 3) == std::vector<Partition>{{}, {1}, {2}, {3}});
    for (int k = 0; k <= 6; ++k) {
        for (int n = 0; n <= 6; ++n) {
            const auto box = enumerate_partitions_in_box(k, n);
            CHECK(BigInt(box.size()) == binomial(k + n, k));
            CHECK(std::is_sorted(box.begin(), box.end()));
            for (const auto& p : box)
                CHECK((static_cast<int>(p.length()) <= k && p.largest() <= n));
        }
    }
}

TEST_CASE("interlacing above")
{
    CHECK(enumerate_interlacing_above(Partition{}, 2) == std::vector<Partition>{{}, {1}, {2}});
    const auto got = enumerate_interlacing_above(Partition{1}, 3);
    CHECK(std::set<Partition>(got.begin(), got.end())
          == std::set<Partition>{{1}, {2}, {3}, {1, 1}, {2, 1}});
    CHECK(std::is_sorted(got.begin(), got.end()));
    CHECK(enumerate_interlacing_above(Partition{2, 2}, 4) == std::vector<Partition>{{2, 2}});
    CHECK_THROWS_AS(enumerate_interlacing_above(Partition{2, 2}, 3), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_interlacing_above(Partition{}, kMaxEnumerationWeight + 1), CapExceeded);

    for (const auto& lambda : partitions_up_to(5)) {
        for (int cap = lambda.weight(); cap <= 8; ++cap) {
            const auto above = enumerate_interlacing_above(lambda, cap);
            std::set<Partition> expected;
            for (const auto& mu : enumerate_partitions_in_box(static_cast<int>(lambda.length()) + 1, cap))
                if (mu.weight() <= cap && interlaces(mu, lambda))
                    expected.insert(mu);
            CHECK(std::set<Partition>(above.begin(), above.end()) == expected);
            CHECK(above.size() == expected.size());
        }
    }
}

TEST_CASE("interlacing below")
{
    for (const auto& mu : partitions_up_to(7)) {
        const auto below = enumerate_interlacing_below(mu);
        std::set<Partition> expected;
        for (const auto& lambda : partitions_up_to(mu.weight()))
            if (interlaces(mu, lambda))
                expected.insert(lambda);
        CHECK(std::set<Partition>(below.begin(), below.end()) == expected);
    }
}

TEST_CASE("partitions of n")
{
    const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) {
        CHECK(partitions_of(n).size() == counts[static_cast<std::size_t>(n)]);
        CHECK(partitions_of(n).size() == oracle::all_partitions(n).size());
    }
    CHECK(partitions_up_to(4).size() == 1 + 1 + 2 + 3 + 5);
}
