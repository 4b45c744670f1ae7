#include <doctest.h>

#include <random>

#include <json.hpp>

#include "oracles.hpp"
#include "vcauchy/fock.hpp"
#include "vcauchy/schur.hpp"

using namespace vcauchy;

namespace {

MultiPoly x_pow(std::size_t arity, std::size_t var, int k) { return MultiPoly::variable(arity, var, k); }

std::vector<int> to_parts(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

std::vector<int> concat(std::vector<int> head, const Partition& tail)
{
    head.insert(head.end(), tail.parts().begin(), tail.parts().end());
    return head;
}

} // namespace

TEST_CASE("basis vectors from compositions")
{
    CHECK(basis_from_composition({{2, 1}}) == FockState::basis(0, Partition{2, 1}));
    CHECK(basis_from_composition({{1, 2}}).is_zero());
    CHECK(basis_from_composition({{0, 2}}) == FockState::basis(0, Partition{1, 1}, -1));
    CHECK(basis_from_composition({{}}) == FockState::vacuum(0));
    CHECK_THROWS_AS(basis_from_composition({{1, -1}}), std::invalid_argument);
}

TEST_CASE("inner product")
{
    CHECK(inner_product(Partition{1}, Partition{1}) == -1);
    CHECK(inner_product(Partition{2}, Partition{1, 1}) == 1);
    CHECK(inner_product(Partition{2}, Partition{2}) == 0);
    CHECK(inner_product(Partition{}, Partition{}) == 1);

    CHECK(inner_product_shuffle_oracle(Partition{2}, Partition{1, 1}) == 1);
    CHECK(inner_product_shuffle_oracle(Partition{1}, Partition{2}) == 0);
    CHECK(inner_product_shuffle_oracle(Partition{}, Partition{}) == 1);
    CHECK(inner_product_shuffle_oracle(Partition{1}, Partition{1}) == -1);

    const auto all = partitions_up_to(6);
    for (const auto& lambda : all)
        for (const auto& mu : all)
            CHECK(inner_product(lambda, mu) == inner_product_shuffle_oracle(lambda, mu));
}

TEST_CASE("anticommutation of fermion insertions")
{
    // phi_{-i} phi_{-j} c = -phi_{-(j-1)} phi_{-(i+1)} c
    for (int i = 0; i <= 5; ++i) {
        for (int j = 1; j <= 5; ++j) {
            for (const auto& c : partitions_up_to(5)) {
                const auto lhs = basis_from_composition({concat({i, j}, c)});
                const auto rhs = basis_from_composition({concat({j - 1, i + 1}, c)});
                CHECK(lhs == -rhs);
            }
        }
    }
    // the relation makes phi_{-i} phi_{-(i+1)} vanish
    for (int i = 0; i <= 5; ++i)
        CHECK(basis_from_composition({{i, i + 1}}).is_zero());
}

TEST_CASE("half vertex action")
{
    const auto x = [](int k) { return x_pow(1, 0, k); };
    FockState expected(1, 2);
    expected.add(Partition{}, x(0));
    expected.add(Partition{1}, x(1));
    expected.add(Partition{2}, x(2));
    CHECK(apply_half_vertex(FockState::vacuum(1), 0, 2) == expected);

    FockState from_one(1, 3);
    from_one.add(Partition{1}, x(0));
    from_one.add(Partition{2}, x(1));
    from_one.add(Partition{1, 1}, x(1));
    from_one.add(Partition{3}, x(2));
    from_one.add(Partition{2, 1}, x(2));
    CHECK(apply_half_vertex(FockState::basis(1, Partition{1}), 0, 3) == from_one);

    CHECK(apply_half_vertex(FockState(1, 0), 0, 4).is_zero());
    CHECK_THROWS_AS(apply_half_vertex(FockState::basis(1, Partition{2, 1}), 0, 2), CapExceeded);

    const auto grown = apply_half_vertex(FockState::basis(1, Partition{2, 1}), 0, 7);
    CHECK(grown.amplitudes().size() == 16);
    for (const auto& [mu, amp] : grown.amplitudes()) {
        CHECK(interlaces(mu, Partition{2, 1}));
        CHECK(amp == x(mu.weight() - 3));
    }
}

TEST_CASE("half vertex operators commute")
{
    for (const auto& lambda : partitions_up_to(4)) {
        const auto start = FockState::basis(2, lambda);
        const int cap = lambda.weight() + 4;
        const auto xy = apply_half_vertex(apply_half_vertex(start, 0, cap), 1, cap);
        const auto yx = apply_half_vertex(apply_half_vertex(start, 1, cap), 0, cap);
        CHECK(xy == yx);
    }
}

TEST_CASE("vacuum product states")
{
    FockState one_var(1, 3);
    for (int m = 0; m <= 3; ++m)
        one_var.add(m == 0 ? Partition{} : Partition{m}, x_pow(1, 0, m));
    CHECK(vacuum_product_state(1, 3) == one_var);

    const SchurContext two(2);
    FockState two_var(2, 2);
    for (const auto& mu : partitions_up_to(2))
        two_var.add(mu, two.schur(mu));
    CHECK(vacuum_product_state(2, 2) == two_var);
    CHECK(two_var.amplitude(Partition{1, 1}) == MultiPoly::monomial(2, {1, 1}));

    CHECK(vacuum_product_state(0, 5) == FockState::vacuum(0));

    const auto placed = vacuum_product_state(2, 3, 5, 2);
    CHECK(placed.arity() == 5);
    CHECK(placed.amplitude(Partition{2, 1}) == embed(two.schur(Partition{2, 1}), 5, 2));
}

TEST_CASE("vacuum product amplitudes are Schur polynomials")
{
    for (std::size_t n = 0; n <= 3; ++n) {
        const auto state = vacuum_product_state(n, 6);
        for (const auto& mu : partitions_up_to(6)) {
            const MultiPoly amp = state.amplitude(mu);
            CHECK(amp == oracle::ssyt_schur(to_parts(mu), n));
            if (mu.length() > n)
                CHECK(amp.is_zero());
        }
    }
}

TEST_CASE("contraction and normal ordering")
{
    using K = HalfVertex::Kind;
    const auto bra = vacuum_product_state(1, 1, 2, 0);
    const auto ket = vacuum_product_state(1, 1, 2, 1);
    const MultiPoly expected = MultiPoly::constant(2, 1) - MultiPoly::monomial(2, {1, 1});
    CHECK(contract(bra, ket) == expected);

    const std::vector<HalfVertex> word{{K::minus, 0}, {K::plus, 1}};
    CHECK(normal_ordered_expectation(word, 2) == expected);
    const std::vector<HalfVertex> ordered{{K::plus, 1}, {K::minus, 0}};
    CHECK(normal_ordered_expectation(ordered, 2) == MultiPoly::constant(2, 1));

    // two phi- against one phi+: (1 - x1 y1)(1 - x2 y1)
    const auto bra2 = vacuum_product_state(2, 2, 3, 0);
    const auto ket1 = vacuum_product_state(1, 2, 3, 2);
    const MultiPoly one = MultiPoly::constant(3, 1);
    const MultiPoly want = (one - MultiPoly::monomial(3, {1, 0, 1})) * (one - MultiPoly::monomial(3, {0, 1, 1}));
    CHECK(contract(bra2, ket1) == want);
    const std::vector<HalfVertex> word3{{K::minus, 0}, {K::minus, 1}, {K::plus, 2}};
    CHECK(normal_ordered_expectation(word3, 3) == want);
}

TEST_CASE("state serialization")
{
    const nlohmann::json j = vacuum_product_state(2, 2);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 4);
    CHECK(j[0]["partition"] == "-");
    CHECK(j[2]["partition"] == "1,1");
    CHECK(j[3]["partition"] == "2");
    CHECK(poly_from_json(j[2]["amplitude"], 2) == MultiPoly::monomial(2, {1, 1}));
}
