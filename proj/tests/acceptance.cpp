// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.
// A criterion passes only if its check holds and it finishes within its time limit.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "vcauchy/half_plane.hpp"
#include "vcauchy/verify.hpp"

using namespace vcauchy;

namespace {

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<std::string()> check;  // empty string on success, else the reason
};

std::string expect_all(const std::vector<Report>& reports)
{
    for (const auto& r : reports)
        if (!r.holds)
            return fmt::format("{} {} fails", r.identity_name, r.parameters.dump());
    return {};
}

std::string expect_prefix(const QSeries& s, const std::vector<int>& prefix)
{
    for (std::size_t i = 0; i < prefix.size(); ++i)
        if (static_cast<int>(i) > s.order() || s[static_cast<int>(i)] != prefix[i])
            return fmt::format("unexpected expansion {}", to_string(s));
    return {};
}

/// A witness is valid if the two sides differ there and agree on every
/// graded-lex earlier monomial.
std::string valid_poly_witness(const Report& r)
{
    if (r.holds)
        return "perturbed identity reported holds";
    if (!r.first_mismatch)
        return "no witness";
    const auto& lhs = std::get<MultiPoly>(r.lhs);
    const auto& rhs = std::get<MultiPoly>(r.rhs);
    const Exponents at = r.first_mismatch->at.get<Exponents>();
    if (coefficient_of(lhs, at) == coefficient_of(rhs, at))
        return "sides agree at the witness";
    const MultiPoly diff = lhs - rhs;
    if (diff.is_zero() || diff.terms().front().exponents != at)
        return "witness is not the first difference";
    return {};
}

std::string valid_series_witness(const Report& r)
{
    if (r.holds)
        return "perturbed identity reported holds";
    if (!r.first_mismatch)
        return "no witness";
    const auto& lhs = std::get<QSeries>(r.lhs);
    const auto& rhs = std::get<QSeries>(r.rhs);
    const int at = r.first_mismatch->at.get<int>();
    for (int k = 0; k < at; ++k)
        if (lhs[k] != rhs[k])
            return "witness is not the first difference";
    if (lhs[at] == rhs[at])
        return "sides agree at the witness";
    return {};
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "dual Cauchy, all 0 <= K, N <= 4", 30,
         [] {
             std::vector<Report> rs;
             for (int k = 0; k <= 4; ++k)
                 for (int n = 0; n <= 4; ++n)
                     rs.push_back(verify_dual_cauchy(k, n));
             return expect_all(rs);
         }},
        {2, "classical and signed Cauchy, K = N = 3, d = 6", 60,
         [] {
             return expect_all({verify_cauchy_truncated(3, 3, 6, CauchyMode::classical),
                                verify_cauchy_truncated(3, 3, 6, CauchyMode::signed_conjugate)});
         }},
        {3, "correlation by contraction and normal ordering, all 0 <= K, N <= 3", 60,
         [] {
             std::vector<Report> rs;
             for (int k = 0; k <= 3; ++k)
                 for (int n = 0; n <= 3; ++n)
                     rs.push_back(verify_correlation(k, n));
             return expect_all(rs);
         }},
        {4, "q-box identity, all 0 <= K, N <= 4", 60,
         [] {
             std::vector<Report> rs;
             for (int k = 0; k <= 4; ++k)
                 for (int n = 0; n <= 4; ++n)
                     rs.push_back(verify_q_box(k, n));
             return expect_all(rs);
         }},
        {5, "limit series to order 10, begins 1 - q^2 - 2q^3 - 3q^4 - 2q^5", 120,
         [] {
             const auto r = verify_limit_series(10);
             if (auto e = expect_all({r}); !e.empty())
                 return e;
             return expect_prefix(std::get<QSeries>(r.lhs), {1, 0, -1, -2, -3, -2});
         }},
        {6, "plane partitions to order 8, begins 1, 1, 3, 6, 13, 24", 120,
         [] {
             const auto r = verify_macmahon(8);
             if (auto e = expect_all({r}); !e.empty())
                 return e;
             return expect_prefix(std::get<QSeries>(r.lhs), {1, 1, 3, 6, 13, 24});
         }},
        {7, "pairing closed form vs shuffle sign, all |lambda|, |mu| <= 6", 30,
         [] { return expect_all({verify_inner_product_oracle(6)}); }},
        {8, "anticommutation, i, j <= 5, |c| <= 5", 30,
         [] { return expect_all({verify_anticommutation(5, 5)}); }},
        {9, "vacuum product amplitudes are Schur polynomials, N <= 3, cap 6", 60,
         [] { return expect_all({verify_schur_amplitudes(3, 6)}); }},
        {10, "tableau slices (5,3,1),(4,2),(3),(2); weight 20, height 4", 1,
         [] {
             const HalfPlanePartition pi({{5}, {4, 3}, {3, 2, 1}, {2}});
             const Chain expected({{5, 3, 1}, {4, 2}, {3}, {2}, {}});
             if (slices(pi) != expected)
                 return fmt::format("slices {}", to_string(slices(pi)));
             const HppStats st = hpp_stats(pi);
             if (st.weight != 20 || st.height != 4)
                 return fmt::format("weight {} height {}", st.weight, st.height);
             return std::string{};
         }},
        {11, "perturbed identities fail with a valid witness", 1,
         [] {
             const VerifyOptions perturb{1, true};
             if (auto e = valid_poly_witness(verify_dual_cauchy(2, 2, perturb)); !e.empty())
                 return "dual-cauchy: " + e;
             if (auto e = valid_poly_witness(verify_correlation(2, 1, perturb)); !e.empty())
                 return "correlation: " + e;
             if (auto e = valid_series_witness(verify_q_box(2, 2, perturb)); !e.empty())
                 return "q-box: " + e;
             if (auto e = valid_series_witness(verify_macmahon(5, perturb)); !e.empty())
                 return "macmahon: " + e;
             return std::string{};
         }},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string reason;
        try {
            reason = c.check();
        } catch (const std::exception& e) {
            reason = fmt::format("exception: {}", e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (reason.empty() && secs > c.limit_seconds)
            reason = "too slow";
        const bool pass = reason.empty();
        failures += pass ? 0 : 1;
        std::cout << fmt::format("{} [{:2}] {} ({:.2f} s, limit {:g} s){}\n", pass ? "PASS" : "FAIL", c.id, c.name,
                                 secs, c.limit_seconds, pass ? "" : ": " + reason);
    }
    std::cout << fmt::format("{} of {} criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
