#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "vcauchy/poly.hpp"
#include "vcauchy/qseries.hpp"

namespace vcauchy {

/// First disagreement between two sides. For polynomials `at` is the exponent
/// vector of the graded-lex smallest differing monomial, for series the degree,
/// and for the Fock-space checks a description of the failing case.
struct Mismatch {
    nlohmann::json at;
    std::string description;
    std::string lhs;
    std::string rhs;
};

/// One side of a checked identity. Property sweeps report a JSON summary.
using Side = std::variant<MultiPoly, QSeries, nlohmann::json>;

/// Outcome of an exact identity check. holds is true iff the two sides are
/// equal, and first_mismatch is present iff holds is false.
struct Report {
    std::string identity_name;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    bool holds = false;
    Side lhs;
    Side rhs;
    std::vector<std::string> variable_names;
    std::optional<Mismatch> first_mismatch;
    std::chrono::duration<double, std::milli> elapsed{0};
};

struct VerifyOptions {
    /// Upper bound on worker threads for the partition sums.
    unsigned threads = 1;
    /// Negates the lowest right-hand-side term before comparing. Exercises the
    /// failure path; a correct identity then reports holds = false.
    bool perturb = false;
};

enum class CauchyMode {
    /// prod 1/(1 - x_i y_j) = sum s_lambda(x) s_lambda(y)
    classical,
    /// prod (1 - x_i y_j) = sum (-1)^{|mu|} s_mu(x) s_mu'(y)
    signed_conjugate,
};

Report compare_polys(std::string name, nlohmann::ordered_json parameters, MultiPoly lhs,
                     MultiPoly rhs, std::vector<std::string> variable_names);
Report compare_series(std::string name, nlohmann::ordered_json parameters, QSeries lhs, QSeries rhs);

/// Negates the graded-lex smallest term.
MultiPoly perturbed(MultiPoly p);
/// Negates the lowest nonzero coefficient.
QSeries perturbed(QSeries s);

// Individual sides, in variables x1..xK, y1..yN where relevant.

/// prod_{i<=K, j<=N} (1 - x_i y_j).
MultiPoly dual_cauchy_product(int rows, int cols);
/// sum over mu in the [K, N] box of (-1)^{|mu|} s_mu(x) s_mu'(y).
MultiPoly dual_cauchy_schur_sum(int rows, int cols, unsigned threads = 1);
/// Contracts phi+(x1..xK)|0> against phi+(y1..yN)|0> through the skew pairing.
/// `out_of_box` receives the number of nonzero contributions from partitions
/// outside the [K, N] box.
MultiPoly correlation_fock_route(int rows, int cols, int* out_of_box = nullptr);
/// <0| phi-(x1)..phi-(xK) phi+(y1)..phi+(yN) |0> by normal ordering.
MultiPoly correlation_commutation_route(int rows, int cols);
/// prod (1 - q^{i+j}) to its full degree K N (K + N + 2) / 2.
QSeries q_box_product(int rows, int cols);
/// sum over lambda in [N, K] of (-1)^{|lambda|} (chains of lambda in N steps)
/// (chains of lambda' in K steps), weighted by q^{weight}.
QSeries q_box_chain_sum(int rows, int cols, unsigned threads = 1);
QSeries limit_series_product(int degree);
QSeries limit_series_hpp_sum(int degree, unsigned threads = 1);
QSeries macmahon_product(int degree);
QSeries macmahon_enumerated(int degree);

/// prod (1 - x_i y_j) = sum over mu in [K, N] of (-1)^{|mu|} s_mu{x} s_mu'{y}.
Report verify_dual_cauchy(int rows, int cols, const VerifyOptions& opts = {});

/// Both Cauchy identities in K + N variables, truncated to x-degree
/// (equivalently y-degree) at most `degree`, i.e. total degree 2 * degree.
Report verify_cauchy_truncated(int rows, int cols, int degree, CauchyMode mode,
                               const VerifyOptions& opts = {});

/// The vacuum correlation of K phi- and N phi+ operators, by the Fock-space
/// contraction and by normal ordering.
Report verify_correlation(int rows, int cols, const VerifyOptions& opts = {});

/// prod (1 - q^{i+j}) against the signed sum over pairs of chains.
Report verify_q_box(int rows, int cols, const VerifyOptions& opts = {});

/// prod (1 - q^i)^{i-1} against the signed sum over pairs of half plane
/// partitions, to order `degree`.
Report verify_limit_series(int degree, const VerifyOptions& opts = {});

/// Plane partitions counted by gluing against prod 1/(1 - q^i)^i.
Report verify_macmahon(int degree, const VerifyOptions& opts = {});

/// Closed-form pairing against the shuffle-sign oracle for |lambda|, |mu| <= max_weight.
Report verify_inner_product_oracle(int max_weight);
/// phi_{-i} phi_{-j} c = -phi_{-(j-1)} phi_{-(i+1)} c on basis vectors for
/// 0 <= i <= max_index, 1 <= j <= max_index and partitions c with |c| <= max_tail;
/// and the same sign rule for straighten() with j = 0.
Report verify_anticommutation(int max_index, int max_tail);
/// Amplitudes of phi+(x1)..phi+(xN)|0> against Jacobi-Trudi and branching
/// Schur polynomials, for N <= max_vars and weight <= cap.
Report verify_schur_amplitudes(int max_vars, int cap);
/// The three checks above with every bound set to max_weight and N <= 3.
std::vector<Report> verify_fock_suite(int max_weight);

nlohmann::ordered_json to_json(const Report& r);
/// One verdict line, then both sides (up to `display_cap` terms each), then
/// the mismatch if any.
std::string render_text(const Report& r, std::size_t display_cap = 12);

} // namespace vcauchy
