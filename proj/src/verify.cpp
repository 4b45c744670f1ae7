#include "vcauchy/verify.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include <fmt/format.h>

#include "vcauchy/fock.hpp"
#include "vcauchy/half_plane.hpp"
#include "vcauchy/parallel.hpp"
#include "vcauchy/partition.hpp"
#include "vcauchy/schur.hpp"

namespace vcauchy {

namespace {

using Clock = std::chrono::steady_clock;

void check_nonnegative(std::initializer_list<int> values)
{
    for (int v : values)
        if (v < 0)
            throw std::invalid_argument("parameters must be nonnegative");
}

template <class F>
Report timed(F&& body)
{
    const auto start = Clock::now();
    Report r = body();
    r.elapsed = Clock::now() - start;
    return r;
}

MultiPoly sum_polys(std::vector<MultiPoly> parts, std::size_t arity)
{
    MultiPoly out(arity);
    for (const auto& p : parts)
        out += p;
    return out;
}

QSeries sum_series(const std::vector<QSeries>& parts, int order)
{
    QSeries out(order);
    for (const auto& s : parts)
        out += s;
    return out;
}

std::vector<Factor> range_factors(int degree, int shift_multiplicity, int sign)
{
    // (1 - q^i)^{sign * (i + shift)} for i = 1..degree.
    std::vector<Factor> f;
    for (int i = 1; i <= degree; ++i)
        f.push_back({i, sign * (i + shift_multiplicity)});
    return f;
}

} // namespace

Report compare_polys(std::string name, nlohmann::ordered_json parameters, MultiPoly lhs,
                     MultiPoly rhs, std::vector<std::string> variable_names)
{
    if (lhs.arity() != rhs.arity())
        throw ArityMismatch("compared polynomials have different arities");
    Report r;
    r.identity_name = std::move(name);
    r.parameters = std::move(parameters);
    r.holds = lhs == rhs;
    if (!r.holds) {
        // Walk both sorted term lists to the first disagreement.
        const auto a = lhs.terms();
        const auto b = rhs.terms();
        GradedLex less;
        std::size_t i = 0, j = 0;
        Exponents at;
        while (true) {
            if (j == b.size() || (i < a.size() && less(a[i].exponents, b[j].exponents))) {
                at = a[i].exponents;
                break;
            }
            if (i == a.size() || less(b[j].exponents, a[i].exponents)) {
                at = b[j].exponents;
                break;
            }
            if (a[i].coefficient != b[j].coefficient) {
                at = a[i].exponents;
                break;
            }
            ++i;
            ++j;
        }
        const MultiPoly mono = MultiPoly::monomial(lhs.arity(), at);
        r.first_mismatch = Mismatch{at, to_string(mono, variable_names),
                                    coefficient_of(lhs, at).str(), coefficient_of(rhs, at).str()};
    }
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.variable_names = std::move(variable_names);
    return r;
}

Report compare_series(std::string name, nlohmann::ordered_json parameters, QSeries lhs, QSeries rhs)
{
    if (lhs.order() != rhs.order())
        throw std::invalid_argument("compared series have different orders");
    Report r;
    r.identity_name = std::move(name);
    r.parameters = std::move(parameters);
    r.holds = lhs == rhs;
    for (int k = 0; k <= lhs.order() && !r.holds; ++k)
        if (lhs[k] != rhs[k]) {
            r.first_mismatch = Mismatch{k, fmt::format("q^{}", k), lhs[k].str(), rhs[k].str()};
            break;
        }
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

MultiPoly perturbed(MultiPoly p)
{
    if (p.is_zero())
        return MultiPoly::constant(p.arity(), 1);
    const Term& first = p.terms().front();
    p -= MultiPoly::monomial(p.arity(), first.exponents, first.coefficient * 2);
    return p;
}

QSeries perturbed(QSeries s)
{
    for (int k = 0; k <= s.order(); ++k)
        if (!s[k].is_zero()) {
            s[k] = -s[k];
            return s;
        }
    s[0] = 1;
    return s;
}

MultiPoly dual_cauchy_product(int rows, int cols)
{
    check_nonnegative({rows, cols});
    const auto arity = static_cast<std::size_t>(rows + cols);
    MultiPoly out = MultiPoly::constant(arity, 1);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            Exponents e(arity, 0);
            e[static_cast<std::size_t>(i)] = 1;
            e[static_cast<std::size_t>(rows + j)] = 1;
            out = poly_mul(out, MultiPoly::constant(arity, 1) - MultiPoly::monomial(arity, e));
        }
    return out;
}

MultiPoly dual_cauchy_schur_sum(int rows, int cols, unsigned threads)
{
    check_nonnegative({rows, cols});
    const auto arity = static_cast<std::size_t>(rows + cols);
    const SchurContext xs(static_cast<std::size_t>(rows));
    const SchurContext ys(static_cast<std::size_t>(cols));
    auto terms = parallel_map(
        enumerate_partitions_in_box(rows, cols),
        [&](const Partition& mu) {
            MultiPoly term = poly_mul(embed(xs.schur(mu), arity, 0),
                                      embed(ys.schur(conjugate(mu)), arity, static_cast<std::size_t>(rows)));
            return mu.weight() % 2 == 0 ? term : -term;
        },
        threads);
    return sum_polys(std::move(terms), arity);
}

MultiPoly correlation_fock_route(int rows, int cols, int* out_of_box)
{
    check_nonnegative({rows, cols});
    const auto arity = static_cast<std::size_t>(rows + cols);
    // Only partitions inside the [K, N] box survive, all of weight <= K N.
    const int cap = rows * cols;
    const FockState bra = vacuum_product_state(static_cast<std::size_t>(rows), cap, arity, 0);
    const FockState ket = vacuum_product_state(static_cast<std::size_t>(cols), cap, arity,
                                               static_cast<std::size_t>(rows));
    if (out_of_box) {
        *out_of_box = 0;
        for (const auto& [mu, coef] : bra.amplitudes()) {
            const bool inside = static_cast<int>(mu.length()) <= rows && mu.largest() <= cols;
            if (!inside && !ket.amplitude(conjugate(mu)).is_zero())
                ++*out_of_box;
        }
    }
    return contract(bra, ket);
}

MultiPoly correlation_commutation_route(int rows, int cols)
{
    check_nonnegative({rows, cols});
    std::vector<HalfVertex> word;
    for (int i = 0; i < rows; ++i)
        word.push_back({HalfVertex::Kind::minus, static_cast<std::size_t>(i)});
    for (int j = 0; j < cols; ++j)
        word.push_back({HalfVertex::Kind::plus, static_cast<std::size_t>(rows + j)});
    return normal_ordered_expectation(word, static_cast<std::size_t>(rows + cols));
}

QSeries q_box_product(int rows, int cols)
{
    check_nonnegative({rows, cols});
    std::vector<Factor> factors;
    int order = 0;
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) {
            factors.push_back({i + j, 1});
            order += i + j;
        }
    return expand_factor_product(factors, order);
}

QSeries q_box_chain_sum(int rows, int cols, unsigned threads)
{
    check_nonnegative({rows, cols});
    const int order = rows * cols * (rows + cols + 2) / 2;
    // lambda in [N, K]: at most N parts, each at most K.
    auto terms = parallel_map(
        enumerate_partitions_in_box(cols, rows),
        [&](const Partition& lambda) {
            QSeries term = chain_series(lambda, cols, order) * chain_series(conjugate(lambda), rows, order);
            return lambda.weight() % 2 == 0 ? term : -term;
        },
        threads);
    return sum_series(terms, order);
}

QSeries limit_series_product(int degree)
{
    check_nonnegative({degree});
    const auto factors = range_factors(degree, -1, 1);
    return expand_factor_product(factors, degree);
}

QSeries limit_series_hpp_sum(int degree, unsigned threads)
{
    check_nonnegative({degree});
    // Each half plane partition outweighs its top slice, so 2|lambda| <= degree.
    auto terms = parallel_map(
        partitions_up_to(degree / 2),
        [&](const Partition& lambda) {
            QSeries term = hpp_series(lambda, degree) * hpp_series(conjugate(lambda), degree);
            return lambda.weight() % 2 == 0 ? term : -term;
        },
        threads);
    return sum_series(terms, degree);
}

QSeries macmahon_product(int degree)
{
    check_nonnegative({degree});
    const auto factors = range_factors(degree, 0, -1);
    return expand_factor_product(factors, degree);
}

QSeries macmahon_enumerated(int degree)
{
    check_nonnegative({degree});
    return QSeries(degree, enumerate_plane_partitions(degree));
}

Report verify_dual_cauchy(int rows, int cols, const VerifyOptions& opts)
{
    return timed([&] {
        nlohmann::ordered_json params{{"K", rows}, {"N", cols},
                                      {"box", "mu in [K,N]: l(mu) <= K, mu_1 <= N"}};
        MultiPoly rhs = dual_cauchy_schur_sum(rows, cols, opts.threads);
        return compare_polys("dual-cauchy", std::move(params), dual_cauchy_product(rows, cols),
                             opts.perturb ? perturbed(std::move(rhs)) : std::move(rhs),
                             xy_variable_names(static_cast<std::size_t>(rows),
                                               static_cast<std::size_t>(cols)));
    });
}

Report verify_cauchy_truncated(int rows, int cols, int degree, CauchyMode mode,
                               const VerifyOptions& opts)
{
    check_nonnegative({rows, cols, degree});
    return timed([&] {
        const auto arity = static_cast<std::size_t>(rows + cols);
        const int cap = 2 * degree;
        const SchurContext xs(static_cast<std::size_t>(rows));
        const SchurContext ys(static_cast<std::size_t>(cols));

        MultiPoly lhs = MultiPoly::constant(arity, 1);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                MultiPoly factor(arity);
                if (mode == CauchyMode::classical) {
                    for (int m = 0; m <= degree; ++m) {
                        Exponents e(arity, 0);
                        e[static_cast<std::size_t>(i)] = m;
                        e[static_cast<std::size_t>(rows + j)] = m;
                        factor += MultiPoly::monomial(arity, e);
                    }
                } else {
                    Exponents e(arity, 0);
                    e[static_cast<std::size_t>(i)] = 1;
                    e[static_cast<std::size_t>(rows + j)] = 1;
                    factor = MultiPoly::constant(arity, 1) - MultiPoly::monomial(arity, e);
                }
                lhs = poly_mul(lhs, factor, cap);
            }

        std::vector<Partition> index;
        for (const auto& lambda : partitions_up_to(degree))
            if (mode == CauchyMode::signed_conjugate ||
                static_cast<int>(lambda.length()) <= std::min(rows, cols))
                index.push_back(lambda);
        auto terms = parallel_map(
            index,
            [&](const Partition& lambda) {
                const Partition partner =
                    mode == CauchyMode::classical ? lambda : conjugate(lambda);
                MultiPoly term = poly_mul(embed(xs.schur(lambda), arity, 0),
                                          embed(ys.schur(partner), arity, static_cast<std::size_t>(rows)),
                                          cap);
                return mode == CauchyMode::signed_conjugate && lambda.weight() % 2 == 1 ? -term : term;
            },
            opts.threads);
        MultiPoly rhs = sum_polys(std::move(terms), arity);

        nlohmann::ordered_json params{
            {"K", rows},
            {"N", cols},
            {"degree", degree},
            {"mode", mode == CauchyMode::classical ? "classical" : "signed"},
            {"truncation", fmt::format("total degree <= {} (x-degree <= {})", cap, degree)}};
        return compare_polys(mode == CauchyMode::classical ? "cauchy" : "cauchy-signed",
                             std::move(params), std::move(lhs),
                             opts.perturb ? perturbed(std::move(rhs)) : std::move(rhs),
                             xy_variable_names(static_cast<std::size_t>(rows),
                                               static_cast<std::size_t>(cols)));
    });
}

Report verify_correlation(int rows, int cols, const VerifyOptions& opts)
{
    return timed([&] {
        int out_of_box = 0;
        MultiPoly fock = correlation_fock_route(rows, cols, &out_of_box);
        if (out_of_box != 0)
            throw std::logic_error("partitions outside the [K,N] box contributed to the contraction");
        MultiPoly product = correlation_commutation_route(rows, cols);
        nlohmann::ordered_json params{{"K", rows},
                                      {"N", cols},
                                      {"weight_cap", rows * cols},
                                      {"out_of_box_terms", out_of_box}};
        return compare_polys("correlation", std::move(params), std::move(fock),
                             opts.perturb ? perturbed(std::move(product)) : std::move(product),
                             xy_variable_names(static_cast<std::size_t>(rows),
                                               static_cast<std::size_t>(cols)));
    });
}

Report verify_q_box(int rows, int cols, const VerifyOptions& opts)
{
    return timed([&] {
        QSeries lhs = q_box_product(rows, cols);
        if (lhs != q_box_product(cols, rows))
            throw std::logic_error("q-box product is not symmetric under K <-> N");
        QSeries rhs = q_box_chain_sum(rows, cols, opts.threads);
        nlohmann::ordered_json params{{"K", rows},
                                      {"N", cols},
                                      {"order", lhs.order()},
                                      {"box", "lambda in [N,K]: l(lambda) <= N, lambda_1 <= K"},
                                      {"symmetric_in_K_N", true}};
        return compare_series("q-box", std::move(params), std::move(lhs),
                              opts.perturb ? perturbed(std::move(rhs)) : std::move(rhs));
    });
}

Report verify_limit_series(int degree, const VerifyOptions& opts)
{
    return timed([&] {
        QSeries lhs = limit_series_hpp_sum(degree, opts.threads);
        QSeries rhs = limit_series_product(degree);
        nlohmann::ordered_json params{{"order", degree}, {"lambda_range", "2|lambda| <= order"}};
        return compare_series("limit", std::move(params), std::move(lhs),
                              opts.perturb ? perturbed(std::move(rhs)) : std::move(rhs));
    });
}

Report verify_macmahon(int degree, const VerifyOptions& opts)
{
    return timed([&] {
        QSeries lhs = macmahon_enumerated(degree);
        QSeries rhs = macmahon_product(degree);
        nlohmann::ordered_json params{{"order", degree}};
        return compare_series("macmahon", std::move(params), std::move(lhs),
                              opts.perturb ? perturbed(std::move(rhs)) : std::move(rhs));
    });
}

Report verify_inner_product_oracle(int max_weight)
{
    check_nonnegative({max_weight});
    return timed([&] {
        Report r;
        r.identity_name = "inner-product-oracle";
        r.parameters = {{"max_weight", max_weight}};
        const auto all = partitions_up_to(max_weight);
        long pairs = 0, closed_nonzero = 0, oracle_nonzero = 0;
        for (const auto& lambda : all)
            for (const auto& mu : all) {
                ++pairs;
                const int closed = inner_product(lambda, mu);
                const int oracle = inner_product_shuffle_oracle(lambda, mu);
                closed_nonzero += closed != 0;
                oracle_nonzero += oracle != 0;
                if (closed != oracle && !r.first_mismatch)
                    r.first_mismatch = Mismatch{
                        {{"lambda", to_string(lambda)}, {"mu", to_string(mu)}},
                        fmt::format("<{}|{}>", to_string(lambda), to_string(mu)),
                        std::to_string(closed), std::to_string(oracle)};
            }
        r.holds = !r.first_mismatch;
        r.lhs = nlohmann::json{{"pairs", pairs}, {"nonzero", closed_nonzero}};
        r.rhs = nlohmann::json{{"pairs", pairs}, {"nonzero", oracle_nonzero}};
        return r;
    });
}

Report verify_anticommutation(int max_index, int max_tail)
{
    check_nonnegative({max_index, max_tail});
    return timed([&] {
        Report r;
        r.identity_name = "anticommutation";
        r.parameters = {{"max_index", max_index}, {"max_tail_weight", max_tail}};
        long checked = 0, nonzero = 0;
        auto fail = [&](const Composition& c, std::string lhs, std::string rhs) {
            if (!r.first_mismatch)
                r.first_mismatch = Mismatch{c.entries,
                                            fmt::format("composition ({})", fmt::join(c.entries, ",")),
                                            std::move(lhs), std::move(rhs)};
        };
        auto render = [](const FockState& s) {
            return nlohmann::json(s).dump();
        };
        for (const auto& tail : partitions_up_to(max_tail))
            for (int i = 0; i <= max_index; ++i)
                for (int j = 0; j <= max_index; ++j) {
                    Composition word{{i, j}};
                    Composition swapped{{j - 1, i + 1}};
                    for (int part : tail.parts()) {
                        word.entries.push_back(part);
                        swapped.entries.push_back(part);
                    }
                    ++checked;
                    const auto a = straighten(word);
                    const auto b = straighten(swapped);
                    const bool sign_rule = (!a && !b) ||
                                           (a && b && a->partition == b->partition && a->sign == -b->sign);
                    if (!sign_rule)
                        fail(word, a ? fmt::format("{}|{}>", a->sign, to_string(a->partition)) : "0",
                             b ? fmt::format("{}|{}>", -b->sign, to_string(b->partition)) : "0");
                    if (j == 0)
                        continue;
                    const FockState lhs = basis_from_composition(word);
                    const FockState rhs = -basis_from_composition(swapped);
                    nonzero += !lhs.is_zero();
                    if (lhs != rhs)
                        fail(word, render(lhs), render(rhs));
                }
        r.holds = !r.first_mismatch;
        r.lhs = nlohmann::json{{"cases", checked}, {"nonzero_states", nonzero}};
        r.rhs = r.lhs;
        return r;
    });
}

Report verify_schur_amplitudes(int max_vars, int cap)
{
    check_nonnegative({max_vars, cap});
    return timed([&] {
        Report r;
        r.identity_name = "schur-amplitudes";
        r.parameters = {{"max_vars", max_vars}, {"weight_cap", cap}};
        long checked = 0, vanishing = 0;
        for (int n = 0; n <= max_vars; ++n) {
            const auto vars = static_cast<std::size_t>(n);
            const SchurContext ctx(vars);
            const FockState state = vacuum_product_state(vars, cap);
            for (const auto& mu : partitions_up_to(cap)) {
                ++checked;
                const MultiPoly amplitude = state.amplitude(mu);
                const MultiPoly jt = ctx.schur(mu);
                const MultiPoly branch = ctx.schur_by_branching(mu);
                const bool too_long = static_cast<int>(mu.length()) > n;
                vanishing += too_long;
                if (amplitude != jt || jt != branch || (too_long && !amplitude.is_zero())) {
                    if (!r.first_mismatch)
                        r.first_mismatch = Mismatch{
                            {{"vars", n}, {"partition", to_string(mu)}},
                            fmt::format("amplitude of |{}> in {} variables", to_string(mu), n),
                            to_string(amplitude), fmt::format("{} (branching: {})", to_string(jt),
                                                              to_string(branch))};
                }
            }
        }
        r.holds = !r.first_mismatch;
        r.lhs = nlohmann::json{{"amplitudes", checked}, {"vanishing_long", vanishing}};
        r.rhs = r.lhs;
        return r;
    });
}

std::vector<Report> verify_fock_suite(int max_weight)
{
    return {verify_inner_product_oracle(max_weight), verify_anticommutation(max_weight, max_weight),
            verify_schur_amplitudes(3, max_weight)};
}

nlohmann::ordered_json to_json(const Report& r)
{
    auto side = [](const Side& s) {
        return std::visit([](const auto& v) { return nlohmann::ordered_json(nlohmann::json(v)); }, s);
    };
    nlohmann::ordered_json j;
    j["identity_name"] = r.identity_name;
    j["parameters"] = r.parameters;
    j["holds"] = r.holds;
    j["lhs"] = side(r.lhs);
    j["rhs"] = side(r.rhs);
    if (r.first_mismatch)
        j["first_mismatch"] = {{"at", nlohmann::ordered_json(r.first_mismatch->at)},
                               {"description", r.first_mismatch->description},
                               {"lhs_coef", r.first_mismatch->lhs},
                               {"rhs_coef", r.first_mismatch->rhs}};
    else
        j["first_mismatch"] = nullptr;
    j["elapsed_ms"] = r.elapsed.count();
    return j;
}

std::string render_text(const Report& r, std::size_t display_cap)
{
    std::vector<std::string> params;
    for (const auto& [key, value] : r.parameters.items())
        if (value.is_number())
            params.push_back(fmt::format("{}={}", key, value.dump()));
    auto side = [&](const Side& s) {
        if (const auto* p = std::get_if<MultiPoly>(&s))
            return fmt::format("{} [{} terms]", to_string(*p, r.variable_names, display_cap), p->size());
        if (const auto* q = std::get_if<QSeries>(&s))
            return to_string(*q, display_cap);
        return std::get<nlohmann::json>(s).dump();
    };
    std::string out = fmt::format("{} {} [{}]: {} ({:.1f} ms)\n", r.holds ? "HOLDS" : "FAILS",
                                  r.identity_name, fmt::join(params, " "),
                                  r.holds ? "both sides agree exactly" : "sides differ",
                                  r.elapsed.count());
    out += fmt::format("  lhs: {}\n", side(r.lhs));
    out += fmt::format("  rhs: {}\n", side(r.rhs));
    if (r.first_mismatch)
        out += fmt::format("  first mismatch at {}: lhs {} vs rhs {}\n", r.first_mismatch->description,
                           r.first_mismatch->lhs, r.first_mismatch->rhs);
    return out;
}

} // namespace vcauchy
