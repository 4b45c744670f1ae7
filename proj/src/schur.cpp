#include "vcauchy/schur.hpp"

#include <bit>
#include <mutex>
#include <stdexcept>

namespace vcauchy {

namespace {

// Every exponent vector of the given arity summing to `degree`.
void fill_monomials(Exponents& e, std::size_t i, int remaining, std::vector<Term>& out)
{
    if (i + 1 == e.size()) {
        e[i] = remaining;
        out.push_back(Term{e, 1});
        return;
    }
    for (int v = remaining; v >= 0; --v) {
        e[i] = v;
        fill_monomials(e, i + 1, remaining - v, out);
    }
}

template <class Map, class Key, class Compute>
MultiPoly memoized(std::shared_mutex& mutex, Map& map, const Key& key, Compute&& compute)
{
    {
        std::shared_lock lock(mutex);
        if (auto it = map.find(key); it != map.end())
            return it->second;
    }
    MultiPoly value = compute();
    std::unique_lock lock(mutex);
    map.try_emplace(key, value);
    return value;
}

} // namespace

MultiPoly determinant(const PolyMatrix& m, std::size_t arity)
{
    const std::size_t n = m.size();
    if (n > 20)
        throw CapExceeded("determinant supports at most 20 rows");
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("determinant of a non-square matrix");

    // minors[mask]: signed sum over assignments of the first popcount(mask)
    // rows to the columns in mask.
    std::vector<MultiPoly> minors(std::size_t{1} << n, MultiPoly(arity));
    minors[0] = MultiPoly::constant(arity, 1);
    for (std::size_t mask = 0; mask < minors.size(); ++mask) {
        if (minors[mask].is_zero())
            continue;
        const auto row = static_cast<std::size_t>(std::popcount(mask));
        if (row == n)
            continue;
        for (std::size_t col = 0; col < n; ++col) {
            if (mask & (std::size_t{1} << col) || m[row][col].is_zero())
                continue;
            // Columns already used that lie to the right of col are inversions.
            const auto above = mask >> (col + 1);
            MultiPoly term = poly_mul(minors[mask], m[row][col]);
            if (std::popcount(above) % 2 == 1)
                minors[mask | (std::size_t{1} << col)] -= term;
            else
                minors[mask | (std::size_t{1} << col)] += term;
        }
    }
    return minors.back();
}

MultiPoly SchurContext::complete_homogeneous(int k) const
{
    if (k < 0)
        return MultiPoly(num_vars_);
    return memoized(mutex_, complete_, k, [&] {
        if (k == 0)
            return MultiPoly::constant(num_vars_, 1);
        if (num_vars_ == 0)
            return MultiPoly(0);
        std::vector<Term> terms;
        Exponents e(num_vars_, 0);
        fill_monomials(e, 0, k, terms);
        return MultiPoly::from_terms(num_vars_, std::move(terms));
    });
}

PolyMatrix SchurContext::jacobi_trudi_matrix(const Partition& lambda) const
{
    const std::size_t l = lambda.length();
    PolyMatrix m(l);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j)
            m[i].push_back(complete_homogeneous(lambda.part(i) - static_cast<int>(i) +
                                                static_cast<int>(j)));
    return m;
}

MultiPoly SchurContext::schur(const Partition& lambda) const
{
    return memoized(mutex_, schur_, lambda,
                    [&] { return determinant(jacobi_trudi_matrix(lambda), num_vars_); });
}

MultiPoly SchurContext::schur_by_branching(const Partition& lambda) const
{
    return branching(lambda, num_vars_);
}

MultiPoly SchurContext::branching(const Partition& lambda, std::size_t vars) const
{
    if (vars == 0)
        return lambda.empty() ? MultiPoly::constant(num_vars_, 1) : MultiPoly(num_vars_);
    return memoized(mutex_, branch_, std::pair{lambda, vars}, [&] {
        MultiPoly out(num_vars_);
        const int weight = lambda.weight();
        for (const auto& nu : enumerate_interlacing_below(lambda)) {
            MultiPoly sub = branching(nu, vars - 1);
            if (sub.is_zero())
                continue;
            out += poly_mul(sub, MultiPoly::variable(num_vars_, vars - 1, weight - nu.weight()));
        }
        return out;
    });
}

} // namespace vcauchy
