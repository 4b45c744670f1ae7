#pragma once

#include <cstddef>
#include <map>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "vcauchy/partition.hpp"
#include "vcauchy/poly.hpp"

namespace vcauchy {

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// Exact determinant of a square polynomial matrix by Laplace expansion,
/// memoized over the set of columns consumed by the leading rows.
/// Supports up to 20 rows. An empty matrix has determinant 1 of the given arity.
MultiPoly determinant(const PolyMatrix& m, std::size_t arity);

/// Schur polynomials in N variables x1..xN.
///
/// Caches complete homogeneous polynomials and branching results. The caches
/// are guarded by a shared mutex; an entry is always recomputed to the same
/// value, so a lost race on insert is harmless. Safe to share between threads.
class SchurContext {
public:
    explicit SchurContext(std::size_t num_vars) : num_vars_(num_vars) {}

    std::size_t num_vars() const { return num_vars_; }

    /// h_k: the sum of all degree-k monomials; 1 for k = 0 and 0 for k < 0.
    MultiPoly complete_homogeneous(int k) const;

    /// The Jacobi-Trudi matrix (h_{lambda_i - i + j}) of size l(lambda).
    PolyMatrix jacobi_trudi_matrix(const Partition& lambda) const;

    /// det(h_{lambda_i - i + j}). Computed in full even when l(lambda) > N, where
    /// it vanishes.
    MultiPoly schur(const Partition& lambda) const;

    /// Independent route: s_mu(x1..xN) = sum over nu interlaced by mu of
    /// s_nu(x1..x_{N-1}) * xN^{|mu| - |nu|}, down to zero variables.
    MultiPoly schur_by_branching(const Partition& lambda) const;

private:
    MultiPoly branching(const Partition& lambda, std::size_t vars) const;

    std::size_t num_vars_;
    mutable std::shared_mutex mutex_;
    mutable std::map<int, MultiPoly> complete_;
    mutable std::map<Partition, MultiPoly> schur_;
    mutable std::map<std::pair<Partition, std::size_t>, MultiPoly> branch_;
};

} // namespace vcauchy
