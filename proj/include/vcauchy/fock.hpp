#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include <json.hpp>

#include "vcauchy/partition.hpp"
#include "vcauchy/poly.hpp"

namespace vcauchy {

/// Finite combination of Schur basis vectors |lambda> with polynomial
/// amplitudes in a fixed number of variables. Every basis partition has weight
/// at most weight_cap; zero amplitudes are never stored.
class FockState {
public:
    FockState(std::size_t arity, int weight_cap);

    /// |0>, the state with amplitude 1 on the empty partition.
    static FockState vacuum(std::size_t arity, int weight_cap = 0);
    static FockState basis(std::size_t arity, const Partition& lambda, const BigInt& sign = 1);

    std::size_t arity() const { return arity_; }
    int weight_cap() const { return weight_cap_; }
    const std::map<Partition, MultiPoly>& amplitudes() const { return amplitudes_; }
    bool is_zero() const { return amplitudes_.empty(); }

    MultiPoly amplitude(const Partition& lambda) const;

    /// Adds coef * |lambda>. Throws CapExceeded or ArityMismatch.
    void add(const Partition& lambda, const MultiPoly& coef);

    FockState operator-() const;

    /// Equal amplitudes in the same arity; the caps may differ.
    bool operator==(const FockState& other) const;

private:
    std::size_t arity_;
    int weight_cap_;
    std::map<Partition, MultiPoly> amplitudes_;
};

/// phi_{-c1} ... phi_{-cl} |0>, i.e. the straightened basis vector or zero.
/// Throws std::invalid_argument on a negative entry.
FockState basis_from_composition(const Composition& c, std::size_t arity = 0);

/// <lambda|mu> = (-1)^{|lambda|} if mu is the conjugate of lambda, else 0.
int inner_product(const Partition& lambda, const Partition& mu);

/// Same pairing from the residue computation: the sequence
/// (k+l-lambda_l, ..., k+1-lambda_1, mu_1+k, ..., mu_k+1) is matched with
/// (l+k, ..., 1); the pairing is the sign of that matching, or 0 when the
/// sequence is not a permutation of 1..l+k.
int inner_product_shuffle_oracle(const Partition& lambda, const Partition& mu);

/// phi+(x) |lambda> = sum over mu interlacing lambda, |mu| <= degree_cap, of
/// x^{|mu| - |lambda|} |mu>, extended linearly. var_index is zero-based.
/// Throws CapExceeded when degree_cap < s.weight_cap().
FockState apply_half_vertex(const FockState& s, std::size_t var_index, int degree_cap);

/// phi+(x1) ... phi+(xN) |0> truncated at weight degree_cap, with variables
/// x1..xN placed at [first_var, first_var + N) of a ring of the given arity.
FockState vacuum_product_state(std::size_t num_vars, int degree_cap, std::size_t arity,
                               std::size_t first_var);
/// Same, in exactly num_vars variables.
FockState vacuum_product_state(std::size_t num_vars, int degree_cap);

/// Pairs a bra-side state (given by its ket coefficients) with a ket-side state:
/// sum over lambda, mu of bra[lambda] * ket[mu] * <lambda|mu>.
MultiPoly contract(const FockState& bra, const FockState& ket);

/// One half vertex operator in a word: phi-(x) (annihilating, acts to the left
/// on the dual vacuum) or phi+(x).
struct HalfVertex {
    enum class Kind { minus, plus };
    Kind kind;
    std::size_t var;
};

/// Vacuum expectation of a word of half vertex operators by normal ordering:
/// every adjacent phi-(z) phi+(w) is rewritten as (1 - zw) phi+(w) phi-(z),
/// after which <0| phi+ ... phi- ... |0> = 1.
MultiPoly normal_ordered_expectation(std::span<const HalfVertex> word, std::size_t arity);

/// [{"partition": "a,b,c", "amplitude": <MultiPoly>}, ...] in graded order.
void to_json(nlohmann::json& j, const FockState& s);

} // namespace vcauchy
