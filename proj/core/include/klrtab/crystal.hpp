#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "klrtab/cartan.hpp"
#include "klrtab/tableaux.hpp"

namespace klrtab {

/// Ordered tensor of one-column tableaux; the leftmost factor is the
/// first tensor factor, as in the tensor-product rule.
struct TensorElt {
    TensorElt() = default;
    TensorElt(int n, std::vector<ColumnTableau> factors);

    int n = 0;
    std::vector<ColumnTableau> factors;

    friend bool operator==(const TensorElt&, const TensorElt&) = default;
    friend auto operator<=>(const TensorElt&, const TensorElt&) = default;
};

struct CrystalStats {
    WeightVec wt;
    std::vector<int> eps;  // eps[i-1] = eps_i
    std::vector<int> phi;
};

WeightVec column_weight(const ColumnTableau& T, const CartanA& cd);

CrystalStats stats(const TensorElt& b, const CartanA& cd);

/// Kashiwara raising/lowering; empty optional where undefined.
std::optional<TensorElt> apply_e(int i, const TensorElt& b, const CartanA& cd);
std::optional<TensorElt> apply_f(int i, const TensorElt& b, const CartanA& cd);

/// Raise b to the highest-weight element of its component, applying the
/// smallest applicable i first.  Returns the highest-weight element and
/// the sequence of indices applied, so that lowering along the reversed
/// path recovers b.
std::pair<TensorElt, std::vector<int>> to_highest_weight(const TensorElt& b, const CartanA& cd);

/// True iff b lies in the connected component whose highest-weight
/// element is `highest` (which must satisfy eps_i = 0 for all i).
bool in_component(const TensorElt& b, const TensorElt& highest, const CartanA& cd);

/// Decide crystal equivalence of b and b2 by a parallel breadth-first
/// walk of both components, maintaining a bijection.
bool crystal_equivalent(const TensorElt& b, const TensorElt& b2, const CartanA& cd);

/// Image of a semistandard tableau under T -> T_r (x) ... (x) T_1
/// (columns listed right to left).
TensorElt columns_of_ssyt(const SSYTab& T);

namespace detail {

/// Per-factor data for one fixed index i: (eps_i, phi_i, <h_i, wt>).
struct FactorStat {
    int eps;
    int phi;
    long long hwt;
};

std::pair<int, int> tensor_eps_phi(const std::vector<FactorStat>& f);
/// Index (0-based) of the factor acted on by e_i / f_i, or -1 if the
/// operator is undefined on the tensor.
int tensor_e_position(const std::vector<FactorStat>& f);
int tensor_f_position(const std::vector<FactorStat>& f);

}  // namespace detail

}  // namespace klrtab
