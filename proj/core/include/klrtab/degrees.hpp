#pragma once

#include <optional>
#include <vector>

#include "klrtab/cartan.hpp"
#include "klrtab/crystal.hpp"

namespace klrtab {

/// Root-lattice content of a raising path (one alpha_i per step).
RootVec path_content(const std::vector<int>& path, const CartanA& cd);

/// beta = lambda - wt(b), computed as the content of the raising path
/// of b.  Throws if b's component is not a copy of B(lambda), i.e. the
/// highest weight reached differs from lambda.
RootVec beta_of(const TensorElt& b, const WeightVec& lambda, const CartanA& cd);

/// Checks b1 (x) b2 in C_{lambda1, lambda2}; throws on failure.
void require_in_component(const TensorElt& b1, const WeightVec& l1, const TensorElt& b2,
                          const WeightVec& l2, const CartanA& cd);

/// t = sum_{i<j} (beta_j, lambda_i); the grading shift putting the
/// simple head of L(b_1) o ... o L(b_r) into self-dual position.
long long head_shift_t(const std::vector<RootVec>& betas, const std::vector<WeightVec>& lambdas,
                       const CartanA& cd);

/// d = (beta_2, lambda_1) + (beta_2', lambda_1') - (beta_1', beta_2'),
/// the degree of the distinguished homomorphism
/// q^d L(b1) o L(b2) -> L(b2') o L(b1').  Hypotheses checked: equal
/// weight sums, b1 (x) b2 in C_{lambda1,lambda2}, and crystal
/// equivalence with the primed pair.  Realness is the caller's
/// obligation (automatic for column tableaux).
long long hom_degree_d(const TensorElt& b1, const WeightVec& l1, const TensorElt& b2,
                       const WeightVec& l2, const TensorElt& b1p, const WeightVec& l1p,
                       const TensorElt& b2p, const WeightVec& l2p, const CartanA& cd);

struct LambdaInvariants {
    long long lambda_tilde = 0;              // (beta_2, lambda_1)
    long long lambda = 0;                    // (beta_2, 2 lambda_1 - beta_1)
    std::optional<Rational> d;               // only with primed data
};

LambdaInvariants lambda_invariants(const TensorElt& b1, const WeightVec& l1, const TensorElt& b2,
                                   const WeightVec& l2, const CartanA& cd);
/// With primed data (lambda_2', b2'), also computes
/// d = (beta_1, lambda_2') + (beta_2, lambda_1) - (beta_1, beta_2) and
/// cross-checks it against (lambda_1, lambda_2') - (wt b1, wt b2').
LambdaInvariants lambda_invariants(const TensorElt& b1, const WeightVec& l1, const TensorElt& b2,
                                   const WeightVec& l2, const WeightVec& l2p,
                                   const TensorElt& b2p, const CartanA& cd);

/// (lambda_1, lambda_2) = (wt b1, wt b2), cross-validated against
/// crystal equivalence of b1 (x) b2 and b2 (x) b1.
bool strongly_commute(const TensorElt& b1, const WeightVec& l1, const TensorElt& b2,
                      const WeightVec& l2, const CartanA& cd);

}  // namespace klrtab
