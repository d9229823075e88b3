#include "klrtab/degrees.hpp"

#include <stdexcept>

namespace klrtab {

namespace {

TensorElt concat(const TensorElt& a, const TensorElt& b) {
    if (a.n != b.n) throw std::invalid_argument("concat: n mismatch");
    auto factors = a.factors;
    factors.insert(factors.end(), b.factors.begin(), b.factors.end());
    return TensorElt(a.n, std::move(factors));
}

long long as_int(const Rational& r, const char* what) {
    if (!r.is_integer()) throw std::logic_error(std::string(what) + ": expected an integer");
    return r.num();
}

}  // namespace

RootVec path_content(const std::vector<int>& path, const CartanA& cd) {
    RootVec beta = RootVec::zero(cd);
    for (int i : path) beta = beta + RootVec::simple(i, cd);
    return beta;
}

RootVec beta_of(const TensorElt& b, const WeightVec& lambda, const CartanA& cd) {
    auto [hw, path] = to_highest_weight(b, cd);
    if (!(stats(hw, cd).wt == lambda))
        throw std::invalid_argument("beta_of: element does not lie in a copy of B(lambda)");
    return path_content(path, cd);
}

void require_in_component(const TensorElt& b1, const WeightVec& l1, const TensorElt& b2,
                          const WeightVec& l2, const CartanA& cd) {
    auto [h1, p1] = to_highest_weight(b1, cd);
    auto [h2, p2] = to_highest_weight(b2, cd);
    if (!(stats(h1, cd).wt == l1) || !(stats(h2, cd).wt == l2))
        throw std::invalid_argument("require_in_component: factor weight mismatch");
    if (!(to_highest_weight(concat(b1, b2), cd).first == concat(h1, h2)))
        throw std::invalid_argument(
            "require_in_component: b1 (x) b2 lies outside C_{lambda1,lambda2}");
}

long long head_shift_t(const std::vector<RootVec>& betas, const std::vector<WeightVec>& lambdas,
                       const CartanA& cd) {
    if (betas.size() != lambdas.size())
        throw std::invalid_argument("head_shift_t: length mismatch");
    Rational t(0);
    for (std::size_t i = 0; i < betas.size(); ++i)
        for (std::size_t j = i + 1; j < betas.size(); ++j)
            t += pair_form(betas[j], lambdas[i], cd);
    return as_int(t, "head_shift_t");
}

long long hom_degree_d(const TensorElt& b1, const WeightVec& l1, const TensorElt& b2,
                       const WeightVec& l2, const TensorElt& b1p, const WeightVec& l1p,
                       const TensorElt& b2p, const WeightVec& l2p, const CartanA& cd) {
    if (!(l1 + l2 == l1p + l2p))
        throw std::invalid_argument("hom_degree_d: weight sums differ");
    require_in_component(b1, l1, b2, l2, cd);
    if (!crystal_equivalent(concat(b1, b2), concat(b1p, b2p), cd))
        throw std::invalid_argument("hom_degree_d: pairs are not crystal equivalent");

    RootVec beta2 = beta_of(b2, l2, cd);
    RootVec beta1p = beta_of(b1p, l1p, cd);
    RootVec beta2p = beta_of(b2p, l2p, cd);
    Rational d = pair_form(beta2, l1, cd) + pair_form(beta2p, l1p, cd) -
                 pair_form(beta1p, beta2p, cd);
    return as_int(d, "hom_degree_d");
}

LambdaInvariants lambda_invariants(const TensorElt& b1, const WeightVec& l1, const TensorElt& b2,
                                   const WeightVec& l2, const CartanA& cd) {
    require_in_component(b1, l1, b2, l2, cd);
    RootVec beta1 = beta_of(b1, l1, cd);
    RootVec beta2 = beta_of(b2, l2, cd);

    LambdaInvariants inv;
    inv.lambda_tilde = as_int(pair_form(beta2, l1, cd), "lambda_tilde");
    inv.lambda = 2 * inv.lambda_tilde - as_int(pair_form(beta1, beta2, cd), "lambda");
    // consistency with the definition via wt M = -beta
    Rational check = (Rational(inv.lambda) + pair_form(beta1, beta2, cd)) * Rational(1, 2);
    if (!(check == Rational(inv.lambda_tilde)))
        throw std::logic_error("lambda_invariants: tilde consistency failed");
    return inv;
}

LambdaInvariants lambda_invariants(const TensorElt& b1, const WeightVec& l1, const TensorElt& b2,
                                   const WeightVec& l2, const WeightVec& l2p,
                                   const TensorElt& b2p, const CartanA& cd) {
    LambdaInvariants inv = lambda_invariants(b1, l1, b2, l2, cd);
    RootVec beta1 = beta_of(b1, l1, cd);
    RootVec beta2 = beta_of(b2, l2, cd);
    RootVec beta2p = beta_of(b2p, l2p, cd);
    if (!(beta2p == beta2))
        throw std::invalid_argument("lambda_invariants: primed element has different content");

    Rational d =
        pair_form(beta1, l2p, cd) + pair_form(beta2, l1, cd) - pair_form(beta1, beta2, cd);
    // the same quantity through weights
    WeightVec wt1 = stats(b1, cd).wt;
    WeightVec wt2p = stats(b2p, cd).wt;
    Rational d2 = pair_form(l1, l2p, cd) - pair_form(wt1, wt2p, cd);
    if (!(d == d2)) throw std::logic_error("lambda_invariants: d expressions disagree");
    inv.d = d;
    return inv;
}

bool strongly_commute(const TensorElt& b1, const WeightVec& l1, const TensorElt& b2,
                      const WeightVec& l2, const CartanA& cd) {
    require_in_component(b1, l1, b2, l2, cd);
    require_in_component(b2, l2, b1, l1, cd);

    bool by_pairing = pair_form(l1, l2, cd) ==
                      pair_form(stats(b1, cd).wt, stats(b2, cd).wt, cd);
    bool by_crystal = crystal_equivalent(concat(b1, b2), concat(b2, b1), cd);
    if (by_pairing != by_crystal)
        throw std::logic_error("strongly_commute: pairing and crystal checks disagree");
    return by_pairing;
}

}  // namespace klrtab
