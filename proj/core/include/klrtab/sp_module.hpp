#pragma once

#include <map>
#include <string>
#include <vector>

#include "klrtab/cartan.hpp"
#include "klrtab/qchar.hpp"
#include "klrtab/tableaux.hpp"

namespace klrtab {

/// Parameters Q_{i,j}(u,v) of the quiver Hecke algebra, as coefficient
/// maps keyed by (deg u, deg v).  The type A default is
/// Q_{i,i+1} = u - v, Q_{i+1,i} = v - u, Q_{i,j} = 1 for |i-j| > 1.
struct QParams {
    std::map<std::pair<int, int>, std::map<std::pair<int, int>, long long>> coeffs;

    static QParams type_a_default(const CartanA& cd);

    const std::map<std::pair<int, int>, long long>& poly(int i, int j) const;
    long long eval00(int i, int j) const;
    /// Coefficient of u^1 v^0; equals the divided difference
    /// (Q(u,v) - Q(w,v)) / (u - w) evaluated at u = v = w = 0.
    long long u_coeff(int i, int j) const;

    /// Q_{i,j}(u,v) = Q_{j,i}(v,u), Q_{i,i} = 0, homogeneity, and an
    /// invertible leading coefficient.  Throws on violation.
    void validate(const CartanA& cd) const;
};

/// The homogeneous module Sp^T on the standard tableaux of shape xi_T:
/// x acts by zero, e(nu) projects onto the matching residue word, and
/// tau_j swaps entries j, j+1 when the result is standard.
struct SpModule {
    ColumnTableau T;
    int k = 0;  // |T|
    int n = 0;
    std::vector<StandardTab> basis;
    std::vector<std::vector<int>> residues;  // res word per basis vector
    // tau[j-1][s] = target basis index of tau_j on vector s, or -1
    std::vector<std::vector<int>> tau;

    int dim() const { return static_cast<int>(basis.size()); }
    int word_length() const { return basis.empty() ? 0 : static_cast<int>(basis[0].size()); }
    QChar qcharacter(const CartanA& cd) const;
};

SpModule build_sp(const ColumnTableau& T, const CartanA& cd);

struct RelationReport {
    struct Item {
        std::string relation;
        std::string instance;
        bool ok;
    };
    std::vector<Item> items;

    bool all_ok() const;
    std::size_t failures() const;
};

/// Evaluate every defining relation on every basis vector with x = 0.
RelationReport verify_qha_relations(const SpModule& M, const QParams& qp);

/// The cyclotomic condition for Lambda_k: the exponent <h_{nu_last},
/// Lambda_k> must be >= 1 wherever e(nu) acts nonzero, i.e. every
/// residue word ends in k.
RelationReport verify_cyclotomic(const SpModule& M);

}  // namespace klrtab
