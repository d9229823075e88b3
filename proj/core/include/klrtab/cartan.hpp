#pragma once

#include <cstddef>
#include <vector>

#include "klrtab/rational.hpp"

namespace klrtab {

/// Cartan datum of type A_{n-1}.  The index set is I = {1, ..., n-1};
/// all d_i = 1, so the symmetric bilinear form restricted to roots is
/// the Cartan matrix itself.
struct CartanA {
    explicit CartanA(int n);

    int n;

    int rank() const { return n - 1; }

    /// Cartan matrix entry a_{ij} = <h_i, alpha_j>.
    int a(int i, int j) const;

    /// Entry (i,j) of the inverse Cartan matrix, min(i,j)(n-max(i,j))/n.
    Rational inverse_entry(int i, int j) const;

    void check_index(int i) const;
};

/// Integral weight in the fundamental-weight basis: coordinate i is
/// <h_i, lambda> for i = 1, ..., n-1.
class WeightVec {
public:
    WeightVec() = default;
    explicit WeightVec(std::vector<long long> coords) : c_(std::move(coords)) {}

    static WeightVec zero(const CartanA& cd) {
        return WeightVec(std::vector<long long>(cd.rank(), 0));
    }
    static WeightVec fundamental(int i, const CartanA& cd);

    int rank() const { return static_cast<int>(c_.size()); }
    long long operator[](int i) const { return c_.at(i - 1); }  // 1-based
    const std::vector<long long>& coords() const { return c_; }

    bool dominant() const;

    WeightVec operator+(const WeightVec& o) const;
    WeightVec operator-(const WeightVec& o) const;
    WeightVec operator*(long long k) const;
    friend bool operator==(const WeightVec&, const WeightVec&) = default;

private:
    std::vector<long long> c_;
};

/// Element of the root lattice Q in the simple-root basis.
class RootVec {
public:
    RootVec() = default;
    explicit RootVec(std::vector<long long> coeffs) : c_(std::move(coeffs)) {}

    static RootVec zero(const CartanA& cd) {
        return RootVec(std::vector<long long>(cd.rank(), 0));
    }
    static RootVec simple(int i, const CartanA& cd);

    int rank() const { return static_cast<int>(c_.size()); }
    long long operator[](int i) const { return c_.at(i - 1); }  // 1-based
    const std::vector<long long>& coeffs() const { return c_; }

    bool in_positive_cone() const;
    long long height() const;

    RootVec operator+(const RootVec& o) const;
    RootVec operator-(const RootVec& o) const;
    RootVec operator*(long long k) const;
    friend bool operator==(const RootVec&, const RootVec&) = default;

private:
    std::vector<long long> c_;
};

/// The symmetric bilinear form ( , ).  (alpha_i, alpha_j) = a_{ij},
/// (alpha_i, Lambda_j) = delta_{ij}, (Lambda_i, Lambda_j) = inverse
/// Cartan entry.  Root/root and root/weight pairings are integers; the
/// Rational return type keeps one signature for all four combinations.
Rational pair_form(const RootVec& x, const RootVec& y, const CartanA& cd);
Rational pair_form(const RootVec& x, const WeightVec& y, const CartanA& cd);
Rational pair_form(const WeightVec& x, const RootVec& y, const CartanA& cd);
Rational pair_form(const WeightVec& x, const WeightVec& y, const CartanA& cd);

/// <h_i, lambda>, i.e. coordinate i of lambda.
long long coroot_pairing(int i, const WeightVec& lambda, const CartanA& cd);

/// Basis change Q -> P, multiplying by the Cartan matrix.
WeightVec root_to_weight(const RootVec& beta, const CartanA& cd);

}  // namespace klrtab
