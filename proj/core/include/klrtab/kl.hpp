#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "klrtab/laurent.hpp"
#include "klrtab/permutation.hpp"

namespace klrtab {

/// Kazhdan-Lusztig polynomials P_{x,y}(t) for one symmetric group S_m,
/// computed by the classical recursion with an (x, y) memo.  Not
/// internally synchronized; use through kl_poly(), which serializes
/// access, or confine an instance to one thread.
class KLContext {
public:
    explicit KLContext(int m);

    LaurentInt poly(const Permutation& x, const Permutation& y);
    /// Coefficient of t^{(l(y)-l(x)-1)/2} in P_{x,y}; 0 for even gaps.
    long long mu(const Permutation& x, const Permutation& y);

    std::size_t memo_size() const { return memo_.size(); }

private:
    using Word = std::vector<int>;
    using Poly = std::vector<long long>;  // dense, degree-indexed

    Poly lookup(Word x, const Word& y);
    Poly compute(const Word& x, const Word& y);
    long long mu_value(Word x, const Word& y);

    int m_;
    // keyed by (code(x) << 32 | index) is not exact past m = 8, so key
    // y-code first, then x-code
    std::unordered_map<std::uint64_t, std::unordered_map<std::uint64_t, Poly>> memo_;
};

/// Shared per-window-size contexts behind a lock; deterministic.
LaurentInt kl_poly(const Permutation& x, const Permutation& y);
long long kl_mu(const Permutation& x, const Permutation& y);

}  // namespace klrtab
