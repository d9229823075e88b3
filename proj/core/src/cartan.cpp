#include "klrtab/cartan.hpp"

#include <algorithm>
#include <stdexcept>

namespace klrtab {

CartanA::CartanA(int n_) : n(n_) {
    if (n < 2) throw std::invalid_argument("CartanA: n must be >= 2");
}

int CartanA::a(int i, int j) const {
    check_index(i);
    check_index(j);
    if (i == j) return 2;
    if (i == j + 1 || j == i + 1) return -1;
    return 0;
}

Rational CartanA::inverse_entry(int i, int j) const {
    check_index(i);
    check_index(j);
    long long lo = std::min(i, j), hi = std::max(i, j);
    return Rational(lo * (n - hi), n);
}

void CartanA::check_index(int i) const {
    if (i < 1 || i > n - 1)
        throw std::out_of_range("CartanA: index " + std::to_string(i) +
                                " outside I = {1,...," + std::to_string(n - 1) + "}");
}

namespace {

void check_rank(int got, const CartanA& cd, const char* what) {
    if (got != cd.rank())
        throw std::invalid_argument(std::string(what) + ": dimension mismatch with Cartan datum");
}

std::vector<long long> add(const std::vector<long long>& a, const std::vector<long long>& b,
                           long long sb) {
    if (a.size() != b.size())
        throw std::invalid_argument("lattice vectors: dimension mismatch");
    std::vector<long long> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + sb * b[i];
    return r;
}

}  // namespace

WeightVec WeightVec::fundamental(int i, const CartanA& cd) {
    cd.check_index(i);
    std::vector<long long> c(cd.rank(), 0);
    c[i - 1] = 1;
    return WeightVec(std::move(c));
}

bool WeightVec::dominant() const {
    return std::all_of(c_.begin(), c_.end(), [](long long x) { return x >= 0; });
}

WeightVec WeightVec::operator+(const WeightVec& o) const { return WeightVec(add(c_, o.c_, 1)); }
WeightVec WeightVec::operator-(const WeightVec& o) const { return WeightVec(add(c_, o.c_, -1)); }
WeightVec WeightVec::operator*(long long k) const {
    auto c = c_;
    for (auto& x : c) x *= k;
    return WeightVec(std::move(c));
}

RootVec RootVec::simple(int i, const CartanA& cd) {
    cd.check_index(i);
    std::vector<long long> c(cd.rank(), 0);
    c[i - 1] = 1;
    return RootVec(std::move(c));
}

bool RootVec::in_positive_cone() const {
    return std::all_of(c_.begin(), c_.end(), [](long long x) { return x >= 0; });
}

long long RootVec::height() const {
    long long h = 0;
    for (auto x : c_) h += x;
    return h;
}

RootVec RootVec::operator+(const RootVec& o) const { return RootVec(add(c_, o.c_, 1)); }
RootVec RootVec::operator-(const RootVec& o) const { return RootVec(add(c_, o.c_, -1)); }
RootVec RootVec::operator*(long long k) const {
    auto c = c_;
    for (auto& x : c) x *= k;
    return RootVec(std::move(c));
}

Rational pair_form(const RootVec& x, const RootVec& y, const CartanA& cd) {
    check_rank(x.rank(), cd, "pair_form");
    check_rank(y.rank(), cd, "pair_form");
    long long s = 0;
    for (int i = 1; i <= cd.rank(); ++i) {
        if (x[i] == 0) continue;
        // tridiagonal Cartan matrix: only j = i-1, i, i+1 contribute
        for (int j = std::max(1, i - 1); j <= std::min(cd.rank(), i + 1); ++j)
            s += x[i] * cd.a(i, j) * y[j];
    }
    return Rational(s);
}

Rational pair_form(const RootVec& x, const WeightVec& y, const CartanA& cd) {
    check_rank(x.rank(), cd, "pair_form");
    check_rank(y.rank(), cd, "pair_form");
    long long s = 0;
    for (int i = 1; i <= cd.rank(); ++i) s += x[i] * y[i];
    return Rational(s);
}

Rational pair_form(const WeightVec& x, const RootVec& y, const CartanA& cd) {
    return pair_form(y, x, cd);
}

Rational pair_form(const WeightVec& x, const WeightVec& y, const CartanA& cd) {
    check_rank(x.rank(), cd, "pair_form");
    check_rank(y.rank(), cd, "pair_form");
    Rational s(0);
    for (int i = 1; i <= cd.rank(); ++i) {
        if (x[i] == 0) continue;
        for (int j = 1; j <= cd.rank(); ++j) {
            if (y[j] == 0) continue;
            s += cd.inverse_entry(i, j) * Rational(x[i] * y[j]);
        }
    }
    return s;
}

long long coroot_pairing(int i, const WeightVec& lambda, const CartanA& cd) {
    cd.check_index(i);
    check_rank(lambda.rank(), cd, "coroot_pairing");
    return lambda[i];
}

WeightVec root_to_weight(const RootVec& beta, const CartanA& cd) {
    check_rank(beta.rank(), cd, "root_to_weight");
    std::vector<long long> c(cd.rank());
    for (int i = 1; i <= cd.rank(); ++i) {
        long long s = 0;
        for (int j = std::max(1, i - 1); j <= std::min(cd.rank(), i + 1); ++j)
            s += cd.a(i, j) * beta[j];
        c[i - 1] = s;
    }
    return WeightVec(std::move(c));
}

}  // namespace klrtab
