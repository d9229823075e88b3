#include "klrtab/crystal.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace klrtab {

namespace detail {

// Right-to-left fold of the tensor rule.  suffix[j] holds
// (eps, phi, <h,wt>) of factors j..r-1.
static std::vector<FactorStat> suffix_stats(const std::vector<FactorStat>& f) {
    std::vector<FactorStat> s(f.size());
    s.back() = f.back();
    for (int j = static_cast<int>(f.size()) - 2; j >= 0; --j) {
        const FactorStat &a = f[j], &b = s[j + 1];
        s[j].eps = std::max(a.eps, b.eps - static_cast<int>(a.hwt));
        s[j].phi = std::max(a.phi + static_cast<int>(b.hwt), b.phi);
        s[j].hwt = a.hwt + b.hwt;
    }
    return s;
}

std::pair<int, int> tensor_eps_phi(const std::vector<FactorStat>& f) {
    auto s = suffix_stats(f);
    return {s[0].eps, s[0].phi};
}

int tensor_e_position(const std::vector<FactorStat>& f) {
    auto s = suffix_stats(f);
    if (s[0].eps <= 0) return -1;
    // e acts on b_1 (x) rest at b_1 when phi(b_1) >= eps(rest)
    std::size_t j = 0;
    for (; j + 1 < f.size(); ++j)
        if (f[j].phi >= s[j + 1].eps) break;
    return static_cast<int>(j);
}

int tensor_f_position(const std::vector<FactorStat>& f) {
    auto s = suffix_stats(f);
    if (s[0].phi <= 0) return -1;
    std::size_t j = 0;
    for (; j + 1 < f.size(); ++j)
        if (f[j].phi > s[j + 1].eps) break;
    return static_cast<int>(j);
}

}  // namespace detail

TensorElt::TensorElt(int n_, std::vector<ColumnTableau> factors_)
    : n(n_), factors(std::move(factors_)) {
    if (factors.empty()) throw std::invalid_argument("TensorElt: need at least one factor");
    for (const auto& T : factors) {
        if (T.n != n) throw std::invalid_argument("TensorElt: factor n mismatch");
        if (T.size() < 1 || T.size() > n - 1)
            throw std::invalid_argument("TensorElt: factor size must be in 1..n-1");
    }
}

WeightVec column_weight(const ColumnTableau& T, const CartanA& cd) {
    return WeightVec::fundamental(T.size(), cd) - root_to_weight(beta_of_column(T, cd), cd);
}

namespace {

int column_eps(int i, const ColumnTableau& T) {
    return T.contains(i + 1) && !T.contains(i) ? 1 : 0;
}
int column_phi(int i, const ColumnTableau& T) {
    return T.contains(i) && !T.contains(i + 1) ? 1 : 0;
}

// Replace entry `from` by `to`; strict increase is preserved whenever
// the corresponding crystal operator is defined.
ColumnTableau column_replace(const ColumnTableau& T, int from, int to) {
    auto entries = T.entries;
    for (auto& e : entries)
        if (e == from) e = to;
    std::sort(entries.begin(), entries.end());
    return ColumnTableau(T.n, std::move(entries));
}

std::vector<detail::FactorStat> factor_stats(int i, const TensorElt& b, const CartanA& cd) {
    std::vector<detail::FactorStat> f;
    f.reserve(b.factors.size());
    for (const auto& T : b.factors)
        f.push_back({column_eps(i, T), column_phi(i, T), column_weight(T, cd)[i]});
    return f;
}

}  // namespace

CrystalStats stats(const TensorElt& b, const CartanA& cd) {
    if (b.n != cd.n) throw std::invalid_argument("stats: n mismatch");
    CrystalStats st;
    st.wt = WeightVec::zero(cd);
    for (const auto& T : b.factors) st.wt = st.wt + column_weight(T, cd);
    st.eps.resize(cd.rank());
    st.phi.resize(cd.rank());
    for (int i = 1; i <= cd.rank(); ++i) {
        auto [e, p] = detail::tensor_eps_phi(factor_stats(i, b, cd));
        st.eps[i - 1] = e;
        st.phi[i - 1] = p;
    }
    return st;
}

std::optional<TensorElt> apply_e(int i, const TensorElt& b, const CartanA& cd) {
    cd.check_index(i);
    if (b.n != cd.n) throw std::invalid_argument("apply_e: n mismatch");
    int pos = detail::tensor_e_position(factor_stats(i, b, cd));
    if (pos < 0) return std::nullopt;
    TensorElt r = b;
    r.factors[pos] = column_replace(r.factors[pos], i + 1, i);
    return r;
}

std::optional<TensorElt> apply_f(int i, const TensorElt& b, const CartanA& cd) {
    cd.check_index(i);
    if (b.n != cd.n) throw std::invalid_argument("apply_f: n mismatch");
    int pos = detail::tensor_f_position(factor_stats(i, b, cd));
    if (pos < 0) return std::nullopt;
    TensorElt r = b;
    r.factors[pos] = column_replace(r.factors[pos], i, i + 1);
    return r;
}

std::pair<TensorElt, std::vector<int>> to_highest_weight(const TensorElt& b, const CartanA& cd) {
    TensorElt cur = b;
    std::vector<int> path;
    for (;;) {
        bool moved = false;
        for (int i = 1; i <= cd.rank() && !moved; ++i) {
            if (auto up = apply_e(i, cur, cd)) {
                cur = std::move(*up);
                path.push_back(i);
                moved = true;
            }
        }
        if (!moved) return {cur, path};
    }
}

bool in_component(const TensorElt& b, const TensorElt& highest, const CartanA& cd) {
    auto st = stats(highest, cd);
    for (int e : st.eps)
        if (e != 0) throw std::invalid_argument("in_component: `highest` is not highest weight");
    return to_highest_weight(b, cd).first == highest;
}

bool crystal_equivalent(const TensorElt& b, const TensorElt& b2, const CartanA& cd) {
    if (b.n != b2.n) throw std::invalid_argument("crystal_equivalent: n mismatch");
    // A component isomorphism preserves wt; eps/phi are determined by
    // the labeled graph, so a parallel BFS matching edge defined-ness
    // plus equal weights at the roots decides equivalence.
    if (!(stats(b, cd).wt == stats(b2, cd).wt)) return false;

    std::map<TensorElt, TensorElt> match;
    std::deque<std::pair<TensorElt, TensorElt>> queue;
    match.emplace(b, b2);
    queue.emplace_back(b, b2);
    while (!queue.empty()) {
        auto [x, y] = queue.front();
        queue.pop_front();
        for (int i = 1; i <= cd.rank(); ++i) {
            auto xe = apply_e(i, x, cd), ye = apply_e(i, y, cd);
            if (xe.has_value() != ye.has_value()) return false;
            auto xf = apply_f(i, x, cd), yf = apply_f(i, y, cd);
            if (xf.has_value() != yf.has_value()) return false;
            for (auto [xn, yn] : {std::pair{xe, ye}, std::pair{xf, yf}}) {
                if (!xn) continue;
                auto it = match.find(*xn);
                if (it == match.end()) {
                    match.emplace(*xn, *yn);
                    queue.emplace_back(*xn, *yn);
                } else if (!(it->second == *yn)) {
                    return false;
                }
            }
        }
    }
    return true;
}

TensorElt columns_of_ssyt(const SSYTab& T) {
    if (T.rows.empty()) throw std::invalid_argument("columns_of_ssyt: empty tableau");
    std::vector<ColumnTableau> factors;
    for (int q = T.num_columns(); q >= 1; --q) factors.push_back(T.column(q));
    return TensorElt(T.n, std::move(factors));
}

}  // namespace klrtab
