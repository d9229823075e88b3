// Independent oracles used by the test suites.  Everything here is
// deliberately brute force and shares no code with the library paths it
// checks.
#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "klrtab/cartan.hpp"
#include "klrtab/crystal.hpp"
#include "klrtab/laurent.hpp"
#include "klrtab/permutation.hpp"
#include "klrtab/tableaux.hpp"

namespace oracle {

/// Number of standard tableaux by the hook-length formula.
inline long long hook_length_count(const klrtab::YoungDiagram& shape) {
    long long m = shape.size();
    long long numer = 1;
    for (long long v = 2; v <= m; ++v) numer *= v;
    auto conj = klrtab::conjugate(shape);
    long long denom = 1;
    for (int p = 1; p <= shape.rows(); ++p)
        for (int q = 1; q <= shape.part(p); ++q)
            denom *= (shape.part(p) - q) + (conj.part(q) - p) + 1;
    return numer / denom;
}

/// Number of semistandard tableaux with entries <= n by the
/// hook-content formula, computed as an exact rational product.
inline long long hook_content_count(const klrtab::YoungDiagram& shape, int n) {
    auto conj = klrtab::conjugate(shape);
    long long numer = 1, denom = 1;
    for (int p = 1; p <= shape.rows(); ++p)
        for (int q = 1; q <= shape.part(p); ++q) {
            numer *= n + q - p;
            denom *= (shape.part(p) - q) + (conj.part(q) - p) + 1;
            long long g = std::gcd(numer, denom);
            numer /= g;
            denom /= g;
        }
    return numer / denom;
}

/// Bruhat order by reflection-closure: x <= y iff x lies in the
/// downward closure of y under length-decreasing transpositions.
class BruhatClosure {
public:
    bool leq(const klrtab::Permutation& x, const klrtab::Permutation& y) {
        auto& ds = downset(y);
        return ds.count(x.word()) != 0;
    }

private:
    const std::set<std::vector<int>>& downset(const klrtab::Permutation& y) {
        auto it = cache_.find(y.word());
        if (it != cache_.end()) return it->second;
        std::set<std::vector<int>> out;
        std::deque<klrtab::Permutation> queue{y};
        out.insert(y.word());
        while (!queue.empty()) {
            klrtab::Permutation w = queue.front();
            queue.pop_front();
            int lw = w.length();
            for (int i = 1; i <= w.size(); ++i)
                for (int j = i + 1; j <= w.size(); ++j) {
                    auto word = w.word();
                    std::swap(word[i - 1], word[j - 1]);
                    klrtab::Permutation z(word);
                    if (z.length() < lw && out.insert(z.word()).second) queue.push_back(z);
                }
        }
        return cache_.emplace(y.word(), std::move(out)).first->second;
    }

    std::map<std::vector<int>, std::set<std::vector<int>>> cache_;
};

/// Kazhdan-Lusztig polynomials through the R-polynomial recursion and
/// the inversion identity; independent of the library recursion.
class RPolyKL {
public:
    /// P_{x,y}(t) as a LaurentInt in t.
    klrtab::LaurentInt poly(const klrtab::Permutation& x, const klrtab::Permutation& y) {
        if (!klrtab::bruhat_leq(x, y)) return klrtab::LaurentInt();
        // all z with x <= z <= y
        std::vector<klrtab::Permutation> interval;
        std::vector<int> word(y.size());
        for (int i = 0; i < y.size(); ++i) word[i] = i + 1;
        std::sort(word.begin(), word.end());
        do {
            klrtab::Permutation z(word);
            if (klrtab::bruhat_leq(x, z) && klrtab::bruhat_leq(z, y)) interval.push_back(z);
        } while (std::next_permutation(word.begin(), word.end()));
        std::sort(interval.begin(), interval.end(),
                  [](const auto& a, const auto& b) { return a.length() > b.length(); });

        std::map<std::vector<int>, klrtab::LaurentInt> P;
        for (const auto& z : interval) {
            if (z == y) {
                P[z.word()] = klrtab::LaurentInt(1);
                continue;
            }
            // q^L bar(P_{z,y}) - P_{z,y} = sum_{z < w <= y} R_{z,w} P_{w,y}
            klrtab::LaurentInt F;
            for (const auto& w : interval) {
                if (w.length() <= z.length() || !klrtab::bruhat_leq(z, w)) continue;
                F += r_poly(z, w) * P.at(w.word());
            }
            int L = y.length() - z.length();
            klrtab::LaurentInt p;
            for (const auto& [e, c] : F.terms())
                if (2 * e <= L - 1) p += klrtab::LaurentInt::monomial(-c, e);
            P[z.word()] = p;
        }
        return P.at(x.word());
    }

private:
    klrtab::LaurentInt r_poly(const klrtab::Permutation& x, const klrtab::Permutation& y) {
        if (x == y) return klrtab::LaurentInt(1);
        if (!klrtab::bruhat_leq(x, y)) return klrtab::LaurentInt();
        auto key = std::pair{x.word(), y.word()};
        auto it = rmemo_.find(key);
        if (it != rmemo_.end()) return it->second;
        int s = 1;
        while (!y.right_descent(s)) ++s;
        klrtab::Permutation ys = y.swap_positions(s);
        klrtab::LaurentInt r;
        if (x.right_descent(s)) {
            r = r_poly(x.swap_positions(s), ys);
        } else {
            // R_{x,y} = (q-1) R_{x,ys} + q R_{xs,ys}
            klrtab::LaurentInt qm1 = klrtab::LaurentInt::monomial(1, 1) - klrtab::LaurentInt(1);
            r = qm1 * r_poly(x, ys) +
                klrtab::LaurentInt::monomial(1, 1) * r_poly(x.swap_positions(s), ys);
        }
        rmemo_.emplace(key, r);
        return r;
    }

    std::map<std::pair<std::vector<int>, std::vector<int>>, klrtab::LaurentInt> rmemo_;
};

/// Full crystal component of b under e_i and f_i.
inline std::set<klrtab::TensorElt> component(const klrtab::TensorElt& b,
                                             const klrtab::CartanA& cd) {
    std::set<klrtab::TensorElt> seen{b};
    std::deque<klrtab::TensorElt> queue{b};
    while (!queue.empty()) {
        klrtab::TensorElt x = queue.front();
        queue.pop_front();
        for (int i = 1; i <= cd.rank(); ++i) {
            for (auto next : {klrtab::apply_e(i, x, cd), klrtab::apply_f(i, x, cd)})
                if (next && seen.insert(*next).second) queue.push_back(*next);
        }
    }
    return seen;
}

/// All partitions of size 1..maxsize with at most maxrows rows.
inline std::vector<klrtab::YoungDiagram> partitions_up_to(int maxsize, int maxrows) {
    std::vector<klrtab::YoungDiagram> out;
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
        if (static_cast<int>(parts.size()) > maxrows) return;
        if (!parts.empty()) out.emplace_back(parts);
        if (static_cast<int>(parts.size()) == maxrows) return;
        for (int p = std::min(remaining, maxpart); p >= 1; --p) {
            parts.push_back(p);
            rec(remaining - p, p);
            parts.pop_back();
        }
    };
    rec(maxsize, maxsize);
    return out;
}

/// All columns with k entries from {1..n}.
inline std::vector<klrtab::ColumnTableau> all_columns(int n, int k) {
    std::vector<klrtab::ColumnTableau> out;
    std::vector<int> acc;
    std::function<void(int)> rec = [&](int lo) {
        if (static_cast<int>(acc.size()) == k) {
            out.emplace_back(n, acc);
            return;
        }
        for (int v = lo; v <= n; ++v) {
            acc.push_back(v);
            rec(v + 1);
            acc.pop_back();
        }
    };
    rec(1);
    return out;
}

}  // namespace oracle
