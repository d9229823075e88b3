#include "klrtab/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace klrtab {

Permutation::Permutation(std::vector<int> word) : w_(std::move(word)) {
    std::vector<char> seen(w_.size() + 1, 0);
    for (int v : w_) {
        if (v < 1 || v > static_cast<int>(w_.size()) || seen[v])
            throw std::invalid_argument("Permutation: not a bijection on {1..m}");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int m) {
    std::vector<int> w(m);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::longest(int m) {
    std::vector<int> w(m);
    for (int i = 0; i < m; ++i) w[i] = m - i;
    return Permutation(std::move(w));
}

int Permutation::length() const {
    int inv = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
        for (std::size_t j = i + 1; j < w_.size(); ++j)
            if (w_[i] > w_[j]) ++inv;
    return inv;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> w(w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i) w[w_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(w));
}

Permutation Permutation::operator*(const Permutation& o) const {
    if (size() != o.size()) throw std::invalid_argument("Permutation: size mismatch");
    std::vector<int> w(w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i) w[i] = w_[o.w_[i] - 1];
    return Permutation(std::move(w));
}

Permutation Permutation::swap_positions(int i) const {
    auto w = w_;
    std::swap(w.at(i - 1), w.at(i));
    return Permutation(std::move(w));
}

Permutation Permutation::swap_values(int i) const {
    auto w = w_;
    for (auto& v : w) {
        if (v == i) v = i + 1;
        else if (v == i + 1) v = i;
    }
    return Permutation(std::move(w));
}

std::uint64_t Permutation::code() const {
    if (w_.size() > 16) throw std::length_error("Permutation: code requires m <= 16");
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
        c |= static_cast<std::uint64_t>(w_[i] - 1) << (4 * i);
    return c;
}

bool bruhat_leq(const Permutation& x, const Permutation& y) {
    if (x.size() != y.size()) throw std::invalid_argument("bruhat_leq: size mismatch");
    const int m = x.size();
    std::vector<int> px, py;
    px.reserve(m);
    py.reserve(m);
    for (int i = 1; i <= m; ++i) {
        // keep prefixes sorted descending
        px.insert(std::lower_bound(px.begin(), px.end(), x(i), std::greater<int>()), x(i));
        py.insert(std::lower_bound(py.begin(), py.end(), y(i), std::greater<int>()), y(i));
        for (int k = 0; k < i; ++k)
            if (px[k] > py[k]) return false;
    }
    return true;
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p <= 0) throw std::invalid_argument("Composition: parts must be positive");
        sum_ += p;
    }
    if (parts_.empty()) throw std::invalid_argument("Composition: need at least one part");
}

std::vector<Permutation> coset_min_reps(const Composition& nu) {
    const int m = nu.sum();
    std::vector<int> word(m);
    std::iota(word.begin(), word.end(), 1);
    std::vector<int> block(m + 1);  // value -> block id
    {
        int b = 0, v = 1;
        for (int p : nu.parts()) {
            for (int t = 0; t < p; ++t) block[v++] = b;
            ++b;
        }
    }
    std::vector<Permutation> out;
    do {
        std::vector<int> last_pos(nu.parts().size(), -1);
        bool minimal = true;
        // within each value block, positions must increase with the value
        std::vector<int> pos(m + 1);
        for (int i = 0; i < m; ++i) pos[word[i]] = i;
        for (int v = 1; v <= m && minimal; ++v) {
            int b = block[v];
            if (pos[v] < last_pos[b]) minimal = false;
            last_pos[b] = pos[v];
        }
        if (minimal) out.emplace_back(word);
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

Permutation coset_minimize(const Permutation& w, const Composition& nu) {
    if (w.size() != nu.sum()) throw std::invalid_argument("coset_minimize: size mismatch");
    const int m = w.size();
    std::vector<int> out(m, 0);
    int lo = 1;
    for (int p : nu.parts()) {
        int hi = lo + p - 1;
        int next = lo;
        for (int i = 1; i <= m; ++i)
            if (w(i) >= lo && w(i) <= hi) out[i - 1] = next++;
        lo = hi + 1;
    }
    return Permutation(std::move(out));
}

}  // namespace klrtab
