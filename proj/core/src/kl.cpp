#include "klrtab/kl.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

namespace klrtab {

namespace {

using Word = std::vector<int>;
using Poly = std::vector<long long>;

int word_length(const Word& w) {
    int inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

std::uint64_t word_code(const Word& w) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        c |= static_cast<std::uint64_t>(w[i] - 1) << (4 * i);
    return c;
}

bool word_bruhat_leq(const Word& x, const Word& y) {
    const int m = static_cast<int>(x.size());
    std::vector<int> px, py;
    px.reserve(m);
    py.reserve(m);
    for (int i = 0; i < m; ++i) {
        px.insert(std::lower_bound(px.begin(), px.end(), x[i], std::greater<int>()), x[i]);
        py.insert(std::lower_bound(py.begin(), py.end(), y[i], std::greater<int>()), y[i]);
        for (int k = 0; k <= i; ++k)
            if (px[k] > py[k]) return false;
    }
    return true;
}

// all z = w t with l(z) = l(w) - 1 (lower covers)
std::vector<Word> covers_down(const Word& w) {
    std::vector<Word> out;
    const int m = static_cast<int>(w.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            if (w[i] <= w[j]) continue;
            bool blocked = false;
            for (int k = i + 1; k < j && !blocked; ++k)
                if (w[j] < w[k] && w[k] < w[i]) blocked = true;
            if (blocked) continue;
            Word z = w;
            std::swap(z[i], z[j]);
            out.push_back(std::move(z));
        }
    return out;
}

void poly_add_shifted(Poly& a, const Poly& b, int shift, long long scale) {
    if (b.empty() || scale == 0) return;
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += scale * b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Repeatedly lift x through ascents at descents of y, on both sides;
// P_{x,y} is unchanged and x stays below y by the lifting property.
void extremalize(Word& x, const Word& y) {
    const int m = static_cast<int>(x.size());
    std::vector<int> xinv(m + 1), yinv(m + 1);
    for (int i = 0; i < m; ++i) yinv[y[i]] = i;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i + 1 < m; ++i)
            if (y[i] > y[i + 1] && x[i] < x[i + 1]) {
                std::swap(x[i], x[i + 1]);
                changed = true;
            }
        for (int i = 0; i < m; ++i) xinv[x[i]] = i;
        for (int v = 1; v < m; ++v)
            if (yinv[v] > yinv[v + 1] && xinv[v] < xinv[v + 1]) {
                std::swap(x[xinv[v]], x[xinv[v + 1]]);
                std::swap(xinv[v], xinv[v + 1]);
                changed = true;
            }
    }
}

}  // namespace

KLContext::KLContext(int m) : m_(m) {
    if (m < 1 || m > 16) throw std::invalid_argument("KLContext: window size must be in 1..16");
}

KLContext::Poly KLContext::lookup(Word x, const Word& y) {
    if (!word_bruhat_leq(x, y)) return {};
    extremalize(x, y);
    if (word_length(y) - word_length(x) <= 2) return {1};

    auto& row = memo_[word_code(y)];
    std::uint64_t xc = word_code(x);
    auto it = row.find(xc);
    if (it != row.end()) return it->second;
    Poly p = compute(x, y);
    memo_[word_code(y)].emplace(xc, p);
    return p;
}

// Classical right-descent recursion: for v = ys < y and xs < x,
//   P_{x,y} = P_{xs,v} + q P_{x,v}
//             - sum_z mu(z,v) q^{(l(y)-l(z))/2} P_{x,z}
// over x <= z <= v with zs < z.
KLContext::Poly KLContext::compute(const Word& x, const Word& y) {
    int s = 0;  // 0-based position of the first right descent of y
    while (y[s] < y[s + 1]) ++s;
    Word v = y;
    std::swap(v[s], v[s + 1]);
    Word xs = x;
    std::swap(xs[s], xs[s + 1]);  // x extremal: xs < x

    const int ly = word_length(y);
    const int lx = word_length(x);

    Poly r = lookup(xs, v);
    poly_add_shifted(r, lookup(x, v), 1, 1);

    // covers of v with a right descent at s: mu = 1, (l(y) - l(z))/2 = 1
    for (const Word& z : covers_down(v)) {
        if (z[s] < z[s + 1]) continue;
        if (!word_bruhat_leq(x, z)) continue;
        poly_add_shifted(r, lookup(Word(x), z), 1, -1);
    }

    // deeper mu terms: z in [x, v] with odd length gap >= 3 to v
    const int lv = ly - 1;
    if (lv - lx >= 3) {
        std::unordered_set<std::uint64_t> seen;
        std::deque<Word> queue;
        queue.push_back(v);
        seen.insert(word_code(v));
        while (!queue.empty()) {
            Word w = std::move(queue.front());
            queue.pop_front();
            for (Word& z : covers_down(w)) {
                std::uint64_t zc = word_code(z);
                if (seen.count(zc)) continue;
                if (word_length(z) < lx) continue;
                if (!word_bruhat_leq(x, z)) continue;
                seen.insert(zc);
                int gap = lv - word_length(z);
                if (gap >= 3 && gap % 2 == 1 && z[s] > z[s + 1]) {
                    long long mu = mu_value(z, v);
                    if (mu != 0)
                        poly_add_shifted(r, lookup(Word(x), z), (ly - word_length(z)) / 2, -mu);
                }
                queue.push_back(std::move(z));
            }
        }
    }
    return r;
}

long long KLContext::mu_value(Word x, const Word& y) {
    int gap = word_length(y) - word_length(x);
    if (gap <= 0 || gap % 2 == 0) return 0;
    Poly p = lookup(std::move(x), y);
    std::size_t want = static_cast<std::size_t>((gap - 1) / 2);
    return want < p.size() ? p[want] : 0;
}

LaurentInt KLContext::poly(const Permutation& x, const Permutation& y) {
    if (x.size() != m_ || y.size() != m_)
        throw std::invalid_argument("KLContext: window size mismatch");
    Poly p = lookup(x.word(), y.word());
    LaurentInt out;
    for (std::size_t d = 0; d < p.size(); ++d)
        out += LaurentInt::monomial(p[d], static_cast<int>(d));
    return out;
}

long long KLContext::mu(const Permutation& x, const Permutation& y) {
    if (x.size() != m_ || y.size() != m_)
        throw std::invalid_argument("KLContext: window size mismatch");
    return mu_value(x.word(), y.word());
}

namespace {

std::mutex g_kl_mutex;

KLContext& registry_for(int m) {
    static std::map<int, KLContext> reg;
    auto it = reg.find(m);
    if (it == reg.end()) it = reg.emplace(m, KLContext(m)).first;
    return it->second;
}

}  // namespace

LaurentInt kl_poly(const Permutation& x, const Permutation& y) {
    if (x.size() != y.size()) throw std::invalid_argument("kl_poly: size mismatch");
    std::scoped_lock lock(g_kl_mutex);
    return registry_for(x.size()).poly(x, y);
}

long long kl_mu(const Permutation& x, const Permutation& y) {
    if (x.size() != y.size()) throw std::invalid_argument("kl_mu: size mismatch");
    std::scoped_lock lock(g_kl_mutex);
    return registry_for(x.size()).mu(x, y);
}

}  // namespace klrtab
