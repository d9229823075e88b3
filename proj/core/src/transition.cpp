#include "klrtab/transition.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "klrtab/degrees.hpp"

namespace klrtab {

ColumnStrictConcat::ColumnStrictConcat(int n_, std::vector<ColumnTableau> columns_)
    : n(n_), columns(std::move(columns_)) {
    if (columns.empty()) throw std::invalid_argument("ColumnStrictConcat: no columns");
    for (std::size_t k = 0; k < columns.size(); ++k) {
        const auto& c = columns[k];
        if (c.n != n) throw std::invalid_argument("ColumnStrictConcat: column n mismatch");
        if (c.size() < 1 || c.size() > n - 1)
            throw std::invalid_argument("ColumnStrictConcat: column sizes must be in 1..n-1");
        if (k > 0 && c.size() > columns[k - 1].size())
            throw std::invalid_argument("ColumnStrictConcat: sizes must weakly decrease");
    }
}

int ColumnStrictConcat::m() const {
    int s = 0;
    for (const auto& c : columns) s += c.size();
    return s;
}

YoungDiagram ColumnStrictConcat::shape() const {
    std::vector<int> mu;
    mu.reserve(columns.size());
    for (const auto& c : columns) mu.push_back(c.size());
    return conjugate(YoungDiagram(std::move(mu)));
}

std::vector<int> ColumnStrictConcat::content() const {
    std::vector<int> c(n, 0);
    for (const auto& col : columns)
        for (int v : col.entries) ++c[v - 1];
    return c;
}

bool ColumnStrictConcat::is_semistandard() const {
    for (std::size_t k = 0; k + 1 < columns.size(); ++k)
        for (int i = 0; i < columns[k + 1].size(); ++i)
            if (columns[k].entries[i] > columns[k + 1].entries[i]) return false;
    return true;
}

SSYTab ColumnStrictConcat::to_ssyt() const {
    if (!is_semistandard())
        throw std::invalid_argument("ColumnStrictConcat: not semistandard");
    YoungDiagram lambda = shape();
    std::vector<std::vector<int>> rows(lambda.rows());
    for (int p = 1; p <= lambda.rows(); ++p)
        for (int q = 1; q <= lambda.part(p); ++q)
            rows[p - 1].push_back(columns[q - 1].entries[p - 1]);
    return SSYTab(n, std::move(rows));
}

ColumnStrictConcat concat_of_ssyt(const SSYTab& T) {
    std::vector<ColumnTableau> cols;
    for (int q = 1; q <= T.num_columns(); ++q) cols.push_back(T.column(q));
    return ColumnStrictConcat(T.n, std::move(cols));
}

TableauWords tableau_words(const ColumnStrictConcat& T) {
    // column reading: columns right to left, each top to bottom
    std::vector<int> gamma;
    for (auto it = T.columns.rbegin(); it != T.columns.rend(); ++it)
        gamma.insert(gamma.end(), it->entries.begin(), it->entries.end());
    const int m = static_cast<int>(gamma.size());

    // nu: multiplicity blocks of the weakly decreasing sort
    std::vector<int> sorted = gamma;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    std::vector<int> parts;
    for (int i = 0; i < m;) {
        int j = i;
        while (j < m && sorted[j] == sorted[i]) ++j;
        parts.push_back(j - i);
        i = j;
    }

    // stable slot assignment: the a-th occurrence of a value goes to the
    // a-th slot holding that value in the sorted word
    std::vector<int> next_slot(T.n + 1, -1);
    for (int s = m - 1; s >= 0; --s) next_slot[sorted[s]] = s;  // first slot per value
    std::vector<int> d(m);
    for (int i = 0; i < m; ++i) d[i] = 1 + next_slot[gamma[i]]++;

    TableauWords out{Composition(std::move(parts)), std::move(gamma),
                     Permutation(std::move(d))};

    // sanity: d in D_nu and gamma d^{-1} weakly decreasing
    if (!(coset_minimize(out.d, out.nu) == out.d))
        throw std::logic_error("tableau_words: d_T not a minimal coset representative");
    Permutation dinv = out.d.inverse();
    for (int j = 1; j < m; ++j)
        if (out.gamma[dinv(j) - 1] < out.gamma[dinv(j + 1) - 1])
            throw std::logic_error("tableau_words: gamma d^{-1} not weakly decreasing");
    return out;
}

namespace {

// enumerate the Young subgroup permuting positions within the reading
// segments (column sizes in reading order), applied on the right
std::vector<Permutation> segment_subgroup(const ColumnStrictConcat& T) {
    const int m = T.m();
    std::vector<std::pair<int, int>> segments;  // [begin, end) 0-based
    int pos = 0;
    for (auto it = T.columns.rbegin(); it != T.columns.rend(); ++it) {
        segments.push_back({pos, pos + it->size()});
        pos += it->size();
    }
    std::vector<Permutation> out;
    std::vector<int> word(m);
    std::function<void(std::size_t)> rec = [&](std::size_t seg) {
        if (seg == segments.size()) {
            out.emplace_back(word);
            return;
        }
        auto [b, e] = segments[seg];
        std::vector<int> vals(e - b);
        for (int i = b; i < e; ++i) vals[i - b] = i + 1;
        std::sort(vals.begin(), vals.end());
        do {
            for (int i = b; i < e; ++i) word[i] = vals[i - b];
            rec(seg + 1);
        } while (std::next_permutation(vals.begin(), vals.end()));
    };
    rec(0);
    return out;
}

}  // namespace

LaurentInt transition_entry(const ColumnStrictConcat& T, const SSYTab& T2) {
    if (T.n != T2.n) throw std::invalid_argument("transition_entry: n mismatch");
    if (!(T.shape() == T2.shape()))
        throw std::invalid_argument("transition_entry: shape mismatch");
    if (T.content() != T2.content()) return LaurentInt();

    TableauWords wt = tableau_words(T);
    TableauWords wt2 = tableau_words(concat_of_ssyt(T2));
    const int m = wt.d.size();
    Permutation w0 = Permutation::longest(m);

    // D_{nu_T} representatives of the double coset S_{nu_T} d_T S_mu
    std::set<Permutation> zs;
    for (const Permutation& u : segment_subgroup(T))
        zs.insert(coset_minimize(wt.d * u, wt.nu));

    const Permutation y = wt2.d * w0;
    const int ld2 = wt2.d.length();
    LaurentInt sum;
    for (const Permutation& z : zs) {
        LaurentInt p = kl_poly(z * w0, y);
        if (p.is_zero()) continue;
        long long sign = ((z.length() + ld2) % 2 == 0) ? 1 : -1;
        sum += LaurentInt(sign) * p.substitute_power(-2);
    }
    int e = wt.d.length() - ld2;
    long long presign = (e % 2 == 0) ? 1 : -1;
    return LaurentInt::monomial(presign, e) * sum;
}

TransitionMatrix::TransitionMatrix(const YoungDiagram& lambda, const std::vector<int>& content,
                                   int n) {
    for (const SSYTab& t : enumerate_ssyt(lambda, n))
        if (t.content() == content) labels_.push_back(t);
    if (labels_.empty())
        throw std::invalid_argument("TransitionMatrix: no semistandard tableau of this content");

    std::stable_sort(labels_.begin(), labels_.end(), [](const SSYTab& a, const SSYTab& b) {
        int la = tableau_words(concat_of_ssyt(a)).d.length();
        int lb = tableau_words(concat_of_ssyt(b)).d.length();
        if (la != lb) return la < lb;
        return a.rows < b.rows;
    });

    const int N = static_cast<int>(labels_.size());
    a_.assign(N, std::vector<LaurentInt>(N));
    for (int r = 0; r < N; ++r) {
        ColumnStrictConcat row = concat_of_ssyt(labels_[r]);
        for (int c = 0; c < N; ++c) a_[r][c] = transition_entry(row, labels_[c]);
    }
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c) {
            if (r == c && !(a_[r][c] == LaurentInt(1)))
                throw std::logic_error("TransitionMatrix: diagonal entry is not 1");
            if (c > r && !a_[r][c].is_zero())
                throw std::logic_error("TransitionMatrix: not unitriangular in l(d_T) order");
        }
}

std::map<SSYTab, LaurentInt> graded_decomposition(const std::vector<ColumnTableau>& columns,
                                                  const CartanA& cd) {
    ColumnStrictConcat T(cd.n, columns);
    YoungDiagram lambda = T.shape();
    auto content = T.content();

    // t = sum_{a<b} (beta_a, Lambda_{mu_b})
    Rational t(0);
    for (std::size_t a = 0; a < columns.size(); ++a)
        for (std::size_t b = a + 1; b < columns.size(); ++b)
            t += pair_form(beta_of_column(columns[a], cd),
                           WeightVec::fundamental(columns[b].size(), cd), cd);
    if (!t.is_integer()) throw std::logic_error("graded_decomposition: non-integral shift");

    std::map<SSYTab, LaurentInt> out;
    for (const SSYTab& t2 : enumerate_ssyt(lambda, cd.n)) {
        if (t2.content() != content) continue;
        LaurentInt a = transition_entry(T, t2);
        if (a.is_zero()) continue;
        out.emplace(t2, LaurentInt::monomial(1, -static_cast<int>(t.num())) * a);
    }
    return out;
}

}  // namespace klrtab
