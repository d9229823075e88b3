#include "klrtab/qchar.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace klrtab {

QChar QChar::one(int n) {
    QChar q(n);
    q.terms_[{}] = LaurentInt(1);
    return q;
}

LaurentInt QChar::coeff(const std::vector<int>& word) const {
    auto it = terms_.find(word);
    return it == terms_.end() ? LaurentInt() : it->second;
}

RootVec QChar::content(const CartanA& cd) const {
    std::vector<long long> c(cd.rank(), 0);
    if (!terms_.empty())
        for (int i : terms_.begin()->first) ++c.at(i - 1);
    return RootVec(std::move(c));
}

void QChar::add_term(std::vector<int> word, const LaurentInt& coeff) {
    if (coeff.is_zero()) return;
    if (!terms_.empty()) {
        // all words must share one content
        std::vector<int> a = terms_.begin()->first, b = word;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) throw std::invalid_argument("QChar: mixed contents");
    }
    for (int i : word)
        if (i < 1 || i > n_ - 1) throw std::invalid_argument("QChar: letter outside I");
    auto [it, inserted] = terms_.emplace(std::move(word), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QChar QChar::operator+(const QChar& o) const {
    if (n_ != o.n_) throw std::invalid_argument("QChar: n mismatch");
    QChar r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

QChar QChar::operator-(const QChar& o) const {
    if (n_ != o.n_) throw std::invalid_argument("QChar: n mismatch");
    QChar r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
    return r;
}

QChar QChar::bar() const {
    QChar r(n_);
    for (const auto& [w, c] : terms_) r.terms_[w] = c.bar();
    return r;
}

bool QChar::nonneg_coeffs() const {
    for (const auto& [w, c] : terms_)
        if (!c.nonneg_coeffs()) return false;
    return true;
}

std::string QChar::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) s += " + ";
        first = false;
        if (!(c == LaurentInt(1))) s += "(" + c.to_string() + ")";
        s += "(";
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(w[i]);
        }
        s += ")";
    }
    return s;
}

QChar qch_sp(const ColumnTableau& T, const CartanA& cd) {
    if (T.n != cd.n) throw std::invalid_argument("qch_sp: n mismatch");
    int k = T.size();
    if (k < 1 || k > cd.n - 1)
        throw std::invalid_argument("qch_sp: column size must be in 1..n-1");
    QChar q(cd.n);
    for (const auto& S : standard_tableaux(xi_of(T)))
        q.add_term(residue_sequence(S, k, cd.n), LaurentInt(1));
    return q;
}

namespace detail {

QChar shuffle_signed(const QChar& x, const QChar& y, const CartanA& cd, int sign) {
    if (x.n() != y.n() || x.n() != cd.n)
        throw std::invalid_argument("shuffle: n mismatch");
    QChar out(cd.n);
    if (x.is_zero() || y.is_zero()) return out;

    for (const auto& [u, cu] : x.terms()) {
        for (const auto& [v, cv] : y.terms()) {
            const int lu = static_cast<int>(u.size()), lv = static_cast<int>(v.size());
            // suffix[s][t] = sum_{s' >= s} (alpha_{u_s'}, alpha_{v_t})
            std::vector<std::vector<long long>> suffix(lu + 1, std::vector<long long>(lv, 0));
            for (int s = lu - 1; s >= 0; --s)
                for (int t = 0; t < lv; ++t)
                    suffix[s][t] = suffix[s + 1][t] + cd.a(u[s], v[t]);

            LaurentInt base = cu * cv;
            std::vector<int> word(lu + lv);
            std::function<void(int, int, long long)> rec = [&](int iu, int iv, long long inv) {
                if (iu == lu && iv == lv) {
                    out.add_term(word, base * LaurentInt::monomial(1, static_cast<int>(sign * inv)));
                    return;
                }
                int pos = iu + iv;
                if (iu < lu) {
                    word[pos] = u[iu];
                    rec(iu + 1, iv, inv);
                }
                if (iv < lv) {
                    // v_t placed before every remaining u letter
                    word[pos] = v[iv];
                    rec(iu, iv + 1, inv + suffix[iu][iv]);
                }
            };
            rec(0, 0, 0);
        }
    }
    return out;
}

}  // namespace detail

QChar shuffle(const QChar& x, const QChar& y, const CartanA& cd) {
    return detail::shuffle_signed(x, y, cd, -1);
}

QChar shift(const QChar& x, int d) {
    QChar r(x.n());
    for (const auto& [w, c] : x.terms())
        r.add_term(w, c * LaurentInt::monomial(1, d));
    return r;
}

namespace {

// c with bar(c) - c == d, c in qZ[q]; throws if d is not bar-antisymmetric.
LaurentInt positive_part_solution(const LaurentInt& d) {
    if (!((-d) == d.bar())) throw std::domain_error("solve_unitriangular: inconsistent system");
    LaurentInt c;
    for (const auto& [e, a] : d.terms())
        if (e > 0) c += LaurentInt::monomial(-a, e);
    return c;
}

}  // namespace

UnitriangularSolution solve_unitriangular_full(
    const std::vector<std::pair<std::string, QChar>>& monomials, const CartanA& cd) {
    if (monomials.empty()) throw std::invalid_argument("solve_unitriangular: empty input");
    const int N = static_cast<int>(monomials.size());
    for (const auto& [lab, m] : monomials) {
        if (m.n() != cd.n) throw std::invalid_argument("solve_unitriangular: n mismatch");
        if (!(m.content(cd) == monomials.front().second.content(cd)))
            throw std::invalid_argument("solve_unitriangular: mixed contents");
    }

    UnitriangularSolution sol;
    sol.simples.assign(monomials.begin(), monomials.end());
    std::map<std::vector<int>, int> pivots;  // lex-max word of solved L_j -> j

    for (int i = N - 1; i >= 0; --i) {
        QChar D = monomials[i].second.bar() - monomials[i].second;
        std::map<int, LaurentInt> expansion;  // j -> bar(c_j) - c_j
        while (!D.is_zero()) {
            const auto& [w, dw] = *D.terms().rbegin();
            auto it = pivots.find(w);
            if (it == pivots.end())
                throw std::domain_error("solve_unitriangular: matrix not unitriangular");
            int j = it->second;
            LaurentInt ratio = dw.divide_exact(sol.simples[j].second.coeff(w));
            expansion[j] += ratio;
            for (const auto& [w2, c2] : sol.simples[j].second.terms())
                D.add_term(w2, -(ratio * c2));
        }
        QChar L = monomials[i].second;
        for (const auto& [j, dj] : expansion) {
            LaurentInt cj = positive_part_solution(dj);
            if (cj.is_zero()) continue;
            sol.coeffs[{monomials[i].first, monomials[j].first}] = cj;
            for (const auto& [w2, c2] : sol.simples[j].second.terms())
                L.add_term(w2, -(cj * c2));
        }
        if (!L.bar_invariant())
            throw std::domain_error("solve_unitriangular: solution not bar-invariant");
        if (L.is_zero()) throw std::domain_error("solve_unitriangular: zero simple");
        sol.simples[i].second = L;
        auto [_, fresh] = pivots.emplace(L.terms().rbegin()->first, i);
        if (!fresh) throw std::domain_error("solve_unitriangular: duplicate pivot words");
    }
    return sol;
}

std::vector<std::pair<std::string, QChar>> solve_unitriangular(
    const std::vector<std::pair<std::string, QChar>>& monomials, const CartanA& cd) {
    return solve_unitriangular_full(monomials, cd).simples;
}

}  // namespace klrtab
