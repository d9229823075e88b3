#include "klrtab/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace klrtab {

YoungDiagram::YoungDiagram(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("YoungDiagram: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("YoungDiagram: parts must weakly decrease");
    }
}

long long YoungDiagram::size() const {
    long long s = 0;
    for (int p : parts_) s += p;
    return s;
}

ColumnTableau::ColumnTableau(int n_, std::vector<int> entries_)
    : n(n_), entries(std::move(entries_)) {
    if (n < 1) throw std::invalid_argument("ColumnTableau: n must be >= 1");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] < 1 || entries[i] > n)
            throw std::invalid_argument("ColumnTableau: entry out of range");
        if (i > 0 && entries[i] <= entries[i - 1])
            throw std::invalid_argument("ColumnTableau: entries must strictly increase");
    }
}

bool ColumnTableau::contains(int a) const {
    return std::binary_search(entries.begin(), entries.end(), a);
}

SSYTab::SSYTab(int n_, std::vector<std::vector<int>> rows_) : n(n_), rows(std::move(rows_)) {
    if (static_cast<int>(rows.size()) >= n)
        throw std::invalid_argument("SSYTab: need fewer than n rows");
    for (std::size_t p = 0; p < rows.size(); ++p) {
        if (rows[p].empty()) throw std::invalid_argument("SSYTab: empty row");
        if (p > 0 && rows[p].size() > rows[p - 1].size())
            throw std::invalid_argument("SSYTab: row lengths must weakly decrease");
        for (std::size_t q = 0; q < rows[p].size(); ++q) {
            int v = rows[p][q];
            if (v < 1 || v > n) throw std::invalid_argument("SSYTab: entry out of range");
            if (q > 0 && v < rows[p][q - 1])
                throw std::invalid_argument("SSYTab: rows must weakly increase");
            if (p > 0 && v <= rows[p - 1][q])
                throw std::invalid_argument("SSYTab: columns must strictly increase");
        }
    }
}

YoungDiagram SSYTab::shape() const {
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    return YoungDiagram(parts);
}

ColumnTableau SSYTab::column(int q) const {
    std::vector<int> col;
    for (const auto& r : rows)
        if (q <= static_cast<int>(r.size())) col.push_back(r[q - 1]);
    return ColumnTableau(n, std::move(col));
}

std::vector<int> SSYTab::content() const {
    std::vector<int> c(n, 0);
    for (const auto& r : rows)
        for (int v : r) ++c[v - 1];
    return c;
}

StandardTab::StandardTab(YoungDiagram shape_, std::vector<std::vector<int>> rows_)
    : shape(std::move(shape_)), rows(std::move(rows_)) {
    if (static_cast<int>(rows.size()) != shape.rows())
        throw std::invalid_argument("StandardTab: row count mismatch");
    std::vector<char> seen(shape.size() + 1, 0);
    for (int p = 1; p <= shape.rows(); ++p) {
        if (static_cast<int>(rows[p - 1].size()) != shape.part(p))
            throw std::invalid_argument("StandardTab: row length mismatch");
        for (int v : rows[p - 1]) {
            if (v < 1 || v > shape.size() || seen[v])
                throw std::invalid_argument("StandardTab: entries must be a bijection");
            seen[v] = 1;
        }
    }
    if (!is_standard()) throw std::invalid_argument("StandardTab: rows/columns must increase");
}

std::pair<int, int> StandardTab::find(int v) const {
    for (int p = 1; p <= shape.rows(); ++p)
        for (int q = 1; q <= shape.part(p); ++q)
            if (rows[p - 1][q - 1] == v) return {p, q};
    throw std::out_of_range("StandardTab: entry not present");
}

StandardTab StandardTab::swap_entries(int j) const {
    StandardTab t = *this;
    auto [p1, q1] = find(j);
    auto [p2, q2] = find(j + 1);
    std::swap(t.rows[p1 - 1][q1 - 1], t.rows[p2 - 1][q2 - 1]);
    return t;
}

bool StandardTab::is_standard() const {
    for (int p = 1; p <= shape.rows(); ++p)
        for (int q = 1; q <= shape.part(p); ++q) {
            int v = rows[p - 1][q - 1];
            if (q > 1 && rows[p - 1][q - 2] >= v) return false;
            if (p > 1 && rows[p - 2][q - 1] >= v) return false;
        }
    return true;
}

YoungDiagram conjugate(const YoungDiagram& lambda) {
    std::vector<int> parts;
    for (int q = 1; q <= lambda.part(1); ++q) {
        int h = 0;
        while (h < lambda.rows() && lambda.part(h + 1) >= q) ++h;
        parts.push_back(h);
    }
    return YoungDiagram(std::move(parts));
}

YoungDiagram xi_of(const ColumnTableau& T) {
    if (T.entries.empty()) throw std::invalid_argument("xi_of: empty column");
    int k = T.size();
    std::vector<int> parts;
    for (int a = k; a >= 1; --a) {
        int part = T.entries[a - 1] - a;  // t_a - a
        if (part > 0) parts.push_back(part);
    }
    return YoungDiagram(std::move(parts));
}

std::vector<StandardTab> standard_tableaux(const YoungDiagram& xi) {
    std::vector<StandardTab> out;
    int m = static_cast<int>(xi.size());
    std::vector<std::vector<int>> rows(xi.rows());
    for (int p = 1; p <= xi.rows(); ++p) rows[p - 1].assign(xi.part(p), 0);
    std::vector<int> filled(xi.rows(), 0);  // boxes used per row

    std::function<void(int)> place = [&](int v) {
        if (v > m) {
            out.emplace_back(xi, rows);
            return;
        }
        for (int p = 1; p <= xi.rows(); ++p) {
            int q = filled[p - 1] + 1;
            if (q > xi.part(p)) continue;
            if (p > 1 && filled[p - 2] < q) continue;  // box above must be filled
            rows[p - 1][q - 1] = v;
            ++filled[p - 1];
            place(v + 1);
            --filled[p - 1];
        }
    };
    place(1);
    return out;
}

std::vector<int> residue_sequence(const StandardTab& S, int k, int n) {
    int m = static_cast<int>(S.size());
    std::vector<int> word(m);
    for (int v = 1; v <= m; ++v) {
        auto [p, q] = S.find(v);
        int res = q - p + k;
        if (res < 1 || res > n - 1)
            throw std::invalid_argument("residue_sequence: residue outside I");
        word[m - v] = res;  // box holding m comes first
    }
    return word;
}

RootVec beta_of_column(const ColumnTableau& T, const CartanA& cd) {
    if (T.n != cd.n) throw std::invalid_argument("beta_of_column: n mismatch");
    std::vector<long long> c(cd.rank(), 0);
    for (int a = 1; a <= T.size(); ++a)
        for (int j = a; j <= T.entries[a - 1] - 1; ++j) {
            if (j > cd.rank())
                throw std::invalid_argument("beta_of_column: column too deep for rank");
            ++c[j - 1];
        }
    return RootVec(std::move(c));
}

std::vector<SSYTab> enumerate_ssyt(const YoungDiagram& lambda, int n) {
    if (lambda.rows() >= n)
        throw std::invalid_argument("enumerate_ssyt: need l(lambda) < n");
    std::vector<SSYTab> out;
    std::vector<std::vector<int>> rows(lambda.rows());
    for (int p = 1; p <= lambda.rows(); ++p) rows[p - 1].assign(lambda.part(p), 0);

    // Fill boxes in row-major order, smallest value first; the output
    // is then lex-sorted by row-reading word.
    std::function<void(int, int)> fill = [&](int p, int q) {
        if (p > lambda.rows()) {
            out.emplace_back(n, rows);
            return;
        }
        auto [np, nq] = q < lambda.part(p) ? std::pair{p, q + 1} : std::pair{p + 1, 1};
        int lo = 1;
        if (q > 1) lo = std::max(lo, rows[p - 1][q - 2]);
        if (p > 1) lo = std::max(lo, rows[p - 2][q - 1] + 1);
        for (int v = lo; v <= n; ++v) {
            rows[p - 1][q - 1] = v;
            fill(np, nq);
        }
    };
    if (lambda.empty())
        out.emplace_back(n, rows);
    else
        fill(1, 1);
    return out;
}

}  // namespace klrtab
