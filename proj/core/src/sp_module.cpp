#include "klrtab/sp_module.hpp"

#include <algorithm>
#include <stdexcept>

namespace klrtab {

QParams QParams::type_a_default(const CartanA& cd) {
    QParams qp;
    for (int i = 1; i <= cd.rank(); ++i)
        for (int j = 1; j <= cd.rank(); ++j) {
            if (i == j) {
                qp.coeffs[{i, j}] = {};
            } else if (j == i + 1) {
                qp.coeffs[{i, j}] = {{{1, 0}, 1}, {{0, 1}, -1}};  // u - v
            } else if (j == i - 1) {
                qp.coeffs[{i, j}] = {{{1, 0}, -1}, {{0, 1}, 1}};  // v - u
            } else {
                qp.coeffs[{i, j}] = {{{0, 0}, 1}};
            }
        }
    qp.validate(cd);
    return qp;
}

const std::map<std::pair<int, int>, long long>& QParams::poly(int i, int j) const {
    auto it = coeffs.find({i, j});
    if (it == coeffs.end()) throw std::out_of_range("QParams: missing pair");
    return it->second;
}

long long QParams::eval00(int i, int j) const {
    auto& p = poly(i, j);
    auto it = p.find({0, 0});
    return it == p.end() ? 0 : it->second;
}

long long QParams::u_coeff(int i, int j) const {
    auto& p = poly(i, j);
    auto it = p.find({1, 0});
    return it == p.end() ? 0 : it->second;
}

void QParams::validate(const CartanA& cd) const {
    for (int i = 1; i <= cd.rank(); ++i)
        for (int j = 1; j <= cd.rank(); ++j) {
            auto& p = poly(i, j);
            if (i == j) {
                if (!p.empty()) throw std::invalid_argument("QParams: Q_{i,i} must vanish");
                continue;
            }
            // Q_{i,j}(u,v) = Q_{j,i}(v,u)
            auto& pt = poly(j, i);
            for (const auto& [deg, c] : p) {
                auto it = pt.find({deg.second, deg.first});
                if (it == pt.end() || it->second != c)
                    throw std::invalid_argument("QParams: symmetry Q_{i,j}(u,v)=Q_{j,i}(v,u) fails");
            }
            if (pt.size() != p.size())
                throw std::invalid_argument("QParams: symmetry Q_{i,j}(u,v)=Q_{j,i}(v,u) fails");
            // homogeneity: (a_i,a_i) p + (a_j,a_j) q = -2 (a_i,a_j)
            for (const auto& [deg, c] : p) {
                (void)c;
                if (2 * deg.first + 2 * deg.second != -2 * cd.a(i, j))
                    throw std::invalid_argument("QParams: inhomogeneous term");
            }
            // invertible leading coefficient t_{i,j;-a_ij,0}
            auto lead = p.find({-cd.a(i, j), 0});
            if (lead == p.end() || lead->second == 0)
                throw std::invalid_argument("QParams: leading coefficient must be invertible");
        }
}

QChar SpModule::qcharacter(const CartanA& cd) const {
    QChar q(cd.n);
    for (const auto& word : residues) q.add_term(word, LaurentInt(1));
    return q;
}

SpModule build_sp(const ColumnTableau& T, const CartanA& cd) {
    if (T.n != cd.n) throw std::invalid_argument("build_sp: n mismatch");
    int k = T.size();
    if (k < 1 || k > cd.n - 1)
        throw std::invalid_argument("build_sp: column size must be in 1..n-1");

    SpModule M;
    M.T = T;
    M.k = k;
    M.n = cd.n;
    M.basis = standard_tableaux(xi_of(T));
    M.residues.reserve(M.basis.size());
    for (const auto& S : M.basis) M.residues.push_back(residue_sequence(S, k, cd.n));

    // residue words run from the box of m down to the box of 1, so the
    // generator tau_j (word positions j, j+1) exchanges entries m-j and
    // m-j+1 of the standard tableau
    int m = M.word_length();
    M.tau.assign(std::max(0, m - 1), std::vector<int>(M.dim(), -1));
    for (int j = 1; j <= m - 1; ++j)
        for (int s = 0; s < M.dim(); ++s) {
            StandardTab swapped = M.basis[s].swap_entries(m - j);
            if (!swapped.is_standard()) continue;
            auto it = std::find(M.basis.begin(), M.basis.end(), swapped);
            if (it == M.basis.end()) throw std::logic_error("build_sp: incomplete basis");
            M.tau[j - 1][s] = static_cast<int>(it - M.basis.begin());
        }
    return M;
}

bool RelationReport::all_ok() const {
    return std::all_of(items.begin(), items.end(), [](const Item& it) { return it.ok; });
}

std::size_t RelationReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(items.begin(), items.end(), [](const Item& it) { return !it.ok; }));
}

namespace {

std::string vec_name(const SpModule& M, int s) {
    std::string out = "S" + std::to_string(s) + ":res=(";
    const auto& w = M.residues[s];
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(w[i]);
    }
    return out + ")";
}

// Sparse module element: basis index -> coefficient.
using Elt = std::map<int, long long>;

Elt apply_tau(const SpModule& M, int j, const Elt& v) {
    Elt out;
    for (const auto& [s, c] : v) {
        int t = M.tau[j - 1][s];
        if (t >= 0) out[t] += c;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

Elt unit(int s) { return {{s, 1}}; }

Elt scale(long long c, const Elt& v) {
    Elt out;
    if (c == 0) return out;
    for (const auto& [s, a] : v) out[s] = c * a;
    return out;
}

}  // namespace

RelationReport verify_qha_relations(const SpModule& M, const QParams& qp) {
    RelationReport rep;
    const int m = M.word_length();

    for (int s = 0; s < M.dim(); ++s) {
        const auto& nu = M.residues[s];

        // idempotents: the stored residue word matches the tableau, so
        // e(nu') S = [nu' = res(S)] S holds structurally.
        rep.items.push_back({"idempotent", vec_name(M, s),
                             nu == residue_sequence(M.basis[s], M.k, M.n)});

        // x_k x_m = x_m x_k and x_k e(nu) = e(nu) x_k: x acts by zero.
        rep.items.push_back({"x-commute", vec_name(M, s), true});

        for (int j = 1; j <= m - 1; ++j) {
            std::string inst = vec_name(M, s) + ",j=" + std::to_string(j);

            // tau_j e(nu) = e(s_j nu) tau_j
            int t = M.tau[j - 1][s];
            bool ok_te = true;
            if (t >= 0) {
                auto expect = nu;
                std::swap(expect[j - 1], expect[j]);
                ok_te = M.residues[t] == expect;
            }
            rep.items.push_back({"tau-e", inst, ok_te});

            // (tau_j x_m - x_{s_j(m)} tau_j) e(nu): with x = 0 the left
            // side vanishes, so the nu_j = nu_{j+1} correction must not
            // trigger on any basis vector.
            rep.items.push_back({"tau-x", inst, nu[j - 1] != nu[j]});

            // quadratic: tau_j^2 = Q_{nu_j, nu_{j+1}}(0, 0)
            Elt lhs = apply_tau(M, j, apply_tau(M, j, unit(s)));
            Elt rhs = scale(qp.eval00(nu[j - 1], nu[j]), unit(s));
            rep.items.push_back({"quadratic", inst, lhs == rhs});
        }

        // commuting taus
        for (int k1 = 1; k1 <= m - 1; ++k1)
            for (int k2 = k1 + 2; k2 <= m - 1; ++k2) {
                Elt a = apply_tau(M, k1, apply_tau(M, k2, unit(s)));
                Elt b = apply_tau(M, k2, apply_tau(M, k1, unit(s)));
                rep.items.push_back({"tau-commute",
                                     vec_name(M, s) + ",k=" + std::to_string(k1) + ",m=" +
                                         std::to_string(k2),
                                     a == b});
            }

        // braid: (tau_{k+1} tau_k tau_{k+1} - tau_k tau_{k+1} tau_k) e(nu)
        for (int k1 = 1; k1 + 1 <= m - 1; ++k1) {
            Elt lhs;
            {
                Elt a = apply_tau(M, k1 + 1, apply_tau(M, k1, apply_tau(M, k1 + 1, unit(s))));
                Elt b = apply_tau(M, k1, apply_tau(M, k1 + 1, apply_tau(M, k1, unit(s))));
                lhs = a;
                for (const auto& [idx, c] : b) {
                    lhs[idx] -= c;
                    if (lhs[idx] == 0) lhs.erase(idx);
                }
            }
            Elt rhs;
            if (nu[k1 - 1] == nu[k1 + 1])
                rhs = scale(qp.u_coeff(nu[k1 - 1], nu[k1]), unit(s));
            rep.items.push_back(
                {"braid", vec_name(M, s) + ",k=" + std::to_string(k1), lhs == rhs});
        }
    }
    return rep;
}

RelationReport verify_cyclotomic(const SpModule& M) {
    RelationReport rep;
    for (int s = 0; s < M.dim(); ++s) {
        const auto& nu = M.residues[s];
        bool ok = !nu.empty() ? nu.back() == M.k : true;
        rep.items.push_back({"cyclotomic", vec_name(M, s), ok});
    }
    if (M.dim() == 0) rep.items.push_back({"cyclotomic", "empty module", false});
    return rep;
}

}  // namespace klrtab
