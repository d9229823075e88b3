// klrtab: batch front end for the type A crystal / quiver Hecke
// combinatorics library.  One request per invocation; deterministic
// byte-for-byte output for a fixed input and format.
//
// exit status: 0 success, 1 validation error, 2 computation-level error
// (verify/selftest also use 2 when a check fails).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "klrtab/cartan.hpp"
#include "klrtab/crystal.hpp"
#include "klrtab/degrees.hpp"
#include "klrtab/json_io.hpp"
#include "klrtab/qchar.hpp"
#include "klrtab/rmatrix.hpp"
#include "klrtab/sp_module.hpp"
#include "klrtab/transition.hpp"

using json = nlohmann::json;
using namespace klrtab;

namespace {

std::vector<int> parse_entries(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty entry in column list");
        out.push_back(std::stoi(tok));
    }
    return out;
}

// "5|3,4|1,2" -> columns left to right as written
std::vector<std::vector<int>> parse_factors(const std::string& s) {
    std::vector<std::vector<int>> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, '|')) out.push_back(parse_entries(tok));
    if (out.empty()) throw std::invalid_argument("no factors given");
    return out;
}

ColumnTableau column_of(int n, const std::vector<int>& entries) {
    return ColumnTableau(n, entries);
}

TensorElt tensor_of(int n, const std::vector<std::vector<int>>& factors) {
    std::vector<ColumnTableau> cols;
    for (const auto& f : factors) cols.emplace_back(n, f);
    return TensorElt(n, std::move(cols));
}

json qchar_to_json(const QChar& q) {
    json terms = json::array();
    for (const auto& [w, c] : q.terms())
        terms.push_back(json{{"word", w}, {"coeff", c.to_string()}});
    return json{{"terms", terms}, {"display", q.to_string()}};
}

std::string ssyt_label(const SSYTab& t) {
    std::string s;
    for (std::size_t p = 0; p < t.rows.size(); ++p) {
        if (p) s += '|';
        for (std::size_t q = 0; q < t.rows[p].size(); ++q) {
            if (q) s += ',';
            s += std::to_string(t.rows[p][q]);
        }
    }
    return s;
}

void emit(const json& j, const std::string& format, const std::string& text) {
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

// columns as given on the command line, leftmost factor first, i.e. the
// convolution order Sp^{T_r} o ... o Sp^{T_1}
struct ConvolutionColumns {
    std::vector<ColumnTableau> conv;     // b_1 = T_r first
    std::vector<ColumnTableau> tableau;  // T_1 ... T_r
};

ConvolutionColumns parse_convolution(int n, const std::string& arg) {
    ConvolutionColumns out;
    for (const auto& f : parse_factors(arg)) out.conv.emplace_back(n, f);
    out.tableau.assign(out.conv.rbegin(), out.conv.rend());
    return out;
}

long long shift_of(const std::vector<ColumnTableau>& conv, const CartanA& cd) {
    std::vector<RootVec> betas;
    std::vector<WeightVec> lams;
    for (const auto& c : conv) {
        betas.push_back(beta_of_column(c, cd));
        lams.push_back(WeightVec::fundamental(c.size(), cd));
    }
    return head_shift_t(betas, lams, cd);
}

int report_to_output(const RelationReport& rep, const std::string& format) {
    json items = json::array();
    for (const auto& it : rep.items)
        items.push_back(json{{"relation", it.relation},
                             {"instance", it.instance},
                             {"status", it.ok ? "ok" : "fail"}});
    if (format == "json") {
        std::cout << items.dump(2) << "\n";
    } else {
        for (const auto& it : rep.items)
            if (!it.ok) std::cout << "FAIL " << it.relation << " " << it.instance << "\n";
        std::cout << rep.items.size() - rep.failures() << "/" << rep.items.size()
                  << " checks passed\n";
    }
    return rep.all_ok() ? 0 : 2;
}

int run_selftest(bool quick);

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact type A crystal, R-matrix, and quiver Hecke q-character calculator"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    int n = 0;
    std::string input_file;

    // --- sigma ---
    auto* cmd_sigma = app.add_subcommand("sigma", "combinatorial R-matrix on a pair of columns");
    std::string opt_first, opt_second;
    cmd_sigma->add_option("--n", n, "ambient n");
    cmd_sigma->add_option("--first", opt_first, "first column, comma separated");
    cmd_sigma->add_option("--second", opt_second, "second column");
    cmd_sigma->add_option("--input", input_file, "JSON payload {n, first, second}");

    // --- crystal ---
    auto* cmd_crystal = app.add_subcommand("crystal", "Kashiwara operators on column tensors");
    cmd_crystal->require_subcommand(1);
    std::string opt_factors, opt_highest, opt_a, opt_b;
    auto* cr_raise = cmd_crystal->add_subcommand("raise", "raise to the highest weight element");
    cr_raise->add_option("--n", n)->required();
    cr_raise->add_option("--factors", opt_factors, "factors, e.g. \"3,5|1,3,4,5\"")->required();
    auto* cr_comp = cmd_crystal->add_subcommand("component", "membership in a component");
    cr_comp->add_option("--n", n)->required();
    cr_comp->add_option("--factors", opt_factors)->required();
    cr_comp->add_option("--highest", opt_highest, "highest weight element")->required();
    auto* cr_equiv = cmd_crystal->add_subcommand("equiv", "crystal equivalence of two elements");
    cr_equiv->add_option("--n", n)->required();
    cr_equiv->add_option("--a", opt_a)->required();
    cr_equiv->add_option("--b", opt_b)->required();

    // --- qchar ---
    auto* cmd_qchar = app.add_subcommand("qchar", "q-characters and shuffle products");
    cmd_qchar->require_subcommand(1);
    std::string opt_column, opt_acol, opt_bcol;
    int opt_shift = 0;
    auto* qc_sp = cmd_qchar->add_subcommand("sp", "q-character of the homogeneous module Sp^T");
    qc_sp->add_option("--n", n)->required();
    qc_sp->add_option("--column", opt_column)->required();
    auto* qc_sh = cmd_qchar->add_subcommand("shuffle", "shifted shuffle of two Sp q-characters");
    qc_sh->add_option("--n", n)->required();
    qc_sh->add_option("--a-column", opt_acol)->required();
    qc_sh->add_option("--b-column", opt_bcol)->required();
    qc_sh->add_option("--shift", opt_shift, "grading shift applied to the product");
    auto* qc_solve =
        cmd_qchar->add_subcommand("solve", "solve a unitriangular system for the simples");
    qc_solve->add_option("--input", input_file, "JSON payload {n, monomials:[...]}")->required();

    // --- degrees ---
    auto* cmd_deg = app.add_subcommand("degrees", "degree and commutation calculators");
    cmd_deg->require_subcommand(1);
    std::string opt_columns, opt_b1, opt_b2, opt_b1p, opt_b2p;
    auto* dg_t = cmd_deg->add_subcommand("t", "head shift t = sum_{i<j} (beta_j, lambda_i)");
    dg_t->add_option("--n", n)->required();
    dg_t->add_option("--columns", opt_columns, "factors in convolution order")->required();
    auto* dg_d = cmd_deg->add_subcommand("d", "degree of the distinguished homomorphism");
    dg_d->add_option("--n", n)->required();
    dg_d->add_option("--b1", opt_b1)->required();
    dg_d->add_option("--b2", opt_b2)->required();
    dg_d->add_option("--b1p", opt_b1p)->required();
    dg_d->add_option("--b2p", opt_b2p)->required();
    auto* dg_l = cmd_deg->add_subcommand("lambda", "R-matrix degree invariants");
    dg_l->add_option("--n", n)->required();
    dg_l->add_option("--b1", opt_b1)->required();
    dg_l->add_option("--b2", opt_b2)->required();
    dg_l->add_option("--b2p", opt_b2p, "primed partner (optional)");
    auto* dg_c = cmd_deg->add_subcommand("commute", "strong commutation of a column pair");
    dg_c->add_option("--n", n)->required();
    dg_c->add_option("--b1", opt_b1)->required();
    dg_c->add_option("--b2", opt_b2)->required();

    // --- verify ---
    auto* cmd_verify = app.add_subcommand("verify", "check the defining relations on Sp modules");
    cmd_verify->require_subcommand(1);
    bool opt_all = false;
    auto* vf_rel = cmd_verify->add_subcommand("relations", "quiver Hecke relations with x = 0");
    vf_rel->add_option("--n", n)->required();
    vf_rel->add_option("--column", opt_column, "one column; omit with --all");
    vf_rel->add_flag("--all", opt_all, "all columns of this n");
    auto* vf_cyc = cmd_verify->add_subcommand("cyclotomic", "cyclotomic condition");
    vf_cyc->add_option("--n", n)->required();
    vf_cyc->add_option("--column", opt_column);
    vf_cyc->add_flag("--all", opt_all);

    // --- decompose ---
    auto* cmd_dec = app.add_subcommand("decompose", "graded decomposition numbers");
    bool opt_matrix = false;
    cmd_dec->add_option("--n", n)->required();
    cmd_dec->add_option("--columns", opt_columns,
                        "factors in convolution order, rightmost = T_1")
        ->required();
    cmd_dec->add_flag("--matrix", opt_matrix,
                      "print the whole transition block of this shape and content");

    // --- selftest ---
    auto* cmd_self = app.add_subcommand("selftest", "run the worked-example golden suite");
    bool opt_quick = false;
    cmd_self->add_flag("--quick", opt_quick, "skip the S_8 Kazhdan-Lusztig block");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_sigma) {
            std::vector<int> first, second;
            if (!input_file.empty()) {
                std::ifstream in(input_file);
                if (!in) throw std::invalid_argument("cannot open " + input_file);
                json j = json::parse(in);
                n = j.at("n").get<int>();
                first = j.at("first").get<std::vector<int>>();
                second = j.at("second").get<std::vector<int>>();
            } else {
                if (n == 0) throw std::invalid_argument("--n is required");
                first = parse_entries(opt_first);
                second = parse_entries(opt_second);
            }
            auto r = sigma_with_words(column_of(n, first), column_of(n, second), n);
            json j{{"first", r.first.entries},
                   {"second", r.second.entries},
                   {"bits_in", r.bits_in.to_string()},
                   {"bits_out", r.bits_out.to_string()}};
            std::string text;
            text += "bits in : " + r.bits_in.to_string() + "\n";
            text += "bits out: " + r.bits_out.to_string() + "\n";
            text += "first   : " + json(r.first.entries).dump() + "\n";
            text += "second  : " + json(r.second.entries).dump() + "\n";
            emit(j, format, text);
            return 0;
        }

        if (*cr_raise) {
            CartanA cd(n);
            auto [hw, path] = to_highest_weight(tensor_of(n, parse_factors(opt_factors)), cd);
            json jhw;
            to_json(jhw, hw);
            json j{{"highest", jhw.at("factors")}, {"path", path}};
            emit(j, format, j.dump(2) + "\n");
            return 0;
        }
        if (*cr_comp) {
            CartanA cd(n);
            bool in = in_component(tensor_of(n, parse_factors(opt_factors)),
                                   tensor_of(n, parse_factors(opt_highest)), cd);
            emit(json{{"in_component", in}}, format, std::string(in ? "true" : "false") + "\n");
            return 0;
        }
        if (*cr_equiv) {
            CartanA cd(n);
            bool eq = crystal_equivalent(tensor_of(n, parse_factors(opt_a)),
                                         tensor_of(n, parse_factors(opt_b)), cd);
            emit(json{{"equivalent", eq}}, format, std::string(eq ? "true" : "false") + "\n");
            return 0;
        }

        if (*qc_sp) {
            CartanA cd(n);
            QChar q = qch_sp(column_of(n, parse_entries(opt_column)), cd);
            emit(qchar_to_json(q), format, q.to_string() + "\n");
            return 0;
        }
        if (*qc_sh) {
            CartanA cd(n);
            QChar q = shift(shuffle(qch_sp(column_of(n, parse_entries(opt_acol)), cd),
                                    qch_sp(column_of(n, parse_entries(opt_bcol)), cd), cd),
                            opt_shift);
            emit(qchar_to_json(q), format, q.to_string() + "\n");
            return 0;
        }
        if (*qc_solve) {
            std::ifstream in(input_file);
            if (!in) throw std::invalid_argument("cannot open " + input_file);
            json payload = json::parse(in);
            int nn = payload.at("n").get<int>();
            CartanA cd(nn);
            std::vector<std::pair<std::string, QChar>> monomials;
            for (const auto& entry : payload.at("monomials")) {
                std::string label = entry.at("label").get<std::string>();
                std::vector<ColumnTableau> conv;
                for (const auto& f : entry.at("columns"))
                    conv.emplace_back(nn, f.get<std::vector<int>>());
                QChar m = QChar::one(nn);
                for (const auto& c : conv) m = shuffle(m, qch_sp(c, cd), cd);
                long long sh = entry.contains("shift") && entry.at("shift").is_number()
                                   ? entry.at("shift").get<long long>()
                                   : shift_of(conv, cd);
                monomials.emplace_back(label, shift(m, static_cast<int>(sh)));
            }
            auto sol = solve_unitriangular_full(monomials, cd);
            json simples = json::object(), coeffs = json::array();
            for (const auto& [label, L] : sol.simples) simples[label] = qchar_to_json(L);
            for (const auto& [key, c] : sol.coeffs)
                coeffs.push_back(json{{"row", key.first},
                                      {"column", key.second},
                                      {"coeff", c.to_string()}});
            json j{{"simples", simples}, {"coeffs", coeffs}};
            std::string text;
            for (const auto& [label, L] : sol.simples)
                text += label + ": " + L.to_string() + "\n";
            emit(j, format, text);
            return 0;
        }

        if (*dg_t) {
            CartanA cd(n);
            auto cols = parse_convolution(n, opt_columns);
            long long t = shift_of(cols.conv, cd);
            emit(json{{"t", t}}, format, std::to_string(t) + "\n");
            return 0;
        }
        if (*dg_d) {
            CartanA cd(n);
            auto mk = [&](const std::string& s) {
                ColumnTableau c = column_of(n, parse_entries(s));
                return std::pair{TensorElt(n, {c}), WeightVec::fundamental(c.size(), cd)};
            };
            auto [b1, l1] = mk(opt_b1);
            auto [b2, l2] = mk(opt_b2);
            auto [b1p, l1p] = mk(opt_b1p);
            auto [b2p, l2p] = mk(opt_b2p);
            long long d = hom_degree_d(b1, l1, b2, l2, b1p, l1p, b2p, l2p, cd);
            emit(json{{"d", d}}, format, std::to_string(d) + "\n");
            return 0;
        }
        if (*dg_l) {
            CartanA cd(n);
            ColumnTableau c1 = column_of(n, parse_entries(opt_b1));
            ColumnTableau c2 = column_of(n, parse_entries(opt_b2));
            TensorElt b1(n, {c1}), b2(n, {c2});
            WeightVec l1 = WeightVec::fundamental(c1.size(), cd);
            WeightVec l2 = WeightVec::fundamental(c2.size(), cd);
            LambdaInvariants inv;
            if (!opt_b2p.empty()) {
                ColumnTableau c2p = column_of(n, parse_entries(opt_b2p));
                inv = lambda_invariants(b1, l1, b2, l2,
                                        WeightVec::fundamental(c2p.size(), cd),
                                        TensorElt(n, {c2p}), cd);
            } else {
                inv = lambda_invariants(b1, l1, b2, l2, cd);
            }
            json j{{"lambda_tilde", inv.lambda_tilde}, {"lambda", inv.lambda}};
            std::string text = "lambda_tilde = " + std::to_string(inv.lambda_tilde) +
                               "\nlambda = " + std::to_string(inv.lambda) + "\n";
            if (inv.d) {
                j["d"] = inv.d->to_string();
                text += "d = " + inv.d->to_string() + "\n";
            }
            emit(j, format, text);
            return 0;
        }
        if (*dg_c) {
            CartanA cd(n);
            ColumnTableau c1 = column_of(n, parse_entries(opt_b1));
            ColumnTableau c2 = column_of(n, parse_entries(opt_b2));
            bool sc = strongly_commute(TensorElt(n, {c1}), WeightVec::fundamental(c1.size(), cd),
                                       TensorElt(n, {c2}), WeightVec::fundamental(c2.size(), cd),
                                       cd);
            emit(json{{"strongly_commute", sc}}, format,
                 std::string(sc ? "true" : "false") + "\n");
            return 0;
        }

        if (*vf_rel || *vf_cyc) {
            CartanA cd(n);
            std::vector<ColumnTableau> targets;
            if (opt_all) {
                std::vector<int> acc;
                std::function<void(int, int)> rec = [&](int lo, int k) {
                    if (static_cast<int>(acc.size()) == k) {
                        targets.emplace_back(n, acc);
                        return;
                    }
                    for (int v = lo; v <= n; ++v) {
                        acc.push_back(v);
                        rec(v + 1, k);
                        acc.pop_back();
                    }
                };
                for (int k = 1; k <= n - 1; ++k) rec(1, k);
            } else if (!opt_column.empty()) {
                targets.push_back(column_of(n, parse_entries(opt_column)));
            } else {
                throw std::invalid_argument("need --column or --all");
            }
            RelationReport all;
            QParams qp = QParams::type_a_default(cd);
            for (const auto& T : targets) {
                SpModule m = build_sp(T, cd);
                RelationReport rep = *vf_rel ? verify_qha_relations(m, qp) : verify_cyclotomic(m);
                for (auto& item : rep.items) {
                    item.instance = "T=" + json(T.entries).dump() + " " + item.instance;
                    all.items.push_back(std::move(item));
                }
            }
            return report_to_output(all, format);
        }

        if (*cmd_dec) {
            CartanA cd(n);
            auto cols = parse_convolution(n, opt_columns);
            if (opt_matrix) {
                ColumnStrictConcat T(n, cols.tableau);
                TransitionMatrix M(T.shape(), T.content(), n);
                json labels = json::array(), matrix = json::array();
                std::string text = "rows and columns, ascending l(d_T):\n";
                for (std::size_t r = 0; r < M.labels().size(); ++r) {
                    labels.push_back(ssyt_label(M.labels()[r]));
                    text += "  [" + std::to_string(r) + "] " + ssyt_label(M.labels()[r]) + "\n";
                }
                text += "entries A_{T,T'}(q):\n";
                for (std::size_t r = 0; r < M.labels().size(); ++r) {
                    json row = json::array();
                    text += "  [" + std::to_string(r) + "]";
                    for (std::size_t c = 0; c < M.labels().size(); ++c) {
                        row.push_back(M.entry(r, c).to_string());
                        text += " " + M.entry(r, c).to_string();
                    }
                    matrix.push_back(row);
                    text += "\n";
                }
                emit(json{{"labels", labels}, {"matrix", matrix}}, format, text);
                return 0;
            }
            long long t = shift_of(cols.conv, cd);
            auto dec = graded_decomposition(cols.tableau, cd);
            json mult = json::object();
            std::string text;
            for (const auto& [t2, c] : dec) {
                mult[ssyt_label(t2)] = c.to_string();
                text += ssyt_label(t2) + " : " + c.to_string() + "\n";
            }
            emit(json{{"shift", t}, {"multiplicities", mult}}, format, text);
            return 0;
        }

        if (*cmd_self) return run_selftest(opt_quick);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

namespace {

int run_selftest(bool quick) {
    int failures = 0;
    auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };
    auto word = [](int n, std::vector<int> w) {
        QChar q(n);
        q.add_term(std::move(w), LaurentInt(1));
        return q;
    };

    CartanA cd4(4), cd5(5);

    auto r1 = sigma_with_words(ColumnTableau(4, {4}), ColumnTableau(4, {2, 3}), 4);
    check("sigma pair 1", r1.bits_in.to_string() == "10 01 01 00" &&
                              r1.bits_out.to_string() == "10 01 10 00" &&
                              r1.first == ColumnTableau(4, {2, 4}) &&
                              r1.second == ColumnTableau(4, {3}));
    auto r2 = sigma_with_words(ColumnTableau(5, {3, 5}), ColumnTableau(5, {1, 3, 4, 5}), 5);
    check("sigma pair 2", r2.bits_in.to_string() == "11 01 11 00 01" &&
                              r2.bits_out.to_string() == "11 10 11 00 10" &&
                              r2.first == ColumnTableau(5, {1, 3, 4, 5}) &&
                              r2.second == ColumnTableau(5, {3, 5}));
    auto r3 = sigma_with_words(ColumnTableau(5, {2, 4}), ColumnTableau(5, {1, 3, 4, 5}), 5);
    check("sigma pair 3", r3.bits_in.to_string() == "01 11 01 10 01" &&
                              r3.bits_out.to_string() == "10 11 10 10 01" &&
                              r3.first == ColumnTableau(5, {2, 3, 4, 5}) &&
                              r3.second == ColumnTableau(5, {1, 4}));

    check("qch 1", qch_sp(ColumnTableau(4, {2, 3}), cd4) == word(4, {1, 2}));
    check("qch 2", qch_sp(ColumnTableau(4, {4}), cd4) == word(4, {3, 2, 1}));
    check("qch 3", qch_sp(ColumnTableau(4, {3}), cd4) == word(4, {2, 1}));
    check("qch 4", qch_sp(ColumnTableau(4, {2, 4}), cd4) ==
                       word(4, {3, 1, 2}) + word(4, {1, 3, 2}));
    check("qch 5", qch_sp(ColumnTableau(5, {1, 3, 4, 5}), cd5) == word(5, {2, 3, 4}));
    check("qch 6", qch_sp(ColumnTableau(5, {3, 5}), cd5) ==
                       word(5, {2, 1, 4, 3, 2}) + word(5, {2, 4, 1, 3, 2}) +
                           word(5, {2, 4, 3, 1, 2}) + word(5, {4, 2, 1, 3, 2}) +
                           word(5, {4, 2, 3, 1, 2}));
    check("qch 7", qch_sp(ColumnTableau(5, {3, 4}), cd5) ==
                       word(5, {2, 3, 1, 2}) + word(5, {2, 1, 3, 2}));
    check("qch 8", qch_sp(ColumnTableau(5, {5}), cd5) == word(5, {4, 3, 2, 1}));
    check("qch 9", qch_sp(ColumnTableau(5, {1, 3}), cd5) == word(5, {2}));
    check("qch 10", qch_sp(ColumnTableau(5, {2, 4}), cd5) ==
                        word(5, {3, 1, 2}) + word(5, {1, 3, 2}));
    check("qch 11", qch_sp(ColumnTableau(5, {1, 2, 3}), cd5) == QChar::one(5));

    {
        TensorElt b1(4, {ColumnTableau(4, {4})}), b2(4, {ColumnTableau(4, {2, 3})});
        TensorElt b1p(4, {ColumnTableau(4, {2, 4})}), b2p(4, {ColumnTableau(4, {3})});
        check("degree d", hom_degree_d(b1, WeightVec::fundamental(1, cd4), b2,
                                       WeightVec::fundamental(2, cd4), b1p,
                                       WeightVec::fundamental(2, cd4), b2p,
                                       WeightVec::fundamental(1, cd4), cd4) == 1);
        auto inv = lambda_invariants(b1, WeightVec::fundamental(1, cd4), b2,
                                     WeightVec::fundamental(2, cd4), cd4);
        check("lambda invariants", inv.lambda_tilde == 1 && inv.lambda == 1);
    }

    {
        WeightVec L2 = WeightVec::fundamental(2, cd5), L4 = WeightVec::fundamental(4, cd5);
        TensorElt u(5, {ColumnTableau(5, {1, 3, 4, 5})});
        check("strong commutation +",
              strongly_commute(TensorElt(5, {ColumnTableau(5, {3, 5})}), L2, u, L4, cd5));
        check("strong commutation -",
              !strongly_commute(TensorElt(5, {ColumnTableau(5, {2, 4})}), L2, u, L4, cd5));
    }

    {
        std::vector<ColumnTableau> convT = {ColumnTableau(5, {5}), ColumnTableau(5, {3, 4}),
                                            ColumnTableau(5, {1, 2}),
                                            ColumnTableau(5, {1, 2, 3})};
        std::vector<ColumnTableau> convS = {ColumnTableau(5, {5}), ColumnTableau(5, {2, 4}),
                                            ColumnTableau(5, {1, 3}),
                                            ColumnTableau(5, {1, 2, 3})};
        check("head shift t(T)", shift_of(convT, cd5) == 1);
        check("head shift t(S)", shift_of(convS, cd5) == 2);
    }

    {
        QChar a = qch_sp(ColumnTableau(5, {3, 5}), cd5);
        QChar b = qch_sp(ColumnTableau(5, {1, 3, 4, 5}), cd5);
        check("bar invariance (pair 2)", shift(shuffle(a, b, cd5), 1).bar_invariant());
        QChar x = qch_sp(ColumnTableau(5, {5}), cd5);
        QChar y = qch_sp(ColumnTableau(5, {3, 4}), cd5);
        QChar mT = shift(shuffle(x, y, cd5), 1);
        check("bar invariance (T block)", mT.bar_invariant());

        QChar triple = shuffle(shuffle(x, qch_sp(ColumnTableau(5, {2, 4}), cd5), cd5),
                               qch_sp(ColumnTableau(5, {1, 3}), cd5), cd5);
        auto sol = solve_unitriangular_full({{"S", shift(triple, 2)}, {"T", mT}}, cd5);
        check("Grothendieck identity",
              triple == shift(sol.simples[1].second, -1) + shift(sol.simples[0].second, -2));
    }

    if (!quick) {
        std::vector<ColumnTableau> colsT = {ColumnTableau(5, {1, 2, 3}), ColumnTableau(5, {1, 2}),
                                            ColumnTableau(5, {3, 4}), ColumnTableau(5, {5})};
        std::vector<ColumnTableau> colsS = {ColumnTableau(5, {1, 2, 3}), ColumnTableau(5, {1, 3}),
                                            ColumnTableau(5, {2, 4}), ColumnTableau(5, {5})};
        SSYTab T(5, {{1, 1, 3, 5}, {2, 2, 4}, {3}});
        SSYTab S(5, {{1, 1, 2, 5}, {2, 3, 4}, {3}});
        auto decT = graded_decomposition(colsT, cd5);
        check("decomposition (T block)",
              decT.size() == 1 && decT.at(T) == LaurentInt::monomial(1, -1));
        auto decS = graded_decomposition(colsS, cd5);
        check("decomposition (S block)",
              decS.size() == 2 && decS.at(T) == LaurentInt::monomial(1, -1) &&
                  decS.at(S) == LaurentInt::monomial(1, -2));
    }

    std::cout << (failures ? "selftest FAILED\n" : "selftest passed\n");
    return failures ? 2 : 0;
}

}  // namespace
