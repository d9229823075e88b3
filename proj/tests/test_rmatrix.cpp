#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"

#include "klrtab/crystal.hpp"
#include "klrtab/rmatrix.hpp"

using namespace klrtab;

namespace {

std::vector<ColumnTableau> all_columns_up_to(int n, int kmin, int kmax) {
    std::vector<ColumnTableau> out;
    for (int k = kmin; k <= kmax; ++k)
        for (auto& c : oracle::all_columns(n, k)) out.push_back(c);
    return out;
}

}  // namespace

TEST_CASE("encode reproduces the worked instances") {
    CHECK(encode(ColumnTableau(4, {4}), ColumnTableau(4, {2, 3}), 4).to_string() ==
          "10 01 01 00");
    CHECK(encode(ColumnTableau(5, {3, 5}), ColumnTableau(5, {1, 3, 4, 5}), 5).to_string() ==
          "11 01 11 00 01");
    CHECK(encode(ColumnTableau(5, {2, 4}), ColumnTableau(5, {1, 3, 4, 5}), 5).to_string() ==
          "01 11 01 10 01");
}

TEST_CASE("rank-one raising on the bit image") {
    BitWord w = encode(ColumnTableau(4, {4}), ColumnTableau(4, {2, 3}), 4);
    auto up = bitword_apply_e(w);
    REQUIRE(up);
    CHECK(up->to_string() == "10 01 10 00");
    auto [f, s] = decode(*up);
    CHECK(f == ColumnTableau(4, {2, 4}));
    CHECK(s == ColumnTableau(4, {3}));
}

TEST_CASE("decode") {
    BitWord all00(3, {BitLetter::b00, BitLetter::b00, BitLetter::b00});
    auto [f, s] = decode(all00);
    CHECK(f.entries.empty());
    CHECK(s.entries.empty());
}

TEST_CASE("sigma on the three worked instances") {
    auto r1 = sigma_with_words(ColumnTableau(4, {4}), ColumnTableau(4, {2, 3}), 4);
    CHECK(r1.first == ColumnTableau(4, {2, 4}));
    CHECK(r1.second == ColumnTableau(4, {3}));
    CHECK(r1.bits_in.to_string() == "10 01 01 00");
    CHECK(r1.bits_out.to_string() == "10 01 10 00");

    auto r2 = sigma_with_words(ColumnTableau(5, {3, 5}), ColumnTableau(5, {1, 3, 4, 5}), 5);
    CHECK(r2.first == ColumnTableau(5, {1, 3, 4, 5}));
    CHECK(r2.second == ColumnTableau(5, {3, 5}));
    CHECK(r2.bits_out.to_string() == "11 10 11 00 10");

    auto r3 = sigma_with_words(ColumnTableau(5, {2, 4}), ColumnTableau(5, {1, 3, 4, 5}), 5);
    CHECK(r3.first == ColumnTableau(5, {2, 3, 4, 5}));
    CHECK(r3.second == ColumnTableau(5, {1, 4}));
    CHECK(r3.bits_out.to_string() == "10 11 10 10 01");
}

TEST_CASE("encode/decode is a bijection, exhaustive n <= 5") {
    for (int n = 2; n <= 5; ++n) {
        std::set<std::string> words;
        long long pairs = 0;
        for (const auto& a : all_columns_up_to(n, 0, n))
            for (const auto& b : all_columns_up_to(n, 0, n)) {
                ++pairs;
                BitWord w = encode(a, b, n);
                words.insert(w.to_string());
                auto [x, y] = decode(w);
                CHECK(x == a);
                CHECK(y == b);
            }
        // surjective: 4^n words, one per pair
        CHECK(pairs == (1LL << (2 * n)));
        CHECK(static_cast<long long>(words.size()) == pairs);
    }
}

TEST_CASE("sigma is an involution and swaps sizes, exhaustive n <= 5") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& a : all_columns_up_to(n, 1, n - 1))
            for (const auto& b : all_columns_up_to(n, 1, n - 1)) {
                auto [x, y] = sigma(a, b, n);
                CHECK(x.size() == b.size());
                CHECK(y.size() == a.size());
                auto [a2, b2] = sigma(x, y, n);
                CHECK(a2 == a);
                CHECK(b2 == b);
                if (a.size() == b.size()) {
                    CHECK(x == a);
                    CHECK(y == b);
                }
            }
}

TEST_CASE("the raising power inside sigma is always applicable, exhaustive n <= 5") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& a : all_columns_up_to(n, 1, n - 1))
            for (const auto& b : all_columns_up_to(n, 1, n - 1)) {
                if (a.size() > b.size()) continue;
                BitWord w = encode(a, b, n);
                int eps = 0;
                for (BitWord cur = w;;) {
                    auto up = bitword_apply_e(cur);
                    if (!up) break;
                    cur = *up;
                    ++eps;
                }
                CHECK(eps >= b.size() - a.size());
            }
}

TEST_CASE("sigma commutes with the crystal operators and preserves wt, exhaustive n <= 4") {
    for (int n = 2; n <= 4; ++n) {
        CartanA cd(n);
        for (const auto& a : all_columns_up_to(n, 1, n - 1))
            for (const auto& b : all_columns_up_to(n, 1, n - 1)) {
                auto [x, y] = sigma(a, b, n);
                TensorElt src(n, {a, b}), dst(n, {x, y});
                CHECK(stats(src, cd).wt == stats(dst, cd).wt);
                CHECK(crystal_equivalent(src, dst, cd));
                for (int i = 1; i <= cd.rank(); ++i) {
                    auto se = apply_e(i, src, cd), de = apply_e(i, dst, cd);
                    REQUIRE(se.has_value() == de.has_value());
                    if (se) {
                        auto [xs, ys] =
                            sigma(se->factors[0], se->factors[1], n);
                        CHECK(TensorElt(n, {xs, ys}) == *de);
                    }
                    auto sf = apply_f(i, src, cd), df = apply_f(i, dst, cd);
                    REQUIRE(sf.has_value() == df.has_value());
                    if (sf) {
                        auto [xs, ys] =
                            sigma(sf->factors[0], sf->factors[1], n);
                        CHECK(TensorElt(n, {xs, ys}) == *df);
                    }
                }
            }
    }
}
