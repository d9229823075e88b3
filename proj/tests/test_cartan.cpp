#include <doctest.h>

#include <random>

#include "klrtab/cartan.hpp"

using namespace klrtab;

namespace {

RootVec random_root(std::mt19937& rng, const CartanA& cd) {
    std::uniform_int_distribution<int> d(0, 4);
    std::vector<long long> c(cd.rank());
    for (auto& x : c) x = d(rng);
    return RootVec(std::move(c));
}

WeightVec random_weight(std::mt19937& rng, const CartanA& cd) {
    std::uniform_int_distribution<int> d(-3, 4);
    std::vector<long long> c(cd.rank());
    for (auto& x : c) x = d(rng);
    return WeightVec(std::move(c));
}

}  // namespace

TEST_CASE("pair_form on known values") {
    CartanA cd4(4);
    CHECK(pair_form(RootVec::simple(1, cd4), RootVec::simple(2, cd4), cd4) == Rational(-1));
    CHECK(pair_form(RootVec::simple(1, cd4), RootVec::simple(1, cd4), cd4) == Rational(2));

    CartanA cd3(3);
    CHECK(pair_form(WeightVec::fundamental(1, cd3), WeightVec::fundamental(1, cd3), cd3) ==
          Rational(2, 3));

    RootVec a12 = RootVec::simple(1, cd4) + RootVec::simple(2, cd4);
    CHECK(pair_form(a12, WeightVec::fundamental(1, cd4), cd4) == Rational(1));
}

TEST_CASE("coroot pairing") {
    CartanA cd4(4);
    CHECK(coroot_pairing(2, WeightVec::fundamental(2, cd4), cd4) == 1);
    CHECK(coroot_pairing(1, root_to_weight(RootVec::simple(1, cd4), cd4), cd4) == 2);
    CHECK(coroot_pairing(1, root_to_weight(RootVec::simple(2, cd4), cd4), cd4) == -1);
    CHECK_THROWS_AS(coroot_pairing(4, WeightVec::fundamental(1, cd4), cd4), std::out_of_range);
}

TEST_CASE("root_to_weight") {
    CartanA cd3(3);
    CHECK(root_to_weight(RootVec::simple(1, cd3), cd3) == WeightVec(std::vector<long long>{2, -1}));
    CHECK(root_to_weight(RootVec::zero(cd3), cd3) == WeightVec::zero(cd3));
    RootVec a12 = RootVec::simple(1, cd3) + RootVec::simple(2, cd3);
    CHECK(root_to_weight(a12, cd3) == WeightVec(std::vector<long long>{1, 1}));
}

TEST_CASE("dimension mismatch is rejected") {
    CartanA cd3(3), cd4(4);
    CHECK_THROWS_AS(pair_form(RootVec::simple(1, cd3), RootVec::simple(1, cd4), cd4),
                    std::invalid_argument);
}

TEST_CASE("bilinear form properties, randomized") {
    std::mt19937 rng(20240811);
    for (int n = 2; n <= 6; ++n) {
        CartanA cd(n);
        for (int trial = 0; trial < 200; ++trial) {
            RootVec b1 = random_root(rng, cd), b2 = random_root(rng, cd);
            WeightVec l1 = random_weight(rng, cd), l2 = random_weight(rng, cd);

            // symmetry
            CHECK(pair_form(b1, l1, cd) == pair_form(l1, b1, cd));
            CHECK(pair_form(l1, l2, cd) == pair_form(l2, l1, cd));
            CHECK(pair_form(b1, b2, cd) == pair_form(b2, b1, cd));

            // bilinearity over an integer combination
            CHECK(pair_form(b1 + b2 * 3, l1, cd) ==
                  pair_form(b1, l1, cd) + Rational(3) * pair_form(b2, l1, cd));

            // integrality
            CHECK(pair_form(b1, b2, cd).is_integer());
            CHECK(pair_form(b1, l1, cd).is_integer());

            // coroot consistency: 2 (alpha_i, l) / (alpha_i, alpha_i) = <h_i, l>
            for (int i = 1; i <= cd.rank(); ++i) {
                Rational lhs = Rational(2) * pair_form(RootVec::simple(i, cd), l1, cd) /
                               pair_form(RootVec::simple(i, cd), RootVec::simple(i, cd), cd);
                CHECK(lhs == Rational(coroot_pairing(i, l1, cd)));
            }

            // the two d-expressions agree:
            // (b1,l2) + (b2,l1) - (b1,b2) = (l1,l2) - (l1-b1, l2-b2)
            WeightVec w1 = root_to_weight(b1, cd), w2 = root_to_weight(b2, cd);
            Rational lhs = pair_form(b1, l2, cd) + pair_form(b2, l1, cd) - pair_form(b1, b2, cd);
            Rational rhs = pair_form(l1, l2, cd) - pair_form(l1 - w1, l2 - w2, cd);
            CHECK(lhs == rhs);

            // both weight representations pair identically
            CHECK(pair_form(b1, l1, cd) == pair_form(root_to_weight(b1, cd), l1, cd));
        }
    }
}

TEST_CASE("inverse Cartan entries") {
    for (int n = 2; n <= 7; ++n) {
        CartanA cd(n);
        // A * A^{-1} = Id row by row
        for (int i = 1; i <= cd.rank(); ++i)
            for (int j = 1; j <= cd.rank(); ++j) {
                Rational s(0);
                for (int k = 1; k <= cd.rank(); ++k)
                    s += Rational(cd.a(i, k)) * cd.inverse_entry(k, j);
                CHECK(s == Rational(i == j ? 1 : 0));
            }
    }
}
