// Tests for the symmetric-subgroup layer: the t-power canonical form and its
// exchange law, membership of a tau product in the subgroup, the mod-k bridge
// between the two canonical forms, and elementary factorization.

#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "bn/sn.hpp"
#include "test_util.hpp"

using bn::elementary_factorize;
using bn::exchange_t;
using bn::from_ogs;
using bn::from_t_ogs;
using bn::is_elementary;
using bn::is_in_sdot;
using bn::OgsExponents;
using bn::SignedPermutation;
using bn::SnOgsExponents;
using bn::t_to_tau;
using bn::tau_to_t;
using bn::to_ogs;
using bn::to_t_ogs;
using bn::TPower;
using bntest::for_each_ogs;

namespace {

// Membership in prefix form: every proper prefix sum of the nonzero
// exponents lies in [-k_r, 0]. Equivalent to the suffix form used by
// is_in_sdot whenever the total is zero; the tests verify that.
bool in_sdot_prefix_form(const OgsExponents& e) {
    const auto fs = e.factors();
    long total = 0;
    for (const auto& f : fs) total += f.e;
    if (total != 0) return false;
    long prefix = 0;
    for (size_t r = 0; r + 1 < fs.size(); ++r) {
        prefix += fs[r].e;
        if (prefix < -fs[r].k || prefix > 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("t_apply matches the defining window") {
    // t_m sends 1 to m and shifts 2..m down by one.
    for (int m = 2; m <= 7; ++m) {
        CHECK(bn::t_apply(m, 1, 1) == m);
        for (int j = 2; j <= m; ++j) CHECK(bn::t_apply(m, 1, j) == j - 1);
        CHECK(bn::t_apply(m, 1, m + 2) == m + 2);
        CHECK(bn::t_apply(m, m, 1) == 1);
        CHECK(bn::t_apply(m, 1, -1) == -m);
    }
    CHECK_THROWS_AS(bn::normalize_t_exponent(1, 0), std::invalid_argument);
}

TEST_CASE("t_apply powers agree with iterating the first power") {
    for (int k = 2; k <= 7; ++k)
        for (int e = 0; e < k; ++e)
            for (int j = 1; j <= k + 2; ++j) {
                int x = j;
                for (int t = 0; t < e; ++t) x = bn::t_apply(k, 1, x);
                CHECK(bn::t_apply(k, e, j) == x);
            }
}

TEST_CASE("from_t_ogs and to_t_ogs are mutually inverse on the subgroup") {
    const int n = 5;
    long count = 0;
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
        const SignedPermutation perm(w);
        const auto e = to_t_ogs(perm);
        CHECK(from_t_ogs(e) == perm);
        ++count;
    } while (std::next_permutation(w.begin(), w.end()));
    CHECK(count == 120);

    CHECK_THROWS_AS(to_t_ogs(SignedPermutation({-1, 2})), std::domain_error);
    CHECK(to_t_ogs(SignedPermutation({2, 1})) == SnOgsExponents(2, {{2, 1}}));
}

TEST_CASE("exchange_t worked examples") {
    CHECK(exchange_t(5, 2, 3, 1) == SnOgsExponents(5, {{3, 2}, {5, 3}}));
    CHECK(exchange_t(4, 1, 2, 1) == SnOgsExponents(4, {{2, 1}, {3, 1}, {4, 1}}));
    // Degenerate boundaries collapse to two factors.
    CHECK(exchange_t(5, 3, 3, 2) == SnOgsExponents(5, {{3, 1}, {5, 2}}));
    CHECK_THROWS_AS(exchange_t(3, 1, 3, 1), std::invalid_argument);
}

TEST_CASE("exchange_t matches composing the two powers, exhaustively") {
    const int n = 7;
    std::vector<std::string> mismatches;
    long cases = 0;
    for (int q = 3; q <= n; ++q)
        for (int p = 2; p < q; ++p)
            for (int i_q = 1; i_q < q; ++i_q)
                for (int i_p = 1; i_p < p; ++i_p) {
                    ++cases;
                    const auto composed =
                        compose(from_t_ogs(SnOgsExponents(q, {{q, i_q}})),
                                from_t_ogs(SnOgsExponents(q, {{p, i_p}})));
                    const auto got = exchange_t(q, i_q, p, i_p);
                    REQUIRE(from_t_ogs(got) == composed);
                    const auto f = bn::exchange_t_formula(q, i_q, p, i_p);
                    REQUIRE(f.applicable);
                    if (SnOgsExponents(q, f.result) != got)
                        mismatches.push_back("q=" + std::to_string(q) + " i_q=" +
                                             std::to_string(i_q) + " p=" + std::to_string(p) +
                                             " i_p=" + std::to_string(i_p) + " case " + f.note);
                }
    CAPTURE(mismatches);
    CHECK(mismatches.empty());
    CHECK(cases == 175);
}

TEST_CASE("is_in_sdot worked examples") {
    CHECK(is_in_sdot(OgsExponents(13, {{9, -8}, {10, 1}, {11, -3}, {13, 10}})));
    CHECK(is_in_sdot(OgsExponents(4)));
    CHECK_FALSE(is_in_sdot(OgsExponents(4, {{1, -1}, {2, 1}, {3, -1}, {4, -3}})));
    CHECK(is_in_sdot(OgsExponents(2, {{1, -1}, {2, 1}})));
}

TEST_CASE("membership criteria agree with the window semantics") {
    for (int n = 1; n <= 5; ++n) {
        long members = 0;
        for_each_ogs(n, [&](const OgsExponents& e) {
            const bool semantic = from_ogs(e).all_positive();
            CHECK(is_in_sdot(e) == semantic);
            CHECK(in_sdot_prefix_form(e) == semantic);
            if (semantic) ++members;
        });
        long fact = 1;
        for (int k = 2; k <= n; ++k) fact *= k;
        CHECK(members == fact);
    }
}

TEST_CASE("tau_to_t worked examples") {
    CHECK(tau_to_t(OgsExponents(10, {{6, -5}, {8, 2}, {9, 2}, {10, 1}})) ==
          SnOgsExponents(10, {{6, 1}, {8, 2}, {9, 2}, {10, 1}}));
    CHECK(tau_to_t(OgsExponents(5, {{3, -2}, {4, -1}, {5, 3}})) ==
          SnOgsExponents(5, {{3, 1}, {4, 3}, {5, 3}}));
    CHECK_THROWS_AS(tau_to_t(OgsExponents(2, {{2, 1}})), std::domain_error);
}

TEST_CASE("t_to_tau inverts tau_to_t across the subgroup") {
    CHECK(t_to_tau(SnOgsExponents(2, {{2, 1}})) == OgsExponents(2, {{1, -1}, {2, 1}}));
    for (int n = 1; n <= 5; ++n)
        for_each_ogs(n, [&](const OgsExponents& e) {
            if (!is_in_sdot(e)) return;
            const auto t = tau_to_t(e);
            CHECK(t_to_tau(t) == e);
            CHECK(from_t_ogs(t) == from_ogs(e));
        });
}

TEST_CASE("is_elementary worked examples") {
    CHECK(is_elementary(OgsExponents(10, {{6, -5}, {8, 2}, {9, 2}, {10, 1}})));
    CHECK_FALSE(is_elementary(
        OgsExponents(12, {{5, -3}, {7, 2}, {8, -4}, {9, 4}, {11, -3}, {12, 4}})));
    CHECK(is_elementary(OgsExponents(6)));
    CHECK_FALSE(is_elementary(OgsExponents(3, {{3, 1}})));
    CHECK_FALSE(is_elementary(OgsExponents(3, {{2, -1}, {3, 2}})));
}

TEST_CASE("elementary_factorize worked example with three blocks") {
    const OgsExponents e(12, {{5, -3}, {7, 2}, {8, -4}, {9, 4}, {11, -3}, {12, 4}});
    const auto f = elementary_factorize(e);
    REQUIRE(f.z == 3);
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0] == OgsExponents(12, {{5, -3}, {7, 2}, {8, 1}}));
    CHECK(f.factors[1] == OgsExponents(12, {{8, -5}, {9, 4}, {11, 1}}));
    CHECK(f.factors[2] == OgsExponents(12, {{11, -4}, {12, 4}}));
    CHECK(f.boundaries == std::vector<int>{8, 11});
}

TEST_CASE("elementary_factorize identity and domain errors") {
    const auto f = elementary_factorize(OgsExponents(4));
    CHECK(f.z == 0);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].is_identity());
    CHECK(f.boundaries.empty());
    CHECK_THROWS_AS(elementary_factorize(OgsExponents(3, {{3, 1}})), std::domain_error);
}

TEST_CASE("elementary factorization reconstructs every subgroup element") {
    for (int n = 1; n <= 5; ++n)
        for_each_ogs(n, [&](const OgsExponents& e) {
            if (!is_in_sdot(e)) return;
            const auto f = elementary_factorize(e);
            int negatives = 0;
            for (const auto& fac : e.factors())
                if (fac.e < 0) ++negatives;
            CHECK(f.z == negatives);
            auto acc = SignedPermutation::identity(n);
            for (const auto& block : f.factors) {
                CHECK(is_elementary(block));
                CHECK(is_in_sdot(block));
                acc = compose(acc, from_ogs(block));
            }
            CHECK(acc == from_ogs(e));
            if (f.z > 0) CHECK(f.boundaries.size() == f.factors.size() - 1);
        });
}
