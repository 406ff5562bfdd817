// Acceptance gate: re-derives every guaranteed property of the library at
// exact equality and prints one PASS/FAIL line per criterion. Exits nonzero
// if anything fails. Runs from scratch in well under a minute.

#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "bn/oracle.hpp"
#include "test_util.hpp"

using namespace bn;

namespace {

int failures = 0;

void criterion(int number, const char* label, bool ok) {
    std::printf("%s %2d  %s\n", ok ? "PASS" : "FAIL", number, label);
    std::fflush(stdout);
    if (!ok) ++failures;
}

bool uv_structure_holds(const OgsExponents& e) {
    const SignedPermutation w = from_ogs(e);
    const UvFactorization f = uv_factorize(e);
    if (!(uv_product(f) == w)) return false;
    for (size_t j = 0; j + 1 < f.p.size(); ++j)
        if (f.p[j] >= f.p[j + 1]) return false;
    for (size_t j = 0; j < f.u.size(); ++j) {
        if (!is_in_sdot(f.u[j])) return false;
        const auto fs = f.u[j].factors();
        if (fs.empty()) continue;
        if (j > 0 && fs.front().k < f.p[j - 1]) return false;
        if (j < f.p.size() && fs.back().k > f.p[j]) return false;
    }
    return true;
}

}  // namespace

int main() {
    // 1. Every exponent vector names a distinct element and canonicalization
    //    inverts the map, for ranks 1 through 5.
    {
        bool ok = true;
        long expected = 1;
        for (int n = 1; n <= 5; ++n) {
            expected *= 2 * n;  // accumulate 2^n * n!
            const VerifyReport rep = verify_bijection(n);
            ok = ok && rep.pass() && rep.cases == expected;
        }
        criterion(1, "exponent vectors biject onto the group, ranks 1-5", ok);
    }

    // 2. The reversed-pair exchange table agrees with composition for every
    //    in-range exponent pair at rank 6, and declines exactly its
    //    documented excluded tuples.
    {
        const VerifyReport rep = verify_exchange_tau(6);
        criterion(2, "exchange rewriting matches composition, rank 6", rep.pass() && rep.cases > 0);
    }

    // 3. The subgroup exchange table agrees with composition exhaustively at
    //    rank 7.
    {
        const VerifyReport rep = verify_exchange_t(7);
        criterion(3, "subgroup exchange rewriting matches composition, rank 7",
                  rep.pass() && rep.cases > 0);
    }

    // 4. Pinned worked examples, bit for bit.
    {
        bool ok = true;

        // Canonicalization of a rank-4 window.
        ok = ok && to_ogs(SignedPermutation({-2, -1, -4, -3})) ==
                       OgsExponents(4, {{1, -1}, {2, 1}, {3, -1}, {4, -3}});

        // A rank-6 normal form with eighteen letters in six blocks.
        const std::vector<int> letters = {0, 1, 0, 1, 3, 2, 1, 0, 4, 3, 2, 1, 0, 1, 2, 5, 4, 3};
        const SignedPermutation blockw = eval_word(CoxeterWord(6, letters));
        const NormalForm nf = normal_form(blockw);
        ok = ok && nf.y == std::vector<int>{1, 3, 0, 4, 7, 3} && nf.length() == 18 &&
             nf.word.letters == letters;

        // A rank-13 subgroup element and its window.
        const OgsExponents big(13, {{9, -8}, {10, 1}, {11, -3}, {13, 10}});
        ok = ok && is_in_sdot(big) &&
             from_ogs(big).window() ==
                 std::vector<int>{1, 5, 7, 8, 9, 10, 11, 12, 13, 4, 6, 2, 3};

        // An elementary element, its window, and its single descent.
        const OgsExponents elem(10, {{6, -5}, {8, 2}, {9, 2}, {10, 1}});
        ok = ok && is_elementary(elem) &&
             from_ogs(elem).window() == std::vector<int>{1, 4, 5, 7, 8, 10, 2, 3, 6, 9} &&
             descents(from_ogs(elem)).indices == std::vector<int>{6};

        // A three-block elementary factorization.
        const ElementaryFactorization ef =
            elementary_factorize(OgsExponents(12, {{5, -3}, {7, 2}, {8, -4}, {9, 4}, {11, -3}, {12, 4}}));
        ok = ok && ef.z == 3 && ef.factors.size() == 3 &&
             ef.factors[0] == OgsExponents(12, {{5, -3}, {7, 2}, {8, 1}}) &&
             ef.factors[1] == OgsExponents(12, {{8, -5}, {9, 4}, {11, 1}}) &&
             ef.factors[2] == OgsExponents(12, {{11, -4}, {12, 4}}) &&
             ef.boundaries == std::vector<int>{8, 11};

        // A four-part alternating factorization.
        const UvFactorization f =
            uv_factorize(OgsExponents(9, {{3, 2}, {4, 3}, {5, -2}, {7, 4}, {8, 2}, {9, 4}}));
        ok = ok && f.parts() == 4 && f.u[0].is_identity() &&
             f.u[1] == OgsExponents(9, {{2, -2}, {3, 2}}) &&
             f.u[2] == OgsExponents(9, {{4, -1}, {5, -2}, {7, 3}}) &&
             f.u[3] == OgsExponents(9, {{7, -6}, {8, 2}, {9, 4}}) &&
             f.p == std::vector<int>{2, 4, 7};

        // A length-13 element of rank 5.
        ok = ok && length(OgsExponents(5, {{2, 1}, {3, 1}, {4, 3}, {5, 2}})) == 13;

        // Three pinned descent sets.
        ok = ok && descents(from_ogs(OgsExponents(5, {{3, -2}, {4, -1}, {5, 3}}))).indices ==
                       std::vector<int>{3, 4};
        const SignedPermutation vu = from_ogs(OgsExponents(10, {{9, 4}, {10, 4}}));
        ok = ok && vu.window() == std::vector<int>{-2, -3, -4, -5, -7, -8, -9, -10, 1, 6} &&
             descents(vu).indices == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7};
        const SignedPermutation uv = compose(from_ogs(OgsExponents(5, {{3, -1}, {4, -2}, {5, 3}})),
                                             from_ogs(OgsExponents(5, {{5, 5}})));
        ok = ok && uv.window() == std::vector<int>{-1, -3, -5, -4, -2} &&
             descents(uv).indices == std::vector<int>{0, 1, 2};

        criterion(4, "pinned worked examples reproduce bit-exactly", ok);
    }

    // 5. Alternating-sum length = normal form length = greedy length = graph
    //    distance on all of ranks 4 and 5; the negative block of each rank
    //    has length k^2.
    {
        bool ok = verify_lengths(4).pass() && verify_lengths(5).pass();
        for (int k = 1; k <= 5; ++k)
            ok = ok && length(OgsExponents(k, {{k, -k}})) == static_cast<long>(k) * k;
        criterion(5, "four length routes agree, ranks 4-5", ok);
    }

    // 6. The weighted exponent sum equals graph distance on the whole
    //    rank-5 subgroup.
    {
        bool ok = true;
        long members = 0;
        const CayleyTable table(5);
        detail::every_ogs(5, [&](const OgsExponents& e) {
            if (!is_in_sdot(e)) return;
            ++members;
            ok = ok && length_sdot(e) == table.distance(from_ogs(e));
        });
        criterion(6, "subgroup length formula matches graph distance, rank 5",
                  ok && members == 120);
    }

    // 7. Subgroup membership is exactly the all-positive windows for ranks
    //    1 through 5, and the tau/t exponent translation is a bijection on
    //    the rank-5 subgroup.
    {
        bool ok = true;
        for (int n = 1; n <= 5; ++n)
            detail::every_ogs(n, [&](const OgsExponents& e) {
                ok = ok && is_in_sdot(e) == from_ogs(e).all_positive();
            });
        long members = 0;
        std::map<std::vector<int>, int> images;
        detail::every_ogs(5, [&](const OgsExponents& e) {
            if (!is_in_sdot(e)) return;
            ++members;
            const SnOgsExponents t = tau_to_t(e);
            ok = ok && t_to_tau(t) == e && from_t_ogs(t) == from_ogs(e);
            std::vector<int> key;
            for (int k = 2; k <= 5; ++k) key.push_back(t.exp(k));
            ++images[key];
        });
        criterion(7, "subgroup membership and t-form round-trip, ranks 1-5",
                  ok && members == 120 && static_cast<long>(images.size()) == 120);
    }

    // 8. Elementary factorization over the whole rank-6 subgroup: block
    //    count equals the number of negative exponents, every block is
    //    elementary, and the product reconstructs the element.
    {
        bool ok = true;
        long members = 0;
        detail::every_ogs(6, [&](const OgsExponents& e) {
            if (!is_in_sdot(e)) return;
            ++members;
            const ElementaryFactorization ef = elementary_factorize(e);
            int negatives = 0;
            for (const auto& [k, ex] : e.factors())
                if (ex < 0) ++negatives;
            ok = ok && ef.z == negatives;
            ok = ok && (e.is_identity() ? ef.factors.size() == 1 && ef.factors[0].is_identity()
                                        : static_cast<int>(ef.factors.size()) == ef.z);
            SignedPermutation acc = SignedPermutation::identity(6);
            for (const auto& block : ef.factors) {
                ok = ok && is_elementary(block) && is_in_sdot(block);
                acc = compose(acc, from_ogs(block));
            }
            ok = ok && acc == from_ogs(e);
        });
        criterion(8, "elementary factorization over the rank-6 subgroup", ok && members == 720);
    }

    // 9. The alternating factorization reconstructs every element of rank 4
    //    and ten thousand random elements of rank 8, with strictly
    //    increasing part indices and parts confined to their index windows.
    {
        bool ok = true;
        detail::every_ogs(4, [&](const OgsExponents& e) { ok = ok && uv_structure_holds(e); });
        std::mt19937_64 rng(987654321);
        for (int trial = 0; trial < 10000; ++trial)
            ok = ok && uv_structure_holds(to_ogs(bntest::random_element(8, rng)));
        criterion(9, "alternating factorization, rank 4 exhaustive plus random rank 8", ok);
    }

    // 10. Descent characterizations: the window rule equals the length-drop
    //     rule on all of rank 4, the negative block has a full descent set,
    //     and the three closed-form laws hold on every hypothesis pair of
    //     ranks up to 5.
    {
        bool ok = true;
        const CayleyTable table(4);
        detail::every_ogs(4, [&](const OgsExponents& e) {
            const SignedPermutation w = from_ogs(e);
            const long len = table.distance(w);
            const DescentSet d = descents(w);
            for (int i = 0; i < 4; ++i) {
                const bool drop =
                    table.distance(compose(SignedPermutation::generator(4, i), w)) < len;
                ok = ok && d.contains(i) == drop;
            }
        });
        for (int k = 1; k <= 5; ++k) {
            const DescentSet d = descents(from_ogs(OgsExponents(k, {{k, -k}})));
            ok = ok && static_cast<int>(d.indices.size()) == k;
            for (int i = 0; i < k; ++i) ok = ok && d.contains(i);
        }
        for (int n = 1; n <= 5; ++n)
            detail::every_ogs(n, [&](const OgsExponents& e) {
                if (!is_in_sdot(e)) return;
                ok = ok && descent_laws_check(DescentLaw::sdot, e).match;
                const auto fs = e.factors();
                for (int b = 1; b <= n; ++b) {
                    if (fs.empty() || fs.front().k >= b)
                        ok = ok && descent_laws_check(DescentLaw::v_then_u, e, b).match;
                    if (fs.empty() || fs.back().k <= b)
                        ok = ok && descent_laws_check(DescentLaw::u_then_v, e, b).match;
                }
            });
        criterion(10, "descent characterizations, ranks up to 5", ok);
    }

    if (failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
