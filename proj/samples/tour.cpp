// A short tour of the library: canonical forms, the subgroup of
// all-positive windows, factorizations, lengths, and descents.
//
// Build the `sample_tour` target and run it; it prints a narrated
// walkthrough to stdout.

#include <cstdio>
#include <string>

#include "bn/factor.hpp"
#include "bn/io.hpp"
#include "bn/metrics.hpp"
#include "bn/ogs.hpp"
#include "bn/sn.hpp"

using namespace bn;

namespace {

void show(const char* label, const std::string& value) {
    std::printf("  %-18s %s\n", label, value.c_str());
}

}  // namespace

int main() {
    // Signed permutations are stored by their window, the images of 1..n.
    // Negative entries mark sign flips.
    const SignedPermutation w({-2, -1, -4, -3});
    std::printf("the element w with window %s\n", format_window(w).c_str());

    // Canonicalization peels one tau power per index, largest index first.
    const OgsExponents e = to_ogs(w);
    show("canonical form", format_ogs(e));
    show("round trip", format_window(from_ogs(e)));

    // Coxeter length, computed from the factorization, and a reduced word.
    show("length", std::to_string(length(e)));
    show("reduced word", format_word(greedy_reduce(w)));

    // The normal form groups a reduced word into staircase blocks; its
    // block sizes determine the length.
    const NormalForm nf = normal_form(w);
    {
        std::string ys;
        for (size_t i = 0; i < nf.y.size(); ++i)
            ys += (i ? "," : "(") + std::to_string(nf.y[i]);
        show("block sizes", ys + ")");
    }

    // Descents are the positions where the window decreases, reading the
    // fixed value 0 at position 0.
    {
        std::string ds;
        for (int i : descents(w).indices) ds += (ds.empty() ? "" : " ") + std::to_string(i);
        show("descents", ds.empty() ? "none" : ds);
    }

    // Adjacent tau powers in the wrong order can be exchanged in closed
    // form. Reversing tau_2^1 * tau_3^-2 yields a three-factor product.
    std::printf("\nexchanging tau_3^-2 * tau_2^1 back into canonical order\n");
    show("result", format_ogs(exchange_tau(3, -2, 2, 1)));

    // Elements whose window is all positive form a subgroup isomorphic to
    // the ordinary symmetric group; their canonical forms translate into
    // t-powers, which are plain cycles.
    const OgsExponents member(5, {{4, -3}, {5, 3}});
    std::printf("\nthe subgroup element %s\n", format_ogs(member).c_str());
    show("window", format_window(from_ogs(member)));
    show("in subgroup", is_in_sdot(member) ? "yes" : "no");
    show("t-form", format_t_ogs(tau_to_t(member)));
    show("length", std::to_string(length_sdot(member)));

    // Subgroup elements factor into elementary blocks, one per negative
    // exponent, each moving a single descent.
    const OgsExponents zigzag(7, {{3, -2}, {5, 1}, {6, -4}, {7, 5}});
    std::printf("\nelementary blocks of %s\n", format_ogs(zigzag).c_str());
    for (const OgsExponents& block : elementary_factorize(zigzag).factors)
        show("block", format_ogs(block));

    // Every element, subgroup or not, has a unique alternating
    // factorization u_1 v_1 u_2 v_2 ... with subgroup parts u_j and
    // negative blocks v_j of strictly increasing index.
    const OgsExponents general(6, {{2, 1}, {4, -2}, {6, -3}});
    std::printf("\nalternating factorization of %s\n", format_ogs(general).c_str());
    const UvFactorization f = uv_factorize(general);
    for (int j = 0; j < f.parts(); ++j) {
        show("u", format_ogs(f.u[j]));
        if (j < static_cast<int>(f.p.size()))
            show("v", "tau" + std::to_string(f.p[j]) + "^" + std::to_string(f.p[j]));
    }
    show("length", std::to_string(length(general)));

    return 0;
}
