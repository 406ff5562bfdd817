#pragma once
// Alternating factorization of an arbitrary B_n element into symmetric-
// subgroup parts and long tau powers:
//
//     pi = u_1 * v_1 * u_2 * v_2 * ... * v_{r-1} * u_r
//
// where each u_j lies in the symmetric subgroup (is_in_sdot) and each
// v_j = tau_{p_j}^{p_j} with p_1 < p_2 < ... < p_{r-1}. The nonzero tau
// indices of u_j all lie between p_{j-1} and p_j (inclusive at both ends,
// where defined).
//
// uv_factorize peels parts off the right of the canonical exponent list:
// either the trailing exponent is negative (emit an identity u and fold the
// exponent up by its index), or there is a rightmost position whose suffix
// sum admits a cut, giving the part's leading negative power and the tau
// power v to its left. The loop ends when what remains is already in the
// subgroup.

#include <string>
#include <vector>

#include "bn/core.hpp"
#include "bn/ogs.hpp"
#include "bn/sn.hpp"

namespace bn {

struct UvFactorization {
    std::vector<OgsExponents> u;  // u_1, ..., u_r
    std::vector<int> p;           // p_1 < ... < p_{r-1}; v_j = tau_{p_j}^{p_j}

    int parts() const { return static_cast<int>(u.size()); }
    bool operator==(const UvFactorization&) const = default;
};

// Multiply the parts back together.
inline SignedPermutation uv_product(const UvFactorization& f) {
    if (f.u.empty() || f.u.size() != f.p.size() + 1)
        throw std::invalid_argument("malformed factorization");
    const int n = f.u.front().rank();
    SignedPermutation acc = from_ogs(f.u.front());
    for (size_t j = 0; j < f.p.size(); ++j) {
        acc = compose(acc, from_ogs(OgsExponents(n, {{f.p[j], f.p[j]}})));
        acc = compose(acc, from_ogs(f.u[j + 1]));
    }
    return acc;
}

inline UvFactorization uv_factorize(const OgsExponents& e) {
    const int n = e.rank();
    std::vector<TauPower> cur = e.factors();
    std::vector<OgsExponents> us_rev;  // u_r, u_{r-1}, ..., u_2
    std::vector<int> ps_rev;           // p_{r-1}, ..., p_1

    for (;;) {
        if (is_in_sdot(OgsExponents(n, cur))) break;  // what remains is u_1
        const int m = static_cast<int>(cur.size());

        if (cur[m - 1].e < 0) {
            // Trailing negative exponent: insert v = tau_k^k at the very end
            // (with an identity u after it) and fold the exponent into [0, k).
            ps_rev.push_back(cur[m - 1].k);
            us_rev.push_back(OgsExponents(n));
            cur[m - 1].e += cur[m - 1].k;
            if (cur[m - 1].e == 0) cur.pop_back();
            continue;
        }

        // rho[x] = suffix exponent sum from position x on (0-based).
        std::vector<long> rho(static_cast<size_t>(m) + 1, 0);
        for (int j = m - 1; j >= 0; --j) rho[j] = rho[j + 1] + cur[j].e;

        // Scan cut positions right to left. A cut at x hands the factors
        // right of x to u verbatim, so it needs every suffix sum strictly
        // inside the tail to satisfy the subgroup bounds (tail_ok); that
        // condition only tightens as x moves left, so the scan stops at the
        // first admissible x, which is also the only one (the factorization
        // is unique). At x itself either the index k_x splits three ways,
        // leaving a nonnegative exponent behind (straddle; the leftover is
        // reduced mod 2k_x, so the wrapped classes rho[x] < 0 qualify too),
        // or rho[x] names a fresh index strictly between k_{x-1} and k_x.
        int cut = -1;
        bool straddle = false;
        bool tail_ok = true;
        for (int x = m - 1; x >= 0 && tail_ok; --x) {
            if (x < m - 1) tail_ok = rho[x + 1] >= 0 && rho[x + 1] <= cur[x].k;
            if (!tail_ok) break;
            const long kx = cur[x].k;
            const long kprev = x >= 1 ? cur[x - 1].k : 0;
            if (rho[x] >= kx || rho[x] < 0) {
                cut = x;
                straddle = true;
                break;
            }
            if (kprev < rho[x] && rho[x] < kx) {
                cut = x;
                straddle = false;
                break;
            }
        }
        if (cut < 0) throw std::logic_error("no admissible cut in uv peel");

        std::vector<TauPower> part;
        if (straddle) {
            // u starts at index k_cut with exponent -rho[cut+1]; v = tau_{k_cut}^{k_cut};
            // the leftover rho[cut] - k_cut stays behind at index k_cut.
            if (rho[cut + 1] != 0)
                part.push_back({cur[cut].k, static_cast<int>(-rho[cut + 1])});
            for (int j = cut + 1; j < m; ++j) part.push_back(cur[j]);
            us_rev.push_back(OgsExponents(n, part));
            ps_rev.push_back(cur[cut].k);
            const int fold =
                normalize_exponent(cur[cut].k, static_cast<int>(rho[cut]) - cur[cut].k);
            cur.resize(static_cast<size_t>(cut) + 1);
            if (fold == 0) cur.pop_back();
            else cur[cut].e = fold;
        } else {
            // u starts at the new index rho[cut] < k_cut; v = tau_{rho[cut]}^{rho[cut]}.
            const int b = static_cast<int>(rho[cut]);
            part.push_back({b, -b});
            for (int j = cut; j < m; ++j) part.push_back(cur[j]);
            us_rev.push_back(OgsExponents(n, part));
            ps_rev.push_back(b);
            cur.resize(static_cast<size_t>(cut));
        }
    }

    UvFactorization out;
    out.u.reserve(us_rev.size() + 1);
    out.u.push_back(OgsExponents(n, cur));
    for (size_t i = us_rev.size(); i-- > 0;) out.u.push_back(us_rev[i]);
    out.p.assign(ps_rev.rbegin(), ps_rev.rend());

    // Structural guarantees of the factorization; violations mean a bug here.
    const int r = out.parts();
    for (size_t j = 0; j + 1 < out.p.size(); ++j)
        if (out.p[j] >= out.p[j + 1])
            throw std::logic_error("v indices not strictly increasing");
    for (int j = 0; j < r; ++j) {
        if (!is_in_sdot(out.u[j]))
            throw std::logic_error("u part left the symmetric subgroup");
        const auto fs = out.u[j].factors();
        if (!fs.empty()) {
            if (j >= 1 && fs.front().k < out.p[j - 1])
                throw std::logic_error("u part reaches below its left v index");
            if (j + 1 < r && fs.back().k > out.p[j])
                throw std::logic_error("u part reaches above its right v index");
        }
    }
    return out;
}

}  // namespace bn
