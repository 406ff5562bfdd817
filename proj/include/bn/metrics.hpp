#pragma once
// Coxeter length, descent sets, and normal forms for B_n.
//
// All three length routes implemented here agree (and are checked against
// breadth-first search over the Cayley graph by the oracle module):
//   - length(): alternating sum over the uv factorization, using the closed
//     forms ell(u) = sum k * i_k on the symmetric subgroup and
//     ell(tau_p^p) = p^2;
//   - normal_form(): the unique reduced expression prod_i prod_j s_{|i-j|}
//     with 0 <= y_i <= 2i+1 letters in block i, whose total length is sum y_i;
//   - greedy_reduce(): repeatedly strip the smallest left descent.
//
// descents(pi) = { 0 <= i <= n-1 : pi(i) > pi(i+1) }, reading pi(0) = 0, and
// equals { i : ell(s_i * pi) < ell(pi) }.

#include <string>
#include <vector>

#include "bn/core.hpp"
#include "bn/factor.hpp"
#include "bn/ogs.hpp"
#include "bn/sn.hpp"

namespace bn {

struct DescentSet {
    std::vector<int> indices;  // sorted ascending

    bool contains(int i) const {
        for (int v : indices)
            if (v == i) return true;
        return false;
    }
    bool operator==(const DescentSet&) const = default;
};

inline DescentSet descents(const SignedPermutation& w) {
    DescentSet d;
    if (w(1) < 0) d.indices.push_back(0);
    for (int i = 1; i < w.rank(); ++i)
        if (w(i) > w(i + 1)) d.indices.push_back(i);
    return d;
}

// Length of a symmetric-subgroup element, directly from its tau exponents.
inline long length_sdot(const OgsExponents& e) {
    if (!is_in_sdot(e)) throw std::domain_error("element is not in the symmetric subgroup");
    long total = 0;
    for (const auto& [k, ex] : e.factors()) total += static_cast<long>(k) * ex;
    return total;
}

// Length of an arbitrary element: alternating sum over its uv factorization,
// ell = sum_j (-1)^{r-j} ell(u_j) + sum_j (-1)^{r-1-j} p_j^2.
inline long length(const OgsExponents& e) {
    const UvFactorization f = uv_factorize(e);
    const int r = f.parts();
    long total = 0;
    for (int j = 1; j <= r; ++j) {
        const long lu = length_sdot(f.u[j - 1]);
        total += (r - j) % 2 == 0 ? lu : -lu;
    }
    for (int j = 1; j < r; ++j) {
        const long lv = static_cast<long>(f.p[j - 1]) * f.p[j - 1];
        total += (r - 1 - j) % 2 == 0 ? lv : -lv;
    }
    return total;
}

inline long length(const SignedPermutation& w) { return length(to_ogs(w)); }

// The normal form pi = prod_{i=0}^{n-1} prod_{j=0}^{y_i - 1} s_{|i-j|} with
// 0 <= y_i <= 2i+1; its word is reduced, so sum y_i is the length.
struct NormalForm {
    std::vector<int> y;  // y[i] = number of letters in block i
    CoxeterWord word;    // the blocks concatenated, i ascending

    long length() const {
        long total = 0;
        for (int v : y) total += v;
        return total;
    }
    bool operator==(const NormalForm&) const = default;
};

inline NormalForm normal_form(const SignedPermutation& w) {
    const int n = w.rank();
    NormalForm out;
    out.y.assign(static_cast<size_t>(n), 0);
    std::vector<std::vector<int>> blocks(static_cast<size_t>(n));

    SignedPermutation rest = w;
    for (int i = n - 1; i >= 0; --i) {
        // Block i's candidate prefixes u_y = s_i s_{i-1} ... send i+1 to
        // i+1-y (y <= i) and then to -(y-i); all 2i+2 images are distinct,
        // so exactly one y matches rest(i+1).
        const int target = rest(i + 1);
        int image = i + 1;
        int y = 0;
        std::vector<int> letters;
        while (image != target) {
            const int letter = i - y >= 0 ? i - y : y - i;
            letters.push_back(letter);
            image = generator_apply(letter, image);
            if (++y > 2 * i + 1) throw std::logic_error("no block prefix reaches the target");
        }
        out.y[i] = y;
        blocks[i] = letters;
        rest = compose(rest, inverse(eval_word(CoxeterWord(n, letters))));
        if (rest(i + 1) != i + 1) throw std::logic_error("block peel did not fix its point");
    }
    if (!rest.is_identity()) throw std::logic_error("block peel left a remainder");

    std::vector<int> all;
    for (const auto& b : blocks) all.insert(all.end(), b.begin(), b.end());
    out.word = CoxeterWord(n, std::move(all));
    return out;
}

// Reduced word by the greedy descent strategy: repeatedly left-multiply by
// s_i for the smallest left descent i. The recorded letters, read left to
// right, multiply back to w.
inline CoxeterWord greedy_reduce(const SignedPermutation& w) {
    const int n = w.rank();
    SignedPermutation cur = w;
    std::vector<int> letters;
    const long guard = 2L * n * n + 1;
    while (!cur.is_identity()) {
        if (static_cast<long>(letters.size()) > guard)
            throw std::logic_error("greedy reduction exceeded the length bound");
        const DescentSet d = descents(cur);
        if (d.indices.empty()) throw std::logic_error("non-identity element with no descent");
        const int i = d.indices.front();
        cur = compose(SignedPermutation::generator(n, i), cur);
        letters.push_back(i);
    }
    return CoxeterWord(n, std::move(letters));
}

// Closed-form descent laws. Each check builds the product from its
// hypotheses, predicts the descent set from the closed form, and reports it
// next to the actual descent set of the product.
enum class DescentLaw {
    sdot,      // pi in the symmetric subgroup: descents are the indices with negative exponent
    v_then_u,  // pi = tau_b^{-b} * u with u in the subgroup, indices >= b
    u_then_v,  // pi = u * tau_b^b with u in the subgroup, indices <= b
};

struct DescentLawReport {
    DescentSet predicted;
    DescentSet actual;
    bool match = false;
};

inline DescentLawReport descent_laws_check(DescentLaw law, const OgsExponents& u, int b = 0) {
    if (!is_in_sdot(u)) throw std::invalid_argument("u must lie in the symmetric subgroup");
    const int n = u.rank();
    const auto fs = u.factors();
    const DescentSet du = descents(from_ogs(u));

    DescentLawReport rep;
    switch (law) {
        case DescentLaw::sdot: {
            for (const auto& [k, ex] : fs)
                if (ex < 0) rep.predicted.indices.push_back(k);
            rep.actual = descents(from_ogs(u));
            break;
        }
        case DescentLaw::v_then_u: {
            if (b < 1 || b > n) throw std::invalid_argument("v index out of range");
            if (!fs.empty() && fs.front().k < b)
                throw std::invalid_argument("u has an index below the v index");
            for (int j = 0; j < b; ++j)
                if (!du.contains(j)) rep.predicted.indices.push_back(j);
            for (int j = b + 1; j < n; ++j)
                if (du.contains(j)) rep.predicted.indices.push_back(j);
            rep.actual = descents(
                compose(from_ogs(OgsExponents(n, {{b, -b}})), from_ogs(u)));
            break;
        }
        case DescentLaw::u_then_v: {
            if (b < 1 || b > n) throw std::invalid_argument("v index out of range");
            const int top = fs.empty() ? 0 : fs.back().k;
            if (top > b) throw std::invalid_argument("u has an index above the v index");
            for (int j = 0; j < top; ++j)
                if (!du.contains(j)) rep.predicted.indices.push_back(j);
            for (int j = top; j < b; ++j) rep.predicted.indices.push_back(j);
            rep.actual = descents(
                compose(from_ogs(u), from_ogs(OgsExponents(n, {{b, b}}))));
            break;
        }
    }
    rep.match = rep.predicted == rep.actual;
    return rep;
}

}  // namespace bn
