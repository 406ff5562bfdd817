#pragma once
// The symmetric-group layer inside B_n.
//
// The elements with all-positive windows form a copy of S_n generated by
// s_1, ..., s_{n-1}. Its own canonical form uses t_m = s_1*s_2*...*s_{m-1}
// (an m-cycle of order m): every such element factors uniquely as
// t_2^{i_2} * ... * t_n^{i_n} with 0 <= i_k <= k-1.
//
// The same subgroup has a second description in tau coordinates: a canonical
// tau product lies in it iff its exponents satisfy a signed prefix condition
// (is_in_sdot below). On that subgroup the two canonical forms are linked by
// reducing each tau exponent mod k (tau_to_t / t_to_tau).
//
// Elements of the subgroup factor further into "elementary" blocks, one per
// negative tau exponent: elementary_factorize splits the exponent list at its
// negative entries and balances each block with a shared boundary power so
// every block has a single leading negative exponent and zero exponent sum.

#include <string>
#include <vector>

#include "bn/core.hpp"
#include "bn/ogs.hpp"

namespace bn {

struct TPower {
    int k = 2;  // index, >= 2
    int e = 0;  // exponent
    bool operator==(const TPower&) const = default;
};

// Reduce e modulo the order k of t_k into [0, k-1].
inline int normalize_t_exponent(int k, int e) {
    if (k < 2) throw std::invalid_argument("t index must be at least 2");
    int r = e % k;
    if (r < 0) r += k;
    return r;
}

// Image of the point j under t_k^e: cyclic shift down by e on 1..k, fixing
// points above k, extended oddly.
inline int t_apply(int k, int e, int j) {
    e = normalize_t_exponent(k, e);
    if (j == 0) throw std::invalid_argument("points are nonzero");
    const int a = j < 0 ? -j : j;
    if (a > k || e == 0) return j;
    const int image = (a - 1 - e + k) % k + 1;
    return j < 0 ? -image : image;
}

// Exponent vector (i_2, ..., i_n) of the canonical product t_2^{i_2}*...*
// t_n^{i_n}, each i_k in [0, k-1]. Same construction rules as OgsExponents.
class SnOgsExponents {
public:
    explicit SnOgsExponents(int n) : n_(check_rank(n)), e_(n_ >= 2 ? n_ - 1 : 0, 0) {}

    SnOgsExponents(int n, const std::vector<TPower>& factors) : SnOgsExponents(n) {
        int last = 0;
        for (const auto& [k, e] : factors) {
            if (k < 2 || k > n_) throw std::invalid_argument("t index out of range");
            if (k < last) throw std::invalid_argument("t factors out of order");
            last = k;
            e_[k - 2] = normalize_t_exponent(k, e_[k - 2] + e);
        }
    }

    int rank() const { return n_; }

    int exp(int k) const {
        if (k < 2 || k > n_) throw std::out_of_range("t index out of range");
        return e_[k - 2];
    }

    std::vector<TPower> factors() const {
        std::vector<TPower> fs;
        for (int k = 2; k <= n_; ++k)
            if (e_[k - 2] != 0) fs.push_back({k, e_[k - 2]});
        return fs;
    }

    bool is_identity() const {
        for (int e : e_)
            if (e != 0) return false;
        return true;
    }

    bool operator==(const SnOgsExponents&) const = default;

private:
    static int check_rank(int n) {
        if (n < 1) throw std::invalid_argument("rank must be at least 1");
        return n;
    }

    int n_;
    std::vector<int> e_;
};

inline SignedPermutation from_t_ogs(const SnOgsExponents& e) {
    const int n = e.rank();
    const auto fs = e.factors();
    std::vector<int> w(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) {
        int x = j;
        for (const auto& [k, ex] : fs) x = t_apply(k, ex, x);
        w[j - 1] = x;
    }
    return SignedPermutation(std::move(w));
}

// Canonical t exponents of an all-positive window, by the same top-down coset
// peel as to_ogs: t_k^{i}(k) = k - i picks off i_k.
inline SnOgsExponents to_t_ogs(const SignedPermutation& w) {
    if (!w.all_positive())
        throw std::domain_error("window has negative entries: not in the symmetric subgroup");
    const int n = w.rank();
    std::vector<int> cur = w.window();
    std::vector<TPower> fs;
    for (int k = n; k >= 2; --k) {
        const int ik = (k - cur[k - 1]) % k;
        if (ik != 0) fs.push_back({k, ik});
        for (int j = 0; j < k; ++j) cur[j] = t_apply(k, -ik, cur[j]);
        if (cur[k - 1] != k) throw std::logic_error("canonicalization peel failed");
    }
    std::reverse(fs.begin(), fs.end());
    return SnOgsExponents(n, fs);
}

// Closed-form exchange table for a reversed pair t_q^{i_q} * t_p^{i_p},
// 2 <= p < q, with both exponents nonzero in canonical range. Assembly rules
// mirror the tau table (normalize mod k, drop zeros, merge equal indices).
struct TExchangeFormula {
    bool applicable = false;
    std::string note;
    std::vector<TPower> raw;
    std::vector<TPower> result;
};

inline TExchangeFormula exchange_t_formula(int q, int i_q, int p, int i_p) {
    if (!(2 <= p && p < q)) throw std::invalid_argument("need 2 <= p < q");
    i_q = normalize_t_exponent(q, i_q);
    i_p = normalize_t_exponent(p, i_p);

    TExchangeFormula out;
    if (i_p == 0) {
        out = {true, "trivial: right exponent zero", {{q, i_q}}, {}};
    } else if (i_q == 0) {
        out = {true, "trivial: left exponent zero", {{p, i_p}}, {}};
    } else if (q - i_q >= p) {
        out = {true, "a", {{i_q + i_p, i_q}, {p + i_q, i_p}, {q, i_q}}, {}};
    } else if (i_p <= q - i_q) {
        out = {true, "b", {{i_q, p + i_q - q}, {i_q + i_p, q - p}, {q, i_q + i_p}}, {}};
    } else {
        out = {true, "c", {{p + i_q - q, i_q + i_p - q}, {i_q, p - i_p}, {q, i_q + i_p - p}}, {}};
    }

    int last = 0;
    for (const auto& [k, e] : out.raw) {
        if (k < 0 || k > q) {
            out.applicable = false;
            out.note += " (factor index out of range)";
            out.result.clear();
            return out;
        }
        if (k <= 1) continue;  // t_0, t_1 are the identity
        const int en = normalize_t_exponent(k, e);
        if (en == 0) continue;
        if (k < last) {
            out.applicable = false;
            out.note += " (factors out of order)";
            out.result.clear();
            return out;
        }
        if (!out.result.empty() && out.result.back().k == k) {
            const int merged = normalize_t_exponent(k, out.result.back().e + en);
            if (merged == 0) out.result.pop_back();
            else out.result.back().e = merged;
        } else {
            out.result.push_back({k, en});
        }
        last = k;
    }
    return out;
}

// Canonical t exponents of t_q^{i_q} * t_p^{i_p}, p < q. Semantic path
// authoritative, with the case table compared alongside as for exchange_tau.
inline SnOgsExponents exchange_t(int q, int i_q, int p, int i_p) {
    if (!(2 <= p && p < q)) throw std::invalid_argument("need 2 <= p < q");
    const SnOgsExponents semantic = to_t_ogs(
        compose(from_t_ogs(SnOgsExponents(q, {{q, i_q}})), from_t_ogs(SnOgsExponents(q, {{p, i_p}}))));
    const TExchangeFormula formula = exchange_t_formula(q, i_q, p, i_p);
    if (formula.applicable && SnOgsExponents(q, formula.result) == semantic)
        return SnOgsExponents(q, formula.result);
    return semantic;
}

// Membership test for the symmetric subgroup in tau coordinates: with
// nonzero factors (k_1, i_{k_1}), ..., (k_m, i_{k_m}), the element has an
// all-positive window iff the exponents sum to zero and every proper suffix
// sum lies in [0, k_{r-1}].
inline bool is_in_sdot(const OgsExponents& e) {
    const auto fs = e.factors();
    const int m = static_cast<int>(fs.size());
    long total = 0;
    for (const auto& f : fs) total += f.e;
    if (total != 0) return false;
    long suffix = 0;
    for (int r = m; r >= 2; --r) {  // suffix sum over j >= r, bound k_{r-1}
        suffix += fs[r - 1].e;
        if (suffix < 0 || suffix > fs[r - 2].k) return false;
    }
    return true;
}

// On the symmetric subgroup the two canonical forms agree exponent by
// exponent, mod k: reduce each tau exponent into [0, k-1].
inline SnOgsExponents tau_to_t(const OgsExponents& e) {
    if (!is_in_sdot(e)) throw std::domain_error("element is not in the symmetric subgroup");
    std::vector<TPower> fs;
    for (const auto& [k, ex] : e.factors()) {
        if (k == 1) continue;  // tau_1 exponents vanish mod 1
        const int en = normalize_t_exponent(k, ex);
        if (en != 0) fs.push_back({k, en});
    }
    SnOgsExponents out(e.rank(), fs);
    if (from_t_ogs(out) != from_ogs(e)) throw std::logic_error("t form does not match tau form");
    return out;
}

inline OgsExponents t_to_tau(const SnOgsExponents& e) {
    const OgsExponents out = to_ogs(from_t_ogs(e));
    if (!is_in_sdot(out)) throw std::logic_error("tau form left the symmetric subgroup");
    return out;
}

// A canonical tau product is elementary when its nonzero exponents are a
// single negative one followed by positive ones summing back to zero.
// The identity counts as elementary.
inline bool is_elementary(const OgsExponents& e) {
    const auto fs = e.factors();
    if (fs.empty()) return true;
    if (fs.front().e >= 0) return false;
    long total = fs.front().e;
    for (size_t j = 1; j < fs.size(); ++j) {
        if (fs[j].e <= 0) return false;
        total += fs[j].e;
    }
    return total == 0;
}

// Factorization of a symmetric-subgroup element into elementary blocks, one
// per negative exponent, consecutive blocks sharing a boundary index.
struct ElementaryFactorization {
    std::vector<OgsExponents> factors;  // z blocks, or one identity block when z = 0
    std::vector<int> boundaries;        // shared tau index between block j and j+1
    int z = 0;                          // number of negative exponents in the input

    bool operator==(const ElementaryFactorization&) const = default;
};

inline ElementaryFactorization elementary_factorize(const OgsExponents& e) {
    if (!is_in_sdot(e)) throw std::domain_error("element is not in the symmetric subgroup");
    const int n = e.rank();
    const auto fs = e.factors();
    const int m = static_cast<int>(fs.size());

    ElementaryFactorization out;
    if (m == 0) {
        out.factors.push_back(OgsExponents(n));
        return out;
    }

    std::vector<int> neg;  // positions (0-based into fs) of negative exponents
    for (int j = 0; j < m; ++j)
        if (fs[j].e < 0) neg.push_back(j);
    out.z = static_cast<int>(neg.size());

    std::vector<long> suffix(static_cast<size_t>(m) + 1, 0);  // suffix[j] = sum of exponents from j on
    for (int j = m - 1; j >= 0; --j) suffix[j] = suffix[j + 1] + fs[j].e;

    for (int a = 0; a < out.z; ++a) {
        const int lead = neg[a];
        const bool is_last = a + 1 == out.z;
        const int stop = is_last ? m : neg[a + 1];
        std::vector<TauPower> block;
        block.push_back({fs[lead].k, static_cast<int>(-suffix[lead + 1])});
        for (int j = lead + 1; j < stop; ++j) block.push_back(fs[j]);
        if (!is_last) {
            out.boundaries.push_back(fs[stop].k);
            if (suffix[stop] != 0) block.push_back({fs[stop].k, static_cast<int>(suffix[stop])});
        }
        out.factors.push_back(OgsExponents(n, block));
        if (!is_elementary(out.factors.back()))
            throw std::logic_error("elementary split produced a non-elementary block");
    }
    return out;
}

}  // namespace bn
