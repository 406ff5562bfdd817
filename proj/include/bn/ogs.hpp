#pragma once
// Canonical form for B_n over the generators tau_k = s_0*s_1*...*s_{k-1}.
//
// tau_k has order 2k and acts on the window as tau_k(1) = -k, tau_k(j) = j-1
// for 2 <= j <= k, fixing points above k. Every element of B_n factors
// uniquely as tau_1^{i_1} * tau_2^{i_2} * ... * tau_n^{i_n} with exponents in
// the symmetric range -k <= i_k <= k-1; OgsExponents stores that vector.
//
// exchange_tau rewrites a reversed pair tau_q^{r_q} * tau_p^{r_p} (p < q) back
// into canonical order. It is computed two ways: semantically, by composing
// the two powers and recanonicalizing (always authoritative), and by a closed
// case table whose output is compared against the semantic result by the
// verification drivers. See FORMULA_NOTES.md for the table's domain and the
// conventions used to assemble its output.

#include <algorithm>
#include <string>
#include <vector>

#include "bn/core.hpp"

namespace bn {

struct TauPower {
    int k = 1;  // index, >= 1
    int e = 0;  // exponent
    bool operator==(const TauPower&) const = default;
};

// Reduce e modulo the order 2k of tau_k into the canonical range [-k, k-1].
inline int normalize_exponent(int k, int e) {
    if (k < 1) throw std::invalid_argument("tau index must be positive");
    const int m = 2 * k;
    int r = e % m;
    if (r < 0) r += m;
    return r >= k ? r - m : r;
}

// Image of the point j under tau_k^e. Acts on {..,-1,1,..}: fixes |j| > k,
// and on 1..k is the closed form of the e-th power (negate-and-shift cycle).
inline int tau_apply(int k, int e, int j) {
    e = normalize_exponent(k, e);
    if (j == 0) throw std::invalid_argument("points are nonzero");
    const int a = j < 0 ? -j : j;
    if (a > k || e == 0) return j;
    int image;
    if (e == -k) image = -a;
    else if (e > 0) image = a <= e ? -(a - e + k) : a - e;
    else image = a <= e + k ? a - e : -(a - e - k);
    return j < 0 ? -image : image;
}

// Exponent vector (i_1, ..., i_n) of the canonical product tau_1^{i_1}*...*
// tau_n^{i_n}, each i_k kept in [-k, k-1]. Construct from a factor list;
// repeated indices multiply (exponents add mod 2k). The list is read as a
// product in increasing index order, so it must not need reordering: pass
// factors with nondecreasing indices.
class OgsExponents {
public:
    explicit OgsExponents(int n) : e_(check_rank(n), 0) {}

    OgsExponents(int n, const std::vector<TauPower>& factors) : e_(check_rank(n), 0) {
        int last = 0;
        for (const auto& [k, e] : factors) {
            if (k < 1 || k > n) throw std::invalid_argument("tau index out of range");
            if (k < last) throw std::invalid_argument("tau factors out of order");
            last = k;
            e_[k - 1] = normalize_exponent(k, e_[k - 1] + e);
        }
    }

    int rank() const { return static_cast<int>(e_.size()); }

    int exp(int k) const {
        if (k < 1 || k > rank()) throw std::out_of_range("tau index out of range");
        return e_[k - 1];
    }

    // Nonzero factors in increasing index order.
    std::vector<TauPower> factors() const {
        std::vector<TauPower> fs;
        for (int k = 1; k <= rank(); ++k)
            if (e_[k - 1] != 0) fs.push_back({k, e_[k - 1]});
        return fs;
    }

    bool is_identity() const {
        for (int e : e_)
            if (e != 0) return false;
        return true;
    }

    bool operator==(const OgsExponents&) const = default;

private:
    static size_t check_rank(int n) {
        if (n < 1) throw std::invalid_argument("rank must be at least 1");
        return static_cast<size_t>(n);
    }

    std::vector<int> e_;
};

// The signed permutation tau_1^{i_1} * ... * tau_n^{i_n}.
inline SignedPermutation from_ogs(const OgsExponents& e) {
    const int n = e.rank();
    const auto fs = e.factors();
    std::vector<int> w(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) {
        int x = j;
        for (const auto& [k, ex] : fs) x = tau_apply(k, ex, x);
        w[j - 1] = x;
    }
    return SignedPermutation(std::move(w));
}

// Canonical exponents of w, by peeling cosets top-down: the exponent i_k is
// determined by where the partial product sends k, then tau_k^{-i_k} strips
// that factor off the right.
inline OgsExponents to_ogs(const SignedPermutation& w) {
    const int n = w.rank();
    std::vector<int> cur = w.window();
    std::vector<TauPower> fs;
    for (int k = n; k >= 1; --k) {
        const int c = cur[k - 1];
        const int ik = c > 0 ? k - c : c;
        if (ik != 0) fs.push_back({k, ik});
        const int back = normalize_exponent(k, -ik);
        for (int j = 0; j < k; ++j) cur[j] = tau_apply(k, back, cur[j]);
        if (cur[k - 1] != k) throw std::logic_error("canonicalization peel failed");
    }
    std::reverse(fs.begin(), fs.end());
    return OgsExponents(n, fs);
}

// Output of the closed-form exchange table. `raw` lists the factors exactly
// as the selected case prints them; `result` is their assembly into canonical
// exponents (normalize mod 2k, drop zero indices/exponents, merge equal
// adjacent indices). When the printed factors cannot form a valid canonical
// product (index out of range or indices out of order), applicable is false
// and `note` says why; the semantic path is authoritative there.
struct ExchangeFormula {
    bool applicable = false;
    std::string note;
    std::vector<TauPower> raw;
    std::vector<TauPower> result;
};

inline ExchangeFormula exchange_tau_formula(int q, int r_q, int p, int r_p) {
    if (!(1 <= p && p < q)) throw std::invalid_argument("need 1 <= p < q");
    r_q = normalize_exponent(q, r_q);
    r_p = normalize_exponent(p, r_p);

    ExchangeFormula out;
    if (r_p == 0) {
        out = {true, "trivial: right exponent zero", {{q, r_q}}, {}};
    } else if (r_q == 0) {
        out = {true, "trivial: left exponent zero", {{p, r_p}}, {}};
    } else if (r_q < 0) {
        out.note = "table covers 0 < r_q < q only";
        return out;
    } else if (0 < r_p) {
        if (q - r_q >= p)
            out = {true, "pos/a", {{r_q, -r_q}, {r_q + r_p, r_q}, {p + r_q, r_p}, {q, r_q}}, {}};
        else if (r_p <= q - r_q)
            out = {true, "pos/b", {{r_q, p - q}, {r_q + r_p, q - p}, {q, r_q + r_p}}, {}};
        else
            out = {true, "pos/c",
                   {{p + r_q - q, r_q + r_p - q}, {r_q, p - r_p - r_q}, {q, r_q + r_p - p - q}},
                   {}};
    } else if (r_p == -p) {
        if (q - r_q >= p)
            out = {true, "full/a", {{r_q, -r_q}, {p + r_q, -p - r_q}, {q, r_q}}, {}};
        else
            out = {true, "full/b", {{p + r_q - q, -p - r_q + q}, {r_q, -r_q}, {q, r_q - q}}, {}};
    } else {
        if (q - r_q >= p)
            out = {true, "neg/a", {{r_q + r_p + p, r_q}, {p + r_q, r_p - r_q}, {q, r_q}}, {}};
        else if (r_p + p <= q - r_q)
            out = {true, "neg/b",
                   {{p + r_q - q, -p - r_q + q},
                    {r_q, p + r_q - q},
                    {r_q + r_p + p, q - p},
                    {q, p + r_p - q + r_q}},
                   {}};
        else
            out = {true, "neg/c", {{p + r_q - q, r_p}, {r_q, -r_p}, {q, r_q + r_p}}, {}};
    }

    // Assemble: normalize, drop zero indices (their exponent must be 0 mod 1
    // trivially) and zero exponents, insist on nondecreasing order, merge.
    int last = 0;
    for (const auto& [k, e] : out.raw) {
        if (k < 0 || k > q) {
            out.applicable = false;
            out.note += " (factor index out of range)";
            out.result.clear();
            return out;
        }
        if (k == 0) continue;
        const int en = normalize_exponent(k, e);
        if (en == 0) continue;
        if (k < last) {
            out.applicable = false;
            out.note += " (factors out of order)";
            out.result.clear();
            return out;
        }
        if (!out.result.empty() && out.result.back().k == k) {
            const int merged = normalize_exponent(k, out.result.back().e + en);
            if (merged == 0) out.result.pop_back();
            else out.result.back().e = merged;
        } else {
            out.result.push_back({k, en});
        }
        last = k;
    }
    return out;
}

// Canonical exponents of tau_q^{r_q} * tau_p^{r_p} for p < q. Computed
// semantically; the case table runs alongside and is returned into canonical
// position only when it agrees (the verification drivers report any case
// where it does not).
inline OgsExponents exchange_tau(int q, int r_q, int p, int r_p) {
    if (!(1 <= p && p < q)) throw std::invalid_argument("need 1 <= p < q");
    const OgsExponents semantic =
        to_ogs(compose(from_ogs(OgsExponents(q, {{q, r_q}})), from_ogs(OgsExponents(q, {{p, r_p}}))));
    const ExchangeFormula formula = exchange_tau_formula(q, r_q, p, r_p);
    if (formula.applicable && OgsExponents(q, formula.result) == semantic)
        return OgsExponents(q, formula.result);
    return semantic;
}

}  // namespace bn
