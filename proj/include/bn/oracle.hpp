#pragma once
// Brute-force verification layer: breadth-first search over the Cayley graph
// of B_n, plus drivers that replay each closed-form law in the library
// against ground truth computed from group arithmetic alone. Disagreements
// come back as data in a VerifyReport rather than as assertions, so callers
// can print or serialize them.
//
// The graph is grown by left multiplication, so the letters collected while
// walking parent links from an element back to the identity already read as
// a left-to-right reduced word for it.

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "bn/core.hpp"
#include "bn/factor.hpp"
#include "bn/io.hpp"
#include "bn/metrics.hpp"
#include "bn/ogs.hpp"
#include "bn/sn.hpp"

namespace bn {

class CayleyTable {
public:
    explicit CayleyTable(int n) : n_(n) {
        if (n < 1 || n > 7)
            throw std::invalid_argument("breadth-first search is sized for ranks 1 through 7");
        push(SignedPermutation::identity(n).window(), -1, -1);
        for (size_t head = 0; head < windows_.size(); ++head) {
            const SignedPermutation cur(windows_[head]);
            for (int i = 0; i < n; ++i) {
                auto w = compose(SignedPermutation::generator(n, i), cur).window();
                if (ids_.find(w) == ids_.end()) push(std::move(w), static_cast<int>(head), i);
            }
        }
    }

    int rank() const { return n_; }
    long size() const { return static_cast<long>(windows_.size()); }

    int id_of(const SignedPermutation& w) const {
        const auto it = ids_.find(w.window());
        if (it == ids_.end()) throw std::invalid_argument("element has a different rank");
        return it->second;
    }

    long distance(const SignedPermutation& w) const {
        return dist_[static_cast<size_t>(id_of(w))];
    }

    // Distances are pushed in nondecreasing order, so the last one is the
    // length of the longest element.
    long max_distance() const { return dist_.back(); }

    // A reduced word for the element, assembled from the search tree.
    CoxeterWord witness(const SignedPermutation& w) const {
        std::vector<int> letters;
        for (int v = id_of(w); parent_[static_cast<size_t>(v)] >= 0;
             v = parent_[static_cast<size_t>(v)])
            letters.push_back(letter_[static_cast<size_t>(v)]);
        return CoxeterWord(n_, std::move(letters));
    }

    SignedPermutation element_at(int id) const {
        return SignedPermutation(windows_[static_cast<size_t>(id)]);
    }

private:
    void push(std::vector<int> w, int parent, int letter) {
        ids_.emplace(w, static_cast<int>(windows_.size()));
        dist_.push_back(parent < 0 ? 0 : dist_[static_cast<size_t>(parent)] + 1);
        parent_.push_back(parent);
        letter_.push_back(letter);
        windows_.push_back(std::move(w));
    }

    int n_;
    std::vector<std::vector<int>> windows_;
    std::map<std::vector<int>, int> ids_;
    std::vector<long> dist_;
    std::vector<int> parent_;
    std::vector<int> letter_;
};

struct VerifyFailure {
    std::string input;
    std::string expected;
    std::string actual;
};

struct VerifyReport {
    std::string check;
    int n = 0;
    long cases = 0;
    std::vector<VerifyFailure> failures;

    bool pass() const { return failures.empty(); }

    std::string to_text() const {
        std::ostringstream os;
        os << check << " n=" << n << ": " << (pass() ? "ok" : "FAIL") << " (" << cases
           << " cases";
        if (!pass()) os << ", " << failures.size() << " failures";
        os << ")";
        for (const auto& f : failures)
            os << "\n  " << f.input << ": expected " << f.expected << ", got " << f.actual;
        return os.str();
    }
};

namespace detail {

// Calls fn with every canonical exponent vector of rank n.
template <typename Fn>
void every_ogs(int n, Fn&& fn) {
    std::vector<int> e(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) e[k - 1] = -k;
    while (true) {
        std::vector<TauPower> fs;
        for (int k = 1; k <= n; ++k)
            if (e[k - 1] != 0) fs.push_back({k, e[k - 1]});
        fn(OgsExponents(n, fs));
        int k = 1;
        while (k <= n) {
            if (++e[k - 1] <= k - 1) break;
            e[k - 1] = -k;
            ++k;
        }
        if (k > n) return;
    }
}

inline std::string describe_taus(const std::vector<TauPower>& fs) {
    return format_ogs(OgsExponents(fs.empty() ? 1 : fs.back().k, fs));
}

}  // namespace detail

// Every exponent vector maps to a distinct window and canonicalizing the
// window recovers the exponents.
inline VerifyReport verify_bijection(int n) {
    VerifyReport rep{"bijection", n, 0, {}};
    std::map<std::vector<int>, std::string> seen;
    detail::every_ogs(n, [&](const OgsExponents& e) {
        ++rep.cases;
        const SignedPermutation w = from_ogs(e);
        const auto [it, fresh] = seen.emplace(w.window(), format_ogs(e));
        if (!fresh)
            rep.failures.push_back({format_ogs(e), "a fresh window", format_window(w) + " already reached by " + it->second});
        const OgsExponents back = to_ogs(w);
        if (!(back == e))
            rep.failures.push_back({format_ogs(e), "its own exponents back", format_ogs(back)});
    });
    return rep;
}

// The reversed product tau_q^{r_q} * tau_p^{r_p} (p < q) canonicalizes to
// what the exchange case table says, wherever the table applies; the only
// tuples it declines are those with negative r_q.
inline VerifyReport verify_exchange_tau(int n) {
    VerifyReport rep{"exchange-tau", n, 0, {}};
    for (int q = 2; q <= n; ++q) {
        for (int p = 1; p < q; ++p) {
            for (int r_q = -q; r_q < q; ++r_q) {
                for (int r_p = -p; r_p < p; ++r_p) {
                    ++rep.cases;
                    const std::string input = "q=" + std::to_string(q) + " r_q=" + std::to_string(r_q) +
                                              " p=" + std::to_string(p) + " r_p=" + std::to_string(r_p);
                    const OgsExponents semantic = to_ogs(compose(
                        from_ogs(OgsExponents(q, {{q, r_q}})), from_ogs(OgsExponents(q, {{p, r_p}}))));
                    const ExchangeFormula f = exchange_tau_formula(q, r_q, p, r_p);
                    if (f.applicable) {
                        if (!(OgsExponents(q, f.result) == semantic))
                            rep.failures.push_back(
                                {input, format_ogs(semantic), detail::describe_taus(f.result)});
                    } else if (!(r_q < 0 && r_p != 0)) {
                        rep.failures.push_back({input, "a case table entry", "declined: " + f.note});
                    }
                }
            }
        }
    }
    return rep;
}

// Same comparison for the t powers of the symmetric subgroup, over the
// canonical exponent ranges; that table has no excluded tuples.
inline VerifyReport verify_exchange_t(int n) {
    VerifyReport rep{"exchange-t", n, 0, {}};
    for (int q = 3; q <= n; ++q) {
        for (int p = 2; p < q; ++p) {
            for (int i_q = 0; i_q < q; ++i_q) {
                for (int i_p = 0; i_p < p; ++i_p) {
                    ++rep.cases;
                    const std::string input = "q=" + std::to_string(q) + " i_q=" + std::to_string(i_q) +
                                              " p=" + std::to_string(p) + " i_p=" + std::to_string(i_p);
                    const SnOgsExponents semantic = to_t_ogs(compose(
                        from_t_ogs(SnOgsExponents(q, {{q, i_q}})),
                        from_t_ogs(SnOgsExponents(q, {{p, i_p}}))));
                    const TExchangeFormula f = exchange_t_formula(q, i_q, p, i_p);
                    if (!f.applicable) {
                        rep.failures.push_back({input, "a case table entry", "declined: " + f.note});
                    } else if (!(SnOgsExponents(q, f.result) == semantic)) {
                        rep.failures.push_back(
                            {input, format_t_ogs(semantic),
                             format_t_ogs(SnOgsExponents(q, f.result))});
                    }
                }
            }
        }
    }
    return rep;
}

// The alternating-sum length, the normal form, and the greedy reduction all
// agree with graph distance; on the symmetric subgroup the weighted exponent
// sum does too.
inline VerifyReport verify_lengths(int n) {
    VerifyReport rep{"lengths", n, 0, {}};
    const CayleyTable table(n);
    detail::every_ogs(n, [&](const OgsExponents& e) {
        ++rep.cases;
        const SignedPermutation w = from_ogs(e);
        const long truth = table.distance(w);
        const std::string input = format_ogs(e);
        if (length(e) != truth)
            rep.failures.push_back({input, std::to_string(truth), std::to_string(length(e))});
        const NormalForm nf = normal_form(w);
        if (nf.length() != truth)
            rep.failures.push_back(
                {input + " normal form", std::to_string(truth), std::to_string(nf.length())});
        if (!(eval_word(nf.word) == w))
            rep.failures.push_back({input + " normal form word", format_window(w),
                                    format_window(eval_word(nf.word))});
        const CoxeterWord greedy = greedy_reduce(w);
        if (static_cast<long>(greedy.letters.size()) != truth)
            rep.failures.push_back({input + " greedy word", std::to_string(truth),
                                    std::to_string(greedy.letters.size())});
        if (is_in_sdot(e) && length_sdot(e) != truth)
            rep.failures.push_back(
                {input + " subgroup length", std::to_string(truth), std::to_string(length_sdot(e))});
    });
    return rep;
}

// The window descent rule matches the length-drop definition, and the three
// closed-form descent laws match the window rule on their whole hypothesis
// ranges.
inline VerifyReport verify_descents(int n) {
    VerifyReport rep{"descents", n, 0, {}};
    const CayleyTable table(n);
    detail::every_ogs(n, [&](const OgsExponents& e) {
        ++rep.cases;
        const SignedPermutation w = from_ogs(e);
        const long len = table.distance(w);
        const DescentSet d = descents(w);
        for (int i = 0; i < n; ++i) {
            const bool drop = table.distance(compose(SignedPermutation::generator(n, i), w)) < len;
            if (d.contains(i) != drop) {
                rep.failures.push_back({format_ogs(e) + " at s" + std::to_string(i),
                                        drop ? "a descent" : "no descent",
                                        d.contains(i) ? "a descent" : "no descent"});
                break;
            }
        }
        if (is_in_sdot(e)) {
            ++rep.cases;
            if (!descent_laws_check(DescentLaw::sdot, e).match)
                rep.failures.push_back({format_ogs(e), "subgroup descent law to hold", "mismatch"});
            const auto fs = e.factors();
            for (int b = 1; b <= n; ++b) {
                if (fs.empty() || fs.front().k >= b) {
                    ++rep.cases;
                    if (!descent_laws_check(DescentLaw::v_then_u, e, b).match)
                        rep.failures.push_back({"tau" + std::to_string(b) + "^-" + std::to_string(b) +
                                                    "*" + format_ogs(e),
                                                "descent law to hold", "mismatch"});
                }
                if (fs.empty() || fs.back().k <= b) {
                    ++rep.cases;
                    if (!descent_laws_check(DescentLaw::u_then_v, e, b).match)
                        rep.failures.push_back({format_ogs(e) + "*tau" + std::to_string(b) + "^" +
                                                    std::to_string(b),
                                                "descent law to hold", "mismatch"});
                }
            }
        }
    });
    return rep;
}

// Elementary factorization reconstructs every subgroup element from blocks
// that are elementary and inside the subgroup; the uv factorization
// reconstructs every group element under its structural conditions.
inline VerifyReport verify_factorizations(int n) {
    VerifyReport rep{"factorizations", n, 0, {}};
    detail::every_ogs(n, [&](const OgsExponents& e) {
        ++rep.cases;
        const SignedPermutation w = from_ogs(e);
        const std::string input = format_ogs(e);
        if (is_in_sdot(e)) {
            const ElementaryFactorization ef = elementary_factorize(e);
            SignedPermutation acc = SignedPermutation::identity(n);
            for (const auto& block : ef.factors) {
                if (!is_elementary(block))
                    rep.failures.push_back({input, "elementary blocks", format_ogs(block)});
                acc = compose(acc, from_ogs(block));
            }
            if (!(acc == w))
                rep.failures.push_back({input, format_window(w), format_window(acc)});
            int negatives = 0;
            for (const auto& [k, ex] : e.factors())
                if (ex < 0) ++negatives;
            if (ef.z != negatives)
                rep.failures.push_back({input, std::to_string(negatives) + " descents",
                                        std::to_string(ef.z)});
            const size_t blocks = e.is_identity() ? 1 : static_cast<size_t>(ef.z);
            if (ef.factors.size() != blocks)
                rep.failures.push_back({input, std::to_string(blocks) + " blocks",
                                        std::to_string(ef.factors.size())});
        }
        const UvFactorization f = uv_factorize(e);
        if (!(uv_product(f) == w))
            rep.failures.push_back({input, format_window(w), format_window(uv_product(f))});
        for (size_t j = 0; j + 1 < f.p.size(); ++j)
            if (f.p[j] >= f.p[j + 1])
                rep.failures.push_back({input, "strictly increasing part indices", "p[" +
                                            std::to_string(j) + "]=" + std::to_string(f.p[j])});
        for (size_t j = 0; j < f.u.size(); ++j) {
            if (!is_in_sdot(f.u[j])) {
                rep.failures.push_back({input, "subgroup parts", format_ogs(f.u[j])});
                continue;
            }
            const auto fs = f.u[j].factors();
            if (fs.empty()) continue;
            if (j > 0 && fs.front().k < f.p[j - 1])
                rep.failures.push_back({input, "part indices above the previous v", format_ogs(f.u[j])});
            if (j < f.p.size() && fs.back().k > f.p[j])
                rep.failures.push_back({input, "part indices below the next v", format_ogs(f.u[j])});
        }
    });
    return rep;
}

}  // namespace bn
