#pragma once
// Core value types for the hyperoctahedral group B_n: signed permutations in
// window notation, and words over the Coxeter generators s_0, s_1, ..., s_{n-1}.
//
// Multiplication convention, fixed once for the whole library: products read
// left to right, so a*b means "apply a first, then b":
//
//     compose(a, b)(j) = b(a(j))
//
// Generators act on points of {-n,...,-1,1,...,n}: s_0 negates 1, and s_i for
// i >= 1 swaps i with i+1 (and -i with -(i+1)).

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bn {

// A signed permutation pi of {-n..-1, 1..n} with pi(-j) = -pi(j).
// Stores only the window [pi(1), ..., pi(n)]: nonzero integers whose absolute
// values are a permutation of 1..n. Immutable after construction.
class SignedPermutation {
public:
    explicit SignedPermutation(std::vector<int> window) : w_(std::move(window)) {
        const int n = static_cast<int>(w_.size());
        if (n < 1) throw std::invalid_argument("window must be nonempty");
        std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
        for (int v : w_) {
            const int a = v < 0 ? -v : v;
            if (a < 1 || a > n)
                throw std::invalid_argument("window entry out of range: " + std::to_string(v));
            if (seen[a])
                throw std::invalid_argument("window entries repeat " + std::to_string(a));
            seen[a] = 1;
        }
    }

    static SignedPermutation identity(int n) {
        check_rank(n);
        std::vector<int> w(static_cast<size_t>(n));
        for (int j = 1; j <= n; ++j) w[j - 1] = j;
        return SignedPermutation(std::move(w));
    }

    static SignedPermutation generator(int n, int i) {
        check_rank(n);
        if (i < 0 || i >= n) throw std::invalid_argument("generator index out of range");
        SignedPermutation s = identity(n);
        if (i == 0) s.w_[0] = -1;
        else std::swap(s.w_[i - 1], s.w_[i]);
        return s;
    }

    int rank() const { return static_cast<int>(w_.size()); }

    // Image of j for j in {-n..-1, 1..n}; the window extends oddly.
    int operator()(int j) const {
        if (j > 0) {
            require_point(j);
            return w_[j - 1];
        }
        require_point(-j);
        return -w_[-j - 1];
    }

    const std::vector<int>& window() const { return w_; }

    bool is_identity() const {
        for (int j = 1; j <= rank(); ++j)
            if (w_[j - 1] != j) return false;
        return true;
    }

    // True when the window has no negative entries, i.e. the element lies in
    // the parabolic copy of the symmetric group S_n inside B_n.
    bool all_positive() const {
        for (int v : w_)
            if (v < 0) return false;
        return true;
    }

    bool operator==(const SignedPermutation&) const = default;

private:
    static void check_rank(int n) {
        if (n < 1) throw std::invalid_argument("rank must be at least 1");
    }
    void require_point(int a) const {
        if (a < 1 || a > rank()) throw std::out_of_range("point out of range");
    }

    std::vector<int> w_;
};

// a acts first: compose(a, b)(j) = b(a(j)).
inline SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch in compose");
    const int n = a.rank();
    std::vector<int> w(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) w[j - 1] = b(a(j));
    return SignedPermutation(std::move(w));
}

inline SignedPermutation inverse(const SignedPermutation& a) {
    const int n = a.rank();
    std::vector<int> w(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) {
        const int v = a(j);
        if (v > 0) w[v - 1] = j;
        else w[-v - 1] = -j;
    }
    return SignedPermutation(std::move(w));
}

// View a in B_m for m >= rank(a), fixing the new points.
inline SignedPermutation embed(const SignedPermutation& a, int m) {
    if (m < a.rank()) throw std::invalid_argument("embed target rank too small");
    std::vector<int> w = a.window();
    w.reserve(static_cast<size_t>(m));
    for (int j = a.rank() + 1; j <= m; ++j) w.push_back(j);
    return SignedPermutation(std::move(w));
}

// A word in the generators of B_n; letters[t] = i means the letter s_i.
// The empty word is the identity.
struct CoxeterWord {
    int n = 1;
    std::vector<int> letters;

    CoxeterWord() = default;
    CoxeterWord(int rank, std::vector<int> ls) : n(rank), letters(std::move(ls)) {
        if (n < 1) throw std::invalid_argument("rank must be at least 1");
        for (int i : letters)
            if (i < 0 || i >= n) throw std::invalid_argument("letter out of range");
    }

    bool operator==(const CoxeterWord&) const = default;
};

// Image of the point x under the generator s_i, acting on {-n..-1, 1..n}.
inline int generator_apply(int i, int x) {
    const int a = x < 0 ? -x : x;
    if (i == 0) return a == 1 ? -x : x;
    if (a == i) return x < 0 ? -(i + 1) : i + 1;
    if (a == i + 1) return x < 0 ? -i : i;
    return x;
}

// Product of the letters, left to right (the first letter acts first).
inline SignedPermutation eval_word(const CoxeterWord& word) {
    const int n = word.n;
    std::vector<int> w(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) {
        int x = j;
        for (int i : word.letters) x = generator_apply(i, x);
        w[j - 1] = x;
    }
    return SignedPermutation(std::move(w));
}

}  // namespace bn
