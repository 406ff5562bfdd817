#pragma once
// Text forms of group elements: a parser for the input grammar shared by the
// command line tools, and formatters for every representation the library
// computes.
//
// Accepted element syntax:
//   [2,-1,3]          window (rank = number of entries)
//   s0 s1 s0          Coxeter word (rank = largest index + 1)
//   tau2^-1*tau3      product of tau powers (rank = largest index)
//   t2*t3^2           product of t powers, indices >= 2
//   e                 the identity
// Omitted exponents mean 1; exponents may be any integer and are reduced to
// the canonical range when the product is evaluated.

#include <charconv>
#include <stdexcept>
#include <string>
#include <vector>

#include "bn/core.hpp"
#include "bn/ogs.hpp"
#include "bn/sn.hpp"

namespace bn {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, size_t position)
        : std::runtime_error(what), position_(position) {}

    size_t position() const { return position_; }

private:
    size_t position_;
};

enum class ElementKind { window, word, tau_product, t_product };

struct ElementExpr {
    ElementKind kind = ElementKind::tau_product;
    int rank = 1;
    std::vector<int> window;    // kind == window
    std::vector<int> letters;   // kind == word
    std::vector<TauPower> taus; // kind == tau_product; empty means the identity
    std::vector<TPower> ts;     // kind == t_product
};

namespace detail {

struct Scanner {
    const std::string& text;
    size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }
    void skip_space() {
        while (!done() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool consume(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }
    bool consume_keyword(const std::string& kw) {
        if (text.compare(pos, kw.size(), kw) != 0) return false;
        pos += kw.size();
        return true;
    }

    int integer(const char* what) {
        int value = 0;
        const char* first = text.data() + pos;
        const char* last = text.data() + text.size();
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc())
            throw ParseError(std::string("expected ") + what, pos);
        pos += static_cast<size_t>(ptr - first);
        return value;
    }
};

}  // namespace detail

inline ElementExpr parse_element(const std::string& text) {
    detail::Scanner sc{text};
    sc.skip_space();
    if (sc.done()) throw ParseError("empty input", 0);

    ElementExpr out;
    if (sc.peek() == '[') {
        const size_t open = sc.pos;
        ++sc.pos;
        out.kind = ElementKind::window;
        while (true) {
            sc.skip_space();
            out.window.push_back(sc.integer("window entry"));
            sc.skip_space();
            if (sc.consume(']')) break;
            if (!sc.consume(',')) throw ParseError("expected ',' or ']'", sc.pos);
        }
        out.rank = static_cast<int>(out.window.size());
        try {
            SignedPermutation probe(out.window);
        } catch (const std::invalid_argument& ex) {
            throw ParseError(ex.what(), open);
        }
    } else if (sc.peek() == 's') {
        out.kind = ElementKind::word;
        int top = 0;
        while (!sc.done()) {
            const size_t at = sc.pos;
            if (!sc.consume('s')) throw ParseError("expected generator 's<i>'", at);
            const int i = sc.integer("generator index");
            if (i < 0) throw ParseError("generator index cannot be negative", at + 1);
            out.letters.push_back(i);
            top = std::max(top, i);
            sc.skip_space();
        }
        out.rank = top + 1;
    } else if (sc.consume_keyword("e")) {
        out.kind = ElementKind::tau_product;
        out.rank = 1;
    } else if (sc.peek() == 't') {
        const bool tau = sc.text.compare(sc.pos, 3, "tau") == 0;
        out.kind = tau ? ElementKind::tau_product : ElementKind::t_product;
        int top = 1;
        while (true) {
            sc.skip_space();
            const size_t at = sc.pos;
            if (!sc.consume_keyword(tau ? "tau" : "t"))
                throw ParseError(tau ? "expected 'tau<k>' factor" : "expected 't<k>' factor", at);
            const int k = sc.integer("factor index");
            if (k < 1) throw ParseError("factor index must be positive", at);
            if (!tau && k < 2) throw ParseError("t factors start at index 2", at);
            int e = 1;
            if (sc.consume('^')) e = sc.integer("exponent");
            if (tau)
                out.taus.push_back({k, e});
            else
                out.ts.push_back({k, e});
            top = std::max(top, k);
            sc.skip_space();
            if (!sc.consume('*')) break;
        }
        out.rank = top;
    } else {
        throw ParseError("unrecognized element syntax", sc.pos);
    }

    sc.skip_space();
    if (!sc.done()) throw ParseError("unexpected trailing input", sc.pos);
    return out;
}

// Builds the element the expression denotes, applying product factors in
// their written order.
inline SignedPermutation evaluate(const ElementExpr& expr) {
    switch (expr.kind) {
        case ElementKind::window: {
            SignedPermutation w(expr.window);
            return expr.rank > w.rank() ? embed(w, expr.rank) : w;
        }
        case ElementKind::word:
            return eval_word(CoxeterWord(expr.rank, expr.letters));
        case ElementKind::tau_product: {
            SignedPermutation acc = SignedPermutation::identity(expr.rank);
            for (const auto& f : expr.taus)
                acc = compose(acc, from_ogs(OgsExponents(expr.rank, {f})));
            return acc;
        }
        case ElementKind::t_product: {
            SignedPermutation acc = SignedPermutation::identity(expr.rank);
            for (const auto& f : expr.ts)
                acc = compose(acc, from_t_ogs(SnOgsExponents(expr.rank, {f})));
            return acc;
        }
    }
    throw std::logic_error("unhandled element kind");
}

inline std::string format_window(const SignedPermutation& w) {
    std::string s = "[";
    for (int i = 1; i <= w.rank(); ++i) {
        if (i > 1) s += ',';
        s += std::to_string(w(i));
    }
    return s + "]";
}

inline std::string format_word(const CoxeterWord& w) {
    if (w.letters.empty()) return "e";
    std::string s;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i > 0) s += ' ';
        s += 's' + std::to_string(w.letters[i]);
    }
    return s;
}

inline std::string format_ogs(const OgsExponents& e) {
    const auto fs = e.factors();
    if (fs.empty()) return "e";
    std::string s;
    for (size_t i = 0; i < fs.size(); ++i) {
        if (i > 0) s += '*';
        s += "tau" + std::to_string(fs[i].k) + "^" + std::to_string(fs[i].e);
    }
    return s;
}

inline std::string format_t_ogs(const SnOgsExponents& e) {
    const auto fs = e.factors();
    if (fs.empty()) return "e";
    std::string s;
    for (size_t i = 0; i < fs.size(); ++i) {
        if (i > 0) s += '*';
        s += "t" + std::to_string(fs[i].k) + "^" + std::to_string(fs[i].e);
    }
    return s;
}

}  // namespace bn
