#pragma once
// Command layer shared by the bnogs tool and its tests: each run_* function
// implements one subcommand and returns the process exit code together with
// both output forms (plain text and JSON).
//
// Exit codes: 0 success, 1 domain errors (an element outside a command's
// domain, or a verify run that found disagreements), 2 syntax errors in the
// element argument.

#include <json.hpp>

#include <string>
#include <vector>

#include "bn/core.hpp"
#include "bn/factor.hpp"
#include "bn/io.hpp"
#include "bn/metrics.hpp"
#include "bn/ogs.hpp"
#include "bn/oracle.hpp"
#include "bn/sn.hpp"

namespace bn {

struct CommandResult {
    int exit_code = 0;
    std::string text;
    nlohmann::ordered_json json;
};

namespace detail {

inline const char* kind_name(ElementKind k) {
    switch (k) {
        case ElementKind::window: return "window";
        case ElementKind::word: return "word";
        case ElementKind::tau_product: return "tau-product";
        case ElementKind::t_product: return "t-product";
    }
    return "unknown";
}

inline ElementExpr parse_with_rank(const std::string& text, int n) {
    ElementExpr expr = parse_element(text);
    if (n > 0) {
        if (n < expr.rank)
            throw std::invalid_argument("requested rank is below the element's rank");
        expr.rank = n;
    }
    return expr;
}

inline nlohmann::ordered_json envelope(const std::string& input, const ElementExpr& expr) {
    return {{"input", input}, {"rank", expr.rank}, {"representation", kind_name(expr.kind)}};
}

template <typename Fn>
CommandResult guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& ex) {
        CommandResult r;
        r.exit_code = 2;
        r.text = "parse error at position " + std::to_string(ex.position()) + ": " + ex.what();
        r.json = {{"error", ex.what()}, {"position", ex.position()}};
        return r;
    } catch (const std::domain_error& ex) {
        CommandResult r;
        r.exit_code = 1;
        r.text = std::string("error: ") + ex.what();
        r.json = {{"error", ex.what()}};
        return r;
    } catch (const std::invalid_argument& ex) {
        CommandResult r;
        r.exit_code = 1;
        r.text = std::string("error: ") + ex.what();
        r.json = {{"error", ex.what()}};
        return r;
    }
}

inline std::string join_lines(const std::vector<std::string>& lines) {
    std::string out;
    for (size_t i = 0; i < lines.size(); ++i) {
        if (i > 0) out += '\n';
        out += lines[i];
    }
    return out;
}

}  // namespace detail

inline CommandResult run_convert(const std::string& element, int n, const std::string& to) {
    return detail::guarded([&] {
        const ElementExpr expr = detail::parse_with_rank(element, n);
        const SignedPermutation w = evaluate(expr);
        CommandResult r;
        r.json = detail::envelope(element, expr);
        if (to == "window") {
            r.text = format_window(w);
            r.json["result"] = {{"to", to}, {"value", r.text}};
        } else if (to == "word") {
            r.text = format_word(greedy_reduce(w));
            r.json["result"] = {{"to", to}, {"value", r.text}};
        } else if (to == "ogs") {
            r.text = format_ogs(to_ogs(w));
            r.json["result"] = {{"to", to}, {"value", r.text}};
        } else if (to == "t-ogs") {
            r.text = format_t_ogs(to_t_ogs(w));
            r.json["result"] = {{"to", to}, {"value", r.text}};
        } else if (to == "normal") {
            const NormalForm nf = normal_form(w);
            std::string y = "(";
            for (size_t i = 0; i < nf.y.size(); ++i) {
                if (i > 0) y += ',';
                y += std::to_string(nf.y[i]);
            }
            y += ")";
            r.text = detail::join_lines(
                {"y=" + y, "word=" + format_word(nf.word), "length=" + std::to_string(nf.length())});
            r.json["result"] = {{"to", to},
                                {"y", nf.y},
                                {"word", format_word(nf.word)},
                                {"length", nf.length()}};
        } else {
            throw std::invalid_argument("unknown conversion target: " + to);
        }
        return r;
    });
}

inline CommandResult run_length(const std::string& element, int n) {
    return detail::guarded([&] {
        const ElementExpr expr = detail::parse_with_rank(element, n);
        const long len = length(evaluate(expr));
        CommandResult r;
        r.text = std::to_string(len);
        r.json = detail::envelope(element, expr);
        r.json["result"] = {{"length", len}};
        return r;
    });
}

inline CommandResult run_descents(const std::string& element, int n) {
    return detail::guarded([&] {
        const ElementExpr expr = detail::parse_with_rank(element, n);
        const DescentSet d = descents(evaluate(expr));
        CommandResult r;
        for (size_t i = 0; i < d.indices.size(); ++i) {
            if (i > 0) r.text += ' ';
            r.text += std::to_string(d.indices[i]);
        }
        r.json = detail::envelope(element, expr);
        r.json["result"] = {{"descents", d.indices}};
        return r;
    });
}

inline CommandResult run_factorize(const std::string& element, int n, const std::string& mode) {
    return detail::guarded([&] {
        const ElementExpr expr = detail::parse_with_rank(element, n);
        const OgsExponents e = to_ogs(evaluate(expr));
        CommandResult r;
        r.json = detail::envelope(element, expr);
        if (mode == "elementary") {
            const ElementaryFactorization f = elementary_factorize(e);
            std::vector<std::string> lines = {"z=" + std::to_string(f.z)};
            nlohmann::ordered_json factors = nlohmann::ordered_json::array();
            for (const auto& block : f.factors) {
                lines.push_back(format_ogs(block));
                factors.push_back(format_ogs(block));
            }
            r.text = detail::join_lines(lines);
            r.json["result"] = {{"mode", mode},
                                {"z", f.z},
                                {"factors", factors},
                                {"boundaries", f.boundaries}};
        } else if (mode == "uv") {
            const UvFactorization f = uv_factorize(e);
            std::vector<std::string> lines;
            nlohmann::ordered_json us = nlohmann::ordered_json::array();
            for (size_t j = 0; j < f.u.size(); ++j) {
                lines.push_back("u" + std::to_string(j + 1) + "=" + format_ogs(f.u[j]));
                us.push_back(format_ogs(f.u[j]));
                if (j < f.p.size())
                    lines.push_back("v" + std::to_string(j + 1) + "=tau" + std::to_string(f.p[j]) +
                                    "^" + std::to_string(f.p[j]));
            }
            r.text = detail::join_lines(lines);
            r.json["result"] = {{"mode", mode}, {"parts", f.parts()}, {"u", us}, {"p", f.p}};
        } else {
            throw std::invalid_argument("unknown factorization mode: " + mode);
        }
        return r;
    });
}

inline CommandResult run_verify(const std::string& check, int n) {
    return detail::guarded([&] {
        std::vector<VerifyReport> reports;
        const bool all = check == "all";
        if (all || check == "bijection") reports.push_back(verify_bijection(n));
        if (all || check == "exchange") {
            reports.push_back(verify_exchange_tau(n));
            reports.push_back(verify_exchange_t(n));
        }
        if (all || check == "lengths") reports.push_back(verify_lengths(n));
        if (all || check == "descents") reports.push_back(verify_descents(n));
        if (all || check == "factorizations") reports.push_back(verify_factorizations(n));
        if (reports.empty()) throw std::invalid_argument("unknown check: " + check);

        CommandResult r;
        bool pass = true;
        std::vector<std::string> lines;
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (const auto& rep : reports) {
            pass = pass && rep.pass();
            lines.push_back(rep.to_text());
            nlohmann::ordered_json failures = nlohmann::ordered_json::array();
            for (const auto& f : rep.failures)
                failures.push_back(
                    {{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
            out.push_back({{"check", rep.check},
                           {"n", rep.n},
                           {"cases", rep.cases},
                           {"pass", rep.pass()},
                           {"failures", failures}});
        }
        r.exit_code = pass ? 0 : 1;
        r.text = detail::join_lines(lines);
        r.json = {{"check", check}, {"n", n}, {"pass", pass}, {"reports", out}};
        return r;
    });
}

}  // namespace bn
