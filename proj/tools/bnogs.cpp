// bnogs: command line front end for the signed permutation OGS library.
//
//   bnogs convert --to ogs "[-2,-1,-4,-3]"
//   bnogs length "tau2*tau3*tau4^3*tau5^2"
//   bnogs descents --json "tau3^-2*tau4^-1*tau5^3"
//   bnogs factorize --mode uv "tau3^2*tau4^3*tau5^-2*tau7^4*tau8^2*tau9^4"
//   bnogs verify --check lengths --n 4

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "bn/cli.hpp"

namespace {

int emit(const bn::CommandResult& r, bool json) {
    std::ostream& os = r.json.contains("error") ? std::cerr : std::cout;
    if (json)
        os << r.json.dump(2) << "\n";
    else
        os << r.text << "\n";
    return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized OGS canonical forms for the signed permutation group B_n"};
    app.require_subcommand(1);

    bool json = false;
    std::string element, to = "ogs", mode = "elementary", check = "all";
    int n = 0;
    int verify_n = 4;

    auto* convert = app.add_subcommand("convert", "rewrite an element in another representation");
    convert->add_option("element", element, "window, word, or generator product")->required();
    convert->add_option("--to", to, "window|word|ogs|t-ogs|normal");
    convert->add_option("--n", n, "ambient rank (defaults to the smallest that fits)");
    convert->add_flag("--json", json, "emit JSON");

    auto* length = app.add_subcommand("length", "Coxeter length of an element");
    length->add_option("element", element)->required();
    length->add_option("--n", n);
    length->add_flag("--json", json);

    auto* descents = app.add_subcommand("descents", "left descent set of an element");
    descents->add_option("element", element)->required();
    descents->add_option("--n", n);
    descents->add_flag("--json", json);

    auto* factorize = app.add_subcommand("factorize", "factor an element into canonical parts");
    factorize->add_option("element", element)->required();
    factorize->add_option("--mode", mode, "elementary|uv");
    factorize->add_option("--n", n);
    factorize->add_flag("--json", json);

    auto* verify = app.add_subcommand("verify", "replay the closed-form laws against brute force");
    verify->add_option("--check", check, "bijection|exchange|lengths|descents|factorizations|all");
    verify->add_option("--n", verify_n, "rank to sweep");
    verify->add_flag("--json", json);

    CLI11_PARSE(app, argc, argv);

    if (convert->parsed()) return emit(bn::run_convert(element, n, to), json);
    if (length->parsed()) return emit(bn::run_length(element, n), json);
    if (descents->parsed()) return emit(bn::run_descents(element, n), json);
    if (factorize->parsed()) return emit(bn::run_factorize(element, n, mode), json);
    if (verify->parsed()) return emit(bn::run_verify(check, verify_n), json);
    return 1;
}
