#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "bidouble/certificate.hpp"

namespace {

using bidouble::Conic;
using bidouble::Rat;

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string den = s.substr(slash + 1);
        if (den.empty() || den[0] == '-' || den[0] == '+')
            throw std::invalid_argument("denominator must be a positive integer in '" + s + "'");
    }
    return bidouble::rat_from_string(s);
}

std::pair<Rat, Rat> parse_lam(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos || s.find(':', colon + 1) != std::string::npos)
        throw std::invalid_argument("lam must be of the form a:b, got '" + s + "'");
    return {parse_rat(s.substr(0, colon)), parse_rat(s.substr(colon + 1))};
}

Conic parse_conic(const std::string& s) {
    if (s == "alpha") return Conic::alpha;
    if (s == "beta") return Conic::beta;
    throw std::invalid_argument("conic must be alpha or beta, got '" + s + "'");
}

void emit(const bidouble::ordered_json& j, const std::string& out_path) {
    std::string text = j.dump(2);
    text += "\n";
    std::cout << text;
    if (!out_path.empty()) {
        std::ofstream os(out_path, std::ios::binary);
        if (!os) throw std::invalid_argument("cannot open output file '" + out_path + "'");
        os << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for a two-parameter family of plane configurations"};
    app.require_subcommand(1);

    std::string u_str, lam_str, conic_str, out_path;
    auto* verify = app.add_subcommand("verify", "verify one parameter choice");
    verify->add_option("--u", u_str, "parameter u, as p or p/q with q > 0")->required();
    verify->add_option("--conic", conic_str, "alpha or beta")
        ->required()
        ->check(CLI::IsMember({"alpha", "beta"}));
    verify->add_option("--lam", lam_str, "parametrization pair a:b")->required();
    verify->add_option("--out", out_path, "also write the certificate to this path");

    std::vector<std::string> u_list;
    std::size_t grid_n = 0;
    bool full = false;
    std::string search_conic = "both";
    auto* search = app.add_subcommand("search", "sweep a parameter grid");
    search->add_option("--u", u_list, "parameter values, each p or p/q")->required();
    search->add_option("--lam-grid", grid_n, "number of lam grid points")->required();
    search->add_option("--conic", search_conic, "alpha, beta or both")
        ->check(CLI::IsMember({"alpha", "beta", "both"}));
    search->add_flag("--full", full, "run the full pipeline on each hit");
    search->add_option("--out", out_path, "also write the result to this path");

    bool as_json = false;
    auto* catalog_cmd = app.add_subcommand("catalog", "dump the divisor class catalog");
    catalog_cmd->add_flag("--json", as_json, "emit JSON instead of text");

    auto* params_cmd = app.add_subcommand("params", "derived parameters for one u");
    params_cmd->add_option("--u", u_str, "parameter u, as p or p/q with q > 0")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            auto out = bidouble::cmd_verify(parse_rat(u_str), parse_conic(conic_str),
                                            parse_lam(lam_str));
            emit(out.certificate, out_path);
            return out.exit_code;
        }
        if (search->parsed()) {
            std::vector<Rat> us;
            for (const auto& s : u_list) us.push_back(parse_rat(s));
            std::vector<Conic> conics;
            if (search_conic == "both")
                conics = {Conic::alpha, Conic::beta};
            else
                conics = {parse_conic(search_conic)};
            auto result = bidouble::cmd_search(us, grid_n, conics, full);
            emit(result, out_path);
            return 0;
        }
        if (catalog_cmd->parsed()) {
            if (as_json)
                emit(bidouble::cmd_catalog_json(), "");
            else
                std::cout << bidouble::cmd_catalog_text();
            return 0;
        }
        if (params_cmd->parsed()) {
            emit(bidouble::cmd_params(parse_rat(u_str)), "");
            return 0;
        }
    } catch (const bidouble::BadParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
