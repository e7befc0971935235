// seifcov: enumerate the index-2 subgroups of a Seifert manifold group,
// emit the closed-form double-cover invariants, and cross-check them with
// the generic rewriting engine.
//
// Exit codes: 0 success, 1 verification/validation failure, 2 usage or
// parse error.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "seifcov/covers.hpp"
#include "seifcov/text.hpp"
#include "seifcov/verify.hpp"

using nlohmann::json;
using namespace seifcov;

namespace {

json to_json(const H1Invariants& h) {
    json torsion = json::array();
    for (const cpp_int& d : h.torsion) {
        if (d <= std::numeric_limits<long long>::max())
            torsion.push_back(d.convert_to<long long>());
        else
            torsion.push_back(d.str());
    }
    return {{"rank", h.rank}, {"torsion", torsion}};
}

json to_json(const VerifyReport& rep) {
    json j{{"symbol", print_seifert(rep.input)},
           {"phi", print_hom(rep.phi)},
           {"tag", cover_tag_name(rep.cc.tag)},
           {"m", rep.cc.m},
           {"r", rep.cc.r},
           {"mprime", rep.cc.mprime},
           {"predicted", print_seifert(rep.predicted)},
           {"predicted_h1", to_json(rep.predicted_h1)},
           {"oracle_h1", to_json(rep.oracle_h1)},
           {"valid_ok", rep.valid_ok},
           {"h1_ok", rep.h1_ok},
           {"chi_ok", rep.chi_ok},
           {"pass", rep.pass},
           {"detail", rep.detail}};
    j["euler_ok"] = rep.euler_ok ? json(*rep.euler_ok) : json(nullptr);
    return j;
}

void print_report_line(const VerifyReport& rep) {
    std::cout << (rep.pass ? "PASS" : "FAIL") << " phi=" << print_hom(rep.phi)
              << " tag=" << cover_tag_name(rep.cc.tag)
              << " cover=" << print_seifert(rep.predicted)
              << " h1=" << print_h1(rep.oracle_h1);
    if (!rep.pass) std::cout << " [" << rep.detail << "]";
    std::cout << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"index-2 covers of Seifert fibered spaces"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may trail the subcommand: `verify S --json`
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");

    std::string sym_text, phi_text;
    bool show_pres = false, verify_all = false;

    CLI::App* c_validate = app.add_subcommand("validate", "check a symbol's validity rules");
    c_validate->add_option("symbol", sym_text, "Seifert symbol {e;(type,g);(a,b),...}")->required();

    CLI::App* c_pi1 = app.add_subcommand("pi1", "print the fundamental-group presentation");
    c_pi1->add_option("symbol", sym_text)->required();

    CLI::App* c_enum = app.add_subcommand("enumerate", "list all epimorphisms to Z/2");
    c_enum->add_option("symbol", sym_text)->required();

    CLI::App* c_cover = app.add_subcommand("cover", "closed-form double cover for one phi");
    c_cover->add_option("symbol", sym_text)->required();
    c_cover->add_option("--phi", phi_text, "gen=bit list, e.g. h=1,s1=1")->required();
    c_cover->add_flag("--show-presentation", show_pres, "also print the cover's presentation");

    CLI::App* c_verify = app.add_subcommand("verify", "check predictions against the rewriting oracle");
    c_verify->add_option("symbol", sym_text)->required();
    c_verify->add_option("--phi", phi_text, "verify a single phi");
    c_verify->add_flag("--all", verify_all, "verify every epimorphism");
    c_verify->add_flag("--show-presentation", show_pres, "also print kernel presentations");

    CLI::App* c_fuzz = app.add_subcommand("fuzz", "randomized corpus verification");
    FuzzConfig cfg;
    c_fuzz->add_option("--count", cfg.count, "number of random symbols");
    c_fuzz->add_option("--seed", cfg.seed, "RNG seed");
    c_fuzz->add_option("--max-n", cfg.max_n, "max exceptional fibers");
    c_fuzz->add_option("--max-e", cfg.max_abs_e, "max |e|");
    c_fuzz->add_option("--max-g", cfg.max_g, "max genus (type floors still apply)");
    c_fuzz->add_option("--max-a", cfg.max_abs_a, "max |a|");
    c_fuzz->add_option("--max-b", cfg.max_abs_b, "max |b|");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*c_validate) {
        SeifertInvariants inv = parse_seifert(sym_text);
        ValidationReport rep = validate(inv);
        if (as_json) {
            std::cout << json{{"symbol", print_seifert(inv)},
                              {"ok", rep.ok},
                              {"violations", rep.violations}}
                             .dump(2)
                      << "\n";
        } else if (rep.ok) {
            std::cout << "ok\n";
        } else {
            for (const std::string& v : rep.violations) std::cout << "violation: " << v << "\n";
        }
        return rep.ok ? 0 : 1;
    }

    if (*c_pi1) {
        SeifertInvariants inv = parse_seifert(sym_text);
        Presentation p = fundamental_presentation(inv);
        if (as_json) {
            json gens = json::array(), rels = json::array();
            for (Generator g : p.generators) gens.push_back(render(g));
            for (const Word& r : p.relators) rels.push_back(render(r));
            std::cout << json{{"symbol", print_seifert(inv)},
                              {"generators", gens},
                              {"relators", rels}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << render(p) << "\n";
        }
        return 0;
    }

    if (*c_enum) {
        SeifertInvariants inv = parse_seifert(sym_text);
        Presentation p = fundamental_presentation(inv);
        std::vector<Z2Hom> phis = enumerate_epimorphisms(p);
        if (as_json) {
            json list = json::array();
            for (const Z2Hom& phi : phis) list.push_back(print_hom(phi));
            std::cout << json{{"symbol", print_seifert(inv)},
                              {"count", phis.size()},
                              {"epimorphisms", list}}
                             .dump(2)
                      << "\n";
        } else {
            for (const Z2Hom& phi : phis) std::cout << print_hom(phi) << "\n";
        }
        return 0;
    }

    if (*c_cover) {
        SeifertInvariants inv = parse_seifert(sym_text);
        Presentation p = fundamental_presentation(inv);
        Z2Hom phi = parse_hom(phi_text, p);
        require_epimorphism(p, phi);
        CoverCase cc = classify(inv, phi);
        SeifertInvariants cover = double_cover(inv, phi);
        if (as_json) {
            json j{{"symbol", print_seifert(inv)}, {"phi", print_hom(phi)},
                   {"tag", cover_tag_name(cc.tag)}, {"m", cc.m},
                   {"r", cc.r},                     {"mprime", cc.mprime},
                   {"cover", print_seifert(cover)}};
            if (show_pres) {
                json rels = json::array();
                for (const Word& r : fundamental_presentation(cover).relators)
                    rels.push_back(render(r));
                j["cover_relators"] = rels;
            }
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << print_seifert(cover) << "\n";
            if (show_pres) std::cout << render(fundamental_presentation(cover)) << "\n";
        }
        return 0;
    }

    if (*c_verify) {
        if (verify_all == !phi_text.empty()) {
            std::cerr << "verify: exactly one of --phi or --all is required\n";
            return 2;
        }
        SeifertInvariants inv = parse_seifert(sym_text);
        Presentation p = fundamental_presentation(inv);
        std::vector<Z2Hom> phis;
        if (verify_all) {
            phis = enumerate_epimorphisms(p);
        } else {
            Z2Hom phi = parse_hom(phi_text, p);
            require_epimorphism(p, phi);
            phis.push_back(std::move(phi));
        }
        bool all_pass = true;
        json reports = json::array();
        for (const Z2Hom& phi : phis) {
            VerifyReport rep = verify_cover(inv, phi);
            all_pass &= rep.pass;
            if (as_json)
                reports.push_back(to_json(rep));
            else {
                print_report_line(rep);
                if (show_pres)
                    std::cout << render(kernel_presentation(p, phi)) << "\n";
            }
        }
        if (as_json)
            std::cout << json{{"symbol", print_seifert(inv)},
                              {"reports", reports},
                              {"all_pass", all_pass}}
                             .dump(2)
                      << "\n";
        return all_pass ? 0 : 1;
    }

    // fuzz
    FuzzSummary sum = fuzz(cfg);
    if (as_json) {
        json fails = json::array();
        for (const FuzzFailure& f : sum.failures)
            fails.push_back({{"symbol", f.symbol},
                             {"phi", f.phi},
                             {"stage", f.stage},
                             {"expected", f.expected},
                             {"got", f.got}});
        std::cout << json{{"count", cfg.count},
                          {"seed", cfg.seed},
                          {"cases", sum.cases},
                          {"epimorphisms", sum.epimorphisms},
                          {"failures", fails},
                          {"coverage", sum.coverage},
                          {"type_counts", sum.type_counts}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "cases: " << sum.cases << "\nepimorphisms: " << sum.epimorphisms
                  << "\nfailures: " << sum.failures.size() << "\n";
        for (const FuzzFailure& f : sum.failures)
            std::cout << "FAIL " << f.symbol << " [" << f.phi << "] stage=" << f.stage
                      << " expected=" << f.expected << " got=" << f.got << "\n";
        std::cout << "coverage:\n";
        for (const auto& [key, cnt] : sum.coverage)
            std::cout << "  " << key << ": " << cnt << "\n";
    }
    return sum.failures.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
