#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "modinv/runner.hpp"

namespace {

modinv::Caps caps_from_env() {
    modinv::Caps caps;
    if (const char* s = std::getenv("MODINV_MAX_DEGREE")) caps.max_degree = std::atol(s);
    if (const char* s = std::getenv("MODINV_MAX_BASIS"))
        caps.max_basis = static_cast<size_t>(std::atoll(s));
    return caps;
}

modinv::RunConfig load_config(const std::string& path, modinv::Command cmd) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw modinv::ValidationError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    modinv::RunConfig cfg = modinv::parse_config(ss.str());
    if (cfg.command && *cfg.command != cmd)
        throw modinv::ValidationError("config requests command '" +
                                      modinv::command_name(*cfg.command) +
                                      "' but the CLI invoked '" + modinv::command_name(cmd) +
                                      "'");
    cfg.command = cmd;
    return cfg;
}

int dispatch(modinv::Command cmd, const std::string& config_path,
             const std::string& catalog_name) {
    modinv::Caps caps = caps_from_env();
    modinv::RunConfig cfg;
    if (!catalog_name.empty()) {
        cfg = modinv::catalog_lookup(catalog_name).config;
        cfg.command = cmd;
    } else {
        cfg = load_config(config_path, cmd);
    }
    std::string report = modinv::run_command(cfg, cmd, caps, &std::cerr);
    std::cout << report;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"modinv: modular invariant rings and their homological diagnostics"};
    app.require_subcommand(1);

    struct SubArgs {
        std::string config;
        std::string catalog;
    };
    std::map<std::string, SubArgs> args;

    for (const char* name : {"group", "invariants", "present", "diagnose", "grade", "transfer"}) {
        CLI::App* sub = app.add_subcommand(name, std::string("run the ") + name + " command");
        auto& a = args[name];
        sub->add_option("--config", a.config, "path to a run configuration file");
        sub->add_option("--catalog", a.catalog, "name of a built-in catalog entry");
    }
    CLI::App* verify = app.add_subcommand("verify", "run the acceptance catalog");
    std::string only, golden;
    verify->add_option("--only", only, "restrict to one catalog entry");
    verify->add_option("--golden", golden, "directory with recorded reports");

    CLI11_PARSE(app, argc, argv);

    try {
        for (auto& [name, a] : args) {
            if (app.get_subcommand(name)->parsed()) {
                if (a.config.empty() && a.catalog.empty())
                    throw modinv::ValidationError("provide --config or --catalog");
                return dispatch(*modinv::command_from(name), a.config, a.catalog);
            }
        }
        if (verify->parsed()) {
            modinv::Caps caps = caps_from_env();
            std::optional<std::string> only_opt;
            if (!only.empty()) only_opt = only;
            modinv::VerifyOutcome out = modinv::run_verify(caps, only_opt, golden, &std::cerr);
            for (auto& c : out.criteria) {
                std::cerr << (c.skipped ? "SKIP" : (c.passed ? "PASS" : "FAIL")) << " criterion "
                          << c.id << ": " << c.name << " [" << c.detail << "]\n";
            }
            std::cout << out.report_json;
            return out.all_passed ? 0 : 1;
        }
    } catch (const modinv::ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const modinv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
