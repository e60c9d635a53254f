#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "dplane/errors.hpp"

using namespace dplane::cli;

int main(int argc, char** argv) {
    CLI::App app{"Double-plane field toolkit"};
    app.require_subcommand(1);

    struct Sub {
        CLI::App* app = nullptr;
        std::map<std::string, std::string> values;
        std::map<std::string, bool> flags;
        std::map<std::string, CLI::Option*> options;
        std::string config;
        std::vector<std::string> positional;
    };
    std::map<std::string, Sub> subs;
    for (const auto& name : command_names()) {
        Sub& s = subs[name];
        s.app = app.add_subcommand(name);
        s.app->add_option("--config", s.config, "key=value file; flags override it");
        for (const auto& key : accepted_keys(name)) {
            if (key.flag) {
                s.options[key.name] = s.app->add_flag("--" + key.name, s.flags[key.name], key.help);
            } else {
                s.options[key.name] = s.app->add_option("--" + key.name, s.values[key.name], key.help);
            }
        }
        if (name == "verify") s.app->add_option("suite_name", s.positional, "cr | wave | poly | srt | dual");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        for (const auto* sub : app.get_subcommands())
            std::cerr << "accepted keys for " << sub->get_name() << ": " << accepted_key_list(sub->get_name())
                      << '\n';
        if (app.get_subcommands().empty()) std::cerr << app.help();
        return exit_config;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    Sub& s = subs[command];
    try {
        ParamMap flags;
        for (const auto& [key, opt] : s.options) {
            if (opt->count() == 0) continue;
            flags[key] = s.flags.count(key) ? (s.flags[key] ? "true" : "false") : s.values[key];
        }
        ParamMap file = s.config.empty() ? ParamMap{} : read_config_file(s.config);
        RunConfig cfg = make_config(command, file, flags, s.positional);
        return dispatch(cfg, std::cout, std::cerr);
    } catch (const dplane::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_config;
    }
}
