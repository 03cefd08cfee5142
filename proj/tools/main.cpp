#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sphquad/config.hpp"
#include "sphquad/experiment.hpp"

namespace {

struct SubcommandState {
    CLI::App* app = nullptr;
    std::string config_path;
    std::string out;
    int seed = 0;
    int threads = 1;
    int resolution = 200;
    std::vector<std::string> overrides;
    std::vector<std::string> positionals;  // key names filled from positional args
    std::vector<std::string> positional_values;
};

void add_common_options(SubcommandState& st) {
    st.app->add_option("--config", st.config_path, "key=value config file");
    st.app->add_option("--out", st.out, "output path ('-' for stdout)");
    st.app->add_option("--seed", st.seed, "deterministic seed");
    st.app->add_option("--threads", st.threads, "worker threads for node sums");
    st.app->add_option("--resolution", st.resolution, "mesh-norm search resolution");
    st.app->add_option("--set", st.overrides, "extra key=value override (repeatable)")
        ->take_all();
}

sphquad::Config build_config(const SubcommandState& st) {
    sphquad::Config cfg;
    if (st.app->count("--config") > 0) cfg = sphquad::Config::from_file(st.config_path);
    for (std::size_t i = 0; i < st.positionals.size(); ++i) {
        if (i < st.positional_values.size() && !st.positional_values[i].empty()) {
            cfg.set(st.positionals[i], st.positional_values[i]);
        }
    }
    for (const std::string& kv : st.overrides) {
        const std::size_t eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw std::invalid_argument("--set expects key=value, got: " + kv);
        }
        cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (st.app->count("--out") > 0) cfg.set("out", st.out);
    if (st.app->count("--seed") > 0) cfg.set("seed", std::to_string(st.seed));
    if (st.app->count("--threads") > 0) cfg.set("threads", std::to_string(st.threads));
    if (st.app->count("--resolution") > 0) cfg.set("resolution", std::to_string(st.resolution));
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Positive-weight quadrature on the unit sphere: graded product rules,\n"
                 "equal-area partitions, optimized designs, worst-case errors, and\n"
                 "transformed singular integrands."};
    app.require_subcommand(1);

    using Command = std::function<sphquad::CommandOutcome(const sphquad::Config&)>;
    std::map<std::string, std::pair<SubcommandState, Command>> table;

    auto make_sub = [&](const std::string& name, const std::string& help, Command fn,
                        const std::vector<std::string>& positionals = {}) {
        auto& slot = table[name];
        slot.first.app = app.add_subcommand(name, help);
        slot.first.positionals = positionals;
        slot.first.positional_values.resize(positionals.size());
        for (std::size_t i = 0; i < positionals.size(); ++i) {
            slot.first.app->add_option(positionals[i], slot.first.positional_values[i],
                                       "sets config key '" + positionals[i] + "'");
        }
        add_common_options(slot.first);
        slot.second = std::move(fn);
    };

    make_sub("integrate", "integrate test functions, one CSV row per case", sphquad::cmd_integrate);
    make_sub("wce", "Sobolev worst-case errors of equal-weight rules", sphquad::cmd_wce);
    make_sub("geometry", "mesh norm, minimal angle, and mesh ratio of point sets",
             sphquad::cmd_geometry);
    make_sub("gen-design", "optimize a spherical design and write its point file",
             sphquad::cmd_gen_design, {"t", "N"});
    make_sub("verify", "check a point file against the design property", sphquad::cmd_verify,
             {"points_file", "t", "tolerance"});
    make_sub("partition", "write equal-area partition centers", sphquad::cmd_partition, {"N"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    for (auto& [name, slot] : table) {
        if (!slot.first.app->parsed()) continue;
        sphquad::CommandOutcome outcome;
        try {
            outcome = slot.second(build_config(slot.first));
        } catch (const std::exception& e) {
            outcome = {sphquad::exit_code_for(e), e.what()};
        }
        if (outcome.exit_code == 0) {
            if (!outcome.message.empty()) std::cout << outcome.message << '\n';
        } else {
            std::cerr << "error: " << outcome.message << '\n';
        }
        return outcome.exit_code;
    }
    return 2;
}
