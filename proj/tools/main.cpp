#include "cforge/commands.hpp"
#include "cforge/errors.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>

using namespace cforge;

int main(int argc, char** argv)
{
    CLI::App app{"cocycle-forge: twisted semigroup rings, their cocycles and automorphisms"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig config;
    std::string output = "text";
    app.add_option("--seed", config.seed, "Seed for sampled checks")->capture_default_str();
    app.add_option("--jobs", config.jobs, "Worker threads for searches")
        ->envname("COCYCLE_FORGE_JOBS")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--output", output, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    app.add_option("--max-idempotents", config.max_idempotents, "Cap on |E|")->capture_default_str();

    std::function<CommandResult()> run;
    std::string file, file_b, witness_file, out_file, gauge_file;

    auto load = [&](const std::string& path) { return load_instance(path, config.semigroup()); };

    auto single = [&](const char* name, const char* help, CommandResult (*cmd)(const Instance&, const RunConfig&)) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("instance", file, "Instance JSON file")->required();
        sub->callback([&, cmd] { run = [&, cmd] { return cmd(load(file), config); }; });
        return sub;
    };

    single("validate", "Check an instance file and its cocycle identities", cmd_validate);
    single("is-cocycle", "Report every violated cocycle identity", cmd_is_cocycle);
    single("ring-table", "Basis multiplication table of the twisted ring", cmd_ring_table);
    single("aut-s", "Automorphisms of S and the stabilizer of the class", cmd_aut_s);
    single("z1", "Enumerate the 1-cocycles", cmd_z1);
    single("b1", "Enumerate the 1-coboundaries", cmd_b1);
    single("h1", "First cohomology group with coset table", cmd_h1);
    single("aut0", "Enumerate E-preserving ring automorphisms", cmd_aut0);
    single("out-r", "Outer automorphism group order", cmd_out_r);
    single("verify-ses", "Check exactness of 1 -> H1 -> Out R -> Stab -> 1", cmd_verify_ses);

    auto* normalize_cmd = single("normalize", "Move the cocycle to a normal representative", cmd_normalize);
    normalize_cmd->add_option("--out", out_file, "Write the normalized instance here");
    normalize_cmd->add_option("--gauge-out", gauge_file, "Write the normalizing gauge here");

    auto* act = app.add_subcommand("act", "Apply a witness (gauge and optional phi) to an instance");
    act->add_option("instance", file, "Instance JSON file")->required();
    act->add_option("witness", witness_file, "Witness JSON file")->required();
    act->add_option("--out", out_file, "Write the resulting instance here");
    act->callback([&] {
        run = [&] {
            const Instance inst = load(file);
            const auto w = witness_from_json(read_json_file(witness_file), inst.semigroup, inst.domain);
            return cmd_act(inst, w, config);
        };
    });

    auto* iso = app.add_subcommand("iso-check", "Decide whether two instances give isomorphic rings");
    iso->add_option("a", file, "First instance")->required();
    iso->add_option("b", file_b, "Second instance")->required();
    iso->callback([&] { run = [&] { return cmd_iso_check(load(file), load(file_b), config); }; });

    auto* demo = app.add_subcommand("demo", "Reproduce the GF(4) example end to end");
    demo->callback([&] { run = [&] { return cmd_demo(config); }; });

    CLI11_PARSE(app, argc, argv);
    config.json = output == "json";

    CommandResult result;
    try {
        result = run();
        if (!out_file.empty())
            write_json_file(out_file, result.json.contains("instance") ? result.json["instance"] : result.json);
        if (!gauge_file.empty())
            write_json_file(gauge_file, Json{{"phi", nullptr}, {"gauge", result.json["gauge"]}});
    } catch (const Error& e) {
        result = error_result(e);
    }
    if (config.json)
        std::cout << result.json.dump(2) << "\n";
    else
        (result.exit_code == 2 ? std::cerr : std::cout) << result.text;
    return result.exit_code;
}
