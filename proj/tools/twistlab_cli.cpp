#include <iostream>

#include "CLI11.hpp"

#include "twistlab/commands.hpp"

int main(int argc, char** argv) {
    using namespace twistlab;
    CLI::App app{"twistlab: spherical twists, P-twists and their categorical entropy"};
    app.require_subcommand(1);

    std::string validate_path;
    auto* validate = app.add_subcommand("validate", "check a JSON algebra file");
    validate->add_option("file", validate_path, "algebra file")->required();

    RunConfig cfg;
    std::string field_mode;
    auto* entropy = app.add_subcommand("entropy", "entropy sweep over a t grid, CSV output");
    auto* source = entropy->add_option_group("source");
    source->add_option("--instance", cfg.instance, "zoo instance");
    source->add_option("--algebra", cfg.algebra_path, "algebra JSON file");
    source->require_option(1);
    entropy->add_option("--functor", cfg.functor, "word such as stwist:P1 or ptwist:E;shift:1");
    entropy->add_option("--tmin", cfg.tmin);
    entropy->add_option("--tmax", cfg.tmax);
    entropy->add_option("--tstep", cfg.tstep);
    entropy->add_option("--nmax", cfg.n_max);
    entropy->add_option("--tailk", cfg.tail_k);
    entropy->add_option("--field", field_mode, "q (rationals) or p (prime field)")->check(CLI::IsMember({"q", "p"}));
    entropy->add_option("--csv", cfg.csv_path, "output path, - for stdout")->required();
    entropy->add_option("--svg", cfg.svg_path, "optional SVG plot");
    entropy->add_option("--seed", cfg.seed);

    std::string verify_instance;
    int verify_nmax = 20;
    auto* verify = app.add_subcommand("verify", "per-theorem verdicts for a zoo instance");
    verify->add_option("--instance", verify_instance)->required();
    verify->add_option("--nmax", verify_nmax);

    std::string kt_instance, kt_functor;
    auto* ktheory = app.add_subcommand("ktheory", "Euler form, functor matrix and spectrum as JSON");
    ktheory->add_option("--instance", kt_instance)->required();
    ktheory->add_option("--functor", kt_functor);

    auto* zoo = app.add_subcommand("zoo", "list or emit zoo instances");
    zoo->require_subcommand(1);
    auto* zoo_list = zoo->add_subcommand("list", "list instances");
    std::string emit_name;
    auto* zoo_emit = zoo->add_subcommand("emit", "print an instance's algebra as JSON");
    zoo_emit->add_option("name", emit_name)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*validate) return cmd_validate(validate_path, std::cout, std::cerr);
        if (*entropy) {
            if (!field_mode.empty()) cfg.field = field_mode[0];
            return cmd_entropy(cfg, std::cout, std::cerr);
        }
        if (*verify) return cmd_verify(verify_instance, verify_nmax, std::cout, std::cerr);
        if (*ktheory) return cmd_ktheory(kt_instance, kt_functor, std::cout, std::cerr);
        if (*zoo_list) return cmd_zoo_list(std::cout);
        if (*zoo_emit) return cmd_zoo_emit(emit_name, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
