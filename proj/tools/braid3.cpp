#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "braid3/cli.hpp"

int main(int argc, char** argv) {
    braid3::CliConfig cfg;
    CLI::App app{"3-braid extremal length and entropy bounds"};
    app.require_subcommand(1);

    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_flag("--json", cfg.json, "emit JSON");
        sub->add_option("--out", cfg.out_file, "write output to a file");
    };

    auto* parse = app.add_subcommand("parse", "parse and echo a word");
    parse->add_option("--word", cfg.word, "braid word, e.g. \"s1^3 s2^-2\"");
    parse->add_option("--pure-word", cfg.pure_word, "word in a1, a2");
    add_common(parse);

    auto* normalize = app.add_subcommand("normalize", "sigma_j^k b1 d^l normal form of a braid");
    normalize->add_option("--word", cfg.word)->required();
    add_common(normalize);

    auto* syllables = app.add_subcommand("syllables", "syllable decomposition and L(w)");
    syllables->add_option("--pure-word", cfg.pure_word)->required();
    add_common(syllables);

    auto* bounds = app.add_subcommand("bounds", "two-sided extremal length bounds");
    bounds->add_option("--word", cfg.word, "braid word (normal-form route)");
    bounds->add_option("--pure-word", cfg.pure_word, "pure word (word-bounds route)");
    bounds->add_option("--boundary", cfg.boundary, "tr | pb | tr_pb | pb_tr | conjugacy");
    add_common(bounds);

    auto* entropy = app.add_subcommand("entropy", "entropy bounds and exact value");
    entropy->add_option("--pure-word", cfg.pure_word)->required();
    add_common(entropy);

    auto* enumerate = app.add_subcommand("enumerate", "rotation classes up to a degree");
    enumerate->add_option("--max-degree", cfg.max_degree);
    enumerate->add_flag("--check", cfg.check, "run the sandwich check on every class");
    add_common(enumerate);

    auto* audit = app.add_subcommand("audit", "constants and side-length audits");
    audit->add_option("--samples", cfg.samples, "samples per lemma and M");
    audit->add_option("--m-max", cfg.m_max, "largest M for the block lemmas");
    audit->add_option("--seed", cfg.seed);
    add_common(audit);

    auto* glue = app.add_subcommand("glue", "quasiconformal gluing audit");
    glue->add_option("--pure-word", cfg.pure_word)->required();
    glue->add_option("--grid-step", cfg.grid_step);
    add_common(glue);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (const char* env_seed = std::getenv("BRAID3_SEED"))
        cfg.seed = std::strtoull(env_seed, nullptr, 10);

    cfg.command = app.get_subcommands().front()->get_name();

    if (!cfg.out_file.empty()) {
        std::ofstream f(cfg.out_file);
        if (!f) {
            std::cerr << "cannot open " << cfg.out_file << "\n";
            return 2;
        }
        return braid3::run(cfg, f, std::cerr);
    }
    return braid3::run(cfg, std::cout, std::cerr);
}
