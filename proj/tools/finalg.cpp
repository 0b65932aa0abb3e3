#include <fstream>
#include <iostream>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "finalg/config.hpp"
#include "finalg/error.hpp"
#include "finalg/report.hpp"

using namespace finalg;

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::validation, "cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw error(errc::validation, std::string("config parse error in ") + path + ": " +
                                          e.what());
    }
    return j;
}

Instance instance_from_config(const json& cfg) {
    RingPtr r = ring_from_config(cfg.at("ring"));
    ModulePtr m = module_from_config(r, cfg.at("module"));
    Instance inst;
    inst.ring = r;
    inst.module = m;
    inst.id = r->label + "|" + m->label;
    inst.recipe = cfg.dump();
    std::string kind = cfg.at("module").at("kind").get<std::string>();
    inst.tag_free = kind == "regular" || kind == "free";
    inst.tag_projective = inst.tag_free;
    return inst;
}

CorpusSpec corpus_from_config(const json& cfg) {
    CorpusSpec s;
    if (cfg.contains("corpus")) {
        const json& c = cfg.at("corpus");
        s.cyclic_max = c.value("cyclic_max", s.cyclic_max);
        s.ring_order_max = c.value("ring_order_max", s.ring_order_max);
        s.module_order_max = c.value("module_order_max", s.module_order_max);
        s.free_rank_max = c.value("free_rank_max", s.free_rank_max);
        s.include_matrix = c.value("include_matrix", s.include_matrix);
        s.include_quotients = c.value("include_quotients", s.include_quotients);
    }
    return s;
}

int run(int argc, char** argv) {
    CLI::App app{"finite-algebra engine: submodule radicals, the radical formula, "
                 "2-primality, and counterexample hunting"};
    app.require_subcommand(1);

    std::string config_path, out_path, filter_csv, corrupt_claim, target_name;
    int jobs = 1, budget = -1, max_ring_size = -1;

    auto* check = app.add_subcommand("check", "full analysis of one ring+module config");
    check->add_option("config", config_path, "config file")->required();

    auto* verify = app.add_subcommand("verify", "run the claim suite over a corpus");
    verify->add_option("config", config_path, "config file (optional corpus spec)");
    verify->add_option("--filter", filter_csv, "comma-separated claim ids");
    verify->add_option("--out", out_path, "write line-delimited verdict records here");
    verify->add_option("--jobs", jobs, "parallelism degree");
    verify->add_option("--max-ring-size", max_ring_size, "override corpus ring order bound");
    verify->add_option("--corrupt-claim", corrupt_claim,
                       "negate this claim's conclusion (failure-path testing)");

    auto* hunt_cmd = app.add_subcommand("hunt", "search for counterexample candidates");
    hunt_cmd->add_option("target", target_name, "Q1 | Q2 | RF_NOT_2PRIMAL | INCLUSION3_FAIL")
        ->required();
    hunt_cmd->add_option("config", config_path, "config file (optional corpus spec)");
    hunt_cmd->add_option("--budget", budget, "max instances examined");
    hunt_cmd->add_option("--out", out_path, "write findings records here");
    hunt_cmd->add_option("--jobs", jobs, "parallelism degree");
    hunt_cmd->add_option("--max-ring-size", max_ring_size, "override corpus ring order bound");

    auto* lattice = app.add_subcommand("lattice", "submodule lattice with Hasse cover edges");
    lattice->add_option("config", config_path, "config file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (check->parsed()) {
        json cfg = load_json(config_path);
        Analysis a(instance_from_config(cfg));
        write_check_report(std::cout, a);
        if (cfg.contains("submodule_generators")) {
            SubSet gens(a.M().order);
            for (const auto& g : cfg.at("submodule_generators")) {
                int e = g.get<int>();
                if (e < 0 || e >= a.M().order)
                    throw error(errc::validation, "submodule generator out of range");
                gens.set(e);
            }
            Submodule n = submodule_generated(a.inst().module, gens);
            int i = a.submodule_index(n.members);
            std::cout << "focus: generators " << gens.str() << " generate submodule " << i
                      << " = " << n.members.str() << "\n";
        }
        return 0;
    }

    if (lattice->parsed()) {
        Analysis a(instance_from_config(load_json(config_path)));
        write_lattice(std::cout, a);
        return 0;
    }

    if (verify->parsed()) {
        json cfg = config_path.empty() ? json::object() : load_json(config_path);
        CorpusSpec spec = corpus_from_config(cfg);
        if (max_ring_size > 0) spec.ring_order_max = max_ring_size;
        std::set<std::string> filter;
        if (cfg.contains("filter"))
            for (const auto& f : cfg.at("filter")) filter.insert(f.get<std::string>());
        if (!filter_csv.empty()) {
            std::size_t pos = 0;
            while (pos != std::string::npos) {
                std::size_t next = filter_csv.find(',', pos);
                filter.insert(filter_csv.substr(pos, next - pos));
                pos = next == std::string::npos ? next : next + 1;
            }
        }
        SuiteReport rep = run_suite(generate_corpus(spec), filter, corrupt_claim);
        rep.corpus_desc = "cyclic<=" + std::to_string(spec.cyclic_max) +
                          ",ring<=" + std::to_string(spec.ring_order_max) +
                          ",module<=" + std::to_string(spec.module_order_max);
        write_suite_report(std::cout, rep);
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            write_suite_records(out, rep);
        }
        return rep.clean() ? 0 : 1;
    }

    if (hunt_cmd->parsed()) {
        auto target = hunt_target_from_name(target_name);
        if (!target) throw error(errc::validation, "unknown hunt target: " + target_name);
        json cfg = config_path.empty() ? json::object() : load_json(config_path);
        CorpusSpec spec = corpus_from_config(cfg);
        if (max_ring_size > 0) spec.ring_order_max = max_ring_size;
        if (budget < 0 && cfg.contains("budget")) budget = cfg.at("budget").get<int>();
        Findings f = hunt(*target, spec, budget, jobs);
        write_findings(std::cout, f);
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            write_findings_records(out, f);
        }
        return 0; // empty findings is a valid outcome
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == errc::internal ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
