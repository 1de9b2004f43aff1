#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lpmln/aspgen.hpp"
#include "lpmln/equiv.hpp"
#include "lpmln/parser.hpp"
#include "lpmln/verdict_json.hpp"

namespace fs = std::filesystem;
using namespace lpmln;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

WeightedProgram load_program(const std::string& path, int max_atoms) {
    WeightedProgram p = parse_program(read_file(path));
    if (p.signature().size() > max_atoms)
        throw std::runtime_error(path + ": " + std::to_string(p.signature().size()) +
                                 " atoms exceeds the enumeration bound of " +
                                 std::to_string(max_atoms) +
                                 " (override with --max-atoms)");
    return p;
}

std::string format_probability(const SoftDistribution& d, Interpretation x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", d.probability(x));
    return buf;
}

void print_verdict(const Verdict& v, const std::string& label) {
    if (v.equivalent) {
        std::cout << label << ": equivalent";
        if (v.c_tw) std::cout << ", c = " << v.c_tw->str();
        std::cout << "\n";
        return;
    }
    std::cout << label << ": NOT equivalent";
    if (v.witness) {
        if (const auto* wm = std::get_if<WeightMismatch>(&*v.witness)) {
            std::cout << " (weight mismatch at X = " << to_string(wm->x, v.sig)
                      << ": TW_F = " << wm->tw_f.str() << ", TW_G = " << wm->tw_g.str()
                      << ")";
        } else if (const auto* ri = std::get_if<ReductInequivalence>(&*v.witness)) {
            std::cout << " (witness X = " << to_string(ri->x, v.sig);
            if (ri->countermodel)
                std::cout << ", Y = " << to_string(*ri->countermodel, v.sig);
            std::cout << ")";
        } else if (const auto* dm = std::get_if<DistributionMismatch>(&*v.witness)) {
            std::cout << " (distributions differ at X = " << to_string(dm->x, v.sig)
                      << ")";
        }
    }
    std::cout << "\n";
}

int report_verdict(const Verdict& v, const std::string& label, bool json) {
    if (json)
        std::cout << to_json(v).dump(2) << "\n";
    else
        print_verdict(v, label);
    return v.equivalent ? 0 : 1;
}

StructuralMethod parse_method(const std::string& name) {
    if (name == "reduct") return StructuralMethod::Reduct;
    if (name == "choice") return StructuralMethod::ChoiceReduct;
    if (name == "ht") return StructuralMethod::SoftHT;
    if (name == "delta-x") return StructuralMethod::DeltaPerX;
    if (name == "delta-choice") return StructuralMethod::DeltaChoice;
    throw CLI::ValidationError("--method", "unknown method '" + name + "'");
}

int run_models(const WeightedProgram& p, bool json) {
    auto models = soft_stable_models(p);
    if (json) {
        nlohmann::json j = nlohmann::json::array();
        for (auto x : models) j.push_back(to_json(x, p.signature()));
        std::cout << j.dump(2) << "\n";
    } else {
        for (auto x : models) std::cout << to_string(x, p.signature()) << "\n";
    }
    return 0;
}

int run_prob(const WeightedProgram& p, bool json) {
    SoftDistribution d = distribution(p);
    if (json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& e : d.support()) {
            j.push_back({{"model", to_json(e.model, p.signature())},
                         {"weight", to_json(e.weight)},
                         {"probability_exact", d.probability_exact(e.model)},
                         {"probability", d.probability(e.model)}});
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& e : d.support()) {
            std::cout << to_string(e.model, p.signature()) << "  "
                      << d.probability_exact(e.model) << "  "
                      << format_probability(d, e.model) << "\n";
        }
    }
    return 0;
}

int run_ht(const WeightedProgram& p, bool json) {
    const Signature& sig = p.signature();
    nlohmann::json rows = nlohmann::json::array();
    Bits top = Bits(1) << sig.size();
    for (Bits x = 0; x < top; ++x) {
        std::vector<Bits> subs;
        for (Bits y = x;; y = (y - 1) & x) {
            subs.push_back(y);
            if (y == 0) break;
        }
        // ascending "here" within each "there" for a stable row order
        for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
            HTInterpretation i{{*it}, {x}};
            bool yes = is_soft_ht_model(i, p);
            if (json)
                rows.push_back({{"here", to_json(i.here, sig)},
                                {"there", to_json(i.there, sig)},
                                {"soft_ht_model", yes}});
            else
                std::cout << to_string(i, sig) << "  " << (yes ? "Yes" : "No") << "\n";
        }
    }
    if (json) std::cout << rows.dump(2) << "\n";
    return 0;
}

int run_emit(const WeightedProgram& pf, const WeightedProgram& pg,
             const std::string& fstem, const std::string& gstem,
             const std::string& dir, bool to_stdout) {
    auto [c1, c2] = find_w_expression(pf, pg);
    if (!c1.is_integer())
        throw NonIntegerWeightError(c1.str());

    AspDocument p = emit_weight_program(pf, pg, /*fix_empty=*/true);
    auto [pstar_soft, pstar_hard] = emit_weight_check(pf, pg, c1.num(), c2);
    auto [p1, p2] = emit_delta_programs(pf, pg);

    std::string pair = fstem + "_" + gstem;
    std::vector<std::pair<std::string, const AspDocument*>> files = {
        {pair + ".P.lp", &p},
        {pair + ".Pstar_soft.lp", &pstar_soft},
        {pair + ".Pstar_hard.lp", &pstar_hard},
        {pair + ".P1ss.lp", &p1},
        {pair + ".P2ss.lp", &p2},
    };
    if (to_stdout) {
        for (const auto& [name, doc] : files)
            std::cout << "%%% file: " << name << "\n" << doc->text();
        return 0;
    }
    fs::create_directories(dir);
    for (const auto& [name, doc] : files) {
        std::ofstream out(fs::path(dir) / name);
        out << doc->text();
    }
    std::cout << "wrote " << files.size() << " files to " << dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LP^MLN semantics and equivalence toolkit"};
    app.require_subcommand(1);

    std::string file_f, file_g, method = "reduct", emit_dir = ".";
    bool json = false, to_stdout = false;
    int max_atoms = 20, trials = 0;
    std::uint64_t seed = 1;

    auto add_common = [&](CLI::App* cmd, bool two_inputs) {
        cmd->add_option("F", file_f, "program file (.lpmln)")->required();
        if (two_inputs) cmd->add_option("G", file_g, "second program file")->required();
        cmd->add_flag("--json", json, "machine-readable output");
        cmd->add_option("--max-atoms", max_atoms, "enumeration bound override");
    };

    auto* models = app.add_subcommand("models", "list soft stable models");
    add_common(models, false);
    auto* prob = app.add_subcommand("prob", "exact probability distribution");
    add_common(prob, false);
    auto* ht = app.add_subcommand("ht", "soft HT model grid");
    add_common(ht, false);
    auto* weak = app.add_subcommand("check-weak", "compare distributions");
    add_common(weak, true);
    auto* structural = app.add_subcommand("check-structural", "structural equivalence");
    add_common(structural, true);
    structural->add_option("--method", method,
                           "reduct|choice|ht|delta-x|delta-choice|all");
    auto* strong = app.add_subcommand("check-strong", "strong equivalence");
    add_common(strong, true);
    strong->add_option("--trials", trials, "cross-validate with N random contexts");
    strong->add_option("--seed", seed, "falsifier RNG seed");
    auto* emit = app.add_subcommand("emit-asp", "emit solver documents");
    add_common(emit, true);
    emit->add_option("--emit-dir", emit_dir, "output directory");
    emit->add_flag("--stdout", to_stdout, "concatenate documents to stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        WeightedProgram pf = load_program(file_f, max_atoms);
        if (*models) return run_models(pf, json);
        if (*prob) return run_prob(pf, json);
        if (*ht) return run_ht(pf, json);

        WeightedProgram pg = load_program(file_g, max_atoms);
        if (*weak) return report_verdict(check_weak(pf, pg), "weak equivalence", json);
        if (*structural) {
            if (method == "all") {
                // run every method and surface any internal disagreement
                Verdict first = check_structural(pf, pg, StructuralMethod::Reduct);
                for (auto m : {StructuralMethod::ChoiceReduct, StructuralMethod::SoftHT,
                               StructuralMethod::DeltaPerX, StructuralMethod::DeltaChoice}) {
                    Verdict v = check_structural(pf, pg, m);
                    if (v.equivalent != first.equivalent)
                        throw std::logic_error("structural methods disagree");
                }
                return report_verdict(first, "structural equivalence (all methods)",
                                      json);
            }
            return report_verdict(check_structural(pf, pg, parse_method(method)),
                                  "structural equivalence", json);
        }
        if (*strong) {
            Verdict v = check_strong(pf, pg);
            if (trials > 0) {
                auto hit = randomized_context_falsifier(pf, pg, trials, seed);
                if (hit && v.equivalent)
                    throw std::logic_error(
                        "falsifier found a context contradicting check-strong");
                if (!json && hit)
                    std::cout << "falsifier: mismatch at X = "
                              << to_string(hit->x,
                                           Signature::unite(pf.signature(),
                                                            pg.signature()))
                              << "\n";
            }
            return report_verdict(v, "strong equivalence", json);
        }
        if (*emit) {
            auto stem = [](const std::string& p) { return fs::path(p).stem().string(); };
            return run_emit(pf, pg, stem(file_f), stem(file_g), emit_dir, to_stdout);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
