#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cthecke/hecke.hpp"
#include "cthecke/tableau.hpp"
#include "cthecke/verify.hpp"

namespace {

constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kHardCap = 8;

std::optional<cthecke::SkewShape> parse_shape_or_complain(const std::string& text) {
    auto shape = cthecke::SkewShape::parse(text);
    if (!shape) std::cerr << "cannot parse shape '" << text << "'; expected e.g. \"(1,4,3)\" or \"(1,4,3)/(1,2)\"\n";
    return shape;
}

int cmd_enumerate(const std::string& shape_text) {
    auto shape = parse_shape_or_complain(shape_text);
    if (!shape) return kExitUsage;
    auto tableaux = cthecke::enumerate_sct(*shape);
    for (const auto& t : tableaux) std::cout << t.to_string() << "\n";
    std::cout << "count " << tableaux.size() << "\n";
    return 0;
}

int cmd_classes(const std::string& shape_text, bool dot, bool json) {
    auto shape = parse_shape_or_complain(shape_text);
    if (!shape) return kExitUsage;
    auto classes = cthecke::partition_classes(*shape);
    long long total = 0;
    for (const auto& e : classes) total += e.size();

    nlohmann::json doc;
    doc["schema"] = 1;
    doc["shape"] = shape->to_string();
    doc["total_sct"] = total;
    nlohmann::json records = nlohmann::json::array();
    for (size_t k = 0; k < classes.size(); ++k) {
        const auto& e = classes[k];
        int max_rank = 0;
        for (int s = 0; s < e.size(); ++s) max_rank = std::max(max_rank, e.rank(s));
        std::vector<int> profile(max_rank + 1, 0);
        for (int s = 0; s < e.size(); ++s) ++profile[e.rank(s)];

        nlohmann::json rec{{"class_id", k},
                           {"size", e.size()},
                           {"source", e.source().to_string()},
                           {"sink", e.sink().to_string()},
                           {"rank_profile", profile},
                           {"edges", e.covers().size()},
                           {"interval",
                            {{"from", cthecke::column_word(e.source()).to_string()},
                             {"to", cthecke::column_word(e.sink()).to_string()}}}};
        if (dot) rec["dot"] = e.to_dot("class_" + std::to_string(k));
        records.push_back(std::move(rec));
    }
    doc["classes"] = std::move(records);

    if (json) {
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    for (size_t k = 0; k < classes.size(); ++k) {
        const auto& rec = doc["classes"][k];
        std::cout << "class " << k << ": size " << rec["size"] << ", edges " << rec["edges"] << "\n";
        std::cout << "  source " << rec["source"].get<std::string>() << "\n";
        std::cout << "  sink   " << rec["sink"].get<std::string>() << "\n";
        std::cout << "  ranks  " << rec["rank_profile"].dump() << "\n";
        std::cout << "  interval [" << rec["interval"]["from"].get<std::string>() << ", "
                  << rec["interval"]["to"].get<std::string>() << "]\n";
    }
    std::cout << "total " << total << " tableaux in " << classes.size() << " classes\n";
    if (dot)
        for (size_t k = 0; k < classes.size(); ++k) std::cout << classes[k].to_dot("class_" + std::to_string(k));
    return 0;
}

int cmd_verify(int max_n, int ceiling, const std::string& suite, std::uint64_t seed,
               const std::string& shape_text, const std::string& out_path, bool timings) {
    if (const char* env = std::getenv("CTHECKE_MAX_N")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) ceiling = std::min<long>(ceiling, v);
    }
    ceiling = std::min(ceiling, kHardCap);
    if (max_n > ceiling) {
        std::cerr << "requested size " << max_n << " exceeds the configured ceiling " << ceiling << "\n";
        return kExitUsage;
    }

    cthecke::VerifyScope scope;
    scope.max_n = max_n;
    scope.seed = seed;
    if (!shape_text.empty()) {
        auto shape = parse_shape_or_complain(shape_text);
        if (!shape) return kExitUsage;
        scope.shape = *shape;
    }

    nlohmann::json report = cthecke::run_verification(scope, {suite}, timings);
    if (out_path.empty()) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot open '" << out_path << "' for writing\n";
            return kExitUsage;
        }
        out << report.dump(2) << "\n";
    }
    return cthecke::report_passed(report) ? 0 : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"standard composition tableaux, their 0-Hecke class modules, and mechanical certificates"};
    app.require_subcommand(1);

    std::string shape_text;
    auto* enumerate = app.add_subcommand("enumerate", "list the standard composition tableaux of a shape");
    enumerate->add_option("shape", shape_text, "shape, e.g. \"(1,4,3)\" or \"(1,4,3)/(1,2)\"")->required();

    std::string classes_shape;
    bool dot = false, json = false;
    auto* classes = app.add_subcommand("classes", "decompose a shape into equivalence-class posets");
    classes->add_option("shape", classes_shape, "shape to decompose")->required();
    classes->add_flag("--dot", dot, "emit a DOT Hasse diagram per class");
    classes->add_flag("--json", json, "emit the records as JSON");

    int max_n = 5, ceiling = 6;
    std::string suite = "all", verify_shape, out_path;
    std::uint64_t seed = 0;
    bool timings = false;
    auto* verify = app.add_subcommand("verify", "run verification sweeps and emit a JSON report");
    verify->add_option("--max-n", max_n, "run sweeps over all straight shapes of size up to N")
        ->check(CLI::Range(1, kHardCap));
    verify->add_option("--ceiling", ceiling, "configured sweep ceiling (hard cap 8)")->check(CLI::Range(1, kHardCap));
    verify->add_option("--suite", suite, "endo, poset, dominance, qsym or all")
        ->check(CLI::IsMember({"endo", "poset", "dominance", "qsym", "all"}));
    verify->add_option("--seed", seed, "seed for the randomized property samples");
    verify->add_option("--shape", verify_shape, "verify one explicit (possibly skew) shape instead of a sweep");
    verify->add_option("--out", out_path, "write the JSON report to a file instead of stdout");
    verify->add_flag("--timings", timings, "attach wall-clock timings (breaks byte-identical output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(shape_text);
        if (classes->parsed()) return cmd_classes(classes_shape, dot, json);
        return cmd_verify(max_n, ceiling, suite, seed, verify_shape, out_path, timings);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
}
