#include "tkc/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <limits>
#include <ostream>

#include "tkc/graph.hpp"
#include "tkc/result.hpp"
#include "tkc/topk.hpp"

namespace tkc {

namespace {

std::string formatScore(double score) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.12g", score);
    return buffer;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    RunConfig config;
    CLI::App app{"Exact top-k closeness and harmonic centrality", "tkc"};
    app.add_option("--input", config.input, "edge list file")->required();
    app.add_flag("--directed", config.directed, "read arcs as directed");
    app.add_option("--k", config.k, "number of nodes to report (ties included)")
        ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
    app.add_option("--variant", config.variant, "pruning strategy")
        ->check(CLI::IsMember({"degcut", "degbound", "nbcut", "nbbound", "auto", "textbook"}));
    app.add_option("--measure", config.measure, "centrality measure")
        ->check(CLI::IsMember({"closeness", "harmonic"}));
    app.add_option("--output", config.output, "output format")
        ->check(CLI::IsMember({"tsv", "json"}));
    app.add_flag("--stats", config.stats, "print run statistics as JSON on stderr");
    app.add_option("--threads", config.threads, "worker threads")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exitOk : exitUsage;
    }

    const Variant variant = *parseVariant(config.variant);
    const Measure measure =
        config.measure == "harmonic" ? Measure::Harmonic : Measure::Closeness;

    Graph g;
    try {
        g = readEdgeListFile(config.input, config.directed);
    } catch (const std::exception &e) {
        err << "error: " << config.input << ": " << e.what() << '\n';
        return exitFailure;
    }

    const auto start = std::chrono::steady_clock::now();
    TopKOptions options;
    options.threads = config.threads;
    const TopKResult result = topk(g, config.k, variant, measure, options);
    const auto elapsed = std::chrono::duration<double, std::milli>(
        std::chrono::steady_clock::now() - start);

    if (config.output == "json") {
        nlohmann::ordered_json doc;
        doc["k"] = config.k;
        doc["measure"] = std::string(toString(measure));
        doc["variant"] = std::string(toString(variant));
        doc["entries"] = nlohmann::ordered_json::array();
        for (const auto &e : result.entries)
            doc["entries"].push_back({{"rank", e.rank}, {"label", e.label}, {"score", e.score}});
        out << doc.dump(2) << '\n';
    } else {
        for (const auto &e : result.entries)
            out << e.rank << '\t' << e.label << '\t' << formatScore(e.score) << '\n';
    }

    if (config.stats) {
        nlohmann::ordered_json stats;
        stats["n"] = g.numberOfNodes();
        stats["m"] = g.numberOfEdges();
        stats["k"] = config.k;
        stats["variant"] = std::string(toString(variant));
        stats["measure"] = std::string(toString(measure));
        stats["m_vis"] = result.visitedArcs;
        const double factor = improvementFactor(result, g);
        if (std::isfinite(factor))
            stats["improvement_factor"] = factor;
        else
            stats["improvement_factor"] = nullptr;
        stats["n_pruned"] = result.prunedCount;
        stats["wall_ms"] = elapsed.count();
        err << stats.dump() << '\n';
    }
    return exitOk;
}

} // namespace tkc
