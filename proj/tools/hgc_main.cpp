// Batch command-line front end. Every verb reads hg-format inputs,
// prints "<name> = <value>" report lines (exact integers, rationals as
// "p/q"), and exits 0 on success, 1 on a domain error, 2 on a budget
// error, 64 on a usage error. --json mirrors the report as one object.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hgc/algorithms.hpp"
#include "hgc/basis.hpp"
#include "hgc/canonical.hpp"
#include "hgc/counting.hpp"
#include "hgc/families.hpp"
#include "hgc/interpolate.hpp"
#include "hgc/invariants.hpp"
#include "hgc/rational.hpp"
#include "hgc/selftest.hpp"
#include "hgc/tensor.hpp"

namespace {

using namespace hgc;

/// Deterministic report: ordered name/value lines plus optional verbatim
/// text blocks (serialized hypergraphs, decompositions, parameters).
struct Report {
    std::vector<std::pair<std::string, std::string>> lines;
    std::vector<std::string> blocks;

    void add(const std::string& name, std::uint64_t v) {
        lines.emplace_back(name, std::to_string(v));
    }
    void add(const std::string& name, const Rational& v) {
        lines.emplace_back(name, formatRational(v));
    }
    void add(const std::string& name, const std::string& v) {
        lines.emplace_back(name, v);
    }

    void print(bool json) const {
        if (!json) {
            for (const auto& [name, value] : lines)
                std::cout << name << " = " << value << '\n';
            for (const auto& block : blocks) std::cout << block;
            return;
        }
        nlohmann::json j = nlohmann::json::object();
        for (const auto& [name, value] : lines) j[name] = value;
        if (!blocks.empty()) {
            j["blocks"] = nlohmann::json::array();
            for (const auto& block : blocks) j["blocks"].push_back(block);
        }
        std::cout << j.dump(2) << '\n';
    }
};

std::string readFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Hypergraph readHypergraph(const std::string& path, Report& report) {
    ParseResult parsed = parseHypergraph(readFile(path));
    for (const auto& w : parsed.warnings)
        std::cerr << path << ": " << w << '\n';
    (void)report;
    return parsed.hypergraph;
}

MorphismKind parseMorphismKind(const std::string& name) {
    if (name == "hom") return MorphismKind::Hom;
    if (name == "emb") return MorphismKind::Emb;
    if (name == "stremb") return MorphismKind::StrEmb;
    if (name == "trimhom") return MorphismKind::TrimHom;
    if (name == "trimemb") return MorphismKind::TrimEmb;
    if (name == "strtrimemb") return MorphismKind::StrTrimEmb;
    throw DomainError("unknown morphism kind '" + name + "'");
}

bool parsePatternKind(const std::string& name, PatternKind& out) {
    if (name == "sub") out = PatternKind::Sub;
    else if (name == "indsub") out = PatternKind::IndSub;
    else if (name == "trimsub") out = PatternKind::TrimSub;
    else if (name == "indtrimsub") out = PatternKind::IndTrimSub;
    else return false;
    return true;
}

ExpansionKind parseExpansionKind(const std::string& name) {
    if (name == "emb") return ExpansionKind::Emb;
    if (name == "stremb") return ExpansionKind::StrEmb;
    if (name == "sub") return ExpansionKind::Sub;
    if (name == "indsub") return ExpansionKind::IndSub;
    if (name == "trimemb") return ExpansionKind::TrimEmb;
    if (name == "trimstremb") return ExpansionKind::TrimStrEmb;
    if (name == "trimsub") return ExpansionKind::TrimSub;
    if (name == "trimindsub") return ExpansionKind::TrimIndSub;
    throw DomainError("unknown expansion kind '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypergraph pattern counting toolkit"};
    app.require_subcommand(1);

    bool json = false;
    std::uint64_t mapBudget = kDefaultMapBudget;
    int rankBudget = kDefaultRankBudget;
    app.add_flag("--json", json, "mirror the report as one JSON object");
    app.add_option("--map-budget", mapBudget,
                   "cap on enumerated assignments (default 10^9)");
    app.add_option("--rank-budget", rankBudget,
                   "cap on edge rank in tensor products (default 5)");

    std::string kindName = "hom", patternPath, hostPath, inputPath;
    std::string firstPath, secondPath, targetPath, motifPath, basisName = "hom";
    std::string familyName, gadgetType, levelName = "fast";
    int kParam = 0, nParam = 0, mParam = 0, rParam = 0, uParam = 0, cParam = 0;
    std::string basePath;

    auto* count = app.add_subcommand("count", "count morphisms or patterns");
    count->add_option("--kind", kindName,
                      "hom|emb|stremb|trimhom|trimemb|strtrimemb|"
                      "sub|indsub|trimsub|indtrimsub");
    count->add_option("--pattern", patternPath)->required();
    count->add_option("--host", hostPath)->required();

    auto* expand = app.add_subcommand(
        "expand", "expand a counting function into its basis");
    expand->add_option("--kind", kindName)->required();
    expand->add_option("--pattern", patternPath)->required();

    auto* evaluate = app.add_subcommand(
        "evaluate", "evaluate a motif parameter file against a host");
    evaluate->add_option("--motif", motifPath)->required();
    evaluate->add_option("--basis", basisName, "hom|trimhom");
    evaluate->add_option("--host", hostPath)->required();

    auto* invariants = app.add_subcommand(
        "invariants", "fractional and integral cover and independence numbers");
    invariants->add_option("--input", inputPath)->required();

    auto* tensor = app.add_subcommand("tensor", "tensor product of two hosts");
    tensor->add_option("--first", firstPath)->required();
    tensor->add_option("--second", secondPath)->required();

    auto* interpolate = app.add_subcommand(
        "interpolate",
        "recover Hom(F, G) from pattern counts of H by interpolation");
    interpolate->add_option("--kind", kindName, "sub|indsub");
    interpolate->add_option("--pattern", patternPath)->required();
    interpolate->add_option("--target", targetPath)->required();
    interpolate->add_option("--host", hostPath)->required();

    auto* quasipoly = app.add_subcommand(
        "quasipoly", "induced sub-hypergraph count via cover assignments");
    quasipoly->add_option("--pattern", patternPath)->required();
    quasipoly->add_option("--host", hostPath)->required();

    auto* trimcount = app.add_subcommand(
        "trimcount", "induced trimmed copies of b_k by type counting");
    trimcount->add_option("--k", kParam)->required();
    trimcount->add_option("--host", hostPath)->required();

    auto* gadget = app.add_subcommand("gadget", "hardness constructions");
    gadget->add_option("--type", gadgetType, "clique|gi|cn|refute")
        ->required();
    gadget->add_option("--host", hostPath);
    gadget->add_option("--first", firstPath);
    gadget->add_option("--second", secondPath);
    gadget->add_option("--input", inputPath);
    gadget->add_option("--pattern", patternPath);
    gadget->add_option("--k", kParam);
    gadget->add_option("--n", nParam);

    auto* generate = app.add_subcommand("generate", "named hypergraph families");
    generate->add_option("--family", familyName,
                         "single_vertex|b_k|sunflower|h_nk|grohe_marx|"
                         "disjoint_edges|hat_of_graph")
        ->required();
    generate->add_option("--k", kParam);
    generate->add_option("--n", nParam);
    generate->add_option("--m", mParam);
    generate->add_option("--r", rParam);
    generate->add_option("--u", uParam);
    generate->add_option("--c", cParam);
    generate->add_option("--base", basePath);

    auto* decompose = app.add_subcommand(
        "decompose", "co-independent path decomposition and its width");
    decompose->add_option("--input", inputPath)->required();

    auto* selftest = app.add_subcommand("selftest", "verification suites");
    selftest->add_option("--level", levelName, "fast|full");

    // accept the global flags after the verb as well
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }

    Report report;
    try {
        if (count->parsed()) {
            Hypergraph h = readHypergraph(patternPath, report);
            Hypergraph g = readHypergraph(hostPath, report);
            PatternKind pk;
            if (parsePatternKind(kindName, pk))
                report.add(kindName, countPatterns(pk, h, g, mapBudget));
            else
                report.add(kindName, countMorphisms(parseMorphismKind(kindName),
                                                    h, g, mapBudget));
        } else if (expand->parsed()) {
            Hypergraph h = readHypergraph(patternPath, report);
            MotifParameter gamma = expansion(parseExpansionKind(kindName), h);
            report.blocks.push_back(serializeMotifParameter(gamma));
        } else if (evaluate->parsed()) {
            MotifParameter gamma = parseMotifParameter(readFile(motifPath));
            Hypergraph g = readHypergraph(hostPath, report);
            MorphismKind basis = parseMorphismKind(basisName);
            if (basis != MorphismKind::Hom && basis != MorphismKind::TrimHom)
                throw DomainError("evaluate: basis must be hom or trimhom");
            report.add("value", hgc::evaluate(gamma, g, basis, mapBudget));
        } else if (invariants->parsed()) {
            Hypergraph h = readHypergraph(inputPath, report);
            report.add("rho_star",
                       fractionalInvariant(FractionalKind::RhoStar, h));
            report.add("alpha_star",
                       fractionalInvariant(FractionalKind::AlphaStar, h));
            report.add("rho", integralInvariant(IntegralKind::Rho, h));
            report.add("alpha", integralInvariant(IntegralKind::Alpha, h));
            report.add("sigma_star", sigmaStar(h));
            if (h.numVertices() <= 15)
                report.add("treewidth", static_cast<std::uint64_t>(
                                            treewidthExact(h)));
        } else if (tensor->parsed()) {
            Hypergraph a = readHypergraph(firstPath, report);
            Hypergraph b = readHypergraph(secondPath, report);
            report.blocks.push_back(
                serializeHypergraph(tensorProduct(a, b, rankBudget)));
        } else if (interpolate->parsed()) {
            if (kindName == "hom") kindName = "sub";
            ExpansionKind kind = parseExpansionKind(kindName);
            Hypergraph h = readHypergraph(patternPath, report);
            Hypergraph f = readHypergraph(targetPath, report);
            Hypergraph g = readHypergraph(hostPath, report);
            PatternKind pk = kind == ExpansionKind::Sub ? PatternKind::Sub
                                                        : PatternKind::IndSub;
            std::uint64_t homs = homsFromPatternOracle(
                kind, h, f,
                [&](const Hypergraph& host) {
                    return countPatterns(pk, h, host, mapBudget);
                },
                g);
            report.add("hom", homs);
        } else if (quasipoly->parsed()) {
            Hypergraph h = readHypergraph(patternPath, report);
            Hypergraph g = readHypergraph(hostPath, report);
            report.add("indsub", indsubQuasipoly(h, g, mapBudget));
        } else if (trimcount->parsed()) {
            Hypergraph g = readHypergraph(hostPath, report);
            report.add("indtrimsub", indtrimsubBk(kParam, g));
        } else if (gadget->parsed()) {
            if (gadgetType == "clique") {
                if (hostPath.empty() || kParam == 0)
                    throw DomainError("gadget clique needs --host and --k");
                Hypergraph g = readHypergraph(hostPath, report);
                CliqueGadget built = cliqueGadget(g, kParam);
                report.add("cliques",
                           countPatterns(PatternKind::Sub, built.pattern,
                                         built.host, mapBudget));
                report.blocks.push_back(serializeHypergraph(built.pattern));
                report.blocks.push_back(serializeHypergraph(built.host));
            } else if (gadgetType == "gi") {
                if (firstPath.empty() || secondPath.empty())
                    throw DomainError("gadget gi needs --first and --second");
                Hypergraph a = readHypergraph(firstPath, report);
                Hypergraph b = readHypergraph(secondPath, report);
                report.add("isomorphic",
                           static_cast<std::uint64_t>(giGadget(a, b) ? 1 : 0));
            } else if (gadgetType == "cn") {
                if (inputPath.empty())
                    throw DomainError("gadget cn needs --input");
                CNGadget built = cnGadget(parseCNInstance(readFile(inputPath)));
                report.add("colourful_neighbourhoods", built.count);
            } else if (gadgetType == "refute") {
                if (patternPath.empty() || nParam == 0)
                    throw DomainError("gadget refute needs --pattern and --n");
                Hypergraph h = readHypergraph(patternPath, report);
                RefutationReport r = refuteHomBasisWitness(h, nParam);
                report.add("trimhom", r.trimHomCount);
                report.add("indtrimsub", r.indTrimSubCount);
                report.add("hom_vanishes",
                           static_cast<std::uint64_t>(r.homVanishes ? 1 : 0));
                report.add("checked_vertex_cap",
                           static_cast<std::uint64_t>(r.checkedVertexCap));
                report.blocks.push_back(serializeHypergraph(r.witness));
            } else {
                throw DomainError("unknown gadget type '" + gadgetType + "'");
            }
        } else if (generate->parsed()) {
            FamilySpec spec;
            spec.family = parseFamily(familyName);
            switch (spec.family) {
                case Family::SingleVertex:
                    break;
                case Family::Bk:
                    spec.params = {kParam};
                    break;
                case Family::Sunflower:
                    spec.params = {uParam, cParam, mParam};
                    break;
                case Family::Hnk:
                    spec.params = {nParam, kParam};
                    break;
                case Family::GroheMarx:
                    spec.params = {nParam};
                    break;
                case Family::DisjointEdges:
                    spec.params = {mParam, rParam};
                    break;
                case Family::HatOfGraph:
                    if (basePath.empty())
                        throw DomainError("hat_of_graph needs --base");
                    spec.base = readHypergraph(basePath, report);
                    break;
            }
            report.blocks.push_back(serializeHypergraph(hgc::generate(spec)));
        } else if (decompose->parsed()) {
            Hypergraph h = readHypergraph(inputPath, report);
            TreeDecomposition d = coindependentDecomposition(h);
            std::string issue = validateDecomposition(d, h);
            if (!issue.empty())
                throw std::logic_error("invalid decomposition: " + issue);
            report.add("sigma_star", sigmaStar(h));
            report.add("width",
                       decompositionWidth(d, h, WidthFunction::RhoStarOfBag));
            report.blocks.push_back(serializeDecomposition(d));
        } else if (selftest->parsed()) {
            if (levelName != "fast" && levelName != "full")
                throw DomainError("selftest level must be fast or full");
            bool ok = true;
            for (const auto& suite :
                 runSelftest(levelName == "full" ? SelftestLevel::Full
                                                 : SelftestLevel::Fast)) {
                report.add(suite.name,
                           (suite.passed ? "pass: " : "FAIL: ") + suite.detail);
                ok = ok && suite.passed;
            }
            report.print(json);
            return ok ? 0 : 1;
        }
    } catch (const BudgetError& e) {
        std::cerr << "budget error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 1;
    }

    report.print(json);
    return 0;
}
