#include "jetcover/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "jetcover/covers.hpp"
#include "jetcover/invariants.hpp"
#include "jetcover/io.hpp"
#include "jetcover/jets.hpp"
#include "jetcover/verify.hpp"

namespace jetcover {

namespace {

struct Limits {
    int maxHochsterVertices = 16;
    int maxS = 6;
    int maxK = 8;
};

/// Reads resource bounds from the file named by JETCOVER_CONFIG, if set.
Limits loadLimits() {
    Limits limits;
    const char* path = std::getenv("JETCOVER_CONFIG");
    if (!path || !*path) return limits;
    std::ifstream in(path);
    if (!in) throw DomainError(std::string("cannot read config file: ") + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw DomainError(std::string("bad config JSON: ") + e.what());
    }
    limits.maxHochsterVertices = j.value("maxHochsterVertices", limits.maxHochsterVertices);
    limits.maxS = j.value("maxS", limits.maxS);
    limits.maxK = j.value("maxK", limits.maxK);
    return limits;
}

struct Options {
    std::string input;
    std::string inlineJson;
    std::string corpus;
    std::string outPath;
    std::string format = "json";
    std::string field = "Q";
    std::string theorem;
    int s = 0;
    int k = 1;
    int maxJ = 3;
    int maxVertices = -1;
    int samples = 20;
    std::uint64_t seed = 1;
    bool decompose = false;
    bool direct = false;
};

json readInput(const Options& opt) {
    std::string text;
    if (!opt.inlineJson.empty()) {
        text = opt.inlineJson;
    } else if (!opt.input.empty()) {
        std::ifstream in(opt.input);
        if (!in) throw DomainError("cannot read input file: " + opt.input);
        std::stringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    } else {
        throw DomainError("no input: pass --input <file> or --inline <json>");
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed JSON: ") + e.what());
    }
}

void requireOrder(int s, const Limits& limits) {
    if (s < 0) throw DomainError("--s must be nonnegative");
    if (s > limits.maxS)
        throw ResourceLimitError("--s " + std::to_string(s) + " exceeds the configured bound " +
                                 std::to_string(limits.maxS));
}

std::string formalSumText(const JetGeneratorSum& sum) {
    std::string line;
    for (const auto& term : sum.terms) {
        if (!line.empty()) line += " + ";
        if (term.coeff != 1) line += std::to_string(term.coeff) + "*";
        line += to_string(term.monomial);
    }
    return line;
}

std::string coverLine(const Universe& u, VertexSet w) {
    std::string line;
    for (const auto& l : labelsOf(u, w)) {
        if (!line.empty()) line += ' ';
        line += l;
    }
    return line.empty() ? "(empty)" : line;
}

json vwcJson(const Graph& g) {
    auto result = checkVeryWellCovered(g);
    json cards = json::array();
    for (VertexSet w : result.minimalCovers) cards.push_back(w.count());
    bool allP = !result.matchings.empty() &&
                std::all_of(result.matchings.begin(), result.matchings.end(),
                            [](const MatchingWitness& m) { return m.propertyP; });
    json matchings = json::array();
    for (const auto& m : result.matchings) {
        json edges = json::array();
        for (VertexSet e : m.matching) edges.push_back(labelsOf(g.universe(), e));
        matchings.push_back(json{{"edges", edges}, {"propertyP", m.propertyP}});
    }
    return json{{"veryWellCovered", result.veryWellCovered},
                {"coverCardinalities", cards},
                {"perfectMatchings", matchings},
                {"allMatchingsSatisfyProperty", allP}};
}

int finish(const Options& opt, const std::string& payload, std::ostream& out) {
    if (!opt.outPath.empty()) {
        std::ofstream file(opt.outPath);
        if (!file) throw DomainError("cannot write output file: " + opt.outPath);
        file << payload;
        return 0;
    }
    out << payload;
    return 0;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace

int runCli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations for clutters and monomial ideals: jets, vertex covers, "
                 "symbolic powers, Stanley-Reisner invariants"};
    app.require_subcommand(1);
    Options opt;

    auto addIo = [&](CLI::App* cmd, bool withCorpus = false) {
        cmd->add_option("--input", opt.input, "input file (JSON)");
        cmd->add_option("--inline", opt.inlineJson, "inline JSON input");
        cmd->add_option("--out", opt.outPath, "write the result to a file");
        cmd->add_option("--format", opt.format, "json | text | m2-diagram")
            ->check(CLI::IsMember({"json", "text", "m2-diagram"}));
        if (withCorpus)
            cmd->add_option("--corpus", opt.corpus,
                            "process a corpus file (edge-list lines or JSON array)");
    };

    auto* covers = app.add_subcommand("covers", "minimal vertex covers of a clutter");
    addIo(covers, true);

    auto* jets = app.add_subcommand("jets", "clutter of s-jets and its generator sums");
    addIo(jets);
    jets->add_option("--s", opt.s, "jet order");

    auto* principal = app.add_subcommand("principal-jets",
                                         "principal s-jets of the edge ideal of a clutter");
    addIo(principal);
    principal->add_option("--s", opt.s, "jet order");
    principal->add_flag("--decompose", opt.decompose,
                        "emit the primary decomposition components instead");

    auto* symbolic = app.add_subcommand("symbolic-power",
                                        "symbolic power of the cover ideal of a clutter");
    addIo(symbolic);
    symbolic->add_option("--k", opt.k, "power");

    auto* polarize = app.add_subcommand("polarize", "polarization of a monomial ideal");
    addIo(polarize);
    polarize->add_option("--s", opt.s, "jet order of the target universe");

    auto* irr = app.add_subcommand("irreducible-covers",
                                   "irreducible 2-covers of a graph");
    addIo(irr, true);

    auto* vwc = app.add_subcommand("vwc-check", "very well-covered verification for a graph");
    addIo(vwc, true);

    auto* fvec = app.add_subcommand("fvector",
                                    "f-vector of the complex of a squarefree ideal");
    addIo(fvec);
    fvec->add_option("--s", opt.s, "transform to the principal-jet complex of this order");

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of the quotient");
    addIo(hilbert);
    hilbert->add_option("--s", opt.s, "transform to the principal-jet complex of this order");

    auto* betti = app.add_subcommand("betti", "graded Betti numbers of the quotient");
    addIo(betti);
    betti->add_option("--s", opt.s, "lift the table to the principal-jet quotient");
    betti->add_option("--field", opt.field, "Q or Fp:<p>");
    betti->add_flag("--direct", opt.direct,
                    "recompute on the principal-jet complex instead of transforming");
    betti->add_option("--max-vertices", opt.maxVertices,
                      "override the subset-enumeration vertex bound");

    auto* lifting = app.add_subcommand("lifting-matrix", "order-s lifting matrix");
    lifting->add_option("--s", opt.s, "jet order");
    lifting->add_option("--max-j", opt.maxJ, "last row index");
    lifting->add_option("--out", opt.outPath, "write the result to a file");
    lifting->add_option("--format", opt.format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* verify = app.add_subcommand("verify", "run a seeded oracle-equivalence suite");
    verify->add_option("--theorem", opt.theorem, "one of: thm3 thm6 thm7 thm8 thm9 lemma1 lemma2 cor3")
        ->required();
    verify->add_option("--seed", opt.seed, "random corpus seed");
    verify->add_option("--samples", opt.samples, "random corpus size");
    verify->add_option("--max-vertices", opt.maxVertices,
                       "override the subset-enumeration vertex bound");
    verify->add_option("--out", opt.outPath, "write the report to a file");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << dump(json{{"error", {{"type", "usage"}, {"message", e.what()}}}});
        return 2;
    }

    try {
        const Limits limits = loadLimits();
        const int hochsterBound =
            opt.maxVertices > 0 ? opt.maxVertices : limits.maxHochsterVertices;

        if (covers->parsed()) {
            if (!opt.corpus.empty()) {
                auto corpus = ingestGraphCorpusFile(opt.corpus);
                for (const auto& w : corpus.warnings) err << "warning: " << w << "\n";
                json results = json::array();
                for (const auto& g : corpus.graphs)
                    results.push_back(
                        coverListToJson(g.universe(), minimalVertexCovers(g.clutter())));
                return finish(opt, dump(results), out);
            }
            Clutter c = clutterFromJson(readInput(opt));
            auto list = minimalVertexCovers(c);
            if (opt.format == "json")
                return finish(opt, dump(coverListToJson(c.universe(), list)), out);
            std::string text;
            for (VertexSet w : list) text += coverLine(c.universe(), w) + "\n";
            return finish(opt, text, out);
        }

        if (jets->parsed()) {
            requireOrder(opt.s, limits);
            Clutter c = clutterFromJson(readInput(opt));
            auto jc = jetClutter(c, opt.s);
            if (opt.format == "json") return finish(opt, dump(clutterToJson(jc.jets)), out);
            std::string text;
            auto presentation = jetIdealGenerators(edgeIdeal(c), opt.s);
            for (const auto& sum : presentation.sums) text += formalSumText(sum) + "\n";
            return finish(opt, text, out);
        }

        if (principal->parsed()) {
            requireOrder(opt.s, limits);
            Clutter c = clutterFromJson(readInput(opt));
            if (opt.decompose) {
                auto d = principalJetDecomposition(c, opt.s);
                json components = json::array();
                for (VertexSet comp : d.components)
                    components.push_back(labelsOf(*d.space.jet(), comp));
                return finish(opt, dump(json{{"components", components}}), out);
            }
            auto pj = principalJets(c, opt.s);
            if (opt.format == "json") return finish(opt, dump(clutterToJson(pj.clutter)), out);
            std::string text;
            for (const auto& m : pj.generatorSequence) text += to_string(m) + "\n";
            return finish(opt, text, out);
        }

        if (symbolic->parsed()) {
            if (opt.k < 1) throw DomainError("--k must be positive");
            if (opt.k > limits.maxK)
                throw ResourceLimitError("--k " + std::to_string(opt.k) +
                                         " exceeds the configured bound " +
                                         std::to_string(limits.maxK));
            Clutter c = clutterFromJson(readInput(opt));
            auto ideal = symbolicPower(c, opt.k);
            if (opt.format == "json") return finish(opt, dump(idealToJson(ideal)), out);
            std::string text;
            for (const auto& g : ideal.generators()) text += to_string(g) + "\n";
            return finish(opt, text, out);
        }

        if (polarize->parsed()) {
            requireOrder(opt.s, limits);
            MonomialIdeal ideal = idealFromJson(readInput(opt));
            JetSpace space(ideal.universePtr(), opt.s);
            return finish(opt, dump(idealToJson(polarizeIdeal(space, ideal))), out);
        }

        if (irr->parsed()) {
            auto run = [&](const Graph& g) {
                json coversJson = json::array();
                for (const auto& m : irreducibleTwoCovers(g))
                    coversJson.push_back(kCoverToJson(g.universe(),
                                                      kCoverFromMonomial(g.clutter(), 2, m)));
                return json{{"k", 2}, {"covers", coversJson}};
            };
            if (!opt.corpus.empty()) {
                auto corpus = ingestGraphCorpusFile(opt.corpus);
                for (const auto& w : corpus.warnings) err << "warning: " << w << "\n";
                json results = json::array();
                for (const auto& g : corpus.graphs) results.push_back(run(g));
                return finish(opt, dump(results), out);
            }
            Graph g = graphFromJson(readInput(opt));
            if (opt.format == "json") return finish(opt, dump(run(g)), out);
            std::string text;
            for (const auto& m : irreducibleTwoCovers(g)) text += to_string(m) + "\n";
            return finish(opt, text, out);
        }

        if (vwc->parsed()) {
            if (!opt.corpus.empty()) {
                auto corpus = ingestGraphCorpusFile(opt.corpus);
                for (const auto& w : corpus.warnings) err << "warning: " << w << "\n";
                json results = json::array();
                for (const auto& g : corpus.graphs) results.push_back(vwcJson(g));
                return finish(opt, dump(results), out);
            }
            return finish(opt, dump(vwcJson(graphFromJson(readInput(opt)))), out);
        }

        if (fvec->parsed()) {
            requireOrder(opt.s, limits);
            auto ideal = idealFromJson(readInput(opt));
            auto f = fVector(complexFromIdeal(ideal));
            if (opt.s > 0) f = transformFVector(f, opt.s);
            return finish(opt, dump(fVectorToJson(f)), out);
        }

        if (hilbert->parsed()) {
            requireOrder(opt.s, limits);
            auto ideal = idealFromJson(readInput(opt));
            auto f = fVector(complexFromIdeal(ideal));
            if (opt.s > 0) f = transformFVector(f, opt.s);
            return finish(opt, dump(hilbertToJson(hilbertSeries(f))), out);
        }

        if (betti->parsed()) {
            requireOrder(opt.s, limits);
            auto ideal = idealFromJson(readInput(opt));
            auto field = parseField(opt.field);
            BettiTable table(field);
            if (opt.direct && opt.s > 0) {
                auto pj = principalJets(clutterOfIdeal(ideal), opt.s);
                table = bettiNumbersHochster(complexFromIdeal(pj.ideal), field, hochsterBound);
            } else {
                table = bettiNumbersHochster(complexFromIdeal(ideal), field, hochsterBound);
                if (opt.s > 0) table = transformBetti(table, opt.s);
            }
            if (opt.format == "json") return finish(opt, dump(bettiToJson(table)), out);
            return finish(opt, bettiDiagram(table), out);
        }

        if (lifting->parsed()) {
            requireOrder(opt.s, limits);
            if (opt.maxJ < 0) throw DomainError("--max-j must be nonnegative");
            auto m = liftingMatrix(opt.s, opt.maxJ);
            if (opt.format == "json") return finish(opt, dump(liftingMatrixToJson(m)), out);
            return finish(opt, liftingMatrixText(m), out);
        }

        if (verify->parsed()) {
            VerifyOptions vo;
            vo.seed = opt.seed;
            vo.randomSamples = opt.samples;
            vo.hochsterBound = hochsterBound;
            auto report = verifyTheorem(opt.theorem, vo);
            // Timing goes to stderr so that identical runs stay
            // byte-identical on stdout.
            json j = reportToJson(report);
            j.erase("elapsedMs");
            err << "verify " << report.theorem << " elapsed: " << report.elapsedMs
                << " ms\n";
            return finish(opt, dump(j), out);
        }

        throw DomainError("no subcommand selected");
    } catch (const ResourceLimitError& e) {
        err << dump(json{{"error", {{"type", "resource"}, {"message", e.what()}}}});
        return 3;
    } catch (const DomainError& e) {
        err << dump(json{{"error", {{"type", "domain"}, {"message", e.what()}}}});
        return 2;
    } catch (const InternalCheckError& e) {
        err << dump(json{{"error", {{"type", "internal"}, {"message", e.what()}}}});
        return 1;
    } catch (const std::exception& e) {
        err << dump(json{{"error", {{"type", "unexpected"}, {"message", e.what()}}}});
        return 1;
    }
}

} // namespace jetcover
