// sigmafix command line: parse group/automorphism descriptors, run the
// deciders, print verdicts with their citation traces.
//
// exit codes: 0 ok, 1 usage error, 2 query answered Unknown, 3 internal error

#include <chrono>
#include <ctime>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sigmafix/fixpoint.hpp"
#include "sigmafix/json_io.hpp"
#include "sigmafix/oracle.hpp"
#include "sigmafix/sigma.hpp"

namespace {

using namespace sigmafix;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitInternal = 3;

struct GlobalOptions {
    bool jsonOutput = false;
    bool noTimestamp = false;
};

std::string isoTimestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    return buf;
}

void emitJson(json doc, const GlobalOptions& opts) {
    doc["schema"] = jsonio::kSchemaVersion;
    if (!opts.noTimestamp) doc["timestamp"] = isoTimestamp();
    std::cout << doc.dump(2) << "\n";
}

void printTrace(const sigma::Trace& trace) {
    for (const sigma::RuleApplication& s : trace.steps) {
        std::cout << "  [" << s.ruleId << "] " << s.citation;
        if (!s.note.empty()) std::cout << " — " << s.note;
        std::cout << "\n";
    }
}

IntVec perGeneratorValues(const grouprep::Abelianization& ab,
                          const charsphere::CharClass& cls) {
    IntVec out(ab.generatorImages.cols());
    for (std::size_t j = 0; j < out.size(); ++j) {
        Int acc = 0;
        for (std::size_t i = 0; i < ab.group.freeRank; ++i)
            acc += cls.direction()[i] * ab.generatorImages.at(i, j);
        out[j] = acc;
    }
    return out;
}

std::string vecToString(const IntVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
    os << ")";
    return os.str();
}

int verdictExit(const sigma::Verdict& v) {
    return v.isUnknown() ? kExitUnknown : kExitOk;
}

void printVerdict(const sigma::Verdict& v, const grouprep::GroupDesc* witnessGroup) {
    std::cout << "verdict: " << sigma::answerName(v.answer) << "\n";
    if (v.isUnknown() && !v.unknownReason.empty())
        std::cout << "reason: " << v.unknownReason << "\n";
    if (v.witnessClass) {
        std::cout << "witness class: " << v.witnessClass->toString() << "\n";
        if (witnessGroup) {
            grouprep::Abelianization ab = grouprep::abelianize(*witnessGroup);
            if (v.witnessClass->domainRank() == ab.group.freeRank)
                std::cout << "witness chi per generator: "
                          << vecToString(perGeneratorValues(ab, *v.witnessClass)) << "\n";
        }
    }
    if (!v.witnessNote.empty()) std::cout << "witness: " << v.witnessNote << "\n";
    std::cout << "trace:\n";
    printTrace(v.trace);
}

charsphere::CharClass classFromGeneratorValues(const grouprep::GroupDesc& g,
                                               const IntVec& values) {
    grouprep::Abelianization ab = grouprep::abelianize(g);
    if (values.size() != ab.generatorImages.cols())
        throw MismatchedGroups("expected one value per generator (" +
                               std::to_string(ab.generatorImages.cols()) + ")");
    zlattice::IntMatrix f = ab.freeImages();
    zlattice::IntMatrix v(1, values.size());
    for (std::size_t j = 0; j < values.size(); ++j) v.at(0, j) = values[j];
    zlattice::IntMatrix c = v * zlattice::rightInverseOfSurjection(f);
    if (!(c * f == v))
        throw MismatchedGroups("generator values are inconsistent with the abelianization");
    return charsphere::CharClass::of(c.row(0));
}

IntVec parseIntList(const std::string& text) {
    IntVec out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw ParseError("empty entry in integer list");
        out.emplace_back(item);
    }
    if (out.empty()) throw ParseError("empty integer list");
    return out;
}

sigma::Flavor parseFlavor(const std::string& name) {
    if (name == "homotopical") return sigma::Flavor::Homotopical;
    if (name == "homological") return sigma::Flavor::Homological;
    throw ParseError("flavor must be homotopical or homological");
}

// ---------------------------------------------------------------- abelianize

int cmdAbelianize(const std::string& file, const GlobalOptions& opts) {
    grouprep::GroupDesc g = jsonio::loadGroup(file);
    grouprep::Abelianization ab = grouprep::abelianize(g);
    if (opts.jsonOutput) {
        json doc{{"type", "abelianization"},
                 {"group", jsonio::toJson(g)},
                 {"abelianization", jsonio::toJson(ab.group)},
                 {"generatorImages", jsonio::toJson(ab.generatorImages)}};
        emitJson(doc, opts);
        return kExitOk;
    }
    std::cout << "group: " << g.displayName() << "\n";
    std::cout << "abelianization: " << ab.group.toString() << "\n";
    const auto names = g.generatorNames();
    for (std::size_t j = 0; j < ab.generatorImages.cols(); ++j) {
        std::cout << "  " << names[j] << " -> "
                  << vecToString(ab.generatorImages.column(j)) << "\n";
    }
    return kExitOk;
}

// -------------------------------------------------------------------- sigma1

int cmdSigma1(const std::string& file, const std::string& classText, unsigned n,
              const std::string& flavorText, bool assumeConjecture,
              const GlobalOptions& opts) {
    grouprep::GroupDesc g = jsonio::loadGroup(file);
    sigma::Options sopt;
    sopt.assumeArtinConjecture = assumeConjecture;
    const sigma::Flavor flavor = parseFlavor(flavorText);

    if (!classText.empty()) {
        charsphere::CharClass cls = classFromGeneratorValues(g, parseIntList(classText));
        sigma::Verdict v = sigma::membershipN(g, cls, n, flavor, sopt);
        if (opts.jsonOutput) {
            json doc{{"type", "membership"},
                     {"group", jsonio::toJson(g)},
                     {"class", jsonio::toJson(cls)},
                     {"n", n},
                     {"flavor", flavorText},
                     {"result", jsonio::verdictToJson(v)}};
            emitJson(doc, opts);
        } else {
            std::cout << "group: " << g.displayName() << "\n";
            std::cout << "query: [" << cls.toString() << "] in "
                      << sigma::sigmaSymbol(flavor, n) << "?\n";
            printVerdict(v, &g);
        }
        return verdictExit(v);
    }

    sigma::Sigma1Result r = sigma::sigmaN(g, n, flavor, sopt);
    if (opts.jsonOutput) {
        json doc{{"type", "sigmaDescription"},
                 {"group", jsonio::toJson(g)},
                 {"n", n},
                 {"flavor", flavorText},
                 {"description", jsonio::sigmaDescriptionToJson(r.desc)},
                 {"trace", jsonio::traceToJson(r.trace)}};
        emitJson(doc, opts);
    } else {
        std::cout << "group: " << g.displayName() << "\n";
        std::cout << sigma::sigmaSymbol(flavor, n) << ": " << r.desc.toString() << "\n";
        std::cout << "trace:\n";
        printTrace(r.trace);
    }
    return r.desc.kind == sigma::Sigma1Description::Kind::Unknown ? kExitUnknown : kExitOk;
}

// ------------------------------------------------------------------ fix-type

int cmdFixType(const std::string& file, unsigned n, const std::string& flavorText,
               bool forceGeneral, bool forceFiniteOrder, const GlobalOptions& opts) {
    fixpoint::AutTriple t = jsonio::loadAutTriple(file);
    fixpoint::EngineConfig cfg = fixpoint::EngineConfig::fromEnvironment();
    fixpoint::PathPolicy policy = fixpoint::PathPolicy::Auto;
    if (forceGeneral) policy = fixpoint::PathPolicy::ForceGeneral;
    if (forceFiniteOrder) policy = fixpoint::PathPolicy::ForceFiniteOrder;
    const sigma::Flavor flavor = parseFlavor(flavorText);

    sigma::Verdict v = fixpoint::fixTypeDirectProduct(t, n, flavor, cfg, policy);
    if (opts.jsonOutput) {
        json doc{{"type", "fixType"},
                 {"triple", jsonio::toJson(t)},
                 {"n", n},
                 {"flavor", flavorText},
                 {"result", jsonio::verdictToJson(v)}};
        emitJson(doc, opts);
    } else {
        std::cout << "automorphism: " << fixpoint::psiLabel(t.psi) << " on "
                  << t.h.displayName() << " x " << t.a.toString() << "\n";
        std::cout << "query: Fix phi of type " << sigma::typeSymbol(flavor, n) << "?\n";
        printVerdict(v, nullptr);
    }
    return verdictExit(v);
}

// --------------------------------------------------------------------- fgfpa

int cmdFgfpa(const std::string& hFile, const std::string& aFile,
             const std::string& psiFile, unsigned n, const std::string& flavorText,
             bool assertExhaustive, const GlobalOptions& opts) {
    grouprep::GroupDesc h = jsonio::loadGroup(hFile);
    grouprep::GroupDesc aDesc = jsonio::loadGroup(aFile);
    if (!aDesc.is<grouprep::AbelianDesc>())
        throw ParseError("the A file must describe an abelian group");
    zlattice::FgAbelian a = aDesc.get<grouprep::AbelianDesc>().group;
    std::vector<fixpoint::PsiSpec> psis = jsonio::loadPsiList(psiFile, h);
    fixpoint::EngineConfig cfg = fixpoint::EngineConfig::fromEnvironment();
    const sigma::Flavor flavor = parseFlavor(flavorText);

    sigma::Verdict v =
        fixpoint::fgfpaWitnessSearch(h, a, psis, n, flavor, cfg, assertExhaustive);
    if (opts.jsonOutput) {
        json doc{{"type", "fgfpa"},
                 {"h", jsonio::toJson(h)},
                 {"a", jsonio::toJson(a)},
                 {"n", n},
                 {"flavor", flavorText},
                 {"result", jsonio::verdictToJson(v)}};
        emitJson(doc, opts);
    } else {
        std::cout << "query: does " << h.displayName() << " x " << a.toString()
                  << " have F" << n << "FPa (" << flavorText << ")?\n";
        printVerdict(v, &h);
    }
    return verdictExit(v);
}

// -------------------------------------------------------------------- oracle

int cmdOracleFreeWitness(std::size_t rank, const std::string& chiText,
                         std::size_t radius, const GlobalOptions& opts) {
    IntVec values = parseIntList(chiText);
    if (values.size() != rank) throw ParseError("chi must list one value per generator");
    charsphere::Character chi = charsphere::Character::rank1(values);
    auto w = oracle::freeSigma1Witness(rank, chi, radius);
    grouprep::GroupDesc f = grouprep::GroupDesc::free(rank);
    const auto names = f.generatorNames();
    if (opts.jsonOutput) {
        json doc{{"type", "freeWitness"}, {"rank", rank}, {"chi", chiText}};
        if (w) {
            doc["found"] = true;
            doc["from"] = jsonio::toJson(w->from, names);
            doc["to"] = jsonio::toJson(w->to, names);
            doc["dipVertex"] = jsonio::toJson(w->dipVertex, names);
        } else {
            doc["found"] = false;
        }
        emitJson(doc, opts);
        return kExitOk;
    }
    if (!w) {
        std::cout << "no disconnection certificate found\n";
        return kExitOk;
    }
    std::cout << "disconnection certificate for chi = " << vecToString(values) << ":\n";
    std::cout << "  u = " << w->from.toString(names) << " (chi >= 0)\n";
    std::cout << "  v = " << w->to.toString(names) << " (chi >= 0)\n";
    std::cout << "  geodesic passes " << w->dipVertex.toString(names) << " with chi < 0\n";
    return kExitOk;
}

int cmdOracleDihedral(unsigned long m, bool all, const GlobalOptions& opts) {
    json rows = json::array();
    bool clean = true;
    const unsigned long lo = all ? 3 : m, hi = all ? 12 : m;
    for (unsigned long label = lo; label <= hi; ++label) {
        oracle::DihedralReport r = oracle::dihedralExhaust(label);
        clean = clean && r.clean();
        if (opts.jsonOutput) {
            rows.push_back(json{{"label", r.label},
                                {"patterns", r.patternsChecked},
                                {"mismatches", r.mismatches}});
        } else {
            std::cout << "m=" << label << ": " << r.patternsChecked << " patterns, "
                      << r.mismatches << " mismatch(es)\n";
            for (const std::string& note : r.mismatchNotes) std::cout << "  " << note << "\n";
        }
    }
    if (opts.jsonOutput) emitJson(json{{"type", "dihedralExhaust"}, {"reports", rows}}, opts);
    return clean ? kExitOk : kExitInternal;
}

int cmdOracleAbelianize(const std::string& file, const GlobalOptions& opts) {
    grouprep::GroupDesc g = jsonio::loadGroup(file);
    zlattice::FgAbelian viaRows = oracle::abelianizationRowReduce(g);
    zlattice::FgAbelian main = grouprep::abelianize(g).group;
    if (opts.jsonOutput) {
        emitJson(json{{"type", "abelianizationReferee"},
                      {"rowReduced", jsonio::toJson(viaRows)},
                      {"combinatorial", jsonio::toJson(main)},
                      {"agree", viaRows == main}},
                 opts);
    } else {
        std::cout << "row-reduced: " << viaRows.toString() << "\n";
        std::cout << "combinatorial: " << main.toString() << "\n";
        std::cout << (viaRows == main ? "agree\n" : "MISMATCH\n");
    }
    return viaRows == main ? kExitOk : kExitInternal;
}

// ----------------------------------------------------------- reproduce-paper

#include "reproduce.inc"

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sigma-invariant decision engine for fixed-subgroup finiteness"};
    app.require_subcommand(1);
    GlobalOptions opts;
    app.add_flag("--no-timestamp", opts.noTimestamp,
                 "omit the timestamp field from JSON output");

    std::string file, classText, flavorText = "homotopical";
    unsigned n = 1;
    bool assumeConjecture = false;

    auto* abelianizeCmd = app.add_subcommand("abelianize", "abelianization of a group file");
    abelianizeCmd->add_option("file", file)->required();
    abelianizeCmd->add_flag("--json", opts.jsonOutput);

    auto* sigmaCmd =
        app.add_subcommand("sigma1", "Sigma description or membership for a group file");
    sigmaCmd->add_option("file", file)->required();
    sigmaCmd->add_option("--class", classText,
                         "comma-separated character values, one per generator");
    sigmaCmd->add_option("--n", n, "Sigma^n level (default 1)");
    sigmaCmd->add_option("--flavor", flavorText, "homotopical|homological");
    sigmaCmd->add_flag("--assume-artin-conjecture", assumeConjecture,
                       "apply the living-subgraph criterion outside its hypothesis "
                       "(taints the trace)");
    sigmaCmd->add_flag("--json", opts.jsonOutput);

    bool forceGeneral = false, forceFiniteOrder = false;
    auto* fixCmd = app.add_subcommand("fix-type",
                                      "finiteness type of Fix phi for a triple file");
    fixCmd->add_option("file", file)->required();
    fixCmd->add_option("--n", n, "F_n / FP_n level")->required();
    fixCmd->add_option("--flavor", flavorText, "homotopical|homological");
    fixCmd->add_flag("--force-general", forceGeneral, "skip the shortcut corollaries");
    fixCmd->add_flag("--force-finite-order", forceFiniteOrder,
                     "insist on the finite-order shortcut");
    fixCmd->add_flag("--json", opts.jsonOutput);

    std::string aFile, psiFile;
    bool assertExhaustive = false;
    auto* fgfpaCmd = app.add_subcommand(
        "fgfpa", "does H x A have the fixed-subgroup finiteness property?");
    fgfpaCmd->add_option("hfile", file)->required();
    fgfpaCmd->add_option("afile", aFile)->required();
    fgfpaCmd->add_option("psilist", psiFile)->required();
    fgfpaCmd->add_option("--n", n, "F_n / FP_n level");
    fgfpaCmd->add_option("--flavor", flavorText, "homotopical|homological");
    fgfpaCmd->add_flag("--assert-exhaustive", assertExhaustive,
                       "record the assumption that the psi list is exhaustive");
    fgfpaCmd->add_flag("--json", opts.jsonOutput);

    auto* oracleCmd = app.add_subcommand("oracle", "brute-force referees");
    std::size_t rank = 2, radius = 6;
    std::string chiText;
    auto* freeW = oracleCmd->add_subcommand("free-witness",
                                            "geodesic disconnection certificate");
    freeW->add_option("--rank", rank, "free group rank")->required();
    freeW->add_option("--chi", chiText, "comma-separated values on the generators")
        ->required();
    freeW->add_option("--radius", radius, "search radius (default 6)");
    freeW->add_flag("--json", opts.jsonOutput);

    unsigned long label = 4;
    bool allLabels = false;
    auto* dihedralW = oracleCmd->add_subcommand("dihedral",
                                                "living subgraph vs the closed form");
    dihedralW->add_option("--m", label, "edge label");
    dihedralW->add_flag("--all", allLabels, "labels 3..12");
    dihedralW->add_flag("--json", opts.jsonOutput);

    auto* abelW = oracleCmd->add_subcommand("abelianize",
                                            "row-reduction abelianization referee");
    abelW->add_option("file", file)->required();
    abelW->add_flag("--json", opts.jsonOutput);

    auto* reproduceCmd =
        app.add_subcommand("reproduce-paper", "re-derive the published worked examples");
    reproduceCmd->add_flag("--json", opts.jsonOutput);

    for (CLI::App* sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (CLI::App* nested : sub->get_subcommands({})) nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (abelianizeCmd->parsed()) return cmdAbelianize(file, opts);
        if (sigmaCmd->parsed())
            return cmdSigma1(file, classText, n, flavorText, assumeConjecture, opts);
        if (fixCmd->parsed())
            return cmdFixType(file, n, flavorText, forceGeneral, forceFiniteOrder, opts);
        if (fgfpaCmd->parsed())
            return cmdFgfpa(file, aFile, psiFile, n, flavorText, assertExhaustive, opts);
        if (oracleCmd->parsed()) {
            if (freeW->parsed()) return cmdOracleFreeWitness(rank, chiText, radius, opts);
            if (dihedralW->parsed()) return cmdOracleDihedral(label, allLabels, opts);
            if (abelW->parsed()) return cmdOracleAbelianize(file, opts);
            std::cerr << "oracle: choose free-witness, dihedral or abelianize\n";
            return kExitUsage;
        }
        if (reproduceCmd->parsed()) return cmdReproducePaper(opts);
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
