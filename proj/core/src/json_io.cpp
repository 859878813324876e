#include "sigmafix/json_io.hpp"

#include <fstream>

namespace sigmafix::jsonio {

using charsphere::CharClass;
using fixpoint::AutTriple;
using fixpoint::PsiSpec;
using grouprep::GroupDesc;
using grouprep::LabeledEdge;
using grouprep::LabeledGraph;
using grouprep::Word;
using zlattice::FgAbelian;
using zlattice::IntMatrix;

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

void expectObject(const json& j, const char* what) {
    if (!j.is_object()) fail(std::string(what) + ": object expected");
}

}  // namespace

json toJson(const Int& v) {
    if (v.fits_slong_p()) return json(static_cast<long long>(v.get_si()));
    return json(v.get_str());
}

Int intFromJson(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Int(j.get<std::string>());
    fail("integer or decimal string expected");
}

json toJson(const IntMatrix& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) entries.push_back(toJson(m.at(i, j)));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

IntMatrix matrixFromJson(const json& j) {
    expectObject(j, "matrix");
    const std::size_t rows = j.at("rows").get<std::size_t>();
    const std::size_t cols = j.at("cols").get<std::size_t>();
    const json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows * cols)
        fail("matrix entries must be a row-major array of rows*cols integers");
    IntMatrix m(rows, cols);
    std::size_t k = 0;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = intFromJson(entries[k++]);
    return m;
}

json toJson(const FgAbelian& a) {
    json torsion = json::array();
    for (const Int& t : a.torsion) torsion.push_back(toJson(t));
    return json{{"freeRank", a.freeRank}, {"torsion", torsion}};
}

FgAbelian fgAbelianFromJson(const json& j) {
    expectObject(j, "abelian group");
    IntVec torsion;
    for (const json& t : j.at("torsion")) torsion.push_back(intFromJson(t));
    return FgAbelian(j.at("freeRank").get<std::size_t>(), torsion);
}

json toJson(const Word& w, const std::vector<std::string>& generatorNames) {
    json out = json::array();
    for (const grouprep::Letter& l : w.letters()) {
        json name = l.generator < generatorNames.size() ? json(generatorNames[l.generator])
                                                        : json(l.generator);
        out.push_back(json::array({name, l.exponent}));
    }
    return out;
}

Word wordFromJson(const json& j, const std::vector<std::string>& generatorNames) {
    if (!j.is_array()) fail("word: array of [generator, exponent] pairs expected");
    std::vector<grouprep::Letter> letters;
    for (const json& entry : j) {
        if (!entry.is_array() || entry.size() != 2)
            fail("word letter: [generator, exponent] expected");
        std::size_t gen = 0;
        if (entry[0].is_string()) {
            const std::string name = entry[0].get<std::string>();
            auto it = std::find(generatorNames.begin(), generatorNames.end(), name);
            if (it == generatorNames.end()) fail("unknown generator name: " + name);
            if (std::count(generatorNames.begin(), generatorNames.end(), name) > 1)
                fail("ambiguous generator name: " + name);
            gen = static_cast<std::size_t>(it - generatorNames.begin());
        } else {
            gen = entry[0].get<std::size_t>();
        }
        letters.push_back({gen, entry[1].get<long>()});
    }
    return Word::fromLetters(std::move(letters));
}

json toJson(const CharClass& c) {
    json out = json::array();
    for (const Int& v : c.direction()) out.push_back(toJson(v));
    return out;
}

CharClass classFromJson(const json& j) {
    if (!j.is_array()) fail("character class: integer array expected");
    IntVec v;
    for (const json& e : j) v.push_back(intFromJson(e));
    return CharClass::of(v);
}

json toJson(const GroupDesc& g) {
    return std::visit(
        [&](const auto& d) -> json {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, grouprep::FreeDesc>) {
                return json{{"kind", "free"}, {"rank", d.rank}};
            } else if constexpr (std::is_same_v<T, grouprep::AbelianDesc>) {
                return json{{"kind", "abelian"},
                            {"freeRank", d.group.freeRank},
                            {"torsion", toJson(d.group)["torsion"]}};
            } else if constexpr (std::is_same_v<T, grouprep::ArtinDesc>) {
                json edges = json::array();
                for (const LabeledEdge& e : d.graph.edges())
                    edges.push_back(json::array({e.u, e.v, e.label}));
                return json{{"kind", "artin"},
                            {"graph", json{{"vertices", d.graph.vertices()},
                                           {"edges", edges}}}};
            } else if constexpr (std::is_same_v<T, grouprep::DirectProductDesc>) {
                return json{{"kind", "directProduct"},
                            {"left", toJson(*d.left)},
                            {"right", toJson(*d.right)}};
            } else if constexpr (std::is_same_v<T, grouprep::FiniteIndexOverDesc>) {
                return json{{"kind", "finiteIndexOver"},
                            {"inner", toJson(*d.inner)},
                            {"indexNote", d.indexNote}};
            } else {
                json complement = json::array();
                for (const CharClass& c : d.sigma1Complement) complement.push_back(toJson(c));
                json out{{"kind", "tableBacked"},
                         {"name", d.name},
                         {"abelianization", toJson(d.abelianization)},
                         {"generatorNames", d.generatorNames},
                         {"generatorImages", toJson(d.generatorImages)},
                         {"sigma1Complement", complement},
                         {"provenanceNote", d.provenanceNote}};
                if (d.center) out["center"] = toJson(*d.center);
                return out;
            }
        },
        g.data());
}

GroupDesc groupFromJson(const json& j) {
    expectObject(j, "group");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "free") return GroupDesc::free(j.at("rank").get<std::size_t>());
    if (kind == "abelian") {
        IntVec torsion;
        for (const json& t : j.at("torsion")) torsion.push_back(intFromJson(t));
        return GroupDesc::abelian(FgAbelian(j.at("freeRank").get<std::size_t>(), torsion));
    }
    if (kind == "artin") {
        const json& graph = j.at("graph");
        std::vector<std::string> vertices =
            graph.at("vertices").get<std::vector<std::string>>();
        std::vector<LabeledEdge> edges;
        for (const json& e : graph.at("edges")) {
            if (!e.is_array() || e.size() != 3) fail("edge: [u, v, label] expected");
            edges.push_back({e[0].get<std::string>(), e[1].get<std::string>(),
                             e[2].get<unsigned long>()});
        }
        return GroupDesc::artin(LabeledGraph(std::move(vertices), std::move(edges)));
    }
    if (kind == "directProduct")
        return GroupDesc::directProduct(groupFromJson(j.at("left")),
                                        groupFromJson(j.at("right")));
    if (kind == "finiteIndexOver")
        return GroupDesc::finiteIndexOver(groupFromJson(j.at("inner")),
                                          j.value("indexNote", std::string()));
    if (kind == "tableBacked") {
        grouprep::TableBackedDesc t;
        t.name = j.at("name").get<std::string>();
        t.abelianization = fgAbelianFromJson(j.at("abelianization"));
        t.generatorNames = j.at("generatorNames").get<std::vector<std::string>>();
        t.generatorImages = matrixFromJson(j.at("generatorImages"));
        for (const json& c : j.at("sigma1Complement"))
            t.sigma1Complement.push_back(classFromJson(c));
        t.provenanceNote = j.at("provenanceNote").get<std::string>();
        if (j.contains("center") && !j.at("center").is_null())
            t.center = fgAbelianFromJson(j.at("center"));
        return GroupDesc::tableBacked(std::move(t));
    }
    fail("unknown group kind: " + kind);
}

json toJson(const PsiSpec& psi, const GroupDesc& h) {
    const std::vector<std::string> names = h.generatorNames();
    return std::visit(
        [&](const auto& p) -> json {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, fixpoint::PsiIdentity>) {
                return json{{"kind", "identity"}};
            } else if constexpr (std::is_same_v<T, fixpoint::PsiGraphAut>) {
                return json{{"kind", "graphAut"}, {"images", p.images}};
            } else if constexpr (std::is_same_v<T, fixpoint::PsiConjugation>) {
                return json{{"kind", "conjugation"}, {"word", toJson(p.conjugator, names)}};
            } else {
                json fix{{"sub", toJson(p.fix.sub)},
                         {"generatorWords", json::array()}};
                for (const Word& w : p.fix.generatorWords)
                    fix["generatorWords"].push_back(toJson(w, names));
                json out{{"kind", "opaque"},
                         {"fix", fix},
                         {"provenanceNote", p.provenanceNote}};
                if (p.declaredOrder) out["declaredOrder"] = *p.declaredOrder;
                return out;
            }
        },
        psi);
}

PsiSpec psiFromJson(const json& j, const GroupDesc& h) {
    expectObject(j, "psi");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "identity") return fixpoint::PsiIdentity{};
    if (kind == "graphAut") {
        fixpoint::PsiGraphAut p;
        p.images = j.at("images").get<std::map<std::string, std::string>>();
        return p;
    }
    if (kind == "conjugation")
        return fixpoint::PsiConjugation{wordFromJson(j.at("word"), h.generatorNames())};
    if (kind == "opaque") {
        const json& fix = j.at("fix");
        grouprep::SubgroupEmbedding emb{groupFromJson(fix.at("sub")), h, {}};
        for (const json& w : fix.at("generatorWords"))
            emb.generatorWords.push_back(wordFromJson(w, h.generatorNames()));
        emb.validate();
        std::optional<unsigned long> declaredOrder;
        if (j.contains("declaredOrder") && !j.at("declaredOrder").is_null())
            declaredOrder = j.at("declaredOrder").get<unsigned long>();
        return fixpoint::PsiOpaque{std::move(emb),
                                   j.value("provenanceNote", std::string()), declaredOrder};
    }
    fail("unknown psi kind: " + kind);
}

json toJson(const AutTriple& t) {
    return json{{"schema", kSchemaVersion}, {"type", "autTriple"},
                {"h", toJson(t.h)},        {"a", toJson(t.a)},
                {"alpha", toJson(t.alpha)}, {"gamma", toJson(t.gamma)},
                {"psi", toJson(t.psi, t.h)}};
}

AutTriple autTripleFromJson(const json& j) {
    expectObject(j, "autTriple");
    GroupDesc h = groupFromJson(j.at("h"));
    FgAbelian a = fgAbelianFromJson(j.at("a"));
    IntMatrix alpha = matrixFromJson(j.at("alpha"));
    IntMatrix gamma = matrixFromJson(j.at("gamma"));
    PsiSpec psi = psiFromJson(j.at("psi"), h);
    return fixpoint::makeAutTriple(std::move(h), std::move(a), std::move(alpha),
                                   std::move(gamma), std::move(psi));
}

std::vector<PsiSpec> psiListFromJson(const json& j, const GroupDesc& h) {
    const json& list = j.is_array() ? j : j.at("psiList");
    std::vector<PsiSpec> out;
    for (const json& entry : list) out.push_back(psiFromJson(entry, h));
    return out;
}

json traceToJson(const sigma::Trace& t) {
    json out = json::array();
    for (const sigma::RuleApplication& s : t.steps)
        out.push_back(json{{"ruleId", s.ruleId}, {"citation", s.citation}, {"note", s.note}});
    return out;
}

json verdictToJson(const sigma::Verdict& v) {
    json out{{"answer", sigma::answerName(v.answer)}, {"trace", traceToJson(v.trace)}};
    if (!v.unknownReason.empty()) out["unknownReason"] = v.unknownReason;
    json witness = json::object();
    if (v.witnessClass) witness["class"] = toJson(*v.witnessClass);
    if (v.witnessVector) {
        json vec = json::array();
        for (const Int& x : *v.witnessVector) vec.push_back(toJson(x));
        witness["vector"] = vec;
    }
    if (!v.witnessNote.empty()) witness["note"] = v.witnessNote;
    if (!witness.empty()) out["witness"] = witness;
    return out;
}

json sigmaDescriptionToJson(const sigma::Sigma1Description& d) {
    using Kind = sigma::Sigma1Description::Kind;
    json out;
    switch (d.kind) {
        case Kind::WholeSphere: out["kind"] = "wholeSphere"; break;
        case Kind::EmptySet: out["kind"] = "emptySet"; break;
        case Kind::SphereMinusFiniteSet: out["kind"] = "sphereMinusFiniteSet"; break;
        case Kind::FiniteSet: out["kind"] = "finiteSet"; break;
        case Kind::ByPredicate: out["kind"] = "byPredicate"; break;
        default:
            out["kind"] = "unknown";
            out["reason"] = d.unknownReason;
            break;
    }
    if (!d.classes.empty()) {
        json classes = json::array();
        for (const CharClass& c : d.classes) classes.push_back(toJson(c));
        out["classes"] = classes;
    }
    if (d.conjectural) out["conjectural"] = true;
    return out;
}

json loadDocument(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(path + ": " + e.what());
    }
    if (j.is_object() && j.contains("schema")) {
        const json& v = j.at("schema");
        if (!v.is_number_integer() || v.get<int>() != kSchemaVersion)
            fail(path + ": unsupported schema version");
    }
    return j;
}

GroupDesc loadGroup(const std::string& path) {
    json j = loadDocument(path);
    if (j.contains("group")) return groupFromJson(j.at("group"));
    return groupFromJson(j);
}

AutTriple loadAutTriple(const std::string& path) {
    return autTripleFromJson(loadDocument(path));
}

std::vector<PsiSpec> loadPsiList(const std::string& path, const GroupDesc& h) {
    return psiListFromJson(loadDocument(path), h);
}

}  // namespace sigmafix::jsonio
