#include "sigmafix/sigma.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sigmafix::sigma {

using charsphere::CharClass;
using charsphere::Character;
using charsphere::Subsphere;
using grouprep::Abelianization;
using grouprep::GroupDesc;
using grouprep::LabeledEdge;
using grouprep::LabeledGraph;
using grouprep::Word;
using zlattice::IntMatrix;

Sigma1Description Sigma1Description::wholeSphere() {
    Sigma1Description d;
    d.kind = Kind::WholeSphere;
    return d;
}

Sigma1Description Sigma1Description::emptySet() {
    Sigma1Description d;
    d.kind = Kind::EmptySet;
    return d;
}

Sigma1Description Sigma1Description::sphereMinusFiniteSet(std::vector<CharClass> complement) {
    if (complement.empty()) return wholeSphere();
    Sigma1Description d;
    d.kind = Kind::SphereMinusFiniteSet;
    d.classes = std::move(complement);
    return d;
}

Sigma1Description Sigma1Description::finiteSet(std::vector<CharClass> members) {
    if (members.empty()) return emptySet();
    Sigma1Description d;
    d.kind = Kind::FiniteSet;
    d.classes = std::move(members);
    return d;
}

Sigma1Description Sigma1Description::byPredicate(LabeledGraph graph) {
    Sigma1Description d;
    d.kind = Kind::ByPredicate;
    d.predicateGraph = std::move(graph);
    return d;
}

Sigma1Description Sigma1Description::unknown(std::string reason) {
    Sigma1Description d;
    d.kind = Kind::Unknown;
    d.unknownReason = std::move(reason);
    return d;
}

std::optional<std::vector<CharClass>> Sigma1Description::complementIfFinite(
    std::size_t sphereRank) const {
    switch (kind) {
        case Kind::WholeSphere:
            return std::vector<CharClass>{};
        case Kind::SphereMinusFiniteSet:
            return classes;
        case Kind::EmptySet: {
            if (sphereRank == 0) return std::vector<CharClass>{};
            if (sphereRank == 1)
                return std::vector<CharClass>{CharClass::of({Int(1)}), CharClass::of({Int(-1)})};
            return std::nullopt;
        }
        case Kind::FiniteSet: {
            if (sphereRank == 0) return std::vector<CharClass>{};
            if (sphereRank == 1) {
                std::vector<CharClass> out;
                for (CharClass c : {CharClass::of({Int(1)}), CharClass::of({Int(-1)})})
                    if (std::find(classes.begin(), classes.end(), c) == classes.end())
                        out.push_back(c);
                return out;
            }
            return std::nullopt;
        }
        default:
            return std::nullopt;
    }
}

std::string Sigma1Description::toString() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::WholeSphere:
            os << "whole sphere";
            break;
        case Kind::EmptySet:
            os << "empty";
            break;
        case Kind::SphereMinusFiniteSet: {
            os << "sphere minus {";
            for (std::size_t i = 0; i < classes.size(); ++i) {
                if (i) os << ", ";
                os << classes[i].toString();
            }
            os << "}";
            break;
        }
        case Kind::FiniteSet: {
            os << "{";
            for (std::size_t i = 0; i < classes.size(); ++i) {
                if (i) os << ", ";
                os << classes[i].toString();
            }
            os << "}";
            break;
        }
        case Kind::ByPredicate:
            os << "classes whose living subgraph is connected and dominant";
            break;
        default:
            os << "unknown (" << unknownReason << ")";
            break;
    }
    if (conjectural) os << " [conjectural]";
    return os.str();
}

namespace {

bool allZero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

bool isSingleEdge(const LabeledGraph& g) {
    return g.vertexCount() == 2 && g.edgeCount() == 1;
}

std::vector<CharClass> meierEvenComplement() {
    return {CharClass::of({Int(1), Int(-1)}), CharClass::of({Int(-1), Int(1)})};
}

// A descriptor that is visibly a finitely generated abelian group.
bool isVisiblyAbelian(const GroupDesc& g) {
    if (g.is<grouprep::AbelianDesc>()) return true;
    if (g.is<grouprep::FreeDesc>()) return g.get<grouprep::FreeDesc>().rank <= 1;
    if (g.is<grouprep::DirectProductDesc>()) {
        const auto& d = g.get<grouprep::DirectProductDesc>();
        return isVisiblyAbelian(*d.left) && isVisiblyAbelian(*d.right);
    }
    return false;
}

bool livingPredicate(const LabeledGraph& graph, const CharClass& cls) {
    LabeledGraph living = livingSubgraphFromValues(graph, vertexValues(graph, cls));
    return isConnectedAndDominant(living, graph);
}

struct DirectSplit {
    std::optional<CharClass> left;
    std::optional<CharClass> right;
};

DirectSplit splitClass(const GroupDesc& g, const CharClass& cls) {
    const auto& d = g.get<grouprep::DirectProductDesc>();
    const std::size_t lr = grouprep::abelianize(*d.left).group.freeRank;
    const std::size_t rr = grouprep::abelianize(*d.right).group.freeRank;
    const IntVec& dir = cls.direction();
    if (dir.size() != lr + rr)
        throw MismatchedGroups("class does not live on this direct product");
    IntVec c1(dir.begin(), dir.begin() + lr);
    IntVec c2(dir.begin() + lr, dir.end());
    DirectSplit out;
    if (!allZero(c1)) out.left = CharClass::of(c1);
    if (!allZero(c2)) out.right = CharClass::of(c2);
    return out;
}

CharClass embedLeft(const CharClass& c, std::size_t rightRank) {
    IntVec v = c.direction();
    v.resize(v.size() + rightRank);
    return CharClass::of(v);
}

CharClass embedRight(const CharClass& c, std::size_t leftRank) {
    IntVec v(leftRank);
    v.insert(v.end(), c.direction().begin(), c.direction().end());
    return CharClass::of(v);
}

}  // namespace

std::vector<Int> vertexValues(const LabeledGraph& graph, const CharClass& cls) {
    auto comps = grouprep::oddComponents(graph);
    if (cls.domainRank() != comps.size())
        throw MismatchedGroups("class does not live on this Artin abelianization");
    std::vector<Int> values(graph.vertexCount());
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (const std::string& v : comps[c])
            values[graph.vertexIndex(v)] = cls.direction()[c];
    return values;
}

grouprep::LabeledGraph livingSubgraphFromValues(const LabeledGraph& graph,
                                                const std::vector<Int>& vertexValues) {
    if (vertexValues.size() != graph.vertexCount())
        throw DimensionMismatch("one value per vertex required");
    for (const LabeledEdge& e : graph.edges())
        if (e.label % 2 == 1 &&
            vertexValues[graph.vertexIndex(e.u)] != vertexValues[graph.vertexIndex(e.v)])
            throw MismatchedGroups(
                "character inconsistent with the abelianization: odd-adjacent vertices "
                "carry different values");

    std::vector<std::string> vertices;
    for (std::size_t i = 0; i < graph.vertexCount(); ++i)
        if (vertexValues[i] != 0) vertices.push_back(graph.vertices()[i]);
    std::vector<LabeledEdge> edges;
    for (const LabeledEdge& e : graph.edges()) {
        const Int& vu = vertexValues[graph.vertexIndex(e.u)];
        const Int& vv = vertexValues[graph.vertexIndex(e.v)];
        if (vu == 0 || vv == 0) continue;
        const bool dead = (e.label % 2 == 0) && vu == -vv;
        if (!dead) edges.push_back(e);
    }
    return LabeledGraph(std::move(vertices), std::move(edges));
}

grouprep::LabeledGraph livingSubgraph(const LabeledGraph& graph, const Character& chi) {
    if (chi.targetRank() != 1)
        throw PreconditionError("living subgraph needs a rank-1 character");
    auto comps = grouprep::oddComponents(graph);
    if (chi.domainRank() != comps.size())
        throw MismatchedGroups("character does not live on this Artin abelianization");
    std::vector<Int> values(graph.vertexCount());
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (const std::string& v : comps[c])
            values[graph.vertexIndex(v)] = chi.matrix().at(0, c);
    return livingSubgraphFromValues(graph, values);
}

bool isConnectedAndDominant(const LabeledGraph& sub, const LabeledGraph& ambient) {
    if (!sub.isSubgraphOf(ambient)) throw PreconditionError("not a subgraph");
    if (sub.vertexCount() == 0) return false;
    if (!sub.isConnected()) return false;
    for (const std::string& v : ambient.vertices()) {
        if (sub.hasVertex(v)) continue;
        bool touched = false;
        for (const std::string& w : sub.vertices())
            if (ambient.adjacent(v, w)) {
                touched = true;
                break;
            }
        if (!touched) return false;
    }
    return true;
}

Sigma1Result sigma1(const GroupDesc& g, const Options& opt) {
    Abelianization ab = grouprep::abelianize(g);
    Trace trace;
    if (ab.group.freeRank == 0) {
        trace.add(rules::SphereEmpty.id, rules::SphereEmpty.citation,
                  "abelianization " + ab.group.toString());
        return {Sigma1Description::emptySet(), std::move(trace)};
    }

    return std::visit(
        [&](const auto& d) -> Sigma1Result {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, grouprep::FreeDesc>) {
                if (d.rank >= 2) {
                    trace.add(rules::FreeSigma.id, rules::FreeSigma.citation,
                              "free of rank " + std::to_string(d.rank));
                    return {Sigma1Description::emptySet(), std::move(trace)};
                }
                trace.add(rules::CenterSigma.id, rules::CenterSigma.citation,
                          "G = Z is its own center");
                return {Sigma1Description::wholeSphere(), std::move(trace)};
            } else if constexpr (std::is_same_v<T, grouprep::AbelianDesc>) {
                trace.add(rules::CenterSigma.id, rules::CenterSigma.citation,
                          "abelian group, every character is nonzero on the center");
                return {Sigma1Description::wholeSphere(), std::move(trace)};
            } else if constexpr (std::is_same_v<T, grouprep::ArtinDesc>) {
                const LabeledGraph& graph = d.graph;
                if (isSingleEdge(graph)) {
                    const unsigned long m = graph.edges().front().label;
                    if (m % 2 == 0) {
                        trace.add(rules::MeierDihedral.id, rules::MeierDihedral.citation,
                                  "even label m = " + std::to_string(m));
                        return {Sigma1Description::sphereMinusFiniteSet(meierEvenComplement()),
                                std::move(trace)};
                    }
                    trace.add(rules::MeierDihedral.id, rules::MeierDihedral.citation,
                              "odd label m = " + std::to_string(m));
                    return {Sigma1Description::wholeSphere(), std::move(trace)};
                }
                const bool inHypothesis =
                    graph.isConnected() && grouprep::circuitRank(graph) == 1;
                const bool assumed =
                    !inHypothesis && opt.assumeArtinConjecture && graph.isConnected();
                if (!inHypothesis && !assumed) {
                    trace.add(rules::LivingSubgraph.id, rules::LivingSubgraph.citation,
                              "not applicable: circuit rank " +
                                  std::to_string(grouprep::circuitRank(graph)) +
                                  (graph.isConnected() ? "" : ", disconnected graph"));
                    return {Sigma1Description::unknown(
                                "no Sigma^1 rule covers this Artin graph"),
                            std::move(trace)};
                }
                const rules::Rule& rule =
                    inHypothesis ? rules::LivingSubgraph : rules::LivingSubgraphConjecture;
                if (ab.group.freeRank == 1) {
                    // finite sphere {+1, -1}: evaluate the predicate pointwise
                    std::vector<CharClass> members;
                    for (CharClass c :
                         {CharClass::of({Int(1)}), CharClass::of({Int(-1)})}) {
                        if (livingPredicate(graph, c)) members.push_back(c);
                        trace.add(rule.id, rule.citation,
                                  "class " + c.toString() + ": living subgraph " +
                                      (livingPredicate(graph, c)
                                           ? "connected and dominant"
                                           : "fails connectivity or domination"));
                    }
                    Sigma1Description desc =
                        members.size() == 2 ? Sigma1Description::wholeSphere()
                                            : Sigma1Description::finiteSet(members);
                    desc.conjectural = assumed;
                    return {std::move(desc), std::move(trace)};
                }
                trace.add(rule.id, rule.citation, "per-class predicate over the graph");
                Sigma1Description desc = Sigma1Description::byPredicate(graph);
                desc.conjectural = assumed;
                return {std::move(desc), std::move(trace)};
            } else if constexpr (std::is_same_v<T, grouprep::DirectProductDesc>) {
                Sigma1Result s1 = sigma1(*d.left, opt);
                Sigma1Result s2 = sigma1(*d.right, opt);
                const std::size_t lr = grouprep::abelianize(*d.left).group.freeRank;
                const std::size_t rr = grouprep::abelianize(*d.right).group.freeRank;
                auto c1 = s1.desc.complementIfFinite(lr);
                auto c2 = s2.desc.complementIfFinite(rr);
                trace.absorb(s1.trace);
                trace.absorb(s2.trace);
                if (c1 && c2) {
                    std::vector<CharClass> complement;
                    for (const CharClass& c : *c1) complement.push_back(embedLeft(c, rr));
                    for (const CharClass& c : *c2) complement.push_back(embedRight(c, lr));
                    trace.add(rules::DirectProductFormula.id,
                              rules::DirectProductFormula.citation,
                              "complement = factor complements on the axes");
                    return {Sigma1Description::sphereMinusFiniteSet(std::move(complement)),
                            std::move(trace)};
                }
                trace.add(rules::DirectProductFormula.id, rules::DirectProductFormula.citation,
                          "factor complement is not a finite class set");
                return {Sigma1Description::unknown(
                            "a factor's Sigma^1 complement is not a finite class set; "
                            "membership remains decidable pointwise"),
                        std::move(trace)};
            } else if constexpr (std::is_same_v<T, grouprep::FiniteIndexOverDesc>) {
                Sigma1Result inner = sigma1(*d.inner, opt);
                trace.absorb(inner.trace);
                trace.add(rules::FiniteIndexTransfer.id, rules::FiniteIndexTransfer.citation,
                          "classes represented by their restrictions to the finite-index "
                          "subgroup" +
                              (d.indexNote.empty() ? std::string()
                                                   : " (" + d.indexNote + ")"));
                return {std::move(inner.desc), std::move(trace)};
            } else {
                trace.add(rules::TableLookup.id, rules::TableLookup.citation,
                          d.name + ": " + d.provenanceNote);
                return {Sigma1Description::sphereMinusFiniteSet(d.sigma1Complement),
                        std::move(trace)};
            }
        },
        g.data());
}

Verdict membership(const GroupDesc& g, const CharClass& cls, const Options& opt) {
    Abelianization ab = grouprep::abelianize(g);
    if (cls.domainRank() != ab.group.freeRank)
        throw MismatchedGroups("class does not live on this group's abelianization");
    Trace trace;

    return std::visit(
        [&](const auto& d) -> Verdict {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, grouprep::FreeDesc>) {
                if (d.rank >= 2) {
                    trace.add(rules::FreeSigma.id, rules::FreeSigma.citation,
                              "free of rank " + std::to_string(d.rank));
                    return Verdict::no(std::move(trace));
                }
                trace.add(rules::CenterSigma.id, rules::CenterSigma.citation,
                          "G = Z is its own center");
                return Verdict::yes(std::move(trace));
            } else if constexpr (std::is_same_v<T, grouprep::AbelianDesc>) {
                trace.add(rules::CenterSigma.id, rules::CenterSigma.citation,
                          "abelian group");
                return Verdict::yes(std::move(trace));
            } else if constexpr (std::is_same_v<T, grouprep::ArtinDesc>) {
                const LabeledGraph& graph = d.graph;
                if (isSingleEdge(graph)) {
                    const unsigned long m = graph.edges().front().label;
                    bool inComplement = false;
                    if (m % 2 == 0) {
                        auto comp = meierEvenComplement();
                        inComplement =
                            std::find(comp.begin(), comp.end(), cls) != comp.end();
                    }
                    trace.add(rules::MeierDihedral.id, rules::MeierDihedral.citation,
                              "label m = " + std::to_string(m) + ", class " +
                                  cls.toString());
                    return inComplement ? Verdict::no(std::move(trace))
                                        : Verdict::yes(std::move(trace));
                }
                const bool inHypothesis =
                    graph.isConnected() && grouprep::circuitRank(graph) == 1;
                const bool assumed =
                    !inHypothesis && opt.assumeArtinConjecture && graph.isConnected();
                if (!inHypothesis && !assumed)
                    return Verdict::unknown("no Sigma^1 rule covers this Artin graph",
                                            std::move(trace));
                const rules::Rule& rule =
                    inHypothesis ? rules::LivingSubgraph : rules::LivingSubgraphConjecture;
                const bool member = livingPredicate(graph, cls);
                trace.add(rule.id, rule.citation,
                          "class " + cls.toString() + ": living subgraph " +
                              (member ? "connected and dominant" : "fails the predicate"));
                return member ? Verdict::yes(std::move(trace))
                              : Verdict::no(std::move(trace));
            } else if constexpr (std::is_same_v<T, grouprep::DirectProductDesc>) {
                DirectSplit split = splitClass(g, cls);
                if (split.left && split.right) {
                    trace.add(rules::DirectProductFormula.id,
                              rules::DirectProductFormula.citation,
                              "third branch: chi|G1 = " + split.left->toString() +
                                  " != 0 and chi|G2 = " + split.right->toString() +
                                  " != 0");
                    return Verdict::yes(std::move(trace));
                }
                const GroupDesc& living = split.left ? *d.left : *d.right;
                const CharClass& sub = split.left ? *split.left : *split.right;
                Verdict inner = membership(living, sub, opt);
                trace.absorb(inner.trace);
                trace.add(rules::DirectProductFormula.id,
                          rules::DirectProductFormula.citation,
                          std::string("chi vanishes on factor ") +
                              (split.left ? "2" : "1") +
                              "; membership reduces to the other factor");
                inner.trace = std::move(trace);
                return inner;
            } else if constexpr (std::is_same_v<T, grouprep::FiniteIndexOverDesc>) {
                Verdict inner = membership(*d.inner, cls, opt);
                trace.absorb(inner.trace);
                trace.add(rules::FiniteIndexTransfer.id,
                          rules::FiniteIndexTransfer.citation,
                          "transfer along the finite-index subgroup" +
                              (d.indexNote.empty() ? std::string()
                                                   : " (" + d.indexNote + ")"));
                inner.trace = std::move(trace);
                return inner;
            } else {
                const bool inComplement =
                    std::find(d.sigma1Complement.begin(), d.sigma1Complement.end(), cls) !=
                    d.sigma1Complement.end();
                trace.add(rules::TableLookup.id, rules::TableLookup.citation,
                          d.name + ": " + d.provenanceNote);
                return inComplement ? Verdict::no(std::move(trace))
                                    : Verdict::yes(std::move(trace));
            }
        },
        g.data());
}

Sigma1Result sigmaN(const GroupDesc& g, unsigned n, Flavor flavor, const Options& opt) {
    if (n == 0) throw PreconditionError("Sigma^n requires n >= 1");
    Abelianization ab = grouprep::abelianize(g);
    Trace trace;
    if (ab.group.freeRank == 0) {
        trace.add(rules::SphereEmpty.id, rules::SphereEmpty.citation,
                  "abelianization " + ab.group.toString());
        return {Sigma1Description::emptySet(), std::move(trace)};
    }
    if (n == 1) return sigma1(g, opt);

    const std::string sym = sigmaSymbol(flavor, n);
    if (g.is<grouprep::FreeDesc>()) {
        const auto& d = g.get<grouprep::FreeDesc>();
        if (d.rank >= 2) {
            trace.add(rules::FreeSigma.id, rules::FreeSigma.citation, sym + " of a free group");
            return {Sigma1Description::emptySet(), std::move(trace)};
        }
        trace.add(rules::CenterSigma.id, rules::CenterSigma.citation, sym + ", G = Z");
        return {Sigma1Description::wholeSphere(), std::move(trace)};
    }
    if (isVisiblyAbelian(g)) {
        trace.add(rules::CenterSigma.id, rules::CenterSigma.citation, sym + ", abelian group");
        return {Sigma1Description::wholeSphere(), std::move(trace)};
    }
    if (g.is<grouprep::FiniteIndexOverDesc>()) {
        const auto& d = g.get<grouprep::FiniteIndexOverDesc>();
        Sigma1Result inner = sigmaN(*d.inner, n, flavor, opt);
        trace.absorb(inner.trace);
        trace.add(rules::FiniteIndexTransfer.id, rules::FiniteIndexTransfer.citation,
                  sym + " transfer along the finite-index subgroup");
        return {std::move(inner.desc), std::move(trace)};
    }
    return {Sigma1Description::unknown("only Sigma^1 rules are stated for this group class"),
            std::move(trace)};
}

Verdict membershipN(const GroupDesc& g, const CharClass& cls, unsigned n, Flavor flavor,
                    const Options& opt) {
    if (n == 0) throw PreconditionError("Sigma^n requires n >= 1");
    if (n == 1) return membership(g, cls, opt);
    const std::string sym = sigmaSymbol(flavor, n);
    Trace trace;
    if (g.is<grouprep::FreeDesc>()) {
        const auto& d = g.get<grouprep::FreeDesc>();
        if (d.rank >= 2) {
            trace.add(rules::FreeSigma.id, rules::FreeSigma.citation, sym + " of a free group");
            return Verdict::no(std::move(trace));
        }
        trace.add(rules::CenterSigma.id, rules::CenterSigma.citation, sym + ", G = Z");
        return Verdict::yes(std::move(trace));
    }
    if (isVisiblyAbelian(g)) {
        trace.add(rules::CenterSigma.id, rules::CenterSigma.citation, sym + ", abelian group");
        return Verdict::yes(std::move(trace));
    }
    if (g.is<grouprep::FiniteIndexOverDesc>()) {
        const auto& d = g.get<grouprep::FiniteIndexOverDesc>();
        Verdict inner = membershipN(*d.inner, cls, n, flavor, opt);
        trace.absorb(inner.trace);
        trace.add(rules::FiniteIndexTransfer.id, rules::FiniteIndexTransfer.citation,
                  sym + " transfer along the finite-index subgroup");
        inner.trace = std::move(trace);
        return inner;
    }
    return Verdict::unknown("only Sigma^1 rules are stated for this group class");
}

InclusionOutcome subsphereWithinSigma(const Subsphere& subsphere,
                                      const Sigma1Result& sigmaResult, const GroupDesc& g,
                                      unsigned n, Flavor flavor, const Options& opt) {
    InclusionOutcome out;
    if (subsphere.isEmptySet()) {
        out.answer = Answer::Yes;
        out.reason = "the subsphere is empty";
        return out;
    }
    const Sigma1Description& desc = sigmaResult.desc;
    switch (desc.kind) {
        case Sigma1Description::Kind::WholeSphere:
            out.answer = Answer::Yes;
            return out;
        case Sigma1Description::Kind::EmptySet: {
            out.answer = Answer::No;
            out.witness = CharClass::of(subsphere.directionLattice().basis().column(0));
            out.reason = "Sigma is empty but the subsphere is not";
            return out;
        }
        case Sigma1Description::Kind::SphereMinusFiniteSet: {
            for (const CharClass& c : desc.classes)
                if (subsphere.containsClass(c)) {
                    out.answer = Answer::No;
                    out.witness = c;
                    out.reason = "complement class " + c.toString() + " lies in the subsphere";
                    return out;
                }
            out.answer = Answer::Yes;
            return out;
        }
        case Sigma1Description::Kind::FiniteSet: {
            auto classes = subsphere.classesIfFinite();
            if (classes) {
                for (const CharClass& c : *classes)
                    if (std::find(desc.classes.begin(), desc.classes.end(), c) ==
                        desc.classes.end()) {
                        out.answer = Answer::No;
                        out.witness = c;
                        out.reason = "subsphere class " + c.toString() + " is outside Sigma";
                        return out;
                    }
                out.answer = Answer::Yes;
                return out;
            }
            // infinitely many subsphere classes cannot fit in a finite set
            const IntMatrix& basis = subsphere.directionLattice().basis();
            IntVec b1 = basis.column(0);
            IntVec b2 = basis.column(1);
            for (std::size_t k = 0; k <= desc.classes.size() + 1; ++k) {
                IntVec cand(b1.size());
                for (std::size_t i = 0; i < b1.size(); ++i) cand[i] = b1[i] + Int(k) * b2[i];
                if (allZero(cand)) continue;
                CharClass c = CharClass::of(cand);
                if (std::find(desc.classes.begin(), desc.classes.end(), c) ==
                    desc.classes.end()) {
                    out.answer = Answer::No;
                    out.witness = c;
                    out.reason = "subsphere is infinite, Sigma is a finite set";
                    return out;
                }
            }
            out.answer = Answer::Unknown;
            out.reason = "failed to construct a witness class";
            return out;
        }
        case Sigma1Description::Kind::ByPredicate: {
            auto classes = subsphere.classesIfFinite();
            if (!classes) {
                out.answer = Answer::Unknown;
                out.reason =
                    "predicate-shaped Sigma with an infinite subsphere is undecided";
                return out;
            }
            for (const CharClass& c : *classes) {
                Verdict v = membershipN(g, c, n, flavor, opt);
                out.trace.absorb(v.trace);
                if (v.isNo()) {
                    out.answer = Answer::No;
                    out.witness = c;
                    out.reason = "subsphere class " + c.toString() + " is outside Sigma";
                    return out;
                }
                if (v.isUnknown()) {
                    out.answer = Answer::Unknown;
                    out.reason = v.unknownReason;
                    return out;
                }
            }
            out.answer = Answer::Yes;
            return out;
        }
        default:
            out.answer = Answer::Unknown;
            out.reason = desc.unknownReason.empty() ? "Sigma description unknown"
                                                    : desc.unknownReason;
            return out;
    }
}

Sigma1Result sigma1ViaFiniteIndexSubgroup(const Abelianization& ambientAb,
                                          const GroupDesc& sub,
                                          const std::vector<Word>& subWords,
                                          const Options& opt) {
    Trace trace;
    const std::size_t r = ambientAb.group.freeRank;
    if (r == 0) {
        trace.add(rules::SphereEmpty.id, rules::SphereEmpty.citation, "");
        return {Sigma1Description::emptySet(), std::move(trace)};
    }
    Abelianization subAb = grouprep::abelianize(sub);
    if (subWords.size() != sub.generatorCount())
        throw MalformedDescriptor("one embedding word per subgroup generator required");

    // chi_sub = chi_ambient * restriction, as row vectors
    IntMatrix restriction = charsphere::restrictionMatrix(ambientAb, subAb, subWords);
    if (zlattice::rank(restriction) != r)
        throw MalformedDescriptor(
            "restriction along a finite-index subgroup must be injective on characters");

    trace.add(rules::FiniteIndexTransfer.id, rules::FiniteIndexTransfer.citation,
              "Sigma^1 of the ambient group computed through the finite-index subgroup " +
                  sub.displayName());

    if (sub.is<grouprep::DirectProductDesc>()) {
        const auto& d = sub.get<grouprep::DirectProductDesc>();
        const std::size_t lr = grouprep::abelianize(*d.left).group.freeRank;
        const std::size_t rr = grouprep::abelianize(*d.right).group.freeRank;
        std::vector<std::size_t> leftIdx(lr), rightIdx(rr);
        for (std::size_t i = 0; i < lr; ++i) leftIdx[i] = i;
        for (std::size_t i = 0; i < rr; ++i) rightIdx[i] = lr + i;
        IntMatrix r1 = restriction.selectColumns(leftIdx);
        IntMatrix r2 = restriction.selectColumns(rightIdx);
        if (zlattice::rank(r1) == r && zlattice::rank(r2) == r) {
            trace.add(rules::DirectProductFormula.id, rules::DirectProductFormula.citation,
                      "third branch holds for every class: both factor restrictions are "
                      "injective on ambient characters");
            return {Sigma1Description::wholeSphere(), std::move(trace)};
        }
    }

    Sigma1Result inner = sigma1(sub, opt);
    trace.absorb(inner.trace);
    auto comp = inner.desc.complementIfFinite(subAb.group.freeRank);
    if (!comp)
        return {Sigma1Description::unknown(
                    "the finite-index subgroup has no finite Sigma^1 complement"),
                std::move(trace)};

    std::vector<CharClass> ambientComplement;
    for (const CharClass& c : *comp) {
        // preimage of the ray of c under the restriction: solve chi * R = s * c
        IntMatrix rt = restriction.transposed();  // subFreeRank x r
        IntMatrix cCol(c.domainRank(), 1);
        for (std::size_t i = 0; i < c.domainRank(); ++i) cCol.at(i, 0) = -c.direction()[i];
        IntMatrix ker = zlattice::kernelBasis(IntMatrix::hstack(rt, cCol));
        for (std::size_t j = 0; j < ker.cols(); ++j) {
            const Int s = ker.at(r, j);
            if (s == 0) continue;
            IntVec chi(r);
            for (std::size_t i = 0; i < r; ++i) chi[i] = s > 0 ? ker.at(i, j) : Int(-ker.at(i, j));
            if (allZero(chi)) continue;
            CharClass cc = CharClass::of(chi);
            if (std::find(ambientComplement.begin(), ambientComplement.end(), cc) ==
                ambientComplement.end())
                ambientComplement.push_back(cc);
        }
    }
    return {Sigma1Description::sphereMinusFiniteSet(std::move(ambientComplement)),
            std::move(trace)};
}

}  // namespace sigmafix::sigma
