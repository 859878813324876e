#include "sigmafix/oracle.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "sigmafix/sigma.hpp"

namespace sigmafix::oracle {

using charsphere::Character;
using grouprep::GroupDesc;
using grouprep::LabeledEdge;
using grouprep::LabeledGraph;
using grouprep::Word;
using zlattice::FgAbelian;
using zlattice::IntMatrix;

namespace {

// Reduced words as unit steps +-(gen+1); adjacent inverse steps never occur.
using Steps = std::vector<long>;

Word stepsToWord(const Steps& s) {
    std::vector<grouprep::Letter> letters;
    for (long step : s) {
        const std::size_t gen = static_cast<std::size_t>(std::labs(step)) - 1;
        letters.push_back({gen, step > 0 ? 1 : -1});
    }
    return Word::fromLetters(std::move(letters));
}

Int chiOfSteps(const Character& chi, const Steps& s) {
    Int acc = 0;
    for (long step : s) {
        const std::size_t gen = static_cast<std::size_t>(std::labs(step)) - 1;
        const Int& v = chi.matrix().at(0, gen);
        acc += step > 0 ? v : Int(-v);
    }
    return acc;
}

// All reduced words of length <= radius, shortest first, then lexicographic
// in (generator, sign) order.
std::vector<Steps> ball(std::size_t rank, std::size_t radius) {
    std::vector<Steps> out;
    std::vector<Steps> frontier{Steps{}};
    out.push_back(Steps{});
    for (std::size_t len = 1; len <= radius; ++len) {
        std::vector<Steps> next;
        for (const Steps& w : frontier) {
            for (std::size_t g = 1; g <= rank; ++g) {
                for (long step : {static_cast<long>(g), -static_cast<long>(g)}) {
                    if (!w.empty() && w.back() == -step) continue;
                    Steps ext = w;
                    ext.push_back(step);
                    next.push_back(ext);
                }
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

std::size_t commonPrefix(const Steps& a, const Steps& b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return k;
}

// Vertices along the unique geodesic from a to b, inclusive.
std::vector<Steps> geodesicVertices(const Steps& a, const Steps& b) {
    const std::size_t p = commonPrefix(a, b);
    std::vector<Steps> path;
    for (std::size_t k = a.size(); k + 1 > p; --k) {
        path.emplace_back(a.begin(), a.begin() + k);
        if (k == 0) break;
    }
    for (std::size_t k = p + 1; k <= b.size(); ++k)
        path.emplace_back(b.begin(), b.begin() + k);
    return path;
}

Steps wordToSteps(const Word& w) {
    Steps out;
    for (const grouprep::Letter& l : w.letters()) {
        const long g = static_cast<long>(l.generator) + 1;
        const long count = std::labs(l.exponent);
        for (long k = 0; k < count; ++k) out.push_back(l.exponent > 0 ? g : -g);
    }
    return out;
}

}  // namespace

std::optional<GeodesicDipWitness> freeSigma1Witness(std::size_t rank,
                                                    const Character& chi,
                                                    std::size_t searchRadius) {
    if (chi.isTrivial()) throw TrivialCharacter("witness search needs a nonzero character");
    if (chi.targetRank() != 1 || chi.domainRank() != rank)
        throw MismatchedGroups("character does not live on the free group of this rank");
    if (rank < 2) return std::nullopt;  // Sigma^1(Z) is the whole sphere

    const std::vector<Steps> endpoints = ball(rank, std::min<std::size_t>(searchRadius, 2));
    const std::vector<Steps> targets = ball(rank, searchRadius);

    for (const Steps& u : endpoints) {
        if (chiOfSteps(chi, u) < 0) continue;
        for (const Steps& v : targets) {
            if (chiOfSteps(chi, v) < 0) continue;
            auto path = geodesicVertices(u, v);
            for (const Steps& vertex : path) {
                if (chiOfSteps(chi, vertex) < 0) {
                    return GeodesicDipWitness{stepsToWord(u), stepsToWord(v),
                                              stepsToWord(vertex)};
                }
            }
        }
    }
    return std::nullopt;
}

bool geodesicDips(const Character& chi, const Word& from, const Word& to) {
    Steps a = wordToSteps(from);
    Steps b = wordToSteps(to);
    for (const Steps& vertex : geodesicVertices(a, b))
        if (chiOfSteps(chi, vertex) < 0) return true;
    return false;
}

DihedralReport dihedralExhaust(unsigned long label) {
    if (label < 3 || label > 12)
        throw PreconditionError("dihedral exhaust covers labels 3..12");
    LabeledGraph graph({"a", "b"}, {{"a", "b", label}});
    DihedralReport report;
    report.label = label;

    auto check = [&](Int va, Int vb) {
        LabeledGraph living = sigma::livingSubgraphFromValues(graph, {va, vb});
        const bool decided = sigma::isConnectedAndDominant(living, graph);
        // closed form, derived locally: the complement is {(1,-1),(-1,1)} for
        // even labels and empty for odd ones
        const bool expected = !(label % 2 == 0 && va == -vb && va != 0);
        ++report.patternsChecked;
        if (decided != expected) {
            ++report.mismatches;
            std::ostringstream os;
            os << "m=" << label << " chi=(" << va.get_str() << "," << vb.get_str()
               << "): decider=" << (decided ? "member" : "complement")
               << " closed-form=" << (expected ? "member" : "complement");
            report.mismatchNotes.push_back(os.str());
        }
    };

    if (label % 2 == 1) {
        // rank-1 abelianization: both vertices carry the same value
        for (int t : {-2, -1, 1, 2}) check(Int(t), Int(t));
    } else {
        for (int va = -2; va <= 2; ++va)
            for (int vb = -2; vb <= 2; ++vb) {
                if (va == 0 && vb == 0) continue;
                check(Int(va), Int(vb));
            }
    }
    return report;
}

namespace {

IntMatrix artinRelationRows(const LabeledGraph& graph) {
    // abelianized relation of the alternating presentation: odd labels give
    // u - v = 0, even labels give the zero row
    IntMatrix rel(graph.edgeCount(), graph.vertexCount());
    std::size_t r = 0;
    for (const LabeledEdge& e : graph.edges()) {
        if (e.label % 2 == 1) {
            rel.at(r, graph.vertexIndex(e.u)) = 1;
            rel.at(r, graph.vertexIndex(e.v)) = -1;
        }
        ++r;
    }
    return rel;
}

}  // namespace

FgAbelian abelianizationRowReduce(const GroupDesc& g) {
    if (g.is<grouprep::FreeDesc>())
        return FgAbelian(g.get<grouprep::FreeDesc>().rank, {});
    if (!g.is<grouprep::ArtinDesc>())
        throw PreconditionError("the row-reduction referee covers Free and Artin inputs");
    const LabeledGraph& graph = g.get<grouprep::ArtinDesc>().graph;
    zlattice::SmithForm f = zlattice::smith(artinRelationRows(graph));
    IntVec torsion;
    std::size_t nonzero = 0;
    for (const Int& d : f.diag) {
        if (d != 0) ++nonzero;
        if (d > 1) torsion.push_back(d);
    }
    return FgAbelian(graph.vertexCount() - nonzero, torsion);
}

std::vector<std::vector<std::size_t>> abelianizationGeneratorPartition(const GroupDesc& g) {
    std::size_t n = 0;
    zlattice::Lattice relations = zlattice::Lattice::zero(0);
    if (g.is<grouprep::FreeDesc>()) {
        n = g.get<grouprep::FreeDesc>().rank;
        relations = zlattice::Lattice::zero(n);
    } else if (g.is<grouprep::ArtinDesc>()) {
        const LabeledGraph& graph = g.get<grouprep::ArtinDesc>().graph;
        n = graph.vertexCount();
        relations = zlattice::imageLattice(artinRelationRows(graph).transposed());
    } else {
        throw PreconditionError("the row-reduction referee covers Free and Artin inputs");
    }

    std::vector<std::vector<std::size_t>> classes;
    std::vector<bool> assigned(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (assigned[i]) continue;
        std::vector<std::size_t> cls{i};
        assigned[i] = true;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (assigned[j]) continue;
            IntVec diff(n);
            diff[i] = 1;
            diff[j] = -1;
            if (relations.contains(diff)) {
                cls.push_back(j);
                assigned[j] = true;
            }
        }
        classes.push_back(std::move(cls));
    }
    return classes;
}

}  // namespace sigmafix::oracle
