#include "sigmafix/grouprep.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace sigmafix::grouprep {

namespace {

// union-find over vertex indices
struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

LabeledGraph::LabeledGraph(std::vector<std::string> vertices, std::vector<LabeledEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i].empty()) throw MalformedDescriptor("empty vertex name");
        if (!index_.emplace(vertices_[i], i).second)
            throw MalformedDescriptor("duplicate vertex name: " + vertices_[i]);
    }
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const LabeledEdge& e : edges_) {
        if (!hasVertex(e.u) || !hasVertex(e.v))
            throw MalformedDescriptor("edge endpoint is not a vertex");
        if (e.u == e.v) throw MalformedDescriptor("loops are not allowed");
        if (e.label < 2) throw MalformedDescriptor("edge labels must be at least 2");
        const std::size_t iu = vertexIndex(e.u), iv = vertexIndex(e.v);
        std::pair<std::size_t, std::size_t> key{std::min(iu, iv), std::max(iu, iv)};
        if (!seen.insert(key).second) throw MalformedDescriptor("multi-edge between vertices");
    }
}

bool LabeledGraph::hasVertex(const std::string& name) const {
    return index_.count(name) > 0;
}

std::size_t LabeledGraph::vertexIndex(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw IndexOutOfRange("unknown vertex: " + name);
    return it->second;
}

bool LabeledGraph::adjacent(const std::string& u, const std::string& v) const {
    return edgeLabel(u, v).has_value();
}

std::optional<unsigned long> LabeledGraph::edgeLabel(const std::string& u,
                                                     const std::string& v) const {
    for (const LabeledEdge& e : edges_)
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return e.label;
    return std::nullopt;
}

std::size_t LabeledGraph::componentCount() const {
    DisjointSets ds(vertices_.size());
    for (const LabeledEdge& e : edges_) ds.unite(vertexIndex(e.u), vertexIndex(e.v));
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < vertices_.size(); ++i) roots.insert(ds.find(i));
    return roots.size();
}

bool LabeledGraph::isSubgraphOf(const LabeledGraph& ambient) const {
    for (const std::string& v : vertices_)
        if (!ambient.hasVertex(v)) return false;
    for (const LabeledEdge& e : edges_) {
        auto label = ambient.edgeLabel(e.u, e.v);
        if (!label || *label != e.label) return false;
    }
    return true;
}

std::vector<std::vector<std::string>> oddComponents(const LabeledGraph& graph) {
    DisjointSets ds(graph.vertexCount());
    for (const LabeledEdge& e : graph.edges())
        if (e.label % 2 == 1) ds.unite(graph.vertexIndex(e.u), graph.vertexIndex(e.v));

    std::map<std::size_t, std::vector<std::string>> byRoot;
    std::vector<std::size_t> rootOrder;
    for (std::size_t i = 0; i < graph.vertexCount(); ++i) {
        std::size_t r = ds.find(i);
        if (byRoot.find(r) == byRoot.end()) rootOrder.push_back(r);
        byRoot[r].push_back(graph.vertices()[i]);
    }
    std::vector<std::vector<std::string>> out;
    // order components by their smallest vertex index
    std::sort(rootOrder.begin(), rootOrder.end(), [&](std::size_t a, std::size_t b) {
        return graph.vertexIndex(byRoot[a].front()) < graph.vertexIndex(byRoot[b].front());
    });
    for (std::size_t r : rootOrder) out.push_back(byRoot[r]);
    return out;
}

std::size_t circuitRank(const LabeledGraph& graph) {
    return graph.edgeCount() + graph.componentCount() - graph.vertexCount();
}

Word Word::fromLetters(std::vector<Letter> letters) {
    Word w;
    for (const Letter& l : letters) {
        if (l.exponent == 0) continue;
        if (!w.letters_.empty() && w.letters_.back().generator == l.generator) {
            w.letters_.back().exponent += l.exponent;
            if (w.letters_.back().exponent == 0) w.letters_.pop_back();
        } else {
            w.letters_.push_back(l);
        }
    }
    return w;
}

Word Word::generator(std::size_t index, long exponent) {
    return fromLetters({Letter{index, exponent}});
}

Word Word::concat(const Word& other) const {
    std::vector<Letter> all = letters_;
    all.insert(all.end(), other.letters_.begin(), other.letters_.end());
    return fromLetters(std::move(all));
}

Word Word::inverse() const {
    std::vector<Letter> rev;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        rev.push_back(Letter{it->generator, -it->exponent});
    return fromLetters(std::move(rev));
}

std::string Word::toString(const std::vector<std::string>& generatorNames) const {
    if (letters_.empty()) return "1";
    std::ostringstream os;
    for (const Letter& l : letters_) {
        if (l.generator < generatorNames.size())
            os << generatorNames[l.generator];
        else
            os << "g" << l.generator;
        if (l.exponent != 1) os << "^" << l.exponent;
    }
    return os.str();
}

bool DirectProductDesc::operator==(const DirectProductDesc& other) const {
    return *left == *other.left && *right == *other.right;
}

bool FiniteIndexOverDesc::operator==(const FiniteIndexOverDesc& other) const {
    return *inner == *other.inner && indexNote == other.indexNote;
}

GroupDesc GroupDesc::free(std::size_t rank) { return GroupDesc(FreeDesc{rank}); }

GroupDesc GroupDesc::abelian(zlattice::FgAbelian group) {
    return GroupDesc(AbelianDesc{std::move(group)});
}

GroupDesc GroupDesc::artin(LabeledGraph graph) {
    if (graph.vertexCount() == 0) throw MalformedDescriptor("Artin graph needs a vertex");
    return GroupDesc(ArtinDesc{std::move(graph)});
}

GroupDesc GroupDesc::directProduct(GroupDesc left, GroupDesc right) {
    return GroupDesc(DirectProductDesc{std::make_shared<const GroupDesc>(std::move(left)),
                                       std::make_shared<const GroupDesc>(std::move(right))});
}

GroupDesc GroupDesc::finiteIndexOver(GroupDesc inner, std::string indexNote) {
    return GroupDesc(
        FiniteIndexOverDesc{std::make_shared<const GroupDesc>(std::move(inner)), std::move(indexNote)});
}

GroupDesc GroupDesc::tableBacked(TableBackedDesc desc) {
    if (desc.provenanceNote.empty())
        throw MalformedDescriptor("table-backed descriptors must cite their source");
    if (desc.generatorImages.cols() != desc.generatorNames.size())
        throw MalformedDescriptor("generator image count does not match generator names");
    if (desc.generatorImages.rows() != desc.abelianization.coverDim())
        throw MalformedDescriptor("generator images have wrong ambient dimension");
    for (const auto& cls : desc.sigma1Complement)
        if (cls.domainRank() != desc.abelianization.freeRank)
            throw MalformedDescriptor("complement class has wrong rank");
    return GroupDesc(std::move(desc));
}

bool GroupDesc::operator==(const GroupDesc& other) const { return data_ == other.data_; }

std::size_t GroupDesc::generatorCount() const {
    return std::visit(
        [](const auto& d) -> std::size_t {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, FreeDesc>) return d.rank;
            else if constexpr (std::is_same_v<T, AbelianDesc>) return d.group.coverDim();
            else if constexpr (std::is_same_v<T, ArtinDesc>) return d.graph.vertexCount();
            else if constexpr (std::is_same_v<T, DirectProductDesc>)
                return d.left->generatorCount() + d.right->generatorCount();
            else if constexpr (std::is_same_v<T, FiniteIndexOverDesc>)
                return d.inner->generatorCount();
            else
                return d.generatorNames.size();
        },
        data_);
}

std::vector<std::string> GroupDesc::generatorNames() const {
    return std::visit(
        [](const auto& d) -> std::vector<std::string> {
            using T = std::decay_t<decltype(d)>;
            std::vector<std::string> names;
            if constexpr (std::is_same_v<T, FreeDesc>) {
                for (std::size_t i = 0; i < d.rank; ++i) names.push_back("x" + std::to_string(i + 1));
            } else if constexpr (std::is_same_v<T, AbelianDesc>) {
                for (std::size_t i = 0; i < d.group.freeRank; ++i)
                    names.push_back("e" + std::to_string(i + 1));
                for (std::size_t i = 0; i < d.group.torsion.size(); ++i)
                    names.push_back("t" + std::to_string(i + 1));
            } else if constexpr (std::is_same_v<T, ArtinDesc>) {
                names = d.graph.vertices();
            } else if constexpr (std::is_same_v<T, DirectProductDesc>) {
                names = d.left->generatorNames();
                auto rightNames = d.right->generatorNames();
                names.insert(names.end(), rightNames.begin(), rightNames.end());
            } else if constexpr (std::is_same_v<T, FiniteIndexOverDesc>) {
                names = d.inner->generatorNames();
            } else {
                names = d.generatorNames;
            }
            return names;
        },
        data_);
}

std::string GroupDesc::displayName() const {
    return std::visit(
        [](const auto& d) -> std::string {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, FreeDesc>) {
                return "F_" + std::to_string(d.rank);
            } else if constexpr (std::is_same_v<T, AbelianDesc>) {
                return d.group.toString();
            } else if constexpr (std::is_same_v<T, ArtinDesc>) {
                return "Artin(" + std::to_string(d.graph.vertexCount()) + " vertices)";
            } else if constexpr (std::is_same_v<T, DirectProductDesc>) {
                return d.left->displayName() + " x " + d.right->displayName();
            } else if constexpr (std::is_same_v<T, FiniteIndexOverDesc>) {
                return "finite-index over " + d.inner->displayName();
            } else {
                return d.name;
            }
        },
        data_);
}

namespace {

// Normalized direct sum of two abelianizations: free coordinates concatenate,
// torsion coordinates are renormalized into a single divisibility chain.
Abelianization directSum(const Abelianization& a, const Abelianization& b) {
    const auto& ga = a.group;
    const auto& gb = b.group;
    const std::size_t free = ga.freeRank + gb.freeRank;
    const std::size_t sa = ga.torsion.size(), sb = gb.torsion.size();

    IntVec allTorsion = ga.torsion;
    allTorsion.insert(allTorsion.end(), gb.torsion.begin(), gb.torsion.end());
    zlattice::SmithForm f = zlattice::smith(zlattice::IntMatrix::diagonal(allTorsion));

    IntVec newTorsion;
    std::vector<std::size_t> keptRows;
    for (std::size_t i = 0; i < allTorsion.size(); ++i) {
        if (f.diag[i] > 1) {
            newTorsion.push_back(f.diag[i]);
            keptRows.push_back(i);
        }
    }
    zlattice::IntMatrix torsTransform = f.left.selectRows(keptRows);  // kept x (sa+sb)

    Abelianization out;
    out.group = zlattice::FgAbelian(free, newTorsion);
    const std::size_t gens = a.generatorImages.cols() + b.generatorImages.cols();
    out.generatorImages = zlattice::IntMatrix(out.group.coverDim(), gens);

    auto setImage = [&](std::size_t col, const IntVec& img, bool fromLeft) {
        // img is in the component's cover coordinates
        const auto& comp = fromLeft ? ga : gb;
        IntVec rawTors(sa + sb);
        for (std::size_t i = 0; i < comp.freeRank; ++i) {
            std::size_t row = fromLeft ? i : ga.freeRank + i;
            out.generatorImages.at(row, col) = img[i];
        }
        for (std::size_t i = 0; i < comp.torsion.size(); ++i)
            rawTors[(fromLeft ? 0 : sa) + i] = img[comp.freeRank + i];
        IntVec mapped = torsTransform.apply(rawTors);
        for (std::size_t i = 0; i < keptRows.size(); ++i) {
            Int v = mapped[i] % newTorsion[i];
            if (v < 0) v += newTorsion[i];
            out.generatorImages.at(free + i, col) = v;
        }
    };
    for (std::size_t j = 0; j < a.generatorImages.cols(); ++j)
        setImage(j, a.generatorImages.column(j), true);
    for (std::size_t j = 0; j < b.generatorImages.cols(); ++j)
        setImage(a.generatorImages.cols() + j, b.generatorImages.column(j), false);
    return out;
}

}  // namespace

zlattice::IntMatrix Abelianization::freeImages() const {
    std::vector<std::size_t> idx(group.freeRank);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    return generatorImages.selectRows(idx);
}

IntVec Abelianization::freeImageOfWord(const Word& w) const {
    IntVec out(group.freeRank);
    for (const Letter& l : w.letters()) {
        if (l.generator >= generatorImages.cols())
            throw IndexOutOfRange("word letter indexes a missing generator");
        for (std::size_t i = 0; i < group.freeRank; ++i)
            out[i] += Int(l.exponent) * generatorImages.at(i, l.generator);
    }
    return out;
}

Abelianization abelianize(const GroupDesc& g) {
    return std::visit(
        [&](const auto& d) -> Abelianization {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, FreeDesc>) {
                return Abelianization{zlattice::FgAbelian(d.rank, {}),
                                      zlattice::IntMatrix::identity(d.rank)};
            } else if constexpr (std::is_same_v<T, AbelianDesc>) {
                return Abelianization{d.group,
                                      zlattice::IntMatrix::identity(d.group.coverDim())};
            } else if constexpr (std::is_same_v<T, ArtinDesc>) {
                // Odd labels identify their endpoints in the abelianization,
                // even labels add no relation, so the abelianization is free
                // on the odd components.
                auto comps = oddComponents(d.graph);
                Abelianization out;
                out.group = zlattice::FgAbelian(comps.size(), {});
                out.generatorImages =
                    zlattice::IntMatrix(comps.size(), d.graph.vertexCount());
                for (std::size_t c = 0; c < comps.size(); ++c)
                    for (const std::string& v : comps[c])
                        out.generatorImages.at(c, d.graph.vertexIndex(v)) = 1;
                return out;
            } else if constexpr (std::is_same_v<T, DirectProductDesc>) {
                return directSum(abelianize(*d.left), abelianize(*d.right));
            } else if constexpr (std::is_same_v<T, FiniteIndexOverDesc>) {
                // Proxy: characters of the ambient group are represented by
                // their restrictions to the finite-index subgroup.
                return abelianize(*d.inner);
            } else {
                return Abelianization{d.abelianization, d.generatorImages};
            }
        },
        g.data());
}

IntVec evaluateWord(const Abelianization& ambient, const charsphere::Character& chi,
                    const Word& w) {
    if (chi.domainRank() != ambient.group.freeRank)
        throw MismatchedGroups("character does not live on this abelianization");
    return chi.matrix().apply(ambient.freeImageOfWord(w));
}

void SubgroupEmbedding::validate() const {
    if (generatorWords.size() != sub.generatorCount())
        throw MalformedDescriptor("embedding word count does not match subgroup generators");
    const std::size_t ambientGens = ambient.generatorCount();
    for (const Word& w : generatorWords)
        for (const Letter& l : w.letters())
            if (l.generator >= ambientGens)
                throw MalformedDescriptor("embedding word uses a missing ambient generator");
}

SubgroupEmbedding identityEmbedding(const GroupDesc& g) {
    SubgroupEmbedding emb{g, g, {}};
    for (std::size_t i = 0; i < g.generatorCount(); ++i)
        emb.generatorWords.push_back(Word::generator(i));
    return emb;
}

Word substitute(const Word& w, const std::vector<Word>& generatorImages) {
    Word out;
    for (const Letter& l : w.letters()) {
        if (l.generator >= generatorImages.size())
            throw IndexOutOfRange("substitution misses a generator image");
        Word piece = generatorImages[l.generator];
        if (l.exponent < 0) piece = piece.inverse();
        long count = std::labs(l.exponent);
        for (long k = 0; k < count; ++k) out = out.concat(piece);
    }
    return out;
}

SubgroupEmbedding composeEmbeddings(const SubgroupEmbedding& innerToMid,
                                    const SubgroupEmbedding& midToOuter) {
    if (!(innerToMid.ambient == midToOuter.sub))
        throw MismatchedGroups("embeddings do not compose");
    SubgroupEmbedding out{innerToMid.sub, midToOuter.ambient, {}};
    for (const Word& w : innerToMid.generatorWords)
        out.generatorWords.push_back(substitute(w, midToOuter.generatorWords));
    return out;
}

}  // namespace sigmafix::grouprep
