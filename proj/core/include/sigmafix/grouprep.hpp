#ifndef SIGMAFIX_GROUPREP_HPP
#define SIGMAFIX_GROUPREP_HPP

// Group descriptors, words in generators, labeled graphs and abelianization:
// the common language the deciders are stated over.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sigmafix/character.hpp"
#include "sigmafix/zlattice.hpp"

namespace sigmafix::grouprep {

struct LabeledEdge {
    std::string u;
    std::string v;
    unsigned long label = 2;

    bool operator==(const LabeledEdge& other) const = default;
};

/// Finite simplicial graph with integer edge labels >= 2.
class LabeledGraph {
public:
    LabeledGraph() = default;
    LabeledGraph(std::vector<std::string> vertices, std::vector<LabeledEdge> edges);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<LabeledEdge>& edges() const { return edges_; }
    std::size_t vertexCount() const { return vertices_.size(); }
    std::size_t edgeCount() const { return edges_.size(); }

    bool hasVertex(const std::string& name) const;
    std::size_t vertexIndex(const std::string& name) const;
    bool adjacent(const std::string& u, const std::string& v) const;
    std::optional<unsigned long> edgeLabel(const std::string& u, const std::string& v) const;

    std::size_t componentCount() const;
    bool isConnected() const { return vertexCount() > 0 && componentCount() == 1; }
    bool isSubgraphOf(const LabeledGraph& ambient) const;

    bool operator==(const LabeledGraph& other) const = default;

private:
    std::vector<std::string> vertices_;
    std::vector<LabeledEdge> edges_;
    std::map<std::string, std::size_t> index_;
};

/// Connected components of the subgraph of odd-labeled edges; each component
/// lists its vertices in vertex order, components ordered by first vertex.
std::vector<std::vector<std::string>> oddComponents(const LabeledGraph& graph);

/// First Betti number E - V + C.
std::size_t circuitRank(const LabeledGraph& graph);

struct Letter {
    std::size_t generator = 0;
    long exponent = 1;  // never 0

    bool operator==(const Letter& other) const = default;
};

/// Word in abstract generators, freely reduced as written: adjacent letters
/// carry distinct generator indices and no exponent is zero.
class Word {
public:
    Word() = default;
    static Word fromLetters(std::vector<Letter> letters);
    static Word generator(std::size_t index, long exponent = 1);

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }

    Word concat(const Word& other) const;
    Word inverse() const;

    bool operator==(const Word& other) const = default;
    std::string toString(const std::vector<std::string>& generatorNames) const;

private:
    std::vector<Letter> letters_;
};

class GroupDesc;

struct FreeDesc {
    std::size_t rank = 0;
    bool operator==(const FreeDesc&) const = default;
};

struct AbelianDesc {
    zlattice::FgAbelian group;
    bool operator==(const AbelianDesc&) const = default;
};

struct ArtinDesc {
    LabeledGraph graph;
    bool operator==(const ArtinDesc&) const = default;
};

struct DirectProductDesc {
    std::shared_ptr<const GroupDesc> left;
    std::shared_ptr<const GroupDesc> right;
    bool operator==(const DirectProductDesc& other) const;
};

/// A group containing `inner` with finite index. Deliberately carries no
/// index or coset data; characters of the ambient group are represented by
/// their restrictions to `inner`.
struct FiniteIndexOverDesc {
    std::shared_ptr<const GroupDesc> inner;
    std::string indexNote;
    bool operator==(const FiniteIndexOverDesc& other) const;
};

/// Escape hatch for groups whose abelianization and Sigma^1 are imported
/// from the literature rather than derived. Must carry a provenance note.
struct TableBackedDesc {
    std::string name;
    zlattice::FgAbelian abelianization;
    std::vector<std::string> generatorNames;
    zlattice::IntMatrix generatorImages;  // coverDim x generator count
    std::vector<charsphere::CharClass> sigma1Complement;
    std::string provenanceNote;
    std::optional<zlattice::FgAbelian> center;

    bool operator==(const TableBackedDesc&) const = default;
};

class GroupDesc {
public:
    using Data = std::variant<FreeDesc, AbelianDesc, ArtinDesc, DirectProductDesc,
                              FiniteIndexOverDesc, TableBackedDesc>;

    static GroupDesc free(std::size_t rank);
    static GroupDesc abelian(zlattice::FgAbelian group);
    static GroupDesc artin(LabeledGraph graph);
    static GroupDesc directProduct(GroupDesc left, GroupDesc right);
    static GroupDesc finiteIndexOver(GroupDesc inner, std::string indexNote);
    static GroupDesc tableBacked(TableBackedDesc desc);

    const Data& data() const { return data_; }

    template <typename T>
    bool is() const {
        return std::holds_alternative<T>(data_);
    }
    template <typename T>
    const T& get() const {
        return std::get<T>(data_);
    }

    std::size_t generatorCount() const;
    std::vector<std::string> generatorNames() const;
    std::string displayName() const;

    bool operator==(const GroupDesc& other) const;

private:
    explicit GroupDesc(Data data) : data_(std::move(data)) {}
    Data data_;
};

/// Abelianization together with the column map sending each generator to its
/// image in cover coordinates (free coordinates first, then torsion).
struct Abelianization {
    zlattice::FgAbelian group;
    zlattice::IntMatrix generatorImages;  // coverDim x generator count

    zlattice::IntMatrix freeImages() const;  // freeRank x generator count
    IntVec freeImageOfWord(const Word& w) const;
};

Abelianization abelianize(const GroupDesc& g);

/// chi applied to a word over the ambient group's generators: the sum over
/// letters of exponent * chi(generator). Throws IndexOutOfRange for letters
/// beyond the generator count.
IntVec evaluateWord(const Abelianization& ambient, const charsphere::Character& chi,
                    const Word& w);

struct SubgroupEmbedding {
    GroupDesc sub;
    GroupDesc ambient;
    std::vector<Word> generatorWords;  // one word per generator of sub

    void validate() const;
};

SubgroupEmbedding identityEmbedding(const GroupDesc& g);

/// Embedding K -> G obtained from K -> H and H -> G by substituting the
/// H-generator words into the K-generator words.
SubgroupEmbedding composeEmbeddings(const SubgroupEmbedding& innerToMid,
                                    const SubgroupEmbedding& midToOuter);

Word substitute(const Word& w, const std::vector<Word>& generatorImages);

}  // namespace sigmafix::grouprep

#endif
