#ifndef SIGMAFIX_SIGMA_HPP
#define SIGMAFIX_SIGMA_HPP

// Sigma^1 (and rule-limited Sigma^n) membership deciders per group class.
// Every decider answers Yes / No / Unknown with a citation trace; Unknown is
// a value, never an error. The same rules are valid for the homotopical and
// homological flavors, which are tracked as a label.

#include <optional>
#include <vector>

#include "sigmafix/charsphere.hpp"
#include "sigmafix/grouprep.hpp"
#include "sigmafix/trace.hpp"

namespace sigmafix::sigma {

/// Shape of a Sigma^1 (or Sigma^n) subset of the character sphere. Finite
/// class data covers every group in scope; complements that are neither
/// finite nor cofinite stay Unknown as a description (membership can still
/// be decided pointwise).
struct Sigma1Description {
    enum class Kind {
        WholeSphere,
        EmptySet,
        SphereMinusFiniteSet,
        FiniteSet,
        ByPredicate,
        Unknown,
    };

    Kind kind = Kind::Unknown;
    std::vector<charsphere::CharClass> classes;  // complement or member classes
    std::optional<grouprep::LabeledGraph> predicateGraph;
    bool conjectural = false;
    std::string unknownReason;

    static Sigma1Description wholeSphere();
    static Sigma1Description emptySet();
    static Sigma1Description sphereMinusFiniteSet(std::vector<charsphere::CharClass> complement);
    static Sigma1Description finiteSet(std::vector<charsphere::CharClass> members);
    static Sigma1Description byPredicate(grouprep::LabeledGraph graph);
    static Sigma1Description unknown(std::string reason);

    /// The complement as a finite class list, when it has one. sphereRank is
    /// the free rank of the group's abelianization.
    std::optional<std::vector<charsphere::CharClass>> complementIfFinite(
        std::size_t sphereRank) const;

    std::string toString() const;
};

struct Sigma1Result {
    Sigma1Description desc;
    Trace trace;
};

struct Options {
    bool assumeArtinConjecture = false;
};

Sigma1Result sigma1(const grouprep::GroupDesc& g, const Options& opt = {});

/// Pointwise Sigma^1 membership with trace. Throws MismatchedGroups when the
/// class does not live on g's abelianization.
Verdict membership(const grouprep::GroupDesc& g, const charsphere::CharClass& cls,
                   const Options& opt = {});

/// Sigma^n under the rules stated for general n (free, center, finite index);
/// everything else is Unknown for n >= 2.
Sigma1Result sigmaN(const grouprep::GroupDesc& g, unsigned n, Flavor flavor,
                    const Options& opt = {});

Verdict membershipN(const grouprep::GroupDesc& g, const charsphere::CharClass& cls,
                    unsigned n, Flavor flavor, const Options& opt = {});

/// Subgraph left after deleting chi-zero vertices and chi-dead edges (even
/// label with chi(v) = -chi(w) != 0). The character must respect the
/// odd-edge identifications; vertex values derived from a class always do.
grouprep::LabeledGraph livingSubgraph(const grouprep::LabeledGraph& graph,
                                      const charsphere::Character& chiRank1);

/// Same, from explicit per-vertex values. Throws MismatchedGroups when the
/// values are inconsistent with the abelianization (odd-adjacent vertices
/// carrying different values).
grouprep::LabeledGraph livingSubgraphFromValues(const grouprep::LabeledGraph& graph,
                                                const std::vector<Int>& vertexValues);

/// Connectivity plus domination: every ambient vertex is in sub or adjacent
/// to a vertex of sub. The empty subgraph of a nonempty graph fails.
bool isConnectedAndDominant(const grouprep::LabeledGraph& sub,
                            const grouprep::LabeledGraph& ambient);

/// Vertex values induced by a rank-1 class on the abelianization.
std::vector<Int> vertexValues(const grouprep::LabeledGraph& graph,
                              const charsphere::CharClass& cls);

struct InclusionOutcome {
    Answer answer = Answer::Unknown;
    std::optional<charsphere::CharClass> witness;  // class outside Sigma on No
    std::string reason;
    Trace trace;
};

/// Decides subsphere "subset of" Sigma-description, with a witness class on
/// failure. Membership callbacks are used for predicate-shaped descriptions.
InclusionOutcome subsphereWithinSigma(const charsphere::Subsphere& subsphere,
                                      const Sigma1Result& sigmaResult,
                                      const grouprep::GroupDesc& g, unsigned n,
                                      Flavor flavor, const Options& opt = {});

/// Sigma^1 of a group given only as "contains this subgroup with finite
/// index", from the subgroup's descriptor and the embedding words of its
/// generators written in the ambient group's generators. The ambient
/// abelianization must be supplied (e.g. from a table-backed descriptor).
Sigma1Result sigma1ViaFiniteIndexSubgroup(const grouprep::Abelianization& ambientAb,
                                          const grouprep::GroupDesc& sub,
                                          const std::vector<grouprep::Word>& subWords,
                                          const Options& opt = {});

}  // namespace sigmafix::sigma

#endif
