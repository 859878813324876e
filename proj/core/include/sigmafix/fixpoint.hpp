#ifndef SIGMAFIX_FIXPOINT_HPP
#define SIGMAFIX_FIXPOINT_HPP

// The theorem engine: automorphism triples phi = (psi, alpha, gamma) of
// H x A, the data I_phi / eps_phi / P_phi, and the decision procedures for
// finiteness of fixed subgroups. Positive answers that depend on an
// automorphism list being exhaustive record that assumption in the trace.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sigmafix/charsphere.hpp"
#include "sigmafix/grouprep.hpp"
#include "sigmafix/sigma.hpp"

namespace sigmafix::fixpoint {

using sigma::Answer;
using sigma::Flavor;
using sigma::Trace;
using sigma::Verdict;

struct PsiIdentity {
    bool operator==(const PsiIdentity&) const = default;
};

/// Label-preserving graph automorphism of an Artin graph, by vertex images.
struct PsiGraphAut {
    std::map<std::string, std::string> images;
    bool operator==(const PsiGraphAut&) const = default;
};

/// Declared but unsupported: centralizers are not computable here. Exists so
/// traces can name the automorphism before Opaque fix data is supplied.
struct PsiConjugation {
    grouprep::Word conjugator;
    bool operator==(const PsiConjugation&) const = default;
};

/// User-supplied Fix psi with provenance, as a subgroup embedding into H.
struct PsiOpaque {
    grouprep::SubgroupEmbedding fix;
    std::string provenanceNote;
    std::optional<unsigned long> declaredOrder;
};

using PsiSpec = std::variant<PsiIdentity, PsiGraphAut, PsiConjugation, PsiOpaque>;

std::string psiLabel(const PsiSpec& psi);

/// phi(h, v) = (psi(h), alpha(h) + gamma(v)) on H x A with H centerless.
/// alpha: free part of H_ab -> A (cover coordinates); gamma: automorphism of
/// A on cover coordinates (unimodular free block, torsion-compatible).
struct AutTriple {
    grouprep::GroupDesc h;
    zlattice::FgAbelian a;
    zlattice::IntMatrix alpha;
    zlattice::IntMatrix gamma;
    PsiSpec psi;
};

/// Validates and builds a triple; throws PreconditionError when H is not
/// verifiably centerless, MalformedDescriptor on shape/unimodularity issues.
AutTriple makeAutTriple(grouprep::GroupDesc h, zlattice::FgAbelian a,
                        zlattice::IntMatrix alpha, zlattice::IntMatrix gamma, PsiSpec psi);

/// I_phi = (gamma - Id)(A) as a lattice in the free cover of A (torsion
/// relations included), with the quotient A / I_phi.
struct IPhiData {
    zlattice::Lattice lattice;
    zlattice::FgAbelian quotientGroup;
};

IPhiData iPhi(const AutTriple& t);

struct FixDescription {
    grouprep::GroupDesc group;
    grouprep::SubgroupEmbedding embedding;  // Fix psi into H
    Trace derivation;
};

/// Fixed subgroup of psi, as a descriptor plus embedding words.
/// Throws UnsupportedPsi with guidance when no rule resolves it.
FixDescription fixOfPsi(const grouprep::GroupDesc& h, const PsiSpec& psi);
FixDescription fixOfPsi(const AutTriple& t);

/// Alternating word of length m starting at the edge's first vertex,
/// spelled in the ambient Artin group's generators. Requires m >= 3.
grouprep::Word garsideWord(const grouprep::LabeledGraph& graph,
                           const grouprep::LabeledEdge& edge);

/// Is g of type F_n (resp. FP_n)? Decided from the known classes (free,
/// abelian, Artin families, products, finite index, table-backed data).
Verdict groupType(const grouprep::GroupDesc& g, unsigned n, Flavor flavor);

/// Trivial-center test for the descriptor classes where it is known.
std::optional<bool> isCenterless(const grouprep::GroupDesc& g);

/// Center as an abstract group, where known.
std::optional<zlattice::FgAbelian> knownCenter(const grouprep::GroupDesc& g);

struct EngineConfig {
    unsigned long witnessBound = 3;  // exponent bound for the word-search fast path
    bool assumeArtinConjecture = false;

    /// Reads SIGMAFIX_WITNESS_BOUND when set.
    static EngineConfig fromEnvironment();

    sigma::Options sigmaOptions() const { return {assumeArtinConjecture}; }
};

enum class PathPolicy {
    Auto,             // shortcuts first: finite cokernel, gamma = Id, finite order
    ForceGeneral,     // always the witness-condition path
    ForceFiniteOrder, // the finite-order shortcut; error when phi has infinite order
};

/// Is Fix phi of type F_n (resp. FP_n)?
Verdict fixTypeDirectProduct(const AutTriple& t, unsigned n, Flavor flavor,
                             const EngineConfig& cfg = {},
                             PathPolicy policy = PathPolicy::Auto);

/// Is ker chi of type F_n? Requires a discrete class.
Verdict kernelType(const grouprep::GroupDesc& g, const charsphere::CharClass& cls,
                   unsigned n, Flavor flavor, const EngineConfig& cfg = {});

/// A subgroup N with G' <= N <= G, given either by generator words (N is
/// generated by them over G') or by the quotient map G_ab -> Z^k with
/// kernel N/G'.
struct CoabelianSubgroup {
    std::variant<std::vector<grouprep::Word>, zlattice::IntMatrix> data;
    std::string label;

    static CoabelianSubgroup fromWords(std::vector<grouprep::Word> words, std::string label);
    static CoabelianSubgroup fromQuotientMap(zlattice::IntMatrix map, std::string label);
    static CoabelianSubgroup commutator(const grouprep::GroupDesc& g);

    charsphere::Subsphere vanishing(const grouprep::GroupDesc& g) const;
};

/// Is N of type F_n?
Verdict subgroupAboveCommutatorType(const grouprep::GroupDesc& g,
                                    const CoabelianSubgroup& n, unsigned nLevel,
                                    Flavor flavor, const EngineConfig& cfg = {});

/// Contrapositive rank criterion: when rk G/N <= rk Z(G) and N is provably
/// not of type F_n, G cannot have FnFPa. Answers No (with the witness class)
/// or Unknown ("inconclusive").
Verdict fnfpaNecessaryCheck(const grouprep::GroupDesc& g, const CoabelianSubgroup& n,
                            unsigned nLevel, Flavor flavor, const EngineConfig& cfg = {});

/// Does H x A have FnFPa? No with witness (psi, chi) when some restricted
/// class lands outside Sigma^n(Fix psi); Yes only under the recorded
/// assumption that psiList is exhaustive. Throws PreconditionError when H is
/// not verifiably centerless.
Verdict fgfpaWitnessSearch(const grouprep::GroupDesc& h, const zlattice::FgAbelian& a,
                           const std::vector<PsiSpec>& psiList, unsigned n, Flavor flavor,
                           const EngineConfig& cfg = {}, bool assertExhaustive = false);

struct OrderResult {
    enum class Kind { Finite, Infinite, Unknown } kind = Kind::Unknown;
    unsigned long order = 0;  // set when finite
    std::string note;
};

/// Order of phi = (psi, alpha, gamma), when computable from the components.
OrderResult finiteOrder(const AutTriple& t);

/// im eps_phi as an abstract group (eps_phi = projection of alpha restricted
/// to Fix psi into A / I_phi).
zlattice::FgAbelian imageEpsilon(const AutTriple& t, const FixDescription& fix);

/// alpha composed with the Fix psi embedding, on free abelianizations:
/// cover(A) x freeRank(Fix psi_ab).
zlattice::IntMatrix alphaOnFix(const AutTriple& t, const FixDescription& fix);

/// P_phi's image in the abelianization of Fix psi: the preimage of I_phi
/// under alphaOnFix.
zlattice::Lattice pPhiLattice(const AutTriple& t, const FixDescription& fix);

/// Characters of Fix psi vanishing on P_phi (equivalently, factoring through
/// im eps_phi).
charsphere::Subsphere pPhiVanishingSubsphere(const AutTriple& t, const FixDescription& fix);

/// Induced permutation matrix of psi on the free abelianization of H, when
/// psi acts through a known symbol (identity, graph automorphism, inner).
std::optional<zlattice::IntMatrix> psiAbelianMatrix(const grouprep::GroupDesc& h,
                                                    const PsiSpec& psi);

}  // namespace sigmafix::fixpoint

#endif
