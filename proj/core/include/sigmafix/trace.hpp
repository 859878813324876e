#ifndef SIGMAFIX_TRACE_HPP
#define SIGMAFIX_TRACE_HPP

// Three-valued verdicts with citation traces. Every Yes/No answer carries a
// nonempty trace of the rules that produced it; Unknown carries the blocking
// reason. Rules are cited by their catalog label so a reviewer can audit
// each step against the literature.

#include <optional>
#include <string>
#include <vector>

#include "sigmafix/character.hpp"
#include "sigmafix/zlattice.hpp"

namespace sigmafix::sigma {

enum class Answer { Yes, No, Unknown };

std::string answerName(Answer a);

enum class Flavor { Homotopical, Homological };

std::string sigmaSymbol(Flavor flavor, unsigned n);
std::string typeSymbol(Flavor flavor, unsigned n);

struct RuleApplication {
    std::string ruleId;
    std::string citation;
    std::string note;

    bool operator==(const RuleApplication&) const = default;
};

struct Trace {
    std::vector<RuleApplication> steps;

    void add(const char* ruleId, const char* citation, std::string note = "");
    void absorb(const Trace& other);
    bool cites(const std::string& ruleId) const;
    /// Position of the first application of ruleId, if any.
    std::optional<std::size_t> firstIndex(const std::string& ruleId) const;
    std::string toString() const;
};

struct Verdict {
    Answer answer = Answer::Unknown;
    Trace trace;
    std::string unknownReason;
    std::optional<charsphere::CharClass> witnessClass;
    std::optional<IntVec> witnessVector;
    std::string witnessNote;

    static Verdict yes(Trace t);
    static Verdict no(Trace t);
    static Verdict unknown(std::string reason, Trace t = {});

    bool isYes() const { return answer == Answer::Yes; }
    bool isNo() const { return answer == Answer::No; }
    bool isUnknown() const { return answer == Answer::Unknown; }
};

namespace rules {

struct Rule {
    const char* id;
    const char* citation;
};

// Character sphere and Sigma rules
inline constexpr Rule SphereEmpty{"sphere.empty",
    "S(G) is empty: the abelianization is finite, so there is no nontrivial character"};
inline constexpr Rule FreeSigma{"sigma.free",
    "Thm 2.2(5): Sigma^n(G) = {} for a finitely generated free group of rank >= 2"};
inline constexpr Rule CenterSigma{"sigma.center",
    "Thm 2.2(4): chi(Z(G)) != 0 implies [chi] in Sigma^n(G)"};
inline constexpr Rule FiniteIndexTransfer{"sigma.finite-index",
    "Thm 2.2(3): for H of finite index in G, [chi|H] in Sigma^n(H) iff [chi] in Sigma^n(G)"};
inline constexpr Rule DirectProductFormula{"sigma.direct-product",
    "Thm 6.1: [chi] in Sigma^1(G1 x G2) iff [chi|G1] in Sigma^1(G1), or [chi|G2] in "
    "Sigma^1(G2), or chi|G1 != 0 and chi|G2 != 0"};
inline constexpr Rule MeierDihedral{"sigma.dihedral",
    "Thm (Meier): single edge labeled m: if m is even, Sigma^1 = S^1 minus "
    "{(1,-1),(-1,1)}; if m is odd, Sigma^1 = S = {+1,-1}"};
inline constexpr Rule LivingSubgraph{"sigma.living-subgraph",
    "Thm (living subgraph): circuit rank 1: [chi] in Sigma^1(A_Gamma) iff the living "
    "subgraph L(chi) is connected and dominant"};
inline constexpr Rule LivingSubgraphConjecture{"sigma.living-subgraph.assumed",
    "living-subgraph criterion applied OUTSIDE its hypothesis (circuit rank != 1); "
    "conjectural, enabled by --assume-artin-conjecture"};
inline constexpr Rule TableLookup{"sigma.table",
    "Sigma^1 table lookup for a table-backed group; provenance recorded on the descriptor"};

// Finiteness rules
inline constexpr Rule AboveCommutator{"fin.above-commutator",
    "Thm 2.2(1): for G' <= N <= G, N is of type F_n iff S(G,N) is contained in Sigma^n(G)"};
inline constexpr Rule KernelDiscrete{"fin.kernel-discrete",
    "Thm 2.2(2): for discrete [chi], ker chi is of type F_n iff {chi, -chi} lie in Sigma^n(G)"};
inline constexpr Rule SesFiniteness{"fin.ses",
    "Prop 2.1: an extension of F_n groups is F_n; quotients by F_(n-1) kernels inherit F_n"};
inline constexpr Rule RetractFiniteness{"fin.retract",
    "a retract (e.g. a direct factor) of a group of type F_n is of type F_n"};
inline constexpr Rule TypeFree{"type.free",
    "finitely generated free groups are of type F_infinity"};
inline constexpr Rule TypeAbelian{"type.abelian",
    "finitely generated abelian groups are of type F_infinity"};
inline constexpr Rule TypeArtinPresented{"type.artin.presented",
    "Artin groups are finitely presented (the defining presentation is finite), hence F_2"};
inline constexpr Rule TypeArtinLarge{"type.artin.large",
    "large-type Artin groups have a finite 2-dimensional classifying space, hence are "
    "F_infinity"};
inline constexpr Rule TypeArtinRightAngled{"type.artin.raag",
    "right-angled Artin groups have a finite classifying space (Salvetti complex), hence "
    "are F_infinity"};
inline constexpr Rule TypeFiniteIndex{"type.finite-index",
    "F_n and FP_n pass to and from finite-index subgroups"};
inline constexpr Rule TypeTableFg{"type.table.fg",
    "table-backed descriptor carries a finite generating set, hence F_1 = FP_1"};

// Fixed-subgroup rules
inline constexpr Rule AutTripleForm{"fix.lemma5.1",
    "Lemma 5.1: automorphisms of H x A with Z(H) = 1 have the form "
    "phi(h,v) = (psi(h), alpha(h) + gamma(v))"};
inline constexpr Rule IPhiData{"fix.iphi",
    "I_phi = { z^-1 phi(z) : z in Z(G) }; in the direct-factor case I_phi = (gamma - Id)(A)"};
inline constexpr Rule CorWitness{"fix.cor5.2",
    "Cor 5.2: Fix phi is F_n iff Fix psi is F_n and every [chi] in Sigma^1(Fix psi)^c "
    "admits (h,a) with chi(h) != 0 and alpha(h) = (gamma - Id)(a)"};
inline constexpr Rule CorGammaId{"fix.cor5.3",
    "Cor 5.3: gamma = Id: Fix phi = ker alpha_1 x A with alpha_1 = alpha restricted to "
    "Fix psi"};
inline constexpr Rule CorFiniteCokernel{"fix.cor5.5",
    "Cor 5.5: Fix gamma finite: (Id - gamma)(A) has finite index in A and Fix phi is F_n "
    "iff Fix psi is F_n"};
inline constexpr Rule CorInversion{"fix.cor5.6",
    "Cor 5.6: gamma = -Id: every element of Fix gamma has order at most 2, and Fix phi is "
    "F_n iff Fix psi is F_n"};
inline constexpr Rule CorFiniteOrder{"fix.corB",
    "Cor B: phi of finite order m: Fix phi is F_n iff Fix phi-bar is F_n (im eps_phi has "
    "exponent at most m, so P_phi has finite index)"};
inline constexpr Rule ThmCenter{"fix.thmA",
    "Thm A: Fix phi is F_n iff Fix phi-bar and P_phi = ker eps_phi are F_n"};
inline constexpr Rule CorRankCenter{"fix.cor-rank-center",
    "Cor (rank criterion): if G has FnFPa, Z(G) is finitely generated, and G' <= N <= G "
    "with rk G/N <= rk Z(G), then N is of type F_n"};
inline constexpr Rule ThmDirectFactor{"fix.thmD",
    "Thm D: for centerless H, H x A has FnFPa iff H has FnFPa and ker(chi|Fix psi) is F_n "
    "for every chi with rk im chi <= rk A and every psi in Aut(H)"};
inline constexpr Rule JonesVaskou{"fix.jones-vaskou",
    "Cor (Jones-Vaskou): for a large-type free-of-infinity Artin group and psi induced by "
    "a label-preserving graph automorphism sigma, Fix psi = A_{Fix sigma} * F, with F free "
    "on the Garside elements of the transposed edges"};
inline constexpr Rule GarsideElement{"fix.garside",
    "Garside element of a dihedral Artin group with label m: Delta = aba... (m factors)"};
inline constexpr Rule AutListAssumption{"assume.aut-list",
    "recorded assumption: the supplied automorphism list is exhaustive for the relevant "
    "automorphisms"};
inline constexpr Rule CharacterRestriction{"char.restrict",
    "restriction of a character along a subgroup embedding, computed on abelianizations"};

}  // namespace rules

}  // namespace sigmafix::sigma

#endif
