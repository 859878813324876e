#ifndef SIGMAFIX_CHARSPHERE_HPP
#define SIGMAFIX_CHARSPHERE_HPP

// Character sphere operations: discreteness, image rank, restriction along
// subgroup embeddings, and vanishing subspheres S(G,H).

#include <optional>
#include <vector>

#include "sigmafix/character.hpp"
#include "sigmafix/grouprep.hpp"

namespace sigmafix::charsphere {

/// True iff the image of c is infinite cyclic. Throws TrivialCharacter.
bool isDiscrete(const Character& c);

/// Rank of the image lattice of c.
std::size_t imageRank(const Character& c);

/// Character on emb.sub whose value on each sub-generator is the value of c
/// on that generator's embedding word. Throws MismatchedGroups when c does
/// not live on emb.ambient or does not factor through sub's abelianization.
Character restrict(const Character& c, const grouprep::SubgroupEmbedding& emb);

/// Rational solution space { [chi] : chi vanishes on a set of directions },
/// stored as a saturated lattice of character directions.
class Subsphere {
public:
    /// Directions = columns of a saturated basis in Z^ambientRank.
    Subsphere(std::size_t ambientRank, zlattice::IntMatrix directions);

    std::size_t ambientRank() const { return ambientRank_; }
    std::size_t dim() const { return directions_.rank(); }
    bool isEmptySet() const { return dim() == 0; }
    bool isWholeSphere() const { return dim() == ambientRank_; }

    bool containsClass(const CharClass& cls) const;
    /// All classes when there are finitely many (dim <= 1); nullopt otherwise.
    std::optional<std::vector<CharClass>> classesIfFinite() const;
    const zlattice::Lattice& directionLattice() const { return directions_; }

private:
    std::size_t ambientRank_;
    zlattice::Lattice directions_;
};

/// S(G,H) = { [chi] : chi(H) = 0 } for H generated (over G') by the given
/// words in g's generators.
Subsphere vanishingSubsphere(const grouprep::GroupDesc& g,
                             const std::vector<grouprep::Word>& generatorWords);

/// S(G,N) for N = kernel of the map G_ab(free part) -> Z^k given by
/// quotientMap (k x freeRank): the saturated row space of quotientMap.
Subsphere subsphereFromQuotientMap(const grouprep::GroupDesc& g,
                                   const zlattice::IntMatrix& quotientMap);

/// Subsphere of characters vanishing on a sublattice of the free
/// abelianization (e.g. the image of a subgroup).
Subsphere subsphereVanishingOnLattice(std::size_t ambientRank,
                                      const zlattice::Lattice& lattice);

/// Matrix R with chi_sub = chi_ambient * R for the restriction along the
/// given embedding words (rows index ambient free generators, columns the
/// subgroup's). Throws MalformedDescriptor when the words are inconsistent
/// with the subgroup's abelianization.
zlattice::IntMatrix restrictionMatrix(const grouprep::Abelianization& ambient,
                                      const grouprep::Abelianization& sub,
                                      const std::vector<grouprep::Word>& words);

}  // namespace sigmafix::charsphere

#endif
