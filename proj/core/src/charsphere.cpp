#include "sigmafix/charsphere.hpp"

#include <sstream>

namespace sigmafix::charsphere {

using zlattice::IntMatrix;

Character::Character(std::size_t targetRank, IntMatrix matrix)
    : targetRank_(targetRank), matrix_(std::move(matrix)) {
    if (targetRank_ == 0) throw MalformedDescriptor("character target rank must be >= 1");
    if (matrix_.rows() != targetRank_)
        throw DimensionMismatch("character matrix row count != target rank");
}

Character Character::rank1(const IntVec& values) {
    IntMatrix m(1, values.size());
    for (std::size_t j = 0; j < values.size(); ++j) m.at(0, j) = values[j];
    return Character(1, std::move(m));
}

IntVec Character::valueOnGenerator(std::size_t freeGenIndex) const {
    if (freeGenIndex >= matrix_.cols()) throw IndexOutOfRange("generator index out of range");
    return matrix_.column(freeGenIndex);
}

CharClass CharClass::of(const IntVec& values) {
    Int g = 0;
    for (const Int& v : values) {
        Int av = v < 0 ? Int(-v) : v;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), av.get_mpz_t());
    }
    if (g == 0) throw TrivialCharacter("the zero character has no class");
    IntVec dir(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        mpz_divexact(dir[i].get_mpz_t(), values[i].get_mpz_t(), g.get_mpz_t());
    }
    return CharClass(std::move(dir));
}

CharClass CharClass::ofCharacter(const Character& c) {
    if (c.isTrivial()) throw TrivialCharacter("the zero character has no class");
    if (c.targetRank() == 1) return of(c.matrix().row(0));
    // rank-1 image inside Z^k: every row is a rational multiple of a common
    // primitive direction; signs of rank >= 2 characters are not consulted.
    if (imageRank(c) != 1)
        throw PreconditionError("character class requires a rank-1 image");
    for (std::size_t i = 0; i < c.matrix().rows(); ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < c.matrix().cols(); ++j)
            if (c.matrix().at(i, j) != 0) nonzero = true;
        if (nonzero) return of(c.matrix().row(i));
    }
    throw TrivialCharacter("the zero character has no class");
}

CharClass CharClass::negated() const {
    IntVec neg(direction_.size());
    for (std::size_t i = 0; i < direction_.size(); ++i) neg[i] = -direction_[i];
    return CharClass(std::move(neg));
}

bool CharClass::operator<(const CharClass& other) const {
    return direction_ < other.direction_;
}

std::string CharClass::toString() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < direction_.size(); ++i) {
        if (i) os << ",";
        os << direction_[i].get_str();
    }
    os << ")";
    return os.str();
}

bool isDiscrete(const Character& c) {
    if (c.isTrivial()) throw TrivialCharacter("discreteness of the zero character");
    return zlattice::rank(c.matrix()) == 1;
}

std::size_t imageRank(const Character& c) {
    return zlattice::rank(c.matrix());
}

Character restrict(const Character& c, const grouprep::SubgroupEmbedding& emb) {
    emb.validate();
    grouprep::Abelianization ambientAb = grouprep::abelianize(emb.ambient);
    if (c.domainRank() != ambientAb.group.freeRank)
        throw MismatchedGroups("character does not live on the embedding's ambient group");

    grouprep::Abelianization subAb = grouprep::abelianize(emb.sub);
    const std::size_t nGens = emb.generatorWords.size();

    IntMatrix values(c.targetRank(), nGens);
    for (std::size_t j = 0; j < nGens; ++j) {
        IntVec v = grouprep::evaluateWord(ambientAb, c, emb.generatorWords[j]);
        values.setColumn(j, v);
    }

    IntMatrix gen = subAb.freeImages();  // freeRank x nGens, surjective
    IntMatrix rightInv = zlattice::rightInverseOfSurjection(gen);
    IntMatrix restricted = values * rightInv;  // targetRank x freeRank
    if (!(restricted * gen == values))
        throw MismatchedGroups(
            "values on embedding words do not define a character of the subgroup");
    return Character(c.targetRank(), std::move(restricted));
}

Subsphere::Subsphere(std::size_t ambientRank, IntMatrix directions)
    : ambientRank_(ambientRank),
      directions_(zlattice::Lattice::fromColumns(std::move(directions))) {
    if (directions_.dim() != ambientRank_)
        throw DimensionMismatch("subsphere directions have wrong rank");
}

bool Subsphere::containsClass(const CharClass& cls) const {
    if (cls.domainRank() != ambientRank_)
        throw MismatchedGroups("class has the wrong ambient rank");
    return directions_.contains(cls.direction());
}

std::optional<std::vector<CharClass>> Subsphere::classesIfFinite() const {
    if (dim() == 0) return std::vector<CharClass>{};
    if (dim() == 1) {
        CharClass c = CharClass::of(directions_.basis().column(0));
        return std::vector<CharClass>{c, c.negated()};
    }
    return std::nullopt;
}

Subsphere vanishingSubsphere(const grouprep::GroupDesc& g,
                             const std::vector<grouprep::Word>& generatorWords) {
    grouprep::Abelianization ab = grouprep::abelianize(g);
    std::vector<IntVec> rows;
    for (const grouprep::Word& w : generatorWords) rows.push_back(ab.freeImageOfWord(w));
    IntMatrix conditions = IntMatrix::fromRowVectors(rows);
    if (generatorWords.empty()) conditions = IntMatrix(0, ab.group.freeRank);
    return Subsphere(ab.group.freeRank, zlattice::kernelBasis(conditions));
}

Subsphere subsphereFromQuotientMap(const grouprep::GroupDesc& g,
                                   const zlattice::IntMatrix& quotientMap) {
    grouprep::Abelianization ab = grouprep::abelianize(g);
    if (quotientMap.cols() != ab.group.freeRank)
        throw DimensionMismatch("quotient map has the wrong number of columns");
    return Subsphere(ab.group.freeRank, zlattice::saturatedRowSpace(quotientMap));
}

Subsphere subsphereVanishingOnLattice(std::size_t ambientRank,
                                      const zlattice::Lattice& lattice) {
    if (lattice.dim() != ambientRank)
        throw DimensionMismatch("lattice has the wrong ambient rank");
    return Subsphere(ambientRank, zlattice::kernelBasis(lattice.basis().transposed()));
}

zlattice::IntMatrix restrictionMatrix(const grouprep::Abelianization& ambient,
                                      const grouprep::Abelianization& sub,
                                      const std::vector<grouprep::Word>& words) {
    IntMatrix wordImages(ambient.group.freeRank, words.size());
    for (std::size_t j = 0; j < words.size(); ++j)
        wordImages.setColumn(j, ambient.freeImageOfWord(words[j]));
    IntMatrix gen = sub.freeImages();
    if (gen.cols() != words.size())
        throw MalformedDescriptor("one embedding word per subgroup generator required");
    IntMatrix rightInv = zlattice::rightInverseOfSurjection(gen);
    IntMatrix restriction = wordImages * rightInv;
    if (!(restriction * gen == wordImages))
        throw MalformedDescriptor("embedding words are inconsistent with the subgroup");
    return restriction;
}

}  // namespace sigmafix::charsphere
