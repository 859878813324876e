#ifndef SIGMAFIX_CHARACTER_HPP
#define SIGMAFIX_CHARACTER_HPP

// Characters with values in Z^k and their positive-ray classes. A character
// acts on the free part of an abelianization; torsion generators are
// annihilated structurally by never having a column here.

#include <cstddef>
#include <string>
#include <vector>

#include "sigmafix/zlattice.hpp"

namespace sigmafix::charsphere {

class Character {
public:
    Character(std::size_t targetRank, zlattice::IntMatrix matrix);
    static Character rank1(const IntVec& values);

    std::size_t targetRank() const { return targetRank_; }
    /// Number of free abelianized generators of the domain.
    std::size_t domainRank() const { return matrix_.cols(); }
    const zlattice::IntMatrix& matrix() const { return matrix_; }

    bool isTrivial() const { return matrix_.isZero(); }
    IntVec valueOnGenerator(std::size_t freeGenIndex) const;

    bool operator==(const Character& other) const = default;

private:
    std::size_t targetRank_;
    zlattice::IntMatrix matrix_;  // targetRank x domainRank
};

/// Positive-ray class of a rank-1 character: a primitive integer direction.
/// Two rank-1 characters lie in the same class iff one is a positive rational
/// multiple of the other, so primitivity makes equality syntactic.
class CharClass {
public:
    /// Throws TrivialCharacter on the zero vector.
    static CharClass of(const IntVec& values);
    /// Extracts the ray class of a character whose image has rank 1.
    static CharClass ofCharacter(const Character& c);

    const IntVec& direction() const { return direction_; }
    std::size_t domainRank() const { return direction_.size(); }
    CharClass negated() const;
    Character asCharacter() const { return Character::rank1(direction_); }

    bool operator==(const CharClass& other) const = default;
    bool operator<(const CharClass& other) const;
    std::string toString() const;

private:
    explicit CharClass(IntVec direction) : direction_(std::move(direction)) {}
    IntVec direction_;
};

}  // namespace sigmafix::charsphere

#endif
