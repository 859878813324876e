#ifndef SIGMAFIX_ORACLE_HPP
#define SIGMAFIX_ORACLE_HPP

// Brute-force referees, kept independent of the deciders they check: the
// free-group disconnection certificate works on the Cayley tree, the
// dihedral exhaust re-derives the closed form locally, and the
// abelianization referee row-reduces the presentation matrix.

#include <optional>
#include <string>
#include <vector>

#include "sigmafix/character.hpp"
#include "sigmafix/grouprep.hpp"

namespace sigmafix::oracle {

/// Two vertices of the Cayley tree with chi >= 0 whose geodesic passes below
/// zero: a certificate that [chi] is not in Sigma^1 of the free group.
struct GeodesicDipWitness {
    grouprep::Word from;
    grouprep::Word to;
    grouprep::Word dipVertex;  // a vertex on the geodesic with chi < 0
};

/// Searches balls of radius <= searchRadius; nullopt when no certificate is
/// found (rank 1 never has one).
std::optional<GeodesicDipWitness> freeSigma1Witness(std::size_t rank,
                                                    const charsphere::Character& chi,
                                                    std::size_t searchRadius = 6);

/// Evaluates chi along the unique geodesic between two reduced words and
/// reports whether some vertex dips below zero. Used to re-check witnesses.
bool geodesicDips(const charsphere::Character& chi, const grouprep::Word& from,
                  const grouprep::Word& to);

struct DihedralReport {
    unsigned long label = 0;
    std::size_t patternsChecked = 0;
    std::size_t mismatches = 0;
    std::vector<std::string> mismatchNotes;

    bool clean() const { return mismatches == 0; }
};

/// Exhausts rank-1 character patterns on the single-edge Artin group with the
/// given label, runs the living-subgraph decider, and compares against the
/// closed form (complement {(1,-1),(-1,1)} for even labels, empty for odd).
DihedralReport dihedralExhaust(unsigned long label);

/// Referee for the combinatorial abelianization: Smith-reduces the
/// presentation's abelianized relation matrix. Free and Artin inputs only.
zlattice::FgAbelian abelianizationRowReduce(const grouprep::GroupDesc& g);

/// The referee's generator partition: generators mapped to equal columns in
/// the row-reduced abelianization. Used to compare against the main path.
std::vector<std::vector<std::size_t>> abelianizationGeneratorPartition(
    const grouprep::GroupDesc& g);

}  // namespace sigmafix::oracle

#endif
