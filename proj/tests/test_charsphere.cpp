#include <doctest.h>

#include "sigmafix/charsphere.hpp"

using namespace sigmafix;
using namespace sigmafix::charsphere;
using namespace sigmafix::grouprep;
using zlattice::IntMatrix;

namespace {

LabeledGraph triangle433() {
    return LabeledGraph({"a", "b", "c"},
                        {{"a", "b", 4}, {"b", "c", 3}, {"c", "a", 3}});
}

}  // namespace

TEST_CASE("class normalization is idempotent and sign-preserving") {
    CharClass c = CharClass::of({Int(2), Int(-4)});
    CHECK(c.direction() == IntVec{1, -2});
    CHECK(CharClass::of(c.direction()) == c);
    CHECK(CharClass::of({Int(-2), Int(4)}) == c.negated());
    CHECK(!(CharClass::of({Int(-2), Int(4)}) == c));
    CHECK_THROWS_AS(CharClass::of({Int(0), Int(0)}), TrivialCharacter);
}

TEST_CASE("discreteness") {
    CHECK(isDiscrete(Character::rank1({Int(1), Int(1)})));
    CHECK(isDiscrete(Character::rank1({Int(2), Int(4)})));  // image 2Z is infinite cyclic
    CHECK(!isDiscrete(Character(2, IntMatrix::identity(2))));
    CHECK_THROWS_AS(isDiscrete(Character::rank1({Int(0), Int(0)})), TrivialCharacter);
}

TEST_CASE("image rank") {
    CHECK(imageRank(Character::rank1({Int(0), Int(0)})) == 0);
    CHECK(imageRank(Character::rank1({Int(1), Int(1)})) == 1);
    CHECK(imageRank(Character(2, IntMatrix::identity(2))) == 2);
}

TEST_CASE("restriction along the triangle fixed subgroup") {
    GroupDesc tri = GroupDesc::artin(triangle433());
    // Fix psi = <c> * <abab> inside the triangle group, as F_2 with words c, abab
    SubgroupEmbedding emb{GroupDesc::free(2), tri,
                          {Word::generator(2),
                           Word::fromLetters({{0, 1}, {1, 1}, {0, 1}, {1, 1}})}};
    Character chi = Character::rank1({Int(1)});
    Character res = restrict(chi, emb);
    CHECK(res.matrix() == IntMatrix::fromRows({{1, 4}}));
}

TEST_CASE("restriction along the diagonal doubles") {
    // ambient: table-backed wreath-style group with free abelianization Z^2
    // and generators x1,y1,x2,y2 mapping pairwise to the same coordinates
    TableBackedDesc t;
    t.name = "H";
    t.abelianization = zlattice::FgAbelian(2, {});
    t.generatorNames = {"x1", "y1", "x2", "y2"};
    t.generatorImages = IntMatrix::fromRows({{1, 0, 1, 0}, {0, 1, 0, 1}});
    t.provenanceNote = "test fixture";
    GroupDesc h = GroupDesc::tableBacked(t);

    SubgroupEmbedding emb{GroupDesc::free(2), h,
                          {Word::fromLetters({{0, 1}, {2, 1}}),   // x1 x2
                           Word::fromLetters({{1, 1}, {3, 1}})}}; // y1 y2
    Character chi1 = Character::rank1({Int(1), Int(0)});
    CHECK(restrict(chi1, emb).matrix() == IntMatrix::fromRows({{2, 0}}));
}

TEST_CASE("restriction along the identity embedding is the identity") {
    GroupDesc f2 = GroupDesc::free(2);
    Character chi = Character::rank1({Int(3), Int(-5)});
    CHECK(restrict(chi, identityEmbedding(f2)) == chi);
}

TEST_CASE("restriction commutes with positive scaling") {
    GroupDesc tri = GroupDesc::artin(triangle433());
    SubgroupEmbedding emb{GroupDesc::free(2), tri,
                          {Word::generator(2),
                           Word::fromLetters({{0, 1}, {1, 1}, {0, 1}, {1, 1}})}};
    Character chi = Character::rank1({Int(2)});
    Character res = restrict(chi, emb);
    CHECK(CharClass::ofCharacter(res) ==
          CharClass::ofCharacter(restrict(Character::rank1({Int(1)}), emb)));
}

TEST_CASE("restriction along a composite equals composed restrictions") {
    GroupDesc f3 = GroupDesc::free(3);
    GroupDesc f2 = GroupDesc::free(2);
    GroupDesc f1 = GroupDesc::free(1);
    SubgroupEmbedding inner{f1, f2, {Word::fromLetters({{0, 2}, {1, 1}})}};
    SubgroupEmbedding outer{f2, f3,
                            {Word::fromLetters({{0, 1}, {1, 1}}), Word::generator(2, 3)}};
    Character chi = Character::rank1({Int(1), Int(-1), Int(2)});
    Character direct = restrict(chi, composeEmbeddings(inner, outer));
    Character stepwise = restrict(restrict(chi, outer), inner);
    CHECK(direct == stepwise);
}

TEST_CASE("restriction rejects mismatched groups") {
    GroupDesc f2 = GroupDesc::free(2);
    Character chi = Character::rank1({Int(1)});
    CHECK_THROWS_AS(restrict(chi, identityEmbedding(f2)), MismatchedGroups);
}

TEST_CASE("vanishing subspheres") {
    GroupDesc f2 = GroupDesc::free(2);
    // H = G: only the zero character vanishes
    auto whole = std::vector<Word>{Word::generator(0), Word::generator(1)};
    CHECK(vanishingSubsphere(f2, whole).isEmptySet());

    // H trivial: everything vanishes
    CHECK(vanishingSubsphere(f2, {}).isWholeSphere());

    // H = <a>: the line chi(a) = 0, classes (0, +-1)
    Subsphere line = vanishingSubsphere(f2, {Word::generator(0)});
    CHECK(line.dim() == 1);
    auto classes = line.classesIfFinite();
    REQUIRE(classes.has_value());
    CHECK(classes->size() == 2);
    CHECK(line.containsClass(CharClass::of({Int(0), Int(1)})));
    CHECK(!line.containsClass(CharClass::of({Int(1), Int(0)})));
}

TEST_CASE("subsphere from a quotient map") {
    GroupDesc f2 = GroupDesc::free(2);
    Subsphere s = subsphereFromQuotientMap(f2, IntMatrix::fromRows({{2, 4}}));
    CHECK(s.dim() == 1);
    CHECK(s.containsClass(CharClass::of({Int(1), Int(2)})));
    // full character space when the quotient map is onto a rank-2 lattice
    CHECK(subsphereFromQuotientMap(f2, IntMatrix::identity(2)).isWholeSphere());
}

TEST_CASE("class membership in a vanishing subsphere matches word evaluation") {
    GroupDesc f3 = GroupDesc::free(3);
    std::vector<Word> words{Word::fromLetters({{0, 1}, {1, -1}})};  // a b^-1
    Subsphere s = vanishingSubsphere(f3, words);
    Abelianization ab = abelianize(f3);
    for (const CharClass& c : {CharClass::of({Int(1), Int(1), Int(0)}),
                               CharClass::of({Int(1), Int(0), Int(0)}),
                               CharClass::of({Int(2), Int(2), Int(-3)})}) {
        bool vanishes = true;
        for (const Word& w : words)
            if (evaluateWord(ab, c.asCharacter(), w) != IntVec{0}) vanishes = false;
        CHECK(s.containsClass(c) == vanishes);
    }
}
