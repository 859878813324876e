#include <doctest.h>

#include <random>

#include "sigmafix/sigma.hpp"

using namespace sigmafix;
using namespace sigmafix::sigma;
using namespace sigmafix::grouprep;
using charsphere::CharClass;
using charsphere::Character;

namespace {

LabeledGraph triangle433() {
    return LabeledGraph({"a", "b", "c"},
                        {{"a", "b", 4}, {"b", "c", 3}, {"c", "a", 3}});
}

LabeledGraph singleEdge(unsigned long m) {
    return LabeledGraph({"a", "b"}, {{"a", "b", m}});
}

GroupDesc kleinBottleBraid() {
    TableBackedDesc t;
    t.name = "P2(Klein bottle)";
    t.abelianization = zlattice::FgAbelian(2, {2, 2});
    t.generatorNames = {"x", "y", "a", "b"};
    // free coordinates (y, b), torsion coordinates (x, a)
    t.generatorImages = zlattice::IntMatrix::fromRows(
        {{0, 1, 0, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 0, 1, 0}});
    t.sigma1Complement = {CharClass::of({Int(-1), Int(0)}),
                          CharClass::of({Int(1), Int(0)})};
    t.provenanceNote =
        "pure braid group of the Klein bottle; Sigma^1 complement {[chi],[-chi]} with "
        "chi(y) = -1, chi(x) = chi(a) = chi(b) = 0, from the published computation";
    t.center = zlattice::FgAbelian(1, {});  // <b^2>
    return GroupDesc::tableBacked(t);
}

}  // namespace

TEST_CASE("sigma1 of free groups") {
    Sigma1Result r = sigma1(GroupDesc::free(2));
    CHECK(r.desc.kind == Sigma1Description::Kind::EmptySet);
    CHECK(r.trace.cites("sigma.free"));

    // Z is free of rank 1 but abelian: the center rule wins
    CHECK(sigma1(GroupDesc::free(1)).desc.kind == Sigma1Description::Kind::WholeSphere);
}

TEST_CASE("sigma1 of abelian groups") {
    Sigma1Result r = sigma1(GroupDesc::abelian(zlattice::FgAbelian(2, {})));
    CHECK(r.desc.kind == Sigma1Description::Kind::WholeSphere);
    CHECK(r.trace.cites("sigma.center"));

    // finite abelianization: empty sphere
    Sigma1Result f = sigma1(GroupDesc::abelian(zlattice::FgAbelian(0, {2})));
    CHECK(f.desc.kind == Sigma1Description::Kind::EmptySet);
    CHECK(f.trace.cites("sphere.empty"));
}

TEST_CASE("sigma1 of the dihedral Artin group m = 4") {
    Sigma1Result r = sigma1(GroupDesc::artin(singleEdge(4)));
    REQUIRE(r.desc.kind == Sigma1Description::Kind::SphereMinusFiniteSet);
    REQUIRE(r.desc.classes.size() == 2);
    CHECK(r.desc.classes[0] == CharClass::of({Int(1), Int(-1)}));
    CHECK(r.desc.classes[1] == CharClass::of({Int(-1), Int(1)}));
    CHECK(r.trace.cites("sigma.dihedral"));

    CHECK(sigma1(GroupDesc::artin(singleEdge(5))).desc.kind ==
          Sigma1Description::Kind::WholeSphere);
}

TEST_CASE("sigma1 of the triangle Artin group is the whole sphere") {
    Sigma1Result r = sigma1(GroupDesc::artin(triangle433()));
    CHECK(r.desc.kind == Sigma1Description::Kind::WholeSphere);
    CHECK(r.trace.cites("sigma.living-subgraph"));
    CHECK(!r.desc.conjectural);
}

TEST_CASE("sigma1 of the table-backed Klein bottle braid group") {
    Sigma1Result r = sigma1(kleinBottleBraid());
    REQUIRE(r.desc.kind == Sigma1Description::Kind::SphereMinusFiniteSet);
    CHECK(r.desc.classes.size() == 2);
    CHECK(r.trace.cites("sigma.table"));
}

TEST_CASE("sigma1 outside the rules is Unknown, not a guess") {
    // circuit rank 2: square with a diagonal
    LabeledGraph squareDiag({"a", "b", "c", "d"},
                            {{"a", "b", 4},
                             {"b", "c", 4},
                             {"c", "d", 4},
                             {"d", "a", 4},
                             {"a", "c", 4}});
    Sigma1Result r = sigma1(GroupDesc::artin(squareDiag));
    CHECK(r.desc.kind == Sigma1Description::Kind::Unknown);

    Options opt;
    opt.assumeArtinConjecture = true;
    Sigma1Result assumed = sigma1(GroupDesc::artin(squareDiag), opt);
    CHECK(assumed.desc.kind == Sigma1Description::Kind::ByPredicate);
    CHECK(assumed.desc.conjectural);
    CHECK(assumed.trace.cites("sigma.living-subgraph.assumed"));
}

TEST_CASE("membership in free and product groups") {
    CHECK(membership(GroupDesc::free(2), CharClass::of({Int(1), Int(1)})).isNo());

    GroupDesc prod = GroupDesc::directProduct(GroupDesc::free(2), GroupDesc::free(2));
    // both restrictions nonzero: third branch of the direct product formula
    Verdict both = membership(prod, CharClass::of({Int(1), Int(0), Int(0), Int(1)}));
    CHECK(both.isYes());
    CHECK(both.trace.cites("sigma.direct-product"));

    // vanishing on the second factor: all three branches fail
    Verdict onAxis = membership(prod, CharClass::of({Int(1), Int(1), Int(0), Int(0)}));
    CHECK(onAxis.isNo());
    CHECK(onAxis.trace.cites("sigma.free"));
}

TEST_CASE("direct product formula is symmetric in the factors") {
    GroupDesc f2 = GroupDesc::free(2);
    GroupDesc z2 = GroupDesc::abelian(zlattice::FgAbelian(2, {}));
    GroupDesc lr = GroupDesc::directProduct(f2, z2);
    GroupDesc rl = GroupDesc::directProduct(z2, f2);
    std::vector<IntVec> dirs = {{Int(1), Int(0), Int(0), Int(0)},
                                {Int(0), Int(0), Int(1), Int(1)},
                                {Int(1), Int(-1), Int(2), Int(0)}};
    for (const IntVec& d : dirs) {
        IntVec swapped(d.begin() + 2, d.end());
        swapped.insert(swapped.end(), d.begin(), d.begin() + 2);
        CHECK(membership(lr, CharClass::of(d)).answer ==
              membership(rl, CharClass::of(swapped)).answer);
    }
}

TEST_CASE("sigma1 description of a direct product with finite complements") {
    GroupDesc de = GroupDesc::artin(singleEdge(4));
    GroupDesc z = GroupDesc::free(1);
    Sigma1Result r = sigma1(GroupDesc::directProduct(de, z));
    REQUIRE(r.desc.kind == Sigma1Description::Kind::SphereMinusFiniteSet);
    // the two dead classes of the dihedral factor, on the first two coordinates
    CHECK(r.desc.classes.size() == 2);
    CHECK(r.desc.classes[0] == CharClass::of({Int(1), Int(-1), Int(0)}));
}

TEST_CASE("finite index transfer works in both directions") {
    GroupDesc wrapped = GroupDesc::finiteIndexOver(GroupDesc::free(2), "index 2");
    CharClass cls = CharClass::of({Int(1), Int(1)});
    Verdict outer = membership(wrapped, cls);
    Verdict inner = membership(GroupDesc::free(2), cls);
    CHECK(outer.answer == inner.answer);
    CHECK(outer.trace.cites("sigma.finite-index"));

    GroupDesc wrappedAb =
        GroupDesc::finiteIndexOver(GroupDesc::abelian(zlattice::FgAbelian(2, {})), "");
    CHECK(membership(wrappedAb, cls).isYes());
    CHECK(sigma1(wrapped).desc.kind == Sigma1Description::Kind::EmptySet);
}

TEST_CASE("living subgraph on the worked examples") {
    LabeledGraph e4 = singleEdge(4);
    // chi = (1,-1): the even edge is dead, two isolated vertices remain
    LabeledGraph dead = livingSubgraph(e4, Character::rank1({Int(1), Int(-1)}));
    CHECK(dead.vertexCount() == 2);
    CHECK(dead.edgeCount() == 0);
    CHECK(!isConnectedAndDominant(dead, e4));

    // chi = (0,1): vertex a dies, the singleton b is connected and dominant
    LabeledGraph single = livingSubgraph(e4, Character::rank1({Int(0), Int(1)}));
    CHECK(single.vertexCount() == 1);
    CHECK(isConnectedAndDominant(single, e4));

    // triangle, chi = 1 on the only odd component: nothing dies
    LabeledGraph tri = triangle433();
    LabeledGraph alive = livingSubgraph(tri, Character::rank1({Int(1)}));
    CHECK(alive == tri);
    CHECK(isConnectedAndDominant(alive, tri));
}

TEST_CASE("living subgraph validates character consistency") {
    LabeledGraph e3 = singleEdge(3);
    CHECK_THROWS_AS(livingSubgraphFromValues(e3, {Int(1), Int(2)}), MismatchedGroups);
    CHECK_NOTHROW(livingSubgraphFromValues(e3, {Int(2), Int(2)}));
}

TEST_CASE("connectivity and domination corner cases") {
    LabeledGraph tri = triangle433();
    CHECK(!isConnectedAndDominant(LabeledGraph({}, {}), tri));
    CHECK(isConnectedAndDominant(tri, tri));
    // single vertex b inside the edge ab: a is adjacent to b, b is in the subgraph
    LabeledGraph e4 = singleEdge(4);
    CHECK(isConnectedAndDominant(LabeledGraph({"b"}, {}), e4));
}

TEST_CASE("dihedral consistency: the living-subgraph decider matches the closed form") {
    for (unsigned long m = 3; m <= 8; ++m) {
        LabeledGraph g = singleEdge(m);
        GroupDesc desc = GroupDesc::artin(g);
        if (m % 2 == 1) {
            for (int t : {-2, -1, 1, 2}) {
                LabeledGraph living = livingSubgraphFromValues(g, {Int(t), Int(t)});
                CHECK(isConnectedAndDominant(living, g));
            }
        } else {
            for (int va = -2; va <= 2; ++va)
                for (int vb = -2; vb <= 2; ++vb) {
                    if (va == 0 && vb == 0) continue;
                    LabeledGraph living = livingSubgraphFromValues(g, {Int(va), Int(vb)});
                    bool member = isConnectedAndDominant(living, g);
                    bool meier = !(va == -vb && va != 0);
                    CHECK(member == meier);
                }
        }
    }
}

TEST_CASE("sigmaN follows the n-stable rules only") {
    CHECK(sigmaN(GroupDesc::free(2), 3, Flavor::Homotopical).desc.kind ==
          Sigma1Description::Kind::EmptySet);
    CHECK(sigmaN(GroupDesc::abelian(zlattice::FgAbelian(3, {})), 5, Flavor::Homological)
              .desc.kind == Sigma1Description::Kind::WholeSphere);
    CHECK(sigmaN(GroupDesc::artin(triangle433()), 2, Flavor::Homotopical).desc.kind ==
          Sigma1Description::Kind::Unknown);
    // finite-index chains transfer at every level
    GroupDesc chain = GroupDesc::finiteIndexOver(
        GroupDesc::finiteIndexOver(GroupDesc::free(3), "6"), "2");
    CHECK(sigmaN(chain, 4, Flavor::Homological).desc.kind ==
          Sigma1Description::Kind::EmptySet);
}

TEST_CASE("pointwise membership agrees with computed descriptions") {
    // groups whose Sigma^1 has an explicit finite-complement description:
    // every class must land on the side the description says
    std::vector<GroupDesc> groups{
        GroupDesc::artin(singleEdge(4)),
        GroupDesc::artin(singleEdge(7)),
        GroupDesc::directProduct(GroupDesc::artin(singleEdge(6)), GroupDesc::free(1)),
        kleinBottleBraid(),
    };
    std::mt19937 rng(112358);
    std::uniform_int_distribution<int> val(-2, 2);
    for (const GroupDesc& g : groups) {
        Sigma1Result desc = sigma1(g);
        auto complement =
            desc.desc.complementIfFinite(abelianize(g).group.freeRank);
        REQUIRE(complement.has_value());
        const std::size_t r = abelianize(g).group.freeRank;
        for (int it = 0; it < 30; ++it) {
            IntVec v(r);
            bool nonzero = false;
            for (std::size_t i = 0; i < r; ++i) {
                v[i] = val(rng);
                if (v[i] != 0) nonzero = true;
            }
            if (!nonzero) continue;
            CharClass cls = CharClass::of(v);
            const bool inComplement =
                std::find(complement->begin(), complement->end(), cls) !=
                complement->end();
            CHECK(membership(g, cls).isNo() == inComplement);
        }
    }
}

TEST_CASE("membership validates the class rank") {
    CHECK_THROWS_AS(membership(GroupDesc::free(2), CharClass::of({Int(1)})),
                    MismatchedGroups);
    CHECK_THROWS_AS(sigmaN(GroupDesc::free(2), 0, Flavor::Homotopical),
                    PreconditionError);
}

TEST_CASE("subsphere inclusion decisions") {
    GroupDesc f2 = GroupDesc::free(2);
    charsphere::Subsphere line = charsphere::vanishingSubsphere(f2, {Word::generator(0)});

    Sigma1Result whole{Sigma1Description::wholeSphere(), {}};
    CHECK(subsphereWithinSigma(line, whole, f2, 1, Flavor::Homotopical).answer ==
          Answer::Yes);

    Sigma1Result empty{Sigma1Description::emptySet(), {}};
    auto out = subsphereWithinSigma(line, empty, f2, 1, Flavor::Homotopical);
    CHECK(out.answer == Answer::No);
    REQUIRE(out.witness.has_value());
    CHECK(line.containsClass(*out.witness));

    Sigma1Result minus{Sigma1Description::sphereMinusFiniteSet(
                           {CharClass::of({Int(0), Int(1)})}),
                       {}};
    CHECK(subsphereWithinSigma(line, minus, f2, 1, Flavor::Homotopical).answer ==
          Answer::No);
    Sigma1Result minusOther{Sigma1Description::sphereMinusFiniteSet(
                                {CharClass::of({Int(1), Int(0)})}),
                            {}};
    CHECK(subsphereWithinSigma(line, minusOther, f2, 1, Flavor::Homotopical).answer ==
          Answer::Yes);
}

TEST_CASE("sigma1 of the wreath-style group through its finite-index subgroup") {
    TableBackedDesc t;
    t.name = "F2 wr C2";
    t.abelianization = zlattice::FgAbelian(2, {2});
    t.generatorNames = {"x1", "y1", "x2", "y2", "s"};
    t.generatorImages = zlattice::IntMatrix::fromRows(
        {{1, 0, 1, 0, 0}, {0, 1, 0, 1, 0}, {0, 0, 0, 0, 1}});
    t.provenanceNote = "wreath product of F2 by the swap involution";
    t.center = zlattice::FgAbelian(0, {});
    GroupDesc h = GroupDesc::tableBacked(t);

    GroupDesc n = GroupDesc::directProduct(GroupDesc::free(2), GroupDesc::free(2));
    std::vector<Word> words{Word::generator(0), Word::generator(1), Word::generator(2),
                            Word::generator(3)};
    Sigma1Result r = sigma1ViaFiniteIndexSubgroup(abelianize(h), n, words);
    CHECK(r.desc.kind == Sigma1Description::Kind::WholeSphere);
    CHECK(r.trace.cites("sigma.finite-index"));
    CHECK(r.trace.cites("sigma.direct-product"));
}

TEST_CASE("finite-index sigma1 derivation pulls back finite complements") {
    // ambient = dihedral m=4 seen through itself (identity embedding words)
    GroupDesc de = GroupDesc::artin(singleEdge(4));
    Abelianization ab = abelianize(de);
    Sigma1Result r = sigma1ViaFiniteIndexSubgroup(
        ab, de, {Word::generator(0), Word::generator(1)});
    REQUIRE(r.desc.kind == Sigma1Description::Kind::SphereMinusFiniteSet);
    CHECK(r.desc.classes.size() == 2);
    CHECK(std::find(r.desc.classes.begin(), r.desc.classes.end(),
                    CharClass::of({Int(1), Int(-1)})) != r.desc.classes.end());
}
