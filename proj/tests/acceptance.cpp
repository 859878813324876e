// Acceptance suite: runs every acceptance criterion and prints one pass/fail
// line per criterion. Exits nonzero when any criterion fails. The path to
// the CLI binary is taken from argv[1] (for the reproduction criterion).

#include <cstdlib>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sigmafix/fixpoint.hpp"
#include "sigmafix/oracle.hpp"
#include "sigmafix/sigma.hpp"

using namespace sigmafix;
using charsphere::CharClass;
using charsphere::Character;
using grouprep::GroupDesc;
using grouprep::LabeledEdge;
using grouprep::LabeledGraph;
using grouprep::Word;
using sigma::Flavor;
using zlattice::FgAbelian;
using zlattice::IntMatrix;

namespace {

struct Criterion {
    int number;
    std::string title;
    bool passed;
    std::string detail;
};

std::vector<Criterion> results;

void record(int number, const std::string& title, bool passed,
            const std::string& detail = "") {
    results.push_back({number, title, passed, detail});
}

LabeledGraph triangle() {
    return LabeledGraph({"a", "b", "c"},
                        {{"a", "b", 4}, {"b", "c", 3}, {"c", "a", 3}});
}

fixpoint::PsiGraphAut swapAB() {
    return fixpoint::PsiGraphAut{{{"a", "b"}, {"b", "a"}, {"c", "c"}}};
}

// ---------------------------------------------------------------- criterion 1

void criterion1() {
    fixpoint::AutTriple t = fixpoint::makeAutTriple(
        GroupDesc::free(2), FgAbelian(1, {}), IntMatrix::fromRows({{1, 1}}),
        IntMatrix::identity(1), fixpoint::PsiIdentity{});
    sigma::Verdict v = fixpoint::fixTypeDirectProduct(t, 1, Flavor::Homotopical);
    auto c53 = v.trace.firstIndex("fix.cor5.3");
    auto c225 = v.trace.firstIndex("sigma.free");
    auto c222 = v.trace.firstIndex("fin.kernel-discrete");
    bool ok = v.isNo() && c53 && c225 && c222 && *c53 < *c225 && *c225 < *c222;
    record(1, "intro example: No for n=1 citing Cor 5.3, Thm 2.2(5), Thm 2.2(2)", ok,
           "verdict " + sigma::answerName(v.answer));
}

// ---------------------------------------------------------------- criterion 2

void criterion2() {
    grouprep::TableBackedDesc t;
    t.name = "P2(Klein bottle)";
    t.abelianization = FgAbelian(2, {2, 2});
    t.generatorNames = {"x", "y", "a", "b"};
    t.generatorImages = IntMatrix::fromRows(
        {{0, 1, 0, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 0, 1, 0}});
    const CharClass cited = CharClass::of({Int(-1), Int(0)});
    t.sigma1Complement = {cited, cited.negated()};
    t.provenanceNote = "published Sigma^1 computation for the Klein-bottle pure braids";
    t.center = FgAbelian(1, {});
    GroupDesc g = GroupDesc::tableBacked(std::move(t));

    sigma::Verdict v = fixpoint::fnfpaNecessaryCheck(
        g,
        fixpoint::CoabelianSubgroup::fromQuotientMap(IntMatrix::fromRows({{-1, 0}}),
                                                     "ker chi"),
        1, Flavor::Homotopical);
    bool ok = v.isNo() && v.witnessClass &&
              (*v.witnessClass == cited || *v.witnessClass == cited.negated());
    record(2, "P2(Klein bottle): FGFPa fails with the cited complement class", ok,
           v.witnessClass ? "witness " + v.witnessClass->toString() : "no witness");
}

// ---------------------------------------------------------------- criterion 3

void criterion3() {
    GroupDesc h = GroupDesc::artin(triangle());

    sigma::Sigma1Result s = sigma::sigma1(h);
    bool stepA = s.desc.kind == sigma::Sigma1Description::Kind::WholeSphere &&
                 s.trace.cites("sigma.living-subgraph");

    sigma::Verdict commutator = fixpoint::subgroupAboveCommutatorType(
        h, fixpoint::CoabelianSubgroup::commutator(h), 1, Flavor::Homotopical);
    bool stepB = commutator.isYes();

    fixpoint::FixDescription fix = fixpoint::fixOfPsi(h, swapAB());
    bool stepC = fix.group == GroupDesc::free(2) &&
                 fix.embedding.generatorWords ==
                     std::vector<Word>{Word::generator(2),
                                       Word::fromLetters({{0, 1}, {1, 1}, {0, 1}, {1, 1}})} &&
                 fix.derivation.cites("fix.jones-vaskou") &&
                 fix.derivation.cites("fix.garside");

    Character restricted = charsphere::restrict(Character::rank1({Int(1)}), fix.embedding);
    bool stepD = restricted.matrix() == IntMatrix::fromRows({{1, 4}}) &&
                 !restricted.isTrivial();

    sigma::Verdict fgfpa = fixpoint::fgfpaWitnessSearch(
        h, FgAbelian(1, {}), {fixpoint::PsiSpec{swapAB()}}, 1, Flavor::Homotopical);
    bool stepE = fgfpa.isNo() && fgfpa.trace.cites("fix.thmD");

    std::ostringstream os;
    os << "sigma1=" << (stepA ? "ok" : "FAIL") << " H'fg=" << (stepB ? "ok" : "FAIL")
       << " fix=" << (stepC ? "ok" : "FAIL") << " restrict=" << (stepD ? "ok" : "FAIL")
       << " thmD=" << (stepE ? "ok" : "FAIL");
    record(3, "triangle Artin counterexample end-to-end (five steps, verdict No)",
           stepA && stepB && stepC && stepD && stepE, os.str());
}

// ---------------------------------------------------------------- criterion 4

void criterion4() {
    grouprep::TableBackedDesc t;
    t.name = "F2 wr C2";
    t.abelianization = FgAbelian(2, {2});
    t.generatorNames = {"x1", "y1", "x2", "y2", "s"};
    t.generatorImages = IntMatrix::fromRows(
        {{1, 0, 1, 0, 0}, {0, 1, 0, 1, 0}, {0, 0, 0, 0, 1}});
    t.provenanceNote = "wreath product of F2 by the swap";
    t.center = FgAbelian(0, {});
    GroupDesc h = GroupDesc::tableBacked(std::move(t));

    GroupDesc n =
        GroupDesc::directProduct(GroupDesc::free(2), GroupDesc::free(2));
    sigma::Sigma1Result s = sigma::sigma1ViaFiniteIndexSubgroup(
        grouprep::abelianize(h), n,
        {Word::generator(0), Word::generator(1), Word::generator(2), Word::generator(3)});
    bool derived = s.desc.kind == sigma::Sigma1Description::Kind::WholeSphere &&
                   s.trace.cites("sigma.finite-index") &&
                   s.trace.cites("sigma.direct-product");

    grouprep::SubgroupEmbedding fixEmb{
        GroupDesc::finiteIndexOver(GroupDesc::free(2), "index 2"),
        h,
        {Word::fromLetters({{0, 1}, {2, 1}}), Word::fromLetters({{1, 1}, {3, 1}})}};
    sigma::Verdict fgfpa = fixpoint::fgfpaWitnessSearch(
        h, FgAbelian(1, {}),
        {fixpoint::PsiSpec{fixpoint::PsiOpaque{fixEmb, "centralizer of the swap", 2}}}, 1,
        Flavor::Homotopical);
    bool no = fgfpa.isNo() && fgfpa.trace.cites("sigma.finite-index");

    record(4,
           "wreath counterexample: Sigma^1(H) derived whole sphere, H x Z lacks FGFPa",
           derived && no,
           std::string("derivation ") + (derived ? "ok" : "FAIL") + ", verdict " +
               sigma::answerName(fgfpa.answer));
}

// ---------------------------------------------------------------- criterion 5

void criterion5() {
    std::size_t mismatches = 0, patterns = 0;
    for (unsigned long m = 3; m <= 12; ++m) {
        oracle::DihedralReport r = oracle::dihedralExhaust(m);
        mismatches += r.mismatches;
        patterns += r.patternsChecked;
    }
    record(5, "Meier exhaustion m=3..12: living subgraph equals the closed form",
           mismatches == 0,
           std::to_string(patterns) + " patterns, " + std::to_string(mismatches) +
               " mismatches");
}

// ---------------------------------------------------------------- criterion 6

void criterion6() {
    std::mt19937 rng(60406);
    std::uniform_int_distribution<int> dist(-9, 9);
    std::size_t found = 0;
    const std::size_t total = 50;
    for (std::size_t it = 0; it < total; ++it) {
        const std::size_t rank = it % 2 == 0 ? 2 : 3;
        IntVec v(rank);
        bool nonzero = false;
        while (!nonzero) {
            for (std::size_t i = 0; i < rank; ++i) {
                v[i] = dist(rng);
                if (v[i] != 0) nonzero = true;
            }
        }
        v = CharClass::of(v).direction();  // primitive
        Character chi = Character::rank1(v);
        auto w = oracle::freeSigma1Witness(rank, chi);
        if (!w) continue;
        // re-verify the certificate end to end
        grouprep::Abelianization ab = grouprep::abelianize(GroupDesc::free(rank));
        bool valid = grouprep::evaluateWord(ab, chi, w->from)[0] >= 0 &&
                     grouprep::evaluateWord(ab, chi, w->to)[0] >= 0 &&
                     grouprep::evaluateWord(ab, chi, w->dipVertex)[0] < 0 &&
                     oracle::geodesicDips(chi, w->from, w->to);
        if (valid) ++found;
    }
    record(6, "free-group Sigma^1 oracle: 50/50 geodesic-dip certificates",
           found == total, std::to_string(found) + "/" + std::to_string(total));
}

// ---------------------------------------------------------------- criterion 7

bool smithChecks(const IntMatrix& m) {
    zlattice::SmithForm f = zlattice::smith(m);
    IntMatrix d(m.rows(), m.cols());
    for (std::size_t i = 0; i < f.diag.size(); ++i) d.at(i, i) = f.diag[i];
    if (!(f.left * m * f.right == d)) return false;
    bool zero = false;
    for (std::size_t i = 0; i < f.diag.size(); ++i) {
        if (f.diag[i] < 0) return false;
        if (f.diag[i] == 0) {
            zero = true;
        } else {
            if (zero) return false;
            if (i > 0 && f.diag[i - 1] != 0 && f.diag[i] % f.diag[i - 1] != 0) return false;
        }
    }
    Int dl = zlattice::determinant(f.left);
    Int dr = zlattice::determinant(f.right);
    return (dl == 1 || dl == -1) && (dr == 1 || dr == -1);
}

// membership via the Smith route, independent of the Hermite-form path
bool snfMembership(const IntMatrix& m, const IntVec& p) {
    zlattice::SmithForm f = zlattice::smith(m);
    IntVec z = f.left.apply(p);
    for (std::size_t i = 0; i < z.size(); ++i) {
        const Int d = i < f.diag.size() ? f.diag[i] : Int(0);
        if (d == 0) {
            if (z[i] != 0) return false;
        } else if (z[i] % d != 0) {
            return false;
        }
    }
    return true;
}

void criterion7() {
    std::mt19937 rng(70707);
    bool ok = true;
    std::string firstFailure;

    {
        std::uniform_int_distribution<int> entry(-9, 9);
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        for (int it = 0; it < 1000 && ok; ++it) {
            IntMatrix m(dim(rng), dim(rng));
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
            if (!smithChecks(m)) {
                ok = false;
                firstFailure = "smith checks failed on sample " + std::to_string(it);
            }
        }
    }

    // boxed enumeration agreement on small matrices
    std::uniform_int_distribution<int> entry3(-3, 3);
    std::uniform_int_distribution<std::size_t> dim3(1, 3);
    for (int it = 0; it < 150 && ok; ++it) {
        const std::size_t d = dim3(rng), k = dim3(rng);
        IntMatrix m(d, k);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < k; ++j) m.at(i, j) = entry3(rng);
        zlattice::Lattice lat = zlattice::imageLattice(m);

        std::set<IntVec> span;
        std::vector<long> coeff(k, -5);
        while (true) {
            IntVec v(d);
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t i = 0; i < d; ++i) v[i] += Int(coeff[j]) * m.at(i, j);
            span.insert(v);
            if (!lat.contains(v)) {
                ok = false;
                firstFailure = "a spanned point was rejected";
                break;
            }
            std::size_t pos = 0;
            while (pos < k && coeff[pos] == 5) coeff[pos++] = -5;
            if (pos == k) break;
            ++coeff[pos];
        }
        if (!ok) break;

        // every box point: the two exact routes agree; members carry verified
        // certificates; non-members are absent from the enumerated span
        std::vector<long> point(d, -3);
        while (ok) {
            IntVec p(d);
            for (std::size_t i = 0; i < d; ++i) p[i] = point[i];
            const bool member = lat.contains(p);
            if (member != snfMembership(m, p)) {
                ok = false;
                firstFailure = "Hermite and Smith membership routes disagree";
                break;
            }
            if (member) {
                auto cert = zlattice::solveInColumnSpan(m, p);
                if (!cert || !(m.apply(*cert) == p)) {
                    ok = false;
                    firstFailure = "missing or wrong membership certificate";
                    break;
                }
                bool small = true;
                for (const Int& c : *cert)
                    if (c > 5 || c < -5) small = false;
                if (small && span.find(p) == span.end()) {
                    ok = false;
                    firstFailure = "small-certificate member missing from the span";
                    break;
                }
            } else if (span.find(p) != span.end()) {
                ok = false;
                firstFailure = "non-member appears in the enumerated span";
                break;
            }
            std::size_t pos = 0;
            while (pos < d && point[pos] == 3) point[pos++] = -3;
            if (pos == d) break;
            ++point[pos];
        }
    }
    record(7, "zlattice property suite: 1000 Smith samples + boxed membership", ok,
           firstFailure);
}

// ---------------------------------------------------------------- criterion 8

void criterion8() {
    std::mt19937 rng(80808);
    std::uniform_int_distribution<int> small(-2, 2);
    bool ok = true;
    std::string detail;

    int done = 0;
    while (done < 20 && ok) {
        IntMatrix gamma(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) gamma.at(i, j) = small(rng);
        Int det = zlattice::determinant(gamma);
        if (det != 1 && det != -1) continue;
        if (zlattice::rank(gamma - IntMatrix::identity(2)) != 2) continue;
        IntMatrix alpha(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) alpha.at(i, j) = small(rng);
        fixpoint::AutTriple t = fixpoint::makeAutTriple(
            GroupDesc::free(2), FgAbelian(2, {}), alpha, gamma, fixpoint::PsiIdentity{});
        sigma::Verdict fast = fixpoint::fixTypeDirectProduct(t, 1, Flavor::Homotopical);
        sigma::Verdict general = fixpoint::fixTypeDirectProduct(
            t, 1, Flavor::Homotopical, fixpoint::EngineConfig{},
            fixpoint::PathPolicy::ForceGeneral);
        const bool shortcutCited =
            fast.trace.cites("fix.cor5.5") || fast.trace.cites("fix.cor5.6");
        if (!shortcutCited || fast.answer != general.answer) {
            ok = false;
            detail = "finite-cokernel fixture " + std::to_string(done) + " disagreed";
        }
        ++done;
    }

    done = 0;
    while (done < 10 && ok) {
        IntMatrix base = (done % 3 == 0)   ? IntMatrix::fromRows({{0, 1}, {1, 0}})
                         : (done % 3 == 1) ? IntMatrix::fromRows({{1, 0}, {0, -1}})
                                           : IntMatrix::identity(2).negated();
        IntMatrix u = IntMatrix::identity(2);
        u.at(0, 1) = small(rng);
        IntMatrix uinv = IntMatrix::identity(2);
        uinv.at(0, 1) = -u.at(0, 1);
        IntMatrix gamma = u * base * uinv;
        IntMatrix ker = zlattice::kernelBasis(gamma + IntMatrix::identity(2));
        IntMatrix alpha(2, 2);
        if (ker.cols() > 0) {
            for (std::size_t j = 0; j < 2; ++j) {
                const Int scale = small(rng);
                for (std::size_t i = 0; i < 2; ++i) alpha.at(i, j) = ker.at(i, 0) * scale;
            }
        }
        fixpoint::AutTriple t = fixpoint::makeAutTriple(
            GroupDesc::free(2), FgAbelian(2, {}), alpha, gamma, fixpoint::PsiIdentity{});
        fixpoint::OrderResult ord = fixpoint::finiteOrder(t);
        if (ord.kind != fixpoint::OrderResult::Kind::Finite) {
            ok = false;
            detail = "finite-order fixture was not finite order";
            break;
        }
        sigma::Verdict fast = fixpoint::fixTypeDirectProduct(
            t, 1, Flavor::Homotopical, fixpoint::EngineConfig{},
            fixpoint::PathPolicy::ForceFiniteOrder);
        sigma::Verdict general = fixpoint::fixTypeDirectProduct(
            t, 1, Flavor::Homotopical, fixpoint::EngineConfig{},
            fixpoint::PathPolicy::ForceGeneral);
        if (fast.answer != general.answer) {
            ok = false;
            detail = "finite-order fixture verdicts disagreed";
            break;
        }
        FgAbelian eps = fixpoint::imageEpsilon(t, fixpoint::fixOfPsi(t));
        if (!eps.isFinite()) {
            ok = false;
            detail = "im eps_phi is not finite on a finite-order fixture";
            break;
        }
        if (!eps.torsion.empty() && Int(ord.order) % eps.torsion.back() != 0) {
            ok = false;
            detail = "exponent of im eps_phi does not divide the order";
            break;
        }
        ++done;
    }

    record(8, "rule consistency: Cor 5.5 (20 fixtures) and Cor B (10 fixtures)", ok,
           detail);
}

// ---------------------------------------------------------------- criterion 9

void criterion9() {
    fixpoint::AutTriple t = fixpoint::makeAutTriple(
        GroupDesc::free(2), FgAbelian(2, {}), IntMatrix::fromRows({{1, 1}, {0, 0}}),
        IntMatrix::fromRows({{1, 0}, {0, -1}}), fixpoint::PsiIdentity{});
    fixpoint::IPhiData iphi = fixpoint::iPhi(t);
    bool lattice = iphi.lattice.contains(IntVec{0, 2}) &&
                   !iphi.lattice.contains(IntVec{0, 1}) &&
                   !iphi.lattice.contains(IntVec{1, 0});
    bool quotient = iphi.quotientGroup == FgAbelian(1, {2});
    sigma::Verdict v = fixpoint::fixTypeDirectProduct(t, 1, Flavor::Homotopical);
    sigma::Verdict k = fixpoint::kernelType(GroupDesc::free(2),
                                            CharClass::of({Int(1), Int(1)}), 1,
                                            Flavor::Homotopical);
    bool ok = lattice && quotient && v.isNo() && v.answer == k.answer;
    record(9, "Ex.a: I_phi = 0+2Z, quotient Z+Z/2, verdict via the kernel rule", ok,
           "quotient " + iphi.quotientGroup.toString() + ", verdict " +
               sigma::answerName(v.answer));
}

// --------------------------------------------------------------- criterion 10

void criterion10(const std::string& cliPath) {
    if (cliPath.empty()) {
        record(10, "reproduce-paper exits 0", false, "CLI path not supplied");
        return;
    }
    const std::string cmd = "\"" + cliPath + "\" reproduce-paper > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    record(10, "reproduce-paper exits 0", status == 0,
           "exit status " + std::to_string(status));
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cliPath = argc > 1 ? argv[1] : "";
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10(cliPath);

    bool all = true;
    for (const Criterion& c : results) {
        all = all && c.passed;
        std::cout << "criterion " << c.number << " " << (c.passed ? "[pass]" : "[FAIL]")
                  << " " << c.title;
        if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
        std::cout << "\n";
    }
    std::cout << (all ? "acceptance: all criteria pass\n" : "acceptance: FAILURES\n");
    return all ? 0 : 1;
}
