#ifndef SIGMAFIX_ZLATTICE_HPP
#define SIGMAFIX_ZLATTICE_HPP

// Exact integer-matrix algebra: Smith normal form, column Hermite form,
// sublattices of Z^n with syntactic normal forms, quotients of finitely
// generated abelian groups. No floating point anywhere.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sigmafix/errors.hpp"

namespace sigmafix {

using Int = mpz_class;
using IntVec = std::vector<Int>;

namespace zlattice {

/// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix fromRows(std::initializer_list<std::initializer_list<long>> rows);
    static IntMatrix fromRowVectors(const std::vector<IntVec>& rows);
    static IntMatrix fromColumnVectors(std::size_t dim, const std::vector<IntVec>& cols);
    static IntMatrix diagonal(const IntVec& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j);
    const Int& at(std::size_t i, std::size_t j) const;

    bool operator==(const IntMatrix& other) const = default;

    IntMatrix operator*(const IntMatrix& other) const;
    IntMatrix operator+(const IntMatrix& other) const;
    IntMatrix operator-(const IntMatrix& other) const;
    IntMatrix negated() const;
    IntMatrix transposed() const;
    IntVec apply(const IntVec& v) const;  // matrix * column vector

    bool isZero() const;
    bool isSquare() const { return rows_ == cols_; }
    bool isIdentity() const;

    IntVec column(std::size_t j) const;
    IntVec row(std::size_t i) const;
    void setColumn(std::size_t j, const IntVec& v);

    /// Columns [0, count) as a new matrix.
    IntMatrix leftColumns(std::size_t count) const;
    /// Rows selected by index, in the given order.
    IntMatrix selectRows(const std::vector<std::size_t>& idx) const;
    IntMatrix selectColumns(const std::vector<std::size_t>& idx) const;

    static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
    static IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);

    std::string toString() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

/// Smith normal form: left * original * right is diagonal, both transforms
/// unimodular, diagonal entries nonnegative with d1 | d2 | ... and trailing
/// zeros only.
struct SmithForm {
    IntMatrix left;
    IntMatrix right;
    IntVec diag;  // length min(rows, cols)

    std::size_t rank() const;
};

SmithForm smith(const IntMatrix& m);

/// Exact determinant (Bareiss fraction-free elimination). Square input only.
Int determinant(const IntMatrix& m);

/// Rank over the rationals.
std::size_t rank(const IntMatrix& m);

/// Finitely generated abelian group Z^freeRank + Z/t1 + ... with the
/// invariant factors forming a divisibility chain (all > 1).
struct FgAbelian {
    std::size_t freeRank = 0;
    IntVec torsion;

    FgAbelian() = default;
    FgAbelian(std::size_t freeRank_, IntVec torsion_);

    bool isFinite() const { return freeRank == 0; }
    bool isTrivial() const { return freeRank == 0 && torsion.empty(); }
    /// Dimension of the free cover Z^freeRank + one coordinate per torsion factor.
    std::size_t coverDim() const { return freeRank + torsion.size(); }
    /// Order when finite.
    Int order() const;

    bool operator==(const FgAbelian& other) const = default;
    std::string toString() const;
};

/// Columns t_i * e_(freeRank + i) presenting the torsion of the free cover.
IntMatrix torsionRelationColumns(const FgAbelian& a);

/// Sublattice of Z^dim with basis kept in column Hermite normal form, so two
/// lattices are equal iff their representations are identical.
class Lattice {
public:
    static Lattice fromColumns(const IntMatrix& generators);
    static Lattice zero(std::size_t dim);

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return basis_.cols(); }
    const IntMatrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivotRows() const { return pivotRows_; }

    bool contains(const IntVec& v) const;
    /// Coefficients of v in the Hermite basis, if v lies in the lattice.
    std::optional<IntVec> representation(const IntVec& v) const;

    Lattice sum(const Lattice& other) const;

    bool operator==(const Lattice& other) const = default;
    std::string toString() const;

private:
    Lattice() = default;
    std::size_t dim_ = 0;
    IntMatrix basis_;  // dim x rank
    std::vector<std::size_t> pivotRows_;
};

/// Integer column span of m, as a lattice handle in Z^rows.
Lattice imageLattice(const IntMatrix& m);

/// Coefficient vector c with m * c == v, if v lies in the column span of m.
std::optional<IntVec> solveInColumnSpan(const IntMatrix& m, const IntVec& v);

/// Columns spanning { x : m x = 0 }. The kernel of an integer matrix is
/// saturated, so this is also a basis of the rational kernel.
IntMatrix kernelBasis(const IntMatrix& m);

/// Quotient of the ambient group by a sublattice given in its free cover.
/// Throws DimensionMismatch when the lattice lives in the wrong dimension.
FgAbelian quotient(const FgAbelian& ambient, const Lattice& sub);

/// quotient() plus the unimodular change of coordinates: freeProjection maps
/// cover coordinates onto the free coordinates of the quotient.
struct QuotientData {
    FgAbelian group;
    IntMatrix freeProjection;     // group.freeRank x coverDim
    IntMatrix torsionProjection;  // group.torsion.size() x coverDim, read mod torsion
};
QuotientData quotientWithProjection(const FgAbelian& ambient, const Lattice& sub);

bool isFiniteIndex(const FgAbelian& ambient, const Lattice& sub);

/// { x : m x lies in target }, as a lattice in the column space of m's domain.
Lattice preimageLattice(const IntMatrix& m, const Lattice& target);

/// big / small for nested lattices small <= big of Z^dim.
FgAbelian latticeQuotient(const Lattice& big, const Lattice& small);

/// Right inverse h with m * h = identity, for m whose columns generate Z^rows.
/// Throws MalformedDescriptor when the columns do not generate.
IntMatrix rightInverseOfSurjection(const IntMatrix& m);

/// Saturation of the row space: basis (as columns) of { x : x orthogonal to ker m }.
IntMatrix saturatedRowSpace(const IntMatrix& m);

}  // namespace zlattice
}  // namespace sigmafix

#endif
