#include "sigmafix/zlattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace sigmafix::zlattice {

namespace {

Int absInt(const Int& x) { return x < 0 ? Int(-x) : x; }

void swapRows(IntMatrix& m, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swapCols(IntMatrix& m, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m.at(r, i), m.at(r, j));
}

// row[dst] += q * row[src]
void addRowMultiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(dst, c) += q * m.at(src, c);
}

// col[dst] += q * col[src]
void addColMultiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, dst) += q * m.at(r, src);
}

void negateRow(IntMatrix& m, std::size_t i) {
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(i, c) = -m.at(i, c);
}

void negateCol(IntMatrix& m, std::size_t j) {
    for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, j) = -m.at(r, j);
}

Int floorDiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

struct HermiteResult {
    IntMatrix reduced;                  // column echelon, normalized
    IntMatrix transform;                // unimodular, reduced = input * transform
    std::vector<std::size_t> pivotRows; // strictly increasing, one per basis column
};

// Combines columns h and j by the unimodular transform that puts
// gcd(a[i][h], a[i][j]) at (i, h) and zero at (i, j). A single extended-gcd
// step per pair keeps intermediate entries from the blowup that repeated
// Euclid chains produce.
void gcdCombineCols(IntMatrix& a, IntMatrix& u, std::size_t i, std::size_t h,
                    std::size_t j) {
    const Int p = a.at(i, h);
    const Int x = a.at(i, j);
    if (x == 0) return;
    if (p != 0 && x % p == 0) {
        Int q = x / p;
        addColMultiple(a, j, h, -q);
        addColMultiple(u, j, h, -q);
        return;
    }
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t(), x.get_mpz_t());
    Int pg, xg;
    mpz_divexact(pg.get_mpz_t(), p.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(xg.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    for (IntMatrix* mat : {&a, &u}) {
        for (std::size_t r = 0; r < mat->rows(); ++r) {
            const Int ch = mat->at(r, h);
            const Int cj = mat->at(r, j);
            mat->at(r, h) = s * ch + t * cj;
            mat->at(r, j) = pg * cj - xg * ch;
        }
    }
}

// Column-style Hermite form: pivots positive, first nonzero of each kept
// column, pivot rows strictly increasing, entries left of a pivot reduced
// into [0, pivot).
HermiteResult columnHermite(const IntMatrix& m) {
    HermiteResult res;
    res.reduced = m;
    res.transform = IntMatrix::identity(m.cols());
    IntMatrix& a = res.reduced;
    IntMatrix& u = res.transform;
    const std::size_t nr = m.rows(), nc = m.cols();

    std::size_t h = 0;
    for (std::size_t i = 0; i < nr && h < nc; ++i) {
        std::size_t best = nc;
        for (std::size_t j = h; j < nc; ++j) {
            if (a.at(i, j) == 0) continue;
            if (best == nc || absInt(a.at(i, j)) < absInt(a.at(i, best))) best = j;
        }
        if (best == nc) continue;
        swapCols(a, h, best);
        swapCols(u, h, best);

        for (std::size_t j = h + 1; j < nc; ++j) gcdCombineCols(a, u, i, h, j);

        if (a.at(i, h) < 0) {
            negateCol(a, h);
            negateCol(u, h);
        }
        for (std::size_t j = 0; j < h; ++j) {
            Int q = floorDiv(a.at(i, j), a.at(i, h));
            if (q != 0) {
                addColMultiple(a, j, h, -q);
                addColMultiple(u, j, h, -q);
            }
        }
        res.pivotRows.push_back(i);
        ++h;
    }
    return res;
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::fromRows(std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t nr = rows.size();
    const std::size_t nc = nr == 0 ? 0 : rows.begin()->size();
    IntMatrix m(nr, nc);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != nc) throw DimensionMismatch("ragged row list");
        std::size_t j = 0;
        for (long v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

IntMatrix IntMatrix::fromRowVectors(const std::vector<IntVec>& rows) {
    const std::size_t nr = rows.size();
    const std::size_t nc = nr == 0 ? 0 : rows.front().size();
    IntMatrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
        if (rows[i].size() != nc) throw DimensionMismatch("ragged row list");
        for (std::size_t j = 0; j < nc; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::fromColumnVectors(std::size_t dim, const std::vector<IntVec>& cols) {
    IntMatrix m(dim, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != dim) throw DimensionMismatch("column has wrong dimension");
        for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

IntMatrix IntMatrix::diagonal(const IntVec& entries) {
    IntMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
    return m;
}

Int& IntMatrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw IndexOutOfRange("matrix index out of range");
    return entries_[i * cols_ + j];
}

const Int& IntMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw IndexOutOfRange("matrix index out of range");
    return entries_[i * cols_ + j];
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw DimensionMismatch("matrix product shape mismatch");
    IntMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = entries_[i * cols_ + k];
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                out.at(i, j) += a * other.at(k, j);
        }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionMismatch("matrix sum shape mismatch");
    IntMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] + other.entries_[k];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionMismatch("matrix difference shape mismatch");
    IntMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] - other.entries_[k];
    return out;
}

IntMatrix IntMatrix::negated() const {
    IntMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = -entries_[k];
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

IntVec IntMatrix::apply(const IntVec& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
    IntVec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

bool IntMatrix::isZero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Int& x) { return x == 0; });
}

bool IntMatrix::isIdentity() const {
    if (!isSquare()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

IntVec IntMatrix::column(std::size_t j) const {
    IntVec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
    return out;
}

IntVec IntMatrix::row(std::size_t i) const {
    IntVec out(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out[j] = at(i, j);
    return out;
}

void IntMatrix::setColumn(std::size_t j, const IntVec& v) {
    if (v.size() != rows_) throw DimensionMismatch("column has wrong dimension");
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

IntMatrix IntMatrix::leftColumns(std::size_t count) const {
    if (count > cols_) throw IndexOutOfRange("leftColumns past end");
    IntMatrix out(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < count; ++j) out.at(i, j) = at(i, j);
    return out;
}

IntMatrix IntMatrix::selectRows(const std::vector<std::size_t>& idx) const {
    IntMatrix out(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(idx[i], j);
    return out;
}

IntMatrix IntMatrix::selectColumns(const std::vector<std::size_t>& idx) const {
    IntMatrix out(rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (std::size_t i = 0; i < rows_; ++i) out.at(i, j) = at(i, idx[j]);
    return out;
}

IntMatrix IntMatrix::hstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("hstack row mismatch");
    IntMatrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
    }
    return out;
}

IntMatrix IntMatrix::vstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols()) throw DimensionMismatch("vstack column mismatch");
    IntMatrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) out.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i) out.at(a.rows() + i, j) = b.at(i, j);
    }
    return out;
}

std::string IntMatrix::toString() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << at(i, j).get_str();
        }
    }
    os << "]";
    return os.str();
}

std::size_t SmithForm::rank() const {
    std::size_t r = 0;
    for (const Int& d : diag)
        if (d != 0) ++r;
    return r;
}

SmithForm smith(const IntMatrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    IntMatrix a = m;
    IntMatrix left = IntMatrix::identity(nr);
    IntMatrix right = IntMatrix::identity(nc);
    const std::size_t lim = std::min(nr, nc);

    for (std::size_t t = 0; t < lim; ++t) {
        // smallest-absolute nonzero pivot in the trailing submatrix
        std::size_t pi = nr, pj = nc;
        for (std::size_t i = t; i < nr; ++i)
            for (std::size_t j = t; j < nc; ++j) {
                if (a.at(i, j) == 0) continue;
                if (pi == nr || absInt(a.at(i, j)) < absInt(a.at(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == nr) break;
        swapRows(a, t, pi);
        swapRows(left, t, pi);
        swapCols(a, t, pj);
        swapCols(right, t, pj);

        while (true) {
            bool restart = false;
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (a.at(i, t) == 0) continue;
                Int q = a.at(i, t) / a.at(t, t);
                if (q != 0) {
                    addRowMultiple(a, i, t, -q);
                    addRowMultiple(left, i, t, -q);
                }
                if (a.at(i, t) != 0) {
                    swapRows(a, t, i);
                    swapRows(left, t, i);
                    restart = true;
                    break;
                }
            }
            if (restart) continue;
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (a.at(t, j) == 0) continue;
                Int q = a.at(t, j) / a.at(t, t);
                if (q != 0) {
                    addColMultiple(a, j, t, -q);
                    addColMultiple(right, j, t, -q);
                }
                if (a.at(t, j) != 0) {
                    swapCols(a, t, j);
                    swapCols(right, t, j);
                    restart = true;
                    break;
                }
            }
            if (restart) continue;

            // pivot must divide the whole trailing submatrix
            bool adjusted = false;
            for (std::size_t i = t + 1; i < nr && !adjusted; ++i)
                for (std::size_t j = t + 1; j < nc && !adjusted; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        addRowMultiple(a, t, i, Int(1));
                        addRowMultiple(left, t, i, Int(1));
                        adjusted = true;
                    }
            if (!adjusted) break;
        }

        if (a.at(t, t) < 0) {
            negateRow(a, t);
            negateRow(left, t);
        }
    }

    SmithForm f;
    f.left = std::move(left);
    f.right = std::move(right);
    f.diag.resize(lim);
    for (std::size_t i = 0; i < lim; ++i) f.diag[i] = a.at(i, i);
    return f;
}

Int determinant(const IntMatrix& m) {
    if (!m.isSquare()) throw DimensionMismatch("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t swap = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    swap = i;
                    break;
                }
            if (swap == n) return 0;
            swapRows(a, k, swap);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                Int q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                a.at(i, j) = q;
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

std::size_t rank(const IntMatrix& m) {
    return columnHermite(m).pivotRows.size();
}

FgAbelian::FgAbelian(std::size_t freeRank_, IntVec torsion_)
    : freeRank(freeRank_), torsion(std::move(torsion_)) {
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (torsion[i] <= 1) throw MalformedDescriptor("torsion factors must exceed 1");
        if (i > 0 && torsion[i] % torsion[i - 1] != 0)
            throw MalformedDescriptor("torsion factors must form a divisibility chain");
    }
}

Int FgAbelian::order() const {
    if (!isFinite()) throw PreconditionError("order of an infinite group");
    Int o = 1;
    for (const Int& t : torsion) o *= t;
    return o;
}

std::string FgAbelian::toString() const {
    if (isTrivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (freeRank == 1) {
        os << "Z";
        first = false;
    } else if (freeRank > 1) {
        os << "Z^" << freeRank;
        first = false;
    }
    for (const Int& t : torsion) {
        if (!first) os << " + ";
        os << "Z/" << t.get_str();
        first = false;
    }
    return os.str();
}

IntMatrix torsionRelationColumns(const FgAbelian& a) {
    IntMatrix rel(a.coverDim(), a.torsion.size());
    for (std::size_t j = 0; j < a.torsion.size(); ++j)
        rel.at(a.freeRank + j, j) = a.torsion[j];
    return rel;
}

Lattice Lattice::fromColumns(const IntMatrix& generators) {
    HermiteResult h = columnHermite(generators);
    Lattice l;
    l.dim_ = generators.rows();
    l.basis_ = h.reduced.leftColumns(h.pivotRows.size());
    l.pivotRows_ = h.pivotRows;
    return l;
}

Lattice Lattice::zero(std::size_t dim) {
    return fromColumns(IntMatrix(dim, 0));
}

bool Lattice::contains(const IntVec& v) const {
    return representation(v).has_value();
}

std::optional<IntVec> Lattice::representation(const IntVec& v) const {
    if (v.size() != dim_) throw DimensionMismatch("vector has wrong ambient dimension");
    IntVec r = v;
    IntVec coeff(rank());
    for (std::size_t j = 0; j < rank(); ++j) {
        const std::size_t p = pivotRows_[j];
        Int q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), r[p].get_mpz_t(),
                    basis_.at(p, j).get_mpz_t());
        if (rem != 0) return std::nullopt;
        coeff[j] = q;
        if (q != 0)
            for (std::size_t i = p; i < dim_; ++i) r[i] -= q * basis_.at(i, j);
    }
    for (const Int& x : r)
        if (x != 0) return std::nullopt;
    return coeff;
}

Lattice Lattice::sum(const Lattice& other) const {
    if (dim_ != other.dim_) throw DimensionMismatch("lattice sum dimension mismatch");
    return fromColumns(IntMatrix::hstack(basis_, other.basis_));
}

std::string Lattice::toString() const {
    return basis_.toString();
}

Lattice imageLattice(const IntMatrix& m) {
    return Lattice::fromColumns(m);
}

std::optional<IntVec> solveInColumnSpan(const IntMatrix& m, const IntVec& v) {
    HermiteResult h = columnHermite(m);
    const std::size_t r = h.pivotRows.size();
    if (v.size() != m.rows()) throw DimensionMismatch("vector has wrong ambient dimension");
    IntVec rest = v;
    IntVec y(r);
    for (std::size_t j = 0; j < r; ++j) {
        const std::size_t p = h.pivotRows[j];
        Int q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), rest[p].get_mpz_t(),
                    h.reduced.at(p, j).get_mpz_t());
        if (rem != 0) return std::nullopt;
        y[j] = q;
        if (q != 0)
            for (std::size_t i = p; i < m.rows(); ++i) rest[i] -= q * h.reduced.at(i, j);
    }
    for (const Int& x : rest)
        if (x != 0) return std::nullopt;
    IntVec c(m.cols());
    for (std::size_t j = 0; j < r; ++j)
        if (y[j] != 0)
            for (std::size_t i = 0; i < m.cols(); ++i) c[i] += y[j] * h.transform.at(i, j);
    return c;
}

IntMatrix kernelBasis(const IntMatrix& m) {
    SmithForm f = smith(m);
    std::vector<std::size_t> zeroCols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (j >= f.diag.size() || f.diag[j] == 0) zeroCols.push_back(j);
    return f.right.selectColumns(zeroCols);
}

QuotientData quotientWithProjection(const FgAbelian& ambient, const Lattice& sub) {
    if (sub.dim() != ambient.coverDim())
        throw DimensionMismatch("sublattice has wrong ambient dimension");
    IntMatrix rel = IntMatrix::hstack(sub.basis(), torsionRelationColumns(ambient));
    SmithForm f = smith(rel);

    std::vector<std::size_t> freeIdx, torsIdx;
    IntVec torsion;
    for (std::size_t i = 0; i < ambient.coverDim(); ++i) {
        const Int d = i < f.diag.size() ? f.diag[i] : Int(0);
        if (d == 0)
            freeIdx.push_back(i);
        else if (d > 1) {
            torsIdx.push_back(i);
            torsion.push_back(d);
        }
    }
    QuotientData out;
    out.group = FgAbelian(freeIdx.size(), torsion);
    out.freeProjection = f.left.selectRows(freeIdx);
    out.torsionProjection = f.left.selectRows(torsIdx);
    return out;
}

FgAbelian quotient(const FgAbelian& ambient, const Lattice& sub) {
    return quotientWithProjection(ambient, sub).group;
}

bool isFiniteIndex(const FgAbelian& ambient, const Lattice& sub) {
    return quotient(ambient, sub).isFinite();
}

Lattice preimageLattice(const IntMatrix& m, const Lattice& target) {
    if (target.dim() != m.rows()) throw DimensionMismatch("target lives in the wrong space");
    IntMatrix stacked = IntMatrix::hstack(m, target.basis().negated());
    IntMatrix ker = kernelBasis(stacked);
    IntMatrix xPart(m.cols(), ker.cols());
    for (std::size_t j = 0; j < ker.cols(); ++j)
        for (std::size_t i = 0; i < m.cols(); ++i) xPart.at(i, j) = ker.at(i, j);
    return Lattice::fromColumns(xPart);
}

FgAbelian latticeQuotient(const Lattice& big, const Lattice& small) {
    if (big.dim() != small.dim()) throw DimensionMismatch("lattice quotient dimension mismatch");
    IntMatrix rep(big.rank(), small.rank());
    for (std::size_t j = 0; j < small.rank(); ++j) {
        auto coeff = big.representation(small.basis().column(j));
        if (!coeff) throw PreconditionError("lattice quotient requires small <= big");
        rep.setColumn(j, *coeff);
    }
    SmithForm f = smith(rep);
    std::size_t free = 0;
    IntVec torsion;
    for (std::size_t i = 0; i < big.rank(); ++i) {
        const Int d = i < f.diag.size() ? f.diag[i] : Int(0);
        if (d == 0)
            ++free;
        else if (d > 1)
            torsion.push_back(d);
    }
    return FgAbelian(free, torsion);
}

IntMatrix rightInverseOfSurjection(const IntMatrix& m) {
    SmithForm f = smith(m);
    if (f.rank() != m.rows())
        throw MalformedDescriptor("columns do not generate the target lattice");
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (f.diag[i] != 1)
            throw MalformedDescriptor("columns do not generate the target lattice");
    // m = left^-1 D right^-1 with D = [I | 0]; right * [I; 0] * left inverts it.
    IntMatrix slice(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) slice.at(i, i) = 1;
    return f.right * slice * f.left;
}

IntMatrix saturatedRowSpace(const IntMatrix& m) {
    return kernelBasis(kernelBasis(m).transposed());
}

}  // namespace sigmafix::zlattice
