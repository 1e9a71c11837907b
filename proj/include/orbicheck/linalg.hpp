#pragma once

#include "orbicheck/cyclotomic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbicheck {

using CycVector = std::vector<CycNum>;

std::string vec_str(const CycVector& v);

/** Dense matrix over Q(zeta), row-major. */
class CycMatrix {
public:
    CycMatrix() : rows_(0), cols_(0) {}
    CycMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, CycNum(0)) {}
    static CycMatrix identity(int n);
    /** From row lists; all rows must have equal length. */
    static CycMatrix from_rows(const std::vector<CycVector>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    CycNum& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const CycNum& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    CycMatrix operator*(const CycMatrix& o) const;
    CycVector operator*(const CycVector& v) const;
    CycMatrix operator+(const CycMatrix& o) const;
    CycMatrix operator-(const CycMatrix& o) const;

    bool operator==(const CycMatrix& o) const;
    bool operator!=(const CycMatrix& o) const { return !(*this == o); }
    bool is_identity() const;
    bool is_square() const { return rows_ == cols_; }

    CycNum det() const;                    // square only
    std::optional<CycMatrix> inverse() const; // nullopt if singular
    CycMatrix transpose() const;

    /** All entries rewritten in Q(zeta_m); m must be a common multiple of entry orders. */
    CycMatrix lifted(long m) const;
    /** lcm of the orders of all entries. */
    long common_order() const;

    std::string str() const;
    /** Stable dedupe/sort key; entries must share a common order (see lifted). */
    std::string key() const;

private:
    int rows_, cols_;
    std::vector<CycNum> a_;
};

/**
 * Linear subspace of Q(zeta)^n held as a reduced-row-echelon basis (pivots 1,
 * pivot columns cleared and strictly increasing), so equal subspaces have
 * byte-identical bases.
 */
class Subspace {
public:
    Subspace() : n_(0) {}
    explicit Subspace(int ambient_dim) : n_(ambient_dim) {} // zero subspace
    static Subspace span(int ambient_dim, const std::vector<CycVector>& vectors);
    static Subspace whole(int ambient_dim);

    int ambient_dim() const { return n_; }
    int dim() const { return int(basis_.size()); }
    const std::vector<CycVector>& basis() const { return basis_; }

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    bool contains(const CycVector& v) const;
    std::string str() const;

private:
    int n_;
    std::vector<CycVector> basis_;
};

/** Solution space of M x = 0; dim = cols - rank. */
Subspace kernel(const CycMatrix& m);

Subspace intersect(const Subspace& a, const Subspace& b);

/** Image subspace { M v : v in s }; M must accept ambient vectors of s. */
Subspace apply(const CycMatrix& m, const Subspace& s);

inline bool member(const CycVector& v, const Subspace& s) { return s.contains(v); }

/** One solution of M x = v, or nullopt when inconsistent. */
std::optional<CycVector> solve(const CycMatrix& m, const CycVector& v);

/** Reduced row echelon form of a list of vectors (discards zero rows). */
std::vector<CycVector> rref(std::vector<CycVector> rows);

int rank(const CycMatrix& m);

} // namespace orbicheck
