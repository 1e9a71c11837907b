#pragma once

#include "orbicheck/groups.hpp"
#include "orbicheck/linalg.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace orbicheck {

/**
 * Finite group of invertible matrices over Q(zeta). Elements are stored in a
 * canonical order (sorted by entry encoding over a common cyclotomic order),
 * so identical generating data always yields an identical object.
 */
class MatrixGroup {
public:
    /** Closure of the generators under products; throws CapExceeded past cap. */
    static MatrixGroup generate(int dim, const std::vector<CycMatrix>& gens, int cap = 64);

    int order() const { return int(elems_.size()); }
    int dim() const { return dim_; }
    long field_order() const { return field_order_; }
    const CycMatrix& matrix(int i) const { return elems_[size_t(i)]; }
    const std::vector<CycMatrix>& elements() const { return elems_; }
    int identity() const { return table_.id; }
    const CayleyTable& table() const { return table_; }
    int mul(int a, int b) const { return table_.mul(a, b); }
    int inv(int a) const { return table_.inv[size_t(a)]; }

    /** Index of a matrix equal to m, if m belongs to the group. */
    std::optional<int> find(const CycMatrix& m) const;

private:
    int dim_ = 0;
    long field_order_ = 1;
    std::vector<CycMatrix> elems_;
    CayleyTable table_;
    std::unordered_map<std::string, int> index_;
};

/** Block-diagonal product acting on the direct sum of the two spaces. */
MatrixGroup direct_product(const MatrixGroup& a, const MatrixGroup& b, int cap = 64);

/** Indices in prod of the elements diag(g, g) for g in factor; prod must contain them. */
Subgroup diagonal_subgroup(const MatrixGroup& prod, const MatrixGroup& factor);

} // namespace orbicheck
