#include "orbicheck/matrix_group.hpp"

#include "orbicheck/errors.hpp"

#include <algorithm>
#include <deque>

namespace orbicheck {

namespace {

bool matrix_less(const CycMatrix& a, const CycMatrix& b) {
    // entries share a common order here, so coefficient comparison is total
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            int c = CycNum::cmp_same_order(a.at(i, j), b.at(i, j));
            if (c) return c < 0;
        }
    return false;
}

CycMatrix block_diag(const CycMatrix& a, const CycMatrix& b) {
    CycMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return m;
}

} // namespace

MatrixGroup MatrixGroup::generate(int dim, const std::vector<CycMatrix>& gens, int cap) {
    if (dim <= 0) throw ValidationError("matrix group dimension must be positive");
    long field = 1;
    for (const auto& g : gens) {
        if (g.rows() != dim || g.cols() != dim)
            throw ValidationError("generator is not a " + std::to_string(dim) + "x" +
                                  std::to_string(dim) + " matrix: " + g.str());
        if (!g.inverse())
            throw ValidationError("generator is singular: " + g.str());
        field = lcm_order(field, g.common_order());
    }

    MatrixGroup out;
    out.dim_ = dim;
    out.field_order_ = field;

    std::vector<CycMatrix> lifted;
    for (const auto& g : gens) lifted.push_back(g.lifted(field));

    // closure under right products; finite element orders supply all inverses
    std::vector<CycMatrix> elems{CycMatrix::identity(dim).lifted(field)};
    std::unordered_map<std::string, int> seen{{elems[0].key(), 0}};
    std::deque<int> work{0};
    while (!work.empty()) {
        int i = work.front();
        work.pop_front();
        for (const auto& g : lifted) {
            CycMatrix p = elems[size_t(i)] * g;
            std::string k = p.key();
            if (seen.count(k)) continue;
            if (int(elems.size()) >= cap)
                throw CapExceeded("group generation exceeded the cap of " + std::to_string(cap) +
                                  " elements");
            seen.emplace(std::move(k), int(elems.size()));
            elems.push_back(std::move(p));
            work.push_back(int(elems.size()) - 1);
        }
    }

    std::sort(elems.begin(), elems.end(), matrix_less);
    out.elems_ = std::move(elems);
    for (size_t i = 0; i < out.elems_.size(); ++i)
        out.index_.emplace(out.elems_[i].key(), int(i));

    int n = int(out.elems_.size());
    out.table_.n = n;
    out.table_.t.assign(size_t(n) * n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            CycMatrix p = out.elems_[size_t(a)] * out.elems_[size_t(b)];
            auto it = out.index_.find(p.key());
            if (it == out.index_.end())
                throw InternalCheckError("closure lost a product during table construction");
            out.table_.t[size_t(a) * n + b] = it->second;
        }
    out.table_.id = -1;
    for (int a = 0; a < n; ++a)
        if (out.elems_[size_t(a)].is_identity()) { out.table_.id = a; break; }
    if (out.table_.id < 0) throw InternalCheckError("generated group lost its identity");
    out.table_.inv.assign(size_t(n), -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (out.table_.mul(a, b) == out.table_.id && out.table_.mul(b, a) == out.table_.id) {
                out.table_.inv[size_t(a)] = b;
                break;
            }
        if (out.table_.inv[size_t(a)] < 0) throw InternalCheckError("element without inverse");
    }
    return out;
}

std::optional<int> MatrixGroup::find(const CycMatrix& m) const {
    if (m.rows() != dim_ || m.cols() != dim_) return std::nullopt;
    long o = lcm_order(m.common_order(), field_order_);
    if (o != field_order_) {
        // entries outside our field can still equal group entries only if they
        // reduce into it; compare the slow way
        for (size_t i = 0; i < elems_.size(); ++i)
            if (elems_[i] == m) return int(i);
        return std::nullopt;
    }
    auto it = index_.find(m.lifted(field_order_).key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

MatrixGroup direct_product(const MatrixGroup& a, const MatrixGroup& b, int cap) {
    long n = long(a.order()) * b.order();
    if (n > cap)
        throw CapExceeded("direct product would have " + std::to_string(n) +
                          " elements (cap " + std::to_string(cap) + ")");
    std::vector<CycMatrix> gens;
    CycMatrix ida = CycMatrix::identity(a.dim()), idb = CycMatrix::identity(b.dim());
    for (const auto& g : a.elements()) gens.push_back(block_diag(g, idb));
    for (const auto& h : b.elements()) gens.push_back(block_diag(ida, h));
    return MatrixGroup::generate(a.dim() + b.dim(), gens, int(n));
}

Subgroup diagonal_subgroup(const MatrixGroup& prod, const MatrixGroup& factor) {
    if (prod.dim() != 2 * factor.dim())
        throw ValidationError("diagonal subgroup needs the square of the factor chart");
    Subgroup s;
    for (const auto& g : factor.elements()) {
        auto idx = prod.find(block_diag(g, g));
        if (!idx)
            throw ValidationError("product group does not contain diag(g, g) for g = " + g.str());
        s.elems.push_back(*idx);
    }
    std::sort(s.elems.begin(), s.elems.end());
    return s;
}

} // namespace orbicheck
