#include "orbicheck/linalg.hpp"

#include "orbicheck/errors.hpp"

namespace orbicheck {

std::string vec_str(const CycVector& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out + ")";
}

CycMatrix CycMatrix::identity(int n) {
    CycMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = CycNum(1);
    return m;
}

CycMatrix CycMatrix::from_rows(const std::vector<CycVector>& rows) {
    if (rows.empty()) return CycMatrix();
    CycMatrix m(int(rows.size()), int(rows[0].size()));
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows[0].size())
            throw ValidationError("matrix rows have unequal lengths");
        for (size_t c = 0; c < rows[r].size(); ++c) m.at(int(r), int(c)) = rows[r][c];
    }
    return m;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
    if (cols_ != o.rows_) throw ValidationError("matrix product dimension mismatch");
    CycMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const CycNum& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) = r.at(i, j) + aik * o.at(k, j);
        }
    return r;
}

CycVector CycMatrix::operator*(const CycVector& v) const {
    if (int(v.size()) != cols_) throw ValidationError("matrix-vector dimension mismatch");
    CycVector r(size_t(rows_), CycNum(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[size_t(i)] = r[size_t(i)] + at(i, j) * v[size_t(j)];
    return r;
}

CycMatrix CycMatrix::operator+(const CycMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("matrix sum dimension mismatch");
    CycMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

CycMatrix CycMatrix::operator-(const CycMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("matrix difference dimension mismatch");
    CycMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

bool CycMatrix::operator==(const CycMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

bool CycMatrix::is_identity() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != CycNum(i == j ? 1 : 0)) return false;
    return true;
}

CycMatrix CycMatrix::transpose() const {
    CycMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

CycNum CycMatrix::det() const {
    if (!is_square()) throw ValidationError("determinant of a non-square matrix");
    CycMatrix m = *this;
    CycNum d(1);
    for (int col = 0; col < cols_; ++col) {
        int piv = -1;
        for (int r = col; r < rows_; ++r)
            if (!m.at(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) return CycNum(0);
        if (piv != col) {
            for (int j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(col, j));
            d = -d;
        }
        d = d * m.at(col, col);
        CycNum inv = m.at(col, col).inverse();
        for (int r = col + 1; r < rows_; ++r) {
            if (m.at(r, col).is_zero()) continue;
            CycNum f = m.at(r, col) * inv;
            for (int j = col; j < cols_; ++j) m.at(r, j) = m.at(r, j) - f * m.at(col, j);
        }
    }
    return d;
}

std::optional<CycMatrix> CycMatrix::inverse() const {
    if (!is_square()) throw ValidationError("inverse of a non-square matrix");
    int n = rows_;
    CycMatrix m = *this, inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!m.at(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) return std::nullopt;
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(m.at(piv, j), m.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        CycNum f = m.at(col, col).inverse();
        for (int j = 0; j < n; ++j) {
            m.at(col, j) = m.at(col, j) * f;
            inv.at(col, j) = inv.at(col, j) * f;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || m.at(r, col).is_zero()) continue;
            CycNum g = m.at(r, col);
            for (int j = 0; j < n; ++j) {
                m.at(r, j) = m.at(r, j) - g * m.at(col, j);
                inv.at(r, j) = inv.at(r, j) - g * inv.at(col, j);
            }
        }
    }
    return inv;
}

CycMatrix CycMatrix::lifted(long m) const {
    CycMatrix r = *this;
    for (auto& e : r.a_) e = e.lifted(m);
    return r;
}

long CycMatrix::common_order() const {
    long m = 1;
    for (const auto& e : a_) m = lcm_order(m, e.order());
    return m;
}

std::string CycMatrix::str() const {
    std::string out = "[";
    for (int i = 0; i < rows_; ++i) {
        if (i) out += ", ";
        out += "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) out += ", ";
            out += at(i, j).str();
        }
        out += "]";
    }
    return out + "]";
}

std::string CycMatrix::key() const {
    std::string out = std::to_string(rows_) + "x" + std::to_string(cols_) + "|";
    for (const auto& e : a_) out += e.key() + ";";
    return out;
}

std::vector<CycVector> rref(std::vector<CycVector> rows) {
    if (rows.empty()) return rows;
    size_t ncols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != ncols) throw ValidationError("rref rows have unequal lengths");
    size_t lead = 0;
    for (size_t col = 0; col < ncols && lead < rows.size(); ++col) {
        size_t piv = lead;
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv; // lowest column wins pivot ties
        if (piv == rows.size()) continue;
        std::swap(rows[lead], rows[piv]);
        CycNum f = rows[lead][col].inverse();
        for (size_t j = col; j < ncols; ++j) rows[lead][j] = rows[lead][j] * f;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == lead || rows[r][col].is_zero()) continue;
            CycNum g = rows[r][col];
            for (size_t j = col; j < ncols; ++j) rows[r][j] = rows[r][j] - g * rows[lead][j];
        }
        ++lead;
    }
    rows.resize(lead); // rows past the last pivot are zero
    return rows;
}

Subspace Subspace::span(int ambient_dim, const std::vector<CycVector>& vectors) {
    Subspace s(ambient_dim);
    for (const auto& v : vectors)
        if (int(v.size()) != ambient_dim)
            throw ValidationError("spanning vector has wrong dimension");
    s.basis_ = rref(vectors);
    return s;
}

Subspace Subspace::whole(int ambient_dim) {
    std::vector<CycVector> rows;
    for (int i = 0; i < ambient_dim; ++i) {
        CycVector v(size_t(ambient_dim), CycNum(0));
        v[size_t(i)] = CycNum(1);
        rows.push_back(std::move(v));
    }
    return span(ambient_dim, rows);
}

bool Subspace::operator==(const Subspace& o) const {
    if (n_ != o.n_ || basis_.size() != o.basis_.size()) return false;
    for (size_t i = 0; i < basis_.size(); ++i)
        for (size_t j = 0; j < basis_[i].size(); ++j)
            if (basis_[i][j] != o.basis_[i][j]) return false;
    return true;
}

bool Subspace::contains(const CycVector& v) const {
    if (int(v.size()) != n_) throw ValidationError("membership test dimension mismatch");
    CycVector r = v;
    for (const auto& b : basis_) {
        // find the pivot column of b and cancel it out of r
        size_t p = 0;
        while (p < b.size() && b[p].is_zero()) ++p;
        if (p == b.size()) continue;
        if (r[p].is_zero()) continue;
        CycNum f = r[p];
        for (size_t j = p; j < r.size(); ++j) r[j] = r[j] - f * b[j];
    }
    for (const auto& e : r)
        if (!e.is_zero()) return false;
    return true;
}

std::string Subspace::str() const {
    if (basis_.empty()) return "{0}";
    std::string out = "span{";
    for (size_t i = 0; i < basis_.size(); ++i) {
        if (i) out += ", ";
        out += vec_str(basis_[i]);
    }
    return out + "}";
}

Subspace kernel(const CycMatrix& m) {
    int n = m.cols();
    std::vector<CycVector> rows;
    for (int r = 0; r < m.rows(); ++r) {
        CycVector v;
        for (int c = 0; c < n; ++c) v.push_back(m.at(r, c));
        rows.push_back(std::move(v));
    }
    std::vector<CycVector> red = rref(std::move(rows));
    // pivot columns of the reduced matrix
    std::vector<int> pivot_of_row;
    std::vector<bool> is_pivot(size_t(n), false);
    for (const auto& row : red) {
        size_t p = 0;
        while (p < row.size() && row[p].is_zero()) ++p;
        pivot_of_row.push_back(int(p));
        is_pivot[p] = true;
    }
    std::vector<CycVector> basis;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[size_t(f)]) continue;
        CycVector v(size_t(n), CycNum(0));
        v[size_t(f)] = CycNum(1);
        for (size_t r = 0; r < red.size(); ++r)
            v[size_t(pivot_of_row[r])] = -red[r][size_t(f)];
        basis.push_back(std::move(v));
    }
    return Subspace::span(n, basis);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw ValidationError("intersecting subspaces of different ambient dimensions");
    int n = a.ambient_dim();
    // Zassenhaus: reduce rows [a|a] and [b|0]; rows with zero left half carry
    // intersection vectors in their right half.
    std::vector<CycVector> rows;
    for (const auto& v : a.basis()) {
        CycVector w(size_t(2 * n), CycNum(0));
        for (int i = 0; i < n; ++i) w[size_t(i)] = w[size_t(n + i)] = v[size_t(i)];
        rows.push_back(std::move(w));
    }
    for (const auto& v : b.basis()) {
        CycVector w(size_t(2 * n), CycNum(0));
        for (int i = 0; i < n; ++i) w[size_t(i)] = v[size_t(i)];
        rows.push_back(std::move(w));
    }
    std::vector<CycVector> red = rref(std::move(rows));
    std::vector<CycVector> inter;
    for (const auto& row : red) {
        bool left_zero = true;
        for (int i = 0; i < n && left_zero; ++i)
            if (!row[size_t(i)].is_zero()) left_zero = false;
        if (!left_zero) continue;
        CycVector v(row.begin() + n, row.end());
        inter.push_back(std::move(v));
    }
    return Subspace::span(n, inter);
}

Subspace apply(const CycMatrix& m, const Subspace& s) {
    if (m.cols() != s.ambient_dim()) throw ValidationError("apply dimension mismatch");
    std::vector<CycVector> img;
    for (const auto& b : s.basis()) img.push_back(m * b);
    return Subspace::span(m.rows(), img);
}

std::optional<CycVector> solve(const CycMatrix& m, const CycVector& v) {
    if (int(v.size()) != m.rows()) throw ValidationError("solve dimension mismatch");
    int n = m.cols();
    std::vector<CycVector> rows;
    for (int r = 0; r < m.rows(); ++r) {
        CycVector row;
        for (int c = 0; c < n; ++c) row.push_back(m.at(r, c));
        row.push_back(v[size_t(r)]);
        rows.push_back(std::move(row));
    }
    std::vector<CycVector> red = rref(std::move(rows));
    CycVector x(size_t(n), CycNum(0));
    for (const auto& row : red) {
        size_t p = 0;
        while (p < row.size() && row[p].is_zero()) ++p;
        if (p == size_t(n)) return std::nullopt; // pivot in the augmented column
        x[p] = row[size_t(n)];
    }
    return x;
}

int rank(const CycMatrix& m) {
    std::vector<CycVector> rows;
    for (int r = 0; r < m.rows(); ++r) {
        CycVector v;
        for (int c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
        rows.push_back(std::move(v));
    }
    return int(rref(std::move(rows)).size());
}

} // namespace orbicheck
