#include "joininv/zmatrix.hpp"

#include <algorithm>
#include <sstream>

namespace joininv {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols)
        throw std::invalid_argument("IntMatrix: entry count mismatch");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw std::invalid_argument("IntMatrix: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_)
        throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix m(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                m.at(i, j) += a * other.at(k, j);
        }
    return m;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix m = *this;
    for (Int& x : m.data_) x = -x;
    return m;
}

IntMatrix IntMatrix::hstack(const IntMatrix& other) const {
    if (rows_ != other.rows_)
        throw std::invalid_argument("IntMatrix: hstack row mismatch");
    IntMatrix m(rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < other.cols_; ++j) m.at(i, cols_ + j) = other.at(i, j);
    }
    return m;
}

IntMatrix IntMatrix::vstack(const IntMatrix& other) const {
    if (cols_ != other.cols_)
        throw std::invalid_argument("IntMatrix: vstack column mismatch");
    IntMatrix m(rows_ + other.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < other.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(rows_ + i, j) = other.at(i, j);
    return m;
}

IntMatrix IntMatrix::column(std::size_t j) const {
    IntMatrix m(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) m.at(i, 0) = at(i, j);
    return m;
}

IntMatrix IntMatrix::top_rows(std::size_t k) const {
    IntMatrix m(k, cols_);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    return m;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
    }
    os << "]";
    return os.str();
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& factor) {
    for (std::size_t k = 0; k < cols_; ++k) at(dst, k) += factor * at(src, k);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& factor) {
    for (std::size_t k = 0; k < rows_; ++k) at(k, dst) += factor * at(k, src);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

namespace {

// Pivot with the smallest nonzero absolute value in s[t.., t..].
bool find_pivot(const IntMatrix& s, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best = 0;
    for (std::size_t i = t; i < s.rows(); ++i)
        for (std::size_t j = t; j < s.cols(); ++j) {
            const Int& x = s.at(i, j);
            if (x == 0) continue;
            Int a = abs(x);
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

} // namespace

SnfResult snf(const IntMatrix& a) {
    SnfResult r;
    r.s = a;
    r.u = IntMatrix::identity(a.rows());
    r.u_inv = IntMatrix::identity(a.rows());
    r.v = IntMatrix::identity(a.cols());
    IntMatrix& s = r.s;

    const std::size_t nmin = std::min(a.rows(), a.cols());
    for (std::size_t t = 0; t < nmin; ++t) {
        for (;;) {
            std::size_t pi = t, pj = t;
            if (!find_pivot(s, t, pi, pj)) { t = nmin; goto done; }
            if (pi != t) { s.swap_rows(t, pi); r.u.swap_rows(t, pi); r.u_inv.swap_cols(t, pi); }
            if (pj != t) { s.swap_cols(t, pj); r.v.swap_cols(t, pj); }

            bool clean = true;
            for (std::size_t i = t + 1; i < s.rows(); ++i) {
                if (s.at(i, t) == 0) continue;
                Int q = s.at(i, t) / s.at(t, t);
                s.add_row_multiple(i, t, -q);
                r.u.add_row_multiple(i, t, -q);
                r.u_inv.add_col_multiple(t, i, q);
                if (s.at(i, t) != 0) clean = false;
            }
            if (!clean) continue;
            for (std::size_t j = t + 1; j < s.cols(); ++j) {
                if (s.at(t, j) == 0) continue;
                Int q = s.at(t, j) / s.at(t, t);
                s.add_col_multiple(j, t, -q);
                r.v.add_col_multiple(j, t, -q);
                if (s.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility repair: fold an offending row into the pivot row.
            bool divides = true;
            for (std::size_t i = t + 1; i < s.rows() && divides; ++i)
                for (std::size_t j = t + 1; j < s.cols(); ++j)
                    if (s.at(i, j) % s.at(t, t) != 0) {
                        s.add_row_multiple(t, i, 1);
                        r.u.add_row_multiple(t, i, 1);
                        r.u_inv.add_col_multiple(i, t, -1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (s.at(t, t) < 0) {
            s.negate_row(t);
            r.u.negate_row(t);
            for (std::size_t k = 0; k < r.u_inv.rows(); ++k)
                r.u_inv.at(k, t) = -r.u_inv.at(k, t);
        }
    }
done:
    for (std::size_t t = 0; t < nmin; ++t) {
        r.diagonal.push_back(s.at(t, t));
        if (s.at(t, t) != 0) ++r.rank;
    }
    return r;
}

Int det(const IntMatrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("det: matrix not square");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m.at(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& a) { return snf(a).rank; }

IntMatrix kernel_basis(const IntMatrix& a) {
    SnfResult r = snf(a);
    std::size_t dim = a.cols() - r.rank;
    IntMatrix k(a.cols(), dim);
    for (std::size_t c = 0; c < dim; ++c) {
        std::size_t j = r.rank + c;
        // Sign-normalize: first nonzero entry positive.
        int sgn = 0;
        for (std::size_t i = 0; i < a.cols() && sgn == 0; ++i)
            if (r.v.at(i, j) != 0) sgn = r.v.at(i, j) > 0 ? 1 : -1;
        for (std::size_t i = 0; i < a.cols(); ++i)
            k.at(i, c) = sgn < 0 ? -r.v.at(i, j) : r.v.at(i, j);
    }
    return k;
}

FgAbGroup cokernel(const IntMatrix& a) {
    SnfResult r = snf(a);
    long free_rank = static_cast<long>(a.rows() - r.rank);
    std::vector<Int> torsion(r.diagonal.begin(), r.diagonal.begin() + r.rank);
    return FgAbGroup::from_factors(free_rank, torsion);
}

std::optional<IntMatrix> solve(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows())
        throw std::invalid_argument("solve: row mismatch");
    SnfResult r = snf(a);
    IntMatrix ub = r.u * b;
    IntMatrix y(a.cols(), b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i < r.rank) {
                if (ub.at(i, c) % r.s.at(i, i) != 0) return std::nullopt;
                if (i < a.cols()) y.at(i, c) = ub.at(i, c) / r.s.at(i, i);
            } else if (ub.at(i, c) != 0) {
                return std::nullopt;
            }
        }
    }
    return r.v * y;
}

std::pair<FgAbGroup, FgAbGroup> presented_hom_kernel_cokernel(
    const IntMatrix& src_rel, const IntMatrix& dst_rel, const IntMatrix& map) {
    const std::size_t m = src_rel.rows();
    const std::size_t n = dst_rel.rows();
    if (map.rows() != n || map.cols() != m)
        throw std::invalid_argument("presented_hom: map shape mismatch");

    // Well-definedness: map must carry source relations into the destination
    // relation lattice.
    if (src_rel.cols() > 0 && !solve(dst_rel, map * src_rel))
        throw IncompatibleMap("map does not respect relations");

    // Cokernel: Z^n / (dst relations + image of map).
    FgAbGroup coker = cokernel(dst_rel.hstack(map));

    // Kernel lattice L = { x : map(x) lies in the destination relation lattice },
    // obtained as the x-projection of ker [map | dst_rel].
    IntMatrix combined = map.hstack(dst_rel);
    IntMatrix gens = kernel_basis(combined).top_rows(m);

    // Extract a basis of L from the SNF of its generator matrix:
    // gens = u^{-1} s v^{-1}, so the columns d_i * u^{-1}[:, i] form a basis.
    SnfResult g = snf(gens);
    IntMatrix basis(m, g.rank);
    for (std::size_t j = 0; j < g.rank; ++j)
        for (std::size_t i = 0; i < m; ++i)
            basis.at(i, j) = g.diagonal[j] * g.u_inv.at(i, j);

    if (g.rank == 0) return {FgAbGroup::trivial(), coker};

    // Kernel of the induced map = L / (source relations), presented by the
    // coordinates of the source relations in the basis of L.
    auto coords = solve(basis, src_rel);
    if (!coords)
        throw std::logic_error("presented_hom: source relations escape kernel lattice");
    return {cokernel(*coords), coker};
}

} // namespace joininv
