#include "tcc/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace tcc {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0)
{
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(std::move(entries))
{
    if (a_.size() != rows_ * cols_) throw std::invalid_argument("entry count does not match shape");
    for (auto x : a_)
        if (!field_.contains(x)) throw std::invalid_argument("matrix entry out of range for " + field_.name());
}

Matrix::Matrix(Field field, const std::vector<std::vector<Elem>>& rows)
    : field_(std::move(field)), rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size())
{
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix rows");
        for (auto x : r) {
            if (!field_.contains(x)) throw std::invalid_argument("matrix entry out of range for " + field_.name());
            a_.push_back(x);
        }
    }
}

Matrix Matrix::identity(Field field, std::size_t n) { return scalar(std::move(field), n, 1); }

Matrix Matrix::scalar(Field field, std::size_t n, Elem a)
{
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = a;
    return m;
}

Matrix Matrix::diagonal(Field field, const std::vector<Elem>& d)
{
    Matrix m(std::move(field), d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

Matrix Matrix::companion(const Poly& f)
{
    if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("companion matrix needs a monic polynomial of degree >= 1");
    const auto n = static_cast<std::size_t>(f.degree());
    Matrix m(f.field(), n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = 1;
    for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = f.field().neg(f[j]);
    return m;
}

Matrix Matrix::jordan_block(Field field, std::size_t n)
{
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = 1;
    return m;
}

Matrix Matrix::block_diagonal(const std::vector<Matrix>& blocks)
{
    if (blocks.empty()) throw std::invalid_argument("block_diagonal needs at least one block");
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    Matrix m(blocks.front().field(), r, c);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
        r0 += b.rows();
        c0 += b.cols();
    }
    return m;
}

std::vector<Elem> Matrix::row(std::size_t i) const
{
    return {a_.begin() + static_cast<std::ptrdiff_t>(i * cols_), a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

bool Matrix::is_zero() const noexcept
{
    for (auto x : a_)
        if (x) return false;
    return true;
}

bool Matrix::is_scalar() const noexcept
{
    if (!is_square()) return false;
    if (rows_ == 0) return true;
    const Elem d = (*this)(0, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? d : 0)) return false;
    return true;
}

Elem Matrix::trace() const
{
    if (!is_square()) throw std::invalid_argument("trace of a non-square matrix");
    Elem t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t = field_.add(t, (*this)(i, i));
    return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::invalid_argument("block out of range");
    Matrix b(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

Matrix Matrix::map(const Field& target, const std::function<Elem(Elem)>& f) const
{
    std::vector<Elem> out(a_.size());
    for (std::size_t i = 0; i < a_.size(); ++i) out[i] = f(a_[i]);
    return Matrix(target, rows_, cols_, std::move(out));
}

std::string Matrix::str() const
{
    std::ostringstream s;
    for (std::size_t i = 0; i < rows_; ++i) {
        s << '[';
        for (std::size_t j = 0; j < cols_; ++j) s << (j ? " " : "") << (*this)(i, j);
        s << "]\n";
    }
    return s.str();
}

namespace {

void require_same_shape(const Matrix& a, const Matrix& b)
{
    if (!(a.field() == b.field())) throw std::invalid_argument("matrices over different fields");
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("shape mismatch");
}

void require_square(const Matrix& a)
{
    if (!a.is_square()) throw std::invalid_argument("square matrix required");
}

}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b)
{
    require_same_shape(a, b);
    Matrix r(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a.field().add(a(i, j), b(i, j));
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    require_same_shape(a, b);
    Matrix r(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a.field().sub(a(i, j), b(i, j));
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (!(a.field() == b.field())) throw std::invalid_argument("matrices over different fields");
    if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch in product");
    const Field& F = a.field();
    Matrix r(F, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Elem x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) = F.add(r(i, j), F.mul(x, b(k, j)));
        }
    return r;
}

Matrix scale(const Matrix& a, Elem c)
{
    Matrix r(a);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a.field().mul(a(i, j), c);
    return r;
}

Matrix transpose(const Matrix& a)
{
    Matrix r(a.field(), a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
    return r;
}

Matrix power(const Matrix& a, std::size_t e)
{
    require_square(a);
    Matrix r = Matrix::identity(a.field(), a.rows());
    for (std::size_t i = 0; i < e; ++i) r = r * a;
    return r;
}

Elem det(const Matrix& a)
{
    require_square(a);
    const Field& F = a.field();
    Matrix m(a);
    const std::size_t n = m.rows();
    Elem d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
            d = F.neg(d);
        }
        d = F.mul(d, m(c, c));
        const Elem inv = F.inv(m(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            const Elem f = F.mul(m(i, c), inv);
            if (f == 0) continue;
            for (std::size_t j = c; j < n; ++j) m(i, j) = F.sub(m(i, j), F.mul(f, m(c, j)));
        }
    }
    return d;
}

Rref rref(const Matrix& input)
{
    const Field& F = input.field();
    Matrix m(input);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
        const Elem inv = F.inv(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = F.mul(m(r, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            const Elem f = m(i, c);
            if (f == 0) continue;
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = F.sub(m(i, j), F.mul(f, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), r, std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix inverse(const Matrix& a)
{
    require_square(a);
    const std::size_t n = a.rows();
    Matrix aug(a.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    Rref r = rref(aug);
    if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) throw std::domain_error("matrix is singular");
    return r.reduced.block(0, n, n, n);
}

Matrix evaluate(const Poly& f, const Matrix& a)
{
    require_square(a);
    if (!(f.field() == a.field())) throw std::invalid_argument("polynomial and matrix over different fields");
    Matrix r(a.field(), a.rows(), a.cols());
    for (int i = f.degree(); i >= 0; --i) {
        r = r * a;
        for (std::size_t d = 0; d < a.rows(); ++d) r(d, d) = a.field().add(r(d, d), f[static_cast<std::size_t>(i)]);
    }
    return r;
}

std::vector<Elem> row_times(const std::vector<Elem>& v, const Matrix& a)
{
    if (v.size() != a.rows()) throw std::invalid_argument("vector length does not match matrix");
    const Field& F = a.field();
    std::vector<Elem> out(a.cols(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) out[j] = F.add(out[j], F.mul(v[i], a(i, j)));
    }
    return out;
}

Matrix row_nullspace(const Matrix& m)
{
    // v M = 0  <=>  M^t v^t = 0; read the basis off the reduced form of M^t.
    const Field& F = m.field();
    Rref r = rref(transpose(m));
    const std::size_t n = m.rows();
    std::vector<bool> is_pivot(n, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    Matrix basis(F, n - r.rank, n);
    std::size_t out = 0;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        basis(out, free) = 1;
        for (std::size_t i = 0; i < r.rank; ++i) basis(out, r.pivots[i]) = F.neg(r.reduced(i, free));
        ++out;
    }
    // Reduced echelon form makes the basis canonical for the subspace.
    return rref(basis).reduced;
}

Matrix row_space(const Matrix& m)
{
    Rref r = rref(m);
    return r.reduced.block(0, 0, r.rank, m.cols());
}

Matrix vstack(const Matrix& top, const Matrix& bottom)
{
    if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack column mismatch");
    std::vector<Elem> e(top.entries());
    e.insert(e.end(), bottom.entries().begin(), bottom.entries().end());
    return Matrix(top.field(), top.rows() + bottom.rows(), top.cols(), std::move(e));
}

Matrix kron(const Matrix& a, const Matrix& b)
{
    if (!(a.field() == b.field())) throw std::invalid_argument("matrices over different fields");
    const Field& F = a.field();
    Matrix r(F, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Elem x = a(i, j);
            if (x == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = F.mul(x, b(k, l));
        }
    return r;
}

Matrix vec(const Matrix& b)
{
    require_square(b);
    return Matrix(b.field(), 1, b.rows() * b.cols(), b.entries());
}

Matrix unvec(const Matrix& v, std::size_t n)
{
    if (v.rows() != 1 || v.cols() != n * n) throw std::invalid_argument("unvec needs a 1 x n^2 row vector");
    return Matrix(v.field(), n, n, v.entries());
}

Poly charpoly(const Matrix& a)
{
    require_square(a);
    const Field& F = a.field();
    const std::size_t n = a.rows();
    Matrix h(a);

    // Similarity transforms to upper Hessenberg form.
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t i = m;
        while (i < n && h(i, m - 1) == 0) ++i;
        if (i == n) continue;
        if (i != m) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
            for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
        }
        const Elem inv = F.inv(h(m, m - 1));
        for (std::size_t r = m + 1; r < n; ++r) {
            const Elem u = F.mul(h(r, m - 1), inv);
            if (u == 0) continue;
            for (std::size_t j = 0; j < n; ++j) h(r, j) = F.sub(h(r, j), F.mul(u, h(m, j)));
            for (std::size_t j = 0; j < n; ++j) h(j, m) = F.add(h(j, m), F.mul(u, h(j, r)));
        }
    }

    // p_m = (t - h_mm) p_{m-1} - sum_i h_{m-i,m} (prod of subdiagonal) p_{m-i-1}, 1-based.
    std::vector<Poly> p;
    p.reserve(n + 1);
    p.push_back(Poly::constant(F, 1));
    for (std::size_t m = 1; m <= n; ++m) {
        Poly pm = Poly::linear(F, h(m - 1, m - 1)) * p[m - 1];
        Elem t = 1;
        for (std::size_t i = 1; i < m; ++i) {
            t = F.mul(t, h(m - i, m - i - 1));
            const Elem c = F.mul(t, h(m - i - 1, m - 1));
            if (c != 0) pm = pm - scale(p[m - i - 1], c);
        }
        p.push_back(std::move(pm));
    }
    return p[n];
}

Poly minpoly(const Matrix& a)
{
    require_square(a);
    const Field& F = a.field();
    const std::size_t n = a.rows();
    Poly result = Poly::constant(F, 1);
    for (std::size_t unit = 0; unit < n; ++unit) {
        // Incremental elimination over the Krylov sequence v, vA, vA^2, ...
        // combos[j] expresses echelon row j in terms of the Krylov vectors.
        std::vector<std::vector<Elem>> echelon, combos;
        std::vector<std::size_t> pivot;
        std::vector<Elem> v(n, 0);
        v[unit] = 1;
        for (std::size_t d = 0;; ++d) {
            std::vector<Elem> w = v;
            std::vector<Elem> combo(d + 1, 0);
            combo[d] = 1;
            for (std::size_t j = 0; j < echelon.size(); ++j) {
                const Elem c = w[pivot[j]];
                if (c == 0) continue;
                for (std::size_t x = 0; x < n; ++x) w[x] = F.sub(w[x], F.mul(c, echelon[j][x]));
                for (std::size_t x = 0; x < combos[j].size(); ++x) combo[x] = F.sub(combo[x], F.mul(c, combos[j][x]));
            }
            std::size_t lead = 0;
            while (lead < n && w[lead] == 0) ++lead;
            if (lead == n) {
                result = lcm(result, Poly(F, combo));
                break;
            }
            const Elem inv = F.inv(w[lead]);
            for (auto& x : w) x = F.mul(x, inv);
            for (auto& x : combo) x = F.mul(x, inv);
            echelon.push_back(std::move(w));
            combos.push_back(std::move(combo));
            pivot.push_back(lead);
            v = row_times(v, a);
        }
    }
    return result;
}

bool is_cyclic(const Matrix& a) { return minpoly(a).degree() == static_cast<int>(a.rows()); }

std::vector<std::size_t> rank_sequence(const Matrix& a)
{
    require_square(a);
    const std::size_t n = a.rows();
    std::vector<std::size_t> out{n};
    Matrix p = Matrix::identity(a.field(), n);
    for (std::size_t i = 1; i <= n; ++i) {
        p = p * a;
        out.push_back(rank(p));
    }
    return out;
}

namespace {

BlockSplit split_by_power(const Matrix& a, const Matrix& shifted)
{
    const std::size_t n = a.rows();
    const Matrix sn = power(shifted, n);
    const Matrix kernel = row_nullspace(sn);
    const Matrix image = row_space(sn);
    const Matrix change = vstack(kernel, image);
    const Matrix d = change * a * inverse(change);
    const std::size_t m = kernel.rows();
    return {change, d.block(0, 0, m, m), d.block(m, m, n - m, n - m)};
}

}  // namespace

FittingSplit fitting_split(const Matrix& a)
{
    require_square(a);
    BlockSplit s = split_by_power(a, a);
    const std::size_t m0 = s.first.rows();
    const std::size_t k0 = a.rows() - rank(a);
    return {std::move(s.change), std::move(s.first), std::move(s.second), m0, k0};
}

BlockSplit split_at_eigenvalue(const Matrix& a, Elem alpha)
{
    require_square(a);
    return split_by_power(a, a - Matrix::scalar(a.field(), a.rows(), alpha));
}

}  // namespace tcc
