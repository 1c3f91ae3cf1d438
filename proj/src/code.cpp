#include "tcc/code.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "tcc/rng.hpp"

namespace tcc {

Matrix parity_check(const Matrix& a, Elem lambda)
{
    if (!a.is_square()) throw std::invalid_argument("parity check needs a square matrix");
    const Matrix id = Matrix::identity(a.field(), a.rows());
    return kron(transpose(a), id) - scale(kron(id, a), lambda);
}

TwistedCode code_build(const Matrix& a, Elem lambda)
{
    Matrix h = parity_check(a, lambda);
    Matrix null = row_nullspace(h);
    std::vector<Matrix> basis;
    basis.reserve(null.rows());
    for (std::size_t i = 0; i < null.rows(); ++i) basis.push_back(unvec(null.block(i, 0, 1, null.cols()), a.rows()));
    const std::size_t dim = basis.size();
    return {a, lambda, std::move(h), std::move(basis), dim};
}

std::size_t dim_oracle(const Matrix& a, Elem lambda)
{
    const std::size_t n = a.rows();
    return n * n - rank(parity_check(a, lambda));
}

bool is_codeword(const Matrix& a, Elem lambda, const Matrix& b)
{
    if (!a.is_square() || b.rows() != a.rows() || b.cols() != a.cols())
        throw std::invalid_argument("codeword shape does not match");
    return (a * b - scale(b * a, lambda)).is_zero();
}

NilpotentJordanBasis nilpotent_jordan_basis(const Matrix& a)
{
    const std::size_t n = a.rows();
    const Field& F = a.field();
    if (!power(a, n).is_zero()) throw std::invalid_argument("matrix is not nilpotent");

    // kernels[s] = nullspace of A^s
    std::vector<Matrix> kernels{Matrix(F, 0, n)};
    Matrix p = Matrix::identity(F, n);
    while (kernels.back().rows() < n) {
        p = p * a;
        kernels.push_back(row_nullspace(p));
    }
    const std::size_t height = kernels.size() - 1;

    struct Top {
        std::vector<Elem> u;
        std::size_t height;
    };
    std::vector<Top> tops;
    for (std::size_t s = height; s >= 1; --s) {
        Matrix span = kernels[s - 1];
        for (const auto& t : tops) {
            std::vector<Elem> v = t.u;
            for (std::size_t i = s; i < t.height; ++i) v = row_times(v, a);
            span = vstack(span, Matrix(F, 1, n, v));
        }
        std::size_t r = rank(span);
        const Matrix& ks = kernels[s];
        for (std::size_t i = 0; i < ks.rows(); ++i) {
            Matrix trial = vstack(span, ks.block(i, 0, 1, n));
            std::size_t tr = rank(trial);
            if (tr > r) {
                span = std::move(trial);
                r = tr;
                tops.push_back({ks.row(i), s});
            }
        }
    }

    NilpotentJordanBasis out{Matrix(F, 0, n), {}};
    for (const auto& t : tops) {
        std::vector<Elem> v = t.u;
        for (std::size_t i = 0; i < t.height; ++i) {
            out.change = vstack(out.change, Matrix(F, 1, n, v));
            v = row_times(v, a);
        }
        out.block_sizes.push_back(t.height);
    }
    return out;
}

std::optional<Matrix> find_invertible(const TwistedCode& code, int budget, std::uint64_t seed)
{
    if (code.dim == 0) return std::nullopt;
    const Field& F = code.field();
    const std::size_t n = code.n();

    if (code.lambda != 0 && power(code.a, n).is_zero()) {
        NilpotentJordanBasis jb = nilpotent_jordan_basis(code.a);
        std::vector<Elem> d;
        for (auto mu : jb.block_sizes) {
            Elem x = 1;
            for (std::size_t i = 0; i < mu; ++i) {
                d.push_back(x);
                x = F.mul(x, code.lambda);
            }
        }
        Matrix b = inverse(jb.change) * Matrix::diagonal(F, d) * jb.change;
        if (!is_codeword(code.a, code.lambda, b)) throw std::logic_error("Jordan witness is not a codeword");
        return b;
    }

    Rng rng(seed);
    for (int trial = 0; trial < budget; ++trial) {
        Matrix b(F, n, n);
        for (const auto& g : code.basis) b = b + scale(g, static_cast<Elem>(uniform_below(rng, F.q())));
        if (det(b) != 0) return b;
    }
    return std::nullopt;
}

std::optional<std::size_t> min_weight(const TwistedCode& code, std::uint64_t cap)
{
    if (code.dim == 0) throw std::invalid_argument("a zero code has no nonzero codewords");
    const Field& F = code.field();
    const std::uint64_t q = F.q();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < code.dim; ++i) {
        total *= q;
        if (total > cap) return std::nullopt;
    }
    const std::size_t len = code.n() * code.n();
    std::size_t best = len;
    std::vector<Elem> coeff(code.dim, 0);
    std::vector<Elem> word(len);
    // Enumerate coefficient vectors whose first nonzero entry is 1; scaling
    // a codeword leaves its weight unchanged.
    for (std::size_t lead = 0; lead < code.dim; ++lead) {
        std::uint64_t tail = 1;
        for (std::size_t i = lead + 1; i < code.dim; ++i) tail *= q;
        for (std::uint64_t idx = 0; idx < tail; ++idx) {
            std::fill(coeff.begin(), coeff.end(), 0);
            coeff[lead] = 1;
            std::uint64_t v = idx;
            for (std::size_t i = lead + 1; i < code.dim; ++i) {
                coeff[i] = static_cast<Elem>(v % q);
                v /= q;
            }
            std::fill(word.begin(), word.end(), 0);
            for (std::size_t i = lead; i < code.dim; ++i) {
                if (coeff[i] == 0) continue;
                const auto& e = code.basis[i].entries();
                for (std::size_t j = 0; j < len; ++j) word[j] = F.add(word[j], F.mul(coeff[i], e[j]));
            }
            std::size_t w = 0;
            for (auto x : word) w += (x != 0);
            if (w < best) best = w;
        }
    }
    return best;
}

void write_generator(std::ostream& out, const TwistedCode& code)
{
    out << code.field().q() << ' ' << code.n() << ' ' << code.lambda << ' ' << code.dim << '\n';
    for (const auto& b : code.basis) {
        const auto& e = b.entries();
        for (std::size_t j = 0; j < e.size(); ++j) out << (j ? " " : "") << e[j];
        out << '\n';
    }
}

GeneratorFile read_generator(std::istream& in, const Field& field)
{
    GeneratorFile g{};
    std::size_t dim = 0;
    if (!(in >> g.q >> g.n >> g.lambda >> dim)) throw std::runtime_error("generator file: bad header");
    if (g.q != field.q()) throw std::runtime_error("generator file: field order does not match");
    if (g.lambda >= g.q) throw std::runtime_error("generator file: lambda out of range");
    for (std::size_t r = 0; r < dim; ++r) {
        std::vector<Elem> e(g.n * g.n);
        for (auto& x : e) {
            if (!(in >> x)) throw std::runtime_error("generator file: truncated row " + std::to_string(r));
            if (x >= g.q) throw std::runtime_error("generator file: entry out of range");
        }
        g.basis.emplace_back(field, g.n, g.n, std::move(e));
    }
    return g;
}

}  // namespace tcc
