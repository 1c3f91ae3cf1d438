#include "tcc/generate.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace tcc {

Elem random_elem(const Field& f, Rng& rng) { return static_cast<Elem>(uniform_below(rng, f.q())); }

Elem random_nonzero(const Field& f, Rng& rng) { return static_cast<Elem>(1 + uniform_below(rng, f.q() - 1)); }

Matrix random_matrix(const Field& f, std::size_t n, Rng& rng)
{
    std::vector<Elem> e(n * n);
    for (auto& x : e) x = random_elem(f, rng);
    return Matrix(f, n, n, std::move(e));
}

Matrix random_invertible(const Field& f, std::size_t n, Rng& rng)
{
    // Each draw is invertible with probability above 1/4.
    while (true) {
        Matrix m = random_matrix(f, n, rng);
        if (det(m) != 0) return m;
    }
}

Poly random_monic(const Field& f, std::size_t deg, Rng& rng)
{
    std::vector<Elem> c(deg + 1);
    for (std::size_t i = 0; i < deg; ++i) c[i] = random_elem(f, rng);
    c[deg] = 1;
    return Poly(f, std::move(c));
}

Matrix random_cyclic(const Field& f, std::size_t n, Rng& rng) { return Matrix::companion(random_monic(f, n, rng)); }

std::vector<std::size_t> random_partition(std::size_t n, Rng& rng)
{
    std::vector<std::size_t> parts;
    while (n > 0) {
        const std::size_t p = 1 + static_cast<std::size_t>(uniform_below(rng, n));
        parts.push_back(p);
        n -= p;
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return parts;
}

Matrix random_nilpotent(const Field& f, std::size_t n, Rng& rng)
{
    std::vector<Matrix> blocks;
    for (auto p : random_partition(n, rng)) blocks.push_back(Matrix::jordan_block(f, p));
    const Matrix j = Matrix::block_diagonal(blocks);
    const Matrix p = random_invertible(f, n, rng);
    return inverse(p) * j * p;
}

Matrix random_singular(const Field& f, std::size_t n, Rng& rng)
{
    Matrix m = random_matrix(f, n, rng);
    for (std::size_t j = 0; j < n; ++j) m(0, j) = 0;
    for (std::size_t i = 1; i < n; ++i) {
        const Elem c = random_elem(f, rng);
        for (std::size_t j = 0; j < n; ++j) m(0, j) = f.add(m(0, j), f.mul(c, m(i, j)));
    }
    return m;
}

Matrix random_rank_one(const Field& f, std::size_t n, Rng& rng, TraceKind trace)
{
    if (n == 1 && trace == TraceKind::Zero) throw std::invalid_argument("a 1x1 rank-one matrix has nonzero trace");
    auto nonzero_vector = [&] {
        std::vector<Elem> v(n);
        do {
            for (auto& x : v) x = random_elem(f, rng);
        } while (std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; }));
        return v;
    };
    const std::vector<Elem> u = nonzero_vector();
    while (true) {
        const std::vector<Elem> v = nonzero_vector();
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = f.mul(u[i], v[j]);
        const Elem t = m.trace();
        if (trace == TraceKind::Any || (trace == TraceKind::Zero) == (t == 0)) return m;
    }
}

namespace {

// Next non-blank line split into nonnegative integers.
std::vector<std::uint64_t> read_line(std::istream& in, const char* what)
{
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::vector<std::uint64_t> out;
        std::string tok;
        while (ls >> tok) {
            if (tok.find_first_not_of("0123456789") != std::string::npos)
                throw std::runtime_error(std::string("matrix file: non-integer token '") + tok + "' in " + what);
            try {
                out.push_back(std::stoull(tok));
            } catch (const std::out_of_range&) {
                throw std::runtime_error(std::string("matrix file: integer out of range in ") + what);
            }
        }
        return out;
    }
    throw std::runtime_error(std::string("matrix file: missing ") + what);
}

}  // namespace

Matrix read_matrix(std::istream& in)
{
    const auto head = read_line(in, "header");
    if (head.size() != 3) throw std::runtime_error("matrix file: header must be 'p k n'");
    const auto p = head[0], k = head[1], n = head[2];
    if (p > (1u << 20) || k < 1 || k > 20 || n < 1 || n > 4096) throw std::runtime_error("matrix file: header values out of range");
    Field f = [&] {
        try {
            if (k == 1) return Field::make(static_cast<std::uint32_t>(p), 1);
            const auto mod = read_line(in, "modulus");
            if (mod.size() != k + 1) throw std::runtime_error("matrix file: modulus needs k+1 coefficients");
            std::vector<std::uint32_t> m;
            for (auto c : mod) {
                if (c >= p) throw std::runtime_error("matrix file: modulus coefficient out of range");
                m.push_back(static_cast<std::uint32_t>(c));
            }
            return Field::with_modulus(static_cast<std::uint32_t>(p), std::move(m));
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error(std::string("matrix file: ") + e.what());
        }
    }();
    std::vector<Elem> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = read_line(in, "matrix row");
        if (row.size() != n) throw std::runtime_error("matrix file: row " + std::to_string(i + 1) + " has the wrong length");
        for (auto x : row) {
            if (x >= f.q()) throw std::runtime_error("matrix file: entry out of range in row " + std::to_string(i + 1));
            entries.push_back(static_cast<Elem>(x));
        }
    }
    std::string rest;
    while (std::getline(in, rest))
        if (rest.find_first_not_of(" \t\r") != std::string::npos) throw std::runtime_error("matrix file: trailing data");
    return Matrix(f, n, n, std::move(entries));
}

void write_matrix(std::ostream& out, const Matrix& a)
{
    const Field& f = a.field();
    out << f.p() << ' ' << f.k() << ' ' << a.rows() << '\n';
    if (f.k() > 1) {
        const auto& m = f.modulus();
        for (std::size_t i = 0; i < m.size(); ++i) out << (i ? " " : "") << m[i];
        out << '\n';
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out << (j ? " " : "") << a(i, j);
        out << '\n';
    }
}

}  // namespace tcc
