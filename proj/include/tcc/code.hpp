#pragma once

// The twisted centralizer code C(A, lambda) = { B : AB - lambda BA = 0 }.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "tcc/linalg.hpp"

namespace tcc {

/// H = A^t (x) I - lambda I (x) A; vec(B) H = vec(AB - lambda BA).
Matrix parity_check(const Matrix& a, Elem lambda);

struct TwistedCode {
    Matrix a;
    Elem lambda;
    Matrix parity;
    std::vector<Matrix> basis;  // rows of the reduced nullspace of H, unvec'd
    std::size_t dim;

    std::size_t n() const noexcept { return a.rows(); }
    const Field& field() const noexcept { return a.field(); }
};

TwistedCode code_build(const Matrix& a, Elem lambda);

/// n^2 - rank(H). Ground truth for every closed form in the library.
std::size_t dim_oracle(const Matrix& a, Elem lambda);

/// Direct check of AB - lambda BA = 0.
bool is_codeword(const Matrix& a, Elem lambda, const Matrix& b);

/// Rows u, uA, uA^2, ... of Jordan chains for a nilpotent A, so that
/// P A P^-1 is a direct sum of Jordan blocks J_mu with mu weakly decreasing.
struct NilpotentJordanBasis {
    Matrix change;
    std::vector<std::size_t> block_sizes;
};
NilpotentJordanBasis nilpotent_jordan_basis(const Matrix& a);

/// An invertible codeword or nothing. For nilpotent A and lambda != 0 the
/// witness is built from diag(1, lambda, ..., lambda^(mu-1)) on each Jordan
/// block; otherwise random basis combinations are tried `budget` times.
/// Returning nothing is inconclusive.
std::optional<Matrix> find_invertible(const TwistedCode& code, int budget, std::uint64_t seed = 0);

/// Minimum Hamming weight over nonzero codewords by enumeration, or nothing
/// if q^dim exceeds `cap`. Throws for a zero code.
std::optional<std::size_t> min_weight(const TwistedCode& code, std::uint64_t cap);

/// Generator matrix export: "q n lambda dim", then one line of n^2 element
/// encodings (vec of a basis matrix) per basis element.
void write_generator(std::ostream& out, const TwistedCode& code);

struct GeneratorFile {
    std::uint32_t q;
    std::size_t n;
    Elem lambda;
    std::vector<Matrix> basis;
};
/// Parse a generator file; entries are interpreted in `field`.
GeneratorFile read_generator(std::istream& in, const Field& field);

}  // namespace tcc
