#pragma once

// Seeded random matrices and the plain-text matrix file format.
//
// Every generator draws entries with uniform_below on the caller's Rng in
// row-major order, so a seed fixes the output on every platform.

#include <iosfwd>
#include <vector>

#include "tcc/linalg.hpp"
#include "tcc/rng.hpp"

namespace tcc {

Elem random_elem(const Field& f, Rng& rng);
Elem random_nonzero(const Field& f, Rng& rng);

/// Entries i.i.d. uniform over the field.
Matrix random_matrix(const Field& f, std::size_t n, Rng& rng);
Matrix random_invertible(const Field& f, std::size_t n, Rng& rng);
/// Monic of degree `deg` with uniform lower coefficients.
Poly random_monic(const Field& f, std::size_t deg, Rng& rng);
/// Companion matrix of a random monic polynomial.
Matrix random_cyclic(const Field& f, std::size_t n, Rng& rng);
/// Parts drawn one at a time, uniform in [1, remaining], then sorted.
std::vector<std::size_t> random_partition(std::size_t n, Rng& rng);
/// P^-1 (J_mu1 + ... + J_mur) P for a random partition and random invertible P.
Matrix random_nilpotent(const Field& f, std::size_t n, Rng& rng);
/// Uniform matrix with its first row replaced by a random combination of
/// the others (zero when n = 1).
Matrix random_singular(const Field& f, std::size_t n, Rng& rng);

enum class TraceKind { Any, Zero, Nonzero };

/// u^t v for nonzero u, v, with v redrawn until the trace has the
/// requested kind. Throws if no such matrix exists (n = 1 with Zero).
Matrix random_rank_one(const Field& f, std::size_t n, Rng& rng, TraceKind trace = TraceKind::Any);

/// Matrix file: "p k n", then the k+1 modulus coefficients c0..ck when
/// k > 1, then n rows of n element encodings.
Matrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const Matrix& a);

}  // namespace tcc
