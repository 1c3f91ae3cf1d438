#pragma once

// Closed-form dimension of C(A, lambda) and the inequalities it satisfies.

#include <optional>
#include <string>
#include <vector>

#include "tcc/linalg.hpp"

namespace tcc {

/// Weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<std::size_t> parts);

    const std::vector<std::size_t>& parts() const noexcept { return parts_; }
    std::size_t size() const noexcept;  // sum of parts
    Partition conjugate() const;
    /// Sum of squared parts.
    std::size_t sum_of_squares() const noexcept;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<std::size_t> parts_;
};

/// Which closed form produced a dimension. Later enumerators are deeper
/// paths; a report carries the deepest one used anywhere in the recursion.
enum class Method {
    LambdaZero,
    Scalar,
    NilpotentPartition,
    CyclicGcd,
    FittingSum,
    PrimarySplit,
    OracleFallback,
};

std::string to_string(Method m);

/// Bounds whose hypotheses hold for the input; absent ones do not apply.
struct BoundSet {
    std::optional<std::size_t> rank_lo;       // (n-r)^2, lambda != 0
    std::optional<std::size_t> rank_hi;       // (n-r)^2 + r^2, lambda != 0
    std::optional<std::size_t> ub_half;       // floor(n^2 / 2), lambda not in {0,1}, k0 + m0/2 <= n
    std::optional<std::size_t> ub_nonscalar;  // (n-1)^2 + 1, nonscalar, lambda != 0
    std::optional<std::size_t> ub_gross;      // n^2 - n, nonscalar
    std::optional<std::size_t> spectral_lo;
    std::optional<std::size_t> spectral_hi;
    std::optional<std::size_t> min_lo;        // deg m_A, lambda = 1
    bool singular_nonzero = false;            // A singular, so dim >= 1
};

struct DimReport {
    std::size_t dim;
    Method method;
    std::size_t n;
    std::size_t rank;
    std::size_t k0;
    std::size_t m0;
    BoundSet bounds;
};

/// k0 * n.
std::size_t dim_lambda0(const Matrix& a);

/// Jordan partition of a nilpotent matrix from the ranks of its powers.
Partition nilpotent_partition(const Matrix& a);

/// Sum of squares of the conjugate Jordan partition; lambda != 0.
std::size_t dim_nilpotent(const Matrix& a, Elem lambda);

/// deg gcd(c_A, twist(c_A, lambda)) for cyclic A and lambda != 0.
std::size_t dim_cyclic(const Matrix& a, Elem lambda);

/// Dispatches over the closed forms, falling back to the parity-check
/// oracle on invertible blocks that none of them covers.
DimReport dim_fast(const Matrix& a, Elem lambda, bool with_spectral = false);

/// The dimension alone, skipping the bounds report.
std::size_t dim_value(const Matrix& a, Elem lambda, Method* method = nullptr);

BoundSet bounds(const Matrix& a, Elem lambda, bool with_spectral = false);

/// Names of the bounds in `b` that `dim` violates, plus "gap" if dim lies
/// strictly between n(n-1) and n^2.
std::vector<std::string> bound_violations(const BoundSet& b, std::size_t dim, std::size_t n);

struct TfaeResult {
    bool a;  // A_nil = 0 and minpoly(A_inv) squarefree
    bool b;  // diagonalizable over the splitting field
    bool c;  // spectral lower bound = dim = spectral upper bound
    bool consistent() const noexcept { return a == b && b == c; }
};

/// Throws SpectralUnavailable when the splitting field exceeds the cap.
TfaeResult tfae_check(const Matrix& a, Elem lambda);

}  // namespace tcc
