#pragma once

// Counting experiments over F_q^{n x n}: how often C(A, lambda) is nonzero,
// invertible and nilpotent censuses, fixed-point statistics of permutations
// and the derangement extension of partial injections.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tcc/gf.hpp"

namespace tcc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "num/den", always with a denominator.
std::string rational_str(const Rational& r);

/// q^{n^2} matrices at most this many are enumerated.
inline constexpr std::uint64_t kExhaustiveCap = std::uint64_t{1} << 22;

enum class Mode { Exhaustive, MonteCarlo };
std::string to_string(Mode m);

struct ProbEstimate {
    std::uint32_t q;
    std::size_t n;
    Elem lambda;
    Mode mode;
    std::uint64_t trials;         // matrices examined
    std::uint64_t nonzero_count;  // those with C(A, lambda) != 0
    Rational pi;                  // nonzero_count / trials
    double stderr_ = 0;           // sqrt(pi (1 - pi) / trials); 0 when exhaustive
    std::optional<std::uint64_t> seed;
    Rational bound_q_inv;  // 1/q
    Rational bound_54;     // 5/(4q)
    Rational bound_76;     // 7/(6q)

    /// Lower bound that applies to (n, lambda): 1 for lambda = 1, 1/q for
    /// lambda = 0 or n = 1, 7/(6q) for n = 3, 5/(4q) otherwise.
    Rational bound() const;
    /// Exhaustive: pi >= bound (pi = 1 when lambda = 1).
    /// Monte Carlo: pi >= bound - 4 stderr.
    bool pass() const;
};

/// Exhaustive mode throws std::invalid_argument above kExhaustiveCap.
/// Monte Carlo draws `trials` uniform matrices from Rng(seed).
ProbEstimate prob_estimate(const Field& f, std::size_t n, Elem lambda, Mode mode, std::uint64_t trials = 0,
                           std::uint64_t seed = 0);

/// One JSON object (single line) with the experiment schema.
std::string to_json_line(const ProbEstimate& e);

/// prod_{i<n} (q^n - q^i).
BigInt gl_order(std::size_t n, std::uint64_t q);
/// 1 - 1/q - 1/q^2 < |GL(n,q)| / q^{n^2} <= 1 - 1/q, in exact arithmetic.
bool gl_ratio_check(std::size_t n, std::uint64_t q);

/// Number of A with A^n = 0, by enumeration.
std::uint64_t nilpotent_census(const Field& f, std::size_t n);

/// Proportion of S_n with at least two fixed points, from the alternating
/// sum for derangements.
Rational fixed_point_proportion(std::size_t n);
/// Same quantity by enumerating S_n.
Rational fixed_point_proportion_enumerated(std::size_t n);

/// Injective, fixed-point-free sigma: [s] -> [r], stored 1-based.
class InjectiveMap {
public:
    /// images[i] is the image of i+1. Throws std::invalid_argument if the
    /// map is not injective, has a fixed point, or leaves [r].
    InjectiveMap(std::size_t r, std::vector<std::size_t> images);

    std::size_t s() const noexcept { return images_.size(); }
    std::size_t r() const noexcept { return r_; }
    std::size_t operator()(std::size_t i) const { return images_.at(i - 1); }
    const std::vector<std::size_t>& images() const noexcept { return images_; }

private:
    std::size_t r_;
    std::vector<std::size_t> images_;
};

struct DerangementExtension {
    std::vector<std::size_t> domain;  // ascending subset of [r]
    std::vector<std::size_t> image;   // image[i] is the image of domain[i]
    std::size_t at(std::size_t x) const;
};

/// Extends sigma to a fixed-point-free bijection of [r] or of [r] minus
/// one point. Points outside [s] receive images outside the image of
/// sigma: the end of each sigma-chain is sent back to its start, and the
/// points in neither set are cycled among themselves, or dropped when
/// there is exactly one.
DerangementExtension derangement_extend(const InjectiveMap& sigma);

/// Every valid sigma: [s] -> [r] with 1 <= s <= r.
std::vector<InjectiveMap> all_injective_maps(std::size_t r);

/// prod_{i=1..n} (1 - q^-i); 1 for n = 0.
Rational omega(std::size_t n, std::uint64_t q);

struct TailProb {
    std::uint32_t q;
    std::size_t n;
    Mode mode;
    std::uint64_t count;  // A with k0 + m0/2 > n
    std::uint64_t total;
    Rational prob;
    Rational bound;  // 2 q^{-ceil(2n/3)}
    std::optional<std::uint64_t> seed;
    bool pass() const { return prob < bound; }
};

TailProb tail_prob_check(const Field& f, std::size_t n, Mode mode = Mode::Exhaustive, std::uint64_t trials = 0,
                         std::uint64_t seed = 0);

struct M0Row {
    std::size_t m0;
    std::uint64_t count;  // A whose characteristic polynomial is t^m0 h(t), h(0) != 0
    Rational predicted;   // q^{n^2 - m0} omega(n, q) / omega(m0, q)
    bool matches() const { return Rational(count) == predicted; }
};

/// Exhaustive count per m0 = 0..n.
std::vector<M0Row> m0_census(const Field& f, std::size_t n);

}  // namespace tcc
