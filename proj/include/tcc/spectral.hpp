#pragma once

// Eigenvalue data in a splitting field: multiplicities, eigenspace
// dimensions, the spectral bounds on dim C(A, lambda), and the root-pair
// product formula for the characteristic polynomial of H.

#include <stdexcept>
#include <vector>

#include "tcc/linalg.hpp"

namespace tcc {

/// Raised when the splitting field would exceed the field-order cap.
class SpectralUnavailable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SplittingField {
public:
    SplittingField(Field base, Field ext, std::uint32_t degree, Elem generator_image);

    const Field& base() const noexcept { return base_; }
    const Field& ext() const noexcept { return ext_; }
    /// [ext : base]
    std::uint32_t degree() const noexcept { return degree_; }
    /// Image in ext of the residue x generating the base over its prime field.
    Elem generator_image() const noexcept { return generator_image_; }

    Elem embed(Elem a) const { return table_.at(a); }
    Poly embed(const Poly& f) const;
    Matrix embed(const Matrix& m) const;

private:
    Field base_;
    Field ext_;
    std::uint32_t degree_;
    Elem generator_image_;
    std::vector<Elem> table_;
};

/// Smallest extension of the base over which c splits. The base generator is
/// sent to the smallest root of the base modulus in ext.
SplittingField splitting_field(const Poly& c);

struct Eigen {
    Elem alpha;          // in ext
    std::size_t m;       // algebraic multiplicity
    std::size_t k;       // eigenspace dimension
};

struct Spectrum {
    SplittingField field;
    std::vector<Eigen> entries;  // ascending by alpha

    const Eigen* find(Elem alpha) const;
    std::size_t m_at(Elem alpha) const;
    std::size_t k_at(Elem alpha) const;
    bool diagonalizable() const;
};

Spectrum spectrum(const Matrix& a);

struct SpectralBounds {
    std::size_t lo;  // sum over alpha of k(lambda alpha) k(alpha)
    std::size_t hi;  // sum over alpha of m(lambda alpha) m(alpha)
};

SpectralBounds tm_bounds(const Spectrum& s, Elem lambda);
SpectralBounds tm_bounds(const Matrix& a, Elem lambda);

struct CharpolyHCheck {
    Poly direct;   // charpoly(H) embedded into ext
    Poly product;  // product over root pairs of (t - (alpha_i - lambda alpha_j))
    bool equal;
};

CharpolyHCheck charpoly_h_detail(const Matrix& a, const Spectrum& s, Elem lambda);
bool charpoly_H_check(const Matrix& a, Elem lambda);

}  // namespace tcc
