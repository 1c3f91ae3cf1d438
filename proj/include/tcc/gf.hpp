#pragma once

// Finite fields GF(p^k) with a fixed integer encoding of elements.
//
// An element is an integer in [0, q). Read in base p, its digits are the
// coefficients c0 + c1 x + ... + c_{k-1} x^{k-1} of a residue polynomial
// modulo the field's monic irreducible modulus. For prime fields the
// encoding is the residue itself.

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tcc {

using Elem = std::uint32_t;

/// Largest field order the library will construct.
inline constexpr std::uint64_t kFieldCap = 1ull << 20;

class Field {
public:
    /// GF(p^k) with the smallest irreducible monic modulus under the
    /// integer encoding. Fields are cached, so repeated calls are cheap.
    static Field make(std::uint32_t p, std::uint32_t k = 1);

    /// GF(p^k) with an explicit modulus c0..ck (monic, irreducible over GF(p)).
    static Field with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

    /// Field of order q, q a prime power.
    static Field of_order(std::uint64_t q);

    std::uint32_t p() const noexcept;
    std::uint32_t k() const noexcept;
    std::uint32_t q() const noexcept;

    /// Coefficients c0..ck of the modulus; empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const noexcept;

    bool contains(Elem a) const noexcept { return a < q(); }

    Elem add(Elem a, Elem b) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept;
    Elem neg(Elem a) const noexcept;
    Elem mul(Elem a, Elem b) const noexcept;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const;
    Elem pow(Elem a, std::int64_t e) const;

    /// Image of the integer c in the prime subfield.
    Elem from_int(std::int64_t c) const noexcept;

    /// A fixed generator of the multiplicative group.
    Elem primitive() const noexcept;

    std::vector<std::uint32_t> digits(Elem a) const;
    Elem from_digits(std::span<const std::uint32_t> digits) const;

    /// All q elements in encoding order 0, 1, ..., q-1.
    std::vector<Elem> elements() const;

    std::string name() const;

    friend bool operator==(const Field& a, const Field& b) noexcept;

    // Opaque; defined in gf.cpp.
    struct Impl;

private:
    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

bool is_prime(std::uint64_t n) noexcept;

/// A field element bundled with its field. Mixing fields throws.
class FqElem {
public:
    FqElem(Field field, Elem value);

    const Field& field() const noexcept { return field_; }
    Elem value() const noexcept { return value_; }

    FqElem operator+(const FqElem& o) const;
    FqElem operator-(const FqElem& o) const;
    FqElem operator*(const FqElem& o) const;
    FqElem operator/(const FqElem& o) const;
    FqElem operator-() const;
    FqElem inv() const;
    FqElem pow(std::int64_t e) const;

    bool operator==(const FqElem& o) const noexcept
    {
        return field_ == o.field_ && value_ == o.value_;
    }

private:
    const Field& same(const FqElem& o) const;
    Field field_;
    Elem value_;
};

}  // namespace tcc
