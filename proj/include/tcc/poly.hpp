#pragma once

// Dense univariate polynomials over a finite field.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tcc/gf.hpp"

namespace tcc {

/// Coefficient i is the coefficient of t^i. The coefficient vector never has
/// a trailing zero, so the zero polynomial has no coefficients.
class Poly {
public:
    explicit Poly(Field field) : field_(std::move(field)) {}
    Poly(Field field, std::vector<Elem> coeffs);

    static Poly constant(Field field, Elem c);
    static Poly monomial(Field field, std::size_t degree, Elem c = 1);
    /// t - a
    static Poly linear(Field field, Elem a);

    const Field& field() const noexcept { return field_; }
    const std::vector<Elem>& coeffs() const noexcept { return c_; }

    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    Elem lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
    Elem operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

    Elem eval(Elem x) const;

    std::string str() const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

private:
    void trim();
    Field field_;
    std::vector<Elem> c_;
};

Poly operator+(const Poly& f, const Poly& g);
Poly operator-(const Poly& f, const Poly& g);
Poly operator*(const Poly& f, const Poly& g);
Poly scale(const Poly& f, Elem c);

/// Quotient and remainder with deg(remainder) < deg(g). Throws for g = 0.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);
Poly operator%(const Poly& f, const Poly& g);
Poly operator/(const Poly& f, const Poly& g);

Poly monic(const Poly& f);
Poly derivative(const Poly& f);

/// Monic gcd; gcd(0, 0) throws.
Poly gcd(const Poly& f, const Poly& g);
Poly lcm(const Poly& f, const Poly& g);

/// base^e mod m.
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m);

/// The lambda-twisted polynomial of a monic f of degree n: coefficient i is
/// f_i * lambda^-(n-i), so the roots are those of f divided by lambda.
Poly twist(const Poly& f, Elem lambda);

bool is_irreducible(const Poly& f);
bool is_squarefree(const Poly& f);

struct Factor {
    Poly poly;  // monic irreducible
    int multiplicity;
};

struct Factorization {
    Elem unit;
    std::vector<Factor> factors;  // sorted by degree, then by coefficient vector
};

/// Complete factorization into monic irreducibles. Deterministic.
Factorization factor(const Poly& f);

/// Expand a factorization back into a polynomial.
Poly expand(const Field& field, const Factorization& fac);

/// Roots of f in its field, ascending by encoding, without multiplicity.
std::vector<Elem> roots(const Poly& f);

/// Canonical order: by degree, then lexicographic from the leading coefficient down.
bool canonical_less(const Poly& a, const Poly& b);

}  // namespace tcc
