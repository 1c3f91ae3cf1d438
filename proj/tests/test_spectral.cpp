#include <doctest.h>

#include <numeric>

#include "tcc/code.hpp"
#include "tcc/generate.hpp"
#include "tcc/spectral.hpp"

using namespace tcc;

TEST_CASE("splitting field examples")
{
    Field f2 = Field::make(2), f5 = Field::make(5);
    SplittingField w = splitting_field(Poly(f2, {1, 1, 1}));
    CHECK(w.ext().q() == 4);
    CHECK(w.degree() == 2);
    CHECK(roots(w.embed(Poly(f2, {1, 1, 1}))) == std::vector<Elem>{2, 3});

    SplittingField id = splitting_field(Poly(f5, {2, 2, 1}));
    CHECK(id.ext() == f5);
    for (Elem a = 0; a < 5; ++a) CHECK(id.embed(a) == a);

    // (t^2 + t + 1)(t^3 + t + 1)
    SplittingField six = splitting_field(Poly(f2, {1, 1, 1}) * Poly(f2, {1, 1, 0, 1}));
    CHECK(six.degree() == 6);
    CHECK(six.ext().q() == 64);

    CHECK_THROWS_AS(splitting_field(Poly(f5, {3})), std::invalid_argument);
    CHECK_THROWS_AS(splitting_field(Poly(f5, {1, 2})), std::invalid_argument);
}

TEST_CASE("cap on the splitting field")
{
    // Irreducible factors of degrees 4, 5 and 7 would need GF(2^140).
    Field f2 = Field::make(2);
    Poly c = Poly(f2, {1, 1, 0, 0, 1}) * Poly(f2, {1, 0, 1, 0, 0, 1}) * Poly(f2, {1, 1, 0, 0, 0, 0, 0, 1});
    CHECK_THROWS_AS(splitting_field(c), SpectralUnavailable);
}

TEST_CASE("embedding is a ring homomorphism and every polynomial splits")
{
    Rng rng(61);
    for (std::uint64_t q : {2, 3, 4, 8, 9, 16}) {
        Field f = Field::of_order(q);
        for (int t = 0; t < 6; ++t) {
            Poly c = random_monic(f, 1 + uniform_below(rng, 4), rng);
            SplittingField sf = splitting_field(c);
            const Field& e = sf.ext();
            CHECK(sf.embed(1) == 1);
            CHECK(sf.embed(0) == 0);
            for (Elem a = 0; a < q; ++a)
                for (Elem b = 0; b < q; ++b) {
                    REQUIRE(sf.embed(f.add(a, b)) == e.add(sf.embed(a), sf.embed(b)));
                    REQUIRE(sf.embed(f.mul(a, b)) == e.mul(sf.embed(a), sf.embed(b)));
                }
            // Splits: the number of roots with multiplicity is the degree.
            Factorization fac = factor(sf.embed(c));
            int total = 0;
            for (const auto& fc : fac.factors) {
                CHECK(fc.poly.degree() == 1);
                total += fc.multiplicity;
            }
            CHECK(total == c.degree());
        }
    }
}

TEST_CASE("embedding of GF(4) into GF(16) sends the modulus root to a root")
{
    Field f4 = Field::make(2, 2);
    // Irreducible quadratic over GF(4): t^2 + t + x, with x the generator (encoding 2).
    SplittingField sf = splitting_field(Poly(f4, {2, 1, 1}));
    CHECK(sf.ext().q() == 16);
    const Field& e = sf.ext();
    const Elem g = sf.generator_image();
    CHECK(e.add(e.add(e.mul(g, g), g), 1) == 0);
    CHECK(sf.embed(2) == g);
}

TEST_CASE("spectrum examples")
{
    Field f2 = Field::make(2), f5 = Field::make(5);
    Spectrum j = spectrum(Matrix::jordan_block(f5, 2));
    REQUIRE(j.entries.size() == 1);
    CHECK(j.entries[0].alpha == 0);
    CHECK(j.entries[0].m == 2);
    CHECK(j.entries[0].k == 1);

    Spectrum d = spectrum(Matrix::diagonal(f5, {1, 1, 2}));
    REQUIRE(d.entries.size() == 2);
    CHECK(d.entries[0].alpha == 1);
    CHECK(d.entries[0].m == 2);
    CHECK(d.entries[0].k == 2);
    CHECK(d.entries[1].alpha == 2);
    CHECK(d.entries[1].m == 1);
    CHECK(d.entries[1].k == 1);
    CHECK(d.diagonalizable());

    Spectrum w = spectrum(Matrix::companion(Poly(f2, {1, 1, 1})));
    CHECK(w.field.ext().q() == 4);
    REQUIRE(w.entries.size() == 2);
    const Field& e = w.field.ext();
    CHECK(w.entries[0].alpha == e.mul(w.entries[1].alpha, w.entries[1].alpha));
    for (const auto& x : w.entries) {
        CHECK(x.m == 1);
        CHECK(x.k == 1);
    }
}

TEST_CASE("spectrum invariants")
{
    Rng rng(62);
    for (std::uint64_t q : {2, 3, 4, 5, 7}) {
        Field f = Field::of_order(q);
        for (int t = 0; t < 20; ++t) {
            const std::size_t n = 1 + uniform_below(rng, 5);
            Matrix a = t % 2 ? random_matrix(f, n, rng) : random_nilpotent(f, n, rng) + Matrix::scalar(f, n, random_elem(f, rng));
            Spectrum s = spectrum(a);
            std::size_t total = 0;
            for (std::size_t i = 0; i < s.entries.size(); ++i) {
                const auto& x = s.entries[i];
                CHECK(x.k >= 1);
                CHECK(x.k <= x.m);
                if (i > 0) CHECK(s.entries[i - 1].alpha < x.alpha);
                total += x.m;
            }
            CHECK(total == n);
            Spectrum st = spectrum(transpose(a));
            REQUIRE(st.entries.size() == s.entries.size());
            for (std::size_t i = 0; i < s.entries.size(); ++i) {
                CHECK(st.entries[i].alpha == s.entries[i].alpha);
                CHECK(st.entries[i].m == s.entries[i].m);
                CHECK(st.entries[i].k == s.entries[i].k);
            }
        }
    }
}

TEST_CASE("spectral bounds examples")
{
    Field f5 = Field::make(5);
    SpectralBounds a = tm_bounds(Matrix::diagonal(f5, {1, 4}), 4);
    CHECK(a.lo == 2);
    CHECK(a.hi == 2);
    CHECK(dim_oracle(Matrix::diagonal(f5, {1, 4}), 4) == 2);

    Matrix j2 = Matrix::jordan_block(f5, 2);
    SpectralBounds b = tm_bounds(j2, 1);
    CHECK(b.lo == 1);
    CHECK(b.hi == 4);
    CHECK(dim_oracle(j2, 1) == 2);

    // 4 * {1, 2} = {4, 3} misses the spectrum.
    SpectralBounds c = tm_bounds(Matrix::diagonal(f5, {1, 2}), 4);
    CHECK(c.lo == 0);
    CHECK(c.hi == 0);
    CHECK(dim_oracle(Matrix::diagonal(f5, {1, 2}), 4) == 0);
}

TEST_CASE("spectral bounds bracket the oracle")
{
    Rng rng(63);
    for (std::uint64_t q : {2, 3, 4, 5, 7, 9}) {
        Field f = Field::of_order(q);
        for (int t = 0; t < 12; ++t) {
            const std::size_t n = 1 + uniform_below(rng, 4);
            Matrix a = t % 3 == 0 ? random_nilpotent(f, n, rng) : random_matrix(f, n, rng);
            Spectrum s = spectrum(a);
            for (Elem l = 0; l < q; ++l) {
                SpectralBounds b = tm_bounds(s, l);
                const std::size_t d = dim_oracle(a, l);
                CHECK(b.lo <= d);
                CHECK(d <= b.hi);
            }
        }
    }
}

TEST_CASE("characteristic polynomial of H from root differences")
{
    Field f2 = Field::make(2), f5 = Field::make(5);
    CharpolyHCheck d = charpoly_h_detail(Matrix::diagonal(f5, {1, 2}), spectrum(Matrix::diagonal(f5, {1, 2})), 1);
    CHECK(d.equal);
    CHECK(d.direct == Poly(f5, {0, 0, 1}) * Poly(f5, {4, 0, 1}));  // t^2 (t - 1)(t + 1)
    CHECK(charpoly_H_check(Matrix(f5, 3, 3), 2));
    CHECK(charpoly(parity_check(Matrix(f5, 2, 2), 3)) == Poly::monomial(f5, 4));
    CHECK(charpoly_H_check(Matrix::companion(Poly(f2, {1, 1, 1})), 1));

    Rng rng(64);
    for (std::uint64_t q : {2, 3, 4, 5, 7}) {
        Field f = Field::of_order(q);
        for (int t = 0; t < 8; ++t) {
            Matrix a = random_matrix(f, 1 + uniform_below(rng, 3), rng);
            for (Elem l = 0; l < q; ++l) CHECK(charpoly_H_check(a, l));
        }
    }
}
