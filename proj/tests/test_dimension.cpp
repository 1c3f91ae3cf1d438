#include <doctest.h>

#include "tcc/code.hpp"
#include "tcc/dimension.hpp"
#include "tcc/generate.hpp"
#include "tcc/spectral.hpp"

using namespace tcc;

namespace {

Matrix jordan_sum(const Field& f, const std::vector<std::size_t>& parts)
{
    std::vector<Matrix> blocks;
    for (auto p : parts) blocks.push_back(Matrix::jordan_block(f, p));
    return Matrix::block_diagonal(blocks);
}

// Mixed generator used by the property tests.
Matrix sample(const Field& f, std::size_t n, Rng& rng, int kind)
{
    switch (kind % 6) {
    case 0: return random_matrix(f, n, rng);
    case 1: return random_nilpotent(f, n, rng);
    case 2: return random_cyclic(f, n, rng);
    case 3: return random_singular(f, n, rng);
    case 4: {
        // Nilpotent plus scalar, conjugated, so primary blocks have Jordan structure.
        Matrix p = random_invertible(f, n, rng);
        return inverse(p) * (jordan_sum(f, random_partition(n, rng)) + Matrix::scalar(f, n, random_elem(f, rng))) * p;
    }
    default: {
        // Block sum of two smaller pieces with a random eigenvalue shift.
        const std::size_t m = n / 2;
        Matrix x = random_nilpotent(f, n - m, rng) + Matrix::scalar(f, n - m, random_nonzero(f, rng));
        Matrix y = m ? random_matrix(f, m, rng) : Matrix(f, 0, 0);
        Matrix p = random_invertible(f, n, rng);
        return inverse(p) * Matrix::block_diagonal({x, y}) * p;
    }
    }
}

}  // namespace

TEST_CASE("partition conjugation")
{
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(Partition({2, 2}).conjugate() == Partition({2, 2}));
    CHECK(Partition().conjugate() == Partition());
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    Rng rng(41);
    for (int t = 0; t < 100; ++t) {
        Partition p(random_partition(1 + uniform_below(rng, 12), rng));
        Partition c = p.conjugate();
        CHECK(c.conjugate() == p);
        CHECK(c.size() == p.size());
        for (std::size_t i = 0; i < c.parts().size(); ++i) {
            std::size_t count = 0;
            for (auto x : p.parts()) count += x >= i + 1;
            CHECK(c.parts()[i] == count);
        }
    }
}

TEST_CASE("lambda = 0 formula")
{
    Field f = Field::make(3);
    CHECK(dim_lambda0(Matrix(f, 2, 2)) == 4);
    CHECK(dim_lambda0(Matrix::identity(f, 3)) == 0);
    Rng rng(42);
    Matrix r1 = random_rank_one(f, 3, rng);
    CHECK(dim_lambda0(r1) == 6);
    CHECK(dim_oracle(r1, 0) == 6);
}

TEST_CASE("nilpotent partition from ranks")
{
    Field f = Field::make(5);
    CHECK(nilpotent_partition(Matrix::jordan_block(f, 2)) == Partition({2}));
    CHECK(nilpotent_partition(Matrix(f, 3, 3)) == Partition({1, 1, 1}));
    CHECK(nilpotent_partition(Matrix(f, 3, 3)).conjugate() == Partition({3}));
    CHECK(nilpotent_partition(jordan_sum(f, {2, 1})) == Partition({2, 1}));
    CHECK(nilpotent_partition(jordan_sum(f, {2, 1})).conjugate() == Partition({2, 1}));
    CHECK_THROWS_AS(nilpotent_partition(Matrix::identity(f, 2)), std::invalid_argument);

    Rng rng(43);
    for (int t = 0; t < 40; ++t) {
        const auto parts = random_partition(1 + uniform_below(rng, 6), rng);
        Matrix p = random_invertible(f, Partition(parts).size(), rng);
        Matrix a = inverse(p) * jordan_sum(f, parts) * p;
        Partition mu = nilpotent_partition(a);
        CHECK(mu == Partition(parts));
        CHECK(mu.conjugate().parts().front() == a.rows() - rank(a));
    }
}

TEST_CASE("nilpotent dimension")
{
    Field f = Field::make(7);
    CHECK(dim_nilpotent(jordan_sum(f, {2, 1}), 3) == 5);
    for (std::size_t n = 1; n <= 4; ++n) CHECK(dim_nilpotent(Matrix(f, n, n), 2) == n * n);
    for (std::size_t n = 2; n <= 6; ++n) {
        std::vector<std::size_t> parts(n - 1, 1);
        parts[0] = 2;
        Matrix a = jordan_sum(f, parts);
        CHECK(dim_nilpotent(a, 4) == (n - 1) * (n - 1) + 1);
        CHECK(dim_oracle(a, 4) == (n - 1) * (n - 1) + 1);
    }
    CHECK_THROWS_AS(dim_nilpotent(jordan_sum(f, {2}), 0), std::invalid_argument);

    Rng rng(44);
    for (std::uint64_t q : {2, 3, 4, 5}) {
        Field g = Field::of_order(q);
        for (int t = 0; t < 20; ++t) {
            Matrix a = random_nilpotent(g, 1 + uniform_below(rng, 5), rng);
            const Elem l = random_nonzero(g, rng);
            const std::size_t k0 = a.rows() - rank(a);
            CHECK(dim_nilpotent(a, l) == dim_oracle(a, l));
            CHECK(dim_nilpotent(a, l) >= k0 * k0);
        }
    }
}

TEST_CASE("cyclic dimension")
{
    Field f3 = Field::make(3), f5 = Field::make(5);
    CHECK(dim_cyclic(Matrix::companion(Poly(f3, {2, 0, 1})), 2) == 2);
    CHECK(dim_oracle(Matrix::companion(Poly(f3, {2, 0, 1})), 2) == 2);
    CHECK(dim_cyclic(Matrix::companion(Poly(f5, {4, 0, 1})), 2) == 0);
    CHECK(dim_oracle(Matrix::companion(Poly(f5, {4, 0, 1})), 2) == 0);
    Rng rng(45);
    for (int t = 0; t < 20; ++t) {
        Matrix c = random_cyclic(f5, 1 + uniform_below(rng, 5), rng);
        CHECK(dim_cyclic(c, 1) == c.rows());
    }
    CHECK_THROWS_AS(dim_cyclic(Matrix::identity(f5, 2), 2), std::invalid_argument);
    CHECK_THROWS_AS(dim_cyclic(Matrix::companion(Poly(f5, {1, 1})), 0), std::invalid_argument);
}

TEST_CASE("dispatcher examples")
{
    Field f5 = Field::make(5);
    for (std::size_t m : {1, 2, 3}) {
        std::vector<Elem> d(2 * m, 1);
        for (std::size_t i = m; i < 2 * m; ++i) d[i] = 4;
        DimReport r = dim_fast(Matrix::diagonal(f5, d), 4);
        CHECK(r.dim == 2 * m * m);
    }

    Rng rng(46);
    for (std::uint64_t q : {3, 5, 7}) {
        Field f = Field::of_order(q);
        for (std::size_t n = 2; n <= 5; ++n)
            for (Elem l = 2; l < q; ++l) {
                Matrix a = random_rank_one(f, n, rng, TraceKind::Nonzero);
                CHECK(dim_fast(a, l).dim == (n - 1) * (n - 1));
            }
    }

    Field f3 = Field::make(3);
    DimReport mixed = dim_fast(Matrix(f3, {{0, 1, 0}, {0, 0, 0}, {0, 0, 2}}), 2);
    CHECK(mixed.dim == 2);
    CHECK(mixed.method == Method::FittingSum);
    CHECK(mixed.k0 == 1);
    CHECK(mixed.m0 == 2);
    CHECK(mixed.rank == 2);
}

TEST_CASE("method tags")
{
    Field f5 = Field::make(5), f7 = Field::make(7);
    CHECK(dim_fast(Matrix::identity(f5, 3), 1).method == Method::Scalar);
    CHECK(dim_fast(Matrix::identity(f5, 3), 1).dim == 9);
    CHECK(dim_fast(Matrix::identity(f5, 3), 2).dim == 0);
    CHECK(dim_fast(Matrix(f5, 3, 3), 2).dim == 9);
    CHECK(dim_fast(Matrix::identity(f5, 3), 0).method == Method::LambdaZero);
    CHECK(dim_fast(jordan_sum(f7, {2, 1}), 3).method == Method::NilpotentPartition);
    CHECK(dim_fast(Matrix::companion(Poly(f5, {1, 2, 1})), 2).method == Method::CyclicGcd);

    // Eigenvalues 1, 1, 2 and lambda = 2: each cofactor vanishes at lambda
    // alpha or alpha / lambda, so no eigenvalue can be split off.
    DimReport fb = dim_fast(Matrix::diagonal(f5, {1, 1, 2}), 2);
    CHECK(fb.method == Method::OracleFallback);
    CHECK(fb.dim == 2);
    CHECK(dim_oracle(Matrix::diagonal(f5, {1, 1, 2}), 2) == 2);

    DimReport split = dim_fast(Matrix::diagonal(f5, {1, 1, 2}), 4);
    CHECK(split.method == Method::PrimarySplit);
    CHECK(split.dim == 0);
    CHECK(dim_oracle(Matrix::diagonal(f5, {1, 1, 2}), 4) == 0);

    CHECK(to_string(Method::CyclicGcd) == "cyclic-gcd");
    CHECK(to_string(Method::OracleFallback) == "oracle-fallback");
    CHECK_THROWS_AS(dim_fast(Matrix(f5, 2, 3), 1), std::invalid_argument);
    CHECK_THROWS_AS(dim_fast(Matrix::identity(f5, 2), 5), std::invalid_argument);
}

TEST_CASE("dispatcher matches the oracle on every 2x2 over GF(2) and GF(3)")
{
    for (std::uint64_t q : {2, 3}) {
        Field f = Field::of_order(q);
        for (std::uint64_t w = 0; w < q * q * q * q; ++w) {
            std::vector<Elem> e(4);
            std::uint64_t v = w;
            for (auto& x : e) {
                x = static_cast<Elem>(v % q);
                v /= q;
            }
            Matrix a(f, 2, 2, e);
            for (Elem l = 0; l < q; ++l) {
                DimReport r = dim_fast(a, l, true);
                REQUIRE(r.dim == dim_oracle(a, l));
                CHECK(bound_violations(r.bounds, r.dim, 2).empty());
            }
        }
    }
}

TEST_CASE("dispatcher matches the oracle on random inputs")
{
    Rng rng(47);
    for (std::uint64_t q : {2, 3, 4, 5, 7, 9}) {
        Field f = Field::of_order(q);
        for (std::size_t n = 1; n <= 5; ++n)
            for (int t = 0; t < 6; ++t) {
                Matrix a = sample(f, n, rng, t);
                for (Elem l = 0; l < q; ++l) {
                    const std::size_t d = dim_oracle(a, l);
                    REQUIRE_MESSAGE(dim_value(a, l) == d, a.str() << " lambda " << l);
                    CHECK(bound_violations(bounds(a, l, true), d, n).empty());
                }
            }
    }
}

TEST_CASE("Fitting and primary additivity of the oracle")
{
    Rng rng(48);
    for (std::uint64_t q : {3, 4, 5, 7}) {
        Field f = Field::of_order(q);
        for (int t = 0; t < 20; ++t) {
            const std::size_t n = 2 + uniform_below(rng, 4);
            Matrix a = t % 2 ? random_singular(f, n, rng) : sample(f, n, rng, 5);
            const Elem l = random_nonzero(f, rng);
            FittingSplit fs = fitting_split(a);
            std::size_t parts = 0;
            if (fs.m0 > 0) parts += dim_oracle(fs.nilpotent, l);
            if (fs.m0 < n) parts += dim_oracle(fs.invertible, l);
            CHECK(dim_oracle(a, l) == parts);

            const Poly c = charpoly(a);
            for (Elem al : roots(c)) {
                Poly rest = c;
                while ((rest % Poly::linear(f, al)).is_zero()) rest = rest / Poly::linear(f, al);
                if (rest.eval(f.mul(l, al)) == 0 || rest.eval(f.div(al, l)) == 0) continue;
                BlockSplit s = split_at_eigenvalue(a, al);
                std::size_t sum = dim_oracle(s.first, l);
                if (s.second.rows() > 0) sum += dim_oracle(s.second, l);
                CHECK(dim_oracle(a, l) == sum);
            }
        }
    }
}

TEST_CASE("bounds applicability")
{
    Field f5 = Field::make(5);
    Rng rng(49);
    Matrix s = random_singular(f5, 3, rng);
    BoundSet b = bounds(s, 2);
    CHECK(b.singular_nonzero);
    CHECK(dim_fast(s, 2).dim >= 1);
    CHECK(b.rank_lo.has_value());
    CHECK_FALSE(b.min_lo.has_value());
    CHECK_FALSE(b.spectral_lo.has_value());

    Matrix inv = random_invertible(f5, 4, rng);
    BoundSet bi = bounds(inv, 3);
    REQUIRE(bi.ub_half.has_value());
    CHECK(*bi.ub_half == 8);
    CHECK_FALSE(bi.singular_nonzero);

    BoundSet b0 = bounds(s, 0);
    CHECK_FALSE(b0.rank_lo.has_value());
    CHECK_FALSE(b0.ub_half.has_value());
    CHECK_FALSE(b0.ub_nonscalar.has_value());

    BoundSet b1 = bounds(Matrix::jordan_block(f5, 3), 1);
    REQUIRE(b1.min_lo.has_value());
    CHECK(*b1.min_lo == 3);
    CHECK_FALSE(b1.ub_half.has_value());

    BoundSet bs = bounds(Matrix::identity(f5, 3), 2);
    CHECK_FALSE(bs.ub_nonscalar.has_value());
    CHECK_FALSE(bs.ub_gross.has_value());

    // k0 + m0/2 > n for the zero matrix, so the half bound is withheld.
    CHECK_FALSE(bounds(Matrix(f5, 2, 2), 2).ub_half.has_value());

    BoundSet bsp = bounds(Matrix::diagonal(f5, {1, 4}), 4, true);
    REQUIRE(bsp.spectral_lo.has_value());
    CHECK(*bsp.spectral_lo == 2);
    CHECK(*bsp.spectral_hi == 2);
}

TEST_CASE("bound violations are reported by name")
{
    BoundSet b;
    b.rank_lo = 4;
    b.ub_gross = 6;
    b.singular_nonzero = true;
    CHECK(bound_violations(b, 5, 3).empty());
    CHECK(bound_violations(b, 3, 3) == std::vector<std::string>{"rank_lo"});
    CHECK(bound_violations(b, 7, 3) == std::vector<std::string>{"ub_gross", "gap"});
    b.rank_lo.reset();
    CHECK(bound_violations(b, 0, 3) == std::vector<std::string>{"singular_nonzero"});
}

TEST_CASE("quadratic minimal polynomial at the nonscalar maximum")
{
    Rng rng(50);
    for (std::uint64_t q : {2, 3, 4, 5}) {
        Field f = Field::of_order(q);
        for (int t = 0; t < 40; ++t) {
            const std::size_t n = 2 + uniform_below(rng, 3);
            Matrix a = t % 2 ? random_rank_one(f, n, rng) + Matrix::scalar(f, n, random_elem(f, rng)) : sample(f, n, rng, t);
            if (a.is_scalar()) continue;
            for (Elem l = 1; l < q; ++l) {
                if (dim_value(a, l) != (n - 1) * (n - 1) + 1) continue;
                const Poly m = minpoly(a);
                CHECK(m.degree() == 2);
                if (n >= 3) CHECK_FALSE(is_irreducible(m));
            }
        }
    }
}

TEST_CASE("three-way diagonalizability check")
{
    Field f5 = Field::make(5), f2 = Field::make(2);
    for (Elem l = 1; l < 5; ++l) {
        TfaeResult r = tfae_check(Matrix::diagonal(f5, {1, 2}), l);
        CHECK(r.a);
        CHECK(r.b);
        CHECK(r.c);
        CHECK(r.consistent());
    }
    TfaeResult j = tfae_check(Matrix::jordan_block(f5, 2), 1);
    CHECK_FALSE(j.a);
    CHECK_FALSE(j.b);
    CHECK_FALSE(j.c);
    TfaeResult w = tfae_check(Matrix::companion(Poly(f2, {1, 1, 1})), 1);
    CHECK(w.a);
    CHECK(w.b);
    CHECK(w.c);

    // With lambda != 1 the spectral bounds can meet at zero for a matrix that
    // is not diagonalizable: eigenvalue 1 twice, and 2 is not an eigenvalue.
    Matrix shifted = Matrix::jordan_block(f5, 2) + Matrix::identity(f5, 2);
    TfaeResult s = tfae_check(shifted, 2);
    CHECK_FALSE(s.a);
    CHECK_FALSE(s.b);
    CHECK(s.c);
    CHECK_FALSE(s.consistent());
    CHECK(tfae_check(shifted, 1).consistent());

    Rng rng(51);
    for (std::uint64_t q : {2, 3, 4, 5, 7}) {
        Field f = Field::of_order(q);
        for (int t = 0; t < 15; ++t) {
            Matrix a = sample(f, 1 + uniform_below(rng, 4), rng, t);
            TfaeResult r = tfae_check(a, 1);
            CHECK(r.consistent());
            for (Elem l = 0; l < q; ++l) {
                TfaeResult rl = tfae_check(a, l);
                CHECK(rl.a == rl.b);
                if (rl.b) CHECK(rl.c);
            }
        }
    }
}
