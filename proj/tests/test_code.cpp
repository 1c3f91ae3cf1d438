#include <doctest.h>

#include <sstream>

#include "tcc/code.hpp"
#include "tcc/generate.hpp"

using namespace tcc;

namespace {

// Solve AB = lambda BA for 2x2 B by trying all q^4 matrices.
std::size_t dim_by_enumeration(const Matrix& a, Elem lambda)
{
    const Field& f = a.field();
    const std::size_t n = a.rows();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n * n; ++i) total *= f.q();
    std::uint64_t hits = 0;
    for (std::uint64_t w = 0; w < total; ++w) {
        std::vector<Elem> e(n * n);
        std::uint64_t v = w;
        for (auto& x : e) {
            x = static_cast<Elem>(v % f.q());
            v /= f.q();
        }
        Matrix b(f, n, n, e);
        hits += (a * b - scale(b * a, lambda)).is_zero();
    }
    std::size_t d = 0;
    for (std::uint64_t s = 1; s < hits; s *= f.q()) ++d;
    return d;
}

}  // namespace

TEST_CASE("parity check examples")
{
    Field f2 = Field::make(2), f7 = Field::make(7);
    CHECK(parity_check(Matrix(f2, 3, 3), 1).is_zero());
    CHECK(parity_check(Matrix(f7, {{3}}), 5) == Matrix(f7, {{f7.mul(3, f7.sub(1, 5))}}));
    Matrix j2(f2, {{0, 1}, {0, 0}});
    Matrix h = parity_check(j2, 0);
    CHECK(h == kron(transpose(j2), Matrix::identity(f2, 2)));
    CHECK(h == Matrix(f2, {{0, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}}));
    CHECK(rank(h) == 2);
}

TEST_CASE("vec(B) H = vec(AB - lambda BA)")
{
    Rng rng(31);
    for (std::uint64_t q : {2, 3, 4, 5, 7, 9}) {
        Field f = Field::of_order(q);
        for (int t = 0; t < 100; ++t) {
            const std::size_t n = 1 + uniform_below(rng, 4);
            Matrix a = random_matrix(f, n, rng), b = random_matrix(f, n, rng);
            const Elem l = random_elem(f, rng);
            REQUIRE(vec(b) * parity_check(a, l) == vec(a * b - scale(b * a, l)));
        }
    }
}

TEST_CASE("code construction examples")
{
    Field f3 = Field::make(3), f5 = Field::make(5);
    for (std::size_t n = 1; n <= 3; ++n) {
        CHECK(code_build(Matrix::identity(f5, n), 1).dim == n * n);
        CHECK(code_build(Matrix::identity(f5, n), 3).dim == 0);
    }
    Matrix swap3(f3, {{0, 1}, {1, 0}});
    TwistedCode c = code_build(swap3, 2);
    CHECK(c.dim == 2);
    for (const auto& b : c.basis) {
        // B = [[a, b], [-b, -a]]
        CHECK(b(1, 0) == f3.neg(b(0, 1)));
        CHECK(b(1, 1) == f3.neg(b(0, 0)));
    }
    CHECK(dim_by_enumeration(swap3, 2) == 2);
}

TEST_CASE("oracle examples")
{
    Field f2 = Field::make(2), f5 = Field::make(5), f7 = Field::make(7);
    CHECK(dim_oracle(Matrix(f2, {{1, 0}, {0, 0}}), 0) == 2);
    Matrix swap5(f5, {{0, 1}, {1, 0}});
    CHECK(dim_oracle(swap5, 2) == 0);
    CHECK(dim_by_enumeration(swap5, 2) == 0);
    Matrix j21 = Matrix::block_diagonal({Matrix::jordan_block(f7, 2), Matrix(f7, 1, 1)});
    for (Elem l = 1; l < 7; ++l) CHECK(dim_oracle(j21, l) == 5);
}

TEST_CASE("oracle agrees with brute-force solution counting")
{
    for (std::uint64_t q : {2, 3}) {
        Field f = Field::of_order(q);
        Rng rng(q);
        for (int t = 0; t < 15; ++t) {
            Matrix a = random_matrix(f, 2, rng);
            for (Elem l = 0; l < q; ++l) CHECK(dim_oracle(a, l) == dim_by_enumeration(a, l));
        }
    }
}

TEST_CASE("basis invariants")
{
    Rng rng(32);
    for (std::uint64_t q : {2, 3, 4, 5}) {
        Field f = Field::of_order(q);
        for (int t = 0; t < 20; ++t) {
            const std::size_t n = 1 + uniform_below(rng, 4);
            Matrix a = t % 2 ? random_nilpotent(f, n, rng) : random_matrix(f, n, rng);
            const Elem l = random_elem(f, rng);
            TwistedCode c = code_build(a, l);
            CHECK(c.dim == n * n - rank(c.parity));
            CHECK(c.dim == c.basis.size());
            CHECK(c.dim <= n * n);
            Matrix stacked(f, 0, n * n);
            for (const auto& b : c.basis) {
                CHECK(is_codeword(a, l, b));
                stacked = vstack(stacked, vec(b));
            }
            CHECK(rank(stacked) == c.dim);
            // Perturb a codeword by an elementary matrix and re-check directly.
            if (c.dim > 0) {
                Matrix b = c.basis[uniform_below(rng, c.dim)];
                b(uniform_below(rng, n), uniform_below(rng, n)) = f.add(b(0, 0), 1);
                CHECK(is_codeword(a, l, b) == (a * b - scale(b * a, l)).is_zero());
            }
        }
    }
}

TEST_CASE("membership: trivial codewords")
{
    Rng rng(33);
    Field f = Field::make(7);
    for (int t = 0; t < 20; ++t) {
        Matrix a = random_matrix(f, 3, rng);
        CHECK(is_codeword(a, random_elem(f, rng), Matrix(f, 3, 3)));
        CHECK(is_codeword(a, 1, a));
        Poly p(f, {random_elem(f, rng), random_elem(f, rng), random_elem(f, rng)});
        CHECK(is_codeword(a, 1, evaluate(p, a)));
    }
    CHECK_THROWS_AS(is_codeword(Matrix(f, 2, 2), 1, Matrix(f, 3, 3)), std::invalid_argument);
}

TEST_CASE("dimension is a conjugation and extension invariant")
{
    Rng rng(34);
    for (std::uint32_t p : {2, 3, 5}) {
        Field f = Field::make(p), ext = Field::make(p, 2);
        for (int t = 0; t < 15; ++t) {
            const std::size_t n = 1 + uniform_below(rng, 4);
            Matrix a = random_matrix(f, n, rng);
            Matrix pm = random_invertible(f, n, rng);
            const Elem l = random_elem(f, rng);
            CHECK(dim_oracle(pm * a * inverse(pm), l) == dim_oracle(a, l));
            // Prime-field encodings are the same in GF(p^2).
            CHECK(dim_oracle(a.map(ext, [](Elem x) { return x; }), l) == dim_oracle(a, l));
        }
    }
}

TEST_CASE("parity check has full-size characteristic polynomial")
{
    Rng rng(35);
    Field f = Field::make(3);
    for (int t = 0; t < 10; ++t) {
        const std::size_t n = 1 + uniform_below(rng, 3);
        Matrix h = parity_check(random_matrix(f, n, rng), random_elem(f, rng));
        CHECK(charpoly(h).degree() == static_cast<int>(n * n));
    }
}

TEST_CASE("invertible codewords")
{
    Field f5 = Field::make(5);
    auto w = find_invertible(code_build(Matrix::jordan_block(f5, 2), 2), 0);
    REQUIRE(w);
    CHECK(*w == Matrix::diagonal(f5, {1, 2}));
    CHECK_FALSE(find_invertible(code_build(Matrix::identity(f5, 2), 3), 50));
    auto id = find_invertible(code_build(Matrix::identity(f5, 2), 1), 50, 7);
    REQUIRE(id);
    CHECK(det(*id) != 0);

    Rng rng(36);
    for (std::uint64_t q : {2, 3, 4, 5, 7}) {
        Field f = Field::of_order(q);
        for (int t = 0; t < 15; ++t) {
            const std::size_t n = 1 + uniform_below(rng, 4);
            Matrix a = t % 2 ? random_nilpotent(f, n, rng) : random_matrix(f, n, rng);
            const Elem l = random_elem(f, rng);
            TwistedCode c = code_build(a, l);
            auto b = find_invertible(c, 30, t);
            if (l != 0 && power(a, n).is_zero()) REQUIRE(b);
            if (b) {
                CHECK(det(*b) != 0);
                CHECK(is_codeword(a, l, *b));
                CHECK(c.dim == dim_oracle(a, 1));
            }
        }
    }
}

TEST_CASE("Jordan basis of a nilpotent matrix")
{
    Rng rng(37);
    Field f = Field::make(3);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 1 + uniform_below(rng, 5);
        Matrix a = random_nilpotent(f, n, rng);
        NilpotentJordanBasis jb = nilpotent_jordan_basis(a);
        std::vector<Matrix> blocks;
        for (auto s : jb.block_sizes) blocks.push_back(Matrix::jordan_block(f, s));
        CHECK(jb.change * a * inverse(jb.change) == Matrix::block_diagonal(blocks));
        CHECK(std::is_sorted(jb.block_sizes.begin(), jb.block_sizes.end(), std::greater<>()));
    }
    CHECK_THROWS_AS(nilpotent_jordan_basis(Matrix::identity(f, 2)), std::invalid_argument);
}

TEST_CASE("minimum weight")
{
    Field f2 = Field::make(2), f3 = Field::make(3);
    CHECK(min_weight(code_build(Matrix::identity(f2, 2), 1), 1 << 10) == 1);
    CHECK(min_weight(code_build(Matrix(f3, {{0, 1}, {1, 0}}), 2), 1 << 10) == 2);
    CHECK_FALSE(min_weight(code_build(Matrix::identity(f3, 3), 1), 100));
    CHECK_THROWS_AS(min_weight(code_build(Matrix::identity(f3, 2), 2), 100), std::invalid_argument);
}

TEST_CASE("generator file round trip")
{
    Field f3 = Field::make(3);
    TwistedCode c = code_build(Matrix(f3, {{0, 1}, {1, 0}}), 2);
    std::ostringstream out;
    write_generator(out, c);
    std::istringstream in(out.str());
    GeneratorFile g = read_generator(in, f3);
    CHECK(g.q == 3);
    CHECK(g.n == 2);
    CHECK(g.lambda == 2);
    REQUIRE(g.basis.size() == 2);
    for (std::size_t i = 0; i < 2; ++i) CHECK(g.basis[i] == c.basis[i]);

    std::ostringstream empty;
    write_generator(empty, code_build(Matrix::identity(f3, 2), 2));
    CHECK(empty.str() == "3 2 2 0\n");

    std::istringstream bad("3 2 2 1\n0 1 2\n");
    CHECK_THROWS_AS(read_generator(bad, f3), std::runtime_error);
}
