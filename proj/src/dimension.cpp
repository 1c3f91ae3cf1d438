#include "tcc/dimension.hpp"

#include <algorithm>
#include <stdexcept>

#include "tcc/code.hpp"
#include "tcc/spectral.hpp"

namespace tcc {

Partition::Partition(std::vector<std::size_t> parts) : parts_(std::move(parts))
{
    for (auto p : parts_)
        if (p == 0) throw std::invalid_argument("partition parts must be positive");
    if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<>()))
        throw std::invalid_argument("partition parts must be weakly decreasing");
}

std::size_t Partition::size() const noexcept
{
    std::size_t s = 0;
    for (auto p : parts_) s += p;
    return s;
}

Partition Partition::conjugate() const
{
    std::vector<std::size_t> c(parts_.empty() ? 0 : parts_.front(), 0);
    for (auto p : parts_)
        for (std::size_t i = 0; i < p; ++i) ++c[i];
    return Partition(std::move(c));
}

std::size_t Partition::sum_of_squares() const noexcept
{
    std::size_t s = 0;
    for (auto p : parts_) s += p * p;
    return s;
}

std::string to_string(Method m)
{
    switch (m) {
    case Method::LambdaZero: return "lambda-zero";
    case Method::Scalar: return "scalar";
    case Method::NilpotentPartition: return "nilpotent-partition";
    case Method::CyclicGcd: return "cyclic-gcd";
    case Method::FittingSum: return "fitting-sum";
    case Method::PrimarySplit: return "primary-split";
    case Method::OracleFallback: return "oracle-fallback";
    }
    return "unknown";
}

std::size_t dim_lambda0(const Matrix& a)
{
    const std::size_t n = a.rows();
    return (n - rank(a)) * n;
}

Partition nilpotent_partition(const Matrix& a)
{
    const auto r = rank_sequence(a);
    if (r.back() != 0) throw std::invalid_argument("matrix is not nilpotent");
    std::vector<std::size_t> conj;
    for (std::size_t i = 1; i < r.size() && r[i - 1] > r[i]; ++i) conj.push_back(r[i - 1] - r[i]);
    return Partition(std::move(conj)).conjugate();
}

std::size_t dim_nilpotent(const Matrix& a, Elem lambda)
{
    if (lambda == 0) throw std::invalid_argument("nilpotent dimension formula needs lambda != 0");
    return nilpotent_partition(a).conjugate().sum_of_squares();
}

std::size_t dim_cyclic(const Matrix& a, Elem lambda)
{
    if (lambda == 0) throw std::invalid_argument("cyclic dimension formula needs lambda != 0");
    if (!is_cyclic(a)) throw std::invalid_argument("matrix is not cyclic");
    const Poly c = charpoly(a);
    return static_cast<std::size_t>(gcd(c, twist(c, lambda)).degree());
}

namespace {

void deepen(Method& current, Method m) { current = std::max(current, m); }

// Dimension for an invertible block with lambda != 0.
std::size_t dim_invertible(const Matrix& b, Elem lambda, Method& method)
{
    const std::size_t n = b.rows();
    if (n == 0) return 0;
    const Field& F = b.field();
    if (b.is_scalar()) {
        deepen(method, Method::Scalar);
        return lambda == 1 ? n * n : 0;
    }
    if (is_cyclic(b)) {
        deepen(method, Method::CyclicGcd);
        return dim_cyclic(b, lambda);
    }
    const Poly c = charpoly(b);
    const Elem lambda_inv = F.inv(lambda);
    for (Elem alpha : roots(c)) {
        const Poly lin = Poly::linear(F, alpha);
        Poly rest = c;
        while (true) {
            auto [quo, rem] = divmod(rest, lin);
            if (!rem.is_zero()) break;
            rest = std::move(quo);
        }
        if (rest.degree() == 0) {
            // c = (t - alpha)^n: for lambda = 1 the centralizer of b equals that
            // of the nilpotent b - alpha I; otherwise lambda alpha is not an
            // eigenvalue and every spectral pairing is empty.
            deepen(method, Method::PrimarySplit);
            return lambda == 1 ? dim_nilpotent(b - Matrix::scalar(F, n, alpha), 1) : 0;
        }
        if (rest.eval(F.mul(lambda, alpha)) == 0 || rest.eval(F.mul(lambda_inv, alpha)) == 0) continue;
        deepen(method, Method::PrimarySplit);
        const BlockSplit s = split_at_eigenvalue(b, alpha);
        return dim_invertible(s.first, lambda, method) + dim_invertible(s.second, lambda, method);
    }
    deepen(method, Method::OracleFallback);
    return dim_oracle(b, lambda);
}

}  // namespace

std::size_t dim_value(const Matrix& a, Elem lambda, Method* method_out)
{
    if (!a.is_square() || a.rows() == 0) throw std::invalid_argument("dimension needs a nonempty square matrix");
    if (!a.field().contains(lambda)) throw std::invalid_argument("lambda out of range");
    const std::size_t n = a.rows();
    Method method = Method::LambdaZero;
    std::size_t dim = 0;
    if (lambda == 0) {
        dim = dim_lambda0(a);
    } else if (a.is_scalar()) {
        method = Method::Scalar;
        dim = (lambda == 1 || a(0, 0) == 0) ? n * n : 0;
    } else {
        const FittingSplit fs = fitting_split(a);
        if (fs.m0 > 0) {
            deepen(method, Method::NilpotentPartition);
            dim += dim_nilpotent(fs.nilpotent, lambda);
        }
        if (fs.m0 < n) dim += dim_invertible(fs.invertible, lambda, method);
        if (fs.m0 > 0 && fs.m0 < n) deepen(method, Method::FittingSum);
    }
    if (method_out) *method_out = method;
    return dim;
}

DimReport dim_fast(const Matrix& a, Elem lambda, bool with_spectral)
{
    DimReport rep{};
    rep.dim = dim_value(a, lambda, &rep.method);
    rep.n = a.rows();
    rep.rank = rank(a);
    rep.k0 = rep.n - rep.rank;
    rep.m0 = rep.n - rank(power(a, rep.n));
    rep.bounds = bounds(a, lambda, with_spectral);
    return rep;
}

BoundSet bounds(const Matrix& a, Elem lambda, bool with_spectral)
{
    const std::size_t n = a.rows();
    const std::size_t r = rank(a);
    const std::size_t k0 = n - r;
    const std::size_t m0 = n - rank(power(a, n));
    const bool scalar = a.is_scalar();
    BoundSet b;
    if (lambda != 0) {
        b.rank_lo = k0 * k0;
        b.rank_hi = k0 * k0 + r * r;
        if (!scalar) b.ub_nonscalar = (n - 1) * (n - 1) + 1;
    }
    if (lambda != 0 && lambda != 1 && 2 * k0 + m0 <= 2 * n) b.ub_half = n * n / 2;
    if (!scalar) b.ub_gross = n * n - n;
    if (lambda == 1) b.min_lo = static_cast<std::size_t>(minpoly(a).degree());
    b.singular_nonzero = r < n;
    if (with_spectral) {
        try {
            const SpectralBounds s = tm_bounds(a, lambda);
            b.spectral_lo = s.lo;
            b.spectral_hi = s.hi;
        } catch (const SpectralUnavailable&) {
        }
    }
    return b;
}

std::vector<std::string> bound_violations(const BoundSet& b, std::size_t dim, std::size_t n)
{
    std::vector<std::string> out;
    auto below = [&](const std::optional<std::size_t>& lo, const char* name) {
        if (lo && dim < *lo) out.emplace_back(name);
    };
    auto above = [&](const std::optional<std::size_t>& hi, const char* name) {
        if (hi && dim > *hi) out.emplace_back(name);
    };
    below(b.rank_lo, "rank_lo");
    above(b.rank_hi, "rank_hi");
    above(b.ub_half, "ub_half");
    above(b.ub_nonscalar, "ub_nonscalar");
    above(b.ub_gross, "ub_gross");
    below(b.spectral_lo, "spectral_lo");
    above(b.spectral_hi, "spectral_hi");
    below(b.min_lo, "min_lo");
    if (b.singular_nonzero && dim == 0) out.emplace_back("singular_nonzero");
    if (dim > n * (n - 1) && dim < n * n) out.emplace_back("gap");
    return out;
}

TfaeResult tfae_check(const Matrix& a, Elem lambda)
{
    const Spectrum s = spectrum(a);
    const FittingSplit fs = fitting_split(a);
    TfaeResult r{};
    r.a = fs.nilpotent.is_zero() && (fs.invertible.rows() == 0 || is_squarefree(minpoly(fs.invertible)));
    r.b = s.diagonalizable();
    const SpectralBounds tb = tm_bounds(s, lambda);
    const std::size_t dim = dim_value(a, lambda);
    r.c = tb.lo == dim && dim == tb.hi;
    return r;
}

}  // namespace tcc
