#include "tcc/spectral.hpp"

#include <algorithm>
#include <numeric>

#include "tcc/code.hpp"

namespace tcc {

SplittingField::SplittingField(Field base, Field ext, std::uint32_t degree, Elem generator_image)
    : base_(std::move(base)), ext_(std::move(ext)), degree_(degree), generator_image_(generator_image)
{
    // embed(sum d_i x^i) = sum d_i g^i with g the generator image; prime
    // field digits have the same encoding in every field of characteristic p.
    table_.resize(base_.q());
    std::vector<Elem> gpow(base_.k());
    Elem g = 1;
    for (auto& x : gpow) {
        x = g;
        g = ext_.mul(g, generator_image_);
    }
    for (Elem a = 0; a < base_.q(); ++a) {
        auto d = base_.digits(a);
        Elem r = 0;
        for (std::size_t i = 0; i < d.size(); ++i) r = ext_.add(r, ext_.mul(d[i], gpow[i]));
        table_[a] = r;
    }
}

Poly SplittingField::embed(const Poly& f) const
{
    std::vector<Elem> c(f.coeffs());
    for (auto& x : c) x = embed(x);
    return Poly(ext_, std::move(c));
}

Matrix SplittingField::embed(const Matrix& m) const
{
    return m.map(ext_, [this](Elem a) { return embed(a); });
}

SplittingField splitting_field(const Poly& c)
{
    if (c.degree() < 1 || !c.is_monic()) throw std::invalid_argument("splitting field needs a monic polynomial of degree >= 1");
    const Field& base = c.field();
    std::uint32_t e = 1;
    for (const auto& fc : factor(c).factors) e = std::lcm(e, static_cast<std::uint32_t>(fc.poly.degree()));

    std::uint64_t order = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        order *= base.q();
        if (order > kFieldCap)
            throw SpectralUnavailable("splitting field " + base.name() + "^" + std::to_string(e) + " exceeds the 2^20 cap");
    }
    if (e == 1) return SplittingField(base, base, 1, base.k() > 1 ? base.p() : 0);

    Field ext = Field::make(base.p(), base.k() * e);
    Elem gen = 0;
    if (base.k() > 1) {
        std::vector<Elem> mod(base.modulus().begin(), base.modulus().end());
        auto r = roots(Poly(ext, mod));
        if (r.empty()) throw std::logic_error("base modulus has no root in the extension");
        gen = r.front();
    }
    return SplittingField(base, ext, e, gen);
}

const Eigen* Spectrum::find(Elem alpha) const
{
    auto it = std::lower_bound(entries.begin(), entries.end(), alpha, [](const Eigen& e, Elem a) { return e.alpha < a; });
    return (it != entries.end() && it->alpha == alpha) ? &*it : nullptr;
}

std::size_t Spectrum::m_at(Elem alpha) const
{
    const Eigen* e = find(alpha);
    return e ? e->m : 0;
}

std::size_t Spectrum::k_at(Elem alpha) const
{
    const Eigen* e = find(alpha);
    return e ? e->k : 0;
}

bool Spectrum::diagonalizable() const
{
    return std::all_of(entries.begin(), entries.end(), [](const Eigen& e) { return e.k == e.m; });
}

Spectrum spectrum(const Matrix& a)
{
    const Poly c = charpoly(a);
    SplittingField sf = splitting_field(c);
    const Field& ext = sf.ext();
    const Matrix ae = sf.embed(a);
    const std::size_t n = a.rows();

    std::vector<Eigen> entries;
    for (const auto& fc : factor(c).factors)
        for (Elem alpha : roots(sf.embed(fc.poly))) {
            const std::size_t k = n - rank(ae - Matrix::scalar(ext, n, alpha));
            entries.push_back({alpha, static_cast<std::size_t>(fc.multiplicity), k});
        }
    std::sort(entries.begin(), entries.end(), [](const Eigen& x, const Eigen& y) { return x.alpha < y.alpha; });
    return {std::move(sf), std::move(entries)};
}

SpectralBounds tm_bounds(const Spectrum& s, Elem lambda)
{
    const Field& ext = s.field.ext();
    const Elem l = s.field.embed(lambda);
    SpectralBounds b{0, 0};
    for (const auto& e : s.entries) {
        const Elem beta = ext.mul(l, e.alpha);
        b.lo += s.k_at(beta) * e.k;
        b.hi += s.m_at(beta) * e.m;
    }
    return b;
}

SpectralBounds tm_bounds(const Matrix& a, Elem lambda) { return tm_bounds(spectrum(a), lambda); }

CharpolyHCheck charpoly_h_detail(const Matrix& a, const Spectrum& s, Elem lambda)
{
    const Field& ext = s.field.ext();
    Poly direct = s.field.embed(charpoly(parity_check(a, lambda)));
    const Elem l = s.field.embed(lambda);
    Poly product = Poly::constant(ext, 1);
    for (const auto& x : s.entries)
        for (const auto& y : s.entries) {
            const Poly lin = Poly::linear(ext, ext.sub(x.alpha, ext.mul(l, y.alpha)));
            for (std::size_t i = 0; i < x.m * y.m; ++i) product = product * lin;
        }
    const bool equal = direct == product;
    return {std::move(direct), std::move(product), equal};
}

bool charpoly_H_check(const Matrix& a, Elem lambda) { return charpoly_h_detail(a, spectrum(a), lambda).equal; }

}  // namespace tcc
