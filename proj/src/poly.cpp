#include "tcc/poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "tcc/rng.hpp"

namespace tcc {

Poly::Poly(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs))
{
    for (auto c : c_)
        if (!field_.contains(c)) throw std::invalid_argument("coefficient out of range for " + field_.name());
    trim();
}

void Poly::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(Field field, Elem c) { return Poly(std::move(field), std::vector<Elem>{c}); }

Poly Poly::monomial(Field field, std::size_t degree, Elem c)
{
    std::vector<Elem> v(degree + 1, 0);
    v[degree] = c;
    return Poly(std::move(field), std::move(v));
}

Poly Poly::linear(Field field, Elem a)
{
    Elem na = field.neg(a);
    return Poly(std::move(field), std::vector<Elem>{na, 1});
}

Elem Poly::eval(Elem x) const
{
    Elem r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = field_.add(field_.mul(r, x), *it);
    return r;
}

std::string Poly::str() const
{
    if (c_.empty()) return "0";
    std::ostringstream s;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Elem c = c_[i];
        if (c == 0) continue;
        if (!first) s << " + ";
        first = false;
        if (c != 1 || i == 0) s << c;
        if (i >= 1) s << 't';
        if (i >= 2) s << '^' << i;
    }
    return s.str();
}

namespace {

void require_same(const Poly& f, const Poly& g)
{
    if (!(f.field() == g.field())) throw std::invalid_argument("polynomials over different fields");
}

}  // namespace

Poly operator+(const Poly& f, const Poly& g)
{
    require_same(f, g);
    const Field& F = f.field();
    std::vector<Elem> r(std::max(f.coeffs().size(), g.coeffs().size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.add(f[i], g[i]);
    return Poly(F, std::move(r));
}

Poly operator-(const Poly& f, const Poly& g)
{
    require_same(f, g);
    const Field& F = f.field();
    std::vector<Elem> r(std::max(f.coeffs().size(), g.coeffs().size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.sub(f[i], g[i]);
    return Poly(F, std::move(r));
}

Poly operator*(const Poly& f, const Poly& g)
{
    require_same(f, g);
    const Field& F = f.field();
    if (f.is_zero() || g.is_zero()) return Poly(F);
    const auto& a = f.coeffs();
    const auto& b = g.coeffs();
    std::vector<Elem> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    return Poly(F, std::move(r));
}

Poly scale(const Poly& f, Elem c)
{
    std::vector<Elem> r(f.coeffs());
    for (auto& x : r) x = f.field().mul(x, c);
    return Poly(f.field(), std::move(r));
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g)
{
    require_same(f, g);
    if (g.is_zero()) throw std::domain_error("polynomial division by zero");
    const Field& F = f.field();
    if (f.degree() < g.degree()) return {Poly(F), f};
    std::vector<Elem> rem(f.coeffs());
    const auto& d = g.coeffs();
    const std::size_t dg = d.size() - 1;
    std::vector<Elem> quo(rem.size() - dg, 0);
    const Elem inv_lead = F.inv(d.back());
    for (std::size_t i = rem.size(); i-- > dg;) {
        Elem c = rem[i];
        if (c == 0) continue;
        c = F.mul(c, inv_lead);
        quo[i - dg] = c;
        for (std::size_t j = 0; j <= dg; ++j) rem[i - dg + j] = F.sub(rem[i - dg + j], F.mul(c, d[j]));
    }
    rem.resize(dg);
    return {Poly(F, std::move(quo)), Poly(F, std::move(rem))};
}

Poly operator%(const Poly& f, const Poly& g) { return divmod(f, g).second; }
Poly operator/(const Poly& f, const Poly& g) { return divmod(f, g).first; }

Poly monic(const Poly& f)
{
    if (f.is_zero()) return f;
    return scale(f, f.field().inv(f.lead()));
}

Poly derivative(const Poly& f)
{
    const Field& F = f.field();
    if (f.degree() < 1) return Poly(F);
    std::vector<Elem> r(f.coeffs().size() - 1);
    for (std::size_t i = 1; i < f.coeffs().size(); ++i) r[i - 1] = F.mul(F.from_int(static_cast<std::int64_t>(i)), f[i]);
    return Poly(F, std::move(r));
}

Poly gcd(const Poly& f, const Poly& g)
{
    require_same(f, g);
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

Poly lcm(const Poly& f, const Poly& g)
{
    if (f.is_zero() || g.is_zero()) return Poly(f.field());
    return monic((f / gcd(f, g)) * g);
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m)
{
    Poly result = Poly::constant(m.field(), 1) % m;
    Poly b = base % m;
    while (e) {
        if (e & 1) result = (result * b) % m;
        e >>= 1;
        if (e) b = (b * b) % m;
    }
    return result;
}

Poly twist(const Poly& f, Elem lambda)
{
    const Field& F = f.field();
    if (lambda == 0) throw std::invalid_argument("twist requires a nonzero scalar");
    if (!f.is_monic()) throw std::invalid_argument("twist requires a monic polynomial");
    const int n = f.degree();
    const Elem li = F.inv(lambda);
    std::vector<Elem> r(f.coeffs());
    Elem s = 1;  // lambda^-(n-i) for i = n, n-1, ...
    for (int i = n; i >= 0; --i) {
        r[i] = F.mul(r[i], s);
        s = F.mul(s, li);
    }
    return Poly(F, std::move(r));
}

namespace {

std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

// t^(q^i) mod f for i = 0..count
Poly frobenius_power(const Poly& x, std::uint64_t times, const Poly& f)
{
    Poly r = x % f;
    for (std::uint64_t i = 0; i < times; ++i) r = powmod(r, f.field().q(), f);
    return r;
}

// p-th root of a polynomial whose derivative vanishes.
Poly pth_root(const Poly& f)
{
    const Field& F = f.field();
    const std::uint32_t p = F.p();
    const std::int64_t root_exp = F.q() / p;  // a^(q/p) is the p-th root of a
    std::vector<Elem> r(f.coeffs().size() / p + 1, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) r[i / p] = F.pow(f[i], root_exp);
    return Poly(F, std::move(r));
}

void squarefree_parts(const Poly& f, int mult, std::vector<std::pair<Poly, int>>& out)
{
    const Field& F = f.field();
    const Poly one = Poly::constant(F, 1);
    Poly c = gcd(f, derivative(f));
    Poly w = f / c;
    int i = 1;
    while (!(w == one)) {
        Poly y = gcd(w, c);
        Poly part = w / y;
        if (part.degree() > 0) out.emplace_back(monic(part), i * mult);
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) squarefree_parts(monic(pth_root(c)), mult * static_cast<int>(F.p()), out);
}

Poly random_poly(const Field& F, int below_degree, Rng& rng)
{
    std::vector<Elem> c(below_degree);
    for (auto& x : c) x = static_cast<Elem>(uniform_below(rng, F.q()));
    return Poly(F, std::move(c));
}

// Split a squarefree monic f whose irreducible factors all have degree d.
void equal_degree_split(const Poly& f, int d, Rng& rng, std::vector<Poly>& out)
{
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    const Field& F = f.field();
    const Poly one = Poly::constant(F, 1);
    for (;;) {
        Poly a = random_poly(F, f.degree(), rng);
        if (a.degree() < 1) continue;
        Poly b(F);
        if (F.p() == 2) {
            // trace map a + a^2 + ... + a^(2^(kd-1))
            Poly term = a % f;
            b = term;
            for (std::uint32_t i = 1; i < F.k() * static_cast<std::uint32_t>(d); ++i) {
                term = (term * term) % f;
                b = b + term;
            }
        } else {
            // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q-1)/2)
            Poly term = a % f;
            Poly acc = term;
            for (int i = 1; i < d; ++i) {
                term = powmod(term, F.q(), f);
                acc = (acc * term) % f;
            }
            b = powmod(acc, (F.q() - 1) / 2, f) - one;
        }
        if (b.is_zero()) continue;
        Poly g = gcd(f, b);
        if (g.degree() <= 0 || g.degree() == f.degree()) continue;
        equal_degree_split(g, d, rng, out);
        equal_degree_split(f / g, d, rng, out);
        return;
    }
}

}  // namespace

bool is_irreducible(const Poly& f)
{
    if (f.degree() < 1) throw std::invalid_argument("irreducibility of a constant is undefined");
    if (f.degree() == 1) return true;
    const Poly g = monic(f);
    const Field& F = g.field();
    const auto n = static_cast<std::uint64_t>(g.degree());
    const Poly x = Poly::monomial(F, 1);
    if (!(frobenius_power(x, n, g) == x % g)) return false;
    for (auto r : prime_divisors(n)) {
        Poly h = frobenius_power(x, n / r, g) - x;
        if (gcd(g, h).degree() > 0) return false;
    }
    return true;
}

bool is_squarefree(const Poly& f)
{
    if (f.degree() < 1) return true;
    return gcd(f, derivative(f)).degree() == 0;
}

bool canonical_less(const Poly& a, const Poly& b)
{
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

Factorization factor(const Poly& f)
{
    if (f.degree() < 1) throw std::invalid_argument("cannot factor a constant polynomial");
    const Field& F = f.field();
    Factorization result{f.lead(), {}};
    std::vector<std::pair<Poly, int>> parts;
    squarefree_parts(monic(f), 1, parts);

    Rng rng(0x7cc5eedULL);
    const Poly x = Poly::monomial(F, 1);
    for (auto& [part, mult] : parts) {
        Poly rest = part;
        Poly h = x % rest;
        for (int d = 1; rest.degree() >= 2 * d; ++d) {
            h = powmod(h, F.q(), rest);
            Poly g = gcd(rest, h - x);
            if (g.degree() > 0) {
                std::vector<Poly> pieces;
                equal_degree_split(g, d, rng, pieces);
                for (auto& pc : pieces) result.factors.push_back({std::move(pc), mult});
                rest = rest / g;
                h = h % rest;
            }
        }
        if (rest.degree() > 0) result.factors.push_back({monic(rest), mult});
    }

    // Squarefree parts of distinct multiplicity share no factors, but a factor
    // can appear in several parts after p-th roots; merge just in case.
    std::sort(result.factors.begin(), result.factors.end(),
              [](const Factor& a, const Factor& b) { return canonical_less(a.poly, b.poly); });
    std::vector<Factor> merged;
    for (auto& fc : result.factors) {
        if (!merged.empty() && merged.back().poly == fc.poly)
            merged.back().multiplicity += fc.multiplicity;
        else
            merged.push_back(std::move(fc));
    }
    result.factors = std::move(merged);
    return result;
}

Poly expand(const Field& field, const Factorization& fac)
{
    Poly r = Poly::constant(field, fac.unit);
    for (const auto& fc : fac.factors)
        for (int i = 0; i < fc.multiplicity; ++i) r = r * fc.poly;
    return r;
}

std::vector<Elem> roots(const Poly& f)
{
    std::vector<Elem> out;
    if (f.degree() < 1) return out;
    for (const auto& fc : factor(f).factors)
        if (fc.poly.degree() == 1) out.push_back(f.field().neg(fc.poly[0]));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace tcc
