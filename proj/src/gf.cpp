#include "tcc/gf.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "tcc/poly.hpp"

namespace tcc {

struct Field::Impl {
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint32_t> pow_p;  // p^i for i < k
    std::vector<Elem> exp;             // length 2(q-1)
    std::vector<std::uint32_t> log;    // log[0] unused
    Elem primitive = 1;

    Elem add(Elem a, Elem b) const noexcept
    {
        if (p == 2) return a ^ b;
        if (k == 1) {
            Elem s = a + b;
            return s >= p ? s - p : s;
        }
        Elem r = 0;
        for (std::uint32_t i = 0; i < k; ++i) {
            std::uint32_t d = a % p + b % p;
            if (d >= p) d -= p;
            r += d * pow_p[i];
            a /= p;
            b /= p;
        }
        return r;
    }

    Elem neg(Elem a) const noexcept
    {
        if (p == 2) return a;
        if (k == 1) return a == 0 ? 0 : p - a;
        Elem r = 0;
        for (std::uint32_t i = 0; i < k; ++i) {
            std::uint32_t d = a % p;
            r += ((p - d) % p) * pow_p[i];
            a /= p;
        }
        return r;
    }

    // Schoolbook product of residue polynomials, used only while building tables.
    Elem slow_mul(Elem a, Elem b) const
    {
        if (k == 1) return static_cast<Elem>((std::uint64_t{a} * b) % p);
        std::vector<std::uint64_t> prod(2 * k - 1, 0);
        std::vector<std::uint32_t> da(k), db(k);
        for (std::uint32_t i = 0; i < k; ++i) {
            da[i] = a % p;
            a /= p;
            db[i] = b % p;
            b /= p;
        }
        for (std::uint32_t i = 0; i < k; ++i) {
            if (da[i] == 0) continue;
            for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p;
        }
        for (std::uint32_t d = 2 * k - 2; d >= k; --d) {
            std::uint64_t c = prod[d];
            if (c == 0) continue;
            prod[d] = 0;
            for (std::uint32_t i = 0; i < k; ++i)
                prod[d - k + i] = (prod[d - k + i] + (p - c) * modulus[i]) % p;
        }
        Elem r = 0;
        for (std::uint32_t i = 0; i < k; ++i) r += static_cast<Elem>(prod[i]) * pow_p[i];
        return r;
    }

    void build_tables()
    {
        std::vector<std::uint32_t> primes;
        std::uint32_t m = q - 1;
        for (std::uint32_t f = 2; f * f <= m; ++f) {
            if (m % f) continue;
            primes.push_back(f);
            while (m % f == 0) m /= f;
        }
        if (m > 1) primes.push_back(m);

        auto slow_pow = [&](Elem a, std::uint64_t e) {
            Elem r = 1;
            while (e) {
                if (e & 1) r = slow_mul(r, a);
                a = slow_mul(a, a);
                e >>= 1;
            }
            return r;
        };
        primitive = 1;
        if (q > 2) {
            for (Elem g = 2; g < q; ++g) {
                bool ok = true;
                for (auto r : primes)
                    if (slow_pow(g, (q - 1) / r) == 1) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    primitive = g;
                    break;
                }
            }
        }
        exp.assign(2 * (q - 1), 0);
        log.assign(q, 0);
        Elem x = 1;
        for (std::uint32_t i = 0; i < q - 1; ++i) {
            exp[i] = x;
            exp[i + q - 1] = x;
            log[x] = i;
            x = slow_mul(x, primitive);
        }
    }
};

namespace {

std::mutex& cache_mutex()
{
    static std::mutex m;
    return m;
}

using CacheKey = std::pair<std::uint32_t, std::vector<std::uint32_t>>;

std::map<CacheKey, std::shared_ptr<const Field::Impl>>& modulus_cache()
{
    static std::map<CacheKey, std::shared_ptr<const Field::Impl>> c;
    return c;
}

std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>>& default_modulus()
{
    static std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> c;
    return c;
}

std::uint64_t checked_power(std::uint32_t p, std::uint32_t k)
{
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > kFieldCap) throw std::invalid_argument("field order exceeds the 2^20 cap");
    }
    return q;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus)
{
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (modulus.size() == 1) throw std::invalid_argument("modulus must have degree at least 1");
    std::uint32_t k = modulus.empty() ? 1 : static_cast<std::uint32_t>(modulus.size() - 1);
    if (k == 1) modulus.clear();
    std::uint64_t q = checked_power(p, k);
    CacheKey key{p, modulus};
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        if (auto it = modulus_cache().find(key); it != modulus_cache().end()) return Field(it->second);
    }
    if (k > 1) {
        if (modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
        for (auto c : modulus)
            if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
        std::vector<Elem> coeffs(modulus.begin(), modulus.end());
        if (!is_irreducible(Poly(make(p, 1), coeffs))) throw std::invalid_argument("modulus is not irreducible");
    }

    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->k = k;
    impl->q = static_cast<std::uint32_t>(q);
    impl->modulus = modulus;
    impl->pow_p.resize(k);
    for (std::uint32_t i = 0, v = 1; i < k; ++i, v *= p) impl->pow_p[i] = v;
    impl->build_tables();

    std::lock_guard<std::mutex> lock(cache_mutex());
    auto [it, inserted] = modulus_cache().emplace(key, impl);
    return Field(it->second);
}

Field Field::make(std::uint32_t p, std::uint32_t k)
{
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (k < 1) throw std::invalid_argument("extension degree must be at least 1");
    checked_power(p, k);
    if (k == 1) return with_modulus(p, {});
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        if (auto it = default_modulus().find({p, k}); it != default_modulus().end())
            return Field(modulus_cache().at({p, it->second}));
    }
    Field base = make(p, 1);
    std::uint64_t count = checked_power(p, k);
    for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<std::uint32_t> c(k + 1, 0);
        std::uint64_t v = code;
        for (std::uint32_t i = 0; i < k; ++i) {
            c[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        c[k] = 1;
        if (c[0] == 0) continue;
        std::vector<Elem> coeffs(c.begin(), c.end());
        if (!is_irreducible(Poly(base, coeffs))) continue;
        Field f = with_modulus(p, c);
        std::lock_guard<std::mutex> lock(cache_mutex());
        default_modulus()[{p, k}] = c;
        return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

Field Field::of_order(std::uint64_t q)
{
    if (q < 2) throw std::invalid_argument("field order must be at least 2");
    std::uint64_t p = 2;
    while (q % p) ++p;
    std::uint32_t k = 0;
    std::uint64_t r = q;
    while (r % p == 0) {
        r /= p;
        ++k;
    }
    if (r != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    return make(static_cast<std::uint32_t>(p), k);
}

std::uint32_t Field::p() const noexcept { return impl_->p; }
std::uint32_t Field::k() const noexcept { return impl_->k; }
std::uint32_t Field::q() const noexcept { return impl_->q; }
const std::vector<std::uint32_t>& Field::modulus() const noexcept { return impl_->modulus; }
Elem Field::primitive() const noexcept { return impl_->primitive; }

Elem Field::add(Elem a, Elem b) const noexcept { return impl_->add(a, b); }
Elem Field::sub(Elem a, Elem b) const noexcept { return impl_->add(a, impl_->neg(b)); }
Elem Field::neg(Elem a) const noexcept { return impl_->neg(a); }

Elem Field::mul(Elem a, Elem b) const noexcept
{
    if (a == 0 || b == 0) return 0;
    return impl_->exp[impl_->log[a] + impl_->log[b]];
}

Elem Field::inv(Elem a) const
{
    if (a == 0) throw std::domain_error("division by zero in " + name());
    std::uint32_t l = impl_->log[a];
    return impl_->exp[l == 0 ? 0 : (q() - 1) - l];
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, std::int64_t e) const
{
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    if (e == 0) return 1;
    if (a == 0) return 0;
    std::uint64_t order = q() - 1;
    std::uint64_t l = (std::uint64_t{impl_->log[a]} * (static_cast<std::uint64_t>(e) % order)) % order;
    return impl_->exp[l];
}

Elem Field::from_int(std::int64_t c) const noexcept
{
    std::int64_t p = impl_->p;
    return static_cast<Elem>(((c % p) + p) % p);
}

std::vector<std::uint32_t> Field::digits(Elem a) const
{
    std::vector<std::uint32_t> d(k());
    for (auto& x : d) {
        x = a % p();
        a /= p();
    }
    return d;
}

Elem Field::from_digits(std::span<const std::uint32_t> digits) const
{
    if (digits.size() > k()) throw std::invalid_argument("too many digits for " + name());
    Elem r = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] >= p()) throw std::invalid_argument("digit out of range");
        r += digits[i] * impl_->pow_p[i];
    }
    return r;
}

std::vector<Elem> Field::elements() const
{
    std::vector<Elem> all(q());
    std::iota(all.begin(), all.end(), Elem{0});
    return all;
}

std::string Field::name() const
{
    std::ostringstream s;
    s << "GF(" << p();
    if (k() > 1) s << '^' << k();
    s << ')';
    return s.str();
}

bool operator==(const Field& a, const Field& b) noexcept
{
    return a.impl_ == b.impl_ || (a.p() == b.p() && a.modulus() == b.modulus());
}

FqElem::FqElem(Field field, Elem value) : field_(std::move(field)), value_(value)
{
    if (!field_.contains(value_)) throw std::invalid_argument("element out of range for " + field_.name());
}

const Field& FqElem::same(const FqElem& o) const
{
    if (!(field_ == o.field_)) throw std::invalid_argument("field mismatch: " + field_.name() + " vs " + o.field_.name());
    return field_;
}

FqElem FqElem::operator+(const FqElem& o) const { return {same(o), field_.add(value_, o.value_)}; }
FqElem FqElem::operator-(const FqElem& o) const { return {same(o), field_.sub(value_, o.value_)}; }
FqElem FqElem::operator*(const FqElem& o) const { return {same(o), field_.mul(value_, o.value_)}; }
FqElem FqElem::operator/(const FqElem& o) const { return {same(o), field_.div(value_, o.value_)}; }
FqElem FqElem::operator-() const { return {field_, field_.neg(value_)}; }
FqElem FqElem::inv() const { return {field_, field_.inv(value_)}; }
FqElem FqElem::pow(std::int64_t e) const { return {field_, field_.pow(value_, e)}; }

}  // namespace tcc
