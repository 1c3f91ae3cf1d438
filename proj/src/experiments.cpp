#include "tcc/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "tcc/dimension.hpp"
#include "tcc/generate.hpp"
#include "tcc/linalg.hpp"

namespace tcc {

std::string rational_str(const Rational& r)
{
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

std::string to_string(Mode m) { return m == Mode::Exhaustive ? "exhaustive" : "monte-carlo"; }

namespace {

std::uint64_t matrix_count(std::uint32_t q, std::size_t n)
{
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n * n; ++i) {
        if (total > kExhaustiveCap / q) throw std::invalid_argument("exhaustive enumeration exceeds the 2^22 cap");
        total *= q;
    }
    return total;
}

// Calls visit(A) for every n x n matrix over f, in base-q index order.
void for_each_matrix(const Field& f, std::size_t n, const std::function<void(const Matrix&)>& visit)
{
    const std::uint64_t total = matrix_count(f.q(), n);
    Matrix a(f, n, n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t v = idx;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) = static_cast<Elem>(v % f.q());
                v /= f.q();
            }
        visit(a);
    }
}

double std_error(const Rational& pi, std::uint64_t trials)
{
    const double p = static_cast<double>(pi);
    return std::sqrt(p * (1 - p) / static_cast<double>(trials));
}

}  // namespace

Rational ProbEstimate::bound() const
{
    if (lambda == 1) return Rational(1);
    if (lambda == 0 || n == 1) return bound_q_inv;
    return n == 3 ? bound_76 : bound_54;
}

bool ProbEstimate::pass() const
{
    if (mode == Mode::Exhaustive) return lambda == 1 ? pi == 1 : pi >= bound();
    return static_cast<double>(pi) >= static_cast<double>(bound()) - 4 * stderr_;
}

ProbEstimate prob_estimate(const Field& f, std::size_t n, Elem lambda, Mode mode, std::uint64_t trials,
                           std::uint64_t seed)
{
    if (n == 0) throw std::invalid_argument("n must be positive");
    if (!f.contains(lambda)) throw std::invalid_argument("lambda out of range");
    ProbEstimate e{};
    e.q = f.q();
    e.n = n;
    e.lambda = lambda;
    e.mode = mode;
    e.bound_q_inv = Rational(1, f.q());
    e.bound_54 = Rational(5, 4 * f.q());
    e.bound_76 = Rational(7, 6 * f.q());
    auto tally = [&](const Matrix& a) {
        ++e.trials;
        if (dim_value(a, lambda) != 0) ++e.nonzero_count;
    };
    if (mode == Mode::Exhaustive) {
        for_each_matrix(f, n, tally);
    } else {
        if (trials == 0) throw std::invalid_argument("Monte Carlo needs at least one trial");
        Rng rng(seed);
        for (std::uint64_t t = 0; t < trials; ++t) tally(random_matrix(f, n, rng));
        e.seed = seed;
    }
    e.pi = Rational(e.nonzero_count, e.trials);
    if (mode == Mode::MonteCarlo) e.stderr_ = std_error(e.pi, e.trials);
    return e;
}

std::string to_json_line(const ProbEstimate& e)
{
    nlohmann::ordered_json j;
    j["experiment"] = "prob";
    j["q"] = e.q;
    j["n"] = e.n;
    j["lambda"] = e.lambda;
    j["mode"] = to_string(e.mode);
    j["count"] = e.nonzero_count;
    j["total"] = e.trials;
    j["pi"] = std::to_string(e.nonzero_count) + "/" + std::to_string(e.trials);
    j["bound"] = rational_str(e.bound());
    j["pass"] = e.pass();
    j["seed"] = e.seed ? nlohmann::ordered_json(*e.seed) : nlohmann::ordered_json(nullptr);
    j["stderr"] = e.stderr_;
    return j.dump();
}

BigInt gl_order(std::size_t n, std::uint64_t q)
{
    BigInt qn = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n));
    BigInt order = 1, qi = 1;
    for (std::size_t i = 0; i < n; ++i) {
        order *= qn - qi;
        qi *= q;
    }
    return order;
}

bool gl_ratio_check(std::size_t n, std::uint64_t q)
{
    const Rational ratio(gl_order(n, q), boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n * n)));
    const Rational qinv(1, q);
    return 1 - qinv - qinv * qinv < ratio && ratio <= 1 - qinv;
}

std::uint64_t nilpotent_census(const Field& f, std::size_t n)
{
    std::uint64_t count = 0;
    for_each_matrix(f, n, [&](const Matrix& a) { count += power(a, n).is_zero(); });
    return count;
}

Rational fixed_point_proportion(std::size_t n)
{
    if (n == 0) throw std::invalid_argument("n must be positive");
    // partial[k] = sum_{j<=k} (-1)^j / j!
    Rational sum = 0, term = 1;
    std::vector<Rational> partial;
    for (std::size_t k = 0; k <= n; ++k) {
        if (k > 0) term = -term / static_cast<long>(k);
        sum += term;
        partial.push_back(sum);
    }
    // One minus derangements minus permutations with exactly one fixed point.
    return 1 - partial[n] - partial[n - 1];
}

Rational fixed_point_proportion_enumerated(std::size_t n)
{
    if (n == 0) throw std::invalid_argument("n must be positive");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t hits = 0, total = 0;
    do {
        std::size_t fixed = 0;
        for (std::size_t i = 0; i < n; ++i) fixed += perm[i] == i;
        hits += fixed >= 2;
        ++total;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Rational(hits, total);
}

InjectiveMap::InjectiveMap(std::size_t r, std::vector<std::size_t> images) : r_(r), images_(std::move(images))
{
    if (images_.empty() || images_.size() > r_) throw std::invalid_argument("need 1 <= s <= r");
    std::vector<bool> seen(r_ + 1, false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        const std::size_t y = images_[i];
        if (y < 1 || y > r_) throw std::invalid_argument("image outside [r]");
        if (y == i + 1) throw std::invalid_argument("map has a fixed point");
        if (seen[y]) throw std::invalid_argument("map is not injective");
        seen[y] = true;
    }
}

std::size_t DerangementExtension::at(std::size_t x) const
{
    auto it = std::lower_bound(domain.begin(), domain.end(), x);
    if (it == domain.end() || *it != x) throw std::out_of_range("point outside the extension domain");
    return image[static_cast<std::size_t>(it - domain.begin())];
}

DerangementExtension derangement_extend(const InjectiveMap& sigma)
{
    const std::size_t s = sigma.s(), r = sigma.r();
    std::vector<bool> in_image(r + 1, false);
    for (auto y : sigma.images()) in_image[y] = true;

    // ext[x] = image of x, 0 when undefined.
    std::vector<std::size_t> ext(r + 1, 0);
    for (std::size_t i = 1; i <= s; ++i) ext[i] = sigma(i);

    // A point of [s] outside the image starts a chain x, x sigma, ... that
    // leaves [s] at a point of the image outside [s]; close it.
    for (std::size_t start = 1; start <= s; ++start) {
        if (in_image[start]) continue;
        std::size_t end = start;
        while (end <= s) end = sigma(end);
        ext[end] = start;
    }

    // Points in neither [s] nor the image.
    std::vector<std::size_t> rest;
    for (std::size_t x = s + 1; x <= r; ++x)
        if (!in_image[x]) rest.push_back(x);
    if (rest.size() >= 2)
        for (std::size_t i = 0; i < rest.size(); ++i) ext[rest[i]] = rest[(i + 1) % rest.size()];

    DerangementExtension out;
    for (std::size_t x = 1; x <= r; ++x)
        if (ext[x] != 0) {
            out.domain.push_back(x);
            out.image.push_back(ext[x]);
        }
    return out;
}

std::vector<InjectiveMap> all_injective_maps(std::size_t r)
{
    std::vector<InjectiveMap> out;
    std::vector<std::size_t> images;
    std::vector<bool> used(r + 1, false);
    std::function<void()> extend = [&] {
        if (!images.empty()) out.emplace_back(r, images);
        if (images.size() == r) return;
        const std::size_t i = images.size() + 1;
        for (std::size_t y = 1; y <= r; ++y) {
            if (y == i || used[y]) continue;
            used[y] = true;
            images.push_back(y);
            extend();
            images.pop_back();
            used[y] = false;
        }
    };
    extend();
    return out;
}

Rational omega(std::size_t n, std::uint64_t q)
{
    Rational w = 1;
    BigInt qi = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        qi *= q;
        w *= 1 - Rational(1, qi);
    }
    return w;
}

TailProb tail_prob_check(const Field& f, std::size_t n, Mode mode, std::uint64_t trials, std::uint64_t seed)
{
    if (n == 0) throw std::invalid_argument("n must be positive");
    TailProb t{};
    t.q = f.q();
    t.n = n;
    t.mode = mode;
    auto tally = [&](const Matrix& a) {
        ++t.total;
        const std::size_t k0 = n - rank(a);
        const std::size_t m0 = n - rank(power(a, n));
        t.count += 2 * k0 + m0 > 2 * n;
    };
    if (mode == Mode::Exhaustive) {
        for_each_matrix(f, n, tally);
    } else {
        if (trials == 0) throw std::invalid_argument("Monte Carlo needs at least one trial");
        Rng rng(seed);
        for (std::uint64_t i = 0; i < trials; ++i) tally(random_matrix(f, n, rng));
        t.seed = seed;
    }
    t.prob = Rational(t.count, t.total);
    const unsigned e = static_cast<unsigned>((2 * n + 2) / 3);
    t.bound = Rational(2, boost::multiprecision::pow(BigInt(f.q()), e));
    return t;
}

std::vector<M0Row> m0_census(const Field& f, std::size_t n)
{
    std::vector<M0Row> rows(n + 1);
    const std::uint64_t q = f.q();
    const Rational wn = omega(n, q);
    for (std::size_t m = 0; m <= n; ++m) {
        rows[m].m0 = m;
        rows[m].predicted =
            Rational(boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n * n - m))) * wn / omega(m, q);
    }
    for_each_matrix(f, n, [&](const Matrix& a) {
        // Multiplicity of t in the characteristic polynomial.
        const Poly c = charpoly(a);
        std::size_t m = 0;
        while (m < n && c[m] == 0) ++m;
        ++rows[m].count;
    });
    return rows;
}

}  // namespace tcc
