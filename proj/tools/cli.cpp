#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "tcc/acceptance.hpp"
#include "tcc/code.hpp"
#include "tcc/dimension.hpp"
#include "tcc/experiments.hpp"
#include "tcc/generate.hpp"
#include "tcc/spectral.hpp"

namespace tcc {
namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Matrix load(const std::string& path, std::istream& in)
{
    if (path == "-") return read_matrix(in);
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open " + path);
    return read_matrix(file);
}

void check_lambda(const Matrix& a, Elem lambda)
{
    if (!a.field().contains(lambda))
        throw UsageError("lambda " + std::to_string(lambda) + " is not an element of " + a.field().name());
}

Json bounds_json(const BoundSet& b)
{
    Json j = Json::object();
    auto put = [&](const char* name, const std::optional<std::size_t>& v) {
        if (v) j[name] = *v;
    };
    put("rank_lo", b.rank_lo);
    put("rank_hi", b.rank_hi);
    put("ub_half", b.ub_half);
    put("ub_nonscalar", b.ub_nonscalar);
    put("ub_gross", b.ub_gross);
    put("spectral_lo", b.spectral_lo);
    put("spectral_hi", b.spectral_hi);
    put("min_lo", b.min_lo);
    j["singular_nonzero"] = b.singular_nonzero;
    return j;
}

void print_bounds(std::ostream& out, const BoundSet& b, std::size_t dim, std::size_t n)
{
    for (const auto& [key, value] : bounds_json(b).items()) out << "bound " << key << ' ' << value.dump() << '\n';
    const auto bad = bound_violations(b, dim, n);
    out << "violations";
    if (bad.empty()) out << " none";
    for (const auto& v : bad) out << ' ' << v;
    out << '\n';
}

struct DimArgs {
    std::string file;
    Elem lambda = 0;
    bool oracle = false;
    bool bounds = false;
    bool spectral = false;
    bool json = false;
};

int cmd_dim(const DimArgs& o, std::istream& in, std::ostream& out)
{
    const Matrix a = load(o.file, in);
    check_lambda(a, o.lambda);
    const DimReport r = dim_fast(a, o.lambda, o.spectral);
    const std::size_t n = a.rows();
    std::optional<std::size_t> oracle;
    if (o.oracle) oracle = dim_oracle(a, o.lambda);
    const bool agree = !oracle || *oracle == r.dim;

    if (o.json) {
        Json j;
        j["command"] = "dim";
        j["q"] = a.field().q();
        j["n"] = n;
        j["lambda"] = o.lambda;
        j["dim"] = r.dim;
        j["method"] = to_string(r.method);
        if (oracle) {
            j["oracle"] = *oracle;
            j["agree"] = agree;
        }
        if (o.bounds || o.spectral) {
            j["bounds"] = bounds_json(r.bounds);
            j["violations"] = bound_violations(r.bounds, r.dim, n);
        }
        out << j.dump() << '\n';
    } else {
        out << "dim " << r.dim << '\n' << "method " << to_string(r.method) << '\n';
        if (oracle) out << "oracle " << *oracle << (agree ? " agree" : " DISAGREE") << '\n';
        if (o.bounds || o.spectral) print_bounds(out, r.bounds, r.dim, n);
    }
    return agree ? 0 : 2;
}

int cmd_basis(const std::string& file, Elem lambda, std::istream& in, std::ostream& out)
{
    const Matrix a = load(file, in);
    check_lambda(a, lambda);
    write_generator(out, code_build(a, lambda));
    return 0;
}

int cmd_bounds(const std::string& file, Elem lambda, bool spectral, bool json, std::istream& in, std::ostream& out)
{
    const Matrix a = load(file, in);
    check_lambda(a, lambda);
    const DimReport r = dim_fast(a, lambda, spectral);
    if (json) {
        Json j;
        j["command"] = "bounds";
        j["q"] = a.field().q();
        j["n"] = r.n;
        j["lambda"] = lambda;
        j["rank"] = r.rank;
        j["k0"] = r.k0;
        j["m0"] = r.m0;
        j["dim"] = r.dim;
        j["bounds"] = bounds_json(r.bounds);
        j["violations"] = bound_violations(r.bounds, r.dim, r.n);
        out << j.dump() << '\n';
    } else {
        out << "n " << r.n << "\nrank " << r.rank << "\nk0 " << r.k0 << "\nm0 " << r.m0 << "\ndim " << r.dim << '\n';
        print_bounds(out, r.bounds, r.dim, r.n);
    }
    return 0;
}

int cmd_spectrum(const std::string& file, std::optional<Elem> lambda, bool json, std::istream& in, std::ostream& out)
{
    const Matrix a = load(file, in);
    if (lambda) check_lambda(a, *lambda);
    const Spectrum s = spectrum(a);
    Json j;
    j["command"] = "spectrum";
    j["q"] = a.field().q();
    j["n"] = a.rows();
    j["field"] = s.field.ext().name();
    j["degree"] = s.field.degree();
    Json eig = Json::array();
    for (const auto& e : s.entries) eig.push_back({{"alpha", e.alpha}, {"m", e.m}, {"k", e.k}});
    j["eigenvalues"] = eig;
    j["diagonalizable"] = s.diagonalizable();
    if (lambda) {
        const SpectralBounds b = tm_bounds(s, *lambda);
        const TfaeResult t = tfae_check(a, *lambda);
        j["lambda"] = *lambda;
        j["spectral_lo"] = b.lo;
        j["spectral_hi"] = b.hi;
        j["dim"] = dim_value(a, *lambda);
        j["equivalence"] = {t.a, t.b, t.c};
        j["consistent"] = t.consistent();
    }
    if (json) {
        out << j.dump() << '\n';
        return 0;
    }
    out << "field " << j["field"].get<std::string>() << " degree " << s.field.degree() << '\n';
    for (const auto& e : s.entries) out << "eigenvalue " << e.alpha << " m " << e.m << " k " << e.k << '\n';
    out << "diagonalizable " << (s.diagonalizable() ? "yes" : "no") << '\n';
    if (lambda) {
        out << "spectral_lo " << j["spectral_lo"] << "\nspectral_hi " << j["spectral_hi"] << "\ndim " << j["dim"]
            << '\n';
        const auto& t = j["equivalence"];
        out << "equivalence " << t[0] << ' ' << t[1] << ' ' << t[2] << (j["consistent"].get<bool>() ? " consistent" : " inconsistent")
            << '\n';
    }
    return 0;
}

struct ProbArgs {
    std::uint64_t q = 0;
    std::size_t n = 0;
    Elem lambda = 0;
    std::string mode = "exhaustive";
    std::uint64_t trials = 10000;
    std::optional<std::uint64_t> seed;
};

Mode parse_mode(const std::string& m)
{
    return m == "exhaustive" ? Mode::Exhaustive : Mode::MonteCarlo;
}

int cmd_prob(const ProbArgs& o, std::ostream& out)
{
    const Field f = Field::of_order(o.q);
    if (!f.contains(o.lambda)) throw UsageError("lambda out of range");
    const Mode mode = parse_mode(o.mode);
    if (mode == Mode::MonteCarlo && !o.seed) throw UsageError("monte-carlo mode needs --seed");
    const ProbEstimate e = prob_estimate(f, o.n, o.lambda, mode, o.trials, o.seed.value_or(0));
    out << to_json_line(e) << '\n';
    return e.pass() ? 0 : 3;
}

struct RandomArgs {
    std::uint64_t q = 0;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    bool nilpotent = false;
    bool cyclic = false;
    bool invertible = false;
};

int cmd_random(const RandomArgs& o, std::ostream& out, std::ostream& err)
{
    const Field f = Field::of_order(o.q);
    if (o.n == 0) throw UsageError("n must be positive");
    Rng rng(o.seed);
    Matrix a = o.nilpotent    ? random_nilpotent(f, o.n, rng)
               : o.cyclic     ? random_cyclic(f, o.n, rng)
               : o.invertible ? random_invertible(f, o.n, rng)
                              : random_matrix(f, o.n, rng);
    const bool ok = (!o.nilpotent || power(a, o.n).is_zero()) && (!o.cyclic || is_cyclic(a)) &&
                    (!o.invertible || det(a) != 0);
    if (!ok) {
        err << "error: generated matrix lacks the requested property\n";
        return 1;
    }
    write_matrix(out, a);
    return 0;
}

struct CensusArgs {
    std::string kind;
    std::uint64_t q = 2;
    std::size_t n = 2;
    std::string mode = "exhaustive";
    std::uint64_t trials = 10000;
    std::optional<std::uint64_t> seed;
    bool json = false;
};

int cmd_census(const CensusArgs& o, std::ostream& out)
{
    std::vector<Json> rows;
    bool pass = true;
    if (o.kind == "gl") {
        const bool ok = gl_ratio_check(o.n, o.q);
        const BigInt order = gl_order(o.n, o.q);
        const BigInt total = boost::multiprecision::pow(BigInt(o.q), static_cast<unsigned>(o.n * o.n));
        rows.push_back({{"census", "gl"},
                        {"q", o.q},
                        {"n", o.n},
                        {"order", order.str()},
                        {"ratio", rational_str(Rational(order, total))},
                        {"pass", ok}});
        pass = ok;
    } else if (o.kind == "nilpotent") {
        const std::uint64_t count = nilpotent_census(Field::of_order(o.q), o.n);
        const BigInt want = boost::multiprecision::pow(BigInt(o.q), static_cast<unsigned>(o.n * o.n - o.n));
        pass = BigInt(count) == want;
        rows.push_back({{"census", "nilpotent"}, {"q", o.q}, {"n", o.n}, {"count", count}, {"predicted", want.str()},
                        {"pass", pass}});
    } else if (o.kind == "m0") {
        for (const auto& r : m0_census(Field::of_order(o.q), o.n)) {
            pass = pass && r.matches();
            rows.push_back({{"census", "m0"},
                            {"q", o.q},
                            {"n", o.n},
                            {"m0", r.m0},
                            {"count", r.count},
                            {"predicted", rational_str(r.predicted)},
                            {"pass", r.matches()}});
        }
    } else if (o.kind == "tail") {
        const Mode mode = parse_mode(o.mode);
        if (mode == Mode::MonteCarlo && !o.seed) throw UsageError("monte-carlo mode needs --seed");
        const TailProb t = tail_prob_check(Field::of_order(o.q), o.n, mode, o.trials, o.seed.value_or(0));
        pass = t.pass();
        Json j{{"census", "tail"}, {"q", o.q},       {"n", o.n},
               {"mode", to_string(t.mode)}, {"count", t.count}, {"total", t.total},
               {"prob", rational_str(t.prob)}, {"bound", rational_str(t.bound)}, {"pass", pass}};
        j["seed"] = t.seed ? Json(*t.seed) : Json(nullptr);
        rows.push_back(j);
    } else {
        const Rational p = fixed_point_proportion(o.n);
        Json j{{"census", "fixed-points"}, {"n", o.n}, {"proportion", rational_str(p)}};
        if (o.n <= 8) {
            const bool same = fixed_point_proportion_enumerated(o.n) == p;
            j["enumerated_agrees"] = same;
            pass = same;
        }
        j["pass"] = pass;
        rows.push_back(j);
    }
    for (const auto& j : rows) {
        if (o.json) {
            out << j.dump() << '\n';
            continue;
        }
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            out << (first ? "" : " ") << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump());
            first = false;
        }
        out << '\n';
    }
    return pass ? 0 : 3;
}

int cmd_selftest(const std::string& level, const std::string& mutate, std::optional<std::uint64_t> seed,
                 std::ostream& out)
{
    SuiteOptions opts;
    opts.level = level == "quick" ? SuiteLevel::Quick : SuiteLevel::Full;
    if (mutate == "twist") opts.twist = mutated_twist;
    if (seed) opts.seed = *seed;
    int failed = 0;
    for (int id : criteria_for(opts.level)) {
        const CriterionResult r = run_criterion(id, opts);
        out << format_result(r) << '\n' << std::flush;
        failed += !r.pass;
    }
    out << (failed ? "FAILED" : "ALL PASSED") << " (" << failed << " failing)\n";
    return failed ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Twisted centralizer codes over finite fields"};
    app.name("tcc");
    app.require_subcommand(1);
    const std::vector<std::string> modes = {"exhaustive", "monte-carlo"};

    DimArgs dim;
    auto* dim_cmd = app.add_subcommand("dim", "Dimension of C(A, lambda) and how it was found");
    dim_cmd->add_option("file", dim.file, "matrix file, or - for standard input")->required();
    dim_cmd->add_option("lambda", dim.lambda, "lambda as an element encoding")->required();
    dim_cmd->add_flag("--oracle", dim.oracle, "cross-check against the parity-check rank");
    dim_cmd->add_flag("--bounds", dim.bounds, "report the applicable bounds");
    dim_cmd->add_flag("--spectral", dim.spectral, "include the spectral bounds");
    dim_cmd->add_flag("--json", dim.json, "one JSON object");

    std::string file;
    Elem lambda = 0;
    std::optional<Elem> maybe_lambda;
    bool spectral = false, json = false;
    auto* basis_cmd = app.add_subcommand("basis", "Generator matrix of C(A, lambda)");
    basis_cmd->add_option("file", file)->required();
    basis_cmd->add_option("lambda", lambda)->required();

    auto* bounds_cmd = app.add_subcommand("bounds", "Invariants and bounds for C(A, lambda)");
    bounds_cmd->add_option("file", file)->required();
    bounds_cmd->add_option("lambda", lambda)->required();
    bounds_cmd->add_flag("--spectral", spectral);
    bounds_cmd->add_flag("--json", json);

    auto* spectrum_cmd = app.add_subcommand("spectrum", "Eigenvalues in a splitting field");
    spectrum_cmd->add_option("file", file)->required();
    spectrum_cmd->add_option("lambda", maybe_lambda, "also report spectral bounds for lambda");
    spectrum_cmd->add_flag("--json", json);

    ProbArgs prob;
    auto* prob_cmd = app.add_subcommand("prob", "Proportion of matrices with a nonzero code");
    prob_cmd->add_option("--q", prob.q)->required();
    prob_cmd->add_option("--n", prob.n)->required();
    prob_cmd->add_option("--lambda", prob.lambda)->required();
    prob_cmd->add_option("--mode", prob.mode)->check(CLI::IsMember(modes));
    prob_cmd->add_option("--trials", prob.trials);
    prob_cmd->add_option("--seed", prob.seed);

    RandomArgs rnd;
    auto* random_cmd = app.add_subcommand("random", "Seeded random matrix file");
    random_cmd->add_option("--q", rnd.q)->required();
    random_cmd->add_option("--n", rnd.n)->required();
    random_cmd->add_option("--seed", rnd.seed)->required();
    auto* nil = random_cmd->add_flag("--nilpotent", rnd.nilpotent);
    auto* cyc = random_cmd->add_flag("--cyclic", rnd.cyclic);
    auto* inv = random_cmd->add_flag("--invertible", rnd.invertible);
    nil->excludes(cyc)->excludes(inv);
    cyc->excludes(inv);

    CensusArgs census;
    auto* census_cmd = app.add_subcommand("census", "Exact counting identities");
    census_cmd->add_option("--kind", census.kind)
        ->required()
        ->check(CLI::IsMember({"gl", "nilpotent", "m0", "tail", "fixed-points"}));
    census_cmd->add_option("--q", census.q);
    census_cmd->add_option("--n", census.n);
    census_cmd->add_option("--mode", census.mode)->check(CLI::IsMember(modes));
    census_cmd->add_option("--trials", census.trials);
    census_cmd->add_option("--seed", census.seed);
    census_cmd->add_flag("--json", census.json);

    std::string level = "quick", mutate;
    std::optional<std::uint64_t> seed;
    auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance suites");
    selftest_cmd->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));
    selftest_cmd->add_option("--mutate", mutate, "break a component on purpose")->check(CLI::IsMember({"twist"}));
    selftest_cmd->add_option("--seed", seed);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (dim_cmd->parsed()) return cmd_dim(dim, in, out);
        if (basis_cmd->parsed()) return cmd_basis(file, lambda, in, out);
        if (bounds_cmd->parsed()) return cmd_bounds(file, lambda, spectral, json, in, out);
        if (spectrum_cmd->parsed()) return cmd_spectrum(file, maybe_lambda, json, in, out);
        if (prob_cmd->parsed()) return cmd_prob(prob, out);
        if (random_cmd->parsed()) return cmd_random(rnd, out, err);
        if (census_cmd->parsed()) return cmd_census(census, out);
        if (selftest_cmd->parsed()) return cmd_selftest(level, mutate, seed, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace tcc
