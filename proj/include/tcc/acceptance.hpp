#pragma once

// End-to-end acceptance suites, shared by the `acceptance` test binary and
// `tcc selftest`.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tcc/poly.hpp"

namespace tcc {

using TwistFn = std::function<Poly(const Poly&, Elem)>;

/// A deliberately broken twist that ignores lambda. Used to confirm the
/// suites notice a wrong twisted characteristic polynomial.
Poly mutated_twist(const Poly& f, Elem lambda);

enum class SuiteLevel { Quick, Full };

struct SuiteOptions {
    SuiteLevel level = SuiteLevel::Full;
    TwistFn twist = [](const Poly& f, Elem lambda) { return tcc::twist(f, lambda); };
    std::uint64_t seed = 20240521;
};

struct CriterionResult {
    int id;
    std::string title;
    bool pass;
    std::string detail;
    double seconds;
};

/// Criterion ids run at a level. Quick covers the exhaustive and counting
/// suites; full adds the randomized grids and the spectral checks.
std::vector<int> criteria_for(SuiteLevel level);

/// Runs criterion `id` (1..10). Throws std::out_of_range for other ids.
CriterionResult run_criterion(int id, const SuiteOptions& opts);

/// "PASS  3  sharpness witnesses: ..." on one line.
std::string format_result(const CriterionResult& r);

}  // namespace tcc
