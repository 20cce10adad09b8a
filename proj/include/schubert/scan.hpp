#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schubert/polynomial.hpp"

namespace schubert {

using Json = nlohmann::ordered_json;
using Params = std::vector<std::pair<std::string, long>>;

enum class Verdict { Positive, NonpositiveCoefficientFound, UnstableInterpolation, Holds, Violated };

std::string_view to_string(Verdict verdict);

struct CoefficientWitness {
  long index;
  Rational value;
};

struct GridPoint {
  std::string label;
  Params params;
  Verdict verdict = Verdict::Holds;
  /// Negative coefficients (positivity scans) or the failing coefficient (bounds).
  std::vector<CoefficientWitness> witnesses;
  /// Indices of zero coefficients below the degree, listed apart from the verdict.
  std::vector<long> zero_coefficients;
  std::string detail;
};

struct Counterexample {
  std::string label;
  Params params;
  std::string reason;
  std::optional<CoefficientWitness> witness;
};

struct ScanReport {
  std::string scan;
  Params ranges;
  std::vector<GridPoint> points;
  std::vector<Counterexample> counterexamples;
  double elapsed_ms = 0;

  long unstable_count() const;
  /// No counterexample and no unstable interpolation.
  bool passed() const;
  Json to_json(bool include_timing = false) const;
};

/// Sign profile of a polynomial: negative coefficients and interior zeros.
struct CoefficientProfile {
  std::vector<CoefficientWitness> negative;
  std::vector<long> zeros;
  bool nonnegative() const { return negative.empty(); }
};
CoefficientProfile coefficient_profile(const RationalPolynomial& p);

/// Each (a, b, c) with 1 <= a <= max_a, 1 <= b <= max_b, |c| <= max_c. The
/// prediction is "no negative coefficient iff |c| <= 1"; any disagreement
/// and any unstable interpolant is a counterexample.
ScanReport scan_f_positivity(long max_a, long max_b, long max_c, unsigned jobs = 1);

/// For n <= max_n, a <= max_a, b <= max_b: F(na,nb,0,t) - F(a,b,0,t)^n
/// (n >= 2) and the barred Catalan polynomial (n >= 1), each expected to
/// have no negative coefficient.
ScanReport scan_catalan_conjectures(long max_n, long max_a, long max_b, unsigned jobs = 1);

/// For 4 <= n <= max_n and 2 <= k <= n-2: coefficientwise T <= Sp <= U and
/// Sp without negative or zero coefficients.
ScanReport check_sparse_paving_bounds(long max_n, unsigned jobs = 1);

/// Grids of the identity regression suite.
struct IdentityBudget {
  long f_params = 5;  // a, b, |c| for the F reflection, shift and partial-sum identities
  long f_t = 8;
  long four_block_params = 3;  // a, b, c, d for four-block formulas
  long four_block_t = 6;
  long family_params = 3;  // a, b in the two-pair families
  long family_t = 12;
  long example_t = 8;  // r = (1,1,3,7)
  long minimal_n = 10;
  long minimal_t = 8;
  long sparse_n = 10;
  long sparse_t = 6;
  long stirling_n = 12;
  long lah_n = 10;
  long uniform_coefficient_n = 8;
  long uniform_bound_n = 10;
  long duality_n = 7;
  long duality_t = 3;
  long rank_formula_params = 3;
  long rank_formula_t = 5;
};

ScanReport run_identity_suite(const IdentityBudget& budget = {}, unsigned jobs = 1);
/// Block and F parameter bounds set to param_budget, every t bound to
/// t_budget; the n ranges keep their defaults.
ScanReport run_identity_suite(long param_budget, long t_budget, unsigned jobs = 1);

Json rational_json(const Rational& value);
Json polynomial_json(const RationalPolynomial& p);

}  // namespace schubert
