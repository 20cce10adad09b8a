#include "schubert/scan.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "parallel.hpp"
#include "schubert/combinatorics.hpp"
#include "schubert/ehrhart.hpp"
#include "schubert/errors.hpp"
#include "schubert/matroid.hpp"

namespace schubert {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_bound(long value, long minimum, const char* what) {
  if (value < minimum)
    throw InvalidArgument(std::string(what) + " must be at least " + std::to_string(minimum));
}

std::string format_params(const Params& params) {
  std::ostringstream out;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out << ' ';
    out << params[i].first << '=' << params[i].second;
  }
  return out.str();
}

Json params_json(const Params& params) {
  Json out = Json::object();
  for (const auto& [name, value] : params) out[name] = value;
  return out;
}

Json witness_json(const CoefficientWitness& w) {
  return Json{{"index", w.index}, {"value", rational_json(w.value)}};
}

std::string to_text(const BigInt& v) { return v.get_str(); }
std::string to_text(const Rational& v) { return v.get_str(); }
std::string to_text(const RationalPolynomial& p) { return p.to_string(); }

// Instance counter for one identity; remembers the first failing instance.
class Tally {
 public:
  explicit Tally(std::string label = {}) : label_(std::move(label)) {}

  void expect_equal(const BigInt& lhs, const BigInt& rhs, Params params) { compare(lhs, rhs, std::move(params)); }
  void expect_equal(const Rational& lhs, const Rational& rhs, Params params) { compare(lhs, rhs, std::move(params)); }
  void expect_equal(const RationalPolynomial& lhs, const RationalPolynomial& rhs, Params params) {
    compare(lhs, rhs, std::move(params));
  }

  void expect(bool condition, Params params, const std::string& what) {
    ++instances_;
    if (!condition) fail(std::move(params), what);
  }

  void fail(Params params, std::string reason) {
    if (!failure_) failure_ = Counterexample{label_, std::move(params), std::move(reason), std::nullopt};
  }

  GridPoint point() const {
    GridPoint p;
    p.label = label_;
    p.params = {{"instances", instances_}};
    p.verdict = failure_ ? Verdict::Violated : Verdict::Holds;
    if (failure_) p.detail = format_params(failure_->params) + ": " + failure_->reason;
    return p;
  }
  const std::optional<Counterexample>& failure() const { return failure_; }

 private:
  template <typename T>
  void compare(const T& lhs, const T& rhs, Params params) {
    ++instances_;
    if (lhs == rhs) return;
    fail(std::move(params), "lhs " + to_text(lhs) + " != rhs " + to_text(rhs));
  }

  std::string label_;
  long instances_ = 0;
  std::optional<Counterexample> failure_;
};

BigInt dilation(std::vector<long> blocks, long t) { return count_dilation(RSequence(std::move(blocks)), t).count; }

std::vector<std::vector<int>> sets_with_maximum(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1U << (n - 1)); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n - 1; ++i) {
      if (mask >> i & 1U) s.push_back(i + 1);
    }
    s.push_back(n);
    out.push_back(std::move(s));
  }
  return out;
}

long mask_for(const std::vector<int>& elements) {
  long mask = 0;
  for (int e : elements) mask |= 1L << (e - 1);
  return mask;
}

using IdentityCheck = std::function<void(Tally&, const IdentityBudget&)>;

void f_reflection(Tally& tally, const IdentityBudget& g) {
  for (long a = 1; a <= g.f_params; ++a)
    for (long b = 1; b <= g.f_params; ++b)
      for (long c = -g.f_params; c <= g.f_params; ++c)
        for (long t = 0; t <= g.f_t; ++t)
          tally.expect_equal(f_closed(a, b, c, t), f_closed(b, a, -c, t), {{"a", a}, {"b", b}, {"c", c}, {"t", t}});
}

void f_shift(Tally& tally, const IdentityBudget& g) {
  for (long a = 1; a <= g.f_params; ++a)
    for (long b = 1; b <= g.f_params; ++b)
      for (long c = -g.f_params; c <= g.f_params; ++c)
        for (long t = 0; t <= g.f_t; ++t)
          tally.expect_equal(f_closed(a, b, c, t), f_closed(a + 1, b - 1, c + t, t),
                             {{"a", a}, {"b", b}, {"c", c}, {"t", t}});
}

void f_partial_sum(Tally& tally, const IdentityBudget& g) {
  for (long a = 0; a <= g.f_params; ++a)
    for (long b = 1; b <= g.f_params; ++b)
      for (long t = 0; t <= g.f_t; ++t) {
        BigInt sum = 0;
        for (long i = 0; i <= t; ++i) sum += f_closed(a, b, -i, t);
        tally.expect_equal(f_closed(a + 1, b, 0, t), sum, {{"a", a}, {"b", b}, {"t", t}});
      }
}

void four_block_formula(Tally& tally, const IdentityBudget& g) {
  const long p = g.four_block_params;
  for (long a = 1; a <= p; ++a)
    for (long b = 1; b <= p; ++b)
      for (long c = 1; c <= p; ++c)
        for (long d = 1; d <= p; ++d)
          for (long t = 0; t <= g.four_block_t; ++t) {
            const Params at{{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"t", t}};
            const BigInt paths = dilation({a, b, c, d}, t);
            tally.expect_equal(paths, four_block_count(a, b, c, d, t), at);
            tally.expect_equal(paths, dilation({d, c, b, a}, t), at);
          }
}

void four_block_pair_sum(Tally& tally, const IdentityBudget& g) {
  const long p = g.four_block_params;
  for (long a = 1; a <= p; ++a)
    for (long b = 1; b <= p; ++b)
      for (long c = 1; c <= p; ++c)
        for (long d = 1; d <= p; ++d)
          for (long t = 0; t <= g.four_block_t; ++t) {
            const BigInt lhs = dilation({a, b, c, d}, t) + dilation({b, a, d, c}, t);
            const BigInt rhs = f_closed(a + c, b + d, 0, t) + f_closed(a, b, 0, t) * f_closed(c, d, 0, t);
            tally.expect_equal(lhs, rhs, {{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"t", t}});
          }
}

void one_one_pair_sum(Tally& tally, const IdentityBudget& g) {
  const long p = g.four_block_params;
  for (long a = 1; a <= p; ++a)
    for (long b = 2; b <= p + 1; ++b)
      for (long t = 0; t <= g.four_block_t; ++t) {
        const BigInt lhs = dilation({1, 1, a, b}, t) + dilation({1, 1, b - 1, a + 1}, t);
        tally.expect_equal(lhs, BigInt(t + 2) * f_closed(a + 1, b, 0, t), {{"a", a}, {"b", b}, {"t", t}});
      }
}

// Ehrhart polynomial of r against a closed combination, both as polynomials
// and pointwise for t = 0..max_t.
void expect_polynomial_identity(Tally& tally, const std::vector<long>& blocks, const RationalPolynomial& rhs,
                                Params params, long max_t) {
  const RSequence r(blocks);
  tally.expect_equal(ehrhart_polynomial(r), rhs, params);
  for (long t = 0; t <= max_t; ++t) {
    Params at = params;
    at.emplace_back("t", t);
    tally.expect_equal(Rational(count_dilation(r, t).count), rhs(t), std::move(at));
  }
}

void family_abab(Tally& tally, const IdentityBudget& g) {
  const Rational half(1, 2);
  for (long a = 1; a <= g.family_params; ++a)
    for (long b = 1; b <= g.family_params; ++b) {
      const RationalPolynomial f = f_zero_polynomial(a, b);
      const RationalPolynomial rhs = half * f_zero_polynomial(2 * a, 2 * b) + half * f * f;
      expect_polynomial_identity(tally, {a, b, a, b}, rhs, {{"a", a}, {"b", b}}, g.family_t);
    }
}

void family_aabb(Tally& tally, const IdentityBudget& g) {
  const Rational half(1, 2);
  for (long a = 1; a <= g.family_params; ++a)
    for (long b = 1; b <= g.family_params; ++b) {
      const RationalPolynomial rhs =
          half * f_zero_polynomial(a + b, a + b) + half * f_zero_polynomial(a, a) * f_zero_polynomial(b, b);
      expect_polynomial_identity(tally, {a, a, b, b}, rhs, {{"a", a}, {"b", b}}, g.family_t);
    }
}

void family_one_one_a_a1(Tally& tally, const IdentityBudget& g) {
  const RationalPolynomial t_plus_2 = RationalPolynomial::variable() + RationalPolynomial::constant(2);
  for (long a = 1; a <= g.family_params; ++a) {
    const RationalPolynomial rhs = Rational(1, 2) * t_plus_2 * f_zero_polynomial(a + 1, a + 1);
    expect_polynomial_identity(tally, {1, 1, a, a + 1}, rhs, {{"a", a}}, g.family_t);
  }
}

void example_one_one_three_seven(Tally& tally, const IdentityBudget& g) {
  for (long t = 0; t <= g.example_t; ++t) {
    auto f = [t](long a, long b) { return Rational(f_closed(a, b, 0, t)); };
    const Rational rhs = Rational(t + 2) * (f(4, 7) + f(5, 6)) - f(7, 5) - Rational(t + 1) * f(4, 6) -
                         Rational(1, 2) * (f(6, 6) + Rational(t + 1) * f(5, 5));
    tally.expect_equal(Rational(dilation({1, 1, 3, 7}, t)), rhs, {{"t", t}});
  }
}

void minimal_closed_form(Tally& tally, const IdentityBudget& g) {
  for (long n = 3; n <= g.minimal_n; ++n)
    for (long k = 2; k < n; ++k)
      for (long t = 0; t <= g.minimal_t; ++t) {
        const Params at{{"k", k}, {"n", n}, {"t", t}};
        const BigInt sum = minimal_count_sum(k, n, t);
        tally.expect_equal(sum, minimal_count_closed(k, n, t), at);
        tally.expect_equal(sum, count_dilation(minimal_rsequence(k, n), t).count, at);
      }
}

void sparse_paving_difference(Tally& tally, const IdentityBudget& g) {
  for (long n = 4; n <= g.sparse_n; ++n)
    for (long k = 2; k <= n - 2; ++k)
      for (long t = 0; t <= g.sparse_t; ++t) {
        const Params at{{"k", k}, {"n", n}, {"t", t}};
        const BigInt sp = count_dilation(sparse_paving_rsequence(k, n), t).count;
        tally.expect_equal(sp, count_dilation(sparse_paving_rsequence(n - k, n), t).count, at);
        tally.expect_equal(sp, uniform_count(k, n, t) - minimal_count_sum(k, n, t - 1), at);
      }
}

void stirling_sum(Tally& tally, const IdentityBudget& g) {
  const StirlingTable table(g.stirling_n + 1);
  for (long n = 1; n <= g.stirling_n; ++n)
    for (long m = 1; m <= n; ++m) {
      BigInt sum = 0;
      for (long j = 0; j <= n; ++j) sum += table.at(j, m) * factorial(n) / factorial(j);
      tally.expect_equal(table.at(n + 1, m + 1), sum, {{"n", n}, {"m", m}});
    }
}

void weighted_lah_one(Tally& tally, const IdentityBudget& g) {
  for (long n = 1; n <= g.lah_n; ++n)
    for (long m = 0; m + 1 <= n; ++m) {
      const BigInt rhs = BigInt(m + 1) * stirling_first_unsigned(n, m + 1) - BigInt(n) * stirling_first_unsigned(n - 1, m);
      tally.expect_equal(weighted_lah(1, n, m + 1), rhs, {{"n", n}, {"m", m}});
    }
}

void weighted_lah_structure(Tally& tally, const IdentityBudget& g) {
  for (long n = 1; n <= g.lah_n; ++n)
    for (long m = 1; m <= n; ++m) {
      tally.expect_equal(weighted_lah(0, n, m), stirling_first_unsigned(n, m), {{"l", 0}, {"n", n}, {"m", m}});
      for (long l = 0; l <= n - m; ++l) {
        const Params at{{"l", l}, {"n", n}, {"m", m}};
        const BigInt w = weighted_lah(l, n, m);
        tally.expect_equal(w, weighted_lah(n - m - l, n, m), at);
        tally.expect(w >= 0, at, "negative weighted Lah number " + w.get_str());
      }
    }
}

void uniform_coefficients(Tally& tally, const IdentityBudget& g) {
  for (long n = 2; n <= g.uniform_coefficient_n; ++n)
    for (long k = 1; k < n; ++k) {
      const RationalPolynomial p = uniform_polynomial(k, n);
      tally.expect_equal(ehrhart_polynomial(uniform_rsequence(k, n)), p, {{"k", k}, {"n", n}});
      for (long m = 0; m <= n - 1; ++m)
        tally.expect_equal(uniform_coefficient(k, n, m), p.coefficient(static_cast<std::size_t>(m)),
                           {{"k", k}, {"n", n}, {"m", m}});
    }
}

void uniform_minimal_positive(Tally& tally, const IdentityBudget& g) {
  auto all_positive = [](const RationalPolynomial& p) {
    for (const Rational& c : p.coefficients()) {
      if (c <= 0) return false;
    }
    return true;
  };
  for (long n = 2; n <= g.uniform_bound_n; ++n)
    for (long k = 1; k < n; ++k) {
      const Params at{{"k", k}, {"n", n}};
      const RationalPolynomial u = uniform_polynomial(k, n);
      tally.expect(all_positive(u), at, "uniform polynomial " + u.to_string());
      if (k >= 2) {
        const RationalPolynomial m = minimal_polynomial(k, n);
        tally.expect(all_positive(m), at, "minimal polynomial " + m.to_string());
      }
    }
}

void uniform_rank2_bound(Tally& tally, const IdentityBudget& g) {
  for (long n = 6; n <= g.uniform_bound_n; ++n) {
    const RationalPolynomial u2 = uniform_polynomial(2, n);
    for (long k = 3; 2 * k <= n; ++k)
      tally.expect(coefficientwise_leq(u2, uniform_polynomial(k, n)), {{"k", k}, {"n", n}},
                   "rank-2 uniform polynomial not coefficientwise below");
  }
}

void duality_count(Tally& tally, const IdentityBudget& g) {
  for (int n = 1; n <= g.duality_n; ++n)
    for (const auto& elements : sets_with_maximum(n)) {
      const RSequence r = set_to_rsequence(SchubertSet(elements));
      if (r.pairs() == 1 && r.zero_run(1) == 0) continue;  // free matroid, dual has rank 0
      const RSequence dual = dual_rsequence(r);
      for (long t = 0; t <= g.duality_t; ++t)
        tally.expect_equal(count_dilation(r, t).count, count_dilation(dual, t).count,
                           {{"set_mask", mask_for(elements)}, {"t", t}});
    }
}

void unit_dilation(Tally& tally, const IdentityBudget& g) {
  for (int n = 1; n <= g.duality_n; ++n)
    for (const auto& elements : sets_with_maximum(n)) {
      const SchubertSet set(elements);
      const RSequence r = set_to_rsequence(set);
      const Params at{{"set_mask", mask_for(elements)}};
      tally.expect_equal(count_dilation(r, 0).count, BigInt(1), at);
      tally.expect_equal(count_dilation(r, 1).count, BigInt(static_cast<unsigned long>(enumerate_bases(set).size())), at);
    }
}

void rank_two_formula(Tally& tally, const IdentityBudget& g) {
  for (long a = 1; a <= g.rank_formula_params; ++a)
    for (long b = 1; b <= g.rank_formula_params; ++b)
      for (long t = 0; t <= g.rank_formula_t; ++t)
        tally.expect_equal(rank2_count(a, b, t), dilation({a, 1, b, 1}, t), {{"a", a}, {"b", b}, {"t", t}});
}

void rank_three_formula(Tally& tally, const IdentityBudget& g) {
  const long p = g.rank_formula_params;
  for (long a = 1; a <= p; ++a)
    for (long b = 1; b <= p; ++b)
      for (long c = 1; c <= p; ++c)
        for (long t = 0; t <= g.rank_formula_t; ++t)
          tally.expect_equal(rank3_count(a, b, c, t), dilation({a, 1, b, 1, c, 1}, t),
                             {{"a", a}, {"b", b}, {"c", c}, {"t", t}});
}

}  // namespace

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Positive: return "positive";
    case Verdict::NonpositiveCoefficientFound: return "nonpositive-coefficient-found";
    case Verdict::UnstableInterpolation: return "unstable-interpolation";
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
  }
  return "unknown";
}

Json rational_json(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return Json{{"num", v.get_num().get_str()}, {"den", v.get_den().get_str()}};
}

Json polynomial_json(const RationalPolynomial& p) {
  Json out = Json::array();
  for (const Rational& c : p.coefficients()) out.push_back(rational_json(c));
  return out;
}

CoefficientProfile coefficient_profile(const RationalPolynomial& p) {
  CoefficientProfile profile;
  const auto& coefficients = p.coefficients();
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i] < 0) profile.negative.push_back({static_cast<long>(i), coefficients[i]});
    if (coefficients[i] == 0) profile.zeros.push_back(static_cast<long>(i));
  }
  return profile;
}

long ScanReport::unstable_count() const {
  long count = 0;
  for (const auto& p : points) count += p.verdict == Verdict::UnstableInterpolation;
  return count;
}

bool ScanReport::passed() const { return counterexamples.empty() && unstable_count() == 0; }

Json ScanReport::to_json(bool include_timing) const {
  Json out;
  out["scan"] = scan;
  out["ranges"] = params_json(ranges);
  out["passed"] = passed();
  out["summary"] = {{"points", static_cast<long>(points.size())},
                    {"counterexamples", static_cast<long>(counterexamples.size())},
                    {"unstable", unstable_count()}};
  Json list = Json::array();
  for (const auto& p : points) {
    Json entry;
    entry["label"] = p.label;
    entry["params"] = params_json(p.params);
    entry["verdict"] = to_string(p.verdict);
    Json witnesses = Json::array();
    for (const auto& w : p.witnesses) witnesses.push_back(witness_json(w));
    entry["witnesses"] = std::move(witnesses);
    entry["zero_coefficients"] = p.zero_coefficients;
    if (!p.detail.empty()) entry["detail"] = p.detail;
    list.push_back(std::move(entry));
  }
  out["points"] = std::move(list);
  Json failures = Json::array();
  for (const auto& c : counterexamples) {
    Json entry;
    entry["label"] = c.label;
    entry["params"] = params_json(c.params);
    entry["reason"] = c.reason;
    if (c.witness) entry["witness"] = witness_json(*c.witness);
    failures.push_back(std::move(entry));
  }
  out["counterexamples"] = std::move(failures);
  if (include_timing) out["elapsed_ms"] = elapsed_ms;
  return out;
}

ScanReport scan_f_positivity(long max_a, long max_b, long max_c, unsigned jobs) {
  require_bound(max_a, 1, "max_a");
  require_bound(max_b, 1, "max_b");
  require_bound(max_c, 1, "max_c");
  const auto start = Clock::now();
  ScanReport report;
  report.scan = "f-positivity";
  report.ranges = {{"max_a", max_a}, {"max_b", max_b}, {"max_c", max_c}};

  struct Cell {
    GridPoint point;
    std::optional<Counterexample> counterexample;
  };
  const long width_c = 2 * max_c + 1;
  const auto cells = detail::parallel_map(
      static_cast<std::size_t>(max_a * max_b * width_c), jobs, [&](std::size_t index) {
        const long i = static_cast<long>(index);
        const long a = 1 + i / (max_b * width_c);
        const long b = 1 + (i / width_c) % max_b;
        const long c = -max_c + i % width_c;
        Cell cell;
        GridPoint& p = cell.point;
        p.label = "f";
        p.params = {{"a", a}, {"b", b}, {"c", c}};
        const StableInterpolant s = f_stable_interpolant(a, b, c);
        p.detail = s.polynomial.to_string();
        if (!s.stable) {
          p.verdict = Verdict::UnstableInterpolation;
          cell.counterexample = Counterexample{p.label, p.params, "interpolant does not reproduce re-check samples",
                                               std::nullopt};
          return cell;
        }
        const CoefficientProfile profile = coefficient_profile(s.polynomial);
        p.witnesses = profile.negative;
        p.zero_coefficients = profile.zeros;
        p.verdict = profile.nonnegative() ? Verdict::Positive : Verdict::NonpositiveCoefficientFound;
        const bool predicted = std::labs(c) <= 1;
        if (profile.nonnegative() != predicted) {
          Counterexample ce{p.label, p.params,
                            predicted ? "negative coefficient where none is predicted"
                                      : "no negative coefficient although |c| >= 2",
                            std::nullopt};
          if (!profile.negative.empty()) ce.witness = profile.negative.front();
          cell.counterexample = std::move(ce);
        }
        return cell;
      });
  for (const auto& cell : cells) {
    report.points.push_back(cell.point);
    if (cell.counterexample) report.counterexamples.push_back(*cell.counterexample);
  }
  report.elapsed_ms = elapsed_since(start);
  return report;
}

ScanReport scan_catalan_conjectures(long max_n, long max_a, long max_b, unsigned jobs) {
  require_bound(max_n, 1, "max_n");
  require_bound(max_a, 1, "max_a");
  require_bound(max_b, 1, "max_b");
  const auto start = Clock::now();
  ScanReport report;
  report.scan = "catalan";
  report.ranges = {{"max_n", max_n}, {"max_a", max_a}, {"max_b", max_b}};

  auto judge = [](GridPoint& p, const RationalPolynomial& poly, std::vector<Counterexample>& out) {
    const CoefficientProfile profile = coefficient_profile(poly);
    p.witnesses = profile.negative;
    p.zero_coefficients = profile.zeros;
    p.detail = poly.to_string();
    p.verdict = profile.nonnegative() ? Verdict::Positive : Verdict::NonpositiveCoefficientFound;
    if (!profile.nonnegative())
      out.push_back({p.label, p.params, "negative coefficient", profile.negative.front()});
  };

  struct Block {
    std::vector<GridPoint> points;
    std::vector<Counterexample> counterexamples;
  };
  const auto blocks = detail::parallel_map(static_cast<std::size_t>(max_a * max_b), jobs, [&](std::size_t index) {
    const long a = 1 + static_cast<long>(index) / max_b;
    const long b = 1 + static_cast<long>(index) % max_b;
    CatalanRecursion recursion(a, b);
    Block block;
    for (long n = 1; n <= max_n; ++n) {
      const Params at{{"n", n}, {"a", a}, {"b", b}};
      if (n >= 2) {
        GridPoint gap;
        gap.label = "uniform-power-gap";
        gap.params = at;
        judge(gap, recursion.scaled_uniform(n) - recursion.base().pow(static_cast<unsigned>(n)),
              block.counterexamples);
        block.points.push_back(std::move(gap));
      }
      GridPoint bar;
      bar.label = "catalan-bar";
      bar.params = at;
      judge(bar, recursion.bar_polynomial(n), block.counterexamples);
      block.points.push_back(std::move(bar));
    }
    return block;
  });
  for (const auto& block : blocks) {
    report.points.insert(report.points.end(), block.points.begin(), block.points.end());
    report.counterexamples.insert(report.counterexamples.end(), block.counterexamples.begin(),
                                  block.counterexamples.end());
  }
  report.elapsed_ms = elapsed_since(start);
  return report;
}

ScanReport check_sparse_paving_bounds(long max_n, unsigned jobs) {
  require_bound(max_n, 4, "max_n");
  const auto start = Clock::now();
  ScanReport report;
  report.scan = "bounds";
  report.ranges = {{"max_n", max_n}};

  std::vector<std::pair<long, long>> grid;
  for (long n = 4; n <= max_n; ++n)
    for (long k = 2; k <= n - 2; ++k) grid.emplace_back(k, n);

  struct Cell {
    GridPoint point;
    std::optional<Counterexample> counterexample;
  };
  const auto cells = detail::parallel_map(grid.size(), jobs, [&](std::size_t index) {
    const auto [k, n] = grid[index];
    const RationalPolynomial lower = minimal_polynomial(k, n);
    const RationalPolynomial middle = ehrhart_polynomial(sparse_paving_rsequence(k, n));
    const RationalPolynomial upper = uniform_polynomial(k, n);
    Cell cell;
    GridPoint& p = cell.point;
    p.label = "sparse-paving";
    p.params = {{"k", k}, {"n", n}};
    p.detail = middle.to_string();
    const int degree = std::max({lower.degree(), middle.degree(), upper.degree()});
    std::string reason;
    for (int i = 0; i <= degree && reason.empty(); ++i) {
      const auto power = static_cast<std::size_t>(i);
      const Rational sp = middle.coefficient(power);
      if (lower.coefficient(power) > sp) {
        reason = "minimal coefficient exceeds sparse paving";
        p.witnesses.push_back({i, sp - lower.coefficient(power)});
      } else if (sp > upper.coefficient(power)) {
        reason = "sparse paving coefficient exceeds uniform";
        p.witnesses.push_back({i, upper.coefficient(power) - sp});
      } else if (i <= middle.degree() && sp <= 0) {
        reason = "sparse paving coefficient not positive";
        p.witnesses.push_back({i, sp});
      }
    }
    p.verdict = reason.empty() ? Verdict::Holds : Verdict::Violated;
    if (!reason.empty()) cell.counterexample = Counterexample{p.label, p.params, reason, p.witnesses.front()};
    return cell;
  });
  for (const auto& cell : cells) {
    report.points.push_back(cell.point);
    if (cell.counterexample) report.counterexamples.push_back(*cell.counterexample);
  }
  report.elapsed_ms = elapsed_since(start);
  return report;
}

ScanReport run_identity_suite(const IdentityBudget& budget, unsigned jobs) {
  const auto start = Clock::now();
  const std::vector<std::pair<std::string, IdentityCheck>> checks = {
      {"f-reflection", f_reflection},
      {"f-shift", f_shift},
      {"f-partial-sum", f_partial_sum},
      {"four-block-formula", four_block_formula},
      {"four-block-pair-sum", four_block_pair_sum},
      {"one-one-pair-sum", one_one_pair_sum},
      {"family-abab", family_abab},
      {"family-aabb", family_aabb},
      {"family-1-1-a-a+1", family_one_one_a_a1},
      {"example-1-1-3-7", example_one_one_three_seven},
      {"minimal-closed-form", minimal_closed_form},
      {"sparse-paving-difference", sparse_paving_difference},
      {"stirling-sum", stirling_sum},
      {"weighted-lah-one", weighted_lah_one},
      {"weighted-lah-structure", weighted_lah_structure},
      {"uniform-coefficients", uniform_coefficients},
      {"uniform-minimal-positive", uniform_minimal_positive},
      {"uniform-rank2-bound", uniform_rank2_bound},
      {"duality-count", duality_count},
      {"unit-dilation", unit_dilation},
      {"rank-two-formula", rank_two_formula},
      {"rank-three-formula", rank_three_formula},
  };

  ScanReport report;
  report.scan = "identities";
  report.ranges = {{"f_params", budget.f_params},
                   {"f_t", budget.f_t},
                   {"four_block_params", budget.four_block_params},
                   {"four_block_t", budget.four_block_t},
                   {"family_params", budget.family_params},
                   {"family_t", budget.family_t},
                   {"example_t", budget.example_t},
                   {"minimal_n", budget.minimal_n},
                   {"minimal_t", budget.minimal_t},
                   {"sparse_n", budget.sparse_n},
                   {"sparse_t", budget.sparse_t},
                   {"stirling_n", budget.stirling_n},
                   {"lah_n", budget.lah_n},
                   {"uniform_coefficient_n", budget.uniform_coefficient_n},
                   {"uniform_bound_n", budget.uniform_bound_n},
                   {"duality_n", budget.duality_n},
                   {"duality_t", budget.duality_t},
                   {"rank_formula_params", budget.rank_formula_params},
                   {"rank_formula_t", budget.rank_formula_t}};

  const auto tallies = detail::parallel_map(checks.size(), jobs, [&](std::size_t index) {
    Tally tally(checks[index].first);
    try {
      checks[index].second(tally, budget);
    } catch (const std::exception& error) {
      tally.fail({}, std::string("exception: ") + error.what());
    }
    return tally;
  });
  for (const auto& tally : tallies) {
    report.points.push_back(tally.point());
    if (tally.failure()) report.counterexamples.push_back(*tally.failure());
  }
  report.elapsed_ms = elapsed_since(start);
  return report;
}

ScanReport run_identity_suite(long param_budget, long t_budget, unsigned jobs) {
  require_bound(param_budget, 1, "param_budget");
  require_bound(t_budget, 1, "t_budget");
  IdentityBudget budget;
  budget.f_params = budget.four_block_params = budget.family_params = budget.rank_formula_params = param_budget;
  budget.f_t = budget.four_block_t = budget.family_t = budget.example_t = budget.minimal_t = budget.sparse_t =
      budget.duality_t = budget.rank_formula_t = t_budget;
  return run_identity_suite(budget, jobs);
}

}  // namespace schubert
