#include "schubert/matroid.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

ElementSet normalized_subset(const SchubertSet& set, std::span<const int> subset) {
  ElementSet out(subset.begin(), subset.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (int e : out) {
    if (e < 1 || e > set.ground_size())
      throw InvalidArgument("element " + std::to_string(e) + " outside ground set [" +
                            std::to_string(set.ground_size()) + "]");
  }
  return out;
}

void for_each_combination(int n, int k, const std::function<void(const ElementSet&)>& visit) {
  if (k < 0 || k > n) return;
  ElementSet current(static_cast<std::size_t>(k));
  std::iota(current.begin(), current.end(), 1);
  while (true) {
    visit(current);
    int i = k - 1;
    while (i >= 0 && current[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) return;
    ++current[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) current[static_cast<std::size_t>(j)] = current[static_cast<std::size_t>(j - 1)] + 1;
  }
}

bool independent_sorted(const ElementSet& s, const ElementSet& sorted_subset) {
  if (sorted_subset.size() > s.size()) return false;
  const std::size_t offset = s.size() - sorted_subset.size();
  for (std::size_t j = 0; j < sorted_subset.size(); ++j) {
    if (sorted_subset[j] > s[offset + j]) return false;
  }
  return true;
}

int rank_sorted(const ElementSet& s, const ElementSet& sorted_subset) {
  std::vector<bool> matched(s.size(), false);
  int count = 0;
  for (auto it = sorted_subset.rbegin(); it != sorted_subset.rend(); ++it) {
    for (std::size_t i = s.size(); i-- > 0;) {
      if (s[i] < *it) break;
      if (!matched[i]) {
        matched[i] = true;
        ++count;
        break;
      }
    }
  }
  return count;
}

SubsetClass classify_sorted(const SchubertSet& set, const ElementSet& subset) {
  const ElementSet& s = set.elements();
  SubsetClass result;
  result.basis = subset.size() == s.size() && independent_sorted(s, subset);
  result.independent = independent_sorted(s, subset);

  if (!result.independent) {
    result.circuit = true;
    for (std::size_t drop = 0; drop < subset.size() && result.circuit; ++drop) {
      ElementSet smaller;
      for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i != drop) smaller.push_back(subset[i]);
      }
      result.circuit = independent_sorted(s, smaller);
    }
  }

  const int base_rank = rank_sorted(s, subset);
  result.flat = true;
  for (int a = 1; a <= set.ground_size() && result.flat; ++a) {
    if (std::binary_search(subset.begin(), subset.end(), a)) continue;
    ElementSet bigger = subset;
    bigger.insert(std::lower_bound(bigger.begin(), bigger.end(), a), a);
    result.flat = rank_sorted(s, bigger) > base_rank;
  }
  result.hyperplane = result.flat && base_rank == set.rank() - 1;
  return result;
}

long parse_integer(std::string_view token, std::string_view context) {
  long value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last)
    throw ParseError(std::string(context) + ": bad integer '" + std::string(token) + "'");
  return value;
}

std::vector<long> parse_integer_list(std::string_view text, std::string_view context) {
  std::string compact;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t' && ch != '\n') compact.push_back(ch);
  }
  std::vector<long> values;
  if (compact.empty()) return values;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = compact.find(',', start);
    const std::string_view token(compact.data() + start,
                                 (comma == std::string::npos ? compact.size() : comma) - start);
    values.push_back(parse_integer(token, context));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return values;
}

}  // namespace

SchubertSet::SchubertSet(std::vector<int> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw InvalidArgument("SchubertSet: set must be nonempty");
  std::sort(elements_.begin(), elements_.end());
  if (elements_.front() < 1) throw InvalidArgument("SchubertSet: elements must be positive");
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
    throw InvalidArgument("SchubertSet: repeated element");
}

std::vector<int> SchubertSet::indicator() const {
  std::vector<int> out(static_cast<std::size_t>(ground_size()), 0);
  for (int e : elements_) out[static_cast<std::size_t>(e - 1)] = 1;
  return out;
}

RSequence::RSequence(std::vector<long> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty() || blocks_.size() % 2 != 0)
    throw InvalidArgument("RSequence: need an even, nonzero number of blocks");
  if (blocks_[0] < 0) throw InvalidArgument("RSequence: r_1 must be >= 0");
  for (std::size_t i = 1; i < blocks_.size(); ++i) {
    if (blocks_[i] <= 0) throw InvalidArgument("RSequence: r_i must be > 0 for i >= 2");
  }
}

long RSequence::ground_size() const { return std::accumulate(blocks_.begin(), blocks_.end(), 0L); }

long RSequence::rank() const {
  long total = 0;
  for (int j = 1; j <= pairs(); ++j) total += one_run(j);
  return total;
}

RSequence set_to_rsequence(const SchubertSet& set) {
  const auto indicator = set.indicator();
  std::vector<long> blocks;
  int expected = 0;  // runs alternate 0,1,0,1,...; the first run may be empty
  long run = 0;
  for (int bit : indicator) {
    if (bit != expected) {
      blocks.push_back(run);
      run = 0;
      expected = 1 - expected;
    }
    ++run;
  }
  blocks.push_back(run);
  return RSequence(std::move(blocks));
}

SchubertSet rsequence_to_set(const RSequence& r) {
  std::vector<int> elements;
  long position = 0;
  for (int j = 1; j <= r.pairs(); ++j) {
    position += r.zero_run(j);
    for (long i = 0; i < r.one_run(j); ++i) elements.push_back(static_cast<int>(++position));
  }
  return SchubertSet(std::move(elements));
}

UVBounds uv_bounds(const RSequence& r) {
  const int m = r.pairs();
  UVBounds bounds;
  bounds.u.resize(static_cast<std::size_t>(m));
  bounds.v.resize(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    long later_ones = 0;
    for (int j = i + 1; j <= m; ++j) later_ones += r.one_run(j);
    long earlier_zeros = 0;
    for (int j = 1; j < i; ++j) earlier_zeros += r.zero_run(j);
    bounds.u[static_cast<std::size_t>(i - 1)] = std::min(r.zero_run(i), later_ones);
    bounds.v[static_cast<std::size_t>(i - 1)] = std::min(r.one_run(i), earlier_zeros);
  }
  return bounds;
}

RSequence uniform_rsequence(long k, long n) {
  if (!(n > k && k >= 1)) throw InvalidArgument("uniform family requires n > k >= 1");
  return RSequence({n - k, k});
}

RSequence minimal_rsequence(long k, long n) {
  if (!(n > k && k >= 2)) throw InvalidArgument("minimal family requires n > k >= 2");
  // k = n-1: the middle zero run is empty and the ones merge into U_{n-1,n}.
  if (n - k - 1 == 0) return RSequence({1, k});
  return RSequence({1, k - 1, n - k - 1, 1});
}

RSequence sparse_paving_rsequence(long k, long n) {
  if (!(n - 2 >= k && k >= 2)) throw InvalidArgument("sparse paving family requires n-2 >= k >= 2");
  return RSequence({k - 1, 1, 1, n - k - 1});
}

RSequence catalan_rsequence(long n, long a, long b) {
  if (n < 1 || a < 1 || b < 1) throw InvalidArgument("catalan family requires n, a, b >= 1");
  std::vector<long> blocks;
  for (long i = 0; i < n; ++i) {
    blocks.push_back(a);
    blocks.push_back(b);
  }
  return RSequence(std::move(blocks));
}

bool is_basis(const SchubertSet& set, std::span<const int> subset) {
  const ElementSet t = normalized_subset(set, subset);
  return t.size() == set.elements().size() && independent_sorted(set.elements(), t);
}

bool is_independent(const SchubertSet& set, std::span<const int> subset) {
  return independent_sorted(set.elements(), normalized_subset(set, subset));
}

int rank(const SchubertSet& set, std::span<const int> subset) {
  return rank_sorted(set.elements(), normalized_subset(set, subset));
}

SubsetClass classify_subset(const SchubertSet& set, std::span<const int> subset) {
  return classify_sorted(set, normalized_subset(set, subset));
}

std::vector<ElementSet> enumerate_bases(const SchubertSet& set) {
  std::vector<ElementSet> bases;
  for_each_combination(set.ground_size(), set.rank(), [&](const ElementSet& candidate) {
    bool dominated = true;
    for (std::size_t i = 0; i < candidate.size() && dominated; ++i)
      dominated = candidate[i] <= set.elements()[i];
    if (dominated) bases.push_back(candidate);
  });
  return bases;
}

std::vector<ElementSet> circuit_hyperplanes(const SchubertSet& set) {
  std::vector<ElementSet> out;
  for_each_combination(set.ground_size(), set.rank(), [&](const ElementSet& candidate) {
    if (classify_sorted(set, candidate).circuit_hyperplane()) out.push_back(candidate);
  });
  return out;
}

bool is_sparse_paving(const SchubertSet& set) {
  bool sparse = true;
  for_each_combination(set.ground_size(), set.rank(), [&](const ElementSet& candidate) {
    if (!sparse) return;
    const SubsetClass c = classify_sorted(set, candidate);
    sparse = c.basis || c.circuit_hyperplane();
  });
  return sparse;
}

bool matches_sparse_paving_pattern(const RSequence& r) {
  if (r.pairs() == 1) return true;
  return r.pairs() == 2 && r.one_run(1) == 1 && r.zero_run(2) == 1;
}

RSequence dual_rsequence(const RSequence& r) {
  std::vector<long> reversed(r.blocks().rbegin(), r.blocks().rend());
  if (reversed.back() == 0) {
    reversed.resize(reversed.size() - 2);
    if (reversed.empty()) throw InvalidArgument("dual_rsequence: dual of a free matroid has rank 0");
  }
  return RSequence(std::move(reversed));
}

SchubertSet parse_set_literal(std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && (body.front() == ' ' || body.front() == '\t')) body.remove_prefix(1);
  while (!body.empty() && (body.back() == ' ' || body.back() == '\t')) body.remove_suffix(1);
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') throw ParseError("set literal: unbalanced braces in '" + std::string(text) + "'");
    body = body.substr(1, body.size() - 2);
  }
  const auto values = parse_integer_list(body, "set literal");
  std::vector<int> elements;
  for (long v : values) elements.push_back(static_cast<int>(v));
  try {
    return SchubertSet(std::move(elements));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("set literal '") + std::string(text) + "': " + e.what());
  }
}

RSequence parse_rsequence_literal(std::string_view text) {
  try {
    return RSequence(parse_integer_list(text, "r-sequence literal"));
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("r-sequence literal '") + std::string(text) + "': " + e.what());
  }
}

std::string format_set(std::span<const int> elements) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < elements.size(); ++i) out << (i ? "," : "") << elements[i];
  out << '}';
  return out.str();
}

}  // namespace schubert
