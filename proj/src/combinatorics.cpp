#include "schubert/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "schubert/errors.hpp"

namespace schubert {

BigInt binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

BigInt factorial(long n) {
  if (n < 0) throw InvalidArgument("factorial: negative argument " + std::to_string(n));
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

StirlingTable::StirlingTable(long max_n) : max_n_(std::max(0L, max_n)) {
  rows_.resize(static_cast<std::size_t>(max_n_) + 1);
  rows_[0] = {BigInt(1)};
  for (long n = 1; n <= max_n_; ++n) {
    auto& row = rows_[static_cast<std::size_t>(n)];
    const auto& prev = rows_[static_cast<std::size_t>(n - 1)];
    row.assign(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (long k = 1; k <= n; ++k) {
      if (k <= n - 1) row[k] += (n - 1) * prev[k];
      row[k] += prev[k - 1];
    }
  }
}

const BigInt& StirlingTable::at(long n, long k) const {
  if (n < 0 || k < 0 || k > n) return zero_;
  if (n > max_n_) throw InvalidArgument("StirlingTable: n=" + std::to_string(n) + " beyond table");
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt stirling_first_unsigned(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return StirlingTable(n).at(n, k);
}

BigInt eulerian(long m, long k) {
  if (m < 0) return 0;
  if (k < 0 || k >= std::max(m, 1L)) return 0;
  // A(j, i) = (i+1) A(j-1, i) + (j-i) A(j-1, i-1), starting from A(0, 0) = 1.
  std::vector<BigInt> row{BigInt(1)};
  for (long j = 1; j <= m; ++j) {
    std::vector<BigInt> next(static_cast<std::size_t>(j), BigInt(0));
    for (long i = 0; i < j; ++i) {
      if (i < static_cast<long>(row.size())) next[i] += (i + 1) * row[i];
      if (i >= 1 && i - 1 < static_cast<long>(row.size())) next[i] += (j - i) * row[i - 1];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

BigInt weighted_lah(long l, long n, long m) {
  if (l < 0) throw InvalidArgument("weighted_lah: l must be >= 0");
  if (m < 1 || n < 1) throw InvalidArgument("weighted_lah: n and m must be positive");
  if (m > n) throw InvalidArgument("weighted_lah: requires m <= n");
  const StirlingTable stirling(n);
  BigInt total = 0;
  for (long j = 0; j <= l; ++j) {
    const BigInt outer = binomial(n, j) * binomial(m + l - j - 1, m - 1);
    if (outer == 0) continue;
    for (long i = 0; i <= n - m; ++i) {
      BigInt term = outer * stirling.at(j, j - i) * stirling.at(n - j, m + i - j);
      if ((i + j) % 2 == 0) {
        total += term;
      } else {
        total -= term;
      }
    }
  }
  return total;
}

namespace {

std::vector<int> rotate_left(const std::vector<int>& parts, std::size_t shift) {
  std::vector<int> out(parts.size());
  std::rotate_copy(parts.begin(), parts.begin() + static_cast<long>(shift), parts.end(), out.begin());
  return out;
}

}  // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidArgument("Composition: at least one part required");
  for (int p : parts_) {
    if (p < 1) throw InvalidArgument("Composition: parts must be positive");
  }
  total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  std::set<std::vector<int>> rotations;
  for (std::size_t s = 0; s < parts_.size(); ++s) rotations.insert(rotate_left(parts_, s));
  class_size_ = static_cast<int>(rotations.size());
}

Composition Composition::canonical() const {
  std::vector<int> best = parts_;
  for (std::size_t s = 1; s < parts_.size(); ++s) best = std::max(best, rotate_left(parts_, s));
  return Composition(std::move(best));
}

bool Composition::is_rotation_of(const Composition& other) const {
  if (other.parts_.size() != parts_.size()) return false;
  for (std::size_t s = 0; s < parts_.size(); ++s) {
    if (rotate_left(parts_, s) == other.parts_) return true;
  }
  return false;
}

std::vector<Composition> enumerate_gamma(int n) {
  if (n < 1) throw InvalidArgument("enumerate_gamma: n must be positive");
  std::set<std::vector<int>> representatives;
  std::vector<int> current;
  std::function<void(int)> extend = [&](int remaining) {
    if (remaining == 0) {
      if (current.size() >= 2) {
        auto canon = Composition(current).canonical();
        representatives.insert(std::vector<int>(canon.parts().begin(), canon.parts().end()));
      }
      return;
    }
    for (int part = 2; part <= remaining; ++part) {
      current.push_back(part);
      extend(remaining - part);
      current.pop_back();
    }
  };
  extend(n);

  std::vector<Composition> out;
  for (auto it = representatives.rbegin(); it != representatives.rend(); ++it) out.emplace_back(*it);
  return out;
}

}  // namespace schubert
