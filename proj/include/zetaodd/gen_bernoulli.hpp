#pragma once

// Generalized Bernoulli numbers B_n^(l), the coefficients of
// (z / (e^z - 1))^l * e^{xz}. Two independent routes are kept: the
// Srivastava-Todorov closed form, and exact power-series arithmetic on the
// generating function. The memo table cross-checks them on every insert.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zetaodd/exact.hpp"

namespace zetaodd {

/// B_n^(l) by the Srivastava-Todorov closed form (no memoization).
inline Rational gen_bernoulli_closed_form(int n, int l) {
  if (n < 0 || l < 1) throw std::invalid_argument("gen_bernoulli: need n >= 0, l >= 1");
  const BigInt n_fact = factorial(n);
  Rational total;
  for (int k = 0; k <= n; ++k) {
    // sum_j (-1)^j C(k,j) j^{n+k}; 0^0 reads as 1.
    BigInt inner = 0;
    for (int j = 0; j <= k; ++j) {
      const BigInt power = (j == 0) ? BigInt(n + k == 0 ? 1 : 0)
                                    : pow_int(BigInt(j), static_cast<unsigned long>(n + k));
      const BigInt term = binomial(k, j) * power;
      if (j % 2 == 0) {
        inner += term;
      } else {
        inner -= term;
      }
    }
    if (inner == 0) continue;
    const BigInt outer = binomial(l + n, n - k) * binomial(l + k - 1, k) * n_fact;
    total = total + Rational(BigInt(outer * inner), factorial(n + k));
  }
  return total;
}

/// [B_0^(l), ..., B_max_n^(l)] from the generating function alone: invert
/// the series (e^z - 1)/z, raise it to the l-th power, then scale the z^n
/// coefficient by n!.
inline std::vector<Rational> series_oracle(int l, int max_n) {
  if (l < 1 || max_n < 0) throw std::invalid_argument("series_oracle: need l >= 1, max_n >= 0");
  const auto len = static_cast<std::size_t>(max_n) + 1;

  std::vector<Rational> base(len);  // (e^z - 1)/z = sum z^k / (k+1)!
  for (std::size_t k = 0; k < len; ++k) base[k] = Rational(BigInt(1), factorial(static_cast<long>(k) + 1));

  std::vector<Rational> inv(len);
  inv[0] = Rational(1);
  for (std::size_t n = 1; n < len; ++n) {
    Rational acc;
    for (std::size_t k = 1; k <= n; ++k) acc = acc + base[k] * inv[n - k];
    inv[n] = -acc;
  }

  const auto multiply = [len](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> out(len);
    for (std::size_t i = 0; i < len; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < len; ++j) out[i + j] = out[i + j] + a[i] * b[j];
    }
    return out;
  };

  std::vector<Rational> power(len);
  power[0] = Rational(1);
  std::vector<Rational> square = inv;
  for (unsigned e = static_cast<unsigned>(l); e != 0; e >>= 1) {
    if (e & 1U) power = multiply(power, square);
    if (e > 1) square = multiply(square, square);
  }

  for (std::size_t n = 0; n < len; ++n) power[n] = power[n] * Rational(factorial(static_cast<long>(n)));
  return power;
}

/// Raised when a persisted Bernoulli table cannot be parsed or fails
/// revalidation.
class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Memoized B_n^(l) keyed by (n, l).
///
/// Every entry computed here is checked against the generating-function
/// route before it is stored. Reads take a shared lock; a miss computes the
/// value outside any lock and inserts it with emplace, so concurrent growth
/// is idempotent and equivalent to some sequential order.
class BernoulliTable {
 public:
  using Key = std::pair<int, int>;  // (n, l)

  BernoulliTable() = default;
  BernoulliTable(const BernoulliTable&) = delete;
  BernoulliTable& operator=(const BernoulliTable&) = delete;

  Rational get(int n, int l) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = entries_.find({n, l}); it != entries_.end()) return it->second;
    }
    Rational value = gen_bernoulli_closed_form(n, l);
    const Rational oracle = oracle_value(n, l);
    if (value != oracle) {
      throw std::logic_error("B_" + std::to_string(n) + "^(" + std::to_string(l) +
                             "): closed form " + value.str() + " disagrees with series " +
                             oracle.str());
    }
    std::unique_lock lock(mutex_);
    return entries_.emplace(Key{n, l}, std::move(value)).first->second;
  }

  /// Fills every entry with n <= max_n and l <= max_l.
  void fill(int max_n, int max_l) {
    for (int l = 1; l <= max_l; ++l) {
      for (int n = 0; n <= max_n; ++n) get(n, l);
    }
  }

  bool contains(int n, int l) const {
    std::shared_lock lock(mutex_);
    return entries_.count({n, l}) != 0;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
  }

  int max_degree_n() const {
    std::shared_lock lock(mutex_);
    int out = -1;
    for (const auto& [key, value] : entries_) out = std::max(out, key.first);
    return out;
  }

  int max_order_l() const {
    std::shared_lock lock(mutex_);
    int out = 0;
    for (const auto& [key, value] : entries_) out = std::max(out, key.second);
    return out;
  }

  /// Snapshot sorted by (l, n).
  std::vector<std::pair<Key, Rational>> entries() const {
    std::shared_lock lock(mutex_);
    std::vector<std::pair<Key, Rational>> out(entries_.begin(), entries_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      return std::pair(a.first.second, a.first.first) < std::pair(b.first.second, b.first.first);
    });
    return out;
  }

  /// Line-oriented text, `B <n> <l> <rational>` sorted by (l, n).
  std::string serialize() const {
    std::ostringstream out;
    for (const auto& [key, value] : entries()) {
      out << "B " << key.first << ' ' << key.second << ' ' << value.str() << '\n';
    }
    return out.str();
  }

  /// Writes to a sibling temp file, then renames over `path`.
  void save(const std::filesystem::path& path) const {
    auto tmp = path;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) throw CacheError("cannot write cache file " + tmp.string());
      out << serialize();
      out.flush();
      if (!out) throw CacheError("short write to cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
  }

  /// Parses `text` into this table. Unless `trust` is set, each entry is
  /// recomputed from the closed form and any mismatch is rejected.
  void load_text(const std::string& text, bool trust) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    std::map<Key, Rational> parsed;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      std::istringstream fields(line);
      std::string tag, value_text, extra;
      long n = -1, l = -1;
      if (!(fields >> tag >> n >> l >> value_text) || tag != "B" || n < 0 || l < 1 ||
          (fields >> extra)) {
        throw CacheError("cache line " + std::to_string(line_no) + ": malformed entry '" + line + "'");
      }
      Rational value;
      try {
        value = Rational::parse(value_text);
      } catch (const std::invalid_argument&) {
        throw CacheError("cache line " + std::to_string(line_no) + ": malformed rational '" +
                         value_text + "'");
      }
      const Key key{static_cast<int>(n), static_cast<int>(l)};
      if (!trust) {
        const Rational expected = gen_bernoulli_closed_form(key.first, key.second);
        if (expected != value) {
          throw CacheError("cache line " + std::to_string(line_no) + ": entry (n=" +
                           std::to_string(n) + ", l=" + std::to_string(l) + ") holds " +
                           value.str() + ", expected " + expected.str());
        }
      }
      parsed.insert_or_assign(key, std::move(value));
    }
    std::unique_lock lock(mutex_);
    for (auto& [key, value] : parsed) entries_.insert_or_assign(key, std::move(value));
  }

  /// An absent file leaves the table empty.
  void load(const std::filesystem::path& path, bool trust) {
    if (!std::filesystem::exists(path)) return;
    std::ifstream in(path);
    if (!in) throw CacheError("cannot read cache file " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    load_text(buffer.str(), trust);
  }

 private:
  Rational oracle_value(int n, int l) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = oracle_.find(l); it != oracle_.end() && static_cast<int>(it->second.size()) > n) {
        return it->second[static_cast<std::size_t>(n)];
      }
    }
    int have = 0;
    {
      std::shared_lock lock(mutex_);
      if (auto it = oracle_.find(l); it != oracle_.end()) have = static_cast<int>(it->second.size());
    }
    auto column = series_oracle(l, std::max(n, 2 * have));
    Rational out = column[static_cast<std::size_t>(n)];
    std::unique_lock lock(mutex_);
    auto& slot = oracle_[l];
    if (slot.size() < column.size()) slot = std::move(column);
    return out;
  }

  mutable std::shared_mutex mutex_;
  std::map<Key, Rational> entries_;
  std::map<int, std::vector<Rational>> oracle_;
};

/// Process-wide table used by the weight solver and the CLI cache.
inline BernoulliTable& shared_bernoulli_table() {
  static BernoulliTable table;
  return table;
}

inline Rational gen_bernoulli(int n, int l) { return shared_bernoulli_table().get(n, l); }

/// B_n^(l)(x) = sum_k C(n,k) B_k^(l) x^{n-k}.
inline Rational gen_bernoulli_poly(int n, int l, const Rational& x) {
  if (n < 0 || l < 1) throw std::invalid_argument("gen_bernoulli_poly: need n >= 0, l >= 1");
  Rational total;
  Rational x_power(1);  // x^{n-k}, built from k = n downwards
  for (int k = n; k >= 0; --k) {
    total = total + Rational(binomial(n, k)) * gen_bernoulli(k, l) * x_power;
    x_power = x_power * x;
  }
  return total;
}

}  // namespace zetaodd
