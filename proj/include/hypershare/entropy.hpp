#pragma once

// Exact Shannon entropies of blackboard messages under uniform coins, by
// enumerating every coin assignment.
//
// Every entropy here has the form (N log2 N - sum m log2 m) / N over outcome
// multiplicities m with N = 2^c. When all multiplicities are powers of two
// the value is rational and is kept exactly; otherwise the non-dyadic part is
// carried as a double and comparisons fall back to a 1e-9 bit tolerance.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypershare/error.hpp"
#include "hypershare/gf2.hpp"
#include "hypershare/rational.hpp"
#include "hypershare/simulate.hpp"
#include "hypershare/strategy.hpp"

namespace hypershare {

inline constexpr double entropy_tolerance_bits = 1e-9;
inline constexpr std::size_t entropy_coin_cap = 20;

class Entropy {
 public:
  Entropy() = default;
  Entropy(Rational exact, double residual, bool is_exact) : exact_(exact), residual_(residual), is_exact_(is_exact) {}
  static Entropy bits(std::int64_t b) { return {Rational(b), 0.0, true}; }

  [[nodiscard]] bool is_exact() const { return is_exact_; }
  [[nodiscard]] std::optional<Rational> exact() const {
    if (!is_exact_) return std::nullopt;
    return exact_;
  }
  [[nodiscard]] double value() const { return exact_.to_double() + residual_; }

  friend Entropy operator+(const Entropy& a, const Entropy& b) {
    return {a.exact_ + b.exact_, a.residual_ + b.residual_, a.is_exact_ && b.is_exact_};
  }
  friend Entropy operator-(const Entropy& a, const Entropy& b) {
    return {a.exact_ - b.exact_, a.residual_ - b.residual_, a.is_exact_ && b.is_exact_};
  }
  friend Entropy operator*(std::int64_t s, const Entropy& a) {
    return {Rational(s) * a.exact_, static_cast<double>(s) * a.residual_, a.is_exact_};
  }

  /// Exact when both sides are exact, otherwise within the bit tolerance.
  [[nodiscard]] bool equals(const Entropy& o) const {
    if (is_exact_ && o.is_exact_) return exact_ == o.exact_;
    return std::abs(value() - o.value()) <= entropy_tolerance_bits;
  }
  [[nodiscard]] bool less_equal(const Entropy& o) const {
    if (is_exact_ && o.is_exact_) return exact_ <= o.exact_;
    return value() <= o.value() + entropy_tolerance_bits;
  }

  [[nodiscard]] std::string str() const {
    if (is_exact_) return exact_.den() == 1 ? std::to_string(exact_.num()) : exact_.str();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", value());
    return buf;
  }

 private:
  Rational exact_;
  double residual_ = 0.0;
  bool is_exact_ = true;
};

namespace detail {

/// Accumulates sum of ±m·log2(m), exactly for powers of two.
class XLogX {
 public:
  void add(std::uint64_t m, int sign) {
    if (m <= 1) return;
    if (std::has_single_bit(m)) {
      integral_ += sign * static_cast<std::int64_t>(m) * std::countr_zero(m);
    } else {
      residual_ += sign * static_cast<double>(m) * std::log2(static_cast<double>(m));
      exact_ = false;
    }
  }
  [[nodiscard]] Entropy over(std::uint64_t total) const {
    return {Rational(integral_, static_cast<std::int64_t>(total)), residual_ / static_cast<double>(total), exact_};
  }

 private:
  std::int64_t integral_ = 0;
  double residual_ = 0.0;
  bool exact_ = true;
};

using OutcomeKey = std::pair<std::uint64_t, std::uint64_t>;

/// Multiplicities of each distinct key.
inline std::vector<std::uint64_t> multiplicities(std::vector<OutcomeKey> keys) {
  std::sort(keys.begin(), keys.end());
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < keys.size();) {
    std::size_t j = i;
    while (j < keys.size() && keys[j] == keys[i]) ++j;
    out.push_back(j - i);
    i = j;
  }
  return out;
}

inline Entropy entropy_of_keys(std::vector<OutcomeKey> keys) {
  const auto total = keys.size();
  XLogX acc;
  acc.add(total, +1);
  for (auto m : multiplicities(std::move(keys))) acc.add(m, -1);
  return acc.over(total);
}

/// H(A | B) computed directly as sum over b of p(b)·H(A | B=b).
inline Entropy conditional_entropy(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  std::vector<OutcomeKey> joint(a.size()), cond(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    joint[i] = {b[i], a[i]};
    cond[i] = {b[i], 0};
  }
  XLogX acc;
  for (auto m : multiplicities(std::move(cond))) acc.add(m, +1);
  for (auto m : multiplicities(std::move(joint))) acc.add(m, -1);
  return acc.over(a.size());
}

inline std::uint64_t mask_of(const std::vector<std::size_t>& vars) {
  std::uint64_t m = 0;
  for (auto v : vars) m |= std::uint64_t{1} << v;
  return m;
}

/// Message of every assignment of `vars` bits, as an integer per assignment.
inline std::vector<std::uint64_t> message_table(std::size_t vars,
                                                const std::function<gf2::BitVector(std::uint64_t)>& message_fn) {
  if (vars > entropy_coin_cap)
    throw Error(ErrorCode::TooLarge, std::to_string(vars) + " variables exceed the enumeration cap of " +
                                         std::to_string(entropy_coin_cap));
  const std::uint64_t total = std::uint64_t{1} << vars;
  std::vector<std::uint64_t> out(total);
  for (std::uint64_t w = 0; w < total; ++w) {
    const auto m = message_fn(w);
    if (m.size() > 64) throw Error(ErrorCode::TooLarge, "messages longer than 64 bits are not enumerated");
    out[w] = m.to_word();
  }
  return out;
}

/// H(M | group) per group, from a precomputed message table.
inline std::vector<Entropy> conditional_entropies(const std::vector<std::uint64_t>& messages,
                                                  const std::vector<std::vector<std::size_t>>& groups) {
  std::vector<Entropy> out;
  std::vector<std::uint64_t> seen(messages.size());
  for (const auto& g : groups) {
    const auto mask = mask_of(g);
    for (std::uint64_t w = 0; w < messages.size(); ++w) seen[w] = w & mask;
    out.push_back(conditional_entropy(messages, seen));
  }
  return out;
}

inline Entropy entropy_of(const std::vector<std::uint64_t>& values) {
  std::vector<OutcomeKey> keys(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) keys[i] = {values[i], 0};
  return entropy_of_keys(std::move(keys));
}

}  // namespace detail

/// Multiplicity of every blackboard value over all 2^|coins| assignments,
/// sorted by value. Only values that occur are listed.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> message_distribution(const Strategy& s) {
  const auto parity = s.parity_matrix();
  const auto table = detail::message_table(s.coins().size(), [&](std::uint64_t w) {
    return parity.multiply(gf2::BitVector::from_word(s.coins().size(), w));
  });
  auto sorted = table;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (auto v : sorted) {
    if (out.empty() || out.back().first != v)
      out.emplace_back(v, 1);
    else
      ++out.back().second;
  }
  return out;
}

struct InequalityCheck {
  Entropy lhs;  ///< sum over users of H(M | R_i)
  Entropy rhs;  ///< (n-1)·H(M)
  bool holds = false;
};

/// Evaluates sum_i H(M|R_i) <= (n-1)·H(M) for an arbitrary deterministic
/// message of `vars` uniform bits; groups[i] lists the bits user i sees.
inline InequalityCheck check_blackboard_inequality(const std::function<gf2::BitVector(std::uint64_t)>& message_fn,
                                                   std::size_t vars,
                                                   const std::vector<std::vector<std::size_t>>& groups) {
  const auto table = detail::message_table(vars, message_fn);
  const auto h_m = detail::entropy_of(table);
  InequalityCheck out;
  out.lhs = Entropy::bits(0);
  for (const auto& h : detail::conditional_entropies(table, groups)) out.lhs = out.lhs + h;
  out.rhs = (static_cast<std::int64_t>(groups.size()) - 1) * h_m;
  out.holds = out.lhs.less_equal(out.rhs);
  return out;
}

struct EntropyReport {
  Entropy h_M;
  Entropy h_X;
  std::vector<Entropy> h_M_given_Ri;
  Entropy lemma42_lhs;
  Entropy lemma42_rhs;
  bool lemma42_holds = false;
  bool theorem11_satisfied = false;  ///< H(M)/H(X) >= (n-k)/(n-1)
  bool theorem11_tight = false;      ///< equality in the above
  Rational rate;
  Rational bound;
};

inline EntropyReport exact_entropies(const Strategy& s) {
  const auto c = s.coins().size();
  if (c > entropy_coin_cap)
    throw Error(ErrorCode::TooLarge,
                std::to_string(c) + " coins exceed the enumeration cap of " + std::to_string(entropy_coin_cap));
  const auto parity = s.parity_matrix();
  const auto table = detail::message_table(
      c, [&](std::uint64_t w) { return parity.multiply(gf2::BitVector::from_word(c, w)); });

  EntropyReport r;
  r.h_M = detail::entropy_of(table);
  std::vector<std::uint64_t> identity(table.size());
  for (std::uint64_t w = 0; w < identity.size(); ++w) identity[w] = w;
  r.h_X = detail::entropy_of(identity);

  std::vector<std::vector<std::size_t>> groups;
  for (Vertex u = 1; u <= s.n(); ++u) groups.push_back(s.held_coins(u));
  r.h_M_given_Ri = detail::conditional_entropies(table, groups);

  r.lemma42_lhs = Entropy::bits(0);
  for (const auto& h : r.h_M_given_Ri) r.lemma42_lhs = r.lemma42_lhs + h;
  r.lemma42_rhs = (static_cast<std::int64_t>(s.n()) - 1) * r.h_M;
  r.lemma42_holds = r.lemma42_lhs.less_equal(r.lemma42_rhs);

  r.rate = s.rate();
  r.bound = s.bound();
  // H(M)/H(X) >= (n-k)/(n-1)  <=>  (n-1)·H(M) >= (n-k)·H(X)
  const auto scaled_m = (static_cast<std::int64_t>(s.n()) - 1) * r.h_M;
  const auto scaled_x = (static_cast<std::int64_t>(s.n()) - static_cast<std::int64_t>(s.k())) * r.h_X;
  r.theorem11_satisfied = scaled_x.less_equal(scaled_m);
  r.theorem11_tight = scaled_x.equals(scaled_m);
  return r;
}

/// H(M) as the chain sum of H(M_j | M_1..M_{j-1}), each term computed from
/// prefix counts.
inline Entropy chain_rule_entropy(const Strategy& s) {
  const auto c = s.coins().size();
  const auto parity = s.parity_matrix();
  const auto table = detail::message_table(
      c, [&](std::uint64_t w) { return parity.multiply(gf2::BitVector::from_word(c, w)); });
  Entropy total = Entropy::bits(0);
  std::vector<std::uint64_t> prefix(table.size()), bit(table.size());
  for (std::size_t j = 0; j < s.broadcasts().size(); ++j) {
    const std::uint64_t prefix_mask = (std::uint64_t{1} << j) - 1;
    for (std::size_t w = 0; w < table.size(); ++w) {
      prefix[w] = table[w] & prefix_mask;
      bit[w] = (table[w] >> j) & 1U;
    }
    total = total + detail::conditional_entropy(bit, prefix);
  }
  return total;
}

struct NonexampleBound {
  std::string name;
  EntropyReport entropies;
  SimulationReport simulation;
  bool ratio_is_two_thirds = false;
};

/// Confirms that both rate-2/3 schemes decode with zero error and have
/// H(M)/H(X) exactly 2/3.
inline std::vector<NonexampleBound> verify_nonexample_bounds() {
  auto schemes = handcrafted_nonexample_schemes();
  std::vector<NonexampleBound> out;
  for (auto* s : {&schemes.g1, &schemes.g2}) {
    NonexampleBound b{s == &schemes.g1 ? "g1_nonexample" : "g2_nonexample", exact_entropies(*s),
                      verify_zero_error(*s), false};
    b.ratio_is_two_thirds = (3 * b.entropies.h_M).equals(2 * b.entropies.h_X);
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace hypershare
