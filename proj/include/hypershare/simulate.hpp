#pragma once

// Running strategies on coin realisations and checking that every user's
// linear decoder recovers the full coin vector.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypershare/error.hpp"
#include "hypershare/gf2.hpp"
#include "hypershare/strategy.hpp"

namespace hypershare {

/// One joint realisation of all coins, indexed like Strategy::coins().
struct CoinAssignment {
  gf2::BitVector bits;

  friend bool operator==(const CoinAssignment&, const CoinAssignment&) = default;
};

/// Builds an assignment from explicit symbol values; coins not listed are 0.
inline CoinAssignment make_assignment(const Strategy& s, const std::map<CoinSymbol, bool>& values) {
  CoinAssignment a{gf2::BitVector(s.coins().size())};
  for (const auto& [sym, bit] : values) a.bits.set(s.coin_index(sym), bit);
  return a;
}

/// Assignment whose coin i takes bit i of `word` (requires at most 64 coins).
inline CoinAssignment assignment_from_word(const Strategy& s, std::uint64_t word) {
  return {gf2::BitVector::from_word(s.coins().size(), word)};
}

/// Blackboard contents: bit j is the XOR of the coins in broadcast j.
inline gf2::BitVector run(const Strategy& s, const CoinAssignment& a) {
  if (a.bits.size() != s.coins().size())
    throw Error(ErrorCode::DomainMismatch, "assignment has " + std::to_string(a.bits.size()) + " coins, strategy has " +
                                               std::to_string(s.coins().size()));
  return s.parity_matrix().multiply(a.bits);
}

struct RowSource {
  enum class Kind { HeldCoin, Blackboard };
  Kind kind;
  std::size_t index;  ///< coin index or broadcast index

  friend bool operator==(const RowSource&, const RowSource&) = default;
};

/// A user's system B·X = y: unit rows for held coins, then one parity row per
/// broadcast written by somebody else.
struct DecoderSystem {
  Vertex user = 0;
  gf2::BitMatrix matrix;
  std::vector<RowSource> rhs_plan;
  std::vector<std::size_t> held_coins;
  gf2::RowReduction reduction;

  /// Full column rank, i.e. X is determined by the observations.
  [[nodiscard]] bool invertible() const { return reduction.rank() == matrix.cols(); }
  [[nodiscard]] bool square() const { return matrix.rows() == matrix.cols(); }

  /// Assembles y from the user's own coins and the blackboard.
  [[nodiscard]] gf2::BitVector rhs(const gf2::BitVector& held, const gf2::BitVector& blackboard) const {
    if (held.size() != held_coins.size())
      throw Error(ErrorCode::DomainMismatch, "held coins do not match user " + std::to_string(user));
    gf2::BitVector y(rhs_plan.size());
    std::size_t next_held = 0;
    for (std::size_t r = 0; r < rhs_plan.size(); ++r) {
      const auto& src = rhs_plan[r];
      y.set(r, src.kind == RowSource::Kind::HeldCoin ? held.get(next_held++) : blackboard.get(src.index));
    }
    return y;
  }
};

inline DecoderSystem build_decoder(const Strategy& s, Vertex user) {
  if (user < 1 || user > s.n())
    throw Error(ErrorCode::DomainMismatch, "user " + std::to_string(user) + " outside 1.." + std::to_string(s.n()));
  DecoderSystem dec;
  dec.user = user;
  dec.held_coins = s.held_coins(user);
  const auto cols = s.coins().size();
  dec.matrix = gf2::BitMatrix(0, cols);
  for (auto c : dec.held_coins) {
    gf2::BitVector unit(cols);
    unit.set(c);
    dec.matrix.append_row(std::move(unit));
    dec.rhs_plan.push_back({RowSource::Kind::HeldCoin, c});
  }
  const auto parity = s.parity_matrix();
  for (std::size_t j = 0; j < s.broadcasts().size(); ++j) {
    if (s.broadcasts()[j].speaker == user) continue;
    dec.matrix.append_row(parity.row(j));
    dec.rhs_plan.push_back({RowSource::Kind::Blackboard, j});
  }
  dec.reduction = gf2::row_reduce(dec.matrix);
  return dec;
}

/// The user's own coin values, in DecoderSystem::held_coins order.
inline gf2::BitVector held_bits(const DecoderSystem& dec, const CoinAssignment& a) {
  gf2::BitVector h(dec.held_coins.size());
  for (std::size_t i = 0; i < dec.held_coins.size(); ++i) h.set(i, a.bits.get(dec.held_coins[i]));
  return h;
}

namespace detail {

inline std::optional<CoinAssignment> try_decode(const DecoderSystem& dec, const gf2::BitVector& held,
                                                const gf2::BitVector& blackboard) {
  auto x = gf2::solve_reduced(dec.reduction, dec.rhs(held, blackboard));
  if (!x) return std::nullopt;
  return CoinAssignment{std::move(*x)};
}

}  // namespace detail

inline CoinAssignment decode(const DecoderSystem& dec, const gf2::BitVector& held, const gf2::BitVector& blackboard) {
  if (!dec.invertible())
    throw Error(ErrorCode::SingularSystem, "decoder of user " + std::to_string(dec.user) + " has rank " +
                                               std::to_string(dec.reduction.rank()) + " < " +
                                               std::to_string(dec.matrix.cols()));
  auto x = detail::try_decode(dec, held, blackboard);
  if (!x) throw Error(ErrorCode::Inconsistent, "observations of user " + std::to_string(dec.user) + " are inconsistent");
  return std::move(*x);
}

/// Deterministic 64-bit linear congruential generator (Knuth's MMIX constants):
/// state <- state * 6364136223846793005 + 1442695040888963407.
class Lcg64 {
 public:
  static constexpr std::uint64_t multiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t increment = 1442695040888963407ULL;

  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * multiplier + increment;
    return state_;
  }

  /// Uniform bit vector; each step contributes its upper 32 bits.
  gf2::BitVector bits(std::size_t n) {
    gf2::BitVector v(n);
    std::uint64_t chunk = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i % 32 == 0) chunk = next() >> 32;
      v.set(i, (chunk >> (i % 32)) & 1U);
    }
    return v;
  }

 private:
  std::uint64_t state_;
};

struct VerificationMode {
  enum class Kind { Exhaustive, Sampled };
  Kind kind = Kind::Exhaustive;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  static VerificationMode exhaustive() { return {}; }
  static VerificationMode sampled(std::uint64_t count, std::uint64_t seed) { return {Kind::Sampled, count, seed}; }
};

inline constexpr std::size_t exhaustive_coin_cap = 24;

struct UserVerification {
  Vertex user = 0;
  std::size_t rows = 0;
  std::size_t rank = 0;
  bool invertible = false;
  std::uint64_t failures = 0;  ///< assignments decoded wrongly or inconsistently
};

struct SimulationReport {
  bool zero_error = false;
  std::uint64_t assignments_checked = 0;
  Rational rate;
  Rational bound;
  bool algebraic_certificate = false;
  std::vector<UserVerification> per_user;
};

inline SimulationReport verify_zero_error(const Strategy& s, VerificationMode mode = VerificationMode::exhaustive()) {
  const auto c = s.coins().size();
  if (mode.kind == VerificationMode::Kind::Exhaustive && c > exhaustive_coin_cap)
    throw Error(ErrorCode::TooLarge, std::to_string(c) + " coins exceed the exhaustive cap of " +
                                         std::to_string(exhaustive_coin_cap) + "; use sampled mode");

  SimulationReport report;
  report.rate = s.rate();
  report.bound = s.bound();

  std::vector<DecoderSystem> decoders;
  for (Vertex u = 1; u <= s.n(); ++u) decoders.push_back(build_decoder(s, u));
  report.algebraic_certificate = true;
  for (const auto& d : decoders) {
    report.per_user.push_back({d.user, d.matrix.rows(), d.reduction.rank(), d.invertible(), 0});
    report.algebraic_certificate = report.algebraic_certificate && d.invertible();
  }

  const auto parity = s.parity_matrix();
  auto check = [&](const CoinAssignment& a) {
    const auto board = parity.multiply(a.bits);
    for (std::size_t u = 0; u < decoders.size(); ++u) {
      auto x = detail::try_decode(decoders[u], held_bits(decoders[u], a), board);
      if (!x || *x != a) ++report.per_user[u].failures;
    }
    ++report.assignments_checked;
  };

  if (mode.kind == VerificationMode::Kind::Exhaustive) {
    const std::uint64_t total = std::uint64_t{1} << c;
    for (std::uint64_t w = 0; w < total; ++w) check(assignment_from_word(s, w));
  } else {
    Lcg64 rng(mode.seed);
    for (std::uint64_t i = 0; i < mode.samples; ++i) check(CoinAssignment{rng.bits(c)});
  }

  report.zero_error = true;
  for (const auto& u : report.per_user) report.zero_error = report.zero_error && u.failures == 0;
  return report;
}

}  // namespace hypershare
