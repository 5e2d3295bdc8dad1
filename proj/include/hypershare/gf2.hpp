#pragma once

// Dense linear algebra over the two-element field. Addition is XOR and
// multiplication is AND; rows are packed into 64-bit words.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hypershare::gf2 {

class BitVector {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_(word_count(size), 0) {}
  BitVector(std::initializer_list<int> bits) : BitVector(bits.size()) {
    std::size_t i = 0;
    for (int b : bits) set(i++, b != 0);
  }

  /// Parses a string of '0'/'1' characters, index 0 first.
  static BitVector from_string(std::string_view s) {
    BitVector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] != '0' && s[i] != '1') throw std::invalid_argument("BitVector: bad character");
      v.set(i, s[i] == '1');
    }
    return v;
  }

  /// Low `size` bits of `value`, bit i of the integer becoming entry i.
  static BitVector from_word(std::size_t size, word_type value) {
    if (size > word_bits) throw std::invalid_argument("BitVector::from_word: size > 64");
    BitVector v(size);
    if (size > 0) v.words_[0] = size == word_bits ? value : value & ((word_type{1} << size) - 1);
    return v;
  }

  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] bool empty() const { return size_ == 0; }

  [[nodiscard]] bool get(std::size_t i) const {
    check(i);
    return (words_[i / word_bits] >> (i % word_bits)) & 1U;
  }
  [[nodiscard]] bool operator[](std::size_t i) const { return get(i); }

  void set(std::size_t i, bool value = true) {
    check(i);
    const word_type mask = word_type{1} << (i % word_bits);
    if (value)
      words_[i / word_bits] |= mask;
    else
      words_[i / word_bits] &= ~mask;
  }

  void flip(std::size_t i) {
    check(i);
    words_[i / word_bits] ^= word_type{1} << (i % word_bits);
  }

  BitVector& operator^=(const BitVector& other) {
    if (other.size_ != size_) throw std::invalid_argument("BitVector: size mismatch in xor");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

  /// Inner product over GF(2).
  [[nodiscard]] bool dot(const BitVector& other) const {
    if (other.size_ != size_) throw std::invalid_argument("BitVector: size mismatch in dot");
    word_type acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return (std::popcount(acc) & 1) != 0;
  }

  [[nodiscard]] std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  [[nodiscard]] bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](word_type w) { return w != 0; });
  }
  [[nodiscard]] bool none() const { return !any(); }

  /// Index of the lowest set bit at or after `from`, or size() if none.
  [[nodiscard]] std::size_t find_next(std::size_t from) const {
    if (from >= size_) return size_;
    std::size_t w = from / word_bits;
    word_type cur = words_[w] & (~word_type{0} << (from % word_bits));
    while (true) {
      if (cur != 0) return w * word_bits + static_cast<std::size_t>(std::countr_zero(cur));
      if (++w == words_.size()) return size_;
      cur = words_[w];
    }
  }
  [[nodiscard]] std::size_t find_first() const { return find_next(0); }

  /// The vector as an integer (entry i is bit i); requires size() <= 64.
  [[nodiscard]] word_type to_word() const {
    if (size_ > word_bits) throw std::invalid_argument("BitVector::to_word: size > 64");
    return words_.empty() ? 0 : words_[0];
  }

  [[nodiscard]] std::string to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

  friend std::ostream& operator<<(std::ostream& os, const BitVector& v) { return os << v.to_string(); }

 private:
  static std::size_t word_count(std::size_t bits) { return (bits + word_bits - 1) / word_bits; }
  void check(std::size_t i) const {
    if (i >= size_) throw std::out_of_range("BitVector index out of range");
  }

  std::size_t size_ = 0;
  std::vector<word_type> words_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

  /// Builds from explicit 0/1 rows; all rows must have equal length.
  BitMatrix(std::initializer_list<std::initializer_list<int>> rows)
      : cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("BitMatrix: ragged rows");
      rows_.emplace_back(r);
    }
  }

  static BitMatrix from_rows(std::size_t cols, std::vector<BitVector> rows) {
    BitMatrix m;
    m.cols_ = cols;
    for (const auto& r : rows)
      if (r.size() != cols) throw std::invalid_argument("BitMatrix::from_rows: row length mismatch");
    m.rows_ = std::move(rows);
    return m;
  }

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_.size(); }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  [[nodiscard]] bool get(std::size_t r, std::size_t c) const { return row(r).get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { row(r).set(c, value); }

  [[nodiscard]] const BitVector& row(std::size_t r) const {
    if (r >= rows_.size()) throw std::out_of_range("BitMatrix row out of range");
    return rows_[r];
  }
  BitVector& row(std::size_t r) {
    if (r >= rows_.size()) throw std::out_of_range("BitMatrix row out of range");
    return rows_[r];
  }

  void append_row(BitVector r) {
    if (r.size() != cols_) throw std::invalid_argument("BitMatrix::append_row: length mismatch");
    rows_.push_back(std::move(r));
  }

  void swap_rows(std::size_t a, std::size_t b) { std::swap(row(a), row(b)); }

  [[nodiscard]] BitMatrix transpose() const {
    BitMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
      for (auto c = rows_[r].find_first(); c < cols_; c = rows_[r].find_next(c + 1)) t.set(c, r);
    return t;
  }

  /// this · v, with v a column vector of length cols().
  [[nodiscard]] BitVector multiply(const BitVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("BitMatrix::multiply: length mismatch");
    BitVector out(rows());
    for (std::size_t r = 0; r < rows(); ++r) out.set(r, rows_[r].dot(v));
    return out;
  }

  /// this · other.
  [[nodiscard]] BitMatrix multiply(const BitMatrix& other) const {
    if (other.rows() != cols_) throw std::invalid_argument("BitMatrix::multiply: shape mismatch");
    BitMatrix out(rows(), other.cols());
    for (std::size_t r = 0; r < rows(); ++r)
      for (auto c = rows_[r].find_first(); c < cols_; c = rows_[r].find_next(c + 1))
        out.rows_[r] ^= other.rows_[c];
    return out;
  }

  /// Row-vector product v · this, i.e. the XOR of the rows selected by v.
  [[nodiscard]] BitVector combine_rows(const BitVector& selector) const {
    if (selector.size() != rows()) throw std::invalid_argument("BitMatrix::combine_rows: length mismatch");
    BitVector out(cols_);
    for (auto r = selector.find_first(); r < rows(); r = selector.find_next(r + 1)) out ^= rows_[r];
    return out;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const BitMatrix& m) {
    for (const auto& r : m.rows_) os << r << '\n';
    return os;
  }

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

struct RowReduction {
  BitMatrix reduced;                        ///< reduced row-echelon form
  std::vector<std::size_t> pivot_columns;   ///< strictly increasing
  BitMatrix row_ops;                        ///< row_ops · input == reduced

  [[nodiscard]] std::size_t rank() const { return pivot_columns.size(); }
};

/// Gauss-Jordan elimination. Pivot rows end up on top, in pivot-column order.
inline RowReduction row_reduce(const BitMatrix& m) {
  RowReduction out{m, {}, BitMatrix::identity(m.rows())};
  auto& a = out.reduced;
  auto& ops = out.row_ops;
  std::size_t next = 0;
  for (std::size_t c = 0; c < a.cols() && next < a.rows(); ++c) {
    std::size_t p = next;
    while (p < a.rows() && !a.get(p, c)) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, next);
    ops.swap_rows(p, next);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r != next && a.get(r, c)) {
        a.row(r) ^= a.row(next);
        ops.row(r) ^= ops.row(next);
      }
    }
    out.pivot_columns.push_back(c);
    ++next;
  }
  return out;
}

inline std::size_t rank(const BitMatrix& m) {
  // Forward elimination only; no transform bookkeeping.
  std::vector<BitVector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  std::size_t rk = 0;
  for (std::size_t c = 0; c < m.cols() && rk < rows.size(); ++c) {
    std::size_t p = rk;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rk]);
    for (std::size_t r = rk + 1; r < rows.size(); ++r)
      if (rows[r].get(c)) rows[r] ^= rows[rk];
    ++rk;
  }
  return rk;
}

/// Solves a · x = y from a precomputed reduction of `a`. Free variables are
/// fixed to zero. Returns nullopt when the system is inconsistent.
inline std::optional<BitVector> solve_reduced(const RowReduction& red, const BitVector& y) {
  if (y.size() != red.row_ops.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  const BitVector ty = red.row_ops.multiply(y);
  for (std::size_t r = red.rank(); r < ty.size(); ++r)
    if (ty.get(r)) return std::nullopt;
  BitVector x(red.reduced.cols());
  for (std::size_t i = 0; i < red.rank(); ++i) x.set(red.pivot_columns[i], ty.get(i));
  return x;
}

inline std::optional<BitVector> solve(const BitMatrix& a, const BitVector& y) {
  if (y.size() != a.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  return solve_reduced(row_reduce(a), y);
}

struct RowSpaceMembership {
  bool member = false;
  std::vector<std::size_t> combination;  ///< row indices whose XOR is v (sorted)
};

/// Decides whether v lies in the row space of m and, if so, names rows that
/// XOR to it (the set produced by echelon back-substitution, not a minimal one).
inline RowSpaceMembership in_row_space(const BitMatrix& m, const BitVector& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("in_row_space: length mismatch");
  // v ∈ rowspace(m)  ⇔  mᵀ · s = v is solvable for the selector s.
  auto s = solve(m.transpose(), v);
  if (!s) return {};
  RowSpaceMembership out{true, {}};
  for (auto r = s->find_first(); r < s->size(); r = s->find_next(r + 1)) out.combination.push_back(r);
  return out;
}

/// Incrementally grown row basis kept in echelon form; used for greedy
/// selection of linearly independent rows in a fixed scan order.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t cols) : cols_(cols) {}

  /// Adds v if it is independent of the rows inserted so far.
  bool insert(BitVector v) {
    if (v.size() != cols_) throw std::invalid_argument("EchelonBasis: length mismatch");
    reduce(v);
    const auto lead = v.find_first();
    if (lead == cols_) return false;
    auto pos = std::lower_bound(leads_.begin(), leads_.end(), lead) - leads_.begin();
    leads_.insert(leads_.begin() + pos, lead);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

  [[nodiscard]] bool contains(BitVector v) const {
    reduce(v);
    return v.none();
  }

  [[nodiscard]] std::size_t rank() const { return rows_.size(); }

 private:
  void reduce(BitVector& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (v.get(leads_[i])) v ^= rows_[i];
  }

  std::size_t cols_;
  std::vector<std::size_t> leads_;
  std::vector<BitVector> rows_;
};

inline std::vector<BitVector> nullspace_basis(const BitMatrix& m) {
  const auto red = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : red.pivot_columns) is_pivot[c] = true;
  std::vector<BitVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    BitVector v(m.cols());
    v.set(f);
    for (std::size_t i = 0; i < red.rank(); ++i)
      if (red.reduced.get(i, f)) v.set(red.pivot_columns[i]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace hypershare::gf2
