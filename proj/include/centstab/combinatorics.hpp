#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace centstab {

// A weak composition shape: nonnegative parts, zeros allowed anywhere,
// order unconstrained.  Young diagrams, tableaux and tabloids of weak
// shape are all defined row by row.
class WeakPartition {
 public:
  WeakPartition() = default;
  explicit WeakPartition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int n() const { return n_; }

  // True when every part of inner fits inside the corresponding part
  // (missing rows of inner count as zero).
  bool contains(const WeakPartition& inner) const;
  bool is_partition() const;

  std::string str() const;

  auto operator<=>(const WeakPartition&) const = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// A partition: positive, nonincreasing parts.  The empty partition
// (of 0) is allowed and prints as "0".
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // throws ShapeError

  // Comma-separated parts, e.g. "5,2,1"; "0" or "" parses to the empty
  // partition.  Throws ParseError.
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int n() const { return n_; }
  int part(int i) const { return parts_[i]; }

  WeakPartition weak() const { return WeakPartition(parts_); }
  std::string str() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// A filling of the boxes of `shape` with 1..n, each used once.
// rows_[i] lists row i left to right.  Standardness is a predicate,
// not a subtype.
class Tableau {
 public:
  Tableau(WeakPartition shape, std::vector<std::vector<int>> rows);

  const WeakPartition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int n() const { return shape_.n(); }

  bool is_standard() const;
  std::vector<int> row_reading_word() const;
  std::string str() const;

  bool operator==(const Tableau&) const = default;

 private:
  WeakPartition shape_;
  std::vector<std::vector<int>> rows_;
};

// A tableau with the row order forgotten: each row is kept as a sorted
// sequence, and the canonical total order is lexicographic on the
// concatenated sorted rows.
class Tabloid {
 public:
  Tabloid(WeakPartition shape, std::vector<std::vector<int>> rows);
  static Tabloid of(const Tableau& t);

  const WeakPartition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int n() const { return shape_.n(); }

  // Row index holding a given entry.
  int row_of(int entry) const;

  std::string str() const;

  bool operator==(const Tabloid&) const = default;
  std::strong_ordering operator<=>(const Tabloid& other) const;

 private:
  WeakPartition shape_;
  std::vector<std::vector<int>> rows_;  // each sorted ascending
};

// --- shape operations ---

// Transpose of the Young diagram.
Partition conjugate(const Partition& mu);

// First part incremented: (mu1+1, mu2, ...).
Partition stab(const Partition& mu);
Partition stab_pow(const Partition& mu, int k);

// Append a new final row of size k (default 1).  Throws ShapeError when
// k exceeds the current last part.
Partition hatstab(const Partition& nu, int k = 1);
// k successive single-box row appends: (nu..., 1, 1, ..., 1).
Partition hatstab_pow(const Partition& nu, int k);

// nu[k]: add k to the last part.  Throws ShapeError when the result is
// not nonincreasing.
Partition bracket(const Partition& nu, int k);
// Same shape kept as a weak partition; never throws.  This is the form
// the generalized Specht modules consume.
WeakPartition bracket_weak(const Partition& nu, int k);

// All ordered length-k deletion sequences (1-based row indices) paired
// with the resulting shape.
std::vector<std::pair<std::vector<int>, Partition>> deletion_sequences(
    const Partition& mu, int k);

// All standard tableaux of shape mu, ordered lexicographically by
// row-reading word.
std::vector<Tableau> standard_tableaux(const Partition& mu);

// Entry of the last box of the first row.
int upper_right(const Tableau& t);

// Sum over standard tableaux t of mu of C(n - UR(t) + k, k); equals
// |standard_tableaux(stab_pow(mu, k))| for every k >= 0.
long long dim_poly(const Partition& mu, int k);

// Partitions of n in descending lexicographic order, (n) first.
std::vector<Partition> enumerate_partitions(int n);

// Tabloids of the given shape in canonical order.
std::vector<Tabloid> enumerate_tabloids(const WeakPartition& shape);
long long tabloid_count(const WeakPartition& shape);

long long binomial(int n, int k);

}  // namespace centstab
