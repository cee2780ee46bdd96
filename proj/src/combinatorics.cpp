#include "centstab/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "centstab/errors.hpp"

namespace centstab {

WeakPartition::WeakPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 0) throw ShapeError("weak partition parts must be nonnegative");
    n_ += p;
  }
}

bool WeakPartition::contains(const WeakPartition& inner) const {
  for (int i = 0; i < inner.rows(); ++i) {
    int outer = i < rows() ? parts_[i] : 0;
    if (inner.parts()[i] > outer) return false;
  }
  return true;
}

bool WeakPartition::is_partition() const {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) return false;
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) return false;
  }
  return true;
}

std::string WeakPartition::str() const {
  if (parts_.empty()) return "0";
  std::ostringstream out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ',';
    out << parts_[i];
  }
  return out.str();
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw ShapeError("partition parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw ShapeError("partition parts must be nonincreasing: " + str());
    n_ += parts_[i];
  }
}

Partition Partition::parse(const std::string& text) {
  if (text.empty() || text == "0") return Partition();
  std::vector<int> parts;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    size_t pos = 0;
    int v;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad partition part '" + tok + "'");
    }
    if (pos != tok.size()) throw ParseError("bad partition part '" + tok + "'");
    parts.push_back(v);
  }
  if (text.back() == ',') throw ParseError("trailing comma in partition '" + text + "'");
  try {
    return Partition(parts);
  } catch (const ShapeError& e) {
    throw ParseError(e.what());
  }
}

std::string Partition::str() const { return weak().str(); }

Tableau::Tableau(WeakPartition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.rows())
    throw ShapeError("tableau row count does not match shape");
  std::vector<char> seen(shape_.n() + 1, 0);
  for (int i = 0; i < shape_.rows(); ++i) {
    if (static_cast<int>(rows_[i].size()) != shape_.parts()[i])
      throw ShapeError("tableau row length does not match shape");
    for (int v : rows_[i]) {
      if (v < 1 || v > shape_.n() || seen[v])
        throw ShapeError("tableau filling is not a bijection onto 1..n");
      seen[v] = 1;
    }
  }
}

bool Tableau::is_standard() const {
  for (int r = 0; r < shape_.rows(); ++r) {
    const auto& row = rows_[r];
    for (size_t c = 0; c + 1 < row.size(); ++c)
      if (row[c] >= row[c + 1]) return false;
    if (r + 1 < shape_.rows()) {
      const auto& below = rows_[r + 1];
      for (size_t c = 0; c < below.size(); ++c) {
        if (c >= row.size() || row[c] >= below[c]) return false;
      }
    }
  }
  return true;
}

std::vector<int> Tableau::row_reading_word() const {
  std::vector<int> word;
  word.reserve(n());
  for (const auto& row : rows_) word.insert(word.end(), row.begin(), row.end());
  return word;
}

std::string Tableau::str() const {
  std::ostringstream out;
  out << '[';
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (r) out << '|';
    for (size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) out << ',';
      out << rows_[r][c];
    }
  }
  out << ']';
  return out.str();
}

Tabloid::Tabloid(WeakPartition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.rows())
    throw ShapeError("tabloid row count does not match shape");
  std::vector<char> seen(shape_.n() + 1, 0);
  for (int i = 0; i < shape_.rows(); ++i) {
    if (static_cast<int>(rows_[i].size()) != shape_.parts()[i])
      throw ShapeError("tabloid row size does not match shape");
    std::sort(rows_[i].begin(), rows_[i].end());
    for (int v : rows_[i]) {
      if (v < 1 || v > shape_.n() || seen[v])
        throw ShapeError("tabloid rows do not partition 1..n");
      seen[v] = 1;
    }
  }
}

Tabloid Tabloid::of(const Tableau& t) { return Tabloid(t.shape(), t.rows()); }

int Tabloid::row_of(int entry) const {
  for (size_t r = 0; r < rows_.size(); ++r)
    if (std::binary_search(rows_[r].begin(), rows_[r].end(), entry))
      return static_cast<int>(r);
  throw ShapeError("entry not present in tabloid");
}

std::string Tabloid::str() const {
  std::ostringstream out;
  out << '{';
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (r) out << '|';
    for (size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) out << ',';
      out << rows_[r][c];
    }
  }
  out << '}';
  return out.str();
}

std::strong_ordering Tabloid::operator<=>(const Tabloid& other) const {
  if (auto c = shape_ <=> other.shape_; c != 0) return c;
  for (size_t r = 0; r < rows_.size(); ++r) {
    for (size_t c = 0; c < rows_[r].size(); ++c) {
      if (auto cmp = rows_[r][c] <=> other.rows_[r][c]; cmp != 0) return cmp;
    }
  }
  return std::strong_ordering::equal;
}

Partition conjugate(const Partition& mu) {
  if (mu.rows() == 0) return Partition();
  std::vector<int> parts(mu.part(0), 0);
  for (int p : mu.parts())
    for (int j = 0; j < p; ++j) parts[j] += 1;
  return Partition(parts);
}

Partition stab(const Partition& mu) {
  if (mu.rows() == 0) throw ShapeError("stab of the empty partition");
  auto parts = mu.parts();
  parts[0] += 1;
  return Partition(parts);
}

Partition stab_pow(const Partition& mu, int k) {
  Partition out = mu;
  for (int i = 0; i < k; ++i) out = stab(out);
  return out;
}

Partition hatstab(const Partition& nu, int k) {
  if (k < 1) throw ShapeError("hatstab needs a positive row size");
  if (nu.rows() > 0 && k > nu.parts().back())
    throw ShapeError("hatstab row exceeds the last part of " + nu.str());
  auto parts = nu.parts();
  parts.push_back(k);
  return Partition(parts);
}

Partition hatstab_pow(const Partition& nu, int k) {
  Partition out = nu;
  for (int i = 0; i < k; ++i) out = hatstab(out);
  return out;
}

Partition bracket(const Partition& nu, int k) {
  if (k < 0) throw ShapeError("bracket needs k >= 0");
  if (k == 0) return nu;
  if (nu.rows() == 0) throw ShapeError("bracket of the empty partition");
  auto parts = nu.parts();
  parts.back() += k;
  if (parts.size() >= 2 && parts.back() > parts[parts.size() - 2])
    throw ShapeError("bracket result is not nonincreasing for " + nu.str() +
                     "[" + std::to_string(k) + "]");
  return Partition(parts);
}

WeakPartition bracket_weak(const Partition& nu, int k) {
  if (k < 0) throw ShapeError("bracket needs k >= 0");
  if (nu.rows() == 0) {
    if (k == 0) return WeakPartition();
    throw ShapeError("bracket of the empty partition");
  }
  auto parts = nu.parts();
  parts.back() += k;
  return WeakPartition(parts);
}

namespace {

std::vector<int> deletable_rows(const std::vector<int>& parts) {
  std::vector<int> rows;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] >= 1 && (i + 1 == parts.size() || parts[i] > parts[i + 1]))
      rows.push_back(static_cast<int>(i));
  }
  return rows;
}

void collect_deletions(std::vector<int>& parts, int k, std::vector<int>& seq,
                       std::vector<std::pair<std::vector<int>, Partition>>& out) {
  if (k == 0) {
    std::vector<int> trimmed;
    for (int p : parts)
      if (p > 0) trimmed.push_back(p);
    out.emplace_back(seq, Partition(trimmed));
    return;
  }
  for (int r : deletable_rows(parts)) {
    parts[r] -= 1;
    seq.push_back(r + 1);  // 1-based row indices
    collect_deletions(parts, k - 1, seq, out);
    seq.pop_back();
    parts[r] += 1;
  }
}

}  // namespace

std::vector<std::pair<std::vector<int>, Partition>> deletion_sequences(
    const Partition& mu, int k) {
  if (k < 0 || k > mu.n()) throw ShapeError("deletion sequence length out of range");
  std::vector<std::pair<std::vector<int>, Partition>> out;
  std::vector<int> parts = mu.parts();
  std::vector<int> seq;
  collect_deletions(parts, k, seq, out);
  return out;
}

std::vector<Tableau> standard_tableaux(const Partition& mu) {
  std::vector<Tableau> out;
  int n = mu.n();
  std::vector<std::vector<int>> rows(mu.rows());
  std::vector<int> filled(mu.rows(), 0);

  // Place 1..n one at a time; entry v may go at the end of row r when the
  // row has room and the row above is strictly longer so far.
  std::function<void(int)> place = [&](int v) {
    if (v > n) {
      out.emplace_back(mu.weak(), rows);
      return;
    }
    for (int r = 0; r < mu.rows(); ++r) {
      if (filled[r] >= mu.part(r)) continue;
      if (r > 0 && filled[r - 1] <= filled[r]) continue;
      rows[r].push_back(v);
      filled[r] += 1;
      place(v + 1);
      rows[r].pop_back();
      filled[r] -= 1;
    }
  };
  place(1);

  std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
    return a.row_reading_word() < b.row_reading_word();
  });
  return out;
}

int upper_right(const Tableau& t) {
  if (t.shape().rows() == 0 || t.rows()[0].empty())
    throw ShapeError("upper_right needs a nonempty first row");
  return t.rows()[0].back();
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long dim_poly(const Partition& mu, int k) {
  long long total = 0;
  for (const Tableau& t : standard_tableaux(mu))
    total += binomial(mu.n() - upper_right(t) + k, k);
  return total;
}

namespace {

void collect_partitions(int remaining, int max_part, std::vector<int>& acc,
                        std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    collect_partitions(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw ShapeError("enumerate_partitions needs n >= 0");
  std::vector<Partition> out;
  std::vector<int> acc;
  collect_partitions(n, n, acc, out);
  return out;
}

std::vector<Tabloid> enumerate_tabloids(const WeakPartition& shape) {
  std::vector<Tabloid> out;
  int n = shape.n();
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);

  std::vector<std::vector<int>> rows(shape.rows());
  // Choose row contents row by row; subsets enumerated in lexicographic
  // order so the canonical tabloid order falls out of the recursion.
  std::function<void(int, std::vector<int>&)> fill = [&](int r, std::vector<int>& rest) {
    if (r == shape.rows()) {
      out.emplace_back(shape, rows);
      return;
    }
    int need = shape.parts()[r];
    std::vector<int> chosen;
    std::function<void(size_t)> choose = [&](size_t from) {
      if (static_cast<int>(chosen.size()) == need) {
        std::vector<int> remaining;
        for (int v : rest)
          if (!std::binary_search(chosen.begin(), chosen.end(), v))
            remaining.push_back(v);
        rows[r] = chosen;
        fill(r + 1, remaining);
        return;
      }
      for (size_t i = from; i < rest.size(); ++i) {
        chosen.push_back(rest[i]);
        choose(i + 1);
        chosen.pop_back();
      }
    };
    choose(0);
  };
  fill(0, all);

  std::sort(out.begin(), out.end());
  return out;
}

long long tabloid_count(const WeakPartition& shape) {
  long long count = 1;
  int placed = 0;
  for (int p : shape.parts()) {
    count *= binomial(placed + p, p);
    placed += p;
  }
  return count;
}

}  // namespace centstab
