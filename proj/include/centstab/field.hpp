#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace centstab {

// The coefficient field: the rationals, or a prime field F_p.
// Encoded by the characteristic (0 for Q); p is checked for primality
// at construction.
class Field {
 public:
  Field() = default;  // rationals

  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p);  // throws FieldError if p is not prime

  // "Q" or "Fp:<prime>".  Throws ParseError / FieldError.
  static Field parse(const std::string& spec);

  bool is_rationals() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }

  std::string spec() const;

  bool operator==(const Field&) const = default;

 private:
  std::uint64_t p_ = 0;
};

// An exact field element: a rational in lowest terms with positive
// denominator, or a residue in [0, p).
//
// Rationals keep numerator and denominator inline while both fit in
// 32 bits; larger values escalate to a shared immutable mpq.  Almost
// every scalar in this workbench is 0 or +-1, so the inline path is the
// hot one and zero never touches the heap.
class Scalar {
 public:
  Scalar() : Scalar(Field::rationals()) {}
  explicit Scalar(const Field& f) : field_(f) {}

  static Scalar zero(const Field& f) { return Scalar(f); }
  static Scalar one(const Field& f) { return from_int(f, 1); }
  static Scalar from_int(const Field& f, long long v);
  static Scalar from_mpq(const Field& f, const mpq_class& q);
  // "12", "-3", or "3/7" (the slashed form reduces mod p over F_p).
  static Scalar parse(const Field& f, const std::string& text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;  // throws LinalgError on zero

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Exact rational value; only valid over the rationals.
  mpq_class rational() const;
  std::uint64_t residue() const { return static_cast<std::uint64_t>(num_); }

  std::string str() const;

 private:
  void check_same_field(const Scalar& o) const;
  // Installs a reduced value, demoting to the inline form when it fits.
  void set_from_i128(__int128 num, __int128 den);
  void set_from_mpq(const mpq_class& q);

  Field field_;
  // Rationals: value num_/den_ when big_ is null, else *big_.
  // F_p: the residue lives in num_ and den_ is 1.
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

}  // namespace centstab
