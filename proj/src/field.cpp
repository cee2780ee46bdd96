#include "centstab/field.hpp"

#include <numeric>

#include "centstab/errors.hpp"

namespace centstab {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  unsigned __int128 acc = 1, base = b % p;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(acc);
}

// Inline numerator/denominator bound; products of two inline values fit
// in 64 bits and cross sums in 128.
constexpr std::int64_t kInlineMax = (std::int64_t{1} << 31) - 1;

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class mpz_from_i128(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v)
                              : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(mag >> 64));
  mpz_class out = (hi << 64) + static_cast<unsigned long>(mag);
  return neg ? mpz_class(-out) : out;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw FieldError("modulus " + std::to_string(p) + " is not prime");
  Field f;
  f.p_ = p;
  return f;
}

Field Field::parse(const std::string& spec) {
  if (spec == "Q") return rationals();
  if (spec.rfind("Fp:", 0) == 0) {
    const std::string num = spec.substr(3);
    if (num.empty() || num.size() > 18 ||
        num.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad field spec '" + spec + "'");
    return prime(std::stoull(num));
  }
  throw ParseError("bad field spec '" + spec + "' (want Q or Fp:<prime>)");
}

std::string Field::spec() const {
  return is_rationals() ? "Q" : "Fp:" + std::to_string(p_);
}

void Scalar::set_from_i128(__int128 num, __int128 den) {
  if (den == 0) throw LinalgError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    big_.reset();
    return;
  }
  const __int128 g = gcd128(num, den);
  num /= g;
  den /= g;
  if (num <= kInlineMax && num >= -kInlineMax && den <= kInlineMax) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
    return;
  }
  mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
  // Already reduced; canonicalize only normalizes the sign bookkeeping.
  q.canonicalize();
  num_ = 0;
  den_ = 1;
  big_ = std::make_shared<const mpq_class>(std::move(q));
}

void Scalar::set_from_mpq(const mpq_class& q) {
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    const long n = q.get_num().get_si(), d = q.get_den().get_si();
    if (n <= kInlineMax && n >= -kInlineMax && d <= kInlineMax) {
      num_ = n;
      den_ = d;
      big_.reset();
      return;
    }
  }
  num_ = 0;
  den_ = 1;
  big_ = std::make_shared<const mpq_class>(q);
}

Scalar Scalar::from_int(const Field& f, long long v) {
  Scalar s(f);
  if (f.is_rationals()) {
    s.set_from_i128(v, 1);
  } else {
    long long m = v % static_cast<long long>(f.characteristic());
    if (m < 0) m += static_cast<long long>(f.characteristic());
    s.num_ = m;
  }
  return s;
}

Scalar Scalar::from_mpq(const Field& f, const mpq_class& q) {
  Scalar s(f);
  if (f.is_rationals()) {
    mpq_class canon = q;
    canon.canonicalize();
    s.set_from_mpq(canon);
    return s;
  }
  const std::uint64_t p = f.characteristic();
  mpz_class num = q.get_num() % static_cast<unsigned long>(p);
  if (num < 0) num += static_cast<unsigned long>(p);
  mpz_class den = q.get_den() % static_cast<unsigned long>(p);
  if (den == 0) throw LinalgError("denominator vanishes in F_" + std::to_string(p));
  s.num_ = static_cast<std::int64_t>(
      (unsigned __int128)num.get_ui() * mod_pow(den.get_ui(), p - 2, p) % p);
  return s;
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  try {
    mpq_class q(text);
    q.canonicalize();
    return from_mpq(f, q);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad scalar '" + text + "'");
  }
}

bool Scalar::is_zero() const {
  return big_ == nullptr && num_ == 0;  // big values are never zero
}

bool Scalar::is_one() const {
  return big_ == nullptr && num_ == 1 && (field_.is_rationals() ? den_ == 1 : true);
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw FieldMismatchError("mixed-field arithmetic: " + field_.spec() + " vs " +
                             o.field_.spec());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar s(field_);
  if (!field_.is_rationals()) {
    s.num_ = static_cast<std::int64_t>(
        (static_cast<std::uint64_t>(num_) + static_cast<std::uint64_t>(o.num_)) %
        field_.characteristic());
    return s;
  }
  if (big_ == nullptr && o.big_ == nullptr) {
    s.set_from_i128(static_cast<__int128>(num_) * o.den_ +
                        static_cast<__int128>(o.num_) * den_,
                    static_cast<__int128>(den_) * o.den_);
  } else {
    s.set_from_mpq(mpq_class(rational() + o.rational()));
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar s(field_);
  if (!field_.is_rationals()) {
    s.num_ = static_cast<std::int64_t>(
        (unsigned __int128)num_ * static_cast<std::uint64_t>(o.num_) %
        field_.characteristic());
    return s;
  }
  if (big_ == nullptr && o.big_ == nullptr) {
    s.set_from_i128(static_cast<__int128>(num_) * o.num_,
                    static_cast<__int128>(den_) * o.den_);
  } else {
    s.set_from_mpq(mpq_class(rational() * o.rational()));
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (!field_.is_rationals()) {
    if (s.num_ != 0) s.num_ = static_cast<std::int64_t>(field_.characteristic()) - s.num_;
    return s;
  }
  if (big_ == nullptr) {
    s.num_ = -s.num_;
  } else {
    s.big_ = std::make_shared<const mpq_class>(-*big_);
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw LinalgError("inverse of zero");
  Scalar s(field_);
  if (!field_.is_rationals()) {
    const std::uint64_t p = field_.characteristic();
    s.num_ = static_cast<std::int64_t>(
        mod_pow(static_cast<std::uint64_t>(num_), p - 2, p));
    return s;
  }
  if (big_ == nullptr) {
    s.set_from_i128(num_ < 0 ? -den_ : den_, num_ < 0 ? -num_ : num_);
  } else {
    s.set_from_mpq(mpq_class(1 / *big_));
  }
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  // Values are kept inline whenever they fit, so representations match.
  if ((big_ == nullptr) != (o.big_ == nullptr)) return false;
  if (big_) return *big_ == *o.big_;
  return num_ == o.num_ && (field_.is_rationals() ? den_ == o.den_ : true);
}

mpq_class Scalar::rational() const {
  if (!field_.is_rationals())
    throw FieldMismatchError("rational() called on an F_p scalar");
  if (big_) return *big_;
  return mpq_class(static_cast<long>(num_), static_cast<long>(den_));
}

std::string Scalar::str() const {
  if (!field_.is_rationals()) return std::to_string(num_);
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace centstab
