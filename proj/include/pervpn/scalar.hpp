#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pervpn {

// Characteristic of the working field. 0 means the rationals; otherwise a
// prime below 2^31. Set it before building any algebra and leave it alone
// while objects from the old field are alive.
void set_field_characteristic(std::uint64_t p);
std::uint64_t field_characteristic();

class FieldScope {
 public:
  explicit FieldScope(std::uint64_t p);
  ~FieldScope();
  FieldScope(const FieldScope&) = delete;
  FieldScope& operator=(const FieldScope&) = delete;

 private:
  std::uint64_t saved_;
};

// Exact field element. Over Q a reduced fraction with an int64 fast path
// and a GMP fallback; over F_p a residue in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long long v);  // NOLINT(google-explicit-constructor)
  Scalar(long long num, long long den);
  explicit Scalar(const mpq_class& q);

  Scalar(const Scalar& o);
  Scalar(Scalar&&) noexcept = default;
  Scalar& operator=(const Scalar& o);
  Scalar& operator=(Scalar&&) noexcept = default;
  ~Scalar() = default;

  static Scalar parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_small() const { return !big_; }

  mpq_class to_mpq() const;
  std::string str() const;
  // Integer numerator/denominator, exact (only meaningful over Q).
  mpz_class numerator() const;
  mpz_class denominator() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  void set_big(mpq_class q);
  void normalize_small(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

// a - b*c, the elimination kernel.
void sub_mul(Scalar& a, const Scalar& b, const Scalar& c);

}  // namespace pervpn
