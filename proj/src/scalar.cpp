#include "pervpn/scalar.hpp"

#include <atomic>
#include <limits>
#include <stdexcept>

namespace pervpn {

namespace {

std::atomic<std::uint64_t> g_char{0};

constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();
constexpr __int128 kMin = -kMax;  // keep -INT64_MIN out of the fast path

bool fits(__int128 v) { return v >= kMin && v <= kMax; }

unsigned __int128 uabs(__int128 v) {
  return v < 0 ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
}

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t mod_p(__int128 v, std::uint64_t p) {
  __int128 r = v % static_cast<__int128>(p);
  if (r < 0) r += p;
  return static_cast<std::int64_t>(r);
}

std::int64_t mod_inverse(std::int64_t a, std::uint64_t p) {
  if (a == 0) throw std::domain_error("division by zero in F_p");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return mod_p(t, p);
}

mpz_class to_mpz(std::int64_t v) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), v);
  return z;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

void set_field_characteristic(std::uint64_t p) {
  if (p != 0 && (p >= (1ULL << 31) || !is_prime(p)))
    throw std::invalid_argument("field characteristic must be 0 or a prime below 2^31");
  g_char.store(p);
}

std::uint64_t field_characteristic() { return g_char.load(std::memory_order_relaxed); }

FieldScope::FieldScope(std::uint64_t p) : saved_(field_characteristic()) {
  set_field_characteristic(p);
}
FieldScope::~FieldScope() { set_field_characteristic(saved_); }

Scalar::Scalar(long long v) {
  const std::uint64_t p = field_characteristic();
  if (p != 0) {
    num_ = mod_p(v, p);
  } else if (fits(v)) {
    num_ = v;
  } else {
    set_big(mpq_class(to_mpz(v)));
  }
}

Scalar::Scalar(long long num, long long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  const std::uint64_t p = field_characteristic();
  if (p != 0) {
    num_ = static_cast<std::int64_t>(
        static_cast<__int128>(mod_p(num, p)) * mod_inverse(mod_p(den, p), p) % p);
    return;
  }
  normalize_small(num, den);
}

Scalar::Scalar(const mpq_class& q) {
  const std::uint64_t p = field_characteristic();
  if (p != 0) {
    mpz_class n = q.get_num() % p, d = q.get_den() % p;
    if (n < 0) n += p;
    num_ = static_cast<std::int64_t>(
        static_cast<__int128>(n.get_si()) * mod_inverse(d.get_si(), p) % p);
    return;
  }
  set_big(q);
}

Scalar::Scalar(const Scalar& o) : num_(o.num_), den_(o.den_) {
  if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
}

Scalar& Scalar::operator=(const Scalar& o) {
  if (this == &o) return *this;
  num_ = o.num_;
  den_ = o.den_;
  if (o.big_)
    big_ = std::make_unique<mpq_class>(*o.big_);
  else
    big_.reset();
  return *this;
}

Scalar Scalar::parse(std::string_view text) {
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0) throw std::invalid_argument("bad scalar: " + std::string(text));
  q.canonicalize();
  return Scalar(q);
}

void Scalar::set_big(mpq_class q) {
  q.canonicalize();
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p() &&
      fits(static_cast<__int128>(q.get_num().get_si()))) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
    return;
  }
  big_ = std::make_unique<mpq_class>(std::move(q));
  num_ = 0;
  den_ = 1;
}

void Scalar::normalize_small(__int128 num, __int128 den) {
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
  unsigned __int128 g = gcd128(uabs(num), static_cast<unsigned __int128>(den));
  if (g > 1) {
    num /= static_cast<__int128>(g);
    den /= static_cast<__int128>(g);
  }
  if (fits(num) && fits(den)) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
    return;
  }
  // Rebuild through GMP from the 128-bit halves.
  auto to_z = [](__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = uabs(v);
    mpz_class hi, lo;
    mpz_set_ui(hi.get_mpz_t(), static_cast<unsigned long>(u >> 64));
    mpz_set_ui(lo.get_mpz_t(), static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
    mpz_class z = (hi << 64) + lo;
    return neg ? mpz_class(-z) : z;
  };
  big_ = std::make_unique<mpq_class>(to_z(num), to_z(den));
  num_ = 0;
  den_ = 1;
}

mpq_class Scalar::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(to_mpz(num_), to_mpz(den_));
}

mpz_class Scalar::numerator() const { return big_ ? big_->get_num() : to_mpz(num_); }
mpz_class Scalar::denominator() const { return big_ ? big_->get_den() : to_mpz(den_); }

std::string Scalar::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Scalar Scalar::operator-() const {
  Scalar r;
  const std::uint64_t p = field_characteristic();
  if (p != 0) {
    r.num_ = num_ == 0 ? 0 : static_cast<std::int64_t>(p) - num_;
    return r;
  }
  if (big_) {
    r.set_big(-*big_);
    return r;
  }
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  const std::uint64_t p = field_characteristic();
  if (p != 0) {
    num_ += o.num_;
    if (num_ >= static_cast<std::int64_t>(p)) num_ -= static_cast<std::int64_t>(p);
    return *this;
  }
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      __int128 s = static_cast<__int128>(num_) + o.num_;
      if (fits(s)) {
        num_ = static_cast<std::int64_t>(s);
        return *this;
      }
    }
    normalize_small(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                    static_cast<__int128>(den_) * o.den_);
    return *this;
  }
  set_big(to_mpq() + o.to_mpq());
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  const std::uint64_t p = field_characteristic();
  if (p != 0) {
    num_ = static_cast<std::int64_t>(static_cast<__int128>(num_) * o.num_ % p);
    return *this;
  }
  if (!big_ && !o.big_) {
    if (num_ == 0 || o.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    std::int64_t g1 = gcd64(num_, o.den_), g2 = gcd64(o.num_, den_);
    __int128 n = static_cast<__int128>(num_ / g1) * (o.num_ / g2);
    __int128 d = static_cast<__int128>(den_ / g2) * (o.den_ / g1);
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
    normalize_small(n, d);
    return *this;
  }
  set_big(to_mpq() * o.to_mpq());
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  const std::uint64_t p = field_characteristic();
  Scalar r;
  if (p != 0) {
    r.num_ = mod_inverse(num_, p);
    return r;
  }
  if (big_) {
    r.set_big(1 / *big_);
    return r;
  }
  r.normalize_small(den_, num_);
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // big values never fit the small form
}

void sub_mul(Scalar& a, const Scalar& b, const Scalar& c) {
  if (b.is_zero() || c.is_zero()) return;
  a -= b * c;
}

}  // namespace pervpn
