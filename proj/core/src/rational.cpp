#include "irvmargin/rational.hpp"

#include <gmpxx.h>

#include <cmath>
#include <limits>
#include <bit>
#include <utility>
#include <ostream>
#include <stdexcept>

namespace irvmargin {

namespace detail {
struct BigRational {
  mpq_class value;
};
void BigRationalDeleter::operator()(BigRational* p) const noexcept { delete p; }
}  // namespace detail

struct RationalAccess {
  static mpq_class to_mpq(const Rational& r) {
    if (r.big_) return r.big_->value;
    mpq_class q;
    mpz_set_si(q.get_num_mpz_t(), r.num_);
    mpz_set_si(q.get_den_mpz_t(), r.den_);
    return q;
  }

  // `q` must be canonical.
  static Rational from_mpq(mpq_class q) {
    Rational r;
    if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
      r.num_ = mpz_get_si(q.get_num_mpz_t());
      r.den_ = mpz_get_si(q.get_den_mpz_t());
      return r;
    }
    r.num_ = 0;
    r.den_ = 1;
    r.big_.reset(new detail::BigRational{std::move(q)});
    return r;
  }

  static void set_wide(mpz_t z, detail::WideUint magnitude, bool negative) {
    auto hi = static_cast<std::uint64_t>(magnitude >> 64);
    auto lo = static_cast<std::uint64_t>(magnitude);
    mpz_import(z, 1, 1, sizeof(hi), 0, 0, &hi);
    mpz_mul_2exp(z, z, 64);
    mpz_class low;
    mpz_import(low.get_mpz_t(), 1, 1, sizeof(lo), 0, 0, &lo);
    mpz_add(z, z, low.get_mpz_t());
    if (negative) mpz_neg(z, z);
  }
};

namespace {

detail::WideUint gcd_wide(detail::WideUint a, detail::WideUint b) {
  while (b != 0) {
    auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Binary gcd; both arguments nonzero.
std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  const int shift = std::countr_zero(a | b);
  a >>= std::countr_zero(a);
  do {
    b >>= std::countr_zero(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

constexpr detail::WideInt kMax64 = std::numeric_limits<std::int64_t>::max();

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(detail::WideInt num, detail::WideInt den) {
  if (den == 0) throw std::domain_error("division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  bool negative = num < 0;
  auto mag = static_cast<detail::WideUint>(negative ? -num : num);
  auto uden = static_cast<detail::WideUint>(den);
  if (mag == 0) return Rational();
  constexpr detail::WideUint kMaxU64 = std::numeric_limits<std::uint64_t>::max();
  detail::WideUint g;
  if (mag <= kMaxU64 && uden <= kMaxU64) {
    g = gcd64(static_cast<std::uint64_t>(mag), static_cast<std::uint64_t>(uden));
  } else {
    g = gcd_wide(mag, uden);
  }
  mag /= g;
  uden /= g;
  if (mag <= static_cast<detail::WideUint>(kMax64) &&
      uden <= static_cast<detail::WideUint>(kMax64)) {
    Rational r;
    r.num_ = negative ? -static_cast<std::int64_t>(mag) : static_cast<std::int64_t>(mag);
    r.den_ = static_cast<std::int64_t>(uden);
    return r;
  }
  mpq_class q;
  RationalAccess::set_wide(q.get_num_mpz_t(), mag, negative);
  RationalAccess::set_wide(q.get_den_mpz_t(), uden, false);
  return RationalAccess::from_mpq(std::move(q));
}

Rational Rational::big_add(const Rational& a, const Rational& b, bool subtract) {
  mpq_class r = subtract ? mpq_class(RationalAccess::to_mpq(a) - RationalAccess::to_mpq(b))
                         : mpq_class(RationalAccess::to_mpq(a) + RationalAccess::to_mpq(b));
  return RationalAccess::from_mpq(std::move(r));
}

Rational Rational::big_mul(const Rational& a, const Rational& b) {
  mpq_class r = RationalAccess::to_mpq(a) * RationalAccess::to_mpq(b);
  return RationalAccess::from_mpq(std::move(r));
}

int Rational::big_cmp(const Rational& a, const Rational& b) {
  int c = cmp(RationalAccess::to_mpq(a), RationalAccess::to_mpq(b));
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

void Rational::copy_big(const Rational& other) {
  big_.reset(new detail::BigRational{other.big_->value});
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (!a.big_ && !b.big_) {
    return Rational::from_wide(static_cast<detail::WideInt>(a.num_) * b.den_,
                               static_cast<detail::WideInt>(a.den_) * b.num_);
  }
  mpq_class r = RationalAccess::to_mpq(a) / RationalAccess::to_mpq(b);
  return RationalAccess::from_mpq(std::move(r));
}

Rational Rational::parse(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: '" + text + "'");
  if (q.get_den() == 0) throw std::domain_error("rational with zero denominator");
  q.canonicalize();
  return RationalAccess::from_mpq(std::move(q));
}

int Rational::sign() const {
  if (big_) return sgn(big_->value);
  return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0);
}

bool Rational::is_integer() const {
  if (big_) return big_->value.get_den() == 1;
  return den_ == 1;
}

Rational Rational::floor() const {
  if (!big_) {
    if (den_ == 1) return *this;
    std::int64_t q = num_ / den_;
    if (num_ < 0) --q;  // C++ division truncates toward zero
    return Rational(q);
  }
  mpz_class z;
  mpz_fdiv_q(z.get_mpz_t(), big_->value.get_num_mpz_t(), big_->value.get_den_mpz_t());
  return RationalAccess::from_mpq(mpq_class(z));
}

Rational Rational::ceil() const {
  if (!big_) {
    if (den_ == 1) return *this;
    std::int64_t q = num_ / den_;
    if (num_ > 0) ++q;
    return Rational(q);
  }
  mpz_class z;
  mpz_cdiv_q(z.get_mpz_t(), big_->value.get_num_mpz_t(), big_->value.get_den_mpz_t());
  return RationalAccess::from_mpq(mpq_class(z));
}

std::optional<std::int64_t> Rational::to_int64() const {
  if (!big_) {
    if (den_ != 1) return std::nullopt;
    return num_;
  }
  return std::nullopt;  // canonical big values never fit in 64 bits
}

double Rational::to_double() const {
  if (big_) return big_->value.get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (big_) return big_->value.get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (!big_ && num_ != std::numeric_limits<std::int64_t>::min()) {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  return RationalAccess::from_mpq(mpq_class(-RationalAccess::to_mpq(*this)));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace irvmargin
