#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>

namespace irvmargin {

namespace detail {
__extension__ using WideInt = __int128;
__extension__ using WideUint = unsigned __int128;
struct BigRational;
struct BigRationalDeleter {
  void operator()(BigRational* p) const noexcept;
};
using BigPtr = std::unique_ptr<BigRational, BigRationalDeleter>;
}  // namespace detail

/// Exact rational number.
///
/// Values whose reduced numerator and denominator fit in 64 bits are stored
/// inline and use 128-bit intermediates; anything larger is promoted to an
/// arbitrary-precision representation and demoted again when it fits. The
/// representation is always canonical (reduced, positive denominator), so
/// equal values compare and print identically.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design of arithmetic use
  Rational(std::int64_t num, std::int64_t den);

  Rational(const Rational& other) : num_(other.num_), den_(other.den_) {
    if (other.big_) copy_big(other);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& other) {
    if (this != &other) {
      num_ = other.num_;
      den_ = other.den_;
      if (other.big_) {
        copy_big(other);
      } else {
        big_.reset();
      }
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  /// Parses "p" or "p/q" with arbitrary-length integers.
  static Rational parse(const std::string& text);

  int sign() const;
  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_integer() const;
  bool is_small() const { return !big_; }

  Rational floor() const;
  Rational ceil() const;
  /// Value as int64 if it is an integer that fits.
  std::optional<std::int64_t> to_int64() const;
  double to_double() const;
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) {
        std::int64_t r;
        if (!__builtin_add_overflow(a.num_, b.num_, &r)) return Rational(r);
      }
      detail::WideInt n = static_cast<detail::WideInt>(a.num_) * b.den_ + static_cast<detail::WideInt>(b.num_) * a.den_;
      detail::WideInt d = static_cast<detail::WideInt>(a.den_) * b.den_;
      return from_wide(n, d);
    }
    return big_add(a, b, false);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) {
        std::int64_t r;
        if (!__builtin_sub_overflow(a.num_, b.num_, &r)) return Rational(r);
      }
      detail::WideInt n = static_cast<detail::WideInt>(a.num_) * b.den_ - static_cast<detail::WideInt>(b.num_) * a.den_;
      detail::WideInt d = static_cast<detail::WideInt>(a.den_) * b.den_;
      return from_wide(n, d);
    }
    return big_add(a, b, true);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) {
        std::int64_t r;
        if (!__builtin_mul_overflow(a.num_, b.num_, &r)) return Rational(r);
      }
      return from_wide(static_cast<detail::WideInt>(a.num_) * b.num_,
                       static_cast<detail::WideInt>(a.den_) * b.den_);
    }
    return big_mul(a, b);
  }
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    return big_cmp(a, b) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c;
    if (!a.big_ && !b.big_) {
      detail::WideInt l = static_cast<detail::WideInt>(a.num_) * b.den_;
      detail::WideInt r = static_cast<detail::WideInt>(b.num_) * a.den_;
      c = l < r ? -1 : (l > r ? 1 : 0);
    } else {
      c = big_cmp(a, b);
    }
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  static Rational from_wide(detail::WideInt num, detail::WideInt den);
  static Rational big_add(const Rational& a, const Rational& b, bool subtract);
  static Rational big_mul(const Rational& a, const Rational& b);
  static int big_cmp(const Rational& a, const Rational& b);
  void copy_big(const Rational& other);

  friend struct RationalAccess;

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  detail::BigPtr big_;
};

}  // namespace irvmargin
