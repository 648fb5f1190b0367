#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace hopf {

// Thrown when an intermediate value leaves the 64-bit range.
struct ArithmeticOverflow : std::overflow_error {
  using std::overflow_error::overflow_error;
};

// Reduced fraction n/d with d > 0.
class Rat {
 public:
  constexpr Rat() = default;
  constexpr Rat(std::int64_t n) : n_(n) {}  // NOLINT(implicit)
  Rat(std::int64_t n, std::int64_t d);

  std::int64_t num() const { return n_; }
  std::int64_t den() const { return d_; }
  bool is_zero() const { return n_ == 0; }
  bool is_integer() const { return d_ == 1; }

  Rat operator-() const;
  Rat& operator+=(Rat const& o);
  Rat& operator-=(Rat const& o);
  Rat& operator*=(Rat const& o);
  Rat& operator/=(Rat const& o);

  friend Rat operator+(Rat a, Rat const& b) { return a += b; }
  friend Rat operator-(Rat a, Rat const& b) { return a -= b; }
  friend Rat operator*(Rat a, Rat const& b) { return a *= b; }
  friend Rat operator/(Rat a, Rat const& b) { return a /= b; }
  friend bool operator==(Rat const& a, Rat const& b) {
    return a.n_ == b.n_ && a.d_ == b.d_;
  }
  friend bool operator<(Rat const& a, Rat const& b);

  std::string str() const;

 private:
  static Rat make(__int128 n, __int128 d);
  std::int64_t n_ = 0;
  std::int64_t d_ = 1;
};

// Element re + im*i of Q(i), i^2 = -1.
class Scalar {
 public:
  constexpr Scalar() = default;
  constexpr Scalar(std::int64_t v) : re_(v) {}  // NOLINT(implicit)
  Scalar(Rat re) : re_(re) {}                   // NOLINT(implicit)
  Scalar(Rat re, Rat im) : re_(re), im_(im) {}

  static Scalar i() { return Scalar(Rat(0), Rat(1)); }
  static Scalar half() { return Scalar(Rat(1, 2)); }
  // i^k for any integer k.
  static Scalar i_pow(long k);

  Rat const& re() const { return re_; }
  Rat const& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_ == Rat(1) && im_.is_zero(); }

  Scalar conj() const { return Scalar(re_, -im_); }
  Scalar inv() const;
  Scalar pow(long k) const;

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(Scalar const& o);
  Scalar& operator-=(Scalar const& o);
  Scalar& operator*=(Scalar const& o);
  Scalar& operator/=(Scalar const& o) { return *this *= o.inv(); }

  friend Scalar operator+(Scalar a, Scalar const& b) { return a += b; }
  friend Scalar operator-(Scalar a, Scalar const& b) { return a -= b; }
  friend Scalar operator*(Scalar a, Scalar const& b) { return a *= b; }
  friend Scalar operator/(Scalar a, Scalar const& b) { return a /= b; }
  friend bool operator==(Scalar const& a, Scalar const& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(Scalar const& a, Scalar const& b) { return !(a == b); }
  // Arbitrary total order, used only for canonical sorting.
  friend bool operator<(Scalar const& a, Scalar const& b);

  // Renders as "3", "-1/2", "i", "1/2-1/2i".
  std::string str() const;
  // Inverse of str(); throws std::invalid_argument.
  static Scalar parse(std::string const& s);

  std::size_t hash() const;

 private:
  Rat re_;
  Rat im_;
};

std::ostream& operator<<(std::ostream& os, Scalar const& s);

// Square roots in Q(i), returned as the root with nonnegative real part
// (or positive imaginary part when the real part vanishes).
bool sqrt_rat(Rat const& r, Rat& out);
bool sqrt_scalar(Scalar const& s, Scalar& out);

}  // namespace hopf

template <>
struct std::hash<hopf::Scalar> {
  std::size_t operator()(hopf::Scalar const& s) const { return s.hash(); }
};
