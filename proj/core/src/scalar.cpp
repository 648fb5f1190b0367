#include "hopf/scalar.hpp"

#include <cctype>
#include <climits>
#include <cmath>
#include <ostream>

namespace hopf {

namespace {

using i128 = __int128;

unsigned __int128 uabs(i128 v) {
  return v < 0 ? static_cast<unsigned __int128>(-(v + 1)) + 1
               : static_cast<unsigned __int128>(v);
}

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
  if (a == 0) return b;
  if (b == 0) return a;
  int shift = 0;
  while (((a | b) & 1) == 0) {
    a >>= 1;
    b >>= 1;
    ++shift;
  }
  while ((a & 1) == 0) a >>= 1;
  do {
    while ((b & 1) == 0) b >>= 1;
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < -static_cast<i128>(INT64_MAX))
    throw ArithmeticOverflow("rational component exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

}  // namespace

Rat Rat::make(i128 n, i128 d) {
  if (d == 0) throw std::domain_error("division by zero");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Rat();
  auto g = gcd128(uabs(n), uabs(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  Rat r;
  r.n_ = narrow(n);
  r.d_ = narrow(d);
  return r;
}

Rat::Rat(std::int64_t n, std::int64_t d) { *this = make(n, d); }

Rat Rat::operator-() const {
  Rat r = *this;
  if (n_ == INT64_MIN) throw ArithmeticOverflow("negation overflow");
  r.n_ = -n_;
  return r;
}

Rat& Rat::operator+=(Rat const& o) {
  if (o.n_ == 0) return *this;
  if (n_ == 0) return *this = o;
  if (d_ == 1 && o.d_ == 1) {
    std::int64_t s;
    if (!__builtin_add_overflow(n_, o.n_, &s)) {
      n_ = s;
      return *this;
    }
  }
  if (d_ == o.d_) return *this = make(static_cast<i128>(n_) + o.n_, d_);
  return *this = make(static_cast<i128>(n_) * o.d_ + static_cast<i128>(o.n_) * d_,
                      static_cast<i128>(d_) * o.d_);
}

Rat& Rat::operator-=(Rat const& o) { return *this += -o; }

Rat& Rat::operator*=(Rat const& o) {
  if (n_ == 0 || o.n_ == 0) return *this = Rat();
  if (d_ == 1 && o.d_ == 1) {
    std::int64_t p;
    if (!__builtin_mul_overflow(n_, o.n_, &p)) {
      n_ = p;
      return *this;
    }
  }
  return *this = make(static_cast<i128>(n_) * o.n_, static_cast<i128>(d_) * o.d_);
}

Rat& Rat::operator/=(Rat const& o) {
  if (o.n_ == 0) throw std::domain_error("division by zero");
  return *this = make(static_cast<i128>(n_) * o.d_, static_cast<i128>(d_) * o.n_);
}

bool operator<(Rat const& a, Rat const& b) {
  return static_cast<i128>(a.n_) * b.d_ < static_cast<i128>(b.n_) * a.d_;
}

std::string Rat::str() const {
  if (d_ == 1) return std::to_string(n_);
  return std::to_string(n_) + "/" + std::to_string(d_);
}

Scalar Scalar::i_pow(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return Scalar(1);
    case 1: return i();
    case 2: return Scalar(-1);
    default: return -i();
  }
}

Scalar Scalar::inv() const {
  if (im_.is_zero()) {
    if (re_.is_zero()) throw std::domain_error("division by zero");
    return Scalar(Rat(1) / re_);
  }
  Rat n = re_ * re_ + im_ * im_;
  return Scalar(re_ / n, -im_ / n);
}

Scalar Scalar::pow(long k) const {
  if (k < 0) return inv().pow(-k);
  Scalar r(1), b = *this;
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

Scalar& Scalar::operator+=(Scalar const& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(Scalar const& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(Scalar const& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Rat r = re_ * o.re_ - im_ * o.im_;
  Rat m = re_ * o.im_ + im_ * o.re_;
  re_ = r;
  im_ = m;
  return *this;
}

bool operator<(Scalar const& a, Scalar const& b) {
  if (!(a.re_ == b.re_)) return a.re_ < b.re_;
  return a.im_ < b.im_;
}

std::string Scalar::str() const {
  if (im_.is_zero()) return re_.str();
  std::string imag;
  if (im_ == Rat(1))
    imag = "i";
  else if (im_ == Rat(-1))
    imag = "-i";
  else
    imag = im_.str() + "i";
  if (re_.is_zero()) return imag;
  if (imag[0] != '-') imag = "+" + imag;
  return re_.str() + imag;
}

namespace {

Rat parse_rat(std::string const& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  std::size_t pos = 0;
  if (slash == std::string::npos) {
    long long n = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad rational: " + s);
    return Rat(n);
  }
  std::string a = s.substr(0, slash), b = s.substr(slash + 1);
  long long n = std::stoll(a, &pos);
  if (pos != a.size()) throw std::invalid_argument("bad rational: " + s);
  long long d = std::stoll(b, &pos);
  if (pos != b.size()) throw std::invalid_argument("bad rational: " + s);
  return Rat(n, d);
}

}  // namespace

Scalar Scalar::parse(std::string const& s) {
  if (s.empty()) throw std::invalid_argument("empty scalar");
  if (s.back() != 'i') return Scalar(parse_rat(s));
  std::string body = s.substr(0, s.size() - 1);
  // split at the last sign that is not leading
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;)
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  auto imag_of = [](std::string t) {
    if (t.empty() || t == "+") return Rat(1);
    if (t == "-") return Rat(-1);
    if (t[0] == '+') t = t.substr(1);
    return parse_rat(t);
  };
  if (split == std::string::npos) return Scalar(Rat(0), imag_of(body));
  return Scalar(parse_rat(body.substr(0, split)), imag_of(body.substr(split)));
}

std::size_t Scalar::hash() const {
  std::size_t h = std::hash<std::int64_t>{}(re_.num());
  auto mix = [&h](std::int64_t v) {
    h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  mix(re_.den());
  mix(im_.num());
  mix(im_.den());
  return h;
}

std::ostream& operator<<(std::ostream& os, Scalar const& s) { return os << s.str(); }

namespace {

bool isqrt(std::int64_t v, std::int64_t& out) {
  if (v < 0) return false;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<long double>(v))));
  for (std::int64_t c = r > 1 ? r - 1 : 0; c <= r + 1; ++c)
    if (static_cast<i128>(c) * c == v) {
      out = c;
      return true;
    }
  return false;
}

}  // namespace

bool sqrt_rat(Rat const& r, Rat& out) {
  std::int64_t a, b;
  if (!isqrt(r.num(), a) || !isqrt(r.den(), b)) return false;
  out = Rat(a, b);
  return true;
}

bool sqrt_scalar(Scalar const& s, Scalar& out) {
  // (a + b i)^2 = c + d i  =>  a^2 = (c + |s|)/2, b^2 = (|s| - c)/2
  Rat c = s.re(), d = s.im();
  if (d.is_zero()) {
    Rat r;
    if (!(c < Rat(0))) {
      if (!sqrt_rat(c, r)) return false;
      out = Scalar(r);
    } else {
      if (!sqrt_rat(-c, r)) return false;
      out = Scalar(Rat(0), r);
    }
    return true;
  }
  Rat norm;
  if (!sqrt_rat(c * c + d * d, norm)) return false;
  Rat a, b;
  if (!sqrt_rat((c + norm) / Rat(2), a)) return false;
  if (a.is_zero()) return false;
  b = d / (Rat(2) * a);
  out = Scalar(a, b);
  return true;
}

}  // namespace hopf
