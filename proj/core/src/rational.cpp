#include "crown/rational.hpp"

#include <limits>

namespace crown {
namespace {

int128_t gcd128(int128_t a, int128_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    int128_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(int128_t v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational::Rational(std::int64_t n) : num_(n), den_(1) {}

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  *this = from_wide(n, d);
}

Rational Rational::from_wide(int128_t n, int128_t d) {
  if (d == 0) throw std::domain_error("Rational: division by zero");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  int128_t g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (!fits(n) || !fits(d)) throw std::overflow_error("Rational: 64-bit overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(n);
  r.den_ = static_cast<std::int64_t>(d);
  return r;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      std::int64_t n = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return Rational(n);
    }
    std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    std::int64_t n = std::stoll(a, &used);
    if (used != a.size()) throw std::invalid_argument(s);
    std::int64_t d = std::stoll(b, &used);
    if (used != b.size()) throw std::invalid_argument(s);
    return Rational(n, d);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  }
}

Rational Rational::operator-() const { return from_wide(-static_cast<int128_t>(num_), den_); }

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == o.den_) return *this = from_wide(static_cast<int128_t>(num_) + o.num_, den_);
  return *this = from_wide(static_cast<int128_t>(num_) * o.den_ + static_cast<int128_t>(o.num_) * den_,
                           static_cast<int128_t>(den_) * o.den_);
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  // Cross-reduce first so that products of normalized values rarely widen.
  int128_t g1 = gcd128(num_, o.den_), g2 = gcd128(o.num_, den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return *this = from_wide((static_cast<int128_t>(num_) / g1) * (o.num_ / g2),
                           (static_cast<int128_t>(den_) / g2) * (o.den_ / g1));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
  return *this *= from_wide(o.den_, o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int128_t l = static_cast<int128_t>(a.num_) * b.den_;
  int128_t r = static_cast<int128_t>(b.num_) * a.den_;
  return l <=> r;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace crown
