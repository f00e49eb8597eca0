#include "orp/rational.hpp"

#include <cctype>
#include <numeric>

namespace orp {

namespace {

using Wide = __int128;

constexpr std::int64_t kMax = INT64_MAX;
constexpr std::int64_t kMin = INT64_MIN;

std::int64_t narrow(Wide v) {
  if (v > static_cast<Wide>(kMax) || v < static_cast<Wide>(kMin)) {
    throw OverflowError("rational arithmetic exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(v);
}

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidInstanceError("rational with zero denominator");
  Wide n = num;
  Wide d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Wide g = wide_gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = narrow(n);
  den_ = narrow(d);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = narrow(-static_cast<Wide>(num_));
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == 1 && b.den_ == 1) {
    Rational r;
    r.num_ = narrow(static_cast<Wide>(a.num_) + b.num_);
    return r;
  }
  Wide n = static_cast<Wide>(a.num_) * b.den_ + static_cast<Wide>(b.num_) * a.den_;
  Wide d = static_cast<Wide>(a.den_) * b.den_;
  Wide g = wide_gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rational r;
  r.num_ = narrow(n);
  r.den_ = narrow(d);
  return r;
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.den_ == 1 && b.den_ == 1) {
    Rational r;
    r.num_ = narrow(static_cast<Wide>(a.num_) * b.num_);
    return r;
  }
  Wide n = static_cast<Wide>(a.num_) * b.num_;
  Wide d = static_cast<Wide>(a.den_) * b.den_;
  Wide g = wide_gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rational r;
  r.num_ = narrow(n);
  r.den_ = narrow(d);
  return r;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw InvalidInstanceError("division by zero rational");
  Wide n = static_cast<Wide>(a.num_) * b.den_;
  Wide d = static_cast<Wide>(a.den_) * b.num_;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Wide g = wide_gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rational r;
  r.num_ = narrow(n);
  r.den_ = narrow(d);
  return r;
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<Wide>(a.num_) * b.den_ < static_cast<Wide>(b.num_) * a.den_;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational Rational::parse(const std::string& text) {
  std::size_t i = 0;
  auto fail = [&]() -> Rational {
    throw ParseError("bad rational literal: '" + text + "'");
  };
  if (text.empty()) return fail();
  bool neg = false;
  if (text[i] == '+' || text[i] == '-') {
    neg = text[i] == '-';
    ++i;
  }
  if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) return fail();
  Wide intpart = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    intpart = intpart * 10 + (text[i] - '0');
    if (intpart > static_cast<Wide>(kMax)) throw OverflowError("rational literal too large: " + text);
    ++i;
  }
  Wide num = intpart;
  Wide den = 1;
  if (i < text.size() && text[i] == '.') {
    ++i;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) return fail();
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      num = num * 10 + (text[i] - '0');
      den *= 10;
      if (num > static_cast<Wide>(kMax) || den > static_cast<Wide>(kMax)) {
        throw OverflowError("rational literal too large: " + text);
      }
      ++i;
    }
  } else if (i < text.size() && text[i] == '/') {
    ++i;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) return fail();
    den = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      den = den * 10 + (text[i] - '0');
      if (den > static_cast<Wide>(kMax)) throw OverflowError("rational literal too large: " + text);
      ++i;
    }
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
  }
  if (i != text.size()) return fail();
  if (neg) num = -num;
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace orp
