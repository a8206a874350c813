#include "recov/rational.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace recov {

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

// floor(a / b) for b > 0
i128 floor_div128(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

}  // namespace

Rational::Rational(std::int64_t num) : num_(num), den_(1) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(i128 num, i128 den) {
  if (den == 0) throw std::domain_error("rational division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits64(num) || !fits64(den)) throw std::overflow_error("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
  };
  if (text.empty()) return fail();

  auto parse_digits = [&](std::string_view digits) -> i128 {
    if (digits.empty()) fail();
    i128 v = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') fail();
      v = v * 10 + (c - '0');
      if (!fits64(v)) throw std::overflow_error("number too large: '" + std::string(text) + "'");
    }
    return v;
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    i128 p = parse_digits(text.substr(0, slash));
    i128 q = parse_digits(text.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return from_wide(p, q);
  }

  auto dot = text.find('.');
  std::string_view whole = text.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (dot != std::string_view::npos && frac.empty()) fail();
  if (whole.empty() && frac.empty()) fail();
  if (frac.size() > 18) throw std::overflow_error("too many fraction digits: '" + std::string(text) + "'");

  i128 w = whole.empty() ? 0 : parse_digits(whole);
  i128 scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  i128 f = frac.empty() ? 0 : parse_digits(frac);
  return from_wide(w * scale + f, scale);
}

std::int64_t Rational::floor() const {
  return static_cast<std::int64_t>(floor_div128(num_, den_));
}

std::int64_t Rational::ceil() const {
  return static_cast<std::int64_t>(-floor_div128(-static_cast<i128>(num_), den_));
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  // Terminating iff den has no prime factors other than 2 and 5.
  std::int64_t d = den_;
  int twos = 0, fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  int digits = std::max(twos, fives);
  if (d != 1 || digits > 18) return std::to_string(num_) + "/" + std::to_string(den_);

  // num / den == scaled / 10^digits
  i128 scaled = num_;
  for (int i = twos; i < digits; ++i) scaled *= 2;
  for (int i = fives; i < digits; ++i) scaled *= 5;
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  i128 pow10 = 1;
  for (int i = 0; i < digits; ++i) pow10 *= 10;
  i128 int_part = scaled / pow10;
  i128 frac_part = scaled % pow10;

  std::string out = negative ? "-" : "";
  out += std::to_string(static_cast<std::int64_t>(int_part));
  if (digits > 0) {
    std::string frac = std::to_string(static_cast<std::int64_t>(frac_part));
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
  }
  return out;
}

Rational Rational::operator-() const { return from_wide(-static_cast<i128>(num_), den_); }

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) return *this = from_wide(static_cast<i128>(num_) + rhs.num_, den_);
  return *this = from_wide(static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_,
                           static_cast<i128>(den_) * rhs.den_);
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (den_ == rhs.den_) return *this = from_wide(static_cast<i128>(num_) - rhs.num_, den_);
  return *this = from_wide(static_cast<i128>(num_) * rhs.den_ - static_cast<i128>(rhs.num_) * den_,
                           static_cast<i128>(den_) * rhs.den_);
}

Rational& Rational::operator*=(const Rational& rhs) {
  return *this = from_wide(static_cast<i128>(num_) * rhs.num_, static_cast<i128>(den_) * rhs.den_);
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("rational division by zero");
  return *this = from_wide(static_cast<i128>(num_) * rhs.den_, static_cast<i128>(den_) * rhs.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return static_cast<i128>(a.num_) * b.den_ <=> static_cast<i128>(b.num_) * a.den_;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::int64_t ceil_div(const Rational& a, const Rational& b) {
  if (b <= Rational(0)) throw std::domain_error("ceil_div by non-positive divisor");
  return (a / b).ceil();
}

std::int64_t floor_div(const Rational& a, const Rational& b) {
  if (b <= Rational(0)) throw std::domain_error("floor_div by non-positive divisor");
  return (a / b).floor();
}

}  // namespace recov
