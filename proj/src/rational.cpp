#include "sqcx/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace sqcx {

namespace mp = boost::multiprecision;

Rational::Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw Error("rational with zero denominator");
  canonicalize();
}

void Rational::canonicalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Int g = mp::gcd(num_ < 0 ? Int(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw Error("rational division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  canonicalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // Denominators are positive, so cross multiplication preserves order.
  Int lhs = a.num_ * b.den_;
  Int rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  std::string s = num_.str();
  if (den_ != 1) {
    s += '/';
    s += den_.str();
  }
  return s;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

} // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool neg = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    neg = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num_part = body.substr(0, slash);
  if (!all_digits(num_part))
    throw ParseError("not a rational: \"" + std::string(text) + "\"");
  Int num{std::string(num_part)};
  Int den{1};
  if (slash != std::string_view::npos) {
    std::string_view den_part = body.substr(slash + 1);
    if (!all_digits(den_part))
      throw ParseError("not a rational: \"" + std::string(text) + "\"");
    den = Int{std::string(den_part)};
    if (den == 0)
      throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  }
  if (neg) num = -num;
  return Rational(std::move(num), std::move(den));
}

Rational Rational::parse_allow_decimal(std::string_view text) {
  auto dot = text.find('.');
  if (dot == std::string_view::npos) return parse(text);

  std::string_view head = text.substr(0, dot);
  std::string_view frac = text.substr(dot + 1);
  bool neg = false;
  if (!head.empty() && (head.front() == '-' || head.front() == '+')) {
    neg = head.front() == '-';
    head.remove_prefix(1);
  }
  if (!all_digits(frac) || (!head.empty() && !all_digits(head)))
    throw ParseError("not a number: \"" + std::string(text) + "\"");
  Int ipart = head.empty() ? Int(0) : Int{std::string(head)};
  Int fpart{std::string(frac)};
  Int scale{1};
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  Int num = ipart * scale + fpart;
  if (neg) num = -num;
  return Rational(std::move(num), std::move(scale));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational pow2(int k) {
  if (k >= 0) return Rational(Int(1) << k, Int(1));
  return Rational(Int(1), Int(1) << (-k));
}

ConstClass classify_constant(const Rational& c) {
  if (c.is_zero()) return {ConstClass::Kind::Zero, 0, false};
  bool neg = c.sign() < 0;
  Int n = c.num() < 0 ? Int(-c.num()) : c.num();
  const Int& d = c.den();
  if (n == 1 && d == 1) return {ConstClass::Kind::PlusMinusOne, 0, neg};

  auto exact_log2 = [](const Int& x) -> int {
    // x > 1; returns k with x = 2^k, or -1.
    unsigned b = mp::msb(x);
    return (Int(1) << b) == x ? static_cast<int>(b) : -1;
  };
  if (d == 1) {
    int e = exact_log2(n);
    if (e > 0) return {ConstClass::Kind::PowerOfTwo, e, neg};
  } else if (n == 1) {
    int e = exact_log2(d);
    if (e > 0) return {ConstClass::Kind::PowerOfTwo, -e, neg};
  }
  return {ConstClass::Kind::General, 0, neg};
}

} // namespace sqcx
