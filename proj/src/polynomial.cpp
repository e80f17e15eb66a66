#include "sqcx/polynomial.hpp"

#include <algorithm>

namespace sqcx {

Polynomial Polynomial::constant(std::size_t nvars, Rational c) {
  Polynomial p(nvars);
  if (!c.is_zero()) p.terms_.emplace(Exponents(nvars, 0), std::move(c));
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw Error("polynomial variable index out of range");
  Polynomial p(nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

std::optional<Rational> Polynomial::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  if (std::ranges::any_of(e, [](std::uint32_t x) { return x != 0; }))
    return std::nullopt;
  return c;
}

void Polynomial::check_same_arity(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw Error("polynomial arity mismatch");
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_arity(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_arity(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial::check_same_arity(a, b);
  Polynomial r(a.nvars_);
  Polynomial::Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

Rational Polynomial::eval(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw Error("polynomial evaluated at wrong arity");
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
    total += term;
  }
  return total;
}

std::string Polynomial::str(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  // Reverse map order puts the lexicographically largest exponent
  // vector (typically the leading variable's power) first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool negative = c.sign() < 0;
    Rational mag = negative ? -c : c;

    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += i < names.size() ? names[i] : "x" + std::to_string(i);
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }

    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";

    if (mono.empty())
      out += mag.str();
    else if (mag == Rational(1))
      out += mono;
    else
      out += mag.str() + "*" + mono;
  }
  return out;
}

RationalFn::RationalFn(Polynomial num)
    : num_(std::move(num)),
      den_(Polynomial::constant(num_.nvars(), Rational(1))) {}

RationalFn::RationalFn(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error("rational function with zero denominator");
}

bool RationalFn::is_polynomial() const {
  auto c = den_.as_constant();
  return c && *c == Rational(1);
}

RationalFn RationalFn::operator-() const { return RationalFn(-num_, den_); }

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  if (a.den_ == b.den_) return RationalFn(a.num_ + b.num_, a.den_);
  return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) {
  if (a.den_ == b.den_) return RationalFn(a.num_ - b.num_, a.den_);
  return RationalFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
  if (b.num_.is_zero()) throw Error("division by identically zero function");
  return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFn RationalFn::scaled(const Rational& c) const {
  return RationalFn(num_.scaled(c), den_);
}

bool RationalFn::equivalent(const RationalFn& o) const {
  return (num_ * o.den_ - o.num_ * den_).is_zero();
}

Rational RationalFn::eval(std::span<const Rational> point) const {
  Rational d = den_.eval(point);
  if (d.is_zero()) throw Error("denominator vanishes at evaluation point");
  return num_.eval(point) / d;
}

std::string RationalFn::str(std::span<const std::string> names) const {
  if (num_.is_zero() || is_polynomial()) return num_.str(names);
  return "(" + num_.str(names) + ") / (" + den_.str(names) + ")";
}

std::optional<Rational> constant_ratio(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return Rational(0);
  if (a.term_count() != b.term_count()) return std::nullopt;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  Rational ratio = ia->second / ib->second;
  for (; ia != a.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return std::nullopt;
    if (!(ia->second == ratio * ib->second)) return std::nullopt;
  }
  return ratio;
}

} // namespace sqcx
