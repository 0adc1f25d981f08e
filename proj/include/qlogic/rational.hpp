#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <string_view>

#include "qlogic/errors.hpp"

namespace qlogic {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator by the backend.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Complex number with rational real and imaginary parts. Closed under
/// +, -, *, / (the Gaussian-rational field), so no rounding ever occurs.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r) : re(r) {}
  GaussianRational(long r, long i) : re(r), im(i) {}

  bool is_zero() const { return re == 0 && im == 0; }

  GaussianRational conj() const { return {re, -im}; }

  /// Squared modulus re^2 + im^2; rational and nonnegative.
  Rational norm() const { return re * re + im * im; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    if (b.is_zero()) throw ArithmeticError("division by zero");
    const Rational n = b.norm();
    const GaussianRational num = a * b.conj();
    return {num.re / n, num.im / n};
  }

  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

  static GaussianRational zero() { return {}; }
  static GaussianRational one() { return GaussianRational(1L); }
  static GaussianRational i() { return {0L, 1L}; }
};

inline std::string format_rational(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

/// Canonical text form: `a/b`, `c/di`, or `a/b+c/di` / `a/b-c/di`;
/// integers drop the denominator. Round-trips exactly through
/// parse_scalar.
inline std::string format_scalar(const GaussianRational& z) {
  if (z.im == 0) return format_rational(z.re);
  if (z.re == 0) return format_rational(z.im) + "i";
  std::string s = format_rational(z.re);
  if (z.im > 0) s += '+';
  s += format_rational(z.im);
  s += 'i';
  return s;
}

namespace detail {

inline void skip_ws(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
}

// One signed rational term, optionally suffixed with 'i'.
struct ScalarTerm {
  Rational value;
  bool imaginary = false;
};

inline ScalarTerm parse_term(std::string_view s, std::size_t& pos) {
  skip_ws(s, pos);
  bool neg = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    neg = s[pos] == '-';
    ++pos;
  }
  skip_ws(s, pos);
  ScalarTerm term;
  // Bare "i" means 1i.
  if (pos < s.size() && s[pos] == 'i') {
    ++pos;
    term.value = neg ? -1 : 1;
    term.imaginary = true;
    return term;
  }
  std::size_t start = pos;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
  if (pos == start) throw ParseError("expected digits in scalar: '" + std::string(s) + "'");
  Integer num(std::string(s.substr(start, pos - start)));
  Integer den = 1;
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    std::size_t dstart = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == dstart) throw ParseError("expected denominator digits: '" + std::string(s) + "'");
    den = Integer(std::string(s.substr(dstart, pos - dstart)));
    if (den == 0) throw ParseError("zero denominator: '" + std::string(s) + "'");
  }
  term.value = Rational(num, den);
  if (neg) term.value = -term.value;
  if (pos < s.size() && s[pos] == 'i') {
    ++pos;
    term.imaginary = true;
  }
  return term;
}

}  // namespace detail

/// Parses the scalar text format. Accepts `a/b`, `c/di`, `a/b+c/di`,
/// `a/b-c/di`, plain integers, and a bare `i` / `-i`.
inline GaussianRational parse_scalar(std::string_view text) {
  std::size_t pos = 0;
  GaussianRational out;
  bool have_re = false, have_im = false;
  const detail::ScalarTerm first = detail::parse_term(text, pos);
  if (first.imaginary) {
    out.im = first.value;
    have_im = true;
  } else {
    out.re = first.value;
    have_re = true;
  }
  detail::skip_ws(text, pos);
  if (pos < text.size()) {
    if (text[pos] != '+' && text[pos] != '-')
      throw ParseError("trailing garbage in scalar: '" + std::string(text) + "'");
    const detail::ScalarTerm second = detail::parse_term(text, pos);
    if (second.imaginary) {
      if (have_im) throw ParseError("two imaginary parts: '" + std::string(text) + "'");
      out.im = second.value;
    } else {
      if (have_re) throw ParseError("two real parts: '" + std::string(text) + "'");
      out.re = second.value;
    }
  }
  detail::skip_ws(text, pos);
  if (pos != text.size())
    throw ParseError("trailing garbage in scalar: '" + std::string(text) + "'");
  return out;
}

}  // namespace qlogic
