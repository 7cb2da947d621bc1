#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace plesken {

/// Gaussian rational re + im*i with arbitrary-precision rational parts.
///
/// Both parts are kept canonical (lowest terms, positive denominator), so
/// structural equality is value equality.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : re_(value) {}   // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {  // NOLINT
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Scalar(mpq_class(num, den));
  }
  static Scalar imaginary_unit() { return Scalar(mpq_class(0), mpq_class(1)); }

  /// Parses "a", "a/b", "a/b+c/di", "c/di", "i", "-i".
  static Scalar parse(std::string_view text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return sgn(im_) == 0 && re_ == 1; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    mpq_class norm = re_ * re_ + im_ * im_;
    return Scalar(re_ / norm, -im_ / norm);
  }

  std::string str() const;

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    if (o.is_real()) {
      re_ *= o.re_;
      im_ *= o.re_;
    } else if (is_real()) {
      im_ = re_ * o.im_;
      re_ *= o.re_;
    } else {
      mpq_class r = re_ * o.re_ - im_ * o.im_;
      im_ = re_ * o.im_ + im_ * o.re_;
      re_ = std::move(r);
    }
    return *this;
  }
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a) { return Scalar(-a.re_, -a.im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// x += a*b without materialising a temporary when a or b is zero.
inline void add_product(Scalar& x, const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return;
  x += a * b;
}

namespace detail {

inline mpq_class parse_rational(std::string_view text, std::string_view whole) {
  auto fail = [&] { throw std::invalid_argument("malformed scalar '" + std::string(whole) + "'"); };
  if (text.empty()) fail();
  std::size_t pos = 0;
  if (text[0] == '+' || text[0] == '-') pos = 1;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (std::size_t k = pos; k < text.size(); ++k) {
    char c = text[k];
    if (c == '/') {
      if (seen_slash) fail();
      seen_slash = true;
    } else if (c >= '0' && c <= '9') {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      fail();
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) fail();
  std::string body(text[0] == '+' ? text.substr(1) : text);
  if (seen_slash) {
    auto slash = body.find('/');
    mpz_class den(body.substr(slash + 1), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in scalar '" + std::string(whole) + "'");
  }
  mpq_class q;
  if (q.set_str(body, 10) != 0) fail();
  q.canonicalize();
  return q;
}

inline std::string rational_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace detail

inline Scalar Scalar::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty scalar string");
  if (text.back() != 'i') return Scalar(detail::parse_rational(text, text));

  std::string_view body = text.substr(0, text.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  std::string_view re_text = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  std::string_view im_text = split == std::string_view::npos ? body : body.substr(split);
  mpq_class re = re_text.empty() ? mpq_class(0) : detail::parse_rational(re_text, text);
  mpq_class im;
  if (im_text.empty() || im_text == "+")
    im = 1;
  else if (im_text == "-")
    im = -1;
  else
    im = detail::parse_rational(im_text, text);
  return Scalar(re, im);
}

inline std::string Scalar::str() const {
  if (is_real()) return detail::rational_str(re_);
  std::string out = detail::rational_str(re_);
  out += sgn(im_) < 0 ? "-" : "+";
  out += detail::rational_str(abs(im_));
  out += "i";
  return out;
}

}  // namespace plesken
