#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace kuifje {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Parses "7", "-3", "2/6" or "0.25" into a rational in lowest terms.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

/// The scalar rig [0, ∞] restricted to exact rationals: a nonnegative
/// rational or ∞, with ∞ + r = ∞, ∞ · r = ∞ for r > 0 and ∞ · 0 = 0.
class ExtRat {
 public:
  ExtRat() = default;
  ExtRat(int v);  // NOLINT(google-explicit-constructor): small literals
  explicit ExtRat(Rational v);

  static ExtRat infinity();

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  bool is_zero() const { return !infinite_ && value_ == 0; }

  /// The finite value; throws DomainError on ∞.
  const Rational& value() const;

  ExtRat& operator+=(const ExtRat& other);
  ExtRat& operator*=(const ExtRat& other);

  friend ExtRat operator+(ExtRat a, const ExtRat& b) { return a += b; }
  friend ExtRat operator*(ExtRat a, const ExtRat& b) { return a *= b; }

  friend bool operator==(const ExtRat& a, const ExtRat& b);
  friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b);

  /// "inf", or the rational as "p/q" / "p".
  std::string str() const;
  static ExtRat parse(std::string_view text);

 private:
  bool infinite_ = false;
  Rational value_ = 0;
};

inline ExtRat ext_add(const ExtRat& a, const ExtRat& b) { return a + b; }
inline ExtRat ext_mul(const ExtRat& a, const ExtRat& b) { return a * b; }
inline std::strong_ordering ext_cmp(const ExtRat& a, const ExtRat& b) { return a <=> b; }

}  // namespace kuifje
