#include "kuifje/algebra/ext_rat.hpp"

#include <cctype>

#include "kuifje/errors.hpp"

namespace kuifje {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw DomainError("malformed number '" + std::string(s) + "'");
  Integer v{std::string(s)};
  return negative ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (!all_digits(frac)) throw DomainError("malformed number '" + std::string(text) + "'");
    bool negative = !whole.empty() && whole.front() == '-';
    Integer w = whole.empty() || whole == "-" ? Integer(0) : parse_integer(whole);
    Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size()));
    Rational f(Integer(std::string(frac)), scale);
    Rational base(w);
    return negative ? Rational(base - f) : Rational(base + f);
  }
  return Rational(parse_integer(text));
}

std::string to_string(const Rational& r) { return r.str(); }

ExtRat::ExtRat(int v) : ExtRat(Rational(v)) {}

ExtRat::ExtRat(Rational v) : value_(std::move(v)) {
  if (value_ < 0) throw DomainError("negative scalar " + value_.str());
}

ExtRat ExtRat::infinity() {
  ExtRat r;
  r.infinite_ = true;
  return r;
}

const Rational& ExtRat::value() const {
  if (infinite_) throw DomainError("value() of infinite scalar");
  return value_;
}

ExtRat& ExtRat::operator+=(const ExtRat& other) {
  if (infinite_ || other.infinite_) {
    infinite_ = true;
    value_ = 0;
  } else {
    value_ += other.value_;
  }
  return *this;
}

ExtRat& ExtRat::operator*=(const ExtRat& other) {
  // 0 annihilates, including 0 · ∞.
  if (is_zero() || other.is_zero()) {
    infinite_ = false;
    value_ = 0;
  } else if (infinite_ || other.infinite_) {
    infinite_ = true;
    value_ = 0;
  } else {
    value_ *= other.value_;
  }
  return *this;
}

bool operator==(const ExtRat& a, const ExtRat& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
  if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
  if (a.infinite_) return std::strong_ordering::greater;
  if (b.infinite_) return std::strong_ordering::less;
  int c = a.value_.compare(b.value_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string ExtRat::str() const { return infinite_ ? "inf" : value_.str(); }

ExtRat ExtRat::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text == "inf" || text == "∞") return infinity();
  return ExtRat(parse_rational(text));
}

}  // namespace kuifje
