#pragma once

#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "kuifje/algebra/ext_rat.hpp"

namespace kuifje {

struct Atom {
  std::string name;
  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

/// A program value: an exact number, a symbolic atom, or a finite array.
/// Booleans are the numbers 0 and 1.
class Value {
 public:
  using Array = std::vector<Value>;

  Value() : data_(Rational(0)) {}
  Value(int v) : data_(Rational(v)) {}  // NOLINT
  Value(Rational v) : data_(std::move(v)) {}  // NOLINT
  Value(Atom a) : data_(std::move(a)) {}  // NOLINT
  Value(Array xs) : data_(std::move(xs)) {}  // NOLINT

  static Value boolean(bool b) { return Value(b ? 1 : 0); }
  static Value atom(std::string name) { return Value(Atom{std::move(name)}); }

  bool is_number() const { return std::holds_alternative<Rational>(data_); }
  bool is_atom() const { return std::holds_alternative<Atom>(data_); }
  bool is_array() const { return std::holds_alternative<Array>(data_); }

  const Rational& number() const;
  const Atom& as_atom() const;
  const Array& array() const;

  /// Numbers 0 and 1 only.
  bool truth() const;

  std::string str() const;

  // numbers < atoms < arrays; arrays compare lexicographically
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);
  friend bool operator==(const Value& a, const Value& b);

 private:
  std::variant<Rational, Atom, Array> data_;
};

}  // namespace kuifje
