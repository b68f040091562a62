#include "kuifje/algebra/value.hpp"

#include "kuifje/errors.hpp"

namespace kuifje {

const Rational& Value::number() const {
  if (auto* r = std::get_if<Rational>(&data_)) return *r;
  throw DomainError("expected a number, got " + str());
}

const Atom& Value::as_atom() const {
  if (auto* a = std::get_if<Atom>(&data_)) return *a;
  throw DomainError("expected an atom, got " + str());
}

const Value::Array& Value::array() const {
  if (auto* xs = std::get_if<Array>(&data_)) return *xs;
  throw DomainError("expected an array, got " + str());
}

bool Value::truth() const {
  if (auto* r = std::get_if<Rational>(&data_)) {
    if (*r == 0) return false;
    if (*r == 1) return true;
  }
  throw DomainError("expected a boolean (0 or 1), got " + str());
}

std::string Value::str() const {
  if (auto* r = std::get_if<Rational>(&data_)) return r->str();
  if (auto* a = std::get_if<Atom>(&data_)) return a->name;
  std::string out = "[";
  const auto& xs = std::get<Array>(data_);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += xs[i].str();
  }
  return out + "]";
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.data_.index() != b.data_.index()) return a.data_.index() <=> b.data_.index();
  if (auto* r = std::get_if<Rational>(&a.data_)) {
    int c = r->compare(std::get<Rational>(b.data_));
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  if (auto* x = std::get_if<Atom>(&a.data_)) return *x <=> std::get<Atom>(b.data_);
  const auto& xs = std::get<Value::Array>(a.data_);
  const auto& ys = std::get<Value::Array>(b.data_);
  for (std::size_t i = 0; i < xs.size() && i < ys.size(); ++i) {
    auto c = xs[i] <=> ys[i];
    if (c != 0) return c;
  }
  return xs.size() <=> ys.size();
}

bool operator==(const Value& a, const Value& b) { return (a <=> b) == 0; }

}  // namespace kuifje
