#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kuifje/algebra/value.hpp"

namespace kuifje {

struct Variable {
  std::string name;
  std::vector<Value> domain;
  friend bool operator==(const Variable&, const Variable&) = default;
};

/// An ordered list of named finite variables. States are the cartesian
/// product, enumerated lexicographically: the first variable is the most
/// significant digit, and each domain is walked in its listed order.
class VarContext {
 public:
  /// Upper bound on the number of states of any context.
  static constexpr std::size_t kMaxStates = std::size_t{1} << 22;

  VarContext() = default;
  explicit VarContext(std::vector<Variable> vars);

  std::size_t size() const { return vars_.size(); }
  bool empty() const { return vars_.empty(); }
  std::size_t state_count() const { return count_; }

  const std::vector<Variable>& vars() const { return vars_; }
  const Variable& var(std::size_t i) const { return vars_[i]; }

  std::optional<std::size_t> index_of(const std::string& name) const;
  bool has(const std::string& name) const { return index_of(name).has_value(); }
  std::optional<std::size_t> domain_index(std::size_t var, const Value& v) const;

  std::size_t stride(std::size_t var) const { return strides_[var]; }
  std::size_t value_index(std::size_t state, std::size_t var) const {
    return (state / strides_[var]) % vars_[var].domain.size();
  }
  const Value& value(std::size_t state, std::size_t var) const {
    return vars_[var].domain[value_index(state, var)];
  }
  std::vector<std::size_t> digits(std::size_t state) const;
  std::size_t state_of(const std::vector<std::size_t>& digits) const;

  /// Replaces the digit of `var` in `state`.
  std::size_t with_digit(std::size_t state, std::size_t var, std::size_t digit) const {
    return state + (digit - value_index(state, var)) * strides_[var];
  }

  VarContext appended(Variable v) const;
  VarContext without(const std::string& name) const;
  /// `this` followed by `other`; names must be disjoint.
  VarContext concat(const VarContext& other) const;
  /// The subcontext of the listed variables, in the listed order.
  VarContext select(const std::vector<std::string>& names) const;
  std::vector<std::string> names() const;

  /// Same variables with the same domains, in any order.
  bool same_variables(const VarContext& other) const;
  /// Every variable of `other` occurs here with the same domain.
  bool contains(const VarContext& other) const;

  /// "n:{0,1,2,3} b:{0,1}"
  std::string str() const;
  /// "(0,1)"
  std::string state_str(std::size_t state) const;

  friend bool operator==(const VarContext& a, const VarContext& b) { return a.vars_ == b.vars_; }

 private:
  std::vector<Variable> vars_;
  std::vector<std::size_t> strides_;
  std::size_t count_ = 1;
};

using CtxPtr = std::shared_ptr<const VarContext>;

inline CtxPtr make_ctx(VarContext c) { return std::make_shared<const VarContext>(std::move(c)); }

/// Maps each state of `target` to the state of `source` that agrees with it
/// on all of source's variables. Every source variable must occur in target
/// with the same domain.
std::vector<std::size_t> projection_map(const VarContext& target, const VarContext& source);

}  // namespace kuifje
