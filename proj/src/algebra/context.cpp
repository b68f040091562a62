#include "kuifje/algebra/context.hpp"

#include <algorithm>
#include <set>

#include "kuifje/errors.hpp"

namespace kuifje {

VarContext::VarContext(std::vector<Variable> vars) : vars_(std::move(vars)) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (!seen.insert(v.name).second) throw ContextMismatch("duplicate variable '" + v.name + "'");
    if (v.domain.empty()) throw DomainError("empty domain for '" + v.name + "'");
    std::set<Value> distinct(v.domain.begin(), v.domain.end());
    if (distinct.size() != v.domain.size()) throw DomainError("repeated value in domain of '" + v.name + "'");
  }
  strides_.assign(vars_.size(), 1);
  count_ = 1;
  for (std::size_t i = vars_.size(); i-- > 0;) {
    strides_[i] = count_;
    if (count_ > kMaxStates / vars_[i].domain.size())
      throw DomainError("state space too large (more than " + std::to_string(kMaxStates) + " states)");
    count_ *= vars_[i].domain.size();
  }
}

std::optional<std::size_t> VarContext::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> VarContext::domain_index(std::size_t var, const Value& v) const {
  const auto& dom = vars_[var].domain;
  for (std::size_t i = 0; i < dom.size(); ++i)
    if (dom[i] == v) return i;
  return std::nullopt;
}

std::vector<std::size_t> VarContext::digits(std::size_t state) const {
  std::vector<std::size_t> d(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) d[i] = value_index(state, i);
  return d;
}

std::size_t VarContext::state_of(const std::vector<std::size_t>& digits) const {
  std::size_t s = 0;
  for (std::size_t i = 0; i < vars_.size(); ++i) s += digits[i] * strides_[i];
  return s;
}

VarContext VarContext::appended(Variable v) const {
  auto vars = vars_;
  vars.push_back(std::move(v));
  return VarContext(std::move(vars));
}

VarContext VarContext::without(const std::string& name) const {
  auto vars = vars_;
  auto it = std::find_if(vars.begin(), vars.end(), [&](const Variable& v) { return v.name == name; });
  if (it == vars.end()) throw ContextMismatch("no variable '" + name + "' to remove");
  vars.erase(it);
  return VarContext(std::move(vars));
}

VarContext VarContext::concat(const VarContext& other) const {
  auto vars = vars_;
  for (const auto& v : other.vars_) {
    if (has(v.name)) throw ContextMismatch("variable '" + v.name + "' occurs in both contexts");
    vars.push_back(v);
  }
  return VarContext(std::move(vars));
}

VarContext VarContext::select(const std::vector<std::string>& names) const {
  std::vector<Variable> vars;
  for (const auto& n : names) {
    auto i = index_of(n);
    if (!i) throw ContextMismatch("no variable '" + n + "'");
    vars.push_back(vars_[*i]);
  }
  return VarContext(std::move(vars));
}

std::vector<std::string> VarContext::names() const {
  std::vector<std::string> out;
  for (const auto& v : vars_) out.push_back(v.name);
  return out;
}

bool VarContext::contains(const VarContext& other) const {
  for (const auto& v : other.vars_) {
    auto i = index_of(v.name);
    if (!i || vars_[*i].domain != v.domain) return false;
  }
  return true;
}

bool VarContext::same_variables(const VarContext& other) const {
  return size() == other.size() && contains(other);
}

std::string VarContext::str() const {
  std::string out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i) out += " ";
    out += vars_[i].name + ":{";
    for (std::size_t j = 0; j < vars_[i].domain.size(); ++j) {
      if (j) out += ",";
      out += vars_[i].domain[j].str();
    }
    out += "}";
  }
  return out;
}

std::string VarContext::state_str(std::size_t state) const {
  std::string out = "(";
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i) out += ",";
    out += value(state, i).str();
  }
  return out + ")";
}

std::vector<std::size_t> projection_map(const VarContext& target, const VarContext& source) {
  if (!target.contains(source))
    throw ContextMismatch("context [" + target.str() + "] does not contain [" + source.str() + "]");
  std::vector<std::size_t> where(source.size());
  for (std::size_t i = 0; i < source.size(); ++i) where[i] = *target.index_of(source.var(i).name);
  std::vector<std::size_t> out(target.state_count());
  for (std::size_t t = 0; t < out.size(); ++t) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < source.size(); ++i) s += target.value_index(t, where[i]) * source.stride(i);
    out[t] = s;
  }
  return out;
}

}  // namespace kuifje
