#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kuifje/lang/datatype.hpp"
#include "kuifje/refine/family.hpp"
#include "kuifje/wpl/wpl.hpp"

namespace kuifje {

/// Holds(checked) is sound for the family only. Fails is final: at the
/// witness distribution the left pre-loss evaluates strictly above the right.
struct Verdict {
  enum class Kind { Holds, Fails, Inconclusive };
  Kind kind = Kind::Holds;
  std::size_t checked = 0;
  std::string reason;  // Inconclusive only
  std::string where;   // context or square that produced the verdict

  std::optional<FamilyEntry> witness_loss;
  std::optional<Distribution> witness_distribution;
  ExtRat lhs{0}, rhs{0};
  /// Pre-losses of both sides for the witness loss.
  std::optional<LossFunction> lhs_pre, rhs_pre;

  bool holds() const { return kind == Kind::Holds; }
  bool fails() const { return kind == Kind::Fails; }
  bool inconclusive() const { return kind == Kind::Inconclusive; }
  const char* kind_name() const;
};

/// Re-evaluates the witness. True iff a Fails verdict reproduces its strict gap.
bool certify(const Verdict& v);

struct RefineOptions {
  WplOptions wpl;
  VarContext extension;  // correlated state Z
};

/// P ⊑ Q on every loss of the family. Loop truncation makes Holds unsound
/// when P was truncated and Fails unsound when Q was; both become Inconclusive.
Verdict program_refines(const TypedProgram& p, const TypedProgram& q, const TestFamily& family,
                        const RefineOptions& opts = {});

/// Typechecks and inlines `context` with a datatype.
TypedProgram composite(const ProgramContext& context, const CheckedDatatype& d);

/// I ; P(OP) ; F ⊑ I' ; P(OP') ; F' for every context, over its own family.
Verdict data_refines(const CheckedDatatype& a, const CheckedDatatype& c, const std::vector<ProgramContext>& contexts,
                     const FamilySpec& family, const RefineOptions& opts = {});

struct Square {
  std::string name;
  std::string lhs, rhs;  // program text
  Verdict verdict;
  std::optional<Verdict> converse;  // rhs ⊑ lhs, when requested
  bool equality() const { return verdict.holds() && converse && converse->holds(); }
};

struct SimulationReport {
  Verdict verdict;
  std::string gate;  // "hidden" or "choiceless"
  bool gate_passed = false;
  std::vector<Square> squares;
};

struct SimulationOptions {
  RefineOptions refine;
  bool check_converse = true;
};

/// rep : A → C hidden. Squares I_A;rep ⊑ I_C, OP_j;rep ⊑ rep;OP'_j, F_A ⊑ rep;F_C.
SimulationReport check_forward_simulation(const CheckedDatatype& a, const CheckedDatatype& c, const StmtPtr& rep,
                                          const FamilySpec& family, const SimulationOptions& opts = {});

/// rep : C → A choiceless. Squares I_A ⊑ I_C;rep, rep;OP_j ⊑ OP'_j;rep, rep;F_A ⊑ F_C.
SimulationReport check_backward_simulation(const CheckedDatatype& a, const CheckedDatatype& c, const StmtPtr& rep,
                                           const FamilySpec& family, const SimulationOptions& opts = {});

/// Raises TypeError unless both datatypes share state and operation names.
void require_same_signature(const CheckedDatatype& a, const CheckedDatatype& c);

}  // namespace kuifje
