#ifndef DESCQ_CHECKER_HPP
#define DESCQ_CHECKER_HPP

#include <optional>
#include <string>
#include <vector>

#include "descq/proof.hpp"

namespace descq {

enum class RuleErrorKind {
  ContextMismatch,
  SideConditionViolated,
  ArityMismatch,
  MetaMissing,
};

struct RuleError {
  RuleErrorKind kind;
  // For SideConditionViolated: "eigenvariable", "substitutability", "atomicity".
  std::string detail;
};

struct CheckFailure {
  std::vector<int> path;  // child indices from the root, pre-order
  RuleError error;
};

std::string to_string(const RuleError& e);
std::string to_string(const CheckFailure& f);

// Verifies a single rule instance: exact multiset context equations plus the
// rule's side conditions. Premises are given as bare sequents.
std::optional<RuleError> check_rule(Rule rule, const Meta& meta,
                                    const std::vector<Sequent>& premises,
                                    const Sequent& conclusion);

std::optional<CheckFailure> check_proof(const Proof& p);
bool checks(const Proof& p);

// Replaces LIff/RIff nodes by their primitive derivations. Output contains
// only primitive rules and has the same endsequent.
ProofPtr expand_macros(const ProofPtr& p);

// Derived rule: the general form of EqI for an arbitrary formula schema,
// built by induction from atomic EqI instances.
// Input proves  subst(A, x, t2), ctx  and the result proves
// t1 = t2, subst(A, x, t1), ctx  with the same succedent.
ProofPtr general_eqi(const ProofPtr& premise, const Formula& a, const std::string& x,
                     const Term& t1, const Term& t2);

}  // namespace descq

#endif
