#ifndef DESCQ_PROOF_HPP
#define DESCQ_PROOF_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "descq/sequent.hpp"
#include "descq/syntax.hpp"

namespace descq {

enum class Rule {
  Ax, Cut, LW, RW, LC, RC, LNeg, RNeg, LImp, RImp,
  LForall, RForall, EqI, EqE, RI, LI1, LI2, LIff, RIff
};

const char* rule_name(Rule r);
std::optional<Rule> rule_from_name(const std::string& name);

// Instantiation metadata. Each rule requires an exact key subset; the checker
// rejects missing and extra entries.
struct Meta {
  std::optional<std::string> x;   // bound variable
  std::optional<std::string> a;   // eigen-parameter
  std::optional<Term> t, t1, t2;  // witness terms
  std::optional<Formula> A, B, C; // schematic formulas
  std::optional<Formula> cut;     // cut formula

  bool operator==(const Meta& o) const = default;
};

struct Proof;
using ProofPtr = std::shared_ptr<const Proof>;

struct Proof {
  Rule rule;
  Meta meta;
  Sequent conclusion;
  std::vector<ProofPtr> premises;
};

ProofPtr mk_proof(Rule r, Meta m, Sequent conclusion, std::vector<ProofPtr> premises);

int proof_height(const Proof& p);
size_t proof_size(const Proof& p);
void collect_names(const Proof& p, std::set<std::string>& out);
bool contains_cut(const Proof& p);

// iff-expansion used by the LIff/RIff derived rules: (A -> B) & (B -> A)
// in the core connectives.
Formula iff_expand(const Formula& a, const Formula& b);

}  // namespace descq

#endif
