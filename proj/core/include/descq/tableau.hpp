#ifndef DESCQ_TABLEAU_HPP
#define DESCQ_TABLEAU_HPP

#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "descq/enumerate.hpp"
#include "descq/model.hpp"
#include "descq/sequent.hpp"

namespace descq {

struct FormulaLess {
  bool operator()(const Formula& a, const Formula& b) const { return formula_less(a, b); }
};
struct TermLess {
  bool operator()(const Term& a, const Term& b) const { return term_less(a, b); }
};

struct Budget {
  int max_gamma = 64;
  int max_fresh = 16;
};

// One scheduled rule instance.
struct Instance {
  enum class Kind {
    Alpha,        // ~~A or ~(A -> B)
    Beta,         // A -> B
    DeltaNotAll,  // ~forall x A
    DeltaIq,      // Ix[A, B]: witness introduction
    GammaAll,     // forall x A  x  term
    GammaIq,      // Ix[A, B]: uniqueness leg  x  term
    GammaNotIq,   // ~Ix[A, B]  x  term (fresh parameter per instance)
    Refl,         // t = t for a branch term
    Subst         // rewrite an atom along an identity
  };
  Kind kind;
  Formula f;  // principal formula (or the atom for Subst)
  Term t;     // term parameter (Gamma*, Refl)
  Formula id; // identity (Subst)
};

const char* instance_rule_name(Instance::Kind k);

// Displayed tableau tree: one node per expansion, children per branch split.
struct TabNode {
  std::string rule;
  std::vector<Formula> added;
  bool closed = false;
  std::vector<std::shared_ptr<TabNode>> children;
};

struct Branch {
  std::set<Formula, FormulaLess> formulas;
  std::vector<Formula> order;  // insertion order, for reporting
  std::set<Term, TermLess> terms;
  std::deque<Instance> queue;
  std::map<Formula, std::string, FormulaLess> iq_witness;
  std::set<std::string> scheduled;  // dedup keys for enqueued instances
  std::set<std::string> used_names;
  int gamma_used = 0;
  int fresh_used = 0;
  bool closed = false;
  bool budget_skipped = false;  // an instance was dropped for budget
  std::shared_ptr<TabNode> node;  // current leaf of the displayed tree

  bool contains(const Formula& f) const { return formulas.count(f) != 0; }
};

struct NoApplicableRule : std::runtime_error {
  NoApplicableRule() : std::runtime_error("branch is saturated") {}
};

struct ExtractionFailed : std::runtime_error {
  explicit ExtractionFailed(const std::string& m) : std::runtime_error(m) {}
};

// Root branch for refuting q: antecedent plus negated succedent, seeded with
// one fresh constant when no term occurs.
Branch root_branch(const Sequent& q);

bool is_closed(const Branch& b);

// Applies the front instance of the queue; children in rule order. Throws
// NoApplicableRule when the queue is empty.
std::vector<Branch> expand_step(const Branch& b);

// Term-class model from an open saturated branch; verified against every
// branch formula. Throws ExtractionFailed when verification fails.
Countermodel extract_model(const Branch& b);

struct ResourceReport {
  int gamma_used = 0;
  int fresh_used = 0;
  int branches_closed = 0;
  bool budget_hit = false;
};

struct TableauResult {
  enum class Kind { Proof, Countermodel, Unknown };
  Kind kind;
  std::shared_ptr<TabNode> tree;
  std::optional<descq::Countermodel> model;
  Branch open_branch;  // meaningful for Countermodel
  ResourceReport report;
};

TableauResult prove(const Sequent& q, const Budget& budget = {});

std::string render_tree(const TabNode& root);

}  // namespace descq

#endif
