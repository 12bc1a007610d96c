#ifndef DESCQ_SYNTAX_HPP
#define DESCQ_SYNTAX_HPP

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace descq {

// First-order terms. Parameters and constants share the Const constructor;
// an identifier is a Var only where an enclosing quantifier binds it.
struct Term {
  enum class Kind { Var, Const, App };

  Kind kind = Kind::Const;
  std::string name;
  std::vector<Term> args;  // App only

  static Term var(std::string n);
  static Term cst(std::string n);
  static Term app(std::string f, std::vector<Term> as);

  bool operator==(const Term& o) const;
  bool operator!=(const Term& o) const { return !(*this == o); }
};

bool term_less(const Term& a, const Term& b);

// Core connective set: {Pred, =, E!, ~, ->, forall, I}. Everything else is
// parse-time sugar.
struct Formula {
  enum class Kind { Pred, Eq, Exists, Not, Imp, Forall, Iq };

  Kind kind = Kind::Pred;
  std::string name;          // predicate name (Pred) or bound variable (Forall, Iq)
  std::vector<Term> terms;   // Pred args; Eq lhs/rhs; Exists operand
  std::vector<Formula> subs; // Not: 1; Imp: 2; Forall: 1; Iq: 2

  static Formula pred(std::string p, std::vector<Term> ts);
  static Formula eq(Term l, Term r);
  static Formula exists_bang(Term t);
  static Formula f_not(Formula a);
  static Formula imp(Formula a, Formula b);
  static Formula forall(std::string x, Formula body);
  static Formula iq(std::string x, Formula a, Formula b);

  // Sugared constructors, expanded to the core connectives.
  static Formula f_and(Formula a, Formula b);  // ~(A -> ~B)
  static Formula f_or(Formula a, Formula b);   // ~A -> B
  static Formula iff(Formula a, Formula b);    // (A -> B) & (B -> A)
  static Formula exists(std::string x, Formula body);  // ~forall x. ~A

  bool is_atomic() const {
    return kind == Kind::Pred || kind == Kind::Eq || kind == Kind::Exists;
  }

  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }
};

// Total structural order, used for canonical multiset handling.
bool formula_less(const Formula& a, const Formula& b);

struct Signature {
  std::map<std::string, int> predicates;
  std::map<std::string, int> functions;
  std::set<std::string> constants;

  bool declares(const std::string& name) const;
  // Throws std::invalid_argument on overlapping name classes or bad arities.
  void validate() const;
};

// --- variable bookkeeping ---------------------------------------------------

std::set<std::string> term_vars(const Term& t);
std::set<std::string> free_vars(const Formula& a);

// All identifiers appearing anywhere: variables (free or bound), constants,
// function and predicate names. Used for freshness.
void collect_names(const Term& t, std::set<std::string>& out);
void collect_names(const Formula& a, std::set<std::string>& out);

// Identifier occurs anywhere in the formula (free, bound, constant, symbol).
bool occurs_in(const std::string& name, const Term& t);
bool occurs_in(const std::string& name, const Formula& a);

// t is free for x in a: no free occurrence of x sits under a binder that
// captures a variable of t.
bool is_free_for(const Term& t, const std::string& x, const Formula& a);

// Capture-avoiding only in the sense of the precondition: throws
// std::invalid_argument("capture-violation") unless is_free_for(t, x, a).
Term substitute(const Term& s, const std::string& x, const Term& t);
Formula substitute(const Formula& a, const std::string& x, const Term& t);

// Fresh identifier derived from base by appending an index, avoiding `avoid`.
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

// Alpha-variant of a with bound variables renamed (innermost first) so that
// is_free_for(t, x, result) holds. Returns a unchanged when already safe.
Formula alphabetic_variant(const Formula& a, const std::string& x, const Term& t);

// --- printing ----------------------------------------------------------------

std::string to_string(const Term& t);
std::string to_string(const Formula& a);

}  // namespace descq

#endif
