#include "descq/syntax.hpp"

#include <algorithm>
#include <sstream>

namespace descq {

Term Term::var(std::string n) {
  Term t;
  t.kind = Kind::Var;
  t.name = std::move(n);
  return t;
}

Term Term::cst(std::string n) {
  Term t;
  t.kind = Kind::Const;
  t.name = std::move(n);
  return t;
}

Term Term::app(std::string f, std::vector<Term> as) {
  Term t;
  t.kind = Kind::App;
  t.name = std::move(f);
  t.args = std::move(as);
  return t;
}

bool Term::operator==(const Term& o) const {
  return kind == o.kind && name == o.name && args == o.args;
}

bool term_less(const Term& a, const Term& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.name != b.name) return a.name < b.name;
  return std::lexicographical_compare(a.args.begin(), a.args.end(),
                                      b.args.begin(), b.args.end(), term_less);
}

Formula Formula::pred(std::string p, std::vector<Term> ts) {
  Formula f;
  f.kind = Kind::Pred;
  f.name = std::move(p);
  f.terms = std::move(ts);
  return f;
}

Formula Formula::eq(Term l, Term r) {
  Formula f;
  f.kind = Kind::Eq;
  f.terms = {std::move(l), std::move(r)};
  return f;
}

Formula Formula::exists_bang(Term t) {
  Formula f;
  f.kind = Kind::Exists;
  f.terms = {std::move(t)};
  return f;
}

Formula Formula::f_not(Formula a) {
  Formula f;
  f.kind = Kind::Not;
  f.subs = {std::move(a)};
  return f;
}

Formula Formula::imp(Formula a, Formula b) {
  Formula f;
  f.kind = Kind::Imp;
  f.subs = {std::move(a), std::move(b)};
  return f;
}

Formula Formula::forall(std::string x, Formula body) {
  Formula f;
  f.kind = Kind::Forall;
  f.name = std::move(x);
  f.subs = {std::move(body)};
  return f;
}

Formula Formula::iq(std::string x, Formula a, Formula b) {
  Formula f;
  f.kind = Kind::Iq;
  f.name = std::move(x);
  f.subs = {std::move(a), std::move(b)};
  return f;
}

Formula Formula::f_and(Formula a, Formula b) {
  return f_not(imp(std::move(a), f_not(std::move(b))));
}

Formula Formula::f_or(Formula a, Formula b) {
  return imp(f_not(std::move(a)), std::move(b));
}

Formula Formula::iff(Formula a, Formula b) {
  Formula ab = imp(a, b);
  Formula ba = imp(std::move(b), std::move(a));
  return f_and(std::move(ab), std::move(ba));
}

Formula Formula::exists(std::string x, Formula body) {
  return f_not(forall(std::move(x), f_not(std::move(body))));
}

bool Formula::operator==(const Formula& o) const {
  return kind == o.kind && name == o.name && terms == o.terms && subs == o.subs;
}

bool formula_less(const Formula& a, const Formula& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.name != b.name) return a.name < b.name;
  if (a.terms != b.terms)
    return std::lexicographical_compare(a.terms.begin(), a.terms.end(),
                                        b.terms.begin(), b.terms.end(), term_less);
  return std::lexicographical_compare(a.subs.begin(), a.subs.end(),
                                      b.subs.begin(), b.subs.end(), formula_less);
}

bool Signature::declares(const std::string& name) const {
  return predicates.count(name) || functions.count(name) || constants.count(name);
}

void Signature::validate() const {
  for (const auto& [p, n] : predicates) {
    if (n < 1) throw std::invalid_argument("predicate arity must be >= 1: " + p);
    if (functions.count(p) || constants.count(p))
      throw std::invalid_argument("overloaded symbol: " + p);
  }
  for (const auto& [f, n] : functions) {
    if (n < 1) throw std::invalid_argument("function arity must be >= 1: " + f);
    if (constants.count(f)) throw std::invalid_argument("overloaded symbol: " + f);
  }
}

std::set<std::string> term_vars(const Term& t) {
  std::set<std::string> out;
  if (t.kind == Term::Kind::Var) out.insert(t.name);
  for (const Term& a : t.args)
    for (auto& v : term_vars(a)) out.insert(v);
  return out;
}

static void free_vars_into(const Formula& a, std::set<std::string>& bound,
                           std::set<std::string>& out) {
  for (const Term& t : a.terms)
    for (auto& v : term_vars(t))
      if (!bound.count(v)) out.insert(v);
  switch (a.kind) {
    case Formula::Kind::Forall:
    case Formula::Kind::Iq: {
      bool fresh = bound.insert(a.name).second;
      for (const Formula& s : a.subs) free_vars_into(s, bound, out);
      if (fresh) bound.erase(a.name);
      break;
    }
    default:
      for (const Formula& s : a.subs) free_vars_into(s, bound, out);
  }
}

std::set<std::string> free_vars(const Formula& a) {
  std::set<std::string> bound, out;
  free_vars_into(a, bound, out);
  return out;
}

void collect_names(const Term& t, std::set<std::string>& out) {
  out.insert(t.name);
  for (const Term& a : t.args) collect_names(a, out);
}

void collect_names(const Formula& a, std::set<std::string>& out) {
  if (!a.name.empty()) out.insert(a.name);
  for (const Term& t : a.terms) collect_names(t, out);
  for (const Formula& s : a.subs) collect_names(s, out);
}

bool occurs_in(const std::string& name, const Term& t) {
  if (t.name == name) return true;
  for (const Term& a : t.args)
    if (occurs_in(name, a)) return true;
  return false;
}

bool occurs_in(const std::string& name, const Formula& a) {
  if (a.name == name) return true;
  for (const Term& t : a.terms)
    if (occurs_in(name, t)) return true;
  for (const Formula& s : a.subs)
    if (occurs_in(name, s)) return true;
  return false;
}

static bool is_free_for_rec(const Term& t, const std::string& x, const Formula& a,
                            const std::set<std::string>& tvars) {
  switch (a.kind) {
    case Formula::Kind::Forall:
    case Formula::Kind::Iq: {
      if (a.name == x) return true;  // no free x below
      bool x_free_below = false;
      for (const Formula& s : a.subs)
        if (free_vars(s).count(x)) x_free_below = true;
      if (!x_free_below) return true;
      if (tvars.count(a.name)) return false;
      for (const Formula& s : a.subs)
        if (!is_free_for_rec(t, x, s, tvars)) return false;
      return true;
    }
    default:
      for (const Formula& s : a.subs)
        if (!is_free_for_rec(t, x, s, tvars)) return false;
      return true;
  }
}

bool is_free_for(const Term& t, const std::string& x, const Formula& a) {
  return is_free_for_rec(t, x, a, term_vars(t));
}

Term substitute(const Term& s, const std::string& x, const Term& t) {
  if (s.kind == Term::Kind::Var && s.name == x) return t;
  if (s.kind == Term::Kind::App) {
    Term out = s;
    for (Term& a : out.args) a = substitute(a, x, t);
    return out;
  }
  return s;
}

static Formula substitute_unchecked(const Formula& a, const std::string& x, const Term& t) {
  Formula out = a;
  switch (a.kind) {
    case Formula::Kind::Forall:
    case Formula::Kind::Iq:
      if (a.name == x) return out;  // x bound here, nothing free below
      for (Formula& s : out.subs) s = substitute_unchecked(s, x, t);
      return out;
    default:
      for (Term& s : out.terms) s = substitute(s, x, t);
      for (Formula& s : out.subs) s = substitute_unchecked(s, x, t);
      return out;
  }
}

Formula substitute(const Formula& a, const std::string& x, const Term& t) {
  if (!is_free_for(t, x, a)) throw std::invalid_argument("capture-violation");
  return substitute_unchecked(a, x, t);
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  if (!avoid.count(base)) return base;
  for (int i = 1;; ++i) {
    std::string cand = base + std::to_string(i);
    if (!avoid.count(cand)) return cand;
  }
}

static Formula variant_rec(const Formula& a, const std::string& x, const Term& t,
                           const std::set<std::string>& tvars,
                           std::set<std::string>& avoid) {
  Formula out = a;
  switch (a.kind) {
    case Formula::Kind::Forall:
    case Formula::Kind::Iq: {
      if (a.name == x) return out;
      for (Formula& s : out.subs) s = variant_rec(s, x, t, tvars, avoid);
      bool x_free_below = false;
      for (const Formula& s : out.subs)
        if (free_vars(s).count(x)) x_free_below = true;
      if (x_free_below && tvars.count(out.name)) {
        std::string fresh = fresh_name(out.name, avoid);
        avoid.insert(fresh);
        Term v = Term::var(fresh);
        for (Formula& s : out.subs) s = substitute_unchecked(s, out.name, v);
        out.name = fresh;
      }
      return out;
    }
    default:
      for (Formula& s : out.subs) s = variant_rec(s, x, t, tvars, avoid);
      return out;
  }
}

Formula alphabetic_variant(const Formula& a, const std::string& x, const Term& t) {
  if (is_free_for(t, x, a)) return a;
  std::set<std::string> avoid;
  collect_names(a, avoid);
  collect_names(t, avoid);
  avoid.insert(x);
  return variant_rec(a, x, t, term_vars(t), avoid);
}

// --- printing ----------------------------------------------------------------

std::string to_string(const Term& t) {
  if (t.kind != Term::Kind::App) return t.name;
  std::string out = t.name + "(";
  for (size_t i = 0; i < t.args.size(); ++i) {
    if (i) out += ", ";
    out += to_string(t.args[i]);
  }
  return out + ")";
}

// Precedence: atoms/Iq bind tightest, then ~, then -> (right associative).
// forall extends maximally right, so it needs parentheses whenever something
// follows it on the right.
static void print_rec(const Formula& a, std::ostringstream& os, int min_prec,
                      bool right_open) {
  switch (a.kind) {
    case Formula::Kind::Pred: {
      os << a.name << "(";
      for (size_t i = 0; i < a.terms.size(); ++i) {
        if (i) os << ", ";
        os << to_string(a.terms[i]);
      }
      os << ")";
      return;
    }
    case Formula::Kind::Eq:
      os << to_string(a.terms[0]) << " = " << to_string(a.terms[1]);
      return;
    case Formula::Kind::Exists:
      os << "E! " << to_string(a.terms[0]);
      return;
    case Formula::Kind::Iq: {
      os << "I " << a.name << " [";
      print_rec(a.subs[0], os, 0, true);
      os << ", ";
      print_rec(a.subs[1], os, 0, true);
      os << "]";
      return;
    }
    case Formula::Kind::Not: {
      os << "~";
      print_rec(a.subs[0], os, 3, right_open);
      return;
    }
    case Formula::Kind::Imp: {
      bool parens = min_prec > 1 || !right_open;
      if (parens) os << "(";
      print_rec(a.subs[0], os, 2, false);
      os << " -> ";
      print_rec(a.subs[1], os, 1, parens ? true : right_open);
      if (parens) os << ")";
      return;
    }
    case Formula::Kind::Forall: {
      bool parens = !right_open;
      if (parens) os << "(";
      os << "forall " << a.name << ". ";
      print_rec(a.subs[0], os, 0, true);
      if (parens) os << ")";
      return;
    }
  }
}

std::string to_string(const Formula& a) {
  std::ostringstream os;
  print_rec(a, os, 0, true);
  return os.str();
}

}  // namespace descq
