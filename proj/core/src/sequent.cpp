#include "descq/sequent.hpp"

#include <algorithm>

namespace descq {

int mcount(const std::vector<Formula>& xs, const Formula& f) {
  int n = 0;
  for (const Formula& x : xs)
    if (x == f) ++n;
  return n;
}

bool mremove_one(std::vector<Formula>& xs, const Formula& f) {
  for (auto it = xs.begin(); it != xs.end(); ++it) {
    if (*it == f) {
      xs.erase(it);
      return true;
    }
  }
  return false;
}

bool multiset_eq(const std::vector<Formula>& a, const std::vector<Formula>& b) {
  if (a.size() != b.size()) return false;
  std::vector<Formula> sa = a, sb = b;
  std::sort(sa.begin(), sa.end(), formula_less);
  std::sort(sb.begin(), sb.end(), formula_less);
  return sa == sb;
}

std::vector<Formula> madd(std::vector<Formula> xs, const Formula& f) {
  xs.push_back(f);
  return xs;
}

std::vector<Formula> mconcat(std::vector<Formula> xs, const std::vector<Formula>& ys) {
  xs.insert(xs.end(), ys.begin(), ys.end());
  return xs;
}

bool msubtract(std::vector<Formula>& a, const std::vector<Formula>& b) {
  for (const Formula& f : b)
    if (!mremove_one(a, f)) return false;
  return true;
}

bool Sequent::operator==(const Sequent& o) const {
  return multiset_eq(ante, o.ante) && multiset_eq(succ, o.succ);
}

std::set<std::string> free_vars(const Sequent& s) {
  std::set<std::string> out;
  for (const Formula& f : s.ante)
    for (auto& v : free_vars(f)) out.insert(v);
  for (const Formula& f : s.succ)
    for (auto& v : free_vars(f)) out.insert(v);
  return out;
}

bool occurs_in(const std::string& name, const Sequent& s) {
  for (const Formula& f : s.ante)
    if (occurs_in(name, f)) return true;
  for (const Formula& f : s.succ)
    if (occurs_in(name, f)) return true;
  return false;
}

void collect_names(const Sequent& s, std::set<std::string>& out) {
  for (const Formula& f : s.ante) collect_names(f, out);
  for (const Formula& f : s.succ) collect_names(f, out);
}

namespace {

void sig_of_term(const Term& t, Signature& sig) {
  if (t.kind == Term::Kind::Const) sig.constants.insert(t.name);
  if (t.kind == Term::Kind::App) {
    sig.functions[t.name] = static_cast<int>(t.args.size());
    for (const Term& a : t.args) sig_of_term(a, sig);
  }
}

void sig_of_formula(const Formula& f, Signature& sig) {
  if (f.kind == Formula::Kind::Pred)
    sig.predicates[f.name] = static_cast<int>(f.terms.size());
  for (const Term& t : f.terms) sig_of_term(t, sig);
  for (const Formula& s : f.subs) sig_of_formula(s, sig);
}

}  // namespace

Signature signature_of(const Formula& f) {
  Signature sig;
  sig_of_formula(f, sig);
  return sig;
}

Signature signature_of(const Sequent& s) {
  Signature sig;
  for (const Formula& f : s.ante) sig_of_formula(f, sig);
  for (const Formula& f : s.succ) sig_of_formula(f, sig);
  return sig;
}

}  // namespace descq
