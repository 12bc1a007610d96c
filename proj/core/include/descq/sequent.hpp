#ifndef DESCQ_SEQUENT_HPP
#define DESCQ_SEQUENT_HPP

#include <set>
#include <string>
#include <vector>

#include "descq/syntax.hpp"

namespace descq {

// Multiset-based sequent: multiplicity matters, order does not.
struct Sequent {
  std::vector<Formula> ante;
  std::vector<Formula> succ;

  bool operator==(const Sequent& o) const;
  bool operator!=(const Sequent& o) const { return !(*this == o); }
};

// Multiset helpers over formula vectors.
int mcount(const std::vector<Formula>& xs, const Formula& f);
// Removes one occurrence; returns false if absent.
bool mremove_one(std::vector<Formula>& xs, const Formula& f);
bool multiset_eq(const std::vector<Formula>& a, const std::vector<Formula>& b);
std::vector<Formula> madd(std::vector<Formula> xs, const Formula& f);
std::vector<Formula> mconcat(std::vector<Formula> xs, const std::vector<Formula>& ys);
// a minus b (one occurrence per element of b); returns false if b not <= a.
bool msubtract(std::vector<Formula>& a, const std::vector<Formula>& b);

std::set<std::string> free_vars(const Sequent& s);
bool occurs_in(const std::string& name, const Sequent& s);
void collect_names(const Sequent& s, std::set<std::string>& out);

// Signature read off the symbols occurring in a formula or sequent.
Signature signature_of(const Formula& f);
Signature signature_of(const Sequent& s);

}  // namespace descq

#endif
