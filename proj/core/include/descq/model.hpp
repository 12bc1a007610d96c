#ifndef DESCQ_MODEL_HPP
#define DESCQ_MODEL_HPP

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "descq/sequent.hpp"
#include "descq/syntax.hpp"

namespace descq {

using Elem = int;

// Finite dual-domain structure. The carrier is {0, ..., outer_size-1}; the
// inner domain (range of forall, extension of E!) is a subset of it, possibly
// empty.
struct Structure {
  int outer_size = 1;
  std::set<Elem> inner;
  std::map<std::string, std::set<std::vector<Elem>>> pred_ext;
  std::map<std::string, Elem> const_den;
  // Function tables, indexed row-major over argument tuples.
  std::map<std::string, std::vector<Elem>> func_den;

  bool operator==(const Structure& o) const = default;
};

struct Assignment {
  std::map<std::string, Elem> map;

  Elem at(const std::string& x) const;
  Assignment updated(const std::string& x, Elem d) const;
};

struct UnboundVariable : std::runtime_error {
  explicit UnboundVariable(const std::string& v)
      : std::runtime_error("unbound variable: " + v) {}
};

Elem eval_term(const Structure& m, const Assignment& s, const Term& t);
bool satisfies(const Structure& m, const Assignment& s, const Formula& a);
bool satisfies_sequent(const Structure& m, const Assignment& s, const Sequent& q);

// Elements of the outer domain witnessing the first component of Ix[A, B].
std::vector<Elem> iq_witnesses(const Structure& m, const Assignment& s,
                               const std::string& x, const Formula& a);

// --- model file format ---------------------------------------------------

std::string to_string(const Structure& m);
std::string to_string(const Structure& m, const Assignment& s);
Structure parse_structure(std::istream& in, Assignment* assignment = nullptr);
Structure parse_structure_text(const std::string& text, Assignment* assignment = nullptr);

}  // namespace descq

#endif
