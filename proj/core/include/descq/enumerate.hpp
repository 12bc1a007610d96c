#ifndef DESCQ_ENUMERATE_HPP
#define DESCQ_ENUMERATE_HPP

#include <functional>
#include <optional>

#include "descq/model.hpp"

namespace descq {

// Streams every structure over sig with outer size 1..max_outer, each exactly
// once up to the canonical carrier {0, ..., n-1}. Enumeration order is fixed:
// by size, then inner domain, constants, predicate extensions, function
// tables.
class StructureEnumerator {
 public:
  StructureEnumerator(Signature sig, int max_outer);

  std::optional<Structure> next();

 private:
  void start_size(int n);
  bool bump();

  Signature sig_;
  int max_outer_;
  int n_ = 0;
  bool done_ = false;
  // Odometer over all choice slots for the current size.
  std::vector<int> digits_;
  std::vector<long long> radix_;
  Structure build() const;
};

// Number of structures over sig with outer size exactly n.
long long structure_count(const Signature& sig, int n);

struct Countermodel {
  Structure structure;
  Assignment assignment;
};

// Exhaustive refutation search over all structures up to max_outer and all
// assignments of the sequent's free variables. jobs > 1 partitions the
// per-size stream across threads; any falsifying witness is returned.
std::optional<Countermodel> find_countermodel(const Sequent& q, const Signature& sig,
                                              int max_outer, int jobs = 1);

// As above for a single formula (the sequent |- a).
std::optional<Countermodel> find_countermodel(const Formula& a, const Signature& sig,
                                              int max_outer, int jobs = 1);

}  // namespace descq

#endif
