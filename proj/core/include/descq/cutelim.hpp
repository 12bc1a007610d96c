#ifndef DESCQ_CUTELIM_HPP
#define DESCQ_CUTELIM_HPP

#include <functional>
#include <stdexcept>
#include <string>

#include "descq/proof.hpp"

namespace descq {

// Number of connectives (~, ->, forall, I). Atoms, including E!t, have
// degree 0.
int degree(const Formula& a);

// Highest degree of any cut formula; 0 for cut-free proofs.
int proof_degree(const Proof& p);

struct EigenClash : std::runtime_error {
  explicit EigenClash(const std::string& m) : std::runtime_error(m) {}
};

struct PreconditionViolated : std::runtime_error {
  explicit PreconditionViolated(const std::string& m) : std::runtime_error(m) {}
};

struct CutElimError : std::runtime_error {
  explicit CutElimError(const std::string& m) : std::runtime_error(m) {}
};

// Parameter substitution throughout a proof (Substitution Lemma shape):
// every occurrence of the constant `a` becomes t, in sequents and
// instantiation data alike. Height is preserved exactly. Throws EigenClash
// if `a` is an eigen-parameter of some node, if t contains one, or if the
// replacement would be captured by a binder.
ProofPtr substitute_in_proof(const ProofPtr& p, const std::string& a, const Term& t);

// Renames every eigen-parameter to a globally fresh name, so each
// application of RForall/RI/LI1 has its own parameter occurring nowhere
// else. Endsequent unchanged.
ProofPtr regularize(const ProofPtr& p);

struct TraceStep {
  std::string label;
  Formula cut_formula;
  int degree;
};
using TraceFn = std::function<void(const TraceStep&)>;

// Right Reduction: d1 proves T => L, A with A principal in its last rule,
// d2 proves A^k, G => D; both proof degrees < degree(a). Result proves
// T^k, G => L^k, D with proof degree < degree(a).
ProofPtr right_reduce(const ProofPtr& d1, const ProofPtr& d2, const Formula& a, int k,
                      const TraceFn& trace = nullptr);

// Left Reduction: d1 proves G => D, A^k, d2 proves A, T => L; both degrees
// < degree(a). Result proves G, T^k => D, L^k with degree < degree(a).
ProofPtr left_reduce(const ProofPtr& d1, const ProofPtr& d2, const Formula& a, int k,
                     const TraceFn& trace = nullptr);

// Full cut elimination: repeatedly resolves an uppermost cut of maximal
// degree through the reduction lemmas (degree >= 1) or a Gentzen-style mix
// (atomic cut formulas). Macro rules are expanded first. Output checks, is
// cut-free and has the same endsequent.
ProofPtr eliminate_cuts(const ProofPtr& p, const TraceFn& trace = nullptr);

}  // namespace descq

#endif
