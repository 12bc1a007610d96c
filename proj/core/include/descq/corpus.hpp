#ifndef DESCQ_CORPUS_HPP
#define DESCQ_CORPUS_HPP

#include <map>
#include <string>
#include <vector>

#include "descq/proof.hpp"

namespace descq {

// Signature the stock derivations live in: F, G, H, P unary, constants
// t, a, b, c, d.
Signature corpus_signature();

// Named derivations: law-of-identity, leibniz-law, fl-analogue,
// leibniz-mimic-1/2/3, half-ll. All pass check_proof.
std::map<std::string, ProofPtr> derivation_corpus();

// Parametric builders behind the stock instances.
// Ix[A, x = t], B[t/x] |- Ix[A, B]
ProofPtr mimic1_proof(const Formula& a, const Formula& b, const Term& t,
                      const std::string& x = "x");
// Ix[A, x = t], Ix[A, B] |- B[t/x]   (B atomic)
ProofPtr mimic2_proof(const Formula& a, const Formula& b, const Term& t,
                      const std::string& x = "x");
// |- Ix[x = t, x = t]
ProofPtr fl_proof(const Term& t, const std::string& x = "x");

// Proofs containing Cut nodes, used to exercise cut elimination. Every entry
// checks; cut formulas cover I, forall, ->, ~ and atoms.
std::vector<std::pair<std::string, ProofPtr>> cut_fixtures();

// Sequents claimed underivable, each refutable by a small finite structure.
struct NonDerivabilityClaim {
  std::string name;
  std::string sequent;
  int max_outer;
};
std::vector<NonDerivabilityClaim> non_derivability_claims();

}  // namespace descq

#endif
