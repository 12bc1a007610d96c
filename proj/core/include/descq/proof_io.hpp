#ifndef DESCQ_PROOF_IO_HPP
#define DESCQ_PROOF_IO_HPP

#include <string>

#include "descq/proof.hpp"

namespace descq {

// Textual proof format, one s-expression per node:
//   (rule ((key value) ...) "<sequent>" <subproof> ...)
// Sequent text uses the formula grammar with "|-". Term- and formula-valued
// entries are quoted strings; identifiers are bare atoms.
std::string write_proof(const Proof& p);

// Symbols are inferred into sig while reading.
ProofPtr read_proof(const std::string& text, Signature& sig);

}  // namespace descq

#endif
