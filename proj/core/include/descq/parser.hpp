#ifndef DESCQ_PARSER_HPP
#define DESCQ_PARSER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

#include "descq/sequent.hpp"
#include "descq/syntax.hpp"

namespace descq {

struct ParseError : std::runtime_error {
  size_t offset;  // byte offset into the input
  ParseError(std::string msg, size_t off)
      : std::runtime_error(std::move(msg)), offset(off) {}
};

// Strict mode: every symbol must be declared in sig, arities must match.
Formula parse_formula(const std::string& text, const Signature& sig);
Term parse_term(const std::string& text, const Signature& sig);

// Sequent syntax: "A1, A2 |- B1, B2"; either side may be empty.
Sequent parse_sequent(const std::string& text, const Signature& sig);

// Inferring mode: grows sig as symbols are first seen; later uses must be
// consistent (same kind, same arity).
Formula parse_formula_infer(const std::string& text, Signature& sig);
Sequent parse_sequent_infer(const std::string& text, Signature& sig);

// As above, but identifiers listed in free_vars parse as variables even when
// not bound by a quantifier (schematic formulas in proof files).
Formula parse_formula_infer(const std::string& text, Signature& sig,
                            const std::set<std::string>& free_vars);
Term parse_term_infer(const std::string& text, Signature& sig,
                      const std::set<std::string>& free_vars);

std::string to_string(const Sequent& s);

}  // namespace descq

#endif
