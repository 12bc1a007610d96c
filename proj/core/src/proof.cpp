#include "descq/proof.hpp"

#include <algorithm>

namespace descq {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Ax: return "ax";
    case Rule::Cut: return "cut";
    case Rule::LW: return "lw";
    case Rule::RW: return "rw";
    case Rule::LC: return "lc";
    case Rule::RC: return "rc";
    case Rule::LNeg: return "lneg";
    case Rule::RNeg: return "rneg";
    case Rule::LImp: return "limp";
    case Rule::RImp: return "rimp";
    case Rule::LForall: return "lforall";
    case Rule::RForall: return "rforall";
    case Rule::EqI: return "eqi";
    case Rule::EqE: return "eqe";
    case Rule::RI: return "ri";
    case Rule::LI1: return "li1";
    case Rule::LI2: return "li2";
    case Rule::LIff: return "liff";
    case Rule::RIff: return "riff";
  }
  return "?";
}

std::optional<Rule> rule_from_name(const std::string& name) {
  static const std::pair<const char*, Rule> table[] = {
      {"ax", Rule::Ax},       {"cut", Rule::Cut},     {"lw", Rule::LW},
      {"rw", Rule::RW},       {"lc", Rule::LC},       {"rc", Rule::RC},
      {"lneg", Rule::LNeg},   {"rneg", Rule::RNeg},   {"limp", Rule::LImp},
      {"rimp", Rule::RImp},   {"lforall", Rule::LForall},
      {"rforall", Rule::RForall}, {"eqi", Rule::EqI}, {"eqe", Rule::EqE},
      {"ri", Rule::RI},       {"li1", Rule::LI1},     {"li2", Rule::LI2},
      {"liff", Rule::LIff},   {"riff", Rule::RIff},
  };
  for (auto& [n, r] : table)
    if (name == n) return r;
  return std::nullopt;
}

ProofPtr mk_proof(Rule r, Meta m, Sequent conclusion, std::vector<ProofPtr> premises) {
  auto p = std::make_shared<Proof>();
  p->rule = r;
  p->meta = std::move(m);
  p->conclusion = std::move(conclusion);
  p->premises = std::move(premises);
  return p;
}

int proof_height(const Proof& p) {
  int h = 0;
  for (const auto& q : p.premises) h = std::max(h, proof_height(*q));
  return h + 1;
}

size_t proof_size(const Proof& p) {
  size_t n = 1;
  for (const auto& q : p.premises) n += proof_size(*q);
  return n;
}

void collect_names(const Proof& p, std::set<std::string>& out) {
  collect_names(p.conclusion, out);
  if (p.meta.x) out.insert(*p.meta.x);
  if (p.meta.a) out.insert(*p.meta.a);
  if (p.meta.t) collect_names(*p.meta.t, out);
  if (p.meta.t1) collect_names(*p.meta.t1, out);
  if (p.meta.t2) collect_names(*p.meta.t2, out);
  if (p.meta.A) collect_names(*p.meta.A, out);
  if (p.meta.B) collect_names(*p.meta.B, out);
  if (p.meta.C) collect_names(*p.meta.C, out);
  if (p.meta.cut) collect_names(*p.meta.cut, out);
  for (const auto& q : p.premises) collect_names(*q, out);
}

bool contains_cut(const Proof& p) {
  if (p.rule == Rule::Cut) return true;
  for (const auto& q : p.premises)
    if (contains_cut(*q)) return true;
  return false;
}

Formula iff_expand(const Formula& a, const Formula& b) {
  return Formula::iff(a, b);
}

}  // namespace descq
