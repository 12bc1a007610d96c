#include "descq/checker.hpp"

#include <sstream>

#include "descq/derive.hpp"

namespace descq {

std::string to_string(const RuleError& e) {
  switch (e.kind) {
    case RuleErrorKind::ContextMismatch: return "ContextMismatch: " + e.detail;
    case RuleErrorKind::SideConditionViolated: return "SideConditionViolated(" + e.detail + ")";
    case RuleErrorKind::ArityMismatch: return "ArityMismatch: " + e.detail;
    case RuleErrorKind::MetaMissing: return "MetaMissing: " + e.detail;
  }
  return "?";
}

std::string to_string(const CheckFailure& f) {
  std::ostringstream os;
  os << "at [";
  for (size_t i = 0; i < f.path.size(); ++i) {
    if (i) os << ".";
    os << f.path[i];
  }
  os << "] " << to_string(f.error);
  return os.str();
}

namespace {

using R = RuleErrorKind;

std::optional<RuleError> err(R k, std::string d) {
  return RuleError{k, std::move(d)};
}

int rule_arity(Rule r) {
  switch (r) {
    case Rule::Ax: return 0;
    case Rule::Cut: case Rule::LImp: case Rule::LIff: case Rule::RIff: return 2;
    case Rule::RI: case Rule::LI2: return 3;
    default: return 1;
  }
}

// Exact meta key requirements per rule.
struct Keys {
  bool x = false, a = false, t = false, t1 = false, t2 = false;
  bool A = false, B = false, C = false, cut = false;
};

Keys required_keys(Rule r) {
  Keys k;
  switch (r) {
    case Rule::Ax: break;
    case Rule::Cut: k.cut = true; break;
    case Rule::LW: case Rule::RW: case Rule::LC: case Rule::RC:
    case Rule::LNeg: case Rule::RNeg: k.A = true; break;
    case Rule::LImp: case Rule::RImp: case Rule::LIff: case Rule::RIff:
      k.A = k.B = true; break;
    case Rule::LForall: k.x = k.A = k.t = true; break;
    case Rule::RForall: k.x = k.A = k.a = true; break;
    case Rule::EqI: k.x = k.A = k.t1 = k.t2 = true; break;
    case Rule::EqE: k.t = true; break;
    case Rule::RI: k.x = k.A = k.B = k.t = k.a = true; break;
    case Rule::LI1: k.x = k.A = k.B = k.a = true; break;
    case Rule::LI2: k.x = k.A = k.B = k.C = k.t1 = k.t2 = true; break;
  }
  return k;
}

std::optional<RuleError> check_keys(Rule r, const Meta& m) {
  Keys k = required_keys(r);
  auto bad = [&](const char* key, bool want, bool have) -> std::optional<RuleError> {
    if (want && !have) return err(R::MetaMissing, std::string("missing key ") + key);
    if (!want && have) return err(R::MetaMissing, std::string("unexpected key ") + key);
    return std::nullopt;
  };
  if (auto e = bad("x", k.x, m.x.has_value())) return e;
  if (auto e = bad("a", k.a, m.a.has_value())) return e;
  if (auto e = bad("t", k.t, m.t.has_value())) return e;
  if (auto e = bad("t1", k.t1, m.t1.has_value())) return e;
  if (auto e = bad("t2", k.t2, m.t2.has_value())) return e;
  if (auto e = bad("A", k.A, m.A.has_value())) return e;
  if (auto e = bad("B", k.B, m.B.has_value())) return e;
  if (auto e = bad("C", k.C, m.C.has_value())) return e;
  if (auto e = bad("cutFormula", k.cut, m.cut.has_value())) return e;
  return std::nullopt;
}

bool seq_eq(const Sequent& s, const std::vector<Formula>& ante,
            const std::vector<Formula>& succ) {
  return multiset_eq(s.ante, ante) && multiset_eq(s.succ, succ);
}

// substitute with the capture check folded into a rule error
std::optional<Formula> subst_checked(const Formula& a, const std::string& x,
                                     const Term& t, std::optional<RuleError>& e) {
  if (!is_free_for(t, x, a)) {
    e = err(R::SideConditionViolated, "substitutability");
    return std::nullopt;
  }
  return substitute(a, x, t);
}

}  // namespace

std::optional<RuleError> check_rule(Rule rule, const Meta& meta,
                                    const std::vector<Sequent>& prem,
                                    const Sequent& conc) {
  if (static_cast<int>(prem.size()) != rule_arity(rule))
    return err(R::ArityMismatch, "premise count");
  if (auto e = check_keys(rule, meta)) return e;

  std::optional<RuleError> serr;
  auto mismatch = [&]() { return err(R::ContextMismatch, rule_name(rule)); };

  switch (rule) {
    case Rule::Ax: {
      if (conc.ante.size() == 1 && conc.succ.size() == 1 && conc.ante[0] == conc.succ[0])
        return std::nullopt;
      return mismatch();
    }
    case Rule::Cut: {
      const Formula& f = *meta.cut;
      std::vector<Formula> s1 = prem[0].succ, a2 = prem[1].ante;
      if (!mremove_one(s1, f) || !mremove_one(a2, f))
        return err(R::ContextMismatch, "cut formula not in premises");
      if (seq_eq(conc, mconcat(prem[0].ante, a2), mconcat(s1, prem[1].succ)))
        return std::nullopt;
      return mismatch();
    }
    case Rule::LW:
      if (seq_eq(conc, madd(prem[0].ante, *meta.A), prem[0].succ)) return std::nullopt;
      return mismatch();
    case Rule::RW:
      if (seq_eq(conc, prem[0].ante, madd(prem[0].succ, *meta.A))) return std::nullopt;
      return mismatch();
    case Rule::LC:
      if (mcount(conc.ante, *meta.A) >= 1 &&
          seq_eq(prem[0], madd(conc.ante, *meta.A), conc.succ))
        return std::nullopt;
      return mismatch();
    case Rule::RC:
      if (mcount(conc.succ, *meta.A) >= 1 &&
          seq_eq(prem[0], conc.ante, madd(conc.succ, *meta.A)))
        return std::nullopt;
      return mismatch();
    case Rule::LNeg: {
      std::vector<Formula> g = conc.ante;
      if (!mremove_one(g, Formula::f_not(*meta.A)))
        return err(R::ContextMismatch, "principal ~A not in conclusion");
      if (seq_eq(prem[0], g, madd(conc.succ, *meta.A))) return std::nullopt;
      return mismatch();
    }
    case Rule::RNeg: {
      std::vector<Formula> d = conc.succ;
      if (!mremove_one(d, Formula::f_not(*meta.A)))
        return err(R::ContextMismatch, "principal ~A not in conclusion");
      if (seq_eq(prem[0], madd(conc.ante, *meta.A), d)) return std::nullopt;
      return mismatch();
    }
    case Rule::LImp: {
      std::vector<Formula> g = conc.ante;
      if (!mremove_one(g, Formula::imp(*meta.A, *meta.B)))
        return err(R::ContextMismatch, "principal A -> B not in conclusion");
      if (seq_eq(prem[0], g, madd(conc.succ, *meta.A)) &&
          seq_eq(prem[1], madd(g, *meta.B), conc.succ))
        return std::nullopt;
      return mismatch();
    }
    case Rule::RImp: {
      std::vector<Formula> d = conc.succ;
      if (!mremove_one(d, Formula::imp(*meta.A, *meta.B)))
        return err(R::ContextMismatch, "principal A -> B not in conclusion");
      if (seq_eq(prem[0], madd(conc.ante, *meta.A), madd(d, *meta.B)))
        return std::nullopt;
      return mismatch();
    }
    case Rule::LForall: {
      auto at = subst_checked(*meta.A, *meta.x, *meta.t, serr);
      if (serr) return serr;
      std::vector<Formula> g = conc.ante;
      if (!mremove_one(g, Formula::exists_bang(*meta.t)) ||
          !mremove_one(g, Formula::forall(*meta.x, *meta.A)))
        return err(R::ContextMismatch, "E!t / forall not in conclusion");
      if (seq_eq(prem[0], madd(g, *at), conc.succ)) return std::nullopt;
      return mismatch();
    }
    case Rule::RForall: {
      if (occurs_in(*meta.a, conc))
        return err(R::SideConditionViolated, "eigenvariable");
      std::vector<Formula> d = conc.succ;
      if (!mremove_one(d, Formula::forall(*meta.x, *meta.A)))
        return err(R::ContextMismatch, "principal forall not in conclusion");
      Formula aa = substitute(*meta.A, *meta.x, Term::cst(*meta.a));
      if (seq_eq(prem[0], madd(conc.ante, Formula::exists_bang(Term::cst(*meta.a))),
                 madd(d, aa)))
        return std::nullopt;
      return mismatch();
    }
    case Rule::EqI: {
      if (!meta.A->is_atomic())
        return err(R::SideConditionViolated, "atomicity");
      auto a1 = subst_checked(*meta.A, *meta.x, *meta.t1, serr);
      if (serr) return serr;
      auto a2 = subst_checked(*meta.A, *meta.x, *meta.t2, serr);
      if (serr) return serr;
      std::vector<Formula> g = conc.ante;
      if (!mremove_one(g, Formula::eq(*meta.t1, *meta.t2)) || !mremove_one(g, *a1))
        return err(R::ContextMismatch, "t1 = t2 / A[t1] not in conclusion");
      if (seq_eq(prem[0], madd(g, *a2), conc.succ)) return std::nullopt;
      return mismatch();
    }
    case Rule::EqE: {
      if (seq_eq(prem[0], madd(conc.ante, Formula::eq(*meta.t, *meta.t)), conc.succ))
        return std::nullopt;
      return mismatch();
    }
    case Rule::RI: {
      if (occurs_in(*meta.a, conc))
        return err(R::SideConditionViolated, "eigenvariable");
      auto at = subst_checked(*meta.A, *meta.x, *meta.t, serr);
      if (serr) return serr;
      auto bt = subst_checked(*meta.B, *meta.x, *meta.t, serr);
      if (serr) return serr;
      std::vector<Formula> d = conc.succ;
      if (!mremove_one(d, Formula::iq(*meta.x, *meta.A, *meta.B)))
        return err(R::ContextMismatch, "principal I-formula not in conclusion");
      Term ac = Term::cst(*meta.a);
      Formula aa = substitute(*meta.A, *meta.x, ac);
      if (seq_eq(prem[0], conc.ante, madd(d, *at)) &&
          seq_eq(prem[1], conc.ante, madd(d, *bt)) &&
          seq_eq(prem[2], madd(conc.ante, aa), madd(d, Formula::eq(ac, *meta.t))))
        return std::nullopt;
      return mismatch();
    }
    case Rule::LI1: {
      if (occurs_in(*meta.a, conc))
        return err(R::SideConditionViolated, "eigenvariable");
      std::vector<Formula> g = conc.ante;
      if (!mremove_one(g, Formula::iq(*meta.x, *meta.A, *meta.B)))
        return err(R::ContextMismatch, "principal I-formula not in conclusion");
      Term ac = Term::cst(*meta.a);
      Formula aa = substitute(*meta.A, *meta.x, ac);
      Formula ba = substitute(*meta.B, *meta.x, ac);
      if (seq_eq(prem[0], madd(madd(g, aa), ba), conc.succ)) return std::nullopt;
      return mismatch();
    }
    case Rule::LI2: {
      if (!meta.C->is_atomic())
        return err(R::SideConditionViolated, "atomicity");
      auto a1 = subst_checked(*meta.A, *meta.x, *meta.t1, serr);
      if (serr) return serr;
      auto a2 = subst_checked(*meta.A, *meta.x, *meta.t2, serr);
      if (serr) return serr;
      auto c1 = subst_checked(*meta.C, *meta.x, *meta.t1, serr);
      if (serr) return serr;
      auto c2 = subst_checked(*meta.C, *meta.x, *meta.t2, serr);
      if (serr) return serr;
      std::vector<Formula> g = conc.ante;
      if (!mremove_one(g, Formula::iq(*meta.x, *meta.A, *meta.B)))
        return err(R::ContextMismatch, "principal I-formula not in conclusion");
      std::vector<Formula> d = conc.succ;
      if (!mremove_one(d, *c1))
        return err(R::ContextMismatch, "C[t1] not in conclusion");
      if (seq_eq(prem[0], g, madd(d, *a1)) && seq_eq(prem[1], g, madd(d, *a2)) &&
          seq_eq(prem[2], g, madd(d, *c2)))
        return std::nullopt;
      return mismatch();
    }
    case Rule::LIff: {
      Formula e = iff_expand(*meta.A, *meta.B);
      std::vector<Formula> g = conc.ante;
      if (!mremove_one(g, e))
        return err(R::ContextMismatch, "principal A <-> B not in conclusion");
      if (seq_eq(prem[0], g, madd(madd(conc.succ, *meta.A), *meta.B)) &&
          seq_eq(prem[1], madd(madd(g, *meta.A), *meta.B), conc.succ))
        return std::nullopt;
      return mismatch();
    }
    case Rule::RIff: {
      Formula e = iff_expand(*meta.A, *meta.B);
      std::vector<Formula> d = conc.succ;
      if (!mremove_one(d, e))
        return err(R::ContextMismatch, "principal A <-> B not in conclusion");
      if (seq_eq(prem[0], madd(conc.ante, *meta.A), madd(d, *meta.B)) &&
          seq_eq(prem[1], madd(conc.ante, *meta.B), madd(d, *meta.A)))
        return std::nullopt;
      return mismatch();
    }
  }
  return err(R::ContextMismatch, "unknown rule");
}

namespace {

std::optional<CheckFailure> check_rec(const Proof& p, std::vector<int>& path) {
  std::vector<Sequent> prem;
  prem.reserve(p.premises.size());
  for (const auto& q : p.premises) prem.push_back(q->conclusion);
  if (auto e = check_rule(p.rule, p.meta, prem, p.conclusion))
    return CheckFailure{path, *e};
  for (size_t i = 0; i < p.premises.size(); ++i) {
    path.push_back(static_cast<int>(i));
    if (auto f = check_rec(*p.premises[i], path)) return f;
    path.pop_back();
  }
  return std::nullopt;
}

}  // namespace

std::optional<CheckFailure> check_proof(const Proof& p) {
  std::vector<int> path;
  return check_rec(p, path);
}

bool checks(const Proof& p) { return !check_proof(p).has_value(); }

namespace {

// (L<->) / (R<->) are derivable from the rules for ->; these build the
// primitive derivations with the contexts read off the macro node.
ProofPtr expand_riff(const Meta& m, const Sequent& conc, ProofPtr c1, ProofPtr c2) {
  const Formula& A = *m.A;
  const Formula& B = *m.B;
  Formula e = iff_expand(A, B);
  std::vector<Formula> d = conc.succ;
  mremove_one(d, e);
  const std::vector<Formula>& g = conc.ante;

  Formula ab = Formula::imp(A, B), ba = Formula::imp(B, A);
  Meta mab; mab.A = A; mab.B = B;
  ProofPtr left = mk_proof(Rule::RImp, mab, Sequent{g, madd(d, ab)}, {std::move(c1)});
  Meta mba; mba.A = B; mba.B = A;
  ProofPtr right = mk_proof(Rule::RImp, mba, Sequent{g, madd(d, ba)}, {std::move(c2)});
  Meta mneg; mneg.A = ba;
  ProofPtr lneg = mk_proof(Rule::LNeg, mneg,
                           Sequent{madd(g, Formula::f_not(ba)), d}, {std::move(right)});
  Meta mimp; mimp.A = ab; mimp.B = Formula::f_not(ba);
  ProofPtr limp = mk_proof(Rule::LImp, mimp,
                           Sequent{madd(g, Formula::imp(ab, Formula::f_not(ba))), d},
                           {std::move(left), std::move(lneg)});
  Meta mrn; mrn.A = Formula::imp(ab, Formula::f_not(ba));
  return mk_proof(Rule::RNeg, mrn, conc, {std::move(limp)});
}

ProofPtr expand_liff(const Meta& m, const Sequent& conc, ProofPtr c1, ProofPtr c2) {
  const Formula& A = *m.A;
  const Formula& B = *m.B;
  Formula e = iff_expand(A, B);
  std::vector<Formula> g = conc.ante;
  mremove_one(g, e);
  const std::vector<Formula>& d = conc.succ;

  Formula ab = Formula::imp(A, B), ba = Formula::imp(B, A);
  // (A -> B), G => D, B
  ProofPtr wkB = weaken_to(ax(B), Sequent{madd(g, B), madd(d, B)});
  Meta mab; mab.A = A; mab.B = B;
  ProofPtr inner_left = mk_proof(Rule::LImp, mab,
                                 Sequent{madd(g, ab), madd(d, B)},
                                 {std::move(c1), std::move(wkB)});
  // A, (A -> B), G => D
  ProofPtr wkA = weaken_to(ax(A), Sequent{madd(g, A), madd(d, A)});
  ProofPtr inner_right = mk_proof(Rule::LImp, mab,
                                  Sequent{madd(madd(g, A), ab), d},
                                  {std::move(wkA), std::move(c2)});
  Meta mba; mba.A = B; mba.B = A;
  ProofPtr mid = mk_proof(Rule::LImp, mba,
                          Sequent{madd(madd(g, ab), ba), d},
                          {std::move(inner_left), std::move(inner_right)});
  Meta mrn; mrn.A = ba;
  ProofPtr rneg = mk_proof(Rule::RNeg, mrn,
                           Sequent{madd(g, ab), madd(d, Formula::f_not(ba))},
                           {std::move(mid)});
  Meta mri; mri.A = ab; mri.B = Formula::f_not(ba);
  ProofPtr rimp = mk_proof(Rule::RImp, mri,
                           Sequent{g, madd(d, Formula::imp(ab, Formula::f_not(ba)))},
                           {std::move(rneg)});
  Meta mln; mln.A = Formula::imp(ab, Formula::f_not(ba));
  return mk_proof(Rule::LNeg, mln, conc, {std::move(rimp)});
}

}  // namespace

ProofPtr expand_macros(const ProofPtr& p) {
  std::vector<ProofPtr> prem;
  bool changed = false;
  prem.reserve(p->premises.size());
  for (const auto& q : p->premises) {
    ProofPtr e = expand_macros(q);
    changed |= (e != q);
    prem.push_back(std::move(e));
  }
  if (p->rule == Rule::RIff)
    return expand_riff(p->meta, p->conclusion, prem[0], prem[1]);
  if (p->rule == Rule::LIff)
    return expand_liff(p->meta, p->conclusion, prem[0], prem[1]);
  if (!changed) return p;
  return mk_proof(p->rule, p->meta, p->conclusion, std::move(prem));
}

ProofPtr general_eqi(const ProofPtr& premise, const Formula& a, const std::string& x,
                     const Term& t1, const Term& t2) {
  // The antecedent rewrite  t1 = t2, A[t1], G => D  from  A[t2], G => D is a
  // cut on A[t2] against the symmetric Leibniz instance
  // t1 = t2, A[t1] => A[t2].
  Formula a2 = substitute(a, x, t2);
  ProofPtr lhs = flip_identity(general_leibniz(a, x, t2, t1), t1, t2);
  return mk_cut(a2, lhs, premise);
}

}  // namespace descq
