#include "descq/cutelim.hpp"

#include <algorithm>

#include "descq/checker.hpp"
#include "descq/derive.hpp"

namespace descq {

int degree(const Formula& a) {
  int d = 0;
  switch (a.kind) {
    case Formula::Kind::Not:
    case Formula::Kind::Imp:
    case Formula::Kind::Forall:
    case Formula::Kind::Iq:
      d = 1;
      break;
    default:
      break;
  }
  for (const Formula& s : a.subs) d += degree(s);
  return d;
}

int proof_degree(const Proof& p) {
  int d = 0;
  if (p.rule == Rule::Cut && p.meta.cut) d = degree(*p.meta.cut);
  for (const auto& q : p.premises) d = std::max(d, proof_degree(*q));
  return d;
}

// --- parameter substitution ---------------------------------------------------

namespace {

Term subst_name_term(const Term& s, const std::string& n, const Term& t,
                     const std::set<std::string>& bound,
                     const std::set<std::string>& tvars) {
  bool hit = (s.kind == Term::Kind::Const && s.name == n) ||
             (s.kind == Term::Kind::Var && s.name == n && !bound.count(n));
  if (hit) {
    for (const auto& v : tvars)
      if (bound.count(v)) throw EigenClash("substitution captured variable " + v);
    return t;
  }
  if (s.kind == Term::Kind::App) {
    Term out = s;
    for (Term& a : out.args) a = subst_name_term(a, n, t, bound, tvars);
    return out;
  }
  return s;
}

Formula subst_name_formula(const Formula& f, const std::string& n, const Term& t,
                           std::set<std::string>& bound,
                           const std::set<std::string>& tvars) {
  Formula out = f;
  switch (f.kind) {
    case Formula::Kind::Forall:
    case Formula::Kind::Iq: {
      bool fresh = bound.insert(f.name).second;
      for (Formula& s : out.subs) s = subst_name_formula(s, n, t, bound, tvars);
      if (fresh) bound.erase(f.name);
      return out;
    }
    default:
      for (Term& s : out.terms) s = subst_name_term(s, n, t, bound, tvars);
      for (Formula& s : out.subs) s = subst_name_formula(s, n, t, bound, tvars);
      return out;
  }
}

Formula subst_name(const Formula& f, const std::string& n, const Term& t,
                   const std::set<std::string>& tvars,
                   const std::set<std::string>& initial_bound = {}) {
  std::set<std::string> bound = initial_bound;
  return subst_name_formula(f, n, t, bound, tvars);
}

// A substitution touching an eigen-parameter is only a renaming to a fresh
// constant; anything else risks breaking a side condition.
void eigen_prescan(const Proof& p, const std::string& n, const Term& t, bool fresh_const) {
  if (p.meta.a) {
    if (*p.meta.a == n && !fresh_const)
      throw EigenClash("substituted name is an eigen-parameter: " + n);
    if (*p.meta.a != n && occurs_in(*p.meta.a, t))
      throw EigenClash("replacement term contains eigen-parameter " + *p.meta.a);
  }
  for (const auto& q : p.premises) eigen_prescan(*q, n, t, fresh_const);
}

ProofPtr subst_proof_rec(const ProofPtr& p, const std::string& n, const Term& t,
                         const std::set<std::string>& tvars) {
  Meta m = p->meta;
  if (m.a && *m.a == n && t.kind == Term::Kind::Const) m.a = t.name;
  auto st = [&](std::optional<Term>& x) {
    if (x) *x = subst_name_term(*x, n, t, {}, tvars);
  };
  st(m.t);
  st(m.t1);
  st(m.t2);
  // Schematic formulas are patterns in meta.x; its positions stay untouched.
  std::set<std::string> schema_bound;
  if (m.x) schema_bound.insert(*m.x);
  auto sf = [&](std::optional<Formula>& f, bool schematic) {
    if (f) *f = subst_name(*f, n, t, tvars, schematic ? schema_bound : std::set<std::string>{});
  };
  sf(m.A, p->rule != Rule::Cut && p->rule != Rule::LW && p->rule != Rule::RW &&
              p->rule != Rule::LC && p->rule != Rule::RC && p->rule != Rule::LNeg &&
              p->rule != Rule::RNeg && p->rule != Rule::LImp && p->rule != Rule::RImp &&
              p->rule != Rule::LIff && p->rule != Rule::RIff);
  sf(m.B, p->rule == Rule::RI || p->rule == Rule::LI1 || p->rule == Rule::LI2);
  sf(m.C, true);
  sf(m.cut, false);

  Sequent c;
  c.ante.reserve(p->conclusion.ante.size());
  c.succ.reserve(p->conclusion.succ.size());
  for (const Formula& f : p->conclusion.ante) c.ante.push_back(subst_name(f, n, t, tvars));
  for (const Formula& f : p->conclusion.succ) c.succ.push_back(subst_name(f, n, t, tvars));

  std::vector<ProofPtr> prem;
  prem.reserve(p->premises.size());
  for (const auto& q : p->premises) prem.push_back(subst_proof_rec(q, n, t, tvars));
  return mk_proof(p->rule, std::move(m), std::move(c), std::move(prem));
}

}  // namespace

ProofPtr substitute_in_proof(const ProofPtr& p, const std::string& a, const Term& t) {
  if (t.kind == Term::Kind::Const && t.name == a) return p;
  bool fresh_const = false;
  if (t.kind == Term::Kind::Const) {
    std::set<std::string> names;
    collect_names(*p, names);
    fresh_const = !names.count(t.name);
  }
  eigen_prescan(*p, a, t, fresh_const);
  return subst_proof_rec(p, a, t, term_vars(t));
}

// --- regularization -----------------------------------------------------------

namespace {

ProofPtr regularize_rec(const ProofPtr& p, std::set<std::string>& used) {
  std::vector<ProofPtr> prem;
  prem.reserve(p->premises.size());
  for (const auto& q : p->premises) prem.push_back(regularize_rec(q, used));
  Meta m = p->meta;
  if (m.a) {
    std::string e = fresh_name(*m.a, used);
    used.insert(e);
    Term et = Term::cst(e);
    std::set<std::string> none;
    for (auto& q : prem) q = subst_proof_rec(q, *m.a, et, none);
    if (m.t) m.t = subst_name_term(*m.t, *m.a, et, {}, none);
    if (m.t1) m.t1 = subst_name_term(*m.t1, *m.a, et, {}, none);
    if (m.t2) m.t2 = subst_name_term(*m.t2, *m.a, et, {}, none);
    m.a = e;
  }
  return mk_proof(p->rule, std::move(m), p->conclusion, std::move(prem));
}

}  // namespace

ProofPtr regularize(const ProofPtr& p) {
  std::set<std::string> used;
  collect_names(*p, used);
  return regularize_rec(p, used);
}

// --- reduction engine ---------------------------------------------------------

namespace {

struct Engine {
  const TraceFn& trace;

  void note(const char* label, const Formula& f) {
    if (trace) trace(TraceStep{label, f, degree(f)});
  }

  [[noreturn]] static void bug(const std::string& m) {
    throw CutElimError("internal reduction error: " + m);
  }

  static std::vector<Formula> minus(std::vector<Formula> xs, const Formula& f, int k) {
    for (int i = 0; i < k; ++i)
      if (!mremove_one(xs, f)) bug("multiset underflow");
    return xs;
  }

  // --- Right Reduction (degree(a) >= 1): d1 |- T => L, A with A principal,
  // d2 |- A^k, G => D. Result: T^k, G => L^k, D.
  ProofPtr rr(const ProofPtr& d1, const ProofPtr& d2, const Formula& a, int k) {
    if (k == 0) return d2;
    if (d1->rule == Rule::Ax) return d2;  // T = {A}, L empty

    const Sequent& c2 = d2->conclusion;
    std::vector<Formula> theta = d1->conclusion.ante;
    std::vector<Formula> lambda = minus(d1->conclusion.succ, a, 1);

    auto target = [&]() {
      Sequent s;
      s.ante = minus(c2.ante, a, k);
      s.succ = c2.succ;
      for (int i = 0; i < k; ++i) {
        s.ante = mconcat(std::move(s.ante), theta);
        s.succ = mconcat(std::move(s.succ), lambda);
      }
      return s;
    };

    // generic parametric step: every premise keeps the k designated copies
    auto parametric = [&]() {
      std::vector<ProofPtr> prem;
      prem.reserve(d2->premises.size());
      for (const auto& q : d2->premises) prem.push_back(rr(d1, q, a, k));
      Sequent nc;
      nc.ante = minus(c2.ante, a, k);
      nc.succ = c2.succ;
      for (int i = 0; i < k; ++i) {
        nc.ante = mconcat(std::move(nc.ante), theta);
        nc.succ = mconcat(std::move(nc.succ), lambda);
      }
      return mk_proof(d2->rule, d2->meta, std::move(nc), std::move(prem));
    };

    switch (d2->rule) {
      case Rule::Ax:
        // A^k, G => D is an axiom: k = 1, G empty, D = {A}
        note("right:axiom", a);
        return d1;
      case Rule::LW: {
        if (*d2->meta.A == a) {
          ProofPtr r = rr(d1, d2->premises[0], a, k - 1);
          return weaken_to(std::move(r), target());
        }
        return parametric();
      }
      case Rule::LC: {
        if (*d2->meta.A == a) {
          ProofPtr r = rr(d1, d2->premises[0], a, k + 1);
          return contract_to(std::move(r), target());
        }
        return parametric();
      }
      case Rule::Cut: {
        const Formula& c = *d2->meta.cut;
        int n1 = mcount(d2->premises[0]->conclusion.ante, a);
        int k1 = std::min(k, n1), k2 = k - k1;
        ProofPtr r1 = rr(d1, d2->premises[0], a, k1);
        ProofPtr r2 = rr(d1, d2->premises[1], a, k2);
        return mk_cut(c, std::move(r1), std::move(r2));
      }
      case Rule::LNeg: {
        Formula principal = Formula::f_not(*d2->meta.A);
        if (principal == a) {
          note("right:neg", a);
          if (d1->rule != Rule::RNeg) bug("principal mismatch for ~");
          ProofPtr r = rr(d1, d2->premises[0], a, k - 1);
          return mk_cut(*d2->meta.A, std::move(r), d1->premises[0]);
        }
        return parametric();
      }
      case Rule::LImp: {
        Formula principal = Formula::imp(*d2->meta.A, *d2->meta.B);
        if (principal == a) {
          note("right:imp", a);
          if (d1->rule != Rule::RImp) bug("principal mismatch for ->");
          ProofPtr r1 = rr(d1, d2->premises[0], a, k - 1);
          ProofPtr r2 = rr(d1, d2->premises[1], a, k - 1);
          ProofPtr cut1 = mk_cut(*d2->meta.A, std::move(r1), d1->premises[0]);
          ProofPtr cut2 = mk_cut(*d2->meta.B, std::move(cut1), std::move(r2));
          return contract_to(std::move(cut2), target());
        }
        return parametric();
      }
      case Rule::LForall: {
        Formula principal = Formula::forall(*d2->meta.x, *d2->meta.A);
        if (principal == a) {
          note("right:forall", a);
          if (d1->rule != Rule::RForall) bug("principal mismatch for forall");
          ProofPtr w = rr(d1, d2->premises[0], a, k - 1);
          ProofPtr s = substitute_in_proof(d1->premises[0], *d1->meta.a, *d2->meta.t);
          Formula at = substitute(*d2->meta.A, *d2->meta.x, *d2->meta.t);
          return mk_cut(at, std::move(s), std::move(w));
        }
        return parametric();
      }
      case Rule::LI1: {
        Formula principal = Formula::iq(*d2->meta.x, *d2->meta.A, *d2->meta.B);
        if (principal == a) {
          note("right:II.b", a);
          if (d1->rule != Rule::RI) bug("principal mismatch for I");
          ProofPtr w = rr(d1, d2->premises[0], a, k - 1);
          ProofPtr one = substitute_in_proof(w, *d2->meta.a, *d1->meta.t);
          Formula ft = substitute(*d1->meta.A, *d1->meta.x, *d1->meta.t);
          Formula gt = substitute(*d1->meta.B, *d1->meta.x, *d1->meta.t);
          ProofPtr cut1 = mk_cut(ft, d1->premises[0], std::move(one));
          ProofPtr cut2 = mk_cut(gt, d1->premises[1], std::move(cut1));
          return contract_to(std::move(cut2), target());
        }
        note("right:II.a", a);
        return parametric();
      }
      case Rule::LI2: {
        Formula principal = Formula::iq(*d2->meta.x, *d2->meta.A, *d2->meta.B);
        if (principal == a) {
          note("right:III.b", a);
          if (d1->rule != Rule::RI) bug("principal mismatch for I");
          const Term& t1 = *d2->meta.t1;
          const Term& t2 = *d2->meta.t2;
          const Term& tw = *d1->meta.t;
          const Formula& fsch = *d1->meta.A;
          const std::string& x = *d1->meta.x;
          ProofPtr one = rr(d1, d2->premises[0], a, k - 1);
          ProofPtr two = rr(d1, d2->premises[1], a, k - 1);
          ProofPtr three = rr(d1, d2->premises[2], a, k - 1);
          ProofPtr five = substitute_in_proof(d1->premises[2], *d1->meta.a, t1);
          ProofPtr six = substitute_in_proof(d1->premises[2], *d1->meta.a, t2);
          Formula f1 = substitute(fsch, x, t1);
          Formula f2 = substitute(fsch, x, t2);
          ProofPtr u1 = mk_cut(f1, std::move(one), std::move(five));
          ProofPtr u2 = mk_cut(f2, std::move(two), std::move(six));
          // (7): t1 = tw, t2 = tw => t1 = t2
          std::set<std::string> avoid;
          collect_names(t1, avoid);
          collect_names(t2, avoid);
          collect_names(tw, avoid);
          std::string z = fresh_name("z", avoid);
          ProofPtr seven =
              leibniz_atomic(Formula::eq(t1, Term::var(z)), z, t2, tw);
          ProofPtr v = mk_cut(Formula::eq(t1, tw), std::move(u1), std::move(seven));
          v = mk_cut(Formula::eq(t2, tw), std::move(u2), std::move(v));
          // contract the duplicated contexts down to T^k, G'' => L^k, D', t1 = t2
          {
            Sequent tv = target();
            mremove_one(tv.succ, substitute(*d2->meta.C, *d2->meta.x, t1));
            tv.succ = madd(std::move(tv.succ), Formula::eq(t1, t2));
            v = contract_to(std::move(v), tv);
          }
          // (8): t1 = t2, C[t2] => C[t1]
          ProofPtr eight = leibniz_atomic(*d2->meta.C, *d2->meta.x, t1, t2);
          ProofPtr w1 = mk_cut(Formula::eq(t1, t2), std::move(v), std::move(eight));
          ProofPtr w2 = mk_cut(substitute(*d2->meta.C, *d2->meta.x, t2),
                               std::move(three), std::move(w1));
          return contract_to(std::move(w2), target());
        }
        note("right:III.a", a);
        return parametric();
      }
      case Rule::RI:
        note("right:I", a);
        return parametric();
      case Rule::LIff:
      case Rule::RIff:
        bug("macro rule in reduction; expand first");
      default:
        // RW, RC, RNeg, RImp, RForall, EqI, EqE: antecedent copies are
        // parametric in all of these.
        return parametric();
    }
  }

  // --- Left Reduction (degree(a) >= 1): d1 |- G => D, A^k, d2 |- A, T => L.
  // Result: G, T^k => D, L^k.
  ProofPtr lr(const ProofPtr& d1, const ProofPtr& d2, const Formula& a, int k) {
    if (k == 0) return d1;
    if (d1->rule == Rule::Ax) return d2;  // G = {A}, D empty, k = 1

    const Sequent& c1 = d1->conclusion;
    std::vector<Formula> theta = minus(d2->conclusion.ante, a, 1);
    std::vector<Formula> lambda = d2->conclusion.succ;

    auto target = [&]() {
      Sequent s;
      s.ante = c1.ante;
      s.succ = minus(c1.succ, a, k);
      for (int i = 0; i < k; ++i) {
        s.ante = mconcat(std::move(s.ante), theta);
        s.succ = mconcat(std::move(s.succ), lambda);
      }
      return s;
    };

    auto parametric = [&]() {
      std::vector<ProofPtr> prem;
      prem.reserve(d1->premises.size());
      for (const auto& q : d1->premises) prem.push_back(lr(q, d2, a, k));
      Sequent nc = target();
      return mk_proof(d1->rule, d1->meta, std::move(nc), std::move(prem));
    };

    // (B): rebuild the final rule over premises reduced at k - 1, leaving one
    // principal occurrence, then hand over to the Right Reduction.
    auto principal_case = [&](const char* label) {
      note(label, a);
      std::vector<ProofPtr> prem;
      prem.reserve(d1->premises.size());
      for (const auto& q : d1->premises) prem.push_back(lr(q, d2, a, k - 1));
      Sequent nc;
      nc.ante = c1.ante;
      nc.succ = minus(c1.succ, a, k - 1);
      for (int i = 0; i < k - 1; ++i) {
        nc.ante = mconcat(std::move(nc.ante), theta);
        nc.succ = mconcat(std::move(nc.succ), lambda);
      }
      ProofPtr rebuilt = mk_proof(d1->rule, d1->meta, std::move(nc), std::move(prem));
      return rr(rebuilt, d2, a, 1);
    };

    switch (d1->rule) {
      case Rule::RW:
        if (*d1->meta.A == a) {
          ProofPtr r = lr(d1->premises[0], d2, a, k - 1);
          return weaken_to(std::move(r), target());
        }
        return parametric();
      case Rule::RC:
        if (*d1->meta.A == a) {
          ProofPtr r = lr(d1->premises[0], d2, a, k + 1);
          return contract_to(std::move(r), target());
        }
        return parametric();
      case Rule::Cut: {
        const Formula& c = *d1->meta.cut;
        int n1 = mcount(d1->premises[0]->conclusion.succ, a) -
                 (c == a ? 1 : 0);  // c != a by degree, kept for safety
        int k1 = std::min(k, std::max(n1, 0)), k2 = k - k1;
        ProofPtr r1 = lr(d1->premises[0], d2, a, k1);
        ProofPtr r2 = lr(d1->premises[1], d2, a, k2);
        return mk_cut(c, std::move(r1), std::move(r2));
      }
      case Rule::RNeg:
        if (Formula::f_not(*d1->meta.A) == a) return principal_case("left:B-neg");
        return parametric();
      case Rule::RImp:
        if (Formula::imp(*d1->meta.A, *d1->meta.B) == a)
          return principal_case("left:B-imp");
        return parametric();
      case Rule::RForall:
        if (Formula::forall(*d1->meta.x, *d1->meta.A) == a)
          return principal_case("left:B-forall");
        return parametric();
      case Rule::RI:
        if (Formula::iq(*d1->meta.x, *d1->meta.A, *d1->meta.B) == a)
          return principal_case("left:B-I");
        return parametric();
      case Rule::LIff:
      case Rule::RIff:
        bug("macro rule in reduction; expand first");
      default:
        // LW, LC, LNeg, LImp, LForall, EqI, EqE, LI1, LI2: succedent copies
        // are parametric (LI2's principal C[t1] is atomic, degree(a) >= 1).
        return parametric();
    }
  }

  // --- Atomic mix: d1 |- G1 => D1 with m designated copies of a in D1,
  // d2 |- G2 => D2 with n designated copies in G2; both cut-free. Result is
  // a cut-free proof of G1, (G2 - a^n) => (D1 - a^m), D2.
  ProofPtr mixa(const ProofPtr& d1, const ProofPtr& d2, const Formula& a, int m, int n) {
    const Sequent& c1 = d1->conclusion;
    const Sequent& c2 = d2->conclusion;
    Sequent tgt{mconcat(c1.ante, minus(c2.ante, a, n)),
                mconcat(minus(c1.succ, a, m), c2.succ)};
    if (m == 0) return weaken_to(d1, tgt);
    if (n == 0) return weaken_to(d2, tgt);

    // A reflexive identity in the antecedent is discharged by (=E) outright;
    // the left proof is not needed.
    if (a.kind == Formula::Kind::Eq && a.terms[0] == a.terms[1]) {
      note("mix:reflexive", a);
      ProofPtr r = d2;
      for (int i = 0; i < n; ++i) r = mk_eqe(a.terms[0], std::move(r));
      return weaken_to(std::move(r), tgt);
    }

    // LEFT phase: trace the designated succedent copies through d1.
    auto left_parametric = [&]() {
      std::vector<ProofPtr> prem;
      prem.reserve(d1->premises.size());
      for (const auto& q : d1->premises) prem.push_back(mixa(q, d2, a, m, n));
      return mk_proof(d1->rule, d1->meta, tgt, std::move(prem));
    };

    switch (d1->rule) {
      case Rule::Ax:
        note("mix:left-axiom", a);
        return contract_to(d2, tgt);  // contract the n copies to one
      case Rule::RW:
        if (*d1->meta.A == a) return mixa(d1->premises[0], d2, a, m - 1, n);
        return left_parametric();
      case Rule::RC:
        if (*d1->meta.A == a) return mixa(d1->premises[0], d2, a, m + 1, n);
        return left_parametric();
      case Rule::Cut:
        bug("mix inputs must be cut-free");
      case Rule::LI2: {
        Formula c_t1 = substitute(*d1->meta.C, *d1->meta.x, *d1->meta.t1);
        std::vector<Formula> rest = minus(c1.succ, c_t1, 1);
        if (c_t1 == a && m > mcount(rest, a)) {
          // principal designated: switch to the right phase
          return mix_right(d1, d2, a, m, n, tgt);
        }
        return left_parametric();
      }
      default:
        return left_parametric();
    }
  }

  // RIGHT phase of the atomic mix: d1 ends in LI2 whose principal C[t1] is
  // the (atomic) mix formula. Walk d2.
  ProofPtr mix_right(const ProofPtr& d1, const ProofPtr& d2, const Formula& a, int m,
                     int n, const Sequent& tgt) {
    auto right_parametric = [&]() {
      std::vector<ProofPtr> prem;
      prem.reserve(d2->premises.size());
      for (const auto& q : d2->premises) prem.push_back(mix_right_or_restart(d1, q, a, m, n));
      return mk_proof(d2->rule, d2->meta, tgt, std::move(prem));
    };

    switch (d2->rule) {
      case Rule::Ax:
        note("mix:right-axiom", a);
        return contract_to(d1, tgt);
      case Rule::LW:
        if (*d2->meta.A == a) {
          ProofPtr r = mix_right_or_restart(d1, d2->premises[0], a, m, n - 1);
          return weaken_to(std::move(r), tgt);
        }
        return right_parametric();
      case Rule::LC:
        if (*d2->meta.A == a)
          return mix_right_or_restart(d1, d2->premises[0], a, m, n + 1);
        return right_parametric();
      case Rule::Cut:
        bug("mix inputs must be cut-free");
      case Rule::EqI: {
        Formula id = Formula::eq(*d2->meta.t1, *d2->meta.t2);
        Formula a1 = substitute(*d2->meta.A, *d2->meta.x, *d2->meta.t1);
        std::vector<Formula> ctx = d2->conclusion.ante;
        mremove_one(ctx, id);
        mremove_one(ctx, a1);
        if (n > mcount(ctx, a)) return mix_consumed(d1, d2, a, m, n, tgt);
        return right_parametric();
      }
      case Rule::LForall: {
        Formula et = Formula::exists_bang(*d2->meta.t);
        std::vector<Formula> ctx = d2->conclusion.ante;
        mremove_one(ctx, et);
        mremove_one(ctx, Formula::forall(*d2->meta.x, *d2->meta.A));
        if (n > mcount(ctx, a)) return mix_consumed(d1, d2, a, m, n, tgt);
        return right_parametric();
      }
      default:
        return right_parametric();
    }
  }

  // After descending through d2 the designated copies may sit in a premise
  // whose own last rule no longer has d1's principal on top; restart the
  // left phase in that case.
  ProofPtr mix_right_or_restart(const ProofPtr& d1, const ProofPtr& d2, const Formula& a,
                                int m, int n) {
    return mixa(d1, d2, a, m, n);
  }

  // A designated atomic copy is consumed by (=I) or (L-forall) in d2 while
  // d1 derives it by an LI2 whose emitted formula is principal. The paper's
  // case analysis does not reach this interaction; only the vacuous-schema
  // shape reduces cleanly.
  ProofPtr mix_consumed(const ProofPtr& d1, const ProofPtr& d2, const Formula& a, int m,
                        int n, const Sequent& tgt) {
    const Formula& csch = *d1->meta.C;
    if (!free_vars(csch).count(*d1->meta.x)) {
      // C[t1] = C[t2] = a: the third LI2 premise already proves a in place.
      note("mix:vacuous-schema", a);
      ProofPtr r = mixa(d1->premises[2], d2, a, m, n);
      return weaken_to(std::move(r),
                       Sequent{tgt.ante, tgt.succ});
    }
    throw CutElimError(
        "unsupported reduction: atomic cut formula emitted by LI2 and consumed by " +
        std::string(rule_name(d2->rule)));
  }
};

bool principal_in(const ProofPtr& d, const Formula& a) {
  switch (d->rule) {
    case Rule::Ax:
      return d->conclusion.succ.size() == 1 && d->conclusion.succ[0] == a;
    case Rule::RNeg:
      return Formula::f_not(*d->meta.A) == a;
    case Rule::RImp:
      return Formula::imp(*d->meta.A, *d->meta.B) == a;
    case Rule::RForall:
      return Formula::forall(*d->meta.x, *d->meta.A) == a;
    case Rule::RI:
      return Formula::iq(*d->meta.x, *d->meta.A, *d->meta.B) == a;
    default:
      return false;
  }
}

// Rename both trees apart: every eigen-parameter fresh with respect to the
// union of the names in both proofs.
std::pair<ProofPtr, ProofPtr> rename_apart(const ProofPtr& d1, const ProofPtr& d2) {
  std::set<std::string> used;
  collect_names(*d1, used);
  collect_names(*d2, used);
  ProofPtr r1 = regularize_rec(d1, used);
  ProofPtr r2 = regularize_rec(d2, used);
  return {std::move(r1), std::move(r2)};
}

}  // namespace

ProofPtr right_reduce(const ProofPtr& d1, const ProofPtr& d2, const Formula& a, int k,
                      const TraceFn& trace) {
  if (degree(a) < 1 || proof_degree(*d1) >= degree(a) || proof_degree(*d2) >= degree(a))
    throw PreconditionViolated("right_reduce: degree bound fails");
  if (!principal_in(d1, a))
    throw PreconditionViolated("right_reduce: cut formula not principal in d1");
  if (mcount(d2->conclusion.ante, a) < k)
    throw PreconditionViolated("right_reduce: fewer than k occurrences");
  auto [r1, r2] = rename_apart(d1, d2);
  Engine e{trace};
  return e.rr(r1, r2, a, k);
}

ProofPtr left_reduce(const ProofPtr& d1, const ProofPtr& d2, const Formula& a, int k,
                     const TraceFn& trace) {
  if (degree(a) < 1 || proof_degree(*d1) >= degree(a) || proof_degree(*d2) >= degree(a))
    throw PreconditionViolated("left_reduce: degree bound fails");
  if (mcount(d1->conclusion.succ, a) < k)
    throw PreconditionViolated("left_reduce: fewer than k occurrences");
  if (mcount(d2->conclusion.ante, a) < 1)
    throw PreconditionViolated("left_reduce: cut formula absent from d2");
  auto [r1, r2] = rename_apart(d1, d2);
  Engine e{trace};
  return e.lr(r1, r2, a, k);
}

namespace {

std::optional<std::vector<int>> find_uppermost_cut(const ProofPtr& p, int d) {
  for (size_t i = 0; i < p->premises.size(); ++i) {
    if (auto r = find_uppermost_cut(p->premises[i], d)) {
      r->insert(r->begin(), static_cast<int>(i));
      return r;
    }
  }
  if (p->rule == Rule::Cut && degree(*p->meta.cut) == d)
    return std::vector<int>{};
  return std::nullopt;
}

ProofPtr splice(const ProofPtr& root, const std::vector<int>& path, size_t i,
                const ProofPtr& repl) {
  if (i == path.size()) return repl;
  std::vector<ProofPtr> prem = root->premises;
  prem[path[i]] = splice(prem[path[i]], path, i + 1, repl);
  return mk_proof(root->rule, root->meta, root->conclusion, std::move(prem));
}

const ProofPtr& at_path(const ProofPtr& root, const std::vector<int>& path) {
  const ProofPtr* p = &root;
  for (int i : path) p = &(*p)->premises[i];
  return *p;
}

}  // namespace

ProofPtr eliminate_cuts(const ProofPtr& p, const TraceFn& trace) {
  if (auto f = check_proof(*p))
    throw std::invalid_argument("eliminate_cuts: input does not check: " + to_string(*f));
  ProofPtr q = expand_macros(p);
  while (contains_cut(*q)) {
    q = regularize(q);
    int d = proof_degree(*q);
    auto path = find_uppermost_cut(q, d);
    if (!path) throw CutElimError("internal: no cut at maximal degree");
    const ProofPtr& node = at_path(q, *path);
    const Formula cf = *node->meta.cut;
    if (trace) trace(TraceStep{d >= 1 ? "select:reduce" : "select:mix", cf, d});
    Engine e{trace};
    ProofPtr repl;
    if (d >= 1) {
      repl = e.lr(node->premises[0], node->premises[1], cf, 1);
    } else {
      repl = e.mixa(node->premises[0], node->premises[1], cf, 1, 1);
    }
    if (!(repl->conclusion == node->conclusion))
      throw CutElimError("internal: reduction changed the sequent");
    q = splice(q, *path, 0, repl);
  }
  return q;
}

}  // namespace descq
