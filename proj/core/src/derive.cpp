#include "descq/derive.hpp"

#include <stdexcept>

namespace descq {

namespace {

void remove_or_throw(std::vector<Formula>& xs, const Formula& f, const char* who) {
  if (!mremove_one(xs, f))
    throw std::logic_error(std::string(who) + ": formula not present: " + to_string(f));
}

}  // namespace

ProofPtr ax(const Formula& a) {
  return mk_proof(Rule::Ax, Meta{}, Sequent{{a}, {a}}, {});
}

ProofPtr mk_lw(const Formula& a, ProofPtr p) {
  Meta m;
  m.A = a;
  Sequent c{madd(p->conclusion.ante, a), p->conclusion.succ};
  return mk_proof(Rule::LW, std::move(m), std::move(c), {std::move(p)});
}

ProofPtr mk_rw(const Formula& a, ProofPtr p) {
  Meta m;
  m.A = a;
  Sequent c{p->conclusion.ante, madd(p->conclusion.succ, a)};
  return mk_proof(Rule::RW, std::move(m), std::move(c), {std::move(p)});
}

ProofPtr mk_lc(const Formula& a, ProofPtr p) {
  Meta m;
  m.A = a;
  Sequent c = p->conclusion;
  remove_or_throw(c.ante, a, "mk_lc");
  return mk_proof(Rule::LC, std::move(m), std::move(c), {std::move(p)});
}

ProofPtr mk_rc(const Formula& a, ProofPtr p) {
  Meta m;
  m.A = a;
  Sequent c = p->conclusion;
  remove_or_throw(c.succ, a, "mk_rc");
  return mk_proof(Rule::RC, std::move(m), std::move(c), {std::move(p)});
}

ProofPtr mk_lneg(const Formula& a, ProofPtr p) {
  Meta m;
  m.A = a;
  Sequent c = p->conclusion;
  remove_or_throw(c.succ, a, "mk_lneg");
  c.ante = madd(std::move(c.ante), Formula::f_not(a));
  return mk_proof(Rule::LNeg, std::move(m), std::move(c), {std::move(p)});
}

ProofPtr mk_rneg(const Formula& a, ProofPtr p) {
  Meta m;
  m.A = a;
  Sequent c = p->conclusion;
  remove_or_throw(c.ante, a, "mk_rneg");
  c.succ = madd(std::move(c.succ), Formula::f_not(a));
  return mk_proof(Rule::RNeg, std::move(m), std::move(c), {std::move(p)});
}

ProofPtr mk_limp(const Formula& a, const Formula& b, ProofPtr p1, ProofPtr p2) {
  Meta m;
  m.A = a;
  m.B = b;
  Sequent c = p1->conclusion;
  remove_or_throw(c.succ, a, "mk_limp");
  c.ante = madd(std::move(c.ante), Formula::imp(a, b));
  return mk_proof(Rule::LImp, std::move(m), std::move(c),
                  {std::move(p1), std::move(p2)});
}

ProofPtr mk_rimp(const Formula& a, const Formula& b, ProofPtr p) {
  Meta m;
  m.A = a;
  m.B = b;
  Sequent c = p->conclusion;
  remove_or_throw(c.ante, a, "mk_rimp");
  remove_or_throw(c.succ, b, "mk_rimp");
  c.succ = madd(std::move(c.succ), Formula::imp(a, b));
  return mk_proof(Rule::RImp, std::move(m), std::move(c), {std::move(p)});
}

ProofPtr mk_cut(const Formula& f, ProofPtr p1, ProofPtr p2) {
  Meta m;
  m.cut = f;
  std::vector<Formula> s1 = p1->conclusion.succ, a2 = p2->conclusion.ante;
  remove_or_throw(s1, f, "mk_cut");
  remove_or_throw(a2, f, "mk_cut");
  Sequent c{mconcat(p1->conclusion.ante, a2), mconcat(std::move(s1), p2->conclusion.succ)};
  return mk_proof(Rule::Cut, std::move(m), std::move(c), {std::move(p1), std::move(p2)});
}

ProofPtr mk_lforall(const std::string& x, const Formula& a, const Term& t, ProofPtr p) {
  Meta m;
  m.x = x;
  m.A = a;
  m.t = t;
  Sequent c = p->conclusion;
  remove_or_throw(c.ante, substitute(a, x, t), "mk_lforall");
  c.ante = madd(madd(std::move(c.ante), Formula::exists_bang(t)), Formula::forall(x, a));
  return mk_proof(Rule::LForall, std::move(m), std::move(c), {std::move(p)});
}

ProofPtr mk_rforall(const std::string& x, const Formula& a, const std::string& eigen,
                    ProofPtr p) {
  Meta m;
  m.x = x;
  m.A = a;
  m.a = eigen;
  Term e = Term::cst(eigen);
  Sequent c = p->conclusion;
  remove_or_throw(c.ante, Formula::exists_bang(e), "mk_rforall");
  remove_or_throw(c.succ, substitute(a, x, e), "mk_rforall");
  c.succ = madd(std::move(c.succ), Formula::forall(x, a));
  return mk_proof(Rule::RForall, std::move(m), std::move(c), {std::move(p)});
}

ProofPtr mk_eqi(const std::string& x, const Formula& a, const Term& t1, const Term& t2,
                ProofPtr p) {
  Meta m;
  m.x = x;
  m.A = a;
  m.t1 = t1;
  m.t2 = t2;
  Sequent c = p->conclusion;
  remove_or_throw(c.ante, substitute(a, x, t2), "mk_eqi");
  c.ante = madd(madd(std::move(c.ante), Formula::eq(t1, t2)), substitute(a, x, t1));
  return mk_proof(Rule::EqI, std::move(m), std::move(c), {std::move(p)});
}

ProofPtr mk_eqe(const Term& t, ProofPtr p) {
  Meta m;
  m.t = t;
  Sequent c = p->conclusion;
  remove_or_throw(c.ante, Formula::eq(t, t), "mk_eqe");
  return mk_proof(Rule::EqE, std::move(m), std::move(c), {std::move(p)});
}

ProofPtr mk_ri(const std::string& x, const Formula& a, const Formula& b, const Term& t,
               const std::string& eigen, ProofPtr p1, ProofPtr p2, ProofPtr p3) {
  Meta m;
  m.x = x;
  m.A = a;
  m.B = b;
  m.t = t;
  m.a = eigen;
  Sequent c = p1->conclusion;
  remove_or_throw(c.succ, substitute(a, x, t), "mk_ri");
  c.succ = madd(std::move(c.succ), Formula::iq(x, a, b));
  return mk_proof(Rule::RI, std::move(m), std::move(c),
                  {std::move(p1), std::move(p2), std::move(p3)});
}

ProofPtr mk_li1(const std::string& x, const Formula& a, const Formula& b,
                const std::string& eigen, ProofPtr p) {
  Meta m;
  m.x = x;
  m.A = a;
  m.B = b;
  m.a = eigen;
  Term e = Term::cst(eigen);
  Sequent c = p->conclusion;
  remove_or_throw(c.ante, substitute(a, x, e), "mk_li1");
  remove_or_throw(c.ante, substitute(b, x, e), "mk_li1");
  c.ante = madd(std::move(c.ante), Formula::iq(x, a, b));
  return mk_proof(Rule::LI1, std::move(m), std::move(c), {std::move(p)});
}

ProofPtr mk_li2(const std::string& x, const Formula& a, const Formula& b,
                const Formula& cc, const Term& t1, const Term& t2, ProofPtr p1,
                ProofPtr p2, ProofPtr p3) {
  Meta m;
  m.x = x;
  m.A = a;
  m.B = b;
  m.C = cc;
  m.t1 = t1;
  m.t2 = t2;
  Sequent c = p1->conclusion;
  remove_or_throw(c.succ, substitute(a, x, t1), "mk_li2");
  c.ante = madd(std::move(c.ante), Formula::iq(x, a, b));
  c.succ = madd(std::move(c.succ), substitute(cc, x, t1));
  return mk_proof(Rule::LI2, std::move(m), std::move(c),
                  {std::move(p1), std::move(p2), std::move(p3)});
}

ProofPtr mk_liff(const Formula& a, const Formula& b, ProofPtr p1, ProofPtr p2) {
  Meta m;
  m.A = a;
  m.B = b;
  Sequent c = p1->conclusion;
  remove_or_throw(c.succ, a, "mk_liff");
  remove_or_throw(c.succ, b, "mk_liff");
  c.ante = madd(std::move(c.ante), iff_expand(a, b));
  return mk_proof(Rule::LIff, std::move(m), std::move(c),
                  {std::move(p1), std::move(p2)});
}

ProofPtr mk_riff(const Formula& a, const Formula& b, ProofPtr p1, ProofPtr p2) {
  Meta m;
  m.A = a;
  m.B = b;
  Sequent c = p1->conclusion;
  remove_or_throw(c.ante, a, "mk_riff");
  remove_or_throw(c.succ, b, "mk_riff");
  c.succ = madd(std::move(c.succ), iff_expand(a, b));
  return mk_proof(Rule::RIff, std::move(m), std::move(c),
                  {std::move(p1), std::move(p2)});
}

ProofPtr weaken_to(ProofPtr p, const Sequent& target) {
  std::vector<Formula> needA = target.ante, needS = target.succ;
  if (!msubtract(needA, p->conclusion.ante) || !msubtract(needS, p->conclusion.succ))
    throw std::logic_error("weaken_to: target is not a superset");
  for (const Formula& f : needA) p = mk_lw(f, std::move(p));
  for (const Formula& f : needS) p = mk_rw(f, std::move(p));
  return p;
}

ProofPtr contract_to(ProofPtr p, const Sequent& target) {
  std::vector<Formula> extraA = p->conclusion.ante, extraS = p->conclusion.succ;
  if (!msubtract(extraA, target.ante) || !msubtract(extraS, target.succ))
    throw std::logic_error("contract_to: target is not a subset");
  for (const Formula& f : extraA) p = mk_lc(f, std::move(p));
  for (const Formula& f : extraS) p = mk_rc(f, std::move(p));
  return p;
}

ProofPtr law_of_identity(const Term& t) {
  return mk_eqe(t, ax(Formula::eq(t, t)));
}

ProofPtr leibniz_atomic(const Formula& a, const std::string& x, const Term& t1,
                        const Term& t2) {
  Formula a1 = substitute(a, x, t1);
  // A[t1] => A[t1]
  ProofPtr p = ax(a1);
  // t2 = t1, A[t2] => A[t1]
  p = mk_eqi(x, a, t2, t1, std::move(p));
  // t1 = t2, t1 = t1, A[t2] => A[t1]
  std::set<std::string> avoid;
  collect_names(a, avoid);
  collect_names(t1, avoid);
  collect_names(t2, avoid);
  avoid.insert(x);
  std::string z = fresh_name("z", avoid);
  p = mk_eqi(z, Formula::eq(Term::var(z), t1), t1, t2, std::move(p));
  // t1 = t2, A[t2] => A[t1]
  return mk_eqe(t1, std::move(p));
}

ProofPtr flip_identity(ProofPtr p, const Term& t1, const Term& t2) {
  std::set<std::string> avoid;
  collect_names(p->conclusion, avoid);
  collect_names(t1, avoid);
  collect_names(t2, avoid);
  std::string z = fresh_name("z", avoid);
  // from (t2 = t1), G => D:  EqI with A := (z = t1) gives
  // (t1 = t2), (t1 = t1), G => D, then EqE discharges t1 = t1.
  p = mk_eqi(z, Formula::eq(Term::var(z), t1), t1, t2, std::move(p));
  return mk_eqe(t1, std::move(p));
}

ProofPtr general_leibniz(const Formula& a, const std::string& x, const Term& t1,
                         const Term& t2) {
  if (!is_free_for(t1, x, a) || !is_free_for(t2, x, a))
    throw std::invalid_argument("general_leibniz: capture-violation");
  Formula id = Formula::eq(t1, t2);
  Formula a1 = substitute(a, x, t1);
  Formula a2 = substitute(a, x, t2);
  if (a1 == a2) return mk_lw(id, ax(a1));
  if (a.is_atomic()) return leibniz_atomic(a, x, t1, t2);

  std::set<std::string> avoid{x};
  collect_names(a, avoid);
  collect_names(t1, avoid);
  collect_names(t2, avoid);

  switch (a.kind) {
    case Formula::Kind::Not: {
      const Formula& b = a.subs[0];
      ProofPtr inner = flip_identity(general_leibniz(b, x, t2, t1), t1, t2);
      // (t1 = t2), B[t1] => B[t2]
      inner = mk_lneg(substitute(b, x, t2), std::move(inner));
      return mk_rneg(substitute(b, x, t1), std::move(inner));
    }
    case Formula::Kind::Imp: {
      const Formula& b = a.subs[0];
      const Formula& c = a.subs[1];
      Formula b1 = substitute(b, x, t1), b2 = substitute(b, x, t2);
      Formula c1 = substitute(c, x, t1), c2 = substitute(c, x, t2);
      // (t1 = t2), B[t1] => C[t1], B[t2]
      ProofPtr p1 = mk_rw(c1, flip_identity(general_leibniz(b, x, t2, t1), t1, t2));
      // C[t2], B[t1], (t1 = t2) => C[t1]
      ProofPtr p2 = mk_lw(b1, general_leibniz(c, x, t1, t2));
      ProofPtr limp = mk_limp(b2, c2, std::move(p1), std::move(p2));
      return mk_rimp(b1, c1, std::move(limp));
    }
    case Formula::Kind::Forall: {
      const std::string& y = a.name;
      const Formula& b = a.subs[0];
      std::string cn = fresh_name("c", avoid);
      Formula bc = substitute(b, y, Term::cst(cn));
      ProofPtr inner = general_leibniz(bc, x, t1, t2);
      Formula body1 = substitute(b, x, t1), body2 = substitute(b, x, t2);
      inner = mk_lforall(y, body2, Term::cst(cn), std::move(inner));
      return mk_rforall(y, body1, cn, std::move(inner));
    }
    case Formula::Kind::Iq: {
      const std::string& y = a.name;
      const Formula& b = a.subs[0];
      const Formula& c = a.subs[1];
      Formula b1 = substitute(b, x, t1), b2 = substitute(b, x, t2);
      Formula c1 = substitute(c, x, t1), c2 = substitute(c, x, t2);
      Formula iy2 = Formula::iq(y, b2, c2);
      std::string cn = fresh_name("c", avoid);
      avoid.insert(cn);
      std::string dn = fresh_name("d", avoid);
      Term ct = Term::cst(cn), dt = Term::cst(dn);

      Formula b2c = substitute(b2, y, ct), c2c = substitute(c2, y, ct);
      Formula b1c = substitute(b1, y, ct), c1c = substitute(c1, y, ct);
      Formula b1d = substitute(b1, y, dt), b2d = substitute(b2, y, dt);

      std::vector<Formula> gc = {b2c, c2c, id, iy2};
      ProofPtr p1 = weaken_to(general_leibniz(substitute(b, y, ct), x, t1, t2),
                              Sequent{gc, {b1c}});
      ProofPtr p2 = weaken_to(general_leibniz(substitute(c, y, ct), x, t1, t2),
                              Sequent{gc, {c1c}});

      std::vector<Formula> gq = {b1d, b2c, c2c, id};
      ProofPtr q1 = weaken_to(
          flip_identity(general_leibniz(substitute(b, y, dt), x, t2, t1), t1, t2),
          Sequent{gq, {b2d}});
      ProofPtr q2 = weaken_to(ax(b2c), Sequent{gq, {b2c}});
      ProofPtr q3 = weaken_to(law_of_identity(ct), Sequent{gq, {Formula::eq(ct, ct)}});
      ProofPtr p3 = mk_li2(y, b2, c2, Formula::eq(Term::var(y), ct), dt, ct,
                           std::move(q1), std::move(q2), std::move(q3));

      ProofPtr ri = mk_ri(y, b1, c1, ct, dn, std::move(p1), std::move(p2), std::move(p3));
      ProofPtr li1 = mk_li1(y, b2, c2, cn, std::move(ri));
      return mk_lc(iy2, std::move(li1));
    }
    default:
      throw std::logic_error("general_leibniz: unreachable");
  }
}

}  // namespace descq
