#include "descq/corpus.hpp"

#include "descq/derive.hpp"

namespace descq {

namespace {

Term C(const char* n) { return Term::cst(n); }
Term V(const char* n) { return Term::var(n); }

Formula pred1(const char* p, Term t) { return Formula::pred(p, {std::move(t)}); }

}  // namespace

Signature corpus_signature() {
  Signature sig;
  sig.predicates = {{"F", 1}, {"G", 1}, {"H", 1}, {"P", 1}};
  sig.constants = {"t", "a", "b", "c", "d"};
  return sig;
}

ProofPtr fl_proof(const Term& t, const std::string& x) {
  Formula xt = Formula::eq(Term::var(x), t);
  std::set<std::string> avoid{x};
  collect_names(t, avoid);
  std::string a = fresh_name("a", avoid);
  ProofPtr p3 = ax(Formula::eq(Term::cst(a), t));
  return mk_ri(x, xt, xt, t, a, law_of_identity(t), law_of_identity(t), std::move(p3));
}

ProofPtr mimic1_proof(const Formula& a, const Formula& b, const Term& t,
                      const std::string& x) {
  std::set<std::string> avoid{x};
  collect_names(a, avoid);
  collect_names(b, avoid);
  collect_names(t, avoid);
  std::string pa = fresh_name("a", avoid);
  avoid.insert(pa);
  std::string pb = fresh_name("b", avoid);
  Term ta = C(pa.c_str()), tb = C(pb.c_str());

  Formula xt = Formula::eq(V(x.c_str()), t);
  Formula desc_at = Formula::iq(x, a, xt);
  Formula aa = substitute(a, x, ta), ab = substitute(a, x, tb), at = substitute(a, x, t);
  Formula bt = substitute(b, x, t);
  Formula a_eq_t = Formula::eq(ta, t), b_eq_t = Formula::eq(tb, t);

  // Pi: Ix[A, x = t], A[b] |- b = t
  std::vector<Formula> gp = {ab, a_eq_t, aa};
  ProofPtr l1 = weaken_to(ax(ab), Sequent{gp, {ab}});
  ProofPtr l2 = weaken_to(mk_eqi(x, a, ta, t, ax(at)), Sequent{gp, {at}});
  ProofPtr l3 = weaken_to(law_of_identity(t), Sequent{gp, {Formula::eq(t, t)}});
  ProofPtr pi = mk_li2(x, a, xt, Formula::eq(V(x.c_str()), t), tb, t,
                       std::move(l1), std::move(l2), std::move(l3));
  pi = mk_lc(desc_at, mk_li1(x, a, xt, pa, std::move(pi)));

  // Main tree.
  std::vector<Formula> gm = {a_eq_t, aa, bt, desc_at};
  ProofPtr m1 = weaken_to(mk_eqi(x, a, ta, t, ax(at)), Sequent{gm, {at}});
  ProofPtr m2 = weaken_to(ax(bt), Sequent{gm, {bt}});
  ProofPtr m3 = weaken_to(std::move(pi), Sequent{madd(gm, ab), {b_eq_t}});
  ProofPtr ri = mk_ri(x, a, b, t, pb, std::move(m1), std::move(m2), std::move(m3));
  return mk_lc(desc_at, mk_li1(x, a, xt, pa, std::move(ri)));
}

ProofPtr mimic2_proof(const Formula& a, const Formula& b, const Term& t,
                      const std::string& x) {
  std::set<std::string> avoid{x};
  collect_names(a, avoid);
  collect_names(b, avoid);
  collect_names(t, avoid);
  std::string pa = fresh_name("a", avoid);
  avoid.insert(pa);
  std::string pc = fresh_name("c", avoid);
  Term ta = C(pa.c_str()), tc = C(pc.c_str());

  Formula xt = Formula::eq(V(x.c_str()), t);
  Formula desc_at = Formula::iq(x, a, xt);
  Formula desc_ab = Formula::iq(x, a, b);
  Formula aa = substitute(a, x, ta), ac = substitute(a, x, tc), at = substitute(a, x, t);
  Formula ba = substitute(b, x, ta);
  Formula c_eq_t = Formula::eq(tc, t);

  std::vector<Formula> g = {aa, ba, ac, c_eq_t};
  ProofPtr d1 = weaken_to(mk_eqi(x, a, tc, t, ax(at)), Sequent{g, {at}});
  ProofPtr d2 = weaken_to(ax(aa), Sequent{g, {aa}});
  ProofPtr d3 = weaken_to(ax(ba), Sequent{g, {ba}});
  ProofPtr li2 = mk_li2(x, a, b, b, t, ta, std::move(d1), std::move(d2), std::move(d3));
  ProofPtr p = mk_li1(x, a, xt, pc, std::move(li2));
  p = mk_li1(x, a, b, pa, std::move(p));
  return mk_lc(desc_ab, std::move(p));
}

namespace {

// Ix[F, Iy[G, x = y]], Ix[F, H] |- Ix[G, H]
ProofPtr mimic3_proof() {
  Formula Fx = pred1("F", V("x")), Gx = pred1("G", V("x")), Hx = pred1("H", V("x"));
  Formula Gy = pred1("G", V("y"));
  Formula inner = Formula::iq("y", Gy, Formula::eq(V("x"), V("y")));
  Formula desc_fi = Formula::iq("x", Fx, inner);
  Formula desc_fh = Formula::iq("x", Fx, Hx);
  Formula goal = Formula::iq("x", Gx, Hx);
  Formula iy_ga = Formula::iq("y", Gy, Formula::eq(C("a"), V("y")));

  Formula Ga = pred1("G", C("a")), Gb = pred1("G", C("b")), Ge = pred1("G", C("e"));
  Formula Fa = pred1("F", C("a")), Fc = pred1("F", C("c"));
  Formula Hc = pred1("H", C("c")), Hb = pred1("H", C("b"));
  Formula a_eq_b = Formula::eq(C("a"), C("b"));

  std::vector<Formula> g0 = {Gb, a_eq_b, Fc, Hc, Fa, iy_ga, desc_fh};

  // P1: G0 |- G(b)
  ProofPtr p1 = weaken_to(ax(Gb), Sequent{g0, {Gb}});

  // P2: G0 |- H(b), via LI2 on Ix[F, H]
  std::vector<Formula> g2 = {Gb, a_eq_b, Fc, Hc, Fa, iy_ga};
  ProofPtr p2a =
      weaken_to(mk_eqi("x", Fx, C("a"), C("b"), ax(pred1("F", C("b")))),
                Sequent{g2, {pred1("F", C("b"))}});
  ProofPtr p2b = weaken_to(ax(Fc), Sequent{g2, {Fc}});
  ProofPtr p2c = weaken_to(ax(Hc), Sequent{g2, {Hc}});
  ProofPtr p2 = mk_li2("x", Fx, Hx, Hx, C("b"), C("c"), std::move(p2a), std::move(p2b),
                       std::move(p2c));

  // P3: G(e), G0 |- e = b, via LI2 on Iy[G, a = y]
  std::vector<Formula> g3 = {Ge, Gb, a_eq_b, Fc, Hc, Fa, desc_fh};
  ProofPtr p3a = weaken_to(ax(Ge), Sequent{g3, {Ge}});
  ProofPtr p3b = weaken_to(ax(Gb), Sequent{g3, {Gb}});
  ProofPtr p3c =
      weaken_to(law_of_identity(C("b")), Sequent{g3, {Formula::eq(C("b"), C("b"))}});
  ProofPtr p3 = mk_li2("y", Gy, Formula::eq(C("a"), V("y")),
                       Formula::eq(V("y"), C("b")), C("e"), C("b"), std::move(p3a),
                       std::move(p3b), std::move(p3c));

  ProofPtr p = mk_ri("x", Gx, Hx, C("b"), "e", std::move(p1), std::move(p2), std::move(p3));
  p = mk_li1("y", Gy, Formula::eq(C("a"), V("y")), "b", std::move(p));
  p = mk_lc(iy_ga, std::move(p));
  p = mk_li1("x", Fx, Hx, "c", std::move(p));
  p = mk_li1("x", Fx, inner, "a", std::move(p));
  return mk_lc(desc_fh, std::move(p));
}

// |- forall y (Ix[F, x = y] -> forall x (F <-> x = y))
ProofPtr half_ll_proof() {
  Formula Fx = pred1("F", V("x"));
  Formula Fa = pred1("F", C("a")), Fb = pred1("F", C("b")), Fc = pred1("F", C("c"));
  Formula xb = Formula::eq(V("x"), C("b"));
  Formula desc = Formula::iq("x", Fx, xb);
  Formula a_eq_b = Formula::eq(C("a"), C("b"));
  Formula c_eq_b = Formula::eq(C("c"), C("b"));

  // Ix[F, x = b], F(a), a = b, F(c) |- c = b
  std::vector<Formula> gh = {Fa, a_eq_b, Fc};
  ProofPtr l1 = weaken_to(mk_eqi("x", Fx, C("a"), C("b"), ax(Fb)), Sequent{gh, {Fb}});
  ProofPtr l2 = weaken_to(ax(Fc), Sequent{gh, {Fc}});
  ProofPtr l3 =
      weaken_to(law_of_identity(C("c")), Sequent{gh, {Formula::eq(C("c"), C("c"))}});
  ProofPtr li2 = mk_li2("x", Fx, xb, Formula::eq(C("c"), V("x")), C("b"), C("c"),
                        std::move(l1), std::move(l2), std::move(l3));

  // F(a), a = b, c = b |- F(c)
  ProofPtr l4 = mk_eqi("x", Fx, C("a"), C("b"), leibniz_atomic(Fx, "x", C("c"), C("b")));
  l4 = weaken_to(std::move(l4), Sequent{{c_eq_b, desc, Fa, a_eq_b}, {Fc}});

  ProofPtr riff = mk_riff(Fc, c_eq_b, std::move(li2), std::move(l4));
  ProofPtr p = mk_lw(Formula::exists_bang(C("c")), std::move(riff));
  Formula body = iff_expand(Fx, xb);
  p = mk_rforall("x", body, "c", std::move(p));
  p = mk_li1("x", Fx, xb, "a", std::move(p));
  p = mk_lc(desc, std::move(p));
  Formula all_body = Formula::forall("x", body);
  p = mk_rimp(desc, all_body, std::move(p));
  p = mk_lw(Formula::exists_bang(C("b")), std::move(p));
  Formula y_body = Formula::imp(
      Formula::iq("x", Fx, Formula::eq(V("x"), V("y"))),
      Formula::forall("x", iff_expand(Fx, Formula::eq(V("x"), V("y")))));
  return mk_rforall("y", y_body, "b", std::move(p));
}

}  // namespace

std::map<std::string, ProofPtr> derivation_corpus() {
  std::map<std::string, ProofPtr> out;
  Term t = C("t");
  Formula Fx = pred1("F", V("x")), Gx = pred1("G", V("x")), Px = pred1("P", V("x"));

  out["law-of-identity"] = law_of_identity(t);
  out["leibniz-law"] = leibniz_atomic(Px, "x", C("c"), C("d"));
  out["fl-analogue"] = fl_proof(t);
  out["leibniz-mimic-1"] = mimic1_proof(Fx, Gx, t);
  out["leibniz-mimic-2"] = mimic2_proof(Fx, Gx, t);
  out["leibniz-mimic-3"] = mimic3_proof();
  out["half-ll"] = half_ll_proof();
  return out;
}

std::vector<std::pair<std::string, ProofPtr>> cut_fixtures() {
  std::vector<std::pair<std::string, ProofPtr>> out;
  Term t = C("t");
  Formula Fx = pred1("F", V("x")), Gx = pred1("G", V("x")), Px = pred1("P", V("x"));
  Formula Pc = pred1("P", C("c"));
  Formula xt = Formula::eq(V("x"), t);
  Formula fl = Formula::iq("x", xt, xt);
  Formula desc_at = Formula::iq("x", Fx, xt);
  Formula desc_ab = Formula::iq("x", Fx, Gx);
  Formula Gt = pred1("G", C("t"));

  auto add = [&](std::string name, ProofPtr p) {
    out.emplace_back(std::move(name), std::move(p));
  };

  // identity axiom cut
  add("cut-identity-axiom", mk_cut(Formula::eq(t, t), law_of_identity(t),
                                   ax(Formula::eq(t, t))));

  // cut formula Ix[x=t, x=t]: FL against the mimic sequents instantiated at
  // A := (x = t)
  add("cut-fl-mimic1", mk_cut(fl, fl_proof(t), mimic1_proof(xt, Gx, t)));
  add("cut-fl-mimic2", mk_cut(fl, fl_proof(t), mimic2_proof(xt, Gx, t)));

  // cut formula Ix[F, G]
  add("cut-mimic1-mimic2",
      mk_cut(desc_ab, mimic1_proof(Fx, Gx, t), mimic2_proof(Fx, Gx, t)));

  // atomic cut formula G(t)
  add("cut-mimic2-mimic1",
      mk_cut(Gt, mimic2_proof(Fx, Gx, t), mimic1_proof(Fx, Gx, t)));

  // negation cuts
  ProofPtr neg_r = mk_rneg(Pc, ax(Pc));                 // |- P(c), ~P(c)
  ProofPtr neg_l = mk_lneg(Pc, ax(Pc));                 // ~P(c), P(c) |-
  add("cut-neg", mk_cut(Formula::f_not(Pc), neg_r, neg_l));
  ProofPtr nn_r = mk_rneg(Formula::f_not(Pc), mk_lneg(Pc, ax(Pc)));  // P(c) |- ~~P(c)
  ProofPtr nn_l = mk_lneg(Formula::f_not(Pc), mk_rneg(Pc, ax(Pc)));  // ~~P(c) |- P(c)
  add("cut-double-neg", mk_cut(Formula::f_not(Formula::f_not(Pc)), nn_r, nn_l));

  // implication cut
  Formula imp_pp = Formula::imp(Pc, Pc);
  ProofPtr imp_r = mk_rimp(Pc, Pc, ax(Pc));  // |- P(c) -> P(c)
  ProofPtr imp_l = mk_limp(Pc, Pc, weaken_to(ax(Pc), Sequent{{Pc}, {Pc, Pc}}),
                           weaken_to(ax(Pc), Sequent{{Pc, Pc}, {Pc}}));
  add("cut-imp", mk_cut(imp_pp, imp_r, imp_l));

  // forall cut
  Formula all_p = Formula::forall("x", Px);
  ProofPtr all_r = mk_rforall(
      "x", Px, "a", mk_lforall("x", Px, C("a"), ax(pred1("P", C("a")))));
  ProofPtr all_l = mk_lforall("x", Px, C("c"), ax(Pc));
  add("cut-forall", mk_cut(all_p, all_r, all_l));

  // half-ll endsequent consumed by a universal instantiation
  {
    Formula y_body = Formula::imp(
        Formula::iq("x", Fx, Formula::eq(V("x"), V("y"))),
        Formula::forall("x", iff_expand(Fx, Formula::eq(V("x"), V("y")))));
    Formula all_y = Formula::forall("y", y_body);
    Formula inst = substitute(y_body, "y", t);
    ProofPtr consumer = mk_lforall("y", y_body, t, ax(inst));
    add("cut-half-ll-inst", mk_cut(all_y, half_ll_proof(), std::move(consumer)));
  }

  // nested cuts
  {
    ProofPtr innercut =
        mk_cut(Formula::iq("x", xt, Gx), mimic1_proof(xt, Gx, t), mimic2_proof(xt, Gx, t));
    add("cut-fl-nested", mk_cut(fl, fl_proof(t), std::move(innercut)));
  }
  {
    ProofPtr left = mk_cut(Gt, mimic2_proof(Fx, Gx, t), mimic1_proof(Fx, Gx, t));
    add("cut-atomic-then-I",
        mk_cut(desc_ab, mimic1_proof(Fx, Gx, t), std::move(left)));
  }

  // weakening-dressed variants
  add("cut-weakened-identity",
      mk_cut(Formula::eq(t, t), mk_rw(Pc, law_of_identity(t)),
             mk_lw(Pc, ax(Formula::eq(t, t)))));
  add("cut-weakened-mimic",
      mk_cut(desc_ab, mk_lw(Pc, mimic1_proof(Fx, Gx, t)),
             mk_rw(Pc, mimic2_proof(Fx, Gx, t))));

  // same shapes at other instantiations
  for (const char* cn : {"a", "b", "d"}) {
    Term u = C(cn);
    Formula xu = Formula::eq(V("x"), u);
    Formula flu = Formula::iq("x", xu, xu);
    add(std::string("cut-fl-mimic1-") + cn,
        mk_cut(flu, fl_proof(u), mimic1_proof(xu, Gx, u)));
    add(std::string("cut-fl-mimic2-") + cn,
        mk_cut(flu, fl_proof(u), mimic2_proof(xu, Gx, u)));
  }
  for (const char* pn : {"G", "H"}) {
    Formula Qx = pred1(pn, V("x"));
    Formula dq = Formula::iq("x", Fx, Qx);
    add(std::string("cut-mimic-pair-") + pn,
        mk_cut(dq, mimic1_proof(Fx, Qx, t), mimic2_proof(Fx, Qx, t)));
  }

  // contraction-heavy: cut against a contracted consumer
  {
    ProofPtr m2 = mimic2_proof(Fx, Gx, t);
    ProofPtr dressed = mk_lc(desc_ab, mk_lw(desc_ab, std::move(m2)));
    add("cut-contracted-consumer",
        mk_cut(desc_ab, mimic1_proof(Fx, Gx, t), std::move(dressed)));
  }

  return out;
}

std::vector<NonDerivabilityClaim> non_derivability_claims() {
  return {
      {"ll-converse", "forall x. (A(x) <-> x = b) |- I x [A(x), x = b]", 2},
      {"self-identity-description", "|- I x [F(x), I y [F(y), x = y]]", 2},
  };
}

}  // namespace descq
