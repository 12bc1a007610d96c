#ifndef DESCQ_DERIVE_HPP
#define DESCQ_DERIVE_HPP

#include "descq/proof.hpp"

namespace descq {

// Forward rule application: builds a node whose conclusion is computed from
// the premises and the instantiation data. The checker stays the sole
// authority on validity; these throw std::logic_error only on uses that could
// not possibly check (a formula to remove is absent, say).

ProofPtr ax(const Formula& a);
ProofPtr mk_lw(const Formula& a, ProofPtr p);
ProofPtr mk_rw(const Formula& a, ProofPtr p);
ProofPtr mk_lc(const Formula& a, ProofPtr p);
ProofPtr mk_rc(const Formula& a, ProofPtr p);
ProofPtr mk_lneg(const Formula& a, ProofPtr p);
ProofPtr mk_rneg(const Formula& a, ProofPtr p);
ProofPtr mk_limp(const Formula& a, const Formula& b, ProofPtr p1, ProofPtr p2);
ProofPtr mk_rimp(const Formula& a, const Formula& b, ProofPtr p);
ProofPtr mk_cut(const Formula& f, ProofPtr p1, ProofPtr p2);
ProofPtr mk_lforall(const std::string& x, const Formula& a, const Term& t, ProofPtr p);
ProofPtr mk_rforall(const std::string& x, const Formula& a, const std::string& eigen,
                    ProofPtr p);
ProofPtr mk_eqi(const std::string& x, const Formula& a, const Term& t1, const Term& t2,
                ProofPtr p);
ProofPtr mk_eqe(const Term& t, ProofPtr p);
ProofPtr mk_ri(const std::string& x, const Formula& a, const Formula& b, const Term& t,
               const std::string& eigen, ProofPtr p1, ProofPtr p2, ProofPtr p3);
ProofPtr mk_li1(const std::string& x, const Formula& a, const Formula& b,
                const std::string& eigen, ProofPtr p);
ProofPtr mk_li2(const std::string& x, const Formula& a, const Formula& b,
                const Formula& c, const Term& t1, const Term& t2, ProofPtr p1,
                ProofPtr p2, ProofPtr p3);
ProofPtr mk_liff(const Formula& a, const Formula& b, ProofPtr p1, ProofPtr p2);
ProofPtr mk_riff(const Formula& a, const Formula& b, ProofPtr p1, ProofPtr p2);

// Weakening chain from p's conclusion up to target (componentwise superset).
ProofPtr weaken_to(ProofPtr p, const Sequent& target);
// Contraction chain from p's conclusion down to target (componentwise subset,
// with every contracted formula still present at least once).
ProofPtr contract_to(ProofPtr p, const Sequent& target);

// |- t = t
ProofPtr law_of_identity(const Term& t);

// t1 = t2, A[t2/x] |- A[t1/x] for atomic A.
ProofPtr leibniz_atomic(const Formula& a, const std::string& x, const Term& t1,
                        const Term& t2);

// From a proof of (t2 = t1), G |- D derive (t1 = t2), G |- D.
ProofPtr flip_identity(ProofPtr p, const Term& t1, const Term& t2);

// t1 = t2, A[t2/x] |- A[t1/x] for an arbitrary formula A, cut-free.
// Pre: t1 and t2 are free for x in A.
ProofPtr general_leibniz(const Formula& a, const std::string& x, const Term& t1,
                         const Term& t2);

}  // namespace descq

#endif
