#include "descq/tableau.hpp"

#include <sstream>

namespace descq {

const char* instance_rule_name(Instance::Kind k) {
  switch (k) {
    case Instance::Kind::Alpha: return "alpha";
    case Instance::Kind::Beta: return "->";
    case Instance::Kind::DeltaNotAll: return "~forall";
    case Instance::Kind::DeltaIq: return "I";
    case Instance::Kind::GammaAll: return "forall";
    case Instance::Kind::GammaIq: return "I-unique";
    case Instance::Kind::GammaNotIq: return "~I";
    case Instance::Kind::Refl: return "=refl";
    case Instance::Kind::Subst: return "=subst";
  }
  return "?";
}

namespace {

bool is_not(const Formula& f) { return f.kind == Formula::Kind::Not; }
const Formula& body(const Formula& f) { return f.subs[0]; }

void collect_subterms(const Term& t, std::set<Term, TermLess>& out) {
  out.insert(t);
  for (const Term& a : t.args) collect_subterms(a, out);
}

// Only closed occurrences count as branch terms: a subterm mentioning a
// variable bound above it is not a term of the branch.
void collect_closed_subterms(const Term& t, const std::map<std::string, int>& bound,
                             std::set<Term, TermLess>& out) {
  bool has_bound = false;
  for (const auto& v : term_vars(t))
    if (bound.count(v) && bound.at(v) > 0) {
      has_bound = true;
      break;
    }
  if (!has_bound) {
    collect_subterms(t, out);
    return;
  }
  for (const Term& a : t.args) collect_closed_subterms(a, bound, out);
}

void collect_branch_terms(const Formula& f, std::map<std::string, int>& bound,
                          std::set<Term, TermLess>& out) {
  for (const Term& t : f.terms) collect_closed_subterms(t, bound, out);
  switch (f.kind) {
    case Formula::Kind::Forall:
    case Formula::Kind::Iq: {
      ++bound[f.name];
      for (const Formula& s : f.subs) collect_branch_terms(s, bound, out);
      --bound[f.name];
      break;
    }
    default:
      for (const Formula& s : f.subs) collect_branch_terms(s, bound, out);
  }
}

std::string gamma_key(const char* tag, const Formula& f, const Term& t) {
  return std::string(tag) + "|" + to_string(f) + "|" + to_string(t);
}

void schedule(Branch& b, Instance inst, const std::string& key) {
  if (!b.scheduled.insert(key).second) return;
  b.queue.push_back(std::move(inst));
}

bool is_rewritable_atom(const Formula& f) { return f.is_atomic(); }

// Every single-occurrence replacement of `from` (as a subterm) by `to`.
void term_rewrites(const Term& t, const Term& from, const Term& to,
                   std::vector<Term>& out) {
  if (t == from) out.push_back(to);
  for (size_t i = 0; i < t.args.size(); ++i) {
    std::vector<Term> inner;
    term_rewrites(t.args[i], from, to, inner);
    for (Term& r : inner) {
      Term copy = t;
      copy.args[i] = std::move(r);
      out.push_back(std::move(copy));
    }
  }
}

std::vector<Formula> atom_rewrites(const Formula& atom, const Term& from, const Term& to) {
  std::vector<Formula> out;
  for (size_t i = 0; i < atom.terms.size(); ++i) {
    std::vector<Term> alts;
    term_rewrites(atom.terms[i], from, to, alts);
    for (Term& r : alts) {
      Formula copy = atom;
      copy.terms[i] = std::move(r);
      out.push_back(std::move(copy));
    }
  }
  return out;
}

void hook_new_term(Branch& b, const Term& t);

// Adds one formula; returns true when new. Closure, term collection and
// scheduling hooks happen here.
bool add_formula(Branch& b, const Formula& f) {
  if (b.contains(f)) return false;
  b.formulas.insert(f);
  b.order.push_back(f);
  collect_names(f, b.used_names);

  if (is_not(f) && b.contains(body(f))) b.closed = true;
  if (b.contains(Formula::f_not(f))) b.closed = true;

  // rule instances driven by the shape of f
  using K = Instance::Kind;
  switch (f.kind) {
    case Formula::Kind::Imp:
      schedule(b, Instance{K::Beta, f, {}, {}}, "beta|" + to_string(f));
      break;
    case Formula::Kind::Not: {
      const Formula& g = body(f);
      if (g.kind == Formula::Kind::Not || g.kind == Formula::Kind::Imp)
        schedule(b, Instance{K::Alpha, f, {}, {}}, "alpha|" + to_string(f));
      else if (g.kind == Formula::Kind::Forall)
        schedule(b, Instance{K::DeltaNotAll, f, {}, {}}, "dna|" + to_string(f));
      else if (g.kind == Formula::Kind::Iq) {
        for (const Term& t : b.terms)
          schedule(b, Instance{K::GammaNotIq, f, t, {}}, gamma_key("gni", f, t));
      }
      break;
    }
    case Formula::Kind::Forall:
      for (const Term& t : b.terms)
        schedule(b, Instance{K::GammaAll, f, t, {}}, gamma_key("ga", f, t));
      break;
    case Formula::Kind::Iq:
      schedule(b, Instance{K::DeltaIq, f, {}, {}}, "di|" + to_string(f));
      break;
    default:
      break;
  }

  // identity bookkeeping over atoms
  if (is_rewritable_atom(f)) {
    for (const Formula& g : b.order) {
      if (g.kind == Formula::Kind::Eq)
        schedule(b, Instance{K::Subst, f, {}, g},
                 "su|" + to_string(f) + "|" + to_string(g));
    }
    if (f.kind == Formula::Kind::Eq) {
      for (const Formula& g : b.order)
        if (is_rewritable_atom(g))
          schedule(b, Instance{K::Subst, g, {}, f},
                   "su|" + to_string(g) + "|" + to_string(f));
    }
  }

  std::set<Term, TermLess> ts;
  std::map<std::string, int> bound;
  collect_branch_terms(f, bound, ts);
  for (const Term& t : ts)
    if (!b.terms.count(t)) hook_new_term(b, t);
  return true;
}

void hook_new_term(Branch& b, const Term& t) {
  b.terms.insert(t);
  collect_names(t, b.used_names);
  using K = Instance::Kind;
  schedule(b, Instance{K::Refl, {}, t, {}}, gamma_key("re", Formula::eq(t, t), t));
  for (const Formula& f : b.order) {
    if (f.kind == Formula::Kind::Forall)
      schedule(b, Instance{K::GammaAll, f, t, {}}, gamma_key("ga", f, t));
    else if (f.kind == Formula::Kind::Iq && b.iq_witness.count(f))
      schedule(b, Instance{K::GammaIq, f, t, {}}, gamma_key("gi", f, t));
    else if (is_not(f) && body(f).kind == Formula::Kind::Iq)
      schedule(b, Instance{K::GammaNotIq, f, t, {}}, gamma_key("gni", f, t));
  }
}

std::string fresh_param(Branch& b) {
  std::string n = fresh_name("a", b.used_names);
  b.used_names.insert(n);
  ++b.fresh_used;
  return n;
}

Branch child_with(const Branch& parent, const char* rule,
                  const std::vector<Formula>& additions) {
  Branch c = parent;
  auto node = std::make_shared<TabNode>();
  node->rule = rule;
  for (const Formula& f : additions)
    if (add_formula(c, f)) node->added.push_back(f);
  c.node->children.push_back(node);
  c.node = node;
  if (c.closed) node->closed = true;
  return c;
}

}  // namespace

Branch root_branch(const Sequent& q) {
  Branch b;
  b.node = std::make_shared<TabNode>();
  b.node->rule = "root";
  for (const Formula& f : q.ante) {
    if (add_formula(b, f)) b.node->added.push_back(f);
  }
  for (const Formula& f : q.succ) {
    Formula n = Formula::f_not(f);
    if (add_formula(b, n)) b.node->added.push_back(n);
  }
  if (b.terms.empty()) {
    // the term rules ask for "a new one if there is none yet"
    std::string c = fresh_name("c", b.used_names);
    b.used_names.insert(c);
    Formula seed = Formula::eq(Term::cst(c), Term::cst(c));
    if (add_formula(b, seed)) b.node->added.push_back(seed);
  }
  if (b.closed) b.node->closed = true;
  return b;
}

bool is_closed(const Branch& b) {
  for (const Formula& f : b.formulas)
    if (f.kind == Formula::Kind::Not && b.formulas.count(f.subs[0])) return true;
  return false;
}

std::vector<Branch> expand_step(const Branch& b0) {
  if (b0.queue.empty()) throw NoApplicableRule();
  Branch b = b0;
  Instance inst = b.queue.front();
  b.queue.pop_front();
  using K = Instance::Kind;

  switch (inst.kind) {
    case K::Alpha: {
      const Formula& g = body(inst.f);
      if (g.kind == Formula::Kind::Not)
        return {child_with(b, "~~", {g.subs[0]})};
      // ~(A -> B)
      return {child_with(b, "~->", {g.subs[0], Formula::f_not(g.subs[1])})};
    }
    case K::Beta:
      return {child_with(b, "->", {Formula::f_not(inst.f.subs[0])}),
              child_with(b, "->", {inst.f.subs[1]})};
    case K::DeltaNotAll: {
      const Formula& all = body(inst.f);
      std::string a = fresh_param(b);
      Term at = Term::cst(a);
      return {child_with(b, "~forall",
                         {Formula::exists_bang(at),
                          Formula::f_not(substitute(all.subs[0], all.name, at))})};
    }
    case K::DeltaIq: {
      std::string a = fresh_param(b);
      Term at = Term::cst(a);
      b.iq_witness[inst.f] = a;
      // uniqueness legs for every term currently on the branch
      for (const Term& t : b.terms)
        schedule(b, Instance{K::GammaIq, inst.f, t, {}}, gamma_key("gi", inst.f, t));
      return {child_with(b, "I", {substitute(inst.f.subs[0], inst.f.name, at),
                                  substitute(inst.f.subs[1], inst.f.name, at)})};
    }
    case K::GammaAll: {
      ++b.gamma_used;
      Formula instd = substitute(inst.f.subs[0], inst.f.name, inst.t);
      return {child_with(b, "forall", {Formula::f_not(Formula::exists_bang(inst.t))}),
              child_with(b, "forall", {instd})};
    }
    case K::GammaIq: {
      ++b.gamma_used;
      Term wit = Term::cst(b.iq_witness.at(inst.f));
      Formula nat = Formula::f_not(substitute(inst.f.subs[0], inst.f.name, inst.t));
      return {child_with(b, "I-unique", {nat}),
              child_with(b, "I-unique", {Formula::eq(wit, inst.t)})};
    }
    case K::GammaNotIq: {
      ++b.gamma_used;
      const Formula& iq = body(inst.f);
      std::string a = fresh_param(b);
      Term at = Term::cst(a);
      Formula na = Formula::f_not(substitute(iq.subs[0], iq.name, inst.t));
      Formula nb = Formula::f_not(substitute(iq.subs[1], iq.name, inst.t));
      Formula wa = substitute(iq.subs[0], iq.name, at);
      Formula nid = Formula::f_not(Formula::eq(at, inst.t));
      return {child_with(b, "~I", {na}), child_with(b, "~I", {nb}),
              child_with(b, "~I", {wa, nid})};
    }
    case K::Refl: {
      Formula r = Formula::eq(inst.t, inst.t);
      if (b.contains(r)) return {std::move(b)};
      return {child_with(b, "=refl", {r})};
    }
    case K::Subst: {
      const Term& from = inst.id.terms[0];
      const Term& to = inst.id.terms[1];
      std::vector<Formula> adds = atom_rewrites(inst.f, from, to);
      std::erase_if(adds, [&](const Formula& g) { return b.contains(g); });
      if (adds.empty()) return {std::move(b)};
      return {child_with(b, "=subst", adds)};
    }
  }
  throw std::logic_error("unreachable instance kind");
}

Countermodel extract_model(const Branch& b) {
  std::vector<Term> terms(b.terms.begin(), b.terms.end());
  auto index_of = [&](const Term& t) {
    auto it = std::lower_bound(terms.begin(), terms.end(), t, term_less);
    return static_cast<size_t>(it - terms.begin());
  };
  std::vector<size_t> parent(terms.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  std::function<size_t(size_t)> find = [&](size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  auto unite = [&](size_t i, size_t j) {
    i = find(i);
    j = find(j);
    if (i != j) parent[std::max(i, j)] = std::min(i, j);
  };

  for (const Formula& f : b.formulas)
    if (f.kind == Formula::Kind::Eq) unite(index_of(f.terms[0]), index_of(f.terms[1]));

  // congruence closure over the occurring applications
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < terms.size(); ++i) {
      if (terms[i].kind != Term::Kind::App) continue;
      for (size_t j = i + 1; j < terms.size(); ++j) {
        if (terms[j].kind != Term::Kind::App || terms[j].name != terms[i].name ||
            terms[j].args.size() != terms[i].args.size())
          continue;
        if (find(i) == find(j)) continue;
        bool same = true;
        for (size_t k = 0; k < terms[i].args.size(); ++k)
          if (find(index_of(terms[i].args[k])) != find(index_of(terms[j].args[k]))) {
            same = false;
            break;
          }
        if (same) {
          unite(i, j);
          changed = true;
        }
      }
    }
  }

  // dense element ids in term order
  std::map<size_t, Elem> cls;
  for (size_t i = 0; i < terms.size(); ++i) {
    size_t r = find(i);
    if (!cls.count(r)) cls[r] = static_cast<Elem>(cls.size());
  }
  auto elem_of = [&](const Term& t) { return cls.at(find(index_of(t))); };

  Structure m;
  m.outer_size = std::max<int>(1, static_cast<int>(cls.size()));
  Assignment s;

  std::map<std::string, int> fn_arity;
  for (const Term& t : terms) {
    if (t.kind == Term::Kind::Const) m.const_den[t.name] = elem_of(t);
    if (t.kind == Term::Kind::Var) s.map[t.name] = elem_of(t);
    if (t.kind == Term::Kind::App) fn_arity[t.name] = static_cast<int>(t.args.size());
  }

  for (const Formula& f : b.formulas) {
    if (f.kind == Formula::Kind::Exists) m.inner.insert(elem_of(f.terms[0]));
    if (f.kind == Formula::Kind::Pred) {
      std::vector<Elem> tup;
      for (const Term& t : f.terms) tup.push_back(elem_of(t));
      m.pred_ext[f.name].insert(std::move(tup));
    }
  }

  for (const auto& [fn, arity] : fn_arity) {
    long long cells = 1;
    for (int i = 0; i < arity; ++i) cells *= m.outer_size;
    std::vector<Elem> table(static_cast<size_t>(cells), 0);
    for (const Term& t : terms) {
      if (t.kind != Term::Kind::App || t.name != fn) continue;
      size_t idx = 0;
      for (const Term& a : t.args)
        idx = idx * static_cast<size_t>(m.outer_size) + static_cast<size_t>(elem_of(a));
      table[idx] = elem_of(t);
    }
    m.func_den[fn] = std::move(table);
  }

  for (const Formula& f : b.formulas)
    if (!satisfies(m, s, f))
      throw ExtractionFailed("extracted model does not satisfy " + to_string(f));
  return Countermodel{std::move(m), std::move(s)};
}

namespace {

// Cost of the front instance against the remaining budget.
bool over_budget(const Branch& b, const Instance& inst, const Budget& budget) {
  using K = Instance::Kind;
  switch (inst.kind) {
    case K::GammaAll:
    case K::GammaIq:
      return b.gamma_used + 1 > budget.max_gamma;
    case K::GammaNotIq:
      return b.gamma_used + 1 > budget.max_gamma || b.fresh_used + 1 > budget.max_fresh;
    case K::DeltaNotAll:
    case K::DeltaIq:
      return b.fresh_used + 1 > budget.max_fresh;
    default:
      return false;
  }
}

}  // namespace

TableauResult prove(const Sequent& q, const Budget& budget) {
  Branch root = root_branch(q);
  std::shared_ptr<TabNode> tree = root.node;
  std::vector<Branch> stack{std::move(root)};
  ResourceReport report;

  while (!stack.empty()) {
    Branch b = std::move(stack.back());
    stack.pop_back();
    while (true) {
      if (b.closed) {
        b.node->closed = true;
        ++report.branches_closed;
        break;
      }
      if (b.queue.empty()) {
        if (b.budget_skipped) {
          report.budget_hit = true;
          break;
        }
        // saturated open branch: countermodel
        Countermodel cm = extract_model(b);
        TableauResult r{TableauResult::Kind::Countermodel, tree, std::move(cm),
                        std::move(b), report};
        return r;
      }
      if (over_budget(b, b.queue.front(), budget)) {
        b.queue.pop_front();
        b.budget_skipped = true;
        continue;
      }
      std::vector<Branch> children = expand_step(b);
      report.gamma_used = std::max(report.gamma_used, children.front().gamma_used);
      report.fresh_used = std::max(report.fresh_used, children.front().fresh_used);
      if (children.size() == 1) {
        b = std::move(children.front());
        continue;
      }
      for (size_t i = children.size(); i-- > 0;) stack.push_back(std::move(children[i]));
      break;
    }
  }

  TableauResult r{report.budget_hit ? TableauResult::Kind::Unknown
                                    : TableauResult::Kind::Proof,
                  tree, std::nullopt, Branch{}, report};
  return r;
}

namespace {

void render_rec(const TabNode& n, std::string indent, std::ostringstream& os) {
  os << indent << n.rule;
  if (!n.added.empty()) {
    os << ":";
    for (const Formula& f : n.added) os << " " << to_string(f) << ";";
  }
  if (n.closed && n.children.empty()) os << "  [closed]";
  os << "\n";
  for (const auto& c : n.children) render_rec(*c, indent + "  ", os);
}

}  // namespace

std::string render_tree(const TabNode& root) {
  std::ostringstream os;
  render_rec(root, "", os);
  return os.str();
}

}  // namespace descq
