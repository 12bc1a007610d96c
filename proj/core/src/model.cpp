#include "descq/model.hpp"

#include <cmath>
#include <istream>
#include <sstream>

namespace descq {

Elem Assignment::at(const std::string& x) const {
  auto it = map.find(x);
  if (it == map.end()) throw UnboundVariable(x);
  return it->second;
}

Assignment Assignment::updated(const std::string& x, Elem d) const {
  Assignment s = *this;
  s.map[x] = d;
  return s;
}

namespace {

size_t tuple_index(const std::vector<Elem>& args, int outer) {
  size_t idx = 0;
  for (Elem a : args) idx = idx * static_cast<size_t>(outer) + static_cast<size_t>(a);
  return idx;
}

}  // namespace

Elem eval_term(const Structure& m, const Assignment& s, const Term& t) {
  switch (t.kind) {
    case Term::Kind::Var:
      return s.at(t.name);
    case Term::Kind::Const: {
      auto it = m.const_den.find(t.name);
      if (it == m.const_den.end()) throw UnboundVariable(t.name);
      return it->second;
    }
    case Term::Kind::App: {
      std::vector<Elem> args;
      args.reserve(t.args.size());
      for (const Term& u : t.args) args.push_back(eval_term(m, s, u));
      auto it = m.func_den.find(t.name);
      if (it == m.func_den.end()) throw UnboundVariable(t.name);
      return it->second.at(tuple_index(args, m.outer_size));
    }
  }
  return 0;
}

std::vector<Elem> iq_witnesses(const Structure& m, const Assignment& s,
                               const std::string& x, const Formula& a) {
  std::vector<Elem> out;
  for (Elem d = 0; d < m.outer_size; ++d)
    if (satisfies(m, s.updated(x, d), a)) out.push_back(d);
  return out;
}

bool satisfies(const Structure& m, const Assignment& s, const Formula& a) {
  switch (a.kind) {
    case Formula::Kind::Eq:
      return eval_term(m, s, a.terms[0]) == eval_term(m, s, a.terms[1]);
    case Formula::Kind::Exists:
      return m.inner.count(eval_term(m, s, a.terms[0])) != 0;
    case Formula::Kind::Pred: {
      std::vector<Elem> tup;
      tup.reserve(a.terms.size());
      for (const Term& t : a.terms) tup.push_back(eval_term(m, s, t));
      auto it = m.pred_ext.find(a.name);
      return it != m.pred_ext.end() && it->second.count(tup) != 0;
    }
    case Formula::Kind::Not:
      return !satisfies(m, s, a.subs[0]);
    case Formula::Kind::Imp:
      return !satisfies(m, s, a.subs[0]) || satisfies(m, s, a.subs[1]);
    case Formula::Kind::Forall: {
      for (Elem d : m.inner)
        if (!satisfies(m, s.updated(a.name, d), a.subs[0])) return false;
      return true;
    }
    case Formula::Kind::Iq: {
      // exactly one element of the outer domain satisfies the first
      // component, and the second holds of it
      std::vector<Elem> w = iq_witnesses(m, s, a.name, a.subs[0]);
      return w.size() == 1 && satisfies(m, s.updated(a.name, w[0]), a.subs[1]);
    }
  }
  return false;
}

bool satisfies_sequent(const Structure& m, const Assignment& s, const Sequent& q) {
  for (const Formula& f : q.ante)
    if (!satisfies(m, s, f)) return true;
  for (const Formula& f : q.succ)
    if (satisfies(m, s, f)) return true;
  return false;
}

// --- model file format ---------------------------------------------------

std::string to_string(const Structure& m) {
  std::ostringstream os;
  os << "outer " << m.outer_size << "\n";
  os << "inner";
  for (Elem e : m.inner) os << " " << e;
  os << "\n";
  for (const auto& [c, d] : m.const_den) os << "const " << c << " " << d << "\n";
  for (const auto& [p, ext] : m.pred_ext) {
    os << "pred " << p << " :";
    for (const auto& tup : ext) {
      os << " (";
      for (size_t i = 0; i < tup.size(); ++i) {
        if (i) os << ",";
        os << tup[i];
      }
      os << ")";
    }
    os << "\n";
  }
  for (const auto& [f, table] : m.func_den) {
    // arity recovered from the table size (outer^arity entries)
    int arity = 1;
    if (m.outer_size > 1) {
      arity = 0;
      for (size_t acc = 1; acc < table.size(); acc *= static_cast<size_t>(m.outer_size))
        ++arity;
    }
    os << "fn " << f << "/" << arity << " :";
    for (size_t i = 0; i < table.size(); ++i) os << " " << table[i];
    os << "\n";
  }
  return os.str();
}

std::string to_string(const Structure& m, const Assignment& s) {
  std::string out = to_string(m);
  for (const auto& [x, d] : s.map) out += "assign " + x + " " + std::to_string(d) + "\n";
  return out;
}

Structure parse_structure(std::istream& in, Assignment* assignment) {
  Structure m;
  std::string line;
  bool saw_outer = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw) || kw[0] == '#') continue;
    if (kw == "outer") {
      if (!(ls >> m.outer_size) || m.outer_size < 1)
        throw std::runtime_error("model: bad outer size");
      saw_outer = true;
    } else if (kw == "inner") {
      Elem e;
      while (ls >> e) m.inner.insert(e);
    } else if (kw == "const") {
      std::string name;
      Elem d;
      if (!(ls >> name >> d)) throw std::runtime_error("model: bad const line");
      m.const_den[name] = d;
    } else if (kw == "pred") {
      std::string name, colon;
      if (!(ls >> name >> colon) || colon != ":")
        throw std::runtime_error("model: bad pred line");
      std::string tup;
      while (ls >> tup) {
        if (tup.size() < 2 || tup.front() != '(' || tup.back() != ')')
          throw std::runtime_error("model: bad tuple " + tup);
        std::vector<Elem> t;
        std::istringstream ts(tup.substr(1, tup.size() - 2));
        std::string item;
        while (std::getline(ts, item, ',')) t.push_back(std::stoi(item));
        m.pred_ext[name].insert(std::move(t));
      }
      m.pred_ext.try_emplace(name);
    } else if (kw == "fn") {
      std::string spec, colon;
      if (!(ls >> spec >> colon) || colon != ":")
        throw std::runtime_error("model: bad fn line");
      auto slash = spec.find('/');
      if (slash == std::string::npos) throw std::runtime_error("model: fn needs arity");
      std::string name = spec.substr(0, slash);
      Elem v;
      std::vector<Elem> table;
      while (ls >> v) table.push_back(v);
      m.func_den[name] = std::move(table);
    } else if (kw == "assign") {
      std::string x;
      Elem d;
      if (!(ls >> x >> d)) throw std::runtime_error("model: bad assign line");
      if (assignment) assignment->map[x] = d;
    } else {
      throw std::runtime_error("model: unknown directive " + kw);
    }
  }
  if (!saw_outer) throw std::runtime_error("model: missing outer size");
  for (Elem e : m.inner)
    if (e < 0 || e >= m.outer_size) throw std::runtime_error("model: inner out of range");
  return m;
}

Structure parse_structure_text(const std::string& text, Assignment* assignment) {
  std::istringstream is(text);
  return parse_structure(is, assignment);
}

}  // namespace descq
