#include "descq/proof_io.hpp"

#include <sstream>

#include "descq/parser.hpp"

namespace descq {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

void write_rec(const Proof& p, std::ostringstream& os, int indent) {
  std::string pad(indent, ' ');
  os << pad << "(" << rule_name(p.rule) << " (";
  bool first = true;
  auto kv = [&](const char* k, const std::string& v) {
    if (!first) os << " ";
    first = false;
    os << "(" << k << " " << v << ")";
  };
  const Meta& m = p.meta;
  if (m.x) kv("x", *m.x);
  if (m.a) kv("a", *m.a);
  if (m.t) kv("t", quote(to_string(*m.t)));
  if (m.t1) kv("t1", quote(to_string(*m.t1)));
  if (m.t2) kv("t2", quote(to_string(*m.t2)));
  if (m.A) kv("A", quote(to_string(*m.A)));
  if (m.B) kv("B", quote(to_string(*m.B)));
  if (m.C) kv("C", quote(to_string(*m.C)));
  if (m.cut) kv("cutFormula", quote(to_string(*m.cut)));
  os << ") " << quote(to_string(p.conclusion));
  for (const auto& q : p.premises) {
    os << "\n";
    write_rec(*q, os, indent + 2);
  }
  os << ")";
}

struct SToken {
  enum Kind { LParen, RParen, Atom, Str, End } kind;
  std::string text;
  size_t pos;
};

class SLexer {
 public:
  explicit SLexer(const std::string& s) : s_(s) { advance(); }
  const SToken& peek() const { return tok_; }
  SToken next() {
    SToken t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    size_t start = i_;
    if (i_ >= s_.size()) {
      tok_ = {SToken::End, "", start};
      return;
    }
    char c = s_[i_];
    if (c == '(') {
      tok_ = {SToken::LParen, "(", start};
      ++i_;
      return;
    }
    if (c == ')') {
      tok_ = {SToken::RParen, ")", start};
      ++i_;
      return;
    }
    if (c == '"') {
      std::string out;
      ++i_;
      while (i_ < s_.size() && s_[i_] != '"') {
        if (s_[i_] == '\\' && i_ + 1 < s_.size()) ++i_;
        out += s_[i_++];
      }
      if (i_ >= s_.size()) throw ParseError("unterminated string", start);
      ++i_;
      tok_ = {SToken::Str, std::move(out), start};
      return;
    }
    size_t j = i_;
    while (j < s_.size() && !std::isspace(static_cast<unsigned char>(s_[j])) &&
           s_[j] != '(' && s_[j] != ')')
      ++j;
    tok_ = {SToken::Atom, s_.substr(i_, j - i_), start};
    i_ = j;
  }

  const std::string& s_;
  size_t i_ = 0;
  SToken tok_{SToken::End, "", 0};
};

class ProofReader {
 public:
  ProofReader(const std::string& text, Signature& sig) : lex_(text), sig_(sig) {}

  ProofPtr read() {
    ProofPtr p = node();
    if (lex_.peek().kind != SToken::End)
      throw ParseError("trailing input after proof", lex_.peek().pos);
    return p;
  }

 private:
  [[noreturn]] void fail(const char* msg) { throw ParseError(msg, lex_.peek().pos); }

  void expect(SToken::Kind k, const char* msg) {
    if (lex_.peek().kind != k) fail(msg);
    lex_.next();
  }

  ProofPtr node() {
    expect(SToken::LParen, "expected '('");
    SToken rn = lex_.next();
    if (rn.kind != SToken::Atom) throw ParseError("expected rule name", rn.pos);
    auto rule = rule_from_name(rn.text);
    if (!rule) throw ParseError("unknown rule: " + rn.text, rn.pos);

    // Collect raw entries first: schematic formulas need the bound variable
    // from the x entry, whatever the order.
    std::vector<std::pair<std::string, std::string>> raw;
    expect(SToken::LParen, "expected meta list");
    while (lex_.peek().kind == SToken::LParen) {
      lex_.next();
      SToken key = lex_.next();
      if (key.kind != SToken::Atom) throw ParseError("expected meta key", key.pos);
      SToken val = lex_.next();
      if (val.kind != SToken::Atom && val.kind != SToken::Str)
        throw ParseError("expected meta value", val.pos);
      raw.emplace_back(key.text, val.text);
      expect(SToken::RParen, "expected ')' after meta entry");
    }
    expect(SToken::RParen, "expected ')' closing meta list");

    Meta m;
    std::set<std::string> schema;
    for (auto& [k, v] : raw) {
      if (k == "x") {
        m.x = v;
        schema.insert(v);
      } else if (k == "a") {
        m.a = v;
      }
    }
    for (auto& [k, v] : raw) {
      if (k == "x" || k == "a") continue;
      if (k == "t") m.t = parse_term_infer(v, sig_, schema);
      else if (k == "t1") m.t1 = parse_term_infer(v, sig_, schema);
      else if (k == "t2") m.t2 = parse_term_infer(v, sig_, schema);
      else if (k == "A") m.A = parse_formula_infer(v, sig_, schema);
      else if (k == "B") m.B = parse_formula_infer(v, sig_, schema);
      else if (k == "C") m.C = parse_formula_infer(v, sig_, schema);
      else if (k == "cutFormula") m.cut = parse_formula_infer(v, sig_, schema);
      else throw ParseError("unknown meta key: " + k, 0);
    }

    SToken seq = lex_.next();
    if (seq.kind != SToken::Str) throw ParseError("expected sequent string", seq.pos);
    Sequent conclusion = parse_sequent_infer(seq.text, sig_);

    std::vector<ProofPtr> prem;
    while (lex_.peek().kind == SToken::LParen) prem.push_back(node());
    expect(SToken::RParen, "expected ')' closing node");
    return mk_proof(*rule, std::move(m), std::move(conclusion), std::move(prem));
  }

 private:
  SLexer lex_;
  Signature& sig_;
};

}  // namespace

std::string write_proof(const Proof& p) {
  std::ostringstream os;
  write_rec(p, os, 0);
  os << "\n";
  return os.str();
}

ProofPtr read_proof(const std::string& text, Signature& sig) {
  ProofReader r(text, sig);
  return r.read();
}

}  // namespace descq
