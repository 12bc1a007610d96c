#include "descq/parser.hpp"

#include <cctype>
#include <optional>

namespace descq {

namespace {

enum class Tok {
  Ident, LParen, RParen, LBracket, RBracket, Comma, Dot,
  Tilde, Arrow, Amp, Pipe, Iff, Eq, Neq, EBang, Forall, Exists,
  Turnstile, End
};

struct Token {
  Tok kind;
  std::string text;
  size_t pos;
};

bool starts_with(const std::string& s, size_t i, const char* pat) {
  for (size_t j = 0; pat[j]; ++j)
    if (i + j >= s.size() || s[i + j] != pat[j]) return false;
  return true;
}

class Lexer {
 public:
  explicit Lexer(const std::string& text) : s_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    size_t start = i_;
    if (i_ >= s_.size()) {
      tok_ = {Tok::End, "", start};
      return;
    }
    char c = s_[i_];
    auto emit = [&](Tok k, size_t len) {
      tok_ = {k, s_.substr(start, len), start};
      i_ += len;
    };
    // Unicode aliases.
    if (starts_with(s_, i_, "\xC2\xAC")) return emit(Tok::Tilde, 2);        // ¬
    if (starts_with(s_, i_, "\xE2\x86\x92")) return emit(Tok::Arrow, 3);    // →
    if (starts_with(s_, i_, "\xE2\x86\x94")) return emit(Tok::Iff, 3);      // ↔
    if (starts_with(s_, i_, "\xE2\x88\xA7")) return emit(Tok::Amp, 3);      // ∧
    if (starts_with(s_, i_, "\xE2\x88\xA8")) return emit(Tok::Pipe, 3);     // ∨
    if (starts_with(s_, i_, "\xE2\x89\xA0")) return emit(Tok::Neq, 3);      // ≠
    if (starts_with(s_, i_, "\xE2\x88\x80")) return emit(Tok::Forall, 3);   // ∀
    if (starts_with(s_, i_, "\xE2\x88\x83")) {                              // ∃ / ∃!
      if (i_ + 3 < s_.size() && s_[i_ + 3] == '!') return emit(Tok::EBang, 4);
      return emit(Tok::Exists, 3);
    }
    switch (c) {
      case '(': return emit(Tok::LParen, 1);
      case ')': return emit(Tok::RParen, 1);
      case '[': return emit(Tok::LBracket, 1);
      case ']': return emit(Tok::RBracket, 1);
      case ',': return emit(Tok::Comma, 1);
      case '.': return emit(Tok::Dot, 1);
      case '~': return emit(Tok::Tilde, 1);
      case '&': return emit(Tok::Amp, 1);
      case '=': return emit(Tok::Eq, 1);
      case '!':
        if (starts_with(s_, i_, "!=")) return emit(Tok::Neq, 2);
        throw ParseError("stray '!'", start);
      case '-':
        if (starts_with(s_, i_, "->")) return emit(Tok::Arrow, 2);
        throw ParseError("stray '-'", start);
      case '<':
        if (starts_with(s_, i_, "<->")) return emit(Tok::Iff, 3);
        throw ParseError("stray '<'", start);
      case '|':
        if (starts_with(s_, i_, "|-")) return emit(Tok::Turnstile, 2);
        return emit(Tok::Pipe, 1);
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i_ + 1;
      while (j < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
        ++j;
      std::string id = s_.substr(i_, j - i_);
      if (id == "forall") return emit(Tok::Forall, id.size());
      if (id == "exists") return emit(Tok::Exists, id.size());
      if (id == "E" && j < s_.size() && s_[j] == '!') return emit(Tok::EBang, id.size() + 1);
      tok_ = {Tok::Ident, id, start};
      i_ = j;
      return;
    }
    throw ParseError("lexical error", start);
  }

  const std::string& s_;
  size_t i_ = 0;
  Token tok_{Tok::End, "", 0};
};

// Symbol resolution. Strict mode checks against a fixed signature; inferring
// mode grows one.
class Symbols {
 public:
  Symbols(const Signature* fixed, Signature* grow) : fixed_(fixed), grow_(grow) {}

  void predicate(const std::string& name, int arity, size_t pos) {
    if (fixed_) {
      auto it = fixed_->predicates.find(name);
      if (it == fixed_->predicates.end())
        throw ParseError("unbound-symbol: predicate " + name, pos);
      if (it->second != arity)
        throw ParseError("arity mismatch for predicate " + name, pos);
      return;
    }
    if (grow_->functions.count(name) || grow_->constants.count(name))
      throw ParseError("symbol used both as predicate and term: " + name, pos);
    auto [it, fresh] = grow_->predicates.emplace(name, arity);
    if (!fresh && it->second != arity)
      throw ParseError("arity mismatch for predicate " + name, pos);
  }

  void function(const std::string& name, int arity, size_t pos) {
    if (fixed_) {
      auto it = fixed_->functions.find(name);
      if (it == fixed_->functions.end())
        throw ParseError("unbound-symbol: function " + name, pos);
      if (it->second != arity)
        throw ParseError("arity mismatch for function " + name, pos);
      return;
    }
    if (grow_->predicates.count(name) || grow_->constants.count(name))
      throw ParseError("symbol kind mismatch: " + name, pos);
    auto [it, fresh] = grow_->functions.emplace(name, arity);
    if (!fresh && it->second != arity)
      throw ParseError("arity mismatch for function " + name, pos);
  }

  void constant(const std::string& name, size_t pos) {
    if (fixed_) {
      if (!fixed_->constants.count(name))
        throw ParseError("unbound-symbol: constant " + name, pos);
      return;
    }
    if (grow_->predicates.count(name) || grow_->functions.count(name))
      throw ParseError("symbol kind mismatch: " + name, pos);
    grow_->constants.insert(name);
  }

 private:
  const Signature* fixed_;
  Signature* grow_;
};

bool reserved(const std::string& id) {
  return id == "I" || id == "E" || id == "forall" || id == "exists";
}

class Parser {
 public:
  Parser(const std::string& text, Symbols syms,
         const std::set<std::string>* extra_vars = nullptr)
      : lex_(text), syms_(syms), extra_vars_(extra_vars) {}

  Formula formula() {
    Formula f = parse_iff();
    expect(Tok::End, "trailing input after formula");
    return f;
  }

  Term term() {
    Term t = parse_term();
    expect(Tok::End, "trailing input after term");
    return t;
  }

  Sequent sequent() {
    Sequent q;
    if (lex_.peek().kind != Tok::Turnstile) q.ante = formula_list();
    expect(Tok::Turnstile, "expected '|-'");
    if (lex_.peek().kind != Tok::End) q.succ = formula_list();
    expect(Tok::End, "trailing input after sequent");
    return q;
  }

 private:
  std::vector<Formula> formula_list() {
    std::vector<Formula> out;
    out.push_back(parse_iff());
    while (lex_.peek().kind == Tok::Comma) {
      lex_.next();
      out.push_back(parse_iff());
    }
    return out;
  }

  void expect(Tok k, const char* msg) {
    if (lex_.peek().kind != k) throw ParseError(msg, lex_.peek().pos);
    if (k != Tok::End) lex_.next();
  }

  Formula parse_iff() {
    Formula f = parse_imp();
    while (lex_.peek().kind == Tok::Iff) {
      lex_.next();
      f = Formula::iff(std::move(f), parse_imp());
    }
    return f;
  }

  Formula parse_imp() {
    Formula f = parse_or();
    if (lex_.peek().kind == Tok::Arrow) {
      lex_.next();
      return Formula::imp(std::move(f), parse_imp());
    }
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (lex_.peek().kind == Tok::Pipe) {
      lex_.next();
      f = Formula::f_or(std::move(f), parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (lex_.peek().kind == Tok::Amp) {
      lex_.next();
      f = Formula::f_and(std::move(f), parse_unary());
    }
    return f;
  }

  std::string bound_ident() {
    Token t = lex_.next();
    if (t.kind != Tok::Ident) throw ParseError("malformed-quantifier: expected variable", t.pos);
    if (reserved(t.text)) throw ParseError("reserved identifier: " + t.text, t.pos);
    return t.text;
  }

  Formula parse_unary() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::Tilde:
        lex_.next();
        return Formula::f_not(parse_unary());
      case Tok::Forall: {
        lex_.next();
        std::string x = bound_ident();
        expect(Tok::Dot, "malformed-quantifier: expected '.'");
        push_bound(x);
        Formula body = parse_iff();
        pop_bound(x);
        return Formula::forall(x, std::move(body));
      }
      case Tok::Exists: {
        lex_.next();
        std::string x = bound_ident();
        expect(Tok::Dot, "malformed-quantifier: expected '.'");
        push_bound(x);
        Formula body = parse_iff();
        pop_bound(x);
        return Formula::exists(x, std::move(body));
      }
      case Tok::Ident:
        if (t.text == "I") {
          lex_.next();
          std::string x = bound_ident();
          expect(Tok::LBracket, "malformed-quantifier: expected '['");
          push_bound(x);
          Formula a = parse_iff();
          expect(Tok::Comma, "malformed-quantifier: expected ','");
          Formula b = parse_iff();
          pop_bound(x);
          expect(Tok::RBracket, "malformed-quantifier: expected ']'");
          return Formula::iq(x, std::move(a), std::move(b));
        }
        return parse_atom();
      case Tok::LParen: {
        lex_.next();
        Formula f = parse_iff();
        expect(Tok::RParen, "expected ')'");
        // A parenthesized formula may still be the left side of an equation
        // only if it were a term; terms are never parenthesized, so done.
        return f;
      }
      case Tok::EBang: {
        lex_.next();
        return Formula::exists_bang(parse_term());
      }
      default:
        throw ParseError("expected formula", t.pos);
    }
  }

  // name [args] already consumed decides predicate vs equation.
  Formula parse_atom() {
    Token name = lex_.next();
    if (name.kind != Tok::Ident) throw ParseError("expected identifier", name.pos);
    std::vector<Term> args;
    bool had_args = false;
    if (lex_.peek().kind == Tok::LParen) {
      had_args = true;
      lex_.next();
      args.push_back(parse_term());
      while (lex_.peek().kind == Tok::Comma) {
        lex_.next();
        args.push_back(parse_term());
      }
      expect(Tok::RParen, "expected ')'");
    }
    Tok k = lex_.peek().kind;
    if (k == Tok::Eq || k == Tok::Neq) {
      lex_.next();
      Term lhs = finish_term(name, std::move(args), had_args);
      Term rhs = parse_term();
      Formula eq = Formula::eq(std::move(lhs), std::move(rhs));
      return k == Tok::Eq ? eq : Formula::f_not(std::move(eq));
    }
    if (!had_args)
      throw ParseError("expected formula (bare identifier; 0-ary predicates are not allowed)",
                       name.pos);
    syms_.predicate(name.text, static_cast<int>(args.size()), name.pos);
    return Formula::pred(name.text, std::move(args));
  }

  Term parse_term() {
    Token name = lex_.next();
    if (name.kind != Tok::Ident) throw ParseError("expected term", name.pos);
    if (reserved(name.text)) throw ParseError("reserved identifier: " + name.text, name.pos);
    std::vector<Term> args;
    bool had_args = false;
    if (lex_.peek().kind == Tok::LParen) {
      had_args = true;
      lex_.next();
      args.push_back(parse_term());
      while (lex_.peek().kind == Tok::Comma) {
        lex_.next();
        args.push_back(parse_term());
      }
      expect(Tok::RParen, "expected ')'");
    }
    return finish_term(name, std::move(args), had_args);
  }

  Term finish_term(const Token& name, std::vector<Term> args, bool had_args) {
    if (reserved(name.text)) throw ParseError("reserved identifier: " + name.text, name.pos);
    if (had_args) {
      if (is_bound(name.text))
        throw ParseError("bound variable used as function: " + name.text, name.pos);
      syms_.function(name.text, static_cast<int>(args.size()), name.pos);
      return Term::app(name.text, std::move(args));
    }
    if (is_bound(name.text)) return Term::var(name.text);
    syms_.constant(name.text, name.pos);
    return Term::cst(name.text);
  }

  void push_bound(const std::string& x) { bound_.push_back(x); }
  void pop_bound(const std::string& x) {
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it) {
      if (*it == x) {
        bound_.erase(std::next(it).base());
        return;
      }
    }
  }
  bool is_bound(const std::string& x) const {
    for (const auto& b : bound_)
      if (b == x) return true;
    return extra_vars_ && extra_vars_->count(x);
  }

  Lexer lex_;
  Symbols syms_;
  const std::set<std::string>* extra_vars_;
  std::vector<std::string> bound_;
};

}  // namespace

Formula parse_formula(const std::string& text, const Signature& sig) {
  return Parser(text, Symbols(&sig, nullptr)).formula();
}

Term parse_term(const std::string& text, const Signature& sig) {
  return Parser(text, Symbols(&sig, nullptr)).term();
}

Sequent parse_sequent(const std::string& text, const Signature& sig) {
  return Parser(text, Symbols(&sig, nullptr)).sequent();
}

Formula parse_formula_infer(const std::string& text, Signature& sig) {
  return Parser(text, Symbols(nullptr, &sig)).formula();
}

Sequent parse_sequent_infer(const std::string& text, Signature& sig) {
  return Parser(text, Symbols(nullptr, &sig)).sequent();
}

Formula parse_formula_infer(const std::string& text, Signature& sig,
                            const std::set<std::string>& free_vars) {
  return Parser(text, Symbols(nullptr, &sig), &free_vars).formula();
}

Term parse_term_infer(const std::string& text, Signature& sig,
                      const std::set<std::string>& free_vars) {
  return Parser(text, Symbols(nullptr, &sig), &free_vars).term();
}

std::string to_string(const Sequent& s) {
  std::string out;
  for (size_t i = 0; i < s.ante.size(); ++i) {
    if (i) out += ", ";
    out += to_string(s.ante[i]);
  }
  out += s.ante.empty() ? "|-" : " |-";
  for (size_t i = 0; i < s.succ.size(); ++i) {
    out += i ? ", " : " ";
    out += to_string(s.succ[i]);
  }
  return out;
}

}  // namespace descq
