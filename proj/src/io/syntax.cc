#include "elana/io/syntax.h"

#include <set>
#include <sstream>
#include <vector>

namespace elana::io {

ParseError::ParseError(int line, int column, const std::string& message)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) +
            ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { kLParen, kRParen, kColon, kDoubleColon, kSubsumed, kComma, kName, kEnd };

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  int line = 1;
  int column = 1;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::kEnd:
      return "end of input";
    case Tok::kName:
      return "'" + t.text + "'";
    default:
      return "'" + t.text + "'";
  }
}

class Lexer {
 public:
  Lexer(std::string_view text, int line, int column)
      : text_(text), line_(line), column_(column) {}

  Token next() {
    skip_space();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= text_.size()) return t;
    char c = text_[pos_];
    auto single = [&](Tok k, size_t len) {
      t.kind = k;
      t.text = std::string(text_.substr(pos_, len));
      advance(len);
      return t;
    };
    if (c == '(') return single(Tok::kLParen, 1);
    if (c == ')') return single(Tok::kRParen, 1);
    if (c == ',') return single(Tok::kComma, 1);
    if (c == ':') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == ':') return single(Tok::kDoubleColon, 2);
      return single(Tok::kColon, 1);
    }
    if (c == '<') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') return single(Tok::kSubsumed, 2);
      throw ParseError(line_, column_, "unexpected '<'");
    }
    size_t start = pos_;
    while (pos_ < text_.size() && !delimiter(text_[pos_])) advance(1);
    t.kind = Tok::kName;
    t.text = std::string(text_.substr(start, pos_ - start));
    return t;
  }

 private:
  static bool delimiter(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '(' || c == ')' ||
           c == ':' || c == ',' || c == '<';
  }
  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance(1);
      } else {
        break;
      }
    }
  }
  void advance(size_t n) {
    for (size_t i = 0; i < n && pos_ < text_.size(); ++i) {
      char c = text_[pos_++];
      if (c == '\n') {
        ++line_;
        column_ = 1;
      } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
        ++column_;
      }
    }
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_;
  int column_;
};

class Parser {
 public:
  Parser(std::string_view text, int line, int column, const Signature* sig)
      : lex_(text, line, column), sig_(sig) {
    cur_ = lex_.next();
  }

  std::set<std::string> used_atoms;
  std::set<std::string> used_roles;

  const Token& peek() const { return cur_; }
  Token take() {
    Token t = cur_;
    cur_ = lex_.next();
    return t;
  }
  Token expect(Tok kind, const std::string& what) {
    if (cur_.kind != kind) {
      throw ParseError(cur_.line, cur_.column,
                       "expected " + what + ", found " + describe(cur_));
    }
    return take();
  }
  void expect_end() {
    if (cur_.kind != Tok::kEnd) {
      throw ParseError(cur_.line, cur_.column, "unexpected " + describe(cur_));
    }
  }

  Concept term() {
    Token t = take();
    if (t.kind == Tok::kName) {
      if (t.text == "top") return Concept::Top();
      if (t.text == "bot") return Concept::Bottom();
      if (keyword(t.text)) {
        throw ParseError(t.line, t.column, "'" + t.text + "' needs parentheses");
      }
      used_atoms.insert(t.text);
      return Concept::Atom(t.text);
    }
    if (t.kind != Tok::kLParen) {
      throw ParseError(t.line, t.column, "expected a concept, found " + describe(t));
    }
    Token op = expect(Tok::kName, "and, some or btw");
    if (op.text == "and") {
      std::vector<Concept> parts;
      while (peek().kind != Tok::kRParen) {
        if (peek().kind == Tok::kEnd) expect(Tok::kRParen, "')'");
        parts.push_back(term());
      }
      if (parts.size() < 2) {
        throw ParseError(op.line, op.column, "and needs at least two operands");
      }
      take();
      Concept out = parts.back();
      for (size_t i = parts.size() - 1; i-- > 0;) out = Concept::And(parts[i], out);
      return out;
    }
    if (op.text == "some") {
      Token role = expect(Tok::kName, "a role name");
      if (keyword(role.text) || role.text == "top" || role.text == "bot") {
        throw ParseError(role.line, role.column, "reserved word used as a role");
      }
      used_roles.insert(role.text);
      Concept filler = term();
      expect(Tok::kRParen, "')'");
      return Concept::Exists(role.text, filler);
    }
    if (op.text == "btw") {
      Concept l = term();
      Concept r = term();
      expect(Tok::kRParen, "')'");
      Concept out = Concept::Between(l, r);
      if (sig_) {
        for (const Concept* side : {&l, &r}) {
          if (!sig_->is_natural(*side)) {
            throw ParseError(t.line, t.column,
                             "naturalness: " + to_sexpr(out) + " has non-natural operand " +
                                 to_sexpr(*side));
          }
        }
      }
      return out;
    }
    throw ParseError(op.line, op.column, "unknown constructor '" + op.text + "'");
  }

 private:
  static bool keyword(const std::string& s) {
    return s == "and" || s == "some" || s == "btw";
  }

  Lexer lex_;
  Token cur_;
  const Signature* sig_;
};

AnalogyAssertion assertion_body(Parser& p, const Signature& sig, Strength strength) {
  std::vector<std::pair<Concept, Token>> terms;
  for (int i = 0; i < 4; ++i) {
    if (i == 1 || i == 3) p.expect(Tok::kColon, "':'");
    if (i == 2) p.expect(Tok::kDoubleColon, "'::'");
    Token at = p.peek();
    Concept c = p.term();
    if (!sig.is_natural(c)) {
      throw ParseError(at.line, at.column,
                       "naturalness: analogy term " + to_sexpr(c) + " is not natural");
    }
    terms.emplace_back(c, at);
  }
  p.expect_end();
  return make_ana(terms[0].first, terms[1].first, terms[2].first, terms[3].first, strength);
}

Inclusion inclusion_body(Parser& p) {
  Concept lhs = p.term();
  p.expect(Tok::kSubsumed, "'<='");
  Concept rhs = p.term();
  p.expect_end();
  return {lhs, rhs};
}

}  // namespace

Concept parse_concept(std::string_view text, const Signature* signature) {
  Parser p(text, 1, 1, signature);
  Concept c = p.term();
  p.expect_end();
  return c;
}

TBox parse_tbox(std::string_view text) {
  TBox tbox;
  std::set<std::string> used_atoms, used_roles;
  int line_no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
      if (end == text.size()) break;
      continue;
    }
    size_t kw_end = line.find_first_of(" \t\r", first);
    if (kw_end == std::string_view::npos) kw_end = line.size();
    std::string kw(line.substr(first, kw_end - first));
    int col = static_cast<int>(kw_end) + 1;
    std::string_view rest = line.substr(kw_end);
    Parser p(rest, line_no, col, &tbox.signature());

    if (kw == "natural" || kw == "intra") {
      bool natural = kw == "natural";
      while (p.peek().kind != Tok::kEnd) {
        Token name = p.expect(Tok::kName, "a name");
        const auto& other = natural ? tbox.signature().intra_roles
                                    : tbox.signature().natural_atoms;
        if (other.count(name.text)) {
          throw ParseError(name.line, name.column,
                           "conflicting declarations for '" + name.text + "'");
        }
        const auto& used = natural ? used_atoms : used_roles;
        const auto& declared = natural ? tbox.signature().natural_atoms
                                       : tbox.signature().intra_roles;
        if (used.count(name.text) && !declared.count(name.text)) {
          throw ParseError(name.line, name.column,
                           "'" + name.text + "' declared after use");
        }
        if (natural) {
          tbox.declare_natural(name.text);
        } else {
          tbox.declare_intra(name.text);
        }
        if (p.peek().kind == Tok::kComma) p.take();
      }
    } else if (kw == "ci") {
      tbox.add(inclusion_body(p));
    } else if (kw == "ana" || kw == "sana") {
      tbox.add(assertion_body(p, tbox.signature(),
                              kw == "sana" ? Strength::kStrong : Strength::kStandard));
    } else if (kw == "nonempty") {
      Concept c = p.term();
      p.expect_end();
      tbox.add_nonempty(c);
    } else {
      throw ParseError(line_no, static_cast<int>(first) + 1,
                       "unknown directive '" + kw + "'");
    }
    used_atoms.insert(p.used_atoms.begin(), p.used_atoms.end());
    used_roles.insert(p.used_roles.begin(), p.used_roles.end());
    if (end == text.size()) break;
  }
  return tbox;
}

std::string print_tbox(const TBox& tbox) {
  std::ostringstream out;
  auto list = [&](const char* kw, const std::set<std::string>& names) {
    if (names.empty()) return;
    out << kw;
    bool first = true;
    for (const auto& n : names) {
      out << (first ? " " : ", ") << n;
      first = false;
    }
    out << "\n";
  };
  list("natural", tbox.signature().natural_atoms);
  list("intra", tbox.signature().intra_roles);
  for (const auto& ci : tbox.inclusions()) out << "ci " << to_string(ci) << "\n";
  for (const auto& a : tbox.analogies()) out << to_string(a) << "\n";
  for (const auto& c : tbox.nonempty()) out << "nonempty " << to_sexpr(c) << "\n";
  return out.str();
}

Axiom parse_axiom(std::string_view text, const Signature& signature) {
  size_t first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos) throw ParseError(1, 1, "empty axiom");
  size_t kw_end = text.find_first_of(" \t", first);
  std::string kw(text.substr(first, kw_end == std::string_view::npos
                                        ? std::string_view::npos
                                        : kw_end - first));
  if (kw_end != std::string_view::npos && (kw == "ana" || kw == "sana" || kw == "ci")) {
    Parser p(text.substr(kw_end), 1, static_cast<int>(kw_end) + 1, &signature);
    if (kw == "ci") return inclusion_body(p);
    return assertion_body(p, signature,
                          kw == "sana" ? Strength::kStrong : Strength::kStandard);
  }
  Parser p(text, 1, 1, &signature);
  return inclusion_body(p);
}

AnalogyAssertion parse_assertion(std::string_view text, const Signature& signature,
                                 Strength strength) {
  Parser p(text, 1, 1, &signature);
  return assertion_body(p, signature, strength);
}

std::string to_string(const Axiom& axiom) {
  if (const auto* ci = std::get_if<Inclusion>(&axiom)) return "ci " + to_string(*ci);
  return to_string(std::get<AnalogyAssertion>(axiom));
}

}  // namespace elana::io
