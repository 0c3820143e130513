#include "divisor_forge/script/parser.hpp"

#include <cctype>
#include <set>

namespace dforge::script {

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.text != b.text || a.operands.size() != b.operands.size() ||
      a.args.size() != b.args.size() || a.entries.size() != b.entries.size())
    return false;
  for (size_t i = 0; i < a.operands.size(); ++i)
    if (!(*a.operands[i] == *b.operands[i])) return false;
  for (size_t i = 0; i < a.args.size(); ++i)
    if (a.args[i].name != b.args[i].name || !(*a.args[i].value == *b.args[i].value)) return false;
  for (size_t i = 0; i < a.entries.size(); ++i)
    if (!(*a.entries[i].first == *b.entries[i].first) || !(*a.entries[i].second == *b.entries[i].second)) return false;
  return true;
}

namespace {

bool sameExprs(const std::vector<ExprPtr>& a, const std::vector<ExprPtr>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(*a[i] == *b[i])) return false;
  return true;
}

struct StatementEquals {
  bool operator()(const RingDecl& a, const RingDecl& b) const {
    return a.name == b.name && a.variables == b.variables && sameExprs(a.relations, b.relations) &&
           a.degrees == b.degrees;
  }
  bool operator()(const MapDecl& a, const MapDecl& b) const {
    return a.name == b.name && a.source == b.source && a.target == b.target && sameExprs(a.images, b.images);
  }
  bool operator()(const UseStmt& a, const UseStmt& b) const { return a.ring == b.ring; }
  bool operator()(const Binding& a, const Binding& b) const { return a.name == b.name && *a.value == *b.value; }
  bool operator()(const PrintStmt& a, const PrintStmt& b) const { return *a.value == *b.value; }
  bool operator()(const CheckStmt& a, const CheckStmt& b) const { return *a.value == *b.value; }
  template <class A, class B>
  bool operator()(const A&, const B&) const {
    return false;
  }
};

}  // namespace

bool operator==(const Statement& a, const Statement& b) { return std::visit(StatementEquals{}, a.body, b.body); }

bool operator==(const Script& a, const Script& b) { return a.statements == b.statements; }

namespace {

enum class Tok { Ident, Number, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  Loc loc;
};

const std::set<std::string> kKeywords = {"ring", "map", "use", "print", "check"};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skipSpaceAndComments();
      Token t;
      t.loc = {line_, col_};
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = Tok::Ident;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
          t.text += advance();
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        t.kind = Tok::Number;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) t.text += advance();
        if (pos_ < src_.size() && (std::isalpha(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.'))
          throw ParseError("malformed number", t.loc);
      } else if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
        t.kind = Tok::Punct;
        advance();
        advance();
        t.text = "->";
      } else if (std::string_view("()[]{},;:=+-*/^").find(c) != std::string_view::npos) {
        t.kind = Tok::Punct;
        t.text = std::string(1, advance());
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", t.loc);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skipSpaceAndComments() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '#' || (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/')) {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  std::string_view src_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Script script() {
    Script s;
    while (peek().kind != Tok::End) s.statements.push_back(statement());
    return s;
  }

 private:
  const Token& peek(size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  Token take() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool isPunct(const std::string& p, size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Punct && peek(ahead).text == p;
  }
  bool isWord(const std::string& w) const { return peek().kind == Tok::Ident && peek().text == w; }

  void expect(const std::string& p, const std::string& context) {
    if (!isPunct(p)) throw ParseError("expected '" + p + "' " + context + ", found " + describe(peek()), peek().loc);
    take();
  }
  std::string identifier(const std::string& what) {
    if (peek().kind != Tok::Ident || kKeywords.count(peek().text))
      throw ParseError("expected " + what + ", found " + describe(peek()), peek().loc);
    return take().text;
  }
  long integer(const std::string& what) {
    bool negative = false;
    if (isPunct("-")) {
      take();
      negative = true;
    }
    if (peek().kind != Tok::Number) throw ParseError("expected " + what + ", found " + describe(peek()), peek().loc);
    Token t = take();
    long v = 0;
    try {
      v = std::stol(t.text);
    } catch (const std::exception&) {
      throw ParseError("integer out of range", t.loc);
    }
    return negative ? -v : v;
  }

  Statement statement() {
    Statement s;
    s.loc = peek().loc;
    if (isWord("ring")) {
      s.body = ringDecl();
    } else if (isWord("map")) {
      s.body = mapDecl();
    } else if (isWord("use")) {
      take();
      s.body = UseStmt{identifier("a ring name")};
    } else if (isWord("print")) {
      take();
      s.body = PrintStmt{expr()};
    } else if (isWord("check")) {
      take();
      s.body = CheckStmt{expr()};
    } else if (peek().kind == Tok::Ident && isPunct("=", 1)) {
      std::string name = identifier("a name");
      take();
      s.body = Binding{name, expr()};
    } else {
      throw ParseError("expected a statement, found " + describe(peek()), peek().loc);
    }
    expect(";", "at the end of the statement");
    return s;
  }

  RingDecl ringDecl() {
    take();
    RingDecl d;
    d.name = identifier("a ring name");
    expect("=", "after the ring name");
    if (!isWord("QQ")) throw ParseError("expected 'QQ', found " + describe(peek()), peek().loc);
    take();
    expect("[", "after QQ");
    d.variables.push_back(identifier("a variable name"));
    while (isPunct(",")) {
      take();
      d.variables.push_back(identifier("a variable name"));
    }
    expect("]", "after the variables");
    if (isPunct("/")) {
      take();
      expect("(", "before the relations");
      d.relations.push_back(expr());
      while (isPunct(",")) {
        take();
        d.relations.push_back(expr());
      }
      expect(")", "after the relations");
    }
    if (isWord("degrees")) {
      take();
      expect("{", "to open the degree list");
      for (;;) {
        std::vector<long> deg;
        if (isPunct("{")) {
          take();
          deg.push_back(integer("a degree"));
          while (isPunct(",")) {
            take();
            deg.push_back(integer("a degree"));
          }
          expect("}", "to close a multidegree");
        } else {
          deg.push_back(integer("a degree"));
        }
        d.degrees.push_back(std::move(deg));
        if (!isPunct(",")) break;
        take();
      }
      expect("}", "to close the degree list");
    }
    return d;
  }

  MapDecl mapDecl() {
    take();
    MapDecl m;
    m.name = identifier("a map name");
    expect("=", "after the map name");
    m.source = identifier("the source ring");
    expect("->", "between source and target");
    m.target = identifier("the target ring");
    expect("(", "before the images");
    if (!isPunct(")")) {
      m.images.push_back(expr());
      while (isPunct(",")) {
        take();
        m.images.push_back(expr());
      }
    }
    expect(")", "after the images");
    return m;
  }

  static ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

  static ExprPtr binary(const Token& op, ExprPtr lhs, ExprPtr rhs) {
    Expr e;
    e.kind = Expr::Kind::Binary;
    e.loc = op.loc;
    e.text = op.text;
    e.operands = {std::move(lhs), std::move(rhs)};
    return node(std::move(e));
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (isPunct("+") || isPunct("-")) {
      Token op = take();
      lhs = binary(op, lhs, term());
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    while (isPunct("*") || isPunct("/")) {
      Token op = take();
      lhs = binary(op, lhs, unary());
    }
    return lhs;
  }

  ExprPtr unary() {
    if (isPunct("-")) {
      Expr e;
      e.kind = Expr::Kind::Negate;
      e.loc = take().loc;
      e.operands = {unary()};
      return node(std::move(e));
    }
    ExprPtr base = primary();
    if (isPunct("^")) {
      Token op = take();
      return binary(op, base, unary());
    }
    return base;
  }

  ExprPtr primary() {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      Expr e;
      e.kind = Expr::Kind::Number;
      e.loc = t.loc;
      e.text = take().text;
      return node(std::move(e));
    }
    if (isPunct("(")) {
      take();
      ExprPtr inner = expr();
      expect(")", "to close the parenthesis");
      return inner;
    }
    if (t.kind == Tok::Ident && !kKeywords.count(t.text)) {
      Token name = take();
      if (name.text == "divisor" && isPunct("{")) return divisorLiteral(name);
      if (isPunct("(")) return call(name);
      Expr e;
      e.kind = Expr::Kind::Name;
      e.loc = name.loc;
      e.text = name.text;
      return node(std::move(e));
    }
    throw ParseError("expected an expression, found " + describe(t), t.loc);
  }

  ExprPtr call(const Token& name) {
    Expr e;
    e.kind = Expr::Kind::Call;
    e.loc = name.loc;
    e.text = name.text;
    take();
    if (!isPunct(")")) {
      for (;;) {
        Arg a;
        if (peek().kind == Tok::Ident && isPunct("=", 1)) {
          a.name = take().text;
          take();
        } else if (!e.args.empty() && !e.args.back().name.empty()) {
          throw ParseError("positional argument after a named one", peek().loc);
        }
        a.value = expr();
        e.args.push_back(std::move(a));
        if (!isPunct(",")) break;
        take();
      }
    }
    expect(")", "to close the argument list of " + name.text);
    return node(std::move(e));
  }

  ExprPtr divisorLiteral(const Token& name) {
    Expr e;
    e.kind = Expr::Kind::DivisorLiteral;
    e.loc = name.loc;
    e.text = "divisor";
    take();
    for (;;) {
      ExprPtr coeff = expr();
      expect(":", "between a coefficient and its prime");
      ExprPtr prime = expr();
      e.entries.emplace_back(std::move(coeff), std::move(prime));
      if (!isPunct(",")) break;
      take();
    }
    expect("}", "to close the divisor");
    return node(std::move(e));
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
};

// Binding strength: 1 additive, 2 multiplicative, 3 unary minus, 4 power, 5 atoms.
int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Binary:
      if (e.text == "+" || e.text == "-") return 1;
      if (e.text == "*" || e.text == "/") return 2;
      return 4;
    case Expr::Kind::Negate:
      return 3;
    default:
      return 5;
  }
}

std::string print(const Expr& e, int context) {
  std::string s;
  switch (e.kind) {
    case Expr::Kind::Number:
    case Expr::Kind::Name:
      s = e.text;
      break;
    case Expr::Kind::Negate:
      s = "-" + print(*e.operands[0], 3);
      break;
    case Expr::Kind::Binary:
      if (e.text == "+" || e.text == "-")
        s = print(*e.operands[0], 1) + " " + e.text + " " + print(*e.operands[1], 2);
      else if (e.text == "^")
        s = print(*e.operands[0], 5) + "^" + print(*e.operands[1], 3);
      else
        s = print(*e.operands[0], 2) + e.text + print(*e.operands[1], 3);
      break;
    case Expr::Kind::Call: {
      s = e.text + "(";
      for (size_t i = 0; i < e.args.size(); ++i) {
        if (i) s += ", ";
        if (!e.args[i].name.empty()) s += e.args[i].name + "=";
        s += print(*e.args[i].value, 1);
      }
      s += ")";
      break;
    }
    case Expr::Kind::DivisorLiteral: {
      s = "divisor{";
      for (size_t i = 0; i < e.entries.size(); ++i) {
        if (i) s += ", ";
        s += print(*e.entries[i].first, 1) + ": " + print(*e.entries[i].second, 1);
      }
      s += "}";
      break;
    }
  }
  return precedence(e) < context ? "(" + s + ")" : s;
}

std::string join(const std::vector<ExprPtr>& xs) {
  std::string s;
  for (size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + print(*xs[i], 1);
  return s;
}

struct StatementPrinter {
  std::string operator()(const RingDecl& d) const {
    std::string s = "ring " + d.name + " = QQ[";
    for (size_t i = 0; i < d.variables.size(); ++i) s += (i ? ", " : "") + d.variables[i];
    s += "]";
    if (!d.relations.empty()) s += " / (" + join(d.relations) + ")";
    if (!d.degrees.empty()) {
      s += " degrees {";
      for (size_t i = 0; i < d.degrees.size(); ++i) {
        s += i ? ", {" : "{";
        for (size_t k = 0; k < d.degrees[i].size(); ++k) s += (k ? ", " : "") + std::to_string(d.degrees[i][k]);
        s += "}";
      }
      s += "}";
    }
    return s + ";";
  }
  std::string operator()(const MapDecl& m) const {
    return "map " + m.name + " = " + m.source + " -> " + m.target + " (" + join(m.images) + ");";
  }
  std::string operator()(const UseStmt& u) const { return "use " + u.ring + ";"; }
  std::string operator()(const Binding& b) const { return b.name + " = " + print(*b.value, 1) + ";"; }
  std::string operator()(const PrintStmt& p) const { return "print " + print(*p.value, 1) + ";"; }
  std::string operator()(const CheckStmt& c) const { return "check " + print(*c.value, 1) + ";"; }
};

}  // namespace

Script parseScript(std::string_view text) { return Parser(Lexer(text).run()).script(); }

std::string printExpr(const Expr& expr) { return print(expr, 1); }

std::string printStatement(const Statement& statement) { return std::visit(StatementPrinter{}, statement.body); }

std::string printScript(const Script& script) {
  std::string out;
  for (auto& s : script.statements) out += printStatement(s) + "\n";
  return out;
}

std::string formatDiagnostic(std::string_view source, std::string_view sourceName, Loc loc,
                             std::string_view message) {
  std::string out = std::string(sourceName) + ":" + std::to_string(loc.line) + ":" + std::to_string(loc.column) +
                    ": error: " + std::string(message) + "\n";
  size_t start = 0;
  for (int line = 1; line < loc.line && start != std::string_view::npos; ++line) {
    start = source.find('\n', start);
    if (start != std::string_view::npos) ++start;
  }
  if (start == std::string_view::npos || start > source.size()) return out;
  size_t end = source.find('\n', start);
  std::string_view text = source.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
  out += "  " + std::string(text) + "\n";
  out += "  " + std::string(static_cast<size_t>(std::max(loc.column - 1, 0)), ' ') + "^\n";
  return out;
}

}  // namespace dforge::script
