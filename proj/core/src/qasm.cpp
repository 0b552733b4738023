#include "atomique/qasm.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>

namespace atomique {

namespace {

constexpr double kPi = std::numbers::pi;

enum class Tok { Ident, Number, String, Symbol, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  double number = 0.0;
  std::size_t line = 1;
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skipSpaceAndComments();
      if (pos_ >= src_.size()) {
        out.push_back(Token{Tok::End, "", 0.0, line_});
        return out;
      }
      const char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        const auto start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                src_[pos_] == '_')) {
          ++pos_;
        }
        out.push_back(Token{Tok::Ident,
                            std::string(src_.substr(start, pos_ - start)),
                            0.0, line_});
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        const auto start = pos_;
        while (pos_ < src_.size() &&
               (std::isdigit(static_cast<unsigned char>(src_[pos_])) ||
                src_[pos_] == '.')) {
          ++pos_;
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
          ++pos_;
          if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
            ++pos_;
          }
          while (pos_ < src_.size() &&
                 std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            ++pos_;
          }
        }
        const std::string text(src_.substr(start, pos_ - start));
        double value = 0.0;
        try {
          std::size_t used = 0;
          value = std::stod(text, &used);
          if (used != text.size()) {
            throw std::invalid_argument(text);
          }
        } catch (const std::exception&) {
          throw QasmError(line_, "malformed number '" + text + "'");
        }
        out.push_back(Token{Tok::Number, text, value, line_});
      } else if (c == '"') {
        const auto start = ++pos_;
        while (pos_ < src_.size() && src_[pos_] != '"') {
          if (src_[pos_] == '\n') {
            ++line_;
          }
          ++pos_;
        }
        if (pos_ >= src_.size()) {
          throw QasmError(line_, "unterminated string");
        }
        out.push_back(Token{Tok::String,
                            std::string(src_.substr(start, pos_ - start)),
                            0.0, line_});
        ++pos_;
      } else if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
        out.push_back(Token{Tok::Symbol, "->", 0.0, line_});
        pos_ += 2;
      } else if (std::string_view("()[],;+-*/^{}").find(c) !=
                 std::string_view::npos) {
        out.push_back(Token{Tok::Symbol, std::string(1, c), 0.0, line_});
        ++pos_;
      } else {
        throw QasmError(line_, std::string("unexpected character '") + c +
                                   "'");
      }
    }
  }

private:
  void skipSpaceAndComments() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') {
          ++pos_;
        }
      } else {
        return;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

struct GateSpec {
  std::size_t n_params;
  std::size_t n_qubits;
};

const std::map<std::string, GateSpec, std::less<>>& gateTable() {
  static const std::map<std::string, GateSpec, std::less<>> table{
      {"u3", {3, 1}},  {"u", {3, 1}},   {"U", {3, 1}},   {"u2", {2, 1}},
      {"u1", {1, 1}},  {"rz", {1, 1}},  {"rx", {1, 1}},  {"ry", {1, 1}},
      {"h", {0, 1}},   {"x", {0, 1}},   {"y", {0, 1}},   {"z", {0, 1}},
      {"s", {0, 1}},   {"t", {0, 1}},   {"sdg", {0, 1}}, {"tdg", {0, 1}},
      {"id", {0, 1}},  {"cx", {0, 2}},  {"CX", {0, 2}},  {"cz", {0, 2}},
      {"swap", {0, 2}}};
  return table;
}

class Parser {
public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ParsedQasm run() {
    while (peek().kind != Tok::End) {
      statement();
    }
    if (!reg_) {
      throw QasmError(peek().line, "no qreg declared");
    }
    return std::move(result_);
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  bool isSymbol(std::string_view s) const {
    return peek().kind == Tok::Symbol && peek().text == s;
  }

  void expectSymbol(std::string_view s) {
    if (!isSymbol(s)) {
      throw QasmError(peek().line, "expected '" + std::string(s) +
                                       "' but found '" + peek().text + "'");
    }
    ++pos_;
  }

  std::string expectIdent() {
    if (peek().kind != Tok::Ident) {
      throw QasmError(peek().line,
                      "expected identifier but found '" + peek().text + "'");
    }
    return next().text;
  }

  std::size_t expectIndex() {
    if (peek().kind != Tok::Number) {
      throw QasmError(peek().line, "expected integer index");
    }
    const auto& t = next();
    if (t.number < 0 || std::floor(t.number) != t.number) {
      throw QasmError(t.line, "index must be a non-negative integer");
    }
    return static_cast<std::size_t>(t.number);
  }

  void statement() {
    const Token& head = peek();
    if (head.kind != Tok::Ident) {
      throw QasmError(head.line, "unexpected '" + head.text + "'");
    }
    const std::string word = next().text;
    if (word == "OPENQASM") {
      if (peek().kind != Tok::Number) {
        throw QasmError(head.line, "expected version after OPENQASM");
      }
      if (next().number >= 3.0) {
        throw QasmError(head.line, "only OPENQASM 2.x is supported");
      }
      expectSymbol(";");
    } else if (word == "include") {
      if (peek().kind != Tok::String) {
        throw QasmError(head.line, "expected file name after include");
      }
      ++pos_;
      expectSymbol(";");
    } else if (word == "qreg") {
      const auto name = expectIdent();
      expectSymbol("[");
      const auto size = expectIndex();
      expectSymbol("]");
      expectSymbol(";");
      if (reg_) {
        throw QasmError(head.line, "only a single qreg is supported");
      }
      reg_ = name;
      result_.circuit.n_qubits = size;
    } else if (word == "creg") {
      expectIdent();
      expectSymbol("[");
      expectIndex();
      expectSymbol("]");
      expectSymbol(";");
    } else if (word == "measure") {
      operand(head.line);
      expectSymbol("->");
      expectIdent();
      if (isSymbol("[")) {
        ++pos_;
        expectIndex();
        expectSymbol("]");
      }
      expectSymbol(";");
      result_.warnings.push_back("line " + std::to_string(head.line) +
                                 ": measure ignored");
    } else if (word == "barrier") {
      std::vector<Qubit> qubits;
      do {
        if (isSymbol(",")) {
          ++pos_;
        }
        auto op = operand(head.line);
        qubits.insert(qubits.end(), op.begin(), op.end());
      } while (isSymbol(","));
      expectSymbol(";");
      result_.circuit.barrier(std::move(qubits));
    } else if (word == "gate" || word == "opaque" || word == "if" ||
               word == "reset") {
      throw QasmError(head.line, "unsupported statement '" + word + "'");
    } else {
      gateStatement(word, head.line);
    }
  }

  std::vector<Qubit> operand(std::size_t line) {
    const auto name = expectIdent();
    if (!reg_) {
      throw QasmError(line, "qreg must be declared before use");
    }
    if (name != *reg_) {
      throw QasmError(line, "unknown register '" + name + "'");
    }
    const auto n = result_.circuit.n_qubits;
    if (isSymbol("[")) {
      ++pos_;
      const auto idx = expectIndex();
      expectSymbol("]");
      if (idx >= n) {
        throw QasmError(line, "qubit index " + std::to_string(idx) +
                                  " out of register bounds (size " +
                                  std::to_string(n) + ")");
      }
      return {static_cast<Qubit>(idx)};
    }
    std::vector<Qubit> all(n);
    for (std::size_t i = 0; i < n; ++i) {
      all[i] = static_cast<Qubit>(i);
    }
    return all;
  }

  void gateStatement(const std::string& name, std::size_t line) {
    const auto& table = gateTable();
    const auto it = table.find(name);
    if (it == table.end()) {
      throw QasmError(line, "unsupported gate '" + name + "'");
    }
    const auto spec = it->second;
    std::vector<double> params;
    if (isSymbol("(")) {
      ++pos_;
      if (!isSymbol(")")) {
        params.push_back(expression());
        while (isSymbol(",")) {
          ++pos_;
          params.push_back(expression());
        }
      }
      expectSymbol(")");
    }
    if (params.size() != spec.n_params) {
      throw QasmError(line, "gate '" + name + "' expects " +
                                std::to_string(spec.n_params) +
                                " parameter(s)");
    }
    std::vector<std::vector<Qubit>> args;
    args.push_back(operand(line));
    while (isSymbol(",")) {
      ++pos_;
      args.push_back(operand(line));
    }
    expectSymbol(";");
    if (args.size() != spec.n_qubits) {
      throw QasmError(line, "gate '" + name + "' expects " +
                                std::to_string(spec.n_qubits) +
                                " qubit argument(s)");
    }
    auto& c = result_.circuit;
    if (spec.n_qubits == 1) {
      for (auto q : args[0]) {
        emitOneQubit(name, params, q);
      }
      return;
    }
    if (args[0].size() != 1 || args[1].size() != 1) {
      throw QasmError(line, "register broadcast is not supported for '" +
                                name + "'");
    }
    const Qubit a = args[0][0];
    const Qubit b = args[1][0];
    if (a == b) {
      throw QasmError(line, "two-qubit gate on identical qubits");
    }
    if (name == "cz") {
      c.cz(a, b);
    } else if (name == "swap") {
      c.swap(a, b);
    } else {
      c.cx(a, b);
    }
  }

  void emitOneQubit(const std::string& name, const std::vector<double>& p,
                    Qubit q) {
    auto& c = result_.circuit;
    if (name == "u3" || name == "u" || name == "U") {
      c.u(q, p[0], p[1], p[2], name);
    } else if (name == "u2") {
      c.u(q, kPi / 2, p[0], p[1], name);
    } else if (name == "u1" || name == "rz") {
      c.u(q, 0.0, 0.0, p[0], name);
    } else if (name == "rx") {
      c.u(q, p[0], -kPi / 2, kPi / 2, name);
    } else if (name == "ry") {
      c.u(q, p[0], 0.0, 0.0, name);
    } else if (name == "h") {
      c.h(q);
    } else if (name == "x") {
      c.x(q);
    } else if (name == "y") {
      c.u(q, kPi, kPi / 2, kPi / 2, name);
    } else if (name == "z") {
      c.u(q, 0.0, 0.0, kPi, name);
    } else if (name == "s") {
      c.u(q, 0.0, 0.0, kPi / 2, name);
    } else if (name == "sdg") {
      c.u(q, 0.0, 0.0, -kPi / 2, name);
    } else if (name == "t") {
      c.u(q, 0.0, 0.0, kPi / 4, name);
    } else if (name == "tdg") {
      c.u(q, 0.0, 0.0, -kPi / 4, name);
    } else if (name == "id") {
      c.u(q, 0.0, 0.0, 0.0, name);
    }
  }

  // expression := term (('+'|'-') term)*
  double expression() {
    double v = term();
    while (isSymbol("+") || isSymbol("-")) {
      const bool plus = next().text == "+";
      const double rhs = term();
      v = plus ? v + rhs : v - rhs;
    }
    return v;
  }

  double term() {
    double v = power();
    while (isSymbol("*") || isSymbol("/")) {
      const bool mul = next().text == "*";
      const double rhs = power();
      v = mul ? v * rhs : v / rhs;
    }
    return v;
  }

  double power() {
    const double base = unary();
    if (isSymbol("^")) {
      ++pos_;
      return std::pow(base, power());
    }
    return base;
  }

  double unary() {
    if (isSymbol("-")) {
      ++pos_;
      return -unary();
    }
    if (isSymbol("+")) {
      ++pos_;
      return unary();
    }
    return primary();
  }

  double primary() {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      ++pos_;
      return t.number;
    }
    if (isSymbol("(")) {
      ++pos_;
      const double v = expression();
      expectSymbol(")");
      return v;
    }
    if (t.kind == Tok::Ident) {
      const std::string id = next().text;
      if (id == "pi") {
        return kPi;
      }
      static const std::map<std::string, double (*)(double), std::less<>>
          fns{{"sin", [](double x) { return std::sin(x); }},
              {"cos", [](double x) { return std::cos(x); }},
              {"tan", [](double x) { return std::tan(x); }},
              {"exp", [](double x) { return std::exp(x); }},
              {"ln", [](double x) { return std::log(x); }},
              {"sqrt", [](double x) { return std::sqrt(x); }}};
      const auto f = fns.find(id);
      if (f == fns.end()) {
        throw QasmError(t.line, "unknown identifier '" + id +
                                    "' in expression");
      }
      expectSymbol("(");
      const double arg = expression();
      expectSymbol(")");
      return f->second(arg);
    }
    throw QasmError(t.line, "malformed expression near '" + t.text + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::optional<std::string> reg_;
  ParsedQasm result_;
};

} // namespace

ParsedQasm parseQasmWithWarnings(std::string_view text) {
  return Parser(Lexer(text).run()).run();
}

Circuit parseQasm(std::string_view text) {
  return parseQasmWithWarnings(text).circuit;
}

Circuit readQasmFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot read '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parseQasm(ss.str());
}

} // namespace atomique
