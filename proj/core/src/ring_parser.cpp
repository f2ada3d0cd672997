#include "conlap/ring_parser.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <vector>

#include "conlap/facet_io.hpp"
#include "conlap/families.hpp"

namespace conlap {
namespace {

enum class Tok { kIdent, kInt, kString, kPunct, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char ch = src[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::size_t s = i;
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
      out.push_back({Tok::kIdent, std::string(src.substr(s, i - s)), s + 1});
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::size_t s = i;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Tok::kInt, std::string(src.substr(s, i - s)), s + 1});
    } else if (ch == '"') {
      const std::size_t s = i++;
      while (i < src.size() && src[i] != '"') ++i;
      if (i == src.size()) throw RingSyntaxError(s + 1, "unterminated string");
      out.push_back({Tok::kString, std::string(src.substr(s + 1, i - s - 1)), s + 1});
      ++i;
    } else if (std::string_view("=;+-*(){},").find(ch) != std::string_view::npos) {
      out.push_back({Tok::kPunct, std::string(1, ch), i + 1});
      ++i;
    } else {
      throw RingSyntaxError(i + 1, std::string("unexpected character '") + ch + "'");
    }
  }
  out.push_back({Tok::kEnd, "", src.size() + 1});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, std::filesystem::path base)
      : toks_(std::move(toks)), base_(std::move(base)) {}

  RingExpr program() {
    std::optional<RingExpr> last;
    while (!at_end()) {
      if (accept(";")) continue;
      last = statement();
      if (!at_end()) expect(";");
    }
    if (!last) throw RingSyntaxError(1, "empty program");
    return *last;
  }

 private:
  [[nodiscard]] const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  [[nodiscard]] bool at_end() const { return peek().kind == Tok::kEnd; }
  bool accept(std::string_view p) {
    if (peek().kind == Tok::kPunct && peek().text == p) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(std::string_view p) {
    if (!accept(p)) fail("expected '" + std::string(p) + "'");
  }
  [[noreturn]] void fail(const std::string& msg) const {
    const auto& t = peek();
    throw RingSyntaxError(t.column, msg + (t.kind == Tok::kEnd ? " at end of input" : " near '" + t.text + "'"));
  }

  RingExpr statement() {
    if (peek().kind == Tok::kIdent && peek(1).kind == Tok::kPunct && peek(1).text == "=") {
      const std::string name = peek().text;
      pos_ += 2;
      RingExpr value = expr();
      vars_[name] = value;
      return value;
    }
    return expr();
  }

  RingExpr expr() {
    RingExpr acc = term();
    while (true) {
      if (accept("+")) {
        acc += term();
      } else if (accept("-")) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RingExpr term() {
    RingExpr acc = unary();
    while (accept("*")) acc = acc * unary();
    return acc;
  }

  RingExpr unary() {
    if (accept("-")) return -unary();
    return primary();
  }

  long integer() {
    if (peek().kind != Tok::kInt) fail("expected an integer");
    try {
      return std::stol(toks_[pos_++].text);
    } catch (const std::out_of_range&) {
      --pos_;
      fail("integer out of range");
    }
  }

  RingExpr primary() {
    const Token t = peek();
    if (t.kind == Tok::kInt) return RingExpr::integer(integer());
    if (accept("(")) {
      RingExpr e = expr();
      expect(")");
      return e;
    }
    if (t.kind != Tok::kIdent) fail("expected an expression");
    ++pos_;
    if (!accept("(")) {
      auto it = vars_.find(t.text);
      if (it == vars_.end()) throw RingSyntaxError(t.column, "unknown name '" + t.text + "'");
      return it->second;
    }
    try {
      return RingExpr::complex(builtin(t));
    } catch (const RingSyntaxError&) {
      throw;
    } catch (const std::exception& e) {
      throw RingSyntaxError(t.column, t.text + ": " + e.what());
    }
  }

  SimplicialComplex builtin(const Token& name) {
    const std::string& f = name.text;
    if (f == "gen") {
      std::vector<std::vector<Label>> sets;
      if (!accept(")")) {
        do {
          expect("{");
          std::vector<Label> set;
          do {
            if (peek().kind != Tok::kInt && peek().kind != Tok::kIdent) fail("expected a vertex label");
            set.push_back(toks_[pos_++].text);
          } while (accept(","));
          expect("}");
          sets.push_back(std::move(set));
        } while (accept(","));
        expect(")");
      }
      return generate_complex(sets);
    }
    if (f == "file") {
      if (peek().kind != Tok::kString) fail("expected a quoted path");
      std::filesystem::path p = toks_[pos_++].text;
      expect(")");
      if (p.is_relative() && !base_.empty()) p = base_ / p;
      return read_facet_file(p);
    }
    if (f == "point" || f == "empty" || f == "diamond" || f == "octahedron") {
      expect(")");
      if (f == "point") return simplex_complex(0);
      if (f == "empty") return SimplicialComplex{};
      if (f == "diamond") return diamond_complex();
      return octahedron_complex();
    }
    using Family = SimplicialComplex (*)(int);
    static const std::map<std::string, Family> sized = {
        {"simplex", &simplex_complex}, {"complete", &complete_complex}, {"cycle", &cycle_complex},
        {"path", &path_complex},       {"wheel", &wheel_complex},
    };
    const auto it = sized.find(f);
    if (it == sized.end()) throw RingSyntaxError(name.column, "unknown function '" + f + "'");
    const long n = integer();
    expect(")");
    if (n > 64) throw RingSyntaxError(name.column, f + ": size too large");
    return it->second(static_cast<int>(n));
  }

  std::vector<Token> toks_;
  std::filesystem::path base_;
  std::size_t pos_ = 0;
  std::map<std::string, RingExpr> vars_;
};

}  // namespace

RingExpr evaluate_ring_program(std::string_view source, const std::filesystem::path& base_dir) {
  return Parser(tokenize(source), base_dir).program();
}

}  // namespace conlap
