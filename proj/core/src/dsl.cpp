#include "qvl/dsl.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "qvl/errors.hpp"

namespace qvl {

namespace {

enum class Tok { kWord, kNumber, kPunct, kEnd };

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, column = 1;
  std::size_t i = 0;
  const auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = column;
    std::size_t len = 1;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Tok::kWord;
      while (i + len < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i + len])) || src[i + len] == '_')) {
        ++len;
      }
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::kNumber;
      while (i + len < src.size() && std::isdigit(static_cast<unsigned char>(src[i + len]))) ++len;
    } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      t.kind = Tok::kPunct;
      len = 2;
    } else if (std::string_view("{};:+-*^/").find(c) != std::string_view::npos) {
      t.kind = Tok::kPunct;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, column);
    }
    t.text = std::string(src.substr(i, len));
    out.push_back(std::move(t));
    advance(len);
  }
  Token end;
  end.line = line;
  end.column = column;
  out.push_back(end);
  return out;
}

struct Located {
  std::string name;
  std::size_t line;
  std::size_t column;
};

struct FactorAst {
  Located arrow;
  std::size_t power = 1;
};

struct TermAst {
  Rational coefficient;
  std::vector<FactorAst> factors;
};

struct RelationAst {
  std::vector<TermAst> terms;
  std::size_t line;
  std::size_t column;
};

struct ArrowAst {
  Located name;
  Located source;
  Located target;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  PresentationPtr run() {
    expect_keyword("quiver");
    const std::string name = expect(Tok::kWord, "quiver name").text;
    expect_punct("{");
    while (!at_punct("}")) {
      if (peek().kind == Tok::kEnd) fail("expected '}' before end of input");
      item();
    }
    expect_punct("}");
    if (peek().kind != Tok::kEnd) fail("unexpected text after the closing '}'");
    return build(name);
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, peek().line, peek().column);
  }

  bool at_punct(std::string_view p) const {
    return peek().kind == Tok::kPunct && peek().text == p;
  }

  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) {
      fail("expected " + what + ", found " + describe(peek()));
    }
    return take();
  }

  void expect_punct(std::string_view p) {
    if (!at_punct(p)) fail("expected '" + std::string(p) + "', found " + describe(peek()));
    take();
  }

  void expect_keyword(std::string_view word) {
    if (peek().kind != Tok::kWord || peek().text != word) {
      fail("expected '" + std::string(word) + "', found " + describe(peek()));
    }
    take();
  }

  static std::string describe(const Token& t) {
    return t.kind == Tok::kEnd ? "end of input" : "'" + t.text + "'";
  }

  Located vertex_id() {
    if (peek().kind != Tok::kWord && peek().kind != Tok::kNumber) {
      fail("expected a vertex id, found " + describe(peek()));
    }
    const Token& t = take();
    return {t.text, t.line, t.column};
  }

  Located word(const std::string& what) {
    const Token& t = expect(Tok::kWord, what);
    return {t.text, t.line, t.column};
  }

  std::size_t small_number(const std::string& what) {
    const Token& t = expect(Tok::kNumber, what);
    if (t.text.size() > 9) throw ParseError(what + " is too large", t.line, t.column);
    return std::stoul(t.text);
  }

  void item() {
    const Token& head = expect(Tok::kWord, "'vertex', 'loop', 'arrow', 'rel' or 'bound'");
    if (head.text == "vertex") {
      vertices_.push_back(vertex_id());
    } else if (head.text == "loop") {
      Located name = word("loop name");
      expect_keyword("at");
      Located v = vertex_id();
      arrows_.push_back({name, v, v});
    } else if (head.text == "arrow") {
      Located name = word("arrow name");
      expect_punct(":");
      Located s = vertex_id();
      expect_punct("->");
      Located t = vertex_id();
      arrows_.push_back({name, s, t});
    } else if (head.text == "rel") {
      relations_.push_back(relation(head));
    } else if (head.text == "bound") {
      if (bound_) throw ParseError("bound given twice", head.line, head.column);
      bound_ = small_number("bound");
    } else {
      throw ParseError("unknown item '" + head.text + "'", head.line, head.column);
    }
    expect_punct(";");
  }

  RelationAst relation(const Token& head) {
    RelationAst rel{{}, head.line, head.column};
    bool negative = false;
    if (at_punct("-") || at_punct("+")) negative = take().text == "-";
    for (;;) {
      TermAst t = term();
      if (negative) t.coefficient = -t.coefficient;
      rel.terms.push_back(std::move(t));
      if (at_punct("+") || at_punct("-")) {
        negative = take().text == "-";
      } else {
        break;
      }
    }
    return rel;
  }

  TermAst term() {
    TermAst t{Rational(1), {}};
    if (peek().kind == Tok::kNumber) {
      const Token& num = take();
      std::string text = num.text;
      if (at_punct("/")) {
        take();
        text += "/" + expect(Tok::kNumber, "denominator").text;
      }
      try {
        t.coefficient = parse_rational(text);
      } catch (const SemanticError& e) {
        throw ParseError(e.what(), num.line, num.column);
      }
      expect_punct("*");
    }
    t.factors.push_back(factor());
    while (at_punct("*")) {
      take();
      t.factors.push_back(factor());
    }
    return t;
  }

  FactorAst factor() {
    FactorAst f{word("arrow name"), 1};
    if (at_punct("^")) {
      take();
      f.power = small_number("exponent");
      if (f.power == 0) {
        throw ParseError("exponent must be positive", f.arrow.line, f.arrow.column);
      }
    }
    return f;
  }

  static std::string at(const Located& l) {
    return "line " + std::to_string(l.line) + ", column " + std::to_string(l.column) + ": ";
  }

  PresentationPtr build(const std::string& name) const {
    std::vector<std::string> names;
    std::map<std::string, VertexIndex> vertex_index;
    for (const auto& v : vertices_) {
      if (!vertex_index.emplace(v.name, names.size()).second) {
        throw SemanticError(at(v) + "vertex '" + v.name + "' declared twice");
      }
      names.push_back(v.name);
    }
    const auto resolve = [&](const Located& v) {
      const auto it = vertex_index.find(v.name);
      if (it == vertex_index.end()) throw SemanticError(at(v) + "unknown vertex '" + v.name + "'");
      return it->second;
    };
    std::vector<Arrow> arrows;
    std::map<std::string, ArrowIndex> arrow_index;
    for (const auto& a : arrows_) {
      if (!arrow_index.emplace(a.name.name, arrows.size()).second) {
        throw SemanticError(at(a.name) + "arrow '" + a.name.name + "' declared twice");
      }
      arrows.push_back({a.name.name, resolve(a.source), resolve(a.target)});
    }
    Quiver quiver(std::move(names), std::move(arrows));

    std::vector<Relation> relations;
    for (const auto& r : relations_) {
      std::vector<Term> terms;
      for (const auto& t : r.terms) {
        std::vector<ArrowIndex> path;
        for (const auto& f : t.factors) {
          const auto it = arrow_index.find(f.arrow.name);
          if (it == arrow_index.end()) {
            throw SemanticError(at(f.arrow) + "unknown arrow '" + f.arrow.name + "'");
          }
          path.insert(path.end(), f.power, it->second);
        }
        try {
          terms.push_back({t.coefficient, Path::from_arrows(quiver, std::move(path))});
        } catch (const SemanticError& e) {
          throw SemanticError(at(t.factors.front().arrow) + e.what());
        }
      }
      try {
        relations.emplace_back(quiver, std::move(terms));
      } catch (const SemanticError& e) {
        throw SemanticError("line " + std::to_string(r.line) + ", column " +
                            std::to_string(r.column) + ": " + e.what());
      }
    }
    return make_presentation(name, std::move(quiver), std::move(relations), bound_);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<Located> vertices_;
  std::vector<ArrowAst> arrows_;
  std::vector<RelationAst> relations_;
  std::optional<std::size_t> bound_;
};

std::string identifier(const std::string& name) {
  std::string out;
  for (const char c : name) {
    const bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    if (ok) {
      out += c;
    } else if (!out.empty() && out.back() != '_') {
      out += '_';
    }
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  if (out.empty() || std::isdigit(static_cast<unsigned char>(out.front()))) out = "Q" + out;
  return out;
}

}  // namespace

PresentationPtr parse_quiver_spec(std::string_view text) {
  return Parser(lex(text)).run();
}

std::string print_quiver_spec(const BoundQuiverPresentation& pres) {
  const Quiver& q = pres.quiver();
  std::ostringstream out;
  out << "quiver " << identifier(pres.name()) << " {\n";
  for (const auto& v : q.vertex_names()) out << "  vertex " << v << ";\n";
  for (const auto& a : q.arrows()) {
    if (a.is_loop()) {
      out << "  loop " << a.name << " at " << q.vertex_name(a.source) << ";\n";
    } else {
      out << "  arrow " << a.name << " : " << q.vertex_name(a.source) << " -> "
          << q.vertex_name(a.target) << ";\n";
    }
  }
  for (const auto& r : pres.relations()) out << "  rel " << format_relation(q, r) << ";\n";
  if (pres.bound_is_explicit()) out << "  bound " << pres.truncation_bound() << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace qvl
