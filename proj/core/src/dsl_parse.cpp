#include <algorithm>
#include <cctype>

#include "catloc/dsl.hpp"
#include "dsl_signatures.hpp"

namespace catloc::dsl {

namespace {

enum class Tok { ident, lbrace, rbrace, lparen, rparen, lbracket, rbracket, colon, semi, comma, equals, dot, arrow,
                 fat_arrow, end };

struct Token {
  Tok kind;
  std::string text;
  Position pos;
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '/'; }

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::ident: return "'" + t.text + "'";
    case Tok::end: return "end of input";
    default: return "'" + t.text + "'";
  }
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    Position pos{line, col};
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
    } else if (ident_char(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      out.push_back({Tok::ident, text.substr(i, j - i), pos});
      advance(j - i);
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Tok::arrow, "->", pos});
      advance(2);
    } else if (c == '=' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Tok::fat_arrow, "=>", pos});
      advance(2);
    } else {
      Tok kind;
      switch (c) {
        case '{': kind = Tok::lbrace; break;
        case '}': kind = Tok::rbrace; break;
        case '(': kind = Tok::lparen; break;
        case ')': kind = Tok::rparen; break;
        case '[': kind = Tok::lbracket; break;
        case ']': kind = Tok::rbracket; break;
        case ':': kind = Tok::colon; break;
        case ';': kind = Tok::semi; break;
        case ',': kind = Tok::comma; break;
        case '=': kind = Tok::equals; break;
        case '.': kind = Tok::dot; break;
        default: throw SyntaxError(pos, std::string("unexpected character '") + c + "'");
      }
      out.push_back({kind, std::string(1, c), pos});
      advance(1);
    }
  }
  out.push_back({Tok::end, "", Position{line, col}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Document document() {
    Document doc;
    while (peek().kind != Tok::end) {
      const Token& kw = expect_ident();
      if (kw.text == "category") {
        doc.declarations.emplace_back(category(kw.pos));
      } else if (kw.text == "functor") {
        doc.declarations.emplace_back(functor(kw.pos));
      } else if (kw.text == "nat") {
        doc.declarations.emplace_back(nat(kw.pos));
      } else if (kw.text == "monad") {
        doc.declarations.emplace_back(monad(kw.pos));
      } else if (kw.text == "adjunction") {
        doc.declarations.emplace_back(adjunction(kw.pos));
      } else if (kw.text == "fixture") {
        doc.declarations.emplace_back(fixture(kw.pos));
      } else if (kw.text == "task") {
        doc.tasks.push_back(task(kw.pos));
      } else {
        throw SyntaxError(kw.pos, "expected a declaration or task, found " + describe(kw));
      }
    }
    return doc;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    next();
    return true;
  }
  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) throw SyntaxError(peek().pos, std::string("expected ") + what + ", found " + describe(peek()));
    return next();
  }
  const Token& expect_ident() { return expect(Tok::ident, "an identifier"); }
  void expect_keyword(const char* kw) {
    if (peek().kind != Tok::ident || peek().text != kw) {
      throw SyntaxError(peek().pos, std::string("expected '") + kw + "', found " + describe(peek()));
    }
    next();
  }

  // Comma-separated items up to ';' (or an immediately following '}').
  template <class Item>
  void list(Item&& item) {
    if (peek().kind == Tok::semi || peek().kind == Tok::rbrace) {
      accept(Tok::semi);
      return;
    }
    do item(); while (accept(Tok::comma));
    if (peek().kind != Tok::rbrace) expect(Tok::semi, "';' or ','");
  }

  CategoryDecl category(Position at) {
    CategoryDecl d;
    d.position = at;
    d.name = expect_ident().text;
    expect(Tok::lbrace, "'{'");
    while (!accept(Tok::rbrace)) {
      const Token& section = expect_ident();
      expect(Tok::colon, "':'");
      if (section.text == "objects") {
        list([&] { d.objects.push_back(expect_ident().text); });
      } else if (section.text == "morphisms") {
        list([&] {
          MorphismDecl m;
          m.position = peek().pos;
          m.name = expect_ident().text;
          expect(Tok::colon, "':'");
          m.source = expect_ident().text;
          expect(Tok::arrow, "'->'");
          m.target = expect_ident().text;
          d.morphisms.push_back(std::move(m));
        });
      } else if (section.text == "compose") {
        list([&] {
          CompositeDecl c;
          c.position = peek().pos;
          c.g = expect_ident().text;
          expect(Tok::dot, "'.'");
          c.f = expect_ident().text;
          expect(Tok::equals, "'='");
          c.h = expect_ident().text;
          d.composites.push_back(std::move(c));
        });
      } else {
        throw SyntaxError(section.pos, "unknown category section '" + section.text + "'");
      }
    }
    return d;
  }

  void map_list(std::vector<MapEntry>& out, Tok separator, const char* what) {
    list([&] {
      MapEntry e;
      e.position = peek().pos;
      e.from = expect_ident().text;
      expect(separator, what);
      e.to = expect_ident().text;
      out.push_back(std::move(e));
    });
  }

  FunctorDecl functor(Position at) {
    FunctorDecl d;
    d.position = at;
    d.name = expect_ident().text;
    expect(Tok::colon, "':'");
    d.source = expect_ident().text;
    expect(Tok::arrow, "'->'");
    d.target = expect_ident().text;
    expect(Tok::lbrace, "'{'");
    while (!accept(Tok::rbrace)) {
      const Token& section = expect_ident();
      expect(Tok::colon, "':'");
      if (section.text == "objects") {
        map_list(d.objects, Tok::arrow, "'->'");
      } else if (section.text == "morphisms") {
        map_list(d.morphisms, Tok::arrow, "'->'");
      } else {
        throw SyntaxError(section.pos, "unknown functor section '" + section.text + "'");
      }
    }
    return d;
  }

  // F.G for composites, Id_C for identities; kept as text.
  std::string functor_expr() {
    std::string text = expect_ident().text;
    while (accept(Tok::dot)) text += "." + expect_ident().text;
    return text;
  }

  NatDecl nat(Position at) {
    NatDecl d;
    d.position = at;
    d.name = expect_ident().text;
    expect(Tok::colon, "':'");
    d.source = functor_expr();
    expect(Tok::fat_arrow, "'=>'");
    d.target = functor_expr();
    expect(Tok::lbrace, "'{'");
    while (!accept(Tok::rbrace)) {
      const Token& section = expect_ident();
      if (section.text != "components") throw SyntaxError(section.pos, "expected 'components'");
      expect(Tok::colon, "':'");
      map_list(d.components, Tok::colon, "':'");
    }
    return d;
  }

  std::vector<std::string> tuple(std::size_t n) {
    std::vector<std::string> out;
    expect(Tok::equals, "'='");
    expect(Tok::lparen, "'('");
    for (std::size_t k = 0; k < n; ++k) {
      if (k) expect(Tok::comma, "','");
      out.push_back(expect_ident().text);
    }
    expect(Tok::rparen, "')'");
    expect(Tok::semi, "';'");
    return out;
  }

  MonadDecl monad(Position at) {
    MonadDecl d;
    d.position = at;
    d.name = expect_ident().text;
    auto t = tuple(3);
    d.functor = t[0];
    d.unit = t[1];
    d.mult = t[2];
    return d;
  }

  AdjunctionDecl adjunction(Position at) {
    AdjunctionDecl d;
    d.position = at;
    d.name = expect_ident().text;
    auto t = tuple(4);
    d.left = t[0];
    d.right = t[1];
    d.unit = t[2];
    d.counit = t[3];
    return d;
  }

  Term term() {
    Term t;
    if (accept(Tok::lbracket)) {
      t.kind = Term::Kind::list;
      if (!accept(Tok::rbracket)) {
        do t.items.push_back(expect_ident().text); while (accept(Tok::comma));
        expect(Tok::rbracket, "']'");
      }
      return t;
    }
    t.text = expect_ident().text;
    if (accept(Tok::arrow)) {
      t.kind = Term::Kind::arrow;
      t.target = expect_ident().text;
    }
    return t;
  }

  struct RawArg {
    std::optional<std::string> key;
    Term value;
    Position pos;
  };

  std::vector<RawArg> args() {
    std::vector<RawArg> out;
    expect(Tok::lparen, "'('");
    if (accept(Tok::rparen)) return out;
    do {
      RawArg a;
      a.pos = peek().pos;
      if (peek().kind == Tok::ident && (peek(1).kind == Tok::equals || peek(1).kind == Tok::colon)) {
        a.key = next().text;
        next();
      }
      a.value = term();
      out.push_back(std::move(a));
    } while (accept(Tok::comma));
    expect(Tok::rparen, "')'");
    return out;
  }

  // Matches raw arguments against a signature: positional first, then keyed.
  std::vector<Arg> bind(const std::vector<RawArg>& raw, const Signature& sig, const std::string& what, Position at) {
    std::vector<std::optional<Term>> slots(sig.params.size());
    bool keyed = false;
    std::size_t positional = 0;
    for (const auto& a : raw) {
      std::size_t slot;
      if (a.key) {
        keyed = true;
        auto it = std::find_if(sig.params.begin(), sig.params.end(), [&](const Param& p) { return p.key == *a.key; });
        if (it == sig.params.end()) throw SyntaxError(a.pos, "unknown parameter '" + *a.key + "' for " + what);
        slot = static_cast<std::size_t>(it - sig.params.begin());
      } else {
        if (keyed) throw SyntaxError(a.pos, "positional argument after keyed ones in " + what);
        if (positional >= sig.params.size()) throw SyntaxError(a.pos, "too many arguments for " + what);
        slot = positional++;
      }
      if (slots[slot]) throw SyntaxError(a.pos, "parameter '" + sig.params[slot].key + "' given twice");
      slots[slot] = a.value;
    }
    std::vector<Arg> out;
    for (std::size_t k = 0; k < slots.size(); ++k) {
      const Param& p = sig.params[k];
      if (!slots[k]) {
        if (p.fallback) {
          slots[k] = Term{Term::Kind::name, *p.fallback, {}, {}};
        } else if (p.required) {
          throw SyntaxError(at, what + " needs parameter '" + p.key + "'");
        } else {
          continue;
        }
      }
      out.push_back({p.key, *slots[k]});
    }
    return out;
  }

  FixtureDecl fixture(Position at) {
    FixtureDecl d;
    d.position = at;
    const Token& kind = expect_ident();
    d.kind = kind.text;
    auto raw = args();
    // poset(chain=3) and poset(antichain=2) are shorthands for shape and size.
    if (d.kind == "poset" && raw.size() == 1 && raw[0].key && (*raw[0].key == "chain" || *raw[0].key == "antichain")) {
      Term size = raw[0].value;
      raw = {{std::string("shape"), Term{Term::Kind::name, *raw[0].key, {}, {}}, raw[0].pos},
             {std::string("size"), size, raw[0].pos}};
    }
    const Signature* sig = fixture_signature(d.kind);
    if (!sig) throw SyntaxError(kind.pos, "unknown fixture '" + d.kind + "'");
    d.params = bind(raw, *sig, "fixture " + d.kind, at);
    expect_keyword("as");
    d.name = expect_ident().text;
    expect(Tok::semi, "';'");
    return d;
  }

  Task task(Position at) {
    Task t;
    t.position = at;
    const Token& name = expect_ident();
    t.name = name.text;
    auto raw = args();
    const Signature* sig = task_signature(t.name);
    if (!sig) throw SyntaxError(name.pos, "unknown task '" + t.name + "'");
    if (t.name == "verify") {
      // The remaining parameters depend on which statement is verified.
      if (raw.empty()) throw SyntaxError(at, "verify needs a statement name");
      auto found = std::find_if(raw.begin(), raw.end(), [](const RawArg& a) { return a.key && *a.key == "theorem"; });
      if (found == raw.end() && raw[0].key) throw SyntaxError(at, "verify needs parameter 'theorem'");
      const Term& statement = found != raw.end() ? found->value : raw[0].value;
      sig = verify_signature(statement.text);
      if (!sig) throw SyntaxError(raw[0].pos, "unknown statement '" + statement.text + "'");
    }
    t.args = bind(raw, *sig, "task " + t.name, at);
    expect(Tok::semi, "';'");
    return t;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

const Term* Task::arg(const std::string& key) const {
  for (const auto& a : args) {
    if (a.key == key) return &a.value;
  }
  return nullptr;
}

const std::string& declared_name(const Declaration& d) {
  return std::visit([](const auto& x) -> const std::string& { return x.name; }, d);
}

Position declared_at(const Declaration& d) {
  return std::visit([](const auto& x) { return x.position; }, d);
}

Document parse(const std::string& text) { return Parser(lex(text)).document(); }

}  // namespace catloc::dsl
