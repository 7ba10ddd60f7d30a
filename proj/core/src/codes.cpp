#include "lndt/codes.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <optional>
#include <stdexcept>

#include "lndt/error.hpp"

namespace lndt {

std::string_view to_string(AtomSort sort) noexcept {
  return sort == AtomSort::Int ? "int" : "str";
}

Code Code::tup(std::size_t index) { return Code(Kind::Tup, index, nullptr); }
Code Code::null() { return Code(Kind::Null, 0, nullptr); }
Code Code::lndt(Code inner) {
  return Code(Kind::Lndt, 0, std::make_shared<const Code>(std::move(inner)));
}
Code Code::bush() { return Code(Kind::Bush, 0, nullptr); }

std::size_t Code::tuple_index() const {
  if (kind_ != Kind::Tup) throw std::logic_error("tuple_index() on a non-tuple code");
  return index_;
}

const Code& Code::inner() const {
  if (kind_ != Kind::Lndt) throw std::logic_error("inner() on a non-lndt code");
  return *inner_;
}

std::size_t Code::depth() const noexcept {
  std::size_t d = 1;
  for (const Code* c = this; c->kind_ == Kind::Lndt; c = c->inner_.get()) ++d;
  return d;
}

bool operator==(const Code& a, const Code& b) noexcept {
  const Code* x = &a;
  const Code* y = &b;
  while (true) {
    if (x->kind_ != y->kind_) return false;
    switch (x->kind_) {
      case Code::Kind::Tup:
        return x->index_ == y->index_;
      case Code::Kind::Null:
      case Code::Kind::Bush:
        return true;
      case Code::Kind::Lndt:
        x = x->inner_.get();
        y = y->inner_.get();
        break;
    }
  }
}

Code unfold(const Code& code) { return code.is_bush() ? Code::lndt(Code::bush()) : code; }

TypeExpr TypeExpr::base(AtomSort sort) {
  TypeExpr t;
  t.sort_ = sort;
  return t;
}

TypeExpr TypeExpr::app(Code code, TypeExpr inner) {
  TypeExpr t;
  t.code_ = std::make_shared<const Code>(std::move(code));
  t.inner_ = std::make_shared<const TypeExpr>(std::move(inner));
  return t;
}

AtomSort TypeExpr::sort() const {
  if (!is_base()) throw std::logic_error("sort() on an applied type expression");
  return sort_;
}

const Code& TypeExpr::code() const {
  if (is_base()) throw std::logic_error("code() on a base type expression");
  return *code_;
}

const TypeExpr& TypeExpr::inner() const {
  if (is_base()) throw std::logic_error("inner() on a base type expression");
  return *inner_;
}

bool operator==(const TypeExpr& a, const TypeExpr& b) noexcept {
  const TypeExpr* x = &a;
  const TypeExpr* y = &b;
  while (!x->is_base() && !y->is_base()) {
    if (!(*x->code_ == *y->code_)) return false;
    x = x->inner_.get();
    y = y->inner_.get();
  }
  return x->is_base() && y->is_base() && x->sort_ == y->sort_;
}

TypeExpr app_iter(const Code& code, std::size_t times, TypeExpr t) {
  for (std::size_t i = 0; i < times; ++i) t = TypeExpr::app(code, std::move(t));
  return t;
}

std::string to_string(const TypeExpr& t) {
  if (t.is_base()) return std::string(to_string(t.sort()));
  return print_code(t.code()) + "<" + to_string(t.inner()) + ">";
}

std::string print_code(const Code& code) {
  switch (code.kind()) {
    case Code::Kind::Tup:
      return "tup:" + std::to_string(code.tuple_index());
    case Code::Kind::Null:
      return "null";
    case Code::Kind::Bush:
      return "bush";
    case Code::Kind::Lndt:
      return "lndt(" + print_code(code.inner()) + ")";
  }
  return {};
}

namespace {

std::optional<std::size_t> parse_nat(std::string_view digits) {
  if (digits.empty()) return std::nullopt;
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
  return value;
}

std::optional<Code> lookup_alias(std::string_view name) {
  if (name == "list") return Code::lndt(Code::tup(0));
  if (name == "nest") return Code::lndt(Code::tup(1));
  if (name == "maybe") return Code::lndt(Code::null());
  if (name == "bush") return Code::bush();
  if (name == "sqlist") return Code::lndt(Code::lndt(Code::tup(0)));
  constexpr std::string_view nperfect = "nperfect:";
  if (name.starts_with(nperfect)) {
    std::string_view digits = name.substr(nperfect.size());
    if (digits.size() > 1 && digits.front() == '0') return std::nullopt;
    auto n = parse_nat(digits);
    if (!n || *n == 0) return std::nullopt;
    return Code::lndt(Code::tup(*n - 1));
  }
  return std::nullopt;
}

class CodeParser {
 public:
  explicit CodeParser(std::string_view text) : text_(text) {}

  Code parse() {
    Code c = code();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return c;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(ParseError::Kind::Syntax, pos_, message);
  }

  bool is_ident_char(char c) const {
    return std::islower(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string_view digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Code code() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    std::string_view word = text_.substr(start, pos_ - start);
    if (word.empty()) fail("expected a code");

    if (word == "tup") {
      expect(':');
      const std::size_t at = pos_;
      auto n = parse_nat(digits());
      if (!n) throw ParseError(ParseError::Kind::Syntax, at, "expected a tuple index");
      return Code::tup(*n);
    }
    if (word == "null") return Code::null();
    if (word == "bush") return Code::bush();
    if (word == "lndt") {
      expect('(');
      Code inner = code();
      expect(')');
      return Code::lndt(std::move(inner));
    }

    std::size_t end = pos_;
    if (pos_ < text_.size() && text_[pos_] == ':') {
      ++pos_;
      digits();
      end = pos_;
    }
    std::string_view name = text_.substr(start, end - start);
    if (auto c = lookup_alias(name)) return *c;
    throw ParseError(ParseError::Kind::UnknownAlias, start,
                     "unknown alias '" + std::string(name) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Code parse_code(std::string_view text) { return CodeParser(text).parse(); }

Code resolve_alias(std::string_view name) {
  if (auto c = lookup_alias(name)) return *c;
  throw ParseError(ParseError::Kind::UnknownAlias, 0,
                   "unknown alias '" + std::string(name) + "'");
}

std::vector<std::string> alias_names() {
  return {"list", "nest", "maybe", "bush", "sqlist", "nperfect:<n>"};
}

}  // namespace lndt
