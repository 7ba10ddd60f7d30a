#include "lndt/values.hpp"

#include <charconv>
#include <stdexcept>

namespace lndt {

std::int64_t Atom::as_int() const {
  if (!is_int()) throw SortMismatchError("expected an int atom, got " + print_atom(*this));
  return std::get<std::int64_t>(payload_);
}

const std::string& Atom::as_str() const {
  if (!is_str()) throw SortMismatchError("expected a str atom, got " + print_atom(*this));
  return std::get<std::string>(payload_);
}

std::string print_atom(const Atom& atom) {
  if (atom.is_int()) return std::to_string(atom.as_int());
  std::string out = "\"";
  for (char c : atom.as_str()) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

const Atom& Val::atom() const {
  if (!is_atom()) throw std::logic_error("atom() on a structure node");
  return atom_;
}

std::string to_string(const Path& path) {
  std::string out = "[";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += path[i].kind == Step::Kind::Tup ? "tup:" : "seq:";
    out += std::to_string(path[i].index);
  }
  out.push_back(']');
  return out;
}

std::string_view to_string(WfReason reason) noexcept {
  switch (reason) {
    case WfReason::ArityMismatch: return "ArityMismatch";
    case WfReason::NullInhabited: return "NullInhabited";
    case WfReason::SortMismatch: return "SortMismatch";
    case WfReason::ExpectedTuple: return "ExpectedTuple";
    case WfReason::ExpectedSeq: return "ExpectedSeq";
    case WfReason::ExpectedAtom: return "ExpectedAtom";
  }
  return "?";
}

std::string to_string(const WfReport& report) {
  if (report.ok()) return "ok";
  return std::string(to_string(report.failure->reason)) + " at " + to_string(report.failure->at);
}

namespace {

// On failure `path` is left pointing at the offending node.
std::optional<WfReason> check(const TypeExpr& t, const Val& v, Path& path) {
  if (t.is_base()) {
    if (!v.is_atom()) return WfReason::ExpectedAtom;
    if (v.atom().sort() != t.sort()) return WfReason::SortMismatch;
    return std::nullopt;
  }
  const Code code = unfold(t.code());
  switch (code.kind()) {
    case Code::Kind::Null:
      return WfReason::NullInhabited;
    case Code::Kind::Tup: {
      if (!v.is_tup()) return WfReason::ExpectedTuple;
      if (v.children().size() != code.arity()) return WfReason::ArityMismatch;
      for (std::size_t i = 0; i < v.children().size(); ++i) {
        path.push_back(Step::tup(i));
        if (auto r = check(t.inner(), v.children()[i], path)) return r;
        path.pop_back();
      }
      return std::nullopt;
    }
    case Code::Kind::Lndt: {
      if (!v.is_seq()) return WfReason::ExpectedSeq;
      TypeExpr element = t.inner();
      for (std::size_t i = 0; i < v.children().size(); ++i) {
        if (i > 0) element = TypeExpr::app(code.inner(), std::move(element));
        path.push_back(Step::seq(i));
        if (auto r = check(element, v.children()[i], path)) return r;
        path.pop_back();
      }
      return std::nullopt;
    }
    case Code::Kind::Bush:
      break;  // unreachable after unfold
  }
  throw std::logic_error("wf: unfolded bush");
}

}  // namespace

WfReport wf(const TypeExpr& t, const Val& v) {
  Path path;
  if (auto reason = check(t, v, path)) return WfReport{WfFailure{std::move(path), *reason}};
  return WfReport{};
}

std::optional<AtomSort> first_atom_sort(const Val& v) {
  if (v.is_atom()) return v.atom().sort();
  for (const Val& c : v.children())
    if (auto s = first_atom_sort(c)) return s;
  return std::nullopt;
}

AtomSort require_wf(const Code& code, const Val& v, std::optional<AtomSort> base) {
  const AtomSort sort = base.value_or(first_atom_sort(v).value_or(AtomSort::Int));
  WfReport report = wf(TypeExpr::app(code, TypeExpr::base(sort)), v);
  if (!report.ok()) throw IllFormedError(std::move(*report.failure));
  return sort;
}

namespace {

class ValParser {
 public:
  explicit ValParser(std::string_view text) : text_(text) {}

  Val parse() {
    Val v = value();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(ParseError::Kind::Syntax, pos_, message);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r'))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Val value() {
    switch (peek()) {
      case '(':
        return group(')', ',', false);
      case '[':
        return group(']', ';', true);
      case '"':
        return Val(Atom(string()));
      default:
        return Val(Atom(integer()));
    }
  }

  Val group(char close, char sep, bool is_seq) {
    ++pos_;
    std::vector<Val> items;
    if (is_seq && peek() == close) {
      ++pos_;
      return Val::seq({});
    }
    while (true) {
      items.push_back(value());
      const char c = peek();
      if (c == sep) {
        ++pos_;
      } else if (c == close) {
        ++pos_;
        break;
      } else {
        fail(std::string("expected '") + sep + "' or '" + close + "'");
      }
    }
    return is_seq ? Val::seq(std::move(items)) : Val::tup(std::move(items));
  }

  std::int64_t integer() {
    const std::size_t start = pos_;
    std::size_t end = pos_;
    if (end < text_.size() && text_[end] == '-') ++end;
    const std::size_t digits = end;
    while (end < text_.size() && text_[end] >= '0' && text_[end] <= '9') ++end;
    if (end == digits) fail("expected a value");
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + end, value);
    if (ec != std::errc() || ptr != text_.data() + end) fail("integer out of range");
    pos_ = end;
    return value;
  }

  std::string string() {
    ++pos_;
    std::string out;
    while (true) {
      if (pos_ >= text_.size()) fail("unterminated string");
      const char c = text_[pos_];
      if (c == '"') {
        ++pos_;
        return out;
      }
      if (c == '\\') {
        if (pos_ + 1 >= text_.size()) {
          ++pos_;
          fail("unterminated string");
        }
        const char next = text_[pos_ + 1];
        if (next != '"' && next != '\\') fail("invalid escape sequence");
        out.push_back(next);
        pos_ += 2;
        continue;
      }
      out.push_back(c);
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print_into(const Val& v, std::string& out) {
  switch (v.kind()) {
    case Val::Kind::Atom:
      out += print_atom(v.atom());
      return;
    case Val::Kind::Tup:
    case Val::Kind::Seq: {
      const bool seq = v.is_seq();
      out.push_back(seq ? '[' : '(');
      for (std::size_t i = 0; i < v.children().size(); ++i) {
        if (i > 0) out.push_back(seq ? ';' : ',');
        print_into(v.children()[i], out);
      }
      out.push_back(seq ? ']' : ')');
      return;
    }
  }
}

}  // namespace

Val parse_val(std::string_view text) { return ValParser(text).parse(); }

std::string print_val(const Val& v) {
  std::string out;
  print_into(v, out);
  return out;
}

std::size_t struct_size(const Val& v) noexcept {
  std::size_t n = 1;
  for (const Val& c : v.children()) n += struct_size(c);
  return n;
}

const Val& node_at(const Val& v, const Path& path) {
  const Val* node = &v;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Step& step = path[i];
    const bool kind_ok = step.kind == Step::Kind::Tup ? node->is_tup() : node->is_seq();
    if (!kind_ok || step.index >= node->children().size())
      throw PathError("path step " + std::to_string(i) + " of " + to_string(path) +
                      " does not address a node");
    node = &node->children()[step.index];
  }
  return *node;
}

const Atom& atom_at(const Val& v, const Path& path) {
  const Val& node = node_at(v, path);
  if (!node.is_atom()) throw PathError("path " + to_string(path) + " ends on a structure node");
  return node.atom();
}

}  // namespace lndt
