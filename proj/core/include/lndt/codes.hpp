#ifndef LNDT_CODES_HPP
#define LNDT_CODES_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace lndt {

/// Sort of a base element. The library works in a single value universe
/// with two atom sorts.
enum class AtomSort { Int, Str };

std::string_view to_string(AtomSort sort) noexcept;

/// A type-transformer code.
///
///   Tup(n)   tuples of n + 1 elements (never empty)
///   Null     the transformer whose image is always uninhabited
///   Lndt(G)  the linked nested datatype over G; itself a transformer
///   Bush     the self-nested transformer X with X = Lndt(X)
///
/// Codes are immutable and cheap to copy (children are shared).
class Code {
 public:
  enum class Kind { Tup, Null, Lndt, Bush };

  static Code tup(std::size_t index);
  static Code null();
  static Code lndt(Code inner);
  static Code bush();

  Kind kind() const noexcept { return kind_; }
  bool is_tup() const noexcept { return kind_ == Kind::Tup; }
  bool is_null() const noexcept { return kind_ == Kind::Null; }
  bool is_lndt() const noexcept { return kind_ == Kind::Lndt; }
  bool is_bush() const noexcept { return kind_ == Kind::Bush; }

  /// Tuple index n of Tup(n). Requires is_tup().
  std::size_t tuple_index() const;
  /// Number of slots of Tup(n), i.e. n + 1. Requires is_tup().
  std::size_t arity() const { return tuple_index() + 1; }
  /// The transformer G of Lndt(G). Requires is_lndt().
  const Code& inner() const;

  /// Nesting depth: 1 for leaves, 1 + depth(G) for Lndt(G).
  std::size_t depth() const noexcept;

  friend bool operator==(const Code& a, const Code& b) noexcept;

 private:
  Code(Kind kind, std::size_t index, std::shared_ptr<const Code> inner)
      : kind_(kind), index_(index), inner_(std::move(inner)) {}

  Kind kind_;
  std::size_t index_ = 0;
  std::shared_ptr<const Code> inner_;
};

/// Bush unfolds one step to Lndt(Bush); every other code is returned as is.
Code unfold(const Code& code);

/// A type expression: a base sort, or a code applied to a type expression.
/// Tracks iterated applications F^i(A).
class TypeExpr {
 public:
  static TypeExpr base(AtomSort sort);
  static TypeExpr app(Code code, TypeExpr inner);

  bool is_base() const noexcept { return !code_; }
  /// Requires is_base().
  AtomSort sort() const;
  /// Requires !is_base().
  const Code& code() const;
  /// Requires !is_base().
  const TypeExpr& inner() const;

  friend bool operator==(const TypeExpr& a, const TypeExpr& b) noexcept;

 private:
  TypeExpr() = default;

  AtomSort sort_ = AtomSort::Int;
  std::shared_ptr<const Code> code_;
  std::shared_ptr<const TypeExpr> inner_;
};

/// Applies `code` to `t` `times` times; app_iter(c, 0, t) == t.
TypeExpr app_iter(const Code& code, std::size_t times, TypeExpr t);

/// Human-readable rendering used in diagnostics, e.g. `lndt(tup:1)<int>`.
std::string to_string(const TypeExpr& t);

/// Parses `code := "tup:" nat | "null" | "lndt(" code ")" | "bush" | alias`.
/// Throws ParseError (Syntax or UnknownAlias) with the byte offset.
Code parse_code(std::string_view text);

/// Canonical text; never emits alias sugar.
std::string print_code(const Code& code);

/// Resolves one of: list, nest, maybe, bush, sqlist, nperfect:<n> (n >= 1).
/// Throws ParseError(UnknownAlias) otherwise.
Code resolve_alias(std::string_view name);

/// Names accepted by resolve_alias, with `nperfect:<n>` as a template.
std::vector<std::string> alias_names();

}  // namespace lndt

#endif  // LNDT_CODES_HPP
