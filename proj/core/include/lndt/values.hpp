#ifndef LNDT_VALUES_HPP
#define LNDT_VALUES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lndt/codes.hpp"
#include "lndt/error.hpp"

namespace lndt {

/// A base element: an integer or a string. The sort follows the payload.
class Atom {
 public:
  Atom(std::int64_t value) : payload_(value) {}  // NOLINT(google-explicit-constructor)
  Atom(int value) : payload_(std::int64_t{value}) {}  // NOLINT(google-explicit-constructor)
  Atom(std::string value) : payload_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  Atom(const char* value) : payload_(std::string(value)) {}  // NOLINT(google-explicit-constructor)

  AtomSort sort() const noexcept { return is_int() ? AtomSort::Int : AtomSort::Str; }
  bool is_int() const noexcept { return std::holds_alternative<std::int64_t>(payload_); }
  bool is_str() const noexcept { return !is_int(); }

  std::int64_t as_int() const;
  const std::string& as_str() const;

  friend bool operator==(const Atom&, const Atom&) = default;

 private:
  std::variant<std::int64_t, std::string> payload_;
};

/// Canonical text of a single atom (base-10 integer or quoted string).
std::string print_atom(const Atom& atom);

/// Universal finite-tree value. Atoms are leaves, TupNode holds the slots of
/// a tuple, SeqNode is the cons spine of an LNDT. Arity and sort constraints
/// are not enforced here: raw values may be ill-formed, see wf().
class Val {
 public:
  enum class Kind { Atom, Tup, Seq };

  Val(Atom atom) : kind_(Kind::Atom), atom_(std::move(atom)) {}  // NOLINT(google-explicit-constructor)

  static Val tup(std::vector<Val> children) { return Val(Kind::Tup, std::move(children)); }
  static Val seq(std::vector<Val> items) { return Val(Kind::Seq, std::move(items)); }

  Kind kind() const noexcept { return kind_; }
  bool is_atom() const noexcept { return kind_ == Kind::Atom; }
  bool is_tup() const noexcept { return kind_ == Kind::Tup; }
  bool is_seq() const noexcept { return kind_ == Kind::Seq; }

  /// Requires is_atom().
  const Atom& atom() const;
  /// Tuple slots or spine items; empty for atoms.
  const std::vector<Val>& children() const noexcept { return children_; }

  friend bool operator==(const Val&, const Val&) = default;

 private:
  Val(Kind kind, std::vector<Val> children)
      : kind_(kind), atom_(std::int64_t{0}), children_(std::move(children)) {}

  Kind kind_;
  Atom atom_;
  std::vector<Val> children_;
};

/// One step of a position: a tuple slot or a spine index.
struct Step {
  enum class Kind { Tup, Seq };

  static Step tup(std::size_t i) { return {Kind::Tup, i}; }
  static Step seq(std::size_t i) { return {Kind::Seq, i}; }

  Kind kind;
  std::size_t index;

  friend bool operator==(const Step&, const Step&) = default;
};

/// Locates a node inside a Val. SeqStep(i) corresponds to i uses of `there`
/// followed by `here`.
using Path = std::vector<Step>;

/// `[seq:1,tup:0]`
std::string to_string(const Path& path);

enum class WfReason { ArityMismatch, NullInhabited, SortMismatch, ExpectedTuple, ExpectedSeq, ExpectedAtom };

std::string_view to_string(WfReason reason) noexcept;

struct WfFailure {
  Path at;
  WfReason reason;

  friend bool operator==(const WfFailure&, const WfFailure&) = default;
};

/// Result of the well-formedness judgment; empty failure means Ok.
struct WfReport {
  std::optional<WfFailure> failure;

  bool ok() const noexcept { return !failure.has_value(); }
  explicit operator bool() const noexcept { return ok(); }

  friend bool operator==(const WfReport&, const WfReport&) = default;
};

/// `ok` or `NullInhabited at [seq:1]`.
std::string to_string(const WfReport& report);

/// Thrown by operations whose input does not inhabit the expected type.
class IllFormedError : public Error {
 public:
  explicit IllFormedError(WfFailure failure)
      : Error("ill-formed value: " + to_string(WfReport{failure})), failure_(std::move(failure)) {}

  const WfFailure& failure() const noexcept { return failure_; }

 private:
  WfFailure failure_;
};

/// Decides whether `v` inhabits `t`:
///   base s        an atom of sort s
///   Tup(n) T      a TupNode of exactly n + 1 children, each inhabiting T
///   Null T        nothing
///   Lndt(G) T     a SeqNode whose i-th item inhabits G^i(T)
///   Bush T        as Lndt(Bush) T
/// The first failure in depth-first order is reported with its path.
WfReport wf(const TypeExpr& t, const Val& v);

/// Sort of the first atom in depth-first order, if any.
std::optional<AtomSort> first_atom_sort(const Val& v);

/// Checks that `v` inhabits `code` applied to a base sort and returns that
/// sort. The sort defaults to the first atom's sort (Int when there are no
/// atoms). Throws IllFormedError.
AtomSort require_wf(const Code& code, const Val& v, std::optional<AtomSort> base = std::nullopt);

/// val := int | '"' chars '"' | '(' val (',' val)* ')' | '[' (val (';' val)*)? ']'
/// Whitespace between tokens is ignored. Throws ParseError.
Val parse_val(std::string_view text);

/// Canonical text, no whitespace. parse_val(print_val(v)) == v.
std::string print_val(const Val& v);

/// 1 per node.
std::size_t struct_size(const Val& v) noexcept;

/// Node reached by following `path`. Throws PathError when a step does not
/// match the node kind or is out of range.
const Val& node_at(const Val& v, const Path& path);

/// Atom reached by following `path`. Throws PathError.
const Atom& atom_at(const Val& v, const Path& path);

}  // namespace lndt

#endif  // LNDT_VALUES_HPP
