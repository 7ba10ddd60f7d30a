#ifndef LNDT_BUSHN_HPP
#define LNDT_BUSHN_HPP

#include <cstddef>
#include <memory>
#include <string>

#include "lndt/values.hpp"

namespace lndt {

/// Level-indexed bush encoding:
///
///   BaseBN a               : level 0
///   NilBN n                : level n + 1
///   ConsBN n (head, tail)  : level n + 1, head at level n, tail at level n + 2
///
/// Levels are stored on every node so that the discipline can be checked at
/// runtime (wf_bushn); construction does not enforce it.
class BushNVal {
 public:
  enum class Kind { Base, Nil, Cons };

  static BushNVal base(Atom atom);
  static BushNVal nil(std::size_t level);
  static BushNVal cons(std::size_t level, BushNVal head, BushNVal tail);

  Kind kind() const noexcept { return kind_; }
  /// 0 for BaseBN.
  std::size_t level() const noexcept { return level_; }
  /// Requires kind() == Base.
  const Atom& atom() const;
  /// Require kind() == Cons.
  const BushNVal& head() const;
  const BushNVal& tail() const;

  friend bool operator==(const BushNVal& a, const BushNVal& b) noexcept;

 private:
  BushNVal(Kind kind, std::size_t level) : kind_(kind), level_(level) {}

  Kind kind_;
  std::size_t level_;
  std::shared_ptr<const Atom> atom_;
  std::shared_ptr<const BushNVal> head_;
  std::shared_ptr<const BushNVal> tail_;
};

/// `ConsBN(1,BaseBN(7),NilBN(2))`
std::string to_string(const BushNVal& b);

/// Every ConsBN(l, h, t) has level(h) == l - 1 and level(t) == l + 1, and
/// NilBN/ConsBN never sit at level 0.
bool wf_bushn(const BushNVal& b);

/// Encodes a value of bush^level(A). Level 1 is an ordinary bush.
/// Throws ArgumentError on level 0, IllFormedError if `v` does not inhabit
/// bush^level over its atom sort.
BushNVal to_bushn(const Val& v, std::size_t level = 1);

/// Inverse of to_bushn. Throws ArgumentError if wf_bushn(b) fails or b is
/// a bare BaseBN.
Val from_bushn(const BushNVal& b);

}  // namespace lndt

#endif  // LNDT_BUSHN_HPP
