#ifndef LNDT_SPREAD_HPP
#define LNDT_SPREAD_HPP

#include <any>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lndt/codes.hpp"
#include "lndt/values.hpp"

namespace lndt {

// Element-level operations. An "element" is whatever sits at the current
// nesting depth: an atom at depth 0, an F-structure at depth 1, and so on.
// Seeds lift an element-level operation over F to the corresponding
// structure-level operation over F-structures.

/// Type-erased fold accumulator.
using Acc = std::any;

using MapFn = std::function<Val(const Val&)>;
using FoldlFn = std::function<Acc(Acc, const Val&)>;
using FoldrFn = std::function<Acc(const Val&, Acc)>;
using AnyFn = std::function<std::optional<Path>(const Val&)>;
using EqFn = std::function<bool(const Val&, const Val&)>;
using ShowFn = std::function<std::string(const Val&)>;

/// Outcome of deciding "every atom satisfies p": no counterexample, or the
/// path of the leftmost failing atom.
struct AllResult {
  std::optional<Path> counterexample;

  static AllResult holds() { return {}; }
  static AllResult refuted(Path at) { return {std::move(at)}; }

  bool all_hold() const noexcept { return !counterexample.has_value(); }

  friend bool operator==(const AllResult&, const AllResult&) = default;
};

using AllFn = std::function<AllResult(const Val&)>;

/// Seed bundle for a transformer F. Every member lifts an operation on
/// elements to the same operation on F-structures of those elements.
struct Spreadable {
  std::function<MapFn(MapFn)> map_seed;
  std::function<FoldlFn(FoldlFn)> foldl_seed;
  std::function<FoldrFn(FoldrFn)> foldr_seed;
  std::function<AnyFn(AnyFn)> any_seed;
  std::function<AllFn(AllFn)> all_seed;
  std::function<EqFn(EqFn)> eq_seed;
  std::function<ShowFn(ShowFn)> show_seed;
};

using SpreadableRef = std::shared_ptr<const Spreadable>;

/// Seeds for Tup(index): slot-wise map, left-to-right and right-to-left
/// folds, slot-0-first search.
SpreadableRef tuple_spreadable(std::size_t index);

/// Seeds for Null. Null-structures are uninhabited, so every seed raises
/// InvariantViolation and bumps null_seed_invocations().
SpreadableRef null_spreadable();

/// Lifts the seeds for F to seeds for Lndt(F). Each operation walks the
/// spine; the i-th item is processed by the element operation lifted i
/// times through `inner`. Lifting happens only when a further item exists.
SpreadableRef spread(SpreadableRef inner);

/// Seeds for an arbitrary code. Bush is the fixpoint s = spread(s), built
/// once and shared.
SpreadableRef spreadable_of(const Code& code);

/// Number of Null seed invocations since process start.
std::uint64_t null_seed_invocations() noexcept;

using AtomFn = std::function<Atom(const Atom&)>;
using AtomPred = std::function<bool(const Atom&)>;

// Atom-level operations. Each one checks that `v` inhabits `code` applied to
// a base sort (throws IllFormedError otherwise), then runs the derived seed.

/// Same skeleton, every atom replaced by f(atom). f may change the sort.
Val map(const Code& code, const AtomFn& f, const Val& v);

namespace detail {
Acc foldl_erased(const Code& code, const std::function<Acc(Acc, const Atom&)>& step, Acc init,
                 const Val& v);
Acc foldr_erased(const Code& code, const std::function<Acc(const Atom&, Acc)>& step, Acc init,
                 const Val& v);
}  // namespace detail

/// Left fold over the atoms in flatten order. `step` is (A, const Atom&) -> A.
template <class A, class Step>
A foldl(const Code& code, Step step, A init, const Val& v) {
  Acc result = detail::foldl_erased(
      code,
      [&step](Acc acc, const Atom& a) -> Acc {
        return Acc(step(std::any_cast<A>(std::move(acc)), a));
      },
      Acc(std::move(init)), v);
  return std::any_cast<A>(std::move(result));
}

/// Right fold over the atoms in flatten order. `step` is (const Atom&, A) -> A.
template <class A, class Step>
A foldr(const Code& code, Step step, A init, const Val& v) {
  Acc result = detail::foldr_erased(
      code,
      [&step](const Atom& a, Acc acc) -> Acc {
        return Acc(step(a, std::any_cast<A>(std::move(acc))));
      },
      Acc(std::move(init)), v);
  return std::any_cast<A>(std::move(result));
}

/// Path of the leftmost atom satisfying p (head first, slot 0 first).
std::optional<Path> any(const Code& code, const AtomPred& p, const Val& v);

/// Holds, or the path of the leftmost atom failing p.
AllResult all(const Code& code, const AtomPred& p, const Val& v);

/// Equality derived through the eq seeds. Throws SortMismatchError when the
/// two values carry atoms of different sorts.
bool eq(const Code& code, const Val& v, const Val& w);

/// Canonical text derived through the show seeds; equals print_val(v).
std::string show(const Code& code, const Val& v);

/// Number of atoms, via foldl.
std::size_t size(const Code& code, const Val& v);

/// Atoms in depth-first left-to-right order, via foldr.
std::vector<Atom> flatten(const Code& code, const Val& v);

/// any(code, (== a), v). Throws SortMismatchError if `a` has a different
/// sort from the atoms of `v`.
std::optional<Path> member(const Code& code, const Atom& a, const Val& v);

/// True iff the structure holds no atoms. Over a base sort the head of any
/// non-Nil spine is an atom, so this agrees with is_nil at the top level;
/// the two differ for nested element structures, see the seed-level folds.
bool is_empty(const Code& code, const Val& v);

/// Alternative reading of emptiness: the outer spine is Nil.
bool is_nil(const Code& code, const Val& v);

}  // namespace lndt

#endif  // LNDT_SPREAD_HPP
