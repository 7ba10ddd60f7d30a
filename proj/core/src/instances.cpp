#include "lndt/instances.hpp"

#include <limits>

namespace lndt {

const std::vector<InstanceEntry>& instance_table() {
  static const std::vector<InstanceEntry> table = {
      {"list", resolve_alias("list"), "lndt(tup:0): ordinary lists; item i sits under i one-slot tuples"},
      {"nest", resolve_alias("nest"), "lndt(tup:1): perfect binary trees; layer i holds 2^i atoms"},
      {"maybe", resolve_alias("maybe"), "lndt(null): [] is nothing, [x] is just x"},
      {"bush", resolve_alias("bush"), "bush: the transformer nested with itself, bush = lndt(bush)"},
      {"sqlist", resolve_alias("sqlist"), "lndt(lndt(tup:0)): an atom, then a list, then a list of lists, ..."},
      {"nperfect:3", resolve_alias("nperfect:3"),
       "nperfect:<n> = lndt(tup:<n-1>): n-ary perfect trees, branching factor n >= 1"},
  };
  return table;
}

std::size_t perfect_count(std::size_t branching, std::size_t layers) {
  std::size_t total = 0;
  std::size_t layer = 1;
  for (std::size_t i = 0; i < layers; ++i) {
    if (total > std::numeric_limits<std::size_t>::max() - layer)
      throw ArgumentError("perfect tree too large");
    total += layer;
    if (i + 1 < layers) {
      if (branching != 0 && layer > std::numeric_limits<std::size_t>::max() / branching)
        throw ArgumentError("perfect tree too large");
      layer *= branching;
    }
  }
  return total;
}

namespace {

void require_one_sort(const std::vector<Atom>& atoms) {
  for (const Atom& a : atoms)
    if (a.sort() != atoms.front().sort())
      throw SortMismatchError("atoms of mixed sorts: " + print_atom(atoms.front()) + " and " +
                              print_atom(a));
}

Val wrap(Val v, std::size_t times) {
  for (std::size_t i = 0; i < times; ++i) v = Val::tup({std::move(v)});
  return v;
}

// Complete `branching`-ary tree of the given height over consecutive atoms.
Val perfect_layer(std::size_t branching, std::size_t height, const std::vector<Atom>& atoms,
                  std::size_t& next) {
  if (height == 0) return Val(atoms[next++]);
  std::vector<Val> slots;
  slots.reserve(branching);
  for (std::size_t i = 0; i < branching; ++i) slots.push_back(perfect_layer(branching, height - 1, atoms, next));
  return Val::tup(std::move(slots));
}

}  // namespace

Val list_of(const std::vector<Atom>& atoms) {
  require_one_sort(atoms);
  std::vector<Val> items;
  items.reserve(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) items.push_back(wrap(Val(atoms[i]), i));
  return Val::seq(std::move(items));
}

Val nest_full(std::size_t layers, const std::vector<Atom>& atoms) {
  return nperfect_full(2, layers, atoms);
}

Val maybe_of(const std::optional<Atom>& x) {
  if (!x) return Val::seq({});
  return Val::seq({Val(*x)});
}

Val nperfect_full(std::size_t branching, std::size_t depth, const std::vector<Atom>& atoms) {
  if (branching == 0) throw ArgumentError("branching factor must be at least 1");
  const std::size_t expected = perfect_count(branching, depth);
  if (atoms.size() != expected)
    throw ArgumentError("expected " + std::to_string(expected) + " atoms for branching " +
                        std::to_string(branching) + " and depth " + std::to_string(depth) +
                        ", got " + std::to_string(atoms.size()));
  require_one_sort(atoms);
  std::vector<Val> items;
  items.reserve(depth);
  std::size_t next = 0;
  for (std::size_t i = 0; i < depth; ++i) items.push_back(perfect_layer(branching, i, atoms, next));
  return Val::seq(std::move(items));
}

}  // namespace lndt
