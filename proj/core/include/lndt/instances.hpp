#ifndef LNDT_INSTANCES_HPP
#define LNDT_INSTANCES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lndt/codes.hpp"
#include "lndt/values.hpp"

namespace lndt {

struct InstanceEntry {
  std::string name;
  Code code;
  std::string doc;
};

/// Named instances, in the order they are documented. Every name resolves
/// through resolve_alias() to its code.
const std::vector<InstanceEntry>& instance_table();

/// Number of atoms in a full perfect tree with the given branching factor
/// and number of layers: sum of branching^i for i < layers.
std::size_t perfect_count(std::size_t branching, std::size_t layers);

/// List value holding `atoms` in order; the i-th item is wrapped in i
/// one-slot tuples. Throws SortMismatchError on mixed sorts.
Val list_of(const std::vector<Atom>& atoms);

/// Full nest with `layers` spine items; layer i holds 2^i atoms.
/// Throws ArgumentError unless |atoms| == 2^layers - 1.
Val nest_full(std::size_t layers, const std::vector<Atom>& atoms);

/// nothing -> [], just a -> [a]
Val maybe_of(const std::optional<Atom>& x);

/// Full tree for `nperfect:<branching>` (code Lndt(Tup(branching - 1)))
/// with `depth` spine items; layer i holds branching^i atoms.
/// Throws ArgumentError on branching == 0 or a wrong atom count.
Val nperfect_full(std::size_t branching, std::size_t depth, const std::vector<Atom>& atoms);

}  // namespace lndt

#endif  // LNDT_INSTANCES_HPP
