#ifndef LNDT_LAWS_HPP
#define LNDT_LAWS_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "lndt/codes.hpp"
#include "lndt/spread.hpp"
#include "lndt/values.hpp"

namespace lndt {

/// SplitMix64. Fixed so that generated corpora reproduce across builds and
/// implementations: state += 0x9E3779B97F4A7C15, then the usual
/// xor-shift-multiply finalizer. below(n) is next() % n.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) noexcept { return next() % n; }

 private:
  std::uint64_t state_;
};

struct GenConfig {
  /// Upper bound on struct_size of generated values; at least 1.
  std::size_t budget = 30;
  std::uint64_t seed = 0;
  /// Atoms to draw from; must not be empty.
  std::vector<Atom> atom_domain = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
};

/// Returned by min_inhabitant_size when no inhabitant exists.
inline constexpr std::size_t kUninhabited = std::numeric_limits<std::size_t>::max();

/// Smallest struct_size of a value inhabiting `t` with atoms from `domain`,
/// or kUninhabited. Saturates at kUninhabited.
std::size_t min_inhabitant_size(const TypeExpr& t, const std::vector<Atom>& domain);

/// Deterministic pseudo-random inhabitant of `t` with struct_size at most
/// cfg.budget. Spine lengths and slot sizes are driven by the remaining
/// budget, so generation terminates for every code including bush.
/// Throws ArgumentError if no inhabitant fits the budget and domain.
Val gen_val(const TypeExpr& t, const GenConfig& cfg);

/// Every value inhabiting `t` with struct_size <= max_size and atoms drawn
/// from `domain`, without duplicates, ordered by size then canonical text.
std::vector<Val> enum_vals(const TypeExpr& t, std::size_t max_size, const std::vector<Atom>& domain);

enum class LawOutcome { Holds, Fails, Skipped };

/// map(f) == map(g) on v, provided f and g agree on every atom of v;
/// Skipped when they do not.
LawOutcome check_congruence(const Code& code, const AtomFn& f, const AtomFn& g, const Val& v);

struct LawResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t skipped = 0;
  /// One entry per failing case: the inputs in canonical text plus a reason.
  std::vector<std::string> failures;
};

struct LawReport {
  std::string code;
  std::vector<LawResult> laws;

  std::size_t total_failures() const noexcept;
};

/// Names of the laws run by run_laws, in report order.
const std::vector<std::string>& law_names();

/// Runs every law on `cases` values generated from `code` over the int atoms
/// of cfg.atom_domain. Case k uses seed cfg.seed + k.
LawReport run_laws(const Code& code, const GenConfig& cfg, std::size_t cases);

/// One line per law, then one line per failure.
std::string to_text(const LawReport& report);

}  // namespace lndt

#endif  // LNDT_LAWS_HPP
