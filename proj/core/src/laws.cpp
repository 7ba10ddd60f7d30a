#include "lndt/laws.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

namespace lndt {

namespace {

std::size_t sat_add(std::size_t a, std::size_t b) {
  return (a > kUninhabited - b) ? kUninhabited : a + b;
}

std::size_t sat_mul(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) return 0;
  return (a > kUninhabited / b) ? kUninhabited : a * b;
}

bool has_sort(const std::vector<Atom>& domain, AtomSort sort) {
  return std::any_of(domain.begin(), domain.end(), [sort](const Atom& a) { return a.sort() == sort; });
}

std::vector<Atom> dedup(const std::vector<Atom>& domain) {
  std::vector<Atom> out;
  for (const Atom& a : domain)
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  return out;
}

}  // namespace

std::size_t min_inhabitant_size(const TypeExpr& t, const std::vector<Atom>& domain) {
  if (t.is_base()) return has_sort(domain, t.sort()) ? 1 : kUninhabited;
  const Code& code = t.code();
  switch (code.kind()) {
    case Code::Kind::Null:
      return kUninhabited;
    case Code::Kind::Lndt:
    case Code::Kind::Bush:
      return 1;
    case Code::Kind::Tup: {
      const std::size_t child = min_inhabitant_size(t.inner(), domain);
      if (child == kUninhabited) return kUninhabited;
      return sat_add(1, sat_mul(code.arity(), child));
    }
  }
  return kUninhabited;
}

namespace {

class Generator {
 public:
  Generator(const GenConfig& cfg) : rng_(cfg.seed), domain_(cfg.atom_domain) {}

  // Requires min_inhabitant_size(t) <= budget.
  Val gen(const TypeExpr& t, std::size_t budget) {
    if (t.is_base()) return Val(pick_atom(t.sort()));
    const Code code = unfold(t.code());
    if (code.is_tup()) {
      const std::size_t slots = code.arity();
      const std::size_t m = min_inhabitant_size(t.inner(), domain_);
      std::size_t extra = budget - 1 - slots * m;
      std::vector<Val> children;
      children.reserve(slots);
      for (std::size_t i = 0; i < slots; ++i) {
        const std::size_t share = extra / (slots - i);
        Val child = gen(t.inner(), m + share);
        extra -= struct_size(child) - m;
        children.push_back(std::move(child));
      }
      return Val::tup(std::move(children));
    }
    // Lndt spine: keep consing while the next element type fits the budget.
    std::size_t remaining = budget - 1;
    std::vector<Val> items;
    TypeExpr element = t.inner();
    for (std::size_t i = 0;; ++i) {
      if (i > 0) element = TypeExpr::app(code.inner(), std::move(element));
      const std::size_t m = min_inhabitant_size(element, domain_);
      if (m == kUninhabited || m > remaining || rng_.below(4) == 0) break;
      const std::size_t cap = m + rng_.below((remaining - m) / 2 + 1);
      Val item = gen(element, cap);
      remaining -= struct_size(item);
      items.push_back(std::move(item));
    }
    return Val::seq(std::move(items));
  }

 private:
  Atom pick_atom(AtomSort sort) {
    std::vector<const Atom*> candidates;
    for (const Atom& a : domain_)
      if (a.sort() == sort) candidates.push_back(&a);
    return *candidates[rng_.below(candidates.size())];
  }

  SplitMix64 rng_;
  const std::vector<Atom>& domain_;
};

}  // namespace

Val gen_val(const TypeExpr& t, const GenConfig& cfg) {
  if (cfg.budget < 1) throw ArgumentError("gen_val: budget must be at least 1");
  if (cfg.atom_domain.empty()) throw ArgumentError("gen_val: empty atom domain");
  const std::size_t m = min_inhabitant_size(t, cfg.atom_domain);
  if (m == kUninhabited) throw ArgumentError("gen_val: " + to_string(t) + " is uninhabited over the domain");
  if (m > cfg.budget)
    throw ArgumentError("gen_val: smallest inhabitant of " + to_string(t) + " has size " +
                        std::to_string(m) + ", above budget " + std::to_string(cfg.budget));
  return Generator(cfg).gen(t, cfg.budget);
}

namespace {

struct Sized {
  Val value;
  std::size_t size;
};

class Enumerator {
 public:
  explicit Enumerator(std::vector<Atom> domain) : domain_(std::move(domain)) {}

  // All inhabitants of t with size <= budget.
  const std::vector<Sized>& all(const TypeExpr& t, std::size_t budget) {
    auto key = std::make_pair(to_string(t), budget);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<Sized> out = compute(t, budget);
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }

 private:
  std::vector<Sized> compute(const TypeExpr& t, std::size_t budget) {
    std::vector<Sized> out;
    if (budget == 0) return out;
    if (t.is_base()) {
      for (const Atom& a : domain_)
        if (a.sort() == t.sort()) out.push_back({Val(a), 1});
      return out;
    }
    const Code code = unfold(t.code());
    if (code.is_null()) return out;
    if (code.is_tup()) {
      const std::size_t slots = code.arity();
      const std::size_t m = min_inhabitant_size(t.inner(), domain_);
      if (m == kUninhabited || sat_add(1, sat_mul(slots, m)) > budget) return out;
      const std::vector<Sized>& choices = all(t.inner(), budget - 1 - (slots - 1) * m);
      std::vector<Val> prefix;
      tuples(choices, slots, m, budget - 1, 1, prefix, out);
      return out;
    }
    std::vector<Val> prefix;
    spine(code.inner(), t.inner(), budget - 1, 1, prefix, out);
    return out;
  }

  void tuples(const std::vector<Sized>& choices, std::size_t slots, std::size_t m,
              std::size_t remaining, std::size_t used, std::vector<Val>& prefix,
              std::vector<Sized>& out) {
    if (prefix.size() == slots) {
      out.push_back({Val::tup(prefix), used});
      return;
    }
    const std::size_t reserve = (slots - prefix.size() - 1) * m;
    for (const Sized& c : choices) {
      if (c.size + reserve > remaining) continue;
      prefix.push_back(c.value);
      tuples(choices, slots, m, remaining - c.size, used + c.size, prefix, out);
      prefix.pop_back();
    }
  }

  // Emits the current spine, then every extension by one more item.
  void spine(const Code& step, const TypeExpr& element, std::size_t remaining, std::size_t used,
             std::vector<Val>& prefix, std::vector<Sized>& out) {
    out.push_back({Val::seq(prefix), used});
    if (remaining == 0) return;
    const TypeExpr next = TypeExpr::app(step, element);
    const std::vector<Sized>& items = all(element, remaining);
    for (const Sized& item : items) {
      prefix.push_back(item.value);
      spine(step, next, remaining - item.size, used + item.size, prefix, out);
      prefix.pop_back();
    }
  }

  std::vector<Atom> domain_;
  std::map<std::pair<std::string, std::size_t>, std::vector<Sized>> memo_;
};

}  // namespace

std::vector<Val> enum_vals(const TypeExpr& t, std::size_t max_size, const std::vector<Atom>& domain) {
  Enumerator e(dedup(domain));
  std::vector<Sized> found = e.all(t, max_size);
  std::vector<std::pair<std::pair<std::size_t, std::string>, Val>> keyed;
  keyed.reserve(found.size());
  for (Sized& s : found) keyed.push_back({{s.size, print_val(s.value)}, std::move(s.value)});
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Val> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(std::move(k.second));
  return out;
}

namespace {

void collect_atoms(const Val& v, std::vector<Atom>& out) {
  if (v.is_atom()) {
    out.push_back(v.atom());
    return;
  }
  for (const Val& c : v.children()) collect_atoms(c, out);
}

std::int64_t wrap(std::uint64_t x) { return static_cast<std::int64_t>(x); }
std::uint64_t bits(std::int64_t x) { return static_cast<std::uint64_t>(x); }

Atom plus_self(const Atom& a) { return wrap(bits(a.as_int()) + bits(a.as_int())); }
Atom times_two(const Atom& a) { return wrap(2 * bits(a.as_int())); }
Atom succ(const Atom& a) { return wrap(bits(a.as_int()) + 1); }
Atom identity(const Atom& a) { return a; }

}  // namespace

LawOutcome check_congruence(const Code& code, const AtomFn& f, const AtomFn& g, const Val& v) {
  std::vector<Atom> atoms;
  collect_atoms(v, atoms);
  for (const Atom& a : atoms)
    if (!(f(a) == g(a))) return LawOutcome::Skipped;
  return map(code, f, v) == map(code, g, v) ? LawOutcome::Holds : LawOutcome::Fails;
}

std::size_t LawReport::total_failures() const noexcept {
  std::size_t n = 0;
  for (const LawResult& law : laws) n += law.failures.size();
  return n;
}

const std::vector<std::string>& law_names() {
  static const std::vector<std::string> names = {
      "congruence",       "composition", "map-identity", "any-all-duality",
      "fold-flatten",     "eq-oracle",   "member-map",   "show-parse",
  };
  return names;
}

namespace {

// Returns an empty string when the law holds on v, otherwise a reason.
using LawCheck = std::string (*)(const Code&, const Val&, const Val&);

std::string law_composition(const Code& c, const Val& v, const Val&) {
  const Val lhs = map(c, times_two, map(c, succ, v));
  const Val rhs = map(c, [](const Atom& a) { return times_two(succ(a)); }, v);
  return lhs == rhs ? "" : "map(g . f) = " + print_val(rhs) + " but map g . map f = " + print_val(lhs);
}

std::string law_identity(const Code& c, const Val& v, const Val&) {
  const Val out = map(c, identity, v);
  return out == v ? "" : "map(id) = " + print_val(out);
}

std::string law_duality(const Code& c, const Val& v, const Val&) {
  const AtomPred preds[] = {
      [](const Atom& a) { return a.as_int() % 2 == 0; },
      [](const Atom& a) { return a.as_int() > 4; },
  };
  for (const AtomPred& p : preds) {
    const AllResult every = all(c, p, v);
    const auto witness = any(c, [&p](const Atom& a) { return !p(a); }, v);
    if (every.counterexample != witness)
      return "all counterexample " + (every.counterexample ? to_string(*every.counterexample) : "none") +
             " vs any(not p) " + (witness ? to_string(*witness) : "none");
  }
  return "";
}

std::string law_fold_flatten(const Code& c, const Val& v, const Val&) {
  const std::vector<Atom> atoms = flatten(c, v);
  auto left_step = [](std::int64_t acc, const Atom& a) { return wrap(bits(acc) * 31 + bits(a.as_int())); };
  auto right_step = [](const Atom& a, std::int64_t acc) { return wrap(bits(a.as_int()) - 3 * bits(acc)); };
  std::int64_t left = 7;
  for (const Atom& a : atoms) left = left_step(left, a);
  std::int64_t right = 7;
  for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) right = right_step(*it, right);
  const std::int64_t got_left = foldl(c, left_step, std::int64_t{7}, v);
  const std::int64_t got_right = foldr(c, right_step, std::int64_t{7}, v);
  if (got_left != left) return "foldl " + std::to_string(got_left) + " != " + std::to_string(left);
  if (got_right != right) return "foldr " + std::to_string(got_right) + " != " + std::to_string(right);
  return "";
}

std::string law_eq(const Code& c, const Val& v, const Val& w) {
  if (!eq(c, v, v)) return "eq(v, v) is false";
  if (eq(c, v, w) != (v == w)) return "eq(v, w) disagrees with structural identity for w = " + print_val(w);
  const Val shifted = map(c, succ, v);
  if (eq(c, v, shifted) != (v == shifted)) return "eq(v, map succ v) disagrees with structural identity";
  return "";
}

std::string law_member_map(const Code& c, const Val& v, const Val&) {
  const Val mapped = map(c, times_two, v);
  for (const Atom& a : flatten(c, v)) {
    const Atom image = times_two(a);
    const auto at = member(c, image, mapped);
    if (!at) return print_atom(image) + " not a member of the mapped structure";
    if (!(atom_at(mapped, *at) == image)) return "member path " + to_string(*at) + " does not reach " + print_atom(image);
  }
  return "";
}

std::string law_show_parse(const Code& c, const Val& v, const Val&) {
  const std::string text = show(c, v);
  if (text != print_val(v)) return "show gave " + text;
  if (!(parse_val(text) == v)) return "parse(show v) differs from v";
  return "";
}

}  // namespace

LawReport run_laws(const Code& code, const GenConfig& cfg, std::size_t cases) {
  GenConfig int_cfg = cfg;
  int_cfg.atom_domain.clear();
  for (const Atom& a : cfg.atom_domain)
    if (a.is_int()) int_cfg.atom_domain.push_back(a);
  if (int_cfg.atom_domain.empty()) throw ArgumentError("run_laws: the atom domain holds no int atoms");

  const TypeExpr type = TypeExpr::app(code, TypeExpr::base(AtomSort::Int));
  LawReport report;
  report.code = print_code(code);
  for (const std::string& name : law_names()) report.laws.push_back({name, 0, 0, {}});

  const LawCheck checks[] = {nullptr,        law_composition, law_identity,   law_duality,
                             law_fold_flatten, law_eq,        law_member_map, law_show_parse};

  for (std::size_t k = 0; k < cases; ++k) {
    GenConfig case_cfg = int_cfg;
    case_cfg.seed = cfg.seed + k;
    const Val v = gen_val(type, case_cfg);
    case_cfg.seed = cfg.seed + k + cases;
    const Val w = gen_val(type, case_cfg);

    for (std::size_t i = 0; i < report.laws.size(); ++i) {
      LawResult& law = report.laws[i];
      ++law.cases;
      std::string reason;
      try {
        if (i == 0) {
          switch (check_congruence(code, plus_self, times_two, v)) {
            case LawOutcome::Holds: break;
            case LawOutcome::Skipped: ++law.skipped; break;
            case LawOutcome::Fails: reason = "map(n+n) != map(2n)"; break;
          }
        } else {
          reason = checks[i](code, v, w);
        }
      } catch (const std::exception& e) {
        reason = std::string("exception: ") + e.what();
      }
      if (!reason.empty()) law.failures.push_back(print_val(v) + ": " + reason);
    }
  }
  return report;
}

std::string to_text(const LawReport& report) {
  std::ostringstream out;
  for (const LawResult& law : report.laws) {
    out << report.code << ' ' << law.name << ": cases=" << law.cases << " skipped=" << law.skipped
        << " failures=" << law.failures.size() << '\n';
    for (const std::string& f : law.failures) out << "  FAIL " << f << '\n';
  }
  return out.str();
}

}  // namespace lndt
