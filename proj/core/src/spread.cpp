#include "lndt/spread.hpp"

#include <atomic>
#include <deque>

namespace lndt {

namespace {

std::atomic<std::uint64_t> g_null_seed_calls{0};

const std::vector<Val>& tuple_slots(const Val& v) {
  if (!v.is_tup()) throw InvariantViolation("tuple seed applied to " + print_val(v));
  return v.children();
}

const std::vector<Val>& spine(const Val& v) {
  if (!v.is_seq()) throw InvariantViolation("lndt seed applied to " + print_val(v));
  return v.children();
}

Path prefixed(Step step, Path rest) {
  rest.insert(rest.begin(), step);
  return rest;
}

[[noreturn]] void null_seed_invoked(const char* which) {
  g_null_seed_calls.fetch_add(1, std::memory_order_relaxed);
  throw InvariantViolation(std::string("null ") + which + " seed invoked");
}

}  // namespace

std::uint64_t null_seed_invocations() noexcept {
  return g_null_seed_calls.load(std::memory_order_relaxed);
}

SpreadableRef tuple_spreadable(std::size_t index) {
  auto s = std::make_shared<Spreadable>();
  const std::size_t arity = index + 1;

  s->map_seed = [](MapFn f) -> MapFn {
    return [f = std::move(f)](const Val& v) {
      std::vector<Val> out;
      out.reserve(tuple_slots(v).size());
      for (const Val& c : tuple_slots(v)) out.push_back(f(c));
      return Val::tup(std::move(out));
    };
  };

  s->foldl_seed = [](FoldlFn g) -> FoldlFn {
    return [g = std::move(g)](Acc acc, const Val& v) {
      for (const Val& c : tuple_slots(v)) acc = g(std::move(acc), c);
      return acc;
    };
  };

  s->foldr_seed = [](FoldrFn g) -> FoldrFn {
    return [g = std::move(g)](const Val& v, Acc acc) {
      const auto& slots = tuple_slots(v);
      for (auto it = slots.rbegin(); it != slots.rend(); ++it) acc = g(*it, std::move(acc));
      return acc;
    };
  };

  s->any_seed = [](AnyFn p) -> AnyFn {
    return [p = std::move(p)](const Val& v) -> std::optional<Path> {
      const auto& slots = tuple_slots(v);
      for (std::size_t i = 0; i < slots.size(); ++i)
        if (auto found = p(slots[i])) return prefixed(Step::tup(i), std::move(*found));
      return std::nullopt;
    };
  };

  s->all_seed = [](AllFn p) -> AllFn {
    return [p = std::move(p)](const Val& v) {
      const auto& slots = tuple_slots(v);
      for (std::size_t i = 0; i < slots.size(); ++i) {
        AllResult r = p(slots[i]);
        if (!r.all_hold()) return AllResult::refuted(prefixed(Step::tup(i), std::move(*r.counterexample)));
      }
      return AllResult::holds();
    };
  };

  s->eq_seed = [arity](EqFn e) -> EqFn {
    return [arity, e = std::move(e)](const Val& v, const Val& w) {
      const auto& xs = tuple_slots(v);
      const auto& ys = tuple_slots(w);
      if (xs.size() != arity || ys.size() != arity) return false;
      for (std::size_t i = 0; i < arity; ++i)
        if (!e(xs[i], ys[i])) return false;
      return true;
    };
  };

  s->show_seed = [](ShowFn render) -> ShowFn {
    return [render = std::move(render)](const Val& v) {
      std::string out = "(";
      const auto& slots = tuple_slots(v);
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if (i > 0) out.push_back(',');
        out += render(slots[i]);
      }
      out.push_back(')');
      return out;
    };
  };

  return s;
}

SpreadableRef null_spreadable() {
  static const SpreadableRef null_seeds = [] {
    auto s = std::make_shared<Spreadable>();
    s->map_seed = [](MapFn) -> MapFn { null_seed_invoked("map"); };
    s->foldl_seed = [](FoldlFn) -> FoldlFn { null_seed_invoked("foldl"); };
    s->foldr_seed = [](FoldrFn) -> FoldrFn { null_seed_invoked("foldr"); };
    s->any_seed = [](AnyFn) -> AnyFn { null_seed_invoked("any"); };
    s->all_seed = [](AllFn) -> AllFn { null_seed_invoked("all"); };
    s->eq_seed = [](EqFn) -> EqFn { null_seed_invoked("eq"); };
    s->show_seed = [](ShowFn) -> ShowFn { null_seed_invoked("show"); };
    return SpreadableRef(s);
  }();
  return null_seeds;
}

SpreadableRef spread(SpreadableRef inner) {
  auto s = std::make_shared<Spreadable>();

  // map f []       = []
  // map f (x ∷ xs) = f x ∷ map (seed f) xs
  s->map_seed = [inner](MapFn f) -> MapFn {
    return [inner, f = std::move(f)](const Val& v) {
      const auto& items = spine(v);
      std::vector<Val> out;
      out.reserve(items.size());
      MapFn current = f;
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) current = inner->map_seed(std::move(current));
        out.push_back(current(items[i]));
      }
      return Val::seq(std::move(out));
    };
  };

  // foldl g b (x ∷ xs) = foldl (seed g) (g b x) xs
  s->foldl_seed = [inner](FoldlFn g) -> FoldlFn {
    return [inner, g = std::move(g)](Acc acc, const Val& v) {
      const auto& items = spine(v);
      FoldlFn current = g;
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) current = inner->foldl_seed(std::move(current));
        acc = current(std::move(acc), items[i]);
      }
      return acc;
    };
  };

  // foldr g b (x ∷ xs) = g x (foldr (seed g) b xs)
  s->foldr_seed = [inner](FoldrFn g) -> FoldrFn {
    return [inner, g = std::move(g)](const Val& v, Acc acc) {
      const auto& items = spine(v);
      std::vector<FoldrFn> lifted;
      lifted.reserve(items.size());
      for (std::size_t i = 0; i < items.size(); ++i)
        lifted.push_back(i == 0 ? g : inner->foldr_seed(lifted.back()));
      for (std::size_t i = items.size(); i-- > 0;) acc = lifted[i](items[i], std::move(acc));
      return acc;
    };
  };

  // here: p holds on the head; there: the lifted predicate holds on the tail.
  s->any_seed = [inner](AnyFn p) -> AnyFn {
    return [inner, p = std::move(p)](const Val& v) -> std::optional<Path> {
      const auto& items = spine(v);
      AnyFn current = p;
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) current = inner->any_seed(std::move(current));
        if (auto found = current(items[i])) return prefixed(Step::seq(i), std::move(*found));
      }
      return std::nullopt;
    };
  };

  s->all_seed = [inner](AllFn p) -> AllFn {
    return [inner, p = std::move(p)](const Val& v) {
      const auto& items = spine(v);
      AllFn current = p;
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) current = inner->all_seed(std::move(current));
        AllResult r = current(items[i]);
        if (!r.all_hold()) return AllResult::refuted(prefixed(Step::seq(i), std::move(*r.counterexample)));
      }
      return AllResult::holds();
    };
  };

  s->eq_seed = [inner](EqFn e) -> EqFn {
    return [inner, e = std::move(e)](const Val& v, const Val& w) {
      const auto& xs = spine(v);
      const auto& ys = spine(w);
      if (xs.size() != ys.size()) return false;
      EqFn current = e;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) current = inner->eq_seed(std::move(current));
        if (!current(xs[i], ys[i])) return false;
      }
      return true;
    };
  };

  s->show_seed = [inner](ShowFn render) -> ShowFn {
    return [inner, render = std::move(render)](const Val& v) {
      const auto& items = spine(v);
      std::string out = "[";
      ShowFn current = render;
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) {
          current = inner->show_seed(std::move(current));
          out.push_back(';');
        }
        out += current(items[i]);
      }
      out.push_back(']');
      return out;
    };
  };

  return s;
}

namespace {

// The knot is tied through a shared_ptr cycle that lives for the whole
// program; seeds only dereference it when invoked, never during spread().
SpreadableRef bush_spreadable() {
  static const SpreadableRef knot = [] {
    auto cell = std::make_shared<Spreadable>();
    *cell = *spread(cell);
    return SpreadableRef(cell);
  }();
  return knot;
}

}  // namespace

SpreadableRef spreadable_of(const Code& code) {
  switch (code.kind()) {
    case Code::Kind::Tup:
      return tuple_spreadable(code.tuple_index());
    case Code::Kind::Null:
      return null_spreadable();
    case Code::Kind::Lndt:
      return spread(spreadable_of(code.inner()));
    case Code::Kind::Bush:
      return bush_spreadable();
  }
  throw std::logic_error("spreadable_of: unknown code");
}

namespace {

MapFn atom_map(const AtomFn& f) {
  return [f](const Val& v) { return Val(f(v.atom())); };
}

AnyFn atom_any(const AtomPred& p) {
  return [p](const Val& v) -> std::optional<Path> {
    if (p(v.atom())) return Path{};
    return std::nullopt;
  };
}

AllFn atom_all(const AtomPred& p) {
  return [p](const Val& v) { return p(v.atom()) ? AllResult::holds() : AllResult::refuted(Path{}); };
}

void require_same_sort(const Val& v, const Val& w) {
  auto a = first_atom_sort(v);
  auto b = first_atom_sort(w);
  if (a && b && *a != *b)
    throw SortMismatchError("values carry atoms of sorts " + std::string(to_string(*a)) + " and " +
                            std::string(to_string(*b)));
}

}  // namespace

Val map(const Code& code, const AtomFn& f, const Val& v) {
  require_wf(code, v);
  return spreadable_of(code)->map_seed(atom_map(f))(v);
}

namespace detail {

Acc foldl_erased(const Code& code, const std::function<Acc(Acc, const Atom&)>& step, Acc init,
                 const Val& v) {
  require_wf(code, v);
  FoldlFn base = [&step](Acc acc, const Val& x) { return step(std::move(acc), x.atom()); };
  return spreadable_of(code)->foldl_seed(std::move(base))(std::move(init), v);
}

Acc foldr_erased(const Code& code, const std::function<Acc(const Atom&, Acc)>& step, Acc init,
                 const Val& v) {
  require_wf(code, v);
  FoldrFn base = [&step](const Val& x, Acc acc) { return step(x.atom(), std::move(acc)); };
  return spreadable_of(code)->foldr_seed(std::move(base))(v, std::move(init));
}

}  // namespace detail

std::optional<Path> any(const Code& code, const AtomPred& p, const Val& v) {
  require_wf(code, v);
  return spreadable_of(code)->any_seed(atom_any(p))(v);
}

AllResult all(const Code& code, const AtomPred& p, const Val& v) {
  require_wf(code, v);
  return spreadable_of(code)->all_seed(atom_all(p))(v);
}

bool eq(const Code& code, const Val& v, const Val& w) {
  require_same_sort(v, w);
  require_wf(code, v);
  require_wf(code, w);
  EqFn base = [](const Val& x, const Val& y) { return x.atom() == y.atom(); };
  return spreadable_of(code)->eq_seed(std::move(base))(v, w);
}

std::string show(const Code& code, const Val& v) {
  require_wf(code, v);
  ShowFn base = [](const Val& x) { return print_atom(x.atom()); };
  return spreadable_of(code)->show_seed(std::move(base))(v);
}

std::size_t size(const Code& code, const Val& v) {
  return foldl(code, [](std::size_t n, const Atom&) { return n + 1; }, std::size_t{0}, v);
}

std::vector<Atom> flatten(const Code& code, const Val& v) {
  auto atoms = foldr(
      code,
      [](const Atom& a, std::deque<Atom> rest) {
        rest.push_front(a);
        return rest;
      },
      std::deque<Atom>{}, v);
  return {std::make_move_iterator(atoms.begin()), std::make_move_iterator(atoms.end())};
}

std::optional<Path> member(const Code& code, const Atom& a, const Val& v) {
  if (auto s = first_atom_sort(v); s && *s != a.sort())
    throw SortMismatchError("member: looking for a " + std::string(to_string(a.sort())) +
                            " atom in a structure of " + std::string(to_string(*s)));
  return any(code, [&a](const Atom& x) { return x == a; }, v);
}

bool is_empty(const Code& code, const Val& v) { return size(code, v) == 0; }

bool is_nil(const Code& code, const Val& v) {
  require_wf(code, v);
  return v.is_seq() && v.children().empty();
}

}  // namespace lndt
