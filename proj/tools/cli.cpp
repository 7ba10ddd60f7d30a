#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "lndt/lndt.hpp"

namespace lndt::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string type;
  std::string base = "int";
  std::string format = "text";
  std::string value;
  std::string other;
  std::vector<std::string> values;
  std::string fn;
  std::string op;
  std::optional<std::string> init;
  std::string pred;
  std::string atom;
  std::optional<std::string> domain;
  std::size_t budget = 30;
  std::uint64_t seed = 0;
  std::size_t max_size = 8;
  std::size_t cases = 100;
};

struct Context {
  const Options& opts;
  Code code;
  AtomSort base;
  bool as_json;
  std::ostream& out;
  std::ostream& err;
};

// Aliases run by `laws` when --type is omitted.
const std::vector<std::string> kLawCodes = {"list", "nest", "maybe", "sqlist", "nperfect:3", "bush"};

std::int64_t parse_int(std::string_view text, const std::string& what) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw UsageError(what + ": '" + std::string(text) + "' is not an integer");
  return value;
}

// An atom given on the command line: canonical atom text, or for str bases
// an unquoted literal.
Atom parse_atom_arg(const std::string& text, AtomSort base, const std::string& what) {
  if (base == AtomSort::Str && (text.empty() || text.front() != '"')) return Atom(text);
  if (base == AtomSort::Int) return Atom(parse_int(text, what));
  try {
    Val v = parse_val(text);
    if (v.is_atom() && v.atom().sort() == base) return v.atom();
  } catch (const ParseError&) {
  }
  throw UsageError(what + ": '" + text + "' is not a " + std::string(to_string(base)) + " atom");
}

std::vector<Atom> parse_domain(const Context& ctx, const std::string& fallback_int,
                               const std::string& fallback_str) {
  const std::string text =
      ctx.opts.domain.value_or(ctx.base == AtomSort::Int ? fallback_int : fallback_str);
  std::vector<Atom> atoms;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) atoms.push_back(parse_atom_arg(item, ctx.base, "--domain"));
  if (atoms.empty()) throw UsageError("--domain: at least one atom is required");
  return atoms;
}

Val load_value(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream in(arg.substr(1), std::ios::binary);
    if (!in) throw InputError("cannot read " + arg.substr(1));
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return parse_val(text);
}

// Parses and checks the value against --type over --base.
Val load_checked(const Context& ctx, const std::string& arg) {
  Val v = load_value(arg);
  require_wf(ctx.code, v, ctx.base);
  return v;
}

void require_base(const Context& ctx, AtomSort needed, const std::string& what) {
  if (ctx.base != needed)
    throw UsageError(what + " requires --base " + std::string(to_string(needed)));
}

json path_json(const Path& path) {
  json arr = json::array();
  for (const Step& s : path) arr.push_back(json{{s.kind == Step::Kind::Tup ? "tup" : "seq", s.index}});
  return arr;
}

json atom_json(const Atom& a) { return a.is_int() ? json(a.as_int()) : json(a.as_str()); }

void emit_value(const Context& ctx, const Val& v) {
  if (ctx.as_json)
    ctx.out << json(print_val(v)).dump() << '\n';
  else
    ctx.out << print_val(v) << '\n';
}

int emit_witness(const Context& ctx, const std::optional<Path>& found) {
  if (ctx.as_json)
    ctx.out << (found ? path_json(*found) : json(nullptr)).dump() << '\n';
  else
    ctx.out << (found ? to_string(*found) : "none") << '\n';
  return found ? kSuccess : kNegative;
}

AtomFn builtin_fn(const Context& ctx) {
  const std::string& name = ctx.opts.fn;
  auto wrap = [](std::uint64_t x) { return static_cast<std::int64_t>(x); };
  auto bits = [](const Atom& a) { return static_cast<std::uint64_t>(a.as_int()); };
  if (name == "id") return [](const Atom& a) { return a; };
  if (name == "to_str")
    return [](const Atom& a) { return a.is_int() ? Atom(std::to_string(a.as_int())) : a; };
  require_base(ctx, AtomSort::Int, "--fn " + name);
  if (name == "succ") return [=](const Atom& a) { return Atom(wrap(bits(a) + 1)); };
  if (name == "double") return [=](const Atom& a) { return Atom(wrap(bits(a) * 2)); };
  if (name == "square") return [=](const Atom& a) { return Atom(wrap(bits(a) * bits(a))); };
  throw UsageError("--fn: unknown function '" + name + "'");
}

AtomPred builtin_pred(const Context& ctx, const std::string& spec) {
  auto starts = [&](std::string_view prefix) { return spec.rfind(prefix, 0) == 0; };
  if (starts("eqs:")) {
    require_base(ctx, AtomSort::Str, "--pred eqs:");
    std::string s = spec.substr(4);
    return [s](const Atom& a) { return a.as_str() == s; };
  }
  require_base(ctx, AtomSort::Int, "--pred " + spec);
  if (spec == "even") return [](const Atom& a) { return a.as_int() % 2 == 0; };
  if (spec == "odd") return [](const Atom& a) { return a.as_int() % 2 != 0; };
  if (starts("gt:")) {
    const std::int64_t k = parse_int(spec.substr(3), "--pred");
    return [k](const Atom& a) { return a.as_int() > k; };
  }
  if (starts("eq:")) {
    const std::int64_t k = parse_int(spec.substr(3), "--pred");
    return [k](const Atom& a) { return a.as_int() == k; };
  }
  throw UsageError("--pred: unknown predicate '" + spec + "'");
}

std::string atom_text(const Atom& a) { return a.is_int() ? std::to_string(a.as_int()) : a.as_str(); }

int cmd_check(const Context& ctx) {
  Val v = load_value(ctx.opts.values.at(0));
  WfReport report = wf(TypeExpr::app(ctx.code, TypeExpr::base(ctx.base)), v);
  if (ctx.as_json) {
    json j{{"ok", report.ok()}};
    if (!report.ok()) {
      j["reason"] = std::string(to_string(report.failure->reason));
      j["at"] = path_json(report.failure->at);
    }
    ctx.out << j.dump() << '\n';
  } else if (report.ok()) {
    ctx.out << "ok\n";
  }
  if (!report.ok()) {
    ctx.err << to_string(report) << '\n';
    return kNegative;
  }
  return kSuccess;
}

int cmd_map(const Context& ctx) {
  const AtomFn f = builtin_fn(ctx);
  emit_value(ctx, map(ctx.code, f, load_checked(ctx, ctx.opts.values.at(0))));
  return kSuccess;
}

int cmd_fold(const Context& ctx, bool left) {
  const std::string& op = ctx.opts.op;
  const Val v = load_checked(ctx, ctx.opts.values.at(0));
  if (op == "concat") {
    std::string init;
    if (ctx.opts.init) init = parse_atom_arg(*ctx.opts.init, AtomSort::Str, "--init").as_str();
    std::string result =
        left ? foldl(ctx.code, [](std::string acc, const Atom& a) { return acc + atom_text(a); }, init, v)
             : foldr(ctx.code, [](const Atom& a, std::string acc) { return atom_text(a) + acc; }, init, v);
    ctx.out << (ctx.as_json ? json(result).dump() : print_atom(Atom(result))) << '\n';
    return kSuccess;
  }
  if (op != "add" && op != "mul") throw UsageError("--op: unknown operator '" + op + "'");
  require_base(ctx, AtomSort::Int, "--op " + op);
  const bool add = op == "add";
  const std::int64_t init = ctx.opts.init ? parse_int(*ctx.opts.init, "--init") : (add ? 0 : 1);
  auto combine = [add](std::int64_t x, std::int64_t y) {
    const auto ux = static_cast<std::uint64_t>(x);
    const auto uy = static_cast<std::uint64_t>(y);
    return static_cast<std::int64_t>(add ? ux + uy : ux * uy);
  };
  const std::int64_t result =
      left ? foldl(ctx.code, [&](std::int64_t acc, const Atom& a) { return combine(acc, a.as_int()); }, init, v)
           : foldr(ctx.code, [&](const Atom& a, std::int64_t acc) { return combine(a.as_int(), acc); }, init, v);
  ctx.out << result << '\n';
  return kSuccess;
}

int cmd_any(const Context& ctx) {
  const AtomPred p = builtin_pred(ctx, ctx.opts.pred);
  return emit_witness(ctx, any(ctx.code, p, load_checked(ctx, ctx.opts.values.at(0))));
}

int cmd_all(const Context& ctx) {
  const AtomPred p = builtin_pred(ctx, ctx.opts.pred);
  const AllResult r = all(ctx.code, p, load_checked(ctx, ctx.opts.values.at(0)));
  if (ctx.as_json) {
    json j{{"holds", r.all_hold()}};
    if (!r.all_hold()) j["at"] = path_json(*r.counterexample);
    ctx.out << j.dump() << '\n';
  } else {
    ctx.out << (r.all_hold() ? "holds" : to_string(*r.counterexample)) << '\n';
  }
  return r.all_hold() ? kSuccess : kNegative;
}

int cmd_member(const Context& ctx) {
  const Options& o = ctx.opts;
  if (o.atom.empty() == o.pred.empty()) throw UsageError("member: give exactly one of --atom or --pred");
  Atom needle = std::int64_t{0};
  if (!o.atom.empty()) {
    needle = parse_atom_arg(o.atom, ctx.base, "--atom");
  } else if (o.pred.rfind("eq:", 0) == 0) {
    require_base(ctx, AtomSort::Int, "--pred eq:");
    needle = parse_int(o.pred.substr(3), "--pred");
  } else if (o.pred.rfind("eqs:", 0) == 0) {
    require_base(ctx, AtomSort::Str, "--pred eqs:");
    needle = o.pred.substr(4);
  } else {
    throw UsageError("member: --pred must be eq:<k> or eqs:<s>");
  }
  return emit_witness(ctx, member(ctx.code, needle, load_checked(ctx, o.values.at(0))));
}

int cmd_eq(const Context& ctx) {
  if (ctx.opts.values.size() != 2) throw UsageError("eq: expected two values");
  const bool same = eq(ctx.code, load_checked(ctx, ctx.opts.values[0]), load_checked(ctx, ctx.opts.values[1]));
  ctx.out << (same ? "true" : "false") << '\n';
  return same ? kSuccess : kNegative;
}

int cmd_size(const Context& ctx) {
  ctx.out << size(ctx.code, load_checked(ctx, ctx.opts.values.at(0))) << '\n';
  return kSuccess;
}

int cmd_flatten(const Context& ctx) {
  const std::vector<Atom> atoms = flatten(ctx.code, load_checked(ctx, ctx.opts.values.at(0)));
  if (ctx.as_json) {
    json arr = json::array();
    for (const Atom& a : atoms) arr.push_back(atom_json(a));
    ctx.out << arr.dump() << '\n';
  } else {
    std::vector<Val> items(atoms.begin(), atoms.end());
    ctx.out << print_val(Val::seq(std::move(items))) << '\n';
  }
  return kSuccess;
}

int cmd_show(const Context& ctx) {
  const std::string text = show(ctx.code, load_checked(ctx, ctx.opts.values.at(0)));
  ctx.out << (ctx.as_json ? json(text).dump() : text) << '\n';
  return kSuccess;
}

int cmd_empty(const Context& ctx) {
  ctx.out << (is_empty(ctx.code, load_checked(ctx, ctx.opts.values.at(0))) ? "true" : "false") << '\n';
  return kSuccess;
}

int cmd_gen(const Context& ctx) {
  GenConfig cfg;
  cfg.budget = ctx.opts.budget;
  cfg.seed = ctx.opts.seed;
  cfg.atom_domain = parse_domain(ctx, "0,1,2,3,4,5,6,7,8,9", "a,b,c");
  emit_value(ctx, gen_val(TypeExpr::app(ctx.code, TypeExpr::base(ctx.base)), cfg));
  return kSuccess;
}

int cmd_enum(const Context& ctx) {
  const std::vector<Atom> domain = parse_domain(ctx, "0,1", "a,b");
  const std::vector<Val> vals =
      enum_vals(TypeExpr::app(ctx.code, TypeExpr::base(ctx.base)), ctx.opts.max_size, domain);
  if (ctx.as_json) {
    json arr = json::array();
    for (const Val& v : vals) arr.push_back(print_val(v));
    ctx.out << arr.dump() << '\n';
  } else {
    for (const Val& v : vals) ctx.out << print_val(v) << '\n';
  }
  return kSuccess;
}

int cmd_laws(const Context& ctx, const std::vector<Code>& codes) {
  GenConfig cfg;
  cfg.budget = ctx.opts.budget;
  cfg.seed = ctx.opts.seed;
  cfg.atom_domain = parse_domain(ctx, "0,1,2,3,4,5,6,7,8,9", "");
  std::size_t failures = 0;
  json reports = json::array();
  for (const Code& code : codes) {
    const LawReport report = run_laws(code, cfg, ctx.opts.cases);
    failures += report.total_failures();
    if (!ctx.as_json) {
      ctx.out << to_text(report);
      continue;
    }
    json laws = json::array();
    for (const LawResult& law : report.laws)
      laws.push_back(json{{"name", law.name},
                          {"cases", law.cases},
                          {"skipped", law.skipped},
                          {"failures", law.failures}});
    reports.push_back(json{{"code", report.code}, {"laws", laws}});
  }
  if (ctx.as_json) ctx.out << reports.dump() << '\n';
  return failures == 0 ? kSuccess : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Datatype-generic operations on linked nested datatypes", "lndtool"};
  app.require_subcommand(1);

  auto common = [&o](CLI::App* sub, bool type_required) {
    auto* type = sub->add_option("--type", o.type, "Code or alias (list, nest, maybe, bush, sqlist, nperfect:<n>)");
    if (type_required) type->required();
    sub->add_option("--base", o.base, "Atom sort")->check(CLI::IsMember({"int", "str"}))->capture_default_str();
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };
  auto with_value = [&](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    common(sub, true);
    sub->add_option("value", o.value, "Value text or @file")->required();
    return sub;
  };

  with_value("check", "Check that a value inhabits the type");
  with_value("map", "Map a builtin function over every atom")
      ->add_option("--fn", o.fn, "succ|double|square|id|to_str")
      ->required();
  for (const char* name : {"foldl", "foldr"}) {
    CLI::App* sub = with_value(name, std::string(name) + " with a builtin operator");
    sub->add_option("--op", o.op, "add|mul|concat")->required();
    sub->add_option("--init", o.init, "Initial accumulator (add: 0, mul: 1, concat: \"\")");
  }
  with_value("any", "Path of the leftmost atom satisfying a predicate")
      ->add_option("--pred", o.pred, "even|odd|gt:<k>|eq:<k>|eqs:<s>")
      ->required();
  with_value("all", "Check a predicate on every atom")
      ->add_option("--pred", o.pred, "even|odd|gt:<k>|eq:<k>|eqs:<s>")
      ->required();
  CLI::App* member_cmd = with_value("member", "Path of the leftmost occurrence of an atom");
  member_cmd->add_option("--atom", o.atom, "Atom to look for");
  member_cmd->add_option("--pred", o.pred, "eq:<k>|eqs:<s>");
  CLI::App* eq_cmd = app.add_subcommand("eq", "Compare two values");
  common(eq_cmd, true);
  eq_cmd->add_option("value", o.value, "First value text or @file")->required();
  eq_cmd->add_option("other", o.other, "Second value text or @file")->required();
  with_value("size", "Number of atoms");
  with_value("flatten", "Atoms in left-to-right order");
  with_value("show", "Canonical rendering");
  with_value("empty", "Whether the value holds no atoms");
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a pseudo-random value");
  common(gen_cmd, true);
  gen_cmd->add_option("--budget", o.budget, "Maximum structural size")->capture_default_str();
  gen_cmd->add_option("--seed", o.seed, "Generator seed")->capture_default_str();
  gen_cmd->add_option("--domain", o.domain, "Comma-separated atoms");
  CLI::App* enum_cmd = app.add_subcommand("enum", "Enumerate every value up to a size");
  common(enum_cmd, true);
  enum_cmd->add_option("--max-size", o.max_size, "Maximum structural size")->capture_default_str();
  enum_cmd->add_option("--domain", o.domain, "Comma-separated atoms");
  CLI::App* laws_cmd = app.add_subcommand("laws", "Run the law suite");
  common(laws_cmd, false);
  laws_cmd->add_option("--cases", o.cases, "Cases per code")->capture_default_str();
  laws_cmd->add_option("--budget", o.budget, "Maximum structural size")->capture_default_str();
  laws_cmd->add_option("--seed", o.seed, "Base seed")->capture_default_str();
  laws_cmd->add_option("--domain", o.domain, "Comma-separated int atoms");

  std::vector<const char*> argv{"lndtool"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  o.values = {o.value};
  if (command == "eq") o.values.push_back(o.other);
  try {
    std::vector<Code> codes;
    try {
      if (!o.type.empty()) {
        codes.push_back(parse_code(o.type));
      } else {
        for (const std::string& alias : kLawCodes) codes.push_back(resolve_alias(alias));
      }
    } catch (const ParseError& e) {
      throw UsageError("--type: " + std::string(e.what()));
    }
    const Context ctx{o, codes.front(), o.base == "str" ? AtomSort::Str : AtomSort::Int,
                      o.format == "json", out, err};

    static const std::map<std::string, std::function<int(const Context&)>> handlers = {
        {"check", cmd_check},
        {"map", cmd_map},
        {"foldl", [](const Context& c) { return cmd_fold(c, true); }},
        {"foldr", [](const Context& c) { return cmd_fold(c, false); }},
        {"any", cmd_any},
        {"all", cmd_all},
        {"member", cmd_member},
        {"eq", cmd_eq},
        {"size", cmd_size},
        {"flatten", cmd_flatten},
        {"show", cmd_show},
        {"empty", cmd_empty},
        {"gen", cmd_gen},
        {"enum", cmd_enum},
    };
    if (command == "laws") return cmd_laws(ctx, codes);
    return handlers.at(command)(ctx);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ArgumentError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return kInputError;
  } catch (const IllFormedError& e) {
    err << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace lndt::cli
