// qpart: expand, enumerate, biject, verify, suite, catalog.
//
// Exit codes: 0 all checks pass, 1 a verification failed, 2 usage error.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpart/bijections.hpp"
#include "qpart/identities.hpp"
#include "qpart/json_io.hpp"
#include "qpart/suite.hpp"

using nlohmann::json;
using namespace qpart;

namespace {

struct Global {
  std::string format = "text";
  std::optional<std::uint64_t> seed;
  bool json() const { return format == "json"; }
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string params_text(const Params& p) {
  std::string out;
  for (const auto& [k, v] : p) out += " " + k + "=" + std::to_string(v);
  return out;
}

// Identity parameters appear as --L, --N, --m, --j, --n.
struct ParamFlags {
  std::map<std::string, long> values;
  void attach(CLI::App* app) {
    for (const char* name : {"L", "N", "m", "j", "n"})
      app->add_option(std::string("--") + name, values[name],
                      std::string("identity parameter ") + name);
  }
  Params collect(CLI::App* app) const {
    Params out;
    for (const auto& [k, v] : values)
      if (app->count("--" + k)) out[k] = v;
    return out;
  }
};

unsigned trunc_or_default(const IdentityDescriptor& d, std::optional<long> T) {
  if (!T) return d.default_trunc;
  if (*T < 0) throw UsageError("truncation order must be >= 0");
  return static_cast<unsigned>(*T);
}

// ---------------------------------------------------------------- expand

int run_expand(const Global& g, const std::string& name, const std::string& side, const Params& given,
               std::optional<long> T) {
  const auto& d = describe(name);
  const Params params = resolve_params(d, given);
  std::vector<std::string> sides = side == "all" ? d.sides : std::vector<std::string>{side};
  json out = {{"identity", d.name}, {"params", json::object()}, {"sides", json::object()}};
  for (const auto& [k, v] : params) out["params"][k] = v;
  const bool exact = d.kind == IdentityKind::polynomial && !T;
  const unsigned trunc = trunc_or_default(d, T);
  if (!exact) out["trunc"] = trunc;
  for (const auto& s : sides) {
    if (exact) {
      auto p = build_polynomial(name, s, params);
      out["sides"][s] = to_json(p);
      if (!g.json()) std::cout << d.name << params_text(params) << " " << s << ": " << p << "\n";
    } else {
      auto series = build(name, s, params, trunc);
      out["sides"][s] = to_json(series);
      if (!g.json())
        std::cout << d.name << params_text(params) << " " << s << ": " << series.to_string() << "\n";
    }
  }
  if (g.json()) emit(out);
  return 0;
}

// ------------------------------------------------------------- enumerate

struct EnumerateArgs {
  int n = 0;
  std::string set = "all";
  std::optional<int> parts, min_part, max_part, min_parts, max_parts;
  std::string parity = "any";
};

int run_enumerate(const Global& g, const EnumerateArgs& a) {
  if (a.n < 0) throw UsageError("--n must be >= 0");
  ConstraintSet c;
  if (a.set == "rr") c = ConstraintSet::rr();
  else if (a.set == "distinct") c = ConstraintSet::distinct();
  else if (a.set == "distinct_even") {
    c = ConstraintSet::distinct();
    c.smallest_even_exceeds_twice_odd = true;
  } else if (a.set != "all") throw UsageError("unknown set '" + a.set + "'");
  if (a.min_part) c.min_part = *a.min_part;
  c.max_part = a.max_part;
  c.exact_parts = a.parts;
  c.min_parts = a.min_parts;
  c.max_parts = a.max_parts;
  if (a.parity == "odd") c.parity = Parity::odd;
  else if (a.parity == "even") c.parity = Parity::even;
  else if (a.parity != "any") throw UsageError("unknown parity '" + a.parity + "'");

  auto list = enumerate(a.n, c);
  if (g.json()) {
    json parts = json::array();
    for (const auto& p : list) parts.push_back(to_json(p));
    emit({{"n", a.n}, {"set", a.set}, {"count", list.size()}, {"partitions", parts}});
  } else {
    for (const auto& p : list) std::cout << p << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- biject

struct BijectArgs {
  std::string engine;
  std::string input;
  std::optional<int> n, k, gap, side;
  std::optional<std::string> mu, hat3, even, cols;
  bool inverse = false;
  bool render = false;
};

int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing ") + flag);
  return *v;
}

Partition need_partition(const std::optional<std::string>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing ") + flag);
  return Partition::parse(*v);
}

json hooks_json(const HookDecomposition& h) {
  json out = json::array();
  for (const auto& x : h.hooks) out.push_back({{"leg", x.leg}, {"arm", x.arm}});
  return out;
}

std::string hooks_text(const HookDecomposition& h) {
  std::string out = "(";
  for (std::size_t i = 0; i < h.hooks.size(); ++i)
    out += (i ? "," : "") + std::string("[") + std::to_string(h.hooks[i].leg) + "," +
           std::to_string(h.hooks[i].arm) + "]";
  return out + ")";
}

int run_biject(const Global& g, const BijectArgs& a) {
  // Ordered fields so text and JSON list them the same way.
  std::vector<std::pair<std::string, json>> fields;
  std::vector<std::pair<std::string, Partition>> drawn;
  std::vector<std::string> partition_keys;
  // Column-height lists are partitions too but are not drawn.
  auto put = [&](const std::string& key, const Partition& p, bool draw = true) {
    fields.emplace_back(key, to_json(p));
    partition_keys.push_back(key);
    if (draw) drawn.emplace_back(key, p);
  };
  auto put_value = [&](const std::string& key, json v) { fields.emplace_back(key, std::move(v)); };
  std::map<std::string, std::string> text;  // overrides for non-partition values

  const std::string& e = a.engine;
  if (e == "rr") {
    if (a.inverse) {
      auto v = ParityVector::parse(a.input);
      auto p = rr_compose(v, need_partition(a.cols, "--cols"));
      put("partition", p);
    } else {
      auto p = Partition::parse(a.input);
      auto d = rr_decompose(p);
      put("partition", p);
      put_value("vector", d.vector.to_string());
      text["vector"] = d.vector.to_string();
      put("evencols", d.evencols, false);
      put("minimal", d.minimal);
      put_value("extraction_order", d.extraction_order);
    }
  } else if (e == "column") {
    auto s = column_extract(Partition::parse(a.input), need(a.n, "--n"), a.gap.value_or(2));
    put("base", s.base);
    put("mu", s.mu);
  } else if (e == "insert") {
    auto base = Partition::parse(a.input);
    put("base", base);
    put("result", column_insert(base, need_partition(a.mu, "--mu")));
  } else if (e == "durfee") {
    if (a.inverse) {
      put("partition", durfee_merge(Partition::parse(a.input), need_partition(a.hat3, "--hat3"),
                                    need(a.side, "--side")));
    } else {
      auto s = durfee_split(Partition::parse(a.input));
      put("hat2", s.hat2);
      put("hat3", s.hat3);
      put_value("side", s.side);
    }
  } else if (e == "parity") {
    if (a.inverse) {
      put("partition", parity_join(Partition::parse(a.input), need_partition(a.even, "--even")));
    } else {
      auto s = parity_split(Partition::parse(a.input));
      put("odd_part", s.odd_part);
      put("even_part", s.even_part);
    }
  } else if (e == "even") {
    if (a.inverse) put("partition", even_insert(Partition::parse(a.input), need(a.k, "--k"), need(a.n, "--n")));
    else put("leftover", even_extract(Partition::parse(a.input), need(a.n, "--n")));
  } else if (e == "vector") {
    if (a.inverse) {
      auto v = minimal_to_vector(Partition::parse(a.input));
      put_value("vector", v.to_string());
      text["vector"] = v.to_string();
    } else {
      auto v = ParityVector::parse(a.input);
      put("minimal", vector_to_minimal(v));
      put("intermediate_columns", intermediate_columns(v), false);
    }
  } else if (e == "box") {
    if (a.inverse) {
      auto u = hooks_unfold(Partition::parse(a.input), need(a.n, "--n"), need(a.k, "--k"));
      put_value("vector", u.vector.to_string());
      text["vector"] = u.vector.to_string();
      put("cols", u.cols, false);
      put_value("hooks", hooks_json(u.hooks));
      text["hooks"] = hooks_text(u.hooks);
    } else {
      auto v = ParityVector::parse(a.input);
      auto cols = need_partition(a.cols, "--cols");
      auto h = hooks_of(v, cols);
      put_value("hooks", hooks_json(h));
      text["hooks"] = hooks_text(h);
      put("box", hooks_fold(v, cols));
    }
  } else {
    throw UsageError("unknown engine '" + e + "'");
  }

  if (g.json()) {
    json out = {{"engine", e}, {"inverse", a.inverse}};
    for (auto& [k, v] : fields) out[k] = v;
    if (a.render) {
      json r = json::object();
      for (const auto& [k, p] : drawn) r[k] = render_two_modular(p);
      out["render"] = r;
    }
    emit(out);
    return 0;
  }
  for (const auto& [k, v] : fields) {
    std::cout << k << ": ";
    if (text.count(k)) std::cout << text[k] << "\n";
    else if (std::find(partition_keys.begin(), partition_keys.end(), k) != partition_keys.end())
      std::cout << Partition(v.get<std::vector<int>>()) << "\n";
    else std::cout << v.dump() << "\n";
  }
  if (a.render)
    for (const auto& [k, p] : drawn) {
      std::cout << "\n" << k << " " << p << "\n";
      for (const auto& line : render_two_modular(p)) std::cout << "  " << line << "\n";
    }
  return 0;
}

// ---------------------------------------------------------------- verify

int run_verify(const Global& g, const std::string& name, const Params& given, std::optional<long> T,
               const std::string& mutate, bool oracle) {
  const auto& d = describe(name);
  VerifyOptions opt;
  if (mutate == "thm4") opt.drop_thm4_correction = true;
  else if (!mutate.empty()) throw UsageError("unknown mutation '" + mutate + "'");
  const unsigned trunc = trunc_or_default(d, T);
  auto r = oracle ? oracle_check(name, given, trunc) : verify(name, given, trunc, opt);
  if (g.json()) {
    emit(to_json(r));
  } else {
    std::cout << r.name << params_text(r.params);
    if (r.trunc) std::cout << " T=" << *r.trunc;
    std::cout << ": " << (r.pass ? "pass" : "FAIL") << "\n";
    if (r.witness)
      std::cout << "  first difference at " << r.witness->mono.to_string() << ": "
                << r.witness->lhs_side << "=" << r.witness->lhs.get_str() << " "
                << r.witness->rhs_side << "=" << r.witness->rhs.get_str() << "\n";
    for (const auto& n : r.notes) std::cout << "  note: " << n << "\n";
  }
  return r.pass ? 0 : 1;
}

// ----------------------------------------------------------------- suite

unsigned threads_from_env() {
  if (const char* env = std::getenv("QPART_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw UsageError("QPART_THREADS must be a positive integer");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int run_suite_cmd(const Global& g, const std::string& profile, const std::string& mutate,
                  bool empty_catalog, bool timing, const std::vector<int>& only) {
  SuiteOptions o;
  o.profile = parse_profile(profile);
  if (g.seed) o.seed = *g.seed;
  o.threads = threads_from_env();
  o.only = only;
  o.empty_catalog = empty_catalog;
  if (mutate == "thm4") o.mutate_thm4 = true;
  else if (!mutate.empty()) throw UsageError("unknown mutation '" + mutate + "'");
  auto r = run_suite(o);
  if (g.json()) {
    emit(to_json(r, timing));
  } else {
    int passed = 0;
    for (const auto& c : r.criteria) {
      passed += c.pass;
      std::cout << (c.pass ? "PASS" : "FAIL") << " " << c.id << ". " << c.title << " (" << c.checks
                << " checks";
      if (timing) std::cout << ", " << c.seconds << " s";
      std::cout << ")\n";
      for (const auto& f : c.failures) std::cout << "     " << f << "\n";
    }
    std::cout << "suite " << profile << ": " << passed << "/" << r.criteria.size()
              << " criteria pass\n";
  }
  return r.pass() ? 0 : 1;
}

// --------------------------------------------------------------- catalog

int run_catalog(const Global& g, bool as_json) {
  if (as_json || g.json()) {
    emit(catalog_json());
    return 0;
  }
  for (const auto& d : catalog()) {
    std::cout << d.name << " [" << kind_name(d.kind) << "]";
    for (const auto& p : d.params)
      std::cout << " " << p.name << " in " << p.min << ".." << p.max << " (default " << p.fallback << ")";
    std::cout << "\n  " << d.anchor << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-series identities and partition bijections"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "seed for randomized checks");

  // expand
  auto* expand = app.add_subcommand("expand", "expand the sides of a catalog identity");
  std::string ex_name, ex_side = "all";
  std::optional<long> ex_T;
  ParamFlags ex_params;
  expand->add_option("identity", ex_name)->required();
  expand->add_option("--side", ex_side, "L, M, R or all");
  expand->add_option("--T", ex_T, "truncation order in q");
  ex_params.attach(expand);

  // enumerate
  auto* en = app.add_subcommand("enumerate", "list partitions of n");
  EnumerateArgs en_args;
  en->add_option("--n", en_args.n)->required();
  en->add_option("--set", en_args.set, "all, rr, distinct or distinct_even");
  en->add_option("--parts", en_args.parts, "exact number of parts");
  en->add_option("--min-part", en_args.min_part);
  en->add_option("--max-part", en_args.max_part);
  en->add_option("--min-parts", en_args.min_parts);
  en->add_option("--max-parts", en_args.max_parts);
  en->add_option("--parity", en_args.parity, "any, odd or even parts only");

  // biject
  auto* bj = app.add_subcommand("biject", "run a bijection on one input");
  BijectArgs bj_args;
  bj->add_option("engine", bj_args.engine, "rr, column, insert, durfee, parity, even, vector, box")
      ->required();
  bj->add_option("input", bj_args.input, "partition literal or parity vector")->required();
  bj->add_option("--n", bj_args.n);
  bj->add_option("--k", bj_args.k);
  bj->add_option("--gap", bj_args.gap);
  bj->add_option("--side", bj_args.side);
  bj->add_option("--mu", bj_args.mu);
  bj->add_option("--hat3", bj_args.hat3);
  bj->add_option("--even", bj_args.even);
  bj->add_option("--cols", bj_args.cols);
  bj->add_flag("--inverse", bj_args.inverse, "run the inverse map");
  bj->add_flag("--render", bj_args.render, "draw 2-modular diagrams");

  // verify
  auto* vf = app.add_subcommand("verify", "check one identity");
  std::string vf_name, vf_mutate;
  std::optional<long> vf_T;
  bool vf_oracle = false;
  ParamFlags vf_params;
  vf->add_option("identity", vf_name)->required();
  vf->add_option("--T", vf_T, "truncation order in q");
  vf->add_option("--mutate", vf_mutate, "test hook: thm4");
  vf->add_flag("--oracle", vf_oracle, "compare against partition enumeration");
  vf_params.attach(vf);

  // suite
  auto* st = app.add_subcommand("suite", "run the acceptance criteria");
  std::string st_profile = "quick", st_mutate;
  bool st_empty = false, st_timing = false;
  std::vector<int> st_only;
  st->add_option("profile", st_profile, "quick or full");
  st->add_option("--mutate", st_mutate, "test hook: thm4");
  st->add_flag("--empty-catalog", st_empty, "test hook: run with no criteria");
  st->add_flag("--timing", st_timing, "include wall times");
  st->add_option("--only", st_only, "criterion ids");

  // catalog
  auto* ct = app.add_subcommand("catalog", "list the identity catalog");
  bool ct_json = false;
  ct->add_flag("--json", ct_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*expand) return run_expand(g, ex_name, ex_side, ex_params.collect(expand), ex_T);
    if (*en) return run_enumerate(g, en_args);
    if (*bj) return run_biject(g, bj_args);
    if (*vf) return run_verify(g, vf_name, vf_params.collect(vf), vf_T, vf_mutate, vf_oracle);
    if (*st) return run_suite_cmd(g, st_profile, st_mutate, st_empty, st_timing, st_only);
    if (*ct) return run_catalog(g, ct_json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "qpart: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "qpart: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
