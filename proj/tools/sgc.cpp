#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sgc/catalog.hpp"
#include "sgc/conditions.hpp"
#include "sgc/ideals.hpp"
#include "sgc/ktheory.hpp"
#include "sgc/oracles.hpp"
#include "sgc/semilattice.hpp"
#include "sgc/testing/properties.hpp"

namespace {

using sgc::Json;

constexpr int kOk = 0;
constexpr int kViolated = 2;
constexpr int kUnknown = 3;
constexpr int kUsage = 64;
constexpr int kInternal = 70;

struct RunConfig {
  std::string semigroup;
  std::string ambient;
  std::size_t depth = 3;
  std::size_t L = 0;
  long long budget = 2000;
  std::size_t family = 3;
  std::string format = "human";
  std::uint64_t seed = sgc::testing::kDefaultSeed;

  bool json() const { return format == "json"; }
  sgc::CheckOptions options() const {
    sgc::CheckOptions o;
    o.depth = depth;
    o.L = L;
    o.budget = budget;
    o.family_size = family;
    return o;
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* app, RunConfig& c, bool needs_semigroup = true) {
  auto* s = app->add_option("--semigroup", c.semigroup, "catalog name, .pres file or .graph file");
  if (needs_semigroup) s->required();
  app->add_option("--ambient", c.ambient, "group oracle (default: the entry's own)");
  app->add_option("--depth", c.depth, "chain depth")->check(CLI::PositiveNumber);
  app->add_option("--max-word-len", c.L, "word length bound L (0: per-command default)");
  app->add_option("--budget", c.budget, "search budget")->check(CLI::PositiveNumber);
  app->add_option("--family-size", c.family, "family size for boundary-eq")->check(CLI::PositiveNumber);
  app->add_option("--format", c.format, "human or json")->check(CLI::IsMember({"human", "json"}));
}

/// Files are accepted in place of catalog names.
sgc::CatalogEntry resolve(const std::string& source) {
  namespace fs = std::filesystem;
  if (fs::is_regular_file(source)) {
    auto ext = fs::path(source).extension().string();
    if (ext == ".pres") return sgc::catalog_instance("pres:" + source);
    if (ext == ".graph") return sgc::catalog_instance("raam:" + source);
    throw UsageError("cannot tell the kind of '" + source + "' (expected .pres or .graph)");
  }
  return sgc::catalog_instance(source);
}

const sgc::MonoidBackend& backend(const sgc::CatalogEntry& e) {
  if (!e.backend) throw UsageError(e.name + " has no word backend");
  return *e.backend;
}

std::string lines(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += s + "\n";
  return out;
}

int exit_for(sgc::Status s) {
  if (s == sgc::Status::Violated) return kViolated;
  if (s == sgc::Status::Unknown) return kUnknown;
  return kOk;
}

void print_verdict(const sgc::CheckVerdict& v, const RunConfig& c) {
  if (c.json()) {
    std::cout << v.to_json().dump(2) << "\n";
    return;
  }
  std::cout << "condition: " << v.condition << "\n"
            << "semigroup: " << v.semigroup << "\n";
  if (!v.ambient.empty()) std::cout << "ambient: " << v.ambient << "\n";
  std::cout << "status: " << sgc::to_string(v.status) << "\n";
  if (!v.certificate.empty()) std::cout << "certificate: " << v.certificate.dump() << "\n";
  std::cout << "bounds: " << v.bounds.dump() << "\n"
            << "citations: " << sgc::join(v.citations, ", ") << "\n";
  if (!v.note.empty()) std::cout << "note: " << v.note << "\n";
}

// ---------------------------------------------------------------------------
// word

int cmd_word(const std::string& op, const std::vector<std::string>& words, const RunConfig& c) {
  if (!c.ambient.empty() && (c.semigroup.empty() || op == "reduce")) {
    auto o = sgc::make_oracle(c.ambient);
    if (op == "reduce") {
      if (words.size() != 1) throw UsageError("word reduce takes one word");
      auto nf = o->normal_form(o->parse(words[0]));
      if (c.json())
        std::cout << Json{{"ambient", o->name()}, {"word", words[0]}, {"normal_form", nf}}.dump(2) << "\n";
      else
        std::cout << nf << "\n";
      return kOk;
    }
    if (words.size() != 2) throw UsageError("word eq takes two words");
    bool eq = o->eq(o->parse(words[0]), o->parse(words[1]));
    std::string st = eq ? "Equal" : "NotEqual";
    if (c.json())
      std::cout << Json{{"ambient", o->name()}, {"u", words[0]}, {"v", words[1]}, {"status", st}}.dump(2) << "\n";
    else
      std::cout << st << "\n";
    return kOk;
  }
  if (c.semigroup.empty()) throw UsageError("word needs --semigroup or --ambient");
  auto e = resolve(c.semigroup);
  const auto& m = backend(e);
  if (op == "reduce") {
    if (words.size() != 1) throw UsageError("word reduce takes one word");
    auto nf = m.format(m.parse(words[0]));
    if (c.json())
      std::cout << Json{{"semigroup", e.name}, {"word", words[0]}, {"normal_form", nf}}.dump(2) << "\n";
    else
      std::cout << nf << "\n";
    return kOk;
  }
  if (words.size() != 2) throw UsageError("word eq takes two words");
  Json out{{"semigroup", e.name}, {"u", words[0]}, {"v", words[1]}};
  int code = kOk;
  if (e.presentation && !m.graph()) {
    auto u = e.presentation->parse_word(words[0]), v = e.presentation->parse_word(words[1]);
    auto r = sgc::decide_equal_rr(u, v, *e.presentation, c.budget);
    std::string st = r.status == sgc::EqualityStatus::Equal ? "Equal"
                     : r.exhausted_search                   ? "NotEqual"
                                                            : std::string(sgc::to_string(r.status));
    if (st != "Equal" && st != "NotEqual") code = kUnknown;
    out["status"] = st;
    out["method"] = "reversing";
    out["path_length"] = r.path.size();
    out["expanded"] = r.expanded;
  } else {
    out["status"] = m.parse(words[0]) == m.parse(words[1]) ? "Equal" : "NotEqual";
    out["method"] = "normal form";
  }
  if (c.json())
    std::cout << out.dump(2) << "\n";
  else
    std::cout << out["status"].get<std::string>() << "\n";
  return code;
}

// ---------------------------------------------------------------------------
// ideals

int cmd_ideals(const RunConfig& c) {
  auto e = resolve(c.semigroup);
  const auto& m = backend(e);
  sgc::EnumerationOptions eo;
  eo.depth = c.depth;
  eo.sample_length = c.L;
  eo.budget = c.budget;
  auto en = sgc::enumerate_ideals(m, eo);
  Json out{{"semigroup", e.name}, {"depth", en.depth}, {"L", en.sample_length}, {"exact", en.exact},
           {"partial", en.partial}};
  Json ideals = Json::array();
  for (const auto& X : en.ideals) {
    Json j{{"id", X.id}, {"chain", sgc::format_hull(X.chain, m)}};
    if (X.principal_up_to_L) j["principal_up_to_L"] = m.format(*X.principal_up_to_L);
    ideals.push_back(j);
  }
  out["ideals"] = ideals;
  Json unresolved = Json::array();
  for (const auto& u : en.unresolved)
    unresolved.push_back({{"same_bits_as", en.ideals[u.kept].id}, {"chain", sgc::format_hull(u.chain, m)}});
  out["unresolved"] = unresolved;
  if (c.json()) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << e.name << ": " << en.ideals.size() << " ideals at depth " << en.depth << " (L = " << en.sample_length
              << (en.exact ? ", exact" : "") << (en.partial ? ", partial" : "") << ")\n";
    for (const auto& X : out["ideals"]) {
      std::cout << "  " << X["id"].get<std::string>() << "    <- " << X["chain"].get<std::string>();
      if (X.contains("principal_up_to_L")) std::cout << "    [= " << X["principal_up_to_L"].get<std::string>() << "*P up to L]";
      std::cout << "\n";
    }
    for (const auto& u : unresolved)
      std::cout << "  unresolved: " << u["chain"].get<std::string>() << " agrees with " << u["same_bits_as"].get<std::string>()
                << " up to L\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// check

struct CheckArgs {
  std::string side = "left";
  std::string g, p, q, second;
};

int cmd_check(const std::string& condition, const CheckArgs& a, const RunConfig& c) {
  auto e = resolve(c.semigroup);
  auto o = c.options();
  sgc::CheckVerdict v;
  if (condition == "independence") {
    v = sgc::check_independence(e, o);
  } else if (condition == "toeplitz") {
    sgc::ToeplitzQuery q;
    const auto& m = backend(e);
    if (!a.g.empty()) q.g = sgc::detail::parse_group(sgc::detail::bind_ambient(e, c.ambient), a.g);
    if (!a.p.empty()) q.p = m.parse(a.p);
    if (!a.q.empty()) q.q = m.parse(a.q);
    if (!a.second.empty()) q.second = m.parse(a.second);
    if (!q.g && !(q.p && q.q)) throw UsageError("toeplitz needs --g or both --p and --q");
    v = sgc::check_toeplitz(e, c.ambient, q, o);
  } else if (condition == "quasi-lattice") {
    if (a.g.empty()) throw UsageError("quasi-lattice needs --g");
    v = sgc::check_quasi_lattice(e, c.ambient, sgc::detail::parse_group(sgc::detail::bind_ambient(e, c.ambient), a.g), o);
  } else if (condition == "reversibility") {
    v = sgc::check_reversibility(e, a.side, o);
  } else if (condition == "boundary-eq") {
    v = sgc::check_omega_equals_boundary(e, o);
  } else if (condition == "pure-infinite") {
    v = sgc::check_pure_infiniteness(e, o);
  } else if (condition == "g0") {
    v = sgc::check_g0(e, c.ambient, o);
  } else {
    throw UsageError("unknown condition '" + condition + "'");
  }
  print_verdict(v, c);
  return exit_for(v.status);
}

// ---------------------------------------------------------------------------
// boundary

Json character_json(const sgc::FiniteSemilattice& E, const sgc::Character& ch) {
  Json j = Json::array();
  for (auto i : ch.members()) j.push_back(E.elements[i]);
  return j;
}

int cmd_boundary(const std::string& dump_in, bool emit_dump, const RunConfig& c) {
  sgc::FiniteSemilattice E;
  std::string source;
  if (!dump_in.empty()) {
    E = sgc::FiniteSemilattice::parse(Json::parse(sgc::detail::read_file(dump_in)));
    source = dump_in;
  } else {
    if (c.semigroup.empty()) throw UsageError("boundary needs --semigroup or --dump");
    auto e = resolve(c.semigroup);
    E = sgc::truncated_semilattice(backend(e), c.depth, c.L, c.budget);
    source = e.name;
  }
  if (emit_dump) {
    std::cout << E.dump().dump(2) << "\n";
    return kOk;
  }
  auto chars = sgc::enumerate_characters(E);
  auto mb = sgc::max_and_boundary(E);
  auto omega = sgc::omega_subspace(E);
  auto fails = sgc::chimax_failures(E);
  Json out{{"source", source}, {"depth", E.depth}, {"elements", E.elements}};
  auto arr = [&](const std::vector<sgc::Character>& cs) {
    Json j = Json::array();
    for (const auto& ch : cs) j.push_back(character_json(E, ch));
    return j;
  };
  out["characters"] = arr(chars);
  out["max"] = arr(mb.max);
  out["boundary"] = arr(mb.boundary);
  out["omega"] = arr(omega);
  out["saturated"] = fails.empty();
  out["caveat"] = mb.caveat;
  out["citations"] = Json::array({"chimax=0", "Omega_P-in-hatE"});
  if (c.json()) {
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  auto show = [&](const char* label, const Json& cs) {
    std::cout << label << " (" << cs.size() << "):\n";
    for (const auto& ch : cs) {
      std::vector<std::string> names = ch.get<std::vector<std::string>>();
      std::cout << "  {" << sgc::join(names, ", ") << "}\n";
    }
  };
  std::cout << "semilattice of " << source << ": " << E.size() << " elements"
            << (E.zero ? ", with zero" : ", no zero") << ", " << E.covers.size() << " recorded covers\n";
  show("characters", out["characters"]);
  show("maximal", out["max"]);
  show("boundary", out["boundary"]);
  show("omega", out["omega"]);
  std::cout << (fails.empty() ? "saturated: chimax=0 holds\n" : "non-saturated: chimax=0 fails on this truncation\n")
            << "caveat: " << mb.caveat << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// ktheory

sgc::KDescriptor graph_with_data(const sgc::CatalogEntry& e, const std::string& path) {
  const sgc::GraphSpec* g = e.backend ? e.backend->graph() : nullptr;
  if (!g) throw UsageError("--vertex-data needs a graph product");
  auto j = Json::parse(sgc::detail::read_file(path));
  std::vector<sgc::VertexKData> data(g->size());
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto v = g->id(it.key());
    data[v].orbit_reps = it.value().at("orbit_reps").get<std::vector<std::string>>();
    data[v].stabilizers = it.value().at("stabilizers").get<std::vector<std::string>>();
  }
  return sgc::graph_product_k_index(*g, data, e.units);
}

int cmd_ktheory(const std::string& vertex_data, const RunConfig& c) {
  auto e = resolve(c.semigroup);
  if (!c.ambient.empty() && !e.ambient.empty() && c.ambient != e.ambient)
    throw UsageError("the descriptor needs the Toeplitz embedding into " + e.ambient);
  sgc::KDescriptor d;
  if (!vertex_data.empty())
    d = graph_with_data(e, vertex_data);
  else if (e.principal || !e.backend)
    d = sgc::principal_case_descriptor(e, std::min<std::size_t>(c.depth, 2));
  else
    d = sgc::graph_product_descriptor(e);
  if (c.json()) {
    auto j = d.to_json();
    j["semigroup"] = e.name;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << d.serialize();
    if (!d.note.empty()) std::cout << "note: " << d.note << "\n";
    std::cout << "citations: " << sgc::join(d.citations, ", ") << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// catalog

int cmd_catalog(const std::string& op, const std::string& name, const RunConfig& c) {
  if (op == "list") {
    if (c.json())
      std::cout << Json(sgc::catalog_names()).dump(2) << "\n";
    else
      std::cout << lines(sgc::catalog_names());
    return kOk;
  }
  if (name.empty()) throw UsageError("catalog show needs a name");
  auto e = resolve(name);
  Json j{{"name", e.name},       {"description", e.description}, {"ambient", e.ambient},
         {"complete", e.complete}, {"abelian", e.abelian},         {"principal", e.principal},
         {"units", e.units}};
  if (e.presentation) j["presentation"] = e.presentation->serialize();
  if (e.backend) {
    std::vector<std::string> gens;
    for (std::size_t i = 0; i < e.backend->rank(); ++i) gens.push_back(e.backend->generator_name(i));
    j["generators"] = gens;
  }
  Json notes = Json::array();
  for (const auto& a : e.annotations) notes.push_back({{"key", a.key}, {"fact", a.fact}, {"citation", a.anchor}});
  j["annotations"] = notes;
  if (c.json()) {
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << e.name << ": " << e.description << "\n";
  if (j.contains("generators")) std::cout << "generators: " << sgc::join(j["generators"].get<std::vector<std::string>>(), " ") << "\n";
  if (!e.ambient.empty()) std::cout << "ambient: " << e.ambient << "\n";
  std::cout << "units: " << e.units << "\n";
  for (const auto& a : e.annotations) std::cout << "  " << a.key << ": " << a.fact << " [" << a.anchor << "]\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// replay

int cmd_replay(const std::string& path, const RunConfig& c) {
  std::string text = path == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {}) : sgc::detail::read_file(path);
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& ex) {
    throw UsageError(std::string("report is not structured output: ") + ex.what());
  }
  std::vector<Json> items;
  if (doc.is_array())
    items.assign(doc.begin(), doc.end());
  else if (doc.contains("verdicts"))
    items.assign(doc["verdicts"].begin(), doc["verdicts"].end());
  else
    items.push_back(doc);
  int code = kOk;
  Json out = Json::array();
  for (const auto& it : items) {
    auto v = sgc::CheckVerdict::from_json(it);
    auto got = sgc::replay(v);
    bool same = got == v.status;
    if (!same) code = kUnknown;
    out.push_back({{"condition", v.condition}, {"semigroup", v.semigroup}, {"recorded", sgc::to_string(v.status)},
                   {"replayed", sgc::to_string(got)}, {"match", same}});
  }
  if (c.json()) {
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : out)
      std::cout << (r["match"].get<bool>() ? "reproduced " : "MISMATCH   ") << r["condition"].get<std::string>() << " "
                << r["semigroup"].get<std::string>() << ": " << r["recorded"].get<std::string>() << " -> "
                << r["replayed"].get<std::string>() << "\n";
  }
  return code;
}

// ---------------------------------------------------------------------------
// selftest

int cmd_selftest(const std::string& only, const RunConfig& c) {
  int failed = 0;
  Json out = Json::array();
  for (const auto& p : sgc::testing::property_suite()) {
    if (!only.empty() && p.module != only) continue;
    auto r = sgc::testing::run_property(p, c.seed);
    if (!r.passed) ++failed;
    if (c.json()) {
      out.push_back({{"module", r.module}, {"property", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    } else {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.module << "/" << r.name;
      if (!r.passed) std::cout << ": " << r.detail;
      std::cout << std::endl;
    }
  }
  if (c.json()) std::cout << Json{{"seed", c.seed}, {"failed", failed}, {"results", out}}.dump(2) << "\n";
  return failed ? kInternal : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sgc: constructible ideals, conditions and certificates for left cancellative monoids"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* word = app.add_subcommand("word", "equality and normal forms");
  word->require_subcommand(1);
  std::vector<std::string> words;
  std::string word_op;
  for (const char* op : {"eq", "reduce"}) {
    auto* sub = word->add_subcommand(op, op == std::string("eq") ? "decide u = v" : "print the normal form");
    add_common(sub, cfg, false);
    sub->add_option("words", words, "words in dot notation, e.g. s1.s2^2")->required();
    sub->callback([&word_op, op] { word_op = op; });
  }

  auto* ideals = app.add_subcommand("ideals", "constructible right ideals");
  ideals->require_subcommand(1);
  auto* enumerate = ideals->add_subcommand("enumerate", "enumerate ideals up to chain depth");
  add_common(enumerate, cfg);

  auto* check = app.add_subcommand("check", "run a condition checker");
  check->require_subcommand(1);
  CheckArgs cargs;
  std::string condition;
  for (const char* name : {"independence", "toeplitz", "quasi-lattice", "reversibility", "boundary-eq", "pure-infinite", "g0"}) {
    auto* sub = check->add_subcommand(name);
    add_common(sub, cfg);
    std::string n = name;
    if (n == "toeplitz" || n == "quasi-lattice") sub->add_option("--g", cargs.g, "group element, e.g. a.b^-1");
    if (n == "toeplitz") {
      sub->add_option("--p", cargs.p, "p with g = p q^-1");
      sub->add_option("--q", cargs.q, "q with g = p q^-1");
      sub->add_option("--second", cargs.second, "a further member of P cap gP to argue with");
    }
    if (n == "reversibility") sub->add_option("--side", cargs.side)->check(CLI::IsMember({"left", "right"}));
    sub->callback([&condition, n] { condition = n; });
  }

  auto* boundary = app.add_subcommand("boundary", "characters, maximal characters, boundary and Omega of a truncation");
  add_common(boundary, cfg, false);
  std::string dump_in;
  bool emit_dump = false;
  boundary->add_option("--dump", dump_in, "read a semilattice dump instead of enumerating");
  boundary->add_flag("--emit-dump", emit_dump, "print the semilattice dump and stop");

  auto* ktheory = app.add_subcommand("ktheory", "K-theory index set and stabilizers");
  add_common(ktheory, cfg);
  std::string vertex_data;
  ktheory->add_option("--vertex-data", vertex_data, "JSON file of per-vertex orbit data");

  auto* catalog = app.add_subcommand("catalog", "built-in examples");
  catalog->require_subcommand(1);
  std::string catalog_op, catalog_name;
  auto* list = catalog->add_subcommand("list");
  auto* show = catalog->add_subcommand("show");
  list->add_option("--format", cfg.format)->check(CLI::IsMember({"human", "json"}));
  show->add_option("name", catalog_name)->required();
  show->add_option("--format", cfg.format)->check(CLI::IsMember({"human", "json"}));
  list->callback([&] { catalog_op = "list"; });
  show->callback([&] { catalog_op = "show"; });

  auto* replay = app.add_subcommand("replay", "re-verify the certificates in a structured report");
  std::string report;
  replay->add_option("report", report, "report file, - for stdin")->required();
  replay->add_option("--format", cfg.format)->check(CLI::IsMember({"human", "json"}));

  auto* selftest = app.add_subcommand("selftest", "run the property suite");
  std::string only;
  selftest->add_option("--seed", cfg.seed, "seed for randomized properties");
  selftest->add_option("--module", only, "restrict to one module");
  selftest->add_option("--format", cfg.format)->check(CLI::IsMember({"human", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*word) return cmd_word(word_op, words, cfg);
    if (*ideals) return cmd_ideals(cfg);
    if (*check) return cmd_check(condition, cargs, cfg);
    if (*boundary) return cmd_boundary(dump_in, emit_dump, cfg);
    if (*ktheory) return cmd_ktheory(vertex_data, cfg);
    if (*catalog) return cmd_catalog(catalog_op, catalog_name, cfg);
    if (*replay) return cmd_replay(report, cfg);
    if (*selftest) return cmd_selftest(only, cfg);
  } catch (const sgc::InvariantError& e) {
    std::cerr << "sgc: invariant breach: " << e.what() << "\n";
    return kInternal;
  } catch (const sgc::BudgetError& e) {
    std::cerr << "sgc: budget exhausted: " << e.what() << "\n";
    return kUnknown;
  } catch (const UsageError& e) {
    std::cerr << "sgc: " << e.what() << "\n";
    return kUsage;
  } catch (const sgc::Error& e) {
    std::cerr << "sgc: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "sgc: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
