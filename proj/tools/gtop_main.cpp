#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gtop/census.hpp"
#include "gtop/docs.hpp"
#include "gtop/verify.hpp"

using gtop::FiniteGroup;
using gtop::GenTopology;
using gtop::GTopGroup;
using gtop::GTSpace;
using gtop::SetFamily;
using gtop::Subset;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitProvenFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitConjectureCounterexample = 3;

Subset parse_elements(const std::string& csv, int n) {
  std::vector<int> xs;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    xs.push_back(std::stoi(item));
  }
  return Subset::of(xs, n);
}

FiniteGroup resolve_group(const std::string& ref) {
  try {
    return gtop::catalog(ref);
  } catch (const gtop::UnknownName&) {
    return gtop::docs::group_from_json(gtop::docs::load_file(ref));
  }
}

GTSpace load_space(const std::string& path) {
  return gtop::docs::space_from_json(gtop::docs::load_file(path));
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw gtop::Error("cannot write " + path);
  out << text;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------
// space
// ---------------------------------------------------------------------------

int cmd_space(const std::string& action, const std::string& file,
              const std::string& set_csv, int point) {
  GTSpace x = load_space(file);
  const int n = x.n();
  if (action == "check") {
    const auto conn = gtop::is_connected(x);
    std::cout << "valid: yes\n";
    std::cout << "carrier: " << n << "\n";
    std::cout << "opens: " << x.t.size() << "\n";
    std::cout << "strong: " << yesno(x.t.strong()) << "\n";
    std::cout << "t2: " << yesno(gtop::is_t2(x)) << "\n";
    std::cout << "regular: " << yesno(gtop::is_regular(x)) << "\n";
    std::cout << "connected: " << yesno(conn.connected);
    if (!conn.connected)
      std::cout << " (separation " << conn.witness->u.to_string() << " | "
                << conn.witness->v.to_string() << ")";
    std::cout << "\n";
    return kExitOk;
  }
  if (action == "interior" || action == "closure") {
    const Subset a = parse_elements(set_csv, n);
    const Subset r =
        action == "interior" ? gtop::interior(x.t, a) : gtop::closure(x.t, a);
    std::cout << r.to_string() << "\n";
    return kExitOk;
  }
  if (action == "connected") {
    const Subset a = set_csv.empty() ? Subset::full(n)
                                     : parse_elements(set_csv, n);
    if (a.is_full()) {
      const auto conn = gtop::is_connected(x);
      std::cout << yesno(conn.connected);
      if (!conn.connected)
        std::cout << " (separation " << conn.witness->u.to_string() << " | "
                  << conn.witness->v.to_string() << ")";
      std::cout << "\n";
    } else {
      std::cout << yesno(gtop::is_connected_subset(x, a)) << "\n";
    }
    return kExitOk;
  }
  if (action == "components") {
    const Subset a = set_csv.empty() ? Subset::full(n)
                                     : parse_elements(set_csv, n);
    if (point >= 0) {
      std::cout << gtop::component_of(x, a, point).to_string() << "\n";
    } else {
      for (const Subset& c : gtop::components_of(x, a))
        std::cout << c.to_string() << "\n";
    }
    return kExitOk;
  }
  throw gtop::Error("unknown space action: " + action);
}

// ---------------------------------------------------------------------------
// group
// ---------------------------------------------------------------------------

int cmd_group(const std::string& action, const std::string& ref,
              const std::string& h_csv) {
  FiniteGroup g = resolve_group(ref);
  if (action == "check") {
    std::cout << "valid: yes\n";
    std::cout << "order: " << g.order() << "\n";
    std::cout << "identity: " << g.identity() << "\n";
    std::cout << "abelian: " << yesno(gtop::is_abelian(g)) << "\n";
    return kExitOk;
  }
  if (action == "subgroups") {
    for (const Subset& h :
         gtop::subgroups(g, std::max(gtop::kSubgroupEnumerationCap,
                                     g.order())))
      std::cout << h.to_string() << (gtop::is_normal(g, h) ? " normal" : "")
                << "\n";
    return kExitOk;
  }
  if (action == "cosets") {
    const Subset h = parse_elements(h_csv, g.order());
    for (const Subset& c : gtop::left_cosets(g, h))
      std::cout << c.to_string() << "\n";
    return kExitOk;
  }
  throw gtop::Error("unknown group action: " + action);
}

// ---------------------------------------------------------------------------
// tg
// ---------------------------------------------------------------------------

int cmd_tg(const std::string& action, const std::string& group_ref,
           const std::string& topology_file, const std::string& set_csv,
           const std::string& h_csv, int point) {
  FiniteGroup g = resolve_group(group_ref);
  GTSpace x = load_space(topology_file);
  gtop::Diagnosis d = gtop::check_gtop_group(g, x.t);
  if (action == "check") {
    std::cout << "t2: " << yesno(d.t2) << "\n";
    std::cout << "multiplication continuous: " << yesno(d.mult_continuous);
    if (d.mult_witness)
      std::cout << " (fails at " << d.mult_witness->x << "*"
                << d.mult_witness->y << " in "
                << d.mult_witness->open_set.to_string() << ")";
    std::cout << "\n";
    std::cout << "inversion continuous: " << yesno(d.inv_continuous);
    if (d.inv_witness)
      std::cout << " (fails at " << d.inv_witness->to_string() << ")";
    std::cout << "\n";
    std::cout << "certified: " << yesno(d.certified()) << "\n";
    if (d.certified())
      std::cout << "discrete: " << yesno(d.instance->is_discrete()) << "\n";
    return d.certified() ? kExitOk : kExitInputError;
  }
  if (!d.certified())
    throw gtop::Error("instance does not certify as a topological group");
  const GTopGroup& G = *d.instance;
  if (action == "component") {
    const int p = point >= 0 ? point : G.identity();
    std::cout << gtop::component_of(G.space(), Subset::full(G.order()), p)
                     .to_string()
              << "\n";
    return kExitOk;
  }
  if (action == "closure-subgroup") {
    const Subset h = parse_elements(h_csv, G.order());
    std::cout << gtop::closure_subgroup(G, h).to_string() << "\n";
    return kExitOk;
  }
  if (action == "expand") {
    const Subset u = parse_elements(set_csv, G.order());
    const auto r = gtop::word_expansion(G, u);
    std::cout << r.reached.to_string() << " stabilized at step " << r.steps
              << "\n";
    return kExitOk;
  }
  throw gtop::Error("unknown tg action: " + action);
}

// ---------------------------------------------------------------------------
// census
// ---------------------------------------------------------------------------

int cmd_census_topologies(int n, const std::string& filter, bool count_only,
                          bool up_to_relabeling, const std::string& out) {
  gtop::census::TopologyFilter f = gtop::census::TopologyFilter::All;
  if (filter == "strong") f = gtop::census::TopologyFilter::Strong;
  else if (filter == "t2") f = gtop::census::TopologyFilter::T2;
  else if (filter != "all")
    throw gtop::Error("unknown filter: " + filter);
  const auto tops = gtop::census::enumerate_topologies(n, f);
  if (count_only) {
    std::cout << gtop::census::canonical_count(tops, up_to_relabeling) << "\n";
    return kExitOk;
  }
  std::ostringstream buf;
  for (const GenTopology& t : tops)
    buf << gtop::docs::dump_line(gtop::docs::space_to_json(GTSpace(t)))
        << "\n";
  buf << gtop::docs::dump_line(json{{"summary", true},
                                    {"count", tops.size()},
                                    {"n", n},
                                    {"filter", filter}})
      << "\n";
  write_output(out, buf.str());
  return kExitOk;
}

int cmd_census_search(const std::string& group_ref,
                      const std::string& strategy, std::uint64_t budget,
                      std::uint64_t seed, bool seed_given, bool count_only,
                      const std::string& out) {
  FiniteGroup g = resolve_group(group_ref);
  const auto strat = gtop::census::strategy_from_name(strategy);
  if (strat == gtop::census::SearchStrategy::RandomBase && !seed_given)
    throw gtop::Error("--seed is mandatory for the random-base strategy");
  auto stream = gtop::census::search_compatible(g, strat, budget, seed);
  if (count_only) {
    std::cout << stream.stats().yielded << "\n";
    return kExitOk;
  }
  std::ostringstream buf;
  for (const GTopGroup& inst : stream.all())
    buf << gtop::docs::dump_line(gtop::docs::instance_to_json(inst)) << "\n";
  buf << gtop::docs::dump_line(
             json{{"summary", true},
                  {"group", group_ref},
                  {"strategy", strategy},
                  {"candidates", stream.stats().candidates},
                  {"instances", stream.stats().yielded},
                  {"budget", budget},
                  {"budget_exhausted", stream.stats().budget_exhausted},
                  {"seed", seed}})
      << "\n";
  write_output(out, buf.str());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct SourceResult {
  std::vector<gtop::verify::GroupInstance> instances;
  gtop::census::StreamDescriptor desc;
  gtop::census::StreamStats stats;
};

SourceResult build_source(const std::string& source_ref, std::uint64_t budget,
                          std::uint64_t seed, bool seed_given) {
  SourceResult out;
  out.desc.source = source_ref;
  out.desc.budget = budget;
  out.desc.seed = seed;

  auto add_discrete = [&](const std::string& name) {
    GTopGroup inst = gtop::discrete_instance(gtop::catalog(name));
    out.instances.push_back({inst, "discrete:" + name});
    ++out.stats.candidates;
    ++out.stats.yielded;
  };

  if (source_ref.rfind("discrete:", 0) == 0) {
    const std::string arg = source_ref.substr(9);
    out.desc.strategy = "discrete";
    if (arg == "catalog") {
      for (const std::string& name : gtop::catalog_names()) add_discrete(name);
    } else {
      add_discrete(arg);
    }
    return out;
  }
  if (source_ref.rfind("exhaustive:", 0) == 0) {
    const int n = std::stoi(source_ref.substr(11));
    out.desc.strategy = "exhaustive";
    auto stream = gtop::census::search_compatible(
        gtop::catalog("cyclic(" + std::to_string(n) + ")"),
        gtop::census::SearchStrategy::Exhaustive, budget, seed);
    out.instances = gtop::verify::label_stream(stream, source_ref);
    out.stats = stream.stats();
    return out;
  }
  if (source_ref.rfind("search:", 0) == 0) {
    // search:GROUP[:STRATEGY]
    std::string rest = source_ref.substr(7);
    std::string strategy = "coset-orbit";
    const auto colon = rest.rfind(':');
    if (colon != std::string::npos &&
        (rest.substr(colon + 1) == "exhaustive" ||
         rest.substr(colon + 1) == "coset-orbit" ||
         rest.substr(colon + 1) == "random-base")) {
      strategy = rest.substr(colon + 1);
      rest = rest.substr(0, colon);
    }
    const auto strat = gtop::census::strategy_from_name(strategy);
    if (strat == gtop::census::SearchStrategy::RandomBase && !seed_given)
      throw gtop::Error("--seed is mandatory for the random-base strategy");
    out.desc.strategy = strategy;
    auto stream =
        gtop::census::search_compatible(resolve_group(rest), strat, budget,
                                        seed);
    out.instances = gtop::verify::label_stream(stream, source_ref);
    out.stats = stream.stats();
    return out;
  }
  // fall back to a file of instance documents (one per line, or an array)
  out.desc.strategy = "file";
  std::ifstream in(source_ref);
  if (!in) throw gtop::ParseError("cannot open " + source_ref);
  std::string line;
  std::size_t idx = 0;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    json doc = gtop::docs::parse_text(line, source_ref + ":" +
                                                std::to_string(lineno));
    if (doc.is_object() && doc.contains("summary")) continue;
    GTopGroup inst = gtop::docs::instance_from_json(doc);
    out.instances.push_back({inst, source_ref + "#" + std::to_string(idx++)});
    ++out.stats.candidates;
    ++out.stats.yielded;
  }
  return out;
}

std::vector<std::string> select_theorems(const std::string& selector) {
  if (selector == "all") return gtop::verify::all_theorem_ids();
  if (selector == "proven") return gtop::verify::proven_theorem_ids();
  if (selector == "conjectures")
    return gtop::verify::conjecture_theorem_ids();
  std::vector<std::string> ids;
  std::stringstream ss(selector);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) ids.push_back(gtop::verify::lookup(item).id);
  if (ids.empty()) throw gtop::Error("no theorems selected");
  return ids;
}

int cmd_verify(const std::string& selector, const std::string& source,
               const std::string& report_path, std::uint64_t budget,
               std::uint64_t seed, bool seed_given, bool timings,
               bool intersection_hypothesis) {
  const std::vector<std::string> ids = select_theorems(selector);
  SourceResult src = build_source(source, budget, seed, seed_given);

  gtop::verify::RunOptions opts;
  opts.seed = seed;
  opts.require_local_intersection_base = intersection_hypothesis;

  gtop::verify::Report report;
  try {
    report = gtop::verify::sweep(ids, src.instances, src.desc, src.stats,
                                 opts);
  } catch (const std::exception& e) {
    std::cerr << "sweep aborted: " << e.what() << "\n";
    return kExitProvenFailure;
  }

  for (const auto& tally : report.tallies) {
    std::cout << tally.id << " holds=" << tally.holds
              << " fails=" << tally.fails << " skipped=" << tally.skipped;
    if (!tally.witnesses.empty())
      std::cout << " witness=" << tally.witnesses.front().dump();
    std::cout << "\n";
  }
  const json doc = gtop::verify::report_to_json(report, timings);
  if (!report_path.empty())
    write_output(report_path, gtop::docs::dump_pretty(doc));
  std::cout << "instances=" << report.instances
            << " checks=" << report.checks
            << " exit=" << gtop::verify::exit_code(report) << "\n";
  return gtop::verify::exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite workbench for generalized topological groups"};
  app.set_help_flag("--help", "print help");  // frees -h for the --h flag
  app.require_subcommand(1);

  // space
  auto* space = app.add_subcommand("space", "inspect a space document");
  std::string space_action, space_file, space_set;
  int space_point = -1;
  space->add_option("action", space_action,
                    "check|interior|closure|connected|components")
      ->required();
  space->add_option("file", space_file, "space document")->required();
  space->add_option("--set", space_set, "comma-separated elements");
  space->add_option("--point", space_point, "carrier point");

  // group
  auto* group = app.add_subcommand("group", "inspect a group");
  std::string group_action, group_ref, group_h;
  group->add_option("action", group_action, "check|subgroups|cosets")
      ->required();
  group->add_option("group", group_ref, "group document or catalog name")
      ->required();
  group->add_option("--h", group_h, "subgroup elements");

  // tg
  auto* tg = app.add_subcommand("tg", "certified topological-group commands");
  std::string tg_action, tg_group, tg_topology, tg_set, tg_h;
  int tg_point = -1;
  tg->add_option("action", tg_action,
                 "check|component|closure-subgroup|expand")
      ->required();
  tg->add_option("--group", tg_group, "group document or catalog name")
      ->required();
  tg->add_option("--topology", tg_topology, "space document")->required();
  tg->add_option("--set", tg_set, "comma-separated elements");
  tg->add_option("--h", tg_h, "subgroup elements");
  tg->add_option("--point", tg_point, "carrier point");

  // census
  auto* census = app.add_subcommand("census", "enumeration and search");
  census->require_subcommand(1);
  auto* topo = census->add_subcommand("topologies", "enumerate topologies");
  int census_n = 1;
  std::string census_filter = "all", census_out;
  bool census_count_only = false, census_relabel = false;
  topo->add_option("-n", census_n, "carrier size")->required();
  topo->add_option("--filter", census_filter, "all|strong|t2");
  topo->add_flag("--count-only", census_count_only, "print only the count");
  topo->add_flag("--up-to-relabeling", census_relabel,
                 "count classes under carrier relabeling");
  topo->add_option("--out", census_out, "output file");

  auto* search = census->add_subcommand("search", "search compatible "
                                                  "topologies");
  std::string search_group, search_strategy = "coset-orbit", search_out;
  std::uint64_t search_budget = 10000, search_seed = 0;
  bool search_count_only = false;
  search->add_option("--group", search_group, "group document or catalog name")
      ->required();
  search->add_option("--strategy", search_strategy,
                     "exhaustive|coset-orbit|random-base");
  search->add_option("--budget", search_budget, "candidate budget");
  auto* seed_opt = search->add_option("--seed", search_seed, "random seed");
  search->add_flag("--count-only", search_count_only, "print only the count");
  search->add_option("--out", search_out, "output file");

  // verify
  auto* verify = app.add_subcommand("verify", "run theorem sweeps");
  std::string verify_theorem = "all", verify_source, verify_report;
  std::uint64_t verify_budget = 10000, verify_seed = 0;
  bool verify_timings = false, verify_hyp = false;
  verify->add_option("--theorem", verify_theorem,
                     "theorem id list, all, proven or conjectures");
  verify->add_option("--source", verify_source,
                     "discrete:catalog | discrete:NAME | exhaustive:N | "
                     "search:GROUP[:STRATEGY] | instance file")
      ->required();
  verify->add_option("--report", verify_report, "report output file");
  verify->add_option("--budget", verify_budget, "search budget");
  auto* vseed_opt = verify->add_option("--seed", verify_seed, "random seed");
  verify->add_flag("--timings", verify_timings,
                   "include runtime in the report (breaks byte determinism)");
  verify->add_flag("--with-intersection-hypothesis", verify_hyp,
                   "restrict T12/T13 to locally intersection-closed "
                   "identity neighborhoods");

  CLI11_PARSE(app, argc, argv);

  try {
    if (space->parsed())
      return cmd_space(space_action, space_file, space_set, space_point);
    if (group->parsed()) return cmd_group(group_action, group_ref, group_h);
    if (tg->parsed())
      return cmd_tg(tg_action, tg_group, tg_topology, tg_set, tg_h, tg_point);
    if (census->parsed()) {
      if (topo->parsed())
        return cmd_census_topologies(census_n, census_filter,
                                     census_count_only, census_relabel,
                                     census_out);
      return cmd_census_search(search_group, search_strategy, search_budget,
                               search_seed, seed_opt->count() > 0,
                               search_count_only, search_out);
    }
    if (verify->parsed())
      return cmd_verify(verify_theorem, verify_source, verify_report,
                        verify_budget, verify_seed, vseed_opt->count() > 0,
                        verify_timings, verify_hyp);
  } catch (const gtop::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
