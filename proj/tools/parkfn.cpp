// parkfn: batch front end for counting, enumerating, sampling and verifying
// parking functions, labeled forests and their statistics.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "parkfn/colored.hpp"
#include "parkfn/dist.hpp"
#include "parkfn/forest.hpp"
#include "parkfn/identities.hpp"
#include "parkfn/involutions.hpp"
#include "parkfn/json_io.hpp"
#include "parkfn/sampler.hpp"

using json = nlohmann::json;
using namespace parkfn;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUnequal = 2;

struct OutputSink {
  std::ofstream file;
  std::ostream* os = &std::cout;

  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw BadParameter("cannot open output file: " + path);
    os = &file;
  }
  std::ostream& stream() { return *os; }
};

std::uint64_t default_cap() {
  if (const char* env = std::getenv("PARKFN_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw BadParameter("PARKFN_CAP is not a non-negative integer");
    }
  }
  return kDefaultEnumerationCap;
}

std::vector<int> parse_tuple(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') throw ParseError("unbalanced parentheses in tuple");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw ParseError("bad tuple entry: " + item);
    }
  }
  if (out.empty()) throw ParseError("empty preference tuple");
  return out;
}

// Accepts the JSON object encoding or a parenthesized comma tuple. A raw tuple
// is typed by --a/--b when given, by --n otherwise, defaulting to classical
// square parameters.
ParkingFunction parse_pf(const std::string& text, std::optional<int> n, std::optional<int> a,
                         std::optional<int> b) {
  std::string trimmed = text;
  trimmed.erase(0, trimmed.find_first_not_of(" \t"));
  if (!trimmed.empty() && trimmed.front() == '{') {
    return parking_function_from_json(json::parse(trimmed, nullptr, true));
  }
  std::vector<int> prefs = parse_tuple(trimmed);
  int m = static_cast<int>(prefs.size());
  if (a || b) {
    if (!a || !b) throw BadParameter("raw (a,b) input needs both --a and --b");
    return ParkingFunction(ABParams{*a, *b, m}, std::move(prefs));
  }
  return ParkingFunction(PFParams{m, n.value_or(m)}, std::move(prefs));
}

json params_json(const IdentityParams& p) {
  json j = json::object();
  if (p.m) j["m"] = p.m;
  if (p.n) j["n"] = p.n;
  if (p.a) j["a"] = p.a;
  if (p.b) j["b"] = p.b;
  if (p.k) j["k"] = p.k;
  if (p.s) j["s"] = *p.s;
  if (p.t) j["t"] = *p.t;
  return j;
}

// ------------------------------------------------------------------ count

struct CountArgs {
  std::string family = "pf";
  int m = 0, n = 0, a = 0, b = 0;
  int workers = 1;
  std::uint64_t cap = 0;
  std::string format = "json";
  std::string output;
};

int run_count(const CountArgs& args) {
  OutputSink sink;
  sink.open(args.output);
  BigInt count;
  json j;
  j["family"] = args.family;
  if (args.family == "pf") {
    count = count_pf(PFParams{args.m, args.n ? args.n : args.m}, args.cap, args.workers);
    j["m"] = args.m;
    j["n"] = args.n ? args.n : args.m;
  } else if (args.family == "abpf") {
    count = count_pf(ABParams{args.a, args.b, args.m}, args.cap, args.workers);
    j["a"] = args.a;
    j["b"] = args.b;
    j["m"] = args.m;
  } else if (args.family == "forest") {
    count = count_forests(args.m, args.n ? args.n : args.m, args.cap);
    j["m"] = args.m;
    j["n"] = args.n ? args.n : args.m;
  } else {
    throw BadParameter("unknown family: " + args.family);
  }
  if (args.format == "csv") {
    sink.stream() << count.str() << "\n";
  } else {
    j["count"] = count.str();
    sink.stream() << j.dump() << "\n";
  }
  return kExitOk;
}

// -------------------------------------------------------------- enumerate

struct EnumerateArgs {
  std::string family = "pf";
  int m = 0, n = 0, a = 0, b = 0;
  std::uint64_t cap = 0;
  std::string output;
};

int run_enumerate(const EnumerateArgs& args) {
  OutputSink sink;
  sink.open(args.output);
  std::ostream& os = sink.stream();
  if (args.family == "pf") {
    PFParams p{args.m, args.n ? args.n : args.m};
    for_each_pf(p, [&](std::span<const int> t) {
      os << to_json(ParkingFunction(p, std::vector<int>(t.begin(), t.end()))).dump() << "\n";
    }, args.cap);
  } else if (args.family == "abpf") {
    ABParams p{args.a, args.b, args.m};
    for_each_ab_pf(p, [&](std::span<const int> t) {
      os << to_json(ParkingFunction(p, std::vector<int>(t.begin(), t.end()))).dump() << "\n";
    }, args.cap);
  } else if (args.family == "forest") {
    for_each_forest(args.m, args.n ? args.n : args.m, [&](const RootedForest& f) {
      os << to_json(f).dump() << "\n";
    }, args.cap);
  } else {
    throw BadParameter("unknown family: " + args.family);
  }
  return kExitOk;
}

// ----------------------------------------------------------------- sample

struct SampleArgs {
  std::string family = "pf";
  int m = 0, n = 0, a = 0, b = 0;
  std::uint64_t samples = 1;
  std::uint64_t seed = 0;
  int workers = 1;
  std::string output;
};

int run_sample(const SampleArgs& args) {
  OutputSink sink;
  sink.open(args.output);
  Params params = args.family == "abpf"
                      ? Params(ABParams{args.a, args.b, args.m})
                      : Params(PFParams{args.m, args.n ? args.n : args.m});
  if (args.family != "pf" && args.family != "abpf") {
    throw BadParameter("sample supports families pf and abpf");
  }
  params_validate(params);
  int workers = std::max(1, args.workers);
  json meta;
  meta["kind"] = "meta";
  meta["algorithm"] = std::string(SplitMix64::algorithm());
  meta["seed"] = args.seed;
  meta["samples"] = args.samples;
  meta["workers"] = workers;
  sink.stream() << meta.dump() << "\n";

  SplitMix64 base(args.seed);
  // Per-substream buffers emitted in stream order: the output depends only on
  // the command line, not on thread scheduling.
  std::vector<std::string> buffers(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    std::uint64_t quota = args.samples / static_cast<std::uint64_t>(workers) +
                          (static_cast<std::uint64_t>(w) <
                                   args.samples % static_cast<std::uint64_t>(workers)
                               ? 1
                               : 0);
    pool.emplace_back([&, w, quota] {
      SplitMix64 rng = workers == 1 ? base : base.substream(static_cast<std::uint64_t>(w));
      std::string out;
      for (std::uint64_t i = 0; i < quota; ++i) {
        out += to_json(sample_uniform(params, rng)).dump();
        out += "\n";
      }
      buffers[static_cast<std::size_t>(w)] = std::move(out);
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& buffer : buffers) sink.stream() << buffer;
  return kExitOk;
}

// ------------------------------------------------------------------ stats

struct StatsArgs {
  std::string input;
  std::optional<int> n, a, b;
  std::optional<int> k;
  std::string output;
};

int run_stats(const StatsArgs& args) {
  OutputSink sink;
  sink.open(args.output);
  ParkingFunction pf = parse_pf(args.input, args.n, args.a, args.b);
  json j;
  j["pf"] = to_json(pf);
  j["lel"] = stat_lel(pf);
  j["ones"] = stat_ones(pf);
  if (pf.classical()) j["slev"] = stat_slev(pf);
  j["order_permutation"] = order_permutation(pf).perm;
  j["specification"] = specification(pf).counts;
  if (pf.classical() && pf.pf_params().m == pf.pf_params().n) {
    j["k_set"] = k_set(pf);
    json blocks = json::array();
    for (const auto& block : preference_partition(pf).blocks) blocks.push_back(block);
    j["preference_partition"] = blocks;
    json reduced = json::array();
    for (const auto& block : reduced_preference_partition(pf).blocks) reduced.push_back(block);
    j["reduced_preference_partition"] = reduced;
  }
  int k = args.k.value_or(0);
  if (!k && !pf.classical() && pf.ab_params().a == pf.ab_params().b) k = pf.ab_params().a;
  if (k) {
    j["leading_block"] = leading_block(pf, k);
    json oset = json::array();
    for (const auto& member : o_set(pf, k).members) {
      json parts = json::array();
      for (const auto& part : member.parts) parts.push_back(part);
      oset.push_back(parts);
    }
    j["o_set"] = oset;
  }
  sink.stream() << j.dump() << "\n";
  return kExitOk;
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
  std::string identity;
  bool all = false;
  std::string grid = "desk";
  IdentityParams params;
  int m = 0, n = 0, a = 0, b = 0, k = 0;
  int s = -1, t = -1;
  std::uint64_t cap = 0;
  std::string format = "json";
  std::string output;
};

struct GridCheck {
  IdentityId id;
  IdentityParams params;
};

std::vector<GridCheck> desk_grid() {
  std::vector<GridCheck> out;
  for (IdentityId id : {IdentityId::MasterPf1, IdentityId::Pf1, IdentityId::Pf2,
                        IdentityId::Master3}) {
    int min_m = (id == IdentityId::Pf1 || id == IdentityId::Pf2) ? 1 : 2;
    for (int m = min_m; m <= 5; ++m) {
      for (int n = m; n <= 7; ++n) out.push_back({id, {.m = m, .n = n}});
    }
  }
  for (IdentityId id : {IdentityId::Last1, IdentityId::Last2}) {
    int min_m = id == IdentityId::Last2 ? 2 : 1;
    for (int a = 1; a <= 3; ++a) {
      for (int b = 1; b <= 3; ++b) {
        for (int m = min_m; m <= 4; ++m) out.push_back({id, {.m = m, .a = a, .b = b}});
      }
    }
  }
  for (IdentityId id : {IdentityId::AbGen1, IdentityId::AbLel, IdentityId::AbOnes}) {
    int min_m = id == IdentityId::AbGen1 ? 2 : 1;
    for (int b = 1; b <= 3; ++b) {
      for (int m = min_m; m <= 4; ++m) out.push_back({id, {.m = m, .b = b}});
    }
  }
  for (int m = 2; m <= 4; ++m) out.push_back({IdentityId::PropAb, {.m = m, .k = 2}});
  for (int m = 1; m <= 6; ++m) {
    for (int n = m; n <= 8; ++n) out.push_back({IdentityId::ExplFormula, {.m = m, .n = n}});
  }
  return out;
}

int run_verify(const VerifyArgs& args) {
  OutputSink sink;
  sink.open(args.output);
  std::ostream& os = sink.stream();

  std::vector<GridCheck> checks;
  if (args.all) {
    if (args.grid != "desk") throw BadParameter("unknown grid: " + args.grid);
    checks = desk_grid();
  } else {
    if (args.identity.empty()) throw BadParameter("verify needs --identity or --all");
    IdentityParams p;
    p.m = args.m;
    p.n = args.n;
    p.a = args.a;
    p.b = args.b;
    p.k = args.k;
    if (args.s >= 0) p.s = args.s;
    if (args.t >= 0) p.t = args.t;
    checks.push_back({identity_from_name(args.identity), p});
  }

  bool all_equal = true;
  std::map<std::string, std::pair<int, int>> by_identity;  // name -> {checks, failures}
  for (const GridCheck& check : checks) {
    IdentityReport report = check_identity(check.id, check.params, args.cap);
    auto& row = by_identity[identity_name(check.id)];
    ++row.first;
    if (!report.equal) {
      ++row.second;
      all_equal = false;
    }
    if (!args.all || !report.equal) {
      json j;
      j["identity"] = identity_name(check.id);
      j["params"] = params_json(check.params);
      j["equal"] = report.equal;
      if (!report.equal) j["diff"] = to_json(report.diff);
      os << j.dump() << "\n";
    }
  }
  if (args.all) {
    if (args.format == "csv") {
      os << "identity,checks,failures\n";
      for (const auto& [name, row] : by_identity) {
        os << name << "," << row.first << "," << row.second << "\n";
      }
    } else {
      json summary;
      summary["kind"] = "summary";
      json rows = json::array();
      for (const auto& [name, row] : by_identity) {
        rows.push_back({{"identity", name}, {"checks", row.first}, {"failures", row.second}});
      }
      summary["identities"] = rows;
      summary["all_equal"] = all_equal;
      os << summary.dump() << "\n";
    }
  }
  return all_equal ? kExitOk : kExitUnequal;
}

// -------------------------------------------------------------- bijection

struct BijectionArgs {
  std::string map;
  std::string input;
  std::optional<int> n, a, b;
  int anchor = 1;
  std::string output;
};

json apply_map(const std::string& name, const json& value, const BijectionArgs& args) {
  auto as_pf = [&]() {
    if (value.is_string()) return parse_pf(value.get<std::string>(), args.n, args.a, args.b);
    return parking_function_from_json(value);
  };
  if (name == "phi") return to_json(phi(forest_from_json(value)));
  if (name == "phi_inv") return to_json(phi_inv(as_pf()));
  if (name == "theta") return to_json(theta(forest_from_json(value)));
  if (name == "rho") return to_json(rho(forest_from_json(value), args.anchor));
  if (name == "theta_hat") return to_json(theta_hat(as_pf()));
  if (name == "rho_hat") return to_json(rho_hat(as_pf(), args.anchor));
  if (name == "colored_phi") return to_json(colored_phi(colored_tree_from_json(value)));
  if (name == "colored_phi_inv") return to_json(colored_phi_inv(as_pf()));
  if (name == "rho_1b") return to_json(rho_1b(colored_tree_from_json(value)));
  if (name == "rho_kk") return to_json(rho_kk(colored_tree_from_json(value)));
  throw BadParameter("unknown map: " + name);
}

int run_bijection(const BijectionArgs& args) {
  OutputSink sink;
  sink.open(args.output);
  std::string name = args.map;
  std::replace(name.begin(), name.end(), '-', '_');
  if (!args.input.empty()) {
    std::string trimmed = args.input;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    json value = trimmed.front() == '{' ? json::parse(trimmed) : json(trimmed);
    sink.stream() << apply_map(name, value, args).dump() << "\n";
    return kExitOk;
  }
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.empty()) continue;
    json value = line.front() == '{' ? json::parse(line) : json(line);
    sink.stream() << apply_map(name, value, args).dump() << "\n";
  }
  return kExitOk;
}

// ------------------------------------------------------------------- dist

struct DistArgs {
  std::string family = "pf";
  std::string statistic = "lel";
  int anchor = 1;
  int m = 0, n = 0, a = 0, b = 0;
  std::uint64_t samples = 0;  // 0 = exhaustive
  std::uint64_t seed = 0;
  std::uint64_t cap = 0;
  std::string format = "csv";
  std::string output;
};

int run_dist(const DistArgs& args) {
  OutputSink sink;
  sink.open(args.output);
  Params params = args.family == "abpf"
                      ? Params(ABParams{args.a, args.b, args.m})
                      : Params(PFParams{args.m, args.n ? args.n : args.m});
  if (args.family != "pf" && args.family != "abpf") {
    throw BadParameter("dist supports families pf and abpf");
  }
  ScalarStatistic stat = make_statistic(args.statistic, args.anchor);
  DistTable table;
  if (args.samples == 0) {
    table = exact_distribution(params, stat, args.cap);
  } else {
    SplitMix64 rng(args.seed);
    table = empirical_distribution(params, stat, args.samples, rng);
  }
  if (args.format == "json") {
    json entries = json::array();
    for (const auto& [key, count] : table.counts) {
      entries.push_back({{"value", key},
                         {"count", count.str()},
                         {"frequency", table.frequency(key)}});
    }
    json j;
    j["family"] = table.family;
    j["statistic"] = table.statistic;
    j["samples"] = table.sample_size;
    if (table.sample_size) {
      j["seed"] = table.seed;
      j["rng"] = table.rng_algorithm;
    }
    j["entries"] = entries;
    sink.stream() << j.dump() << "\n";
  } else {
    write_csv(sink.stream(), table);
  }
  return kExitOk;
}

const char* error_kind(const Error& e) {
  if (dynamic_cast<const NotAParkingFunction*>(&e)) return "NotAParkingFunction";
  if (dynamic_cast<const MalformedForest*>(&e)) return "MalformedForest";
  if (dynamic_cast<const MalformedTree*>(&e)) return "MalformedTree";
  if (dynamic_cast<const SizeCapExceeded*>(&e)) return "SizeCapExceeded";
  if (dynamic_cast<const ArityMismatch*>(&e)) return "ArityMismatch";
  if (dynamic_cast<const ParameterOutOfRange*>(&e)) return "ParameterOutOfRange";
  if (dynamic_cast<const InconsistentPair*>(&e)) return "InconsistentPair";
  if (dynamic_cast<const WrongColorParameters*>(&e)) return "WrongColorParameters";
  if (dynamic_cast<const EmptySample*>(&e)) return "EmptySample";
  if (dynamic_cast<const BadParameter*>(&e)) return "BadParameter";
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  return "Error";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parking functions, labeled forests and their statistics"};
  app.require_subcommand(1);

  CountArgs count_args;
  EnumerateArgs enum_args;
  SampleArgs sample_args;
  StatsArgs stats_args;
  VerifyArgs verify_args;
  BijectionArgs bijection_args;
  DistArgs dist_args;

  CLI::App* count = app.add_subcommand("count", "count a family by exhaustive enumeration");
  count->add_option("--family", count_args.family, "pf | abpf | forest");
  count->add_option("--m", count_args.m, "length / car count")->required();
  count->add_option("--n", count_args.n, "spot count (defaults to m)");
  count->add_option("--a", count_args.a, "(a,b) parameter a");
  count->add_option("--b", count_args.b, "(a,b) parameter b");
  count->add_option("--workers", count_args.workers, "parallel workers");
  count->add_option("--cap", count_args.cap, "candidate tuple cap");
  count->add_option("--format", count_args.format, "json | csv");
  count->add_option("--output", count_args.output, "write to a file");

  CLI::App* enumerate = app.add_subcommand("enumerate", "list a family as JSON lines");
  enumerate->add_option("--family", enum_args.family, "pf | abpf | forest");
  enumerate->add_option("--m", enum_args.m)->required();
  enumerate->add_option("--n", enum_args.n);
  enumerate->add_option("--a", enum_args.a);
  enumerate->add_option("--b", enum_args.b);
  enumerate->add_option("--cap", enum_args.cap);
  enumerate->add_option("--output", enum_args.output);

  CLI::App* sample = app.add_subcommand("sample", "exact uniform random sampling");
  sample->add_option("--family", sample_args.family, "pf | abpf");
  sample->add_option("--m", sample_args.m)->required();
  sample->add_option("--n", sample_args.n);
  sample->add_option("--a", sample_args.a);
  sample->add_option("--b", sample_args.b);
  sample->add_option("--samples", sample_args.samples)->required();
  sample->add_option("--seed", sample_args.seed);
  sample->add_option("--workers", sample_args.workers);
  sample->add_option("--output", sample_args.output);

  CLI::App* stats = app.add_subcommand("stats", "statistics of one parking function");
  stats->add_option("--input", stats_args.input, "JSON or (p1,p2,...)")->required();
  auto opt_int = [](CLI::App* cmd, const char* name, std::optional<int>& slot, const char* help) {
    cmd->add_option_function<int>(name, [&slot](int v) { slot = v; }, help);
  };
  opt_int(stats, "--n", stats_args.n, "spot count for raw tuples");
  opt_int(stats, "--a", stats_args.a, "(a,b) parameter a for raw tuples");
  opt_int(stats, "--b", stats_args.b, "(a,b) parameter b for raw tuples");
  opt_int(stats, "--k", stats_args.k, "block size for (k,k) statistics");
  stats->add_option("--output", stats_args.output);

  CLI::App* verify = app.add_subcommand("verify", "check closed forms against enumeration");
  verify->add_option("--identity", verify_args.identity, "identity name");
  verify->add_flag("--all", verify_args.all, "run the whole desk grid");
  verify->add_option("--grid", verify_args.grid, "grid name (desk)");
  verify->add_option("--m", verify_args.m);
  verify->add_option("--n", verify_args.n);
  verify->add_option("--a", verify_args.a);
  verify->add_option("--b", verify_args.b);
  verify->add_option("--k", verify_args.k);
  verify->add_option("--s", verify_args.s);
  verify->add_option("--t", verify_args.t);
  verify->add_option("--cap", verify_args.cap);
  verify->add_option("--format", verify_args.format, "json | csv");
  verify->add_option("--output", verify_args.output);

  CLI::App* bijection = app.add_subcommand("bijection", "apply a bijection or involution");
  bijection->add_option("--map", bijection_args.map,
                        "phi | phi_inv | theta | rho | theta_hat | rho_hat | colored_phi | "
                        "colored_phi_inv | rho_1b | rho_kk")
      ->required();
  bijection->add_option("--input", bijection_args.input, "JSON object or (p1,p2,...); stdin JSON lines otherwise");
  opt_int(bijection, "--n", bijection_args.n, "spot count for raw tuples");
  opt_int(bijection, "--a", bijection_args.a, "(a,b) parameter a for raw tuples");
  opt_int(bijection, "--b", bijection_args.b, "(a,b) parameter b for raw tuples");
  bijection->add_option("--anchor", bijection_args.anchor, "anchor vertex for rho");
  bijection->add_option("--output", bijection_args.output);

  CLI::App* dist = app.add_subcommand("dist", "statistic distribution tables");
  dist->add_option("--family", dist_args.family, "pf | abpf");
  dist->add_option("--statistic", dist_args.statistic, "lel | slev | ones");
  dist->add_option("--anchor", dist_args.anchor, "anchor car for lel");
  dist->add_option("--m", dist_args.m)->required();
  dist->add_option("--n", dist_args.n);
  dist->add_option("--a", dist_args.a);
  dist->add_option("--b", dist_args.b);
  dist->add_option("--samples", dist_args.samples, "0 = exhaustive");
  dist->add_option("--seed", dist_args.seed);
  dist->add_option("--cap", dist_args.cap);
  dist->add_option("--format", dist_args.format, "csv | json");
  dist->add_option("--output", dist_args.output);

  CLI11_PARSE(app, argc, argv);

  try {
    std::uint64_t cap = default_cap();
    if (count_args.cap == 0) count_args.cap = cap;
    if (enum_args.cap == 0) enum_args.cap = cap;
    if (verify_args.cap == 0) verify_args.cap = cap;
    if (dist_args.cap == 0) dist_args.cap = cap;

    if (count->parsed()) return run_count(count_args);
    if (enumerate->parsed()) return run_enumerate(enum_args);
    if (sample->parsed()) return run_sample(sample_args);
    if (stats->parsed()) return run_stats(stats_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (bijection->parsed()) return run_bijection(bijection_args);
    if (dist->parsed()) return run_dist(dist_args);
  } catch (const Error& e) {
    json err;
    err["error"] = error_kind(e);
    err["message"] = e.what();
    std::cerr << err.dump() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    json err;
    err["error"] = "ParseError";
    err["message"] = e.what();
    std::cerr << err.dump() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
