#include "c1p/cli.hpp"

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "c1p/cross_validate.hpp"
#include "c1p/errors.hpp"
#include "c1p/fmo_io.hpp"
#include "c1p/pqtree_io.hpp"
#include "c1p/reduction.hpp"

namespace c1p {
namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

constexpr const char* kLimitEnv = "C1P_LAB_LIMIT";

/// Unreadable file, bad flag value and similar; maps to exit 2.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A route refused before it started because the instance exceeds its size budget.
class RouteBudget : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string format = "text";
  bool format_given = false;
  std::size_t limit = kDefaultEnumerationLimit;
  std::string engine = "pruned";
  int verbosity = 0;
  bool timing = false;
  std::size_t front_max_edges = Budgets{}.front_max_edges;
  std::size_t fmo_max_universe = Budgets{}.fmo_max_universe;

  bool json() const { return format == "json"; }
};

std::size_t parse_limit(std::string_view text, std::string_view what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v == 0) {
    throw InputError(std::string(what) + " must be a positive integer, got '" + std::string(text) + "'");
  }
  return v;
}

std::size_t default_limit() {
  const char* env = std::getenv(kLimitEnv);
  if (env == nullptr || *env == '\0') return kDefaultEnumerationLimit;
  return parse_limit(env, kLimitEnv);
}

// An argument starting with `(` or `{` is inline text, `-` is stdin, anything
// else a path.
std::string read_input(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '(' || arg.front() == '{')) return arg;
  if (arg == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(arg, std::ios::binary);
  if (!in) throw InputError("cannot read '" + arg + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw InputError("cannot write '" + path.string() + "'");
}

class Clock {
 public:
  double millis() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {}

  int pq_count(const std::string& arg) {
    PqTree t = canonicalize(parse_tree(read_input(arg)));
    const bool distinct = t.has_distinct_leaves();
    Clock clock;
    Count c = distinct ? count_frontiers_distinct(t) : count_frontiers_multiset(t, opt_.limit);
    const char* method = distinct ? "distinct-formula" : "enumeration";
    note("pq count: " + std::to_string(clock.millis()) + " ms");
    if (opt_.json()) {
      emit({{"count", to_decimal(c)}, {"method", method}});
    } else {
      out_ << to_decimal(c) << "\nmethod: " << method << "\n";
    }
    return exit_code::kOk;
  }

  int pq_enum(const std::string& arg) {
    PqTree t = parse_tree(read_input(arg));
    FrontierSet fr = enumerate_frontiers(t, opt_.limit);
    if (!fr.complete) {
      throw EnumerationBudgetExceeded("frontier set exceeds the limit of " + std::to_string(opt_.limit));
    }
    print_strings(fr.strings);
    return exit_code::kOk;
  }

  int pq_canon(const std::string& arg) {
    PqTree t = canonicalize(parse_tree(read_input(arg)));
    out_ << (opt_.json() ? to_json(t) : to_sexpr(t)) << "\n";
    return exit_code::kOk;
  }

  int pq_equiv(const std::string& a, const std::string& b) {
    const bool same = equivalent(canonicalize(parse_tree(read_input(a))),
                                 canonicalize(parse_tree(read_input(b))));
    if (opt_.json()) {
      emit({{"equivalent", same}});
    } else {
      out_ << (same ? "equivalent" : "not equivalent") << "\n";
    }
    return same ? exit_code::kOk : exit_code::kInequivalent;
  }

  int fmo_count(const std::string& arg) {
    FmoInstance inst = parse_fmo_instance(read_input(arg));
    const FmoEngine engine = parse_engine(opt_.engine);
    Clock clock;
    Count c = count_fmo(inst, engine, opt_.limit);
    note("fmo count (" + opt_.engine + "): " + std::to_string(clock.millis()) + " ms");
    if (opt_.json()) {
      emit({{"count", to_decimal(c)}, {"engine", opt_.engine}});
    } else {
      out_ << to_decimal(c) << "\n";
    }
    return exit_code::kOk;
  }

  int fmo_enum(const std::string& arg) {
    FmoInstance inst = parse_fmo_instance(read_input(arg));
    SolutionSet sol = solve_fmo(inst, parse_engine(opt_.engine), opt_.limit);
    if (!sol.complete) {
      throw EnumerationBudgetExceeded("solution set exceeds the limit of " + std::to_string(opt_.limit));
    }
    print_strings(sol.strings);
    return exit_code::kOk;
  }

  int reduce(const std::string& route, const std::string& graph_arg, const std::string& out_dir) {
    HamInstance inst = parse_graph_file(read_input(graph_arg));
    const fs::path dir(out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw InputError("cannot create '" + out_dir + "': " + ec.message());

    ordered_json summary;
    summary["route"] = route;
    summary["V"] = inst.graph().vertex_count();
    summary["E"] = inst.graph().edge_count();
    summary["p"] = inst.surplus();
    std::vector<std::string> written;
    if (route == "front") {
      FrontReduction r = build_front_trees(inst);
      const std::pair<const char*, const PqTree*> files[] = {
          {"t_g.pq", &r.t_g}, {"t_v.pq", &r.t_v}, {"t_e.pq", &r.t_e}};
      for (const auto& [name, tree] : files) {
        write_file(dir / name, to_sexpr(*tree) + "\n");
        written.push_back((dir / name).string());
      }
      SymbolMultiset padding;
      for (const Symbol& s : leaves_of(r.t_n)) padding.add(s);
      summary["T_N_leaves"] = to_string(padding);
      summary["block_size"] = to_decimal(sigma_h_size_front(inst));
    } else {
      FmoInstance fmo = build_fmo_instance(inst);
      write_file(dir / "instance.json", to_json(fmo));
      written.push_back((dir / "instance.json").string());
      summary["R"] = fmo.universe.size();
      summary["F"] = fmo.family.size();
      summary["a"] = to_decimal(alpha_product(inst));
    }
    summary["wrote"] = written;

    if (opt_.json()) {
      emit(summary);
    } else {
      for (const auto& [key, value] : summary.items()) {
        out_ << key << ": ";
        if (value.is_array()) {
          for (std::size_t i = 0; i < value.size(); ++i) out_ << (i ? " " : "") << value[i].get<std::string>();
        } else if (value.is_string()) {
          out_ << value.get<std::string>();
        } else {
          out_ << value.dump();
        }
        out_ << "\n";
      }
    }
    return exit_code::kOk;
  }

  int ham(const std::string& graph_arg, const std::string& method) {
    HamInstance inst = parse_graph_file(read_input(graph_arg));
    if (method == "all") return ham_all(inst);

    Clock clock;
    ordered_json j;
    j["method"] = method;
    if (method == "brute") {
      j["count"] = to_decimal(brute_force_ham(inst));
    } else if (method == "front") {
      check_front_budget(inst);
      FrontCount r = count_ham_via_front(inst, opt_.limit);
      j["count"] = to_decimal(r.paths);
      j["intermediates"] = {{"fr_tv", to_decimal(r.fr_tv)},
                            {"fr_te", to_decimal(r.fr_te)},
                            {"fr_tg", to_decimal(r.fr_tg)},
                            {"intersection", to_decimal(r.intersection)},
                            {"block_size", to_decimal(r.block_size)},
                            {"p", r.p}};
    } else {
      check_fmo_budget(inst);
      FmoCount r = count_ham_via_fmo(inst, parse_engine(opt_.engine), opt_.limit);
      j["count"] = to_decimal(r.paths);
      j["intermediates"] = {{"z", to_decimal(r.z)},
                            {"a", to_decimal(r.a)},
                            {"universe_size", r.universe_size}};
    }
    note("ham " + method + ": " + std::to_string(clock.millis()) + " ms");
    if (opt_.json()) {
      emit(j);
    } else {
      out_ << j["count"].get<std::string>() << "\n";
    }
    return exit_code::kOk;
  }

 private:
  static SymbolString leaves_of(const PqNode& node) {
    if (node.is_leaf()) return {node.label()};
    SymbolString out;
    for (const PqNode& c : node.children()) {
      SymbolString part = leaves_of(c);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

  int ham_all(const HamInstance& inst) {
    Budgets b;
    b.limit = opt_.limit;
    b.engine = parse_engine(opt_.engine);
    b.front_max_edges = opt_.front_max_edges;
    b.fmo_max_universe = opt_.fmo_max_universe;
    HamCountReport report = cross_validate(inst, b);

    for (const auto& [name, r] : {std::pair{"brute", &report.brute},
                                  std::pair{"via_front", &report.via_front},
                                  std::pair{"via_fmo", &report.via_fmo}}) {
      note(std::string(name) + ": " + std::to_string(r->millis) + " ms");
      if (r->status == RouteResult::Status::Failed) err_ << "error: " << name << " failed: " << r->reason << "\n";
    }

    if (opt_.format_given && !opt_.json()) {
      auto line = [&](const char* name, const RouteResult& r) {
        out_ << name << ": ";
        if (r.ran()) {
          out_ << to_decimal(*r.count);
        } else {
          out_ << (r.status == RouteResult::Status::Skipped ? "skipped" : "failed") << " (" << r.reason << ")";
        }
        if (opt_.timing) out_ << " [" << r.millis << " ms]";
        out_ << "\n";
      };
      line("brute", report.brute);
      line("via_front", report.via_front);
      line("via_fmo", report.via_fmo);
      out_ << "agree: " << (report.agree ? "true" : "false") << "\n";
    } else {
      out_ << to_json(report, opt_.timing);
    }
    if (!report.agree) {
      err_ << "error: the counting routes disagree\n";
      return exit_code::kDisagreement;
    }
    return exit_code::kOk;
  }

  void check_front_budget(const HamInstance& inst) const {
    if (inst.graph().edge_count() > opt_.front_max_edges) {
      throw RouteBudget("|E| = " + std::to_string(inst.graph().edge_count()) +
                        " exceeds the #FRONT route limit of " + std::to_string(opt_.front_max_edges) +
                        " (raise it with --front-max-edges)");
    }
  }

  void check_fmo_budget(const HamInstance& inst) const {
    const std::size_t r = 4 * inst.graph().edge_count() + 4;
    if (r > opt_.fmo_max_universe) {
      throw RouteBudget("|R| = " + std::to_string(r) + " exceeds the #FMO route limit of " +
                        std::to_string(opt_.fmo_max_universe) + " (raise it with --fmo-max-universe)");
    }
  }

  void print_strings(const std::vector<SymbolString>& strings) {
    if (opt_.json()) {
      ordered_json list = ordered_json::array();
      for (const auto& s : strings) list.push_back(join(s));
      emit({{"count", std::to_string(strings.size())}, {"strings", list}});
    } else {
      out_ << format_string_list(strings);
    }
  }

  void emit(const ordered_json& j) { out_ << j.dump(2) << "\n"; }

  void note(const std::string& msg) {
    if (opt_.verbosity > 0) err_ << msg << "\n";
  }

  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
};

int report_error(std::ostream& err, const char* kind, const std::exception& e, int code) {
  err << "error: " << kind << e.what() << "\n";
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact PQ-tree frontier and multiset ordering counts, with Hamiltonian path reductions",
               "c1p-lab"};
  app.fallthrough();
  app.failure_message(CLI::FailureMessage::help);
  app.require_subcommand(1);

  Options opt;
  std::optional<std::string> limit_text;
  auto* format_opt = app.add_option("--format", opt.format, "Output format")
                         ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--limit", limit_text,
                 "Enumeration limit in distinct strings (default 10000000, or $C1P_LAB_LIMIT)");
  app.add_option("--engine", opt.engine, "#FMO engine")->check(CLI::IsMember({"naive", "pruned"}));
  app.add_flag("-v,--verbose", opt.verbosity, "Timing and diagnostics on stderr");
  app.add_flag("--timing", opt.timing, "Include per-route wall time in ham reports");
  app.add_option("--front-max-edges", opt.front_max_edges, "Largest |E| the #FRONT route accepts")
      ->check(CLI::PositiveNumber);
  app.add_option("--fmo-max-universe", opt.fmo_max_universe, "Largest |R| the #FMO route accepts")
      ->check(CLI::PositiveNumber);

  std::string tree_a;
  std::string tree_b;
  auto* pq = app.add_subcommand("pq", "PQ-tree frontiers");
  pq->require_subcommand(1);
  auto* pq_count = pq->add_subcommand("count", "Print |Fr(T)|");
  pq_count->add_option("tree", tree_a, "Tree file, `-`, or inline s-expression/JSON")->required();
  auto* pq_enum = pq->add_subcommand("enum", "List Fr(T), sorted");
  pq_enum->add_option("tree", tree_a, "Tree file, `-`, or inline s-expression/JSON")->required();
  auto* pq_canon = pq->add_subcommand("canon", "Print the canonical form");
  pq_canon->add_option("tree", tree_a, "Tree file, `-`, or inline s-expression/JSON")->required();
  auto* pq_equiv = pq->add_subcommand("equiv", "Exit 0 if equivalent, 1 otherwise");
  pq_equiv->add_option("first", tree_a, "Tree")->required();
  pq_equiv->add_option("second", tree_b, "Tree")->required();

  std::string instance;
  auto* fmo = app.add_subcommand("fmo", "Full multiset orderings");
  fmo->require_subcommand(1);
  auto* fmo_count = fmo->add_subcommand("count", "Print the number of solutions");
  fmo_count->add_option("instance", instance, "Instance JSON file, `-`, or inline JSON")->required();
  auto* fmo_enum = fmo->add_subcommand("enum", "List the solutions, sorted");
  fmo_enum->add_option("instance", instance, "Instance JSON file, `-`, or inline JSON")->required();

  std::string route;
  std::string graph;
  std::string out_dir;
  auto* reduce = app.add_subcommand("reduce", "Write the reduction of a Hamiltonian instance");
  reduce->add_option("route", route, "front or fmo")->required()->check(CLI::IsMember({"front", "fmo"}));
  reduce->add_option("graph", graph, "Graph file")->required();
  reduce->add_option("--out", out_dir, "Output directory")->required();

  std::string method = "all";
  auto* ham = app.add_subcommand("ham", "Count Hamiltonian sequences between w and s");
  ham->add_option("graph", graph, "Graph file")->required();
  ham->add_option("--method", method, "brute, front, fmo, or all (cross-validated report)")
      ->check(CLI::IsMember({"brute", "front", "fmo", "all"}));

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kOk : exit_code::kInputError;
  }
  opt.format_given = format_opt->count() > 0;

  try {
    opt.limit = limit_text ? parse_limit(*limit_text, "--limit") : default_limit();
    Runner run(opt, out, err);
    if (*pq_count) return run.pq_count(tree_a);
    if (*pq_enum) return run.pq_enum(tree_a);
    if (*pq_canon) return run.pq_canon(tree_a);
    if (*pq_equiv) return run.pq_equiv(tree_a, tree_b);
    if (*fmo_count) return run.fmo_count(instance);
    if (*fmo_enum) return run.fmo_enum(instance);
    if (*reduce) return run.reduce(route, graph, out_dir);
    if (*ham) return run.ham(graph, method);
  } catch (const RouteBudget& e) {
    return report_error(err, "budget: ", e, exit_code::kBudget);
  } catch (const EnumerationBudgetExceeded& e) {
    return report_error(err, "budget: ", e, exit_code::kBudget);
  } catch (const NonIntegerResult& e) {
    return report_error(err, "internal inconsistency: ", e, exit_code::kDisagreement);
  } catch (const StructureViolation& e) {
    return report_error(err, "internal inconsistency: ", e, exit_code::kDisagreement);
  } catch (const InvalidInstance& e) {
    return report_error(err, "invalid instance: ", e, exit_code::kInputError);
  } catch (const Error& e) {
    return report_error(err, "", e, exit_code::kInputError);
  }
  return exit_code::kInputError;
}

}  // namespace c1p
