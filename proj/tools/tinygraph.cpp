// Command-line front end: sampling, censuses, tinyness checks, bound
// calculators, class building, universal graphs and configured experiments.
#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "tinygraph/bounds.hpp"
#include "tinygraph/class_builder.hpp"
#include "tinygraph/error.hpp"
#include "tinygraph/experiment.hpp"
#include "tinygraph/parallel.hpp"
#include "tinygraph/random.hpp"
#include "tinygraph/representability.hpp"

using namespace tinygraph;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

Graph read_one(const std::string& path, std::size_t index = 0) {
  const auto graphs = read_graph6_file(path);
  if (index >= graphs.size())
    throw std::runtime_error(path + " holds " + std::to_string(graphs.size()) + " graphs");
  return graphs[index];
}

// "a=1,b=2" -> {a: 1, b: 2}
std::map<std::string, double> parse_params(const std::string& text) {
  std::map<std::string, double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("parameter '" + item + "' needs key=value");
    std::size_t used = 0;
    const std::string value = item.substr(eq + 1);
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("bad number in '" + item + "'");
    out[item.substr(0, eq)] = v;
  }
  return out;
}

double param(const std::map<std::string, double>& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw std::invalid_argument("missing parameter '" + key + "'");
  return it->second;
}

double param_or(const std::map<std::string, double>& p, const std::string& key, double fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

std::uint64_t as_count(double x) {
  if (x < 0 || x != std::floor(x)) throw std::invalid_argument("expected a non-negative integer");
  return static_cast<std::uint64_t>(x);
}

Json bounds_report(const std::string& which, const std::map<std::string, double>& p) {
  Json r;
  r["tool"] = kToolName;
  r["version"] = kToolVersion;
  r["which"] = which;
  Json params = Json::object();
  for (const auto& [k, v] : p) params[k] = v;
  r["params"] = params;
  if (which == "chernoff") {
    r["formula"] = "2 exp(-t^2 / (2 (mu + t/3))), capped at 2";
    r["value"] = chernoff_bound(param(p, "mu"), param(p, "t"));
  } else if (which == "binom") {
    const auto b = binom_bounds(as_count(param(p, "n")), as_count(param(p, "k")));
    r["formula"] = "(n/k)^k <= C(n,k) <= (ne/k)^k";
    r["lower_log2"] = b.lower.log2;
    r["exact"] = b.exact.get_str();
    r["upper_log2"] = b.upper.log2;
  } else if (which == "sparse-connected") {
    const auto s = sparse_connected_count_and_bound(as_count(param(p, "k")),
                                                    as_count(param_or(p, "cap", 8)));
    r["formula"] = "connected k-vertex graphs with at most k - 1 + k/ln k edges, against 100^k";
    if (s.exact) r["exact"] = *s.exact; else r["exact"] = nullptr;
    r["bound_log2"] = s.bound.log2;
    r["below_bound"] = s.exact ? Json(mpz_class(*s.exact) < *s.bound.exact) : Json(nullptr);
  } else if (which == "small-dense") {
    const auto s = small_dense_probability(param(p, "n"), param(p, "d"), as_count(param(p, "t")));
    r["formula"] = "sum over 5 <= k <= t of n^(-k/(3 ln k)), blanket 15/n, "
                   "needs 3 ln((d+1)e^2) ln t <= ln n";
    r["precondition_holds"] = s.precondition_holds;
    r["precondition_lhs"] = s.precondition_lhs;
    r["precondition_rhs"] = s.precondition_rhs;
    Json per = Json::object();
    for (const auto& [k, v] : s.per_k) per[std::to_string(k)] = v;
    r["per_k"] = per;
    r["total"] = s.total;
    r["blanket"] = s.blanket;
  } else if (which == "dense-beta") {
    const double d = param(p, "d");
    r["formula"] = "2 (e^2 d)^(e^2 d), 0^0 = 1";
    r["value"] = dense_count_beta(d);
    r["log2"] = dense_count_beta_log2(d);
    r["zero_power_convention"] = d == 0;
  } else if (which == "not-tiny") {
    const auto b = not_tiny_probability(param(p, "n"), param(p, "d"));
    r["formula"] = "200 sqrt(d/n), clamped to 1";
    r["value"] = b.value;
    r["informative"] = b.informative;
  } else if (which == "diversity") {
    const double n = param(p, "n"), d = param(p, "d"), k = param(p, "k"), delta = param(p, "delta");
    const auto b = induced_diversity_lower_bound(n, d, k, delta);
    r["formula"] = "(delta (n/k)^(delta/2))^k for k in [n/sqrt(d), sqrt(delta) n]";
    r["log2"] = log2_json(b.value.log2);
    r["in_range"] = b.in_range;
    r["vacuous"] = b.vacuous;
    r["union_term_log2"] = log2_json(union_bound_term_log2(n, k, d / n, delta));
  } else if (which == "ratio") {
    const auto c = binomial_ratio_check(as_count(param(p, "n")), as_count(param(p, "k")), param(p, "delta"));
    r["formula"] = "C(n,k)/C(n,k-k') >= 2 (2 delta (n/k)^(delta/2))^k, k' = ceil(delta k)";
    r["k_prime"] = c.k_prime;
    r["lhs_log2"] = c.lhs_log2;
    r["rhs_log2"] = c.rhs_log2;
    r["holds"] = c.holds;
    if (!c.holds) r["note"] = "below asymptotic regime";
  } else if (which == "representable") {
    const auto rep = representable_collections_log(as_count(param(p, "n")),
                                                   static_cast<unsigned>(param(p, "s")));
    r["formula"] = "2^(u^2) C(C(u,n), n^(2s-1)) with u = n^s; relaxed u^2 + n^(2s-1) n log2 u";
    r["log2"] = log2_json(rep.exact_form.log2);
    r["exact"] = rep.exact_form.exact.has_value();
    r["relaxed_log2"] = rep.relaxed_log2;
  } else if (which == "available") {
    const auto n = as_count(param(p, "n"));
    const auto s = static_cast<unsigned>(param(p, "s"));
    r["formula"] = "n^(2s-1) log2(X / n^(2s-1)), X = (1 - 200 sqrt(d/n)) n^-n (n/d)^(d(n-1)/2), d = 2s+4";
    r["log2"] = log2_json(available_collections_log(n, s).log2);
  } else if (which == "crossover") {
    const auto c = crossover_n(static_cast<unsigned>(param(p, "s")),
                               as_count(param_or(p, "step", 1000)),
                               as_count(param_or(p, "n_max", 1e7)));
    r["formula"] = "least n with available > representable, d = 2s+4";
    r["crossover_n"] = c.crossover_n ? Json(*c.crossover_n) : Json(nullptr);
    r["relaxed_crossover_n"] = c.relaxed_crossover_n ? Json(*c.relaxed_crossover_n) : Json(nullptr);
    r["reverified"] = c.reverified;
    r["monotone"] = c.monotone;
  } else if (which == "transfer") {
    r["formula"] = "10 sqrt(m), m = ceil(p C(n,2))";
    r["value"] = transfer_factor(as_count(param(p, "n")), param(p, "p"));
  } else {
    throw std::invalid_argument("unknown bound '" + which + "'");
  }
  return r;
}

Json build_class(const Json& cfg, unsigned threads) {
  const double c = cfg.at("c").get<double>();
  const unsigned s = cfg.value("s", 1U);
  SdParams params;
  params.d = cfg.value("d", 0.0);
  if (cfg.contains("desk_k0")) params.desk_k0 = cfg.at("desk_k0").get<double>();
  const std::size_t n_max = cfg.value("n_max", std::size_t{5});
  CensusOptions options;
  options.budget = cfg.value("budget", options.budget);
  options.threads = threads;

  std::vector<LevelSet> sets;
  std::vector<std::uint64_t> levels;
  for (const auto& lj : cfg.at("levels")) {
    LevelSet set{lj.at("level").get<std::size_t>(), {}};
    if (lj.contains("graph6"))
      for (const auto& text : lj.at("graph6")) set.graphs.push_back(read_graph6(text.get<std::string>()));
    if (lj.contains("file"))
      for (auto& g : read_graph6_file(lj.at("file").get<std::string>())) set.graphs.push_back(std::move(g));
    if (lj.contains("sample")) {
      const auto& sp = lj.at("sample");
      const std::size_t count = sp.value("count", std::size_t{1});
      for (std::size_t j = 0; j < count; ++j) {
        const auto x = sample_xd_graph(set.level, params, c,
                                       child_seed(Seed{sp.at("seed").get<std::uint64_t>()}, set.level, j),
                                       sp.value("max_tries", std::size_t{20}), options);
        if (x.graph) set.graphs.push_back(*x.graph);
      }
    }
    levels.push_back(set.level);
    sets.push_back(std::move(set));
  }
  std::vector<std::uint64_t> sorted = levels;
  std::sort(sorted.begin(), sorted.end());
  const double gamma = cfg.contains("gamma") ? cfg.at("gamma").get<double>() : gamma_for_levels(s, sorted);
  const auto closure = build_mon_closure_census(sets, n_max, gamma, c, options);

  Json r;
  r["tool"] = kToolName;
  r["version"] = kToolVersion;
  r["finite_truncation"] = true;
  r["t_sparse"] = closure.t_sparse;
  r["gamma"] = gamma;
  Json lv = Json::array();
  for (const auto& set : sets) {
    Json members = Json::array();
    for (const auto& g : set.graphs) members.push_back(write_graph6(g));
    lv.push_back({{"level", set.level}, {"graphs", members},
                  {"cardinality_ok", closure.cardinality_ok.at(set.level)},
                  {"gamma_c_shadow_ok", closure.shadow_ok.at(set.level)}});
  }
  r["levels"] = lv;
  Json counts = Json::array();
  for (const auto& [k, v] : closure.counts) counts.push_back({{"k", k}, {"classes", v}});
  r["closure_counts"] = counts;
  r["complete_through"] = closure.complete_through;
  r["truncated"] = closure.truncated;
  r["alpha"] = closure.alpha;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unlabeled subgraph censuses, tinyness checks and counting bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<unsigned> threads_flag;
  app.add_option("--threads", threads_flag, "Worker threads (default $TINYGRAPH_THREADS or 1)");

  std::string out_path;

  // sample
  auto* sample = app.add_subcommand("sample", "Draw G(n,p) or G(n,m)");
  std::string model = "gnp";
  std::size_t n = 0;
  std::optional<double> p_opt, d_opt;
  std::optional<std::uint64_t> m_opt;
  std::uint64_t seed = 0;
  sample->add_option("--model", model)->check(CLI::IsMember({"gnp", "gnm"}));
  sample->add_option("--n", n)->required();
  sample->add_option("--p", p_opt);
  sample->add_option("--m", m_opt);
  sample->add_option("--d", d_opt, "Average degree: m = ceil(d(n-1)/2)");
  sample->add_option("--seed", seed)->required();
  sample->add_option("--out", out_path);

  // census
  auto* census = app.add_subcommand("census", "Exact census of unlabeled subgraphs");
  std::string in_path, mode = "induced";
  std::size_t k_max = 0, index = 0;
  std::uint64_t budget = CensusOptions{}.budget;
  census->add_option("--in", in_path)->required();
  census->add_option("--index", index, "Graph index within the file");
  census->add_option("--mode", mode)
      ->check(CLI::IsMember({"induced", "subgraph", "connected", "connected-induced", "connected-subgraph"}));
  census->add_option("--kmax", k_max)->required();
  census->add_option("--budget", budget);
  census->add_option("--out", out_path);

  // tinyness
  auto* tiny = app.add_subcommand("tinyness", "Certify monotone (c, S_d, ln^2)-tinyness");
  double c = 100, d = 0;
  std::optional<double> desk_k0;
  std::uint64_t search_budget = kDefaultSearchBudget;
  tiny->add_option("--in", in_path)->required();
  tiny->add_option("--index", index);
  tiny->add_option("--c", c);
  tiny->add_option("--d", d);
  tiny->add_option("--desk-k0", desk_k0);
  tiny->add_option("--budget", budget, "Census step budget");
  tiny->add_option("--search-budget", search_budget, "Dense-subset search nodes per k");
  tiny->add_option("--out", out_path);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Evaluate a closed-form bound");
  std::string which, params_text;
  bounds->add_option("--which", which)->required()->check(CLI::IsMember(
      {"chernoff", "binom", "sparse-connected", "small-dense", "dense-beta", "not-tiny",
       "diversity", "ratio", "representable", "available", "crossover", "transfer"}));
  bounds->add_option("--params", params_text, "key=value,...");
  bounds->add_option("--out", out_path);

  // ladder
  auto* lad = app.add_subcommand("ladder", "l_{i+1} = ceil(exp(sqrt(l_i))), l_0 = 1");
  std::size_t imax = 5;
  lad->add_option("--imax", imax)->required();
  lad->add_option("--out", out_path);

  // build-class
  auto* build = app.add_subcommand("build-class", "Monotone closure census of level sets");
  std::string config_path;
  build->add_option("--config", config_path)->required();
  build->add_option("--out", out_path);

  // represent / label
  auto* represent = app.add_subcommand("represent", "Check a family against a universal graph");
  std::string universal_path, family_path, graph_path;
  represent->add_option("--universal", universal_path)->required();
  represent->add_option("--family", family_path)->required();
  represent->add_option("--out", out_path);

  auto* label = app.add_subcommand("label", "Labels of a graph from a universal graph");
  label->add_option("--universal", universal_path)->required();
  label->add_option("--graph", graph_path)->required();
  label->add_option("--out", out_path);

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Run a configured experiment");
  std::string csv_path;
  experiment->add_option("--config", config_path)->required();
  experiment->add_option("--out", out_path, "Report path (default: config output.report or stdout)");
  experiment->add_option("--csv", csv_path, "Sweep CSV path (default: config output.csv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    const unsigned threads = resolve_threads(threads_flag);
    if (*sample) {
      Graph g;
      if (model == "gnp") {
        if (!p_opt) throw std::invalid_argument("gnp needs --p");
        g = sample_gnp(n, *p_opt, Seed{seed});
      } else {
        std::uint64_t m;
        if (m_opt) m = *m_opt;
        else if (d_opt) m = edges_for_average_degree(n, *d_opt);
        else throw std::invalid_argument("gnm needs --m or --d");
        g = sample_gnm(n, m, Seed{seed});
      }
      write_output(out_path, write_graph6(g) + "\n");
    } else if (*census) {
      const Graph g = read_one(in_path, index);
      CensusOptions options;
      options.budget = budget;
      options.threads = threads;
      CensusTable table;
      if (mode == "induced") table = census_induced(g, k_max, options);
      else if (mode == "subgraph") table = census_subgraphs(g, k_max, options);
      else table = connected_census(g, k_max, census_mode_from_string(mode), options);
      write_output(out_path, report_text(census_to_json(table)));
    } else if (*tiny) {
      const Graph g = read_one(in_path, index);
      SdParams params{d, desk_k0};
      CensusOptions options;
      options.budget = budget;
      options.threads = threads;
      Json r;
      r["tool"] = kToolName;
      r["version"] = kToolVersion;
      r["n"] = g.order();
      r["edges"] = g.edge_count();
      r["c"] = c;
      r["d"] = d;
      r["k0_log"] = params.log_k0();
      r["desk_mode"] = desk_k0.has_value();
      r["verdict"] = verdict_to_json(certify_cyt_tiny(g, c, params, options, search_budget));
      r["sd_membership"] = verdict_to_json(check_sd_membership(g, params, search_budget));
      write_output(out_path, report_text(r));
    } else if (*bounds) {
      write_output(out_path, report_text(bounds_report(which, parse_params(params_text))));
    } else if (*lad) {
      const auto l = ladder(imax);
      const auto sparse = is_t_sparse(l.levels);
      Json r;
      r["levels"] = l.levels;
      r["overflow"] = l.overflow;
      r["ln_squared_sparse"] = sparse.sparse;
      write_output(out_path, report_text(r));
    } else if (*build) {
      Json cfg;
      const std::string text = read_file(config_path);
      try {
        cfg = Json::parse(text);
      } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("malformed class config", e.byte);
      }
      Json r = build_class(cfg, threads);
      r["config_sha256"] = sha256_hex(text);
      write_output(out_path, report_text(r));
    } else if (*represent) {
      const Graph u = read_one(universal_path);
      const auto family = read_graph6_file(family_path);
      const auto res = is_representable(u, family, threads);
      Json r;
      r["universal_order"] = u.order();
      r["family_size"] = family.size();
      r["representable"] = res.representable;
      if (res.failing) {
        r["failing_index"] = *res.failing;
        r["failing_graph6"] = write_graph6(family[*res.failing]);
      }
      write_output(out_path, report_text(r));
    } else if (*label) {
      const Graph u = read_one(universal_path);
      const Graph g = read_one(graph_path);
      const auto labels = labels_from_universal(u, g);
      Json r;
      r["width"] = labels.width;
      r["labels"] = labels.labels;
      Json bits = Json::array();
      for (Vertex v = 0; v < g.order(); ++v) bits.push_back(labels.bits(v));
      r["bits"] = bits;
      write_output(out_path, report_text(r));
    } else if (*experiment) {
      const std::string text = read_file(config_path);
      const auto result = run_experiment(text, threads);
      const Json cfg = Json::parse(text);
      std::string report_path = out_path, curve_path = csv_path;
      if (cfg.contains("output")) {
        if (report_path.empty()) report_path = cfg["output"].value("report", "");
        if (curve_path.empty()) curve_path = cfg["output"].value("csv", "");
      }
      write_output(report_path, report_text(result.report));
      if (!result.csv.empty() && !curve_path.empty()) write_output(curve_path, result.csv);
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
