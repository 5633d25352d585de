#include "tinygraph/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

#include "tinygraph/bounds.hpp"
#include "tinygraph/class_builder.hpp"
#include "tinygraph/error.hpp"
#include "tinygraph/parallel.hpp"
#include "tinygraph/random.hpp"

namespace tinygraph {

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < length; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

std::string report_text(const Json& report) { return report.dump(2) + "\n"; }

Json log2_json(double value) {
  if (std::isinf(value)) return value < 0 ? "-inf" : "inf";
  return value;
}

Json census_to_json(const CensusTable& table) {
  Json out;
  out["mode"] = to_string(table.mode);
  out["n"] = table.n;
  const bool with_edges =
      table.mode == CensusMode::subgraph || table.mode == CensusMode::connected_subgraph;
  Json rows = Json::array();
  Json summary = Json::array();
  for (const auto& [k, row] : table.per_k) {
    for (const auto& [cert, count] : row) {
      Json r;
      r["k"] = k;
      if (with_edges) r["t"] = count.edges;
      r["certificate"] = cert.bytes;
      r["count"] = count.occurrences;
      rows.push_back(std::move(r));
    }
    Json s;
    s["k"] = k;
    s["classes"] = row.size();
    if (with_edges) {
      Json by_t = Json::array();
      for (const auto& [t, c] : table.classes_by_edges(k)) by_t.push_back({{"t", t}, {"classes", c}});
      s["by_edges"] = std::move(by_t);
    }
    summary.push_back(std::move(s));
  }
  out["rows"] = std::move(rows);
  out["summary"] = std::move(summary);
  return out;
}

Json verdict_to_json(const TinynessVerdict& v) {
  Json out;
  out["outcome"] = to_string(v.outcome);
  out["method"] = to_string(v.method);
  out["condition"] = v.condition;
  if (!v.witness.empty()) {
    out["witness"] = v.witness;
    out["witness_edges"] = v.witness_edges;
    out["witness_threshold"] = edge_surplus_threshold(v.witness.size());
  }
  if (v.limiting_k) out["limiting_k"] = *v.limiting_k;
  if (v.witness_count) out["witness_count"] = v.witness_count;
  out["density_range"] = {v.density_from, v.density_to};
  out["census_from"] = v.census_from;
  out["k_cap"] = v.k_cap;
  out["largest_component"] = v.largest_component;
  Json counts = Json::object();
  for (const auto& [k, c] : v.connected_counts) counts[std::to_string(k)] = c;
  out["connected_counts"] = std::move(counts);
  if (!v.bounded_k.empty()) out["bounded_k"] = v.bounded_k;
  if (!v.undecided_census_k.empty()) out["undecided_census_k"] = v.undecided_census_k;
  if (!v.undecided_k.empty()) out["undecided_k"] = v.undecided_k;
  return out;
}

namespace {

template <class T>
T need(const Json& cfg, const char* key) {
  if (!cfg.contains(key)) throw std::invalid_argument(std::string("config field '") + key + "' missing");
  try {
    return cfg.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument(std::string("config field '") + key + "' has the wrong type");
  }
}

template <class T>
T optional_field(const Json& cfg, const char* key, T fallback) {
  return cfg.contains(key) && !cfg.at(key).is_null() ? need<T>(cfg, key) : fallback;
}

Json header(const Json& config, const char* kind, const char* claim) {
  Json out;
  out["tool"] = kToolName;
  out["version"] = kToolVersion;
  out["kind"] = kind;
  out["config_sha256"] = sha256_hex(config.dump());
  out["claim"] = claim;
  return out;
}

std::string csv_number(double x) {
  if (std::isinf(x)) return x < 0 ? "-inf" : "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct ComponentStats {
  std::size_t components = 0;
  std::size_t largest = 0;
  std::size_t max_cycles = 0;  // max over components of e - v + 1
  bool tree_or_unicyclic = true;
};

ComponentStats component_stats(const Graph& g) {
  ComponentStats s;
  for (const auto& comp : connected_components(g)) {
    const auto members = comp.members();
    std::size_t degree_sum = 0;
    for (Vertex v : members) degree_sum += g.degree(v);
    const std::size_t cycles = degree_sum / 2 + 1 - members.size();
    ++s.components;
    s.largest = std::max(s.largest, members.size());
    s.max_cycles = std::max(s.max_cycles, cycles);
    if (cycles > 1) s.tree_or_unicyclic = false;
  }
  return s;
}

CensusOptions census_options(const Json& cfg) {
  CensusOptions options;
  options.budget = optional_field<std::uint64_t>(cfg, "budget", options.budget);
  options.threads = 1;
  return options;
}

SdParams sd_params(const Json& cfg) {
  SdParams params;
  params.d = need<double>(cfg, "d");
  if (cfg.contains("desk_k0") && !cfg.at("desk_k0").is_null())
    params.desk_k0 = need<double>(cfg, "desk_k0");
  return params;
}

}  // namespace

ExperimentResult run_tinyness_profile(const Json& cfg, unsigned threads) {
  const auto n = need<std::size_t>(cfg, "n");
  const double c = need<double>(cfg, "c");
  const SdParams params = sd_params(cfg);
  const auto replicates = need<std::size_t>(cfg, "replicates");
  const Seed seed{need<std::uint64_t>(cfg, "seed")};
  const auto fit_k = optional_field<std::size_t>(cfg, "fit_k_max", 6);
  const auto search_budget = optional_field<std::uint64_t>(cfg, "search_budget", kDefaultSearchBudget);
  const CensusOptions options = census_options(cfg);
  const std::uint64_t m = edges_for_average_degree(n, params.d);

  struct Row {
    Seed seed;
    std::size_t edges = 0;
    TinynessVerdict verdict;
    TinynessVerdict density;
    double c_min = 0;
    std::size_t fit_through = 0;
    ComponentStats comps;
  };
  std::vector<Row> rows(replicates);
  const double t = n >= 2 ? ln_squared(static_cast<double>(n)) : 0.0;
  parallel_for(replicates, threads, [&](std::size_t r, unsigned) {
    Row& row = rows[r];
    row.seed = child_seed(seed, 1, r);
    const Graph g = sample_gnm(n, m, row.seed);
    row.edges = g.edge_count();
    row.verdict = certify_cyt_tiny(g, c, params, options, search_budget);
    row.density = check_density_range(g, params.first_k(), static_cast<std::size_t>(t), search_budget);
    row.comps = component_stats(g);
    for (std::size_t k = std::min(fit_k, n); k >= 1; --k) {
      try {
        const auto table = connected_census(g, k, CensusMode::connected_subgraph, options);
        const auto profile = fit_tinyness(table);
        row.c_min = profile.c_min;
        row.fit_through = k;
        break;
      } catch (const BudgetExceeded&) {
      }
    }
  });

  Json report = header(cfg, "tinyness-profile",
                       "G(n, ceil(d(n-1)/2)) fails to be monotone (c, S_d, ln^2)-tiny "
                       "with probability below 200 sqrt(d/n)");
  report["parameters"] = {{"n", n}, {"d", params.d}, {"m", m}, {"c", c},
                          {"k0_log", params.log_k0()}, {"t", t}, {"replicates", replicates}};
  Json seeds = Json::array();
  Json samples = Json::array();
  std::size_t violated = 0, holds = 0, inconclusive = 0;
  bool density_ok_on_accepting = true;
  for (std::size_t r = 0; r < replicates; ++r) {
    const Row& row = rows[r];
    seeds.push_back(row.seed.value);
    switch (row.verdict.outcome) {
      case Outcome::violated: ++violated; break;
      case Outcome::holds: ++holds; break;
      case Outcome::inconclusive: ++inconclusive; break;
    }
    if (row.verdict.outcome == Outcome::holds && row.density.outcome != Outcome::holds)
      density_ok_on_accepting = false;
    Json s;
    s["index"] = r;
    s["seed"] = row.seed.value;
    s["edges"] = row.edges;
    s["verdict"] = verdict_to_json(row.verdict);
    s["small_k_density"] = to_string(row.density.outcome);
    s["c_min"] = row.c_min;
    s["c_min_through_k"] = row.fit_through;
    s["components"] = row.comps.components;
    s["largest_component"] = row.comps.largest;
    samples.push_back(std::move(s));
  }
  const double frequency = replicates ? static_cast<double>(violated) / replicates : 0.0;
  const auto bound = not_tiny_probability(static_cast<double>(n), params.d);
  report["seeds"] = std::move(seeds);
  report["samples"] = std::move(samples);
  report["summary"] = {{"holds", holds},
                       {"violated", violated},
                       {"inconclusive", inconclusive},
                       {"violation_frequency", frequency},
                       {"small_k_density_ok_on_accepting", density_ok_on_accepting},
                       {"bound", bound.value},
                       {"bound_informative", bound.informative},
                       {"frequency_within_bound", frequency <= bound.value}};
  return {report, ""};
}

ExperimentResult run_threshold(const Json& cfg, unsigned threads) {
  const auto n = need<std::size_t>(cfg, "n");
  const Seed seed{need<std::uint64_t>(cfg, "seed")};
  const auto grid = need<std::vector<double>>(cfg, "pn_grid");
  const auto census_k = optional_field<std::size_t>(cfg, "census_k_max", 4);
  const Json div = optional_field<Json>(cfg, "diversity", Json::object());
  const auto div_k = optional_field<std::size_t>(div, "k", 0);
  const auto div_samples = optional_field<std::size_t>(div, "samples", 0);
  const double div_min_pn = optional_field<double>(div, "min_pn", 1.0);
  const CensusOptions options = census_options(cfg);

  struct Point {
    Seed graph_seed, sample_seed;
    std::size_t edges = 0;
    ComponentStats comps;
    std::map<std::size_t, std::size_t> census;
    bool census_done = false;
    std::optional<DiversitySample> diversity;
  };
  std::vector<Point> points(grid.size());
  parallel_for(grid.size(), threads, [&](std::size_t i, unsigned) {
    Point& pt = points[i];
    pt.graph_seed = child_seed(seed, 2, i);
    pt.sample_seed = child_seed(seed, 3, i);
    const double p = std::min(1.0, grid[i] / static_cast<double>(n));
    const Graph g = sample_gnp(n, p, pt.graph_seed);
    pt.edges = g.edge_count();
    pt.comps = component_stats(g);
    if (grid[i] < 1 && census_k > 0) {
      try {
        const auto table =
            connected_census(g, std::min(census_k, n), CensusMode::connected_subgraph, options);
        for (std::size_t k = 1; k <= std::min(census_k, n); ++k) pt.census[k] = table.classes(k);
        pt.census_done = true;
      } catch (const BudgetExceeded&) {
      }
    }
    if (grid[i] >= div_min_pn && div_k > 0 && div_samples > 0)
      pt.diversity = sampled_induced_diversity(g, div_k, div_samples, pt.sample_seed,
                                               std::max(div_k, kDenseVertexLimit));
  });

  Json report = header(cfg, "threshold",
                       "below p = (1 - delta)/n every component has at most one cycle and "
                       "s(G) = 2^o(n); above C/n, i(G) > lambda^n");
  report["parameters"] = {{"n", n}, {"pn_grid", grid}, {"census_k_max", census_k},
                          {"diversity_k", div_k}, {"diversity_samples", div_samples},
                          {"diversity_min_pn", div_min_pn}};
  report["csv_schema"] = "threshold/1";
  Json seeds = Json::array();
  Json rows = Json::array();
  std::ostringstream csv;
  csv << "pn,p,graph_seed,edges,components,largest_component,max_cycles,tree_or_unicyclic,"
         "diversity_k,samples,distinct,growth\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Point& pt = points[i];
    const double p = std::min(1.0, grid[i] / static_cast<double>(n));
    seeds.push_back(pt.graph_seed.value);
    Json row;
    row["pn"] = grid[i];
    row["p"] = p;
    row["graph_seed"] = pt.graph_seed.value;
    row["edges"] = pt.edges;
    row["components"] = pt.comps.components;
    row["largest_component"] = pt.comps.largest;
    row["max_cycles"] = pt.comps.max_cycles;
    row["tree_or_unicyclic"] = pt.comps.tree_or_unicyclic;
    if (pt.census_done) {
      Json c = Json::object();
      for (const auto& [k, v] : pt.census) c[std::to_string(k)] = v;
      row["connected_subgraph_classes"] = std::move(c);
    }
    double growth = 0;
    if (pt.diversity) {
      growth = std::pow(static_cast<double>(pt.diversity->distinct), 1.0 / div_k);
      row["sample_seed"] = pt.sample_seed.value;
      row["distinct"] = pt.diversity->distinct;
      row["samples"] = pt.diversity->samples;
      row["growth"] = growth;
    }
    rows.push_back(std::move(row));
    csv << csv_number(grid[i]) << ',' << csv_number(p) << ',' << pt.graph_seed.value << ','
        << pt.edges << ',' << pt.comps.components << ',' << pt.comps.largest << ','
        << pt.comps.max_cycles << ',' << (pt.comps.tree_or_unicyclic ? 1 : 0) << ',';
    if (pt.diversity)
      csv << div_k << ',' << pt.diversity->samples << ',' << pt.diversity->distinct << ','
          << csv_number(growth);
    else
      csv << ",,,";
    csv << '\n';
  }
  report["seeds"] = std::move(seeds);
  report["points"] = std::move(rows);
  return {report, csv.str()};
}

ExperimentResult run_diversity(const Json& cfg, unsigned) {
  const auto n = need<std::size_t>(cfg, "n");
  const auto k = need<std::size_t>(cfg, "k");
  const auto samples = need<std::size_t>(cfg, "samples");
  const Seed graph_seed{need<std::uint64_t>(cfg, "graph_seed")};
  const Seed sample_seed{need<std::uint64_t>(cfg, "sample_seed")};
  const double delta = optional_field<double>(cfg, "delta", 0.1);
  const auto override_kind = optional_field<std::string>(cfg, "graph", "gnp");
  double p;
  if (cfg.contains("p")) {
    p = need<double>(cfg, "p");
  } else {
    p = need<double>(cfg, "d") / static_cast<double>(n);
  }
  const double d = p * static_cast<double>(n);

  Graph g;
  if (override_kind == "gnp") {
    g = sample_gnp(n, p, graph_seed);
  } else if (override_kind == "complete") {
    g = complete_graph(n);
  } else if (override_kind == "empty") {
    g = Graph(n);
  } else {
    throw std::invalid_argument("config field 'graph' must be gnp, complete or empty");
  }
  const auto sample = sampled_induced_diversity(g, k, samples, sample_seed,
                                                std::max(k, kDenseVertexLimit));

  Json report = header(cfg, "diversity",
                       "G(n, d/n) has i_k > (delta (n/k)^(delta/2))^k for k in "
                       "[n/sqrt(d), sqrt(delta) n]");
  report["parameters"] = {{"n", n}, {"p", p}, {"d", d}, {"k", k}, {"samples", samples},
                          {"delta", delta}, {"graph", override_kind}};
  report["seeds"] = {graph_seed.value, sample_seed.value};
  report["graph_edges"] = g.edge_count();
  report["distinct"] = sample.distinct;
  report["lower_bound_on_i_k"] = sample.lower_bound_on_i_k;
  report["distinct_per_sample"] = static_cast<double>(sample.distinct) / samples;
  if (override_kind == "gnp") {
    const auto bound = induced_diversity_lower_bound(static_cast<double>(n), d,
                                                     static_cast<double>(k), delta);
    report["analytic"] = {
        {"log2_bound", log2_json(bound.value.log2)},
        {"in_range", bound.in_range},
        {"vacuous", bound.vacuous},
        {"observed_log2", std::log2(static_cast<double>(sample.distinct))},
        {"union_term_log2", log2_json(union_bound_term_log2(static_cast<double>(n),
                                                            static_cast<double>(k), p, delta))}};
  } else {
    report["analytic"] = nullptr;
  }
  return {report, ""};
}

ExperimentResult run_crossover(const Json& cfg, unsigned threads) {
  const auto s_list = need<std::vector<unsigned>>(cfg, "s");
  const auto step = optional_field<std::uint64_t>(cfg, "step", 1000);
  const auto n_max = optional_field<std::uint64_t>(cfg, "n_max", 10'000'000);

  std::vector<CrossoverReport> results(s_list.size());
  parallel_for(s_list.size(), threads, [&](std::size_t i, unsigned) {
    results[i] = crossover_n(s_list[i], step, n_max);
  });

  Json report = header(cfg, "crossover",
                       "collections of sparse tiny graphs outnumber the collections "
                       "representable in one n^s-vertex universal graph");
  report["parameters"] = {{"s", s_list}, {"step", step}, {"n_max", n_max}};
  report["csv_schema"] = "crossover/1";
  std::ostringstream csv;
  csv << "s,d,n,available_log2,representable_log2,relaxed_log2\n";
  Json entries = Json::array();
  for (const auto& r : results) {
    Json e;
    e["s"] = r.s;
    e["d"] = r.d;
    e["monotone"] = r.monotone;
    e["scan_points"] = r.curve.size();
    if (r.crossover_n) {
      const auto n = *r.crossover_n;
      e["crossover_n"] = n;
      e["reverified"] = r.reverified;
      e["exact_at_crossover"] = r.exact_at_crossover;
      e["at_crossover"] = {
          {"available_log2", log2_json(available_collections_log(n, r.s).log2)},
          {"representable_log2",
           log2_json(representable_collections_log(n, r.s).exact_form.log2)}};
      e["before_crossover"] = {
          {"available_log2", log2_json(available_collections_log(n - 1, r.s).log2)},
          {"representable_log2",
           log2_json(representable_collections_log(n - 1, r.s).exact_form.log2)}};
    } else {
      e["crossover_n"] = nullptr;
    }
    if (r.relaxed_crossover_n)
      e["relaxed_crossover_n"] = *r.relaxed_crossover_n;
    else
      e["relaxed_crossover_n"] = nullptr;
    entries.push_back(std::move(e));
    for (const auto& pt : r.curve)
      csv << r.s << ',' << csv_number(r.d) << ',' << pt.n << ',' << csv_number(pt.available)
          << ',' << csv_number(pt.representable) << ',' << csv_number(pt.relaxed) << '\n';
  }
  report["results"] = std::move(entries);
  return {report, csv.str()};
}

ExperimentResult run_ladder_class(const Json& cfg, unsigned threads) {
  std::vector<std::uint64_t> levels;
  if (cfg.contains("ladder_imax")) {
    const auto lad = ladder(need<std::size_t>(cfg, "ladder_imax"));
    for (auto l : lad.levels)
      if (l > 1) levels.push_back(l);
  } else {
    levels = optional_field<std::vector<std::uint64_t>>(cfg, "levels", {});
  }
  const auto per_level = optional_field<std::size_t>(cfg, "graphs_per_level", 1);
  const auto s = optional_field<unsigned>(cfg, "s", 1);
  const double c = need<double>(cfg, "c");
  const SdParams params = sd_params(cfg);
  const Seed seed{need<std::uint64_t>(cfg, "seed")};
  const auto n_max = optional_field<std::size_t>(cfg, "n_max", 5);
  const auto max_tries = optional_field<std::size_t>(cfg, "max_tries", 20);
  const CensusOptions options = census_options(cfg);

  struct Job {
    std::size_t level_index, replicate;
    XdSample sample;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < levels.size(); ++i)
    for (std::size_t j = 0; j < per_level; ++j) jobs.push_back({i, j, {}});
  parallel_for(jobs.size(), threads, [&](std::size_t t, unsigned) {
    Job& job = jobs[t];
    job.sample = sample_xd_graph(levels[job.level_index], params, c,
                                 child_seed(seed, levels[job.level_index], job.replicate),
                                 max_tries, options);
  });

  std::vector<LevelSet> sets;
  for (auto l : levels) sets.push_back({l, {}});
  Json level_json = Json::array();
  for (std::size_t i = 0; i < levels.size(); ++i) {
    Json lj;
    const double target = std::pow(static_cast<double>(levels[i]), 2.0 * s - 1);
    Json members = Json::array();
    for (const auto& job : jobs) {
      if (job.level_index != i) continue;
      Json mj;
      mj["replicate"] = job.replicate;
      mj["tries"] = job.sample.verdicts.size();
      mj["accepted"] = job.sample.graph.has_value();
      if (job.sample.graph) {
        mj["graph6"] = write_graph6(*job.sample.graph);
        mj["seed"] = job.sample.seeds.back().value;
        sets[i].graphs.push_back(*job.sample.graph);
      } else {
        Json outcomes = Json::array();
        for (const auto& v : job.sample.verdicts) outcomes.push_back(to_string(v.outcome));
        mj["outcomes"] = std::move(outcomes);
      }
      members.push_back(std::move(mj));
    }
    lj["level"] = levels[i];
    lj["edges"] = edges_for_average_degree(levels[i], params.d);
    lj["target_cardinality"] = target;
    lj["built_cardinality"] = sets[i].graphs.size();
    lj["shortfall"] = std::max(0.0, target - static_cast<double>(sets[i].graphs.size()));
    lj["members"] = std::move(members);
    level_json.push_back(std::move(lj));
  }

  const double gamma = gamma_for_levels(s, levels);
  const auto closure = build_mon_closure_census(sets, n_max, gamma, c, options);

  Json report = header(cfg, "ladder-class",
                       "the monotone closure of t-sparse level sets of tiny graphs is a "
                       "tiny class (finite truncation only)");
  report["parameters"] = {{"levels", levels}, {"graphs_per_level", per_level}, {"s", s},
                          {"d", params.d}, {"c", c}, {"n_max", n_max}, {"max_tries", max_tries}};
  report["seeds"] = {seed.value};
  report["finite_truncation"] = true;
  report["t_sparse"] = closure.t_sparse;
  report["gamma"] = gamma;
  report["levels"] = std::move(level_json);
  Json counts = Json::array();
  bool alpha_ok = true;
  for (const auto& [k, count] : closure.counts) {
    counts.push_back({{"k", k}, {"classes", count}});
    if (static_cast<double>(count) > std::pow(closure.alpha, static_cast<double>(k)) * (1 + 1e-12))
      alpha_ok = false;
  }
  report["closure_counts"] = std::move(counts);
  report["complete_through"] = closure.complete_through;
  report["truncated"] = closure.truncated;
  report["alpha"] = closure.alpha;
  report["alpha_reverified"] = alpha_ok;
  Json card = Json::object(), shadow = Json::object();
  for (const auto& [l, ok] : closure.cardinality_ok) card[std::to_string(l)] = ok;
  for (const auto& [l, ok] : closure.shadow_ok) shadow[std::to_string(l)] = ok;
  report["cardinality_ok"] = std::move(card);
  report["gamma_c_shadow_ok"] = std::move(shadow);
  return {report, ""};
}

ExperimentResult run_experiment(const std::string& config_text, unsigned threads) {
  Json cfg;
  try {
    cfg = Json::parse(config_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed config JSON", e.byte);
  }
  if (!cfg.is_object()) throw ParseError("config must be a JSON object", 0);
  const auto kind = need<std::string>(cfg, "kind");
  ExperimentResult result;
  if (kind == "tinyness-profile") {
    result = run_tinyness_profile(cfg, threads);
  } else if (kind == "threshold") {
    result = run_threshold(cfg, threads);
  } else if (kind == "diversity") {
    result = run_diversity(cfg, threads);
  } else if (kind == "crossover") {
    result = run_crossover(cfg, threads);
  } else if (kind == "ladder-class") {
    result = run_ladder_class(cfg, threads);
  } else {
    throw std::invalid_argument("unknown experiment kind '" + kind + "'");
  }
  result.report["config_sha256"] = sha256_hex(config_text);
  return result;
}

}  // namespace tinygraph
