// Command-line front end. Talks to the core exclusively through the C API.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nlohmann/json.hpp"
#include "rigidity.h"

using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;
constexpr int kExitHypothesis = 3;

struct GlobalOpts {
  uint64_t seed = 0;
  int trials = 2;
  std::string out;
  int threads = 1;
  std::string config;
};

int status_exit(int status) {
  if (status == RIGIDITY_OK) return kExitOk;
  std::cerr << "error: " << rigidity_last_error() << "\n";
  return status == RIGIDITY_EHYPOTHESIS ? kExitHypothesis : kExitError;
}

bool write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream f(out_path);
  if (!f) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return false;
  }
  f << text;
  return true;
}

// Config file values fill in anything not given on the command line.
json load_config(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open config file " + path);
  json j;
  f >> j;
  if (!j.is_object()) throw std::runtime_error("config must be a JSON object");
  return j;
}

template <typename T>
void merge(const json& cfg, const CLI::Option* opt, const char* key, T& value) {
  if (opt && opt->count() > 0) return;  // explicit flag wins
  if (cfg.contains(key)) value = cfg.at(key).get<T>();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct GraphHandle {
  rigidity_graph* g = nullptr;
  ~GraphHandle() { rigidity_graph_free(g); }
};

struct StringHandle {
  char* s = nullptr;
  ~StringHandle() { rigidity_free_string(s); }
};

int run_experiment(const json& config, const std::string& out_path) {
  StringHandle csv;
  int st = rigidity_experiment(config.dump().c_str(), &csv.s);
  if (st != RIGIDITY_OK) return status_exit(st);
  return write_output(out_path, csv.s) ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rigidity: generic d-rigidity checks, partition certifiers, "
               "and Monte Carlo experiments"};
  app.require_subcommand(1);

  GlobalOpts g;
  auto* seed_opt = app.add_option("--seed", g.seed, "master RNG seed");
  auto* trials_opt = app.add_option("--trials", g.trials, "randomized trials");
  app.add_option("--out", g.out, "output file (default: stdout)");
  auto* threads_opt =
      app.add_option("--threads", g.threads, "worker threads for experiments");
  app.add_option("--config", g.config, "JSON config file mirroring the flags");

  // check
  std::string check_file;
  int check_d = 2;
  auto* check = app.add_subcommand("check", "decide generic d-rigidity of an "
                                            "EdgeList file");
  check->add_option("file", check_file, "EdgeList file")->required();
  auto* check_d_opt = check->add_option("-d,--dim", check_d, "dimension");

  // threshold
  int th_n = 150, th_d = 2;
  std::vector<double> th_grid;
  auto* threshold =
      app.add_subcommand("threshold", "rigidity threshold sweep over G(n,p)");
  auto* th_n_opt = threshold->add_option("-n", th_n, "vertex count");
  auto* th_d_opt = threshold->add_option("-d,--dim", th_d, "dimension");
  auto* th_grid_opt =
      threshold->add_option("-p,--p-grid", th_grid, "edge probability grid");

  // giant
  int gi_n = 0, gi_m = 1, gi_k = 1;
  double gi_p = 0.0;
  std::string gi_eta = "9/10";
  auto* giant =
      app.add_subcommand("giant", "connector pipeline on G(n,p) samples");
  auto* gi_n_opt = giant->add_option("-n", gi_n, "vertex count");
  auto* gi_p_opt = giant->add_option("-p", gi_p, "edge probability");
  auto* gi_m_opt = giant->add_option("-m", gi_m, "number of blocks");
  auto* gi_k_opt = giant->add_option("-k", gi_k, "connector parameter");
  auto* gi_eta_opt = giant->add_option("--eta", gi_eta, "degree fraction a/b");

  // regular
  int re_n = 0, re_r = 0, re_d = 2;
  auto* regular =
      app.add_subcommand("regular", "d-rigidity of random r-regular graphs");
  auto* re_n_opt = regular->add_option("-n", re_n, "vertex count");
  auto* re_r_opt = regular->add_option("-r", re_r, "degree");
  auto* re_d_opt = regular->add_option("-d,--dim", re_d, "dimension");

  // codegree
  int co_n = 0;
  std::string co_model = "cliques";
  std::vector<int> co_grid;
  auto* codegree =
      app.add_subcommand("codegree", "codegree-based rigidity experiments");
  auto* co_n_opt = codegree->add_option("-n", co_n, "vertex count");
  auto* co_model_opt = codegree->add_option(
      "--model", co_model, "cliques | gnp | partition");
  auto* co_grid_opt =
      codegree->add_option("-k,--k-grid", co_grid, "clique overlap grid");

  // certify-partition
  std::string cp_file, cp_spec;
  auto* certify = app.add_subcommand(
      "certify-partition", "run a partition certifier from a JSON spec");
  certify->add_option("file", cp_file, "EdgeList file")->required();
  certify->add_option("--spec", cp_spec, "JSON spec file with kind/d/blocks")
      ->required();

  // connector
  std::string cn_file, cn_eta = "9/10";
  int cn_m = 0, cn_k = 1, cn_s = 0;
  auto* connector = app.add_subcommand(
      "connector", "Theorem-1.5 connector pipeline on one graph");
  connector->add_option("file", cn_file, "EdgeList file")->required();
  auto* cn_m_opt = connector->add_option("-m", cn_m, "number of blocks");
  auto* cn_k_opt = connector->add_option("-k", cn_k, "connector parameter");
  auto* cn_eta_opt =
      connector->add_option("--eta", cn_eta, "degree fraction a/b");
  auto* cn_s_opt = connector->add_option("-s", cn_s, "removal cap (0: 4k)");

  // plot
  std::string pl_csv, pl_x;
  std::vector<std::string> pl_y;
  auto* plot = app.add_subcommand("plot", "render a CSV as an SVG line chart");
  plot->add_option("csv", pl_csv, "CSV file")->required();
  plot->add_option("-x", pl_x, "x column")->required();
  plot->add_option("-y", pl_y, "y columns")->required();

  for (auto* sub : {check, threshold, giant, regular, codegree, certify,
                    connector, plot})
    sub->fallthrough();  // let --seed etc. appear after the subcommand

  CLI11_PARSE(app, argc, argv);

  try {
    json cfg = load_config(g.config);
    merge(cfg, seed_opt, "seed", g.seed);
    merge(cfg, trials_opt, "trials", g.trials);
    merge(cfg, threads_opt, "threads", g.threads);
    if (g.out.empty() && cfg.contains("out"))
      g.out = cfg.at("out").get<std::string>();

    if (check->parsed()) {
      merge(cfg, check_d_opt, "d", check_d);
      GraphHandle gh;
      int st = rigidity_graph_read(check_file.c_str(), &gh.g);
      if (st != RIGIDITY_OK) return status_exit(st);
      StringHandle verdict;
      st = rigidity_check(gh.g, check_d, g.seed, g.trials, &verdict.s);
      if (st != RIGIDITY_OK) return status_exit(st);
      if (!write_output(g.out, std::string(verdict.s) + "\n"))
        return kExitError;
      return json::parse(verdict.s).at("rigid").get<bool>() ? kExitOk
                                                            : kExitNegative;
    }

    if (threshold->parsed()) {
      merge(cfg, th_n_opt, "n", th_n);
      merge(cfg, th_d_opt, "d", th_d);
      merge(cfg, th_grid_opt, "p_grid", th_grid);
      if (th_grid.empty()) {
        std::cerr << "error: empty p grid\n";
        return kExitError;
      }
      json c{{"experiment", "threshold"}, {"n", th_n},         {"d", th_d},
             {"p_grid", th_grid},         {"trials", g.trials}, {"seed", g.seed},
             {"threads", g.threads}};
      return run_experiment(c, g.out);
    }

    if (giant->parsed()) {
      merge(cfg, gi_n_opt, "n", gi_n);
      merge(cfg, gi_p_opt, "p", gi_p);
      merge(cfg, gi_m_opt, "m", gi_m);
      merge(cfg, gi_k_opt, "k", gi_k);
      merge(cfg, gi_eta_opt, "eta", gi_eta);
      json c{{"experiment", "giant"}, {"n", gi_n},          {"p", gi_p},
             {"m", gi_m},             {"k", gi_k},          {"eta", gi_eta},
             {"trials", g.trials},    {"seed", g.seed},     {"threads", g.threads}};
      return run_experiment(c, g.out);
    }

    if (regular->parsed()) {
      merge(cfg, re_n_opt, "n", re_n);
      merge(cfg, re_r_opt, "r", re_r);
      merge(cfg, re_d_opt, "d", re_d);
      json c{{"experiment", "regular"}, {"n", re_n},        {"r", re_r},
             {"d", re_d},               {"trials", g.trials}, {"seed", g.seed},
             {"threads", g.threads}};
      return run_experiment(c, g.out);
    }

    if (codegree->parsed()) {
      merge(cfg, co_n_opt, "n", co_n);
      merge(cfg, co_model_opt, "model", co_model);
      merge(cfg, co_grid_opt, "k_grid", co_grid);
      json c{{"experiment", "codegree"}, {"n", co_n},
             {"model", co_model},        {"k_grid", co_grid},
             {"trials", g.trials},       {"seed", g.seed},
             {"threads", g.threads}};
      return run_experiment(c, g.out);
    }

    if (certify->parsed()) {
      GraphHandle gh;
      int st = rigidity_graph_read(cp_file.c_str(), &gh.g);
      if (st != RIGIDITY_OK) return status_exit(st);
      json spec = json::parse(slurp(cp_spec));
      if (!spec.contains("seed")) spec["seed"] = g.seed;
      StringHandle verdict;
      st = rigidity_certify(gh.g, spec.dump().c_str(), &verdict.s);
      if (st != RIGIDITY_OK) return status_exit(st);
      if (!write_output(g.out, std::string(verdict.s) + "\n"))
        return kExitError;
      json v = json::parse(verdict.s);
      if (v.at("accepted").get<bool>()) return kExitOk;
      return v.at("failing_obligation") == "hypothesis-violated"
                 ? kExitHypothesis
                 : kExitNegative;
    }

    if (connector->parsed()) {
      merge(cfg, cn_m_opt, "m", cn_m);
      merge(cfg, cn_k_opt, "k", cn_k);
      merge(cfg, cn_eta_opt, "eta", cn_eta);
      merge(cfg, cn_s_opt, "s", cn_s);
      GraphHandle gh;
      int st = rigidity_graph_read(cn_file.c_str(), &gh.g);
      if (st != RIGIDITY_OK) return status_exit(st);
      json c{{"k", cn_k}, {"eta", cn_eta},      {"s", cn_s},
             {"seed", g.seed}, {"trials", g.trials}};
      if (cfg.contains("blocks"))
        c["blocks"] = cfg.at("blocks");
      else
        c["m"] = cn_m;
      StringHandle trace;
      st = rigidity_connector(gh.g, c.dump().c_str(), &trace.s);
      if (st != RIGIDITY_OK) return status_exit(st);
      if (!write_output(g.out, std::string(trace.s) + "\n")) return kExitError;
      json t = json::parse(trace.s);
      bool ok = t.contains("strong") && t["strong"].value("accepted", false);
      if (ok) return kExitOk;
      std::string fail =
          t.contains("strong")
              ? t["strong"].value("failing_obligation", std::string("unknown"))
              : "unknown";
      return fail == "hypothesis-violated" ? kExitHypothesis : kExitNegative;
    }

    if (plot->parsed()) {
      std::string csv = slurp(pl_csv);
      json c{{"x", pl_x}, {"y", pl_y}};
      StringHandle svg;
      int st = rigidity_plot(csv.c_str(), c.dump().c_str(), &svg.s);
      if (st != RIGIDITY_OK) return status_exit(st);
      return write_output(g.out, svg.s) ? kExitOk : kExitError;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
