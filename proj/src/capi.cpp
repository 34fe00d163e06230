#include "rigidity.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>

#include "nlohmann/json.hpp"
#include "rigidity/certify.hpp"
#include "rigidity/connector.hpp"
#include "rigidity/edgelist.hpp"
#include "rigidity/engine.hpp"
#include "rigidity/errors.hpp"
#include "rigidity/experiments.hpp"
#include "rigidity/svgplot.hpp"

using json = nlohmann::json;

struct rigidity_graph {
  rigidity::Graph g;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
int guarded(F&& f) {
  try {
    f();
    return RIGIDITY_OK;
  } catch (const rigidity::ParseError& e) {
    g_last_error = e.what();
    return RIGIDITY_EPARSE;
  } catch (const rigidity::IoError& e) {
    g_last_error = e.what();
    return RIGIDITY_EIO;
  } catch (const rigidity::CapExceededError& e) {
    g_last_error = e.what();
    return RIGIDITY_ECAP;
  } catch (const rigidity::HypothesisError& e) {
    g_last_error = e.what();
    return RIGIDITY_EHYPOTHESIS;
  } catch (const rigidity::BigComponentError& e) {
    g_last_error = e.what();
    return RIGIDITY_EHYPOTHESIS;
  } catch (const json::parse_error& e) {
    g_last_error = e.what();
    return RIGIDITY_EPARSE;
  } catch (const json::exception& e) {
    g_last_error = e.what();
    return RIGIDITY_EPARSE;
  } catch (const rigidity::Error& e) {
    g_last_error = e.what();
    return RIGIDITY_EINVAL;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return RIGIDITY_EINVAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RIGIDITY_EINTERNAL;
  }
}

rigidity::Rational parse_eta(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    size_t slash = s.find('/');
    if (slash == std::string::npos)
      return rigidity::Rational(std::stoll(s));
    return rigidity::Rational(std::stoll(s.substr(0, slash)),
                              std::stoll(s.substr(slash + 1)));
  }
  if (j.is_array())
    return rigidity::Rational(j.at(0).get<long long>(),
                              j.at(1).get<long long>());
  // decimal fallback on a fixed denominator grid
  return rigidity::Rational(llround(j.get<double>() * 840), 840);
}

rigidity::Partition parse_blocks(const rigidity::Graph& g, const json& j) {
  if (j.contains("blocks"))
    return rigidity::Partition(
        g.vertex_count(),
        j.at("blocks").get<std::vector<std::vector<int>>>());
  if (j.contains("m"))
    return rigidity::Partition::contiguous_equipartition(g.vertex_count(),
                                                         j.at("m").get<int>());
  throw rigidity::Error("expected \"blocks\" or \"m\"");
}

std::vector<std::pair<int, int>> parse_edge_array(const json& j) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : j) out.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return out;
}

}  // namespace

extern "C" {

const char* rigidity_version(void) { return "1.0.0"; }

const char* rigidity_last_error(void) { return g_last_error.c_str(); }

void rigidity_free_string(char* s) { std::free(s); }

int rigidity_graph_create(int n, const int* us, const int* vs, int edge_count,
                          rigidity_graph** out) {
  return guarded([&] {
    if (!out || (edge_count > 0 && (!us || !vs)))
      throw rigidity::Error("null argument");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(size_t(edge_count));
    for (int i = 0; i < edge_count; ++i) edges.emplace_back(us[i], vs[i]);
    *out = new rigidity_graph{rigidity::Graph(n, std::move(edges))};
  });
}

int rigidity_graph_read(const char* path, rigidity_graph** out) {
  return guarded([&] {
    if (!path || !out) throw rigidity::Error("null argument");
    *out = new rigidity_graph{rigidity::read_edgelist_file(path)};
  });
}

int rigidity_graph_write(const rigidity_graph* g, const char* path) {
  return guarded([&] {
    if (!g || !path) throw rigidity::Error("null argument");
    rigidity::write_edgelist_file(g->g, path, {});
  });
}

int rigidity_graph_vertex_count(const rigidity_graph* g) {
  return g ? g->g.vertex_count() : -1;
}

int rigidity_graph_edge_count(const rigidity_graph* g) {
  return g ? g->g.edge_count() : -1;
}

void rigidity_graph_free(rigidity_graph* g) { delete g; }

int rigidity_check(const rigidity_graph* g, int d, unsigned long long seed,
                   int trials, char** json_out) {
  return guarded([&] {
    if (!g || !json_out) throw rigidity::Error("null argument");
    rigidity::RigidityVerdict v = rigidity::is_d_rigid(g->g, d, seed, trials);
    *json_out = dup_string(v.to_json());
  });
}

int rigidity_certify(const rigidity_graph* g, const char* spec_json,
                     char** json_out) {
  return guarded([&] {
    if (!g || !spec_json || !json_out) throw rigidity::Error("null argument");
    json j = json::parse(spec_json);
    std::string kind = j.at("kind").get<std::string>();
    int d = j.at("d").get<int>();
    uint64_t seed = j.value("seed", uint64_t(0));
    rigidity::Partition pi = parse_blocks(g->g, j);
    rigidity::CertifierVerdict v;
    if (kind == "strong") {
      v = rigidity::certify_strong_partition(g->g, pi, d,
                                             j.value("allow_self", true), seed);
    } else if (kind == "generalized") {
      rigidity::GeneralizedPartitionSpec spec;
      if (j.contains("subgraphs")) {
        spec.graph = g->g;
        spec.partition = pi;
        spec.m_i = j.at("m_i").get<std::vector<int>>();
        for (const auto& s : j.at("subgraphs"))
          spec.subgraphs[{s.at("i").get<int>(), s.at("j").get<int>()}] =
              parse_edge_array(s.at("edges"));
      } else {
        spec = rigidity::GeneralizedPartitionSpec::from_strong(g->g, pi);
      }
      v = rigidity::certify_generalized_partition(spec, d, seed);
    } else if (kind == "double") {
      rigidity::DoublePartitionSpec spec;
      spec.graph = g->g;
      spec.partition = pi;
      spec.sub_blocks =
          j.at("sub_blocks").get<std::vector<std::vector<std::vector<int>>>>();
      for (const auto& f : j.at("forests"))
        spec.forests.push_back(parse_edge_array(f));
      v = rigidity::certify_double_partition(spec, d, seed);
    } else {
      throw rigidity::Error("unknown certifier kind: " + kind);
    }
    *json_out = dup_string(v.to_json());
  });
}

int rigidity_connector(const rigidity_graph* g, const char* config_json,
                       char** json_out) {
  return guarded([&] {
    if (!g || !config_json || !json_out) throw rigidity::Error("null argument");
    json j = json::parse(config_json);
    rigidity::Partition pi = parse_blocks(g->g, j);
    rigidity::ConnectorConfig cfg;
    cfg.k = j.value("k", 1);
    if (j.contains("eta")) cfg.eta = parse_eta(j.at("eta"));
    cfg.s = j.value("s", 0);
    cfg.seed = j.value("seed", uint64_t(0));
    cfg.trials = j.value("trials", 2);
    if (j.contains("subset_cap"))
      cfg.subset_cap = j.at("subset_cap").get<long long>();
    rigidity::ConnectorTrace trace;
    rigidity::connector_certify(g->g, pi, cfg, &trace);
    *json_out = dup_string(trace.to_json());
  });
}

int rigidity_experiment(const char* config_json, char** csv_out) {
  return guarded([&] {
    if (!config_json || !csv_out) throw rigidity::Error("null argument");
    *csv_out = dup_string(rigidity::run_experiment_json(config_json));
  });
}

int rigidity_plot(const char* csv_text, const char* config_json,
                  char** svg_out) {
  return guarded([&] {
    if (!csv_text || !config_json || !svg_out)
      throw rigidity::Error("null argument");
    json j = json::parse(config_json);
    *svg_out = dup_string(rigidity::render_line_chart(
        csv_text, j.at("x").get<std::string>(),
        j.at("y").get<std::vector<std::string>>()));
  });
}

}  // extern "C"
