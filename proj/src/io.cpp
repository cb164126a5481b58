#include "csglab/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "csglab/errors.hpp"

namespace csglab::io {

namespace {

const json& require(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::string node_label(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long>());
  throw ParseError("node ids must be strings or integers");
}

NodeId lookup(const Graph& g, const json& j) {
  const std::string label = node_label(j);
  auto v = g.find_node(label);
  if (!v) throw ParseError("unknown node \"" + label + "\"");
  return *v;
}

json path_json(const Path& p) { return json(p); }

json ratio_json(const Rational& r) {
  return {{"exact", r.str()}, {"decimal", r.is_infinite() ? json(nullptr) : json(r.to_double())}};
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("rationals must be \"num/den\" strings");
}

json instance_to_json(const GameInstance& instance) {
  const Graph& g = instance.graph();
  json doc;
  doc["version"] = kDocumentVersion;
  doc["nodes"] = g.labels();
  doc["source"] = g.label(g.source());
  doc["sink"] = g.label(g.sink());
  if (instance.is_symmetric()) {
    doc["agents"] = instance.num_agents();
  } else {
    json agents = json::array();
    for (const Terminals& t : instance.agents()) {
      agents.push_back({{"source", g.label(t.source)}, {"sink", g.label(t.sink)}});
    }
    doc["agents"] = std::move(agents);
  }
  json edges = json::array();
  for (const Edge& e : g.edges()) {
    const auto& scheme = instance.scheme(e.id);
    json entry{{"id", e.id},
               {"tail", g.label(e.tail)},
               {"head", g.label(e.head)},
               {"cost", scheme.base_cost().str()},
               {"capacity", scheme.capacity()}};
    if (scheme.is_ordinary()) {
      entry["scheme"] = "ordinary";
    } else {
      json table = json::array();
      for (const Rational& f : scheme.shares()) table.push_back(f.str());
      entry["scheme"] = {{"table", std::move(table)}};
    }
    edges.push_back(std::move(entry));
  }
  doc["edges"] = std::move(edges);
  if (const auto& r = instance.recipe()) {
    json rec{{"kind", r->kind}};
    for (const auto& [k, v] : r->params) rec[k] = v;
    doc["recipe"] = std::move(rec);
  }
  return doc;
}

GameInstance instance_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("instance document must be a JSON object");
  if (doc.contains("version") && as_int(doc.at("version"), "version") != kDocumentVersion) {
    throw ParseError("unsupported instance document version");
  }
  std::vector<std::string> labels;
  const json& nodes = require(doc, "nodes");
  if (!nodes.is_array()) throw ParseError("\"nodes\" must be an array");
  for (const json& v : nodes) labels.push_back(node_label(v));
  auto index_of = [&](const json& j) -> NodeId {
    const std::string label = node_label(j);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == label) return static_cast<NodeId>(i);
    }
    throw ParseError("unknown node \"" + label + "\"");
  };

  const json& edges_doc = require(doc, "edges");
  if (!edges_doc.is_array()) throw ParseError("\"edges\" must be an array");
  std::vector<Edge> edges;
  std::vector<CostSharingScheme> schemes;
  for (const json& e : edges_doc) {
    const int id = as_int(require(e, "id"), "edge id");
    const Rational cost = rational_from_json(require(e, "cost"));
    const int cap = as_int(require(e, "capacity"), "capacity");
    if (cap < 0) throw ParseError("negative capacity on edge " + std::to_string(id));
    if (cost.is_infinite() || cost.sign() < 0) throw ParseError("edge costs must be finite and >= 0");
    edges.push_back({id, index_of(require(e, "tail")), index_of(require(e, "head"))});
    const json scheme = e.value("scheme", json("ordinary"));
    if (scheme.is_string() && scheme.get<std::string>() == "ordinary") {
      schemes.push_back(make_ordinary_scheme(cost, cap));
    } else if (scheme.is_object() && scheme.contains("table") && scheme.at("table").is_array()) {
      std::vector<Rational> table;
      for (const json& f : scheme.at("table")) table.push_back(rational_from_json(f));
      if (table.size() != static_cast<std::size_t>(cap)) {
        throw ParseError("share table of edge " + std::to_string(id) + " must have capacity entries");
      }
      schemes.emplace_back(cost, cap, std::move(table));
    } else {
      throw ParseError("scheme must be \"ordinary\" or {\"table\": [...]}");
    }
  }
  // edges may be listed in any order; ids must still be 0..m-1
  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const int id = edges[i].id;
    if (id < 0 || static_cast<std::size_t>(id) >= edges.size()) throw ParseError("edge ids must be 0..m-1");
    order[static_cast<std::size_t>(id)] = i;
  }
  std::vector<Edge> sorted_edges;
  std::vector<CostSharingScheme> sorted_schemes;
  for (std::size_t i : order) {
    sorted_edges.push_back(edges[i]);
    sorted_schemes.push_back(schemes[i]);
  }

  const NodeId source = index_of(require(doc, "source"));
  const NodeId sink = index_of(require(doc, "sink"));
  std::optional<Recipe> rec;
  if (doc.contains("recipe")) {
    const json& r = doc.at("recipe");
    if (!r.is_object()) throw ParseError("\"recipe\" must be an object");
    Recipe out{r.value("kind", std::string("custom")), {}};
    for (const auto& [k, v] : r.items()) {
      if (k == "kind") continue;
      out.params.emplace_back(k, v.is_string() ? v.get<std::string>() : v.dump());
    }
    rec = std::move(out);
  }

  Graph g = [&] {
    try {
      return Graph(labels, std::move(sorted_edges), source, sink);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }();
  const json& agents = require(doc, "agents");
  if (agents.is_number_integer()) {
    return GameInstance::symmetric(std::move(g), std::move(sorted_schemes), agents.get<int>(), std::move(rec));
  }
  if (!agents.is_array()) throw ParseError("\"agents\" must be a count or a list of terminal pairs");
  std::vector<Terminals> terms;
  for (const json& a : agents) terms.push_back({lookup(g, require(a, "source")), lookup(g, require(a, "sink"))});
  return GameInstance(std::move(g), std::move(sorted_schemes), std::move(terms), std::move(rec));
}

json profile_to_json(const StrategyProfile& profile) {
  json paths = json::array();
  for (const Path& p : profile.paths()) paths.push_back(path_json(p));
  return paths;
}

StrategyProfile profile_from_json(const GameInstance& instance, const json& doc) {
  const json& list = doc.is_object() ? require(doc, "paths") : doc;
  if (!list.is_array()) throw ParseError("profile must be a list of edge-id lists");
  std::vector<Path> paths;
  for (const json& p : list) {
    if (!p.is_array()) throw ParseError("each path must be a list of edge ids");
    Path path;
    for (const json& e : p) path.push_back(as_int(e, "edge id"));
    paths.push_back(std::move(path));
  }
  try {
    StrategyProfile profile(instance.graph(), std::move(paths));
    check_profile(instance, profile);
    return profile;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

json trace_to_json(const GameInstance& instance, const DynamicsTrace& trace) {
  json steps = json::array();
  for (const DynamicsStep& s : trace.steps) {
    steps.push_back({{"agent", s.agent},
                     {"old_path", path_json(s.old_path)},
                     {"new_path", path_json(s.new_path)},
                     {"old_cost", s.old_cost.str()},
                     {"new_cost", s.new_cost.str()},
                     {"cost_delta", (s.new_cost - s.old_cost).str()},
                     {"potential_after", s.potential_after.str()}});
  }
  return {{"start", profile_to_json(trace.start)},
          {"start_potential", trace.start_potential.str()},
          {"steps", std::move(steps)},
          {"step_count", trace.step_count()},
          {"terminal", profile_to_json(trace.terminal)},
          {"terminal_potential", potential(instance, trace.terminal).str()},
          {"terminal_sum_cost", sum_cost(instance, trace.terminal).str()},
          {"terminal_max_cost", max_cost(instance, trace.terminal).str()},
          {"terminal_is_nash", static_cast<bool>(is_nash(instance, trace.terminal))}};
}

json constructive_to_json(const ConstructiveResult& result) {
  json rounds = json::array();
  for (const ConstructiveRound& r : result.rounds) {
    json arcs = json::array();
    for (const ResidualArc& a : r.augmenting_path) arcs.push_back({{"edge", a.edge}, {"forward", a.forward}});
    rounds.push_back({{"equilibrium_max_cost", r.equilibrium_max_cost.str()},
                      {"equilibrium_potential", r.equilibrium_potential.str()},
                      {"removed_agent", r.removed_agent},
                      {"augmenting_path", std::move(arcs)},
                      {"rerouted", r.rerouted},
                      {"path_base_cost", r.path_base_cost.str()},
                      {"recombined_potential", r.recombined_potential.str()}});
  }
  json potentials = json::array();
  for (const Rational& p : result.equilibrium_potentials) potentials.push_back(p.str());
  return {{"equilibrium", profile_to_json(result.equilibrium)},
          {"max_cost", result.max_cost.str()},
          {"scale", result.scale.str()},
          {"equilibrium_potentials", std::move(potentials)},
          {"rounds", std::move(rounds)}};
}

json report_to_json(const AnalysisReport& report, const ReportOptions& options) {
  json doc;
  doc["graph_class"] = std::string(to_string(report.graph_class));
  doc["symmetric"] = report.symmetric;
  doc["agents"] = report.agents;
  doc["feasible_profiles"] = report.feasible_profiles;
  doc["degenerate"] = report.degenerate;

  json optima = json::object();
  json ratios = json::object();
  auto optimum_json = [](const Optimum& o) {
    return json{{"value", o.value.str()}, {"decimal", o.value.to_double()}, {"profile", profile_to_json(o.profile)}};
  };
  if (options.sum_cost) {
    optima["sum_cost"] = optimum_json(report.optimum_sc);
    ratios["PoA_sc"] = ratio_json(report.poa_sc);
    ratios["PoS_sc"] = ratio_json(report.pos_sc);
  }
  if (options.max_cost) {
    optima["max_cost"] = optimum_json(report.optimum_mc);
    ratios["PoA_mc"] = ratio_json(report.poa_mc);
    ratios["PoS_mc"] = ratio_json(report.pos_mc);
  }
  doc["optima"] = std::move(optima);
  doc["ratios"] = std::move(ratios);

  json items = json::array();
  for (const EquilibriumClass& c : report.equilibria.distinct()) {
    items.push_back({{"profile", profile_to_json(c.representative.profile)},
                     {"multiplicity", c.multiplicity},
                     {"sum_cost", c.representative.sum_cost.str()},
                     {"max_cost", c.representative.max_cost.str()},
                     {"potential", c.representative.potential.str()}});
  }
  doc["equilibria"] = {{"count", report.equilibria.members.size()},
                       {"distinct", items.size()},
                       {"worst_sum_cost", report.worst_ne_sc.str()},
                       {"best_sum_cost", report.best_ne_sc.str()},
                       {"worst_max_cost", report.worst_ne_mc.str()},
                       {"best_max_cost", report.best_ne_mc.str()},
                       {"items", std::move(items)}};

  json verdicts = json::array();
  for (const BoundVerdict& v : report.verdicts) {
    const bool is_sc = v.tag.find("_sc") != std::string::npos || v.tag.rfind("Lem3", 0) == 0;
    const bool is_mc = v.tag.find("_mc") != std::string::npos;
    if ((is_sc && !options.sum_cost) || (is_mc && !options.max_cost)) continue;
    verdicts.push_back({{"tag", v.tag},
                        {"claim", v.claim},
                        {"measured", v.measured.str()},
                        {"bound", v.bound.str()},
                        {"holds", v.holds},
                        {"witness", v.witness ? profile_to_json(*v.witness) : json(nullptr)}});
  }
  doc["verdicts"] = std::move(verdicts);
  return doc;
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace csglab::io
