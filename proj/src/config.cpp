#include "nfobs/config.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <functional>
#include <sstream>

namespace nfobs {

namespace {

const std::vector<std::string> kKeys = {
    "model.j0",          "model.j1",         "model.tau",          "model.theta_nodes",
    "model.activity_based", "model.sigmoid.mu", "model.sigmoid.h0", "model.sigmoid.s1",
    "model.sigmoid.s2",  "model.dist.type",  "model.dist.r0",      "model.dist.nodes",
    "model.dist.weights", "input.type",      "input.epsilon",      "input.beta",
    "input.omega",       "input.value",      "input.offset",       "input.amplitude",
    "input.frequency",   "input.phase",      "observer.enabled",   "observer.delta",
    "observer.eta",      "observer.R",       "observer.l",         "observer.rho_tol",
    "observer.max_iter", "sim.t_end",        "sim.dt",             "sim.v_init",
    "sim.vhat_init",     "sim.stride",
};

std::vector<std::string> split_path(const std::string& key) {
  std::vector<std::string> out;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, '.')) out.push_back(part);
  return out;
}

bool is_known(const std::string& key) { return std::find(kKeys.begin(), kKeys.end(), key) != kKeys.end(); }

bool is_prefix(const std::string& key) {
  return std::any_of(kKeys.begin(), kKeys.end(),
                     [&](const std::string& k) { return k.size() > key.size() && k.rfind(key + ".", 0) == 0; });
}

void check_keys(const YAML::Node& node, const std::string& prefix) {
  if (!node.IsMap()) {
    if (!is_known(prefix)) throw ConfigError("unknown key '" + prefix + "'");
    return;
  }
  for (const auto& kv : node) {
    const std::string name = kv.first.as<std::string>();
    const std::string path = prefix.empty() ? name : prefix + "." + name;
    if (is_known(path)) continue;
    if (!is_prefix(path)) throw ConfigError("unknown key '" + path + "'");
    check_keys(kv.second, path);
  }
}

YAML::Node lookup(const YAML::Node& root, const std::string& key) {
  YAML::Node cur;
  cur.reset(root);
  for (const auto& part : split_path(key)) {
    if (!cur.IsMap()) return YAML::Node();
    const YAML::Node& view = cur;
    const YAML::Node next = view[part];
    if (!next) return YAML::Node();
    cur.reset(next);
  }
  return cur;
}

template <class T>
T get(const YAML::Node& root, const std::string& key, T fallback) {
  const YAML::Node n = lookup(root, key);
  if (!n || n.IsNull()) return fallback;
  try {
    return n.as<T>();
  } catch (const YAML::Exception& e) {
    throw ConfigError("key '" + key + "': " + e.msg);
  }
}

Vec3 get_vec3(const YAML::Node& root, const std::string& key, const Vec3& fallback) {
  const YAML::Node n = lookup(root, key);
  if (!n || n.IsNull()) return fallback;
  if (!n.IsSequence() || n.size() != 3) throw ConfigError("key '" + key + "' must be a list of 3 numbers");
  try {
    return {n[0].as<double>(), n[1].as<double>(), n[2].as<double>()};
  } catch (const YAML::Exception& e) {
    throw ConfigError("key '" + key + "': " + e.msg);
  }
}

void set_path(YAML::Node root, const std::string& key, const YAML::Node& value) {
  const auto parts = split_path(key);
  std::function<void(YAML::Node, std::size_t)> rec = [&](YAML::Node node, std::size_t i) {
    if (i + 1 == parts.size()) {
      node[parts[i]] = value;
      return;
    }
    if (!node[parts[i]] || !node[parts[i]].IsMap()) node[parts[i]] = YAML::Node(YAML::NodeType::Map);
    rec(node[parts[i]], i + 1);
  };
  rec(root, 0);
}

InputPtr build_input(const YAML::Node& root) {
  const std::string type = get<std::string>(root, "input.type", "circular");
  if (type == "circular") {
    return std::make_shared<CircularInput>(get(root, "input.epsilon", 0.1), get(root, "input.beta", 0.1),
                                           get(root, "input.omega", 2.0 * 3.14159265358979323846 / 10.0));
  }
  if (type == "constant") {
    return std::make_shared<ConstantInput>(get_vec3(root, "input.value", Vec3::Zero()));
  }
  if (type == "sinusoid") {
    return std::make_shared<SinusoidInput>(
        get_vec3(root, "input.offset", Vec3::Zero()), get_vec3(root, "input.amplitude", Vec3::Zero()),
        get_vec3(root, "input.frequency", Vec3::Zero()), get_vec3(root, "input.phase", Vec3::Zero()));
  }
  throw ConfigError("input.type must be circular, constant or sinusoid (got '" + type + "')");
}

SelectivityDistribution build_dist(const YAML::Node& root) {
  const std::string type = get<std::string>(root, "model.dist.type", "dirac");
  if (type == "dirac") return SelectivityDistribution::dirac(get(root, "model.dist.r0", 1.0));
  if (type == "nodes") {
    return {get<std::vector<double>>(root, "model.dist.nodes", {}),
            get<std::vector<double>>(root, "model.dist.weights", {})};
  }
  throw ConfigError("model.dist.type must be dirac or nodes (got '" + type + "')");
}

}  // namespace

const std::vector<std::string>& scenario_keys() { return kKeys; }

std::string resolve_key(const std::string& key) {
  if (is_known(key)) return key;
  std::vector<std::string> hits;
  for (const auto& k : kKeys) {
    if (k.size() > key.size() && k.compare(k.size() - key.size(), key.size(), key) == 0 &&
        k[k.size() - key.size() - 1] == '.') {
      hits.push_back(k);
    }
  }
  if (hits.size() == 1) return hits.front();
  if (hits.empty()) throw ConfigError("unknown key '" + key + "'");
  std::string msg = "ambiguous key '" + key + "' (";
  for (std::size_t i = 0; i < hits.size(); ++i) msg += (i ? ", " : "") + hits[i];
  throw ConfigError(msg + ")");
}

ScenarioConfig parse_scenario(const std::string& text, const std::vector<std::string>& overrides) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw ConfigError(std::string("invalid scenario YAML: ") + e.what());
  }
  if (!root || root.IsNull()) root = YAML::Node(YAML::NodeType::Map);
  if (!root.IsMap()) throw ConfigError("scenario must be a mapping with model/input/observer/sim sections");
  check_keys(root, "");

  for (const auto& ov : overrides) {
    const auto eq = ov.find('=');
    if (eq == std::string::npos || eq == 0) throw ConfigError("override '" + ov + "' is not key=value");
    const std::string key = resolve_key(ov.substr(0, eq));
    YAML::Node value;
    try {
      value = YAML::Load(ov.substr(eq + 1));
    } catch (const YAML::Exception& e) {
      throw ConfigError("override '" + ov + "': " + e.what());
    }
    set_path(root, key, value);
  }

  ScenarioConfig cfg;
  Scenario& s = cfg.scenario;
  ModelParams& p = s.params;
  p.j0 = get(root, "model.j0", p.j0);
  p.j1 = get(root, "model.j1", p.j1);
  p.tau = get(root, "model.tau", p.tau);
  p.theta_nodes = get(root, "model.theta_nodes", p.theta_nodes);
  p.sigmoid.gain = get(root, "model.sigmoid.mu", p.sigmoid.gain);
  p.sigmoid.h0 = get(root, "model.sigmoid.h0", p.sigmoid.h0);
  p.sigmoid.s1 = get(root, "model.sigmoid.s1", p.sigmoid.s1);
  p.sigmoid.s2 = get(root, "model.sigmoid.s2", p.sigmoid.s2);
  p.dist = build_dist(root);
  s.activity_based = get(root, "model.activity_based", false);
  s.input = build_input(root);

  InverseConfig& inv = s.observer.inverse;
  s.with_observer = get(root, "observer.enabled", true);
  inv.delta = get(root, "observer.delta", inv.delta);
  inv.eta = get(root, "observer.eta", inv.eta);
  inv.R = get(root, "observer.R", inv.R);
  inv.rho_tol = get(root, "observer.rho_tol", inv.rho_tol);
  inv.max_iter = get(root, "observer.max_iter", inv.max_iter);
  s.observer.l = get(root, "observer.l", s.observer.l);

  s.t_end = get(root, "sim.t_end", s.t_end);
  s.dt = get(root, "sim.dt", s.dt);
  s.v_init = get_vec3(root, "sim.v_init", s.v_init);
  s.vhat_init = get_vec3(root, "sim.vhat_init", s.vhat_init);
  cfg.stride = get(root, "sim.stride", cfg.stride);
  if (cfg.stride < 1) throw ConfigError("sim.stride must be >= 1");

  try {
    s.validate();
    (void)Model(reduced(s).params);
  } catch (const ParameterError& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

ScenarioConfig load_scenario(const std::string& path, const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read scenario file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str(), overrides);
}

std::string paper_scenario_yaml() {
  return R"(model:
  j0: -1.0
  j1: 1.5
  tau: 5.0
  theta_nodes: 128
  sigmoid:
    mu: 10.0
    h0: 1.0
  dist:
    type: dirac
    r0: 1.0
input:
  type: circular
  epsilon: 0.1
  beta: 0.1
  omega: 0.6283185307179586
observer:
  delta: 0.3
  eta: 1.0e-3
  R: 6.0
  l: 15.0
sim:
  t_end: 4.0
  dt: 1.0e-5
  v_init: [-3.0, 2.5, -2.0]
  vhat_init: [-5.0, 2.0, -1.0]
  stride: 100
)";
}

ScenarioConfig paper_scenario() { return parse_scenario(paper_scenario_yaml()); }

}  // namespace nfobs
