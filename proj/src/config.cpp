#include "fracpm/config.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fracpm::config {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

void insert(KeyValues& kv, const std::string& key, const std::string& value) {
  if (!kv.emplace(key, value).second) throw std::invalid_argument("duplicate config key: " + key);
}

void flatten(const nlohmann::json& j, const std::string& prefix, KeyValues& kv) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    const auto& v = it.value();
    if (v.is_object()) {
      flatten(v, key, kv);
    } else if (v.is_array()) {
      std::string joined;
      for (const auto& e : v) {
        if (!joined.empty()) joined += ",";
        joined += e.is_string() ? e.get<std::string>() : e.dump();
      }
      insert(kv, key, joined);
    } else if (v.is_string()) {
      insert(kv, key, v.get<std::string>());
    } else {
      insert(kv, key, v.dump());
    }
  }
}

double to_double(const std::string& key, const std::string& v) {
  const std::string t = trim(v);
  std::string lower = t;
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "inf" || lower == "infinity") return evolve::kInf;
  try {
    std::size_t used = 0;
    const double x = std::stod(t, &used);
    if (used == t.size()) return x;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("config key " + key + ": not a number: '" + v + "'");
}

int to_int(const std::string& key, const std::string& v) {
  const double x = to_double(key, v);
  if (x != static_cast<int>(x)) throw std::invalid_argument("config key " + key + ": not an integer: '" + v + "'");
  return static_cast<int>(x);
}

const std::set<std::string>& ic_keys(const std::string& type) {
  static const std::map<std::string, std::set<std::string>> keys{
      {"barenblatt", {"ic.R", "ic.mass", "ic.t0"}},
      {"gaussian", {"ic.sigma", "ic.amplitude", "ic.center"}},
      {"file", {"ic.path"}},
      {"signed_pair", {"ic.sigma", "ic.amplitude", "ic.separation", "ic.ratio"}},
  };
  const auto it = keys.find(type);
  if (it == keys.end()) throw std::invalid_argument("unknown ic.type: " + type);
  return it->second;
}

const std::set<std::string> kSolverKeys{"d",   "n",     "l",          "alpha",  "m",      "delta",
                                        "eps", "t_end", "cfl", "save_every", "p_list", "ic.type"};
const std::set<std::string> kSweepKeys{"sweep.name", "sweep.alpha", "sweep.m", "sweep.delta", "sweep.eps", "sweep.n"};

evolve::SolverConfig build(const KeyValues& kv, bool allow_sweep) {
  const std::string type = kv.count("ic.type") ? trim(kv.at("ic.type")) : "gaussian";
  const auto& allowed_ic = ic_keys(type);
  for (const auto& [key, value] : kv) {
    if (kSolverKeys.count(key) || allowed_ic.count(key)) continue;
    if (allow_sweep && kSweepKeys.count(key)) continue;
    if (key.rfind("ic.", 0) == 0) {
      throw std::invalid_argument("config key " + key + " does not apply to ic.type=" + type);
    }
    throw std::invalid_argument("unknown config key: " + key);
  }

  evolve::SolverConfig c;
  auto num = [&](const std::string& key, double& out) {
    if (auto it = kv.find(key); it != kv.end()) out = to_double(key, it->second);
  };
  if (auto it = kv.find("d"); it != kv.end()) c.grid.d = to_int("d", it->second);
  if (auto it = kv.find("n"); it != kv.end()) c.grid.n = to_int("n", it->second);
  num("l", c.grid.l);
  num("alpha", c.alpha);
  num("m", c.m);
  num("delta", c.delta);
  num("eps", c.eps);
  num("t_end", c.t_end);
  num("cfl", c.cfl);
  num("save_every", c.save_every);
  if (auto it = kv.find("p_list"); it != kv.end()) c.p_list = parse_list(it->second);

  if (type == "barenblatt") {
    evolve::IcBarenblatt ic;
    num("ic.R", ic.R);
    num("ic.mass", ic.mass);
    num("ic.t0", ic.t0);
    c.ic = ic;
  } else if (type == "gaussian") {
    evolve::IcGaussian ic;
    num("ic.sigma", ic.sigma);
    num("ic.amplitude", ic.amplitude);
    num("ic.center", ic.center);
    c.ic = ic;
  } else if (type == "file") {
    evolve::IcFile ic;
    if (auto it = kv.find("ic.path"); it != kv.end()) ic.path = trim(it->second);
    if (ic.path.empty()) throw std::invalid_argument("ic.type=file needs ic.path");
    c.ic = ic;
  } else {
    evolve::IcSignedPair ic;
    num("ic.sigma", ic.sigma);
    num("ic.amplitude", ic.amplitude);
    num("ic.separation", ic.separation);
    num("ic.ratio", ic.ratio);
    c.ic = ic;
  }
  c.validate();
  return c;
}

}  // namespace

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    if (trim(item).empty()) continue;
    out.push_back(to_double("list", item));
  }
  return out;
}

KeyValues parse(const std::string& text) {
  KeyValues kv;
  const std::string t = trim(text);
  if (!t.empty() && t.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(t);
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("invalid JSON config: ") + e.what());
    }
    flatten(j, "", kv);
    return kv;
  }
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string l = trim(line);
    if (l.empty() || l.front() == '#') continue;
    const auto eq = l.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
    }
    insert(kv, trim(l.substr(0, eq)), trim(l.substr(eq + 1)));
  }
  return kv;
}

KeyValues read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

evolve::SolverConfig solver_config(const KeyValues& kv) { return build(kv, false); }

SweepSpec sweep_spec(const KeyValues& kv) {
  SweepSpec s;
  s.base = build(kv, true);
  if (auto it = kv.find("sweep.name"); it != kv.end()) s.name = trim(it->second);
  auto axis = [&](const std::string& key, std::optional<std::vector<double>>& out) {
    if (auto it = kv.find(key); it != kv.end()) out = parse_list(it->second);
  };
  axis("sweep.alpha", s.axes.alpha);
  axis("sweep.m", s.axes.m);
  axis("sweep.delta", s.axes.delta);
  axis("sweep.eps", s.axes.eps);
  if (auto it = kv.find("sweep.n"); it != kv.end()) {
    std::vector<int> ns;
    for (double x : parse_list(it->second)) {
      if (x != static_cast<int>(x)) throw std::invalid_argument("config key sweep.n: entries must be integers");
      ns.push_back(static_cast<int>(x));
    }
    s.axes.n = ns;
  }
  return s;
}

evolve::SolverConfig load_solver_config(const std::string& path) { return solver_config(read_file(path)); }

SweepSpec load_sweep_spec(const std::string& path) { return sweep_spec(read_file(path)); }

}  // namespace fracpm::config
