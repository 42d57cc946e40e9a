#include "aziza/runner/config_io.hpp"

#include <cstdio>
#include <set>

#include "aziza/classifier/model_io.hpp"
#include "aziza/core/errors.hpp"
#include "aziza/core/files.hpp"
#include "aziza/core/rng.hpp"
#include "json.hpp"

namespace aziza {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

template <class V>
void visit(V& v, Vec2& p) {
  v.pair(p.x, p.y);
}

template <class V>
void visit(V& v, ZoneConfig& z) {
  v("name", z.name);
  v("bounds", z.bounds);
  v("pois", z.pois);
}

template <class V>
void visit(V& v, EnergyCosts& c) {
  v("tx_j", c.tx_j);
  v("rx_j", c.rx_j);
  v("idle_j_per_s", c.idle_j_per_s);
}

template <class V>
void visit(V& v, ClassProfile& p) {
  v("radio_range_m", p.radio_range_m);
  v("energy_capacity_j", p.energy_capacity_j);
  v("initial_trust", p.initial_trust);
  v("costs", p.costs);
}

template <class V>
void visit(V& v, GroundMobilityConfig& g) {
  v("speed_min", g.speed_min);
  v("speed_max", g.speed_max);
  v("pause_min", g.pause_min);
  v("pause_max", g.pause_max);
  v("poi_bias", g.poi_bias);
  v("cluster_radius", g.cluster_radius);
}

template <class V>
void visit(V& v, RouteStop& s) {
  v("zone", s.zone);
  v("poi", s.poi);
}

template <class V>
void visit(V& v, VehicleConfig& c) {
  v("count", c.count);
  v("speed", c.speed);
  v("departure_period", c.departure_period);
  v("stop_dwell", c.stop_dwell);
  v("routes", c.routes);
}

template <class V>
void visit(V& v, UavConfig& c) {
  v("count", c.count);
  v("speed", c.speed);
  v("cycle", c.cycle);
  v("dwell", c.dwell);
  v("loop", c.loop);
}

template <class V>
void visit(V& v, TrafficProfile& t) {
  v("rate_per_hour", t.rate_per_hour);
  v("size_min", t.size_min);
  v("size_max", t.size_max);
  v("ttl", t.ttl);
  v("priority_mix", t.priority_mix);
  v("hub_weight", t.hub_weight);
  v("intra_zone_fraction", t.intra_zone_fraction);
}

template <class V>
void visit(V& v, ScenarioConfig& c) {
  v("map_size", c.map_size);
  v("zones", c.zones);
  v("hub_zone", c.hub_zone);
  v("ground_count", c.ground_count);
  v("ground_mobility", c.ground_mobility);
  v("vehicles", c.vehicles);
  v("uavs", c.uavs);
  v("ground", c.ground);
  v("vehicle", c.vehicle);
  v("uav", c.uav);
  v("traffic", c.traffic);
  v("blackhole_frac", c.blackhole_frac);
  v("bandwidth_bps", c.bandwidth_bps);
  v("buffer_bytes", c.buffer_bytes);
  v("tick", c.tick);
  v("horizon", c.horizon);
  v("single_routing_zone", c.single_routing_zone);
}

template <class V>
void visit(V& v, ZoneProbParams& p) {
  v("beta", p.beta);
  v("gamma", p.gamma);
  v("aging_interval", p.aging_interval);
}

template <class V>
void visit(V& v, TrustParams& p) {
  v("delta_plus", p.delta_plus);
  v("delta_minus", p.delta_minus);
  v("lambda", p.lambda);
  v("theta_trust", p.theta_trust);
  v("theta_black", p.theta_black);
  v("soft_weight", p.soft_weight);
}

template <class V>
void visit(V& v, EnergyPolicy& p) {
  v("alpha", p.alpha);
  v("beta_energy", p.beta_energy);
  v("gamma_cost", p.gamma_cost);
  v("e_tx_ref", p.e_tx_ref);
  v("theta_relay", p.theta_relay);
  v("eta", p.eta);
}

template <class V>
void visit(V& v, DecisionThresholds& t) {
  v("tau_p", t.tau_p);
  v("tau_t", t.tau_t);
  v("tau_e_frac", t.tau_e_frac);
  v("tau_u", t.tau_u);
  v("tau_e_min_frac", t.tau_e_min_frac);
}

template <class V>
void visit(V& v, ProphetParams& p) {
  v("p_init", p.p_init);
  v("beta", p.beta);
  v("gamma", p.gamma);
  v("aging_interval", p.aging_interval);
}

template <class V>
void visit(V& v, MaxPropParams& p) {
  v("hop_threshold", p.hop_threshold);
}

template <class V>
void visit(V& v, BubbleRapParams& p) {
  v("window", p.window);
}

template <class V>
void visit(V& v, RoutingConfig& r) {
  v("zone", r.zone);
  v("trust", r.trust);
  v("energy", r.energy);
  v("thresholds", r.thresholds);
  v("model", r.model);
  v("model_file", r.model_file);
  v("intra_copies", r.intra_copies);
  v("trust_enabled", r.trust_enabled);
  v("timeout_scan", r.timeout_scan);
  v("prophet", r.prophet);
  v("snw_copies", r.snw_copies);
  v("maxprop", r.maxprop);
  v("bubblerap", r.bubblerap);
}

template <class V>
void visit(V& v, SimConfig& c) {
  v("scenario", c.scenario);
  v("routing", c.routing);
}

// ---- writing

struct Writer;
template <class T>
ordered_json to_json_value(T& x);

struct Writer {
  ordered_json out = ordered_json::object();
  template <class T>
  void operator()(const char* key, T& x) {
    out[key] = to_json_value(x);
  }
  void pair(double& a, double& b) { out = ordered_json::array({a, b}); }
};

template <class T>
ordered_json to_json_value(T& x) {
  if constexpr (std::is_same_v<T, Rect>) {
    return ordered_json::array({x.x0, x.y0, x.x1, x.y1});
  } else if constexpr (std::is_arithmetic_v<T> || std::is_same_v<T, std::string>) {
    return ordered_json(x);
  } else if constexpr (requires { x.begin(); x.size(); }) {
    ordered_json a = ordered_json::array();
    for (auto& e : x) a.push_back(to_json_value(e));
    return a;
  } else {
    Writer w;
    visit(w, x);
    return w.out;
  }
}

// ---- reading

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw InvalidConfig(where, what); }

template <class T>
void from_json_value(const json& j, T& x, const std::string& where);

struct Reader {
  const json& j;
  std::string where;
  std::set<std::string> used;

  template <class T>
  void operator()(const char* key, T& x) {
    auto it = j.find(key);
    if (it == j.end()) return;
    used.insert(key);
    from_json_value(*it, x, where.empty() ? key : where + "." + key);
  }
  void pair(double& a, double& b) {
    if (!j.is_array() || j.size() != 2) fail(where, "expected [x, y]");
    from_json_value(j[0], a, where + "[0]");
    from_json_value(j[1], b, where + "[1]");
  }
  void finish() const {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!used.count(it.key())) fail(where.empty() ? it.key() : where + "." + it.key(), "unknown key");
    }
  }
};

template <class T>
void from_json_value(const json& j, T& x, const std::string& where) {
  if constexpr (std::is_same_v<T, bool>) {
    if (!j.is_boolean()) fail(where, "expected true or false");
    x = j.get<bool>();
  } else if constexpr (std::is_integral_v<T>) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    if constexpr (std::is_unsigned_v<T>) {
      if (!j.is_number_unsigned()) fail(where, "expected a non-negative integer");
    }
    x = j.get<T>();
  } else if constexpr (std::is_floating_point_v<T>) {
    if (!j.is_number()) fail(where, "expected a number");
    x = j.get<T>();
  } else if constexpr (std::is_same_v<T, std::string>) {
    if (!j.is_string()) fail(where, "expected a string");
    x = j.get<std::string>();
  } else if constexpr (std::is_same_v<T, Rect>) {
    if (!j.is_array() || j.size() != 4) fail(where, "expected [x0, y0, x1, y1]");
    double v[4];
    for (int i = 0; i < 4; ++i) from_json_value(j[i], v[i], where + "[" + std::to_string(i) + "]");
    x = Rect{v[0], v[1], v[2], v[3]};
  } else if constexpr (requires { std::tuple_size<T>::value; }) {
    if (!j.is_array() || j.size() != x.size()) fail(where, "expected " + std::to_string(x.size()) + " values");
    for (std::size_t i = 0; i < x.size(); ++i) from_json_value(j[i], x[i], where + "[" + std::to_string(i) + "]");
  } else if constexpr (requires { x.push_back(x.front()); }) {
    if (!j.is_array()) fail(where, "expected an array");
    x.clear();
    for (std::size_t i = 0; i < j.size(); ++i) {
      typename T::value_type e{};
      from_json_value(j[i], e, where + "[" + std::to_string(i) + "]");
      x.push_back(std::move(e));
    }
  } else if constexpr (std::is_same_v<T, Vec2>) {
    Reader r{j, where, {}};
    visit(r, x);
  } else {
    if (!j.is_object()) fail(where.empty() ? "(root)" : where, "expected an object");
    Reader r{j, where, {}};
    visit(r, x);
    r.finish();
  }
}

std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

}  // namespace

SimConfig parse_sim_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // The reported byte is one past the offending character.
    throw InvalidConfig(line_col(text, e.byte > 0 ? e.byte - 1 : 0), "malformed JSON");
  }
  SimConfig c;
  from_json_value(j, c, "");
  try {
    validate(c.scenario);
  } catch (const InvalidConfig& e) {
    const std::string what = std::string(e.what()).substr(e.where().empty() ? 0 : e.where().size() + 2);
    throw InvalidConfig("scenario." + e.where(), what);
  }
  const std::string& m = c.routing.model;
  if (m != "closed_form" && m != "tree" && m != "predictability_gate") {
    throw InvalidConfig("routing.model", "expected closed_form, tree or predictability_gate");
  }
  if (m == "tree" && c.routing.model_file.empty()) throw InvalidConfig("routing.model_file", "required for tree");
  if (c.routing.intra_copies < 1) throw InvalidConfig("routing.intra_copies", "must be at least 1");
  if (c.routing.snw_copies < 1) throw InvalidConfig("routing.snw_copies", "must be at least 1");
  return c;
}

SimConfig load_sim_config(const std::filesystem::path& path) {
  auto text = read_file(path);
  if (!text) throw InvalidConfig(path.string(), "cannot read file");
  try {
    return parse_sim_config(*text);
  } catch (const InvalidConfig& e) {
    throw InvalidConfig(path.string() + ":" + e.where(), e.what());
  }
}

std::string sim_config_json(const SimConfig& config) {
  SimConfig copy = config;
  return to_json_value(copy).dump(2) + "\n";
}

std::string fnv1a_hex(const std::string& bytes) {
  const std::uint64_t h = fnv1a64(bytes);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

RouterOptions router_options(const RoutingConfig& r, bool record_decisions) {
  RouterOptions o;
  o.aziza.zone = r.zone;
  o.aziza.trust = r.trust;
  o.aziza.energy = r.energy;
  o.aziza.intra_copies = r.intra_copies;
  o.aziza.trust_enabled = r.trust_enabled;
  o.aziza.timeout_scan = r.timeout_scan;
  o.aziza.record_decisions = record_decisions;
  if (r.model == "tree") {
    DecisionTree tree = load_model(r.model_file);
    o.aziza.model = DecisionModel::trained(std::move(tree));
  } else if (r.model == "predictability_gate") {
    o.aziza.model = DecisionModel::predictability_gate();
  } else {
    o.aziza.model = DecisionModel::closed_form(r.thresholds);
  }
  o.prophet = r.prophet;
  o.snw_copies = r.snw_copies;
  o.maxprop = r.maxprop;
  o.bubblerap = r.bubblerap;
  return o;
}

}  // namespace aziza
