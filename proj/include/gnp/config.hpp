#pragma once

#include "gnp/root_datum.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace gnp {

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Config {
  DatumSpec spec;
  std::size_t max_interval_size = 1u << 20;
  std::size_t max_qbg_vertices = 5000;
  Int length_cap = 4;
  Int free_pi1_range = 0;  // 0: rank + 1
};

namespace detail {

using nlohmann::json;

inline const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) throw ConfigError(path + key + ": missing");
  return j.at(key);
}

inline Int get_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ConfigError(path + ": expected an integer");
  return j.get<Int>();
}

inline std::size_t get_positive(const json& j, const std::string& path) {
  Int v = get_int(j, path);
  if (v < 1) throw ConfigError(path + ": must be positive");
  return static_cast<std::size_t>(v);
}

inline std::vector<Int> get_int_array(const json& j, const std::string& path) {
  if (!j.is_array()) throw ConfigError(path + ": expected an array of integers");
  std::vector<Int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_int(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

inline CartanComponent parse_component(const json& c, const std::string& path) {
  CartanComponent comp{};
  std::string type;
  int rank = 0;
  if (c.is_string()) {
    auto s = c.get<std::string>();
    if (s.size() < 2) throw ConfigError(path + ": expected a name like \"A2\"");
    type = s.substr(0, 1);
    try {
      rank = std::stoi(s.substr(1));
    } catch (const std::exception&) {
      throw ConfigError(path + ": expected a name like \"A2\"");
    }
  } else {
    const auto& t = field(c, "type", path + ".");
    if (!t.is_string()) throw ConfigError(path + ".type: expected a string");
    type = t.get<std::string>();
    rank = static_cast<int>(get_int(field(c, "rank", path + "."), path + ".rank"));
  }
  try {
    comp.type = parse_cartan_type(type);
    comp.rank = rank;
    cartan_matrix(comp);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return comp;
}

}  // namespace detail

// JSON description -> Config. Indices in "perm" and "sigma1_word" are 1-based.
inline Config parse_config(const nlohmann::json& j) {
  using detail::field;
  Config cfg;
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");
  const auto& comps = field(j, "components", "");
  if (!comps.is_array() || comps.empty()) throw ConfigError("components: expected a nonempty array");
  int rank = 0;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    cfg.spec.components.push_back(detail::parse_component(comps[i], "components[" + std::to_string(i) + "]"));
    rank += cfg.spec.components.back().rank;
  }
  if (rank > 31) throw ConfigError("components: total rank above 31 is not supported");
  if (j.contains("lattice")) {
    if (!j["lattice"].is_string()) throw ConfigError("lattice: expected a string");
    cfg.spec.lattice = j["lattice"].get<std::string>();
  }
  if (cfg.spec.lattice == "custom") {
    const auto& lb = field(j, "lattice_basis", "");
    if (!lb.is_array()) throw ConfigError("lattice_basis: expected an array of rows");
    for (std::size_t i = 0; i < lb.size(); ++i)
      cfg.spec.lattice_basis.push_back(detail::get_int_array(lb[i], "lattice_basis[" + std::to_string(i) + "]"));
  }
  if (j.contains("frobenius")) {
    const auto& f = j["frobenius"];
    if (!f.is_object()) throw ConfigError("frobenius: expected an object");
    if (f.contains("perm")) {
      auto p = detail::get_int_array(f["perm"], "frobenius.perm");
      for (auto v : p) {
        if (v < 1 || v > rank) throw ConfigError("frobenius.perm: entries must lie in 1.." + std::to_string(rank));
        cfg.spec.frobenius_perm.push_back(static_cast<int>(v - 1));
      }
    }
    if (f.contains("twist")) {
      const auto& t = f["twist"];
      OmegaTwist tw;
      for (auto v : detail::get_int_array(field(t, "sigma1_word", "frobenius.twist."), "frobenius.twist.sigma1_word")) {
        if (v < 1 || v > rank)
          throw ConfigError("frobenius.twist.sigma1_word: entries must lie in 1.." + std::to_string(rank));
        tw.sigma1_word.push_back(static_cast<int>(v - 1));
      }
      tw.mu_sigma = Coweight(detail::get_int_array(field(t, "mu_sigma", "frobenius.twist."), "frobenius.twist.mu_sigma"));
      cfg.spec.twist = tw;
    }
  }
  if (j.contains("budgets")) {
    const auto& b = j["budgets"];
    if (b.contains("max_interval_size"))
      cfg.max_interval_size = detail::get_positive(b["max_interval_size"], "budgets.max_interval_size");
    if (b.contains("max_weyl_order"))
      cfg.spec.max_weyl_order = detail::get_positive(b["max_weyl_order"], "budgets.max_weyl_order");
    if (b.contains("max_qbg_vertices"))
      cfg.max_qbg_vertices = detail::get_positive(b["max_qbg_vertices"], "budgets.max_qbg_vertices");
  }
  if (j.contains("scan")) {
    const auto& s = j["scan"];
    if (s.contains("length_cap")) {
      cfg.length_cap = detail::get_int(s["length_cap"], "scan.length_cap");
      if (cfg.length_cap < 0) throw ConfigError("scan.length_cap: must be nonnegative");
    }
    if (s.contains("free_pi1_range"))
      cfg.free_pi1_range = static_cast<Int>(detail::get_positive(s["free_pi1_range"], "scan.free_pi1_range"));
  }
  if (cfg.free_pi1_range == 0) cfg.free_pi1_range = rank + 1;
  return cfg;
}

inline Config parse_config_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  return parse_config(j);
}

inline Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

// Builds the datum, turning construction errors into config errors.
inline DatumPtr make_datum(const Config& cfg) {
  try {
    return RootDatum::create(cfg.spec);
  } catch (const DatumError& e) {
    throw ConfigError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("components: ") + e.what());
  }
}

}  // namespace gnp
