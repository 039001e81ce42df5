// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <string>

#include "irs/errors.hpp"
#include "irs/harness.hpp"

namespace irs {
namespace {

using nlohmann::json;

// Reads typed fields out of one JSON object and rejects keys nobody asked
// for.
class ObjectReader {
 public:
  ObjectReader(const json& object, std::string path)
      : object_(object), path_(std::move(path)) {
    if (!object_.is_object()) fail(path_, "expected an object");
  }

  [[noreturn]] static void fail(const std::string& where, const std::string& what) {
    throw ConfigValidationError(where + ": " + what);
  }

  const json* find(const std::string& key) {
    seen_.insert(key);
    auto it = object_.find(key);
    return it == object_.end() ? nullptr : &*it;
  }

  void read(const std::string& key, int& out) {
    if (const json* v = find(key)) {
      if (!v->is_number_integer()) fail(where(key), "expected an integer");
      const auto value = v->get<std::int64_t>();
      if (value < std::numeric_limits<int>::min() ||
          value > std::numeric_limits<int>::max()) {
        fail(where(key), "integer out of range");
      }
      out = static_cast<int>(value);
    }
  }

  void read(const std::string& key, std::uint64_t& out) {
    if (const json* v = find(key)) {
      if (!v->is_number_unsigned()) {
        fail(where(key), "expected a non-negative integer");
      }
      out = v->get<std::uint64_t>();
    }
  }

  void read(const std::string& key, double& out) {
    if (const json* v = find(key)) {
      if (!v->is_number()) fail(where(key), "expected a number");
      out = v->get<double>();
    }
  }

  void read(const std::string& key, std::string& out) {
    if (const json* v = find(key)) {
      if (!v->is_string()) fail(where(key), "expected a string");
      out = v->get<std::string>();
    }
  }

  std::string where(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

  void finish() const {
    for (const auto& item : object_.items()) {
      if (!seen_.contains(item.key())) fail(where(item.key()), "unknown key");
    }
  }

 private:
  const json& object_;
  std::string path_;
  std::set<std::string> seen_;
};

ReflectivityModel read_reflectivity(const json& object) {
  ObjectReader reader(object, "reflectivity");
  std::string model = "unit";
  reader.read("model", model);
  const json* values = reader.find("values");
  reader.finish();

  if (model == "unit" || model == "inverse_square_product") {
    if (values != nullptr) {
      ObjectReader::fail("reflectivity.values", "only allowed for fixed_list");
    }
    return model == "unit" ? ReflectivityModel::unit()
                           : ReflectivityModel::inverse_square_product();
  }
  if (model != "fixed_list") {
    ObjectReader::fail("reflectivity.model", "unknown model '" + model + "'");
  }
  if (values == nullptr || !values->is_array()) {
    ObjectReader::fail("reflectivity.values", "fixed_list needs an array");
  }
  std::vector<Complex> list;
  for (const json& entry : *values) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
        !entry[1].is_number()) {
      ObjectReader::fail("reflectivity.values", "entries must be [re, im]");
    }
    list.emplace_back(entry[0].get<double>(), entry[1].get<double>());
  }
  return ReflectivityModel::fixed_list(std::move(list));
}

std::string_view model_name(ReflectivityModel::Kind kind) {
  switch (kind) {
    case ReflectivityModel::Kind::kUnit:
      return "unit";
    case ReflectivityModel::Kind::kInverseSquareProduct:
      return "inverse_square_product";
    case ReflectivityModel::Kind::kFixedList:
      return "fixed_list";
  }
  return "unit";
}

}  // namespace

void ScenarioConfig::validate() const {
  try {
    array.validate();
    grid.validate();
    Scene::from_polar(target_range, target_azimuth, noise_power, transmit_power,
                      samples)
        .validate();
  } catch (const InvalidArgument& e) {
    throw ConfigValidationError(e.what());
  }
  if (budget < 1 || budget > grid.size()) {
    throw ConfigValidationError("budget must lie in [1, " +
                                std::to_string(grid.size()) + "]");
  }
  if (enumeration_cap < 1) {
    throw ConfigValidationError("enumeration_cap must be >= 1");
  }
}

ScenarioConfig config_from_json(const json& j) {
  ScenarioConfig config;
  ObjectReader top(j, "");
  top.read("description", config.description);
  if (const json* a = top.find("array")) {
    ObjectReader r(*a, "array");
    r.read("n_tx", config.array.n_tx);
    r.read("n_rx", config.array.n_rx);
    r.read("n_irs_elements", config.array.n_irs_elements);
    r.read("tx_spacing", config.array.tx_spacing);
    r.read("irs_spacing", config.array.irs_spacing);
    r.read("wavelength", config.array.wavelength);
    r.finish();
  }
  if (const json* g = top.find("grid")) {
    ObjectReader r(*g, "grid");
    r.read("range_count", config.grid.range_count);
    r.read("range_step", config.grid.range_step);
    r.read("azimuth_count", config.grid.azimuth_count);
    r.read("azimuth_step", config.grid.azimuth_step);
    r.finish();
  }
  if (const json* s = top.find("scene")) {
    ObjectReader r(*s, "scene");
    r.read("target_range", config.target_range);
    r.read("target_azimuth", config.target_azimuth);
    r.read("noise_power", config.noise_power);
    r.read("transmit_power", config.transmit_power);
    r.read("samples", config.samples);
    r.finish();
  }
  if (const json* refl = top.find("reflectivity")) {
    config.reflectivity = read_reflectivity(*refl);
  }
  top.read("seed", config.seed);
  top.read("budget", config.budget);
  top.read("enumeration_cap", config.enumeration_cap);
  top.finish();

  config.validate();
  return config;
}

ScenarioConfig parse_config(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end(), nullptr, /*allow_exceptions=*/true,
                    /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ConfigParseError(std::string("config is not valid JSON: ") + e.what());
  }
  return config_from_json(j);
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigParseError("cannot open config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

json to_json(const ScenarioConfig& config) {
  json reflectivity = {{"model", model_name(config.reflectivity.kind())}};
  if (config.reflectivity.kind() == ReflectivityModel::Kind::kFixedList) {
    json values = json::array();
    for (const Complex& v : config.reflectivity.values()) {
      values.push_back({v.real(), v.imag()});
    }
    reflectivity["values"] = std::move(values);
  }
  return {
      {"description", config.description},
      {"array",
       {{"n_tx", config.array.n_tx},
        {"n_rx", config.array.n_rx},
        {"n_irs_elements", config.array.n_irs_elements},
        {"tx_spacing", config.array.tx_spacing},
        {"irs_spacing", config.array.irs_spacing},
        {"wavelength", config.array.wavelength}}},
      {"grid",
       {{"range_count", config.grid.range_count},
        {"range_step", config.grid.range_step},
        {"azimuth_count", config.grid.azimuth_count},
        {"azimuth_step", config.grid.azimuth_step}}},
      {"scene",
       {{"target_range", config.target_range},
        {"target_azimuth", config.target_azimuth},
        {"noise_power", config.noise_power},
        {"transmit_power", config.transmit_power},
        {"samples", config.samples}}},
      {"reflectivity", std::move(reflectivity)},
      {"seed", config.seed},
      {"budget", config.budget},
      {"enumeration_cap", config.enumeration_cap},
  };
}

}  // namespace irs
