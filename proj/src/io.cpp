#include "ghkit/io.hpp"

#include <algorithm>
#include <fstream>

#include "ghkit/errors.hpp"

namespace ghkit {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

namespace {

std::vector<double> number_array(const json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) throw InvalidInput(std::string(what) + " must contain numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

Point1DSet point_set_from_json(const json& j) {
  if (!j.is_object() || !j.contains("points")) {
    throw InvalidInput("point set document needs a \"points\" array");
  }
  return Point1DSet::from_unsorted(number_array(j["points"], "points"));
}

json to_json(const Point1DSet& p) {
  return json{{"points", std::vector<double>(p.points().begin(), p.points().end())}};
}

Network network_from_json(const json& j) {
  if (!j.is_object() || !j.contains("matrix")) {
    throw InvalidInput("metric space document needs a \"matrix\"");
  }
  const json& rows = j["matrix"];
  if (!rows.is_array()) throw InvalidInput("matrix must be an array of rows");
  std::vector<std::vector<double>> m;
  for (const auto& row : rows) m.push_back(number_array(row, "matrix row"));
  if (j.contains("n")) {
    if (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() != m.size()) {
      throw InvalidInput("\"n\" does not match the matrix size");
    }
  }
  return Network::from_rows(m);
}

FiniteMetricSpace metric_space_from_json(const json& j) {
  if (j.is_object() && j.contains("points")) return from_point_set(point_set_from_json(j));
  return validate_metric(network_from_json(j));
}

json to_json(const Network& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    rows.push_back(std::vector<double>(m.row(i).begin(), m.row(i).end()));
  }
  return json{{"n", m.size()}, {"matrix", rows}};
}

json to_json(const Alignment& a) {
  return json{{"value", a.value}, {"reflect", a.reflect}, {"shift", a.shift}};
}

json to_json(const GHResult& r) {
  json witness = json::array();
  for (const auto& [i, j] : r.witness.pairs()) witness.push_back({i, j});
  return json{{"value", r.value},
              {"witness", witness},
              {"lower_bounds",
               {{"distance_set", r.lower_bounds.distance_set},
                {"diameter", r.lower_bounds.diameter}}}};
}

SampledSpace sample_from_json(const json& j) {
  if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array()) {
    throw InvalidInput("sample document needs an \"elements\" array");
  }
  std::vector<Point1DSet> elements;
  for (const auto& e : j["elements"]) {
    elements.push_back(Point1DSet::from_unsorted(number_array(e, "sample element")));
  }
  return SampledSpace(std::move(elements));
}

json to_json(const SampledSpace& s) {
  json elements = json::array();
  for (const auto& e : s.elements()) {
    elements.push_back(std::vector<double>(e.points().begin(), e.points().end()));
  }
  return json{{"elements", elements}};
}

CoverFamily cover_from_json(const json& j) {
  if (!j.is_object() || !j.contains("r") || !j.contains("bound") || !j.contains("classes")) {
    throw InvalidInput("cover document needs \"r\", \"bound\" and \"classes\"");
  }
  CoverFamily c;
  try {
    c.r = j["r"].get<double>();
    c.bound = j["bound"].get<double>();
    c.classes = j["classes"].get<std::vector<CoverClass>>();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed cover: ") + e.what());
  }
  if (!(c.r > 0) || !(c.bound >= 0)) throw InvalidInput("cover needs r > 0 and bound >= 0");
  for (auto& cls : c.classes) {
    for (auto& m : cls) {
      std::sort(m.begin(), m.end());
      m.erase(std::unique(m.begin(), m.end()), m.end());
    }
  }
  return c;
}

json to_json(const CoverFamily& c) {
  return json{{"r", c.r}, {"bound", c.bound}, {"classes", c.classes}};
}

json to_json(const CoverReport& r) {
  return json{{"violations", r.violation_count()},
              {"uncovered", r.uncovered},
              {"disjointness", r.disjointness},
              {"bound", r.bound},
              {"indices", r.indices}};
}

json to_json(const ControlReport& r) {
  return json{{"m", r.block.m},
              {"n", r.block.n},
              {"pairs_checked", r.pairs_checked},
              {"violations", r.violations},
              {"hausdorff_mismatches", r.hausdorff_mismatches},
              {"diameter_violations", r.diameter_violations},
              {"min_ratio", r.min_ratio},
              {"max_ratio", r.max_ratio},
              {"details", r.details}};
}

json to_json(const WitnessFamily& w) {
  json list = json::array();
  for (const auto& a : w.A_list) list.push_back(std::vector<double>(a.points().begin(), a.points().end()));
  return json{{"parameters",
               {{"alpha", w.alpha},
                {"C", w.C},
                {"R", w.R},
                {"M", w.M},
                {"beta", w.beta},
                {"l", w.l},
                {"r", w.r},
                {"s", w.s}}},
              {"A", std::vector<double>(w.A.points().begin(), w.A.points().end())},
              {"A_list", list}};
}

json to_json(const WitnessReport& r) {
  return json{{"violations", r.violations.size()},
              {"pairs_checked", r.pairs_checked},
              {"max_eh_to_center", r.max_eh_to_center},
              {"min_eh_between", r.min_eh_between},
              {"details", r.violations}};
}

}  // namespace ghkit
