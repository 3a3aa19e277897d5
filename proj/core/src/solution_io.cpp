#include "hhcflex/solution_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hhcflex/errors.hpp"

namespace hhcflex {

namespace {

using json = nlohmann::ordered_json;

Endpoint endpoint_from(const json& v, const std::string& what) {
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "depot") return Endpoint::Depot;
    if (s == "lab") return Endpoint::Lab;
  }
  throw ParseError("field " + what + ": expected \"depot\" or \"lab\"");
}

const json& field(const json& doc, const std::string& name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw ParseError("missing field " + name);
  return *it;
}

}  // namespace

Solution parse_solution_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("solution file is not valid JSON: ") +
                     e.what());
  }
  if (!doc.is_object())
    throw ParseError("solution file must be a JSON object");

  Solution sol;
  const json& obj = field(doc, "objective");
  if (!obj.is_number()) throw ParseError("field objective: expected number");
  sol.objective = obj.get<double>();
  const json& routes = field(doc, "routes");
  if (!routes.is_array()) throw ParseError("field routes: expected array");
  for (const auto& jr : routes) {
    if (!jr.is_object()) throw ParseError("route entries must be objects");
    Route route;
    const json& nurse = field(jr, "nurse");
    if (!nurse.is_number_integer())
      throw ParseError("field nurse: expected integer");
    route.nurse = nurse.get<int>();
    route.start = endpoint_from(field(jr, "start"), "start");
    route.end = endpoint_from(field(jr, "end"), "end");
    const json& visits = field(jr, "visits");
    if (!visits.is_array()) throw ParseError("field visits: expected array");
    for (const auto& jv : visits) {
      Visit v;
      const json& patient = field(jv, "patient");
      const json& service = field(jv, "service");
      const json& start_time = field(jv, "start_time");
      if (!patient.is_number_integer() || !service.is_number_integer())
        throw ParseError("visit patient/service: expected integers");
      if (!start_time.is_number())
        throw ParseError("field start_time: expected number");
      v.patient = patient.get<int>();
      v.service = service.get<int>();
      v.start_time = start_time.get<double>();
      route.visits.push_back(v);
    }
    sol.routes.push_back(std::move(route));
  }
  return sol;
}

std::string solution_to_json(const Solution& solution) {
  json doc;
  doc["objective"] = solution.objective;
  json routes = json::array();
  for (const Route& r : solution.routes) {
    json jr;
    jr["nurse"] = r.nurse;
    jr["start"] = to_string(r.start);
    jr["end"] = to_string(r.end);
    json visits = json::array();
    for (const Visit& v : r.visits) {
      json jv;
      jv["patient"] = v.patient;
      jv["service"] = v.service;
      jv["start_time"] = v.start_time;
      visits.push_back(std::move(jv));
    }
    jr["visits"] = std::move(visits);
    routes.push_back(std::move(jr));
  }
  doc["routes"] = std::move(routes);
  return doc.dump(1) + "\n";
}

Solution read_solution(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open solution file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_solution_json(buf.str());
}

void write_solution(const Solution& solution,
                    const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write solution file " + path.string());
  out << solution_to_json(solution);
}

}  // namespace hhcflex
