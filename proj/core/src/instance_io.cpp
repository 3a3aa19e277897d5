#include "hhcflex/instance_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hhcflex/errors.hpp"

namespace hhcflex {

namespace {

using json = nlohmann::ordered_json;

const std::set<std::string> kFields = {
    "name",          "num_patients",     "num_nurses", "num_services",
    "travel_time",   "service_duration", "window_lo",  "window_hi",
    "qualification", "demand",           "start_req",  "end_req"};

const json& field(const json& doc, const std::string& name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw ParseError("missing field " + name);
  return *it;
}

double as_number(const json& v, const std::string& what) {
  if (!v.is_number()) throw ParseError("field " + what + ": expected number");
  return v.get<double>();
}

int as_int(const json& v, const std::string& what) {
  if (!v.is_number_integer())
    throw ParseError("field " + what + ": expected integer");
  return v.get<int>();
}

std::vector<double> as_number_vector(const json& v, const std::string& what) {
  if (!v.is_array()) throw ParseError("field " + what + ": expected array");
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(as_number(e, what));
  return out;
}

std::vector<int> as_int_vector(const json& v, const std::string& what) {
  if (!v.is_array()) throw ParseError("field " + what + ": expected array");
  std::vector<int> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(as_int(e, what));
  return out;
}

std::vector<std::vector<double>> as_number_matrix(const json& v,
                                                  const std::string& what) {
  if (!v.is_array())
    throw ParseError("field " + what + ": expected array of arrays");
  std::vector<std::vector<double>> out;
  out.reserve(v.size());
  for (const auto& row : v) out.push_back(as_number_vector(row, what));
  return out;
}

std::vector<std::vector<int>> as_int_matrix(const json& v,
                                            const std::string& what) {
  if (!v.is_array())
    throw ParseError("field " + what + ": expected array of arrays");
  std::vector<std::vector<int>> out;
  out.reserve(v.size());
  for (const auto& row : v) out.push_back(as_int_vector(row, what));
  return out;
}

}  // namespace

Instance parse_instance_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("instance file is not valid JSON: ") +
                     e.what());
  }
  if (!doc.is_object())
    throw ParseError("instance file must be a JSON object");
  for (const auto& item : doc.items()) {
    if (!kFields.count(item.key()))
      throw ParseError("unknown field " + item.key());
  }

  Instance inst;
  const json& name = field(doc, "name");
  if (!name.is_string()) throw ParseError("field name: expected string");
  inst.name = name.get<std::string>();
  inst.num_patients = as_int(field(doc, "num_patients"), "num_patients");
  inst.num_nurses = as_int(field(doc, "num_nurses"), "num_nurses");
  inst.num_services = as_int(field(doc, "num_services"), "num_services");
  inst.travel_time = as_number_matrix(field(doc, "travel_time"), "travel_time");
  inst.service_duration =
      as_number_matrix(field(doc, "service_duration"), "service_duration");
  inst.window_lo = as_number_vector(field(doc, "window_lo"), "window_lo");
  inst.window_hi = as_number_vector(field(doc, "window_hi"), "window_hi");
  inst.qualification =
      as_int_matrix(field(doc, "qualification"), "qualification");
  inst.demand = as_int_matrix(field(doc, "demand"), "demand");
  inst.start_req = as_int_vector(field(doc, "start_req"), "start_req");
  inst.end_req = as_int_vector(field(doc, "end_req"), "end_req");

  inst.require_valid();  // SchemaError on dimension/invariant problems
  return inst;
}

std::string instance_to_json(const Instance& instance) {
  json doc;
  doc["name"] = instance.name;
  doc["num_patients"] = instance.num_patients;
  doc["num_nurses"] = instance.num_nurses;
  doc["num_services"] = instance.num_services;
  doc["travel_time"] = instance.travel_time;
  doc["service_duration"] = instance.service_duration;
  doc["window_lo"] = instance.window_lo;
  doc["window_hi"] = instance.window_hi;
  doc["qualification"] = instance.qualification;
  doc["demand"] = instance.demand;
  doc["start_req"] = instance.start_req;
  doc["end_req"] = instance.end_req;
  return doc.dump(1) + "\n";
}

Instance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_json(buf.str());
}

void write_instance(const Instance& instance,
                    const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write instance file " + path.string());
  out << instance_to_json(instance);
}

}  // namespace hhcflex
