#include "genusone/io.hpp"

#include <fstream>
#include <sstream>

namespace genusone {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json graph_to_json(const DualGraph& g) {
  DualGraph sorted = g;
  sorted.normalize();
  ordered_json j;
  j["r"] = sorted.target_dim;
  j["vertices"] = ordered_json::array();
  for (const auto& v : sorted.vertices) {
    ordered_json jv;
    jv["id"] = v.id;
    jv["genus"] = v.genus;
    jv["degree"] = v.degree;
    jv["marks"] = v.marks;
    j["vertices"].push_back(jv);
  }
  j["edges"] = ordered_json::array();
  for (const auto& e : sorted.edges) j["edges"].push_back({e.a, e.b});
  if (sorted.elliptic)
    j["elliptic"] = ordered_json{{"branches", sorted.elliptic->branches}};
  else
    j["elliptic"] = nullptr;
  return j;
}

std::string graph_to_string(const DualGraph& g, int indent) {
  return graph_to_json(g).dump(indent);
}

DualGraph graph_from_json(const json& j) {
  try {
    DualGraph g;
    if (!j.is_object()) throw SchemaError("graph document must be a JSON object");
    g.target_dim = j.at("r").get<int>();
    for (const auto& jv : j.at("vertices")) {
      Vertex v;
      v.id = jv.at("id").get<std::string>();
      v.genus = jv.at("genus").get<int>();
      v.degree = jv.at("degree").get<int>();
      if (jv.contains("marks")) v.marks = jv.at("marks").get<std::vector<std::string>>();
      g.vertices.push_back(std::move(v));
    }
    for (const auto& je : j.at("edges")) {
      if (!je.is_array() || je.size() != 2)
        throw SchemaError("each edge must be a pair of vertex ids");
      g.edges.emplace_back(je[0].get<std::string>(), je[1].get<std::string>());
    }
    if (j.contains("elliptic") && !j.at("elliptic").is_null()) {
      EllipticPoint p;
      p.branches = j.at("elliptic").at("branches").get<std::vector<std::string>>();
      g.elliptic = std::move(p);
    }
    g.normalize();
    return g;
  } catch (const json::exception& ex) {
    throw SchemaError(std::string("bad graph schema: ") + ex.what());
  }
}

DualGraph graph_from_string(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw SchemaError("input is not valid JSON");
  return graph_from_json(j);
}

DualGraph graph_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return graph_from_string(buffer.str());
}

ordered_json trace_to_json(const ReductionTrace& trace) {
  ordered_json j;
  j["initial"] = graph_to_json(trace.initial);
  j["steps"] = ordered_json::array();
  for (const auto& step : trace.steps) {
    ordered_json js;
    js["kind"] = to_string(step.kind);
    js["affected"] = step.affected;
    js["level_before"] = step.level_before;
    js["level_after"] = step.level_after;
    js["elliptic_before"] = step.elliptic_before;
    js["elliptic_after"] = step.elliptic_after;
    js["before"] = graph_to_json(step.before);
    js["after"] = graph_to_json(step.after);
    j["steps"].push_back(js);
  }
  j["final"] = graph_to_json(trace.final);
  j["cause"] = to_string(trace.cause);
  return j;
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string graph_to_dot(const DualGraph& g) {
  DualGraph sorted = g;
  sorted.normalize();
  std::ostringstream out;
  out << "graph dual {\n";
  for (const auto& v : sorted.vertices) {
    std::string label = v.id + "\\ng=" + std::to_string(v.genus) +
                        " d=" + std::to_string(v.degree);
    out << "  " << dot_quote(v.id) << " [shape=circle, label=" << dot_quote(label)
        << "];\n";
  }
  if (sorted.elliptic) {
    out << "  \"__elliptic__\" [shape=star, label="
        << dot_quote("E_" + std::to_string(sorted.elliptic->multiplicity())) << "];\n";
    for (const auto& b : sorted.elliptic->branches)
      out << "  \"__elliptic__\" -- " << dot_quote(b) << ";\n";
  }
  for (const auto& e : sorted.edges)
    out << "  " << dot_quote(e.a) << " -- " << dot_quote(e.b) << ";\n";
  for (const auto& v : sorted.vertices)
    for (const auto& mk : v.marks) {
      std::string node = "mark:" + mk;
      out << "  " << dot_quote(node) << " [shape=plaintext, label=" << dot_quote(mk)
          << "];\n";
      out << "  " << dot_quote(v.id) << " -- " << dot_quote(node) << " [style=dashed];\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace genusone
