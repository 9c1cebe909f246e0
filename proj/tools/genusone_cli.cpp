#include <array>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "genusone/components.hpp"
#include "genusone/graph.hpp"
#include "genusone/io.hpp"
#include "genusone/reduction.hpp"
#include "genusone/stability.hpp"

namespace {

using genusone::ComponentDescriptor;
using genusone::DualGraph;
using genusone::StabilityParams;
using genusone::Vertex;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;   // mathematically false input
constexpr int kExitSchema = 2;  // unreadable or malformed input

ordered_json descriptor_to_json(const ComponentDescriptor& desc,
                                const StabilityParams& params) {
  ordered_json j;
  j["kind"] = desc.principal ? "principal" : "boundary";
  j["partition"] = ordered_json::array();
  j["j"] = desc.j();
  j["core_marks"] = desc.core_marks;
  j["assignment"] = ordered_json::array();
  for (const auto& t : desc.tails) {
    j["partition"].push_back(t.degree);
    j["assignment"].push_back(ordered_json{{"degree", t.degree}, {"marks", t.marks}});
  }
  j["dimension"] = component_dimension(desc, params);
  return j;
}

std::string descriptor_partition_text(const ComponentDescriptor& desc) {
  if (desc.principal) return "-";
  std::string out = "{";
  for (int i = 0; i < desc.k(); ++i) {
    if (i) out += ",";
    out += std::to_string(desc.tails[i].degree);
  }
  return out + "}";
}

std::string descriptor_assignment_text(const ComponentDescriptor& desc) {
  if (desc.principal) return "-";
  std::string out;
  for (int i = 0; i < desc.k(); ++i) {
    if (i) out += " ";
    out += std::to_string(desc.tails[i].degree) + ":[";
    for (std::size_t s = 0; s < desc.tails[i].marks.size(); ++s) {
      if (s) out += ",";
      out += desc.tails[i].marks[s];
    }
    out += "]";
  }
  return out;
}

void print_component_table(std::ostream& out,
                           const std::vector<ComponentDescriptor>& descs,
                           const StabilityParams& params) {
  std::vector<std::array<std::string, 5>> rows;
  rows.push_back({"kind", "partition", "j", "assignment", "dim"});
  for (const auto& d : descs)
    rows.push_back({d.principal ? "principal" : "boundary",
                    descriptor_partition_text(d), std::to_string(d.j()),
                    descriptor_assignment_text(d),
                    std::to_string(component_dimension(d, params))});
  std::array<std::size_t, 5> width{};
  for (const auto& row : rows)
    for (int c = 0; c < 5; ++c) width[c] = std::max(width[c], row[c].size());
  for (const auto& row : rows) {
    for (int c = 0; c < 5; ++c) {
      out << row[c];
      if (c < 4) out << std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << "\n";
  }
}

genusone::TangentData tangents_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw genusone::SchemaError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  nlohmann::json j = nlohmann::json::parse(buffer.str(), nullptr, false);
  if (j.is_discarded()) throw genusone::SchemaError("tangent file is not valid JSON");
  genusone::TangentData data;
  try {
    for (const auto& row : j.at("vectors")) {
      std::vector<genusone::Rational> vec;
      for (const auto& entry : row) vec.emplace_back(entry.get<std::string>());
      data.vectors.push_back(std::move(vec));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw genusone::SchemaError(std::string("bad tangent schema: ") + ex.what());
  } catch (const std::runtime_error& ex) {
    throw genusone::SchemaError(std::string("bad rational entry: ") + ex.what());
  }
  return data;
}

int cmd_validate(const std::string& path, const std::string& format) {
  DualGraph g = genusone::graph_from_file(path);
  auto report = genusone::validate(g);
  if (format == "json") {
    ordered_json j;
    j["valid"] = report.ok();
    j["problems"] = report.problems;
    std::cout << j.dump(2) << "\n";
  } else if (format == "dot") {
    std::cout << genusone::graph_to_dot(g);
  } else {
    if (report.ok()) {
      std::cout << "valid genus-one dual graph (d=" << g.total_degree()
                << ", n=" << g.mark_count() << ", r=" << g.target_dim << ")\n";
    } else {
      for (const auto& p : report.problems) std::cout << "problem: " << p << "\n";
    }
  }
  return report.ok() ? kExitOk : kExitFalse;
}

int cmd_stability(const std::string& path, int m, const std::string& format) {
  DualGraph g = genusone::graph_from_file(path);
  StabilityParams params{m, g.mark_count(), g.target_dim, g.total_degree()};
  auto result = genusone::is_m_stable_map(g, params);
  auto interval = genusone::stability_interval(g, g.target_dim, g.total_degree());

  if (format == "json") {
    ordered_json j;
    j["m"] = m;
    j["stable"] = result.stable;
    j["reasons"] = ordered_json::array();
    for (const auto& reason : result.reasons)
      j["reasons"].push_back(
          ordered_json{{"code", to_string(reason.code)}, {"detail", reason.detail}});
    if (interval.empty) {
      j["interval"] = nullptr;
    } else {
      j["interval"] = ordered_json{{"lower", interval.lower}};
      j["interval"]["upper"] =
          interval.upper ? ordered_json(*interval.upper) : ordered_json(nullptr);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (result.stable ? "stable" : "unstable") << " at m=" << m << "\n";
    for (const auto& reason : result.reasons)
      std::cout << "  " << to_string(reason.code) << ": " << reason.detail << "\n";
    if (interval.empty)
      std::cout << "stability interval: empty\n";
    else if (interval.upper)
      std::cout << "stability interval: [" << interval.lower << ", " << *interval.upper
                << "]\n";
    else
      std::cout << "stability interval: [" << interval.lower << ", inf)\n";
  }
  return result.stable ? kExitOk : kExitFalse;
}

int cmd_reduce(const std::string& path, int m, const std::string& trace_path,
               const std::string& format) {
  DualGraph g = genusone::graph_from_file(path);
  StabilityParams params{m, g.mark_count(), g.target_dim, g.total_degree()};
  auto trace = genusone::reduce(g, params);
  if (!trace_path.empty()) {
    std::ofstream out(trace_path);
    if (!out) throw genusone::SchemaError("cannot write '" + trace_path + "'");
    out << genusone::trace_to_json(trace).dump(2) << "\n";
  }
  if (format == "dot")
    std::cout << genusone::graph_to_dot(trace.final);
  else
    std::cout << genusone::graph_to_string(trace.final, 2) << "\n";
  return kExitOk;
}

int cmd_components(const StabilityParams& params, const std::string& format) {
  auto descs = genusone::enumerate_components(params);
  if (format == "table") {
    print_component_table(std::cout, descs, params);
  } else {
    ordered_json j = ordered_json::array();
    for (const auto& d : descs) j.push_back(descriptor_to_json(d, params));
    std::cout << j.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_smoothable(const std::string& path, bool generic,
                   const std::string& tangent_path) {
  DualGraph g = genusone::graph_from_file(path);
  bool smoothable;
  if (!tangent_path.empty() && !generic)
    smoothable = genusone::is_smoothable(g, tangents_from_file(tangent_path));
  else
    smoothable = genusone::is_smoothable(g);
  std::cout << (smoothable ? "smoothable" : "not-smoothable") << "\n";
  return smoothable ? kExitOk : kExitFalse;
}

// ---------------------------------------------------------------------------
// Plane cubics case study: the component tables for m = 0..3, the three
// boundary reductions (cusp, tacnode, triple point), and the smoothability
// verdicts for the triple-point locus and the generic conic+line map.

DualGraph cubic_with_tails(const std::vector<int>& tail_degrees) {
  DualGraph g;
  g.target_dim = 2;
  Vertex z;
  z.id = "Z";
  z.genus = 1;
  g.vertices.push_back(z);
  for (std::size_t i = 0; i < tail_degrees.size(); ++i) {
    Vertex tail;
    tail.id = "R" + std::to_string(i + 1);
    tail.degree = tail_degrees[i];
    g.vertices.push_back(tail);
    g.edges.emplace_back("Z", tail.id);
  }
  g.normalize();
  return g;
}

int cmd_casestudy(const std::string& name) {
  if (name != "plane-cubics")
    throw genusone::SchemaError("unknown case study '" + name + "'");

  ordered_json report;
  report["space"] = ordered_json{{"r", 2}, {"d", 3}, {"n", 0}};
  report["stages"] = ordered_json::array();
  std::ostringstream prose;
  prose << "== plane cubics: spaces of genus-one maps of degree 3 to P^2 ==\n";

  for (int m = 0; m <= 3; ++m) {
    StabilityParams params{m, 0, 2, 3};
    auto descs = genusone::enumerate_components(params);
    ordered_json stage;
    stage["m"] = m;
    stage["component_count"] = descs.size();
    stage["components"] = ordered_json::array();
    for (const auto& d : descs) stage["components"].push_back(descriptor_to_json(d, params));
    report["stages"].push_back(stage);

    prose << "\nm=" << m << ": " << descs.size() << " irreducible component"
          << (descs.size() == 1 ? "" : "s") << "\n";
    std::ostringstream table;
    print_component_table(table, descs, params);
    prose << table.str();
  }

  struct Shape {
    const char* name;
    int m;
    std::vector<int> tails;
  };
  const Shape shapes[] = {
      {"cusp", 1, {3}}, {"tacnode", 2, {2, 1}}, {"triple-point", 3, {1, 1, 1}}};
  report["reductions"] = ordered_json::array();
  prose << "\n== m-stable reductions of the boundary shapes ==\n";
  for (const auto& shape : shapes) {
    DualGraph g = cubic_with_tails(shape.tails);
    StabilityParams params{shape.m, 0, 2, 3};
    auto trace = genusone::reduce(g, params);
    ordered_json jr;
    jr["name"] = shape.name;
    jr["m"] = shape.m;
    jr["trace"] = genusone::trace_to_json(trace);
    report["reductions"].push_back(jr);
    prose << shape.name << " (m=" << shape.m << "): " << trace.steps.size()
          << " rewrite step(s), cause " << to_string(trace.cause)
          << ", final elliptic multiplicity "
          << (trace.final.elliptic ? trace.final.elliptic->multiplicity() : 0) << "\n";
  }

  DualGraph triple = cubic_with_tails({1, 1, 1});
  DualGraph conic_line = cubic_with_tails({2, 1});
  bool triple_smoothable = genusone::is_smoothable(triple);
  bool conic_line_smoothable = genusone::is_smoothable(conic_line);
  report["smoothability"] =
      ordered_json{{"triple_point_generic", triple_smoothable},
                   {"conic_line_generic", conic_line_smoothable}};
  prose << "\n== smoothability (generic tangents) ==\n";
  prose << "three lines through a point (l=3 > r=2): "
        << (triple_smoothable ? "smoothable" : "not-smoothable") << "\n";
  prose << "conic+line (l=2 <= r=2): "
        << (conic_line_smoothable ? "smoothable" : "not-smoothable") << "\n";

  std::cout << report.dump(2) << "\n\n" << prose.str();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial toolkit for pointed genus-one stable maps"};
  app.require_subcommand(1);

  std::string input, format = "text", trace_path, tangent_path, study = "plane-cubics";
  int m = 0, n = 0, r = 1, d = 1;
  bool generic = false;

  auto* validate = app.add_subcommand("validate", "Check every dual-graph invariant");
  validate->add_option("file", input, "graph JSON file")->required();
  validate->add_option("--format", format)->check(CLI::IsMember({"text", "json", "dot"}));

  auto* stability = app.add_subcommand("stability", "m-stability with reason codes");
  stability->add_option("file", input)->required();
  stability->add_option("--m", m, "stability parameter")->required();
  stability->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* reduce = app.add_subcommand("reduce", "Run the m-stable reduction");
  reduce->add_option("file", input)->required();
  reduce->add_option("--m", m)->required();
  reduce->add_option("--trace", trace_path, "write the full trace JSON here");
  reduce->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));

  auto* components = app.add_subcommand("components", "Enumerate irreducible components");
  components->add_option("--m", m)->required();
  components->add_option("--n", n)->required();
  components->add_option("--r", r)->required();
  components->add_option("--d", d)->required();
  components->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

  auto* smoothable = app.add_subcommand("smoothable", "Principal-component membership");
  smoothable->add_option("file", input)->required();
  smoothable->add_flag("--generic", generic, "general-position tangents");
  smoothable->add_option("--tangents", tangent_path, "explicit tangent vectors JSON");

  auto* casestudy = app.add_subcommand("casestudy", "Reproduce a worked example");
  casestudy->add_option("name", study, "case study name (plane-cubics)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitSchema;
  }

  try {
    if (validate->parsed()) return cmd_validate(input, format);
    if (stability->parsed()) return cmd_stability(input, m, format);
    if (reduce->parsed())
      return cmd_reduce(input, m, trace_path, format == "text" ? "json" : format);
    if (components->parsed())
      return cmd_components(StabilityParams{m, n, r, d}, format == "text" ? "json" : format);
    if (smoothable->parsed()) return cmd_smoothable(input, generic, tangent_path);
    if (casestudy->parsed()) return cmd_casestudy(study);
  } catch (const genusone::SchemaError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitSchema;
  } catch (const std::domain_error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitFalse;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitFalse;
  }
  return kExitOk;
}
