#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cohom1/classify.hpp"
#include "cohom1/parse.hpp"
#include "json.hpp"

using nlohmann::json;
using namespace cohom1;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& arg) {
  // a token starting with '(' is an inline diagram; otherwise a file path
  if (!arg.empty() && arg[0] == '(') return arg;
  std::ifstream in(arg);
  if (!in) throw ParseError("cannot open file '" + arg + "'", 1, 1);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.pop_back();
  return text;
}

json report_json(const GroupDiagram& d, const ValidationReport& rep) {
  json j;
  j["diagram"] = serialize_diagram(canonical_form(d));
  j["display"] = d.str();
  j["accepted"] = rep.accepted;
  j["reasons"] = rep.reasons;
  j["space_dim"] = rep.space_dim;
  switch (rep.effectiveness) {
    case Effectiveness::Effective: j["effectiveness"] = "effective"; break;
    case Effectiveness::AlmostEffective:
      j["effectiveness"] = "almost effective";
      break;
    case Effectiveness::Ineffective: j["effectiveness"] = "ineffective"; break;
  }
  if (rep.fiber_minus) j["fiber_minus"] = rep.fiber_minus->str();
  if (rep.fiber_plus) j["fiber_plus"] = rep.fiber_plus->str();
  if (!rep.accepted) return j;
  j["manifold"] = is_manifold(d);
  auto r = realize(d);
  j["realization"] = r.str();
  if (!r.notes.empty()) j["realization_notes"] = r.notes;
  auto p = fundamental_group(d);
  j["pi1"] = p.applicable() ? p.group->str() : "n/a (" + p.reason + ")";
  auto prim = is_primitive(d);
  j["primitive"] = prim.primitive;
  if (prim.obstruction) j["primitivity_obstruction"] = prim.obstruction->str();
  if (d.orbit == OrbitSpaceKind::Interval) {
    j["directions_minus"] = space_of_directions(d, Side::Minus).str();
    j["directions_plus"] = space_of_directions(d, Side::Plus).str();
  }
  return j;
}

void print_report(const json& j) {
  std::cout << "diagram:       " << j["display"].get<std::string>() << "\n";
  std::cout << "verdict:       "
            << (j["accepted"].get<bool>() ? "accepted" : "rejected") << "\n";
  for (const auto& r : j["reasons"])
    std::cout << "  reason:      " << r.get<std::string>() << "\n";
  std::cout << "space dim:     " << j["space_dim"] << "\n";
  std::cout << "effectiveness: " << j["effectiveness"].get<std::string>() << "\n";
  if (j.contains("fiber_minus"))
    std::cout << "K-/H:          " << j["fiber_minus"].get<std::string>() << "\n";
  if (j.contains("fiber_plus"))
    std::cout << "K+/H:          " << j["fiber_plus"].get<std::string>() << "\n";
  if (!j["accepted"].get<bool>()) return;
  std::cout << "manifold:      " << (j["manifold"].get<bool>() ? "yes" : "no")
            << "\n";
  std::cout << "realization:   " << j["realization"].get<std::string>() << "\n";
  if (j.contains("realization_notes"))
    for (const auto& n : j["realization_notes"])
      std::cout << "  note:        " << n.get<std::string>() << "\n";
  if (j.contains("directions_minus"))
    std::cout << "Sigma_x(-):    " << j["directions_minus"].get<std::string>()
              << "\n";
  if (j.contains("directions_plus"))
    std::cout << "Sigma_x(+):    " << j["directions_plus"].get<std::string>()
              << "\n";
  std::cout << "pi1:           " << j["pi1"].get<std::string>() << "\n";
  std::cout << "primitive:     " << (j["primitive"].get<bool>() ? "yes" : "no");
  if (j.contains("primitivity_obstruction"))
    std::cout << "  (L = " << j["primitivity_obstruction"].get<std::string>()
              << ")";
  std::cout << "\n";
}

json table_json(const ClassificationTable& t) {
  json j;
  j["schema"] = "cohom1/table/v1";
  j["dimension"] = t.dimension;
  j["groups"] = json::array();
  for (const auto& g : t.groups) j["groups"].push_back(g.str());
  j["rows"] = json::array();
  for (const auto& r : t.rows) {
    json row;
    row["diagram"] = r.diagram.str();
    row["serialized"] = serialize_diagram(r.diagram);
    row["realization"] = r.realization_str;
    row["manifold"] = r.manifold;
    row["provenance"] = r.provenance;
    if (!r.note.empty()) row["note"] = r.note;
    if (!r.realization.notes.empty()) row["flags"] = r.realization.notes;
    j["rows"].push_back(row);
  }
  return j;
}

void print_table(const ClassificationTable& t) {
  for (const auto& r : t.rows) {
    std::cout << (r.manifold ? "  [manifold]     " : "  [non-manifold] ")
              << r.diagram.str() << "  =  " << r.realization_str;
    if (!r.note.empty()) std::cout << "   {" << r.note << "}";
    std::cout << "\n";
  }
  std::cout << t.rows.size() << " families\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cohom1: classification of closed cohomogeneity one Alexandrov spaces "
      "in dimensions 3 and 4 via group diagrams"};
  app.require_subcommand(1);

  std::string input;
  std::string format = "text";
  int dim = 0;
  int n = 4;
  bool filter_nonmanifold = false, filter_manifold = false;

  auto* check = app.add_subcommand("check", "validate a diagram and report");
  check->add_option("diagram", input, "inline diagram or file")->required();
  check->add_option("--dim", dim, "requested space dimension");
  check->add_option("--format", format, "text|json");

  auto* classify_cmd =
      app.add_subcommand("classify", "enumerate diagram families");
  classify_cmd->add_option("dim", dim, "space dimension (3 or 4)")->required();
  classify_cmd->add_flag("--non-manifold", filter_nonmanifold,
                         "only non-manifold families");
  classify_cmd->add_flag("--manifold", filter_manifold,
                         "only manifold families");
  classify_cmd->add_option("--format", format, "table|json");

  auto* corob = app.add_subcommand(
      "corollary-b", "torus actions in dimension n: the eight families");
  corob->add_option("n", n, "total dimension (>= 4)")->required();

  auto* pi1 = app.add_subcommand("pi1", "fundamental group of a diagram");
  pi1->add_option("diagram", input, "inline diagram or file")->required();

  auto* real = app.add_subcommand("realize", "structural realization");
  real->add_option("diagram", input, "inline diagram or file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitUsage : kExitOk;
  }

  try {
    if (check->parsed()) {
      GroupDiagram d = parse_diagram(read_input(input));
      auto rep = validate(d, dim > 0 ? std::optional<int>(dim) : std::nullopt);
      json j = report_json(d, rep);
      if (format == "json") std::cout << j.dump(2) << "\n";
      else print_report(j);
      return rep.accepted ? kExitOk : kExitRejected;
    }
    if (classify_cmd->parsed()) {
      if (dim != 3 && dim != 4) {
        std::cerr << "error: only dimensions 3 and 4 are classified\n";
        return kExitUsage;
      }
      RowFilter f = RowFilter::All;
      if (filter_nonmanifold) f = RowFilter::NonManifold;
      if (filter_manifold) f = RowFilter::Manifold;
      ClassificationTable t;
      t.dimension = dim;
      t.groups = admissible_groups(dim);
      if (dim == 4 && f == RowFilter::NonManifold) {
        t = theorem_c_table();
      } else {
        for (const auto& g : t.groups) {
          auto part = enumerate_diagrams(dim, g, f);
          for (auto& r : part.rows) t.rows.push_back(std::move(r));
        }
      }
      if (format == "json") std::cout << table_json(t).dump(2) << "\n";
      else print_table(t);
      return kExitOk;
    }
    if (corob->parsed()) {
      if (n < 4) {
        std::cerr << "error: Corollary B applies for n >= 4\n";
        return kExitUsage;
      }
      for (const auto& e : corollary_b_list(n)) std::cout << e.total << "\n";
      return kExitOk;
    }
    if (pi1->parsed()) {
      GroupDiagram d = parse_diagram(read_input(input));
      if (!validate(d).accepted) {
        std::cerr << "rejected: " << validate(d).summary() << "\n";
        return kExitRejected;
      }
      auto p = fundamental_group(d);
      if (p.applicable()) std::cout << p.group->str() << "\n";
      else std::cout << "not applicable: " << p.reason << "\n";
      return kExitOk;
    }
    if (real->parsed()) {
      GroupDiagram d = parse_diagram(read_input(input));
      if (!validate(d).accepted) {
        std::cerr << "rejected: " << validate(d).summary() << "\n";
        return kExitRejected;
      }
      auto r = realize(d);
      std::cout << r.str() << "\n";
      for (const auto& note : r.notes) std::cout << "note: " << note << "\n";
      return kExitOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error at line " << e.line << ", column " << e.column
              << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const OutOfScope& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CatalogError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRejected;
  }
  return kExitUsage;
}
