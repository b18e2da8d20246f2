// Regenerates and checks the 2-collared diagram fixtures.
//
// The three diagrams shipped under fixtures/ are derived, not drawn: this
// tool enumerates all gluings of 2 resp. 4 squares into disc diagrams with
// boundary length 4 resp. 6, filters for the 2-collared boundary/segment
// structure, and classifies the survivors up to rotation, reflection and
// face relabeling.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sqmodel/canned_shapes.hpp"
#include "sqmodel/diagram.hpp"

namespace {

std::string describe(const sqm::AbstractDiagram& d) {
  std::ostringstream os;
  const sqm::DiagramEdges e = sqm::collect_edges(d);
  const sqm::DiagramVertices v = sqm::derive_vertices(d, e);
  const sqm::DiagramStats s = sqm::diagram_stats(d);
  os << "faces=" << s.faces << " boundary=" << s.boundary_length;
  os << " internal_valences=[";
  bool first = true;
  for (int c = 0; c < v.count; ++c) {
    if (v.on_boundary[c]) continue;
    if (!first) os << ' ';
    os << v.valence[c];
    first = false;
  }
  os << "] parity_defects=" << sqm::parity_defects(d).size();
  os << " corners={";
  first = true;
  for (const int f : sqm::collared_corners(d)) {
    if (!first) os << ' ';
    os << f;
    first = false;
  }
  os << "}";
  return os.str();
}

void print_diagram(const sqm::AbstractDiagram& d) {
  std::ostringstream os;
  sqm::write_diagram(os, d);
  std::cout << os.str();
}

std::string render(const sqm::AbstractDiagram& d) {
  std::ostringstream os;
  sqm::write_diagram(os, d);
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-collared diagram fixture generator"};
  bool list = false;
  std::string emit_dir;
  std::string check_dir;
  app.add_flag("--list", list, "enumerate and print the collared diagrams");
  app.add_option("--emit", emit_dir, "write the fixture files into this directory");
  app.add_option("--check", check_dir, "verify the fixture files in this directory");
  CLI11_PARSE(app, argc, argv);

  const auto two = sqm::enumerate_two_collared(2, 4);
  const auto four = sqm::enumerate_two_collared(4, 6);

  if (list) {
    std::cout << "2-collared diagrams with 2 faces, boundary 4: " << two.size() << "\n";
    for (const auto& d : two) {
      std::cout << "--- " << describe(d) << "\n";
      print_diagram(d);
    }
    std::cout << "2-collared diagrams with 4 faces, boundary 6: " << four.size() << "\n";
    for (const auto& d : four) {
      std::cout << "--- " << describe(d) << "\n";
      print_diagram(d);
    }
  }

  if (two.size() != 1 || four.size() != 2) {
    std::cerr << "[FAIL] expected 1 + 2 collared diagrams, found " << two.size() << " + "
              << four.size() << "\n";
    return 1;
  }

  // The shipped tables must match the enumeration up to relabeling: a is the
  // 2-face diagram, c the 4-face diagram with parity defects, b the other.
  {
    const auto& canned = sqm::collared_diagrams();
    const bool c0_defective = !sqm::parity_defects(four[0]).empty();
    const sqm::AbstractDiagram& found_b = c0_defective ? four[1] : four[0];
    const sqm::AbstractDiagram& found_c = c0_defective ? four[0] : four[1];
    if (!sqm::same_gluing(two[0], canned[0].diagram) ||
        !sqm::same_gluing(found_b, canned[1].diagram) ||
        !sqm::same_gluing(found_c, canned[2].diagram)) {
      std::cerr << "[FAIL] shipped diagram tables disagree with the enumeration\n";
      return 1;
    }
  }

  if (!emit_dir.empty() || !check_dir.empty()) {
    const auto& canned = sqm::collared_diagrams();
    const auto& corners = sqm::corner_shapes();
    std::vector<std::pair<std::string, std::string>> files;
    for (const auto& shape : canned)
      files.emplace_back("collared_" + shape.name + ".diag", render(shape.diagram));
    for (const auto& shape : corners) {
      // Shipped instantiation: r = a1 a2 a3 a4 under the shape's default
      // orientation/rotation choices.
      const sqm::Relator r{{sqm::Letter(1), sqm::Letter(2), sqm::Letter(3), sqm::Letter(4)}};
      const auto inst = sqm::instantiate_shape(shape, r, shape.default_choices);
      if (!inst) {
        std::cerr << "[FAIL] default instantiation of " << shape.name << " is inconsistent\n";
        return 1;
      }
      files.emplace_back("corner_" + shape.name + ".diag", render(*inst));
    }

    if (!emit_dir.empty()) {
      std::filesystem::create_directories(emit_dir);
      for (const auto& [name, text] : files) {
        std::ofstream os(std::filesystem::path(emit_dir) / name);
        os << text;
      }
      std::cout << "wrote " << files.size() << " fixtures to " << emit_dir << "\n";
    }
    if (!check_dir.empty()) {
      for (const auto& [name, text] : files) {
        std::ifstream is(std::filesystem::path(check_dir) / name);
        if (!is) {
          std::cerr << "[FAIL] missing fixture " << name << "\n";
          return 1;
        }
        std::stringstream buf;
        buf << is.rdbuf();
        if (buf.str() != text) {
          std::cerr << "[FAIL] fixture " << name << " differs from the enumeration output\n";
          return 1;
        }
      }
      std::cout << "all " << files.size() << " fixtures match\n";
    }
  }
  return 0;
}
