// Regenerates the bundled triple-point projection tables data/tb<n>.spd:
// all prime connected n-triple-point projections up to isotopy and mirror,
// one sPD code per line, sorted by canonical key.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "deltaknot/enumerate.hpp"

int main(int argc, char** argv) {
  CLI::App app{"regenerate triple-point projection tables"};
  int max_n = 4;
  std::string out_dir = "data";
  app.add_option("--max-n", max_n, "largest table to generate")
      ->check(CLI::Range(1, 5));
  app.add_option("--out", out_dir, "output directory");
  CLI11_PARSE(app, argc, argv);

  std::filesystem::create_directories(out_dir);
  for (int n = 1; n <= max_n; ++n) {
    auto projections = dk::enumerate_projections(n);
    auto path = std::filesystem::path(out_dir) / ("tb" + std::to_string(n) + ".spd");
    std::ofstream out(path);
    for (const auto& p : projections) out << p.emit() << "\n";
    std::size_t knots = dk::filter_knot_projections(projections).size();
    std::cout << path.string() << ": " << projections.size()
              << " projections (" << knots << " knot projections)\n";
  }
  return 0;
}
