// Runs the prop12 sweeps once and writes the frozen ceilings to
// tests/data/prop12_reference.json. Only rerun after a validated change to
// the series code; the acceptance binary reads the file, never this program.

#include <cstdio>
#include <fstream>
#include <iostream>

#include "golden.hpp"
#include "prop12_setup.hpp"

int main(int argc, char** argv) {
  using dunkl::testing::Prop12Setup;
  const std::string path =
      argc > 1 ? argv[1] : std::string(DUNKL_TEST_DATA_DIR) + "/prop12_reference.json";
  constexpr double margin = 1.25;

  nlohmann::ordered_json out;
  out["random_seed"] = Prop12Setup::random_seed;
  out["band_seed"] = Prop12Setup::band_seed;
  out["random_points"] = Prop12Setup::random_count;
  out["band_points"] = Prop12Setup::band_count;
  out["band"] = {Prop12Setup::band_lo, Prop12Setup::band_hi};
  out["max_weight"] = Prop12Setup::max_weight;
  out["mu"] = Prop12Setup::mu_grid();
  out["margin"] = margin;
  nlohmann::ordered_json per_k2 = nlohmann::ordered_json::array();
  for (double k2 : Prop12Setup::k2_grid()) {
    const auto report = dunkl::run_sweep(Prop12Setup::config(k2));
    for (const auto& r : report.records) {
      if (!r.converged) {
        std::cerr << "series did not converge at k2 = " << k2 << ", mu = " << *r.mu << '\n';
        return 1;
      }
    }
    per_k2.push_back({{"k2", k2},
                      {"observed_max", report.empirical_constant},
                      {"ceiling", margin * report.empirical_constant},
                      {"order_median", *report.order_median}});
    std::printf("k2 = %g: observed %.6g, median order %.4f\n", k2, report.empirical_constant,
                *report.order_median);
  }
  out["reference"] = std::move(per_k2);
  std::ofstream(path) << out.dump(2) << '\n';
  std::printf("wrote %s\n", path.c_str());
  return 0;
}
