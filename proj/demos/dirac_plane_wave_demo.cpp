// Drive the lattice Dirac operator with a null plane-wave ansatz and watch
// the residual collapse under grid refinement.

#include <cmath>
#include <cstdio>
#include <numbers>

#include "sta/dirac.hpp"

using namespace sta;

int main() {
  const auto g = IdealGenerators::make(Algebra::sta());
  const Multivector s0 = default_spin_plane(g);

  auto residual = [&](std::array<int, 4> n, std::array<double, 4> h) {
    LatticeField f(g.algebra(), n, h);
    f.for_each_site([&](const std::array<int, 4>& x) {
      const double t = x[0] * h[0], z = x[3] * h[3];
      f.at(x).up = g.E_plus() * std::sin(2.0 * std::numbers::pi * (t - z) / 8.0);
    });
    return dirac_residual(g, f, 0.0, s0).max_abs();
  };

  const double coarse = residual({8, 4, 4, 16}, {1.0, 1.0, 1.0, 0.5});
  const double fine = residual({16, 4, 4, 32}, {0.5, 1.0, 1.0, 0.25});
  std::printf("massless mode E+3 h(t-z), unequal spacings:\n");
  std::printf("  coarse residual %.6e\n", coarse);
  std::printf("  fine   residual %.6e\n", fine);
  std::printf("  measured order  %.3f\n", std::log2(coarse / fine));

  LatticeField f(g.algebra(), {8, 4, 4, 8});
  f.for_each_site([&](const std::array<int, 4>& x) {
    const int s = ((x[0] - x[3]) % 8 + 8) % 8;
    f.at(x).up = g.E_plus() * std::sin(2.0 * std::numbers::pi * s / 8.0);
  });
  std::printf("matched spacings: residual %.3e (cancels exactly)\n",
              dirac_residual(g, f, 0.0, s0).max_abs());
  return 0;
}
