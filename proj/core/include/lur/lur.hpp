#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lur/interval.hpp"
#include "lur/multipoly.hpp"
#include "lur/rational.hpp"
#include "lur/unipoly.hpp"

namespace lur {

struct SolveOptions {
  Rational eps = Rational(1, 1024);  // guaranteed width of coordinate boxes
  // overrides for the automatically chosen ladder; validated and rejected
  // with InvalidScaleError when unsound
  std::optional<std::vector<Rational>> scales;  // s_1..s_{n-1}
  std::optional<Rational> d1;
  bool real_only = false;
  bool with_multiplicities = false;
  // pick scales from isolated value bounds instead of coefficient bounds;
  // slower, admits larger scales
  bool tight_bounds = false;
};

struct RootBox {
  std::vector<ComplexInterval> coords;  // one box per variable
  std::optional<int> multiplicity;
};

struct LevelStats {
  int degree = 0;              // degree of the level eliminant
  std::size_t boxes = 0;       // distinct values of the level form
  std::size_t coeff_bits = 0;  // largest eliminant coefficient bit length
};

// Output of the solver: the chain of scaled eliminants T_1..T_n with the
// parameter ladder (scales, prefix products, matching distances d_i and
// thresholds rho_i) that makes consecutive-level value matching unique, plus
// the recovered coordinate boxes. Level form i is
// x_1 + s_1 x_2 + s_1 s_2 x_3 + ... truncated after variable i, and
// coordinate i+1 of a root is (value_{i+1} - value_i) / (s_1...s_i).
struct LurResult {
  std::size_t nvars = 0;
  Rational eps;
  std::size_t quotient_dim = 0;

  std::vector<UniPoly> eliminants;  // T_1..T_n
  std::vector<Rational> scales;     // s_1..s_{n-1}
  std::vector<Rational> prefixes;   // s_1...s_{i-1} for i = 1..n; first is 1
  std::vector<Rational> d;          // d_1..d_n
  std::vector<Rational> radii;      // value radius bound used for s_i; r_2..r_n
  std::vector<Rational> thresholds;           // rho_i = prefix_i d_i, i < n
  std::vector<std::optional<Rational>> separations;  // S_1..S_n; nullopt: one box
  std::vector<Rational> eps_schedule;         // final per-level box widths

  std::vector<RootBox> roots;  // sorted by coordinate boxes, first var first
  std::vector<LevelStats> stats;
};

// Certified complex solving of a zero-dimensional system: every solution of
// the input system gets one entry in roots whose boxes have width <= eps and
// contain the solution, with exact realness certificates (degenerate
// imaginary parts) for real coordinates. Throws NotZeroDimensionalError for
// positive-dimensional input; a system with no solutions yields an empty
// roots list.
LurResult lur_solve(const std::vector<MultiPoly>& system, std::size_t nvars,
                    const SolveOptions& opt = {});

}  // namespace lur
