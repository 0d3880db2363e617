#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lur/interval.hpp"
#include "lur/rational.hpp"
#include "lur/sturm.hpp"
#include "lur/unipoly.hpp"

namespace lur {

// All complex roots satisfy |z| < 1 + max_k |c_k| / |c_deg|.
Rational root_bound(const UniPoly& p);

// Region-restricted isolation could not account for every root; callers
// should fall back to a global pass.
struct RegionCountMismatch : std::runtime_error {
  RegionCountMismatch()
      : std::runtime_error(
            "region-restricted isolation did not account for every root") {}
};

// Exact root counts in axis-aligned rectangles via the winding number of p
// along the boundary, tracked through quadrant transitions of p's values.
// Counts include multiplicity. Per-line restrictions are cached, so reusing
// one counter across nearby rectangles is much cheaper than fresh calls.
class RectCounter {
 public:
  explicit RectCounter(UniPoly p);  // p nonzero

  const UniPoly& poly() const { return p_; }

  // nullopt when a root lies on the boundary; degenerate rectangles allowed
  std::optional<int> count(const ComplexInterval& rect);

 private:
  struct Edge {
    IntPoly u, w;  // real/imaginary part of p along the line, integer scaled
    IntPoly g;     // gcd(u, w) when both are nonzero, else empty
    std::unique_ptr<RealRootIsolator> iso_u, iso_w, iso_g;
  };

  UniPoly p_;
  int deg_;
  std::map<Rational, Edge> horiz_, vert_;

  Edge build_edge(const Rational& line, bool horizontal) const;
  Edge& horiz_edge(const Rational& y);
  Edge& vert_edge(const Rational& x);
  static bool has_common_root(const Edge& e, const Rational& lo,
                              const Rational& hi);  // closed interval
  // biased quadrant of p at boundary samples, in increasing parameter order
  std::optional<std::vector<int>> edge_quadrants(const Edge& e,
                                                 const Rational& lo,
                                                 const Rational& hi) const;
};

// Isolating boxes for all complex roots of a squarefree polynomial. Real
// roots get degenerate imaginary parts [0, 0], which certifies realness;
// nonreal roots come in conjugate pairs linked through conj_partner
// (real boxes point at themselves). Boxes are pairwise disjoint with
// positive gaps and hold their root strictly inside (real boxes: inside
// the real interval).
struct IsolationSet {
  std::vector<ComplexInterval> boxes;
  std::vector<std::size_t> conj_partner;

  std::size_t size() const { return boxes.size(); }
};

// Sort boxes by (re.lo, im.lo), fixing partner links. isolate() returns
// canonical sets; refinement preserves box identity instead, so callers
// that want the canonical order back call this.
void canonicalize(IsolationSet& set);

class Isolator {
 public:
  explicit Isolator(UniPoly squarefree);  // throws if p has a repeated root

  const UniPoly& poly() const { return counter_.poly(); }
  int degree() const { return deg_; }
  Rational bound() const { return bound_; }

  std::optional<int> count(const ComplexInterval& rect) {
    return counter_.count(rect);
  }

  // every root, searched in |Re|, |Im| < bound(); box widths <= eps
  IsolationSet isolate(const Rational& eps);
  // regions must be pairwise disjoint with positive gaps and closed under
  // conjugation, with every root strictly inside some region; throws
  // RegionCountMismatch when the totals do not add up
  IsolationSet isolate(const Rational& eps,
                       const std::vector<ComplexInterval>& regions);
  // roots inside one region, which must be symmetric about the real axis;
  // other roots are simply absent from the result
  IsolationSet isolate(const Rational& eps, const ComplexInterval& region);

  // shrink boxes to width <= eps, preserving order and conjugate symmetry
  void refine_to(IsolationSet& set, const Rational& eps);
  void refine_one(IsolationSet& set, std::size_t k, const Rational& eps);

 private:
  struct Cell {
    ComplexInterval box;
    int cnt;
  };
  enum class Mode { kGlobal, kFamily, kSingle };

  RectCounter counter_;
  int deg_;
  Rational bound_;
  std::unique_ptr<RealRootIsolator> real_;

  // symmetric variant for cells sitting on the real axis: count the
  // reflected rectangle, subtract the real roots, halve
  std::optional<int> cell_count(const ComplexInterval& cell);
  bool split_cell(const Cell& cell, std::vector<Cell>& out);
  ComplexInterval step_box(const ComplexInterval& box);  // one quadrisection
  ComplexInterval refine_upper(ComplexInterval box, const Rational& eps);
  IsolationSet isolate_impl(const Rational& eps,
                            const std::vector<ComplexInterval>& regions,
                            Mode mode);
};

IsolationSet isolate_roots(const UniPoly& p, const Rational& eps);
IsolationSet isolate_roots(const UniPoly& p, const ComplexInterval& region,
                           const Rational& eps);

// Exact, multiplicity-weighted count; nullopt when a root lies on the
// boundary. One-shot convenience over RectCounter.
std::optional<int> count_roots_in_rectangle(const UniPoly& p,
                                            const ComplexInterval& rect);

// box must isolate exactly one distinct root of p (any multiplicity)
ComplexInterval refine_box(const UniPoly& p, const ComplexInterval& box,
                           const Rational& eps);

// smallest pairwise box distance; nullopt means +infinity (fewer than 2)
std::optional<Rational> min_box_separation(const IsolationSet& set);

}  // namespace lur
