#include "lur/uniroot.hpp"

#include <random>
#include <vector>

#include "doctest.h"
#include "support.hpp"

using namespace lur;
using testing::conjugate_pair_factor;
using testing::poly_from_roots;

namespace {

ComplexInterval rect(long rl, long rh, long il, long ih, long den = 1) {
  return {{Rational(rl, den), Rational(rh, den)},
          {Rational(il, den), Rational(ih, den)}};
}

}  // namespace

TEST_CASE("root_bound dominates planted roots") {
  UniPoly p = poly_from_roots({Rational(3), Rational(-5), Rational(1, 2)});
  Rational b = root_bound(p);
  CHECK(b > Rational(5));
  UniPoly q = conjugate_pair_factor(Rational(2), Rational(7));
  CHECK(root_bound(q) > Rational(7));
  CHECK(root_bound(UniPoly::identity()) == Rational(1));
}

TEST_CASE("rectangle counts on a fully known factorization") {
  // roots: 1, 2, i, -i
  UniPoly p = poly_from_roots({Rational(1), Rational(2)}) *
              conjugate_pair_factor(Rational(0), Rational(1));
  CHECK(count_roots_in_rectangle(p, rect(0, 3, -2, 2)) == 4);
  CHECK(count_roots_in_rectangle(p, rect(1, 3, 1, 3, 2)) == 1);  // only 1
  CHECK(count_roots_in_rectangle(p, rect(-1, 1, 1, 3, 2)) == 1);  // only i
  CHECK(count_roots_in_rectangle(p, rect(3, 4, 0, 1)) == 0);
  // root on an edge and on a corner: no verdict
  CHECK(!count_roots_in_rectangle(p, rect(1, 3, 0, 1)).has_value());
  CHECK(!count_roots_in_rectangle(p, rect(1, 2, 0, 1)).has_value());
}

TEST_CASE("counts carry multiplicity") {
  UniPoly lin = poly_from_roots({Rational(1)});
  UniPoly p = lin * lin * poly_from_roots({Rational(-2)});
  CHECK(count_roots_in_rectangle(p, rect(0, 3, -1, 1)) == 2);
  CHECK(count_roots_in_rectangle(p, rect(-3, 3, -1, 1)) == 3);
}

TEST_CASE("degenerate rectangles are allowed") {
  UniPoly p = conjugate_pair_factor(Rational(1), Rational(1));  // 1 +- i
  // a segment through 1+i and a point on it
  CHECK(!count_roots_in_rectangle(p, rect(0, 2, 1, 1)).has_value());
  CHECK(count_roots_in_rectangle(p, rect(0, 2, 0, 0)) == 0);
  ComplexInterval pt{{Rational(1), Rational(1)}, {Rational(1), Rational(1)}};
  CHECK(!count_roots_in_rectangle(p, pt).has_value());
  ComplexInterval off{{Rational(0), Rational(0)}, {Rational(0), Rational(0)}};
  CHECK(count_roots_in_rectangle(p, off) == 0);
}

TEST_CASE("reusing one counter across rectangles") {
  UniPoly p = poly_from_roots({Rational(0), Rational(1), Rational(-1)});
  RectCounter counter(p);
  CHECK(counter.count(rect(-2, 2, -1, 1)) == 3);
  CHECK(counter.count(rect(-2, -1, -1, 1, 2)) == 1);
  CHECK(counter.count(rect(-1, 1, -1, 1, 2)) == 1);
  CHECK(counter.count(rect(1, 3, -1, 1, 2)) == 1);
}

TEST_CASE("isolation separates all roots with correct realness") {
  std::vector<Rational> real_roots{Rational(-1, 2), Rational(3)};
  UniPoly p = poly_from_roots(real_roots) *
              conjugate_pair_factor(Rational(0), Rational(1)) *
              conjugate_pair_factor(Rational(-2), Rational(3, 2));
  IsolationSet set = isolate_roots(p, Rational(1, 64));
  REQUIRE(set.size() == 6);
  int real_count = 0, complex_count = 0;
  for (std::size_t k = 0; k < set.size(); ++k) {
    const ComplexInterval& b = set.boxes[k];
    CHECK(b.width() <= Rational(1, 64));
    if (b.is_real()) {
      ++real_count;
      CHECK(set.conj_partner[k] == k);
    } else {
      ++complex_count;
      std::size_t m = set.conj_partner[k];
      REQUIRE(m < set.size());
      CHECK(m != k);
      CHECK(set.boxes[m] == conj(b));
    }
  }
  CHECK(real_count == 2);
  CHECK(complex_count == 4);
  // every planted root is inside exactly one box
  std::vector<ComplexPoint> pts{{Rational(-1, 2), Rational(0)},
                                {Rational(3), Rational(0)},
                                {Rational(0), Rational(1)},
                                {Rational(0), Rational(-1)},
                                {Rational(-2), Rational(3, 2)},
                                {Rational(-2), Rational(-3, 2)}};
  for (const ComplexPoint& z : pts) {
    int hits = 0;
    for (const ComplexInterval& b : set.boxes)
      if (b.contains(z)) ++hits;
    CHECK(hits == 1);
  }
  // pairwise positive gaps
  for (std::size_t a = 0; a < set.size(); ++a)
    for (std::size_t b = a + 1; b < set.size(); ++b)
      CHECK(box_dis(set.boxes[a], set.boxes[b]) > Rational(0));
}

TEST_CASE("canonical order sorts by real then imaginary lower endpoint") {
  UniPoly p = poly_from_roots({Rational(2), Rational(-1)}) *
              conjugate_pair_factor(Rational(0), Rational(2));
  IsolationSet set = isolate_roots(p, Rational(1, 16));
  for (std::size_t k = 1; k < set.size(); ++k) {
    const ComplexInterval& a = set.boxes[k - 1];
    const ComplexInterval& b = set.boxes[k];
    bool ordered = a.re.lo < b.re.lo ||
                   (a.re.lo == b.re.lo && a.im.lo < b.im.lo);
    CHECK(ordered);
  }
}

TEST_CASE("refine_to keeps roots, symmetry and order") {
  UniPoly p = poly_from_roots({Rational(1, 3)}) *
              conjugate_pair_factor(Rational(1), Rational(1));
  Isolator iso(p);
  IsolationSet set = iso.isolate(Rational(1, 4));
  std::vector<ComplexInterval> before = set.boxes;
  iso.refine_to(set, Rational(1, 4096));
  REQUIRE(set.size() == before.size());
  for (std::size_t k = 0; k < set.size(); ++k) {
    CHECK(set.boxes[k].width() <= Rational(1, 4096));
    // refined boxes stay inside the originals (same identity)
    CHECK(set.boxes[k].re.lo >= before[k].re.lo);
    CHECK(set.boxes[k].re.hi <= before[k].re.hi);
    if (!set.boxes[k].is_real()) {
      std::size_t m = set.conj_partner[k];
      CHECK(set.boxes[m] == conj(set.boxes[k]));
    }
  }
  CHECK(set.boxes[0].re.contains(Rational(1, 3)));
}

TEST_CASE("refine_box drills into a multiple root") {
  UniPoly lin = poly_from_roots({Rational(1, 7)});
  UniPoly p = lin * lin;  // double root, isolation itself would reject this
  ComplexInterval start{{Rational(0), Rational(1)},
                        {Rational(-1, 4), Rational(1, 4)}};
  ComplexInterval out = refine_box(p, start, Rational(1, 1024));
  CHECK(out.width() <= Rational(1, 1024));
  CHECK(out.re.contains(Rational(1, 7)));
}

TEST_CASE("region-restricted isolation sees only its region") {
  UniPoly p = poly_from_roots({Rational(0), Rational(10)});
  Isolator iso(p);
  ComplexInterval region{{Rational(-1), Rational(1)},
                         {Rational(-1), Rational(1)}};
  IsolationSet set = iso.isolate(Rational(1, 32), region);
  REQUIRE(set.size() == 1);
  CHECK(set.boxes[0].re.contains(Rational(0)));
  // family variant with both regions accounts for every root
  std::vector<ComplexInterval> regions{
      region, {{Rational(9), Rational(11)}, {Rational(-1), Rational(1)}}};
  IsolationSet both = iso.isolate(Rational(1, 32), regions);
  CHECK(both.size() == 2);
}

TEST_CASE("family isolation over incomplete regions throws") {
  UniPoly p = poly_from_roots({Rational(0), Rational(10)});
  Isolator iso(p);
  std::vector<ComplexInterval> regions{
      {{Rational(-1), Rational(1)}, {Rational(-1), Rational(1)}}};
  CHECK_THROWS_AS(iso.isolate(Rational(1, 32), regions),
                  RegionCountMismatch);
}

TEST_CASE("min_box_separation matches brute force") {
  UniPoly p = poly_from_roots({Rational(0), Rational(1), Rational(5, 2)});
  IsolationSet set = isolate_roots(p, Rational(1, 128));
  auto sep = min_box_separation(set);
  REQUIRE(sep.has_value());
  Rational best(-1);
  for (std::size_t a = 0; a < set.size(); ++a)
    for (std::size_t b = a + 1; b < set.size(); ++b) {
      Rational d = box_dis(set.boxes[a], set.boxes[b]);
      if (best < Rational(0) || d < best) best = d;
    }
  CHECK(*sep == best);
  UniPoly single = poly_from_roots({Rational(4)});
  IsolationSet one = isolate_roots(single, Rational(1, 4));
  CHECK(!min_box_separation(one).has_value());
}

TEST_CASE("clustered real roots still come apart") {
  // eight roots spaced 1/8 apart
  std::vector<Rational> roots;
  for (int k = 1; k <= 8; ++k) roots.push_back(Rational(k, 8));
  UniPoly p = poly_from_roots(roots);
  IsolationSet set = isolate_roots(p, Rational(1, 256));
  REQUIRE(set.size() == 8);
  for (std::size_t k = 0; k < 8; ++k) {
    CHECK(set.boxes[k].is_real());
    CHECK(set.boxes[k].re.contains(roots[k]));
  }
}

TEST_CASE("isolator rejects repeated roots") {
  UniPoly lin = poly_from_roots({Rational(2)});
  CHECK_THROWS(Isolator(lin * lin));
}
