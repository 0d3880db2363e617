#include "lur/uniroot.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace lur {

Rational root_bound(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("root_bound: zero polynomial");
  Rational m(0);
  for (int k = 0; k < p.degree(); ++k) m = max(m, abs(p[k]));
  return Rational(1) + m / abs(p.leading());
}

namespace {

IntPoly ip_shift(const IntPoly& p) {
  if (p.empty()) return {};
  IntPoly r(p.size() + 1);
  for (std::size_t k = 0; k < p.size(); ++k) r[k + 1] = p[k];
  return r;
}

IntPoly ip_scale(const IntPoly& p, const mpz_class& s) {
  if (s == 0) return {};
  IntPoly r = p;
  for (mpz_class& c : r) c *= s;
  return r;
}

IntPoly ip_sub(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (k < a.size()) r[k] += a[k];
    if (k < b.size()) r[k] -= b[k];
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

IntPoly ip_add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (k < a.size()) r[k] += a[k];
    if (k < b.size()) r[k] += b[k];
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// split candidate j inside range: midpoint, then offsets on both sides;
// more candidates than a polynomial of degree deg has roots on any line
Rational nudge(const RealInterval& range, int j, int deg) {
  long den = 2L * (deg + 2);
  if (j == 0) return range.midpoint();
  long k = (j + 1) / 2;
  long off = (j % 2 == 1) ? k : -k;
  return range.lo + range.length() * Rational(den / 2 + off, den);
}

int nudge_tries(int deg) { return 2 * (deg + 1) + 1; }

}  // namespace

RectCounter::RectCounter(UniPoly p) : p_(std::move(p)), deg_(p_.degree()) {
  if (p_.is_zero()) throw std::invalid_argument("RectCounter: zero polynomial");
}

// Restrict p to the line and split into real and imaginary parts. For a
// horizontal line y = g/h the parameter t is the real coordinate and the
// value is scaled by h^deg: sum c_k (h t + i g)^k h^(deg-k). Vertical lines
// use t as the imaginary coordinate with (g + i h t) instead. The positive
// scale h^deg keeps signs and roots intact.
RectCounter::Edge RectCounter::build_edge(const Rational& line,
                                          bool horizontal) const {
  const mpz_class g = line.num();
  const mpz_class h = line.den();
  IntPoly pc = ip_from(p_);
  IntPoly u, w;
  mpz_class hp = 1;
  for (int k = deg_; k >= 0; --k) {
    IntPoly nu, nw;
    if (horizontal) {
      nu = ip_sub(ip_scale(ip_shift(u), h), ip_scale(w, g));
      nw = ip_add(ip_scale(ip_shift(w), h), ip_scale(u, g));
    } else {
      nu = ip_sub(ip_scale(u, g), ip_scale(ip_shift(w), h));
      nw = ip_add(ip_scale(w, g), ip_scale(ip_shift(u), h));
    }
    u = std::move(nu);
    w = std::move(nw);
    if ((std::size_t)k < pc.size() && pc[k] != 0) {
      IntPoly c = {pc[k] * hp};
      u = ip_add(u, c);
    }
    if (k > 0) hp *= h;
  }
  Edge e;
  e.u = ip_primitive(std::move(u));
  e.w = ip_primitive(std::move(w));
  if (!e.u.empty()) e.iso_u = std::make_unique<RealRootIsolator>(e.u);
  if (!e.w.empty()) e.iso_w = std::make_unique<RealRootIsolator>(e.w);
  if (!e.u.empty() && !e.w.empty()) {
    e.g = ip_from(poly_gcd(ip_to_unipoly(e.u), ip_to_unipoly(e.w)));
    if (e.g.size() > 1) e.iso_g = std::make_unique<RealRootIsolator>(e.g);
  }
  return e;
}

RectCounter::Edge& RectCounter::horiz_edge(const Rational& y) {
  auto it = horiz_.find(y);
  if (it == horiz_.end())
    it = horiz_.emplace(y, build_edge(y, /*horizontal=*/true)).first;
  return it->second;
}

RectCounter::Edge& RectCounter::vert_edge(const Rational& x) {
  auto it = vert_.find(x);
  if (it == vert_.end())
    it = vert_.emplace(x, build_edge(x, /*horizontal=*/false)).first;
  return it->second;
}

bool RectCounter::has_common_root(const Edge& e, const Rational& lo,
                                  const Rational& hi) {
  const RealRootIsolator* iso = nullptr;
  if (e.u.empty() && e.w.empty())
    throw std::logic_error("polynomial vanishes on a whole line");
  if (e.u.empty())
    iso = e.iso_w.get();
  else if (e.w.empty())
    iso = e.iso_u.get();
  else
    iso = e.iso_g.get();  // null when gcd is constant: no common root
  if (iso == nullptr) return false;
  if (iso->sign_at(lo) == 0) return true;
  if (lo == hi) return false;
  return iso->sign_at(hi) == 0 || iso->count_open(lo, hi) > 0;
}

std::optional<std::vector<int>> RectCounter::edge_quadrants(
    const Edge& e, const Rational& lo, const Rational& hi) const {
  if (has_common_root(e, lo, hi)) return std::nullopt;
  Rational mid = lo + (hi - lo) / 2;
  if (e.u.empty()) {
    // purely imaginary along the whole edge, constant sign since root-free
    return std::vector<int>{ip_sign_at(e.w, mid) > 0 ? 1 : 3};
  }
  if (e.w.empty()) {
    return std::vector<int>{ip_sign_at(e.u, mid) > 0 ? 0 : 2};
  }

  std::vector<RealInterval> cu = e.iso_u->isolate(lo, hi);
  std::vector<RealInterval> cw = e.iso_w->isolate(lo, hi);
  // keep total crossing cover well under the edge length so sample gaps exist
  Rational target = (hi - lo) / Rational(4 * (long)(cu.size() + cw.size() + 1));
  for (RealInterval& iv : cu) iv = e.iso_u->refine(iv, target);
  for (RealInterval& iv : cw) iv = e.iso_w->refine(iv, target);
  // point intervals mark exact corner roots and stay put; every other
  // crossing is pulled strictly inside so a sample separates it from the
  // corner, else a corner sign flip could merge with it into one step
  auto interiorize = [&](std::vector<RealInterval>& ivs,
                         const RealRootIsolator& iso) {
    for (RealInterval& iv : ivs) {
      if (iv.is_point()) continue;
      if (iv.lo == lo) iv = iso.shrink_above(iv, lo);
      if (iv.hi == hi) iv = iso.shrink_below(iv, hi);
    }
  };
  interiorize(cu, *e.iso_u);
  interiorize(cw, *e.iso_w);
  // separate sign-change intervals of u from those of w; the gcd check above
  // rules out shared roots, so refinement always succeeds
  bool again = true;
  while (again) {
    again = false;
    for (RealInterval& a : cu) {
      for (RealInterval& b : cw) {
        if (interval_dis(a, b).is_zero()) {
          if (a.is_point() && b.is_point())
            throw std::logic_error("shared edge crossing after gcd check");
          if (!a.is_point()) a = e.iso_u->refine(a, a.length() / 4);
          if (!b.is_point()) b = e.iso_w->refine(b, b.length() / 4);
          again = true;
        }
      }
    }
  }

  std::vector<RealInterval> all;
  all.reserve(cu.size() + cw.size());
  all.insert(all.end(), cu.begin(), cu.end());
  all.insert(all.end(), cw.begin(), cw.end());
  std::sort(all.begin(), all.end(),
            [](const RealInterval& x, const RealInterval& y) { return x.lo < y.lo; });

  std::vector<Rational> pts;
  Rational prev = lo;
  for (const RealInterval& iv : all) {
    if (prev < iv.lo) pts.push_back(prev + (iv.lo - prev) / 2);
    prev = iv.hi;
  }
  if (prev < hi) pts.push_back(prev + (hi - prev) / 2);
  if (all.empty()) pts.push_back(mid);
  if (pts.empty()) throw std::logic_error("edge samples exhausted");

  std::vector<int> qs;
  qs.reserve(pts.size());
  for (const Rational& x : pts) {
    int su = ip_sign_at(e.u, x);
    int sw = ip_sign_at(e.w, x);
    if (su == 0 || sw == 0) throw std::logic_error("sample hit a crossing");
    qs.push_back(su > 0 ? (sw > 0 ? 0 : 3) : (sw > 0 ? 1 : 2));
  }
  return qs;
}

std::optional<int> RectCounter::count(const ComplexInterval& rect) {
  const Rational& a = rect.re.lo;
  const Rational& b = rect.re.hi;
  const Rational& c = rect.im.lo;
  const Rational& d = rect.im.hi;
  if (rect.re.is_point() && rect.im.is_point()) {
    ComplexPoint v = p_.eval(ComplexPoint{a, c});
    if (v.re.is_zero() && v.im.is_zero()) return std::nullopt;
    return 0;
  }
  if (rect.re.is_point())
    return has_common_root(vert_edge(a), c, d) ? std::nullopt
                                               : std::optional<int>(0);
  if (rect.im.is_point())
    return has_common_root(horiz_edge(c), a, b) ? std::nullopt
                                                : std::optional<int>(0);

  auto qb = edge_quadrants(horiz_edge(c), a, b);
  if (!qb) return std::nullopt;
  auto qr = edge_quadrants(vert_edge(b), c, d);
  if (!qr) return std::nullopt;
  auto qt = edge_quadrants(horiz_edge(d), a, b);
  if (!qt) return std::nullopt;
  auto ql = edge_quadrants(vert_edge(a), c, d);
  if (!ql) return std::nullopt;
  std::reverse(qt->begin(), qt->end());
  std::reverse(ql->begin(), ql->end());

  std::vector<int> seq;
  seq.reserve(qb->size() + qr->size() + qt->size() + ql->size());
  seq.insert(seq.end(), qb->begin(), qb->end());
  seq.insert(seq.end(), qr->begin(), qr->end());
  seq.insert(seq.end(), qt->begin(), qt->end());
  seq.insert(seq.end(), ql->begin(), ql->end());

  int total = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    int q1 = seq[i];
    int q2 = seq[(i + 1) % seq.size()];
    int diff = ((q2 - q1) % 4 + 4) % 4;
    if (diff == 2) throw std::logic_error("winding step skipped a quadrant");
    total += (diff == 3) ? -1 : diff;
  }
  if (total % 4 != 0) throw std::logic_error("winding not a multiple of 4");
  return total / 4;
}

namespace {

UniPoly checked_squarefree(UniPoly p) {
  if (p.is_zero()) throw std::invalid_argument("Isolator: zero polynomial");
  if (p.degree() >= 1) {
    UniPoly g = poly_gcd(p, p.derivative());
    if (g.degree() >= 1)
      throw std::invalid_argument("Isolator: polynomial has repeated roots");
  }
  return p;
}

}  // namespace

Isolator::Isolator(UniPoly squarefree)
    : counter_(checked_squarefree(std::move(squarefree))),
      deg_(counter_.poly().degree()),
      bound_(root_bound(counter_.poly())) {
  if (deg_ >= 1)
    real_ = std::make_unique<RealRootIsolator>(ip_from(counter_.poly()));
}

std::optional<int> Isolator::cell_count(const ComplexInterval& cell) {
  if (cell.im.lo.sign() > 0) return counter_.count(cell);
  if (cell.im.lo.sign() < 0) throw std::logic_error("cell below the axis");
  // cell sits on the axis: roots of a real polynomial mirror across it, so
  // the upper-half count is (winding of the reflected closure - real) / 2
  ComplexInterval full(cell.re, RealInterval(-cell.im.hi, cell.im.hi));
  auto wn = counter_.count(full);
  if (!wn) return std::nullopt;
  int r = real_->count_open(cell.re.lo, cell.re.hi);
  int diff = *wn - r;
  if (diff < 0 || diff % 2 != 0)
    throw std::logic_error("reflected count out of step with real count");
  return diff / 2;
}

bool Isolator::split_cell(const Cell& cell, std::vector<Cell>& out) {
  for (int j = 0; j < nudge_tries(deg_); ++j) {
    Rational mx = nudge(cell.box.re, j, deg_);
    Rational my = nudge(cell.box.im, j, deg_);
    ComplexInterval parts[4] = {
        {{cell.box.re.lo, mx}, {cell.box.im.lo, my}},
        {{mx, cell.box.re.hi}, {cell.box.im.lo, my}},
        {{cell.box.re.lo, mx}, {my, cell.box.im.hi}},
        {{mx, cell.box.re.hi}, {my, cell.box.im.hi}},
    };
    std::vector<Cell> kids;
    int sum = 0;
    bool ok = true;
    for (const ComplexInterval& part : parts) {
      auto cnt = cell_count(part);
      if (!cnt) {
        ok = false;
        break;
      }
      sum += *cnt;
      if (*cnt > 0) kids.push_back({part, *cnt});
    }
    if (!ok) continue;
    if (sum != cell.cnt) throw std::logic_error("split lost roots");
    out = std::move(kids);
    return true;
  }
  return false;
}

ComplexInterval Isolator::step_box(const ComplexInterval& box) {
  std::vector<Cell> kids;
  if (!split_cell({box, 1}, kids))
    throw std::logic_error("refinement split exhausted its candidates");
  if (kids.size() != 1 || kids[0].cnt != 1)
    throw std::logic_error("box does not isolate exactly one root");
  return kids[0].box;
}

ComplexInterval Isolator::refine_upper(ComplexInterval box, const Rational& eps) {
  while (box.width() > eps) box = step_box(box);
  return box;
}

IsolationSet Isolator::isolate(const Rational& eps) {
  ComplexInterval square(RealInterval(-bound_, bound_),
                         RealInterval(-bound_, bound_));
  return isolate_impl(eps, {square}, Mode::kGlobal);
}

IsolationSet Isolator::isolate(const Rational& eps,
                               const std::vector<ComplexInterval>& regions) {
  return isolate_impl(eps, regions, Mode::kFamily);
}

IsolationSet Isolator::isolate(const Rational& eps,
                               const ComplexInterval& region) {
  if (region.im.lo != -region.im.hi)
    throw std::invalid_argument("region must be symmetric about the real axis");
  return isolate_impl(eps, {region}, Mode::kSingle);
}

IsolationSet Isolator::isolate_impl(const Rational& eps,
                                    const std::vector<ComplexInterval>& regions,
                                    Mode mode) {
  if (eps.sign() <= 0) throw std::invalid_argument("eps must be positive");
  IsolationSet out;
  if (deg_ <= 0) return out;
  for (std::size_t i = 0; i < regions.size(); ++i)
    for (std::size_t j = i + 1; j < regions.size(); ++j)
      if (box_dis(regions[i], regions[j]).is_zero())
        throw std::invalid_argument("regions must have positive gaps");

  auto fail = [&]() -> void {
    switch (mode) {
      case Mode::kGlobal:
        throw std::logic_error("global isolation lost a root");
      case Mode::kFamily:
        throw RegionCountMismatch();
      case Mode::kSingle:
        throw std::invalid_argument("a root lies on the region boundary");
    }
  };

  std::vector<RealInterval> segs;
  for (const ComplexInterval& r : regions)
    if (r.im.lo.sign() < 0 && r.im.hi.sign() > 0) segs.push_back(r.re);
  std::sort(segs.begin(), segs.end(),
            [](const RealInterval& x, const RealInterval& y) { return x.lo < y.lo; });
  std::vector<RealInterval> reals;
  for (const RealInterval& seg : segs) {
    std::vector<RealInterval> ivs = real_->isolate(seg.lo, seg.hi);
    reals.insert(reals.end(), ivs.begin(), ivs.end());
  }
  for (RealInterval& iv : reals) iv = real_->refine(iv, eps);

  std::vector<Cell> work, accepted;
  for (const ComplexInterval& r : regions) {
    if (r.im.hi.sign() <= 0) continue;
    ComplexInterval cellbox(r.re, RealInterval(max(r.im.lo, Rational(0)), r.im.hi));
    auto cnt = cell_count(cellbox);
    if (!cnt) {
      fail();
      return out;
    }
    if (*cnt > 0) work.push_back({cellbox, *cnt});
  }
  while (!work.empty()) {
    Cell cell = work.back();
    work.pop_back();
    if (cell.cnt == 1 && cell.box.im.lo.sign() > 0 && cell.box.width() <= eps) {
      accepted.push_back(cell);
      continue;
    }
    std::vector<Cell> kids;
    if (!split_cell(cell, kids))
      throw std::logic_error("cell split exhausted its candidates");
    for (Cell& k : kids) work.push_back(std::move(k));
  }

  // sibling cells still share edges; push them apart
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t i = 0; i < accepted.size(); ++i) {
      for (std::size_t j = i + 1; j < accepted.size(); ++j) {
        if (box_dis(accepted[i].box, accepted[j].box).is_zero()) {
          accepted[i].box = step_box(accepted[i].box);
          accepted[j].box = step_box(accepted[j].box);
          again = true;
        }
      }
    }
  }

  for (const RealInterval& iv : reals) {
    out.conj_partner.push_back(out.boxes.size());
    out.boxes.emplace_back(iv, RealInterval(Rational(0), Rational(0)));
  }
  for (const Cell& cell : accepted) {
    std::size_t k = out.boxes.size();
    out.boxes.push_back(cell.box);
    out.conj_partner.push_back(k + 1);
    out.boxes.push_back(conj(cell.box));
    out.conj_partner.push_back(k);
  }

  if (mode != Mode::kSingle &&
      (int)reals.size() + 2 * (int)accepted.size() != deg_) {
    fail();
    return out;
  }
  canonicalize(out);
  return out;
}

void Isolator::refine_to(IsolationSet& set, const Rational& eps) {
  for (std::size_t k = 0; k < set.boxes.size(); ++k) {
    ComplexInterval& box = set.boxes[k];
    if (box.is_real()) {
      box = ComplexInterval(real_->refine(box.re, eps), box.im);
    } else if (box.im.lo.sign() > 0) {
      box = refine_upper(box, eps);
    } else if (box.im.hi.sign() >= 0) {
      throw std::invalid_argument("box straddles the real axis");
    }
  }
  for (std::size_t k = 0; k < set.boxes.size(); ++k)
    if (set.boxes[k].im.hi.sign() < 0)
      set.boxes[k] = conj(set.boxes[set.conj_partner[k]]);
}

void Isolator::refine_one(IsolationSet& set, std::size_t k, const Rational& eps) {
  ComplexInterval& box = set.boxes[k];
  if (box.is_real()) {
    box = ComplexInterval(real_->refine(box.re, eps), box.im);
  } else if (box.im.lo.sign() > 0) {
    box = refine_upper(box, eps);
    set.boxes[set.conj_partner[k]] = conj(box);
  } else if (box.im.hi.sign() < 0) {
    std::size_t p = set.conj_partner[k];
    set.boxes[p] = refine_upper(set.boxes[p], eps);
    set.boxes[k] = conj(set.boxes[p]);
  } else {
    throw std::invalid_argument("box straddles the real axis");
  }
}

void canonicalize(IsolationSet& set) {
  std::size_t n = set.boxes.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    const ComplexInterval& a = set.boxes[x];
    const ComplexInterval& b = set.boxes[y];
    if (a.re.lo != b.re.lo) return a.re.lo < b.re.lo;
    if (a.im.lo != b.im.lo) return a.im.lo < b.im.lo;
    if (a.re.hi != b.re.hi) return a.re.hi < b.re.hi;
    return a.im.hi < b.im.hi;
  });
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[idx[i]] = i;
  IsolationSet ns;
  ns.boxes.reserve(n);
  ns.conj_partner.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    ns.boxes.push_back(set.boxes[idx[i]]);
    ns.conj_partner[i] = pos[set.conj_partner[idx[i]]];
  }
  set = std::move(ns);
}

IsolationSet isolate_roots(const UniPoly& p, const Rational& eps) {
  Isolator iso(p);
  return iso.isolate(eps);
}

IsolationSet isolate_roots(const UniPoly& p, const ComplexInterval& region,
                           const Rational& eps) {
  Isolator iso(p);
  return iso.isolate(eps, region);
}

std::optional<int> count_roots_in_rectangle(const UniPoly& p,
                                            const ComplexInterval& rect) {
  RectCounter rc(p);
  return rc.count(rect);
}

ComplexInterval refine_box(const UniPoly& p, const ComplexInterval& box,
                           const Rational& eps) {
  if (p.is_zero()) throw std::invalid_argument("refine_box: zero polynomial");
  if (box.is_real()) {
    RealRootIsolator iso(ip_from(p));
    return ComplexInterval(iso.refine(box.re, eps), box.im);
  }
  RectCounter rc(p);
  auto c0 = rc.count(box);
  if (!c0 || *c0 == 0)
    throw std::invalid_argument("refine_box: box does not isolate a root");
  int mult = *c0;
  int deg = p.degree();
  ComplexInterval cur = box;
  while (cur.width() > eps) {
    bool stepped = false;
    for (int j = 0; j < nudge_tries(deg) && !stepped; ++j) {
      Rational mx = nudge(cur.re, j, deg);
      Rational my = nudge(cur.im, j, deg);
      ComplexInterval parts[4] = {
          {{cur.re.lo, mx}, {cur.im.lo, my}},
          {{mx, cur.re.hi}, {cur.im.lo, my}},
          {{cur.re.lo, mx}, {my, cur.im.hi}},
          {{mx, cur.re.hi}, {my, cur.im.hi}},
      };
      ComplexInterval next;
      bool ok = true;
      int hits = 0;
      for (const ComplexInterval& part : parts) {
        auto cnt = rc.count(part);
        if (!cnt) {
          ok = false;
          break;
        }
        if (*cnt == mult) {
          next = part;
          ++hits;
        } else if (*cnt != 0) {
          throw std::invalid_argument(
              "refine_box: box holds more than one distinct root");
        }
      }
      if (ok && hits == 1) {
        cur = next;
        stepped = true;
      }
    }
    if (!stepped)
      throw std::logic_error("refine_box: split exhausted its candidates");
  }
  return cur;
}

std::optional<Rational> min_box_separation(const IsolationSet& set) {
  if (set.boxes.size() < 2) return std::nullopt;
  std::optional<Rational> best;
  for (std::size_t i = 0; i < set.boxes.size(); ++i)
    for (std::size_t j = i + 1; j < set.boxes.size(); ++j) {
      Rational d = box_dis(set.boxes[i], set.boxes[j]);
      if (!best || d < *best) best = d;
    }
  return best;
}

}  // namespace lur
