#include "lur/lur.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "lur/errors.hpp"
#include "lur/groebner.hpp"
#include "lur/quotient.hpp"
#include "lur/sturm.hpp"
#include "lur/uniroot.hpp"

namespace lur {

namespace {

// largest power of two (any integer exponent) not exceeding x; x > 0
Rational pow2_floor(const Rational& x) {
  long k = (long)mpz_sizeinbase(x.num().get_mpz_t(), 2) -
           (long)mpz_sizeinbase(x.den().get_mpz_t(), 2);
  Rational p = Rational::pow2(k + 1);
  while (p > x) p /= 2;
  while (p * 2 <= x) p *= 2;
  return p;
}

Rational max_box_width(const IsolationSet& set) {
  Rational w(0);
  for (const ComplexInterval& b : set.boxes) w = max(w, b.width());
  return w;
}

Rational max_endpoint_norm(const IsolationSet& set) {
  Rational m(0);
  for (const ComplexInterval& b : set.boxes) {
    m = max(m, max(abs(b.re.lo), abs(b.re.hi)));
    m = max(m, max(abs(b.im.lo), abs(b.im.hi)));
  }
  return m;
}

// Half the minimum pairwise box gap. The halving makes the statistic a
// radius: disks of this size around distinct values cannot meet, which is
// the form every ladder inequality consumes. Box gaps under-approximate
// value gaps, so the boxes are shrunk until the two agree to about three
// decimal digits and the measurement is reproducible and near-sharp.
std::optional<Rational> measure_separation(Isolator& iso, IsolationSet& set) {
  std::optional<Rational> S = min_box_separation(set);
  if (!S) return std::nullopt;
  for (;;) {
    if (Rational(4) * max_box_width(set) <= *S / Rational(1024)) return *S / 2;
    iso.refine_to(set, *S / Rational(4096));
    S = min_box_separation(set);
  }
}

struct Level {
  UniPoly elim;
  std::unique_ptr<Isolator> iso;
  IsolationSet set;
};

}  // namespace

LurResult lur_solve(const std::vector<MultiPoly>& system, std::size_t nvars,
                    const SolveOptions& opt) {
  if (nvars == 0) throw std::invalid_argument("lur_solve: no variables");
  for (const MultiPoly& p : system)
    if (p.nvars() != nvars)
      throw std::invalid_argument("lur_solve: variable count mismatch");
  if (opt.eps.sign() <= 0)
    throw std::invalid_argument("lur_solve: eps must be positive");
  const std::size_t n = nvars;
  if (opt.scales && opt.scales->size() != n - 1)
    throw InvalidScaleError("expected one scale per variable after the first");

  LurResult res;
  res.nvars = n;
  res.eps = opt.eps;

  GroebnerBasis gb = buchberger(system);
  MonomialBasis basis;
  try {
    basis = monomial_basis(gb);
  } catch (const TrivialIdealError&) {
    return res;  // no solutions
  }
  res.quotient_dim = basis.size();

  std::vector<Level> lv(n);
  std::vector<Rational> prefix{Rational(1)};  // prefix[k] = s_1 * ... * s_k
  std::vector<Rational> d;
  std::vector<std::optional<Rational>> S(n);

  LinearForm form;
  form.coeffs.assign(n, Rational(0));
  form.coeffs[0] = Rational(1);

  lv[0].elim = eliminant(form.to_poly(), gb, basis);
  lv[0].iso = std::make_unique<Isolator>(squarefree_part(lv[0].elim));
  lv[0].set = lv[0].iso->isolate(Rational(1));
  S[0] = measure_separation(*lv[0].iso, lv[0].set);

  if (opt.d1) {
    if (opt.d1->sign() <= 0)
      throw InvalidScaleError("d_1 override must be positive");
    if (S[0] && *opt.d1 > *S[0])
      throw InvalidScaleError("d_1 override exceeds the level-1 separation");
    d.push_back(*opt.d1);
  } else {
    d.push_back(S[0] ? *S[0] : Rational(1));
  }

  for (std::size_t i = 0; i + 1 < n; ++i) {
    // admissible scales need a radius bound on the next coordinate's values
    UniPoly g = eliminant(MultiPoly::var(n, i + 1), gb, basis);
    Isolator giso(squarefree_part(g));
    IsolationSet gset = giso.isolate(giso.bound() / 256);
    // the coefficient bound seeding the isolation can be far above the true
    // norms; one refinement pass against the measured norm tightens the
    // boxes, and the 257/256 bump keeps the radius strict when an extreme
    // root is exactly rational
    Rational norm = max_endpoint_norm(gset);
    if (norm.sign() > 0) {
      giso.refine_to(gset, norm / 256);
      norm = max_endpoint_norm(gset);
    }
    // norm 0 means the coordinate vanishes at every root and any positive
    // radius is admissible
    Rational r_tight = norm.sign() > 0
                           ? Rational(2) * norm * Rational(257, 256)
                           : Rational(1, 256);
    Rational r_coeff = Rational(2) * root_bound(g);

    Rational s;
    Rational r_used;
    if (opt.scales) {
      s = (*opt.scales)[i];
      r_used = r_tight;
      if (s.sign() <= 0) throw InvalidScaleError("scales must be positive");
      if (s * r_tight > d[i])
        throw InvalidScaleError(
            "scale override s_" + std::to_string(i + 1) + " = " + s.str() +
            " exceeds its admissible bound " + (d[i] / r_tight).str() +
            " = d_" + std::to_string(i + 1) + " / r_" + std::to_string(i + 2));
    } else {
      r_used = opt.tight_bounds ? r_tight : r_coeff;
      // scales never exceed 1: shrinking the tail keeps value gaps of
      // earlier coordinates dominant
      s = min(pow2_floor(d[i] / r_used), Rational(1));
    }
    res.scales.push_back(s);
    res.radii.push_back(r_used);
    prefix.push_back(prefix[i] * s);

    Rational rho = prefix[i] * d[i];
    res.thresholds.push_back(rho);

    form.coeffs[i + 1] = prefix[i + 1];
    lv[i + 1].elim = eliminant(form.to_poly(), gb, basis);
    lv[i + 1].iso = std::make_unique<Isolator>(squarefree_part(lv[i + 1].elim));

    // all next-level values lie within rho/2 of a current-level value, so
    // isolation can be clipped to small neighborhoods of the current boxes
    lv[i].iso->refine_to(lv[i].set, rho / 8);
    std::vector<ComplexInterval> regions;
    regions.reserve(lv[i].set.size());
    for (const ComplexInterval& b : lv[i].set.boxes)
      regions.push_back(pad(b, rho / 2));
    try {
      lv[i + 1].set = lv[i + 1].iso->isolate(rho / 4, regions);
    } catch (const RegionCountMismatch&) {
      lv[i + 1].set = lv[i + 1].iso->isolate(rho / 4);
    }
    S[i + 1] = measure_separation(*lv[i + 1].iso, lv[i + 1].set);

    // S is a radius (half the value gap), so the gap-based branch of the
    // recurrence divides by the prefix alone
    Rational next_same = d[i] / (2 * s);
    if (S[i + 1]) {
      Rational next_sep = *S[i + 1] / prefix[i + 1];
      if (next_sep == next_same) {
        // break the tie strictly below d_i / (2 s_i)
        d.push_back(next_same * Rational(255, 256));
      } else {
        d.push_back(min(next_sep, next_same));
      }
    } else {
      d.push_back(next_same);
    }
  }

  res.eliminants.reserve(n);
  for (std::size_t i = 0; i < n; ++i) res.eliminants.push_back(lv[i].elim);
  res.prefixes = prefix;
  res.d = d;
  res.separations = S;

  // output widths per level, chosen so recovered coordinate boxes come out
  // below eps and matching stays unique
  const Rational& eps = opt.eps;
  std::vector<Rational> sched(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational e;
    if (i == 0) {
      e = min(eps, d[0] / 4);
      if (n > 1) e = min(e, prefix[1] * eps / 2);
    } else {
      const Rational& pre_next = (i + 1 < n) ? prefix[i + 1] : prefix[n - 1];
      e = min(prefix[i] * eps / 2, pre_next * eps / 2);
      e = min(e, prefix[i] * d[i] / 4);
      e = min(e, prefix[i - 1] * d[i - 1] / 4);
    }
    if (i + 1 < n && S[i + 1]) e = min(e, *S[i + 1]);
    sched[i] = e;
  }
  res.eps_schedule = sched;

  for (std::size_t i = 0; i < n; ++i) lv[i].iso->refine_to(lv[i].set, sched[i]);

  // match every box to its unique predecessor-level box
  std::vector<std::vector<std::size_t>> parent(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    parent[i + 1].assign(lv[i + 1].set.size(), 0);
    for (std::size_t k = 0; k < lv[i + 1].set.size(); ++k) {
      std::size_t hits = 0;
      for (std::size_t j = 0; j < lv[i].set.size(); ++j) {
        if (box_dis(lv[i + 1].set.boxes[k], lv[i].set.boxes[j]) <
            res.thresholds[i] / 2) {
          parent[i + 1][k] = j;
          ++hits;
        }
      }
      if (hits != 1)
        throw MatchViolationError("level " + std::to_string(i + 2) + " box has " +
                                  std::to_string(hits) + " candidate parents");
    }
  }

  // walk chains from the deepest level and turn value differences back into
  // coordinates
  for (std::size_t k = 0; k < lv[n - 1].set.size(); ++k) {
    std::vector<std::size_t> chain(n);
    chain[n - 1] = k;
    for (std::size_t i = n - 1; i > 0; --i)
      chain[i - 1] = parent[i][chain[i]];
    RootBox rb;
    rb.coords.reserve(n);
    rb.coords.push_back(lv[0].set.boxes[chain[0]]);
    for (std::size_t i = 1; i < n; ++i)
      rb.coords.push_back(box_sub_scale(lv[i].set.boxes[chain[i]],
                                        lv[i - 1].set.boxes[chain[i - 1]],
                                        prefix[i]));
    res.roots.push_back(std::move(rb));
  }

  if (opt.with_multiplicities) {
    // roots of the characteristic polynomial grouped by multiplicity; the
    // value box of a root meets exactly one group
    UniPoly chi = char_poly(mult_matrix(form.to_poly(), gb, basis));
    auto factors = squarefree_decomposition(chi);
    std::vector<RectCounter> counters;
    std::vector<RealRootIsolator> reals;
    counters.reserve(factors.size());
    reals.reserve(factors.size());
    for (const auto& fm : factors) {
      counters.emplace_back(fm.first);
      reals.emplace_back(ip_from(fm.first));
    }
    int total = 0;
    for (std::size_t k = 0; k < res.roots.size(); ++k) {
      const ComplexInterval& vbox = lv[n - 1].set.boxes[k];
      int m = 0;
      for (std::size_t j = 0; j < factors.size(); ++j) {
        int c;
        if (vbox.is_real()) {
          // the root sits on the axis, winding cannot see it; count on the
          // real segment instead
          c = vbox.re.is_point()
                  ? (reals[j].sign_at(vbox.re.lo) == 0 ? 1 : 0)
                  : reals[j].count_open(vbox.re.lo, vbox.re.hi);
        } else {
          auto cnt = counters[j].count(vbox);
          if (!cnt) throw std::logic_error("multiplicity count hit a boundary");
          c = *cnt;
        }
        m += factors[j].second * c;
      }
      if (m <= 0) throw std::logic_error("root with nonpositive multiplicity");
      res.roots[k].multiplicity = m;
      total += m;
    }
    if (total != (int)res.quotient_dim)
      throw std::logic_error("multiplicities do not sum to the dimension");
  }

  if (opt.real_only) {
    std::vector<RootBox> keep;
    for (RootBox& rb : res.roots) {
      bool real = std::all_of(rb.coords.begin(), rb.coords.end(),
                              [](const ComplexInterval& b) { return b.is_real(); });
      if (real) keep.push_back(std::move(rb));
    }
    res.roots = std::move(keep);
  }

  std::sort(res.roots.begin(), res.roots.end(),
            [](const RootBox& x, const RootBox& y) {
              for (std::size_t i = 0; i < x.coords.size(); ++i) {
                const ComplexInterval& a = x.coords[i];
                const ComplexInterval& b = y.coords[i];
                if (a.re.lo != b.re.lo) return a.re.lo < b.re.lo;
                if (a.im.lo != b.im.lo) return a.im.lo < b.im.lo;
                if (a.re.hi != b.re.hi) return a.re.hi < b.re.hi;
                if (a.im.hi != b.im.hi) return a.im.hi < b.im.hi;
              }
              return false;
            });

  res.stats.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    LevelStats st;
    st.degree = lv[i].elim.degree();
    st.boxes = lv[i].set.size();
    st.coeff_bits = lv[i].elim.coeff_bit_length();
    res.stats.push_back(st);
  }
  return res;
}

}  // namespace lur
