#include "lur/groebner.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace lur {

namespace {

// Full division remainder against a fixed generator list.
MultiPoly reduce_full(const MultiPoly& f, const std::vector<MultiPoly>& gens) {
  MultiPoly rem(f.nvars());
  MultiPoly h = f;
  while (!h.is_zero()) {
    const Monomial& lm = h.leading_monomial();
    const MultiPoly* hit = nullptr;
    for (const auto& g : gens) {
      if (!g.is_zero() && g.leading_monomial().divides(lm)) { hit = &g; break; }
    }
    if (hit) {
      Rational c = -(h.leading_coeff() / hit->leading_coeff());
      h.add_scaled(*hit, c, lm.div(hit->leading_monomial()));
    } else {
      rem.set_coeff(lm, h.leading_coeff());
      h.set_coeff(lm, Rational(0));
    }
  }
  return rem;
}

MultiPoly spoly(const MultiPoly& a, const MultiPoly& b) {
  Monomial l = a.leading_monomial().lcm(b.leading_monomial());
  MultiPoly s(a.nvars());
  s.add_scaled(a, Rational(1) / a.leading_coeff(),
               l.div(a.leading_monomial()));
  s.add_scaled(b, -(Rational(1) / b.leading_coeff()),
               l.div(b.leading_monomial()));
  return s;
}

using Pair = std::pair<std::size_t, std::size_t>;

Pair ordered(std::size_t i, std::size_t j) {
  return i < j ? Pair{i, j} : Pair{j, i};
}

}  // namespace

GroebnerBasis buchberger(const std::vector<MultiPoly>& input) {
  GroebnerBasis out;
  std::vector<MultiPoly> g;
  for (const auto& f : input) {
    if (f.is_zero()) continue;
    out.nvars = f.nvars();
    g.push_back(primitive_normalize(f));
  }
  if (g.empty()) return out;

  std::set<Pair> pending;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) pending.insert({i, j});

  while (!pending.empty()) {
    // normal selection: smallest lcm in the monomial order
    auto best = pending.begin();
    Monomial best_lcm = g[best->first].leading_monomial().lcm(
        g[best->second].leading_monomial());
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l =
          g[it->first].leading_monomial().lcm(g[it->second].leading_monomial());
      if (grevlex_cmp(l, best_lcm) < 0) { best = it; best_lcm = l; }
    }
    auto [i, j] = *best;
    pending.erase(best);

    const Monomial& li = g[i].leading_monomial();
    const Monomial& lj = g[j].leading_monomial();
    // coprime leading monomials: s-poly reduces to zero
    if (best_lcm == li * lj) continue;
    // chain criterion: a third generator splits the pair
    bool skip = false;
    for (std::size_t k = 0; k < g.size() && !skip; ++k) {
      if (k == i || k == j) continue;
      if (g[k].leading_monomial().divides(best_lcm) &&
          !pending.count(ordered(i, k)) && !pending.count(ordered(j, k)))
        skip = true;
    }
    if (skip) continue;

    MultiPoly r = reduce_full(spoly(g[i], g[j]), g);
    if (r.is_zero()) continue;
    r = primitive_normalize(r);
    for (std::size_t k = 0; k < g.size(); ++k) pending.insert({k, g.size()});
    g.push_back(std::move(r));
  }

  // minimalize: drop generators whose leading monomial another one divides
  std::vector<bool> keep(g.size(), true);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!keep[i]) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j || !keep[j]) continue;
      const Monomial& li = g[i].leading_monomial();
      const Monomial& lj = g[j].leading_monomial();
      if (lj.divides(li) && !(li == lj && j > i)) { keep[i] = false; break; }
    }
  }
  std::vector<MultiPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (keep[i]) minimal.push_back(std::move(g[i]));

  // inter-reduce tails until stable
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<MultiPoly> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      MultiPoly r = primitive_normalize(reduce_full(minimal[i], others));
      if (!(r == minimal[i])) { minimal[i] = std::move(r); changed = true; }
    }
  }

  std::sort(minimal.begin(), minimal.end(),
            [](const MultiPoly& a, const MultiPoly& b) {
              return grevlex_cmp(a.leading_monomial(), b.leading_monomial()) <
                     0;
            });
  out.generators = std::move(minimal);
  return out;
}

MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& gb) {
  return reduce_full(f, gb.generators);
}

MonomialBasis monomial_basis(const GroebnerBasis& gb) {
  if (gb.is_trivial()) throw TrivialIdealError();
  std::size_t n = gb.nvars;
  // bound[k]: least e with x_k^e a leading monomial; required for finiteness
  std::vector<std::uint32_t> bound(n, 0);
  std::vector<bool> seen(n, false);
  for (const auto& g : gb.generators) {
    std::size_t which = 0;
    const Monomial& lm = g.leading_monomial();
    if (lm.is_pure_power(&which)) {
      std::uint32_t e = lm[which];
      if (!seen[which] || e < bound[which]) { seen[which] = true; bound[which] = e; }
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    if (!seen[k])
      throw NotZeroDimensionalError(
          "no pure power of variable " + std::to_string(k + 1) +
          " among leading monomials; ideal is not zero-dimensional");

  std::vector<Monomial> lms;
  for (const auto& g : gb.generators) lms.push_back(g.leading_monomial());

  MonomialBasis basis;
  std::vector<std::uint32_t> e(n, 0);
  while (true) {
    Monomial m{std::vector<std::uint32_t>(e)};
    bool standard = true;
    for (const auto& lm : lms)
      if (lm.divides(m)) { standard = false; break; }
    if (standard) basis.monomials.push_back(std::move(m));
    // odometer over the exponent grid below the pure-power bounds
    std::size_t k = 0;
    while (k < n) {
      if (++e[k] < bound[k]) break;
      e[k] = 0;
      ++k;
    }
    if (k == n) break;
  }
  std::sort(basis.monomials.begin(), basis.monomials.end(), GrevlexLess{});
  return basis;
}

}  // namespace lur
