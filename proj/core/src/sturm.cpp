#include "lur/sturm.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace lur {

namespace {

void ip_normalize(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

bool ip_is_zero(const IntPoly& p) { return p.empty(); }

IntPoly ip_from(const UniPoly& p) {
  IntPoly out = p.integer_scaled();
  ip_normalize(out);
  return out;
}

IntPoly ip_derivative(const IntPoly& p) {
  if (p.size() <= 1) return {};
  IntPoly out(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) out[k - 1] = p[k] * (long)k;
  return out;
}

IntPoly ip_primitive(IntPoly p) {
  ip_normalize(p);
  if (p.empty()) return p;
  mpz_class g = 0;
  for (const mpz_class& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1) {
    for (mpz_class& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return p;
}

int ip_sign_at(const IntPoly& p, const Rational& x) {
  if (p.empty()) return 0;
  const mpz_class& a = x.num();
  const mpz_class& b = x.den();
  // sum c_k a^k b^(d-k), same sign as p(a/b) since b > 0
  mpz_class acc = p.back();
  mpz_class bp = 1;
  for (std::size_t k = p.size() - 1; k-- > 0;) {
    acc *= a;
    bp *= b;
    acc += p[k] * bp;
  }
  return sgn(acc);
}

namespace {

// One pseudo-division pass: returns R with R ~ lc(B)^iters * (A mod B).
// mult_sign reports the sign of lc(B)^iters so the caller can recover the
// sign of the true remainder.
IntPoly prem_signed(const IntPoly& A, const IntPoly& B, int& mult_sign) {
  IntPoly R = A;
  const mpz_class& lb = B.back();
  int iters = 0;
  while (!R.empty() && R.size() >= B.size()) {
    mpz_class lr = R.back();
    std::size_t shift = R.size() - B.size();
    for (mpz_class& c : R) c *= lb;
    for (std::size_t j = 0; j < B.size(); ++j) R[shift + j] -= lr * B[j];
    ip_normalize(R);
    ++iters;
  }
  mult_sign = (sgn(lb) < 0 && (iters & 1)) ? -1 : 1;
  return R;
}

}  // namespace

SturmChain::SturmChain(IntPoly p) {
  p = ip_primitive(std::move(p));
  if (p.empty()) throw std::invalid_argument("SturmChain: zero polynomial");
  seq_.push_back(std::move(p));
  IntPoly d = ip_primitive(ip_derivative(seq_.front()));
  if (d.empty()) return;
  seq_.push_back(std::move(d));
  for (;;) {
    const IntPoly& a = seq_[seq_.size() - 2];
    const IntPoly& b = seq_.back();
    int ms = 0;
    IntPoly r = prem_signed(a, b, ms);
    if (r.empty()) break;
    // next member is -rem(a, b) up to positive scale
    if (ms > 0)
      for (mpz_class& c : r) c = -c;
    seq_.push_back(ip_primitive(std::move(r)));
  }
}

int SturmChain::variations_at(const Rational& x) const {
  int var = 0;
  int prev = 0;
  for (const IntPoly& q : seq_) {
    int s = ip_sign_at(q, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

int SturmChain::count(const Rational& a, const Rational& b) const {
  return variations_at(a) - variations_at(b);
}

UniPoly ip_to_unipoly(const IntPoly& p) {
  std::vector<Rational> cs;
  cs.reserve(p.size());
  for (const mpz_class& c : p) cs.emplace_back(c, mpz_class(1));
  return UniPoly::from_coeffs(std::move(cs));
}

namespace {

struct Ctx {
  const IntPoly& p;
  const SturmChain& chain;
  int deg;
};

Rational ctx_pick_nonroot(const Ctx& c, const Rational& a, const Rational& b) {
  Rational w = b - a;
  long den = 2L * (c.deg + 2);
  // midpoint first, then symmetric offsets; at most deg roots can be hit
  if (ip_sign_at(c.p, a + w / Rational(2)) != 0) return a + w / Rational(2);
  for (long j = 1; j <= c.deg + 1; ++j) {
    Rational x = a + w * Rational(den / 2 + j, den);
    if (ip_sign_at(c.p, x) != 0) return x;
    x = a + w * Rational(den / 2 - j, den);
    if (ip_sign_at(c.p, x) != 0) return x;
  }
  throw std::logic_error("pick_nonroot: no candidate left");
}

// interval holds one distinct root strictly inside; keep the containing half
RealInterval ctx_bisect(const Ctx& c, const RealInterval& iv) {
  Rational m = ctx_pick_nonroot(c, iv.lo, iv.hi);
  if (c.chain.count(iv.lo, m) == 1) return RealInterval(iv.lo, m);
  return RealInterval(m, iv.hi);
}

RealInterval ctx_shrink_below(const Ctx& c, RealInterval iv, const Rational& limit) {
  while (!(iv.hi < limit)) {
    if (iv.is_point()) throw std::logic_error("shrink_below: root at limit");
    iv = ctx_bisect(c, iv);
  }
  return iv;
}

RealInterval ctx_shrink_above(const Ctx& c, RealInterval iv, const Rational& limit) {
  while (!(iv.lo > limit)) {
    if (iv.is_point()) throw std::logic_error("shrink_above: root at limit");
    iv = ctx_bisect(c, iv);
  }
  return iv;
}

void ctx_isolate_rec(const Ctx& c, const Rational& a, const Rational& b, int cnt,
                     std::vector<RealInterval>& out) {
  if (cnt == 0) return;
  if (cnt == 1) {
    out.emplace_back(a, b);
    return;
  }
  Rational m = ctx_pick_nonroot(c, a, b);
  int left = c.chain.count(a, m);
  ctx_isolate_rec(c, a, m, left, out);
  ctx_isolate_rec(c, m, b, cnt - left, out);
}

// remove the full (x - r) multiplicity from q; q(r) must be 0
IntPoly ip_deflate(const IntPoly& q, const Rational& r) {
  UniPoly u = ip_to_unipoly(q);
  UniPoly lin = UniPoly::from_coeffs({-r, Rational(1)});
  while (u.degree() >= 1 && u.eval(r).is_zero()) u = u.exact_div(lin);
  return ip_from(u);
}

}  // namespace

RealRootIsolator::RealRootIsolator(IntPoly p)
    : p_(ip_primitive(std::move(p))), deg_(0), chain_(p_) {
  if (p_.empty()) throw std::invalid_argument("RealRootIsolator: zero polynomial");
  deg_ = (int)p_.size() - 1;
}

int RealRootIsolator::count_open(const Rational& a, const Rational& b) const {
  if (!(a < b)) return 0;
  return chain_.count(a, b);
}

std::vector<RealInterval> RealRootIsolator::isolate(const Rational& lo,
                                                    const Rational& hi) const {
  if (lo > hi) throw std::invalid_argument("isolate: empty range");
  if (lo == hi) {
    if (sign_at(lo) == 0) return {RealInterval(lo, lo)};
    return {};
  }
  bool root_lo = sign_at(lo) == 0;
  bool root_hi = sign_at(hi) == 0;
  IntPoly q = p_;
  if (root_lo) q = ip_deflate(q, lo);
  if (root_hi) q = ip_deflate(q, hi);

  std::vector<RealInterval> mids;
  if (q.size() > 1) {
    SturmChain qc(q);
    Ctx ctx{q, qc, (int)q.size() - 1};
    int total = qc.count(lo, hi);
    ctx_isolate_rec(ctx, lo, hi, total, mids);
    // endpoints of the range may be roots of the original polynomial; pull
    // interval ends strictly inside so later refinement can count there
    if (root_lo && !mids.empty() && mids.front().lo == lo)
      mids.front() = ctx_shrink_above(ctx, mids.front(), lo);
    if (root_hi && !mids.empty() && mids.back().hi == hi)
      mids.back() = ctx_shrink_below(ctx, mids.back(), hi);
    for (std::size_t i = 0; i + 1 < mids.size(); ++i) {
      while (!(mids[i].hi < mids[i + 1].lo)) mids[i] = ctx_bisect(ctx, mids[i]);
    }
  }

  std::vector<RealInterval> out;
  if (root_lo) out.emplace_back(lo, lo);
  out.insert(out.end(), mids.begin(), mids.end());
  if (root_hi) out.emplace_back(hi, hi);
  return out;
}

RealInterval RealRootIsolator::refine(RealInterval iv, const Rational& width) const {
  Ctx ctx{p_, chain_, deg_};
  while (!iv.is_point() && iv.length() > width) iv = ctx_bisect(ctx, iv);
  return iv;
}

RealInterval RealRootIsolator::shrink_below(RealInterval iv, const Rational& limit) const {
  Ctx ctx{p_, chain_, deg_};
  return ctx_shrink_below(ctx, iv, limit);
}

RealInterval RealRootIsolator::shrink_above(RealInterval iv, const Rational& limit) const {
  Ctx ctx{p_, chain_, deg_};
  return ctx_shrink_above(ctx, iv, limit);
}

}  // namespace lur
