#include "taut/fourier_series.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <tuple>
#include <sstream>

#include "taut/error.hpp"

namespace taut {

namespace {

bool term_less(const FourierTerm& a, const FourierTerm& b) { return a.first < b.first; }

}  // namespace

FourierSeries FourierSeries::from_terms(int box, int floor1, int floor2, std::vector<FourierTerm> terms) {
  FourierSeries s(box, floor1, floor2);
  std::sort(terms.begin(), terms.end(), term_less);
  for (auto& t : terms) {
    const auto& e = t.first;
    if (e.e1 < floor1 || e.e2 < floor2) {
      if (t.second.is_zero()) continue;
      throw Error(ErrorCode::InvalidArgument, "series term below the declared floor");
    }
    if (e.e1 > box || e.e2 > box) continue;
    if (!s.terms_.empty() && s.terms_.back().first == e) {
      s.terms_.back().second += t.second;
      if (s.terms_.back().second.is_zero()) s.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      s.terms_.push_back(std::move(t));
    }
  }
  return s;
}

FourierSeries FourierSeries::constant(int box, const GaussRat& c) {
  return from_terms(box, 0, 0, {{FourierExp{}, c}});
}

GaussRat FourierSeries::coefficient(const FourierExp& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const FourierTerm& t, const FourierExp& k) { return t.first < k; });
  if (it != terms_.end() && it->first == e) return it->second;
  return GaussRat(0);
}

FourierSeries FourierSeries::restricted(int box) const {
  if (box > box_) throw Error(ErrorCode::OutOfBox, "cannot enlarge a truncated series");
  FourierSeries s(box, floor1_, floor2_);
  for (const auto& t : terms_) {
    if (t.first.e1 <= box && t.first.e2 <= box) s.terms_.push_back(t);
  }
  return s;
}

FourierSeries FourierSeries::with_floor(int floor1, int floor2) const {
  if (floor1 > floor1_ || floor2 > floor2_) {
    throw Error(ErrorCode::InvalidArgument, "floors can only be lowered");
  }
  FourierSeries s = *this;
  s.floor1_ = floor1;
  s.floor2_ = floor2;
  return s;
}

FourierSeries FourierSeries::scaled(const GaussRat& c) const {
  FourierSeries s(box_, floor1_, floor2_);
  if (c.is_zero()) return s;
  s.terms_ = terms_;
  for (auto& t : s.terms_) t.second *= c;
  return s;
}

namespace {
FourierSeries combine(const FourierSeries& a, const FourierSeries& b, bool subtract) {
  const int box = std::min(a.box(), b.box());
  std::vector<FourierTerm> terms;
  terms.reserve(a.size() + b.size());
  for (const auto& t : a.terms()) terms.push_back(t);
  for (const auto& t : b.terms()) terms.emplace_back(t.first, subtract ? -t.second : t.second);
  return FourierSeries::from_terms(box, std::min(a.floor1(), b.floor1()),
                                   std::min(a.floor2(), b.floor2()), std::move(terms));
}
}  // namespace

FourierSeries operator+(const FourierSeries& a, const FourierSeries& b) { return combine(a, b, false); }
FourierSeries operator-(const FourierSeries& a, const FourierSeries& b) { return combine(a, b, true); }

bool operator==(const FourierSeries& a, const FourierSeries& b) {
  return a.box_ == b.box_ && a.floor1_ == b.floor1_ && a.floor2_ == b.floor2_ && a.terms_ == b.terms_;
}

int FourierSeries::min_total_order() const {
  int m = INT_MAX;
  for (const auto& t : terms_) m = std::min(m, t.first.e1 + t.first.e2);
  return m;
}

std::pair<int, int> FourierSeries::min_orders() const {
  int m1 = INT_MAX;
  int m2 = INT_MAX;
  for (const auto& t : terms_) {
    m1 = std::min(m1, t.first.e1);
    m2 = std::min(m2, t.first.e2);
  }
  return {m1, m2};
}

std::vector<std::pair<int, GaussRat>> FourierSeries::slice(int e1, int e2) const {
  std::vector<std::pair<int, GaussRat>> out;
  for (const auto& t : terms_) {
    if (t.first.e1 == e1 && t.first.e2 == e2) out.emplace_back(t.first.e12, t.second);
  }
  return out;
}

bool FourierSeries::is_semipositive() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const FourierTerm& t) {
    const auto& e = t.first;
    return static_cast<long long>(e.e12) * e.e12 <= static_cast<long long>(e.e1) * e.e2;
  });
}

std::string FourierSeries::to_string(int max_terms) const {
  std::ostringstream os;
  os << "[N=" << box_ << " floor=" << floor1_ << "," << floor2_ << "] ";
  if (terms_.empty()) return os.str() + "0";
  int shown = 0;
  for (const auto& [e, c] : terms_) {
    if (shown == max_terms) {
      os << " + ... (" << terms_.size() << " terms)";
      break;
    }
    if (shown > 0) os << " + ";
    os << "(" << c.to_string() << ")*Q1^" << e.e1 << "*Q12^" << e.e12 << "*Q2^" << e.e2;
    ++shown;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Integer kernels.
//
// Operands are scaled to Gaussian integers by their common denominators. When
// every scaled coefficient fits in 64 bits the work is done with checked
// 128-bit accumulators; on overflow (or wider inputs) the mpz/mpq paths run.

namespace {

using i128 = __int128;

struct Overflow {};

inline i128 checked_add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}

inline i128 checked_sub(i128 a, i128 b) {
  i128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

inline i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  auto hi = static_cast<std::uint64_t>(u >> 64);
  auto lo = static_cast<std::uint64_t>(u);
  mpz_class r = hi;
  r <<= 64;
  r += mpz_class(static_cast<unsigned long>(lo));
  return neg ? mpz_class(-r) : r;
}

mpz_class common_denominator(std::span<const FourierTerm> terms) {
  mpz_class d = 1;
  for (const auto& t : terms) {
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), t.second.re().get_den_mpz_t());
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), t.second.im().get_den_mpz_t());
  }
  return d;
}

enum class Kind { Real, Imag, Mixed };

struct IntTerm {
  FourierExp e;
  mpz_class re;
  mpz_class im;
};

struct ScaledSeries {
  std::vector<IntTerm> terms;
  mpz_class den;
  Kind kind = Kind::Real;
  bool fits64 = true;
};

ScaledSeries scale_to_integers(std::span<const FourierTerm> terms) {
  ScaledSeries s;
  s.den = common_denominator(terms);
  bool any_re = false;
  bool any_im = false;
  s.terms.reserve(terms.size());
  for (const auto& [e, c] : terms) {
    mpq_class r = c.re() * s.den;
    mpq_class i = c.im() * s.den;
    IntTerm it{e, r.get_num(), i.get_num()};
    any_re = any_re || sgn(it.re) != 0;
    any_im = any_im || sgn(it.im) != 0;
    s.fits64 = s.fits64 && it.re.fits_slong_p() && it.im.fits_slong_p();
    s.terms.push_back(std::move(it));
  }
  s.kind = any_re && any_im ? Kind::Mixed : (any_im ? Kind::Imag : Kind::Real);
  return s;
}

struct Grid {
  int lo1, hi1, lo2, hi2, lo12, hi12;
  std::size_t n1() const { return static_cast<std::size_t>(hi1 - lo1 + 1); }
  std::size_t n2() const { return static_cast<std::size_t>(hi2 - lo2 + 1); }
  std::size_t n12() const { return static_cast<std::size_t>(hi12 - lo12 + 1); }
  std::size_t size() const { return n1() * n2() * n12(); }
  std::size_t index(int e1, int e12, int e2) const {
    return (static_cast<std::size_t>(e1 - lo1) * n2() + static_cast<std::size_t>(e2 - lo2)) * n12() +
           static_cast<std::size_t>(e12 - lo12);
  }
  FourierExp exp_of(std::size_t idx) const {
    int e12 = static_cast<int>(idx % n12()) + lo12;
    idx /= n12();
    int e2 = static_cast<int>(idx % n2()) + lo2;
    int e1 = static_cast<int>(idx / n2()) + lo1;
    return {e1, e12, e2};
  }
};

// Visits every pair (ia, ib) whose product exponent lands inside [.., box].
template <class F>
void for_each_pair(const std::vector<IntTerm>& a, const std::vector<IntTerm>& b, int box, F&& f) {
  // b is sorted by e1 first.
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& ea = a[i].e;
    const int lim1 = box - ea.e1;
    const int lim2 = box - ea.e2;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const auto& eb = b[j].e;
      if (eb.e1 > lim1) break;
      if (eb.e2 > lim2) continue;
      f(i, j);
    }
  }
}

FourierSeries mul_int64(const ScaledSeries& sa, const ScaledSeries& sb, const Grid& g, int box, int f1, int f2,
                        const mpz_class& den) {
  const auto& a = sa.terms;
  const auto& b = sb.terms;
  std::vector<std::int64_t> are(a.size()), aim(a.size()), bre(b.size()), bim(b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    are[i] = a[i].re.get_si();
    aim[i] = a[i].im.get_si();
  }
  for (std::size_t j = 0; j < b.size(); ++j) {
    bre[j] = b[j].re.get_si();
    bim[j] = b[j].im.get_si();
  }
  const bool pure = sa.kind != Kind::Mixed && sb.kind != Kind::Mixed;
  std::vector<i128> acc_re(g.size(), 0);
  std::vector<i128> acc_im(pure ? 0 : g.size(), 0);
  if (pure) {
    const auto& av = sa.kind == Kind::Real ? are : aim;
    const auto& bv = sb.kind == Kind::Real ? bre : bim;
    for_each_pair(a, b, box, [&](std::size_t i, std::size_t j) {
      std::size_t k = g.index(a[i].e.e1 + b[j].e.e1, a[i].e.e12 + b[j].e.e12, a[i].e.e2 + b[j].e.e2);
      acc_re[k] = checked_add(acc_re[k], static_cast<i128>(av[i]) * bv[j]);
    });
  } else {
    for_each_pair(a, b, box, [&](std::size_t i, std::size_t j) {
      std::size_t k = g.index(a[i].e.e1 + b[j].e.e1, a[i].e.e12 + b[j].e.e12, a[i].e.e2 + b[j].e.e2);
      i128 rr = checked_sub(static_cast<i128>(are[i]) * bre[j], static_cast<i128>(aim[i]) * bim[j]);
      i128 ii = checked_add(static_cast<i128>(are[i]) * bim[j], static_cast<i128>(aim[i]) * bre[j]);
      acc_re[k] = checked_add(acc_re[k], rr);
      acc_im[k] = checked_add(acc_im[k], ii);
    });
  }
  // pure: real*real -> real, imag*imag -> -real, mixed kinds -> imaginary.
  const bool to_imag = pure && (sa.kind != sb.kind);
  const bool negate = pure && sa.kind == Kind::Imag && sb.kind == Kind::Imag;
  std::vector<FourierTerm> out;
  for (std::size_t k = 0; k < g.size(); ++k) {
    i128 vr = acc_re[k];
    i128 vi = pure ? 0 : acc_im[k];
    if (vr == 0 && vi == 0) continue;
    mpq_class r(to_mpz(vr), den);
    mpq_class im(to_mpz(vi), den);
    r.canonicalize();
    im.canonicalize();
    GaussRat c;
    if (!pure) c = GaussRat(r, im);
    else if (to_imag) c = GaussRat(0, r);
    else c = GaussRat(negate ? mpq_class(-r) : r);
    out.emplace_back(g.exp_of(k), std::move(c));
  }
  return FourierSeries::from_terms(box, f1, f2, std::move(out));
}

FourierSeries mul_mpz(const ScaledSeries& sa, const ScaledSeries& sb, const Grid& g, int box, int f1, int f2,
                      const mpz_class& den) {
  const auto& a = sa.terms;
  const auto& b = sb.terms;
  std::vector<mpz_class> acc_re(g.size()), acc_im(g.size());
  mpz_class tmp;
  for_each_pair(a, b, box, [&](std::size_t i, std::size_t j) {
    std::size_t k = g.index(a[i].e.e1 + b[j].e.e1, a[i].e.e12 + b[j].e.e12, a[i].e.e2 + b[j].e.e2);
    mpz_addmul(acc_re[k].get_mpz_t(), a[i].re.get_mpz_t(), b[j].re.get_mpz_t());
    mpz_submul(acc_re[k].get_mpz_t(), a[i].im.get_mpz_t(), b[j].im.get_mpz_t());
    mpz_addmul(acc_im[k].get_mpz_t(), a[i].re.get_mpz_t(), b[j].im.get_mpz_t());
    mpz_addmul(acc_im[k].get_mpz_t(), a[i].im.get_mpz_t(), b[j].re.get_mpz_t());
  });
  std::vector<FourierTerm> out;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (sgn(acc_re[k]) == 0 && sgn(acc_im[k]) == 0) continue;
    mpq_class r(acc_re[k], den);
    mpq_class im(acc_im[k], den);
    r.canonicalize();
    im.canonicalize();
    out.emplace_back(g.exp_of(k), GaussRat(r, im));
  }
  return FourierSeries::from_terms(box, f1, f2, std::move(out));
}

}  // namespace

FourierSeries series_mul(const FourierSeries& a, const FourierSeries& b) {
  const int n1 = std::min(a.box() + b.floor1(), b.box() + a.floor1());
  const int n2 = std::min(a.box() + b.floor2(), b.box() + a.floor2());
  const int box = std::min(n1, n2);
  const int f1 = a.floor1() + b.floor1();
  const int f2 = a.floor2() + b.floor2();
  if (a.is_zero() || b.is_zero() || box < std::max(f1, f2)) return FourierSeries(box, f1, f2);

  ScaledSeries sa = scale_to_integers(a.terms());
  ScaledSeries sb = scale_to_integers(b.terms());
  int lo12a = INT_MAX, hi12a = INT_MIN, lo12b = INT_MAX, hi12b = INT_MIN;
  for (const auto& t : sa.terms) {
    lo12a = std::min(lo12a, t.e.e12);
    hi12a = std::max(hi12a, t.e.e12);
  }
  for (const auto& t : sb.terms) {
    lo12b = std::min(lo12b, t.e.e12);
    hi12b = std::max(hi12b, t.e.e12);
  }
  Grid g{f1, box, f2, box, lo12a + lo12b, hi12a + hi12b};
  mpz_class den = sa.den * sb.den;
  if (sa.fits64 && sb.fits64) {
    try {
      return mul_int64(sa, sb, g, box, f1, f2, den);
    } catch (const Overflow&) {
    }
  }
  return mul_mpz(sa, sb, g, box, f1, f2, den);
}

FourierSeries series_pow(const FourierSeries& a, unsigned e) {
  FourierSeries result = FourierSeries::constant(a.box(), GaussRat(1));
  FourierSeries base = a;
  while (e > 0) {
    if (e & 1U) result = series_mul(result, base);
    e >>= 1U;
    if (e > 0) base = series_mul(base, base);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Division.

namespace {

struct GInt {
  i128 re = 0;
  i128 im = 0;
};

// Coefficient ring with overflow-checked Gaussian integers; division is only
// by the (unit) leading coefficient 1 of the normalized divisor slice.
struct IntRing {
  using T = GInt;
  static bool is_zero(const T& x) { return x.re == 0 && x.im == 0; }
  static void sub_mul(T& acc, const T& a, const T& b) {
    i128 rr = checked_sub(checked_mul(a.re, b.re), checked_mul(a.im, b.im));
    i128 ii = checked_add(checked_mul(a.re, b.im), checked_mul(a.im, b.re));
    acc.re = checked_sub(acc.re, rr);
    acc.im = checked_sub(acc.im, ii);
  }
  T div_top(const T& x) const { return x; }  // top coefficient is 1
};

struct RatRing {
  using T = GaussRat;
  GaussRat top_inv;
  static bool is_zero(const T& x) { return x.is_zero(); }
  static void sub_mul(T& acc, const T& a, const T& b) { acc -= a * b; }
  T div_top(const T& x) const { return x * top_inv; }
};

template <class T>
struct Laurent {
  int lo = 0;
  std::vector<T> c;  // c[k] is the coefficient of Q12^{lo+k}

  bool empty() const { return c.empty(); }
  int hi() const { return lo + static_cast<int>(c.size()) - 1; }

  void ensure(int from, int to) {
    if (c.empty()) {
      lo = from;
      c.assign(static_cast<std::size_t>(to - from + 1), T{});
      return;
    }
    if (from < lo) {
      c.insert(c.begin(), static_cast<std::size_t>(lo - from), T{});
      lo = from;
    }
    if (to > hi()) c.resize(static_cast<std::size_t>(to - lo + 1), T{});
  }

  template <class Ring>
  void trim() {
    std::size_t first = 0;
    while (first < c.size() && Ring::is_zero(c[first])) ++first;
    if (first == c.size()) {
      c.clear();
      return;
    }
    std::size_t last = c.size();
    while (Ring::is_zero(c[last - 1])) --last;
    c = std::vector<T>(c.begin() + static_cast<std::ptrdiff_t>(first), c.begin() + static_cast<std::ptrdiff_t>(last));
    lo += static_cast<int>(first);
  }
};

template <class T>
struct DivInput {
  int box_a, box_b;
  int m1, m2;  // componentwise minimum of the dividend's support
  int o1, o2;  // position of the divisor's leading slice
  // Dividend slices keyed by (e1, e2) and divisor slices keyed by offset.
  std::vector<std::pair<std::pair<int, int>, Laurent<T>>> a_slices;
  std::vector<std::pair<std::pair<int, int>, Laurent<T>>> b_slices;  // excluding lead
  Laurent<T> lead;
};

struct DivShape {
  int u_lo1, u_lo2, u_hi1, u_hi2;
};

template <class Ring>
std::vector<std::pair<std::pair<int, int>, Laurent<typename Ring::T>>> divide_slices(
    const Ring& ring, DivInput<typename Ring::T>& in, const DivShape& sh) {
  using T = typename Ring::T;
  const int w1 = sh.u_hi1 - sh.u_lo1 + 1;
  const int w2 = sh.u_hi2 - sh.u_lo2 + 1;
  std::vector<Laurent<T>> residual(static_cast<std::size_t>(std::max(0, w1) * std::max(0, w2)));
  auto at = [&](int u1, int u2) -> Laurent<T>& {
    return residual[static_cast<std::size_t>((u1 - sh.u_lo1) * w2 + (u2 - sh.u_lo2))];
  };
  for (auto& [pos, lp] : in.a_slices) {
    int u1 = pos.first - in.o1;
    int u2 = pos.second - in.o2;
    if (u1 < sh.u_lo1 || u2 < sh.u_lo2 || u1 > sh.u_hi1 || u2 > sh.u_hi2) continue;
    at(u1, u2) = std::move(lp);
  }
  std::vector<std::pair<std::pair<int, int>, Laurent<T>>> quotient;
  const int lead_lo = in.lead.lo;
  const int lead_hi = in.lead.hi();
  for (int total = sh.u_lo1 + sh.u_lo2; total <= sh.u_hi1 + sh.u_hi2; ++total) {
    for (int u1 = std::max(sh.u_lo1, total - sh.u_hi2); u1 <= std::min(sh.u_hi1, total - sh.u_lo2); ++u1) {
      const int u2 = total - u1;
      Laurent<T>& r = at(u1, u2);
      r.template trim<Ring>();
      if (r.empty()) continue;
      // Exact Laurent division by the lead slice, from the top degree down.
      if (r.hi() - lead_hi < r.lo - lead_lo) {
        throw Error(ErrorCode::NotDivisibleInBox,
                    "slice (" + std::to_string(u1 + in.o1) + "," + std::to_string(u2 + in.o2) + ") not divisible");
      }
      Laurent<T> q;
      q.ensure(r.lo - lead_lo, r.hi() - lead_hi);
      for (int deg = r.hi(); deg - lead_hi >= q.lo; --deg) {
        const T& top = r.c[static_cast<std::size_t>(deg - r.lo)];
        if (Ring::is_zero(top)) continue;
        T qk = ring.div_top(top);
        const int shift = deg - lead_hi;
        for (int k = lead_lo; k <= lead_hi; ++k) {
          Ring::sub_mul(r.c[static_cast<std::size_t>(shift + k - r.lo)], qk, in.lead.c[static_cast<std::size_t>(k - lead_lo)]);
        }
        q.c[static_cast<std::size_t>(shift - q.lo)] = std::move(qk);
      }
      r.template trim<Ring>();
      if (!r.empty()) {
        throw Error(ErrorCode::NotDivisibleInBox,
                    "slice (" + std::to_string(u1 + in.o1) + "," + std::to_string(u2 + in.o2) +
                        ") leaves a remainder");
      }
      q.template trim<Ring>();
      // Propagate q * (b - lead) into higher slices.
      for (const auto& [off, bl] : in.b_slices) {
        const int v1 = u1 + off.first;
        const int v2 = u2 + off.second;
        if (v1 > sh.u_hi1 || v2 > sh.u_hi2) continue;
        Laurent<T>& target = at(v1, v2);
        target.ensure(q.lo + bl.lo, q.hi() + bl.hi());
        for (std::size_t i = 0; i < q.c.size(); ++i) {
          if (Ring::is_zero(q.c[i])) continue;
          for (std::size_t j = 0; j < bl.c.size(); ++j) {
            const int deg = q.lo + static_cast<int>(i) + bl.lo + static_cast<int>(j);
            Ring::sub_mul(target.c[static_cast<std::size_t>(deg - target.lo)], q.c[i], bl.c[j]);
          }
        }
      }
      quotient.emplace_back(std::make_pair(u1, u2), std::move(q));
    }
  }
  return quotient;
}

template <class T, class Conv>
void collect_slices(std::span<const FourierTerm> terms, int o1, int o2, bool split_lead, DivInput<T>& in,
                    bool dividend, Conv&& conv) {
  // Terms are sorted by (e1, e12, e2); gather per (e1, e2).
  std::vector<std::pair<std::pair<int, int>, std::vector<std::pair<int, T>>>> buckets;
  std::map<std::pair<int, int>, std::size_t> pos;
  for (const auto& [e, c] : terms) {
    auto key = std::make_pair(e.e1, e.e2);
    auto [it, inserted] = pos.try_emplace(key, buckets.size());
    if (inserted) buckets.emplace_back(key, std::vector<std::pair<int, T>>{});
    buckets[it->second].second.emplace_back(e.e12, conv(c));
  }
  for (auto& [key, list] : buckets) {
    Laurent<T> lp;
    int lo = list.front().first;
    int hi = list.front().first;
    for (const auto& [k, v] : list) {
      lo = std::min(lo, k);
      hi = std::max(hi, k);
    }
    lp.ensure(lo, hi);
    for (auto& [k, v] : list) lp.c[static_cast<std::size_t>(k - lo)] = std::move(v);
    if (dividend) {
      in.a_slices.emplace_back(key, std::move(lp));
    } else if (split_lead && key == std::make_pair(o1, o2)) {
      in.lead = std::move(lp);
    } else {
      in.b_slices.emplace_back(std::make_pair(key.first - o1, key.second - o2), std::move(lp));
    }
  }
}

}  // namespace

FourierSeries series_div(const FourierSeries& a, const FourierSeries& b) {
  if (b.is_zero()) throw Error(ErrorCode::LeadingSliceNotInvertible, "division by the zero series");
  // Leading slice: unique (e1, e2) of minimal total order that is also the
  // componentwise minimum of the divisor's support.
  const int lead_total = b.min_total_order();
  auto [o1, o2] = b.min_orders();
  for (const auto& [e, c] : b.terms()) {
    if (e.e1 + e.e2 == lead_total && (e.e1 != o1 || e.e2 != o2)) {
      throw Error(ErrorCode::LeadingSliceNotInvertible, "lowest-order part of the divisor spans several slices");
    }
  }
  if (o1 + o2 != lead_total) {
    throw Error(ErrorCode::LeadingSliceNotInvertible, "divisor support is not above its leading slice");
  }
  // Dividend support minimum.
  int m1 = a.floor1();
  int m2 = a.floor2();
  if (!a.is_zero()) std::tie(m1, m2) = a.min_orders();
  DivShape sh{};
  sh.u_lo1 = m1 - o1;
  sh.u_lo2 = m2 - o2;
  sh.u_hi1 = std::min(a.box() - o1, b.box() - 2 * o1 + m1);
  sh.u_hi2 = std::min(a.box() - o2, b.box() - 2 * o2 + m2);
  const int qbox = std::min(sh.u_hi1, sh.u_hi2);
  sh.u_hi1 = sh.u_hi2 = qbox;
  const int qf1 = a.is_zero() ? a.floor1() - o1 : m1 - o1;
  const int qf2 = a.is_zero() ? a.floor2() - o2 : m2 - o2;
  if (a.is_zero()) return FourierSeries(qbox, qf1, qf2);

  const auto lead_terms = b.slice(o1, o2);
  const GaussRat& top = lead_terms.back().second;
  const GaussRat top_inv = top.inverse();

  // Integer path: normalize the divisor so its leading top coefficient is 1.
  std::vector<FourierTerm> bn(b.terms().begin(), b.terms().end());
  for (auto& t : bn) t.second *= top_inv;
  std::vector<FourierTerm> an(a.terms().begin(), a.terms().end());
  for (auto& t : an) t.second *= top_inv;
  ScaledSeries sa = scale_to_integers(an);
  ScaledSeries sb = scale_to_integers(bn);

  auto assemble = [&](auto&& quotient, auto&& to_gauss) {
    std::vector<FourierTerm> out;
    for (auto& [u, lp] : quotient) {
      for (std::size_t k = 0; k < lp.c.size(); ++k) {
        GaussRat c = to_gauss(lp.c[k]);
        if (c.is_zero()) continue;
        out.emplace_back(FourierExp{u.first, lp.lo + static_cast<int>(k), u.second}, std::move(c));
      }
    }
    return FourierSeries::from_terms(qbox, qf1, qf2, std::move(out));
  };

  if (sb.den == 1 && sa.fits64 && sb.fits64) {
    try {
      DivInput<GInt> in{a.box(), b.box(), m1, m2, o1, o2, {}, {}, {}};
      auto to_gint = [](const IntTerm& t) { return GInt{t.re.get_si(), t.im.get_si()}; };
      DivInput<GInt>& ref = in;
      {
        std::map<std::pair<int, int>, Laurent<GInt>> slices;
        for (const auto& t : sa.terms) {
          auto& lp = slices[{t.e.e1, t.e.e2}];
          lp.ensure(t.e.e12, t.e.e12);
          lp.c[static_cast<std::size_t>(t.e.e12 - lp.lo)] = to_gint(t);
        }
        for (auto& [k, lp] : slices) ref.a_slices.emplace_back(k, std::move(lp));
      }
      {
        std::map<std::pair<int, int>, Laurent<GInt>> slices;
        for (const auto& t : sb.terms) {
          auto& lp = slices[{t.e.e1, t.e.e2}];
          lp.ensure(t.e.e12, t.e.e12);
          lp.c[static_cast<std::size_t>(t.e.e12 - lp.lo)] = to_gint(t);
        }
        for (auto& [k, lp] : slices) {
          if (k == std::make_pair(o1, o2)) ref.lead = std::move(lp);
          else ref.b_slices.emplace_back(std::make_pair(k.first - o1, k.second - o2), std::move(lp));
        }
      }
      IntRing ring;
      auto quotient = divide_slices(ring, in, sh);
      const mpz_class& den = sa.den;
      return assemble(quotient, [&](const GInt& g) {
        mpq_class r(to_mpz(g.re), den);
        mpq_class i(to_mpz(g.im), den);
        r.canonicalize();
        i.canonicalize();
        return GaussRat(r, i);
      });
    } catch (const Overflow&) {
    }
  }

  DivInput<GaussRat> in{a.box(), b.box(), m1, m2, o1, o2, {}, {}, {}};
  auto id = [](const GaussRat& c) { return c; };
  collect_slices<GaussRat>(a.terms(), o1, o2, false, in, true, id);
  collect_slices<GaussRat>(b.terms(), o1, o2, true, in, false, id);
  RatRing ring{top_inv};
  auto quotient = divide_slices(ring, in, sh);
  return assemble(quotient, id);
}

}  // namespace taut
