#include "series.hpp"

#include <stdexcept>

namespace wqt {

namespace {
const RatFun kZero{};
}

const RatFun& FormalSeries::coeff(long k) const {
  auto it = c_.find(k);
  return it == c_.end() ? kZero : it->second;
}

void FormalSeries::set_coeff(long k, RatFun c) {
  if (k < lo_ || k > hi_) throw std::out_of_range("FormalSeries: degree outside window");
  if (c.is_zero())
    c_.erase(k);
  else
    c_[k] = std::move(c);
}

void FormalSeries::add_coeff(long k, const RatFun& c) { set_coeff(k, coeff(k) + c); }

FormalSeries FormalSeries::operator+(const FormalSeries& o) const {
  FormalSeries r(std::max(lo_, o.lo_), std::min(hi_, o.hi_));
  for (long k = r.lo_; k <= r.hi_; ++k) r.set_coeff(k, coeff(k) + o.coeff(k));
  return r;
}

FormalSeries FormalSeries::operator*(const FormalSeries& o) const {
  // lo is a true support bound, hi a truncation; the product stays exact up
  // to min(hi + o.lo, o.hi + lo)
  FormalSeries r(lo_ + o.lo_, std::min(hi_ + o.lo_, o.hi_ + lo_));
  for (const auto& [i, a] : c_)
    for (const auto& [j, b] : o.c_) {
      long k = i + j;
      if (k >= r.lo_ && k <= r.hi_) r.add_coeff(k, a * b);
    }
  return r;
}

FormalSeries FormalSeries::scaled(const RatFun& c) const {
  FormalSeries r(lo_, hi_);
  for (const auto& [k, a] : c_) r.set_coeff(k, a * c);
  return r;
}

FormalSeries FormalSeries::shifted(long shift, const RatFun& c) const {
  FormalSeries r(lo_ + shift, hi_ + shift);
  for (const auto& [k, a] : c_) r.set_coeff(k + shift, a * c);
  return r;
}

bool FormalSeries::window_equal(const FormalSeries& o) const {
  long lo = std::max(lo_, o.lo_), hi = std::min(hi_, o.hi_);
  for (long k = lo; k <= hi; ++k)
    if (!(coeff(k) == o.coeff(k))) return false;
  return true;
}

std::complex<double> FormalSeries::eval(std::complex<double> x, std::complex<double> q,
                                        std::complex<double> t) const {
  std::complex<double> s = 0.0;
  for (const auto& [k, a] : c_) s += a.eval(q, t) * std::pow(x, static_cast<double>(k));
  return s;
}

std::string FormalSeries::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (const auto& [k, a] : c_) {
    if (!s.empty()) s += " + ";
    s += "(" + a.str() + ")";
    if (k != 0) {
      s += "x";
      if (k != 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

UniSeries UniSeries::one(long order) {
  UniSeries r(order);
  r.c_[0] = RatFun(1);
  return r;
}

UniSeries UniSeries::operator+(const UniSeries& o) const {
  if (order() != o.order()) throw std::invalid_argument("UniSeries: order mismatch");
  UniSeries r(order());
  for (long k = 0; k <= order(); ++k) r.c_[k] = c_[k] + o.c_[k];
  return r;
}

UniSeries UniSeries::operator-(const UniSeries& o) const {
  if (order() != o.order()) throw std::invalid_argument("UniSeries: order mismatch");
  UniSeries r(order());
  for (long k = 0; k <= order(); ++k) r.c_[k] = c_[k] - o.c_[k];
  return r;
}

UniSeries UniSeries::operator*(const UniSeries& o) const {
  if (order() != o.order()) throw std::invalid_argument("UniSeries: order mismatch");
  UniSeries r(order());
  for (long i = 0; i <= order(); ++i) {
    if (c_[i].is_zero()) continue;
    for (long j = 0; i + j <= order(); ++j) {
      if (o.c_[j].is_zero()) continue;
      r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    }
  }
  return r;
}

UniSeries UniSeries::inv() const {
  if (c_[0].is_zero()) throw DivisionByZero("UniSeries: constant term vanishes");
  UniSeries r(order());
  RatFun c0inv = c_[0].inv();
  r.c_[0] = c0inv;
  for (long k = 1; k <= order(); ++k) {
    RatFun s;
    for (long i = 1; i <= k; ++i) s = s + c_[i] * r.c_[k - i];
    r.c_[k] = s * c0inv * Rat(-1);
  }
  return r;
}

void UniSeries::mul_binomial(const RatFun& A, long e) {
  long n = order();
  for (long rep = 0; rep < (e > 0 ? e : -e); ++rep) {
    if (e > 0) {
      for (long k = n; k >= 1; --k) c_[k] = c_[k] - A * c_[k - 1];
    } else {
      for (long k = 1; k <= n; ++k) c_[k] = c_[k] + A * c_[k - 1];
    }
  }
}

void UniSeries::mul_euler_tower(const RatFun& A, const RatFun& nu, int e) {
  long n = order();
  UniSeries tower = UniSeries::one(n);
  RatFun fact = RatFun(1);  // (nu;nu)_j
  RatFun Apow = fact;                                          // A^j or (-A)^j
  RatFun nutri = fact;                                         // nu^{j(j-1)/2}
  RatFun nupow = fact;                                         // nu^{j-1} running
  for (long j = 1; j <= n; ++j) {
    RatFun nuj = nupow * nu;  // nu^j
    RatFun one_minus = RatFun(1) - nuj;
    if (one_minus.is_zero()) throw DivisionByZero("UniSeries: Euler tower at root of unity");
    fact = fact * one_minus;
    if (e < 0) {
      Apow = Apow * A;
      tower.c_[j] = Apow * fact.inv();
    } else {
      Apow = Apow * A * Rat(-1);
      nutri = nutri * nupow;  // nu^{j(j-1)/2} gains nu^{j-1}
      tower.c_[j] = Apow * nutri * fact.inv();
    }
    nupow = nuj;
  }
  *this = *this * tower;
}

UniSeries UniSeries::exp_modes(const std::vector<RatFun>& p, long order) {
  if (static_cast<long>(p.size()) < order)
    throw std::invalid_argument("UniSeries: not enough mode coefficients");
  UniSeries r = UniSeries::one(order);
  for (long j = 1; j <= order; ++j) {
    RatFun s;
    for (long n = 1; n <= j; ++n) s = s + p[n - 1] * r.c_[j - n];
    r.c_[j] = s * RatFun(rat(1, j));
  }
  return r;
}

FormalSeries UniSeries::to_formal() const {
  FormalSeries r(0, order());
  for (long k = 0; k <= order(); ++k)
    if (!c_[k].is_zero()) r.set_coeff(k, c_[k]);
  return r;
}

std::string UniSeries::str() const { return to_formal().str(); }

WSeries WSeries::one(long cut) {
  WSeries r(cut);
  r.c_[{0, 0}] = RatFun(1);
  return r;
}

void WSeries::add_term(long xdeg, long w, const RatFun& c) {
  if (w > cut_ || c.is_zero()) return;
  auto key = std::make_pair(xdeg, w);
  auto it = c_.find(key);
  if (it == c_.end()) {
    c_[key] = c;
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) c_.erase(it);
  }
}

WSeries WSeries::operator*(const WSeries& o) const {
  WSeries r(std::min(cut_, o.cut_));
  for (const auto& [ka, a] : c_)
    for (const auto& [kb, b] : o.c_) {
      long w = ka.second + kb.second;
      if (w > r.cut_) continue;
      r.add_term(ka.first + kb.first, w, a * b);
    }
  return r;
}

bool WSeries::operator==(const WSeries& o) const { return cut_ == o.cut_ && c_ == o.c_; }

bool WSeries::is_one() const {
  if (c_.size() != 1) return false;
  const auto& [k, v] = *c_.begin();
  return k.first == 0 && k.second == 0 && v.is_one();
}

WSeries WSeries::exp_antisym_modes(const std::vector<RatFun>& g, long cut) {
  if (static_cast<long>(g.size()) < cut)
    throw std::invalid_argument("WSeries: not enough mode coefficients");
  // exp of the sum is the product of single-term exponentials, each of which
  // truncates after cut/n powers
  WSeries acc = WSeries::one(cut);
  for (long n = 1; n <= cut; ++n) {
    for (long sgn : {1L, -1L}) {
      RatFun c = g[n - 1] * rat(sgn, n);
      WSeries factor(cut);
      RatFun pw(1);
      Rat kfact(1);
      factor.add_term(0, 0, pw);
      for (long k = 1; k * n <= cut; ++k) {
        pw = pw * c;
        kfact *= Rat(k);
        factor.add_term(sgn * k * n, k * n, pw * RatFun(Rat(Rat(1) / kfact)));
      }
      acc = acc * factor;
    }
  }
  return acc;
}

FormalSeries WSeries::flatten() const {
  FormalSeries r(-cut_, cut_);
  for (const auto& [key, v] : c_)
    if (key.first >= -cut_ && key.first <= cut_) r.add_coeff(key.first, v);
  return r;
}

}  // namespace wqt
