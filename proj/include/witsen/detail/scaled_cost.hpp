#pragma once

// Integer-scaled cost kernel for the exhaustive solver.
//
// With Dx, Dz the common denominators of p_X0 and p_Z and integer weights
// wx = p_X0 * Dx, wz = p_Z * Dz, the Witsenhausen cost of T (with optimal
// second stage) is
//
//     total = (Dz * Kden * F + Knum * S) / (Dx * Dz * Kden)
//
// where F = sum wx (T(x) - x)^2 and S = sum over observations of
// min_d sum wx wz (T(x) + d)^2. Both F and S are integers, so candidate
// transport maps can be ranked by the integer numerator alone. The kernel is
// templated on the integer type; callers pick a fixed-width type only when
// magnitude_bound() shows it cannot overflow.

#include <algorithm>
#include <numeric>
#include <span>
#include <vector>

#include "witsen/core.hpp"

namespace witsen::detail {

inline Int lcm_of_denominators(const ProbMass& pm) {
  Int l = 1;
  for (const auto& a : pm.atoms()) l = boost::multiprecision::lcm(l, den(a.prob));
  return l;
}

struct ScaledInstance {
  std::vector<Int> xs, wx;  // ascending support of X0, weights p * Dx
  std::vector<Int> zs, wz;
  Int dx, dz, knum, kden;

  explicit ScaledInstance(const Instance& inst)
      : dx(lcm_of_denominators(inst.x0)), dz(lcm_of_denominators(inst.z)), knum(num(inst.k)), kden(den(inst.k)) {
    for (const auto& a : inst.x0.atoms()) {
      xs.push_back(a.value);
      wx.push_back(num(a.prob * dx));
    }
    for (const auto& b : inst.z.atoms()) {
      zs.push_back(b.value);
      wz.push_back(num(b.prob * dz));
    }
  }

  // Converts a scaled numerator back into the exact total cost.
  Rational total_from_scaled(const Int& scaled) const { return Rational(scaled, dx * dz * kden); }

  // Upper bound on every intermediate of the kernel when |T(x)| <= max_abs_t
  // and |T(x) - x| <= max_move.
  Int magnitude_bound(const Int& max_abs_t, const Int& max_move) const {
    Int zmax = 0;
    for (const auto& z : zs) zmax = std::max(zmax, Int(abs(z)));
    Int m = max_abs_t + zmax + 2;
    Int first = dx * max_move * max_move * dz * kden;
    Int second = 8 * dx * dz * m * m * knum;
    return 4 * (first + second + dx * dz * kden);
  }
};

template <typename I>
I floor_div_fixed(I a, I b) {
  I q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Same tie rule as round_nearest(): smaller magnitude, then negative.
template <typename I>
I round_nearest_fixed(I numer, I denom) {
  I q = floor_div_fixed<I>(numer, denom);
  I twice_rem = 2 * (numer - q * denom);
  if (twice_rem < denom) return q;
  if (twice_rem > denom) return q + 1;
  I lo = q, hi = q + 1;
  I alo = lo < 0 ? -lo : lo, ahi = hi < 0 ? -hi : hi;
  if (alo != ahi) return (alo < ahi) != static_cast<bool>(WITSEN_FAULT_TIE) ? lo : hi;
  return lo;
}

template <typename I>
class TransportEvaluator {
 public:
  explicit TransportEvaluator(const ScaledInstance& s)
      : first_scale_(static_cast<I>(s.dz * s.kden)), second_scale_(static_cast<I>(s.knum)) {
    for (std::size_t i = 0; i < s.xs.size(); ++i) {
      xs_.push_back(static_cast<I>(s.xs[i]));
      wx_.push_back(static_cast<I>(s.wx[i]));
    }
    for (std::size_t b = 0; b < s.zs.size(); ++b) {
      zs_.push_back(static_cast<I>(s.zs[b]));
      wz_.push_back(static_cast<I>(s.wz[b]));
    }
    obs_.resize(xs_.size() * zs_.size());
  }

  // Scaled numerator of the total cost for T given in support order.
  I scaled_total(std::span<const I> t) {
    I first = 0;
    std::size_t k = 0;
    for (std::size_t i = 0; i < xs_.size(); ++i) {
      I move = t[i] - xs_[i];
      first += wx_[i] * move * move;
      for (std::size_t b = 0; b < zs_.size(); ++b) obs_[k++] = {t[i] + zs_[b], wx_[i] * wz_[b], t[i]};
    }
    std::sort(obs_.begin(), obs_.end(), [](const Obs& a, const Obs& b) { return a.y < b.y; });

    I second = 0;
    for (std::size_t lo = 0; lo < obs_.size();) {
      std::size_t hi = lo;
      I mass = 0, m1 = 0, m2 = 0;
      for (; hi < obs_.size() && obs_[hi].y == obs_[lo].y; ++hi) {
        mass += obs_[hi].w;
        m1 += obs_[hi].w * obs_[hi].t;
        m2 += obs_[hi].w * obs_[hi].t * obs_[hi].t;
      }
      I d = round_nearest_fixed<I>(-m1, mass);
      second += m2 + 2 * d * m1 + d * d * mass;
      lo = hi;
    }
    return first_scale_ * first + second_scale_ * second;
  }

 private:
  struct Obs {
    I y, w, t;
  };
  I first_scale_, second_scale_;
  std::vector<I> xs_, wx_, zs_, wz_;
  std::vector<Obs> obs_;
};

}  // namespace witsen::detail
