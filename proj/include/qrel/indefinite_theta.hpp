#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qrel/character.hpp"
#include "qrel/qseries.hpp"
#include "qrel/quadext.hpp"

namespace qrel {

/// Smallest x, y > 0 with x^2 - N y^2 = 1, N > 0 not a square.
std::pair<BigInt, BigInt> pell_fundamental(std::int64_t N);

/// Solutions of s m^2 - t n^2 = r with m, n >= 1, grouped into orbits of
/// (m, n) -> (x m + t y n, s y m + x n), where x + y sqrt(s t) is the
/// fundamental unit of norm 1.
struct PellOrbitData {
  std::int64_t s = 1, t = 1, r = 1;
  /// Squarefree part of s t; s t = D c^2.
  std::int64_t D = 1;
  std::int64_t c = 1;
  BigInt x, y;
  /// x + y c sqrt(D) > 1.
  QuadExt epsilon;
  /// First positive solution of each orbit; every positive solution is
  /// reached from exactly one of these by forward steps.
  std::vector<std::pair<std::int64_t, std::int64_t>> representatives;

  /// One forward step of the orbit map.
  std::pair<BigInt, BigInt> step(const BigInt& m, const BigInt& n) const;
};

/// Throws std::domain_error when s t is a perfect square or r < 1.
PellOrbitData pell_orbit(std::int64_t s, std::int64_t t, std::int64_t r);

/// Series whose n-th coefficient is sqrt(outer) * series[n].
struct IndefiniteTheta {
  std::int64_t outer = 1;
  QESeries series;

  QuadExt coeff(std::int64_t n) const { return series.coeff(n); }
  double to_double(std::int64_t n) const;
};

/// 2 sum_{s m^2 - t n^2 = r, m, n >= 1} chi(m) psi(n) (sqrt(s) m - sqrt(t) n)^{2nu+1}
/// for 1 <= r <= T, exact. Finite factorization when s t is a square,
/// closed-form orbit sums otherwise. No parity requirement.
IndefiniteTheta indefinite_double_sum(std::int64_t s, std::int64_t t, const DirichletCharacter& chi,
                                      const DirichletCharacter& psi, int nu, std::int64_t T);

/// Double sum plus psi(0) sum_{a >= 1} chi(a) (sqrt(s) a)^{2nu+1} q^{s a^2}; chi, psi even.
IndefiniteTheta lambda_indef(std::int64_t s, std::int64_t t, const DirichletCharacter& chi,
                             const DirichletCharacter& psi, int nu, std::int64_t T);

/// The double sum alone; chi, psi odd.
IndefiniteTheta delta_indef(std::int64_t s, std::int64_t t, const DirichletCharacter& chi,
                            const DirichletCharacter& psi, int nu, std::int64_t T);

/// Split of one orbit-path coefficient at a cutoff m <= m_max, all values
/// relative to the common sqrt(outer) factor.
struct OrbitWindow {
  std::int64_t outer = 1;
  QuadExt total;       ///< closed form
  QuadExt enumerated;  ///< terms with m <= m_max
  QuadExt tail;        ///< total - enumerated, computed from the remaining orbit tails
  double tail_bound = 0;  ///< sum over orbits of |first omitted term| / (1 - eps^{-(2nu+1)})
  std::size_t enumerated_terms = 0;
};

/// Requires s t not a perfect square.
OrbitWindow orbit_window(std::int64_t s, std::int64_t t, const DirichletCharacter& chi,
                         const DirichletCharacter& psi, int nu, std::int64_t r, std::int64_t m_max);

}  // namespace qrel
