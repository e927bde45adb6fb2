#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qrel/rational.hpp"

namespace qrel {

enum class Parity { Even, Odd };

/// Real Dirichlet character given by its value table modulo `modulus`.
class DirichletCharacter {
 public:
  /// values[r] = chi(r) for 0 <= r < modulus, each in {-1, 0, 1}. Checks
  /// complete multiplicativity and that chi vanishes exactly off the units.
  DirichletCharacter(std::int64_t modulus, std::vector<int> values, std::string name = {});

  /// The character mod 1 (chi(n) = 1 for every n, including 0).
  static DirichletCharacter trivial();

  int operator()(std::int64_t n) const;
  Rational value(std::int64_t n) const { return Rational((*this)(n)); }

  std::int64_t modulus() const { return modulus_; }
  std::int64_t conductor() const { return conductor_; }
  Parity parity() const { return parity_; }
  bool is_even() const { return parity_ == Parity::Even; }
  bool is_trivial() const { return conductor_ == 1; }
  const std::string& name() const { return name_; }

  /// Pointwise product, defined modulo lcm of the moduli.
  DirichletCharacter operator*(const DirichletCharacter& o) const;

 private:
  std::int64_t modulus_;
  std::vector<int> values_;
  std::int64_t conductor_ = 1;
  Parity parity_ = Parity::Even;
  std::string name_;
};

/// n -> (d/n) for a fundamental discriminant d (d = 1 gives the trivial character).
DirichletCharacter kronecker_character(std::int64_t d);

/// Parses "1"/"trivial", "chi5", "chi7", "chi4" or a fundamental discriminant
/// such as "5", "-4", "-7", "8". "chi7" is the real character mod 7, i.e. (-7/.).
DirichletCharacter character_from_name(const std::string& name);

}  // namespace qrel
