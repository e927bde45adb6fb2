#include "qrel/character.hpp"

#include <numeric>
#include <stdexcept>

#include "qrel/integer_utils.hpp"

namespace qrel {

DirichletCharacter::DirichletCharacter(std::int64_t modulus, std::vector<int> values,
                                       std::string name)
    : modulus_(modulus), values_(std::move(values)), name_(std::move(name)) {
  if (modulus_ < 1 || static_cast<std::int64_t>(values_.size()) != modulus_)
    throw std::invalid_argument("DirichletCharacter: value table must have `modulus` entries");
  for (std::int64_t r = 0; r < modulus_; ++r) {
    const int v = values_[static_cast<std::size_t>(r)];
    const bool unit = std::gcd(r, modulus_) == 1;
    if (unit ? (v != 1 && v != -1) : v != 0)
      throw std::invalid_argument("DirichletCharacter: chi must be +-1 on units and 0 elsewhere");
  }
  for (std::int64_t x = 0; x < modulus_; ++x)
    for (std::int64_t y = 0; y < modulus_; ++y)
      if ((*this)(x * y) != (*this)(x) * (*this)(y))
        throw std::invalid_argument("DirichletCharacter: not multiplicative");
  parity_ = (*this)(-1) == 1 ? Parity::Even : Parity::Odd;

  // Smallest f | modulus such that chi is constant on units congruent mod f.
  for (const auto f : divisors(modulus_)) {
    bool induced = true;
    for (std::int64_t r = 0; r < modulus_ && induced; ++r) {
      if (std::gcd(r, modulus_) != 1) continue;
      for (std::int64_t s = r % f; s < modulus_; s += f)
        if (std::gcd(s, modulus_) == 1 && (*this)(s) != (*this)(r)) {
          induced = false;
          break;
        }
    }
    if (induced) {
      conductor_ = f;
      break;
    }
  }
  if (name_.empty()) name_ = "char mod " + std::to_string(modulus_);
}

DirichletCharacter DirichletCharacter::trivial() { return {1, {1}, "trivial"}; }

int DirichletCharacter::operator()(std::int64_t n) const {
  return values_[static_cast<std::size_t>(mod(n, modulus_))];
}

DirichletCharacter DirichletCharacter::operator*(const DirichletCharacter& o) const {
  const std::int64_t m = std::lcm(modulus_, o.modulus_);
  std::vector<int> v(static_cast<std::size_t>(m));
  for (std::int64_t r = 0; r < m; ++r) v[static_cast<std::size_t>(r)] = (*this)(r)*o(r);
  return {m, std::move(v), name_ + "*" + o.name_};
}

DirichletCharacter kronecker_character(std::int64_t d) {
  if (d == 1) return DirichletCharacter::trivial();
  const bool fundamental =
      (mod(d, 4) == 1 && squarefree_split(std::abs(d)).root == 1) ||
      (mod(d, 4) == 0 && (mod(d / 4, 4) == 2 || mod(d / 4, 4) == 3) &&
       squarefree_split(std::abs(d / 4)).root == 1);
  if (!fundamental)
    throw std::invalid_argument("kronecker_character: " + std::to_string(d) +
                                " is not a fundamental discriminant");
  const std::int64_t m = std::abs(d);
  std::vector<int> v(static_cast<std::size_t>(m));
  for (std::int64_t r = 0; r < m; ++r) v[static_cast<std::size_t>(r)] = kronecker(d, r);
  return {m, std::move(v), "(" + std::to_string(d) + "/.)"};
}

DirichletCharacter character_from_name(const std::string& name) {
  if (name == "1" || name == "trivial") return DirichletCharacter::trivial();
  if (name == "chi5") return kronecker_character(5);
  if (name == "chi7") return kronecker_character(-7);
  if (name == "chi4") return kronecker_character(-4);
  std::size_t pos = 0;
  std::int64_t d = 0;
  try {
    d = std::stoll(name, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != name.size())
    throw std::invalid_argument("unknown character '" + name + "'");
  return kronecker_character(d);
}

}  // namespace qrel
