#include "qrel/piscalar.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qrel {

HalfInt HalfInt::parse(const std::string& text) {
  const Rational v = Rational::parse(text);
  const Rational twice = v * Rational(2);
  if (!twice.is_integer() || !twice.num().fits_sint_p())
    throw std::invalid_argument("HalfInt: '" + text + "' is not a half-integer");
  return HalfInt{static_cast<int>(twice.num().get_si())};
}

std::string HalfInt::str() const {
  return is_integer() ? std::to_string(twice / 2) : std::to_string(twice) + "/2";
}

double PiScalar::to_double() const {
  return r.to_double() * std::pow(std::numbers::pi, e / 2.0);
}

std::string PiScalar::str() const {
  if (r.is_zero() || e == 0) return r.str();
  std::string pi;
  if (e == 1)
    pi = "sqrt(pi)";
  else if (e == 2)
    pi = "pi";
  else if (e % 2 == 0)
    pi = "pi^" + std::to_string(e / 2);
  else
    pi = "pi^(" + std::to_string(e) + "/2)";
  return r.str() + "*" + pi;
}

PiScalar& PiScalar::operator+=(const PiScalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  if (e != o.e)
    throw std::domain_error("PiScalar: adding pi^(" + std::to_string(e) + "/2) and pi^(" +
                            std::to_string(o.e) + "/2)");
  r += o.r;
  return *this;
}

PiScalar& PiScalar::operator-=(const PiScalar& o) { return *this += -o; }

std::ostream& operator<<(std::ostream& os, const PiScalar& x) { return os << x.str(); }
std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.str(); }

}  // namespace qrel
