#include <sstream>
#include <string>

#include "qrel/qseries.hpp"

namespace qrel {

QESeries to_quad(const RSeries& f) {
  QESeries r(f.trunc());
  for (const auto& [n, c] : f.terms()) r.set(n, QuadExt(c));
  return r;
}

void write_csv(std::ostream& os, const RSeries& f) {
  for (std::int64_t n = 0; n <= f.trunc(); ++n) {
    const Rational c = f.coeff(n);
    os << n << ',' << c.num().get_str() << ',' << c.den().get_str() << '\n';
  }
}

void write_csv(std::ostream& os, const QESeries& f) {
  for (std::int64_t n = 0; n <= f.trunc(); ++n) {
    const QuadExt c = f.coeff(n);
    os << n << ',' << c.a().num().get_str() << ',' << c.a().den().get_str() << ','
       << c.b().num().get_str() << ',' << c.b().den().get_str() << ',' << c.D() << '\n';
  }
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

template <class S, class Parse>
QSeries<S> read_lines(std::istream& is, std::size_t width, Parse parse) {
  std::map<std::int64_t, S> rows;
  std::int64_t max_n = -1;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split_fields(line);
    if (fields.size() != width)
      throw std::invalid_argument("CSV: expected " + std::to_string(width) + " fields in '" +
                                  line + "'");
    const std::int64_t n = std::stoll(fields[0]);
    if (n < 0) throw std::invalid_argument("CSV: negative exponent in '" + line + "'");
    rows[n] = parse(fields);
    max_n = std::max(max_n, n);
  }
  if (max_n < 0) throw std::invalid_argument("CSV: no coefficient lines");
  QSeries<S> f(max_n);
  for (const auto& [n, c] : rows) f.set(n, c);
  return f;
}

Rational fraction(const std::string& num, const std::string& den) {
  return Rational(BigInt(num, 10), BigInt(den, 10));
}

}  // namespace

RSeries read_csv_rational(std::istream& is) {
  return read_lines<Rational>(is, 3, [](const auto& f) { return fraction(f[1], f[2]); });
}

QESeries read_csv_quad(std::istream& is) {
  return read_lines<QuadExt>(is, 6, [](const auto& f) {
    return QuadExt(fraction(f[1], f[2]), fraction(f[3], f[4]), std::stoll(f[5]));
  });
}

}  // namespace qrel
