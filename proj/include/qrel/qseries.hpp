#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qrel/quadext.hpp"
#include "qrel/rational.hpp"

namespace qrel {

/// Largest truncation order v_op will produce.
inline constexpr std::int64_t kMaxTrunc = 10'000'000;

/// Truncated q-expansion sum_{0 <= n <= T} a(n) q^n with sparse storage.
///
/// Absent exponents are zero; zero coefficients are never stored.
template <class S>
class QSeries {
 public:
  using Scalar = S;

  QSeries() = default;
  explicit QSeries(std::int64_t trunc) : trunc_(trunc) {
    if (trunc < 0) throw std::invalid_argument("QSeries: negative truncation");
  }

  static QSeries from_dense(const std::vector<S>& coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("QSeries: empty coefficient list");
    QSeries f(static_cast<std::int64_t>(coeffs.size()) - 1);
    for (std::size_t n = 0; n < coeffs.size(); ++n) f.set(static_cast<std::int64_t>(n), coeffs[n]);
    return f;
  }

  std::int64_t trunc() const { return trunc_; }
  const std::map<std::int64_t, S>& terms() const { return terms_; }

  /// Coefficient of q^n; 0 for n < 0, throws std::out_of_range for n > T.
  S coeff(std::int64_t n) const {
    if (n > trunc_)
      throw std::out_of_range("QSeries: coefficient " + std::to_string(n) +
                              " beyond truncation " + std::to_string(trunc_));
    const auto it = terms_.find(n);
    return it == terms_.end() ? S{} : it->second;
  }
  S operator[](std::int64_t n) const { return coeff(n); }

  void set(std::int64_t n, const S& v) {
    check_index(n);
    if (is_zero(v))
      terms_.erase(n);
    else
      terms_[n] = v;
  }
  void add_to(std::int64_t n, const S& v) {
    check_index(n);
    auto [it, inserted] = terms_.try_emplace(n, v);
    if (!inserted) {
      it->second += v;
      if (is_zero(it->second)) terms_.erase(it);
    } else if (is_zero(v)) {
      terms_.erase(it);
    }
  }

  QSeries truncated(std::int64_t T) const {
    QSeries r(std::min(T, trunc_));
    for (auto it = terms_.begin(); it != terms_.end() && it->first <= r.trunc_; ++it)
      r.terms_.emplace_hint(r.terms_.end(), *it);
    return r;
  }

  std::vector<S> dense() const {
    std::vector<S> out(static_cast<std::size_t>(trunc_ + 1));
    for (const auto& [n, c] : terms_) out[static_cast<std::size_t>(n)] = c;
    return out;
  }

  friend bool operator==(const QSeries& f, const QSeries& g) {
    return f.trunc_ == g.trunc_ && f.terms_ == g.terms_;
  }

 private:
  void check_index(std::int64_t n) const {
    if (n < 0 || n > trunc_)
      throw std::out_of_range("QSeries: exponent " + std::to_string(n) + " outside [0, " +
                              std::to_string(trunc_) + "]");
  }

  std::int64_t trunc_ = 0;
  std::map<std::int64_t, S> terms_;
};

using RSeries = QSeries<Rational>;
using QESeries = QSeries<QuadExt>;

template <class S>
QSeries<S> add(const QSeries<S>& f, const QSeries<S>& g) {
  QSeries<S> r = f.truncated(g.trunc());
  for (const auto& [n, c] : g.terms()) {
    if (n > r.trunc()) break;
    r.add_to(n, c);
  }
  return r;
}

template <class S>
QSeries<S> scale(const S& c, const QSeries<S>& f) {
  QSeries<S> r(f.trunc());
  if (is_zero(c)) return r;
  for (const auto& [n, a] : f.terms()) r.set(n, c * a);
  return r;
}

template <class S>
QSeries<S> sub(const QSeries<S>& f, const QSeries<S>& g) {
  return add(f, scale(S(-1), g));
}

/// Cauchy product, truncated at min(T_f, T_g).
template <class S>
QSeries<S> mul(const QSeries<S>& f, const QSeries<S>& g) {
  const std::int64_t T = std::min(f.trunc(), g.trunc());
  const auto& a = f.terms().size() <= g.terms().size() ? f.terms() : g.terms();
  const auto& b = f.terms().size() <= g.terms().size() ? g.terms() : f.terms();
  QSeries<S> r(T);
  const double pairs = static_cast<double>(a.size()) * static_cast<double>(b.size());
  if (static_cast<double>(T + 1) <= 4.0 * pairs) {
    std::vector<S> acc(static_cast<std::size_t>(T + 1));
    std::vector<char> touched(static_cast<std::size_t>(T + 1), 0);
    for (const auto& [i, x] : a) {
      if (i > T) break;
      for (const auto& [j, y] : b) {
        if (i + j > T) break;
        acc[static_cast<std::size_t>(i + j)] += x * y;
        touched[static_cast<std::size_t>(i + j)] = 1;
      }
    }
    for (std::int64_t n = 0; n <= T; ++n)
      if (touched[static_cast<std::size_t>(n)]) r.set(n, acc[static_cast<std::size_t>(n)]);
  } else {
    for (const auto& [i, x] : a) {
      if (i > T) break;
      for (const auto& [j, y] : b) {
        if (i + j > T) break;
        r.add_to(i + j, x * y);
      }
    }
  }
  return r;
}

template <class S>
QSeries<S> one(std::int64_t T) {
  QSeries<S> r(T);
  r.set(0, S(1));
  return r;
}

/// f^m by repeated squaring.
template <class S>
QSeries<S> pow(const QSeries<S>& f, long m) {
  if (m < 0) throw std::invalid_argument("QSeries pow: negative exponent");
  QSeries<S> result = one<S>(f.trunc());
  QSeries<S> base = f;
  while (m > 0) {
    if (m & 1) result = mul(result, base);
    m >>= 1;
    if (m > 0) base = mul(base, base);
  }
  return result;
}

/// Multiplicative inverse; requires a nonzero constant term.
template <class S>
QSeries<S> inverse(const QSeries<S>& f) {
  const S c0 = f.coeff(0);
  if (is_zero(c0)) throw std::domain_error("QSeries inverse: zero constant term");
  const S inv0 = S(1) / c0;
  const std::int64_t T = f.trunc();
  std::vector<S> out(static_cast<std::size_t>(T + 1));
  out[0] = inv0;
  for (std::int64_t n = 1; n <= T; ++n) {
    S acc{};
    for (const auto& [k, c] : f.terms()) {
      if (k == 0) continue;
      if (k > n) break;
      acc += c * out[static_cast<std::size_t>(n - k)];
    }
    out[static_cast<std::size_t>(n)] = -(acc * inv0);
  }
  return QSeries<S>::from_dense(out);
}

/// D = q d/dq: a(n) -> n a(n).
template <class S>
QSeries<S> d_operator(const QSeries<S>& f) {
  QSeries<S> r(f.trunc());
  for (const auto& [n, c] : f.terms()) r.set(n, S(n) * c);
  return r;
}

/// D^k
template <class S>
QSeries<S> d_power(const QSeries<S>& f, long k) {
  QSeries<S> r(f.trunc());
  for (const auto& [n, c] : f.terms()) r.set(n, S(Rational(BigInt(n)).pow(k)) * c);
  return r;
}

/// U(N): a(n) -> a(Nn), truncation floor(T/N).
template <class S>
QSeries<S> u_op(const QSeries<S>& f, std::int64_t N) {
  if (N < 1) throw std::invalid_argument("u_op: N must be positive");
  QSeries<S> r(f.trunc() / N);
  for (const auto& [n, c] : f.terms())
    if (n % N == 0 && n / N <= r.trunc()) r.set(n / N, c);
  return r;
}

/// V(N): f(q) -> f(q^N), truncation min(N T, kMaxTrunc).
template <class S>
QSeries<S> v_op(const QSeries<S>& f, std::int64_t N) {
  if (N < 1) throw std::invalid_argument("v_op: N must be positive");
  const std::int64_t T = std::min(f.trunc() * N, std::max<std::int64_t>(kMaxTrunc, f.trunc()));
  QSeries<S> r(T);
  for (const auto& [n, c] : f.terms()) {
    if (n * N > T) break;
    r.set(n * N, c);
  }
  return r;
}

/// S_{N,r}: keep exponents n == r (mod N).
template <class S>
QSeries<S> sieve(const QSeries<S>& f, std::int64_t N, std::int64_t r) {
  if (N < 1) throw std::invalid_argument("sieve: N must be positive");
  r = ((r % N) + N) % N;
  QSeries<S> out(f.trunc());
  for (const auto& [n, c] : f.terms())
    if (n % N == r) out.set(n, c);
  return out;
}

/// a(n) -> w(n) a(n) for any function w: int64 -> scalar or integer.
template <class S, class W>
QSeries<S> twist_by(const QSeries<S>& f, W&& w) {
  QSeries<S> r(f.trunc());
  for (const auto& [n, c] : f.terms()) r.set(n, S(w(n)) * c);
  return r;
}

/// f tensor chi, for any character-like callable chi(n) -> int.
template <class S, class Chi>
QSeries<S> twist(const QSeries<S>& f, const Chi& chi) {
  return twist_by(f, [&](std::int64_t n) { return chi(n); });
}

template <class S>
QSeries<S> operator+(const QSeries<S>& f, const QSeries<S>& g) { return add(f, g); }
template <class S>
QSeries<S> operator-(const QSeries<S>& f, const QSeries<S>& g) { return sub(f, g); }
template <class S>
QSeries<S> operator*(const QSeries<S>& f, const QSeries<S>& g) { return mul(f, g); }

/// Converts a rational series to QuadExt coefficients.
QESeries to_quad(const RSeries& f);

/// q^{sum(d e)/24} prod_d prod_{n >= 1} (1 - q^{dn})^e, truncated at T.
/// Throws std::invalid_argument if sum(d e)/24 is not a nonnegative integer.
RSeries eta_product(const std::vector<std::pair<std::int64_t, std::int64_t>>& factors,
                    std::int64_t T);
/// prod_{n >= 1} (1 - q^n) from the pentagonal number theorem.
RSeries euler_product(std::int64_t T);

/// CSV lines "n,num,den" for every 0 <= n <= T.
void write_csv(std::ostream& os, const RSeries& f);
/// CSV lines "n,a_num,a_den,b_num,b_den,D" for every 0 <= n <= T.
void write_csv(std::ostream& os, const QESeries& f);
/// Reads "n,num,den" lines; truncation is the largest n seen.
RSeries read_csv_rational(std::istream& is);
/// Reads "n,a_num,a_den,b_num,b_den,D" lines.
QESeries read_csv_quad(std::istream& is);

}  // namespace qrel
