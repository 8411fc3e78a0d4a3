#include "tsb/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "tsb/error.hpp"
#include "tsb/linalg.hpp"

namespace tsb {
namespace {

// y = K x with K = A - A^T: (Kx)_i = sum over out-neighbors minus sum over
// in-neighbors.
void skew_apply(const Digraph& g, const std::vector<double>& x,
                std::vector<double>& y) {
  const int v = g.order();
  const int words = g.words_per_row();
  y.assign(v, 0.0);
  for (int i = 0; i < v; ++i) {
    double acc = 0.0;
    auto out = g.out_row(i);
    auto in = g.in_row(i);
    for (int w = 0; w < words; ++w) {
      std::uint64_t bits = out[w];
      while (bits) {
        acc += x[w * 64 + std::countr_zero(bits)];
        bits &= bits - 1;
      }
      bits = in[w];
      while (bits) {
        acc -= x[w * 64 + std::countr_zero(bits)];
        bits &= bits - 1;
      }
    }
    y[i] = acc;
  }
}

std::vector<double> characteristic_vector(const VertexSet& set) {
  std::vector<double> chi(set.universe(), 0.0);
  for (int x = 0; x < set.universe(); ++x) {
    if (set.contains(x)) chi[x] = 1.0;
  }
  return chi;
}

double norm2(const std::vector<double>& re, const std::vector<double>& im) {
  double acc = 0.0;
  for (std::size_t i = 0; i < re.size(); ++i) {
    acc += re[i] * re[i] + im[i] * im[i];
  }
  return acc;
}

}  // namespace

void seidel_action(const Digraph& g, const std::vector<double>& re,
                   const std::vector<double>& im, std::vector<double>& out_re,
                   std::vector<double>& out_im) {
  const std::size_t v = static_cast<std::size_t>(g.order());
  if (re.size() != v || im.size() != v) {
    throw InputError("vector dimension does not match the digraph order");
  }
  // S = i K, so S (re + i im) = -K im + i K re.
  std::vector<double> kre, kim;
  skew_apply(g, re, kre);
  skew_apply(g, im, kim);
  for (double& x : kim) x = -x;
  out_re = std::move(kim);
  out_im = std::move(kre);
}

void apply_projector(const Digraph& g, double target,
                     const std::vector<double>& others,
                     const std::vector<double>& input,
                     std::vector<double>& out_re,
                     std::vector<double>& out_im) {
  const std::size_t v = static_cast<std::size_t>(g.order());
  if (input.size() != v) {
    throw InputError("vector dimension does not match the digraph order");
  }
  // Apply the farthest factors first so each step contracts toward the
  // target eigenspace before the small denominators appear.
  std::vector<double> taus = others;
  std::sort(taus.begin(), taus.end(), [&](double a, double b) {
    return std::abs(target - a) > std::abs(target - b);
  });

  std::vector<double> re = input, im(v, 0.0), sre, sim;
  for (double tau : taus) {
    const double d = target - tau;
    seidel_action(g, re, im, sre, sim);
    for (std::size_t i = 0; i < v; ++i) {
      re[i] = (sre[i] - tau * re[i]) / d;
      im[i] = (sim[i] - tau * im[i]) / d;
    }
  }
  out_re = std::move(re);
  out_im = std::move(im);
}

std::vector<double> SeidelSpectrum::expanded() const {
  std::vector<double> out;
  out.reserve(v);
  for (const auto& c : classes) {
    for (int i = 0; i < c.multiplicity; ++i) out.push_back(c.value);
  }
  return out;
}

std::vector<double> SeidelSpectrum::distinct() const {
  std::vector<double> out;
  out.reserve(classes.size());
  for (const auto& c : classes) out.push_back(c.value);
  return out;
}

double SeidelSpectrum::max_main() const {
  for (const auto& c : classes) {
    if (c.main) return c.value;
  }
  throw NumericError("spectrum has no main eigenvalue");
}

bool SeidelSpectrum::has_non_main() const {
  for (const auto& c : classes) {
    if (!c.main) return true;
  }
  return false;
}

double SeidelSpectrum::max_non_main() const {
  for (const auto& c : classes) {
    if (!c.main) return c.value;
  }
  throw NumericError("spectrum has no non-main eigenvalue");
}

SeidelSpectrum SeidelSpectrum::doubly_regular(int v) {
  if (v < 3 || v % 4 != 3) {
    throw InputError("doubly regular tournaments need v = 3 (mod 4), got " +
                     std::to_string(v));
  }
  const double root = std::sqrt(static_cast<double>(v));
  const int half = (v - 1) / 2;
  SeidelSpectrum s;
  s.v = v;
  s.classes = {{root, half, 0.0, false},
               {0.0, 1, 1.0, true},
               {-root, half, 0.0, false}};
  return s;
}

SeidelSpectrum spectrum(const Digraph& g) {
  const int v = g.order();
  const int words = g.words_per_row();

  // Gram matrix K^T K = -K^2; its eigenvalues are the squared eigenvalues
  // of S.  Entry (x, y) counts signed co-neighborhoods and is computed
  // bitwise.
  std::vector<double> gram(static_cast<std::size_t>(v) * v, 0.0);
  for (int x = 0; x < v; ++x) {
    auto out_x = g.out_row(x);
    auto in_x = g.in_row(x);
    for (int y = x; y < v; ++y) {
      auto out_y = g.out_row(y);
      auto in_y = g.in_row(y);
      long long acc = 0;
      for (int w = 0; w < words; ++w) {
        acc += std::popcount(in_x[w] & in_y[w]);
        acc -= std::popcount(in_x[w] & out_y[w]);
        acc -= std::popcount(out_x[w] & in_y[w]);
        acc += std::popcount(out_x[w] & out_y[w]);
      }
      gram[static_cast<std::size_t>(x) * v + y] = static_cast<double>(acc);
      gram[static_cast<std::size_t>(y) * v + x] = static_cast<double>(acc);
    }
  }
  const std::vector<double> mu = symmetric_eigenvalues(std::move(gram), v);

  // Exact zero multiplicity: v - rank(K) over the integers.
  std::vector<mpz_class> k(static_cast<std::size_t>(v) * v, 0);
  for (int x = 0; x < v; ++x) {
    for (int y = 0; y < v; ++y) {
      if (g.edge(x, y)) {
        k[static_cast<std::size_t>(x) * v + y] = 1;
        k[static_cast<std::size_t>(y) * v + x] = -1;
      }
    }
  }
  const int zero_mult = v - integer_rank(std::move(k), v, v);

  const int nonzero = v - zero_mult;
  std::vector<double> sigma(nonzero);
  for (int i = 0; i < nonzero; ++i) {
    sigma[i] = std::sqrt(std::max(0.0, mu[i]));
  }

  const double radius = sigma.empty() ? 0.0 : sigma.front();
  const double tol = kEigenvalueGroupTol * std::max(1.0, radius);
  if (!sigma.empty() && sigma.back() <= 10.0 * tol) {
    throw NumericError(
        "nonzero eigenvalues too close to zero to separate from the exact "
        "kernel");
  }

  // Group the nonzero singular values; each group collects whole +-theta
  // pairs, so its size must be even.
  SeidelSpectrum spec;
  spec.v = v;
  std::vector<EigenvalueClass> positive;
  for (int i = 0; i < nonzero;) {
    int j = i + 1;
    while (j < nonzero && sigma[j - 1] - sigma[j] <= tol) ++j;
    const int count = j - i;
    if (count % 2 != 0) {
      throw NumericError(
          "eigenvalue pairing failed: a nonzero eigenvalue group has odd "
          "size " +
          std::to_string(count));
    }
    double mean = 0.0;
    for (int t = i; t < j; ++t) mean += sigma[t];
    mean /= count;
    positive.push_back({mean, count / 2, 0.0, false});
    i = j;
  }

  spec.classes = positive;
  if (zero_mult > 0) spec.classes.push_back({0.0, zero_mult, 0.0, false});
  for (auto it = positive.rbegin(); it != positive.rend(); ++it) {
    spec.classes.push_back({-it->value, it->multiplicity, 0.0, false});
  }

  // Main angles: beta = ||E_theta 1|| / sqrt(v) via the interpolating
  // projector applied to the all-ones vector.
  const std::vector<double> values = spec.distinct();
  const std::vector<double> ones(v, 1.0);
  std::vector<double> pre, pim;
  for (auto& cls : spec.classes) {
    std::vector<double> others;
    others.reserve(values.size() - 1);
    for (double t : values) {
      if (t != cls.value) others.push_back(t);
    }
    apply_projector(g, cls.value, others, ones, pre, pim);
    cls.main_angle = std::sqrt(norm2(pre, pim) / v);
    cls.main = cls.main_angle > kMainAngleTol;
  }
  return spec;
}

double quadratic_form_main(const Digraph& g, const SeidelSpectrum& spec,
                           const VertexSet& set) {
  if (set.universe() != g.order() || spec.v != g.order()) {
    throw InputError("vertex set or spectrum does not match the digraph");
  }
  const std::vector<double> chi = characteristic_vector(set);
  const std::vector<double> values = spec.distinct();
  std::vector<double> pre, pim;
  double acc = 0.0;
  for (const auto& cls : spec.classes) {
    if (!cls.main) continue;
    std::vector<double> others;
    others.reserve(values.size() - 1);
    for (double t : values) {
      if (t != cls.value) others.push_back(t);
    }
    apply_projector(g, cls.value, others, chi, pre, pim);
    acc += norm2(pre, pim);
  }
  return acc;
}

double quadratic_form_skew(const Digraph& g, const VertexSet& set) {
  if (set.universe() != g.order()) {
    throw InputError("vertex set does not match the digraph");
  }
  const int v = g.order();
  const int words = g.words_per_row();
  auto sw = set.words();
  double acc = 0.0;
  for (int x = 0; x < v; ++x) {
    auto out = g.out_row(x);
    auto in = g.in_row(x);
    long long diff = 0;
    for (int w = 0; w < words; ++w) {
      diff += std::popcount(out[w] & sw[w]);
      diff -= std::popcount(in[w] & sw[w]);
    }
    acc += static_cast<double>(diff) * static_cast<double>(diff);
  }
  return acc;
}

}  // namespace tsb
