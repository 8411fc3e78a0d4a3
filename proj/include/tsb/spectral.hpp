#pragma once

#include <vector>

#include "tsb/digraph.hpp"
#include "tsb/vertex_set.hpp"

namespace tsb {

// Spectral data of the Hermitian matrix S = i(A - A^T) attached to a
// digraph.  K = A - A^T is real skew-symmetric, so S has real eigenvalues
// and the spectrum is symmetric about zero: theta and -theta occur with the
// same multiplicity.
//
// An eigenvalue is "main" when the all-ones vector has a nonzero component
// in its eigenspace; main_angle stores beta = ||E 1|| / sqrt(v) where E is
// the orthogonal projector onto the eigenspace.  The squares of the main
// angles over all classes sum to 1.
struct EigenvalueClass {
  double value = 0.0;       // representative eigenvalue of the class
  int multiplicity = 0;     // dimension of the eigenspace
  double main_angle = 0.0;  // beta in [0, 1]
  bool main = false;        // main_angle above kMainAngleTol
};

// Two eigenvalues are grouped into one class when they differ by at most
// kEigenvalueGroupTol * max(1, spectral radius).
inline constexpr double kEigenvalueGroupTol = 1e-7;

// beta at or below this threshold counts as non-main (exact zeros arise
// from symmetry and are computed to near machine precision).
inline constexpr double kMainAngleTol = 1e-7;

struct SeidelSpectrum {
  int v = 0;
  std::vector<EigenvalueClass> classes;  // sorted by value, descending

  // Eigenvalues repeated by multiplicity, descending (size v).
  std::vector<double> expanded() const;

  // Distinct class values, descending.
  std::vector<double> distinct() const;

  // Largest eigenvalue over main classes; throws NumericError if no class
  // is main (cannot happen for a correctly computed spectrum).
  double max_main() const;

  // Largest eigenvalue over non-main classes; call has_non_main() first.
  bool has_non_main() const;
  double max_non_main() const;

  // The spectrum every doubly regular tournament on v vertices has:
  // +-sqrt(v) with multiplicity (v-1)/2 each (non-main) and a simple main
  // eigenvalue 0 with beta = 1.  Requires v == 3 (mod 4).
  static SeidelSpectrum doubly_regular(int v);
};

// Full pipeline: eigenvalues obtained as +-sqrt(mu) over the eigenvalues mu
// of the real symmetric positive-semidefinite matrix K^T K = -K^2; the zero
// eigenvalue multiplicity is v - rank(K) with the rank computed exactly
// over the integers; main angles via projector interpolation applied to the
// all-ones vector.  Throws NumericError if the eigensolver fails or the
// +-pairing of nonzero eigenvalues breaks down.
SeidelSpectrum spectrum(const Digraph& g);

// One application of S to a complex vector held as separate real and
// imaginary parts: since S = i*K with K real,
//   out_re = -K im,   out_im = K re.
void seidel_action(const Digraph& g, const std::vector<double>& re,
                   const std::vector<double>& im, std::vector<double>& out_re,
                   std::vector<double>& out_im);

// Applies the interpolating projector onto the eigenspace of `target`,
//   E = prod_{tau in others} (S - tau I) / (target - tau),
// to a real input vector, where `others` holds the remaining distinct
// eigenvalues.  Factors are applied farthest tau first for stability.
void apply_projector(const Digraph& g, double target,
                     const std::vector<double>& others,
                     const std::vector<double>& input,
                     std::vector<double>& out_re, std::vector<double>& out_im);

// Quadratic form of the characteristic vector chi of `set` against the sum
// of eigenprojectors over main classes: sum_{main theta} ||E_theta chi||^2.
// For a regular digraph with one-dimensional kernel this equals s^2/v.
double quadratic_form_main(const Digraph& g, const SeidelSpectrum& spec,
                           const VertexSet& set);

// chi^T S S^* chi = ||K chi||^2, computed combinatorially: the entry of
// K chi at x is |out(x) /\ set| - |in(x) /\ set|.
double quadratic_form_skew(const Digraph& g, const VertexSet& set);

}  // namespace tsb
