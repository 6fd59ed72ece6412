#pragma once

#include <complex>
#include <vector>

#include "braidnorm/link_params.hpp"
#include "braidnorm/rational.hpp"

namespace braidnorm {

using Complex = std::complex<double>;

// The (sum, product) chart of unordered pairs of complex numbers: the pair
// is the root multiset of X^2 - aX + b. The diagonal is b = a^2/4.
struct ChartPoint {
  Complex a;
  Complex b;
};

ChartPoint to_chart(Complex x_minus, Complex x_plus);

// a^2 - 4b; vanishes exactly on the diagonal.
Complex discriminant(const ChartPoint& pt);

// A tangent vector in the chart.
struct ChartTangent {
  Complex da;
  Complex db;
};

// Sign of the 4x4 real determinant with columns du_s, du_t, (1, a/2),
// (i, ia/2), each complex pair split into real and imaginary parts.
// Returns +1 or -1, or 0 when the determinant is negligible against the
// column magnitudes (non-transverse data).
int transversality_sign(const ChartTangent& du_s, const ChartTangent& du_t,
                        Complex a);

// A map [0,1]^2 -> Sym^2(C) sampled on an (m+1) x (n+1) grid of chart
// points; node (i, j) sits at (s, t) = (i/m, j/n). Between nodes the map is
// the bilinear interpolant of a and b.
struct Homotopy {
  int m = 0;  // cells in the s direction
  int n = 0;  // cells in the t direction
  std::vector<ChartPoint> grid;  // row-major, index i*(n+1) + j

  const ChartPoint& at(int i, int j) const { return grid[static_cast<size_t>(i) * (n + 1) + j]; }
  ChartPoint& at(int i, int j) { return grid[static_cast<size_t>(i) * (n + 1) + j]; }
  ChartPoint sample(double s, double t) const;
};

// Throws std::invalid_argument unless m, n >= 1 and the grid has
// (m+1)*(n+1) entries.
void validate(const Homotopy& h);

struct IntersectionRecord {
  int cell_i;
  int cell_j;
  double s;
  double t;
  int sign;
};

struct IntersectionCount {
  std::vector<IntersectionRecord> records;  // sorted by cell, then location
  long long total = 0;                      // sum of signs
};

// Locates the zeros of the discriminant field by per-cell winding and
// recursive cell subdivision down to diameter < tol (in the (s,t) square),
// then assigns each zero the Jacobian sign of (s,t) -> discriminant via
// central differences. The 4x4 determinant sign is evaluated at every zero
// and must agree. Throws on zeros on (or numerically near) the grid
// boundary, and on cells whose winding cannot be resolved into simple
// zeros (non-transverse or clustered intersections).
IntersectionCount signed_intersections(const Homotopy& h, double tol = 1e-9);

// Winding number of the discriminant around the grid boundary, from
// principal argument increments between consecutive boundary nodes.
// Throws if a node is numerically on the diagonal or an increment exceeds
// pi/2 (undersampled boundary). Equals the signed intersection total.
int boundary_winding(const Homotopy& h);

// (a, b) = (0, -(sigma + i tau)) with sigma, tau running affinely over
// [-1, 1]: the two strands are the square roots of sigma + i tau. One
// positive transverse diagonal crossing at the centre.
Homotopy elementary_model(int m, int n);

// Contraction of a half-twist: (a, b) = (0, -c(s,t)) with
// c(s,t) = (1-s) e^{2 pi i t} + s - 1/2, so the strand pair is the two
// square roots of c. The single discriminant zero sits at (3/4, 1/2).
Homotopy sigma_contraction_model(int m, int n);

// Action difference of a capping with signed diagonal count n_delta and
// per-boundary disc windings m:
//   ( eta_diff * n_delta + sum_j m[j] (s_{2,j} - s_{1,j}) ) / (k+g).
// m must have p entries.
Rational action_difference(const LinkParams& params, const WeightPair& pair,
                           long long n_delta, const std::vector<long long>& m);

}  // namespace braidnorm
