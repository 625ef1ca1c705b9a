#pragma once

#include "vir/frobenius.hpp"

#include <Eigen/Dense>

#include <vector>

namespace vir {

/// Chebyshev nodes of the first kind mapped to [lo, hi], ascending.
std::vector<double> chebyshev_points(int count, double lo = 0.35, double hi = 0.65);

enum class Direction {
  ZeroToOne,  // basis_0[i] = sum_j F(i, j) basis_1[j]
  OneToZero,  // basis_1[i] = sum_j F(i, j) basis_0[j]
};

struct FusingMatrix {
  Eigen::MatrixXcd entries;
  double residual = 0;   // max relative mismatch at held-out points
  double condition = 0;  // of the least-squares design matrix
  std::vector<double> samples;
  std::vector<double> held_out;
};

/// Least-squares matching of the local bases at 0 and 1 using values and
/// derivatives at the samples. Empty samples select Chebyshev points in
/// [0.35, 0.65]; held-out points are Chebyshev points not among the samples.
/// Throws ErrorKind::Domain for samples outside (0, 1) or too few of them,
/// ErrorKind::Conditioning when the condition number exceeds 1e8.
FusingMatrix fusing_matrix(const ODESpec& ode, int order, const std::vector<double>& samples = {},
                           Direction direction = Direction::ZeroToOne);

/// Same, reusing bases that were already expanded.
FusingMatrix fusing_matrix(const ChannelBasis& from, const ChannelBasis& to, const std::vector<double>& samples = {});

/// Product-side values z1^t1 z2^t2 s_j(z2 / z1) for every solution s_j of the
/// reference-anchored product basis at 0 (principal branches).
std::vector<Complex> product_side(const CorrelatorSpec& spec, const ChannelBasis& basis0, Complex z1, Complex z2);

/// Largest relative mismatch, over the fusion-allowed channels, between the
/// product-side block and the iterate-side expansion (slot-2 equation in the
/// variable (z1 - z2) / z2) transported with the fusing matrix. Throws
/// ErrorKind::Domain unless |z1| > |z2| > |z1 - z2| > 0.
double associativity_residual(const CorrelatorSpec& spec, double z1, double z2, int order = 200);

struct AssociativityReport {
  double max_residual = 0;
  std::vector<double> z1_grid;
  std::vector<double> ratio_grid;  // z2 / z1
  int order = 0;
};

/// Residual over z1 in z1_grid and z2 = ratio * z1 for ratio in ratio_grid.
AssociativityReport associativity_sweep(const CorrelatorSpec& spec, const std::vector<double>& z1_grid,
                                        const std::vector<double>& ratio_grid, int order = 200);

struct BraidingPhase {
  Rational exponent;  // h_c - h_a - h_b
  Complex phase;      // exp(i pi exponent)
};

/// Throws ErrorKind::Fusion if N_{ab}^c = 0.
BraidingPhase braiding_phase(const MinimalModel& model, const KacLabel& a, const KacLabel& b, const KacLabel& c);

/// Continues every solution of a basis at 0 once around the circle |z| = radius
/// by numerical integration of the ODE and compares with exp(2 pi i rho) times
/// the starting data. Returns the largest relative mismatch.
double monodromy_check(const ODESpec& ode, const ChannelBasis& basis, double radius = 0.5);

/// Copy of the basis whose exponents are shifted, for negative controls.
ChannelBasis perturb_exponents(const ChannelBasis& basis, const Rational& shift);

struct CommutativityReport {
  double residual = 0;          // largest relative mismatch over allowed channels
  double reverse_residual = 0;  // same with the path run clockwise
  std::vector<Rational> exponents;  // exponents at 1 entering the phases
  double x = 0;
};

/// Fixes z2 = x and moves z1 = x + (1 - x) e^{i alpha}, alpha from 0 to pi, so
/// that z1 passes counterclockwise around z2 and ends at 2x - 1. The product
/// side is continued numerically and compared with the swapped expansion
/// transported by F diag(exp(i pi sigma_j)) F'^-1.
CommutativityReport commutativity_check(const CorrelatorSpec& spec, double x = 0.6, int order = 200);

/// Product of the per-factor blocks for a tensor-product model. Throws
/// ErrorKind::Shape when the factor data do not match the model.
EvaluationResult tensor_block(const TensorModel& model, const std::vector<CorrelatorSpec>& specs,
                              const TensorLabel& channel, Complex z, int order = 50);

}  // namespace vir
