#pragma once

#include <span>
#include <vector>

namespace hyperlaplace::geometry {

/// A point of the R-radius hypersphere S_R^d in standard hyperspherical
/// coordinates.
///
/// `polar` is the geodesic polar angle theta in [0, pi] measured from the
/// origin O = (R, 0, ..., 0). `direction` holds the d-1 angles of a point on
/// S^{d-1}, in canonical order:
///
///   direction[0]     = phi        in [0, 2 pi)
///   direction[k - 1] = alpha_k    in [0, pi],   k = 2 .. d-1
///
/// The embedding peels the chain from the outside in:
///   x_0 = R cos theta
///   x_1 = R sin theta cos alpha_{d-1}
///   x_2 = R sin theta sin alpha_{d-1} cos alpha_{d-2}
///   ...
///   x_{d-1} = R sin theta sin alpha_{d-1} ... sin alpha_2 cos phi
///   x_d     = R sin theta sin alpha_{d-1} ... sin alpha_2 sin phi
///
/// In the separation-angle product formula the angles are enumerated in the
/// opposite order: its i-th polar angle (i = 1 .. d-2) is alpha_{d-i}.
struct HyperPoint {
  int dimension = 2;
  double radius = 1.0;
  double polar = 0.0;
  std::vector<double> direction;

  /// Throws std::invalid_argument if dimension, radius or any angle range is
  /// violated, or direction.size() != dimension - 1.
  void validate() const;
};

struct SeparationAngle {
  double gamma;
};

/// Cartesian coordinates (x_0, ..., x_d) in the ambient space.
std::vector<double> embed(const HyperPoint& p);

/// Unit vector on S^{d-1} for a direction list (d-1 angles, canonical order).
std::vector<double> embed_direction(std::span<const double> direction);

/// Separation angle between two directions on S^{d-1} from the product
/// formula. The cosine is clamped to [-1, 1] before arccos.
SeparationAngle separation_angle(std::span<const double> u, std::span<const double> v,
                                 int dimension);

/// R arccos((x, x') / R^2) through the ambient embedding.
double geodesic_distance(const HyperPoint& a, const HyperPoint& b);

/// R arccos(cos theta cos theta' + sin theta sin theta' cos gamma), the
/// geodesic polar form.
double geodesic_distance_polar(const HyperPoint& a, const HyperPoint& b);

/// Density of dvol_g with respect to d theta d phi d alpha_2 ... d alpha_{d-1}:
/// R^d sin^{d-1} theta * prod_{k=2}^{d-1} sin^{k-1} alpha_k.
double volume_weight(const HyperPoint& p);

/// Closed-form volume of S_R^d: 2 pi^{(d+1)/2} R^d / Gamma((d+1)/2).
double hypersphere_volume(int dimension, double radius);

}  // namespace hyperlaplace::geometry
