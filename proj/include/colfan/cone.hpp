#pragma once

// Rational polyhedral cones in double-description form.

#include "colfan/linalg.hpp"

#include <vector>

namespace colfan {

/// A rational polyhedral cone in Q^n, stored canonically in both
/// representations.
///
/// Canonical form:
///  - lineality(): rref basis of the largest linear subspace L in the cone,
///    rows scaled to primitive integer vectors;
///  - rays(): extreme rays modulo L, each represented by its orthogonal
///    projection onto L^perp, primitive, sorted lexicographically;
///  - equations(): canonical basis of the annihilator of span(cone);
///  - facets(): facet normals, each projected into span(cone), primitive, sorted.
///
/// Two cones are equal as point sets iff these fields agree, so operator== is
/// structural.
class Cone {
 public:
  /// The zero cone of the given ambient dimension.
  explicit Cone(std::size_t ambient_dim = 0);

  static Cone from_generators(const std::vector<RatVec>& gens, std::size_t ambient_dim);
  static Cone from_inequalities(const std::vector<RatVec>& ineqs, std::size_t ambient_dim);
  static Cone whole_space(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  /// Dimension of the linear span of the cone.
  std::size_t dim() const { return ambient_dim_ - equations_.size(); }

  const std::vector<RatVec>& rays() const { return rays_; }
  const std::vector<RatVec>& lineality() const { return lineality_; }
  const std::vector<RatVec>& facets() const { return facets_; }
  const std::vector<RatVec>& equations() const { return equations_; }

  /// Every supporting functional in canonical order: facets, then each
  /// equation and its negation.
  std::vector<RatVec> inequalities() const;
  /// Rays followed by +/- each lineality basis vector; generates the cone.
  std::vector<RatVec> generators() const;

  bool is_strictly_convex() const { return lineality_.empty(); }
  bool is_zero() const { return rays_.empty() && lineality_.empty(); }

  bool contains(const RatVec& v) const;
  bool contains(const Cone& other) const;
  bool in_relative_interior(const RatVec& v) const;
  RatVec interior_point() const;

  friend bool operator==(const Cone&, const Cone&) = default;
  /// Orders cones by (dim, rays, lineality); used only for deterministic output.
  friend bool operator<(const Cone& a, const Cone& b);

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<RatVec> rays_;
  std::vector<RatVec> lineality_;
  std::vector<RatVec> facets_;
  std::vector<RatVec> equations_;
};

/// Output of the double-description conversion {x : A x >= 0} -> generators.
struct DoubleDescription {
  std::vector<RatVec> lineality;  // basis of ker A
  std::vector<RatVec> rays;       // extreme rays modulo the lineality space
};

/// Incremental double-description method with rank-test adjacency.
DoubleDescription double_description(const std::vector<RatVec>& ineqs, std::size_t ambient_dim);

std::vector<Cone> faces(const Cone& c);
bool is_face_of(const Cone& face, const Cone& c);
Cone intersect(const Cone& a, const Cone& b);
Cone image(const Cone& c, const RatMat& m);

std::string to_string(const Cone& c);

}  // namespace colfan
