#pragma once

#include "quasidim/solver.hpp"

#include <optional>

namespace quasidim {

/// Inverse of a discrete homeomorphism. The image mesh (two triangles per
/// grid cell) is bucketed for point location; the barycentric preimage is
/// then polished by Newton steps on the bicubic interpolant of the map.
class MapInverter {
 public:
  explicit MapInverter(const QcMap& map);

  /// Preimage of w, or nullopt when w is not covered by the image mesh.
  std::optional<cplx> preimage(cplx w) const;

 private:
  std::optional<cplx> locate(cplx w) const;

  const QcMap* map_;
  GridSpec buckets_;
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> triangles_;  // cell index * 2 + half
};

/// outer o inner^{-1}, sampled on inner's grid. Samples whose preimage is
/// missing, or where outer cannot be evaluated, are NaN.
QcMap compose_inverse(const QcMap& outer, const QcMap& inner);

}  // namespace quasidim
