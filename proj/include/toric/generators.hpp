#ifndef TORIC_GENERATORS_HPP
#define TORIC_GENERATORS_HPP

// Named fans used as fixtures by the tests and the `gen` command.

#include "toric/fan.hpp"

#include <string>
#include <vector>

namespace toric {

/// Rays, maximal cones and an optional rebase matrix, ready for build_fan or
/// serialization.
struct FanData {
  int rank = 0;
  std::vector<IntVector> rays;
  std::vector<std::vector<int>> max_cones;
  std::optional<IntMatrix> rebase;
};

Fan make_fan(const FanData& data);

FanData projective_space_data(int n);
FanData product_of_p1_data(int copies);
/// v1 = (1,0), v2 = (0,1), v3 = (-1,m), v4 = (0,-1).
FanData hirzebruch_data(int m);
FanData hypersimplex_data(int k, int n);
/// Fan over the faces of the cube (±1,±1,±1) in the lattice x ≡ y ≡ z mod 2,
/// with (1,1,1) replaced by (1,1,2k+1); k = 0 keeps the cube. Rays are given
/// in cube coordinates together with the rebase matrix.
FanData cube_fan_data(int k);
/// Normal fan of the pyramid with apex (0,0,1) over the base
/// (2,1,-1), (1,-1,-1), (-3,-2,-1), (-1,1,-1).
FanData pyramid_fan_data();
/// Star subdivision of the projective plane at (1,1).
FanData blown_up_plane_data();

/// Dispatch on a name such as "p2", "hirzebruch", "hypersimplex".
FanData generate(const std::string& name, const std::vector<int>& params);

}  // namespace toric

#endif  // TORIC_GENERATORS_HPP
