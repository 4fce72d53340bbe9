#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "chyp/cake/word.hpp"

namespace chyp {

// The complex geodesic W C_k, represented by its polar point W p_k.
struct SliceLabel {
  Word word;
  int k = 1;  // 1..3

  std::string to_string() const;
  ProjVector<double> polar(const Realization& rz) const;
};

struct MappingCheck {
  std::string statement;
  bool expected = true;
  bool observed = false;
  bool ok() const { return expected == observed; }
};

// Slice identities (checked on polar points) and point identities (checked on
// the vertices c_k), all projectively, plus one identity that must fail.
std::vector<MappingCheck> verify_mapping_tables(const Realization& rz);

// One of the eight side pairings: `map` sends the side [source[0], source[1]]
// of triangle `source_triangle` onto [target[0], target[1]] of `target_triangle`.
struct IdentificationSpec {
  std::string name;
  Word map;
  std::string map_text;  // e.g. "W2 R3R2 W0^-1"
  std::array<SliceLabel, 2> source;
  std::array<SliceLabel, 2> target;
  int source_triangle = 0;
  int target_triangle = 0;
};

const std::vector<IdentificationSpec>& identification_specs();

struct IdentificationCheck {
  std::string name;
  double form_residual = 0.0;
  std::array<bool, 2> endpoints{};
  bool ok() const { return form_residual < 1e-9 && endpoints[0] && endpoints[1]; }
};

std::vector<IdentificationCheck> verify_identifications(const Realization& rz);

struct CakeTriangle {
  int index = 0;        // 1..16
  Word word;
  bool primed = false;  // built from the oppositely oriented copy of the base triangle
  bool counterclockwise() const { return primed == word.antilinear(); }
  std::array<SliceLabel, 3> vertices() const;
};

struct CakeSide {
  int from = 0;  // positions in the boundary cycle
  int to = 0;
};

struct CakePairing {
  std::string name;
  int source_side = 0;
  int target_side = 0;
};

struct CakeStructure {
  std::vector<CakeTriangle> triangles;
  std::vector<SliceLabel> boundary;  // cyclic order of boundary vertices
  std::vector<int> boundary_owner;   // triangle owning the side boundary[i] -> boundary[i+1]
  std::vector<CakePairing> pairings;
  std::vector<int> vertex_orbit;     // orbit index of each boundary vertex
  int orbit_count = 0;
  int edge_pairs = 0;
  int euler_characteristic = 0;
  int genus = 0;
  bool all_counterclockwise = false;
};

// Assembles the 16 triangles, the boundary cycle (the 12 triangles around C1
// with the four attached triangles spliced in), the pairing graph, and the
// vertex cycles. Slice equality is decided on the realized polar points.
// Throws std::logic_error when a declared side is not a boundary side or a
// side is paired twice.
CakeStructure build_cake(const Realization& rz);

void dump_cake(std::ostream& os, const CakeStructure& cake);

struct H5Check {
  std::array<double, 5> square_residuals{};
  std::array<bool, 5> linear{};
  double product_residual = 0.0;  // max | X5X4X3X2X1 - th^-2 Id |
  Complex<double> product_scalar;
  bool ok(double tol = 1e-10) const;
};

H5Check h5_presentation_check(const Realization& rz);

// Twelve sector angles at c1 (beta_1 at i = 1,6,7,12; beta_2 at 2,5,8,11;
// beta_3 at 3,4,9,10) and their total, which must be 2 pi.
struct SectorAngleCycle {
  std::array<double, 12> angles{};
  double total = 0.0;
};

SectorAngleCycle c1_sector_cycle(const Realization& rz);

}  // namespace chyp
