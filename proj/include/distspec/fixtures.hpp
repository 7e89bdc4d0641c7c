#ifndef DISTSPEC_FIXTURES_HPP
#define DISTSPEC_FIXTURES_HPP

#include <string>
#include <vector>

#include "distspec/families.hpp"
#include "distspec/intmatrix.hpp"
#include "distspec/intpoly.hpp"

namespace dspec {

// A forbidden principal-submatrix fixture: the matrix, which eigenvalue the
// source table reports (3 = third largest, 5 = second least), and the
// reported 4-decimal value.
struct FixtureMatrix {
  std::string label;
  int which;
  double expected;
  IntMatrix matrix;
};

// The 51 matrices of the forbidden-submatrix lemma with their table values.
const std::vector<FixtureMatrix>& lemma32_matrices();

struct Table2Row {
  int d1, d2, d3, d4;
  double expected;  // second least eigenvalue of the bordered P4 matrix
};
const std::vector<Table2Row>& table2_rows();
IntMatrix table2_matrix(const Table2Row& row);

// The published closed-form D-polynomial for an I/J family descriptor,
// expanded exactly.
IntPoly table3_phi(const FamilyDescriptor& fd);

// Fingerprints of the forbidden induced-subgraph fixtures F1-F7: order,
// which statistic (3 or 5), printed value, and for F6 the pinned structure.
struct Fig2Fingerprint {
  std::string label;
  int order;
  int which;
  double value;
  bool pinned_k221;  // F6 must also be K_{2,2,1}
};
const std::vector<Fig2Fingerprint>& fig2_fingerprints();

}  // namespace dspec

#endif
