#include "distspec/fixtures.hpp"

#include <stdexcept>

namespace dspec {

namespace {

struct RawFixture {
  const char* label;
  int which;
  double expected;
  std::vector<std::vector<long>> rows;
};

const std::vector<RawFixture>& raw_fixtures() {
  static const std::vector<RawFixture> data = {
#include "lemma32_data.inc"
  };
  return data;
}

}  // namespace

const std::vector<FixtureMatrix>& lemma32_matrices() {
  static const std::vector<FixtureMatrix> fixtures = [] {
    std::vector<FixtureMatrix> out;
    for (const auto& raw : raw_fixtures())
      out.push_back({raw.label, raw.which, raw.expected, IntMatrix::from_rows(raw.rows)});
    return out;
  }();
  return fixtures;
}

const std::vector<Table2Row>& table2_rows() {
  static const std::vector<Table2Row> rows = {
      {2, 2, 2, 2, -2.3956}, {2, 2, 2, 3, -2.3810}, {2, 2, 3, 2, -3.0586}, {2, 2, 3, 3, -2.6028},
      {2, 3, 2, 2, -3.0586}, {2, 3, 2, 3, -3.1163}, {2, 3, 3, 2, -3.4142}, {2, 3, 3, 3, -3.1014},
      {3, 2, 2, 2, -2.3810}, {3, 2, 2, 3, -3.1436}, {3, 2, 3, 2, -3.1163}, {3, 2, 3, 3, -3.2798},
      {3, 3, 2, 2, -2.6028}, {3, 3, 2, 3, -3.2798}, {3, 3, 3, 2, -3.1014}, {3, 3, 3, 3, -3.4142},
  };
  return rows;
}

IntMatrix table2_matrix(const Table2Row& r) {
  return IntMatrix::from_rows({{0, 1, 2, 3, r.d1},
                               {1, 0, 1, 2, r.d2},
                               {2, 1, 0, 1, r.d3},
                               {3, 2, 1, 0, r.d4},
                               {r.d1, r.d2, r.d3, r.d4, 0}});
}

namespace {

IntPoly bracket(std::vector<BigInt> coeffs_desc) {
  std::vector<BigInt> asc(coeffs_desc.rbegin(), coeffs_desc.rend());
  return IntPoly(std::move(asc));
}

IntPoly xp1_pow(long e) { return IntPoly{1, 1}.pow(static_cast<int>(e)); }
IntPoly xp2_pow(long e) { return IntPoly{2, 1}.pow(static_cast<int>(e)); }

}  // namespace

IntPoly table3_phi(const FamilyDescriptor& fd) {
  if (!structurally_valid(fd))
    throw std::invalid_argument("table3_phi: descriptor violates structural minimums");
  const auto& p = fd.params;
  BigInt a = p[0];
  BigInt b = p.size() > 1 ? p[1] : 0;
  BigInt c = p.size() > 2 ? p[2] : 0;
  BigInt d = p.size() > 3 ? p[3] : 0;
  switch (fd.id) {
    case FamilyId::I1: {
      BigInt n = a;
      return bracket({1, -n + 1}) * xp1_pow(p[0] - 1);
    }
    case FamilyId::I2:
      return xp1_pow(p[0] - 1) * xp2_pow(p[1] - 1) *
             bracket({1, 3 - 2 * b - a, -2 * a - 2 * b + a * b + 2});
    case FamilyId::I3:
      return xp1_pow(p[0] + p[1] + p[2] - 3) *
             bracket({1, 3 - b - c - a, 3 - 2 * b - 2 * c - 3 * b * c - 2 * a,
                      -a - b - c - 3 * b * c + a * b * c + 1});
    case FamilyId::I4:
      return xp1_pow(p[0] + p[1] - 2) * xp2_pow(p[2] - 1) *
             bracket({1, 4 - b - 2 * c - a, a * c - 3 * b - 4 * c - 3 * a - 2 * b * c + 5,
                      -2 * a - 2 * b - 2 * c + a * c - 2 * b * c + a * b * c + 2});
    case FamilyId::I5:
      return xp2_pow(p[0] + p[1] - 2) *
             bracket({1, 4 - 2 * b - 2 * a, -4 * a - 4 * b + 3 * a * b + 4});
    case FamilyId::I6:
      return xp1_pow(p[1] + p[2] - 2) * xp2_pow(p[0] - 1) *
             bracket({1, 4 - b - c - 2 * a, a * b - 3 * b - 3 * c - 4 * a + a * c - 3 * b * c + 5,
                      -2 * a - 2 * b - 2 * c + a * b + a * c - 6 * b * c + 4 * a * b * c + 2});
    case FamilyId::I7:
      return xp1_pow(p[1] - 1) * xp2_pow(p[0] + p[2] - 2) *
             bracket({1, 5 - b - 2 * c - 2 * a,
                      a * b - 4 * b - 6 * c - 6 * a + 3 * a * c - 2 * b * c + 8,
                      -4 * a - 4 * b - 4 * c + 2 * a * b + 3 * a * c - 4 * b * c + 3 * a * b * c + 4});
    case FamilyId::J1:
      return xp1_pow(p[1] - 1) * xp2_pow(p[0] + p[2] + p[3] - 3) *
             bracket({1, 7 - b - 2 * c - 2 * d - 2 * a,
                      a * b - 6 * b - 10 * c - 10 * d - 10 * a - 5 * a * d + b * c - 2 * b * d +
                          3 * c * d + 18,
                      4 * a * b - 12 * b - 16 * c - 16 * d - 16 * a - 15 * a * d + 4 * b * c -
                          8 * b * d + 9 * c * d + 3 * a * b * d + 8 * a * c * d + 3 * b * c * d + 20,
                      -8 * a - 8 * b - 8 * c - 8 * d + 4 * a * b - 10 * a * d + 4 * b * c -
                          8 * b * d + 6 * c * d + 6 * a * b * d + 8 * a * c * d + 6 * b * c * d -
                          4 * a * b * c * d + 8});
    case FamilyId::J2:
      return xp1_pow(p[1] + p[2] - 2) * xp2_pow(p[0] + p[3] - 2) *
             bracket({1, 6 - b - c - 2 * d - 2 * a,
                      a * b - 5 * b - 5 * c - 8 * d - 8 * a - 2 * a * c - 5 * a * d - 2 * b * d +
                          c * d + 13,
                      3 * a * b - 8 * b - 8 * c - 10 * d - 10 * a - 6 * a * c - 10 * a * d -
                          6 * b * d + 3 * c * d + a * b * c + 3 * a * b * d + 3 * a * c * d +
                          b * c * d + 12,
                      -4 * a - 4 * b - 4 * c - 4 * d + 2 * a * b - 4 * a * c - 5 * a * d -
                          4 * b * d + 2 * c * d + 2 * a * b * c + 3 * a * b * d + 3 * a * c * d +
                          2 * b * c * d - a * b * c * d + 4});
    case FamilyId::J3:
      return xp1_pow(p[1] + p[3] - 2) * xp2_pow(p[0] + p[2] - 2) *
             bracket({1, 6 - b - 2 * c - d - 2 * a,
                      a * b - 5 * b - 8 * c - 5 * d - 8 * a - 7 * a * d + b * c - 3 * b * d +
                          c * d + 13,
                      3 * a * b - 8 * b - 10 * c - 8 * d - 10 * a - 21 * a * d + 3 * b * c -
                          12 * b * d + 3 * c * d + 4 * a * b * d + 8 * a * c * d + 4 * b * c * d + 12,
                      -4 * a - 4 * b - 4 * c - 4 * d + 2 * a * b - 14 * a * d + 2 * b * c -
                          12 * b * d + 2 * c * d + 8 * a * b * d + 8 * a * c * d + 8 * b * c * d -
                          4 * a * b * c * d + 4});
    case FamilyId::J4:
      return xp1_pow(p[2] + p[3] - 2) * xp2_pow(p[0] + p[1] - 2) *
             bracket({1, 6 - 2 * b - c - d - 2 * a,
                      3 * a * b - 8 * b - 5 * c - 5 * d - 8 * a - 2 * a * c - 7 * a * d + b * c -
                          2 * b * d + 13,
                      6 * a * b - 10 * b - 8 * c - 8 * d - 10 * a - 6 * a * c - 21 * a * d +
                          3 * b * c - 6 * b * d + 3 * a * b * c + 11 * a * b * d + a * c * d +
                          b * c * d + 12,
                      -4 * a - 4 * b - 4 * c - 4 * d + 3 * a * b - 4 * a * c - 14 * a * d +
                          2 * b * c - 4 * b * d + 3 * a * b * c + 11 * a * b * d + 2 * a * c * d +
                          2 * b * c * d - a * b * c * d + 4});
    case FamilyId::J5:
      return xp1_pow(p[1] + p[2] + p[3] - 3) * xp2_pow(p[0] - 1) *
             bracket({1, 5 - b - c - d - 2 * a,
                      a * b - 4 * b - 4 * c - 4 * d - 6 * a - 2 * a * c - 7 * a * d - 3 * b * d + 9,
                      2 * a * b - 5 * b - 5 * c - 5 * d - 6 * a - 4 * a * c - 14 * a * d -
                          9 * b * d + a * b * c + 4 * a * b * d + a * c * d + b * c * d + 7,
                      -2 * a - 2 * b - 2 * c - 2 * d + a * b - 2 * a * c - 7 * a * d - 6 * b * d +
                          a * b * c + 4 * a * b * d + a * c * d + 2 * b * c * d + 2});
    case FamilyId::J6:
      return xp1_pow(p[0] + p[1] + p[3] - 3) * xp2_pow(p[2] - 1) *
             bracket({1, 5 - b - 2 * c - d - a,
                      b * c - 4 * b - 6 * c - 4 * d - 2 * a * c - 8 * a * d - 4 * a - 3 * b * d +
                          c * d + 9,
                      2 * b * c - 5 * b - 6 * c - 5 * d - 4 * a * c - 24 * a * d - 5 * a -
                          9 * b * d + 2 * c * d + a * b * c + a * b * d + 9 * a * c * d +
                          4 * b * c * d + 7,
                      -2 * a - 2 * b - 2 * c - 2 * d - 2 * a * c - 16 * a * d + b * c - 6 * b * d +
                          c * d + a * b * c + 2 * a * b * d + 9 * a * c * d + 4 * b * c * d + 2});
    case FamilyId::J7:
      return xp1_pow(p[0] + p[1] + p[2] + p[3] - 4) *
             bracket({1, 4 - b - c - d - a,
                      6 - 3 * b - 3 * c - 3 * d - 3 * a * c - 8 * a * d - 3 * b * d - 3 * a,
                      a * b * c - 3 * b - 3 * c - 3 * d - 6 * a * c - 16 * a * d - 6 * b * d -
                          3 * a + a * b * d + a * c * d + b * c * d + 4,
                      -a - b - c - d - 3 * a * c - 8 * a * d - 3 * b * d + a * b * c + a * b * d +
                          a * c * d + b * c * d + a * b * c * d + 1});
    default:
      throw std::invalid_argument("table3_phi: no published formula for " +
                                  std::string(family_name(fd.id)));
  }
}

const std::vector<Fig2Fingerprint>& fig2_fingerprints() {
  static const std::vector<Fig2Fingerprint> figs = {
      {"F1", 5, 3, -0.3820, false}, {"F2", 5, 3, -0.9125, false}, {"F3", 5, 3, -0.7217, false},
      {"F4", 6, 5, -2.2223, false}, {"F5", 6, 5, -2.3589, false}, {"F6", 5, 3, -0.8284, true},
      {"F7", 5, 3, -0.7667, false},
  };
  return figs;
}

}  // namespace dspec
