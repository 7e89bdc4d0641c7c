#ifndef DISTSPEC_CENSUS_HPP
#define DISTSPEC_CENSUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "distspec/families.hpp"
#include "distspec/graph.hpp"

#include "json.hpp"

namespace dspec {

using Json = nlohmann::ordered_json;

struct Disagreement {
  std::string graph6;
  std::string detail;
};

struct TheoremSection {
  std::string theorem;
  int checked = 0;
  int skipped_small = 0;  // below the theorem's order threshold
  int errors = 0;         // disconnected inputs, recorded and skipped
  std::vector<Disagreement> disagreements;
  bool pass() const { return disagreements.empty(); }
};

struct TableRow {
  std::string label;
  bool pass = false;
  double computed = 0;
  double expected = 0;
  std::string note;
};

struct FixtureRecovery {
  std::string label;
  double value = 0;
  std::vector<std::string> candidates;  // graph6 of every fingerprint match
  bool unique() const { return candidates.size() == 1; }
};

struct CospectralPair {
  std::string first, second;  // descriptor strings
  std::string poly;
};

// Spectral side (exact predicates) vs structural side (recognition +
// admissibility) of the characterization theorem, per graph. jobs > 1 runs
// the per-graph work OpenMP-parallel; the report is identical either way.
TheoremSection verify_theorem31(const std::vector<Graph>& graphs, int jobs = 1);
// Multiplicity buckets n-1 / n-2 vs the completeness / Theorem 4.1 lists.
TheoremSection verify_theorem41(const std::vector<Graph>& graphs, int jobs = 1);
// Bucket n-3 vs the Theorem 4.2 list.
TheoremSection verify_theorem42(const std::vector<Graph>& graphs, int jobs = 1);

std::vector<TableRow> verify_table1();
std::vector<TableRow> verify_table2();
std::vector<TableRow> verify_table3(int max_param_i, int max_param_j, int jobs = 1);

std::vector<FixtureRecovery> recover_forbidden_fixtures();

// Forbidden-subgraph check: no uniquely recovered fixture embeds in any
// generated Theorem 3.1 member with parameters <= max_param.
std::vector<TableRow> verify_forbidden(int max_param = 3);

std::vector<CospectralPair> cospectral_search(const std::vector<FamilyDescriptor>& descriptors,
                                              int jobs = 1);

Json section_json(const TheoremSection& s);
Json table_json(const std::vector<TableRow>& rows);
Json fixtures_json(const std::vector<FixtureRecovery>& f);
Json cospectral_json(const std::vector<CospectralPair>& pairs);

}  // namespace dspec

#endif
