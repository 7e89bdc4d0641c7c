#ifndef DISTSPEC_FAMILIES_HPP
#define DISTSPEC_FAMILIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "distspec/graph.hpp"
#include "distspec/intpoly.hpp"

namespace dspec {

// Families named by the characterization theorems. I1-I7 and J1-J7 are the
// diameter <= 2 join forms and the diameter-3 P4 products; the remaining ids
// are the extra shapes of the multiplicity theorems:
//   KST   = K_{s,t}               KCK = K_s^c v K_t     KABC = K_{a,b,c}
//   KKK   = (K_a^c v K_b^c) v K_c KJOIN = K_a v (K_b u K_c)
enum class FamilyId { I1, I2, I3, I4, I5, I6, I7, J1, J2, J3, J4, J5, J6, J7, KST, KCK, KABC, KKK, KJOIN };

struct FamilyDescriptor {
  FamilyId id;
  std::vector<int> params;
  bool operator==(const FamilyDescriptor& o) const = default;
};

int family_arity(FamilyId id);
const char* family_name(FamilyId id);
// Parameter arity matches and structural minimums hold.
bool structurally_valid(const FamilyDescriptor& fd);

// The labeled graph of the defining expression; throws std::invalid_argument
// on arity or minimum violations.
Graph build(const FamilyDescriptor& fd);

// Theorem 3.1 side conditions: I families always (given minimums), J1-J4 the
// enumerated parameter patterns, J5/J6 always, J7 the quartic constraint
// <= 0. Ids outside I1..J7 are not Theorem 3.1 families and return false.
bool thm31_admissible(const FamilyDescriptor& fd);

// sigma(a,b,c,d) = a+b+c+d-3ac-8ad-3bd-abc-abd-acd-bcd+abcd+1
BigInt j7_constraint(const std::vector<int>& params);

// All (id, params) whose defining expression reproduces g, via twin-quotient
// matching; ordered by id priority I1<...<I7<J1<...<J7<KST<KCK<KABC<KKK<KJOIN,
// then lexicographic parameters. recognize() is the front of the list.
std::vector<FamilyDescriptor> recognize_all(const Graph& g);
std::optional<FamilyDescriptor> recognize(const Graph& g);

enum class TheoremSet { thm31, thm41, thm42 };

// All descriptors of total order n admissible for the selected theorem
// (including its side conditions). One orientation per symmetric family;
// isomorphic duplicates across ids are allowed.
std::vector<FamilyDescriptor> enumerate_members(int n, TheoremSet which);

enum class EigenBucket { n_minus_1, n_minus_2, n_minus_3, other };
EigenBucket classify_eigencount(const Graph& g);
const char* bucket_name(EigenBucket b);

// Structural membership in the Theorem 4.1 / 4.2 family lists, with those
// theorems' parameter constraints.
bool thm41_member(const Graph& g);
bool thm42_member(const Graph& g);
// Theorem 3.1 membership per the spec's recognize-then-admissible rule.
bool thm31_member(const Graph& g);

// "I3[2,3,4]" syntax; parse throws std::invalid_argument on malformed input.
std::string to_string(const FamilyDescriptor& fd);
FamilyDescriptor parse_descriptor(const std::string& text);

}  // namespace dspec

#endif
