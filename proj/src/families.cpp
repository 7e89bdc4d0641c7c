#include "distspec/families.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "distspec/spectral.hpp"

namespace dspec {

namespace {

struct Shape {
  FamilyId id;
  // one char per slot: 'K' clique part, 'I' independent part
  const char* tags;
  // quotient adjacency between slots, as index pairs
  std::vector<std::pair<int, int>> edges;
  std::vector<int> mins;
};

const std::vector<Shape>& catalog() {
  static const std::vector<Shape> shapes = {
      {FamilyId::I1, "K", {}, {4}},
      {FamilyId::I2, "KI", {{0, 1}}, {2, 1}},
      {FamilyId::I3, "KKK", {{0, 1}, {0, 2}}, {2, 2, 2}},
      {FamilyId::I4, "KKI", {{0, 1}, {0, 2}}, {2, 2, 1}},
      {FamilyId::I5, "II", {{0, 1}}, {1, 1}},
      {FamilyId::I6, "IKK", {{0, 1}, {0, 2}}, {1, 2, 2}},
      {FamilyId::I7, "IKI", {{0, 1}, {0, 2}}, {1, 2, 1}},
      {FamilyId::J1, "IKII", {{0, 1}, {1, 2}, {2, 3}}, {1, 1, 1, 1}},
      {FamilyId::J2, "IKKI", {{0, 1}, {1, 2}, {2, 3}}, {1, 1, 1, 1}},
      {FamilyId::J3, "IKIK", {{0, 1}, {1, 2}, {2, 3}}, {1, 1, 1, 1}},
      {FamilyId::J4, "IIKK", {{0, 1}, {1, 2}, {2, 3}}, {1, 1, 1, 1}},
      {FamilyId::J5, "IKKK", {{0, 1}, {1, 2}, {2, 3}}, {1, 1, 1, 1}},
      {FamilyId::J6, "KKIK", {{0, 1}, {1, 2}, {2, 3}}, {1, 1, 1, 1}},
      {FamilyId::J7, "KKKK", {{0, 1}, {1, 2}, {2, 3}}, {1, 1, 1, 1}},
      {FamilyId::KST, "II", {{0, 1}}, {1, 1}},
      {FamilyId::KCK, "IK", {{0, 1}}, {2, 2}},
      {FamilyId::KABC, "III", {{0, 1}, {0, 2}, {1, 2}}, {1, 1, 1}},
      {FamilyId::KKK, "IIK", {{0, 1}, {0, 2}, {1, 2}}, {2, 2, 2}},
      {FamilyId::KJOIN, "KKK", {{0, 1}, {0, 2}}, {1, 1, 1}},
  };
  return shapes;
}

const Shape& shape_of(FamilyId id) {
  for (const auto& s : catalog())
    if (s.id == id) return s;
  throw std::logic_error("shape_of: unknown id");
}

Graph part(char tag, int size) { return tag == 'K' ? complete(size) : edgeless(size); }

}  // namespace

int family_arity(FamilyId id) { return static_cast<int>(shape_of(id).mins.size()); }

const char* family_name(FamilyId id) {
  switch (id) {
    case FamilyId::I1: return "I1";
    case FamilyId::I2: return "I2";
    case FamilyId::I3: return "I3";
    case FamilyId::I4: return "I4";
    case FamilyId::I5: return "I5";
    case FamilyId::I6: return "I6";
    case FamilyId::I7: return "I7";
    case FamilyId::J1: return "J1";
    case FamilyId::J2: return "J2";
    case FamilyId::J3: return "J3";
    case FamilyId::J4: return "J4";
    case FamilyId::J5: return "J5";
    case FamilyId::J6: return "J6";
    case FamilyId::J7: return "J7";
    case FamilyId::KST: return "KST";
    case FamilyId::KCK: return "KCK";
    case FamilyId::KABC: return "KABC";
    case FamilyId::KKK: return "KKK";
    case FamilyId::KJOIN: return "KJOIN";
  }
  return "?";
}

bool structurally_valid(const FamilyDescriptor& fd) {
  const Shape& s = shape_of(fd.id);
  if (fd.params.size() != s.mins.size()) return false;
  for (size_t i = 0; i < fd.params.size(); ++i)
    if (fd.params[i] < s.mins[i]) return false;
  return true;
}

Graph build(const FamilyDescriptor& fd) {
  if (!structurally_valid(fd))
    throw std::invalid_argument("build: descriptor violates arity or structural minimums: " + to_string(fd));
  const auto& p = fd.params;
  switch (fd.id) {
    case FamilyId::I1: return complete(p[0]);
    case FamilyId::I2: return join(complete(p[0]), edgeless(p[1]));
    case FamilyId::I3: return join(complete(p[0]), disjoint_union(complete(p[1]), complete(p[2])));
    case FamilyId::I4: return join(complete(p[0]), disjoint_union(complete(p[1]), edgeless(p[2])));
    case FamilyId::I5: return join(edgeless(p[0]), edgeless(p[1]));
    case FamilyId::I6: return join(edgeless(p[0]), disjoint_union(complete(p[1]), complete(p[2])));
    case FamilyId::I7: return join(edgeless(p[0]), disjoint_union(complete(p[1]), edgeless(p[2])));
    case FamilyId::KST: return join(edgeless(p[0]), edgeless(p[1]));
    case FamilyId::KCK: return join(edgeless(p[0]), complete(p[1]));
    case FamilyId::KABC:
      return join(edgeless(p[0]), join(edgeless(p[1]), edgeless(p[2])));
    case FamilyId::KKK:
      return join(join(edgeless(p[0]), edgeless(p[1])), complete(p[2]));
    case FamilyId::KJOIN:
      return join(complete(p[0]), disjoint_union(complete(p[1]), complete(p[2])));
    default: {
      const Shape& s = shape_of(fd.id);
      std::vector<Graph> parts;
      for (int i = 0; i < 4; ++i) parts.push_back(part(s.tags[i], p[i]));
      return glex_product(path(4), parts);
    }
  }
}

BigInt j7_constraint(const std::vector<int>& v) {
  BigInt a = v[0], b = v[1], c = v[2], d = v[3];
  return a + b + c + d - 3 * a * c - 8 * a * d - 3 * b * d - a * b * c - a * b * d - a * c * d -
         b * c * d + a * b * c * d + 1;
}

bool thm31_admissible(const FamilyDescriptor& fd) {
  if (!structurally_valid(fd)) return false;
  const auto& p = fd.params;
  switch (fd.id) {
    case FamilyId::I1:
    case FamilyId::I2:
    case FamilyId::I3:
    case FamilyId::I4:
    case FamilyId::I5:
    case FamilyId::I6:
    case FamilyId::I7:
      return true;
    case FamilyId::J1: {
      int a = p[0], c = p[2], d = p[3];
      return (a == 1 && c == 1) || (a == 1 && c == 2 && d <= 2) || (a == 1 && c >= 3 && d == 1) ||
             (a == 2 && c == 1 && d <= 2) || (a >= 3 && c == 1 && d == 1);
    }
    case FamilyId::J2: {
      int a = p[0], d = p[3];
      return a == 1 || (a == 2 && d <= 2) || (a >= 3 && d == 1);
    }
    case FamilyId::J3:
      return p[0] == 1 || p[2] == 1;
    case FamilyId::J4: {
      int a = p[0], b = p[1];
      return a == 1 || (a == 2 && b <= 2) || (a >= 3 && b == 1);
    }
    case FamilyId::J5:
    case FamilyId::J6:
      return true;
    case FamilyId::J7:
      return j7_constraint(p) <= 0;
    default:
      return false;
  }
}

std::vector<FamilyDescriptor> recognize_all(const Graph& g) {
  std::vector<FamilyDescriptor> out;
  if (!is_connected(g)) return out;
  TwinPartition tp = twin_partition(g);
  int k = static_cast<int>(tp.partition.size());
  if (k > 4) return out;

  // quotient adjacency between twin blocks (all-or-nothing across blocks)
  std::vector<std::vector<bool>> q(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      bool adj = g.adjacent(tp.partition.blocks()[i][0], tp.partition.blocks()[j][0]);
      q[i][j] = q[j][i] = adj;
    }
  std::vector<int> sizes(k);
  for (int i = 0; i < k; ++i) sizes[i] = static_cast<int>(tp.partition.blocks()[i].size());

  std::vector<int> perm(k);
  for (const auto& s : catalog()) {
    if (static_cast<int>(s.mins.size()) != k) continue;
    std::vector<std::vector<bool>> want(k, std::vector<bool>(k, false));
    for (auto [x, y] : s.edges) want[x][y] = want[y][x] = true;
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<FamilyDescriptor> found;
    do {
      // block perm[slot] fills slot
      bool ok = true;
      for (int slot = 0; slot < k && ok; ++slot) {
        int blk = perm[slot];
        if (sizes[blk] < s.mins[slot]) ok = false;
        if (ok && sizes[blk] > 1) {
          TwinTag need = s.tags[slot] == 'K' ? TwinTag::clique_twin : TwinTag::independent_twin;
          if (tp.tags[blk] != need) ok = false;
        }
      }
      for (int i = 0; i < k && ok; ++i)
        for (int j = i + 1; j < k && ok; ++j)
          if (q[perm[i]][perm[j]] != want[i][j]) ok = false;
      if (ok) {
        std::vector<int> params(k);
        for (int slot = 0; slot < k; ++slot) params[slot] = sizes[perm[slot]];
        found.push_back({s.id, std::move(params)});
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(found.begin(), found.end(),
              [](const FamilyDescriptor& a, const FamilyDescriptor& b) { return a.params < b.params; });
    found.erase(std::unique(found.begin(), found.end()), found.end());
    out.insert(out.end(), found.begin(), found.end());
  }
  return out;
}

std::optional<FamilyDescriptor> recognize(const Graph& g) {
  auto all = recognize_all(g);
  if (all.empty()) return std::nullopt;
  return all.front();
}

namespace {

// compositions of n into `arity` parts respecting per-slot minimums
void compositions(int n, const std::vector<int>& mins, std::vector<int>& cur, size_t slot,
                  const std::function<void(const std::vector<int>&)>& emit) {
  if (slot + 1 == mins.size()) {
    int rest = n;
    for (size_t i = 0; i < slot; ++i) rest -= cur[i];
    if (rest >= mins[slot]) {
      cur[slot] = rest;
      emit(cur);
    }
    return;
  }
  int used = 0;
  for (size_t i = 0; i < slot; ++i) used += cur[i];
  int remaining_min = 0;
  for (size_t i = slot + 1; i < mins.size(); ++i) remaining_min += mins[i];
  for (int v = mins[slot]; used + v + remaining_min <= n; ++v) {
    cur[slot] = v;
    compositions(n, mins, cur, slot + 1, emit);
  }
}

void for_each_composition(int n, FamilyId id, const std::function<void(FamilyDescriptor)>& emit) {
  const Shape& s = shape_of(id);
  std::vector<int> cur(s.mins.size());
  compositions(n, s.mins, cur, 0, [&](const std::vector<int>& p) { emit({id, p}); });
}

bool lex_le_reversed(const std::vector<int>& p) {
  std::vector<int> r(p.rbegin(), p.rend());
  return p <= r;
}

}  // namespace

std::vector<FamilyDescriptor> enumerate_members(int n, TheoremSet which) {
  if (n < 2) throw std::invalid_argument("enumerate_members: order must be >= 2");
  std::vector<FamilyDescriptor> out;
  auto keep = [&](FamilyDescriptor fd) { out.push_back(std::move(fd)); };

  switch (which) {
    case TheoremSet::thm31: {
      for (FamilyId id : {FamilyId::I1, FamilyId::I2, FamilyId::I3, FamilyId::I4, FamilyId::I5,
                          FamilyId::I6, FamilyId::I7}) {
        for_each_composition(n, id, [&](FamilyDescriptor fd) {
          // I5 and I3/I6 are symmetric in their unordered slots
          if (fd.id == FamilyId::I5 && fd.params[0] > fd.params[1]) return;
          if ((fd.id == FamilyId::I3 || fd.id == FamilyId::I6) && fd.params[1] > fd.params[2]) return;
          keep(std::move(fd));
        });
      }
      for (FamilyId id : {FamilyId::J1, FamilyId::J2, FamilyId::J3, FamilyId::J4, FamilyId::J5,
                          FamilyId::J6, FamilyId::J7}) {
        for_each_composition(n, id, [&](FamilyDescriptor fd) {
          if (!thm31_admissible(fd)) return;
          // J2 and J7 graphs are symmetric under reversal of the P4
          if ((fd.id == FamilyId::J2 || fd.id == FamilyId::J7) && !lex_le_reversed(fd.params)) return;
          keep(std::move(fd));
        });
      }
      break;
    }
    case TheoremSet::thm41: {
      if (n < 4) break;
      for (int s = 1; s <= n - s; ++s) keep({FamilyId::KST, {s, n - s}});
      for (int s = 2; s <= n - 2; ++s) keep({FamilyId::KCK, {s, n - s}});
      break;
    }
    case TheoremSet::thm42: {
      if (n < 5) break;
      for_each_composition(n, FamilyId::KJOIN, [&](FamilyDescriptor fd) {
        if (fd.params[1] + fd.params[2] < 3) return;
        if (fd.params[1] > fd.params[2]) return;
        keep(std::move(fd));
      });
      for_each_composition(n, FamilyId::KABC, [&](FamilyDescriptor fd) {
        if (fd.params[0] > fd.params[1] || fd.params[1] > fd.params[2]) return;
        keep(std::move(fd));
      });
      for_each_composition(n, FamilyId::KKK, [&](FamilyDescriptor fd) {
        if (fd.params[0] > fd.params[1]) return;
        keep(std::move(fd));
      });
      for_each_composition(n, FamilyId::I4, [&](FamilyDescriptor fd) {
        if (fd.params[2] >= 2) keep(std::move(fd));
      });
      for_each_composition(n, FamilyId::I6, [&](FamilyDescriptor fd) {
        if (fd.params[0] >= 2 && fd.params[1] <= fd.params[2]) keep(std::move(fd));
      });
      for_each_composition(n, FamilyId::I7, [&](FamilyDescriptor fd) {
        if (fd.params[0] + fd.params[2] >= 3) keep(std::move(fd));
      });
      for_each_composition(n, FamilyId::J1, [&](FamilyDescriptor fd) {
        int a = fd.params[0], c = fd.params[2], d = fd.params[3];
        if ((a == 1 && c == 2 && d == 2) || (a == 2 && c == 1 && d == 2)) keep(std::move(fd));
      });
      for_each_composition(n, FamilyId::J2, [&](FamilyDescriptor fd) {
        if (fd.params[0] == 2 && fd.params[3] == 2 && lex_le_reversed(fd.params)) keep(std::move(fd));
      });
      for_each_composition(n, FamilyId::J4, [&](FamilyDescriptor fd) {
        if (fd.params[0] == 2 && fd.params[1] == 2) keep(std::move(fd));
      });
      for_each_composition(n, FamilyId::J7, [&](FamilyDescriptor fd) {
        if (j7_constraint(fd.params) == 0 && lex_le_reversed(fd.params)) keep(std::move(fd));
      });
      break;
    }
  }
  return out;
}

EigenBucket classify_eigencount(const Graph& g) {
  int n = g.order();
  int m = multiplicity_at(g, -1) + multiplicity_at(g, -2);
  if (m == n - 1) return EigenBucket::n_minus_1;
  if (m == n - 2) return EigenBucket::n_minus_2;
  if (m == n - 3) return EigenBucket::n_minus_3;
  return EigenBucket::other;
}

const char* bucket_name(EigenBucket b) {
  switch (b) {
    case EigenBucket::n_minus_1: return "n_minus_1";
    case EigenBucket::n_minus_2: return "n_minus_2";
    case EigenBucket::n_minus_3: return "n_minus_3";
    case EigenBucket::other: return "other";
  }
  return "?";
}

bool thm31_member(const Graph& g) {
  auto fd = recognize(g);
  if (!fd) return false;
  return thm31_admissible(*fd);
}

bool thm41_member(const Graph& g) {
  for (const auto& fd : recognize_all(g))
    if (fd.id == FamilyId::KST || fd.id == FamilyId::KCK) return true;
  return false;
}

bool thm42_member(const Graph& g) {
  int n = g.order();
  if (n < 5) return false;
  for (const auto& fd : recognize_all(g)) {
    const auto& p = fd.params;
    switch (fd.id) {
      case FamilyId::KJOIN:
        if (p[1] + p[2] >= 3) return true;
        break;
      case FamilyId::KABC:
        return true;
      case FamilyId::KKK:
        return true;  // structural minimums are already a,b,c >= 2
      case FamilyId::I4:
        if (p[2] >= 2) return true;
        break;
      case FamilyId::I6:
        if (p[0] >= 2) return true;
        break;
      case FamilyId::I7:
        if (p[0] + p[2] >= 3) return true;
        break;
      case FamilyId::J1: {
        int a = p[0], c = p[2], d = p[3];
        if ((a == 1 && c == 2 && d == 2) || (a == 2 && c == 1 && d == 2)) return true;
        break;
      }
      case FamilyId::J2:
        if (p[0] == 2 && p[3] == 2) return true;
        break;
      case FamilyId::J4:
        if (p[0] == 2 && p[1] == 2) return true;
        break;
      case FamilyId::J7:
        if (j7_constraint(p) == 0) return true;
        break;
      default:
        break;
    }
  }
  return false;
}

std::string to_string(const FamilyDescriptor& fd) {
  std::ostringstream os;
  os << family_name(fd.id) << '[';
  for (size_t i = 0; i < fd.params.size(); ++i) {
    if (i) os << ',';
    os << fd.params[i];
  }
  os << ']';
  return os.str();
}

FamilyDescriptor parse_descriptor(const std::string& text) {
  auto lb = text.find('[');
  if (lb == std::string::npos || text.back() != ']')
    throw std::invalid_argument("descriptor syntax is Name[p1,p2,...]: " + text);
  std::string name = text.substr(0, lb);
  std::optional<FamilyId> id;
  for (const auto& s : catalog())
    if (name == family_name(s.id)) id = s.id;
  if (!id) throw std::invalid_argument("unknown family id: " + name);
  std::vector<int> params;
  std::string body = text.substr(lb + 1, text.size() - lb - 2);
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size() || v < 1) throw std::invalid_argument("bad parameter: " + tok);
    params.push_back(v);
  }
  FamilyDescriptor fd{*id, params};
  if (static_cast<int>(params.size()) != family_arity(*id))
    throw std::invalid_argument("wrong parameter count for " + name);
  return fd;
}

}  // namespace dspec
