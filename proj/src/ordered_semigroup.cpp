#include "idealord/ordered_semigroup.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace idealord {

FiniteOrderedSemigroup::FiniteOrderedSemigroup(std::vector<std::string> labels,
                                               std::vector<std::uint32_t> mul,
                                               std::vector<std::uint8_t> leq)
    : k_(labels.size()), labels_(std::move(labels)), mul_(std::move(mul)), leq_(std::move(leq)) {
  if (k_ == 0) throw std::invalid_argument("empty semigroup");
  if (mul_.size() != k_ * k_ || leq_.size() != k_ * k_)
    throw std::invalid_argument("table shape mismatch: expected " + std::to_string(k_) + "x" +
                                std::to_string(k_));
  for (auto v : mul_)
    if (v >= k_) throw std::invalid_argument("mul table entry out of range");
}

FiniteOrderedSemigroup FiniteOrderedSemigroup::from_json(const json& j) {
  if (!j.contains("labels") || !j.contains("mul") || !j.contains("leq"))
    throw std::invalid_argument("table json needs labels, mul, leq");
  std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
  const std::size_t k = labels.size();
  std::vector<std::uint32_t> mul;
  std::vector<std::uint8_t> leq;
  for (const auto& row : j.at("mul")) {
    if (row.size() != k) throw std::invalid_argument("ragged mul table");
    for (const auto& v : row) mul.push_back(v.get<std::uint32_t>());
  }
  for (const auto& row : j.at("leq")) {
    if (row.size() != k) throw std::invalid_argument("ragged leq table");
    for (const auto& v : row) leq.push_back(v.is_boolean() ? (v.get<bool>() ? 1 : 0)
                                                           : (v.get<int>() != 0 ? 1 : 0));
  }
  if (mul.size() != k * k || leq.size() != k * k)
    throw std::invalid_argument("table row count mismatch");
  return FiniteOrderedSemigroup(std::move(labels), std::move(mul), std::move(leq));
}

json FiniteOrderedSemigroup::to_json() const {
  json j;
  j["labels"] = labels_;
  json mul_rows = json::array(), leq_rows = json::array();
  for (std::size_t i = 0; i < k_; ++i) {
    json mr = json::array(), lr = json::array();
    for (std::size_t jj = 0; jj < k_; ++jj) {
      mr.push_back(mul(i, jj));
      lr.push_back(leq(i, jj) ? 1 : 0);
    }
    mul_rows.push_back(std::move(mr));
    leq_rows.push_back(std::move(lr));
  }
  j["mul"] = std::move(mul_rows);
  j["leq"] = std::move(leq_rows);
  return j;
}

namespace {

constexpr long long kNoViolation = LLONG_MAX;

// Each kernel scans an index cube and returns the least encoded violating
// tuple, or kNoViolation. The parallel versions reduce with min, so the
// result is schedule-independent.

long long scan_associativity(const FiniteOrderedSemigroup& s, bool parallel) {
  const long long k = static_cast<long long>(s.size());
  long long worst = kNoViolation;
#ifdef _OPENMP
#pragma omp parallel for reduction(min : worst) if (parallel) schedule(static)
#endif
  for (long long i = 0; i < k; ++i) {
    for (long long j = 0; j < k; ++j)
      for (long long l = 0; l < k; ++l)
        if (s.mul(s.mul(i, j), l) != s.mul(i, s.mul(j, l))) {
          long long enc = (i * k + j) * k + l;
          if (enc < worst) worst = enc;
        }
  }
  (void)parallel;
  return worst;
}

long long scan_order_axioms(const FiniteOrderedSemigroup& s, bool parallel, std::string& axiom) {
  const long long k = static_cast<long long>(s.size());
  for (long long i = 0; i < k; ++i)
    if (!s.leq(i, i)) {
      axiom = "reflexive";
      return i;
    }
  long long worst = kNoViolation;
#ifdef _OPENMP
#pragma omp parallel for reduction(min : worst) if (parallel) schedule(static)
#endif
  for (long long i = 0; i < k; ++i)
    for (long long j = 0; j < k; ++j)
      if (i != j && s.leq(i, j) && s.leq(j, i)) {
        long long enc = i * k + j;
        if (enc < worst) worst = enc;
      }
  if (worst != kNoViolation) {
    axiom = "antisymmetric";
    return worst;
  }
#ifdef _OPENMP
#pragma omp parallel for reduction(min : worst) if (parallel) schedule(static)
#endif
  for (long long i = 0; i < k; ++i)
    for (long long j = 0; j < k; ++j)
      for (long long l = 0; l < k; ++l)
        if (s.leq(i, j) && s.leq(j, l) && !s.leq(i, l)) {
          long long enc = (i * k + j) * k + l;
          if (enc < worst) worst = enc;
        }
  if (worst != kNoViolation) axiom = "transitive";
  (void)parallel;
  return worst;
}

long long scan_compatibility(const FiniteOrderedSemigroup& s, bool parallel, std::string& side) {
  const long long k = static_cast<long long>(s.size());
  long long worst = kNoViolation;
#ifdef _OPENMP
#pragma omp parallel for reduction(min : worst) if (parallel) schedule(static)
#endif
  for (long long i = 0; i < k; ++i)
    for (long long j = 0; j < k; ++j) {
      if (!s.leq(i, j)) continue;
      for (long long l = 0; l < k; ++l)
        if (!s.leq(s.mul(i, l), s.mul(j, l))) {
          long long enc = (i * k + j) * k + l;
          if (enc < worst) worst = enc;
        }
    }
  if (worst != kNoViolation) {
    side = "right";
    return worst;
  }
#ifdef _OPENMP
#pragma omp parallel for reduction(min : worst) if (parallel) schedule(static)
#endif
  for (long long i = 0; i < k; ++i)
    for (long long j = 0; j < k; ++j) {
      if (!s.leq(i, j)) continue;
      for (long long l = 0; l < k; ++l)
        if (!s.leq(s.mul(l, i), s.mul(l, j))) {
          long long enc = (i * k + j) * k + l;
          if (enc < worst) worst = enc;
        }
    }
  if (worst != kNoViolation) side = "left";
  (void)parallel;
  return worst;
}

json triple_json(const FiniteOrderedSemigroup& s, long long enc) {
  const long long k = static_cast<long long>(s.size());
  long long l = enc % k, j = (enc / k) % k, i = enc / (k * k);
  return {{"i", s.label(i)}, {"j", s.label(j)}, {"l", s.label(l)}};
}

json run_validate(const FiniteOrderedSemigroup& s, bool parallel) {
  json out = json::object();
  long long a = scan_associativity(s, parallel);
  if (a != kNoViolation) out["associativity"] = triple_json(s, a);

  std::string axiom;
  long long o = scan_order_axioms(s, parallel, axiom);
  if (o != kNoViolation) {
    const long long k = static_cast<long long>(s.size());
    json ce;
    if (axiom == "reflexive")
      ce = {{"i", s.label(o)}};
    else if (axiom == "antisymmetric")
      ce = {{"i", s.label(o / k)}, {"j", s.label(o % k)}};
    else
      ce = triple_json(s, o);
    ce["axiom"] = axiom;
    out["order"] = std::move(ce);
  }

  std::string side;
  long long c = scan_compatibility(s, parallel, side);
  if (c != kNoViolation) {
    json ce = triple_json(s, c);
    ce["side"] = side;
    out["compatibility"] = std::move(ce);
  }
  return out;
}

}  // namespace

CheckReport validate(const FiniteOrderedSemigroup& s, Exec exec) {
  CheckReport rep;
  rep.check = "validate";
  rep.instance = s.describe();
  json violations = run_validate(s, exec == Exec::Parallel);
  if (!violations.empty()) rep.fail(violations);
  return rep;
}

CheckReport validate_serial(const FiniteOrderedSemigroup& s) { return validate(s, Exec::Serial); }

std::vector<std::size_t> downward_closure(const FiniteOrderedSemigroup& s,
                                          std::span<const std::size_t> subset) {
  const std::size_t k = s.size();
  std::vector<std::uint8_t> in(k, 0);
  for (auto a : subset) {
    if (a >= k) throw std::out_of_range("element index out of range");
    for (std::size_t x = 0; x < k; ++x)
      if (s.leq(x, a)) in[x] = 1;
  }
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < k; ++x)
    if (in[x]) out.push_back(x);
  return out;
}

PrincipalIdeals principal_ordered_ideals(const FiniteOrderedSemigroup& s, std::size_t a) {
  const std::size_t k = s.size();
  if (a >= k) throw std::out_of_range("element index out of range");
  std::vector<std::size_t> left_seed{a}, right_seed{a}, two_seed{a};
  for (std::size_t x = 0; x < k; ++x) {
    left_seed.push_back(s.mul(x, a));
    right_seed.push_back(s.mul(a, x));
    two_seed.push_back(s.mul(x, a));
    two_seed.push_back(s.mul(a, x));
    for (std::size_t y = 0; y < k; ++y) two_seed.push_back(s.mul(s.mul(x, a), y));
  }
  return {downward_closure(s, left_seed), downward_closure(s, right_seed),
          downward_closure(s, two_seed)};
}

namespace {

std::vector<std::size_t> partition_by(const std::vector<std::vector<std::size_t>>& keys) {
  std::map<std::vector<std::size_t>, std::size_t> ids;
  std::vector<std::size_t> out(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    auto [it, inserted] = ids.try_emplace(keys[i], ids.size());
    out[i] = it->second;
  }
  return out;
}

// Join of two equivalences: connected components of the union.
std::vector<std::size_t> join(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  const std::size_t n = a.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a[i] == a[j] || b[i] == b[j]) parent[find(i)] = find(j);
  // renumber components in first-seen order
  std::map<std::size_t, std::size_t> renum;
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, ins] = renum.try_emplace(find(i), renum.size());
    out[i] = it->second;
  }
  return out;
}

}  // namespace

GreensStructure greens_relations(const FiniteOrderedSemigroup& s) {
  const std::size_t k = s.size();
  std::vector<std::vector<std::size_t>> lkeys(k), rkeys(k), jkeys(k);
  for (std::size_t a = 0; a < k; ++a) {
    PrincipalIdeals pi = principal_ordered_ideals(s, a);
    lkeys[a] = std::move(pi.left);
    rkeys[a] = std::move(pi.right);
    jkeys[a] = std::move(pi.two_sided);
  }
  GreensStructure g;
  g.L = partition_by(lkeys);
  g.R = partition_by(rkeys);
  g.J = partition_by(jkeys);

  // H = L n R
  std::vector<std::vector<std::size_t>> hkeys(k);
  for (std::size_t a = 0; a < k; ++a) hkeys[a] = {g.L[a], g.R[a]};
  g.H = partition_by(hkeys);

  g.D = join(g.L, g.R);
  return g;
}

std::size_t class_count(std::span<const std::size_t> ids) {
  return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

bool greens_L_alt(const FiniteOrderedSemigroup& s, std::size_t a, std::size_t b) {
  const std::size_t k = s.size();
  bool ab = false, ba = false;
  for (std::size_t x = 0; x < k && !ab; ++x) ab = s.leq(a, s.mul(x, b));
  for (std::size_t y = 0; y < k && !ba; ++y) ba = s.leq(b, s.mul(y, a));
  return ab && ba;
}

std::vector<std::size_t> ordered_regular_set(const FiniteOrderedSemigroup& s) {
  const std::size_t k = s.size();
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t x = 0; x < k; ++x)
      if (s.leq(a, s.mul(s.mul(a, x), a))) {
        out.push_back(a);
        break;
      }
  return out;
}

Classification classify(const FiniteOrderedSemigroup& s) {
  const std::size_t k = s.size();
  Classification c;

  for (std::size_t e = 0; e < k; ++e)
    if (s.leq(e, s.mul(e, e))) c.ordered_idempotents.push_back(e);

  c.ordered_inverses.resize(k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t ap = 0; ap < k; ++ap)
      if (s.leq(a, s.mul(s.mul(a, ap), a)) && s.leq(ap, s.mul(s.mul(ap, a), ap)))
        c.ordered_inverses[a].push_back(ap);

  // intra-regular: a <= x a^2 y
  c.intra_regular = true;
  for (std::size_t a = 0; a < k && c.intra_regular; ++a) {
    std::size_t aa = s.mul(a, a);
    bool found = false;
    for (std::size_t x = 0; x < k && !found; ++x)
      for (std::size_t y = 0; y < k && !found; ++y) found = s.leq(a, s.mul(s.mul(x, aa), y));
    if (!found) {
      c.intra_regular = false;
      c.details["intra_regular"] = {{"counterexample", s.label(a)}};
    }
  }

  // completely regular: a <= a^2 x a^2
  c.completely_regular = true;
  for (std::size_t a = 0; a < k && c.completely_regular; ++a) {
    std::size_t aa = s.mul(a, a);
    bool found = false;
    for (std::size_t x = 0; x < k && !found; ++x) found = s.leq(a, s.mul(s.mul(aa, x), aa));
    if (!found) {
      c.completely_regular = false;
      c.details["completely_regular"] = {{"counterexample", s.label(a)}};
    }
  }

  // group-like: a <= xb and a <= by
  c.group_like = true;
  for (std::size_t a = 0; a < k && c.group_like; ++a)
    for (std::size_t b = 0; b < k && c.group_like; ++b) {
      bool fx = false, fy = false;
      for (std::size_t x = 0; x < k && !fx; ++x) fx = s.leq(a, s.mul(x, b));
      for (std::size_t y = 0; y < k && !fy; ++y) fy = s.leq(a, s.mul(b, y));
      if (!fx || !fy) {
        c.group_like = false;
        c.details["group_like"] = {{"counterexample", {s.label(a), s.label(b)}}};
      }
    }

  // ordered idempotency of every element
  c.all_ordered_idempotent = c.ordered_idempotents.size() == k;
  if (!c.all_ordered_idempotent) {
    for (std::size_t a = 0; a < k; ++a)
      if (!s.leq(a, s.mul(a, a))) {
        c.details["all_ordered_idempotent"] = {{"counterexample", s.label(a)}};
        break;
      }
  }

  // Clifford: ae <= eua and ea <= ave for every ordered idempotent e
  c.clifford = true;
  for (std::size_t a = 0; a < k && c.clifford; ++a)
    for (std::size_t e : c.ordered_idempotents) {
      std::size_t ae = s.mul(a, e), ea = s.mul(e, a);
      bool fu = false, fv = false;
      for (std::size_t u = 0; u < k && !fu; ++u) fu = s.leq(ae, s.mul(s.mul(e, u), a));
      for (std::size_t v = 0; v < k && !fv; ++v) fv = s.leq(ea, s.mul(s.mul(a, v), e));
      if (!fu || !fv) {
        c.clifford = false;
        c.details["clifford"] = {{"counterexample", {s.label(a), s.label(e)}}};
        break;
      }
    }

  // inverse ordered: any two ordered inverses of a are H-related
  GreensStructure g = greens_relations(s);
  c.inverse_ordered = true;
  for (std::size_t a = 0; a < k && c.inverse_ordered; ++a) {
    const auto& inv = c.ordered_inverses[a];
    for (std::size_t i = 0; i < inv.size() && c.inverse_ordered; ++i)
      for (std::size_t j = i + 1; j < inv.size(); ++j)
        if (g.H[inv[i]] != g.H[inv[j]]) {
          c.inverse_ordered = false;
          c.details["inverse_ordered"] = {
              {"counterexample", {s.label(a), s.label(inv[i]), s.label(inv[j])}}};
          break;
        }
  }

  return c;
}

namespace {

struct Profile {
  bool idempotent;
  std::size_t indeg, outdeg;
  bool ordered_idem;
  friend bool operator==(const Profile&, const Profile&) = default;
};

Profile profile_of(const FiniteOrderedSemigroup& s, std::size_t i) {
  std::size_t in = 0, out = 0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s.leq(j, i)) ++in;
    if (s.leq(i, j)) ++out;
  }
  return {s.mul(i, i) == i, in, out, s.leq(i, s.mul(i, i))};
}

bool consistent(const FiniteOrderedSemigroup& s, const FiniteOrderedSemigroup& t,
                const std::vector<std::size_t>& map, std::size_t assigned) {
  for (std::size_t i = 0; i < assigned; ++i)
    for (std::size_t j = 0; j < assigned; ++j) {
      if (s.leq(i, j) != t.leq(map[i], map[j])) return false;
      std::size_t p = s.mul(i, j);
      if (p < assigned && t.mul(map[i], map[j]) != map[p]) return false;
    }
  return true;
}

bool full_check(const FiniteOrderedSemigroup& s, const FiniteOrderedSemigroup& t,
                const std::vector<std::size_t>& map) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (t.mul(map[i], map[j]) != map[s.mul(i, j)]) return false;
      if (s.leq(i, j) != t.leq(map[i], map[j])) return false;
    }
  return true;
}

bool backtrack(const FiniteOrderedSemigroup& s, const FiniteOrderedSemigroup& t,
               const std::vector<Profile>& ps, const std::vector<Profile>& pt,
               std::vector<std::size_t>& map, std::vector<std::uint8_t>& used, std::size_t depth) {
  if (depth == s.size()) return full_check(s, t, map);
  for (std::size_t cand = 0; cand < t.size(); ++cand) {
    if (used[cand] || !(ps[depth] == pt[cand])) continue;
    map[depth] = cand;
    used[cand] = 1;
    if (consistent(s, t, map, depth + 1) && backtrack(s, t, ps, pt, map, used, depth + 1))
      return true;
    used[cand] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const FiniteOrderedSemigroup& s,
                                                         const FiniteOrderedSemigroup& t) {
  if (s.size() != t.size()) return std::nullopt;
  const std::size_t k = s.size();
  std::vector<Profile> ps(k), pt(k);
  for (std::size_t i = 0; i < k; ++i) {
    ps[i] = profile_of(s, i);
    pt[i] = profile_of(t, i);
  }
  // quick reject: profile multisets must match
  auto key = [](const Profile& p) {
    return std::tuple(p.idempotent, p.indeg, p.outdeg, p.ordered_idem);
  };
  std::multiset<std::tuple<bool, std::size_t, std::size_t, bool>> ms, mt;
  for (std::size_t i = 0; i < k; ++i) {
    ms.insert(key(ps[i]));
    mt.insert(key(pt[i]));
  }
  if (ms != mt) return std::nullopt;

  std::vector<std::size_t> map(k, 0);
  std::vector<std::uint8_t> used(k, 0);
  if (backtrack(s, t, ps, pt, map, used, 0)) return map;
  return std::nullopt;
}

}  // namespace idealord
