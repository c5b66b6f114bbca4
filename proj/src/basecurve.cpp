#include "kmoduli/basecurve.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace kmoduli {

size_t DecoratedDualGraph::valence(size_t comp) const {
  size_t v = 0;
  for (const auto& e : edges) {
    if (e.a == comp) ++v;
    if (e.b == comp) ++v;
  }
  return v;
}

bool DecoratedDualGraph::connected() const {
  if (components.empty()) return false;
  std::vector<bool> seen(components.size(), false);
  std::vector<size_t> stack = {0};
  seen[0] = true;
  while (!stack.empty()) {
    size_t v = stack.back();
    stack.pop_back();
    for (const auto& e : edges) {
      size_t other;
      if (e.a == v)
        other = e.b;
      else if (e.b == v)
        other = e.a;
      else
        continue;
      if (!seen[other]) {
        seen[other] = true;
        stack.push_back(other);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
}

std::vector<std::string> DecoratedDualGraph::validate() const {
  if (!connected()) throw Error("disconnected input");
  std::vector<std::string> warnings;
  for (size_t i = 0; i < components.size(); ++i) {
    const auto& c = components[i];
    if (c.genus < 0) throw Error("bad parameter", "negative genus");
    if (c.moduli_degree.sign() < 0) throw Error("bad parameter", "negative moduli degree");
    if (!mpz_divisible_p(mpz_class(12).get_mpz_t(), c.moduli_degree.den().get_mpz_t()))
      warnings.push_back("component " + std::to_string(i) +
                         ": moduli degree denominator does not divide 12");
    for (const auto& bp : c.boundary) {
      if (bp.coefficient.sign() <= 0 || bp.coefficient > Rational(1))
        throw Error("bad parameter", "boundary coefficient outside (0, 1]");
    }
  }
  for (const auto& e : edges) {
    if (e.a >= components.size() || e.b >= components.size())
      throw Error("bad parameter", "edge endpoint out of range");
    if (e.stabilizer < 1 || e.stabilizer > 4)
      throw Error("bad parameter", "stabilizer order outside {1,2,3,4}");
  }
  return warnings;
}

Rational DecoratedDualGraph::adjusted_degree(size_t comp) const {
  const auto& c = components[comp];
  Rational deg = Rational(2 * c.genus - 2) + Rational(static_cast<long>(valence(comp)));
  for (const auto& bp : c.boundary) deg += bp.coefficient;
  deg += c.moduli_degree;
  return deg;
}

std::optional<MmpStep> mmp_step(const DecoratedDualGraph& g) {
  g.validate();
  std::optional<size_t> pick;
  Rational best(0);
  for (size_t i = 0; i < g.components.size(); ++i) {
    if (g.components[i].genus != 0 || g.valence(i) != 1) continue;  // rational tails only
    Rational deg = g.adjusted_degree(i);
    if (deg.sign() < 0 && (!pick || deg < best)) {
      pick = i;
      best = deg;
    }
  }
  if (!pick) return std::nullopt;

  size_t tail = *pick;
  size_t neighbor = SIZE_MAX;
  for (const auto& e : g.edges)
    if (e.a == tail || e.b == tail) neighbor = e.a == tail ? e.b : e.a;

  MmpStep step;
  step.contracted = tail;
  step.deposited = g.components[tail].moduli_degree;
  for (const auto& bp : g.components[tail].boundary) step.deposited += bp.coefficient;

  DecoratedDualGraph out;
  std::vector<size_t> remap(g.components.size(), SIZE_MAX);
  for (size_t i = 0; i < g.components.size(); ++i) {
    if (i == tail) continue;
    remap[i] = out.components.size();
    out.components.push_back(g.components[i]);
  }
  for (const auto& e : g.edges) {
    if (e.a == tail || e.b == tail) continue;
    out.edges.push_back({remap[e.a], remap[e.b], e.stabilizer});
  }
  if (neighbor != SIZE_MAX) {
    step.onto = remap[neighbor];
    if (step.deposited.sign() > 0)
      out.components[remap[neighbor]].boundary.push_back(
          {step.deposited, "tail-" + std::to_string(tail)});
  }
  step.graph = std::move(out);
  return step;
}

DecoratedDualGraph run_mmp(const DecoratedDualGraph& g) {
  DecoratedDualGraph cur = g;
  for (size_t guard = 0; guard <= g.components.size(); ++guard) {
    auto step = mmp_step(cur);
    if (!step) return cur;
    cur = std::move(step->graph);
  }
  throw Error("mmp failure", "did not terminate within the component budget");
}

Rational total_degree(const DecoratedDualGraph& g) {
  Rational total(0);
  for (size_t i = 0; i < g.components.size(); ++i) {
    const auto& c = g.components[i];
    total += c.moduli_degree;
    for (const auto& bp : c.boundary) total += bp.coefficient;
    total += Rational(2 * c.genus - 2) + Rational(static_cast<long>(g.valence(i)));
  }
  return total;
}

// ---------------------------------------------------------------------------
// quasimap type enumeration
// ---------------------------------------------------------------------------

namespace {

bool divisibility_feasible(int d, int n_mu3, int n_x2) {
  auto feasible = [](int nodes, int deg, int modulus) {
    if (nodes == 0) return deg % modulus == 0;
    if (nodes > deg) return false;
    for (int s = nodes; s <= deg; ++s)
      if ((deg - s) % modulus == 0) return true;
    return false;
  };
  return feasible(n_mu3, d, 3) && feasible(n_x2, d, 2);
}

bool component_admissible(int degree, const std::vector<int>& stabs) {
  int n3 = 0, n24 = 0;
  for (int s : stabs) {
    if (s == 3)
      ++n3;
    else if (s == 2 || s == 4)
      ++n24;
    else
      return false;  // schematic nodes do not occur on quasimap limits
  }
  switch (degree) {
    case 0:
      return n24 == 0 && n3 >= 3;
    case 1:
      return n3 == 1 && n24 == 1 && stabs.size() == 2 &&
             std::count(stabs.begin(), stabs.end(), 4) == 1;
    case 2:
      return n24 == 0 && (n3 == 1 || n3 == 2);
    case 3:
      return n3 == 0 && n24 == 1;
    default:
      return divisibility_feasible(degree, n3, n24);
  }
}

bool valence_possible(int degree, size_t valence) {
  switch (degree) {
    case 0: return valence >= 3;
    case 1: return valence == 2;
    case 2: return valence == 1 || valence == 2;
    case 3: return valence == 1;
    default: return valence >= 1 && valence <= static_cast<size_t>(degree);
  }
}

struct Labeled {
  std::vector<int> degrees;                       // per vertex
  std::vector<std::tuple<size_t, size_t, int>> edges;  // a < b, stabilizer
};

// canonical encoding up to permutations preserving the degree labels
std::string canonical_key(const Labeled& t, bool collapse_x2) {
  size_t n = t.degrees.size();
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  std::sort(perm.begin(), perm.end());
  do {
    bool degree_preserving = true;
    for (size_t i = 0; i < n && degree_preserving; ++i)
      degree_preserving = t.degrees[perm[i]] == t.degrees[i];
    if (!degree_preserving) continue;
    std::vector<size_t> where(n);
    for (size_t i = 0; i < n; ++i) where[perm[i]] = i;
    std::vector<std::tuple<size_t, size_t, int>> edges;
    for (const auto& [a, b, s] : t.edges) {
      size_t x = where[a], y = where[b];
      if (x > y) std::swap(x, y);
      int stab = collapse_x2 && (s == 2 || s == 4) ? 24 : s;
      edges.emplace_back(x, y, stab);
    }
    std::sort(edges.begin(), edges.end());
    std::ostringstream os;
    for (size_t i = 0; i < n; ++i) os << t.degrees[i] << ";";
    for (const auto& [a, b, s] : edges) os << a << "-" << b << ":" << s << ";";
    std::string key = os.str();
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// all labeled trees on n >= 2 vertices, via Pruefer sequences
std::vector<std::vector<std::pair<size_t, size_t>>> labeled_trees(size_t n) {
  std::vector<std::vector<std::pair<size_t, size_t>>> trees;
  if (n == 2) {
    trees.push_back({{0, 1}});
    return trees;
  }
  std::vector<size_t> seq(n - 2, 0);
  while (true) {
    // decode
    std::vector<size_t> deg(n, 1);
    for (size_t v : seq) ++deg[v];
    std::vector<std::pair<size_t, size_t>> edges;
    std::set<size_t> leaves;
    std::vector<size_t> degree_copy = deg;
    for (size_t v = 0; v < n; ++v)
      if (degree_copy[v] == 1) leaves.insert(v);
    for (size_t v : seq) {
      size_t leaf = *leaves.begin();
      leaves.erase(leaves.begin());
      edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
      if (--degree_copy[v] == 1) leaves.insert(v);
    }
    size_t u = *leaves.begin(), w = *std::next(leaves.begin());
    edges.emplace_back(std::min(u, w), std::max(u, w));
    trees.push_back(std::move(edges));
    // next sequence
    size_t pos = 0;
    while (pos < seq.size() && seq[pos] == n - 1) seq[pos++] = 0;
    if (pos == seq.size()) break;
    ++seq[pos];
  }
  return trees;
}

void partitions_into(int total, int max_part, std::vector<int>& acc,
                     std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(acc);
    return;
  }
  for (int p = std::min(total, max_part); p >= 1; --p) {
    acc.push_back(p);
    partitions_into(total - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::string QuasimapType::str() const {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < degrees.size(); ++i) os << (i ? "," : "") << degrees[i];
  os << "}";
  os << " stabilizers ";
  for (size_t k = 0; k < stabilizer_options.size(); ++k) {
    if (k) os << "|";
    os << "{";
    for (size_t i = 0; i < stabilizer_options[k].size(); ++i)
      os << (i ? "," : "") << stabilizer_options[k][i];
    os << "}";
  }
  if (contracted > 0) os << " contracted " << contracted;
  return os.str();
}

std::vector<QuasimapType> enumerate_quasimap_types(int total_degree) {
  if (total_degree < 1) throw Error("bad parameter", "total degree must be positive");

  struct Group {
    std::vector<int> degrees;
    int contracted;
    std::set<std::vector<int>> stab_multisets;
    std::set<std::string> full_keys;
  };
  std::map<std::string, Group> groups;

  // the irreducible smooth case carries no node constraints
  {
    Group g;
    g.degrees = {total_degree};
    g.contracted = 0;
    g.stab_multisets.insert({});
    groups["smooth"] = std::move(g);
  }

  std::vector<std::vector<int>> parts_list;
  {
    std::vector<int> acc;
    partitions_into(total_degree, total_degree, acc, parts_list);
  }

  for (const auto& base_parts : parts_list) {
    for (int zeros = 0; zeros <= 1; ++zeros) {
      std::vector<int> parts = base_parts;
      if (zeros) parts.push_back(0);
      size_t n = parts.size();
      if (n < 2) continue;
      if (n > 8) continue;

      for (const auto& tree : labeled_trees(n)) {
        // valence pre-filter
        std::vector<size_t> val(n, 0);
        for (const auto& [a, b] : tree) {
          ++val[a];
          ++val[b];
        }
        bool ok = true;
        for (size_t v = 0; v < n && ok; ++v)
          ok = valence_possible(parts[v], val[v]);
        if (!ok) continue;

        // stabilizer assignments with component and edge rules
        size_t m = tree.size();
        std::vector<int> stab(m, 2);
        std::vector<int> choices = {2, 3, 4};
        std::vector<size_t> idx(m, 0);
        while (true) {
          bool edge_ok = true;
          for (size_t e = 0; e < m && edge_ok; ++e) {
            int s = choices[idx[e]];
            if (s == 2 || s == 4) {
              int da = parts[tree[e].first], db = parts[tree[e].second];
              edge_ok = (da % 2 == 1) && (db % 2 == 1) && std::max(da, db) >= 3;
            }
          }
          if (edge_ok) {
            bool comp_ok = true;
            for (size_t v = 0; v < n && comp_ok; ++v) {
              std::vector<int> s;
              for (size_t e = 0; e < m; ++e)
                if (tree[e].first == v || tree[e].second == v) s.push_back(choices[idx[e]]);
              comp_ok = component_admissible(parts[v], s);
            }
            if (comp_ok) {
              Labeled lab;
              lab.degrees = parts;
              for (size_t e = 0; e < m; ++e)
                lab.edges.emplace_back(tree[e].first, tree[e].second, choices[idx[e]]);
              std::string classed = canonical_key(lab, true);
              std::string full = canonical_key(lab, false);
              auto& group = groups[classed];
              if (group.degrees.empty()) {
                group.degrees = parts;
                std::sort(group.degrees.rbegin(), group.degrees.rend());
                group.contracted = zeros;
              }
              if (group.full_keys.insert(full).second) {
                std::vector<int> ms;
                for (size_t e = 0; e < m; ++e) ms.push_back(choices[idx[e]]);
                std::sort(ms.begin(), ms.end());
                group.stab_multisets.insert(ms);
              }
            }
          }
          // advance
          size_t pos = 0;
          while (pos < m && idx[pos] == choices.size() - 1) idx[pos++] = 0;
          if (pos == m) break;
          ++idx[pos];
        }
      }
    }
  }

  std::vector<QuasimapType> out;
  for (auto& [key, group] : groups) {
    QuasimapType t;
    t.degrees = group.degrees;
    if (t.degrees.empty()) continue;
    t.contracted = group.contracted;
    for (const auto& ms : group.stab_multisets) t.stabilizer_options.push_back(ms);
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(), [](const QuasimapType& a, const QuasimapType& b) {
    if (a.degrees != b.degrees) return a.degrees > b.degrees;
    return a.stabilizer_options < b.stabilizer_options;
  });
  return out;
}

}  // namespace kmoduli
