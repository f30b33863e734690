#include "cremona/picard/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cremona/errors.hpp"

namespace cremona {

PicClass PicClass::operator+(const PicClass& o) const {
  if (rank() != o.rank()) throw PreconditionError("classes of different rank");
  PicClass c{d + o.d, m};
  for (std::size_t i = 0; i < m.size(); ++i) c.m[i] += o.m[i];
  return c;
}

PicClass PicClass::operator-() const {
  PicClass c{-d, m};
  for (auto& x : c.m) x = -x;
  return c;
}

PicClass PicClass::operator-(const PicClass& o) const { return *this + (-o); }

std::string PicClass::to_string() const {
  std::string out;
  auto term = [&out](int coeff, const std::string& name) {
    if (coeff == 0) return;
    if (out.empty()) {
      if (coeff < 0) out += "-";
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    const int a = coeff < 0 ? -coeff : coeff;
    if (a != 1) out += std::to_string(a);
    out += name;
  };
  term(d, "L");
  for (std::size_t i = 0; i < m.size(); ++i) term(-m[i], "E" + std::to_string(i + 1));
  return out.empty() ? "0" : out;
}

int pairing(const PicClass& a, const PicClass& b) {
  if (a.rank() != b.rank()) throw PreconditionError("classes of different rank");
  int s = a.d * b.d;
  for (std::size_t i = 0; i < a.m.size(); ++i) s -= a.m[i] * b.m[i];
  return s;
}

PicClass hyperplane_class(std::size_t r) { return {1, std::vector<int>(r, 0)}; }

PicClass exceptional_class(std::size_t r, std::size_t i) {
  if (i >= r) throw PreconditionError("exceptional index out of range");
  PicClass c{0, std::vector<int>(r, 0)};
  c.m[i] = -1;
  return c;
}

PicClass line_class(std::size_t r, std::size_t i, std::size_t j) {
  if (i >= r || j >= r || i == j) throw PreconditionError("line needs two distinct points");
  PicClass c{1, std::vector<int>(r, 0)};
  c.m[i] = 1;
  c.m[j] = 1;
  return c;
}

PicClass canonical_class(std::size_t r) { return {-3, std::vector<int>(r, -1)}; }

namespace {

// Depth-first search over m with running sums; c.K = -3d + sum m and
// c.c = d^2 - sum m^2 give the targets.
void search(std::size_t r, int d, int target_sum, int target_sq, const ClassBox& box, std::vector<int>& m,
            int sum, int sq, std::vector<PicClass>& out) {
  const std::size_t i = m.size();
  if (i == r) {
    if (sum == target_sum && sq == target_sq) out.push_back({d, m});
    return;
  }
  const auto left = static_cast<int>(r - i);
  for (int v = box.m_min; v <= box.m_max; ++v) {
    const int s = sum + v;
    const int q = sq + v * v;
    const int rest = left - 1;
    if (q > target_sq) continue;
    if (s + rest * box.m_min > target_sum || s + rest * box.m_max < target_sum) continue;
    m.push_back(v);
    search(r, d, target_sum, target_sq, box, m, s, q, out);
    m.pop_back();
  }
}

}  // namespace

std::vector<PicClass> enumerate_classes(std::size_t r, int self, int canonical, const ClassBox& box) {
  if (r < 1 || r > 8) throw PreconditionError("rank must be between 1 and 8");
  std::vector<PicClass> out;
  std::vector<int> m;
  for (int d = box.d_min; d <= box.d_max; ++d) {
    // c.c = self: sum m^2 = d^2 - self; c.K = canonical: sum m = canonical + 3d.
    const int target_sq = d * d - self;
    if (target_sq < 0) continue;
    search(r, d, canonical + 3 * d, target_sq, box, m, 0, 0, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PicClass> enumerate_minus_one(std::size_t r, const ClassBox& box) {
  return enumerate_classes(r, -1, -1, box);
}

std::vector<std::pair<PicClass, PicClass>> exceptional_pairs(std::size_t r, const ClassBox& box) {
  const PicClass anti = -canonical_class(r);
  const auto conics = enumerate_classes(r, 0, -2, box);
  const std::set<PicClass> lookup(conics.begin(), conics.end());
  std::vector<std::pair<PicClass, PicClass>> out;
  for (const auto& a : conics) {
    const PicClass b = anti - a;
    if (a < b && lookup.count(b) && pairing(b, b) == 0) out.emplace_back(a, b);
  }
  return out;
}

std::vector<std::vector<std::size_t>> skew_quadruple_indices(const std::vector<PicClass>& classes) {
  const std::size_t n = classes.size();
  std::vector<std::vector<std::size_t>> out;
  auto disjoint = [&](std::size_t a, std::size_t b) { return pairing(classes[a], classes[b]) == 0; };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!disjoint(a, b)) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (!disjoint(a, c) || !disjoint(b, c)) continue;
        for (std::size_t d = c + 1; d < n; ++d) {
          if (disjoint(a, d) && disjoint(b, d) && disjoint(c, d)) out.push_back({a, b, c, d});
        }
      }
    }
  }
  return out;
}

std::vector<std::vector<PicClass>> skew_quadruples(std::size_t r) {
  const auto classes = enumerate_minus_one(r);
  std::vector<std::vector<PicClass>> out;
  for (const auto& q : skew_quadruple_indices(classes)) {
    std::vector<PicClass> set;
    for (auto i : q) set.push_back(classes[i]);
    out.push_back(std::move(set));
  }
  return out;
}

IntersectionGraph IntersectionGraph::from_classes(std::vector<PicClass> classes) {
  IntersectionGraph g;
  const std::size_t n = classes.size();
  g.adjacency.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g.adjacency[i][j] = pairing(classes[i], classes[j]);
  }
  g.vertices = std::move(classes);
  return g;
}

IntersectionGraph IntersectionGraph::from_adjacency(std::vector<std::vector<int>> adjacency) {
  for (std::size_t i = 0; i < adjacency.size(); ++i) {
    if (adjacency[i].size() != adjacency.size()) throw PreconditionError("adjacency matrix must be square");
    for (std::size_t j = 0; j < i; ++j) {
      if (adjacency[i][j] != adjacency[j][i]) throw PreconditionError("adjacency matrix must be symmetric");
    }
  }
  IntersectionGraph g;
  g.adjacency = std::move(adjacency);
  return g;
}

namespace {

class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const std::vector<std::vector<int>>& adj) : adj_(adj), n_(adj.size()) {
    // Invariant: diagonal entry plus the sorted row.
    for (std::size_t i = 0; i < n_; ++i) {
      std::vector<int> row = adj_[i];
      std::sort(row.begin(), row.end());
      row.push_back(adj_[i][i]);
      invariant_.push_back(std::move(row));
    }
    image_.assign(n_, kUnset);
    used_.assign(n_, false);
  }

  std::vector<Perm> run() {
    extend(0);
    return found_;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  void extend(std::size_t v) {
    if (v == n_) {
      std::vector<std::uint8_t> img(n_);
      for (std::size_t i = 0; i < n_; ++i) img[i] = static_cast<std::uint8_t>(image_[i]);
      found_.emplace_back(std::move(img));
      return;
    }
    for (std::size_t w = 0; w < n_; ++w) {
      if (used_[w] || invariant_[v] != invariant_[w]) continue;
      bool ok = adj_[v][v] == adj_[w][w];
      for (std::size_t u = 0; u < v && ok; ++u) ok = adj_[u][v] == adj_[image_[u]][w];
      if (!ok) continue;
      image_[v] = w;
      used_[w] = true;
      extend(v + 1);
      used_[w] = false;
      image_[v] = kUnset;
    }
  }

  const std::vector<std::vector<int>>& adj_;
  std::size_t n_;
  std::vector<std::vector<int>> invariant_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
  std::vector<Perm> found_;
};

}  // namespace

FiniteGroup<Perm> graph_automorphisms(const IntersectionGraph& g) {
  if (g.size() == 0) throw PreconditionError("graph has no vertices");
  if (g.size() > kMaxAutomorphismVertices) {
    throw PreconditionError("graph has more than " + std::to_string(kMaxAutomorphismVertices) + " vertices");
  }
  std::vector<Perm> autos = AutomorphismSearch(g.adjacency).run();
  // The identity is found first because candidates are tried in index order.
  return FiniteGroup<Perm>::from_elements(std::move(autos), {});
}

Perm action_on_quadruples(const Perm& perm, const std::vector<std::vector<std::size_t>>& quads) {
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < quads.size(); ++i) {
    std::vector<std::size_t> q = quads[i];
    std::sort(q.begin(), q.end());
    index.emplace(std::move(q), i);
  }
  std::vector<std::uint8_t> img(quads.size());
  for (std::size_t i = 0; i < quads.size(); ++i) {
    std::vector<std::size_t> image;
    for (auto v : quads[i]) {
      if (v >= perm.size()) throw PreconditionError("quadruple vertex outside the permutation domain");
      image.push_back(perm(v));
    }
    std::sort(image.begin(), image.end());
    auto it = index.find(image);
    if (it == index.end()) throw PreconditionError("permutation does not preserve the quadruples");
    img[i] = static_cast<std::uint8_t>(it->second);
  }
  return Perm(std::move(img));
}

}  // namespace cremona
