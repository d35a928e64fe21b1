#include "wlog/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace wlog {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        c.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  }
  return c;
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidInput("determinant of non-square matrix");
  int n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int sign = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i) {
        if (m.at(i, k) != 0) {
          swap = i;
          break;
        }
      }
      if (swap < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

namespace {

Int absInt(const Int& x) { return x < 0 ? Int(-x) : x; }

struct SnfWorker {
  IntMatrix a, u, v;

  void rowSwap(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
    for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void colSwap(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
    for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  void rowAdd(int dst, int src, const Int& q) {  // row dst += q * row src
    if (q == 0) return;
    for (int c = 0; c < a.cols(); ++c) a.at(dst, c) += q * a.at(src, c);
    for (int c = 0; c < u.cols(); ++c) u.at(dst, c) += q * u.at(src, c);
  }
  void colAdd(int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int r = 0; r < a.rows(); ++r) a.at(r, dst) += q * a.at(r, src);
    for (int r = 0; r < v.rows(); ++r) v.at(r, dst) += q * v.at(r, src);
  }
  void rowNegate(int i) {
    for (int c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
    for (int c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
  }

  bool findPivot(int k, int& pi, int& pj) const {
    bool found = false;
    Int best = 0;
    for (int i = k; i < a.rows(); ++i) {
      for (int j = k; j < a.cols(); ++j) {
        const Int& e = a.at(i, j);
        if (e == 0) continue;
        Int mag = absInt(e);
        if (!found || mag < best) {
          found = true;
          best = mag;
          pi = i;
          pj = j;
        }
      }
    }
    return found;
  }
};

}  // namespace

SmithForm smith_normal_form(IntMatrix input) {
  SnfWorker w{std::move(input), IntMatrix::identity(0), IntMatrix::identity(0)};
  w.u = IntMatrix::identity(w.a.rows());
  w.v = IntMatrix::identity(w.a.cols());
  int bound = std::min(w.a.rows(), w.a.cols());

  int k = 0;
  while (k < bound) {
    int pi = 0, pj = 0;
    if (!w.findPivot(k, pi, pj)) break;
    w.rowSwap(k, pi);
    w.colSwap(k, pj);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = k + 1; i < w.a.rows(); ++i) {
        if (w.a.at(i, k) == 0) continue;
        Int q = w.a.at(i, k) / w.a.at(k, k);
        w.rowAdd(i, k, -q);
        if (w.a.at(i, k) != 0) {
          // remainder became the smaller pivot candidate
          w.rowSwap(k, i);
          dirty = true;
        }
      }
      for (int j = k + 1; j < w.a.cols(); ++j) {
        if (w.a.at(k, j) == 0) continue;
        Int q = w.a.at(k, j) / w.a.at(k, k);
        w.colAdd(j, k, -q);
        if (w.a.at(k, j) != 0) {
          w.colSwap(k, j);
          dirty = true;
        }
      }
    }

    // divisibility: d_k must divide the remaining block
    bool restart = false;
    for (int i = k + 1; i < w.a.rows() && !restart; ++i) {
      for (int j = k + 1; j < w.a.cols() && !restart; ++j) {
        if (w.a.at(i, j) % w.a.at(k, k) != 0) {
          w.rowAdd(k, i, 1);
          restart = true;
        }
      }
    }
    if (restart) continue;

    if (w.a.at(k, k) < 0) w.rowNegate(k);
    ++k;
  }

  SmithForm out;
  out.rank = k;
  for (int i = 0; i < k; ++i) out.invariantFactors.push_back(w.a.at(i, i));
  out.d = std::move(w.a);
  out.u = std::move(w.u);
  out.v = std::move(w.v);
  return out;
}

std::string AbelianGroupDescriptor::str() const {
  if (trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  if (freeRank > 0) {
    out << "Z";
    if (freeRank > 1) out << "^" << freeRank;
    first = false;
  }
  for (const Int& t : torsion) {
    if (!first) out << " + ";
    out << "Z/" << t.str();
    first = false;
  }
  return out.str();
}

AbelianGroupDescriptor cokernel(const IntMatrix& relations, int cols) {
  SmithForm snf = smith_normal_form(relations);
  AbelianGroupDescriptor g;
  g.freeRank = cols - snf.rank;
  for (const Int& d : snf.invariantFactors) {
    if (d > 1) g.torsion.push_back(d);
  }
  return g;
}

bool in_row_span(const IntMatrix& m, const std::vector<Int>& x) {
  if (static_cast<int>(x.size()) != m.cols()) {
    throw InvalidInput("vector length does not match matrix columns");
  }
  SmithForm snf = smith_normal_form(m);
  // x in rowspan(m)  <=>  (x * v) is divisible coordinatewise by diag(d)
  std::vector<Int> z(m.cols(), 0);
  for (int j = 0; j < m.cols(); ++j) {
    for (int i = 0; i < m.cols(); ++i) {
      z[j] += x[i] * snf.v.at(i, j);
    }
  }
  for (int j = 0; j < m.cols(); ++j) {
    if (j < snf.rank) {
      if (z[j] % snf.d.at(j, j) != 0) return false;
    } else if (z[j] != 0) {
      return false;
    }
  }
  return true;
}

ComplexHomology complex_homology(int generatorCount, const std::vector<Word>& relators) {
  IntMatrix rel(static_cast<int>(relators.size()), generatorCount);
  for (int r = 0; r < rel.rows(); ++r) {
    auto vec = abelianize(relators[r], generatorCount);
    for (int c = 0; c < generatorCount; ++c) rel.at(r, c) = vec[c];
  }
  SmithForm snf = smith_normal_form(rel);
  ComplexHomology h;
  h.h1.freeRank = generatorCount - snf.rank;
  for (const Int& d : snf.invariantFactors) {
    if (d > 1) h.h1.torsion.push_back(d);
  }
  h.h2FreeRank = static_cast<long>(relators.size()) - snf.rank;
  return h;
}

IntMatrix exterior_matrix(const std::vector<Word>& relators, int alphabetSize) {
  int dim = alphabetSize * (alphabetSize - 1) / 2;
  IntMatrix m(static_cast<int>(relators.size()), dim);
  for (int r = 0; r < m.rows(); ++r) {
    ExteriorImage img = exterior_image(relators[r], alphabetSize);
    for (int c = 0; c < dim; ++c) m.at(r, c) = img.coords()[c];
  }
  return m;
}

long exterior_rank(const std::vector<Word>& relators, int alphabetSize) {
  return smith_normal_form(exterior_matrix(relators, alphabetSize)).rank;
}

bool in_exterior_span(const std::vector<Word>& basis, const Word& candidate,
                      int alphabetSize) {
  IntMatrix m = exterior_matrix(basis, alphabetSize);
  ExteriorImage img = exterior_image(candidate, alphabetSize);
  std::vector<Int> x;
  x.reserve(img.coords().size());
  for (auto c : img.coords()) x.emplace_back(c);
  return in_row_span(m, x);
}

AbelianGroupDescriptor flag_h1(const FlagSkeleton& skel) {
  int nv = static_cast<int>(skel.vertices.size());
  int ne = static_cast<int>(skel.edges.size());
  int nt = static_cast<int>(skel.triangles.size());

  std::map<std::pair<int, int>, int> edgeIndex;
  for (int e = 0; e < ne; ++e) edgeIndex[skel.edges[e]] = e;

  IntMatrix d1(nv, ne);
  for (int e = 0; e < ne; ++e) {
    d1.at(skel.edges[e].first, e) = -1;
    d1.at(skel.edges[e].second, e) = 1;
  }
  IntMatrix d2(ne, nt);
  for (int t = 0; t < nt; ++t) {
    auto [a, b, c] = std::tuple{skel.triangles[t].v[0], skel.triangles[t].v[1],
                                skel.triangles[t].v[2]};
    d2.at(edgeIndex.at({b, c}), t) += 1;
    d2.at(edgeIndex.at({a, c}), t) -= 1;
    d2.at(edgeIndex.at({a, b}), t) += 1;
  }

  long r1 = smith_normal_form(d1).rank;
  SmithForm s2 = smith_normal_form(d2);
  AbelianGroupDescriptor h1;
  h1.freeRank = ne - r1 - s2.rank;
  for (const Int& d : s2.invariantFactors) {
    if (d > 1) h1.torsion.push_back(d);
  }
  return h1;
}

namespace {

// Spanning tree of the skeleton's 1-skeleton, grown breadth-first from a
// vertex of maximal degree (cones then yield a star at the apex, which makes
// every triangle relator a one-letter definition).
std::vector<char> skeletonTree(const FlagSkeleton& skel) {
  int nv = static_cast<int>(skel.vertices.size());
  std::vector<std::vector<std::pair<int, int>>> adj(nv);  // (neighbor, edge id)
  for (int e = 0; e < static_cast<int>(skel.edges.size()); ++e) {
    adj[skel.edges[e].first].emplace_back(skel.edges[e].second, e);
    adj[skel.edges[e].second].emplace_back(skel.edges[e].first, e);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());

  int start = 0;
  for (int v = 1; v < nv; ++v) {
    if (adj[v].size() > adj[start].size()) start = v;
  }
  std::vector<char> inTree(skel.edges.size(), 0);
  std::vector<char> seen(nv, 0);
  std::queue<int> q;
  q.push(start);
  seen[start] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (auto [u, e] : adj[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        inTree[e] = 1;
        q.push(u);
      }
    }
  }
  return inTree;
}

}  // namespace

CertificateStatus pi1_trivial_certificate(const FlagSkeleton& skel, long budget) {
  std::vector<char> inTree = skeletonTree(skel);
  int ne = static_cast<int>(skel.edges.size());

  // generators: non-tree edges
  std::vector<int> genOfEdge(ne, -1);
  int generatorCount = 0;
  for (int e = 0; e < ne; ++e) {
    if (!inTree[e]) genOfEdge[e] = generatorCount++;
  }
  if (generatorCount == 0) return CertificateStatus::Certified;

  std::map<std::pair<int, int>, int> edgeIndex;
  for (int e = 0; e < ne; ++e) edgeIndex[skel.edges[e]] = e;

  std::vector<Word> relators;
  for (const Triangle& t : skel.triangles) {
    std::vector<Letter> letters;
    auto emit = [&](int a, int b, int sign) {
      int e = edgeIndex.at({std::min(a, b), std::max(a, b)});
      if (genOfEdge[e] >= 0) letters.push_back({genOfEdge[e], sign});
    };
    emit(t.v[0], t.v[1], 1);
    emit(t.v[1], t.v[2], 1);
    emit(t.v[0], t.v[2], -1);
    Word w = cyclic_reduce(reduce(letters));
    if (!w.empty()) relators.push_back(w);
  }

  std::vector<char> alive(generatorCount, 1);
  long steps = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t r = 0; r < relators.size(); ++r) {
      // look for a generator occurring exactly once in this relator
      std::map<int, int> occurrences;
      for (const Letter& l : relators[r].letters()) {
        occurrences[l.gen] += static_cast<int>(l.exp < 0 ? -l.exp : l.exp);
      }
      int g = -1;
      for (auto [gen, count] : occurrences) {
        if (count == 1) {
          g = gen;
          break;
        }
      }
      if (g < 0) continue;

      // rotate so the defining letter leads, solve g = replacement
      auto letters = relators[r].expanded();
      std::size_t at = 0;
      while (letters[at].first != g) ++at;
      std::rotate(letters.begin(), letters.begin() + at, letters.end());
      std::vector<Letter> rest;
      for (std::size_t i = 1; i < letters.size(); ++i) {
        rest.push_back({letters[i].first, letters[i].second});
      }
      Word replacement = reduce(rest).inverse();
      if (letters[0].second < 0) replacement = replacement.inverse();

      relators.erase(relators.begin() + static_cast<long>(r));
      alive[g] = 0;
      std::vector<Word> next;
      for (const Word& w : relators) {
        if (++steps > budget) return CertificateStatus::Unknown;
        std::vector<Letter> out;
        for (auto [gen, sign] : w.expanded()) {
          if (gen == g) {
            Word piece = sign > 0 ? replacement : replacement.inverse();
            for (const Letter& l : piece.letters()) out.push_back(l);
          } else {
            out.push_back({gen, sign});
          }
        }
        Word reduced = cyclic_reduce(reduce(out));
        if (!reduced.empty()) next.push_back(reduced);
      }
      relators = std::move(next);
      progress = true;
      break;
    }
  }

  bool allDead = std::all_of(alive.begin(), alive.end(), [](char a) { return !a; });
  return allDead ? CertificateStatus::Certified : CertificateStatus::Unknown;
}

}  // namespace wlog
