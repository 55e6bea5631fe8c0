#include "beliefdyn/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <numeric>
#include <sstream>

#include "beliefdyn/errors.hpp"

namespace beliefdyn {

BoolMatrix pattern_of(const Eigen::Ref<const Eigen::MatrixXd>& M, double zero_tol) {
  BoolMatrix P(M.rows(), M.cols());
  for (Eigen::Index r = 0; r < M.rows(); ++r) {
    for (Eigen::Index c = 0; c < M.cols(); ++c) {
      P(r, c) = std::abs(M(r, c)) > zero_tol;
    }
  }
  return P;
}

std::vector<std::vector<int>> out_adjacency(const BoolMatrix& P) {
  const int d = static_cast<int>(P.rows());
  std::vector<std::vector<int>> adj(d);
  for (int u = 0; u < d; ++u) {
    for (int v = 0; v < d; ++v) {
      if (P(v, u)) adj[u].push_back(v);
    }
  }
  return adj;
}

SccResult strongly_connected_components(const BoolMatrix& P) {
  const int d = static_cast<int>(P.rows());
  const auto adj = out_adjacency(P);

  SccResult res;
  res.comp.assign(d, -1);
  std::vector<int> index(d, -1), low(d, 0);
  std::vector<bool> on_stack(d, false);
  std::vector<int> stack;
  int next_index = 0;

  // Iterative Tarjan; frame = (node, position in its adjacency list).
  struct Frame {
    int node;
    size_t edge;
  };
  std::vector<Frame> call;

  for (int s = 0; s < d; ++s) {
    if (index[s] != -1) continue;
    call.push_back({s, 0});
    index[s] = low[s] = next_index++;
    stack.push_back(s);
    on_stack[s] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.edge < adj[f.node].size()) {
        const int w = adj[f.node][f.edge++];
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.node] = std::min(low[f.node], index[w]);
        }
      } else {
        const int v = f.node;
        call.pop_back();
        if (!call.empty()) {
          low[call.back().node] = std::min(low[call.back().node], low[v]);
        }
        if (low[v] == index[v]) {
          while (true) {
            const int w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            res.comp[w] = res.count;
            if (w == v) break;
          }
          ++res.count;
        }
      }
    }
  }
  return res;
}

bool is_strongly_connected(const BoolMatrix& P) {
  return strongly_connected_components(P).count == 1;
}

int graph_period(const BoolMatrix& P) {
  const int d = static_cast<int>(P.rows());
  const auto adj = out_adjacency(P);
  std::vector<int> level(d, -1);
  std::deque<int> queue;
  level[0] = 0;
  queue.push_back(0);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : adj[u]) {
      if (level[v] == -1) {
        level[v] = level[u] + 1;
        queue.push_back(v);
      }
    }
  }
  int g = 0;
  for (int u = 0; u < d; ++u) {
    if (level[u] == -1) continue;
    for (int v : adj[u]) {
      g = std::gcd(g, std::abs(level[u] + 1 - level[v]));
    }
  }
  return g;
}

BoolMatrix bool_product(const BoolMatrix& X, const BoolMatrix& Y) {
  const int rows = static_cast<int>(X.rows());
  const int inner = static_cast<int>(X.cols());
  const int cols = static_cast<int>(Y.cols());
  BoolMatrix Z(rows, cols);
  Z.setConstant(false);
  for (int r = 0; r < rows; ++r) {
    for (int k = 0; k < inner; ++k) {
      if (!X(r, k)) continue;
      for (int c = 0; c < cols; ++c) {
        if (Y(k, c)) Z(r, c) = true;
      }
    }
  }
  return Z;
}

bool all_true(const BoolMatrix& P) {
  return P.all();
}

namespace {

// Word-packed boolean rows so pattern squaring stays cheap at system size.
struct BitMatrix {
  int d = 0;
  int words = 0;
  std::vector<std::uint64_t> row_bits;  // row-major, `words` per row

  explicit BitMatrix(const BoolMatrix& P)
      : d(static_cast<int>(P.rows())), words((d + 63) / 64), row_bits(size_t(d) * words, 0) {
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) {
        if (P(r, c)) row_bits[size_t(r) * words + c / 64] |= (1ull << (c % 64));
      }
    }
  }

  BitMatrix square() const {
    BitMatrix out = *this;
    std::fill(out.row_bits.begin(), out.row_bits.end(), 0ull);
    for (int r = 0; r < d; ++r) {
      const std::uint64_t* row = &row_bits[size_t(r) * words];
      std::uint64_t* dst = &out.row_bits[size_t(r) * words];
      for (int k = 0; k < d; ++k) {
        if (row[k / 64] & (1ull << (k % 64))) {
          const std::uint64_t* src = &row_bits[size_t(k) * words];
          for (int w = 0; w < words; ++w) dst[w] |= src[w];
        }
      }
    }
    return out;
  }

  bool all_set() const {
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) {
        if (!(row_bits[size_t(r) * words + c / 64] & (1ull << (c % 64)))) return false;
      }
    }
    return true;
  }
};

}  // namespace

bool primitivity_check(const Eigen::Ref<const Eigen::MatrixXd>& M, double zero_tol) {
  const int d = static_cast<int>(M.rows());
  if (d == 0 || M.rows() != M.cols()) {
    throw PreconditionViolation("primitivity check needs a nonempty square matrix");
  }
  BitMatrix B(pattern_of(M, zero_tol));
  // A primitive pattern reaches all-positive by exponent (d-1)^2 + 1, and
  // powers of an irreducible pattern stay positive from there on, so one
  // test at a squared-up exponent past the bound decides primitivity.
  const long bound = static_cast<long>(d - 1) * (d - 1) + 1;
  long exponent = 1;
  while (true) {
    if (B.all_set()) return true;
    if (exponent >= bound) return false;
    B = B.square();
    exponent *= 2;
  }
}

namespace {

// Union-find with parity to the root; the spanning forest of accepted
// constraints is kept separately so a contradiction can be reported as a
// concrete cycle.
class ParityForest {
 public:
  explicit ParityForest(int d) : parent_(d), parity_(d, 0), rank_(d, 0), adj_(d) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  // Root of x plus parity of the path to it, with path compression.
  std::pair<int, int> find(int x) {
    int root = x, par = 0;
    while (parent_[root] != root) {
      par ^= parity_[root];
      root = parent_[root];
    }
    int node = x, acc = par;
    while (parent_[node] != root) {
      const int next = parent_[node];
      const int next_acc = acc ^ parity_[node];
      parent_[node] = root;
      parity_[node] = static_cast<unsigned char>(acc);
      node = next;
      acc = next_acc;
    }
    return {root, par};
  }

  // Returns false when u and v are already related with the other parity.
  bool constrain(int u, int v, bool opposite, int edge_id) {
    auto [ru, pu] = find(u);
    auto [rv, pv] = find(v);
    const int want = opposite ? 1 : 0;
    if (ru == rv) {
      if ((pu ^ pv) != want) return false;
      return true;
    }
    if (rank_[ru] < rank_[rv]) {
      std::swap(ru, rv);
      std::swap(pu, pv);
    }
    parent_[rv] = ru;
    parity_[rv] = static_cast<unsigned char>(pu ^ pv ^ want);
    if (rank_[ru] == rank_[rv]) ++rank_[ru];
    adj_[u].push_back({v, edge_id});
    adj_[v].push_back({u, edge_id});
    return true;
  }

  // Forest path between two nodes of one component, as edge ids.
  std::vector<int> path_edges(int from, int to) const {
    std::vector<int> prev_edge(adj_.size(), -1);
    std::vector<int> prev_node(adj_.size(), -1);
    std::vector<bool> seen(adj_.size(), false);
    std::deque<int> queue{from};
    seen[from] = true;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      if (u == to) break;
      for (const auto& [v, id] : adj_[u]) {
        if (!seen[v]) {
          seen[v] = true;
          prev_edge[v] = id;
          prev_node[v] = u;
          queue.push_back(v);
        }
      }
    }
    std::vector<int> path;
    for (int u = to; u != from; u = prev_node[u]) path.push_back(prev_edge[u]);
    return path;
  }

 private:
  std::vector<int> parent_;
  std::vector<unsigned char> parity_;
  std::vector<int> rank_;
  std::vector<std::vector<std::pair<int, int>>> adj_;  // (neighbor, edge id)
};

}  // namespace

BalanceVerdict structural_balance(const Eigen::Ref<const Eigen::MatrixXd>& G,
                                  double zero_tol) {
  if (G.rows() != G.cols()) {
    throw PreconditionViolation("structural balance needs a square matrix");
  }
  const int d = static_cast<int>(G.rows());
  ParityForest forest(d);
  std::vector<SignedEdge> accepted;

  BalanceVerdict verdict;
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      const double w = G(r, c);
      if (std::abs(w) <= zero_tol) continue;
      if (r == c) {
        if (w < 0.0) {
          // A negative self-loop is itself a negative cycle.
          verdict.balanced = false;
          verdict.witness = {SignedEdge{r, c, w}};
          return verdict;
        }
        continue;
      }
      const bool opposite = w < 0.0;
      const int id = static_cast<int>(accepted.size());
      if (forest.constrain(r, c, opposite, id)) {
        accepted.push_back(SignedEdge{r, c, w});
      } else {
        verdict.balanced = false;
        for (int eid : forest.path_edges(r, c)) verdict.witness.push_back(accepted[eid]);
        verdict.witness.push_back(SignedEdge{r, c, w});
        return verdict;
      }
    }
  }

  verdict.balanced = true;
  std::vector<int> ref_parity(d, -1);
  for (int u = 0; u < d; ++u) {
    auto [root, par] = forest.find(u);
    if (ref_parity[root] == -1) ref_parity[root] = par;
    if (par == ref_parity[root]) {
      verdict.plus_set.push_back(u);
    } else {
      verdict.minus_set.push_back(u);
    }
  }
  return verdict;
}

TopicPartition condense_logic(const LogicProfile& profile) {
  const int m = profile.m();
  const BoolMatrix P = shared_pattern(profile);
  const SccResult scc = strongly_connected_components(P);

  std::vector<std::vector<int>> members(scc.count);
  for (int p = 0; p < m; ++p) members[scc.comp[p]].push_back(p);
  for (auto& v : members) std::sort(v.begin(), v.end());

  // Cross-component dependency edges: topic p needing topic q means q's
  // component must be emitted before p's.
  std::vector<std::vector<int>> waiters(scc.count);  // provider -> dependents
  std::vector<int> pending(scc.count, 0);
  {
    std::vector<std::vector<bool>> seen(scc.count, std::vector<bool>(scc.count, false));
    for (int p = 0; p < m; ++p) {
      for (int q = 0; q < m; ++q) {
        if (p == q || !P(p, q)) continue;
        const int cp = scc.comp[p], cq = scc.comp[q];
        if (cp != cq && !seen[cq][cp]) {
          seen[cq][cp] = true;
          waiters[cq].push_back(cp);
          ++pending[cp];
        }
      }
    }
  }

  TopicPartition part;
  part.dep_sets.resize(m);
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q) {
      if (q != p && P(p, q)) part.dep_sets[p].push_back(q);
    }
  }

  // Kahn's algorithm, always emitting the ready component containing the
  // smallest topic id, so the block order is unique.
  std::vector<int> ready;
  for (int c = 0; c < scc.count; ++c) {
    if (pending[c] == 0) ready.push_back(c);
  }
  part.block_of.assign(m, -1);
  while (!ready.empty()) {
    const auto best = std::min_element(ready.begin(), ready.end(), [&](int a, int b) {
      return members[a].front() < members[b].front();
    });
    const int c = *best;
    ready.erase(best);
    const int block_index = static_cast<int>(part.blocks.size());
    for (int p : members[c]) {
      part.block_of[p] = block_index;
      part.perm.push_back(p);
    }
    part.blocks.push_back(members[c]);
    for (int dependent : waiters[c]) {
      if (--pending[dependent] == 0) ready.push_back(dependent);
    }
  }

  for (const auto& block : part.blocks) {
    std::vector<int> ext;
    for (int p : block) {
      for (int q : part.dep_sets[p]) {
        if (part.block_of[q] != part.block_of[p]) ext.push_back(q);
      }
    }
    std::sort(ext.begin(), ext.end());
    ext.erase(std::unique(ext.begin(), ext.end()), ext.end());
    part.ext_dep_sets.push_back(ext);
    part.closed.push_back(ext.empty());
  }

  // The emitted order must make every logic matrix lower block triangular.
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (part.block_of[part.perm[a]] < part.block_of[part.perm[b]] &&
          P(part.perm[a], part.perm[b])) {
        throw Error("internal: condensation order is not lower block triangular");
      }
    }
  }
  return part;
}

Eigen::MatrixXd build_multiplex_pattern(const InfluenceNetwork& net,
                                        const LogicProfile& profile) {
  const int n = net.n();
  const int m = profile.m();
  if (profile.n() != n) {
    std::ostringstream os;
    os << "profile has " << profile.n() << " individuals but the network has " << n;
    throw PreconditionViolation(os.str());
  }
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n * m, n * m);
  Eigen::VectorXd coupling(n);
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q) {
      for (int i = 0; i < n; ++i) coupling(i) = profile.C(i)(p, q);
      if (coupling.cwiseAbs().maxCoeff() <= tol::sign_zero) continue;
      A.block(p * n, q * n, n, n) = coupling.asDiagonal() * net.W;
    }
  }
  return A;
}

BalanceVerdict multiplex_balance_via_lemma(const LogicProfile& profile, bool competing) {
  const BoolMatrix P = shared_pattern(profile);
  if (!is_strongly_connected(P)) {
    throw PreconditionViolation(
        "multiplex balance shortcut needs an irreducible topic pattern");
  }
  BalanceVerdict out;
  if (competing) {
    // A sign conflict between two individuals on one coupling always closes
    // a negative cycle through the interpersonal edges; no balanced split
    // exists. The witness needs the network, so none is constructed here.
    out.balanced = false;
    return out;
  }
  const int n = profile.n();
  const BalanceVerdict topic_level = structural_balance(profile.C(0));
  out.balanced = topic_level.balanced;
  if (!topic_level.balanced) {
    return out;
  }
  // All n copies of a topic sit on the topic's side: interpersonal edges
  // carry the coupling's shared sign, so they never separate copies.
  for (int p : topic_level.plus_set) {
    for (int i = 0; i < n; ++i) out.plus_set.push_back(p * n + i);
  }
  for (int p : topic_level.minus_set) {
    for (int i = 0; i < n; ++i) out.minus_set.push_back(p * n + i);
  }
  std::sort(out.plus_set.begin(), out.plus_set.end());
  std::sort(out.minus_set.begin(), out.minus_set.end());
  return out;
}

}  // namespace beliefdyn
