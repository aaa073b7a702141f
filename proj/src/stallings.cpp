#include "f2fix/stallings.hpp"

#include <deque>
#include <numeric>
#include <set>
#include <tuple>

namespace f2fix {

  namespace {
    struct Edge {
      std::int32_t src;
      int          gen;
      std::int32_t dst;

      auto operator<=>(Edge const&) const = default;
    };

    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), 0);
      }
      std::int32_t find(std::int32_t x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }
      // The smaller root survives, so the basepoint 0 is always a root.
      bool unite(std::int32_t x, std::int32_t y) {
        x = find(x);
        y = find(y);
        if (x == y) {
          return false;
        }
        if (y < x) {
          std::swap(x, y);
        }
        _parent[y] = x;
        return true;
      }

     private:
      std::vector<std::int32_t> _parent;
    };
  }  // namespace

  bool FoldedGraph::is_rose() const {
    return num_vertices() == 1 && _out[0][0] == 0 && _out[0][1] == 0;
  }

  FoldedGraph fold(std::vector<Word> const& gens) {
    // Wedge of circles, one per generator.
    std::vector<Edge> edges;
    std::int32_t      nv = 1;
    for (auto const& w : gens) {
      auto         letters = w.letters();
      std::int32_t cur     = 0;
      for (std::size_t i = 0; i < letters.size(); ++i) {
        std::int32_t next = (i + 1 == letters.size()) ? 0 : nv++;
        int          g    = static_cast<int>(letter::gen(letters[i]));
        if (letter::sign(letters[i]) > 0) {
          edges.push_back({cur, g, next});
        } else {
          edges.push_back({next, g, cur});
        }
        cur = next;
      }
    }

    // Identify equally labelled edges sharing an endpoint until stable.
    UnionFind uf(nv);
    bool      changed = true;
    while (changed) {
      changed = false;
      std::vector<std::array<std::int32_t, 2>> out(nv, {-1, -1}), in(nv, {-1, -1});
      for (auto const& e : edges) {
        std::int32_t s = uf.find(e.src), d = uf.find(e.dst);
        std::int32_t& o = out[s][e.gen];
        if (o == -1) {
          o = d;
        } else if (uf.unite(o, d)) {
          changed = true;
          d       = uf.find(d);
          o       = uf.find(o);
        }
        s               = uf.find(s);
        std::int32_t& i = in[d][e.gen];
        if (i == -1) {
          i = s;
        } else if (uf.unite(i, s)) {
          changed = true;
          i       = uf.find(i);
        }
      }
    }
    std::set<Edge> folded;
    for (auto const& e : edges) {
      folded.insert({uf.find(e.src), e.gen, uf.find(e.dst)});
    }

    // Prune hanging trees.
    std::vector<std::int64_t> degree(nv, 0);
    std::vector<bool>         alive(nv, false);
    alive[0] = true;
    for (auto const& e : folded) {
      ++degree[e.src];
      ++degree[e.dst];
      alive[e.src] = alive[e.dst] = true;
    }
    std::vector<std::vector<Edge>> incident(nv);
    for (auto const& e : folded) {
      incident[e.src].push_back(e);
      if (e.dst != e.src) {
        incident[e.dst].push_back(e);
      }
    }
    std::set<Edge>           removed;
    std::deque<std::int32_t> queue;
    for (std::int32_t v = 1; v < nv; ++v) {
      if (alive[v] && degree[v] <= 1) {
        queue.push_back(v);
      }
    }
    while (!queue.empty()) {
      std::int32_t v = queue.front();
      queue.pop_front();
      if (!alive[v] || degree[v] > 1) {
        continue;
      }
      alive[v] = false;
      for (auto const& e : incident[v]) {
        if (removed.insert(e).second) {
          std::int32_t u = e.src == v ? e.dst : e.src;
          --degree[u];
          --degree[v];
          if (u != 0 && alive[u] && degree[u] <= 1) {
            queue.push_back(u);
          }
        }
      }
    }

    // Adjacency on the surviving vertices, then breadth-first renumbering.
    std::vector<std::array<std::int32_t, 2>> out(nv, {-1, -1}), in(nv, {-1, -1});
    std::size_t                              num_edges = 0;
    for (auto const& e : folded) {
      if (removed.count(e) == 0) {
        out[e.src][e.gen] = e.dst;
        in[e.dst][e.gen]  = e.src;
        ++num_edges;
      }
    }
    std::vector<std::int32_t> index(nv, -1);
    std::vector<std::int32_t> order{0};
    std::vector<Word>         path{Word()};
    // For each new vertex: the old id of its parent, generator, direction.
    std::vector<std::tuple<std::int32_t, int, int>> via{{-1, 0, 0}};
    index[0] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
      std::int32_t v = order[head];
      for (int g = 0; g < 2; ++g) {
        for (int dir : {1, -1}) {
          std::int32_t u = dir > 0 ? out[v][g] : in[v][g];
          if (u == -1 || index[u] != -1) {
            continue;
          }
          index[u] = static_cast<std::int32_t>(order.size());
          order.push_back(u);
          Word p = path[head];
          p.push(static_cast<Gen>(g), dir);
          path.push_back(std::move(p));
          via.emplace_back(v, g, dir);
        }
      }
    }

    FoldedGraph result;
    std::size_t n = order.size();
    result._out.assign(n, {FoldedGraph::none, FoldedGraph::none});
    result._in.assign(n, {FoldedGraph::none, FoldedGraph::none});
    result._out_is_tree.assign(n, {false, false});
    result._path      = std::move(path);
    result._num_edges = num_edges;
    for (std::size_t k = 0; k < n; ++k) {
      std::int32_t v = order[k];
      for (int g = 0; g < 2; ++g) {
        if (out[v][g] != -1) {
          result._out[k][g] = index[out[v][g]];
        }
        if (in[v][g] != -1) {
          result._in[k][g] = index[in[v][g]];
        }
      }
    }
    for (std::size_t k = 1; k < n; ++k) {
      auto [parent, g, dir] = via[k];
      std::size_t p         = index[parent];
      if (dir > 0) {
        result._out_is_tree[p][g] = true;
      } else {
        result._out_is_tree[k][g] = true;
      }
    }
    return result;
  }

  std::int64_t rank(FoldedGraph const& g) {
    return static_cast<std::int64_t>(g.num_edges())
           - static_cast<std::int64_t>(g.num_vertices()) + 1;
  }

  std::vector<Word> subgroup_basis(FoldedGraph const& g) {
    std::vector<Word> basis;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      for (int k = 0; k < 2; ++k) {
        std::int32_t u = g._out[v][k];
        if (u == FoldedGraph::none || g._out_is_tree[v][k]) {
          continue;
        }
        Word w = g._path[v];
        w.push(static_cast<Gen>(k), 1);
        w.push_inverse(g._path[u]);
        basis.push_back(std::move(w));
      }
    }
    return basis;
  }

  bool contains(FoldedGraph const& g, Word const& w) {
    std::int32_t v = 0;
    for (auto const& s : w.syllables()) {
      for (std::int64_t i = 0; i < (s.exp < 0 ? -s.exp : s.exp); ++i) {
        v = s.exp > 0 ? g.out(v, s.gen) : g.in(v, s.gen);
        if (v == FoldedGraph::none) {
          return false;
        }
      }
    }
    return v == 0;
  }

  bool is_injective(Endomorphism const& phi) {
    return rank(fold({phi.image_a, phi.image_b})) == 2;
  }

  bool is_surjective(Endomorphism const& phi) {
    return fold({phi.image_a, phi.image_b}).is_rose();
  }

}  // namespace f2fix
