// Stallings graphs of finitely generated subgroups of F(a,b).

#ifndef F2FIX_STALLINGS_HPP_
#define F2FIX_STALLINGS_HPP_

#include <array>
#include <cstdint>
#include <vector>

#include "f2fix/words.hpp"

namespace f2fix {

  //! A folded, core-pruned Stallings graph with basepoint 0. Vertices are
  //! numbered in breadth-first order from the basepoint.
  class FoldedGraph {
   public:
    static constexpr std::int32_t none = -1;

    std::size_t num_vertices() const noexcept {
      return _out.size();
    }
    std::size_t num_edges() const noexcept {
      return _num_edges;
    }

    //! Target of the g-edge leaving v, or none.
    std::int32_t out(std::size_t v, Gen g) const {
      return _out[v][static_cast<int>(g)];
    }
    //! Source of the g-edge entering v, or none.
    std::int32_t in(std::size_t v, Gen g) const {
      return _in[v][static_cast<int>(g)];
    }

    //! Word labelling the spanning-tree path from the basepoint to v.
    Word const& tree_path(std::size_t v) const {
      return _path[v];
    }

    //! True iff the graph is the one-vertex rose with an a-loop and a b-loop.
    bool is_rose() const;

   private:
    friend FoldedGraph fold(std::vector<Word> const& gens);

    std::vector<std::array<std::int32_t, 2>> _out;
    std::vector<std::array<std::int32_t, 2>> _in;
    std::vector<Word>                        _path;
    std::vector<std::array<bool, 2>>         _out_is_tree;
    std::size_t                              _num_edges = 0;

    friend std::vector<Word> subgroup_basis(FoldedGraph const& g);
  };

  FoldedGraph fold(std::vector<Word> const& gens);

  std::int64_t      rank(FoldedGraph const& g);
  std::vector<Word> subgroup_basis(FoldedGraph const& g);
  bool              contains(FoldedGraph const& g, Word const& w);

  bool is_injective(Endomorphism const& phi);
  bool is_surjective(Endomorphism const& phi);

}  // namespace f2fix

#endif  // F2FIX_STALLINGS_HPP_
