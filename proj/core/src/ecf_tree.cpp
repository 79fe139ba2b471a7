#include "factorkit/ecf_tree.hpp"

#include <algorithm>
#include <stdexcept>

#include "factorkit/caterpillar.hpp"
#include "factorkit/rooted_tree.hpp"

namespace factorkit {

namespace {

constexpr LabelSet kR = static_cast<LabelSet>(EdgeLabel::R);
constexpr LabelSet kB = static_cast<LabelSet>(EdgeLabel::B);
constexpr LabelSet kG = static_cast<LabelSet>(EdgeLabel::G);
constexpr LabelSet kGstar = static_cast<LabelSet>(EdgeLabel::Gstar);

LabelSet rule_from_counts(int gstar, int b, int g) {
  if (b > 2) return 0;
  if (gstar > 0) {
    if (gstar == 1 && b == 0 && g == 0) return kR;
    return 0;
  }
  int gb = g + b;
  if (gb == 0) return kG;
  if (gb == 1) return kR | kB;
  if (gb % 2 == 0) return kR;
  if (b <= 1) return kB;
  return kGstar;
}

// Keep at most one of {Gstar, B, G}: B subsumes Gstar and G subsumes B.
LabelSet reduce_label_set(LabelSet s) {
  if ((s & kB) && (s & kGstar)) s &= ~kGstar;
  if ((s & kG) && (s & kB)) s &= ~kB;
  return s;
}

int label_index(LabelSet single) {
  switch (single) {
    case kR: return 0;
    case kB: return 1;
    case kG: return 2;
    default: return 3;
  }
}

// Shared state of the label computation. Witness tuples (one child-edge
// label per child) are kept per produced label so a certificate can be
// unwound top-down afterwards.
struct EcfDp {
  const Multigraph& g;
  RootedTree tree;
  std::vector<LabelSet> label;         // per edge id
  std::vector<std::uint8_t> witness;   // blocks of 4 * |children| entries
  std::vector<std::size_t> offset;     // per vertex block start

  explicit EcfDp(const Multigraph& graph, int root)
      : g(graph), tree(RootedTree::build(graph, root)) {
    label.assign(g.edge_count(), 0);
    offset.assign(g.vertex_count(), 0);
    std::size_t total = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      offset[v] = total;
      total += 4 * tree.children[v].size();
    }
    witness.assign(total, 0);
  }

  std::uint8_t& witness_slot(int v, int label_idx, int child_idx) {
    return witness[offset[v] + static_cast<std::size_t>(label_idx) *
                                   tree.children[v].size() +
                   child_idx];
  }

  void store_uniform(int v, LabelSet produced, LabelSet everywhere) {
    int k = static_cast<int>(tree.children[v].size());
    for (LabelSet bit : {kR, kB, kG, kGstar})
      if (produced & bit)
        for (int i = 0; i < k; ++i)
          witness_slot(v, label_index(bit), i) = everywhere;
  }

  void store_single_deviation(int v, LabelSet produced, int child_idx,
                              LabelSet deviant) {
    int k = static_cast<int>(tree.children[v].size());
    for (LabelSet bit : {kR, kB, kG, kGstar})
      if (produced & bit)
        for (int i = 0; i < k; ++i)
          witness_slot(v, label_index(bit), i) =
              (i == child_idx) ? deviant : kR;
  }

  // Computes L(uv) for the edge from v towards its parent.
  void process_vertex(int v) {
    const std::vector<int>& children = tree.children[v];
    const int k = static_cast<int>(children.size());

    std::vector<LabelSet> sets(k);
    bool any_empty = false;
    int missing_r = 0;
    for (int i = 0; i < k; ++i) {
      sets[i] = label[tree.parent_edge[children[i]]];
      if (sets[i] == 0) any_empty = true;
      if (!(sets[i] & kR)) ++missing_r;
    }
    LabelSet& out = label[tree.parent_edge[v]];

    if (any_empty) {
      out = 0;
      return;
    }

    if (missing_r == 0) {
      // Every child edge may stay red, so v can become a leaf of u.
      int extra_at = -1;
      LabelSet extra = 0;
      for (int i = 0; i < k && extra_at == -1; ++i) {
        if (sets[i] != kR) {
          extra_at = i;
          LabelSet rest = sets[i] & ~kR;
          extra = (rest & kGstar) ? kGstar : (rest & kB) ? kB : kG;
        }
      }
      if (extra_at == -1) {
        out = kG;
        store_uniform(v, kG, kR);
      } else {
        out = kR | kG;
        store_uniform(v, kG, kR);
        store_single_deviation(v, kR, extra_at, extra);
      }
      return;
    }

    if (missing_r == 1) {
      int j = 0;
      while (sets[j] & kR) ++j;
      LabelSet forced = sets[j];  // a singleton after reduction
      if (forced == kGstar) {
        out = kR;
        store_single_deviation(v, kR, j, kGstar);
      } else {
        out = kR | kB;
        store_single_deviation(v, kR | kB, j, forced);
      }
      return;
    }

    // Two or more child edges are forced non-red, so any Gstar choice
    // would see another non-red entry and produce nothing.
    for (int i = 0; i < k; ++i) {
      if (sets[i] & kGstar) {
        sets[i] &= ~kGstar;
        if (sets[i] == 0) {
          out = 0;
          return;
        }
      }
    }

    int forced_b = 0, forced_g = 0;
    std::vector<int> flex_rb, flex_rg;
    for (int i = 0; i < k; ++i) {
      if (sets[i] == kB) ++forced_b;
      else if (sets[i] == kG) ++forced_g;
      else if (sets[i] == (kR | kB) && flex_rb.size() < 2) flex_rb.push_back(i);
      else if (sets[i] == (kR | kG) && flex_rg.size() < 2) flex_rg.push_back(i);
      // remaining {R,B} / {R,G} sets act as {R}
    }

    std::vector<int> flex = flex_rb;
    flex.insert(flex.end(), flex_rg.begin(), flex_rg.end());
    const int f = static_cast<int>(flex.size());

    out = 0;
    for (int combo = 0; combo < (1 << f); ++combo) {
      int b = forced_b, gg = forced_g;
      for (int s = 0; s < f; ++s) {
        if (combo >> (f - 1 - s) & 1)
          (s < static_cast<int>(flex_rb.size()) ? b : gg) += 1;
      }
      LabelSet produced = rule_from_counts(0, b, gg);
      LabelSet fresh = produced & ~out;
      if (!fresh) continue;
      out |= fresh;
      for (LabelSet bit : {kR, kB, kG, kGstar}) {
        if (!(fresh & bit)) continue;
        int li = label_index(bit);
        for (int i = 0; i < k; ++i) {
          LabelSet pick;
          if (sets[i] == kB || sets[i] == kG)
            pick = sets[i];
          else
            pick = kR;
          witness_slot(v, li, i) = pick;
        }
        for (int s = 0; s < f; ++s)
          if (combo >> (f - 1 - s) & 1)
            witness_slot(v, li, flex[s]) =
                s < static_cast<int>(flex_rb.size()) ? kB : kG;
      }
    }
    out = reduce_label_set(out);
  }

  void run() {
    for (int v : tree.postorder)
      if (v != tree.root) process_vertex(v);
  }
};

int pick_leaf_root(const Multigraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 1) return v;
  throw std::logic_error("tree without a degree-1 vertex");
}

}  // namespace

LabelSet local_label_rule(std::span<const EdgeLabel> child_labels) {
  int gstar = 0, b = 0, g = 0;
  for (EdgeLabel l : child_labels) {
    if (l == EdgeLabel::Gstar) ++gstar;
    else if (l == EdgeLabel::B) ++b;
    else if (l == EdgeLabel::G) ++g;
  }
  return rule_from_counts(gstar, b, g);
}

std::vector<LabelSet> ecf_edge_labels(const Multigraph& g) {
  if (!is_simple_tree(g) || g.vertex_count() < 2)
    throw std::invalid_argument("ecf_edge_labels: input is not a simple tree of order >= 2");
  EcfDp dp(g, pick_leaf_root(g));
  dp.run();
  return dp.label;
}

std::optional<EdgeSet> ecf_tree_solve(const Multigraph& g) {
  if (!is_simple_tree(g))
    throw std::invalid_argument("ecf_tree_solve: input is not a simple tree");
  if (g.vertex_count() < 2) return std::nullopt;

  EcfDp dp(g, pick_leaf_root(g));
  dp.run();

  int root_child = dp.tree.children[dp.tree.root][0];
  LabelSet root_set = dp.label[dp.tree.parent_edge[root_child]];
  if (root_set == 0 || root_set == kR) return std::nullopt;

  // Unwind one witness tuple per vertex, parents first.
  std::vector<LabelSet> chosen(g.edge_count(), 0);
  LabelSet root_pick = (root_set & kB)   ? kB
                       : (root_set & kG) ? kG
                                         : kGstar;
  chosen[dp.tree.parent_edge[root_child]] = root_pick;
  for (auto it = dp.tree.postorder.rbegin(); it != dp.tree.postorder.rend();
       ++it) {
    int v = *it;
    if (v == dp.tree.root) continue;
    int li = label_index(chosen[dp.tree.parent_edge[v]]);
    const std::vector<int>& children = dp.tree.children[v];
    for (int i = 0; i < static_cast<int>(children.size()); ++i)
      chosen[dp.tree.parent_edge[children[i]]] =
          static_cast<LabelSet>(dp.witness_slot(v, li, i));
  }

  std::vector<int> kept;
  for (int id = 0; id < g.edge_count(); ++id)
    if (chosen[id] & (kB | kG | kGstar)) kept.push_back(id);
  EdgeSet certificate(std::move(kept));

  if (!verify_caterpillar_factor(g, certificate, CaterpillarKind::Even).ok())
    throw std::logic_error("ecf_tree_solve: reconstructed certificate failed verification");
  return certificate;
}

}  // namespace factorkit
