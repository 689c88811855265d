#include "pmc/dp.hpp"

#include "pmc/separators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace pmc {

BagFamily BagFamily::make(std::vector<VertexSet> bags, bool exact) {
  std::sort(bags.begin(), bags.end(), canonical_less);
  bags.erase(std::unique(bags.begin(), bags.end()), bags.end());
  return BagFamily{std::move(bags), exact};
}

BagFamily pmc_family(const Graph& g) { return BagFamily::make(pmc_sets(g), true); }

namespace {

struct BlockKey {
  VertexSet c;
  VertexSet x;
  friend bool operator==(const BlockKey&, const BlockKey&) = default;
};

struct BlockKeyHash {
  std::size_t operator()(const BlockKey& k) const { return k.c.hash() * 31 + k.x.hash(); }
};

// Candidate bag clipped to the block, plus the child components it leaves.
struct Choice {
  VertexSet bag;
  VertexSet inner; // bag & C
  std::vector<VertexSet> children;
  std::vector<VertexSet> child_seps;
};

std::vector<Choice> block_choices(const Graph& g, const BagFamily& fam, const VertexSet& c,
                                  const VertexSet& s) {
  std::vector<Choice> out;
  std::vector<VertexSet> seen;
  VertexSet region = s | c;
  for (const VertexSet& bag : fam.bags) {
    if (!s.is_subset_of(bag) || !bag.intersects(c))
      continue;
    if (fam.exact && (!bag.is_subset_of(region) || bag == s))
      continue;
    VertexSet clipped = bag & region;
    if (std::find(seen.begin(), seen.end(), clipped) != seen.end())
      continue;
    seen.push_back(clipped);
    Choice ch{clipped, clipped & c, {}, {}};
    for (VertexSet& d : components(g, c - clipped)) {
      ch.child_seps.push_back(neighborhood(g, d));
      ch.children.push_back(std::move(d));
    }
    out.push_back(std::move(ch));
  }
  return out;
}

struct Entry {
  Weight w;
  VertexSet y;
};

bool better(const Weight& w, const VertexSet& y, const Entry& old) {
  return w > old.w || (w == old.w && lex_preferred(y, old.y));
}

// Boundary summary aligned to the sorted chosen vertices: connectivity
// labels (forest) or accounted degrees (max degree); empty for MWIS.
using Aux = std::vector<int>;
using Table = std::map<Aux, Entry>;

void offer(Table& t, Aux aux, const Weight& w, const VertexSet& y) {
  auto it = t.find(aux);
  if (it == t.end())
    t.emplace(std::move(aux), Entry{w, y});
  else if (better(w, y, it->second))
    it->second = Entry{w, y};
}

void relabel(Aux& labels) {
  std::vector<int> map;
  for (int& l : labels) {
    auto it = std::find(map.begin(), map.end(), l);
    if (it == map.end()) {
      map.push_back(l);
      l = static_cast<int>(map.size()) - 1;
    } else {
      l = static_cast<int>(it - map.begin());
    }
  }
}

int find_root(std::vector<int>& uf, int x) {
  while (uf[x] != x)
    x = uf[x] = uf[uf[x]];
  return x;
}

class BlockSolver {
public:
  BlockSolver(const Graph& g, const BagFamily& fam, Problem p, int k, int cap)
      : g_(g), fam_(fam), p_(p), k_(k), cap_(cap), pos_(g.n(), -1) {}

  SolveResult run() {
    SolveResult out{p_, k_, Weight(0), g_.empty_set(), false, {}};
    for (const VertexSet& comp : components(g_)) {
      const Table& t = block(comp, g_.empty_set(), g_.empty_set());
      if (t.empty())
        throw InvariantViolation("root block produced no solution");
      const Entry* best = nullptr;
      for (const auto& [aux, e] : t)
        if (!best || better(e.w, e.y, *best))
          best = &e;
      out.weight += best->w;
      out.witness |= best->y;
    }
    if (capped_) {
      out.conditional = true;
      out.reason = "state_cap=" + std::to_string(cap_) +
                   " skipped bag states; value is a lower bound, exact if every bag meets an optimum "
                   "in at most state_cap vertices";
    }
    if (!is_feasible(g_, p_, k_, out.witness) || g_.weight(out.witness) != out.weight)
      throw InvariantViolation("block DP witness failed its feasibility re-check");
    return out;
  }

private:
  const Table& block(const VertexSet& c, const VertexSet& s, const VertexSet& xs) {
    BlockKey key{c, xs};
    if (auto it = memo_.find(key); it != memo_.end())
      return it->second;
    auto cit = choices_.find(c);
    if (cit == choices_.end())
      cit = choices_.emplace(c, block_choices(g_, fam_, c, s)).first;
    if (cit->second.empty())
      throw InfeasibleFamilyError("no bag of the family fits the block with component of size " +
                                  std::to_string(c.count()));
    Table result;
    for (const Choice& ch : cit->second)
      solve_choice(ch, xs, result);
    return memo_.emplace(key, std::move(result)).first->second;
  }

  void solve_choice(const Choice& ch, const VertexSet& xs, Table& result) {
    std::vector<int> inner = ch.inner.to_vector();
    std::vector<int> tag(g_.n(), 0);
    if (p_ == Problem::InducedForest)
      std::iota(tag.begin(), tag.end(), 0);
    enumerate(ch, inner, 0, xs, g_.empty_set(), tag, xs, result);
  }

  // Chooses Z inside the bag vertex by vertex, accounting the edges that
  // have an endpoint in Z.
  void enumerate(const Choice& ch, const std::vector<int>& inner, std::size_t i, VertexSet chosen,
                 VertexSet z, std::vector<int>& tag, const VertexSet& xs, Table& result) {
    if (i == inner.size()) {
      finish(ch, chosen, z, tag, xs, result);
      return;
    }
    enumerate(ch, inner, i + 1, chosen, z, tag, xs, result);
    const int v = inner[i];
    if (cap_ >= 0 && chosen.count() + 1 > cap_) {
      capped_ = true;
      return;
    }
    VertexSet nb = g_.neighbors(v) & chosen;
    std::vector<int> saved;
    switch (p_) {
    case Problem::Mwis:
      if (nb.any())
        return;
      break;
    case Problem::MaxDegree:
      if (nb.count() > k_)
        return;
      for (int u : nb)
        if (tag[u] + 1 > k_)
          return;
      saved = tag;
      for (int u : nb)
        ++tag[u];
      tag[v] = nb.count();
      break;
    case Problem::InducedForest:
      saved = tag;
      tag[v] = v;
      for (int u : nb) {
        int a = find_root(tag, u), b = find_root(tag, v);
        if (a == b) {
          tag = std::move(saved);
          return;
        }
        tag[a] = b;
      }
      break;
    }
    enumerate(ch, inner, i + 1, chosen.with(v), z.with(v), tag, xs, result);
    if (!saved.empty())
      tag = std::move(saved);
  }

  void finish(const Choice& ch, const VertexSet& chosen, const VertexSet& z, std::vector<int>& tag,
              const VertexSet& xs, Table& result) {
    std::vector<int> xv = chosen.to_vector();
    for (std::size_t i = 0; i < xv.size(); ++i)
      pos_[xv[i]] = static_cast<int>(i);
    Aux work;
    if (p_ == Problem::InducedForest) {
      for (int v : xv)
        work.push_back(find_root(tag, v));
      relabel(work);
    } else if (p_ == Problem::MaxDegree) {
      for (int v : xv)
        work.push_back(tag[v]);
    }
    Table partial;
    partial.emplace(work, Entry{g_.weight(z), z});
    for (std::size_t ci = 0; ci < ch.children.size() && !partial.empty(); ++ci) {
      VertexSet xc = chosen & ch.child_seps[ci];
      const Table& sub = block(ch.children[ci], ch.child_seps[ci], xc);
      // block() may recurse and overwrite pos_; restore it.
      for (std::size_t i = 0; i < xv.size(); ++i)
        pos_[xv[i]] = static_cast<int>(i);
      std::vector<int> cpos;
      for (int v : xc)
        cpos.push_back(pos_[v]);
      Table next;
      for (const auto& [aux, e] : partial)
        for (const auto& [caux, ce] : sub) {
          Aux merged = aux;
          if (!merge(merged, caux, cpos))
            continue;
          offer(next, std::move(merged), e.w + ce.w, e.y | ce.y);
        }
      partial = std::move(next);
    }
    std::vector<int> spos;
    for (int v : xs)
      spos.push_back(pos_[v]);
    for (auto& [aux, e] : partial) {
      Aux out;
      for (int p : spos)
        if (!aux.empty())
          out.push_back(aux[p]);
      if (p_ == Problem::InducedForest)
        relabel(out);
      offer(result, std::move(out), e.w, e.y);
    }
  }

  bool merge(Aux& work, const Aux& child, const std::vector<int>& cpos) const {
    switch (p_) {
    case Problem::Mwis:
      return true;
    case Problem::MaxDegree:
      for (std::size_t j = 0; j < cpos.size(); ++j)
        if ((work[cpos[j]] += child[j]) > k_)
          return false;
      return true;
    case Problem::InducedForest: {
      std::vector<int> uf(work.size());
      // Representative of each existing class is its first position.
      std::vector<int> first(work.size(), -1);
      for (std::size_t i = 0; i < work.size(); ++i) {
        if (first[work[i]] < 0)
          first[work[i]] = static_cast<int>(i);
        uf[i] = first[work[i]];
      }
      std::vector<int> anchor(child.size(), -1);
      for (std::size_t j = 0; j < cpos.size(); ++j) {
        int cls = child[j];
        if (anchor[cls] < 0) {
          anchor[cls] = cpos[j];
          continue;
        }
        int a = find_root(uf, anchor[cls]), b = find_root(uf, cpos[j]);
        if (a == b)
          return false;
        uf[b] = a;
      }
      for (std::size_t i = 0; i < work.size(); ++i)
        work[i] = find_root(uf, static_cast<int>(i));
      Aux tmp = work;
      relabel(tmp);
      work = std::move(tmp);
      return true;
    }
    }
    return false;
  }

  const Graph& g_;
  const BagFamily& fam_;
  Problem p_;
  int k_;
  int cap_;
  bool capped_ = false;
  std::vector<int> pos_;
  std::unordered_map<VertexSet, std::vector<Choice>> choices_;
  std::unordered_map<BlockKey, Table, BlockKeyHash> memo_;
};

} // namespace

SolveResult solve(const Graph& g, const BagFamily& bags, Problem p, int k, int state_cap) {
  if (p == Problem::MaxDegree && k < 0)
    throw DomainError("degree bound must be non-negative");
  return BlockSolver(g, bags, p, k, state_cap).run();
}

SolveResult solve_mwis(const Graph& g, const BagFamily& bags) { return solve(g, bags, Problem::Mwis); }

SolveResult solve_induced_forest(const Graph& g, const BagFamily& bags, int state_cap) {
  return solve(g, bags, Problem::InducedForest, 0, state_cap);
}

SolveResult solve_max_degree(const Graph& g, const BagFamily& bags, int k, int state_cap) {
  return solve(g, bags, Problem::MaxDegree, k, state_cap);
}

int treewidth_via_blocks(const Graph& g) {
  if (g.n() > 64)
    throw CapabilityError("treewidth_via_blocks is limited to 64 vertices");
  BagFamily fam = pmc_family(g);
  std::unordered_map<VertexSet, int> memo;
  auto solve_block = [&](auto&& self, const VertexSet& c, const VertexSet& s) -> int {
    if (auto it = memo.find(c); it != memo.end())
      return it->second;
    int best = g.n();
    for (const Choice& ch : block_choices(g, fam, c, s)) {
      int width = ch.bag.count() - 1;
      for (std::size_t i = 0; i < ch.children.size() && width < best; ++i)
        width = std::max(width, self(self, ch.children[i], ch.child_seps[i]));
      best = std::min(best, width);
    }
    memo.emplace(c, best);
    return best;
  };
  int tw = 0;
  for (const VertexSet& comp : components(g))
    tw = std::max(tw, solve_block(solve_block, comp, g.empty_set()));
  return tw;
}

} // namespace pmc
