#include "apmc/apmc_recursive.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "apmc/witness.hpp"

namespace apmc {

namespace {

Bitset tensor_and(const Bitset& a, const Bitset& b) {
  // Lifted AND of X x [q]^K and [q]^K x Y is exactly the tensor product.
  Bitset out(a.size() * b.size());
  a.for_each_set([&](std::size_t p) {
    b.for_each_set([&](std::size_t r) { out.set(p * b.size() + r); });
  });
  return out;
}

}  // namespace

CodeMatrix star_product(const CodeMatrix& x, const CodeMatrix& y, uint64_t bit_guard) {
  if (x.cols() != y.rows() || x.dim() != y.dim() || x.base_len() != y.base_len())
    throw DimensionMismatchError{};
  uint64_t out_len = TensorCodeword::length(x.base_len(), 2 * x.dim());
  if (out_len > bit_guard) throw LimitExceededError("star product exceeds bit guard");
  uint64_t side_len = TensorCodeword::length(x.base_len(), x.dim());

  CodeMatrix z(x.rows(), y.cols(), 2 * x.dim(), x.base_len());
  Bitset full_side(side_len);
  full_side.fill();

  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < y.cols(); ++j) {
      auto& out = z.at(i, j);
      out.kind = CodeMatrix::EntryKind::kZero;
      for (int a = 0; a < x.cols(); ++a) {
        const auto& xe = x.at(i, a);
        const auto& ye = y.at(a, j);
        if (xe.kind == CodeMatrix::EntryKind::kZero ||
            ye.kind == CodeMatrix::EntryKind::kZero)
          continue;
        if (out.kind == CodeMatrix::EntryKind::kOnes) break;  // already absorbed
        Bitset term;
        bool term_ones = false;
        if (xe.kind == CodeMatrix::EntryKind::kOnes &&
            ye.kind == CodeMatrix::EntryKind::kOnes) {
          term_ones = true;
        } else if (xe.kind == CodeMatrix::EntryKind::kOnes) {
          term = tensor_and(full_side, ye.bits);
        } else if (ye.kind == CodeMatrix::EntryKind::kOnes) {
          term = tensor_and(xe.bits, full_side);
        } else {
          term = tensor_and(xe.bits, ye.bits);
        }
        if (term_ones) {
          out.kind = CodeMatrix::EntryKind::kOnes;
          out.bits = Bitset();
        } else if (out.kind == CodeMatrix::EntryKind::kZero) {
          out.kind = CodeMatrix::EntryKind::kTensor;
          out.bits = std::move(term);
        } else {
          out.bits |= term;
        }
      }
    }
  return z;
}

CutFamily fix_to_latest(const MultiDigraph& g, [[maybe_unused]] int s, int t,
                        const ArcSet& mincut, int k, const LatestLookup& lookup) {
  std::map<ArcId, int> head_of;
  for (const Arc& a : g.arcs()) head_of[a.id] = a.head;

  std::vector<OrderedFamily> families;
  for (ArcId a : mincut) {
    int head = head_of.at(a);
    if (head == t) {
      families.push_back(family_with_minimum(ArcSet{a}, {}, {}));
    } else {
      const CutFamily& sub = lookup(head, t);
      families.push_back(family_with_minimum(ArcSet{a}, sub.cuts, sub.later));
    }
  }
  WsInstance inst;
  inst.k = k;
  for (const auto& fam : families) inst.families.push_back(fam.members);
  std::vector<ArcSet> candidates = solve_ws_pruning(inst);
  return filter_latest(candidates, families, k);
}

namespace {

CutFamily unreachable_family(int k) { return CutFamily{{ArcSet{}}, {{1}}, CutKind::kLatest, k}; }
CutFamily above_k_family(int k) { return CutFamily{{}, {}, CutKind::kLatest, k}; }

// Access into one of the two global tables; the backward direction stores the
// pair swapped, so "latest in direction d" reads naturally.
struct TableView {
  ApmcTable* table;
  bool swapped;

  CutFamily& at(int s, int t) const {
    return swapped ? table->at(t, s) : table->at(s, t);
  }
};

struct MergeCtx {
  const SuperimposedCode* code;
  int k;
  RecursiveOptions opts;
  WitnessDecoder* decoder = nullptr;
  // Diagnostics: how many merge steps ran the coded vs. pruning path.
  long coded_steps = 0;
  long fallback_steps = 0;
};

// One family per relevant inner vertex for the pair (s,t): the left option
// set and the right option set concatenated, with the impossibility and
// short-circuit conventions shared by the coded and pruning paths.
struct PairFamilies {
  std::vector<std::vector<ArcSet>> members;
  bool impossible = false;
};

enum class SideKind { kZero, kOnes, kTensor };

struct SideFamily {
  SideKind kind = SideKind::kZero;
  const std::vector<ArcSet>* cuts = nullptr;  // valid when kTensor
};

SideFamily side_from_family(const CutFamily& fam) {
  if (fam.is_unreachable_family()) return {SideKind::kZero, nullptr};
  if (fam.cuts.empty()) return {SideKind::kOnes, nullptr};
  return {SideKind::kTensor, &fam.cuts};
}

PairFamilies combine_sides(const std::vector<SideFamily>& left,
                           const std::vector<SideFamily>& right) {
  PairFamilies out;
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (left[i].kind == SideKind::kZero || right[i].kind == SideKind::kZero) continue;
    std::vector<ArcSet> members;
    if (left[i].kind == SideKind::kTensor)
      members.insert(members.end(), left[i].cuts->begin(), left[i].cuts->end());
    if (right[i].kind == SideKind::kTensor)
      members.insert(members.end(), right[i].cuts->begin(), right[i].cuts->end());
    if (members.empty()) {
      out.impossible = true;
      return out;
    }
    out.members.push_back(std::move(members));
  }
  return out;
}

// Candidate minimal covering sets per target, computed either through the
// encode -> star product -> decode pipeline or through Algorithm 1 on the
// same instances.
class MergeStep {
 public:
  MergeStep(MergeCtx& ctx, std::vector<int> inner) : ctx_(ctx), inner_(std::move(inner)) {}

  // left_of(s) and right_of(t) give the per-inner-vertex option sets.
  template <typename LeftFn, typename RightFn>
  void run(const std::vector<int>& sources, const std::vector<int>& targets,
           LeftFn&& left_of, RightFn&& right_of,
           std::map<std::pair<int, int>, std::vector<ArcSet>>& candidates_out) {
    // Gather sides and the per-side dimension K.
    std::map<int, std::vector<SideFamily>> left, right;
    std::size_t max_family = 1;
    for (int s : sources) {
      auto& row = left[s];
      for (int a : inner_) {
        row.push_back(left_of(s, a));
        if (row.back().kind == SideKind::kTensor)
          max_family = std::max(max_family, row.back().cuts->size());
      }
    }
    for (int t : targets) {
      auto& col = right[t];
      for (int a : inner_) {
        col.push_back(right_of(a, t));
        if (col.back().kind == SideKind::kTensor)
          max_family = std::max(max_family, col.back().cuts->size());
      }
    }
    int K = static_cast<int>(max_family);
    uint64_t z_len = 0;
    bool fits = K <= ctx_.opts.per_side_k_cap;
    if (fits) {
      z_len = TensorCodeword::length(ctx_.code->q(), 2 * K);
      fits = z_len <= ctx_.opts.tensor_bit_guard;
    }
    if (!fits && ctx_.opts.strict_codes)
      throw LimitExceededError("recursive merge exceeds code limits");

    if (fits) {
      ctx_.coded_steps++;
      run_coded(sources, targets, left, right, K, candidates_out);
    } else {
      ctx_.fallback_steps++;
      run_pruning(sources, targets, left, right, candidates_out);
    }
  }

 private:
  void run_coded(const std::vector<int>& sources, const std::vector<int>& targets,
                 const std::map<int, std::vector<SideFamily>>& left,
                 const std::map<int, std::vector<SideFamily>>& right, int K,
                 std::map<std::pair<int, int>, std::vector<ArcSet>>& out) {
    int n1 = static_cast<int>(sources.size());
    int ni = static_cast<int>(inner_.size());
    int n2 = static_cast<int>(targets.size());
    CodeMatrix x(n1, ni, K, ctx_.code->q());
    CodeMatrix y(ni, n2, K, ctx_.code->q());
    auto fill = [&](CodeMatrix::Entry& e, const SideFamily& side) {
      switch (side.kind) {
        case SideKind::kZero:
          e.kind = CodeMatrix::EntryKind::kZero;
          break;
        case SideKind::kOnes:
          e.kind = CodeMatrix::EntryKind::kOnes;
          break;
        case SideKind::kTensor:
          e.kind = CodeMatrix::EntryKind::kTensor;
          e.bits = encode_family(*ctx_.code, K, *side.cuts, ctx_.opts.tensor_bit_guard).bits;
          break;
      }
    };
    for (int i = 0; i < n1; ++i)
      for (int a = 0; a < ni; ++a) fill(x.at(i, a), left.at(sources[i])[a]);
    for (int a = 0; a < ni; ++a)
      for (int j = 0; j < n2; ++j) fill(y.at(a, j), right.at(targets[j])[a]);

    CodeMatrix z = star_product(x, y, ctx_.opts.tensor_bit_guard);
    for (int i = 0; i < n1; ++i)
      for (int j = 0; j < n2; ++j) {
        const auto& e = z.at(i, j);
        std::vector<ArcSet> candidates;
        switch (e.kind) {
          case CodeMatrix::EntryKind::kZero:
            candidates = {ArcSet{}};
            break;
          case CodeMatrix::EntryKind::kOnes:
            break;  // no admissible witness
          case CodeMatrix::EntryKind::kTensor: {
            TensorCodeword word;
            word.dim = 2 * K;
            word.base_len = ctx_.code->q();
            word.bits = e.bits;
            candidates = ctx_.decoder->decode(word);
            break;
          }
        }
        out[{sources[i], targets[j]}] = std::move(candidates);
      }
  }

  void run_pruning(const std::vector<int>& sources, const std::vector<int>& targets,
                   const std::map<int, std::vector<SideFamily>>& left,
                   const std::map<int, std::vector<SideFamily>>& right,
                   std::map<std::pair<int, int>, std::vector<ArcSet>>& out) {
    for (int s : sources)
      for (int t : targets) {
        PairFamilies fams = combine_sides(left.at(s), right.at(t));
        if (fams.impossible) {
          out[{s, t}] = {};
          continue;
        }
        WsInstance inst;
        inst.k = ctx_.k;
        inst.families = std::move(fams.members);
        out[{s, t}] = solve_ws_pruning(inst);
      }
  }

  MergeCtx& ctx_;
  std::vector<int> inner_;
};

// The two-step merge of one direction: V1 -> V2 pairs, writing d-latest
// families into `tlat`. `tear` serves d-earliest families of V1 pairs.
void merge_direction(MergeCtx& ctx, const MultiDigraph& block, const std::vector<int>& v1,
                     const std::vector<int>& v2, const TableView& tlat,
                     const TableView& tear) {
  std::vector<char> in_v1(block.vertex_count(), 0), in_v2(block.vertex_count(), 0);
  for (int v : v1) in_v1[v] = 1;
  for (int v : v2) in_v2[v] = 1;

  // Arc blocks: A12 from V1 into V2, A2 inside V2, the rest is A1.
  std::vector<Arc> mid_arcs;
  for (const Arc& a : block.arcs())
    if ((in_v1[a.tail] && in_v2[a.head]) || (in_v2[a.tail] && in_v2[a.head]))
      mid_arcs.push_back(a);
  MultiDigraph g_mid = MultiDigraph::from_arcs(block.vertex_count(), mid_arcs);

  // Parallel-arc bundles s -> v across the split.
  std::map<std::pair<int, int>, ArcSet> bundles;
  for (const Arc& a : block.arcs())
    if (in_v1[a.tail] && in_v2[a.head]) bundles[{a.tail, a.head}].push_back(a.id);
  for (auto& [key, bundle] : bundles) canonicalize(bundle);

  // Step 1: cuts in (V, A12 u A2). Left options are the bundles; right
  // options the V2-internal latest families.
  std::map<std::pair<int, int>, std::vector<ArcSet>> bundle_fams;
  auto left1 = [&](int s, int v) -> SideFamily {
    auto it = bundles.find({s, v});
    if (it == bundles.end()) return {SideKind::kZero, nullptr};
    if (static_cast<int>(it->second.size()) > ctx.k) return {SideKind::kOnes, nullptr};
    auto& stored = bundle_fams[{s, v}];
    if (stored.empty()) stored.push_back(it->second);
    return {SideKind::kTensor, &stored};
  };
  auto right1 = [&](int v, int t) -> SideFamily {
    if (v == t) return {SideKind::kOnes, nullptr};
    return side_from_family(tlat.at(v, t));
  };
  std::map<std::pair<int, int>, std::vector<ArcSet>> cand1;
  MergeStep step1(ctx, v2);
  step1.run(v1, v2, left1, right1, cand1);

  std::map<std::pair<int, int>, CutFamily> mid_latest;
  auto mid_lookup = [&](int y, int t) -> const CutFamily& { return tlat.at(y, t); };
  for (const auto& [pair, candidates] : cand1) {
    auto [s, t] = pair;
    if (candidates.empty()) {
      mid_latest[pair] = above_k_family(ctx.k);
    } else if (candidates.front().empty()) {
      mid_latest[pair] = unreachable_family(ctx.k);
    } else {
      mid_latest[pair] = fix_to_latest(g_mid, s, t, candidates.front(), ctx.k, mid_lookup);
    }
  }

  // Step 2: cuts in the whole block. Left options are V1-internal earliest
  // families, right options the step-1 results.
  auto left2 = [&](int s, int a) -> SideFamily {
    if (s == a) return {SideKind::kOnes, nullptr};
    return side_from_family(tear.at(s, a));
  };
  auto right2 = [&](int a, int t) -> SideFamily {
    return side_from_family(mid_latest.at({a, t}));
  };
  std::map<std::pair<int, int>, std::vector<ArcSet>> cand2;
  MergeStep step2(ctx, v1);
  step2.run(v1, v2, left2, right2, cand2);

  // Fixing consults latest families of cut-arc heads in the block; heads in
  // V1 come from pairs of this very step, so sources run in reverse
  // topological order and results land in the table as they are produced.
  auto full_lookup = [&](int y, int t) -> const CutFamily& { return tlat.at(y, t); };
  for (auto s_it = v1.rbegin(); s_it != v1.rend(); ++s_it) {
    int s = *s_it;
    for (int t : v2) {
      const auto& candidates = cand2.at({s, t});
      if (candidates.empty()) {
        tlat.at(s, t) = above_k_family(ctx.k);
      } else if (candidates.front().empty()) {
        tlat.at(s, t) = unreachable_family(ctx.k);
      } else {
        tlat.at(s, t) = fix_to_latest(block, s, t, candidates.front(), ctx.k, full_lookup);
      }
    }
  }
}

}  // namespace

ApmcTable all_pairs_latest_cuts_recursive(const MultiDigraph& g, int k,
                                          const RecursiveOptions& opts) {
  std::vector<int> order = topological_order(g);
  int n = g.vertex_count();

  // Odd orders get one isolated padding vertex, stripped at the end.
  MultiDigraph padded = g;
  int np = n;
  if (n % 2 == 1) {
    np = n + 1;
    padded = MultiDigraph::from_arcs(np, g.arcs());
    order.push_back(n);
  }

  SuperimposedCode code =
      SuperimposedCode::kautz_singleton(std::max(1, k), std::max(2, padded.arc_count()));
  WitnessDecoder decoder(code, k);
  MergeCtx ctx{&code, k, opts, &decoder};

  ApmcTable latest(np, k), earliest(np, k);
  for (int s = 0; s < np; ++s)
    for (int t = 0; t < np; ++t)
      if (s != t) {
        latest.at(s, t) = unreachable_family(k);
        earliest.at(s, t) = unreachable_family(k);
      }

  std::function<void(int, int)> rec = [&](int lo, int hi) {
    if (hi - lo <= 1) return;
    int mid = (lo + hi) / 2;
    rec(lo, mid);
    rec(mid, hi);
    std::vector<int> block_verts(order.begin() + lo, order.begin() + hi);
    std::vector<int> v1(order.begin() + lo, order.begin() + mid);
    std::vector<int> v2(order.begin() + mid, order.begin() + hi);
    MultiDigraph block = induced_subgraph(padded, block_verts);

    merge_direction(ctx, block, v1, v2, TableView{&latest, false},
                    TableView{&earliest, false});

    MultiDigraph rev = reverse(block);
    std::vector<int> rv1(v2.rbegin(), v2.rend());
    std::vector<int> rv2(v1.rbegin(), v1.rend());
    merge_direction(ctx, rev, rv1, rv2, TableView{&earliest, true},
                    TableView{&latest, true});
  };
  rec(0, np);

  if (np == n) return latest;
  ApmcTable out(n, k);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (s != t) out.at(s, t) = latest.at(s, t);
  return out;
}

}  // namespace apmc
