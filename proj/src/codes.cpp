#include "apmc/codes.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace apmc {

namespace {

bool is_prime(int x) {
  if (x < 2) return false;
  for (int p = 2; p * p <= x; ++p)
    if (x % p == 0) return false;
  return true;
}

int bits_for(int u) {
  int b = 1;
  while ((1 << b) < u) ++b;
  return b;
}

}  // namespace

Bitset SuperimposedCode::encode(const ArcSet& xs) const {
  Bitset out(static_cast<std::size_t>(q_));
  for (ArcId x : xs) out |= words_[x];
  return out;
}

std::optional<ArcSet> SuperimposedCode::decode(const Bitset& bits) const {
  switch (kind_) {
    case Kind::kFastProduct:
      return decode_fast(bits);
    case Kind::kParity: {
      if (bits.none()) return ArcSet{};
      auto w = decode_parity_word(bits);
      if (!w) return std::nullopt;
      return ArcSet{*w};
    }
    case Kind::kGeneric:
      return decode_generic(bits);
  }
  return std::nullopt;
}

std::optional<ArcSet> SuperimposedCode::decode_generic(const Bitset& bits) const {
  // For a d-superimposed code, membership is exactly codeword containment as
  // long as the input is a union of at most d codewords; the re-encoding
  // check rejects everything else.
  ArcSet xs;
  for (int x = 0; x < u_; ++x)
    if (words_[x].is_subset_of(bits)) xs.push_back(x);
  if (static_cast<int>(xs.size()) > d_) return std::nullopt;
  if (!(encode(xs) == bits)) return std::nullopt;
  return xs;
}

std::optional<int> SuperimposedCode::decode_parity_word(const Bitset& column) const {
  int value = 0;
  for (int i = 0; i < parity_bits_; ++i) {
    bool hi = column.test(static_cast<std::size_t>(2 * i));
    bool lo = column.test(static_cast<std::size_t>(2 * i + 1));
    if (hi == lo) return std::nullopt;  // (1,1) collision or (0,0) gap
    value = (value << 1) | (hi ? 1 : 0);
  }
  if (value >= u_) return std::nullopt;
  return value;
}

std::optional<ArcSet> SuperimposedCode::decode_fast(const Bitset& bits) const {
  ArcSet candidates;
  for (int i = 0; i < outer_len_; ++i) {
    Bitset column(static_cast<std::size_t>(inner_len_));
    bool nonempty = false;
    for (int j = 0; j < inner_len_; ++j)
      if (bits.test(static_cast<std::size_t>(i) * inner_len_ + j)) {
        column.set(static_cast<std::size_t>(j));
        nonempty = true;
      }
    if (!nonempty) continue;
    // Columns where two or more codewords overlap fail the parity check and
    // carry no vote.
    int v = 0;
    {
      int value = 0;
      bool ok = true;
      for (int b = 0; b < parity_bits_; ++b) {
        bool hi = column.test(static_cast<std::size_t>(2 * b));
        bool lo = column.test(static_cast<std::size_t>(2 * b + 1));
        if (hi == lo) {
          ok = false;
          break;
        }
        value = (value << 1) | (hi ? 1 : 0);
      }
      if (!ok || value >= u_) continue;
      v = value;
    }
    candidates.push_back(v);
  }
  canonicalize(candidates);
  if (static_cast<int>(candidates.size()) > d_) return std::nullopt;
  if (!(encode(candidates) == bits)) return std::nullopt;
  return candidates;
}

SuperimposedCode SuperimposedCode::kautz_singleton(int d, int u) {
  if (d < 1 || u < 2) throw std::invalid_argument("kautz_singleton needs d >= 1, u >= 2");
  int chosen_q = -1, chosen_l = -1;
  for (int Q = 2; Q <= (1 << 16); ++Q) {
    if (!is_prime(Q)) continue;
    long long pw = 1;
    int l = 0;
    while (pw < u) {
      pw *= Q;
      ++l;
    }
    if (l == 0) l = 1;
    if (Q >= d * (l - 1) + 1) {
      chosen_q = Q;
      chosen_l = l;
      break;
    }
  }
  if (chosen_q < 0) throw ParameterOverflowError{};

  SuperimposedCode code;
  code.u_ = u;
  code.d_ = d;
  code.q_ = chosen_q * chosen_q;
  code.kind_ = Kind::kGeneric;
  code.words_.reserve(u);
  for (int w = 0; w < u; ++w) {
    Bitset bits(static_cast<std::size_t>(code.q_));
    // Coefficients of w base Q, f(x) = sum c_j x^j evaluated at every point.
    std::vector<int> coeff(chosen_l, 0);
    int rest = w;
    for (int j = 0; j < chosen_l; ++j) {
      coeff[j] = rest % chosen_q;
      rest /= chosen_q;
    }
    for (int x = 0; x < chosen_q; ++x) {
      long long val = 0, pw = 1;
      for (int j = 0; j < chosen_l; ++j) {
        val = (val + coeff[j] * pw) % chosen_q;
        pw = (pw * x) % chosen_q;
      }
      bits.set(static_cast<std::size_t>(x) * chosen_q + static_cast<std::size_t>(val));
    }
    code.words_.push_back(std::move(bits));
  }
  return code;
}

SuperimposedCode SuperimposedCode::parity(int u) {
  if (u < 2) throw std::invalid_argument("parity code needs u >= 2");
  int b = bits_for(u);
  SuperimposedCode code;
  code.u_ = u;
  code.d_ = 1;
  code.q_ = 2 * b;
  code.kind_ = Kind::kParity;
  code.parity_bits_ = b;
  for (int w = 0; w < u; ++w) {
    Bitset bits(static_cast<std::size_t>(code.q_));
    for (int i = 0; i < b; ++i) {
      int bit = (w >> (b - 1 - i)) & 1;  // MSB first
      bits.set(static_cast<std::size_t>(2 * i + (bit ? 0 : 1)));
    }
    code.words_.push_back(std::move(bits));
  }
  return code;
}

SuperimposedCode SuperimposedCode::fast_product(int d, int u) {
  SuperimposedCode outer = kautz_singleton(d, u);
  SuperimposedCode inner = parity(u);
  SuperimposedCode code;
  code.u_ = u;
  code.d_ = d;
  code.q_ = outer.q_ * inner.q_;
  code.kind_ = Kind::kFastProduct;
  code.outer_len_ = outer.q_;
  code.inner_len_ = inner.q_;
  code.parity_bits_ = inner.parity_bits_;
  for (int w = 0; w < u; ++w) {
    Bitset bits(static_cast<std::size_t>(code.q_));
    outer.words_[w].for_each_set([&](std::size_t i) {
      inner.words_[w].for_each_set(
          [&](std::size_t j) { bits.set(i * static_cast<std::size_t>(inner.q_) + j); });
    });
    code.words_.push_back(std::move(bits));
  }
  return code;
}

TensorCodeword encode_family(const SuperimposedCode& code, int K,
                             const std::vector<ArcSet>& family, uint64_t bit_guard) {
  if (family.empty()) throw EmptyFamilyError{};
  if (static_cast<int>(family.size()) > K)
    throw LimitExceededError("family larger than tensor dimension K");
  uint64_t total = TensorCodeword::length(code.q(), K);
  if (total > bit_guard) throw LimitExceededError("tensor codeword exceeds bit guard");

  std::vector<Bitset> parts;
  for (int i = 0; i < K; ++i) {
    // Pad to K entries by repeating the first set.
    const ArcSet& set = i < static_cast<int>(family.size()) ? family[i] : family[0];
    parts.push_back(code.encode(set));
  }

  TensorCodeword out;
  out.dim = K;
  out.base_len = code.q();
  out.bits = Bitset(total);
  // Iterative outer product over set positions.
  std::vector<uint64_t> positions{0};
  for (int axis = 0; axis < K; ++axis) {
    std::vector<uint64_t> next;
    next.reserve(positions.size() * parts[axis].count());
    for (uint64_t p : positions)
      parts[axis].for_each_set(
          [&](std::size_t j) { next.push_back(p * code.q() + j); });
    positions = std::move(next);
  }
  for (uint64_t p : positions) out.bits.set(p);
  return out;
}

TensorCodeword slice(const TensorCodeword& w, int axis, int value) {
  TensorCodeword out;
  out.dim = w.dim - 1;
  out.base_len = w.base_len;
  uint64_t q = static_cast<uint64_t>(w.base_len);
  out.bits = Bitset(TensorCodeword::length(w.base_len, out.dim));
  uint64_t stride = 1;
  for (int i = 0; i < w.dim - 1 - axis; ++i) stride *= q;
  w.bits.for_each_set([&](std::size_t p) {
    uint64_t coord = (p / stride) % q;
    if (coord != static_cast<uint64_t>(value)) return;
    uint64_t hi = p / (stride * q);
    uint64_t lo = p % stride;
    out.bits.set(hi * stride + lo);
  });
  return out;
}

namespace {

// Diagonal positions (r,...,r) of a dim-K tensor: r * (q^K - 1)/(q - 1).
Bitset diagonal_elements(const TensorCodeword& s) {
  Bitset p(static_cast<std::size_t>(s.base_len));
  uint64_t step = 0, pw = 1;
  for (int i = 0; i < s.dim; ++i) {
    step += pw;
    pw *= static_cast<uint64_t>(s.base_len);
  }
  for (int r = 0; r < s.base_len; ++r)
    if (s.bits.test(static_cast<std::size_t>(r) * step)) p.set(static_cast<std::size_t>(r));
  return p;
}

// Coordinate tuples of the set positions, flattened; one division pass so
// the cover checks are plain table scans.
std::vector<uint16_t> point_coords(const TensorCodeword& s) {
  uint64_t q = static_cast<uint64_t>(s.base_len);
  std::vector<uint16_t> coords;
  coords.reserve(s.bits.count() * static_cast<std::size_t>(s.dim));
  s.bits.for_each_set([&](std::size_t p) {
    uint64_t rest = p;
    for (int i = 0; i < s.dim; ++i) {
      coords.push_back(static_cast<uint16_t>(rest % q));
      rest /= q;
    }
  });
  return coords;
}

// True iff some set position of s has every coordinate outside `mask`.
// Equivalently S intersect ([q] \ mask)^dim is non-empty.
bool has_point_avoiding(const std::vector<uint16_t>& coords, int dim, const Bitset& mask) {
  for (std::size_t base = 0; base < coords.size(); base += dim) {
    bool hit = false;
    for (int i = 0; i < dim; ++i)
      if (mask.test(coords[base + i])) {
        hit = true;
        break;
      }
    if (!hit) return true;
  }
  return false;
}

struct CollapseContext {
  const SuperimposedCode* code;
  int k;
  // Memo per dimension: distinct tensors already expanded.
  std::vector<std::unordered_map<Bitset, std::vector<Bitset>, BitsetHash>> memo;
};

// All nonempty (axis, value) slices in one pass over the set bits,
// deduplicated by content. Slices at values inside `skip` are dropped: the
// completeness argument only ever picks slices at values outside C(W), and
// the diagonal P sits inside C(W) for every solution W.
std::vector<Bitset> distinct_slices(const TensorCodeword& s, const Bitset& skip) {
  uint64_t q = static_cast<uint64_t>(s.base_len);
  uint64_t sub_len = TensorCodeword::length(s.base_len, s.dim - 1);
  std::map<std::pair<int, int>, std::vector<uint64_t>> buckets;
  s.bits.for_each_set([&](std::size_t p) {
    uint64_t rest = p;
    uint64_t low_stride = 1;
    for (int axis = s.dim - 1; axis >= 0; --axis) {
      uint64_t coord = rest % q;
      rest /= q;
      if (!skip.test(coord)) {
        uint64_t hi = p / (low_stride * q);
        uint64_t lo = p % low_stride;
        buckets[{axis, static_cast<int>(coord)}].push_back(hi * low_stride + lo);
      }
      low_stride *= q;
    }
  });
  std::vector<Bitset> out;
  std::unordered_set<Bitset, BitsetHash> seen;
  for (auto& [key, positions] : buckets) {
    Bitset bits(sub_len);
    for (uint64_t p : positions) bits.set(p);
    if (seen.insert(bits).second) out.push_back(std::move(bits));
  }
  return out;
}

const std::vector<Bitset>& collapse(CollapseContext& ctx, const TensorCodeword& s) {
  auto& level = ctx.memo[static_cast<std::size_t>(s.dim)];
  auto it = level.find(s.bits);
  if (it != level.end()) return it->second;
  if (s.dim == 1) return level.emplace(s.bits, std::vector<Bitset>{s.bits}).first->second;

  Bitset p = diagonal_elements(s);
  bool p_empty = p.none();
  uint64_t sub_len = TensorCodeword::length(s.base_len, s.dim - 1);

  // Unions of up to k distinct slices; the empty union stands in for "fewer
  // slices needed" and keeps diagonal-only solutions reachable. A slice
  // already inside the accumulated union is skipped: that union is
  // reproduced by a shorter pick, so nothing is lost.
  std::vector<Bitset> slices = distinct_slices(s, p);
  std::unordered_set<Bitset, BitsetHash> unions;
  unions.insert(Bitset(sub_len));
  std::function<void(std::size_t, int, const Bitset&)> choose =
      [&](std::size_t start, int depth, const Bitset& acc) {
        if (depth == ctx.k) return;
        for (std::size_t i = start; i < slices.size(); ++i) {
          if (slices[i].is_subset_of(acc)) continue;
          Bitset merged = acc;
          merged |= slices[i];
          unions.insert(merged);
          choose(i + 1, depth + 1, merged);
        }
      };
  choose(0, 0, Bitset(sub_len));

  std::unordered_set<Bitset, BitsetHash> answers;
  for (const Bitset& u : unions) {
    TensorCodeword sub;
    sub.dim = s.dim - 1;
    sub.base_len = s.base_len;
    sub.bits = u;
    for (const Bitset& inner : collapse(ctx, sub)) {
      if (p_empty) {
        answers.insert(inner);
      } else {
        Bitset merged = inner;
        merged |= p;
        answers.insert(std::move(merged));
      }
    }
  }
  std::vector<Bitset> out(answers.begin(), answers.end());
  std::sort(out.begin(), out.end());
  return level.emplace(s.bits, std::move(out)).first->second;
}

std::vector<ArcSet> run_decode(CollapseContext& ctx, const TensorCodeword& s) {
  const SuperimposedCode& code = *ctx.code;
  const std::vector<Bitset>& candidates = collapse(ctx, s);
  std::vector<uint16_t> coords = point_coords(s);
  std::set<ArcSet> solutions;
  for (const Bitset& cand : candidates) {
    auto witness = code.decode(cand);
    if (!witness || static_cast<int>(witness->size()) > ctx.k) continue;
    if (has_point_avoiding(coords, s.dim, cand)) continue;  // [cover] fails
    bool minimal = true;
    for (ArcId x : *witness) {
      Bitset without = code.encode(set_minus(*witness, x));
      if (!has_point_avoiding(coords, s.dim, without)) {
        minimal = false;
        break;
      }
    }
    if (minimal) solutions.insert(*witness);
  }
  std::vector<ArcSet> out(solutions.begin(), solutions.end());
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

}  // namespace

std::vector<ArcSet> decode_witness(const TensorCodeword& s, const SuperimposedCode& code,
                                   int k) {
  CollapseContext ctx;
  ctx.code = &code;
  ctx.k = k;
  ctx.memo.resize(static_cast<std::size_t>(s.dim) + 1);
  return run_decode(ctx, s);
}

struct WitnessDecoder::Impl {
  CollapseContext ctx;
};

WitnessDecoder::WitnessDecoder(const SuperimposedCode& code, int k)
    : impl_(std::make_unique<Impl>()) {
  impl_->ctx.code = &code;
  impl_->ctx.k = k;
}

WitnessDecoder::~WitnessDecoder() = default;

std::vector<ArcSet> WitnessDecoder::decode(const TensorCodeword& s) {
  auto& memo = impl_->ctx.memo;
  if (memo.size() < static_cast<std::size_t>(s.dim) + 1)
    memo.resize(static_cast<std::size_t>(s.dim) + 1);
  return run_decode(impl_->ctx, s);
}

}  // namespace apmc
