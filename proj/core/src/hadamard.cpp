#include "hoffdig/hadamard.hpp"

#include <algorithm>
#include <cmath>

#include "hoffdig/biangular.hpp"
#include "hoffdig/hoffman.hpp"
#include "hoffdig/nrd.hpp"

namespace hoffdig {

SignMatrix::SignMatrix(IntMatrix m) : m_(std::move(m)) {
  if (!m_.is_square()) throw std::invalid_argument("sign matrix must be square");
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    for (std::size_t j = 0; j < m_.cols(); ++j) {
      if (m_(i, j) != 1 && m_(i, j) != -1) {
        throw std::invalid_argument("entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not +-1");
      }
    }
  }
}

bool is_hadamard(const IntMatrix& h) {
  if (!h.is_square()) return false;
  for (auto v : h.entries()) {
    if (v != 1 && v != -1) return false;
  }
  return mul(h, transpose(h)) == scalar_mul(static_cast<std::int64_t>(h.rows()), IntMatrix::identity(h.rows()));
}

bool is_hadamard(const SignMatrix& h) { return is_hadamard(h.matrix()); }

bool is_admissible_hadamard_order(std::size_t m) { return m == 1 || m == 2 || m % 4 == 0; }

namespace {

std::string cell(std::size_t r, std::size_t c) { return "(" + std::to_string(r) + "," + std::to_string(c) + ")"; }

IdentityCheck make_check(std::string name, std::string witness) { return {std::move(name), witness.empty(), witness}; }

}  // namespace

std::vector<IdentityCheck> check_hadamard(const IntMatrix& h) {
  std::vector<IdentityCheck> out;
  if (!h.is_square()) {
    out.push_back(make_check("square", std::to_string(h.rows()) + "x" + std::to_string(h.cols())));
    return out;
  }
  const std::size_t n = h.rows();
  std::string w;
  for (std::size_t r = 0; r < n && w.empty(); ++r) {
    for (std::size_t c = 0; c < n && w.empty(); ++c) {
      if (h(r, c) != 1 && h(r, c) != -1) w = "cell " + cell(r, c) + " is " + std::to_string(h(r, c));
    }
  }
  out.push_back(make_check("entries are +-1", w));
  w.clear();
  const IntMatrix gram = mul(h, transpose(h));
  for (std::size_t r = 0; r < n && w.empty(); ++r) {
    for (std::size_t c = 0; c < n && w.empty(); ++c) {
      const std::int64_t want = r == c ? static_cast<std::int64_t>(n) : 0;
      if (gram(r, c) != want) w = "cell " + cell(r, c) + ": " + std::to_string(gram(r, c)) + " != " + std::to_string(want);
    }
  }
  out.push_back(make_check("H H^T = nI", w));
  out.push_back(make_check("order is 1, 2 or a multiple of 4",
                           is_admissible_hadamard_order(n) ? "" : "order " + std::to_string(n)));
  return out;
}

std::vector<IdentityCheck> check_bush_type(const IntMatrix& h, bool skew) {
  std::vector<IdentityCheck> out = check_hadamard(h);
  if (!h.is_square()) return out;
  const std::size_t order = h.rows();
  const auto b = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(order))));
  if (order == 0 || b * b != order || b % 2 != 0) {
    out.push_back(make_check("order is 4n^2", "order " + std::to_string(order)));
    return out;
  }
  out.push_back(make_check("order is 4n^2", ""));
  std::string diag, sums;
  for (std::size_t bi = 0; bi < b; ++bi) {
    for (std::size_t bj = 0; bj < b; ++bj) {
      for (std::size_t r = 0; r < b; ++r) {
        std::int64_t row_sum = 0, col_sum = 0;
        for (std::size_t c = 0; c < b; ++c) {
          const auto v = h(bi * b + r, bj * b + c);
          if (bi == bj && v != 1 && diag.empty()) diag = "cell " + cell(bi * b + r, bj * b + c);
          row_sum += v;
          col_sum += h(bi * b + c, bj * b + r);
        }
        if (bi != bj && sums.empty() && (row_sum != 0 || col_sum != 0)) {
          sums = "block " + cell(bi, bj) + (row_sum != 0 ? " row " : " column ") + std::to_string(r);
        }
      }
    }
  }
  out.push_back(make_check("diagonal blocks are J_{2n}", diag));
  out.push_back(make_check("off-diagonal blocks have zero row and column sums", sums));
  if (skew) {
    std::string w;
    for (std::size_t r = 0; r < order && w.empty(); ++r) {
      for (std::size_t c = 0; c < order && w.empty(); ++c) {
        if (r / b == c / b) continue;
        if (h(r, c) != -h(c, r)) w = "cell " + cell(r, c);
      }
    }
    out.push_back(make_check("H - I (x) J is skew-symmetric", w));
  }
  return out;
}

SignMatrix sylvester(unsigned k) {
  const IntMatrix h2{{1, 1}, {1, -1}};
  IntMatrix h{{1}};
  for (unsigned i = 0; i < k; ++i) h = kron(h, h2);
  return SignMatrix(std::move(h));
}

SignMatrix normalize(const SignMatrix& h) {
  if (!is_hadamard(h)) throw std::invalid_argument("normalize: input is not a Hadamard matrix");
  IntMatrix m = h.matrix();
  const std::size_t n = m.rows();
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) < 0) {
      for (std::size_t i = 0; i < n; ++i) m(i, j) = -m(i, j);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, 0) < 0) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = -m(i, j);
    }
  }
  return SignMatrix(std::move(m));
}

BlockPartitionedHadamard::BlockPartitionedHadamard(SignMatrix base) : base_(std::move(base)) {
  const std::size_t order = base_.order();
  const auto root = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(order))));
  if (order == 0 || root * root != order || root % 2 != 0) {
    throw std::invalid_argument("order " + std::to_string(order) + " is not of the form 4n^2");
  }
  block_ = root;
}

IntMatrix BlockPartitionedHadamard::block_at(std::size_t i, std::size_t j) const {
  return base_.matrix().block(i * block_, j * block_, block_, block_);
}

bool is_bush_type(const BlockPartitionedHadamard& h) {
  if (!is_hadamard(h.base())) return false;
  const std::size_t b = h.block();
  const IntMatrix& m = h.base().matrix();
  for (std::size_t bi = 0; bi < b; ++bi) {
    for (std::size_t bj = 0; bj < b; ++bj) {
      for (std::size_t r = 0; r < b; ++r) {
        std::int64_t row_sum = 0, col_sum = 0;
        for (std::size_t c = 0; c < b; ++c) {
          const auto v = m(bi * b + r, bj * b + c);
          if (bi == bj && v != 1) return false;
          row_sum += v;
          col_sum += m(bi * b + c, bj * b + r);
        }
        if (bi != bj && (row_sum != 0 || col_sum != 0)) return false;
      }
    }
  }
  return true;
}

bool is_skew_bush_type(const BlockPartitionedHadamard& h) {
  if (!is_bush_type(h)) return false;
  const std::size_t b = h.block();
  const IntMatrix off = sub(h.base().matrix(), kron(IntMatrix::identity(b), IntMatrix::all_ones(b)));
  return transpose(off) == negate(off);
}

BlockPartitionedHadamard order4_skew_bush() {
  return BlockPartitionedHadamard(SignMatrix(IntMatrix{
      {1, 1, -1, 1},
      {1, 1, 1, -1},
      {1, -1, 1, 1},
      {-1, 1, 1, 1},
  }));
}

BlockPartitionedHadamard skew_bush_from_hadamard(const SignMatrix& h2n) {
  const std::size_t b = h2n.order();
  if (b < 2 || b % 2 != 0) throw std::invalid_argument("skew_bush_from_hadamard: order must be even");
  const RowProjectors proj = row_projectors(normalize(h2n));
  // Round-robin: fix vertex b-1, rotate the rest. Round t pairs (t, b-1) and
  // (t+s, t-s) mod (b-1); round t gets projector index t+1 (0-based C_{t+2}).
  const std::size_t q = b - 1;
  std::vector<std::vector<std::size_t>> label(b, std::vector<std::size_t>(b, 0));
  for (std::size_t t = 0; t < q; ++t) {
    label[t][q] = label[q][t] = t + 1;
    for (std::size_t s = 1; s <= (q - 1) / 2; ++s) {
      const std::size_t u = (t + s) % q, v = (t + q - s) % q;
      label[u][v] = label[v][u] = t + 1;
    }
  }
  std::vector<std::vector<IntMatrix>> grid(b, std::vector<IntMatrix>(b));
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      if (i == j) {
        grid[i][j] = IntMatrix::all_ones(b);
      } else {
        const IntMatrix& c = proj.mats[label[i][j]];
        grid[i][j] = i < j ? c : negate(c);
      }
    }
  }
  BlockPartitionedHadamard h(SignMatrix(block_compose(grid)));
  if (!is_skew_bush_type(h)) throw std::logic_error("skew_bush_from_hadamard: result is not skew-Bush-type");
  return h;
}

DigraphWithPartition skew_bush_to_drad(const BlockPartitionedHadamard& h) {
  if (!is_skew_bush_type(h)) throw ConversionError("input is not a skew-Bush-type Hadamard matrix");
  const std::size_t b = h.block();
  const std::size_t order = b * b;
  const IntMatrix diff = sub(IntMatrix::all_ones(order), h.base().matrix());
  IntMatrix a(order, order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) a(i, j) = diff(i, j) / 2;
  }
  DigraphWithPartition out{Digraph(std::move(a)), consecutive_blocks(order, b)};

  const auto n = static_cast<std::int64_t>(b / 2);
  auto drad = is_drad(out.digraph);
  const DradParams expected{4 * n * n, 2 * n * n - n, n * n - n};
  if (!drad || !(*drad == expected)) throw std::logic_error("skew_bush_to_drad: (J-H)/2 is not the expected DRAD");
  for (const auto& part : out.parts) {
    if (!is_coclique(out.digraph, part)) throw std::logic_error("skew_bush_to_drad: diagonal block is not a coclique");
  }
  return out;
}

BlockPartitionedHadamard drad_to_skew_bush(const Digraph& g, const std::vector<VertexSet>& parts) {
  const std::size_t order = g.order();
  const auto root = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(order))));
  if (order == 0 || root * root != order || root % 2 != 0) {
    throw ConversionError("order " + std::to_string(order) + " is not of the form 4n^2");
  }
  const auto n = static_cast<std::int64_t>(root / 2);
  auto drad = is_drad(g);
  const DradParams expected{4 * n * n, 2 * n * n - n, n * n - n};
  if (!drad || !(*drad == expected)) {
    throw ConversionError("digraph is not a DRAD(" + std::to_string(expected.v) + "," + std::to_string(expected.k) +
                          "," + std::to_string(expected.lambda) + ")");
  }
  if (parts.size() != root) throw ConversionError("expected " + std::to_string(root) + " parts");
  std::vector<std::size_t> order_map;
  std::vector<bool> seen(order, false);
  for (const auto& part : parts) {
    if (part.size() != root) throw ConversionError("every part must have size " + std::to_string(root));
    VertexSet sorted = part;
    std::sort(sorted.begin(), sorted.end());
    for (auto v : sorted) {
      if (v >= order || seen[v]) throw ConversionError("parts do not partition the vertex set");
      seen[v] = true;
      order_map.push_back(v);
    }
    if (!is_coclique(g, sorted)) throw ConversionError("a part is not a coclique");
  }

  IntMatrix a(order, order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) a(i, j) = g.adjacency()(order_map[i], order_map[j]);
  }
  // Each part attains the coclique bound 2n and the eigenvalue -n is the only
  // one with minimal real part, so every outside vertex sends n arcs into the
  // part: A_ij J = J A_ij = n J for the off-diagonal blocks.
  const Digraph reordered(a);
  const HoffmanBound bound = hoffman_bound(reordered);
  for (const auto& part : consecutive_blocks(order, root)) {
    const auto rep = hoffman_report(reordered, bound, part);
    if (!rep.attains || !rep.condition_ii) throw ConversionError("a part does not attain the coclique bound with (ii)");
  }
  const IntMatrix h = add(sub(transpose(a), a), kron(IntMatrix::identity(root), IntMatrix::all_ones(root)));
  BlockPartitionedHadamard out{SignMatrix(h)};
  if (!is_skew_bush_type(out)) throw ConversionError("A^T - A + I (x) J is not skew-Bush-type");
  return out;
}

}  // namespace hoffdig
