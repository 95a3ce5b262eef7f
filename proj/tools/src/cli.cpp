#include "hoffdig_cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hoffdig/bgw.hpp"
#include "hoffdig/biangular.hpp"
#include "hoffdig/digraph.hpp"
#include "hoffdig/hadamard.hpp"
#include "hoffdig/hoffman.hpp"
#include "hoffdig/io.hpp"
#include "hoffdig/nrd.hpp"
#include "hoffdig/scheme.hpp"
#include "hoffdig/spectral.hpp"
#include "hoffdig_cli/report.hpp"

namespace hoffdig::cli {
namespace {

namespace fs = std::filesystem;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string fmt(double x) {
  if (std::abs(x) < 5e-13) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string fmt(std::complex<double> z) {
  const double re = std::abs(z.real()) < 5e-13 ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < 5e-13 ? 0.0 : z.imag();
  if (im == 0.0) return fmt(re);
  std::string s = fmt(re);
  s += im < 0 ? "-" : "+";
  s += fmt(std::abs(im));
  s += "i";
  return s;
}

std::string cell(std::size_t r, std::size_t c) {
  return "(" + std::to_string(r) + "," + std::to_string(c) + ")";
}

std::string tuple(std::initializer_list<std::int64_t> xs) {
  std::string s = "(";
  bool first = true;
  for (auto x : xs) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

void add_all(Report& r, const std::vector<IdentityCheck>& checks, const std::string& prefix = "") {
  for (const auto& c : checks) {
    r.add(prefix + c.name, c.ok, c.ok ? std::nullopt : std::optional<std::string>(c.witness));
  }
}

bool all_ok(const std::vector<IdentityCheck>& checks) { return all_passed(checks); }

class OutDir {
 public:
  OutDir(Report& r, const std::string& dir) : report_(r), dir_(dir) { fs::create_directories(dir_); }

  void mat(const std::string& name, const IntMatrix& m) {
    io::write_mat1(dir_ / name, m);
    report_.outputs.push_back((dir_ / name).string());
  }
  void gmat(const std::string& name, const GaussMatrix& m) {
    io::write_gmat1(dir_ / name, m);
    report_.outputs.push_back((dir_ / name).string());
  }
  void bgw(const std::string& name, const GroupRingMatrix& w) {
    io::write_bgw1(dir_ / name, to_table(w));
    report_.outputs.push_back((dir_ / name).string());
  }
  void partition(const std::string& name, const std::vector<VertexSet>& parts) {
    io::write_partition(dir_ / name, parts);
    report_.outputs.push_back((dir_ / name).string());
  }

 private:
  Report& report_;
  fs::path dir_;
};

std::optional<unsigned> log2_exact(std::size_t n) {
  if (n == 0 || (n & (n - 1)) != 0) return std::nullopt;
  unsigned k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

SignMatrix hadamard_input(const std::string& path, std::size_t order) {
  if (!path.empty()) {
    SignMatrix h(io::read_mat1(fs::path(path)));
    if (h.order() != order) {
      throw UsageError(path + ": expected a Hadamard matrix of order " + std::to_string(order) + ", got " +
                       std::to_string(h.order()));
    }
    return h;
  }
  if (auto k = log2_exact(order)) return sylvester(*k);
  throw UsageError("no built-in Hadamard matrix of order " + std::to_string(order) + "; pass --hadamard");
}

std::optional<Digraph> digraph_input(Report& r, const std::string& path) {
  IntMatrix m = io::read_mat1(fs::path(path));
  try {
    return Digraph(std::move(m));
  } catch (const std::invalid_argument& e) {
    r.add("0/1 adjacency matrix with zero diagonal", false, e.what());
    return std::nullopt;
  }
}

std::vector<IntMatrix> load_relations(const std::string& dir) {
  std::vector<IntMatrix> mats;
  for (std::size_t i = 0;; ++i) {
    const fs::path p = fs::path(dir) / ("A" + std::to_string(i) + ".mat");
    if (!fs::exists(p)) break;
    mats.push_back(io::read_mat1(p));
  }
  if (mats.size() < 2) throw UsageError(dir + ": expected A0.mat and A1.mat at least");
  return mats;
}

void drad_check(Report& r, const Digraph& g, std::optional<DradParams> expected = std::nullopt) {
  const auto p = is_drad(g);
  if (!p) {
    r.add("doubly regular asymmetric digraph", false, "A A^T is not kI + lambda(J - I) with A + A^T = J - I");
    return;
  }
  const std::string v = tuple({p->v, p->k, p->lambda});
  if (expected && !(*p == *expected)) {
    r.add("doubly regular asymmetric digraph", false,
          "expected " + tuple({expected->v, expected->k, expected->lambda}), v);
    return;
  }
  r.add("doubly regular asymmetric digraph", true, std::nullopt, v);
}

void partition_check(Report& r, const Digraph& g, const std::vector<VertexSet>& parts, const std::string& label) {
  const auto pr = verify_coclique_partition(g, parts);
  std::size_t good = 0;
  for (const auto& p : pr.parts) good += (p.coclique && p.attains) ? 1 : 0;
  const std::string value = std::to_string(good) + "/" + std::to_string(pr.parts.size());
  if (pr.ok()) {
    r.add(label, true, std::nullopt, value);
  } else {
    const auto i = *pr.first_failing;
    r.add(label, false,
          "part " + std::to_string(i) + (pr.parts[i].coclique ? " does not attain the bound" : " is not a coclique"),
          value);
  }
}

std::vector<std::string> matrix_lines(const ComplexMatrix& m) {
  std::vector<std::string> lines;
  for (const auto& row : m) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += ' ';
      line += fmt(row[c]);
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

std::vector<std::string> matrix_lines(const GaussMatrix& m) {
  std::vector<std::string> lines;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::string line;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) line += ' ';
      line += m(r, c).to_string();
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

// ---- construct ----

Report construct_sylvester(unsigned k, const std::string& out_dir) {
  if (k > 12) throw UsageError("--k must be at most 12");
  Report r{"construct sylvester"};
  const SignMatrix h = sylvester(k);
  add_all(r, check_hadamard(h.matrix()));
  OutDir(r, out_dir).mat("H.mat", h.matrix());
  return r;
}

Report construct_biangular(std::size_t n, const std::string& variant_text, const std::string& hadamard_path,
                           const std::string& out_dir) {
  Report r{"construct biangular"};
  const BiangularVariant variant = parse_biangular_variant(variant_text);
  if (n < 2) throw UsageError("--n must be at least 2");
  const SignMatrix h = hadamard_input(hadamard_path, n);
  r.add("input is Hadamard", is_hadamard(h), "H H^T != nI");
  if (!is_hadamard(h)) return r;

  const BiangularMatrix b = biangular(h, variant);
  const auto N = static_cast<std::int64_t>(b.m.rows());
  r.add("M M^T = n(n-1)I - n I (x) (J - I)", satisfies_gram_identity(b));
  r.add(std::string("M has ") + to_string(variant) + " block symmetry", has_variant_symmetry(b));
  const auto mags = inner_product_magnitudes(b);
  const Rational alpha(1, static_cast<std::int64_t>(n - 1));
  auto join = [](const std::vector<Rational>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + x.to_string();
    return "{" + s + "}";
  };
  r.add("same-class inner product magnitudes", mags.same_class == std::vector<Rational>{alpha},
        "expected {" + alpha.to_string() + "}", join(mags.same_class));
  r.add("cross-class inner product magnitudes", mags.cross_class == std::vector<Rational>{Rational(0)},
        "expected {0}", join(mags.cross_class));

  OutDir out(r, out_dir);
  out.mat("M.mat", b.m);
  const auto rel = biangular_relations(b);
  const auto axioms = check_scheme_axioms(rel);
  add_all(r, axioms, "scheme: ");
  for (std::size_t i = 0; i < rel.size(); ++i) out.mat("A" + std::to_string(i) + ".mat", rel[i]);
  if (!all_ok(axioms)) return r;

  const AssociationScheme s = verify_scheme(rel);
  r.add(std::string("scheme is ") + (variant == BiangularVariant::symmetric ? "symmetric" : "nonsymmetric"),
        s.symmetric() == (variant == BiangularVariant::symmetric));
  if (n % 4 == 0) {
    const Class4Expected e = class4_expected(static_cast<std::int64_t>(n), variant);
    for (std::size_t i = 1; i < e.intersection.size(); ++i) {
      r.add("B_" + std::to_string(i) + " matches the closed form", intersection_matrix(s, i) == e.intersection[i]);
    }
    const auto perm = align_eigenmatrix_rows(e.P, e.Q, N);
    r.add("P and Q are compatible up to row order", perm.has_value(), "no row permutation gives PQ = nI");
    if (perm) {
      const GaussMatrix P = permute_rows(e.P, *perm);
      add_all(r, check_eigensystem(s, P, e.Q), "eigen: ");
      out.gmat("P.mat", P);
      out.gmat("Q.mat", e.Q);
    }
  }
  if (variant == BiangularVariant::skew) {
    const auto blocks = consecutive_blocks(static_cast<std::size_t>(N), n);
    partition_check(r, relation_graph(s, 1), blocks, "diagonal blocks of A_1 attain the Hoffman bound");
    out.partition("blocks.txt", blocks);
  }
  return r;
}

Report construct_class5(const std::string& command, std::size_t n, const GroupRingMatrix& w, const SignMatrix& h2n,
                        const std::string& out_dir) {
  Report r{command};
  const auto nn = static_cast<std::int64_t>(n);
  const std::int64_t p = 2 * nn - 1;
  const auto v = static_cast<std::size_t>(p * p + 1);
  const std::string bgw_value = "BGW" + tuple({static_cast<std::int64_t>(v), p * p, p * p - 1}) + " over C_" +
                                std::to_string(4 * nn);
  bool inputs_ok = true;
  if (w.size() != v || w.group_order() != 4 * nn) {
    r.add("BGW shape", false,
          "expected " + std::to_string(v) + "x" + std::to_string(v) + " over C_" + std::to_string(4 * nn));
    inputs_ok = false;
  } else {
    const auto rows = is_bgw(w, p * p, p * p - 1);
    r.add("BGW rows", rows.ok, rows.witness, bgw_value);
    const auto cols = is_bgw(transpose(w), p * p, p * p - 1);
    r.add("BGW columns", cols.ok, cols.witness, bgw_value);
    inputs_ok = rows.ok && cols.ok;
  }
  const bool had = h2n.order() == 2 * n && is_hadamard(h2n);
  r.add("Hadamard of order 2n", had, "expected a Hadamard matrix of order " + std::to_string(2 * n));
  if (!inputs_ok || !had) return r;

  OutDir out(r, out_dir);
  const IntMatrix g = expand(w, h_block(h2n), negacirculant_generator(n), r_matrix(n));
  const std::size_t N = g.rows();
  std::optional<std::string> skew_witness;
  for (std::size_t x = 0; x < N && !skew_witness; ++x) {
    for (std::size_t y = 0; y < N; ++y) {
      if (g(x, y) != -g(y, x)) {
        skew_witness = "cell " + cell(x, y);
        break;
      }
    }
  }
  r.add("G^T = -G", !skew_witness, skew_witness);
  out.mat("G.mat", g);
  out.bgw("W.bgw", w);

  TwinPair twins{IntMatrix(N, N), IntMatrix(N, N)};
  for (std::size_t x = 0; x < N; ++x) {
    for (std::size_t y = 0; y < N; ++y) {
      twins.a1(x, y) = g(x, y) == 1 ? 1 : 0;
      twins.a2(x, y) = g(x, y) == -1 ? 1 : 0;
    }
  }
  try {
    drad_check(r, Digraph(twins.a1));
  } catch (const std::invalid_argument& e) {
    r.add("doubly regular asymmetric digraph", false, e.what());
  }

  const auto rel = class5_relations(n, twins);
  for (std::size_t i = 0; i < rel.size(); ++i) out.mat("A" + std::to_string(i) + ".mat", rel[i]);
  const auto axioms = check_scheme_axioms(rel);
  add_all(r, axioms, "scheme: ");
  if (!all_ok(axioms)) return r;

  const AssociationScheme s = verify_scheme(rel);
  r.add("scheme is nonsymmetric", !s.symmetric());
  add_all(r, check_class5_identities(s, nn));
  add_all(r, check_class5_structure(s, nn));
  const Class5Expected e = class5_expected(nn);
  add_all(r, check_eigensystem(s, e.P, e.Q), "eigen: ");
  out.gmat("P.mat", e.P);
  out.gmat("Q.mat", e.Q);

  const auto blocks = consecutive_blocks(N, static_cast<std::size_t>(4 * nn * nn));
  partition_check(r, Digraph(twins.a1), blocks, "diagonal blocks of A_1 attain the Hoffman bound");
  out.partition("blocks.txt", blocks);
  return r;
}

Report construct_skew_bush(std::size_t n, const std::string& hadamard_path, const std::string& out_dir) {
  Report r{"construct skew-bush"};
  if (n == 0) throw UsageError("--n must be positive");
  const BlockPartitionedHadamard bp =
      n == 1 && hadamard_path.empty() ? order4_skew_bush() : skew_bush_from_hadamard(hadamard_input(hadamard_path, 2 * n));
  const auto checks = check_bush_type(bp.base().matrix(), true);
  add_all(r, checks);
  OutDir out(r, out_dir);
  out.mat("H.mat", bp.base().matrix());
  if (!all_ok(checks)) return r;
  const auto dw = skew_bush_to_drad(bp);
  const auto nn = static_cast<std::int64_t>(n);
  drad_check(r, dw.digraph, DradParams{4 * nn * nn, 2 * nn * nn - nn, nn * nn - nn});
  partition_check(r, dw.digraph, dw.parts, "diagonal blocks are cocliques attaining the Hoffman bound");
  out.mat("A.mat", dw.digraph.adjacency());
  out.partition("parts.txt", dw.parts);
  return r;
}

// ---- convert ----

Report convert_h2d(const std::string& path, const std::string& out_dir) {
  Report r{"convert h2d"};
  const IntMatrix h = io::read_mat1(fs::path(path));
  const auto checks = check_bush_type(h, true);
  add_all(r, checks);
  if (!all_ok(checks)) return r;
  const BlockPartitionedHadamard bp{SignMatrix(h)};
  const auto dw = skew_bush_to_drad(bp);
  const auto nn = static_cast<std::int64_t>(bp.half_block());
  drad_check(r, dw.digraph, DradParams{4 * nn * nn, 2 * nn * nn - nn, nn * nn - nn});
  partition_check(r, dw.digraph, dw.parts, "diagonal blocks are cocliques attaining the Hoffman bound");
  OutDir out(r, out_dir);
  out.mat("A.mat", dw.digraph.adjacency());
  out.partition("parts.txt", dw.parts);
  return r;
}

Report convert_d2h(const std::string& path, const std::string& partition_path, const std::string& out_dir) {
  Report r{"convert d2h"};
  const auto g = digraph_input(r, path);
  const auto parts = io::read_partition(fs::path(partition_path));
  if (!g) return r;
  std::optional<BlockPartitionedHadamard> h;
  try {
    h = drad_to_skew_bush(*g, parts);
    r.add("DRAD with coclique partition", true);
  } catch (const std::invalid_argument& e) {
    r.add("DRAD with coclique partition", false, e.what());
    return r;
  }
  add_all(r, check_bush_type(h->base().matrix(), true));
  OutDir(r, out_dir).mat("H.mat", h->base().matrix());
  return r;
}

// ---- verify ----

Report verify_hadamard(const std::string& kind, const std::string& path) {
  Report r{"verify " + kind};
  const IntMatrix h = io::read_mat1(fs::path(path));
  if (kind == "hadamard") {
    add_all(r, check_hadamard(h));
  } else {
    add_all(r, check_bush_type(h, kind == "skew-bush"));
  }
  return r;
}

Report verify_nrd(const std::string& kind, const std::string& path) {
  Report r{"verify " + kind};
  const auto g = digraph_input(r, path);
  if (!g) return r;
  const NrdCheck c = check_nrd(*g);
  if (c.params) {
    const auto& p = *c.params;
    r.add("normally regular", true, std::nullopt, tuple({p.n, p.k, p.lambda, p.mu}));
  } else {
    std::string w = c.failure;
    if (c.row && c.col) w += " at cell " + cell(*c.row, *c.col);
    r.add("normally regular", false, w);
  }
  if (kind == "drad") drad_check(r, *g);
  return r;
}

Report verify_scheme_dir(const std::string& dir) {
  Report r{"verify scheme"};
  const auto mats = load_relations(dir);
  const auto axioms = check_scheme_axioms(mats);
  add_all(r, axioms);
  const fs::path pp = fs::path(dir) / "P.mat";
  const fs::path qp = fs::path(dir) / "Q.mat";
  if (fs::exists(pp) && fs::exists(qp)) {
    const GaussMatrix P = io::read_gmat1(pp);
    const GaussMatrix Q = io::read_gmat1(qp);
    if (all_ok(axioms)) {
      add_all(r, check_eigensystem(verify_scheme(mats), P, Q), "eigen: ");
    } else {
      r.add("eigen: not evaluated", false, "scheme axioms failed");
    }
  }
  return r;
}

Report verify_bgw(const std::string& path, std::optional<std::int64_t> k, std::optional<std::int64_t> lam) {
  Report r{"verify bgw"};
  const GroupRingMatrix w = from_table(io::read_bgw1(fs::path(path)));
  const auto v = static_cast<std::int64_t>(w.size());
  if (v < 2) throw UsageError(path + ": a BGW needs at least two rows");
  if (!k) {
    std::int64_t weight = 0;
    for (std::size_t c = 0; c < w.size(); ++c) weight += w.is_zero(0, c) ? 0 : 1;
    k = weight;
  }
  if (!lam) {
    if ((*k * (*k - 1)) % (v - 1) != 0) throw UsageError("k(k-1)/(v-1) is not an integer; pass --lambda");
    lam = *k * (*k - 1) / (v - 1);
  }
  const std::string value = "BGW" + tuple({v, *k, *lam}) + " over C_" + std::to_string(w.group_order());
  const auto rows = is_bgw(w, *k, *lam);
  r.add("BGW rows", rows.ok, rows.witness, value);
  const auto cols = is_bgw(transpose(w), *k, *lam);
  r.add("BGW columns", cols.ok, cols.witness, value);
  return r;
}

// ---- analysis ----

Report spectrum_cmd(const std::string& path) {
  Report r{"spectrum"};
  const auto g = digraph_input(r, path);
  if (!g) return r;
  const bool normal = is_normal(g->adjacency());
  r.add("normal", normal, "A A^T != A^T A");
  if (!normal) return r;
  const auto sp = re_spectrum(*g);
  const auto clusters = cluster_values(sp.eigenvalues);
  Section sec{"Re-spectrum", {}};
  for (auto it = clusters.rbegin(); it != clusters.rend(); ++it) {
    sec.lines.push_back(fmt(it->value) + " x" + std::to_string(it->multiplicity));
  }
  r.sections.push_back(std::move(sec));
  r.add("theta_min", true, std::nullopt, fmt(sp.eigenvalues.front()));
  return r;
}

Report hoffman_cmd(const std::string& path, const std::string& coclique_path, const std::string& partition_path) {
  Report r{"hoffman"};
  const auto g = digraph_input(r, path);
  if (!g) return r;
  HoffmanBound bound;
  try {
    bound = hoffman_bound(*g);
  } catch (const HoffmanError& e) {
    r.add("bound hypotheses", false, e.what());
    return r;
  }
  r.add("bound hypotheses", true, std::nullopt,
        "n=" + std::to_string(bound.n) + ", k=" + std::to_string(bound.k));
  r.add("theta_min", true, std::nullopt,
        bound.theta_min_exact ? bound.theta_min_exact->to_string() : fmt(bound.theta_min));
  r.add("bound", true, std::nullopt, bound.exact ? bound.exact->to_string() : fmt(bound.value) + " (approximate)");

  if (!coclique_path.empty()) {
    const VertexSet c = io::read_vertex_set(fs::path(coclique_path));
    if (!is_coclique(*g, c)) {
      r.add("coclique", false, "some arc joins two vertices of the set");
    } else {
      const HoffmanReport rep = hoffman_report(*g, bound, c);
      r.add("coclique", true, std::nullopt, "size " + std::to_string(rep.coclique_size));
      r.add("attains bound", rep.attains, "coclique smaller than the bound", std::to_string(rep.coclique_size));
      if (rep.attains) {
        auto witness = [](const std::optional<std::size_t>& x) {
          return x ? std::optional<std::string>("vertex " + std::to_string(*x)) : std::nullopt;
        };
        r.add("condition (i): in+out arcs into C = -2 theta_min", rep.condition_i, witness(rep.condition_i_witness),
              fmt(-2.0 * bound.theta_min));
        if (rep.condition_ii_applicable) {
          r.add("condition (ii): out arcs into C = -theta_min", rep.condition_ii, witness(rep.condition_ii_witness),
                fmt(-bound.theta_min));
        } else {
          r.sections.push_back({"notes", {"condition (ii) not applicable: theta_min is not simple"}});
        }
      }
    }
  }
  if (!partition_path.empty()) {
    partition_check(r, *g, io::read_partition(fs::path(partition_path)), "every part attains the bound");
  }
  return r;
}

Report scheme_eigen(const std::string& dir, std::uint64_t seed) {
  Report r{"scheme eigen"};
  const auto mats = load_relations(dir);
  std::optional<AssociationScheme> s;
  try {
    s = verify_scheme(mats);
    r.add("association scheme", true, std::nullopt, std::to_string(mats.size() - 1) + " classes");
  } catch (const SchemeError& e) {
    r.add("association scheme", false, e.identity() + ": " + e.what());
    return r;
  }
  NumericEigenmatrices ne;
  try {
    ne = compute_eigenmatrices(*s, seed);
    r.add("numeric eigenmatrices", true, std::nullopt, std::to_string(ne.attempts) + " attempt(s)");
  } catch (const EigenComputationError& e) {
    r.add("numeric eigenmatrices", false, e.what());
    return r;
  }
  r.sections.push_back({"P", matrix_lines(ne.P)});
  r.sections.push_back({"Q", matrix_lines(ne.Q)});
  const fs::path pp = fs::path(dir) / "P.mat";
  if (fs::exists(pp)) {
    const GaussMatrix P = io::read_gmat1(pp);
    const auto perm = match_rows(ne.P, P);
    r.add("matches P.mat up to row order", perm.has_value(), "no row permutation within 1e-8");
    r.sections.push_back({"P (exact)", matrix_lines(P)});
  }
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact constructions and verifications around the Hoffman coclique bound", "hoffdig"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Emit the report as JSON");

  std::function<Report()> action;
  std::string out_dir = ".";
  std::string file, hadamard_path, bgw_path, partition_path, coclique_path, variant = "symmetric";
  unsigned k_sylvester = 1;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::optional<std::int64_t> bgw_k, bgw_lambda;

  auto* construct = app.add_subcommand("construct", "Build an object and verify it");
  construct->require_subcommand(1);
  auto* c_syl = construct->add_subcommand("sylvester", "Sylvester Hadamard matrix of order 2^k");
  c_syl->add_option("--k", k_sylvester, "Exponent")->required();
  c_syl->add_option("--out-dir", out_dir);
  c_syl->callback([&] { action = [&] { return construct_sylvester(k_sylvester, out_dir); }; });

  auto* c_bi = construct->add_subcommand("biangular", "Regular biangular matrix and its class-4 scheme");
  c_bi->add_option("--n", n, "Hadamard order")->required();
  c_bi->add_option("--variant", variant)->check(CLI::IsMember({"symmetric", "skew"}));
  c_bi->add_option("--hadamard", hadamard_path);
  c_bi->add_option("--out-dir", out_dir);
  c_bi->callback([&] { action = [&] { return construct_biangular(n, variant, hadamard_path, out_dir); }; });

  auto* c_160 = construct->add_subcommand("drad160", "The order-160 class-5 scheme");
  c_160->add_option("--out-dir", out_dir);
  c_160->callback([&] {
    action = [&] { return construct_class5("construct drad160", 2, w10(), sylvester(2), out_dir); };
  });

  auto* c_c5 = construct->add_subcommand("class5", "Class-5 scheme from a BGW table and a Hadamard matrix");
  c_c5->add_option("--n", n)->required();
  c_c5->add_option("--bgw", bgw_path)->required();
  c_c5->add_option("--hadamard", hadamard_path)->required();
  c_c5->add_option("--out-dir", out_dir);
  c_c5->callback([&] {
    action = [&] {
      if (n == 0) throw UsageError("--n must be positive");
      const GroupRingMatrix w = from_table(io::read_bgw1(fs::path(bgw_path)));
      return construct_class5("construct class5", n, w, SignMatrix(io::read_mat1(fs::path(hadamard_path))), out_dir);
    };
  });

  auto* c_sb = construct->add_subcommand("skew-bush", "Skew-Bush-type Hadamard matrix of order 4n^2");
  c_sb->add_option("--n", n)->required();
  c_sb->add_option("--hadamard", hadamard_path);
  c_sb->add_option("--out-dir", out_dir);
  c_sb->callback([&] { action = [&] { return construct_skew_bush(n, hadamard_path, out_dir); }; });

  auto* convert = app.add_subcommand("convert", "Skew-Bush-type Hadamard <-> DRAD");
  convert->require_subcommand(1);
  auto* v_h2d = convert->add_subcommand("h2d", "A = (J - H)/2 with its coclique partition");
  v_h2d->add_option("matrix", file)->required();
  v_h2d->add_option("--out-dir", out_dir);
  v_h2d->callback([&] { action = [&] { return convert_h2d(file, out_dir); }; });
  auto* v_d2h = convert->add_subcommand("d2h", "Skew-Bush-type Hadamard from a DRAD and a partition");
  v_d2h->add_option("matrix", file)->required();
  v_d2h->add_option("--partition", partition_path)->required();
  v_d2h->add_option("--out-dir", out_dir);
  v_d2h->callback([&] { action = [&] { return convert_d2h(file, partition_path, out_dir); }; });

  auto* verify = app.add_subcommand("verify", "Verify a stored object");
  verify->require_subcommand(1);
  for (const char* kind : {"hadamard", "bush", "skew-bush"}) {
    auto* sub = verify->add_subcommand(kind);
    sub->add_option("matrix", file)->required();
    sub->callback([&, kind] { action = [&, kind] { return verify_hadamard(kind, file); }; });
  }
  for (const char* kind : {"nrd", "drad"}) {
    auto* sub = verify->add_subcommand(kind);
    sub->add_option("matrix", file)->required();
    sub->callback([&, kind] { action = [&, kind] { return verify_nrd(kind, file); }; });
  }
  auto* v_scheme = verify->add_subcommand("scheme", "A0.mat..Ad.mat and optional P.mat, Q.mat");
  v_scheme->add_option("dir", file)->required();
  v_scheme->callback([&] { action = [&] { return verify_scheme_dir(file); }; });
  auto* v_bgw = verify->add_subcommand("bgw");
  v_bgw->add_option("table", file)->required();
  v_bgw->add_option("--k", bgw_k);
  v_bgw->add_option("--lambda", bgw_lambda);
  v_bgw->callback([&] { action = [&] { return verify_bgw(file, bgw_k, bgw_lambda); }; });

  auto* spectrum = app.add_subcommand("spectrum", "Re-spectrum and theta_min of a normal digraph");
  spectrum->add_option("matrix", file)->required();
  spectrum->callback([&] { action = [&] { return spectrum_cmd(file); }; });

  auto* hoffman = app.add_subcommand("hoffman", "Hoffman coclique bound");
  hoffman->add_option("matrix", file)->required();
  hoffman->add_option("--coclique", coclique_path);
  hoffman->add_option("--partition", partition_path);
  hoffman->callback([&] { action = [&] { return hoffman_cmd(file, coclique_path, partition_path); }; });

  auto* scheme = app.add_subcommand("scheme", "Association scheme tools");
  scheme->require_subcommand(1);
  auto* s_eigen = scheme->add_subcommand("eigen", "Numeric eigenmatrices");
  s_eigen->add_option("dir", file)->required();
  s_eigen->add_option("--seed", seed);
  s_eigen->callback([&] { action = [&] { return scheme_eigen(file, seed); }; });

  const CLI::App* level = &app;
  for (const auto& a : args) {
    if (a.starts_with("-")) continue;
    if (level->get_subcommands({}).empty()) break;
    const CLI::App* next = level->get_subcommand_no_throw(a);
    if (!next) {
      err << "usage error: unknown subcommand '" << a << "'\n";
      return 2;
    }
    level = next;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  Report report;
  try {
    report = action();
  } catch (const std::exception& e) {
    std::string cmd;
    for (const auto* sub = app.get_subcommands().front(); sub;) {
      cmd += (cmd.empty() ? "" : " ") + sub->get_name();
      const auto subs = sub->get_subcommands();
      sub = subs.empty() ? nullptr : subs.front();
    }
    report = Report{cmd};
    report.error = e.what();
    err << "error: " << e.what() << '\n';
  }
  if (json) {
    write_json(out, report);
  } else {
    write_text(out, report);
  }
  return report.exit_code();
}

}  // namespace hoffdig::cli
