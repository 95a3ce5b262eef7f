// Prints one PASS/FAIL line per acceptance criterion and exits non-zero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "hoffdig/bgw.hpp"
#include "hoffdig/biangular.hpp"
#include "hoffdig/hadamard.hpp"
#include "hoffdig/hoffman.hpp"
#include "hoffdig/nrd.hpp"
#include "hoffdig/scheme.hpp"
#include "hoffdig/spectral.hpp"

using namespace hoffdig;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) notes << "failed: ";
      else notes << "; ";
      notes << what;
      ok = false;
    }
  }
};

bool all_ok(const std::vector<IdentityCheck>& checks, Outcome& out, const std::string& label) {
  bool good = true;
  for (const auto& c : checks) {
    out.expect(c.ok, label + ": " + c.name + " (" + c.witness + ")");
    good = good && c.ok;
  }
  return good;
}

std::size_t max_coclique(const Digraph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> adj(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (g.has_arc(i, j) || g.has_arc(j, i)) adj[i] |= 1u << j;
    }
  }
  std::size_t best = 0;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(s));
    if (size <= best) continue;
    bool ok = true;
    for (std::uint32_t rest = s; rest && ok; rest &= rest - 1) {
      ok = (adj[static_cast<std::size_t>(__builtin_ctz(rest))] & s) == 0;
    }
    if (ok) best = size;
  }
  return best;
}

void criterion1(Outcome& out) {
  const auto start = std::chrono::steady_clock::now();
  for (unsigned k : {1u, 2u, 3u, 4u}) {
    const auto p = row_projectors(sylvester(k));
    all_ok(check_row_projectors(p), out, "n=" + std::to_string(p.n));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.expect(secs < 1.0, "runtime " + std::to_string(secs) + "s");
  out.notes << (out.ok ? "n=2,4,8,16 all identities exact; " : "") << "runtime " << secs << "s";
}

void criterion2(Outcome& out) {
  for (unsigned k : {2u, 3u}) {
    for (auto variant : {BiangularVariant::symmetric, BiangularVariant::skew}) {
      const auto b = biangular(sylvester(k), variant);
      const std::string label = "n=" + std::to_string(b.n) + " " + to_string(variant);
      out.expect(satisfies_gram_identity(b), label + " Eq. (3)");
      out.expect(has_variant_symmetry(b), label + " symmetry type");
      const auto mags = inner_product_magnitudes(b);
      const Rational alpha(1, static_cast<std::int64_t>(b.n) - 1);
      out.expect(mags.same_class == std::vector<Rational>{alpha}, label + " same-class magnitude");
      out.expect(mags.cross_class == std::vector<Rational>{Rational(0)}, label + " cross-class magnitude");
    }
  }
  if (out.ok) out.notes << "n=4,8 both variants: Gram identity, symmetry, magnitudes {1/(n-1), 0}";
}

void criterion3(Outcome& out) {
  for (unsigned k : {2u, 3u}) {
    for (auto variant : {BiangularVariant::symmetric, BiangularVariant::skew}) {
      const auto b = biangular(sylvester(k), variant);
      const std::string label = "n=" + std::to_string(b.n) + " " + to_string(variant);
      all_ok(check_scheme_axioms(biangular_relations(b)), out, label);
      const auto s = scheme_from_biangular(b);
      const auto expected = class4_expected(static_cast<std::int64_t>(b.n), variant);
      for (std::size_t i = 0; i < 5; ++i) {
        out.expect(intersection_matrix(s, i) == expected.intersection[i], label + " B_" + std::to_string(i));
      }
      const auto perm = align_eigenmatrix_rows(expected.P, expected.Q, static_cast<std::int64_t>(s.n()));
      out.expect(perm.has_value(), label + " P rows align with Q");
      if (perm) all_ok(check_eigensystem(s, permute_rows(expected.P, *perm), expected.Q), out, label);
    }
  }
  if (out.ok) out.notes << "n=4,8: five axioms, B_1..B_4, exact eigensystems";
}

void criterion4(Outcome& out) {
  const auto h = order4_skew_bush();
  out.expect(is_skew_bush_type(h), "fixture is skew-Bush-type");
  const auto dp = skew_bush_to_drad(h);
  const auto params = is_drad(dp.digraph);
  out.expect(params && *params == DradParams{4, 1, 0}, "DRAD(4,1,0)");
  out.expect(dp.parts.size() == 2 && verify_coclique_partition(dp.digraph, dp.parts).ok(), "2-part coclique partition");
  out.expect(drad_to_skew_bush(dp.digraph, dp.parts) == h, "round trip");
  const auto spec = re_spectrum(dp.digraph).eigenvalues;
  const std::vector<double> want{-1, 0, 0, 1};
  bool close = spec.size() == 4;
  for (std::size_t i = 0; close && i < 4; ++i) close = std::abs(spec[i] - want[i]) <= 1e-8;
  out.expect(close, "Re-spectrum {1,0,0,-1}");
  const auto nrd = nrd_parameters(dp.digraph);
  std::vector<double> predicted;
  for (const auto& fam : closed_form_spectrum(*nrd, 2)) {
    for (double v : fam.real_parts()) predicted.push_back(v);
  }
  std::sort(predicted.begin(), predicted.end());
  out.expect(predicted == std::vector<double>{-1, 0, 1}, "closed-form prediction {1,0,-1}");
  if (out.ok) out.notes << "DRAD(4,1,0), partition {0,1},{2,3}, round trip exact, Re-spectrum {1,0,0,-1}";
}

void criterion5(Outcome& out) {
  const auto w = w10();
  const auto rows = is_bgw(w, 9, 8);
  out.expect(rows.ok, "is_bgw(9,8) rows: " + rows.witness);
  const auto cols = is_bgw(transpose(w), 9, 8);
  out.expect(cols.ok, "is_bgw(9,8) columns: " + cols.witness);
  const IntMatrix gen = negacirculant_generator(2);
  out.expect(power(gen, 4) == negate(IntMatrix::identity(16)), "gen^4 = -I_16");
  const IntMatrix g = expand(w, h_block(sylvester(2)), gen, r_matrix(2));
  out.expect(transpose(g) == negate(g), "G^T = -G");
  bool zero_diag = true;
  for (std::size_t i = 0; i < 10; ++i) zero_diag = zero_diag && g.block(16 * i, 16 * i, 16, 16) == IntMatrix::zeros(16, 16);
  out.expect(zero_diag, "zero diagonal blocks");
  const auto twins = twin_split(g);
  const IntMatrix want = add(scalar_mul(36, IntMatrix::identity(160)), scalar_mul(18, IntMatrix::all_ones(160)));
  out.expect(mul(twins.a1, transpose(twins.a1)) == want, "A_1 A_1^T = 36I + 18J");
  out.expect(twins.a2 == transpose(twins.a1), "A_2 = A_1^T");
  if (out.ok) out.notes << "BGW(10,9,8) over C_8, G skew 160x160, A_1 A_1^T = 36I + 18J";
}

void criterion6(Outcome& out) {
  const auto c = drad160();
  all_ok(check_class5_identities(c.scheme, 2), out, "identity");
  const auto e = class5_expected(2);
  out.expect(e.m == 5, "m = 5");
  out.expect(mul(e.P, e.Q) == scalar_mul(GaussRational(160), GaussMatrix::identity(6)), "PQ = 160 I");
  all_ok(check_eigensystem(c.scheme, e.P, e.Q), out, "eigensystem");
  GaussRational sum;
  for (std::size_t j = 0; j < 6; ++j) sum += e.Q(0, j);
  out.expect(sum == GaussRational(160), "multiplicities sum to 160");
  if (out.ok) out.notes << "twelve identities, PQ = 160I, eigensystem exact, multiplicities sum 160";
}

void criterion7(Outcome& out) {
  {
    const auto c = drad160();
    const Digraph a1(c.twins.a1);
    const auto bound = hoffman_bound(a1);
    out.expect(std::abs(bound.theta_min + 6) <= 1e-8, "theta_min = -6");
    out.expect(bound.exact && *bound.exact == Rational(16), "bound = 16");
    for (const auto& part : consecutive_blocks(160, 16)) {
      const auto r = hoffman_report(a1, bound, part);
      out.expect(r.attains, "block attains");
      out.expect(r.condition_i, "condition (i) value 12");
      out.expect(r.condition_ii_applicable && r.condition_ii, "condition (ii) value 6");
    }
    if (out.ok) out.notes << "class-5 A_1: theta_min=-6, bound 16, 10 blocks attain, (i)=12, (ii)=6; ";
  }
  {
    const auto s = scheme_from_biangular(biangular_skew(sylvester(2)));
    const Digraph a1 = relation_graph(s, 1);
    const auto bound = hoffman_bound(a1);
    out.expect(bound.k == 4, "biangular k = 4");
    out.expect(bound.theta_min_exact && *bound.theta_min_exact == Rational(-2), "biangular theta_min = -2");
    out.expect(bound.exact && *bound.exact == Rational(4), "biangular bound = 4");
    for (const auto& part : consecutive_blocks(12, 4)) {
      out.expect(is_coclique(a1, part), "biangular block is a coclique");
      out.expect(hoffman_report(a1, bound, part).attains, "biangular block attains");
    }
    if (out.ok) out.notes << "biangular skew n=4 A_1: 3 blocks of size 4 attain 12*2/6 = 4";
  }
}

void criterion8(Outcome& out) {
  std::size_t checked = 0;
  for (const auto& f : fixtures::small_digraphs()) {
    try {
      const auto bound = hoffman_bound(f.digraph);
      const std::size_t alpha = max_coclique(f.digraph);
      out.expect(static_cast<double>(alpha) <= bound.value + 1e-9, f.name + " coclique exceeds bound");
      ++checked;
    } catch (const HoffmanError&) {
      // outside the bound's hypotheses
    }
  }
  std::vector<std::pair<std::string, std::pair<AssociationScheme, GaussMatrix>>> schemes;
  schemes.push_back({"K6", {verify_scheme({IntMatrix::identity(6), fixtures::complete_graph(6).adjacency()}),
                           GaussMatrix{{1, 5}, {1, -1}}}});
  for (unsigned k : {2u, 3u}) {
    for (auto variant : {BiangularVariant::symmetric, BiangularVariant::skew}) {
      const auto b = biangular(sylvester(k), variant);
      auto s = scheme_from_biangular(b);
      const auto e = class4_expected(static_cast<std::int64_t>(b.n), variant);
      schemes.push_back({"biangular " + std::string(to_string(variant)) + " n=" + std::to_string(b.n), {s, e.P}});
    }
  }
  schemes.push_back({"class-5 n=2", {drad160().scheme, class5_expected(2).P}});
  for (const auto& [name, pair] : schemes) {
    const auto numeric = compute_eigenmatrices(pair.first);
    out.expect(match_rows(numeric.P, pair.second, 1e-8).has_value(), name + " numeric P");
  }
  if (out.ok) {
    out.notes << checked << " small digraphs within the bound; numeric P matches on " << schemes.size() << " schemes";
  }
}

void criterion9(Outcome& out) {
  std::size_t count = 0;
  for (const auto& f : fixtures::all_digraphs()) {
    const auto r = find_block_complement_divisor(f.digraph);
    if (!r) continue;
    ++count;
    const auto n = static_cast<std::int64_t>(f.digraph.order());
    const auto rr = static_cast<std::int64_t>(*r);
    const auto k = regularity(f.digraph);
    out.expect(k && Rational(static_cast<std::int64_t>(*k)) == Rational(n * (rr - 1), 2 * rr), f.name + " valency");
    const auto bound = hoffman_bound(f.digraph);
    out.expect(bound.exact && *bound.exact == Rational(n, rr), f.name + " bound n/r");
  }
  out.expect(count >= 5, "too few qualifying digraphs");
  if (out.ok) out.notes << count << " qualifying digraphs, valency n(r-1)/(2r) and bound n/r exact";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"row projectors", criterion1},
      {"biangular matrices", criterion2},
      {"class-4 schemes", criterion3},
      {"skew-Bush round trip", criterion4},
      {"order-160 expansion", criterion5},
      {"class-5 scheme", criterion6},
      {"coclique bound", criterion7},
      {"property suites", criterion8},
      {"block-complement valency", criterion9},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.expect(false, std::string("exception: ") + e.what());
    }
    failures += out.ok ? 0 : 1;
    std::cout << (out.ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << " (" << criteria[i].first
              << "): " << out.notes.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
