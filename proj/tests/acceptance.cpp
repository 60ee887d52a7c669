// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "modseries/cli.hpp"
#include "modseries/direct_sum.hpp"
#include "modseries/error.hpp"
#include "ordinal_gen.hpp"
#include "support.hpp"

namespace ms = modseries;
using ms::test::PointSet;
using ms::test::Space;

namespace {

struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
};

bool report(int number, const std::string& title, const Tally& t, const std::string& extra = "") {
  const bool ok = t.failures == 0 && t.cases > 0;
  std::cout << "criterion " << number << " " << (ok ? "PASS" : "FAIL") << ": " << title << " (" << t.cases
            << " cases, " << t.failures << " failures" << (extra.empty() ? "" : ", " + extra) << ")";
  if (!ok && !t.first_failure.empty()) std::cout << " first failure: " << t.first_failure;
  std::cout << "\n";
  return ok;
}

// Runs fn, turning an unexpected library error into a recorded failure.
template <class Fn>
void guarded(Tally& t, const std::string& where, Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    t.check(false, where + ": " + e.what());
  }
}

bool lattice_oracle() {
  Tally t;
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(0);
  for (int c = 0; c < 100; ++c) {
    const std::uint64_t p = rng() % 2 ? 3 : 2;
    const std::size_t d = 1 + rng() % 5;
    const ms::ModuleRep m = ms::test::random_module(rng, p, d, rng() % 3);
    const std::string tag = "case " + std::to_string(c);
    ++t.cases;
    guarded(t, tag, [&] {
      const Space sp(p, d);
      const std::vector<PointSet> lattice = sp.stable_lattice(m);
      std::vector<ms::Submodule> subs;
      for (const PointSet& s : lattice) {
        const ms::SubspaceBasis b = sp.basis_of(s);
        t.check(ms::is_submodule(m, b), tag + ": stable set rejected by is_submodule");
        subs.emplace_back(m, b);
      }
      t.check(ms::is_simple(m) == (lattice.size() == 2), tag + ": is_simple disagrees");

      for (int k = 0; k < 30; ++k) {
        std::vector<ms::Vec> seeds;
        for (std::size_t n = rng() % 3; n > 0; --n) seeds.push_back(sp.at(rng() % sp.size));
        const PointSet got = sp.points(ms::spin(m, seeds).basis());
        // Least stable set containing the seeds, as the meet of all of them.
        PointSet meet(sp.size, true);
        for (const PointSet& s : lattice) {
          bool has_all = true;
          for (const ms::Vec& v : seeds) has_all = has_all && s[sp.index(v)];
          if (has_all)
            for (std::uint64_t i = 0; i < sp.size; ++i) meet[i] = meet[i] && s[i];
        }
        t.check(got == meet, tag + ": spin is not the least stable subspace over its seeds");
        const ms::SubspaceBasis any = ms::SubspaceBasis::span(m.field(), d, seeds);
        t.check(ms::is_submodule(m, any) == sp.is_stable(sp.points(any), m), tag + ": is_submodule disagrees");
      }

      const std::size_t pairs = std::min<std::size_t>(200, lattice.size() * lattice.size());
      for (std::size_t k = 0; k < pairs; ++k) {
        const std::size_t i = rng() % lattice.size(), j = rng() % lattice.size();
        PointSet join = lattice[i];
        for (std::uint64_t v = 0; v < sp.size; ++v)
          if (lattice[j][v]) sp.adjoin(join, v);
        PointSet meet(sp.size);
        for (std::uint64_t v = 0; v < sp.size; ++v) meet[v] = lattice[i][v] && lattice[j][v];
        const PointSet s = sp.points(ms::submodule_sum(subs[i], subs[j]).basis());
        const PointSet n = sp.points(ms::submodule_intersect(subs[i], subs[j]).basis());
        t.check(s == join, tag + ": submodule_sum differs from the span of the union");
        t.check(n == meet, tag + ": submodule_intersect differs from the set intersection");
        t.check(std::find(lattice.begin(), lattice.end(), s) != lattice.end(), tag + ": sum left the lattice");
        t.check(std::find(lattice.begin(), lattice.end(), n) != lattice.end(), tag + ": meet left the lattice");
      }
    });
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.check(secs < 60.0, "runtime " + std::to_string(secs) + "s exceeds 60s");
  std::ostringstream extra;
  extra.precision(2);
  extra << std::fixed << secs << "s";
  return report(1, "submodule lattice agrees with brute-force enumeration", t, extra.str());
}

struct JhCase {
  ms::ModuleRep module;
  ms::NormalSeries ascending;
  ms::NormalSeries descending;
};

std::vector<JhCase> jh_cases;

bool jordan_holder() {
  Tally t;
  std::mt19937_64 rng(1);
  ms::SearchOptions desc;
  desc.order = ms::VectorOrder::descending;
  for (int c = 0; c < 200; ++c) {
    const std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5}[rng() % 3];
    const ms::ModuleRep m = ms::test::random_module(rng, p, 1 + rng() % 5, rng() % 3);
    const std::string tag = "case " + std::to_string(c);
    ++t.cases;
    guarded(t, tag, [&] {
      const ms::NormalSeries a = ms::composition_series(m), b = ms::composition_series(m, desc);
      jh_cases.push_back({m, a, b});
      const ms::JordanHolderResult r = ms::jordan_holder_check(a, b);
      const auto* pairing = std::get_if<ms::SeriesPairing>(&r);
      t.check(pairing != nullptr, tag + ": factor classes differ");
      if (!pairing) return;
      t.check(pairing->pairs.size() + 1 == a.length() && a.length() == b.length(), tag + ": pairing not total");
      const ms::FactorList fa = ms::factors(a), fb = ms::factors(b);
      for (const auto& pr : pairing->pairs)
        t.check(ms::verify_witness(pr.witness.matrix, fa[pr.first].factor.quotient, fb[pr.second].factor.quotient),
                tag + ": pairing witness fails");
    });
  }
  return report(2, "Jordan-Holder matching under reversed enumeration order", t);
}

// A random chain: keep adding the spin of a random vector, then drop some
// interior terms.
ms::NormalSeries random_series(std::mt19937_64& rng, const ms::ModuleRep& m) {
  std::vector<ms::SubspaceBasis> chain{ms::SubspaceBasis::zero(m.field(), m.dim())};
  while (!chain.back().is_full()) {
    const ms::Submodule s = ms::spin(m, {ms::test::random_mat(rng, m.field(), 1, m.dim()).row(0)});
    const ms::SubspaceBasis next = ms::subspace_sum(chain.back(), s.basis());
    if (next != chain.back()) chain.push_back(next);
  }
  std::vector<ms::SubspaceBasis> kept{chain.front()};
  for (std::size_t i = 1; i + 1 < chain.size(); ++i)
    if (rng() % 2) kept.push_back(chain[i]);
  if (chain.size() > 1) kept.push_back(chain.back());
  return ms::NormalSeries::with_finite_labels(m, kept);
}

bool schreier_zassenhaus() {
  Tally t;
  std::size_t butterflies = 0;
  std::mt19937_64 rng(2);
  for (int c = 0; c < 100; ++c) {
    const std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5}[rng() % 3];
    const ms::ModuleRep m = ms::test::random_module(rng, p, 1 + rng() % 5, rng() % 3);
    const std::string tag = "case " + std::to_string(c);
    ++t.cases;
    guarded(t, tag, [&] {
      const ms::NormalSeries s = random_series(rng, m), u = random_series(rng, m);
      const ms::SchreierResult r = ms::schreier_refine(s, u);
      t.check(ms::is_refinement(r.first, s).refines, tag + ": first output does not refine its input");
      t.check(ms::is_refinement(r.second, u).refines, tag + ": second output does not refine its input");
      t.check(r.first.length() == r.second.length(), tag + ": refinement lengths differ");
      const ms::FactorList fa = ms::factors(r.first), fb = ms::factors(r.second);
      t.check(r.pairing.pairs.size() == fa.size(), tag + ": pairing not total");
      std::vector<bool> seen_a(fa.size()), seen_b(fb.size());
      for (const auto& pr : r.pairing.pairs) {
        t.check(!seen_a[pr.first] && !seen_b[pr.second], tag + ": pairing not a bijection");
        seen_a[pr.first] = seen_b[pr.second] = true;
        t.check(ms::verify_witness(pr.witness.matrix, fa[pr.first].factor.quotient, fb[pr.second].factor.quotient),
                tag + ": pairing witness fails");
      }
      for (std::size_t i = 0; i + 1 < s.length(); ++i)
        for (std::size_t j = 0; j + 1 < u.length(); ++j) {
          ++butterflies;
          const ms::ButterflyResult b = ms::zassenhaus_witness(s.term(i + 1), s.term(i), u.term(j + 1), u.term(j));
          t.check(b.left.factor.quotient.dim() == b.right.factor.quotient.dim(), tag + ": butterfly dims differ");
          const ms::SubspaceBasis expect = ms::subspace_sum(ms::subspace_intersect(u.terms[j + 1], s.terms[i]),
                                                            ms::subspace_intersect(s.terms[i + 1], u.terms[j]));
          t.check(b.common_kernel == expect, tag + ": butterfly kernel differs");
        }
    });
  }
  return report(3, "Schreier refinements certified by butterfly witnesses", t,
                std::to_string(butterflies) + " butterflies");
}

bool unrefinability() {
  Tally t;
  for (std::size_t c = 0; c < jh_cases.size(); ++c) {
    ++t.cases;
    guarded(t, "case " + std::to_string(c), [&] {
      t.check(ms::is_unrefinable(jh_cases[c].ascending), "case " + std::to_string(c) + ": refinable");
    });
  }
  t.check(jh_cases.size() == 200, "only " + std::to_string(jh_cases.size()) + " series available");
  return report(4, "composition series admit no proper refinement", t);
}

// Another decomposition of the same module: push the images through a
// random automorphism, then shuffle them.
std::vector<ms::Submodule> moved_images(std::mt19937_64& rng, const ms::SumDecomposition& d) {
  const ms::ModuleRep& total = d.total();
  const std::vector<ms::Mat> hom = ms::hom_space(total, total);
  ms::Mat a = ms::Mat::identity(total.field(), total.dim());
  for (int tries = 0; tries < 50; ++tries) {
    ms::Mat c(total.field(), total.dim(), total.dim());
    for (const ms::Mat& h : hom) c = c + h.scaled(static_cast<ms::Scalar>(rng() % total.field().modulus()));
    if (ms::is_invertible(c)) {
      a = c;
      break;
    }
  }
  std::vector<ms::Submodule> out;
  for (const ms::Submodule& s : d.images()) out.emplace_back(total, ms::image(a, s.basis()));
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

bool direct_sums() {
  Tally t;
  std::mt19937_64 rng(3);
  std::size_t moved = 0;
  while (t.cases < 50) {
    const std::uint64_t p = rng() % 2 ? 3 : 2;
    const std::size_t k = 1 + rng() % 2;
    const std::size_t want = 2 + rng() % 3;
    std::vector<ms::ModuleRep> parts;
    while (parts.size() < want) {
      // Reuse an earlier part now and then so classes repeat.
      if (!parts.empty() && rng() % 3 == 0) {
        parts.push_back(parts[rng() % parts.size()]);
        continue;
      }
      ms::ModuleRep m = ms::test::random_module(rng, p, 1 + rng() % 3, k);
      if (ms::is_simple(m)) parts.push_back(std::move(m));
    }
    const std::string tag = "case " + std::to_string(t.cases);
    ++t.cases;
    guarded(t, tag, [&] {
      const ms::SumDecomposition d = ms::external_direct_sum(parts);
      const ms::NormalSeries s = ms::canonical_sum_series(d);
      t.check(ms::validate_normal_series(s).ok(), tag + ": canonical series invalid");
      t.check(ms::is_unrefinable(s), tag + ": canonical series not a composition series");
      const ms::FactorList fs = ms::factors(s);
      for (std::size_t i = 0; i < parts.size(); ++i)
        t.check(ms::is_isomorphic(fs[i].factor.quotient, parts[i]).has_value(),
                tag + ": factor " + std::to_string(i) + " not isomorphic to its part");
      const std::vector<ms::Submodule> other = moved_images(rng, d);
      const ms::SumDecomposition e = ms::internal_decomposition(d.total(), other);
      if (e.embeddings() != d.embeddings()) ++moved;
      const ms::JordanHolderResult r = ms::uniqueness_check(d, e);
      t.check(std::holds_alternative<ms::SeriesPairing>(r), tag + ": uniqueness check reported a mismatch");
    });
  }
  return report(5, "direct sums, canonical series and decomposition uniqueness", t,
                std::to_string(moved) + " decompositions moved by an automorphism");
}

bool ordinals() {
  Tally t;
  std::mt19937_64 rng(4);
  const ms::Ordinal w = ms::Ordinal::omega(), one = ms::Ordinal::finite(1);
  for (int c = 0; c < 1000; ++c) {
    const ms::Ordinal a = ms::test::random_ordinal(rng, 2, 9), b = ms::test::random_ordinal(rng, 2, 9),
                      g = ms::test::random_ordinal(rng, 2, 9);
    ++t.cases;
    t.check(ms::add(ms::add(a, b), g) == ms::add(a, ms::add(b, g)),
            "associativity fails for " + ms::to_string(a) + ", " + ms::to_string(b) + ", " + ms::to_string(g));
  }
  ++t.cases;
  t.check(ms::add(one, w) == w && ms::add(w, one) != w && ms::add(w, one) == ms::parse_ordinal("w+1"),
          "1+w = w != w+1 fails");

  const std::vector<ms::Ordinal> small = ms::test::small_ordinals(2, 3);
  for (const ms::Ordinal& a : small) {
    ++t.cases;
    const int kinds = int(a.is_zero()) + int(ms::is_successor(a)) + int(ms::is_limit(a));
    t.check(kinds == 1, "trichotomy fails for " + ms::to_string(a));
    const ms::Ordinal s = ms::successor(a);
    t.check(s > a, "successor not larger for " + ms::to_string(a));
    for (const ms::Ordinal& b : small) t.check(!(a < b && b < s), "element between " + ms::to_string(a) + " and its successor");
  }

  std::vector<ms::Ordinal> grid;
  for (std::uint64_t n = 1; n <= 5; ++n) grid.push_back(ms::Ordinal::finite(n));
  for (const char* text : {"w", "w+1", "w*2", "w^2"}) grid.push_back(ms::parse_ordinal(text));
  for (const ms::Ordinal& a : grid)
    for (const ms::Ordinal& b : grid) {
      ++t.cases;
      const bool expect = (a.is_finite() && b.is_finite()) ? a == b : (!a.is_finite() && !b.is_finite());
      const bool got = ms::symbolic_iso({a, "U", std::nullopt}, {b, "U", std::nullopt});
      t.check(got == expect, "symbolic_iso(" + ms::to_string(a) + ", " + ms::to_string(b) + ")");
    }
  return report(6, "ordinal arithmetic, classification and the cardinality criterion", t);
}

bool golden_files(const std::filesystem::path& dir) {
  Tally t;
  std::ifstream cases(dir / "cases.txt");
  t.check(bool(cases), "cannot read " + (dir / "cases.txt").string());
  for (std::string line; std::getline(cases, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream in(line);
    std::string name;
    int want_code = 0;
    in >> name >> want_code;
    std::vector<std::string> args;
    for (std::string a; in >> a;) args.push_back(a[0] == '@' ? (dir / a.substr(1)).string() : a);
    ++t.cases;
    std::ifstream expected_file(dir / (name + ".expected"), std::ios::binary);
    std::ostringstream expected;
    expected << expected_file.rdbuf();
    std::ostringstream got;
    const int code = ms::cli::run(args, got);
    t.check(bool(expected_file), name + ": missing expected output");
    t.check(code == want_code, name + ": exit " + std::to_string(code) + ", wanted " + std::to_string(want_code));
    t.check(got.str() == expected.str(), name + ": output differs from the golden file");
  }
  return report(7, "command-line reports match golden files byte for byte", t);
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path golden = argc > 1 ? argv[1] : MODSERIES_GOLDEN_DIR;
  bool ok = true;
  ok &= lattice_oracle();
  ok &= jordan_holder();
  ok &= schreier_zassenhaus();
  ok &= unrefinability();
  ok &= direct_sums();
  ok &= ordinals();
  ok &= golden_files(golden);
  std::cout << (ok ? "all criteria passed" : "some criteria failed") << "\n";
  return ok ? 0 : 1;
}
