// Acceptance gate: one line per criterion, exit code = number of failures.
// Every check is exact; the only timing tolerances are the per-criterion
// runtime budgets pinned below.

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ghm/analysis.hpp"
#include "ghm/catalog.hpp"
#include "ghm/io.hpp"

#include "oracles.hpp"

using namespace ghm;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kShortBudgetSeconds = 1.0;
constexpr double kFuzzBudgetSeconds = 60.0;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int number, const std::string& what, bool ok, const std::string& detail = "") {
    std::printf("%s  %2d. %s%s%s\n", ok ? "PASS" : "FAIL", number, what.c_str(),
                detail.empty() ? "" : ": ", detail.c_str());
    if (!ok) ++failures;
}

template <typename F>
void criterion(int number, const std::string& what, F body) {
    try {
        std::string detail;
        bool ok = body(detail);
        report(number, what, ok, detail);
    } catch (const std::exception& e) {
        report(number, what, false, e.what());
    }
}

CrystGroup group_of(const std::string& name) {
    const auto& e = catalog_entry(name);
    return CrystGroup::from_affine_generators(e.rank, e.generators);
}

std::vector<Int> type_dimensions(const HodgeTypeList& list) {
    std::vector<Int> dims;
    for (const auto& t : list.types) dims.push_back(t.dimension);
    return dims;
}

// shared corpus built by criterion 6, reused by 7 and 8
struct FuzzInstance {
    CrystGroup group;
    Overlattice lattice;
};
std::vector<FuzzInstance> fuzz_corpus;

Rat random_rat(std::mt19937& rng, int max_den) {
    std::uniform_int_distribution<int> den_pick(1, max_den);
    int q = den_pick(rng);
    std::uniform_int_distribution<int> num_pick(0, q - 1);
    return Rat(num_pick(rng), q);
}

}  // namespace

int main() {
    criterion(1, "rank 4 involution with half shift: full report under a second",
              [](std::string& detail) {
                  auto start = Clock::now();
                  auto r = analyze(group_of("half-shift-involution"));
                  double elapsed = seconds_since(start);
                  bool ok = r.torsion.torsion_free && r.iso.even && r.denominator.d == 2 &&
                            r.extension.order == 2 && r.hodge && r.hodge->count == 1 &&
                            type_dimensions(*r.hodge) == std::vector<Int>{Int(2)} &&
                            elapsed < kShortBudgetSeconds;
                  std::ostringstream os;
                  os << "d=" << r.denominator.d << ", types=" << (r.hodge ? r.hodge->count : Int(0))
                     << ", " << elapsed << "s";
                  detail = os.str();
                  return ok;
              });

    criterion(2, "rank 4 order three rotation with third shift: two unit components",
              [](std::string& detail) {
                  auto start = Clock::now();
                  auto r = analyze(group_of("third-turn-shift"));
                  double elapsed = seconds_since(start);
                  bool ok = r.torsion.torsion_free && r.iso.even && r.denominator.d == 3 &&
                            r.hodge && r.hodge->count == 2 &&
                            type_dimensions(*r.hodge) == std::vector<Int>{Int(1), Int(1)} &&
                            elapsed < kShortBudgetSeconds;
                  std::ostringstream os;
                  os << "d=" << r.denominator.d << ", " << elapsed << "s";
                  detail = os.str();
                  return ok;
              });

    criterion(3, "point reflection: order two torsion witness, eigenvalue test, splits",
              [](std::string& detail) {
                  auto g = group_of("point-reflection");
                  auto torsion = g.torsion_status();
                  bool witness_ok = !torsion.torsion_free && !torsion.elements.empty();
                  bool order_two = true, eigen_fails = true;
                  for (const auto& t : torsion.elements) {
                      order_two = order_two &&
                                  g.point_group().element_order(t.element) == Int(2);
                      eigen_fails = eigen_fails && !g.eigenvalue_one(t.element);
                  }
                  bool d_one = g.minimal_denominator().d == 1;
                  auto eq = splitting_equivalence(g, Overlattice::standard(2));
                  bool all_three = eq.congruence_solvable && eq.class_vanishes &&
                                   eq.fixed_point_exists;
                  detail = "witnesses=" + std::to_string(torsion.elements.size());
                  return witness_ok && order_two && eigen_fails && d_one && all_three;
              });

    criterion(4, "trivial point groups of rank 2n: one type of dimension n squared",
              [](std::string& detail) {
                  auto start = Clock::now();
                  bool ok = true;
                  for (std::size_t n = 1; n <= 3; ++n) {
                      CrystGroup g = CrystGroup::from_affine_generators(
                          2 * n, {{IntMatrix::identity(2 * n), RatVector(2 * n, Rat(0))}});
                      auto r = analyze(g);
                      ok = ok && r.hodge && r.hodge->count == 1 &&
                           r.hodge->types[0].dimension == Int(n * n);
                  }
                  double elapsed = seconds_since(start);
                  std::ostringstream os;
                  os << elapsed << "s";
                  detail = os.str();
                  return ok && elapsed < kShortBudgetSeconds;
              });

    criterion(5, "cyclic cohomology against the independent periodic resolution",
              [](std::string& detail) {
                  std::vector<std::pair<int, IntMatrix>> rotations = {
                      {2, IntMatrix::of({{-1, 0}, {0, -1}})},
                      {3, IntMatrix::of({{0, -1}, {1, -1}})},
                      {4, IntMatrix::of({{0, -1}, {1, 0}})},
                      {6, IntMatrix::of({{1, -1}, {1, 0}})},
                  };
                  bool ok = true;
                  for (const auto& [m, rot] : rotations) {
                      auto g = FiniteMatrixGroup::from_generators(2, {rot});
                      auto mod = GModule::trivial(g, 1);
                      auto bar_h2 = CohomologyGroup(mod, 2).invariant_factors();
                      auto oracle = ghmtest::periodic_cyclic(mod);
                      ok = ok && bar_h2 == std::vector<Int>{Int(m)} && oracle.h2 == bar_h2 &&
                           CohomologyGroup(mod, 1).invariant_factors() == oracle.h1;
                  }
                  auto sign = FiniteMatrixGroup::from_generators(1, {IntMatrix::of({{-1}})});
                  auto mod = GModule::lattice(sign);
                  auto bar_h1 = CohomologyGroup(mod, 1).invariant_factors();
                  auto oracle = ghmtest::periodic_cyclic(mod);
                  ok = ok && bar_h1 == std::vector<Int>{Int(2)} && oracle.h1 == bar_h1;
                  detail = "m in {2,3,4,6} plus the sign module";
                  return ok;
              });

    criterion(6, "splitting equivalence fuzz: three criteria agree on 100 instances",
              [](std::string& detail) {
                  auto start = Clock::now();
                  std::mt19937 rng(20260814);
                  std::vector<FiniteMatrixGroup> point_groups;
                  for (const auto& e : catalog()) {
                      if (e.rank > 4) continue;
                      std::vector<IntMatrix> linears;
                      for (const auto& g : e.generators) linears.push_back(g.linear);
                      point_groups.push_back(
                          FiniteMatrixGroup::from_generators(e.rank, linears));
                  }
                  std::uniform_int_distribution<std::size_t> pick(0, point_groups.size() - 1);
                  std::size_t built = 0;
                  bool ok = true;
                  while (built < 100) {
                      const auto& pg = point_groups[pick(rng)];
                      std::size_t n = pg.degree();
                      std::vector<AffineGenerator> gens;
                      for (const auto& l : pg.generators()) {
                          RatVector t(n);
                          for (auto& x : t) x = random_rat(rng, 4);
                          gens.push_back({l, t});
                      }
                      if (gens.empty()) gens.push_back({IntMatrix::identity(n), RatVector(n, Rat(0))});
                      std::optional<CrystGroup> maybe;
                      try {
                          maybe = CrystGroup::from_affine_generators(n, gens);
                      } catch (const NotCrystallographic&) {
                          continue;
                      }
                      CrystGroup& g = *maybe;

                      RatVector v(n);
                      for (auto& x : v) x = random_rat(rng, 4);
                      std::vector<RatVector> orbit;
                      for (std::size_t i = 0; i < pg.size(); ++i)
                          orbit.push_back(pg.element(i).mul(v));
                      Overlattice lattice = Overlattice::from_vectors(g.point_group(), orbit);
                      if (lattice.index() > 16) continue;

                      auto eq = splitting_equivalence(g, lattice);
                      ok = ok && eq.agree();
                      fuzz_corpus.push_back({g, lattice});
                      ++built;
                  }
                  double elapsed = seconds_since(start);
                  std::ostringstream os;
                  os << built << " instances, " << elapsed << "s";
                  detail = os.str();
                  return ok && elapsed < kFuzzBudgetSeconds;
              });

    criterion(7, "minimal denominator equals the extension class order everywhere",
              [](std::string& detail) {
                  std::vector<CrystGroup> corpus;
                  for (const auto& e : catalog())
                      corpus.push_back(CrystGroup::from_affine_generators(e.rank, e.generators));
                  for (const auto& f : fuzz_corpus) corpus.push_back(f.group);

                  bool ok = !corpus.empty();
                  for (const auto& g : corpus) {
                      auto dr = g.minimal_denominator();
                      ok = ok && dr.d == extension_order(g);
                      for (const auto& u : dr.realized.vector_system())
                          for (const auto& x : u) ok = ok && den(x * Rat(dr.d)) == 1;
                      ok = ok && dr.realized.validate().empty();
                  }
                  detail = std::to_string(corpus.size()) + " groups";
                  return ok;
              });

    criterion(8, "exact character orthogonality and multiplicity bookkeeping",
              [](std::string& detail) {
                  std::vector<FiniteMatrixGroup> groups;
                  for (const auto& e : catalog()) {
                      std::vector<IntMatrix> linears;
                      for (const auto& g : e.generators) linears.push_back(g.linear);
                      groups.push_back(FiniteMatrixGroup::from_generators(e.rank, linears));
                  }
                  for (const auto& f : fuzz_corpus) groups.push_back(f.group.point_group());

                  bool ok = true;
                  for (const auto& g : groups) {
                      if (g.size() > 48) continue;
                      auto table = CharacterTable::build(g);
                      long long e = table.exponent_order();
                      const auto& classes = g.classes();
                      for (std::size_t i = 0; i < table.num_chars(); ++i)
                          for (std::size_t j = 0; j < table.num_chars(); ++j) {
                              Cyclotomic sum = Cyclotomic::zero(e);
                              for (std::size_t c = 0; c < classes.size(); ++c) {
                                  Cyclotomic term = table.value(i, c) * table.value(j, c).conj();
                                  sum = sum + term * Cyclotomic::from_rat(
                                      e, Rat(Int(classes[c].members.size())));
                              }
                              Cyclotomic expect = Cyclotomic::from_rat(
                                  e, i == j ? Rat(Int(g.size())) : Rat(0));
                              ok = ok && sum == expect;
                          }

                      auto iso = isotypical_decomposition(g);
                      Int total(0);
                      for (const auto& c : iso.components) total += c.multiplicity * c.degree;
                      ok = ok && total == Int(g.degree());
                  }
                  detail = std::to_string(groups.size()) + " tables";
                  return ok;
              });

    criterion(9, "sample structures square to minus one and recover their type",
              [](std::string& detail) {
                  bool ok = true;
                  std::size_t samples = 0;
                  for (const auto& e : catalog()) {
                      CrystGroup g = CrystGroup::from_affine_generators(e.rank, e.generators);
                      auto iso = isotypical_decomposition(g.point_group());
                      if (!iso.even) continue;
                      for (const auto& type : enumerate_hodge_types(iso).types) {
                          auto s = sample_complex_structure(iso, type.nu);
                          ++samples;
                          long long m = s.field_order;
                          std::size_t n = e.rank;
                          CycMatrix minus_one = CycMatrix::identity(m, n).scaled(
                              Cyclotomic::from_rat(m, Rat(-1)));
                          ok = ok && s.j * s.j == minus_one;
                          for (std::size_t i = 0; i < g.point_group().size(); ++i) {
                              CycMatrix l = CycMatrix::from_int(m, g.point_group().element(i));
                              ok = ok && s.j * l == l * s.j;
                          }
                          for (const auto& c : iso.components) {
                              auto p = isotypical_projector(iso.table, c.chi, m);
                              Int expect = c.real_char ? Int(c.multiplicity / 2 * c.degree)
                                                       : Int(type.nu[c.chi] * c.degree);
                              ok = ok && Int((p * s.h10).rank()) == expect;
                          }
                      }
                  }
                  detail = std::to_string(samples) + " samples";
                  return ok && samples > 0;
              });

    criterion(10, "translation conjugation preserves every reported invariant",
               [](std::string& detail) {
                   std::mt19937 rng(8271828);
                   struct Baseline {
                       CrystGroup group;
                       bool torsion_free;
                       Int d;
                       IntVector class_coords;
                       Int type_count;
                       std::vector<Int> dims;
                   };
                   std::vector<Baseline> baselines;
                   for (const auto& e : catalog()) {
                       CrystGroup g = CrystGroup::from_affine_generators(e.rank, e.generators);
                       auto r = analyze(g);
                       baselines.push_back({g, r.torsion.torsion_free, r.denominator.d,
                                            r.extension.class_coords,
                                            r.hodge ? r.hodge->count : Int(0),
                                            r.hodge ? type_dimensions(*r.hodge)
                                                    : std::vector<Int>{}});
                   }
                   std::uniform_int_distribution<std::size_t> pick(0, baselines.size() - 1);
                   bool ok = true;
                   for (int trial = 0; trial < 100; ++trial) {
                       const auto& base = baselines[pick(rng)];
                       RatVector w(base.group.rank());
                       for (auto& x : w) x = random_rat(rng, 6);
                       CrystGroup moved = base.group.translate_conjugate(w);
                       auto r = analyze(moved);
                       ok = ok && r.torsion.torsion_free == base.torsion_free &&
                            r.denominator.d == base.d &&
                            r.extension.class_coords == base.class_coords &&
                            (r.hodge ? r.hodge->count : Int(0)) == base.type_count &&
                            (r.hodge ? type_dimensions(*r.hodge) : std::vector<Int>{}) ==
                                base.dims;
                   }
                   detail = "100 pairs";
                   return ok;
               });

    std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
