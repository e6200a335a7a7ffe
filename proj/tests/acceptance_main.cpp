// Acceptance gate: ten end-to-end criteria, each printed as a single
// [PASS]/[FAIL] line with its runtime against a pinned budget. The binary
// exits nonzero if any criterion fails its checks or its budget.
//
// Every derived quantity is compared against an independent computation:
// brute-force topology from the pointwise open-set definition, worklist
// subgroup closures, valuation arithmetic, and the shipped CLI binary.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "unilab/connectivity.hpp"
#include "unilab/generators.hpp"
#include "unilab/group.hpp"
#include "unilab/json_io.hpp"
#include "unilab/scalars.hpp"
#include "unilab/sweep.hpp"

namespace {

using namespace unilab;
using nlohmann::json;

#define GATE(cond)                                                       \
  do {                                                                   \
    if (!(cond)) {                                                       \
      std::printf("[FAIL] %s:%d: %s\n", __FILE__, __LINE__, #cond);      \
      return false;                                                      \
    }                                                                    \
  } while (0)

// ---------------------------------------------------------------- helpers

// Open sets straight from the definition: m is open when every point of m
// has some member whose row at that point stays inside m.
std::vector<uint32_t> oracle_opens(const UniformityBase& base) {
  int n = base.space().size;
  std::vector<uint32_t> opens;
  for (uint32_t m = 0; m < (uint32_t(1) << n); ++m) {
    bool open = true;
    for (int a = 0; a < n && open; ++a) {
      if (!((m >> a) & 1)) continue;
      bool has = false;
      for (const Relation& v : base.members()) {
        bool inside = true;
        for (int y = 0; y < n && inside; ++y)
          if (v.test(a, y) && !((m >> y) & 1)) inside = false;
        if (inside) {
          has = true;
          break;
        }
      }
      if (!has) open = false;
    }
    if (open) opens.push_back(m);
  }
  return opens;
}

bool is_in(const std::vector<uint32_t>& sorted, uint32_t m) {
  for (uint32_t v : sorted)
    if (v == m) return true;
  return false;
}

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  std::string cmd = std::string(UNILAB_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int raw = pclose(pipe);
  if (WIFEXITED(raw)) r.status = WEXITSTATUS(raw);
  return r;
}

// ------------------------------------------------------------- criterion 1

bool criterion1() {
  Rng rng(101);
  for (int t = 0; t < 200; ++t) {
    FiniteSpace space(rng.uniform(1, 6));
    Relation u = random_relation(rng, space, rng.uniform(10, 60));
    Relation v = random_relation(rng, space, rng.uniform(10, 60));
    Relation w = random_relation(rng, space, rng.uniform(10, 60));
    GATE(compose(compose(u, v), w) == compose(u, compose(v, w)));
    Relation d = Relation::diagonal(space);
    GATE(compose(d, u) == u);
    GATE(compose(u, d) == u);
    GATE(inverse(inverse(u)) == u);
    GATE(inverse(compose(u, v)) == compose(inverse(v), inverse(u)));
    ElementSet a = random_subset(rng, space.size);
    GATE(image(compose(u, v), a) == image(v, image(u, a)));
  }
  return true;
}

// ------------------------------------------------------------- criterion 2

bool criterion2() {
  Rng rng(202);
  for (int t = 0; t < 100; ++t) {
    FiniteSpace space(rng.uniform(1, 6));
    SemiMetric d = random_semimetric(rng, space);
    std::vector<Rational> radii = d.canonical_radii();
    int k = static_cast<int>(radii.size());
    for (int pick = 0; pick < 5; ++pick) {
      const Rational& r1 = radii[rng.uniform(0, k - 1)];
      const Rational& r2 = radii[rng.uniform(0, k - 1)];
      GATE(compose(entourage(d, r1), entourage(d, r2))
               .is_subset_of(entourage(d, r1 + r2)));
    }
  }
  for (int t = 0; t < 100; ++t) {
    FiniteSpace space(rng.uniform(1, 6));
    SemiMetric d = random_ultrametric(rng, space);
    for (const Rational& r : d.canonical_radii()) {
      Relation u = entourage(d, r);
      GATE(classify(u).is_equivalence());
      // Balls at one radius tile the carrier.
      ElementSet covered(space.size);
      std::vector<ElementSet> balls;
      for (int x = 0; x < space.size; ++x) balls.push_back(ball(d, x, r));
      for (int x = 0; x < space.size; ++x) {
        GATE(balls[x].test(x));
        covered |= balls[x];
        for (int y = 0; y < space.size; ++y)
          GATE(balls[x] == balls[y] || !balls[x].intersects(balls[y]));
      }
      GATE(covered == ElementSet::all(space.size));
    }
  }
  return true;
}

// ------------------------------------------------------------- criterion 3

bool criterion3() {
  Rng rng(303);
  for (int t = 0; t < 50; ++t) {
    FiniteSpace space(rng.uniform(1, 5));
    int n = space.size;
    UniformityBase base = random_base(rng, space);
    std::vector<uint32_t> opens = oracle_opens(base);
    GATE(topology(base, n).open_masks() == opens);

    uint32_t full = (n == 32) ? ~uint32_t(0) : ((uint32_t(1) << n) - 1);
    for (uint32_t m = 0; m <= full; ++m) {
      ElementSet a = ElementSet::from_mask32(n, m);
      // Interior: union of open subsets of m.
      uint32_t want_int = 0;
      for (uint32_t o : opens)
        if ((o & m) == o) want_int |= o;
      GATE(interior(base, a).mask32() == want_int);
      // Closure: intersection of closed supersets of m.
      uint32_t want_cl = full;
      for (uint32_t o : opens) {
        uint32_t closed = full & ~o;
        if ((closed & m) == m) want_cl &= closed;
      }
      GATE(closure(base, a).mask32() == want_cl);
      if (m == full) break;  // avoid wrap on the widest mask
    }

    // Hausdorff exactly when the members meet in the diagonal, and exactly
    // when distinct points sit in disjoint opens.
    Relation meet = base.members().front();
    for (const Relation& v : base.members()) meet &= v;
    bool diag = meet == Relation::diagonal(space);
    bool separated = true;
    for (int x = 0; x < n && separated; ++x)
      for (int y = x + 1; y < n && separated; ++y) {
        bool found = false;
        for (uint32_t o1 : opens) {
          if (!((o1 >> x) & 1)) continue;
          for (uint32_t o2 : opens)
            if (((o2 >> y) & 1) && (o1 & o2) == 0) {
              found = true;
              break;
            }
          if (found) break;
        }
        separated = found;
      }
    GATE(diag == separated);
    GATE(dimension_zero_report(base, n).hausdorff == diag);
  }
  return true;
}

// ------------------------------------------------------------- criterion 4

bool criterion4() {
  Rng rng(404);
  for (int t = 0; t < 50; ++t) {
    FiniteSpace space(1 + t % 4);
    int n = space.size;
    UniformityBase base = random_base(rng, space);
    for (uint32_t m = 1; m < (uint32_t(1) << n); ++m) {
      ElementSet e = ElementSet::from_mask32(n, m);
      ChainConnectivity cc = is_chain_connected(e, base);
      auto split = separated_split(e, base);
      GATE(cc.connected == !split.has_value());
      if (split) {
        const auto& [a, b] = *split;
        GATE(!a.empty());
        GATE(!b.empty());
        GATE(!a.intersects(b));
        GATE((a | b) == e);
        GATE(a.test(e.first()));
        GATE(uniformly_separated(a, b, base).has_value());
        GATE(cc.violating_member.has_value());
        Relation sym = symmetrize(base.members()[*cc.violating_member]);
        GATE(chain_components(e, sym).size() >= 2);
      }
      // Passing to the closure never creates or destroys connectivity.
      ElementSet cl = closure(base, e);
      GATE(is_chain_connected(cl, base).connected == cc.connected);
    }
  }
  return true;
}

// ------------------------------------------------------------- criterion 5

bool criterion5() {
  Rng rng(505);
  for (int t = 0; t < 100; ++t) {
    FiniteSpace sx(rng.uniform(1, 5));
    FiniteSpace sy(rng.uniform(1, 5));
    FiniteSpace sz(rng.uniform(1, 5));
    UniformityBase bx = random_base(rng, sx);
    UniformityBase by = random_base(rng, sy);
    UniformityBase bz = random_base(rng, sz);
    std::vector<int> f = random_map(rng, sx.size, sy.size);
    std::vector<int> g = random_map(rng, sy.size, sz.size);

    // On finite carriers uniform continuity and topological continuity
    // coincide, in both directions.
    std::vector<uint32_t> ox = oracle_opens(bx);
    std::vector<uint32_t> oy = oracle_opens(by);
    bool continuous = true;
    for (uint32_t o : oy) {
      uint32_t pre = 0;
      for (int x = 0; x < sx.size; ++x)
        if ((o >> f[x]) & 1) pre |= uint32_t(1) << x;
      if (!is_in(ox, pre)) {
        continuous = false;
        break;
      }
    }
    GATE(uniformly_continuous(f, bx, by).ok == continuous);

    // Composites of uniformly continuous maps stay uniformly continuous.
    if (uniformly_continuous(f, bx, by).ok &&
        uniformly_continuous(g, by, bz).ok) {
      std::vector<int> gf(sx.size);
      for (int x = 0; x < sx.size; ++x) gf[x] = g[f[x]];
      GATE(uniformly_continuous(gf, bx, bz).ok);
    }
  }
  return true;
}

// ------------------------------------------------------------- criterion 6

bool criterion6() {
  Rng rng(606);
  for (int t = 0; t < 100; ++t) {
    FiniteSpace space(rng.uniform(1, 5));
    UniformityBase base =
        base_from_semimetric(random_ultrametric(rng, space));
    GATE(dimension_zero_report(base, space.size).uniformly_zero_dimensional);
  }
  for (int t = 0; t < 100; ++t) {
    FiniteSpace space(rng.uniform(1, 5));
    UniformityBase base = random_base(rng, space);
    DimensionZeroReport r = dimension_zero_report(base, space.size);
    GATE(!r.uniformly_zero_dimensional || r.strongly_zero_dimensional);
    GATE(!r.strongly_zero_dimensional || r.topologically_zero_dimensional);
    GATE(!r.strongly_totally_separated || r.totally_separated);
    GATE(!r.totally_separated || r.hausdorff);

    UniformityBase eq = equivalence_base(base);
    for (const Relation& u : eq.members()) {
      GATE(classify(u).is_equivalence());
      GATE(contains(base, u));
    }
  }
  return true;
}

// ------------------------------------------------------------- criterion 7

bool criterion7() {
  std::vector<Rational> samples = farey_samples(20);
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
    std::vector<long> vals(samples.size(), 0);
    for (size_t i = 0; i < samples.size(); ++i)
      if (!samples[i].is_zero()) vals[i] = padic_valuation(p, samples[i]);
    for (size_t i = 0; i < samples.size(); ++i) {
      if (samples[i].is_zero()) continue;
      for (size_t j = 0; j < samples.size(); ++j) {
        if (samples[j].is_zero()) continue;
        GATE(padic_valuation(p, samples[i] * samples[j]) ==
             vals[i] + vals[j]);
        Rational sum = samples[i] + samples[j];
        if (!sum.is_zero()) {
          long vs = padic_valuation(p, sum);
          long lo = std::min(vals[i], vals[j]);
          GATE(vs >= lo);
          if (vals[i] != vals[j]) GATE(vs == lo);
        }
      }
    }
    // Integer points never exceed 1 in p-adic absolute value.
    for (long n = 1; n <= 10000; ++n)
      GATE(padic_valuation(p, Rational(n)) >= 0);
  }
  ArchimedeanReport arch = is_archimedean(AbsoluteValue::standard());
  GATE(arch.verdict == Archimedean::Archimedean);
  GATE(arch.witness_n.has_value());
  GATE(*arch.witness_n == 2);
  return true;
}

// ------------------------------------------------------------- criterion 8

bool criterion8() {
  std::vector<FiniteGroup> fleet;
  fleet.push_back(FiniteGroup::cyclic(6));
  fleet.push_back(FiniteGroup::cyclic(12));
  fleet.push_back(FiniteGroup::symmetric(3));
  fleet.push_back(FiniteGroup::symmetric(4));
  fleet.push_back(FiniteGroup::dihedral(4));
  fleet.push_back(FiniteGroup::quaternion8());

  Rng rng(808);
  for (int t = 0; t < 100; ++t) {
    const FiniteGroup& g = fleet[t % fleet.size()];
    int n = g.size();
    ElementSet a = random_subset(rng, n);

    // Closure under the group operations, checked directly.
    bool closed = a.test(g.identity());
    for (int x : a.indices()) {
      if (!closed) break;
      if (!a.test(g.inv(x))) closed = false;
      for (int y : a.indices())
        if (!a.test(g.mul(x, y))) {
          closed = false;
          break;
        }
    }
    Relation al = relation_left(g, a);
    GATE(classify(al).is_equivalence() == closed);
    SubgroupReport rep = subgroup_check(g, a);
    GATE(rep.is_subgroup == closed);
    if (closed) {
      auto classes = equivalence_classes(al);
      auto cosets = left_cosets(g, a);
      GATE(classes.size() == cosets.size());
      for (size_t i = 0; i < classes.size(); ++i)
        GATE(classes[i] == cosets[i]);
      bool conj_stable = true;
      for (int x = 0; x < n && conj_stable; ++x)
        conj_stable = conjugate_subset(g, x, a) == a;
      GATE(rep.is_normal == conj_stable);
      GATE((al == relation_right(g, a)) == conj_stable);
    }

    // Generated subgroup against a worklist closure.
    ElementSet want(n);
    want.set(g.identity());
    want |= a;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int x : want.indices()) {
        if (!want.test(g.inv(x))) {
          want.set(g.inv(x));
          grew = true;
        }
        for (int y : want.indices())
          if (!want.test(g.mul(x, y))) {
            want.set(g.mul(x, y));
            grew = true;
          }
      }
    }
    GATE(generated_subgroup(g, a).subgroup == want);
  }

  // The left core of anything above a member stays in the uniformity.
  for (const FiniteGroup& g : fleet) {
    std::vector<ElementSet> family;
    for (int h = 0; h < g.size(); ++h) {
      ElementSet cyc = generated_subgroup(g, ElementSet::of(g.size(), {h}))
                           .subgroup;
      bool seen = false;
      for (const ElementSet& o : family) seen = seen || o == cyc;
      if (!seen) family.push_back(cyc);
    }
    UniformityBase base = left_uniformity_base(g, family).base;
    for (const Relation& u : base.members()) {
      LeftCore lc = left_core(g, u);
      GATE(lc.core == u);  // members are left-invariant already
      Relation wider = u;
      wider.set(rng.uniform(0, g.size() - 1), rng.uniform(0, g.size() - 1));
      LeftCore wc = left_core(g, wider);
      GATE(wc.core.is_subset_of(wider));
      GATE(u.is_subset_of(wc.core));  // the member survives inside the core
      GATE(invariance(g, wc.core).left);
      GATE(contains(base, wc.core));
    }
  }
  return true;
}

// ------------------------------------------------------------- criterion 9

bool criterion9() {
  CliRun r = run_cli("qchain --from 0 --to 1 --r 1/1000");
  GATE(r.status == 0);
  json rep = json::parse(r.out, nullptr, false);
  GATE(!rep.is_discarded());
  GATE(rep.at("count") == 2001);
  const json& points = rep.at("points");
  GATE(points.size() == 2001);
  Rational bound(1, 1000);
  Rational prev = Rational::parse(points[0].get<std::string>());
  GATE(prev == Rational(0));
  for (size_t i = 1; i < points.size(); ++i) {
    Rational cur = Rational::parse(points[i].get<std::string>());
    GATE(cur > prev);
    GATE(cur - prev < bound);
    prev = cur;
  }
  GATE(prev == Rational(1));
  return true;
}

// ------------------------------------------------------------ criterion 10

bool criterion10() {
  std::string args = "sweep --seed 7 --instances 30 --max-size 5";
  CliRun first = run_cli(args);
  CliRun second = run_cli(args);
  GATE(first.status == 0);
  GATE(second.status == 0);
  GATE(!first.out.empty());
  GATE(first.out == second.out);
  json rep = json::parse(first.out, nullptr, false);
  GATE(!rep.is_discarded());
  GATE(rep.at("all_passed") == true);

  SweepConfig cfg;
  cfg.seed = 7;
  cfg.instance_count = 30;
  cfg.max_size = 5;
  GATE(run_sweep(cfg).to_json().dump() == run_sweep(cfg).to_json().dump());
  return true;
}

struct Criterion {
  int number;
  const char* summary;
  double limit_seconds;  // 0 means unbounded
  bool (*run)();
};

const Criterion kCriteria[] = {
    {1, "relation algebra laws on 200 random triples", 1.0, criterion1},
    {2, "entourage composition bounds and ultrametric ball partitions", 2.0,
     criterion2},
    {3, "closure, interior and separation against brute-force topology", 5.0,
     criterion3},
    {4, "chain connectivity duality on every subset, carriers to 4", 10.0,
     criterion4},
    {5, "continuity equals uniform continuity on finite carriers", 2.0,
     criterion5},
    {6, "zero-dimensionality ladder and equivalence bases", 5.0, criterion6},
    {7, "p-adic valuation laws, exhaustive to height 20", 5.0, criterion7},
    {8, "group translations, generated subgroups and left cores", 10.0,
     criterion8},
    {9, "qchain CLI emits 2001 exact points with gaps below 1/1000", 0.1,
     criterion9},
    {10, "sweep reports are byte-identical across reruns", 0.0, criterion10},
};

}  // namespace

int main() {
  int failed = 0;
  for (const Criterion& c : kCriteria) {
    auto start = std::chrono::steady_clock::now();
    bool ok = c.run();
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    bool in_budget = c.limit_seconds == 0.0 || seconds <= c.limit_seconds;
    if (ok && in_budget) {
      if (c.limit_seconds > 0.0)
        std::printf("[PASS] criterion %d: %s (%.3fs, limit %gs)\n", c.number,
                    c.summary, seconds, c.limit_seconds);
      else
        std::printf("[PASS] criterion %d: %s (%.3fs)\n", c.number, c.summary,
                    seconds);
    } else {
      ++failed;
      if (!ok)
        std::printf("[FAIL] criterion %d: %s (%.3fs)\n", c.number, c.summary,
                    seconds);
      else
        std::printf("[FAIL] criterion %d: %s (%.3fs over limit %gs)\n",
                    c.number, c.summary, seconds, c.limit_seconds);
    }
  }
  if (failed == 0) {
    std::printf("all %zu criteria passed\n",
                sizeof kCriteria / sizeof kCriteria[0]);
    return 0;
  }
  std::printf("%d criteria failed\n", failed);
  return 1;
}
