#include "unilab/sweep.hpp"

#include <algorithm>
#include <functional>

#include "unilab/connectivity.hpp"
#include "unilab/generators.hpp"
#include "unilab/group.hpp"
#include "unilab/json_io.hpp"
#include "unilab/scalars.hpp"

namespace unilab {

using nlohmann::json;

namespace {

struct SuiteRun {
  SuiteResult result;

  void check(bool ok, int instance, const char* label) {
    ++result.checks;
    if (ok) return;
    ++result.failures;
    if (result.first_counterexample.is_null())
      result.first_counterexample = json{{"instance", instance},
                                         {"check", label}};
  }
};

int clamp_size(const SweepConfig& cfg, int hard_cap) {
  return std::min(cfg.max_size, hard_cap);
}

SuiteResult run_relation_algebra(const SweepConfig& cfg) {
  SuiteRun run;
  run.result.name = "relation-algebra";
  Rng rng(cfg.seed);
  for (int t = 0; t < cfg.instance_count; ++t) {
    FiniteSpace space(rng.uniform(1, cfg.max_size));
    Relation u = random_relation(rng, space, 30);
    Relation v = random_relation(rng, space, 30);
    Relation w = random_relation(rng, space, 30);
    ElementSet a = random_subset(rng, space.size);
    Relation diag = Relation::diagonal(space);
    run.check(compose(compose(u, v), w) == compose(u, compose(v, w)), t,
              "composition associates");
    run.check(compose(u, diag) == u && compose(diag, u) == u, t,
              "diagonal is neutral");
    run.check(image(compose(u, v), a) == image(v, image(u, a)), t,
              "image of a composition factors");
    run.check(inverse(inverse(u)) == u, t, "transpose involutes");
    run.check(inverse(compose(u, v)) == compose(inverse(v), inverse(u)), t,
              "transpose reverses composition");
  }
  return run.result;
}

SuiteResult run_entourage(const SweepConfig& cfg) {
  SuiteRun run;
  run.result.name = "entourage";
  Rng rng(cfg.seed);
  for (int t = 0; t < cfg.instance_count; ++t) {
    FiniteSpace space(rng.uniform(1, cfg.max_size));
    SemiMetric d = random_semimetric(rng, space);
    auto radii = d.canonical_radii();
    for (int pick = 0; pick < 3; ++pick) {
      const Rational& r1 =
          radii[rng.uniform(0, static_cast<int>(radii.size()) - 1)];
      const Rational& r2 =
          radii[rng.uniform(0, static_cast<int>(radii.size()) - 1)];
      run.check(compose(entourage(d, r1), entourage(d, r2))
                    .is_subset_of(entourage(d, r1 + r2)),
                t, "entourages compose within the radius sum");
    }
    SemiMetric du = random_ultrametric(rng, space);
    for (const auto& r : du.canonical_radii()) {
      Relation e = entourage(du, r);
      run.check(classify(e).is_equivalence(), t,
                "ultrametric entourages are equivalences");
      // Balls at one radius tile the carrier.
      std::vector<ElementSet> balls;
      for (int x = 0; x < space.size; ++x) balls.push_back(ball(du, x, r));
      bool tiling = true;
      for (int x = 0; x < space.size && tiling; ++x)
        for (int y = 0; y < space.size; ++y) {
          bool same = balls[x] == balls[y];
          bool disjoint = !balls[x].intersects(balls[y]);
          if (!same && !disjoint) {
            tiling = false;
            break;
          }
        }
      for (int x = 0; x < space.size; ++x)
        if (!balls[x].test(x)) tiling = false;
      run.check(tiling, t, "ultrametric balls tile");
    }
  }
  return run.result;
}

SuiteResult run_topology(const SweepConfig& cfg) {
  SuiteRun run;
  run.result.name = "topology";
  Rng rng(cfg.seed);
  for (int t = 0; t < cfg.instance_count; ++t) {
    int n = rng.uniform(1, clamp_size(cfg, 5));
    FiniteSpace space(n);
    UniformityBase base = random_base(rng, space);
    Topology topo = topology(base);
    uint32_t full = (uint32_t(1) << n) - 1;
    // Opens are closed under union and intersection and contain the ends.
    bool lattice = topo.is_open(0) && topo.is_open(full);
    for (uint32_t a : topo.open_masks())
      for (uint32_t b : topo.open_masks())
        if (!topo.is_open(a | b) || !topo.is_open(a & b)) lattice = false;
    run.check(lattice, t, "opens form a lattice with bottom and top");

    for (uint32_t m = 0; m <= full; ++m) {
      ElementSet a = ElementSet::from_mask32(n, m);
      // Brute closure: intersect all closed supersets.
      uint32_t closure_mask = full;
      for (uint32_t o : topo.open_masks()) {
        uint32_t closed = full & ~o;
        if ((m & ~closed) == 0) closure_mask &= closed;
      }
      // Brute interior: union all open subsets.
      uint32_t interior_mask = 0;
      for (uint32_t o : topo.open_masks())
        if ((o & ~m) == 0) interior_mask |= o;
      run.check(closure(base, a).mask32() == closure_mask, t,
                "closure matches the closed-set intersection");
      run.check(interior(base, a).mask32() == interior_mask, t,
                "interior matches the open-set union");
      run.check(is_open(base, a) == topo.is_open(m), t,
                "the open predicate matches the materialized list");
    }

    // Hausdorff iff the members intersect to the diagonal iff opens
    // separate points.
    Relation meet = Relation::full(space);
    for (const auto& u : base.members()) meet &= u;
    bool by_members = meet == Relation::diagonal(space);
    bool by_opens = true;
    for (int x = 0; x < n && by_opens; ++x)
      for (int y = 0; y < n; ++y) {
        if (x == y) continue;
        bool found = false;
        for (uint32_t o1 : topo.open_masks()) {
          if (!((o1 >> x) & 1)) continue;
          for (uint32_t o2 : topo.open_masks()) {
            if (!((o2 >> y) & 1) || (o1 & o2)) continue;
            found = true;
            break;
          }
          if (found) break;
        }
        if (!found) {
          by_opens = false;
          break;
        }
      }
    run.check(by_members == by_opens, t,
              "point separation matches the member intersection");
  }
  return run.result;
}

SuiteResult run_chain_duality(const SweepConfig& cfg) {
  SuiteRun run;
  run.result.name = "chain-duality";
  Rng rng(cfg.seed);
  for (int t = 0; t < cfg.instance_count; ++t) {
    int n = rng.uniform(1, clamp_size(cfg, 4));
    FiniteSpace space(n);
    UniformityBase base = random_base(rng, space);
    uint32_t full = (uint32_t(1) << n) - 1;
    for (uint32_t m = 0; m <= full; ++m) {
      ElementSet e = ElementSet::from_mask32(n, m);
      bool connected = is_chain_connected(e, base).connected;
      // Independent side: search all two-sided partitions of e.
      bool splittable = false;
      auto members = e.indices();
      int k = static_cast<int>(members.size());
      for (uint32_t pick = 1; pick + 1 < (uint32_t(1) << k) && !splittable;
           ++pick) {
        ElementSet a(n), b(n);
        for (int i = 0; i < k; ++i)
          ((pick >> i) & 1 ? a : b).set(members[i]);
        if (uniformly_separated(a, b, base)) splittable = true;
      }
      run.check(connected == !splittable, t,
                "chain connectivity is dual to uniform separation");
      ElementSet closed = closure(base, e);
      run.check(is_chain_connected(closed, base).connected == connected, t,
                "closure preserves chain connectivity");
    }
  }
  return run.result;
}

SuiteResult run_uniform_continuity(const SweepConfig& cfg) {
  SuiteRun run;
  run.result.name = "uniform-continuity";
  Rng rng(cfg.seed);
  for (int t = 0; t < cfg.instance_count; ++t) {
    int ns = rng.uniform(1, clamp_size(cfg, 5));
    int nt = rng.uniform(1, clamp_size(cfg, 5));
    FiniteSpace src_space(ns), tgt_space(nt);
    UniformityBase target = random_base(rng, tgt_space);
    std::vector<int> f = random_map(rng, ns, nt);
    UniformityBase source = [&]() {
      if (rng.coin()) return random_base(rng, src_space);
      // Refine a pullback so the map is uniformly continuous by fiat.
      std::vector<Relation> sub;
      for (const auto& v : target.members())
        sub.push_back(preimage_relation(f, src_space, v));
      UniformityBase extra = random_base(rng, src_space);
      for (const auto& u : extra.members()) sub.push_back(u);
      return base_from_subbase(sub);
    }();

    // Continuity of f between the topologies.
    Topology ts = topology(source), tt = topology(target);
    bool continuous = true;
    for (uint32_t o : tt.open_masks()) {
      uint32_t pre = 0;
      for (int x = 0; x < ns; ++x)
        if ((o >> f[x]) & 1) pre |= uint32_t(1) << x;
      if (!ts.is_open(pre)) {
        continuous = false;
        break;
      }
    }
    bool uc = uniformly_continuous(f, source, target).ok;
    run.check(!continuous || uc, t,
              "continuity forces uniform continuity on finite carriers");
    run.check(!uc || continuous, t, "uniform continuity is continuous");

    // Composition.
    int nr = rng.uniform(1, clamp_size(cfg, 5));
    FiniteSpace mid_space(nr);
    UniformityBase mid = random_base(rng, mid_space);
    std::vector<int> h = random_map(rng, nt, nr);
    if (uc && uniformly_continuous(h, target, mid).ok) {
      std::vector<int> hf(ns);
      for (int x = 0; x < ns; ++x) hf[x] = h[f[x]];
      run.check(uniformly_continuous(hf, source, mid).ok, t,
                "uniform continuity composes");
    }
  }
  return run.result;
}

SuiteResult run_dimension_zero(const SweepConfig& cfg) {
  SuiteRun run;
  run.result.name = "dimension-zero";
  Rng rng(cfg.seed);
  for (int t = 0; t < cfg.instance_count; ++t) {
    int n = rng.uniform(1, clamp_size(cfg, 5));
    FiniteSpace space(n);
    bool from_ultrametric = rng.coin();
    UniformityBase base =
        from_ultrametric
            ? base_from_semimetric(random_ultrametric(rng, space))
            : random_base(rng, space);
    auto rep = dimension_zero_report(base);
    run.check(!rep.uniformly_zero_dimensional || rep.strongly_zero_dimensional,
              t, "uniformly small implies strongly small");
    run.check(!rep.strongly_zero_dimensional ||
                  rep.topologically_zero_dimensional,
              t, "strongly small implies topologically small");
    run.check(
        !rep.strongly_totally_separated || rep.totally_separated, t,
        "separation by self-separated sets implies separation by clopens");
    run.check(!rep.totally_separated || rep.hausdorff, t,
              "total separation implies point separation");
    if (from_ultrametric) {
      run.check(rep.uniformly_zero_dimensional &&
                    rep.strongly_totally_separated && rep.hausdorff,
                t, "ultrametric bases have every smallness property");
    }
    UniformityBase eq = equivalence_base(base);
    bool eq_ok = true;
    for (const auto& m : eq.members()) {
      if (!classify(m).is_equivalence()) eq_ok = false;
      if (!contains(base, m)) eq_ok = false;
    }
    run.check(eq_ok, t,
              "the equivalence base consists of equivalences from the "
              "uniformity");
  }
  return run.result;
}

SuiteResult run_padic(const SweepConfig&) {
  SuiteRun run;
  run.result.name = "padic";
  const unsigned long primes[] = {2, 3, 5, 7};
  auto samples = farey_samples(8);
  int t = 0;
  for (unsigned long p : primes) {
    AbsoluteValue av = AbsoluteValue::p_adic(p);
    auto report = validate_absolute_value(av, QParam::inf(), samples);
    run.check(report.ok, t, "max inequality and multiplicativity hold");
    for (const auto& x : samples)
      for (const auto& y : samples) {
        if (x.is_zero() || y.is_zero() || (x + y).is_zero()) continue;
        long vx = padic_valuation(p, x), vy = padic_valuation(p, y);
        long vs = padic_valuation(p, x + y);
        run.check(vs >= std::min(vx, vy), t,
                  "valuation of a sum is at least the minimum");
        if (vx != vy)
          run.check(vs == std::min(vx, vy), t,
                    "distinct valuations force equality");
      }
    run.check(is_archimedean(av).verdict ==
                  Archimedean::NonArchimedeanCertified,
              t, "the valuation kinds certify non-archimedean");
    ++t;
  }
  auto std_report = is_archimedean(AbsoluteValue::standard());
  run.check(std_report.verdict == Archimedean::Archimedean &&
                std_report.witness_n == 2,
            t, "the standard kind is archimedean with witness 2");
  return run.result;
}

SuiteResult run_group(const SweepConfig& cfg) {
  SuiteRun run;
  run.result.name = "group";
  std::vector<FiniteGroup> fleet;
  fleet.push_back(FiniteGroup::cyclic(6));
  fleet.push_back(FiniteGroup::cyclic(12));
  fleet.push_back(FiniteGroup::symmetric(3));
  fleet.push_back(FiniteGroup::dihedral(4));
  fleet.push_back(FiniteGroup::quaternion8());
  fleet.push_back(FiniteGroup::symmetric(4));
  Rng rng(cfg.seed);
  int per_group = std::max(1, cfg.instance_count / 6);
  int t = 0;
  for (const auto& g : fleet) {
    for (int i = 0; i < per_group; ++i, ++t) {
      ElementSet a = random_subset(rng, g.size());
      ElementSet b = random_subset(rng, g.size());

      // Subgroup criterion against a direct oracle.
      bool direct = a.test(g.identity());
      for (int x : a.indices()) {
        if (!a.test(g.inv(x))) direct = false;
        for (int y : a.indices())
          if (!a.test(g.mul(x, y))) direct = false;
      }
      direct = direct && !a.empty();
      run.check(subgroup_check(g, a).is_subgroup == direct, t,
                "the relation criterion matches the closure oracle");

      // Translation identities.
      Relation al = relation_left(g, a);
      Relation bl = relation_left(g, b);
      run.check(compose(al, bl) == relation_left(g, set_product(g, a, b)), t,
                "left relations compose through set products");
      run.check(inverse(al) == relation_left(g, set_inverse(g, a)), t,
                "the transpose of a left relation comes from the inverse set");
      int x = rng.uniform(0, g.size() - 1);
      ElementSet xa(g.size());
      for (int y : a.indices()) xa.set(g.mul(x, y));
      run.check(al.row(x) == xa, t, "rows of a left relation are translates");

      // Generated subgroup against a worklist oracle.
      auto gen = generated_subgroup(g, a);
      ElementSet oracle(g.size());
      oracle.set(g.identity());
      std::vector<int> work = {g.identity()};
      for (int v : a.indices()) {
        if (!oracle.test(v)) {
          oracle.set(v);
          work.push_back(v);
        }
        int iv = g.inv(v);
        if (!oracle.test(iv)) {
          oracle.set(iv);
          work.push_back(iv);
        }
      }
      while (!work.empty()) {
        int u = work.back();
        work.pop_back();
        for (int v : oracle.indices()) {
          for (int w : {g.mul(u, v), g.mul(v, u)}) {
            if (!oracle.test(w)) {
              oracle.set(w);
              work.push_back(w);
            }
          }
        }
      }
      run.check(gen.subgroup == oracle, t,
                "the doubling fixpoint matches the worklist closure");

      // Left core: the largest left-invariant relation under u.
      Relation u = random_reflexive_symmetric(rng, g.space(), 40);
      u |= relation_left(g, gen.subgroup);
      LeftCore core = left_core(g, u);
      run.check(core.core.is_subset_of(u), t, "the core sits inside");
      run.check(invariance(g, core.core).left, t, "the core is left-invariant");
      run.check(relation_left(g, gen.subgroup).is_subset_of(core.core), t,
                "left-invariant relations below u sit inside the core");
    }

    // Normality matches two-sided agreement, on the whole subgroup lattice
    // of small groups via sampling.
    for (int i = 0; i < per_group; ++i, ++t) {
      ElementSet w = random_subset(rng, g.size());
      ElementSet s = generated_subgroup(g, w).subgroup;
      auto rep = subgroup_check(g, s);
      run.check(rep.is_subgroup, t, "generated sets are subgroups");
      bool conj_stable = true;
      for (int c = 0; c < g.size(); ++c)
        if (!(conjugate_subset(g, c, s) == s)) conj_stable = false;
      run.check(rep.is_normal == conj_stable, t,
                "normality matches conjugation stability");
    }
  }
  return run.result;
}

using SuiteFn = SuiteResult (*)(const SweepConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"relation-algebra", run_relation_algebra},
      {"entourage", run_entourage},
      {"topology", run_topology},
      {"chain-duality", run_chain_duality},
      {"uniform-continuity", run_uniform_continuity},
      {"dimension-zero", run_dimension_zero},
      {"padic", run_padic},
      {"group", run_group},
  };
  return table;
}

}  // namespace

std::vector<std::string> known_suites() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : suite_table()) out.push_back(name);
  return out;
}

SweepReport run_sweep(const SweepConfig& config) {
  if (config.instance_count < 1)
    fail(ErrorCode::InvalidArgument, "need at least one instance");
  if (config.max_size < 1 || config.max_size > 6)
    fail(ErrorCode::InvalidArgument, "instance size bound must be 1 through 6");
  std::vector<std::string> wanted =
      config.suites.empty() ? known_suites() : config.suites;
  SweepReport report;
  report.config = config;
  for (const auto& name : wanted) {
    bool found = false;
    for (const auto& [known, fn] : suite_table())
      if (known == name) {
        report.suites.push_back(fn(config));
        found = true;
        break;
      }
    if (!found) fail(ErrorCode::UnknownSuite, "no suite named " + name);
  }
  return report;
}

nlohmann::json SweepReport::to_json() const {
  json suites_json = json::array();
  for (const auto& s : suites) {
    suites_json.push_back(json{{"name", s.name},
                               {"checks", s.checks},
                               {"failures", s.failures},
                               {"first_counterexample",
                                s.first_counterexample}});
  }
  return json{{"config",
               json{{"seed", config.seed},
                    {"instance_count", config.instance_count},
                    {"max_size", config.max_size},
                    {"suites", config.suites}}},
              {"suites", suites_json},
              {"all_passed", all_passed()}};
}

}  // namespace unilab
