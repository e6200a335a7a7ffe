#include "unilab/uniformity.hpp"

#include <algorithm>
#include <string>

namespace unilab {

namespace {

void check_same_carrier(const std::vector<Relation>& members) {
  for (const auto& m : members)
    if (m.size() != members.front().size())
      fail(ErrorCode::SpaceMismatch, "members over different carriers");
}

std::vector<Relation> dedup(std::vector<Relation> members) {
  std::vector<Relation> out;
  for (auto& m : members) {
    bool seen = false;
    for (const auto& o : out)
      if (o == m) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

BaseValidation validate_base(const std::vector<Relation>& members) {
  if (members.empty()) fail(ErrorCode::EmptyList, "empty base");
  check_same_carrier(members);
  BaseValidation out;
  int n = static_cast<int>(members.size());
  Relation diag = Relation::diagonal(members.front().space());
  for (int i = 0; i < n; ++i) {
    const Relation& u = members[i];
    if (!diag.is_subset_of(u))
      out.failures.push_back(
          {BaseAxiomFailure::Axiom::Reflexive, i, -1});
    Relation inv = inverse(u);
    bool has_sym = false;
    for (const auto& v : members)
      if (v.is_subset_of(inv)) {
        has_sym = true;
        break;
      }
    if (!has_sym)
      out.failures.push_back({BaseAxiomFailure::Axiom::Symmetric, i, -1});
    bool has_root = false;
    for (const auto& v : members)
      if (compose(v, v).is_subset_of(u)) {
        has_root = true;
        break;
      }
    if (!has_root)
      out.failures.push_back({BaseAxiomFailure::Axiom::SquareRoot, i, -1});
    for (int j = i; j < n; ++j) {
      Relation meet = u & members[j];
      bool has_member = false;
      for (const auto& w : members)
        if (w.is_subset_of(meet)) {
          has_member = true;
          break;
        }
      if (!has_member)
        out.failures.push_back(
            {BaseAxiomFailure::Axiom::Intersection, i, j});
    }
  }
  return out;
}

namespace {

const char* axiom_name(BaseAxiomFailure::Axiom a) {
  switch (a) {
    case BaseAxiomFailure::Axiom::Reflexive: return "reflexive";
    case BaseAxiomFailure::Axiom::Symmetric: return "symmetric";
    case BaseAxiomFailure::Axiom::SquareRoot: return "square-root";
    case BaseAxiomFailure::Axiom::Intersection: return "intersection";
  }
  return "?";
}

}  // namespace

UniformityBase::UniformityBase(std::vector<Relation> members)
    : space_(members.empty()
                 ? throw UnilabError(ErrorCode::EmptyList, "empty base")
                 : members.front().space()) {
  members_ = dedup(std::move(members));
  auto report = validate_base(members_);
  if (!report.ok()) {
    const auto& f = report.failures.front();
    std::string msg = std::string("base fails the ") + axiom_name(f.axiom) +
                      " axiom at member " + std::to_string(f.first);
    if (f.second >= 0) msg += " with member " + std::to_string(f.second);
    fail(ErrorCode::InvalidBase, msg);
  }
}

UniformityBase base_from_subbase(const std::vector<Relation>& members) {
  if (members.empty()) fail(ErrorCode::EmptyList, "empty subbase");
  check_same_carrier(members);
  std::vector<Relation> closed = dedup(members);
  // Close under pairwise intersection.
  for (size_t i = 0; i < closed.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      Relation meet = closed[i] & closed[j];
      bool seen = false;
      for (const auto& o : closed)
        if (o == meet) {
          seen = true;
          break;
        }
      if (!seen) closed.push_back(std::move(meet));
    }
  }
  auto report = validate_base(closed);
  if (!report.ok()) {
    const auto& f = report.failures.front();
    fail(ErrorCode::InvalidSubbase,
         std::string("intersection closure fails the ") + axiom_name(f.axiom) +
             " axiom at member " + std::to_string(f.first));
  }
  return UniformityBase(std::move(closed));
}

UniformityBase base_from_semimetric(const SemiMetric& d) {
  std::vector<Relation> members;
  for (const auto& r : d.canonical_radii())
    members.push_back(entourage(d, r));
  return UniformityBase(std::move(members));
}

bool contains(const UniformityBase& base, const Relation& u) {
  if (u.size() != base.size())
    fail(ErrorCode::SpaceMismatch, "relation over a different carrier");
  for (const auto& m : base.members())
    if (m.is_subset_of(u)) return true;
  return false;
}

bool Topology::is_open(uint32_t mask) const {
  return std::binary_search(opens_.begin(), opens_.end(), mask);
}

std::vector<ElementSet> Topology::opens() const {
  std::vector<ElementSet> out;
  out.reserve(opens_.size());
  for (uint32_t m : opens_)
    out.push_back(ElementSet::from_mask32(space_.size, m));
  return out;
}

bool is_open(const UniformityBase& base, const ElementSet& a) {
  if (a.carrier_size() != base.size())
    fail(ErrorCode::SpaceMismatch, "subset over a different carrier");
  for (int x = 0; x < base.size(); ++x) {
    if (!a.test(x)) continue;
    bool ok = false;
    for (const auto& u : base.members())
      if (u.row(x).is_subset_of(a)) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

Topology topology(const UniformityBase& base, int max_size) {
  int n = base.size();
  int cap = std::min(max_size, 20);
  if (n > cap)
    fail(ErrorCode::SpaceTooLargeForEnumeration,
         "carrier of size " + std::to_string(n) +
             " exceeds the enumeration cap " + std::to_string(cap));
  // Row masks per element per member.
  std::vector<std::vector<uint32_t>> rows(base.members().size());
  for (size_t m = 0; m < base.members().size(); ++m) {
    rows[m].resize(n);
    for (int x = 0; x < n; ++x)
      rows[m][x] = base.members()[m].row(x).mask32();
  }
  std::vector<uint32_t> opens;
  uint32_t full = (n == 32) ? ~uint32_t(0) : ((uint32_t(1) << n) - 1);
  for (uint32_t a = 0;; ++a) {
    bool open = true;
    uint32_t rest = a;
    while (rest && open) {
      int x = __builtin_ctz(rest);
      rest &= rest - 1;
      bool ok = false;
      for (size_t m = 0; m < rows.size(); ++m)
        if ((rows[m][x] & ~a) == 0) {
          ok = true;
          break;
        }
      if (!ok) open = false;
    }
    if (open) opens.push_back(a);
    if (a == full) break;
  }
  return Topology(base.space(), std::move(opens));
}

ElementSet interior(const UniformityBase& base, const ElementSet& a) {
  if (a.carrier_size() != base.size())
    fail(ErrorCode::SpaceMismatch, "subset over a different carrier");
  ElementSet out(base.size());
  for (int x = 0; x < base.size(); ++x) {
    if (!a.test(x)) continue;
    for (const auto& u : base.members())
      if (u.row(x).is_subset_of(a)) {
        out.set(x);
        break;
      }
  }
  return out;
}

ElementSet closure(const UniformityBase& base, const ElementSet& a) {
  if (a.carrier_size() != base.size())
    fail(ErrorCode::SpaceMismatch, "subset over a different carrier");
  ElementSet out = ElementSet::all(base.size());
  for (const auto& v : base.members()) out &= image(v, a);
  return out;
}

Relation product_closure(const UniformityBase& base, const Relation& e) {
  if (e.size() != base.size())
    fail(ErrorCode::SpaceMismatch, "relation over a different carrier");
  Relation out = Relation::full(base.space());
  for (const auto& v1 : base.members()) {
    Relation left = compose(v1, e);
    for (const auto& v2 : base.members()) out &= compose(left, v2);
  }
  return out;
}

Relation uniform_neighborhood(const UniformityBase& base, const ElementSet& k,
                              const ElementSet& w) {
  if (k.carrier_size() != base.size() || w.carrier_size() != base.size())
    fail(ErrorCode::SpaceMismatch, "subset over a different carrier");
  if (!is_open(base, w))
    fail(ErrorCode::NotOpen, "the enclosing set is not open");
  if (!k.is_subset_of(w))
    fail(ErrorCode::NotContained, "the set is not inside the open set");
  for (const auto& v : base.members())
    if (image(v, k).is_subset_of(w)) return v;
  // Unreachable: a common refinement of the per-point members exists in the
  // base by the intersection axiom.
  fail(ErrorCode::InvalidArgument, "no member fits");
}

namespace {

void check_map(const std::vector<int>& f, int source_size, int target_size) {
  if (static_cast<int>(f.size()) != source_size)
    fail(ErrorCode::MapOutOfRange, "map length does not match source carrier");
  for (int v : f)
    if (v < 0 || v >= target_size)
      fail(ErrorCode::MapOutOfRange,
           "map value " + std::to_string(v) + " outside target carrier");
}

}  // namespace

Relation preimage_relation(const std::vector<int>& f,
                           const FiniteSpace& source, const Relation& v) {
  check_map(f, source.size, v.size());
  Relation p(source);
  for (int x = 0; x < source.size; ++x)
    for (int y = 0; y < source.size; ++y)
      if (v.test(f[x], f[y])) p.set(x, y);
  return p;
}

UniformContinuity uniformly_continuous(const std::vector<int>& f,
                                       const UniformityBase& source,
                                       const UniformityBase& target) {
  check_map(f, source.size(), target.size());
  UniformContinuity out;
  for (size_t idx = 0; idx < target.members().size(); ++idx) {
    Relation p = preimage_relation(f, source.space(), target.members()[idx]);
    if (!contains(source, p)) {
      out.ok = false;
      out.violating_member = static_cast<int>(idx);
      return out;
    }
  }
  return out;
}

UniformContinuity uniformly_continuous_along(const std::vector<int>& f,
                                             const UniformityBase& source,
                                             const UniformityBase& target,
                                             const ElementSet& e) {
  check_map(f, source.size(), target.size());
  if (e.carrier_size() != source.size())
    fail(ErrorCode::SpaceMismatch, "subset over a different carrier");
  UniformContinuity out;
  for (size_t idx = 0; idx < target.members().size(); ++idx) {
    Relation p = preimage_relation(f, source.space(), target.members()[idx]);
    bool found = false;
    for (const auto& u : source.members()) {
      bool fits = true;
      for (int x = 0; x < source.size() && fits; ++x) {
        if (!e.test(x)) continue;
        if (!u.row(x).is_subset_of(p.row(x))) fits = false;
      }
      if (fits) {
        found = true;
        break;
      }
    }
    if (!found) {
      out.ok = false;
      out.violating_member = static_cast<int>(idx);
      return out;
    }
  }
  return out;
}

UniformityBase induced(const UniformityBase& base, const ElementSet& y) {
  if (y.carrier_size() != base.size())
    fail(ErrorCode::SpaceMismatch, "subset over a different carrier");
  if (y.empty()) fail(ErrorCode::EmptySubset, "restriction to the empty set");
  auto keep = y.indices();
  int m = static_cast<int>(keep.size());
  FiniteSpace sub = [&]() {
    if (base.space().labels) {
      std::vector<std::string> names;
      for (int i : keep) names.push_back((*base.space().labels)[i]);
      return FiniteSpace(m, std::move(names));
    }
    return FiniteSpace(m);
  }();
  std::vector<Relation> members;
  for (const auto& u : base.members()) {
    Relation r(sub);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (u.test(keep[a], keep[b])) r.set(a, b);
    members.push_back(std::move(r));
  }
  return UniformityBase(std::move(members));
}

UniformityBase pullback_base(const UniformityBase& target,
                             const std::vector<int>& f,
                             const FiniteSpace& source) {
  std::vector<Relation> members;
  for (const auto& v : target.members())
    members.push_back(preimage_relation(f, source, v));
  return UniformityBase(std::move(members));
}

UniformityBase product(const UniformityBase& bx, const UniformityBase& by) {
  long total = static_cast<long>(bx.size()) * by.size();
  if (total > kMaxCarrierSize)
    fail(ErrorCode::ProductTooLarge,
         "product carrier of size " + std::to_string(total) +
             " exceeds the bound " + std::to_string(kMaxCarrierSize));
  int ny = by.size();
  FiniteSpace space = [&]() {
    if (bx.space().labels && by.space().labels) {
      std::vector<std::string> names;
      for (const auto& a : *bx.space().labels)
        for (const auto& b : *by.space().labels)
          names.push_back("(" + a + "," + b + ")");
      return FiniteSpace(static_cast<int>(total), std::move(names));
    }
    return FiniteSpace(static_cast<int>(total));
  }();
  std::vector<Relation> members;
  for (const auto& u : bx.members())
    for (const auto& v : by.members()) {
      Relation w(space);
      for (int i1 = 0; i1 < bx.size(); ++i1)
        for (int i2 = 0; i2 < bx.size(); ++i2) {
          if (!u.test(i1, i2)) continue;
          for (int j1 = 0; j1 < ny; ++j1)
            for (int j2 = 0; j2 < ny; ++j2)
              if (v.test(j1, j2)) w.set(i1 * ny + j1, i2 * ny + j2);
        }
      members.push_back(std::move(w));
    }
  return UniformityBase(std::move(members));
}

bool compatible(const UniformityBase& base, const SemiMetric& d) {
  if (d.size() != base.size())
    fail(ErrorCode::SpaceMismatch, "matrix over a different carrier");
  auto radii = d.canonical_radii();
  for (const auto& r : radii)
    if (!contains(base, entourage(d, r))) return false;
  // Entourages are nested in the radius, so the smallest one suffices as a
  // witness under every member.
  Relation smallest = entourage(d, radii.front());
  for (const auto& u : base.members())
    if (!smallest.is_subset_of(u)) return false;
  return true;
}

TotalBoundedness totally_bounded(const UniformityBase& base,
                                 const ElementSet& e) {
  int n = base.size();
  if (e.carrier_size() != n)
    fail(ErrorCode::SpaceMismatch, "subset over a different carrier");
  if (n > 16)
    fail(ErrorCode::SpaceTooLargeForEnumeration,
         "cover search needs a carrier of size <= 16");
  TotalBoundedness out;
  uint32_t target = e.mask32();
  for (size_t idx = 0; idx < base.members().size(); ++idx) {
    const Relation& v = base.members()[idx];
    std::vector<uint32_t> rows(n);
    for (int x = 0; x < n; ++x) rows[x] = v.row(x).mask32();

    // Least number of neighborhoods V[x] covering e, by subset size.
    int best = -1;
    for (int m = 0; m <= n && best < 0; ++m) {
      if (m == 0) {
        if (target == 0) best = 0;
        continue;
      }
      // All center sets of size m, Gosper's hack.
      uint32_t centers = (uint32_t(1) << m) - 1;
      uint32_t limit = uint32_t(1) << n;
      while (centers < limit) {
        uint32_t covered = 0;
        uint32_t rest = centers;
        while (rest) {
          int x = __builtin_ctz(rest);
          rest &= rest - 1;
          covered |= rows[x];
        }
        if ((target & ~covered) == 0) {
          best = m;
          break;
        }
        uint32_t c = centers & -centers;
        uint32_t r = centers + c;
        centers = (((r ^ centers) >> 2) / c) | r;
      }
    }
    out.minimal_cover_sizes.push_back(best);

    // Greedy cover of e by V-small blocks (B x B inside V).
    SmallCover cover;
    cover.member = static_cast<int>(idx);
    ElementSet remaining = e;
    while (!remaining.empty()) {
      int x = remaining.first();
      ElementSet block(n);
      block.set(x);
      for (int y : remaining.indices()) {
        if (y == x) continue;
        bool fits = v.test(y, y);
        for (int z : block.indices()) {
          if (!v.test(z, y) || !v.test(y, z)) {
            fits = false;
            break;
          }
        }
        if (fits) block.set(y);
      }
      remaining = remaining.minus(block);
      cover.blocks.push_back(std::move(block));
    }
    out.small_covers.push_back(std::move(cover));
  }
  return out;
}

UniformityBase equivalence_base(const UniformityBase& base) {
  std::vector<Relation> members;
  for (const auto& u : base.members())
    members.push_back(equivalence_closure(symmetrize(u)));
  return UniformityBase(std::move(members));
}

}  // namespace unilab
