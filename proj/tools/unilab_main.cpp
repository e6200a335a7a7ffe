// unilab: batch front end for the unilab-core library. Loads JSON fixtures,
// dispatches to library operations, and emits deterministic JSON reports.
//
// Exit codes: 0 when the computation succeeds and every checked property
// holds; 1 when a checked property is falsified or the input breaks a
// mathematical axiom (the report carries a witness); 2 on malformed input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "unilab/connectivity.hpp"
#include "unilab/group.hpp"
#include "unilab/json_io.hpp"
#include "unilab/scalars.hpp"
#include "unilab/sweep.hpp"

namespace {

using nlohmann::json;
using namespace unilab;

// Axiom failures on well-formed input exit 1 with a report; everything else
// (parse errors, range errors, unsupported sizes) counts as malformed input.
int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidSemiMetric:
    case ErrorCode::InvalidBase:
    case ErrorCode::InvalidSubbase:
    case ErrorCode::NotReflexive:
    case ErrorCode::NotReflexiveSymmetric:
    case ErrorCode::NotEquivalence:
    case ErrorCode::InvalidPartition:
    case ErrorCode::InvalidGroup:
    case ErrorCode::NotInvariant:
    case ErrorCode::NotSubgroup:
    case ErrorCode::InvalidFilterBase:
    case ErrorCode::NoSquareRoot:
    case ErrorCode::NotConjugationCompatible:
    case ErrorCode::InexactPower:
      return 1;
    default:
      return 2;
  }
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, path + ": " + e.what());
  }
}

void emit(const json& report, bool pretty) {
  std::cout << (pretty ? report.dump(2) : report.dump()) << "\n";
}

// Enumeration cap for topology materialization, shared by the verbs that
// list open sets. Overridable through UNILAB_MAX_SIZE.
int enumeration_cap() {
  const char* raw = std::getenv("UNILAB_MAX_SIZE");
  if (raw == nullptr || *raw == '\0') return 16;
  std::string text(raw);
  size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || value < 1)
    fail(ErrorCode::ParseError,
         "UNILAB_MAX_SIZE must be a positive integer, got \"" + text + "\"");
  return value;
}

json subset_report(const ElementSet& a) { return to_json(a); }

json split_report(const std::pair<ElementSet, ElementSet>& split) {
  return json::array({to_json(split.first), to_json(split.second)});
}

const char* axiom_name(BaseAxiomFailure::Axiom axiom) {
  switch (axiom) {
    case BaseAxiomFailure::Axiom::Reflexive: return "reflexive";
    case BaseAxiomFailure::Axiom::Symmetric: return "symmetric";
    case BaseAxiomFailure::Axiom::SquareRoot: return "square-root";
    case BaseAxiomFailure::Axiom::Intersection: return "intersection";
  }
  return "unknown";
}

// ---------------------------------------------------------------- validate

int run_validate_metric(const std::string& path, bool pretty) {
  json j = load_json(path);
  if (!j.is_object() || !j.contains("values") || !j["values"].is_array())
    fail(ErrorCode::ParseError, path + ": expected {\"values\": [[...]]}");

  std::vector<std::vector<Rational>> values;
  for (const json& row : j["values"]) {
    if (!row.is_array())
      fail(ErrorCode::ParseError, path + ": rows must be arrays");
    std::vector<Rational> out;
    for (const json& cell : row) out.push_back(rational_from_json(cell));
    values.push_back(std::move(out));
  }

  QParam level = QParam::inf();
  if (j.contains("level")) {
    if (!j["level"].is_string())
      fail(ErrorCode::ParseError, path + ": level must be a string");
    level = QParam::parse(j["level"].get<std::string>());
  }

  MetricValidation report = validate_semimetric(values, level);
  if (j.contains("size") &&
      (!j["size"].is_number_integer() ||
       j["size"].get<long>() != static_cast<long>(values.size()))) {
    report.shape_ok = false;
    report.shape_issues.push_back("size field does not match row count");
  }

  json out;
  out["valid"] = report.valid();
  out["is_metric"] = report.is_metric;
  out["level"] = level.str();
  if (!report.shape_issues.empty()) out["shape_issues"] = report.shape_issues;
  if (!report.violations.empty()) {
    json vs = json::array();
    for (const TriangleViolation& v : report.violations)
      vs.push_back(json::array({v.x, v.y, v.z}));
    out["violations"] = vs;
  }
  emit(out, pretty);
  return report.valid() ? 0 : 1;
}

int run_validate_base(const std::string& path, bool pretty) {
  json j = load_json(path);
  if (!j.is_object() || !j.contains("size") || !j.contains("relations") ||
      !j["size"].is_number_integer() || !j["relations"].is_array())
    fail(ErrorCode::ParseError,
         path + ": expected {\"size\": n, \"relations\": [...]}");
  FiniteSpace space(j["size"].get<int>());
  if (j["relations"].empty())
    fail(ErrorCode::ParseError, path + ": base family is empty");

  std::vector<Relation> members;
  for (const json& rel : j["relations"]) {
    if (!rel.is_array())
      fail(ErrorCode::ParseError, path + ": members must be pair lists");
    std::vector<std::pair<int, int>> pairs;
    for (const json& p : rel) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
          !p[1].is_number_integer())
        fail(ErrorCode::ParseError, path + ": pairs must be [i, j]");
      pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
    members.push_back(Relation::from_pairs(space, pairs));
  }

  BaseValidation report = validate_base(members);
  json out;
  out["valid"] = report.ok();
  out["member_count"] = static_cast<int>(members.size());
  if (!report.ok()) {
    json fs = json::array();
    for (const BaseAxiomFailure& f : report.failures) {
      json entry;
      entry["axiom"] = axiom_name(f.axiom);
      entry["member"] = f.first;
      if (f.second >= 0) entry["partner"] = f.second;
      fs.push_back(entry);
    }
    out["failures"] = fs;
  }
  emit(out, pretty);
  return report.ok() ? 0 : 1;
}

int run_validate_group(const std::string& path, bool pretty) {
  json j = load_json(path);
  try {
    FiniteGroup g = group_from_json(j);
    json out;
    out["valid"] = true;
    out["order"] = g.size();
    out["identity"] = g.identity();
    emit(out, pretty);
    return 0;
  } catch (const UnilabError& e) {
    if (e.code() != ErrorCode::InvalidGroup) throw;
    json out;
    out["valid"] = false;
    out["reason"] = e.what();
    emit(out, pretty);
    return 1;
  }
}

// -------------------------------------------------------------- other verbs

int run_topology(const std::string& base_path, int cap, bool pretty) {
  UniformityBase base = base_from_json(load_json(base_path));
  Topology t = topology(base, cap);
  json out = to_json(t);
  out["open_count"] = static_cast<int>(t.open_masks().size());
  emit(out, pretty);
  return 0;
}

int run_closure(const std::string& base_path, const std::string& set_csv,
                bool pretty) {
  UniformityBase base = base_from_json(load_json(base_path));
  ElementSet a =
      ElementSet::from_indices(base.size(), parse_int_list(set_csv));
  ElementSet cl = closure(base, a);
  json out;
  out["set"] = subset_report(a);
  out["closure"] = subset_report(cl);
  out["interior"] = subset_report(interior(base, a));
  out["is_open"] = is_open(base, a);
  out["is_closed"] = cl == a;
  emit(out, pretty);
  return 0;
}

int run_chain_relation(const std::string& rel_path, int from, int to,
                       bool pretty) {
  Relation u = relation_from_json(load_json(rel_path));
  u.check_index(from);
  u.check_index(to);
  std::optional<std::vector<int>> chain = find_chain(from, to, u);
  json out;
  out["from"] = from;
  out["to"] = to;
  out["chain_exists"] = chain.has_value();
  out["chain"] = chain ? json(*chain) : json(nullptr);
  emit(out, pretty);
  return 0;
}

int run_chain_base(const std::string& base_path, const std::string& set_csv,
                   bool pretty) {
  UniformityBase base = base_from_json(load_json(base_path));
  ElementSet e =
      ElementSet::from_indices(base.size(), parse_int_list(set_csv));
  if (e.empty()) fail(ErrorCode::EmptySubset, "set must be nonempty");
  ChainConnectivity report = is_chain_connected(e, base);
  json out;
  out["set"] = subset_report(e);
  out["connected"] = report.connected;
  if (!report.connected) {
    out["violating_member"] = *report.violating_member;
    out["split"] = split_report(*report.split);
  }
  emit(out, pretty);
  return report.connected ? 0 : 1;
}

int run_dim0(const std::string& base_path, int cap, bool pretty) {
  UniformityBase base = base_from_json(load_json(base_path));
  DimensionZeroReport r = dimension_zero_report(base, cap);
  json out;
  out["uniformly_zero_dimensional"] = r.uniformly_zero_dimensional;
  out["strongly_zero_dimensional"] = r.strongly_zero_dimensional;
  out["topologically_zero_dimensional"] = r.topologically_zero_dimensional;
  out["strongly_totally_separated"] = r.strongly_totally_separated;
  out["totally_separated"] = r.totally_separated;
  out["hausdorff"] = r.hausdorff;
  emit(out, pretty);
  return 0;
}

int run_ucont(const std::string& map_csv, const std::string& source_path,
              const std::string& target_path, const std::string& along_csv,
              bool along_given, bool pretty) {
  UniformityBase source = base_from_json(load_json(source_path));
  UniformityBase target = base_from_json(load_json(target_path));
  std::vector<int> f = parse_int_list(map_csv);
  UniformContinuity r;
  if (along_given) {
    ElementSet e =
        ElementSet::from_indices(source.size(), parse_int_list(along_csv));
    r = uniformly_continuous_along(f, source, target, e);
  } else {
    r = uniformly_continuous(f, source, target);
  }
  json out;
  out["uniformly_continuous"] = r.ok;
  if (!r.ok) out["violating_member"] = *r.violating_member;
  emit(out, pretty);
  return r.ok ? 0 : 1;
}

int run_product(const std::string& left_path, const std::string& right_path,
                bool pretty) {
  UniformityBase left = base_from_json(load_json(left_path));
  UniformityBase right = base_from_json(load_json(right_path));
  UniformityBase prod = product(left, right);
  json out = to_json(prod);
  out["left_size"] = left.size();
  out["right_size"] = right.size();
  emit(out, pretty);
  return 0;
}

int run_group_analyze(const std::string& group_path,
                      const std::string& subset_csv, bool pretty) {
  FiniteGroup g = group_from_json(load_json(group_path));
  ElementSet a =
      ElementSet::from_indices(g.size(), parse_int_list(subset_csv));
  SubgroupReport sub = subgroup_check(g, a);
  GeneratedSubgroup gen = generated_subgroup(g, a);
  json out;
  out["subset"] = subset_report(a);
  out["is_subgroup"] = sub.is_subgroup;
  out["is_normal"] = sub.is_normal;
  out["generated"] = subset_report(gen.subgroup);
  out["generated_needed_symmetrizing"] = gen.input_symmetrized;
  if (!a.empty()) {
    InvarianceReport inv = invariance(g, relation_left(g, a));
    json invariance_out;
    invariance_out["left"] = inv.left;
    invariance_out["right"] = inv.right;
    invariance_out["conjugation"] = inv.conjugation;
    out["left_relation_invariance"] = invariance_out;
  }
  if (sub.is_subgroup) {
    json cosets = json::array();
    for (const ElementSet& c : left_cosets(g, a)) cosets.push_back(to_json(c));
    out["left_cosets"] = cosets;
  }
  emit(out, pretty);
  return 0;
}

int run_group_tau(const std::string& group_path,
                  const std::string& subgroups_path, int cap, bool pretty) {
  FiniteGroup g = group_from_json(load_json(group_path));
  json fj = load_json(subgroups_path);
  if (!fj.is_object() || !fj.contains("subgroups") ||
      !fj["subgroups"].is_array() || fj["subgroups"].empty())
    fail(ErrorCode::ParseError,
         subgroups_path + ": expected {\"subgroups\": [[...], ...]}");
  std::vector<ElementSet> family;
  for (const json& s : fj["subgroups"])
    family.push_back(subset_from_json(s, g.size()));

  Topology t = subgroup_topology(g, family, cap);
  ElementSet meet = ElementSet::all(g.size());
  for (const ElementSet& a : family) meet &= a;

  json out = to_json(t);
  out["open_count"] = static_cast<int>(t.open_masks().size());
  out["hausdorff"] = subgroups_hausdorff(g, family);
  out["intersection"] = subset_report(meet);
  emit(out, pretty);
  return 0;
}

int run_padic(unsigned long p, const std::string& x_text, bool pretty) {
  Rational x = Rational::parse(x_text);
  if (x.sign() == 0)
    fail(ErrorCode::ZeroInput, "the zero rational has no valuation");
  long v = padic_valuation(p, x);
  PowerValue abs = abs_eval(AbsoluteValue::p_adic(p), x);
  json out;
  out["valuation"] = v;
  out["abs"] = abs.exact_value().str();
  emit(out, pretty);
  return 0;
}

int run_absval_check(const std::string& kind, unsigned long p,
                     const std::string& power_text,
                     const std::string& level_text, long height,
                     const std::string& samples_csv, bool samples_given,
                     bool pretty) {
  Rational power = Rational::parse(power_text);
  AbsoluteValue av = [&] {
    if (kind == "trivial") return AbsoluteValue::trivial(power);
    if (kind == "padic") return AbsoluteValue::p_adic(p, power);
    if (kind == "standard") return AbsoluteValue::standard(power);
    fail(ErrorCode::ParseError,
         "kind must be trivial, padic or standard, got \"" + kind + "\"");
  }();
  QParam level = QParam::parse(level_text);

  std::vector<Rational> samples;
  if (samples_given) {
    std::stringstream ss(samples_csv);
    std::string item;
    while (std::getline(ss, item, ','))
      samples.push_back(Rational::parse(item));
  } else {
    samples = farey_samples(height);
  }

  AbsValidation report = validate_absolute_value(av, level, samples);
  ArchimedeanReport arch = is_archimedean(av);
  json out;
  out["ok"] = report.ok;
  out["kind"] = kind;
  out["level"] = level.str();
  out["sample_count"] = static_cast<int>(samples.size());
  out["archimedean"] =
      arch.verdict == Archimedean::Archimedean
          ? "archimedean"
          : (arch.verdict == Archimedean::NonArchimedeanCertified
                 ? "non-archimedean"
                 : "undetermined");
  if (arch.witness_n) out["archimedean_witness"] = *arch.witness_n;
  if (!report.issues.empty()) out["issues"] = report.issues;
  if (report.witness)
    out["witness"] = json::array(
        {report.witness->first.str(), report.witness->second.str()});
  emit(out, pretty);
  return report.ok ? 0 : 1;
}

int run_qchain(const std::string& from_text, const std::string& to_text,
               const std::string& r_text, bool pretty) {
  Rational a = Rational::parse(from_text);
  Rational b = Rational::parse(to_text);
  Rational r = Rational::parse(r_text);
  std::vector<Rational> points = rational_chain(a, b, r);
  json out;
  out["count"] = static_cast<long>(points.size());
  json ps = json::array();
  for (const Rational& t : points) ps.push_back(t.str());
  out["points"] = ps;
  emit(out, pretty);
  return 0;
}

int run_sweep(uint64_t seed, int instances, int max_size,
              const std::vector<std::string>& suites, bool pretty) {
  SweepConfig config;
  config.seed = seed;
  config.instance_count = instances;
  config.max_size = max_size;
  config.suites = suites;
  SweepReport report = run_sweep(config);
  emit(report.to_json(), pretty);
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact experiments on finite uniform spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "unilab 0.1.0");
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent the JSON report");
  app.footer(
      "Enumeration of open sets is capped by UNILAB_MAX_SIZE (default 16).\n"
      "Exit codes: 0 all checked properties hold, 1 a property is falsified\n"
      "(witness in the report), 2 malformed input.");

  std::string metric_path, base_path, group_path;
  auto* validate = app.add_subcommand(
      "validate", "check a semimetric, base or group against its axioms");
  auto* vm = validate->add_option("--metric", metric_path,
                                  "distance matrix JSON file");
  auto* vb = validate->add_option("--base", base_path,
                                  "entourage family JSON file");
  auto* vg = validate->add_option("--group", group_path,
                                  "Cayley table JSON file");
  vm->excludes(vb)->excludes(vg);
  vb->excludes(vg);

  std::string top_base;
  auto* top = app.add_subcommand("topology", "list the open sets of a base");
  top->add_option("--base", top_base, "entourage family JSON file")
      ->required();

  std::string cl_base, cl_set;
  auto* cl = app.add_subcommand(
      "closure", "closure and interior of a subset under a base");
  cl->add_option("--base", cl_base, "entourage family JSON file")->required();
  cl->add_option("--set", cl_set, "comma separated element indices")
      ->required();

  std::string ch_rel, ch_base, ch_set;
  int ch_from = 0, ch_to = 0;
  auto* ch = app.add_subcommand(
      "chain", "chains through a relation, or chain connectivity of a set");
  auto* ch_rel_opt =
      ch->add_option("--relation", ch_rel, "relation JSON file");
  auto* ch_from_opt = ch->add_option("--from", ch_from, "start element");
  auto* ch_to_opt = ch->add_option("--to", ch_to, "end element");
  auto* ch_base_opt = ch->add_option("--base", ch_base,
                                     "entourage family JSON file");
  auto* ch_set_opt =
      ch->add_option("--set", ch_set, "comma separated element indices");
  ch_rel_opt->needs(ch_from_opt)->needs(ch_to_opt)->excludes(ch_base_opt);
  ch_base_opt->needs(ch_set_opt)->excludes(ch_from_opt)->excludes(ch_to_opt);

  std::string d0_base;
  auto* d0 = app.add_subcommand(
      "dim0", "zero-dimensionality and separation report for a base");
  d0->add_option("--base", d0_base, "entourage family JSON file")->required();

  std::string uc_map, uc_source, uc_target, uc_along;
  auto* uc = app.add_subcommand(
      "ucont", "uniform continuity of a map between two bases");
  uc->add_option("--map", uc_map, "image indices, one per source element")
      ->required();
  uc->add_option("--source", uc_source, "source base JSON file")->required();
  uc->add_option("--target", uc_target, "target base JSON file")->required();
  auto* uc_along_opt = uc->add_option(
      "--along", uc_along, "restrict the demand to pairs starting in this set");

  std::string pr_left, pr_right;
  auto* pr = app.add_subcommand("product", "product base of two bases");
  pr->add_option("--left", pr_left, "left base JSON file")->required();
  pr->add_option("--right", pr_right, "right base JSON file")->required();

  auto* gr = app.add_subcommand("group", "finite group operations");
  gr->require_subcommand(1);
  std::string ga_group, ga_subset;
  auto* ga = gr->add_subcommand(
      "analyze", "subgroup, normality and invariance report for a subset");
  ga->add_option("--group", ga_group, "Cayley table JSON file")->required();
  ga->add_option("--subset", ga_subset, "comma separated element indices")
      ->required();
  std::string gt_group, gt_subgroups;
  auto* gt = gr->add_subcommand(
      "tau", "topology generated by a family of subgroups");
  gt->add_option("--group", gt_group, "Cayley table JSON file")->required();
  gt->add_option("--subgroups", gt_subgroups,
                 "JSON file {\"subgroups\": [[...], ...]}")
      ->required();

  unsigned long pa_p = 2;
  std::string pa_x;
  auto* pa = app.add_subcommand(
      "padic", "p-adic valuation and absolute value of a rational");
  pa->add_option("--p", pa_p, "prime")->required();
  pa->add_option("--x", pa_x, "rational, e.g. 12/1")->required();

  std::string av_kind = "padic", av_power = "1", av_level = "inf",
              av_samples;
  unsigned long av_p = 2;
  long av_height = 10;
  auto* av = app.add_subcommand(
      "absval-check", "validate an absolute value on a sample set");
  av->add_option("--kind", av_kind, "trivial, padic or standard");
  av->add_option("--p", av_p, "prime, for the padic kind");
  av->add_option("--power", av_power, "positive rational exponent");
  av->add_option("--level", av_level, "inf or q:<rational>");
  av->add_option("--height", av_height,
                 "sample all reduced fractions up to this height");
  auto* av_samples_opt = av->add_option(
      "--samples", av_samples, "comma separated rationals instead of a height");

  std::string qc_from, qc_to, qc_r;
  auto* qc = app.add_subcommand(
      "qchain", "evenly spaced rational chain with gaps below r");
  qc->add_option("--from", qc_from, "start rational")->required();
  qc->add_option("--to", qc_to, "end rational")->required();
  qc->add_option("--r", qc_r, "positive rational gap bound")->required();

  uint64_t sw_seed = 0;
  int sw_instances = 100, sw_max_size = 5;
  std::vector<std::string> sw_suites;
  auto* sw = app.add_subcommand(
      "sweep", "run randomized property suites against exhaustive oracles");
  sw->add_option("--seed", sw_seed, "64-bit seed");
  sw->add_option("--instances", sw_instances, "instances per suite");
  sw->add_option("--max-size", sw_max_size, "carrier bound, at most 6");
  sw->add_option("--suites", sw_suites, "suite names, default all")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    int cap = enumeration_cap();
    if (validate->parsed()) {
      if (*vm) return run_validate_metric(metric_path, pretty);
      if (*vb) return run_validate_base(base_path, pretty);
      if (*vg) return run_validate_group(group_path, pretty);
      fail(ErrorCode::ParseError,
           "validate needs one of --metric, --base, --group");
    }
    if (top->parsed()) return run_topology(top_base, cap, pretty);
    if (cl->parsed()) return run_closure(cl_base, cl_set, pretty);
    if (ch->parsed()) {
      if (*ch_rel_opt)
        return run_chain_relation(ch_rel, ch_from, ch_to, pretty);
      if (*ch_base_opt) return run_chain_base(ch_base, ch_set, pretty);
      fail(ErrorCode::ParseError,
           "chain needs --relation with --from/--to, or --base with --set");
    }
    if (d0->parsed()) return run_dim0(d0_base, cap, pretty);
    if (uc->parsed())
      return run_ucont(uc_map, uc_source, uc_target, uc_along,
                       static_cast<bool>(*uc_along_opt), pretty);
    if (pr->parsed()) return run_product(pr_left, pr_right, pretty);
    if (ga->parsed()) return run_group_analyze(ga_group, ga_subset, pretty);
    if (gt->parsed())
      return run_group_tau(gt_group, gt_subgroups, cap, pretty);
    if (pa->parsed()) return run_padic(pa_p, pa_x, pretty);
    if (av->parsed())
      return run_absval_check(av_kind, av_p, av_power, av_level, av_height,
                              av_samples, static_cast<bool>(*av_samples_opt),
                              pretty);
    if (qc->parsed()) return run_qchain(qc_from, qc_to, qc_r, pretty);
    if (sw->parsed())
      return run_sweep(sw_seed, sw_instances, sw_max_size, sw_suites, pretty);
    fail(ErrorCode::ParseError, "no verb given");
  } catch (const UnilabError& e) {
    if (exit_code_for(e.code()) == 1) {
      json out;
      out["holds"] = false;
      out["error"] = error_name(e.code());
      out["message"] = e.what();
      emit(out, pretty);
      return 1;
    }
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
