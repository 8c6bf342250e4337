#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pha/errors.hpp"
#include "pha/io.hpp"
#include "pha/random_instances.hpp"
#include "pha/recognition.hpp"

using namespace pha;
using io::json;

namespace {

enum Exit { Pass = 0, Failed = 1, Usage = 2, Unmet = 3 };

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::DimMismatch:
    case ErrorKind::FieldMismatch:
    case ErrorKind::InvalidArgument:
    case ErrorKind::MiddleMismatch:
      return Usage;
    case ErrorKind::HypothesisUnmet:
    case ErrorKind::NonUnitalAlgebra:
    case ErrorKind::NotSymmetric:
    case ErrorKind::NotCocommutative:
    case ErrorKind::NoAntipodeInverse:
    case ErrorKind::NotCategorizable:
    case ErrorKind::NotUnitalModule:
    case ErrorKind::MissingProjections:
    case ErrorKind::SubsystemHypothesisFails:
    case ErrorKind::ActionUnverified:
    case ErrorKind::ContextUnverified:
      return Unmet;
    default:
      return Failed;
  }
}

struct Options {
  std::string format = "text";
  std::string field;
  bool emit = false;
  bool timing = false;
};

struct Outcome {
  Report report;
  json outputs = json::object();
};

void absorb(Report& into, const Report& r, const std::string& prefix) { into.merge(r, prefix); }

void render_outputs(std::ostream& os, const json& v, const std::string& prefix) {
  for (const auto& [k, x] : v.items()) {
    if (x.is_object() && !x.contains("kind"))
      render_outputs(os, x, prefix + k + ".");
    else if (x.is_object() || (x.is_array() && !x.empty() && x[0].is_array()))
      os << prefix << k << ": <" << (x.is_object() ? x["kind"].get<std::string>() : "tensor") << ", see --format json>\n";
    else
      os << prefix << k << ": " << x.dump() << "\n";
  }
}

std::string render_text(const json& rep) {
  std::ostringstream os;
  os << "command: " << rep.value("command", "") << "\n";
  if (rep.contains("inputs"))
    for (const auto& in : rep["inputs"]) os << "input: " << in.value("file", "") << " fnv1a64=" << in.value("hash", "") << "\n";
  if (rep.contains("error"))
    os << "error: " << rep["error"].value("message", "") << "\n";
  if (rep.contains("checks"))
    for (const auto& c : rep["checks"]) {
      os << "  [" << c.value("status", "") << "] " << c.value("name", "");
      if (c.value("informational", false)) os << " (info)";
      if (c.contains("witness")) os << " -- " << c["witness"].get<std::string>();
      os << "\n";
    }
  if (rep.contains("outputs")) render_outputs(os, rep["outputs"], "");
  if (rep.contains("wall_time_s")) os << "wall_time_s: " << rep["wall_time_s"].dump() << "\n";
  if (rep.contains("ok")) os << "result: " << (rep["ok"].get<bool>() ? "pass" : "fail") << "\n";
  return os.str();
}

void print(const json& rep, const Options& o) {
  if (o.format == "json")
    std::cout << rep.dump(2) << "\n";
  else
    std::cout << render_text(rep);
}

json inputs_of(const io::Library& lib) {
  json in = json::array();
  for (const auto& s : lib.sources()) in.push_back(json{{"file", s.file}, {"hash", s.hash}});
  return in;
}

std::optional<Field> field_option(const Options& o) {
  if (o.field.empty()) return std::nullopt;
  return Field::parse(o.field);
}

// Runs body, turning library errors into exit codes; prints the report.
int run(const std::string& command, const Options& o, const std::function<Outcome(io::Library&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  json rep{{"command", command}};
  int code = Pass;
  std::optional<io::Library> lib;
  try {
    lib.emplace(field_option(o));
    Outcome out = body(*lib);
    rep["inputs"] = inputs_of(*lib);
    rep["checks"] = io::to_json(out.report)["checks"];
    rep["outputs"] = out.outputs;
    rep["ok"] = out.report.ok();
    code = out.report.ok() ? Pass : Failed;
  } catch (const Error& e) {
    if (lib) rep["inputs"] = inputs_of(*lib);
    rep["error"] = json{{"kind", std::string(error_kind_name(e.kind()))}, {"message", std::string(e.what())}};
    rep["ok"] = false;
    code = exit_code(e.kind());
  } catch (const json::exception& e) {
    rep["error"] = json{{"kind", "ParseError"}, {"message", e.what()}};
    rep["ok"] = false;
    code = Usage;
  }
  if (o.timing) rep["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  print(rep, o);
  return code;
}

const json& pick(const std::vector<json>& docs, std::initializer_list<const char*> kinds, const std::string& file) {
  for (const auto& d : docs)
    for (const char* k : kinds)
      if (d.value("kind", "") == k) return d;
  std::string want;
  for (const char* k : kinds) want += std::string(want.empty() ? "" : "|") + k;
  fail(ErrorKind::ParseError, file + ": no document of kind " + want);
}

std::string label(const json& doc, std::size_t idx) {
  return doc.contains("name") ? doc["name"].get<std::string>() : doc.value("kind", "doc") + std::to_string(idx);
}

// ---- verify ----

Report unit_and_assoc(const FDAlgebra& a) {
  Report r("algebra");
  auto w = associativity_witness(a);
  r.add("associative", !w, w ? "(b" + std::to_string((*w)[0]) + " b" + std::to_string((*w)[1]) + ") b" +
                                    std::to_string((*w)[2]) + " != b" + std::to_string((*w)[0]) + " (b" +
                                    std::to_string((*w)[1]) + " b" + std::to_string((*w)[2]) + ")"
                              : "");
  if (a.unit()) {
    std::string uw;
    for (std::size_t i = 0; i < a.dim() && uw.empty(); ++i)
      if (!(a.product(*a.unit(), a.basis(i)) == a.basis(i)) || !(a.product(a.basis(i), *a.unit()) == a.basis(i)))
        uw = "b" + std::to_string(i);
    r.add("unit", uw.empty(), uw);
  }
  return r;
}

Outcome verify_one(const io::Library& lib, const std::string& kind, const json& doc, const json* aux) {
  Outcome out;
  Report& r = out.report;
  if (kind == "group") {
    FiniteGroup g = lib.group(doc);
    r.pass("group_axioms");
    out.outputs["order"] = g.order();
    out.outputs["abelian"] = g.is_abelian();
  } else if (kind == "hopf") {
    HopfAlgebra h = lib.hopf(doc);
    r = verify_hopf(h.data());
    out.outputs["dim"] = h.dim();
    out.outputs["cocommutative"] = h.cocommutative();
    out.outputs["antipode_bijective"] = h.antipode_bijective();
  } else if (kind == "algebra") {
    FDAlgebra a = lib.algebra(doc, false);
    r = unit_and_assoc(a);
    out.outputs["dim"] = a.dim();
    if (r.ok()) {
      FDAlgebra ok = lib.algebra(doc);
      out.outputs["unital"] = find_unit(ok).has_value();
      out.outputs["right_annihilator_dim"] = right_annihilator(ok).dim();
      out.outputs["left_annihilator_dim"] = left_annihilator(ok).dim();
      out.outputs["idempotent"] = is_idempotent_algebra(ok);
    }
  } else if (kind == "action") {
    PartialAction pa = lib.action(doc);
    r = verify_partial_action(pa);
    if (pa.alg().is_unital()) absorb(r, verify_unital_partial_action(pa), "unital");
    ActionVerdict v = general_verdict(r);
    out.outputs["partial"] = v.partial;
    out.outputs["symmetric"] = v.symmetric;
  } else if (kind == "group_action") {
    PartialGroupAction p = lib.group_action(doc);
    r = verify_partial_group_action(p);
    if (p.projections) absorb(r, verify_alpha_projections(p), "projections");
    out.outputs["regular"] = is_regular(p);
  } else if (kind == "globalization") {
    PartialAction pa;
    GlobalizationResult g = lib.globalization(doc, &pa);
    verify_partial_action(pa);
    r = verify_globalization(pa, g);
    if (r.ok()) {
      Report m = minimality_report(pa, g);
      out.outputs["minimal"] = m.passed("kernel_inclusion");
    }
    out.outputs["dim_B"] = g.B.dim();
  } else if (kind == "context") {
    MoritaContextData c = lib.context(doc);
    if (auto e = lib.equivalence(doc)) {
      r = verify_equivalent_partial_actions(*e);
    } else {
      r = verify_context(c);
      r.add("strict", is_strict(c));
    }
    out.outputs["dims"] = {c.A.dim(), c.B.dim(), c.M.dim, c.N.dim};
  } else if (kind == "grading") {
    GoodGradingSpec s = lib.grading(doc);
    Field f = lib.field_of(doc);
    r = validate_spec(s, f);
    if (r.ok()) absorb(r, verify_partial_action(build_grading_action(s, f)), "action");
  } else if (kind == "category") {
    r = verify_category(lib.category(doc));
  } else if (kind == "module") {
    if (doc.contains("category")) {
      FiniteKCategory c = lib.category(doc["category"]);
      r = verify_cmodule(c, lib.category_module(doc, c));
    } else {
      const json& a = doc.contains("algebra") ? doc["algebra"] : (aux ? *aux : throw Error(ErrorKind::ParseError, "module without algebra"));
      FDAlgebra alg = lib.algebra(a);
      LeftModule m = lib.module(doc, alg);
      r = verify_left_module(alg, m);
      if (r.ok()) out.outputs["unital"] = is_unital_module(alg, m);
    }
  } else if (kind == "local_units") {
    FDAlgebra alg = lib.algebra(doc.at("algebra"));
    r = verify_local_units(alg, lib.local_units(doc, alg));
  } else {
    fail(ErrorKind::InvalidArgument, "unknown kind " + kind);
  }
  return out;
}

Outcome cmd_verify(io::Library& lib, const std::string& kind, const std::vector<std::string>& files, std::size_t jobs) {
  std::vector<json> targets;
  for (const auto& f : files)
    for (const auto& d : lib.load_file(f))
      if (d.value("kind", "") == kind) targets.push_back(d);
  if (targets.empty()) fail(ErrorKind::ParseError, "no document of kind " + kind);
  // verifier construction errors are verified failures, everything else propagates
  auto task = [&](std::size_t i) {
    try {
      return verify_one(lib, kind, targets[i], nullptr);
    } catch (const Error& e) {
      if (exit_code(e.kind()) != Failed) throw;
      Outcome o;
      o.report.fail("well_formed", std::string(error_kind_name(e.kind())) + ": " + e.what());
      return o;
    }
  };
  std::vector<Outcome> results(targets.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < targets.size(); ++i) results[i] = task(i);
  } else {
    for (std::size_t start = 0; start < targets.size(); start += jobs) {
      std::vector<std::future<Outcome>> fs;
      for (std::size_t i = start; i < std::min(targets.size(), start + jobs); ++i)
        fs.push_back(std::async(std::launch::async, task, i));
      for (std::size_t i = 0; i < fs.size(); ++i) results[start + i] = fs[i].get();
    }
  }
  Outcome total;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    std::string l = label(targets[i], i);
    absorb(total.report, results[i].report, l);
    if (!results[i].outputs.empty()) total.outputs[l] = results[i].outputs;
  }
  return total;
}

// ---- globalize ----

Outcome cmd_globalize(io::Library& lib, const std::string& file, bool check_minimal, const std::string& compare,
                      bool emit) {
  auto docs = lib.load_file(file);
  const json& d = pick(docs, {"action", "grading"}, file);
  PartialAction pa;
  if (d["kind"] == "grading") {
    pa = build_grading_action(lib.grading(d), lib.field_of(d));
  } else {
    pa = lib.action(d);
  }
  Outcome out;
  Report& r = out.report;
  Report ax = verify_partial_action(pa);
  absorb(r, ax, "action");
  require_partial(pa, true);
  GlobalizationResult g = standard_globalization(pa);
  absorb(r, verify_globalization(pa, g), "globalization");
  out.outputs["dim_A"] = pa.alg().dim();
  out.outputs["dim_B"] = g.B.dim();
  out.outputs["theta_bijective"] = g.B.dim() == pa.alg().dim() && rank(g.theta.map) == g.B.dim();
  out.outputs["right_annihilator_A"] = right_annihilator(pa.alg()).dim();
  out.outputs["right_annihilator_B"] = right_annihilator(g.B).dim();
  if (check_minimal) {
    Report m = minimality_report(pa, g);
    absorb(r, m, "minimality");
    out.outputs["minimal"] = is_minimal(pa, g);
  }
  if (!compare.empty()) {
    auto cdocs = lib.load_file(compare);
    PartialAction other;
    GlobalizationResult h = lib.globalization(pick(cdocs, {"globalization"}, compare), &other);
    verify_partial_action(other);
    absorb(r, verify_globalization(other, h), "compare");
    if (!(other.alg() == pa.alg()) || !(other.act() == pa.act()))
      fail(ErrorKind::HypothesisUnmet, "the comparison globalizes a different action");
    AlgebraMorphism id = identity_morphism(pa.alg());
    Lift to = lift_morphism(id, pa, g, other, h);
    Lift back = lift_morphism(id, other, h, pa, g);
    bool inverse = to.phi.map * back.phi.map == Mat::identity(h.B.dim()) &&
                   back.phi.map * to.phi.map == Mat::identity(g.B.dim());
    r.add("compare.lift_exists", true);
    out.outputs["compare_isomorphic"] = inverse;
    out.outputs["compare_lift_surjective"] = to.surjective;
  }
  if (emit) out.outputs["globalization"] = io::to_json(g);
  return out;
}

// ---- smash ----

Outcome cmd_smash(io::Library& lib, const std::string& file, bool emit) {
  auto docs = lib.load_file(file);
  PartialAction pa = lib.action(pick(docs, {"action"}, file));
  Outcome out;
  absorb(out.report, verify_partial_action(pa), "action");
  SmashAlgebra sm = build_smash(pa);
  PartialSmashAlgebra ps = build_partial_smash(sm);
  out.report.add("smash_associative", smash_is_associative(pa));
  out.outputs["dim_smash"] = sm.alg.dim();
  out.outputs["dim_partial_smash"] = ps.alg.dim();
  out.outputs["partial_smash_unital"] = ps.alg.is_unital();
  if (emit) {
    out.outputs["smash"] = io::to_json(sm.alg);
    out.outputs["partial_smash"] = io::to_json(ps.alg);
    out.outputs["partial_smash_inclusion"] = io::to_json(ps.inclusion);
  }
  return out;
}

// ---- morita ----

void describe(Outcome& out, const MoritaContextData& c, const std::string& prefix, bool emit) {
  out.outputs[prefix + "dims"] = {c.A.dim(), c.B.dim(), c.M.dim, c.N.dim};
  out.outputs[prefix + "strict"] = is_strict(c);
  if (emit) out.outputs[prefix + "context"] = io::to_json(c);
}

void describe_equivalence(Outcome& out, const ActionEquivalenceData& d, bool emit) {
  absorb(out.report, verify_equivalent_partial_actions(d), "equivalence");
  describe(out, d.ctx, "", emit);
  MoritaContextData sm = smash_equivalence_from_action_equivalence(d);
  absorb(out.report, verify_context(sm), "smash_context");
  describe(out, sm, "smash_", emit);
}

Outcome cmd_morita(io::Library& lib, const std::string& file, const std::string& construction, std::size_t n,
                   bool emit) {
  auto docs = lib.load_file(file);
  const json& d = pick(docs, {"action", "context"}, file);
  Outcome out;
  if (d["kind"] == "context") {
    if (auto e = lib.equivalence(d)) {
      describe_equivalence(out, *e, emit);
    } else {
      MoritaContextData c = lib.context(d);
      absorb(out.report, verify_context(c), "context");
      describe(out, c, "", emit);
    }
    return out;
  }
  PartialAction pa = lib.action(d);
  absorb(out.report, verify_partial_action(pa), "action");
  if (construction == "smash") {
    require_partial(pa, true);
    GlobalizationResult g = standard_globalization(pa);
    MoritaContextData c = smash_morita_context(pa, g);
    absorb(out.report, verify_context(c), "context");
    out.report.add("strict", is_strict(c));
    describe(out, c, "", emit);
    std::size_t k = 1;
    while (k * k < c.B.dim()) ++k;
    if (k * k == c.B.dim() && c.B.is_unital()) out.outputs["B_is_matrix_algebra"] = iso_to_matrix_algebra(c.B, k).has_value();
    return out;
  }
  ActionEquivalenceData e;
  if (construction == "identity") {
    e = identity_equivalence(pa);
  } else if (construction == "amplify") {
    e = amplification_equivalence(pa, n);
  } else if (construction == "quotient-right" || construction == "quotient-left") {
    QuotientEquivalence q =
        quotient_equivalence(pa, construction == "quotient-right" ? AnnihilatorSide::Right : AnnihilatorSide::Left);
    out.outputs["quotient_dim"] = q.quotient.alg.dim();
    out.outputs["annihilator_trivial"] = q.annihilator_trivial;
    e = q.data;
  } else if (construction == "globalization") {
    e = globalization_context(amplification_equivalence(pa, n));
  } else {
    fail(ErrorKind::InvalidArgument, "unknown construction " + construction);
  }
  describe_equivalence(out, e, emit);
  return out;
}

// ---- grading ----

Outcome cmd_grading(io::Library& lib, const std::string& file, bool emit) {
  auto docs = lib.load_file(file);
  const json& d = pick(docs, {"grading"}, file);
  GoodGradingSpec s = lib.grading(d);
  Field f = lib.field_of(d);
  Outcome out;
  Report spec = validate_spec(s, f);
  absorb(out.report, spec, "spec");
  if (!spec.ok()) return out;
  PartialAction pa = build_grading_action(s, f);
  absorb(out.report, verify_partial_action(pa), "action");
  GlobalizationResult g = build_grading_globalization(s, f);
  LocalUnitSystem units = diagonal_local_units(s.n, f);
  absorb(out.report, verify_globalization(pa, g, &units), "globalization");
  out.report.add("minimal", is_minimal(pa, g));
  GradingComparison cmp = compare_with_standard(s, f);
  out.report.add("standard_isomorphism", cmp.mutually_inverse);
  out.outputs["dim_B"] = g.B.dim();
  out.outputs["dim_standard"] = cmp.to_standard.phi.target.dim();
  json eig = json::array();
  for (std::size_t gi = 0; gi < s.group.order(); ++gi) {
    json row = json::array();
    for (std::size_t e = 0; e < s.n * s.n; ++e) row.push_back(io::to_json(pa.op(gi)(e, e)));
    eig.push_back(row);
  }
  out.outputs["eigenvalues"] = eig;
  if (emit) {
    out.outputs["action"] = io::to_json(pa);
    out.outputs["globalization"] = io::to_json(g);
  }
  return out;
}

// ---- group round trip ----

Outcome cmd_group_roundtrip(io::Library& lib, const std::string& file, bool emit) {
  auto docs = lib.load_file(file);
  PartialGroupAction p = lib.group_action(pick(docs, {"group_action"}, file));
  Outcome out;
  Report& r = out.report;
  absorb(r, verify_partial_group_action(p), "group_action");
  if (p.projections) absorb(r, verify_alpha_projections(p), "projections");
  PartialAction pa = to_kG_action(p);
  absorb(r, verify_partial_action(pa), "kG_action");
  absorb(r, verify_psi_identities(pa), "psi");
  PartialGroupAction back = from_kG_action(pa);
  bool domains = back.domains == p.domains, alphas = true, projections = true;
  for (std::size_t g = 0; g < p.group.order(); ++g) alphas = alphas && back.ambient_alpha(g) == p.ambient_alpha(g);
  if (p.projections) projections = back.projections && *back.projections == *p.projections;
  r.add("roundtrip.domains", domains);
  r.add("roundtrip.alpha", alphas);
  r.add("roundtrip.projections", projections, p.projections ? "" : "none supplied");
  auto w = regularity_witness(p);
  out.outputs["regular"] = !w.has_value();
  if (w) out.outputs["regularity_witness"] = *w;
  if (emit) {
    out.outputs["kG_action"] = io::to_json(pa);
    out.outputs["group_action"] = io::to_json(back);
  }
  return out;
}

// ---- fuzz ----

Outcome cmd_fuzz(std::uint64_t seed, std::size_t count, std::size_t max_dim) {
  Outcome out;
  std::vector<FuzzInstance> suite = fuzz_suite(seed, count, max_dim);
  std::string w_ann, w_pr, w_def, w_smash;
  std::size_t unital = 0, r_zero = 0, pr_checked = 0;
  for (const auto& f : suite) {
    const PartialAction& pa = f.action;
    const FDAlgebra& a = pa.alg();
    GlobalizationResult g = standard_globalization(pa);
    bool ra = right_annihilator(a).is_zero(), rb = right_annihilator(g.B).is_zero();
    bool minimal = is_minimal(pa, g);
    if ((rb && !ra) || (rb && !minimal) || (ra && minimal && pa.hopf().antipode_bijective() && !rb))
      if (w_ann.empty()) w_ann = f.label;
    if (is_idempotent_algebra(a) || ra || left_annihilator(a).is_zero()) {
      ++pr_checked;
      Report pr = verify_partial_representation(action_to_partial_representation(pa));
      if (pa.hopf().origin() == HopfOrigin::GroupAlgebra) absorb(pr, verify_group_identity(pa), "group");
      if (!pr.ok() && w_pr.empty()) w_pr = f.label + ": " + pr.first_failure();
    }
    if (a.is_unital()) {
      ++unital;
      ActionVerdict general = general_verdict(verify_partial_action(pa));
      ActionVerdict un = unital_verdict(verify_unital_partial_action(pa));
      if (!(general == un) && w_def.empty()) w_def = f.label;
    }
    if (ra) {
      ++r_zero;
      bool comp = verify_partial_action(pa).passed("composition");
      if (smash_is_associative(pa) != comp && w_smash.empty()) w_smash = f.label;
    }
  }
  out.report.add("annihilator_minimality_bridge", w_ann.empty(), w_ann);
  out.report.add("partial_representation", w_pr.empty(), w_pr);
  out.report.add("definition_agreement", w_def.empty(), w_def);
  out.report.add("smash_associativity_agreement", w_smash.empty(), w_smash);
  out.outputs["instances"] = suite.size();
  out.outputs["unital"] = unital;
  out.outputs["right_annihilator_zero"] = r_zero;
  out.outputs["representation_checked"] = pr_checked;
  return out;
}

// ---- report ----

int cmd_report(const std::string& file, const Options& o) {
  std::ifstream in(file);
  if (!in) {
    std::cerr << "cannot open " << file << "\n";
    return Usage;
  }
  json rep;
  try {
    rep = json::parse(in);
  } catch (const json::exception& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return Usage;
  }
  if (!rep.is_object() || !rep.contains("command")) {
    std::cerr << file << ": not a report\n";
    return Usage;
  }
  print(rep, o);
  if (rep.contains("error")) return Failed;
  return rep.value("ok", false) ? Pass : Failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial Hopf actions: verification and constructions"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--field", o.field, "Default field: rational or fp:P (overrides PHA_FIELD)");
  app.add_flag("--emit", o.emit, "Include constructed tensors");
  app.add_flag("--timing", o.timing, "Include wall time");

  auto* verify = app.add_subcommand("verify", "Verify documents of one kind");
  std::string kind;
  std::vector<std::string> files;
  std::size_t jobs = 1;
  verify->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"group", "hopf", "algebra", "action", "group_action", "globalization", "context",
                             "grading", "category", "module", "local_units"}));
  verify->add_option("files", files)->required()->check(CLI::ExistingFile);
  verify->add_option("--jobs", jobs, "Parallel verifications")->check(CLI::PositiveNumber);

  auto* globalize = app.add_subcommand("globalize", "Standard globalization of a partial action");
  std::string file, compare;
  bool check_minimal = false;
  globalize->add_option("file", file)->required()->check(CLI::ExistingFile);
  globalize->add_flag("--check-minimal", check_minimal);
  globalize->add_option("--compare", compare, "Globalization document to compare against")->check(CLI::ExistingFile);

  auto* smash = app.add_subcommand("smash", "Smash product and partial smash product");
  smash->add_option("file", file)->required()->check(CLI::ExistingFile);

  auto* morita = app.add_subcommand("morita", "Morita contexts");
  std::string construction = "smash";
  std::size_t n = 2;
  morita->add_option("file", file)->required()->check(CLI::ExistingFile);
  morita->add_option("--construction", construction)
      ->check(CLI::IsMember({"smash", "identity", "amplify", "quotient-right", "quotient-left", "globalization"}));
  morita->add_option("--n", n, "Matrix size for amplify/globalization")->check(CLI::PositiveNumber);

  auto* grading = app.add_subcommand("grading", "Good partial grading pipeline");
  grading->add_option("file", file)->required()->check(CLI::ExistingFile);

  auto* group_rt = app.add_subcommand("group-roundtrip", "Partial group action to kG and back");
  group_rt->add_option("file", file)->required()->check(CLI::ExistingFile);

  auto* fuzz = app.add_subcommand("fuzz", "Seeded random instances");
  std::uint64_t seed = 0;
  std::size_t count = 100, max_dim = 4;
  fuzz->add_option("--seed", seed)->required();
  fuzz->add_option("--count", count);
  fuzz->add_option("--max-dim", max_dim)->check(CLI::Range(1, 8));

  auto* report = app.add_subcommand("report", "Render a saved JSON report");
  report->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
    if (!o.field.empty()) Field::parse(o.field);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? Pass : Usage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return Usage;
  }

  if (*verify) return run("verify " + kind, o, [&](io::Library& lib) { return cmd_verify(lib, kind, files, jobs); });
  if (*globalize)
    return run("globalize", o, [&](io::Library& lib) { return cmd_globalize(lib, file, check_minimal, compare, o.emit); });
  if (*smash) return run("smash", o, [&](io::Library& lib) { return cmd_smash(lib, file, o.emit); });
  if (*morita)
    return run("morita " + construction, o, [&](io::Library& lib) { return cmd_morita(lib, file, construction, n, o.emit); });
  if (*grading) return run("grading", o, [&](io::Library& lib) { return cmd_grading(lib, file, o.emit); });
  if (*group_rt) return run("group-roundtrip", o, [&](io::Library& lib) { return cmd_group_roundtrip(lib, file, o.emit); });
  if (*fuzz) return run("fuzz", o, [&](io::Library&) { return cmd_fuzz(seed, count, max_dim); });
  if (*report) return cmd_report(file, o);
  return Usage;
}
