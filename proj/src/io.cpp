#include "pha/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "pha/errors.hpp"

namespace pha::io {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) { fail(ErrorKind::ParseError, where + ": " + what); }

const json& need(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) bad(where, std::string("missing \"") + key + "\"");
  return j.at(key);
}

std::size_t count_from(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad(where, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

std::vector<std::size_t> counts_from(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of integers");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(count_from(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<Mat> mats_from(const json& j, Field f, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of matrices");
  std::vector<Mat> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(mat_from(j[i], f, where + "[" + std::to_string(i) + "]"));
  return out;
}

void check_shape(const Mat& m, std::size_t rows, std::size_t cols, const std::string& where) {
  if (m.rows() != rows || m.cols() != cols)
    bad(where, "expected " + std::to_string(rows) + "x" + std::to_string(cols) + ", got " + std::to_string(m.rows()) +
                   "x" + std::to_string(m.cols()));
}

std::string name_of(const json& doc) { return doc.is_object() && doc.contains("name") ? doc["name"].get<std::string>() : "<inline>"; }

FDAlgebra builtin_algebra(const std::string& b, std::size_t n, Field f, const std::string& where) {
  if (b == "field") return base_field_algebra(f);
  if (b == "matrix") return matrix_algebra(n, f);
  if (b == "product_of_fields") return product_of_fields(n, f);
  if (b == "upper_triangular") return upper_triangular(n, f);
  if (b == "truncated_polynomial") return truncated_polynomial(n, f);
  if (b == "zero") return zero_algebra(n, f);
  bad(where, "unknown builtin algebra \"" + b + "\"");
}

}  // namespace

Field default_field() {
  const char* env = std::getenv("PHA_FIELD");
  if (env == nullptr || *env == '\0') return Field();
  return Field::parse(env);
}

Scalar scalar_from(const json& j, Field f, const std::string& where) {
  try {
    if (j.is_number_integer()) return Scalar(mpq_class(mpz_class(j.dump())), f);
    if (j.is_string()) return Scalar::parse(j.get<std::string>(), f);
  } catch (const Error& e) {
    bad(where, e.what());
  }
  bad(where, "expected a scalar (\"p/q\" or an integer)");
}

Vec vec_from(const json& j, Field f, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  Vec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(scalar_from(j[i], f, where + "[" + std::to_string(i) + "]"));
  return v;
}

Mat mat_from(const json& j, Field f, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of rows");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < j.size(); ++i) rows.push_back(vec_from(j[i], f, where + "[" + std::to_string(i) + "]"));
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].size() != cols) bad(where, "ragged matrix at row " + std::to_string(i));
  Mat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

json to_json(const Scalar& s) {
  if (s.bound() && !s.field().is_rational()) return json(std::stoll(s.value().get_str()));
  return json(s.value().get_str());
}

json to_json(const Vec& v) {
  json j = json::array();
  for (const auto& s : v) j.push_back(to_json(s));
  return j;
}

json to_json(const Mat& m) {
  json j = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(to_json(m.row(i)));
  return j;
}

json to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks()) {
    json x{{"name", c.name}, {"status", status_name(c.status)}};
    if (!c.witness.empty()) x["witness"] = c.witness;
    if (c.informational) x["informational"] = true;
    checks.push_back(x);
  }
  return json{{"subject", r.subject()}, {"ok", r.ok()}, {"checks", checks}};
}

json to_json(const FDAlgebra& a) {
  json j{{"kind", "algebra"}, {"field", a.field().name()}, {"dim", a.dim()}, {"mult", to_json(a.mult())}};
  if (a.unit()) j["unit"] = to_json(*a.unit());
  return j;
}

json to_json(const HopfAlgebra& h) {
  return json{{"kind", "hopf"},
              {"field", h.field().name()},
              {"algebra", to_json(h.alg())},
              {"comult", to_json(h.comult())},
              {"counit", to_json(h.counit().row(0))},
              {"antipode", to_json(h.antipode())}};
}

json to_json(const ActionBase& a) {
  json ops = json::array();
  for (std::size_t i = 0; i < a.hopf().dim(); ++i) ops.push_back(to_json(a.op(i)));
  return json{{"kind", "action"}, {"hopf", to_json(a.hopf())}, {"algebra", to_json(a.alg())}, {"operators", ops}};
}

json to_json(const GlobalizationResult& g) {
  json ops = json::array();
  for (std::size_t i = 0; i < g.action.hopf().dim(); ++i) ops.push_back(to_json(g.action.op(i)));
  json j{{"kind", "globalization"},
         {"algebra", to_json(g.B)},
         {"operators", ops},
         {"theta", to_json(g.theta.map)},
         {"provenance", g.provenance == Provenance::Standard ? "standard" : "user"}};
  if (g.minimal) j["minimal"] = *g.minimal;
  return j;
}

json to_json(const Bimodule& m) {
  return json{{"dim", m.dim}, {"left", to_json(m.left)}, {"right", to_json(m.right)}};
}

json to_json(const MoritaContextData& c) {
  return json{{"kind", "context"}, {"A", to_json(c.A)},         {"B", to_json(c.B)},
              {"M", to_json(c.M)},  {"N", to_json(c.N)},         {"tau", to_json(c.tau)},
              {"sigma", to_json(c.sigma)}};
}

json to_json(const PartialGroupAction& p) {
  json doms = json::array(), alphas = json::array();
  for (std::size_t g = 0; g < p.group.order(); ++g) {
    doms.push_back(to_json(p.domains[g].basis()));
    alphas.push_back(to_json(p.ambient_alpha(g)));
  }
  json j{{"kind", "group_action"},
         {"group", json{{"kind", "group"}, {"table", p.group.table()}, {"labels", p.group.labels()}}},
         {"algebra", to_json(p.alg)},
         {"domains", doms},
         {"alpha", alphas}};
  if (p.projections) {
    json pr = json::array();
    for (const auto& m : *p.projections) pr.push_back(to_json(m));
    j["projections"] = pr;
  }
  return j;
}

json to_json(const FiniteKCategory& c) {
  json comp = json::array();
  for (const auto& zs : c.comp) {
    json a = json::array();
    for (const auto& ys : zs) {
      json b = json::array();
      for (const auto& m : ys) b.push_back(to_json(m));
      a.push_back(b);
    }
    comp.push_back(a);
  }
  json ids = json::array();
  for (const auto& v : c.identities) ids.push_back(to_json(v));
  return json{{"kind", "category"}, {"field", c.field.name()}, {"objects", c.objects},
              {"hom", c.hom},       {"comp", comp},              {"identities", ids}};
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) s[i] = digits[h & 15];
  return s;
}

std::vector<json> Library::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  std::string bytes = ss.str();
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const json::parse_error& e) {
    bad(path, std::string("invalid JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
  Source src{path, hex64(fnv1a(bytes))};
  sources_.push_back(src);
  std::vector<json> docs;
  if (doc.is_object() && doc.contains("documents")) {
    const json& list = doc["documents"];
    if (!list.is_array()) bad(path, "\"documents\" must be an array");
    for (const auto& d : list) docs.push_back(d);
  } else {
    docs.push_back(doc);
  }
  for (const auto& d : docs) add(d, src);
  return docs;
}

void Library::add(const json& doc, const Source& src) {
  if (!doc.is_object()) bad(src.file, "a document must be a JSON object");
  if (!doc.contains("kind") || !doc["kind"].is_string()) bad(src.file, "document without a \"kind\"");
  static const std::vector<std::string> kinds = {"group",   "hopf",     "algebra", "action",       "grading",
                                                 "context", "category", "module",  "globalization", "group_action",
                                                 "local_units"};
  std::string k = doc["kind"];
  if (std::find(kinds.begin(), kinds.end(), k) == kinds.end()) bad(src.file, "unknown kind \"" + k + "\"");
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) bad(src.file, "\"name\" must be a string");
    std::string n = doc["name"];
    // files sharing a common preamble may repeat identical definitions
    auto it = named_.find(n);
    if (it != named_.end() && it->second != doc) bad(src.file, "conflicting definitions of \"" + n + "\"");
    named_[n] = doc;
  } else {
    anonymous_.push_back(doc);
  }
}

const json& Library::by_name(const std::string& name) const {
  auto it = named_.find(name);
  if (it == named_.end()) bad("reference", "no document named \"" + name + "\"");
  return it->second;
}

const json& Library::resolve(const json& ref, const std::string& kind, const std::string& where) const {
  const json& doc = ref.is_string() ? by_name(ref.get<std::string>()) : ref;
  if (!doc.is_object()) bad(where, "expected a " + kind + " document or a name");
  if (doc.contains("kind") && doc["kind"] != kind)
    bad(where, "expected kind \"" + kind + "\", got \"" + doc["kind"].get<std::string>() + "\"");
  return doc;
}

Field Library::field_of(const json& doc) const {
  if (doc.is_object() && doc.contains("field")) {
    if (!doc["field"].is_string()) bad(name_of(doc), "\"field\" must be a string");
    try {
      return Field::parse(doc["field"].get<std::string>());
    } catch (const Error& e) {
      bad(name_of(doc), e.what());
    }
  }
  return default_;
}

FiniteGroup Library::group(const json& ref) const {
  const json& d = resolve(ref, "group", "group");
  std::string w = "group " + name_of(d);
  if (d.contains("cyclic")) return FiniteGroup::cyclic(count_from(d["cyclic"], w + ".cyclic"));
  if (d.contains("product_of_cyclic")) return FiniteGroup::product_of_cyclic(counts_from(d["product_of_cyclic"], w));
  const json& t = need(d, "table", w);
  if (!t.is_array()) bad(w, "table must be an array");
  std::vector<std::vector<std::size_t>> table;
  for (std::size_t i = 0; i < t.size(); ++i) table.push_back(counts_from(t[i], w + ".table[" + std::to_string(i) + "]"));
  std::vector<std::string> labels;
  if (d.contains("labels")) labels = d["labels"].get<std::vector<std::string>>();
  return FiniteGroup::from_table(table, labels);
}

HopfAlgebra Library::hopf(const json& ref) const {
  const json& d = resolve(ref, "hopf", "hopf");
  std::string w = "hopf " + name_of(d);
  Field f = field_of(d);
  if (d.contains("type")) {
    std::string t = d["type"];
    if (t == "group_algebra") return group_algebra(group(need(d, "group", w)), f);
    if (t == "dual_group_algebra") return dual_group_algebra(group(need(d, "group", w)), f);
    bad(w, "unknown type \"" + t + "\"");
  }
  FDAlgebra a = algebra(need(d, "algebra", w));
  std::size_t n = a.dim();
  HopfData data{a, mat_from(need(d, "comult", w), a.field(), w + ".comult"), Mat(1, n),
                mat_from(need(d, "antipode", w), a.field(), w + ".antipode")};
  Vec eps = vec_from(need(d, "counit", w), a.field(), w + ".counit");
  if (eps.size() != n) bad(w, "counit length");
  data.counit.set_row(0, eps);
  check_shape(data.comult, n * n, n, w + ".comult");
  check_shape(data.antipode, n, n, w + ".antipode");
  return make_hopf(data);
}

FDAlgebra Library::algebra(const json& ref, bool checked) const {
  const json& d = resolve(ref, "algebra", "algebra");
  std::string w = "algebra " + name_of(d);
  Field f = field_of(d);
  if (d.contains("builtin")) {
    std::string b = d["builtin"];
    std::size_t n = d.contains("n") ? count_from(d["n"], w + ".n") : 1;
    if (b == "left_unit") {
      Mat m = structure_constants(2, [](std::size_t i, std::size_t j) {
        Vec v = zero_vec(2);
        if (j == 0) v[i] = Scalar(1);
        return v;
      });
      return make_algebra(m, std::nullopt, f);
    }
    return builtin_algebra(b, n, f, w);
  }
  std::size_t n = count_from(need(d, "dim", w), w + ".dim");
  Mat m(n, n * n);
  if (d.contains("mult")) {
    m = mat_from(d["mult"], f, w + ".mult");
    check_shape(m, n, n * n, w + ".mult");
  } else if (d.contains("products")) {
    const json& p = d["products"];
    if (!p.is_array()) bad(w, "products must be an array of [i, j, vector]");
    for (std::size_t k = 0; k < p.size(); ++k) {
      std::string pw = w + ".products[" + std::to_string(k) + "]";
      if (!p[k].is_array() || p[k].size() != 3) bad(pw, "expected [i, j, vector]");
      std::size_t i = count_from(p[k][0], pw), j = count_from(p[k][1], pw);
      Vec v = vec_from(p[k][2], f, pw);
      if (i >= n || j >= n || v.size() != n) bad(pw, "index or length out of range");
      m.set_col(i * n + j, v);
    }
  }
  std::optional<Vec> unit;
  if (d.contains("unit") && !d["unit"].is_null()) {
    unit = vec_from(d["unit"], f, w + ".unit");
    if (unit->size() != n) bad(w, "unit length");
  }
  return checked ? make_algebra(m, unit, f) : make_algebra_unchecked(m, unit, f);
}

PartialAction Library::action(const json& ref) const {
  const json& d = resolve(ref, "action", "action");
  std::string w = "action " + name_of(d);
  HopfAlgebra h = hopf(need(d, "hopf", w));
  FDAlgebra a = algebra(need(d, "algebra", w));
  if (d.contains("tensor")) {
    Mat t = mat_from(d["tensor"], a.field(), w + ".tensor");
    check_shape(t, a.dim(), h.dim() * a.dim(), w + ".tensor");
    return PartialAction(h, a, t);
  }
  std::vector<Mat> ops = mats_from(need(d, "operators", w), a.field(), w + ".operators");
  if (ops.size() != h.dim()) bad(w, "need one operator per basis element of H");
  for (std::size_t i = 0; i < ops.size(); ++i) check_shape(ops[i], a.dim(), a.dim(), w + ".operators[" + std::to_string(i) + "]");
  return PartialAction(h, a, action_from_operators(ops, a.dim()));
}

GoodGradingSpec Library::grading(const json& ref) const {
  const json& d = resolve(ref, "grading", "grading");
  std::string w = "grading " + name_of(d);
  FiniteGroup g = group(need(d, "group", w));
  std::vector<std::size_t> l = d.contains("subgroup") ? counts_from(d["subgroup"], w + ".subgroup") : std::vector<std::size_t>{g.identity()};
  if (d.contains("sequence")) return spec_from_sequence(g, l, counts_from(d["sequence"], w + ".sequence"));
  GoodGradingSpec s;
  s.n = count_from(need(d, "n", w), w + ".n");
  s.group = g;
  s.subgroup = l;
  const json& t = need(d, "t", w);
  if (!t.is_array()) bad(w, "t must be an n x n array");
  for (std::size_t i = 0; i < t.size(); ++i) s.t.push_back(counts_from(t[i], w + ".t[" + std::to_string(i) + "]"));
  return s;
}

PartialGroupAction Library::group_action(const json& ref) const {
  const json& d = resolve(ref, "group_action", "group_action");
  std::string w = "group_action " + name_of(d);
  FiniteGroup g = group(need(d, "group", w));
  FDAlgebra a = algebra(need(d, "algebra", w));
  const json& dom = need(d, "domains", w);
  if (!dom.is_array() || dom.size() != g.order()) bad(w, "need one domain per group element");
  std::vector<Subspace> domains;
  for (std::size_t i = 0; i < dom.size(); ++i) {
    Mat b = mat_from(dom[i], a.field(), w + ".domains[" + std::to_string(i) + "]");
    if (b.rows() > 0 && b.cols() != a.dim()) bad(w, "domain vectors must have length dim A");
    domains.push_back(b.rows() == 0 ? Subspace(a.dim()) : Subspace::row_space(b));
  }
  std::vector<Mat> alpha = mats_from(need(d, "alpha", w), a.field(), w + ".alpha");
  if (alpha.size() != g.order()) bad(w, "need one alpha per group element");
  for (const auto& m : alpha) check_shape(m, a.dim(), a.dim(), w + ".alpha");
  std::optional<std::vector<Mat>> proj;
  if (d.contains("projections")) {
    proj = mats_from(d["projections"], a.field(), w + ".projections");
    if (proj->size() != g.order()) bad(w, "need one projection per group element");
    for (const auto& m : *proj) check_shape(m, a.dim(), a.dim(), w + ".projections");
  }
  return make_partial_group_action(g, a, domains, alpha, proj);
}

GlobalizationResult Library::globalization(const json& ref, PartialAction* pa) const {
  const json& d = resolve(ref, "globalization", "globalization");
  std::string w = "globalization " + name_of(d);
  PartialAction src = action(need(d, "action", w));
  if (pa) *pa = src;
  FDAlgebra b = algebra(need(d, "algebra", w));
  std::vector<Mat> ops = mats_from(need(d, "operators", w), b.field(), w + ".operators");
  if (ops.size() != src.hopf().dim()) bad(w, "need one operator per basis element of H");
  for (const auto& m : ops) check_shape(m, b.dim(), b.dim(), w + ".operators");
  Mat theta = mat_from(need(d, "theta", w), b.field(), w + ".theta");
  check_shape(theta, b.dim(), src.alg().dim(), w + ".theta");
  return make_candidate(src.alg(), GlobalAction(src.hopf(), b, action_from_operators(ops, b.dim())), theta);
}

MoritaContextData Library::context(const json& ref) const {
  const json& d = resolve(ref, "context", "context");
  std::string w = "context " + name_of(d);
  MoritaContextData c;
  c.A = algebra(need(d, "A", w));
  c.B = algebra(need(d, "B", w));
  Field f = c.A.field();
  auto bimod = [&](const char* key) {
    const json& m = need(d, key, w);
    std::string mw = w + "." + key;
    Bimodule b;
    b.dim = count_from(need(m, "dim", mw), mw + ".dim");
    b.left = mat_from(need(m, "left", mw), f, mw + ".left");
    b.right = mat_from(need(m, "right", mw), f, mw + ".right");
    return b;
  };
  c.M = bimod("M");
  c.N = bimod("N");
  check_shape(c.M.left, c.M.dim, c.A.dim() * c.M.dim, w + ".M.left");
  check_shape(c.M.right, c.M.dim, c.M.dim * c.B.dim(), w + ".M.right");
  check_shape(c.N.left, c.N.dim, c.B.dim() * c.N.dim, w + ".N.left");
  check_shape(c.N.right, c.N.dim, c.N.dim * c.A.dim(), w + ".N.right");
  c.tau = mat_from(need(d, "tau", w), f, w + ".tau");
  c.sigma = mat_from(need(d, "sigma", w), f, w + ".sigma");
  check_shape(c.tau, c.A.dim(), c.M.dim * c.N.dim, w + ".tau");
  check_shape(c.sigma, c.B.dim(), c.N.dim * c.M.dim, w + ".sigma");
  return c;
}

std::optional<ActionEquivalenceData> Library::equivalence(const json& ref) const {
  const json& d = resolve(ref, "context", "context");
  std::string w = "context " + name_of(d);
  if (!d.contains("action_A")) return std::nullopt;
  ActionEquivalenceData e;
  e.ctx = context(d);
  e.pa_A = action(need(d, "action_A", w));
  e.pa_B = action(need(d, "action_B", w));
  std::size_t dh = e.pa_A.hopf().dim();
  e.m_action = mat_from(need(d, "m_action", w), e.ctx.A.field(), w + ".m_action");
  e.n_action = mat_from(need(d, "n_action", w), e.ctx.A.field(), w + ".n_action");
  check_shape(e.m_action, e.ctx.M.dim, dh * e.ctx.M.dim, w + ".m_action");
  check_shape(e.n_action, e.ctx.N.dim, dh * e.ctx.N.dim, w + ".n_action");
  return e;
}

FiniteKCategory Library::category(const json& ref) const {
  const json& d = resolve(ref, "category", "category");
  std::string w = "category " + name_of(d);
  Field f = field_of(d);
  if (d.contains("builtin")) {
    std::string b = d["builtin"];
    std::size_t n = count_from(need(d, "n", w), w + ".n");
    if (b == "matrix_units") return matrix_unit_category(n, f);
    if (b == "discrete") return discrete_category(n, f);
    bad(w, "unknown builtin category \"" + b + "\"");
  }
  FiniteKCategory c;
  c.field = f;
  c.objects = need(d, "objects", w).get<std::vector<std::string>>();
  std::size_t n = c.objects.size();
  const json& hom = need(d, "hom", w);
  if (!hom.is_array() || hom.size() != n) bad(w, "hom must be n x n");
  for (std::size_t y = 0; y < n; ++y) {
    c.hom.push_back(counts_from(hom[y], w + ".hom"));
    if (c.hom.back().size() != n) bad(w, "hom must be n x n");
  }
  const json& comp = need(d, "comp", w);
  if (!comp.is_array() || comp.size() != n) bad(w, "comp must be n x n x n");
  c.comp.assign(n, std::vector<std::vector<Mat>>(n));
  for (std::size_t z = 0; z < n; ++z) {
    if (!comp[z].is_array() || comp[z].size() != n) bad(w, "comp must be n x n x n");
    for (std::size_t y = 0; y < n; ++y) {
      std::string cw = w + ".comp[" + std::to_string(z) + "][" + std::to_string(y) + "]";
      c.comp[z][y] = mats_from(comp[z][y], f, cw);
      if (c.comp[z][y].size() != n) bad(cw, "expected n matrices");
      for (std::size_t x = 0; x < n; ++x) {
        Mat& m = c.comp[z][y][x];
        if (m.rows() == 0) m = Mat(c.hom[z][x], c.hom[z][y] * c.hom[y][x]);
        check_shape(m, c.hom[z][x], c.hom[z][y] * c.hom[y][x], cw + "[" + std::to_string(x) + "]");
      }
    }
  }
  const json& ids = need(d, "identities", w);
  if (!ids.is_array() || ids.size() != n) bad(w, "need one identity per object");
  for (std::size_t x = 0; x < n; ++x) c.identities.push_back(vec_from(ids[x], f, w + ".identities"));
  return c;
}

CModule Library::category_module(const json& ref, const FiniteKCategory& c) const {
  const json& d = resolve(ref, "module", "module");
  std::string w = "module " + name_of(d);
  CModule m;
  m.dims = counts_from(need(d, "dims", w), w + ".dims");
  std::size_t n = c.size();
  if (m.dims.size() != n) bad(w, "need one dimension per object");
  const json& act = need(d, "act", w);
  if (!act.is_array() || act.size() != n) bad(w, "act must be n x n");
  for (std::size_t y = 0; y < n; ++y) {
    m.act.push_back(mats_from(act[y], c.field, w + ".act"));
    if (m.act[y].size() != n) bad(w, "act must be n x n");
    for (std::size_t x = 0; x < n; ++x) {
      if (m.act[y][x].rows() == 0) m.act[y][x] = Mat(m.dims[y], c.hom[y][x] * m.dims[x]);
      check_shape(m.act[y][x], m.dims[y], c.hom[y][x] * m.dims[x], w + ".act");
    }
  }
  return m;
}

LeftModule Library::module(const json& ref, const FDAlgebra& a) const {
  const json& d = resolve(ref, "module", "module");
  std::string w = "module " + name_of(d);
  if (d.value("regular", false)) return regular_module(a);
  LeftModule m;
  m.dim = count_from(need(d, "dim", w), w + ".dim");
  m.action = mat_from(need(d, "action", w), a.field(), w + ".action");
  check_shape(m.action, m.dim, a.dim() * m.dim, w + ".action");
  return m;
}

LocalUnitSystem Library::local_units(const json& ref, const FDAlgebra& a) const {
  const json& d = resolve(ref, "local_units", "local_units");
  std::string w = "local_units " + name_of(d);
  LocalUnitSystem s;
  const json& u = need(d, "units", w);
  if (!u.is_array()) bad(w, "units must be an array of vectors");
  for (std::size_t i = 0; i < u.size(); ++i) {
    s.units.push_back(vec_from(u[i], a.field(), w + ".units"));
    if (s.units.back().size() != a.dim()) bad(w, "unit length");
  }
  return s;
}

}  // namespace pha::io
