#include "conika/json_io.hpp"

#include <fstream>
#include <sstream>

namespace conika {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error("schema violation: " + what);
}

void require_schema(const Json& j) {
  require(j.is_object(), "expected a JSON object");
  require(j.contains("schema") && j["schema"] == 1, "schema must be 1");
}

}  // namespace

Json elem_to_json(const Fq& F, Fq::Elt e) {
  if (F.k() == 1) return Json(e);
  Json arr = Json::array();
  for (auto c : F.to_coeffs(e)) arr.push_back(c);
  return arr;
}

Fq::Elt elem_from_json(const Fq& F, const Json& j) {
  if (F.k() == 1) {
    require(j.is_number_unsigned(), "element must be an unsigned integer");
    std::uint64_t v = j.get<std::uint64_t>();
    require(v < F.q(), "element out of range");
    return (Fq::Elt)v;
  }
  require(j.is_array() && j.size() == F.k(),
          "element must be a coefficient array of length k");
  std::vector<Fq::Elt> c;
  for (const auto& x : j) {
    require(x.is_number_unsigned(), "coefficient must be an unsigned integer");
    c.push_back(x.get<Fq::Elt>());
  }
  return F.from_coeffs(c);
}

Json point_to_json(const Fq& F, const Point& p) {
  Json arr = Json::array();
  for (auto e : p) arr.push_back(elem_to_json(F, e));
  return arr;
}

Point point_from_json(const Fq& F, const Json& j) {
  require(j.is_array(), "point must be an array");
  Point p;
  for (const auto& x : j) p.push_back(elem_from_json(F, x));
  return p;
}

Json conic_to_json(const Fq& F, const Conic& C) {
  Json j;
  j["kind"] = to_string(C.kind);
  j["a"] = point_to_json(F, C.a);
  j["b"] = point_to_json(F, C.b);
  j["c"] = point_to_json(F, C.c);
  if (C.ellipse) {
    Json e;
    e["g"] = elem_to_json(F, C.ellipse->g);
    e["k"] = elem_to_json(F, C.ellipse->k);
    e["u"] = elem_to_json(F, C.ellipse->u);
    e["v"] = elem_to_json(F, C.ellipse->v);
    j["ellipse"] = e;
  }
  return j;
}

Conic conic_from_json(const Fq& F, const Json& j) {
  require(j.is_object() && j.contains("kind"), "conic needs a kind");
  Conic C;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "parabola")
    C.kind = ConicKind::parabola;
  else if (kind == "hyperbola")
    C.kind = ConicKind::hyperbola;
  else if (kind == "ellipse")
    C.kind = ConicKind::ellipse;
  else
    throw std::runtime_error("schema violation: unknown conic kind " + kind);
  C.a = point_from_json(F, j.at("a"));
  C.b = point_from_json(F, j.at("b"));
  C.c = point_from_json(F, j.at("c"));
  require(C.a.size() == C.b.size() && C.b.size() == C.c.size(),
          "conic vectors must have equal length");
  C.n = (std::uint32_t)C.a.size();
  if (C.kind == ConicKind::ellipse) {
    require(j.contains("ellipse"), "ellipse conic needs parametrization data");
    const Json& e = j.at("ellipse");
    EllipseParam P;
    P.g = elem_from_json(F, e.at("g"));
    P.k = elem_from_json(F, e.at("k"));
    P.u = elem_from_json(F, e.at("u"));
    P.v = elem_from_json(F, e.at("v"));
    require(F.mul(P.v, P.v) == F.add(F.mul(P.g, F.mul(P.u, P.u)), P.k),
            "ellipse anchor (u, v) does not satisfy v^2 = g u^2 + k");
    C.ellipse = P;
  }
  return C;
}

Json multipoly_to_json(const Fq& F, const MultiPoly& f) {
  Json j;
  j["n"] = f.n;
  Json terms = Json::array();
  for (const auto& t : f.terms) {
    Json jt;
    Json exp = Json::array();
    for (auto e : t.exp) exp.push_back(e);
    jt["exp"] = exp;
    jt["coeff"] = elem_to_json(F, t.coeff);
    terms.push_back(jt);
  }
  j["terms"] = terms;
  return j;
}

MultiPoly multipoly_from_json(const Fq& F, const Json& j) {
  require(j.is_object() && j.contains("n") && j.contains("terms"),
          "polynomial needs n and terms");
  std::uint32_t n = j.at("n").get<std::uint32_t>();
  require(n >= 1, "polynomial needs n >= 1");
  std::vector<MultiPoly::Term> ts;
  for (const auto& jt : j.at("terms")) {
    MultiPoly::Term t;
    require(jt.contains("exp") && jt.at("exp").is_array() &&
                jt.at("exp").size() == n,
            "term exponent must be an array of length n");
    for (const auto& e : jt.at("exp"))
      t.exp.push_back(e.get<std::uint16_t>());
    t.coeff = elem_from_json(F, jt.at("coeff"));
    ts.push_back(std::move(t));
  }
  return MultiPoly::make(F, n, std::move(ts));
}

Json field_header_json(const Fq& F) {
  Json j;
  j["q"] = F.q();
  j["p"] = F.p();
  j["k"] = F.k();
  Json mod = Json::array();
  for (auto c : F.modulus()) mod.push_back(c);
  j["modulus"] = mod;
  return j;
}

Fq field_from_header(const Json& j) {
  require(j.contains("p") && j.contains("k"), "field header needs p and k");
  Fq F = make_field(j.at("p").get<std::uint32_t>(),
                    j.at("k").get<std::uint32_t>());
  if (j.contains("q"))
    require(j.at("q").get<std::uint32_t>() == F.q(), "q != p^k");
  if (j.contains("modulus")) {
    std::vector<Fq::Elt> mod;
    for (const auto& c : j.at("modulus")) mod.push_back(c.get<Fq::Elt>());
    require(mod == F.modulus(),
            "modulus does not match the canonical irreducible");
  }
  return F;
}

Json witnessed_set_to_json(const WitnessedSet& W) {
  const Fq& F = W.field;
  Json j = field_header_json(F);
  j["schema"] = 1;
  j["n"] = W.n;
  Json pts = Json::array();
  for (const auto& p : W.points) pts.push_back(point_to_json(F, p));
  j["points"] = pts;
  Json wits = Json::array();
  for (const auto& w : W.witnesses) {
    Json jw;
    jw["key"] = point_to_json(F, w.key);
    jw["role"] = to_string(w.role);
    jw["conic"] = conic_to_json(F, w.conic);
    wits.push_back(jw);
  }
  j["witnesses"] = wits;
  j["provenance"] = W.provenance;
  return j;
}

WitnessedSet witnessed_set_from_json(const Json& j) {
  require_schema(j);
  WitnessedSet W;
  W.field = field_from_header(j);
  const Fq& F = W.field;
  require(j.contains("n"), "witnessed set needs n");
  W.n = j.at("n").get<std::uint32_t>();
  require(W.n >= 1, "n must be >= 1");
  for (const auto& jp : j.at("points")) {
    Point p = point_from_json(F, jp);
    require(p.size() == W.n, "point length != n");
    W.points.push_back(std::move(p));
  }
  for (const auto& jw : j.at("witnesses")) {
    Witness w;
    w.key = point_from_json(F, jw.at("key"));
    require(w.key.size() == W.n, "witness key length != n");
    w.role = witness_role_from_string(jw.at("role").get<std::string>());
    w.conic = conic_from_json(F, jw.at("conic"));
    require(w.conic.n == W.n, "witness conic dimension != n");
    if (w.role != WitnessRole::point)
      require(point_code(F, w.key) != 0, "direction key must be nonzero");
    require(linearly_independent(F, w.conic.b, w.conic.c),
            "witness b and c must be linearly independent");
    W.witnesses.push_back(std::move(w));
  }
  W.provenance = j.value("provenance", std::string());
  return W;
}

Json polynomial_file_json(const Fq& F, const MultiPoly& f) {
  Json j = field_header_json(F);
  j["schema"] = 1;
  j["polynomial"] = multipoly_to_json(F, f);
  return j;
}

std::pair<Fq, MultiPoly> polynomial_file_from_json(const Json& j) {
  require_schema(j);
  Fq F = field_from_header(j);
  MultiPoly f = multipoly_from_json(F, j.at("polynomial"));
  return {F, f};
}

Json trace_report_to_json(const Fq& F, const TraceReport& R) {
  Json j = field_header_json(F);
  j["schema"] = 1;
  j["mode"] = to_string(R.mode);
  if (R.multiplicity_mode) {
    Json mm;
    mm["l"] = R.l;
    mm["m"] = R.m;
    j["multiplicity"] = mm;
  } else {
    j["multiplicity"] = nullptr;
  }
  j["degree"] = R.degree;
  j["bound"] = R.bound;
  j["solved"] = R.solved;
  if (R.poly) j["polynomial"] = multipoly_to_json(F, *R.poly);
  Json recs = Json::array();
  for (const auto& r : R.records) {
    Json jr;
    jr["witness"] = point_to_json(F, r.witness_key);
    jr["deduction"] = r.deduction;
    jr["zeros"] = r.zeros;
    jr["cap"] = r.cap;
    jr["valid"] = r.valid;
    jr["verified"] = r.verified;
    recs.push_back(jr);
  }
  j["records"] = recs;
  j["covered"] = R.covered;
  j["total"] = R.total;
  j["full_coverage"] = R.full_coverage;
  j["contradiction"] = R.contradiction;
  j["reason"] = R.reason;
  return j;
}

TraceReport trace_report_from_json(const Fq& F, const Json& j) {
  require_schema(j);
  TraceReport R;
  std::string mode = j.at("mode").get<std::string>();
  require(mode == "kakeya" || mode == "nikodym", "unknown trace mode");
  R.mode = mode == "kakeya" ? TraceMode::kakeya : TraceMode::nikodym;
  if (j.contains("multiplicity") && !j.at("multiplicity").is_null()) {
    R.multiplicity_mode = true;
    R.l = j.at("multiplicity").at("l").get<std::uint32_t>();
    R.m = j.at("multiplicity").at("m").get<std::uint32_t>();
  } else {
    R.multiplicity_mode = false;
    R.l = 0;
    R.m = 1;
  }
  R.degree = j.at("degree").get<int>();
  R.bound = j.at("bound").get<std::int64_t>();
  R.solved = j.at("solved").get<bool>();
  if (j.contains("polynomial"))
    R.poly = multipoly_from_json(F, j.at("polynomial"));
  for (const auto& jr : j.at("records")) {
    TraceRecord r;
    r.witness_key = point_from_json(F, jr.at("witness"));
    r.deduction = jr.at("deduction").get<std::string>();
    r.zeros = jr.at("zeros").get<std::int64_t>();
    r.cap = jr.at("cap").get<std::int64_t>();
    r.valid = jr.at("valid").get<bool>();
    r.verified = jr.at("verified").get<bool>();
    R.records.push_back(std::move(r));
  }
  R.covered = j.at("covered").get<std::uint64_t>();
  R.total = j.at("total").get<std::uint64_t>();
  R.full_coverage = j.at("full_coverage").get<bool>();
  R.contradiction = j.at("contradiction").get<bool>();
  R.reason = j.at("reason").get<std::string>();
  return R;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  os << text;
  if (!os) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) {
  try {
    return Json::parse(read_text_file(path));
  } catch (const Json::parse_error& e) {
    throw std::runtime_error("invalid JSON in " + path + ": " + e.what());
  }
}

}  // namespace conika
