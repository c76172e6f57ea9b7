// conika command-line interface: field inspection, set constructions,
// witness verification, vanishing solves, proof traces, lower bounds and
// CSV experiment grids.

#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "conika/grid.hpp"
#include "conika/json_io.hpp"
#include "conika/proof.hpp"

namespace {

using namespace conika;

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kUsage = 2;

Fq field_for_q(std::uint64_t q, std::uint32_t max_q) {
  auto [p, k] = prime_power_decompose(q);
  return make_field(p, k, max_q);
}

int cmd_field_info(std::uint64_t q, std::uint32_t max_q) {
  Fq F = field_for_q(q, max_q);
  std::cout << "q=" << F.q() << "\n";
  std::cout << "p=" << F.p() << "\n";
  std::cout << "k=" << F.k() << "\n";
  std::cout << "modulus=";
  {
    const auto& m = F.modulus();
    bool first = true;
    for (std::size_t i = m.size(); i-- > 0;) {
      if (m[i] == 0) continue;
      if (!first) std::cout << "+";
      first = false;
      if (i == 0 || m[i] != 1) std::cout << m[i];
      if (i >= 1) std::cout << "x";
      if (i >= 2) std::cout << "^" << i;
    }
    std::cout << "\n";
  }
  Fq::Elt g = find_nonsquare(F);
  std::cout << "nonsquare=" << F.describe_element(g) << "\n";
  std::uint32_t squares = 0;
  for (Fq::Elt x = 1; x < F.q(); ++x)
    if (F.is_square(x)) ++squares;
  std::cout << "unit_squares=" << squares << "\n";
  Fq2 E(F, g);
  std::cout << "norm_one_order=" << norm_one_subgroup(E).size() << "\n";
  return kOk;
}

int cmd_construct(const std::string& type, std::uint64_t q, std::uint32_t n,
                  const std::string& out, std::uint32_t max_q) {
  Fq F = field_for_q(q, max_q);
  WitnessedSet W;
  if (type == "parabolic-kakeya")
    W = build_parabolic_kakeya(F, n);
  else if (type == "degree2-kakeya")
    W = build_degree2_kakeya(F, n);
  else if (type == "ellipse-family")
    W = build_ellipse_pseudo_kakeya(F);
  else
    throw CLI::ValidationError("construct", "unknown construction " + type);
  write_text_file(out, dump_json(witnessed_set_to_json(W)));
  std::cout << W.provenance << ": " << W.points.size() << " points, "
            << W.witnesses.size() << " witnesses -> " << out << "\n";
  return kOk;
}

int cmd_verify(const std::string& path, const std::string& mode,
               bool exhaustive, std::uint64_t budget, bool serial) {
  WitnessedSet W = witnessed_set_from_json(read_json_file(path));
  VerifyOptions opts;
  opts.exhaustive = exhaustive;
  opts.budget = budget;
  opts.exec = serial ? Exec::serial : Exec::parallel;
  VerifyResult r;
  if (mode == "kakeya")
    r = verify_conical_kakeya(W, opts);
  else if (mode == "nikodym")
    r = verify_conical_nikodym(W, opts);
  else if (mode == "elliptic-coverage")
    r = verify_elliptic_coverage(W, opts);
  else
    throw CLI::ValidationError("verify", "unknown mode " + mode);
  if (r.accepted) {
    std::cout << "accepted: " << r.checked << " keys verified\n";
    return kOk;
  }
  std::cout << "rejected: " << r.reason << "\n";
  if (r.offending_point) {
    std::cout << "offending point:";
    for (auto e : *r.offending_point) std::cout << " " << e;
    std::cout << "\n";
  }
  return kRejected;
}

int cmd_vanish(const std::string& path, std::uint32_t degree,
               std::uint32_t mult, const std::string& out) {
  WitnessedSet W = witnessed_set_from_json(read_json_file(path));
  MultiPoly f =
      mult <= 1 ? vanishing_polynomial(W.field, W.points, W.n, degree)
                : vanishing_polynomial_with_multiplicity(W.field, W.points,
                                                         W.n, degree, mult);
  write_text_file(out, dump_json(polynomial_file_json(W.field, f)));
  std::cout << "degree " << f.degree() << ", " << f.terms.size()
            << " terms -> " << out << "\n";
  return kOk;
}

int cmd_trace(const std::string& path, const std::string& mode,
              std::uint32_t mult, std::uint32_t l, const std::string& out) {
  WitnessedSet W = witnessed_set_from_json(read_json_file(path));
  TraceOptions opts;
  if (l > 0) opts.l = l;
  if (mult > 0) opts.m = mult;
  TraceMode tm;
  if (mode == "kakeya")
    tm = TraceMode::kakeya;
  else if (mode == "nikodym")
    tm = TraceMode::nikodym;
  else
    throw CLI::ValidationError("trace", "unknown mode " + mode);
  TraceReport R = run_trace(W, tm, opts);
  write_text_file(out, dump_json(trace_report_to_json(W.field, R)));
  std::cout << (R.solved ? "solved degree " + std::to_string(R.degree)
                         : "not solved")
            << "; coverage " << R.covered << "/" << R.total
            << "; contradiction=" << (R.contradiction ? "true" : "false")
            << "\n";
  std::cout << R.reason << " -> " << out << "\n";
  return kOk;
}

int cmd_bounds(std::uint64_t q, std::uint32_t n) {
  BoundSheet b = lower_bounds((std::uint32_t)q, n);
  auto line = [](const char* name, const Rational& r) {
    std::cout << name << "=" << rational_to_string(r);
    if (denominator(r) != 1) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.6g", rational_to_double(r));
      std::cout << " (~" << buf << ")";
    }
    std::cout << "\n";
  };
  line("thm1", b.thm1);
  line("kakeya_mult", b.kakeya_mult);
  line("nikodym_mult", b.nikodym_mult);
  return kOk;
}

int cmd_report(const std::string& spec, const std::string& out, bool timing) {
  auto cells = parse_grid_spec(spec);
  write_text_file(out, run_grid_csv(cells, timing));
  std::cout << cells.size() << " cells -> " << out << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-field conic toolkit: constructions, verification and "
               "polynomial-method traces"};
  app.require_subcommand(1);

  std::uint64_t q = 0;
  std::uint32_t n = 2, max_q = Fq::kDefaultMaxQ;
  std::uint32_t degree = 0, mult = 0, l = 0;
  std::uint64_t budget = 0;
  std::string out, set_path, mode, grid_spec, construction;
  bool exhaustive = false, serial = false, timing = false;

  auto* info = app.add_subcommand("field-info", "describe F_q");
  info->add_option("--q", q, "field size (odd prime power)")->required();
  info->add_option("--max-q", max_q, "magnitude budget");

  auto* con = app.add_subcommand("construct", "build a witnessed set");
  con->add_option("type", construction,
                  "parabolic-kakeya | degree2-kakeya | ellipse-family")
      ->required();
  con->add_option("--q", q)->required();
  con->add_option("--n", n);
  con->add_option("--out", out)->required();
  con->add_option("--max-q", max_q);

  auto* ver = app.add_subcommand("verify", "verify a witnessed set");
  ver->add_option("--set", set_path)->required();
  ver->add_option("--mode", mode, "kakeya | nikodym | elliptic-coverage")
      ->required();
  ver->add_flag("--exhaustive", exhaustive,
                "confirm negatives by conic search");
  ver->add_option("--budget", budget, "candidate budget for --exhaustive");
  ver->add_flag("--serial", serial, "use the serial reference verifier");

  auto* van = app.add_subcommand("vanish", "solve for a vanishing polynomial");
  van->add_option("--set", set_path)->required();
  van->add_option("--degree", degree)->required();
  van->add_option("--mult", mult, "multiplicity requirement (default 1)");
  van->add_option("--out", out)->required();

  auto* tra = app.add_subcommand("trace", "replay a proof over a set");
  tra->add_option("--set", set_path)->required();
  tra->add_option("--mode", mode, "kakeya | nikodym")->required();
  tra->add_option("--mult", mult, "multiplicity m (implies multiplicity mode)");
  tra->add_option("--l", l, "multiplicity target l (default 2 when set)");
  tra->add_option("--out", out)->required();

  auto* bnd = app.add_subcommand("bounds", "print the lower-bound sheet");
  bnd->add_option("--q", q)->required();
  bnd->add_option("--n", n)->required();

  auto* rep = app.add_subcommand("report", "run an experiment grid to CSV");
  rep->add_option("--grid", grid_spec, "e.g. q=5..13:2,n=3,construction=parabolic-kakeya")
      ->required();
  rep->add_option("--out", out)->required();
  rep->add_flag("--timing", timing, "fill the wall_time column (not byte-stable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (info->parsed()) return cmd_field_info(q, max_q);
    if (con->parsed()) return cmd_construct(construction, q, n, out, max_q);
    if (ver->parsed())
      return cmd_verify(set_path, mode, exhaustive, budget, serial);
    if (van->parsed()) return cmd_vanish(set_path, degree, mult, out);
    if (tra->parsed()) return cmd_trace(set_path, mode, mult, l, out);
    if (bnd->parsed()) return cmd_bounds(q, n);
    if (rep->parsed()) return cmd_report(grid_spec, out, timing);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
