#include "conika/grid.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

namespace conika {

namespace {

std::vector<std::uint32_t> parse_range(const std::string& v,
                                       const std::string& key) {
  auto bad = [&](const std::string& why) {
    throw std::invalid_argument("grid spec: bad value for " + key + ": " + why);
  };
  std::vector<std::uint32_t> out;
  auto dots = v.find("..");
  try {
    if (dots == std::string::npos) {
      out.push_back((std::uint32_t)std::stoul(v));
      return out;
    }
    std::uint32_t start = (std::uint32_t)std::stoul(v.substr(0, dots));
    std::string rest = v.substr(dots + 2);
    std::uint32_t step = 1;
    auto colon = rest.find(':');
    if (colon != std::string::npos) {
      step = (std::uint32_t)std::stoul(rest.substr(colon + 1));
      rest = rest.substr(0, colon);
    }
    std::uint32_t end = (std::uint32_t)std::stoul(rest);
    if (step == 0) bad("step must be positive");
    if (end < start) bad("end < start");
    for (std::uint32_t x = start; x <= end; x += step) out.push_back(x);
  } catch (const std::logic_error&) {
    bad("not a number");
  }
  return out;
}

const char* const kConstructions[] = {"parabolic-kakeya", "degree2-kakeya",
                                      "ellipse-family"};

bool known_construction(const std::string& c) {
  for (auto* k : kConstructions)
    if (c == k) return true;
  return false;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string sanitize(std::string s) {
  for (auto& ch : s)
    if (ch == ',' || ch == '\n') ch = ';';
  return s;
}

struct Row {
  GridCell cell;
  std::string size, upper, upper_f, thm1, thm1_f, kak, kak_f, nik, nik_f;
  std::string verified = "false";
  std::string wall_time, error;
};

Rational upper_formula(const GridCell& c) {
  Rational q = c.q, n = c.n;
  if (c.construction == "parabolic-kakeya")
    return q * rational_pow(Rational(c.q + 1, 2), c.n - 2) * (q - 1) +
           rational_pow(q, c.n - 1);
  if (c.construction == "degree2-kakeya")
    return rational_pow(Rational(c.q + 2, 3), c.n + 1);
  // ellipse-family: the threshold the q+1 point set stays under
  return rational_pow(Rational(c.q - 1, 4), 2);
}

Row run_cell(const GridCell& cell, bool timing) {
  Row row;
  row.cell = cell;
  try {
    if (!known_construction(cell.construction))
      throw std::invalid_argument("unknown construction " + cell.construction);
    if (cell.q % 2 == 0) throw std::invalid_argument("even q");
    auto [p, k] = prime_power_decompose(cell.q);

    if (cell.q >= 5 && cell.n >= 2) {
      BoundSheet b = lower_bounds(cell.q, cell.n);
      row.thm1 = rational_to_string(b.thm1);
      row.thm1_f = fmt_double(rational_to_double(b.thm1));
      row.kak = rational_to_string(b.kakeya_mult);
      row.kak_f = fmt_double(rational_to_double(b.kakeya_mult));
      row.nik = rational_to_string(b.nikodym_mult);
      row.nik_f = fmt_double(rational_to_double(b.nikodym_mult));
    }

    auto start = std::chrono::steady_clock::now();
    Fq F = make_field(p, k);
    WitnessedSet W;
    VerifyResult v;
    if (cell.construction == "parabolic-kakeya") {
      W = build_parabolic_kakeya(F, cell.n);
      v = verify_conical_kakeya(W);
    } else if (cell.construction == "degree2-kakeya") {
      W = build_degree2_kakeya(F, cell.n);
      v = verify_conical_kakeya(W);
    } else {
      if (cell.n != 2)
        throw std::invalid_argument("ellipse-family needs n = 2");
      W = build_ellipse_pseudo_kakeya(F);
      v = verify_elliptic_coverage(W);
    }
    auto stop = std::chrono::steady_clock::now();

    Rational up = upper_formula(cell);
    row.size = std::to_string(W.points.size());
    row.upper = rational_to_string(up);
    row.upper_f = fmt_double(rational_to_double(up));
    row.verified = v.accepted ? "true" : "false";
    if (!v.accepted) row.error = sanitize(v.reason);
    if (timing) {
      double secs = std::chrono::duration<double>(stop - start).count();
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", secs);
      row.wall_time = buf;
    }
  } catch (const std::exception& e) {
    row.error = sanitize(e.what());
  }
  return row;
}

}  // namespace

std::vector<GridCell> parse_grid_spec(const std::string& spec) {
  std::vector<std::uint32_t> qs, ns;
  std::vector<std::string> constructions;

  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("grid spec: expected key=value, got " + part);
    std::string key = part.substr(0, eq), value = part.substr(eq + 1);
    if (key == "q")
      qs = parse_range(value, "q");
    else if (key == "n")
      ns = parse_range(value, "n");
    else if (key == "construction") {
      std::stringstream cs(value);
      std::string c;
      while (std::getline(cs, c, '|')) constructions.push_back(c);
    } else {
      throw std::invalid_argument("grid spec: unknown key " + key);
    }
  }
  if (qs.empty()) throw std::invalid_argument("grid spec: missing q");
  if (ns.empty()) ns = {2};
  if (constructions.empty())
    throw std::invalid_argument("grid spec: missing construction");

  std::vector<GridCell> cells;
  for (auto q : qs)
    for (auto n : ns)
      for (const auto& c : constructions) cells.push_back({q, n, c});
  return cells;
}

std::string run_grid_csv(const std::vector<GridCell>& cells, bool timing) {
  std::vector<Row> rows(cells.size());
  if (timing) {
    // Serial cells keep the timings stable.
    for (std::size_t i = 0; i < cells.size(); ++i)
      rows[i] = run_cell(cells[i], true);
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < (std::int64_t)cells.size(); ++i)
      rows[i] = run_cell(cells[i], false);
  }

  std::ostringstream os;
  os << "q,n,construction,size,upper_formula,upper_formula_float,thm1,"
        "thm1_float,kakeya_mult,kakeya_mult_float,nikodym_mult,"
        "nikodym_mult_float,verified,wall_time,error\n";
  for (const auto& r : rows)
    os << r.cell.q << ',' << r.cell.n << ',' << r.cell.construction << ','
       << r.size << ',' << r.upper << ',' << r.upper_f << ',' << r.thm1 << ','
       << r.thm1_f << ',' << r.kak << ',' << r.kak_f << ',' << r.nik << ','
       << r.nik_f << ',' << r.verified << ',' << r.wall_time << ',' << r.error
       << '\n';
  return os.str();
}

}  // namespace conika
