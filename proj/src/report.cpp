#include "cyclab/report.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "cyclab/errors.hpp"
#include "cyclab/roots.hpp"

namespace cyclab {

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json series_to_json(const BivariateSeries& f) {
  Json rows = Json::array();
  for (int k = 0; k <= f.max_k(); ++k) {
    Json row = Json::array();
    for (int l = 0; l <= f.max_l(); ++l) row.push_back(complex_to_json(f(k, l)));
    rows.push_back(std::move(row));
  }
  return Json{{"coeffs", std::move(rows)}};
}

BivariateSeries series_from_json(const Json& j) {
  auto bad = [](const std::string& why) { return Error(ErrorKind::Parse, "series JSON: " + why); };
  if (!j.is_object() || !j.contains("coeffs")) throw bad("missing \"coeffs\"");
  const Json& rows = j.at("coeffs");
  if (!rows.is_array() || rows.empty()) throw bad("\"coeffs\" must be a nonempty array");
  std::vector<std::vector<Complex>> out;
  for (const Json& row : rows) {
    if (!row.is_array() || row.empty()) throw bad("each row must be a nonempty array");
    std::vector<Complex> r;
    for (const Json& c : row) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number()) {
        throw bad("each coefficient must be [re, im]");
      }
      r.emplace_back(c[0].get<double>(), c[1].get<double>());
    }
    out.push_back(std::move(r));
  }
  try {
    return BivariateSeries::from_rows(out);
  } catch (const Error& e) {
    throw bad(e.what());
  }
}

Json zeroset_to_json(const TorusZeroSet& z, const StabilityReport& s) {
  Json pts = Json::array();
  for (const auto& q : z.points) pts.push_back(Json::array({q.s, q.t}));
  Json j{{"class", to_string(z.cls)},
         {"face", to_string(z.face)},
         {"points", std::move(pts)},
         {"stability", s.zero_free ? "zero_free" : "zero_found"},
         {"sides_zero_free", s.sides_zero_free},
         {"resolution_warning", z.resolution_warning}};
  if (z.lambda) j["lambda"] = complex_to_json(*z.lambda);
  if (s.witness) j["witness"] = Json::array({complex_to_json((*s.witness)[0]), complex_to_json((*s.witness)[1])});
  if (!z.note.empty()) j["note"] = z.note;
  return j;
}

Json singular_set_to_json(const std::vector<SingularPoint>& s) {
  Json a = Json::array();
  for (const auto& p : s) {
    a.push_back({{"a", complex_to_json(p.a)}, {"kind", to_string(p.kind)}, {"discriminant", p.discriminant}});
  }
  return a;
}

Json track_to_json(const BranchTrack& t) {
  Json nodes = Json::array();
  for (Complex z : t.nodes) nodes.push_back(complex_to_json(z));
  Json values = Json::array();
  for (const auto& row : t.values) {
    Json r = Json::array();
    for (Complex h : row) r.push_back(is_infinite(h) ? Json("inf") : complex_to_json(h));
    values.push_back(std::move(r));
  }
  return {{"nodes", std::move(nodes)}, {"values", std::move(values)}, {"monodromy", one_line(t.permutation)}};
}

Json exponent_to_json(const ExponentFit& f) {
  return {{"slope", f.slope},
          {"r_squared", f.r_squared},
          {"no_blowup", f.no_blowup},
          {"radii", f.radii},
          {"derivative", f.derivative}};
}

Json hopf_to_json(const HopfReport& h) {
  return {{"min_ratio", h.min_ratio},
          {"argmin", complex_to_json(h.argmin)},
          {"max_abs_h", h.max_abs_h},
          {"samples", h.samples},
          {"max_multiplicity", h.max_multiplicity}};
}

Json cross_check_to_json(const CrossCheck& c) {
  return {{"regime", to_string(c.regime)},
          {"shape", c.shape == BasisShape::diagonal ? "diagonal" : "square"},
          {"n_max", c.n_max},
          {"last_dist_sq", c.last_dist_sq},
          {"agreement", to_string(c.agreement)},
          {"detail", c.detail}};
}

Json verdict_to_json(const CyclicityVerdict& v) {
  Json j{{"verdict", to_string(v.verdict)},
         {"rule", to_string(v.rule)},
         {"alpha", Json::array({v.w.alpha1, v.w.alpha2})},
         {"reason", v.reason}};
  if (!v.factor_verdicts.empty()) {
    Json f = Json::array();
    for (const auto& fv : v.factor_verdicts) f.push_back(verdict_to_json(fv));
    j["factors"] = std::move(f);
  }
  if (v.cross_check) j["cross_check"] = cross_check_to_json(*v.cross_check);
  return j;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string distance_csv(const DistanceSequence& seq, const Json& config) {
  std::string out = "# " + config.dump() + "\nN,dist_sq\n";
  for (const auto& d : seq) out += std::to_string(d.n) + "," + format_double(d.dist_sq) + "\n";
  return out;
}

std::string dilation_csv(const DilationSweep& sweep, const Json& config) {
  std::string out = "# " + config.dump() + "\nr,norm_sq,seminorm,box,reliable\n";
  for (const auto& d : sweep) {
    out += format_double(d.r) + "," + format_double(d.norm_sq) + "," + format_double(d.seminorm) + "," +
           std::to_string(d.box.k) + "x" + std::to_string(d.box.l) + "," + (d.reliable ? "1" : "0") + "\n";
  }
  return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot open " + tmp.string());
    f << content;
    if (!f) throw Error(ErrorKind::InvalidArgument, "write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace cyclab
