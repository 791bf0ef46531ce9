#include "sbound/json_report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sbound/matrix_io.hpp"

namespace sbound {
namespace {

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json matrix2(const Eigen::Matrix2d& m) {
  return Json::array({Json::array({m(0, 0), m(0, 1)}), Json::array({m(1, 0), m(1, 1)})});
}

Json row_set_json(const RowSet& rows) {
  Json out = Json::array();
  for (int r : rows) out.push_back(r);
  return out;
}

void write_string(std::ostream& out, const std::string& s) {
  out << Json(s).dump();
}

void write(std::ostream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out << ",\n";
        first = false;
        out << inner;
        write_string(out, it.key());
        out << ": ";
        write(out, it.value(), indent + 1);
      }
      out << '\n' << pad << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
      out << '[';
      bool first = true;
      for (const Json& e : j) {
        if (!first) out << (flat ? ", " : ",");
        first = false;
        if (!flat) out << '\n' << inner;
        write(out, e, indent + 1);
      }
      if (!flat) out << '\n' << pad;
      out << ']';
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out << "null";
      } else {
        std::string s = format_double(v);
        // Keep floats recognizable as floats.
        if (s.find_first_of(".eE") == std::string::npos) s += ".0";
        out << s;
      }
      return;
    }
    default:
      out << j.dump();
  }
}

}  // namespace

Json to_json(const PlueckerCoords& p) {
  Json j;
  j["p12"] = p.p12;
  j["p13"] = p.p13;
  j["p14"] = p.p14;
  j["p23"] = p.p23;
  j["p24"] = p.p24;
  j["p34"] = p.p34;
  return j;
}

PlueckerCoords pluecker_from_json(const Json& j) {
  return {j.at("p12").get<double>(), j.at("p13").get<double>(), j.at("p14").get<double>(),
          j.at("p23").get<double>(), j.at("p24").get<double>(), j.at("p34").get<double>()};
}

Json to_json(const TransformedVars& v) {
  Json j;
  j["x1"] = v.x1;
  j["x2"] = v.x2;
  j["y1"] = v.y1;
  j["y2"] = v.y2;
  j["z1"] = v.z1;
  j["z2"] = v.z2;
  return j;
}

Json to_json(const EllipticParams& e) {
  Json j;
  j["X"] = e.X;
  j["x"] = e.x;
  j["Y"] = e.Y;
  j["y"] = e.y;
  j["Z"] = e.Z;
  j["z"] = e.z;
  return j;
}

Json to_json(const SystemReport& r) {
  Json j;
  j["sphere1_residual"] = r.sphere1_residual;
  j["sphere2_residual"] = r.sphere2_residual;
  j["qform_values"] = r.qform_values;
  j["bound_used"] = r.bound_used;
  j["satisfied"] = r.satisfied;
  return j;
}

Json to_json(const CSFactors& f) {
  Json j;
  j["q1"] = matrix2(f.q1);
  j["q2"] = matrix2(f.q2);
  j["q3"] = matrix2(f.q3);
  j["alpha"] = f.alpha;
  j["beta"] = f.beta;
  return j;
}

Json to_json(const SubmatrixReport& r) {
  Json j;
  j["row_set"] = row_set_json(r.row_set);
  j["sigma_min"] = r.sigma_min;
  j["determinant"] = r.determinant;
  Json all = Json::array();
  for (const SubsetValue& v : r.all_values) {
    Json e;
    e["row_set"] = row_set_json(v.row_set);
    e["sigma_min"] = v.sigma_min;
    all.push_back(std::move(e));
  }
  j["all_values"] = std::move(all);
  return j;
}

Json to_json(const CheckResult& r) {
  Json j;
  j["name"] = r.name;
  j["passed"] = r.passed;
  j["max_violation"] = number_or_null(r.max_violation);
  j["tolerance"] = r.tolerance;
  if (r.witness) {
    Json w = Json::array();
    for (double v : *r.witness) w.push_back(number_or_null(v));
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  j["samples_used"] = r.samples_used;
  Json details = Json::object();
  for (const CheckDetail& d : r.details) {
    if (d.values.size() == 1) {
      details[d.name] = number_or_null(d.values.front());
    } else {
      Json arr = Json::array();
      for (double v : d.values) arr.push_back(number_or_null(v));
      details[d.name] = std::move(arr);
    }
  }
  j["details"] = std::move(details);
  return j;
}

Json to_json(const CertifyConfig& c) {
  Json j;
  j["ellipse_grid"] = c.ellipse_grid;
  j["transform_grid"] = c.transform_grid;
  j["lemma_grid"] = c.lemma_grid;
  j["implication_grid"] = c.implication_grid;
  j["refinement_grid"] = c.refinement_grid;
  j["seed"] = c.seed;
  j["random_probes"] = c.random_probes;
  j["bound"] = c.bound;
  return j;
}

Json to_json(const CertificateReport& r) {
  Json j;
  j["config"] = to_json(r.config);
  Json checks = Json::array();
  for (const CheckResult& c : r.checks) checks.push_back(to_json(c));
  j["checks"] = std::move(checks);
  j["all_passed"] = r.all_passed;
  return j;
}

Json to_json(const SearchParams& p) {
  Json j;
  j["restarts"] = p.restarts;
  j["max_iters"] = p.max_iters;
  j["initial_step"] = p.initial_step;
  j["step_shrink"] = p.step_shrink;
  j["stop_step"] = p.stop_step;
  j["seed"] = p.seed;
  return j;
}

Json to_json(const WorstCaseResult& r) {
  Json j;
  j["n"] = r.best_matrix.n();
  j["k"] = r.best_matrix.k();
  j["best_value"] = r.best_value;
  j["best_matrix"] = matrix_to_string(r.best_matrix.matrix());
  j["per_restart_values"] = r.per_restart_values;
  j["iterations_used"] = r.iterations_used;
  return j;
}

std::string dump_json(const Json& j) {
  std::ostringstream out;
  write(out, j, 0);
  out << '\n';
  return out.str();
}

}  // namespace sbound
