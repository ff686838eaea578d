#include "qes2d/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

namespace qes2d {

std::string format_double(double v) {
  if (v == 0.0) return "0";  // folds -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string format_optional(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

double round15(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(format_double(v).c_str(), nullptr);
}

namespace {

Json opt(const std::optional<double>& v) { return v ? Json(round15(*v)) : Json(nullptr); }

template <class Scalar>
Json operator_json(const Operator<Scalar>& op) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < op.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < op.dim(); ++c) {
      if constexpr (std::is_same_v<Scalar, Exact>) {
        row.push_back(round15(op(r, c).template convert_to<double>()));
      } else {
        row.push_back(round15(op(r, c)));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json to_json(const ChargePair& cp) {
  return Json{{"e1", round15(cp.e1)}, {"e2", round15(cp.e2)}, {"m1", round15(cp.m1)},
              {"m2", round15(cp.m2)}, {"B", round15(cp.B)}};
}

Json to_json(const DerivedParams& dp) {
  return Json{{"M", round15(dp.M)},
              {"mr", round15(dp.mr)},
              {"mu1", round15(dp.mu1)},
              {"mu2", round15(dp.mu2)},
              {"q", round15(dp.q)},
              {"ec", round15(dp.ec)},
              {"qw", round15(dp.qw)},
              {"omega_c", round15(dp.omega_c)},
              {"Omega_q", round15(dp.Omega_q)},
              {"omega_q", round15(dp.omega_q)},
              {"B0", opt(dp.B0)},
              {"b", opt(dp.b)},
              {"case", std::string(to_string(dp.case_tag))},
              {"pair", to_json(dp.pair)},
              {"labels_swapped", dp.labels_swapped},
              {"charges_mirrored", dp.charges_mirrored}};
}

Json to_json(const Polynomial& p) {
  Json arr = Json::array();
  for (double c : p.coeffs()) arr.push_back(round15(c));
  return arr;
}

Json to_json(const SpectralPoint& pt) {
  return Json{{"n", pt.n},
              {"s", pt.s},
              {"j", pt.j},
              {"kappa", round15(pt.kappa)},
              {"lambda", round15(pt.lambda)},
              {"b", opt(pt.b)},
              {"energy", round15(pt.energy)},
              {"case", std::string(to_string(pt.case_tag))},
              {"branch", std::string(to_string(pt.branch))}};
}

Json to_json(const EigenPair& ep) {
  return Json{{"point", to_json(ep.point)}, {"p", to_json(ep.p)}, {"nodes", ep.nodes}};
}

Json to_json(const RadialGrid& g) {
  return Json{{"r_min", round15(g.r_min())}, {"r_max", round15(g.r_max)}, {"num_points", g.num_points}};
}

Json to_json(const OracleReport& rep) {
  Json matches = Json::array();
  for (const auto& m : rep.matches) {
    matches.push_back(Json{{"j", m.j},
                           {"kappa_alg", round15(m.kappa_alg)},
                           {"kappa_fd", opt(m.kappa_fd)},
                           {"abs_err", m.kappa_fd ? Json(round15(m.abs_err)) : Json(nullptr)},
                           {"nodes_alg", m.nodes_alg},
                           {"nodes_fd", m.nodes_fd ? Json(*m.nodes_fd) : Json(nullptr)}});
  }
  return Json{{"n", rep.n}, {"s", rep.s}, {"grid", to_json(rep.grid)}, {"matches", std::move(matches)}};
}

Json to_json(const ParticularIntegralReport& rep) {
  Json per = Json::array();
  for (double v : rep.per_basis) per.push_back(round15(v));
  return Json{{"n", rep.n}, {"s", rep.s}, {"max_image_norm", round15(rep.max_image_norm)}, {"per_basis", per}};
}

Json to_json(const CommutatorReport& rep) {
  return Json{{"n", rep.n},
              {"N", rep.N},
              {"j0_jplus", round15(rep.dev_j0_jplus)},
              {"j0_jminus", round15(rep.dev_j0_jminus)},
              {"jminus_jplus", round15(rep.dev_jminus_jplus)},
              {"max_deviation", round15(rep.max_deviation())}};
}

Json to_json(const Operator<double>& op) { return operator_json(op); }
Json to_json(const Operator<Exact>& op) { return operator_json(op); }

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  auto line = [&os](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << ',';
      os << cells[i];
    }
    os << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

}  // namespace qes2d
