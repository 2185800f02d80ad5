// Copyright 2026 The schmidtcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "schmidtcert/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace schmidtcert {

namespace {

using nlohmann::json;

json operator_to_json(const ComplexMatrix& m, const FactorSpace& space) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json re_row = json::array();
    json im_row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      re_row.push_back(m(i, j).real());
      im_row.push_back(m(i, j).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return json{{"dims", space.dims}, {"re", std::move(re)}, {"im", std::move(im)}};
}

double checked_number(const json& v, const char* what) {
  if (!v.is_number()) throw std::runtime_error(std::string(what) + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw std::runtime_error(std::string(what) + ": non-finite value");
  return x;
}

HermitianOperator operator_from_json(const json& j) {
  if (!j.contains("dims") || !j.contains("re") || !j.contains("im"))
    throw std::runtime_error("operator: missing dims/re/im field");
  FactorSpace space{j.at("dims").get<std::vector<int>>()};
  const int n = space.total_dimension();
  const json& re = j.at("re");
  const json& im = j.at("im");
  if (static_cast<int>(re.size()) != n || static_cast<int>(im.size()) != n)
    throw std::runtime_error("operator: matrix rows do not match dims");
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(re[i].size()) != n || static_cast<int>(im[i].size()) != n)
      throw std::runtime_error("operator: matrix columns do not match dims");
    for (int c = 0; c < n; ++c)
      m(i, c) = Complex{checked_number(re[i][c], "operator re"),
                        checked_number(im[i][c], "operator im")};
  }
  return HermitianOperator(std::move(m), std::move(space));
}

json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("malformed JSON in " + path.string() + ": " + e.what());
  }
  return j;
}

json payoff_to_json(const PayoffTable& t) {
  json ja = json::array();
  for (int a = 0; a < t.outcomes_a; ++a) {
    json jb = json::array();
    for (int b = 0; b < t.outcomes_b; ++b) {
      json jx = json::array();
      for (int x = 0; x < t.inputs_x; ++x) {
        json jy = json::array();
        for (int y = 0; y < t.inputs_y; ++y) jy.push_back(t.at(a, b, x, y));
        jx.push_back(std::move(jy));
      }
      jb.push_back(std::move(jx));
    }
    ja.push_back(std::move(jb));
  }
  return ja;
}

PayoffTable payoff_from_json(const json& j, int nx, int ny) {
  if (!j.is_array() || j.empty()) throw std::runtime_error("game: payoff must be a 4-d array");
  const int na = static_cast<int>(j.size());
  const int nb = static_cast<int>(j[0].size());
  PayoffTable t = PayoffTable::zeros(na, nb, nx, ny);
  for (int a = 0; a < na; ++a) {
    if (static_cast<int>(j[a].size()) != nb)
      throw std::runtime_error("game: ragged payoff array");
    for (int b = 0; b < nb; ++b) {
      if (static_cast<int>(j[a][b].size()) != nx)
        throw std::runtime_error("game: payoff x arity mismatch");
      for (int x = 0; x < nx; ++x) {
        if (static_cast<int>(j[a][b][x].size()) != ny)
          throw std::runtime_error("game: payoff y arity mismatch");
        for (int y = 0; y < ny; ++y)
          t.at(a, b, x, y) = checked_number(j[a][b][x][y], "game payoff");
      }
    }
  }
  return t;
}

std::vector<double> distribution_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw std::runtime_error(std::string(what) + ": expected an array");
  std::vector<double> p;
  for (const json& v : j) p.push_back(checked_number(v, what));
  return p;
}

}  // namespace

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << contents;
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void save_operator(const HermitianOperator& op, const std::filesystem::path& path) {
  write_file_atomic(path, operator_to_json(op.matrix(), op.space()).dump(2) + "\n");
}

HermitianOperator load_operator(const std::filesystem::path& path) {
  return operator_from_json(parse_file(path));
}

void save_witness(const WitnessOperator& w, const std::filesystem::path& path) {
  json j = operator_to_json(w.matrix(), w.space());
  j["r"] = w.r();
  write_file_atomic(path, j.dump(2) + "\n");
}

WitnessOperator load_witness(const std::filesystem::path& path) {
  const json j = parse_file(path);
  if (!j.contains("r")) throw std::runtime_error("witness: missing r field");
  return WitnessOperator(operator_from_json(j), j.at("r").get<int>());
}

void save_density(const DensityOperator& rho, const std::filesystem::path& path) {
  write_file_atomic(path, operator_to_json(rho.matrix(), rho.space()).dump(2) + "\n");
}

DensityOperator load_density(const std::filesystem::path& path) {
  return DensityOperator(operator_from_json(parse_file(path)));
}

void save_decomposition(const GammaDecomposition& dec, const std::filesystem::path& path) {
  json gamma = json::array();
  for (Eigen::Index x = 0; x < dec.gamma().rows(); ++x) {
    json row = json::array();
    for (Eigen::Index y = 0; y < dec.gamma().cols(); ++y) row.push_back(dec.gamma()(x, y));
    gamma.push_back(std::move(row));
  }
  json left = json::array();
  for (const DensityOperator& s : dec.left().states())
    left.push_back(operator_to_json(s.matrix(), s.space()));
  json right = json::array();
  for (const DensityOperator& s : dec.right().states())
    right.push_back(operator_to_json(s.matrix(), s.space()));
  json j{{"gamma", std::move(gamma)},
         {"left", std::move(left)},
         {"right", std::move(right)},
         {"residual", dec.residual()}};
  write_file_atomic(path, j.dump(2) + "\n");
}

GammaDecomposition load_decomposition(const std::filesystem::path& path,
                                      const WitnessOperator& target) {
  const json j = parse_file(path);
  for (const char* field : {"gamma", "left", "right"})
    if (!j.contains(field))
      throw std::runtime_error("decomposition: missing field " + std::string(field));

  std::vector<DensityOperator> left;
  for (const json& op : j.at("left")) left.emplace_back(operator_from_json(op));
  std::vector<DensityOperator> right;
  for (const json& op : j.at("right")) right.emplace_back(operator_from_json(op));

  const json& jg = j.at("gamma");
  RealMatrix gamma(jg.size(), jg.empty() ? 0 : jg[0].size());
  for (Eigen::Index x = 0; x < gamma.rows(); ++x) {
    if (static_cast<Eigen::Index>(jg[x].size()) != gamma.cols())
      throw std::runtime_error("decomposition: ragged gamma matrix");
    for (Eigen::Index y = 0; y < gamma.cols(); ++y)
      gamma(x, y) = checked_number(jg[x][y], "decomposition gamma");
  }
  return GammaDecomposition(std::move(gamma), ProductEnsemble(std::move(left)),
                            ProductEnsemble(std::move(right)), target);
}

void save_game(const BellGame& game, const std::filesystem::path& path) {
  json ma = json::array();
  for (const Povm& m : game.measurements_a()) {
    json povm = json::array();
    for (const HermitianOperator& e : m.elements())
      povm.push_back(operator_to_json(e.matrix(), e.space()));
    ma.push_back(std::move(povm));
  }
  json mb = json::array();
  for (const Povm& m : game.measurements_b()) {
    json povm = json::array();
    for (const HermitianOperator& e : m.elements())
      povm.push_back(operator_to_json(e.matrix(), e.space()));
    mb.push_back(std::move(povm));
  }
  json j{{"type", "bell"},
         {"inputsA", game.inputs_x()},
         {"inputsB", game.inputs_y()},
         {"pX", game.p_x()},
         {"qY", game.q_y()},
         {"payoff", payoff_to_json(game.payoff())},
         {"measurementsA", std::move(ma)},
         {"measurementsB", std::move(mb)}};
  write_file_atomic(path, j.dump(2) + "\n");
}

void save_game(const SemiquantumGame& game, const std::filesystem::path& path) {
  json sa = json::array();
  for (const DensityOperator& s : game.input_states_a())
    sa.push_back(operator_to_json(s.matrix(), s.space()));
  json sb = json::array();
  for (const DensityOperator& s : game.input_states_b())
    sb.push_back(operator_to_json(s.matrix(), s.space()));
  json j{{"type", "semiquantum"},
         {"inputsA", game.inputs_x()},
         {"inputsB", game.inputs_y()},
         {"pX", game.p_x()},
         {"qY", game.q_y()},
         {"payoff", payoff_to_json(game.payoff())},
         {"inputStatesA", std::move(sa)},
         {"inputStatesB", std::move(sb)}};
  write_file_atomic(path, j.dump(2) + "\n");
}

std::variant<BellGame, SemiquantumGame> load_game(const std::filesystem::path& path) {
  const json j = parse_file(path);
  if (!j.contains("type")) throw std::runtime_error("game: missing type field");
  const std::string type = j.at("type").get<std::string>();
  const int nx = j.at("inputsA").get<int>();
  const int ny = j.at("inputsB").get<int>();
  std::vector<double> px = distribution_from_json(j.at("pX"), "game pX");
  std::vector<double> qy = distribution_from_json(j.at("qY"), "game qY");
  PayoffTable payoff = payoff_from_json(j.at("payoff"), nx, ny);

  if (type == "bell") {
    std::vector<Povm> ma;
    for (const json& povm : j.at("measurementsA")) {
      std::vector<HermitianOperator> elements;
      for (const json& op : povm) elements.push_back(operator_from_json(op));
      ma.emplace_back(std::move(elements));
    }
    std::vector<Povm> mb;
    for (const json& povm : j.at("measurementsB")) {
      std::vector<HermitianOperator> elements;
      for (const json& op : povm) elements.push_back(operator_from_json(op));
      mb.emplace_back(std::move(elements));
    }
    return BellGame(std::move(ma), std::move(mb), std::move(px), std::move(qy),
                    std::move(payoff));
  }
  if (type == "semiquantum") {
    std::vector<DensityOperator> sa;
    for (const json& op : j.at("inputStatesA")) sa.emplace_back(operator_from_json(op));
    std::vector<DensityOperator> sb;
    for (const json& op : j.at("inputStatesB")) sb.emplace_back(operator_from_json(op));
    return SemiquantumGame(std::move(sa), std::move(sb), std::move(px), std::move(qy),
                           std::move(payoff));
  }
  throw std::runtime_error("game: unknown type " + type);
}

void save_correlation_csv(const CorrelationTable& table, const std::filesystem::path& path) {
  std::string out = "x,y,a,b,p\n";
  for (int x = 0; x < table.inputs_x(); ++x)
    for (int y = 0; y < table.inputs_y(); ++y)
      for (int a = 0; a < table.outcomes_a(); ++a)
        for (int b = 0; b < table.outcomes_b(); ++b) {
          out += std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(a) + "," +
                 std::to_string(b) + "," + format_value(table.at(a, b, x, y)) + "\n";
        }
  write_file_atomic(path, out);
}

void save_report(const CertificationReport& report, const std::filesystem::path& path) {
  json j{{"witness", report.witness_id},
         {"game", report.game_id},
         {"payoff", report.payoff},
         {"verdict", report.verdict},
         {"trials", report.trials},
         {"worstCase", report.worst_case},
         {"seed", report.seed},
         {"threshold", report.threshold},
         {"scopeNote", report.scope_note},
         {"diagnostics", report.per_input_contributions}};
  write_file_atomic(path, j.dump(2) + "\n");
}

void save_scan_csv(const std::vector<ScanRow>& rows, const std::filesystem::path& path) {
  std::string out = "lambda,value,quantity\n";
  for (const ScanRow& row : rows)
    out += format_value(row.lambda) + "," + format_value(row.value) + "," + row.quantity + "\n";
  write_file_atomic(path, out);
}

}  // namespace schmidtcert
