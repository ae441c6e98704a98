#include "friedrichs/serialize.hpp"

namespace friedrichs {

using nlohmann::json;

json to_json(const Matrix& m) {
  json re = json::array();
  json im = json::array();
  bool complex = false;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      re.push_back(m(i, j).real());
      im.push_back(m(i, j).imag());
      if (m(i, j).imag() != 0.0) complex = true;
    }
  }
  json out{{"rows", m.rows()}, {"cols", m.cols()}, {"re", std::move(re)}};
  if (complex) out["im"] = std::move(im);
  return out;
}

json to_json(const Signature& s) {
  return json{{"n_plus", s.n_plus}, {"n_zero", s.n_zero}, {"n_minus", s.n_minus}};
}

json to_json(const BoundaryModel& model) {
  return json{{"dim", model.dim()},
              {"form", to_json(model.form().gram())},
              {"kplus_basis", to_json(model.kplus_basis())},
              {"kminus_basis", to_json(model.kminus_basis())},
              {"g_plus", to_json(model.g_plus())},
              {"g_minus", to_json(model.g_minus())},
              {"tolerances",
               json{{"rank", tol::rank},
                    {"hermitian", tol::hermitian},
                    {"subspace_eq", tol::subspace_eq},
                    {"cone", tol::cone}}}};
}

json to_json(const BCSubspace& v) {
  return json{{"ambient_dim", v.space().ambient_dim()},
              {"dim", v.space().dim()},
              {"basis", to_json(v.space().basis())}};
}

json to_json(const MOperatorMat& m) { return json{{"mat", to_json(m.mat())}}; }

json to_json(const ContractionU& u) {
  return json{{"mat", to_json(u.mat())}, {"norm", u.norm()}};
}

json to_json(const GridFunction& g) {
  return json{{"n", g.n}, {"values", g.values}};
}

}  // namespace friedrichs
