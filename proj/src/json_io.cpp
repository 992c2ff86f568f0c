#include "hopflift/json_io.hpp"

#include <stdexcept>

namespace hopflift::io {

Json to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw std::invalid_argument("scalar must be a string or an integer");
}

Json to_json(const Mat& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

Mat matrix_from_json(const Json& j) {
  if (!j.is_array()) {
    Mat m(1, 1);
    m(0, 0) = scalar_from_json(j);
    return m;
  }
  const auto rows = static_cast<Index>(j.size());
  const Index cols = rows == 0 ? 0 : static_cast<Index>(j[0].size());
  Mat m = Mat::Zero(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) throw std::invalid_argument("ragged matrix");
    for (Index k = 0; k < cols; ++k) m(i, k) = scalar_from_json(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

Json to_json(const HopfData& h) {
  const std::size_t n = h.dim();
  Json out;
  out["basis"] = h.basis_names();
  auto tensor = [&](auto get) {
    Json t = Json::array();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const Scalar& s = get(i, j, k);
          if (!s.is_zero()) t.push_back({i, j, k, s.str()});
        }
    return t;
  };
  out["mul"] = tensor([&](auto i, auto j, auto k) -> const Scalar& { return h.mul(i, j, k); });
  out["comul"] = tensor([&](auto i, auto j, auto k) -> const Scalar& { return h.comul(i, j, k); });
  auto vec = [](const Vec& v) {
    Json t = Json::array();
    for (Index i = 0; i < v.size(); ++i)
      if (!v(i).is_zero()) t.push_back({i, v(i).str()});
    return t;
  };
  out["unit"] = vec(h.unit());
  out["counit"] = vec(h.counit());
  Json s = Json::array();
  for (Index i = 0; i < h.antipode().rows(); ++i)
    for (Index j = 0; j < h.antipode().cols(); ++j)
      if (!h.antipode()(i, j).is_zero()) s.push_back({i, j, h.antipode()(i, j).str()});
  out["antipode"] = s;
  return out;
}

HopfData hopf_from_json(const Json& j) {
  const auto names = j.at("basis").get<std::vector<std::string>>();
  const std::size_t n = names.size();
  std::vector<Scalar> mul(n * n * n), comul(n * n * n);
  auto fill3 = [&](const Json& entries, std::vector<Scalar>& t) {
    for (const auto& e : entries) {
      const auto i = e.at(0).get<std::size_t>(), a = e.at(1).get<std::size_t>(), b = e.at(2).get<std::size_t>();
      if (i >= n || a >= n || b >= n) throw std::invalid_argument("tensor index out of range");
      t[(i * n + a) * n + b] = scalar_from_json(e.at(3));
    }
  };
  fill3(j.at("mul"), mul);
  fill3(j.at("comul"), comul);
  auto vec = [&](const Json& entries) {
    Vec v = Vec::Zero(static_cast<Index>(n));
    for (const auto& e : entries) v(e.at(0).get<Index>()) = scalar_from_json(e.at(1));
    return v;
  };
  Mat s = Mat::Zero(static_cast<Index>(n), static_cast<Index>(n));
  for (const auto& e : j.at("antipode")) s(e.at(0).get<Index>(), e.at(1).get<Index>()) = scalar_from_json(e.at(2));
  return HopfData(names, std::move(mul), vec(j.at("unit")), std::move(comul), vec(j.at("counit")), std::move(s));
}

Json to_json(const YDModule& m) {
  const HopfData& h = m.parent();
  Json out;
  out["name"] = m.name();
  Json gens = Json::object();
  const auto& spelling = h.spelling();
  for (std::size_t g = 0; g < h.generators().size(); ++g)
    for (std::size_t b = 0; b < spelling.size(); ++b)
      if (spelling[b] == std::vector<std::size_t>{g}) gens[h.generators()[g]] = to_json(m.action(b));
  out["action"] = gens;
  out["coaction"] = to_json(m.coaction());
  return out;
}

YDModule yd_from_json(const Json& j, std::shared_ptr<const HopfData> parent) {
  std::map<std::string, Mat> gens;
  for (const auto& [name, mat] : j.at("action").items()) gens[name] = matrix_from_json(mat);
  return build_yd(std::move(parent), gens, matrix_from_json(j.at("coaction")), j.value("name", std::string{}));
}

Json to_json(const catalog::ParamSet& p) {
  Json out = Json::object();
  for (const auto& [name, m] : p.values)
    out[name] = (m.rows() == 1 && m.cols() == 1) ? to_json(m(0, 0)) : to_json(m);
  return out;
}

catalog::ParamSet params_from_json(const Json& j) {
  catalog::ParamSet p;
  for (const auto& [name, v] : j.items()) p.set(name, matrix_from_json(v));
  return p;
}

Json to_json(const catalog::IsoWitness& w) {
  Json out;
  out["tau"] = w.tau;
  for (const auto& [name, m] : w.values)
    out[name] = (m.rows() == 1 && m.cols() == 1) ? to_json(m(0, 0)) : to_json(m);
  return out;
}

catalog::IsoWitness witness_from_json(const Json& j) {
  catalog::IsoWitness w;
  for (const auto& [name, v] : j.items()) {
    if (name == "tau")
      w.tau = v.get<int>();
    else
      w.values[name] = matrix_from_json(v);
  }
  return w;
}

}  // namespace hopflift::io
