// Copyright 2026 The qgavg developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "qgavg/gallery.hpp"

namespace qgavg {

// nlohmann::json with the default std::map object type: keys serialize in
// sorted order, which is what makes dumps canonical.
using Json = nlohmann::json;

inline constexpr const char* kDocVersion = "1";

// ---- scalars ---------------------------------------------------------------

namespace detail {

inline BigRational rational_from_string(const std::string& s) {
  try {
    return BigRational(s);
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, "bad rational literal '" + s + "'");
  }
}

template <class S>
S scalar_part_from_json(const Json& v) {
  using T = ScalarTraits<S>;
  if (v.is_number_integer()) return T::from_int(v.get<long long>());
  if (v.is_number_float()) {
    if constexpr (T::exact) {
      return S{BigRational(v.get<double>())};
    } else {
      return S{v.get<double>(), 0.0};
    }
  }
  if (v.is_string()) {
    BigRational r = rational_from_string(v.get<std::string>());
    if constexpr (T::exact) {
      return S{r};
    } else {
      return S{r.convert_to<double>(), 0.0};
    }
  }
  throw Error(Errc::ParseError, "scalar component must be a number or 'p/q' string");
}

}  // namespace detail

/// A scalar is [re, im]; a bare number or "p/q" string is accepted as a real
/// scalar on input.
template <class S>
S scalar_from_json(const Json& v) {
  if (v.is_array()) {
    require(v.size() == 2, Errc::ParseError, "complex scalar must be a [re, im] pair");
    S re = detail::scalar_part_from_json<S>(v[0]);
    S im = detail::scalar_part_from_json<S>(v[1]);
    if constexpr (ScalarTraits<S>::exact) {
      return S{re.re, im.re};
    } else {
      return S{re.real(), im.real()};
    }
  }
  return detail::scalar_part_from_json<S>(v);
}

inline Json scalar_to_json(const Complex& v) { return Json::array({v.real(), v.imag()}); }

inline Json scalar_to_json(const GaussianRational& v) {
  return Json::array({rational_to_string(v.re), rational_to_string(v.im)});
}

// ---- containers ------------------------------------------------------------

template <class S>
Vec<S> vec_from_json(const Json& j, std::size_t n, const char* what) {
  require(j.is_array() && j.size() == n, Errc::Inconsistent,
          std::string(what) + ": expected array of length " + std::to_string(n));
  Vec<S> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = scalar_from_json<S>(j[i]);
  return v;
}

template <class S>
Mat<S> mat_from_json(const Json& j, std::size_t rows, std::size_t cols, const char* what) {
  require(j.is_array() && j.size() == rows, Errc::Inconsistent,
          std::string(what) + ": expected " + std::to_string(rows) + " rows");
  Mat<S> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    Vec<S> row = vec_from_json<S>(j[r], cols, what);
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = row[c];
  }
  return m;
}

template <class S>
Tensor3<S> tensor3_from_json(const Json& j, std::size_t n0, std::size_t n1, std::size_t n2,
                             const char* what) {
  require(j.is_array() && j.size() == n0, Errc::Inconsistent,
          std::string(what) + ": bad tensor shape");
  Tensor3<S> t(n0, n1, n2);
  for (std::size_t i = 0; i < n0; ++i) {
    Mat<S> slab = mat_from_json<S>(j[i], n1, n2, what);
    for (std::size_t a = 0; a < n1; ++a)
      for (std::size_t b = 0; b < n2; ++b) t.at(i, a, b) = slab.at(a, b);
  }
  return t;
}

template <class S>
Json vec_to_json(const Vec<S>& v) {
  Json out = Json::array();
  for (const S& x : v) out.push_back(scalar_to_json(x));
  return out;
}

template <class S>
Json mat_to_json(const Mat<S>& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols; ++c) row.push_back(scalar_to_json(m.at(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

template <class S>
Json tensor3_to_json(const Tensor3<S>& t) {
  Json out = Json::array();
  for (std::size_t i = 0; i < t.n0; ++i) {
    Json slab = Json::array();
    for (std::size_t a = 0; a < t.n1; ++a) {
      Json row = Json::array();
      for (std::size_t b = 0; b < t.n2; ++b) row.push_back(scalar_to_json(t.at(i, a, b)));
      slab.push_back(std::move(row));
    }
    out.push_back(std::move(slab));
  }
  return out;
}

// ---- documents ------------------------------------------------------------

/// Explicit (non-universal) calculus tensors as stored in documents.
template <class S>
struct ExplicitCalculus {
  std::size_t module_dim = 0;
  Tensor3<S> left;
  Tensor3<S> right;
  Mat<S> diff;
};

template <class S>
struct ParsedDoc {
  AlgebraPtr<S> algebra;
  std::optional<HopfData<S>> hopf;       // haar field left empty; see file_haar
  std::optional<Vec<S>> file_haar;       // Haar coefficients supplied by the file
  std::optional<Mat<S>> alpha;           // coaction matrix
  bool universal = true;
  std::optional<ExplicitCalculus<S>> explicit_calc;
  std::optional<std::vector<Vec<S>>> metric_gram;  // module_dim^2 entries
  std::optional<std::size_t> metric_dim;
  std::optional<GroupProvenance> provenance;
  double tolerance = 1e-9;

  Coaction<S> make_coaction() const {
    require(hopf.has_value() && alpha.has_value(), Errc::Inconsistent,
            "document has no coaction");
    Coaction<S> c;
    c.base = algebra;
    c.cqg = *hopf;
    c.alpha = *alpha;
    c.provenance = provenance;
    return c;
  }

  Calculus<S> make_calculus(double tol) const {
    if (universal) return universal_calculus(algebra, tol);
    const ExplicitCalculus<S>& e = *explicit_calc;
    Calculus<S> c;
    c.base = algebra;
    c.module_dim = e.module_dim;
    c.left = e.left;
    c.right = e.right;
    c.diff = e.diff;
    return c;
  }

  InnerProduct<S> make_metric(Calculus<S> calc) const {
    require(metric_gram.has_value(), Errc::Inconsistent, "document has no metric");
    require(*metric_dim == calc.module_dim, Errc::Inconsistent,
            "metric gram does not match the calculus dimension");
    InnerProduct<S> g;
    g.calculus = std::move(calc);
    g.gram = *metric_gram;
    return g;
  }
};

inline std::string backend_field_of(const Json& doc) {
  require(doc.is_object(), Errc::ParseError, "document is not an object");
  if (!doc.contains("scalar_backend")) return "float";
  require(doc["scalar_backend"].is_string(), Errc::ParseError, "scalar_backend must be a string");
  std::string b = doc["scalar_backend"].get<std::string>();
  require(b == "float" || b == "rational", Errc::ParseError,
          "scalar_backend must be 'float' or 'rational'");
  return b;
}

template <class S>
ParsedDoc<S> parse_document(const Json& doc) {
  require(doc.is_object(), Errc::ParseError, "document is not an object");
  require(doc.contains("version") && doc["version"].is_string() &&
              doc["version"].get<std::string>() == kDocVersion,
          Errc::ParseError, "unrecognized document version");
  (void)backend_field_of(doc);
  require(doc.contains("algebra") && doc["algebra"].is_object(), Errc::ParseError,
          "document has no algebra");

  ParsedDoc<S> out;
  const Json& ja = doc["algebra"];
  require(ja.contains("dim") && ja["dim"].is_number_unsigned(), Errc::ParseError,
          "algebra.dim missing");
  const std::size_t n = ja["dim"].get<std::size_t>();
  require(n >= 1, Errc::Inconsistent, "algebra.dim must be positive");
  StarAlgebra<S> a;
  a.dim = n;
  if (ja.contains("basis_labels")) {
    require(ja["basis_labels"].is_array() && ja["basis_labels"].size() == n, Errc::Inconsistent,
            "basis_labels length mismatch");
    for (const auto& l : ja["basis_labels"]) a.basis_labels.push_back(l.get<std::string>());
  } else {
    for (std::size_t i = 0; i < n; ++i) a.basis_labels.push_back("e" + std::to_string(i));
  }
  require(ja.contains("mult") && ja.contains("unit") && ja.contains("star"), Errc::ParseError,
          "algebra needs mult, unit and star");
  a.mult = tensor3_from_json<S>(ja["mult"], n, n, n, "algebra.mult");
  a.unit = vec_from_json<S>(ja["unit"], n, "algebra.unit");
  a.star = mat_from_json<S>(ja["star"], n, n, "algebra.star");
  out.algebra = make_algebra(std::move(a));

  if (doc.contains("hopf")) {
    const Json& jh = doc["hopf"];
    require(jh.is_object(), Errc::ParseError, "hopf must be an object");
    HopfData<S> H;
    if (jh.contains("algebra")) {
      // CQG algebra distinct from the base (e.g. C(G) acting on C(X)).
      const Json& jq = jh["algebra"];
      require(jq.is_object() && jq.contains("dim"), Errc::ParseError, "hopf.algebra malformed");
      std::size_t nq = jq["dim"].get<std::size_t>();
      require(nq >= 1, Errc::Inconsistent, "hopf.algebra.dim must be positive");
      StarAlgebra<S> q;
      q.dim = nq;
      if (jq.contains("basis_labels")) {
        require(jq["basis_labels"].is_array() && jq["basis_labels"].size() == nq,
                Errc::Inconsistent, "hopf basis_labels length mismatch");
        for (const auto& l : jq["basis_labels"]) q.basis_labels.push_back(l.get<std::string>());
      } else {
        for (std::size_t i = 0; i < nq; ++i) q.basis_labels.push_back("q" + std::to_string(i));
      }
      require(jq.contains("mult") && jq.contains("unit") && jq.contains("star"), Errc::ParseError,
              "hopf.algebra needs mult, unit and star");
      q.mult = tensor3_from_json<S>(jq["mult"], nq, nq, nq, "hopf.algebra.mult");
      q.unit = vec_from_json<S>(jq["unit"], nq, "hopf.algebra.unit");
      q.star = mat_from_json<S>(jq["star"], nq, nq, "hopf.algebra.star");
      H.algebra = make_algebra(std::move(q));
    } else {
      H.algebra = out.algebra;
    }
    const std::size_t nq = H.algebra->dim;
    require(jh.contains("coproduct") && jh.contains("counit") && jh.contains("antipode"),
            Errc::ParseError, "hopf needs coproduct, counit and antipode");
    H.coproduct = mat_from_json<S>(jh["coproduct"], nq * nq, nq, "hopf.coproduct");
    H.counit.coeffs = vec_from_json<S>(jh["counit"], nq, "hopf.counit");
    H.antipode = mat_from_json<S>(jh["antipode"], nq, nq, "hopf.antipode");
    if (jh.contains("haar"))
      out.file_haar = vec_from_json<S>(jh["haar"], nq, "hopf.haar");
    out.hopf = std::move(H);
  }

  if (doc.contains("coaction")) {
    require(out.hopf.has_value(), Errc::Inconsistent, "coaction requires a hopf block");
    const Json& jc = doc["coaction"];
    require(jc.is_object() && jc.contains("alpha"), Errc::ParseError, "coaction needs alpha");
    out.alpha =
        mat_from_json<S>(jc["alpha"], n * out.hopf->algebra->dim, n, "coaction.alpha");
  }

  if (doc.contains("calculus")) {
    const Json& jc = doc["calculus"];
    if (jc.is_string()) {
      require(jc.get<std::string>() == "universal", Errc::ParseError,
              "calculus must be 'universal' or explicit tensors");
      out.universal = true;
    } else {
      require(jc.is_object() && jc.contains("module_dim"), Errc::ParseError,
              "explicit calculus needs module_dim");
      ExplicitCalculus<S> e;
      e.module_dim = jc["module_dim"].get<std::size_t>();
      e.left = tensor3_from_json<S>(jc["left"], n, e.module_dim, e.module_dim, "calculus.left");
      e.right = tensor3_from_json<S>(jc["right"], e.module_dim, n, e.module_dim, "calculus.right");
      e.diff = mat_from_json<S>(jc["diff"], e.module_dim, n, "calculus.diff");
      out.universal = false;
      out.explicit_calc = std::move(e);
    }
  }

  if (doc.contains("metric")) {
    const Json& jm = doc["metric"];
    require(jm.is_object() && jm.contains("gram"), Errc::ParseError, "metric needs gram");
    const Json& jg = jm["gram"];
    require(jg.is_array() && !jg.empty(), Errc::Inconsistent, "metric.gram empty");
    std::size_t m = jg.size();
    std::vector<Vec<S>> gram;
    gram.reserve(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      require(jg[i].is_array() && jg[i].size() == m, Errc::Inconsistent,
              "metric.gram must be square");
      for (std::size_t j = 0; j < m; ++j)
        gram.push_back(vec_from_json<S>(jg[i][j], n, "metric.gram entry"));
    }
    out.metric_gram = std::move(gram);
    out.metric_dim = m;
  }

  if (doc.contains("group_provenance")) {
    const Json& jp = doc["group_provenance"];
    require(jp.is_object() && jp.contains("group") && jp.contains("action"), Errc::ParseError,
            "group_provenance needs group and action tables");
    GroupProvenance prov;
    prov.group = jp["group"].get<std::vector<std::vector<int>>>();
    prov.action = jp["action"].get<std::vector<std::vector<int>>>();
    std::string convention = "inverse";
    if (jp.contains("convention")) convention = jp["convention"].get<std::string>();
    require(convention == "inverse" || convention == "direct", Errc::ParseError,
            "convention must be 'inverse' or 'direct'");
    validate_action(prov.group, prov.action);
    if (convention == "direct") {
      // Documents written with alpha(delta_x) = sum_g delta_{g.x} (x) delta_g
      // match ours after relabeling each g-row by g^{-1}.
      auto inv = group_inverses(prov.group);
      ActionTable fixed(prov.action.size());
      for (std::size_t g = 0; g < prov.action.size(); ++g) fixed[g] = prov.action[inv[g]];
      prov.action = std::move(fixed);
    }
    out.provenance = std::move(prov);
  }

  if (doc.contains("tolerance")) {
    require(doc["tolerance"].is_number(), Errc::ParseError, "tolerance must be a number");
    out.tolerance = doc["tolerance"].get<double>();
    require(out.tolerance > 0, Errc::Inconsistent, "tolerance must be positive");
  }
  return out;
}

// ---- serialization ---------------------------------------------------------

template <class S>
Json algebra_to_json(const StarAlgebra<S>& a) {
  Json j;
  j["dim"] = a.dim;
  j["basis_labels"] = a.basis_labels;
  j["mult"] = tensor3_to_json(a.mult);
  j["unit"] = vec_to_json(a.unit);
  j["star"] = mat_to_json(a.star);
  return j;
}

template <class S>
Json hopf_to_json(const HopfData<S>& h, bool embed_algebra = false) {
  Json j;
  if (embed_algebra) j["algebra"] = algebra_to_json(*h.algebra);
  j["coproduct"] = mat_to_json(h.coproduct);
  j["counit"] = vec_to_json(h.counit.coeffs);
  j["antipode"] = mat_to_json(h.antipode);
  if (h.haar) j["haar"] = vec_to_json(h.haar->coeffs);
  return j;
}

inline Json provenance_to_json(const GroupProvenance& p) {
  Json j;
  j["group"] = p.group;
  j["action"] = p.action;
  j["convention"] = "inverse";
  return j;
}

template <class S>
Json metric_to_json(const std::vector<Vec<S>>& gram, std::size_t m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m; ++j) row.push_back(vec_to_json(gram[i * m + j]));
    rows.push_back(std::move(row));
  }
  Json j;
  j["gram"] = std::move(rows);
  return j;
}

/// Whole-document serializer used by the gallery generator and `average`.
template <class S>
Json document_to_json(const Coaction<S>& co, const std::optional<InnerProduct<S>>& metric,
                      double tolerance) {
  Json doc;
  doc["version"] = kDocVersion;
  doc["scalar_backend"] = ScalarTraits<S>::backend_name;
  doc["tolerance"] = tolerance;
  doc["algebra"] = algebra_to_json(*co.base);
  doc["hopf"] = hopf_to_json(co.cqg, co.cqg.algebra.get() != co.base.get());
  doc["coaction"] = Json{{"alpha", mat_to_json(co.alpha)}};
  doc["calculus"] = "universal";
  if (metric) doc["metric"] = metric_to_json(metric->gram, metric->calculus.module_dim);
  if (co.provenance) doc["group_provenance"] = provenance_to_json(*co.provenance);
  return doc;
}

/// Canonical dump: sorted keys (json object order), two-space indent,
/// trailing newline. Canonical documents round-trip byte-identically.
inline std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Errc::ParseError, "cannot open '" + path + "'");
  try {
    Json j;
    in >> j;
    return j;
  } catch (const std::exception& e) {
    throw Error(Errc::ParseError, std::string("invalid document: ") + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), Errc::ParseError, "cannot write '" + path + "'");
  out << text;
}

}  // namespace qgavg
