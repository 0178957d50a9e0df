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

#include "qgavg/document.hpp"

namespace qgavg {

struct SuiteOptions {
  double tol = 1e-9;
  long samples = 100;
  std::uint64_t seed = 0;
  exec::Context cx{};
};

inline bool known_suite(const std::string& s) {
  return s == "all" || s == "validate" || s == "hopf" || s == "coaction" || s == "calculus" ||
         s == "lemmas" || s == "theorem";
}

namespace detail {

/// Runs body(), converting a thrown operation error into one failed report.
template <class F>
void guarded(std::vector<Report>& reps, const std::string& fail_name, F&& body) {
  try {
    body();
  } catch (const Error& e) {
    reps.push_back(flag_report(fail_name, false, e.what()));
  }
}

template <class S>
std::optional<HopfData<S>> hopf_with_haar(const ParsedDoc<S>& doc, const SuiteOptions& opt,
                                          std::vector<Report>& reps, bool emit_reports) {
  if (!doc.hopf) return std::nullopt;
  HopfData<S> H = *doc.hopf;
  try {
    H.haar = compute_haar(H, opt.tol);
  } catch (const Error& e) {
    if (emit_reports) reps.push_back(flag_report("haar.computed", false, e.what()));
    return std::nullopt;
  }
  if (emit_reports) {
    reps.push_back(flag_report("haar.computed", true));
    if (doc.file_haar) {
      ResidualMax<S> r;
      r.add_norm2(norm2_max(sub(H.haar->coeffs, *doc.file_haar)));
      reps.push_back(residual_report("haar.document_matches", r, opt.tol,
                                     "file Haar cross-checked against the computed one"));
    }
  }
  return H;
}

}  // namespace detail

/// Runs one named suite on a parsed document and returns reports sorted by
/// check name. Components a suite needs but the document lacks are skipped
/// under "all"/"validate" and rejected otherwise.
template <class S>
std::vector<Report> run_suite(const ParsedDoc<S>& doc, const std::string& suite,
                              const SuiteOptions& opt) {
  require(known_suite(suite), Errc::Inconsistent, "unknown suite '" + suite + "'");
  const bool lenient = suite == "all" || suite == "validate";
  const double tol = opt.tol;
  std::vector<Report> reps;

  auto demand = [&](bool have, const char* what) {
    if (!have) {
      require(lenient, Errc::Inconsistent,
              std::string("suite '") + suite + "' needs a " + what + " block");
      return false;
    }
    return true;
  };

  const bool want_hopf = suite == "all" || suite == "validate" || suite == "hopf";
  const bool want_coaction = suite == "all" || suite == "validate" || suite == "coaction";
  const bool want_calculus = suite == "all" || suite == "calculus";
  const bool want_lemmas = suite == "all" || suite == "lemmas";
  const bool want_theorem = suite == "all" || suite == "theorem";

  if (suite == "all" || suite == "validate")
    append(reps, prefixed("base.", check_algebra_axioms(*doc.algebra, tol, opt.cx)));

  if (want_hopf && demand(doc.hopf.has_value(), "hopf")) {
    append(reps, prefixed("hopf.algebra_", check_algebra_axioms(*doc.hopf->algebra, tol, opt.cx)));
    append(reps, prefixed("hopf.", check_hopf_axioms(*doc.hopf, tol, opt.cx)));
    auto H = detail::hopf_with_haar(doc, opt, reps, /*emit_reports=*/true);
    if (H) {
      append(reps, prefixed("haar.", check_haar_invariance(*H, tol, opt.cx)));
      append(reps, prefixed("haar.", gram_check(*H->haar, *H->algebra, tol)));
      append(reps, prefixed("haar.", check_traciality(*H, tol, opt.cx)));
      append(reps, prefixed("haar.", check_haar_antipode_invariance(*H, tol, opt.cx)));
      append(reps, prefixed("hopf.", check_counit_antipode(*H, tol, opt.cx)));
    }
  }

  // Pieces below share the Haar-completed coaction.
  std::optional<Coaction<S>> co;
  if (doc.hopf && doc.alpha) {
    std::vector<Report> scratch;
    auto H = detail::hopf_with_haar(doc, opt, scratch, /*emit_reports=*/false);
    if (H) {
      co = doc.make_coaction();
      co->cqg = *H;
    }
  }

  if (want_coaction && demand(doc.alpha.has_value(), "coaction")) {
    if (co) {
      append(reps, prefixed("coaction.", check_coaction_axioms(*co, tol, opt.cx)));
      append(reps, prefixed("coaction.", check_faithfulness(*co, tol)));
      append(reps, prefixed("coaction.", check_injectivity(*co, tol)));
      append(reps, prefixed("coaction.", check_haar_slice_idempotent(*co, tol)));
    } else {
      reps.push_back(flag_report("coaction.prerequisites", false,
                                 "Haar functional could not be computed"));
    }
  }

  std::optional<Calculus<S>> calc;
  std::optional<LiftedCoaction<S>> lift;
  auto need_lift = [&]() {
    if (lift) return true;
    if (!co) return false;
    if (!calc) calc = doc.make_calculus(tol);
    lift = lift_coaction(*co, *calc, tol, opt.cx);
    return true;
  };

  if (want_calculus) {
    detail::guarded(reps, "calculus.constructed", [&] {
      if (!calc) calc = doc.make_calculus(tol);
      append(reps, prefixed("calculus.", check_calculus_axioms(*calc, tol, opt.cx)));
    });
    if (calc && co) {
      detail::guarded(reps, "lift.covariant", [&] {
        need_lift();
        append(reps, prefixed("lift.", check_lift_invariants(*lift, tol, opt.cx)));
        append(reps, prefixed("lift.", check_counit_section(*lift, tol, opt.cx)));
      });
    }
  }

  if (want_lemmas && demand(doc.hopf.has_value(), "hopf")) {
    std::vector<Report> scratch;
    auto H = detail::hopf_with_haar(doc, opt, scratch, /*emit_reports=*/false);
    if (H) {
      append(reps, prefixed("lemmas.", check_sweedler_inverse_identity(*H, tol, opt.cx)));
      append(reps, prefixed("lemmas.", check_T_transform_identity(*H, tol, opt.cx)));
    } else {
      reps.push_back(flag_report("lemmas.prerequisites", false,
                                 "Haar functional could not be computed"));
    }
    if (co) {
      detail::guarded(reps, "lemmas.psi_cp", [&] {
        append(reps, prefixed("lemmas.", psi_cp_check(*co, opt.samples, tol, opt.seed, opt.cx)));
      });
    }
    if (doc.metric_gram && (lenient || demand(true, "metric"))) {
      detail::guarded(reps, "lemmas.metric_input", [&] {
        if (!calc) calc = doc.make_calculus(tol);
        InnerProduct<S> g = doc.make_metric(*calc);
        append(reps, prefixed("lemmas.input_", check_hermitian_module(g, tol, opt.cx)));
        if (co) {
          need_lift();
          InnerProduct<S> gavg = average_inner_product(*lift, g, tol, opt.cx);
          append(reps, prefixed("lemmas.averaged_", check_hermitian_module(gavg, tol, opt.cx)));
        }
      });
    }
  }

  if (want_theorem && demand(doc.alpha.has_value() && doc.metric_gram.has_value(),
                             "coaction+metric")) {
    detail::guarded(reps, "theorem.average", [&] {
      require(co.has_value(), Errc::Inconsistent, "Haar functional could not be computed");
      need_lift();
      InnerProduct<S> g = doc.make_metric(*calc);
      InnerProduct<S> gavg = average_inner_product(*lift, g, tol, opt.cx);
      append(reps, prefixed("theorem.", check_equivariance(*lift, gavg, tol, opt.cx)));
      append(reps, prefixed("theorem.", check_definiteness(gavg, tol)));
    });
  }

  sort_by_name(reps);
  return reps;
}

/// Entrywise comparison of quantum averaging against the classical orbit
/// average; needs group provenance.
template <class S>
std::vector<Report> run_oracle_comparison(const ParsedDoc<S>& doc, const SuiteOptions& opt) {
  require(doc.alpha.has_value() && doc.hopf.has_value(), Errc::Inconsistent,
          "oracle needs a coaction");
  require(doc.metric_gram.has_value(), Errc::Inconsistent, "oracle needs a metric");
  require(doc.provenance.has_value(), Errc::NotClassical, "coaction lacks group provenance");
  std::vector<Report> reps;
  Coaction<S> co = doc.make_coaction();
  co.cqg.haar = compute_haar(co.cqg, opt.tol);
  Calculus<S> calc = doc.make_calculus(opt.tol);
  LiftedCoaction<S> lift = lift_coaction(co, calc, opt.tol, opt.cx);
  InnerProduct<S> g = doc.make_metric(calc);
  InnerProduct<S> gavg = average_inner_product(lift, g, opt.tol, opt.cx);
  InnerProduct<S> goracle = classical_average_oracle(g, co);
  ResidualMax<S> r;
  for (std::size_t t = 0; t < gavg.gram.size(); ++t)
    r.add_norm2(norm2_max(sub(gavg.gram[t], goracle.gram[t])));
  reps.push_back(residual_report("oracle.average_matches", r, opt.tol,
                                 "quantum average vs classical orbit average"));
  sort_by_name(reps);
  return reps;
}

}  // namespace qgavg
