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

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <string>

#include "qgavg/suites.hpp"

namespace {

using namespace qgavg;

struct Args {
  std::string command;
  std::string file;
  std::string out;
  std::string suite = "all";
  std::string backend;  // empty: take it from the document
  double tol = 1e-9;
  long samples = 100;
  std::uint64_t seed = 0;
  int threads = 1;
  bool json = false;
};

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

void print_reports(const std::vector<Report>& reps, bool json) {
  for (const Report& r : reps) {
    if (json) {
      Json j;
      j["name"] = r.name;
      j["pass"] = r.pass;
      j["residual"] = r.residual;
      if (r.witness)
        j["witness"] = Json::array({r.witness->real(), r.witness->imag()});
      else
        j["witness"] = nullptr;
      j["notes"] = r.notes;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name
                << "  residual=" << format_double(r.residual);
      if (r.witness) std::cout << "  witness=" << format_double(r.witness->real());
      if (!r.notes.empty()) std::cout << "  (" << r.notes << ")";
      std::cout << "\n";
    }
  }
}

int finish(const std::vector<Report>& reps, const Args& args) {
  print_reports(reps, args.json);
  std::size_t failed = 0;
  for (const Report& r : reps)
    if (!r.pass) ++failed;
  if (!args.json) {
    if (failed == 0)
      std::cout << "ok: " << reps.size() << " checks passed\n";
    else
      std::cout << "FAIL: " << failed << " of " << reps.size() << " checks failed\n";
  }
  return failed == 0 ? 0 : 1;
}

template <class S>
int run_command(const Args& args, const Json& jdoc) {
  ParsedDoc<S> doc = parse_document<S>(jdoc);
  SuiteOptions opt;
  opt.tol = args.tol;
  opt.samples = args.samples;
  opt.seed = args.seed;
  opt.cx = exec::Context{args.threads};

  if (args.command == "validate") {
    return finish(run_suite(doc, "validate", opt), args);
  }
  if (args.command == "verify") {
    return finish(run_suite(doc, args.suite, opt), args);
  }
  if (args.command == "oracle") {
    return finish(run_oracle_comparison(doc, opt), args);
  }
  if (args.command == "haar") {
    require(doc.hopf.has_value(), Errc::Inconsistent, "document has no hopf block");
    Functional<S> h = compute_haar(*doc.hopf, opt.tol);
    if (args.json) {
      Json j;
      j["haar"] = vec_to_json(h.coeffs);
      j["labels"] = doc.hopf->algebra->basis_labels;
      std::cout << j.dump() << "\n";
    } else {
      const auto& labels = doc.hopf->algebra->basis_labels;
      for (std::size_t i = 0; i < h.coeffs.size(); ++i) {
        Complex v = ScalarTraits<S>::to_complex(h.coeffs[i]);
        std::cout << "h(" << labels[i] << ") = " << format_double(v.real());
        if (v.imag() != 0.0) std::cout << " + " << format_double(v.imag()) << "i";
        std::cout << "\n";
      }
    }
    if (doc.file_haar) {
      ResidualMax<S> r;
      r.add_norm2(norm2_max(sub(h.coeffs, *doc.file_haar)));
      if (!r.within(opt.tol)) {
        std::cerr << "haar in document differs from the computed one (residual "
                  << format_double(r.value()) << ")\n";
        return 1;
      }
    }
    return 0;
  }
  if (args.command == "average") {
    Coaction<S> co = doc.make_coaction();
    co.cqg.haar = compute_haar(co.cqg, opt.tol);
    Calculus<S> calc = doc.make_calculus(opt.tol);
    LiftedCoaction<S> lift = lift_coaction(co, calc, opt.tol, opt.cx);
    InnerProduct<S> g = doc.make_metric(calc);
    InnerProduct<S> gavg = average_inner_product(lift, g, opt.tol, opt.cx);
    Json frag;
    frag["version"] = kDocVersion;
    frag["scalar_backend"] = ScalarTraits<S>::backend_name;
    frag["tolerance"] = opt.tol;
    frag["metric"] = metric_to_json(gavg.gram, gavg.calculus.module_dim);
    std::string text = canonical_dump(frag);
    if (args.out.empty())
      std::cout << text;
    else
      write_text_file(args.out, text);
    return 0;
  }
  throw Error(Errc::Inconsistent, "unknown command " + args.command);
}

}  // namespace

int main(int argc, char** argv) {
  Args args;
  CLI::App app{"Averaging toolkit for compact-quantum-group coactions on "
               "finite-dimensional *-algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tol", args.tol, "residual tolerance")->capture_default_str();
  app.add_option("--samples", args.samples, "random trials for the CP check")
      ->capture_default_str();
  app.add_option("--seed", args.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--backend", args.backend, "scalar backend: rational|float")
      ->check(CLI::IsMember({"rational", "float"}));
  app.add_option("--threads", args.threads,
                 "worker threads for check kernels (1 = serial, 0 = all cores)")
      ->capture_default_str();
  app.add_flag("--json", args.json, "emit one JSON object per report");

  auto add_cmd = [&](const char* name, const char* desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("file", args.file, "document file")->required();
    return sub;
  };
  add_cmd("validate", "run the algebra/hopf/coaction suites");
  add_cmd("haar", "compute and print the Haar functional");
  CLI::App* avg = add_cmd("average", "average the document's metric and emit it");
  avg->add_option("--out", args.out, "output path (default stdout)");
  CLI::App* ver = add_cmd("verify", "run a named check suite");
  ver->add_option("--suite", args.suite, "all|hopf|coaction|calculus|lemmas|theorem")
      ->check(CLI::IsMember({"all", "hopf", "coaction", "calculus", "lemmas", "theorem"}))
      ->capture_default_str();
  add_cmd("oracle", "compare averaging with the classical orbit average");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  args.command = app.get_subcommands().front()->get_name();

  try {
    qgavg::Json jdoc = qgavg::read_json_file(args.file);
    std::string backend = args.backend.empty() ? qgavg::backend_field_of(jdoc) : args.backend;
    if (backend == "rational") return run_command<qgavg::GaussianRational>(args, jdoc);
    return run_command<qgavg::Complex>(args, jdoc);
  } catch (const qgavg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code) {
      case qgavg::Errc::ParseError:
      case qgavg::Errc::Inconsistent:
      case qgavg::Errc::NotAGroup:
      case qgavg::Errc::NotAnAction:
      case qgavg::Errc::NotClassical:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
