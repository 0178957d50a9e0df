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

// Compares the serial reference kernels with the OpenMP path on the heavier
// check workloads and prints timings plus the worst residual disagreement
// (which must be exactly zero: the reductions are order-independent).

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#include "qgavg/gallery.hpp"

namespace {

using namespace qgavg;
using Clock = std::chrono::steady_clock;

double run_ms(const std::function<void()>& fn, int reps) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto t0 = Clock::now();
    fn();
    auto t1 = Clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

struct Case {
  const char* name;
  std::function<std::vector<Report>(const exec::Context&)> run;
};

void bench(const Case& c, int reps) {
  std::vector<Report> serial_reports, parallel_reports;
  double t_serial = run_ms([&] { serial_reports = c.run(exec::serial_context()); }, reps);
  double t_par = run_ms([&] { parallel_reports = c.run(exec::parallel_context()); }, reps);
  double drift = 0.0;
  for (std::size_t i = 0; i < serial_reports.size(); ++i)
    drift = std::max(drift,
                     std::abs(serial_reports[i].residual - parallel_reports[i].residual));
  std::printf("%-34s serial %8.2f ms   omp %8.2f ms   speedup %4.2fx   drift %g\n", c.name,
              t_serial, t_par, t_serial / t_par, drift);
}

}  // namespace

int main(int argc, char** argv) {
  int reps = 3;
  long trials = 200;
  CLI::App app{"serial vs OpenMP timing of the check kernels"};
  app.add_option("--reps", reps, "repetitions per case (best-of)")->capture_default_str();
  app.add_option("--trials", trials, "CP trials in the psi benchmark")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  std::printf("OpenMP enabled, %d threads\n", exec::parallel_context().resolved_threads());
#else
  std::printf("built without OpenMP: both columns run the serial path\n");
#endif

  auto hs3 = build_group_algebra<Complex>(symmetric_group3_table());
  auto cs3 = build_function_algebra_of_group<Complex>(symmetric_group3_table());
  StarAlgebra<Complex> big = tensor_algebra(*cs3.algebra, *cs3.algebra);
  auto co = build_regular_coaction(hs3);
  auto calc = universal_calculus(co.base);
  auto lift = lift_coaction(co, calc);
  auto metric = seeded_row_metric(calc, 42);

  std::vector<Case> cases;
  cases.push_back({"algebra axioms, dim 36 tensor", [&](const exec::Context& cx) {
                     return check_algebra_axioms(big, 1e-9, cx);
                   }});
  cases.push_back({"hopf axioms, C(S3)", [&](const exec::Context& cx) {
                     return check_hopf_axioms(cs3, 1e-9, cx);
                   }});
  cases.push_back({"T-transform, C[S3]", [&](const exec::Context& cx) {
                     return check_T_transform_identity(hs3, 1e-9, cx);
                   }});
  cases.push_back({"lift invariants, C[S3] regular", [&](const exec::Context& cx) {
                     return check_lift_invariants(lift, 1e-9, cx);
                   }});
  cases.push_back({"average + equivariance, C[S3]", [&](const exec::Context& cx) {
                     auto gavg = average_inner_product(lift, metric, 1e-9, cx);
                     return check_equivariance(lift, gavg, 1e-9, cx);
                   }});
  cases.push_back({"psi CP trials, C[S3] regular", [&](const exec::Context& cx) {
                     return psi_cp_check(co, trials, 1e-9, 0, cx);
                   }});

  for (const Case& c : cases) bench(c, reps);
  return 0;
}
