// Copyright 2026 The cpfkit Authors
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

// Compares the OpenMP kernels against their serial reference
// implementations: wall time, speedup, and the entrywise difference
// (expected to be exactly zero -- both variants accumulate in the same
// order).

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"

#include "cpf/channels.hpp"
#include "cpf/kernels.hpp"
#include "cpf/receiver.hpp"

namespace {

using cpf::ComplexMatrix;
using clock_type = std::chrono::steady_clock;

ComplexMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> dist;
  ComplexMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      m(r, c) = {dist(rng), dist(rng)};
    }
  }
  return m;
}

ComplexMatrix random_density_like(std::size_t n, std::mt19937_64& rng) {
  ComplexMatrix g = random_matrix(n, rng);
  ComplexMatrix h = cpf::kernels::serial::matmul_adjoint_rhs(g, g);
  const double tr = h.trace().real();
  h *= 1.0 / tr;
  return h;
}

double time_of(const std::function<void()>& fn, int reps) {
  const auto start = clock_type::now();
  for (int i = 0; i < reps; ++i) fn();
  const auto stop = clock_type::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

void report(const char* name, double serial_ms, double parallel_ms,
            double max_diff) {
  std::printf("%-22s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   "
              "max|diff| %g\n",
              name, serial_ms, parallel_ms, serial_ms / parallel_ms, max_diff);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kernel benchmark: OpenMP vs serial reference"};
  std::size_t dim = 256;
  int qubits = 9;
  long long trials = 200000;
  int reps = 3;
  app.add_option("--dim", dim, "matrix dimension for matmul/kraus");
  app.add_option("--qubits", qubits, "qubit count for the local-apply kernel");
  app.add_option("--trials", trials, "Monte Carlo trials");
  app.add_option("--reps", reps, "repetitions per measurement");
  CLI11_PARSE(app, argc, argv);

  std::printf("threads: %d\n", omp_get_max_threads());
  std::mt19937_64 rng(12345);

  {
    const ComplexMatrix a = random_matrix(dim, rng);
    const ComplexMatrix b = random_matrix(dim, rng);
    ComplexMatrix out_s, out_p;
    const double ts = time_of([&] { out_s = cpf::kernels::serial::matmul(a, b); }, reps);
    const double tp = time_of([&] { out_p = cpf::kernels::matmul(a, b); }, reps);
    report("matmul", ts, tp, out_s.max_abs_diff(out_p));
  }

  {
    const std::size_t half = dim / 8;
    const ComplexMatrix a = random_matrix(half, rng);
    const ComplexMatrix b = random_matrix(half, rng);
    ComplexMatrix out_s, out_p;
    const double ts = time_of([&] { out_s = cpf::kernels::serial::kron(a, b); }, reps);
    const double tp = time_of([&] { out_p = cpf::kernels::kron(a, b); }, reps);
    report("kron", ts, tp, out_s.max_abs_diff(out_p));
  }

  {
    const ComplexMatrix rho = random_density_like(dim, rng);
    const auto ch = cpf::adc(cpf::DampingRate(0.35));
    const auto lifted =
        cpf::lift(ch, 0, 1, 2);  // 2x2; embed via kron against identity
    std::vector<ComplexMatrix> ops;
    const ComplexMatrix eye = ComplexMatrix::identity(dim / 2);
    for (const auto& k : lifted.ops()) ops.push_back(cpf::kernels::kron(k, eye));
    ComplexMatrix out_s, out_p;
    const double ts =
        time_of([&] { out_s = cpf::kernels::serial::kraus_apply(ops, rho); }, reps);
    const double tp =
        time_of([&] { out_p = cpf::kernels::kraus_apply(ops, rho); }, reps);
    report("kraus_apply", ts, tp, out_s.max_abs_diff(out_p));
  }

  {
    const std::size_t n = std::size_t{1} << qubits;
    const ComplexMatrix rho = random_density_like(n, rng);
    const auto ch = cpf::adc(cpf::DampingRate(0.35));
    ComplexMatrix out_s, out_p;
    const double ts = time_of(
        [&] {
          out_s = cpf::kernels::serial::apply_single_qubit_kraus(
              rho, ch.ops(), static_cast<std::size_t>(qubits / 2),
              static_cast<std::size_t>(qubits));
        },
        reps);
    const double tp = time_of(
        [&] {
          out_p = cpf::kernels::apply_single_qubit_kraus(
              rho, ch.ops(), static_cast<std::size_t>(qubits / 2),
              static_cast<std::size_t>(qubits));
        },
        reps);
    report("single_qubit_kraus", ts, tp, out_s.max_abs_diff(out_p));
  }

  {
    const cpf::ReceiverModel model(0.9, 0.4);
    cpf::SimResult r_serial{}, r_parallel{};
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const double ts = time_of(
        [&] { r_serial = cpf::simulate_receiver(10, 10, model, trials, 7); },
        reps);
    omp_set_num_threads(saved);
    const double tp = time_of(
        [&] { r_parallel = cpf::simulate_receiver(10, 10, model, trials, 7); },
        reps);
    report("monte_carlo", ts, tp,
           static_cast<double>(r_serial.errors - r_parallel.errors));
  }

  return 0;
}
