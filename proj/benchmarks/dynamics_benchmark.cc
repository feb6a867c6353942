// Copyright 2026 The Werner QND Authors
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

#include <benchmark/benchmark.h>

#include "wqnd/dynamics.h"
#include "wqnd/model_operators.h"
#include "wqnd/protocols.h"
#include "wqnd/quantum_states.h"
#include "wqnd/tensor_algebra.h"

namespace wqnd {
namespace {

DensityMatrix initial_state() { return tensor(werner(0.4), ground_state().projector()); }

void BM_LindbladRhs(benchmark::State& state) {
  const MasterEquation eq(h_eff({}), {probe_decay(0.1)});
  const ComplexMatrix rho = initial_state().matrix();
  ComplexMatrix out(8, 8);
  for (auto _ : state) {
    eq.rhs(rho, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_LindbladRhs);

void BM_Rk4Step(benchmark::State& state) {
  MasterEquation eq(h_eff({}), {probe_decay(0.1)});
  ComplexMatrix rho = initial_state().matrix();
  for (auto _ : state) {
    eq.rk4_step(rho, 1e-3);
    benchmark::DoNotOptimize(rho.data());
  }
}
BENCHMARK(BM_Rk4Step);

void BM_HermitianExpm(benchmark::State& state) {
  const FullModel m = full_hamiltonian(
      FullModelParams::resonant(1.0, 20.0, 10.0, static_cast<int>(state.range(0))));
  for (auto _ : state) {
    ComplexMatrix u = hermitian_expm(m.hamiltonian, 0.3);
    benchmark::DoNotOptimize(u.data());
  }
  state.SetLabel("dim " + std::to_string(m.hamiltonian.rows()));
}
BENCHMARK(BM_HermitianExpm)->Arg(1)->Arg(2)->Arg(3);

void BM_FullModelPropagate(benchmark::State& state) {
  const FullModel m = full_hamiltonian(FullModelParams::resonant(1.0, 20.0, 10.0, 2));
  const HermitianPropagator prop(m.hamiltonian);
  ComplexMatrix rho0 = ComplexMatrix::Zero(m.layout.total_dim(), m.layout.total_dim());
  rho0(0, 0) = 1.0;
  const DensityMatrix start(rho0, m.layout);
  double t = 0.0;
  for (auto _ : state) {
    t += 0.1;
    DensityMatrix out = prop.evolve(start, t);
    benchmark::DoNotOptimize(out.matrix().data());
  }
}
BENCHMARK(BM_FullModelPropagate);

void BM_SequentialRun(benchmark::State& state) {
  SequentialConfig cfg = SequentialConfig::gate_times(1.0, 1.0);
  cfg.gamma = 0.05;
  const DensityMatrix rho = werner(0.5);
  for (auto _ : state) {
    ProtocolReport r = run_sequential(rho, cfg);
    benchmark::DoNotOptimize(r.x_hat);
  }
}
BENCHMARK(BM_SequentialRun)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace wqnd

BENCHMARK_MAIN();
