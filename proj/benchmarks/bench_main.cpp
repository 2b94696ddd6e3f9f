#include <benchmark/benchmark.h>

#include "h2vqe/ansatz.hpp"
#include "h2vqe/backend.hpp"
#include "h2vqe/driver.hpp"
#include "h2vqe/exact.hpp"
#include "h2vqe/fermion.hpp"
#include "h2vqe/scf.hpp"

using namespace h2vqe;

namespace {

const MolecularProblem& problem() {
  static const MolecularProblem p = hydrogen_problem(0.74);
  return p;
}

void BM_HydrogenProblem(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hydrogen_problem(0.74));
}
BENCHMARK(BM_HydrogenProblem);

void BM_QubitHamiltonian(benchmark::State& state) {
  const auto mapping = static_cast<Mapping>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qubit_hamiltonian(problem().integrals, mapping, false));
}
BENCHMARK(BM_QubitHamiltonian)
    ->Arg(static_cast<int>(Mapping::jordan_wigner))
    ->Arg(static_cast<int>(Mapping::parity))
    ->Arg(static_cast<int>(Mapping::bravyi_kitaev));

void BM_SimulateHardwareEfficient(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto c = efficient_su2(n, 3, zero_state(n));
  const std::vector<double> x(c.n_parameters(), 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(simulate(c, x));
}
BENCHMARK(BM_SimulateHardwareEfficient)->Arg(2)->Arg(4)->Arg(8)->Arg(12);

void BM_ExpectationExact(benchmark::State& state) {
  const auto h = qubit_hamiltonian(problem().integrals, Mapping::jordan_wigner, false);
  const auto s = simulate(hartree_fock_circuit(4, 2, Mapping::jordan_wigner, false), {});
  for (auto _ : state) benchmark::DoNotOptimize(expectation_exact(s, h.pauli_sum));
}
BENCHMARK(BM_ExpectationExact);

void BM_ExpectationSampled(benchmark::State& state) {
  const auto h = qubit_hamiltonian(problem().integrals, Mapping::parity, true);
  const auto c = uccsd(4, 2, Mapping::parity, true, 1, hartree_fock_circuit(4, 2, Mapping::parity, true));
  const std::vector<double> x{0.0, 0.0, -0.11};
  std::uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(expectation_sampled(c, x, h.pauli_sum, static_cast<std::uint64_t>(state.range(0)), ++seed));
}
BENCHMARK(BM_ExpectationSampled)->Arg(1024)->Arg(8192);

void BM_LowestEigenvalue(benchmark::State& state) {
  const auto h = qubit_hamiltonian(problem().integrals, Mapping::jordan_wigner, false);
  for (auto _ : state) benchmark::DoNotOptimize(lowest_eigenvalue(h.pauli_sum));
}
BENCHMARK(BM_LowestEigenvalue);

void BM_RunPoint(benchmark::State& state) {
  VqeConfig c;
  c.optimizer = static_cast<OptimizerKind>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_point(c));
}
BENCHMARK(BM_RunPoint)
    ->Arg(static_cast<int>(OptimizerKind::bfgs))
    ->Arg(static_cast<int>(OptimizerKind::nelder_mead))
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
