#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "h2vqe/driver.hpp"
#include "h2vqe/error.hpp"
#include "h2vqe/exact.hpp"
#include "h2vqe/io.hpp"
#include "h2vqe/random.hpp"
#include "h2vqe/scf.hpp"

using namespace h2vqe;

namespace {

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST(Config, Validation) {
  VqeConfig c;
  EXPECT_NO_THROW(validate(c));
  auto bad = c;
  bad.mapping = Mapping::jordan_wigner;  // tqr stays on
  EXPECT_THROW(validate(bad), Error);
  bad = c;
  bad.depth = 0;
  EXPECT_THROW(validate(bad), Error);
  bad = c;
  bad.distance = -1.0;
  EXPECT_THROW(validate(bad), Error);
  bad = c;
  bad.basis = "6-31g";
  EXPECT_THROW(validate(bad), Error);
  bad = c;
  bad.shots = 0;
  EXPECT_THROW(validate(bad), Error);
  bad = c;
  bad.initial_point = InitialPoint::random(1.0, 0.0);
  try {
    run_point(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::configuration);
    EXPECT_NE(std::string(e.what()).find("config"), std::string::npos);
  }
}

TEST(RunPoint, DefaultConfigurationIsExact) {
  const auto r = run_point(VqeConfig{});
  EXPECT_LT(std::abs(r.total_energy - r.reference_total_energy), 1e-6);
  EXPECT_EQ(r.total_energy, r.electronic_energy + r.shift);
  EXPECT_GE(r.total_energy, r.reference_total_energy - 1e-9);
  EXPECT_EQ(r.n_qubits, 2u);
  EXPECT_EQ(r.n_parameters, 3u);
  EXPECT_NEAR(r.reference_total_energy, fci_oracle(hydrogen_problem(0.74).integrals), 1e-10);
}

TEST(RunPoint, ZeroParametersCollapseToHartreeFock) {
  VqeConfig c;
  c.initial_point = InitialPoint::zeros();
  c.max_iter = 0;
  const auto r = run_point(c);
  EXPECT_NEAR(r.total_energy, hydrogen_problem(0.74).scf.total_energy, 1e-8);
  EXPECT_NEAR(r.total_energy, r.rhf_total_energy, 1e-8);
}

TEST(RunPoint, TraceIntegrity) {
  const auto r = run_point(VqeConfig{});
  ASSERT_FALSE(r.trace.empty());
  EXPECT_EQ(r.trace.size(), r.n_evaluations);
  for (std::size_t i = 1; i < r.trace.size(); ++i) EXPECT_LT(r.trace[i - 1].nfev, r.trace[i].nfev);
  EXPECT_EQ(r.trace.back().nfev, r.n_evaluations);
  EXPECT_NEAR(r.trace.back().energy + r.shift, r.total_energy, 1e-12);
  EXPECT_EQ(r.trace.back().parameters, r.optimal_parameters);
}

TEST(RunPoint, MappingIndependence) {
  std::vector<double> energies;
  for (auto m : {Mapping::jordan_wigner, Mapping::parity, Mapping::bravyi_kitaev}) {
    VqeConfig c;
    c.mapping = m;
    c.tqr = false;
    c.seed = 4;
    energies.push_back(run_point(c).total_energy);
  }
  EXPECT_NEAR(energies[0], energies[1], 1e-6);
  EXPECT_NEAR(energies[0], energies[2], 1e-6);
  VqeConfig reduced;
  reduced.seed = 4;
  EXPECT_NEAR(run_point(reduced).total_energy, energies[1], 1e-6);
}

TEST(RunPoint, OtherOptimizersAndForms) {
  VqeConfig c;
  c.optimizer = OptimizerKind::nelder_mead;
  auto r = run_point(c);
  EXPECT_LT(std::abs(r.total_energy - r.reference_total_energy), 1e-6);

  c = VqeConfig{};
  c.var_form = VarForm::real_amplitudes;
  c.initial_state = InitialState::zero;
  c.depth = 2;
  r = run_point(c);
  EXPECT_GE(r.total_energy, r.reference_total_energy - 1e-9);
  EXPECT_LT(r.total_energy, r.rhf_total_energy);

  c = VqeConfig{};
  c.var_form = VarForm::excitation_preserving;
  r = run_point(c);
  EXPECT_GE(r.total_energy, r.reference_total_energy - 1e-9);
}

TEST(RunPoint, SampledBackendReportsNoise) {
  VqeConfig c;
  c.backend = BackendKind::sampled;
  c.optimizer = OptimizerKind::spsa;
  c.max_iter = 100;
  c.shots = 2048;
  const auto r = run_point(c);
  EXPECT_GT(r.stddev, 0.0);
  EXPECT_EQ(r.trace.back().parameters, r.optimal_parameters);
  EXPECT_LT(std::abs(r.total_energy - r.reference_total_energy), 2e-2);
}

TEST(RunPoint, ExplicitInitialPointLength) {
  VqeConfig c;
  c.initial_point = InitialPoint::explicit_point({0.1, 0.2});
  try {
    run_point(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::configuration);
  }
}

TEST(RunPoint, DeterministicJson) {
  VqeConfig c;
  c.seed = 77;
  EXPECT_EQ(result_to_json(run_point(c)), result_to_json(run_point(c)));
  c.backend = BackendKind::sampled;
  c.optimizer = OptimizerKind::spsa;
  c.max_iter = 40;
  EXPECT_EQ(result_to_json(run_point(c)), result_to_json(run_point(c)));
}

TEST(Io, JsonRoundTrip) {
  VqeConfig c;
  c.seed = 3;
  c.fd_step = 1e-5;
  c.initial_point = InitialPoint::random(-0.5, 0.25);
  const auto r = run_point(c);
  const auto back = result_from_json(result_to_json(r));
  EXPECT_TRUE(back == r);
  EXPECT_THROW(result_from_json("{not json"), Error);
}

TEST(Io, TraceCsv) {
  const auto r = run_point(VqeConfig{});
  const auto csv = trace_csv(r.trace);
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "nfev,energy,stddev,p0,p1,p2");
  EXPECT_EQ(count_lines(csv), r.trace.size() + 1);
}

TEST(Io, ScanCsvSchema) {
  const auto pts = run_scan(VqeConfig{}, {0.5, 0.74});
  const auto csv = scan_csv(pts);
  std::istringstream in(csv);
  std::string header, row;
  std::getline(in, header);
  EXPECT_EQ(header, "distance_angstrom,vqe_total_ha,reference_total_ha,nfev");
  std::getline(in, row);
  EXPECT_EQ(row.substr(0, 4), "0.5,");
  EXPECT_EQ(count_lines(csv), 3u);
}

TEST(Io, TwelveSignificantDigits) {
  EXPECT_EQ(format_sig12(-1.13728383448832), "-1.13728383449");
  EXPECT_EQ(format_sig12(0.74), "0.74");
}

TEST(Io, WriteFailureNamesPath) {
  try {
    write_text_file("/nonexistent-dir/out.json", "x");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::io);
    EXPECT_NE(std::string(e.what()).find("/nonexistent-dir/out.json"), std::string::npos);
  }
}

TEST(Scan, DegenerateSingleDistance) {
  VqeConfig c;
  c.seed = 10;
  const auto pts = run_scan(c, {0.74});
  ASSERT_EQ(pts.size(), 1u);
  auto single = c;
  single.seed = derive_seed(c.seed, "scan", 0);
  const auto r = run_point(single);
  EXPECT_EQ(pts[0].vqe_total_energy, r.total_energy);
  EXPECT_EQ(pts[0].reference_total_energy, r.reference_total_energy);
  EXPECT_EQ(pts[0].n_evaluations, r.n_evaluations);
}

TEST(Scan, DissociationCurve) {
  const auto grid = distance_grid(0.3, 2.5, 0.1);
  ASSERT_EQ(grid.size(), 23u);
  const auto pts = run_scan(VqeConfig{}, grid);
  std::size_t best = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    EXPECT_FALSE(pts[i].error.has_value());
    EXPECT_LT(std::abs(pts[i].vqe_total_energy - pts[i].reference_total_energy), 1e-6);
    EXPECT_GE(pts[i].vqe_total_energy, pts[i].reference_total_energy - 1e-9);
    if (pts[i].vqe_total_energy < pts[best].vqe_total_energy) best = i;
  }
  EXPECT_GE(pts[best].distance, 0.70);
  EXPECT_LE(pts[best].distance, 0.78);
  EXPECT_GT(pts.back().reference_total_energy, run_point(VqeConfig{}).reference_total_energy);
}

TEST(Scan, ParallelMatchesSerial) {
  const std::vector<double> d{0.5, 0.9, 1.3, 1.7};
  const auto a = run_scan(VqeConfig{}, d, {false, 1});
  const auto b = run_scan(VqeConfig{}, d, {false, 3});
  for (std::size_t i = 0; i < d.size(); ++i) EXPECT_EQ(a[i].vqe_total_energy, b[i].vqe_total_energy);
}

TEST(Scan, WarmStart) {
  const auto pts = run_scan(VqeConfig{}, {0.6, 0.7, 0.8}, {true, 0});
  for (const auto& p : pts) EXPECT_LT(std::abs(p.vqe_total_energy - p.reference_total_energy), 1e-6);
}

TEST(Scan, RejectsBadDistances) {
  EXPECT_THROW(run_scan(VqeConfig{}, {}), Error);
  EXPECT_THROW(run_scan(VqeConfig{}, {0.8, 0.7}), Error);
  EXPECT_THROW(run_scan(VqeConfig{}, {-0.1, 0.7}), Error);
  EXPECT_THROW(distance_grid(0.5, 0.3, 0.1), Error);
}

TEST(Scan, RecordsPerPointFailures) {
  VqeConfig c;
  c.initial_point = InitialPoint::explicit_point({0.0, 0.0, 0.0});
  c.var_form = VarForm::real_amplitudes;  // 4 parameters, so every point fails
  const auto pts = run_scan(c, {0.6, 0.7});
  for (const auto& p : pts) {
    ASSERT_TRUE(p.error.has_value());
    EXPECT_EQ(p.error_kind, ErrorKind::configuration);
  }
}
