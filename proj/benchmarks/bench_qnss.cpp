#include <benchmark/benchmark.h>

#include "qnss/embed.hpp"
#include "qnss/groebner.hpp"
#include "qnss/oracle.hpp"
#include "qnss/quat_nss.hpp"
#include "qnss/text.hpp"

namespace {

using namespace qnss;

const std::vector<std::string> kVars1 = default_variable_names(1);
const std::vector<std::string> kVars2 = default_variable_names(2);

void BM_QuatProduct(benchmark::State& state) {
  Rng rng(1);
  QuatQ a = rng.quat(1000), b = rng.quat(1000);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_QuatProduct);

void BM_QPolyProduct(benchmark::State& state) {
  Rng rng(2);
  RandomShape shape{2, static_cast<unsigned>(state.range(0)), 8, 20};
  QPoly f = random_qpoly(rng, shape), g = random_qpoly(rng, shape);
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_QPolyProduct)->Arg(2)->Arg(4)->Arg(8);

void BM_PhiEmbed(benchmark::State& state) {
  Rng rng(3);
  QPoly f = random_qpoly(rng, RandomShape{2, 6, 12, 20});
  for (auto _ : state) benchmark::DoNotOptimize(phi_embed(f));
}
BENCHMARK(BM_PhiEmbed);

void BM_BuchbergerRandom(benchmark::State& state) {
  const auto rank = static_cast<std::size_t>(state.range(0));
  Rng rng(4);
  RandomShape shape{2, 3, 3, 5};
  std::vector<VecPoly> gens;
  for (int k = 0; k < 3; ++k) gens.push_back(random_vecpoly(rng, shape, rank));
  for (auto _ : state) benchmark::DoNotOptimize(buchberger_module(gens, rank, 2));
}
BENCHMARK(BM_BuchbergerRandom)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_QuatMembership(benchmark::State& state) {
  QuatLeftIdeal I(2, {parse_qpoly("x1^2 + 1", kVars2), parse_qpoly("J*x1 - x2", kVars2)});
  QPoly f = parse_qpoly("(x1 + K)*(x1^2 + 1) + x2^2*(J*x1 - x2)", kVars2);
  benchmark::DoNotOptimize(I.basis());
  for (auto _ : state) benchmark::DoNotOptimize(quat_membership(f, I));
}
BENCHMARK(BM_QuatMembership);

void BM_DecideQuat(benchmark::State& state) {
  const char* gens[] = {"x1^2", "x1^2 + 1", "(x1^2 + 1)^2"};
  const std::string g = gens[state.range(0)];
  for (auto _ : state) {
    QuatLeftIdeal I(1, {parse_qpoly(g, kVars1)});
    benchmark::DoNotOptimize(decide_quat_vanishing(parse_qpoly("x1^3 + x1", kVars1), I));
  }
  state.SetLabel(g);
}
BENCHMARK(BM_DecideQuat)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_UniformCertificate(benchmark::State& state) {
  const std::vector<std::string> v = default_variable_names(1);
  for (auto _ : state) {
    MatLeftIdeal I(2, 1, {MatPoly::scalar(2, parse_mpoly("x1^3", v))});
    benchmark::DoNotOptimize(uniform_power_certificate(parse_matpoly("[[x1, 1], [0, x1]]", v), I));
  }
}
BENCHMARK(BM_UniformCertificate)->Unit(benchmark::kMillisecond);

void BM_ParsePolynomial(benchmark::State& state) {
  const std::string text = "(x1 + 2*x2 - I)^4*(J*x1 - 1/3*K*x2^2) + 7/2*x1*x2";
  for (auto _ : state) benchmark::DoNotOptimize(parse_qpoly(text, kVars2));
}
BENCHMARK(BM_ParsePolynomial);

}  // namespace
BENCHMARK_MAIN();
