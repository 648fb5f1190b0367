#include <benchmark/benchmark.h>

#include <random>

#include "hopf/drinfeld.hpp"
#include "hopf/kashina.hpp"
#include "hopf/liftings.hpp"
#include "hopf/nichols.hpp"
#include "hopf/simples.hpp"

using namespace hopf;

namespace {

kashina::KashinaH const& H() {
  static const kashina::KashinaH k = kashina::build_H();
  return k;
}

DoubleData const& D() {
  static const DoubleData d = kashina_double(H());
  return d;
}

Mat random_matrix(std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-3, 3);
  Mat m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) m(r, s) = Scalar(c(rng), c(rng));
  return m;
}

void BM_Rank(benchmark::State& st) {
  std::mt19937 rng(3);
  Mat m = random_matrix(static_cast<std::size_t>(st.range(0)), rng);
  // rank 2 keeps entries small, so no overflow whatever the size
  Mat low(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) low(r, c) = m(r, 0) * m(0, c) + m(r, 1) * m(1, c);
  for (auto _ : st) benchmark::DoNotOptimize(rank(low));
}
BENCHMARK(BM_Rank)->Arg(16)->Arg(64)->Arg(128);

void BM_BuildH(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kashina::build_H());
}
BENCHMARK(BM_BuildH)->Unit(benchmark::kMillisecond);

void BM_BuildHPresented(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kashina::build_H_presented());
}
BENCHMARK(BM_BuildHPresented)->Unit(benchmark::kMillisecond);

void BM_VerifyH(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(verify_hopf(H().h));
}
BENCHMARK(BM_VerifyH)->Unit(benchmark::kMillisecond);

void BM_Double(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kashina_double(H()));
}
BENCHMARK(BM_Double)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_Census(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(census());
}
BENCHMARK(BM_Census)->Unit(benchmark::kMillisecond);

void BM_SymmetrizerRanksW(benchmark::State& st) {
  auto bs = braided_space(yd_from_double_module(H(), D(), two_dim_module(Family::W1, {1, 0, 0})));
  auto cap = static_cast<unsigned>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(symmetrizer_ranks(bs, cap));
}
BENCHMARK(BM_SymmetrizerRanksW)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_LiftingU11(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(liftings::build_lifting(liftings::zeros("U1_1")));
}
BENCHMARK(BM_LiftingU11)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
