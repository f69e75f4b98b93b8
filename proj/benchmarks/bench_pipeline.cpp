// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "vkg/equality.hpp"
#include "vkg/fiber.hpp"
#include "vkg/groups.hpp"
#include "vkg/rewrite.hpp"
#include "vkg/vk.hpp"

using namespace vkg;

namespace {

GroupoidPresentation one_relator(std::vector<Letter> relator) {
  GroupoidPresentation base = GroupoidPresentation::make(
      {"o"}, {Arrow{"a", "o", "o"}, Arrow{"b", "o", "o"}}, {});
  return GroupoidPresentation::make(
      {"o"}, {Arrow{"a", "o", "o"}, Arrow{"b", "o", "o"}},
      {Relator{base.word_at(std::move(relator), "o"), empty_word("o")}});
}

Complex2 circle_complex() {
  return Complex2::make({"v0", "v1"}, {EdgeCell{"a", "v0", "v1"}, EdgeCell{"b", "v1", "v0"}}, {});
}

SectionedCover circle_cover() {
  Subcomplex u1{"U1", {"v0", "v1"}, {"a"}, {}};
  Subcomplex u2{"U2", {"v0", "v1"}, {"b"}, {}};
  return cover_to_map(circle_complex(), {u1, u2});
}

void BM_knuth_bendix_torus(benchmark::State& state) {
  GroupoidPresentation torus =
      one_relator({Letter{"a", 1}, Letter{"b", 1}, Letter{"a", -1}, Letter{"b", -1}});
  for (auto _ : state) {
    RewriteSystem rs = RewriteSystem::build(torus);
    benchmark::DoNotOptimize(rs.complete(KbBudget{}));
  }
}
BENCHMARK(BM_knuth_bendix_torus);

void BM_knuth_bendix_klein(benchmark::State& state) {
  GroupoidPresentation klein =
      one_relator({Letter{"a", 1}, Letter{"b", 1}, Letter{"a", 1}, Letter{"b", -1}});
  for (auto _ : state) {
    RewriteSystem rs = RewriteSystem::build(klein);
    benchmark::DoNotOptimize(rs.complete(KbBudget{}));
  }
}
BENCHMARK(BM_knuth_bendix_klein);

void BM_triple_fiber_product(benchmark::State& state) {
  RandomInstance inst = random_instance(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(CoverGeometry::build(inst.cover));
  }
}
BENCHMARK(BM_triple_fiber_product)->Arg(3)->Arg(7)->Arg(42);

void BM_run_vk_circle(benchmark::State& state) {
  SectionedCover cover = circle_cover();
  BaseSet base = BaseSet::of({"v0", "v1"});
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_vk(cover, base));
  }
}
BENCHMARK(BM_run_vk_circle);

void BM_run_vk_random(benchmark::State& state) {
  RandomInstance inst = random_instance(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_vk(inst.cover, inst.base));
  }
}
BENCHMARK(BM_run_vk_random)->Arg(3)->Arg(7);

void BM_hom_count_free2(benchmark::State& state) {
  GroupoidPresentation free2 = GroupoidPresentation::make(
      {"o"}, {Arrow{"a", "o", "o"}, Arrow{"b", "o", "o"}}, {});
  GroupTable g = GroupTable::dihedral(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hom_count(free2, g));
  }
}
BENCHMARK(BM_hom_count_free2);

void BM_hom_count_klein_into_q8(benchmark::State& state) {
  GroupoidPresentation klein =
      one_relator({Letter{"a", 1}, Letter{"b", 1}, Letter{"a", 1}, Letter{"b", -1}});
  GroupTable q8 = GroupTable::quaternion8();
  for (auto _ : state) {
    benchmark::DoNotOptimize(hom_count(klein, q8));
  }
}
BENCHMARK(BM_hom_count_klein_into_q8);

} // namespace

BENCHMARK_MAIN();
