#include <doctest.h>

#include "hypersurf/parallel.hpp"

#include <cstdlib>
#include <stdexcept>

using namespace hypersurf;

TEST_CASE("parallel map keeps index order") {
  auto out = parallel_map(64, [](size_t i) { return std::to_string(i * i); });
  REQUIRE(out.size() == 64);
  for (size_t i = 0; i < out.size(); ++i) CHECK(out[i] == std::to_string(i * i));
}

TEST_CASE("worker cap honors the environment variable") {
  setenv("HYPERSURF_THREADS", "3", 1);
  CHECK(worker_count() == 3);
  setenv("HYPERSURF_THREADS", "0", 1);  // nonsense values fall back
  CHECK(worker_count() >= 1);
  unsetenv("HYPERSURF_THREADS");
  CHECK(worker_count() >= 1);
}

TEST_CASE("exceptions propagate from workers") {
  CHECK_THROWS_AS(parallel_map(8,
                               [](size_t i) -> std::string {
                                 if (i == 5) throw std::runtime_error("boom");
                                 return "ok";
                               }),
                  std::runtime_error);
}
