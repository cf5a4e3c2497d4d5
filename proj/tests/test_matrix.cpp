#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include <json.hpp>

#include "skostka/kostka_matrix.hpp"

using namespace skostka;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  fs::path d = fs::temp_directory_path() / ("skostka_test_" + std::to_string(std::random_device{}()));
  fs::create_directories(d);
  return d;
}

KostkaMatrix fixture() { return read_csv_file(fs::path(SKOSTKA_FIXTURE_DIR) / "kpm_signed_n6_p3.csv", 6, 3, true); }

}  // namespace

TEST_CASE("fixture is well formed") {
  const KostkaMatrix k = fixture();
  CHECK(k.size() == 16);
  CHECK(is_lower_unitriangular(k));
  std::vector<std::string> labels;
  for (const auto& x : matrix_labels(6, 3, true)) labels.push_back(label_string(x));
  CHECK(k.labels == labels);
}

TEST_CASE("CSV and JSON carry the same numbers") {
  const KostkaMatrix k = fixture();
  const KostkaMatrix from_text = from_csv(to_csv(k), 6, 3, true);
  CHECK(from_text == k);
  const CachedMatrix c = from_json(to_json(k, Engine::direct, 17));
  CHECK(c.matrix == k);
  CHECK(c.engine == "direct");
  CHECK(c.seed == 17);
  const auto j = nlohmann::json::parse(to_json(k, Engine::reduction, 0));
  CHECK(j.size() == 8);
  CHECK(j.at("version") == 1);
  CHECK(j.at("engine") == "reduction");
}

TEST_CASE("malformed inputs are rejected") {
  CHECK_THROWS(from_csv("", 0, 3, true));
  CHECK_THROWS(from_csv("label,\"a\"\n\"b\",1\n", 1, 3, true));
  CHECK_THROWS(from_csv("label,\"a\",\"b\"\n\"a\",1\n", 1, 3, true));
  CHECK_THROWS(from_json("{not json"));
  CHECK_THROWS(from_json(R"({"version":1})"));
  auto j = nlohmann::json::parse(to_json(fixture(), Engine::direct, 0));
  j["matrix"][0][0] = -1;
  CHECK_THROWS(from_json(j.dump()));
  j = nlohmann::json::parse(to_json(fixture(), Engine::direct, 0));
  j["engine"] = "oracle";
  CHECK_THROWS(from_json(j.dump()));
  j = nlohmann::json::parse(to_json(fixture(), Engine::direct, 0));
  j["extra"] = 1;
  CHECK_THROWS(from_json(j.dump()));
}

TEST_CASE("cache round trip and rejection of stale entries") {
  const fs::path dir = scratch_dir();
  MatrixCache cache(dir);
  const KostkaMatrix k = fixture();
  CHECK_FALSE(cache.load(6, 3, true));
  cache.store(k, Engine::direct, 5);
  CHECK(cache.path_for(6, 3, true).filename() == "kpm_signed_n6_p3.json");
  auto hit = cache.load(6, 3, true);
  REQUIRE(hit);
  CHECK(hit->matrix == k);
  CHECK(hit->seed == 5);
  CHECK_FALSE(cache.load(6, 3, false));
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir)) files += e.is_regular_file();
  CHECK(files == 1);  // no temporary left behind

  auto j = nlohmann::json::parse(to_json(k, Engine::direct, 0));
  j["version"] = 2;
  std::ofstream(cache.path_for(6, 3, true)) << j.dump();
  CHECK_FALSE(cache.load(6, 3, true));
  std::ofstream(cache.path_for(6, 3, true)) << "garbage";
  CHECK_FALSE(cache.load(6, 3, true));
  // a plain matrix stored under the signed name is refused
  KostkaMatrix wrong = k;
  wrong.is_signed = false;
  std::ofstream(cache.path_for(6, 3, true)) << to_json(wrong, Engine::direct, 0);
  CHECK_FALSE(cache.load(6, 3, true));
  fs::remove_all(dir);
}

TEST_CASE("cache directory resolution") {
  CHECK(MatrixCache::resolve_dir(std::string("/tmp/explicit")) == fs::path("/tmp/explicit"));
  setenv("SKOSTKA_CACHE", "/tmp/fromenv", 1);
  CHECK(MatrixCache::resolve_dir(std::nullopt) == fs::path("/tmp/fromenv"));
  unsetenv("SKOSTKA_CACHE");
  setenv("XDG_DATA_HOME", "/tmp/xdg", 1);
  CHECK(MatrixCache::resolve_dir(std::nullopt) == fs::path("/tmp/xdg/skostka"));
  unsetenv("XDG_DATA_HOME");
}

TEST_CASE("Kronecker products and blocks") {
  const std::vector<std::vector<long>> a{{1, 0}, {2, 1}}, b{{1}};
  CHECK(kronecker(a, b) == a);
  CHECK(kronecker(b, a) == a);
  const auto c = kronecker(a, a);
  CHECK(c.size() == 4);
  CHECK(c[3][0] == 4);
  CHECK(c[2][1] == 0);
  const KostkaMatrix k = fixture();
  CHECK(diagonal_block(k, 11, 3) == std::vector<std::vector<long>>{{1, 0, 0}, {0, 1, 0}, {0, 1, 1}});
  CHECK_THROWS(diagonal_block(k, 15, 2));
}

TEST_CASE("small matrices from both engines") {
  modrep::DirectEngine direct(3);
  lambda::ReductionEngine red(direct);
  const KostkaMatrix zero = assemble_matrix(0, 3, true, direct);
  CHECK(zero.matrix == std::vector<std::vector<long>>{{1}});
  for (int n = 0; n <= 5; ++n) {
    const KostkaMatrix d = assemble_matrix(n, 3, true, direct);
    CHECK(is_lower_unitriangular(d));
    CHECK(assemble_matrix(n, 3, true, red) == d);
  }
  // the plain matrix over partitions of 6 is the top-left block of the fixture
  const KostkaMatrix plain = assemble_matrix(6, 3, false, red);
  CHECK(plain.matrix == diagonal_block(fixture(), 0, 11));
}
