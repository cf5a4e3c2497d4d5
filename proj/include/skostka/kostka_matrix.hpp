#ifndef SKOSTKA_KOSTKA_MATRIX_HPP
#define SKOSTKA_KOSTKA_MATRIX_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "skostka/combinatorics.hpp"
#include "skostka/lambda_engine.hpp"
#include "skostka/modrep/engine.hpp"

namespace skostka {

struct KostkaMatrix {
  int n = 0;
  int p = 3;
  bool is_signed = true;
  std::vector<std::string> labels;
  std::vector<std::vector<long>> matrix;  // matrix[row][col]

  std::size_t size() const { return labels.size(); }
  bool operator==(const KostkaMatrix&) const = default;
};

enum class Engine { direct, reduction };
std::string engine_name(Engine e);

// Row and column labels in the fixed total order.
std::vector<PairP2p> matrix_labels(int n, int p, bool is_signed);

KostkaMatrix assemble_matrix(int n, int p, bool is_signed, modrep::DirectEngine& direct);
KostkaMatrix assemble_matrix(int n, int p, bool is_signed, lambda::ReductionEngine& reduction);

bool is_lower_unitriangular(const KostkaMatrix& k);
std::vector<std::vector<long>> kronecker(const std::vector<std::vector<long>>& a, const std::vector<std::vector<long>>& b);
std::vector<std::vector<long>> diagonal_block(const KostkaMatrix& k, std::size_t first, std::size_t count);

std::string to_csv(const KostkaMatrix& k);
// Reads the CSV layout written by to_csv; n, p and the signed flag come from the caller.
KostkaMatrix from_csv(const std::string& text, int n, int p, bool is_signed);
KostkaMatrix read_csv_file(const std::filesystem::path& path, int n, int p, bool is_signed);

inline constexpr int kCacheVersion = 1;

std::string to_json(const KostkaMatrix& k, Engine engine, std::uint64_t seed);
struct CachedMatrix {
  KostkaMatrix matrix;
  std::string engine;
  std::uint64_t seed = 0;
};
// Throws std::runtime_error on malformed input.
CachedMatrix from_json(const std::string& text);

// On-disk store of matrices keyed by (signed, n, p).
class MatrixCache {
 public:
  explicit MatrixCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  // --cache-dir, else SKOSTKA_CACHE, else the per-user data directory.
  static std::filesystem::path resolve_dir(const std::optional<std::string>& flag);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(int n, int p, bool is_signed) const;
  // Entries with a different version or mismatched shape are ignored.
  std::optional<CachedMatrix> load(int n, int p, bool is_signed) const;
  // Write to a temporary file, then rename into place.
  void store(const KostkaMatrix& k, Engine engine, std::uint64_t seed) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace skostka

#endif
