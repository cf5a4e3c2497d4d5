#include "skostka/kostka_matrix.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace skostka {

std::string engine_name(Engine e) { return e == Engine::direct ? "direct" : "reduction"; }

std::vector<PairP2p> matrix_labels(int n, int p, bool is_signed) {
  if (is_signed) return enumerate_p2p(n, p);
  std::vector<PairP2p> out;
  for (const auto& lam : enumerate_partitions(n)) out.emplace_back(lam, Partition{}, p);
  return out;
}

namespace {

template <typename Entry>
KostkaMatrix assemble(int n, int p, bool is_signed, Entry entry) {
  require_odd_prime(p);
  KostkaMatrix k;
  k.n = n;
  k.p = p;
  k.is_signed = is_signed;
  auto labels = matrix_labels(n, p, is_signed);
  for (const auto& x : labels) k.labels.push_back(label_string(x));
  k.matrix.assign(labels.size(), std::vector<long>(labels.size(), 0));
  for (std::size_t i = 0; i < labels.size(); ++i) entry(labels, i, k.matrix[i]);
  return k;
}

}  // namespace

KostkaMatrix assemble_matrix(int n, int p, bool is_signed, modrep::DirectEngine& direct) {
  if (direct.prime() != p) throw std::invalid_argument("assemble_matrix: engine prime differs");
  return assemble(n, p, is_signed, [&](const std::vector<PairP2p>& labels, std::size_t i, std::vector<long>& row) {
    modrep::LabelledDecomposition dec;
    try {
      dec = direct.decompose_labelled(labels[i].as_pair());
    } catch (const modrep::DimensionCapError& e) {
      throw modrep::DimensionCapError(std::string(e.what()) + " (row " + label_string(labels[i]) + ")", e.required());
    }
    for (const auto& [y, m] : dec)
      for (std::size_t j = 0; j < labels.size(); ++j)
        if (labels[j] == y) row[j] = m;
  });
}

KostkaMatrix assemble_matrix(int n, int p, bool is_signed, lambda::ReductionEngine& reduction) {
  if (reduction.prime() != p) throw std::invalid_argument("assemble_matrix: engine prime differs");
  return assemble(n, p, is_signed, [&](const std::vector<PairP2p>& labels, std::size_t i, std::vector<long>& row) {
    for (std::size_t j = 0; j < labels.size(); ++j) row[j] = reduction.signed_kostka(labels[i].as_pair(), labels[j]);
  });
}

bool is_lower_unitriangular(const KostkaMatrix& k) {
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k.matrix[i][i] != 1) return false;
    for (std::size_t j = i + 1; j < k.size(); ++j)
      if (k.matrix[i][j] != 0) return false;
  }
  return true;
}

std::vector<std::vector<long>> kronecker(const std::vector<std::vector<long>>& a,
                                         const std::vector<std::vector<long>>& b) {
  const std::size_t ra = a.size(), rb = b.size();
  const std::size_t ca = ra ? a[0].size() : 0, cb = rb ? b[0].size() : 0;
  std::vector<std::vector<long>> out(ra * rb, std::vector<long>(ca * cb, 0));
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ca; ++j)
      for (std::size_t k = 0; k < rb; ++k)
        for (std::size_t l = 0; l < cb; ++l) out[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
  return out;
}

std::vector<std::vector<long>> diagonal_block(const KostkaMatrix& k, std::size_t first, std::size_t count) {
  if (first + count > k.size()) throw std::out_of_range("diagonal_block: range outside matrix");
  std::vector<std::vector<long>> out(count, std::vector<long>(count));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) out[i][j] = k.matrix[first + i][first + j];
  return out;
}

namespace {

std::string quote(const std::string& s) { return "\"" + s + "\""; }

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool in_quotes = false;
  for (char c : line) {
    if (c == '"') {
      in_quotes = !in_quotes;
    } else if (c == ',' && !in_quotes) {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  if (in_quotes) throw std::runtime_error("csv: unterminated quote");
  out.push_back(cur);
  return out;
}

}  // namespace

std::string to_csv(const KostkaMatrix& k) {
  std::ostringstream os;
  os << "label";
  for (const auto& l : k.labels) os << ',' << quote(l);
  os << '\n';
  for (std::size_t i = 0; i < k.size(); ++i) {
    os << quote(k.labels[i]);
    for (long v : k.matrix[i]) os << ',' << v;
    os << '\n';
  }
  return os.str();
}

KostkaMatrix from_csv(const std::string& text, int n, int p, bool is_signed) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("csv: empty input");
  auto header = split_csv_line(line);
  KostkaMatrix k;
  k.n = n;
  k.p = p;
  k.is_signed = is_signed;
  k.labels.assign(header.begin() + 1, header.end());
  while (std::getline(is, line)) {
    if (line.empty() || line == "\r") continue;
    auto cells = split_csv_line(line);
    if (cells.size() != header.size()) throw std::runtime_error("csv: ragged row");
    if (cells[0] != k.labels[k.matrix.size()]) throw std::runtime_error("csv: row label differs from column label");
    std::vector<long> row;
    for (std::size_t j = 1; j < cells.size(); ++j) row.push_back(std::stol(cells[j]));
    k.matrix.push_back(std::move(row));
  }
  if (k.matrix.size() != k.labels.size()) throw std::runtime_error("csv: matrix is not square");
  return k;
}

KostkaMatrix read_csv_file(const std::filesystem::path& path, int n, int p, bool is_signed) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return from_csv(ss.str(), n, p, is_signed);
}

std::string to_json(const KostkaMatrix& k, Engine engine, std::uint64_t seed) {
  nlohmann::ordered_json j;
  j["version"] = kCacheVersion;
  j["n"] = k.n;
  j["p"] = k.p;
  j["signed"] = k.is_signed;
  j["labels"] = k.labels;
  j["matrix"] = k.matrix;
  j["engine"] = engine_name(engine);
  j["seed"] = seed;
  return j.dump(1);
}

CachedMatrix from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("json: ") + e.what());
  }
  static const std::vector<std::string> keys{"version", "n", "p", "signed", "labels", "matrix", "engine", "seed"};
  if (!j.is_object() || j.size() != keys.size()) throw std::runtime_error("json: unexpected key set");
  for (const auto& key : keys)
    if (!j.contains(key)) throw std::runtime_error("json: missing key " + key);
  if (j["version"].get<int>() != kCacheVersion) throw std::runtime_error("json: version mismatch");
  CachedMatrix c;
  try {
    c.matrix.n = j["n"].get<int>();
    c.matrix.p = j["p"].get<int>();
    c.matrix.is_signed = j["signed"].get<bool>();
    c.matrix.labels = j["labels"].get<std::vector<std::string>>();
    c.matrix.matrix = j["matrix"].get<std::vector<std::vector<long>>>();
    c.engine = j["engine"].get<std::string>();
    c.seed = j["seed"].get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("json: ") + e.what());
  }
  if (c.matrix.matrix.size() != c.matrix.labels.size()) throw std::runtime_error("json: matrix shape");
  for (const auto& row : c.matrix.matrix) {
    if (row.size() != c.matrix.labels.size()) throw std::runtime_error("json: matrix shape");
    for (long v : row)
      if (v < 0) throw std::runtime_error("json: negative entry");
  }
  if (c.engine != "direct" && c.engine != "reduction") throw std::runtime_error("json: unknown engine");
  return c;
}

std::filesystem::path MatrixCache::resolve_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("SKOSTKA_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_DATA_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "skostka";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".local" / "share" / "skostka";
  return std::filesystem::temp_directory_path() / "skostka";
}

std::filesystem::path MatrixCache::path_for(int n, int p, bool is_signed) const {
  return dir_ / ("kpm_" + std::string(is_signed ? "signed" : "plain") + "_n" + std::to_string(n) + "_p" +
                 std::to_string(p) + ".json");
}

std::optional<CachedMatrix> MatrixCache::load(int n, int p, bool is_signed) const {
  std::ifstream in(path_for(n, p, is_signed));
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    CachedMatrix c = from_json(ss.str());
    if (c.matrix.n != n || c.matrix.p != p || c.matrix.is_signed != is_signed) return std::nullopt;
    std::vector<std::string> expect;
    for (const auto& x : matrix_labels(n, p, is_signed)) expect.push_back(label_string(x));
    if (c.matrix.labels != expect) return std::nullopt;
    return c;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void MatrixCache::store(const KostkaMatrix& k, Engine engine, std::uint64_t seed) const {
  std::filesystem::create_directories(dir_);
  const auto target = path_for(k.n, k.p, k.is_signed);
  auto tmp = target;
  tmp += ".tmp" + std::to_string(std::random_device{}());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << to_json(k, engine, seed) << '\n';
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace skostka
