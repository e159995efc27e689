#include "eulerref/table_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "eulerref/errors.hpp"

namespace eulerref {

namespace {

std::string header(int n, TableMethod method) {
  return "eulerref-table v1 n=" + std::to_string(n) + " method=" + std::string(to_string(method));
}

[[noreturn]] void malformed(const std::filesystem::path& file, const std::string& why) {
  throw ConsistencyError("cache file " + file.string() + ": " + why);
}

}  // namespace

std::filesystem::path default_cache_dir() {
  const char* v = std::getenv(kCacheDirEnv);
  return v ? std::filesystem::path(v) : std::filesystem::path();
}

std::filesystem::path cache_file(const std::filesystem::path& dir, int n, TableMethod method) {
  return dir / ("table-n" + std::to_string(n) + "-" + std::string(to_string(method)) + ".txt");
}

std::optional<RefinedTable> load_table(const std::filesystem::path& dir, int n, TableMethod method) {
  const auto file = cache_file(dir, n, method);
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != header(n, method)) malformed(file, "bad header");
  std::vector<Count> counts(static_cast<std::size_t>(n) * n);
  std::vector<bool> seen(counts.size(), false);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    int d = -1, k = -1;
    std::string digits;
    if (!(row >> d >> k >> digits) || d < 0 || d >= n || k < 1 || k > n) malformed(file, "bad row '" + line + "'");
    const std::size_t i = static_cast<std::size_t>(d) * n + (k - 1);
    if (seen[i]) malformed(file, "duplicate cell d=" + std::to_string(d) + " k=" + std::to_string(k));
    if (counts[i].set_str(digits, 10) != 0 || counts[i] < 0) malformed(file, "bad count '" + digits + "'");
    seen[i] = true;
  }
  for (bool s : seen)
    if (!s) malformed(file, "missing cells");
  RefinedTable t(n, method, std::move(counts));
  for (int k = 1; k <= n; ++k)
    if (t.column_sum(k) != factorial(n - 1)) malformed(file, "column " + std::to_string(k) + " does not sum to (n-1)!");
  return t;
}

void store_table(const std::filesystem::path& dir, const RefinedTable& table) {
  std::filesystem::create_directories(dir);
  const auto file = cache_file(dir, table.n(), table.method());
  auto tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw InvalidArgument("cannot write cache file " + tmp.string());
    out << header(table.n(), table.method()) << '\n';
    for (int d = 0; d < table.n(); ++d)
      for (int k = 1; k <= table.n(); ++k) out << d << ' ' << k << ' ' << table.at(d, k).get_str() << '\n';
  }
  std::filesystem::rename(tmp, file);
}

std::shared_ptr<const RefinedTable> cached_table(int n, TableMethod method, const std::filesystem::path& dir) {
  if (dir.empty()) return refined_table(n, method);
  if (auto t = load_table(dir, n, method)) return std::make_shared<const RefinedTable>(std::move(*t));
  auto t = refined_table(n, method);
  store_table(dir, *t);
  return t;
}

}  // namespace eulerref
