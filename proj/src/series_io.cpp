#include "taut/series_io.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "taut/error.hpp"

namespace taut {

void write_series(std::ostream& os, const std::string& name, const FourierSeries& s) {
  os << "TAUT1 " << name << " N=" << s.box() << " floor=" << s.floor1() << "," << s.floor2() << "\n";
  for (const auto& [e, c] : s.terms()) {
    os << e.e1 << " " << e.e12 << " " << e.e2 << " " << c.to_cache_string() << "\n";
  }
}

FourierSeries read_series(std::istream& is, std::string* name) {
  std::string line;
  if (!std::getline(is, line)) throw Error(ErrorCode::Parse, "empty series file");
  std::istringstream head(line);
  std::string magic, nm, ntok, ftok;
  head >> magic >> nm >> ntok >> ftok;
  int box = 0, f1 = 0, f2 = 0;
  char comma = 0;
  if (magic != "TAUT1" || ntok.rfind("N=", 0) != 0 || ftok.rfind("floor=", 0) != 0) {
    throw Error(ErrorCode::Parse, "bad header '" + line + "'");
  }
  try {
    box = std::stoi(ntok.substr(2));
    std::istringstream fl(ftok.substr(6));
    if (!(fl >> f1 >> comma >> f2) || comma != ',') throw std::invalid_argument("floor");
  } catch (const std::exception&) {
    throw Error(ErrorCode::Parse, "bad header '" + line + "'");
  }
  std::vector<FourierTerm> terms;
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    FourierExp e;
    std::string re, im, extra;
    if (!(ls >> e.e1 >> e.e12 >> e.e2 >> re >> im) || (ls >> extra)) {
      throw Error(ErrorCode::Parse, "bad term on line " + std::to_string(lineno));
    }
    terms.emplace_back(e, GaussRat::from_cache_strings(re, im));
  }
  if (name) *name = nm;
  return FourierSeries::from_terms(box, f1, f2, std::move(terms));
}

SeriesCache::SeriesCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::optional<SeriesCache> SeriesCache::from_environment() {
  const char* env = std::getenv("TAUT_CACHE_DIR");
  if (!env || !*env) return std::nullopt;
  return SeriesCache(env);
}

std::filesystem::path SeriesCache::path_for(const std::string& name, int box) const {
  return dir_ / (name + ".N" + std::to_string(box) + ".taut");
}

std::optional<FourierSeries> SeriesCache::load(const std::string& name, int box) const {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir_, ec)) return std::nullopt;
  // Smallest stored box that still covers the request.
  std::optional<int> best;
  const std::string prefix = name + ".N";
  for (const auto& entry : std::filesystem::directory_iterator(dir_, ec)) {
    const std::string fn = entry.path().filename().string();
    if (fn.rfind(prefix, 0) != 0 || entry.path().extension() != ".taut") continue;
    const std::string mid = fn.substr(prefix.size(), fn.size() - prefix.size() - 5);
    if (mid.empty() || mid.find_first_not_of("0123456789") != std::string::npos) continue;
    const int n = std::stoi(mid);
    if (n >= box && (!best || n < *best)) best = n;
  }
  if (!best) return std::nullopt;
  std::ifstream in(path_for(name, *best));
  if (!in) return std::nullopt;
  FourierSeries s = read_series(in);
  return *best == box ? s : s.restricted(box);
}

void SeriesCache::store(const std::string& name, const FourierSeries& s) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create " + dir_.string() + ": " + ec.message());
  const auto target = path_for(name, s.box());
  thread_local std::mt19937_64 rng{std::random_device{}()};
  auto tmp = target;
  tmp += ".tmp" + std::to_string(rng());
  {
    std::ofstream out(tmp);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp.string());
    write_series(out, name, s);
    if (!out.flush()) throw Error(ErrorCode::Io, "short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::Io, "cannot rename into " + target.string());
  }
}

FourierSeries SeriesCache::get(const std::string& name, int box,
                               const std::function<FourierSeries(int)>& compute) const {
  if (auto hit = load(name, box)) return *hit;
  FourierSeries s = compute(box);
  store(name, s);
  return s;
}

}  // namespace taut
