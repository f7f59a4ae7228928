#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

#include "taut/fourier_series.hpp"

namespace taut {

/// Text format: `TAUT1 <name> N=<box> floor=<f1>,<f2>` then one line
/// `e1 e12 e2 re_num/re_den im_num/im_den` per term, in stored order.
void write_series(std::ostream& os, const std::string& name, const FourierSeries& s);
/// Throws Parse on a malformed file. The name from the header goes to *name if given.
FourierSeries read_series(std::istream& is, std::string* name = nullptr);

/// On-disk store keyed by (name, N). A stored entry with a larger box serves
/// smaller requests by restriction. Writes go to a temporary file that is
/// renamed into place, so readers never see a partial entry.
class SeriesCache {
 public:
  explicit SeriesCache(std::filesystem::path dir);
  /// The cache in TAUT_CACHE_DIR, if that is set.
  static std::optional<SeriesCache> from_environment();

  const std::filesystem::path& dir() const { return dir_; }

  std::optional<FourierSeries> load(const std::string& name, int box) const;
  void store(const std::string& name, const FourierSeries& s) const;
  /// load, or compute(box) and store.
  FourierSeries get(const std::string& name, int box, const std::function<FourierSeries(int)>& compute) const;

  std::filesystem::path path_for(const std::string& name, int box) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace taut
