#include "hetealloc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace hetealloc {
namespace {

void require_nonzero(const Profile& profile, const char* what) {
  if (std::none_of(profile.begin(), profile.end(), [](const auto& kv) { return kv.second != 0.0; })) {
    throw std::invalid_argument(std::string(what) + ": profile has no nonzero entry");
  }
}

}  // namespace

double max_min_ratio(const Profile& profile) {
  require_nonzero(profile, "max_min_ratio");
  double lo = INFINITY, hi = 0.0;
  for (const auto& [category, v] : profile) {
    if (v == 0.0) continue;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return hi / lo;
}

double normalized_max(const Profile& profile) {
  require_nonzero(profile, "normalized_max");
  double hi = 0.0, sq = 0.0;
  for (const auto& [category, v] : profile) {
    hi = std::max(hi, v);
    sq += v * v;
  }
  return std::min(1.0, hi / std::sqrt(sq));
}

ProfileStats profile_stats(const Profile& profile, std::size_t paper_count) {
  return {max_min_ratio(profile), normalized_max(profile), paper_count};
}

std::set<std::string> productive_filter(const Snapshot& snapshot, const PaperCounts& paper_counts,
                                        std::size_t threshold) {
  std::set<std::string> out;
  for (const auto& [author, profile] : snapshot.profiles) {
    auto it = paper_counts.find(author);
    if (it != paper_counts.end() && it->second > threshold) out.insert(author);
  }
  return out;
}

MeanStd mean_std(std::span<const double> values) {
  MeanStd r;
  r.n = values.size();
  if (values.empty()) return r;
  double sum = 0.0;
  for (double v : values) sum += v;
  r.mean = sum / static_cast<double>(r.n);
  if (r.n < 2) return r;
  double ss = 0.0;
  for (double v : values) ss += (v - r.mean) * (v - r.mean);
  r.std = std::sqrt(ss / static_cast<double>(r.n - 1));
  return r;
}

std::vector<YearSummary> yearly_summary(std::span<const MethodSeries> methods,
                                        std::span<const int> years,
                                        const std::map<int, PaperCounts>& paper_counts,
                                        std::size_t threshold) {
  static const PaperCounts kNoCounts;
  std::vector<YearSummary> rows;
  for (int year : years) {
    YearSummary row;
    row.year = year;
    auto pc = paper_counts.find(year);
    const PaperCounts& counts = pc == paper_counts.end() ? kNoCounts : pc->second;
    for (const MethodSeries& m : methods) {
      const Snapshot* s = m.store->at_year(year);
      if (s == nullptr) {
        throw std::invalid_argument("method '" + m.name + "' has no snapshot for year " +
                                    std::to_string(year));
      }
      const std::set<std::string> productive = productive_filter(*s, counts, threshold);
      std::vector<double> ratios, maxima, productive_maxima;
      for (const auto& [author, profile] : s->profiles) {
        const bool nonzero = std::any_of(profile.begin(), profile.end(),
                                         [](const auto& kv) { return kv.second != 0.0; });
        if (!nonzero) continue;
        ratios.push_back(max_min_ratio(profile));
        const double nm = normalized_max(profile);
        maxima.push_back(nm);
        if (productive.contains(author)) productive_maxima.push_back(nm);
      }
      row.methods.push_back({mean_std(ratios), mean_std(maxima), mean_std(productive_maxima)});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_summary_tsv(std::ostream& out, std::span<const MethodSeries> methods,
                       std::span<const YearSummary> rows) {
  out << "year\tstat";
  for (const char* measure : {"(1)", "(2)", "(3)"}) {
    for (const MethodSeries& m : methods) out << '\t' << measure << '_' << m.name;
  }
  out << '\n';
  const auto saved = out.flags();
  const auto precision = out.precision();
  out << std::fixed << std::setprecision(4);
  for (const YearSummary& row : rows) {
    for (const bool is_mean : {true, false}) {
      out << row.year << '\t' << (is_mean ? "mean" : "std");
      auto pick = [&](const MeanStd& ms) { return is_mean ? ms.mean : ms.std; };
      for (const MethodYearStats& s : row.methods) out << '\t' << pick(s.max_min_ratio);
      for (const MethodYearStats& s : row.methods) out << '\t' << pick(s.normalized_max);
      for (const MethodYearStats& s : row.methods) out << '\t' << pick(s.productive_normalized_max);
      out << '\n';
    }
  }
  out.flags(saved);
  out.precision(precision);
}

std::vector<std::size_t> histogram(std::span<const double> values, double bin_width) {
  const double bins_f = 1.0 / bin_width;
  const auto bins = static_cast<std::size_t>(std::llround(bins_f));
  if (!(bin_width > 0.0) || bins == 0 || std::abs(bins_f - static_cast<double>(bins)) > 1e-9) {
    throw std::invalid_argument("bin width must divide [0,1] evenly");
  }
  std::vector<std::size_t> counts(bins, 0);
  for (double v : values) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::invalid_argument("histogram value " + std::to_string(v) + " outside [0,1]");
    }
    // v * bins avoids 0.15 / 0.05 == 2.9999...
    auto b = static_cast<std::size_t>(std::floor(v * static_cast<double>(bins) + 1e-9));
    ++counts[std::min(b, bins - 1)];
  }
  return counts;
}

void write_histogram_tsv(std::ostream& out, std::span<const std::size_t> counts, double bin_width) {
  const auto saved = out.flags();
  const auto precision = out.precision();
  out << std::fixed << std::setprecision(2);
  for (std::size_t b = 0; b < counts.size(); ++b) {
    out << static_cast<double>(b) * bin_width << '\t' << counts[b] << '\n';
  }
  out.flags(saved);
  out.precision(precision);
}

}  // namespace hetealloc
