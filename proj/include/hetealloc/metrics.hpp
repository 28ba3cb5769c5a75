#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "hetealloc/dynamic.hpp"

namespace hetealloc {

// Largest over smallest nonzero entry. Throws std::invalid_argument when the
// profile has no nonzero entry.
double max_min_ratio(const Profile& profile);
// Largest entry over the Euclidean norm. Same precondition.
double normalized_max(const Profile& profile);

struct ProfileStats {
  double max_min_ratio = 1.0;
  double normalized_max = 1.0;
  std::size_t paper_count = 0;
};

ProfileStats profile_stats(const Profile& profile, std::size_t paper_count);

using PaperCounts = std::map<std::string, std::size_t>;  // author -> papers so far

// Authors with strictly more than `threshold` papers.
std::set<std::string> productive_filter(const Snapshot& snapshot,
                                        const PaperCounts& paper_counts,
                                        std::size_t threshold = 10);

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation; 0 for fewer than two values
  std::size_t n = 0;
};

MeanStd mean_std(std::span<const double> values);

struct MethodYearStats {
  MeanStd max_min_ratio;
  MeanStd normalized_max;
  MeanStd productive_normalized_max;
};

struct YearSummary {
  int year = 0;
  std::vector<MethodYearStats> methods;  // same order as the input stores
};

struct MethodSeries {
  std::string name;
  const ExpertiseStore* store = nullptr;
};

// Per year and method: mean/std of the max/min ratio and normalised maximum
// over authors with a nonempty profile, and of the normalised maximum over
// productive authors. Every store must have a snapshot for every year.
std::vector<YearSummary> yearly_summary(std::span<const MethodSeries> methods,
                                        std::span<const int> years,
                                        const std::map<int, PaperCounts>& paper_counts,
                                        std::size_t threshold = 10);

// Tab-separated, one mean row and one std row per year:
//   year  stat  (1)_<m0>  (1)_<m1>  (2)_<m0>  (2)_<m1>  (3)_<m0>  (3)_<m1>
void write_summary_tsv(std::ostream& out, std::span<const MethodSeries> methods,
                       std::span<const YearSummary> rows);

// Counts per bin over [0,1]; 1.0 lands in the last bin. Throws
// std::invalid_argument for values outside [0,1] or a width that does not
// divide 1.
std::vector<std::size_t> histogram(std::span<const double> values, double bin_width = 0.05);

// `bin_low<TAB>count` lines.
void write_histogram_tsv(std::ostream& out, std::span<const std::size_t> counts,
                         double bin_width = 0.05);

}  // namespace hetealloc
