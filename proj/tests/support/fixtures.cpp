#include "fixtures.hpp"

#include <fstream>
#include <stdexcept>

namespace hetealloc::test {
namespace {

ToyPaper paper(std::set<int> authors, std::set<int> categories) {
  return {std::move(authors), std::move(categories)};
}

}  // namespace

ToyNet network1() {
  ToyNet n{2, 2, {}};
  n.papers = {paper({0, 1}, {0}), paper({0}, {1}), paper({0}, {1}), paper({1}, {1}),
              paper({1}, {1})};
  return n;
}

ToyNet network2() {
  ToyNet n{3, 2, {}};
  n.papers = {paper({0}, {0}), paper({0, 1}, {0}), paper({1}, {0}), paper({1}, {0}),
              paper({1}, {0}), paper({2}, {0}), paper({2}, {1})};
  return n;
}

ToyNet network3() {
  ToyNet n{4, 2, {}};
  n.papers = {paper({0}, {0}), paper({0, 1}, {0}), paper({1}, {0, 1}),
              paper({2}, {1}), paper({2, 3}, {1}), paper({3}, {1, 0})};
  return n;
}

const std::vector<TableRow>& table1() {
  static const std::vector<TableRow> rows{
      {0, 0, {.577, .577, .577, .577, .577, .577, .577, .577}},
      {0, 1, {.816, .577, .577, .816, .816, .577, .816, .816}},
      {1, 0, {.577, .577, .577, .577, .577, .577, .577, .577}},
      {1, 1, {.816, .577, .577, .816, .816, .577, .816, .816}},
  };
  return rows;
}

const std::vector<TableRow>& table2() {
  static const std::vector<TableRow> rows{
      {0, 0, {1, .577, .632, .632, .816, .632, .632, .816}},
      {0, 1, {0, 0, 0, 0, 0, 0, 0, 0}},
      {1, 0, {1, .816, .894, .894, .973, .894, .894, .973}},
      {1, 1, {0, 0, 0, 0, 0, 0, 0, 0}},
      {2, 0, {.707, .288, .707, .707, .707, .707, .707, .707}},
      {2, 1, {.707, .707, .707, .707, .707, .707, .707, .707}},
  };
  return rows;
}

const std::vector<TableRow>& table3() {
  static const std::vector<TableRow> rows{
      {0, 0, {1, .943, .816, .816, .908, .943, .943, .971}},
      {0, 1, {0, 0, 0, 0, 0, 0, 0, 0}},
      {1, 0, {.816, .707, .816, .816, .908, .707, .707, .828}},
      {1, 1, {.577, .236, .5, .5, .5, .316, .316, .316}},
      {2, 0, {0, 0, 0, 0, 0, 0, 0, 0}},
      {2, 1, {1, .943, .816, .816, .908, .943, .943, .971}},
      {3, 0, {.577, .236, .5, .5, .5, .316, .316, .316}},
      {3, 1, {.816, .707, .816, .816, .908, .707, .707, .828}},
  };
  return rows;
}

double evaluate_column(const Network& net, const Network& weighted, Column c, int a, int m) {
  const Index ai = a, mi = m;
  switch (c) {
    case kBL: return baseline_similarity(ai, mi, net);
    case kHS: return hetesim_author_mesh(ai, mi, net);
    case kHA1: return hetealloc_ha1(ai, mi, net);
    case kHA2: return hetealloc_ha2(ai, mi, net);
    case kHA3: return hetealloc_ha3(ai, mi, Aggregation::Average, net);
    case kWHA1: return hetealloc_ha1(ai, mi, weighted);
    case kWHA2: return hetealloc_ha2(ai, mi, weighted);
    case kWHA3: return hetealloc_ha3(ai, mi, Aggregation::Average, weighted);
    case kColumns: break;
  }
  throw std::logic_error("bad column");
}

namespace {

Matrix43 scaled(const Matrix43& m, double k) {
  Matrix43 out = m;
  for (auto& row : out) {
    for (double& v : row) v *= k;
  }
  return out;
}

}  // namespace

const std::array<Matrix43, 10>& decade_bl() {
  static const std::array<Matrix43, 10> tables = [] {
    const Matrix43 t1{{{0, 1, 1}, {2, 0, 1}, {0, 2, 1}, {1, 0, 1}}};
    return std::array<Matrix43, 10>{
        t1,
        scaled(t1, 2),
        scaled(t1, 3),
        scaled(t1, 4),
        scaled(t1, 5),
        Matrix43{{{0, 7, 7}, {12, 4, 7}, {4, 12, 7}, {7, 0, 7}}},
        Matrix43{{{0, 9, 9}, {14, 8, 9}, {8, 14, 9}, {9, 0, 9}}},
        Matrix43{{{0, 11, 11}, {16, 12, 11}, {12, 16, 11}, {11, 0, 11}}},
        Matrix43{{{0, 13, 13}, {18, 16, 13}, {16, 18, 13}, {13, 0, 13}}},
        Matrix43{{{0, 15, 15}, {20, 20, 15}, {20, 20, 15}, {15, 0, 15}}},
    };
  }();
  return tables;
}

// Reference values, two decimals. The A4 row of year 2 repeats A2's pattern and the A4 row of
// year 10 swaps M1 and M3 against A1's; neither matches the symmetry of the
// other years.
const std::array<Matrix43, 10>& decade_dha() {
  static const std::array<Matrix43, 10> tables{
      Matrix43{{{0, 1, 1}, {2, 0, 1}, {0, 2, 1}, {1, 0, 1}}},
      Matrix43{{{0, 1.95, 1.95}, {3.95, 0, 1.84}, {0, 3.95, 1.84}, {3.95, 0, 1.84}}},
      Matrix43{{{0, 2.86, 2.86}, {5.88, 0, 2.61}, {0, 5.88, 2.61}, {2.86, 0, 2.86}}},
      Matrix43{{{0, 3.76, 3.76}, {7.82, 0, 3.33}, {0, 7.82, 3.33}, {3.76, 0, 3.76}}},
      Matrix43{{{0, 4.64, 4.64}, {9.75, 0, 4.02}, {0, 9.75, 4.02}, {4.64, 0, 4.64}}},
      Matrix43{{{0, 5.94, 5.79}, {11.15, 0.34, 4.86}, {0.34, 11.15, 4.86}, {5.94, 0, 5.79}}},
      Matrix43{{{0, 7.22, 6.93}, {12.54, 0.72, 5.69}, {0.72, 12.54, 5.69}, {7.22, 0, 6.93}}},
      Matrix43{{{0, 8.50, 8.05}, {13.92, 1.14, 6.52}, {1.14, 13.92, 6.52}, {8.50, 0, 8.05}}},
      Matrix43{{{0, 9.76, 9.15}, {15.3, 1.61, 7.33}, {1.61, 15.3, 7.33}, {9.76, 0, 9.15}}},
      Matrix43{{{0, 11.02, 10.25}, {16.66, 2.12, 8.14}, {2.12, 16.66, 8.14}, {10.25, 0, 11.02}}},
  };
  return tables;
}

std::string data_dir() { return HETEALLOC_TEST_DATA_DIR; }

Dataset decade_dataset() {
  return load_dataset(data_dir() + "/decade_links.tsv", data_dir() + "/decade_mesh.tsv",
                      std::nullopt);
}

Matrix43 to_matrix(const Snapshot& snapshot) {
  Matrix43 out{};
  for (int a = 0; a < 4; ++a) {
    auto it = snapshot.profiles.find(author_label(a));
    if (it == snapshot.profiles.end()) continue;
    for (int m = 0; m < 3; ++m) {
      auto v = it->second.find(category_label(m));
      if (v != it->second.end()) out[a][m] = v->second;
    }
  }
  return out;
}

}  // namespace hetealloc::test
