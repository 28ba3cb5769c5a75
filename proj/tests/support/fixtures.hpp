#pragma once

#include <array>
#include <string>
#include <vector>

#include "hetealloc/dataset.hpp"
#include "toy_network.hpp"

namespace hetealloc::test {

// Small worked networks, reconstructed from their reference similarity
// tables.
ToyNet network1();
ToyNet network2();
// Partial: BL and the HA3 entries on each author's home category match.
ToyNet network3();

// Column order of the similarity tables.
enum Column { kBL, kHS, kHA1, kHA2, kHA3, kWHA1, kWHA2, kWHA3, kColumns };
inline constexpr std::array<const char*, kColumns> kColumnNames{
    "BL", "HeteSim", "HA1", "HA2", "HA3", "WHA1", "WHA2", "WHA3"};

struct TableRow {
  int author;    // 0-based
  int category;  // 0-based
  std::array<double, kColumns> values;
};

const std::vector<TableRow>& table1();
const std::vector<TableRow>& table2();
const std::vector<TableRow>& table3();

// Evaluates one table column on a network with the library kernels.
double evaluate_column(const Network& net, const Network& weighted, Column c, int a, int m);

// Ten-year ledger: 4 authors, 3 categories, 10 years.
using Matrix43 = std::array<std::array<double, 3>, 4>;
const std::array<Matrix43, 10>& decade_bl();
const std::array<Matrix43, 10>& decade_dha();

std::string data_dir();
Dataset decade_dataset();

// Dense 4x3 view of a snapshot (rows A1..A4, columns M1..M3).
Matrix43 to_matrix(const Snapshot& snapshot);

}  // namespace hetealloc::test
