#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hetealloc/dataset.hpp"
#include "hetealloc/errors.hpp"
#include "hetealloc/metrics.hpp"
#include "hetealloc/pipeline.hpp"
#include "hetealloc/similarity.hpp"

namespace py = pybind11;
using namespace hetealloc;

namespace {

Aggregation parse_aggregation(const std::string& text) {
  if (text == "sum") return Aggregation::Sum;
  if (text == "average") return Aggregation::Average;
  throw UsageError("aggregation must be 'sum' or 'average', got '" + text + "'");
}

using Paper = std::pair<std::vector<std::string>, std::vector<std::string>>;

// A static author-paper-category network queried by label.
class PyNetwork {
 public:
  explicit PyNetwork(const std::vector<Paper>& papers) {
    for (std::size_t i = 0; i < papers.size(); ++i) {
      builder_.add_paper("P" + std::to_string(i + 1), papers[i].first, papers[i].second);
    }
    plain_ = builder_.build();
    weighted_ = plain_.weighted();
  }

  std::size_t authors() const { return plain_.authors(); }
  std::size_t papers() const { return plain_.papers(); }
  std::size_t categories() const { return plain_.categories(); }

  double hetesim(const std::string& a, const std::string& m, bool weighted) const {
    return hetesim_author_mesh(builder_.author(a), builder_.category(m), net(weighted));
  }
  double ha1(const std::string& a, const std::string& m, bool weighted) const {
    return hetealloc_ha1(builder_.author(a), builder_.category(m), net(weighted));
  }
  double ha2(const std::string& a, const std::string& m, bool weighted) const {
    return hetealloc_ha2(builder_.author(a), builder_.category(m), net(weighted));
  }
  double ha3(const std::string& a, const std::string& m, const std::string& aggregation,
             bool weighted) const {
    return hetealloc_ha3(builder_.author(a), builder_.category(m), parse_aggregation(aggregation),
                         net(weighted));
  }
  double bl(const std::string& a, const std::string& m) const {
    return baseline_similarity(builder_.author(a), builder_.category(m), plain_);
  }

 private:
  const Network& net(bool weighted) const { return weighted ? weighted_ : plain_; }

  NetworkBuilder builder_;
  Network plain_;
  Network weighted_;
};

using Series = std::map<int, std::map<std::string, Profile>>;

Series run(const std::filesystem::path& links, const std::filesystem::path& mesh,
           const std::optional<std::filesystem::path>& taxonomy, const std::string& method,
           std::optional<std::pair<int, int>> years, bool weighted,
           const std::string& aggregation, unsigned threads) {
  RunConfig config;
  config.method = parse_method(method);
  config.weighted = weighted;
  const Aggregation agg = parse_aggregation(aggregation);
  if (config.method == Method::Ha3) config.aggregation = agg;
  if (years) config.years = YearRange{years->first, years->second};
  config.threads = threads;
  validate(config);

  const Dataset dataset = load_dataset(links, mesh, taxonomy);
  Series out;
  if (!dataset.first_year()) return out;
  const YearRange range =
      years ? YearRange{years->first, years->second}
            : YearRange{*dataset.first_year(), *dataset.last_year()};
  const ExpertiseStore store = run_method(dataset, config.method, range, weighted,
                                          config.aggregation.value_or(Aggregation::Sum), threads);
  for (const Snapshot& s : store.snapshots()) out[s.year] = s.profiles;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Heterogeneous expertise allocation kernels and yearly expertise stores";

  py::register_exception<DataError>(m, "DataError", PyExc_ValueError);
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<InvalidQuery>(m, "InvalidQuery", PyExc_ValueError);

  py::class_<PyNetwork>(m, "Network")
      .def(py::init<const std::vector<Paper>&>(), py::arg("papers"),
           "Build from a list of (authors, categories) pairs; papers are named P1, P2, ...")
      .def_property_readonly("authors", &PyNetwork::authors)
      .def_property_readonly("papers", &PyNetwork::papers)
      .def_property_readonly("categories", &PyNetwork::categories)
      .def("hetesim", &PyNetwork::hetesim, py::arg("author"), py::arg("category"),
           py::arg("weighted") = false)
      .def("ha1", &PyNetwork::ha1, py::arg("author"), py::arg("category"),
           py::arg("weighted") = false)
      .def("ha2", &PyNetwork::ha2, py::arg("author"), py::arg("category"),
           py::arg("weighted") = false)
      .def("ha3", &PyNetwork::ha3, py::arg("author"), py::arg("category"),
           py::arg("aggregation") = "average", py::arg("weighted") = false)
      .def("bl", &PyNetwork::bl, py::arg("author"), py::arg("category"));

  m.def("ingest",
        [](const std::filesystem::path& links, const std::filesystem::path& mesh,
           const std::optional<std::filesystem::path>& taxonomy) {
          return cmd_ingest(links, mesh, taxonomy).dump();
        },
        py::arg("links"), py::arg("mesh"), py::arg("taxonomy") = py::none(),
        "Dataset manifest as a JSON string.");

  m.def("run", &run, py::arg("links"), py::arg("mesh"), py::arg("taxonomy") = py::none(),
        py::arg("method") = "dha", py::arg("years") = py::none(), py::arg("weighted") = false,
        py::arg("aggregation") = "sum", py::arg("threads") = 1u,
        py::call_guard<py::gil_scoped_release>(),
        "Run a method over a dataset; returns {year: {author: {category: value}}}.");

  m.def("max_min_ratio", &max_min_ratio, py::arg("profile"));
  m.def("normalized_max", &normalized_max, py::arg("profile"));
  m.def("histogram",
        [](const std::vector<double>& values, double bin_width) {
          return histogram(values, bin_width);
        },
        py::arg("values"), py::arg("bin_width") = 0.05);
}
