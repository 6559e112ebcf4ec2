// Python bindings for the exact genus-stratified set-partition toolkit.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <genuspart/enumerate.hpp>
#include <genuspart/genus_gf.hpp>
#include <genuspart/json_io.hpp>
#include <genuspart/partition.hpp>
#include <genuspart/rational.hpp>
#include <genuspart/reduce.hpp>
#include <genuspart/series.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace genuspart;

namespace {

py::int_ big_to_py(const BigInt& v) {
    return py::module_::import("builtins").attr("int")(v.str());
}

ClassFilter parse_class(const std::string& name) {
    if (name == "all") return ClassFilter::all;
    if (name == "primitive") return ClassFilter::primitive;
    if (name == "semiprimitive") return ClassFilter::semiprimitive;
    throw std::invalid_argument("class must be all, primitive or semiprimitive");
}

EnumOptions make_options(const std::optional<std::string>& type, std::optional<int> genus,
                         bool singleton_free, const std::string& klass, std::uint64_t budget,
                         int threads) {
    EnumOptions opt;
    if (type) opt.type = PartitionType::parse(*type);
    opt.genus = genus;
    opt.singleton_free = singleton_free;
    opt.klass = parse_class(klass);
    opt.budget = budget;
    opt.threads = threads;
    return opt;
}

bool needs_poly(const CumulantSpec& spec) {
    return spec.mode == WeightMode::symbolic || spec.mode == WeightMode::all_y ||
           spec.mode == WeightMode::singleton_free_y;
}

template <class C>
std::vector<std::string> series_strings(const CumulantSpec& spec, int genus, int order) {
    Series<C> W = build_W<C>(spec, order);
    Series<C> Z = genus == 0 ? genus0_gf(W) : genus == 1 ? genus1_gf(W) : genus2_gf(W);
    std::vector<std::string> out;
    out.reserve(order + 1);
    for (int k = 0; k <= order; ++k) out.push_back(CoeffTraits<C>::str(Z.coeff(k)));
    return out;
}

py::dict trace_to_dict(const ReductionTrace& t) {
    py::dict d;
    d["initial"] = t.initial.str();
    d["genus"] = t.genus;
    py::list steps;
    for (const ReductionStep& s : t.steps) {
        py::dict step;
        step["kind"] = to_string(s.kind);
        step["removed"] = s.removed;
        step["before_n"] = s.before_n;
        step["after_n"] = s.after_n;
        steps.append(step);
    }
    d["steps"] = steps;
    d["reduced"] = t.reduced.str();
    d["class"] = to_string(t.result_class);
    return d;
}

}  // namespace

PYBIND11_MODULE(genuspart, m) {
    m.doc() = "exact counting of set partitions of {1..n} stratified by the genus of "
              "their chord diagram, with reduction to irreducible diagrams and the "
              "genus 0/1/2 generating-function machinery over exact rationals";

    py::class_<Partition>(m, "Partition")
        .def(py::init(&Partition::parse), py::arg("text"),
             "parse \"1,3,4|2,5|6\" (parts separated by '|', n is the largest element)")
        .def_static("parse", &Partition::parse, py::arg("text"))
        .def_static("from_parts", &Partition::from_parts, py::arg("n"), py::arg("parts"))
        .def_property_readonly("n", &Partition::n)
        .def_property_readonly("parts", [](const Partition& p) { return p.parts(); })
        .def_property_readonly("part_count", &Partition::part_count)
        .def_property_readonly("type", [](const Partition& p) { return p.type().str(); })
        .def("tau_cycles", [](const Partition& p) { return p.tau().cycle_string(); },
             "the part permutation, one ascending cycle per part")
        .def("face_cycles",
             [](const Partition& p) { return p.face_permutation().cycle_string(); },
             "cycles of sigma tau^-1: the faces of the chord diagram")
        .def("face_count", &Partition::face_count)
        .def("genus", &Partition::genus)
        .def("rotated", &Partition::rotated, py::arg("k"))
        .def("canonical", &Partition::canonical)
        .def("stabilizer_order", &Partition::stabilizer_order)
        .def("__str__", &Partition::str)
        .def("__repr__", [](const Partition& p) { return "Partition(\"" + p.str() + "\")"; })
        .def("__eq__", [](const Partition& a, const Partition& b) { return a == b; });

    m.def("genus_max", py::overload_cast<int>(&genus_max), py::arg("n"),
          "largest genus any partition of [n] can have");
    m.def(
        "genus_max_of_type",
        [](int n, const std::string& type) { return genus_max(n, PartitionType::parse(type)); },
        py::arg("n"), py::arg("type"));

    m.def("bell_number", [](int n) { return big_to_py(bell_number(n)); }, py::arg("n"));
    m.def(
        "partition_count",
        [](int n, const std::string& type) {
            return big_to_py(partition_count_big(n, PartitionType::parse(type)));
        },
        py::arg("n"), py::arg("type"), "labeled partitions of [n] with the given type");
    m.def(
        "kreweras_count",
        [](int n, const std::string& type) {
            return big_to_py(kreweras_count_big(n, PartitionType::parse(type)));
        },
        py::arg("n"), py::arg("type"), "genus-0 partitions of [n] with the given type");

    m.def(
        "count_by_genus",
        [](int n, const std::optional<std::string>& type, std::optional<int> genus,
           bool singleton_free, const std::string& klass, std::uint64_t budget, int threads) {
            GenusCountTable t =
                count_by_genus(n, make_options(type, genus, singleton_free, klass, budget, threads));
            py::dict out;
            for (const auto& [cell, cnt] : t.cells)
                out[py::make_tuple(cell.first.str(), cell.second)] = cnt;
            return out;
        },
        py::arg("n"), py::arg("type") = std::nullopt, py::arg("genus") = std::nullopt,
        py::arg("singleton_free") = false, py::arg("klass") = "all",
        py::arg("budget") = std::uint64_t{100000000}, py::arg("threads") = 1,
        "counts keyed by (type, genus), restricted by the optional filters");

    m.def(
        "partitions",
        [](int n, const std::optional<std::string>& type, std::optional<int> genus,
           bool singleton_free, const std::string& klass, std::uint64_t budget) {
            std::vector<Partition> out;
            for_each_partition(n, make_options(type, genus, singleton_free, klass, budget, 1),
                               [&](const Partition& p, int) { out.push_back(p); });
            return out;
        },
        py::arg("n"), py::arg("type") = std::nullopt, py::arg("genus") = std::nullopt,
        py::arg("singleton_free") = false, py::arg("klass") = "all",
        py::arg("budget") = std::uint64_t{100000000},
        "the filtered partitions themselves; budget-guarded");

    m.def(
        "orbit_census",
        [](int n, const std::optional<std::string>& type, std::optional<int> genus,
           bool singleton_free, const std::string& klass, std::uint64_t budget) {
            py::list out;
            for (const OrbitRecord& r :
                 orbit_census(n, make_options(type, genus, singleton_free, klass, budget, 1))) {
                py::dict d;
                d["representative"] = r.representative.str();
                d["stabilizer_order"] = r.stabilizer_order;
                d["orbit_length"] = r.orbit_length;
                out.append(d);
            }
            return out;
        },
        py::arg("n"), py::arg("type") = std::nullopt, py::arg("genus") = std::nullopt,
        py::arg("singleton_free") = false, py::arg("klass") = "all",
        py::arg("budget") = std::uint64_t{100000000},
        "orbits under cyclic rotation with stabilizer orders and orbit lengths");

    m.def("reduce", [](const Partition& p) { return trace_to_dict(reduce(p)); }, py::arg("p"),
          "apply genus-preserving deletions to the irreducible core");
    m.def("is_primitive", &is_primitive, py::arg("p"));
    m.def("is_semiprimitive", &is_semiprimitive, py::arg("p"));
    m.def("is_irreducible", &is_irreducible, py::arg("p"));
    m.def(
        "confluence_check",
        [](const Partition& p, std::uint64_t trials, std::uint64_t seed) {
            return confluence_check(p, trials, seed).consistent;
        },
        py::arg("p"), py::arg("trials") = 32, py::arg("seed") = 20240915,
        "random reduction orders all reach the deterministic result");

    m.def(
        "census_genus2",
        [](int n_min, int n_max, std::uint64_t budget, int threads) {
            py::list out;
            for (const CensusRow& r : census_genus2(n_min, n_max, budget, threads).rows) {
                py::dict d;
                d["n"] = r.n;
                d["doublets_only"] = r.two_vertices_only;
                d["one_triplet"] = r.one_3vertex;
                d["two_triplets_primitive"] = r.two_3vertices_prim;
                d["two_triplets_semiprimitive"] = r.two_3vertices_semiprim;
                d["one_quadruplet"] = r.one_4vertex;
                d["total"] = r.total();
                out.append(d);
            }
            return out;
        },
        py::arg("n_min") = 6, py::arg("n_max") = 18, py::arg("budget") = std::uint64_t{0},
        py::arg("threads") = 1, "genus-2 irreducible diagram counts by part profile");

    m.def(
        "gf_series",
        [](const std::string& kappa, int genus, int order) {
            if (genus < 0 || genus > 2)
                throw std::invalid_argument("gf_series supports genus 0, 1 or 2");
            CumulantSpec spec = CumulantSpec::parse(kappa);
            return needs_poly(spec) ? series_strings<Poly>(spec, genus, order)
                                    : series_strings<Rat>(spec, genus, order);
        },
        py::arg("kappa"), py::arg("genus"), py::arg("order"),
        "coefficients [x^0..x^order] of the genus-g series for the given weights, "
        "as exact rational or polynomial strings");

    m.def(
        "genus3_doublet_series",
        [](int order) {
            Series<Rat> z = genus3_doublet_series(order);
            std::vector<std::string> out;
            for (int k = 0; k <= order; ++k) out.push_back(rat_to_string(z.coeff(k)));
            return out;
        },
        py::arg("order"));

    m.def(
        "moment_polynomial",
        [](int n, std::uint64_t budget) { return moment_polynomial(n, budget).str(); },
        py::arg("n"), py::arg("budget") = std::uint64_t{100000000},
        "the n-th moment as a polynomial in the cumulants, genus marked by eps");
}
