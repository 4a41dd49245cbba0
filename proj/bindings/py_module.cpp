#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wallsens/baselines.hpp"
#include "wallsens/cases.hpp"
#include "wallsens/fd_schemes.hpp"
#include "wallsens/metrics.hpp"
#include "wallsens/oracle.hpp"
#include "wallsens/taylor.hpp"
#include "wallsens/version.hpp"
#include "wallsens/window.hpp"

namespace py = pybind11;
using namespace wallsens;

namespace {

SensRequest make_request(const std::string& p, const std::string& q, int order) {
    SensRequest req;
    req.p = parse_param(p);
    if (!q.empty()) req.q = parse_param(q);
    req.order = order;
    return req;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Transient multilayer wall conduction with derivative-based sensitivity analysis";
    m.attr("__version__") = WALLSENS_VERSION;

    py::register_exception<DivergenceError>(m, "DivergenceError");
    py::register_exception<OracleFailure>(m, "OracleFailure");

    py::class_<Grid>(m, "Grid")
        .def(py::init<double, double, double>(), py::arg("dx"), py::arg("dt"), py::arg("t_max"))
        .def_readonly("dx", &Grid::dx)
        .def_readonly("dt", &Grid::dt)
        .def_readonly("t_max", &Grid::t_max)
        .def_readonly("n_nodes", &Grid::n_nodes)
        .def_readonly("n_steps", &Grid::n_steps);

    py::class_<DimensionlessProblem>(m, "Problem")
        .def("n_layers", &DimensionlessProblem::n_layers)
        .def("fourier", &DimensionlessProblem::fourier)
        .def("biot_left", &DimensionlessProblem::biot_left)
        .def("biot_right", &DimensionlessProblem::biot_right)
        .def("properties_at", &DimensionlessProblem::properties_at, py::arg("x_star"))
        .def("param_value",
             [](const DimensionlessProblem& p, const std::string& name) {
                 return p.param_value(parse_param(name));
             })
        .def("with_param",
             [](const DimensionlessProblem& p, const std::string& name, double value) {
                 return p.with_param(parse_param(name), value);
             });

    py::class_<FieldStore>(m, "FieldStore")
        .def_readonly("n_nodes", &FieldStore::n_nodes)
        .def_readonly("times", &FieldStore::times)
        .def_readonly("values", &FieldStore::values)
        .def("at", &FieldStore::at);

    py::class_<TrackOutputs>(m, "TrackOutputs")
        .def_readonly("flux", &TrackOutputs::flux)
        .def_readonly("field", &TrackOutputs::field)
        .def_property_readonly("slot", [](const TrackOutputs& t) { return slot_name(t.slot); })
        .def_readonly("squared_spacetime_integral", &TrackOutputs::squared_spacetime_integral)
        .def_readonly("final_level", &TrackOutputs::final_level);

    py::class_<MarchResult>(m, "MarchResult")
        .def_readonly("tracks", &MarchResult::tracks)
        .def("loads",
             [](const MarchResult& r, double t0, double t1, const std::string& slot) {
                 SlotId s = SlotId::Value;
                 if (slot == "dp") s = SlotId::DP;
                 else if (slot == "dq") s = SlotId::DQ;
                 else if (slot == "dpp") s = SlotId::DPP;
                 else if (slot == "dqq") s = SlotId::DQQ;
                 else if (slot == "dpq") s = SlotId::DPQ;
                 else if (slot != "u") throw std::invalid_argument("unknown slot: " + slot);
                 return r.loads(t0, t1, s);
             },
             py::arg("t0"), py::arg("t1"), py::arg("slot") = "u");

    m.def("validation_case", &validation_case,
          "The two-layer benchmark problem (Bi = 0.1/0.2, Fo = 0.02)");
    m.def("annual_wall_problem",
          [](std::uint64_t seed) {
              AnnualWallCase c = annual_wall_case(seed);
              return py::make_tuple(c.problem, c.grid);
          },
          py::arg("seed") = 2203);

    m.def("solve",
          [](const DimensionlessProblem& p, const Grid& g, int store_every,
             const std::vector<double>& probes) {
              MarchOptions mo;
              mo.store_every = store_every;
              mo.probes = probes;
              return solve(p, g, mo);
          },
          py::arg("problem"), py::arg("grid"), py::arg("store_every") = 0,
          py::arg("probes") = std::vector<double>{});

    m.def("propagate",
          [](const DimensionlessProblem& p, const Grid& g, const std::string& param,
             const std::string& param2, int order, int store_every) {
              MarchOptions mo;
              mo.store_every = store_every;
              return propagate(p, g, make_request(param, param2, order), mo);
          },
          py::arg("problem"), py::arg("grid"), py::arg("param"), py::arg("param2") = "",
          py::arg("order") = 1, py::arg("store_every") = 0);

    m.def("absorbed_fraction", &absorbed_fraction, py::arg("reflectivity"),
          py::arg("transmissivity"));
    m.def("local_metric", &local_metric, py::arg("squared_integrals"));
    m.def("evaluation_count",
          [](const std::string& kind, int n_params) {
              FdKind k;
              if (kind == "forward") k = FdKind::Forward;
              else if (kind == "backward") k = FdKind::Backward;
              else if (kind == "central") k = FdKind::Central;
              else if (kind == "three-point") k = FdKind::ThreePointBackward;
              else throw std::invalid_argument("unknown scheme: " + kind);
              return evaluation_count(k, n_params);
          },
          py::arg("scheme"), py::arg("n_params"));

    m.def("sobol_indices",
          [](const std::function<double(std::vector<double>)>& model,
             const std::vector<std::pair<double, double>>& domains, int n, std::uint64_t seed) {
              SobolOptions so;
              so.n_samples = n;
              so.seed = seed;
              VarianceReport rep = sobol_indices(
                  [&](const std::vector<double>& v) { return model(v); }, domains, so);
              py::dict out;
              out["s1"] = rep.s1;
              out["s_total"] = rep.s_total;
              out["d_total"] = rep.d_total;
              out["variance"] = rep.variance;
              out["evaluations"] = rep.evaluations;
              return out;
          },
          py::arg("model"), py::arg("domains"), py::arg("n_samples") = 1024, py::arg("seed") = 0);

    m.def("rbd_fast",
          [](const std::function<double(std::vector<double>)>& model,
             const std::vector<std::pair<double, double>>& domains, int n, int harmonics,
             std::uint64_t seed) {
              RbdOptions ro;
              ro.n_samples = n;
              ro.harmonics = harmonics;
              ro.seed = seed;
              RbdReport rep =
                  rbd_fast([&](const std::vector<double>& v) { return model(v); }, domains, ro);
              py::dict out;
              out["s1"] = rep.s1;
              out["evaluations"] = rep.evaluations;
              return out;
          },
          py::arg("model"), py::arg("domains"), py::arg("n_samples") = 500,
          py::arg("harmonics") = 6, py::arg("seed") = 0);

    m.def("build_taylor_loads",
          [](const DimensionlessProblem& p, const Grid& g, const std::vector<std::string>& params,
             int order, double t0, double t1) {
              std::vector<ParamId> ids;
              for (const auto& s : params) ids.push_back(parse_param(s));
              TaylorBuildOptions topt;
              topt.load_intervals = {{t0, t1 > t0 ? t1 : g.t_max}};
              return build_taylor(p, g, ids, order, topt);
          },
          py::arg("problem"), py::arg("grid"), py::arg("params"), py::arg("order") = 2,
          py::arg("t0") = 0.0, py::arg("t1") = -1.0);

    py::class_<TaylorModel>(m, "TaylorModel")
        .def_readonly("anchors", &TaylorModel::anchors)
        .def_readonly("order", &TaylorModel::order)
        .def("load",
             [](const TaylorModel& m2, const std::vector<double>& values) {
                 return taylor_load(m2, 0, values);
             })
        .def("to_json", &taylor_to_json);
}
