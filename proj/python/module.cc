#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fusionburnside/catalog.hpp"
#include "fusionburnside/cli.hpp"
#include "fusionburnside/error.hpp"
#include "fusionburnside/stablesets.hpp"

namespace py = pybind11;
namespace fb = fusionburnside;

namespace {

using Coeffs = std::vector<std::int64_t>;

/// A(S) with coefficient vectors in class-table order.
struct Ring
{
  fb::RingPtr ring;

  explicit Ring(fb::RingPtr r) : ring(std::move(r)) {}
  explicit Ring(fb::Group const &s) : ring(fb::BurnsideRing::create(s)) {}

  fb::BurnsideElement element(Coeffs const &c) const { return {ring, c}; }

  std::vector<Coeffs> marks() const
  {
    auto const &m = ring->marks();
    std::vector<Coeffs> rows(m.size(), Coeffs(m.size()));
    for (std::size_t q = 0; q < m.size(); ++q)
      for (std::size_t p = 0; p < m.size(); ++p)
        rows[q][p] = m(q, p);
    return rows;
  }
};

py::dict report_dict(fb::SesReport const &report)
{
  py::list checks;
  for (auto const &c : report.checks)
    checks.append(py::make_tuple(c.name, c.passed, c.detail));
  py::dict d;
  d["passed"] = report.passed();
  d["obstruction_order"] = report.obstruction_order;
  d["checks"] = checks;
  return d;
}

fb::SesOptions options(std::uint64_t seed)
{
  fb::SesOptions o;
  o.seed = seed;
  return o;
}

fb::Group generate(int degree, std::vector<std::string> const &generators)
{
  std::vector<fb::Permutation> gens;
  for (auto const &g : generators)
    gens.push_back(fb::Permutation::parse_cycles(g, degree));
  return fb::Group::generate(degree, std::move(gens));
}

std::vector<std::string> class_labels(fb::FusionData const &f)
{
  std::vector<std::string> r;
  for (std::size_t k = 0; k < f.size(); ++k)
    r.push_back(f.label(k));
  return r;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
  m.doc() = "Burnside rings of p-groups and saturated fusion systems";

  auto base = py::register_exception<fb::Error>(m, "Error");
  py::register_exception<fb::InputError>(m, "InputError", base);
  py::register_exception<fb::SizeError>(m, "SizeError", base);
  py::register_exception<fb::PreconditionError>(m, "PreconditionError", base);
  py::register_exception<fb::InvariantError>(m, "InvariantError", base);
  py::register_exception<fb::NotInImageError>(m, "NotInImageError", base);
  py::register_exception<fb::StabilityError>(m, "StabilityError", base);

  m.def("catalog_names", [] {
    std::vector<std::string> names;
    for (auto const &e : fb::catalog())
      names.push_back(e.name);
    return names;
  });

  py::class_<fb::Group>(m, "Group")
    .def_static("generate", &generate, py::arg("degree"), py::arg("generators"),
                "Group generated by 1-based cycle strings such as '(1 2 3)'")
    .def_static("catalog", [](std::string const &name) {
      return fb::catalog_lookup(name).spec().build();
    }, py::arg("name"))
    .def_property_readonly("degree", &fb::Group::degree)
    .def_property_readonly("order", &fb::Group::order)
    .def("elements", [](fb::Group const &g) {
      std::vector<std::string> r;
      for (auto const &p : g.elements())
        r.push_back(p.to_cycle_string());
      return r;
    })
    .def("sylow_order", [](fb::Group const &g, int p) {
      return fb::sylow_subgroup(g, p).order();
    }, py::arg("p"))
    .def("__len__", &fb::Group::order);

  py::class_<Ring>(m, "BurnsideRing")
    .def(py::init<fb::Group const &>(), py::arg("group"))
    .def_property_readonly("rank", [](Ring const &r) { return r.ring->rank(); })
    .def_property_readonly("labels", [](Ring const &r) { return r.ring->table().labels(); })
    .def_property_readonly("weyl_orders", [](Ring const &r) { return r.ring->weyl_orders(); })
    .def("marks", &Ring::marks, "Table of marks, rows indexed by Q and columns by P")
    .def("mark", [](Ring const &r, Coeffs const &c) { return fb::mark(r.element(c)).marks(); },
         py::arg("coeffs"))
    .def("orbits", [](Ring const &r, Coeffs const &marks) {
      return fb::marks_to_orbits(fb::MarkVector(r.ring, marks)).coeffs();
    }, py::arg("marks"))
    .def("multiply", [](Ring const &r, Coeffs const &x, Coeffs const &y) {
      return fb::multiply(r.element(x), r.element(y)).coeffs();
    }, py::arg("x"), py::arg("y"))
    .def("psi", [](Ring const &r, Coeffs const &marks) {
      return fb::psi_group(fb::MarkVector(r.ring, marks)).residues;
    }, py::arg("marks"))
    .def("obstruction_order", [](Ring const &r) { return fb::obstruction_order(*r.ring); })
    .def("format", [](Ring const &r, Coeffs const &c, std::string const &name) {
      return r.element(c).to_string(name);
    }, py::arg("coeffs"), py::arg("name") = "S")
    .def("verify", [](Ring const &r, std::uint64_t seed) {
      return report_dict(fb::verify_ses_group(r.ring, options(seed)));
    }, py::arg("seed") = 20240101);

  py::class_<fb::FusionData>(m, "FusionSystem")
    .def(py::init([](fb::Group const &g, int p) { return fb::fusion_from_group(g, p); }),
         py::arg("group"), py::arg("p"))
    .def_property_readonly("prime", &fb::FusionData::prime)
    .def_property_readonly("sylow_order", [](fb::FusionData const &f) {
      return f.sylow().order();
    })
    .def_property_readonly("ring", [](fb::FusionData const &f) { return Ring(f.ring()); })
    .def_property_readonly("labels", &class_labels)
    .def("members", [](fb::FusionData const &f) {
      std::vector<std::vector<std::string>> r;
      for (std::size_t k = 0; k < f.size(); ++k) {
        r.emplace_back();
        for (auto s : f.members(k))
          r.back().push_back(f.table().label(s));
      }
      return r;
    }, "S-class labels of each F-class")
    .def("representatives", [](fb::FusionData const &f) {
      std::vector<std::string> r;
      for (std::size_t k = 0; k < f.size(); ++k)
        r.push_back(f.table().label(f.representative(k)));
      return r;
    }, "Fully normalized representative of each F-class")
    .def("is_stable", [](fb::FusionData const &f, Coeffs const &c) {
      return fb::is_f_stable(fb::BurnsideElement(f.ring(), c), f);
    }, py::arg("coeffs"))
    .def("alpha_basis", [](fb::FusionData const &f) {
      std::vector<Coeffs> r;
      for (auto const &a : fb::alpha_basis(f).alphas)
        r.push_back(a.coeffs());
      return r;
    }, "Irreducible stable sets, one coefficient vector over S-classes per F-class")
    .def("decompose", [](fb::FusionData const &f, Coeffs const &c) {
      return fb::decompose(fb::BurnsideElement(f.ring(), c), f);
    }, py::arg("coeffs"))
    .def("reconstruct", [](fb::FusionData const &f, Coeffs const &lambda) {
      return fb::reconstruct(lambda, fb::alpha_basis(f)).coeffs();
    }, py::arg("lam"))
    .def("phi", [](fb::FusionData const &f, Coeffs const &c) {
      return fb::phi_fusion(fb::BurnsideElement(f.ring(), c), f).marks;
    }, py::arg("coeffs"))
    .def("psi", [](fb::FusionData const &f, Coeffs const &marks) {
      return fb::psi_fusion(fb::FMarkVector{f, marks}).residues;
    }, py::arg("marks"))
    .def("restrict", [](fb::FusionData const &f, std::vector<std::string> const &generators) {
      auto const &g = f.ambient();
      std::vector<fb::Index> idx;
      for (auto const &t : generators)
        idx.push_back(g.index_of(fb::Permutation::parse_cycles(t, g.degree())));
      auto h = fb::Subgroup::generated(g, idx);
      return fb::restrict_ambient(h, f.sylow(), f.ring()).coeffs();
    }, py::arg("generators"), "G/H restricted to S, H generated by cycle strings")
    .def("restrict_sylow", [](fb::FusionData const &f, int q) {
      auto h = fb::sylow_subgroup(f.ambient(), q);
      return fb::restrict_ambient(h, f.sylow(), f.ring()).coeffs();
    }, py::arg("q"), "G/Q restricted to S for a Sylow q-subgroup Q")
    .def("obstruction_order", [](fb::FusionData const &f) { return fb::obstruction_order(f); })
    .def("verify", [](fb::FusionData const &f, std::uint64_t seed) {
      return report_dict(fb::verify_ses_fusion(f, options(seed)));
    }, py::arg("seed") = 20240101)
    .def("__len__", &fb::FusionData::size);

  m.def("run_cli", [](std::vector<std::string> const &args) {
    std::ostringstream out;
    std::ostringstream err;
    int status = fb::run_cli(args, out, err);
    return py::make_tuple(status, out.str(), err.str());
  }, py::arg("args"), "Runs the command-line tool and returns (status, stdout, stderr)");
}
