#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rdbound/engine.hpp"
#include "rdbound/error.hpp"
#include "rdbound/molien.hpp"
#include "rdbound/psu3_data.hpp"
#include "rdbound/report.hpp"
#include "rdbound/sl2_chars.hpp"

namespace py = pybind11;
using namespace rdbound;

namespace {

py::dict certificate_dict(const BoundCertificate& c) {
  py::dict d;
  d["family"] = std::string(family_name(c.family));
  d["q"] = c.q;
  d["dim_V"] = c.dim;
  d["bound"] = c.bound;
  d["degrees"] = c.degrees;
  d["product"] = c.product;
  d["rd_upper_product"] = c.rd_product;
  d["mu"] = c.mu;
  d["bound_mu"] = c.bound_mu;
  d["invariant_counts"] = c.counts;
  d["blocker"] = blocker_string(c.blockers);
  d["row_class"] = row_class_name(c.row_class);
  d["notes"] = c.notes;
  return d;
}

std::vector<std::string> as_strings(const std::vector<Integer>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

py::list report_list(const VerifyReport& r) {
  py::list out;
  for (const auto& c : r.results) {
    py::dict d;
    d["suite"] = c.suite;
    d["q"] = c.q;
    d["check"] = c.check;
    d["pass"] = c.pass;
    d["detail"] = c.detail;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_rdbound, m) {
  m.doc() = "Exact resolvent degree bounds for PSU(2,q) and PSU(3,q)";

  py::register_exception<Error>(m, "RdboundError", PyExc_ValueError);

  py::enum_<Family>(m, "Family").value("PSU2", Family::PSU2).value("PSU3", Family::PSU3);

  m.def("parse_family", [](const std::string& s) { return parse_family(s); });
  m.def("rd_upper", [](int64_t n, bool compat) { return RdLadder::active().rd_upper(n, compat); }, py::arg("n"),
        py::arg("paper_compat") = false);
  m.def("mu", &mu, py::arg("family"), py::arg("q"), py::arg("paper_compat") = false);
  m.def("closed_form_m4", &closed_form_m4, py::arg("q"));
  m.def("free_algebra_dim", &free_algebra_dim, py::arg("generator_degrees"), py::arg("d"));

  m.def(
      "bound",
      [](Family f, uint32_t q, bool compat, int K) {
        return certificate_dict(certify(f, q, TableOptions{K, compat, nullptr}));
      },
      py::arg("family"), py::arg("q"), py::arg("paper_compat") = false, py::arg("max_degree") = 0);

  m.def(
      "select_degrees",
      [](const InvariantCounts& counts, int64_t dim, int64_t mu_value, int K) {
        return certificate_dict(select_degrees(counts, dim, mu_value, RdLadder::active(), K));
      },
      py::arg("counts"), py::arg("dim"), py::arg("mu"), py::arg("max_degree"));

  m.def(
      "table",
      [](Family f, std::vector<uint32_t> qs, bool compat, int jobs) {
        if (qs.empty()) qs = table_qs(f);
        py::list out;
        std::vector<TableRow> rows;
        {
          py::gil_scoped_release release;
          rows = make_table(f, qs, TableOptions{0, compat, nullptr}, jobs);
        }
        for (const auto& r : rows) {
          if (!r.ok) {
            py::dict d;
            d["q"] = r.q;
            d["error"] = r.error;
            out.append(d);
            continue;
          }
          py::dict d = certificate_dict(r.cert);
          d["flagged"] = r.flagged && !compat;
          out.append(d);
        }
        return out;
      },
      py::arg("family"), py::arg("qs") = std::vector<uint32_t>{}, py::arg("paper_compat") = false,
      py::arg("jobs") = 1);

  m.def(
      "asymptotic_bound",
      [](uint32_t q) {
        const auto a = asymptotic_bound(q);
        py::dict d;
        d["q"] = a.q;
        d["r"] = a.r;
        d["bound"] = a.bound;
        d["formula"] = a.formula;
        d["quartics"] = a.quartics;
        return d;
      },
      py::arg("q"));

  m.def(
      "molien",
      [](Family f, uint32_t q, int K) {
        const auto input = f == Family::PSU2 ? psl2_molien_input(q, K) : psu3_molien_input(q, K);
        return as_strings(molien_prefix(input, K));
      },
      py::arg("family"), py::arg("q"), py::arg("max_degree"));

  m.def(
      "power_table",
      [](uint32_t q, int k) {
        const auto M = symbolic_power_table(q, k);
        std::map<std::pair<std::string, std::string>, int64_t> out;
        for (auto src : kAllTypes)
          for (auto dst : kAllTypes)
            if (M[idx(dst)][idx(src)]) out[{std::string(type_name(src)), std::string(type_name(dst))}] = M[idx(dst)][idx(src)];
        return out;
      },
      py::arg("q"), py::arg("k"));

  m.def(
      "class_spectrum",
      [](uint32_t q) {
        const auto s = class_spectrum(q);
        py::dict d;
        for (auto t : kAllTypes) {
          py::dict e;
          e["count"] = s.at(t).count;
          e["centralizer_order"] = s.at(t).centralizer_order.get_str();
          e["chi_V"] = s.at(t).chi_v;
          d[py::str(std::string(type_name(t)))] = e;
        }
        return d;
      },
      py::arg("q"));

  m.def(
      "projective_degree", [](uint32_t q) { return smallest_projective_character(q).degree; }, py::arg("q"));

  m.def(
      "verify",
      [](const std::string& target, uint32_t q_max) {
        VerifyReport r;
        {
          py::gil_scoped_release release;
          if (target == "power-tables") r = verify_power_tables(q_max);
          else if (target == "molien") r = verify_molien(q_max);
          else if (target == "chars") r = verify_chars(q_max);
          else if (target == "spectra") r = verify_spectra(q_max);
          else if (target == "oracle") r = verify_oracle(q_max, std::max<uint32_t>(q_max, 13));
          else throw Error(ErrorCode::InvalidArgument, "unknown verify target " + target);
        }
        return report_list(r);
      },
      py::arg("target"), py::arg("q_max"));
}
